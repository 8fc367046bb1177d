//! Noncommutative rings with `Q[hbar]` scalars and polynomials in a central `u`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::exactalg::{Poly, Var, Q};

/// Associative ring with a central copy of `Q[hbar]`.
pub trait NcRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn from_scalar(c: Poly) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &Poly) -> Self;
    fn is_zero(&self) -> bool;

    fn one() -> Self {
        Self::from_scalar(Poly::one())
    }
    fn neg(&self) -> Self {
        self.scale(&Poly::int(-1))
    }
}

impl NcRing for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn from_scalar(c: Poly) -> Self {
        c
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &Poly) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

/// Polynomial in a central variable `u`, coefficients stored by ascending power.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<A> {
    coeffs: Vec<A>,
}

impl<A: NcRing> UPoly<A> {
    pub fn from_coeffs(mut coeffs: Vec<A>) -> UPoly<A> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly<A> {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(a: A) -> UPoly<A> {
        UPoly::from_coeffs(vec![a])
    }

    /// `a + b u`.
    pub fn linear(a: A, b: A) -> UPoly<A> {
        UPoly::from_coeffs(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `u^i`.
    pub fn coeff(&self, i: usize) -> A {
        self.coeffs.get(i).cloned().unwrap_or_else(A::zero)
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    /// Coefficients from the leading power down to `u^0`.
    pub fn coeffs_descending(&self) -> Vec<A> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn add(&self, o: &UPoly<A>) -> UPoly<A> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &UPoly<A>) -> UPoly<A> {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn mul(&self, o: &UPoly<A>) -> UPoly<A> {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![A::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Poly) -> UPoly<A> {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn left_mul(&self, a: &A) -> UPoly<A> {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| a.mul(c)).collect())
    }

    pub fn right_mul(&self, a: &A) -> UPoly<A> {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c.mul(a)).collect())
    }

    pub fn map<B: NcRing>(&self, f: impl Fn(&A) -> B) -> UPoly<B> {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// `p(s u + t)` for `s = ±1` and a scalar `t`.
    pub fn subs_affine(&self, s: i64, t: &Poly) -> UPoly<A> {
        let mut out = vec![A::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (k, slot) in out.iter_mut().enumerate().take(i + 1) {
                let bin = Q::from_integer(binomial(BigInt::from(i), BigInt::from(k)));
                let sign = if s < 0 && k % 2 == 1 { -bin } else { bin };
                let scal = t.pow((i - k) as u32).scale(&sign);
                *slot = slot.add(&c.scale(&scal));
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl UPoly<Poly> {
    /// The commutative polynomial in `u`.
    pub fn to_poly(&self) -> Poly {
        let u = Poly::var(Var::U);
        let mut out = Poly::zero();
        for c in self.coeffs.iter().rev() {
            out = &(&out * &u) + c;
        }
        out
    }
}

impl<A: NcRing + fmt::Display> fmt::Display for UPoly<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*u"),
                _ => format!("({c})*u^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Shared printer for `coefficient * word` sums.
pub(crate) fn fmt_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Poly)>,
) -> fmt::Result {
    let mut first = true;
    for (word, c) in terms {
        let (neg, body) = match c.as_constant() {
            Some(q) => {
                let neg = q < Q::from_integer(0.into());
                let a = if neg { -q } else { q };
                let s = if a == Q::from_integer(1.into()) && !word.is_empty() {
                    String::new()
                } else if word.is_empty() {
                    a.to_string()
                } else {
                    format!("{a}*")
                };
                (neg, s)
            }
            None => {
                let lead_neg = c.leading_coeff() < Q::from_integer(0.into()) && c.len() == 1;
                let c2 = if lead_neg { -c.clone() } else { c.clone() };
                let s = if c2.len() == 1 { c2.to_string() } else { format!("({c2})") };
                (lead_neg, if word.is_empty() { s } else { format!("{s}*") })
            }
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        write!(f, "{body}{word}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
