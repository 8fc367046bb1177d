//! Difference operators `Σ c_m(w) u^m` with `u_i^{±1} f(w) = f(w ± hbar e_i) u_i^{±1}`.
//!
//! Coefficients are reduced rational functions in `w_1..w_N`, `hbar` and the
//! central spectral parameters `u`, `v`. Shift vectors are stored with
//! trailing zeros trimmed, so operators of different rank multiply freely.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::gcd::gcd_many;
use crate::exactalg::parse::parse_into;
use crate::exactalg::{root_difference_product, AlgError, Poly, Rf, Var, Q};

/// Largest `|m_i|` a product may produce.
pub const MAX_SHIFT: i32 = 16;

/// Largest shift index accepted (`w_1..w_8`).
pub const MAX_RANK: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dop {
    terms: BTreeMap<Vec<i32>, Rf>,
}

fn trim(mut m: Vec<i32>) -> Vec<i32> {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn add_shifts(a: &[i32], b: &[i32]) -> Vec<i32> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect())
}

/// `f(w + hbar m)`.
pub fn shift_coeff(f: &Rf, m: &[i32]) -> Rf {
    let h = Poly::var(Var::Hbar);
    let shifts: Vec<(Var, Poly)> = m
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != 0)
        .map(|(i, e)| (Var::W(i as u8 + 1), h.scale(&Q::from_integer((*e).into()))))
        .collect();
    if shifts.is_empty() {
        f.clone()
    } else {
        f.shift(&shifts)
    }
}

impl Dop {
    pub fn zero() -> Dop {
        Dop::default()
    }

    pub fn one() -> Dop {
        Dop::scalar(Rf::one())
    }

    /// Shift-free operator `c`.
    pub fn scalar(c: Rf) -> Dop {
        Dop::term(Vec::new(), c)
    }

    /// `c u^m`.
    pub fn term(m: Vec<i32>, c: Rf) -> Dop {
        let mut d = Dop::zero();
        d.add_term(trim(m), c);
        d
    }

    /// `u_i^e` for `i` in `1..=8`.
    pub fn shift(i: usize, e: i32) -> Dop {
        assert!((1..=MAX_RANK).contains(&i), "shift index {i} out of range");
        let mut m = vec![0; i];
        m[i - 1] = e;
        Dop::term(m, Rf::one())
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, Rf> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `u^m`.
    pub fn coeff(&self, m: &[i32]) -> Rf {
        self.terms.get(&trim(m.to_vec())).cloned().unwrap_or_else(Rf::zero)
    }

    /// Largest shift index with a nonzero exponent.
    pub fn rank_hint(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Vec<i32>, c: Rf) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Dop) -> Dop {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Dop) -> Dop {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> Dop {
        Dop::zero().sub(self)
    }

    /// Left multiplication by a shift-free coefficient.
    pub fn scale(&self, c: &Rf) -> Dop {
        let mut r = Dop::zero();
        for (m, d) in &self.terms {
            r.add_term(m.clone(), c * d);
        }
        r
    }

    /// Product with the guard `|m|_∞ ≤ MAX_SHIFT` on the result.
    pub fn checked_mul(&self, o: &Dop) -> Result<Dop, AlgError> {
        let mut r = Dop::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = add_shifts(ma, mb);
                if let Some(e) = m.iter().find(|e| e.abs() > MAX_SHIFT) {
                    return Err(AlgError::SizeGuard(format!("shift exponent {e} exceeds {MAX_SHIFT}")));
                }
                r.add_term(m, ca * &shift_coeff(cb, ma));
            }
        }
        Ok(r)
    }

    /// # Panics
    /// If a resulting shift exponent exceeds [`MAX_SHIFT`] in absolute value.
    pub fn mul(&self, o: &Dop) -> Dop {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn commutator(&self, o: &Dop) -> Dop {
        self.mul(o).sub(&o.mul(self))
    }

    /// Two-sided inverse of a single term `c u^m`, namely `c(w - hbar m)^{-1} u^{-m}`.
    pub fn inverse(&self) -> Option<Dop> {
        let mut it = self.terms.iter();
        let (m, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        let neg: Vec<i32> = m.iter().map(|e| -e).collect();
        let inv = shift_coeff(c, &neg).recip().ok()?;
        Some(Dop::term(neg, inv))
    }

    pub fn pow(&self, e: i32) -> Option<Dop> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut r = Dop::one();
        for _ in 0..e.unsigned_abs() {
            r = r.checked_mul(&base).ok()?;
        }
        Some(r)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: &dyn Fn(&Rf) -> Rf) -> Dop {
        let mut r = Dop::zero();
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    /// Simultaneous relabelling `w_i -> w_{s(i)}`, `u_i -> u_{s(i)}` for a
    /// one-line permutation `s` of `1..=n`.
    pub fn permute(&self, s: &[u8]) -> Dop {
        let n = s.len();
        let slot_map = |slot: usize| match Var::from_slot(slot) {
            Var::W(i) if (i as usize) <= n => Var::W(s[i as usize - 1]).slot(),
            _ => slot,
        };
        let mut r = Dop::zero();
        for (m, c) in &self.terms {
            let mut nm = vec![0; m.len().max(n)];
            for (i, e) in m.iter().enumerate() {
                let t = if i < n { s[i] as usize - 1 } else { i };
                nm[t] = *e;
            }
            r.add_term(trim(nm), c.rename(&slot_map));
        }
        r
    }

    /// Every coefficient has an admissible denominator in `w_1..w_N`, with the
    /// spectral variables `u`, `v` exempt.
    pub fn coeffs_admissible(&self, n: usize) -> bool {
        self.terms.values().all(|c| coeff_admissible(c, n))
    }

    pub fn parse(s: &str) -> Result<Dop, AlgError> {
        parse_into(s)
    }
}

/// The part of `d` free of `u` and `v`: its content as a polynomial in them.
fn spectral_content(d: &Poly) -> Poly {
    let mut parts = vec![d.clone()];
    for v in [Var::U, Var::V] {
        parts = parts.iter().flat_map(|p| p.to_univariate(v.slot())).filter(|p| !p.is_zero()).collect();
    }
    gcd_many(parts.iter())
}

fn coeff_admissible(c: &Rf, n: usize) -> bool {
    let allowed: u64 = (1..=n as u8)
        .map(|i| 1u64 << Var::W(i).slot())
        .chain([Var::Hbar, Var::U, Var::V].map(|v| 1u64 << v.slot()))
        .fold(0, |a, b| a | b);
    c.support() & !allowed == 0 && root_difference_product(&spectral_content(c.den()), n)
}

impl crate::exactalg::parse::ParseTarget for Dop {
    fn constant(c: Q) -> Dop {
        Dop::scalar(Rf::constant(c))
    }
    /// `u1..u8` are shifts; every other name is a coefficient variable.
    fn ident(name: &str) -> Option<Dop> {
        if let Some(i) = name.strip_prefix('u').and_then(|r| r.parse::<usize>().ok()) {
            if (1..=MAX_RANK).contains(&i) && !name[1..].starts_with('0') {
                return Some(Dop::shift(i, 1));
            }
            return None;
        }
        Var::parse(name).map(|v| Dop::scalar(Rf::var(v)))
    }
    fn add(self, o: Dop) -> Dop {
        Dop::add(&self, &o)
    }
    fn sub(self, o: Dop) -> Dop {
        Dop::sub(&self, &o)
    }
    fn mul(self, o: Dop) -> Dop {
        Dop::mul(&self, &o)
    }
    fn neg(self) -> Dop {
        Dop::neg(&self)
    }
    fn div(self, o: Dop) -> Result<Dop, String> {
        let inv = o.inverse().ok_or("divisor must be a single invertible term")?;
        self.checked_mul(&inv).map_err(|e| e.to_string())
    }
    fn pow(self, e: i32) -> Result<Dop, String> {
        Dop::pow(&self, e).ok_or_else(|| "negative power of a non-invertible operator".to_string())
    }
}

fn shift_word(m: &[i32]) -> String {
    m.iter()
        .enumerate()
        .filter(|(_, e)| **e != 0)
        .map(|(i, e)| if *e == 1 { format!("u{}", i + 1) } else { format!("u{}^{e}", i + 1) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Terms sorted by shift vector (zero-padded) lexicographically.
impl fmt::Display for Dop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let n = self.rank_hint();
        let mut order: Vec<(Vec<i32>, &Vec<i32>, &Rf)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut p = m.clone();
                p.resize(n, 0);
                (p, m, c)
            })
            .collect();
        order.sort_by(|a, b| a.0.cmp(&b.0));
        for (t, (_, m, c)) in order.into_iter().enumerate() {
            let word = shift_word(m);
            let body = if word.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                word
            } else if (-c).is_one() {
                format!("-{word}")
            } else {
                format!("({c})*{word}")
            };
            if t == 0 {
                write!(f, "{body}")?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(i: u8) -> Dop {
        Dop::scalar(Rf::var(Var::W(i)))
    }

    fn h() -> Dop {
        Dop::scalar(Rf::var(Var::Hbar))
    }

    #[test]
    fn shift_rule_examples() {
        let u1 = Dop::shift(1, 1);
        assert_eq!(u1.mul(&w(1)), w(1).add(&h()).mul(&u1));
        assert_eq!(u1.mul(&Dop::shift(1, -1)), Dop::one());
        assert!(u1.commutator(&w(2)).is_zero());
        let ui = Dop::shift(1, -1);
        assert_eq!(ui.commutator(&w(1)), h().mul(&ui).neg());
        assert!(u1.commutator(&Dop::shift(2, -1)).is_zero());
    }

    #[test]
    fn printing_round_trip() {
        let d = Dop::parse("1/(w1 - w2)*u1^-1 + 1/(w2 - w1)*u2^-1 - u1*u2 + hbar").unwrap();
        assert_eq!(d.to_string(), "(1/(w1 - w2))*u1^-1 + (-1/(w1 - w2))*u2^-1 + hbar - u1*u2");
        assert_eq!(Dop::parse(&d.to_string()).unwrap(), d);
        assert!(Dop::parse("u0").is_err());
        assert!(Dop::parse("1/(u1 + 1)").is_err());
    }

    #[test]
    fn inverses_and_guard() {
        let a = Dop::term(vec![2, -1], Rf::parse("w1 + w2").unwrap());
        let b = a.inverse().unwrap();
        assert_eq!(a.mul(&b), Dop::one());
        assert_eq!(b.mul(&a), Dop::one());
        let big = Dop::shift(1, 16);
        assert!(big.checked_mul(&Dop::shift(1, 1)).is_err());
    }

    #[test]
    fn admissibility() {
        let good = Dop::parse("1/((u - w1)*(w1 - w2 + hbar))*u1^-1").unwrap();
        assert!(good.coeffs_admissible(2));
        assert!(!Dop::parse("1/w1*u1").unwrap().coeffs_admissible(1));
        assert!(!Dop::parse("1/(w1*(u - w2))*u1").unwrap().coeffs_admissible(2));
        assert!(Dop::parse("w1^2*u1 + u").unwrap().coeffs_admissible(1));
    }

    #[test]
    fn permute_relabels() {
        let d = Dop::parse("w1/(w1 - w2)*u1^-1").unwrap();
        assert_eq!(d.permute(&[2, 1]), Dop::parse("w2/(w2 - w1)*u2^-1").unwrap());
    }
}
