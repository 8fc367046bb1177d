//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::var::{Var, NVARS};
use super::Q;

/// Exponent vector over all variable slots.
///
/// Ordering is graded lexicographic: total degree first, then exponents
/// compared slot by slot, an earlier slot being more significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u8; NVARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        deg: 0,
        exps: [0; NVARS],
    };

    pub fn var(v: Var, e: u8) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[v.slot()] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exps(exps: [u8; NVARS]) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn exps(&self) -> &[u8; NVARS] {
        &self.exps
    }

    pub fn exp(&self, slot: usize) -> u8 {
        self.exps[slot]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial {
            deg: self.deg + o.deg,
            exps,
        }
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial {
            deg: self.deg - o.deg,
            exps,
        })
    }

    /// Componentwise minimum.
    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(o.exps.iter()) {
            *a = (*a).min(*b);
        }
        Monomial::from_exps(exps)
    }

    /// Bit mask of the slots with a positive exponent.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    fn with_exp(&self, slot: usize, e: u8) -> Monomial {
        let mut exps = self.exps;
        exps[slot] = e;
        Monomial::from_exps(exps)
    }

    /// Applies a slot relabelling; `f` must be injective on the support.
    pub fn rename(&self, f: &dyn Fn(usize) -> usize) -> Monomial {
        let mut exps = [0u8; NVARS];
        for (s, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[f(s)] += e;
            }
        }
        Monomial {
            deg: self.deg,
            exps,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonoDisplay(self))
    }
}

struct MonoDisplay<'a>(&'a Monomial);

impl fmt::Display for MonoDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (s, &e) in self.0.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", Var::from_slot(s))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial: terms sorted by increasing [`Monomial`], no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Q)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn int(c: i64) -> Poly {
        Poly::constant(Q::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v, 1), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, Q)>) -> Poly {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, Q)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Q {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Q::zero(),
        }
    }

    /// Greatest term in the graded lexicographic order.
    pub fn leading(&self) -> Option<&(Monomial, Q)> {
        self.terms.last()
    }

    pub fn leading_coeff(&self) -> Q {
        self.terms.last().map(|t| t.1.clone()).unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.degree_in_slot(v.slot())
    }

    pub fn degree_in_slot(&self, s: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(s) as u32).max().unwrap_or(0)
    }

    /// Bit mask of the variable slots occurring in the polynomial.
    pub fn support(&self) -> u64 {
        self.terms.iter().fold(0, |m, t| m | t.0.support())
    }

    pub fn vars(&self) -> Vec<Var> {
        let s = self.support();
        (0..NVARS)
            .filter(|i| s & (1 << i) != 0)
            .map(Var::from_slot)
            .collect()
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a * c))
                .collect(),
        }
    }

    /// Multiplication by `c * m`; preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.mul(m), b * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.terms.last() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scales by a positive rational so that the coefficients are coprime integers.
    pub fn primitive_integer(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        self.scale(&Q::new(den_lcm, num_gcd))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m0, _)) => it.fold(*m0, |g, (m, _)| g.gcd(m)),
        }
    }

    /// Exact division by a monomial that divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(a, c)| (a.div(m).expect("monomial does not divide"), c.clone()))
                .collect(),
        )
    }

    /// Exact quotient `self / b`, or `None` if `b` does not divide `self`.
    ///
    /// # Panics
    /// If `b` is zero.
    pub fn div_exact(&self, b: &Poly) -> Option<Poly> {
        let (lm_b, lc_b) = b.leading().expect("division by zero polynomial").clone();
        if b.terms.len() == 1 {
            let inv = lc_b.recip();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(&lm_b)?, c * &inv));
            }
            return Some(Poly { terms: out });
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.total_degree() < b.total_degree() {
            return None;
        }
        let inv = lc_b.recip();
        let mut r = self.clone();
        let mut q: Vec<(Monomial, Q)> = Vec::new();
        while let Some((lm_r, lc_r)) = r.leading().cloned() {
            let t = lm_r.div(&lm_b)?;
            let c = lc_r * &inv;
            r = &r - &b.mul_term(&t, &c);
            q.push((t, c));
        }
        Some(Poly::from_terms(q))
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn subs(&self, map: &[(Var, Poly)]) -> Poly {
        if map.is_empty() || self.is_zero() {
            return self.clone();
        }
        let slots: Vec<(usize, &Poly)> = map.iter().map(|(v, p)| (v.slot(), p)).collect();
        let mut powers: Vec<Vec<Poly>> = slots.iter().map(|_| vec![Poly::one()]).collect();
        let mut out: Vec<(Monomial, Q)> = Vec::new();
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut exps = *m.exps();
            let mut factor = Poly::one();
            for (k, (s, p)) in slots.iter().enumerate() {
                let e = exps[*s] as usize;
                if e == 0 {
                    continue;
                }
                exps[*s] = 0;
                while powers[k].len() <= e {
                    let next = &powers[k][powers[k].len() - 1] * *p;
                    powers[k].push(next);
                }
                factor = &factor * &powers[k][e];
            }
            let rest = Monomial::from_exps(exps);
            if factor.is_one() {
                out.push((rest, c.clone()));
            } else {
                acc += &factor.mul_term(&rest, c);
            }
        }
        &Poly::from_terms(out) + &acc
    }

    /// Relabels variable slots; `f` must be injective on the support.
    pub fn rename(&self, f: &dyn Fn(usize) -> usize) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.rename(f), c.clone()))
                .collect(),
        )
    }

    /// Swaps two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        let (sa, sb) = (a.slot(), b.slot());
        self.rename(&|s| {
            if s == sa {
                sb
            } else if s == sb {
                sa
            } else {
                s
            }
        })
    }

    /// Substitutes rational values for the variables listed in `vals`.
    pub fn eval_partial(&self, vals: &[(Var, Q)]) -> Poly {
        let map: Vec<(Var, Poly)> = vals
            .iter()
            .map(|(v, q)| (*v, Poly::constant(q.clone())))
            .collect();
        self.subs(&map)
    }

    /// Coefficients with respect to the variable in `slot`, indexed by degree.
    pub fn to_univariate(&self, slot: usize) -> Vec<Poly> {
        let d = self.degree_in_slot(slot) as usize;
        let mut buckets: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(slot) as usize;
            buckets[e].push((m.with_exp(slot, 0), c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    /// Inverse of [`Poly::to_univariate`].
    pub fn from_univariate(coeffs: &[Poly], slot: usize) -> Poly {
        let mut terms = Vec::new();
        for (e, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut exps = *m.exps();
                exps[slot] = exps[slot]
                    .checked_add(u8::try_from(e).expect("exponent overflow"))
                    .expect("exponent overflow");
                terms.push((Monomial::from_exps(exps), c.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Evaluates every variable except `slot` at `point[s]`; returns the
    /// univariate coefficients in the remaining variable.
    pub fn eval_to_univariate(&self, slot: usize, point: &[Q]) -> Vec<Q> {
        let d = self.degree_in_slot(slot) as usize;
        let mut out = vec![Q::zero(); d + 1];
        let mut pow_cache: Vec<Vec<Q>> = vec![vec![Q::one()]; NVARS];
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (s, &e) in m.exps().iter().enumerate() {
                if s == slot || e == 0 {
                    continue;
                }
                let cache = &mut pow_cache[s];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &point[s];
                    cache.push(next);
                }
                val *= &cache[e as usize];
            }
            out[m.exp(slot) as usize] += val;
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let s = v.slot();
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(s) > 0)
                .map(|(m, c)| {
                    let e = m.exp(s);
                    (m.with_exp(s, e - 1), c * Q::from_integer(BigInt::from(e)))
                })
                .collect(),
        )
    }

    /// Sum of coefficients times evaluated monomials, all variables at `point`.
    pub fn eval(&self, point: &dyn Fn(Var) -> Q) -> Q {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (s, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    val *= num_traits::pow(point(Var::from_slot(s)), e as usize);
                }
            }
            total += val;
        }
        total
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    fn mul_impl(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(raw)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $f(self, o: &Poly) -> Poly {
                let g: fn(&Poly, &Poly) -> Poly = $body;
                g(self, o)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly {
                (&self).$f(&o)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, o: &Poly) -> Poly {
                (&self).$f(o)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly {
                self.$f(&o)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| a.merge(b, false));
poly_binop!(Sub, sub, |a, b| a.merge(b, true));
poly_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, o: &Poly) {
        *self = self.merge(o, false);
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, o: &Poly) {
        *self = self.merge(o, true);
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::int(c)
    }
}

pub(crate) fn fmt_coeff_term(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    c: &Q,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if m.is_one() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{}", MonoDisplay(m))
    } else {
        write!(f, "{a}*{}", MonoDisplay(m))
    }
}

/// Canonical printing: terms in decreasing graded lexicographic order.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            fmt_coeff_term(f, m, c, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
