//! Exact arithmetic kernel: rationals, sparse polynomials, reduced rational
//! functions, substitution and shifts, and the expression grammar.

pub mod gcd;
pub mod parse;
pub mod poly;
pub mod rf;
pub mod var;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use poly::{Monomial, Poly};
pub use rf::Rf;
pub use var::Var;

/// Arbitrary-precision rational number.
pub type Q = num_rational::BigRational;

/// Errors shared by the whole crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected a polynomial, got {0}")]
    NotPolynomial(String),
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
}

/// Binary field operation selector for [`rf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic on reduced rational functions.
pub fn rf_arith(a: &Rf, b: &Rf, op: ArithOp) -> Result<Rf, AlgError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Simultaneous shift `v -> v + s(v)`.
pub fn rf_shift(f: &Rf, shifts: &[(Var, Poly)]) -> Rf {
    f.shift(shifts)
}

/// Rational number from a pair of machine integers.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Rational number from a machine integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// True if the denominator of `f` is, up to a scalar, a product of factors
/// `w_i - w_j + k*hbar` with `i != j` and integer `k`.
///
/// Every variable of `f` must be among `w_1..w_N` and `hbar`; otherwise the
/// answer is `false`.
pub fn denominator_admissible(f: &Rf, n: usize) -> bool {
    let allowed: u64 = (1..=n as u8)
        .map(|i| 1u64 << Var::W(i).slot())
        .fold(1u64 << Var::Hbar.slot(), |a, b| a | b);
    if f.support() & !allowed != 0 {
        return false;
    }
    root_difference_product(f.den(), n)
}

/// True if `d` is a scalar times a product of factors `w_i - w_j + k*hbar`.
pub(crate) fn root_difference_product(d: &Poly, n: usize) -> bool {
    let mut d = d.clone();
    let h = Poly::var(Var::Hbar);
    'outer: loop {
        if d.is_constant() {
            return true;
        }
        for i in 1..=n as u8 {
            for j in (i + 1)..=n as u8 {
                let wi = Poly::var(Var::W(i));
                let wj = Poly::var(Var::W(j));
                if d.degree_in(Var::W(i)) == 0 || d.degree_in(Var::W(j)) == 0 {
                    continue;
                }
                for k in integer_shift_candidates(&d, i, j) {
                    let factor = &(&wi - &wj) + &h.scale(&qi(k));
                    if let Some(qt) = d.div_exact(&factor) {
                        d = qt;
                        continue 'outer;
                    }
                }
            }
        }
        return false;
    }
}

/// Integers `k` for which `w_i - w_j + k*hbar` might divide `d`: the integer
/// roots of one coefficient of `d(w_i = w_j - t*hbar)` viewed in `t`.
fn integer_shift_candidates(d: &Poly, i: u8, j: u8) -> Vec<i64> {
    let t = Var::Kappa;
    let sub = &Poly::var(Var::W(j)) - &(&Poly::var(t) * &Poly::var(Var::Hbar));
    let p = d.subs(&[(Var::W(i), sub)]);
    let coeffs = p.to_univariate(t.slot());
    let top = match coeffs.iter().rposition(|c| !c.is_zero()) {
        Some(k) => k,
        None => return Vec::new(),
    };
    let m = coeffs[top].leading().expect("nonzero").0;
    let uni: Vec<Q> = coeffs.iter().map(|c| c.coeff(&m)).collect();
    let lead = uni[top].clone();
    let bound = uni[..top]
        .iter()
        .map(|c| (c / &lead).abs())
        .fold(Q::zero(), |a, b| if b > a { b } else { a });
    let b = (bound.ceil().to_integer() + BigInt::from(1)).to_i64().unwrap_or(i64::MAX).min(1 << 20);
    (-b..=b)
        .filter(|&k| {
            let kq = qi(k);
            let val = uni
                .iter()
                .rev()
                .fold(Q::zero(), |acc, c| acc * &kq + c);
            val.is_zero()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_examples() {
        let f = Rf::parse("1/((w1-w2)*(w1-w2+hbar))").unwrap();
        assert!(denominator_admissible(&f, 2));
        assert!(!denominator_admissible(&Rf::parse("1/w1").unwrap(), 2));
        assert!(denominator_admissible(&Rf::parse("w1^2 + hbar").unwrap(), 2));
        let g = Rf::parse("hbar/(3*(w1-w3-2*hbar)^2*(w2-w1+5*hbar))").unwrap();
        assert!(denominator_admissible(&g, 3));
        assert!(!denominator_admissible(&Rf::parse("1/(w1+w2)").unwrap(), 2));
        assert!(!denominator_admissible(&Rf::parse("1/(w1-w2+1/2*hbar)").unwrap(), 2));
        assert!(!denominator_admissible(&Rf::parse("1/(u-w1)").unwrap(), 2));
    }

    #[test]
    fn arith_selector() {
        let a = Rf::parse("w1").unwrap();
        let b = Rf::parse("w2").unwrap();
        assert_eq!(rf_arith(&a, &b, ArithOp::Div).unwrap(), Rf::parse("w1/w2").unwrap());
        assert_eq!(rf_arith(&a, &Rf::zero(), ArithOp::Div), Err(AlgError::DivisionByZero));
    }
}
