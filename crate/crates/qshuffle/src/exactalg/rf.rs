//! Reduced rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::Poly;
use super::var::Var;
use super::{AlgError, Q};

/// A quotient `num / den` with `gcd(num, den) = 1` and `den` monic with
/// respect to the graded lexicographic order. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rf {
    num: Poly,
    den: Poly,
}

impl Rf {
    pub fn zero() -> Rf {
        Rf {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Rf {
        Rf::from_poly(Poly::one())
    }

    pub fn int(c: i64) -> Rf {
        Rf::from_poly(Poly::int(c))
    }

    pub fn constant(c: Q) -> Rf {
        Rf::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> Rf {
        Rf::from_poly(Poly::var(v))
    }

    pub fn from_poly(p: Poly) -> Rf {
        Rf {
            num: p,
            den: Poly::one(),
        }
    }

    /// Builds and reduces `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Rf, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Rf::zero());
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Ok(Rf::normalized(n, d))
    }

    /// Assumes `gcd(num, den) = 1`; only rescales.
    fn normalized(num: Poly, den: Poly) -> Rf {
        if num.is_zero() {
            return Rf::zero();
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            Rf { num, den }
        } else {
            let inv = lc.recip();
            Rf {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn into_poly(self) -> Result<Poly, AlgError> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(AlgError::NotPolynomial(self.to_string()))
        }
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn support(&self) -> u64 {
        self.num.support() | self.den.support()
    }

    pub fn scale(&self, c: &Q) -> Rf {
        Rf {
            num: self.num.scale(c),
            den: if c.is_zero() { Poly::one() } else { self.den.clone() },
        }
    }

    pub fn recip(&self) -> Result<Rf, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Rf::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Rf) -> Result<Rf, AlgError> {
        Ok(self * &o.recip()?)
    }

    pub fn pow(&self, e: i32) -> Result<Rf, AlgError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let n = e.unsigned_abs();
        Ok(Rf {
            num: base.num.pow(n),
            den: base.den.pow(n),
        })
    }

    /// Simultaneous substitution `v -> p` followed by reduction.
    pub fn subs(&self, map: &[(Var, Poly)]) -> Rf {
        let n = self.num.subs(map);
        if self.den.is_one() {
            return Rf::from_poly(n);
        }
        let d = self.den.subs(map);
        Rf::new(n, d).expect("substitution made a denominator vanish")
    }

    /// Substitution of rational functions for variables.
    pub fn subs_rf(&self, map: &[(Var, Rf)]) -> Result<Rf, AlgError> {
        let eval = |p: &Poly| -> Result<Rf, AlgError> {
            let mut acc = Rf::zero();
            for (m, c) in p.terms() {
                let mut t = Rf::constant(c.clone());
                let mut rest = *m.exps();
                for (v, r) in map {
                    let e = rest[v.slot()];
                    if e > 0 {
                        rest[v.slot()] = 0;
                        t = &t * &r.pow(e as i32)?;
                    }
                }
                let rest = super::poly::Monomial::from_exps(rest);
                t = &t * &Rf::from_poly(Poly::term(rest, Q::one()));
                acc = &acc + &t;
            }
            Ok(acc)
        };
        eval(&self.num)?.checked_div(&eval(&self.den)?)
    }

    /// Relabels variable slots (a permutation of variables).
    pub fn rename(&self, f: &dyn Fn(usize) -> usize) -> Rf {
        let num = self.num.rename(f);
        if self.den.is_one() {
            return Rf::from_poly(num);
        }
        Rf::normalized(num, self.den.rename(f))
    }

    /// Simultaneous shift `v -> v + s` for each listed pair.
    pub fn shift(&self, shifts: &[(Var, Poly)]) -> Rf {
        let map: Vec<(Var, Poly)> = shifts
            .iter()
            .map(|(v, s)| (*v, &Poly::var(*v) + s))
            .collect();
        self.subs(&map)
    }

    fn add_impl(&self, o: &Rf, negate: bool) -> Rf {
        let on = if negate { -&o.num } else { o.num.clone() };
        if self.is_zero() {
            return Rf {
                num: on,
                den: o.den.clone(),
            };
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = &self.num + &on;
            if self.den.is_one() {
                return Rf::from_poly(n);
            }
            return Rf::new(n, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_one() {
            return Rf::normalized(&(&self.num * &o.den) + &on, o.den.clone());
        }
        if o.den.is_one() {
            return Rf::normalized(&self.num + &(&on * &self.den), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = &(&self.num * &o.den) + &(&on * &self.den);
            return Rf::normalized(n, &self.den * &o.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &d1) + &(&on * &b1);
        if n.is_zero() {
            return Rf::zero();
        }
        let h = gcd(&n, &g);
        let (n, g) = if h.is_one() {
            (n, g)
        } else {
            (
                n.div_exact(&h).expect("gcd divides"),
                g.div_exact(&h).expect("gcd divides"),
            )
        };
        Rf::normalized(n, &(&b1 * &d1) * &g)
    }

    fn mul_impl(&self, o: &Rf) -> Rf {
        if self.is_zero() || o.is_zero() {
            return Rf::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Rf::from_poly(&self.num * &o.num);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let cut = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let n = &cut(&self.num, &g1) * &cut(&o.num, &g2);
        let d = &cut(&self.den, &g2) * &cut(&o.den, &g1);
        Rf::normalized(n, d)
    }

    /// Parses the expression grammar; see [`super::parse`].
    pub fn parse(s: &str) -> Result<Rf, AlgError> {
        super::parse::parse(s)
    }
}

macro_rules! rf_binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&Rf> for &Rf {
            type Output = Rf;
            fn $f(self, o: &Rf) -> Rf {
                let g: fn(&Rf, &Rf) -> Rf = $body;
                g(self, o)
            }
        }
        impl $tr<Rf> for Rf {
            type Output = Rf;
            fn $f(self, o: Rf) -> Rf {
                (&self).$f(&o)
            }
        }
        impl $tr<&Rf> for Rf {
            type Output = Rf;
            fn $f(self, o: &Rf) -> Rf {
                (&self).$f(o)
            }
        }
        impl $tr<Rf> for &Rf {
            type Output = Rf;
            fn $f(self, o: Rf) -> Rf {
                self.$f(&o)
            }
        }
    };
}

rf_binop!(Add, add, |a, b| a.add_impl(b, false));
rf_binop!(Sub, sub, |a, b| a.add_impl(b, true));
rf_binop!(Mul, mul, |a, b| a.mul_impl(b));
rf_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero rational function"));

impl Neg for &Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        Rf {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        -&self
    }
}

impl From<Poly> for Rf {
    fn from(p: Poly) -> Rf {
        Rf::from_poly(p)
    }
}

impl From<Var> for Rf {
    fn from(v: Var) -> Rf {
        Rf::var(v)
    }
}

impl From<i64> for Rf {
    fn from(c: i64) -> Rf {
        Rf::int(c)
    }
}

fn needs_parens_den(p: &Poly) -> bool {
    match p.terms() {
        [(m, c)] => !c.is_one() || m.support().count_ones() != 1,
        _ => true,
    }
}

/// Canonical printing; the output parses back to the same value.
impl fmt::Display for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_den(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rf({self})")
    }
}

impl Zero for Rf {
    fn zero() -> Rf {
        Rf::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Rf {
    fn one() -> Rf {
        Rf::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Rf {
        Rf::parse(s).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert!((p("1/(Y1-Y2)") + p("1/(Y2-Y1)")).is_zero());
        assert_eq!(
            p("(Y1-Y2+kappa)/(Y1-Y2)") * p("Y1-Y2"),
            p("Y1 - Y2 + kappa")
        );
        assert_eq!(p("(w1^2-w2^2)/(w1-w2)"), p("w1+w2"));
    }

    #[test]
    fn shift_examples() {
        let h = Poly::var(Var::Hbar);
        assert_eq!(p("w1-w2").shift(&[(Var::W(1), h.clone())]), p("w1-w2+hbar"));
        assert_eq!(
            p("1/(w1-w2)").shift(&[(Var::W(1), h.clone()), (Var::W(2), h.clone())]),
            p("1/(w1-w2)")
        );
        assert_eq!(p("w1*w2").shift(&[(Var::W(2), -&h)]), p("w1*w2 - hbar*w1"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            p("w1").checked_div(&Rf::zero()),
            Err(AlgError::DivisionByZero)
        ));
    }

    #[test]
    fn printing_roundtrips() {
        for s in [
            "1/(w1-w2)",
            "-3/2*hbar/w1",
            "(w1+1)/(2*w1*w2)",
            "(u - w1)/(u - w1 - hbar)^2",
            "kappa^2/xi3",
        ] {
            let x = p(s);
            let printed = x.to_string();
            assert_eq!(p(&printed), x, "{s} -> {printed}");
        }
    }
}
