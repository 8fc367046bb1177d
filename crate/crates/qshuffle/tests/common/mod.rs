//! Shared generators for the property tests.
#![allow(dead_code)]

use proptest::prelude::*;
use qshuffle::exactalg::var::NVARS;
use qshuffle::{Monomial, Poly, Rf, Var, Q};

/// Sparse polynomial in `vars` with small integer coefficients.
pub fn poly_in(vars: Vec<Var>, max_terms: usize, max_exp: u8) -> impl Strategy<Value = Poly> {
    let n = vars.len();
    prop::collection::vec((-5i64..=5, prop::collection::vec(0..=max_exp, n)), 0..=max_terms).prop_map(
        move |terms| {
            Poly::from_terms(
                terms
                    .into_iter()
                    .map(|(c, es)| {
                        let mut exps = [0u8; NVARS];
                        for (v, e) in vars.iter().zip(es) {
                            exps[v.slot()] = e;
                        }
                        (Monomial::from_exps(exps), Q::from_integer(c.into()))
                    })
                    .collect(),
            )
        },
    )
}

/// Rational function with a nonzero denominator.
pub fn rf_in(vars: Vec<Var>) -> impl Strategy<Value = Rf> {
    (poly_in(vars.clone(), 3, 2), poly_in(vars, 2, 1))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| Rf::new(n, d).expect("nonzero"))
}

pub fn ws(n: u8) -> Vec<Var> {
    let mut v: Vec<Var> = (1..=n).map(Var::W).collect();
    v.push(Var::Hbar);
    v
}

pub fn ys(k: u8) -> Vec<Var> {
    (1..=k).map(Var::Y).collect()
}

/// `p / ∏ (w_1 - w_2 + k hbar)` with up to two root factors.
pub fn root_rf() -> impl Strategy<Value = Rf> {
    (poly_in(ws(2), 3, 2), prop::collection::vec(-2i64..=2, 0..=2)).prop_map(|(p, ks)| {
        let w = |i| Poly::var(Var::W(i));
        let den = ks.iter().fold(Poly::one(), |acc, &k| {
            &acc * &(&(&w(1) - &w(2)) + &Poly::var(Var::Hbar).scale(&Q::from_integer(k.into())))
        });
        Rf::new(p, den).expect("nonzero")
    })
}
