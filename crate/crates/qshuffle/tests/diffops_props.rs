mod common;

use common::{rf_in, root_rf, ws};
use proptest::prelude::*;
use qshuffle::diffops::{shift_coeff, Dop};
use qshuffle::Rf;

fn shift_vec() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-1i32..=1, 2)
}

fn dop() -> impl Strategy<Value = Dop> {
    prop::collection::vec((shift_vec(), root_rf()), 1..3)
        .prop_map(|ts| ts.into_iter().fold(Dop::zero(), |acc, (m, c)| acc.add(&Dop::term(m, c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_is_associative_and_distributive(a in dop(), b in dop(), c in dop()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn conjugation_by_shifts_shifts_coefficients(m in shift_vec(), f in rf_in(ws(2))) {
        let u = Dop::term(m.clone(), Rf::one());
        let conj = u.mul(&Dop::scalar(f.clone())).mul(&u.inverse().unwrap());
        prop_assert_eq!(conj, Dop::scalar(shift_coeff(&f, &m)));
    }

    #[test]
    fn single_terms_have_two_sided_inverses(m in shift_vec(), f in rf_in(ws(2))) {
        prop_assume!(!f.is_zero());
        let t = Dop::term(m, f);
        let inv = t.inverse().unwrap();
        prop_assert_eq!(t.mul(&inv), Dop::one());
        prop_assert_eq!(inv.mul(&t), Dop::one());
        prop_assert_eq!(t.pow(-2).unwrap(), inv.mul(&inv));
    }

    #[test]
    fn printing_round_trips(a in dop()) {
        prop_assert_eq!(Dop::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn relabelling_is_a_ring_map(a in dop(), b in dop()) {
        let s = [2u8, 1];
        prop_assert_eq!(a.mul(&b).permute(&s), a.permute(&s).mul(&b.permute(&s)));
        prop_assert_eq!(a.permute(&s).permute(&s), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn jacobi_identity(a in dop(), b in dop(), c in dop()) {
        let j = a.commutator(&b.commutator(&c))
            .add(&b.commutator(&c.commutator(&a)))
            .add(&c.commutator(&a.commutator(&b)));
        prop_assert!(j.is_zero());
    }
}

#[test]
fn shifts_commute_past_weights() {
    let x = Dop::parse("u1*w1").unwrap();
    assert_eq!(x, Dop::parse("(w1 + hbar)*u1").unwrap());
    assert_eq!(Dop::shift(1, 1).mul(&Dop::shift(2, -1)), Dop::term(vec![1, -1], Rf::one()));
    assert!(Dop::parse("u1 + u2").unwrap().inverse().is_none());
}
