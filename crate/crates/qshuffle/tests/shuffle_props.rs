mod common;

use common::{poly_in, ys};
use proptest::prelude::*;
use qshuffle::heckerep::{symmetrize, y};
use qshuffle::permops::Sign;
use qshuffle::shuffle::{
    constant_ratio, fo_product, fo_product_naive, hecke_product, monomial_basis, verify_current_relation, Component,
    Product, ShuffleElement,
};
use qshuffle::{Poly, Var, Q};

fn comp(k: usize, f: &Poly) -> Component {
    Component::new(k, symmetrize(k, f)).unwrap()
}

fn elem(k: usize, f: &Poly) -> ShuffleElement {
    ShuffleElement::from_component(comp(k, f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn products_are_associative(a in poly_in(ys(1), 2, 2), b in poly_in(ys(1), 2, 2), c in poly_in(ys(1), 2, 2)) {
        let k = Poly::var(Var::Kappa);
        let (a, b, c) = (elem(1, &a), elem(1, &b), elem(1, &c));
        for p in [Product::Fo, Product::Hecke] {
            let lhs = a.mul(&b, &k, p).mul(&c, &k, p);
            let rhs = a.mul(&b.mul(&c, &k, p), &k, p);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn fast_and_naive_fo_agree(a in poly_in(ys(2), 2, 2), b in poly_in(ys(1), 2, 2)) {
        let k = Poly::var(Var::Kappa);
        let (f, g) = (comp(2, &a), comp(1, &b));
        prop_assert_eq!(fo_product(&f, &g, &k), fo_product_naive(&f, &g, &k));
    }

    #[test]
    fn fo_is_binomial_times_hecke(a in poly_in(ys(2), 2, 1), b in poly_in(ys(1), 2, 2)) {
        let k = Poly::var(Var::Kappa);
        let (f, g) = (comp(2, &a), comp(1, &b));
        let fo = fo_product(&f, &g, &k);
        let he = hecke_product(&f, &g, &k);
        prop_assert_eq!(fo.poly().clone(), he.poly().scale(&Q::from_integer(3.into())));
    }

    #[test]
    fn product_is_bilinear(a in poly_in(ys(1), 2, 2), b in poly_in(ys(1), 2, 2), c in poly_in(ys(2), 2, 1)) {
        let k = Poly::var(Var::Kappa);
        let (a, b, c) = (elem(1, &a), elem(1, &b), elem(2, &c));
        let lhs = a.add(&b).mul(&c, &k, Product::Hecke);
        let rhs = a.mul(&c, &k, Product::Hecke).add(&b.mul(&c, &k, Product::Hecke));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn undeformed_product_is_commutative() {
    let zero = Poly::zero();
    for (_, f) in monomial_basis(1, 2) {
        for (_, g) in monomial_basis(2, 2) {
            let (f, g) = (Component::new(1, f.clone()).unwrap(), Component::new(2, g).unwrap());
            assert_eq!(hecke_product(&f, &g, &zero), hecke_product(&g, &f, &zero));
        }
    }
}

#[test]
fn unit_components_multiply_to_constants() {
    let one = |k| Component::new(k, Poly::one()).unwrap();
    let k = Poly::var(Var::Kappa);
    assert_eq!(fo_product(&one(1), &one(1), &k).poly(), &Poly::int(2));
    assert_eq!(hecke_product(&one(2), &one(1), &k).poly(), &Poly::one());
    // Y_1 (Y_1-Y_2+κ)/(Y_1-Y_2) + Y_2 (Y_2-Y_1+κ)/(Y_2-Y_1)
    let p = fo_product(&Component::new(1, y(1)).unwrap(), &one(1), &k);
    assert_eq!(p.poly(), &(&(&y(1) + &y(2)) + &k));
    let q = hecke_product(&Component::new(1, y(1)).unwrap(), &one(1), &k);
    assert_eq!(constant_ratio(p.poly(), q.poly()), Some(Q::from_integer(2.into())));
}

#[test]
fn current_relations_hold() {
    let h = Poly::var(Var::Hbar);
    assert!(verify_current_relation(4, Sign::Plus, &h).pass());
    assert!(verify_current_relation(4, Sign::Minus, &h).pass());
}
