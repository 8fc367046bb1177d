//! Rational shuffle algebras: the Feigin–Odesskii product, the product
//! induced by the κ-symmetrizer of the degenerate affine Hecke algebra,
//! their comparison, truncations and the current relation of the Yangian
//! halves.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::exactalg::{AlgError, Poly, Var, Q};
use crate::heckerep::{apply_symmetrizer, is_symmetric, shifted_vandermonde, sum_polys, y};
use crate::permops::{all_perms, sign, Sign};

/// A symmetric polynomial in `Y_1..Y_k` together with its degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    k: usize,
    poly: Poly,
}

impl Component {
    pub fn new(k: usize, poly: Poly) -> Result<Component, AlgError> {
        if let Some(v) = poly.vars().into_iter().find(|v| matches!(v, Var::Y(i) if *i as usize > k)) {
            return Err(AlgError::InvalidArgument(format!("{v} outside Y_1..Y_{k}")));
        }
        if !is_symmetric(k, &poly) {
            return Err(AlgError::NotSymmetric(poly.to_string()));
        }
        Ok(Component { k, poly })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }
}

/// `Y_i -> Y_{i+s}` for all `i`.
fn shift_y(f: &Poly, s: usize) -> Poly {
    let base = Var::Y(1).slot();
    let top = Var::Y(crate::exactalg::var::MAX_INDEX).slot();
    f.rename(&|slot| if (base..=top).contains(&slot) { slot + s } else { slot })
}

/// Subsets of `{1..n}` of size `k`, each sorted.
fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn go(start: u8, n: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u8, k, &mut Vec::new(), &mut out);
    out
}

/// Minimal-length coset representatives of `S_{k+l} / (S_k × S_l)`:
/// `1..k` go increasingly onto a `k`-subset, `k+1..k+l` onto its complement.
pub fn shuffles(k: usize, l: usize) -> Vec<Vec<u8>> {
    subsets(k + l, k)
        .into_iter()
        .map(|s| {
            let mut p = s.clone();
            p.extend((1..=(k + l) as u8).filter(|i| !s.contains(i)));
            p
        })
        .collect()
}

fn cross_factor(k: usize, l: usize, kappa: &Poly) -> Poly {
    let mut p = Poly::one();
    for i in 1..=k {
        for j in k + 1..=k + l {
            p = &p * &(&(&y(i) - &y(j)) + kappa);
        }
    }
    p
}

/// Block Vandermonde `Δ(Y_1..Y_k) Δ(Y_{k+1}..Y_{k+l})`.
fn block_vandermonde(k: usize, l: usize) -> Poly {
    &shifted_vandermonde(k, &Poly::zero()) * &shift_y(&shifted_vandermonde(l, &Poly::zero()), k)
}

/// Feigin–Odesskii product: `(1/(k! l!)) Sym_{k+l}(∏_{i≤k<j} (Y_i-Y_j+κ)/(Y_i-Y_j) f g)`,
/// summed over shuffles only.
pub fn fo_product(f: &Component, g: &Component, kappa: &Poly) -> Component {
    let (k, l) = (f.k, g.k);
    if k == 0 || l == 0 {
        return Component {
            k: k + l,
            poly: &f.poly * &shift_y(&g.poly, k),
        };
    }
    // ∏ 1/(Y_i - Y_j) over i ≤ k < j equals Δ_k Δ_l / Δ_{k+l}
    let body = &(&cross_factor(k, l, kappa) * &f.poly) * &(&shift_y(&g.poly, k) * &block_vandermonde(k, l));
    let terms: Vec<Poly> = shuffles(k, l)
        .iter()
        .map(|p| {
            let t = crate::heckerep::permute_y(p, &body);
            if sign(p) > 0 {
                t
            } else {
                -t
            }
        })
        .collect();
    let num = sum_polys(terms);
    let poly = num
        .div_exact(&shifted_vandermonde(k + l, &Poly::zero()))
        .expect("symmetrization clears the denominators");
    Component { k: k + l, poly }
}

/// [`fo_product`] through the full sum over `S_{k+l}`.
pub fn fo_product_naive(f: &Component, g: &Component, kappa: &Poly) -> Component {
    let (k, l) = (f.k, g.k);
    let n = k + l;
    let body = &(&cross_factor(k, l, kappa) * &f.poly) * &(&shift_y(&g.poly, k) * &block_vandermonde(k, l));
    let terms: Vec<Poly> = all_perms(n)
        .iter()
        .map(|p| {
            let t = crate::heckerep::permute_y(p, &body);
            if sign(p) > 0 {
                t
            } else {
                -t
            }
        })
        .collect();
    let num = sum_polys(terms);
    let norm = Q::from_integer(BigInt::from(crate::permops::factorial(k) * crate::permops::factorial(l))).recip();
    let poly = num
        .div_exact(&shifted_vandermonde(n, &Poly::zero()))
        .expect("symmetrization clears the denominators")
        .scale(&norm);
    Component { k: n, poly }
}

/// Hecke-induced product `e^κ_{k+l}(f(Y_1..Y_k) g(Y_{k+1}..Y_{k+l}))`.
pub fn hecke_product(f: &Component, g: &Component, kappa: &Poly) -> Component {
    let n = f.k + g.k;
    let fg = &f.poly * &shift_y(&g.poly, f.k);
    if n == 0 {
        return Component { k: 0, poly: fg };
    }
    let poly = apply_symmetrizer(n, kappa, Sign::Plus, &fg).expect("rank within range");
    Component { k: n, poly }
}

/// Outcome of comparing the two products on one pair of inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub k: usize,
    pub l: usize,
    pub fo: Poly,
    pub hecke: Poly,
    /// `fo / hecke` when it is a rational constant.
    pub ratio: Option<Q>,
    pub expected: Q,
    pub pass: bool,
}

/// Measures `fo_product(f, g) / hecke_product(f, g)` against `C(k+l, k)`.
pub fn compare_products(f: &Component, g: &Component, kappa: &Poly) -> CompareReport {
    let fo = fo_product(f, g, kappa).poly;
    let hecke = hecke_product(f, g, kappa).poly;
    let ratio = constant_ratio(&fo, &hecke);
    let expected = Q::from_integer(binomial(BigInt::from(f.k + g.k), BigInt::from(f.k)));
    CompareReport {
        k: f.k,
        l: g.k,
        pass: ratio.as_ref() == Some(&expected),
        fo,
        hecke,
        ratio,
        expected,
    }
}

/// `a / b` if it is a rational constant (`0/0` has no ratio).
pub fn constant_ratio(a: &Poly, b: &Poly) -> Option<Q> {
    let (m, c) = b.leading()?;
    let r = a.coeff(m) / c;
    (*a == b.scale(&r)).then_some(r)
}

/// Element of the shuffle algebra: one symmetric component per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShuffleElement {
    components: BTreeMap<usize, Poly>,
}

/// Which of the two products a [`ShuffleElement`] multiplies with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Fo,
    Hecke,
}

impl ShuffleElement {
    pub fn zero() -> ShuffleElement {
        ShuffleElement::default()
    }

    pub fn from_component(c: Component) -> ShuffleElement {
        let mut e = ShuffleElement::zero();
        e.add_component(c);
        e
    }

    /// Single component `f` of degree `k`; checks symmetry.
    pub fn homogeneous(k: usize, f: Poly) -> Result<ShuffleElement, AlgError> {
        Ok(ShuffleElement::from_component(Component::new(k, f)?))
    }

    fn add_component(&mut self, c: Component) {
        let e = self.components.entry(c.k).or_insert_with(Poly::zero);
        *e += &c.poly;
        if e.is_zero() {
            self.components.remove(&c.k);
        }
    }

    pub fn components(&self) -> &BTreeMap<usize, Poly> {
        &self.components
    }

    pub fn component(&self, k: usize) -> Poly {
        self.components.get(&k).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, o: &ShuffleElement) -> ShuffleElement {
        let mut r = self.clone();
        for (&k, p) in &o.components {
            r.add_component(Component { k, poly: p.clone() });
        }
        r
    }

    pub fn sub(&self, o: &ShuffleElement) -> ShuffleElement {
        self.add(&o.scale_poly(&Poly::int(-1)))
    }

    /// Multiplies every component by a polynomial free of `Y`.
    pub fn scale_poly(&self, c: &Poly) -> ShuffleElement {
        let mut r = ShuffleElement::zero();
        for (&k, p) in &self.components {
            r.add_component(Component { k, poly: p * c });
        }
        r
    }

    pub fn mul(&self, o: &ShuffleElement, kappa: &Poly, prod: Product) -> ShuffleElement {
        let mut r = ShuffleElement::zero();
        for (&k, p) in &self.components {
            for (&l, q) in &o.components {
                let a = Component { k, poly: p.clone() };
                let b = Component { k: l, poly: q.clone() };
                r.add_component(match prod {
                    Product::Fo => fo_product(&a, &b, kappa),
                    Product::Hecke => hecke_product(&a, &b, kappa),
                });
            }
        }
        r
    }

    pub fn subs(&self, map: &[(Var, Poly)]) -> ShuffleElement {
        let mut r = ShuffleElement::zero();
        for (&k, p) in &self.components {
            r.add_component(Component { k, poly: p.subs(map) });
        }
        r
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(k, p)| format!("[{k}] {p}"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// True if every component has degree below `n` in each `Y_i`.
pub fn truncate_check(x: &ShuffleElement, n: u32) -> bool {
    x.components.iter().all(|(&k, p)| (1..=k).all(|i| p.degree_in(Var::Y(i as u8)) < n))
}

/// Report of a coefficient-wise check of the current relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentRelationReport {
    pub r: usize,
    pub checked: usize,
    /// First `(a, b)` whose `u^{-a} v^{-b}` coefficients differ.
    pub first_failure: Option<(usize, usize)>,
}

impl CurrentRelationReport {
    pub fn pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Shuffle mode `x^{(i)} = Y_1^{i-1}`.
pub fn current_mode(i: usize) -> ShuffleElement {
    ShuffleElement::homogeneous(1, y(1).pow(i as u32 - 1)).expect("degree one is symmetric")
}

/// Checks `(u-v)[x(u), x(v)] = ∓hbar (x(u) - x(v))^2` coefficientwise for
/// `u^{-a} v^{-b}`, `a + b ≤ r`, with the product at `κ = ±hbar`. `Plus` is
/// the `x_+` relation.
pub fn verify_current_relation(r: usize, s: Sign, hbar: &Poly) -> CurrentRelationReport {
    let kappa = match s {
        Sign::Plus => hbar.clone(),
        Sign::Minus => -hbar,
    };
    let rhs_scale = match s {
        Sign::Plus => -hbar,
        Sign::Minus => hbar.clone(),
    };
    let modes: Vec<ShuffleElement> = (0..=r + 1)
        .map(|i| if i == 0 { ShuffleElement::zero() } else { current_mode(i) })
        .collect();
    let mut cache: BTreeMap<(usize, usize), ShuffleElement> = BTreeMap::new();
    let mut prod = |i: usize, j: usize| -> ShuffleElement {
        cache
            .entry((i, j))
            .or_insert_with(|| modes[i].mul(&modes[j], &kappa, Product::Fo))
            .clone()
    };
    let mut checked = 0;
    for total in 0..=r {
        for a in 0..=total {
            let b = total - a;
            let mut lhs = ShuffleElement::zero();
            if b >= 1 {
                lhs = lhs.add(&prod(a + 1, b)).sub(&prod(b, a + 1));
            }
            if a >= 1 {
                lhs = lhs.sub(&prod(a, b + 1)).add(&prod(b + 1, a));
            }
            let mut sq = ShuffleElement::zero();
            if b == 0 {
                for i in 1..a {
                    sq = sq.add(&prod(i, a - i));
                }
            }
            if a == 0 {
                for i in 1..b {
                    sq = sq.add(&prod(i, b - i));
                }
            }
            if a >= 1 && b >= 1 {
                sq = sq.sub(&prod(a, b)).sub(&prod(b, a));
            }
            let rhs = sq.scale_poly(&rhs_scale);
            checked += 1;
            if lhs != rhs {
                return CurrentRelationReport {
                    r,
                    checked,
                    first_failure: Some((a, b)),
                };
            }
        }
    }
    CurrentRelationReport {
        r,
        checked,
        first_failure: None,
    }
}

/// The `x_+` relation with `κ = hbar`.
pub fn verify_plus_current_relation(r: usize, hbar: &Poly) -> CurrentRelationReport {
    verify_current_relation(r, Sign::Plus, hbar)
}

/// Monomial symmetric polynomial `m_λ(Y_1..Y_k)`; `None` if `λ` has more
/// than `k` nonzero parts.
pub fn monomial_symmetric(lambda: &[u32], k: usize) -> Option<Poly> {
    let mut parts: Vec<u32> = lambda.iter().copied().filter(|&p| p > 0).collect();
    if parts.len() > k {
        return None;
    }
    parts.resize(k, 0);
    let mut seen = std::collections::BTreeSet::new();
    let mut terms = Vec::new();
    for p in all_perms(k) {
        let exps: Vec<u32> = (0..k).map(|i| parts[p[i] as usize - 1]).collect();
        if seen.insert(exps.clone()) {
            let mut m = Poly::one();
            for (i, &e) in exps.iter().enumerate() {
                m = &m * &y(i + 1).pow(e);
            }
            terms.push(m);
        }
    }
    Some(sum_polys(terms))
}

/// Monomial symmetric basis of degree at most `d` in `k` variables.
pub fn monomial_basis(k: usize, d: u32) -> Vec<(Vec<u32>, Poly)> {
    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = Vec::new();
    for n in 0..=d {
        for lam in partitions(n, n) {
            if let Some(m) = monomial_symmetric(&lam, k) {
                out.push((lam, m));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{qi, Rf};

    fn p(s: &str) -> Poly {
        Rf::parse(s).unwrap().into_poly().unwrap()
    }

    fn c(k: usize, s: &str) -> Component {
        Component::new(k, p(s)).unwrap()
    }

    fn kappa() -> Poly {
        Poly::var(Var::Kappa)
    }

    #[test]
    fn fo_examples() {
        assert_eq!(fo_product(&c(1, "1"), &c(1, "1"), &kappa()).poly, Poly::int(2));
        assert_eq!(fo_product(&c(1, "Y1"), &c(1, "1"), &kappa()).poly, p("Y1 + Y2 + kappa"));
        assert_eq!(fo_product(&c(1, "1"), &c(1, "Y1"), &kappa()).poly, p("Y1 + Y2 - kappa"));
        assert_eq!(fo_product(&c(1, "1"), &c(1, "1"), &Poly::zero()).poly, Poly::int(2));
    }

    #[test]
    fn hecke_examples() {
        assert_eq!(hecke_product(&c(1, "1"), &c(1, "1"), &kappa()).poly, Poly::one());
        assert_eq!(hecke_product(&c(1, "Y1"), &c(1, "1"), &kappa()).poly, p("(Y1 + Y2 + kappa)/2"));
        let a = hecke_product(&c(1, "Y1"), &c(1, "1"), &kappa()).poly;
        let b = hecke_product(&c(1, "1"), &c(1, "Y1"), &kappa()).poly;
        assert_eq!(&a - &b, kappa());
    }

    #[test]
    fn coset_sum_matches_full_sum() {
        let f = c(2, "Y1^2 + Y2^2 + Y1*Y2");
        let g = c(1, "Y1");
        assert_eq!(fo_product(&f, &g, &kappa()), fo_product_naive(&f, &g, &kappa()));
        assert_eq!(fo_product(&g, &f, &kappa()), fo_product_naive(&g, &f, &kappa()));
    }

    #[test]
    fn compare_small() {
        let r = compare_products(&c(1, "1"), &c(2, "1"), &kappa());
        assert_eq!(r.ratio, Some(qi(3)));
        assert!(r.pass);
    }

    #[test]
    fn component_rejects_asymmetric() {
        assert!(Component::new(2, p("Y1")).is_err());
        assert!(Component::new(1, p("Y2")).is_err());
    }

    #[test]
    fn truncation() {
        let x = ShuffleElement::homogeneous(1, p("Y1^2")).unwrap();
        assert!(truncate_check(&x, 3));
        assert!(!truncate_check(&x, 2));
    }

    #[test]
    fn classical_current_relation() {
        assert!(verify_plus_current_relation(2, &Poly::zero()).pass());
        assert!(verify_plus_current_relation(2, &Poly::var(Var::Hbar)).pass());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(1, 3).len(), 4);
        assert_eq!(monomial_basis(3, 3).len(), 7);
        assert_eq!(monomial_symmetric(&[1, 1], 3), Some(p("Y1*Y2 + Y1*Y3 + Y2*Y3")));
    }
}
