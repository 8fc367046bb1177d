//! The semidirect product `C[S_k] ⋉ M_k`: permutations with rational
//! function coefficients in `z_1..z_k`, rational Shibukawa–Ueno
//! R-operators, their symmetrizer products and the Hecke idempotents.
//!
//! Permutations are stored in one-line notation, `p[i-1] = σ(i)`, and the
//! product is composition of maps: `(στ)(i) = σ(τ(i))`. A permutation acts
//! on coefficients by `z_i -> z_{σ(i)}`, which makes
//! `(c·σ)(d·τ) = (c·σ(d))·(στ)` associative.
//!
//! Worked example with `s1 = [2,1,3]`, `s2 = [1,3,2]`:
//! `s1·s2 = [s1(s2(1)), s1(s2(2)), s1(s2(3))] = [2,3,1]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{q, AlgError, Poly, Rf, Var, Q};

/// A permutation in one-line notation with values `1..=k`.
pub type Perm = Vec<u8>;

pub fn identity_perm(k: usize) -> Perm {
    (1..=k as u8).collect()
}

/// `(στ)(i) = σ(τ(i))`.
pub fn compose(s: &[u8], t: &[u8]) -> Perm {
    t.iter().map(|&i| s[i as usize - 1]).collect()
}

pub fn inverse(s: &[u8]) -> Perm {
    let mut out = vec![0u8; s.len()];
    for (i, &v) in s.iter().enumerate() {
        out[v as usize - 1] = i as u8 + 1;
    }
    out
}

pub fn transposition(k: usize, i: usize, j: usize) -> Perm {
    let mut p = identity_perm(k);
    p.swap(i - 1, j - 1);
    p
}

/// Sign as `+1` or `-1`.
pub fn sign(p: &[u8]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `1..=k` in lexicographic order.
pub fn all_perms(k: usize) -> Vec<Perm> {
    fn rec(cur: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        let k = used.len();
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8 + 1);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Variable relabelling `family(i) -> family(σ(i))` for `i <= p.len()`.
pub fn perm_slot_map(p: &[u8], family: fn(u8) -> Var) -> impl Fn(usize) -> usize + '_ {
    let k = p.len();
    let base = family(1).slot();
    move |s| {
        if s >= base && s < base + k {
            family(p[s - base]).slot()
        } else {
            s
        }
    }
}

/// Applies `z_i -> z_{σ(i)}` to a coefficient.
pub fn act_on_rf(p: &[u8], f: &Rf) -> Rf {
    if p.iter().enumerate().all(|(i, &v)| v as usize == i + 1) {
        return f.clone();
    }
    f.rename(&perm_slot_map(p, Var::Z))
}

/// An element `Σ c_σ·σ` of `C[S_k] ⋉ M_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct PermElem {
    k: usize,
    terms: BTreeMap<Perm, Rf>,
}

impl PermElem {
    pub fn zero(k: usize) -> PermElem {
        PermElem {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(k: usize) -> PermElem {
        PermElem::perm(identity_perm(k), Rf::one())
    }

    pub fn perm(p: Perm, c: Rf) -> PermElem {
        let k = p.len();
        let mut e = PermElem::zero(k);
        e.add_term(p, c);
        e
    }

    pub fn scalar(k: usize, c: Rf) -> PermElem {
        PermElem::perm(identity_perm(k), c)
    }

    /// The transposition `P_ij` with coefficient 1.
    pub fn p(k: usize, i: usize, j: usize) -> PermElem {
        PermElem::perm(transposition(k, i, j), Rf::one())
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Rf> {
        &self.terms
    }

    pub fn coeff(&self, p: &[u8]) -> Rf {
        self.terms.get(p).cloned().unwrap_or_else(Rf::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Perm, c: Rf) {
        assert_eq!(p.len(), self.k, "permutation length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, o: &PermElem) -> PermElem {
        assert_eq!(self.k, o.k, "rank mismatch");
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(p.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &PermElem) -> PermElem {
        self.add(&o.scale(&Rf::int(-1)))
    }

    /// Left multiplication by a coefficient.
    pub fn scale(&self, c: &Rf) -> PermElem {
        let mut r = PermElem::zero(self.k);
        for (p, d) in &self.terms {
            r.add_term(p.clone(), c * d);
        }
        r
    }

    pub fn scale_q(&self, c: &Q) -> PermElem {
        self.scale(&Rf::constant(c.clone()))
    }

    /// Product in the semidirect product; fails on rank mismatch.
    pub fn try_mul(&self, o: &PermElem) -> Result<PermElem, AlgError> {
        if self.k != o.k {
            return Err(AlgError::RankMismatch(self.k, o.k));
        }
        let mut acc: BTreeMap<Perm, Vec<Rf>> = BTreeMap::new();
        for (s, c) in &self.terms {
            for (t, d) in &o.terms {
                let st = compose(s, t);
                acc.entry(st).or_default().push(c * &act_on_rf(s, d));
            }
        }
        let mut r = PermElem::zero(self.k);
        for (p, cs) in acc {
            r.add_term(p, sum_rf(cs));
        }
        Ok(r)
    }

    pub fn mul(&self, o: &PermElem) -> PermElem {
        self.try_mul(o).expect("rank mismatch")
    }

    /// Substitutes into every coefficient.
    pub fn subs(&self, map: &[(Var, Poly)]) -> PermElem {
        let mut r = PermElem::zero(self.k);
        for (p, c) in &self.terms {
            r.add_term(p.clone(), c.subs(map));
        }
        r
    }
}

/// Balanced summation keeps intermediate denominators small.
pub(crate) fn sum_rf(mut v: Vec<Rf>) -> Rf {
    if v.is_empty() {
        return Rf::zero();
    }
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().expect("nonempty")
}

impl fmt::Display for PermElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (p, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let ps: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, "({c})*[{}]", ps.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PermElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermElem({self})")
    }
}

fn z(i: usize) -> Rf {
    Rf::var(Var::Z(i as u8))
}

/// Rational kernel `G(z, w) = (z + w) / (z w)`.
pub fn g_factor(zz: &Rf, w: &Rf) -> Rf {
    (zz + w).checked_div(&(zz * w)).expect("G(z,w) needs z, w nonzero")
}

/// `R_ij(ξ|κ) = G(z_i - z_j, κ)·Id - G(z_i - z_j, ξ)·P_ij`.
pub fn su_r(i: usize, j: usize, xi: &Rf, kappa: &Rf, k: usize) -> Result<PermElem, AlgError> {
    if i == j || i == 0 || j == 0 || i > k || j > k {
        return Err(AlgError::InvalidArgument(format!(
            "R_{{{i}{j}}} needs distinct slots in 1..={k}"
        )));
    }
    let d = &z(i) - &z(j);
    let mut r = PermElem::scalar(k, g_factor(&d, kappa));
    r.add_term(transposition(k, i, j), -g_factor(&d, xi));
    Ok(r)
}

/// `Ř_i(ξ|κ) = P_{i,i+1} R_{i,i+1}(ξ|κ)`.
pub fn su_r_check(i: usize, xi: &Rf, kappa: &Rf, k: usize) -> Result<PermElem, AlgError> {
    Ok(PermElem::p(k, i, i + 1).mul(&su_r(i, i + 1, xi, kappa, k)?))
}

/// Sign selector for symmetrizers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The ordered product defining the κ-symmetrizer (`Plus`) or
/// κ-antisymmetrizer (`Minus`).
pub fn su_symmetrizer(k: usize, kappa: &Rf, sign: Sign) -> PermElem {
    let mut acc = PermElem::identity(k);
    let r = |i: usize, m: i64| {
        let xi = kappa.scale(&crate::exactalg::qi(m));
        su_r_check(i, &xi, kappa, k).expect("valid slot")
    };
    match sign {
        Sign::Plus => {
            // groups (Ř_{k-1}(-κ)…Ř_{k-m}(-mκ)) for m = k-1 down to 1
            for m in (1..k).rev() {
                for a in 1..=m {
                    acc = acc.mul(&r(k - a, -(a as i64)));
                }
            }
        }
        Sign::Minus => {
            // groups (Ř_{k-m}(mκ)…Ř_{k-1}(κ)) for m = 1 up to k-1
            for m in 1..k {
                for a in (1..=m).rev() {
                    acc = acc.mul(&r(k - a, a as i64));
                }
            }
        }
    }
    acc
}

/// `Σ_σ σ·∏_{i<j} G(z_i - z_j, κ)` written as `Σ_σ σ(∏G)·σ`.
pub fn symmetrizer_closed_form(k: usize, kappa: &Rf) -> PermElem {
    let mut prod = Rf::one();
    for i in 1..=k {
        for j in i + 1..=k {
            prod = &prod * &g_factor(&(&z(i) - &z(j)), kappa);
        }
    }
    let mut r = PermElem::zero(k);
    for p in all_perms(k) {
        let c = act_on_rf(&p, &prod);
        r.add_term(p, c);
    }
    r
}

/// `∏_{i<j} G(z_i - z_j, -κ)·Σ_σ sgn(σ) σ`.
pub fn antisymmetrizer_closed_form(k: usize, kappa: &Rf) -> PermElem {
    let mk = -kappa;
    let mut prod = Rf::one();
    for i in 1..=k {
        for j in i + 1..=k {
            prod = &prod * &g_factor(&(&z(i) - &z(j)), &mk);
        }
    }
    let mut r = PermElem::zero(k);
    for p in all_perms(k) {
        let c = prod.scale(&crate::exactalg::qi(sign(&p)));
        r.add_term(p, c);
    }
    r
}

/// `Ř^Hecke_i(ξ) = σ_i + 1/ξ` in `C[S_k]`.
pub fn hecke_r(i: usize, xi: &Rf, k: usize) -> PermElem {
    let mut r = PermElem::p(k, i, i + 1);
    r.add_term(identity_perm(k), xi.recip().expect("nonzero spectral parameter"));
    r
}

/// `e_k` (`Plus`) or `e_k^-` (`Minus`) by definition.
pub fn group_idempotent(k: usize, s: Sign) -> PermElem {
    let f = crate::exactalg::qi(factorial(k) as i64).recip();
    let mut r = PermElem::zero(k);
    for p in all_perms(k) {
        let c = match s {
            Sign::Plus => f.clone(),
            Sign::Minus => &f * crate::exactalg::qi(sign(&p)),
        };
        r.add_term(p, Rf::constant(c));
    }
    r
}

/// The ordered products of `Ř^Hecke` with integer spectral values, with the
/// stated prefactors `1/k!` and `(-1)^{k(k+1)/2}/k!`.
pub fn hecke_idempotent_via_r(k: usize, s: Sign) -> PermElem {
    let mut acc = PermElem::identity(k);
    let r = |i: usize, m: i64| hecke_r(i, &Rf::int(m), k);
    match s {
        Sign::Plus => {
            for m in (1..k).rev() {
                for a in 1..=m {
                    acc = acc.mul(&r(k - a, a as i64));
                }
            }
            acc.scale_q(&q(1, factorial(k) as i64))
        }
        Sign::Minus => {
            for m in 1..k {
                for a in (1..=m).rev() {
                    acc = acc.mul(&r(k - a, -(a as i64)));
                }
            }
            let e = k * (k + 1) / 2;
            let sgn = if e.is_multiple_of(2) { 1 } else { -1 };
            acc.scale_q(&q(sgn, factorial(k) as i64))
        }
    }
}

/// The degenerate affine Hecke generator `σ_i^κ = P + κ(1 - P)/(z_i - z_{i+1})`
/// as an element of the semidirect product (with `z` standing for `Y`).
pub fn hecke_sigma_elem(i: usize, kappa: &Rf, k: usize) -> PermElem {
    let c = kappa
        .checked_div(&(&z(i) - &z(i + 1)))
        .expect("distinct variables");
    let mut r = PermElem::scalar(k, c.clone());
    r.add_term(transposition(k, i, i + 1), &Rf::one() - &c);
    r
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Both sides of the quantum Yang–Baxter equation at `k = 3` with spectral
/// parameters `xi1, xi2, xi3` and `kappa`.
pub fn qybe_sides() -> (PermElem, PermElem) {
    let x = |i: u8| Rf::var(Var::Xi(i));
    let kappa = Rf::var(Var::Kappa);
    let r12 = su_r(1, 2, &(&x(1) - &x(2)), &kappa, 3).expect("valid");
    let r13 = su_r(1, 3, &(&x(1) - &x(3)), &kappa, 3).expect("valid");
    let r23 = su_r(2, 3, &(&x(2) - &x(3)), &kappa, 3).expect("valid");
    (r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> Rf {
        Rf::parse(s).unwrap()
    }

    #[test]
    fn composition_convention() {
        assert_eq!(compose(&[2, 1, 3], &[1, 3, 2]), vec![2, 3, 1]);
        assert_eq!(compose(&inverse(&[2, 3, 1]), &[2, 3, 1]), identity_perm(3));
    }

    #[test]
    fn compose_examples() {
        let p = PermElem::p(2, 1, 2);
        assert_eq!(p.mul(&p), PermElem::identity(2));
        let z1 = PermElem::scalar(2, rf("z1"));
        assert_eq!(p.mul(&z1), PermElem::perm(vec![2, 1], rf("z2")));
        let f = PermElem::scalar(2, rf("z1+kappa"));
        let g = PermElem::scalar(2, rf("1/z2"));
        assert_eq!(f.mul(&g), PermElem::scalar(2, rf("(z1+kappa)/z2")));
        assert!(matches!(
            PermElem::identity(2).try_mul(&PermElem::identity(3)),
            Err(AlgError::RankMismatch(2, 3))
        ));
    }

    #[test]
    fn r_operator_k2() {
        let r = su_r(1, 2, &rf("xi"), &rf("kappa"), 2).unwrap();
        assert_eq!(r.coeff(&[1, 2]), rf("(z1-z2+kappa)/((z1-z2)*kappa)"));
        assert_eq!(r.coeff(&[2, 1]), -rf("(z1-z2+xi)/((z1-z2)*xi)"));
        assert!(su_r(1, 1, &rf("xi"), &rf("kappa"), 2).is_err());
    }

    #[test]
    fn r_check_closed_form() {
        let rc = su_r_check(1, &rf("xi"), &rf("kappa"), 2).unwrap();
        let d = rf("z2 - z1");
        let mut expect = PermElem::perm(vec![2, 1], g_factor(&d, &rf("kappa")));
        expect.add_term(vec![1, 2], -g_factor(&d, &rf("xi")));
        assert_eq!(rc, expect);
    }

    #[test]
    fn symmetrizer_k2_hand_expansion() {
        let h = su_symmetrizer(2, &rf("kappa"), Sign::Plus);
        let mut expect = PermElem::scalar(2, g_factor(&rf("z1-z2"), &rf("kappa")));
        expect.add_term(vec![2, 1], g_factor(&rf("z2-z1"), &rf("kappa")));
        assert_eq!(h, expect);
        assert_eq!(su_symmetrizer(1, &rf("kappa"), Sign::Plus), PermElem::identity(1));
    }

    #[test]
    fn hecke_idempotents_small() {
        assert_eq!(hecke_idempotent_via_r(2, Sign::Plus), group_idempotent(2, Sign::Plus));
        assert_eq!(hecke_idempotent_via_r(2, Sign::Minus), group_idempotent(2, Sign::Minus));
        let e3 = hecke_idempotent_via_r(3, Sign::Plus);
        assert_eq!(e3, group_idempotent(3, Sign::Plus));
        assert_eq!(e3.mul(&e3), e3);
    }

    #[test]
    fn hecke_r_is_kappa_times_rational_r() {
        let kappa = rf("kappa");
        let xi = rf("xi");
        let lhs = su_r_check(1, &(-(&kappa * &xi)), &kappa, 2)
            .unwrap()
            .scale(&kappa);
        let mut rhs = hecke_sigma_elem(1, &kappa, 2);
        rhs.add_term(vec![1, 2], xi.recip().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_check_at_xi_equal_kappa_on_antisymmetric_input() {
        let kappa = rf("kappa");
        let r = su_r_check(1, &kappa, &kappa, 2).unwrap();
        let anti = PermElem::identity(2).sub(&PermElem::p(2, 1, 2));
        let lhs = r.mul(&r).mul(&anti);
        let rhs = r.mul(&anti).scale(&rf("-2/kappa"));
        assert_eq!(lhs, rhs);
    }
}
