//! PBW normal forms in `U_hbar(gl_N)` with `[E_ab, E_cd] = hbar(δ_bc E_ad - δ_da E_cb)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{Poly, Var, Q};

use super::ring::NcRing;

/// Generator `E_ij`. Ordered lower-triangular first, then diagonal, then
/// upper-triangular, lexicographically by `(i, j)` within each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gen {
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: usize, j: usize) -> Gen {
        Gen {
            i: i as u8,
            j: j as u8,
        }
    }

    fn block(self) -> u8 {
        match self.i.cmp(&self.j) {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        }
    }

    pub fn is_diagonal(self) -> bool {
        self.i == self.j
    }
}

impl Ord for Gen {
    fn cmp(&self, o: &Gen) -> Ordering {
        (self.block(), self.i, self.j).cmp(&(o.block(), o.i, o.j))
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, o: &Gen) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}", self.i, self.j)
    }
}

/// Element of `U_hbar(gl_N)`: ordered monomials with coefficients in `Q[hbar]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElement {
    terms: BTreeMap<Vec<Gen>, Poly>,
}

fn hbar() -> Poly {
    Poly::var(Var::Hbar)
}

/// `[a, b]` in `gl_N`, as at most two signed generators.
fn lie_bracket(a: Gen, b: Gen) -> Vec<(Gen, i64)> {
    let mut out = Vec::new();
    if a.j == b.i {
        out.push((Gen { i: a.i, j: b.j }, 1));
    }
    if b.j == a.i {
        out.push((Gen { i: b.i, j: a.j }, -1));
    }
    out
}

impl PbwElement {
    pub fn zero() -> PbwElement {
        PbwElement::default()
    }

    pub fn one() -> PbwElement {
        PbwElement::scalar(Poly::one())
    }

    pub fn scalar(c: Poly) -> PbwElement {
        let mut e = PbwElement::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn gen(i: usize, j: usize) -> PbwElement {
        let mut e = PbwElement::zero();
        e.add_term(vec![Gen::new(i, j)], Poly::one());
        e
    }

    /// Normal form of the product of a word of generators.
    pub fn word(gens: &[Gen]) -> PbwElement {
        let mut e = PbwElement::one();
        for &g in gens {
            e = e.mul_gen(g);
        }
        e
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Gen>, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Vec<Gen>, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, o: &PbwElement, c: &Poly) {
        for (m, d) in &o.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    /// Sorted monomial `m` times generator `g`.
    fn mono_mul_gen(m: &[Gen], g: Gen) -> PbwElement {
        let p = m.partition_point(|&a| a <= g);
        let mut out = PbwElement::zero();
        let mut main = Vec::with_capacity(m.len() + 1);
        main.extend_from_slice(&m[..p]);
        main.push(g);
        main.extend_from_slice(&m[p..]);
        out.add_term(main, Poly::one());
        // a_{p+1}..a_n g = g a_{p+1}..a_n + Σ_t a_{p+1}..a_{t-1} hbar[a_t, g] a_{t+1}..a_n
        for t in p..m.len() {
            for (h, s) in lie_bracket(m[t], g) {
                let mut corr = PbwElement::mono_mul_gen(&m[..t], h);
                for &a in &m[t + 1..] {
                    corr = corr.mul_gen(a);
                }
                out.add_scaled(&corr, &hbar().scale(&Q::from_integer(s.into())));
            }
        }
        out
    }

    pub fn mul_gen(&self, g: Gen) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&PbwElement::mono_mul_gen(m, g), c);
        }
        out
    }

    pub fn mul(&self, o: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in &o.terms {
            let mut part = self.clone();
            for &g in m {
                part = part.mul_gen(g);
            }
            out.add_scaled(&part, c);
        }
        out
    }

    pub fn add(&self, o: &PbwElement) -> PbwElement {
        let mut r = self.clone();
        r.add_scaled(o, &Poly::one());
        r
    }

    pub fn sub(&self, o: &PbwElement) -> PbwElement {
        let mut r = self.clone();
        r.add_scaled(o, &Poly::int(-1));
        r
    }

    pub fn scale(&self, c: &Poly) -> PbwElement {
        let mut r = PbwElement::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn commutator(&self, o: &PbwElement) -> PbwElement {
        self.mul(o).sub(&o.mul(self))
    }

    /// Applies a map on generators: `anti` reverses each word.
    pub fn map_gens(&self, f: &dyn Fn(Gen) -> PbwElement, anti: bool) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            let mut part = PbwElement::one();
            let word: Vec<Gen> = if anti { m.iter().rev().copied().collect() } else { m.clone() };
            for g in word {
                part = part.mul(&f(g));
            }
            out.add_scaled(&part, c);
        }
        out
    }

    /// Largest index appearing in a generator.
    pub fn rank_hint(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|g| g.i.max(g.j) as usize))
            .max()
            .unwrap_or(0)
    }

    /// Harish-Chandra projection: keeps monomials made of diagonal generators
    /// and substitutes `E_ii = w_i - (N - i) hbar`.
    pub fn hc_projection(&self, n: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.iter().all(|g| g.is_diagonal()) {
                let mut t = c.clone();
                for g in m {
                    let i = g.i as usize;
                    let w = &Poly::var(Var::W(g.i)) - &hbar().scale(&Q::from_integer(((n - i) as i64).into()));
                    t = &t * &w;
                }
                out += &t;
            }
        }
        out
    }
}

/// Which transposition to apply in [`transpose_auto`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transpose {
    /// `E_ij -> E_ji`, an antiautomorphism.
    Anti,
    /// `E_ij -> -E_ji`, an automorphism.
    Minus,
}

pub fn transpose_auto(x: &PbwElement, t: Transpose) -> PbwElement {
    match t {
        Transpose::Anti => x.map_gens(&|g| PbwElement::gen(g.j as usize, g.i as usize), true),
        Transpose::Minus => x.map_gens(
            &|g| PbwElement::gen(g.j as usize, g.i as usize).scale(&Poly::int(-1)),
            false,
        ),
    }
}

impl NcRing for PbwElement {
    fn zero() -> Self {
        PbwElement::zero()
    }
    fn from_scalar(c: Poly) -> Self {
        PbwElement::scalar(c)
    }
    fn add(&self, o: &Self) -> Self {
        PbwElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        PbwElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        PbwElement::mul(self, o)
    }
    fn scale(&self, c: &Poly) -> Self {
        PbwElement::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        PbwElement::is_zero(self)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<(&Vec<Gen>, &Poly)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        super::ring::fmt_terms(
            f,
            order.into_iter().map(|(m, c)| {
                let word: Vec<String> = m.iter().map(|g| g.to_string()).collect();
                (word.join("*"), c)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, j: usize) -> PbwElement {
        PbwElement::gen(i, j)
    }

    #[test]
    fn normal_ordering_examples() {
        let h = PbwElement::scalar(hbar());
        let lhs = e(1, 2).mul(&e(2, 1));
        let rhs = e(2, 1).mul(&e(1, 2)).add(&h.mul(&e(1, 1))).sub(&h.mul(&e(2, 2)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "E21*E12 + hbar*E11 - hbar*E22");
        assert_eq!(e(1, 1).mul(&e(2, 2)).len(), 1);
        assert_eq!(e(1, 2).commutator(&e(2, 3)), h.mul(&e(1, 3)));
    }

    #[test]
    fn transposes() {
        let x = e(1, 2).mul(&e(2, 3));
        assert_eq!(transpose_auto(&x, Transpose::Anti), e(3, 2).mul(&e(2, 1)));
        let y = e(1, 2).mul(&e(2, 1)).add(&e(3, 3));
        assert_eq!(transpose_auto(&transpose_auto(&y, Transpose::Minus), Transpose::Minus), y);
        assert_eq!(transpose_auto(&transpose_auto(&y, Transpose::Anti), Transpose::Anti), y);
    }

    #[test]
    fn hc_examples() {
        let x = e(1, 2).mul(&e(2, 1));
        let expect = Rf::parse("hbar*(w1 - hbar) - hbar*w2").unwrap().into_poly().unwrap();
        assert_eq!(x.hc_projection(2), expect);
        assert_eq!(PbwElement::one().hc_projection(2), Poly::one());
    }

    use crate::exactalg::Rf;
}
