//! The hbar-Weyl algebra on `Mat_{N×N}`: polynomial differential operators
//! in `x_ij`, `∂_ij` with `∂_ij x_kl = x_kl ∂_ij + hbar δ_ik δ_jl`, the
//! matrices `E^R`, `E^L`, and the left/right comparison identities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::envelope::minors::{quantum_comatrix_of, quantum_determinant_of, umatrix_mul, umatrix_subs_affine, UMatrix};
use crate::envelope::{NcRing, UPoly};
use crate::exactalg::{Poly, Var, Q};

/// Coordinate `(i, j)` of the matrix space, 1-based.
pub type Coord = (u8, u8);

/// Normal-ordered monomial `x^a ∂^b` with sparse exponent lists.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMono {
    pub x: Vec<(Coord, u8)>,
    pub d: Vec<(Coord, u8)>,
}

fn exp_of(v: &[(Coord, u8)], c: Coord) -> u8 {
    v.iter().find(|(k, _)| *k == c).map_or(0, |(_, e)| *e)
}

fn merge_exps(a: &[(Coord, u8)], b: &[(Coord, u8)]) -> Vec<(Coord, u8)> {
    let mut m: BTreeMap<Coord, u8> = a.iter().copied().collect();
    for &(c, e) in b {
        *m.entry(c).or_insert(0) += e;
    }
    m.into_iter().filter(|(_, e)| *e > 0).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylElement {
    terms: BTreeMap<WeylMono, Poly>,
}

fn hbar() -> Poly {
    Poly::var(Var::Hbar)
}

impl WeylElement {
    pub fn zero() -> WeylElement {
        WeylElement::default()
    }

    pub fn scalar(c: Poly) -> WeylElement {
        let mut w = WeylElement::zero();
        w.add_term(WeylMono { x: vec![], d: vec![] }, c);
        w
    }

    pub fn x(i: usize, j: usize) -> WeylElement {
        let mut w = WeylElement::zero();
        w.add_term(
            WeylMono {
                x: vec![((i as u8, j as u8), 1)],
                d: vec![],
            },
            Poly::one(),
        );
        w
    }

    pub fn d(i: usize, j: usize) -> WeylElement {
        let mut w = WeylElement::zero();
        w.add_term(
            WeylMono {
                x: vec![],
                d: vec![((i as u8, j as u8), 1)],
            },
            Poly::one(),
        );
        w
    }

    pub fn terms(&self) -> &BTreeMap<WeylMono, Poly> {
        &self.terms
    }

    fn add_term(&mut self, m: WeylMono, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Poly::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// `(x^a ∂^b)(x^c ∂^e)`: reorders `∂^b x^c` coordinatewise by
    /// `∂^b x^c = Σ_k C(b,k) c!/(c-k)! hbar^k x^{c-k} ∂^{b-k}`.
    fn mono_mul(a: &WeylMono, b: &WeylMono) -> Vec<(WeylMono, Poly)> {
        // coordinates where reordering produces lower terms
        let shared: Vec<(Coord, u8, u8)> = a
            .d
            .iter()
            .filter_map(|&(c, db)| {
                let xc = exp_of(&b.x, c);
                (xc > 0).then_some((c, db, xc))
            })
            .collect();
        let mut out = Vec::new();
        let mut ks = vec![0u8; shared.len()];
        loop {
            let mut coef = Q::from_integer(1.into());
            let mut dx: Vec<(Coord, u8)> = Vec::new();
            let mut total = 0u32;
            for (t, &(c, db, xc)) in shared.iter().enumerate() {
                let k = ks[t];
                let falling: BigInt = (0..k as u32).map(|s| BigInt::from(xc as u32 - s)).product();
                coef *= Q::from_integer(binomial(BigInt::from(db), BigInt::from(k)) * falling);
                if k > 0 {
                    dx.push((c, k));
                }
                total += k as u32;
            }
            let sub = |v: &[(Coord, u8)]| -> Vec<(Coord, u8)> {
                v.iter()
                    .map(|&(c, e)| (c, e - exp_of(&dx, c)))
                    .filter(|(_, e)| *e > 0)
                    .collect()
            };
            let m = WeylMono {
                x: merge_exps(&a.x, &sub(&b.x)),
                d: merge_exps(&sub(&a.d), &b.d),
            };
            out.push((m, hbar().pow(total).scale(&coef)));
            // next multi-index k with 0 ≤ k_t ≤ min(db, xc)
            let mut t = 0;
            loop {
                if t == shared.len() {
                    return out;
                }
                let (_, db, xc) = shared[t];
                if ks[t] < db.min(xc) {
                    ks[t] += 1;
                    break;
                }
                ks[t] = 0;
                t += 1;
            }
        }
    }

    pub fn mul(&self, o: &WeylElement) -> WeylElement {
        let mut r = WeylElement::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let c = ca * cb;
                for (m, k) in WeylElement::mono_mul(ma, mb) {
                    r.add_term(m, &k * &c);
                }
            }
        }
        r
    }

    pub fn add(&self, o: &WeylElement) -> WeylElement {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Poly) -> WeylElement {
        let mut r = WeylElement::zero();
        for (m, d) in &self.terms {
            r.add_term(m.clone(), d * c);
        }
        r
    }

    pub fn sub(&self, o: &WeylElement) -> WeylElement {
        self.add(&o.scale(&Poly::int(-1)))
    }

    pub fn commutator(&self, o: &WeylElement) -> WeylElement {
        self.mul(o).sub(&o.mul(self))
    }
}

impl NcRing for WeylElement {
    fn zero() -> Self {
        WeylElement::zero()
    }
    fn from_scalar(c: Poly) -> Self {
        WeylElement::scalar(c)
    }
    fn add(&self, o: &Self) -> Self {
        WeylElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        WeylElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        WeylElement::mul(self, o)
    }
    fn scale(&self, c: &Poly) -> Self {
        WeylElement::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |m: &WeylMono| -> String {
            let mut parts = Vec::new();
            for (pre, v) in [("x", &m.x), ("d", &m.d)] {
                for &((i, j), e) in v {
                    parts.push(if e == 1 { format!("{pre}{i}{j}") } else { format!("{pre}{i}{j}^{e}") });
                }
            }
            parts.join("*")
        };
        crate::envelope::ring::fmt_terms(f, self.terms.iter().rev().map(|(m, c)| (word(m), c)))
    }
}

/// Square matrix of Weyl elements.
pub type WeylMatrix = Vec<Vec<WeylElement>>;

/// Which invariant vector fields to use in [`build_e`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    R,
    L,
}

/// `E^R_ij = Σ_α x_{αi} ∂_{αj}`, `E^L_ij = -Σ_α x_{jα} ∂_{iα}`.
pub fn build_e(side: Side, n: usize) -> WeylMatrix {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    (1..=n).fold(WeylElement::zero(), |acc, a| match side {
                        Side::R => acc.add(&WeylElement::x(a, i).mul(&WeylElement::d(a, j))),
                        Side::L => acc.sub(&WeylElement::x(j, a).mul(&WeylElement::d(i, a))),
                    })
                })
                .collect()
        })
        .collect()
}

/// `X` with `X_ij = x_ji`.
pub fn x_matrix(n: usize) -> WeylMatrix {
    (1..=n).map(|i| (1..=n).map(|j| WeylElement::x(j, i)).collect()).collect()
}

fn mat_mul(a: &WeylMatrix, b: &WeylMatrix) -> WeylMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(WeylElement::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect())
        .collect()
}

fn constant_umatrix(a: &WeylMatrix) -> UMatrix<WeylElement> {
    a.iter().map(|r| r.iter().map(|x| UPoly::constant(x.clone())).collect()).collect()
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub pass: bool,
    /// First failing matrix entry (1-based) or coefficient.
    pub witness: Option<String>,
}

fn first_nonzero_entry<A: NcRing>(m: &UMatrix<A>) -> Option<String> {
    for (i, r) in m.iter().enumerate() {
        for (j, p) in r.iter().enumerate() {
            if !p.is_zero() {
                return Some(format!("entry ({}, {})", i + 1, j + 1));
            }
        }
    }
    None
}

fn report(name: &str, witness: Option<String>) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        pass: witness.is_none(),
        witness,
    }
}

/// Checks the gl_N relations for `E^R`, `E^L`, and `[E^R_ab, E^L_cd] = 0`.
pub fn verify_gl_relations(n: usize) -> Vec<IdentityReport> {
    let er = build_e(Side::R, n);
    let el = build_e(Side::L, n);
    let mut out = Vec::new();
    for (name, m) in [("gl relations E^R", &er), ("gl relations E^L", &el)] {
        let mut w = None;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let mut rhs = WeylElement::zero();
                        if b == c {
                            rhs = rhs.add(&m[a][d]);
                        }
                        if d == a {
                            rhs = rhs.sub(&m[c][b]);
                        }
                        if m[a][b].commutator(&m[c][d]) != rhs.scale(&hbar()) {
                            w = Some(format!("[E{}{}, E{}{}]", a + 1, b + 1, c + 1, d + 1));
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push(report(name, w));
    }
    let mut w = None;
    'o: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if !er[a][b].commutator(&el[c][d]).terms.is_empty() {
                        w = Some(format!("[E^R{}{}, E^L{}{}]", a + 1, b + 1, c + 1, d + 1));
                        break 'o;
                    }
                }
            }
        }
    }
    out.push(report("left and right commute", w));
    out
}

/// Identities (i) `X E^L = (-E^R + N hbar) X`, (ii) `A^L(u) = (-1)^N A^R(-u + N hbar - hbar)`,
/// (iii) `Ť^R(-u + N hbar - hbar) X = (-1)^{N+1} X Ť^L(u)`.
pub fn verify_lr_identities(n: usize) -> Vec<IdentityReport> {
    let er = build_e(Side::R, n);
    let el = build_e(Side::L, n);
    let x = x_matrix(n);
    let nh = hbar().scale(&Q::from_integer((n as i64).into()));
    let shift = hbar().scale(&Q::from_integer((n as i64 - 1).into()));
    let sign = if n % 2 == 1 { Poly::int(-1) } else { Poly::int(1) };

    let shifted: WeylMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = er[i][j].scale(&Poly::int(-1));
                    if i == j {
                        e = e.add(&WeylElement::scalar(nh.clone()));
                    }
                    e
                })
                .collect()
        })
        .collect();
    let lhs = mat_mul(&x, &el);
    let rhs = mat_mul(&shifted, &x);
    let diff: UMatrix<WeylElement> = (0..n)
        .map(|i| (0..n).map(|j| UPoly::constant(lhs[i][j].sub(&rhs[i][j]))).collect())
        .collect();
    let r1 = report("(i) X E^L = (-E^R + N hbar) X", first_nonzero_entry(&diff));

    let al = quantum_determinant_of(&el);
    let ar = quantum_determinant_of(&er).subs_affine(-1, &shift).scale(&sign);
    let d2 = al.sub(&ar);
    let w2 = d2
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .map(|p| format!("coefficient of u^{p}"));
    let r2 = report("(ii) A^L(u) = (-1)^N A^R(-u + N hbar - hbar)", w2);

    let tr = umatrix_subs_affine(&quantum_comatrix_of(&er), -1, &shift);
    let tl = quantum_comatrix_of(&el);
    let xu = constant_umatrix(&x);
    let l3 = umatrix_mul(&tr, &xu);
    let sign3 = if n % 2 == 1 { Poly::int(1) } else { Poly::int(-1) };
    let r3m = umatrix_mul(&xu, &tl);
    let diff3: UMatrix<WeylElement> = l3
        .iter()
        .zip(&r3m)
        .map(|(a, b)| a.iter().zip(b).map(|(p, q)| p.sub(&q.scale(&sign3))).collect())
        .collect();
    let r3 = report("(iii) Ť^R(-u + N hbar - hbar) X = (-1)^{N+1} X Ť^L(u)", first_nonzero_entry(&diff3));
    vec![r1, r2, r3]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_mul_examples() {
        let x = WeylElement::x(1, 1);
        let d = WeylElement::d(1, 1);
        assert_eq!(d.mul(&x), x.mul(&d).add(&WeylElement::scalar(hbar())));
        let x12 = WeylElement::x(1, 2);
        assert_eq!(d.mul(&x12), x12.mul(&d));
        let xd = x.mul(&d);
        let expect = x.mul(&x).mul(&d).mul(&d).add(&xd.scale(&hbar()));
        assert_eq!(xd.mul(&xd), expect);
        assert_eq!(xd.mul(&xd).to_string(), "x11^2*d11^2 + hbar*x11*d11");
    }

    #[test]
    fn weyl_associative_on_higher_powers() {
        let a = WeylElement::d(1, 1).mul(&WeylElement::d(1, 1)).add(&WeylElement::x(1, 2));
        let b = WeylElement::x(1, 1).mul(&WeylElement::x(1, 1)).mul(&WeylElement::d(1, 2));
        let c = WeylElement::x(1, 1).add(&WeylElement::d(1, 2).mul(&WeylElement::x(1, 2)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn rank_one() {
        let er = build_e(Side::R, 1);
        let el = build_e(Side::L, 1);
        assert_eq!(el[0][0], er[0][0].scale(&Poly::int(-1)));
        assert!(verify_lr_identities(1).iter().all(|r| r.pass));
    }

    #[test]
    fn rank_two_brackets() {
        let er = build_e(Side::R, 2);
        let el = build_e(Side::L, 2);
        assert_eq!(er[0][0].commutator(&er[0][1]), er[0][1].scale(&hbar()));
        assert!(er[0][1].commutator(&el[1][0]).terms.is_empty());
        assert!(verify_gl_relations(2).iter().all(|r| r.pass));
    }
}
