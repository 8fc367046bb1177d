//! Quantum minors, quantum determinant and comatrix of `T(u) = u + E`,
//! over any matrix `E` with entries in an [`NcRing`].

use crate::exactalg::{AlgError, Poly, Var, Q};
use crate::permops::{all_perms, sign};

use super::ring::{NcRing, UPoly};

/// Matrix with `UPoly` entries, indexed from 0.
pub type UMatrix<A> = Vec<Vec<UPoly<A>>>;

/// Which of the two equivalent sums defines the minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorForm {
    /// Permute the upper indices, shifts `u, u - hbar, ..` left to right.
    Row,
    /// Permute the lower indices, shifts `.., u - hbar, u` left to right.
    Column,
}

fn hbar() -> Poly {
    Poly::var(Var::Hbar)
}

/// `T_ab(u - j hbar)` for 1-based `a, b`.
pub fn t_entry<A: NcRing>(e: &[Vec<A>], a: usize, b: usize, j: usize) -> UPoly<A> {
    if a == b {
        let shift = hbar().scale(&Q::from_integer((-(j as i64)).into()));
        UPoly::linear(e[a - 1][b - 1].add(&A::from_scalar(shift)), A::one())
    } else {
        UPoly::constant(e[a - 1][b - 1].clone())
    }
}

/// `T^{a_1..a_m}_{b_1..b_m}(u)`; `rows` are the upper indices.
pub fn quantum_minor_of<A: NcRing>(
    e: &[Vec<A>],
    rows: &[usize],
    cols: &[usize],
    form: MinorForm,
) -> Result<UPoly<A>, AlgError> {
    if rows.len() != cols.len() {
        return Err(AlgError::RankMismatch(rows.len(), cols.len()));
    }
    let n = e.len();
    if let Some(&bad) = rows.iter().chain(cols).find(|&&i| i == 0 || i > n) {
        return Err(AlgError::InvalidArgument(format!("index {bad} outside 1..{n}")));
    }
    let m = rows.len();
    let mut acc = UPoly::zero();
    for p in all_perms(m) {
        let mut prod = UPoly::constant(A::one());
        for t in 0..m {
            let s = p[t] as usize - 1;
            let f = match form {
                MinorForm::Row => t_entry(e, rows[s], cols[t], t),
                MinorForm::Column => t_entry(e, rows[t], cols[s], m - 1 - t),
            };
            prod = prod.mul(&f);
        }
        acc = if sign(&p) > 0 { acc.add(&prod) } else { acc.sub(&prod) };
    }
    Ok(acc)
}

/// `A(u) = (-1)^N T^{1..N}_{1..N}(-u + N hbar - hbar)`.
pub fn quantum_determinant_of<A: NcRing>(e: &[Vec<A>]) -> UPoly<A> {
    let n = e.len();
    let idx: Vec<usize> = (1..=n).collect();
    let minor = quantum_minor_of(e, &idx, &idx, MinorForm::Row).expect("square");
    let shift = hbar().scale(&Q::from_integer(((n as i64) - 1).into()));
    let a = minor.subs_affine(-1, &shift);
    if n % 2 == 1 {
        a.scale(&Poly::int(-1))
    } else {
        a
    }
}

/// `Ť_ij(u) = (-1)^{i+j} T^{1..ĵ..N}_{1..î..N}(u)`.
pub fn quantum_comatrix_of<A: NcRing>(e: &[Vec<A>]) -> UMatrix<A> {
    let n = e.len();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
                    let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
                    let m = quantum_minor_of(e, &rows, &cols, MinorForm::Row).expect("square");
                    if (i + j) % 2 == 1 {
                        m.scale(&Poly::int(-1))
                    } else {
                        m
                    }
                })
                .collect()
        })
        .collect()
}

/// `T(u)` as a matrix of `UPoly`s.
pub fn t_matrix<A: NcRing>(e: &[Vec<A>]) -> UMatrix<A> {
    let n = e.len();
    (1..=n).map(|a| (1..=n).map(|b| t_entry(e, a, b, 0)).collect()).collect()
}

pub fn umatrix_mul<A: NcRing>(a: &UMatrix<A>, b: &UMatrix<A>) -> UMatrix<A> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..b.len()).fold(UPoly::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))
                })
                .collect()
        })
        .collect()
}

pub fn umatrix_subs_affine<A: NcRing>(a: &UMatrix<A>, s: i64, t: &Poly) -> UMatrix<A> {
    a.iter().map(|r| r.iter().map(|p| p.subs_affine(s, t)).collect()).collect()
}

/// Entries of `Ť(u + N hbar - hbar) T(u) - (-1)^N A(-u) Id`; all zero when the
/// comatrix identity holds.
pub fn comatrix_identity_residual<A: NcRing>(e: &[Vec<A>]) -> UMatrix<A> {
    let n = e.len();
    let shift = hbar().scale(&Q::from_integer(((n as i64) - 1).into()));
    let lhs = umatrix_mul(&umatrix_subs_affine(&quantum_comatrix_of(e), 1, &shift), &t_matrix(e));
    let mut a = quantum_determinant_of(e).subs_affine(-1, &Poly::zero());
    if n % 2 == 1 {
        a = a.scale(&Poly::int(-1));
    }
    lhs.into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, p)| if i == j { p.sub(&a) } else { p })
                .collect()
        })
        .collect()
}

/// True if every entry is zero.
pub fn umatrix_is_zero<A: NcRing>(m: &UMatrix<A>) -> bool {
    m.iter().all(|r| r.iter().all(|p| p.is_zero()))
}
