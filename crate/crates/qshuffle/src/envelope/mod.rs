//! `U_hbar(gl_N)`: PBW normal forms, quantum minors, the quantum determinant
//! and comatrix, Harish-Chandra projection, transpositions, and the free
//! modules `U ⊗ (C^N)^{⊗k}` with Cayley–Hamilton and Hecke checks.

pub mod minors;
pub mod module;
pub mod pbw;
pub mod ring;

use crate::exactalg::{AlgError, Poly, Var, Q};

pub use minors::{MinorForm, UMatrix};
pub use module::FreeModuleElement;
pub use pbw::{transpose_auto, Gen, PbwElement, Transpose};
pub use ring::{NcRing, UPoly};

/// Size guards for the expensive expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits { max_n: 4, max_k: 4 }
    }
}

impl Limits {
    pub fn check(&self, n: usize, k: usize) -> Result<(), AlgError> {
        if n == 0 {
            return Err(AlgError::InvalidArgument("N must be positive".into()));
        }
        if n > self.max_n || k > self.max_k {
            return Err(AlgError::SizeGuard(format!(
                "N={n}, k={k} exceeds N≤{}, k≤{}",
                self.max_n, self.max_k
            )));
        }
        Ok(())
    }
}

fn hbar() -> Poly {
    Poly::var(Var::Hbar)
}

/// The matrix `E = (E_ij)` of generators.
pub fn generator_matrix(n: usize) -> Vec<Vec<PbwElement>> {
    (1..=n).map(|i| (1..=n).map(|j| PbwElement::gen(i, j)).collect()).collect()
}

pub fn quantum_minor(rows: &[usize], cols: &[usize], n: usize, form: MinorForm) -> Result<UPoly<PbwElement>, AlgError> {
    Limits::default().check(n, 0)?;
    minors::quantum_minor_of(&generator_matrix(n), rows, cols, form)
}

pub fn quantum_determinant(n: usize) -> Result<UPoly<PbwElement>, AlgError> {
    quantum_determinant_with(n, &Limits::default())
}

pub fn quantum_determinant_with(n: usize, lim: &Limits) -> Result<UPoly<PbwElement>, AlgError> {
    lim.check(n, 0)?;
    Ok(minors::quantum_determinant_of(&generator_matrix(n)))
}

pub fn quantum_comatrix(n: usize) -> Result<UMatrix<PbwElement>, AlgError> {
    Limits::default().check(n, 0)?;
    Ok(minors::quantum_comatrix_of(&generator_matrix(n)))
}

/// Coefficients `A_0..A_N` of `A(u) = Σ A_i u^{N-i}`.
pub fn determinant_coefficients(a: &UPoly<PbwElement>, n: usize) -> Vec<PbwElement> {
    (0..=n).map(|i| a.coeff(n - i)).collect()
}

/// Harish-Chandra projection of a polynomial in `u`, as a polynomial in `u, w, hbar`.
pub fn hc_projection_upoly(a: &UPoly<PbwElement>, n: usize) -> Poly {
    a.map(|c| c.hc_projection(n)).to_poly()
}

/// `∏ (u - w_i)`.
pub fn hc_expected_determinant(n: usize) -> Poly {
    (1..=n as u8).fold(Poly::one(), |acc, i| &acc * &(&Poly::var(Var::U) - &Poly::var(Var::W(i))))
}

pub fn transpose_upoly(a: &UPoly<PbwElement>, t: Transpose) -> UPoly<PbwElement> {
    a.map(|c| transpose_auto(c, t))
}

/// `ϖ̃(A(u)) - (-1)^N A(-u + N hbar - hbar)`.
pub fn determinant_transposition_residual(n: usize) -> Result<UPoly<PbwElement>, AlgError> {
    let a = quantum_determinant(n)?;
    let lhs = transpose_upoly(&a, Transpose::Minus);
    let mut rhs = a.subs_affine(-1, &hbar().scale(&Q::from_integer(((n as i64) - 1).into())));
    if n % 2 == 1 {
        rhs = rhs.scale(&Poly::int(-1));
    }
    Ok(lhs.sub(&rhs))
}

/// Nonzero `[A_i, E_ab]`, as `(i, a, b)`.
pub fn determinant_noncentral_witnesses(n: usize) -> Result<Vec<(usize, usize, usize)>, AlgError> {
    let coeffs = determinant_coefficients(&quantum_determinant(n)?, n);
    let mut bad = Vec::new();
    for (i, ai) in coeffs.iter().enumerate() {
        for a in 1..=n {
            for b in 1..=n {
                if !ai.commutator(&PbwElement::gen(a, b)).is_zero() {
                    bad.push((i, a, b));
                }
            }
        }
    }
    Ok(bad)
}

pub fn comatrix_identity_residual(n: usize) -> Result<UMatrix<PbwElement>, AlgError> {
    Limits::default().check(n, 0)?;
    Ok(minors::comatrix_identity_residual(&generator_matrix(n)))
}

/// `Σ_i A_i Ω^{N-i}(v_a)` for each `a`; for the dual module the operator is
/// `Ω* - hbar`.
pub fn cayley_hamilton_residual(n: usize, dual: bool) -> Result<Vec<FreeModuleElement>, AlgError> {
    cayley_hamilton_residual_with(n, dual, &Limits::default())
}

pub fn cayley_hamilton_residual_with(n: usize, dual: bool, lim: &Limits) -> Result<Vec<FreeModuleElement>, AlgError> {
    lim.check(n, 1)?;
    let coeffs = determinant_coefficients(&quantum_determinant_with(n, lim)?, n);
    let mut out = Vec::new();
    for a in 1..=n as u8 {
        let mut pow = FreeModuleElement::basis(n, dual, &[a], PbwElement::one())?;
        let mut acc = pow.left_mul(&coeffs[n]);
        for i in (0..n).rev() {
            let mut next = pow.omega(1)?;
            if dual {
                next = next.sub(&pow.scale(&hbar()));
            }
            pow = next;
            acc = acc.add(&pow.left_mul(&coeffs[i]));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Residuals of the conjugation-by-center identity expanded in powers of `u`.
///
/// For `v` the identity `A(u)^{-1} v A(u) = (u - Ω + hbar)/(u - Ω) v` becomes
/// `v A_i - Ω(v A_{i-1}) = A_i v - (Ω - hbar)(A_{i-1} v)`; for `φ` the identity
/// `A(u)^{-1} φ A(u) = (u - Ω*)/(u - Ω* + hbar) φ` becomes
/// `φ A_i - (Ω* - hbar)(φ A_{i-1}) = A_i φ - Ω*(A_{i-1} φ)`. Here `A_i v` is the
/// left action and `v A_i` the right action; `i = 0..=N+1`, every basis vector.
pub fn conjugation_identity_residuals(n: usize, dual: bool) -> Result<Vec<FreeModuleElement>, AlgError> {
    // (u - Ω + a) R = (u - Ω + b) L, coefficient of u^{N-i+1}
    let (a, b) = if dual { (hbar(), Poly::zero()) } else { (Poly::zero(), hbar()) };
    conjugation_residuals(n, dual, |v, ai, aprev| {
        let right = v.right_act(ai);
        let rprev = v.right_act(aprev);
        let left = v.left_mul(ai);
        let lprev = v.left_mul(aprev);
        let lhs = right.add(&rprev.scale(&a)).sub(&rprev.omega(1)?);
        let rhs = left.add(&lprev.scale(&b)).sub(&lprev.omega(1)?);
        Ok(lhs.sub(&rhs))
    })
}

/// Residuals of `A_i v - A_{i-1} Ω v = v A_i - (Ω - hbar) v A_{i-1}` read
/// with `A_i v` the left action and `v A_i` the right action.
pub fn conjugation_coefficient_form_as_written(n: usize) -> Result<Vec<FreeModuleElement>, AlgError> {
    conjugation_residuals(n, false, |v, ai, aprev| {
        let lhs = v.left_mul(ai).sub(&v.omega(1)?.left_mul(aprev));
        let va = v.right_act(aprev);
        let rhs = v.right_act(ai).sub(&va.omega(1)?.sub(&va.scale(&hbar())));
        Ok(lhs.sub(&rhs))
    })
}

fn conjugation_residuals(
    n: usize,
    dual: bool,
    f: impl Fn(&FreeModuleElement, &PbwElement, &PbwElement) -> Result<FreeModuleElement, AlgError>,
) -> Result<Vec<FreeModuleElement>, AlgError> {
    Limits::default().check(n, 1)?;
    let coeffs = determinant_coefficients(&quantum_determinant(n)?, n);
    let get = |i: i64| -> PbwElement {
        if i < 0 || i as usize > n {
            PbwElement::zero()
        } else {
            coeffs[i as usize].clone()
        }
    };
    let mut out = Vec::new();
    for a in 1..=n as u8 {
        let v = FreeModuleElement::basis(n, dual, &[a], PbwElement::one())?;
        for i in 0..=(n as i64 + 1) {
            out.push(f(&v, &get(i), &get(i - 1))?);
        }
    }
    Ok(out)
}

/// All multi-indices in `{1..n}^k`.
pub fn multi_indices(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n as u8).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

/// PBW monomials of degree at most `d` in `U_hbar(gl_n)`.
pub fn pbw_monomials(n: usize, d: usize) -> Vec<PbwElement> {
    let mut gens: Vec<Gen> = multi_indices(n, 2).iter().map(|p| Gen::new(p[0] as usize, p[1] as usize)).collect();
    gens.sort();
    let mut words: Vec<Vec<Gen>> = vec![Vec::new()];
    let mut layer: Vec<Vec<Gen>> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for &g in &gens {
                if w.last().is_none_or(|&l| l <= g) {
                    let mut x = w.clone();
                    x.push(g);
                    next.push(x);
                }
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words.iter().map(|w| PbwElement::word(w)).collect()
}

/// First failing degenerate affine Hecke relation for `σ_i`, `Y_i = Ω_i` on
/// `x ⊗ v_a` with PBW degree of `x` at most `d`; `κ = hbar` for `v` and
/// `κ = -hbar` for `φ`.
pub fn hecke_action_failure(n: usize, k: usize, dual: bool, d: usize) -> Result<Option<String>, AlgError> {
    Limits::default().check(n, k)?;
    let kappa = if dual { -hbar() } else { hbar() };
    for idx in multi_indices(n, k) {
        for x in pbw_monomials(n, d) {
            let b = FreeModuleElement::basis(n, dual, &idx, x.clone())?;
            let tag = |what: &str| Some(format!("{what} on ({x})*{idx:?}"));
            for s in 1..=k {
                if b.omega(s)? != b.omega_closed_form(s)? {
                    return Ok(tag(&format!("closed form of Ω_{s}")));
                }
                for t in 1..=k {
                    if b.omega(s)?.omega(t)? != b.omega(t)?.omega(s)? {
                        return Ok(tag(&format!("Ω_{s}Ω_{t} = Ω_{t}Ω_{s}")));
                    }
                }
            }
            for i in 1..k {
                let lhs = b.omega(i + 1)?;
                let rhs = b.sigma(i)?.omega(i)?.sigma(i)?.sub(&b.sigma(i)?.scale(&kappa));
                if lhs != rhs {
                    return Ok(tag(&format!("Y_{} = σ_{i} Y_{i} σ_{i} - κ σ_{i}", i + 1)));
                }
                if b.sigma(i)?.sigma(i)? != b {
                    return Ok(tag(&format!("σ_{i}^2 = 1")));
                }
                for j in 1..=k {
                    if j != i && j != i + 1 && b.omega(j)?.sigma(i)? != b.sigma(i)?.omega(j)? {
                        return Ok(tag(&format!("σ_{i} Ω_{j} = Ω_{j} σ_{i}")));
                    }
                }
                if i + 1 < k {
                    let l = b.sigma(i)?.sigma(i + 1)?.sigma(i)?;
                    let r = b.sigma(i + 1)?.sigma(i)?.sigma(i + 1)?;
                    if l != r {
                        return Ok(tag(&format!("braid relation at {i}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, j: usize) -> PbwElement {
        PbwElement::gen(i, j)
    }

    fn h() -> PbwElement {
        PbwElement::scalar(hbar())
    }

    #[test]
    fn minor_examples() {
        let m = quantum_minor(&[1], &[2], 2, MinorForm::Row).unwrap();
        assert_eq!(m, UPoly::constant(e(1, 2)));
        let z = quantum_minor(&[1, 1], &[1, 2], 2, MinorForm::Row).unwrap();
        assert!(z.is_zero());
        // (u + E11)(u - hbar + E22) - E21 E12
        let t11 = UPoly::linear(e(1, 1), PbwElement::one());
        let t22 = UPoly::linear(e(2, 2).sub(&h()), PbwElement::one());
        let expect = t11.mul(&t22).sub(&UPoly::constant(e(2, 1).mul(&e(1, 2))));
        assert_eq!(quantum_minor(&[1, 2], &[1, 2], 2, MinorForm::Row).unwrap(), expect);
        assert!(quantum_minor(&[1], &[1, 2], 2, MinorForm::Row).is_err());
    }

    #[test]
    fn determinant_examples() {
        let a1 = quantum_determinant(1).unwrap();
        assert_eq!(a1, UPoly::linear(e(1, 1).scale(&Poly::int(-1)), PbwElement::one()));
        let a2 = quantum_determinant(2).unwrap();
        // (u - E11 - hbar)(u - E22) - E21 E12
        let f = UPoly::linear(e(1, 1).add(&h()).scale(&Poly::int(-1)), PbwElement::one());
        let g = UPoly::linear(e(2, 2).scale(&Poly::int(-1)), PbwElement::one());
        assert_eq!(a2, f.mul(&g).sub(&UPoly::constant(e(2, 1).mul(&e(1, 2)))));
        assert!(quantum_determinant(5).is_err());
    }

    #[test]
    fn small_rank_identities() {
        assert!(determinant_noncentral_witnesses(2).unwrap().is_empty());
        assert_eq!(hc_projection_upoly(&quantum_determinant(2).unwrap(), 2), hc_expected_determinant(2));
        assert!(determinant_transposition_residual(2).unwrap().is_zero());
        assert!(minors::umatrix_is_zero(&comatrix_identity_residual(1).unwrap()));
        assert!(minors::umatrix_is_zero(&comatrix_identity_residual(2).unwrap()));
        assert!(cayley_hamilton_residual(2, false).unwrap().iter().all(|r| r.is_zero()));
        assert!(cayley_hamilton_residual(1, true).unwrap().iter().all(|r| r.is_zero()));
    }

    #[test]
    fn pbw_basis_count() {
        // 1 + 4 + 10 monomials for gl_2 up to degree 2
        assert_eq!(pbw_monomials(2, 2).len(), 15);
    }
}
