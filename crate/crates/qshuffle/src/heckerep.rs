//! Polynomial representation of the degenerate affine Hecke algebra on
//! `Q[κ, hbar][Y_1..Y_k]`: Demazure-type operators, κ-(anti)symmetrizers,
//! rational Hall–Littlewood polynomials, Schur polynomials and deformed
//! power sums.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactalg::{qi, AlgError, Monomial, Poly, Rf, Var, Q};
use crate::permops::{all_perms, factorial, perm_slot_map, sign, Perm, Sign};

pub fn y(i: usize) -> Poly {
    Poly::var(Var::Y(i as u8))
}

/// Applies `Y_i -> Y_{σ(i)}`.
pub fn permute_y(p: &[u8], f: &Poly) -> Poly {
    f.rename(&perm_slot_map(p, Var::Y))
}

fn check_rank(k: usize) -> Result<(), AlgError> {
    if k == 0 || k > crate::exactalg::var::MAX_INDEX as usize {
        return Err(AlgError::InvalidArgument(format!("rank {k} out of range")));
    }
    Ok(())
}

/// `σ_i^κ f = P f + κ (f - P f)/(Y_i - Y_{i+1})`.
pub fn apply_sigma(i: usize, kappa: &Poly, f: &Poly) -> Poly {
    let (a, b) = (Var::Y(i as u8), Var::Y(i as u8 + 1));
    let pf = f.swap_vars(a, b);
    let diff = f - &pf;
    if diff.is_zero() {
        return pf;
    }
    let dd = diff
        .div_exact(&(&Poly::var(a) - &Poly::var(b)))
        .expect("antisymmetric part divisible by Y_i - Y_{i+1}");
    &pf + &(kappa * &dd)
}

/// [`apply_sigma`] for rational input; fails unless the input is a polynomial.
pub fn apply_sigma_rf(i: usize, kappa: &Poly, f: &Rf) -> Result<Poly, AlgError> {
    let p = f.clone().into_poly()?;
    Ok(apply_sigma(i, kappa, &p))
}

/// Reduced word `[i_1, .., i_l]` with `p = s_{i_1} ∘ … ∘ s_{i_l}`.
pub fn reduced_word(p: &[u8]) -> Vec<usize> {
    // bubble sort p to the identity by right multiplication with s_i
    let mut cur: Vec<u8> = p.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    // p ∘ s_{j_1} ∘ … ∘ s_{j_l} = id, so p = s_{j_l} ∘ … ∘ s_{j_1}
    word
}

/// Action `σ^κ` of a permutation through a reduced word.
pub fn apply_perm(p: &[u8], kappa: &Poly, f: &Poly) -> Poly {
    let mut out = f.clone();
    for &i in reduced_word(p).iter().rev() {
        out = apply_sigma(i, kappa, &out);
    }
    out
}

/// `∏_{i<j} (Y_i - Y_j + c)`.
pub fn shifted_vandermonde(k: usize, c: &Poly) -> Poly {
    let mut p = Poly::one();
    for i in 1..=k {
        for j in i + 1..=k {
            p = &p * &(&(&y(i) - &y(j)) + c);
        }
    }
    p
}

/// `Σ_σ sgn(σ) σ(f)` over `S_k`.
pub fn antisymmetrize(k: usize, f: &Poly) -> Poly {
    let mut acc = Vec::new();
    for p in all_perms(k) {
        let t = permute_y(&p, f);
        acc.push(if sign(&p) > 0 { t } else { -t });
    }
    sum_polys(acc)
}

/// `Σ_σ σ(f)` over `S_k`.
pub fn symmetrize(k: usize, f: &Poly) -> Poly {
    sum_polys(all_perms(k).iter().map(|p| permute_y(p, f)).collect())
}

pub(crate) fn sum_polys(mut v: Vec<Poly>) -> Poly {
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            next.push(match it.next() {
                Some(b) => &a + &b,
                None => a,
            });
        }
        v = next;
    }
    v.pop().unwrap_or_else(Poly::zero)
}

/// Closed forms of the κ-symmetrizer `e_k^κ` (`Plus`) and the
/// κ-antisymmetrizer `(e_k^-)^κ` (`Minus`) on a polynomial.
pub fn apply_symmetrizer(k: usize, kappa: &Poly, s: Sign, f: &Poly) -> Result<Poly, AlgError> {
    check_rank(k)?;
    let delta = shifted_vandermonde(k, &Poly::zero());
    let inv_fact = Q::from_integer(factorial(k).into()).recip();
    match s {
        Sign::Plus => {
            let g = &shifted_vandermonde(k, kappa) * f;
            let num = antisymmetrize(k, &g);
            let q = num
                .div_exact(&delta)
                .expect("antisymmetric polynomial divisible by the Vandermonde");
            Ok(q.scale(&inv_fact))
        }
        Sign::Minus => {
            let num = antisymmetrize(k, f);
            let q = num
                .div_exact(&delta)
                .expect("antisymmetric polynomial divisible by the Vandermonde");
            Ok((&shifted_vandermonde(k, &-kappa) * &q).scale(&inv_fact))
        }
    }
}

/// `(1/k!) Σ_σ (±1)^σ σ^κ f` through the word action.
pub fn symmetrizer_via_words(k: usize, kappa: &Poly, s: Sign, f: &Poly) -> Poly {
    let mut cache: HashMap<Perm, Poly> = HashMap::new();
    let mut terms = Vec::new();
    for p in all_perms(k) {
        let img = cache
            .entry(p.clone())
            .or_insert_with(|| apply_perm(&p, kappa, f))
            .clone();
        terms.push(match s {
            Sign::Minus if sign(&p) < 0 => -img,
            _ => img,
        });
    }
    sum_polys(terms).scale(&Q::from_integer(factorial(k).into()).recip())
}

/// True if `f` is invariant under all adjacent swaps of `Y_1..Y_k`.
pub fn is_symmetric(k: usize, f: &Poly) -> bool {
    (1..k).all(|i| f.swap_vars(Var::Y(i as u8), Var::Y(i as u8 + 1)) == *f)
}

/// A weakly decreasing sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition, AlgError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgError::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Parses comma-separated parts such as `2,1,0`.
    pub fn parse(s: &str) -> Result<Partition, AlgError> {
        let parts: Result<Vec<u32>, _> = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<u32>())
            .collect();
        let parts =
            parts.map_err(|e| AlgError::InvalidArgument(format!("bad partition '{s}': {e}")))?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `k`.
    pub fn padded(&self, k: usize) -> Result<Vec<u32>, AlgError> {
        let nz: Vec<u32> = self.0.iter().copied().filter(|&p| p > 0).collect();
        if nz.len() > k {
            return Err(AlgError::InvalidArgument(format!(
                "partition {:?} longer than {k}",
                self.0
            )));
        }
        let mut v = nz;
        v.resize(k, 0);
        Ok(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A polynomial times an integer power of `psi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiPoly {
    pub psi_exp: i64,
    pub poly: Poly,
}

impl fmt::Display for PsiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.psi_exp == 0 || self.poly.is_zero() {
            write!(f, "{}", self.poly)
        } else {
            write!(f, "psi^{}*({})", self.psi_exp, self.poly)
        }
    }
}

fn monomial_y(exps: &[u32]) -> Poly {
    let mut m = Poly::one();
    for (i, &e) in exps.iter().enumerate() {
        m = &m * &y(i + 1).pow(e);
    }
    m
}

/// Rational Hall–Littlewood polynomial `psi^{-|λ|} e_k^hbar(Y^λ)`.
pub fn hall_littlewood_rational(lambda: &Partition, k: usize, hbar: &Poly) -> Result<PsiPoly, AlgError> {
    let parts = lambda.padded(k)?;
    let f = monomial_y(&parts);
    let poly = apply_symmetrizer(k, hbar, Sign::Plus, &f)?;
    Ok(PsiPoly {
        psi_exp: -(lambda.size() as i64),
        poly,
    })
}

/// Schur polynomial `s_λ(Y_1..Y_k)` as a ratio of alternants.
pub fn schur(lambda: &Partition, k: usize) -> Result<Poly, AlgError> {
    check_rank(k)?;
    let parts = lambda.padded(k)?;
    let shifted: Vec<u32> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (k - 1 - i) as u32)
        .collect();
    let num = antisymmetrize(k, &monomial_y(&shifted));
    let den = shifted_vandermonde(k, &Poly::zero());
    Ok(num.div_exact(&den).expect("alternant divisible by Vandermonde"))
}

/// Deformed power sum `Σ_i Y_i^a ∏_{j≠i} (Y_i - Y_j + hbar)/(Y_i - Y_j)`.
pub fn deformed_power_sum(a: u32, k: usize, hbar: &Poly) -> Result<Poly, AlgError> {
    check_rank(k)?;
    let h = Rf::from_poly(hbar.clone());
    let mut terms = Vec::new();
    for i in 1..=k {
        let mut t = Rf::from_poly(y(i).pow(a));
        for j in 1..=k {
            if j != i {
                let d = Rf::from_poly(&y(i) - &y(j));
                t = &t * &(&d + &h).checked_div(&d)?;
            }
        }
        terms.push(t);
    }
    crate::permops::sum_rf(terms).into_poly()
}

/// Coefficient of `u^{-a-1}` in `(∏_i (u - Y_i + hbar)/(u - Y_i) - 1)/hbar`,
/// computed by expanding each factor as `1 + hbar Σ_b Y_i^b u^{-b-1}`.
pub fn power_sum_from_generating_function(a: u32, k: usize, hbar: &Poly) -> Poly {
    // series in t = 1/u, truncated after t^{a+1}
    let n = a as usize + 2;
    let mut series: Vec<Poly> = vec![Poly::zero(); n];
    series[0] = Poly::one();
    for i in 1..=k {
        let mut factor: Vec<Poly> = vec![Poly::zero(); n];
        factor[0] = Poly::one();
        for (b, slot) in factor.iter_mut().enumerate().skip(1) {
            *slot = hbar * &y(i).pow(b as u32 - 1);
        }
        let mut next = vec![Poly::zero(); n];
        for (p, sp) in series.iter().enumerate() {
            if sp.is_zero() {
                continue;
            }
            for (q, fq) in factor.iter().enumerate() {
                if p + q < n && !fq.is_zero() {
                    next[p + q] += &(sp * fq);
                }
            }
        }
        series = next;
    }
    series[a as usize + 1]
        .div_exact(hbar)
        .expect("every correction term carries hbar")
}

/// Expansion of a symmetric polynomial in the elementary symmetric
/// polynomials `e_1..e_k`: exponent vector of `e` to a coefficient free of `Y`.
pub fn to_elementary(f: &Poly, k: usize) -> Result<BTreeMap<Vec<u32>, Poly>, AlgError> {
    if !is_symmetric(k, f) {
        return Err(AlgError::NotSymmetric(f.to_string()));
    }
    let y_slots: Vec<usize> = (1..=k).map(|i| Var::Y(i as u8).slot()).collect();
    let e: Vec<Poly> = (1..=k).map(|j| elementary(j, k)).collect();
    let mut rest = f.clone();
    let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    while !rest.is_zero() {
        // leading Y-exponent in lex order Y_1 > Y_2 > …
        let lead = rest
            .terms()
            .iter()
            .map(|(m, _)| y_slots.iter().map(|&s| m.exp(s) as u32).collect::<Vec<u32>>())
            .max()
            .expect("nonzero");
        // coefficient of that Y-exponent: a polynomial in the other variables
        let mut coef_terms = Vec::new();
        for (m, c) in rest.terms() {
            let ex: Vec<u32> = y_slots.iter().map(|&s| m.exp(s) as u32).collect();
            if ex == lead {
                let mut exps = *m.exps();
                for &s in &y_slots {
                    exps[s] = 0;
                }
                coef_terms.push((Monomial::from_exps(exps), c.clone()));
            }
        }
        let coef = Poly::from_terms(coef_terms);
        let mut ev = vec![0u32; k];
        let mut prod = Poly::one();
        for j in 0..k {
            let next = if j + 1 < k { lead[j + 1] } else { 0 };
            ev[j] = lead[j] - next;
            prod = &prod * &e[j].pow(ev[j]);
        }
        rest = &rest - &(&prod * &coef);
        *out.entry(ev).or_insert_with(Poly::zero) += &coef;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Elementary symmetric polynomial `e_j(Y_1..Y_k)`.
pub fn elementary(j: usize, k: usize) -> Poly {
    let mut e: Vec<Poly> = vec![Poly::one()];
    for i in 1..=k {
        let mut next = vec![Poly::zero(); e.len() + 1];
        for (d, p) in e.iter().enumerate() {
            next[d] += p;
            next[d + 1] += &(p * &y(i));
        }
        e = next;
    }
    e.get(j).cloned().unwrap_or_else(Poly::zero)
}

/// Basis change from `p^hbar_1..p^hbar_k` to `e_1..e_k`.
#[derive(Clone, Debug)]
pub struct PowerSumTransition {
    /// `linear[a-1][b-1]`: coefficient of `e_b` alone in `p^hbar_a` at `hbar = 0`.
    pub linear: Vec<Vec<Q>>,
    pub linear_det: Q,
    /// True if each `p^hbar_a` involves only `e_1..e_a` and is linear in `e_a`
    /// with a nonzero scalar coefficient; then the change of variables is
    /// polynomial with polynomial inverse.
    pub triangular_invertible: bool,
}

pub fn power_sum_transition(k: usize, hbar: &Poly) -> Result<PowerSumTransition, AlgError> {
    let mut linear = vec![vec![Q::from_integer(0.into()); k]; k];
    let mut triangular = true;
    let zero_h = [(Var::Hbar, Poly::zero()), (Var::Kappa, Poly::zero())];
    for a in 1..=k {
        let p = deformed_power_sum(a as u32, k, hbar)?;
        let full = to_elementary(&p, k)?;
        for (ev, c) in &full {
            if ev.iter().skip(a).any(|&e| e > 0) {
                triangular = false;
            }
            if ev[a - 1] > 1 || (ev[a - 1] == 1 && ev.iter().sum::<u32>() > 1) {
                triangular = false;
            }
            if ev[a - 1] == 1 && ev.iter().sum::<u32>() == 1 && c.as_constant().is_none() {
                triangular = false;
            }
        }
        let classical = to_elementary(&p.subs(&zero_h), k)?;
        for (ev, c) in &classical {
            if ev.iter().sum::<u32>() == 1 {
                let b = ev.iter().position(|&e| e == 1).expect("one entry");
                linear[a - 1][b] = c.as_constant().unwrap_or_else(|| qi(0));
            }
        }
    }
    let linear_det = determinant(&linear);
    Ok(PowerSumTransition {
        triangular_invertible: triangular && linear_det != qi(0),
        linear,
        linear_det,
    })
}

/// Determinant of a small rational matrix by elimination.
pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = qi(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != qi(0)) else {
            return qi(0);
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for cc in c..n {
                let t = &f * &a[c][cc];
                a[r][cc] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Rf::parse(s).unwrap().into_poly().unwrap()
    }

    fn kappa() -> Poly {
        Poly::var(Var::Kappa)
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(apply_sigma(1, &kappa(), &Poly::one()), Poly::one());
        assert_eq!(apply_sigma(1, &kappa(), &p("Y1")), p("Y2 + kappa"));
        assert_eq!(apply_sigma(1, &kappa(), &p("Y1*Y2")), p("Y1*Y2"));
        assert!(apply_sigma_rf(1, &kappa(), &Rf::parse("1/Y1").unwrap()).is_err());
    }

    #[test]
    fn symmetrizer_examples() {
        let k = kappa();
        assert_eq!(apply_symmetrizer(2, &k, Sign::Plus, &Poly::one()).unwrap(), Poly::one());
        assert_eq!(
            apply_symmetrizer(2, &k, Sign::Plus, &p("Y1")).unwrap(),
            p("(Y1 + Y2 + kappa)/2")
        );
        let minus = apply_symmetrizer(2, &k, Sign::Minus, &p("Y1")).unwrap();
        assert_eq!(minus, p("(Y1 - Y2 - kappa)/2"));
        assert_eq!(minus, symmetrizer_via_words(2, &k, Sign::Minus, &p("Y1")));
    }

    #[test]
    fn reduced_words_reproduce_permutations() {
        use crate::permops::{compose, identity_perm, transposition};
        for perm in all_perms(4) {
            let mut acc = identity_perm(4);
            for &i in &reduced_word(&perm) {
                acc = compose(&acc, &transposition(4, i, i + 1));
            }
            assert_eq!(acc, perm);
        }
    }

    #[test]
    fn schur_examples() {
        let s = |v: Vec<u32>| schur(&Partition::new(v).unwrap(), 2).unwrap();
        assert_eq!(s(vec![1]), p("Y1 + Y2"));
        assert_eq!(s(vec![1, 1]), p("Y1*Y2"));
        assert_eq!(s(vec![2]), p("Y1^2 + Y1*Y2 + Y2^2"));
    }

    #[test]
    fn hall_littlewood_examples() {
        let h = Poly::var(Var::Hbar);
        let hl = hall_littlewood_rational(&Partition::new(vec![0, 0]).unwrap(), 2, &h).unwrap();
        assert_eq!(hl.poly, Poly::one());
        assert_eq!(hl.psi_exp, 0);
        let hl = hall_littlewood_rational(&Partition::new(vec![1, 0]).unwrap(), 2, &h).unwrap();
        assert_eq!(hl.psi_exp, -1);
        assert_eq!(hl.poly, p("(Y1 + Y2 + hbar)/2"));
        assert_eq!(hl.to_string(), "psi^-1*(1/2*Y1 + 1/2*Y2 + 1/2*hbar)");
    }

    #[test]
    fn power_sum_examples() {
        let h = Poly::var(Var::Hbar);
        assert_eq!(deformed_power_sum(1, 2, &h).unwrap(), p("Y1 + Y2 + hbar"));
        assert_eq!(deformed_power_sum(0, 3, &h).unwrap(), Poly::int(3));
        assert_eq!(deformed_power_sum(3, 3, &Poly::zero()).unwrap(), p("Y1^3 + Y2^3 + Y3^3"));
    }

    #[test]
    fn elementary_expansion() {
        let f = p("Y1^2 + Y2^2");
        let ex = to_elementary(&f, 2).unwrap();
        assert_eq!(ex.get(&vec![2, 0]), Some(&Poly::int(1)));
        assert_eq!(ex.get(&vec![0, 1]), Some(&Poly::int(-2)));
        assert!(to_elementary(&p("Y1"), 2).is_err());
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(Partition::parse("2,1,0").unwrap().parts(), &[2, 1, 0]);
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a").is_err());
    }
}
