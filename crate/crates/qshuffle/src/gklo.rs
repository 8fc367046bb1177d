//! The GKLO homomorphism from the shifted Yangian `Y_{-N,N}(gl_2)` to
//! difference operators, exact checks of its defining relations, modes,
//! the map from the shuffle algebra, and monopole operators.

use std::fmt;

use crate::diffops::{shift_coeff, Dop};
use crate::exactalg::{AlgError, Poly, Rf, Var, Q};
use crate::heckerep::is_symmetric;
use crate::permops::factorial;
use crate::shuffle::{hecke_product, Component};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurrentKind {
    XPlus,
    XMinus,
    D1,
    D2,
    /// `h(u) = d_1(u)^{-1} d_2(u)`.
    D1InvD2,
}

impl CurrentKind {
    pub fn parse(s: &str) -> Option<CurrentKind> {
        Some(match s {
            "x+" | "x_plus" => CurrentKind::XPlus,
            "x-" | "x_minus" => CurrentKind::XMinus,
            "d1" => CurrentKind::D1,
            "d2" => CurrentKind::D2,
            "h" | "d1_inv_d2" => CurrentKind::D1InvD2,
            _ => return None,
        })
    }
}

impl fmt::Display for CurrentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurrentKind::XPlus => "x+",
            CurrentKind::XMinus => "x-",
            CurrentKind::D1 => "d1",
            CurrentKind::D2 => "d2",
            CurrentKind::D1InvD2 => "d1_inv_d2",
        })
    }
}

/// Image of a generating current, a difference operator rational in the
/// spectral variable `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Current {
    pub kind: CurrentKind,
    pub n: usize,
    pub var: Var,
    pub value: Dop,
}

fn w(i: usize) -> Rf {
    Rf::var(Var::W(i as u8))
}

fn hbar() -> Rf {
    Rf::var(Var::Hbar)
}

/// `∏_{j≠i} (w_i - w_j)^{-1}`.
fn vandermonde_weight(i: usize, n: usize) -> Rf {
    let mut d = Poly::one();
    for j in (1..=n).filter(|&j| j != i) {
        d = &d * &(&Poly::var(Var::W(i as u8)) - &Poly::var(Var::W(j as u8)));
    }
    Rf::new(Poly::one(), d).expect("distinct variables")
}

fn recip(f: &Rf) -> Rf {
    f.recip().expect("nonzero linear factor")
}

/// GKLO image of a current in the spectral variable `var` (`u` or `v`).
pub fn gklo_image_in(kind: CurrentKind, n: usize, var: Var) -> Current {
    assert!(n >= 1, "rank must be positive");
    let s = Rf::var(var);
    let value = match kind {
        CurrentKind::XPlus => (1..=n).fold(Dop::zero(), |acc, i| {
            let c = &recip(&(&s - &w(i))) * &vandermonde_weight(i, n);
            acc.sub(&Dop::shift(i, -1).scale(&c))
        }),
        CurrentKind::XMinus => (1..=n).fold(Dop::zero(), |acc, i| {
            let c = &recip(&(&(&s - &w(i)) - &hbar())) * &vandermonde_weight(i, n);
            acc.add(&Dop::shift(i, 1).scale(&c))
        }),
        CurrentKind::D1 => Dop::scalar((1..=n).fold(Rf::one(), |acc, i| &acc * &(&s - &w(i)))),
        CurrentKind::D2 => Dop::scalar(
            (1..=n).fold(Rf::one(), |acc, i| &acc * &recip(&(&(&s - &w(i)) - &hbar()))),
        ),
        CurrentKind::D1InvD2 => Dop::scalar((1..=n).fold(Rf::one(), |acc, i| {
            &acc * &recip(&(&(&s - &w(i)) * &(&(&s - &w(i)) - &hbar())))
        })),
    };
    Current { kind, n, var, value }
}

/// GKLO image in the spectral variable `u`.
pub fn gklo_image(kind: CurrentKind, n: usize) -> Current {
    gklo_image_in(kind, n, Var::U)
}

/// Outcome of one relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub id: String,
    pub pass: bool,
    /// First nonzero residual term, as `coefficient at shift vector`.
    pub witness: Option<String>,
}

fn residual_report(id: &str, residual: &Dop) -> RelationReport {
    let witness = residual.terms().iter().next().map(|(m, c)| format!("{c} at shift {m:?}"));
    RelationReport {
        id: id.to_string(),
        pass: witness.is_none(),
        witness,
    }
}

/// Checks the defining current relations as exact identities over `Q(u, v, w, hbar)`.
pub fn verify_relations(n: usize) -> Vec<RelationReport> {
    let img = |k, var| gklo_image_in(k, n, var).value;
    let (xpu, xpv) = (img(CurrentKind::XPlus, Var::U), img(CurrentKind::XPlus, Var::V));
    let (xmu, xmv) = (img(CurrentKind::XMinus, Var::U), img(CurrentKind::XMinus, Var::V));
    let d = |j: usize, var| img(if j == 1 { CurrentKind::D1 } else { CurrentKind::D2 }, var);
    let h = Dop::scalar(hbar());
    let umv = Dop::scalar(&Rf::var(Var::U) - &Rf::var(Var::V));

    let mut out = vec![residual_report("2.1", &d(1, Var::U).commutator(&d(2, Var::V)))];

    let lhs = umv.mul(&xpu.commutator(&xmv));
    let hu = img(CurrentKind::D1InvD2, Var::U);
    let hv = img(CurrentKind::D1InvD2, Var::V);
    out.push(residual_report("2.2(+)", &lhs.sub(&h.mul(&hv.sub(&hu)))));
    let literal = |var| d(1, var).inverse().expect("shift-free and nonzero").mul(&d(2, var));
    out.push(residual_report(
        "2.2 as stated",
        &lhs.sub(&h.mul(&literal(Var::V).sub(&literal(Var::U)))),
    ));

    for j in [1usize, 2] {
        let sign = if j == 1 { h.clone() } else { h.neg() };
        let l = umv.mul(&d(j, Var::U).commutator(&xpv));
        let r = sign.mul(&d(j, Var::U)).mul(&xpu.sub(&xpv));
        out.push(residual_report(&format!("2.3(j={j})"), &l.sub(&r)));
    }
    for j in [1usize, 2] {
        let sign = if j == 2 { h.clone() } else { h.neg() };
        let l = umv.mul(&d(j, Var::U).commutator(&xmv));
        let r = sign.mul(&xmu.sub(&xmv)).mul(&d(j, Var::U));
        out.push(residual_report(&format!("2.4(j={j})"), &l.sub(&r)));
    }
    for (id, a, b, sign) in [("2.5(+)", &xpu, &xpv, h.neg()), ("2.5(-)", &xmu, &xmv, h.clone())] {
        let l = umv.mul(&a.commutator(b));
        let diff = a.sub(b);
        out.push(residual_report(id, &l.sub(&sign.mul(&diff.mul(&diff)))));
    }
    out
}

/// Laurent expansion of `f` at `var = ∞`: returns `(top, g)` with
/// `f = Σ_k g[k] var^{top - k}`, computed to `len` terms.
pub fn expand_at_infinity(f: &Rf, var: Var, len: usize) -> (i64, Vec<Rf>) {
    let num = f.num().to_univariate(var.slot());
    let den = f.den().to_univariate(var.slot());
    let (a, b) = (num.len() as i64 - 1, den.len() as i64 - 1);
    if f.is_zero() {
        return (0, vec![Rf::zero(); len]);
    }
    let at = |v: &[Poly], deg: i64, k: usize| -> Rf {
        let i = deg - k as i64;
        if i < 0 {
            Rf::zero()
        } else {
            Rf::from_poly(v[i as usize].clone())
        }
    };
    let lead = at(&den, b, 0);
    let mut g: Vec<Rf> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = at(&num, a, k);
        for j in 1..=k {
            acc = &acc - &(&at(&den, b, j) * &g[k - j]);
        }
        g.push(acc.checked_div(&lead).expect("nonzero leading coefficient"));
    }
    (a - b, g)
}

/// Coefficient of `var^{-r}` in the expansion of the current at infinity.
pub fn mode(c: &Current, r: i64) -> Dop {
    let mut out = Dop::zero();
    for (m, f) in c.value.terms() {
        let (top, _) = expand_at_infinity(f, c.var, 0);
        let k = top + r;
        if k < 0 {
            continue;
        }
        let (_, g) = expand_at_infinity(f, c.var, k as usize + 1);
        out = out.add(&Dop::term(m.clone(), g[k as usize].clone()));
    }
    out
}

/// Closed form of the modes of `x_±`: `x_+^{(r)} = -Σ w_i^{r-1} ∏(w_i - w_j)^{-1} u_i^{-1}`,
/// `x_-^{(r)} = Σ (w_i + hbar)^{r-1} ∏(w_i - w_j)^{-1} u_i`.
pub fn mode_closed_form(kind: CurrentKind, n: usize, r: u32) -> Result<Dop, AlgError> {
    if r == 0 {
        return Err(AlgError::InvalidArgument("mode index starts at 1".into()));
    }
    let e = r as i32 - 1;
    match kind {
        CurrentKind::XPlus => Ok((1..=n).fold(Dop::zero(), |acc, i| {
            let c = &w(i).pow(e).expect("positive power") * &vandermonde_weight(i, n);
            acc.sub(&Dop::shift(i, -1).scale(&c))
        })),
        CurrentKind::XMinus => Ok((1..=n).fold(Dop::zero(), |acc, i| {
            let c = &(&w(i) + &hbar()).pow(e).expect("positive power") * &vandermonde_weight(i, n);
            acc.add(&Dop::shift(i, 1).scale(&c))
        })),
        _ => Err(AlgError::InvalidArgument(format!("no closed form for {kind}"))),
    }
}

fn check_shuffle_input(f: &Poly, k: usize) -> Result<(), AlgError> {
    let bad = f.vars().into_iter().find(|v| match v {
        Var::Y(i) => *i as usize > k,
        Var::Hbar => false,
        _ => true,
    });
    if let Some(v) = bad {
        return Err(AlgError::InvalidArgument(format!("variable {v} not allowed in degree {k}")));
    }
    if !is_symmetric(k, f) {
        return Err(AlgError::NotSymmetric(f.to_string()));
    }
    Ok(())
}

/// Image of a degree-`k` shuffle element: for each monomial `Y^J` and tuple
/// `(i_1..i_k)`, the ordered product `∏_a ∏_{j≠i_a}(w_{i_a} - w_j)^{-1} w_{i_a}^{J_a} u_{i_a}^{-1}`.
///
/// Evaluated per tuple: moving every shift to the right substitutes
/// `Y_a = w_{i_a} - hbar·#{b < a : i_b = i_a}` and shifts each weight by the
/// preceding shifts.
pub fn shuffle_to_diffop(f: &Poly, k: usize, n: usize) -> Result<Dop, AlgError> {
    check_shuffle_input(f, k)?;
    let h = Poly::var(Var::Hbar);
    let mut out = Dop::zero();
    let mut tuple = vec![1usize; k];
    loop {
        let mut prefix = vec![0i32; n];
        let mut weight = Rf::one();
        let mut subs = Vec::with_capacity(k);
        for (a, &i) in tuple.iter().enumerate() {
            let neg: Vec<i32> = prefix.iter().map(|e| -e).collect();
            weight = &weight * &shift_coeff(&vandermonde_weight(i, n), &neg);
            let wi = &Poly::var(Var::W(i as u8)) - &h.scale(&Q::from_integer(prefix[i - 1].into()));
            subs.push((Var::Y(a as u8 + 1), wi));
            prefix[i - 1] += 1;
        }
        let val = Rf::from_poly(f.subs(&subs));
        if !val.is_zero() {
            let m: Vec<i32> = prefix.iter().map(|e| -e).collect();
            out = out.add(&Dop::term(m, &val * &weight));
        }
        // next tuple in {1..n}^k
        let mut t = 0;
        loop {
            if t == k {
                return Ok(out);
            }
            if tuple[t] < n {
                tuple[t] += 1;
                break;
            }
            tuple[t] = 1;
            t += 1;
        }
    }
}

/// GKLO image of a degree-`k` element of the positive shuffle algebra,
/// `(-1)^k` times [`shuffle_to_diffop`], so that `Y_1^{r-1}` maps to `x_+^{(r)}`.
pub fn gklo_of_shuffle(f: &Poly, k: usize, n: usize) -> Result<Dop, AlgError> {
    let d = shuffle_to_diffop(f, k, n)?;
    Ok(if k % 2 == 1 { d.neg() } else { d })
}

/// Shuffle representative `(1/k!) ∏_{i≠j} (Y_i - Y_j - hbar)` of the minor function.
pub fn minor_representative(k: usize) -> Poly {
    let h = Poly::var(Var::Hbar);
    let mut f = Poly::one();
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            f = &f * &(&(&Poly::var(Var::Y(i as u8)) - &Poly::var(Var::Y(j as u8))) - &h);
        }
    }
    f.scale(&Q::new(1.into(), factorial(k).into()))
}

/// `Σ_{|I|=k} ∏_{i∈I, j∉I} (w_i - w_j)^{-1} ∏_{i∈I} u_i^{-1}`.
pub fn monopole_predicted(k: usize, n: usize) -> Dop {
    let mut out = Dop::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let inside = |i: usize| mask & (1 << (i - 1)) != 0;
        let mut d = Poly::one();
        let mut m = vec![0i32; n];
        for i in (1..=n).filter(|&i| inside(i)) {
            m[i - 1] = -1;
            for j in (1..=n).filter(|&j| !inside(j)) {
                d = &d * &(&Poly::var(Var::W(i as u8)) - &Poly::var(Var::W(j as u8)));
            }
        }
        out = out.add(&Dop::term(m, Rf::new(Poly::one(), d).expect("nonzero")));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonopoleReport {
    pub k: usize,
    pub n: usize,
    pub computed: Dop,
    pub predicted: Dop,
    pub pass: bool,
    /// `k > N`: both sides vanish.
    pub degenerate: bool,
}

pub fn monopole(k: usize, n: usize) -> Result<MonopoleReport, AlgError> {
    if k == 0 || n == 0 {
        return Err(AlgError::InvalidArgument("need k ≥ 1 and N ≥ 1".into()));
    }
    let computed = shuffle_to_diffop(&minor_representative(k), k, n)?;
    let predicted = if k > n { Dop::zero() } else { monopole_predicted(k, n) };
    Ok(MonopoleReport {
        k,
        n,
        pass: computed == predicted,
        degenerate: k > n,
        computed,
        predicted,
    })
}

/// The constant `c` with `s(f *_H g)·c = s(f)·s(g)` for `s` = [`shuffle_to_diffop`]
/// and the Hecke product at `kappa = hbar`, if it exists.
pub fn algebra_map_constant(f: &Component, g: &Component, n: usize) -> Result<Option<Q>, AlgError> {
    let h = Poly::var(Var::Hbar);
    let fg = hecke_product(f, g, &h);
    let lhs = shuffle_to_diffop(fg.poly(), fg.degree(), n)?;
    let rhs = shuffle_to_diffop(f.poly(), f.degree(), n)?.mul(&shuffle_to_diffop(g.poly(), g.degree(), n)?);
    if lhs.is_zero() || rhs.is_zero() {
        return Ok((lhs.is_zero() && rhs.is_zero()).then(|| Q::from_integer(1.into())));
    }
    if lhs.terms().len() != rhs.terms().len() {
        return Ok(None);
    }
    let mut ratio: Option<Q> = None;
    for (m, a) in lhs.terms() {
        let Some(c) = rhs.coeff(m).checked_div(a).ok().and_then(|q| q.as_constant()) else {
            return Ok(None);
        };
        if ratio.as_ref().is_some_and(|r| *r != c) {
            return Ok(None);
        }
        ratio = Some(c);
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn images_small_rank() {
        assert_eq!(gklo_image(CurrentKind::XPlus, 1).value, Dop::parse("-1/(u - w1)*u1^-1").unwrap());
        assert_eq!(gklo_image(CurrentKind::D1, 1).value, Dop::parse("u - w1").unwrap());
        let xm = Dop::parse("1/((u - w1 - hbar)*(w1 - w2))*u1 + 1/((u - w2 - hbar)*(w2 - w1))*u2").unwrap();
        assert_eq!(gklo_image(CurrentKind::XMinus, 2).value, xm);
    }

    #[test]
    fn relations_rank_one() {
        for r in verify_relations(1) {
            assert!(r.pass, "{} {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn modes_small_rank() {
        let x1 = gklo_image(CurrentKind::XPlus, 1);
        assert_eq!(mode(&x1, 1), Dop::parse("-u1^-1").unwrap());
        assert_eq!(mode(&x1, 2), Dop::parse("-w1*u1^-1").unwrap());
        let xm = gklo_image(CurrentKind::XMinus, 2);
        assert_eq!(mode(&xm, 1), Dop::parse("1/(w1 - w2)*u1 + 1/(w2 - w1)*u2").unwrap());
        assert_eq!(mode(&gklo_image(CurrentKind::D1, 2), -2), Dop::one());
    }

    #[test]
    fn shuffle_map_examples() {
        let one = shuffle_to_diffop(&Poly::one(), 1, 2).unwrap();
        assert_eq!(one, Dop::parse("1/(w1 - w2)*u1^-1 + 1/(w2 - w1)*u2^-1").unwrap());
        let y = shuffle_to_diffop(&Poly::var(Var::Y(1)), 1, 2).unwrap();
        assert_eq!(y, Dop::parse("w1/(w1 - w2)*u1^-1 + w2/(w2 - w1)*u2^-1").unwrap());
        assert_eq!(shuffle_to_diffop(&Poly::one(), 2, 1).unwrap(), Dop::shift(1, -2));
        assert!(shuffle_to_diffop(&Poly::var(Var::Y(1)), 2, 2).is_err());
    }

    #[test]
    fn monopole_rank_two() {
        let r = monopole(1, 2).unwrap();
        assert!(r.pass);
        let r = monopole(2, 2).unwrap();
        assert_eq!(r.predicted, Dop::parse("u1^-1*u2^-1").unwrap());
        assert!(r.pass);
        let r = monopole(3, 2).unwrap();
        assert!(r.degenerate && r.pass);
    }
}
