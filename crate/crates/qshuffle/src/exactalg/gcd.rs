//! Multivariate polynomial gcd.
//!
//! Recursive content/primitive-part decomposition in a chosen main variable.
//! A univariate image at a fixed evaluation point proves coprimality cheaply
//! in the common case. Otherwise a primitive pseudo-remainder sequence runs
//! while its remainders stay small; past that, one of the other variables is
//! evaluated at small integers and the gcd is interpolated, checked by trial
//! division.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::var::{Var, NVARS};
use super::Q;

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    let g = gcd_rec(&a1, &b1);
    g.mul_term(&mg, &Q::one()).monic()
}

/// Gcd of a list of polynomials.
pub fn gcd_many<'a>(it: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut g = Poly::zero();
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Least common multiple, monic.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).monic()
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.len() == 1 || b.len() == 1 {
        // one side is a monomial times a constant: only monomial factors can be shared
        let mg = a.monomial_content().gcd(&b.monomial_content());
        return Poly::term(mg, Q::one());
    }
    // cheap divisibility checks
    let (small, big) = if a.total_degree() <= b.total_degree() {
        (a, b)
    } else {
        (b, a)
    };
    if small.len() <= big.len() && big.div_exact(small).is_some() {
        return small.monic();
    }

    let sa = a.support();
    let sb = b.support();
    if let Some(x) = first_bit(sa & !sb) {
        return gcd_with_coeffs(b, a, x);
    }
    if let Some(x) = first_bit(sb & !sa) {
        return gcd_with_coeffs(a, b, x);
    }
    // both have the same support; choose the main variable of least degree
    let common = sa & sb;
    let x = (0..NVARS)
        .filter(|s| common & (1 << s) != 0)
        .min_by_key(|&s| {
            let da = a.degree_in_slot(s);
            let db = b.degree_in_slot(s);
            (da.max(db), da + db)
        })
        .expect("non-constant polynomials have support");

    let ua = a.to_univariate(x);
    let ub = b.to_univariate(x);
    let ca = gcd_many(ua.iter());
    let cb = gcd_many(ub.iter());
    let c = gcd(&ca, &cb);
    let pa: Vec<Poly> = if ca.is_one() { ua } else { div_all(&ua, &ca) };
    let pb: Vec<Poly> = if cb.is_one() { ub } else { div_all(&ub, &cb) };

    if univariate_images_coprime(&pa, &pb, x) {
        return c;
    }
    let budget = size(&pa) + size(&pb) + 64;
    let g = match primitive_prs(pa.clone(), pb.clone(), Some(budget)) {
        Some(g) => Poly::from_univariate(&g, x),
        None => match interpolated_gcd(&pa, &pb, x) {
            Some(g) => g,
            None => Poly::from_univariate(&primitive_prs(pa, pb, None).expect("unbounded"), x),
        },
    };
    (&c * &g).monic()
}

/// Number of terms plus the 64-bit words of their coefficients.
fn size(v: &[Poly]) -> usize {
    v.iter()
        .flat_map(|p| p.terms())
        .map(|(_, c)| 1 + ((c.numer().bits() + c.denom().bits()) / 64) as usize)
        .sum()
}

fn lc(v: &[Poly]) -> &Poly {
    &v[deg(v)]
}

/// Primitive part in the variable `x`.
fn primitive_in(p: &Poly, x: usize) -> Poly {
    let u = p.to_univariate(x);
    let c = gcd_many(u.iter());
    if c.is_one() {
        p.clone()
    } else {
        Poly::from_univariate(&div_all(&u, &c), x)
    }
}

/// Gcd of `a` (primitive) and `b` in `x` by evaluating another variable `y`
/// at small integers and interpolating. Images are scaled so their leading
/// coefficient in `x` is the image of `gcd(lc a, lc b)`; images whose degree
/// in `x` exceeds the least seen are discarded as unlucky.
fn interpolated_gcd(a: &[Poly], b: &[Poly], x: usize) -> Option<Poly> {
    let pa = Poly::from_univariate(a, x);
    let pb = Poly::from_univariate(b, x);
    let others = (pa.support() | pb.support()) & !(1u64 << x);
    if others == 0 {
        let ga = pa.to_univariate(x).iter().map(|c| c.constant_term()).collect();
        let gb = pb.to_univariate(x).iter().map(|c| c.constant_term()).collect();
        let g = univariate_gcd(ga, gb);
        let coeffs: Vec<Poly> = g.into_iter().map(Poly::constant).collect();
        return Some(Poly::from_univariate(&coeffs, x));
    }
    let y = (0..NVARS)
        .filter(|s| others & (1 << s) != 0)
        .min_by_key(|&s| pa.degree_in_slot(s).min(pb.degree_in_slot(s)))
        .expect("nonempty");
    let yv = Var::from_slot(y);
    let (la, lb) = (lc(a), lc(b));
    let gamma = gcd(la, lb);
    let bound = (gamma.degree_in_slot(y) + pa.degree_in_slot(y).min(pb.degree_in_slot(y))) as usize;

    let mut pts: Vec<Q> = Vec::new();
    let mut imgs: Vec<Poly> = Vec::new();
    let mut best = usize::MAX;
    for i in 0..(4 * bound + 40) as i64 {
        let t = Q::from_integer(BigInt::from(if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }));
        let at = [(yv, t.clone())];
        if la.eval_partial(&at).is_zero() || lb.eval_partial(&at).is_zero() {
            continue;
        }
        let g = primitive_in(&gcd(&pa.eval_partial(&at), &pb.eval_partial(&at)), x);
        let d = g.degree_in_slot(x) as usize;
        if d == 0 {
            return Some(Poly::one());
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            pts.clear();
            imgs.clear();
        }
        let gu = g.to_univariate(x);
        let Some(h) = (&g * &gamma.eval_partial(&at)).div_exact(lc(&gu)) else {
            continue;
        };
        pts.push(t);
        imgs.push(h);
        if pts.len() > bound {
            let cand = primitive_in(&newton_interpolate(&pts, &imgs, yv), x);
            if pa.div_exact(&cand).is_some() && pb.div_exact(&cand).is_some() {
                return Some(cand.monic());
            }
        }
    }
    None
}

/// Polynomial in `y` through `(pts[i], vals[i])`, coefficientwise.
fn newton_interpolate(pts: &[Q], vals: &[Poly], y: Var) -> Poly {
    let yp = Poly::var(y);
    let mut acc = vals[0].clone();
    let mut basis = Poly::one();
    for j in 1..pts.len() {
        basis = &basis * &(&yp - &Poly::constant(pts[j - 1].clone()));
        let at = [(y, pts[j].clone())];
        let resid = &vals[j] - &acc.eval_partial(&at);
        if resid.is_zero() {
            continue;
        }
        let denom = basis.eval_partial(&at).constant_term();
        acc = &acc + &(&basis * &resid.scale(&denom.recip()));
    }
    acc
}


/// gcd(p, all coefficients of q in the variable `x`), where `x` does not occur in `p`.
fn gcd_with_coeffs(p: &Poly, q: &Poly, x: usize) -> Poly {
    let mut g = p.monic();
    for c in q.to_univariate(x).iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn first_bit(m: u64) -> Option<usize> {
    (0..64).find(|i| m & (1 << i) != 0)
}

fn div_all(v: &[Poly], d: &Poly) -> Vec<Poly> {
    v.iter().map(|c| c.div_exact(d).expect("content divides")).collect()
}

fn trim(v: &mut Vec<Poly>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn deg(v: &[Poly]) -> usize {
    v.len() - 1
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials in the main variable.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = deg(b);
    let lcb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    while !(r.len() == 1 && r[0].is_zero()) && deg(&r) >= db {
        let dr = deg(&r);
        let lcr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Poly> = r.iter().map(|c| c * lcb).collect();
        for (i, bc) in b.iter().enumerate() {
            let t = bc * &lcr;
            next[i + shift] -= &t;
        }
        next.pop();
        if next.is_empty() {
            next.push(Poly::zero());
        }
        trim(&mut next);
        r = next;
    }
    r
}

fn primitive_part(v: Vec<Poly>) -> Vec<Poly> {
    let c = gcd_many(v.iter());
    if c.is_one() {
        v
    } else {
        div_all(&v, &c)
    }
}

/// Primitive remainder sequence; returns the primitive part of the last
/// nonzero remainder, or `None` once a remainder exceeds `budget` in [`size`].
fn primitive_prs(mut a: Vec<Poly>, mut b: Vec<Poly>, budget: Option<usize>) -> Option<Vec<Poly>> {
    trim(&mut a);
    trim(&mut b);
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b);
        if r.len() == 1 && r[0].is_zero() {
            return Some(primitive_part(b));
        }
        if deg(&r) == 0 {
            return Some(vec![Poly::one()]);
        }
        if budget.is_some_and(|m| size(&r) > m) {
            return None;
        }
        a = b;
        b = primitive_part(r);
    }
}

/// Deterministic evaluation points for the coprimality test.
fn eval_point(attempt: usize) -> Vec<Q> {
    (0..NVARS)
        .map(|s| {
            let v = 7 + 13 * s as i64 + 101 * attempt as i64 + ((s * s * 31 + attempt * 17) % 23) as i64;
            Q::from_integer(BigInt::from(if s % 2 == 0 { v } else { -v }))
        })
        .collect()
}

/// True if the images at an evaluation point keeping the main-variable
/// degrees have constant gcd, which proves that two primitive polynomials
/// are coprime.
fn univariate_images_coprime(a: &[Poly], b: &[Poly], x: usize) -> bool {
    let pa = Poly::from_univariate(a, x);
    let pb = Poly::from_univariate(b, x);
    for attempt in 0..3 {
        let pt = eval_point(attempt);
        let ia = pa.eval_to_univariate(x, &pt);
        let ib = pb.eval_to_univariate(x, &pt);
        if ia.last().is_some_and(|c| c.is_zero()) || ib.last().is_some_and(|c| c.is_zero()) {
            continue;
        }
        return univariate_gcd_degree(ia, ib) == 0;
    }
    false
}

fn univariate_gcd_degree(a: Vec<Q>, b: Vec<Q>) -> usize {
    univariate_gcd(a, b).len().saturating_sub(1)
}

/// Monic gcd of dense univariate polynomials, lowest degree first.
fn univariate_gcd(mut a: Vec<Q>, mut b: Vec<Q>) -> Vec<Q> {
    let strip = |v: &mut Vec<Q>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a mod b
        let lb = b.last().expect("nonempty").clone();
        while a.len() >= b.len() {
            let f = a.last().expect("nonempty") / &lb;
            let off = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[off + i] -= &f * c;
            }
            a.pop();
            strip(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(l) = a.last().cloned() {
        let inv = l.recip();
        for c in a.iter_mut() {
            *c *= &inv;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }

    #[test]
    fn gcd_of_products() {
        let a = &v(Var::W(1)) - &v(Var::W(2));
        let b = &(&v(Var::W(1)) + &v(Var::Hbar)) - &v(Var::W(3));
        let c = &v(Var::Y(1)) + &Poly::int(2);
        let p = &(&a * &b) * &c;
        let q = &(&a * &c) * &(&v(Var::U) - &v(Var::W(1)));
        assert_eq!(gcd(&p, &q), (&a * &c).monic());
        assert!(gcd(&b, &c).is_one());
    }

    #[test]
    fn gcd_with_powers() {
        let a = &v(Var::Z(1)) - &v(Var::Z(2));
        let k = v(Var::Kappa);
        let p = &a.pow(3) * &k;
        let q = &a.pow(2) * &(&k + &a);
        assert_eq!(gcd(&p, &q), a.pow(2).monic());
    }

    #[test]
    fn monomial_gcd() {
        let p = &v(Var::W(1)).pow(2) * &v(Var::Hbar);
        let q = &v(Var::W(1)) * &(&v(Var::Hbar) + &Poly::one());
        assert_eq!(gcd(&p, &q), v(Var::W(1)));
    }

    #[test]
    fn interpolation_agrees_with_remainder_sequence() {
        let h = v(Var::Hbar);
        let r = |k: i64| &(&v(Var::W(1)) - &v(Var::W(2))) + &h.scale(&Q::from_integer(k.into()));
        let p = &(&r(1).pow(2) * &r(-2)) * &(&v(Var::W(1)) * &h + &Poly::int(3));
        let q = &(&r(1) * &r(-2).pow(2)) * &(&v(Var::W(2)).pow(2) - &h);
        let x = Var::W(1).slot();
        let (ua, ub) = (p.to_univariate(x), q.to_univariate(x));
        let expect = (&r(1) * &r(-2)).monic();
        assert_eq!(interpolated_gcd(&ua, &ub, x), Some(expect.clone()));
        let prs = Poly::from_univariate(&primitive_prs(ua, ub, None).unwrap(), x).monic();
        assert_eq!(prs, expect);
        assert_eq!(gcd(&p, &q), expect);
    }

    #[test]
    fn tight_budget_stops_the_sequence() {
        let a = (&v(Var::W(1)) + &v(Var::W(2))).pow(4);
        let b = &(&v(Var::W(1)) - &v(Var::W(2))).pow(3) + &v(Var::Hbar);
        let x = Var::W(1).slot();
        assert_eq!(primitive_prs(a.to_univariate(x), b.to_univariate(x), Some(1)), None);
    }
}
