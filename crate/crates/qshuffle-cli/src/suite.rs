//! `verify all`: every module suite at one rank, run concurrently and
//! reported in a fixed order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use qshuffle::envelope;
use qshuffle::exactalg::var::NVARS;
use qshuffle::gklo;
use qshuffle::heckerep::{apply_sigma, apply_symmetrizer, symmetrizer_via_words, y};
use qshuffle::permops::{self, Sign};
use qshuffle::shuffle::{self, Component};
use qshuffle::weylmat;
use qshuffle::{AlgError, Monomial, Poly, Rf, Var, Q};

use crate::Report;

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

type Job<'a> = (String, Box<dyn Fn() -> (bool, String) + Send + Sync + 'a>);

fn job<'a>(name: impl Into<String>, f: impl Fn() -> (bool, String) + Send + Sync + 'a) -> Job<'a> {
    (name.into(), Box::new(f))
}

fn random_poly(rng: &mut ChaCha8Rng, k: usize, max_degree: u32) -> Poly {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let mut exps = [0u8; NVARS];
        let mut left = rng.gen_range(0..=max_degree.min(8)) as u8;
        for i in 1..=k {
            let e = rng.gen_range(0..=left);
            exps[Var::Y(i as u8).slot()] = e;
            left -= e;
        }
        terms.push((Monomial::from_exps(exps), Q::from_integer(rng.gen_range(-4i64..=4).into())));
    }
    Poly::from_terms(terms)
}

fn hecke_relations(k: usize, f: &Poly) -> Option<&'static str> {
    let kp = Poly::var(Var::Kappa);
    let s = |i: usize, g: &Poly| apply_sigma(i, &kp, g);
    for i in 1..k {
        if s(i, &s(i, f)) != *f {
            return Some("involution");
        }
        let cross = &s(i, &(&y(i) * &s(i, f))) - &(&kp * &s(i, f));
        if cross != &y(i + 1) * f {
            return Some("cross relation");
        }
        if i + 1 < k && s(i, &s(i + 1, &s(i, f))) != s(i + 1, &s(i, &s(i + 1, f))) {
            return Some("braid");
        }
    }
    None
}

fn jobs<'a>(n: usize, seed: u64, max_degree: u32) -> Vec<Job<'a>> {
    let kmax = n.max(2);
    let kappa_rf = Rf::var(Var::Kappa);
    let mut v: Vec<Job> = Vec::new();

    v.push(job("perm.qybe", || {
        let (l, r) = permops::qybe_sides();
        (l == r, "k=3".into())
    }));
    for k in 2..=kmax {
        for (s, tag) in [(Sign::Plus, "+"), (Sign::Minus, "-")] {
            v.push(job(format!("perm.idempotent[k={k},{tag}]"), move || {
                (permops::hecke_idempotent_via_r(k, s) == permops::group_idempotent(k, s), String::new())
            }));
            let kr = kappa_rf.clone();
            v.push(job(format!("perm.symmetrizer[k={k},{tag}]"), move || {
                let closed = match s {
                    Sign::Plus => permops::symmetrizer_closed_form(k, &kr),
                    Sign::Minus => permops::antisymmetrizer_closed_form(k, &kr),
                };
                (permops::su_symmetrizer(k, &kr, s) == closed, String::new())
            }));
        }
    }

    v.push(job("hecke.random", move || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let kp = Poly::var(Var::Kappa);
        for k in 2..=kmax.min(4) {
            for _ in 0..10 {
                let f = random_poly(&mut rng, k, max_degree);
                if let Some(w) = hecke_relations(k, &f) {
                    return (false, format!("{w} fails for k={k}, f={f}"));
                }
                for s in [Sign::Plus, Sign::Minus] {
                    let closed = apply_symmetrizer(k, &kp, s, &f).expect("rank within bounds");
                    if closed != symmetrizer_via_words(k, &kp, s, &f) {
                        return (false, format!("symmetrizer form fails for k={k}, f={f}"));
                    }
                }
            }
        }
        (true, format!("seed {seed}, degree <= {max_degree}"))
    }));
    v.push(job("shuffle.current_relation", || {
        let h = Poly::var(Var::Hbar);
        let r = shuffle::verify_plus_current_relation(4, &h);
        (r.pass(), format!("{} coefficients", r.checked))
    }));
    v.push(job("shuffle.compare", move || {
        let k = Poly::var(Var::Kappa);
        for a in 1..=2usize {
            for b in 1..=2usize {
                for (_, f) in shuffle::monomial_basis(a, 2) {
                    for (_, g) in shuffle::monomial_basis(b, 1) {
                        let f = Component::new(a, f.clone()).expect("symmetric");
                        let g = Component::new(b, g).expect("symmetric");
                        if !shuffle::compare_products(&f, &g, &k).pass {
                            return (false, format!("k={a}, l={b}"));
                        }
                    }
                }
            }
        }
        (true, "k,l<=2".into())
    }));

    if n <= 3 {
        v.push(job(format!("u.qdet_central[N={n}]"), move || {
            let w = envelope::determinant_noncentral_witnesses(n).expect("rank within bounds");
            let detail = if w.is_empty() { String::new() } else { format!("{w:?}") };
            (w.is_empty(), detail)
        }));
        v.push(job(format!("u.hc[N={n}]"), move || {
            let d = envelope::quantum_determinant(n).expect("rank within bounds");
            (envelope::hc_projection_upoly(&d, n) == envelope::hc_expected_determinant(n), String::new())
        }));
        for dual in [false, true] {
            if dual && n > 2 {
                continue;
            }
            v.push(job(format!("u.cayley_hamilton[N={n},dual={dual}]"), move || {
                let r = envelope::cayley_hamilton_residual(n, dual).expect("rank within bounds");
                (r.iter().all(|x| x.is_zero()), String::new())
            }));
        }
    }
    if n <= 2 {
        v.push(job(format!("u.comatrix[N={n}]"), move || {
            let r = envelope::comatrix_identity_residual(n).expect("rank within bounds");
            (envelope::minors::umatrix_is_zero(&r), String::new())
        }));
    }

    v.push(job(format!("weyl[N={n}]"), move || {
        let reps: Vec<_> = weylmat::verify_gl_relations(n).into_iter().chain(weylmat::verify_lr_identities(n)).collect();
        let bad: Vec<String> = reps.iter().filter(|r| !r.pass).map(|r| r.name.clone()).collect();
        (bad.is_empty(), format!("{} identities, failures {bad:?}", reps.len()))
    }));

    v.push(job(format!("gklo.relations[N={n}]"), move || {
        let reps = gklo::verify_relations(n);
        let bad: Vec<String> = reps.iter().filter(|r| !r.pass).map(|r| r.id.clone()).collect();
        (bad.is_empty(), format!("{} relations, failures {bad:?}", reps.len()))
    }));
    for k in 1..=n {
        v.push(job(format!("gklo.monopole[N={n},k={k}]"), move || {
            let r = gklo::monopole(k, n).expect("valid ranks");
            (r.pass, String::new())
        }));
    }
    v
}

pub fn verify_all(n: usize, seed: u64, max_degree: u32) -> Result<Report, AlgError> {
    if !(1..=3).contains(&n) {
        return Err(AlgError::SizeGuard(format!("N={n} outside 1..3")));
    }
    let jobs = jobs(n, seed, max_degree);
    let mut checks: Vec<Check> = std::thread::scope(|sc| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(name, f)| (name.clone(), sc.spawn(f)))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let (pass, detail) = h.join().unwrap_or_else(|_| (false, "panicked".into()));
                Check { name, pass, detail }
            })
            .collect()
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().filter(|c| c.pass).count();
    let ok = passed == checks.len();
    let mut text: Vec<String> = checks
        .iter()
        .map(|c| {
            let v = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                format!("{v} {}", c.name)
            } else {
                format!("{v} {} ({})", c.name, c.detail)
            }
        })
        .collect();
    text.push(format!("verify all: {passed}/{} PASS", checks.len()));
    let items: Vec<Value> = checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
        .collect();
    let doc = json!({"N": n, "seed": seed, "max_degree": max_degree, "checks": items, "pass": ok});
    Ok(Report { text: text.join("\n"), json: doc, ok })
}
