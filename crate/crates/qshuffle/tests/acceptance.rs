//! Acceptance suite: twelve exact criteria, one PASS/FAIL line each.
//!
//! Every tolerance is exact equality of canonical forms. A criterion whose
//! observed outcome is a documented deviation prints FAIL; the process
//! exits nonzero only if an outcome differs from its pinned expectation.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use qshuffle::envelope::{self, minors::umatrix_is_zero};
use qshuffle::exactalg::{Monomial, Poly, Rf, Var, Q};
use qshuffle::gklo::{monopole, verify_relations};
use qshuffle::heckerep::{
    apply_sigma, deformed_power_sum, power_sum_from_generating_function, power_sum_transition, y,
};
use qshuffle::permops::{
    antisymmetrizer_closed_form, group_idempotent, hecke_idempotent_via_r, qybe_sides, su_symmetrizer,
    symmetrizer_closed_form, Sign,
};
use qshuffle::shuffle::{compare_products, monomial_basis, verify_plus_current_relation, Component};
use qshuffle::weylmat::verify_lr_identities;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOLERANCE: &str = "exact";

/// Outcome of one criterion.
struct Outcome {
    pass: bool,
    detail: String,
    /// The observed outcome matches what the suite pins for this criterion.
    as_pinned: bool,
}

impl Outcome {
    fn expect_pass(pass: bool, detail: String) -> Outcome {
        Outcome { pass, detail, as_pinned: pass }
    }
}

fn kappa() -> Poly {
    Poly::var(Var::Kappa)
}

fn hbar() -> Poly {
    Poly::var(Var::Hbar)
}

fn c01_qybe() -> Outcome {
    let (l, r) = qybe_sides();
    Outcome::expect_pass(l == r, "R12 R13 R23 = R23 R13 R12 at k=3, symbolic xi_i, kappa".into())
}

fn c02_symmetrizers() -> Outcome {
    let k = Rf::var(Var::Kappa);
    let sym: Vec<usize> = (2..=4)
        .filter(|&n| su_symmetrizer(n, &k, Sign::Plus) != symmetrizer_closed_form(n, &k))
        .collect();
    let anti: Vec<usize> = (2..=3)
        .filter(|&n| su_symmetrizer(n, &k, Sign::Minus) != antisymmetrizer_closed_form(n, &k))
        .collect();
    Outcome::expect_pass(
        sym.is_empty() && anti.is_empty(),
        format!("symmetrizer k=2..4, antisymmetrizer k=2..3; mismatches {sym:?} {anti:?}"),
    )
}

fn c03_idempotents() -> Outcome {
    let plus_bad: Vec<usize> = (2..=5)
        .filter(|&k| hecke_idempotent_via_r(k, Sign::Plus) != group_idempotent(k, Sign::Plus))
        .collect();
    let minus_bad: Vec<usize> = (2..=5)
        .filter(|&k| hecke_idempotent_via_r(k, Sign::Minus) != group_idempotent(k, Sign::Minus))
        .collect();
    // observed: the e_k^- product equals (-1)^k e_k^- with the stated prefactor
    let minus_pinned = (2..=5).all(|k| {
        let s = if k % 2 == 0 { 1 } else { -1 };
        hecke_idempotent_via_r(k, Sign::Minus) == group_idempotent(k, Sign::Minus).scale_q(&Q::from_integer(s.into()))
    });
    let pass = plus_bad.is_empty() && minus_bad.is_empty();
    Outcome {
        pass,
        detail: format!(
            "e_k matches for k=2..5 except {plus_bad:?}; e_k^- mismatches at k={minus_bad:?}, \
             observed product = (-1)^k e_k^- ({minus_pinned})"
        ),
        as_pinned: !pass && plus_bad.is_empty() && minus_bad == [3, 5] && minus_pinned,
    }
}

fn random_poly(rng: &mut ChaCha8Rng, k: usize) -> Poly {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=5) {
        let mut exps = [0u8; qshuffle::exactalg::var::NVARS];
        let mut budget = rng.gen_range(0..=4u8);
        for i in 1..=k {
            let e = rng.gen_range(0..=budget);
            exps[Var::Y(i as u8).slot()] = e;
            budget -= e;
        }
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            terms.push((Monomial::from_exps(exps), Q::from_integer(c.into())));
        }
    }
    Poly::from_terms(terms)
}

/// The degenerate affine Hecke relations as operator identities on `f`.
fn hecke_axioms_hold(k: usize, f: &Poly) -> Option<String> {
    let kp = kappa();
    let s = |i: usize, g: &Poly| apply_sigma(i, &kp, g);
    for i in 1..k {
        if s(i, &s(i, f)) != *f {
            return Some(format!("sigma_{i}^2"));
        }
        let lhs = &y(i + 1) * f;
        let rhs = &s(i, &(&y(i) * &s(i, f))) - &(&kp * &s(i, f));
        if lhs != rhs {
            return Some(format!("cross relation at i={i}"));
        }
        for j in (1..=k).filter(|&j| j != i && j != i + 1) {
            if s(i, &(&y(j) * f)) != &y(j) * &s(i, f) {
                return Some(format!("sigma_{i} Y_{j}"));
            }
        }
        if i + 1 < k && s(i, &s(i + 1, &s(i, f))) != s(i + 1, &s(i, &s(i + 1, f))) {
            return Some(format!("braid at i={i}"));
        }
        for j in i + 2..k {
            if s(i, &s(j, f)) != s(j, &s(i, f)) {
                return Some(format!("far commutation ({i},{j})"));
            }
        }
    }
    None
}

fn c04_hecke_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_018);
    let mut checked = 0;
    let mut failure = None;
    for k in 2..=4 {
        for _ in 0..50 {
            let f = random_poly(&mut rng, k);
            checked += 1;
            if let Some(w) = hecke_axioms_hold(k, &f) {
                failure.get_or_insert(format!("k={k}, f={f}: {w}"));
            }
        }
    }
    Outcome::expect_pass(
        failure.is_none(),
        format!("{checked} random polynomials, k=2..4, degree<=4; first failure {failure:?}"),
    )
}

fn c05_products() -> Outcome {
    let mut table = String::from("k l f g ratio expected\n");
    let (mut pairs, mut bad) = (0, 0);
    for k in 1..=4usize {
        for l in 1..=5 - k {
            for (lf, f) in monomial_basis(k, 3) {
                for (lg, g) in monomial_basis(l, 3) {
                    let r = compare_products(
                        &Component::new(k, f.clone()).expect("symmetric"),
                        &Component::new(l, g.clone()).expect("symmetric"),
                        &kappa(),
                    );
                    pairs += 1;
                    bad += usize::from(!r.pass);
                    let ratio = r.ratio.map_or("none".to_string(), |q| q.to_string());
                    writeln!(table, "{k} {l} m{lf:?} m{lg:?} {ratio} {}", r.expected).expect("write");
                }
            }
        }
    }
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("fo_hecke_ratio_table.txt");
    let archived = std::fs::write(&path, &table).is_ok();
    Outcome::expect_pass(
        bad == 0,
        format!("{pairs} pairs k+l<=5, degree<=3, fo = C(k+l,k) hecke; {bad} failures; table {} ({archived})", path.display()),
    )
}

fn c06_current_relation() -> Outcome {
    let r = verify_plus_current_relation(5, &hbar());
    Outcome::expect_pass(
        r.pass(),
        format!("{} coefficients u^-a v^-b, a+b<=5, kappa=hbar; first failure {:?}", r.checked, r.first_failure),
    )
}

fn c07_determinant() -> Outcome {
    let mut notes = Vec::new();
    for n in [2, 3] {
        let a = envelope::quantum_determinant(n).expect("within limits");
        if !envelope::determinant_noncentral_witnesses(n).expect("within limits").is_empty() {
            notes.push(format!("A(u) not central at N={n}"));
        }
        if envelope::hc_projection_upoly(&a, n) != envelope::hc_expected_determinant(n) {
            notes.push(format!("HC projection at N={n}"));
        }
        if !envelope::determinant_transposition_residual(n).expect("within limits").is_zero() {
            notes.push(format!("transposition at N={n}"));
        }
    }
    if !umatrix_is_zero(&envelope::comatrix_identity_residual(2).expect("within limits")) {
        notes.push("comatrix identity at N=2".into());
    }
    Outcome::expect_pass(
        notes.is_empty(),
        format!("centrality, HC projection, transposition at N=2,3; comatrix at N=2; failures {notes:?}"),
    )
}

fn c08_cayley_hamilton() -> Outcome {
    let mut bad = Vec::new();
    for (n, dual) in [(1, false), (2, false), (3, false), (1, true), (2, true)] {
        let res = envelope::cayley_hamilton_residual(n, dual).expect("within limits");
        if res.iter().any(|r| !r.is_zero()) {
            bad.push((n, dual));
        }
    }
    Outcome::expect_pass(
        bad.is_empty(),
        format!("A(Omega)=0 for N=1..3, A(Omega*-hbar)=0 for N=1,2; failures (N, dual) {bad:?}"),
    )
}

fn c09_weyl() -> Outcome {
    let r = verify_lr_identities(2);
    let bad: Vec<String> = r.iter().filter(|x| !x.pass).map(|x| x.name.clone()).collect();
    Outcome::expect_pass(bad.is_empty(), format!("three left/right identities at N=2; failures {bad:?}"))
}

fn c10_gklo() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for r in verify_relations(n) {
            if !r.pass {
                bad.push(format!("N={n} {} {:?}", r.id, r.witness));
            }
        }
    }
    Outcome::expect_pass(bad.is_empty(), format!("9 relation reports at N=1,2,3; failures {bad:?}"))
}

fn c11_monopole() -> Outcome {
    let cases = [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)];
    let bad: Vec<(usize, usize)> = cases
        .iter()
        .copied()
        .filter(|&(n, k)| !monopole(k, n).expect("valid k").pass)
        .collect();
    Outcome::expect_pass(bad.is_empty(), format!("(N,k) in {cases:?}; failures {bad:?}"))
}

fn c12_power_sums() -> Outcome {
    let h = hbar();
    let mut bad = Vec::new();
    for k in 1..=4 {
        for a in 0..=4 {
            if power_sum_from_generating_function(a, k, &h) != deformed_power_sum(a, k, &h).expect("k in range") {
                bad.push((k, a));
            }
        }
    }
    let not_invertible: Vec<usize> = (1..=5)
        .filter(|&k| !power_sum_transition(k, &h).expect("k in range").triangular_invertible)
        .collect();
    Outcome::expect_pass(
        bad.is_empty() && not_invertible.is_empty(),
        format!("generating function k,a<=4 mismatches {bad:?}; basis change not invertible at {not_invertible:?}"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("QYBE for the rational R-operator", c01_qybe),
        ("symmetrizer closed forms", c02_symmetrizers),
        ("idempotent factorizations", c03_idempotents),
        ("Hecke representation axioms", c04_hecke_axioms),
        ("FO vs Hecke product ratio", c05_products),
        ("shuffle current relation", c06_current_relation),
        ("quantum determinant and comatrix", c07_determinant),
        ("quantum Cayley-Hamilton", c08_cayley_hamilton),
        ("Weyl left/right identities", c09_weyl),
        ("GKLO relation suite", c10_gklo),
        ("monopole operators", c11_monopole),
        ("deformed power sums", c12_power_sums),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let o = f();
                    (o, t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut unexpected = 0;
    for (i, ((name, _), (o, dt))) in criteria.iter().zip(&results).enumerate() {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:2} {status} [{name}] tolerance={TOLERANCE} time={:.2}s :: {}",
            i + 1,
            dt.as_secs_f64(),
            o.detail
        );
        if !o.as_pinned {
            unexpected += 1;
            println!("criterion {:2} outcome differs from its pinned expectation", i + 1);
        }
    }
    let passed = results.iter().filter(|(o, _)| o.pass).count();
    println!("acceptance: {passed}/12 PASS, {unexpected} unexpected outcomes");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
