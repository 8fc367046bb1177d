//! `qshuffle` command-line front end.
//!
//! Exit status: 0 on success or PASS, 1 when a verification fails, 2 on
//! usage and input errors.

mod suite;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qshuffle::diffops::Dop;
use qshuffle::envelope::{self, MinorForm};
use qshuffle::gklo::{self, CurrentKind};
use qshuffle::heckerep::{self, Partition};
use qshuffle::permops::{self, Sign};
use qshuffle::shuffle::{self, Component};
use qshuffle::weylmat;
use qshuffle::{AlgError, Poly, Rf};

#[derive(Parser)]
#[command(name = "qshuffle", version, about = "Exact computations with shuffle algebras, Hecke operators and difference operators")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Products in the rational shuffle algebra.
    #[command(subcommand)]
    Shuffle(ShuffleCmd),
    /// Demazure operators, symmetrizers and symmetric functions.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Permutation-algebra R-operators and idempotents.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Quantum minors and determinants in the universal enveloping algebra.
    #[command(subcommand)]
    U(UCmd),
    /// Matrix Weyl algebra identities.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Difference operators.
    #[command(subcommand)]
    Dop(DopCmd),
    /// GKLO images, relations, modes and monopole operators.
    #[command(subcommand)]
    Gklo(GkloCmd),
    /// Aggregate verification.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct ProductArgs {
    /// Degree of the first factor.
    #[arg(long)]
    k: usize,
    /// Degree of the second factor.
    #[arg(long)]
    l: usize,
    /// First factor, symmetric in Y1..Yk.
    #[arg(long)]
    f: String,
    /// Second factor, symmetric in Y1..Yl.
    #[arg(long)]
    g: String,
    /// Deformation parameter.
    #[arg(long, default_value = "kappa")]
    kappa: String,
}

#[derive(Subcommand)]
enum ShuffleCmd {
    /// Feigin-Odesskii product.
    Fo(ProductArgs),
    /// Hecke shuffle product.
    Hecke(ProductArgs),
    /// Ratio of the two products against the binomial coefficient.
    Compare(ProductArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Apply the Demazure-type operator sigma_i.
    Sigma {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "kappa")]
        kappa: String,
    },
    /// Closed-form symmetrizer or antisymmetrizer applied to f.
    Sym {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
        #[arg(long, default_value = "kappa")]
        kappa: String,
    },
    /// Rational Hall-Littlewood polynomial.
    Hl {
        /// Partition, comma separated.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
    },
    /// Schur polynomial.
    Schur {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
    },
    /// Deformed power sum p_a.
    Psum {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum PermCmd {
    /// Quantum Yang-Baxter equation at k = 3.
    Qybe,
    /// Symmetrizer product against its closed form.
    Sym {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Idempotent from R-operators against the group idempotent.
    Idem {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Row,
    Column,
}

#[derive(Subcommand)]
enum UCmd {
    /// Quantum minor T^{rows}_{cols}(u).
    Qminor {
        #[arg(long = "N")]
        n: usize,
        /// Upper indices, comma separated.
        #[arg(long)]
        rows: String,
        /// Lower indices, comma separated.
        #[arg(long)]
        cols: String,
        #[arg(long, value_enum, default_value = "row")]
        form: FormArg,
    },
    /// Quantum determinant A(u).
    Qdet {
        #[arg(long = "N")]
        n: usize,
    },
    /// Harish-Chandra projection of the quantum determinant.
    Hc {
        #[arg(long = "N")]
        n: usize,
    },
    /// Cayley-Hamilton identity on the vector or dual module.
    ChCheck {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        dual: bool,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// gl_N relations and left/right identities.
    Verify {
        #[arg(long = "N")]
        n: usize,
    },
}

#[derive(Subcommand)]
enum DopCmd {
    /// Product a*b.
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Also check that coefficients have root denominators for this rank.
        #[arg(long = "N")]
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GkloCmd {
    /// Image of a current.
    Image {
        /// One of x+, x-, d1, d2, h.
        #[arg(long)]
        kind: String,
        #[arg(long = "N")]
        n: usize,
    },
    /// Defining relations on the images.
    Verify {
        #[arg(long = "N")]
        n: usize,
    },
    /// Image of the minor function against the monopole formula.
    Monopole {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Mode u^{-R} of a current.
    Mode {
        #[arg(long)]
        kind: String,
        #[arg(long = "N")]
        n: usize,
        /// Mode index.
        #[arg(long = "R")]
        r: i64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every module suite at rank N.
    All {
        #[arg(long = "N")]
        n: usize,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Degree bound for random polynomials.
        #[arg(long = "max-degree", default_value_t = 3)]
        max_degree: u32,
    },
}

/// Result of one invocation.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn value(text: String, json: Value) -> Report {
        Report { text, json, ok: true }
    }

    fn check(text: String, json: Value, pass: bool) -> Report {
        Report { text, json, ok: pass }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn poly(s: &str) -> Result<Poly, AlgError> {
    Rf::parse(s)?.into_poly()
}

fn indices(s: &str) -> Result<Vec<usize>, AlgError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| AlgError::InvalidArgument(format!("bad index list '{s}'")))
        })
        .collect()
}

fn kind(s: &str) -> Result<CurrentKind, AlgError> {
    CurrentKind::parse(s).ok_or_else(|| AlgError::InvalidArgument(format!("unknown current '{s}'")))
}

fn components(a: &ProductArgs) -> Result<(Component, Component, Poly), AlgError> {
    Ok((
        Component::new(a.k, poly(&a.f)?)?,
        Component::new(a.l, poly(&a.g)?)?,
        poly(&a.kappa)?,
    ))
}

fn run_shuffle(c: ShuffleCmd) -> Result<Report, AlgError> {
    match c {
        ShuffleCmd::Fo(a) => {
            let (f, g, k) = components(&a)?;
            let p = shuffle::fo_product(&f, &g, &k);
            Ok(Report::value(p.poly().to_string(), json!({"degree": p.degree(), "product": p.poly().to_string()})))
        }
        ShuffleCmd::Hecke(a) => {
            let (f, g, k) = components(&a)?;
            let p = shuffle::hecke_product(&f, &g, &k);
            Ok(Report::value(p.poly().to_string(), json!({"degree": p.degree(), "product": p.poly().to_string()})))
        }
        ShuffleCmd::Compare(a) => {
            let (f, g, k) = components(&a)?;
            let r = shuffle::compare_products(&f, &g, &k);
            let ratio = r.ratio.as_ref().map_or("FAIL".to_string(), |q| q.to_string());
            let text = format!(
                "lhs: {}\nrhs: {}\nratio: {ratio}\nexpected: {}\n{}",
                r.fo,
                r.hecke,
                r.expected,
                verdict(r.pass)
            );
            let j = json!({
                "lhs": r.fo.to_string(),
                "rhs": r.hecke.to_string(),
                "ratio": ratio,
                "expected": r.expected.to_string(),
                "pass": r.pass,
            });
            Ok(Report::check(text, j, r.pass))
        }
    }
}

fn run_hecke(c: HeckeCmd) -> Result<Report, AlgError> {
    let hbar = Poly::var(qshuffle::Var::Hbar);
    let (text, name) = match c {
        HeckeCmd::Sigma { i, f, kappa } => {
            if i == 0 {
                return Err(AlgError::InvalidArgument("i starts at 1".into()));
            }
            (heckerep::apply_sigma(i, &poly(&kappa)?, &poly(&f)?).to_string(), "result")
        }
        HeckeCmd::Sym { k, f, sign, kappa } => (
            heckerep::apply_symmetrizer(k, &poly(&kappa)?, sign.into(), &poly(&f)?)?.to_string(),
            "result",
        ),
        HeckeCmd::Hl { lambda, k } => (
            heckerep::hall_littlewood_rational(&Partition::parse(&lambda)?, k, &hbar)?.to_string(),
            "hall_littlewood",
        ),
        HeckeCmd::Schur { lambda, k } => (heckerep::schur(&Partition::parse(&lambda)?, k)?.to_string(), "schur"),
        HeckeCmd::Psum { a, k } => (heckerep::deformed_power_sum(a, k, &hbar)?.to_string(), "power_sum"),
    };
    Ok(Report::value(text.clone(), json!({ name: text })))
}

fn run_perm(c: PermCmd) -> Result<Report, AlgError> {
    let kappa = Rf::var(qshuffle::Var::Kappa);
    let check_rank = |k: usize| {
        if (1..=6).contains(&k) {
            Ok(())
        } else {
            Err(AlgError::SizeGuard(format!("k={k} outside 1..6")))
        }
    };
    match c {
        PermCmd::Qybe => {
            let (l, r) = permops::qybe_sides();
            let pass = l == r;
            Ok(Report::check(verdict(pass).into(), json!({"check": "qybe", "k": 3, "pass": pass}), pass))
        }
        PermCmd::Sym { k, sign } => {
            check_rank(k)?;
            let sign: Sign = sign.into();
            let product = permops::su_symmetrizer(k, &kappa, sign);
            let closed = match sign {
                Sign::Plus => permops::symmetrizer_closed_form(k, &kappa),
                Sign::Minus => permops::antisymmetrizer_closed_form(k, &kappa),
            };
            let pass = product == closed;
            let text = format!("{product}\n{}", verdict(pass));
            Ok(Report::check(text, json!({"element": product.to_string(), "k": k, "pass": pass}), pass))
        }
        PermCmd::Idem { k, sign } => {
            check_rank(k)?;
            let sign: Sign = sign.into();
            let via_r = permops::hecke_idempotent_via_r(k, sign);
            let group = permops::group_idempotent(k, sign);
            let pass = via_r == group;
            let text = format!("{via_r}\n{}", verdict(pass));
            let j = json!({"computed": via_r.to_string(), "expected": group.to_string(), "k": k, "pass": pass});
            Ok(Report::check(text, j, pass))
        }
    }
}

fn run_u(c: UCmd) -> Result<Report, AlgError> {
    match c {
        UCmd::Qminor { n, rows, cols, form } => {
            let form = match form {
                FormArg::Row => MinorForm::Row,
                FormArg::Column => MinorForm::Column,
            };
            let m = envelope::quantum_minor(&indices(&rows)?, &indices(&cols)?, n, form)?;
            Ok(Report::value(m.to_string(), json!({"minor": m.to_string()})))
        }
        UCmd::Qdet { n } => {
            let d = envelope::quantum_determinant(n)?;
            Ok(Report::value(d.to_string(), json!({"N": n, "determinant": d.to_string()})))
        }
        UCmd::Hc { n } => {
            let got = envelope::hc_projection_upoly(&envelope::quantum_determinant(n)?, n);
            let want = envelope::hc_expected_determinant(n);
            let pass = got == want;
            let text = format!("{got}\n{}", verdict(pass));
            let j = json!({"N": n, "projection": got.to_string(), "expected": want.to_string(), "pass": pass});
            Ok(Report::check(text, j, pass))
        }
        UCmd::ChCheck { n, dual } => {
            let res = envelope::cayley_hamilton_residual(n, dual)?;
            let bad: Vec<usize> = res.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(|(a, _)| a + 1).collect();
            let pass = bad.is_empty();
            let text = if pass {
                "PASS".to_string()
            } else {
                format!("nonzero residual at basis vectors {bad:?}\nFAIL")
            };
            Ok(Report::check(text, json!({"N": n, "dual": dual, "failures": bad, "pass": pass}), pass))
        }
    }
}

fn run_weyl(c: WeylCmd) -> Result<Report, AlgError> {
    let WeylCmd::Verify { n } = c;
    if !(1..=4).contains(&n) {
        return Err(AlgError::SizeGuard(format!("N={n} outside 1..4")));
    }
    let reps: Vec<_> = weylmat::verify_gl_relations(n).into_iter().chain(weylmat::verify_lr_identities(n)).collect();
    let pass = reps.iter().all(|r| r.pass);
    let mut text: Vec<String> = reps.iter().map(|r| format!("{} {}", verdict(r.pass), r.name)).collect();
    text.push(verdict(pass).into());
    let items: Vec<Value> = reps
        .iter()
        .map(|r| json!({"name": r.name, "pass": r.pass, "witness": r.witness}))
        .collect();
    Ok(Report::check(text.join("\n"), json!({"N": n, "reports": items, "pass": pass}), pass))
}

fn run_dop(c: DopCmd) -> Result<Report, AlgError> {
    let DopCmd::Mul { a, b, n } = c;
    let p = Dop::parse(&a)?.checked_mul(&Dop::parse(&b)?)?;
    match n {
        None => Ok(Report::value(p.to_string(), json!({"product": p.to_string()}))),
        Some(n) => {
            let adm = p.coeffs_admissible(n);
            let text = format!("{p}\nadmissible: {adm}");
            Ok(Report::value(text, json!({"product": p.to_string(), "admissible": adm})))
        }
    }
}

fn check_gklo_rank(n: usize) -> Result<(), AlgError> {
    if (1..=4).contains(&n) {
        Ok(())
    } else {
        Err(AlgError::SizeGuard(format!("N={n} outside 1..4")))
    }
}

fn run_gklo(c: GkloCmd) -> Result<Report, AlgError> {
    match c {
        GkloCmd::Image { kind: k, n } => {
            check_gklo_rank(n)?;
            let img = gklo::gklo_image(kind(&k)?, n);
            let s = img.value.to_string();
            Ok(Report::value(s.clone(), json!({"kind": img.kind.to_string(), "N": n, "image": s})))
        }
        GkloCmd::Verify { n } => {
            check_gklo_rank(n)?;
            let reps = gklo::verify_relations(n);
            let pass = reps.iter().all(|r| r.pass);
            let mut text: Vec<String> = reps.iter().map(|r| format!("{} {}", verdict(r.pass), r.id)).collect();
            text.push(verdict(pass).into());
            let items: Vec<Value> = reps
                .iter()
                .map(|r| json!({"id": r.id, "pass": r.pass, "witness": r.witness}))
                .collect();
            Ok(Report::check(text.join("\n"), json!({"N": n, "relations": items, "pass": pass}), pass))
        }
        GkloCmd::Monopole { n, k } => {
            check_gklo_rank(n)?;
            if k > 6 {
                return Err(AlgError::SizeGuard(format!("k={k} exceeds 6")));
            }
            let r = gklo::monopole(k, n)?;
            let text = format!("{}\n{}", r.computed, verdict(r.pass));
            let j = json!({
                "N": n,
                "k": k,
                "computed": r.computed.to_string(),
                "predicted": r.predicted.to_string(),
                "degenerate": r.degenerate,
                "pass": r.pass,
            });
            Ok(Report::check(text, j, r.pass))
        }
        GkloCmd::Mode { kind: k, n, r } => {
            check_gklo_rank(n)?;
            let kind = kind(&k)?;
            let m = gklo::mode(&gklo::gklo_image(kind, n), r);
            let s = m.to_string();
            Ok(Report::value(s.clone(), json!({"kind": kind.to_string(), "N": n, "R": r, "mode": s})))
        }
    }
}

fn run(cmd: Cmd) -> Result<Report, AlgError> {
    match cmd {
        Cmd::Shuffle(c) => run_shuffle(c),
        Cmd::Hecke(c) => run_hecke(c),
        Cmd::Perm(c) => run_perm(c),
        Cmd::U(c) => run_u(c),
        Cmd::Weyl(c) => run_weyl(c),
        Cmd::Dop(c) => run_dop(c),
        Cmd::Gklo(c) => run_gklo(c),
        Cmd::Verify(VerifyCmd::All { n, seed, max_degree }) => suite::verify_all(n, seed, max_degree),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli.cmd) {
        Ok(rep) => {
            if json_mode {
                println!("{}", serde_json::to_string_pretty(&rep.json).expect("serializable"));
            } else {
                println!("{}", rep.text);
            }
            if rep.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json_mode {
                println!("{}", json!({"error": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
