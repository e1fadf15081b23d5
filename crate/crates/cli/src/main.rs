use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bott_core::clifford::{clifford_group_test, phi_gram, spin_lift, volume_element, CliffordAlgebra, Multivector};
use bott_core::lambda::{
    bott_cyclotomic, bott_lines, bott_virtual, serre_sqrt, sphere_check, LambdaVector, LineExpr,
};
use bott_core::quadratic::{bw_class, hasse_witt, Place, QuadraticForm};
use bott_core::rings::{int, parse_rational};
use bott_core::spinor::{hermitian_bott, opposite_form_check};
use bott_core::verify::{run_suite, Suite};
use bott_core::{Caps, Error, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bott", version, about = "Exact Clifford, lambda-ring and Bott class computations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest quadratic form rank expanded on the blade basis.
    #[arg(long, global = true, default_value_t = Caps::default().max_dim)]
    max_dim: u32,
    /// Largest explicit tensor power dimension.
    #[arg(long, global = true, default_value_t = Caps::default().max_tensor)]
    max_tensor: u64,
    /// Largest number of truncated-ring variables.
    #[arg(long, global = true, default_value_t = Caps::default().max_vars)]
    max_vars: u32,
    /// Largest cyclotomic order.
    #[arg(long, global = true, default_value_t = Caps::default().max_k)]
    max_k: u32,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

impl Global {
    fn caps(&self) -> Caps {
        Caps {
            max_dim: self.max_dim,
            max_tensor: self.max_tensor,
            max_vars: self.max_vars,
            max_k: self.max_k,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a diagonal quadratic form, e.g. `qf 1,-1`.
    Qf {
        /// Comma-separated diagonal entries.
        #[arg(allow_hyphen_values = true)]
        diag: String,
        /// Places at which to report the Hasse-Witt invariant (primes or `inf`).
        #[arg(long, value_delimiter = ',')]
        primes: Vec<String>,
        /// Primes up to this bound are scanned for the Brauer-Wall class.
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Bott class of a line expression, or of the sphere generator.
    Bott {
        /// Line expression such as `L1 + 2*L2^-1`; unused in sphere mode.
        #[arg(allow_hyphen_values = true, default_value = "")]
        expr: String,
        #[arg(long, short)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Lines)]
        mode: Mode,
        /// Sphere dimension index for `--mode sphere`.
        #[arg(long, short)]
        r: Option<u32>,
    },
    /// Square root of the Bott class of a self-dual class of even rank.
    SerreSqrt {
        /// Line expression; alternatively give `--lambdas`.
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, short)]
        k: u32,
        /// Rational exterior powers λ¹..λⁿ, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        lambdas: Option<String>,
    },
    /// Volume element, trace forms and Clifford group membership.
    CliffordCheck {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// Multivector such as `1 + 2*e1e2`.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Spin lifts of the transpositions acting on `V^k`.
    SpinLift {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, short)]
        k: usize,
    },
    /// Adams operation and hermitian Bott class on the spinor module of `H(Q^m)`.
    AdamsModule {
        #[arg(long, short)]
        m: usize,
        #[arg(long, short)]
        k: usize,
        /// Also compare with the opposite form.
        #[arg(long)]
        opposite: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Lines,
    Cyclotomic,
    Sphere,
}

/// Exit status 2 for malformed input, 1 for everything else.
fn failure_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidPlace(_) | Error::DegenerateForm(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = cli.global.caps();
    match run(&cli, &caps) {
        Ok((report, ok)) => {
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            if let Err(e) = emit(&cli.global.out, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(failure_code(&e))
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")),
        None => writeln!(std::io::stdout(), "{text}"),
    }
}

fn parse_form(s: &str) -> bott_core::Result<QuadraticForm> {
    QuadraticForm::parse(s)
}

fn run(cli: &Cli, caps: &Caps) -> bott_core::Result<(Value, bool)> {
    match &cli.command {
        Command::Qf { diag, primes, bound } => qf(diag, primes, *bound),
        Command::Bott { expr, k, mode, r } => bott(expr, *k, *mode, *r, caps),
        Command::SerreSqrt { expr, k, lambdas } => serre(expr.as_deref(), *k, lambdas.as_deref(), caps),
        Command::CliffordCheck { form, element } => clifford_check(form, element.as_deref(), caps),
        Command::SpinLift { form, k } => {
            let lift = spin_lift(&parse_form(form)?, *k, caps)?;
            let ok = lift.relations_hold();
            Ok((json!(lift), ok))
        }
        Command::AdamsModule { m, k, opposite } => adams_module(*m, *k, *opposite, caps),
        Command::Verify { suite, timings } => {
            let suite: Suite = suite.parse()?;
            let start = Instant::now();
            let mut report = run_suite(suite, cli.global.seed, caps);
            if *timings {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let ok = report.all_pass();
            Ok((json!(report), ok))
        }
    }
}

fn qf(diag: &str, primes: &[String], bound: u64) -> bott_core::Result<(Value, bool)> {
    let q = parse_form(diag)?;
    let places: Vec<Place> = if primes.is_empty() {
        q.bad_primes()
            .into_iter()
            .chain([2])
            .map(Place::Prime)
            .chain([Place::Infinity])
            .collect()
    } else {
        primes.iter().map(|p| Place::parse(p)).collect::<bott_core::Result<_>>()?
    };
    let mut places = places;
    places.sort_by_key(|p| match p {
        Place::Prime(p) => *p,
        Place::Infinity => u64::MAX,
    });
    places.dedup();
    let mut hasse = serde_json::Map::new();
    let mut hasse_minus = Vec::new();
    for &v in &places {
        let h = hasse_witt(&q, v)?;
        hasse.insert(v.to_string(), json!(h));
        if h == -1 {
            hasse_minus.push(v);
        }
    }
    let orientation = q.orientation();
    let mut out = json!({
        "form": q.to_string(),
        "rank": q.rank(),
        "determinant": q.determinant().to_string(),
        "disc": json!(bw_class_disc(&q)),
        "hasse": hasse,
        "hasse_minus": hasse_minus,
        "orientable": orientation.orientable,
        "witness": orientation.witness.map(|w| w.to_string()),
    });
    match bw_class(&q, bound) {
        Ok(bw) => out["bw"] = json!(bw),
        Err(Error::IncompleteScan { .. }) => out["bw"] = Value::Null,
        Err(e) => return Err(e),
    }
    Ok((out, true))
}

fn bw_class_disc(q: &QuadraticForm) -> Value {
    let d = q.discriminant_class().to_string();
    d.parse::<i64>().map(|v| json!(v)).unwrap_or(json!(d))
}

fn bott(expr: &str, k: u32, mode: Mode, r: Option<u32>, caps: &Caps) -> bott_core::Result<(Value, bool)> {
    match mode {
        Mode::Sphere => {
            let r = r.ok_or_else(|| Error::InvalidArgument("sphere mode needs --r".into()))?;
            let check = sphere_check(r, k, caps)?;
            let ok = check.matches;
            let mut out = json!(check);
            out["ring"] = json!(format!("Q[x1..x{r}]/(xi^2)"));
            Ok((out, ok))
        }
        Mode::Lines => {
            let x = LineExpr::parse(expr)?;
            if x.is_effective() {
                let v = bott_lines(&x, k, caps)?;
                Ok((json!({ "input": x.to_string(), "k": k, "ring": "Z[L1, L1^-1, ...]", "class": v.to_string() }), true))
            } else {
                let v = bott_virtual(&x, k, caps)?;
                Ok((
                    json!({
                        "input": x.to_string(),
                        "k": k,
                        "ring": format!("Q[x1..x{}]/(xi^2)", v.vars()),
                        "substitution": "Li = 1 + xi",
                        "class": v.to_string(),
                    }),
                    true,
                ))
            }
        }
        Mode::Cyclotomic => {
            let x = LineExpr::parse(expr)?;
            let v = LambdaVector::from_lines(&x)?;
            let value = bott_cyclotomic(&v, k, caps)?;
            Ok((
                json!({ "input": x.to_string(), "k": k, "ring": "Z[L1, L1^-1, ...]", "via": format!("Q(w), w^{k} = 1"), "class": value.to_string() }),
                true,
            ))
        }
    }
}

fn serre(expr: Option<&str>, k: u32, lambdas: Option<&str>, caps: &Caps) -> bott_core::Result<(Value, bool)> {
    match (expr, lambdas) {
        (Some(e), None) => {
            let x = LineExpr::parse(e)?;
            let root = serre_sqrt(&LambdaVector::from_lines(&x)?, k, caps)?;
            Ok((
                json!({ "input": x.to_string(), "k": k, "value": root.value.to_string(), "sign_ambiguous": root.sign_ambiguous }),
                true,
            ))
        }
        (None, Some(l)) => {
            let lambdas: Vec<Rational> = l
                .split(',')
                .map(|t| parse_rational(t.trim()))
                .collect::<bott_core::Result<_>>()?;
            let v = LambdaVector::new(int(1), lambdas);
            let root = serre_sqrt(&v, k, caps)?;
            Ok((
                json!({ "lambdas": l, "k": k, "value": root.value.to_string(), "sign_ambiguous": root.sign_ambiguous }),
                true,
            ))
        }
        _ => Err(Error::InvalidArgument("give exactly one of EXPR or --lambdas".into())),
    }
}

fn clifford_check(form: &str, element: Option<&str>, caps: &Caps) -> bott_core::Result<(Value, bool)> {
    let q = parse_form(form)?;
    caps.check_dim(q.rank())?;
    let alg = CliffordAlgebra::new(q.clone());
    let mut out = json!({ "form": q.to_string(), "dim": alg.dim() });
    let mut ok = true;
    match volume_element(&alg) {
        Ok(u) => {
            let squares_one = u.mul(&u) == Multivector::one(&alg);
            let anticommutes = (0..q.rank()).all(|i| u.anticommutes_with(&Multivector::generator(&alg, i)));
            ok &= squares_one && anticommutes;
            out["volume"] = json!({ "u": u.to_string(), "squares_one": squares_one, "anticommutes": anticommutes });
        }
        Err(Error::NotOrientable(_)) => out["volume"] = Value::Null,
        Err(e) => return Err(e),
    }
    for parity in [0u8, 1] {
        let g = match phi_gram(&q, parity, caps) {
            Ok(g) => g,
            Err(Error::NotOrientable(_)) => {
                out[format!("phi{parity}")] = Value::Null;
                continue;
            }
            Err(e) => return Err(e),
        };
        let det = g.determinant();
        let shape = if parity == 0 { g.is_symmetric() } else { g.is_antisymmetric() };
        ok &= shape && det != int(0);
        out[format!("phi{parity}")] = json!({ "size": g.rows(), "determinant": det.to_string(), "shape_ok": shape });
    }
    if let Some(e) = element {
        let a = Multivector::parse(&alg, e)?;
        let m = clifford_group_test(&a)?;
        out["element"] = json!(a.to_string());
        out["membership"] = json!(m);
    }
    Ok((out, ok))
}

fn adams_module(m: usize, k: usize, opposite: bool, caps: &Caps) -> bott_core::Result<(Value, bool)> {
    let h = hermitian_bott(m, k, caps)?;
    let dims: Vec<Value> = (0..h.eigenmodules.even.len())
        .map(|j| json!({ "j": j, "even": h.eigenmodules.even[j], "odd": h.eigenmodules.odd[j] }))
        .collect();
    let mut ok = h.passes();
    let mut out = json!({
        "m": m,
        "k": k,
        "eigen_dims": dims,
        "psi_bar": h.psi_bar,
        "psi_char": h.psi_char,
        "rho_k": h.rho_k.to_string(),
        "rho_k_eigen": h.rho_k_eigen.to_string(),
        "expected": h.expected,
        "projectors_resolve_identity": h.projectors_resolve_identity,
        "tensor_relations": h.tensor_relations,
    });
    if opposite {
        let c = opposite_form_check(m, k, caps)?;
        ok &= c.passes();
        out["opposite"] = json!(c);
    }
    Ok((out, ok))
}
