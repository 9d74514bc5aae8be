//! The `secreg` command line.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3 a
//! verification claim failed. Results go to stdout (or `-o`), progress to
//! stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::catalog::{self, EXAMPLES};
use crate::coeffs::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use crate::cohom::{
    classify_degree_r_plus_1, default_window, e_invariant, index_of_normality, sheaf_cohomology_table,
    DeficiencyModules, InvariantReport,
};
use crate::error::Error;
use crate::formulas::extremal_secant_length;
use crate::gb::{write_ideal, Ideal, IdealFile};
use crate::geom::{sample_secant_lines, secant_length_by_hilbert, Surface, SurfaceKind, SurfaceSpec};
use crate::resolve::minimal_resolution;
use crate::verify::{ArtifactOptions, Artifacts, Verdict, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "secreg", version, about = "Surfaces of maximal sectional regularity: construction, resolutions, cohomology, secant lines")]
pub struct Cli {
    /// Characteristic of the coefficient field: a prime, or 0 for ℚ.
    #[arg(long = "char", global = true, default_value_t = DEFAULT_PRIME as u64)]
    pub characteristic: u64,
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "SECREG_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a surface and write its ideal file.
    Construct(ConstructArgs),
    /// Betti table of S/I.
    Betti { file: PathBuf },
    /// h^i(I_X(j)) for i = 1, 2, 3, with e(X) and N(X).
    Cohomology {
        file: PathBuf,
        /// Twist window `lo,hi`; defaults to [-(d+2), d-r+4].
        #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
        window: Option<(i64, i64)>,
    },
    /// sreg, depth, τ, e, N, σ and, for degree r+1, the case.
    Invariants {
        file: PathBuf,
        /// Random hyperplane sections used for sreg.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// Sample extremal secant lines and their Plücker span.
    Secant {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Run every check that applies to a constructed surface.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Verify the whole example catalog and the classification checks.
    DemoPaper {
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("family").required(true).args(["type1", "type2", "scroll"])))]
pub struct ConstructArgs {
    /// Divisor on the Segre threefold in P^5; needs -d.
    #[arg(long)]
    pub type1: bool,
    /// Projection of S(a, b); needs -a, -b and --f.
    #[arg(long)]
    pub type2: bool,
    /// Rational normal scroll with the given degrees, e.g. `1,2`.
    #[arg(long, value_delimiter = ',')]
    pub scroll: Option<Vec<u32>>,
    #[arg(short = 'd')]
    pub d: Option<u32>,
    #[arg(short = 'a')]
    pub a: Option<u32>,
    #[arg(short = 'b')]
    pub b: Option<u32>,
    /// Binary form of degree b in s, t.
    #[arg(long = "f")]
    pub f: Option<String>,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

struct Outcome {
    body: String,
    passed: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, passed: true }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.characteristic {
        0 => dispatch(Rationals, &cli),
        p => match u32::try_from(p).map_err(|_| Error::Precondition(format!("characteristic {p} too large"))).and_then(PrimeField::new) {
            Ok(f) => dispatch(f, &cli),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
    };
    match result {
        Ok(out) => {
            if let Err(e) = emit(cli.output.as_deref(), &out.body) {
                eprintln!("secreg: cannot write output: {e}");
                return 1;
            }
            if out.passed {
                0
            } else {
                3
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("secreg: {m}");
            2
        }
        Err(Failure::Compute(e)) => {
            eprintln!("secreg: {e}");
            1
        }
    }
}

fn emit(path: Option<&Path>, body: &str) -> std::io::Result<()> {
    let mut body = body.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match path {
        Some(p) => std::fs::write(p, body),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(body.as_bytes())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

fn dispatch<F: Field>(field: F, cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Construct(args) => construct(&field, cli.format, args),
        Command::Betti { file } => {
            let (ideal, _) = load(&field, file)?;
            let b = minimal_resolution(&ideal)?.betti_table()?;
            Ok(Outcome::ok(match cli.format {
                Format::Text => b.to_text(),
                Format::Json => pretty(&b.to_json()),
                Format::Csv => b.to_csv(),
            }))
        }
        Command::Cohomology { file, window } => {
            let (ideal, surface) = load(&field, file)?;
            let (lo, hi) = match (window, &surface) {
                (Some(w), _) => *w,
                (None, Some(s)) => default_window(s.spec.d as i64, s.spec.r as i64),
                (None, None) => {
                    let (_, d) = DeficiencyModules::new(&ideal)?.dim_degree()?;
                    default_window(d, ideal.ring().nvars() as i64 - 1)
                }
            };
            let (mut t, def) = sheaf_cohomology_table(&ideal, lo, hi)?;
            t.e = Some(e_invariant(&def)?);
            t.normality = index_of_normality(&def)?;
            Ok(Outcome::ok(match cli.format {
                Format::Text => t.to_text(),
                Format::Json => pretty(&t.to_json()),
                Format::Csv => t.to_csv(),
            }))
        }
        Command::Invariants { file, samples } => {
            let (ideal, surface) = load(&field, file)?;
            let y = match &surface {
                Some(s) => s.union()?,
                None => None,
            };
            let rep = InvariantReport::compute(&ideal, y.as_ref(), *samples, cli.seed)?;
            let case = if rep.d == rep.r + 1 && rep.r >= 5 && rep.dim == 2 {
                match classify_degree_r_plus_1(&rep) {
                    Ok(c) => json!(c.0),
                    Err(Error::Unclassified(_)) => Value::Null,
                    Err(e) => return Err(e.into()),
                }
            } else {
                Value::Null
            };
            let mut v = serde_json::to_value(&rep).expect("plain data");
            v["normality"] = rep.normality.map_or(json!("-inf"), |n| json!(n));
            v["case"] = case;
            Ok(Outcome::ok(match cli.format {
                Format::Json => pretty(&v),
                Format::Text | Format::Csv => key_values(&v, cli.format),
            }))
        }
        Command::Secant { file, samples } => {
            let (ideal, surface) = load(&field, file)?;
            let s = require_surface(surface, "secant")?;
            secant(&field, &s, &ideal, *samples, cli.seed, cli.format)
        }
        Command::Verify { file, samples } => {
            let (_, surface) = load(&field, file)?;
            let s = require_surface(surface, "verify")?;
            let a = Artifacts::compute(&s, ArtifactOptions { secant_samples: *samples, seed: cli.seed })?;
            let rep = match EXAMPLES.iter().find(|e| e.family.kind() == s.spec.kind) {
                Some(ex) => ex.verify(&s.spec, &a),
                None => crate::verify::verify_surface(&s.spec, &a),
            };
            Ok(report_outcome(&rep, cli, Value::Null))
        }
        Command::DemoPaper { jobs, samples } => demo(&field, cli, *jobs, *samples),
    }
}

fn construct<F: Field>(field: &F, format: Format, args: &ConstructArgs) -> Result<Outcome, Failure> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("construct needs {flag}")));
    let kind = if args.type1 {
        SurfaceKind::TypeI { d: need(args.d, "-d")? }
    } else if args.type2 {
        let f = args.f.clone().ok_or_else(|| Failure::Usage("construct --type2 needs --f".into()))?;
        SurfaceKind::TypeII { a: need(args.a, "-a")?, b: need(args.b, "-b")?, f }
    } else {
        SurfaceKind::Scroll { degrees: args.scroll.clone().unwrap_or_default() }
    };
    let s = Surface::build(field, &kind).map_err(|e| match e {
        Error::Precondition(m) | Error::Parse { msg: m, .. } => Failure::Usage(m),
        e => Failure::Compute(e),
    })?;
    Ok(Outcome::ok(match format {
        Format::Text => format!("{}\n{}", s.spec.header_line(), write_ideal(&s.ideal)),
        Format::Json => pretty(&json!({
            "surface": s.spec,
            "characteristic": field.characteristic(),
            "variables": s.ideal.ring().names(),
            "generators": s.ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })),
        Format::Csv => return Err(Failure::Usage("construct writes text or json".into())),
    }))
}

/// Reads an ideal file. The surface is rebuilt from the `# surface` header
/// when there is one and it reproduces the generators in the file.
fn load<F: Field>(field: &F, path: &Path) -> Result<(Ideal<F>, Option<Surface<F>>), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let file = IdealFile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let ideal = file.to_ideal(field.clone()).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let spec: Option<SurfaceSpec> = SurfaceSpec::from_ideal_text(&text)
        .transpose()
        .map_err(|e| Failure::Usage(format!("{}: bad surface header: {e}", path.display())))?;
    let surface = match spec {
        Some(spec) => {
            let s = Surface::build(field, &spec.kind)?;
            if write_ideal(&s.ideal) == write_ideal(&ideal) {
                Some(s)
            } else {
                eprintln!("secreg: {}: generators differ from the recorded construction; header ignored", path.display());
                None
            }
        }
        None => None,
    };
    Ok((ideal, surface))
}

fn require_surface<F: Field>(s: Option<Surface<F>>, cmd: &str) -> Result<Surface<F>, Failure> {
    s.ok_or_else(|| Failure::Usage(format!("{cmd} needs an ideal file written by `secreg construct`")))
}

fn key_values(v: &Value, format: Format) -> String {
    let obj = v.as_object().expect("object");
    let mut s = String::new();
    if format == Format::Csv {
        s.push_str("key,value\n");
    }
    for (k, x) in obj {
        let x = match x {
            Value::String(t) => t.clone(),
            other => other.to_string(),
        };
        match format {
            Format::Csv => {
                let _ = writeln!(s, "{k},\"{}\"", x.replace('"', "\"\""));
            }
            _ => {
                let _ = writeln!(s, "{k:<14} {x}");
            }
        }
    }
    s
}

fn secant<F: Field>(
    field: &F,
    s: &Surface<F>,
    ideal: &Ideal<F>,
    n: usize,
    seed: u64,
    format: Format,
) -> Result<Outcome, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let samples = sample_secant_lines(&s.spec, ideal, n, seed)?;
    let want = extremal_secant_length(s.spec.d as i64, s.spec.r as i64);
    let elems = |v: &[F::Elem]| v.iter().map(|x| field.to_element(x).to_string()).collect::<Vec<_>>();
    let mut rows = Vec::new();
    for smp in &samples {
        let oracle = secant_length_by_hilbert(ideal, &smp.line)?;
        rows.push((elems(&smp.line.p), elems(&smp.line.q), smp.length, oracle));
    }
    let pts: Vec<_> = samples.iter().map(|x| x.plucker.clone()).collect();
    let span = if pts.len() >= 2 { Some(crate::geom::plucker_span(field, &pts)?) } else { None };
    let body = match format {
        Format::Json => pretty(&json!({
            "expected_length": want,
            "lines": rows.iter().map(|(p, q, l, o)| json!({ "p": p, "q": q, "length": l, "length_hilbert": o })).collect::<Vec<_>>(),
            "span": span,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["line", "length", "length_hilbert", "p", "q"]).expect("in-memory");
            for (k, (p, q, l, o)) in rows.iter().enumerate() {
                w.write_record([k.to_string(), l.to_string(), o.to_string(), p.join(" "), q.join(" ")])
                    .expect("in-memory");
            }
            String::from_utf8(w.into_inner().expect("in-memory")).expect("utf8")
        }
        Format::Text => {
            let mut t = format!("{}\nexpected length d-r+3 = {want}\n", s.spec);
            for (k, (p, q, l, o)) in rows.iter().enumerate() {
                let _ = writeln!(t, "{k:>3}  length {l} (oracle {o})  p = [{}]  q = [{}]", p.join(", "), q.join(", "));
            }
            if let Some(sp) = &span {
                let _ = writeln!(
                    t,
                    "plucker span dim {}, quadrics {} (fit {}, holdout {}, check {})",
                    sp.span_dim, sp.quadric_dim, sp.fit, sp.holdout, sp.quadric_check
                );
            }
            t
        }
    };
    Ok(Outcome::ok(body))
}

fn report_outcome(rep: &VerificationReport, cli: &Cli, meta: Value) -> Outcome {
    let body = match cli.format {
        Format::Text => rep.to_string(),
        Format::Csv => rep.to_csv(),
        Format::Json => {
            let mut v = json!({
                "seed": cli.seed,
                "characteristic": cli.characteristic,
                "passed": rep.passed(),
                "summary": {
                    "pass": rep.count(Verdict::Pass),
                    "fail": rep.count(Verdict::Fail),
                    "skipped": rep.count(Verdict::Skipped),
                },
                "claims": rep.to_json(),
            });
            if !meta.is_null() {
                v["examples"] = meta;
            }
            pretty(&v)
        }
    };
    Outcome { body, passed: rep.passed() }
}

fn demo<F: Field>(field: &F, cli: &Cli, jobs: Option<usize>, samples: usize) -> Result<Outcome, Failure> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let opts = ArtifactOptions { secant_samples: samples, seed: cli.seed };
    let total = EXAMPLES.len();
    let results: Vec<_> = pool.install(|| {
        EXAMPLES
            .par_iter()
            .map(|ex| {
                let t = std::time::Instant::now();
                let r = catalog::run_example(field, ex, opts);
                let status = match &r {
                    Ok(rep) if rep.passed() => "pass".to_string(),
                    Ok(rep) => format!("{} failed", rep.count(Verdict::Fail)),
                    Err(e) => format!("error: {e}"),
                };
                eprintln!("[demo] {:<16} {status} ({:.1?})", ex.id, t.elapsed());
                r
            })
            .collect()
    });
    let mut rep = VerificationReport::default();
    let mut ids = Vec::with_capacity(total);
    for (ex, r) in EXAMPLES.iter().zip(results) {
        let r = r.map_err(|e| Failure::Compute(Error::Construction(format!("{}: {e}", ex.id))))?;
        ids.push(ex.id);
        rep.extend(r);
    }
    eprintln!("[demo] classification");
    rep.extend(catalog::classification_checks(field, cli.seed)?);
    Ok(report_outcome(&rep, cli, json!(ids)))
}
