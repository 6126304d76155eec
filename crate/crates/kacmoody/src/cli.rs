//! Command-line frontend: matrix ingestion, root queries, algebra
//! construction with caching, element evaluation, subalgebra analysis, and
//! verification-report emission.
//!
//! Exit codes: 0 pass, 1 fail/violation, 2 usage or inconclusive-only,
//! 3 resource limit.

use crate::engine::{parse_element, BuildOptions, EngineError, GradedAlgebra};
use crate::exact::rat_to_string;
use crate::gcm::{Gcm, GcmFile, SymmetrizationFile};
use crate::roots;
use crate::rootvec::RootVector;
use crate::subalgebra::{self, SeriesKind};
use crate::verify::{self, VerifyParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "kacmoody",
    about = "Exact computations in truncated symmetrisable Kac-Moody algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for human consumption or machines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate, symmetrise, or classify a generalised Cartan matrix.
    Gcm {
        #[command(subcommand)]
        action: GcmAction,
    },
    /// Root-lattice queries: enumeration, classification, root strings.
    Roots {
        #[command(subcommand)]
        action: RootsAction,
    },
    /// Build the truncated algebra and persist its structure constants.
    Build(BuildArgs),
    /// Evaluate a bracket expression, optionally applying automorphisms.
    Eval(EvalArgs),
    /// Analyse a graded subalgebra fixture.
    Subalgebra(SubalgebraArgs),
    /// Run a verification suite and emit its report.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GcmAction {
    /// Check the matrix axioms.
    Check(GcmInput),
    /// Compute the symmetrisation `A = DB`.
    Symmetrize(GcmInput),
    /// Classify subdiagram components as finite, affine, or indefinite.
    Classify {
        #[command(flatten)]
        input: GcmInput,
        /// Vertex subset, 1-based, comma-separated; defaults to all.
        #[arg(long)]
        subset: Option<String>,
    },
}

#[derive(Args)]
struct GcmInput {
    /// Path to a JSON file of the form {"matrix": [[...], ...]}.
    #[arg(long)]
    gcm: PathBuf,
}

#[derive(Subcommand)]
enum RootsAction {
    /// All positive roots up to a height, one JSON record per line.
    Enumerate {
        #[command(flatten)]
        input: GcmInput,
        #[arg(long)]
        height: i64,
        /// Resource guard on the requested height.
        #[arg(long, default_value_t = roots::DEFAULT_MAX_HEIGHT)]
        max_height: i64,
    },
    /// Classify one lattice vector.
    Classify {
        #[command(flatten)]
        input: GcmInput,
        /// Coordinates over the simple roots, comma-separated.
        #[arg(long)]
        coords: String,
    },
    /// Root string of `beta` through a real root `alpha`.
    String {
        #[command(flatten)]
        input: GcmInput,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    input: GcmInput,
    #[arg(long)]
    height: i64,
    /// Cache directory; defaults to $KM_CACHE_DIR or `.kacmoody-cache`.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Cap on Lyndon candidates per degree.
    #[arg(long, default_value_t = BuildOptions::default().max_candidates)]
    max_candidates: usize,
    /// Cap on echelon coefficient bit size.
    #[arg(long, default_value_t = BuildOptions::default().max_coeff_bits)]
    max_coeff_bits: u64,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    input: GcmInput,
    #[arg(long)]
    height: i64,
    /// Bracket expression over e<i>, f<i>, h<i>, d<i>.
    #[arg(long)]
    expr: String,
    /// Automorphisms applied left to right: `omega` or `s<i>*`.
    #[arg(long = "apply")]
    apply: Vec<String>,
}

#[derive(Args)]
struct SubalgebraArgs {
    #[command(flatten)]
    input: GcmInput,
    #[arg(long)]
    height: i64,
    /// JSON fixture: {"generators": [...], "patterns": [...]}.
    #[arg(long)]
    fixture: PathBuf,
    #[arg(long, default_value_t = 16)]
    max_steps: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: theorem-a, bracket-zero, dim-corollary, ad-power,
    /// free-heisenberg, lemma-54, regressions, or all.
    suite: String,
    /// Required for every suite except `regressions`.
    #[arg(long)]
    gcm: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    height: i64,
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report here as well as summarising to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Gcm(#[from] crate::gcm::GcmError),
    #[error(transparent)]
    Root(#[from] crate::roots::RootError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Subalgebra(#[from] subalgebra::SubalgebraError),
    #[error("{0}")]
    Usage(String),
}

fn exit_code_for(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) => EXIT_USAGE,
        CliError::Engine(EngineError::ResourceLimit { .. }) => EXIT_RESOURCE,
        CliError::Root(crate::roots::RootError::HeightBoundTooLarge { .. }) => EXIT_RESOURCE,
        _ => EXIT_FAIL,
    }
}

fn load_gcm(path: &PathBuf) -> Result<Gcm, CliError> {
    let bytes = std::fs::read(path)?;
    let file: GcmFile = serde_json::from_slice(&bytes)?;
    Ok(Gcm::new(file.matrix)?)
}

fn parse_coords(text: &str, n: usize) -> Result<RootVector, CliError> {
    let coords: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| CliError::Usage(format!("bad coordinate list `{text}`")))?;
    if coords.len() != n {
        return Err(CliError::Usage(format!(
            "expected {n} coordinates, found {}",
            coords.len()
        )));
    }
    Ok(RootVector(coords))
}

fn emit(format: Format, value: &serde_json::Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serialises")),
        Format::Text => println!("{text}"),
    }
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Gcm { action } => run_gcm(action, cli.format),
        Command::Roots { action } => run_roots(action, cli.format),
        Command::Build(args) => run_build(args, cli.format),
        Command::Eval(args) => run_eval(args, cli.format),
        Command::Subalgebra(args) => run_subalgebra(args, cli.format),
        Command::Verify(args) => run_verify(args, cli.format),
    }
}

fn run_gcm(action: &GcmAction, format: Format) -> Result<i32, CliError> {
    match action {
        GcmAction::Check(input) => {
            let a = load_gcm(&input.gcm)?;
            emit(
                format,
                &serde_json::json!({"valid": true, "rank": a.rank()}),
                format!("valid generalised Cartan matrix of rank {}", a.rank()),
            );
            Ok(EXIT_PASS)
        }
        GcmAction::Symmetrize(input) => {
            let a = load_gcm(&input.gcm)?;
            let s = a.symmetrize()?;
            let file = SymmetrizationFile::from(&s);
            emit(
                format,
                &serde_json::to_value(&file)?,
                format!("d = {:?}, b = {:?}", file.d, file.b),
            );
            Ok(EXIT_PASS)
        }
        GcmAction::Classify { input, subset } => {
            let a = load_gcm(&input.gcm)?;
            let verts: Vec<usize> = match subset {
                None => (0..a.rank()).collect(),
                Some(text) => {
                    let parsed: Result<Vec<usize>, _> =
                        text.split(',').map(|t| t.trim().parse::<usize>()).collect();
                    parsed
                        .map_err(|_| CliError::Usage(format!("bad subset `{text}`")))?
                        .into_iter()
                        .map(|i| i.wrapping_sub(1))
                        .collect()
                }
            };
            let classes = a.classify_subdiagram(&verts)?;
            let value: Vec<serde_json::Value> = classes
                .iter()
                .map(|(comp, t)| {
                    serde_json::json!({
                        "component": comp.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        "type": t.to_string(),
                    })
                })
                .collect();
            let text = classes
                .iter()
                .map(|(comp, t)| {
                    format!("{:?}: {t}", comp.iter().map(|i| i + 1).collect::<Vec<_>>())
                })
                .collect::<Vec<_>>()
                .join("; ");
            emit(format, &serde_json::Value::Array(value), text);
            Ok(EXIT_PASS)
        }
    }
}

fn root_record(
    a: &Gcm,
    s: &crate::gcm::Symmetrization,
    v: &RootVector,
) -> Result<serde_json::Value, CliError> {
    let class = roots::classify_root(a, s, v);
    let norm = s.norm(v)?;
    Ok(serde_json::json!({
        "coords": v.0,
        "kind": format!("{:?}", class.kind),
        "norm": rat_to_string(&norm),
        "orbit_rep": class.orbit_rep.0,
        "word": class.word.0.iter().map(|i| i + 1).collect::<Vec<_>>(),
    }))
}

fn run_roots(action: &RootsAction, format: Format) -> Result<i32, CliError> {
    match action {
        RootsAction::Enumerate {
            input,
            height,
            max_height,
        } => {
            let a = load_gcm(&input.gcm)?;
            let s = a.symmetrize()?;
            let list = roots::enumerate_positive_roots_capped(&a, &s, *height, *max_height)?;
            for (v, _) in &list {
                let record = root_record(&a, &s, v)?;
                match format {
                    Format::Json => println!("{record}"),
                    Format::Text => {
                        println!("{v}  {}", record["kind"].as_str().unwrap_or_default())
                    }
                }
            }
            Ok(EXIT_PASS)
        }
        RootsAction::Classify { input, coords } => {
            let a = load_gcm(&input.gcm)?;
            let s = a.symmetrize()?;
            let v = parse_coords(coords, a.rank())?;
            let record = root_record(&a, &s, &v)?;
            let kind = record["kind"].as_str().unwrap_or_default().to_string();
            emit(format, &record, format!("{v}: {kind}"));
            Ok(EXIT_PASS)
        }
        RootsAction::String { input, alpha, beta } => {
            let a = load_gcm(&input.gcm)?;
            let s = a.symmetrize()?;
            let av = parse_coords(alpha, a.rank())?;
            let bv = parse_coords(beta, a.rank())?;
            let string = roots::root_string(&a, &s, &av, &bv)?;
            emit(
                format,
                &serde_json::to_value(&string)?,
                format!("p = {}, q = {}, case {}", string.p, string.q, string.case),
            );
            Ok(EXIT_PASS)
        }
    }
}

fn cache_dir(flag: &Option<PathBuf>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.clone();
    }
    if let Ok(dir) = std::env::var(crate::cache::CACHE_DIR_ENV) {
        return PathBuf::from(dir);
    }
    PathBuf::from(".kacmoody-cache")
}

fn run_build(args: &BuildArgs, format: Format) -> Result<i32, CliError> {
    let a = load_gcm(&args.input.gcm)?;
    let s = a.symmetrize()?;
    let dir = cache_dir(&args.cache_dir);
    let (g, cache_state) = match crate::cache::load(&dir, a.matrix(), args.height) {
        Some(export) => (GradedAlgebra::from_export(&export)?, "hit"),
        None => {
            let opts = BuildOptions {
                max_candidates: args.max_candidates,
                max_coeff_bits: args.max_coeff_bits,
                ..BuildOptions::default()
            };
            let g = GradedAlgebra::build_with_options(&a, &s, args.height, &opts)?;
            let export = g.export()?;
            crate::cache::store(&dir, &export)?;
            (g, "miss")
        }
    };
    let total: usize = g
        .positive_degrees()
        .iter()
        .map(|d| g.space(d).map(|sp| sp.dim()).unwrap_or(0))
        .sum();
    let path = crate::cache::cache_path(&dir, a.matrix(), args.height);
    emit(
        format,
        &serde_json::json!({
            "height": args.height,
            "root_spaces": g.positive_degrees().len(),
            "total_dim": total,
            "cache": cache_state,
            "path": path.display().to_string(),
        }),
        format!(
            "{} root spaces, total dimension {total} (cache {cache_state}: {})",
            g.positive_degrees().len(),
            path.display()
        ),
    );
    Ok(EXIT_PASS)
}

fn run_eval(args: &EvalArgs, format: Format) -> Result<i32, CliError> {
    let a = load_gcm(&args.input.gcm)?;
    let s = a.symmetrize()?;
    let g = GradedAlgebra::build(&a, &s, args.height)?;
    let mut value = parse_element(&g, &args.expr)?;
    for op in &args.apply {
        value = apply_operator(&g, op, &value)?;
    }
    let rendered = value.render(&g);
    emit(
        format,
        &serde_json::json!({
            "element": rendered,
            "zero": value.is_zero(),
            "degrees": value.degrees().iter().map(|d| d.0.clone()).collect::<Vec<_>>(),
        }),
        rendered.clone(),
    );
    Ok(EXIT_PASS)
}

fn apply_operator(
    g: &GradedAlgebra,
    op: &str,
    x: &crate::engine::Element,
) -> Result<crate::engine::Element, CliError> {
    if op == "omega" {
        return Ok(g.omega(x));
    }
    if let Some(rest) = op.strip_prefix('s') {
        if let Some(index) = rest.strip_suffix('*') {
            let i: usize = index
                .parse()
                .map_err(|_| CliError::Usage(format!("bad operator `{op}`")))?;
            if i < 1 || i > g.rank() {
                return Err(CliError::Usage(format!(
                    "reflection index out of range in `{op}`"
                )));
            }
            return Ok(g.simple_reflection_star(i - 1, x)?);
        }
    }
    Err(CliError::Usage(format!(
        "unknown operator `{op}` (expected `omega` or `s<i>*`)"
    )))
}

fn run_subalgebra(args: &SubalgebraArgs, format: Format) -> Result<i32, CliError> {
    let a = load_gcm(&args.input.gcm)?;
    let s = a.symmetrize()?;
    let g = GradedAlgebra::build(&a, &s, args.height)?;
    let bytes = std::fs::read(&args.fixture)?;
    let fixture: subalgebra::SubalgebraFixture = serde_json::from_slice(&bytes)?;
    let gens = subalgebra::fixture_generators(&g, &fixture)?;
    let l = subalgebra::span_closure(&g, &gens)?;
    let d = subalgebra::decompose(&g, &l);
    let structure = subalgebra::check_locally_finite_structure(&g, &l)?;
    let derived = subalgebra::series(&g, &l, SeriesKind::Derived, args.max_steps)?;
    let lower = subalgebra::series(&g, &l, SeriesKind::LowerCentral, args.max_steps)?;
    let solvability = subalgebra::solvability_verdict(&g, &l, args.max_steps)?;
    let profile: Vec<serde_json::Value> = l
        .closure
        .profile()
        .iter()
        .map(|(deg, dim)| serde_json::json!({"degree": deg.0, "dim": dim}))
        .collect();
    let report = serde_json::json!({
        "total_dim": l.closure.total_dim(),
        "profile": profile,
        "boundary_events": l.boundary_events.len(),
        "psi": d.psi.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
        "l0_dim": d.l0.len(),
        "im_plus": d.im_plus.iter().map(|(v, b)| serde_json::json!({"degree": v.0, "dim": b.len()})).collect::<Vec<_>>(),
        "im_minus": d.im_minus.iter().map(|(v, b)| serde_json::json!({"degree": v.0, "dim": b.len()})).collect::<Vec<_>>(),
        "structure": serde_json::to_value(&structure)?,
        "derived": serde_json::to_value(&derived)?,
        "lower_central": serde_json::to_value(&lower)?,
        "solvability": serde_json::to_value(&solvability)?,
    });
    emit(
        format,
        &report,
        format!(
            "dim {} | derived {:?} | lower central {:?} | structure holds: {}",
            l.closure.total_dim(),
            derived.verdict,
            lower.verdict,
            structure.all_hold
        ),
    );
    Ok(EXIT_PASS)
}

fn run_verify(args: &VerifyArgs, format: Format) -> Result<i32, CliError> {
    let params = VerifyParams {
        height: args.height,
        samples: args.samples,
        seed: args.seed,
    };
    let known = [
        "theorem-a",
        "bracket-zero",
        "dim-corollary",
        "ad-power",
        "free-heisenberg",
        "lemma-54",
        "regressions",
        "all",
    ];
    if !known.contains(&args.suite.as_str()) {
        return Err(CliError::Usage(format!(
            "unknown suite `{}` (expected one of {})",
            args.suite,
            known.join(", ")
        )));
    }
    let mut reports = Vec::new();
    if args.suite == "regressions" || args.suite == "all" {
        reports.push(verify::regression_suite(&params)?);
    }
    if args.suite != "regressions" {
        let gcm_path = args
            .gcm
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("suite `{}` needs --gcm", args.suite)))?;
        let a = load_gcm(gcm_path)?;
        let s = a.symmetrize()?;
        let g = GradedAlgebra::build(&a, &s, args.height)?;
        let selected: Vec<&str> = if args.suite == "all" {
            vec![
                "theorem-a",
                "bracket-zero",
                "dim-corollary",
                "ad-power",
                "free-heisenberg",
                "lemma-54",
            ]
        } else {
            vec![args.suite.as_str()]
        };
        for name in selected {
            let report = match name {
                "theorem-a" => verify::nonzero_bracket_suite(&g, &params),
                "bracket-zero" => verify::bracket_vanishing_suite(&g, &params),
                "dim-corollary" => verify::bracket_dimension_suite(&g, &params),
                "ad-power" => verify::ad_power_suite(&g, &params),
                "free-heisenberg" => verify::free_heisenberg_suite(&g, &params),
                "lemma-54" => verify::orthogonal_real_pair_suite(&g, &params),
                _ => unreachable!(),
            };
            reports.push(report);
        }
    }
    let value = if reports.len() == 1 {
        serde_json::to_value(&reports[0])?
    } else {
        serde_json::to_value(&reports)?
    };
    if let Some(out) = &args.out {
        if let Some(parent) = out.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)?;
            }
        }
        std::fs::write(out, serde_json::to_vec_pretty(&value)?)?;
    }
    for r in &reports {
        let line = format!(
            "{}: {:?} ({} cases, {} skipped, {} violations)",
            r.suite,
            r.verdict,
            r.cases_checked,
            r.skipped_truncation,
            r.violations.len()
        );
        match format {
            Format::Json => eprintln!("{line}"),
            Format::Text => println!("{line}"),
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::to_string(&value)?);
    }
    let mut code = EXIT_PASS;
    for r in &reports {
        match r.verdict {
            verify::Verdict::Fail => return Ok(EXIT_FAIL),
            verify::Verdict::Inconclusive => code = EXIT_USAGE,
            verify::Verdict::Pass => {}
        }
    }
    Ok(code)
}
