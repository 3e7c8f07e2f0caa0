use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ucsize_core::colex::{
    colex_total_size, colex_upper_bound, extremal_construction, extremal_params, f_extremal, initial_segment,
    is_alternating_form,
};
use ucsize_core::compression::{full_down, reimer_decomposition, UpOrder};
use ucsize_core::enumerate::{
    enumerate_simply_rooted, enumerate_union_closed, extremal_search, EnumerationPlan, Mode,
};
use ucsize_core::format::{parse_family, to_text};
use ucsize_core::predicates::{is_simply_rooted, is_union_closed, stats};
use ucsize_core::rational::frac_string;
use ucsize_core::stability::{analysis_record, stability_bound, StabilityVariant};
use ucsize_core::verify::{run_suite, VerifyConfig};
use ucsize_core::{Error, GroundSize};

const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "ucsize", version, about = "Total sizes of union-closed and simply rooted set families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f(m), the least total size of a union-closed family of m sets.
    Fm {
        m: u64,
        /// Write the extremal family to this file.
        #[arg(long)]
        emit_family: Option<PathBuf>,
    },
    /// The colex initial segment I(m) and its total size.
    Colex {
        m: u64,
        /// Print the members.
        #[arg(long)]
        list: bool,
    },
    /// JSON analysis of one family file.
    Analyze { path: PathBuf },
    /// Run the check suite and write a JSON report.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        #[arg(long, default_value = "verify-report.json")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Ascending)]
        up_order: OrderArg,
        /// List the catalog and exit.
        #[arg(long)]
        list: bool,
    },
    /// Exhaustive search for f(m) inside P(n).
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
    },
    /// Print union-closed or simply rooted families in file format.
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Random)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = KindArg::UnionClosed)]
        kind: KindArg,
        /// Keep only families with this many members.
        #[arg(long)]
        size: Option<u64>,
        #[arg(long)]
        contains_empty: Option<bool>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Random => Mode::Random,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Ascending,
    Descending,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    UnionClosed,
    SimplyRooted,
}

/// Usage and parse problems exit with 2, capacity with 3.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) | Error::GroundTooLarge(_) => 3,
        _ => 2,
    }
}

fn ground(n: u32) -> Result<GroundSize, Error> {
    GroundSize::new(n)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn fm(m: u64, emit: Option<PathBuf>) -> Result<u8, Error> {
    let (n, m_prime) = extremal_params(m)?;
    let f = f_extremal(m)?;
    let family = extremal_construction(m)?;
    println!("n = {n}");
    println!("m' = {m_prime}");
    println!("f({m}) = {f}");
    match emit {
        Some(path) => {
            fs::write(&path, to_text(&family)).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
            println!("family written to {}", path.display());
        }
        None => print!("{}", to_text(&family)),
    }
    Ok(0)
}

fn colex(m: u64, list: bool) -> Result<u8, Error> {
    let total = colex_total_size(m);
    println!("||I({m})|| = {total}");
    if m >= 2 {
        println!("bound = {}", frac_string(&colex_upper_bound(m)?));
        println!("alternating form: {}", is_alternating_form(m));
    }
    if list {
        print!("{}", to_text(&initial_segment(m)?));
    }
    Ok(0)
}

fn analyze(path: PathBuf) -> Result<u8, Error> {
    let text = fs::read_to_string(&path).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
    let f = parse_family(&text)?;
    let uc = is_union_closed(&f);
    let sr = is_simply_rooted(&f);
    let (_, trace) = full_down(&f);
    let trace_json: Vec<Value> = trace.pairs().map(|(b, d)| json!({"set": b.to_string(), "image": d.to_string()})).collect();
    let mut out = json!({
        "n": f.ground().get(),
        "union_closed": uc,
        "simply_rooted": sr,
        "stats": stats(&f),
        "down_compression": trace_json,
    });
    if uc && !f.is_empty() {
        let m = f.len() as u64;
        out["union_closed_bound"] = json!({
            "f_m": f_extremal(m)?,
            "total_size": f.total_size(),
            "reimer_cubes": reimer_decomposition(&f)?.cubes().len(),
        });
    }
    if sr {
        out["analysis"] = serde_json::to_value(analysis_record(&f)?).expect("json");
        let bounds: Vec<Value> = [StabilityVariant::Twelfth, StabilityVariant::Eighth]
            .into_iter()
            .map(|v| {
                let (b, holds) = stability_bound(&f, v).expect("simply rooted");
                json!({"bound": b, "holds": holds})
            })
            .collect();
        out["stability"] = Value::Array(bounds);
    }
    print_json(&out);
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    n: u32,
    mode: ModeArg,
    samples: u64,
    seed: Option<u64>,
    checks: Option<Vec<String>>,
    parallel: usize,
    out: PathBuf,
    up_order: OrderArg,
) -> Result<u8, Error> {
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let mode: Mode = mode.into();
    if mode == Mode::Random {
        eprintln!("seed = {seed}");
    }
    let cfg = VerifyConfig {
        n: ground(n)?,
        mode,
        samples: if mode == Mode::Random { samples } else { 0 },
        seed,
        checks,
        parallel: parallel.max(1),
        up_order: match up_order {
            OrderArg::Ascending => UpOrder::Ascending,
            OrderArg::Descending => UpOrder::Descending,
        },
    };
    let report = run_suite(&cfg)?;
    fs::write(&out, report.to_json() + "\n").map_err(|e| Error::Domain(format!("{}: {e}", out.display())))?;
    print!("{}", report.table());
    println!("report written to {}", out.display());
    Ok(report.exit_code() as u8)
}

fn list_checks() -> Result<u8, Error> {
    for c in ucsize_core::verify::catalog() {
        let scope = match (c.population(), c.has_global()) {
            (Some(p), true) => format!("{p:?} + global"),
            (Some(p), false) => format!("{p:?}"),
            (None, _) => "global".to_string(),
        };
        let tag = if c.conjecture { " (conjecture probe)" } else { "" };
        println!("{:<30} {:<28} {scope}{tag}", c.id, c.anchor);
    }
    Ok(0)
}

fn search(n: u32, m: u64) -> Result<u8, Error> {
    let s = extremal_search(ground(n)?, m)?;
    let families: Vec<String> = s.minimizers.iter().map(|c| to_text(&c.representative)).collect();
    print_json(&json!({
        "n": n,
        "m": m,
        "min_total": s.min_total,
        "classes": s.minimizers.len(),
        "minimizers": families,
    }));
    Ok(0)
}

fn gen(
    n: u32,
    mode: ModeArg,
    samples: u64,
    seed: Option<u64>,
    kind: KindArg,
    size: Option<u64>,
    contains_empty: Option<bool>,
) -> Result<u8, Error> {
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let n = ground(n)?;
    let mut plan = match mode {
        ModeArg::Exhaustive => EnumerationPlan::exhaustive(n),
        ModeArg::Random => {
            eprintln!("seed = {seed}");
            EnumerationPlan::random(n, samples, seed)
        }
    };
    plan.size = size;
    plan.contains_empty = contains_empty;
    let stream = match kind {
        KindArg::UnionClosed => enumerate_union_closed(&plan)?,
        KindArg::SimplyRooted => enumerate_simply_rooted(&plan)?,
    };
    let mut first = true;
    for f in stream {
        if !first {
            println!();
        }
        first = false;
        print!("{}", to_text(&f?));
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Fm { m, emit_family } => fm(m, emit_family),
        Command::Colex { m, list } => colex(m, list),
        Command::Analyze { path } => analyze(path),
        Command::Verify { list: true, .. } => list_checks(),
        Command::Verify { n, mode, samples, seed, checks, parallel, out, up_order, list: false } => {
            verify(n, mode, samples, seed, checks, parallel, out, up_order)
        }
        Command::Search { n, m } => search(n, m),
        Command::Gen { n, mode, samples, seed, kind, size, contains_empty } => {
            gen(n, mode, samples, seed, kind, size, contains_empty)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
