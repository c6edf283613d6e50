//! Batch verifier CLI: every calculator and checker in the engine behind
//! one binary with deterministic seeding and machine-readable reports.
//!
//! Exit codes: 0 when every check in the invocation passed (computations
//! with nothing to check count as passed), 2 when a check failed, 1 on
//! usage or configuration errors. JSON goes to standard output; progress
//! and timing lines go to standard error.

mod config;
mod render;

use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use schurhive::hive::{count_fillings, HiveMode, VisitOrder};
use schurhive::lr::{lr_coeff_tableaux, verify_reduction2, verify_tao};
use schurhive::rational::{
    format_rat, parse_rat, random_nonzero_rat, rat_json, sqrt_exact, Rat,
};
use schurhive::schur::{
    schur_dual_check, schur_eval, schur_glweight, schur_glweight_eval, schur_jacobi_trudi,
    schur_ssyt,
};
use schurhive::sweep::{
    cauchy_sweep, delta_sweep, dual_sweep, lr_sweep, schur_sweep, tao_sweep, unramified_sweep,
    CauchySweepOptions, DeltaSweepOptions, DualSweepOptions, LrSweepOptions, SchurSweepOptions,
    SweepReport, TaoSweepOptions, UnramifiedSweepOptions,
};
use schurhive::unramified::{
    delta_cancellation_check, trace_sym_cauchy, trace_sym_schur, verify_unramified,
    verify_unramified_symbolic, SatakeConfig, SatakeData,
};
use schurhive::weights::{GLWeight, Partition};
use schurhive::{Error, Result};

use config::Config;

#[derive(Parser)]
#[command(
    name = "schurhive",
    version,
    about = "Exact verification of Schur calculus, hive counts, and local L-factor series",
    disable_help_subcommand = true
)]
struct Cli {
    /// Key = value configuration file (default: ./schurhive.conf if present)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Emit JSON reports (the default)
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit aligned key/value tables instead of JSON
    #[arg(long, global = true)]
    table: bool,
    /// Worker threads for parallel sweeps (0 = one per core)
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
    /// Seed for every randomized draw
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    /// Square root of the residue-field cardinality, as a rational
    #[arg(long = "Q", global = true, value_name = "RAT")]
    q_half: Option<String>,
    /// Residue-field cardinality; must be the square of a rational
    #[arg(long = "q", global = true, value_name = "RAT", conflicts_with = "q_half")]
    q_full: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Schur polynomial, or its exact value at a point
    Schur(SchurArgs),
    /// Hive lattice-point counting
    #[command(subcommand)]
    Hive(HiveCmd),
    /// Littlewood-Richardson coefficients and identities
    #[command(subcommand)]
    Lr(LrCmd),
    /// Single-instance verifiers
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Batch verification over whole input families
    #[command(subcommand)]
    Sweep(SweepCmd),
}

#[derive(Args)]
struct SchurArgs {
    /// Shape: a partition "[2,1]" or a weight with rank "[2,1,0,-2]@4"
    #[arg(long, value_name = "SHAPE")]
    lam: String,
    /// Number of variables (defaults to the shape's length)
    #[arg(long, value_name = "N")]
    vars: Option<usize>,
    /// Evaluate at a comma-separated rational point instead of printing terms
    #[arg(long, value_name = "RATS", allow_hyphen_values = true)]
    eval: Option<String>,
    /// Cross-check the determinant result against the tableau enumeration
    #[arg(long)]
    check_oracle: bool,
}

#[derive(Subcommand)]
enum HiveCmd {
    /// Count hives (or anti-hives) with the given boundary triple
    Count(HiveCountArgs),
}

#[derive(Args)]
struct HiveCountArgs {
    #[arg(long, value_name = "PART")]
    x: String,
    #[arg(long, value_name = "PART")]
    y: String,
    #[arg(long, value_name = "PART")]
    z: String,
    /// Hive size (defaults to the longest of the three partitions)
    #[arg(long, value_name = "N")]
    n: Option<usize>,
    /// Count anti-hives instead of hives
    #[arg(long)]
    anti: bool,
}

#[derive(Subcommand)]
enum LrCmd {
    /// One LR coefficient by all three algorithms
    Coeff(LrCoeffArgs),
    /// The square identity relating a rank-l LR coefficient to small ones
    Tao(LrTaoArgs),
    /// The Schur-product reduction at random rational points
    Reduction2(LrReductionArgs),
}

#[derive(Args)]
struct LrCoeffArgs {
    #[arg(long, value_name = "PART")]
    x: String,
    #[arg(long, value_name = "PART")]
    z: String,
    #[arg(long, value_name = "PART")]
    u: String,
    /// Fail (exit 2) unless the coefficient equals this value
    #[arg(long, value_name = "N")]
    expect: Option<u64>,
}

#[derive(Args)]
struct LrTaoArgs {
    #[arg(long, value_name = "PART")]
    x: String,
    #[arg(long, value_name = "PART")]
    u: String,
    #[arg(long, value_name = "PART")]
    y: String,
    #[arg(long, value_name = "PART")]
    v: String,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct LrReductionArgs {
    #[arg(long, value_name = "PART")]
    u: String,
    #[arg(long, value_name = "PART")]
    v: String,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Random evaluation points to test
    #[arg(long, default_value_t = 5, value_name = "N")]
    points: usize,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The zeta-sum / L-factor series identity for one configuration
    Unramified(VerifyUnramifiedArgs),
    /// The two symmetric-power trace routes on random eigenvalues
    Cauchy(VerifyCauchyArgs),
    /// The modulus-character cancellation for one partition pair
    Delta(VerifyDeltaArgs),
    /// The inverse-point Schur duality for one shape
    Dual(VerifyDualArgs),
}

#[derive(Args)]
struct VerifyUnramifiedArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    j: usize,
    /// Series truncation caps "A,B"
    #[arg(long, value_name = "A,B")]
    caps: Option<String>,
    /// Compare symbolically in the Satake variables instead of at a random point
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args)]
struct VerifyCauchyArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Largest symmetric-power degree to check
    #[arg(long, default_value_t = 8)]
    e: usize,
    #[arg(long, default_value_t = 10, value_name = "N")]
    draws: usize,
}

#[derive(Args)]
struct VerifyDeltaArgs {
    #[arg(long, value_name = "PART")]
    x: String,
    #[arg(long, value_name = "PART")]
    y: String,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    j: usize,
}

#[derive(Args)]
struct VerifyDualArgs {
    #[arg(long, value_name = "PART")]
    v: String,
    #[arg(long)]
    l: usize,
    #[arg(long, default_value_t = 20, value_name = "N")]
    points: usize,
}

#[derive(Subcommand)]
enum SweepCmd {
    /// Exhaustive square-identity sweep
    Tao(SweepTaoArgs),
    /// Three-way LR agreement, exhaustive plus random
    Lr(SweepLrArgs),
    /// Zeta-series identity over every admissible configuration
    Unramified(SweepUnramifiedArgs),
    /// Symmetric-power traces over all rank pairs
    Cauchy(SweepCauchyArgs),
    /// Modulus-character cancellation over all configurations
    Delta(SweepDeltaArgs),
    /// Inverse-point duality over all small shapes
    Dual(SweepDualArgs),
    /// Determinant vs tableau Schur construction, symbolic
    Schur(SweepSchurArgs),
}

#[derive(Args)]
struct SweepTaoArgs {
    #[arg(long, default_value_t = 3)]
    max_part: i64,
    #[arg(long, default_value_t = 2)]
    max_rank: usize,
    #[arg(long, default_value_t = 5)]
    max_l: usize,
    #[arg(long, default_value_t = 3)]
    max_gap: i64,
}

#[derive(Args)]
struct SweepLrArgs {
    #[arg(long, default_value_t = 10)]
    max_size: i64,
    #[arg(long, default_value_t = 4)]
    max_parts: usize,
    #[arg(long, default_value_t = 500)]
    random_cases: usize,
    #[arg(long, default_value_t = 6)]
    random_max_parts: usize,
    #[arg(long, default_value_t = 8)]
    random_max_part: i64,
}

#[derive(Args)]
struct SweepUnramifiedArgs {
    #[arg(long, default_value_t = 5)]
    max_l: usize,
    /// Series truncation caps "A,B"
    #[arg(long, value_name = "A,B")]
    caps: Option<String>,
    #[arg(long, default_value_t = 5)]
    draws: usize,
}

#[derive(Args)]
struct SweepCauchyArgs {
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 8)]
    max_e: usize,
    #[arg(long, default_value_t = 50)]
    draws: usize,
}

#[derive(Args)]
struct SweepDeltaArgs {
    #[arg(long, default_value_t = 5)]
    max_l: usize,
    #[arg(long, default_value_t = 4)]
    max_size: i64,
}

#[derive(Args)]
struct SweepDualArgs {
    #[arg(long, default_value_t = 6)]
    max_size: i64,
    #[arg(long, default_value_t = 5)]
    max_l: usize,
    #[arg(long, default_value_t = 20)]
    points: usize,
}

#[derive(Args)]
struct SweepSchurArgs {
    #[arg(long, default_value_t = 8)]
    max_size: i64,
    #[arg(long, default_value_t = 4)]
    max_vars: usize,
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let table = cli.table;
    match run(cli) {
        Ok((report, passed)) => {
            let text = if table {
                render::to_table(&report)
            } else {
                render::to_json(&report)
            };
            print!("{text}");
            if passed {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Merges config file with command-line overrides.
fn effective_config(cli: &Cli) -> Result<Config> {
    let mut cfg = config::load(cli.config.as_deref())?;
    if let Some(w) = cli.workers {
        cfg.workers = w;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(q) = &cli.q_half {
        cfg.q_half = parse_rat(q)?;
    } else if let Some(q) = &cli.q_full {
        let q = parse_rat(q)?;
        cfg.q_half = sqrt_exact(&q).ok_or_else(|| {
            Error::Config(format!(
                "q = {} is not the square of a rational; pass --Q for its square root",
                format_rat(&q)
            ))
        })?;
    }
    if cfg.q_half <= Rat::from_integer(0.into()) {
        return Err(Error::Config("Q must be positive".into()));
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(Value, bool)> {
    let cfg = effective_config(&cli)?;
    if cfg.workers > 0 {
        // ignore failure: the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build_global();
    }
    let started = Instant::now();
    let out = dispatch(&cli.command, &cfg);
    eprintln!("timing: {:.3}s", started.elapsed().as_secs_f64());
    out
}

fn dispatch(command: &Command, cfg: &Config) -> Result<(Value, bool)> {
    match command {
        Command::Schur(args) => cmd_schur(args, cfg),
        Command::Hive(HiveCmd::Count(args)) => cmd_hive_count(args),
        Command::Lr(LrCmd::Coeff(args)) => cmd_lr_coeff(args),
        Command::Lr(LrCmd::Tao(args)) => cmd_lr_tao(args),
        Command::Lr(LrCmd::Reduction2(args)) => cmd_lr_reduction(args, cfg),
        Command::Verify(VerifyCmd::Unramified(args)) => cmd_verify_unramified(args, cfg),
        Command::Verify(VerifyCmd::Cauchy(args)) => cmd_verify_cauchy(args, cfg),
        Command::Verify(VerifyCmd::Delta(args)) => cmd_verify_delta(args, cfg),
        Command::Verify(VerifyCmd::Dual(args)) => cmd_verify_dual(args, cfg),
        Command::Sweep(sweep) => cmd_sweep(sweep, cfg),
    }
}

fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

fn parse_point(text: &str, expect_len: usize) -> Result<Vec<Rat>> {
    let point = text
        .split(',')
        .map(parse_rat)
        .collect::<Result<Vec<_>>>()?;
    if point.len() != expect_len {
        return Err(Error::Config(format!(
            "point has {} coordinates, need {expect_len}",
            point.len()
        )));
    }
    Ok(point)
}

fn rats_json(values: &[Rat]) -> Value {
    Value::Array(values.iter().map(rat_json).collect())
}

fn random_point(rng: &mut ChaCha8Rng, len: usize, cfg: &Config) -> Vec<Rat> {
    (0..len)
        .map(|_| random_nonzero_rat(rng, cfg.num_max, cfg.den_max))
        .collect()
}

enum Shape {
    Plain(Partition),
    Weighted(GLWeight),
}

fn parse_shape(text: &str, vars: Option<usize>) -> Result<(Shape, usize)> {
    if text.contains('@') {
        let w: GLWeight = text.parse()?;
        if let Some(v) = vars {
            if v != w.rank() {
                return Err(Error::Config(format!(
                    "--vars {v} conflicts with weight rank {}",
                    w.rank()
                )));
            }
        }
        let rank = w.rank();
        Ok((Shape::Weighted(w), rank))
    } else {
        let p: Partition = text.parse()?;
        let nvars = vars.unwrap_or(p.num_parts());
        Ok((Shape::Plain(p), nvars))
    }
}

fn cmd_schur(args: &SchurArgs, cfg: &Config) -> Result<(Value, bool)> {
    let (shape, nvars) = parse_shape(&args.lam, args.vars)?;
    let mut report = json!({
        "lam": args.lam.trim(),
        "vars": nvars,
    });
    let mut passed = true;
    if let Some(eval) = &args.eval {
        let point = parse_point(eval, nvars)?;
        let value = match &shape {
            Shape::Plain(p) => schur_eval(p, &point),
            Shape::Weighted(w) => schur_glweight_eval(w, &point)?,
        };
        report["value"] = rat_json(&value);
    } else {
        let poly = match &shape {
            Shape::Plain(p) => schur_jacobi_trudi(p, nvars),
            Shape::Weighted(w) => schur_glweight(w)?,
        };
        report["terms"] = json!(poly.num_terms());
        report["polynomial"] = poly.to_json();
    }
    if args.check_oracle {
        let p = match &shape {
            Shape::Plain(p) => p.clone(),
            Shape::Weighted(_) => {
                return Err(Error::Config(
                    "--check-oracle applies to partition shapes, not weights".into(),
                ))
            }
        };
        let agree = schur_jacobi_trudi(&p, nvars) == schur_ssyt(&p, nvars, cfg.oracle_cap)?;
        report["oracle_agrees"] = json!(agree);
        passed = agree;
    }
    Ok((report, passed))
}

fn cmd_hive_count(args: &HiveCountArgs) -> Result<(Value, bool)> {
    let x = parse_partition(&args.x)?;
    let y = parse_partition(&args.y)?;
    let z = parse_partition(&args.z)?;
    let n = args
        .n
        .unwrap_or_else(|| x.num_parts().max(y.num_parts()).max(z.num_parts()));
    let mode = if args.anti {
        HiveMode::AntiHive
    } else {
        HiveMode::Hive
    };
    let count = count_fillings(&x, &y, &z, n, mode, VisitOrder::default())?;
    let report = json!({
        "x": x.to_string(),
        "y": y.to_string(),
        "z": z.to_string(),
        "n": n,
        "mode": if args.anti { "antihive" } else { "hive" },
        "count": count.count,
        "structural_zero": count.structural_zero,
    });
    Ok((report, true))
}

fn cmd_lr_coeff(args: &LrCoeffArgs) -> Result<(Value, bool)> {
    let x = parse_partition(&args.x)?;
    let z = parse_partition(&args.z)?;
    let u = parse_partition(&args.u)?;
    let n = x.num_parts().max(z.num_parts()).max(u.num_parts()).max(1);
    let tableaux = lr_coeff_tableaux(&x, &z, &u);
    let hive = count_fillings(&x, &z, &u, n, HiveMode::Hive, VisitOrder::default())?.count;
    let antihive = count_fillings(&x, &z, &u, n, HiveMode::AntiHive, VisitOrder::default())?.count;
    let agree = tableaux == hive && hive == antihive;
    let expected_ok = args.expect.map_or(true, |e| e == tableaux);
    let mut report = json!({
        "x": x.to_string(),
        "z": z.to_string(),
        "u": u.to_string(),
        "coeff": tableaux,
        "methods": {"tableaux": tableaux, "hive": hive, "antihive": antihive},
    });
    if let Some(e) = args.expect {
        report["expect"] = json!(e);
        report["expect_met"] = json!(expected_ok);
    }
    Ok((report, agree && expected_ok))
}

fn cmd_lr_tao(args: &LrTaoArgs) -> Result<(Value, bool)> {
    let x = parse_partition(&args.x)?;
    let u = parse_partition(&args.u)?;
    let y = parse_partition(&args.y)?;
    let v = parse_partition(&args.v)?;
    let out = verify_tao(&x, &u, &y, &v, args.l, args.m, args.n)?;
    let witnesses: Vec<Value> = out
        .witness_z
        .iter()
        .map(|(z, cu, cv)| json!({"z": z.to_string(), "c_u": cu, "c_v": cv}))
        .collect();
    let report = json!({
        "x": x.to_string(),
        "u": u.to_string(),
        "y": y.to_string(),
        "v": v.to_string(),
        "l": args.l,
        "m": args.m,
        "n": args.n,
        "swapped": out.swapped,
        "lhs": out.lhs,
        "rhs": out.rhs,
        "equal": out.equal,
        "witnesses": witnesses,
    });
    Ok((report, out.equal))
}

fn cmd_lr_reduction(args: &LrReductionArgs, cfg: &Config) -> Result<(Value, bool)> {
    let u = parse_partition(&args.u)?;
    let v = parse_partition(&args.v)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut equal = true;
    for _ in 0..args.points {
        let point = random_point(&mut rng, args.l, cfg);
        if !verify_reduction2(&u, &v, args.l, args.m, args.n, &point)? {
            equal = false;
            break;
        }
    }
    let report = json!({
        "u": u.to_string(),
        "v": v.to_string(),
        "l": args.l,
        "m": args.m,
        "n": args.n,
        "points": args.points,
        "seed": cfg.seed,
        "equal": equal,
    });
    Ok((report, equal))
}

fn satake_json(d: &SatakeData) -> Value {
    json!({
        "alpha": rats_json(&d.alpha),
        "beta1": rats_json(&d.beta1),
        "beta2": rats_json(&d.beta2),
        "q_half": rat_json(&d.q_half),
    })
}

fn config_json(c: &SatakeConfig) -> Value {
    json!({"l": c.l, "m": c.m, "n": c.n, "j": c.j, "k": c.k()})
}

fn mismatch_json(m: Option<(usize, usize)>) -> Value {
    match m {
        None => Value::Null,
        Some((a, b)) => json!([a, b]),
    }
}

fn cmd_verify_unramified(args: &VerifyUnramifiedArgs, cfg: &Config) -> Result<(Value, bool)> {
    let sc = SatakeConfig::new(args.l, args.m, args.n, args.j)?;
    let caps = match &args.caps {
        Some(text) => config::parse_caps(text)?,
        None => cfg.caps,
    };
    if args.symbolic {
        let out = verify_unramified_symbolic(&sc, caps, cfg.symbolic_vars)?;
        let report = json!({
            "config": config_json(&sc),
            "caps": [caps.0, caps.1],
            "mode": "symbolic",
            "equal": out.equal,
            "first_mismatch": mismatch_json(out.first_mismatch),
        });
        return Ok((report, out.equal));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let data = SatakeData::random_in(sc, cfg.q_half.clone(), &mut rng, cfg.num_max, cfg.den_max)?;
    let out = verify_unramified(&data, caps)?;
    let report = json!({
        "config": config_json(&sc),
        "caps": [caps.0, caps.1],
        "mode": "numeric",
        "seed": cfg.seed,
        "satake": satake_json(&data),
        "equal": out.equal,
        "first_mismatch": mismatch_json(out.first_mismatch),
    });
    Ok((report, out.equal))
}

fn cmd_verify_cauchy(args: &VerifyCauchyArgs, cfg: &Config) -> Result<(Value, bool)> {
    if args.m == 0 || args.n == 0 {
        return Err(Error::Config("ranks m and n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut equal = true;
    'outer: for _ in 0..args.draws {
        let alpha = random_point(&mut rng, args.m, cfg);
        let beta = random_point(&mut rng, args.n, cfg);
        for e in 0..=args.e {
            if trace_sym_cauchy(&alpha, &beta, e) != trace_sym_schur(&alpha, &beta, e) {
                equal = false;
                break 'outer;
            }
        }
    }
    let report = json!({
        "m": args.m,
        "n": args.n,
        "max_e": args.e,
        "draws": args.draws,
        "seed": cfg.seed,
        "equal": equal,
    });
    Ok((report, equal))
}

fn cmd_verify_delta(args: &VerifyDeltaArgs, cfg: &Config) -> Result<(Value, bool)> {
    let x = parse_partition(&args.x)?;
    let y = parse_partition(&args.y)?;
    let equal = delta_cancellation_check(&x, &y, args.l, args.m, args.n, args.j, &cfg.q_half)?;
    let report = json!({
        "x": x.to_string(),
        "y": y.to_string(),
        "l": args.l,
        "m": args.m,
        "n": args.n,
        "j": args.j,
        "q_half": rat_json(&cfg.q_half),
        "equal": equal,
    });
    Ok((report, equal))
}

fn cmd_verify_dual(args: &VerifyDualArgs, cfg: &Config) -> Result<(Value, bool)> {
    let v = parse_partition(&args.v)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut equal = true;
    for _ in 0..args.points {
        let point = random_point(&mut rng, args.l, cfg);
        if !schur_dual_check(&v, args.l, &point)? {
            equal = false;
            break;
        }
    }
    let report = json!({
        "v": v.to_string(),
        "l": args.l,
        "points": args.points,
        "seed": cfg.seed,
        "equal": equal,
    });
    Ok((report, equal))
}

fn progress_to_stderr(target: &'static str) -> impl Fn(usize, usize) + Sync {
    move |done, total| {
        let step = (total / 20).max(1);
        if done % step == 0 || done == total {
            eprintln!("{target}: {done}/{total} cases");
        }
    }
}

fn sweep_value(report: &SweepReport) -> (Value, bool) {
    let mut v = json!({
        "target": report.target,
        "cases": report.cases,
        "failures": report.failures.len(),
    });
    if !report.failures.is_empty() {
        v["failure_sample"] = Value::Array(
            report
                .failures
                .iter()
                .take(10)
                .cloned()
                .map(Value::String)
                .collect(),
        );
    }
    (v, report.passed())
}

fn cmd_sweep(sweep: &SweepCmd, cfg: &Config) -> Result<(Value, bool)> {
    let report = match sweep {
        SweepCmd::Tao(a) => {
            let opts = TaoSweepOptions {
                max_part: a.max_part,
                max_rank: a.max_rank,
                max_l: a.max_l,
                max_gap: a.max_gap,
            };
            tao_sweep(&opts, &progress_to_stderr("tao"))
        }
        SweepCmd::Lr(a) => {
            let opts = LrSweepOptions {
                exhaustive_max_size: a.max_size,
                exhaustive_max_parts: a.max_parts,
                random_cases: a.random_cases,
                random_max_parts: a.random_max_parts,
                random_max_part: a.random_max_part,
                seed: cfg.seed,
            };
            lr_sweep(&opts, &progress_to_stderr("lr"))
        }
        SweepCmd::Unramified(a) => {
            let caps = match &a.caps {
                Some(text) => config::parse_caps(text)?,
                None => cfg.caps,
            };
            let opts = UnramifiedSweepOptions {
                max_l: a.max_l,
                caps,
                draws: a.draws,
                q_half: cfg.q_half.clone(),
                seed: cfg.seed,
                num_max: cfg.num_max,
                den_max: cfg.den_max,
            };
            unramified_sweep(&opts, &progress_to_stderr("unramified"))?
        }
        SweepCmd::Cauchy(a) => {
            let opts = CauchySweepOptions {
                max_m: a.max_m,
                max_n: a.max_n,
                max_e: a.max_e,
                draws: a.draws,
                seed: cfg.seed,
                num_max: cfg.num_max,
                den_max: cfg.den_max,
            };
            cauchy_sweep(&opts, &progress_to_stderr("cauchy"))
        }
        SweepCmd::Delta(a) => {
            let opts = DeltaSweepOptions {
                max_l: a.max_l,
                max_size: a.max_size,
                q_half: cfg.q_half.clone(),
            };
            delta_sweep(&opts, &progress_to_stderr("delta"))
        }
        SweepCmd::Dual(a) => {
            let opts = DualSweepOptions {
                max_size: a.max_size,
                max_l: a.max_l,
                points: a.points,
                seed: cfg.seed,
                num_max: cfg.num_max,
                den_max: cfg.den_max,
            };
            dual_sweep(&opts, &progress_to_stderr("dual"))
        }
        SweepCmd::Schur(a) => {
            let opts = SchurSweepOptions {
                max_size: a.max_size,
                max_nvars: a.max_vars,
            };
            schur_sweep(&opts, &progress_to_stderr("schur"))
        }
    };
    Ok(sweep_value(&report))
}
