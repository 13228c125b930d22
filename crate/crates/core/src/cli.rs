//! Batch command-line front end.
//!
//! Every subcommand prints one document in the chosen format. JSON output is
//! an envelope `{config, payload, elapsed_ms}` whose payload depends only on
//! the configuration, never on the worker count or timing.
//!
//! Exit codes: 0 when every requested check passes, 1 on a computation
//! mismatch, 2 on invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::a6val::ClassElem;
use crate::classify::{
    classify_with, reproduce_at, run_property_suite, verify_inner_parity_bridges, BridgeReport, ClassifyOptions,
    GroupChoice, Mode, OrbitReport, ReproCode, ReproOutcome, SuiteConfig, SuiteReport,
};
use crate::error::{Error, Result};
use crate::lifting::lifting_invariant;
use crate::nielsen::{braid_orbit_with, NielsenTuple, OrbitOptions};

/// Environment variable read when `--workers` is absent.
pub const WORKERS_ENV: &str = "A6_HURWITZ_WORKERS";
/// Deepest braid search accepted by `--depth`.
pub const MAX_DEPTH: usize = 32;

#[derive(Parser, Debug)]
#[command(
    name = "a6-hurwitz",
    version,
    about = "Braid orbits of Nielsen tuples in A6 over double transpositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads [default: available parallelism]
    #[arg(long, global = true, env = WORKERS_ENV)]
    workers: Option<usize>,
    /// Seed for randomized sampling
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Override the braid search depth of reproduction checks
    #[arg(long, global = true)]
    depth: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The 45 double transpositions, in the fixed order
    ClassList,
    /// Lifting invariant of a product-one tuple
    Lift {
        #[arg(long)]
        tuple: String,
    },
    /// Braid orbit of a tuple up to conjugation
    Orbit {
        #[arg(long)]
        tuple: String,
        #[arg(long, default_value = "inner", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Classify braid orbits on Ni(G, C^k)
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value = "a6", value_parser = parse_group)]
        group: GroupChoice,
        /// Permit k = 7
        #[arg(long)]
        allow_k7: bool,
        /// Permit k = 8 (tens of millions of states per orbit)
        #[arg(long)]
        allow_k8: bool,
    },
    /// Re-run the reduction-lemma computations
    Reproduce {
        /// b3, b4, b5, b6, b8, b9, a comma-separated list, or all
        #[arg(long, default_value = "all", value_parser = parse_codes)]
        code: Codes,
    },
    /// Randomized property suite and parity bridges
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug)]
struct Codes(Vec<ReproCode>);

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_group(s: &str) -> std::result::Result<GroupChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_codes(s: &str) -> std::result::Result<Codes, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Codes(ReproCode::ALL.to_vec()));
    }
    s.split(',')
        .map(|c| c.trim().parse().map_err(|e: Error| e.to_string()))
        .collect::<std::result::Result<_, _>>()
        .map(Codes)
}

/// The validated invocation, echoed in the JSON envelope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub subcommand: &'static str,
    pub k: Option<usize>,
    pub mode: Option<Mode>,
    pub group: Option<GroupChoice>,
    pub tuple: Option<String>,
    pub codes: Option<Vec<ReproCode>>,
    pub depth: Option<usize>,
    pub workers: usize,
    pub seed: u64,
    pub format: Format,
    pub opt_in_k7: bool,
    pub opt_in_k8: bool,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<RunConfig> {
        let workers = match cli.workers {
            Some(0) => return Err(Error::parse("0", "--workers must be at least 1")),
            Some(w) => w,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        if let Some(d) = cli.depth.filter(|&d| d > MAX_DEPTH) {
            return Err(Error::parse(
                &d.to_string(),
                format!("--depth must be at most {MAX_DEPTH}"),
            ));
        }
        let mut cfg = RunConfig {
            subcommand: "",
            k: None,
            mode: None,
            group: None,
            tuple: None,
            codes: None,
            depth: cli.depth,
            workers,
            seed: cli.seed,
            format: cli.format,
            opt_in_k7: false,
            opt_in_k8: false,
        };
        match &cli.command {
            Command::ClassList => cfg.subcommand = "class-list",
            Command::Lift { tuple } => {
                cfg.subcommand = "lift";
                cfg.tuple = Some(tuple.parse::<NielsenTuple>()?.to_string());
            }
            Command::Orbit { tuple, mode } => {
                cfg.subcommand = "orbit";
                let t: NielsenTuple = tuple.parse()?;
                if t.len() < 2 || t.len() > crate::nielsen::MAX_KEY_LEN {
                    return Err(Error::parse(tuple, "orbits need between 2 and 8 entries"));
                }
                cfg.tuple = Some(t.to_string());
                cfg.mode = Some(*mode);
            }
            Command::Classify {
                k,
                mode,
                group,
                allow_k7,
                allow_k8,
            } => {
                cfg.subcommand = "classify";
                let k = *k;
                let ok = match k {
                    5 | 6 => true,
                    7 => *allow_k7,
                    8 => *allow_k8,
                    _ => false,
                };
                if !ok {
                    let hint = match k {
                        7 => " (pass --allow-k7)",
                        8 => " (pass --allow-k8)",
                        _ => "",
                    };
                    return Err(Error::parse(&k.to_string(), format!("--k must be 5 or 6{hint}")));
                }
                if *group != GroupChoice::A6 && k > 6 {
                    return Err(Error::parse(group.label(), "proper subgroups need k <= 6"));
                }
                cfg.k = Some(k);
                cfg.mode = Some(*mode);
                cfg.group = Some(*group);
                cfg.opt_in_k7 = *allow_k7;
                cfg.opt_in_k8 = *allow_k8;
            }
            Command::Reproduce { code } => {
                cfg.subcommand = "reproduce";
                cfg.codes = Some(code.0.clone());
            }
            Command::Verify => cfg.subcommand = "verify",
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    /// 1-based position in the class list.
    pub index: usize,
    pub element: String,
    pub fixed_points: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftReport {
    pub tuple: NielsenTuple,
    pub exponent: u8,
    pub order: u8,
    /// The kernel element as a permutation of 18 points.
    pub gamma: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitSummary {
    pub tuple: NielsenTuple,
    pub mode: Mode,
    pub size: usize,
    pub representative: NielsenTuple,
    /// Present for product-one tuples.
    pub lift_exponent: Option<u8>,
    pub lift_order: Option<u8>,
    pub monodromy_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub bridges: BridgeReport,
    pub suite: SuiteReport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Payload {
    ClassList(Vec<ClassEntry>),
    Lift(LiftReport),
    Orbit(OrbitSummary),
    Classify(OrbitReport),
    Reproduce(Vec<ReproOutcome>),
    Verify(VerifyReport),
}

impl Payload {
    pub fn passed(&self) -> bool {
        match self {
            Payload::Reproduce(outs) => outs.iter().all(|o| o.passed),
            Payload::Verify(v) => v.bridges.passed() && v.suite.passed(),
            _ => true,
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let out = &mut s;
        use std::fmt::Write as _;
        match self {
            Payload::ClassList(entries) => {
                for e in entries {
                    let _ = writeln!(out, "{:>2}  {}", e.index, e.element);
                }
            }
            Payload::Lift(l) => {
                let _ = writeln!(out, "exponent {}  order {}  gamma {}", l.exponent, l.order, l.gamma);
            }
            Payload::Orbit(o) => {
                let _ = writeln!(out, "{} orbit of {} states", o.mode, o.size);
                let _ = writeln!(out, "representative {}", o.representative);
                if let (Some(e), Some(ord)) = (o.lift_exponent, o.lift_order) {
                    let _ = writeln!(out, "lift exponent {e}  order {ord}");
                }
                let _ = writeln!(out, "monodromy order {}", o.monodromy_order);
            }
            Payload::Classify(r) => {
                let _ = writeln!(
                    out,
                    "k = {}  {}  {}: {} orbits over {} tuples",
                    r.k,
                    r.mode,
                    r.group_label.label(),
                    r.orbit_count,
                    r.total_tuples
                );
                for (i, o) in r.orbits.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "  {i}: size {}  exponent {}  order {}  monodromy {}  {}",
                        o.size, o.lift_exponent, o.lift_order, o.monodromy_order, o.representative
                    );
                }
            }
            Payload::Reproduce(outs) => {
                for o in outs {
                    let _ = writeln!(
                        out,
                        "{}  {}  candidates {}  screened {}  count {}",
                        o.code,
                        if o.passed { "pass" } else { "FAIL" },
                        o.candidates,
                        o.screened,
                        o.count
                    );
                    if !o.passed {
                        for w in &o.witnesses {
                            let _ = writeln!(out, "    {w}");
                        }
                    }
                }
                let passed = outs.iter().filter(|o| o.passed).count();
                let _ = writeln!(out, "{passed}/{} pass", outs.len());
            }
            Payload::Verify(v) => {
                for c in &v.bridges.checks {
                    let _ = writeln!(out, "{}  {}", if c.passed { "pass" } else { "FAIL" }, c.name);
                }
                for c in &v.suite.checks {
                    let _ = writeln!(
                        out,
                        "{}  {}  {} trials, {} violations  {}",
                        if c.passed { "pass" } else { "FAIL" },
                        c.name,
                        c.trials,
                        c.violations,
                        c.detail
                    );
                }
            }
        }
        s
    }

    fn csv(&self) -> std::result::Result<Vec<u8>, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self {
            Payload::ClassList(entries) => {
                w.write_record(["index", "element", "fixed_points"])?;
                for e in entries {
                    let fixed: Vec<String> = e.fixed_points.iter().map(|p| p.to_string()).collect();
                    w.write_record([e.index.to_string(), e.element.clone(), fixed.join(" ")])?;
                }
            }
            Payload::Lift(l) => {
                w.write_record(["tuple", "exponent", "order", "gamma"])?;
                w.write_record([
                    l.tuple.to_string(),
                    l.exponent.to_string(),
                    l.order.to_string(),
                    l.gamma.clone(),
                ])?;
            }
            Payload::Orbit(o) => {
                w.write_record([
                    "tuple",
                    "mode",
                    "size",
                    "representative",
                    "lift_exponent",
                    "lift_order",
                    "monodromy_order",
                ])?;
                let opt = |v: Option<u8>| v.map(|x| x.to_string()).unwrap_or_default();
                w.write_record([
                    o.tuple.to_string(),
                    o.mode.to_string(),
                    o.size.to_string(),
                    o.representative.to_string(),
                    opt(o.lift_exponent),
                    opt(o.lift_order),
                    o.monodromy_order.to_string(),
                ])?;
            }
            Payload::Classify(r) => {
                w.write_record([
                    "k",
                    "mode",
                    "orbit_index",
                    "size",
                    "lift_exponent",
                    "lift_order",
                    "monodromy_order",
                    "representative",
                ])?;
                for (i, o) in r.orbits.iter().enumerate() {
                    w.write_record([
                        r.k.to_string(),
                        r.mode.to_string(),
                        i.to_string(),
                        o.size.to_string(),
                        o.lift_exponent.to_string(),
                        o.lift_order.to_string(),
                        o.monodromy_order.to_string(),
                        o.representative.to_string(),
                    ])?;
                }
            }
            Payload::Reproduce(outs) => {
                w.write_record([
                    "code",
                    "passed",
                    "depth",
                    "candidates",
                    "screened",
                    "count",
                    "expectation",
                ])?;
                for o in outs {
                    w.write_record([
                        o.code.to_string(),
                        o.passed.to_string(),
                        o.depth.map(|d| d.to_string()).unwrap_or_default(),
                        o.candidates.to_string(),
                        o.screened.to_string(),
                        o.count.to_string(),
                        o.expectation.clone(),
                    ])?;
                }
            }
            Payload::Verify(v) => {
                w.write_record(["check", "passed", "trials", "violations", "detail"])?;
                for c in &v.bridges.checks {
                    w.write_record([
                        c.name.clone(),
                        c.passed.to_string(),
                        "1".into(),
                        u8::from(!c.passed).to_string(),
                        c.detail.clone(),
                    ])?;
                }
                for c in &v.suite.checks {
                    w.write_record([
                        c.name.clone(),
                        c.passed.to_string(),
                        c.trials.to_string(),
                        c.violations.to_string(),
                        c.detail.clone(),
                    ])?;
                }
            }
        }
        w.into_inner().map_err(|e| e.into_error().into())
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    config: &'a RunConfig,
    payload: &'a Payload,
    elapsed_ms: u64,
}

/// Runs the validated configuration.
pub fn execute(cfg: &RunConfig) -> Result<Payload> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Construction(e.to_string()))?;
    pool.install(|| execute_in_pool(cfg))
}

fn tuple_of(cfg: &RunConfig) -> Result<NielsenTuple> {
    cfg.tuple
        .as_deref()
        .ok_or_else(|| Error::Precondition("no tuple given".into()))?
        .parse()
}

fn execute_in_pool(cfg: &RunConfig) -> Result<Payload> {
    match cfg.subcommand {
        "class-list" => Ok(Payload::ClassList(
            ClassElem::all()
                .map(|c| {
                    let p = c.perm();
                    ClassEntry {
                        index: c.index() + 1,
                        element: p.to_string(),
                        fixed_points: p.fixed_points(),
                    }
                })
                .collect(),
        )),
        "lift" => {
            let tuple = tuple_of(cfg)?;
            let v = lifting_invariant(&tuple)?;
            Ok(Payload::Lift(LiftReport {
                tuple,
                exponent: v.exponent,
                order: v.order(),
                gamma: v.element.to_string(),
            }))
        }
        "orbit" => {
            let tuple = tuple_of(cfg)?;
            let mode = cfg.mode.unwrap_or(Mode::Inner);
            let options = OrbitOptions {
                workers: Some(cfg.workers),
                max_states: None,
            };
            let orbit = braid_orbit_with(&tuple, mode.canon(), &options)?;
            let representative = orbit.min_key().expect("an orbit contains its seed").tuple();
            let lift = lifting_invariant(&tuple).ok();
            Ok(Payload::Orbit(OrbitSummary {
                size: orbit.size(),
                mode,
                lift_exponent: lift.map(|v| v.exponent),
                lift_order: lift.map(|v| v.order()),
                monodromy_order: tuple.monodromy_order(),
                representative,
                tuple,
            }))
        }
        "classify" => {
            let options = ClassifyOptions {
                workers: Some(cfg.workers),
                max_states: None,
                allow_k8: cfg.opt_in_k8,
            };
            let k = cfg.k.ok_or_else(|| Error::Precondition("no k given".into()))?;
            let mode = cfg.mode.unwrap_or(Mode::Inner);
            let c = classify_with(k, mode, cfg.group.unwrap_or(GroupChoice::A6), &options)?;
            Ok(Payload::Classify(c.report))
        }
        "reproduce" => {
            let codes = cfg.codes.clone().unwrap_or_else(|| ReproCode::ALL.to_vec());
            Ok(Payload::Reproduce(
                codes.into_iter().map(|c| reproduce_at(c, cfg.depth)).collect(),
            ))
        }
        "verify" => {
            let suite_cfg = SuiteConfig {
                seed: cfg.seed,
                ..SuiteConfig::default()
            };
            Ok(Payload::Verify(VerifyReport {
                bridges: verify_inner_parity_bridges()?,
                suite: run_property_suite(&suite_cfg)?,
            }))
        }
        other => Err(Error::Precondition(format!("unknown subcommand {other}"))),
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::NotInClass(_)
            | Error::DegreeMismatch { .. }
            | Error::UnsupportedDegree(_)
            | Error::IndexOutOfRange { .. }
            | Error::Precondition(_)
    )
}

/// Parses `argv` (program name first), runs it, and writes to stdout and
/// stderr. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let payload = match execute(&cfg) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if is_input_error(&e) { 2 } else { 1 };
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let written = match cfg.format {
        Format::Json => {
            let env = Envelope {
                config: &cfg,
                payload: &payload,
                elapsed_ms,
            };
            serde_json::to_string_pretty(&env)
                .map_err(|e| e.to_string())
                .and_then(|s| writeln!(out, "{s}").map_err(|e| e.to_string()))
        }
        Format::Csv => payload
            .csv()
            .map_err(|e| e.to_string())
            .and_then(|b| out.write_all(&b).map_err(|e| e.to_string())),
        Format::Text => write!(out, "{}", payload.text()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 1;
    }
    if payload.passed() {
        0
    } else {
        let _ = writeln!(err, "error: a requested check failed");
        1
    }
}

/// Comparable payload of a run as JSON, for determinism checks.
pub fn payload_json(cfg: &RunConfig) -> Result<String> {
    let payload = execute(cfg)?;
    serde_json::to_string(&payload).map_err(|e| Error::Verification(e.to_string()))
}

/// Parses and validates `argv` without running anything.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::parse("arguments", e.to_string()))?;
    RunConfig::from_cli(&cli)
}
