//! The `rigidkit` command line.
//!
//! Exit codes: 0 success, 1 a property-check failure (malformed input, a
//! gallery expectation that does not hold, a rejected certificate, a failing
//! batch), 2 a usage error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::{Command, Stdio};

use clap::{Args, Parser, Subcommand};
use rigidkit::graph::graph6::{parse_graph6, write_graph6};
use rigidkit::reduction::{
    certify_independent, find_blockers, reducible_moves, verify_certificate, Certificate,
    CertifyError,
};
use rigidkit::rigidity::{
    generic_rank, generic_rank_exact, is_circuit, is_independent_with, is_rigid_with,
    rank_upper_bound, DEFAULT_SEED, DEFAULT_TRIALS,
};
use rigidkit::sparsity::{
    closure, enumerate_k_sets, is_d_sparse, is_d_sparse_brute, lemmas, maximal_proper_cores,
    proper_cores,
};
use rigidkit::Graph;
use serde_json::{json, Value};

use crate::batch::{verify_corpus, BatchConfig, CONNECTED_5_REGULAR_12, CONNECTED_5_REGULAR_14};
use crate::gallery::{self, NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rigidkit", version, about = "Combinatorial rigidity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Args)]
pub struct Source {
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, conflicts_with = "gallery")]
    pub input: Option<PathBuf>,
    /// Named fixture, e.g. k66minus or k_n(5).
    #[arg(long)]
    pub gallery: Option<String>,
}

#[derive(Debug, Args)]
pub struct Common {
    #[command(flatten)]
    pub source: Source,
    /// Dimension; defaults to the fixture's dimension, else 3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub d: Option<u8>,
    #[arg(long, env = "RIGIDKIT_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = parse_trials)]
    pub trials: usize,
    /// Emit one JSON array instead of JSON lines.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// d-sparsity with a violating set when it fails.
    Sparsity {
        #[command(flatten)]
        common: Common,
        /// Use the exhaustive subset scan.
        #[arg(long)]
        brute: bool,
    },
    /// Generic rank of the rigidity matrix.
    Rank {
        #[command(flatten)]
        common: Common,
        /// One evaluation in exact rational arithmetic.
        #[arg(long)]
        exact: bool,
    },
    Independent {
        #[command(flatten)]
        common: Common,
    },
    Rigid {
        #[command(flatten)]
        common: Common,
    },
    Circuit {
        #[command(flatten)]
        common: Common,
    },
    /// k-sets (d = 3 only).
    Ksets {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        k_max: i64,
        #[arg(long, default_value_t = 3)]
        min_size: usize,
        /// Also run the counting-lemma audit.
        #[arg(long)]
        audit: bool,
    },
    /// Proper cores and their closures (d = 3 only).
    Cores {
        #[command(flatten)]
        common: Common,
    },
    /// Independence certificate by reduction (d = 3 only).
    Reduce {
        #[command(flatten)]
        common: Common,
        /// List the reducible moves with admissibility and blockers.
        #[arg(long)]
        moves: bool,
    },
    /// Checks a certificate produced by `reduce`.
    VerifyCert {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Corpus verification over connected 5-regular graphs.
    Batch(BatchArgs),
    /// Named fixtures.
    Gallery {
        #[command(subcommand)]
        action: GalleryCmd,
    },
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// graph6 corpus; `-` reads stdin.
    #[arg(long, conflicts_with_all = ["geng", "full14"], required_unless_present_any = ["geng", "full14"])]
    pub input: Option<PathBuf>,
    /// Generate connected 5-regular graphs on N vertices with nauty's geng
    /// (path from RIGIDKIT_GENG, else `geng` on PATH).
    #[arg(long, value_name = "N", conflicts_with = "full14")]
    pub geng: Option<usize>,
    /// The full 14-vertex run: `--geng 14 --expect 3459383`.
    #[arg(long)]
    pub full14: bool,
    /// Expected number of connected 5-regular graphs.
    #[arg(long)]
    pub expect: Option<usize>,
    #[arg(long, default_value_t = default_jobs())]
    pub jobs: usize,
    /// Also build and verify a reduction certificate for each sparse graph.
    #[arg(long)]
    pub certificates: bool,
    #[arg(long, env = "RIGIDKIT_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = parse_trials)]
    pub trials: usize,
}

#[derive(Debug, Subcommand)]
pub enum GalleryCmd {
    /// Names of the fixtures.
    List,
    /// Rebuilds fixtures and re-verifies their expected properties.
    Check {
        /// Fixtures to check; all parameter-free ones plus k_d2_d2(1..=4) and
        /// k_n(1..=8) by default.
        names: Vec<String>,
        #[arg(long, env = "RIGIDKIT_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

fn parse_trials(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("at least one trial is needed".into()),
        Ok(t) => Ok(t),
        Err(e) => Err(e.to_string()),
    }
}

/// Known counts of connected 5-regular graphs.
pub fn known_count(n: usize) -> Option<usize> {
    match n {
        6 => Some(1),
        8 => Some(3),
        10 => Some(60),
        12 => Some(CONNECTED_5_REGULAR_12),
        14 => Some(CONNECTED_5_REGULAR_14),
        _ => None,
    }
}

struct Input {
    index: usize,
    line: String,
    graph: Result<Graph, String>,
    fixture_d: Option<usize>,
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json_array: bool,
    records: Vec<Value>,
    failed: bool,
}

impl Ctx<'_> {
    fn emit(&mut self, v: Value) -> io::Result<()> {
        if self.json_array {
            self.records.push(v);
            Ok(())
        } else {
            writeln!(self.out, "{v}")
        }
    }

    fn finish(&mut self) -> io::Result<i32> {
        if self.json_array {
            let arr = Value::Array(std::mem::take(&mut self.records));
            writeln!(self.out, "{}", serde_json::to_string_pretty(&arr)?)?;
        }
        Ok(if self.failed { EXIT_FAILURE } else { EXIT_OK })
    }
}

fn open<'a>(path: &PathBuf, stdin: &'a mut dyn Read) -> io::Result<Box<dyn BufRead + 'a>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(stdin)))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

fn load_inputs(src: &Source, seed: u64, stdin: &mut dyn Read, ctx: &mut Ctx) -> Result<Vec<Input>, i32> {
    if let Some(name) = &src.gallery {
        let (f, mismatches) = match gallery::load(name, seed) {
            Ok(x) => x,
            Err(e) => {
                let _ = writeln!(ctx.err, "error: {e}");
                return Err(EXIT_USAGE);
            }
        };
        for m in &mismatches {
            let _ = writeln!(
                ctx.err,
                "fixture {name}: {} expected {} got {}",
                m.property, m.expected, m.actual
            );
            ctx.failed = true;
        }
        return Ok(vec![Input {
            index: 0,
            line: write_graph6(&f.graph),
            graph: Ok(f.graph),
            fixture_d: Some(f.d),
        }]);
    }
    let Some(path) = &src.input else {
        let _ = writeln!(ctx.err, "error: one of --input or --gallery is required");
        return Err(EXIT_USAGE);
    };
    let reader = match open(path, stdin) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: cannot read {}: {e}", path.display());
            return Err(EXIT_FAILURE);
        }
    };
    let mut inputs = Vec::new();
    for line in reader.lines() {
        let line = match line {
            Ok(l) => l.trim_end_matches('\r').to_string(),
            Err(e) => {
                let _ = writeln!(ctx.err, "error: reading {}: {e}", path.display());
                return Err(EXIT_FAILURE);
            }
        };
        if line.is_empty() {
            continue;
        }
        let graph = parse_graph6(&line).map_err(|e| e.to_string());
        inputs.push(Input {
            index: inputs.len(),
            line,
            graph,
            fixture_d: None,
        });
    }
    Ok(inputs)
}

fn with_header(index: usize, graph6: &str, body: Value) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("index".into(), json!(index));
    obj.insert("graph6".into(), json!(graph6));
    if let Value::Object(m) = body {
        obj.extend(m);
    }
    Value::Object(obj)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let common = match cli.command {
        Cmd::Batch(args) => return run_batch(args, stdin, out, err),
        Cmd::Gallery { action } => return run_gallery(action, out),
        Cmd::Sparsity { ref common, .. }
        | Cmd::Rank { ref common, .. }
        | Cmd::Independent { ref common }
        | Cmd::Rigid { ref common }
        | Cmd::Circuit { ref common }
        | Cmd::Ksets { ref common, .. }
        | Cmd::Cores { ref common }
        | Cmd::Reduce { ref common, .. }
        | Cmd::VerifyCert { ref common, .. } => common,
    };
    let three_only = matches!(
        cli.command,
        Cmd::Ksets { .. } | Cmd::Cores { .. } | Cmd::Reduce { .. } | Cmd::VerifyCert { .. }
    );
    if three_only && common.d.is_some_and(|d| d != 3) {
        writeln!(err, "error: this subcommand is defined for --d 3 only")?;
        return Ok(EXIT_USAGE);
    }
    let mut ctx = Ctx {
        out,
        err,
        json_array: common.json,
        records: Vec::new(),
        failed: false,
    };

    if let Cmd::VerifyCert { common, cert } = &cli.command {
        return verify_cert(common, cert, stdin, &mut ctx);
    }

    let inputs = match load_inputs(&common.source, common.seed, stdin, &mut ctx) {
        Ok(i) => i,
        Err(code) => return Ok(code),
    };
    for input in inputs {
        let g = match input.graph {
            Ok(g) => g,
            Err(e) => {
                ctx.failed = true;
                ctx.emit(json!({"index": input.index, "graph6": input.line, "error": format!("malformed graph6: {e}")}))?;
                continue;
            }
        };
        let d = common
            .d
            .map(usize::from)
            .or(input.fixture_d)
            .unwrap_or(3);
        if three_only && d != 3 {
            writeln!(ctx.err, "error: this subcommand is defined for d = 3 only")?;
            return Ok(EXIT_USAGE);
        }
        let body = match check_one(&cli.command, &g, d, common) {
            Ok(b) => b,
            Err(msg) => {
                ctx.failed = true;
                json!({"error": msg})
            }
        };
        ctx.emit(with_header(input.index, &input.line, body))?;
    }
    ctx.finish()
}

fn check_one(cmd: &Cmd, g: &Graph, d: usize, common: &Common) -> Result<Value, String> {
    let (seed, trials) = (common.seed, common.trials);
    let v = match cmd {
        Cmd::Sparsity { brute, .. } => {
            let verdict = if *brute {
                is_d_sparse_brute(g, d)
            } else {
                is_d_sparse(g, d)
            }
            .map_err(|e| e.to_string())?;
            json!({"d": d, "sparse": verdict.sparse, "witness": verdict.witness, "method": verdict.method})
        }
        Cmd::Rank { exact, .. } => {
            let r = if *exact {
                generic_rank_exact(g, d, seed)
            } else {
                generic_rank(g, d, trials, seed)
            };
            json!({"d": d, "rank": r.rank, "edges": g.edge_count(), "upper_bound": rank_upper_bound(g, d), "detail": r})
        }
        Cmd::Independent { .. } => {
            let v = is_independent_with(g, d, trials, seed);
            json!({"d": d, "independent": v.holds, "rank": v.rank.rank, "detail": v.rank})
        }
        Cmd::Rigid { .. } => {
            let v = is_rigid_with(g, d, trials, seed);
            json!({"d": d, "rigid": v.holds, "rank": v.rank.rank, "detail": v.rank})
        }
        Cmd::Circuit { .. } => {
            let v = is_circuit(g, d, seed);
            json!({"d": d, "circuit": v.holds, "rank": v.rank.rank, "detail": v.rank})
        }
        Cmd::Ksets {
            k_max,
            min_size,
            audit,
            ..
        } => {
            let sets = enumerate_k_sets(g, *k_max, *min_size).map_err(|e| e.to_string())?;
            let mut v = json!({"k_max": k_max, "min_size": min_size, "count": sets.len(), "sets": sets});
            if *audit {
                let a = lemmas::audit(g, *k_max, (*min_size).max(4)).map_err(|e| e.to_string())?;
                let bad = !a.violations.is_empty();
                v["audit"] = serde_json::to_value(a).map_err(|e| e.to_string())?;
                if bad {
                    return Err(format!("lemma audit found violations: {}", v["audit"]));
                }
            }
            v
        }
        Cmd::Cores { .. } => {
            let cores = proper_cores(g).map_err(|e| e.to_string())?;
            let maximal = maximal_proper_cores(g).map_err(|e| e.to_string())?;
            let closures: Vec<_> = maximal.iter().map(|c| closure(g, c)).collect();
            json!({"proper_cores": cores, "maximal_proper_cores": maximal, "closures": closures})
        }
        Cmd::Reduce { moves, .. } => {
            let mut v = match certify_independent(g, seed) {
                Ok(cert) => json!({"certified": true, "certificate": cert}),
                Err(CertifyError::InternalInconsistency(m)) => return Err(m),
                Err(e @ CertifyError::NotSparse { .. }) | Err(e @ CertifyError::Dependent { .. }) => {
                    json!({"certified": false, "reason": e.to_string()})
                }
            };
            if *moves {
                let list = reducible_moves(g);
                let blockers = find_blockers(g, &list).map_err(|e| e.to_string())?;
                let evaluated: Vec<_> = list
                    .into_iter()
                    .zip(blockers)
                    .map(|(mut m, b)| {
                        m.admissible = Some(b.is_none());
                        m.blocker = b;
                        m
                    })
                    .collect();
                v["moves"] = json!(evaluated);
            }
            v
        }
        Cmd::VerifyCert { .. } | Cmd::Batch(_) | Cmd::Gallery { .. } => unreachable!(),
    };
    Ok(v)
}

fn verify_cert(common: &Common, path: &PathBuf, stdin: &mut dyn Read, ctx: &mut Ctx) -> io::Result<i32> {
    let mut text = String::new();
    if let Err(e) = open(path, stdin).and_then(|mut r| r.read_to_string(&mut text)) {
        writeln!(ctx.err, "error: cannot read {}: {e}", path.display())?;
        return Ok(EXIT_FAILURE);
    }
    // accept a bare certificate or the output of `reduce`
    let cert: Result<Certificate, _> = serde_json::from_str::<Value>(&text).and_then(|v| {
        let inner = v.get("certificate").cloned().unwrap_or(v);
        serde_json::from_value(inner)
    });
    let cert = match cert {
        Ok(c) => c,
        Err(e) => {
            ctx.failed = true;
            ctx.emit(json!({"valid": false, "failure": format!("unreadable certificate: {e}")}))?;
            return ctx.finish();
        }
    };
    let targets: Vec<Input> = if common.source.input.is_none() && common.source.gallery.is_none() {
        vec![Input {
            index: 0,
            line: write_graph6(&cert.final_graph6),
            graph: Ok(cert.final_graph6.clone()),
            fixture_d: None,
        }]
    } else {
        match load_inputs(&common.source, common.seed, stdin, ctx) {
            Ok(i) => i,
            Err(code) => return Ok(code),
        }
    };
    for input in targets {
        let body = match &input.graph {
            Err(e) => json!({"valid": false, "failure": format!("malformed graph6: {e}")}),
            Ok(g) => match verify_certificate(&cert, g, common.seed) {
                Ok(()) => json!({"valid": true, "steps": cert.steps.len()}),
                Err(f) => json!({"valid": false, "failure": f}),
            },
        };
        if body["valid"] != json!(true) {
            ctx.failed = true;
        }
        ctx.emit(with_header(input.index, &input.line, body))?;
    }
    ctx.finish()
}

fn run_batch(args: BatchArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let geng_n = if args.full14 { Some(14) } else { args.geng };
    let expected = args.expect.or_else(|| geng_n.and_then(known_count));
    let cfg = BatchConfig {
        seed: args.seed,
        trials: args.trials,
        jobs: args.jobs.max(1),
        certificates: args.certificates,
        expected,
    };
    let report = if let Some(n) = geng_n {
        let exe = std::env::var_os("RIGIDKIT_GENG").unwrap_or_else(|| "geng".into());
        let child = Command::new(&exe)
            .args(["-c", "-d5", "-D5", "-q", &n.to_string()])
            .stdout(Stdio::piped())
            .stderr(Stdio::inherit())
            .spawn();
        let mut child = match child {
            Ok(c) => c,
            Err(e) => {
                writeln!(err, "error: cannot run {}: {e}", exe.to_string_lossy())?;
                return Ok(EXIT_FAILURE);
            }
        };
        let stdout = child.stdout.take().expect("piped");
        let report = verify_corpus(BufReader::new(stdout), &cfg)?;
        let status = child.wait()?;
        if !status.success() {
            writeln!(err, "error: geng exited with {status}")?;
            return Ok(EXIT_FAILURE);
        }
        report
    } else {
        let path = args.input.expect("clap enforces a source");
        match open(&path, stdin) {
            Ok(r) => verify_corpus(r, &cfg)?,
            Err(e) => {
                writeln!(err, "error: cannot read {}: {e}", path.display())?;
                return Ok(EXIT_FAILURE);
            }
        }
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
}

/// Fixtures checked by `gallery check` with no names.
pub fn default_gallery() -> Vec<String> {
    let mut names: Vec<String> = ["k66minus", "double-banana", "two-sum-k5", "k55", "octahedron"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend((1..=4).map(|d| format!("k_d2_d2({d})")));
    names.extend((1..=8).map(|n| format!("k_n({n})")));
    names
}

fn run_gallery(action: GalleryCmd, out: &mut dyn Write) -> io::Result<i32> {
    match action {
        GalleryCmd::List => {
            for n in NAMES {
                writeln!(out, "{n}")?;
            }
            Ok(EXIT_OK)
        }
        GalleryCmd::Check { names, seed } => {
            let names = if names.is_empty() { default_gallery() } else { names };
            let mut code = EXIT_OK;
            for name in names {
                let v = match gallery::load(&name, seed) {
                    Ok((f, m)) => {
                        if !m.is_empty() {
                            code = EXIT_FAILURE;
                        }
                        json!({
                            "name": name,
                            "graph6": write_graph6(&f.graph),
                            "d": f.d,
                            "expected": f.expected,
                            "mismatches": m,
                        })
                    }
                    Err(e) => {
                        code = EXIT_FAILURE;
                        json!({"name": name, "error": e.to_string()})
                    }
                };
                writeln!(out, "{v}")?;
            }
            Ok(code)
        }
    }
}
