//! `scs`: solvers, normalizer and reduction tooling from the command line.
//!
//! Exit status: 0 on success, 1 when a check fails or a search budget runs
//! out, 2 on usage, input or precondition errors.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use scs_core::format::{parse_graph, parse_words, write_instance};
use scs_core::normalizer::normalize_with_trace;
use scs_core::reduction::{extract_cover, threshold, witness_from_cover, Graph, VertexCover};
use scs_core::solver::{
    scs_exact, scs_majority_merge, scs_pairwise, SearchBudget, SolverError, SolverResult,
};
use scs_core::verify::{self, Scope};
use scs_core::words::{leftmost_embedding, Word};

#[derive(Parser)]
#[command(name = "scs", version, about = "Shortest common supersequence tools")]
struct Cli {
    /// Print a single JSON object instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Pairwise,
    Majority,
}

#[derive(Subcommand)]
enum Command {
    /// Find a common supersequence of the words in a file.
    Solve {
        words: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// State expansions allowed to the exact search.
        #[arg(long, alias = "budget")]
        max_states: Option<u64>,
        /// Longest candidate the exact search may consider.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Report, for every word in a file, whether it embeds into a supersequence.
    Check {
        words: PathBuf,
        /// The candidate supersequence, or `@path` to read it from a file.
        sup: String,
    },
    /// Rewrite a supersequence of phi-image words into a phi-image word.
    Normalize {
        /// The supersequence to normalize, or `@path` to read it from a file.
        s: String,
        words: PathBuf,
        /// List every rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Build the supersequence instance for a graph.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// Cover size; adds the matching length threshold to the header.
        #[arg(long)]
        k: Option<usize>,
        /// Instance file; the instance goes to stdout and the report to stderr when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the short supersequence that a vertex cover yields.
    Witness {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertices, e.g. "1,3".
        #[arg(long, value_delimiter = ',')]
        cover: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover a vertex cover from a short supersequence of the instance.
    Extract {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// File holding the supersequence.
        word: PathBuf,
    },
    /// Run the built-in verification checks.
    Verify {
        #[arg(long, default_value = "all")]
        scope: String,
    },
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    expected: String,
    observed: String,
    pass: bool,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    inputs: Vec<InputDigest>,
    values: Map<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CheckRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    lines: Vec<String>,
    pass: bool,
}

impl RunReport {
    fn new(command: &'static str) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            values: Map::new(),
            checks: Vec::new(),
            lines: Vec::new(),
            pass: true,
        }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_string(), value.into());
    }

    /// Reads a file and records its digest.
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex(&Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    fn render(&self, out: &mut dyn Write, json: bool) -> io::Result<()> {
        if json {
            serde_json::to_writer_pretty(&mut *out, self)?;
            return writeln!(out);
        }
        writeln!(out, "command: {}", self.command)?;
        for input in &self.inputs {
            writeln!(out, "input: {} sha256={}", input.path, input.sha256)?;
        }
        for (k, v) in &self.values {
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}")?,
                other => writeln!(out, "{k}: {other}")?,
            }
        }
        for line in &self.lines {
            writeln!(out, "{line}")?;
        }
        for c in &self.checks {
            writeln!(
                out,
                "check: {} {} | expected: {} | observed: {} | {:.1} ms",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.observed,
                c.elapsed_ms
            )?;
        }
        writeln!(out, "pass: {}", self.pass)
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_word(text: &str, what: &str) -> Result<Word> {
    text.trim()
        .parse()
        .with_context(|| format!("parsing {what}"))
}

/// A word given inline, or as `@path` naming a file that holds it.
fn word_arg(report: &mut RunReport, arg: &str) -> Result<Word> {
    match arg.strip_prefix('@') {
        Some(path) => single_word(report, Path::new(path)),
        None => parse_word(arg, "supersequence"),
    }
}

/// The single word held in a words file.
fn single_word(report: &mut RunReport, path: &Path) -> Result<Word> {
    let text = report.read(path)?;
    let mut ws = parse_words(&text).with_context(|| format!("parsing {}", path.display()))?;
    if ws.len() != 1 {
        bail!(
            "{} must hold exactly one word, found {}",
            path.display(),
            ws.len()
        );
    }
    Ok(ws.remove(0))
}

fn read_words(report: &mut RunReport, path: &Path) -> Result<Vec<Word>> {
    let text = report.read(path)?;
    parse_words(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(report: &mut RunReport, path: &Path) -> Result<Graph> {
    let text = report.read(path)?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn millis(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn record_solution(report: &mut RunReport, r: &SolverResult) {
    report.set("length", r.length());
    report.set("supersequence", r.supersequence.to_string());
    report.set("optimal", r.optimal);
    report.set("states_expanded", r.stats.states_expanded);
    report.set("elapsed_ms", millis(r.stats.elapsed));
}

fn solve(
    words: &Path,
    mode: Mode,
    max_states: Option<u64>,
    max_len: Option<usize>,
) -> Result<RunReport> {
    let mut report = RunReport::new("solve");
    let ws = read_words(&mut report, words)?;
    report.set("words", ws.len());
    match mode {
        Mode::Exact => {
            let default = SearchBudget::default();
            let budget = SearchBudget::new(
                max_states.unwrap_or(default.max_states()),
                max_len.unwrap_or(default.max_length()),
            )?;
            report.set("mode", "exact");
            match scs_exact(&ws, &budget) {
                Ok(r) => record_solution(&mut report, &r),
                Err(SolverError::BudgetExceeded { incumbent }) => {
                    record_solution(&mut report, &incumbent);
                    report.set("budget_exhausted", true);
                    report.pass = false;
                }
                Err(e) => return Err(e.into()),
            }
        }
        Mode::Pairwise => {
            let [u, v] = &ws[..] else {
                bail!("pairwise mode needs exactly two words, found {}", ws.len());
            };
            report.set("mode", "pairwise");
            record_solution(&mut report, &scs_pairwise(u, v));
        }
        Mode::Majority => {
            report.set("mode", "majority");
            record_solution(&mut report, &scs_majority_merge(&ws));
        }
    }
    Ok(report)
}

fn check(words: &Path, sup: &str) -> Result<RunReport> {
    let mut report = RunReport::new("check");
    let ws = read_words(&mut report, words)?;
    let s = word_arg(&mut report, sup)?;
    report.set("length", s.len());
    let mut embedded = 0;
    for (i, x) in ws.iter().enumerate() {
        let ok = leftmost_embedding(x, &s).is_some();
        embedded += ok as usize;
        report.lines.push(format!("word {}: {} {}", i + 1, x, ok));
    }
    report.set("embedded", format!("{embedded}/{}", ws.len()));
    report.pass = embedded == ws.len();
    Ok(report)
}

fn normalize(s: &str, words: &Path, trace: bool) -> Result<RunReport> {
    let mut report = RunReport::new("normalize");
    let s = word_arg(&mut report, s)?;
    let ws = read_words(&mut report, words)?;
    let (out, steps) = normalize_with_trace(&s, &ws)?;
    report.set("normalized", out.to_string());
    report.set("length_before", s.len());
    report.set("length_after", out.len());
    report.set("delta", out.len() as i64 - s.len() as i64);
    report.set("steps", steps.len());
    if trace {
        report
            .lines
            .extend(steps.steps.iter().map(|st| format!("step: {st}")));
    }
    Ok(report)
}

fn open_out(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    ))
}

fn reduce(graph: &Path, k: Option<usize>, out: Option<&Path>) -> Result<RunReport> {
    let mut report = RunReport::new("reduce");
    let g = read_graph(&mut report, graph)?;
    if let Some(k) = k {
        if k > g.n() {
            bail!("k = {k} exceeds the number of vertices {}", g.n());
        }
    }
    let count = match out {
        Some(path) => {
            let mut f = open_out(path)?;
            let count = write_instance(&mut f, &g, k)?;
            f.flush()?;
            report.set("out", path.display().to_string());
            count
        }
        None => {
            let stdout = io::stdout();
            let mut lock = BufWriter::new(stdout.lock());
            let count = write_instance(&mut lock, &g, k)?;
            lock.flush()?;
            count
        }
    };
    report.set("n", g.n());
    report.set("m", g.m());
    report.set("words", count);
    report.set("threshold_base", threshold(g.n(), 0));
    if let Some(k) = k {
        report.set("k", k);
        report.set("threshold", threshold(g.n(), k));
    }
    Ok(report)
}

fn witness(graph: &Path, cover: &[usize], out: Option<&Path>) -> Result<RunReport> {
    let mut report = RunReport::new("witness");
    let g = read_graph(&mut report, graph)?;
    let cover = VertexCover::new(cover.iter().copied());
    let s = witness_from_cover(&g, &cover)?;
    report.set("cover", cover.to_string());
    report.set("length", s.len());
    report.set("threshold", threshold(g.n(), cover.len()));
    match out {
        Some(path) => {
            let mut f = open_out(path)?;
            writeln!(f, "{s}")?;
            f.flush()?;
            report.set("out", path.display().to_string());
        }
        None => report.set("word", s.to_string()),
    }
    Ok(report)
}

fn extract(graph: &Path, k: usize, word: &Path) -> Result<RunReport> {
    let mut report = RunReport::new("extract");
    let g = read_graph(&mut report, graph)?;
    let s = single_word(&mut report, word)?;
    let cover = extract_cover(&s, &g, k)?;
    report.set("length", s.len());
    report.set("threshold", threshold(g.n(), k));
    report.set("cover", cover.to_string());
    report.set("size", cover.len());
    Ok(report)
}

fn run_verify(scope: &str) -> Result<RunReport> {
    let scope: Scope = scope.parse().map_err(anyhow::Error::msg)?;
    let mut report = RunReport::new("verify");
    let result = verify::run(scope);
    report.set("scope", format!("{scope:?}").to_lowercase());
    report.set("checks", result.checks.len());
    report.set("failures", result.failures());
    report.pass = result.all_pass();
    report.checks = result
        .checks
        .into_iter()
        .map(|c| CheckRow {
            name: c.name,
            expected: c.expected,
            observed: c.observed,
            pass: c.pass,
            elapsed_ms: millis(c.elapsed),
        })
        .collect();
    Ok(report)
}

fn run(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::Solve {
            words,
            mode,
            max_states,
            max_len,
        } => solve(words, *mode, *max_states, *max_len),
        Command::Check { words, sup } => check(words, sup),
        Command::Normalize { s, words, trace } => normalize(s, words, *trace),
        Command::Reduce { graph, k, out } => reduce(graph, *k, out.as_deref()),
        Command::Witness { graph, cover, out } => witness(graph, cover, out.as_deref()),
        Command::Extract { graph, k, word } => extract(graph, *k, word),
        Command::Verify { scope } => run_verify(scope),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            // the instance itself owns stdout when reduce has no --out
            let to_stderr = matches!(&cli.command, Command::Reduce { out: None, .. });
            let written = if to_stderr {
                report.render(&mut io::stderr().lock(), cli.json)
            } else {
                report.render(&mut io::stdout().lock(), cli.json)
            };
            if written.is_err() {
                return ExitCode::from(2);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
