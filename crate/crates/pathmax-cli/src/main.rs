//! Command-line driver for the `pathmax` library.
//!
//! Subcommands map one-to-one onto the library's entry points:
//!
//! * `verify-spectral` — sweep a graph universe and check that labeled
//!   paths, and only labeled paths, attain the extremal largest eigenvalue
//!   of the chosen matrix kind.
//! * `verify-fa` — random weight matrices per order; check that the maximum
//!   weighted distance sum over connected labeled graphs is attained by
//!   paths (and, for the strict weight classes, by nothing else).
//! * `build-path` — turn one input graph into a labeled path with an equal
//!   or larger weighted distance sum, emitting a replayable certificate;
//!   `--check` re-verifies a previously written certificate file.
//! * `oracle` — exhaustive maximum of the weighted distance sum over all
//!   connected labeled graphs (n <= 6).
//! * `nath-paul` — pairwise-distinct-entries check on the top eigenvector
//!   of the path's distance Laplacian.
//! * `tightness` — randomized search for weight matrices whose planted
//!   zeros let a non-path tie the best path.
//!
//! Exit status: 0 when the command ran and found no violations, 1 when a
//! check failed (violations in a report, or a certificate that does not
//! verify), 2 on usage or input errors.
//!
//! Reports print as a human text summary by default; `--format json` emits
//! the full self-describing report artifact (stable schema, reproducible
//! byte-for-byte except for `elapsed_ms`), `--format csv` flattens one row
//! per extremal graph, violation, and exhibit. Certificates are always
//! JSON: `{input_graph6, weights, path, f_input, f_path, strict, trace}`,
//! where `weights` is the literal string `"ones"` or the full CSV text of
//! the matrix, so the record re-verifies with no other files present
//! (`random:SEED` weights are materialized to CSV for that reason).

use clap::{Parser, Subcommand, ValueEnum};
use pathmax::matrix::{weights_from_csv, ParsedWeights};
use pathmax::path_builder::{brute_force_best_connected, TraceStep};
use pathmax::report::{Finding, ReportConfig, VerificationReport};
use pathmax::spectra::MatrixKind;
use pathmax::verifier::{
    nath_paul_distinctness, tightness_search, verify_fa_max, verify_spectral, Direction,
    SpectralOptions, UniverseSpec, WeightClassKind,
};
use pathmax::{maximize_on_path, verify_certificate, Error, Graph, SymMatrix, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pathmax", version)]
#[command(about = "Checks that labeled paths are extremal for weighted distance sums and for \
                   distance- and adjacency-family eigenvalues over small graph universes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    /// Full report artifact, stable schema.
    Json,
    /// One row per extremal graph, violation, and exhibit.
    Csv,
    /// Human summary.
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check that only labeled paths attain the extremal eigenvalue of a
    /// matrix kind over a whole graph universe
    VerifySpectral {
        /// Matrix kind: d, dl, dq (distance family), adj, lap, q
        /// (adjacency family)
        #[arg(long)]
        matrix: String,

        /// max or min. Defaults to the direction in which paths are
        /// extremal for the kind: max for d/dl/dq, min for adj/lap/q
        #[arg(long)]
        direction: Option<String>,

        /// Smallest order to sweep (default 2)
        #[arg(long)]
        n_min: Option<usize>,

        /// Largest order to sweep (default 6; file universes default to
        /// their own largest order)
        #[arg(long)]
        n_max: Option<usize>,

        /// Graph universe: connected, trees, or file
        #[arg(long, default_value = "connected")]
        universe: String,

        /// graph6 list file (one graph per line) for --universe file
        #[arg(long)]
        graphs: Option<PathBuf>,

        /// Power-iteration residual tolerance override
        #[arg(long)]
        eigen_tol: Option<f64>,

        /// Relative tie tolerance override
        #[arg(long)]
        tie_tol: Option<f64>,

        /// Quadratic-form identity tolerance override
        #[arg(long)]
        rayleigh_tol: Option<f64>,

        /// Worker count for the sweep (default: available parallelism)
        #[arg(long, env = "PATHMAX_JOBS")]
        jobs: Option<usize>,

        /// Write the report here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,

        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },

    /// Check that paths attain the maximum weighted distance sum over
    /// connected labeled graphs, on random weight matrices
    VerifyFa {
        /// Smallest order to check
        #[arg(long, default_value_t = 2)]
        n_min: usize,

        /// Largest order to check (at most 6)
        #[arg(long, default_value_t = 6)]
        n_max: usize,

        /// Random weight matrices per order (must be at least 1)
        #[arg(long, default_value_t = 100)]
        trials: usize,

        /// Weight class: nonneg, nn (at most one zero per row), positive
        #[arg(long, default_value = "nonneg")]
        class: String,

        /// Generator seed
        #[arg(long, default_value_t = 1)]
        seed: u64,

        /// Write the report here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,

        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },

    /// Build a labeled path whose weighted distance sum is at least the
    /// input graph's, writing a replayable JSON certificate
    BuildPath {
        /// Input graph as a graph6 string
        #[arg(long, conflicts_with_all = ["edges", "check"])]
        graph6: Option<String>,

        /// Input graph as an edge-list file: first line "n m", then one
        /// "u v" line per edge (1-based labels)
        #[arg(long, conflicts_with = "check")]
        edges: Option<PathBuf>,

        /// Weight matrix: "ones", "random:SEED" (entries uniform in 0..=9),
        /// or a CSV file path
        #[arg(long, default_value = "ones")]
        weights: String,

        /// Re-verify this certificate file against its embedded graph and
        /// weights instead of building anything
        #[arg(long)]
        check: Option<PathBuf>,

        /// Write the certificate here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Exhaustive maximum of the weighted distance sum over all connected
    /// labeled graphs on n vertices (n <= 6)
    Oracle {
        /// Order of the scan; required for --weights ones and random:SEED,
        /// must match the matrix for CSV weights
        #[arg(long)]
        n: Option<usize>,

        /// Weight matrix: "ones", "random:SEED" (entries uniform in 0..=9),
        /// or a CSV file path
        #[arg(long, default_value = "ones")]
        weights: String,

        /// Write the result here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,

        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },

    /// Check that the top eigenvector of the path's distance Laplacian has
    /// pairwise-distinct entries
    NathPaul {
        /// Smallest order to check
        #[arg(long, default_value_t = 2)]
        n_min: usize,

        /// Largest order to check
        #[arg(long, default_value_t = 12)]
        n_max: usize,

        /// Write the report here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,

        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },

    /// Search random weight matrices with planted zeros for non-path
    /// graphs tying the best path
    Tightness {
        /// Order to search at (2..=6)
        #[arg(long)]
        n: usize,

        /// Largest number of zero entries planted per weight row. Finds
        /// with a budget of 0 or 1 are violations; larger budgets record
        /// exhibits
        #[arg(long, default_value_t = 2)]
        zero_budget: usize,

        /// Trials to run (must be at least 1)
        #[arg(long, default_value_t = 1000)]
        trials: usize,

        /// Generator seed
        #[arg(long, default_value_t = 1)]
        seed: u64,

        /// Write the report here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,

        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::VerifySpectral {
            matrix,
            direction,
            n_min,
            n_max,
            universe,
            graphs,
            eigen_tol,
            tie_tol,
            rayleigh_tol,
            jobs,
            output,
            format,
        } => {
            let kind = MatrixKind::from_token(&matrix)?;
            if universe != "file" && graphs.is_some() {
                return Err(Error::Config("--graphs only applies to --universe file".into()));
            }
            let universe = match universe.as_str() {
                "connected" => UniverseSpec::Connected,
                "trees" => UniverseSpec::Trees,
                "file" => {
                    let path = graphs.ok_or_else(|| {
                        Error::Config("--universe file requires --graphs <PATH>".into())
                    })?;
                    UniverseSpec::Graphs(read_graph6_file(&path)?)
                }
                other => {
                    return Err(Error::Config(format!(
                        "unknown universe {other:?} (use connected, trees, or file)"
                    )))
                }
            };
            let mut opts = SpectralOptions::new(kind, n_min.unwrap_or(2), n_max.unwrap_or(6));
            if let UniverseSpec::Graphs(list) = &universe {
                // A file universe knows its own orders; default to them.
                let hi = list.iter().map(Graph::n).max();
                if let (None, Some(hi)) = (n_max, hi) {
                    opts.n_max = hi.max(opts.n_min);
                }
            }
            opts.universe = universe;
            if let Some(d) = direction {
                opts.direction = Direction::from_token(&d)?;
            }
            if let Some(t) = eigen_tol {
                opts.eigen_tol = t;
            }
            if let Some(t) = tie_tol {
                opts.tie_tol = t;
            }
            if let Some(t) = rayleigh_tol {
                opts.rayleigh_tol = t;
            }
            opts.jobs = jobs;
            emit_report(&verify_spectral(&opts)?, output.as_deref(), format)
        }

        Command::VerifyFa { n_min, n_max, trials, class, seed, output, format } => {
            let class = WeightClassKind::from_token(&class)?;
            let report = verify_fa_max(n_min, n_max, trials, seed, class)?;
            emit_report(&report, output.as_deref(), format)
        }

        Command::BuildPath { graph6, edges, weights, check, output } => {
            if let Some(cert_path) = check {
                return check_certificate(&cert_path);
            }
            let g = match (graph6, edges) {
                (Some(s), None) => Graph::from_graph6(s.trim())?,
                (None, Some(path)) => Graph::from_edge_list_text(&read_file(&path)?)?,
                _ => {
                    return Err(Error::Config(
                        "provide exactly one of --graph6 or --edges".into(),
                    ))
                }
            };
            let (parsed, record) = materialize_weights(&weights, Some(g.n()))?;
            match parsed {
                ParsedWeights::Int(a) => build_certificate(&g, &a, record, output.as_deref()),
                ParsedWeights::Float(a) => build_certificate(&g, &a, record, output.as_deref()),
            }
        }

        Command::Oracle { n, weights, output, format } => {
            let (parsed, record) = materialize_weights(&weights, n)?;
            match parsed {
                ParsedWeights::Int(a) => run_oracle(&a, record, output.as_deref(), format),
                ParsedWeights::Float(a) => run_oracle(&a, record, output.as_deref(), format),
            }
        }

        Command::NathPaul { n_min, n_max, output, format } => {
            emit_report(&nath_paul_distinctness(n_min, n_max)?, output.as_deref(), format)
        }

        Command::Tightness { n, zero_budget, trials, seed, output, format } => {
            let report = tightness_search(n, zero_budget, trials, seed)?;
            emit_report(&report, output.as_deref(), format)
        }
    }
}

// ---------------------------------------------------------------------------
// Input plumbing
// ---------------------------------------------------------------------------

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, body: &str) -> Result<(), Error> {
    std::fs::write(path, body)
        .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

/// Reads a graph6 list file: one graph per line, blank lines and `#`
/// comments skipped.
fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, Error> {
    read_file(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(Graph::from_graph6)
        .collect()
}

/// Turns a `--weights` value into a matrix plus the string embedded in
/// certificates: `"ones"` stays literal, everything else becomes the full
/// CSV text so the record is self-contained.
fn materialize_weights(
    spec: &str,
    n: Option<usize>,
) -> Result<(ParsedWeights, String), Error> {
    let need_n = || {
        n.ok_or_else(|| Error::Config(format!("--weights {spec} needs an order; pass --n")))
    };
    if spec == "ones" {
        let a = SymMatrix::<i64>::ones(need_n()?);
        return Ok((ParsedWeights::Int(a), "ones".to_string()));
    }
    if let Some(seed) = spec.strip_prefix("random:") {
        let seed: u64 = seed
            .parse()
            .map_err(|_| Error::Config(format!("bad seed in --weights {spec:?}")))?;
        let n = need_n()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = SymMatrix::<i64>::zeros(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                a.set(i, j, rng.gen_range(0..=9));
            }
        }
        let csv = a.to_csv();
        return Ok((ParsedWeights::Int(a), csv));
    }
    let parsed = weights_from_csv(&read_file(Path::new(spec))?)?;
    if let Some(n) = n {
        if parsed.order() != n {
            return Err(Error::OrderMismatch(parsed.order(), n));
        }
    }
    let csv = parsed.to_csv();
    Ok((parsed, csv))
}

// ---------------------------------------------------------------------------
// build-path: certificates
// ---------------------------------------------------------------------------

/// On-disk certificate: the library's proof object plus the inputs it
/// certifies, so `--check` needs nothing but this file.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct CertificateRecord<T> {
    input_graph6: String,
    /// `"ones"` or the full CSV text of the weight matrix.
    weights: String,
    path: Vec<usize>,
    f_input: T,
    f_path: T,
    strict: bool,
    trace: Vec<TraceStep<T>>,
}

fn build_certificate<T: Weight + Serialize>(
    g: &Graph,
    a: &SymMatrix<T>,
    weights_record: String,
    output: Option<&Path>,
) -> Result<u8, Error> {
    let cert = maximize_on_path(g, a)?;
    let record = CertificateRecord {
        input_graph6: g.to_graph6(),
        weights: weights_record,
        path: cert.path,
        f_input: cert.f_input,
        f_path: cert.f_path,
        strict: cert.strict,
        trace: cert.trace,
    };
    let body = serde_json::to_string_pretty(&record).expect("certificate serializes");
    emit(output, &body)?;
    Ok(0)
}

fn check_certificate(path: &Path) -> Result<u8, Error> {
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::Certificate(format!("not valid JSON: {e}")))?;
    let weights = value
        .get("weights")
        .and_then(|v| v.as_str())
        .ok_or_else(|| Error::Certificate("missing string field \"weights\"".into()))?
        .to_string();
    let g6 = value
        .get("input_graph6")
        .and_then(|v| v.as_str())
        .ok_or_else(|| Error::Certificate("missing string field \"input_graph6\"".into()))?;
    let g = Graph::from_graph6(g6)?;
    let outcome = if weights == "ones" {
        recheck::<i64>(&g, &SymMatrix::ones(g.n()), value)
    } else {
        match weights_from_csv(&weights)? {
            ParsedWeights::Int(a) => recheck::<i64>(&g, &a, value),
            ParsedWeights::Float(a) => recheck::<f64>(&g, &a, value),
        }
    };
    match outcome {
        Ok(()) => {
            println!("certificate OK: {}", path.display());
            Ok(0)
        }
        Err(Error::Certificate(msg)) => {
            println!("certificate INVALID: {msg}");
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

fn recheck<T: Weight + Serialize + DeserializeOwned>(
    g: &Graph,
    a: &SymMatrix<T>,
    value: serde_json::Value,
) -> Result<(), Error> {
    let record: CertificateRecord<T> = serde_json::from_value(value)
        .map_err(|e| Error::Certificate(format!("malformed record: {e}")))?;
    let cert = pathmax::PathCertificate {
        path: record.path,
        f_input: record.f_input,
        f_path: record.f_path,
        strict: record.strict,
        trace: record.trace,
    };
    verify_certificate(g, a, &cert)
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct OracleRecord<T> {
    task: &'static str,
    version: &'static str,
    n: usize,
    /// `"ones"` or the full CSV text of the weight matrix.
    weights: String,
    f_max: T,
    maximizers: Vec<String>,
    /// Whether some maximizer is a labeled path (always true for
    /// nonnegative weights).
    path_attains: bool,
}

fn run_oracle<T: Weight + Serialize + Display>(
    a: &SymMatrix<T>,
    weights_record: String,
    output: Option<&Path>,
    format: OutFormat,
) -> Result<u8, Error> {
    let scan = brute_force_best_connected(a)?;
    let path_attains = scan
        .maximizers
        .iter()
        .any(|g6| Graph::from_graph6(g6).is_ok_and(|g| g.as_path_sequence().is_some()));
    let record = OracleRecord {
        task: "oracle",
        version: env!("CARGO_PKG_VERSION"),
        n: a.order(),
        weights: weights_record,
        f_max: scan.value,
        maximizers: scan.maximizers,
        path_attains,
    };
    let body = match format {
        OutFormat::Json => serde_json::to_string_pretty(&record).expect("record serializes"),
        OutFormat::Csv => {
            let mut s = String::from("record,n,graph6,value\n");
            for g6 in &record.maximizers {
                s.push_str(&format!(
                    "maximizer,{},{},{}\n",
                    record.n,
                    csv_field(g6),
                    record.f_max
                ));
            }
            s.trim_end().to_string()
        }
        OutFormat::Text => format!(
            "oracle: n={} f_max={} attained by {} graph(s): {}{}",
            record.n,
            record.f_max,
            record.maximizers.len(),
            record.maximizers.iter().take(8).cloned().collect::<Vec<_>>().join(" "),
            if record.maximizers.len() > 8 { " ..." } else { "" }
        ),
    };
    emit(output, &body)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

fn emit(output: Option<&Path>, body: &str) -> Result<(), Error> {
    match output {
        Some(path) => write_file(path, &format!("{body}\n")),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn emit_report(
    report: &VerificationReport,
    output: Option<&Path>,
    format: OutFormat,
) -> Result<u8, Error> {
    let body = match format {
        OutFormat::Json => report.to_json(),
        OutFormat::Csv => report_csv(report),
        OutFormat::Text => report_text(report),
    };
    emit(output, &body)?;
    Ok(if report.passed() { 0 } else { 1 })
}

/// RFC 4180 quoting: fields with commas, quotes, or newlines are wrapped
/// in double quotes with internal quotes doubled.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn report_csv(report: &VerificationReport) -> String {
    let mut out = String::from("record,n,graph6,expected,actual,gap\n");
    let mut finding_row = |label: &str, f: &Finding| {
        let n = Graph::from_graph6(&f.graph6).map(|g| g.n().to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{label},{n},{},{},{},{}\n",
            csv_field(&f.graph6),
            csv_field(&f.expected),
            csv_field(&f.actual),
            f.gap
        ));
    };
    for f in &report.violations {
        finding_row("violation", f);
    }
    for f in &report.exhibits {
        finding_row("exhibit", f);
    }
    for per in &report.per_n {
        let value = per.extremal_value.map(|v| v.to_string()).unwrap_or_default();
        for g6 in &per.extremal_graphs {
            out.push_str(&format!(
                "extremal,{},{},,{value},\n",
                per.n,
                csv_field(g6)
            ));
        }
    }
    out.trim_end().to_string()
}

fn config_summary(c: &ReportConfig) -> String {
    let mut parts = Vec::new();
    match (c.n_min, c.n_max) {
        (Some(a), Some(b)) if a == b => parts.push(format!("n={a}")),
        (Some(a), Some(b)) => parts.push(format!("n={a}..{b}")),
        _ => {}
    }
    for (key, value) in [
        ("universe", &c.universe),
        ("matrix", &c.matrix),
        ("direction", &c.direction),
        ("class", &c.weight_class),
    ] {
        if let Some(v) = value {
            parts.push(format!("{key}={v}"));
        }
    }
    if let Some(t) = c.trials {
        parts.push(format!("trials={t}"));
    }
    if let Some(z) = c.zero_budget {
        parts.push(format!("zero_budget={z}"));
    }
    if let Some(s) = c.seed {
        parts.push(format!("seed={s}"));
    }
    parts.join(" ")
}

fn report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "task: {} (version {})\n",
        report.task, report.config.version
    ));
    let config = config_summary(&report.config);
    if !config.is_empty() {
        out.push_str(&format!("config: {config}\n"));
    }
    out.push_str(&format!("universe: {} graph(s) scanned\n", report.universe_count));
    if let Some(v) = report.extremal_value {
        out.push_str(&format!(
            "extremal value: {v} attained by {} graph(s): {}{}\n",
            report.extremal_graphs.len(),
            report.extremal_graphs.iter().take(8).cloned().collect::<Vec<_>>().join(" "),
            if report.extremal_graphs.len() > 8 { " ..." } else { "" }
        ));
    }
    if !report.exhibits.is_empty() {
        out.push_str(&format!(
            "exhibits: {} (expected findings, not failures)\n",
            report.exhibits.len()
        ));
    }
    out.push_str(&format!("violations: {}\n", report.violations.len()));
    for f in report.violations.iter().take(10) {
        out.push_str(&format!(
            "  {} expected {} but got {} (gap {})\n",
            f.graph6, f.expected, f.actual, f.gap
        ));
    }
    if report.violations.len() > 10 {
        out.push_str(&format!("  ... and {} more\n", report.violations.len() - 10));
    }
    out.push_str(&format!(
        "verdict: {} ({} ms)",
        if report.passed() { "PASS" } else { "FAIL" },
        report.elapsed_ms
    ));
    out
}
