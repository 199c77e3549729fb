//! Exhaustive and randomized checks of the path-extremality statements,
//! producing machine-readable [`VerificationReport`]s.
//!
//! Four entry points:
//! - [`verify_fa_max`]: exact integer checks that paths attain the maximum
//!   weighted distance sum over all connected labeled graphs, that under the
//!   strict weight classes only paths attain it, and that the constructive
//!   certificates on trees are sound.
//! - [`verify_spectral`]: eigenvalue sweeps — the largest eigenvalue of the
//!   distance, distance-Laplacian, and distance-signless matrices is
//!   maximized exactly by paths, and of the adjacency, Laplacian, and
//!   signless-Laplacian matrices minimized exactly by paths. Every
//!   distance-family sweep also revalidates the quadratic-form identities
//!   tying eigenvalues to weighted distance sums.
//! - [`nath_paul_distinctness`]: the top eigenvector of the path's
//!   distance Laplacian has pairwise-distinct entries.
//! - [`tightness_search`]: hunts for weight matrices whose maximizer set
//!   contains a non-path, which can only happen outside the
//!   one-zero-per-row hypothesis; inside it, any hit is a violation.
//!
//! Sweeps partition enumeration index ranges across workers with
//! associative merges, so results are independent of worker count; reports
//! are byte-identical across runs except for `elapsed_ms`.

use crate::enumeration::{
    graph_from_edge_mask, pair_count, tree_count, tree_from_index, CONNECTED_MAX_N, TREE_MAX_N,
};
use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};
use crate::matrix::SymMatrix;
use crate::path_builder::{maximize_on_path, BEST_CONNECTED_MAX_N};
use crate::report::{Finding, PerN, ReportConfig, VerificationReport};
use crate::spectra::{
    adjacency_bundle, distance_bundle, full_spectrum, largest_eigenpair_with_fallback, MatrixKind,
    DEFAULT_EIGEN_TOL,
};
use crate::wiener::{classify_weights, rank_one_weights, weighted_wiener, RankOneKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::Instant;

/// Relative tie tolerance: a graph counts as attaining the extremum when
/// its eigenvalue is within `TIE_TOL * max(1, |extremum|)`.
pub const TIE_TOL: f64 = 1e-9;
/// Absolute tolerance for the quadratic-form identity checks.
pub const RAYLEIGH_TOL: f64 = 1e-8;
/// Minimum pairwise eigenvector entry gap accepted as "distinct".
pub const DISTINCTNESS_TOL: f64 = 1e-8;
/// Extremal-graph lists in reports are truncated to this many entries
/// (enumeration order); all orders checked by the acceptance sweeps stay
/// far below it.
pub const MAX_LISTED_GRAPHS: usize = 4096;
/// Exhibits recorded per report are capped at this many (trial order).
pub const MAX_EXHIBITS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

impl Direction {
    pub fn token(self) -> &'static str {
        match self {
            Direction::Maximize => "max",
            Direction::Minimize => "min",
        }
    }

    pub fn from_token(s: &str) -> Result<Self, Error> {
        match s {
            "max" => Ok(Direction::Maximize),
            "min" => Ok(Direction::Minimize),
            other => Err(Error::Config(format!("unknown direction: {other} (use max or min)"))),
        }
    }

    /// The direction in which paths are extremal for each matrix kind.
    pub fn expected_for(kind: MatrixKind) -> Direction {
        if kind.needs_distances() {
            Direction::Maximize
        } else {
            Direction::Minimize
        }
    }

    /// Larger is better under this direction.
    fn score(self, lambda: f64) -> f64 {
        match self {
            Direction::Maximize => lambda,
            Direction::Minimize => -lambda,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightClassKind {
    /// Nonnegative off-diagonal entries, zeros unrestricted.
    Nonnegative,
    /// At most one zero off-diagonal entry per row.
    OneZeroPerRow,
    /// Strictly positive off-diagonal entries.
    Positive,
}

impl WeightClassKind {
    pub fn token(self) -> &'static str {
        match self {
            WeightClassKind::Nonnegative => "nonneg",
            WeightClassKind::OneZeroPerRow => "nn",
            WeightClassKind::Positive => "positive",
        }
    }

    pub fn from_token(s: &str) -> Result<Self, Error> {
        match s {
            "nonneg" | "nonnegative" => Ok(WeightClassKind::Nonnegative),
            "nn" | "one-zero-per-row" => Ok(WeightClassKind::OneZeroPerRow),
            "positive" => Ok(WeightClassKind::Positive),
            other => Err(Error::Config(format!(
                "unknown weight class: {other} (use positive, nn, or nonneg)"
            ))),
        }
    }

    /// Whether the class guarantees that only paths attain the maximum.
    fn maximizers_must_be_paths(self) -> bool {
        !matches!(self, WeightClassKind::Nonnegative)
    }
}

/// Which graphs a spectral sweep ranges over.
#[derive(Clone, Debug)]
pub enum UniverseSpec {
    /// All connected labeled graphs (n <= 7).
    Connected,
    /// All labeled trees (n <= 9).
    Trees,
    /// An externally supplied list (e.g. read from a graph6 file); graphs
    /// outside the requested order range are ignored.
    Graphs(Vec<Graph>),
}

impl UniverseSpec {
    pub fn token(&self) -> &'static str {
        match self {
            UniverseSpec::Connected => "connected",
            UniverseSpec::Trees => "trees",
            UniverseSpec::Graphs(_) => "file",
        }
    }
}

/// Runs `body` on a dedicated pool of `jobs` workers, or on the global pool
/// when `jobs` is `None`.
fn with_jobs<R: Send>(jobs: Option<usize>, body: impl FnOnce() -> R + Send) -> Result<R, Error> {
    match jobs {
        None => Ok(body()),
        Some(0) => Err(Error::Config("jobs must be at least 1".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
            Ok(pool.install(body))
        }
    }
}

// ---------------------------------------------------------------------------
// Exact weighted-distance-sum checks (integer arithmetic throughout)
// ---------------------------------------------------------------------------

/// Precomputed universe of all connected labeled graphs on `n` vertices:
/// edge mask, distance matrix, and whether the graph is a path.
struct UniverseEntry {
    mask: u64,
    dist: DistanceMatrix,
    is_path: bool,
}

fn connected_cache(n: usize) -> Result<Vec<UniverseEntry>, Error> {
    if !(2..=BEST_CONNECTED_MAX_N).contains(&n) {
        return Err(Error::RangeUnsupported("connected universe", 2, BEST_CONNECTED_MAX_N, n));
    }
    let mut out = Vec::new();
    for mask in 0..1u64 << pair_count(n) {
        let g = graph_from_edge_mask(n, mask)?;
        if !g.is_connected() {
            continue;
        }
        out.push(UniverseEntry {
            mask,
            dist: g.distances()?,
            is_path: g.as_path_sequence().is_some(),
        });
    }
    Ok(out)
}

fn trees_cache(n: usize) -> Result<Vec<(Graph, bool)>, Error> {
    Ok(crate::enumeration::labeled_trees(n)?
        .map(|t| {
            let is_path = t.as_path_sequence().is_some();
            (t, is_path)
        })
        .collect())
}

fn mask_graph6(n: usize, mask: u64) -> String {
    graph_from_edge_mask(n, mask).expect("mask from cache is valid").to_graph6()
}

/// Exact scan of a cached universe under one weight matrix.
struct ExactScan {
    best: i64,
    best_over_paths: i64,
    maximizer_masks: Vec<u64>,
    non_path_maximizer_masks: Vec<u64>,
}

fn exact_scan(entries: &[UniverseEntry], a: &SymMatrix<i64>) -> Result<ExactScan, Error> {
    let mut best = i64::MIN;
    let mut best_over_paths = i64::MIN;
    let mut maximizer_masks: Vec<u64> = Vec::new();
    let mut non_path: Vec<u64> = Vec::new();
    for e in entries {
        let f = weighted_wiener(&e.dist, a)?;
        if e.is_path && f > best_over_paths {
            best_over_paths = f;
        }
        if f > best {
            best = f;
            maximizer_masks.clear();
            non_path.clear();
        }
        if f == best {
            if maximizer_masks.len() < MAX_LISTED_GRAPHS {
                maximizer_masks.push(e.mask);
            }
            if !e.is_path && non_path.len() < MAX_LISTED_GRAPHS {
                non_path.push(e.mask);
            }
        }
    }
    Ok(ExactScan { best, best_over_paths, maximizer_masks, non_path_maximizer_masks: non_path })
}

/// Draws a symmetric integer weight matrix in the given class, entries in
/// `1..=100` (zeros as the class permits).
fn sample_weights(n: usize, class: WeightClassKind, rng: &mut ChaCha8Rng) -> SymMatrix<i64> {
    let mut a = SymMatrix::zeros(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            a.set(i, j, rng.gen_range(1..=100));
        }
    }
    match class {
        WeightClassKind::Positive => {}
        WeightClassKind::OneZeroPerRow => {
            // Plant zeros pairwise so no row collects more than one: a zero
            // at (r, c) uses up both rows' budgets.
            let mut free = vec![true; n + 1];
            for r in 1..n {
                if !free[r] || !rng.gen_bool(0.5) {
                    continue;
                }
                let partners: Vec<usize> = ((r + 1)..=n).filter(|&c| free[c]).collect();
                if let Some(&c) = partners.get(rng.gen_range(0..partners.len().max(1))) {
                    a.set(r, c, 0);
                    free[r] = false;
                    free[c] = false;
                }
            }
        }
        WeightClassKind::Nonnegative => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if rng.gen_ratio(1, 6) {
                        a.set(i, j, 0);
                    }
                }
            }
        }
    }
    a
}

fn trial_rng(seed: u64, n: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | trial as u64);
    rng
}

/// Outcome of checking one weight matrix against one order's universes.
struct FaTrialOutcome {
    scan: ExactScan,
    violations: Vec<Finding>,
    exhibits: Vec<Finding>,
}

/// Runs the full battery for one weight matrix: connected-vs-path optimum
/// equality, maximizer path-ness per class, and certificate soundness and
/// strictness over every tree of the order.
fn fa_trial(
    n: usize,
    entries: &[UniverseEntry],
    trees: &[(Graph, bool)],
    a: &SymMatrix<i64>,
    class: WeightClassKind,
) -> Result<FaTrialOutcome, Error> {
    let mut violations = Vec::new();
    let mut exhibits = Vec::new();
    let scan = exact_scan(entries, a)?;

    if scan.best != scan.best_over_paths {
        let witness = scan.maximizer_masks.first().copied().unwrap_or(0);
        violations.push(Finding {
            graph6: mask_graph6(n, witness),
            expected: format!("path optimum {}", scan.best_over_paths),
            actual: format!("connected optimum {}", scan.best),
            gap: (scan.best - scan.best_over_paths) as f64,
        });
    }
    for &mask in &scan.non_path_maximizer_masks {
        let finding = Finding {
            graph6: mask_graph6(n, mask),
            expected: "only paths attain the optimum".into(),
            actual: format!("non-path graph ties at {}", scan.best),
            gap: 0.0,
        };
        if class.maximizers_must_be_paths() {
            violations.push(finding);
        } else {
            exhibits.push(finding);
        }
    }

    let strict_class = classify_weights(a).forces_strict();
    for (tree, is_path) in trees {
        let cert = maximize_on_path(tree, a)?;
        if cert.f_path < cert.f_input {
            violations.push(Finding {
                graph6: tree.to_graph6(),
                expected: format!("certified path value >= input value {}", cert.f_input),
                actual: format!("certified path value {}", cert.f_path),
                gap: (cert.f_input - cert.f_path) as f64,
            });
        }
        if cert.f_path > scan.best_over_paths {
            violations.push(Finding {
                graph6: tree.to_graph6(),
                expected: format!("certified value at most the path optimum {}", scan.best_over_paths),
                actual: format!("certified value {}", cert.f_path),
                gap: (cert.f_path - scan.best_over_paths) as f64,
            });
        }
        if strict_class && !is_path && !cert.strict {
            violations.push(Finding {
                graph6: tree.to_graph6(),
                expected: "strict improvement on a non-path tree".into(),
                actual: format!("f_input {} = f_path {}", cert.f_input, cert.f_path),
                gap: 0.0,
            });
        }
        if *is_path && cert.strict {
            violations.push(Finding {
                graph6: tree.to_graph6(),
                expected: "no improvement on a path input".into(),
                actual: format!("f_input {} < f_path {}", cert.f_input, cert.f_path),
                gap: (cert.f_path - cert.f_input) as f64,
            });
        }
    }
    Ok(FaTrialOutcome { scan, violations, exhibits })
}

/// Randomized exact verification that paths attain the maximum weighted
/// distance sum (and, for the strict classes, that nothing else does),
/// plus certificate soundness on every labeled tree of each order.
///
/// For each order in `n_min..=n_max` and each trial, one weight matrix is
/// drawn in `class` and checked against the cached connected universe. All
/// comparisons are exact integer arithmetic. Non-path co-maximizers under
/// the `nonneg` class are recorded as exhibits, not violations.
pub fn verify_fa_max(
    n_min: usize,
    n_max: usize,
    trials: usize,
    seed: u64,
    class: WeightClassKind,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    if n_min < 2 || n_min > n_max || n_max > BEST_CONNECTED_MAX_N {
        return Err(Error::RangeUnsupported("verify_fa_max", 2, BEST_CONNECTED_MAX_N, n_max.max(n_min)));
    }

    let mut config = ReportConfig::new();
    config.n_min = Some(n_min);
    config.n_max = Some(n_max);
    config.trials = Some(trials);
    config.weight_class = Some(WeightClassKind::token(class).to_string());
    config.seed = Some(seed);
    let mut report = VerificationReport::new("verify_fa_max", config);
    report.seed = Some(seed);

    for n in n_min..=n_max {
        let entries = connected_cache(n)?;
        let trees = trees_cache(n)?;
        let mut last: Option<ExactScan> = None;
        for trial in 0..trials {
            let mut rng = trial_rng(seed, n, trial);
            let a = sample_weights(n, class, &mut rng);
            let outcome = fa_trial(n, &entries, &trees, &a, class)?;
            report.violations.extend(outcome.violations);
            for e in outcome.exhibits {
                if report.exhibits.len() < MAX_EXHIBITS {
                    report.exhibits.push(e);
                }
            }
            last = Some(outcome.scan);
        }
        let scan = last.expect("at least one trial");
        report.universe_count += entries.len() as u64;
        report.per_n.push(PerN {
            n,
            universe_count: entries.len() as u64,
            extremal_value: Some(scan.best as f64),
            extremal_graphs: scan.maximizer_masks.iter().map(|&m| mask_graph6(n, m)).collect(),
        });
    }
    if let Some(last) = report.per_n.last() {
        report.extremal_value = last.extremal_value;
        report.extremal_graphs = last.extremal_graphs.clone();
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Spectral sweeps
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SpectralOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub kind: MatrixKind,
    pub direction: Direction,
    pub universe: UniverseSpec,
    pub eigen_tol: f64,
    pub tie_tol: f64,
    pub rayleigh_tol: f64,
    pub jobs: Option<usize>,
}

impl SpectralOptions {
    /// Defaults: connected universe, the direction in which paths are
    /// extremal for `kind`, and the standard tolerances.
    pub fn new(kind: MatrixKind, n_min: usize, n_max: usize) -> Self {
        SpectralOptions {
            n_min,
            n_max,
            kind,
            direction: Direction::expected_for(kind),
            universe: UniverseSpec::Connected,
            eigen_tol: DEFAULT_EIGEN_TOL,
            tie_tol: TIE_TOL,
            rayleigh_tol: RAYLEIGH_TOL,
            jobs: None,
        }
    }
}

/// Per-graph spectral evaluation: the largest eigenvalue, plus an optional
/// finding when the solver failed (lambda is then NaN and the graph is
/// excluded from extremal accounting) or when a distance-family
/// quadratic-form identity missed its tolerance.
fn eval_graph(
    g: &Graph,
    kind: MatrixKind,
    eigen_tol: f64,
    rayleigh_tol: f64,
) -> Result<(f64, Option<Finding>), Error> {
    let (m, dist) = if kind.needs_distances() {
        let d = g.distances()?;
        let b = distance_bundle(&d);
        let m = match kind {
            MatrixKind::Distance => b.distance.to_f64(),
            MatrixKind::DistanceLaplacian => b.laplacian.to_f64(),
            MatrixKind::DistanceSignless => b.signless.to_f64(),
            _ => unreachable!(),
        };
        (m, Some(d))
    } else {
        let b = adjacency_bundle(g);
        let m = match kind {
            MatrixKind::Adjacency => b.adjacency.to_f64(),
            MatrixKind::Laplacian => b.laplacian.to_f64(),
            MatrixKind::SignlessLaplacian => b.signless.to_f64(),
            _ => unreachable!(),
        };
        (m, None)
    };
    let pair = match largest_eigenpair_with_fallback(&m, eigen_tol) {
        Ok(p) => p,
        Err(Error::NonConvergence) => {
            return Ok((
                f64::NAN,
                Some(Finding {
                    graph6: g.to_graph6(),
                    expected: "eigensolver convergence".into(),
                    actual: "no convergence after fallback".into(),
                    gap: f64::NAN,
                }),
            ));
        }
        Err(e) => return Err(e),
    };
    // Quadratic-form identities: with x the unit top eigenvector, the
    // weighted distance sum under the matching rank-one weights equals the
    // eigenvalue (doubled for the plain distance matrix).
    if let Some(d) = dist {
        let (rk, factor) = match kind {
            MatrixKind::Distance => (RankOneKind::Product, 2.0),
            MatrixKind::DistanceLaplacian => (RankOneKind::SquareDiff, 1.0),
            MatrixKind::DistanceSignless => (RankOneKind::SquareSum, 1.0),
            _ => unreachable!(),
        };
        let w = rank_one_weights(&pair.vector, rk);
        let f: f64 = weighted_wiener(&d, &w)?;
        let observed = factor * f;
        let gap = (observed - pair.lambda).abs();
        if gap > rayleigh_tol {
            return Ok((
                pair.lambda,
                Some(Finding {
                    graph6: g.to_graph6(),
                    expected: format!("eigenvalue {}", pair.lambda),
                    actual: format!("weighted distance sum {observed}"),
                    gap,
                }),
            ));
        }
    }
    Ok((pair.lambda, None))
}

#[derive(Clone)]
struct ScanAcc {
    count: u64,
    best: f64,
    candidates: Vec<(u64, f64)>,
    findings: Vec<(u64, Finding)>,
}

impl ScanAcc {
    fn new() -> Self {
        ScanAcc { count: 0, best: f64::NEG_INFINITY, candidates: vec![], findings: vec![] }
    }

    /// Pruning slack: generous enough that anything within the final tie
    /// tolerance always survives intermediate pruning.
    fn slack(&self) -> f64 {
        1e-6 * self.best.abs().max(1.0)
    }

    fn push(&mut self, id: u64, score: f64) {
        if score > self.best {
            self.best = score;
            let keep = self.best - self.slack();
            self.candidates.retain(|&(_, s)| s >= keep);
        }
        if score >= self.best - self.slack() {
            self.candidates.push((id, score));
        }
    }

    fn merge(mut self, other: ScanAcc) -> ScanAcc {
        self.count += other.count;
        self.findings.extend(other.findings);
        if other.best > self.best {
            self.best = other.best;
        }
        let keep = self.best - self.slack();
        self.candidates.extend(other.candidates);
        self.candidates.retain(|&(_, s)| s >= keep);
        self
    }
}

struct ScanOutcome {
    count: u64,
    best_score: f64,
    /// Candidates within the pruning slack of the best, sorted by id.
    candidates: Vec<(u64, f64)>,
    findings: Vec<(u64, Finding)>,
}

/// Sweeps an id range in parallel; `to_graph` maps an id to a graph (or
/// `None` to skip, e.g. a disconnected edge mask). Deterministic: the merge
/// is associative and results are sorted by id afterwards.
fn spectral_scan<F>(
    ids: std::ops::Range<u64>,
    to_graph: F,
    kind: MatrixKind,
    direction: Direction,
    eigen_tol: f64,
    rayleigh_tol: f64,
) -> Result<ScanOutcome, Error>
where
    F: Fn(u64) -> Result<Option<Graph>, Error> + Sync,
{
    let acc = ids
        .into_par_iter()
        .try_fold(ScanAcc::new, |mut acc, id| -> Result<ScanAcc, Error> {
            let Some(g) = to_graph(id)? else { return Ok(acc) };
            acc.count += 1;
            let (lambda, finding) = eval_graph(&g, kind, eigen_tol, rayleigh_tol)?;
            if let Some(f) = finding {
                acc.findings.push((id, f));
            }
            let score = direction.score(lambda);
            if score.is_finite() {
                acc.push(id, score);
            }
            Ok(acc)
        })
        .try_reduce(ScanAcc::new, |a, b| Ok(a.merge(b)))?;
    let mut candidates = acc.candidates;
    candidates.sort_unstable_by_key(|&(id, _)| id);
    let mut findings = acc.findings;
    findings.sort_unstable_by_key(|&(id, _)| id);
    Ok(ScanOutcome { count: acc.count, best_score: acc.best, candidates, findings })
}

/// Spectral sweep: asserts that labeled paths, and only labeled paths,
/// attain the extremal largest eigenvalue of the chosen matrix kind over
/// the chosen universe, in the direction where that statement holds
/// (max for the distance family, min for the adjacency family).
///
/// Non-path graphs inside the tie tolerance are recomputed with the full
/// Jacobi solver before being declared violations, so solver noise cannot
/// raise false alarms. Distance-family sweeps also check the
/// quadratic-form identity on every graph.
pub fn verify_spectral(opts: &SpectralOptions) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let expected = Direction::expected_for(opts.kind);
    if opts.direction != expected {
        let verb = match expected {
            Direction::Maximize => "maximizes",
            Direction::Minimize => "minimizes",
        };
        return Err(Error::Config(format!(
            "direction {} is not checkable for matrix kind {}: the path {} its largest eigenvalue among connected graphs, so use --direction {}",
            opts.direction.token(),
            opts.kind.token(),
            verb,
            expected.token()
        )));
    }
    let n_cap = match opts.universe {
        UniverseSpec::Connected => CONNECTED_MAX_N,
        UniverseSpec::Trees => TREE_MAX_N,
        UniverseSpec::Graphs(_) => crate::MAX_VERTICES,
    };
    if opts.n_min < 2 || opts.n_min > opts.n_max || opts.n_max > n_cap {
        return Err(Error::RangeUnsupported(
            "verify_spectral",
            2,
            n_cap,
            opts.n_max.max(opts.n_min),
        ));
    }
    if !(opts.eigen_tol > 0.0) || !(opts.tie_tol > 0.0) || !(opts.rayleigh_tol > 0.0) {
        return Err(Error::Config("tolerances must be positive".into()));
    }

    let mut config = ReportConfig::new();
    config.n_min = Some(opts.n_min);
    config.n_max = Some(opts.n_max);
    config.universe = Some(opts.universe.token().to_string());
    config.matrix = Some(opts.kind.token().to_string());
    config.direction = Some(opts.direction.token().to_string());
    config.eigen_tol = Some(opts.eigen_tol);
    config.tie_tol = Some(opts.tie_tol);
    config.rayleigh_tol = Some(opts.rayleigh_tol);
    let mut report = VerificationReport::new("verify_spectral", config);

    // File universes are grouped by order up front.
    let mut by_n: std::collections::BTreeMap<usize, Vec<Graph>> = Default::default();
    if let UniverseSpec::Graphs(graphs) = &opts.universe {
        for g in graphs {
            if (opts.n_min..=opts.n_max).contains(&g.n()) {
                by_n.entry(g.n()).or_default().push(g.clone());
            }
        }
    }

    with_jobs(opts.jobs, || -> Result<(), Error> {
        for n in opts.n_min..=opts.n_max {
            let outcome = match &opts.universe {
                UniverseSpec::Connected => spectral_scan(
                    0..1u64 << pair_count(n),
                    |mask| {
                        let g = graph_from_edge_mask(n, mask)?;
                        Ok(g.is_connected().then_some(g))
                    },
                    opts.kind,
                    opts.direction,
                    opts.eigen_tol,
                    opts.rayleigh_tol,
                )?,
                UniverseSpec::Trees => spectral_scan(
                    0..tree_count(n),
                    |idx| Ok(Some(tree_from_index(n, idx)?)),
                    opts.kind,
                    opts.direction,
                    opts.eigen_tol,
                    opts.rayleigh_tol,
                )?,
                UniverseSpec::Graphs(_) => {
                    let group = by_n.get(&n).map(Vec::as_slice).unwrap_or(&[]);
                    if group.is_empty() {
                        continue;
                    }
                    spectral_scan(
                        0..group.len() as u64,
                        |idx| Ok(Some(group[idx as usize].clone())),
                        opts.kind,
                        opts.direction,
                        opts.eigen_tol,
                        opts.rayleigh_tol,
                    )?
                }
            };
            report.universe_count += outcome.count;
            for (_, f) in outcome.findings {
                report.violations.push(f);
            }

            let lambda_star = opts.direction.score(outcome.best_score); // score is its own inverse
            let tie_slack = opts.tie_tol * lambda_star.abs().max(1.0);
            let rebuild = |id: u64| -> Result<Graph, Error> {
                match &opts.universe {
                    UniverseSpec::Connected => graph_from_edge_mask(n, id),
                    UniverseSpec::Trees => tree_from_index(n, id),
                    UniverseSpec::Graphs(_) => {
                        Ok(by_n.get(&n).expect("group exists")[id as usize].clone())
                    }
                }
            };

            // Reference: the identity-labeled path of this order.
            let path = Graph::path(n)?;
            let path_matrix = crate::spectra::graph_matrix(&path, opts.kind)?;
            let path_lambda = largest_eigenpair_with_fallback(&path_matrix, opts.eigen_tol)?.lambda;
            let path_lambda_exact = *full_spectrum(&path_matrix)?.last().expect("n >= 2");
            let path_attains = (path_lambda - lambda_star).abs() <= tie_slack;
            if !path_attains {
                report.violations.push(Finding {
                    graph6: path.to_graph6(),
                    expected: format!("path attains the extremal eigenvalue {lambda_star}"),
                    actual: format!("path eigenvalue {path_lambda}"),
                    gap: (path_lambda - lambda_star).abs(),
                });
            }

            let mut listed: Vec<String> = Vec::new();
            for &(id, score) in &outcome.candidates {
                let lambda = opts.direction.score(score);
                if (lambda - lambda_star).abs() > tie_slack {
                    continue;
                }
                let g = rebuild(id)?;
                if g.as_path_sequence().is_none() {
                    // Second stage: recompute both sides with the full
                    // Jacobi solver before declaring a tie real.
                    let m = crate::spectra::graph_matrix(&g, opts.kind)?;
                    let exact = *full_spectrum(&m)?.last().expect("n >= 2");
                    let ties_path = match opts.direction {
                        Direction::Maximize => exact >= path_lambda_exact - tie_slack,
                        Direction::Minimize => exact <= path_lambda_exact + tie_slack,
                    };
                    // In a universe where the path itself misses the
                    // extremum (possible only for supplied graph lists), a
                    // non-path winner is a finding even without a path tie.
                    let wins_universe = (exact - lambda_star).abs() <= tie_slack;
                    if !ties_path && (path_attains || !wins_universe) {
                        continue;
                    }
                    report.violations.push(Finding {
                        graph6: g.to_graph6(),
                        expected: "only paths attain the extremal eigenvalue".into(),
                        actual: format!(
                            "non-path eigenvalue {exact} vs path {path_lambda_exact}"
                        ),
                        gap: (exact - path_lambda_exact).abs(),
                    });
                }
                if listed.len() < MAX_LISTED_GRAPHS {
                    listed.push(g.to_graph6());
                }
            }
            report.per_n.push(PerN {
                n,
                universe_count: outcome.count,
                extremal_value: Some(lambda_star),
                extremal_graphs: listed,
            });
        }
        Ok(())
    })??;

    if let Some(last) = report.per_n.last() {
        report.extremal_value = last.extremal_value;
        report.extremal_graphs = last.extremal_graphs.clone();
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Eigenvector distinctness on paths
// ---------------------------------------------------------------------------

/// Checks, for each order in range, that the top eigenvector of the path's
/// distance Laplacian has pairwise-distinct entries: every gap
/// `|x_i - x_j|` must exceed [`DISTINCTNESS_TOL`] after unit normalization.
/// The report's extremal value is the smallest gap seen across the range;
/// per-order minima are in `per_n`.
pub fn nath_paul_distinctness(n_min: usize, n_max: usize) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    const MAX_N: usize = 32;
    if n_min < 2 || n_min > n_max || n_max > MAX_N {
        return Err(Error::RangeUnsupported("nath_paul_distinctness", 2, MAX_N, n_max.max(n_min)));
    }
    let mut config = ReportConfig::new();
    config.n_min = Some(n_min);
    config.n_max = Some(n_max);
    config.eigen_tol = Some(DEFAULT_EIGEN_TOL);
    config.distinctness_tol = Some(DISTINCTNESS_TOL);
    let mut report = VerificationReport::new("nath_paul_distinctness", config);

    let mut overall_min = f64::INFINITY;
    for n in n_min..=n_max {
        let path = Graph::path(n)?;
        let m = crate::spectra::graph_matrix(&path, MatrixKind::DistanceLaplacian)?;
        let pair = largest_eigenpair_with_fallback(&m, DEFAULT_EIGEN_TOL)?;
        let x = &pair.vector;
        let mut min_gap = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                min_gap = min_gap.min((x[i] - x[j]).abs());
            }
        }
        if min_gap <= DISTINCTNESS_TOL {
            report.violations.push(Finding {
                graph6: path.to_graph6(),
                expected: format!("all eigenvector entry gaps above {DISTINCTNESS_TOL}"),
                actual: format!("minimum gap {min_gap}"),
                gap: min_gap,
            });
        }
        overall_min = overall_min.min(min_gap);
        report.universe_count += 1;
        report.per_n.push(PerN {
            n,
            universe_count: 1,
            extremal_value: Some(min_gap),
            extremal_graphs: vec![path.to_graph6()],
        });
    }
    report.extremal_value = Some(overall_min);
    if let Some(last) = report.per_n.last() {
        report.extremal_graphs = last.extremal_graphs.clone();
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

// ---------------------------------------------------------------------------
// Tightness search
// ---------------------------------------------------------------------------

/// Hunts for weight matrices whose maximizer set contains a non-path.
///
/// Each trial samples a nonnegative integer matrix with up to `zero_budget`
/// planted zero off-diagonal entries per row, alternating weight styles
/// (all-ones, small range, wide range) and zero placements (scattered
/// across rows, concentrated in one row) so that the classic tie — a star
/// centered on a fully zeroed row with unit weights elsewhere — is hit
/// quickly. Non-path maximizers found with `zero_budget <= 1` are
/// violations (the strict statement forbids them); with larger budgets
/// they are the point of the search and are recorded as exhibits, each
/// carrying the weight matrix that produced it.
pub fn tightness_search(
    n: usize,
    zero_budget: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    if !(2..=BEST_CONNECTED_MAX_N).contains(&n) {
        return Err(Error::RangeUnsupported("tightness_search", 2, BEST_CONNECTED_MAX_N, n));
    }
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    if zero_budget > n - 1 {
        return Err(Error::Config(format!(
            "zero budget {zero_budget} exceeds the {} off-diagonal entries per row",
            n - 1
        )));
    }

    let mut config = ReportConfig::new();
    config.n_min = Some(n);
    config.n_max = Some(n);
    config.trials = Some(trials);
    config.zero_budget = Some(zero_budget);
    config.seed = Some(seed);
    let mut report = VerificationReport::new("tightness_search", config);
    report.seed = Some(seed);

    let entries = connected_cache(n)?;
    let mut last: Option<ExactScan> = None;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, n, trial);
        let a = sample_tightness_weights(n, zero_budget, &mut rng);
        debug_assert!(max_zeros_per_row(&a) <= zero_budget);
        let scan = exact_scan(&entries, &a)?;
        for &mask in &scan.non_path_maximizer_masks {
            let finding = Finding {
                graph6: mask_graph6(n, mask),
                expected: a.to_csv(),
                actual: format!("{}", scan.best),
                gap: 0.0,
            };
            if zero_budget <= 1 {
                report.violations.push(finding);
            } else if report.exhibits.len() < MAX_EXHIBITS {
                report.exhibits.push(finding);
            }
        }
        last = Some(scan);
    }
    let scan = last.expect("at least one trial");
    report.universe_count = entries.len() as u64;
    report.extremal_value = Some(scan.best as f64);
    report.extremal_graphs = scan.maximizer_masks.iter().map(|&m| mask_graph6(n, m)).collect();
    report.per_n.push(PerN {
        n,
        universe_count: entries.len() as u64,
        extremal_value: report.extremal_value,
        extremal_graphs: report.extremal_graphs.clone(),
    });
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

fn max_zeros_per_row(a: &SymMatrix<i64>) -> usize {
    let n = a.order();
    (1..=n)
        .map(|i| (1..=n).filter(|&j| j != i && a.get(i, j) == 0).count())
        .max()
        .unwrap_or(0)
}

fn sample_tightness_weights(n: usize, zero_budget: usize, rng: &mut ChaCha8Rng) -> SymMatrix<i64> {
    let mut a = SymMatrix::zeros(n);
    let style = rng.gen_range(0..3u8);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let w = match style {
                0 => 1,
                1 => rng.gen_range(1..=3),
                _ => rng.gen_range(1..=100),
            };
            a.set(i, j, w);
        }
    }
    if zero_budget == 0 {
        return a;
    }
    let mut remaining = vec![zero_budget; n + 1];
    if rng.gen_bool(0.5) {
        // Concentrated: burn the whole budget in one row.
        let r = rng.gen_range(1..=n);
        let mut partners: Vec<usize> = (1..=n).filter(|&c| c != r).collect();
        for _ in 0..zero_budget.min(n - 1) {
            let k = rng.gen_range(0..partners.len());
            let c = partners.swap_remove(k);
            a.set(r, c, 0);
        }
    } else {
        // Scattered: random zero counts per row, consuming both rows'
        // budgets per planted zero.
        for r in 1..=n {
            let want = rng.gen_range(0..=zero_budget);
            for _ in 0..want {
                let candidates: Vec<usize> = (1..=n)
                    .filter(|&c| c != r && remaining[c] > 0 && a.get(r, c) != 0)
                    .collect();
                if remaining[r] == 0 || candidates.is_empty() {
                    break;
                }
                let c = candidates[rng.gen_range(0..candidates.len())];
                a.set(r, c, 0);
                remaining[r] -= 1;
                remaining[c] -= 1;
            }
        }
    }
    a
}
