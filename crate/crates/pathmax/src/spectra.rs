//! Distance and adjacency matrix bundles and symmetric eigensolvers.
//!
//! Bundles are assembled in exact integer arithmetic and converted to floats
//! only at the eigensolver boundary. Two independent solvers are kept on
//! purpose: shifted power iteration ([`largest_eigenpair`]) is the fast
//! route for the largest eigenvalue, and cyclic Jacobi ([`full_spectrum`])
//! is the slow, unconditionally convergent route that double-checks it.
//! Near-ties found by sweeps are always re-judged with Jacobi.

use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};
use crate::matrix::SymMatrix;

/// Default residual tolerance for [`largest_eigenpair`].
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;

/// Iteration cap for power iteration; past this the caller falls back to
/// [`full_spectrum`].
pub const POWER_ITERATION_CAP: usize = 100_000;

const JACOBI_MAX_SWEEPS: usize = 64;
const JACOBI_OFF_REL: f64 = 1e-12;

/// Distance matrix together with its derived forms. `laplacian` is
/// `diag(transmissions) - D` (positive semidefinite, all-ones in its
/// kernel); `signless` is `diag(transmissions) + D`.
#[derive(Clone, Debug)]
pub struct DistanceBundle {
    pub distance: SymMatrix<i64>,
    pub transmissions: Vec<i64>,
    pub laplacian: SymMatrix<i64>,
    pub signless: SymMatrix<i64>,
}

/// Builds the distance bundle in exact integer arithmetic.
pub fn distance_bundle(d: &DistanceMatrix) -> DistanceBundle {
    let n = d.order();
    let t = d.transmissions();
    let mut dist = SymMatrix::zeros(n);
    let mut lap = SymMatrix::zeros(n);
    let mut sig = SymMatrix::zeros(n);
    for i in 1..=n {
        lap.set(i, i, t[i - 1]);
        sig.set(i, i, t[i - 1]);
        for j in (i + 1)..=n {
            let dij = d.get(i, j) as i64;
            dist.set(i, j, dij);
            lap.set(i, j, -dij);
            sig.set(i, j, dij);
        }
    }
    DistanceBundle { distance: dist, transmissions: t, laplacian: lap, signless: sig }
}

/// Adjacency matrix with its Laplacian `diag(deg) - A` and signless
/// Laplacian `diag(deg) + A`.
#[derive(Clone, Debug)]
pub struct AdjacencyBundle {
    pub adjacency: SymMatrix<i64>,
    pub degrees: Vec<i64>,
    pub laplacian: SymMatrix<i64>,
    pub signless: SymMatrix<i64>,
}

pub fn adjacency_bundle(g: &Graph) -> AdjacencyBundle {
    let n = g.n();
    let mut adj = SymMatrix::zeros(n);
    let mut lap = SymMatrix::zeros(n);
    let mut sig = SymMatrix::zeros(n);
    let degrees: Vec<i64> = (1..=n).map(|v| g.degree(v) as i64).collect();
    for v in 1..=n {
        lap.set(v, v, degrees[v - 1]);
        sig.set(v, v, degrees[v - 1]);
    }
    for (u, v) in g.edges() {
        adj.set(u, v, 1);
        lap.set(u, v, -1);
        sig.set(u, v, 1);
    }
    AdjacencyBundle { adjacency: adj, degrees, laplacian: lap, signless: sig }
}

/// The six matrix families the sweep drivers understand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Distance,
    DistanceLaplacian,
    DistanceSignless,
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn needs_distances(self) -> bool {
        matches!(
            self,
            MatrixKind::Distance | MatrixKind::DistanceLaplacian | MatrixKind::DistanceSignless
        )
    }

    pub fn token(self) -> &'static str {
        match self {
            MatrixKind::Distance => "d",
            MatrixKind::DistanceLaplacian => "dl",
            MatrixKind::DistanceSignless => "dq",
            MatrixKind::Adjacency => "adj",
            MatrixKind::Laplacian => "lap",
            MatrixKind::SignlessLaplacian => "q",
        }
    }

    pub fn from_token(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "d" => Ok(MatrixKind::Distance),
            "dl" => Ok(MatrixKind::DistanceLaplacian),
            "dq" => Ok(MatrixKind::DistanceSignless),
            "adj" => Ok(MatrixKind::Adjacency),
            "lap" => Ok(MatrixKind::Laplacian),
            "q" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::Config(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// Materializes the chosen matrix of `g` as floats. Distance kinds require
/// connectivity.
pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> Result<SymMatrix<f64>, Error> {
    if kind.needs_distances() {
        let b = distance_bundle(&g.distances()?);
        Ok(match kind {
            MatrixKind::Distance => b.distance.to_f64(),
            MatrixKind::DistanceLaplacian => b.laplacian.to_f64(),
            MatrixKind::DistanceSignless => b.signless.to_f64(),
            _ => unreachable!(),
        })
    } else {
        let b = adjacency_bundle(g);
        Ok(match kind {
            MatrixKind::Adjacency => b.adjacency.to_f64(),
            MatrixKind::Laplacian => b.laplacian.to_f64(),
            MatrixKind::SignlessLaplacian => b.signless.to_f64(),
            _ => unreachable!(),
        })
    }
}

/// Converged eigenpair. `residual` is `||M x - lambda x||_2` with `x` unit.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub lambda: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = dot(x, x).sqrt();
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
    norm
}

/// One power-iteration run on `M + sigma I` from a fixed start vector.
/// Returns `None` when the run cannot reach `tol` within the cap (including
/// a geometric projection that rules the cap out early).
fn power_run(
    m: &SymMatrix<f64>,
    sigma: f64,
    tol: f64,
    start: &[f64],
) -> Option<(f64, Vec<f64>, f64, usize)> {
    let n = m.order();
    let mut x = start.to_vec();
    let mut y = vec![0.0; n];
    let mut checkpoint_res = f64::INFINITY;
    const WINDOW: usize = 2048;
    for it in 1..=POWER_ITERATION_CAP {
        m.matvec(&x, &mut y);
        for i in 0..n {
            y[i] += sigma * x[i];
        }
        let lambda_shifted = dot(&x, &y);
        let mut res2 = 0.0;
        for i in 0..n {
            let r = y[i] - lambda_shifted * x[i];
            res2 += r * r;
        }
        let res = res2.sqrt();
        if res <= tol {
            return Some((lambda_shifted - sigma, x, res, it));
        }
        if normalize(&mut y) == 0.0 {
            return None; // start lay exactly in the kernel of M + sigma I
        }
        std::mem::swap(&mut x, &mut y);
        if it % WINDOW == 0 {
            // Residual decay is geometric; if the trend cannot reach tol by
            // the cap, give up now instead of burning the rest of the cap.
            if it >= 2 * WINDOW {
                let rate = res / checkpoint_res;
                if rate >= 1.0 {
                    return None;
                }
                let steps_left = ((POWER_ITERATION_CAP - it) / WINDOW) as f64;
                if res * rate.powf(steps_left) > tol {
                    return None;
                }
            }
            checkpoint_res = res;
        }
    }
    None
}

/// Largest eigenvalue and eigenvector of a symmetric matrix by power
/// iteration on `M + sigma I`, where `sigma` is the largest absolute row
/// sum. The shift makes the target the dominant eigenvalue in modulus.
///
/// The start vector is the normalized all-ones vector. A converged value is
/// validated against two Rayleigh lower bounds (largest diagonal entry and
/// the all-ones quotient); the run misses them when the start is orthogonal
/// to the top eigenspace (the all-ones vector lies in the kernel of every
/// Laplacian). In that case two restarts run, from deterministic jittered
/// vectors with linear and quadratic phases — no single fixed start is safe,
/// since a matrix symmetry can hide the top eigenvector from it exactly (a
/// label-reversal symmetry does so for the linear phase at some orders).
/// Their results are accepted only when both clear the lower bounds and
/// agree; anything less reports non-convergence so the caller can fall back
/// to the full spectrum.
pub fn largest_eigenpair(m: &SymMatrix<f64>, tol: f64) -> Result<EigenPair, Error> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.order();
    if n == 1 {
        return Ok(EigenPair { lambda: m.get(1, 1), vector: vec![1.0], residual: 0.0, iterations: 0 });
    }
    let sigma = m.max_abs_row_sum();
    if sigma == 0.0 {
        return Ok(EigenPair { lambda: 0.0, vector: flat_start(n), residual: 0.0, iterations: 0 });
    }

    let diag_max = (1..=n).map(|i| m.get(i, i)).fold(f64::NEG_INFINITY, f64::max);
    let ones: Vec<f64> = vec![1.0; n];
    let mut my = vec![0.0; n];
    m.matvec(&ones, &mut my);
    let ones_quotient = dot(&ones, &my) / n as f64;
    let lower_bound = diag_max.max(ones_quotient);
    let slack = tol.max(1e-9 * lower_bound.abs().max(1.0));

    let first = power_run(m, sigma, tol, &flat_start(n));
    let mut spent = first.as_ref().map_or(0, |r| r.3);
    if let Some((lambda, x, res, it)) = first {
        if lambda >= lower_bound - slack {
            return Ok(EigenPair { lambda, vector: x, residual: res, iterations: it });
        }
    }
    // The flat start stalled or locked onto a sub-dominant direction (it
    // lies in the kernel of every Laplacian-shaped matrix, where it passes
    // as instantly converged). Retry from the two jittered starts. A lone
    // run that clears the lower bounds can still sit on a sub-dominant
    // eigenvalue when the matrix has a symmetry that hides the top
    // eigenvector from that start, so a value is trusted only when both
    // runs clear the bounds and land on the same number; otherwise report
    // non-convergence and let the caller fall back to the full spectrum.
    let mut retry = |start: &[f64]| -> Option<(f64, Vec<f64>, f64)> {
        let run = power_run(m, sigma, tol, start);
        spent += run.as_ref().map_or(0, |r| r.3);
        match run {
            Some((lambda, x, res, _)) if lambda >= lower_bound - slack => Some((lambda, x, res)),
            _ => None,
        }
    };
    let a = retry(&linear_jitter_start(n));
    let b = retry(&quadratic_jitter_start(n));
    if let (Some((la, xa, ra)), Some((lb, xb, rb))) = (a, b) {
        let agree_slack = 1e-8 * la.abs().max(lb.abs()).max(1.0);
        if (la - lb).abs() <= agree_slack {
            let (lambda, vector, residual) = if la >= lb { (la, xa, ra) } else { (lb, xb, rb) };
            return Ok(EigenPair { lambda, vector, residual, iterations: spent });
        }
    }
    Err(Error::NonConvergence)
}

fn flat_start(n: usize) -> Vec<f64> {
    vec![1.0 / (n as f64).sqrt(); n]
}

/// Deterministic start: all-ones plus a golden-ratio offset advancing
/// linearly per coordinate, normalized.
fn linear_jitter_start(n: usize) -> Vec<f64> {
    const PHI: f64 = 0.618_033_988_749_894_9;
    let mut x: Vec<f64> = (0..n).map(|k| 1.0 + 0.5 * (((k + 1) as f64 * PHI) % 1.0)).collect();
    normalize(&mut x);
    x
}

/// Second deterministic start whose offset phase advances quadratically, so
/// reversing the coordinate order never cancels it the way it can cancel a
/// linear phase. (Reversal maps the linear phase to a constant minus itself
/// at orders where the integer parts pair up; the jitter then has no overlap
/// with any reversal-symmetric eigenvector. No affine relation does that to
/// a quadratic phase.)
fn quadratic_jitter_start(n: usize) -> Vec<f64> {
    const ROOT2M1: f64 = 0.414_213_562_373_095_1;
    let mut x: Vec<f64> = (0..n)
        .map(|k| {
            let t = ((k + 1) * (k + 2)) as f64;
            1.0 + 0.5 * ((t * ROOT2M1) % 1.0)
        })
        .collect();
    normalize(&mut x);
    x
}

/// Power iteration with automatic Jacobi fallback: never fails on real
/// symmetric input, at worst it pays the full-spectrum price.
pub fn largest_eigenpair_with_fallback(m: &SymMatrix<f64>, tol: f64) -> Result<EigenPair, Error> {
    match largest_eigenpair(m, tol) {
        Ok(p) => Ok(p),
        Err(Error::NonConvergence) => {
            let (values, vectors) = full_spectrum_with_vectors(m)?;
            let lambda = *values.last().expect("order >= 1");
            let x = vectors.last().expect("order >= 1").clone();
            let n = m.order();
            let mut y = vec![0.0; n];
            m.matvec(&x, &mut y);
            let mut res2 = 0.0;
            for i in 0..n {
                let r = y[i] - lambda * x[i];
                res2 += r * r;
            }
            Ok(EigenPair { lambda, vector: x, residual: res2.sqrt(), iterations: 0 })
        }
        Err(e) => Err(e),
    }
}

/// Full spectrum by cyclic Jacobi rotations, eigenvalues ascending.
pub fn full_spectrum(m: &SymMatrix<f64>) -> Result<Vec<f64>, Error> {
    Ok(full_spectrum_with_vectors(m)?.0)
}

/// Full spectrum with unit eigenvectors (`vectors[k]` pairs with
/// `values[k]`), by cyclic Jacobi rotations. Rotations continue until every
/// off-diagonal magnitude is at most `1e-12 * ||m||_F`.
pub fn full_spectrum_with_vectors(m: &SymMatrix<f64>) -> Result<(Vec<f64>, Vec<Vec<f64>>), Error> {
    let n = m.order();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m.get(i + 1, j + 1);
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let thresh = JACOBI_OFF_REL * fro;

    let max_off = |a: &[f64]| -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                best = best.max(a[i * n + j].abs());
            }
        }
        best
    };

    let mut converged = n <= 1 || max_off(&a) <= thresh;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= thresh {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                // theta is bounded by ~1e12 here, so no overflow below.
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let g = a[r * n + p];
                    let h = a[r * n + q];
                    a[r * n + p] = g - s * (h + tau * g);
                    a[p * n + r] = a[r * n + p];
                    a[r * n + q] = h + s * (g - tau * h);
                    a[q * n + r] = a[r * n + q];
                }
                for r in 0..n {
                    let g = v[r * n + p];
                    let h = v[r * n + q];
                    v[r * n + p] = c * g - s * h;
                    v[r * n + q] = s * g + c * h;
                }
            }
        }
        converged = max_off(&a) <= thresh;
    }
    if !converged {
        return Err(Error::NonConvergence);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i].partial_cmp(&a[j * n + j]).expect("finite eigenvalues")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<f64>> =
        order.iter().map(|&k| (0..n).map(|r| v[r * n + k]).collect()).collect();
    Ok((values, vectors))
}
