//! Dense symmetric matrices indexed by vertex labels `1..=n`.
//!
//! Weight matrices come in two flavors: exact `i64` for combinatorial
//! verification (all comparisons exact, no tolerance anywhere) and `f64` for
//! matrices built from eigenvector coordinates. The [`Weight`] trait carries
//! the handful of policy decisions that differ between the two, most
//! importantly what counts as a zero entry and how replayed certificate
//! values are compared.

use crate::error::Error;
use crate::graph::DistanceMatrix;
use crate::{MAX_VERTICES, MAX_WEIGHT};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

/// Scalar for weight matrices: implemented by `i64` and `f64`.
pub trait Weight:
    Copy
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + 'static
{
    const ZERO: Self;
    const ONE: Self;

    fn from_distance(d: u32) -> Self;

    fn abs_weight(self) -> Self;

    /// Zero test used by weight classification. Exact for integers; for
    /// floats an entry is zero when `|entry| <= 1e-15 * scale`, where
    /// `scale` is the largest absolute entry of the matrix.
    fn is_weight_zero(self, scale: Self) -> bool;

    /// Equality used when replaying certificate traces. Exact for integers;
    /// floats allow absolute slack 1e-12 for accumulated rounding.
    fn replay_eq(self, other: Self) -> bool;

    fn to_f64_weight(self) -> f64;
}

impl Weight for i64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;

    fn from_distance(d: u32) -> Self {
        d as i64
    }

    fn abs_weight(self) -> Self {
        self.abs()
    }

    fn is_weight_zero(self, _scale: Self) -> bool {
        self == 0
    }

    fn replay_eq(self, other: Self) -> bool {
        self == other
    }

    fn to_f64_weight(self) -> f64 {
        self as f64
    }
}

impl Weight for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;

    fn from_distance(d: u32) -> Self {
        d as f64
    }

    fn abs_weight(self) -> Self {
        self.abs()
    }

    fn is_weight_zero(self, scale: Self) -> bool {
        self.abs() <= 1e-15 * scale
    }

    fn replay_eq(self, other: Self) -> bool {
        (self - other).abs() <= 1e-12
    }

    fn to_f64_weight(self) -> f64 {
        self
    }
}

/// Dense symmetric matrix; `set` writes both mirror entries, so symmetry
/// holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Weight> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_VERTICES, "order out of range");
        SymMatrix { n, data: vec![T::ZERO; n * n] }
    }

    /// All off-diagonal entries set to `value`, diagonal zero.
    pub fn filled(n: usize, value: T) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                m.set(i, j, value);
            }
        }
        m
    }

    /// All-ones off-diagonal weights.
    pub fn ones(n: usize) -> Self {
        Self::filled(n, T::ONE)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "index out of range");
        self.data[(i - 1) * self.n + (j - 1)]
    }

    /// Sets `(i,j)` and `(j,i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "index out of range");
        self.data[(i - 1) * self.n + (j - 1)] = value;
        self.data[(j - 1) * self.n + (i - 1)] = value;
    }

    /// Builds from full rows, validating squareness and symmetry.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::WeightsFormat(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if !(rows[i][j] == rows[j][i]) {
                    return Err(Error::Asymmetric(i + 1, j + 1));
                }
            }
        }
        let data = rows.into_iter().flatten().collect();
        Ok(SymMatrix { n, data })
    }

    /// Off-diagonal pairs `(i, j, value)` with `i < j`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        (1..=self.n)
            .flat_map(move |i| ((i + 1)..=self.n).map(move |j| (i, j, self.get(i, j))))
    }

    /// Largest absolute entry (diagonal included).
    pub fn max_abs(&self) -> T {
        let mut best = T::ZERO;
        for &v in &self.data {
            let a = v.abs_weight();
            if a > best {
                best = a;
            }
        }
        best
    }

    /// Errors on any negative off-diagonal entry. The diagonal never enters
    /// a weighted distance sum, so it is not inspected.
    pub fn require_nonnegative(&self) -> Result<(), Error> {
        for (i, j, v) in self.pairs() {
            if v < T::ZERO {
                return Err(Error::NegativeWeight(i, j));
            }
        }
        Ok(())
    }

    pub fn to_f64(&self) -> SymMatrix<f64> {
        SymMatrix { n: self.n, data: self.data.iter().map(|v| v.to_f64_weight()).collect() }
    }

    /// CSV text: one row per line, comma-separated, full square matrix.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

impl SymMatrix<f64> {
    /// `y = M x` with vertex-aligned slices (`x[k]` belongs to vertex `k+1`).
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            let mut acc = 0.0;
            for (a, b) in row.iter().zip(x) {
                acc += a * b;
            }
            y[i] = acc;
        }
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest absolute row sum (a bound on every eigenvalue's magnitude).
    pub fn max_abs_row_sum(&self) -> f64 {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().map(|v| v.abs()).sum())
            .fold(0.0, f64::max)
    }
}

/// Weight matrix parsed from CSV: exact when every token reads as an
/// integer, floating otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedWeights {
    Int(SymMatrix<i64>),
    Float(SymMatrix<f64>),
}

impl ParsedWeights {
    pub fn order(&self) -> usize {
        match self {
            ParsedWeights::Int(m) => m.order(),
            ParsedWeights::Float(m) => m.order(),
        }
    }

    pub fn to_csv(&self) -> String {
        match self {
            ParsedWeights::Int(m) => m.to_csv(),
            ParsedWeights::Float(m) => m.to_csv(),
        }
    }
}

/// Parses a square CSV weight matrix. Symmetry is validated; asymmetric
/// input is a hard error, as are magnitudes above [`MAX_WEIGHT`].
pub fn weights_from_csv(text: &str) -> Result<ParsedWeights, Error> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.is_empty() {
        return Err(Error::WeightsFormat("empty input".into()));
    }
    let tokens: Vec<Vec<&str>> =
        lines.iter().map(|l| l.split(',').map(str::trim).collect()).collect();
    let all_int = tokens.iter().flatten().all(|t| t.parse::<i64>().is_ok());
    if all_int {
        let mut rows = Vec::with_capacity(tokens.len());
        for line in &tokens {
            let row: Vec<i64> = line.iter().map(|t| t.parse().unwrap()).collect();
            rows.push(row);
        }
        let m = SymMatrix::from_rows(rows)?;
        for (i, j, v) in m.pairs() {
            if v.abs() > MAX_WEIGHT {
                return Err(Error::WeightTooLarge(i, j));
            }
        }
        Ok(ParsedWeights::Int(m))
    } else {
        let mut rows = Vec::with_capacity(tokens.len());
        for (li, line) in tokens.iter().enumerate() {
            let mut row = Vec::with_capacity(line.len());
            for t in line {
                let v: f64 = t.parse().map_err(|_| {
                    Error::WeightsFormat(format!("bad number {t:?} in row {}", li + 1))
                })?;
                if !v.is_finite() {
                    return Err(Error::WeightsFormat(format!(
                        "non-finite value in row {}",
                        li + 1
                    )));
                }
                row.push(v);
            }
            rows.push(row);
        }
        let m = SymMatrix::from_rows(rows)?;
        for (i, j, v) in m.pairs() {
            if v.abs() > MAX_WEIGHT as f64 {
                return Err(Error::WeightTooLarge(i, j));
            }
        }
        Ok(ParsedWeights::Float(m))
    }
}

/// Exact per-pair product sum `sum_{i<j} d(i,j) * a(i,j)` lives in
/// [`crate::wiener`]; this helper only converts a distance matrix into a
/// float symmetric matrix for the eigensolvers.
pub fn distance_to_f64(d: &DistanceMatrix) -> SymMatrix<f64> {
    let n = d.order();
    let mut m = SymMatrix::zeros(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            m.set(i, j, d.get(i, j) as f64);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_keeps_symmetry() {
        let mut m = SymMatrix::<i64>::zeros(3);
        m.set(1, 3, 7);
        assert_eq!(m.get(3, 1), 7);
        assert_eq!(m.get(1, 1), 0);
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(1, 2, 0), (1, 3, 7), (2, 3, 0)]);
    }

    #[test]
    fn ones_has_zero_diagonal() {
        let m = SymMatrix::<i64>::ones(3);
        assert_eq!(m.get(1, 1), 0);
        assert_eq!(m.get(1, 2), 1);
    }

    #[test]
    fn from_rows_validates() {
        assert!(SymMatrix::from_rows(vec![vec![0i64, 1], vec![1, 0]]).is_ok());
        assert_eq!(
            SymMatrix::from_rows(vec![vec![0i64, 1], vec![2, 0]]),
            Err(Error::Asymmetric(2, 1))
        );
        assert!(SymMatrix::from_rows(vec![vec![0i64, 1]]).is_err());
    }

    #[test]
    fn csv_round_trip_int() {
        let text = "0, 5, 2\n5, 0, 1\n2, 1, 0\n";
        match weights_from_csv(text).unwrap() {
            ParsedWeights::Int(m) => {
                assert_eq!(m.get(1, 2), 5);
                assert_eq!(weights_from_csv(&m.to_csv()).unwrap(), ParsedWeights::Int(m));
            }
            ParsedWeights::Float(_) => panic!("expected exact parse"),
        }
    }

    #[test]
    fn csv_float_and_errors() {
        match weights_from_csv("0,0.5\n0.5,0\n").unwrap() {
            ParsedWeights::Float(m) => assert_eq!(m.get(1, 2), 0.5),
            ParsedWeights::Int(_) => panic!("expected float parse"),
        }
        assert_eq!(weights_from_csv("0,1\n2,0\n"), Err(Error::Asymmetric(2, 1)));
        assert!(weights_from_csv("0,x\nx,0\n").is_err());
        assert!(weights_from_csv("").is_err());
        assert!(weights_from_csv("0,1,2\n1,0\n2,0,0\n").is_err());
        assert_eq!(
            weights_from_csv("0,2000000\n2000000,0\n"),
            Err(Error::WeightTooLarge(1, 2))
        );
    }

    #[test]
    fn zero_policy() {
        assert!(0i64.is_weight_zero(100));
        assert!(!1i64.is_weight_zero(100));
        assert!(0.0f64.is_weight_zero(1.0));
        assert!(1e-17f64.is_weight_zero(1.0));
        assert!(!1e-12f64.is_weight_zero(1.0));
        // Relative to scale: the same magnitude can flip.
        assert!(1e-12f64.is_weight_zero(1e4));
    }

    #[test]
    fn float_helpers() {
        let mut m = SymMatrix::<f64>::zeros(2);
        m.set(1, 2, 3.0);
        let mut y = [0.0; 2];
        m.matvec(&[1.0, 2.0], &mut y);
        assert_eq!(y, [6.0, 3.0]);
        assert!((m.frobenius() - (18.0f64).sqrt()).abs() < 1e-15);
        assert_eq!(m.max_abs_row_sum(), 3.0);
    }
}
