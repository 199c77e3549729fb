//! The weighted Wiener value: `sum over i<j of d(i,j) * a(i,j)`.
//!
//! Diagonal weight entries never contribute (distance zero), so every
//! routine here ignores them. With integer weights the value is exact; the
//! float instantiation exists for weights built from eigenvector
//! coordinates.

use crate::error::Error;
use crate::graph::DistanceMatrix;
use crate::matrix::{SymMatrix, Weight};

/// Weighted Wiener value of a distance matrix under weights `a`.
pub fn weighted_wiener<T: Weight>(d: &DistanceMatrix, a: &SymMatrix<T>) -> Result<T, Error> {
    if d.order() != a.order() {
        return Err(Error::OrderMismatch(a.order(), d.order()));
    }
    let mut total = T::ZERO;
    for (i, j, w) in a.pairs() {
        total += T::from_distance(d.get(i, j)) * w;
    }
    Ok(total)
}

/// Weighted Wiener value of the path visiting `seq` in order, computed from
/// position differences without materializing a graph.
pub fn sequence_weighted_wiener<T: Weight>(
    seq: &[usize],
    a: &SymMatrix<T>,
) -> Result<T, Error> {
    if seq.len() != a.order() {
        return Err(Error::OrderMismatch(a.order(), seq.len()));
    }
    let d = DistanceMatrix::of_path_sequence(seq)?;
    weighted_wiener(&d, a)
}

/// Classical Wiener index: all-ones weights.
pub fn wiener_index(d: &DistanceMatrix) -> i64 {
    let n = d.order();
    let mut total = 0i64;
    for i in 1..=n {
        for j in (i + 1)..=n {
            total += d.get(i, j) as i64;
        }
    }
    total
}

/// Off-diagonal structure of a weight matrix. `positive_offdiag` implies
/// `at_most_one_zero_per_row`; both are meaningful only together with
/// `nonnegative`, which the strict-inequality results require.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightClass {
    pub nonnegative: bool,
    pub at_most_one_zero_per_row: bool,
    pub positive_offdiag: bool,
}

impl WeightClass {
    /// Weights under which a non-path input forces a strictly better path:
    /// nonnegative with at most one zero off-diagonal entry per row.
    pub fn forces_strict(&self) -> bool {
        self.nonnegative && self.at_most_one_zero_per_row
    }
}

/// Classifies the off-diagonal entries of `a`. For floats, an entry counts
/// as zero when its magnitude is at most `1e-15` times the largest absolute
/// entry of the matrix.
pub fn classify_weights<T: Weight>(a: &SymMatrix<T>) -> WeightClass {
    let n = a.order();
    let scale = a.max_abs();
    let mut nonnegative = true;
    let mut zero_rows = vec![0usize; n + 1];
    let mut zeros = 0usize;
    for (i, j, v) in a.pairs() {
        if v < T::ZERO && !v.is_weight_zero(scale) {
            nonnegative = false;
        }
        if v.is_weight_zero(scale) {
            zeros += 1;
            zero_rows[i] += 1;
            zero_rows[j] += 1;
        }
    }
    let at_most_one = zero_rows[1..].iter().all(|&c| c <= 1);
    let class = WeightClass {
        nonnegative,
        at_most_one_zero_per_row: at_most_one,
        positive_offdiag: nonnegative && zeros == 0,
    };
    debug_assert!(!class.positive_offdiag || class.at_most_one_zero_per_row);
    class
}

/// Rank-one weight recipes tied to the distance eigenvalue identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankOneKind {
    /// `a(i,j) = x_i * x_j`: twice the weighted value is the quadratic form
    /// of the distance matrix.
    Product,
    /// `a(i,j) = (x_i + x_j)^2`: the weighted value is the quadratic form of
    /// the signless distance Laplacian.
    SquareSum,
    /// `a(i,j) = (x_i - x_j)^2`: the weighted value is the quadratic form of
    /// the distance Laplacian.
    SquareDiff,
}

/// Builds the rank-one-derived weight matrix from vertex coordinates
/// (`x[k]` belongs to vertex `k+1`). Diagonal entries are zero.
pub fn rank_one_weights(x: &[f64], kind: RankOneKind) -> SymMatrix<f64> {
    let n = x.len();
    let mut a = SymMatrix::zeros(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (xi, xj) = (x[i - 1], x[j - 1]);
            let v = match kind {
                RankOneKind::Product => xi * xj,
                RankOneKind::SquareSum => (xi + xj) * (xi + xj),
                RankOneKind::SquareDiff => (xi - xj) * (xi - xj),
            };
            a.set(i, j, v);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn classical_wiener_values() {
        let p4 = Graph::path(4).unwrap().distances().unwrap();
        assert_eq!(wiener_index(&p4), 10);
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(wiener_index(&star.distances().unwrap()), 9);

        // Path formula (n^3 - n)/6 against direct pair summation.
        for n in 2..=12 {
            let d = Graph::path(n).unwrap().distances().unwrap();
            let expected = (n as i64).pow(3).checked_sub(n as i64).unwrap() / 6;
            assert_eq!(wiener_index(&d), expected, "n={n}");
            assert_eq!(weighted_wiener(&d, &SymMatrix::<i64>::ones(n)).unwrap(), expected);
        }
    }

    #[test]
    fn single_pair_weight_reads_off_distance() {
        let g = Graph::path(5).unwrap();
        let d = g.distances().unwrap();
        let mut a = SymMatrix::<i64>::zeros(5);
        a.set(1, 5, 1);
        assert_eq!(weighted_wiener(&d, &a).unwrap(), 4);
    }

    #[test]
    fn order_mismatch_rejected() {
        let d = Graph::path(3).unwrap().distances().unwrap();
        let a = SymMatrix::<i64>::ones(4);
        assert_eq!(weighted_wiener(&d, &a), Err(Error::OrderMismatch(4, 3)));
    }

    #[test]
    fn sequence_evaluation_matches_graph_evaluation() {
        let mut a = SymMatrix::<i64>::zeros(4);
        a.set(1, 2, 3);
        a.set(3, 4, 2);
        a.set(1, 4, 7);
        let seq = [2, 4, 1, 3];
        let by_seq = sequence_weighted_wiener(&seq, &a).unwrap();
        let g = Graph::from_path_sequence(&seq).unwrap();
        let by_graph = weighted_wiener(&g.distances().unwrap(), &a).unwrap();
        assert_eq!(by_seq, by_graph);
    }

    #[test]
    fn relabeling_leaves_value_unchanged() {
        // Permute vertices of a graph and weights consistently: exact match.
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        let mut a = SymMatrix::<i64>::zeros(5);
        let mut v = 1i64;
        for i in 1..=5 {
            for j in (i + 1)..=5 {
                a.set(i, j, v);
                v += 3;
            }
        }
        let perm = [3usize, 5, 1, 2, 4]; // image of each label
        let mut g2 = Graph::empty(5).unwrap();
        for (u, w) in g.edges() {
            g2.add_edge(perm[u - 1], perm[w - 1]).unwrap();
        }
        let mut a2 = SymMatrix::<i64>::zeros(5);
        for (i, j, val) in a.pairs() {
            a2.set(perm[i - 1], perm[j - 1], val);
        }
        let f1 = weighted_wiener(&g.distances().unwrap(), &a).unwrap();
        let f2 = weighted_wiener(&g2.distances().unwrap(), &a2).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn diagonal_is_ignored() {
        let d = Graph::path(3).unwrap().distances().unwrap();
        let mut a = SymMatrix::<i64>::ones(3);
        let f0 = weighted_wiener(&d, &a).unwrap();
        a.set(1, 1, 999);
        a.set(2, 2, -5);
        assert_eq!(weighted_wiener(&d, &a).unwrap(), f0);
    }

    #[test]
    fn classification_basics() {
        let pos = SymMatrix::<i64>::ones(4);
        let c = classify_weights(&pos);
        assert!(c.nonnegative && c.positive_offdiag && c.at_most_one_zero_per_row);
        assert!(c.forces_strict());

        // One zero per row at most: zero the (1,2) pair only.
        let mut one_zero = SymMatrix::<i64>::ones(4);
        one_zero.set(1, 2, 0);
        let c = classify_weights(&one_zero);
        assert!(c.nonnegative && !c.positive_offdiag && c.at_most_one_zero_per_row);
        assert!(c.forces_strict());

        // Row 2 entirely zero off-diagonal: too many zeros in one row.
        let mut zero_row = SymMatrix::<i64>::ones(4);
        for j in [1, 3, 4] {
            zero_row.set(2, j, 0);
        }
        let c = classify_weights(&zero_row);
        assert!(c.nonnegative && !c.at_most_one_zero_per_row && !c.forces_strict());

        let mut neg = SymMatrix::<i64>::ones(3);
        neg.set(1, 3, -2);
        assert!(!classify_weights(&neg).nonnegative);
    }

    #[test]
    fn classification_of_rank_one_weights() {
        // Squared differences with two equal coordinates: a zero appears.
        let x = [1.0, 1.0, 2.0];
        let a = rank_one_weights(&x, RankOneKind::SquareDiff);
        let c = classify_weights(&a);
        assert!(c.nonnegative);
        assert!(!c.positive_offdiag);
        assert!(c.at_most_one_zero_per_row);

        // Products with a sign change go negative.
        let a = rank_one_weights(&[1.0, -1.0, 2.0], RankOneKind::Product);
        assert!(!classify_weights(&a).nonnegative);

        // Square sums of a positive vector are positive off-diagonal.
        let a = rank_one_weights(&[0.3, 0.7, 1.1], RankOneKind::SquareSum);
        assert!(classify_weights(&a).positive_offdiag);
        assert_eq!(a.get(1, 1), 0.0);
        assert!((a.get(1, 2) - 1.0).abs() < 1e-15);
    }
}
