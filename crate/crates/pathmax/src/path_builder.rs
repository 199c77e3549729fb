//! Constructive path maximization for weighted distance sums.
//!
//! Given a connected graph `g` and symmetric nonnegative weights `a`,
//! [`maximize_on_path`] produces a labeled path on the same vertex set whose
//! weighted Wiener value is at least that of `g`, together with a replayable
//! [`PathCertificate`] recording every step of the construction:
//!
//! 1. replace `g` by a BFS spanning tree (distances only grow),
//! 2. repeatedly strip the smallest-labeled leaf, folding its weight row
//!    into its neighbor's ([`contract_leaf`]),
//! 3. rebuild: re-insert each stripped leaf, either at its old neighbor if
//!    that is an endpoint of the partial path, or at whichever path end
//!    gives the larger value (first end on ties). When both ends merely tie
//!    the four-vertex tree formed by an interior re-insertion, one of that
//!    tree's other two leaves is re-anchored instead if doing so strictly
//!    improves the value; with at most one zero weight per row, some such
//!    move always does, which is what makes the improvement strict on every
//!    non-path input under such weights.
//!
//! Every quantity is exact in the integer instantiation; the certificate
//! can be re-verified from scratch with [`verify_certificate`].
//!
//! Brute-force oracles over all labeled paths and all connected labeled
//! graphs back the construction on small orders.

use crate::enumeration::{graph_from_edge_mask, pair_count, path_sequences};
use crate::error::Error;
use crate::graph::Graph;
use crate::matrix::{SymMatrix, Weight};
use crate::wiener::{sequence_weighted_wiener, weighted_wiener};
use crate::MAX_WEIGHT;
use serde::{Deserialize, Serialize};

/// Largest order for the all-paths oracle (`n!/2` sequences).
pub const BEST_PATH_MAX_N: usize = 9;
/// Largest order for the all-connected-graphs oracle.
pub const BEST_CONNECTED_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceOp {
    SpanningTree,
    LeafContract,
    AttachEndpoint,
}

/// One construction step. `vertices` lists the original labels involved:
/// empty for the spanning-tree step, `[leaf, neighbor]` for contractions,
/// `[leaf, attach_point]` for re-insertions. The two values compare the
/// quantity before and after the step in the instance current at that step
/// (after a contraction, the folded weight matrix one order lower).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep<T> {
    pub op: TraceOp,
    pub vertices: Vec<usize>,
    pub f_before: T,
    pub f_after: T,
}

/// Proof object returned by [`maximize_on_path`]: the path found, the two
/// values compared, and the full construction trace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathCertificate<T> {
    pub path: Vec<usize>,
    pub f_input: T,
    pub f_path: T,
    pub strict: bool,
    pub trace: Vec<TraceStep<T>>,
}

/// Removes `leaf` from a weight matrix, folding its row into `neighbor`:
/// for every other index `j`, the new neighbor weight is
/// `a[neighbor][j] + a[leaf][j]`. Returns the order-`n-1` matrix and the
/// relabeling table `old_of_new[new_index - 1] = old_index`.
pub fn contract_leaf<T: Weight>(
    a: &SymMatrix<T>,
    leaf: usize,
    neighbor: usize,
) -> Result<(SymMatrix<T>, Vec<usize>), Error> {
    let n = a.order();
    if leaf == 0 || leaf > n {
        return Err(Error::VertexOutOfRange(leaf, n));
    }
    if neighbor == 0 || neighbor > n {
        return Err(Error::VertexOutOfRange(neighbor, n));
    }
    if leaf == neighbor {
        return Err(Error::Config("leaf and neighbor must differ".into()));
    }
    if n < 2 {
        return Err(Error::OrderOutOfRange(0));
    }
    let old_of_new: Vec<usize> = (1..=n).filter(|&v| v != leaf).collect();
    let mut out = SymMatrix::zeros(n - 1);
    for (ni, &oi) in old_of_new.iter().enumerate() {
        for (nj, &oj) in old_of_new.iter().enumerate().skip(ni + 1) {
            let mut v = a.get(oi, oj);
            if oi == neighbor {
                v += a.get(leaf, oj);
            } else if oj == neighbor {
                v += a.get(leaf, oi);
            }
            out.set(ni + 1, nj + 1, v);
        }
    }
    Ok((out, old_of_new))
}

/// One peeled level of the construction, kept for the rebuild phase.
struct Level<T> {
    /// Original labels of this level's vertices, ascending.
    labels: Vec<usize>,
    /// Weight matrix of this level, indexed like `labels`.
    a: SymMatrix<T>,
    /// Index (into this level) of the stripped leaf and its neighbor.
    leaf_idx: usize,
    neighbor_idx: usize,
    /// Value of this level's tree under this level's weights.
    f_tree: T,
}

/// Turns a connected graph into a labeled path on the same vertices with an
/// equal or larger weighted Wiener value. Weights must be symmetric with
/// nonnegative off-diagonal entries and magnitudes at most
/// [`MAX_WEIGHT`](crate::MAX_WEIGHT).
pub fn maximize_on_path<T: Weight>(
    g: &Graph,
    a: &SymMatrix<T>,
) -> Result<PathCertificate<T>, Error> {
    let n = g.n();
    if a.order() != n {
        return Err(Error::OrderMismatch(a.order(), n));
    }
    a.require_nonnegative()?;
    if a.max_abs() > T::from_distance(MAX_WEIGHT as u32) {
        for (i, j, v) in a.pairs() {
            if v.abs_weight() > T::from_distance(MAX_WEIGHT as u32) {
                return Err(Error::WeightTooLarge(i, j));
            }
        }
    }

    let f_input = weighted_wiener(&g.distances()?, a)?;
    let tree = g.spanning_tree()?;
    let f_tree = weighted_wiener(&tree.distances()?, a)?;
    let mut trace = vec![TraceStep {
        op: TraceOp::SpanningTree,
        vertices: vec![],
        f_before: f_input,
        f_after: f_tree,
    }];

    // Peel phase: strip the leaf with the smallest original label until two
    // vertices remain. Labels stay ascending, so the smallest-labeled leaf
    // is the lowest leaf index.
    let mut levels: Vec<Level<T>> = Vec::new();
    let mut cur_tree = tree;
    let mut cur_a = a.clone();
    let mut cur_labels: Vec<usize> = (1..=n).collect();
    let mut cur_f = f_tree;
    while cur_tree.n() > 2 {
        let m = cur_tree.n();
        let leaf_idx = (1..=m).find(|&v| cur_tree.degree(v) == 1).expect("a tree has a leaf");
        let neighbor_idx = cur_tree.neighbors(leaf_idx).next().expect("leaf has a neighbor");
        let (next_a, _old_of_new) = contract_leaf(&cur_a, leaf_idx, neighbor_idx)?;
        let next_tree = cur_tree.delete_vertex(leaf_idx)?;
        let next_f = weighted_wiener(&next_tree.distances()?, &next_a)?;
        trace.push(TraceStep {
            op: TraceOp::LeafContract,
            vertices: vec![cur_labels[leaf_idx - 1], cur_labels[neighbor_idx - 1]],
            f_before: cur_f,
            f_after: next_f,
        });
        levels.push(Level {
            labels: cur_labels.clone(),
            a: cur_a,
            leaf_idx,
            neighbor_idx,
            f_tree: cur_f,
        });
        cur_labels.remove(leaf_idx - 1);
        cur_a = next_a;
        cur_tree = next_tree;
        cur_f = next_f;
    }

    // Base path on the surviving one or two vertices, as level indices.
    let mut path_idx: Vec<usize> = (1..=cur_tree.n()).collect();

    // Rebuild phase: walk the levels back up, re-inserting each leaf.
    for lvl in levels.iter().rev() {
        let m = lvl.labels.len();
        // Map the smaller instance's indices to this level's indices: the
        // contraction removed `leaf_idx`, shifting higher indices down.
        for v in path_idx.iter_mut() {
            if *v >= lvl.leaf_idx {
                *v += 1;
            }
        }
        let u = lvl.leaf_idx;
        let k = lvl.neighbor_idx;
        let first = *path_idx.first().expect("non-empty path");
        let last = *path_idx.last().expect("non-empty path");

        // Positions along the partial path, for distances by index.
        let mut pos = vec![0usize; m + 1];
        for (p, &v) in path_idx.iter().enumerate() {
            pos[v] = p;
        }
        // Value of the partial path alone under this level's weights.
        let mut f_rest = T::ZERO;
        for (pi, &vi) in path_idx.iter().enumerate() {
            for &vj in path_idx.iter().skip(pi + 1) {
                f_rest += T::from_distance(pos[vi].abs_diff(pos[vj]) as u32) * lvl.a.get(vi, vj);
            }
        }
        // Contribution of u when attached next to a given path vertex.
        let u_terms = |anchor: usize| -> T {
            let mut s = T::ZERO;
            for &vj in &path_idx {
                let d = pos[anchor].abs_diff(pos[vj]) as u32 + 1;
                s += T::from_distance(d) * lvl.a.get(u, vj);
            }
            s
        };

        if k == first || k == last {
            // The old neighbor is an endpoint: reattaching there already
            // yields a path.
            let f_new = f_rest + u_terms(k);
            debug_assert!(f_new >= lvl.f_tree || f_new.replay_eq(lvl.f_tree));
            trace.push(TraceStep {
                op: TraceOp::AttachEndpoint,
                vertices: vec![lvl.labels[u - 1], lvl.labels[k - 1]],
                f_before: f_new,
                f_after: f_new,
            });
            if k == first {
                path_idx.insert(0, u);
            } else {
                path_idx.push(u);
            }
        } else {
            // Interior neighbor: compare hanging u at k (the tree T) with
            // attaching at either path end; the better end wins, the first
            // end on ties.
            let f_t = f_rest + u_terms(k);
            let f_front = f_rest + u_terms(first);
            let f_back = f_rest + u_terms(last);
            // Hanging u back at k dominates this level's original tree:
            // improvements from lower levels only help.
            debug_assert!(
                f_t >= lvl.f_tree || f_t.replay_eq(lvl.f_tree),
                "attach baseline {f_t} fell below the level tree {}",
                lvl.f_tree
            );
            let (f_new, attach_at, at_front) = if f_front >= f_back {
                (f_front, first, true)
            } else {
                (f_back, last, false)
            };
            debug_assert!(f_new >= f_t || f_new.replay_eq(f_t));
            if !(f_new > f_t) && m == 4 {
                // Both ends only tie the four-vertex tree: its center weight
                // to u is zero and the two end weights are equal. Re-anchor
                // one of the partial path's own ends onto the three-vertex
                // path left when it is pulled off the tied tree. If any such
                // move strictly improves, take the best one; with at most
                // one zero per weight row, one of them always improves.
                let (x, y) = (first, last);
                let moves: [(usize, usize, [usize; 4]); 4] = [
                    (x, u, [x, u, k, y]),
                    (x, y, [u, k, y, x]),
                    (y, u, [x, k, u, y]),
                    (y, x, [y, x, k, u]),
                ];
                let mut pick: Option<(T, usize, usize, [usize; 4])> = None;
                for (moved, anchor, cand) in moves {
                    let f = sequence_weighted_wiener(&cand, &lvl.a)?;
                    if f > f_t && pick.as_ref().map_or(true, |p| f > p.0) {
                        pick = Some((f, moved, anchor, cand));
                    }
                }
                if let Some((f, moved, anchor, cand)) = pick {
                    trace.push(TraceStep {
                        op: TraceOp::AttachEndpoint,
                        vertices: vec![lvl.labels[moved - 1], lvl.labels[anchor - 1]],
                        f_before: f_t,
                        f_after: f,
                    });
                    path_idx = cand.to_vec();
                    continue;
                }
            }
            trace.push(TraceStep {
                op: TraceOp::AttachEndpoint,
                vertices: vec![lvl.labels[u - 1], lvl.labels[attach_at - 1]],
                f_before: f_t,
                f_after: f_new,
            });
            if at_front {
                path_idx.insert(0, u);
            } else {
                path_idx.push(u);
            }
        }
    }

    let path: Vec<usize> = if levels.is_empty() {
        // No levels were peeled: the path is the base instance itself.
        cur_labels.clone()
    } else {
        let top = &levels[0];
        path_idx.iter().map(|&v| top.labels[v - 1]).collect()
    };
    let f_path = sequence_weighted_wiener(&path, a)?;
    debug_assert!(
        trace.last().expect("trace non-empty").f_after.replay_eq(f_path),
        "trace tail must equal the certified value"
    );
    Ok(PathCertificate { path, f_input, f_path, strict: f_path > f_input, trace })
}

/// Re-verifies a certificate against its inputs from scratch: structural
/// checks, direct re-evaluation of both values, and a full deterministic
/// re-run of the construction that must reproduce the trace.
pub fn verify_certificate<T: Weight>(
    g: &Graph,
    a: &SymMatrix<T>,
    cert: &PathCertificate<T>,
) -> Result<(), Error> {
    let n = g.n();
    if cert.path.len() != n {
        return Err(Error::Certificate(format!(
            "path length {} does not match order {n}",
            cert.path.len()
        )));
    }
    let mut seen = vec![false; n + 1];
    for &v in &cert.path {
        if v == 0 || v > n || seen[v] {
            return Err(Error::Certificate(format!("path is not a permutation: vertex {v}")));
        }
        seen[v] = true;
    }
    let f_input = weighted_wiener(&g.distances()?, a)?;
    if !f_input.replay_eq(cert.f_input) {
        return Err(Error::Certificate(format!(
            "recorded f_input {} but direct evaluation gives {f_input}",
            cert.f_input
        )));
    }
    let f_path = sequence_weighted_wiener(&cert.path, a)?;
    if !f_path.replay_eq(cert.f_path) {
        return Err(Error::Certificate(format!(
            "recorded f_path {} but direct evaluation gives {f_path}",
            cert.f_path
        )));
    }
    if cert.f_path < cert.f_input && !cert.f_path.replay_eq(cert.f_input) {
        return Err(Error::Certificate(format!(
            "certificate claims no improvement: f_path {} < f_input {}",
            cert.f_path, cert.f_input
        )));
    }
    let rerun = maximize_on_path(g, a)?;
    if rerun.path != cert.path || rerun.strict != cert.strict {
        return Err(Error::Certificate("re-run construction disagrees with certificate".into()));
    }
    if rerun.trace.len() != cert.trace.len() {
        return Err(Error::Certificate(format!(
            "re-run trace has {} steps, certificate {}",
            rerun.trace.len(),
            cert.trace.len()
        )));
    }
    for (i, (ours, theirs)) in rerun.trace.iter().zip(&cert.trace).enumerate() {
        if ours.op != theirs.op
            || ours.vertices != theirs.vertices
            || !ours.f_before.replay_eq(theirs.f_before)
            || !ours.f_after.replay_eq(theirs.f_after)
        {
            return Err(Error::Certificate(format!("trace step {i} does not replay")));
        }
    }
    Ok(())
}

/// Exact maximum of the weighted Wiener value over all labeled paths on
/// `1..=n`, by exhaustive scan (`2 <= n <= 9`). Ties break to the
/// lexicographically smallest canonical sequence. The result is packaged as
/// a trivial certificate: both values equal the maximum.
pub fn brute_force_best_path<T: Weight>(a: &SymMatrix<T>) -> Result<PathCertificate<T>, Error> {
    let n = a.order();
    if !(2..=BEST_PATH_MAX_N).contains(&n) {
        return Err(Error::RangeUnsupported("brute_force_best_path", 2, BEST_PATH_MAX_N, n));
    }
    let mut best: Option<(T, Vec<usize>)> = None;
    for seq in path_sequences(n) {
        let f = sequence_weighted_wiener(&seq, a)?;
        match &best {
            Some((fb, _)) if !(f > *fb) => {}
            _ => best = Some((f, seq)),
        }
    }
    let (value, path) = best.expect("n >= 2 yields at least one sequence");
    Ok(PathCertificate { path, f_input: value, f_path: value, strict: false, trace: vec![] })
}

/// Result of the all-connected-graphs oracle: the exact maximum and every
/// graph attaining it, as graph6 strings in enumeration (edge-mask) order.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectedScan<T> {
    pub value: T,
    pub maximizers: Vec<String>,
}

/// Exact maximum of the weighted Wiener value over all connected labeled
/// graphs on `1..=n` (`2 <= n <= 6`), with the full maximizer list.
pub fn brute_force_best_connected<T: Weight>(a: &SymMatrix<T>) -> Result<ConnectedScan<T>, Error> {
    let n = a.order();
    if !(2..=BEST_CONNECTED_MAX_N).contains(&n) {
        return Err(Error::RangeUnsupported(
            "brute_force_best_connected",
            2,
            BEST_CONNECTED_MAX_N,
            n,
        ));
    }
    let mut best: Option<T> = None;
    let mut maximizers: Vec<String> = Vec::new();
    for mask in 0..1u64 << pair_count(n) {
        let g = graph_from_edge_mask(n, mask)?;
        if !g.is_connected() {
            continue;
        }
        let f = weighted_wiener(&g.distances()?, a)?;
        match best {
            Some(b) if f < b => {}
            Some(b) if f == b => maximizers.push(g.to_graph6()),
            _ => {
                best = Some(f);
                maximizers = vec![g.to_graph6()];
            }
        }
    }
    Ok(ConnectedScan { value: best.expect("K_n is connected"), maximizers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::labeled_trees;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn star_tie_weights() -> SymMatrix<i64> {
        // Row 2 zero off-diagonal, unit weights among {1,3,4}: the star with
        // center 2 ties every best path.
        let mut a = SymMatrix::zeros(4);
        a.set(1, 3, 1);
        a.set(1, 4, 1);
        a.set(3, 4, 1);
        a
    }

    #[test]
    fn contract_folds_leaf_row_into_neighbor() {
        let a = SymMatrix::<i64>::ones(3);
        let (b, map) = contract_leaf(&a, 3, 2).unwrap();
        assert_eq!(b.order(), 2);
        assert_eq!(b.get(1, 2), 2); // a[1][2] + a[1][3]
        assert_eq!(map, vec![1, 2]);

        let mut c = SymMatrix::<i64>::zeros(4);
        c.set(1, 2, 5);
        c.set(1, 3, 7);
        c.set(1, 4, 11);
        c.set(3, 4, 2);
        let (d, map) = contract_leaf(&c, 1, 3).unwrap();
        assert_eq!(map, vec![2, 3, 4]);
        // New labels: 1->2, 2->3, 3->4. Neighbor 3 is new index 2.
        assert_eq!(d.get(1, 2), 0 + 5); // a[2][3] + a[1][2]
        assert_eq!(d.get(2, 3), 2 + 11); // a[3][4] + a[1][4]
        assert_eq!(d.get(1, 3), 0); // a[2][4] untouched

        assert!(contract_leaf(&a, 2, 2).is_err());
        assert!(contract_leaf(&a, 9, 1).is_err());
    }

    #[test]
    fn contraction_identity_on_trees() {
        // For a tree t with leaf u adjacent to k:
        // value(t, a) = sum_j a[u][j] + value(t - u, contracted a).
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 3..=8 {
            for _ in 0..20 {
                let t = crate::enumeration::random_labeled_tree(n, &mut rng).unwrap();
                let mut a = SymMatrix::<i64>::zeros(n);
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        a.set(i, j, rng.gen_range(0..50));
                    }
                }
                let u = (1..=n).find(|&v| t.degree(v) == 1).unwrap();
                let k = t.neighbors(u).next().unwrap();
                let whole = weighted_wiener(&t.distances().unwrap(), &a).unwrap();
                let (a2, _) = contract_leaf(&a, u, k).unwrap();
                let t2 = t.delete_vertex(u).unwrap();
                let rest = weighted_wiener(&t2.distances().unwrap(), &a2).unwrap();
                let row: i64 = (1..=n).filter(|&j| j != u).map(|j| a.get(u, j)).sum();
                assert_eq!(whole, row + rest, "n={n} tree={t:?} u={u}");
            }
        }
    }

    #[test]
    fn path_inputs_come_back_unchanged() {
        for seq in [vec![1, 2, 3, 4], vec![2, 1, 3], vec![3, 1, 4, 2, 5], vec![1, 2]] {
            let g = Graph::from_path_sequence(&seq).unwrap();
            let a = SymMatrix::<i64>::ones(seq.len());
            let cert = maximize_on_path(&g, &a).unwrap();
            // Same path, possibly traversed from the other endpoint.
            let mut rev = cert.path.clone();
            rev.reverse();
            assert!(cert.path == seq || rev == seq, "got {:?} for {:?}", cert.path, seq);
            assert_eq!(cert.f_input, cert.f_path);
            assert!(!cert.strict);
        }
    }

    #[test]
    fn star_with_unit_weights_improves_to_ten() {
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let a = SymMatrix::<i64>::ones(4);
        let cert = maximize_on_path(&star, &a).unwrap();
        assert_eq!(cert.f_input, 9);
        assert_eq!(cert.f_path, 10);
        assert!(cert.strict);
        assert_eq!(sequence_weighted_wiener(&cert.path, &a).unwrap(), 10);
        verify_certificate(&star, &a, &cert).unwrap();
    }

    #[test]
    fn star_tie_outside_strict_class_gives_equality() {
        let star2 = Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        let a = star_tie_weights();
        let cert = maximize_on_path(&star2, &a).unwrap();
        assert_eq!(cert.f_input, 6);
        assert_eq!(cert.f_path, 6);
        assert!(!cert.strict);
        verify_certificate(&star2, &a, &cert).unwrap();
    }

    #[test]
    fn four_vertex_tie_relocates_a_path_end() {
        // One zero per row: a(1,2) = 0, everything else 1. Hanging 1 off the
        // star center 2 ties both end attachments at the star's own value 8,
        // yet the path that keeps the zero pair adjacent reaches 9.
        let star2 = Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        let mut a = SymMatrix::<i64>::ones(4);
        a.set(1, 2, 0);
        assert!(crate::wiener::classify_weights(&a).forces_strict());
        let cert = maximize_on_path(&star2, &a).unwrap();
        assert_eq!(cert.f_input, 8);
        assert_eq!(cert.f_path, 9);
        assert!(cert.strict);
        assert_eq!(cert.path, vec![3, 1, 2, 4]);
        let last = cert.trace.last().unwrap();
        assert_eq!(last.op, TraceOp::AttachEndpoint);
        assert_eq!(last.vertices, vec![3, 1]);
        assert_eq!(last.f_before, 8);
        assert_eq!(last.f_after, 9);
        verify_certificate(&star2, &a, &cert).unwrap();
    }

    #[test]
    fn single_zero_pair_stays_strict_on_every_tree() {
        // All-ones weights with one zeroed pair keep each row at one zero,
        // so every non-path tree must improve strictly.
        for n in 4..=6 {
            let mut a = SymMatrix::<i64>::ones(n);
            a.set(1, 2, 0);
            assert!(crate::wiener::classify_weights(&a).forces_strict());
            let oracle = brute_force_best_path(&a).unwrap();
            for tree in labeled_trees(n).unwrap() {
                let cert = maximize_on_path(&tree, &a).unwrap();
                assert!(cert.f_path <= oracle.f_path);
                if tree.as_path_sequence().is_some() {
                    assert!(!cert.strict);
                } else {
                    assert!(cert.strict, "n={n} tree={tree:?}");
                }
            }
        }
    }

    #[test]
    fn single_vertex_and_edge_are_trivial() {
        let g1 = Graph::empty(1).unwrap();
        let cert = maximize_on_path(&g1, &SymMatrix::<i64>::zeros(1)).unwrap();
        assert_eq!(cert.path, vec![1]);
        assert_eq!(cert.f_path, 0);

        let g2 = Graph::path(2).unwrap();
        let mut a = SymMatrix::<i64>::zeros(2);
        a.set(1, 2, 9);
        let cert = maximize_on_path(&g2, &a).unwrap();
        assert_eq!(cert.path, vec![1, 2]);
        assert_eq!(cert.f_path, 9);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            maximize_on_path(&g, &SymMatrix::<i64>::ones(4)),
            Err(Error::Disconnected)
        );
        let p = Graph::path(3).unwrap();
        let mut neg = SymMatrix::<i64>::ones(3);
        neg.set(1, 2, -1);
        assert_eq!(maximize_on_path(&p, &neg), Err(Error::NegativeWeight(1, 2)));
        assert!(maximize_on_path(&p, &SymMatrix::<i64>::ones(4)).is_err());
        let mut huge = SymMatrix::<i64>::ones(3);
        huge.set(1, 3, MAX_WEIGHT + 1);
        assert_eq!(maximize_on_path(&p, &huge), Err(Error::WeightTooLarge(1, 3)));
    }

    #[test]
    fn certificate_against_oracles_on_all_small_trees() {
        // Soundness: f_path >= f_input, and no certificate beats the true
        // path optimum. Strictness whenever the weights force it and the
        // tree is not a path.
        let mut rng = ChaCha8Rng::seed_from_u64(0xABCD);
        for n in 2..=6 {
            for trial in 0..6 {
                let mut a = SymMatrix::<i64>::zeros(n);
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        a.set(i, j, rng.gen_range(1..=30));
                    }
                }
                if trial % 3 == 1 && n >= 3 {
                    a.set(1, 2, 0); // still at most one zero per row
                }
                let class = crate::wiener::classify_weights(&a);
                let oracle = brute_force_best_path(&a).unwrap();
                for tree in labeled_trees(n).unwrap() {
                    let cert = maximize_on_path(&tree, &a).unwrap();
                    assert!(cert.f_path >= cert.f_input);
                    assert!(cert.f_path <= oracle.f_path, "cert beats the oracle");
                    if class.forces_strict() && tree.as_path_sequence().is_none() {
                        assert!(cert.strict, "n={n} trial={trial} tree={tree:?}");
                    }
                    if tree.as_path_sequence().is_some() {
                        assert!(!cert.strict);
                    }
                }
            }
        }
    }

    #[test]
    fn certificates_on_connected_graphs_respect_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
        for n in [4usize, 5] {
            for _ in 0..5 {
                // Random connected graph: random mask, retry until connected.
                let g = loop {
                    let mask = rng.gen_range(0..1u64 << pair_count(n));
                    let g = graph_from_edge_mask(n, mask).unwrap();
                    if g.is_connected() {
                        break g;
                    }
                };
                let mut a = SymMatrix::<i64>::zeros(n);
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        a.set(i, j, rng.gen_range(0..=20));
                    }
                }
                let cert = maximize_on_path(&g, &a).unwrap();
                verify_certificate(&g, &a, &cert).unwrap();
                let scan = brute_force_best_connected(&a).unwrap();
                assert!(cert.f_input <= scan.value);
                assert!(cert.f_path <= scan.value);
                let best_path = brute_force_best_path(&a).unwrap();
                // The two oracles agree: paths reach the connected optimum.
                assert_eq!(best_path.f_path, scan.value);
            }
        }
    }

    #[test]
    fn brute_force_path_examples() {
        // Unit weights on 4 vertices: every path gives 10; lexicographic
        // tie-break selects the identity ordering.
        let ones = SymMatrix::<i64>::ones(4);
        let best = brute_force_best_path(&ones).unwrap();
        assert_eq!(best.f_path, 10);
        assert_eq!(best.path, vec![1, 2, 3, 4]);

        // Heavy pair pushed to the ends: 1 and 2 separate maximally.
        let mut a = SymMatrix::<i64>::ones(3);
        a.set(1, 2, 5);
        let best = brute_force_best_path(&a).unwrap();
        assert_eq!(best.f_path, 12);
        assert_eq!(best.path, vec![1, 3, 2]);

        assert!(brute_force_best_path(&SymMatrix::<i64>::ones(1)).is_err());
        assert!(brute_force_best_path(&SymMatrix::<i64>::ones(10)).is_err());
    }

    #[test]
    fn brute_force_connected_examples() {
        let ones = SymMatrix::<i64>::ones(4);
        let scan = brute_force_best_connected(&ones).unwrap();
        assert_eq!(scan.value, 10);
        assert_eq!(scan.maximizers.len(), 12);
        for g6 in &scan.maximizers {
            assert!(Graph::from_graph6(g6).unwrap().as_path_sequence().is_some());
        }

        // The tie example: the star centered at the zero row joins the
        // paths at the optimum.
        let scan = brute_force_best_connected(&star_tie_weights()).unwrap();
        assert_eq!(scan.value, 6);
        assert!(scan.maximizers.contains(&"Ci".to_string()));
        let non_paths: Vec<&String> = scan
            .maximizers
            .iter()
            .filter(|g6| Graph::from_graph6(g6).unwrap().as_path_sequence().is_none())
            .collect();
        assert_eq!(non_paths, vec![&"Ci".to_string()]);
        assert_eq!(scan.maximizers.len(), 7);

        let mut tiny = SymMatrix::<i64>::zeros(2);
        tiny.set(1, 2, 3);
        let scan = brute_force_best_connected(&tiny).unwrap();
        assert_eq!(scan.value, 3);
        assert_eq!(scan.maximizers, vec!["A_".to_string()]);
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let a = SymMatrix::<i64>::ones(4);
        let good = maximize_on_path(&star, &a).unwrap();

        let mut bad = good.clone();
        bad.f_path += 1;
        assert!(verify_certificate(&star, &a, &bad).is_err());

        let mut bad = good.clone();
        bad.path.swap(0, 1);
        assert!(verify_certificate(&star, &a, &bad).is_err());

        let mut bad = good.clone();
        bad.strict = false;
        assert!(verify_certificate(&star, &a, &bad).is_err());

        let mut bad = good.clone();
        bad.trace[1].f_after += 1;
        assert!(verify_certificate(&star, &a, &bad).is_err());

        let mut bad = good;
        bad.path = vec![1, 1, 2, 3];
        assert!(verify_certificate(&star, &a, &bad).is_err());
    }

    #[test]
    fn float_weights_build_valid_certificates() {
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let x = [0.9, -0.2, 0.3, 0.3];
        let a = crate::wiener::rank_one_weights(&x, crate::wiener::RankOneKind::SquareDiff);
        let cert = maximize_on_path(&star, &a).unwrap();
        assert!(cert.f_path >= cert.f_input - 1e-12);
        verify_certificate(&star, &a, &cert).unwrap();
    }

    #[test]
    fn trace_shape_matches_construction() {
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let a = SymMatrix::<i64>::ones(4);
        let cert = maximize_on_path(&star, &a).unwrap();
        let ops: Vec<TraceOp> = cert.trace.iter().map(|s| s.op).collect();
        assert_eq!(
            ops,
            vec![
                TraceOp::SpanningTree,
                TraceOp::LeafContract,
                TraceOp::LeafContract,
                TraceOp::AttachEndpoint,
                TraceOp::AttachEndpoint,
            ]
        );
        assert_eq!(cert.trace[0].f_before, 9);
        assert_eq!(cert.trace[0].f_after, 9);
        let last = cert.trace.last().unwrap();
        assert_eq!(last.f_after, cert.f_path);
    }
}
