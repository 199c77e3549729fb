//! Exhaustive enumeration of small labeled universes: trees via Prüfer
//! sequences, connected graphs via edge-subset masks, and labeled paths via
//! permutations with a canonical orientation.
//!
//! Every enumerator is a lazy iterator with a fixed deterministic order, and
//! each universe exposes an index-addressed form
//! ([`tree_from_index`], [`graph_from_edge_mask`]) so sweeps can be split
//! across threads without changing what gets scanned.

use crate::error::Error;
use crate::graph::Graph;
use itertools::Itertools;
use rand::Rng;

/// Order caps. Universe sizes explode factorially; these bounds keep every
/// full scan in seconds-to-minutes territory.
pub const TREE_MAX_N: usize = 9;
pub const CONNECTED_MAX_N: usize = 7;
pub const PATH_MAX_N: usize = 9;

/// Decodes a Prüfer sequence (entries in `1..=n`, length `n - 2`) into the
/// unique labeled tree: repeatedly join the smallest remaining leaf
/// candidate to the next sequence entry.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph, Error> {
    if n < 2 {
        return Err(Error::RangeUnsupported("prufer_decode", 2, TREE_MAX_N, n));
    }
    if seq.len() != n - 2 {
        return Err(Error::Config(format!(
            "Prufer sequence for order {n} needs {} entries, got {}",
            n - 2,
            seq.len()
        )));
    }
    // remaining[v]: occurrences of v left in the unprocessed sequence tail.
    // A vertex is a leaf candidate when it is alive and never mentioned
    // again. Quadratic scan; plenty for n <= 62.
    let mut remaining = vec![0usize; n + 1];
    for &s in seq {
        if s == 0 || s > n {
            return Err(Error::VertexOutOfRange(s, n));
        }
        remaining[s] += 1;
    }
    let mut alive = vec![true; n + 1];
    let mut g = Graph::empty(n)?;
    for &s in seq {
        let leaf = (1..=n)
            .find(|&v| alive[v] && remaining[v] == 0)
            .expect("a leaf candidate always exists");
        g.add_edge(leaf, s)?;
        alive[leaf] = false;
        remaining[s] -= 1;
    }
    let mut last_two = (1..=n).filter(|&v| alive[v]);
    let u = last_two.next().expect("two vertices remain");
    let v = last_two.next().expect("two vertices remain");
    g.add_edge(u, v)?;
    Ok(g)
}

/// Inverse of [`prufer_decode`]: strips the smallest leaf repeatedly,
/// recording its neighbor.
pub fn prufer_encode(tree: &Graph) -> Result<Vec<usize>, Error> {
    let n = tree.n();
    if n < 2 {
        return Err(Error::RangeUnsupported("prufer_encode", 2, TREE_MAX_N, n));
    }
    if tree.edge_count() != n - 1 || !tree.is_connected() {
        return Err(Error::Config("input is not a tree".into()));
    }
    let mut degree: Vec<usize> = std::iter::once(0).chain((1..=n).map(|v| tree.degree(v))).collect();
    let mut removed = vec![false; n + 1];
    let mut seq = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = (1..=n).find(|&v| !removed[v] && degree[v] == 1).expect("tree has a leaf");
        let nb = tree.neighbors(leaf).find(|&w| !removed[w]).expect("leaf has a live neighbor");
        seq.push(nb);
        removed[leaf] = true;
        degree[leaf] -= 1;
        degree[nb] -= 1;
    }
    Ok(seq)
}

/// Number of labeled trees on `n` vertices: `n^(n-2)`.
pub fn tree_count(n: usize) -> u64 {
    match n {
        1 | 2 => 1,
        _ => (n as u64).pow(n as u32 - 2),
    }
}

/// Number of labeled paths on `n` vertices: `n!/2` for `n >= 2`.
pub fn path_count(n: usize) -> u64 {
    if n < 2 {
        return 1;
    }
    (2..=n as u64).product::<u64>() / 2
}

/// The tree with the given index in `0..tree_count(n)`: the index is the
/// Prüfer sequence read as a base-`n` number, most significant digit first.
pub fn tree_from_index(n: usize, index: u64) -> Result<Graph, Error> {
    check_tree_order(n)?;
    if n == 1 {
        return Graph::empty(1);
    }
    let mut seq = vec![0usize; n - 2];
    let mut rest = index;
    for slot in seq.iter_mut().rev() {
        *slot = (rest % n as u64) as usize + 1;
        rest /= n as u64;
    }
    if rest != 0 {
        return Err(Error::Config(format!("tree index {index} out of range for order {n}")));
    }
    prufer_decode(&seq, n)
}

fn check_tree_order(n: usize) -> Result<(), Error> {
    if n == 0 || n > TREE_MAX_N {
        return Err(Error::RangeUnsupported("labeled_trees", 1, TREE_MAX_N, n));
    }
    Ok(())
}

/// All labeled trees on `n` vertices (`n <= 9`), in Prüfer index order.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>, Error> {
    check_tree_order(n)?;
    Ok((0..tree_count(n)).map(move |i| tree_from_index(n, i).expect("index in range")))
}

/// Uniformly random labeled tree via a random Prüfer sequence.
pub fn random_labeled_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, Error> {
    if n == 0 || n > crate::MAX_VERTICES {
        return Err(Error::OrderOutOfRange(n));
    }
    if n == 1 {
        return Graph::empty(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    prufer_decode(&seq, n)
}

/// Number of unordered vertex pairs, i.e. bits in an edge mask.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Graph whose edge set is the given bitmask over pairs in column order
/// `(1,2), (1,3), (2,3), (1,4), ...` (the graph6 bit order).
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Result<Graph, Error> {
    let mut g = Graph::empty(n)?;
    let mut bit = 0;
    for j in 2..=n {
        for i in 1..j {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

fn check_connected_order(n: usize) -> Result<(), Error> {
    if n == 0 || n > CONNECTED_MAX_N {
        return Err(Error::RangeUnsupported("connected_labeled_graphs", 1, CONNECTED_MAX_N, n));
    }
    Ok(())
}

/// All connected labeled graphs on `n` vertices (`n <= 7`), in edge-mask
/// order. The full subset lattice has `2^(n(n-1)/2)` members; disconnected
/// ones are filtered out.
pub fn connected_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, Error> {
    check_connected_order(n)?;
    let masks = 1u64 << pair_count(n);
    Ok((0..masks).filter_map(move |m| {
        let g = graph_from_edge_mask(n, m).expect("mask in range");
        g.is_connected().then_some(g)
    }))
}

/// Exact count of connected labeled graphs by the standard recurrence
/// `c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)`,
/// used as an independent check on the subset scan.
pub fn connected_count_by_recurrence(n: usize) -> u64 {
    let choose2 = |m: usize| (m * m.saturating_sub(1) / 2) as u32;
    let binom = |a: usize, b: usize| -> u64 {
        if b > a {
            return 0;
        }
        let mut r = 1u64;
        for i in 0..b {
            r = r * (a - i) as u64 / (i + 1) as u64;
        }
        r
    };
    let mut c = vec![0u64; n + 1];
    for m in 1..=n {
        let total = 1u64 << choose2(m);
        let mut rooted_disconnected = 0u64;
        for k in 1..m {
            rooted_disconnected += binom(m - 1, k - 1) * c[k] * (1u64 << choose2(m - k));
        }
        c[m] = total - rooted_disconnected;
    }
    c[n]
}

/// All labeled paths on `n` vertices (`n <= 9`): permutations of `1..=n`
/// whose first entry is smaller than the last, i.e. one representative per
/// reversal pair, in lexicographic order.
pub fn labeled_paths(n: usize) -> Result<impl Iterator<Item = Graph>, Error> {
    if n == 0 || n > PATH_MAX_N {
        return Err(Error::RangeUnsupported("labeled_paths", 1, PATH_MAX_N, n));
    }
    Ok(path_sequences(n).map(|seq| Graph::from_path_sequence(&seq).expect("valid sequence")))
}

/// The vertex sequences behind [`labeled_paths`], in the same order.
pub fn path_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n)
        .permutations(n)
        .filter(move |p| n < 2 || p[0] < p[n - 1])
}
