//! Simple undirected graphs on at most 62 labeled vertices.
//!
//! Vertices are labeled `1..=n` in every public signature. Adjacency is kept
//! as one 64-bit row per vertex, so neighbor scans ascend by label for free,
//! which makes every traversal in the crate deterministic.

use crate::error::Error;
use crate::MAX_VERTICES;

/// Undirected graph, no loops, no multi-edges, vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, Error> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Edges may come in either vertex
    /// order; duplicates collapse. Self-loops and out-of-range labels are
    /// hard errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The labeled path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self, Error> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    /// Path visiting `seq` in order; `seq` must be a permutation of `1..=n`.
    pub fn from_path_sequence(seq: &[usize]) -> Result<Self, Error> {
        let n = seq.len();
        let mut g = Graph::empty(n)?;
        let mut seen = vec![false; n + 1];
        for &v in seq {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if seen[v] {
                return Err(Error::EdgeList(format!("repeated vertex {v} in path sequence")));
            }
            seen[v] = true;
        }
        for w in seq.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, Error> {
        let mut g = Graph::empty(n)?;
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n, "vertex out of range");
        u != v && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n, "vertex out of range");
        self.adj[v - 1].count_ones() as usize
    }

    /// Neighbors of `v` in ascending label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(v >= 1 && v <= self.n, "vertex out of range");
        let mut bits = self.adj[v - 1];
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(b + 1)
            }
        })
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            let mut bits = self.adj[u - 1] >> u; // labels above u only
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push((u, u + 1 + b));
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Set of vertices reachable from vertex 1, as a bitmask.
    fn reach_mask(&self) -> u64 {
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next: u64 = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        self.reach_mask() == full
    }

    /// BFS distances from `s` to every vertex; `u32::MAX` marks unreachable.
    fn bfs_row(&self, s: usize, dist: &mut [u32], queue: &mut Vec<usize>) {
        dist.fill(u32::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u];
            let mut bits = self.adj[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if dist[v] == u32::MAX {
                    dist[v] = du + 1;
                    queue.push(v);
                }
            }
        }
    }

    /// All-pairs shortest-path distances via one BFS per vertex.
    /// Errors if the graph is disconnected.
    pub fn distances(&self) -> Result<DistanceMatrix, Error> {
        let n = self.n;
        let mut d = vec![0u32; n * n];
        let mut row = vec![0u32; n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            self.bfs_row(s, &mut row, &mut queue);
            if row.iter().any(|&x| x == u32::MAX) {
                return Err(Error::Disconnected);
            }
            d[s * n..(s + 1) * n].copy_from_slice(&row);
        }
        Ok(DistanceMatrix { n, d })
    }

    /// BFS spanning tree rooted at vertex 1, neighbors scanned in ascending
    /// label order. Errors if the graph is disconnected.
    pub fn spanning_tree(&self) -> Result<Graph, Error> {
        let n = self.n;
        let mut tree = Graph::empty(n)?;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let mut bits = self.adj[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if !seen[v] {
                    seen[v] = true;
                    tree.adj[u] |= 1 << v;
                    tree.adj[v] |= 1 << u;
                    queue.push(v);
                }
            }
        }
        if queue.len() != n {
            return Err(Error::Disconnected);
        }
        Ok(tree)
    }

    /// If the graph is a labeled path, returns its vertex order starting at
    /// the lower-labeled endpoint. A single vertex counts as a path.
    pub fn as_path_sequence(&self) -> Option<Vec<usize>> {
        if self.n == 1 {
            return Some(vec![1]);
        }
        let mut ends = Vec::new();
        for v in 1..=self.n {
            match self.degree(v) {
                1 => ends.push(v),
                2 => {}
                _ => return None,
            }
        }
        if ends.len() != 2 {
            return None;
        }
        let start = ends[0]; // ends ascend with the vertex scan
        let mut seq = Vec::with_capacity(self.n);
        seq.push(start);
        let mut prev = 0usize;
        let mut cur = start;
        while seq.len() < self.n {
            let next = self.neighbors(cur).find(|&w| w != prev)?;
            seq.push(next);
            prev = cur;
            cur = next;
        }
        // A stray cycle component would have cut the walk short of n.
        if self.degree(cur) != 1 {
            return None;
        }
        Some(seq)
    }

    /// Removes vertex `v`, shifting labels above `v` down by one.
    /// Returns the smaller graph; old label `w > v` becomes `w - 1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, Error> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::OrderOutOfRange(0));
        }
        let mut g = Graph::empty(self.n - 1)?;
        for (u, w) in self.edges() {
            if u == v || w == v {
                continue;
            }
            let u2 = if u > v { u - 1 } else { u };
            let w2 = if w > v { w - 1 } else { w };
            g.add_edge(u2, w2)?;
        }
        Ok(g)
    }

    // ----- graph6 ------------------------------------------------------

    /// Decodes a graph6 string (single-byte order, `n <= 62`). A leading
    /// `>>graph6<<` header is tolerated; surrounding whitespace is trimmed.
    pub fn from_graph6(s: &str) -> Result<Self, Error> {
        let mut t = s.trim();
        if let Some(rest) = t.strip_prefix(">>graph6<<") {
            t = rest;
        }
        let bytes = t.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty string".into()));
        }
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
            }
        }
        if bytes[0] == 126 {
            return Err(Error::Graph6("orders above 62 are not supported".into()));
        }
        let n = (bytes[0] - 63) as usize;
        if n == 0 {
            return Err(Error::Graph6("order 0".into()));
        }
        let nbits = n * (n - 1) / 2;
        let nchars = nbits.div_ceil(6);
        if bytes.len() != 1 + nchars {
            return Err(Error::Graph6(format!(
                "expected {} body characters for order {n}, found {}",
                nchars,
                bytes.len() - 1
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0usize;
        // Column order: pairs (i,j) with j = 2..=n, i = 1..j.
        for j in 2..=n {
            for i in 1..j {
                let chunk = bytes[1 + bit / 6] - 63;
                if chunk >> (5 - bit % 6) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Encodes to graph6 (single-byte order, zero padding bits).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        let mut chunk = 0u8;
        let mut fill = 0u8;
        for j in 2..=n {
            for i in 1..j {
                chunk <<= 1;
                if self.has_edge(i, j) {
                    chunk |= 1;
                }
                fill += 1;
                if fill == 6 {
                    out.push((chunk + 63) as char);
                    chunk = 0;
                    fill = 0;
                }
            }
        }
        if fill > 0 {
            chunk <<= 6 - fill;
            out.push((chunk + 63) as char);
        }
        out
    }

    // ----- edge-list text ------------------------------------------------

    /// Parses the plain text format: first line `n m`, then `m` lines `i j`
    /// with 1-based labels. Blank lines and `#` comments are skipped.
    pub fn from_edge_list_text(text: &str) -> Result<Self, Error> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing header line".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad header {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad header {header:?}")))?;
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("trailing tokens in header {header:?}")));
        }
        let mut g = Graph::empty(n)?;
        let mut count = 0;
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(Error::EdgeList(format!("trailing tokens in edge line {line:?}")));
            }
            g.add_edge(u, v)?;
            count += 1;
        }
        if count != m {
            return Err(Error::EdgeList(format!("header promises {m} edges, found {count}")));
        }
        Ok(g)
    }

    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Dense all-pairs distance matrix, indexed by vertex labels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "vertex out of range");
        self.d[(i - 1) * self.n + (j - 1)]
    }

    /// Distances along a path visiting `seq` in order: position differences.
    /// `seq` must be a permutation of `1..=n`.
    pub fn of_path_sequence(seq: &[usize]) -> Result<DistanceMatrix, Error> {
        let n = seq.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut pos = vec![usize::MAX; n + 1];
        for (p, &v) in seq.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if pos[v] != usize::MAX {
                return Err(Error::EdgeList(format!("repeated vertex {v} in path sequence")));
            }
            pos[v] = p;
        }
        let mut d = vec![0u32; n * n];
        for i in 1..=n {
            for j in 1..=n {
                d[(i - 1) * n + (j - 1)] = pos[i].abs_diff(pos[j]) as u32;
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// Row sums (transmissions), one per vertex.
    pub fn transmissions(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.get(i, j) as i64).sum())
            .collect()
    }

    pub fn max_distance(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize, center: usize) -> Graph {
        let edges: Vec<(usize, usize)> =
            (1..=n).filter(|&v| v != center).map(|v| (center, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn build_and_query() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(1, 3));
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 4)]), Err(Error::VertexOutOfRange(4, 3)));
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(Graph::empty(0), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::empty(63), Err(Error::OrderOutOfRange(63)));
        // Duplicates collapse regardless of orientation.
        let g = Graph::from_edges(2, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn distances_on_small_graphs() {
        let p3 = Graph::path(3).unwrap();
        let d = p3.distances().unwrap();
        let rows: Vec<Vec<u32>> =
            (1..=3).map(|i| (1..=3).map(|j| d.get(i, j)).collect()).collect();
        assert_eq!(rows, vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(d.transmissions(), vec![3, 2, 3]);

        let s = star(4, 2);
        let ds = s.distances().unwrap();
        assert_eq!(ds.get(1, 3), 2);
        assert_eq!(ds.get(1, 2), 1);
        assert_eq!(ds.get(3, 4), 2);

        let c4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(c4.distances().unwrap().get(1, 3), 2);

        let split = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(split.distances(), Err(Error::Disconnected));
    }

    #[test]
    fn distances_match_floyd_warshall() {
        // Independent oracle: Floyd-Warshall over the same adjacency.
        let mut graphs = vec![
            Graph::path(7).unwrap(),
            Graph::complete(5).unwrap(),
            star(6, 3),
            Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5)])
                .unwrap(),
        ];
        // A few pseudorandom connected graphs from a fixed LCG.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for n in 4..=9 {
            'outer: loop {
                let mut g = Graph::empty(n).unwrap();
                for u in 1..n {
                    for v in (u + 1)..=n {
                        if rnd() % 3 == 0 {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                if g.is_connected() {
                    graphs.push(g);
                    break 'outer;
                }
            }
        }
        for g in &graphs {
            let n = g.n();
            let inf = u32::MAX / 2;
            let mut fw = vec![vec![inf; n + 1]; n + 1];
            for v in 1..=n {
                fw[v][v] = 0;
            }
            for (u, v) in g.edges() {
                fw[u][v] = 1;
                fw[v][u] = 1;
            }
            for k in 1..=n {
                for i in 1..=n {
                    for j in 1..=n {
                        fw[i][j] = fw[i][j].min(fw[i][k] + fw[k][j]);
                    }
                }
            }
            let d = g.distances().unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(d.get(i, j), fw[i][j], "graph {g:?} pair ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn spanning_tree_examples() {
        // Trees come back unchanged.
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.spanning_tree().unwrap(), p4);
        let s = star(5, 2);
        assert_eq!(s.spanning_tree().unwrap(), s);

        // Cycle: the chord closing the cycle is dropped.
        let c4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let t = c4.spanning_tree().unwrap();
        assert_eq!(t.edges(), vec![(1, 2), (1, 4), (2, 3)]);

        // Complete graph: BFS from 1 reaches everything in one layer.
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.spanning_tree().unwrap(), star(4, 1));

        let split = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(split.spanning_tree(), Err(Error::Disconnected));
    }

    #[test]
    fn spanning_tree_never_shrinks_distances() {
        let graphs = [
            Graph::complete(6).unwrap(),
            Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)]).unwrap(),
            Graph::from_edges(6, &[(1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1)]).unwrap(),
        ];
        for g in &graphs {
            let t = g.spanning_tree().unwrap();
            assert_eq!(t.edge_count(), g.n() - 1);
            assert!(t.is_connected());
            let dg = g.distances().unwrap();
            let dt = t.distances().unwrap();
            for i in 1..=g.n() {
                for j in 1..=g.n() {
                    assert!(dt.get(i, j) >= dg.get(i, j));
                }
            }
        }
    }

    #[test]
    fn path_sequences() {
        let g = Graph::from_edges(4, &[(2, 3), (1, 3), (2, 4)]).unwrap();
        assert_eq!(g.as_path_sequence(), Some(vec![1, 3, 2, 4]));

        assert_eq!(Graph::path(4).unwrap().as_path_sequence(), Some(vec![1, 2, 3, 4]));
        assert_eq!(Graph::empty(1).unwrap().as_path_sequence(), Some(vec![1]));
        assert_eq!(Graph::path(2).unwrap().as_path_sequence(), Some(vec![1, 2]));

        assert_eq!(star(4, 2).as_path_sequence(), None);
        let c4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(c4.as_path_sequence(), None);
        assert_eq!(Graph::empty(2).unwrap().as_path_sequence(), None);

        // Degree profile of a path, but disconnected: P2 plus a triangle.
        let trap = Graph::from_edges(5, &[(1, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(trap.as_path_sequence(), None);
    }

    #[test]
    fn from_path_sequence_round_trips() {
        let seq = vec![3, 1, 4, 2, 5];
        let g = Graph::from_path_sequence(&seq).unwrap();
        assert_eq!(g.as_path_sequence(), Some(seq));
        assert!(Graph::from_path_sequence(&[1, 1, 2]).is_err());
    }

    #[test]
    fn delete_vertex_relabels() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let h = g.delete_vertex(2).unwrap();
        // Old 3,4 become 2,3; the edge (3,4) survives as (2,3).
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(2, 3)]);
    }

    #[test]
    fn graph6_known_strings() {
        let k4 = Graph::from_graph6("C~").unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert_eq!(Graph::complete(4).unwrap().to_graph6(), "C~");

        let p4 = Graph::from_graph6("Ch").unwrap();
        assert_eq!(p4, Graph::path(4).unwrap());
        assert_eq!(Graph::path(4).unwrap().to_graph6(), "Ch");

        // Star with center 1 on 4 vertices.
        assert_eq!(star(4, 1).to_graph6(), "Cs");
        // Star with center 2 on 4 vertices.
        assert_eq!(star(4, 2).to_graph6(), "Ci");

        assert_eq!(Graph::empty(1).unwrap().to_graph6(), "@");
        assert_eq!(Graph::from_graph6("@").unwrap().n(), 1);
        assert_eq!(Graph::path(2).unwrap().to_graph6(), "A_");
        assert_eq!(Graph::complete(3).unwrap().to_graph6(), "Bw");

        // Header and whitespace are tolerated.
        assert_eq!(Graph::from_graph6(">>graph6<<Ch\n").unwrap(), Graph::path(4).unwrap());
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("C").is_err()); // missing body
        assert!(Graph::from_graph6("Chh").is_err()); // trailing body
        assert!(Graph::from_graph6("C\u{1}").is_err()); // byte below 63
        assert!(Graph::from_graph6("~??").is_err()); // multi-byte order form
    }

    #[test]
    fn graph6_round_trip_exhaustive_n4() {
        // All 64 labeled graphs on 4 vertices.
        for mask in 0u32..64 {
            let mut g = Graph::empty(4).unwrap();
            let pairs = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            let s = g.to_graph6();
            assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = Graph::from_edges(4, &[(2, 3), (1, 3), (2, 4)]).unwrap();
        let text = g.to_edge_list_text();
        assert_eq!(text, "4 3\n1 3\n2 3\n2 4\n");
        assert_eq!(Graph::from_edge_list_text(&text).unwrap(), g);

        let commented = "# a path\n4 3\n1 2\n\n2 3\n3 4\n";
        assert_eq!(Graph::from_edge_list_text(commented).unwrap(), Graph::path(4).unwrap());

        assert!(Graph::from_edge_list_text("4 2\n1 2\n").is_err()); // count mismatch
        assert!(Graph::from_edge_list_text("4\n").is_err());
        assert!(Graph::from_edge_list_text("4 1\n1 5\n").is_err());
        assert!(Graph::from_edge_list_text("").is_err());
    }

    #[test]
    fn path_sequence_distances() {
        let d = DistanceMatrix::of_path_sequence(&[1, 3, 2, 4]).unwrap();
        assert_eq!(d.get(1, 3), 1);
        assert_eq!(d.get(1, 4), 3);
        assert_eq!(d.get(3, 2), 1);
        assert_eq!(d.get(1, 1), 0);
        // Must agree with BFS on the materialized path graph.
        let g = Graph::from_path_sequence(&[1, 3, 2, 4]).unwrap();
        assert_eq!(g.distances().unwrap(), d);
    }
}
