//! Small simple undirected graphs stored as one `u64` neighbor mask per vertex.

mod canon;
mod graph6;
mod text;

pub use canon::{automorphism_count, canonical_form, canonical_labeling, CanonicalForm};
pub use graph6::{emit_graph6, parse_graph6};
pub use text::{emit_dot, emit_edge_list, parse_edge_list, parse_graph_text};

use crate::bitset::{bit, bits, low_mask};
use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

/// A simple finite undirected graph on vertices `0..n`.
///
/// Row `i` of the adjacency has bit `j` set iff `{i, j}` is an edge. Rows are
/// kept symmetric, loop-free and confined to the low `n` bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", emit_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graph has {n} vertices, limit is {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidArgument(format!("row {i} has bits beyond n")));
            }
            if row & bit(i) != 0 {
                return Err(Error::InvalidArgument(format!("loop at vertex {i}")));
            }
            for j in bits(row) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric edge ({i}, {j})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbor mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "cannot grow beyond {MAX_VERTICES} vertices"
            )));
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    ///
    /// Panics on loops or out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        let fresh = !self.has_edge(u, v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        fresh
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "bad edge ({u}, {v})");
        let present = self.has_edge(u, v);
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        present
    }

    /// Removes `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {v} out of range");
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Contracts edge `{u, v}` into the smaller endpoint, dropping loops and
    /// parallel edges. The larger endpoint is deleted and later ids shift down.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::InvalidArgument(format!("({u}, {v}) is not an edge")));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        for w in bits(self.adj[gone]) {
            if w != keep {
                g.add_edge(keep, w);
            }
        }
        Ok(g.delete_vertex(gone))
    }

    /// Subgraph induced by `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertices.iter().enumerate() {
            assert!(v < self.n, "vertex {v} out of range");
            assert!(pos[v] == usize::MAX, "vertex {v} listed twice");
            pos[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in bits(self.adj[v]) {
                if pos[w] != usize::MAX {
                    g.adj[i] |= bit(pos[w]);
                }
            }
        }
        g
    }

    /// Relabels so old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            for w in bits(self.adj[v]) {
                g.adj[perm[v]] |= bit(perm[w]);
            }
        }
        g
    }

    /// `self` on vertices `0..n`, `other` shifted to `n..n + other.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "union has {n} vertices, limit is {MAX_VERTICES}"
            )));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertex mask of the component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.component_of(left.trailing_zeros() as usize);
            out.push(bits(comp).collect());
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n
    }

    /// True iff `self` restricted to vertices `0..sub.n()` equals `sub`.
    pub fn induces_on_prefix(&self, sub: &Graph) -> bool {
        if sub.n > self.n {
            return false;
        }
        let mask = sub.vertex_mask();
        (0..sub.n).all(|v| self.adj[v] & mask == sub.adj[v])
    }
}
