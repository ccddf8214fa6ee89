//! Immutable simple undirected graphs with precomputed closed neighborhoods.
//!
//! Vertices are indexed `0..n`. Closed neighborhoods `N[v] = {v} ∪ adj(v)` are
//! stored as packed bit rows so that coverage tests reduce to word operations.
//! Graphs with at most 64 vertices additionally expose single-word masks, which
//! is what the exact enumeration engine runs on.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count representable by a single-word [`VertexSet`].
pub const MASK_BITS: usize = 64;

/// A set of vertices of a graph with at most 64 vertices, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full vertex set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MASK_BITS);
        if n == MASK_BITS {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MASK_BITS && self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Largest member index, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }

    /// All nonempty proper subsets, in increasing mask order.
    pub fn proper_nonempty_subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut sub = 0u64;
        std::iter::from_fn(move || {
            // next subset of `full` in increasing order
            sub = sub.wrapping_sub(full) & full;
            (sub != 0 && sub != full).then_some(VertexSet(sub))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// A simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    /// `n` rows of `words` u64 each; row `v` is the closed neighborhood of `v`.
    closed: Vec<u64>,
    words: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Graph {
        let n = adjacency.len();
        let words = n.div_ceil(64).max(1);
        let mut closed = vec![0u64; n * words];
        for (v, list) in adjacency.iter().enumerate() {
            let row = &mut closed[v * words..(v + 1) * words];
            row[v / 64] |= 1 << (v % 64);
            for &u in list {
                row[u / 64] |= 1 << (u % 64);
            }
        }
        Graph { n, adjacency, closed, words }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Packed closed-neighborhood row of `v` (length `ceil(n / 64)`).
    pub fn closed_row(&self, v: usize) -> &[u64] {
        &self.closed[v * self.words..(v + 1) * self.words]
    }

    /// Closed neighborhoods as single-word masks. Fails for `n > 64`.
    pub fn closed_masks(&self) -> Result<Vec<u64>> {
        self.require_mask_width()?;
        Ok((0..self.n).map(|v| self.closed[v]).collect())
    }

    /// `N[v]` as a [`VertexSet`]; requires `n <= 64`.
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        debug_assert!(self.n <= MASK_BITS && v < self.n);
        VertexSet(self.closed[v])
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n.min(MASK_BITS))
    }

    fn require_mask_width(&self) -> Result<()> {
        if self.n > MASK_BITS {
            Err(Error::Capacity { n: self.n, limit: MASK_BITS })
        } else {
            Ok(())
        }
    }

    /// Validates that every member of `s` is a vertex of this graph.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        self.require_mask_width()?;
        if !s.is_subset(self.vertex_set()) {
            let bad = s.difference(self.vertex_set()).iter().next().unwrap_or(0);
            return Err(Error::input(format!("vertex {bad} out of range for n = {}", self.n)));
        }
        Ok(())
    }

    /// `N(S)`: the vertices in `s` or adjacent to a member of `s`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood_unchecked(s))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, s: VertexSet) -> VertexSet {
        VertexSet(s.iter().fold(0, |acc, v| acc | self.closed[v]))
    }

    /// Whether `t ⊆ N(s)`.
    pub fn dominates(&self, s: VertexSet, t: VertexSet) -> Result<bool> {
        self.check_set(t)?;
        Ok(t.is_subset(self.closed_neighborhood(s)?))
    }

    pub fn is_dominating(&self, s: VertexSet) -> Result<bool> {
        self.dominates(s, self.vertex_set())
    }

    /// Domination test for an arbitrary-size graph given a list of vertices.
    pub fn is_dominating_list(&self, vertices: &[usize]) -> bool {
        let mut covered = vec![0u64; self.words];
        for &v in vertices {
            for (c, r) in covered.iter_mut().zip(self.closed_row(v)) {
                *c |= r;
            }
        }
        covered_all(&covered, self.n)
    }

    /// Whether `N[v] = V`.
    pub fn is_universal(&self, v: usize) -> bool {
        self.adjacency[v].len() + 1 == self.n
    }

    /// Number of universal vertices.
    pub fn universal_vertex_count(&self) -> usize {
        (0..self.n).filter(|&v| self.is_universal(v)).count()
    }

    /// Whether every vertex has degree `d`; returns the common degree.
    pub fn regular_degree(&self) -> std::result::Result<usize, (usize, usize, usize)> {
        let Some(d) = self.adjacency.first().map(Vec::len) else {
            return Ok(0);
        };
        match self.adjacency.iter().enumerate().find(|(_, l)| l.len() != d) {
            Some((v, l)) => Err((v, l.len(), d)),
            None => Ok(d),
        }
    }
}

pub(crate) fn covered_all(covered: &[u64], n: usize) -> bool {
    let full_words = n / 64;
    if covered[..full_words].iter().any(|&w| w != u64::MAX) {
        return false;
    }
    let rem = n % 64;
    rem == 0 || covered[full_words] == (1u64 << rem) - 1
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}
