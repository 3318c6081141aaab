//! Small simple graphs stored as one adjacency word per vertex.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{domain, Error, Result};

/// Largest vertex count any graph may have: one bit per vertex in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Members in increasing order.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph on vertices `0..n`. Equality compares
/// adjacency only, never the name.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency words, validating symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_capacity(n)?;
        let all = VertexSet::full(n);
        for (v, &row) in adj.iter().enumerate() {
            let row = VertexSet(row);
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if !row.is_subset(all) {
                let bad = (row - all).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { v: bad, n });
            }
            for u in row {
                if !VertexSet(adj[u]).contains(v) {
                    return Err(domain(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        Ok(Graph {
            adj: adj.into_iter().map(VertexSet).collect(),
            name: None,
        })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Open neighborhood `N(v)`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency_words(&self) -> Vec<u64> {
        self.adj.iter().map(|s| s.0).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).min()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n() })
        }
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    /// Shortest-path length from `u` to `v`; `None` when no path exists.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            if frontier.contains(v) {
                return Ok(Some(d));
            }
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next = next | self.adj[w];
            }
            frontier = next - seen;
            seen = seen | frontier;
            d += 1;
        }
        Ok(None)
    }

    /// Vertices at distance exactly two from `v`.
    pub fn sphere_exactly_two(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.sphere2(v))
    }

    /// Vertices other than `v` at distance one or two from `v`.
    pub fn ball_within_two(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.ball2(v))
    }

    #[inline]
    pub(crate) fn ball2(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        for w in self.adj[v] {
            s = s | self.adj[w];
        }
        s.remove(v);
        s
    }

    #[inline]
    pub(crate) fn sphere2(&self, v: usize) -> VertexSet {
        self.ball2(v) - self.adj[v]
    }

    /// Induced subgraph on `V \ removed`, re-indexed in increasing original
    /// order, with the old→new index map.
    pub fn delete_vertices(&self, removed: VertexSet) -> (Graph, Vec<Option<usize>>) {
        let n = self.n();
        let mut map = vec![None; n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut adj = vec![VertexSet::EMPTY; next];
        for u in 0..n {
            if let Some(nu) = map[u] {
                for w in self.adj[u] {
                    if let Some(nw) = map[w] {
                        adj[nu].insert(nw);
                    }
                }
            }
        }
        (Graph { adj, name: None }, map)
    }

    /// Applies `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n || perm.iter().any(|&p| p >= n) || perm.iter().copied().collect::<VertexSet>() != VertexSet::full(n) {
            return Err(domain("relabeling is not a permutation of the vertex set"));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for u in 0..n {
            adj[perm[u]] = self.adj[u].iter().map(|w| perm[w]).collect();
        }
        Ok(Graph {
            adj,
            name: self.name.clone(),
        })
    }

    /// `true` iff `n >= 1` and no vertex has degree zero.
    pub fn is_isolate_free(&self) -> bool {
        self.n() >= 1 && self.adj.iter().all(|s| !s.is_empty())
    }

    /// Every pair of distinct vertices adjacent; vacuous for `n <= 1`.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| self.adj[v].len() == n - 1)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier {
                next = next | self.adj[w];
            }
            frontier = next - seen;
            seen = seen | frontier;
        }
        seen == self.vertices()
    }

    /// Connected with `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

pub(crate) fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}
