//! Simple undirected graphs over contiguous vertex ids, plus the weighted
//! and oriented variants used by the reduction generators.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// An undirected edge stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge weight must be at least 1, got {0}")]
    ZeroWeight(u64),
    #[error("weight list has {found} entries for {expected} edges")]
    WeightCount { expected: usize, found: usize },
    #[error("vertex set is not a vertex cover: edge ({0}, {1}) is uncovered")]
    NotAVertexCover(usize, usize),
}

/// A simple undirected graph on the vertices `0..vertex_count`.
///
/// Edges are kept sorted and normalized, and adjacency lists are sorted
/// ascending, so every traversal below is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(vertex_count, list))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_sorted(n, edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// Star K_{1,leaves} centered at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&edge(e.0, e.1)).ok()
    }

    /// Copy of the graph with the given edges removed. Edges not present are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut drop: Vec<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
        drop.sort_unstable();
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|e| drop.binary_search(e).is_err())
            .collect();
        Self::from_sorted(self.n, kept)
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| edge(index[u], index[v]))
            .collect();
        edges.sort_unstable();
        Self::from_sorted(keep.len(), edges)
    }

    /// True if every edge has at least one endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        self.uncovered_edge(cover).is_none()
    }

    fn uncovered_edge(&self, cover: &[usize]) -> Option<Edge> {
        let mut inside = vec![false; self.n];
        for &v in cover {
            if v < self.n {
                inside[v] = true;
            }
        }
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| !inside[u] && !inside[v])
    }
}

/// Serializes as the plain-text edge-list format.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::io::write_graph(self))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Connected components, each sorted ascending, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(x) = queue.pop_front() {
            comp.push(x);
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Size of the largest connected component (0 for the empty graph).
pub fn largest_component(g: &Graph) -> usize {
    connected_components(g)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

/// One twin class of the independent side: every member has exactly
/// `signature` as its neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    pub signature: Vec<usize>,
    pub members: Vec<usize>,
}

/// Partition of `V \ cover` by identical neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClassification {
    pub cover: Vec<usize>,
    pub classes: Vec<TwinClass>,
}

/// Groups the vertices outside `cover` by neighborhood. Classes come out
/// sorted by signature; members are sorted ascending.
pub fn twin_classes(g: &Graph, cover: &[usize]) -> Result<TwinClassification, GraphError> {
    let cover = normalize_set(g, cover)?;
    if let Some((u, v)) = g.uncovered_edge(&cover) {
        return Err(GraphError::NotAVertexCover(u, v));
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in &cover {
        inside[v] = true;
    }
    // Outside vertices form an independent set, so the whole neighborhood lies in the cover.
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in (0..g.vertex_count()).filter(|&v| !inside[v]) {
        groups.entry(g.neighbors(v).to_vec()).or_default().push(v);
    }
    let classes = groups
        .into_iter()
        .map(|(signature, members)| TwinClass { signature, members })
        .collect();
    Ok(TwinClassification { cover, classes })
}

pub(crate) fn normalize_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>, GraphError> {
    let mut out = set.to_vec();
    out.sort_unstable();
    out.dedup();
    if let Some(&v) = out.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            vertex_count: g.vertex_count(),
        });
    }
    Ok(out)
}

/// Minimum vertex cover if one of size at most `bound` exists.
///
/// Among all minimum covers the lexicographically smallest sorted vertex list
/// is returned: vertices are fixed in ascending order, each one included
/// whenever a minimum cover consistent with the earlier choices contains it.
/// Feasibility is decided by the classic branch-on-an-uncovered-edge search.
pub fn min_vertex_cover(g: &Graph, bound: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut state = vec![Fix::Free; n];
    let size = (0..=bound.min(n)).find(|&s| cover_exists(g, &mut state, s))?;

    let mut chosen = 0;
    for v in 0..n {
        if chosen == size {
            state[v] = Fix::Out;
            continue;
        }
        state[v] = Fix::In;
        if cover_exists(g, &mut state, size) {
            chosen += 1;
        } else {
            state[v] = Fix::Out;
        }
    }
    let cover: Vec<usize> = (0..n).filter(|&v| state[v] == Fix::In).collect();
    debug_assert!(g.is_vertex_cover(&cover) && cover.len() == size);
    Some(cover)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Fix {
    Free,
    In,
    Out,
}

/// Does a cover of size `<= budget` exist that respects the fixed vertices?
fn cover_exists(g: &Graph, state: &mut [Fix], budget: usize) -> bool {
    let used = state.iter().filter(|&&s| s == Fix::In).count();
    if used > budget {
        return false;
    }
    branch_cover(g, state, budget - used)
}

fn branch_cover(g: &Graph, state: &mut [Fix], budget: usize) -> bool {
    let open = g
        .edges()
        .iter()
        .copied()
        .find(|&(u, v)| state[u] != Fix::In && state[v] != Fix::In);
    let Some((u, v)) = open else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for x in [u, v] {
        if state[x] == Fix::Free {
            state[x] = Fix::In;
            let ok = branch_cover(g, state, budget - 1);
            state[x] = Fix::Free;
            if ok {
                return true;
            }
        }
    }
    false
}

/// A graph with a positive integer weight on every edge. Weights are stored
/// parallel to [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let triples: Vec<(usize, usize, u64)> = edges.into_iter().collect();
        if let Some(&(_, _, w)) = triples.iter().find(|t| t.2 == 0) {
            return Err(GraphError::ZeroWeight(w));
        }
        let graph = Graph::new(vertex_count, triples.iter().map(|&(u, v, _)| (u, v)))?;
        let mut weights = vec![0; graph.edge_count()];
        for &(u, v, w) in &triples {
            let idx = graph.edge_index((u, v)).expect("edge just inserted");
            weights[idx] = w;
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Attaches weights listed in [`Graph::edges`] order.
    pub fn from_parts(graph: Graph, weights: Vec<u64>) -> Result<Self, GraphError> {
        if weights.len() != graph.edge_count() {
            return Err(GraphError::WeightCount {
                expected: graph.edge_count(),
                found: weights.len(),
            });
        }
        if let Some(&w) = weights.iter().find(|&&w| w == 0) {
            return Err(GraphError::ZeroWeight(w));
        }
        Ok(WeightedGraph { graph, weights })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        self.graph.edge_index((u, v)).map(|i| self.weights[i])
    }

    /// Sum of all edge weights (ω).
    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Sum of the weights of edges incident to `v`.
    pub fn weighted_degree(&self, v: usize) -> u64 {
        self.graph
            .edges()
            .iter()
            .zip(&self.weights)
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &w)| w)
            .sum()
    }

    /// Maximum weighted degree (Δ_w); 0 for a graph without vertices.
    pub fn max_weighted_degree(&self) -> u64 {
        (0..self.graph.vertex_count())
            .map(|v| self.weighted_degree(v))
            .max()
            .unwrap_or(0)
    }
}

/// A direction for every edge of a weighted graph, stored as `(tail, head)`
/// parallel to the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// `reversed[i]` flips edge `i` from smaller→larger to larger→smaller.
    pub fn from_flags(g: &Graph, reversed: &[bool]) -> Self {
        assert_eq!(g.edge_count(), reversed.len());
        let arcs = g
            .edges()
            .iter()
            .zip(reversed)
            .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
            .collect();
        Orientation { arcs }
    }

    /// Builds an orientation from arcs given in any order. Every edge of `g`
    /// must be covered exactly once.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Option<Self> {
        let mut slots: Vec<Option<(usize, usize)>> = vec![None; g.edge_count()];
        for &(t, h) in arcs {
            let i = g.edge_index((t, h))?;
            if slots[i].replace((t, h)).is_some() {
                return None;
            }
        }
        let arcs = slots.into_iter().collect::<Option<Vec<_>>>()?;
        Some(Orientation { arcs })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Weighted outdegree of `v`.
    pub fn out_weight(&self, wg: &WeightedGraph, v: usize) -> u64 {
        self.arcs
            .iter()
            .zip(wg.weights())
            .filter(|((t, _), _)| *t == v)
            .map(|(_, &w)| w)
            .sum()
    }

    pub fn max_out_weight(&self, wg: &WeightedGraph) -> u64 {
        (0..wg.graph().vertex_count())
            .map(|v| self.out_weight(wg, v))
            .max()
            .unwrap_or(0)
    }
}
