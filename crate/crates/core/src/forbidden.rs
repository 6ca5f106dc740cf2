//! Forbidden-subgraph families and the containment checks behind them.
//!
//! Members are kept symbolic. A star is a degree threshold, "all trees on t
//! vertices" is a component-size threshold, and an exact-length cycle is found
//! by a pruned search. Only `Explicit` patterns go through the generic
//! subgraph-isomorphism matcher, which also serves as the cross-validation
//! oracle for the specialized checks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{connected_components, Edge, Graph};
use crate::io::{read_graph, write_graph, ParseError};

/// Largest pattern the generic matcher accepts by default.
pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("star needs d >= 1, got {0}")]
    Star(usize),
    #[error("cycle needs length >= 3, got {0}")]
    Cycle(usize),
    #[error("tree family needs t >= 2, got {0}")]
    Trees(usize),
    #[error("flower lengths must be nonempty, distinct and >= 3: {0:?}")]
    Flower(Vec<usize>),
    #[error("explicit pattern: {0}")]
    Explicit(#[from] ParseError),
    #[error("family JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("pattern has {vertices} vertices, the matcher accepts at most {limit}")]
    PatternTooLarge { vertices: usize, limit: usize },
    #[error("flower containment needs a flower host")]
    FlowerHostMissing,
    #[error("graph is not a subgraph of the tagged flower host")]
    NotFlowerHost,
}

/// One member of a forbidden family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forbidden {
    /// K_{1,d}
    Star(usize),
    /// Simple cycle on exactly this many vertices.
    CycleExact(usize),
    /// Every tree on `t` vertices.
    AllTrees(usize),
    /// Cycles of the given lengths sharing one common vertex.
    Flower(Vec<usize>),
    Explicit(Graph),
}

impl Forbidden {
    pub fn star(d: usize) -> Result<Self, FamilyError> {
        if d < 1 {
            return Err(FamilyError::Star(d));
        }
        Ok(Forbidden::Star(d))
    }

    pub fn cycle(len: usize) -> Result<Self, FamilyError> {
        if len < 3 {
            return Err(FamilyError::Cycle(len));
        }
        Ok(Forbidden::CycleExact(len))
    }

    pub fn all_trees(t: usize) -> Result<Self, FamilyError> {
        if t < 2 {
            return Err(FamilyError::Trees(t));
        }
        Ok(Forbidden::AllTrees(t))
    }

    /// Lengths are stored sorted.
    pub fn flower(lengths: &[usize]) -> Result<Self, FamilyError> {
        let mut sorted = lengths.to_vec();
        sorted.sort_unstable();
        let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
        if sorted.is_empty() || !distinct || sorted[0] < 3 {
            return Err(FamilyError::Flower(lengths.to_vec()));
        }
        Ok(Forbidden::Flower(sorted))
    }

    fn validate(&self) -> Result<(), FamilyError> {
        match self {
            Forbidden::Star(d) => Forbidden::star(*d).map(drop),
            Forbidden::CycleExact(l) => Forbidden::cycle(*l).map(drop),
            Forbidden::AllTrees(t) => Forbidden::all_trees(*t).map(drop),
            Forbidden::Flower(ls) => Forbidden::flower(ls).map(drop),
            Forbidden::Explicit(_) => Ok(()),
        }
    }
}

/// A validated list of forbidden members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct ForbiddenFamily {
    members: Vec<Forbidden>,
}

impl ForbiddenFamily {
    pub fn new(members: Vec<Forbidden>) -> Result<Self, FamilyError> {
        for m in &members {
            m.validate()?;
        }
        Ok(ForbiddenFamily { members })
    }

    /// The family of all trees on `h + 1` vertices: every component must have at most `h` vertices.
    pub fn component_cap(h: usize) -> Self {
        assert!(h >= 1, "component cap must be at least 1");
        ForbiddenFamily {
            members: vec![Forbidden::AllTrees(h + 1)],
        }
    }

    pub fn members(&self) -> &[Forbidden] {
        &self.members
    }

    /// `Some(h)` when the family is exactly "all trees on h+1 vertices".
    pub fn as_component_cap(&self) -> Option<usize> {
        match self.members.as_slice() {
            [Forbidden::AllTrees(t)] => Some(t - 1),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, FamilyError> {
        serde_json::from_str(text).map_err(|e| FamilyError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    members: Vec<RawMember>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawMember {
    Star {
        d: usize,
    },
    Cycle {
        #[serde(rename = "L")]
        len: usize,
    },
    AllTrees {
        t: usize,
    },
    Flower {
        lengths: Vec<usize>,
    },
    Explicit {
        graph: String,
    },
}

impl TryFrom<RawFamily> for ForbiddenFamily {
    type Error = FamilyError;

    fn try_from(raw: RawFamily) -> Result<Self, FamilyError> {
        let members = raw
            .members
            .into_iter()
            .map(|m| match m {
                RawMember::Star { d } => Forbidden::star(d),
                RawMember::Cycle { len } => Forbidden::cycle(len),
                RawMember::AllTrees { t } => Forbidden::all_trees(t),
                RawMember::Flower { lengths } => Forbidden::flower(&lengths),
                RawMember::Explicit { graph } => Ok(Forbidden::Explicit(read_graph(&graph)?)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ForbiddenFamily { members })
    }
}

impl From<ForbiddenFamily> for RawFamily {
    fn from(fam: ForbiddenFamily) -> Self {
        let members = fam
            .members
            .into_iter()
            .map(|m| match m {
                Forbidden::Star(d) => RawMember::Star { d },
                Forbidden::CycleExact(len) => RawMember::Cycle { len },
                Forbidden::AllTrees(t) => RawMember::AllTrees { t },
                Forbidden::Flower(lengths) => RawMember::Flower { lengths },
                Forbidden::Explicit(g) => RawMember::Explicit {
                    graph: write_graph(&g),
                },
            })
            .collect();
        RawFamily { members }
    }
}

/// A flower graph as produced by the hitting-set generator: petal cycles that
/// pairwise share only the center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowerHost {
    pub graph: Graph,
    pub center: usize,
    pub petals: Vec<Petal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Petal {
    /// Universe element this petal stands for.
    pub element: usize,
    /// Number of vertices (= number of edges) on the petal cycle.
    pub length: usize,
    /// Petal edges, sorted.
    pub edges: Vec<Edge>,
}

impl FlowerHost {
    pub fn petal_of_length(&self, length: usize) -> Option<&Petal> {
        self.petals.iter().find(|p| p.length == length)
    }
}

pub fn contains_star(g: &Graph, d: usize) -> bool {
    g.max_degree() >= d
}

/// Some tree on `t` vertices is a subgraph iff some component has at least `t` vertices.
pub fn contains_tree_family(g: &Graph, t: usize) -> bool {
    if t <= 1 {
        return g.vertex_count() >= t;
    }
    connected_components(g).iter().any(|c| c.len() >= t)
}

/// Decides flower containment on a subgraph of a tagged flower host.
///
/// Every simple cycle of the host is one petal and petals meet only at the
/// center, so the flower with these petal lengths is present exactly when
/// every corresponding petal is still intact.
pub fn contains_flower(g: &Graph, host: &FlowerHost, lengths: &[usize]) -> Result<bool, CheckError> {
    if g.vertex_count() != host.graph.vertex_count()
        || g.edges().iter().any(|&(u, v)| !host.graph.has_edge(u, v))
    {
        return Err(CheckError::NotFlowerHost);
    }
    Ok(lengths.iter().all(|&len| match host.petal_of_length(len) {
        Some(p) => p.edges.iter().all(|&(u, v)| g.has_edge(u, v)),
        None => false,
    }))
}

/// True iff `g` has a simple cycle on exactly `len` vertices.
///
/// The search runs on the 2-core with every maximal chain of degree-2
/// vertices contracted into one weighted edge. Anchors (branch vertices) are
/// taken in ascending degree order; each anchor's cycles are enumerated by
/// depth-first path extension, pruning any extension whose length plus the
/// shortest-path distance back to the anchor overshoots `len`. The anchor is
/// then removed, so each cycle is only searched from its first anchor.
pub fn contains_cycle_exact(g: &Graph, len: usize) -> bool {
    if len < 3 || len > g.vertex_count() {
        return false;
    }
    let Some(chains) = ChainGraph::build(g, len) else {
        return true;
    };
    chains.has_cycle_of_weight(len)
}

/// The 2-core of a graph with degree-2 chains contracted.
struct ChainGraph {
    /// (neighbor, weight, chain id) per branch vertex
    adj: Vec<Vec<(usize, usize, usize)>>,
}

impl ChainGraph {
    /// Returns `None` if a cycle of length `len` was already spotted while
    /// contracting (a pure cycle component or a chain closing on itself).
    fn build(g: &Graph, len: usize) -> Option<Self> {
        let n = g.vertex_count();
        let mut alive = vec![true; n];
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < 2).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &y in g.neighbors(v) {
                if alive[y] {
                    deg[y] -= 1;
                    if deg[y] < 2 {
                        stack.push(y);
                    }
                }
            }
        }

        let mut branch_id = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if alive[v] && deg[v] >= 3 {
                branch_id[v] = count;
                count += 1;
            }
        }
        let mut adj = vec![Vec::new(); count];
        let mut walked = vec![false; n];
        let mut next_chain = 0;
        for a in 0..n {
            if branch_id[a] == usize::MAX {
                continue;
            }
            for &x in g.neighbors(a) {
                if !alive[x] {
                    continue;
                }
                let (end, weight) = if branch_id[x] != usize::MAX {
                    if x < a {
                        continue;
                    }
                    (x, 1)
                } else {
                    if walked[x] {
                        continue;
                    }
                    let (mut prev, mut cur, mut w) = (a, x, 1);
                    loop {
                        walked[cur] = true;
                        let next = g
                            .neighbors(cur)
                            .iter()
                            .copied()
                            .find(|&y| alive[y] && y != prev)
                            .expect("2-core vertex has two live neighbors");
                        w += 1;
                        if branch_id[next] != usize::MAX {
                            break (next, w);
                        }
                        prev = cur;
                        cur = next;
                    }
                };
                if end == a {
                    if weight == len {
                        return None;
                    }
                    continue;
                }
                let (ia, ib) = (branch_id[a], branch_id[end]);
                adj[ia].push((ib, weight, next_chain));
                adj[ib].push((ia, weight, next_chain));
                next_chain += 1;
            }
        }

        // Components of the 2-core without a branch vertex are plain cycles.
        for v in 0..n {
            if !alive[v] || walked[v] || branch_id[v] != usize::MAX {
                continue;
            }
            let mut size = 0;
            let mut stack = vec![v];
            walked[v] = true;
            while let Some(x) = stack.pop() {
                size += 1;
                for &y in g.neighbors(x) {
                    if alive[y] && !walked[y] {
                        walked[y] = true;
                        stack.push(y);
                    }
                }
            }
            if size == len {
                return None;
            }
        }
        Some(ChainGraph { adj })
    }

    fn has_cycle_of_weight(&self, len: usize) -> bool {
        let b = self.adj.len();
        let mut order: Vec<usize> = (0..b).collect();
        order.sort_by_key(|&v| (self.adj[v].len(), v));
        let mut removed = vec![false; b];
        let mut on_path = vec![false; b];
        for &anchor in &order {
            let dist = self.distances(anchor, &removed);
            on_path[anchor] = true;
            let found = self.extend(anchor, anchor, usize::MAX, 0, len, &dist, &removed, &mut on_path);
            on_path[anchor] = false;
            if found {
                return true;
            }
            removed[anchor] = true;
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        anchor: usize,
        at: usize,
        first_chain: usize,
        walked: usize,
        len: usize,
        dist: &[usize],
        removed: &[bool],
        on_path: &mut [bool],
    ) -> bool {
        for &(y, w, id) in &self.adj[at] {
            if removed[y] {
                continue;
            }
            let total = walked + w;
            if y == anchor {
                if total == len && id != first_chain {
                    return true;
                }
                continue;
            }
            if on_path[y] || dist[y] == usize::MAX || total + dist[y] > len {
                continue;
            }
            on_path[y] = true;
            let first = if at == anchor { id } else { first_chain };
            let found = self.extend(anchor, y, first, total, len, dist, removed, on_path);
            on_path[y] = false;
            if found {
                return true;
            }
        }
        false
    }

    fn distances(&self, source: usize, removed: &[bool]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut heap = BinaryHeap::new();
        dist[source] = 0;
        heap.push(Reverse((0usize, source)));
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            for &(y, w, _) in &self.adj[v] {
                if removed[y] {
                    continue;
                }
                let nd = d + w;
                if nd < dist[y] {
                    dist[y] = nd;
                    heap.push(Reverse((nd, y)));
                }
            }
        }
        dist
    }
}

/// Is `pattern` isomorphic to a (not necessarily induced) subgraph of `host`?
/// Patterns above [`MAX_PATTERN_VERTICES`] are refused.
pub fn subgraph_isomorphic(pattern: &Graph, host: &Graph) -> Result<bool, CheckError> {
    subgraph_isomorphic_bounded(pattern, host, MAX_PATTERN_VERTICES)
}

/// [`subgraph_isomorphic`] with an explicit pattern-size guard.
pub fn subgraph_isomorphic_bounded(
    pattern: &Graph,
    host: &Graph,
    max_pattern: usize,
) -> Result<bool, CheckError> {
    let p = pattern.vertex_count();
    if p > max_pattern {
        return Err(CheckError::PatternTooLarge {
            vertices: p,
            limit: max_pattern,
        });
    }
    if p > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(false);
    }
    let order = match_order(pattern);
    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; host.vertex_count()];
    Ok(match_from(pattern, host, &order, 0, &mut map, &mut used))
}

/// Pattern vertices ordered so that each one (after the first of its
/// component) has as many already-placed neighbors as possible.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let p = pattern.vertex_count();
    let mut placed = vec![false; p];
    let mut links = vec![0usize; p];
    let mut order = Vec::with_capacity(p);
    for _ in 0..p {
        let next = (0..p)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &y in pattern.neighbors(next) {
            links[y] += 1;
        }
    }
    order
}

fn match_from(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&pv) = order.get(depth) else {
        return true;
    };
    let anchor = pattern
        .neighbors(pv)
        .iter()
        .find(|&&q| map[q] != usize::MAX)
        .map(|&q| map[q]);
    let candidates: Vec<usize> = match anchor {
        Some(h) => host.neighbors(h).to_vec(),
        None => (0..host.vertex_count()).collect(),
    };
    for hv in candidates {
        if used[hv] || host.degree(hv) < pattern.degree(pv) {
            continue;
        }
        let consistent = pattern
            .neighbors(pv)
            .iter()
            .all(|&q| map[q] == usize::MAX || host.has_edge(map[q], hv));
        if !consistent {
            continue;
        }
        map[pv] = hv;
        used[hv] = true;
        if match_from(pattern, host, order, depth + 1, map, used) {
            return true;
        }
        map[pv] = usize::MAX;
        used[hv] = false;
    }
    false
}

/// Evaluates a family against graphs, optionally with a flower host in scope.
#[derive(Debug, Clone, Copy)]
pub struct FamilyChecker<'a> {
    family: &'a ForbiddenFamily,
    flower_host: Option<&'a FlowerHost>,
}

impl<'a> FamilyChecker<'a> {
    pub fn new(family: &'a ForbiddenFamily) -> Self {
        FamilyChecker {
            family,
            flower_host: None,
        }
    }

    pub fn with_flower_host(family: &'a ForbiddenFamily, host: &'a FlowerHost) -> Self {
        FamilyChecker {
            family,
            flower_host: Some(host),
        }
    }

    pub fn family(&self) -> &'a ForbiddenFamily {
        self.family
    }

    /// Index of the first member found in `g`, if any.
    pub fn first_violation(&self, g: &Graph) -> Result<Option<usize>, CheckError> {
        for (i, m) in self.family.members().iter().enumerate() {
            let hit = match m {
                Forbidden::Star(d) => contains_star(g, *d),
                Forbidden::CycleExact(l) => contains_cycle_exact(g, *l),
                Forbidden::AllTrees(t) => contains_tree_family(g, *t),
                Forbidden::Flower(lengths) => {
                    let host = self.flower_host.ok_or(CheckError::FlowerHostMissing)?;
                    contains_flower(g, host, lengths)?
                }
                Forbidden::Explicit(p) => subgraph_isomorphic(p, g)?,
            };
            if hit {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn is_free(&self, g: &Graph) -> Result<bool, CheckError> {
        Ok(self.first_violation(g)?.is_none())
    }
}

/// True iff `g` contains no member of `family`.
pub fn family_free(g: &Graph, family: &ForbiddenFamily) -> Result<bool, CheckError> {
    FamilyChecker::new(family).is_free(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> Graph {
        Graph::new(4, [(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn star_examples() {
        assert!(contains_star(&Graph::star(3), 3));
        assert!(!contains_star(&Graph::cycle(5), 3));
        assert!(contains_star(&Graph::complete(4), 3));
        assert!(subgraph_isomorphic(&Graph::star(3), &Graph::complete(4)).unwrap());
    }

    #[test]
    fn cycle_examples() {
        assert!(contains_cycle_exact(&Graph::complete(4), 4));
        assert!(subgraph_isomorphic(&Graph::cycle(4), &Graph::complete(4)).unwrap());
        assert!(!contains_cycle_exact(&Graph::cycle(5), 4));
        assert!(contains_cycle_exact(&Graph::cycle(5), 5));
        assert!(!subgraph_isomorphic(&Graph::cycle(3), &Graph::cycle(6)).unwrap());
    }

    #[test]
    fn cycle_through_parallel_chains() {
        // two vertices joined by three internally disjoint paths of lengths 2, 3, 4
        let g = Graph::new(
            8,
            [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        for (len, expect) in [(3, false), (4, false), (5, true), (6, true), (7, true), (8, false)] {
            assert_eq!(contains_cycle_exact(&g, len), expect, "len {len}");
        }
    }

    #[test]
    fn cycle_with_pendant_trees_and_disjoint_cycles() {
        // C4 on 0..4, a tail 3-4-5, and a separate C5 on 6..11
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5)];
        edges.extend([(6, 7), (7, 8), (8, 9), (9, 10), (6, 10)]);
        let g = Graph::new(11, edges).unwrap();
        assert!(contains_cycle_exact(&g, 4));
        assert!(contains_cycle_exact(&g, 5));
        assert!(!contains_cycle_exact(&g, 3));
        assert!(!contains_cycle_exact(&g, 6));
    }

    #[test]
    fn tree_family_examples() {
        assert!(!contains_tree_family(&Graph::path(5), 6));
        assert!(contains_tree_family(&Graph::path(5), 3));
        assert!(!contains_tree_family(&two_edges(), 3));
        // the only trees on 3 vertices are paths
        assert!(!subgraph_isomorphic(&Graph::path(3), &two_edges()).unwrap());
    }

    #[test]
    fn family_free_examples() {
        let cap2 = ForbiddenFamily::component_cap(2);
        assert!(!family_free(&Graph::path(5), &cap2).unwrap());
        assert!(family_free(&two_edges(), &cap2).unwrap());
        let fam = ForbiddenFamily::new(vec![Forbidden::Star(3), Forbidden::CycleExact(5)]).unwrap();
        assert!(!family_free(&Graph::cycle(5), &fam).unwrap());
        assert_eq!(
            FamilyChecker::new(&fam).first_violation(&Graph::cycle(5)),
            Ok(Some(1))
        );
    }

    #[test]
    fn subgraph_examples() {
        let single = Graph::path(2);
        assert!(subgraph_isomorphic(&single, &Graph::path(4)).unwrap());
        assert!(!subgraph_isomorphic(&single, &Graph::empty(4)).unwrap());
        assert_eq!(
            subgraph_isomorphic(&Graph::path(13), &Graph::path(20)),
            Err(CheckError::PatternTooLarge {
                vertices: 13,
                limit: 12
            })
        );
    }

    #[test]
    fn descriptor_validation() {
        assert_eq!(Forbidden::star(0), Err(FamilyError::Star(0)));
        assert_eq!(Forbidden::cycle(2), Err(FamilyError::Cycle(2)));
        assert_eq!(Forbidden::all_trees(1), Err(FamilyError::Trees(1)));
        assert!(Forbidden::flower(&[4, 4]).is_err());
        assert!(Forbidden::flower(&[]).is_err());
        assert!(Forbidden::flower(&[2]).is_err());
        assert_eq!(Forbidden::flower(&[6, 4]), Ok(Forbidden::Flower(vec![4, 6])));
        assert!(ForbiddenFamily::new(vec![Forbidden::Star(0)]).is_err());
    }

    #[test]
    fn family_json() {
        let text = r#"{"members":[{"kind":"star","d":5},{"kind":"cycle","L":32},{"kind":"all_trees","t":4},{"kind":"flower","lengths":[4,6]},{"kind":"explicit","graph":"3 2\n0 1\n1 2\n"}]}"#;
        let fam = ForbiddenFamily::from_json(text).unwrap();
        assert_eq!(
            fam.members(),
            &[
                Forbidden::Star(5),
                Forbidden::CycleExact(32),
                Forbidden::AllTrees(4),
                Forbidden::Flower(vec![4, 6]),
                Forbidden::Explicit(Graph::path(3)),
            ]
        );
        assert_eq!(ForbiddenFamily::from_json(&fam.to_json()).unwrap(), fam);
        assert!(ForbiddenFamily::from_json(r#"{"members":[{"kind":"star","d":0}]}"#).is_err());
        assert!(ForbiddenFamily::from_json(r#"{"members":[{"kind":"blob"}]}"#).is_err());
    }

    #[test]
    fn flower_needs_host() {
        let fam = ForbiddenFamily::new(vec![Forbidden::Flower(vec![4])]).unwrap();
        assert_eq!(
            family_free(&Graph::cycle(4), &fam),
            Err(CheckError::FlowerHostMissing)
        );
    }
}
