//! Kernelization for the component-cap problem.
//!
//! The only rule: a connected component with at most `h` vertices already
//! satisfies the cap and can be dropped without changing the answer. After
//! the rule is exhausted a yes-instance has at most `2kh` vertices and
//! `2kh² + k` edges, so exceeding either bound proves a no-instance.

use serde::Serialize;

use crate::graph::{connected_components, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Nothing decided yet; solve the reduced graph.
    Open,
    /// The reduced graph exceeds the size bounds of a yes-instance.
    NoByBounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelResult {
    /// Surviving components relabeled to contiguous ids.
    #[serde(skip)]
    pub reduced: Graph,
    /// `vertex_map[i]` is the original id of reduced vertex `i`.
    pub vertex_map: Vec<usize>,
    /// Components dropped by the rule, in original ids.
    pub removed: Vec<Vec<usize>>,
    pub k: usize,
    pub h: usize,
    pub verdict: Verdict,
}

impl KernelResult {
    /// Maps an edge of the reduced graph back to original vertex ids.
    pub fn lift_edge(&self, (u, v): (usize, usize)) -> (usize, usize) {
        crate::graph::edge(self.vertex_map[u], self.vertex_map[v])
    }
}

/// Vertex bound `2kh` on a reduced yes-instance.
pub fn vertex_bound(k: usize, h: usize) -> usize {
    2 * k * h
}

/// Edge bound `2kh² + k` on a reduced yes-instance.
pub fn edge_bound(k: usize, h: usize) -> usize {
    2 * k * h * h + k
}

/// Removes every component of size `<= h`, then applies the size bounds.
pub fn kernelize(g: &Graph, k: usize, h: usize) -> KernelResult {
    let mut result = reduce(g, h);
    result.k = k;
    if result.reduced.vertex_count() > vertex_bound(k, h)
        || result.reduced.edge_count() > edge_bound(k, h)
    {
        result.verdict = Verdict::NoByBounds;
    }
    result
}

/// Applies the component rule only; `verdict` stays open and `k` is left at 0.
/// Used when the budget is unknown (minimization mode).
pub fn reduce(g: &Graph, h: usize) -> KernelResult {
    assert!(h >= 1, "component cap must be at least 1");
    let (removed, kept): (Vec<_>, Vec<_>) = connected_components(g)
        .into_iter()
        .partition(|c| c.len() <= h);
    let mut vertex_map: Vec<usize> = kept.into_iter().flatten().collect();
    vertex_map.sort_unstable();
    KernelResult {
        reduced: g.induced(&vertex_map),
        vertex_map,
        removed,
        k: 0,
        h,
        verdict: Verdict::Open,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_plus_path() {
        // K3 on 0..3, P5 on 3..8
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend((3..7).map(|i| (i, i + 1)));
        let g = Graph::new(8, edges).unwrap();
        let r = kernelize(&g, 1, 3);
        assert_eq!(r.removed, vec![vec![0, 1, 2]]);
        assert_eq!(r.reduced, Graph::path(5));
        assert_eq!(r.vertex_map, vec![3, 4, 5, 6, 7]);
        assert_eq!(r.verdict, Verdict::Open);
        assert_eq!(r.lift_edge((0, 1)), (3, 4));
    }

    #[test]
    fn long_path_exceeds_bounds() {
        let r = kernelize(&Graph::path(10), 2, 1);
        assert!(r.removed.is_empty());
        assert_eq!(r.reduced.vertex_count(), 10);
        assert_eq!(r.verdict, Verdict::NoByBounds);
    }

    #[test]
    fn everything_small_is_removed() {
        let g = Graph::new(6, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let r = kernelize(&g, 0, 3);
        assert_eq!(r.reduced.vertex_count(), 0);
        assert_eq!(r.removed.len(), 3);
        assert_eq!(r.verdict, Verdict::Open);
    }

    #[test]
    fn idempotent() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let once = kernelize(&g, 2, 2);
        let twice = kernelize(&once.reduced, 2, 2);
        assert!(twice.removed.is_empty());
        assert_eq!(twice.reduced, once.reduced);
    }

    #[test]
    fn bounds() {
        assert_eq!(vertex_bound(2, 3), 12);
        assert_eq!(edge_bound(2, 3), 38);
        assert_eq!(edge_bound(0, 5), 0);
    }
}
