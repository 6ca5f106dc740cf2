//! Exact solvers: exhaustive edge-subset enumeration (the reference oracle)
//! and a bounded search tree for the component-cap problem.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::forbidden::{CheckError, FamilyChecker};
use crate::graph::{edge, Edge, Graph};

/// Most candidate edge subsets the exhaustive oracle will enumerate.
pub const ENUMERATION_GUARD: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("enumeration guard exceeded: {candidates} candidate sets > {limit}")]
    GuardExceeded { candidates: u128, limit: u128 },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(usize, usize),
}

/// A set of edges to delete, sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Solution {
    pub deleted_edges: Vec<Edge>,
}

impl Solution {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut deleted_edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        deleted_edges.sort_unstable();
        deleted_edges.dedup();
        Solution { deleted_edges }
    }

    pub fn size(&self) -> usize {
        self.deleted_edges.len()
    }
}

/// Result of a search together with the number of search nodes visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub solution: Option<Solution>,
    pub nodes_expanded: u64,
}

/// True iff every deleted edge is in `g` and `g` minus them is free of the family.
pub fn verify(g: &Graph, sol: &Solution, checker: &FamilyChecker) -> Result<bool, SearchError> {
    if let Some(&(u, v)) = sol.deleted_edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(SearchError::EdgeNotInGraph(u, v));
    }
    Ok(checker.is_free(&g.without_edges(&sol.deleted_edges))?)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Minimum-size deletion set of at most `k_max` edges, found by trying every
/// edge subset in order of size and, within a size, in lexicographic order of
/// edge indices. The first hit is returned.
///
/// The guard is applied per size level: before enumerating subsets of size
/// `s`, the cumulative number of candidates through `s` must stay within
/// [`ENUMERATION_GUARD`].
pub fn brute_force_min(
    g: &Graph,
    checker: &FamilyChecker,
    k_max: usize,
) -> Result<Outcome, SearchError> {
    let m = g.edge_count();
    let k_max = k_max.min(m);
    let cap = checker.family().as_component_cap();
    let mut cumulative = 0u128;
    let mut nodes = 0u64;
    for size in 0..=k_max {
        cumulative += binomial(m, size);
        if cumulative > ENUMERATION_GUARD {
            return Err(SearchError::GuardExceeded {
                candidates: cumulative,
                limit: ENUMERATION_GUARD,
            });
        }
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            nodes += 1;
            let free = match cap {
                Some(h) => capped_without(g, &combo, h),
                None => {
                    let removed: Vec<Edge> = combo.iter().map(|&i| g.edges()[i]).collect();
                    checker.is_free(&g.without_edges(&removed))?
                }
            };
            if free {
                return Ok(Outcome {
                    solution: Some(Solution::new(combo.iter().map(|&i| g.edges()[i]))),
                    nodes_expanded: nodes,
                });
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Ok(Outcome {
        solution: None,
        nodes_expanded: nodes,
    })
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Do all components of `g` minus the edges at `removed` (sorted indices) have at most `h` vertices?
fn capped_without(g: &Graph, removed: &[usize], h: usize) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut size = vec![1usize; n];
    let mut skip = removed.iter().peekable();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if skip.peek() == Some(&&i) {
            skip.next();
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            let (big, small) = if size[a] >= size[b] { (a, b) } else { (b, a) };
            parent[small] = big;
            size[big] += size[small];
            if size[big] > h {
                return false;
            }
        }
    }
    true
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Search tree for the component-cap problem with budget `k`.
///
/// While some component has more than `h` vertices, a BFS tree on exactly
/// `h + 1` of its vertices is grown (root = smallest vertex of the first such
/// component, neighbors in ascending order). Any solution deletes one of its
/// `h` edges, so the search branches on each of them with budget `k - 1`.
/// At most `h^k` leaves are visited. Returns the first solution found.
pub fn branch_cap(g: &Graph, h: usize, k: usize) -> Outcome {
    assert!(h >= 1, "component cap must be at least 1");
    let mut state = BranchState::new(g);
    let found = state.search(h, k);
    Outcome {
        solution: found.then(|| {
            Solution::new(
                state
                    .deleted
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d)
                    .map(|(i, _)| g.edges()[i]),
            )
        }),
        nodes_expanded: state.nodes,
    }
}

/// Runs [`branch_cap`] with budgets `0, 1, …, k_max` and returns the first
/// success, which is therefore of minimum size.
pub fn branch_cap_min(g: &Graph, h: usize, k_max: usize) -> Outcome {
    let mut nodes = 0;
    for k in 0..=k_max.min(g.edge_count()) {
        let out = branch_cap(g, h, k);
        nodes += out.nodes_expanded;
        if out.solution.is_some() {
            return Outcome {
                solution: out.solution,
                nodes_expanded: nodes,
            };
        }
    }
    Outcome {
        solution: None,
        nodes_expanded: nodes,
    }
}

struct BranchState<'g> {
    g: &'g Graph,
    /// (neighbor, edge index), neighbors ascending
    adj: Vec<Vec<(usize, usize)>>,
    deleted: Vec<bool>,
    nodes: u64,
}

impl<'g> BranchState<'g> {
    fn new(g: &'g Graph) -> Self {
        let mut adj = vec![Vec::new(); g.vertex_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        BranchState {
            g,
            adj,
            deleted: vec![false; g.edge_count()],
            nodes: 0,
        }
    }

    fn search(&mut self, h: usize, budget: usize) -> bool {
        self.nodes += 1;
        let Some(tree) = self.oversized_tree(h) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        for e in tree {
            self.deleted[e] = true;
            if self.search(h, budget - 1) {
                return true;
            }
            self.deleted[e] = false;
        }
        false
    }

    /// Edge indices of a BFS tree on `h + 1` vertices inside the first
    /// component that is too large, in discovery order.
    fn oversized_tree(&self, h: usize) -> Option<Vec<usize>> {
        let n = self.g.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.clear();
            queue.push_back(root);
            let mut count = 1;
            let mut tree = Vec::with_capacity(h);
            while let Some(x) = queue.pop_front() {
                for &(y, e) in &self.adj[x] {
                    if self.deleted[e] || seen[y] {
                        continue;
                    }
                    seen[y] = true;
                    count += 1;
                    tree.push(e);
                    if count == h + 1 {
                        return Some(tree);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }
}
