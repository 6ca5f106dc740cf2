//! Exact component-cap solver parameterized by the vertex cover number.
//!
//! Fix a vertex cover `S`; the rest of the graph is an independent set whose
//! vertices fall into twin classes by neighborhood. For every partition
//! `S_1, …, S_ℓ` of `S` (the guess of how `S` splits across final
//! components) the problem becomes a small integer program: `x[i][j]` counts
//! the vertices of twin class `i` placed with block `j`, and column `ℓ`
//! holds vertices left as singletons.
//!
//! ```text
//! minimize   cr(P) + Σ_ij c[i][j] · x[i][j]       c[i][j] = |N(v_i) ∩ (S \ S_j)|
//! subject to Σ_j x[i][j] = |I_i|                  for every class i
//!            Σ_i x[i][j] + |S_j| ≤ h              for every block j < ℓ
//!            x ≥ 0, integral
//! ```
//!
//! `cr(P)` counts cover edges between different blocks. The integer program
//! is solved by depth-first branch-and-bound; the optimum over all
//! partitions is the minimum number of deletions.

use serde::Serialize;
use thiserror::Error;

use crate::exact::Solution;
use crate::graph::{edge, min_vertex_cover, twin_classes, Graph, GraphError, TwinClassification};

/// Largest cover whose partitions are enumerated.
pub const MAX_COVER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VcError {
    #[error("vertex cover of size {size} exceeds the partition guard of {limit}")]
    CoverTooLarge { size: usize, limit: usize },
    #[error("partition is not over the given cover")]
    PartitionMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A set partition of the cover, stored as a restricted-growth string over
/// the sorted cover: `rgs[i]` is the block of `cover[i]`, the first element
/// is in block 0 and each new block number is one more than the largest so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverPartition {
    cover: Vec<usize>,
    rgs: Vec<usize>,
}

impl CoverPartition {
    pub fn cover(&self) -> &[usize] {
        &self.cover
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks in order of first appearance; members ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (&v, &b) in self.cover.iter().zip(&self.rgs) {
            blocks[b].push(v);
        }
        blocks
    }

    /// Restricted-growth string with one base-36 digit per cover vertex.
    pub fn rgs_string(&self) -> String {
        self.rgs
            .iter()
            .map(|&b| char::from_digit(b as u32, 36).expect("at most 36 blocks"))
            .collect()
    }

    /// Block index of every vertex of an `n`-vertex graph (`usize::MAX` outside the cover).
    fn block_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (&v, &b) in self.cover.iter().zip(&self.rgs) {
            out[v] = b;
        }
        out
    }
}

/// Iterator over all partitions of a cover in lexicographic RGS order.
#[derive(Debug, Clone)]
pub struct Partitions {
    cover: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = CoverPartition;

    fn next(&mut self) -> Option<CoverPartition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(CoverPartition {
            cover: self.cover.clone(),
            rgs: current,
        })
    }
}

fn successor(rgs: &[usize]) -> Option<Vec<usize>> {
    let mut prefix_max = vec![0; rgs.len()];
    for i in 1..rgs.len() {
        prefix_max[i] = prefix_max[i - 1].max(rgs[i - 1]);
    }
    // position 0 is pinned to block 0
    let i = (1..rgs.len()).rev().find(|&i| rgs[i] <= prefix_max[i])?;
    let mut next = rgs.to_vec();
    next[i] += 1;
    next[i + 1..].fill(0);
    Some(next)
}

/// All set partitions of `cover` (deduplicated and sorted first), each exactly
/// once, in lexicographic restricted-growth-string order. There are `B_|cover|`.
pub fn enumerate_partitions(cover: &[usize]) -> Result<Partitions, VcError> {
    let mut cover = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    if cover.len() > MAX_COVER {
        return Err(VcError::CoverTooLarge {
            size: cover.len(),
            limit: MAX_COVER,
        });
    }
    let first = vec![0; cover.len()];
    Ok(Partitions {
        cover,
        next: Some(first),
    })
}

/// The integer program for one cover partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedCoverModel {
    pub partition: CoverPartition,
    pub twins: TwinClassification,
    /// Cover edges whose endpoints lie in different blocks.
    pub cross_count: usize,
    /// `|I_i|` per twin class.
    pub class_sizes: Vec<usize>,
    /// `h - |S_j|` for each block.
    pub capacities: Vec<usize>,
    /// `c[i][j]` for blocks `0..ℓ` plus the singleton column `ℓ`.
    pub coefficients: Vec<Vec<usize>>,
}

impl PartitionedCoverModel {
    pub fn block_count(&self) -> usize {
        self.capacities.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IpSolution {
    pub assignment: Vec<Vec<usize>>,
    pub objective: usize,
}

/// Builds the model for partition `p`. `None` if some block alone already
/// has more than `h` vertices.
pub fn build_model(
    g: &Graph,
    cover: &[usize],
    p: &CoverPartition,
    h: usize,
) -> Result<Option<PartitionedCoverModel>, VcError> {
    let twins = twin_classes(g, cover)?;
    if twins.cover != p.cover {
        return Err(VcError::PartitionMismatch);
    }
    Ok(model_for(g, &twins, p, h))
}

fn model_for(
    g: &Graph,
    twins: &TwinClassification,
    p: &CoverPartition,
    h: usize,
) -> Option<PartitionedCoverModel> {
    let blocks = p.blocks();
    if blocks.iter().any(|b| b.len() > h) {
        return None;
    }
    let block_of = p.block_of(g.vertex_count());
    let cross_count = g
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            block_of[u] != usize::MAX && block_of[v] != usize::MAX && block_of[u] != block_of[v]
        })
        .count();
    let ell = blocks.len();
    let coefficients = twins
        .classes
        .iter()
        .map(|class| {
            let mut row = vec![0; ell + 1];
            for j in 0..=ell {
                row[j] = class
                    .signature
                    .iter()
                    .filter(|&&s| block_of[s] != j)
                    .count();
            }
            row
        })
        .collect();
    Some(PartitionedCoverModel {
        partition: p.clone(),
        twins: twins.clone(),
        cross_count,
        class_sizes: twins.classes.iter().map(|c| c.members.len()).collect(),
        capacities: blocks.iter().map(|b| h - b.len()).collect(),
        coefficients,
    })
}

/// Exact minimizer of the model by depth-first branch-and-bound.
///
/// Classes are assigned in order, each class's count vector column by
/// column with values tried in ascending order, so the first optimum found is
/// the lexicographically smallest. Partial assignments are pruned when their
/// cost plus the uncapacitated cost of the remaining vertices cannot beat
/// the incumbent.
pub fn solve_model(m: &PartitionedCoverModel) -> IpSolution {
    let classes = m.class_sizes.len();
    let cheapest: Vec<usize> = m
        .coefficients
        .iter()
        .map(|row| *row.iter().min().expect("singleton column"))
        .collect();
    let mut tail = vec![0; classes + 1];
    for i in (0..classes).rev() {
        tail[i] = tail[i + 1] + m.class_sizes[i] * cheapest[i];
    }
    let mut search = IpSearch {
        m,
        tail,
        caps: m.capacities.clone(),
        x: vec![vec![0; m.block_count() + 1]; classes],
        best: None,
    };
    let first_left = m.class_sizes.first().copied().unwrap_or(0);
    search.dfs(0, 0, first_left, m.cross_count);
    let (objective, assignment) = search.best.expect("routing every vertex to singletons is feasible");
    IpSolution {
        assignment,
        objective,
    }
}

struct IpSearch<'a> {
    m: &'a PartitionedCoverModel,
    tail: Vec<usize>,
    caps: Vec<usize>,
    x: Vec<Vec<usize>>,
    best: Option<(usize, Vec<Vec<usize>>)>,
}

impl IpSearch<'_> {
    fn dfs(&mut self, class: usize, col: usize, left: usize, cost: usize) {
        let classes = self.m.class_sizes.len();
        if class == classes {
            if self.best.as_ref().map_or(true, |(b, _)| cost < *b) {
                self.best = Some((cost, self.x.clone()));
            }
            return;
        }
        let row = &self.m.coefficients[class];
        let ell = self.caps.len();
        let here = row[col..].iter().min().copied().unwrap_or(0);
        let bound = cost + left * here + self.tail[class + 1];
        if let Some((b, _)) = &self.best {
            if bound >= *b {
                return;
            }
        }
        if col == ell {
            self.x[class][col] = left;
            let cost = cost + left * row[col];
            let next_left = self.m.class_sizes.get(class + 1).copied().unwrap_or(0);
            self.dfs(class + 1, 0, next_left, cost);
            self.x[class][col] = 0;
            return;
        }
        let c = row[col];
        for v in 0..=left.min(self.caps[col]) {
            self.x[class][col] = v;
            self.caps[col] -= v;
            self.dfs(class, col + 1, left - v, cost + v * c);
            self.caps[col] += v;
        }
        self.x[class][col] = 0;
    }
}

/// Turns an optimal assignment into the deleted edge set: all cross edges,
/// plus, for every independent vertex placed with block `j`, its edges into
/// the cover outside `S_j`. Members of a class are handed out in ascending
/// order, first to block 0, then block 1, and so on.
pub fn reconstruct(
    g: &Graph,
    p: &CoverPartition,
    twins: &TwinClassification,
    sol: &IpSolution,
) -> Solution {
    let block_of = p.block_of(g.vertex_count());
    let mut deleted: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            block_of[u] != usize::MAX && block_of[v] != usize::MAX && block_of[u] != block_of[v]
        })
        .collect();
    for (class, row) in twins.classes.iter().zip(&sol.assignment) {
        let mut members = class.members.iter();
        for (j, &count) in row.iter().enumerate() {
            for &v in members.by_ref().take(count) {
                deleted.extend(
                    class
                        .signature
                        .iter()
                        .filter(|&&s| block_of[s] != j)
                        .map(|&s| edge(v, s)),
                );
            }
        }
    }
    Solution::new(deleted)
}

/// Outcome of [`solve_vc`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VcReport {
    pub solution: Solution,
    pub objective: usize,
    pub cover: Vec<usize>,
    pub partitions_tried: usize,
    pub feasible_partitions: usize,
    /// RGS of the first partition reaching the optimum.
    pub best_partition: String,
}

/// Minimum number of deletions leaving every component with at most `h`
/// vertices, with a witness. Uses the lexicographically smallest minimum
/// vertex cover; ties between partitions go to the earliest in RGS order.
pub fn solve_vc(g: &Graph, h: usize) -> Result<VcReport, VcError> {
    assert!(h >= 1, "component cap must be at least 1");
    let cover = min_vertex_cover(g, MAX_COVER).ok_or_else(|| VcError::CoverTooLarge {
        size: min_vertex_cover(g, g.vertex_count()).map_or(0, |c| c.len()),
        limit: MAX_COVER,
    })?;
    solve_with_cover(g, &cover, h)
}

/// [`solve_vc`] with a caller-supplied vertex cover (any cover, not
/// necessarily minimum).
pub fn solve_with_cover(g: &Graph, cover: &[usize], h: usize) -> Result<VcReport, VcError> {
    let twins = twin_classes(g, cover)?;
    let mut tried = 0;
    let mut feasible = 0;
    let mut best: Option<(IpSolution, PartitionedCoverModel)> = None;
    for p in enumerate_partitions(&twins.cover)? {
        tried += 1;
        let Some(model) = model_for(g, &twins, &p, h) else {
            continue;
        };
        feasible += 1;
        let ip = solve_model(&model);
        if best.as_ref().map_or(true, |(b, _)| ip.objective < b.objective) {
            best = Some((ip, model));
        }
    }
    let (ip, model) = best.expect("the all-singletons partition is always feasible");
    let solution = reconstruct(g, &model.partition, &twins, &ip);
    debug_assert_eq!(solution.size(), ip.objective);
    Ok(VcReport {
        solution,
        objective: ip.objective,
        cover: twins.cover,
        partitions_tried: tried,
        feasible_partitions: feasible,
        best_partition: model.partition.rgs_string(),
    })
}
