//! Instance generators for the two hardness reductions.
//!
//! * [`gen_mmo`] turns a weighted graph plus an outdegree bound `r` into an
//!   edge-deletion instance with family `{K_{1,Δ_w+r+1}, C_{5N+2}}` and
//!   budget `ω`, where `N = n + 3ω + 1`. An orientation with every weighted
//!   outdegree at most `r` maps to a solution via [`orientation_witness`].
//! * [`gen_hs`] turns a hitting-set instance into a flower of petal cycles
//!   (element `i` becomes a cycle of length `2i + 2` through a shared center)
//!   with one flower pattern per set.
//!
//! Small brute-force solvers for both source problems live here too, so the
//! equivalences can be checked end to end.

use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::exact::Solution;
use crate::forbidden::{FlowerHost, Forbidden, ForbiddenFamily, Petal};
use crate::graph::{edge, Edge, Graph, Orientation, WeightedGraph};

/// Largest edge count accepted by [`mmo_brute_force`].
pub const MMO_EDGE_GUARD: usize = 20;
/// Largest universe and family size accepted by the hitting-set helpers.
pub const HS_GUARD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("outdegree bound r must be at least 3, got {0}")]
    BoundTooSmall(u64),
    #[error("orientation search refuses {edges} edges (limit {limit})")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("hitting-set instance exceeds the guard of {limit}: {what} = {value}")]
    HsTooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("set {0} is empty or contains elements outside the universe")]
    BadSet(usize),
    #[error("orientation does not match the generator's input graph")]
    OrientationMismatch,
}

/// Minimum-maximum-outdegree instance: is there an orientation with every
/// weighted outdegree at most `r`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MmoInstance {
    pub graph: WeightedGraph,
    pub r: u64,
}

impl MmoInstance {
    pub fn new(graph: WeightedGraph, r: u64) -> Result<Self, ReductionError> {
        if r < 3 {
            return Err(ReductionError::BoundTooSmall(r));
        }
        Ok(MmoInstance { graph, r })
    }
}

/// The four attachment sets and the connecting paths built for one input edge `(u, v)`, `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeGadget {
    pub u: usize,
    pub v: usize,
    pub weight: u64,
    /// `u`-side red attachments (`V_uv`)
    pub near_u: Range<usize>,
    /// `u`-side blue attachments (`V'_uv`)
    pub near_u_blue: Range<usize>,
    /// `v`-side red attachments (`V_vu`)
    pub near_v: Range<usize>,
    /// `v`-side blue attachments (`V'_vu`)
    pub near_v_blue: Range<usize>,
    /// Endpoint pairs of the red paths, `u`-side first.
    pub red_pairs: Vec<(usize, usize)>,
    /// Internal vertices of each red path, in the order of `red_pairs`.
    pub red_paths: Vec<Range<usize>>,
    pub blue_pairs: Vec<(usize, usize)>,
    pub blue_paths: Vec<Range<usize>>,
}

/// Vertex bookkeeping of a generated orientation instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetLayout {
    pub original: Range<usize>,
    /// Pendant vertices of each original vertex.
    pub pendants: Vec<Range<usize>>,
    pub gadgets: Vec<EdgeGadget>,
    /// ω
    pub total_weight: u64,
    /// Δ_w
    pub max_weighted_degree: u64,
    /// N = n + 3ω + 1
    pub n_const: usize,
    pub red_len: usize,
    pub blue_len: usize,
    pub star_threshold: usize,
    pub cycle_length: usize,
    pub k: usize,
}

impl GadgetLayout {
    /// Closed-form vertex count `n + nΔ_w + 10ωN − 6ω`.
    pub fn expected_vertices(&self) -> usize {
        let n = self.original.len();
        let (w, d, big) = (self.total_weight as usize, self.max_weighted_degree as usize, self.n_const);
        n + n * d + 10 * w * big - 6 * w
    }

    /// Closed-form edge count `nΔ_w − 2ω + 10ωN`.
    pub fn expected_edges(&self) -> usize {
        let n = self.original.len();
        let (w, d, big) = (self.total_weight as usize, self.max_weighted_degree as usize, self.n_const);
        n * d + 10 * w * big - 2 * w
    }
}

/// A generated orientation-to-deletion instance.
#[derive(Debug, Clone)]
pub struct MmoReduction {
    pub graph: Graph,
    pub layout: GadgetLayout,
    pub family: ForbiddenFamily,
    pub k: usize,
}

/// Pairs `(a_i, b_i)`, then `(a_i, b_{i+1})` for `i < w`, then `(a_w, b_1)`:
/// `2w` entries. For `w = 1` the last entry repeats the first, which becomes
/// a second, parallel path.
fn pair_list(a: &Range<usize>, b: &Range<usize>) -> Vec<(usize, usize)> {
    let w = a.len();
    let mut pairs: Vec<(usize, usize)> = (0..w).map(|i| (a.start + i, b.start + i)).collect();
    pairs.extend((0..w - 1).map(|i| (a.start + i, b.start + i + 1)));
    pairs.push((a.start + w - 1, b.start));
    pairs
}

struct Builder {
    next: usize,
    edges: Vec<Edge>,
}

impl Builder {
    fn reserve(&mut self, count: usize) -> Range<usize> {
        let r = self.next..self.next + count;
        self.next += count;
        r
    }

    /// Path with `len` edges from `a` to `b` through the fresh vertices `inner`.
    fn path(&mut self, a: usize, b: usize, inner: &Range<usize>) {
        let mut prev = a;
        for x in inner.clone() {
            self.edges.push(edge(prev, x));
            prev = x;
        }
        self.edges.push(edge(prev, b));
    }
}

/// Builds the deletion instance for `inst`.
///
/// Vertex numbering: original vertices, then each vertex's pendants, then the
/// four attachment sets of every edge (in edge order), then all red-path
/// interiors, then all blue-path interiors.
pub fn gen_mmo(inst: &MmoInstance) -> MmoReduction {
    let wg = &inst.graph;
    let g = wg.graph();
    let n = g.vertex_count();
    let omega = wg.total_weight();
    let delta = wg.max_weighted_degree();
    let big_n = n + 3 * omega as usize + 1;
    let red_len = big_n;
    let blue_len = 4 * big_n - 2;

    let mut b = Builder {
        next: n,
        edges: Vec::new(),
    };
    let pendants: Vec<Range<usize>> = (0..n)
        .map(|u| {
            let r = b.reserve((delta - wg.weighted_degree(u)) as usize);
            for x in r.clone() {
                b.edges.push(edge(u, x));
            }
            r
        })
        .collect();

    let mut gadgets: Vec<EdgeGadget> = g
        .edges()
        .iter()
        .zip(wg.weights())
        .map(|(&(u, v), &w)| {
            let w_us = w as usize;
            let near_u = b.reserve(w_us);
            let near_u_blue = b.reserve(w_us);
            let near_v = b.reserve(w_us);
            let near_v_blue = b.reserve(w_us);
            for x in near_u.clone().chain(near_u_blue.clone()) {
                b.edges.push(edge(u, x));
            }
            for x in near_v.clone().chain(near_v_blue.clone()) {
                b.edges.push(edge(v, x));
            }
            EdgeGadget {
                u,
                v,
                weight: w,
                red_pairs: pair_list(&near_u, &near_v),
                blue_pairs: pair_list(&near_u_blue, &near_v_blue),
                near_u,
                near_u_blue,
                near_v,
                near_v_blue,
                red_paths: Vec::new(),
                blue_paths: Vec::new(),
            }
        })
        .collect();

    for gadget in &mut gadgets {
        for &(a, z) in &gadget.red_pairs {
            let inner = b.reserve(red_len - 1);
            b.path(a, z, &inner);
            gadget.red_paths.push(inner);
        }
    }
    for gadget in &mut gadgets {
        for &(a, z) in &gadget.blue_pairs {
            let inner = b.reserve(blue_len - 1);
            b.path(a, z, &inner);
            gadget.blue_paths.push(inner);
        }
    }

    let graph = Graph::new(b.next, b.edges).expect("gadget construction yields a simple graph");
    let star_threshold = (delta + inst.r + 1) as usize;
    let cycle_length = 5 * big_n + 2;
    let family = ForbiddenFamily::new(vec![
        Forbidden::Star(star_threshold),
        Forbidden::CycleExact(cycle_length),
    ])
    .expect("valid thresholds");
    let k = omega as usize;
    MmoReduction {
        graph,
        layout: GadgetLayout {
            original: 0..n,
            pendants,
            gadgets,
            total_weight: omega,
            max_weighted_degree: delta,
            n_const: big_n,
            red_len,
            blue_len,
            star_threshold,
            cycle_length,
            k,
        },
        family,
        k,
    }
}

/// First orientation, in lexicographic order of per-edge direction flags
/// (0 = smaller endpoint is the tail), whose weighted outdegrees are all at most `r`.
pub fn mmo_brute_force(inst: &MmoInstance) -> Result<Option<Orientation>, ReductionError> {
    let g = inst.graph.graph();
    let m = g.edge_count();
    if m > MMO_EDGE_GUARD {
        return Err(ReductionError::TooManyEdges {
            edges: m,
            limit: MMO_EDGE_GUARD,
        });
    }
    for mask in 0u32..(1u32 << m) {
        let flags: Vec<bool> = (0..m).map(|i| mask >> (m - 1 - i) & 1 == 1).collect();
        let o = Orientation::from_flags(g, &flags);
        if o.max_out_weight(&inst.graph) <= inst.r {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

/// For every arc `tail → head`, deletes the edges from `head` to its red
/// attachment set of that gadget. Total size is ω.
pub fn orientation_witness(layout: &GadgetLayout, o: &Orientation) -> Result<Solution, ReductionError> {
    if o.arcs().len() != layout.gadgets.len() {
        return Err(ReductionError::OrientationMismatch);
    }
    let mut deleted = Vec::new();
    for (gadget, &(tail, head)) in layout.gadgets.iter().zip(o.arcs()) {
        let near_head = if (tail, head) == (gadget.u, gadget.v) {
            &gadget.near_v
        } else if (tail, head) == (gadget.v, gadget.u) {
            &gadget.near_u
        } else {
            return Err(ReductionError::OrientationMismatch);
        };
        deleted.extend(near_head.clone().map(|x| edge(head, x)));
    }
    Ok(Solution::new(deleted))
}

/// Hitting set: pick at most `k` elements of `1..=universe` meeting every set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HsInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl HsInstance {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self, ReductionError> {
        if universe > HS_GUARD {
            return Err(ReductionError::HsTooLarge {
                what: "universe",
                value: universe,
                limit: HS_GUARD,
            });
        }
        if sets.len() > HS_GUARD {
            return Err(ReductionError::HsTooLarge {
                what: "sets",
                value: sets.len(),
                limit: HS_GUARD,
            });
        }
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() || s[0] < 1 || s[s.len() - 1] > universe {
                return Err(ReductionError::BadSet(i));
            }
            clean.push(s);
        }
        Ok(HsInstance {
            universe,
            sets: clean,
            k,
        })
    }
}

/// A generated hitting-set-to-deletion instance.
#[derive(Debug, Clone)]
pub struct HsReduction {
    pub host: FlowerHost,
    pub family: ForbiddenFamily,
    pub k: usize,
}

impl HsReduction {
    pub fn graph(&self) -> &Graph {
        &self.host.graph
    }
}

/// Petal length for universe element `i`.
pub fn petal_length(i: usize) -> usize {
    2 * i + 2
}

/// Center is vertex 0; petal `i` uses the next `2i + 1` vertices in order.
pub fn gen_hs(inst: &HsInstance) -> HsReduction {
    let mut next = 1;
    let mut edges = Vec::new();
    let mut petals = Vec::new();
    for i in 1..=inst.universe {
        let len = petal_length(i);
        let inner: Vec<usize> = (next..next + len - 1).collect();
        next += len - 1;
        let mut petal: Vec<Edge> = Vec::with_capacity(len);
        let mut prev = 0;
        for &x in &inner {
            petal.push(edge(prev, x));
            prev = x;
        }
        petal.push(edge(prev, 0));
        petal.sort_unstable();
        edges.extend(petal.iter().copied());
        petals.push(Petal {
            element: i,
            length: len,
            edges: petal,
        });
    }
    let graph = Graph::new(next, edges).expect("petals are edge-disjoint");
    let family = ForbiddenFamily::new(
        inst.sets
            .iter()
            .map(|s| Forbidden::Flower(s.iter().map(|&i| petal_length(i)).collect()))
            .collect(),
    )
    .expect("petal lengths are distinct and at least 4");
    HsReduction {
        host: FlowerHost {
            graph,
            center: 0,
            petals,
        },
        family,
        k: inst.k,
    }
}

/// Smallest hitting set of size at most `k`; ties go to the lexicographically
/// smallest sorted element list.
pub fn hs_brute_force(inst: &HsInstance) -> Option<Vec<usize>> {
    let n = inst.universe;
    let masks: Vec<u32> = inst
        .sets
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &i| m | 1 << (i - 1)))
        .collect();
    for size in 0..=inst.k.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let chosen = combo.iter().fold(0u32, |m, &i| m | 1 << i);
            if masks.iter().all(|&s| s & chosen != 0) {
                return Some(combo.iter().map(|&i| i + 1).collect());
            }
            if !advance(&mut combo, n) {
                break;
            }
        }
    }
    None
}

fn advance(combo: &mut [usize], n: usize) -> bool {
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

/// Deletes the smallest edge of petal `i` for every `i` in `hitting`.
pub fn hs_witness(red: &HsReduction, hitting: &[usize]) -> Solution {
    Solution::new(
        hitting
            .iter()
            .filter_map(|&i| red.host.petals.iter().find(|p| p.element == i))
            .map(|p| p.edges[0]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forbidden::{contains_flower, FamilyChecker};
    use crate::exact::verify;

    fn single_edge(w: u64, r: u64) -> MmoInstance {
        MmoInstance::new(WeightedGraph::new(2, [(0, 1, w)]).unwrap(), r).unwrap()
    }

    /// a=0, b=1, c=2, d=3 with weights ab=1, bc=3, ad=2, cd=2
    fn sample_weighted() -> WeightedGraph {
        WeightedGraph::new(4, [(0, 1, 1), (1, 2, 3), (0, 3, 2), (2, 3, 2)]).unwrap()
    }

    #[test]
    fn single_edge_counts() {
        let red = gen_mmo(&single_edge(1, 3));
        assert_eq!(red.layout.n_const, 6);
        assert_eq!(red.graph.vertex_count(), 58);
        assert_eq!(red.graph.edge_count(), 60);
        assert_eq!(red.k, 1);
        assert_eq!(
            red.family.members(),
            &[Forbidden::Star(5), Forbidden::CycleExact(32)]
        );
        assert_eq!(red.layout.expected_vertices(), 58);
        assert_eq!(red.layout.expected_edges(), 60);
        // two parallel paths of each colour between the single pair
        let gadget = &red.layout.gadgets[0];
        assert_eq!(gadget.red_pairs.len(), 2);
        assert_eq!(gadget.red_pairs[0], gadget.red_pairs[1]);
    }

    #[test]
    fn sample_constants() {
        let red = gen_mmo(&MmoInstance::new(sample_weighted(), 3).unwrap());
        assert_eq!(red.layout.total_weight, 8);
        assert_eq!(red.layout.n_const, 29);
        assert_eq!(red.layout.max_weighted_degree, 5);
        assert_eq!(red.k, 8);
        assert_eq!(
            red.family.members(),
            &[Forbidden::Star(9), Forbidden::CycleExact(147)]
        );
        assert_eq!(red.graph.vertex_count(), red.layout.expected_vertices());
        assert_eq!(red.graph.edge_count(), red.layout.expected_edges());
    }

    #[test]
    fn zero_edge_input() {
        let inst = MmoInstance::new(WeightedGraph::new(3, []).unwrap(), 3).unwrap();
        let red = gen_mmo(&inst);
        assert_eq!(red.graph, Graph::empty(3));
        assert_eq!(red.k, 0);
        let o = mmo_brute_force(&inst).unwrap().unwrap();
        assert!(orientation_witness(&red.layout, &o).unwrap().deleted_edges.is_empty());
    }

    #[test]
    fn rejects_small_r() {
        let wg = WeightedGraph::new(2, [(0, 1, 1)]).unwrap();
        assert_eq!(MmoInstance::new(wg, 2), Err(ReductionError::BoundTooSmall(2)));
    }

    #[test]
    fn orientation_search() {
        assert!(mmo_brute_force(&single_edge(1, 3)).unwrap().is_some());
        assert!(mmo_brute_force(&single_edge(4, 3)).unwrap().is_none());
        let inst = MmoInstance::new(sample_weighted(), 3).unwrap();
        let o = mmo_brute_force(&inst).unwrap().unwrap();
        assert!(o.max_out_weight(&inst.graph) <= 3);
    }

    #[test]
    fn single_edge_witness() {
        let inst = single_edge(1, 3);
        let red = gen_mmo(&inst);
        let o = Orientation::from_arcs(inst.graph.graph(), &[(0, 1)]).unwrap();
        let sol = orientation_witness(&red.layout, &o).unwrap();
        let near_v = red.layout.gadgets[0].near_v.start;
        assert_eq!(sol.deleted_edges, vec![(1, near_v)]);
        assert!(verify(&red.graph, &sol, &FamilyChecker::new(&red.family)).unwrap());
    }

    #[test]
    fn sample_witness() {
        let inst = MmoInstance::new(sample_weighted(), 3).unwrap();
        let red = gen_mmo(&inst);
        let o = Orientation::from_arcs(inst.graph.graph(), &[(0, 1), (1, 2), (3, 0), (2, 3)]).unwrap();
        let sol = orientation_witness(&red.layout, &o).unwrap();
        assert_eq!(sol.size(), 8);
        assert!(verify(&red.graph, &sol, &FamilyChecker::new(&red.family)).unwrap());
    }

    #[test]
    fn flower_host_shape() {
        let inst = HsInstance::new(3, vec![vec![1, 2]], 1).unwrap();
        let red = gen_hs(&inst);
        assert_eq!(red.graph().vertex_count(), 16);
        assert_eq!(red.graph().edge_count(), 18);
        let lengths: Vec<usize> = red.host.petals.iter().map(|p| p.length).collect();
        assert_eq!(lengths, vec![4, 6, 8]);
        assert_eq!(red.family.members(), &[Forbidden::Flower(vec![4, 6])]);
    }

    #[test]
    fn flower_containment_examples() {
        let red = gen_hs(&HsInstance::new(3, vec![], 0).unwrap());
        let host = &red.host;
        assert!(contains_flower(&host.graph, host, &[4, 6]).unwrap());
        let c1_cut = host.graph.without_edges(&[host.petals[0].edges[1]]);
        assert!(!contains_flower(&c1_cut, host, &[4]).unwrap());
        let c2_cut = host.graph.without_edges(&[host.petals[1].edges[2]]);
        assert!(contains_flower(&c2_cut, host, &[4]).unwrap());
        assert!(contains_flower(&Graph::cycle(4), host, &[4]).is_err());
    }

    #[test]
    fn hitting_set_examples() {
        let inst = HsInstance::new(3, vec![vec![1, 2], vec![2, 3]], 1).unwrap();
        assert_eq!(hs_brute_force(&inst), Some(vec![2]));
        let inst = HsInstance::new(2, vec![vec![1], vec![2]], 1).unwrap();
        assert_eq!(hs_brute_force(&inst), None);
        let inst = HsInstance::new(3, vec![], 0).unwrap();
        assert_eq!(hs_brute_force(&inst), Some(vec![]));
        assert!(HsInstance::new(3, vec![vec![]], 0).is_err());
        assert!(HsInstance::new(3, vec![vec![4]], 0).is_err());
        assert!(HsInstance::new(13, vec![], 0).is_err());
    }

    #[test]
    fn hitting_set_witnesses() {
        let inst = HsInstance::new(3, vec![vec![2], vec![1, 2]], 1).unwrap();
        let red = gen_hs(&inst);
        let sol = hs_witness(&red, &[2]);
        assert_eq!(sol.size(), 1);
        let checker = FamilyChecker::with_flower_host(&red.family, &red.host);
        assert!(verify(red.graph(), &sol, &checker).unwrap());
        assert!(hs_witness(&red, &[]).deleted_edges.is_empty());

        let inst = HsInstance::new(3, vec![vec![1], vec![3]], 2).unwrap();
        let red = gen_hs(&inst);
        let sol = hs_witness(&red, &[1, 3]);
        assert_eq!(sol.size(), 2);
        let checker = FamilyChecker::with_flower_host(&red.family, &red.host);
        assert!(verify(red.graph(), &sol, &checker).unwrap());
    }
}
