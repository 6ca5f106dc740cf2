//! Instance pools and independent oracles shared by the integration tests.
//! Nothing here calls into the solver paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use capcut_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bit index of pair (u, v), u < v, in a graph on at most 8 vertices.
fn pair_bit(u: usize, v: usize) -> u32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (b * (b - 1) / 2 + a) as u32
}

fn to_mask(g: &Graph) -> u32 {
    g.edges().iter().fold(0, |m, &(u, v)| m | 1 << pair_bit(u, v))
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let edges = (0..n)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .filter(|&(a, b)| mask & (1 << pair_bit(a, b)) != 0);
    Graph::new(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest relabeled edge mask over all vertex permutations.
fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0u32, |m, &(u, v)| m | 1 << pair_bit(p[u], p[v])))
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of graphs on exactly `n` vertices (n ≤ 7),
/// built by adding a vertex with every possible neighborhood to the (n-1)-classes.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let smaller = graph_classes(n - 1);
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for g in &smaller {
        for nb in 0u32..(1 << (n - 1)) {
            let mut edges = g.edges().to_vec();
            edges.extend((0..n - 1).filter(|&v| nb & (1 << v) != 0).map(|v| (v, n - 1)));
            seen.insert(canonical(&edges, &perms));
        }
    }
    seen.into_iter().map(|m| from_mask(n, m)).collect()
}

/// Every graph on `n` vertices appears at least once up to isomorphism (with repeats):
/// the (n-1)-classes extended by a vertex with every neighborhood.
pub fn graphs_covering(n: usize) -> Vec<Graph> {
    if n <= 7 {
        return graph_classes(n);
    }
    let smaller = graph_classes(n - 1);
    let mut out = Vec::new();
    for g in &smaller {
        for nb in 0u32..(1 << (n - 1)) {
            let mut edges = g.edges().to_vec();
            edges.extend((0..n - 1).filter(|&v| nb & (1 << v) != 0).map(|v| (v, n - 1)));
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    let comps = uf_components(g);
    comps.len() <= 1
}

/// All connected graphs on 1..=max_n vertices up to isomorphism.
pub fn connected_classes(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(graph_classes)
        .filter(is_connected)
        .collect()
}

/// Random graphs on 1..=8 vertices with at most `max_edges` edges.
pub fn random_graphs(seed: u64, count: usize, max_edges: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=8);
        let p: f64 = rng.gen_range(0.1..0.65);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if edges.len() <= max_edges {
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

/// Component partition by union-find, each sorted, ordered by smallest member.
pub fn uf_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in g.edges() {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = root(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Minimum number of edges to delete so every component has at most `h`
/// vertices, computed over vertex partitions: the optimum keeps exactly the
/// edges inside the blocks of some partition into blocks of size ≤ h.
pub fn partition_oracle(g: &Graph, h: usize) -> usize {
    fn rec(v: usize, n: usize, block: &mut [usize], sizes: &mut Vec<usize>, g: &Graph, h: usize, best: &mut usize) {
        if v == n {
            let cut = g.edges().iter().filter(|&&(a, b)| block[a] != block[b]).count();
            *best = (*best).min(cut);
            return;
        }
        for b in 0..=sizes.len() {
            if b == sizes.len() {
                sizes.push(0);
            }
            if sizes[b] < h {
                sizes[b] += 1;
                block[v] = b;
                rec(v + 1, n, block, sizes, g, h, best);
                sizes[b] -= 1;
            }
            if sizes[b] == 0 {
                sizes.pop();
            }
        }
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    rec(0, n, &mut vec![0; n], &mut Vec::new(), g, h, &mut best);
    best
}

/// All set partitions of `0..n` by recursive insertion, as sorted block lists.
pub fn recursive_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in recursive_partitions(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n - 1);
            out.push(q);
        }
        let mut q = p.clone();
        q.push(vec![n - 1]);
        out.push(q);
    }
    out
}

/// One tree per isomorphism class on `t` vertices (t ≤ 7), from Prüfer sequences.
pub fn trees(t: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&t));
    if t == 1 {
        return vec![Graph::empty(1)];
    }
    if t == 2 {
        return vec![Graph::path(2)];
    }
    let perms = permutations(t);
    let mut seen = BTreeSet::new();
    let total = t.pow((t - 2) as u32);
    for code in 0..total {
        let mut seq = Vec::with_capacity(t - 2);
        let mut c = code;
        for _ in 0..t - 2 {
            seq.push(c % t);
            c /= t;
        }
        let mut degree = vec![1; t];
        for &x in &seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(t - 1);
        for &x in &seq {
            let leaf = (0..t).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..t).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        seen.insert(canonical(&edges, &perms));
    }
    seen.into_iter().map(|m| from_mask(t, m)).collect()
}

/// Flower pattern: cycles of the given lengths sharing vertex 0.
pub fn flower_pattern(lengths: &[usize]) -> Graph {
    let mut next = 1;
    let mut edges = Vec::new();
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0));
    }
    Graph::new(next, edges).unwrap()
}

/// Simple stopwatch returning elapsed seconds.
pub fn seconds_since(start: std::time::Instant) -> f64 {
    start.elapsed().as_secs_f64()
}
