#![allow(dead_code)]

use gruler_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn graph(edges: &[(&str, &str)]) -> Graph {
    Graph::from_named_edges(edges.iter().copied()).unwrap()
}

/// Four small no-exit graphs covering each outcome of the classifier.
pub fn reference_graphs() -> [Graph; 4] {
    [
        graph(&[("v", "w")]),
        graph(&[("a", "c1"), ("c1", "c2"), ("c2", "c1")]),
        graph(&[("a", "b"), ("b", "c1"), ("c1", "c2"), ("c2", "c1")]),
        graph(&[("a", "c1"), ("c1", "c2"), ("c2", "c1"), ("d", "c2")]),
    ]
}

pub fn rose() -> Graph {
    graph(&[("v", "v"), ("v", "v")])
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Uniform random multigraph on `1..=max_v` vertices with `0..=max_e` edges.
pub fn random_graph(rng: &mut impl Rng, max_v: usize, max_e: usize) -> Graph {
    let n = rng.gen_range(1..=max_v);
    let e = rng.gen_range(0..=max_e);
    let edges: Vec<_> = (0..e)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Graph::new(names(n), edges).unwrap()
}

/// Random no-exit graph: disjoint cycles plus a DAG of tree vertices that
/// feed into later tree vertices or into cycle vertices. Vertex indices are
/// shuffled so cycle bases land anywhere.
pub fn random_no_exit_graph(rng: &mut impl Rng, max_v: usize, max_tree_out: usize) -> Graph {
    let n = rng.gen_range(1..=max_v);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let cycle_total = rng.gen_range(0..=n);
    let mut edges = Vec::new();
    let mut cycle_vertices = Vec::new();
    let mut i = 0;
    while i < cycle_total {
        let len = rng.gen_range(1..=cycle_total - i);
        let cyc = &order[i..i + len];
        for k in 0..len {
            edges.push((cyc[k], cyc[(k + 1) % len]));
        }
        cycle_vertices.extend_from_slice(cyc);
        i += len;
    }
    let tree = &order[cycle_total..];
    for (t, &v) in tree.iter().enumerate() {
        let targets: Vec<usize> = tree[t + 1..]
            .iter()
            .chain(cycle_vertices.iter())
            .copied()
            .collect();
        if targets.is_empty() {
            continue;
        }
        for _ in 0..rng.gen_range(0..=max_tree_out) {
            edges.push((v, *targets.choose(rng).unwrap()));
        }
    }
    edges.shuffle(rng);
    Graph::new(names(n), edges).unwrap()
}

/// A random isomorphic copy: shuffled vertex indices, fresh names, shuffled
/// edge order.
pub fn random_relabel(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    let fresh: Vec<String> = (0..g.vertex_count())
        .map(|i| format!("u{}", 100 + i))
        .collect();
    let mut edge_order: Vec<usize> = (0..g.edge_count()).collect();
    edge_order.shuffle(rng);
    g.relabel(&perm, &fresh, &edge_order).unwrap()
}

/// All forward paths of length `1..=max_len`, as vertex sequences.
pub fn naive_paths(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let last = *p.last().unwrap();
            for e in g.edges().iter().filter(|e| e.src == last) {
                let mut q = p.clone();
                q.push(e.dst);
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Brute-force entry path lengths at `v`: every path of length up to
/// `|V| + 1` ending at `v` in which `v` occurs only at the end, plus the
/// trivial path.
pub fn naive_entry_lengths(g: &Graph, v: usize) -> Vec<usize> {
    let mut lengths = vec![0];
    for p in naive_paths(g, g.vertex_count() + 1) {
        if *p.last().unwrap() == v && !p[..p.len() - 1].contains(&v) {
            lengths.push(p.len() - 1);
        }
    }
    lengths.sort_unstable();
    lengths
}

/// Every shift list in `{0..k}^n`.
pub fn all_shift_lists(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..k).map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}
