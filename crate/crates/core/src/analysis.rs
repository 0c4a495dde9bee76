//! Structural predicates and path-length enumeration: sinks, cycles, exits,
//! and the equal-distribution condition on entry path lengths of cycles.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::error::AnalysisError;
use crate::graph::{EdgeId, Graph, VertexId};

/// A cycle of a no-exit graph, reported once per rotation class and rooted
/// at its least vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleData {
    /// Edge sequence starting at `base`.
    pub edges: Vec<EdgeId>,
    /// `vertices[k]` is the source of `edges[k]`; `vertices[0] == base`.
    pub vertices: Vec<VertexId>,
    pub base: VertexId,
    pub class_id: usize,
}

impl CycleData {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Counts of path lengths by residue class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueCounts {
    pub modulus: usize,
    pub counts: Vec<usize>,
}

impl ResidueCounts {
    pub fn from_lengths(modulus: usize, lengths: &[usize]) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let mut counts = vec![0; modulus];
        for &l in lengths {
            counts[l % modulus] += 1;
        }
        ResidueCounts { modulus, counts }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }

    /// True if `other` is a cyclic rotation of `self`.
    pub fn is_rotation_of(&self, other: &ResidueCounts) -> bool {
        self.modulus == other.modulus
            && (0..self.modulus).any(|r| {
                (0..self.modulus).all(|i| self.counts[i] == other.counts[(i + r) % self.modulus])
            })
    }
}

pub fn find_sinks(g: &Graph) -> Vec<VertexId> {
    (0..g.vertex_count())
        .filter(|&v| g.out_degree(v) == 0)
        .collect()
}

/// Sinks with in-degree at least one.
pub fn receiving_sinks(g: &Graph) -> Vec<VertexId> {
    find_sinks(g)
        .into_iter()
        .filter(|&v| g.in_degree(v) > 0)
        .collect()
}

/// Vertices in a strongly connected component that contains an edge
/// (a self-loop counts).
pub fn cycle_vertices(g: &Graph) -> Vec<VertexId> {
    let mut pg = DiGraph::<(), ()>::with_capacity(g.vertex_count(), g.edge_count());
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for e in g.edges() {
        pg.add_edge(nodes[e.src], nodes[e.dst], ());
    }
    let mut on_cycle = vec![false; g.vertex_count()];
    for scc in tarjan_scc(&pg) {
        let nontrivial = scc.len() > 1 || {
            let v = scc[0].index();
            g.edges().iter().any(|e| e.src == v && e.dst == v)
        };
        if nontrivial {
            for n in scc {
                on_cycle[n.index()] = true;
            }
        }
    }
    (0..g.vertex_count()).filter(|&v| on_cycle[v]).collect()
}

pub fn is_acyclic(g: &Graph) -> bool {
    cycle_vertices(g).is_empty()
}

/// The least-index cycle vertex emitting more than one edge, if any.
pub fn exit_vertex(g: &Graph) -> Option<VertexId> {
    cycle_vertices(g)
        .into_iter()
        .find(|&v| g.out_degree(v) != 1)
}

pub fn is_no_exit(g: &Graph) -> bool {
    exit_vertex(g).is_none()
}

fn require_no_exit(g: &Graph) -> Result<(), AnalysisError> {
    match exit_vertex(g) {
        None => Ok(()),
        Some(v) => Err(AnalysisError::NotNoExit {
            exit_vertex: g.name(v).to_string(),
            out_degree: g.out_degree(v),
        }),
    }
}

/// All cycles of a no-exit graph, in order of their least vertex.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<CycleData>, AnalysisError> {
    require_no_exit(g)?;
    let mut visited = vec![false; g.vertex_count()];
    let mut cycles = Vec::new();
    for base in cycle_vertices(g) {
        if visited[base] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut v = base;
        loop {
            visited[v] = true;
            vertices.push(v);
            let e = g.out_edges(v)?[0];
            edges.push(e);
            v = g.edge(e).dst;
            if v == base {
                break;
            }
        }
        cycles.push(CycleData {
            edges,
            vertices,
            base,
            class_id: cycles.len(),
        });
    }
    Ok(cycles)
}

/// Lengths of all paths ending at `target` in which `target` occurs only as
/// the final vertex, found by reverse depth-first search. Terminates only
/// when no other cycle is backward-reachable from `target`, which no-exit
/// guarantees.
fn reverse_path_lengths(g: &Graph, target: VertexId) -> Vec<usize> {
    let mut lengths = Vec::new();
    let mut stack = vec![(target, 0usize)];
    while let Some((v, len)) = stack.pop() {
        lengths.push(len);
        for &e in g.in_adj(v) {
            let src = g.edge(e).src;
            if src != target {
                stack.push((src, len + 1));
            }
        }
    }
    lengths.sort_unstable();
    lengths
}

/// Lengths of the paths ending at cycle vertex `v` that do not contain the
/// cycle, i.e. in which `v` occurs once. Sorted ascending; includes the
/// trivial path.
pub fn entry_paths(g: &Graph, v: VertexId) -> Result<Vec<usize>, AnalysisError> {
    require_no_exit(g)?;
    g.out_edges(v)?;
    if !cycle_vertices(g).contains(&v) {
        return Err(AnalysisError::NotOnCycle(g.name(v).to_string()));
    }
    Ok(reverse_path_lengths(g, v))
}

/// Lengths of all paths ending at sink `s`, sorted ascending.
pub fn sink_paths(g: &Graph, s: VertexId) -> Result<Vec<usize>, AnalysisError> {
    require_no_exit(g)?;
    if !g.out_edges(s)?.is_empty() {
        return Err(AnalysisError::NotASink(g.name(s).to_string()));
    }
    Ok(reverse_path_lengths(g, s))
}

/// Residue counts of entry path lengths at `base` modulo the cycle length.
pub fn residues_at(
    g: &Graph,
    cycle: &CycleData,
    base: VertexId,
) -> Result<ResidueCounts, AnalysisError> {
    let lengths = entry_paths(g, base)?;
    Ok(ResidueCounts::from_lengths(cycle.len(), &lengths))
}

/// Equal-distribution check for one cycle, evaluated at its canonical base.
pub fn edl_check(g: &Graph, cycle: &CycleData) -> Result<(bool, ResidueCounts), AnalysisError> {
    let counts = residues_at(g, cycle, cycle.base)?;
    Ok((counts.is_balanced(), counts))
}

/// The first clause of the graded unit-regularity condition that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Condition2Failure {
    ExitVertex {
        vertex: String,
        out_degree: usize,
    },
    ReceivingSink {
        sink: String,
        in_degree: usize,
    },
    UnbalancedCycle {
        cycle: Vec<String>,
        base: String,
        residues: ResidueCounts,
    },
}

/// No-exit, no sink receives an edge, and every cycle has equally
/// distributed entry path lengths. Returns the first failing clause.
pub fn condition2_check(g: &Graph) -> (bool, Option<Condition2Failure>) {
    if let Some(v) = exit_vertex(g) {
        let failure = Condition2Failure::ExitVertex {
            vertex: g.name(v).to_string(),
            out_degree: g.out_degree(v),
        };
        return (false, Some(failure));
    }
    if let Some(&s) = receiving_sinks(g).first() {
        let failure = Condition2Failure::ReceivingSink {
            sink: g.name(s).to_string(),
            in_degree: g.in_degree(s),
        };
        return (false, Some(failure));
    }
    let cycles = enumerate_cycles(g).expect("graph checked no-exit");
    for cycle in &cycles {
        let (ok, residues) = edl_check(g, cycle).expect("graph checked no-exit");
        if !ok {
            let failure = Condition2Failure::UnbalancedCycle {
                cycle: cycle
                    .vertices
                    .iter()
                    .map(|&v| g.name(v).to_string())
                    .collect(),
                base: g.name(cycle.base).to_string(),
                residues,
            };
            return (false, Some(failure));
        }
    }
    (true, None)
}
