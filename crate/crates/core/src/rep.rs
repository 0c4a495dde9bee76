//! Graded matricial representations of `L_K(E)` for finite no-exit graphs.
//!
//! Every sink contributes a block `M_k(K)(γ…)` whose shifts are the lengths
//! of the paths ending in the sink, and every cycle of length `m` contributes
//! `M_n(K[x^m,x^-m])(δ…)` whose shifts are the lengths of the paths ending at
//! the cycle's base vertex that do not run around the cycle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analysis::{entry_paths, enumerate_cycles, find_sinks, sink_paths, CycleData};
use crate::error::{AnalysisError, ShiftError};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockKind {
    /// Matrices over the trivially graded ground field `K`.
    GroundField,
    /// Matrices over `K[x^m, x^-m]` with `deg x^m = m`.
    Laurent(u32),
}

impl BlockKind {
    pub fn period(self) -> Option<i64> {
        match self {
            BlockKind::GroundField => None,
            BlockKind::Laurent(m) => Some(i64::from(m)),
        }
    }
}

/// A shifted matrix algebra `M_n(R)(s_1, …, s_n)`; `n` is the shift count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BlockRepr", into = "BlockRepr")]
pub struct ShiftBlock {
    pub kind: BlockKind,
    pub shifts: Vec<i64>,
}

impl ShiftBlock {
    pub fn new(kind: BlockKind, shifts: Vec<i64>) -> Result<Self, ShiftError> {
        if shifts.is_empty() {
            return Err(ShiftError::InvalidBlock(
                "a block needs at least one shift".into(),
            ));
        }
        if kind == BlockKind::Laurent(0) {
            return Err(ShiftError::InvalidBlock(
                "Laurent period must be positive".into(),
            ));
        }
        Ok(ShiftBlock { kind, shifts })
    }

    pub fn ground(shifts: impl Into<Vec<i64>>) -> Self {
        ShiftBlock::new(BlockKind::GroundField, shifts.into()).expect("valid ground block")
    }

    pub fn laurent(m: u32, shifts: impl Into<Vec<i64>>) -> Self {
        ShiftBlock::new(BlockKind::Laurent(m), shifts.into()).expect("valid Laurent block")
    }

    pub fn n(&self) -> usize {
        self.shifts.len()
    }
}

impl fmt::Display for ShiftBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BlockKind::GroundField => write!(f, "M_{}(K)(", self.n())?,
            BlockKind::Laurent(m) => write!(f, "M_{}(K[x^{m},x^-{m}])(", self.n())?,
        }
        for (i, s) in self.shifts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    n: usize,
    shifts: Vec<i64>,
}

impl TryFrom<BlockRepr> for ShiftBlock {
    type Error = ShiftError;

    fn try_from(r: BlockRepr) -> Result<Self, Self::Error> {
        let kind = match (r.kind.as_str(), r.m) {
            ("K", None) => BlockKind::GroundField,
            ("L", Some(m)) => BlockKind::Laurent(m),
            ("K", Some(_)) => {
                return Err(ShiftError::InvalidBlock(
                    "ground-field blocks take no `m`".into(),
                ))
            }
            ("L", None) => return Err(ShiftError::InvalidBlock("Laurent blocks need `m`".into())),
            (k, _) => {
                return Err(ShiftError::InvalidBlock(format!(
                    "unknown block kind `{k}`"
                )))
            }
        };
        if r.n != r.shifts.len() {
            return Err(ShiftError::InvalidBlock(format!(
                "n = {} but {} shifts given",
                r.n,
                r.shifts.len()
            )));
        }
        ShiftBlock::new(kind, r.shifts)
    }
}

impl From<ShiftBlock> for BlockRepr {
    fn from(b: ShiftBlock) -> Self {
        let (kind, m) = match b.kind {
            BlockKind::GroundField => ("K", None),
            BlockKind::Laurent(m) => ("L", Some(m)),
        };
        BlockRepr {
            kind: kind.to_string(),
            m,
            n: b.shifts.len(),
            shifts: b.shifts,
        }
    }
}

/// Where a block of a representation came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Provenance {
    Sink {
        vertex: String,
    },
    Cycle {
        class_id: usize,
        vertices: Vec<String>,
        base: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatricialRep {
    pub blocks: Vec<ShiftBlock>,
    /// Parallel to `blocks`; empty for representations read from a file.
    pub provenance: Vec<Provenance>,
}

impl GradedMatricialRep {
    pub fn from_blocks(blocks: Vec<ShiftBlock>) -> Self {
        GradedMatricialRep {
            blocks,
            provenance: Vec::new(),
        }
    }

    /// Parses `{"blocks":[{"kind":"K"|"L","m":int?,"n":int,"shifts":[...]}]}`.
    pub fn from_json(input: &str) -> Result<Self, ShiftError> {
        #[derive(Deserialize)]
        struct Doc {
            blocks: Vec<serde_json::Value>,
        }
        let doc: Doc =
            serde_json::from_str(input).map_err(|e| ShiftError::InvalidBlock(e.to_string()))?;
        let blocks = doc
            .blocks
            .into_iter()
            .map(|v| {
                serde_json::from_value::<ShiftBlock>(v)
                    .map_err(|e| ShiftError::InvalidBlock(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedMatricialRep::from_blocks(blocks))
    }

    /// JSON value in the rep-file format; blocks with provenance carry an
    /// extra `source` key that the parser ignores.
    pub fn to_json_value(&self) -> serde_json::Value {
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut v = serde_json::to_value(b).expect("block serializes");
                if let Some(p) = self.provenance.get(i) {
                    v["source"] = serde_json::to_value(p).expect("provenance serializes");
                }
                v
            })
            .collect();
        serde_json::json!({ "blocks": serde_json::Value::Array(blocks) })
    }

    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(ShiftBlock::n).sum()
    }
}

impl fmt::Display for GradedMatricialRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn to_shifts(lengths: Vec<usize>) -> Vec<i64> {
    lengths.into_iter().map(|l| l as i64).collect()
}

pub(crate) fn cycle_provenance(g: &Graph, c: &CycleData) -> Provenance {
    Provenance::Cycle {
        class_id: c.class_id,
        vertices: c.vertices.iter().map(|&v| g.name(v).to_string()).collect(),
        base: g.name(c.base).to_string(),
    }
}

pub fn build_rep(g: &Graph) -> Result<GradedMatricialRep, AnalysisError> {
    build_rep_with_bases(g, |c| c.base)
}

/// Same as [`build_rep`] but reads each cycle's shifts at the vertex chosen
/// by `base`, which must lie on that cycle.
pub fn build_rep_with_bases(
    g: &Graph,
    base: impl Fn(&CycleData) -> VertexId,
) -> Result<GradedMatricialRep, AnalysisError> {
    let cycles = enumerate_cycles(g)?;
    let mut blocks = Vec::new();
    let mut provenance = Vec::new();
    for s in find_sinks(g) {
        blocks.push(ShiftBlock::ground(to_shifts(sink_paths(g, s)?)));
        provenance.push(Provenance::Sink {
            vertex: g.name(s).to_string(),
        });
    }
    for c in &cycles {
        let v = base(c);
        if !c.vertices.contains(&v) {
            return Err(AnalysisError::NotOnCycle(g.name(v).to_string()));
        }
        blocks.push(ShiftBlock::laurent(
            c.len() as u32,
            to_shifts(entry_paths(g, v)?),
        ));
        provenance.push(cycle_provenance(g, c));
    }
    Ok(GradedMatricialRep { blocks, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(&str, &str)]) -> Graph {
        Graph::from_named_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn single_edge() {
        let rep = build_rep(&g(&[("v", "w")])).unwrap();
        assert_eq!(rep.blocks, [ShiftBlock::ground([0, 1])]);
        assert_eq!(rep.to_string(), "M_2(K)(0,1)");
        assert_eq!(rep.provenance, [Provenance::Sink { vertex: "w".into() }]);
    }

    #[test]
    fn tail_into_cycle() {
        let rep = build_rep(&g(&[("a", "b"), ("b", "c1"), ("c1", "c2"), ("c2", "c1")])).unwrap();
        assert_eq!(rep.blocks, [ShiftBlock::laurent(2, [0, 1, 1, 2])]);
        assert_eq!(rep.to_string(), "M_4(K[x^2,x^-2])(0,1,1,2)");
    }

    #[test]
    fn rose_has_no_rep() {
        assert!(matches!(
            build_rep(&g(&[("v", "v"), ("v", "v")])),
            Err(AnalysisError::NotNoExit { .. })
        ));
    }

    #[test]
    fn mixed_sinks_and_cycles() {
        let graph = g(&[("a", "s"), ("b", "s"), ("x", "x"), ("p", "x"), ("t", "t")]);
        let rep = build_rep(&graph).unwrap();
        assert_eq!(
            rep.blocks,
            [
                ShiftBlock::ground([0, 1, 1]),
                ShiftBlock::laurent(1, [0, 1]),
                ShiftBlock::laurent(1, [0]),
            ]
        );
        assert_eq!(rep.total_size(), 6);
        let acyclic = build_rep(&g(&[("a", "b"), ("b", "c"), ("a", "c")])).unwrap();
        assert!(acyclic
            .blocks
            .iter()
            .all(|b| b.kind == BlockKind::GroundField));
    }

    #[test]
    fn rep_file_format() {
        let rep = GradedMatricialRep::from_json(
            r#"{"blocks":[{"kind":"K","n":3,"shifts":[1,1,3]},{"kind":"L","m":2,"n":2,"shifts":[0,1]}]}"#,
        )
        .unwrap();
        assert_eq!(
            rep.blocks,
            [
                ShiftBlock::ground([1, 1, 3]),
                ShiftBlock::laurent(2, [0, 1])
            ]
        );
        let text = rep.to_json_value().to_string();
        assert_eq!(GradedMatricialRep::from_json(&text).unwrap(), rep);

        for bad in [
            r#"{"blocks":[{"kind":"K","n":2,"shifts":[1]}]}"#,
            r#"{"blocks":[{"kind":"L","n":1,"shifts":[1]}]}"#,
            r#"{"blocks":[{"kind":"L","m":0,"n":1,"shifts":[1]}]}"#,
            r#"{"blocks":[{"kind":"Q","n":1,"shifts":[1]}]}"#,
            r#"{"blocks":[{"kind":"K","n":0,"shifts":[]}]}"#,
            r#"{"nope":[]}"#,
        ] {
            assert!(GradedMatricialRep::from_json(bad).is_err(), "{bad}");
        }
    }
}
