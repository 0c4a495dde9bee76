//! Property report for `L_K(E)` of a finite graph `E`.
//!
//! The fifteen properties fall into four equivalence classes, each decided by
//! one graph predicate:
//!
//! | class | properties | holds iff |
//! |---|---|---|
//! | graded UR | UR_gr, sr_gr = 1, IC_gr | no-exit, no receiving sink, equal entry-length residues |
//! | no-exit | weak UR_gr, DF_gr, IC, C, DF | every cycle vertex emits one edge |
//! | acyclic | UR, Reg, sr = 1 | no cycles |
//! | always | Reg_gr, UR_ε, S_gr, graded cancellable | any finite graph |
//!
//! with graded UR ⇒ no-exit ⇐ acyclic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::{condition2_check, cycle_vertices, exit_vertex, Condition2Failure};
use crate::graph::Graph;
use crate::rep::{build_rep, GradedMatricialRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    GradedUnitRegular,
    GradedStableRange1,
    GradedInternalCancellation,
    WeakGradedUnitRegular,
    GradedDirectlyFinite,
    InternalCancellation,
    Cancellation,
    DirectlyFinite,
    UnitRegular,
    Regular,
    StableRange1,
    GradedRegular,
    UrEpsilon,
    GradedSubstitution,
    GradedCancellable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyClass {
    GradedUnitRegular,
    NoExit,
    Acyclic,
    Always,
}

impl PropertyClass {
    pub const ALL: [PropertyClass; 4] = [
        PropertyClass::GradedUnitRegular,
        PropertyClass::NoExit,
        PropertyClass::Acyclic,
        PropertyClass::Always,
    ];

    pub fn justification(self) -> &'static str {
        match self {
            PropertyClass::GradedUnitRegular => {
                "equivalent to: no-exit, no sink receives an edge, and for every cycle of length m \
                 the lengths of entry paths at a cycle vertex are equally distributed modulo m"
            }
            PropertyClass::NoExit => "equivalent to: every cycle vertex emits exactly one edge",
            PropertyClass::Acyclic => "equivalent to: the graph has no cycles",
            PropertyClass::Always => "holds for the Leavitt path algebra of every finite graph",
        }
    }

    pub fn members(self) -> &'static [Property] {
        use Property::*;
        match self {
            PropertyClass::GradedUnitRegular => &[
                GradedUnitRegular,
                GradedStableRange1,
                GradedInternalCancellation,
            ],
            PropertyClass::NoExit => &[
                WeakGradedUnitRegular,
                GradedDirectlyFinite,
                InternalCancellation,
                Cancellation,
                DirectlyFinite,
            ],
            PropertyClass::Acyclic => &[UnitRegular, Regular, StableRange1],
            PropertyClass::Always => &[
                GradedRegular,
                UrEpsilon,
                GradedSubstitution,
                GradedCancellable,
            ],
        }
    }
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::GradedUnitRegular,
        Property::GradedStableRange1,
        Property::GradedInternalCancellation,
        Property::WeakGradedUnitRegular,
        Property::GradedDirectlyFinite,
        Property::InternalCancellation,
        Property::Cancellation,
        Property::DirectlyFinite,
        Property::UnitRegular,
        Property::Regular,
        Property::StableRange1,
        Property::GradedRegular,
        Property::UrEpsilon,
        Property::GradedSubstitution,
        Property::GradedCancellable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::GradedUnitRegular => "graded_unit_regular",
            Property::GradedStableRange1 => "graded_stable_range_1",
            Property::GradedInternalCancellation => "graded_internal_cancellation",
            Property::WeakGradedUnitRegular => "weak_graded_unit_regular",
            Property::GradedDirectlyFinite => "graded_directly_finite",
            Property::InternalCancellation => "internal_cancellation",
            Property::Cancellation => "cancellation",
            Property::DirectlyFinite => "directly_finite",
            Property::UnitRegular => "unit_regular",
            Property::Regular => "regular",
            Property::StableRange1 => "stable_range_1",
            Property::GradedRegular => "graded_regular",
            Property::UrEpsilon => "ur_epsilon",
            Property::GradedSubstitution => "graded_substitution",
            Property::GradedCancellable => "graded_cancellable",
        }
    }

    pub fn class(self) -> PropertyClass {
        PropertyClass::ALL
            .into_iter()
            .find(|c| c.members().contains(&self))
            .expect("every property has a class")
    }
}

/// Evidence for a false verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Condition2(Condition2Failure),
    CycleVertex {
        reason: &'static str,
        vertex: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub verdicts: BTreeMap<Property, bool>,
    pub witnesses: BTreeMap<PropertyClass, Witness>,
    /// Present iff the graph is no-exit.
    pub rep: Option<GradedMatricialRep>,
}

impl PropertyReport {
    pub fn get(&self, p: Property) -> bool {
        self.verdicts[&p]
    }

    pub fn class_verdict(&self, c: PropertyClass) -> bool {
        self.get(c.members()[0])
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let verdicts: serde_json::Map<String, serde_json::Value> = self
            .verdicts
            .iter()
            .map(|(p, v)| (p.name().to_string(), (*v).into()))
            .collect();
        let classes: serde_json::Map<String, serde_json::Value> = PropertyClass::ALL
            .iter()
            .map(|&c| {
                let key = serde_json::to_value(c)
                    .unwrap()
                    .as_str()
                    .unwrap()
                    .to_string();
                let mut entry = serde_json::json!({
                    "holds": self.class_verdict(c),
                    "justification": c.justification(),
                    "properties": c.members().iter().map(|p| p.name()).collect::<Vec<_>>(),
                });
                if let Some(w) = self.witnesses.get(&c) {
                    entry["witness"] = serde_json::to_value(w).unwrap();
                }
                (key, entry)
            })
            .collect();
        serde_json::json!({
            "verdicts": verdicts,
            "classes": classes,
            "rep": self.rep.as_ref().map(GradedMatricialRep::to_json_value),
        })
    }
}

pub fn classify(g: &Graph) -> PropertyReport {
    let (condition2, failure) = condition2_check(g);
    let exit = exit_vertex(g);
    let no_exit = exit.is_none();
    let first_cycle_vertex = cycle_vertices(g).first().copied();
    let acyclic = first_cycle_vertex.is_none();

    let mut witnesses = BTreeMap::new();
    if let Some(f) = failure {
        witnesses.insert(PropertyClass::GradedUnitRegular, Witness::Condition2(f));
    }
    if let Some(v) = exit {
        witnesses.insert(
            PropertyClass::NoExit,
            Witness::Condition2(Condition2Failure::ExitVertex {
                vertex: g.name(v).to_string(),
                out_degree: g.out_degree(v),
            }),
        );
    }
    if let Some(v) = first_cycle_vertex {
        witnesses.insert(
            PropertyClass::Acyclic,
            Witness::CycleVertex {
                reason: "cycle_vertex",
                vertex: g.name(v).to_string(),
            },
        );
    }

    let class_value = |c: PropertyClass| match c {
        PropertyClass::GradedUnitRegular => condition2,
        PropertyClass::NoExit => no_exit,
        PropertyClass::Acyclic => acyclic,
        PropertyClass::Always => true,
    };
    let verdicts = Property::ALL
        .iter()
        .map(|&p| (p, class_value(p.class())))
        .collect();
    let rep = no_exit.then(|| build_rep(g).expect("no-exit graphs have a representation"));
    PropertyReport {
        verdicts,
        witnesses,
        rep,
    }
}

/// Checks the implication diagram on a report: equal verdicts within each
/// class, graded UR ⇒ no-exit class, acyclic class ⇒ no-exit class, and
/// graded UR ⇒ graded cancellable.
pub fn check_diagram(r: &PropertyReport) -> Result<(), String> {
    for c in PropertyClass::ALL {
        let v = r.class_verdict(c);
        if let Some(p) = c.members().iter().find(|&&p| r.get(p) != v) {
            return Err(format!("{} disagrees with its class {c:?}", p.name()));
        }
    }
    let implies = |a: Property, b: Property| {
        if r.get(a) && !r.get(b) {
            Err(format!("{} holds but {} fails", a.name(), b.name()))
        } else {
            Ok(())
        }
    };
    implies(Property::GradedUnitRegular, Property::WeakGradedUnitRegular)?;
    implies(Property::UnitRegular, Property::WeakGradedUnitRegular)?;
    implies(Property::GradedUnitRegular, Property::GradedCancellable)?;
    implies(Property::WeakGradedUnitRegular, Property::GradedRegular)?;
    if r.rep.is_some() != r.get(Property::DirectlyFinite) {
        return Err("representation present iff no-exit".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shifts::{block_graded_ur, UrVerdict};

    fn g(edges: &[(&str, &str)]) -> Graph {
        Graph::from_named_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn single_edge() {
        let r = classify(&g(&[("v", "w")]));
        assert!(!r.get(Property::GradedUnitRegular));
        assert!(r.get(Property::UnitRegular));
        assert!(r.get(Property::InternalCancellation));
        assert!(matches!(
            r.witnesses[&PropertyClass::GradedUnitRegular],
            Witness::Condition2(Condition2Failure::ReceivingSink { .. })
        ));
        check_diagram(&r).unwrap();
    }

    #[test]
    fn tail_into_cycle() {
        let r = classify(&g(&[("a", "c1"), ("c1", "c2"), ("c2", "c1")]));
        assert!(!r.get(Property::GradedUnitRegular));
        assert!(r.get(Property::DirectlyFinite));
        assert!(!r.get(Property::UnitRegular));
        check_diagram(&r).unwrap();
    }

    #[test]
    fn rose() {
        let r = classify(&g(&[("v", "v"), ("v", "v")]));
        for p in Property::ALL {
            let expected = p.class() == PropertyClass::Always;
            assert_eq!(r.get(p), expected, "{}", p.name());
        }
        assert!(r.rep.is_none());
        check_diagram(&r).unwrap();
    }

    #[test]
    fn every_block_passes_when_graded_ur() {
        let graphs = [
            g(&[("a", "b"), ("b", "c1"), ("c1", "c2"), ("c2", "c1")]),
            g(&[("a", "c1"), ("c1", "c2"), ("c2", "c1"), ("d", "c2")]),
            g(&[("x", "x"), ("p", "x")]),
        ];
        for graph in &graphs {
            let r = classify(graph);
            assert!(r.get(Property::GradedUnitRegular));
            for b in &r.rep.as_ref().unwrap().blocks {
                assert_eq!(block_graded_ur(b), UrVerdict::True);
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = classify(&g(&[("v", "w")]));
        let v = r.to_json_value();
        assert_eq!(v["verdicts"].as_object().unwrap().len(), 15);
        assert_eq!(v["classes"]["graded_unit_regular"]["witness"]["sink"], "w");
        assert_eq!(v["rep"]["blocks"][0]["shifts"], serde_json::json!([0, 1]));
    }
}
