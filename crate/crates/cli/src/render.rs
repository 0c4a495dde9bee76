use std::fmt::Write as _;

use gruler_core::classify::{Property, PropertyClass};
use gruler_core::oracle::{HomogeneousMatrix, Oracle, OracleVerdict};
use gruler_core::shifts::{
    block_graded_ur, canonical_form, canonicalize_block, k_block_graded_ur,
    laurent_block_graded_ur, reps_graded_isomorphic, CanonicalBlock,
};
use gruler_core::{BlockKind, GradedMatricialRep, OracleError, PropertyReport, ShiftBlock};
use serde_json::{json, Value};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn canonical_text(c: &CanonicalBlock) -> String {
    c.as_block().to_string()
}

pub fn report_text(r: &PropertyReport) -> String {
    let mut out = String::new();
    let width = Property::ALL
        .iter()
        .map(|p| p.name().len())
        .max()
        .unwrap_or(0);
    for class in PropertyClass::ALL {
        let holds = r.class_verdict(class);
        let _ = writeln!(out, "[{}] {}", yes_no(holds), class.justification());
        for p in class.members() {
            let _ = writeln!(out, "    {:width$}  {}", p.name(), yes_no(r.get(*p)));
        }
        if let Some(w) = r.witnesses.get(&class) {
            let _ = writeln!(out, "    witness: {}", serde_json::to_string(w).unwrap());
        }
    }
    match &r.rep {
        Some(rep) => {
            let _ = writeln!(out, "representation: {rep}");
        }
        None => out.push_str("representation: none (graph has a cycle with an exit)\n"),
    }
    out
}

pub fn rep_json(rep: &GradedMatricialRep) -> Value {
    let mut v = rep.to_json_value();
    v["display"] = rep.to_string().into();
    v["canonical"] = canonical_form(rep)
        .iter()
        .map(|c| json!({ "block": canonical_text(c), "shifts": c.shifts }))
        .collect();
    v
}

pub fn rep_text(rep: &GradedMatricialRep) -> String {
    let mut out = String::new();
    for (i, b) in rep.blocks.iter().enumerate() {
        let source = rep
            .provenance
            .get(i)
            .map(|p| serde_json::to_string(p).unwrap())
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{b}    canonical {}    {source}",
            canonical_text(&canonicalize_block(b))
        );
    }
    out
}

pub fn check_shifts(b: &ShiftBlock) -> (Value, String) {
    let canonical = canonicalize_block(b);
    let mut result = json!({
        "block": b,
        "display": b.to_string(),
        "canonical": canonical.shifts,
    });
    let verdict = block_graded_ur(b);
    result["graded_unit_regular"] = serde_json::to_value(verdict).unwrap();
    match b.kind {
        BlockKind::GroundField => {
            result["criterion"] = json!({
                "all_shifts_equal_or_n_1": k_block_graded_ur(b).unwrap(),
            });
        }
        BlockKind::Laurent(_) => {
            result["criterion"] =
                serde_json::to_value(laurent_block_graded_ur(b).unwrap()).unwrap();
        }
    }
    let mut text = format!(
        "{b}\ncanonical: {}\ngraded unit-regular: {}\n",
        canonical_text(&canonical),
        serde_json::to_value(verdict).unwrap().as_str().unwrap()
    );
    if let Some(d) = result["criterion"]["blocking_degree"].as_i64() {
        let _ = writeln!(
            text,
            "no invertible element in the nonzero degree-{d} component"
        );
    }
    (result, text)
}

fn matrix_json(b: &ShiftBlock, x: &HomogeneousMatrix) -> Value {
    let mut v = json!({ "degree": x.degree, "rows": x.rows() });
    if let Some(m) = b.kind.period() {
        let exps: Vec<Vec<i64>> = (0..x.n)
            .map(|i| {
                (0..x.n)
                    .map(|j| {
                        let e = x.degree - b.shifts[i] + b.shifts[j];
                        if e.rem_euclid(m) == 0 {
                            e
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        v["exponents"] = json!(exps);
    }
    v
}

fn matrix_text(b: &ShiftBlock, x: &HomogeneousMatrix) -> String {
    let mut out = format!("  degree {}:\n", x.degree);
    for i in 0..x.n {
        let row: Vec<String> = (0..x.n)
            .map(|j| {
                let c = x.coeffs[i * x.n + j];
                match b.kind {
                    BlockKind::Laurent(_) if c != 0 => {
                        format!("{c}x^{}", x.degree - b.shifts[i] + b.shifts[j])
                    }
                    _ => c.to_string(),
                }
            })
            .collect();
        let _ = writeln!(out, "    [{}]", row.join(" "));
    }
    out
}

fn verdict_json(b: &ShiftBlock, v: &OracleVerdict) -> Value {
    let mut out = json!({ "holds": v.holds, "elements": v.elements });
    if let Some(c) = &v.counterexample {
        out["counterexample"] = json!({ "x": matrix_json(b, &c.x) });
        if let Some(y) = &c.y {
            out["counterexample"]["y"] = matrix_json(b, y);
        }
    }
    out
}

pub fn oracle(o: &Oracle, b: &ShiftBlock) -> Result<(Value, String), OracleError> {
    let checks = [
        ("graded_regular", o.check_graded_regular(b)?),
        ("graded_unit_regular", o.check_graded_unit_regular(b)?),
        ("graded_directly_finite", o.check_graded_directly_finite(b)?),
    ];
    let mut result = json!({
        "block": b,
        "display": b.to_string(),
        "q": o.field().order(),
        "criterion": serde_json::to_value(block_graded_ur(b)).unwrap(),
    });
    let mut text = format!("{b} over F_{}\n", o.field().order());
    for (name, v) in &checks {
        result[*name] = verdict_json(b, v);
        let _ = writeln!(text, "{name}: {}", yes_no(v.holds));
        if let Some(c) = &v.counterexample {
            text.push_str(&matrix_text(b, &c.x));
            if let Some(y) = &c.y {
                text.push_str(&matrix_text(b, y));
            }
        }
    }
    Ok((result, text))
}

pub fn compare(a: &GradedMatricialRep, b: &GradedMatricialRep) -> (Value, String) {
    let iso = reps_graded_isomorphic(a, b);
    let render = |r: &GradedMatricialRep| -> Vec<String> {
        canonical_form(r).iter().map(canonical_text).collect()
    };
    let result = json!({
        "isomorphic": iso,
        "canonical_a": render(a),
        "canonical_b": render(b),
    });
    let text = format!(
        "A: {}\nB: {}\ngraded isomorphic: {}\n",
        render(a).join(" ⊕ "),
        render(b).join(" ⊕ "),
        yes_no(iso)
    );
    (result, text)
}
