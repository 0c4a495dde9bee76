//! Shift calculus for `M_n(K)(γ…)` and `M_n(K[x^m,x^-m])(γ…)`.
//!
//! A degree-`δ` matrix has entry `(i, j)` in `R_{δ - γ_i + γ_j}`. Over the
//! trivially graded field that forces `γ_i - γ_j = δ`; over `K[x^m,x^-m]` it
//! forces `γ_i - γ_j ≡ δ (mod m)` with monomial `x^(δ - γ_i + γ_j)`.
//!
//! Graded isomorphism is decided up to three moves on shift lists: permute,
//! add a common integer, and (Laurent only) add `±m` to a single shift.

use serde::Serialize;

use crate::error::ShiftError;
use crate::matching::perfect_matching;
use crate::rep::{BlockKind, GradedMatricialRep, ShiftBlock};

/// Normal form of a block under the shift moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalBlock {
    #[serde(serialize_with = "serialize_kind")]
    pub kind: BlockKind,
    pub shifts: Vec<i64>,
}

fn serialize_kind<S: serde::Serializer>(kind: &BlockKind, s: S) -> Result<S::Ok, S::Error> {
    match kind {
        BlockKind::GroundField => s.serialize_str("K"),
        BlockKind::Laurent(m) => s.serialize_str(&format!("L{m}")),
    }
}

impl CanonicalBlock {
    pub fn n(&self) -> usize {
        self.shifts.len()
    }

    pub fn as_block(&self) -> ShiftBlock {
        ShiftBlock {
            kind: self.kind,
            shifts: self.shifts.clone(),
        }
    }
}

pub fn canonicalize_block(b: &ShiftBlock) -> CanonicalBlock {
    let shifts = match b.kind {
        BlockKind::GroundField => {
            let min = *b.shifts.iter().min().expect("blocks are nonempty");
            let mut s: Vec<i64> = b.shifts.iter().map(|x| x - min).collect();
            s.sort_unstable();
            s
        }
        BlockKind::Laurent(m) => {
            let m = i64::from(m);
            (0..m)
                .map(|c| {
                    let mut s: Vec<i64> = b.shifts.iter().map(|x| (x + c).rem_euclid(m)).collect();
                    s.sort_unstable();
                    s
                })
                .min()
                .expect("period is positive")
        }
    };
    CanonicalBlock {
        kind: b.kind,
        shifts,
    }
}

/// Sorted multiset of canonical blocks.
pub fn canonical_form(rep: &GradedMatricialRep) -> Vec<CanonicalBlock> {
    let mut blocks: Vec<_> = rep.blocks.iter().map(canonicalize_block).collect();
    blocks.sort();
    blocks
}

pub fn reps_graded_isomorphic(a: &GradedMatricialRep, b: &GradedMatricialRep) -> bool {
    canonical_form(a) == canonical_form(b)
}

/// Matrix positions (0-based) allowed to be nonzero in one homogeneous
/// component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSupport {
    pub degree: i64,
    pub positions: Vec<(usize, usize)>,
    /// Laurent blocks only: exponent of `x` at each position, parallel to
    /// `positions`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<i64>>,
}

impl ComponentSupport {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

pub fn component_support(b: &ShiftBlock, degree: i64) -> ComponentSupport {
    let n = b.n();
    let mut positions = Vec::new();
    let mut exponents = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let exponent = degree - b.shifts[i] + b.shifts[j];
            let allowed = match b.kind.period() {
                None => exponent == 0,
                Some(m) => exponent.rem_euclid(m) == 0,
            };
            if allowed {
                positions.push((i, j));
                exponents.push(exponent);
            }
        }
    }
    ComponentSupport {
        degree,
        positions,
        exponents: b.kind.period().map(|_| exponents),
    }
}

/// Whether some matrix supported on `s` has nonzero determinant, i.e. the
/// positions contain a permutation.
pub fn support_has_invertible(s: &ComponentSupport, n: usize) -> bool {
    perfect_matching(n, &s.positions).is_some()
}

/// Degrees covering every distinct homogeneous component: the differences
/// `γ_i - γ_j` for ground-field blocks, one period `0..m` for Laurent blocks.
pub fn relevant_degrees(b: &ShiftBlock) -> Vec<i64> {
    match b.kind {
        BlockKind::GroundField => {
            let mut d: Vec<i64> = b
                .shifts
                .iter()
                .flat_map(|gi| b.shifts.iter().map(move |gj| gi - gj))
                .collect();
            d.sort_unstable();
            d.dedup();
            d
        }
        BlockKind::Laurent(m) => (0..i64::from(m)).collect(),
    }
}

/// The first relevant degree whose component is nonzero but contains no
/// invertible element.
pub fn blocking_degree(b: &ShiftBlock) -> Option<i64> {
    relevant_degrees(b).into_iter().find(|&d| {
        let s = component_support(b, d);
        !s.is_empty() && !support_has_invertible(&s, b.n())
    })
}

pub fn k_block_graded_ur(b: &ShiftBlock) -> Result<bool, ShiftError> {
    if b.kind != BlockKind::GroundField {
        return Err(ShiftError::WrongKind {
            expected: "ground-field",
        });
    }
    Ok(b.n() == 1 || b.shifts.windows(2).all(|w| w[0] == w[1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UrVerdict {
    True,
    False,
    Undetermined,
}

impl From<bool> for UrVerdict {
    fn from(b: bool) -> Self {
        if b {
            UrVerdict::True
        } else {
            UrVerdict::False
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaurentUr {
    pub verdict: UrVerdict,
    /// Occurrences of each residue `0..m` among the shifts.
    pub residues: Vec<usize>,
    /// Whether every residue occurs, which is when the counting criterion
    /// applies.
    pub all_residues_present: bool,
    /// A nonzero degree component with no invertible element, if one was
    /// used to decide the verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocking_degree: Option<i64>,
}

pub fn laurent_block_graded_ur(b: &ShiftBlock) -> Result<LaurentUr, ShiftError> {
    let BlockKind::Laurent(m) = b.kind else {
        return Err(ShiftError::WrongKind {
            expected: "Laurent",
        });
    };
    let m = m as usize;
    let mut residues = vec![0usize; m];
    for &s in &b.shifts {
        residues[s.rem_euclid(m as i64) as usize] += 1;
    }
    let all_residues_present = residues.iter().all(|&c| c > 0);
    if all_residues_present {
        let balanced = b.n().is_multiple_of(m) && residues.iter().all(|&c| c == b.n() / m);
        return Ok(LaurentUr {
            verdict: balanced.into(),
            residues,
            all_residues_present,
            blocking_degree: None,
        });
    }
    let blocking = blocking_degree(b);
    Ok(LaurentUr {
        verdict: if blocking.is_some() {
            UrVerdict::False
        } else {
            UrVerdict::Undetermined
        },
        residues,
        all_residues_present,
        blocking_degree: blocking,
    })
}

/// Closed-form graded unit-regularity verdict for a block of either kind.
pub fn block_graded_ur(b: &ShiftBlock) -> UrVerdict {
    match b.kind {
        BlockKind::GroundField => k_block_graded_ur(b).expect("kind checked").into(),
        BlockKind::Laurent(_) => laurent_block_graded_ur(b).expect("kind checked").verdict,
    }
}
