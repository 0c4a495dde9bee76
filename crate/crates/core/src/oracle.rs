//! Exhaustive checks of graded regularity, graded unit-regularity and graded
//! direct finiteness for shifted matrix algebras over a prime field `F_q`
//! and over `F_q[x^m, x^-m]`.
//!
//! A homogeneous element is stored as its coefficient matrix; for Laurent
//! blocks the monomial at `(i, j)` is `x^(δ - γ_i + γ_j)` and is never
//! materialized, since exponents add consistently under products and the
//! determinant of a homogeneous matrix is `det(coeffs) · x^(nδ)`.
//!
//! Every nonzero homogeneous `x` of every relevant degree is enumerated. For
//! each, the equation `x·y·x = x` is linear in `y`, so the candidate partners
//! of degree `-δ` are exactly the points of an affine space; those are
//! enumerated in full where a property quantifies over them.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::OracleError;
use crate::field::{AffineSpace, PrimeField};
use crate::rep::ShiftBlock;
use crate::shifts::{component_support, relevant_degrees, ComponentSupport};

pub const DEFAULT_SUPPORT_CAP: usize = 16;

/// A degree-`δ` element given by its `n × n` coefficient matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneousMatrix {
    pub degree: i64,
    pub n: usize,
    pub coeffs: Vec<u8>,
}

impl HomogeneousMatrix {
    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.coeffs.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub x: HomogeneousMatrix,
    /// Partner element, when the failure is witnessed by a pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<HomogeneousMatrix>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Homogeneous elements examined across all components.
    pub elements: u64,
}

/// Enumeration settings: field and support cap.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    field: PrimeField,
    cap: usize,
}

impl Oracle {
    pub fn new(q: u8) -> Result<Self, OracleError> {
        Ok(Oracle {
            field: PrimeField::new(q)?,
            cap: DEFAULT_SUPPORT_CAP,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn checked_support(
        &self,
        b: &ShiftBlock,
        degree: i64,
    ) -> Result<ComponentSupport, OracleError> {
        let s = component_support(b, degree);
        if s.len() > self.cap {
            return Err(OracleError::ComponentTooLarge {
                degree,
                support: s.len(),
                cap: self.cap,
            });
        }
        Ok(s)
    }

    /// All `q^|support|` elements of the degree-`δ` component, ordered
    /// lexicographically by their coefficients on the support (row-major).
    pub fn enumerate_component(
        &self,
        b: &ShiftBlock,
        degree: i64,
    ) -> Result<impl Iterator<Item = HomogeneousMatrix>, OracleError> {
        let support = self.checked_support(b, degree)?;
        let n = b.n();
        let q = self.field.order() as u64;
        let total = q.pow(support.len() as u32);
        Ok((0..total).map(move |k| HomogeneousMatrix {
            degree,
            n,
            coeffs: element(n, q, &support.positions, k),
        }))
    }

    pub fn is_invertible_hom(&self, x: &HomogeneousMatrix) -> bool {
        self.field.det(x.n, &x.coeffs) != 0
    }

    /// Every homogeneous `x` has a homogeneous `y` with `xyx = x`.
    pub fn check_graded_regular(&self, b: &ShiftBlock) -> Result<OracleVerdict, OracleError> {
        self.scan(b, |ctx, x| ctx.sandwich_solutions(x).is_some())
    }

    /// Every homogeneous `x` has a homogeneous unit `u` with `xux = x`.
    pub fn check_graded_unit_regular(&self, b: &ShiftBlock) -> Result<OracleVerdict, OracleError> {
        self.scan(b, |ctx, x| match ctx.sandwich_solutions(x) {
            None => false,
            Some(space) => space
                .points()
                .any(|z| self.field.det(ctx.n, &ctx.embed(&z)) != 0),
        })
    }

    /// For homogeneous `x, y`, `xy = 1` implies `yx = 1`.
    pub fn check_graded_directly_finite(
        &self,
        b: &ShiftBlock,
    ) -> Result<OracleVerdict, OracleError> {
        let contexts = self.contexts(b)?;
        let id = PrimeField::identity(b.n());
        let mut elements = 0;
        for ctx in &contexts {
            elements += ctx.total;
            let failure = (0..ctx.total).into_par_iter().find_map_first(|k| {
                let x = element(ctx.n, ctx.q, &ctx.support.positions, k);
                let sys = ctx.right_inverse_system(&x);
                let space = self
                    .field
                    .solve(ctx.n * ctx.n, ctx.partner.len(), &sys, &id)?;
                let bad = space
                    .points()
                    .map(|z| ctx.embed(&z))
                    .find(|y| self.field.mat_mul(ctx.n, y, &x) != id);
                bad.map(|y| (x, y))
            });
            if let Some((x, y)) = failure {
                return Ok(OracleVerdict {
                    holds: false,
                    counterexample: Some(Counterexample {
                        x: ctx.hom(ctx.degree, x),
                        y: Some(ctx.hom(-ctx.degree, y)),
                    }),
                    elements,
                });
            }
        }
        Ok(OracleVerdict {
            holds: true,
            counterexample: None,
            elements,
        })
    }

    fn contexts(&self, b: &ShiftBlock) -> Result<Vec<Component>, OracleError> {
        let q = self.field.order() as u64;
        relevant_degrees(b)
            .into_iter()
            .map(|degree| {
                let support = self.checked_support(b, degree)?;
                let partner = self.checked_support(b, -degree)?;
                Ok(Component {
                    degree,
                    n: b.n(),
                    q,
                    total: q.pow(support.len() as u32),
                    support,
                    partner: partner.positions,
                    field: self.field,
                })
            })
            .collect()
    }

    /// Runs `passes` on every nonzero element of every relevant component,
    /// returning the least failing element (degrees ascending, then
    /// lexicographic) regardless of scheduling.
    fn scan(
        &self,
        b: &ShiftBlock,
        passes: impl Fn(&Component, &[u8]) -> bool + Sync,
    ) -> Result<OracleVerdict, OracleError> {
        let contexts = self.contexts(b)?;
        let mut elements = 0;
        for ctx in &contexts {
            elements += ctx.total;
            let failure = (1..ctx.total).into_par_iter().find_map_first(|k| {
                let x = element(ctx.n, ctx.q, &ctx.support.positions, k);
                (!passes(ctx, &x)).then_some(x)
            });
            if let Some(x) = failure {
                return Ok(OracleVerdict {
                    holds: false,
                    counterexample: Some(Counterexample {
                        x: ctx.hom(ctx.degree, x),
                        y: None,
                    }),
                    elements,
                });
            }
        }
        Ok(OracleVerdict {
            holds: true,
            counterexample: None,
            elements,
        })
    }
}

/// The `k`-th element of a component: base-`q` digits of `k` placed on the
/// support, first position most significant.
fn element(n: usize, q: u64, positions: &[(usize, usize)], mut k: u64) -> Vec<u8> {
    let mut coeffs = vec![0u8; n * n];
    for &(i, j) in positions.iter().rev() {
        coeffs[i * n + j] = (k % q) as u8;
        k /= q;
    }
    coeffs
}

/// One homogeneous component together with the support of its opposite
/// degree, where partners live.
struct Component {
    degree: i64,
    n: usize,
    q: u64,
    total: u64,
    support: ComponentSupport,
    partner: Vec<(usize, usize)>,
    field: PrimeField,
}

impl Component {
    fn hom(&self, degree: i64, coeffs: Vec<u8>) -> HomogeneousMatrix {
        HomogeneousMatrix {
            degree,
            n: self.n,
            coeffs,
        }
    }

    fn embed(&self, z: &[u8]) -> Vec<u8> {
        let mut y = vec![0u8; self.n * self.n];
        for (&(k, l), &v) in self.partner.iter().zip(z) {
            y[k * self.n + l] = v;
        }
        y
    }

    /// Partners `y` of opposite degree with `x y x = x`: entry `(i, j)` of
    /// `x y x` is `Σ_{(k,l)} x_ik y_kl x_lj`.
    fn sandwich_solutions(&self, x: &[u8]) -> Option<AffineSpace> {
        let n = self.n;
        let vars = self.partner.len();
        let mut a = vec![0u8; n * n * vars];
        for i in 0..n {
            for j in 0..n {
                let row = (i * n + j) * vars;
                for (p, &(k, l)) in self.partner.iter().enumerate() {
                    a[row + p] = self.field.mul(x[i * n + k], x[l * n + j]);
                }
            }
        }
        self.field.solve(n * n, vars, &a, x)
    }

    /// Coefficients of `x y` in the unknown entries of `y`: entry `(i, j)`
    /// is `Σ_k x_ik y_kj`.
    fn right_inverse_system(&self, x: &[u8]) -> Vec<u8> {
        let n = self.n;
        let vars = self.partner.len();
        let mut a = vec![0u8; n * n * vars];
        for i in 0..n {
            for j in 0..n {
                let row = (i * n + j) * vars;
                for (p, &(k, l)) in self.partner.iter().enumerate() {
                    if l == j {
                        a[row + p] = x[i * n + k];
                    }
                }
            }
        }
        a
    }
}
