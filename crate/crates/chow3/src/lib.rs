//! Exact intersection theory on iterated blowups of smooth projective
//! threefolds, together with the linear-feasibility machinery needed to
//! certify nef-class obstructions on such blowups.
//!
//! The centerpiece is [`ThreefoldModel`]: the even-degree cohomology
//! skeleton of a threefold (divisor basis, curve basis, cup products,
//! pairing, Chern classes) over exact rational coefficients. Models are
//! immutable; blowing up a point or a smooth curve returns a new model
//! with one extra divisor generator and one extra curve generator.
//!
//! On top of the model sit the checkers:
//!
//! - [`property_a`] evaluates nef-class hypothesis data (`ζ² = 0`,
//!   `ζ·c₁² ≥ 0`, `ζ·c₂ ≤ 0`), blowup applicability conditions, the
//!   ruled-surface zero-section certificate, and the two-step blowup
//!   deduction chain with its per-curve dichotomy.
//! - [`feasibility`] is an exact Fourier–Motzkin eliminator for rational
//!   linear constraint systems, with strict inequalities carried exactly.
//! - [`theorem3`] builds the constraint systems of the n-point/all-lines
//!   configuration on P³ and decides that the pulled-back degree is
//!   forced to vanish.
//! - [`ci`] computes Chern-class coefficients of complete-intersection
//!   threefolds in Pⁿ and certifies positivity of the c₂ coefficient.
//! - [`scenario`] parses and runs line-oriented scenario files driving
//!   all of the above; [`report`] renders results as text or JSON with
//!   rationals kept exact.
//!
//! No floating point is used anywhere: every check is a sign-sensitive
//! exact equality or inequality over `BigRational`.

// Error enums carry the offending rationals for diagnostics; the wide
// Result variants are deliberate.
#![allow(clippy::result_large_err)]

pub mod chow;
pub mod ci;
pub mod feasibility;
pub mod property_a;
pub mod rat;
pub mod report;
pub mod scenario;
pub mod theorem3;
pub mod trace;

pub use chow::{
    BlowupKind, BlowupRecord, ChowError, CurveCenterSpec, CurveClass, DivisorClass, Factor,
    ThreefoldModel,
};
pub use rat::Rat;
