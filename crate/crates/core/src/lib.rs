//! Exact-arithmetic computations with gauge Lie algebras over the circle.
//!
//! The crate provides, entirely over ℚ (with symbolic 2π bookkeeping):
//!
//! - Lie algebras by rational structure constants, with Killing forms and
//!   Cartan's semisimplicity criterion ([`lie`]);
//! - decomposition of a semisimple algebra into minimal ideals, with
//!   compact/noncompact and complex-structure classification ([`structure`]);
//! - the space of invariant symmetric bilinear forms — a model of the dual
//!   of the universal-form target V(𝔨) — and automorphism actions on it
//!   ([`forms`]);
//! - twisted loop algebras with trig-polynomial sections, Lie connections,
//!   spectral covers, and the reduction to simple fibres ([`loops`]);
//! - closed rotation-invariant currents and the covariant 2-cocycles they
//!   define on 𝔤 ⋊ ℝD, with exact verification suites ([`cocycle`]).
//!
//! No floating point is used anywhere: identities either hold exactly or
//! fail with a witness.

pub mod catalogue;
pub mod cocycle;
pub mod forms;
pub mod lie;
pub mod loops;
pub mod matrix;
pub mod minpoly;
pub mod report;
pub mod scalar;
pub mod structure;

pub use cocycle::{CocycleSpace, CovariantCocycle, Current, Extended, OneCochain, VOneForm};
pub use forms::{InvariantFormSpace, VValue};
pub use lie::{LieAlgebra, SymBilinearForm, Violation};
pub use loops::{
    Connection, LoopAlgebra, LoopElement, LoopOneForm, Reduction, SpectralCover, TrigPoly,
    TwistAutomorphism, VectorFieldLift,
};
pub use matrix::Mat;
pub use report::{Check, Report};
pub use scalar::{Rat, TwoPi};
pub use structure::{Ideal, IdealDecomposition};
