//! Finite semigroups, their convolution algebras, and expansivity
//! certificates for the induced algebraic actions on dual tori.
//!
//! The pipeline: validate a multiplication table
//! ([`semigroup::FiniteSemigroup`]), present a right submodule of
//! `Z[S]^n` by an integer matrix ([`modules::ModulePresentation`]),
//! expand it to an integer lattice, and decide expansivity of the
//! shift action on the dual group by two routes — the annihilator rank
//! together with a finite cover, and brute-force enumeration of the
//! dual with exact separation minima ([`dynamics::decide_expansive`]).
//! Positive verdicts can be upgraded to right-invertibility
//! certificates over the rationals
//! ([`invertibility::right_invertibility_witness`]); negative ones
//! carry a torus arc or a collapsed pair. The classical infinite
//! cyclic case is served by unit-circle root location with certified
//! truncated inverses.
//!
//! All decisions run in exact arithmetic (integers, rationals,
//! Gaussian rationals); floating point only appears in root finding
//! and in explicitly float-tagged refinement routines, and every
//! numeric certificate is rechecked by direct convolution.

pub mod algebra;
pub mod constructions;
pub mod dynamics;
pub mod invertibility;
pub mod json;
pub mod linalg;
pub mod modules;
pub mod rng;
pub mod scalar;
pub mod semigroup;

pub use algebra::{AlgElem, AlgMat, AlgebraError};
pub use constructions::{FamilySpec, ReesReport, ReesSpec, UnionSpec};
pub use dynamics::{Decision, ExpansivityReport, Route, Witness};
pub use invertibility::{LaurentElem, LaurentVerdict, RightInvertibilityWitness};
pub use modules::{DualGroupStructure, Enumeration, ModulePresentation, TorusPoint};
pub use scalar::{Ring, Scalar};
pub use semigroup::{FiniteSemigroup, StructureFlags};
