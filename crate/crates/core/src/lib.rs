//! Exact polyhedral geometry over lexicographically ordered value groups
//! `Q^(k)`, admissible fans over them, and the combinatorics of the
//! associated multi-stage degenerations.
//!
//! All types are generic over a [`Scalar`] field; the aliases below fix it to
//! arbitrary-precision rationals.

pub mod admissible;
pub mod error;
pub mod io;
pub mod lattice;
pub mod lexpoly;
pub mod models;
pub mod ordered;
pub mod plot;
pub mod scalar;

pub use admissible::{cone_over_cell, cone_over_complex, AdmissibleCone, AdmissibleFan, FanValidation, FanViolation};
pub use error::{Error, Result};
pub use lexpoly::{
    feasible, hilbert_basis, is_complete_fan, star_fan, validate_complex, Constraint, Face, Halfspace, Point,
    PolyComplex, Polyhedron, RationalCone, RationalFan, Relation,
};
pub use models::{
    component_vanishes, fiber_report, formal_mul, generic_monoid_member, is_member, tilted_generators,
    vertex_valuation, weight, FiberReport, FormalLaurent, GeneratorSet, ValuedMonomial,
};
pub use ordered::{apply_multiplier, epsilon, is_monotone_multiplier, LexVec, Multiplier, TowerProfile};
pub use scalar::Scalar;

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;
pub type QLexVec = LexVec<Q>;
pub type QPoint = Point<Q>;
pub type QHalfspace = Halfspace<Q>;
pub type QPolyhedron = Polyhedron<Q>;
pub type QComplex = PolyComplex<Q>;
pub type QAdmissibleCone = AdmissibleCone<Q>;
pub type QAdmissibleFan = AdmissibleFan<Q>;
pub type QLaurent = FormalLaurent<Q>;
pub type QMonomial = ValuedMonomial<Q>;
pub type QFiberReport = FiberReport<Q>;
