//! Computation and stratification of the asymptotic set of a dominant
//! polynomial mapping `F: C^n -> C^n`.
//!
//! The asymptotic set `S_F` collects the target points at which `F` fails to
//! be proper: the limits of `F` along curves that escape to infinity in the
//! source. This crate searches the family of monomial test curves
//! `gamma_i(u) = c_i * u^{e_i}`, extracts exact limits as `u -> infinity`,
//! labels each admissible curve by the way it tends to infinity, and
//! assembles the labelled limit sets into a stratification with dimensions,
//! implicit equations, a containment order and a frontier-property check.
//!
//! All symbolic computation is exact (arbitrary-precision rationals); floating
//! point appears only in the independent numeric cross-checks of [`verify`].
//!
//! Pipeline overview:
//!
//! * [`parser`] — text format for polynomial mappings.
//! * [`algebra`] — sparse multivariate polynomials, Laurent expansions in the
//!   curve parameter, exact linear algebra.
//! * [`curves`] — curve substitution, limits, labels and degree tuples.
//! * [`facons`] — bounded enumeration of exponent vectors and the label
//!   catalog, plus the label-counting formula and a dominance test.
//! * [`strata`] — dimensions, implicit equations, filtrations, the global
//!   stratification and the frontier check.
//! * [`verify`] — floating-point and brute-force oracles.
//! * [`report`] / [`cli`] — deterministic JSON and text reports.

pub mod algebra;
pub mod cli;
pub mod curves;
pub mod facons;
pub mod parser;
pub mod report;
pub mod rng;
pub mod strata;
pub mod verify;

pub use algebra::{MultiPoly, Rational, ULaurentPoly, VarSpace};
pub use curves::{DegreeTuple, ExponentVector, Facon, Limit, LimitMapping, LimitOutcome};
pub use facons::FaconCatalog;
pub use parser::PolynomialMapping;
pub use strata::{AsymptoticSetReport, Stratification, Stratum};
