//! Verification engine for a collection of finite algebraic and geometric
//! claims: Euler-style identities in finite Boolean algebras, weak B-ring
//! axioms over explicit operation tables, set-theoretic braid (Yang-Baxter)
//! solutions, a 2x2 matrix power-sum identity, Jordan-curve metric
//! inequalities, and an exact-rational projective incidence theorem.
//!
//! Every claim is checked mechanically: exhaustive enumeration where the
//! carrier is finite, exact rational arithmetic where the statement is an
//! incidence condition, and numerical computation with independent oracles
//! where the objects are curves or real matrices.

pub mod boolalg;
pub mod braid;
pub mod bring_euler;
pub mod incidence;
pub mod jordan;
pub mod matrix_series;
pub mod report;
pub mod suites;
pub mod triple_trig;
pub mod weak_bring;

pub use boolalg::{BoolAlgebra, Element};
pub use report::{CheckReport, CheckStatus, SuiteCheck, SuiteReport};
