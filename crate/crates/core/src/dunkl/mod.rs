//! Dunkl operators, Heckman's restriction map, Olshanetsky–Perelomov
//! operators and their integrals, quantum and classical.

pub mod op;
pub mod operator;
pub mod quantum;
pub mod skew;

pub use op::*;
pub use operator::{restrict_skew, restrict_to_invariants, OperatorExpr};
pub use quantum::{apply_dunkl, commutativity_report, dunkl_commutator, dunkl_x_commutator, equivariance_report, monomials_upto, unit, x_commutator_report, Dunkl};
pub use skew::{DiffOp, PhaseFn, SkewCoeff, SkewElement};
