//! Type-A computations: singular vectors, finite-dimensional quotients, the
//! support locus, and `n!`-dimensional representations at `t = 0`.

pub mod orbit;
pub mod quotient;
pub mod singular;

pub use orbit::{cm_point_from_rep, orbit_representation, orbit_report, CmPoint, OrbitRepresentation};
pub use quotient::{
    bgg_euler_character, closed_form_character, frobenius_check, quotient_report, QuotientCharacter, QuotientSlices, Slice,
};
pub use singular::{singular_report, singular_vectors, support_predicted, support_test, SingularFamily};
