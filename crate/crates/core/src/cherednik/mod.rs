//! The rational Cherednik algebra: normal forms, the sl2 action, Verma
//! modules, characters and the contravariant form.

pub mod pbw;
pub mod sl2;
pub mod verma;

pub use pbw::{associativity_report, flatness_report, relations_report, rescaling_report, Cherednik, Generator, Key, PbwElement};
pub use sl2::{fourier_swaps_degrees, grading_element, grading_report, sl2_automorphism, sl2_report, sl2_triple_ef, Sl2, Sl2Action};
pub use verma::{
    character_closed_form, character_report, elementary_traces, h_eigen_report, module_relations_report,
    shapovalov_report, CharacterSeries, ModElem, Shapovalov, SliceBasis, VermaModule, WRep,
};
