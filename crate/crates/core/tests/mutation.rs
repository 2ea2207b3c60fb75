//! Mutation smoke test: breaking W-invariance of the reflection weights must
//! make the commutativity check fail, while the untouched weights pass.

use calogero_core::coxeter::{parse_group, ClassParams, ReflectionGroup, VarLayout};
use calogero_core::dunkl::{commutativity_report, Dunkl};
use calogero_core::exact::{Field, Poly};
use calogero_core::with_group;

fn check<F: Field>(w: &ReflectionGroup<F>) {
    let lay = VarLayout::quantum(w.dim(), w.num_reflection_classes());
    let weights = ClassParams::symbolic(w, &lay).weights(w);
    let good = Dunkl::with_weights(w, weights.clone(), lay.nvars());
    assert!(commutativity_report(&good, 3).passed(), "{}", w.name());
    let mut bad = weights;
    bad[0] = &bad[0] + &Poly::one(lay.nvars());
    let bad = Dunkl::with_weights(w, bad, lay.nvars());
    assert!(commutativity_report(&bad, 3).failures > 0, "{}: mutation not detected", w.name());
}

#[test]
fn perturbed_weight_breaks_commutativity() {
    for label in ["S3", "B2", "I2:5"] {
        with_group!(&parse_group(label).unwrap(), w => check(w));
    }
}
