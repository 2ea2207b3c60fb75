//! Fixed choices of homogeneous basic invariants.
//!
//! Power sums for S_n, even power sums for B_n, `x²` for Z2, and for I2(m) the
//! invariant quadratic form together with the first nonzero symmetrized
//! degree-m monomial that is not a power of the quadratic form.

use super::group::{GroupKind, ReflectionGroup};
use crate::exact::{monomials_of_degree, pad_exponent, Field, LinearSubstitution, Poly};

/// Which copy of the reflection representation the polynomials live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Functions on 𝔥 (the coordinates `x_i`).
    Coordinates,
    /// Functions on 𝔥* (elements of S𝔥, e.g. `y_i` or `p_i`).
    Momenta,
}

fn power_sum<F: Field>(nvars: usize, dim: usize, k: u32) -> Poly<F> {
    let mut p = Poly::zero(nvars);
    for i in 0..dim {
        p.add_assign_ref(&Poly::var(nvars, i).pow(k));
    }
    p
}

fn side_subs<F: Field>(w: &ReflectionGroup<F>, side: Side) -> Vec<LinearSubstitution<F>> {
    (0..w.order())
        .map(|g| match side {
            Side::Coordinates => w.x_substitution(g).clone(),
            Side::Momenta => {
                let m = w.element(g);
                let mt = crate::exact::linalg::transpose(m);
                LinearSubstitution::from_matrix(&mt)
            }
        })
        .collect()
}

/// W-average under the chosen action; variables beyond ℓ are untouched.
pub fn symmetrize_on<F: Field>(w: &ReflectionGroup<F>, f: &Poly<F>, side: Side) -> Poly<F> {
    let mut acc = Poly::zero(f.nvars());
    for s in side_subs(w, side) {
        acc.add_assign_ref(&f.substitute_linear(&s));
    }
    acc.scale(&F::from_i64(w.order() as i64).inv())
}

/// W-invariant quadratic form: `vᵀGv` on 𝔥, `ξG⁻¹ξᵀ` on 𝔥*.
pub fn quadratic_invariant<F: Field>(w: &ReflectionGroup<F>, nvars: usize, side: Side) -> Poly<F> {
    let m = match side {
        Side::Coordinates => w.gram(),
        Side::Momenta => w.gram_inv(),
    };
    let mut out = Poly::zero(nvars);
    for i in 0..w.dim() {
        for j in 0..w.dim() {
            if !m[i][j].is_zero() {
                let mut e = vec![0; nvars];
                e[i] += 1;
                e[j] += 1;
                out.add_term(e, m[i][j].clone());
            }
        }
    }
    out
}

fn proportional<F: Field>(a: &Poly<F>, b: &Poly<F>) -> bool {
    let Some((e, c)) = a.leading_term() else { return b.is_zero() };
    let r = b.coeff(e) / c.clone();
    a.scale(&r) == *b
}

/// Basic invariants in the first ℓ variables of a ring with `nvars` variables,
/// in increasing degree.
pub fn basic_invariants<F: Field>(w: &ReflectionGroup<F>, nvars: usize, side: Side) -> Vec<Poly<F>> {
    let l = w.dim();
    match *w.kind() {
        GroupKind::Z2 => vec![Poly::var(nvars, 0).pow(2)],
        GroupKind::S(n) => (1..=n as u32).map(|k| power_sum(nvars, l, k)).collect(),
        GroupKind::B(n) => (1..=n as u32).map(|k| power_sum(nvars, l, 2 * k)).collect(),
        GroupKind::I2(m) => {
            let quad = quadratic_invariant(w, nvars, side);
            let power = (m % 2 == 0).then(|| quad.pow(m as u32 / 2));
            let top = monomials_of_degree(l, m as u32)
                .into_iter()
                .rev()
                .map(|e| symmetrize_on(w, &Poly::monomial(pad_exponent(&e, nvars), F::one()), side))
                .find(|f| !f.is_zero() && power.as_ref().is_none_or(|p| !proportional(p, f)))
                .expect("a degree-m basic invariant exists");
            let mut gens = vec![quad, top];
            gens.sort_by_key(|p| p.total_degree());
            gens
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{QSqrt5, Q};

    fn all_invariant<F: Field>(w: &ReflectionGroup<F>, side: Side) {
        for p in basic_invariants(w, w.dim(), side) {
            assert!(!p.is_zero());
            assert_eq!(symmetrize_on(w, &p, side), p);
        }
    }

    #[test]
    fn generators_are_invariant() {
        for side in [Side::Coordinates, Side::Momenta] {
            all_invariant(&ReflectionGroup::<Q>::z2(), side);
            all_invariant(&ReflectionGroup::<Q>::symmetric(3).unwrap(), side);
            all_invariant(&ReflectionGroup::<Q>::hyperoctahedral(2).unwrap(), side);
            for m in [3, 4, 6] {
                let w = ReflectionGroup::<Q>::dihedral(m).unwrap();
                all_invariant(&w, side);
                let degs: Vec<_> = basic_invariants(&w, 2, side).iter().map(|p| p.total_degree()).collect();
                assert_eq!(degs, vec![Some(2), Some(m as u32)]);
            }
            all_invariant(&ReflectionGroup::<QSqrt5>::dihedral(5).unwrap(), side);
        }
    }
}
