//! Dunkl operators acting on polynomials, and identity sweeps over monomials.

use rayon::prelude::*;

use super::skew::{DiffOp, SkewElement};
use crate::coxeter::{ClassParams, ReflectionGroup};
use crate::error::{Error, Result};
use crate::exact::{monomials_of_degree, pad_exponent, Field, Poly, RationalFunction};
use crate::report::CheckReport;

/// `D_a = ∂_a − Σ_s c_s α_s(a) α_s⁻¹ (1 − s)` on polynomials whose first ℓ
/// variables are the coordinates.
#[derive(Clone, Debug)]
pub struct Dunkl<'a, F> {
    w: &'a ReflectionGroup<F>,
    weights: Vec<Poly<F>>,
    roots: Vec<Poly<F>>,
    nvars: usize,
}

impl<'a, F: Field> Dunkl<'a, F> {
    pub fn new(w: &'a ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> Self {
        Self::with_weights(w, c.weights(w), nvars)
    }

    /// Per-reflection weights; not necessarily conjugation invariant.
    pub fn with_weights(w: &'a ReflectionGroup<F>, weights: Vec<Poly<F>>, nvars: usize) -> Self {
        let roots = w.reflections().iter().map(|r| Poly::linear_form(nvars, 0, &r.root)).collect();
        Self { w, weights, roots, nvars }
    }

    pub fn group(&self) -> &ReflectionGroup<F> {
        self.w
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &[Poly<F>] {
        &self.weights
    }

    /// `(f − s f)/α_s`, exact.
    pub fn difference_quotient(&self, s: usize, f: &Poly<F>) -> Result<Poly<F>> {
        let sf = self.w.act(self.w.reflections()[s].element, f);
        (f - &sf).divide_linear(&self.roots[s]).map_err(|_| Error::InternalNonDivisible)
    }

    pub fn apply(&self, a: &[F], f: &Poly<F>) -> Result<Poly<F>> {
        let mut out = f.directional(0, a);
        for (s, r) in self.w.reflections().iter().enumerate() {
            let k = ReflectionGroup::<F>::pair(&r.root, a);
            if k.is_zero() || self.weights[s].is_zero() {
                continue;
            }
            let q = self.difference_quotient(s, f)?;
            out.sub_assign_ref(&(&q * &self.weights[s]).scale(&k));
        }
        Ok(out)
    }

    pub fn apply_basis(&self, i: usize, f: &Poly<F>) -> Result<Poly<F>> {
        self.apply(&unit::<F>(self.w.dim(), i), f)
    }

    /// The same operator as an element of `ℂW ⋉ D(𝔥_reg)`; the coefficient
    /// ring must have the same variables as this operator's.
    pub fn as_skew(&self, a: &[F]) -> SkewElement<F, DiffOp<F>> {
        let dim = self.w.dim();
        let roots = self.w.root_forms(self.nvars);
        let mut el = SkewElement::term(DiffOp::directional(dim, self.nvars, roots.clone(), a), 0);
        for (s, r) in self.w.reflections().iter().enumerate() {
            let k = ReflectionGroup::<F>::pair(&r.root, a);
            if k.is_zero() || self.weights[s].is_zero() {
                continue;
            }
            let coef = RationalFunction::new(
                self.weights[s].scale(&k),
                unit_den(roots.len(), s),
                roots.clone(),
            );
            el.add_term(0, DiffOp::mul_by(dim, coef.neg()));
            el.add_term(r.element, DiffOp::mul_by(dim, coef));
        }
        el
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

fn unit_den(n: usize, s: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[s] = 1;
    v
}

/// `D_a f` with parameters `c`.
pub fn apply_dunkl<F: Field>(
    w: &ReflectionGroup<F>,
    a: &[F],
    c: &ClassParams<F>,
    f: &Poly<F>,
) -> Result<Poly<F>> {
    Dunkl::new(w, c, f.nvars()).apply(a, f)
}

/// Monomials `x^e`, `|e| ≤ max_degree`, embedded in a ring of `nvars` variables.
pub fn monomials_upto<F: Field>(dim: usize, nvars: usize, max_degree: u32) -> Vec<Poly<F>> {
    (0..=max_degree)
        .flat_map(|d| monomials_of_degree(dim, d))
        .map(|e| Poly::monomial(pad_exponent(&e, nvars), F::one()))
        .collect()
}

fn show<F: Field>(p: &Poly<F>) -> String {
    let names: Vec<String> = (0..p.nvars()).map(|i| format!("v{i}")).collect();
    p.display(&names).to_string()
}

/// `[D_a, D_b] f` for every monomial of degree ≤ `max_degree`; the nonzero results.
pub fn dunkl_commutator<F: Field>(
    op: &Dunkl<'_, F>,
    a: &[F],
    b: &[F],
    max_degree: u32,
) -> Result<Vec<(Poly<F>, Poly<F>)>> {
    let monos = monomials_upto::<F>(op.group().dim(), op.nvars(), max_degree);
    let results: Result<Vec<_>> = monos
        .par_iter()
        .map(|f| {
            let ab = op.apply(a, &op.apply(b, f)?)?;
            let ba = op.apply(b, &op.apply(a, f)?)?;
            Ok((f.clone(), &ab - &ba))
        })
        .collect();
    Ok(results?.into_iter().filter(|(_, r)| !r.is_zero()).collect())
}

/// Commutativity over all coordinate direction pairs.
pub fn commutativity_report<F: Field>(op: &Dunkl<'_, F>, max_degree: u32) -> CheckReport {
    let l = op.group().dim();
    let mut rep = CheckReport::new(format!("dunkl-commute {}", op.group().name()));
    let monos = monomials_upto::<F>(l, op.nvars(), max_degree).len();
    for i in 0..l {
        for j in i + 1..l {
            match dunkl_commutator(op, &unit(l, i), &unit(l, j), max_degree) {
                Ok(bad) => {
                    rep.instances += monos - bad.len();
                    for (f, r) in bad {
                        rep.fail(format!("[D{i},D{j}]({}) = {}", show(&f), show(&r)));
                    }
                }
                Err(e) => rep.fail(format!("pair ({i},{j}): {e}")),
            }
        }
    }
    if l == 1 {
        // the only pair is a = b; still exercise the sweep
        if let Ok(bad) = dunkl_commutator(op, &unit(1, 0), &unit(1, 0), max_degree) {
            rep.instances += monos - bad.len();
            rep.failures += bad.len();
        }
    }
    rep
}

/// `[D_a, ξ] = ⟨ξ,a⟩ − Σ_s c_s α_s(a)⟨ξ,α_s^∨⟩ s` on monomials of bounded degree.
pub fn dunkl_x_commutator<F: Field>(
    op: &Dunkl<'_, F>,
    a: &[F],
    xi: &[F],
    max_degree: u32,
) -> Result<CheckReport> {
    let w = op.group();
    let n = op.nvars();
    let xpoly = Poly::linear_form(n, 0, xi);
    let mut rep = CheckReport::new(format!("dunkl-x-commutator {}", w.name()));
    for f in monomials_upto::<F>(w.dim(), n, max_degree) {
        let lhs = &op.apply(a, &(&xpoly * &f))? - &(&xpoly * &op.apply(a, &f)?);
        let mut rhs = f.scale(&ReflectionGroup::<F>::pair(xi, a));
        for (s, r) in w.reflections().iter().enumerate() {
            let k = ReflectionGroup::<F>::pair(&r.root, a) * ReflectionGroup::<F>::pair(xi, &r.coroot);
            if k.is_zero() {
                continue;
            }
            rhs.sub_assign_ref(&(&w.act(r.element, &f) * &op.weights()[s]).scale(&k));
        }
        rep.record(lhs == rhs, || format!("f = {}", show(&f)));
    }
    Ok(rep)
}

/// All basis pairs `(a, ξ)`.
pub fn x_commutator_report<F: Field>(op: &Dunkl<'_, F>, max_degree: u32) -> CheckReport {
    let l = op.group().dim();
    let mut rep = CheckReport::new(format!("dunkl-x-commutator {}", op.group().name()));
    for i in 0..l {
        for j in 0..l {
            match dunkl_x_commutator(op, &unit(l, i), &unit(l, j), max_degree) {
                Ok(r) => {
                    rep.instances += r.instances;
                    rep.failures += r.failures;
                    rep.details.extend(r.details);
                }
                Err(e) => rep.fail(e.to_string()),
            }
        }
    }
    rep
}

/// `g D_a g⁻¹ = D_{ga}` on monomials.
pub fn equivariance_report<F: Field>(op: &Dunkl<'_, F>, max_degree: u32) -> Result<CheckReport> {
    let w = op.group();
    let l = w.dim();
    let mut rep = CheckReport::new(format!("dunkl-equivariance {}", w.name()));
    let monos = monomials_upto::<F>(l, op.nvars(), max_degree);
    for g in 0..w.order() {
        let gi = w.inverse(g);
        for i in 0..l {
            let a = unit::<F>(l, i);
            let ga = w.apply_vector(g, &a);
            for f in &monos {
                let lhs = w.act(g, &op.apply(&a, &w.act(gi, f))?);
                let rhs = op.apply(&ga, f)?;
                rep.record(lhs == rhs, || format!("g={g}, a=e{i}, f={}", show(f)));
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::VarLayout;
    use crate::exact::{qi, Q};

    fn z2_setup() -> (ReflectionGroup<Q>, VarLayout) {
        (ReflectionGroup::z2(), VarLayout::quantum(1, 1))
    }

    #[test]
    fn z2_examples() {
        let (w, lay) = z2_setup();
        let c = ClassParams::symbolic(&w, &lay);
        let n = lay.nvars();
        let x = Poly::<Q>::var(n, 0);
        let cv = Poly::<Q>::var(n, 1);
        let d = Dunkl::new(&w, &c, n);
        assert_eq!(d.apply(&[qi(1)], &x.pow(2)).unwrap(), x.scale(&qi(2)));
        assert_eq!(d.apply(&[qi(1)], &x).unwrap(), &Poly::one(n) - &cv.scale(&qi(2)));
    }

    #[test]
    fn z2_monomial_oracle() {
        // y·x^m = (m − c(1 − (−1)^m)) x^{m−1}
        let (w, lay) = z2_setup();
        let n = lay.nvars();
        let d = Dunkl::new(&w, &ClassParams::symbolic(&w, &lay), n);
        let x = Poly::<Q>::var(n, 0);
        let cv = Poly::<Q>::var(n, 1);
        for m in 1..8u32 {
            let odd = if m % 2 == 1 { 2 } else { 0 };
            let expect = &x.pow(m - 1) * &(&Poly::constant(n, qi(m as i64)) - &cv.scale(&qi(odd)));
            assert_eq!(d.apply(&[qi(1)], &x.pow(m)).unwrap(), expect);
        }
    }

    #[test]
    fn classical_limit_and_zero_parameter() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let c = ClassParams::constants(&[qi(0)], 3);
        let d = Dunkl::new(&w, &c, 3);
        let rep = x_commutator_report(&d, 3);
        assert!(rep.passed());
        let f = &Poly::<Q>::var(3, 0).pow(2) * &Poly::var(3, 2);
        assert_eq!(d.apply(&[qi(1), qi(0), qi(0)], &f).unwrap(), f.partial(0));
    }

    #[test]
    fn s3_commutes_and_is_equivariant() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let lay = VarLayout::quantum(3, 1);
        let d = Dunkl::new(&w, &ClassParams::symbolic(&w, &lay), lay.nvars());
        assert!(commutativity_report(&d, 4).passed());
        assert!(equivariance_report(&d, 3).unwrap().passed());
        assert!(x_commutator_report(&d, 3).passed());
    }

    #[test]
    fn perturbed_weight_breaks_commutativity() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let lay = VarLayout::quantum(3, 1);
        let mut weights = ClassParams::symbolic(&w, &lay).weights(&w);
        weights[0] = &weights[0] + &Poly::one(lay.nvars());
        let d = Dunkl::with_weights(&w, weights, lay.nvars());
        assert!(!commutativity_report(&d, 3).passed());
    }

    #[test]
    fn skew_form_matches_polynomial_action() {
        let w = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        let lay = VarLayout::quantum(2, 2);
        let n = lay.nvars();
        let d = Dunkl::new(&w, &ClassParams::symbolic(&w, &lay), n);
        let sk = d.as_skew(&[qi(1), qi(2)]);
        for f in monomials_upto::<Q>(2, n, 3) {
            let mut acc = RationalFunction::zero(n, w.root_forms(n));
            for (g, p) in sk.terms() {
                acc = acc.add(&p.apply_poly(&w.act(*g, &f)));
            }
            assert_eq!(acc.into_poly().unwrap(), d.apply(&[qi(1), qi(2)], &f).unwrap());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly(n: usize, nvars: usize) -> impl Strategy<Value = Poly<Q>> {
            prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..4), 0..5).prop_map(
                move |ts| {
                    let mut p = Poly::zero(nvars);
                    for (e, c) in ts {
                        p.add_term(pad_exponent(&e, nvars), qi(c));
                    }
                    p
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            #[test]
            fn linear_in_direction_and_input(f in small_poly(2, 4), g in small_poly(2, 4),
                                             a0 in -3i64..4, a1 in -3i64..4) {
                let w = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
                let lay = VarLayout::quantum(2, 2);
                let d = Dunkl::new(&w, &ClassParams::symbolic(&w, &lay), 4);
                let a = [qi(a0), qi(a1)];
                let lhs = d.apply(&a, &(&f + &g)).unwrap();
                prop_assert_eq!(&lhs, &(&d.apply(&a, &f).unwrap() + &d.apply(&a, &g).unwrap()));
                let split = &d.apply_basis(0, &f).unwrap().scale(&qi(a0))
                    + &d.apply_basis(1, &f).unwrap().scale(&qi(a1));
                prop_assert_eq!(d.apply(&a, &f).unwrap(), split);
            }

            #[test]
            fn lowers_degree_by_one(e in prop::collection::vec(0u32..4, 3)) {
                let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
                let lay = VarLayout::quantum(3, 1);
                let d = Dunkl::new(&w, &ClassParams::symbolic(&w, &lay), 4);
                let f = Poly::monomial(pad_exponent(&e, 4), qi(1));
                let deg: u32 = e.iter().sum();
                for i in 0..3 {
                    let r = d.apply_basis(i, &f).unwrap();
                    for (ex, _) in r.terms() {
                        prop_assert_eq!(ex[..3].iter().sum::<u32>() + 1, deg);
                    }
                }
            }
        }
    }
}
