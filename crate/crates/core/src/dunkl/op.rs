//! Olshanetsky–Perelomov operators, gauge conjugation by δ_c, quantum and
//! classical integrals.

use std::collections::BTreeSet;

use super::operator::{restrict_skew, OperatorExpr};
use super::quantum::{monomials_upto, unit, Dunkl};
use super::skew::{DiffOp, PhaseFn, SkewElement};
use crate::coxeter::{basic_invariants, ClassParams, ReflectionGroup, Side, VarLayout};
use crate::error::Result;
use crate::exact::{Field, Poly, RationalFunction};
use crate::report::CheckReport;

fn inv_root<F: Field>(nroots: usize, s: usize, k: u32, numer: Poly<F>, roots: &crate::exact::Roots<F>) -> RationalFunction<F> {
    let mut den = vec![0; nroots];
    den[s] = k;
    RationalFunction::new(numer, den, roots.clone())
}

/// `Δ_𝔥 = Σ (G⁻¹)_ij ∂_i ∂_j`.
pub fn laplacian_op<F: Field>(w: &ReflectionGroup<F>, nvars: usize) -> DiffOp<F> {
    let l = w.dim();
    let roots = w.root_forms(nvars);
    let mut op = DiffOp::zero(l, nvars, roots.clone());
    for i in 0..l {
        for j in 0..l {
            let g = &w.gram_inv()[i][j];
            if g.is_zero() {
                continue;
            }
            let mut e = vec![0; l];
            e[i] += 1;
            e[j] += 1;
            op.add_term(e, RationalFunction::constant(nvars, g.clone(), roots.clone()));
        }
    }
    op
}

/// `L̄ = Δ − Σ_s c_s (α_s,α_s) α_s⁻¹ ∂_{α_s^∨}`.
pub fn lbar<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> DiffOp<F> {
    let l = w.dim();
    let roots = w.root_forms(nvars);
    let mut op = laplacian_op(w, nvars);
    for (s, r) in w.reflections().iter().enumerate() {
        let k = w.root_norm(s);
        let coef = inv_root(roots.len(), s, 1, c.weight(w, s).scale(&-k), &roots);
        for (i, ci) in r.coroot.iter().enumerate() {
            if !ci.is_zero() {
                let mut e = vec![0; l];
                e[i] = 1;
                op.add_term(e, coef.scale(ci));
            }
        }
    }
    op
}

/// `L = Δ − Σ_s c_s(c_s+1)(α_s,α_s) α_s⁻²`.
pub fn op_operator<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> DiffOp<F> {
    let roots = w.root_forms(nvars);
    let mut op = laplacian_op(w, nvars);
    for s in 0..w.reflections().len() {
        let cs = c.weight(w, s);
        let num = (cs * &(cs + &Poly::one(nvars))).scale(&-w.root_norm(s));
        op.add_term(vec![0; w.dim()], inv_root(roots.len(), s, 2, num, &roots));
    }
    op
}

/// `u_i = ∂_i log δ_c = Σ_s c_s α_s(e_i)/α_s`.
pub fn log_derivative<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> Vec<RationalFunction<F>> {
    let roots = w.root_forms(nvars);
    (0..w.dim())
        .map(|i| {
            let mut acc = RationalFunction::zero(nvars, roots.clone());
            for (s, r) in w.reflections().iter().enumerate() {
                if !r.root[i].is_zero() {
                    let num = c.weight(w, s).scale(&r.root[i]);
                    acc = acc.add(&inv_root(roots.len(), s, 1, num, &roots));
                }
            }
            acc
        })
        .collect()
}

/// `δ_c = Π α_s^{c_s}` for nonnegative integer class values.
pub fn delta_c<F: Field>(w: &ReflectionGroup<F>, c: &[u32], nvars: usize) -> Poly<F> {
    let roots = w.root_forms(nvars);
    let mut d = Poly::one(nvars);
    for (s, r) in w.reflections().iter().enumerate() {
        d = &d * &roots[s].pow(c[r.class]);
    }
    d
}

/// `Σ (G⁻¹)_ij D_i D_j` in `ℂW ⋉ D(𝔥_reg)`.
pub fn dunkl_laplacian<F: Field>(op: &Dunkl<'_, F>) -> SkewElement<F, DiffOp<F>> {
    let w = op.group();
    let l = w.dim();
    let ds: Vec<_> = (0..l).map(|i| op.as_skew(&unit(l, i))).collect();
    let mut acc = SkewElement::zero(&DiffOp::zero(l, op.nvars(), w.root_forms(op.nvars())));
    for i in 0..l {
        for j in 0..l {
            let g = &w.gram_inv()[i][j];
            if !g.is_zero() {
                acc = acc.add(&ds[i].mul(w, &ds[j]).scale(g));
            }
        }
    }
    acc
}

/// `P(D)` for a polynomial `P` in the first ℓ variables (read as elements of 𝔥).
pub fn poly_of_dunkl<F: Field>(op: &Dunkl<'_, F>, p: &Poly<F>) -> SkewElement<F, DiffOp<F>> {
    let w = op.group();
    let l = w.dim();
    let n = op.nvars();
    let one = DiffOp::identity(l, n, w.root_forms(n));
    let ds: Vec<_> = (0..l).map(|i| op.as_skew(&unit(l, i))).collect();
    let mut powers: Vec<Vec<SkewElement<F, DiffOp<F>>>> = ds.iter().map(|_| vec![SkewElement::term(one.clone(), 0)]).collect();
    let mut acc = SkewElement::zero(&one);
    for (e, coef) in p.terms() {
        let mut term = SkewElement::term(one.clone(), 0);
        for i in 0..l {
            while powers[i].len() <= e[i] as usize {
                let next = powers[i].last().unwrap().mul(w, &ds[i]);
                powers[i].push(next);
            }
            term = term.mul(w, &powers[i][e[i] as usize]);
        }
        acc = acc.add(&term.scale(coef));
    }
    acc
}

/// A spanning set of invariants of degree ≤ `max_degree`.
pub fn invariant_spanning_set<F: Field>(w: &ReflectionGroup<F>, nvars: usize, max_degree: u32) -> Vec<Poly<F>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in monomials_upto::<F>(w.dim(), nvars, max_degree) {
        let s = w.symmetrize(&m);
        let Some((_, lc)) = s.leading_term() else { continue };
        let normalized = s.scale(&lc.inv());
        let key = format!("{:?}", normalized);
        if seen.insert(key) {
            out.push(normalized);
        }
    }
    out
}

/// `m(Σ D_i²) = L̄`, exactly as operators and on invariants of degree ≤ `max_degree`.
pub fn heckman_report<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize, max_degree: u32) -> CheckReport {
    let mut rep = CheckReport::new(format!("heckman {}", w.name()));
    let d = Dunkl::new(w, c, nvars);
    let expected = lbar(w, c, nvars);
    match restrict_skew(w, &dunkl_laplacian(&d)) {
        Ok(m) => rep.record(m == expected, || "m(ΣD²) ≠ L̄ as operators".into()),
        Err(e) => rep.fail(e.to_string()),
    }
    // AST route: strip trailing group/Dunkl factors and apply to invariants
    let weights = c.weights(w);
    let l = w.dim();
    let mut terms = Vec::new();
    for i in 0..l {
        for j in 0..l {
            let g = w.gram_inv()[i][j].clone();
            if g.is_zero() {
                continue;
            }
            let di = OperatorExpr::Dunkl { dir: unit(l, i), weights: weights.clone() };
            let dj = OperatorExpr::Dunkl { dir: unit(l, j), weights: weights.clone() };
            terms.push(OperatorExpr::Compose(vec![OperatorExpr::Scalar(g), di, dj]));
        }
    }
    let stripped = OperatorExpr::Sum(terms).strip_trailing();
    for f in invariant_spanning_set(w, nvars, max_degree) {
        let lhs = stripped.apply_poly(w, &f);
        let rhs = expected.apply_poly(&f);
        rep.record(lhs == rhs, || format!("invariant {:?}", f.total_degree()));
    }
    rep
}

/// `L̄(δ_c f) = δ_c·L f` for integer `c`, on monomials of degree ≤ `max_degree`,
/// together with `δ_c⁻¹ L̄ δ_c = L` as operators.
pub fn gauge_report<F: Field>(w: &ReflectionGroup<F>, c: &[u32], max_degree: u32) -> CheckReport {
    let n = w.dim();
    let mut rep = CheckReport::new(format!("gauge {} c={:?}", w.name(), c));
    let params = ClassParams::constants(&c.iter().map(|&v| F::from_i64(v as i64)).collect::<Vec<_>>(), n);
    let lb = lbar(w, &params, n);
    let l = op_operator(w, &params, n);
    let delta = delta_c(w, c, n);
    for f in monomials_upto::<F>(n, n, max_degree) {
        let lhs = lb.apply_poly(&(&delta * &f));
        let rhs = l.apply_poly(&f).mul_poly(&delta);
        rep.record(lhs == rhs, || format!("f of degree {:?}", f.total_degree()));
    }
    let conj = lb.gauge(&log_derivative(w, &params, n));
    rep.record(conj == l, || "δ⁻¹L̄δ ≠ L".into());
    rep
}

/// The same identity with symbolic parameters, as an operator equality.
pub fn gauge_symbolic_report<F: Field>(w: &ReflectionGroup<F>) -> CheckReport {
    let lay = VarLayout::quantum(w.dim(), w.num_reflection_classes());
    let n = lay.nvars();
    let c = ClassParams::symbolic(w, &lay);
    let mut rep = CheckReport::new(format!("gauge-symbolic {}", w.name()));
    let conj = lbar(w, &c, n).gauge(&log_derivative(w, &c, n));
    rep.record(conj == op_operator(w, &c, n), || "δ⁻¹L̄δ ≠ L".into());
    rep
}

/// `δ_c⁻¹ ∘ m(Σ D_i²) ∘ δ_c` for symbolic parameters.
pub fn op_from_dunkl<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> Result<DiffOp<F>> {
    let d = Dunkl::new(w, c, nvars);
    let m = restrict_skew(w, &dunkl_laplacian(&d))?;
    Ok(m.gauge(&log_derivative(w, c, nvars)))
}

/// `Σ_j ∂_j² − Σ_{i≠j} k(k+1)/(x_i − x_j)²`, written out directly.
pub fn calogero_moser_hamiltonian<F: Field>(w: &ReflectionGroup<F>, nvars: usize, k: &Poly<F>) -> DiffOp<F> {
    let n = w.dim();
    let roots = w.root_forms(nvars);
    let mut op = DiffOp::zero(n, nvars, roots.clone());
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 2;
        op.add_term(e, RationalFunction::constant(nvars, F::one(), roots.clone()));
    }
    let kk = k * &(k + &Poly::one(nvars));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut form = vec![F::zero(); n];
            form[i] = F::one();
            form[j] = -F::one();
            let diff = Poly::linear_form(nvars, 0, &form);
            // the stored root is ±(x_i − x_j); its square is the same
            let s = roots.iter().position(|r| *r == diff || *r == -&diff).expect("type A root");
            op.add_term(vec![0; n], inv_root(roots.len(), s, 2, kk.scale(&-F::one()), &roots));
        }
    }
    op
}

/// Integrals `L̄_i = m(P_i(D))` for the fixed basic invariants.
pub fn quantum_integrals_bar<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> Result<Vec<DiffOp<F>>> {
    let d = Dunkl::new(w, c, nvars);
    basic_invariants(w, nvars, Side::Momenta)
        .iter()
        .map(|p| restrict_skew(w, &poly_of_dunkl(&d, p)))
        .collect()
}

/// `L_i = δ_c⁻¹ L̄_i δ_c`.
pub fn quantum_integrals<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, nvars: usize) -> Result<Vec<DiffOp<F>>> {
    let u = log_derivative(w, c, nvars);
    Ok(quantum_integrals_bar(w, c, nvars)?.iter().map(|l| l.gauge(&u)).collect())
}

/// Pairwise commutation of the integrals, as operators and on invariants.
pub fn integrals_report<F: Field>(w: &ReflectionGroup<F>, max_degree: u32) -> CheckReport {
    let lay = VarLayout::quantum(w.dim(), w.num_reflection_classes());
    let n = lay.nvars();
    let c = ClassParams::symbolic(w, &lay);
    let mut rep = CheckReport::new(format!("integrals {}", w.name()));
    let bars = match quantum_integrals_bar(w, &c, n) {
        Ok(b) => b,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    let invs = invariant_spanning_set(w, n, max_degree);
    for i in 0..bars.len() {
        for j in i + 1..bars.len() {
            rep.record(bars[i].commutator(&bars[j]).is_zero(), || format!("[L̄{},L̄{}] ≠ 0", i + 1, j + 1));
            for f in &invs {
                let a = bars[i].apply(&bars[j].apply_poly(f));
                let b = bars[j].apply(&bars[i].apply_poly(f));
                rep.record(a == b, || format!("[L̄{},L̄{}] f ≠ 0", i + 1, j + 1));
            }
        }
    }
    // the quadratic integral is L̄ itself when P is the invariant form
    if let Some(q) = bars.iter().find(|b| b.order() == Some(2)) {
        let quad = crate::coxeter::invariants::quadratic_invariant(w, n, Side::Momenta);
        let is_form = basic_invariants(w, n, Side::Momenta).iter().any(|p| *p == quad);
        if is_form {
            rep.record(*q == lbar(w, &c, n), || "quadratic integral ≠ L̄".into());
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// classical side

/// `D⁰_a = p_a − Σ c_s α_s(a)/α_s·(1 − s)` in `ℂW ⋉ 𝒪(T*𝔥_reg)`; the layout must have momenta.
pub fn classical_dunkl<F: Field>(
    w: &ReflectionGroup<F>,
    c: &ClassParams<F>,
    lay: &VarLayout,
    a: &[F],
) -> SkewElement<F, PhaseFn<F>> {
    let n = lay.nvars();
    let roots = w.root_forms(n);
    let pa = Poly::linear_form(n, lay.p(0), a);
    let mut el = SkewElement::term(PhaseFn(RationalFunction::from_poly(pa, roots.clone())), 0);
    for (s, r) in w.reflections().iter().enumerate() {
        let k = ReflectionGroup::<F>::pair(&r.root, a);
        if k.is_zero() || c.weight(w, s).is_zero() {
            continue;
        }
        let coef = inv_root(roots.len(), s, 1, c.weight(w, s).scale(&k), &roots);
        el.add_term(0, PhaseFn(coef.neg()));
        el.add_term(r.element, PhaseFn(coef));
    }
    el
}

/// `L̄⁰ = p² − Σ c_s (α_s,α_s) α_s⁻¹ p_{α_s^∨}` written out.
pub fn classical_lbar<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, lay: &VarLayout) -> RationalFunction<F> {
    let n = lay.nvars();
    let roots = w.root_forms(n);
    let mut out = RationalFunction::from_poly(p_squared(w, lay), roots.clone());
    for (s, r) in w.reflections().iter().enumerate() {
        let pc = Poly::linear_form(n, lay.p(0), &r.coroot);
        let num = (c.weight(w, s) * &pc).scale(&-w.root_norm(s));
        out = out.add(&inv_root(roots.len(), s, 1, num, &roots));
    }
    out
}

fn p_squared<F: Field>(w: &ReflectionGroup<F>, lay: &VarLayout) -> Poly<F> {
    let n = lay.nvars();
    let mut p2 = Poly::zero(n);
    for i in 0..w.dim() {
        for j in 0..w.dim() {
            let g = &w.gram_inv()[i][j];
            if !g.is_zero() {
                p2.add_assign_ref(&(&Poly::var(n, lay.p(i)) * &Poly::var(n, lay.p(j))).scale(g));
            }
        }
    }
    p2
}

/// `L⁰ = p² − Σ c_s² (α_s,α_s)/α_s²`.
pub fn classical_op_hamiltonian<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, lay: &VarLayout) -> RationalFunction<F> {
    let n = lay.nvars();
    let roots = w.root_forms(n);
    let mut out = RationalFunction::from_poly(p_squared(w, lay), roots.clone());
    for s in 0..w.reflections().len() {
        let cs = c.weight(w, s);
        let num = (cs * cs).scale(&-w.root_norm(s));
        out = out.add(&inv_root(roots.len(), s, 2, num, &roots));
    }
    out
}

/// `θ_c(p_i) = p_i + ∂_i log δ_c`.
pub fn theta<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, lay: &VarLayout, f: &RationalFunction<F>) -> RationalFunction<F> {
    let n = lay.nvars();
    let u = log_derivative(w, c, n);
    let images: Vec<(usize, RationalFunction<F>)> = (0..w.dim())
        .map(|i| {
            let pi = RationalFunction::from_poly(Poly::var(n, lay.p(i)), f.roots().clone());
            (lay.p(i), pi.add(&u[i]))
        })
        .collect();
    f.substitute_vars(&images)
}

/// Classical identities: commuting `D⁰`, `[D⁰_a, x]`, `m(ΣD⁰²) = L̄⁰`, `θ_c(L̄⁰) = L⁰`.
pub fn classical_report<F: Field>(w: &ReflectionGroup<F>, c: &ClassParams<F>, lay: &VarLayout) -> CheckReport {
    let l = w.dim();
    let n = lay.nvars();
    let roots = w.root_forms(n);
    let mut rep = CheckReport::new(format!("classical {}", w.name()));
    let ds: Vec<_> = (0..l).map(|i| classical_dunkl(w, c, lay, &unit(l, i))).collect();
    for i in 0..l {
        for j in i + 1..l {
            rep.record(ds[i].commutator(w, &ds[j]).is_zero(), || format!("[D⁰{i},D⁰{j}] ≠ 0"));
        }
    }
    for i in 0..l {
        for xi in 0..l {
            let x = SkewElement::term(PhaseFn(RationalFunction::from_poly(Poly::var(n, xi), roots.clone())), 0);
            let comm = ds[i].commutator(w, &x);
            let mut expect = SkewElement::zero(&PhaseFn(RationalFunction::zero(n, roots.clone())));
            for (s, r) in w.reflections().iter().enumerate() {
                let k = r.root[i].clone() * &r.coroot[xi];
                if !k.is_zero() {
                    let v = c.weight(w, s).scale(&-k);
                    expect.add_term(r.element, PhaseFn(RationalFunction::from_poly(v, roots.clone())));
                }
            }
            rep.record(comm == expect, || format!("[D⁰{i}, x{xi}]"));
        }
    }
    let mut lap = SkewElement::zero(&PhaseFn(RationalFunction::zero(n, roots.clone())));
    for i in 0..l {
        for j in 0..l {
            let g = &w.gram_inv()[i][j];
            if !g.is_zero() {
                lap = lap.add(&ds[i].mul(w, &ds[j]).scale(g));
            }
        }
    }
    match restrict_skew(w, &lap) {
        Ok(m) => {
            let lb = classical_lbar(w, c, lay);
            rep.record(m.0 == lb, || "m(ΣD⁰²) ≠ L̄⁰".into());
            let th = theta(w, c, lay, &lb);
            rep.record(th == classical_op_hamiltonian(w, c, lay), || "θ_c(L̄⁰) ≠ L⁰".into());
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qi, Q};

    #[test]
    fn z2_operators() {
        let w = ReflectionGroup::<Q>::z2();
        let c = ClassParams::constants(&[qi(1)], 1);
        let l = op_operator(&w, &c, 1);
        // L = ∂² − 2/x²
        let roots = w.root_forms(1);
        let mut expect = DiffOp::derivative(1, 1, roots.clone(), vec![2]);
        expect.add_term(vec![0], RationalFunction::new(Poly::constant(1, qi(-2)), vec![2], roots));
        assert_eq!(l, expect);
        assert!(gauge_report(&w, &[1], 4).passed());
        assert!(gauge_report(&w, &[2], 4).passed());
    }

    #[test]
    fn zero_parameter_reduces_to_laplacian() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let c = ClassParams::constants(&[qi(0)], 3);
        assert_eq!(op_operator(&w, &c, 3), laplacian_op(&w, 3));
        assert!(gauge_report(&w, &[0], 3).passed());
    }

    #[test]
    fn heckman_s3_and_b2() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let lay = VarLayout::quantum(3, 1);
        assert!(heckman_report(&w, &ClassParams::symbolic(&w, &lay), lay.nvars(), 4).passed());
        let b = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        let lay = VarLayout::quantum(2, 2);
        assert!(heckman_report(&b, &ClassParams::symbolic(&b, &lay), lay.nvars(), 4).passed());
    }

    #[test]
    fn cm_hamiltonian_from_dunkl() {
        for n in 2..=3 {
            let w = ReflectionGroup::<Q>::symmetric(n).unwrap();
            let lay = VarLayout::quantum(n, 1);
            let nv = lay.nvars();
            let c = ClassParams::symbolic(&w, &lay);
            let l = op_from_dunkl(&w, &c, nv).unwrap();
            let k = Poly::var(nv, lay.param(0));
            assert_eq!(l, calogero_moser_hamiltonian(&w, nv, &k));
            assert_eq!(op_operator(&w, &c, nv), l);
        }
    }

    #[test]
    fn s3_integrals_commute() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let rep = integrals_report(&w, 3);
        assert!(rep.passed(), "{rep:?}");
        let lay = VarLayout::quantum(3, 1);
        let c = ClassParams::symbolic(&w, &lay);
        let bars = quantum_integrals_bar(&w, &c, lay.nvars()).unwrap();
        // P_1 = Σy_i restricts to Σ∂_i
        let sum = DiffOp::directional(3, lay.nvars(), w.root_forms(lay.nvars()), &[qi(1), qi(1), qi(1)]);
        assert_eq!(bars[0], sum);
    }

    #[test]
    fn classical_identities() {
        let w = ReflectionGroup::<Q>::z2();
        let lay = VarLayout::classical(1, 1);
        let c = ClassParams::symbolic(&w, &lay);
        assert!(classical_report(&w, &c, &lay).passed());
        // θ_c(L̄⁰) = p² − c²/x² for the normalization (α,α) = 1
        let n = lay.nvars();
        let roots = w.root_forms(n);
        let p2 = Poly::var(n, lay.p(0)).pow(2);
        let c2 = Poly::var(n, lay.param(0)).pow(2);
        let expect = RationalFunction::from_poly(p2, roots.clone())
            .sub(&RationalFunction::new(c2, vec![2], roots));
        assert_eq!(classical_op_hamiltonian(&w, &c, &lay), expect);

        let s3 = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let lay = VarLayout::classical(3, 1);
        let c = ClassParams::symbolic(&s3, &lay);
        assert!(classical_report(&s3, &c, &lay).passed());
        assert!(!classical_dunkl(&s3, &c, &lay, &[qi(1), qi(0), qi(0)]).is_invariant(&s3));
        let zero = ClassParams::constants(&[qi(0)], lay.nvars());
        let d0 = classical_dunkl(&s3, &zero, &lay, &[qi(1), qi(0), qi(0)]);
        assert_eq!(d0.terms().len(), 1);
        assert_eq!(d0.coefficient(0).0.into_poly().unwrap(), Poly::var(lay.nvars(), lay.p(0)));
    }

    #[test]
    fn op_is_invariant() {
        let w = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        let lay = VarLayout::quantum(2, 2);
        let l = op_operator(&w, &ClassParams::symbolic(&w, &lay), lay.nvars());
        let el = SkewElement::term(l, 0);
        assert!(el.is_invariant(&w));
    }
}
