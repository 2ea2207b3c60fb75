//! The skew group algebras `ℂW ⋉ D(𝔥_reg)` and `ℂW ⋉ 𝒪(T*𝔥_reg)`.
//!
//! Elements are finite sums `Σ_g P_g·g` with the group element on the right,
//! multiplied by `(P g)(Q h) = P·(g Q g⁻¹)·gh`.

use std::collections::BTreeMap;

use crate::coxeter::ReflectionGroup;
use crate::exact::{Exponent, Field, Poly, RationalFunction, Roots};

/// Coefficient algebra on which W acts by conjugation.
pub trait SkewCoeff<F: Field>: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &F) -> Self;
    fn is_zero(&self) -> bool;
    /// `g X g⁻¹`.
    fn conj(&self, w: &ReflectionGroup<F>, g: usize) -> Self;
}

/// Differential operator `Σ a_m(x) ∂^m` with coefficients on the left.
#[derive(Clone, Debug)]
pub struct DiffOp<F> {
    dim: usize,
    nvars: usize,
    roots: Roots<F>,
    terms: BTreeMap<Exponent, RationalFunction<F>>,
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn sub_indices(m: &[u32]) -> Vec<Exponent> {
    let mut out = vec![vec![]];
    for &mi in m {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=mi).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

impl<F: Field> PartialEq for DiffOp<F> {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim && self.terms == o.terms
    }
}

impl<F: Field> DiffOp<F> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn zero(dim: usize, nvars: usize, roots: Roots<F>) -> Self {
        Self { dim, nvars, roots, terms: BTreeMap::new() }
    }

    /// Multiplication operator.
    pub fn mul_by(dim: usize, f: RationalFunction<F>) -> Self {
        let mut op = Self::zero(dim, f.nvars(), f.roots().clone());
        op.add_term(vec![0; dim], f);
        op
    }

    pub fn identity(dim: usize, nvars: usize, roots: Roots<F>) -> Self {
        let one = RationalFunction::constant(nvars, F::one(), roots.clone());
        Self::mul_by(dim, one)
    }

    /// `∂^m`.
    pub fn derivative(dim: usize, nvars: usize, roots: Roots<F>, m: Exponent) -> Self {
        let mut op = Self::zero(dim, nvars, roots.clone());
        op.add_term(m, RationalFunction::constant(nvars, F::one(), roots));
        op
    }

    /// `∂_a = Σ a_i ∂_i`.
    pub fn directional(dim: usize, nvars: usize, roots: Roots<F>, a: &[F]) -> Self {
        let mut op = Self::zero(dim, nvars, roots.clone());
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                let mut m = vec![0; dim];
                m[i] = 1;
                op.add_term(m, RationalFunction::constant(nvars, ai.clone(), roots.clone()));
            }
        }
        op
    }

    pub fn add_term(&mut self, m: Exponent, a: RationalFunction<F>) {
        if a.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old.add(&a);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, a);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, RationalFunction<F>> {
        &self.terms
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn roots(&self) -> &Roots<F> {
        &self.roots
    }

    /// Highest total derivative order, or `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn apply(&self, f: &RationalFunction<F>) -> RationalFunction<F> {
        let mut acc = RationalFunction::zero(self.nvars, self.roots.clone());
        for (m, a) in &self.terms {
            let mut g = f.clone();
            for (i, &k) in m.iter().enumerate() {
                for _ in 0..k {
                    g = g.partial(i);
                }
            }
            acc = acc.add(&a.mul(&g));
        }
        acc
    }

    pub fn apply_poly(&self, f: &Poly<F>) -> RationalFunction<F> {
        self.apply(&RationalFunction::from_poly(f.clone(), self.roots.clone()))
    }

    /// Operator composition `self ∘ o` via the Leibniz rule.
    pub fn compose(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.nvars, self.roots.clone());
        let mut deriv_cache: BTreeMap<(Exponent, Exponent), RationalFunction<F>> = BTreeMap::new();
        for (m, a) in &self.terms {
            for k in sub_indices(m) {
                let mut c = 1i64;
                for (mi, ki) in m.iter().zip(&k) {
                    c *= binom(*mi, *ki);
                }
                let rest: Exponent = m.iter().zip(&k).map(|(mi, ki)| mi - ki).collect();
                for (n, b) in &o.terms {
                    let db = deriv_cache
                        .entry((k.clone(), n.clone()))
                        .or_insert_with(|| {
                            let mut d = b.clone();
                            for (i, &ki) in k.iter().enumerate() {
                                for _ in 0..ki {
                                    d = d.partial(i);
                                }
                            }
                            d
                        })
                        .clone();
                    if db.is_zero() {
                        continue;
                    }
                    let idx: Exponent = rest.iter().zip(n).map(|(r, ni)| r + ni).collect();
                    out.add_term(idx, a.mul(&db).scale(&F::from_i64(c)));
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &Self) -> Self {
        SkewCoeff::sub(&self.compose(o), &o.compose(self))
    }

    /// `δ⁻¹ ∘ self ∘ δ` given `u_i = ∂_i log δ`: each `∂_i` becomes `∂_i + u_i`.
    pub fn gauge(&self, u: &[RationalFunction<F>]) -> Self {
        let shifted: Vec<Self> = (0..self.dim)
            .map(|i| {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                let mut d = Self::derivative(self.dim, self.nvars, self.roots.clone(), e);
                d.add_term(vec![0; self.dim], u[i].clone());
                d
            })
            .collect();
        let mut out = Self::zero(self.dim, self.nvars, self.roots.clone());
        for (m, a) in &self.terms {
            let mut op = Self::mul_by(self.dim, a.clone());
            for (i, &k) in m.iter().enumerate() {
                for _ in 0..k {
                    op = op.compose(&shifted[i]);
                }
            }
            out = SkewCoeff::add(&out, &op);
        }
        out
    }

    /// Expand as an operator expression.
    pub fn to_expr(&self) -> super::operator::OperatorExpr<F> {
        use super::operator::OperatorExpr as E;
        E::Sum(
            self.terms
                .iter()
                .map(|(m, a)| {
                    let mut chain = vec![E::MulBy(a.clone())];
                    for (i, &k) in m.iter().enumerate() {
                        for _ in 0..k {
                            chain.push(E::Partial(i));
                        }
                    }
                    E::Compose(chain)
                })
                .collect(),
        )
    }
}

impl<F: Field> SkewCoeff<F> for DiffOp<F> {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim, self.nvars, self.roots.clone())
    }

    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(m.clone(), a.clone());
        }
        out
    }

    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(m.clone(), a.neg());
        }
        out
    }

    fn mul(&self, o: &Self) -> Self {
        self.compose(o)
    }

    fn scale(&self, c: &F) -> Self {
        let mut out = self.zero_like();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.scale(c));
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn conj(&self, w: &ReflectionGroup<F>, g: usize) -> Self {
        // g ∂_i g⁻¹ = ∂_{g e_i} = Σ_k M_ki ∂_k
        let mt = crate::exact::linalg::transpose(w.element(g));
        let dsub = crate::exact::LinearSubstitution::from_matrix(&mt);
        let mut out = self.zero_like();
        for (m, a) in &self.terms {
            let a2 = a.substitute_linear(w.x_substitution(g), w.root_images(g));
            let ops = Poly::monomial(m.clone(), F::one()).substitute_linear(&dsub);
            for (n, c) in ops.terms() {
                out.add_term(n.clone(), a2.scale(c));
            }
        }
        out
    }
}

/// A function on `T*𝔥_reg` (ring `[x, p, …]`), with W acting on both blocks.
#[derive(Clone, Debug)]
pub struct PhaseFn<F>(pub RationalFunction<F>);

impl<F: Field> PartialEq for PhaseFn<F> {
    fn eq(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

impl<F: Field> SkewCoeff<F> for PhaseFn<F> {
    fn zero_like(&self) -> Self {
        PhaseFn(RationalFunction::zero(self.0.nvars(), self.0.roots().clone()))
    }
    fn add(&self, o: &Self) -> Self {
        PhaseFn(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        PhaseFn(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        PhaseFn(self.0.mul(&o.0))
    }
    fn scale(&self, c: &F) -> Self {
        PhaseFn(self.0.scale(c))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn conj(&self, w: &ReflectionGroup<F>, g: usize) -> Self {
        PhaseFn(self.0.substitute_linear(w.xp_substitution(g), w.root_images(g)))
    }
}

/// `Σ_g P_g·g`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewElement<F, C> {
    zero: C,
    terms: BTreeMap<usize, C>,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field, C: SkewCoeff<F>> SkewElement<F, C> {
    pub fn zero(template: &C) -> Self {
        Self { zero: template.zero_like(), terms: BTreeMap::new(), _f: Default::default() }
    }

    /// `P·g`.
    pub fn term(p: C, g: usize) -> Self {
        let mut out = Self::zero(&p);
        out.add_term(g, p);
        out
    }

    pub fn add_term(&mut self, g: usize, p: C) {
        if p.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            Some(old) => {
                let s = old.add(&p);
                if !s.is_zero() {
                    self.terms.insert(g, s);
                }
            }
            None => {
                self.terms.insert(g, p);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<usize, C> {
        &self.terms
    }

    pub fn coefficient(&self, g: usize) -> C {
        self.terms.get(&g).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, p) in &o.terms {
            out.add_term(*g, p.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, p) in &o.terms {
            out.add_term(*g, p.scale(&-F::one()));
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.zero);
        for (g, p) in &self.terms {
            out.add_term(*g, p.scale(c));
        }
        out
    }

    pub fn mul(&self, w: &ReflectionGroup<F>, o: &Self) -> Self {
        let mut out = Self::zero(&self.zero);
        for (g, p) in &self.terms {
            for (h, q) in &o.terms {
                out.add_term(w.mul(*g, *h), p.mul(&q.conj(w, *g)));
            }
        }
        out
    }

    pub fn commutator(&self, w: &ReflectionGroup<F>, o: &Self) -> Self {
        self.mul(w, o).sub(&o.mul(w, self))
    }

    /// `h·self·h⁻¹`.
    pub fn conjugate(&self, w: &ReflectionGroup<F>, h: usize) -> Self {
        let hi = w.inverse(h);
        let mut out = Self::zero(&self.zero);
        for (g, p) in &self.terms {
            out.add_term(w.mul(w.mul(h, *g), hi), p.conj(w, h));
        }
        out
    }

    pub fn is_invariant(&self, w: &ReflectionGroup<F>) -> bool {
        (0..w.order()).all(|h| self.conjugate(w, h) == *self)
    }

    /// Heckman's map: the group elements act trivially on invariants, so
    /// `m(Σ P_g g) = Σ P_g`.
    pub fn restrict(&self) -> C {
        self.terms.values().fold(self.zero.clone(), |acc, p| acc.add(p))
    }
}
