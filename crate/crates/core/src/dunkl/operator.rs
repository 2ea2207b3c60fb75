//! Operator expressions on rational functions and the restriction map to
//! invariants.

use super::skew::{DiffOp, SkewCoeff, SkewElement};
use crate::coxeter::ReflectionGroup;
use crate::error::{Error, Result};
use crate::exact::{Field, Poly, RationalFunction};

#[derive(Clone, Debug)]
pub enum OperatorExpr<F> {
    Identity,
    Scalar(F),
    MulBy(RationalFunction<F>),
    /// `∂/∂x_i`.
    Partial(usize),
    /// Group element by index.
    Group(usize),
    /// Dunkl operator with per-reflection weights.
    Dunkl { dir: Vec<F>, weights: Vec<Poly<F>> },
    Sum(Vec<OperatorExpr<F>>),
    /// `Compose([A, B, C]) f = A(B(C f))`.
    Compose(Vec<OperatorExpr<F>>),
}

fn act_rf<F: Field>(w: &ReflectionGroup<F>, g: usize, f: &RationalFunction<F>) -> RationalFunction<F> {
    f.substitute_linear(w.x_substitution(g), w.root_images(g))
}

impl<F: Field> OperatorExpr<F> {
    pub fn apply(&self, w: &ReflectionGroup<F>, f: &RationalFunction<F>) -> RationalFunction<F> {
        match self {
            Self::Identity => f.clone(),
            Self::Scalar(c) => f.scale(c),
            Self::MulBy(a) => a.mul(f),
            Self::Partial(i) => f.partial(*i),
            Self::Group(g) => act_rf(w, *g, f),
            Self::Dunkl { dir, weights } => {
                let mut out = f.directional(0, dir);
                for (s, r) in w.reflections().iter().enumerate() {
                    let k = ReflectionGroup::<F>::pair(&r.root, dir);
                    if k.is_zero() || weights[s].is_zero() {
                        continue;
                    }
                    let diff = f.sub(&act_rf(w, r.element, f)).div_root_pow(s, 1);
                    out = out.sub(&diff.mul_poly(&weights[s]).scale(&k));
                }
                out
            }
            Self::Sum(xs) => xs
                .iter()
                .fold(RationalFunction::zero(f.nvars(), f.roots().clone()), |acc, x| {
                    acc.add(&x.apply(w, f))
                }),
            Self::Compose(xs) => xs.iter().rev().fold(f.clone(), |acc, x| x.apply(w, &acc)),
        }
    }

    pub fn apply_poly(&self, w: &ReflectionGroup<F>, f: &Poly<F>) -> RationalFunction<F> {
        self.apply(w, &RationalFunction::from_poly(f.clone(), w.root_forms(f.nvars())))
    }

    /// Lower into `ℂW ⋉ D(𝔥_reg)` over a coefficient ring with `nvars` variables.
    pub fn to_skew(&self, w: &ReflectionGroup<F>, nvars: usize) -> SkewElement<F, DiffOp<F>> {
        let dim = w.dim();
        let roots = w.root_forms(nvars);
        let one = DiffOp::identity(dim, nvars, roots.clone());
        match self {
            Self::Identity => SkewElement::term(one, 0),
            Self::Scalar(c) => SkewElement::term(one.scale(c), 0),
            Self::MulBy(a) => SkewElement::term(DiffOp::mul_by(dim, a.clone()), 0),
            Self::Partial(i) => {
                let mut e = vec![0; dim];
                e[*i] = 1;
                SkewElement::term(DiffOp::derivative(dim, nvars, roots, e), 0)
            }
            Self::Group(g) => SkewElement::term(one, *g),
            Self::Dunkl { dir, weights } => {
                super::quantum::Dunkl::with_weights(w, weights.clone(), nvars).as_skew(dir)
            }
            Self::Sum(xs) => xs
                .iter()
                .fold(SkewElement::zero(&one), |acc, x| acc.add(&x.to_skew(w, nvars))),
            Self::Compose(xs) => xs
                .iter()
                .fold(SkewElement::term(one.clone(), 0), |acc, x| acc.mul(w, &x.to_skew(w, nvars))),
        }
    }

    /// Symbolic form of `m`: in the rightmost factor of each composition
    /// (the one that sees the invariant input) a group element becomes the
    /// identity and a Dunkl operator becomes the plain directional derivative.
    pub fn strip_trailing(&self) -> Self {
        match self {
            Self::Group(_) => Self::Identity,
            Self::Dunkl { dir, .. } => Self::Sum(
                dir.iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(i, a)| Self::Compose(vec![Self::Scalar(a.clone()), Self::Partial(i)]))
                    .collect(),
            ),
            Self::Sum(xs) => Self::Sum(xs.iter().map(Self::strip_trailing).collect()),
            Self::Compose(xs) => {
                let mut ys = xs.clone();
                if let Some(last) = ys.pop() {
                    ys.push(last.strip_trailing());
                }
                Self::Compose(ys)
            }
            other => other.clone(),
        }
    }
}

/// Heckman's `m`: for a W-invariant `B = Σ P_g g`, the differential operator
/// `Σ P_g` by which `B` acts on invariant functions.
pub fn restrict_to_invariants<F: Field>(
    w: &ReflectionGroup<F>,
    b: &OperatorExpr<F>,
    nvars: usize,
) -> Result<DiffOp<F>> {
    restrict_skew(w, &b.to_skew(w, nvars))
}

pub fn restrict_skew<F: Field, C: SkewCoeff<F>>(w: &ReflectionGroup<F>, b: &SkewElement<F, C>) -> Result<C> {
    if !b.is_invariant(w) {
        return Err(Error::NotInvariant);
    }
    Ok(b.restrict())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{ClassParams, VarLayout};
    use crate::exact::qi;
    use crate::exact::Q;

    #[test]
    fn single_group_element_restricts_to_identity_or_fails() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let n = 4;
        // a non-central element is not invariant as an operator
        let s = w.reflections()[0].element;
        assert_eq!(restrict_to_invariants(&w, &OperatorExpr::Group(s), n), Err(Error::NotInvariant));
        // its strip is the identity on invariants
        let f = Poly::<Q>::var(n, 0).pow(2) + Poly::var(n, 1).pow(2) + Poly::var(n, 2).pow(2);
        let e = OperatorExpr::Group(s).strip_trailing();
        assert_eq!(e.apply_poly(&w, &f).into_poly().unwrap(), f);
        // class sum is invariant and restricts to |class|·id
        let sum = OperatorExpr::Sum(w.reflections().iter().map(|r| OperatorExpr::Group(r.element)).collect());
        let m = restrict_to_invariants(&w, &sum, n).unwrap();
        assert_eq!(m, DiffOp::identity(3, n, w.root_forms(n)).scale(&qi(3)));
    }

    #[test]
    fn ast_application_matches_skew_form() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let lay = VarLayout::quantum(3, 1);
        let n = lay.nvars();
        let weights = ClassParams::symbolic(&w, &lay).weights(&w);
        let dx = |i| OperatorExpr::Dunkl { dir: crate::dunkl::quantum::unit(3, i), weights: weights.clone() };
        let expr = OperatorExpr::Compose(vec![dx(0), OperatorExpr::Group(1), dx(1)]);
        let sk = expr.to_skew(&w, n);
        let f = &Poly::<Q>::var(n, 0).pow(3) * &Poly::var(n, 2);
        let direct = expr.apply_poly(&w, &f);
        let mut via = RationalFunction::zero(n, w.root_forms(n));
        for (g, p) in sk.terms() {
            via = via.add(&p.apply_poly(&w.act(*g, &f)));
        }
        assert_eq!(direct, via);
    }
}
