//! Normal forms in the rational Cherednik algebra `H_{t,c}`.
//!
//! A basis element is `g·y^m·f(x)`; coefficients are polynomials in the
//! coordinates together with the central parameters `t, c`. Products are
//! computed by right multiplication by one generator at a time:
//!
//! * `(g y^m f)·x_i = g y^m (f x_i)`
//! * `(g y^m f)·h = gh (h⁻¹yh)^m (h⁻¹·f)`
//! * `(g y^m f)·y_j = g y^{m+e_j} f − t g y^m ∂_j f + Σ_s c_s α_s(e_j) (g y^m q_s)·s`
//!   with `q_s = (f − s·f)/α_s`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{ClassParams, ReflectionGroup, VarLayout};
use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{choose, monomials_of_degree, Exponent, Field, LinearSubstitution, Poly};
use crate::report::CheckReport;

pub type Key = (usize, Exponent);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwElement<F> {
    nvars: usize,
    terms: BTreeMap<Key, Poly<F>>,
}

impl<F: Field> PbwElement<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<Key, Poly<F>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, key: Key, f: Poly<F>) {
        if f.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = &old + &f;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, f);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, f) in &o.terms {
            out.add_term(k.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, f) in &o.terms {
            out.add_term(k.clone(), -f);
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_poly(&Poly::constant(self.nvars, c.clone()))
    }

    /// Right multiplication by a polynomial in `x, t, c`.
    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, f) in &self.terms {
            out.add_term(k.clone(), f * p);
        }
        out
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            out.add_term(k.clone(), f(p));
        }
        out
    }

    /// Maximal filtration degree `|m| + deg_x f` over all terms.
    pub fn filtration_degree(&self, dim: usize) -> Option<u32> {
        self.terms
            .iter()
            .map(|((_, m), f)| m.iter().sum::<u32>() + f.degree_in(0..dim).unwrap_or(0))
            .max()
    }

    /// Expand the coefficients into x-monomials: `(g, m, n) → coefficient in t, c`.
    pub fn basis_expansion(&self, dim: usize) -> BTreeMap<(usize, Exponent, Exponent), Poly<F>> {
        let mut out = BTreeMap::new();
        for ((g, m), f) in &self.terms {
            for (n, c) in f.split_leading(dim) {
                out.insert((*g, m.clone(), n), c);
            }
        }
        out
    }
}

/// `H_{t,c}` for a group, with symbolic `t` and class parameters.
#[derive(Clone, Debug)]
pub struct Cherednik<'a, F> {
    w: &'a ReflectionGroup<F>,
    layout: VarLayout,
    weights: Vec<Poly<F>>,
    roots: Vec<Poly<F>>,
    /// For each h: substitution `y_j ↦ h⁻¹ y_j h` on y-symbols.
    yconj: Vec<LinearSubstitution<F>>,
}

impl<'a, F: Field> Cherednik<'a, F> {
    /// Ring `[x_1..x_ℓ, t, c_1..c_k]` with one symbolic parameter per class.
    pub fn new(w: &'a ReflectionGroup<F>) -> Self {
        let layout = VarLayout::with_t(w.dim(), w.num_reflection_classes());
        let c = ClassParams::symbolic(w, &layout);
        Self::with_params(w, layout, &c)
    }

    pub fn with_params(w: &'a ReflectionGroup<F>, layout: VarLayout, c: &ClassParams<F>) -> Self {
        assert!(layout.t && !layout.momenta && layout.dim == w.dim());
        let n = layout.nvars();
        let weights = c.weights(w);
        let roots = w.reflections().iter().map(|r| Poly::linear_form(n, 0, &r.root)).collect();
        let yconj = (0..w.order())
            .map(|h| {
                let a = w.element(w.inverse(h));
                LinearSubstitution::from_matrix(&linalg::transpose(a))
            })
            .collect();
        Self { w, layout, weights, roots, yconj }
    }

    pub fn group(&self) -> &ReflectionGroup<F> {
        self.w
    }

    pub fn layout(&self) -> &VarLayout {
        &self.layout
    }

    pub fn nvars(&self) -> usize {
        self.layout.nvars()
    }

    pub fn dim(&self) -> usize {
        self.w.dim()
    }

    pub fn t(&self) -> Poly<F> {
        Poly::var(self.nvars(), self.layout.t_var())
    }

    pub fn param(&self, class: usize) -> Poly<F> {
        Poly::var(self.nvars(), self.layout.param(class))
    }

    pub fn weights(&self) -> &[Poly<F>] {
        &self.weights
    }

    pub fn scalar(&self, p: Poly<F>) -> PbwElement<F> {
        let mut e = PbwElement::zero(self.nvars());
        e.add_term((0, vec![0; self.dim()]), p);
        e
    }

    pub fn one(&self) -> PbwElement<F> {
        self.scalar(Poly::one(self.nvars()))
    }

    pub fn x(&self, i: usize) -> PbwElement<F> {
        self.scalar(Poly::var(self.nvars(), i))
    }

    /// `Σ ξ_i x_i`.
    pub fn x_form(&self, xi: &[F]) -> PbwElement<F> {
        self.scalar(Poly::linear_form(self.nvars(), 0, xi))
    }

    pub fn y(&self, j: usize) -> PbwElement<F> {
        let mut m = vec![0; self.dim()];
        m[j] = 1;
        let mut e = PbwElement::zero(self.nvars());
        e.add_term((0, m), Poly::one(self.nvars()));
        e
    }

    /// `Σ a_j y_j`.
    pub fn y_form(&self, a: &[F]) -> PbwElement<F> {
        let mut e = PbwElement::zero(self.nvars());
        for (j, aj) in a.iter().enumerate() {
            if !aj.is_zero() {
                e = e.add(&self.y(j).scale(aj));
            }
        }
        e
    }

    pub fn group_element(&self, g: usize) -> PbwElement<F> {
        let mut e = PbwElement::zero(self.nvars());
        e.add_term((g, vec![0; self.dim()]), Poly::one(self.nvars()));
        e
    }

    /// The basis element `g·y^m·x^n`.
    pub fn basis(&self, g: usize, m: &[u32], n: &[u32]) -> PbwElement<F> {
        let mut e = PbwElement::zero(self.nvars());
        let mut ex = n.to_vec();
        ex.resize(self.nvars(), 0);
        e.add_term((g, m.to_vec()), Poly::monomial(ex, F::one()));
        e
    }

    fn conj_y_monomial(&self, h: usize, m: &[u32]) -> Poly<F> {
        Poly::monomial(m.to_vec(), F::one()).substitute_linear(&self.yconj[h])
    }

    pub fn mul_group(&self, u: &PbwElement<F>, h: usize) -> PbwElement<F> {
        let hi = self.w.inverse(h);
        let mut out = PbwElement::zero(self.nvars());
        for ((g, m), f) in &u.terms {
            let gh = self.w.mul(*g, h);
            let f2 = self.w.act(hi, f);
            for (m2, c) in self.conj_y_monomial(h, m).terms() {
                out.add_term((gh, m2.clone()), f2.scale(c));
            }
        }
        out
    }

    pub fn mul_y(&self, u: &PbwElement<F>, j: usize) -> Result<PbwElement<F>> {
        let t = self.t();
        let mut out = PbwElement::zero(self.nvars());
        for ((g, m), f) in &u.terms {
            let mut m1 = m.clone();
            m1[j] += 1;
            out.add_term((*g, m1), f.clone());
            out.add_term((*g, m.clone()), -&(&t * &f.partial(j)));
            for (s, r) in self.w.reflections().iter().enumerate() {
                if r.root[j].is_zero() || self.weights[s].is_zero() {
                    continue;
                }
                let sf = self.w.act(r.element, f);
                let diff = f - &sf;
                if diff.is_zero() {
                    continue;
                }
                let q = diff.divide_linear(&self.roots[s]).map_err(|_| Error::InternalNonDivisible)?;
                let coef = (&self.weights[s] * &q).scale(&r.root[j]);
                let mut piece = PbwElement::zero(self.nvars());
                piece.add_term((*g, m.clone()), coef);
                out = out.add(&self.mul_group(&piece, r.element));
            }
        }
        Ok(out)
    }

    /// `u·v` in normal form.
    pub fn mul(&self, u: &PbwElement<F>, v: &PbwElement<F>) -> Result<PbwElement<F>> {
        let mut out = PbwElement::zero(self.nvars());
        for ((h, m), f) in &v.terms {
            let mut acc = self.mul_group(u, *h);
            for (j, &k) in m.iter().enumerate() {
                for _ in 0..k {
                    acc = self.mul_y(&acc, j)?;
                }
            }
            out = out.add(&acc.mul_poly(f));
        }
        Ok(out)
    }

    pub fn commutator(&self, u: &PbwElement<F>, v: &PbwElement<F>) -> Result<PbwElement<F>> {
        Ok(self.mul(u, v)?.sub(&self.mul(v, u)?))
    }

    pub fn product(&self, factors: &[PbwElement<F>]) -> Result<PbwElement<F>> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `t⟨ξ, a⟩ − Σ_s c_s ⟨α_s, a⟩⟨ξ, α_s^∨⟩ s`: the expected `[y_a, x_ξ]`.
    pub fn bracket_rhs(&self, a: &[F], xi: &[F]) -> PbwElement<F> {
        let mut e = self.scalar(self.t().scale(&ReflectionGroup::<F>::pair(xi, a)));
        for (s, r) in self.w.reflections().iter().enumerate() {
            let k = ReflectionGroup::<F>::pair(&r.root, a) * ReflectionGroup::<F>::pair(xi, &r.coroot);
            if !k.is_zero() {
                let mut piece = PbwElement::zero(self.nvars());
                piece.add_term((r.element, vec![0; self.dim()]), self.weights[s].scale(&-k));
                e = e.add(&piece);
            }
        }
        e
    }

    /// Substitute values for `t` and/or parameters in every coefficient.
    pub fn specialize(&self, u: &PbwElement<F>, t: Option<&F>, c: Option<&[F]>) -> PbwElement<F> {
        u.map_coeffs(|p| {
            let mut p = p.clone();
            if let Some(t) = t {
                p = p.specialize(self.layout.t_var(), t);
            }
            if let Some(c) = c {
                for (k, v) in c.iter().enumerate() {
                    p = p.specialize(self.layout.param(k), v);
                }
            }
            p
        })
    }
}

/// A generator of `H_{t,c}` used in random words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X(usize),
    Y(usize),
    G(usize),
}

impl<F: Field> Cherednik<'_, F> {
    pub fn generator(&self, g: Generator) -> PbwElement<F> {
        match g {
            Generator::X(i) => self.x(i),
            Generator::Y(i) => self.y(i),
            Generator::G(k) => self.group_element(k),
        }
    }

    pub fn word(&self, w: &[Generator]) -> Result<PbwElement<F>> {
        let mut acc = self.one();
        for g in w {
            acc = match *g {
                Generator::X(i) => acc.mul_poly(&Poly::var(self.nvars(), i)),
                Generator::Y(j) => self.mul_y(&acc, j)?,
                Generator::G(k) => self.mul_group(&acc, k),
            };
        }
        Ok(acc)
    }

    /// A word of length at most `max_len` in `x_i, y_i` and group elements.
    pub fn random_word(&self, rng: &mut impl Rng, max_len: usize) -> Vec<Generator> {
        let len = rng.gen_range(0..=max_len);
        let l = self.dim();
        (0..len)
            .map(|_| match rng.gen_range(0..3) {
                0 => Generator::X(rng.gen_range(0..l)),
                1 => Generator::Y(rng.gen_range(0..l)),
                _ => Generator::G(rng.gen_range(0..self.w.order())),
            })
            .collect()
    }
}

/// Defining relations on generators: `[x, x'] = 0`, `[y, y'] = 0`, the bracket
/// `[y_a, x_ξ]`, and `g x g⁻¹ = g·x`, `g y g⁻¹ = g·y`.
pub fn relations_report<F: Field>(h: &Cherednik<'_, F>) -> CheckReport {
    let (l, w) = (h.dim(), h.group());
    let mut rep = CheckReport::new(format!("pbw-relations {}", w.name()));
    let e = |i: usize| crate::dunkl::unit::<F>(l, i);
    let res = (|| -> Result<()> {
        for i in 0..l {
            for j in 0..l {
                rep.record(h.commutator(&h.x(i), &h.x(j))?.is_zero(), || format!("[x{i}, x{j}]"));
                rep.record(h.commutator(&h.y(i), &h.y(j))?.is_zero(), || format!("[y{i}, y{j}]"));
                rep.record(h.commutator(&h.y(i), &h.x(j))? == h.bracket_rhs(&e(i), &e(j)), || format!("[y{i}, x{j}]"));
            }
        }
        for g in 0..w.order() {
            let gi = w.inverse(g);
            for i in 0..l {
                let gx = h.product(&[h.group_element(g), h.x(i), h.group_element(gi)])?;
                rep.record(gx == h.x_form(&w.apply_covector(g, &e(i))), || format!("g{g} x{i} g{g}^-1"));
                let gy = h.product(&[h.group_element(g), h.y(i), h.group_element(gi)])?;
                rep.record(gy == h.y_form(&w.apply_vector(g, &e(i))), || format!("g{g} y{i} g{g}^-1"));
            }
        }
        Ok(())
    })();
    if let Err(e) = res {
        rep.fail(e.to_string());
    }
    rep
}

/// `(uv)w = u(vw)` on seeded random words.
pub fn associativity_report<F: Field>(h: &Cherednik<'_, F>, seed: u64, triples: usize, max_len: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("pbw-associativity {}", h.group().name()));
    for _ in 0..triples {
        let ws: Vec<_> = (0..3).map(|_| h.random_word(&mut rng, max_len)).collect();
        let res = (|| -> Result<bool> {
            let [u, v, w] = [h.word(&ws[0])?, h.word(&ws[1])?, h.word(&ws[2])?];
            let left = h.mul(&h.mul(&u, &v)?, &w)?;
            let right = h.mul(&u, &h.mul(&v, &w)?)?;
            Ok(left == right)
        })();
        rep.record(matches!(res, Ok(true)), || format!("{ws:?}: {res:?}"));
    }
    rep
}

fn basis_keys(order: usize, dim: usize, deg: u32) -> Vec<(usize, Exponent, Exponent)> {
    let mut out = Vec::new();
    for g in 0..order {
        for e in monomials_of_degree(2 * dim, deg) {
            out.push((g, e[..dim].to_vec(), e[dim..].to_vec()));
        }
    }
    out
}

/// Filtered pieces of `H_{t,c}` through degree `max_n`.
///
/// `F_{k+1} = F_k + F_k·𝔥 + F_k·𝔥*`. For each basis element of degree `k`
/// and each generator, the product must stay in filtration `k + 1`, and the
/// term of top y-degree must be a single basis element. Those leading terms
/// together with `F_k` must exhaust the basis of `F_{k+1}`, whose size is
/// `|W|·C(2ℓ + k + 1, 2ℓ)`.
pub fn flatness_report<F: Field>(h: &Cherednik<'_, F>, max_n: u32) -> CheckReport {
    let (l, order) = (h.dim(), h.group().order());
    let mut rep = CheckReport::new(format!("pbw-flatness {}", h.group().name()));
    let mut reached: BTreeSet<(usize, Exponent, Exponent)> = basis_keys(order, l, 0).into_iter().collect();
    rep.record(reached.len() == order, || "degree 0".into());
    for k in 0..max_n {
        for (g, m, n) in basis_keys(order, l, k) {
            let b = h.basis(g, &m, &n);
            for j in 0..l {
                for gen in [Generator::X(j), Generator::Y(j)] {
                    let prod = match gen {
                        Generator::X(i) => Ok(b.mul_poly(&Poly::var(h.nvars(), i))),
                        Generator::Y(i) => h.mul_y(&b, i),
                        Generator::G(_) => unreachable!(),
                    };
                    let Ok(prod) = prod else {
                        rep.fail(format!("{g} {m:?} {n:?} · {gen:?}: rewriting error"));
                        continue;
                    };
                    let exp = prod.basis_expansion(l);
                    let within = exp.keys().all(|(_, m2, n2)| m2.iter().sum::<u32>() + n2.iter().sum::<u32>() <= k + 1);
                    let top = exp.keys().map(|(_, m2, _)| m2.iter().sum::<u32>()).max();
                    let leading: Vec<_> = exp.iter().filter(|((_, m2, _), _)| Some(m2.iter().sum::<u32>()) == top).collect();
                    let ok = within && leading.len() == 1 && leading[0].1.is_constant();
                    rep.record(ok, || format!("{g} {m:?} {n:?} · {gen:?}"));
                    if ok {
                        reached.insert(leading[0].0.clone());
                    }
                }
            }
        }
        let expect = order as u64 * choose(2 * l as u64 + k as u64 + 1, 2 * l as u64);
        let got = reached.len() as u64;
        rep.record(got == expect, || format!("F_{}: {got} basis elements, expected {expect}", k + 1));
    }
    rep
}

/// Transport of structure `H_{λt,λc} → H_{t,c}`, `y ↦ λy`, checked on words.
pub fn rescaling_report<F: Field>(h: &Cherednik<'_, F>, lambda: &F, seed: u64, samples: usize, max_len: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("pbw-rescaling {}", h.group().name()));
    let n = h.nvars();
    let lay = h.layout();
    let mut images = vec![(lay.t_var(), Poly::var(n, lay.t_var()).scale(lambda))];
    for k in 0..lay.nparams {
        images.push((lay.param(k), Poly::var(n, lay.param(k)).scale(lambda)));
    }
    let rescale = |p: &Poly<F>| images.iter().fold(p.clone(), |acc, (v, img)| acc.substitute(*v, img));
    // the bracket relation scales by λ
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let b = h.commutator(&h.y(i), &h.x(j));
            let ok = matches!(&b, Ok(b) if b.map_coeffs(rescale) == b.scale(lambda));
            rep.record(ok, || format!("[y{i}, x{j}]"));
        }
    }
    for _ in 0..samples {
        let word = h.random_word(&mut rng, max_len);
        let res = (|| -> Result<bool> {
            // the word computed in H_{λt,λc}, pushed forward by y ↦ λy
            let mut pushed = PbwElement::zero(n);
            for ((g, m), f) in h.word(&word)?.terms() {
                let ydeg = m.iter().sum::<u32>();
                pushed.add_term((*g, m.clone()), rescale(f).scale(&pow(lambda, ydeg)));
            }
            // the image word computed in H_{t,c}
            let mut image = h.one();
            for g in &word {
                let mut e = h.generator(*g);
                if matches!(g, Generator::Y(_)) {
                    e = e.scale(lambda);
                }
                image = h.mul(&image, &e)?;
            }
            Ok(pushed == image)
        })();
        rep.record(matches!(res, Ok(true)), || format!("{word:?}: {res:?}"));
    }
    rep
}

fn pow<F: Field>(x: &F, k: u32) -> F {
    (0..k).fold(F::one(), |acc, _| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qi, Q};

    #[test]
    fn z2_bracket() {
        let w = ReflectionGroup::<Q>::z2();
        let h = Cherednik::new(&w);
        let yx = h.commutator(&h.y(0), &h.x(0)).unwrap();
        // t − 2c·s
        let mut expect = h.scalar(h.t());
        let mut s = PbwElement::zero(h.nvars());
        s.add_term((1, vec![0]), h.param(0).scale(&qi(-2)));
        expect = expect.add(&s);
        assert_eq!(yx, expect);
        assert_eq!(yx, h.bracket_rhs(&[qi(1)], &[qi(1)]));
    }

    #[test]
    fn sn_brackets() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let h = Cherednik::new(&w);
        let c = h.param(0);
        for i in 0..3 {
            for j in 0..3 {
                let got = h.commutator(&h.y(i), &h.x(j)).unwrap();
                if i != j {
                    let mut form = vec![qi(0); 3];
                    form[i] = qi(1);
                    form[j] = qi(-1);
                    let s = w.reflections().iter().find(|r| r.root == form || r.root.iter().map(|v| -v.clone()).collect::<Vec<_>>() == form).unwrap();
                    let mut expect = PbwElement::zero(h.nvars());
                    expect.add_term((s.element, vec![0; 3]), c.clone());
                    assert_eq!(got, expect, "[y{i}, x{j}]");
                }
                assert_eq!(got, h.bracket_rhs(&crate::dunkl::unit(3, i), &crate::dunkl::unit(3, j)));
            }
        }
    }

    #[test]
    fn group_conjugation_of_generators() {
        let w = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        let h = Cherednik::new(&w);
        for g in 0..w.order() {
            let gi = w.inverse(g);
            for i in 0..2 {
                let gxg = h.product(&[h.group_element(g), h.x(i), h.group_element(gi)]).unwrap();
                let mut xi = vec![qi(0); 2];
                xi[i] = qi(1);
                assert_eq!(gxg, h.x_form(&w.apply_covector(g, &xi)));
                let gyg = h.product(&[h.group_element(g), h.y(i), h.group_element(gi)]).unwrap();
                assert_eq!(gyg, h.y_form(&w.apply_vector(g, &crate::dunkl::unit(2, i))));
            }
        }
    }

    #[test]
    fn associativity_and_flatness_z2() {
        let w = ReflectionGroup::<Q>::z2();
        let h = Cherednik::new(&w);
        let a = associativity_report(&h, 7, 200, 6);
        assert!(a.passed(), "{a:?}");
        let f = flatness_report(&h, 6);
        assert!(f.passed(), "{f:?}");
    }

    #[test]
    fn associativity_s3() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let h = Cherednik::new(&w);
        let a = associativity_report(&h, 11, 200, 6);
        assert!(a.passed(), "{a:?}");
    }

    #[test]
    fn perturbed_bracket_breaks_associativity() {
        // one weight per reflection, not constant on the class
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let lay = VarLayout::with_t(3, 1);
        let mut c = ClassParams::symbolic(&w, &lay).weights(&w);
        c[0] = c[0].scale(&qi(2));
        let h = Cherednik { weights: c, ..Cherednik::new(&w) };
        let a = associativity_report(&h, 3, 30, 5);
        assert!(a.failures > 0);
    }

    #[test]
    fn relations() {
        for w in [ReflectionGroup::<Q>::z2(), ReflectionGroup::symmetric(3).unwrap(), ReflectionGroup::hyperoctahedral(2).unwrap()] {
            let r = relations_report(&Cherednik::new(&w));
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn rescaling() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let h = Cherednik::new(&w);
        let r = rescaling_report(&h, &crate::exact::q(3, 2), 5, 20, 5);
        assert!(r.passed(), "{r:?}");
    }
}
