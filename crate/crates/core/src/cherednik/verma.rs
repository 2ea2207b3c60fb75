//! Standard modules `M_c(τ) = ℂ[𝔥] ⊗ τ` at `t = 1`, their characters and the
//! contravariant form.

use std::collections::BTreeMap;

use crate::coxeter::{ClassParams, ReflectionGroup, VarLayout};
use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{monomials_of_degree, pad_exponent, Exponent, Field, Poly};
use crate::report::CheckReport;

/// A representation of W by one matrix per group element.
#[derive(Clone, Debug)]
pub struct WRep<F> {
    pub name: String,
    mats: Vec<Matrix<F>>,
}

impl<F: Field> WRep<F> {
    /// Checks the homomorphism property.
    pub fn from_matrices(w: &ReflectionGroup<F>, name: impl Into<String>, mats: Vec<Matrix<F>>) -> Result<Self> {
        if mats.len() != w.order() {
            return Err(Error::InvalidParameters(format!("need {} matrices", w.order())));
        }
        for a in 0..w.order() {
            for b in 0..w.order() {
                if linalg::mat_mul(&mats[a], &mats[b]) != mats[w.mul(a, b)] {
                    return Err(Error::InvalidParameters(format!("not a representation at ({a}, {b})")));
                }
            }
        }
        Ok(Self { name: name.into(), mats })
    }

    pub fn trivial(w: &ReflectionGroup<F>) -> Self {
        Self { name: "triv".into(), mats: vec![vec![vec![F::one()]]; w.order()] }
    }

    pub fn sign(w: &ReflectionGroup<F>) -> Self {
        Self { name: "sign".into(), mats: (0..w.order()).map(|g| vec![vec![w.determinant(g)]]).collect() }
    }

    /// The defining representation on 𝔥.
    pub fn defining(w: &ReflectionGroup<F>) -> Self {
        Self { name: "h".into(), mats: w.elements().to_vec() }
    }

    /// For `S_n`, the sum-zero subspace in the basis `e_i − e_{i+1}`.
    pub fn reflection(w: &ReflectionGroup<F>) -> Result<Self> {
        let crate::coxeter::GroupKind::S(n) = *w.kind() else {
            return Self::from_matrices(w, "refl", w.elements().to_vec());
        };
        let basis: Matrix<F> = (0..n)
            .map(|i| (0..n - 1).map(|j| if i == j { F::one() } else if i == j + 1 { -F::one() } else { F::zero() }).collect())
            .collect();
        let bt = linalg::transpose(&basis);
        let proj = linalg::mat_mul(&linalg::inverse(&linalg::mat_mul(&bt, &basis)).expect("independent"), &bt);
        let mats = w
            .elements()
            .iter()
            .map(|m| linalg::mat_mul(&proj, &linalg::mat_mul(m, &basis)))
            .collect();
        Self::from_matrices(w, "refl", mats)
    }

    /// `g ↦ ρ(g⁻¹)ᵀ`.
    pub fn dual(&self, w: &ReflectionGroup<F>) -> Self {
        let mats = (0..w.order()).map(|g| linalg::transpose(&self.mats[w.inverse(g)])).collect();
        Self { name: format!("{}*", self.name), mats }
    }

    pub fn dim(&self) -> usize {
        self.mats[0].len()
    }

    pub fn matrix(&self, g: usize) -> &Matrix<F> {
        &self.mats[g]
    }

    pub fn character(&self, g: usize) -> F {
        linalg::trace(&self.mats[g])
    }
}

/// An element of `M_c(τ)`: one polynomial per basis vector of τ.
pub type ModElem<F> = Vec<Poly<F>>;

/// `M_c(τ)` with coefficients in `ℚ[x, c]`.
#[derive(Clone, Debug)]
pub struct VermaModule<'a, F> {
    w: &'a ReflectionGroup<F>,
    rep: WRep<F>,
    layout: VarLayout,
    weights: Vec<Poly<F>>,
    params: Vec<Poly<F>>,
    roots: Vec<Poly<F>>,
    cap: u32,
}

/// Basis of one graded piece: `(x-monomial, τ-index)`.
pub type SliceBasis = Vec<(Exponent, usize)>;

impl<'a, F: Field> VermaModule<'a, F> {
    /// Symbolic parameters, one per reflection class.
    pub fn new(w: &'a ReflectionGroup<F>, rep: WRep<F>, cap: u32) -> Self {
        let layout = VarLayout::quantum(w.dim(), w.num_reflection_classes());
        let c = ClassParams::symbolic(w, &layout);
        Self::with_params(w, rep, layout, &c, cap)
    }

    pub fn with_params(w: &'a ReflectionGroup<F>, rep: WRep<F>, layout: VarLayout, c: &ClassParams<F>, cap: u32) -> Self {
        let n = layout.nvars();
        let roots = w.reflections().iter().map(|r| Poly::linear_form(n, 0, &r.root)).collect();
        Self { w, rep, weights: c.weights(w), params: c.values().to_vec(), layout, roots, cap }
    }

    pub fn group(&self) -> &ReflectionGroup<F> {
        self.w
    }

    pub fn rep(&self) -> &WRep<F> {
        &self.rep
    }

    pub fn nvars(&self) -> usize {
        self.layout.nvars()
    }

    pub fn layout(&self) -> &VarLayout {
        &self.layout
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.cap {
            return Err(Error::DegreeCapExceeded { degree: d as usize, cap: self.cap as usize });
        }
        Ok(())
    }

    pub fn zero(&self) -> ModElem<F> {
        vec![Poly::zero(self.nvars()); self.rep.dim()]
    }

    pub fn basis(&self, d: u32) -> Result<SliceBasis> {
        self.check_degree(d)?;
        let mut out = Vec::new();
        for e in monomials_of_degree(self.w.dim(), d) {
            for b in 0..self.rep.dim() {
                out.push((e.clone(), b));
            }
        }
        Ok(out)
    }

    pub fn basis_vector(&self, e: &[u32], b: usize) -> ModElem<F> {
        let mut v = self.zero();
        v[b] = Poly::monomial(pad_exponent(e, self.nvars()), F::one());
        v
    }

    /// Coordinates of a homogeneous element in the slice basis.
    pub fn coordinates(&self, v: &ModElem<F>, d: u32) -> Result<Vec<Poly<F>>> {
        let l = self.w.dim();
        let mut coords = BTreeMap::new();
        for (b, f) in v.iter().enumerate() {
            for (e, c) in f.split_leading(l) {
                if e.iter().sum::<u32>() != d {
                    return Err(Error::InvalidParameters("element not homogeneous of the given degree".into()));
                }
                coords.insert((e, b), c);
            }
        }
        Ok(self
            .basis(d)?
            .into_iter()
            .map(|k| coords.remove(&k).unwrap_or_else(|| Poly::zero(self.nvars())))
            .collect())
    }

    pub fn act_x(&self, i: usize, v: &ModElem<F>) -> ModElem<F> {
        let x = Poly::var(self.nvars(), i);
        v.iter().map(|f| f * &x).collect()
    }

    pub fn act_group(&self, g: usize, v: &ModElem<F>) -> ModElem<F> {
        let m = self.rep.matrix(g);
        let moved: Vec<_> = v.iter().map(|f| self.w.act(g, f)).collect();
        (0..self.rep.dim())
            .map(|a| {
                let mut acc = Poly::zero(self.nvars());
                for (b, f) in moved.iter().enumerate() {
                    if !m[a][b].is_zero() {
                        acc.add_scaled(f, &m[a][b]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `y_a (f ⊗ v) = ∂_a f ⊗ v − Σ_s c_s ⟨α_s, a⟩ (f − s f)/α_s ⊗ s v`.
    pub fn act_y_dir(&self, a: &[F], v: &ModElem<F>) -> Result<ModElem<F>> {
        let mut out: ModElem<F> = v.iter().map(|f| f.directional(0, a)).collect();
        for (s, r) in self.w.reflections().iter().enumerate() {
            let k = ReflectionGroup::<F>::pair(&r.root, a);
            if k.is_zero() || self.weights[s].is_zero() {
                continue;
            }
            let q: ModElem<F> = v
                .iter()
                .map(|f| {
                    let d = f - &self.w.act(r.element, f);
                    if d.is_zero() {
                        Ok(d)
                    } else {
                        d.divide_linear(&self.roots[s]).map_err(|_| Error::InternalNonDivisible)
                    }
                })
                .collect::<Result<_>>()?;
            let coef = self.weights[s].scale(&k);
            let m = self.rep.matrix(r.element);
            for (a2, slot) in out.iter_mut().enumerate() {
                for (b, qb) in q.iter().enumerate() {
                    if !m[a2][b].is_zero() && !qb.is_zero() {
                        slot.sub_assign_ref(&(qb * &coef).scale(&m[a2][b]));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn act_y(&self, j: usize, v: &ModElem<F>) -> Result<ModElem<F>> {
        self.act_y_dir(&crate::dunkl::unit(self.w.dim(), j), v)
    }

    /// `𝐡 = Σ x_i y_i + ℓ/2 − Σ_s c_s s`.
    pub fn act_h(&self, v: &ModElem<F>) -> Result<ModElem<F>> {
        let l = self.w.dim();
        let half_l = F::from_i64(l as i64) / F::from_i64(2);
        let mut out: ModElem<F> = v.iter().map(|f| f.scale(&half_l)).collect();
        for i in 0..l {
            let xy = self.act_x(i, &self.act_y(i, v)?);
            add_into(&mut out, &xy, None);
        }
        for (s, r) in self.w.reflections().iter().enumerate() {
            let sv = self.act_group(r.element, v);
            add_into(&mut out, &sv, Some(&-&self.weights[s]));
        }
        Ok(out)
    }

    /// `h(τ) = ℓ/2 − Σ_C c_C χ_τ(C)|C| / dim τ`, in the parameter ring.
    pub fn lowest_weight(&self) -> Poly<F> {
        let l = self.w.dim();
        let mut h = Poly::constant(self.nvars(), F::from_i64(l as i64) / F::from_i64(2));
        let dim = F::from_i64(self.rep.dim() as i64);
        for (k, class) in self.w.reflection_classes().iter().enumerate() {
            let s = self.w.reflections()[class[0]].element;
            let scalar = self.rep.character(s) * F::from_i64(class.len() as i64) / dim.clone();
            h.sub_assign_ref(&self.params[k].scale(&scalar));
        }
        h
    }

    /// Matrix of an operator from slice `d` to slice `d'` (columns are images of basis vectors).
    pub fn operator_matrix(
        &self,
        d: u32,
        target: u32,
        op: impl Fn(&ModElem<F>) -> Result<ModElem<F>>,
    ) -> Result<Matrix<Poly<F>>> {
        let src = self.basis(d)?;
        let cols: Vec<Vec<Poly<F>>> = src
            .iter()
            .map(|(e, b)| self.coordinates(&op(&self.basis_vector(e, *b))?, target))
            .collect::<Result<_>>()?;
        let rows = self.basis(target)?.len();
        Ok((0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
    }

    /// Trace of `g` on the degree-`d` slice, computed from the module action.
    pub fn slice_trace(&self, g: usize, d: u32) -> Result<Poly<F>> {
        let mut tr = Poly::zero(self.nvars());
        for (e, b) in self.basis(d)? {
            let img = self.act_group(g, &self.basis_vector(&e, b));
            tr.add_assign_ref(&img[b].split_leading(self.w.dim()).remove(&e).unwrap_or_else(|| Poly::zero(self.nvars())));
        }
        Ok(tr)
    }

    /// Character of the module through the cap, one series per conjugacy class.
    pub fn character(&self) -> Result<CharacterSeries<F>> {
        let mut coeffs = Vec::new();
        for class in self.w.classes() {
            let g = class.elements[0];
            let mut series = Vec::new();
            for d in 0..=self.cap {
                let tr = self.slice_trace(g, d)?;
                series.push(tr.constant_term());
            }
            coeffs.push(series);
        }
        Ok(CharacterSeries {
            offset: self.lowest_weight(),
            classes: self.w.classes().iter().map(|c| c.name.clone()).collect(),
            class_sizes: self.w.classes().iter().map(|c| c.elements.len()).collect(),
            coeffs,
        })
    }
}

fn add_into<F: Field>(out: &mut ModElem<F>, v: &ModElem<F>, scale: Option<&Poly<F>>) {
    for (o, f) in out.iter_mut().zip(v) {
        match scale {
            Some(c) => o.add_assign_ref(&(f * c)),
            None => o.add_assign_ref(f),
        }
    }
}

/// `χ(g, t) = t^{h₀} Σ_d a_d(g) t^d` through a degree cap.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterSeries<F> {
    /// Exponent offset as a polynomial in the class parameters.
    pub offset: Poly<F>,
    pub classes: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub coeffs: Vec<Vec<F>>,
}

impl CharacterSeries<crate::exact::Q> {
    pub fn to_json(&self, param_names: &[String]) -> serde_json::Value {
        let mut by_class = serde_json::Map::new();
        for (name, series) in self.classes.iter().zip(&self.coeffs) {
            by_class.insert(
                name.clone(),
                serde_json::Value::Array(series.iter().map(|v| serde_json::Value::String(v.to_string())).collect()),
            );
        }
        serde_json::json!({
            "offset": self.offset.display(param_names).to_string(),
            "classes": by_class,
        })
    }
}

/// Power series of `χ_τ(g) / det_{𝔥*}(1 − g t)` through `cap`.
pub fn character_closed_form<F: Field>(w: &ReflectionGroup<F>, rep: &WRep<F>, g: usize, cap: u32) -> Vec<F> {
    // g acts on coordinates by M⁻¹
    let a = w.element(w.inverse(g));
    let e = elementary_traces(a);
    // det(1 − tA) = Σ_k (−1)^k e_k t^k
    let den: Vec<F> = e.iter().enumerate().map(|(k, v)| if k % 2 == 0 { v.clone() } else { -v.clone() }).collect();
    let mut inv = vec![F::zero(); cap as usize + 1];
    inv[0] = F::one();
    for d in 1..=cap as usize {
        let mut acc = F::zero();
        for k in 1..den.len().min(d + 1) {
            acc -= den[k].clone() * &inv[d - k];
        }
        inv[d] = acc;
    }
    let chi = rep.character(g);
    inv.into_iter().map(|v| v * &chi).collect()
}

/// `e_k(A) = Tr Λ^k A`: sums of principal `k × k` minors, `k = 0..=n`.
pub fn elementary_traces<F: Field>(a: &Matrix<F>) -> Vec<F> {
    let n = a.len();
    let mut out = vec![F::zero(); n + 1];
    for mask in 0u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let minor: Matrix<F> = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect()).collect();
        let d = if idx.is_empty() { F::one() } else { linalg::det(&minor) };
        out[idx.len()] += d;
    }
    out
}

/// Slice traces against the closed form, class by class, plus the offset
/// read off from the 𝐡-eigenvalue on the lowest slice.
pub fn character_report<F: Field>(m: &VermaModule<'_, F>) -> CheckReport {
    let mut rep = CheckReport::new(format!("character {} {}", m.group().name(), m.rep().name));
    let ch = match m.character() {
        Ok(ch) => ch,
        Err(e) => {
            rep.fail(e.to_string());
            return rep;
        }
    };
    for (k, class) in m.group().classes().iter().enumerate() {
        let expect = character_closed_form(m.group(), m.rep(), class.elements[0], m.cap());
        for d in 0..=m.cap() as usize {
            rep.record(ch.coeffs[k][d] == expect[d], || format!("class {} degree {d}", class.name));
        }
    }
    match h_eigen_report(m, 0) {
        Ok(r) => rep.merge(r),
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// `𝐡 = h(τ) + d` on every basis vector of the slices up to `max_d`.
pub fn h_eigen_report<F: Field>(m: &VermaModule<'_, F>, max_d: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("h-eigenvalue {} {}", m.group().name(), m.rep().name));
    let h0 = m.lowest_weight();
    for d in 0..=max_d {
        let val = &h0 + &Poly::constant(m.nvars(), F::from_i64(d as i64));
        for (e, b) in m.basis(d)? {
            let v = m.basis_vector(&e, b);
            let hv = m.act_h(&v)?;
            let expect: ModElem<F> = v.iter().map(|f| f * &val).collect();
            rep.record(hv == expect, || format!("degree {d} {e:?}⊗{b}"));
        }
    }
    Ok(rep)
}

/// Defining relations as operator identities on every basis vector through `max_d`.
pub fn module_relations_report<F: Field>(m: &VermaModule<'_, F>, max_d: u32) -> Result<CheckReport> {
    let w = m.group();
    let l = w.dim();
    let mut rep = CheckReport::new(format!("module-relations {} {}", w.name(), m.rep().name));
    for d in 0..=max_d {
        for (e, b) in m.basis(d)? {
            let v = m.basis_vector(&e, b);
            let xs: Vec<_> = (0..l).map(|i| m.act_x(i, &v)).collect();
            let ys: Vec<_> = (0..l).map(|i| m.act_y(i, &v)).collect::<Result<_>>()?;
            for i in 0..l {
                for j in 0..l {
                    // [y_i, y_j] = 0
                    let a = m.act_y(i, &ys[j])?;
                    let b2 = m.act_y(j, &ys[i])?;
                    rep.record(a == b2, || format!("[y{i},y{j}] on {e:?}⊗{b}"));
                    // [y_i, x_j] = δ_ij − Σ c_s α_s(e_i) α_s^∨_j s
                    let mut lhs = m.act_y(i, &xs[j])?;
                    let xy = m.act_x(j, &ys[i]);
                    for (o, f) in lhs.iter_mut().zip(&xy) {
                        o.sub_assign_ref(f);
                    }
                    let mut rhs = if i == j { v.clone() } else { m.zero() };
                    for (s, r) in w.reflections().iter().enumerate() {
                        let k = r.root[i].clone() * &r.coroot[j];
                        if !k.is_zero() {
                            add_into(&mut rhs, &m.act_group(r.element, &v), Some(&m.weights[s].scale(&-k)));
                        }
                    }
                    rep.record(lhs == rhs, || format!("[y{i},x{j}] on {e:?}⊗{b}"));
                }
            }
            for g in 0..w.order() {
                let gi = w.inverse(g);
                for i in 0..l {
                    let mut xi = vec![F::zero(); l];
                    xi[i] = F::one();
                    // g x g⁻¹ = x^g
                    let lhs = m.act_group(g, &m.act_x(i, &m.act_group(gi, &v)));
                    let img = w.apply_covector(g, &xi);
                    let xform = Poly::linear_form(m.nvars(), 0, &img);
                    let rhs: ModElem<F> = v.iter().map(|f| f * &xform).collect();
                    rep.record(lhs == rhs, || format!("g{g} x{i} g^-1 on {e:?}⊗{b}"));
                    // g y g⁻¹ = y^g
                    let lhs = m.act_group(g, &m.act_y(i, &m.act_group(gi, &v))?);
                    let rhs = m.act_y_dir(&w.apply_vector(g, &crate::dunkl::unit(l, i)), &v)?;
                    rep.record(lhs == rhs, || format!("g{g} y{i} g^-1 on {e:?}⊗{b}"));
                }
                for h in 0..w.order() {
                    let lhs = m.act_group(g, &m.act_group(h, &v));
                    let rhs = m.act_group(w.mul(g, h), &v);
                    rep.record(lhs == rhs, || format!("g{g} g{h} on {e:?}⊗{b}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Contravariant form `B: M_c(τ*)_d × M_c(τ)_d → ℚ[c]`,
/// `B(p ⊗ ξ, q ⊗ v) = ⟨ξ, (p(ŷ) · (q ⊗ v))_0⟩` with `ŷ = G⁻¹ y`.
pub struct Shapovalov<'a, F> {
    pub dual: VermaModule<'a, F>,
    pub module: VermaModule<'a, F>,
}

impl<'a, F: Field> Shapovalov<'a, F> {
    pub fn new(w: &'a ReflectionGroup<F>, rep: WRep<F>, cap: u32) -> Self {
        Self { dual: VermaModule::new(w, rep.dual(w), cap), module: VermaModule::new(w, rep, cap) }
    }

    pub fn with_params(w: &'a ReflectionGroup<F>, rep: WRep<F>, lay: VarLayout, c: &ClassParams<F>, cap: u32) -> Self {
        Self {
            dual: VermaModule::with_params(w, rep.dual(w), lay, c, cap),
            module: VermaModule::with_params(w, rep, lay, c, cap),
        }
    }

    /// All `ŷ^e v` for `|e| = d`, keyed by `e`.
    fn lowered(&self, v: &ModElem<F>, d: u32) -> Result<BTreeMap<Exponent, ModElem<F>>> {
        let m = &self.module;
        let l = m.group().dim();
        let gi = m.group().gram_inv().clone();
        let mut layer: BTreeMap<Exponent, ModElem<F>> = BTreeMap::new();
        layer.insert(vec![0; l], v.clone());
        for _ in 0..d {
            let mut next = BTreeMap::new();
            for (e, u) in &layer {
                for i in 0..l {
                    let mut e2 = e.clone();
                    e2[i] += 1;
                    if next.contains_key(&e2) {
                        continue;
                    }
                    next.insert(e2, m.act_y_dir(&gi[i], u)?);
                }
            }
            layer = next;
        }
        Ok(layer)
    }

    /// Gram matrix on degree `d`; rows index `M(τ*)_d`, columns `M(τ)_d`.
    pub fn gram(&self, d: u32) -> Result<Matrix<Poly<F>>> {
        let rows = self.dual.basis(d)?;
        let cols = self.module.basis(d)?;
        let mut out = vec![vec![Poly::zero(self.module.nvars()); cols.len()]; rows.len()];
        for (j, (e, b)) in cols.iter().enumerate() {
            let low = self.lowered(&self.module.basis_vector(e, *b), d)?;
            for (i, (p, a)) in rows.iter().enumerate() {
                out[i][j] = low[p][*a].clone();
            }
        }
        Ok(out)
    }

    /// Gram matrix with the parameters specialized.
    pub fn gram_at(&self, d: u32, c: &[F]) -> Result<Matrix<F>> {
        let l = self.module.group().dim();
        let g = self.gram(d)?;
        let mut point = vec![F::zero(); self.module.nvars()];
        for (k, v) in c.iter().enumerate() {
            point[l + k] = v.clone();
        }
        Ok(g.iter().map(|r| r.iter().map(|p| p.eval(&point)).collect()).collect())
    }

    /// Determinant as a polynomial in a single parameter, by interpolation.
    pub fn determinant_univariate(&self, d: u32) -> Result<Vec<F>> {
        if self.module.layout().nparams != 1 {
            return Err(Error::InvalidParameters("determinant interpolation needs exactly one parameter".into()));
        }
        let g = self.gram(d)?;
        let bound = g.iter().flatten().filter_map(|p| p.total_degree()).max().unwrap_or(0) as usize * g.len();
        let l = self.module.group().dim();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for k in 0..=bound {
            let c = F::from_i64(k as i64);
            let mut point = vec![F::zero(); self.module.nvars()];
            point[l] = c.clone();
            let m: Matrix<F> = g.iter().map(|r| r.iter().map(|p| p.eval(&point)).collect()).collect();
            xs.push(c);
            ys.push(linalg::det(&m));
        }
        Ok(interpolate(&xs, &ys))
    }

    /// `dim L_c(τ)_d` at numeric parameters: the rank of the form.
    pub fn irreducible_dims(&self, c: &[F]) -> Result<Vec<usize>> {
        (0..=self.module.cap()).map(|d| Ok(linalg::rank(&self.gram_at(d, c)?))).collect()
    }
}

/// Coefficients (constant first) of the interpolating polynomial.
pub fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> Vec<F> {
    // Newton divided differences
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (coef[i].clone() - &coef[i - 1]) / (xs[i].clone() - &xs[i - j]);
        }
    }
    let mut poly = vec![F::zero(); n];
    for i in (0..n).rev() {
        // poly = poly·(t − x_i) + coef_i
        let mut next = vec![F::zero(); n];
        for (k, p) in poly.iter().enumerate() {
            if k + 1 < n {
                next[k + 1] += p.clone();
            }
            next[k] -= p.clone() * &xs[i];
        }
        next[0] += coef[i].clone();
        poly = next;
    }
    while poly.len() > 1 && poly.last().is_some_and(|v| v.is_zero()) {
        poly.pop();
    }
    poly
}

/// Symmetry `B(a, x_i b) = B(y_i a, b)`, W-invariance and the determinant being nonzero.
pub fn shapovalov_report<F: Field>(s: &Shapovalov<'_, F>, max_d: u32) -> Result<CheckReport> {
    let w = s.module.group();
    let l = w.dim();
    let mut rep = CheckReport::new(format!("shapovalov {} {}", w.name(), s.module.rep().name));
    let g0 = s.gram(0)?;
    rep.record(g0 == poly_identity(g0.len(), s.module.nvars()), || "degree 0 is the identity".into());
    for d in 0..max_d {
        let upper = s.gram(d + 1)?;
        let lower = s.gram(d)?;
        for i in 0..l {
            // B(a, x_i b) for a ∈ M(τ*)_{d+1}, b ∈ M(τ)_d, against B(ŷ_i a, b)
            let xb = s.module.operator_matrix(d, d + 1, |v| Ok(s.module.act_x(i, v)))?;
            let ya = s.dual.operator_matrix(d + 1, d, |v| s.dual.act_y_dir(&w.gram_inv()[i], v))?;
            let left = poly_mat_mul(&upper, &xb);
            let right = poly_mat_mul(&transpose_poly(&ya), &lower);
            rep.record(left == right, || format!("contravariance degree {d} direction {i}"));
        }
    }
    for d in 0..=max_d {
        let gram = s.gram(d)?;
        for g in 0..w.order() {
            let gd = s.dual.operator_matrix(d, d, |v| Ok(s.dual.act_group(g, v)))?;
            let gm = s.module.operator_matrix(d, d, |v| Ok(s.module.act_group(g, v)))?;
            let lhs = poly_mat_mul(&poly_mat_mul(&transpose_poly(&gd), &gram), &gm);
            rep.record(lhs == gram, || format!("invariance degree {d} g{g}"));
        }
        // nonzero at a random-looking rational point, so nonzero as a polynomial
        let point: Vec<F> = (0..s.module.layout().nparams).map(|k| F::from_q(&crate::exact::q(3 + 2 * k as i64, 7 + k as i64))).collect();
        let det = linalg::det(&s.gram_at(d, &point)?);
        rep.record(!det.is_zero(), || format!("determinant vanishes at degree {d}"));
    }
    Ok(rep)
}

fn poly_identity<F: Field>(n: usize, nvars: usize) -> Matrix<Poly<F>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Poly::one(nvars) } else { Poly::zero(nvars) }).collect()).collect()
}

fn transpose_poly<F: Field>(a: &Matrix<Poly<F>>) -> Matrix<Poly<F>> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

fn poly_mat_mul<F: Field>(a: &Matrix<Poly<F>>, b: &Matrix<Poly<F>>) -> Matrix<Poly<F>> {
    let n = b.first().map_or(0, |r| r[0].nvars());
    a.iter()
        .map(|r| {
            (0..b.first().map_or(0, Vec::len))
                .map(|j| {
                    let mut acc = Poly::zero(r.first().map_or(n, Poly::nvars));
                    for (k, x) in r.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc.add_assign_ref(&(x * &b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi, Q};

    #[test]
    fn z2_y_on_monomials() {
        // oracle: Dunkl operator on x^m
        let w = ReflectionGroup::<Q>::z2();
        let m = VermaModule::new(&w, WRep::trivial(&w), 8);
        let c = Poly::<Q>::var(2, 1);
        for k in 1..=8u32 {
            let v = m.basis_vector(&[k], 0);
            let got = m.act_y(0, &v).unwrap();
            let sign = if k % 2 == 0 { 0 } else { 2 };
            let coef = &Poly::constant(2, qi(k as i64)) - &c.scale(&qi(sign));
            assert_eq!(got[0], &coef * &Poly::monomial(vec![k - 1, 0], qi(1)));
        }
    }

    #[test]
    fn trivial_y_matches_dunkl() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let m = VermaModule::new(&w, WRep::trivial(&w), 4);
        let op = crate::dunkl::Dunkl::new(&w, &ClassParams::symbolic(&w, m.layout()), m.nvars());
        for d in 0..=4 {
            for (e, b) in m.basis(d).unwrap() {
                let v = m.basis_vector(&e, b);
                for j in 0..3 {
                    let a = m.act_y(j, &v).unwrap();
                    let b = op.apply(&crate::dunkl::unit(3, j), &v[0]).unwrap();
                    assert_eq!(a[0], b);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let w = ReflectionGroup::<Q>::z2();
        let m = VermaModule::new(&w, WRep::trivial(&w), 2);
        assert_eq!(m.basis(3), Err(Error::DegreeCapExceeded { degree: 3, cap: 2 }));
    }

    #[test]
    fn lowest_weights() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let c = Poly::<Q>::var(4, 3);
        let three_halves = Poly::constant(4, q(3, 2));
        let m = VermaModule::new(&w, WRep::trivial(&w), 2);
        assert_eq!(m.lowest_weight(), &three_halves - &c.scale(&qi(3)));
        let m = VermaModule::new(&w, WRep::sign(&w), 2);
        assert_eq!(m.lowest_weight(), &three_halves + &c.scale(&qi(3)));
        for t in [WRep::trivial(&w), WRep::sign(&w), WRep::reflection(&w).unwrap()] {
            let m = VermaModule::new(&w, t, 3);
            let r = h_eigen_report(&m, 3).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn relations_on_slices() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        for t in [WRep::trivial(&w), WRep::reflection(&w).unwrap()] {
            let m = VermaModule::new(&w, t, 2);
            let r = module_relations_report(&m, 2).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let w = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        let m = VermaModule::new(&w, WRep::sign(&w), 2);
        assert!(module_relations_report(&m, 2).unwrap().passed());
    }

    #[test]
    fn s3_characters_through_degree_ten() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let m = VermaModule::new(&w, WRep::trivial(&w), 10);
        let r = character_report(&m);
        assert!(r.passed(), "{r:?}");
        // identity class: dimensions of ℂ[x1,x2,x3]_d
        let ch = m.character().unwrap();
        let e = ch.classes.iter().position(|c| c == "e").unwrap();
        assert_eq!(ch.coeffs[e][10], qi(66));
        // a transposition: 1/((1−t)²(1+t))
        let s = ch.classes.iter().position(|c| c == "(12)").unwrap();
        assert_eq!(ch.coeffs[s][..5], [qi(1), qi(1), qi(2), qi(2), qi(3)]);
    }

    #[test]
    fn elementary_traces_of_permutation() {
        let a: Matrix<Q> = vec![vec![qi(0), qi(1), qi(0)], vec![qi(0), qi(0), qi(1)], vec![qi(1), qi(0), qi(0)]];
        // 3-cycle: det(1 + tA) = 1 + t³
        assert_eq!(elementary_traces(&a), vec![qi(1), qi(0), qi(0), qi(1)]);
    }

    #[test]
    fn z2_form() {
        let w = ReflectionGroup::<Q>::z2();
        let s = Shapovalov::new(&w, WRep::trivial(&w), 4);
        let g1 = s.gram(1).unwrap();
        let c = Poly::<Q>::var(2, 1);
        assert_eq!(g1[0][0], &Poly::one(2) - &c.scale(&qi(2)));
        assert_eq!(s.determinant_univariate(1).unwrap(), vec![qi(1), qi(-2)]);
        // c = 1/2: L_c(triv) = ℂ
        assert_eq!(s.irreducible_dims(&[q(1, 2)]).unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(s.irreducible_dims(&[q(1, 3)]).unwrap(), vec![1, 1, 1, 1, 1]);
        assert!(shapovalov_report(&s, 3).unwrap().passed());
    }

    #[test]
    fn s3_form() {
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        for t in [WRep::trivial(&w), WRep::sign(&w), WRep::reflection(&w).unwrap()] {
            let s = Shapovalov::new(&w, t, 2);
            let r = shapovalov_report(&s, 2).unwrap();
            assert!(r.passed(), "{r:?}");
            for d in 0..=2 {
                let det = s.determinant_univariate(d).unwrap();
                assert!(det.iter().any(|v| *v != qi(0)));
            }
        }
    }
}
