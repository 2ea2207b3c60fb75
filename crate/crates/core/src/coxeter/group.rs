//! Finite real reflection groups as explicit matrix groups.
//!
//! An element is a matrix `M` acting on column vectors of 𝔥. A polynomial in
//! the coordinates transforms as `(g·f)(v) = f(g⁻¹v)`, i.e. by the
//! substitution `x_i ↦ Σ_j (M⁻¹)_ij x_j`; a momentum (a vector of 𝔥, seen as
//! a function on 𝔥*) transforms as `g·p_i = Σ_k M_ki p_k`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{Field, LinearSubstitution, Poly, RootImage, Roots, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    Z2,
    S(usize),
    B(usize),
    I2(usize),
}

impl GroupKind {
    pub fn label(&self) -> String {
        match self {
            GroupKind::Z2 => "Z2".into(),
            GroupKind::S(n) => format!("S{n}"),
            GroupKind::B(n) => format!("B{n}"),
            GroupKind::I2(m) => format!("I2:{m}"),
        }
    }
}

/// A reflection `s(v) = v − ⟨α, v⟩ α^∨`.
#[derive(Clone, Debug)]
pub struct Reflection<F> {
    pub element: usize,
    /// α_s as a covector (row), first nonzero entry equal to 1.
    pub root: Vec<F>,
    /// α_s^∨ as a vector, with ⟨α_s, α_s^∨⟩ = 2.
    pub coroot: Vec<F>,
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub name: String,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ReflectionGroup<F> {
    kind: GroupKind,
    dim: usize,
    elements: Vec<Matrix<F>>,
    inverses: Vec<usize>,
    table: Vec<Vec<usize>>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    reflections: Vec<Reflection<F>>,
    /// Reflection classes as lists of indices into `reflections`.
    reflection_classes: Vec<Vec<usize>>,
    gram: Matrix<F>,
    gram_inv: Matrix<F>,
    sub_x: Vec<LinearSubstitution<F>>,
    sub_xp: Vec<LinearSubstitution<F>>,
    root_images: Vec<Vec<RootImage<F>>>,
}

fn perm_matrix<F: Field>(n: usize, images: &[usize]) -> Matrix<F> {
    // columns: e_j ↦ e_{images[j]}
    let mut m = linalg::zeros(n, n);
    for (j, &i) in images.iter().enumerate() {
        m[i][j] = F::one();
    }
    m
}

fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// Cycle-type label such as `e`, `(12)`, `(123)`, `(12)(34)`.
fn cycle_label(lens: &[usize]) -> String {
    let mut out = String::new();
    let mut next = 1;
    for &l in lens.iter().filter(|&&l| l > 1) {
        out.push('(');
        for _ in 0..l {
            out.push_str(&next.to_string());
            next += 1;
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

impl<F: Field> ReflectionGroup<F> {
    pub fn z2() -> Self {
        Self::generate(GroupKind::Z2, 1, vec![vec![vec![-F::one()]]])
    }

    /// S_n acting on all of ℂ^n by permuting coordinates.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnknownGroup(format!("S{n}")));
        }
        let gens = (0..n - 1)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, i + 1);
                perm_matrix(n, &p)
            })
            .collect();
        Ok(Self::generate(GroupKind::S(n), n, gens))
    }

    /// Hyperoctahedral group of signed permutations of ℂ^n.
    pub fn hyperoctahedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnknownGroup(format!("B{n}")));
        }
        let mut gens: Vec<Matrix<F>> = (0..n - 1)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, i + 1);
                perm_matrix(n, &p)
            })
            .collect();
        let mut flip = linalg::identity::<F>(n);
        flip[n - 1][n - 1] = -F::one();
        gens.push(flip);
        Ok(Self::generate(GroupKind::B(n), n, gens))
    }

    /// Dihedral group of order 2m in the coroot basis: `s_i = I − e_i α_i` with
    /// `α_1 = (2, −1)`, `α_2 = (−4cos²(π/m), 2)`.
    pub fn dihedral(m: usize) -> Result<Self> {
        let b: F = match m {
            3 => -F::one(),
            4 => F::from_i64(-2),
            6 => F::from_i64(-3),
            5 => {
                let r5 = F::sqrt5().ok_or_else(|| {
                    Error::UnsupportedField("I2:5 needs coefficients in Q(sqrt5)".into())
                })?;
                -(F::from_i64(3) + r5) * F::from_q(&Q::new(1.into(), 2.into()))
            }
            _ => return Err(Error::UnknownGroup(format!("I2:{m}"))),
        };
        let two = F::from_i64(2);
        let s1 = vec![vec![-F::one(), F::one()], vec![F::zero(), F::one()]];
        let s2 = vec![vec![F::one(), F::zero()], vec![-b, F::one() - two]];
        Ok(Self::generate(GroupKind::I2(m), 2, vec![s1, s2]))
    }

    fn generate(kind: GroupKind, dim: usize, gens: Vec<Matrix<F>>) -> Self {
        let id = linalg::identity::<F>(dim);
        let mut elements = vec![id];
        let mut index: HashMap<Matrix<F>, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let g = elements[frontier].clone();
            for s in &gens {
                let h = linalg::mat_mul(&g, s);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            frontier += 1;
        }
        let n = elements.len();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&linalg::mat_mul(a, b)]).collect())
            .collect();
        let inverses: Vec<usize> =
            (0..n).map(|i| (0..n).find(|&j| table[i][j] == 0).expect("finite group")).collect();

        let mut class_of = vec![usize::MAX; n];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> =
                (0..n).map(|h| table[table[h][g]][inverses[h]]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = raw_classes.len();
            }
            raw_classes.push(members);
        }

        let class_names: Vec<String> = raw_classes
            .iter()
            .enumerate()
            .map(|(ci, members)| match &kind {
                GroupKind::S(k) => {
                    let m = &elements[members[0]];
                    let perm: Vec<usize> =
                        (0..*k).map(|j| (0..*k).find(|&i| !m[i][j].is_zero()).unwrap()).collect();
                    cycle_label(&cycle_type(&perm))
                }
                _ if members[0] == 0 => "e".into(),
                _ => format!("C{ci}"),
            })
            .collect();
        let classes: Vec<ConjugacyClass> = raw_classes
            .into_iter()
            .zip(class_names)
            .map(|(elements, name)| ConjugacyClass { name, elements })
            .collect();

        // Reflections: rank(I − M) = 1 and M² = 1.
        let mut reflections = Vec::new();
        let mut reflection_classes: Vec<Vec<usize>> = Vec::new();
        let mut class_slot: HashMap<usize, usize> = HashMap::new();
        for (g, m) in elements.iter().enumerate() {
            if g == 0 || table[g][g] != 0 {
                continue;
            }
            let a = linalg::mat_sub(&linalg::identity(dim), m);
            if linalg::rank(&a) != 1 {
                continue;
            }
            let row = a.iter().find(|r| r.iter().any(|x| !x.is_zero())).unwrap();
            let k = row.iter().position(|x| !x.is_zero()).unwrap();
            let lead_inv = row[k].inv();
            let root: Vec<F> = row.iter().map(|x| x.clone() * &lead_inv).collect();
            let coroot: Vec<F> = a.iter().map(|r| r[k].clone()).collect();
            let slot = *class_slot.entry(class_of[g]).or_insert_with(|| {
                reflection_classes.push(Vec::new());
                reflection_classes.len() - 1
            });
            reflection_classes[slot].push(reflections.len());
            reflections.push(Reflection { element: g, root, coroot, class: slot });
        }

        let mut gram = linalg::zeros::<F>(dim, dim);
        match kind {
            GroupKind::I2(_) => {
                for m in &elements {
                    gram = linalg::mat_add(&gram, &linalg::mat_mul(&linalg::transpose(m), m));
                }
            }
            _ => gram = linalg::identity(dim),
        }
        let gram_inv = linalg::inverse(&gram).expect("positive definite form");

        let inv_mats: Vec<Matrix<F>> = inverses.iter().map(|&i| elements[i].clone()).collect();
        let sub_x = inv_mats.iter().map(|mi| LinearSubstitution::from_matrix(mi)).collect();
        let sub_xp = elements
            .iter()
            .zip(&inv_mats)
            .map(|(m, mi)| {
                let mt = linalg::transpose(m);
                LinearSubstitution::block(&[(0, mi.as_slice()), (dim, mt.as_slice())])
            })
            .collect();

        let root_images = inv_mats
            .iter()
            .map(|mi| {
                reflections
                    .iter()
                    .map(|r| {
                        let img: Vec<F> = (0..dim)
                            .map(|j| {
                                let mut acc = F::zero();
                                for (i, ri) in r.root.iter().enumerate() {
                                    acc += ri.clone() * &mi[i][j];
                                }
                                acc
                            })
                            .collect();
                        let k = img.iter().position(|x| !x.is_zero()).unwrap();
                        let scale = img[k].clone();
                        let normalized: Vec<F> = img.iter().map(|x| x.clone() / scale.clone()).collect();
                        let target = reflections
                            .iter()
                            .position(|t| t.root == normalized)
                            .expect("root system is W-stable");
                        RootImage { target, scale }
                    })
                    .collect()
            })
            .collect();

        Self {
            kind,
            dim,
            elements,
            inverses,
            table,
            classes,
            class_of,
            reflections,
            reflection_classes,
            gram,
            gram_inv,
            sub_x,
            sub_xp,
            root_images,
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        self.kind.label()
    }

    /// Dimension ℓ of 𝔥.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, g: usize) -> &Matrix<F> {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[Matrix<F>] {
        &self.elements
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn index_of(&self, m: &Matrix<F>) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn reflections(&self) -> &[Reflection<F>] {
        &self.reflections
    }

    pub fn reflection_classes(&self) -> &[Vec<usize>] {
        &self.reflection_classes
    }

    pub fn num_reflection_classes(&self) -> usize {
        self.reflection_classes.len()
    }

    /// W-invariant inner product on 𝔥.
    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix<F> {
        &self.gram_inv
    }

    /// Induced pairing on 𝔥*.
    pub fn dual_pairing(&self, a: &[F], b: &[F]) -> F {
        let mut acc = F::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !a[i].is_zero() && !b[j].is_zero() {
                    acc += a[i].clone() * &self.gram_inv[i][j] * &b[j];
                }
            }
        }
        acc
    }

    /// `(α_s, α_s)` in the induced form on 𝔥*.
    pub fn root_norm(&self, s: usize) -> F {
        let r = &self.reflections[s].root;
        self.dual_pairing(r, r)
    }

    /// ⟨ξ, a⟩ for a covector ξ and vector a.
    pub fn pair(xi: &[F], a: &[F]) -> F {
        let mut acc = F::zero();
        for (u, v) in xi.iter().zip(a) {
            if !u.is_zero() && !v.is_zero() {
                acc += u.clone() * v;
            }
        }
        acc
    }

    /// `M a`.
    pub fn apply_vector(&self, g: usize, a: &[F]) -> Vec<F> {
        linalg::mat_vec(&self.elements[g], a)
    }

    /// `ξ M⁻¹`, the action on 𝔥*.
    pub fn apply_covector(&self, g: usize, xi: &[F]) -> Vec<F> {
        let mi = &self.elements[self.inverses[g]];
        (0..self.dim)
            .map(|j| {
                let mut acc = F::zero();
                for (i, x) in xi.iter().enumerate() {
                    acc += x.clone() * &mi[i][j];
                }
                acc
            })
            .collect()
    }

    /// Substitution realizing `f ↦ g·f` on the coordinate block `x_1..x_ℓ`.
    pub fn x_substitution(&self, g: usize) -> &LinearSubstitution<F> {
        &self.sub_x[g]
    }

    /// Substitution on the block `x_1..x_ℓ, p_1..p_ℓ`.
    pub fn xp_substitution(&self, g: usize) -> &LinearSubstitution<F> {
        &self.sub_xp[g]
    }

    pub fn root_images(&self, g: usize) -> &[RootImage<F>] {
        &self.root_images[g]
    }

    /// `g·f` for `f` whose first ℓ variables are the coordinates.
    pub fn act(&self, g: usize, f: &Poly<F>) -> Poly<F> {
        f.substitute_linear(&self.sub_x[g])
    }

    /// Positive roots as linear forms in a ring of `nvars` variables.
    pub fn root_forms(&self, nvars: usize) -> Roots<F> {
        std::sync::Arc::new(
            self.reflections.iter().map(|r| Poly::linear_form(nvars, 0, &r.root)).collect(),
        )
    }

    pub fn discriminant(&self, nvars: usize) -> Poly<F> {
        let mut d = Poly::one(nvars);
        for r in self.root_forms(nvars).iter() {
            d = &d * r;
        }
        d
    }

    /// `Σ (G⁻¹)_ij ∂_i ∂_j` on the coordinate block.
    pub fn laplacian(&self, f: &Poly<F>) -> Poly<F> {
        let mut out = Poly::zero(f.nvars());
        for i in 0..self.dim {
            let fi = f.partial(i);
            for j in 0..self.dim {
                if !self.gram_inv[i][j].is_zero() {
                    out.add_scaled(&fi.partial(j), &self.gram_inv[i][j]);
                }
            }
        }
        out
    }

    pub fn laplacian_kills_discriminant(&self) -> bool {
        self.laplacian(&self.discriminant(self.dim)).is_zero()
    }

    /// `|W|⁻¹ Σ_g g·f`.
    pub fn symmetrize(&self, f: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::zero(f.nvars());
        for g in 0..self.order() {
            acc.add_assign_ref(&self.act(g, f));
        }
        acc.scale(&F::from_i64(self.order() as i64).inv())
    }

    pub fn is_invariant(&self, f: &Poly<F>) -> bool {
        (0..self.order()).all(|g| self.act(g, f) == *f)
    }

    pub fn determinant(&self, g: usize) -> F {
        linalg::det(&self.elements[g])
    }

    pub fn trace(&self, g: usize) -> F {
        linalg::trace(&self.elements[g])
    }

    /// Debug export of reflection data with entries as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let s = |v: &[F]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        serde_json::json!({
            "group": self.name(),
            "dim": self.dim,
            "order": self.order(),
            "classes": self.classes.iter().map(|c| serde_json::json!({
                "name": c.name, "size": c.elements.len()
            })).collect::<Vec<_>>(),
            "reflections": self.reflections.iter().map(|r| serde_json::json!({
                "element": r.element,
                "root": s(&r.root),
                "coroot": s(&r.coroot),
                "class": r.class,
            })).collect::<Vec<_>>(),
            "gram": self.gram.iter().map(|r| s(r)).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qi, QSqrt5};

    fn check_axioms<F: Field>(w: &ReflectionGroup<F>) {
        let n = w.order();
        for a in 0..n {
            assert_eq!(w.mul(a, w.inverse(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(w.mul(w.mul(a, b), c), w.mul(a, w.mul(b, c)));
                }
            }
        }
        for r in w.reflections() {
            assert_eq!(w.mul(r.element, r.element), 0);
            let img = w.apply_vector(r.element, &r.coroot);
            assert!(img.iter().zip(&r.coroot).all(|(a, b)| a.clone() + b == F::zero()));
            assert_eq!(ReflectionGroup::<F>::pair(&r.root, &r.coroot), F::from_i64(2));
            // x − s x = ⟨x, α^∨⟩ α for all basis covectors x
            for i in 0..w.dim() {
                let mut x = vec![F::zero(); w.dim()];
                x[i] = F::one();
                let sx = w.apply_covector(r.element, &x);
                let k = ReflectionGroup::<F>::pair(&x, &r.coroot);
                for j in 0..w.dim() {
                    assert_eq!(x[j].clone() - &sx[j], k.clone() * &r.root[j]);
                }
            }
        }
        // W-invariant form
        for m in w.elements() {
            assert_eq!(&linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(m), w.gram()), m), w.gram());
        }
        // reflections closed under conjugation
        for r in w.reflections() {
            for g in 0..n {
                let c = w.mul(w.mul(g, r.element), w.inverse(g));
                assert!(w.reflections().iter().any(|t| t.element == c));
            }
        }
    }

    #[test]
    fn orders_and_reflection_counts() {
        let z2 = ReflectionGroup::<Q>::z2();
        assert_eq!((z2.order(), z2.reflections().len()), (2, 1));
        for n in 2..=4 {
            let s = ReflectionGroup::<Q>::symmetric(n).unwrap();
            assert_eq!(s.reflections().len(), n * (n - 1) / 2);
            assert_eq!(s.num_reflection_classes(), 1);
            check_axioms(&s);
        }
        for n in 2..=3 {
            let b = ReflectionGroup::<Q>::hyperoctahedral(n).unwrap();
            let mut sizes: Vec<usize> = b.reflection_classes().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            let mut expect = vec![n, n * (n - 1)];
            expect.sort_unstable();
            assert_eq!(sizes, expect);
            check_axioms(&b);
        }
        for m in [3, 4, 6] {
            let d = ReflectionGroup::<Q>::dihedral(m).unwrap();
            assert_eq!((d.order(), d.reflections().len()), (2 * m, m));
            check_axioms(&d);
        }
        let d5 = ReflectionGroup::<QSqrt5>::dihedral(5).unwrap();
        assert_eq!((d5.order(), d5.reflections().len()), (10, 5));
        check_axioms(&d5);
        assert!(ReflectionGroup::<Q>::dihedral(5).is_err());
        assert!(ReflectionGroup::<Q>::dihedral(2).is_err());
    }

    #[test]
    fn s3_class_names() {
        let s3 = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let mut names: Vec<&str> = s3.classes().iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        assert_eq!(names, ["(12)", "(123)", "e"]);
    }

    #[test]
    fn polynomial_action() {
        let s3 = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let x = |i| Poly::<Q>::var(3, i);
        let swap = s3.reflections().iter().find(|r| r.root == vec![qi(1), qi(-1), qi(0)]).unwrap();
        let f = &(&x(0) * &x(0)) * &x(1);
        assert_eq!(s3.act(swap.element, &f), &(&x(1) * &x(1)) * &x(0));

        let z2 = ReflectionGroup::<Q>::z2();
        let x3 = Poly::<Q>::var(1, 0).pow(3);
        assert_eq!(z2.act(1, &x3), -&x3);

        let d = s3.discriminant(3);
        for g in 0..s3.order() {
            assert_eq!(s3.act(g, &d), d.scale(&s3.determinant(g)));
        }
        assert!(s3.symmetrize(&d).is_zero());
    }

    #[test]
    fn composite_action_is_a_left_action() {
        let b2 = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        let f = &Poly::<Q>::var(2, 0).pow(3) * &Poly::var(2, 1);
        for g in 0..b2.order() {
            for h in 0..b2.order() {
                assert_eq!(b2.act(g, &b2.act(h, &f)), b2.act(b2.mul(g, h), &f));
            }
        }
    }

    #[test]
    fn discriminants_are_harmonic() {
        assert_eq!(ReflectionGroup::<Q>::symmetric(2).unwrap().discriminant(2),
            &Poly::var(2, 0) - &Poly::var(2, 1));
        let b2 = ReflectionGroup::<Q>::hyperoctahedral(2).unwrap();
        // oracle: x1·x2·(x1−x2)·(x1+x2) = x1³x2 − x1x2³
        let x1 = Poly::<Q>::var(2, 0);
        let x2 = Poly::<Q>::var(2, 1);
        let expect = &(&x1.pow(3) * &x2) - &(&x1 * &x2.pow(3));
        assert_eq!(b2.discriminant(2), expect);
        assert!(ReflectionGroup::<Q>::z2().laplacian_kills_discriminant());
        for n in 2..=4 {
            assert!(ReflectionGroup::<Q>::symmetric(n).unwrap().laplacian_kills_discriminant());
        }
        assert!(b2.laplacian_kills_discriminant());
        for m in [3, 4, 6] {
            assert!(ReflectionGroup::<Q>::dihedral(m).unwrap().laplacian_kills_discriminant());
        }
        assert!(ReflectionGroup::<QSqrt5>::dihedral(5).unwrap().laplacian_kills_discriminant());
    }

    #[test]
    fn symmetrize_examples() {
        let s2 = ReflectionGroup::<Q>::symmetric(2).unwrap();
        let x1 = Poly::<Q>::var(2, 0);
        let half = Q::new(1.into(), 2.into());
        assert_eq!(s2.symmetrize(&x1), (&x1 + &Poly::var(2, 1)).scale(&half));
    }
}
