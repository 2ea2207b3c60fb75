//! Variable layouts for the polynomial rings in use, and class functions c.

use super::group::ReflectionGroup;
use crate::exact::{Field, Poly};

/// Ordered variables `x_1..x_ℓ`, optionally `p_1..p_ℓ`, optionally `t`, then
/// one parameter per reflection class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarLayout {
    pub dim: usize,
    pub momenta: bool,
    pub t: bool,
    pub nparams: usize,
}

impl VarLayout {
    pub fn quantum(dim: usize, nparams: usize) -> Self {
        Self { dim, momenta: false, t: false, nparams }
    }

    pub fn classical(dim: usize, nparams: usize) -> Self {
        Self { dim, momenta: true, t: false, nparams }
    }

    pub fn with_t(dim: usize, nparams: usize) -> Self {
        Self { dim, momenta: false, t: true, nparams }
    }

    pub fn nvars(&self) -> usize {
        self.dim * if self.momenta { 2 } else { 1 } + usize::from(self.t) + self.nparams
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn p(&self, i: usize) -> usize {
        assert!(self.momenta);
        self.dim + i
    }

    pub fn t_var(&self) -> usize {
        assert!(self.t);
        self.dim * if self.momenta { 2 } else { 1 }
    }

    pub fn param(&self, k: usize) -> usize {
        self.dim * if self.momenta { 2 } else { 1 } + usize::from(self.t) + k
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        if self.momenta {
            v.extend((1..=self.dim).map(|i| format!("p{i}")));
        }
        if self.t {
            v.push("t".into());
        }
        if self.nparams == 1 {
            v.push("c".into());
        } else {
            v.extend((1..=self.nparams).map(|k| format!("c{k}")));
        }
        v
    }
}

/// A conjugation-invariant function on reflections: one value per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassParams<F> {
    values: Vec<Poly<F>>,
}

impl<F: Field> ClassParams<F> {
    /// Independent symbolic parameter per class.
    pub fn symbolic<G>(w: &ReflectionGroup<G>, layout: &VarLayout) -> Self
    where
        G: Field,
    {
        let n = layout.nvars();
        let values = (0..w.num_reflection_classes()).map(|k| Poly::var(n, layout.param(k))).collect();
        Self { values }
    }

    /// One shared symbolic parameter for all classes.
    pub fn single_symbolic<G: Field>(w: &ReflectionGroup<G>, layout: &VarLayout) -> Self {
        let n = layout.nvars();
        Self { values: vec![Poly::var(n, layout.param(0)); w.num_reflection_classes()] }
    }

    pub fn constants(values: &[F], nvars: usize) -> Self {
        Self { values: values.iter().map(|v| Poly::constant(nvars, v.clone())).collect() }
    }

    pub fn from_polys(values: Vec<Poly<F>>) -> Self {
        Self { values }
    }

    pub fn value(&self, class: usize) -> &Poly<F> {
        &self.values[class]
    }

    pub fn values(&self) -> &[Poly<F>] {
        &self.values
    }

    /// `c_s` for reflection index `s`.
    pub fn weight(&self, w: &ReflectionGroup<F>, s: usize) -> &Poly<F> {
        &self.values[w.reflections()[s].class]
    }

    pub fn weights(&self, w: &ReflectionGroup<F>) -> Vec<Poly<F>> {
        (0..w.reflections().len()).map(|s| self.weight(w, s).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Poly::is_zero)
    }
}
