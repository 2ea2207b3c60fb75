//! Rational functions whose denominators are monomials in a fixed list of
//! pairwise non-proportional linear forms (the positive roots).

use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::poly::{LinearSubstitution, Poly};

/// The linear forms allowed in denominators, embedded in a common ring.
pub type Roots<F> = Arc<Vec<Poly<F>>>;

/// `numerator / Π roots[s]^den[s]`, kept with no root factor cancellable.
///
/// Because the roots are distinct irreducible factors, the reduced form is
/// unique, so structural equality is equality of functions.
#[derive(Clone, Debug)]
pub struct RationalFunction<F> {
    numer: Poly<F>,
    den: Vec<u32>,
    roots: Roots<F>,
}

/// Image of each root under a linear change of variables:
/// `g·roots[s] = scale · roots[target]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootImage<F> {
    pub target: usize,
    pub scale: F,
}

impl<F: Field> PartialEq for RationalFunction<F> {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.roots, &o.roots) || self.roots == o.roots)
            && self.den == o.den
            && self.numer == o.numer
    }
}

impl<F: Field> Eq for RationalFunction<F> {}

impl<F: Field> RationalFunction<F> {
    pub fn from_poly(numer: Poly<F>, roots: Roots<F>) -> Self {
        let den = vec![0; roots.len()];
        Self { numer, den, roots }
    }

    pub fn zero(nvars: usize, roots: Roots<F>) -> Self {
        Self::from_poly(Poly::zero(nvars), roots)
    }

    pub fn constant(nvars: usize, c: F, roots: Roots<F>) -> Self {
        Self::from_poly(Poly::constant(nvars, c), roots)
    }

    /// `numer / Π α_s^{den_s}`, reduced.
    pub fn new(numer: Poly<F>, den: Vec<u32>, roots: Roots<F>) -> Self {
        assert_eq!(den.len(), roots.len());
        let mut r = Self { numer, den, roots };
        r.normalize();
        r
    }

    /// `α_s^{-k}`.
    pub fn inv_root_pow(s: usize, k: u32, roots: Roots<F>) -> Self {
        let n = roots[s].nvars();
        let mut den = vec![0; roots.len()];
        den[s] = k;
        Self::new(Poly::one(n), den, roots)
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.numer
    }

    pub fn den(&self) -> &[u32] {
        &self.den
    }

    pub fn roots(&self) -> &Roots<F> {
        &self.roots
    }

    pub fn nvars(&self) -> usize {
        self.numer.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// The polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.den.iter().all(|&d| d == 0).then_some(&self.numer)
    }

    pub fn into_poly(self) -> Option<Poly<F>> {
        self.den.iter().all(|&d| d == 0).then_some(self.numer)
    }

    fn normalize(&mut self) {
        if self.numer.is_zero() {
            self.den.iter_mut().for_each(|d| *d = 0);
            return;
        }
        for s in 0..self.den.len() {
            while self.den[s] > 0 {
                match self.numer.divide_linear(&self.roots[s]) {
                    Ok(q) => {
                        self.numer = q;
                        self.den[s] -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
    }

    fn root_power_product(&self, exps: &[u32]) -> Poly<F> {
        let mut p = Poly::one(self.nvars());
        for (s, &k) in exps.iter().enumerate() {
            if k > 0 {
                p = &p * &self.roots[s].pow(k);
            }
        }
        p
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        let den: Vec<u32> = self.den.iter().zip(&o.den).map(|(a, b)| *a.max(b)).collect();
        let lift = |r: &Self| {
            let extra: Vec<u32> = den.iter().zip(&r.den).map(|(d, e)| d - e).collect();
            &r.numer * &r.root_power_product(&extra)
        };
        let a = lift(self);
        let b = lift(o);
        let numer = if negate { &a - &b } else { &a + &b };
        Self::new(numer, den, self.roots.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn neg(&self) -> Self {
        Self { numer: -&self.numer, den: self.den.clone(), roots: self.roots.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let den = self.den.iter().zip(&o.den).map(|(a, b)| a + b).collect();
        Self::new(&self.numer * &o.numer, den, self.roots.clone())
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        Self::new(&self.numer * p, self.den.clone(), self.roots.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { numer: self.numer.scale(c), den: self.den.clone(), roots: self.roots.clone() }
    }

    /// Divide by `α_s^k`.
    pub fn div_root_pow(&self, s: usize, k: u32) -> Self {
        let mut den = self.den.clone();
        den[s] += k;
        Self::new(self.numer.clone(), den, self.roots.clone())
    }

    /// ∂/∂v.
    pub fn partial(&self, v: usize) -> Self {
        let active: Vec<usize> = (0..self.den.len()).filter(|&s| self.den[s] > 0).collect();
        if active.is_empty() {
            return Self::from_poly(self.numer.partial(v), self.roots.clone());
        }
        let mut bumped = self.den.clone();
        let mut all = Poly::one(self.nvars());
        for &s in &active {
            bumped[s] += 1;
            all = &all * &self.roots[s];
        }
        let mut numer = &self.numer.partial(v) * &all;
        for &s in &active {
            let dalpha = self.roots[s].partial(v);
            if dalpha.is_zero() {
                continue;
            }
            let mut others = Poly::one(self.nvars());
            for &u in &active {
                if u != s {
                    others = &others * &self.roots[u];
                }
            }
            let term = &(&self.numer * &dalpha) * &others;
            numer.sub_assign_ref(&term.scale(&F::from_i64(self.den[s] as i64)));
        }
        Self::new(numer, bumped, self.roots.clone())
    }

    /// `Σ a_i ∂/∂x_{offset+i}`.
    pub fn directional(&self, offset: usize, a: &[F]) -> Self {
        let mut acc = Self::zero(self.nvars(), self.roots.clone());
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                acc = acc.add(&self.partial(offset + i).scale(ai));
            }
        }
        acc
    }

    /// Apply a linear change of variables that permutes roots up to scalars.
    pub fn substitute_linear(&self, sub: &LinearSubstitution<F>, images: &[RootImage<F>]) -> Self {
        let mut numer = self.numer.substitute_linear(sub);
        let mut den = vec![0; self.den.len()];
        let mut factor = F::one();
        for (s, &k) in self.den.iter().enumerate() {
            if k > 0 {
                den[images[s].target] += k;
                for _ in 0..k {
                    factor *= &images[s].scale;
                }
            }
        }
        numer = numer.scale(&factor.inv());
        Self::new(numer, den, self.roots.clone())
    }

    /// Substitute rational functions for some variables of the numerator.
    pub fn substitute_vars(&self, images: &[(usize, Self)]) -> Self {
        let n = self.nvars();
        let mut acc = Self::zero(n, self.roots.clone());
        let mut powers: std::collections::HashMap<(usize, u32), Self> = Default::default();
        for (e, c) in self.numer.terms() {
            let mut rest = e.clone();
            for (v, _) in images {
                rest[*v] = 0;
            }
            let mut term = Self::from_poly(Poly::monomial(rest, c.clone()), self.roots.clone());
            for (idx, (v, img)) in images.iter().enumerate() {
                let k = e[*v];
                if k > 0 {
                    let p = powers.entry((idx, k)).or_insert_with(|| {
                        let mut r = Self::constant(n, F::one(), self.roots.clone());
                        for _ in 0..k {
                            r = r.mul(img);
                        }
                        r
                    });
                    term = term.mul(p);
                }
            }
            acc = acc.add(&term);
        }
        let mut den = acc.den.clone();
        for (d, e) in den.iter_mut().zip(&self.den) {
            *d += e;
        }
        Self::new(acc.numer, den, self.roots.clone())
    }

    /// Evaluate; `None` if the point lies on a root hyperplane occurring in the denominator.
    pub fn eval(&self, point: &[F]) -> Option<F> {
        let mut d = F::one();
        for (s, &k) in self.den.iter().enumerate() {
            let v = self.roots[s].eval(point);
            for _ in 0..k {
                d *= &v;
            }
        }
        if d.is_zero() {
            return None;
        }
        Some(self.numer.eval(point) / d)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> RationalDisplay<'a, F> {
        RationalDisplay { r: self, names }
    }
}

pub struct RationalDisplay<'a, F> {
    r: &'a RationalFunction<F>,
    names: &'a [String],
}

impl<F: Field> fmt::Display for RationalDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.r.numer.display(self.names))?;
        for (s, &k) in self.r.den.iter().enumerate() {
            if k > 0 {
                write!(f, " / ({})^{k}", self.r.roots[s].display(self.names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{qi, Q};

    fn roots2() -> Roots<Q> {
        // α = x1 − x2, β = x1 + x2
        let x1 = Poly::<Q>::var(2, 0);
        let x2 = Poly::<Q>::var(2, 1);
        Arc::new(vec![&x1 - &x2, &x1 + &x2])
    }

    #[test]
    fn cancels_root_factors() {
        let r = roots2();
        let f = &(&r[0] * &r[0]) * &r[1];
        let g = RationalFunction::new(f, vec![1, 2], r.clone());
        assert_eq!(g.den(), &[0, 1]);
        assert_eq!(g.numer(), &r[0]);
    }

    #[test]
    fn sum_of_partial_fractions() {
        // 1/(x1−x2) + 1/(x1+x2) = 2x1 / ((x1−x2)(x1+x2))
        let r = roots2();
        let a = RationalFunction::inv_root_pow(0, 1, r.clone());
        let b = RationalFunction::inv_root_pow(1, 1, r.clone());
        let s = a.add(&b);
        assert_eq!(s.den(), &[1, 1]);
        assert_eq!(s.numer(), &Poly::var(2, 0).scale(&qi(2)));
        assert!(s.sub(&a).sub(&b).is_zero());
    }

    #[test]
    fn quotient_rule() {
        // ∂/∂x1 (x1−x2)^{-2} = −2 (x1−x2)^{-3}
        let r = roots2();
        let a = RationalFunction::inv_root_pow(0, 2, r.clone());
        let d = a.partial(0);
        assert_eq!(d, RationalFunction::inv_root_pow(0, 3, r.clone()).scale(&qi(-2)));
        // derivative of a polynomial times a root power, checked by evaluation
        let f = RationalFunction::new(&Poly::var(2, 0) * &Poly::var(2, 1), vec![1, 1], r);
        let h = f.partial(1);
        let pt = [qi(3), qi(1)];
        // f = x1x2/(x1²−x2²); ∂_{x2} f = x1(x1²+x2²)/(x1²−x2²)²
        let expect = Q::from(qi(3) * qi(10)) / (qi(8) * qi(8));
        assert_eq!(h.eval(&pt), Some(expect));
    }
}
