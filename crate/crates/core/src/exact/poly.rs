//! Sparse multivariate polynomials with exact coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::field::{Field, Q};
use crate::error::{Error, Result};

/// Exponent vector; its length always equals the number of variables.
pub type Exponent = Vec<u32>;

/// A polynomial in a fixed number of indeterminates.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration is in
/// lexicographic order with `x_1 > x_2 > …` and the last entry is the lex-leading
/// term. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

/// Linear change of the first `images.len()` variables: variable `i` is
/// replaced by `Σ coeff·x_j` over `images[i]`. Remaining variables are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubstitution<F> {
    images: Vec<Vec<(usize, F)>>,
    signed_perm: Option<Vec<(usize, bool)>>,
}

impl<F: Field> LinearSubstitution<F> {
    pub fn new(images: Vec<Vec<(usize, F)>>) -> Self {
        let signed_perm = images
            .iter()
            .map(|img| match img.as_slice() {
                [(j, c)] if c.is_one() => Some((*j, false)),
                [(j, c)] if (-c.clone()).is_one() => Some((*j, true)),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .filter(|p| {
                let mut seen = vec![false; p.len()];
                p.iter().all(|&(j, _)| j < seen.len() && !std::mem::replace(&mut seen[j], true))
            });
        Self { images, signed_perm }
    }

    /// Substitution given by a dense matrix: `x_i ↦ Σ_j m[i][j] x_j`.
    pub fn from_matrix(m: &[Vec<F>]) -> Self {
        Self::new(
            m.iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (j, c.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Substitution acting simultaneously on several blocks of variables,
    /// starting at the given offsets.
    pub fn block(blocks: &[(usize, &[Vec<F>])]) -> Self {
        let width = blocks.iter().map(|(off, m)| off + m.len()).max().unwrap_or(0);
        let mut images: Vec<Vec<(usize, F)>> =
            (0..width).map(|i| vec![(i, F::one())]).collect();
        for (off, m) in blocks {
            for (i, row) in m.iter().enumerate() {
                images[off + i] = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (off + j, c.clone()))
                    .collect();
            }
        }
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range {nvars}");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { nvars, terms }
    }

    /// Linear form `Σ coeffs[i]·x_{offset+i}`.
    pub fn linear_form(nvars: usize, offset: usize, coeffs: &[F]) -> Self {
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[offset + i] = 1;
                p.add_term(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, F)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> F {
        self.terms.get(exp).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Exponent, &F)> {
        self.terms.last_key_value()
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Maximum total degree in the variables `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e[range.clone()].iter().sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|k| k == d),
        }
    }

    /// Terms of total degree `d` in the variables `range`.
    pub fn homogeneous_part(&self, range: std::ops::Range<usize>, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[range.clone()].iter().sum::<u32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn add_term(&mut self, exp: Exponent, c: F) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        self.check(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        self.check(other);
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v.clone() * c);
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c)).collect();
        Self { nvars: self.nvars, terms }
    }

    /// Multiply by a single monomial `c·x^exp`.
    pub fn mul_monomial(&self, exp: &[u32], c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), v.clone() * c))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// ∂/∂x_i.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c.clone() * F::from_i64(e[i] as i64));
            }
        }
        out
    }

    /// Directional derivative `Σ a_i ∂/∂x_{offset+i}`.
    pub fn directional(&self, offset: usize, a: &[F]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                out.add_scaled(&self.partial(offset + i), ai);
            }
        }
        out
    }

    /// Apply a linear substitution to the leading block of variables.
    pub fn substitute_linear(&self, sub: &LinearSubstitution<F>) -> Self {
        let k = sub.len();
        assert!(k <= self.nvars);
        if let Some(perm) = &sub.signed_perm {
            let mut out = Self::zero(self.nvars);
            for (e, c) in &self.terms {
                let mut e2 = e.clone();
                for slot in e2.iter_mut().take(k) {
                    *slot = 0;
                }
                let mut neg = false;
                for (i, &(j, flip)) in perm.iter().enumerate() {
                    e2[j] += e[i];
                    if flip && e[i] % 2 == 1 {
                        neg = !neg;
                    }
                }
                out.add_term(e2, if neg { -c.clone() } else { c.clone() });
            }
            return out;
        }
        let forms: Vec<Self> = sub
            .images
            .iter()
            .map(|img| {
                let mut p = Self::zero(self.nvars);
                for (j, c) in img {
                    p.add_term(unit(self.nvars, *j), c.clone());
                }
                p
            })
            .collect();
        let mut powers: HashMap<(usize, u32), Self> = HashMap::new();
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            for slot in rest.iter_mut().take(k) {
                *slot = 0;
            }
            let mut term = Self::monomial(rest, c.clone());
            for i in 0..k {
                if e[i] > 0 {
                    let p = powers
                        .entry((i, e[i]))
                        .or_insert_with(|| forms[i].pow(e[i]));
                    term = &term * p;
                }
            }
            out.add_assign_ref(&term);
        }
        out
    }

    /// Substitute a polynomial for variable `var`.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        self.check(value);
        let mut by_power: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[var];
            let mut e2 = e.clone();
            e2[var] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| Self::zero(self.nvars))
                .add_term(e2, c.clone());
        }
        let mut out = Self::zero(self.nvars);
        for (k, part) in by_power {
            out.add_assign_ref(&(&part * &value.pow(k)));
        }
        out
    }

    /// Fix variable `var` to a scalar; the variable stays in the ring with degree 0.
    pub fn specialize(&self, var: usize, value: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        let mut powers: Vec<F> = vec![F::one()];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap().clone() * value;
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[var] = 0;
            out.add_term(e2, c.clone() * &powers[k]);
        }
        out
    }

    /// Evaluate at a point with one value per variable.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division by a nonzero linear form.
    ///
    /// `{g}` is a Gröbner basis of `(g)`, so the division algorithm in lex order
    /// leaves a zero remainder exactly when `g | f`.
    pub fn divide_linear(&self, g: &Self) -> Result<Self> {
        self.check(g);
        let (lead_exp, lead_c) = g.leading_term().ok_or(Error::NonDivisible)?;
        let var = lead_exp.iter().position(|&k| k == 1).ok_or(Error::NonDivisible)?;
        if lead_exp.iter().sum::<u32>() != 1 || g.total_degree() != Some(1) {
            return Err(Error::NonDivisible);
        }
        let lead_inv = lead_c.inv();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.last_key_value() {
            if e[var] == 0 {
                return Err(Error::NonDivisible);
            }
            let mut qe = e.clone();
            qe[var] -= 1;
            let qc = c.clone() * &lead_inv;
            rem.sub_assign_ref(&g.mul_monomial(&qe, &qc));
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Re-embed into a ring with `nvars` variables; `map[i]` is the new index of variable `i`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Re-embed keeping variable indices (appending or dropping trailing variables).
    /// Dropped variables must not occur.
    pub fn resize(&self, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            assert!(e[nvars.min(e.len())..].iter().all(|&k| k == 0), "dropped variable occurs");
            let mut e2 = e.clone();
            e2.resize(nvars, 0);
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Split into `Σ_k coefficient_k · x^k` over the first `block` variables,
    /// the coefficients living in the remaining variables (same ring).
    pub fn split_leading(&self, block: usize) -> BTreeMap<Exponent, Self> {
        let mut out: BTreeMap<Exponent, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let head = e[..block].to_vec();
            let mut tail = e.clone();
            for slot in tail.iter_mut().take(block) {
                *slot = 0;
            }
            out.entry(head)
                .or_insert_with(|| Self::zero(self.nvars))
                .add_term(tail, c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, names }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
    }
}

fn unit(n: usize, i: usize) -> Exponent {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        let mut r = self.clone();
        r.sub_assign_ref(o);
        r
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        self.check(o);
        let (small, large) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let mut acc: HashMap<Exponent, F> = HashMap::with_capacity(small.terms.len() * large.terms.len());
        for (e1, c1) in &small.terms {
            for (e2, c2) in &large.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = c1.clone() * c2;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += v,
                    None => {
                        acc.insert(e, v);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Poly { nvars: self.nvars, terms }
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(mut self, o: Poly<F>) -> Poly<F> {
        self.add_assign_ref(&o);
        self
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(mut self, o: Poly<F>) -> Poly<F> {
        self.sub_assign_ref(&o);
        self
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: Poly<F>) -> Poly<F> {
        &self * &o
    }
}

pub struct PolyDisplay<'a, F> {
    poly: &'a Poly<F>,
    names: &'a [String],
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.poly.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = self.names.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
                    if k == 1 { name } else { format!("{name}^{k}") }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Canonical JSON form of a rational polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl Poly<Q> {
    pub fn to_json(&self, vars: &[String]) -> PolyJson {
        assert_eq!(vars.len(), self.nvars);
        PolyJson {
            vars: vars.to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut p = Self::zero(j.vars.len());
        for t in &j.terms {
            if t.exp.len() != j.vars.len() {
                return Err(Error::Parse("exponent length does not match variable count".into()));
            }
            let n: num_bigint::BigInt = t.num.parse().map_err(|_| Error::Parse(t.num.clone()))?;
            let d: num_bigint::BigInt = t.den.parse().map_err(|_| Error::Parse(t.den.clone()))?;
            if num_traits::Zero::is_zero(&d) {
                return Err(Error::Parse("zero denominator".into()));
            }
            p.add_term(t.exp.clone(), Q::new(n, d));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{q, qi};
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Poly<Q> {
        Poly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let f = &(&x(2, 0) * &x(2, 0)) - &(&x(2, 1) * &x(2, 1));
        let g = &x(2, 0) - &x(2, 1);
        assert_eq!(f.divide_linear(&g).unwrap(), &x(2, 0) + &x(2, 1));
    }

    #[test]
    fn geometric_sum() {
        let f = &x(2, 0).pow(3) - &x(2, 1).pow(3);
        let g = &x(2, 0) - &x(2, 1);
        let expect = &(&x(2, 0).pow(2) + &(&x(2, 0) * &x(2, 1))) + &x(2, 1).pow(2);
        assert_eq!(f.divide_linear(&g).unwrap(), expect);
    }

    #[test]
    fn non_divisible() {
        let f = &x(2, 0) * &x(2, 1);
        let g = &x(2, 0) - &x(2, 1);
        assert_eq!(f.divide_linear(&g), Err(Error::NonDivisible));
        assert_eq!(f.divide_linear(&Poly::zero(2)), Err(Error::NonDivisible));
    }

    #[test]
    fn divides_with_parameter_coefficients() {
        // (c·x1 − c·x2)·(x1 + 2) ÷ (x1 − x2) with c a third variable
        let c = x(3, 2);
        let f = &(&c * &(&x(3, 0) - &x(3, 1))) * &(&x(3, 0) + &Poly::constant(3, qi(2)));
        let got = f.divide_linear(&(&x(3, 0) - &x(3, 1))).unwrap();
        assert_eq!(got, &c * &(&x(3, 0) + &Poly::constant(3, qi(2))));
    }

    #[test]
    fn substitution_matches_swap() {
        let f = &x(3, 0).pow(2) * &x(3, 1);
        let swap = LinearSubstitution::from_matrix(&[
            vec![qi(0), qi(1), qi(0)],
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(0), qi(1)],
        ]);
        assert_eq!(f.substitute_linear(&swap), &x(3, 1).pow(2) * &x(3, 0));
        let generic = LinearSubstitution::from_matrix(&[vec![qi(1), qi(1)], vec![qi(0), q(1, 2)]]);
        let g = &x(2, 0) * &x(2, 1);
        let expect = &(&x(2, 0) + &x(2, 1)) * &x(2, 1).scale(&q(1, 2));
        assert_eq!(g.substitute_linear(&generic), expect);
    }

    #[test]
    fn json_round_trip_and_order() {
        let p = &(&x(2, 0).pow(2)).scale(&q(-3, 4)) + &x(2, 1);
        let names = vec!["x1".to_string(), "x2".to_string()];
        let j = p.to_json(&names);
        assert_eq!(j.terms[0].exp, vec![0, 1]);
        assert_eq!(j.terms[1].num, "-3");
        assert_eq!(j.terms[1].den, "4");
        assert_eq!(Poly::from_json(&j).unwrap(), p);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Poly<Q>> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..=5, 1i64..4), 0..6).prop_map(
            move |ts| {
                let mut p = Poly::zero(n);
                for (e, a, b) in ts {
                    p.add_term(e, q(a, b));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(3), k in -3i64..3) {
            let g = &(&x(3, 0) - &x(3, 1).scale(&qi(k))) + &x(3, 2);
            let f = &a * &g;
            prop_assert_eq!(f.divide_linear(&g).unwrap(), a);
        }
    }
}
