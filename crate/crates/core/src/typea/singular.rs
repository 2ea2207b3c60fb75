//! Singular vectors of degree `r` in the type-A polynomial representation at
//! `k = r/n`, and their common zero locus.

use num_integer::Integer;

use crate::coxeter::{ClassParams, ReflectionGroup};
use crate::dunkl::{apply_dunkl, unit};
use crate::error::{Error, Result};
use crate::exact::{linalg, q, residue_at_infinity, Poly, Q};
use crate::report::CheckReport;

/// `f_i = Res_∞ Π_j (z − x_j)^{r/n} dz / (z − x_i)` for `i = 1..n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularFamily {
    pub n: usize,
    pub r: usize,
    pub f: Vec<Poly<Q>>,
}

pub fn singular_vectors(n: usize, r: usize) -> Result<SingularFamily> {
    if n < 2 || r < 1 {
        return Err(Error::InvalidParameters(format!("need n ≥ 2 and r ≥ 1, got n = {n}, r = {r}")));
    }
    if r % n == 0 {
        return Err(Error::InvalidParameters(format!("n = {n} divides r = {r}")));
    }
    let mu = q(r as i64, n as i64);
    let f = (0..n)
        .map(|i| {
            let factors: Vec<_> = (0..n)
                .map(|j| {
                    let e = if i == j { mu.clone() - Q::from_integer(1.into()) } else { mu.clone() };
                    (Poly::var(n, j), e)
                })
                .collect();
            residue_at_infinity(&factors, &[Poly::one(n)])
        })
        .collect::<Result<_>>()?;
    Ok(SingularFamily { n, r, f })
}

impl SingularFamily {
    pub fn k(&self) -> Q {
        q(self.r as i64, self.n as i64)
    }

    /// `d = gcd(r, n)`.
    pub fn gcd(&self) -> usize {
        self.r.gcd(&self.n)
    }

    /// Do all `f_i` vanish at the point?
    pub fn vanishes_at(&self, point: &[Q]) -> bool {
        self.f.iter().all(|f| f.eval(point) == Q::from_integer(0.into()))
    }
}

/// Expected answer from the multiplicity pattern: every multiplicity is a
/// multiple of `n / gcd(r, n)`.
pub fn support_predicted(n: usize, r: usize, point: &[Q]) -> bool {
    let block = n / r.gcd(&n);
    let mut counts = std::collections::BTreeMap::<&Q, usize>::new();
    for v in point {
        *counts.entry(v).or_default() += 1;
    }
    counts.values().all(|m| m % block == 0)
}

pub fn support_test(n: usize, r: usize, point: &[Q]) -> Result<bool> {
    if point.len() != n {
        return Err(Error::InvalidParameters(format!("point has {} coordinates, expected {n}", point.len())));
    }
    Ok(singular_vectors(n, r)?.vanishes_at(point))
}

fn coefficient_rows(fs: &[Poly<Q>]) -> (Vec<Vec<u32>>, linalg::Matrix<Q>) {
    let mut monos: Vec<Vec<u32>> = fs.iter().flat_map(|f| f.terms().map(|(e, _)| e.clone())).collect();
    monos.sort();
    monos.dedup();
    let rows = fs.iter().map(|f| monos.iter().map(|m| f.coeff(m)).collect()).collect();
    (monos, rows)
}

/// Structural checks on the family: homogeneity, translation invariance,
/// `Σ f_i = 0`, rank `n − 1`, permutation covariance, the reflection
/// character on the span, and annihilation by every Dunkl operator at `k = r/n`.
pub fn singular_report(fam: &SingularFamily) -> Result<CheckReport> {
    let n = fam.n;
    let w = ReflectionGroup::<Q>::symmetric(n)?;
    let mut rep = CheckReport::new(format!("singular-vectors n={n} r={}", fam.r));
    let zero = Poly::zero(n);
    for (i, f) in fam.f.iter().enumerate() {
        rep.record(f.is_homogeneous() && f.total_degree() == Some(fam.r as u32), || format!("f{i} homogeneous of degree r"));
        // x_j ↦ x_j + s with a fresh variable s
        let lifted = f.resize(n + 1);
        let shift = Poly::var(n + 1, n);
        let shifted = (0..n).fold(lifted.clone(), |acc, j| acc.substitute(j, &(&Poly::var(n + 1, j) + &shift)));
        rep.record(shifted == lifted, || format!("f{i} translation invariant"));
    }
    let sum = fam.f.iter().fold(zero.clone(), |a, f| &a + f);
    rep.record(sum.is_zero(), || "sum of f_i".into());
    let (_, rows) = coefficient_rows(&fam.f);
    rep.record(linalg::rank(&rows) == n - 1, || "span dimension".into());
    let c = ClassParams::constants(&[fam.k()], n);
    for g in 0..w.order() {
        let m = w.element(g);
        for i in 0..n {
            let target = (0..n).find(|&j| m[j][i] != Q::from_integer(0.into())).expect("permutation");
            rep.record(w.act(g, &fam.f[i]) == fam.f[target], || format!("g{g} f{i}"));
        }
    }
    // character of the span in the basis f_1..f_{n−1}
    let basis = &fam.f[..n - 1];
    for class in w.classes() {
        let g = class.elements[0];
        let mut tr = Q::from_integer(0.into());
        for (j, f) in basis.iter().enumerate() {
            let img = w.act(g, f);
            let coords = solve_in_span(basis, &img).ok_or(Error::InternalNonDivisible)?;
            tr += &coords[j];
        }
        let expect = linalg::trace(w.element(g)) - Q::from_integer(1.into());
        rep.record(tr == expect, || format!("character on class {}", class.name));
    }
    for (i, f) in fam.f.iter().enumerate() {
        for a in 0..n {
            let d = apply_dunkl(&w, &unit(n, a), &c, f)?;
            rep.record(d.is_zero(), || format!("D{a} f{i} at k = {}", fam.k()));
        }
    }
    Ok(rep)
}

/// Coordinates of `v` in the span of independent `basis`.
pub fn solve_in_span(basis: &[Poly<Q>], v: &Poly<Q>) -> Option<Vec<Q>> {
    let mut all = basis.to_vec();
    all.push(v.clone());
    let (_, rows) = coefficient_rows(&all);
    let k = basis.len();
    // columns: basis vectors, then v
    let cols = rows[0].len();
    let mut aug: linalg::Matrix<Q> = (0..cols).map(|m| rows.iter().map(|r| r[m].clone()).collect()).collect();
    let piv = linalg::rref(&mut aug);
    if piv.contains(&k) || piv.len() < k {
        return None;
    }
    Some((0..k).map(|j| aug[j][k].clone()).collect())
}

/// Residues `Res_∞ Π (z − y_j)^{μ_j} z^i dz` for `i = 0..count`, at numeric points.
pub fn moment_residues(ys: &[Q], mus: &[Q], count: usize) -> Result<Vec<Q>> {
    let factors: Vec<_> = ys.iter().zip(mus).map(|(y, m)| (Poly::constant(1, y.clone()), m.clone())).collect();
    (0..count)
        .map(|i| {
            let mut extra = vec![Poly::zero(1); i + 1];
            extra[i] = Poly::one(1);
            residue_at_infinity(&factors, &extra).map(|p| p.constant_term())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use proptest::prelude::*;

    #[test]
    fn two_one() {
        let fam = singular_vectors(2, 1).unwrap();
        let x = |i| Poly::<Q>::var(2, i);
        assert_eq!(fam.f[0], (&x(0) - &x(1)).scale(&q(1, 2)));
        assert!(singular_report(&fam).unwrap().passed());
    }

    #[test]
    fn three_two() {
        let fam = singular_vectors(3, 2).unwrap();
        let r = singular_report(&fam).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(matches!(singular_vectors(3, 3), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn wrong_k_does_not_kill() {
        let fam = singular_vectors(3, 2).unwrap();
        let w = ReflectionGroup::<Q>::symmetric(3).unwrap();
        let c = ClassParams::constants(&[q(1, 3)], 3);
        assert!(!apply_dunkl(&w, &unit(3, 0), &c, &fam.f[0]).unwrap().is_zero());
    }

    #[test]
    fn support_examples() {
        let (a, b) = (q(1, 3), qi(-2));
        assert!(support_test(4, 2, &[a.clone(), a.clone(), b.clone(), b.clone()]).unwrap());
        assert!(!support_test(4, 2, &[a.clone(), a.clone(), a.clone(), b.clone()]).unwrap());
        assert!(!support_test(3, 2, &[qi(0), qi(1), qi(5)]).unwrap());
        assert!(support_test(3, 2, &[a.clone(), a.clone(), a]).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn support_matches_multiplicity_rule(n in 2usize..5, r in 1usize..7, pattern in proptest::collection::vec(0usize..3, 4), vals in proptest::collection::vec(-4i64..5, 3), shift in -3i64..4) {
            prop_assume!(r % n != 0);
            let fam = singular_vectors(n, r).unwrap();
            let mut distinct = vals.clone();
            distinct.sort();
            distinct.dedup();
            let point: Vec<Q> = (0..n).map(|i| qi(distinct[pattern[i] % distinct.len()])).collect();
            let got = fam.vanishes_at(&point);
            prop_assert_eq!(got, support_predicted(n, r, &point));
            // S_n and translation stability
            let mut rev = point.clone();
            rev.reverse();
            prop_assert_eq!(fam.vanishes_at(&rev), got);
            let moved: Vec<Q> = point.iter().map(|v| v + qi(shift)).collect();
            prop_assert_eq!(fam.vanishes_at(&moved), got);
        }

        /// If the first `p − 1` moments of `a(z) = Π (z − y_j)^{μ_j}` vanish and
        /// `Σ μ_j` is an integer `> −p`, then every `μ_j` is a nonnegative integer.
        #[test]
        fn moment_lemma(num in proptest::collection::vec(-3i64..7, 1..4), den in 1i64..4, ys in proptest::collection::vec(-5i64..6, 3)) {
            let p = num.len();
            let mut ys: Vec<i64> = ys;
            ys.sort();
            ys.dedup();
            prop_assume!(ys.len() >= p);
            let mut mus: Vec<Q> = num.iter().map(|&a| q(a, den)).collect();
            // force an integral total
            let total: Q = mus.iter().cloned().sum();
            let frac = total.clone() - total.floor();
            mus[0] -= frac;
            let total: Q = mus.iter().cloned().sum();
            prop_assume!(total > qi(-(p as i64)));
            let yq: Vec<Q> = ys[..p].iter().map(|&v| qi(v)).collect();
            let res = moment_residues(&yq, &mus, p.saturating_sub(1)).unwrap();
            let polynomial = mus.iter().all(|m| m.is_integer() && *m >= qi(0));
            if res.iter().all(|v| *v == qi(0)) {
                prop_assert!(polynomial, "mus {:?} ys {:?}", mus, yq);
            }
            if polynomial {
                // converse: a polynomial has no residue against any z^i
                let more = moment_residues(&yq, &mus, p + 2).unwrap();
                prop_assert!(more.iter().all(|v| *v == qi(0)));
            }
        }
    }

    #[test]
    fn moment_criterion_on_support_data() {
        // point pattern (a,a,b,b), n = 4, r = 2: μ_j = m_j r/n − 1 = 0
        let mus = vec![qi(0), qi(0)];
        let res = moment_residues(&[qi(0), qi(3)], &mus, 2).unwrap();
        assert!(res.iter().all(|v| *v == qi(0)));
        // (a,a,a,b): μ = (1/2, −1/2), not a polynomial, moments do not all vanish
        let res = moment_residues(&[qi(0), qi(3)], &[q(1, 2), q(-1, 2)], 2).unwrap();
        assert!(res.iter().any(|v| *v != qi(0)));
    }
}
