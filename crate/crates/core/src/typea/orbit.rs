//! `n!`-dimensional representations of `H_{0,c}(S_n)` on functions on a
//! free orbit `{(σλ, σμ)}`, and the Calogero–Moser matrices they produce.

use std::collections::HashMap;

use serde::Serialize;

use crate::coxeter::ReflectionGroup;
use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::Q;
use crate::report::CheckReport;

fn zero() -> Q {
    Q::from_integer(0.into())
}

fn one() -> Q {
    Q::from_integer(1.into())
}

#[derive(Clone, Debug)]
pub struct OrbitRepresentation {
    pub n: usize,
    pub lambda: Vec<Q>,
    pub mu: Vec<Q>,
    pub c: Q,
    /// Orbit points `(a, b)`; basis vector `j` is the indicator of `points[j]`.
    pub points: Vec<(Vec<Q>, Vec<Q>)>,
    pub x: Vec<Matrix<Q>>,
    pub y: Vec<Matrix<Q>>,
    /// One matrix per element of `S_n`, indexed as in [`ReflectionGroup::symmetric`].
    pub group: Vec<Matrix<Q>>,
    w: ReflectionGroup<Q>,
}

pub fn orbit_representation(n: usize, lambda: &[Q], mu: &[Q], c: &Q) -> Result<OrbitRepresentation> {
    let w = ReflectionGroup::<Q>::symmetric(n)?;
    let order: Vec<usize> = (0..w.order()).collect();
    build(w, lambda, mu, c, &order)
}

/// The same representation with orbit points enumerated in the order `perm` of group elements.
pub fn orbit_representation_ordered(n: usize, lambda: &[Q], mu: &[Q], c: &Q, perm: &[usize]) -> Result<OrbitRepresentation> {
    let w = ReflectionGroup::<Q>::symmetric(n)?;
    build(w, lambda, mu, c, perm)
}

fn build(w: ReflectionGroup<Q>, lambda: &[Q], mu: &[Q], c: &Q, perm: &[usize]) -> Result<OrbitRepresentation> {
    let n = w.dim();
    if lambda.len() != n || mu.len() != n {
        return Err(Error::InvalidParameters(format!("λ and μ need {n} entries")));
    }
    for i in 0..n {
        for j in 0..i {
            if lambda[i] == lambda[j] {
                return Err(Error::DegenerateSpectrum);
            }
        }
    }
    let points: Vec<(Vec<Q>, Vec<Q>)> = perm
        .iter()
        .map(|&g| (w.apply_vector(g, lambda), w.apply_vector(g, mu)))
        .collect();
    let index: HashMap<Vec<Q>, usize> = points.iter().enumerate().map(|(k, (a, _))| (a.clone(), k)).collect();
    let dim = points.len();
    let locate = |a: &[Q]| index[a];
    let x = (0..n)
        .map(|i| {
            let mut m = linalg::zeros(dim, dim);
            for (k, (a, _)) in points.iter().enumerate() {
                m[k][k] = a[i].clone();
            }
            m
        })
        .collect();
    let group: Vec<Matrix<Q>> = (0..w.order())
        .map(|g| {
            let mut m = linalg::zeros(dim, dim);
            for (k, (a, _)) in points.iter().enumerate() {
                m[locate(&w.apply_vector(g, a))][k] = one();
            }
            m
        })
        .collect();
    // (y_i F)(a, b) = b_i F(a, b) + c Σ_s α_s(e_i) (sF)(a, b) / α_s(a)
    let y = (0..n)
        .map(|i| {
            let mut m = linalg::zeros(dim, dim);
            for (k, (a, b)) in points.iter().enumerate() {
                m[k][k] += b[i].clone();
                for r in w.reflections() {
                    if r.root[i] == zero() {
                        continue;
                    }
                    let sa = w.apply_vector(r.element, a);
                    let row = locate(&sa);
                    let denom = ReflectionGroup::<Q>::pair(&r.root, &sa);
                    m[row][k] += c.clone() * &r.root[i] / denom;
                }
            }
            m
        })
        .collect();
    Ok(OrbitRepresentation { n, lambda: lambda.to_vec(), mu: mu.to_vec(), c: c.clone(), points, x, y, group, w })
}

fn commutator(a: &Matrix<Q>, b: &Matrix<Q>) -> Matrix<Q> {
    linalg::mat_sub(&linalg::mat_mul(a, b), &linalg::mat_mul(b, a))
}

impl OrbitRepresentation {
    pub fn dim(&self) -> usize {
        self.points.len()
    }

    pub fn group_data(&self) -> &ReflectionGroup<Q> {
        &self.w
    }

    /// Residual matrices of every defining relation of `H_{0,c}`, zero when the relations hold.
    pub fn relation_residuals(&self) -> Vec<(String, Matrix<Q>)> {
        let (n, w) = (self.n, &self.w);
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                out.push((format!("[x{i},x{j}]"), commutator(&self.x[i], &self.x[j])));
                out.push((format!("[y{i},y{j}]"), commutator(&self.y[i], &self.y[j])));
                // [y_i, x_j] = −Σ_s c α_s(e_i) α_s^∨(x_j) s
                let mut rhs = linalg::zeros(self.dim(), self.dim());
                for r in w.reflections() {
                    let k = r.root[i].clone() * &r.coroot[j];
                    if k != zero() {
                        rhs = linalg::mat_sub(&rhs, &linalg::mat_scale(&self.group[r.element], &(k * &self.c)));
                    }
                }
                out.push((format!("[y{i},x{j}]"), linalg::mat_sub(&commutator(&self.y[i], &self.x[j]), &rhs)));
            }
        }
        for g in 0..w.order() {
            let gi = &self.group[w.inverse(g)];
            for h in 0..w.order() {
                let prod = linalg::mat_mul(&self.group[g], &self.group[h]);
                out.push((format!("g{g}·g{h}"), linalg::mat_sub(&prod, &self.group[w.mul(g, h)])));
            }
            for i in 0..n {
                let mut xi = vec![zero(); n];
                xi[i] = one();
                let img = w.apply_covector(g, &xi);
                let expect_x = img.iter().enumerate().fold(linalg::zeros(self.dim(), self.dim()), |acc, (k, v)| {
                    linalg::mat_add(&acc, &linalg::mat_scale(&self.x[k], v))
                });
                let conj_x = linalg::mat_mul(&linalg::mat_mul(&self.group[g], &self.x[i]), gi);
                out.push((format!("g{g} x{i} g^-1"), linalg::mat_sub(&conj_x, &expect_x)));
                let mut e = vec![zero(); n];
                e[i] = one();
                let vimg = w.apply_vector(g, &e);
                let expect_y = vimg.iter().enumerate().fold(linalg::zeros(self.dim(), self.dim()), |acc, (k, v)| {
                    linalg::mat_add(&acc, &linalg::mat_scale(&self.y[k], v))
                });
                let conj_y = linalg::mat_mul(&linalg::mat_mul(&self.group[g], &self.y[i]), gi);
                out.push((format!("g{g} y{i} g^-1"), linalg::mat_sub(&conj_y, &expect_y)));
            }
        }
        out
    }

    /// Image of a word in `x_i` (`Ok(i)`) and `y_i` (`Err(i)`), applied right to left.
    pub fn word_matrix(&self, word: &[std::result::Result<usize, usize>]) -> Matrix<Q> {
        word.iter().fold(linalg::identity(self.dim()), |acc, l| {
            let m = match l {
                Ok(i) => &self.x[*i],
                Err(i) => &self.y[*i],
            };
            linalg::mat_mul(&acc, m)
        })
    }
}

/// Relations, the regular character, and invariance of word traces under relabeling the basis.
pub fn orbit_report(rep: &OrbitRepresentation, seed: u64, words: usize) -> Result<CheckReport> {
    use rand::{Rng, SeedableRng};
    let mut out = CheckReport::new(format!("orbit-representation n={}", rep.n));
    for (name, m) in rep.relation_residuals() {
        out.record(linalg::is_zero_matrix(&m), || name);
    }
    let w = rep.group_data();
    let fact: usize = (1..=rep.n).product();
    out.record(rep.dim() == fact, || format!("dimension {}", rep.dim()));
    for g in 0..w.order() {
        let tr = linalg::trace(&rep.group[g]);
        let expect = if g == 0 { Q::from_integer((fact as i64).into()) } else { zero() };
        out.record(tr == expect, || format!("Tr g{g} = {tr}"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..w.order()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let other = orbit_representation_ordered(rep.n, &rep.lambda, &rep.mu, &rep.c, &perm)?;
    for g in 0..w.order() {
        out.record(linalg::trace(&rep.group[g]) == linalg::trace(&other.group[g]), || format!("relabeled Tr g{g}"));
    }
    for _ in 0..words {
        let len = rng.gen_range(1..=4);
        let word: Vec<std::result::Result<usize, usize>> = (0..len)
            .map(|_| if rng.gen_bool(0.5) { Ok(rng.gen_range(0..rep.n)) } else { Err(rng.gen_range(0..rep.n)) })
            .collect();
        let a = linalg::trace(&rep.word_matrix(&word));
        let b = linalg::trace(&other.word_matrix(&word));
        out.record(a == b, || format!("relabeled trace of {word:?}"));
    }
    Ok(out)
}

/// `(X, Y)` on the `S_{n−1}`-invariants, against `X = diag λ`, `Y_ii = μ_i`,
/// `Y_ij = 1/(λ_i − λ_j)`.
#[derive(Clone, Debug, Serialize)]
pub struct CmPoint {
    #[serde(serialize_with = "ser_mat")]
    pub x: Matrix<Q>,
    #[serde(serialize_with = "ser_mat")]
    pub y: Matrix<Q>,
    pub matches_closed_form: bool,
    /// `rank(XY − YX + 1)`.
    pub rank_defect: usize,
    /// The restriction is `S_{n−1}`-stable and `[X, Y]` equals the restricted `Σ_i s_{1i}`.
    pub restriction_consistent: bool,
}

fn ser_mat<S: serde::Serializer>(m: &Matrix<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    serde::Serialize::serialize(&rows, s)
}

pub fn closed_form_cm(lambda: &[Q], mu: &[Q]) -> (Matrix<Q>, Matrix<Q>) {
    let n = lambda.len();
    let mut x = linalg::zeros(n, n);
    let mut y = linalg::zeros(n, n);
    for i in 0..n {
        x[i][i] = lambda[i].clone();
        for j in 0..n {
            y[i][j] = if i == j { mu[i].clone() } else { one() / (lambda[i].clone() - &lambda[j]) };
        }
    }
    (x, y)
}

pub fn cm_point_from_rep(rep: &OrbitRepresentation) -> Result<CmPoint> {
    if rep.c != one() {
        return Err(Error::InvalidParameters(format!("the Calogero–Moser map uses c = 1, got {}", rep.c)));
    }
    let n = rep.n;
    let dim = rep.dim();
    // u_k = indicator of {a_1 = λ_k}
    let basis: Vec<Vec<Q>> = (0..n)
        .map(|k| rep.points.iter().map(|(a, _)| if a[0] == rep.lambda[k] { one() } else { zero() }).collect())
        .collect();
    let coords = |v: &[Q]| -> Option<Vec<Q>> {
        // value of v on the block {a_1 = λ_k} must be constant
        let mut out = vec![zero(); n];
        for k in 0..n {
            let mut val: Option<&Q> = None;
            for (j, (a, _)) in rep.points.iter().enumerate() {
                if a[0] == rep.lambda[k] {
                    match val {
                        None => val = Some(&v[j]),
                        Some(x) if *x != v[j] => return None,
                        _ => {}
                    }
                }
            }
            out[k] = val.cloned().unwrap_or_else(zero);
        }
        Some(out)
    };
    let restrict = |m: &Matrix<Q>| -> Option<Matrix<Q>> {
        let cols: Vec<Vec<Q>> = basis.iter().map(|u| coords(&linalg::mat_vec(m, u))).collect::<Option<_>>()?;
        Some((0..n).map(|i| (0..n).map(|k| cols[k][i].clone()).collect()).collect())
    };
    let err = || Error::InvalidParameters("restriction left the invariant subspace".into());
    let x = restrict(&rep.x[0]).ok_or_else(err)?;
    let y = restrict(&rep.y[0]).ok_or_else(err)?;
    let (cx, cy) = closed_form_cm(&rep.lambda, &rep.mu);
    let m = linalg::mat_add(&commutator(&x, &y), &linalg::identity(n));
    let rank_defect = linalg::rank(&m);
    // S_{n−1} fixes index 0: its elements are the permutation matrices with M[0][0] = 1
    let w = rep.group_data();
    let mut consistent = true;
    let mut t = linalg::zeros(dim, dim);
    for g in 0..w.order() {
        let mg = w.element(g);
        if mg[0][0] == one() {
            for u in &basis {
                consistent &= linalg::mat_vec(&rep.group[g], u) == *u;
            }
        }
    }
    for r in w.reflections() {
        // transpositions s_{1i}
        if r.root[0] != zero() {
            t = linalg::mat_add(&t, &rep.group[r.element]);
        }
    }
    let tr = restrict(&t).ok_or_else(err)?;
    consistent &= commutator(&x, &y) == tr;
    Ok(CmPoint { matches_closed_form: x == cx && y == cy, x, y, rank_defect, restriction_consistent: consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&a| qi(a)).collect()
    }

    #[test]
    fn relations_n3() {
        let rep = orbit_representation(3, &v(&[0, 1, 3]), &v(&[2, -1, 5]), &qi(1)).unwrap();
        let r = orbit_report(&rep, 4, 20).unwrap();
        assert!(r.passed(), "{r:?}");
        let rep = orbit_representation(3, &v(&[0, 1, 3]), &v(&[2, -1, 5]), &q(2, 7)).unwrap();
        assert!(orbit_report(&rep, 5, 10).unwrap().passed());
    }

    #[test]
    fn degenerate() {
        assert!(matches!(orbit_representation(3, &v(&[0, 1, 1]), &v(&[0, 0, 0]), &qi(1)), Err(Error::DegenerateSpectrum)));
    }

    #[test]
    fn cm_n2() {
        let rep = orbit_representation(2, &v(&[0, 1]), &v(&[0, 0]), &qi(1)).unwrap();
        let p = cm_point_from_rep(&rep).unwrap();
        assert_eq!(p.y, vec![v(&[0, -1]), v(&[1, 0])]);
        assert!(p.matches_closed_form && p.restriction_consistent);
        assert_eq!(p.rank_defect, 1);
    }

    #[test]
    fn cm_n3_and_n4() {
        let rep = orbit_representation(3, &[q(1, 2), qi(-2), q(7, 3)], &[qi(4), q(-1, 5), qi(0)], &qi(1)).unwrap();
        let p = cm_point_from_rep(&rep).unwrap();
        assert!(p.matches_closed_form && p.restriction_consistent && p.rank_defect == 1);
        let rep = orbit_representation(4, &v(&[0, 2, -1, 5]), &v(&[1, 1, 0, -3]), &qi(1)).unwrap();
        let p = cm_point_from_rep(&rep).unwrap();
        assert!(p.matches_closed_form && p.restriction_consistent && p.rank_defect == 1);
    }
}
