//! The finite-dimensional quotient `A = M_k / I_k` in translation-invariant
//! coordinates `u_i = x_i − x_{i+1}`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use super::singular::singular_vectors;
use crate::coxeter::ReflectionGroup;
use crate::cherednik::{elementary_traces, WRep};
use crate::error::{Error, Result};
use crate::exact::{linalg, monomials_of_degree, pad_exponent, Exponent, Poly, Q};
use crate::report::CheckReport;

/// One graded piece of `A`.
#[derive(Clone, Debug)]
pub struct Slice {
    pub degree: u32,
    /// All monomials of `ℂ[u]_d`, in column order.
    pub monomials: Vec<Exponent>,
    /// Reduced row echelon basis of `I_d` and its pivot columns.
    pub ideal: linalg::Matrix<Q>,
    pub pivots: Vec<usize>,
    /// Non-pivot columns: the standard monomials spanning `A_d`.
    pub standard: Vec<usize>,
}

impl Slice {
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    fn index(&self, e: &[u32]) -> usize {
        self.monomials.iter().position(|m| m == e).expect("monomial of this degree")
    }

    /// Coordinates of a degree-d polynomial in the standard basis of `A_d`.
    pub fn reduce(&self, f: &Poly<Q>) -> Vec<Q> {
        let mut v = vec![Q::from_integer(0.into()); self.monomials.len()];
        for (e, c) in f.terms() {
            v[self.index(e)] += c;
        }
        for (row, &p) in self.ideal.iter().zip(&self.pivots) {
            if v[p] != Q::from_integer(0.into()) {
                let k = v[p].clone();
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj -= k.clone() * rj;
                }
            }
        }
        self.standard.iter().map(|&j| v[j].clone()).collect()
    }

    pub fn standard_monomial(&self, i: usize) -> &Exponent {
        &self.monomials[self.standard[i]]
    }
}

#[derive(Clone, Debug)]
pub struct QuotientSlices {
    pub n: usize,
    pub r: usize,
    pub slices: Vec<Slice>,
    /// Generators of `I_k` in u-coordinates.
    pub generators: Vec<Poly<Q>>,
}

/// `x_i ↦ u_i + … + u_{n−1}` (so `x_n ↦ 0`).
pub fn to_u_coordinates(f: &Poly<Q>) -> Poly<Q> {
    let n = f.nvars();
    let m = n - 1;
    let images: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..m).map(|j| if j >= i { Q::from_integer(1.into()) } else { Q::from_integer(0.into()) }).collect())
        .collect();
    let sub = crate::exact::LinearSubstitution::from_matrix(&images);
    f.substitute_linear(&sub).resize(m)
}

/// `u_i ↦ x_i − x_{i+1}`.
pub fn from_u_coordinates(f: &Poly<Q>, n: usize) -> Poly<Q> {
    let m = n - 1;
    let images: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            (0..n)
                .map(|j| if j == i { Q::from_integer(1.into()) } else if j == i + 1 { Q::from_integer((-1).into()) } else { Q::from_integer(0.into()) })
                .collect()
        })
        .collect();
    let lifted = f.resize(n);
    let mut full = images;
    full.push(vec![Q::from_integer(0.into()); n]);
    lifted.substitute_linear(&crate::exact::LinearSubstitution::from_matrix(&full))
}

impl QuotientSlices {
    /// Slices `0..=cap`; fails with `CapTooSmall` unless some slice up to the cap is zero.
    pub fn compute(n: usize, r: usize, cap: u32) -> Result<Self> {
        let fam = singular_vectors(n, r)?;
        let m = n - 1;
        let generators: Vec<Poly<Q>> = fam.f.iter().map(to_u_coordinates).collect();
        let mut slices = Vec::new();
        let mut vanished = false;
        for d in 0..=cap {
            let monomials = monomials_of_degree(m, d);
            let col: BTreeMap<&Exponent, usize> = monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
            let mut rows = Vec::new();
            if d as usize >= r {
                for mono in monomials_of_degree(m, d - r as u32) {
                    for g in &generators {
                        let p = g.mul_monomial(&mono, &Q::from_integer(1.into()));
                        let mut row = vec![Q::from_integer(0.into()); monomials.len()];
                        for (e, c) in p.terms() {
                            row[col[e]] = c.clone();
                        }
                        rows.push(row);
                    }
                }
            }
            let pivots = linalg::rref(&mut rows);
            rows.truncate(pivots.len());
            let standard = (0..monomials.len()).filter(|c| !pivots.contains(c)).collect::<Vec<_>>();
            vanished |= standard.is_empty();
            slices.push(Slice { degree: d, monomials, ideal: rows, pivots, standard });
            if vanished {
                break;
            }
        }
        if !vanished {
            return Err(Error::CapTooSmall { cap: cap as usize });
        }
        Ok(Self { n, r, slices, generators })
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.slices.iter().map(Slice::dim).collect();
        while d.last() == Some(&0) {
            d.pop();
        }
        d
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn top_degree(&self) -> usize {
        self.dims().len().saturating_sub(1)
    }

    fn slice(&self, d: usize) -> Option<&Slice> {
        self.slices.get(d).filter(|s| s.dim() > 0)
    }

    /// Trace of the permutation `g` on each slice.
    pub fn traces(&self, w: &ReflectionGroup<Q>, g: usize) -> Vec<Q> {
        let n = self.n;
        self.dims()
            .iter()
            .enumerate()
            .map(|(d, _)| {
                let s = &self.slices[d];
                let mut tr = Q::from_integer(0.into());
                for i in 0..s.dim() {
                    let mono = Poly::monomial(s.standard_monomial(i).clone(), Q::from_integer(1.into()));
                    let img = to_u_coordinates(&w.act(g, &from_u_coordinates(&mono, n)));
                    tr += &s.reduce(&img)[i];
                }
                tr
            })
            .collect()
    }

    /// `χ_A(g, t)` coefficients per conjugacy class.
    pub fn character(&self) -> Result<QuotientCharacter> {
        let w = ReflectionGroup::<Q>::symmetric(self.n)?;
        let classes = w.classes().iter().map(|c| c.name.clone()).collect();
        let coeffs = w.classes().iter().map(|c| self.traces(&w, c.elements[0])).collect();
        Ok(QuotientCharacter { offset: offset(self.n, self.r), classes, coeffs })
    }

    /// Multiplication `A_d × A_{top−d} → A_top`, as a matrix.
    pub fn pairing(&self, d: usize) -> Option<linalg::Matrix<Q>> {
        let top = self.top_degree();
        let (a, b, t) = (self.slice(d)?, self.slice(top - d)?, self.slice(top)?);
        let m = self.n - 1;
        Some(
            (0..a.dim())
                .map(|i| {
                    (0..b.dim())
                        .map(|j| {
                            let e: Exponent = a.standard_monomial(i).iter().zip(b.standard_monomial(j)).map(|(x, y)| x + y).collect();
                            t.reduce(&Poly::monomial(pad_exponent(&e, m), Q::from_integer(1.into())))[0].clone()
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

fn offset(n: usize, r: usize) -> Q {
    Q::new(((1 - r as i64) * (n as i64 - 1)).into(), 2.into())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientCharacter {
    /// Exponent offset `(1 − r)(n − 1)/2` in the 𝐡-grading.
    #[serde(serialize_with = "ser_q")]
    pub offset: Q,
    pub classes: Vec<String>,
    #[serde(serialize_with = "ser_qss")]
    pub coeffs: Vec<Vec<Q>>,
}

fn ser_q<S: serde::Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_qss<S: serde::Serializer>(v: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&row.iter().map(ToString::to_string).collect::<Vec<_>>())?;
    }
    seq.end()
}

/// Ascending coefficients of the power series `num / den` through `len` terms.
pub fn series_div(num: &[Q], den: &[Q], len: usize) -> Vec<Q> {
    let zero = Q::from_integer(0.into());
    let mut out = vec![zero.clone(); len];
    for d in 0..len {
        let mut acc = num.get(d).cloned().unwrap_or_else(|| zero.clone());
        for k in 1..den.len().min(d + 1) {
            acc -= den[k].clone() * &out[d - k];
        }
        out[d] = acc / den[0].clone();
    }
    out
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::from_integer(0.into()); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x.clone() * y;
        }
    }
    out
}

/// `det(1 − A t^k)` as ascending coefficients.
fn det_one_minus(a: &linalg::Matrix<Q>, k: usize) -> Vec<Q> {
    let e = elementary_traces(a);
    let mut out = vec![Q::from_integer(0.into()); (e.len() - 1) * k + 1];
    for (j, v) in e.iter().enumerate() {
        out[j * k] = if j % 2 == 0 { v.clone() } else { -v.clone() };
    }
    out
}

/// `det_𝔥(1 − g t^r) / det_𝔥(1 − g t)` with `det_𝔥 = det_{ℂ^n} / (1 − t)`.
pub fn closed_form_character(r: usize, g: &linalg::Matrix<Q>, len: usize) -> Vec<Q> {
    let one = Q::from_integer(1.into());
    let minus = |k: usize| {
        let mut v = vec![Q::from_integer(0.into()); k + 1];
        v[0] = one.clone();
        v[k] = -one.clone();
        v
    };
    let num = poly_mul(&det_one_minus(g, r), &minus(1));
    let den = poly_mul(&det_one_minus(g, 1), &minus(r));
    series_div(&num, &den, len)
}

/// `Σ_j (−1)^j χ_{Λ^j U}(g) t^{jr} / det_𝔥(1 − g t)` from the reflection representation.
pub fn bgg_euler_character(refl: &linalg::Matrix<Q>, r: usize, len: usize) -> Vec<Q> {
    let ext = elementary_traces(refl);
    let mut num = vec![Q::from_integer(0.into()); (ext.len() - 1) * r + 1];
    for (j, v) in ext.iter().enumerate() {
        num[j * r] = if j % 2 == 0 { v.clone() } else { -v.clone() };
    }
    let den = det_one_minus(refl, 1);
    series_div(&num, &den, len)
}

/// Dimension `r^{n−1}`, palindromic Hilbert series, closed-form and BGG characters.
pub fn quotient_report(qs: &QuotientSlices) -> Result<CheckReport> {
    let (n, r) = (qs.n, qs.r);
    let mut rep = CheckReport::new(format!("finite-quotient n={n} r={r}"));
    let coprime = r.gcd(&n) == 1;
    let dims = qs.dims();
    if coprime {
        let expect = r.pow(n as u32 - 1);
        rep.record(qs.total_dim() == expect, || format!("dimension {} vs {expect}", qs.total_dim()));
    }
    let rev: Vec<usize> = dims.iter().rev().cloned().collect();
    rep.record(rev == dims, || format!("palindromic {dims:?}"));
    let w = ReflectionGroup::<Q>::symmetric(n)?;
    let refl = WRep::reflection(&w)?;
    let ch = qs.character()?;
    let len = dims.len() + r + 2;
    for (k, class) in w.classes().iter().enumerate() {
        let g = class.elements[0];
        let mut got = ch.coeffs[k].clone();
        got.resize(len, Q::from_integer(0.into()));
        // g acts on coordinates through M⁻¹
        let gi = w.element(w.inverse(g));
        let closed = closed_form_character(r, gi, len);
        rep.record(got == closed, || format!("closed form on class {}: {got:?} vs {closed:?}", class.name));
        let bgg = bgg_euler_character(refl.matrix(w.inverse(g)), r, len);
        rep.record(got == bgg, || format!("BGG Euler characteristic on class {}", class.name));
    }
    Ok(rep)
}

/// Top slice one-dimensional and every multiplication pairing nondegenerate.
pub fn frobenius_check(qs: &QuotientSlices) -> CheckReport {
    let mut rep = CheckReport::new(format!("frobenius n={} r={}", qs.n, qs.r));
    let dims = qs.dims();
    let top = qs.top_degree();
    rep.record(dims.last() == Some(&1), || format!("top slice dimension {:?}", dims.last()));
    for d in 0..=top {
        let ok = match qs.pairing(d) {
            Some(m) => m.len() == m.first().map_or(0, Vec::len) && linalg::det(&m) != Q::from_integer(0.into()),
            None => false,
        };
        rep.record(ok, || format!("pairing degree {d} × {}", top - d));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn coordinates_round_trip() {
        let x = |i| Poly::<Q>::var(3, i);
        let f = &(&x(0) - &x(1)) * &(&x(1) - &x(2));
        let u = to_u_coordinates(&f);
        assert_eq!(u, &Poly::var(2, 0) * &Poly::var(2, 1));
        assert_eq!(from_u_coordinates(&u, 3), f);
    }

    #[test]
    fn two_three() {
        let qs = QuotientSlices::compute(2, 3, 6).unwrap();
        assert_eq!(qs.dims(), vec![1, 1, 1]);
        assert!(quotient_report(&qs).unwrap().passed());
        let f = frobenius_check(&qs);
        assert!(f.passed(), "{f:?}");
    }

    #[test]
    fn three_two() {
        let qs = QuotientSlices::compute(3, 2, 6).unwrap();
        assert_eq!(qs.dims(), vec![1, 2, 1]);
        assert_eq!(qs.total_dim(), 4);
        let r = quotient_report(&qs).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(frobenius_check(&qs).passed());
        let ch = qs.character().unwrap();
        assert_eq!(ch.offset, qi(-1));
    }

    #[test]
    fn larger_cases() {
        for (n, r) in [(3, 4), (4, 3), (3, 5)] {
            let qs = QuotientSlices::compute(n, r, 12).unwrap();
            let rep = quotient_report(&qs).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert!(frobenius_check(&qs).passed());
        }
    }

    #[test]
    fn cap_too_small() {
        assert!(matches!(QuotientSlices::compute(3, 2, 1), Err(Error::CapTooSmall { cap: 1 })));
    }
}
