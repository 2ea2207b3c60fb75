//! Exact first integrals `Tr(Y(x,p)^i)` as rational functions with
//! denominators in the differences `x_a − x_b`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{kks_pair, PhasePoint};
use crate::error::{Error, Result};
use crate::exact::{q, Field, Poly, RationalFunction, Roots, Q};
use crate::report::CheckReport;

/// Variables `x_1..x_n, p_1..p_n`; roots `x_a − x_b` for `a < b`, in lexicographic order.
pub fn difference_roots(n: usize) -> Roots<Q> {
    let mut roots = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            roots.push(&Poly::var(2 * n, a) - &Poly::var(2 * n, b));
        }
    }
    Arc::new(roots)
}

fn root_index(n: usize, a: usize, b: usize) -> usize {
    // position of (a, b), a < b, in the lexicographic list
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

pub fn symbolic_kks(n: usize) -> Vec<Vec<RationalFunction<Q>>> {
    let roots = difference_roots(n);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => RationalFunction::from_poly(Poly::var(2 * n, n + i), roots.clone()),
                    std::cmp::Ordering::Less => RationalFunction::inv_root_pow(root_index(n, i, j), 1, roots.clone()),
                    std::cmp::Ordering::Greater => RationalFunction::inv_root_pow(root_index(n, j, i), 1, roots.clone()).neg(),
                })
                .collect()
        })
        .collect()
}

/// `Tr(Y^i)`, exact.
pub fn symbolic_integral(i: usize, n: usize) -> Result<RationalFunction<Q>> {
    if !(1..=4).contains(&i) || !(1..=4).contains(&n) {
        return Err(Error::InvalidParameters(format!("symbolic integrals need 1 ≤ i, n ≤ 4, got i = {i}, n = {n}")));
    }
    let y = symbolic_kks(n);
    let roots = difference_roots(n);
    let mut pow = y.clone();
    for _ in 1..i {
        pow = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (0..n).fold(RationalFunction::zero(2 * n, roots.clone()), |acc, c| acc.add(&pow[a][c].mul(&y[c][b]))))
                    .collect()
            })
            .collect();
    }
    Ok((0..n).fold(RationalFunction::zero(2 * n, roots.clone()), |acc, a| acc.add(&pow[a][a])))
}

/// `Σ p_i² − Σ_{i≠j} 1/(x_i − x_j)²`, built directly.
pub fn hamiltonian_closed_form(n: usize) -> RationalFunction<Q> {
    let roots = difference_roots(n);
    let mut h = RationalFunction::from_poly((0..n).fold(Poly::zero(2 * n), |acc, i| &acc + &Poly::var(2 * n, n + i).pow(2)), roots.clone());
    for s in 0..roots.len() {
        h = h.sub(&RationalFunction::inv_root_pow(s, 2, roots.clone()).scale(&Q::from_i64(2)));
    }
    h
}

/// `H_1 = Σ p`, `H_2` against its closed form, and `H_3` against the numeric
/// trace at `points` seeded rational points.
pub fn integrals_report(seed: u64, points: usize, n: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("symbolic-integrals n={n}"));
    let roots = difference_roots(n);
    let h1 = symbolic_integral(1, n)?;
    let sum_p = RationalFunction::from_poly((0..n).fold(Poly::zero(2 * n), |acc, i| &acc + &Poly::var(2 * n, n + i)), roots);
    rep.record(h1 == sum_p, || "H1 = Σ p".into());
    rep.record(symbolic_integral(2, n)? == hamiltonian_closed_form(n), || "H2 closed form".into());
    let h3 = symbolic_integral(3, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..points {
        let xq: Vec<Q> = (0..n).map(|i| q(8 * i as i64 + rng.gen_range(-3..=3), 8)).collect();
        let pq: Vec<Q> = (0..n).map(|_| q(rng.gen_range(-16..=16), 8)).collect();
        let point: Vec<Q> = xq.iter().chain(&pq).cloned().collect();
        let exact = match h3.eval(&point) {
            Some(v) => v.to_f64(),
            None => {
                rep.fail(format!("point {k} on a root hyperplane"));
                continue;
            }
        };
        let pt = PhasePoint::new(xq.iter().map(Field::to_f64).collect(), pq.iter().map(Field::to_f64).collect())?;
        let numeric = kks_pair(&pt)?.integrals(3)[2];
        rep.record((exact - numeric).abs() <= 1e-10 * (1.0 + exact.abs()), || format!("point {k}: H3 exact {exact} numeric {numeric}"));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_indexing() {
        let n = 4;
        let roots = difference_roots(n);
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(roots[root_index(n, a, b)], &Poly::var(2 * n, a) - &Poly::var(2 * n, b));
            }
        }
    }

    #[test]
    fn low_integrals() {
        for n in 2..=3 {
            let r = integrals_report(18, 100, n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert!(symbolic_integral(5, 2).is_err());
    }

    #[test]
    fn h3_two_body() {
        // Tr Y³ for n = 2: p1³ + p2³ − 3(p1 + p2)/(x1 − x2)²
        let h3 = symbolic_integral(3, 2).unwrap();
        let roots = difference_roots(2);
        let p = |i: usize| Poly::<Q>::var(4, 2 + i);
        let cubic = RationalFunction::from_poly(&p(0).pow(3) + &p(1).pow(3), roots.clone());
        let tail = RationalFunction::from_poly(&p(0) + &p(1), roots.clone()).mul(&RationalFunction::inv_root_pow(0, 2, roots)).scale(&Q::from_i64(3));
        assert_eq!(h3, cubic.sub(&tail));
    }
}
