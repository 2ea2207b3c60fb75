//! The trigonometric system on `x_i > 0` with `Y_* = XY`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::matrix::{kks_pair, PhasePoint};
use super::necklace::{necklace_bracket, random_pair, Word};
use crate::error::{Error, Result};
use crate::report::CheckReport;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrigValues {
    /// `Σ (x_i p_i)² − Σ_{i≠j} x_i x_j / (x_i − x_j)²`.
    pub h_star: f64,
    /// `Σ p*_i² − Σ_{i≠j} 1 / (4 sinh²((x*_i − x*_j)/2))` with `x* = log x`, `p* = x p`.
    pub additive_form: f64,
    /// `Tr((XY)²)` at the KKS pair.
    pub trace_form: f64,
}

pub fn trig_system(pt: &PhasePoint) -> Result<TrigValues> {
    if let Some(i) = pt.x.iter().position(|&v| !(v > 0.0)) {
        return Err(Error::NonPositiveCoordinate(i));
    }
    let m = kks_pair(pt)?;
    let n = pt.n();
    let xs: Vec<f64> = pt.x.iter().map(|v| v.ln()).collect();
    let ps: Vec<f64> = pt.x.iter().zip(&pt.p).map(|(x, p)| x * p).collect();
    let mut h_star: f64 = ps.iter().map(|v| v * v).sum();
    let mut additive_form = h_star;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                h_star -= pt.x[i] * pt.x[j] / (pt.x[i] - pt.x[j]).powi(2);
                additive_form -= 0.25 / ((xs[i] - xs[j]) / 2.0).sinh().powi(2);
            }
        }
    }
    let xy = &m.x * &m.y;
    let trace_form = (&xy * &xy).trace();
    Ok(TrigValues { h_star, additive_form, trace_form })
}

/// `H*_i = Tr((XY)^i)` pairwise in involution at random pairs, via both sides
/// of the necklace formula.
pub fn involution_report(seed: u64, trials: usize, n: usize, max_i: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("trig-involution n={n} trials={trials}"));
    let xy = Word::parse("XY").expect("literal");
    for t in 0..trials {
        let m = random_pair(&mut rng, n);
        for i in 1..=max_i {
            for j in 1..=max_i {
                let (l, r) = necklace_bracket(&xy.repeat(i), &xy.repeat(j), &m);
                rep.record(l.abs() <= 1e-9 && r.abs() <= 1e-9, || format!("trial {t}: {{H{i}*, H{j}*}} = {l} / {r}"));
            }
        }
    }
    rep
}

/// Coordinate form against the sinh form and the trace at seeded positive points.
pub fn trig_report(seed: u64, points: usize, n: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("trig-forms n={n} points={points}"));
    for k in 0..points {
        let x = (0..n).map(|i| (0.7 * i as f64 + rng.gen_range(-0.2..0.2)).exp()).collect();
        let p = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        match PhasePoint::new(x, p).and_then(|pt| trig_system(&pt)) {
            Ok(v) => {
                let tol = 1e-10 * (1.0 + v.h_star.abs());
                rep.record((v.h_star - v.additive_form).abs() <= tol && (v.h_star - v.trace_form).abs() <= tol, || format!("point {k}: {v:?}"));
            }
            Err(e) => rep.fail(format!("point {k}: {e}")),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_particles() {
        let e = 1f64.exp();
        let v = trig_system(&PhasePoint::new(vec![1.0, e], vec![0.0, 0.0]).unwrap()).unwrap();
        let want = -2.0 * e / (e - 1.0).powi(2);
        assert!((v.h_star - want).abs() < 1e-14);
        assert!((v.additive_form - want).abs() < 1e-12);
        assert!((v.additive_form + 0.5 / 0.5f64.sinh().powi(2)).abs() < 1e-12);
        // the factor 4/sinh² would be off by 16
        assert!((v.h_star + 2.0 * 4.0 / 0.5f64.sinh().powi(2)).abs() > 1.0);
    }

    #[test]
    fn far_apart_is_kinetic() {
        let pt = PhasePoint::new(vec![1.0, 1e6, 1e12], vec![0.4, 1e-6, 3e-12]).unwrap();
        let v = trig_system(&pt).unwrap();
        let kinetic = 0.16 + 1.0 + 9.0;
        assert!((v.h_star - kinetic).abs() < 1e-5 && (v.additive_form - kinetic).abs() < 1e-5);
    }

    #[test]
    fn nonpositive() {
        let pt = PhasePoint::new(vec![1.0, -2.0], vec![0.0, 0.0]).unwrap();
        assert!(matches!(trig_system(&pt), Err(Error::NonPositiveCoordinate(1))));
    }

    #[test]
    fn reports() {
        assert!(trig_report(17, 20, 3).passed());
        let r = involution_report(17, 4, 3, 3);
        assert!(r.passed(), "{r:?}");
    }
}
