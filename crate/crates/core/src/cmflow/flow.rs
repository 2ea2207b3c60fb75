//! Solutions of the Calogero–Moser flows by diagonalizing `X_0 + i t Y_0^{i−1}`,
//! and an RK4 integrator of Hamilton's equations for comparison.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::matrix::{eigenvalues, eigenvector, kks_pair, MatrixPair, PhasePoint, RMat};
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// Eigenvalues with imaginary part above this (relative) are not positions.
const REAL_TOL: f64 = 1e-7;
const MIN_STEP: f64 = 1e-9;

/// `X_t = X_0 + i t Y^{i−1}`; `Y` is unchanged.
pub fn flowed_pair(m: &MatrixPair, t: f64, order: u32) -> MatrixPair {
    let n = m.n();
    let mut pow = RMat::identity(n, n);
    for _ in 1..order {
        pow = &pow * &m.y;
    }
    MatrixPair { x: &m.x + pow * (order as f64 * t), y: m.y.clone() }
}

fn real_spectrum(a: &RMat) -> Option<Vec<f64>> {
    let ev = eigenvalues(a)?;
    let scale = a.amax().max(1.0);
    ev.iter().all(|z| z.im.abs() <= REAL_TOL * scale).then(|| ev.iter().map(|z| z.re).collect())
}

/// Match `new` to `prev` so that each label moves to its nearest eigenvalue.
/// `None` if some move is not clearly shorter than the gap to the runner-up.
fn track(prev: &[f64], new: &[f64]) -> Option<Vec<f64>> {
    let n = prev.len();
    let mut out = vec![0.0; n];
    let mut used = vec![false; n];
    for (i, &p) in prev.iter().enumerate() {
        let mut d: Vec<(f64, usize)> = new.iter().enumerate().map(|(j, &v)| ((v - p).abs(), j)).collect();
        d.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (best, j) = d[0];
        if used[j] || (n > 1 && best * 2.0 >= d[1].0) {
            return None;
        }
        used[j] = true;
        out[i] = new[j];
    }
    Some(out)
}

/// Momenta from the diagonalizing frame `P` of `X_t`: `p = diag(P⁻¹ Y P)`.
fn frame_momenta(xt: &RMat, y: &RMat, eig: &[f64]) -> Option<Vec<f64>> {
    let n = eig.len();
    let mut p = RMat::zeros(n, n);
    for (k, &l) in eig.iter().enumerate() {
        p.set_column(k, &eigenvector(xt, l));
    }
    let inv = p.clone().try_inverse()?;
    let c = inv * y * p;
    Some((0..n).map(|i| c[(i, i)]).collect())
}

/// Phase points of the order-`i` flow at each time in `times` (ascending, from 0).
pub fn eigen_trajectory(pt0: &PhasePoint, times: &[f64], order: u32) -> Result<Vec<PhasePoint>> {
    let m0 = kks_pair(pt0)?;
    let mut labels = pt0.x.clone();
    let mut t_cur = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let mut h = (target - t_cur) / 4.0;
        while (target - t_cur).abs() > 0.0 {
            if h.abs() < MIN_STEP {
                return Err(Error::EigenvalueCollision(t_cur));
            }
            let t_next = if (t_cur + h - target) * h.signum() >= 0.0 { target } else { t_cur + h };
            let xt = flowed_pair(&m0, t_next, order).x;
            match real_spectrum(&xt).and_then(|ev| track(&labels, &ev)) {
                Some(next) => {
                    labels = next;
                    t_cur = t_next;
                    h *= 1.5;
                }
                None => h /= 2.0,
            }
        }
        let ft = flowed_pair(&m0, target, order);
        let p = frame_momenta(&ft.x, &ft.y, &labels).ok_or(Error::EigenvalueCollision(target))?;
        out.push(PhasePoint::new(labels.clone(), p).map_err(|_| Error::EigenvalueCollision(target))?);
    }
    Ok(out)
}

pub fn flow_eigen(pt0: &PhasePoint, t: f64, order: u32) -> Result<PhasePoint> {
    Ok(eigen_trajectory(pt0, &[t], order)?.pop().expect("one time"))
}

/// `x'(t)/2` by central differences of the eigenvalue flow.
pub fn velocity_fd(pt0: &PhasePoint, t: f64, h: f64) -> Result<Vec<f64>> {
    let a = flow_eigen(pt0, t - h, 2)?;
    let b = flow_eigen(pt0, t + h, 2)?;
    Ok(a.x.iter().zip(&b.x).map(|(u, v)| (v - u) / (4.0 * h)).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct TrajectorySample {
    pub times: Vec<f64>,
    pub states: Vec<PhasePoint>,
    /// `H_1..H_n` at each time.
    pub integrals: Vec<Vec<f64>>,
    pub energy_drift: f64,
}

fn integrals_of(pt: &PhasePoint) -> Result<Vec<f64>> {
    Ok(kks_pair(pt)?.integrals(pt.n()))
}

impl TrajectorySample {
    fn from_states(times: Vec<f64>, states: Vec<PhasePoint>) -> Result<Self> {
        let integrals = states.iter().map(integrals_of).collect::<Result<Vec<_>>>()?;
        let h0 = states[0].hamiltonian();
        let energy_drift = states.iter().map(|s| (s.hamiltonian() - h0).abs()).fold(0.0, f64::max);
        Ok(Self { times, states, integrals, energy_drift })
    }
}

/// `ẋ_i = 2 p_i`, `ṗ_i = −4 Σ_j (x_i − x_j)^{−3}`.
fn vector_field(x: &[f64], p: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = x.len();
    let dx = p.iter().map(|v| 2.0 * v).collect();
    let dp = (0..n)
        .map(|i| -4.0 * (0..n).filter(|&j| j != i).map(|j| (x[i] - x[j]).powi(-3)).sum::<f64>())
        .collect();
    (dx, dp)
}

fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(u, v)| u + s * v).collect()
}

pub fn rk4_step(pt: &PhasePoint, dt: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, p) = (&pt.x, &pt.p);
    let (k1x, k1p) = vector_field(x, p);
    let (k2x, k2p) = vector_field(&axpy(x, dt / 2.0, &k1x), &axpy(p, dt / 2.0, &k1p));
    let (k3x, k3p) = vector_field(&axpy(x, dt / 2.0, &k2x), &axpy(p, dt / 2.0, &k2p));
    let (k4x, k4p) = vector_field(&axpy(x, dt, &k3x), &axpy(p, dt, &k3p));
    let comb = |y: &[f64], a: &[f64], b: &[f64], c: &[f64], d: &[f64]| -> Vec<f64> {
        (0..y.len()).map(|i| y[i] + dt / 6.0 * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i])).collect()
    };
    (comb(x, &k1x, &k2x, &k3x, &k4x), comb(p, &k1p, &k2p, &k3p, &k4p))
}

fn same_order(a: &[f64], b: &[f64]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

/// Classical RK4 on `[0, t_max]` with fixed step `dt` (the last step is shortened).
pub fn ode_integrate(pt0: &PhasePoint, t_max: f64, dt: f64) -> Result<TrajectorySample> {
    if !(dt > 0.0) || !(t_max >= 0.0) {
        return Err(Error::InvalidParameters(format!("need dt > 0 and t_max ≥ 0, got dt = {dt}, t_max = {t_max}")));
    }
    let steps = (t_max / dt - 1e-9).ceil().max(0.0) as usize;
    let mut times = vec![0.0];
    let mut states = vec![pt0.clone()];
    let mut cur = pt0.clone();
    for k in 0..steps {
        let t0 = k as f64 * dt;
        let h = dt.min(t_max - t0);
        let (x, p) = rk4_step(&cur, h);
        let next = PhasePoint::new(x, p).map_err(|_| Error::StepCollision(t0 + h))?;
        // a fixed step can jump over a collision; particles never cross otherwise
        if !same_order(&cur.x, &next.x) {
            return Err(Error::StepCollision(t0 + h));
        }
        cur = next;
        times.push(if k + 1 == steps { t_max } else { t0 + h });
        states.push(cur.clone());
    }
    TrajectorySample::from_states(times, states)
}

/// Eigenvalue-flow trajectory on the same grid as `ode_integrate`.
pub fn eigen_sample(pt0: &PhasePoint, t_max: f64, dt: f64) -> Result<TrajectorySample> {
    let steps = (t_max / dt - 1e-9).ceil().max(0.0) as usize;
    let times: Vec<f64> = (0..=steps).map(|k| if k == steps { t_max } else { k as f64 * dt }).collect();
    let states = eigen_trajectory(pt0, &times[1..], 2)?;
    let mut all = vec![pt0.clone()];
    all.extend(states);
    TrajectorySample::from_states(times, all)
}

pub fn max_position_gap(a: &TrajectorySample, b: &TrajectorySample) -> f64 {
    a.states
        .iter()
        .zip(&b.states)
        .flat_map(|(u, v)| u.x.iter().zip(&v.x).map(|(s, t)| (s - t).abs()))
        .fold(0.0, f64::max)
}

fn integral_drift(s: &TrajectorySample) -> f64 {
    let first = &s.integrals[0];
    s.integrals
        .iter()
        .flat_map(|row| row.iter().zip(first).map(|(a, b)| (a - b).abs() / (1.0 + b.abs())))
        .fold(0.0, f64::max)
}

/// Seeded initial conditions whose neighbours are unbound: ordered positions
/// with gaps near 1.5 and momentum increments near 1.5.
pub fn sample_initial(rng: &mut impl Rng, n: usize) -> PhasePoint {
    let x = (0..n).map(|i| 1.5 * i as f64 + rng.gen_range(-0.25..0.25)).collect();
    let p = (0..n).map(|i| 1.5 * i as f64 + rng.gen_range(-0.2..0.2)).collect();
    PhasePoint::new(x, p).expect("separated by construction")
}

/// Eigenvalue flow against RK4 on `[0, t_max]` for `count` seeded points: position
/// agreement within `1e−6`, energy drift within `1e−8`, and `H_i` constant along
/// the eigenvalue flow within `1e−10`.
pub fn flow_report(seed: u64, count: usize, n: usize, t_max: f64, dt: f64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("cm-flow n={n} points={count}"));
    for k in 0..count {
        let pt = sample_initial(&mut rng, n);
        let (ode, eig) = match (ode_integrate(&pt, t_max, dt), eigen_sample(&pt, t_max, dt)) {
            (Ok(a), Ok(b)) => (a, b),
            (a, b) => {
                rep.fail(format!("point {k}: {:?} / {:?}", a.err(), b.err()));
                continue;
            }
        };
        let gap = max_position_gap(&ode, &eig);
        rep.record(gap <= 1e-6, || format!("point {k}: position gap {gap:e}"));
        rep.record(ode.energy_drift <= 1e-8, || format!("point {k}: energy drift {:e}", ode.energy_drift));
        let drift = integral_drift(&eig);
        rep.record(drift <= 1e-10, || format!("point {k}: integral drift {drift:e}"));
        let m0 = kks_pair(&pt).expect("sampled point");
        for t in [0.3, 1.0] {
            for order in 1..=3 {
                let mt = flowed_pair(&m0, t, order);
                let d = ((&mt.x * &mt.y - &mt.y * &mt.x) - (&m0.x * &m0.y - &m0.y * &m0.x)).amax();
                rep.record(d <= 1e-12 * m0.scale().powi(order as i32 + 1), || format!("point {k}: commutator moved by {d:e}"));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: &[f64], p: &[f64]) -> PhasePoint {
        PhasePoint::new(x.to_vec(), p.to_vec()).unwrap()
    }

    #[test]
    fn identity_at_zero() {
        let a = pt(&[0.0, 1.3, 2.9], &[0.5, -0.2, 0.1]);
        let b = flow_eigen(&a, 0.0, 2).unwrap();
        for i in 0..3 {
            assert!((a.x[i] - b.x[i]).abs() < 1e-12 && (a.p[i] - b.p[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn free_motion_far_apart() {
        let a = pt(&[0.0, 1e4, 2e4], &[0.5, -0.2, 0.1]);
        let b = flow_eigen(&a, 1.0, 2).unwrap();
        for i in 0..3 {
            assert!((b.x[i] - (a.x[i] + 2.0 * a.p[i])).abs() < 1e-6, "{b:?}");
        }
    }

    #[test]
    fn two_body_at_rest_attracts() {
        // eigenvalues of [[0, −2t], [2t, 1]] are (1 ± √(1 − 16t²))/2
        let a = pt(&[0.0, 1.0], &[0.0, 0.0]);
        let b = flow_eigen(&a, 0.2, 2).unwrap();
        let s = (1.0f64 - 16.0 * 0.04).sqrt();
        assert!((b.x[0] - (1.0 - s) / 2.0).abs() < 1e-12 && (b.x[1] - (1.0 + s) / 2.0).abs() < 1e-12);
        let ode = ode_integrate(&a, 0.2, 1e-4).unwrap();
        let last = ode.states.last().unwrap();
        assert!((last.x[0] - b.x[0]).abs() < 1e-8);
        assert!((last.p[0] - b.p[0]).abs() < 1e-7, "{last:?} {b:?}");
        assert!(matches!(flow_eigen(&a, 0.3, 2), Err(Error::EigenvalueCollision(_))));
        assert!(matches!(ode_integrate(&a, 0.3, 1e-3), Err(Error::StepCollision(_))));
    }

    #[test]
    fn frame_momenta_match_velocity() {
        let a = pt(&[0.0, 1.4, 3.1], &[-0.8, 0.35, 1.9]);
        let b = flow_eigen(&a, 0.7, 2).unwrap();
        let v = velocity_fd(&a, 0.7, 1e-4).unwrap();
        for i in 0..3 {
            assert!((b.p[i] - v[i]).abs() < 1e-6, "{:?} {v:?}", b.p);
        }
    }

    #[test]
    fn composition() {
        let a = pt(&[0.0, 1.4, 3.1], &[-0.8, 0.35, 1.9]);
        for order in 1..=3 {
            let direct = flow_eigen(&a, 0.6, order).unwrap();
            let two = flow_eigen(&flow_eigen(&a, 0.25, order).unwrap(), 0.35, order).unwrap();
            for i in 0..3 {
                assert!((direct.x[i] - two.x[i]).abs() < 1e-9 && (direct.p[i] - two.p[i]).abs() < 1e-8, "order {order}");
            }
        }
    }

    #[test]
    fn richardson_fourth_order() {
        let a = pt(&[0.0, 1.4, 3.1], &[-0.8, 0.35, 1.9]);
        let truth = flow_eigen(&a, 1.0, 2).unwrap();
        let err = |dt: f64| {
            let s = ode_integrate(&a, 1.0, dt).unwrap();
            let last = s.states.last().unwrap();
            last.x.iter().zip(&truth.x).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max)
        };
        let ratio = err(0.1) / err(0.05);
        assert!((12.0..22.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn seeded_flow_report() {
        let r = flow_report(14, 3, 3, 1.0, 1e-3);
        assert!(r.passed(), "{r:?}");
    }
}
