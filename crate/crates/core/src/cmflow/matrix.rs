//! Phase points, the KKS matrix pair and a small eigen-solver.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub type RMat = DMatrix<f64>;
pub type CMat = DMatrix<Complex64>;

/// Relative separation below which coordinates count as colliding.
pub const SEPARATION: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhasePoint {
    pub x: Vec<f64>,
    pub p: Vec<f64>,
}

impl PhasePoint {
    pub fn new(x: Vec<f64>, p: Vec<f64>) -> Result<Self> {
        if x.len() != p.len() || x.is_empty() {
            return Err(Error::InvalidParameters(format!("x has {} entries, p has {}", x.len(), p.len())));
        }
        let pt = Self { x, p };
        if let Some((i, j)) = pt.collision() {
            return Err(Error::CollidingCoordinates(i, j));
        }
        Ok(pt)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn scale(&self) -> f64 {
        self.x.iter().fold(1.0f64, |m, v| m.max(v.abs()))
    }

    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                best = best.min((self.x[i] - self.x[j]).abs());
            }
        }
        best
    }

    /// First pair closer than the separation threshold.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let tol = SEPARATION * self.scale();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if (self.x[i] - self.x[j]).abs() <= tol || !(self.x[i] - self.x[j]).is_finite() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `H = Σ p_i² − Σ_{i≠j} 1/(x_i − x_j)²`.
    pub fn hamiltonian(&self) -> f64 {
        let mut h: f64 = self.p.iter().map(|v| v * v).sum();
        for i in 0..self.n() {
            for j in 0..self.n() {
                if i != j {
                    h -= 1.0 / (self.x[i] - self.x[j]).powi(2);
                }
            }
        }
        h
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixPair {
    pub x: RMat,
    pub y: RMat,
}

/// `X = diag(x)`, `Y_ii = p_i`, `Y_ij = 1/(x_i − x_j)`.
pub fn kks_pair(pt: &PhasePoint) -> Result<MatrixPair> {
    if let Some((i, j)) = pt.collision() {
        return Err(Error::CollidingCoordinates(i, j));
    }
    let n = pt.n();
    let x = RMat::from_diagonal(&nalgebra::DVector::from_column_slice(&pt.x));
    let y = RMat::from_fn(n, n, |i, j| if i == j { pt.p[i] } else { 1.0 / (pt.x[i] - pt.x[j]) });
    Ok(MatrixPair { x, y })
}

impl MatrixPair {
    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    pub fn scale(&self) -> f64 {
        self.x.amax().max(self.y.amax()).max(1.0)
    }

    /// `XY − YX + 1`.
    pub fn deformed_commutator(&self) -> RMat {
        &self.x * &self.y - &self.y * &self.x + RMat::identity(self.n(), self.n())
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let mut s: Vec<f64> = self.deformed_commutator().singular_values().iter().copied().collect();
        s.sort_by(|a, b| b.total_cmp(a));
        s
    }

    pub fn scale_commutator(&self) -> f64 {
        self.deformed_commutator().amax().max(1.0)
    }

    /// Exactly one singular value above `1e−6·scale`, all others below `1e−8·scale`.
    pub fn is_rank_one(&self) -> bool {
        let s = self.singular_values();
        let scale = self.scale_commutator();
        s[0] > 1e-6 * scale && s[1..].iter().all(|v| *v < 1e-8 * scale)
    }

    /// `Tr(Y^i)` for `i = 1..=count`.
    pub fn integrals(&self, count: usize) -> Vec<f64> {
        let mut pow = self.y.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(pow.trace());
            pow = &pow * &self.y;
        }
        out
    }
}

/// Characteristic polynomial coefficients `c_0..c_n` (monic, `c_n = 1`) by
/// Faddeev–LeVerrier.
pub fn charpoly(a: &RMat) -> Vec<f64> {
    let n = a.nrows();
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    let mut m = RMat::zeros(n, n);
    let id = RMat::identity(n, n);
    for k in 1..=n {
        m = a * &m + &id * c[n - k + 1];
        c[n - k] = -(a * &m).trace() / k as f64;
    }
    c
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &ck in c.iter().rev() {
        d = d * z + v;
        v = v * z + ck;
    }
    (v, d)
}

/// Roots of a monic polynomial by Durand–Kerner, then Newton polishing.
/// Fails if the residual does not reach `1e−12` relative to the coefficient scale.
pub fn durand_kerner(c: &[f64]) -> Option<Vec<Complex64>> {
    let n = c.len() - 1;
    if n == 0 {
        return Some(Vec::new());
    }
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let (v, _) = horner(c, z[i]);
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                z[i] += Complex64::new(1e-9, 1e-9);
                delta = f64::INFINITY;
                continue;
            }
            let step = v / den;
            z[i] -= step;
            delta = delta.max(step.norm() / (1.0 + z[i].norm()));
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (v, d) = horner(c, *zi);
            if d.norm() > 0.0 {
                *zi -= v / d;
            }
        }
    }
    let ok = z.iter().all(|&zi| {
        let scale: f64 = c.iter().enumerate().map(|(k, ck)| ck.abs() * zi.norm().powi(k as i32)).sum();
        horner(c, zi).0.norm() <= 1e-12 * scale.max(1.0)
    });
    ok.then_some(z)
}

pub fn eigenvalues(a: &RMat) -> Option<Vec<Complex64>> {
    durand_kerner(&charpoly(a))
}

/// Unit null vector of `a − λ` (right singular vector of the smallest singular value).
pub fn eigenvector(a: &RMat, lambda: f64) -> nalgebra::DVector<f64> {
    let n = a.nrows();
    let shifted = a - RMat::identity(n, n) * lambda;
    let svd = shifted.svd(false, true);
    let vt = svd.v_t.expect("requested");
    let k = svd.singular_values.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).map(|(k, _)| k).unwrap_or(0);
    vt.row(k).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_body_pair() {
        let pt = PhasePoint::new(vec![0.0, 1.0], vec![0.0, 0.0]).unwrap();
        let m = kks_pair(&pt).unwrap();
        assert_eq!(m.y, RMat::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]));
        assert_eq!(m.integrals(2)[1], -2.0);
        assert_eq!(pt.hamiltonian(), -2.0);
        assert!(m.is_rank_one());
    }

    #[test]
    fn collisions_rejected() {
        assert!(matches!(PhasePoint::new(vec![1.0, 1.0], vec![0.0, 0.0]), Err(Error::CollidingCoordinates(0, 1))));
        assert!(PhasePoint::new(vec![0.0, 1e-6], vec![0.0, 0.0]).is_ok());
        let bad = PhasePoint { x: vec![2.0, 2.0 + 1e-9], p: vec![0.0; 2] };
        assert!(matches!(kks_pair(&bad), Err(Error::CollidingCoordinates(0, 1))));
    }

    #[test]
    fn rank_one_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in 2..=6 {
            for _ in 0..10 {
                let x = (0..n).map(|i| i as f64 + rng.gen_range(-0.3..0.3)).collect();
                let p = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                let m = kks_pair(&PhasePoint::new(x, p).unwrap()).unwrap();
                assert!(m.is_rank_one(), "{:?}", m.singular_values());
            }
        }
        // a generic pair is not rank one
        let m = MatrixPair { x: RMat::from_fn(3, 3, |i, j| (i * 3 + j) as f64), y: RMat::identity(3, 3) * 2.0 + RMat::from_fn(3, 3, |i, j| ((i + 2 * j) % 3) as f64) };
        assert!(!m.is_rank_one());
    }

    #[test]
    fn eigen_solver() {
        let a = RMat::from_row_slice(3, 3, &[2.0, 1.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 4.0]);
        let mut ev: Vec<f64> = eigenvalues(&a).unwrap().iter().map(|z| z.re).collect();
        ev.sort_by(f64::total_cmp);
        let mut want: Vec<f64> = a.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in ev.iter().zip(&want) {
            assert!((a - b).abs() < 1e-12);
        }
        let v = eigenvector(&a, want[0]);
        assert!((&a * &v - &v * want[0]).amax() < 1e-10);
        // rotation: purely imaginary pair
        let r = RMat::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        let ev = eigenvalues(&r).unwrap();
        assert!(ev.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12 && z.re.abs() < 1e-12));
    }
}
