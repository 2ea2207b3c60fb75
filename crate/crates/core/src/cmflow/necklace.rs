//! Poisson brackets of trace functions on pairs of matrices.
//!
//! The canonical structure is `{Y_ij, X_kl} = δ_il δ_jk`, so that on the KKS
//! slice `{p_i, x_j} = δ_ij`. Gradients come from the complex-step derivative,
//! which is exact to rounding for these polynomial functions.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{kks_pair, CMat, MatrixPair, PhasePoint, RMat};
use crate::error::{Error, Result};
use crate::report::CheckReport;

const STEP: f64 = 1e-30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'X' | 'x' => Ok(Letter::X),
                'Y' | 'y' => Ok(Letter::Y),
                _ => Err(Error::InvalidParameters(format!("word `{s}` may only contain X and Y"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::InvalidParameters("empty word".into()));
        }
        Ok(Self(letters))
    }

    /// `X^m Y^e` with `e ∈ {0, 1}`.
    pub fn x_power(m: usize, with_y: bool) -> Self {
        let mut w = vec![Letter::X; m];
        if with_y {
            w.push(Letter::Y);
        }
        Self(w)
    }

    pub fn repeat(&self, k: usize) -> Self {
        Self(self.0.repeat(k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every word of length `1..=max_len`.
    pub fn all(max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            for bits in 0..1usize << len {
                out.push(Word((0..len).map(|i| if bits >> i & 1 == 1 { Letter::Y } else { Letter::X }).collect()));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Letter::X { 'X' } else { 'Y' })?;
        }
        Ok(())
    }
}

fn complexify(m: &RMat) -> CMat {
    m.map(|v| Complex64::new(v, 0.0))
}

fn word_product(letters: &[Letter], x: &CMat, y: &CMat) -> CMat {
    let n = x.nrows();
    letters.iter().fold(CMat::identity(n, n), |acc, l| acc * if *l == Letter::X { x } else { y })
}

pub fn trace_word(w: &Word, m: &MatrixPair) -> f64 {
    word_product(&w.0, &complexify(&m.x), &complexify(&m.y)).trace().re
}

/// Gradients `(∂f/∂X_ij, ∂f/∂Y_ij)` by complex steps.
fn gradient<F: Fn(&CMat, &CMat) -> Complex64>(f: &F, m: &MatrixPair) -> (RMat, RMat) {
    let n = m.n();
    let (x, y) = (complexify(&m.x), complexify(&m.y));
    let mut gx = RMat::zeros(n, n);
    let mut gy = RMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut xp = x.clone();
            xp[(i, j)] += Complex64::new(0.0, STEP);
            gx[(i, j)] = f(&xp, &y).im / STEP;
            let mut yp = y.clone();
            yp[(i, j)] += Complex64::new(0.0, STEP);
            gy[(i, j)] = f(&x, &yp).im / STEP;
        }
    }
    (gx, gy)
}

/// `{f, g} = Σ_ij ∂f/∂Y_ij ∂g/∂X_ji − ∂f/∂X_ji ∂g/∂Y_ij`.
pub fn poisson<F, G>(f: &F, g: &G, m: &MatrixPair) -> f64
where
    F: Fn(&CMat, &CMat) -> Complex64,
    G: Fn(&CMat, &CMat) -> Complex64,
{
    let (fx, fy) = gradient(f, m);
    let (gx, gy) = gradient(g, m);
    (fy.component_mul(&gx.transpose()) - fx.transpose().component_mul(&gy)).sum()
}

fn trace_fn(w: &Word) -> impl Fn(&CMat, &CMat) -> Complex64 + '_ {
    move |x, y| word_product(&w.0, x, y).trace()
}

/// Sum over splice positions: for `a_i = Y`, `b_j = X` add
/// `Tr(a_{i+1}…a_r a_1…a_{i−1} b_{j+1}…b_s b_1…b_{j−1})`, and subtract the same
/// sum with the roles of `X` and `Y` exchanged.
pub fn splice_sum(a: &Word, b: &Word, m: &MatrixPair) -> f64 {
    let (x, y) = (complexify(&m.x), complexify(&m.y));
    let rotate = |w: &Word, i: usize| -> Vec<Letter> { w.0[i + 1..].iter().chain(&w.0[..i]).copied().collect() };
    let mut total = 0.0;
    for (i, ai) in a.0.iter().enumerate() {
        for (j, bj) in b.0.iter().enumerate() {
            let sign = match (ai, bj) {
                (Letter::Y, Letter::X) => 1.0,
                (Letter::X, Letter::Y) => -1.0,
                _ => continue,
            };
            let mut letters = rotate(a, i);
            letters.extend(rotate(b, j));
            total += sign * word_product(&letters, &x, &y).trace().re;
        }
    }
    total
}

/// `(lhs, rhs)`: the canonical bracket of `Tr(a)`, `Tr(b)` and the splice sum.
pub fn necklace_bracket(a: &Word, b: &Word, m: &MatrixPair) -> (f64, f64) {
    (poisson(&trace_fn(a), &trace_fn(b), m), splice_sum(a, b, m))
}

pub fn random_pair(rng: &mut impl Rng, n: usize) -> MatrixPair {
    MatrixPair { x: RMat::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0)), y: RMat::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0)) }
}

/// Canonical brackets against the splice formula at `trials` seeded pairs, all
/// word pairs up to `max_len`; also antisymmetry and a Leibniz spot check.
pub fn necklace_report(seed: u64, trials: usize, n: usize, max_len: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = Word::all(max_len);
    let mut rep = CheckReport::new(format!("necklace n={n} trials={trials} maxlen={max_len}"));
    for t in 0..trials {
        let m = random_pair(&mut rng, n);
        let mut lhs = std::collections::BTreeMap::new();
        for a in &words {
            for b in &words {
                let (l, r) = necklace_bracket(a, b, &m);
                rep.record((l - r).abs() <= 1e-9 * (1.0 + l.abs()), || format!("trial {t}: {{{a}, {b}}} lhs {l} rhs {r}"));
                lhs.insert((a.clone(), b.clone()), l);
            }
        }
        for ((a, b), l) in &lhs {
            let back = lhs[&(b.clone(), a.clone())];
            rep.record((l + back).abs() <= 1e-9 * (1.0 + l.abs()), || format!("trial {t}: antisymmetry {a} {b}"));
        }
        // {Tr a, Tr b · Tr c} = {Tr a, Tr b} Tr c + Tr b {Tr a, Tr c}
        let (a, b, c) = (&words[t % words.len()], &words[(3 * t + 1) % words.len()], &words[(7 * t + 2) % words.len()]);
        let (fb, fc) = (trace_fn(b), trace_fn(c));
        let prod = |x: &CMat, y: &CMat| fb(x, y) * fc(x, y);
        let direct = poisson(&trace_fn(a), &prod, &m);
        let split = lhs[&(a.clone(), b.clone())] * trace_word(c, &m) + trace_word(b, &m) * lhs[&(a.clone(), c.clone())];
        rep.record((direct - split).abs() <= 1e-9 * (1.0 + direct.abs()), || format!("trial {t}: Leibniz {a} {b} {c}"));
    }
    rep
}

/// Canonical bracket on `(x, p)`: `Σ_i ∂f/∂p_i ∂g/∂x_i − ∂f/∂x_i ∂g/∂p_i`.
pub fn canonical_bracket<F, G>(f: &F, g: &G, pt: &PhasePoint) -> f64
where
    F: Fn(&[Complex64], &[Complex64]) -> Complex64,
    G: Fn(&[Complex64], &[Complex64]) -> Complex64,
{
    let n = pt.n();
    let x: Vec<Complex64> = pt.x.iter().map(|&v| v.into()).collect();
    let p: Vec<Complex64> = pt.p.iter().map(|&v| v.into()).collect();
    let grad = |h: &dyn Fn(&[Complex64], &[Complex64]) -> Complex64| -> (Vec<f64>, Vec<f64>) {
        let mut gx = vec![0.0; n];
        let mut gp = vec![0.0; n];
        for i in 0..n {
            let mut xs = x.clone();
            xs[i] += Complex64::new(0.0, STEP);
            gx[i] = h(&xs, &p).im / STEP;
            let mut ps = p.clone();
            ps[i] += Complex64::new(0.0, STEP);
            gp[i] = h(&x, &ps).im / STEP;
        }
        (gx, gp)
    };
    let (fx, fp) = grad(f);
    let (gx, gp) = grad(g);
    (0..n).map(|i| fp[i] * gx[i] - fx[i] * gp[i]).sum()
}

/// `a_k = Σ x_i^k`, `b_k = Σ x_i^k p_i` on the canonical side.
fn pulled_back(k: usize, with_p: bool) -> impl Fn(&[Complex64], &[Complex64]) -> Complex64 {
    move |x, p| x.iter().zip(p).map(|(xi, pi)| xi.powu(k as u32) * if with_p { *pi } else { Complex64::new(1.0, 0.0) }).sum()
}

/// The three bracket families at one point, for `1 ≤ m, k ≤ n`: canonical side,
/// necklace side at the KKS image, and the closed forms
/// `{a_m,a_k} = 0`, `{b_m,a_k} = k a_{m+k−1}`, `{b_m,b_k} = (k−m) b_{m+k−1}`.
pub fn symplectomorphism_check(pt: &PhasePoint, max: usize) -> Result<CheckReport> {
    let m = kks_pair(pt)?;
    let mut rep = CheckReport::new(format!("symplectomorphism n={}", pt.n()));
    let mut check = |label: String, canon: f64, (l, r): (f64, f64), closed: f64| {
        let tol = 1e-9 * (1.0 + closed.abs());
        rep.record((canon - closed).abs() <= tol && (l - closed).abs() <= tol && (r - closed).abs() <= tol, || {
            format!("{label}: canonical {canon}, matrix {l}/{r}, closed form {closed}")
        });
    };
    for mm in 1..=max {
        for k in 1..=max {
            let (am, ak, bm, bk) = (Word::x_power(mm, false), Word::x_power(k, false), Word::x_power(mm, true), Word::x_power(k, true));
            let a_next = trace_word(&Word::x_power(mm + k - 1, false), &m);
            let b_next = trace_word(&Word::x_power(mm + k - 1, true), &m);
            check(format!("{{a{mm},a{k}}}"), canonical_bracket(&pulled_back(mm, false), &pulled_back(k, false), pt), necklace_bracket(&am, &ak, &m), 0.0);
            check(format!("{{b{mm},a{k}}}"), canonical_bracket(&pulled_back(mm, true), &pulled_back(k, false), pt), necklace_bracket(&bm, &ak, &m), k as f64 * a_next);
            check(
                format!("{{b{mm},b{k}}}"),
                canonical_bracket(&pulled_back(mm, true), &pulled_back(k, true), pt),
                necklace_bracket(&bm, &bk, &m),
                (k as f64 - mm as f64) * b_next,
            );
        }
    }
    // the matrix-side functions restrict to the canonical ones
    for k in 1..=max {
        let x: Vec<Complex64> = pt.x.iter().map(|&v| v.into()).collect();
        let p: Vec<Complex64> = pt.p.iter().map(|&v| v.into()).collect();
        let (ta, tb) = (trace_word(&Word::x_power(k, false), &m), trace_word(&Word::x_power(k, true), &m));
        let (ca, cb) = (pulled_back(k, false)(&x, &p).re, pulled_back(k, true)(&x, &p).re);
        rep.record((ta - ca).abs() <= 1e-9 * (1.0 + ca.abs()) && (tb - cb).abs() <= 1e-9 * (1.0 + cb.abs()), || format!("pullback of a{k}, b{k}"));
    }
    Ok(rep)
}

/// Seeded sweep of `symplectomorphism_check` over separated points.
pub fn symplectomorphism_report(seed: u64, points: usize, n: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = CheckReport::new(format!("symplectomorphism n={n} points={points}"));
    for _ in 0..points {
        let x = (0..n).map(|i| i as f64 + rng.gen_range(-0.3..0.3)).collect();
        let p = (0..n).map(|_| rng.gen_range(-1.5..1.5)).collect();
        match PhasePoint::new(x, p).and_then(|pt| symplectomorphism_check(&pt, n)) {
            Ok(r) => rep.merge(r),
            Err(e) => rep.fail(e.to_string()),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn single_letters() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = random_pair(&mut rng, 3);
        let (l, r) = necklace_bracket(&w("X"), &w("Y"), &m);
        assert!((l + 3.0).abs() < 1e-12 && (r + 3.0).abs() < 1e-12, "{l} {r}");
        let (l, r) = necklace_bracket(&w("XX"), &w("XXX"), &m);
        assert!(l.abs() < 1e-12 && r == 0.0);
    }

    #[test]
    fn b_a_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let m = random_pair(&mut rng, 3);
        for mm in 1..=3 {
            for k in 1..=3 {
                let (l, r) = necklace_bracket(&Word::x_power(mm, true), &Word::x_power(k, false), &m);
                let want = k as f64 * trace_word(&Word::x_power(mm + k - 1, false), &m);
                assert!((l - want).abs() < 1e-9 && (r - want).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn transposed_pairing_disagrees() {
        // with {Y_ij, X_kl} = δ_ik δ_jl the bracket of Tr(XY) and Tr(XXY) would
        // be built from transposed gradients and miss the splice sum
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_pair(&mut rng, 3);
        let (a, b) = (w("XYY"), w("XXY"));
        let (fx, fy) = gradient(&trace_fn(&a), &m);
        let (gx, gy) = gradient(&trace_fn(&b), &m);
        let transposed = (fy.component_mul(&gx) - fx.component_mul(&gy)).sum();
        assert!((transposed - splice_sum(&a, &b, &m)).abs() > 1e-3);
    }

    #[test]
    fn report_small() {
        let r = necklace_report(15, 5, 3, 3);
        assert!(r.passed(), "{r:?}");
        assert!(Word::parse("XZ").is_err() && Word::parse("").is_err());
    }

    #[test]
    fn symplecto_examples() {
        let pt = PhasePoint::new(vec![0.2, 1.1, 2.5], vec![0.3, -0.7, 1.2]).unwrap();
        let r = symplectomorphism_check(&pt, 3).unwrap();
        assert!(r.passed(), "{r:?}");
        let b2 = pt.x.iter().zip(&pt.p).map(|(x, p)| x * x * p).sum::<f64>();
        let v = canonical_bracket(&pulled_back(2, true), &pulled_back(1, true), &pt);
        assert!((v + b2).abs() < 1e-12);
        assert!(symplectomorphism_report(16, 5, 3).passed());
    }
}
