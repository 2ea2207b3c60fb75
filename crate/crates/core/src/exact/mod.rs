//! Exact arithmetic: rationals, ℚ(√5), multivariate polynomials, rational
//! functions with root-monomial denominators, and series at infinity.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod series;

pub use field::{parse_q, q, qi, Field, QSqrt5, Q};
pub use poly::{Exponent, LinearSubstitution, Poly, PolyJson};
pub use ratfunc::{RationalFunction, RootImage, Roots};
pub use series::{residue_at_infinity, SeriesAtInfinity};

/// All exponent vectors of total degree `d` in `n` variables, in lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Pad an exponent on the first `n` variables to a ring with `nvars` variables.
pub fn pad_exponent(e: &[u32], nvars: usize) -> Exponent {
    let mut v = e.to_vec();
    v.resize(nvars, 0);
    v
}

/// Binomial coefficient `C(n, k)` as `u64`.
pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        for n in 1..5 {
            for d in 0..6u32 {
                assert_eq!(monomials_of_degree(n, d).len() as u64, choose(d as u64 + n as u64 - 1, n as u64 - 1));
            }
        }
    }
}
