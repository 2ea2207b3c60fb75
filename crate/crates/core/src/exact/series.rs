//! Truncated Laurent-type series in `1/z` with rational leading exponent,
//! and residues at infinity of products `Π (z − w_j)^{μ_j} · e(z)`.
//!
//! Convention: `Res_∞ f dz` is the coefficient of `z^{-1}` in the expansion of
//! `f` at infinity, with no sign change.

use num_traits::{One, Signed, ToPrimitive};

use super::field::{Field, Q};
use super::poly::Poly;
use crate::error::{Error, Result};

/// `Σ_{j=0}^{J} c_j z^{lead − j}`; coefficients may involve symbolic variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesAtInfinity<F> {
    pub leading_exponent: Q,
    pub coefficients: Vec<Poly<F>>,
}

/// Generalised binomial coefficient `μ(μ−1)…(μ−k+1)/k!`.
pub fn binomial(mu: &Q, k: usize) -> Q {
    let mut acc = Q::one();
    for i in 0..k {
        acc = acc * (mu - Q::from_integer(i.into())) / Q::from_integer((i + 1).into());
    }
    acc
}

impl<F: Field> SeriesAtInfinity<F> {
    pub fn truncation_order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    fn nvars(&self) -> usize {
        self.coefficients[0].nvars()
    }

    /// `(z − w)^μ` expanded at infinity through `z^{μ − order}`.
    pub fn binomial_power(w: &Poly<F>, mu: &Q, order: usize) -> Self {
        let minus_w = -w;
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut pw = Poly::one(w.nvars());
        for k in 0..=order {
            coefficients.push(pw.scale(&F::from_q(&binomial(mu, k))));
            pw = &pw * &minus_w;
        }
        Self { leading_exponent: mu.clone(), coefficients }
    }

    /// A polynomial in `z` given by ascending coefficients, exact to any order.
    pub fn from_z_poly(coeffs: &[Poly<F>], order: usize) -> Self {
        let nvars = coeffs.first().map(Poly::nvars).expect("nonempty coefficient list");
        let deg = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        let coefficients = (0..=order)
            .map(|j| if j <= deg { coeffs[deg - j].clone() } else { Poly::zero(nvars) })
            .collect();
        Self { leading_exponent: Q::from_integer(deg.into()), coefficients }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.truncation_order().min(o.truncation_order());
        let mut coefficients = vec![Poly::zero(self.nvars()); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coefficients.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coefficients[i + j].add_assign_ref(&(a * b));
                }
            }
        }
        Self { leading_exponent: &self.leading_exponent + &o.leading_exponent, coefficients }
    }

    /// Reciprocal of a series whose leading coefficient is a nonzero constant.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coefficients[0];
        if !c0.is_constant() || c0.is_zero() {
            return Err(Error::InvalidParameters("series leading coefficient is not a unit".into()));
        }
        let inv0 = c0.constant_term().inv();
        let order = self.truncation_order();
        let mut out: Vec<Poly<F>> = Vec::with_capacity(order + 1);
        out.push(Poly::constant(self.nvars(), inv0.clone()));
        for j in 1..=order {
            let mut acc = Poly::zero(self.nvars());
            for i in 1..=j {
                acc.add_assign_ref(&(&self.coefficients[i] * &out[j - i]));
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(Self { leading_exponent: -self.leading_exponent.clone(), coefficients: out })
    }

    /// d/dz, term by term.
    pub fn derivative(&self) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let e = &self.leading_exponent - Q::from_integer(j.into());
                c.scale(&F::from_q(&e))
            })
            .collect();
        Self { leading_exponent: &self.leading_exponent - Q::one(), coefficients }
    }

    /// Coefficient of `z^exponent`; errors if it lies beyond the truncation.
    pub fn coefficient_of(&self, exponent: &Q) -> Result<Poly<F>> {
        let j = &self.leading_exponent - exponent;
        if !j.is_integer() || j.is_negative() {
            return Ok(Poly::zero(self.nvars()));
        }
        let j = j.to_integer().to_usize().expect("small index");
        self.coefficients
            .get(j)
            .cloned()
            .ok_or_else(|| Error::InvalidParameters(format!("series truncated before order {j}")))
    }

    /// Coefficient of `z^{-1}`.
    pub fn residue(&self) -> Result<Poly<F>> {
        self.coefficient_of(&-Q::one())
    }
}

/// `Res_∞ Π_j (z − w_j)^{μ_j} · e(z) dz`, where `extra` lists the coefficients
/// of `e` in ascending powers of `z`.
pub fn residue_at_infinity<F: Field>(factors: &[(Poly<F>, Q)], extra: &[Poly<F>]) -> Result<Poly<F>> {
    let nvars = factors
        .first()
        .map(|(w, _)| w.nvars())
        .or_else(|| extra.first().map(Poly::nvars))
        .ok_or_else(|| Error::InvalidParameters("empty residue integrand".into()))?;
    let deg = extra.iter().rposition(|c| !c.is_zero());
    let Some(deg) = deg else {
        return Ok(Poly::zero(nvars));
    };
    let mut total = Q::from_integer(deg.into());
    for (_, mu) in factors {
        total += mu;
    }
    if !total.is_integer() {
        return Err(Error::NonIntegerTotalDegree(total.to_string()));
    }
    // z^{-1} sits at index total + 1 below the leading exponent
    let needed = &total + Q::one();
    if needed.is_negative() {
        return Ok(Poly::zero(nvars));
    }
    let needed = needed.to_integer().to_usize().expect("small order");
    let order = needed + 2;
    let mut acc = SeriesAtInfinity::from_z_poly(extra, order);
    for (w, mu) in factors {
        acc = acc.mul(&SeriesAtInfinity::binomial_power(w, mu, order));
    }
    acc.residue()
}

/// Lowest-terms check helper used by callers validating exponent data.
pub fn is_nonnegative_integer(v: &Q) -> bool {
    v.is_integer() && !v.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{q, qi};

    fn xs(n: usize) -> Vec<Poly<Q>> {
        (0..n).map(|i| Poly::var(n, i)).collect()
    }

    #[test]
    fn two_point_half_residue_oracle() {
        // Independent expansion: (1 − x2/z)^{1/2}(1 − x1/z)^{-1/2} has z^{-1}
        // coefficient −x2/2 + x1/2.
        let x = xs(2);
        let r = residue_at_infinity(
            &[(x[0].clone(), q(-1, 2)), (x[1].clone(), q(1, 2))],
            &[Poly::one(2)],
        )
        .unwrap();
        assert_eq!(r, (&x[0] - &x[1]).scale(&q(1, 2)));
    }

    #[test]
    fn exact_differential_has_zero_residue() {
        let x = xs(2);
        let s = SeriesAtInfinity::binomial_power(&x[0], &q(3, 2), 8)
            .mul(&SeriesAtInfinity::binomial_power(&x[1], &q(1, 2), 8));
        assert!(s.derivative().residue().unwrap().is_zero());
    }

    #[test]
    fn sum_of_two_residues_vanishes() {
        let x = xs(2);
        let f1 = residue_at_infinity(
            &[(x[0].clone(), q(-1, 2)), (x[1].clone(), q(1, 2))],
            &[Poly::one(2)],
        )
        .unwrap();
        let f2 = residue_at_infinity(
            &[(x[0].clone(), q(1, 2)), (x[1].clone(), q(-1, 2))],
            &[Poly::one(2)],
        )
        .unwrap();
        assert!((&f1 + &f2).is_zero());
    }

    #[test]
    fn rejects_non_integer_degree() {
        let x = xs(1);
        let e = residue_at_infinity(&[(x[0].clone(), q(1, 3))], &[Poly::one(1)]);
        assert!(matches!(e, Err(Error::NonIntegerTotalDegree(_))));
    }

    #[test]
    fn reciprocal_of_unit_series() {
        let x = xs(1);
        let s = SeriesAtInfinity::binomial_power(&x[0], &qi(1), 6);
        let r = s.reciprocal().unwrap();
        let one = s.mul(&r);
        assert_eq!(one.leading_exponent, qi(0));
        assert_eq!(one.coefficients[0], Poly::one(1));
        assert!(one.coefficients[1..].iter().all(Poly::is_zero));
        // 1/(z − x) = Σ x^k z^{-1-k}
        assert_eq!(r.coefficients[3], x[0].pow(3));
    }

    #[test]
    fn plain_polynomial_residue() {
        // Res_∞ (z − a)^{-1} dz = 1 under this convention
        let x = xs(1);
        let r = residue_at_infinity(&[(x[0].clone(), qi(-1))], &[Poly::one(1)]).unwrap();
        assert_eq!(r, Poly::one(1));
    }
}
