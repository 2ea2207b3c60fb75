//! Coefficient fields: ℚ and ℚ(√5).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parse `"a"`, `"-a/b"` or a decimal literal such as `"0.25"` into an exact rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let n: BigInt = digits.parse().ok()?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = Q::new(n, d);
        return Some(if neg { -v } else { v });
    }
    s.parse::<BigInt>().ok().map(Q::from_integer)
}

/// Exact scalar field used for group matrices and polynomial coefficients.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_q(v: &Q) -> Self;
    /// The rational value, if the element is rational.
    fn to_q(&self) -> Option<Q>;
    fn to_f64(&self) -> f64;
    /// √5, when the field contains it.
    fn sqrt5() -> Option<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from_q(&qi(v))
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Q {
    fn from_q(v: &Q) -> Self {
        v.clone()
    }
    fn to_q(&self) -> Option<Q> {
        Some(self.clone())
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn sqrt5() -> Option<Self> {
        None
    }
}

/// Element `a + b√5` of the real quadratic field ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt5 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt5 {
    pub fn new(a: Q, b: Q) -> Self {
        Self { a, b }
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm a² − 5b².
    pub fn norm(&self) -> Q {
        &self.a * &self.a - qi(5) * &self.b * &self.b
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt5", self.b)
        } else if self.b.is_negative() {
            write!(f, "{}-{}*sqrt5", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*sqrt5", self.a, self.b)
        }
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        Self::new(Q::zero(), Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        Self::new(Q::one(), Q::zero())
    }
}

impl Neg for QSqrt5 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<'a> Add<&'a QSqrt5> for QSqrt5 {
    type Output = Self;
    fn add(mut self, o: &'a QSqrt5) -> Self {
        self += o;
        self
    }
}
impl Add for QSqrt5 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}
impl<'a> Sub<&'a QSqrt5> for QSqrt5 {
    type Output = Self;
    fn sub(mut self, o: &'a QSqrt5) -> Self {
        self -= o;
        self
    }
}
impl Sub for QSqrt5 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self - &o
    }
}
impl<'a> Mul<&'a QSqrt5> for QSqrt5 {
    type Output = Self;
    fn mul(self, o: &'a QSqrt5) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return Self::new(self.a * &o.a, Q::zero());
        }
        let a = &self.a * &o.a + qi(5) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        Self::new(a, b)
    }
}
impl Mul for QSqrt5 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}
impl Div for QSqrt5 {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt5)");
        let c = o.conj();
        let p = self * &c;
        Self::new(p.a / &n, p.b / &n)
    }
}
impl<'a> AddAssign<&'a QSqrt5> for QSqrt5 {
    fn add_assign(&mut self, o: &'a QSqrt5) {
        self.a += &o.a;
        self.b += &o.b;
    }
}
impl AddAssign for QSqrt5 {
    fn add_assign(&mut self, o: Self) {
        *self += &o;
    }
}
impl<'a> SubAssign<&'a QSqrt5> for QSqrt5 {
    fn sub_assign(&mut self, o: &'a QSqrt5) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}
impl SubAssign for QSqrt5 {
    fn sub_assign(&mut self, o: Self) {
        *self -= &o;
    }
}
impl<'a> MulAssign<&'a QSqrt5> for QSqrt5 {
    fn mul_assign(&mut self, o: &'a QSqrt5) {
        *self = self.clone() * o;
    }
}
impl MulAssign for QSqrt5 {
    fn mul_assign(&mut self, o: Self) {
        *self = self.clone() * &o;
    }
}

impl Field for QSqrt5 {
    fn from_q(v: &Q) -> Self {
        Self::new(v.clone(), Q::zero())
    }
    fn to_q(&self) -> Option<Q> {
        self.b.is_zero().then(|| self.a.clone())
    }
    fn to_f64(&self) -> f64 {
        Field::to_f64(&self.a) + Field::to_f64(&self.b) * 5f64.sqrt()
    }
    fn sqrt5() -> Option<Self> {
        Some(Self::new(Q::zero(), Q::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt5_squares_to_five() {
        let r = QSqrt5::sqrt5().unwrap();
        assert_eq!(r.clone() * &r, QSqrt5::from_i64(5));
    }

    #[test]
    fn golden_ratio_inverse() {
        // φ = (1+√5)/2, φ⁻¹ = φ − 1
        let phi = QSqrt5::new(q(1, 2), q(1, 2));
        assert_eq!(phi.inv(), phi.clone() - QSqrt5::one());
        assert_eq!(phi.to_string(), "1/2+1/2*sqrt5");
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_q("-3/6"), Some(q(-1, 2)));
        assert_eq!(parse_q("0.25"), Some(q(1, 4)));
        assert_eq!(parse_q("-1.5"), Some(q(-3, 2)));
        assert_eq!(parse_q("7"), Some(qi(7)));
        assert_eq!(parse_q("1/0"), None);
    }
}
