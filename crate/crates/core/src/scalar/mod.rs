//! Exact coefficients: the rational function field Q(s) with q = s^2, and
//! its quadratic extension by t with t^2 = 1 + q^2.

mod ext;
mod poly;

pub use ext::ExtScalar;
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Arbitrary precision rational number (parameters, evaluation points).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation point must satisfy 0 < q0 < 1, got {0}")]
    PointOutOfRange(String),
    #[error("odd powers of s cannot be evaluated at non-square q0 = {0}")]
    NonSquarePoint(String),
    #[error("denominator vanishes at q0 = {0}")]
    DenominatorVanishes(String),
    #[error("element {0} is not invertible in the quadratic extension")]
    NotInvertible(String),
}

/// Common interface of the coefficient rings used by the rewriting engine.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn try_inv(&self) -> Option<Self>;
    fn render(&self) -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// An element `s^shift * num(s) / den(s)` of Q(s).
///
/// Canonical form: `num` and `den` have nonzero constant terms, are coprime,
/// the coefficients of `num` and `den` together have gcd 1, and the leading
/// coefficient of `den` is positive. Zero is `0/1` with shift 0. Structural
/// equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    shift: i32,
    num: IntPoly,
    den: IntPoly,
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { shift: 0, num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar { shift: 0, num: IntPoly::constant(n), den: IntPoly::one() }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Scalar::from_parts(0, IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    /// Build from integer polynomials in s; `den` must be nonzero.
    pub fn from_polys(num: IntPoly, den: IntPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::from_parts(0, num, den))
    }

    /// `s^k`
    pub fn s_pow(k: i32) -> Self {
        Scalar { shift: k, num: IntPoly::one(), den: IntPoly::one() }
    }

    /// `q^k = s^(2k)`
    pub fn q_pow(k: i32) -> Self {
        Scalar::s_pow(2 * k)
    }

    pub fn s() -> Self {
        Scalar::s_pow(1)
    }

    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    /// `lambda = (q - q^{-1})^{-1} = s^2 / (s^4 - 1)`.
    pub fn lambda() -> Self {
        Scalar::from_parts(2, IntPoly::one(), IntPoly::from_i64(&[-1, 0, 0, 0, 1]))
    }

    fn from_parts(shift: i32, num: IntPoly, den: IntPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar::zero();
        }
        let ln = num.low_order();
        let ld = den.low_order();
        let shift = shift + ln as i32 - ld as i32;
        let mut num = num.shift_down(ln);
        let mut den = den.shift_down(ld);
        if !den.is_one() && den.degree() != Some(0) {
            let g = num.gcd(&den);
            if g.degree().unwrap_or(0) > 0 {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        if !den.is_one() {
            let c = num.content().gcd(&den.content());
            if !c.is_one() {
                num = num.div_scalar(&c);
                den = den.div_scalar(&c);
            }
            if den.leading().unwrap().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        Scalar { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// Numerator as an integer polynomial in s (the shift folded in).
    pub fn numerator(&self) -> IntPoly {
        if self.shift > 0 {
            self.num.shift_up(self.shift as usize)
        } else {
            self.num.clone()
        }
    }

    /// Denominator as an integer polynomial in s (the shift folded in).
    pub fn denominator(&self) -> IntPoly {
        if self.shift < 0 {
            self.den.shift_up((-self.shift) as usize)
        } else {
            self.den.clone()
        }
    }

    /// A constant rational, if the element does not depend on s.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.shift != 0 || self.num.degree() != Some(0) || self.den.degree() != Some(0) {
            return None;
        }
        Some(Rational::new(self.num.coeffs()[0].clone(), self.den.coeffs()[0].clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - lo) as usize);
        let b = other.num.shift_up((other.shift - lo) as usize);
        if self.den == other.den {
            let num = a.add(&b);
            if self.den.is_one() {
                if num.is_zero() {
                    return Scalar::zero();
                }
                let l = num.low_order();
                return Scalar { shift: lo + l as i32, num: num.shift_down(l), den: IntPoly::one() };
            }
            return Scalar::from_parts(lo, num, self.den.clone());
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        Scalar::from_parts(lo, num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        Scalar { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            return Scalar { shift, num: self.num.mul(&other.num), den: IntPoly::one() };
        }
        // Cross-cancel so the product is already reduced up to content.
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Scalar { shift, num, den }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::from_parts(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.mul(&Scalar::from_int(n))
    }

    /// True when the element is a rational function of q alone.
    pub fn is_even(&self) -> bool {
        self.shift % 2 == 0 && self.num.is_even() && self.den.is_even()
    }

    /// Exact substitution s^2 = q0 for 0 < q0 < 1.
    pub fn eval_numeric(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if !(q0.is_positive() && *q0 < Rational::one()) {
            return Err(ScalarError::PointOutOfRange(q0.to_string()));
        }
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let lift = |c: &BigInt| Rational::from_integer(c.clone());
        let (num, den) = if self.is_even() {
            let n = self.num.halve_powers().eval_with(q0, lift);
            let d = self.den.halve_powers().eval_with(q0, lift);
            let half = self.shift / 2;
            let p = pow_rational(q0, half);
            (n * p, d)
        } else {
            let s0 = rational_sqrt(q0).ok_or_else(|| ScalarError::NonSquarePoint(q0.to_string()))?;
            let n = self.num.eval_with(&s0, lift);
            let d = self.den.eval_with(&s0, lift);
            (n * pow_rational(&s0, self.shift), d)
        };
        if den.is_zero() {
            return Err(ScalarError::DenominatorVanishes(q0.to_string()));
        }
        Ok(num / den)
    }

    /// Image under s -> s0 in Z/p; `None` if a denominator vanishes there.
    pub fn eval_mod(&self, s0: u64, p: u64) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        let n = self.num.eval_mod(s0, p);
        let d = self.den.eval_mod(s0, p);
        let d_inv = modinv(d, p)?;
        let sp = if self.shift >= 0 {
            modpow(s0, self.shift as u64, p)
        } else {
            modinv(modpow(s0, (-self.shift) as u64, p), p)?
        };
        Some(mulmod(mulmod(n, d_inv, p), sp, p))
    }

    /// Canonical text: a reduced fraction of integer polynomials, written in
    /// `q` when only even powers of s occur and in `s` otherwise.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (var, num, den, shift) = if self.is_even() {
            ("q", self.num.halve_powers(), self.den.halve_powers(), self.shift / 2)
        } else {
            ("s", self.num.clone(), self.den.clone(), self.shift)
        };
        let num = if shift > 0 { num.shift_up(shift as usize) } else { num };
        let den = if shift < 0 { den.shift_up((-shift) as usize) } else { den };
        let n = num.render(var);
        if den.is_one() {
            return n;
        }
        let n = if num.term_count() > 1 { format!("({n})") } else { n };
        let d = den.render(var);
        let d = if den.term_count() > 1 || d.contains('*') { format!("({d})") } else { d };
        format!("{n}/{d}")
    }

    /// True if rendering needs parentheses when used as a factor.
    pub fn is_compound(&self) -> bool {
        let r = self.render();
        r.contains('+') || r[1..].contains('-') || r.contains('/')
    }
}

fn cancel(num: &IntPoly, den: &IntPoly) -> (IntPoly, IntPoly) {
    if den.is_one() || den.degree() == Some(0) && num.is_zero() {
        return (num.clone(), den.clone());
    }
    if den.degree() == Some(0) {
        return (num.clone(), den.clone());
    }
    let g = num.gcd(den);
    if g.degree().unwrap_or(0) == 0 {
        (num.clone(), den.clone())
    } else {
        (num.div_exact(&g), den.div_exact(&g))
    }
}

fn pow_rational(x: &Rational, k: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn modinv(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(modpow(a, p - 2, p))
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Scalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn render(&self) -> String {
        Scalar::render(self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<&Rational> for Scalar {
    fn from(r: &Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// Convenience constructor for rationals from small integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_times_inverse_is_one() {
        let inv = Scalar::q().sub(&Scalar::q_pow(-1));
        assert!(inv.mul(&Scalar::lambda()).is_one());
    }

    #[test]
    fn s_squared_cancels() {
        assert!(Scalar::s_pow(2).mul(&Scalar::s_pow(-2)).is_one());
    }

    #[test]
    fn lambda_reduced_fraction() {
        let l = Scalar::lambda();
        assert_eq!(l.numerator(), IntPoly::from_i64(&[0, 0, 1]));
        assert_eq!(l.denominator(), IntPoly::from_i64(&[-1, 0, 0, 0, 1]));
        // (q - q^{-1})^{-1} built the long way reduces to the same thing.
        let long = Scalar::q().sub(&Scalar::q_pow(-1)).inv().unwrap();
        assert_eq!(long, l);
    }

    #[test]
    fn lambda_numeric_values() {
        assert_eq!(Scalar::lambda().eval_numeric(&rat(1, 2)).unwrap(), rat(-2, 3));
        assert_eq!(Scalar::lambda().eval_numeric(&rat(1, 3)).unwrap(), rat(-3, 8));
        for q0 in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            assert!(Scalar::lambda().eval_numeric(&q0).unwrap().is_negative());
        }
    }

    #[test]
    fn eval_q_plus_inverse() {
        let x = Scalar::q().add(&Scalar::q_pow(-1));
        assert_eq!(x.eval_numeric(&rat(1, 2)).unwrap(), rat(5, 2));
        assert_eq!(Scalar::one().eval_numeric(&rat(2, 7)).unwrap(), rat(1, 1));
    }

    #[test]
    fn eval_refuses_odd_powers_at_non_square() {
        assert!(matches!(Scalar::s().eval_numeric(&rat(1, 2)), Err(ScalarError::NonSquarePoint(_))));
        assert_eq!(Scalar::s().eval_numeric(&rat(1, 4)).unwrap(), rat(1, 2));
    }

    #[test]
    fn eval_reports_vanishing_denominator() {
        let x = Scalar::one().div(&Scalar::q().sub(&Scalar::from_rational(&rat(1, 2)))).unwrap();
        assert!(matches!(x.eval_numeric(&rat(1, 2)), Err(ScalarError::DenominatorVanishes(_))));
        assert!(matches!(x.eval_numeric(&rat(3, 2)), Err(ScalarError::PointOutOfRange(_))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn render_in_q_and_s() {
        assert_eq!(Scalar::lambda().render(), "q/(q^2-1)");
        assert_eq!(Scalar::s_pow(3).render(), "s^3");
        assert_eq!(Scalar::q_pow(-1).render(), "1/q");
        assert_eq!(Scalar::from_rational(&rat(-3, 4)).render(), "-3/4");
        let x = Scalar::s().add(&Scalar::one()).div(&Scalar::q().scale_int(2)).unwrap();
        assert_eq!(x.render(), "(s+1)/(2*s^2)");
    }

    #[test]
    fn mod_eval_is_a_homomorphism() {
        let p = 1_000_000_007;
        let a = Scalar::lambda();
        let b = Scalar::s().add(&Scalar::from_int(3)).inv().unwrap();
        let s0 = 12345;
        let ea = a.eval_mod(s0, p).unwrap();
        let eb = b.eval_mod(s0, p).unwrap();
        assert_eq!(a.mul(&b).eval_mod(s0, p).unwrap(), mulmod(ea, eb, p));
        assert_eq!(a.add(&b).eval_mod(s0, p).unwrap(), (ea + eb) % p);
    }
}
