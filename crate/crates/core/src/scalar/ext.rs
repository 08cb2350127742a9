use super::{Coeff, Scalar, ScalarError};
use std::fmt;

/// `base + ext * t` with `t^2 = 1 + q^2 = 1 + s^4`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    pub base: Scalar,
    pub ext: Scalar,
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtScalar({})", self.render())
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl ExtScalar {
    pub fn new(base: Scalar, ext: Scalar) -> Self {
        ExtScalar { base, ext }
    }

    pub fn embed(s: &Scalar) -> Self {
        ExtScalar { base: s.clone(), ext: Scalar::zero() }
    }

    /// The adjoined square root `t = (1 + q^2)^{1/2}`.
    pub fn t() -> Self {
        ExtScalar { base: Scalar::zero(), ext: Scalar::one() }
    }

    /// `t^2` as an element of the base field.
    pub fn t_squared() -> Scalar {
        Scalar::one().add(&Scalar::q_pow(2))
    }

    pub fn zero() -> Self {
        ExtScalar::default()
    }

    pub fn one() -> Self {
        ExtScalar::embed(&Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.ext.is_zero()
    }

    /// The base-field value, if the `t` component vanishes.
    pub fn to_base(&self) -> Option<Scalar> {
        self.ext.is_zero().then(|| self.base.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        ExtScalar { base: self.base.add(&other.base), ext: self.ext.add(&other.ext) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ExtScalar { base: self.base.sub(&other.base), ext: self.ext.sub(&other.ext) }
    }

    pub fn neg(&self) -> Self {
        ExtScalar { base: self.base.neg(), ext: self.ext.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.ext.is_zero() && other.ext.is_zero() {
            return ExtScalar::embed(&self.base.mul(&other.base));
        }
        let tt = ExtScalar::t_squared();
        let base = self.base.mul(&other.base).add(&self.ext.mul(&other.ext).mul(&tt));
        let ext = self.base.mul(&other.ext).add(&self.ext.mul(&other.base));
        ExtScalar { base, ext }
    }

    /// `base^2 - ext^2 (1 + s^4)`
    pub fn norm(&self) -> Scalar {
        self.base.mul(&self.base).sub(&self.ext.mul(&self.ext).mul(&ExtScalar::t_squared()))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::NotInvertible(self.render()));
        }
        let ni = n.inv()?;
        Ok(ExtScalar { base: self.base.mul(&ni), ext: self.ext.neg().mul(&ni) })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn render(&self) -> String {
        match (self.base.is_zero(), self.ext.is_zero()) {
            (_, true) => self.base.render(),
            (true, false) => format!("({})*t", self.ext.render()),
            (false, false) => format!("{} + ({})*t", self.base.render(), self.ext.render()),
        }
    }
}

impl Coeff for ExtScalar {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn one() -> Self {
        ExtScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        ExtScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ExtScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ExtScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        ExtScalar::neg(self)
    }
    fn from_scalar(s: &Scalar) -> Self {
        ExtScalar::embed(s)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn render(&self) -> String {
        ExtScalar::render(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_squared_reduces() {
        let t = ExtScalar::t();
        assert_eq!(t.mul(&t), ExtScalar::embed(&Scalar::one().add(&Scalar::s_pow(4))));
    }

    #[test]
    fn difference_of_squares() {
        let one = ExtScalar::one();
        let t = ExtScalar::t();
        let prod = one.add(&t).mul(&one.sub(&t));
        assert_eq!(prod, ExtScalar::embed(&Scalar::s_pow(4).neg()));
    }

    #[test]
    fn embedding_is_identity_on_base() {
        let l = Scalar::lambda();
        let e = ExtScalar::embed(&l).add(&ExtScalar::new(Scalar::zero(), Scalar::zero()));
        assert_eq!(e.to_base(), Some(l));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = ExtScalar::new(Scalar::q(), Scalar::from_int(3));
        assert_eq!(x.mul(&x.inv().unwrap()), ExtScalar::one());
        assert!(ExtScalar::zero().inv().is_err());
    }
}
