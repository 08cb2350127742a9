//! Dense univariate polynomials over the integers.
//!
//! Only what the rational-function field needs: ring operations,
//! pseudo-remainder, primitive gcd and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient vector, index = power of the variable, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * s^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at zero.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `s^k`; the caller guarantees `k <= low_order()`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / c).collect() }
    }

    /// Gcd of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        let mut p = if c.is_one() { self.clone() } else { self.div_scalar(&c) };
        if p.leading().map(|l| l.is_negative()).unwrap_or(false) {
            p = p.neg();
        }
        p
    }

    /// Pseudo-remainder of `self` by `divisor` (multiplies by powers of the
    /// divisor's leading coefficient so that the division stays integral).
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            // r := lc * r - lr * s^(dr-dd) * divisor
            r = r.scale(&lc).sub(&divisor.scale(&lr).shift_up(dr - dd));
        }
        r
    }

    /// Primitive gcd with positive leading coefficient, times the gcd of the
    /// contents.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return IntPoly::constant(cont);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cont)
    }

    /// Exact quotient `self / divisor`; panics if the division is not exact
    /// over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut r = self.clone();
        let Some(dn) = r.degree() else {
            return IntPoly::zero();
        };
        if dn < dd {
            assert!(r.is_zero(), "inexact polynomial division");
            return IntPoly::zero();
        }
        let mut q = vec![BigInt::zero(); dn - dd + 1];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let (quot, rem) = r.leading().unwrap().div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            r = r.sub(&divisor.scale(&quot).shift_up(dr - dd));
            q[dr - dd] = quot;
        }
        assert!(r.is_zero(), "inexact polynomial division");
        IntPoly::from_coeffs(q)
    }

    /// Horner evaluation at an arbitrary value of a ring that integers map into.
    pub fn eval_with<T, F>(&self, x: &T, lift: F) -> T
    where
        T: Clone + std::ops::Add<Output = T> + std::ops::Mul<Output = T> + Zero,
        F: Fn(&BigInt) -> T,
    {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + lift(c);
        }
        acc
    }

    /// Evaluation modulo a prime below 2^63.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc: u64 = 0;
        for c in self.coeffs.iter().rev() {
            let cm = c.mod_floor(&pb);
            let cm: u64 = cm.try_into().expect("residue fits in u64");
            acc = ((acc as u128 * x as u128 + cm as u128) % p as u128) as u64;
        }
        acc
    }

    /// True when only even powers occur.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Substitute `s^2 -> q`, assuming `is_even()`.
    pub fn halve_powers(&self) -> Self {
        IntPoly::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Render with the given variable name, highest power first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_shared_factor() {
        // (s^2 - 1)(s + 2) and (s^2 - 1)(s - 3)
        let f = IntPoly::from_i64(&[-1, 0, 1]);
        let a = f.mul(&IntPoly::from_i64(&[2, 1]));
        let b = f.mul(&IntPoly::from_i64(&[-3, 1]));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = IntPoly::from_i64(&[4, 6]);
        let b = IntPoly::from_i64(&[2, 3]).mul(&IntPoly::from_i64(&[0, 2]));
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[4, 6]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = IntPoly::from_i64(&[3, -1, 4, 1]);
        let b = IntPoly::from_i64(&[-5, 9, 2]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn inexact_division_panics() {
        IntPoly::from_i64(&[1, 0, 1]).div_exact(&IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn render_highest_first() {
        assert_eq!(IntPoly::from_i64(&[-1, 0, 0, 0, 1]).render("s"), "s^4-1");
        assert_eq!(IntPoly::from_i64(&[0, -2, 1]).render("q"), "q^2-2*q");
    }
}
