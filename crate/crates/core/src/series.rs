//! Truncated power series in one variable over `BigInt`.
//!
//! A series carries an explicit truncation order and stores the dense
//! coefficient block `[t^0, ..., t^order]`. Operations never read past the
//! truncation and are exact below it. Reciprocals exist exactly when the
//! constant term is a unit (+1 or -1).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense truncated series; `coeffs.len() == order + 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from the low coefficients, padding with zeros.
    pub fn from_coeffs(order: usize, low: &[BigInt]) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in low.iter().take(order + 1).enumerate() {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^i`; indices beyond the truncation are a caller bug.
    pub fn coefficient(&self, i: usize) -> &BigInt {
        assert!(
            i <= self.order(),
            "coefficient index {i} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            out.coeffs[i] = &self.coeffs[i] + &other.coeffs[i];
        }
        out
    }

    /// Product truncated to the smaller order of the two operands.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse truncated at the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant {
                found: c0.to_string(),
            });
        }
        let mut out = Self::zero(self.order());
        out.coeffs[0] = c0.clone(); // 1/c0 == c0 for a unit
        for i in 1..=self.order() {
            let mut acc = BigInt::zero();
            for j in 1..=i {
                acc += &self.coeffs[j] * &out.coeffs[i - j];
            }
            out.coeffs[i] = -c0 * acc;
        }
        Ok(out)
    }
}

/// Exact binomial coefficient with integer (possibly negative) upper index.
pub fn binomial(n: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for s in 0..k as i64 {
        num *= BigInt::from(n - s);
        den *= BigInt::from(s + 1);
    }
    num / den
}

/// Expansion of `(1 - m t)^e` truncated at `order`; `e < 0` goes through the
/// exact series reciprocal.
fn binomial_factor(m: i64, e: i64, order: usize) -> Result<IntSeries> {
    let mag = e.unsigned_abs() as u32;
    let mut base = IntSeries::zero(order);
    for s in 0..=(order.min(mag as usize)) {
        base.coeffs[s] = binomial(mag as i64, s as u32) * BigInt::from(-m).pow(s as u32);
    }
    if e >= 0 {
        Ok(base)
    } else {
        base.reciprocal()
    }
}

/// Expansion of a product of binomial factors `prod (1 - m_u t)^{e_u}`.
pub fn binomial_power_series(factors: &[(i64, i64)], order: usize) -> Result<IntSeries> {
    let mut out = IntSeries::one(order);
    for &(m, e) in factors {
        out = out.mul(&binomial_factor(m, e, order)?);
    }
    Ok(out)
}
