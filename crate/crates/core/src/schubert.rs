//! Intersection numbers on the space of lines in projective n-space,
//! optionally crossed with a smaller projective factor.
//!
//! Classes live in `Z[alpha, beta, ht]` where `alpha`, `beta` are the
//! virtual Chern roots of the rank-2 tautological subbundle and `ht` is the
//! hyperplane class of the extra factor, subject to `ht^k = 0`. Integration
//! over the line space reads the `alpha^n beta^n` coefficient of
//! `-1/2 (alpha - beta)^2 P`; the mixed integral first extracts the
//! `ht^{k-1}` slice.

use num_bigint::BigInt;
use num_traits::One;

use crate::bundle::BundleSpec;
use crate::error::{Error, Result};
use crate::poly::{grassmann_vars, IntPoly};

pub const ALPHA: usize = 0;
pub const BETA: usize = 1;
pub const HT: usize = 2;

/// A symmetric class on the line space of projective n-space, times a
/// `(k-1)`-dimensional projective factor. `k = 1` means no extra factor.
///
/// The polynomial is kept as written; `truncate` applies `ht^k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricClass {
    poly: IntPoly,
    n: u32,
    k: u32,
}

impl SymmetricClass {
    pub fn new(poly: IntPoly, n: u32, k: u32) -> Result<Self> {
        if *poly.vars() != grassmann_vars() {
            return Err(Error::GeneratorMismatch {
                left: poly.vars().names().join(", "),
                right: grassmann_vars().names().join(", "),
            });
        }
        assert!(n >= 1 && k >= 1, "ambient parameters start at 1");
        Ok(SymmetricClass { poly, n, k })
    }

    pub fn one(n: u32, k: u32) -> Self {
        SymmetricClass {
            poly: IntPoly::one(&grassmann_vars()),
            n,
            k,
        }
    }

    pub fn zero(n: u32, k: u32) -> Self {
        SymmetricClass {
            poly: IntPoly::zero(&grassmann_vars()),
            n,
            k,
        }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_symmetric(&self) -> bool {
        self.poly.swap_vars(ALPHA, BETA) == self.poly
    }

    /// Applies `ht^k = 0`, dropping out-of-range powers.
    pub fn truncate(&self) -> Self {
        SymmetricClass {
            poly: self.poly.truncate_var(HT, self.k - 1),
            ..self.clone()
        }
    }

    /// Reinterprets the class over a different projective factor.
    pub fn with_k(&self, k: u32) -> Self {
        assert!(k >= 1, "factor parameter starts at 1");
        SymmetricClass {
            poly: self.poly.clone(),
            n: self.n,
            k,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(SymmetricClass {
            poly: self.poly.checked_add(&other.poly)?,
            ..self.clone()
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(SymmetricClass {
            poly: self.poly.checked_mul(&other.poly)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        SymmetricClass {
            poly: self.poly.scale(c),
            ..self.clone()
        }
    }

    /// Multiplies by `ht^e`.
    pub fn shift_ht(&self, e: u32) -> Self {
        let ht = IntPoly::monomial(&grassmann_vars(), &[0, 0, e], BigInt::one());
        SymmetricClass {
            poly: &self.poly * &ht,
            ..self.clone()
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::AmbientMismatch {
                left_n: self.n,
                left_k: self.k,
                right_n: other.n,
                right_k: other.k,
            });
        }
        Ok(())
    }
}

/// The class of lines meeting a fixed codimension-p linear subspace:
/// `(alpha^p - beta^p)/(alpha - beta)`, expanded as a geometric sum.
pub fn incident_line_class(p: u32, n: u32) -> Result<SymmetricClass> {
    if p < 1 || p > n {
        return Err(Error::IncidenceOutOfRange { p: p as i64, n });
    }
    let vars = grassmann_vars();
    let mut poly = IntPoly::zero(&vars);
    for t in 0..p {
        poly.add_term(vec![t, p - 1 - t, 0], BigInt::one());
    }
    SymmetricClass::new(poly, n, 1)
}

/// Geometric sum `sum_{t<p} alpha^t beta^{p-1-t}` without the range check.
///
/// Indices past n give classes the integration rule annihilates; integrand
/// assembly reaches them when a binomial expansion overshoots the ambient
/// dimension, and the excess terms integrate to zero rather than erroring.
pub(crate) fn incidence_sum_unchecked(p: u32, n: u32, k: u32) -> SymmetricClass {
    assert!(p >= 1, "geometric sum starts at p = 1");
    let vars = grassmann_vars();
    let mut poly = IntPoly::zero(&vars);
    for t in 0..p {
        poly.add_term(vec![t, p - 1 - t, 0], BigInt::one());
    }
    SymmetricClass { poly, n, k }
}

/// Euler class of the obstruction bundle over the section moduli of a split
/// bundle: one linear factor per pair `(u, v)` with `u` past the k minimal
/// twists and `0 <= v <= m_u - 3`. Empty products give 1.
pub fn obstruction_euler_class(bundle: &BundleSpec, k: u32) -> Result<SymmetricClass> {
    let m = bundle
        .twists()
        .ok_or(Error::SplitOnly {
            op: "obstruction_euler_class",
        })?;
    if bundle.min_twist() != 1 {
        return Err(Error::MinTwistNotOne {
            min: bundle.min_twist(),
            suggest: 1 - bundle.min_twist(),
        });
    }
    assert!(
        k >= 1 && (k as usize) <= m.len(),
        "factor count must address a twist prefix"
    );
    let vars = grassmann_vars();
    let mut poly = IntPoly::one(&vars);
    for &mu in &m[k as usize..] {
        for v in 0..mu.saturating_sub(2) {
            let mut factor = IntPoly::zero(&vars);
            factor.add_term(vec![1, 0, 0], BigInt::from(-(1 + v)));
            factor.add_term(vec![0, 1, 0], BigInt::from(-(mu - 2 - v)));
            factor.add_term(vec![0, 0, 1], BigInt::one());
            poly = &poly * &factor;
        }
    }
    SymmetricClass::new(poly, bundle.n(), k)
}

/// Integral over the space of lines: the `alpha^n beta^n` coefficient of
/// `-1/2 (alpha - beta)^2 P` for a symmetric class of degree `2n - 2`
/// without `ht` part.
pub fn integrate_grassmannian(class: &SymmetricClass) -> Result<BigInt> {
    if class.poly.is_zero() {
        return Ok(BigInt::from(0));
    }
    if class.poly.degree_in(HT) > 0 {
        return Err(Error::ForbiddenGenerator {
            op: "integrate_grassmannian",
            allowed: "alpha and beta",
        });
    }
    if !class.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = class.n;
    let expected = 2 * n - 2;
    if class.poly.homogeneous_degree() != Some(expected) {
        return Err(Error::DegreeMismatch {
            op: "integrate_grassmannian",
            expected,
            found: class.poly.total_degree().unwrap_or(0),
        });
    }
    let vars = grassmann_vars();
    let mut square = IntPoly::zero(&vars); // (alpha - beta)^2
    square.add_term(vec![2, 0, 0], BigInt::one());
    square.add_term(vec![1, 1, 0], BigInt::from(-2));
    square.add_term(vec![0, 2, 0], BigInt::one());
    let doubled = -(&square * &class.poly).coefficient(&[n, n, 0]);
    if &doubled % 2 != BigInt::from(0) {
        return Err(Error::OddCoefficient {
            found: doubled.to_string(),
        });
    }
    Ok(doubled / 2)
}

/// Integral over the product with the projective factor: extracts the
/// `ht^{k-1}` slice, then integrates over the line space. The input must be
/// homogeneous of total degree `(2n - 2) + (k - 1)` with `ht`-degree below k.
pub fn integrate_mixed(class: &SymmetricClass) -> Result<BigInt> {
    if class.poly.is_zero() {
        return Ok(BigInt::from(0));
    }
    if class.poly.degree_in(HT) > class.k - 1 {
        return Err(Error::DegreeMismatch {
            op: "integrate_mixed factor part",
            expected: class.k - 1,
            found: class.poly.degree_in(HT),
        });
    }
    if !class.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let expected = (2 * class.n - 2) + (class.k - 1);
    if class.poly.homogeneous_degree() != Some(expected) {
        return Err(Error::DegreeMismatch {
            op: "integrate_mixed",
            expected,
            found: class.poly.total_degree().unwrap_or(0),
        });
    }
    let slice = class.poly.coeff_of_power(HT, class.k - 1);
    integrate_grassmannian(&SymmetricClass::new(slice, class.n, 1)?)
}
