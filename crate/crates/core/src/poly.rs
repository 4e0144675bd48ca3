//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Invariants:
//! - every stored coefficient is nonzero (zero terms are stripped on insert);
//! - exponent vectors always have exactly one entry per generator;
//! - two polynomials combine only when their generator sets are equal, so a
//!   ring element never silently changes meaning;
//! - arithmetic is exact; coefficients grow as needed and never overflow.
//!
//! Term order for display is graded lexicographic: higher total degree
//! first, ties broken by ascending exponent vector. `h^2*xi^3*q - 3*h*xi`
//! is in canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered list of generator names shared by a family of polynomials.
#[derive(Clone, Debug, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    fn joined(&self) -> String {
        self.0.join(", ")
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// Generators of the cohomology rings handled here: the hyperplane pullback
/// `h`, the tautological class `xi`, and the quantum deformation variable `q`.
pub fn ring_vars() -> VarSet {
    static VARS: std::sync::LazyLock<VarSet> =
        std::sync::LazyLock::new(|| VarSet::new(["h", "xi", "q"]));
    VARS.clone()
}

/// Generators for symmetric classes on the line Grassmannian times a
/// projective factor: Chern roots `alpha`, `beta` and the extra hyperplane
/// class `ht`.
pub fn grassmann_vars() -> VarSet {
    static VARS: std::sync::LazyLock<VarSet> =
        std::sync::LazyLock::new(|| VarSet::new(["alpha", "beta", "ht"]));
    VARS.clone()
}

/// Sparse polynomial over `BigInt`, keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPoly {
    pub fn zero(vars: &VarSet) -> Self {
        IntPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    /// Single generator as a polynomial.
    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let idx = vars.index_of(name).ok_or_else(|| Error::UnknownGenerator {
            name: name.to_string(),
            vars: vars.joined(),
        })?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::monomial(vars, &exps, BigInt::one()))
    }

    pub fn monomial(vars: &VarSet, exps: &[u32], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        p.add_term(exps.to_vec(), coeff.into());
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Adds `coeff` to the term with exponents `exps`, stripping zeros.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn require_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch {
                left: self.vars.joined(),
                right: other.vars.joined(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.require_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Term-by-term product; exact in all coefficients.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.require_same_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in other.terms.iter() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same generator set");
        }
        out
    }

    /// Coefficient of the monomial with the given exponent vector.
    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest total degree among terms, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Largest exponent of one generator.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Total degree shared by every term, or `None` if terms disagree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: u32 = e.iter().sum();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Sets one generator to zero, dropping every term that contains it.
    pub fn set_var_zero(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in self.terms.iter() {
            if e[var] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Exchanges two generators in every exponent vector.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in self.terms.iter() {
            let mut exps = e.clone();
            exps.swap(a, b);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Polynomial coefficient of `var^e`: matching terms with that exponent
    /// slot reset to zero.
    pub fn coeff_of_power(&self, var: usize, e: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (exps, c) in self.terms.iter() {
            if exps[var] == e {
                let mut rest = exps.clone();
                rest[var] = 0;
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Drops every term whose exponent of `var` exceeds `max`.
    pub fn truncate_var(&self, var: usize, max: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in self.terms.iter() {
            if e[var] <= max {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.checked_add(rhs).expect("generator set mismatch")
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.checked_sub(rhs).expect("generator set mismatch")
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.checked_mul(rhs).expect("generator set mismatch")
    }
}

/// Graded-lex display order: total degree descending, then exponent vector
/// ascending.
fn display_order(terms: &BTreeMap<Vec<u32>, BigInt>) -> Vec<(&Vec<u32>, &BigInt)> {
    let mut list: Vec<_> = terms.iter().collect();
    list.sort_by(|(ea, _), (eb, _)| {
        let da: u32 = ea.iter().sum();
        let db: u32 = eb.iter().sum();
        db.cmp(&da).then_with(|| ea.cmp(eb))
    });
    list
}

fn write_monomial(out: &mut String, vars: &VarSet, exps: &[u32], coeff: &BigInt) {
    let mag = coeff.abs();
    let mut factors: Vec<String> = Vec::new();
    if !mag.is_one() || exps.iter().all(|&e| e == 0) {
        factors.push(mag.to_string());
    }
    for (name, &e) in vars.names().iter().zip(exps) {
        match e {
            0 => {}
            1 => factors.push(name.clone()),
            _ => factors.push(format!("{name}^{e}")),
        }
    }
    out.push_str(&factors.join("*"));
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (exps, coeff)) in display_order(&self.terms).into_iter().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    s.push('-');
                }
            } else if coeff.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            write_monomial(&mut s, &self.vars, exps, coeff);
        }
        write!(f, "{s}")
    }
}
