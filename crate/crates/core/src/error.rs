//! Crate-wide error type.
//!
//! Every fallible operation reports through [`Error`]. Arithmetic itself is
//! exact and never fails; errors signal contract violations (mismatched
//! generator sets, out-of-range indices, ill-posed integrands) or inputs
//! outside an operation's supported domain.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two polynomials built over different generator sets were combined.
    #[error("generator set mismatch: [{left}] vs [{right}]")]
    GeneratorMismatch { left: String, right: String },

    /// A generator name was not found in the polynomial's generator set.
    #[error("unknown generator `{name}` (generators are [{vars}])")]
    UnknownGenerator { name: String, vars: String },

    /// Text input did not parse as a polynomial in canonical form.
    #[error("polynomial parse error at byte {at}: {reason}")]
    PolyParse { at: usize, reason: String },

    /// A bundle description violated a structural invariant.
    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    /// Bundle text such as `split:n=3,m=1,2` failed to parse.
    #[error("bundle parse error: {0}")]
    BundleParse(String),

    /// Series reciprocal requires a unit constant term.
    #[error("series reciprocal needs constant term +1 or -1, found {found}")]
    NonUnitConstant { found: String },

    /// Requested operation is only defined for split bundles.
    #[error("{op} is only defined for split bundles")]
    SplitOnly { op: &'static str },

    /// Incidence classes are indexed by codimension 1..=n.
    #[error("incidence class index p={p} out of range 1..={n}")]
    IncidenceOutOfRange { p: i64, n: u32 },

    /// An integrand did not have the degree the integral requires.
    #[error("degree mismatch in {op}: expected every term to have degree {expected}, found a term of degree {found}")]
    DegreeMismatch {
        op: &'static str,
        expected: u32,
        found: u32,
    },

    /// The integration pairing produced an odd coefficient before halving,
    /// which signals a non-symmetric integrand.
    #[error("odd coefficient {found} before halving; integrand is not symmetric")]
    OddCoefficient { found: String },

    /// An integrand was expected to be symmetric under swapping the two
    /// Chern roots but was not.
    #[error("integrand is not symmetric under swapping the first two generators")]
    NotSymmetric,

    /// Two symmetric classes over different ambient parameters were combined.
    #[error("ambient mismatch: class over n={left_n}, k={left_k} combined with class over n={right_n}, k={right_k}")]
    AmbientMismatch {
        left_n: u32,
        left_k: u32,
        right_n: u32,
        right_k: u32,
    },

    /// Split-bundle normalization: the smallest twist must be 1.
    #[error("smallest twist is {min}; normalize by tensoring with O({suggest}) first")]
    MinTwistNotOne { min: i64, suggest: i64 },

    /// A Gromov-Witten coefficient index outside 0..=c1-r was requested.
    #[error("coefficient index {i} out of range 0..={max}")]
    IndexOutOfRange { i: i64, max: i64 },

    /// The anticanonical class is not positive on the section class, so no
    /// quantum presentation exists.
    #[error("bundle is not Fano: anticanonical degree {deg} on the section class is not positive")]
    NotFano { deg: i64 },

    /// Arithmetic on a presentation with unresolved symbolic coefficients.
    #[error("presentation has unresolved coefficients ({names}); reduction is refused")]
    UnresolvedCoefficients { names: String },

    /// A normal form was fed to a ring presentation with other parameters.
    #[error("presentation mismatch: normal form over {left} used with a ring over {right}")]
    PresentationMismatch { left: String, right: String },

    /// A presentation's relations are not in the shape the reducer needs.
    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),

    /// Moduli dimension formulas cover only the extreme splitting values.
    #[error("moduli dimension for twist degree {m} is unsupported: known cases are m = {m1} and m >= {mr}")]
    ModuliUnsupported { m: i64, m1: i64, mr: i64 },

    /// Moduli of maps with splitting degree below the minimal twist is empty.
    #[error("moduli for twist degree {m} below the minimal twist {m1} is empty")]
    ModuliEmpty { m: i64, m1: i64 },

    /// Hypotheses required by a construction were not satisfied.
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),

    /// Input polynomial uses generators the operation forbids.
    #[error("{op} expects a polynomial in {allowed} only")]
    ForbiddenGenerator { op: &'static str, allowed: &'static str },

    /// JSON document did not match the expected schema.
    #[error("json decode error: {0}")]
    JsonDecode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
