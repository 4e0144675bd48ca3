//! Quantum-correction coefficients of the first relation, computed by four
//! independent routes, plus the fixed three-point curve counts the ring
//! constructions consume as constants.
//!
//! The coefficient with index i, for 0 <= i <= c1 - r, multiplies
//! `h^i xi^{c1-r-i} q^{n+1+r-c1}` in the corrected power relation. The
//! series route is the fastest; the double sum is its term-by-term
//! rearrangement (an unconditional power-series identity); the two
//! geometric routes are included in tables exactly in the regime where
//! they are proved to agree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bundle::BundleSpec;
use crate::classical::{hxi, integrate_top, twist_product};
use crate::error::{Error, Result};
use crate::numerics::hypothesis_report;
use crate::schubert::{
    incidence_sum_unchecked, integrate_mixed, obstruction_euler_class, SymmetricClass,
};
use crate::series::{binomial, binomial_power_series};

fn normalized_twists<'a>(bundle: &'a BundleSpec, op: &'static str) -> Result<&'a [i64]> {
    let m = bundle.twists().ok_or(Error::SplitOnly { op })?;
    if m[0] != 1 {
        return Err(Error::MinTwistNotOne {
            min: m[0],
            suggest: 1 - m[0],
        });
    }
    Ok(m)
}

fn check_index(bundle: &BundleSpec, i: i64) -> Result<()> {
    let max = bundle.c1() - bundle.r() as i64;
    if i < 0 || i > max {
        return Err(Error::IndexOutOfRange { i, max });
    }
    Ok(())
}

/// Coefficient of `t^i` in `prod_u (1 - m_u t)^{m_u - 2}`.
pub fn w_generating_function(bundle: &BundleSpec, i: i64) -> Result<BigInt> {
    let m = normalized_twists(bundle, "w_generating_function")?;
    check_index(bundle, i)?;
    let factors: Vec<(i64, i64)> = m.iter().map(|&mu| (mu, mu - 2)).collect();
    let series = binomial_power_series(&factors, i as usize)?;
    Ok(series.coefficient(i as usize).clone())
}

/// The same coefficient as a finite double sum: an outer binomial against
/// the signed composition sums of the twists above 1. Being a direct
/// rearrangement of the series product, it is this module's own oracle.
pub fn w_double_sum(bundle: &BundleSpec, i: i64) -> Result<BigInt> {
    let m = normalized_twists(bundle, "w_double_sum")?;
    check_index(bundle, i)?;
    let r = bundle.r() as i64;
    let c1 = bundle.c1();
    let k = bundle.min_twist_count() as usize;

    // inner[j] = sum over compositions (j_u) of j with j_u <= m_u - 2 of
    // prod binom(m_u - 2, j_u) (m_u - 1)^{j_u}, built one factor at a time.
    let mut inner = vec![BigInt::zero(); i as usize + 1];
    inner[0] = BigInt::one();
    for &mu in &m[k..] {
        let mut next = vec![BigInt::zero(); inner.len()];
        for j in 0..inner.len() {
            if inner[j].is_zero() {
                continue;
            }
            for ju in 0..=((mu - 2).min((inner.len() - 1 - j) as i64)) {
                let weight = binomial(mu - 2, ju as u32)
                    * BigInt::from(mu - 1).pow(ju as u32);
                next[j + ju as usize] += &inner[j] * weight;
            }
        }
        inner = next;
    }

    let mut total = BigInt::zero();
    for (j, c) in inner.iter().enumerate() {
        let outer = binomial(2 * r - c1 - 1 + i, (i - j as i64) as u32);
        let signed = if j % 2 == 0 { c.clone() } else { -c };
        total += outer * signed;
    }
    Ok(total)
}

/// The same coefficient as an intersection number on the space of lines
/// crossed with the projective factor of the minimal twists: two incidence
/// classes splitting the ambient dimension, a binomial expansion in the
/// factor hyperplane class, and the obstruction Euler class.
pub fn w_schubert_integral(bundle: &BundleSpec, i: i64) -> Result<BigInt> {
    normalized_twists(bundle, "w_schubert_integral")?;
    check_index(bundle, i)?;
    let n = bundle.n();
    let r = bundle.r() as i64;
    let c1 = bundle.c1();
    let k = bundle.min_twist_count();

    let e = 2 * r - c1 - 1 + i; // top power of the factor hyperplane class
    let p0 = n as i64 - i; // smallest incidence index in the expansion
    if e < 0 || p0 < 1 {
        return Err(Error::HypothesesNotMet(format!(
            "integrand needs 2r-c1-1+i = {e} >= 0 and n-i = {p0} >= 1"
        )));
    }

    let n_half = (n + 1) / 2;
    let mut bracket = SymmetricClass::zero(n, k);
    for j in 0..=e {
        let term = incidence_sum_unchecked((p0 + j) as u32, n, k)
            .shift_ht((e - j) as u32)
            .scale(&binomial(e, j as u32));
        bracket = bracket.checked_add(&term)?;
    }
    let integrand = incidence_sum_unchecked(n_half, n, k)
        .checked_mul(&incidence_sum_unchecked(n + 1 - n_half, n, k))?
        .checked_mul(&bracket)?
        .checked_mul(&obstruction_euler_class(bundle, k)?)?;
    integrate_mixed(&integrand.truncate())
}

/// The same coefficient as an ordinary-ring pairing: the product of the
/// twisted linear forms to one less than their twists, against the
/// complementary monomial.
pub fn w_classical_pairing(bundle: &BundleSpec, i: i64) -> Result<BigInt> {
    let m = bundle.twists().ok_or(Error::SplitOnly {
        op: "w_classical_pairing",
    })?;
    check_index(bundle, i)?;
    let n = bundle.n() as i64;
    let r = bundle.r() as i64;
    let c1 = bundle.c1();
    let h_exp = n - i;
    let xi_exp = 2 * r - c1 - 1 + i;
    if h_exp < 0 || xi_exp < 0 {
        return Err(Error::HypothesesNotMet(format!(
            "pairing monomial needs n-i = {h_exp} >= 0 and 2r-c1-1+i = {xi_exp} >= 0"
        )));
    }
    let product = twist_product(m, |mu| (mu - 1) as u32);
    let paired = &product * &hxi(h_exp as u32, xi_exp as u32);
    integrate_top(&paired, bundle)
}

/// One coefficient row: the canonical value with every route that is
/// proved to compute it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwEntry {
    pub i: i64,
    pub value: BigInt,
    pub methods: BTreeMap<String, BigInt>,
    pub conjectural: bool,
}

impl GwEntry {
    pub fn agrees(&self) -> bool {
        self.methods.values().all(|v| *v == self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwTable {
    pub bundle: BundleSpec,
    pub entries: Vec<GwEntry>,
}

impl GwTable {
    pub fn agrees(&self) -> bool {
        self.entries.iter().all(GwEntry::agrees)
    }

    pub fn leading_is_one(&self) -> bool {
        self.entries
            .first()
            .is_some_and(|e| e.value == BigInt::one())
    }

    pub fn to_json(&self) -> String {
        let doc = GwTableDoc {
            bundle: self.bundle.clone(),
            values: self
                .entries
                .iter()
                .map(|e| GwEntryDoc {
                    i: e.i,
                    value: e.value.to_string(),
                    methods: e
                        .methods
                        .iter()
                        .map(|(k, v)| (k.clone(), v.to_string()))
                        .collect(),
                    conjectural: e.conjectural,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serialization is total")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let doc: GwTableDoc =
            serde_json::from_str(input).map_err(|e| Error::JsonDecode(e.to_string()))?;
        let parse_int = |s: &str| -> Result<BigInt> {
            s.parse()
                .map_err(|_| Error::JsonDecode(format!("bad integer literal `{s}`")))
        };
        let mut entries = Vec::new();
        for v in doc.values {
            let mut methods = BTreeMap::new();
            for (k, s) in v.methods {
                methods.insert(k, parse_int(&s)?);
            }
            entries.push(GwEntry {
                i: v.i,
                value: parse_int(&v.value)?,
                methods,
                conjectural: v.conjectural,
            });
        }
        Ok(GwTable {
            bundle: doc.bundle,
            entries,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct GwTableDoc {
    bundle: BundleSpec,
    values: Vec<GwEntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct GwEntryDoc {
    i: i64,
    value: String,
    methods: BTreeMap<String, String>,
    conjectural: bool,
}

/// Full coefficient table. The series and double-sum routes appear always;
/// the geometric routes appear when the series-regime bound holds, which
/// is exactly where all routes are proved equal. Outside that bound every
/// row is tagged conjectural.
pub fn gw_table(bundle: &BundleSpec) -> Result<GwTable> {
    normalized_twists(bundle, "gw_table")?;
    let report = hypothesis_report(bundle);
    let proved = report.gw_series_bound.holds;
    let mut entries = Vec::new();
    for i in 0..=(bundle.c1() - bundle.r() as i64) {
        let value = w_generating_function(bundle, i)?;
        let mut methods = BTreeMap::new();
        methods.insert("generating-function".to_string(), value.clone());
        methods.insert("double-sum".to_string(), w_double_sum(bundle, i)?);
        if proved {
            methods.insert(
                "schubert-integral".to_string(),
                w_schubert_integral(bundle, i)?,
            );
            methods.insert(
                "classical-pairing".to_string(),
                w_classical_pairing(bundle, i)?,
            );
        }
        entries.push(GwEntry {
            i,
            value,
            methods,
            conjectural: !proved,
        });
    }
    Ok(GwTable {
        bundle: bundle.clone(),
        entries,
    })
}

/// One fixed three-point count, with its applicability on this bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownInvariant {
    pub id: &'static str,
    pub statement: String,
    pub applicable: bool,
    pub condition: String,
    /// The asserted count; present exactly when applicable.
    pub value: Option<i64>,
}

/// The fixed curve counts used as contract constants: fiber-line counts,
/// vanishing for low xi-degree against fiber classes, the section-class
/// leading count, and the two tangent-bundle counts.
pub fn known_invariants(bundle: &BundleSpec) -> Vec<KnownInvariant> {
    let report = hypothesis_report(bundle);
    let n = bundle.n() as i64;
    let is_tangent = !bundle.is_split();
    vec![
        KnownInvariant {
            id: "fiber-point-incidence",
            statement:
                "(xi, xi^{r-1}, h^n xi^{r-1}) on one fiber line counts 1".to_string(),
            applicable: report.fano.holds,
            condition: "anticanonical positivity".to_string(),
            value: report.fano.holds.then_some(1),
        },
        KnownInvariant {
            id: "fiber-low-xi-vanishing",
            statement:
                "fiber-class counts vanish when the first two entries carry xi-degree below r"
                    .to_string(),
            applicable: true,
            condition: "none".to_string(),
            value: Some(0),
        },
        KnownInvariant {
            id: "section-leading",
            statement: "(h, h^n, h^n xi^{2r-c1-1}) on the section class counts 1"
                .to_string(),
            applicable: report.leading_pairing_bound.holds,
            condition: "c1 < 2r".to_string(),
            value: report.leading_pairing_bound.holds.then_some(1),
        },
        KnownInvariant {
            id: "tangent-hyperplane",
            statement: "(h, h^n, h^{n-1} xi^{n-1}) on the section class counts n"
                .to_string(),
            applicable: is_tangent,
            condition: "tangent bundle".to_string(),
            value: is_tangent.then_some(n),
        },
        KnownInvariant {
            id: "tangent-point",
            statement:
                "(x, y, h^n xi^{n-1}) counts 1 for positive-degree x, y of complementary degree n"
                    .to_string(),
            applicable: is_tangent,
            condition: "tangent bundle; both entries of positive degree".to_string(),
            value: is_tangent.then_some(1),
        },
    ]
}
