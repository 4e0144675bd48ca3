//! Numerical geometry of the bundle: anticanonical degrees, positivity and
//! hypothesis gates, extremal curve classes, correction-class enumeration,
//! and moduli dimension formulas. Everything here is exact integer
//! arithmetic on the bundle data; fractional bounds are compared after
//! clearing denominators.

use serde::{Deserialize, Serialize};

use crate::bundle::{fiber_line_class, section_class, BundleSpec, CurveClass};
use crate::error::{Error, Result};

/// Anticanonical degree `-K . A = a(n+1-c1) + r(a c1 + b)`, linear in A.
pub fn anticanonical_degree(bundle: &BundleSpec, class: &CurveClass) -> i64 {
    let n = bundle.n() as i64;
    let r = bundle.r() as i64;
    let c1 = bundle.c1();
    class.a * (n + 1 - c1) + r * (class.a * c1 + class.b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalClasses {
    /// Class of a line in a fiber.
    pub fiber: CurveClass,
    /// Class of a minimal-twist section over a line in the base.
    pub section: CurveClass,
    /// Whether the section class spans the second extremal ray.
    pub section_extremal: TriState,
}

/// The two candidate extremal classes and the extremality status of the
/// second. For every bundle this crate can represent, the minimal twist is
/// nef and the status is `Yes`; the tri-state is kept because extremality
/// of the section class is genuinely open for some non-split bundles.
pub fn extremal_classes(bundle: &BundleSpec) -> ExtremalClasses {
    let section_extremal = if min_twist_is_nef(bundle)
        || 2 * bundle.c1() <= bundle.n() as i64 + 1
    {
        TriState::Yes
    } else {
        TriState::Unknown
    };
    ExtremalClasses {
        fiber: fiber_line_class(),
        section: section_class(bundle),
        section_extremal,
    }
}

/// Whether `xi - m1 h` is a nef divisor. Split bundles: always (every twist
/// is at least the minimal one). Tangent bundle: yes, by the Euler sequence
/// on the minimal twist.
fn min_twist_is_nef(bundle: &BundleSpec) -> bool {
    match bundle {
        BundleSpec::Split { .. } | BundleSpec::Tangent { .. } => true,
    }
}

/// One named hypothesis with the arithmetic that decides it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub holds: bool,
    pub witness: String,
}

impl Gate {
    fn new(holds: bool, witness: String) -> Self {
        Gate { holds, witness }
    }
}

/// Every hypothesis inequality the constructions depend on, evaluated with
/// witnessing numbers. Pure function of the bundle data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    /// The anticanonical class is positive on both candidate rays.
    pub fano: Gate,
    /// c1 <= n+1: the small-degree route to Fano.
    pub fano_small_c1: Gate,
    /// c1 <= n+r with the minimal twist nef: the nef route to Fano.
    pub fano_nef_twist: Gate,
    /// Either route above, with positivity: gate for the two-relation shape.
    pub relation_shape: Gate,
    /// c1 < min(2r, (n+1+2r)/2): regime where the coefficient series and
    /// the classical pairing identity are proved.
    pub gw_series_bound: Gate,
    /// c1 < min(2r, (n+1+2r)/2, (2n+2+r)/2): regime where the product form
    /// of the quantum relations is proved for split bundles.
    pub quantum_split_bound: Gate,
    /// 2c1 <= n+r: only the section class corrects the first relation.
    pub first_relation_sharp: Gate,
    /// 2c1 <= 2n+r+1: fiber lines alone correct the second relation, with
    /// the section class entering only when c1 > n.
    pub second_relation_sharp: Gate,
    /// The minimal-twist divisor xi - m1 h is nef.
    pub min_twist_nef: Gate,
    /// 2c1 <= n+1: section extremality from degree bounds alone.
    pub section_extremal_small_c1: Gate,
    /// c1 < 2r: the leading pairing coefficient is forced to 1.
    pub leading_pairing_bound: Gate,
}

pub fn hypothesis_report(bundle: &BundleSpec) -> HypothesisReport {
    let n = bundle.n() as i64;
    let r = bundle.r() as i64;
    let c1 = bundle.c1();
    let m1 = bundle.min_twist();

    let deg_section = n + 1 - c1 + r * m1;
    let fano = Gate::new(
        deg_section > 0,
        format!("-K on section class = {n}+1-{c1}+{r}*{m1} = {deg_section} > 0"),
    );
    let fano_small_c1 = Gate::new(c1 <= n + 1, format!("c1 = {c1} vs n+1 = {}", n + 1));
    let nef = min_twist_is_nef(bundle);
    let fano_nef_twist = Gate::new(
        c1 <= n + r && nef,
        format!("c1 = {c1} vs n+r = {} with minimal twist nef = {nef}", n + r),
    );
    let relation_shape = Gate::new(
        fano.holds && (fano_small_c1.holds || fano_nef_twist.holds),
        "positivity plus either route".to_string(),
    );
    let gw_series_bound = Gate::new(
        c1 < 2 * r && 2 * c1 < n + 1 + 2 * r,
        format!(
            "c1 = {c1} vs 2r = {} and 2c1 = {} vs n+1+2r = {}",
            2 * r,
            2 * c1,
            n + 1 + 2 * r
        ),
    );
    let quantum_split_bound = Gate::new(
        gw_series_bound.holds && 2 * c1 < 2 * n + 2 + r,
        format!(
            "previous bound and 2c1 = {} vs 2n+2+r = {}",
            2 * c1,
            2 * n + 2 + r
        ),
    );
    let first_relation_sharp = Gate::new(
        2 * c1 <= n + r,
        format!("2c1 = {} vs n+r = {}", 2 * c1, n + r),
    );
    let second_relation_sharp = Gate::new(
        2 * c1 <= 2 * n + r + 1,
        format!("2c1 = {} vs 2n+r+1 = {}", 2 * c1, 2 * n + r + 1),
    );
    let min_twist_nef = Gate::new(nef, format!("minimal twist {m1} is nef = {nef}"));
    let section_extremal_small_c1 = Gate::new(
        2 * c1 <= n + 1,
        format!("2c1 = {} vs n+1 = {}", 2 * c1, n + 1),
    );
    let leading_pairing_bound =
        Gate::new(c1 < 2 * r, format!("c1 = {c1} vs 2r = {}", 2 * r));

    HypothesisReport {
        fano,
        fano_small_c1,
        fano_nef_twist,
        relation_shape,
        gw_series_bound,
        quantum_split_bound,
        first_relation_sharp,
        second_relation_sharp,
        min_twist_nef,
        section_extremal_small_c1,
        leading_pairing_bound,
    }
}

/// Curve classes that can carry a quantum correction of a product with the
/// given half-degree and total xi-degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContributingClasses {
    pub classes: Vec<CurveClass>,
    /// True when the relation-shape hypotheses failed: the list is then
    /// the raw degree-feasible effective set with no vanishing applied.
    pub unpruned: bool,
}

/// Enumerates correction classes for a product of half-degree `deg_sum`
/// whose factors carry total xi-degree `xi_budget`.
///
/// A class A can contribute only when the complementary-class degree
/// `(n+r-1) - K(A) - deg_sum` lies in `[0, n+r-1]`. Under the
/// relation-shape hypotheses the candidates are fiber-line multiples
/// (killed entirely when `xi_budget < r`, where fiber invariants vanish)
/// and the single section class. Otherwise every degree-feasible effective
/// class is returned, flagged.
pub fn contributing_classes(
    bundle: &BundleSpec,
    deg_sum: i64,
    xi_budget: i64,
) -> Result<ContributingClasses> {
    let n = bundle.n() as i64;
    let r = bundle.r() as i64;
    let report = hypothesis_report(bundle);
    if !report.fano.holds {
        return Err(Error::NotFano {
            deg: anticanonical_degree(bundle, &section_class(bundle)),
        });
    }
    let window = |deg: i64| deg_sum - (n + r - 1) <= deg && deg <= deg_sum;

    if report.relation_shape.holds {
        let mut classes = Vec::new();
        if xi_budget >= r {
            let mut b = 1;
            while r * b <= deg_sum {
                if window(r * b) {
                    classes.push(CurveClass::new(0, b));
                }
                b += 1;
            }
        }
        let section = section_class(bundle);
        if window(anticanonical_degree(bundle, &section)) {
            classes.push(section);
        }
        return Ok(ContributingClasses {
            classes,
            unpruned: false,
        });
    }

    // No vanishing applies: every effective class in the degree window.
    let b_floor = section_class(bundle).b;
    let mut classes = Vec::new();
    let section_deg = anticanonical_degree(bundle, &section_class(bundle));
    let mut a = 0;
    while a * section_deg <= deg_sum {
        let mut b = a * b_floor;
        loop {
            let deg = anticanonical_degree(bundle, &CurveClass::new(a, b));
            if deg > deg_sum {
                break;
            }
            if (a, b) != (0, 0) && window(deg) {
                classes.push(CurveClass::new(a, b));
            }
            b += 1;
        }
        a += 1;
    }
    Ok(ContributingClasses {
        classes,
        unpruned: true,
    })
}

/// Dimension of the space of maps of a line into the bundle with splitting
/// value `m` on the section: `2n + k` at the minimal twist (k = its
/// multiplicity), `2n + r + rm - c1` from the maximal twist up. The
/// intermediate range has no supported formula.
pub fn moduli_dimension(bundle: &BundleSpec, m: i64) -> Result<i64> {
    let twists = bundle.twists().ok_or(Error::SplitOnly {
        op: "moduli_dimension",
    })?;
    let m1 = twists[0];
    let mr = *twists.last().expect("split bundles have rank >= 2");
    let n = bundle.n() as i64;
    let r = bundle.r() as i64;
    let c1 = bundle.c1();
    if m < m1 {
        return Err(Error::ModuliEmpty { m, m1 });
    }
    if m == m1 {
        return Ok(2 * n + bundle.min_twist_count() as i64);
    }
    if m >= mr {
        return Ok(2 * n + r + r * m - c1);
    }
    Err(Error::ModuliUnsupported { m, m1, mr })
}
