//! Classical cohomology ring of a projectivized bundle.
//!
//! For `P(V)` over projective n-space with `V` of rank r, the integral
//! cohomology is `Z[h, xi]` modulo two relations: `h^{n+1} = 0` and the
//! rank-r Chern relation `sum_i (-1)^i c_i h^i xi^{r-i} = 0`. The quotient
//! is a free module of rank `(n+1) r` on the monomials `h^i xi^j` with
//! `i <= n`, `j <= r-1`, and `integrate_top` reads off the coefficient of
//! the top monomial `h^n xi^{r-1}`, which generates the top degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::bundle::BundleSpec;
use crate::error::{Error, Result};
use crate::poly::{ring_vars, IntPoly};
use crate::presentation::{Provenance, Relation, RingKind, RingPresentation};
use crate::reduce::{coords_by_basis, RewriteRules, H, Q, XI};
use crate::series::{binomial, binomial_power_series};

/// Chern class coefficients `c_0 ..= c_r` of the bundle.
///
/// Split bundles give elementary symmetric functions of the twists; the
/// tangent bundle gives binomial coefficients of `n + 1`.
pub fn chern_classes(bundle: &BundleSpec) -> Vec<BigInt> {
    match bundle {
        BundleSpec::Split { m, .. } => {
            // prod_u (1 + m_u t) = sum_i e_i(m) t^i, written as (1 - (-m_u) t).
            let factors: Vec<(i64, i64)> = m.iter().map(|&mu| (-mu, 1)).collect();
            let series = binomial_power_series(&factors, m.len())
                .expect("nonnegative powers never fail");
            series.coefficients().to_vec()
        }
        BundleSpec::Tangent { n } => (0..=*n)
            .map(|i| binomial(*n as i64 + 1, i))
            .collect(),
    }
}

/// Segre class coefficients `s_0 ..= s_order`: signed coefficients of the
/// reciprocal of the Chern series. Split bundles only.
pub fn segre_classes(bundle: &BundleSpec, order: usize) -> Result<Vec<BigInt>> {
    let m = bundle
        .twists()
        .ok_or(Error::SplitOnly { op: "segre_classes" })?;
    let factors: Vec<(i64, i64)> = m.iter().map(|&mu| (mu, -1)).collect();
    let series = binomial_power_series(&factors, order)?;
    Ok(series
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect())
}

/// The Chern relation `sum_i (-1)^i c_i h^i xi^{r-i}` as a polynomial.
pub fn chern_relation(bundle: &BundleSpec) -> IntPoly {
    let vars = ring_vars();
    let r = bundle.r();
    let mut rel = IntPoly::zero(&vars);
    for (i, c) in chern_classes(bundle).iter().enumerate() {
        let i = i as u32;
        let sign = if i % 2 == 0 { c.clone() } else { -c };
        rel.add_term(vec![i, r - i, 0], sign);
    }
    rel
}

/// Tautological presentation with no quantum corrections.
pub fn classical_presentation(bundle: &BundleSpec) -> RingPresentation {
    let vars = ring_vars();
    let zero = IntPoly::zero(&vars);
    let h_rel = IntPoly::monomial(&vars, &[bundle.n() + 1, 0, 0], BigInt::one());
    RingPresentation {
        bundle: bundle.clone(),
        kind: RingKind::Classical,
        provenance: Provenance::Classical,
        relations: [
            Relation::new(h_rel, zero.clone()),
            Relation::new(chern_relation(bundle), zero),
        ],
    }
}

/// Rewrite system of the classical ring: `xi^r` eliminates through the
/// Chern relation and `h^{n+1}` drops to zero.
pub fn classical_rules(bundle: &BundleSpec) -> RewriteRules {
    let vars = ring_vars();
    let r = bundle.r();
    // xi^r = sum_{i>=1} (-1)^{i+1} c_i h^i xi^{r-i}
    let mut xi_value = IntPoly::zero(&vars);
    for (i, c) in chern_classes(bundle).iter().enumerate().skip(1) {
        let i = i as u32;
        let signed = if i % 2 == 1 { c.clone() } else { -c };
        xi_value.add_term(vec![i, r - i, 0], signed);
    }
    RewriteRules::new(bundle.n(), r, xi_value, IntPoly::zero(&vars))
        .expect("classical rule values stay inside the degree window")
}

/// Coordinates of a class in the monomial basis, integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub n: u32,
    pub r: u32,
    /// Nonzero coordinates only, keyed by `(i, j)` for `h^i xi^j`.
    pub coords: BTreeMap<(u32, u32), BigInt>,
}

impl NormalForm {
    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.coords
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| BigInt::from(0))
    }

    pub fn to_poly(&self) -> IntPoly {
        let mut p = IntPoly::zero(&ring_vars());
        for (&(i, j), c) in &self.coords {
            p.add_term(vec![i, j, 0], c.clone());
        }
        p
    }
}

fn require_no_q(p: &IntPoly, op: &'static str) -> Result<()> {
    if p.degree_in(Q) > 0 {
        return Err(Error::ForbiddenGenerator {
            op,
            allowed: "h and xi",
        });
    }
    Ok(())
}

/// Unique expansion of `p` over the monomial basis of the classical ring.
pub fn classical_normal_form(p: &IntPoly, bundle: &BundleSpec) -> Result<NormalForm> {
    require_no_q(p, "classical_normal_form")?;
    if *p.vars() != ring_vars() {
        return Err(Error::GeneratorMismatch {
            left: p.vars().names().join(", "),
            right: ring_vars().names().join(", "),
        });
    }
    let reduced = classical_rules(bundle).reduce(p);
    let coords = coords_by_basis(&reduced)
        .into_iter()
        .map(|((i, j), cpoly)| ((i, j), cpoly.coefficient(&[0, 0, 0])))
        .collect();
    Ok(NormalForm {
        n: bundle.n(),
        r: bundle.r(),
        coords,
    })
}

/// Integral over the bundle: coefficient of `h^n xi^{r-1}` in normal form.
pub fn integrate_top(p: &IntPoly, bundle: &BundleSpec) -> Result<BigInt> {
    let nf = classical_normal_form(p, bundle)?;
    Ok(nf.coefficient(bundle.n(), bundle.r() - 1))
}

/// Convenience monomial `h^i xi^j` in the ring generators.
pub fn hxi(i: u32, j: u32) -> IntPoly {
    IntPoly::monomial(&ring_vars(), &[i, j, 0], BigInt::one())
}

/// The product `prod_u (xi - m_u h)^{e_u}` for given per-twist exponents.
pub fn twist_product(m: &[i64], exps: impl Fn(i64) -> u32) -> IntPoly {
    let vars = ring_vars();
    let mut out = IntPoly::one(&vars);
    for &mu in m {
        let mut factor = IntPoly::zero(&vars);
        factor.add_term(vec![0, 1, 0], BigInt::one());
        factor.add_term(vec![1, 0, 0], BigInt::from(-mu));
        out = &out * &factor.pow(exps(mu));
    }
    out
}

#[allow(unused)]
fn h_exp(e: &[u32]) -> u32 {
    e[H] + e[XI]
}
