//! Batch enumeration and verification of split bundles.

use serde::{Deserialize, Serialize};

use crate::bundle::BundleSpec;
use crate::error::Result;
use crate::numerics::hypothesis_report;
use crate::quantum::{batyrev_presentation, verify_presentation, VerificationReport};

/// Parameter box for bundle enumeration. The defaults cover every
/// proved-regime shape while keeping a full verification run fast.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub max_n: u32,
    pub max_r: u32,
    pub max_twist: i64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_n: 6,
            max_r: 5,
            max_twist: 5,
        }
    }
}

fn nondecreasing_tails(len: usize, floor: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for v in floor..=max {
        prefix.push(v);
        nondecreasing_tails(len, v, max, prefix, out);
        prefix.pop();
    }
}

/// All split bundles with minimal twist 1, nondecreasing twists bounded by
/// `max_twist`, n up to `max_n` and rank 2..=`max_r`, in ascending order.
pub fn normalized_split_bundles(bounds: &SweepBounds) -> Vec<BundleSpec> {
    let mut out = Vec::new();
    for n in 1..=bounds.max_n {
        for r in 2..=bounds.max_r {
            let mut tails = Vec::new();
            nondecreasing_tails(
                r as usize - 1,
                1,
                bounds.max_twist,
                &mut Vec::new(),
                &mut tails,
            );
            for tail in tails {
                let mut m = vec![1i64];
                m.extend_from_slice(&tail);
                out.push(BundleSpec::split(n, m).expect("enumerated twists are valid"));
            }
        }
    }
    out.sort();
    out
}

/// The sub-list of [`normalized_split_bundles`] where the split product
/// bound holds, i.e. where the product-form presentation is verified.
pub fn proved_regime_bundles(bounds: &SweepBounds) -> Vec<BundleSpec> {
    normalized_split_bundles(bounds)
        .into_iter()
        .filter(|b| hypothesis_report(b).quantum_split_bound.holds)
        .collect()
}

/// Verification outcome for one bundle of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub bundle: BundleSpec,
    pub report: VerificationReport,
}

impl SweepEntry {
    pub fn passed(&self) -> bool {
        self.report.all_passed()
    }
}

/// Builds and verifies the product-form presentation for every
/// proved-regime bundle in the box.
pub fn run_sweep(bounds: &SweepBounds) -> Result<Vec<SweepEntry>> {
    let mut entries = Vec::new();
    for bundle in proved_regime_bundles(bounds) {
        let pres = batyrev_presentation(&bundle)?;
        let report = verify_presentation(&pres, &bundle)?;
        entries.push(SweepEntry { bundle, report });
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_sorted_and_normalized() {
        let bounds = SweepBounds {
            max_n: 2,
            max_r: 3,
            max_twist: 3,
        };
        let bundles = normalized_split_bundles(&bounds);
        let mut sorted = bundles.clone();
        sorted.sort();
        assert_eq!(bundles, sorted);
        assert!(bundles.iter().all(|b| b.min_twist() == 1));
        assert!(bundles.iter().all(|b| b.n() <= 2 && b.r() <= 3));
        // n in {1, 2}; tails: r=2 gives (1),(2),(3); r=3 gives the six
        // nondecreasing pairs from {1,2,3}.
        assert_eq!(bundles.len(), 2 * (3 + 6));

        let mut unique = bundles.clone();
        unique.dedup();
        assert_eq!(unique.len(), bundles.len());
    }

    #[test]
    fn proved_regime_filters_by_the_product_bound() {
        let bounds = SweepBounds::default();
        let proved = proved_regime_bundles(&bounds);
        assert!(proved
            .iter()
            .all(|b| hypothesis_report(b).quantum_split_bound.holds));
        // The two worked bundles sit inside the box and the regime.
        assert!(proved.contains(&BundleSpec::split(3, vec![1, 2]).unwrap()));
        assert!(proved.contains(&BundleSpec::split(4, vec![1, 1, 3]).unwrap()));
        // A conjectural-only bundle is enumerated but filtered out.
        let outside = BundleSpec::split(2, vec![1, 3]).unwrap();
        assert!(normalized_split_bundles(&bounds).contains(&outside));
        assert!(!proved.contains(&outside));
    }

    #[test]
    fn small_sweep_passes() {
        let bounds = SweepBounds {
            max_n: 3,
            max_r: 3,
            max_twist: 3,
        };
        let entries = run_sweep(&bounds).unwrap();
        assert!(!entries.is_empty());
        assert!(entries.iter().all(SweepEntry::passed));
    }
}
