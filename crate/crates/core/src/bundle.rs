//! Bundle descriptions for projectivizations over projective space.
//!
//! Two families are supported: direct sums of line bundles `O(m_1) + ... +
//! O(m_r)` with every `m_i >= 1`, and the tangent bundle of projective
//! space. The twist list of a split bundle is kept sorted nondecreasing, so
//! equal bundles compare equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A projectivized bundle over projective n-space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BundleSpec {
    /// `P(O(m_1) + ... + O(m_r))` with `m` sorted nondecreasing.
    Split { n: u32, m: Vec<i64> },
    /// `P(T)` for the tangent bundle of projective n-space.
    Tangent { n: u32 },
}

impl BundleSpec {
    /// Split bundle; sorts the twists and validates positivity and rank.
    pub fn split(n: u32, mut m: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBundle("base dimension n must be positive".into()));
        }
        if m.len() < 2 {
            return Err(Error::InvalidBundle(format!(
                "rank {} is too small; at least two summands are required",
                m.len()
            )));
        }
        if let Some(bad) = m.iter().find(|&&v| v < 1) {
            return Err(Error::InvalidBundle(format!(
                "twist {bad} is not positive; ample summands need m_i >= 1"
            )));
        }
        m.sort_unstable();
        Ok(BundleSpec::Split { n, m })
    }

    /// Tangent bundle of projective n-space, n >= 2.
    pub fn tangent(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBundle(
                "tangent bundle projectivization needs n >= 2".into(),
            ));
        }
        Ok(BundleSpec::Tangent { n })
    }

    pub fn n(&self) -> u32 {
        match self {
            BundleSpec::Split { n, .. } | BundleSpec::Tangent { n } => *n,
        }
    }

    /// Rank of the underlying bundle.
    pub fn r(&self) -> u32 {
        match self {
            BundleSpec::Split { m, .. } => m.len() as u32,
            BundleSpec::Tangent { n } => *n,
        }
    }

    /// First Chern number: sum of the twists, or n + 1 for the tangent case.
    pub fn c1(&self) -> i64 {
        match self {
            BundleSpec::Split { m, .. } => m.iter().sum(),
            BundleSpec::Tangent { n } => *n as i64 + 1,
        }
    }

    pub fn twists(&self) -> Option<&[i64]> {
        match self {
            BundleSpec::Split { m, .. } => Some(m),
            BundleSpec::Tangent { .. } => None,
        }
    }

    /// Smallest twist in the splitting type on a general line. The tangent
    /// bundle restricts to `O(1)^{n-1} + O(2)`, so its minimum is 1.
    pub fn min_twist(&self) -> i64 {
        match self {
            BundleSpec::Split { m, .. } => m[0],
            BundleSpec::Tangent { .. } => 1,
        }
    }

    /// Multiplicity of the smallest twist on a general line.
    pub fn min_twist_count(&self) -> u32 {
        match self {
            BundleSpec::Split { m, .. } => m.iter().filter(|&&v| v == m[0]).count() as u32,
            BundleSpec::Tangent { n } => n - 1,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, BundleSpec::Split { .. })
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleSpec::Split { n, m } => {
                let twists: Vec<String> = m.iter().map(|v| v.to_string()).collect();
                write!(f, "split:n={n},m={}", twists.join(","))
            }
            BundleSpec::Tangent { n } => write!(f, "tangent:n={n}"),
        }
    }
}

/// Curve class in the two-dimensional lattice spanned by the fiber line
/// class and the section class; coordinates are the pairing `(a, b)` against
/// `(xi, h)` duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveClass {
    /// Degree against h: the image degree in the base.
    pub a: i64,
    /// Degree against xi.
    pub b: i64,
}

impl CurveClass {
    pub fn new(a: i64, b: i64) -> Self {
        CurveClass { a, b }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Line in a fiber of the projectivization.
pub fn fiber_line_class() -> CurveClass {
    CurveClass::new(0, 1)
}

/// Minimal section class: a line in the base lifted along the smallest
/// twist, so it pairs to `min_twist - c1` against xi.
pub fn section_class(bundle: &BundleSpec) -> CurveClass {
    CurveClass::new(1, bundle.min_twist() - bundle.c1())
}

/// Result of parsing a bundle from text, with any normalization notices.
#[derive(Clone, Debug)]
pub struct ParsedBundle {
    pub spec: BundleSpec,
    pub notices: Vec<String>,
}

/// Parses `split:n=<int>,m=<int>(,<int>)*` or `tangent:n=<int>`.
///
/// The twist list is sorted if needed (with a notice). A split spec whose
/// smallest twist is not 1 parses fine but gets a notice suggesting the
/// normalizing twist; nothing is rewritten automatically.
pub fn parse_bundle(input: &str) -> Result<ParsedBundle> {
    let (kind, rest) = input
        .split_once(':')
        .ok_or_else(|| Error::BundleParse(format!("expected `split:...` or `tangent:...`, got `{input}`")))?;
    match kind {
        "tangent" => {
            let n = parse_key_int(rest, "n")?;
            let n = u32::try_from(n)
                .map_err(|_| Error::BundleParse(format!("n={n} is out of range")))?;
            Ok(ParsedBundle {
                spec: BundleSpec::tangent(n)?,
                notices: Vec::new(),
            })
        }
        "split" => {
            let (n_part, m_part) = rest.split_once(',').ok_or_else(|| {
                Error::BundleParse("split spec needs both n=<int> and m=<list>".into())
            })?;
            let n = parse_key_int(n_part, "n")?;
            let n = u32::try_from(n)
                .map_err(|_| Error::BundleParse(format!("n={n} is out of range")))?;
            let m_list = m_part
                .strip_prefix("m=")
                .ok_or_else(|| Error::BundleParse(format!("expected m=<list>, got `{m_part}`")))?;
            let mut m = Vec::new();
            for piece in m_list.split(',') {
                let v: i64 = piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::BundleParse(format!("bad twist `{piece}`")))?;
                m.push(v);
            }
            let mut notices = Vec::new();
            if m.windows(2).any(|w| w[0] > w[1]) {
                notices.push("twist list was not sorted; reordered nondecreasing".into());
            }
            let spec = BundleSpec::split(n, m)?;
            if spec.min_twist() != 1 {
                let min = spec.min_twist();
                notices.push(format!(
                    "smallest twist is {min}, not 1; consider twisting by O({}) to normalize \
                     (the projectivization is unchanged)",
                    1 - min
                ));
            }
            Ok(ParsedBundle { spec, notices })
        }
        other => Err(Error::BundleParse(format!(
            "unknown bundle kind `{other}` (expected `split` or `tangent`)"
        ))),
    }
}

fn parse_key_int(part: &str, key: &str) -> Result<i64> {
    let val = part
        .trim()
        .strip_prefix(key)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| Error::BundleParse(format!("expected {key}=<int>, got `{part}`")))?;
    val.trim()
        .parse()
        .map_err(|_| Error::BundleParse(format!("bad integer `{val}` for {key}")))
}
