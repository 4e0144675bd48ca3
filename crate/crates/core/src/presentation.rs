//! Ring presentations for the cohomology of a projectivized bundle.
//!
//! A presentation holds two relations in the generators `h`, `xi`, `q`, each
//! stored as an equation `lhs = rhs`. Setting `q = 0` must recover the
//! classical relations, so classical presentations are the special case
//! `rhs = 0`. A relation may carry symbolic coefficient slots that nothing
//! pins down; such presentations describe the shape of the ring and refuse
//! arithmetic until every slot is resolved.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bundle::BundleSpec;
use crate::error::{Error, Result};
use crate::poly::{ring_vars, IntPoly};
use crate::text::parse_poly;

/// How much of the presentation is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingKind {
    /// Tautological relations only; no quantum corrections.
    Classical,
    /// Quantum relations proved for this bundle.
    QuantumVerified,
    /// Quantum relations beyond the proved range, or with unresolved slots.
    QuantumShape,
}

/// Which construction produced a presentation and whether its hypotheses
/// held for the bundle at hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Classical,
    Batyrev,
    BatyrevConjectural,
    Tangent,
    GeneralShape,
}

/// A symbolic coefficient slot `name * h^h xi^xi q^q` on a relation's
/// right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknownTerm {
    pub name: String,
    pub h: u32,
    pub xi: u32,
    pub q: u32,
}

impl UnknownTerm {
    pub fn degree(&self) -> u32 {
        self.h + self.xi + self.q
    }

    fn monomial_text(&self) -> String {
        let mut parts = vec![self.name.clone()];
        for (sym, e) in [("h", self.h), ("xi", self.xi), ("q", self.q)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// One relation `lhs = rhs (+ unknown slots)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub unknowns: Vec<UnknownTerm>,
    /// Preferred rendering, e.g. the factored product form. Always
    /// equivalent to `lhs = rhs` after expansion.
    pub display: String,
}

impl Relation {
    /// Relation with the plain `lhs = rhs` rendering.
    pub fn new(lhs: IntPoly, rhs: IntPoly) -> Self {
        let display = format!("{lhs} = {rhs}");
        Relation {
            lhs,
            rhs,
            unknowns: Vec::new(),
            display,
        }
    }

    /// Relation with a custom rendering (factored products and the like).
    pub fn with_display(lhs: IntPoly, rhs: IntPoly, display: String) -> Self {
        Relation {
            lhs,
            rhs,
            unknowns: Vec::new(),
            display,
        }
    }

    pub fn is_determined(&self) -> bool {
        self.unknowns.is_empty()
    }

    /// Flat `lhs = rhs` text in canonical polynomial form, with any unknown
    /// slots appended.
    pub fn text(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.rhs.is_zero() || self.unknowns.is_empty() {
            parts.push(self.rhs.to_string());
        }
        parts.extend(self.unknowns.iter().map(UnknownTerm::monomial_text));
        format!("{} = {}", self.lhs, parts.join(" + "))
    }
}

/// Presentation of the (quantum) cohomology ring of a projectivized bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub bundle: BundleSpec,
    pub kind: RingKind,
    pub provenance: Provenance,
    pub relations: [Relation; 2],
}

impl RingPresentation {
    pub fn n(&self) -> u32 {
        self.bundle.n()
    }

    pub fn r(&self) -> u32 {
        self.bundle.r()
    }

    /// Module basis `h^i xi^j`, `0 <= i <= n`, `0 <= j <= r-1`, in
    /// lexicographic order on `(i, j)`.
    pub fn basis(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..=self.n() {
            for j in 0..self.r() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn rank(&self) -> u64 {
        (self.n() as u64 + 1) * self.r() as u64
    }

    pub fn is_determined(&self) -> bool {
        self.relations.iter().all(Relation::is_determined)
    }

    /// Names of every unresolved coefficient slot.
    pub fn unknown_names(&self) -> Vec<String> {
        self.relations
            .iter()
            .flat_map(|rel| rel.unknowns.iter().map(|u| u.name.clone()))
            .collect()
    }

    pub fn generators(&self) -> Vec<String> {
        match self.kind {
            RingKind::Classical => vec!["h".into(), "xi".into()],
            _ => vec!["h".into(), "xi".into(), "q".into()],
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PresentationDoc::from(self)).expect("presentation serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: PresentationDoc = serde_json::from_value(value.clone())
            .map_err(|e| Error::JsonDecode(e.to_string()))?;
        doc.into_presentation()
    }
}

fn basis_monomial_text(i: u32, j: u32) -> String {
    IntPoly::monomial(&ring_vars(), &[i, j, 0], BigInt::from(1)).to_string()
}

#[derive(Serialize, Deserialize)]
struct RelationDoc {
    lhs: String,
    rhs: String,
    display: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    unknowns: Vec<UnknownTerm>,
}

#[derive(Serialize, Deserialize)]
struct PresentationDoc {
    bundle: BundleSpec,
    kind: RingKind,
    provenance: Provenance,
    generators: Vec<String>,
    relations: Vec<RelationDoc>,
    basis: Vec<String>,
    rank: u64,
}

impl From<&RingPresentation> for PresentationDoc {
    fn from(p: &RingPresentation) -> Self {
        PresentationDoc {
            bundle: p.bundle.clone(),
            kind: p.kind,
            provenance: p.provenance,
            generators: p.generators(),
            relations: p
                .relations
                .iter()
                .map(|rel| RelationDoc {
                    lhs: rel.lhs.to_string(),
                    rhs: rel.rhs.to_string(),
                    display: rel.display.clone(),
                    unknowns: rel.unknowns.clone(),
                })
                .collect(),
            basis: p
                .basis()
                .into_iter()
                .map(|(i, j)| basis_monomial_text(i, j))
                .collect(),
            rank: p.rank(),
        }
    }
}

impl PresentationDoc {
    fn into_presentation(self) -> Result<RingPresentation> {
        if self.relations.len() != 2 {
            return Err(Error::JsonDecode(format!(
                "expected 2 relations, found {}",
                self.relations.len()
            )));
        }
        let vars = ring_vars();
        let mut rels = Vec::new();
        for doc in self.relations {
            rels.push(Relation {
                lhs: parse_poly(&vars, &doc.lhs)?,
                rhs: parse_poly(&vars, &doc.rhs)?,
                unknowns: doc.unknowns,
                display: doc.display,
            });
        }
        let p = RingPresentation {
            bundle: self.bundle,
            kind: self.kind,
            provenance: self.provenance,
            relations: rels.try_into().expect("length checked"),
        };
        if self.rank != p.rank() {
            return Err(Error::JsonDecode(format!(
                "rank {} does not match (n+1)r = {}",
                self.rank,
                p.rank()
            )));
        }
        Ok(p)
    }
}
