//! Exact quantum cohomology rings of projective bundles over projective
//! space: classical and quantum presentations, Gromov-Witten coefficients
//! by several independent routes, Schubert calculus on the space of lines,
//! and consistency checks tying them together. All arithmetic is exact.

pub mod bundle;
pub mod classical;
pub mod error;
pub mod gw;
pub mod numerics;
pub mod poly;
pub mod presentation;
pub mod quantum;
pub mod reduce;
pub mod schubert;
pub mod series;
pub mod sweep;
pub mod text;

pub use bundle::{fiber_line_class, parse_bundle, section_class, BundleSpec, CurveClass, ParsedBundle};
pub use classical::{
    chern_classes, classical_normal_form, classical_presentation, classical_rules, integrate_top,
    segre_classes, NormalForm,
};
pub use error::{Error, Result};
pub use gw::{
    gw_table, known_invariants, w_classical_pairing, w_double_sum, w_generating_function,
    w_schubert_integral, GwEntry, GwTable, KnownInvariant,
};
pub use numerics::{
    anticanonical_degree, contributing_classes, extremal_classes, hypothesis_report,
    moduli_dimension, ContributingClasses, ExtremalClasses, Gate, HypothesisReport, TriState,
};
pub use poly::{grassmann_vars, ring_vars, IntPoly, VarSet};
pub use presentation::{Provenance, Relation, RingKind, RingPresentation, UnknownTerm};
pub use quantum::{
    batyrev_presentation, quantum_normal_form, quantum_product, quantum_rules, shape_presentation,
    tangent_presentation, verify_presentation, Check, CheckStatus, QuantumNormalForm,
    VerificationReport,
};
pub use reduce::RewriteRules;
pub use schubert::{
    incident_line_class, integrate_grassmannian, integrate_mixed, obstruction_euler_class,
    SymmetricClass,
};
pub use series::{binomial, binomial_power_series, IntSeries};
pub use sweep::{normalized_split_bundles, proved_regime_bundles, run_sweep, SweepBounds, SweepEntry};
pub use text::parse_poly;
