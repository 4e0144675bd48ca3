//! Two-rule rewriting engine shared by the classical and quantum rings.
//!
//! Rules: `xi^r -> xi_value` and `h^{n+1} -> h_value`. Termination is
//! guaranteed by a degree argument, provided the rule values satisfy
//!
//! - every term of `xi_value` has `(h, xi)`-degree at most `r`, and terms of
//!   degree exactly `r` have `xi`-degree strictly below `r`;
//! - every term of `h_value` has `(h, xi)`-degree at most `n`.
//!
//! Each rewrite then strictly decreases the multiset of per-term pairs
//! `((h, xi)-degree, xi-degree)` under lexicographic comparison, for any
//! order of rule applications. [`RewriteRules::new`] rejects rule values
//! outside these bounds. Confluence is not assumed; it is what the
//! randomized interleaving checks establish experimentally per ring.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{ring_vars, IntPoly};

pub const H: usize = 0;
pub const XI: usize = 1;
pub const Q: usize = 2;

/// Rewrite system for one ring.
#[derive(Clone, Debug)]
pub struct RewriteRules {
    n: u32,
    r: u32,
    xi_value: IntPoly,
    h_value: IntPoly,
}

impl RewriteRules {
    pub fn new(n: u32, r: u32, xi_value: IntPoly, h_value: IntPoly) -> Result<Self> {
        if *xi_value.vars() != ring_vars() || *h_value.vars() != ring_vars() {
            return Err(Error::MalformedPresentation(
                "rewrite rule values must live in the (h, xi, q) ring".into(),
            ));
        }
        for (exps, _) in xi_value.terms() {
            let d = exps[H] + exps[XI];
            if d > r || (d == r && exps[XI] >= r) {
                return Err(Error::MalformedPresentation(format!(
                    "xi-rule value has a term of (h, xi)-degree {d} with xi-degree {}; \
                     rewriting would not terminate",
                    exps[XI]
                )));
            }
        }
        for (exps, _) in h_value.terms() {
            let d = exps[H] + exps[XI];
            if d > n {
                return Err(Error::MalformedPresentation(format!(
                    "h-rule value has a term of (h, xi)-degree {d} > n = {n}; \
                     rewriting would not terminate"
                )));
            }
        }
        Ok(RewriteRules {
            n,
            r,
            xi_value,
            h_value,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    fn term_rewrite(&self, exps: &[u32], coeff: &BigInt, rule_xi: bool) -> IntPoly {
        let mut rest = exps.to_vec();
        let value = if rule_xi {
            rest[XI] -= self.r;
            &self.xi_value
        } else {
            rest[H] -= self.n + 1;
            &self.h_value
        };
        let quotient = IntPoly::monomial(&ring_vars(), &rest, coeff.clone());
        quotient.checked_mul(value).expect("same generator set")
    }

    /// Deterministic normal form: clears all xi-powers >= r, then h-powers
    /// >= n+1, and repeats until no rule applies.
    pub fn reduce(&self, p: &IntPoly) -> IntPoly {
        let mut cur = p.clone();
        loop {
            let mut kept = IntPoly::zero(&ring_vars());
            let mut rewritten = IntPoly::zero(&ring_vars());
            let mut any = false;
            for (exps, coeff) in cur.terms() {
                if exps[XI] >= self.r {
                    rewritten = &rewritten + &self.term_rewrite(exps, coeff, true);
                    any = true;
                } else {
                    kept.add_term(exps.to_vec(), coeff.clone());
                }
            }
            if any {
                cur = &kept + &rewritten;
                continue;
            }
            let mut kept = IntPoly::zero(&ring_vars());
            let mut rewritten = IntPoly::zero(&ring_vars());
            let mut any = false;
            for (exps, coeff) in cur.terms() {
                if exps[H] > self.n {
                    rewritten = &rewritten + &self.term_rewrite(exps, coeff, false);
                    any = true;
                } else {
                    kept.add_term(exps.to_vec(), coeff.clone());
                }
            }
            if !any {
                return cur;
            }
            cur = &kept + &rewritten;
        }
    }

    /// Normal form computed by applying the rules one term at a time in a
    /// random order. Used to probe confluence: for a confluent system this
    /// agrees with [`reduce`](Self::reduce) for every interleaving.
    pub fn reduce_randomized(&self, p: &IntPoly, rng: &mut impl Rng) -> IntPoly {
        let mut cur = p.clone();
        loop {
            let mut candidates: Vec<(Vec<u32>, bool)> = Vec::new();
            for (exps, _) in cur.terms() {
                if exps[XI] >= self.r {
                    candidates.push((exps.to_vec(), true));
                }
                if exps[H] > self.n {
                    candidates.push((exps.to_vec(), false));
                }
            }
            if candidates.is_empty() {
                return cur;
            }
            let (exps, rule_xi) = candidates[rng.gen_range(0..candidates.len())].clone();
            let coeff = cur.coefficient(&exps);
            let replacement = self.term_rewrite(&exps, &coeff, rule_xi);
            let without = &cur - &IntPoly::monomial(&ring_vars(), &exps, coeff);
            cur = &without + &replacement;
        }
    }

    /// True when no rule applies to any term.
    pub fn is_reduced(&self, p: &IntPoly) -> bool {
        p.terms()
            .all(|(exps, _)| exps[XI] < self.r && exps[H] <= self.n)
    }
}

/// Groups a reduced polynomial by basis monomial `(h^i, xi^j)`; the values
/// are the pure-q coefficient polynomials.
pub fn coords_by_basis(p: &IntPoly) -> BTreeMap<(u32, u32), IntPoly> {
    let mut out: BTreeMap<(u32, u32), IntPoly> = BTreeMap::new();
    for (exps, coeff) in p.terms() {
        out.entry((exps[H], exps[XI]))
            .or_insert_with(|| IntPoly::zero(&ring_vars()))
            .add_term(vec![0, 0, exps[Q]], coeff.clone());
    }
    out
}
