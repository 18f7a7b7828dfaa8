//! Corpus sweeps: generate a deterministic family of small rings, run
//! catalog checks on each, and aggregate the outcome.
//!
//! The default corpus is every `Z/n` with `n <= 64`, every two-factor
//! product `Z/a x Z/b` with order at most 64, and every quotient
//! `Z/p[x]/(f)` with `p` in `{2, 3}` and `f` monic of degree at most 2.
//! Ring generation order is fixed, so two sweeps over the same spec
//! produce identical reports.  A ring that exceeds a resource cap
//! contributes all-skipped results; it never aborts the sweep.

use crate::classify::{classify, classify_symz, ClassReport};
use crate::error::{Error, Result};
use crate::expr::{BuiltRing, RingExpr};
use crate::ring::FiniteRing;
use crate::spectra::Analysis;
use crate::verify::{self, CheckResult};
use crate::Limits;

/// What to generate and which checks to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Include `Z/n` for every `n` in `2..=zmod_max` (none if below 2).
    pub zmod_max: u64,
    /// Include all products `Z/a x Z/b` with `2 <= a <= b` and
    /// `a * b <= product_order_cap`.
    pub products: bool,
    /// Order bound for generated products.
    pub product_order_cap: u64,
    /// For each `(p, d)`: include `Z/p[x]/(f)` for every monic `f`
    /// with `1 <= deg f <= d`.
    pub polyquot: Vec<(u64, u32)>,
    /// Catalog ids to run on every ring.
    pub check_ids: Vec<String>,
}

impl CorpusSpec {
    /// The default corpus with the full check catalog.
    pub fn default_corpus() -> CorpusSpec {
        CorpusSpec {
            zmod_max: 64,
            products: true,
            product_order_cap: 64,
            polyquot: vec![(2, 2), (3, 2)],
            check_ids: verify::check_ids()
                .iter()
                .map(|s| (*s).to_owned())
                .collect(),
        }
    }

    /// A corpus that generates nothing (useful as a CLI baseline).
    pub fn empty() -> CorpusSpec {
        CorpusSpec {
            zmod_max: 0,
            products: false,
            product_order_cap: 0,
            polyquot: Vec::new(),
            check_ids: verify::check_ids()
                .iter()
                .map(|s| (*s).to_owned())
                .collect(),
        }
    }
}

/// The rings a spec generates, in fixed order: modular rings ascending,
/// then products in lexicographic `(a, b)` order, then polynomial
/// quotients by modulus, degree, and coefficient order.
pub fn corpus_exprs(spec: &CorpusSpec) -> Vec<RingExpr> {
    let mut out = Vec::new();
    for n in 2..=spec.zmod_max.max(1) {
        out.push(RingExpr::Zmod(n));
    }
    if spec.products {
        for a in 2..=spec.product_order_cap {
            for b in a..=spec.product_order_cap {
                match a.checked_mul(b) {
                    Some(order) if order <= spec.product_order_cap => {
                        out.push(RingExpr::Product(vec![
                            RingExpr::Zmod(a),
                            RingExpr::Zmod(b),
                        ]));
                    }
                    _ => break,
                }
            }
        }
    }
    for &(p, max_deg) in &spec.polyquot {
        for deg in 1..=max_deg {
            let combos = p.pow(deg);
            for i in 0..combos {
                let mut coeffs = Vec::with_capacity(deg as usize + 1);
                let mut rest = i;
                for _ in 0..deg {
                    coeffs.push(rest % p);
                    rest /= p;
                }
                coeffs.push(1);
                out.push(RingExpr::PolyQuotient { modulus: p, coeffs });
            }
        }
    }
    out
}

/// Results for one generated ring.
#[derive(Debug, Clone)]
pub struct RingReport {
    pub label: String,
    pub order: Option<u64>,
    /// `None` when the ring could not be analyzed at all.
    pub classification: Option<ClassReport>,
    pub checks: Vec<CheckResult>,
}

/// Pass/fail tally of the purely-prime = purely-maximal sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConjectureTally {
    pub rings: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

/// Aggregated sweep results.
#[derive(Debug, Clone)]
pub struct CorpusReport {
    /// Scope statement for the conjecture sweep, always present.
    pub caveat: String,
    pub rings: Vec<RingReport>,
    pub passes: usize,
    pub fails: usize,
    pub skips: usize,
    pub conjecture: ConjectureTally,
}

/// The fixed scope statement attached to every corpus report.
pub const CONJECTURE_CAVEAT: &str = "every finite commutative ring is Gelfand, where \
purely-prime and purely-maximal ideals provably coincide; this sweep cross-validates the \
implementation and cannot decide the conjecture for general rings";

/// Run `spec` within `limits`.
///
/// Fails fast only on configuration errors (unknown check ids);
/// per-ring resource failures are recorded as skipped results.
pub fn run_corpus(spec: &CorpusSpec, limits: &Limits) -> Result<CorpusReport> {
    run_corpus_with(spec, limits, Analysis::new)
}

/// Like [`run_corpus`], but with a caller-supplied analysis builder so
/// front ends can plug in lattice caching.
pub fn run_corpus_with(
    spec: &CorpusSpec,
    limits: &Limits,
    mut build: impl FnMut(&FiniteRing, &Limits) -> Result<Analysis>,
) -> Result<CorpusReport> {
    let ids: Vec<&str> = spec.check_ids.iter().map(|s| s.as_str()).collect();
    for id in &ids {
        if verify::find_check(id).is_none() {
            return Err(Error::UnknownCheckId((*id).to_owned()));
        }
    }

    let mut rings = Vec::new();
    for expr in corpus_exprs(spec) {
        let label = expr.to_string();
        let report = match expr.build(limits) {
            Err(e) => RingReport {
                checks: verify::skipped_results(&label, &ids, &format!("resource: {e}"))?,
                label,
                order: expr.order(),
                classification: None,
            },
            Ok(BuiltRing::SymZ) => RingReport {
                checks: verify::run_checks_symz(&ids)?,
                label,
                order: None,
                classification: Some(classify_symz()),
            },
            Ok(BuiltRing::Finite(ring)) => match build(&ring, limits) {
                Err(e) => RingReport {
                    checks: verify::skipped_results(&label, &ids, &format!("resource: {e}"))?,
                    label,
                    order: expr.order(),
                    classification: None,
                },
                Ok(analysis) => RingReport {
                    checks: verify::run_checks(&analysis, &ids)?,
                    label,
                    order: expr.order(),
                    classification: Some(classify(&analysis)),
                },
            },
        };
        rings.push(report);
    }

    let mut passes = 0;
    let mut fails = 0;
    let mut skips = 0;
    let mut conjecture = ConjectureTally::default();
    for ring in &rings {
        for check in &ring.checks {
            if check.status.is_pass() {
                passes += 1;
            } else if check.status.is_fail() {
                fails += 1;
            } else {
                skips += 1;
            }
            if check.id == "P-CONJ" && !check.status.is_skipped() {
                conjecture.rings += 1;
                if check.status.is_pass() {
                    conjecture.agreements += 1;
                } else {
                    conjecture.disagreements += 1;
                }
            }
        }
    }

    Ok(CorpusReport {
        caveat: CONJECTURE_CAVEAT.to_owned(),
        rings,
        passes,
        fails,
        skips,
        conjecture,
    })
}
