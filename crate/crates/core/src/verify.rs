//! Executable check catalog for the structure theory of pure ideals.
//!
//! Each catalog entry turns one statement about pure ideals, pure
//! spectra, or ring classes into an exhaustive predicate at the scale
//! of a single finite ring: every quantifier over elements, ideals,
//! primes, or purely-prime ideals is expanded in full.  Quantifiers
//! over *arbitrary families* of ideals are bounded by
//! [`crate::Limits::family_size`] plus all principal-ideal families, and the
//! bound is echoed in the result details so a pass is never
//! overclaimed.
//!
//! A failing check always carries a concrete counterexample in its
//! details; a skipped check always carries the reason (an unmet
//! hypothesis, a vacuous quantifier, or a resource/capability limit).

use std::time::{Duration, Instant};

use crate::bits::BitSet;
use crate::classify::{classify, ClassReport};
use crate::error::{Error, Result};
use crate::hom::quotient_ring;
use crate::ideal::IdealSet;
use crate::lattice::IdealLattice;
use crate::purity::{self, idempotent_generator, is_pure, ker_pi, max_regular_ideals, pure_part};
use crate::spectra::{spp_of_hom_with, Analysis};
use crate::topology::{FinTopSpace, SpaceKind, SpaceMap};

/// Outcome of one check on one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl CheckStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail)
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, CheckStatus::Skipped(_))
    }
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

/// Result of running one catalog entry against one ring.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub ring_label: String,
    pub status: CheckStatus,
    pub details: String,
    /// Wall-clock cost; kept in memory only and deliberately excluded
    /// from serialized reports so report bytes stay deterministic.
    pub elapsed: Duration,
}

type Outcome = (CheckStatus, String);

fn pass(details: String) -> Outcome {
    (CheckStatus::Pass, details)
}

fn fail(details: String) -> Outcome {
    (CheckStatus::Fail, details)
}

fn skip(reason: String) -> Outcome {
    (CheckStatus::Skipped(reason), String::new())
}

/// One catalog entry: a stable id, a one-line statement, and the
/// executable predicate.
pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    run: fn(&Analysis) -> Outcome,
}

/// The full catalog, in fixed report order.
pub fn catalog() -> &'static [CheckDef] {
    &CATALOG
}

/// All catalog ids, in catalog order.
pub fn check_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|c| c.id).collect()
}

/// Look up a catalog entry by id.
pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    CATALOG.iter().find(|c| c.id == id)
}

/// Run one catalog entry against an analyzed ring.
pub fn run_check(analysis: &Analysis, id: &str) -> Result<CheckResult> {
    let def = find_check(id).ok_or_else(|| Error::UnknownCheckId(id.to_owned()))?;
    let start = Instant::now();
    let (status, details) = (def.run)(analysis);
    Ok(CheckResult {
        id: def.id,
        ring_label: analysis.ring().label().to_owned(),
        status,
        details,
        elapsed: start.elapsed(),
    })
}

/// Run a list of catalog entries (all of them for an empty list is
/// *not* implied; pass [`check_ids`] explicitly for that).
pub fn run_checks(analysis: &Analysis, ids: &[&str]) -> Result<Vec<CheckResult>> {
    for id in ids {
        if find_check(id).is_none() {
            return Err(Error::UnknownCheckId((*id).to_owned()));
        }
    }
    ids.iter().map(|id| run_check(analysis, id)).collect()
}

/// Run the whole catalog.
pub fn run_all(analysis: &Analysis) -> Vec<CheckResult> {
    CATALOG
        .iter()
        .map(|def| run_check(analysis, def.id).expect("catalog ids are valid"))
        .collect()
}

/// Catalog results for the symbolic ring of integers: every check is
/// skipped with a capability reason, since the symbolic backend does
/// not enumerate an ideal lattice.
pub fn run_checks_symz(ids: &[&str]) -> Result<Vec<CheckResult>> {
    skipped_results(
        "Z",
        ids,
        "unsupported backend: symbolic Z does not enumerate its ideal lattice",
    )
}

/// Uniformly skipped results (used when a ring cannot be analyzed, for
/// example because a resource cap was exceeded).
pub fn skipped_results(label: &str, ids: &[&str], reason: &str) -> Result<Vec<CheckResult>> {
    ids.iter()
        .map(|id| {
            let def = find_check(id).ok_or_else(|| Error::UnknownCheckId((*id).to_owned()))?;
            Ok(CheckResult {
                id: def.id,
                ring_label: label.to_owned(),
                status: CheckStatus::Skipped(reason.to_owned()),
                details: String::new(),
                elapsed: Duration::ZERO,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

/// All index subsets of `{0, .., count-1}` of size `2..=max_size`, in
/// lexicographic order.
fn families(count: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((prefix, next)) = stack.pop() {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        if prefix.len() == max_size {
            continue;
        }
        // Push in reverse so the traversal emits lexicographic order.
        for i in (next..count).rev() {
            let mut p = prefix.clone();
            p.push(i);
            stack.push((p, i + 1));
        }
    }
    out.sort();
    out
}

/// `U_I` over the points of the pure spectrum: the purely-prime ideals
/// *not* containing `ideal`.
fn u_set(spp: &FinTopSpace, ideal: &IdealSet) -> BitSet {
    BitSet::from_iter(
        spp.point_count(),
        spp.points()
            .iter()
            .enumerate()
            .filter(|(_, p)| !ideal.is_subset(p))
            .map(|(i, _)| i),
    )
}

/// `V_p(I)` over the points of the pure spectrum: the purely-prime
/// ideals containing `ideal`.
fn v_set(spp: &FinTopSpace, ideal: &IdealSet) -> BitSet {
    u_set(spp, ideal).complement()
}

/// Localization kernels `Ker pi_p`, aligned with `primes`.
fn kernels(primes: &[IdealSet]) -> Vec<IdealSet> {
    primes
        .iter()
        .map(|p| ker_pi(p).expect("lattice primes are prime"))
        .collect()
}

/// `Supp(I)` as a bit set over `primes`: the primes where `I` does not
/// localize to zero, i.e. `I` is not inside `Ker pi_p`.
fn supp_set(ideal: &IdealSet, primes: &[IdealSet], kers: &[IdealSet]) -> BitSet {
    BitSet::from_iter(
        primes.len(),
        (0..primes.len()).filter(|&i| !ideal.is_subset(&kers[i])),
    )
}

/// `D(f)` as a bit set over `primes`.
fn d_set(f: usize, primes: &[IdealSet]) -> BitSet {
    BitSet::from_iter(
        primes.len(),
        (0..primes.len()).filter(|&i| !primes[i].contains(f)),
    )
}

/// Pure part of every lattice ideal, aligned with the lattice order.
fn pure_parts(lattice: &IdealLattice) -> Vec<IdealSet> {
    lattice.ideals().iter().map(pure_part).collect()
}

/// Unit part of every lattice ideal, aligned with the lattice order.
fn unit_parts(lattice: &IdealLattice) -> Vec<IdealSet> {
    lattice.ideals().iter().map(purity::unit_part).collect()
}

/// Indices (into the lattice) of the maximal ideals containing `ideal`.
fn maximals_over(ideal: &IdealSet, maximals: &[IdealSet]) -> Vec<usize> {
    (0..maximals.len())
        .filter(|&i| ideal.is_subset(&maximals[i]))
        .collect()
}

/// Gate on an unmet hypothesis: `Some(outcome)` when the check must be
/// skipped.
fn require(flag: bool, report: &ClassReport, name: &str, label: &str) -> Option<Outcome> {
    if flag {
        return None;
    }
    let witness = report
        .witness_for(name)
        .map(|w| format!(" ({w})"))
        .unwrap_or_default();
    Some(skip(format!("hypothesis: ring is not {label}{witness}")))
}

/// Canonically sorted, deduplicated list of ideals.
fn sorted_ideals(mut v: Vec<IdealSet>) -> Vec<IdealSet> {
    v.sort();
    v.dedup();
    v
}

/// Render a short ideal list for details strings.
fn ideal_list(v: &[IdealSet]) -> String {
    v.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------------------
// Checks: pure ideals and the pure spectrum
// ---------------------------------------------------------------------------

fn c_l2_1(a: &Analysis) -> Outcome {
    let pure = a.lattice().pure_ideals();
    let bound = a.limits().family_size.max(2);
    for fam in families(pure.len(), bound) {
        let mut sum = pure[fam[0]].clone();
        let mut inter = pure[fam[0]].clone();
        for &i in &fam[1..] {
            sum = sum.sum(&pure[i]).expect("same ring");
            inter = inter.intersect(&pure[i]).expect("same ring");
        }
        if !is_pure(&sum) {
            return fail(format!(
                "sum of pure ideals {} is {sum}, which is not pure",
                ideal_list(&fam.iter().map(|&i| pure[i].clone()).collect::<Vec<_>>())
            ));
        }
        if !is_pure(&inter) {
            return fail(format!(
                "intersection of pure ideals {} is {inter}, which is not pure",
                ideal_list(&fam.iter().map(|&i| pure[i].clone()).collect::<Vec<_>>())
            ));
        }
    }
    for i in &pure {
        for j in &pure {
            let prod = i.product(j).expect("same ring");
            if !is_pure(&prod) {
                return fail(format!("product {i}{j} = {prod} is not pure"));
            }
            if prod != i.intersect(j).expect("same ring") {
                return fail(format!("product {i}{j} differs from the intersection"));
            }
        }
    }
    pass(format!(
        "{} pure ideals: sums and intersections of families of size <= {bound} are pure; \
         pairwise products are pure and equal the intersections",
        pure.len()
    ))
}

fn c_l2_4(a: &Analysis) -> Outcome {
    let mut maximal = 0;
    for entry in a.pure().entries() {
        if entry.purely_maximal {
            maximal += 1;
            if !entry.purely_prime {
                return fail(format!(
                    "purely-maximal ideal {} is not purely-prime",
                    entry.ideal
                ));
            }
        }
    }
    pass(format!(
        "all {maximal} purely-maximal ideals are purely-prime"
    ))
}

fn c_p2_6(a: &Analysis) -> Outcome {
    let spp = a.space(SpaceKind::Pure);
    if !spp.is_quasi_compact() {
        return fail("an open cover of the pure spectrum has no finite subcover".to_owned());
    }
    pass(format!(
        "pure spectrum with {} points and {} opens is quasi-compact",
        spp.point_count(),
        spp.opens().len()
    ))
}

fn c_t2_7(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let pure = a.lattice().pure_ideals();
    let proper: Vec<&IdealSet> = pure.iter().filter(|i| i.is_proper()).collect();
    let spp_a = a.space(SpaceKind::Pure);
    let mut quotients = 0;
    let mut compositions = 0;
    for i in &proper {
        let (b, phi) = quotient_ring(ring, i).expect("proper ideal");
        let b_analysis = match Analysis::new(&b, a.limits()) {
            Ok(x) => x,
            Err(e) => return skip(format!("resource: {e}")),
        };
        quotients += 1;
        // (i) the extension of a pure ideal is pure.
        for k in &pure {
            let images: Vec<usize> = k.elements().iter().map(|&f| phi.apply(f)).collect();
            let ext = IdealSet::generated(&b, &images);
            if !is_pure(&ext) {
                return fail(format!(
                    "extension of pure ideal {k} along the quotient by {i} is {ext}, not pure"
                ));
            }
        }
        // (ii) contractions of purely-prime ideals have purely-prime
        // pure parts.
        for p in b_analysis.pure().purely_prime() {
            let back = pure_part(&phi.preimage(&p).expect("same ring"));
            if spp_a.index_of_point(&back).is_none() {
                return fail(format!(
                    "nu of the contraction of {p} is {back}, which is not purely-prime"
                ));
            }
        }
        // (iii) the induced spectrum map is continuous.
        let spp_phi = match spp_of_hom_with(&phi, a, &b_analysis) {
            Ok(m) => m,
            Err(e) => return fail(format!("quotient by {i}: {e}")),
        };
        if !spp_phi.is_continuous() {
            return fail(format!("Spp of the quotient by {i} is not continuous"));
        }
        // (iv) contravariant composition law through a second quotient.
        for j in &proper {
            if !i.is_subset(j) || i == j {
                continue;
            }
            let j_in_b = phi.image_ideal(j).expect("same ring");
            let (c, psi) = quotient_ring(&b, &j_in_b).expect("proper image");
            let c_analysis = match Analysis::new(&c, a.limits()) {
                Ok(x) => x,
                Err(e) => return skip(format!("resource: {e}")),
            };
            let composed = phi.then(&psi).expect("composable");
            let spp_psi = match spp_of_hom_with(&psi, &b_analysis, &c_analysis) {
                Ok(m) => m,
                Err(e) => return fail(format!("second quotient by {j}: {e}")),
            };
            let spp_composed = match spp_of_hom_with(&composed, a, &c_analysis) {
                Ok(m) => m,
                Err(e) => return fail(format!("composite quotient by {j}: {e}")),
            };
            compositions += 1;
            for p in 0..c_analysis.space(SpaceKind::Pure).point_count() {
                if spp_composed.apply(p) != spp_phi.apply(spp_psi.apply(p)) {
                    return fail(format!(
                        "Spp(psi . phi) and Spp(phi) . Spp(psi) disagree for quotients by {i} then {j}"
                    ));
                }
            }
        }
    }
    pass(format!(
        "{quotients} quotient maps: pure extensions stay pure, purely-prime contractions \
         stay purely-prime, induced maps continuous; {compositions} compositions satisfy \
         Spp(psi . phi) = Spp(phi) . Spp(psi)"
    ))
}

fn c_l2_8(a: &Analysis) -> Outcome {
    let primes = a.lattice().primes();
    let kers = kernels(&primes);
    let mut pure_count = 0;
    for ideal in a.lattice().ideals() {
        let mut union_d = BitSet::empty(primes.len());
        for f in ideal.elements() {
            union_d = union_d.union(&d_set(f, &primes));
        }
        let supp = supp_set(ideal, &primes, &kers);
        if !union_d.is_subset(&supp) {
            return fail(format!(
                "union of D(f) over f in {ideal} is not inside Supp"
            ));
        }
        let equal = union_d == supp;
        let pure = is_pure(ideal);
        if pure {
            pure_count += 1;
        }
        if equal != pure {
            return fail(format!(
                "union of D(f) {} Supp({ideal}) but the ideal is {}",
                if equal {
                    "equals"
                } else {
                    "is strictly inside"
                },
                if pure { "pure" } else { "not pure" }
            ));
        }
    }
    pass(format!(
        "{} ideals: union of D(f) is contained in Supp, with equality exactly at the \
         {pure_count} pure ideals",
        a.lattice().len()
    ))
}

fn c_l2_9(a: &Analysis) -> Outcome {
    let pure = a.lattice().pure_ideals();
    let spp = a.space(SpaceKind::Pure);
    let mut pairs = 0;
    for i in &pure {
        for j in &pure {
            pairs += 1;
            let open_incl = u_set(spp, i).is_subset(&u_set(spp, j));
            let ideal_incl = i.is_subset(j);
            if open_incl != ideal_incl {
                return fail(format!(
                    "U_I <= U_J is {open_incl} but I <= J is {ideal_incl} for I = {i}, J = {j}"
                ));
            }
        }
    }
    pass(format!(
        "{pairs} ordered pairs of pure ideals: U_I <= U_J exactly when I <= J"
    ))
}

fn c_l3_1(a: &Analysis) -> Outcome {
    let spp = a.space(SpaceKind::Pure);
    let primes = a.lattice().primes();
    for p in &primes {
        let nu_p = pure_part(p);
        if spp.index_of_point(&nu_p).is_none() {
            return fail(format!("nu({p}) = {nu_p} is not purely-prime"));
        }
        let ker = ker_pi(p).expect("prime");
        if pure_part(&ker) != nu_p {
            return fail(format!(
                "nu({p}) = {nu_p} differs from nu(Ker pi_p) = {}",
                pure_part(&ker)
            ));
        }
    }
    pass(format!(
        "{} primes: nu(p) is purely-prime and equals nu(Ker pi_p)",
        primes.len()
    ))
}

fn c_c3_2(a: &Analysis) -> Outcome {
    let primes = a.lattice().primes();
    let mut pairs = 0;
    for p in &primes {
        for q in &primes {
            if p != q && p.is_subset(q) {
                pairs += 1;
                if pure_part(p) != pure_part(q) {
                    return fail(format!("p = {p} inside q = {q} but nu(p) != nu(q)"));
                }
            }
        }
    }
    if pairs == 0 {
        return skip("vacuous: no strict prime containments at finite scale".to_owned());
    }
    pass(format!(
        "{pairs} strict prime containments share pure parts"
    ))
}

fn c_l3_6(a: &Analysis) -> Outcome {
    let mut instances = 0;
    let mut excluded = 0;
    let mut example = None;
    for ideal in a.lattice().ideals() {
        let rad = ideal.radical();
        if is_pure(&rad) {
            instances += 1;
            if *ideal != rad {
                return fail(format!(
                    "sqrt({ideal}) = {rad} is pure but differs from {ideal}"
                ));
            }
        } else {
            excluded += 1;
            if example.is_none() {
                example = Some(format!("sqrt({ideal}) = {rad} is not pure"));
            }
        }
    }
    let excluded_note = match example {
        Some(e) => format!("; {excluded} excluded by hypothesis, e.g. {e}"),
        None => String::new(),
    };
    pass(format!(
        "{instances} ideals with pure radical are radical{excluded_note}"
    ))
}

fn c_l3_7(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_reduced, &report, "is_reduced", "reduced") {
        return out;
    }
    let pure = a.lattice().pure_ideals();
    for ideal in &pure {
        if *ideal != ideal.radical() {
            return fail(format!(
                "pure ideal {ideal} has radical {} in a reduced ring",
                ideal.radical()
            ));
        }
    }
    pass(format!("all {} pure ideals are radical", pure.len()))
}

fn c_t3_8(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_reduced, &report, "is_reduced", "reduced") {
        return out;
    }
    let ring = a.ring();
    let primes = a.lattice().primes();
    let kers = kernels(&primes);
    let pure = a.lattice().pure_ideals();
    for ideal in &pure {
        let supp = supp_set(ideal, &primes, &kers);
        let rhs = BitSet::from_iter(
            ring.order(),
            ring.elements()
                .filter(|&f| d_set(f, &primes).is_subset(&supp)),
        );
        if rhs != *ideal.members() {
            return fail(format!(
                "membership formula gives {} for the pure ideal {ideal}",
                IdealSet::from_bits_unchecked(ring, rhs)
            ));
        }
    }
    pass(format!(
        "{} pure ideals equal {{ f : D(f) inside Supp(I) }}",
        pure.len()
    ))
}

fn c_p3_9(a: &Analysis) -> Outcome {
    let nu = a.nu();
    if !nu.is_continuous() {
        return fail("nu pulls some open of Spp back to a non-open of Spec".to_owned());
    }
    // Cross-check the preimage formula nu^-1(U_I) = union of D(f),
    // f in I, which drives the continuity proof.
    let spec = a.space(SpaceKind::Zariski);
    let spp = a.space(SpaceKind::Pure);
    let spec_primes: Vec<IdealSet> = spec.points().to_vec();
    let pure = a.lattice().pure_ideals();
    for ideal in &pure {
        let mut union_d = BitSet::empty(spec_primes.len());
        for f in ideal.elements() {
            union_d = union_d.union(&d_set(f, &spec_primes));
        }
        if nu.preimage_of(&u_set(spp, ideal)) != union_d {
            return fail(format!(
                "nu^-1(U_I) differs from the union of D(f) over f in I = {ideal}"
            ));
        }
    }
    pass(format!(
        "nu is continuous; nu^-1(U_I) equals the union of D(f) over f in I for all {} pure ideals",
        pure.len()
    ))
}

fn c_t3_10(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let spp = a.space(SpaceKind::Pure);
    let clopens = {
        let mut c = spp.clopens();
        c.sort();
        c
    };
    let mut images: Vec<BitSet> = ring
        .idempotents()
        .iter()
        .map(|&e| u_set(spp, &IdealSet::principal(ring, e)))
        .collect();
    let image_count = images.len();
    images.sort();
    images.dedup();
    if images.len() != image_count {
        return fail("distinct idempotents share a clopen U_e".to_owned());
    }
    if images != clopens {
        return fail(format!(
            "{} idempotents map onto {} of {} clopens",
            image_count,
            images.len(),
            clopens.len()
        ));
    }
    pass(format!(
        "{image_count} idempotents correspond bijectively to {} clopens",
        clopens.len()
    ))
}

fn c_c3_11(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let nontrivial = ring
        .idempotents()
        .iter()
        .filter(|&&e| e != ring.zero() && e != ring.one())
        .count();
    let connected = a.space(SpaceKind::Pure).is_connected();
    if connected != (nontrivial == 0) {
        return fail(format!(
            "pure spectrum connected: {connected}, nontrivial idempotents: {nontrivial}"
        ));
    }
    pass(format!(
        "connected: {connected}; nontrivial idempotents: {nontrivial}"
    ))
}

fn c_p3_12(a: &Analysis) -> Outcome {
    let lambda = a.lambda();
    if !lambda.is_continuous() {
        return fail("lambda pulls some open of Sp back to a non-open of Spp".to_owned());
    }
    let full_source = lambda.source().full_set();
    let image = lambda.image_of(&full_source);
    if image.card() != lambda.target().point_count() {
        return fail(format!(
            "lambda misses {} of {} Pierce points",
            lambda.target().point_count() - image.card(),
            lambda.target().point_count()
        ));
    }
    // Re-derive the definition: lambda(P) is generated by the
    // idempotents inside P.
    for (i, p) in lambda.source().points().iter().enumerate() {
        let expected = purity::idempotent_part(p);
        if lambda.target().points()[lambda.apply(i)] != expected {
            return fail(format!("lambda({p}) differs from its idempotent part"));
        }
    }
    pass(format!(
        "lambda is continuous and surjective onto {} Pierce points",
        lambda.target().point_count()
    ))
}

fn c_l3_13(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let pure = a.lattice().pure_ideals();
    let proper: Vec<&IdealSet> = pure.iter().filter(|i| i.is_proper()).collect();
    for i in &proper {
        let (b, phi) = quotient_ring(ring, i).expect("proper ideal");
        let b_lattice = match IdealLattice::enumerate(&b, a.limits()) {
            Ok(l) => l,
            Err(e) => return skip(format!("resource: {e}")),
        };
        let got = sorted_ideals(b_lattice.pure_ideals());
        let expected = sorted_ideals(
            pure.iter()
                .filter(|j| i.is_subset(j))
                .map(|j| phi.image_ideal(j).expect("same ring"))
                .collect(),
        );
        if got != expected {
            return fail(format!(
                "pure ideals of the quotient by {i} are {{{}}}, expected images {{{}}}",
                ideal_list(&got),
                ideal_list(&expected)
            ));
        }
        let b_pure = match purity::PureIdeals::from_lattice(&b_lattice) {
            Ok(p) => p,
            Err(e) => return skip(format!("resource: {e}")),
        };
        let got_pp = sorted_ideals(b_pure.purely_prime());
        let expected_pp = sorted_ideals(
            a.pure()
                .purely_prime()
                .iter()
                .filter(|p| i.is_subset(p))
                .map(|p| phi.image_ideal(p).expect("same ring"))
                .collect(),
        );
        if got_pp != expected_pp {
            return fail(format!(
                "purely-prime ideals of the quotient by {i} do not match V_p({i})"
            ));
        }
    }
    pass(format!(
        "{} proper pure ideals: quotient pure ideals are exactly the images of pure \
         ideals over I, and Spp of the quotient matches V_p(I)",
        proper.len()
    ))
}

fn c_c3_14(a: &Analysis) -> Outcome {
    let ring = a.ring();
    let spp = a.space(SpaceKind::Pure);
    let proper: Vec<IdealSet> = a
        .lattice()
        .pure_ideals()
        .into_iter()
        .filter(|i| i.is_proper())
        .collect();
    for i in &proper {
        let (b, phi) = quotient_ring(ring, i).expect("proper ideal");
        let b_analysis = match Analysis::new(&b, a.limits()) {
            Ok(x) => x,
            Err(e) => return skip(format!("resource: {e}")),
        };
        let (closed, _) = match spp.subspace(&v_set(spp, i)) {
            Ok(s) => s,
            Err(e) => return fail(format!("V_p({i}) subspace: {e}")),
        };
        let b_spp = b_analysis.space(SpaceKind::Pure);
        let mut point_map = Vec::with_capacity(b_spp.point_count());
        for p in b_spp.points() {
            let back = pure_part(&phi.preimage(p).expect("same ring"));
            match closed.index_of_point(&back) {
                Some(idx) => point_map.push(idx),
                None => {
                    return fail(format!(
                        "Spp(pi) sends {p} to {back}, which lies outside V_p({i})"
                    ))
                }
            }
        }
        let map = match SpaceMap::new(b_spp.clone(), closed, point_map) {
            Ok(m) => m,
            Err(e) => return fail(format!("quotient by {i}: {e}")),
        };
        let cmp = map.compare();
        if !cmp.homeomorphism {
            return fail(format!(
                "Spp of the quotient by {i} is not homeomorphic to V_p({i}): \
                 continuous {}, bijective {}, open {}",
                cmp.continuous, cmp.bijective, cmp.open_map
            ));
        }
    }
    pass(format!(
        "{} proper pure ideals: Spp(A/I) is homeomorphic to V_p(I)",
        proper.len()
    ))
}

fn c_t3_16(a: &Analysis) -> Outcome {
    let spp = a.space(SpaceKind::Pure);
    let mut components = spp.components();
    components.sort();
    let max_regular = max_regular_ideals(a.ring());
    let mut expected: Vec<BitSet> = max_regular.iter().map(|m| v_set(spp, m)).collect();
    expected.sort();
    if components != expected {
        return fail(format!(
            "{} components do not match the {} closed sets V_p(M) over max-regular M",
            components.len(),
            expected.len()
        ));
    }
    // pi0(Spp) is canonically homeomorphic to the Pierce spectrum: the
    // component V_p(M) corresponds to the max-regular ideal M.
    let (pi0, _) = match spp.pi0() {
        Ok(x) => x,
        Err(e) => return fail(format!("pi0: {e}")),
    };
    let pierce = a.space(SpaceKind::Pierce);
    let mut point_map = Vec::with_capacity(pi0.point_count());
    for rep in pi0.points() {
        // The component of `rep` is V_p(M) for exactly one max-regular M.
        let comp: Vec<&IdealSet> = max_regular
            .iter()
            .filter(|m| v_set(spp, m).contains(spp.index_of_point(rep).expect("component rep")))
            .collect();
        let m = match comp.as_slice() {
            [only] => *only,
            _ => {
                return fail(format!(
                    "component of {rep} matches {} max-regular ideals",
                    comp.len()
                ))
            }
        };
        match pierce.index_of_point(m) {
            Some(idx) => point_map.push(idx),
            None => return fail(format!("max-regular ideal {m} is not a Pierce point")),
        }
    }
    let map = match SpaceMap::new(pi0, pierce.clone(), point_map) {
        Ok(m) => m,
        Err(e) => return fail(format!("pi0 to Pierce: {e}")),
    };
    if !map.compare().homeomorphism {
        return fail("pi0(Spp) is not homeomorphic to the Pierce spectrum".to_owned());
    }
    pass(format!(
        "{} components are exactly the V_p(M) over max-regular M; pi0(Spp) is \
         homeomorphic to the Pierce spectrum",
        components.len()
    ))
}

fn c_r3_18(a: &Analysis) -> Outcome {
    let purely_prime = a.pure().purely_prime();
    let purely_minimal = a.pure().purely_minimal();
    for p in &purely_prime {
        if !purely_minimal.iter().any(|q| q.is_subset(p)) {
            return fail(format!(
                "purely-prime ideal {p} contains no purely-minimal ideal"
            ));
        }
    }
    pass(format!(
        "each of {} purely-prime ideals contains one of {} purely-minimal ideals",
        purely_prime.len(),
        purely_minimal.len()
    ))
}

// ---------------------------------------------------------------------------
// Checks: Gelfand rings, pure parts, unit parts
// ---------------------------------------------------------------------------

fn c_t4_1(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_gelfand, &report, "is_gelfand", "a Gelfand ring") {
        return out;
    }
    let maximals = a.lattice().maximals();
    let got = sorted_ideals(a.pure().purely_maximal());
    let expected = sorted_ideals(
        maximals
            .iter()
            .map(|m| ker_pi(m).expect("maximal ideals are prime"))
            .collect(),
    );
    if got != expected {
        return fail(format!(
            "purely-maximal ideals {{{}}} differ from the localization kernels {{{}}}",
            ideal_list(&got),
            ideal_list(&expected)
        ));
    }
    pass(format!(
        "{} purely-maximal ideals are exactly Ker pi_m over the {} maximal ideals",
        got.len(),
        maximals.len()
    ))
}

fn c_c4_3(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_gelfand, &report, "is_gelfand", "a Gelfand ring") {
        return out;
    }
    let maximals = a.lattice().maximals();
    for ideal in a.lattice().ideals() {
        let u = purity::unit_part(ideal);
        for m in &maximals {
            if u.is_subset(m) && !ideal.is_subset(m) {
                return fail(format!(
                    "u({ideal}) = {u} lies in the maximal ideal {m} but {ideal} does not"
                ));
            }
        }
        if pure_part(ideal) != u {
            return fail(format!(
                "nu({ideal}) = {} differs from u({ideal}) = {u}",
                pure_part(ideal)
            ));
        }
    }
    pass(format!(
        "nu = u on all {} ideals, and u(I) <= m forces I <= m over {} maximal ideals",
        a.lattice().len(),
        maximals.len()
    ))
}

fn c_l4_4(a: &Analysis) -> Outcome {
    let lattice = a.lattice();
    let ideals = lattice.ideals();
    let nu = pure_parts(lattice);
    let mut pairs = 0;
    for (i, ideal_i) in ideals.iter().enumerate() {
        for (j, ideal_j) in ideals.iter().enumerate().skip(i) {
            pairs += 1;
            let prod = ideal_i.product(ideal_j).expect("same ring");
            let prod_idx = lattice
                .index_of(&prod)
                .expect("product of lattice ideals is a lattice ideal");
            let rhs = nu[i].product(&nu[j]).expect("same ring");
            if nu[prod_idx] != rhs {
                return fail(format!(
                    "nu({ideal_i} {ideal_j}) = {} but nu(I)nu(J) = {rhs}",
                    nu[prod_idx]
                ));
            }
        }
    }
    pass(format!(
        "nu(IJ) = nu(I)nu(J) for all {pairs} unordered ideal pairs"
    ))
}

/// Shared scaffold for the two eight-item characterization theorems.
/// `part` computes either the pure part or the unit part; every item
/// is evaluated independently and all must agree with the Gelfand flag.
fn characterization_items(a: &Analysis, parts: &[IdealSet]) -> Result<Vec<(&'static str, bool)>> {
    let lattice = a.lattice();
    let ideals = lattice.ideals();
    let ring = a.ring();
    let whole = IdealSet::whole(ring);
    let maximals = lattice.maximals();
    let part_of =
        |i: &IdealSet| -> &IdealSet { &parts[lattice.index_of(i).expect("lattice ideal")] };

    // Coprimality descends to parts.
    let mut coprime = true;
    'coprime: for i in ideals {
        for j in ideals {
            if i.sum(j)? == whole && part_of(i).sum(part_of(j))? != whole {
                coprime = false;
                break 'coprime;
            }
        }
    }

    // Additivity over families: all pairs, plus every principal-ideal
    // family `{ Af : f in I }`.
    let mut additive = true;
    'additive: for i in ideals {
        for j in ideals {
            if *part_of(&i.sum(j)?) != part_of(i).sum(part_of(j))? {
                additive = false;
                break 'additive;
            }
        }
        let mut principal_sum = IdealSet::zero(ring);
        for f in i.elements() {
            principal_sum = principal_sum.sum(part_of(&IdealSet::principal(ring, f)))?;
        }
        if principal_sum != *part_of(i) {
            additive = false;
            break 'additive;
        }
    }

    // Rad(I) = Rad(part(I)) for proper ideals (trivial for the whole
    // ring, where both sides are the empty intersection).
    let mut radicals = true;
    for i in ideals.iter().filter(|i| i.is_proper()) {
        if lattice.rad_of(i)? != lattice.rad_of(part_of(i))? {
            radicals = false;
            break;
        }
    }

    // Distinct maximal ideals have coprime parts.
    let mut max_coprime = true;
    'maxpairs: for m in &maximals {
        for m2 in &maximals {
            if m != m2 && part_of(m).sum(part_of(m2))? != whole {
                max_coprime = false;
                break 'maxpairs;
            }
        }
    }

    // part(I) <= m forces I <= m.
    let mut descent = true;
    'descent: for i in ideals {
        for m in &maximals {
            if part_of(i).is_subset(m) && !i.is_subset(m) {
                descent = false;
                break 'descent;
            }
        }
    }

    // Max(A) cap V(I) = Max(A) cap V(part(I)).
    let mut traces = true;
    for i in ideals {
        if maximals_over(i, &maximals) != maximals_over(part_of(i), &maximals) {
            traces = false;
            break;
        }
    }

    // Max(A) -> Spp(A), m -> part(m), is a homeomorphism (with Max
    // carrying the induced Zariski topology).
    let spec = a.space(SpaceKind::Zariski);
    let spp = a.space(SpaceKind::Pure);
    let max_bits = BitSet::from_iter(
        spec.point_count(),
        (0..spec.point_count()).filter(|&i| spec.points()[i].is_maximal()),
    );
    let (max_space, kept) = spec.subspace(&max_bits)?;
    let mut iso = true;
    let mut point_map = Vec::with_capacity(kept.len());
    for &old in &kept {
        match spp.index_of_point(part_of(&spec.points()[old])) {
            Some(idx) => point_map.push(idx),
            None => {
                // The part of a maximal ideal is not even purely-prime:
                // the map into Spp is not defined, so the item fails.
                iso = false;
                break;
            }
        }
    }
    if iso {
        iso = SpaceMap::new(max_space, spp.clone(), point_map)?
            .compare()
            .homeomorphism;
    }

    Ok(vec![
        ("coprime pairs descend", coprime),
        ("additive over families", additive),
        ("Rad(I) = Rad(part)", radicals),
        ("distinct maximals coprime", max_coprime),
        ("part(I) <= m forces I <= m", descent),
        ("Max traces agree", traces),
        ("Max -> Spp iso", iso),
    ])
}

fn characterization_outcome(a: &Analysis, parts: Vec<IdealSet>, part_name: &str) -> Outcome {
    let report = classify(a);
    let gelfand = report.is_gelfand;
    let items = match characterization_items(a, &parts) {
        Ok(items) => items,
        Err(e) => return skip(format!("resource: {e}")),
    };
    let bound = a.limits().family_size.max(2);
    let disagreeing: Vec<&str> = items
        .iter()
        .filter(|(_, v)| *v != gelfand)
        .map(|(n, _)| *n)
        .collect();
    if !disagreeing.is_empty() {
        return fail(format!(
            "Gelfand = {gelfand} but these {part_name} items disagree: {}",
            disagreeing.join("; ")
        ));
    }
    pass(format!(
        "Gelfand = {gelfand}; all 7 {part_name} items agree \
         (families: pairs up to size {bound} plus principal families)"
    ))
}

fn c_t4_6(a: &Analysis) -> Outcome {
    characterization_outcome(a, pure_parts(a.lattice()), "pure-part")
}

fn c_c4_7(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_gelfand, &report, "is_gelfand", "a Gelfand ring") {
        return out;
    }
    let ring = a.ring();
    let pure = a.lattice().pure_ideals();
    for ideal in &pure {
        let mut total = IdealSet::zero(ring);
        for f in ideal.elements() {
            total = total
                .sum(&pure_part(&IdealSet::principal(ring, f)))
                .expect("same ring");
        }
        if total != *ideal {
            return fail(format!(
                "sum of nu(Af) over f in {ideal} is {total}, not the ideal itself"
            ));
        }
    }
    pass(format!(
        "{} pure ideals equal the sum of nu(Af) over their elements",
        pure.len()
    ))
}

fn c_c4_8(a: &Analysis) -> Outcome {
    let zero_dimensional = a.lattice().krull_dimension() == 0;
    let cmp = a.nu().compare();
    if zero_dimensional != cmp.homeomorphism {
        return fail(format!(
            "Krull dimension {} but nu : Spec -> Spp homeomorphism is {}",
            a.lattice().krull_dimension(),
            cmp.homeomorphism
        ));
    }
    pass(format!(
        "Krull dimension {}; nu : Spec -> Spp is a homeomorphism: {}",
        a.lattice().krull_dimension(),
        cmp.homeomorphism
    ))
}

fn c_t4_9(a: &Analysis) -> Outcome {
    characterization_outcome(a, unit_parts(a.lattice()), "unit-part")
}

fn c_p4_10(a: &Analysis) -> Outcome {
    let lattice = a.lattice();
    let maximals = lattice.maximals();
    for ideal in lattice.ideals() {
        let mut inter = IdealSet::whole(a.ring());
        for m in maximals.iter().filter(|m| ideal.is_subset(m)) {
            inter = inter.intersect(&purity::unit_part(m)).expect("same ring");
        }
        if purity::unit_part(ideal) != inter {
            return fail(format!(
                "u({ideal}) = {} differs from the intersection {inter} of u(m) over \
                 maximal ideals containing it",
                purity::unit_part(ideal)
            ));
        }
    }
    pass(format!(
        "u(I) equals the intersection of u(m) over maximal ideals above I, \
         for all {} ideals",
        lattice.len()
    ))
}

// ---------------------------------------------------------------------------
// Checks: mp-rings, p.p. rings, the conjecture, finite generation
// ---------------------------------------------------------------------------

fn c_l5_1(a: &Analysis) -> Outcome {
    let pure = a.lattice().pure_ideals();
    let mut pairs = 0;
    for i in &pure {
        for j in &pure {
            if i.radical() == j.radical() {
                pairs += 1;
                if i != j {
                    return fail(format!(
                        "pure ideals {i} and {j} share the radical {} but differ",
                        i.radical()
                    ));
                }
            }
        }
    }
    pass(format!(
        "{pairs} pure-ideal pairs with equal radicals are equal"
    ))
}

fn c_t5_2(a: &Analysis) -> Outcome {
    let report = classify(a);
    let minimal = a.lattice().minimal_primes();
    let criterion = minimal.iter().all(|p| *p == pure_part(p).radical());
    if report.is_mp != criterion {
        return fail(format!(
            "mp = {} but p = sqrt(nu(p)) over minimal primes = {criterion}",
            report.is_mp
        ));
    }
    pass(format!(
        "mp = {}; p = sqrt(nu(p)) holds for all {} minimal primes: {criterion}",
        report.is_mp,
        minimal.len()
    ))
}

fn c_t5_3(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_mp, &report, "is_mp", "an mp-ring") {
        return out;
    }
    let minimal = a.lattice().minimal_primes();
    let got = sorted_ideals(a.pure().purely_maximal());
    let expected = sorted_ideals(minimal.iter().map(pure_part).collect());
    if got != expected {
        return fail(format!(
            "purely-maximal ideals {{{}}} differ from nu of the minimal primes {{{}}}",
            ideal_list(&got),
            ideal_list(&expected)
        ));
    }
    let mut detail = format!(
        "{} purely-maximal ideals are exactly nu(p) over the {} minimal primes",
        got.len(),
        minimal.len()
    );
    if report.is_reduced {
        let min_sorted = sorted_ideals(minimal);
        if got != min_sorted {
            return fail(format!(
                "reduced mp-ring: purely-maximal ideals {{{}}} differ from the minimal \
                 primes {{{}}}",
                ideal_list(&got),
                ideal_list(&min_sorted)
            ));
        }
        detail.push_str("; reduced, so they are the minimal primes themselves");
    }
    pass(detail)
}

fn c_t5_5(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_reduced, &report, "is_reduced", "reduced") {
        return out;
    }
    if let Some(out) = require(report.is_mp, &report, "is_mp", "an mp-ring") {
        return out;
    }
    for entry in a.pure().entries() {
        if entry.purely_prime && !entry.purely_maximal {
            return fail(format!(
                "purely-prime ideal {} is not purely-maximal",
                entry.ideal
            ));
        }
    }
    pass(format!(
        "all {} purely-prime ideals are purely-maximal",
        a.pure().purely_prime().len()
    ))
}

fn c_t5_6(a: &Analysis) -> Outcome {
    let report = classify(a);
    let reduced_mp = report.is_reduced && report.is_mp;
    let as_sets =
        sorted_ideals(a.lattice().minimal_primes()) == sorted_ideals(a.pure().purely_prime());
    let as_spaces = a
        .space(SpaceKind::FlatMin)
        .same_space(a.space(SpaceKind::Pure));
    if reduced_mp != as_spaces || as_spaces != as_sets {
        return fail(format!(
            "reduced mp = {reduced_mp}; Min = Spp as spaces: {as_spaces}; as sets: {as_sets}"
        ));
    }
    pass(format!(
        "reduced mp = {reduced_mp}; Min(A) = Spp(A) as sets and as topological \
         spaces: {as_spaces}"
    ))
}

fn c_t5_7(a: &Analysis) -> Outcome {
    let report = classify(a);
    if let Some(out) = require(report.is_reduced, &report, "is_reduced", "reduced") {
        return out;
    }
    if let Some(out) = require(report.is_mp, &report, "is_mp", "an mp-ring") {
        return out;
    }
    let spec = a.space(SpaceKind::Zariski);
    let min_bits = BitSet::from_iter(
        spec.point_count(),
        (0..spec.point_count()).filter(|&i| {
            a.lattice()
                .minimal_primes()
                .iter()
                .any(|p| p == &spec.points()[i])
        }),
    );
    let (zariski_min, _) = match spec.subspace(&min_bits) {
        Ok(s) => s,
        Err(e) => return skip(format!("resource: {e}")),
    };
    let same = zariski_min.same_space(a.space(SpaceKind::Pure));
    if report.is_pp_ring != same {
        return fail(format!(
            "p.p. = {} but the induced Zariski topology on Min equals the pure \
             topology: {same}",
            report.is_pp_ring
        ));
    }
    pass(format!(
        "p.p. = {}; induced Zariski topology on Min(A) = Spp(A) equals the pure \
         topology: {same}",
        report.is_pp_ring
    ))
}

fn c_conj(a: &Analysis) -> Outcome {
    let prime = sorted_ideals(a.pure().purely_prime());
    let maximal = sorted_ideals(a.pure().purely_maximal());
    if prime != maximal {
        return fail(format!(
            "purely-prime ideals {{{}}} differ from purely-maximal ideals {{{}}}",
            ideal_list(&prime),
            ideal_list(&maximal)
        ));
    }
    pass(format!(
        "purely-prime = purely-maximal ({} ideals); caveat: every finite commutative \
         ring is Gelfand, where this identity is a theorem, so the sweep validates \
         the implementation and cannot decide the general conjecture",
        prime.len()
    ))
}

fn c_t6_2(a: &Analysis) -> Outcome {
    // Hypothesis at finite scale: every purely-maximal ideal is
    // finitely generated (witnessed by an idempotent generator).
    for m in a.pure().purely_maximal() {
        if let Err(e) = idempotent_generator(&m) {
            return fail(format!("purely-maximal ideal {m} is not principal: {e}"));
        }
    }
    // Conclusion: every pure ideal is finitely generated, here with a
    // unique idempotent generator.
    let pure = a.lattice().pure_ideals();
    for ideal in &pure {
        match idempotent_generator(ideal) {
            Ok(e) => {
                if IdealSet::principal(a.ring(), e) != *ideal {
                    return fail(format!(
                        "idempotent {} does not generate {ideal}",
                        a.ring().elem_name(e)
                    ));
                }
            }
            Err(e) => {
                return fail(format!(
                    "pure ideal {ideal} has no unique idempotent generator: {e}"
                ))
            }
        }
    }
    pass(format!(
        "{} purely-maximal ideals finitely generated; every one of {} pure ideals \
         equals Ae for a unique idempotent e",
        a.pure().purely_maximal().len(),
        pure.len()
    ))
}

static CATALOG: [CheckDef; 35] = [
    CheckDef {
        id: "P-L2.1",
        summary: "pure ideals are stable under finite sums, intersections, and products",
        run: c_l2_1,
    },
    CheckDef {
        id: "P-L2.4",
        summary: "every purely-maximal ideal is purely-prime",
        run: c_l2_4,
    },
    CheckDef {
        id: "P-P2.6",
        summary: "the pure spectrum is quasi-compact",
        run: c_p2_6,
    },
    CheckDef {
        id: "P-T2.7",
        summary:
            "ring maps extend pure ideals, contract purely-primes, and act functorially on Spp",
        run: c_t2_7,
    },
    CheckDef {
        id: "P-L2.8",
        summary: "union of D(f) over f in I sits inside Supp(I), with equality iff I is pure",
        run: c_l2_8,
    },
    CheckDef {
        id: "P-L2.9",
        summary: "U_I <= U_J exactly when I <= J for pure ideals",
        run: c_l2_9,
    },
    CheckDef {
        id: "P-L3.1",
        summary: "nu(p) is purely-prime and equals nu(Ker pi_p)",
        run: c_l3_1,
    },
    CheckDef {
        id: "P-C3.2",
        summary: "nested primes share the same pure part",
        run: c_c3_2,
    },
    CheckDef {
        id: "P-L3.6",
        summary: "an ideal whose radical is pure equals its radical",
        run: c_l3_6,
    },
    CheckDef {
        id: "P-L3.7",
        summary: "pure ideals of a reduced ring are radical",
        run: c_l3_7,
    },
    CheckDef {
        id: "P-T3.8",
        summary: "in a reduced ring a pure ideal is { f : D(f) inside Supp(I) }",
        run: c_t3_8,
    },
    CheckDef {
        id: "P-P3.9",
        summary: "the pure part map nu : Spec -> Spp is continuous",
        run: c_p3_9,
    },
    CheckDef {
        id: "P-T3.10",
        summary: "idempotents biject with the clopens of the pure spectrum via e -> U_e",
        run: c_t3_10,
    },
    CheckDef {
        id: "P-C3.11",
        summary: "the pure spectrum is connected iff the ring has no nontrivial idempotents",
        run: c_c3_11,
    },
    CheckDef {
        id: "P-P3.12",
        summary: "lambda : Spp -> Sp is continuous and surjective",
        run: c_p3_12,
    },
    CheckDef {
        id: "P-L3.13",
        summary: "pure ideals of A/I are exactly the J/I for pure J over I",
        run: c_l3_13,
    },
    CheckDef {
        id: "P-C3.14",
        summary: "Spp(A/I) is homeomorphic to V_p(I) for pure I",
        run: c_c3_14,
    },
    CheckDef {
        id: "P-T3.16",
        summary: "components of Spp are the V_p(M) over max-regular M, and pi0(Spp) = Sp",
        run: c_t3_16,
    },
    CheckDef {
        id: "P-R3.18",
        summary: "every purely-prime ideal contains a purely-minimal ideal",
        run: c_r3_18,
    },
    CheckDef {
        id: "P-T4.1",
        summary: "purely-maximal ideals of a Gelfand ring are the kernels Ker pi_m",
        run: c_t4_1,
    },
    CheckDef {
        id: "P-C4.3",
        summary: "on a Gelfand ring u(I) <= m forces I <= m, and nu = u",
        run: c_c4_3,
    },
    CheckDef {
        id: "P-L4.4",
        summary: "nu(IJ) = nu(I)nu(J) for all ideals",
        run: c_l4_4,
    },
    CheckDef {
        id: "P-T4.6",
        summary: "the eight pure-part characterizations of Gelfand rings agree",
        run: c_t4_6,
    },
    CheckDef {
        id: "P-C4.7",
        summary: "a pure ideal of a Gelfand ring is the sum of nu(Af) over its elements",
        run: c_c4_7,
    },
    CheckDef {
        id: "P-C4.8",
        summary: "a ring is zero-dimensional iff nu : Spec -> Spp is a homeomorphism",
        run: c_c4_8,
    },
    CheckDef {
        id: "P-T4.9",
        summary: "the eight unit-part characterizations of Gelfand rings agree",
        run: c_t4_9,
    },
    CheckDef {
        id: "P-P4.10",
        summary: "u(I) is the intersection of u(m) over maximal ideals containing I",
        run: c_p4_10,
    },
    CheckDef {
        id: "P-L5.1",
        summary: "pure ideals with equal radicals are equal",
        run: c_l5_1,
    },
    CheckDef {
        id: "P-T5.2",
        summary: "a ring is mp iff p = sqrt(nu(p)) for every minimal prime p",
        run: c_t5_2,
    },
    CheckDef {
        id: "P-T5.3/C5.4",
        summary: "purely-maximal ideals of an mp-ring are the nu(p) over minimal primes",
        run: c_t5_3,
    },
    CheckDef {
        id: "P-T5.5",
        summary: "purely-prime ideals of a reduced mp-ring are purely-maximal",
        run: c_t5_5,
    },
    CheckDef {
        id: "P-T5.6",
        summary: "a ring is reduced mp iff Min(A) = Spp(A) as topological spaces",
        run: c_t5_6,
    },
    CheckDef {
        id: "P-T5.7",
        summary:
            "a reduced mp-ring is p.p. iff the pure and induced Zariski topologies agree on Min",
        run: c_t5_7,
    },
    CheckDef {
        id: "P-CONJ",
        summary: "purely-prime ideals coincide with purely-maximal ideals",
        run: c_conj,
    },
    CheckDef {
        id: "P-T6.2",
        summary: "finitely generated purely-maximal ideals force all pure ideals to be principal",
        run: c_t6_2,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_product, build_zmod};
    use crate::Limits;

    fn analyze(n: u64) -> Analysis {
        let r = build_zmod(n, &Limits::default()).unwrap();
        Analysis::new(&r, &Limits::default()).unwrap()
    }

    #[test]
    fn catalog_has_35_distinct_entries() {
        let ids = check_ids();
        assert_eq!(ids.len(), 35);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 35);
    }

    #[test]
    fn unknown_check_id_is_rejected() {
        let a = analyze(4);
        assert!(matches!(
            run_check(&a, "P-NOPE"),
            Err(Error::UnknownCheckId(_))
        ));
    }

    #[test]
    fn grothendieck_counts_on_z12() {
        let a = analyze(12);
        let r = run_check(&a, "P-T3.10").unwrap();
        assert!(r.status.is_pass());
        assert_eq!(
            r.details,
            "4 idempotents correspond bijectively to 4 clopens"
        );
    }

    #[test]
    fn radical_hypothesis_records_negative_instance_on_z4() {
        let a = analyze(4);
        let r = run_check(&a, "P-L3.6").unwrap();
        assert!(r.status.is_pass());
        assert!(r.details.contains("sqrt({0}) = {0, 2} is not pure"));
    }

    #[test]
    fn chain_constancy_is_vacuous_at_finite_scale() {
        let a = analyze(12);
        let r = run_check(&a, "P-C3.2").unwrap();
        assert_eq!(
            r.status,
            CheckStatus::Skipped("vacuous: no strict prime containments at finite scale".into())
        );
    }

    #[test]
    fn reduced_hypothesis_gates_z4() {
        let a = analyze(4);
        let r = run_check(&a, "P-L3.7").unwrap();
        match r.status {
            CheckStatus::Skipped(reason) => {
                assert!(reason.contains("not reduced"), "{reason}");
                assert!(reason.contains("nilpotent 2"), "{reason}");
            }
            other => panic!("expected skip, got {other}"),
        }
    }

    #[test]
    fn conjecture_passes_on_a_field_with_trivial_spectrum() {
        let a = analyze(5);
        let r = run_check(&a, "P-CONJ").unwrap();
        assert!(r.status.is_pass());
        assert!(r
            .details
            .starts_with("purely-prime = purely-maximal (1 ideals)"));
        assert!(r.details.contains("caveat"));
    }

    #[test]
    fn whole_catalog_on_z12_has_no_failures() {
        let a = analyze(12);
        let results = run_all(&a);
        assert_eq!(results.len(), 35);
        for r in &results {
            assert!(!r.status.is_fail(), "{}: {}", r.id, r.details);
        }
        let skipped: Vec<&str> = results
            .iter()
            .filter(|r| r.status.is_skipped())
            .map(|r| r.id)
            .collect();
        // Only the vacuous chain check and the reduced-gated checks skip
        // on Z/12.
        assert_eq!(
            skipped,
            vec!["P-C3.2", "P-L3.7", "P-T3.8", "P-T5.5", "P-T5.7"]
        );
    }

    #[test]
    fn whole_catalog_on_a_product_of_fields() {
        let limits = Limits::default();
        let r = build_product(
            &[
                build_zmod(4, &limits).unwrap(),
                build_zmod(3, &limits).unwrap(),
            ],
            &limits,
        )
        .unwrap();
        let a = Analysis::new(&r, &limits).unwrap();
        for res in run_all(&a) {
            assert!(!res.status.is_fail(), "{}: {}", res.id, res.details);
        }
    }

    #[test]
    fn symz_results_are_skipped_with_reasons() {
        let ids = check_ids();
        let results = run_checks_symz(&ids).unwrap();
        assert_eq!(results.len(), 35);
        for r in &results {
            assert!(r.status.is_skipped());
            assert_eq!(r.ring_label, "Z");
        }
    }

    #[test]
    fn family_enumeration_is_lexicographic_and_bounded() {
        assert_eq!(
            families(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(families(3, 3).len(), 3 + 1);
        assert!(families(2, 5).iter().all(|f| f.len() <= 2));
    }
}
