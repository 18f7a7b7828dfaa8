//! Acceptance suite: ten release gates, one test per criterion, each
//! ending in a single `acceptance N (...): pass` line.  Tolerances are
//! pinned in the asserts (exact equality everywhere; wall-clock caps of
//! 30 s and 120 s on the two timed criteria).  Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use pure_spectra::classify::classify_symz;
use pure_spectra::corpus::{corpus_exprs, run_corpus, CorpusSpec};
use pure_spectra::expr::{BuiltRing, RingExpr};
use pure_spectra::ideal::IdealSet;
use pure_spectra::lattice::IdealLattice;
use pure_spectra::purity::{is_pure, pure_part, pure_part_via_lattice, PureIdeals};
use pure_spectra::ring::{build_zmod, FiniteRing};
use pure_spectra::spectra::Analysis;
use pure_spectra::symz::ZIdeal;
use pure_spectra::topology::SpaceKind;
use pure_spectra::verify::run_check;
use pure_spectra::Limits;
use pure_spectra_cli::report::corpus_report_json;

fn conclude(n: u32, title: &str) {
    println!("acceptance {n} ({title}): pass");
}

fn limits() -> Limits {
    Limits::default()
}

fn default_finite_exprs() -> Vec<RingExpr> {
    corpus_exprs(&CorpusSpec::default_corpus())
}

fn build_finite(expr: &RingExpr) -> FiniteRing {
    match expr.build(&limits()).expect("default corpus builds") {
        BuiltRing::Finite(ring) => ring,
        BuiltRing::SymZ => panic!("default corpus contains only finite rings"),
    }
}

/// Analyses for the whole default corpus, shared by the untimed
/// criteria.
fn corpus_analyses() -> &'static [(String, Analysis)] {
    static CORPUS: OnceLock<Vec<(String, Analysis)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        default_finite_exprs()
            .iter()
            .map(|expr| {
                let ring = build_finite(expr);
                let analysis = Analysis::new(&ring, &limits()).expect("corpus analysis");
                (expr.to_string(), analysis)
            })
            .collect()
    })
}

fn assert_check_passes_corpus_wide(id: &str) {
    for (label, analysis) in corpus_analyses() {
        let result = run_check(analysis, id).expect("known check id");
        assert!(
            result.status.is_pass(),
            "{id} on {label}: {} {}",
            result.status,
            result.details
        );
    }
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Criterion 1: Spp(Z/m) = { p^c Z/m : p^c || m } for every m in
/// 2..=200, exactly, in under 30 seconds.
#[test]
fn criterion_1_spp_formula_for_modular_rings_to_200() {
    let started = Instant::now();
    let l = limits();
    for m in 2u64..=200 {
        let ring = build_zmod(m, &l).unwrap();
        let pure = PureIdeals::enumerate(&ring, &l).unwrap();
        let mut got: Vec<Vec<usize>> = pure.purely_prime().iter().map(|p| p.elements()).collect();
        got.sort();
        let mut expected: Vec<Vec<usize>> = factorize(m)
            .into_iter()
            .map(|(p, e)| {
                let q = p.pow(e);
                (0..m).filter(|x| x % q == 0).map(|x| x as usize).collect()
            })
            .collect();
        expected.sort();
        assert_eq!(got, expected, "Spp(Z/{m}) deviates from the formula");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "criterion 1 took {elapsed:?}, cap is 30 s"
    );
    conclude(1, "Spp(Z/m) prime-power formula, m up to 200");
}

/// Criterion 2: the fixed-point pure part equals the brute-force
/// largest-pure-sub-ideal computation on every ideal of every default
/// corpus ring, exactly, in under 2 minutes.
#[test]
fn criterion_2_pure_part_modes_agree_on_the_default_corpus() {
    let started = Instant::now();
    let l = limits();
    let mut ideals_checked = 0usize;
    for expr in default_finite_exprs() {
        let ring = build_finite(&expr);
        let lattice = IdealLattice::enumerate(&ring, &l).unwrap();
        for ideal in lattice.ideals() {
            let fixed_point = pure_part(ideal);
            let brute = pure_part_via_lattice(ideal, &lattice).unwrap();
            assert_eq!(
                fixed_point, brute,
                "pure part modes disagree on {ideal} in {expr}"
            );
            ideals_checked += 1;
        }
    }
    assert_eq!(ideals_checked, 989, "default corpus ideal count drifted");
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "criterion 2 took {elapsed:?}, cap is 120 s"
    );
    conclude(2, "pure-part fixed point equals brute force corpus-wide");
}

/// Criterion 3: idempotents biject with clopens of Spp via e -> U_e on
/// every default corpus ring.
#[test]
fn criterion_3_grothendieck_bijection_corpus_wide() {
    assert_check_passes_corpus_wide("P-T3.10");
    assert_eq!(corpus_analyses().len(), 161);
    conclude(3, "idempotent/clopen bijection corpus-wide");
}

/// Criterion 4: both eight-item Gelfand characterizations hold, and
/// nu = u on all ideals, on every default corpus ring.
#[test]
fn criterion_4_gelfand_equivalence_battery() {
    assert_check_passes_corpus_wide("P-T4.6");
    assert_check_passes_corpus_wide("P-T4.9");
    assert_check_passes_corpus_wide("P-C4.3");
    conclude(4, "Gelfand pure/unit-part batteries and nu = u");
}

/// Criterion 5: for every reduced corpus ring, Min(A) with the induced
/// flat topology is Spp(A) with the pure topology — the same points and
/// the same opens.
#[test]
fn criterion_5_mp_duality_on_reduced_rings() {
    let mut reduced = 0usize;
    for (label, analysis) in corpus_analyses() {
        if !IdealSet::zero(analysis.ring()).radical().is_zero() {
            continue;
        }
        reduced += 1;
        let min = analysis.space(SpaceKind::FlatMin);
        let spp = analysis.space(SpaceKind::Pure);
        let mut min_points: Vec<Vec<usize>> = min.points().iter().map(|p| p.elements()).collect();
        min_points.sort();
        let mut spp_points: Vec<Vec<usize>> = spp.points().iter().map(|p| p.elements()).collect();
        spp_points.sort();
        assert_eq!(min_points, spp_points, "{label}: point sets differ");
        assert!(
            min.same_space(spp),
            "{label}: open families differ between Min and Spp"
        );
    }
    assert!(reduced >= 30, "only {reduced} reduced rings in the corpus");
    conclude(5, "Min(A) = Spp(A) as spaces on reduced rings");
}

/// Criterion 6: Spp(A/I) is homeomorphic to V_p(I) for every pure ideal
/// I of every default corpus ring.
#[test]
fn criterion_6_quotient_homeomorphism_corpus_wide() {
    assert_check_passes_corpus_wide("P-C3.14");
    conclude(6, "Spp(A/I) homeomorphic to V_p(I) corpus-wide");
}

/// Criterion 7: the two negative anchors — sqrt(0) in Z/4 is not pure,
/// and in Z the pure parts of 2Z and 3Z sum to 0 while 2Z + 3Z = Z,
/// with Z classified as not Gelfand.
#[test]
fn criterion_7_negative_regression_anchors() {
    let l = limits();
    let z4 = build_zmod(4, &l).unwrap();
    let radical = IdealSet::zero(&z4).radical();
    assert_eq!(radical.elements(), vec![0, 2]);
    assert!(!is_pure(&radical), "sqrt(0) in Z/4 must not be pure");
    let analysis = Analysis::new(&z4, &l).unwrap();
    let check = run_check(&analysis, "P-L3.6").unwrap();
    assert!(check.status.is_pass());
    assert!(
        check.details.contains("is not pure"),
        "details must exhibit the non-pure radical: {}",
        check.details
    );

    let two = ZIdeal::new(2);
    let three = ZIdeal::new(3);
    assert_eq!(two.pure_part().sum(three.pure_part()), ZIdeal::zero());
    assert_eq!(two.sum(three), ZIdeal::whole());
    assert!(
        !classify_symz().is_gelfand,
        "Z must classify as not Gelfand"
    );
    conclude(7, "negative anchors: Z/4 radical and symbolic Z");
}

/// Criterion 8: purely-prime equals purely-maximal on every corpus
/// ring, and the report states the Gelfand-collapse caveat.
#[test]
fn criterion_8_conjecture_sweep_with_caveat() {
    let mut spec = CorpusSpec::default_corpus();
    spec.check_ids = vec!["P-CONJ".to_owned()];
    let report = run_corpus(&spec, &limits()).unwrap();
    assert_eq!(report.rings.len(), 161);
    assert_eq!(report.conjecture.rings, 161);
    assert_eq!(report.conjecture.agreements, 161);
    assert_eq!(report.conjecture.disagreements, 0);
    assert!(
        report.caveat.contains("cannot decide the conjecture"),
        "corpus report must carry the caveat"
    );
    for ring in &report.rings {
        for check in &ring.checks {
            assert!(check.status.is_pass(), "{}: {}", ring.label, check.status);
            assert!(
                check.details.contains("caveat"),
                "{}: details must restate the caveat",
                ring.label
            );
        }
    }
    conclude(8, "conjecture sweep agrees corpus-wide, caveat stated");
}

/// Criterion 9: every pure ideal of every corpus ring is Ae for a
/// unique idempotent e.
#[test]
fn criterion_9_idempotent_generator_invariant() {
    assert_check_passes_corpus_wide("P-T6.2");
    conclude(9, "pure ideals are uniquely idempotent-generated");
}

/// Criterion 10: two full default-corpus runs serialize to identical
/// bytes.
#[test]
fn criterion_10_corpus_reports_are_deterministic() {
    let spec = CorpusSpec::default_corpus();
    let l = limits();
    let first = run_corpus(&spec, &l).unwrap();
    let second = run_corpus(&spec, &l).unwrap();
    let bytes_a = pure_spectra_cli::report::render(&corpus_report_json(&first));
    let bytes_b = pure_spectra_cli::report::render(&corpus_report_json(&second));
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b, "corpus report bytes differ between runs");
    conclude(10, "byte-identical corpus reports");
}
