//! `pure-spectra`: pure ideals, pure spectra, and theorem checks for
//! finite commutative rings, from the command line.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pure_spectra::classify::{classify, classify_symz, ClassReport};
use pure_spectra::corpus::{run_corpus_with, CorpusReport, CorpusSpec};
use pure_spectra::expr::{BuiltRing, RingExpr};
use pure_spectra::ideal::IdealSet;
use pure_spectra::purity::idempotent_generator;
use pure_spectra::ring::FiniteRing;
use pure_spectra::spectra::Analysis;
use pure_spectra::topology::SpaceKind;
use pure_spectra::verify::{self, CheckResult};
use pure_spectra::{Error, Limits};
use pure_spectra_cli::cache::LatticeCache;
use pure_spectra_cli::parse::parse_ring_expr;
use pure_spectra_cli::report;

/// Exit codes: 0 success, 1 check failure, 2 parse/config error,
/// 3 resource cap exceeded.
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pure-spectra",
    version,
    about = "Pure ideals, pure spectra, and theorem checks for finite commutative rings",
    after_help = "Ring expressions: Z | Z/n | Z/p[x]/(f) | products joined by 'x' or '*', \
e.g. \"Z/12\", \"Z/2 x Z/3\", \"Z/2[x]/(x^2+x+1)\".\n\
Exit codes: 1 = a check failed, 2 = parse/config error, 3 = resource cap exceeded."
)]
struct Cli {
    /// Cache directory for enumerated ideal lattices (defaults to
    /// $PURE_SPECTRA_CACHE if set).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a ring and print the requested section.
    Ring {
        /// Ring expression, e.g. "Z/12" or "Z/2 x Z/3".
        expr: String,
        /// Which section to print.
        #[arg(long, value_enum, default_value_t = Show::All)]
        show: Show,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run theorem checks from the catalog against one ring.
    Verify {
        /// Ring expression.
        expr: String,
        /// Comma-separated check ids, or "all".
        #[arg(long, default_value = "all", value_delimiter = ',')]
        checks: Vec<String>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Sweep a generated ring corpus and aggregate check results.
    Corpus {
        /// Include Z/n for every n from 2 up to this bound.
        #[arg(long, default_value_t = 64, value_name = "N")]
        zmod_max: u64,
        /// Also include all products of two Z/a factors with order <= 64.
        #[arg(long)]
        products: bool,
        /// Include every monic polynomial quotient Z/p[x]/(f) with
        /// deg f = d, written p:d (repeatable).
        #[arg(long, value_name = "P:D")]
        polyquot: Vec<String>,
        /// Comma-separated check ids, or "all".
        #[arg(long, default_value = "all", value_delimiter = ',')]
        checks: Vec<String>,
        /// Write the full JSON report here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Sweep purely-prime = purely-maximal across a corpus.
    Conjecture {
        /// Include Z/n for every n from 2 up to this bound.
        #[arg(long, default_value_t = 64, value_name = "N")]
        zmod_max: u64,
        /// Also include all products of two Z/a factors with order <= 64.
        #[arg(long)]
        products: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Ideals,
    Pure,
    Spectra,
    Classify,
    All,
}

/// A failure that already knows its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::OrderCapExceeded { .. } | Error::IdealLatticeTooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_CONFIG,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: EXIT_CONFIG,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limits = Limits::default();
    let cache = match cli
        .cache
        .or_else(|| std::env::var_os("PURE_SPECTRA_CACHE").map(PathBuf::from))
    {
        Some(dir) => Some(LatticeCache::new(dir)?),
        None => None,
    };

    match cli.cmd {
        Cmd::Ring { expr, show, json } => cmd_ring(&expr, show, json, &limits, cache.as_ref()),
        Cmd::Verify { expr, checks, json } => {
            cmd_verify(&expr, &checks, json, &limits, cache.as_ref())
        }
        Cmd::Corpus {
            zmod_max,
            products,
            polyquot,
            checks,
            out,
        } => cmd_corpus(
            zmod_max,
            products,
            &polyquot,
            &checks,
            out,
            &limits,
            cache.as_ref(),
        ),
        Cmd::Conjecture { zmod_max, products } => {
            cmd_conjecture(zmod_max, products, &limits, cache.as_ref())
        }
    }
}

fn parse_expr(text: &str) -> Result<RingExpr, Failure> {
    let expr = parse_ring_expr(text).map_err(|e| Failure::config(format!("{text:?}: {e}")))?;
    expr.validate()?;
    Ok(expr)
}

fn build_analysis(
    ring: &FiniteRing,
    limits: &Limits,
    cache: Option<&LatticeCache>,
) -> Result<Analysis, Error> {
    if let Some(cache) = cache {
        if let Some(lattice) = cache.load(ring, limits) {
            return Analysis::from_lattice(lattice, limits);
        }
        let analysis = Analysis::new(ring, limits)?;
        // Cache writes are best-effort; a read-only directory is not an
        // analysis failure.
        let _ = cache.store(analysis.lattice());
        return Ok(analysis);
    }
    Analysis::new(ring, limits)
}

/// Resolve "all" or validate explicit check ids.
fn resolve_check_ids(requested: &[String]) -> Result<Vec<&'static str>, Failure> {
    if requested.len() == 1 && requested[0] == "all" {
        return Ok(verify::check_ids());
    }
    let mut ids = Vec::with_capacity(requested.len());
    for id in requested {
        let def = verify::find_check(id)
            .ok_or_else(|| Failure::from(Error::UnknownCheckId(id.clone())))?;
        ids.push(def.id);
    }
    Ok(ids)
}

fn ideal_text(ideal: &IdealSet) -> String {
    ideal.to_string()
}

// ---------------------------------------------------------------- ring

fn cmd_ring(
    expr_text: &str,
    show: Show,
    json: bool,
    limits: &Limits,
    cache: Option<&LatticeCache>,
) -> Result<u8, Failure> {
    let expr = parse_expr(expr_text)?;
    let label = expr.to_string();
    match expr.build(limits)? {
        BuiltRing::SymZ => ring_symz(&label, show, json),
        BuiltRing::Finite(ring) => {
            let analysis = build_analysis(&ring, limits, cache)?;
            let class = classify(&analysis);
            if json {
                let mut value = report::ring_report_json(&label, expr.order(), Some(&class), &[]);
                let sections = ring_sections_json(&analysis, show);
                value
                    .as_object_mut()
                    .expect("ring reports are objects")
                    .insert("sections".to_owned(), sections);
                print!("{}", report::render(&value));
            } else {
                print_ring_text(&label, &analysis, &class, show);
            }
            Ok(0)
        }
    }
}

fn ring_symz(label: &str, show: Show, json: bool) -> Result<u8, Failure> {
    let class = classify_symz();
    match show {
        Show::Classify | Show::All => {}
        _ => {
            return Err(Failure::from(Error::UnsupportedBackend(
                "the symbolic ring Z does not enumerate its ideal lattice; \
                 only --show classify is available"
                    .to_owned(),
            )))
        }
    }
    if json {
        let value = report::ring_report_json(label, None, Some(&class), &[]);
        print!("{}", report::render(&value));
    } else {
        println!("ring: {label}");
        println!("order: infinite");
        print_classification_text(&class);
    }
    Ok(0)
}

fn print_ring_text(label: &str, analysis: &Analysis, class: &ClassReport, show: Show) {
    println!("ring: {label}");
    println!("order: {}", analysis.ring().order());
    if matches!(show, Show::Ideals | Show::All) {
        print_ideals_text(analysis);
    }
    if matches!(show, Show::Pure | Show::All) {
        print_pure_text(analysis);
    }
    if matches!(show, Show::Spectra | Show::All) {
        print_spectra_text(analysis);
    }
    if matches!(show, Show::Classify | Show::All) {
        print_classification_text(class);
    }
}

fn flag_names(flags: &pure_spectra::lattice::IdealFlags) -> String {
    let mut names = Vec::new();
    if flags.prime {
        names.push("prime");
    }
    if flags.maximal {
        names.push("maximal");
    }
    if flags.minimal_prime {
        names.push("minimal prime");
    }
    if flags.pure {
        names.push("pure");
    }
    if flags.regular {
        names.push("regular");
    }
    names.join(", ")
}

fn print_ideals_text(analysis: &Analysis) {
    let lattice = analysis.lattice();
    println!("ideals ({}):", lattice.len());
    for (ideal, flags) in lattice.ideals().iter().zip(lattice.flags()) {
        let names = flag_names(flags);
        if names.is_empty() {
            println!("  {}", ideal_text(ideal));
        } else {
            println!("  {}  [{}]", ideal_text(ideal), names);
        }
    }
}

fn print_pure_text(analysis: &Analysis) {
    let ring = analysis.ring();
    let pure = analysis.pure();
    println!("pure ideals ({}):", pure.entries().len());
    for entry in pure.entries() {
        let generator = idempotent_generator(&entry.ideal)
            .map(|e| ring.elem_name(e).to_owned())
            .unwrap_or_else(|_| "-".to_owned());
        let mut marks = Vec::new();
        if entry.purely_prime {
            marks.push("purely-prime");
        }
        if entry.purely_maximal {
            marks.push("purely-maximal");
        }
        if entry.purely_minimal {
            marks.push("purely-minimal");
        }
        let suffix = if marks.is_empty() {
            String::new()
        } else {
            format!("  [{}]", marks.join(", "))
        };
        println!("  {} = ({generator}){suffix}", ideal_text(&entry.ideal));
    }
}

fn print_space_text(analysis: &Analysis, kind: SpaceKind, title: &str) {
    let space = analysis.space(kind);
    println!(
        "  {title}: {} points, {} opens, {} clopens, {}",
        space.point_count(),
        space.opens().len(),
        space.clopens().len(),
        if space.is_connected() {
            "connected"
        } else {
            "disconnected"
        }
    );
    for (i, point) in space.points().iter().enumerate() {
        println!("    [{i}] {}", ideal_text(point));
    }
}

fn print_spectra_text(analysis: &Analysis) {
    println!("spectra:");
    print_space_text(analysis, SpaceKind::Zariski, "Spec (Zariski)");
    print_space_text(analysis, SpaceKind::FlatMin, "Min (flat)");
    print_space_text(analysis, SpaceKind::Pure, "Spp (pure)");
    print_space_text(analysis, SpaceKind::Pierce, "Sp (Pierce)");
    let nu = analysis.nu();
    let pairs: Vec<String> = nu
        .point_map()
        .iter()
        .enumerate()
        .map(|(p, &q)| format!("{p}->{q}"))
        .collect();
    println!(
        "  nu (Spec -> Spp): {}  surjective: {}",
        pairs.join(", "),
        if analysis.nu_surjective() {
            "yes"
        } else {
            "no"
        }
    );
    let lambda = analysis.lambda();
    let pairs: Vec<String> = lambda
        .point_map()
        .iter()
        .enumerate()
        .map(|(p, &q)| format!("{p}->{q}"))
        .collect();
    println!("  lambda (Spp -> Sp): {}", pairs.join(", "));
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_classification_text(class: &ClassReport) {
    let line = |name: &str, flag: bool, key: &str| match class.witness_for(key) {
        Some(witness) if !flag => println!("  {name}: no  ({witness})"),
        _ => println!("  {name}: {}", yes_no(flag)),
    };
    println!("classification:");
    line("reduced", class.is_reduced, "is_reduced");
    line("gelfand", class.is_gelfand, "is_gelfand");
    line("mp", class.is_mp, "is_mp");
    println!("  krull dimension: {}", class.krull_dimension);
    line("p.p. ring", class.is_pp_ring, "is_pp_ring");
    line(
        "von neumann regular",
        class.is_von_neumann_regular,
        "is_von_neumann_regular",
    );
    line(
        "pure ideals idempotent-generated",
        class.all_pure_idempotent_generated,
        "all_pure_idempotent_generated",
    );
    line(
        "semi-noetherian",
        class.is_semi_noetherian,
        "is_semi_noetherian",
    );
    line("nu surjective", class.nu_surjective, "nu_surjective");
}

fn ideal_elements_json(ideal: &IdealSet) -> serde_json::Value {
    let ring = ideal.ring();
    serde_json::Value::Array(
        ideal
            .elements()
            .into_iter()
            .map(|e| serde_json::Value::String(ring.elem_name(e).to_owned()))
            .collect(),
    )
}

fn space_json(analysis: &Analysis, kind: SpaceKind) -> serde_json::Value {
    let space = analysis.space(kind);
    serde_json::json!({
        "points": space.points().iter().map(ideal_elements_json).collect::<Vec<_>>(),
        "opens": space.opens().len(),
        "clopens": space.clopens().len(),
        "connected": space.is_connected(),
    })
}

fn ring_sections_json(analysis: &Analysis, show: Show) -> serde_json::Value {
    let mut sections = serde_json::Map::new();
    if matches!(show, Show::Ideals | Show::All) {
        let lattice = analysis.lattice();
        let items: Vec<serde_json::Value> = lattice
            .ideals()
            .iter()
            .zip(lattice.flags())
            .map(|(ideal, flags)| {
                serde_json::json!({
                    "elements": ideal_elements_json(ideal),
                    "prime": flags.prime,
                    "maximal": flags.maximal,
                    "minimal_prime": flags.minimal_prime,
                    "pure": flags.pure,
                    "regular": flags.regular,
                })
            })
            .collect();
        sections.insert("ideals".to_owned(), serde_json::Value::Array(items));
    }
    if matches!(show, Show::Pure | Show::All) {
        let ring = analysis.ring();
        let items: Vec<serde_json::Value> = analysis
            .pure()
            .entries()
            .iter()
            .map(|entry| {
                let generator = idempotent_generator(&entry.ideal)
                    .map(|e| serde_json::Value::String(ring.elem_name(e).to_owned()))
                    .unwrap_or(serde_json::Value::Null);
                serde_json::json!({
                    "elements": ideal_elements_json(&entry.ideal),
                    "idempotent_generator": generator,
                    "purely_prime": entry.purely_prime,
                    "purely_maximal": entry.purely_maximal,
                    "purely_minimal": entry.purely_minimal,
                })
            })
            .collect();
        sections.insert("pure".to_owned(), serde_json::Value::Array(items));
    }
    if matches!(show, Show::Spectra | Show::All) {
        sections.insert(
            "spectra".to_owned(),
            serde_json::json!({
                "zariski": space_json(analysis, SpaceKind::Zariski),
                "flat_min": space_json(analysis, SpaceKind::FlatMin),
                "pure": space_json(analysis, SpaceKind::Pure),
                "pierce": space_json(analysis, SpaceKind::Pierce),
                "nu": analysis.nu().point_map(),
                "lambda": analysis.lambda().point_map(),
                "nu_surjective": analysis.nu_surjective(),
            }),
        );
    }
    serde_json::Value::Object(sections)
}

// -------------------------------------------------------------- verify

fn cmd_verify(
    expr_text: &str,
    requested: &[String],
    json: bool,
    limits: &Limits,
    cache: Option<&LatticeCache>,
) -> Result<u8, Failure> {
    let expr = parse_expr(expr_text)?;
    let label = expr.to_string();
    let ids = resolve_check_ids(requested)?;

    let (classification, checks): (Option<ClassReport>, Vec<CheckResult>) =
        match expr.build(limits)? {
            BuiltRing::SymZ => (Some(classify_symz()), verify::run_checks_symz(&ids)?),
            BuiltRing::Finite(ring) => {
                let analysis = build_analysis(&ring, limits, cache)?;
                let checks = verify::run_checks(&analysis, &ids)?;
                (Some(classify(&analysis)), checks)
            }
        };

    let failed = checks.iter().filter(|c| c.status.is_fail()).count();
    if json {
        let value =
            report::ring_report_json(&label, expr.order(), classification.as_ref(), &checks);
        print!("{}", report::render(&value));
    } else {
        println!("ring: {label}");
        for check in &checks {
            let detail = if check.details.is_empty() {
                String::new()
            } else {
                format!("  {}", check.details)
            };
            println!("  {:<12} {}{detail}", check.id, check.status);
        }
        let passed = checks.iter().filter(|c| c.status.is_pass()).count();
        let skipped = checks.iter().filter(|c| c.status.is_skipped()).count();
        println!(
            "checks: {} run, {passed} passed, {failed} failed, {skipped} skipped",
            checks.len()
        );
    }
    Ok(if failed > 0 { EXIT_CHECK_FAILED } else { 0 })
}

// -------------------------------------------------------------- corpus

fn parse_polyquot(specs: &[String]) -> Result<Vec<(u64, u32)>, Failure> {
    let mut out = Vec::with_capacity(specs.len());
    for spec in specs {
        let parse = || -> Option<(u64, u32)> {
            let (p, d) = spec.split_once(':')?;
            Some((p.trim().parse().ok()?, d.trim().parse().ok()?))
        };
        let (p, d) = parse().ok_or_else(|| {
            Failure::config(format!("--polyquot expects P:D with numbers, got {spec:?}"))
        })?;
        if p < 2 || d == 0 {
            return Err(Failure::config(format!(
                "--polyquot needs a modulus >= 2 and a degree >= 1, got {spec:?}"
            )));
        }
        out.push((p, d));
    }
    Ok(out)
}

fn sweep(
    spec: &CorpusSpec,
    limits: &Limits,
    cache: Option<&LatticeCache>,
) -> Result<CorpusReport, Failure> {
    Ok(run_corpus_with(spec, limits, |ring, limits| {
        build_analysis(ring, limits, cache)
    })?)
}

fn cmd_corpus(
    zmod_max: u64,
    products: bool,
    polyquot: &[String],
    requested: &[String],
    out: Option<PathBuf>,
    limits: &Limits,
    cache: Option<&LatticeCache>,
) -> Result<u8, Failure> {
    let ids = resolve_check_ids(requested)?;
    let spec = CorpusSpec {
        zmod_max,
        products,
        product_order_cap: 64,
        polyquot: parse_polyquot(polyquot)?,
        check_ids: ids.iter().map(|s| (*s).to_owned()).collect(),
    };
    let report = sweep(&spec, limits, cache)?;

    for ring in &report.rings {
        let passed = ring.checks.iter().filter(|c| c.status.is_pass()).count();
        let failed = ring.checks.iter().filter(|c| c.status.is_fail()).count();
        let skipped = ring.checks.iter().filter(|c| c.status.is_skipped()).count();
        println!(
            "{}: {passed} pass, {failed} fail, {skipped} skip",
            ring.label
        );
        for check in &ring.checks {
            if check.status.is_fail() {
                println!("  {} FAILED: {}", check.id, check.details);
            }
        }
    }
    println!(
        "corpus: {} rings, {} pass, {} fail, {} skip",
        report.rings.len(),
        report.passes,
        report.fails,
        report.skips
    );
    println!(
        "conjecture: {} rings compared, {} agree, {} disagree",
        report.conjecture.rings, report.conjecture.agreements, report.conjecture.disagreements
    );
    println!("caveat: {}", report.caveat);

    if let Some(path) = out {
        let rendered = report::render(&report::corpus_report_json(&report));
        let mut file = std::fs::File::create(&path)?;
        file.write_all(rendered.as_bytes())?;
        println!("report written to {}", path.display());
    }
    Ok(if report.fails > 0 {
        EXIT_CHECK_FAILED
    } else {
        0
    })
}

// ---------------------------------------------------------- conjecture

fn cmd_conjecture(
    zmod_max: u64,
    products: bool,
    limits: &Limits,
    cache: Option<&LatticeCache>,
) -> Result<u8, Failure> {
    let spec = CorpusSpec {
        zmod_max,
        products,
        product_order_cap: 64,
        polyquot: Vec::new(),
        check_ids: vec!["P-CONJ".to_owned()],
    };
    let report = sweep(&spec, limits, cache)?;
    for ring in &report.rings {
        for check in &ring.checks {
            println!("{}: {}  {}", ring.label, check.status, check.details);
        }
    }
    println!(
        "conjecture: {} rings compared, {} agree, {} disagree",
        report.conjecture.rings, report.conjecture.agreements, report.conjecture.disagreements
    );
    println!("caveat: {}", report.caveat);
    Ok(if report.conjecture.disagreements > 0 {
        EXIT_CHECK_FAILED
    } else {
        0
    })
}
