//! Command-line front end: parse a bundle spec, run a computation, print a
//! text or JSON report. Exit codes: 0 success, 1 check or hypothesis
//! failure, 2 usage or parse error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qcpb::{
    batyrev_presentation, binomial_power_series, gw_table, hypothesis_report, parse_bundle,
    parse_poly, quantum_normal_form, ring_vars, run_sweep, shape_presentation,
    tangent_presentation, verify_presentation, BundleSpec, CheckStatus, Error, Gate, GwTable,
    HypothesisReport, QuantumNormalForm, Result, RingKind, RingPresentation, SweepBounds,
};

#[derive(Parser)]
#[command(
    name = "qcpb",
    version,
    about = "Quantum cohomology rings of projectivized bundles over projective space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Emit conjectural or symbolic results instead of failing.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classical and quantum presentations with the hypothesis report.
    Present {
        /// Bundle spec: split:n=<int>,m=<int>,... or tangent:n=<int>
        bundle: String,
    },
    /// Print the Gromov-Witten coefficient table with all applicable methods.
    GwTable {
        bundle: String,
        /// Extend the generating-function series to this order.
        #[arg(long)]
        order: Option<i64>,
    },
    /// Build the quantum presentation and run the verification battery.
    Verify { bundle: String },
    /// Reduce a polynomial in h, xi, q to its quantum normal form.
    Reduce { bundle: String, poly: String },
    /// Verify every proved-regime bundle in a parameter box.
    Sweep {
        /// Bounds, e.g. n=6,r=5,mmax=5 (missing keys keep defaults).
        #[arg(long = "sweep", value_name = "n=..,r=..,mmax=..")]
        bounds: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BundleParse(_) | Error::PolyParse { .. } | Error::UnknownGenerator { .. } => 2,
                _ => 1,
            }
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Present { bundle } => present(cli, bundle),
        Command::GwTable { bundle, order } => table(cli, bundle, *order),
        Command::Verify { bundle } => verify(cli, bundle),
        Command::Reduce { bundle, poly } => reduce(cli, bundle, poly),
        Command::Sweep { bounds } => sweep(cli, bounds.as_deref()),
    }
}

fn load_bundle(spec: &str) -> Result<BundleSpec> {
    let parsed = parse_bundle(spec)?;
    for notice in &parsed.notices {
        eprintln!("notice: {notice}");
    }
    Ok(parsed.spec)
}

/// The quantum presentation this tool stands behind for a bundle: the
/// product form for normalized split bundles, the tangent relations for
/// the tangent bundle, and the general shape otherwise.
fn quantum_presentation(bundle: &BundleSpec) -> Result<RingPresentation> {
    if !bundle.is_split() {
        tangent_presentation(bundle.n())
    } else if bundle.min_twist() == 1 {
        batyrev_presentation(bundle)
    } else {
        shape_presentation(bundle)
    }
}

/// A result that is not fully proved needs --force to be emitted.
fn gate_conjectural(kind: RingKind, force: bool, what: &str) -> Result<()> {
    if kind != RingKind::QuantumVerified && !force {
        return Err(Error::HypothesesNotMet(format!(
            "{what} is not proved for this bundle; pass --force to emit it anyway"
        )));
    }
    Ok(())
}

fn kind_label(kind: RingKind) -> &'static str {
    match kind {
        RingKind::Classical => "classical",
        RingKind::QuantumVerified => "quantum-verified",
        RingKind::QuantumShape => "quantum-shape",
    }
}

fn gate_rows(report: &HypothesisReport) -> Vec<(&'static str, &Gate)> {
    vec![
        ("fano", &report.fano),
        ("fano-small-c1", &report.fano_small_c1),
        ("fano-nef-twist", &report.fano_nef_twist),
        ("relation-shape", &report.relation_shape),
        ("gw-series-bound", &report.gw_series_bound),
        ("quantum-split-bound", &report.quantum_split_bound),
        ("first-relation-sharp", &report.first_relation_sharp),
        ("second-relation-sharp", &report.second_relation_sharp),
        ("min-twist-nef", &report.min_twist_nef),
        ("section-extremal-small-c1", &report.section_extremal_small_c1),
        ("leading-pairing-bound", &report.leading_pairing_bound),
    ]
}

fn present(cli: &Cli, spec: &str) -> Result<i32> {
    let bundle = load_bundle(spec)?;
    let classical = qcpb::classical_presentation(&bundle);
    let quantum = quantum_presentation(&bundle)?;
    gate_conjectural(quantum.kind, cli.force, "the quantum presentation")?;
    let report = hypothesis_report(&bundle);

    match cli.format {
        Format::Json => {
            let doc = json!({
                "bundle": bundle,
                "classical": classical.to_json(),
                "quantum": quantum.to_json(),
                "hypotheses": report,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            println!("bundle: {bundle}");
            println!("classical (rank {}):", classical.rank());
            for rel in &classical.relations {
                println!("  {}", rel.display);
            }
            println!("quantum ({}):", kind_label(quantum.kind));
            for rel in &quantum.relations {
                println!("  {}", rel.display);
            }
            println!("hypotheses:");
            for (name, gate) in gate_rows(&report) {
                let mark = if gate.holds { "holds" } else { "fails" };
                println!("  {name}: {mark} ({})", gate.witness);
            }
        }
    }
    Ok(0)
}

fn table(cli: &Cli, spec: &str, order: Option<i64>) -> Result<i32> {
    let bundle = load_bundle(spec)?;
    let table: GwTable = gw_table(&bundle)?;
    let conjectural = table.entries.iter().any(|e| e.conjectural);
    if conjectural && !cli.force {
        return Err(Error::HypothesesNotMet(
            "coefficient values are conjectural outside the series regime; \
             pass --force to emit them anyway"
                .into(),
        ));
    }

    // Optional series extension past the table's index range.
    let top = bundle.c1() - bundle.r() as i64;
    let mut extension: Vec<(i64, String)> = Vec::new();
    if let Some(order) = order {
        if order > top {
            let m = bundle.twists().expect("gw_table already required split");
            let factors: Vec<(i64, i64)> = m.iter().map(|&mu| (mu, mu - 2)).collect();
            let series = binomial_power_series(&factors, order as usize)?;
            for i in (top + 1)..=order {
                extension.push((i, series.coefficient(i as usize).to_string()));
            }
        }
    }

    match cli.format {
        Format::Json => {
            let mut doc: serde_json::Value =
                serde_json::from_str(&table.to_json()).expect("table emits valid json");
            if !extension.is_empty() {
                doc["series-extension"] = extension
                    .iter()
                    .map(|(i, v)| json!({"i": i, "value": v}))
                    .collect();
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            println!("bundle: {bundle}");
            for entry in &table.entries {
                let methods: Vec<&str> = entry.methods.keys().map(String::as_str).collect();
                let tag = if entry.conjectural { " (conjectural)" } else { "" };
                println!(
                    "W_{} = {}{tag}  [{}]",
                    entry.i,
                    entry.value,
                    methods.join(", ")
                );
            }
            for (i, v) in &extension {
                println!("W_{i} = {v}  [series extension beyond the invariant range]");
            }
            let agreement = if table.agrees() { "agree" } else { "DISAGREE" };
            println!("methods {agreement}");
        }
    }
    if !table.agrees() {
        return Ok(1);
    }
    Ok(0)
}

fn verify(cli: &Cli, spec: &str) -> Result<i32> {
    let bundle = load_bundle(spec)?;
    let pres = quantum_presentation(&bundle)?;
    gate_conjectural(pres.kind, cli.force, "the quantum presentation")?;
    let report = verify_presentation(&pres, &bundle)?;

    // Cross-method agreement of the invariant table, where one exists.
    let (gw_status, gw_detail) = if !bundle.is_split() {
        ("skipped", "tangent bundle carries no twist data".to_string())
    } else {
        let table = gw_table(&bundle)?;
        let routes = table
            .entries
            .first()
            .map(|e| e.methods.len())
            .unwrap_or_default();
        if table.agrees() {
            ("pass", format!("{} rows across {routes} methods", table.entries.len()))
        } else {
            ("fail", "methods disagree".to_string())
        }
    };

    let ok = report.all_passed() && gw_status != "fail";
    match cli.format {
        Format::Json => {
            let doc = json!({
                "bundle": bundle,
                "kind": kind_label(pres.kind),
                "report": report.to_json(),
                "gw-agreement": {"status": gw_status, "detail": gw_detail},
                "passed": ok,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            println!("bundle: {bundle}");
            println!("presentation: {}", kind_label(pres.kind));
            for check in &report.checks {
                let status = match check.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "skipped",
                };
                println!("{}: {status} ({})", check.name, check.detail);
            }
            println!("gw-agreement: {gw_status} ({gw_detail})");
            println!("result: {}", if ok { "all checks passed" } else { "FAILED" });
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn basis_label(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    for (sym, e) in [("h", i), ("xi", j)] {
        match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            _ => parts.push(format!("{sym}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn reduce(cli: &Cli, spec: &str, poly: &str) -> Result<i32> {
    let bundle = load_bundle(spec)?;
    let pres = quantum_presentation(&bundle)?;
    gate_conjectural(pres.kind, cli.force, "the quantum presentation")?;
    let input = parse_poly(&ring_vars(), poly)?;
    let nf: QuantumNormalForm = quantum_normal_form(&input, &pres)?;

    match cli.format {
        Format::Json => {
            let coords: Vec<serde_json::Value> = nf
                .coords()
                .iter()
                .map(|(&(i, j), coeff)| json!({"h": i, "xi": j, "coefficient": coeff.to_string()}))
                .collect();
            let doc = json!({
                "bundle": bundle,
                "input": input.to_string(),
                "normal-form": nf.to_poly().to_string(),
                "coords": coords,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            println!("bundle: {bundle}");
            println!("input: {input}");
            println!("normal form: {}", nf.to_poly());
            for (&(i, j), coeff) in nf.coords() {
                println!("  {}: {coeff}", basis_label(i, j));
            }
        }
    }
    Ok(0)
}

fn parse_bounds(arg: Option<&str>) -> Result<SweepBounds> {
    let mut bounds = SweepBounds::default();
    let Some(arg) = arg else {
        return Ok(bounds);
    };
    for piece in arg.split(',') {
        let (key, value) = piece.split_once('=').ok_or_else(|| {
            Error::BundleParse(format!("sweep bounds expect key=value pairs, got `{piece}`"))
        })?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::BundleParse(format!("bad bound `{value}` for {key}")))?;
        match key.trim() {
            "n" => bounds.max_n = value as u32,
            "r" => bounds.max_r = value as u32,
            "mmax" => bounds.max_twist = value,
            other => {
                return Err(Error::BundleParse(format!(
                    "unknown sweep bound `{other}` (expected n, r, mmax)"
                )))
            }
        }
    }
    Ok(bounds)
}

fn sweep(cli: &Cli, arg: Option<&str>) -> Result<i32> {
    let bounds = parse_bounds(arg)?;
    let entries = run_sweep(&bounds)?;
    let failed: Vec<String> = entries
        .iter()
        .filter(|e| !e.passed())
        .map(|e| e.bundle.to_string())
        .collect();

    match cli.format {
        Format::Json => {
            let doc = json!({
                "bounds": bounds,
                "entries": entries,
                "all-passed": failed.is_empty(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            for entry in &entries {
                let status = if entry.passed() { "pass" } else { "FAIL" };
                println!("{}: {status}", entry.bundle);
            }
            println!(
                "swept {} proved-regime bundles (n <= {}, r <= {}, twists <= {}): {}",
                entries.len(),
                bounds.max_n,
                bounds.max_r,
                bounds.max_twist,
                if failed.is_empty() {
                    "all passed".to_string()
                } else {
                    format!("{} FAILED", failed.len())
                }
            );
        }
    }
    Ok(if failed.is_empty() { 0 } else { 1 })
}
