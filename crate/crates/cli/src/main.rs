use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxsigns::cocycle::{eval_epsilon, eval_epsilon_tilde, eval_z, extension_multiply, Backend, ExtensionElement};
use coxsigns::cohomology::restrict_cocycle;
use coxsigns::omega::{classify_restrictions, diff_against, expectation_for, omega_of, OmegaError, OmegaReport};
use coxsigns::verify::{parse_suites, run_verify, SweepMode, VerifyPlan, VerifyReport};
use coxsigns::{CoxeterSystem, GroupElement};

const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Parser)]
#[command(name = "coxsigns", version, about = "Higher sign cocycles on finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ε_n on a tuple
    Eps(TupleArgs),
    /// Evaluate the half-space cocycle Z_n on a tuple
    Zn(TupleArgs),
    /// Run a property suite
    Verify(VerifyArgs),
    /// Restrict ε₃ to Ω and its subgroups
    Omega(OmegaArgs),
    /// Multiply lifted elements in the extension W^#
    Extension(ExtensionArgs),
}

#[derive(Args)]
struct Common {
    /// Type descriptor, e.g. A3, B2xA1, I2(5)
    #[arg(long = "type", short = 't')]
    type_name: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, short = 'o')]
    output: Option<String>,
}

#[derive(Args)]
struct TupleArgs {
    #[command(flatten)]
    common: Common,
    #[arg(short = 'n')]
    n: usize,
    /// Words separated by commas, e.g. "1 2, 2 1"
    #[arg(long)]
    tuple: String,
    #[arg(long, value_enum, default_value_t = BackendArg::Both)]
    backend: BackendArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// cocycle, collapsing, normalization, reversal, backends, cup, seesaw,
    /// bockstein, prop51, lemmas, automorphism, extension, or all
    suite: String,
    #[command(flatten)]
    common: Common,
    #[arg(short = 'n', default_value_t = 3)]
    n: usize,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long, env = "COXSIGNS_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct OmegaArgs {
    #[command(flatten)]
    common: Common,
    /// Compare with the bundled expectation table; mismatches fail
    #[arg(long)]
    against_paper: bool,
    /// Include the restricted cochain on Ω in JSON output
    #[arg(long)]
    with_cochains: bool,
}

#[derive(Args)]
struct ExtensionArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    tuple: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Chamber,
    Inversion,
    Both,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

struct Outcome {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Eps(a) => (&a.common, run_eps(a)),
        Command::Zn(a) => (&a.common, run_zn(a)),
        Command::Verify(a) => (&a.common, run_verify_cmd(a)),
        Command::Omega(a) => (&a.common, run_omega(a)),
        Command::Extension(a) => (&a.common, run_extension(a)),
    };
    match result.and_then(|o| emit(common, &o.text).map(|_| o.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("--output {path}: {e}"))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn system(common: &Common) -> Result<CoxeterSystem, Failure> {
    CoxeterSystem::build(&common.type_name).map_err(|e| usage(format!("--type {}: {e}", common.type_name)))
}

fn tuple(sys: &CoxeterSystem, text: &str) -> Result<Vec<GroupElement>, Failure> {
    sys.parse_tuple(text).map_err(|e| usage(format!("--tuple: {e}")))
}

fn arity(n: usize, t: &[GroupElement]) -> Result<(), Failure> {
    if n == 0 {
        return Err(usage("-n: degree must be at least 1"));
    }
    if t.len() != n {
        return Err(usage(format!("--tuple: expected {n} entries for -n {n}, got {}", t.len())));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn run_eps(a: &TupleArgs) -> Result<Outcome, Failure> {
    let sys = system(&a.common)?;
    let t = tuple(&sys, &a.tuple)?;
    arity(a.n, &t)?;
    let eval = |b| eval_epsilon(&sys, a.n, &t, b).map_err(|e| usage(e.to_string()));
    let (value, agree) = match a.backend {
        BackendArg::Chamber => (eval(Backend::Chamber)?, None),
        BackendArg::Inversion => (eval(Backend::Inversion)?, None),
        BackendArg::Both => {
            let c = eval(Backend::Chamber)?;
            (c, Some(c == eval(Backend::Inversion)?))
        }
    };
    let refined = eval_epsilon_tilde(&sys, a.n, &t).map_err(|e| usage(e.to_string()))?;
    let ok = agree != Some(false);
    let text = match a.common.format {
        Format::Text => {
            let note = match agree {
                Some(true) => "chamber and inversion backends agree",
                Some(false) => "BACKENDS DISAGREE",
                None => "single backend",
            };
            format!("{value}\n# {note}; by wall orbit: {refined}")
        }
        Format::Json => pretty(&json!({
            "type": sys.descriptor().to_string(),
            "n": a.n,
            "tuple": sys.format_tuple(&t),
            "value": value.as_i64(),
            "field": if a.n % 2 == 0 { "Z" } else { "F2" },
            "backends_agree": agree,
            "refined": refined.to_json(),
        })),
        Format::Csv => format!(
            "type,n,tuple,value\n{},{},{},{}",
            sys.descriptor(),
            a.n,
            csv_field(&sys.format_tuple(&t)),
            value
        ),
    };
    Ok(Outcome { text, ok })
}

fn run_zn(a: &TupleArgs) -> Result<Outcome, Failure> {
    let sys = system(&a.common)?;
    let t = tuple(&sys, &a.tuple)?;
    arity(a.n, &t)?;
    let z = eval_z(&sys, a.n, &t).map_err(|e| usage(e.to_string()))?;
    let text = match a.common.format {
        Format::Text => z.to_string(),
        Format::Json => pretty(&z.to_json(&sys)),
        Format::Csv => {
            let mut out = String::from("root,plus,minus");
            for w in z.to_json(&sys)["walls"].as_array().expect("walls array") {
                out.push_str(&format!("\n{},{},{}", csv_field(&w["root"].to_string()), w["plus"], w["minus"]));
            }
            out
        }
    };
    Ok(Outcome { text, ok: true })
}

fn run_verify_cmd(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let sys = system(&a.common)?;
    let suites = parse_suites(&a.suite).map_err(|e| usage(format!("suite: {e}")))?;
    if a.jobs == Some(0) {
        return Err(usage("--jobs: must be at least 1"));
    }
    let mode = match (a.exhaustive, a.samples) {
        (true, _) => SweepMode::Exhaustive,
        (false, Some(s)) => SweepMode::Sampled(s),
        (false, None) => SweepMode::Auto(DEFAULT_SAMPLES),
    };
    let plan = VerifyPlan { suites, n: a.n, mode, seed: a.seed, jobs: a.jobs };
    let report = run_verify(&sys, &plan).map_err(|e| usage(e.to_string()))?;
    let text = match a.common.format {
        Format::Text => verify_text(&report),
        Format::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
        Format::Csv => {
            let mut out = String::from("type,suite,degree,arity,mode,tuples,violations");
            for s in &report.suites {
                out.push_str(&format!(
                    "\n{},{},{},{},{},{},{}",
                    report.type_name, s.suite, s.degree, s.arity, s.mode, s.tuples, s.violations
                ));
            }
            out
        }
    };
    Ok(Outcome { text, ok: report.passed() })
}

fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for s in &report.suites {
        let status = if s.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "{}: {status}, {} {} tuples (degree {}), {} violations\n",
            s.suite, s.tuples, s.mode, s.degree, s.violations
        ));
        for c in &s.counterexamples {
            out.push_str(&format!("  {}: ({}) {}\n", c.property, c.tuple, c.detail));
        }
    }
    let overall = if report.passed() { "pass" } else { "FAIL" };
    out.push_str(&format!("{} n={} seed={}: {overall}", report.type_name, report.n, report.seed));
    out
}

fn omega_failure(e: OmegaError) -> Failure {
    match e {
        OmegaError::NotWeyl(_) => usage(format!("--type: {e}")),
        other => Failure { code: 1, message: other.to_string() },
    }
}

fn run_omega(a: &OmegaArgs) -> Result<Outcome, Failure> {
    let sys = system(&a.common)?;
    let report = classify_restrictions(&sys).map_err(omega_failure)?;
    let diff = if a.against_paper {
        let exp = expectation_for(&report.type_name)
            .ok_or_else(|| usage(format!("--against-paper: no expectation for {}", report.type_name)))?;
        Some(diff_against(&report, &exp))
    } else {
        None
    };
    let ok = diff.as_ref().is_none_or(Vec::is_empty);
    let text = match a.common.format {
        Format::Text => omega_text(&report, diff.as_deref()),
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            if let Some(d) = &diff {
                v["expectation"] = json!({ "matches": d.is_empty(), "differences": d });
            }
            if a.with_cochains {
                let om = omega_of(&sys).map_err(omega_failure)?;
                let c = restrict_cocycle(&sys, 3, &om.elements).map_err(|e| Failure { code: 1, message: e.to_string() })?;
                v["omega_cochain"] = c.to_json();
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut out = OmegaReport::csv_header().to_string();
            for row in report.csv_rows() {
                out.push('\n');
                out.push_str(&row);
            }
            out
        }
    };
    Ok(Outcome { text, ok })
}

fn omega_text(report: &OmegaReport, diff: Option<&[String]>) -> String {
    let mut out = format!("{}: Omega = {} (order {})\n", report.type_name, report.omega_shape, report.omega_order);
    for e in &report.elements {
        out.push_str(&format!("  {} = {} (length {}, {})\n", e.name, e.word, e.length, e.provenance));
    }
    if report.omega_order == 1 {
        out.push_str("Omega is trivial; nothing to classify\n");
    }
    for s in &report.subgroups {
        let coords = s
            .coordinates
            .as_ref()
            .map(|c| format!(" coordinates ({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .unwrap_or_default();
        out.push_str(&format!("  {} (order {}, index {}): {}{coords}\n", s.label, s.order, s.index, s.verdict));
    }
    match diff {
        Some([]) => out.push_str("expectation table: matches"),
        Some(d) => {
            out.push_str("expectation table: MISMATCH");
            for line in d {
                out.push_str(&format!("\n  {line}"));
            }
        }
        None => {
            out.pop();
        }
    }
    out
}

fn run_extension(a: &ExtensionArgs) -> Result<Outcome, Failure> {
    let sys = system(&a.common)?;
    let t = tuple(&sys, &a.tuple)?;
    let mut acc = ExtensionElement::lift(&sys.identity());
    for x in &t {
        acc = extension_multiply(&sys, &acc, &ExtensionElement::lift(x)).map_err(|e| usage(e.to_string()))?;
    }
    let v = acc.to_json(&sys);
    let walls = v["chain"]["walls"].as_array().cloned().unwrap_or_default();
    let text = match a.common.format {
        Format::Text => {
            let terms: Vec<String> = walls.iter().map(|w| format!("{:+}[H {}]", w["coeff"].as_i64().unwrap_or(0), w["root"])).collect();
            let chain = if terms.is_empty() { "0".to_string() } else { terms.join(" ") };
            format!("({chain}, {})", sys.format_element(&acc.element))
        }
        Format::Json => pretty(&v),
        Format::Csv => {
            let mut out = String::from("root,coeff");
            for w in &walls {
                out.push_str(&format!("\n{},{}", csv_field(&w["root"].to_string()), w["coeff"]));
            }
            out
        }
    };
    Ok(Outcome { text, ok: true })
}
