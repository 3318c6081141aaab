use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semitotal::families::Family;
use semitotal::io::{self, GraphFormat};
use semitotal::polynomial;
use semitotal::theorems::{self, VerificationReport};
use semitotal::{
    count_by_size, domination_number, products, stability_witness, Conventions, DominationVariant, Graph,
    RemovalPolicy, WitnessRule,
};

const THREADS_ENV: &str = "SEMITOTAL_THREADS";

#[derive(Parser)]
#[command(name = "semitotal", version, about = "Exact semitotal domination for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number (plain, total or semitotal)
    Num(NumArgs),
    /// Number of valid sets of each size
    Count(NumArgs),
    /// Counting polynomial
    Poly(NumArgs),
    /// Fewest removed vertices that change the semitotal number
    Stability(StabilityArgs),
    /// Emit a named family graph
    Family(FamilyArgs),
    /// Build a product of two graphs
    Product(ProductArgs),
    /// Check the claim registry against the solvers
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Source {
    /// Family spec such as path:11, kmn:2,3, wheel:8, split:4,4,0.5,3
    #[arg(long, group = "source")]
    family: Option<String>,
    /// Graph file; `-` reads standard input
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Graph given inline as a graph6 string
    #[arg(long, group = "source")]
    g6: Option<String>,
    /// Format of --input
    #[arg(long, default_value = "edgelist")]
    format: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Plain,
    Total,
    Semitotal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Within2,
    Exact2,
}

impl From<Rule> for WitnessRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Within2 => WitnessRule::WithinTwo,
            Rule::Exact2 => WitnessRule::ExactlyTwo,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

impl From<Switch> for Conventions {
    fn from(s: Switch) -> Self {
        match s {
            Switch::On => Conventions::default(),
            Switch::Off => Conventions::OFF,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Skip,
    Changed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportOut {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct NumArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "semitotal")]
    variant: Variant,
    #[arg(long, value_enum, default_value = "exact2")]
    rule: Rule,
    /// Complete graphs have semitotal number 1
    #[arg(long, value_enum, default_value = "on")]
    kn_convention: Switch,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

#[derive(Args)]
struct StabilityArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "exact2")]
    rule: Rule,
    #[arg(long, value_enum, default_value = "on")]
    kn_convention: Switch,
    /// Treatment of removals leaving isolates or an undefined number
    #[arg(long, value_enum, default_value = "skip")]
    policy: Policy,
    #[arg(long, value_enum, default_value = "text")]
    out: Out,
}

#[derive(Args)]
struct FamilyArgs {
    spec: String,
    /// Output format: edgelist or graph6
    #[arg(long, default_value = "edgelist")]
    format: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Corona,
    Cartesian,
    Join,
    Diamond,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(value_enum)]
    op: ProductOp,
    /// Left factor: a family spec, g6:STRING or file:PATH
    left: String,
    /// Right factor, same syntax
    right: String,
    /// Vertex of the right factor identified into each left vertex (diamond only)
    #[arg(long, default_value_t = 0)]
    anchor: usize,
    /// Format for file: factors and for the output
    #[arg(long, default_value = "edgelist")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated glob patterns over claim ids
    #[arg(long, default_value = "*")]
    claims: String,
    /// Largest instance order
    #[arg(long, default_value_t = 14)]
    budget: usize,
    #[arg(long, value_enum, default_value = "on")]
    kn_convention: Switch,
    #[arg(long, value_enum, default_value = "table")]
    out: ReportOut,
}

enum Failure {
    Usage(String),
    Compute(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute(e: impl ToString) -> Failure {
    Failure::Compute(e.to_string())
}

fn parse_format(s: &str) -> Result<GraphFormat, Failure> {
    s.parse().map_err(usage)
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(usage)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn load(source: &Source) -> Result<Graph, Failure> {
    let format = parse_format(&source.format)?;
    if let Some(spec) = &source.family {
        let family: Family = spec.parse().map_err(usage)?;
        return family
            .build()
            .map(|g| g.with_name(family.to_string()))
            .map_err(usage);
    }
    if let Some(g6) = &source.g6 {
        return io::parse_graph6(g6).map_err(usage);
    }
    if let Some(path) = &source.input {
        return io::parse_graph(&read_text(path)?, format).map_err(usage);
    }
    Err(usage("one of --family, --input or --g6 is required"))
}

fn load_ref(text: &str, format: GraphFormat) -> Result<Graph, Failure> {
    if let Some(g6) = text.strip_prefix("g6:") {
        io::parse_graph6(g6).map_err(usage)
    } else if let Some(path) = text.strip_prefix("file:") {
        io::parse_graph(&read_text(&PathBuf::from(path))?, format).map_err(usage)
    } else {
        let family: Family = text.parse().map_err(usage)?;
        family.build().map_err(usage)
    }
}

fn variant_of(v: Variant, rule: Rule) -> DominationVariant {
    match v {
        Variant::Plain => DominationVariant::Plain,
        Variant::Total => DominationVariant::Total,
        Variant::Semitotal => DominationVariant::Semitotal(rule.into()),
    }
}

fn graph_json(g: &Graph) -> Value {
    let mut obj = json!({ "n": g.n(), "edges": g.edges() });
    if let Ok(g6) = io::emit_graph6(g) {
        obj["g6"] = json!(g6);
    }
    obj
}

fn envelope(g: &Graph, variant: DominationVariant, rule: Rule, key: &str, value: Value) -> String {
    let rule: WitnessRule = rule.into();
    let body = json!({
        "graph": graph_json(g),
        "variant": variant.to_string(),
        "rule": rule.as_str(),
        key: value,
    });
    serde_json::to_string_pretty(&body).expect("serializable") + "\n"
}

fn num(a: &NumArgs) -> Outcome {
    let g = load(&a.source)?;
    let variant = variant_of(a.variant, a.rule);
    let value = domination_number(&g, variant, a.kn_convention.into()).map_err(compute)?;
    let Some(value) = value else {
        return Err(compute(format!("{variant} number is undefined: no valid set exists")));
    };
    Ok(match a.out {
        Out::Text => format!("{value}\n"),
        Out::Json => envelope(&g, variant, a.rule, "value", json!(value)),
    })
}

fn count(a: &NumArgs, formatted: bool) -> Outcome {
    let g = load(&a.source)?;
    let variant = variant_of(a.variant, a.rule);
    let p = count_by_size(&g, variant, a.kn_convention.into()).map_err(compute)?;
    Ok(match (a.out, formatted) {
        (Out::Text, true) => format!("{}\n", polynomial::format(&p)),
        (Out::Text, false) => {
            let mut s = String::new();
            for i in 0..=g.n() {
                let _ = writeln!(s, "{i} {}", p.coeff(i));
            }
            s
        }
        (Out::Json, _) => {
            let coeffs: Vec<String> = (0..=g.n()).map(|i| p.coeff(i).to_string()).collect();
            let mut s = envelope(&g, variant, a.rule, "coeffs", json!(coeffs));
            if formatted {
                let mut v: Value = serde_json::from_str(&s).expect("just written");
                v["polynomial"] = json!(polynomial::format(&p));
                s = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
            }
            s
        }
    })
}

fn stability(a: &StabilityArgs) -> Outcome {
    let g = load(&a.source)?;
    let policy = match a.policy {
        Policy::Skip => RemovalPolicy::SkipSet,
        Policy::Changed => RemovalPolicy::CountAsChanged,
    };
    let rule: WitnessRule = a.rule.into();
    let w = stability_witness(&g, rule, a.kn_convention.into(), policy).map_err(compute)?;
    let Some(w) = w else {
        return Err(compute("no removal of fewer than n vertices changes the semitotal number"));
    };
    let show = |v: Option<usize>| v.map_or("undefined".to_string(), |x| x.to_string());
    Ok(match a.out {
        Out::Text => format!(
            "{}\nremoved {} ({} -> {})\n",
            w.k,
            w.removed,
            show(w.base_value),
            show(w.residue_value)
        ),
        Out::Json => envelope(
            &g,
            DominationVariant::Semitotal(rule),
            a.rule,
            "value",
            json!({
                "k": w.k,
                "removed": w.removed.to_vec(),
                "base": w.base_value,
                "residue": w.residue_value,
                "policy": policy.to_string(),
            }),
        ),
    })
}

fn family(a: &FamilyArgs) -> Outcome {
    let format = parse_format(&a.format)?;
    let family: Family = a.spec.parse().map_err(usage)?;
    let g = family.build().map_err(usage)?;
    let text = io::emit_graph(&g, format).map_err(compute)?;
    Ok(if text.ends_with('\n') { text } else { text + "\n" })
}

fn product(a: &ProductArgs) -> Outcome {
    let format = parse_format(&a.format)?;
    let g = load_ref(&a.left, format)?;
    let h = load_ref(&a.right, format)?;
    let p = match a.op {
        ProductOp::Corona => products::corona(&g, &h),
        ProductOp::Cartesian => products::cartesian(&g, &h),
        ProductOp::Join => products::join(&g, &h),
        ProductOp::Diamond => products::identify_product(&g, &h, a.anchor),
    }
    .map_err(compute)?;
    let text = io::emit_graph(&p, format).map_err(compute)?;
    Ok(if text.ends_with('\n') { text } else { text + "\n" })
}

fn report_csv(r: &VerificationReport) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = ["claim", "instance", "predicted", "oracle", "verdict", "rule", "note"];
    w.write_record(header).map_err(compute)?;
    for row in &r.report {
        w.write_record([
            row.claim.as_str(),
            &row.instance,
            &row.predicted,
            &row.oracle,
            &row.verdict.to_string(),
            row.rule.as_str(),
            &row.note,
        ])
        .map_err(compute)?;
    }
    let bytes = w.into_inner().map_err(compute)?;
    String::from_utf8(bytes).map_err(compute)
}

fn report_table(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "budget {}  complete-graph convention {}",
        r.budget,
        if r.conventions.complete_graph_gamma_t2_is_one { "on" } else { "off" }
    );
    let _ = writeln!(
        s,
        "{:<20} {:>17} {:>17}  only-under",
        "claim", "within2 pass/all", "exact2 pass/all"
    );
    for c in &r.summary {
        let cell = |t: &theorems::RuleTally| format!("{}/{}", t.pass, t.total());
        let only = c.passes_only_under.map_or("-", |r| r.as_str());
        let _ = writeln!(s, "{:<20} {:>17} {:>17}  {}", c.claim, cell(&c.within2), cell(&c.exact2), only);
    }
    let failures: Vec<_> = r.report.iter().filter(|row| row.verdict != theorems::Verdict::Pass).collect();
    if !failures.is_empty() {
        let _ = writeln!(s, "\nnon-passing rows:");
        for row in failures {
            let _ = writeln!(
                s,
                "{:<20} {:<8} {:<9} {:<28} predicted {:<14} oracle {:<14} {}",
                row.claim,
                row.rule.as_str(),
                row.verdict.to_string(),
                row.instance,
                row.predicted,
                row.oracle,
                row.note
            );
        }
    }
    s
}

fn verify(a: &VerifyArgs) -> Outcome {
    let r = theorems::run_claims(&a.claims, a.budget, a.kn_convention.into()).map_err(usage)?;
    Ok(match a.out {
        ReportOut::Json => serde_json::to_string_pretty(&r).map_err(compute)? + "\n",
        ReportOut::Csv => report_csv(&r)?,
        ReportOut::Table => report_table(&r),
    })
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    let outcome = match &cli.command {
        Command::Num(a) => num(a),
        Command::Count(a) => count(a, false),
        Command::Poly(a) => count(a, true),
        Command::Stability(a) => stability(a),
        Command::Family(a) => family(a),
        Command::Product(a) => product(a),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
