//! Command-line driver: closed-form reports, oracle verification and
//! identity sweeps.

pub mod render;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chordal_betti::closed_form::{skeleton_betti_table, skeleton_invariants};
use chordal_betti::dual::{
    dual_betti_table, dual_profile, dual_resolution, dual_skeleton_betti_table, dual_skeleton_profile,
    DualHomology,
};
use chordal_betti::identities::{check_specializations, sweep, IdentityCase, IdentityId, SweepBounds};
use chordal_betti::oracle::{verify_with, Status, VerificationReport, VerifyOptions};
use chordal_betti::{Error, FieldChoice, GluingSpec, OracleCap};

use render::{render_json, render_report_text, InvValue, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub const CAP_ENV: &str = "CHORDAL_BETTI_ORACLE_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "chordal-betti",
    version,
    about = "Betti numbers of glued chordal clique complexes, their skeletons and Alexander duals",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a Betti table and its invariants (the default)
    Report(ReportArgs),
    /// Compare every closed form with the brute-force oracle
    Verify(VerifyArgs),
    /// Check the binomial identities, by sweep or at one parameter tuple
    Identities(IdentityArgs),
}

#[derive(Debug, Clone, Args)]
struct SpecArgs {
    /// Clique sizes, e.g. 3,5,6
    #[arg(long = "n", value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Gluing sizes, one fewer than the cliques, e.g. 2,3
    #[arg(long = "r", value_delimiter = ',')]
    r: Vec<usize>,
    /// Parent clique of cliques 2..e (1-based)
    #[arg(long, value_delimiter = ',')]
    parents: Option<Vec<usize>>,
}

impl SpecArgs {
    fn spec(&self) -> chordal_betti::Result<GluingSpec> {
        match &self.parents {
            Some(p) => GluingSpec::with_parents(&self.n, &self.r, p),
            None => GluingSpec::new(&self.n, &self.r),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Args)]
struct ReportArgs {
    #[command(flatten)]
    spec: Option<SpecArgs>,
    /// Report the k-skeleton instead of the whole complex
    #[arg(long, value_name = "K", allow_negative_numbers = true, conflicts_with_all = ["dual", "dual_skeleton"])]
    skeleton: Option<i64>,
    /// Report the Alexander dual
    #[arg(long, conflicts_with = "dual_skeleton")]
    dual: bool,
    /// Report the k-skeleton of the Alexander dual
    #[arg(long, value_name = "K", allow_negative_numbers = true)]
    dual_skeleton: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Clone, Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Coefficient field for the oracle: q, f2, f3, ...
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldChoice,
    /// Largest vertex count the oracle accepts
    #[arg(long, env = CAP_ENV, value_parser = parse_cap)]
    oracle_cap: Option<OracleCap>,
    /// Largest skeleton parameter to check
    #[arg(long, allow_negative_numbers = true)]
    max_k: Option<i64>,
    /// Skip the other admissible gluing orders
    #[arg(long)]
    no_realizations: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Clone, Args)]
struct IdentityArgs {
    /// Restrict to one identity family
    #[arg(long, value_parser = parse_identity)]
    only: Option<IdentityId>,
    /// Clique size(s) for a single check
    #[arg(long = "n", value_delimiter = ',', allow_negative_numbers = true)]
    n: Vec<i64>,
    /// Gluing size(s) for a single check
    #[arg(long = "r", value_delimiter = ',', allow_negative_numbers = true)]
    r: Vec<i64>,
    #[arg(long, allow_negative_numbers = true)]
    j: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    e: Option<i64>,
    /// The A of the convolution lemma
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    s: Option<i64>,
    #[arg(long, default_value_t = SweepBounds::default().max_param)]
    max_param: i64,
    #[arg(long, default_value_t = SweepBounds::default().max_e)]
    max_e: i64,
    #[arg(long, default_value_t = SweepBounds::default().max_j)]
    max_j: i64,
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_cap(s: &str) -> Result<OracleCap, String> {
    let n: usize = s.trim().parse().map_err(|_| format!("not a vertex count: {s}"))?;
    OracleCap::new(n).map_err(|e| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the tool on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Some(Command::Report(args)) => cmd_report(&args, out),
        Some(Command::Verify(args)) => cmd_verify(&args, out),
        Some(Command::Identities(args)) => cmd_identities(&args, out),
        None => cmd_report(&cli.report, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<u8, String>;

fn io(e: std::io::Error) -> String {
    e.to_string()
}

fn insert(map: &mut BTreeMap<String, InvValue>, key: &str, value: impl Into<InvValue>) {
    map.insert(key.to_string(), value.into());
}

fn primal_report(spec: &GluingSpec, k: Option<i64>) -> chordal_betti::Result<(String, Report)> {
    let dim = spec.dim();
    let k_eff = k.unwrap_or(dim);
    let table = skeleton_betti_table(spec, k_eff)?;
    let inv = skeleton_invariants(spec, k_eff)?;
    let mut m = BTreeMap::new();
    insert(&mut m, "skeleton", k_eff.min(dim));
    insert(&mut m, "krull_dim", inv.krull_dim);
    insert(&mut m, "regularity", inv.regularity);
    insert(&mut m, "proj_dim", inv.proj_dim);
    insert(&mut m, "depth", inv.depth);
    insert(&mut m, "multiplicity", inv.multiplicity);
    insert(&mut m, "h_degree", inv.h_degree);
    insert(&mut m, "a_invariant", inv.a_invariant);
    insert(&mut m, "reduced_euler", inv.euler);
    insert(&mut m, "cohen_macaulay", inv.cm_class.cohen_macaulay);
    insert(&mut m, "initially_cm", inv.cm_class.initially_cm);
    insert(&mut m, "sequentially_cm", inv.cm_class.sequentially_cm);
    let title = if k_eff >= dim {
        format!("Betti table of K[Δ] for {spec}")
    } else {
        format!("Betti table of the {k_eff}-skeleton of Δ for {spec}")
    };
    Ok((title, Report { table, invariants: m }))
}

fn dual_report(spec: &GluingSpec) -> chordal_betti::Result<(String, Report)> {
    let table = dual_betti_table(spec)?;
    let p = dual_profile(spec)?;
    let res = dual_resolution(spec)?;
    let mut m = BTreeMap::new();
    insert(&mut m, "krull_dim", p.krull_dim);
    insert(&mut m, "regularity", p.regularity);
    insert(&mut m, "proj_dim", p.proj_dim);
    insert(&mut m, "depth", spec.n_vertices() as i64 - p.proj_dim);
    insert(&mut m, "a_invariant", p.a_invariant);
    insert(&mut m, "cm_type", p.cm_type);
    insert(&mut m, "multiplicity", p.multiplicity);
    insert(&mut m, "cohen_macaulay", true);
    insert(&mut m, "gorenstein", p.gorenstein);
    insert(&mut m, "pure_resolution", p.pure_resolution);
    insert(&mut m, "linear_resolution", p.linear_resolution);
    let homology = match p.homology {
        DualHomology::Acyclic => "acyclic".to_string(),
        DualHomology::Wedge { sphere_dim, count } => format!("wedge of {count} spheres of dimension {sphere_dim}"),
    };
    insert(&mut m, "homology", homology);
    let d1: Vec<String> = res.d1.iter().map(ToString::to_string).collect();
    insert(&mut m, "d1", format!("[{}]", d1.join(", ")));
    let d2: Vec<String> = res
        .d2
        .iter()
        .map(|row| format!("[{}]", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    insert(&mut m, "d2", format!("[{}]", d2.join(", ")));
    Ok((format!("Betti table of K[Δ^∨] for {spec}"), Report { table, invariants: m }))
}

fn dual_skeleton_report(spec: &GluingSpec, k: i64) -> chordal_betti::Result<(String, Report)> {
    let table = dual_skeleton_betti_table(spec, k)?;
    let p = dual_skeleton_profile(spec, k)?;
    let mut m = BTreeMap::new();
    insert(&mut m, "skeleton", k);
    insert(&mut m, "krull_dim", p.krull_dim);
    insert(&mut m, "regularity", p.ideal_regularity - 1);
    insert(&mut m, "ideal_regularity", p.ideal_regularity);
    insert(&mut m, "proj_dim", p.proj_dim);
    insert(&mut m, "depth", spec.n_vertices() as i64 - p.proj_dim);
    insert(&mut m, "cohen_macaulay", p.cohen_macaulay);
    insert(&mut m, "cm_type", p.cm_type);
    insert(&mut m, "multiplicity", p.multiplicity);
    insert(&mut m, "h_degree", p.h_degree);
    insert(&mut m, "a_invariant", p.h_degree - p.krull_dim);
    insert(&mut m, "reduced_euler", p.euler);
    insert(&mut m, "sphere_count", p.sphere_count);
    insert(&mut m, "simplex_skeleton", p.simplex_equal);
    Ok((
        format!("Betti table of the {k}-skeleton of Δ^∨ for {spec}"),
        Report { table, invariants: m },
    ))
}

fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> CmdResult {
    let spec_args = args.spec.as_ref().ok_or("--n is required")?;
    let spec = spec_args.spec().map_err(|e| e.to_string())?;
    let built = if args.dual {
        dual_report(&spec)
    } else if let Some(k) = args.dual_skeleton {
        dual_skeleton_report(&spec, k)
    } else {
        primal_report(&spec, args.skeleton)
    };
    let (title, report) = built.map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Table => render_report_text(&title, &report),
        Format::Json => render_json(&report),
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn verification_json(report: &VerificationReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            };
            json!({ "name": c.name, "status": status, "detail": c.detail })
        })
        .collect();
    json!({
        "spec": report.spec.to_string(),
        "field": report.field.to_string(),
        "passed": report.passed(),
        "checks": checks,
    })
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let spec = args.spec.spec().map_err(|e| e.to_string())?;
    let opts = VerifyOptions {
        field: args.field,
        cap: args.oracle_cap.unwrap_or_default(),
        max_k: args.max_k,
        realizations: !args.no_realizations,
    };
    let report = verify_with(&spec, &opts).map_err(|e| e.to_string())?;
    match args.format {
        Format::Table => writeln!(out, "{report}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&verification_json(&report)).expect("serializable")),
    }
    .map_err(io)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn scalar(values: &[i64], name: &str) -> Result<i64, String> {
    match values {
        [v] => Ok(*v),
        _ => Err(format!("--{name} takes a single value here")),
    }
}

fn required(v: Option<i64>, name: &str) -> Result<i64, String> {
    v.ok_or_else(|| format!("--{name} is required for this identity"))
}

fn single_case(id: IdentityId, a: &IdentityArgs) -> Result<IdentityCase, String> {
    let j = || required(a.j, "j");
    Ok(match id {
        IdentityId::ConvolutionLemma => IdentityCase::ConvolutionLemma {
            n: scalar(&a.n, "n")?,
            a: required(a.a, "a")?,
            s: required(a.s, "s")?,
        },
        IdentityId::GeneralHilbert => IdentityCase::GeneralHilbert { n: a.n.clone(), r: a.r.clone(), j: j()? },
        IdentityId::EqualN => IdentityCase::EqualN { n: scalar(&a.n, "n")?, r: a.r.clone(), j: j()? },
        IdentityId::EqualR => IdentityCase::EqualR { n: a.n.clone(), r: scalar(&a.r, "r")?, j: j()? },
        IdentityId::EqualNR => IdentityCase::EqualNR {
            n: scalar(&a.n, "n")?,
            r: scalar(&a.r, "r")?,
            e: required(a.e, "e")?,
            j: j()?,
        },
        IdentityId::Reduced => IdentityCase::Reduced {
            n: scalar(&a.n, "n")?,
            r: scalar(&a.r, "r")?,
            e: required(a.e, "e")?,
            j: j()?,
        },
        IdentityId::ChuVandermonde => IdentityCase::ChuVandermonde {
            n: scalar(&a.n, "n")?,
            r: scalar(&a.r, "r")?,
            j: j()?,
        },
        IdentityId::SingleClique => IdentityCase::SingleClique { n: scalar(&a.n, "n")?, j: j()? },
    })
}

fn cmd_identities(args: &IdentityArgs, out: &mut dyn Write) -> CmdResult {
    let has_params = !args.n.is_empty()
        || !args.r.is_empty()
        || [args.j, args.e, args.a, args.s].iter().any(Option::is_some);
    if has_params {
        let id = args.only.ok_or("parameters need --only to select an identity")?;
        let case = single_case(id, args)?;
        let check = check_specializations(&case).map_err(|e| e.to_string())?;
        let rel = if check.equal { "=" } else { "!=" };
        writeln!(out, "{case}: {} {rel} {}", check.lhs, check.rhs).map_err(io)?;
        return Ok(if check.equal { EXIT_OK } else { EXIT_MISMATCH });
    }
    let bounds = SweepBounds {
        max_param: args.max_param,
        max_e: args.max_e,
        max_j: args.max_j,
    };
    let ids: Vec<IdentityId> = match args.only {
        Some(id) => vec![id],
        None => IdentityId::ALL.to_vec(),
    };
    let mut ok = true;
    for id in ids {
        let summary = sweep(id, &bounds).map_err(|e| e.to_string())?;
        writeln!(out, "{summary}").map_err(io)?;
        for (case, check) in summary.failures.iter().take(5) {
            writeln!(out, "  counterexample {case}: {} != {}", check.lhs, check.rhs).map_err(io)?;
        }
        for (n, r) in summary.formulation_failures.iter().take(5) {
            writeln!(out, "  formulations disagree at n={n:?} r={r:?}").map_err(io)?;
        }
        ok &= summary.passed();
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}
