//! Command-line frontend: argument parsing, dispatch and output formatting.

use crate::clebsch::{inject, inject_neg_via_dual, Direction, InjectorSpec, Mode};
use crate::contiguous::{pmatrix, rmatrix};
use crate::error::{Error, Result};
use crate::glmodule::{act, Gen, ModuleElement, Sign, TermJson};
use crate::gtpattern::{enumerate, weight, Basis, Dominant, Pattern, SigmaChar, WeightVec};
use crate::uea::{self, UeaElement};
use crate::verify::{self, SuiteReport};
use crate::whittaker::{chi, chi_at, chi_oracle, holonomic_system, ChiKind, KType};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;

/// Default sweep bound for `verify`.
pub const DEFAULT_MAX_SPREAD: i64 = 4;
/// Environment variable overriding the default sweep bound.
pub const SPREAD_ENV: &str = "SP3GK_MAX_SPREAD";

#[derive(Parser, Debug)]
#[command(name = "sp3gk", version, about = "Exact (g,K)-module computations for principal series of Sp(3,R)")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gelfand-Tsetlin patterns of a type, with weights and positions.
    Patterns {
        #[arg(long = "type", value_parser = parse_dominant)]
        lambda: Dominant,
        #[arg(long, value_parser = parse_sigma)]
        sigma: Option<SigmaChar>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Action of E_pq on basis vectors f(M).
    Action {
        #[arg(long = "type", value_parser = parse_dominant)]
        lambda: Dominant,
        #[arg(long = "gen", value_parser = parse_gen)]
        generator: Gen,
        #[arg(long, value_parser = parse_pattern)]
        pattern: Option<Pattern>,
    },
    /// Clebsch-Gordan injector applied to a basis vector of the target.
    Cg {
        #[arg(long, value_parser = parse_dominant)]
        source: Dominant,
        #[arg(long = "dir", value_parser = parse_direction, allow_hyphen_values = true)]
        direction: Direction,
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[arg(long, value_enum, default_value = "closed")]
        mode: CgMode,
    },
    /// The p±-valued matrix P^λ_{±ij}.
    Pmatrix {
        #[arg(long = "type", value_parser = parse_dominant)]
        lambda: Dominant,
        #[arg(long = "dir", value_parser = parse_pair, allow_hyphen_values = true)]
        direction: (Sign, usize, usize),
    },
    /// The contiguous-relation matrix R(Γ^λ_{±ij}) for a σ.
    Rmatrix {
        #[arg(long = "type", value_parser = parse_dominant)]
        lambda: Dominant,
        #[arg(long, value_parser = parse_sigma)]
        sigma: SigmaChar,
        #[arg(long = "dir", value_parser = parse_pair, allow_hyphen_values = true)]
        direction: (Sign, usize, usize),
    },
    /// Eigenvalue of C2, C4, C6 or the tilde relation on a peripheral K-type.
    Chi {
        #[arg(long, value_parser = parse_sigma)]
        sigma: SigmaChar,
        #[arg(long, value_parser = parse_ktype)]
        ktype: KType,
        /// 2, 4, 6 or tilde.
        #[arg(long = "i", value_parser = parse_chi_kind)]
        kind: ChiKind,
        /// Substitute l and also report the R-matrix composition.
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
    },
    /// Holonomic system of the A-radial Whittaker functions.
    System {
        #[arg(long, value_parser = parse_sigma)]
        sigma: SigmaChar,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, value_parser = parse_ktype)]
        ktype: KType,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Operations in U(g).
    Uea {
        #[command(subcommand)]
        command: UeaCommand,
    },
    /// Run verification sweeps and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CgMode {
    Closed,
    Composed,
}

#[derive(Subcommand, Debug)]
pub enum UeaCommand {
    /// PBW normal form of C2, C4, C6, D+-jk or D-+jk.
    NormalOrder {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// Drop monomials in [n,n]U(g).
        #[arg(long)]
        mod_nn: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Gl3,
    Clebsch,
    Equivariance,
    LemmaConstants,
    ClosedVsComposed,
    TheoremMain,
    ChiOracle,
    KInvariance,
    NormalOrder,
    Submain,
    Dimension,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite to run (positional form).
    #[arg(value_enum)]
    pub suite_pos: Option<Suite>,
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Sweep bound on λ1−λ3; overrides SP3GK_MAX_SPREAD.
    #[arg(long)]
    pub max_spread: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}
fn parse_dominant(s: &str) -> std::result::Result<Dominant, String> {
    lift(s.parse())
}
fn parse_sigma(s: &str) -> std::result::Result<SigmaChar, String> {
    lift(s.parse())
}
fn parse_gen(s: &str) -> std::result::Result<Gen, String> {
    lift(s.parse())
}
fn parse_pattern(s: &str) -> std::result::Result<Pattern, String> {
    lift(s.parse())
}
fn parse_direction(s: &str) -> std::result::Result<Direction, String> {
    lift(s.parse())
}
fn parse_ktype(s: &str) -> std::result::Result<KType, String> {
    lift(s.parse())
}
fn parse_chi_kind(s: &str) -> std::result::Result<ChiKind, String> {
    lift(s.parse())
}
fn parse_pair(s: &str) -> std::result::Result<(Sign, usize, usize), String> {
    match s.parse::<Direction>() {
        Ok(Direction::Pos(i, j)) => Ok((Sign::Plus, i, j)),
        Ok(Direction::Neg(i, j)) => Ok((Sign::Minus, i, j)),
        _ => Err(format!("expected +ij or -ij with i <= j, got {s:?}")),
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct PatternRow {
    rows: [Vec<i64>; 3],
    weight: WeightVec,
    l: usize,
    l_sigma: Option<usize>,
}

#[derive(Serialize)]
struct ActionRow {
    pattern: Pattern,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct ChiOut {
    sigma: String,
    ktype: &'static str,
    chi: crate::arith::ChiValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_l: Option<crate::arith::NuPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<crate::arith::NuPoly>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Sweep bound: explicit flag, then the environment, then the default.
pub fn max_spread(flag: Option<i64>) -> std::result::Result<i64, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(SPREAD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{SPREAD_ENV}={v:?} is not an integer")),
        Err(_) => Ok(DEFAULT_MAX_SPREAD),
    }
}

/// Run the suites selected by `suite` at the given bound.
pub fn run_suites(suite: Suite, spread: i64) -> Vec<SuiteReport> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let clebsch = suite == Suite::Clebsch;
    let mut out = Vec::new();
    if want(Suite::Gl3) {
        out.push(verify::gl3_relations(spread));
    }
    if want(Suite::Equivariance) || clebsch {
        out.push(verify::equivariance(spread));
    }
    if want(Suite::LemmaConstants) || clebsch {
        out.push(verify::lemma_constants());
    }
    if want(Suite::ClosedVsComposed) || clebsch {
        out.push(verify::closed_vs_composed(spread));
    }
    if want(Suite::TheoremMain) {
        out.push(verify::theorem_main(spread));
    }
    if want(Suite::ChiOracle) {
        out.push(verify::chi_sweep());
    }
    if want(Suite::KInvariance) {
        out.push(verify::k_invariance());
    }
    if want(Suite::NormalOrder) {
        out.push(verify::normal_order());
    }
    if want(Suite::Submain) {
        out.push(verify::submain(&verify::submain_cases()));
    }
    if want(Suite::Dimension) {
        out.push(verify::dimension(200, 0x5eed));
    }
    out
}

/// Pass/fail table, one line per suite.
pub fn report_table(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "{:<20} {:<4} checked={:<8} failures={:<4} {:.2}s",
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.checked,
            r.failures.len(),
            r.seconds
        );
        for f in r.failures.iter().take(20) {
            let _ = writeln!(s, "    {f}");
        }
    }
    s
}

fn parse_op(op: &str) -> std::result::Result<UeaElement, Failure> {
    let bad = || Failure::Usage(format!("unknown operator {op:?}; expected C2, C4, C6, D+-jk or D-+jk"));
    match op {
        "C2" => return Ok(uea::c_operator(1)),
        "C4" => return Ok(uea::c_operator(2)),
        "C6" => return Ok(uea::c_operator(3)),
        _ => {}
    }
    let first = if let Some(t) = op.strip_prefix("D+-") {
        (Sign::Plus, t)
    } else if let Some(t) = op.strip_prefix("D-+") {
        (Sign::Minus, t)
    } else {
        return Err(bad());
    };
    let d: Vec<usize> = first.1.chars().filter_map(|c| c.to_digit(10).map(|x| x as usize)).collect();
    if d.len() != 2 || first.1.len() != 2 || d.iter().any(|x| !(1..=3).contains(x)) {
        return Err(bad());
    }
    Ok(uea::d_operator(first.0, d[0], d[1]))
}

fn dispatch(cli: &Cli) -> std::result::Result<(String, bool), Failure> {
    let out = match &cli.command {
        Command::Patterns { lambda, sigma, format } => {
            let sigma_basis = sigma.map(|s| Basis::sigma(lambda, &s));
            let rows: Vec<PatternRow> = enumerate(lambda)
                .into_iter()
                .enumerate()
                .map(|(k, p)| PatternRow {
                    rows: p.rows(),
                    weight: weight(&p),
                    l: k + 1,
                    l_sigma: sigma_basis.as_ref().and_then(|b| b.pos(&p)).map(|x| x + 1),
                })
                .collect();
            match format {
                Format::Json => json(&rows),
                Format::Text => rows
                    .iter()
                    .map(|r| {
                        let ls = r.l_sigma.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
                        format!("{:>4} {:>4}  {:?} {:?} {:?}  weight {:?}\n", r.l, ls, r.rows[0], r.rows[1], r.rows[2], r.weight.0)
                    })
                    .collect(),
                Format::Latex => return Err(Failure::Usage("--format latex is only available for `system`".into())),
            }
        }
        Command::Action { lambda, generator, pattern } => {
            let pats = match pattern {
                Some(p) => {
                    if p.ptype() != *lambda || !p.is_valid() {
                        return Err(Failure::Usage(format!("{p} is not a valid pattern of type {lambda}")));
                    }
                    vec![*p]
                }
                None => enumerate(lambda),
            };
            let rows: Vec<ActionRow> = pats
                .iter()
                .map(|p| ActionRow { pattern: *p, terms: act(*generator, &ModuleElement::basis(p)).json_terms() })
                .collect();
            if pattern.is_some() {
                json(&serde_json::json!({ "terms": rows[0].terms }))
            } else {
                json(&rows)
            }
        }
        Command::Cg { source, direction, pattern, mode } => {
            let spec = InjectorSpec::new(*source, *direction);
            let t = match (direction, mode) {
                (Direction::Neg(i, j), CgMode::Composed) => inject_neg_via_dual(source, *i, *j, pattern)?,
                (_, CgMode::Closed) => inject(&spec, pattern, Mode::Closed)?,
                (_, CgMode::Composed) => inject(&spec, pattern, Mode::Composed)?,
            };
            json(&serde_json::json!({ "injector": spec.to_string(), "terms": t.json_terms() }))
        }
        Command::Pmatrix { lambda, direction: (s, i, j) } => json(&pmatrix(lambda, *s, *i, *j)?),
        Command::Rmatrix { lambda, sigma, direction: (s, i, j) } => json(&rmatrix(sigma, lambda, *s, *i, *j)?),
        Command::Chi { sigma, ktype, kind, l } => {
            let c = chi(sigma, *ktype, *kind)?;
            let (at_l, oracle) = match l {
                Some(l) => (Some(chi_at(&c, *l)), Some(chi_oracle(sigma, *ktype, *kind, *l)?)),
                None => (None, None),
            };
            if at_l != oracle {
                return Err(Failure::Verification("closed form and R-matrix composition differ".into()));
            }
            json(&ChiOut { sigma: sigma.to_string(), ktype: ktype.label(), chi: c, l: *l, at_l, oracle })
        }
        Command::System { sigma, l, ktype, format } => {
            let sys = holonomic_system(sigma, *l, *ktype)?;
            match format {
                Format::Json => json(&sys.json()),
                Format::Latex => sys.to_latex() + "\n",
                Format::Text => return Err(Failure::Usage("`system` supports --format json or latex".into())),
            }
        }
        Command::Uea { command: UeaCommand::NormalOrder { op, mod_nn } } => {
            let mut u = parse_op(op)?;
            if *mod_nn {
                u = u.reduce_mod_nn();
            }
            json(&serde_json::json!({ "op": op, "mod_nn": mod_nn, "terms": u.json_terms() }))
        }
        Command::Verify(args) => {
            let suite = match (args.suite_pos, args.suite) {
                (Some(a), Some(b)) if a != b => return Err(Failure::Usage("conflicting suite arguments".into())),
                (a, b) => a.or(b).unwrap_or(Suite::All),
            };
            let spread = max_spread(args.max_spread).map_err(Failure::Usage)?;
            if spread < 0 {
                return Err(Failure::Usage("--max-spread must be nonnegative".into()));
            }
            let reports = run_suites(suite, spread);
            let ok = reports.iter().all(SuiteReport::passed);
            let text = match args.format {
                Format::Json => json(&reports),
                _ => report_table(&reports),
            };
            return Ok((text, ok));
        }
    };
    Ok((out, true))
}

/// Parse `argv` (including the program name) and run the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let (text, ok, err) = match dispatch(&cli) {
        Ok((t, ok)) => (t, ok, String::new()),
        Err(Failure::Usage(m)) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Verification(m)) => (String::new(), false, format!("error: {m}\n")),
    };
    let code = if ok { 0 } else { 1 };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            return Outcome { code: 2, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) };
        }
        return Outcome { code, stdout: String::new(), stderr: err };
    }
    Outcome { code, stdout: text, stderr: err }
}
