//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 computation
//! error (exhausted quotients, overflow, budget). Digits are printed most
//! significant first; JSON carries them little-endian with every integer as a
//! decimal string.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::alt_ostrowski::{evaluate_alt, expand_integer, validate_alt};
use crate::cf::PartialQuotientSource;
use crate::error::Error;
use crate::oracle::{self, check_theorems, cross_check, CheckVerdict, Kind, Mismatch};
use crate::ostrowski::{evaluate_abs, expand_natural, validate_abs};
use crate::BigTable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

/// Environment variable overriding the oracle's sequence budget.
pub const BUDGET_ENV: &str = "OSTRA_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "ostra",
    version,
    about = "Ostrowski numeration over continued-fraction bases"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand one value. Negative values need `--` or `--value`.
    Expand(ExpandArgs),
    /// Evaluate a digit string (most significant first) and check admissibility.
    Eval(EvalArgs),
    /// Print a counting table over a range of values.
    Table(TableArgs),
    /// Enumerate all admissible strings up to a length and check existence and uniqueness.
    Verify(VerifyArgs),
    /// Print partial quotients and (signed) denominators.
    Quotients(QuotientsArgs),
}

#[derive(Debug, Args)]
pub struct BaseArgs {
    /// golden | silver | const:<a> | periodic:<pre>;<per> | explicit:<a1,..> | surd:<d>,<p>,<q>
    #[arg(long)]
    pub base: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long)]
    pub kind: Kind,
    #[arg(long = "value", allow_negative_numbers = true, conflicts_with = "positional")]
    pub flag: Option<BigInt>,
    #[arg(value_name = "VALUE", id = "positional", required_unless_present = "flag")]
    pub positional: Option<BigInt>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long)]
    pub kind: Kind,
    /// Read the digits least significant first instead.
    #[arg(long)]
    pub le: bool,
    #[arg(value_name = "DIGIT")]
    pub digits: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long)]
    pub kind: Kind,
    #[arg(long, allow_negative_numbers = true)]
    pub from: BigInt,
    #[arg(long, allow_negative_numbers = true)]
    pub to: BigInt,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long)]
    pub kind: Kind,
    #[arg(long)]
    pub max_len: usize,
}

#[derive(Debug, Args)]
pub struct QuotientsArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Number of partial quotients a_1..a_count to consume.
    #[arg(long)]
    pub count: usize,
}

/// One expansion in the JSON interchange format.
///
/// `q` lists the weights of the digit positions: `q_0..q_{ℓ−1}` for `abs`,
/// `q*_0..q*_{ℓ−1}` for `alt`, so `value = Σ digits_le[i] · q[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub base: String,
    pub kind: String,
    pub value: String,
    pub ell: usize,
    pub digits_le: Vec<u64>,
    pub q: Vec<String>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BaseSpec { .. } | Error::InvalidSurd(_) | Error::ZeroQuotient(_) | Error::NegativeValue(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other),
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run_from<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match run(&cfg) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTE
        }
    }
}

fn run(cfg: &CliConfig) -> Result<Output, Failure> {
    match &cfg.command {
        Command::Expand(a) => run_expand(a),
        Command::Eval(a) => run_eval(a),
        Command::Table(a) => run_table(a),
        Command::Verify(a) => run_verify(a),
        Command::Quotients(a) => run_quotients(a),
    }
}

fn table_for(base: &BaseArgs) -> Result<BigTable, Failure> {
    let source: PartialQuotientSource = base.base.parse()?;
    Ok(BigTable::new(source))
}

fn expand(table: &BigTable, kind: Kind, value: &BigInt) -> Result<Vec<u64>, Failure> {
    Ok(match kind {
        Kind::Absolute => expand_natural(table, value)?.into_digits(),
        Kind::Alternating => expand_integer(table, value)?.into_digits(),
    })
}

fn weights(table: &BigTable, kind: Kind, len: usize) -> Result<Vec<BigInt>, Failure> {
    Ok(match kind {
        Kind::Absolute => table.denominators(len)?,
        Kind::Alternating => table.signed_denominators(len)?,
    })
}

fn weight_label(kind: Kind, k: usize) -> String {
    match kind {
        Kind::Absolute => format!("q_{k}"),
        Kind::Alternating => format!("q*_{k}"),
    }
}

fn spaced<I: IntoIterator<Item = D>, D: ToString>(items: I) -> String {
    items.into_iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn expansion_json(base: &str, kind: Kind, value: &BigInt, digits: &[u64], q: &[BigInt]) -> ExpansionJson {
    ExpansionJson {
        base: base.to_string(),
        kind: kind.to_string(),
        value: value.to_string(),
        ell: digits.len(),
        digits_le: digits.to_vec(),
        q: q.iter().map(BigInt::to_string).collect(),
    }
}

fn to_json<S: Serialize>(value: &S) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn check_kind_value(kind: Kind, value: &BigInt) -> Result<(), Failure> {
    if kind == Kind::Absolute && value.is_negative() {
        return Err(Failure::Usage(format!(
            "kind abs needs a non-negative value, got {value}"
        )));
    }
    Ok(())
}

fn run_expand(args: &ExpandArgs) -> Result<Output, Failure> {
    let value = args
        .flag
        .as_ref()
        .or(args.positional.as_ref())
        .expect("clap requires a value");
    check_kind_value(args.kind, value)?;
    let table = table_for(&args.base)?;
    let digits = expand(&table, args.kind, value)?;
    let q = weights(&table, args.kind, digits.len())?;

    if args.base.json {
        return Ok(Output::ok(to_json(&expansion_json(
            &args.base.base,
            args.kind,
            value,
            &digits,
            &q,
        ))));
    }
    let labels = (0..digits.len()).rev().map(|k| weight_label(args.kind, k));
    Ok(Output::ok(format!(
        "{value} = [{}]·({})\nell = {}\n",
        spaced(digits.iter().rev()),
        spaced(labels),
        digits.len()
    )))
}

fn run_eval(args: &EvalArgs) -> Result<Output, Failure> {
    let table = table_for(&args.base)?;
    let mut digits = args.digits.clone();
    if !args.le {
        digits.reverse();
    }
    let (value, verdict) = match args.kind {
        Kind::Absolute => (evaluate_abs(&table, &digits)?, validate_abs(&table, &digits)?),
        Kind::Alternating => (evaluate_alt(&table, &digits)?, validate_alt(&table, &digits)?),
    };
    if args.base.json {
        #[derive(Serialize)]
        struct EvalJson {
            #[serde(flatten)]
            expansion: ExpansionJson,
            admissible: bool,
            verdict: String,
        }
        let q = weights(&table, args.kind, digits.len())?;
        let json = EvalJson {
            expansion: expansion_json(&args.base.base, args.kind, &value, &digits, &q),
            admissible: verdict.is_admissible(),
            verdict: verdict.to_string(),
        };
        return Ok(Output::ok(to_json(&json)));
    }
    let labels = (0..digits.len()).rev().map(|k| weight_label(args.kind, k));
    Ok(Output::ok(format!(
        "[{}]·({}) = {value}\n{verdict}\n",
        spaced(digits.iter().rev()),
        spaced(labels)
    )))
}

fn run_table(args: &TableArgs) -> Result<Output, Failure> {
    if args.from > args.to {
        return Err(Failure::Usage(format!("empty range {}..{}", args.from, args.to)));
    }
    check_kind_value(args.kind, &args.from)?;
    let table = table_for(&args.base)?;

    let mut rows = Vec::new();
    let mut value = args.from.clone();
    while value <= args.to {
        let digits = expand(&table, args.kind, &value)?;
        rows.push((value.clone(), digits));
        value += 1;
    }
    let width = rows.iter().map(|(_, d)| d.len()).max().unwrap_or(0);
    let columns = weights(&table, args.kind, width)?;

    if args.base.json {
        #[derive(Serialize)]
        struct TableJson {
            base: String,
            kind: String,
            columns: Vec<String>,
            rows: Vec<ExpansionJson>,
        }
        let json = TableJson {
            base: args.base.base.clone(),
            kind: args.kind.to_string(),
            columns: columns.iter().rev().map(BigInt::to_string).collect(),
            rows: rows
                .iter()
                .map(|(v, d)| expansion_json(&args.base.base, args.kind, v, d, &columns[..d.len()]))
                .collect(),
        };
        return Ok(Output::ok(to_json(&json)));
    }

    let mut text = format!(
        "({}) = ({})\n",
        spaced((0..width).rev().map(|k| weight_label(args.kind, k))),
        spaced(columns.iter().rev())
    );
    for (value, digits) in &rows {
        let padded = (0..width).rev().map(|i| digits.get(i).copied().unwrap_or(0));
        text.push_str(&format!("{value}: [{}]\n", spaced(padded)));
    }
    Ok(Output::ok(text))
}

fn budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV}={v} is not a natural number"))),
        Err(_) => Ok(oracle::DEFAULT_BUDGET),
    }
}

fn digits_be(digits: &[u64]) -> String {
    format!("[{}]", spaced(digits.iter().rev()))
}

fn run_verify(args: &VerifyArgs) -> Result<Output, Failure> {
    let table = table_for(&args.base)?;
    let report = oracle::enumerate_admissible_with_budget(&table, args.kind, args.max_len, budget()?)?;
    let verdict = check_theorems(&report);
    let mismatch = if verdict.holds() {
        cross_check(&report, &table)?
    } else {
        None
    };
    let ok = verdict.holds() && mismatch.is_none();

    let summary = match (&verdict, &mismatch) {
        (CheckVerdict::Holds { min, max, count }, None) => {
            format!("OK: {count} values in [{min},{max}], all unique")
        }
        (
            CheckVerdict::Holds { .. },
            Some(Mismatch {
                value,
                enumerated,
                expanded,
            }),
        ) => format!(
            "FAIL: expansion of {value} is {} but enumeration gives {}",
            digits_be(expanded),
            digits_be(enumerated)
        ),
        (CheckVerdict::NotUnique { value, sequences }, _) => format!(
            "FAIL: value {value} has {} admissible expansions: {}",
            sequences.len(),
            sequences.iter().map(|s| digits_be(s)).collect::<Vec<_>>().join(", ")
        ),
        (CheckVerdict::Gap { value }, _) => {
            format!(
                "FAIL: value {value} has no admissible expansion of length <= {}",
                args.max_len
            )
        }
    };
    let code = if ok { EXIT_OK } else { EXIT_VERIFY_FAILED };

    if args.base.json {
        let mut json = report.to_json();
        json["base"] = serde_json::Value::String(args.base.base.clone());
        json["ok"] = serde_json::Value::Bool(ok);
        json["summary"] = serde_json::Value::String(summary);
        return Ok(Output {
            text: to_json(&json),
            code,
        });
    }
    Ok(Output {
        text: format!("{summary}\n"),
        code,
    })
}

fn run_quotients(args: &QuotientsArgs) -> Result<Output, Failure> {
    if args.count == 0 {
        return Err(Failure::Usage("--count must be at least 1".into()));
    }
    let table = table_for(&args.base)?;
    let quotients = (1..=args.count)
        .map(|k| table.partial_quotient(k))
        .collect::<Result<Vec<_>, _>>()?;
    let q = table.denominators(args.count + 1)?;
    let qstar = table.signed_denominators(args.count + 1)?;

    if args.base.json {
        #[derive(Serialize)]
        struct QuotientsJson {
            base: String,
            count: usize,
            a: Vec<u64>,
            q: Vec<String>,
            qstar: Vec<String>,
        }
        let json = QuotientsJson {
            base: args.base.base.clone(),
            count: args.count,
            a: quotients,
            q: q.iter().map(BigInt::to_string).collect(),
            qstar: qstar.iter().map(BigInt::to_string).collect(),
        };
        return Ok(Output::ok(to_json(&json)));
    }

    let mut text = String::from("k\ta_k\tq_k\tq*_k\n");
    for k in 0..=args.count {
        let a = if k == 0 {
            "-".to_string()
        } else {
            quotients[k - 1].to_string()
        };
        text.push_str(&format!("{k}\t{a}\t{}\t{}\n", q[k], qstar[k]));
    }
    let list = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
    text.push_str(&format!("q = {}\nq* = {}\n", list(&q), list(&qstar)));
    Ok(Output::ok(text))
}
