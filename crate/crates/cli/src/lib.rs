//! Command-line front end for `coinrecip`.
//!
//! [`run`] parses arguments, dispatches to the library and renders the result
//! as plain text, a single JSON object, or CSV with a header row. Exit codes:
//! 0 on success, 1 on bad input (parse errors and domain errors), 2 when a
//! verification reports failures.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use coinrecip::coinproblem::{
    best_family, best_family_point, count_representable_upto, frobenius_number,
    nonrepresentable_set, representation_count, sylvester_sum, sylvester_sum_power,
    weighted_sylvester_sum,
};
use coinrecip::floorsum::{floor_sum_fast, floor_sum_naive, FloorSumQuery};
use coinrecip::jacobi::{jacobi_by_definition, jacobi_eisenstein};
use coinrecip::verify::{self, CheckResult, GridSpec, Suite};
use coinrecip::{CoprimePair, ExactRational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "coinrecip",
    version,
    about = "Exact two-coin Frobenius counts, floor-sum reciprocity and Jacobi symbols"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sum of floor(i*b/a) for i = 1..=d.
    Floorsum {
        a: u64,
        b: u64,
        d: u64,
        /// Evaluate term by term instead of by reciprocity.
        #[arg(long)]
        naive: bool,
    },
    /// Largest integer not of the form a*x + b*y.
    Frobenius { a: u64, b: u64 },
    /// Number of nonnegative solutions of a*x + b*y = n.
    Count { a: u64, b: u64, n: u64 },
    /// Number of representable integers in [0, k].
    Upto {
        a: u64,
        b: u64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Closed-form threshold family (requires b < a).
    Best {
        a: u64,
        b: u64,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        alpha: Option<u64>,
        /// Every admissible alpha.
        #[arg(long)]
        all: bool,
    },
    /// Nonrepresentable integers and sums over them.
    Gaps(GapsArgs),
    /// Jacobi symbol (a/b).
    Jacobi {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        b: u64,
        #[arg(long, value_enum, default_value_t = Method::Eisenstein)]
        method: Method,
    },
    /// Replay the identity suite over a parameter grid.
    Verify {
        /// Grid bounds a_max and b_max.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        grid: Option<Vec<u64>>,
        #[arg(long)]
        odd_only: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Reproduce the published N0(29, 23; k) table.
    Table1,
}

#[derive(Debug, Args)]
struct GapsArgs {
    a: u64,
    b: u64,
    /// Sum of the gaps.
    #[arg(long, group = "statistic")]
    sum: bool,
    /// Sum of the m-th powers of the gaps.
    #[arg(long, value_name = "M", group = "statistic")]
    power: Option<u32>,
    /// Sum of lambda^(n-1) * n^m over the gaps; lambda as p or p/q.
    #[arg(long, num_args = 2, value_names = ["LAMBDA", "M"], group = "statistic")]
    weighted: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Eisenstein,
    Definition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Frobenius,
    Jacobi,
}

/// Errors that end a command with [`EXIT_DOMAIN`].
#[derive(Debug)]
struct UsageError(String);

impl From<coinrecip::Error> for UsageError {
    fn from(e: coinrecip::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Report, UsageError>;

/// A command's outcome in all three renderings.
struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    result: Value,
    plain: String,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    exit: i32,
}

impl Report {
    /// A single scalar result; the CSV row is the inputs followed by `result`.
    fn scalar(command: &'static str, inputs: Map<String, Value>, result: Value, plain: String) -> Self {
        let mut header: Vec<String> = inputs.keys().cloned().collect();
        header.push("result".into());
        let mut row: Vec<String> = inputs.values().map(cell).collect();
        row.push(plain.clone());
        Self {
            command,
            inputs,
            result,
            plain,
            header,
            rows: vec![row],
            exit: EXIT_OK,
        }
    }

    /// A result that is an array of row objects sharing `header` as keys.
    fn table(command: &'static str, inputs: Map<String, Value>, header: &[&str], rows: Vec<Vec<Value>>) -> Self {
        let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
        let objects: Vec<Value> = rows
            .iter()
            .map(|row| Value::Object(header.iter().cloned().zip(row.iter().cloned()).collect()))
            .collect();
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let mut plain = header.join(" ");
        for row in &rows {
            plain.push('\n');
            plain.push_str(&row.join(" "));
        }
        Self {
            command,
            inputs,
            result: Value::Array(objects),
            plain,
            header,
            rows,
            exit: EXIT_OK,
        }
    }

    fn render(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Plain => writeln!(out, "{}", self.plain),
            Format::Json => {
                let object = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "result": self.result,
                });
                writeln!(out, "{object}")
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(&self.header)?;
                for row in &self.rows {
                    writer.write_record(row)?;
                }
                writer.flush()
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn inputs<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn pair(a: u64, b: u64) -> Result<CoprimePair, UsageError> {
    Ok(CoprimePair::new(a, b)?)
}

fn floorsum(a: u64, b: u64, d: u64, naive: bool) -> CmdResult {
    let q = FloorSumQuery::new(a, b, d)?;
    let value = if naive { floor_sum_naive(q) } else { floor_sum_fast(q) }.value;
    let method = if naive { "naive" } else { "fast" };
    Ok(Report::scalar(
        "floorsum",
        inputs([("a", a.into()), ("b", b.into()), ("d", d.into()), ("method", method.into())]),
        // u128 does not fit a JSON number losslessly everywhere; keep it exact
        if value <= u64::MAX as u128 { json!(value as u64) } else { json!(value.to_string()) },
        value.to_string(),
    ))
}

fn best(a: u64, b: u64, alpha: Option<u64>) -> CmdResult {
    let p = pair(a, b)?;
    let points = match alpha {
        Some(alpha) => vec![best_family_point(p, alpha)?],
        None => best_family(p)?,
    };
    let rows = points
        .iter()
        .map(|pt| vec![json!(pt.alpha), json!(pt.beta), json!(pt.k), json!(pt.n0)])
        .collect();
    let mut given = inputs([("a", a.into()), ("b", b.into())]);
    match alpha {
        Some(alpha) => given.insert("alpha".into(), alpha.into()),
        None => given.insert("all".into(), true.into()),
    };
    Ok(Report::table("best", given, &["alpha", "beta", "k", "n0"], rows))
}

fn gaps(args: &GapsArgs) -> CmdResult {
    let p = pair(args.a, args.b)?;
    let mut given = inputs([("a", args.a.into()), ("b", args.b.into())]);
    let value = if args.sum {
        given.insert("statistic".into(), "sum".into());
        sylvester_sum(p).to_string()
    } else if let Some(m) = args.power {
        given.insert("statistic".into(), "power".into());
        given.insert("m".into(), m.into());
        sylvester_sum_power(p, m).to_string()
    } else if let Some(weighted) = &args.weighted {
        let lambda: ExactRational = weighted[0]
            .parse()
            .map_err(|e| UsageError(format!("invalid value '{}' for '<LAMBDA>': {e}", weighted[0])))?;
        let m: u32 = weighted[1]
            .parse()
            .map_err(|e| UsageError(format!("invalid value '{}' for '<M>': {e}", weighted[1])))?;
        given.insert("statistic".into(), "weighted".into());
        given.insert("lambda".into(), lambda.to_string().into());
        given.insert("m".into(), m.into());
        weighted_sylvester_sum(p, &lambda, m)?.to_string()
    } else {
        let set = nonrepresentable_set(p);
        let rows = set.gaps.iter().map(|&g| vec![json!(g)]).collect();
        let mut report = Report::table("gaps", given, &["n"], rows);
        report.result = json!(set.gaps);
        report.plain = set.gaps.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        return Ok(report);
    };
    Ok(Report::scalar("gaps", given, Value::String(value.clone()), value))
}

fn jacobi(a: i64, b: u64, method: Method) -> CmdResult {
    let (symbol, name) = match method {
        Method::Eisenstein => {
            let a = u64::try_from(a)
                .map_err(|_| UsageError(format!("the floor-sum method needs a positive odd a, got {a}")))?;
            (jacobi_eisenstein(a, b)?, "eisenstein")
        }
        Method::Definition => (jacobi_by_definition(a, b)?, "definition"),
    };
    Ok(Report::scalar(
        "jacobi",
        inputs([("a", a.into()), ("b", b.into()), ("method", name.into())]),
        json!(symbol.value()),
        symbol.to_string(),
    ))
}

fn check_rows(results: &[CheckResult]) -> (Vec<Vec<String>>, String) {
    let mut plain = Vec::new();
    let rows = results
        .iter()
        .map(|r| {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let ms = r.elapsed.as_secs_f64() * 1e3;
            plain.push(format!(
                "{status} {} cases={} failures={} ({ms:.1} ms)",
                r.check_id,
                r.cases_run,
                r.failures.len()
            ));
            for f in r.failures.iter().take(10) {
                plain.push(format!("    {}: expected {}, got {}", f.inputs, f.expected, f.actual));
            }
            if r.failures.len() > 10 {
                plain.push(format!("    ... {} more", r.failures.len() - 10));
            }
            vec![
                r.check_id.clone(),
                r.cases_run.to_string(),
                r.failures.len().to_string(),
                format!("{ms:.3}"),
            ]
        })
        .collect();
    (rows, plain.join("\n"))
}

fn verify_report(grid: Option<Vec<u64>>, odd_only: bool, seed: Option<u64>, suite: SuiteArg) -> CmdResult {
    let mut spec = match grid.as_deref() {
        Some(&[a_max, b_max]) => GridSpec::new(a_max, b_max)?,
        _ => GridSpec::default(),
    };
    spec = spec.odd_only(odd_only);
    if let Some(seed) = seed {
        spec = spec.seed(seed);
    }
    let (suite, suite_name) = match suite {
        SuiteArg::All => (Suite::All, "all"),
        SuiteArg::Frobenius => (Suite::Frobenius, "frobenius"),
        SuiteArg::Jacobi => (Suite::Jacobi, "jacobi"),
    };
    let results = verify::run_suite(suite, &spec);
    let (rows, plain) = check_rows(&results);
    Ok(Report {
        command: "verify",
        inputs: inputs([
            ("a_max", spec.a_max.into()),
            ("b_max", spec.b_max.into()),
            ("odd_only", spec.odd_only.into()),
            ("seed", spec.seed.into()),
            ("sample_count", spec.sample_count.into()),
            ("suite", suite_name.into()),
        ]),
        result: serde_json::to_value(&results).expect("check results serialize"),
        plain,
        header: ["check_id", "cases_run", "failures", "elapsed_ms"].map(String::from).to_vec(),
        rows,
        exit: if verify::all_passed(&results) { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn table1() -> CmdResult {
    let rows = verify::threshold_table_rows();
    let check = verify::reproduce_threshold_table();
    let values = rows
        .iter()
        .map(|r| {
            vec![
                json!(r.alpha),
                json!(r.beta),
                json!(r.k),
                json!(r.n0),
                json!(r.n0_counted),
                json!(r.published_k),
                json!(r.published_n0),
                json!(if r.matches_published() { "ok" } else { "mismatch" }),
            ]
        })
        .collect();
    let mut report = Report::table(
        "table1",
        inputs([("a", 29.into()), ("b", 23.into())]),
        &["alpha", "beta", "k", "n0", "n0_counted", "published_k", "published_n0", "status"],
        values,
    );
    if !check.passed() {
        report.exit = EXIT_VERIFY;
    }
    Ok(report)
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Floorsum { a, b, d, naive } => floorsum(a, b, d, naive),
        Command::Frobenius { a, b } => {
            let f = frobenius_number(pair(a, b)?);
            Ok(Report::scalar("frobenius", inputs([("a", a.into()), ("b", b.into())]), json!(f), f.to_string()))
        }
        Command::Count { a, b, n } => {
            let c = representation_count(pair(a, b)?, n).count;
            Ok(Report::scalar(
                "count",
                inputs([("a", a.into()), ("b", b.into()), ("n", n.into())]),
                json!(c),
                c.to_string(),
            ))
        }
        Command::Upto { a, b, k } => {
            let c = count_representable_upto(pair(a, b)?, k);
            Ok(Report::scalar(
                "upto",
                inputs([("a", a.into()), ("b", b.into()), ("k", k.into())]),
                json!(c),
                c.to_string(),
            ))
        }
        Command::Best { a, b, alpha, all: _ } => best(a, b, alpha),
        Command::Gaps(args) => gaps(&args),
        Command::Jacobi { a, b, method } => jacobi(a, b, method),
        Command::Verify {
            grid,
            odd_only,
            seed,
            suite,
        } => verify_report(grid, odd_only, seed, suite),
        Command::Table1 => table1(),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_DOMAIN
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(report) => match report.render(cli.format, out) {
            Ok(()) => report.exit,
            Err(e) => {
                let _ = writeln!(err, "error: failed to write output: {e}");
                EXIT_DOMAIN
            }
        },
        Err(UsageError(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_DOMAIN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("coinrecip").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn scalar_commands_print_plain_values() {
        assert_eq!(run_str(&["floorsum", "29", "23", "8"]), (0, "24\n".into(), String::new()));
        assert_eq!(run_str(&["floorsum", "23", "4", "18", "--naive"]).1, "21\n");
        assert_eq!(run_str(&["upto", "29", "23", "257"]).1, "60\n");
        assert_eq!(run_str(&["upto", "29", "23", "-5"]).1, "0\n");
        assert_eq!(run_str(&["frobenius", "29", "23"]).1, "615\n");
        assert_eq!(run_str(&["count", "29", "23", "667"]).1, "2\n");
        assert_eq!(run_str(&["jacobi", "2", "15", "--method", "definition"]).1, "1\n");
        assert_eq!(run_str(&["jacobi", "-1", "7", "--method", "definition"]).1, "-1\n");
        assert_eq!(run_str(&["jacobi", "15", "77"]).1, run_str(&["jacobi", "15", "77", "--method", "definition"]).1);
    }

    #[test]
    fn gaps_variants() {
        assert_eq!(run_str(&["gaps", "3", "5"]).1, "1 2 4 7\n");
        assert_eq!(run_str(&["gaps", "3", "5", "--sum"]).1, "14\n");
        assert_eq!(run_str(&["gaps", "3", "5", "--power", "2"]).1, "70\n");
        assert_eq!(run_str(&["gaps", "3", "5", "--weighted", "1/2", "0"]).1, "105/64\n");
        assert_eq!(run_str(&["gaps", "1", "5"]).1, "\n");
        let (code, _, err) = run_str(&["gaps", "3", "5", "--sum", "--power", "2"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
    }

    #[test]
    fn domain_errors_exit_one() {
        let (code, out, err) = run_str(&["frobenius", "6", "4"]);
        assert_eq!((code, out.as_str()), (1, ""));
        assert!(err.contains("not coprime"));
        assert_eq!(run_str(&["best", "23", "29", "--alpha", "3"]).0, 1);
        assert_eq!(run_str(&["jacobi", "-3", "7"]).0, 1);
        assert_eq!(run_str(&["gaps", "3", "5", "--weighted", "x", "1"]).0, 1);
    }

    #[test]
    fn parse_errors_name_the_argument() {
        let (code, _, err) = run_str(&["floorsum", "29", "abc", "8"]);
        assert_eq!(code, 1);
        assert!(err.contains("abc") && err.contains("<B>"), "{err}");
        let (code, _, err) = run_str(&["frobnicate"]);
        assert_eq!(code, 1);
        assert!(err.contains("Usage"), "{err}");
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn verify_small_jacobi_grid_passes() {
        let (code, out, _) = run_str(&["verify", "--grid", "15", "15", "--odd-only", "--suite", "jacobi"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    }
}
