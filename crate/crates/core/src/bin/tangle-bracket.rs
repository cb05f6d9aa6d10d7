use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tangle_bracket::catalog::tables::{reference_table, reference_tables, to_csv, to_json, to_markdown, NamedTable};
use tangle_bracket::catalog::{entry, table, verify_catalog, EntryId, Status};
use tangle_bracket::closures::{close, repeat_closure, ClosureKind};
use tangle_bracket::fraction::classify;
use tangle_bracket::oracle::{
    build_closure_diagram, build_diagram, state_sum_knot, state_sum_tangle, OracleError, ShadowDiagram,
    DEFAULT_BUDGET,
};
use tangle_bracket::poly::{Polynomial, TermOrder};
use tangle_bracket::tangle::{bracket_pair, parse, BracketPair, TangleExpr};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "tangle-bracket", version, about = "Bracket polynomials of 2-tangle shadows")]
struct Cli {
    /// Print polynomials in ascending powers of x.
    #[arg(long, global = true)]
    asc: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket pair (a, b) of a tangle expression.
    Eval { expr: String },
    /// Print the bracket of a closure, optionally of the n-fold sum.
    Close {
        expr: String,
        #[arg(long, value_parser = parse_kind)]
        kind: ClosureKind,
        #[arg(long)]
        rep: Option<u32>,
    },
    /// Print a coefficient table by catalog entry or table number.
    Table(TableArgs),
    /// Identify the catalog class or skeleton decomposition of an expression.
    Classify { expr: String },
    /// Cross-check the catalog against the algebra, the oracle and the tables.
    Verify {
        /// Print only the summary and non-passing checks.
        #[arg(long)]
        quiet: bool,
    },
    /// Compare the algebraic bracket with a brute-force state sum.
    OracleCheck {
        expr: String,
        /// Maximum number of states, e.g. `1048576` or `2^20`.
        #[arg(long, value_parser = parse_budget, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Compare a closure of the expression instead of the pair.
        #[arg(long, value_parser = parse_kind)]
        kind: Option<ClosureKind>,
        /// Use this diagram file instead of building one from the expression.
        #[arg(long)]
        diagram: Option<PathBuf>,
    },
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, conflicts_with_all = ["table", "all"], requires = "kind")]
    entry: Option<EntryId>,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<ClosureKind>,
    #[arg(long, conflicts_with = "all")]
    table: Option<u32>,
    /// Every printed table.
    #[arg(long)]
    all: bool,
    /// Rows: `a..b` (inclusive) or a single upper bound.
    #[arg(long, default_value = "0..5", value_parser = parse_range)]
    n: (u32, u32),
    /// Pad or cut rows to coefficients x^0..x^k.
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
    Json,
}

fn parse_kind(s: &str) -> Result<ClosureKind, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad row index {t:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => (0, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn parse_budget(s: &str) -> Result<u64, String> {
    let bad = || format!("bad budget {s:?}");
    match s.split_once('^') {
        Some(("2", e)) => {
            let e: u32 = e.parse().map_err(|_| bad())?;
            1u64.checked_shl(e).filter(|_| e < 64).ok_or_else(bad)
        }
        Some(_) => Err(bad()),
        None => s.parse().map_err(|_| bad()),
    }
}

struct Printer {
    order: TermOrder,
}

impl Printer {
    fn poly(&self, p: &Polynomial) -> String {
        p.to_string_ordered(self.order)
    }

    fn pair(&self, p: &BracketPair) -> String {
        format!("a = {}, b = {}", self.poly(&p.a), self.poly(&p.b))
    }
}

type CliResult = Result<(), (u8, String)>;

fn usage(msg: impl ToString) -> (u8, String) {
    (EXIT_USAGE, msg.to_string())
}

fn evaluate(text: &str) -> Result<(TangleExpr, BracketPair), (u8, String)> {
    let e = parse(text).map_err(usage)?;
    let p = bracket_pair(&e).map_err(usage)?;
    Ok((e, p))
}

fn oracle_failure(err: OracleError) -> (u8, String) {
    match err {
        OracleError::BudgetExceeded { .. } => (EXIT_BUDGET, err.to_string()),
        other => usage(other),
    }
}

fn run_table(args: TableArgs) -> CliResult {
    let TableArgs {
        entry: entry_id,
        kind,
        table: table_no,
        all,
        n: (lo, hi),
        k_max,
        format,
    } = args;
    let mut named: Vec<NamedTable> = Vec::new();
    let rows_of = |e, kind| table(e, kind, hi, k_max).split_off(lo as usize);
    if all {
        for spec in reference_tables() {
            let e = entry(spec.entries[0]).expect("table entries exist");
            named.push((spec.table_no.to_string(), lo, rows_of(e, spec.kind)));
        }
    } else if let Some(t) = table_no {
        let spec = reference_table(t).ok_or_else(|| usage(format!("no table {t} (expected 1..81)")))?;
        if kind.is_some_and(|k| k != spec.kind) {
            return Err(usage(format!("table {t} is a {} table", spec.kind.letter())));
        }
        let e = entry(spec.entries[0]).expect("table entries exist");
        named.push((t.to_string(), lo, rows_of(e, spec.kind)));
    } else if let Some(id) = entry_id {
        let kind = kind.expect("clap requires --kind with --entry");
        let e = entry(id).expect("entry ids are validated on parse");
        let key = e
            .table_no(kind)
            .map_or_else(|| format!("{}{}", kind.letter(), id.0), |t| t.to_string());
        named.push((key, lo, rows_of(e, kind)));
    } else {
        return Err(usage("table needs --entry with --kind, --table or --all"));
    }
    match format {
        Format::Json => println!("{}", to_json(&named)),
        Format::Csv | Format::Md => {
            for (i, (key, first, rows)) in named.iter().enumerate() {
                if named.len() > 1 {
                    if i > 0 {
                        println!();
                    }
                    println!("# table {key}");
                }
                let text = match format {
                    Format::Csv => to_csv(rows, *first),
                    _ => to_markdown(rows, *first),
                };
                print!("{text}");
            }
        }
    }
    Ok(())
}

fn run_oracle(
    out: &Printer,
    text: &str,
    budget: u64,
    kind: Option<ClosureKind>,
    diagram: Option<PathBuf>,
) -> CliResult {
    let (e, pair) = evaluate(text)?;
    let loaded = match diagram {
        Some(path) => {
            let body = fs::read_to_string(&path).map_err(|err| usage(format!("{}: {err}", path.display())))?;
            let d: ShadowDiagram = body.parse().map_err(usage)?;
            let c = d.crossing_count() as u32;
            if c >= 64 || (1u64 << c) > budget {
                return Err(oracle_failure(OracleError::BudgetExceeded {
                    crossings: u64::from(c),
                    budget,
                }));
            }
            Some(d)
        }
        None => None,
    };
    let agree = match kind {
        None => {
            let d = match loaded {
                Some(d) => d,
                None => build_diagram(&e, budget).map_err(oracle_failure)?,
            };
            let sum = state_sum_tangle(&d).map_err(oracle_failure)?;
            println!("algebra:   {}", out.pair(&pair));
            println!("state sum: {}", out.pair(&sum));
            println!("states:    {}", 1u64 << d.crossing_count());
            sum == pair
        }
        Some(kind) => {
            let d = match loaded {
                Some(d) => d,
                None => build_closure_diagram(&e, kind, budget).map_err(oracle_failure)?,
            };
            let sum = state_sum_knot(&d).map_err(oracle_failure)?;
            let alg = close(&pair, kind);
            println!("algebra:   {}({text}) = {}", kind.letter(), out.poly(&alg));
            println!("state sum: {}", out.poly(&sum));
            println!("states:    {}", 1u64 << d.crossing_count());
            sum == alg
        }
    };
    if agree {
        println!("agree");
        Ok(())
    } else {
        Err((EXIT_MISMATCH, "algebra and state sum disagree".into()))
    }
}

fn run(cli: Cli) -> CliResult {
    let out = Printer {
        order: if cli.asc { TermOrder::Ascending } else { TermOrder::Descending },
    };
    match cli.command {
        Command::Eval { expr } => {
            let (_, p) = evaluate(&expr)?;
            println!("{}", out.pair(&p));
        }
        Command::Close { expr, kind, rep } => {
            let (_, p) = evaluate(&expr)?;
            let value = match rep {
                Some(n) => repeat_closure(&p, n, kind),
                None => close(&p, kind),
            };
            println!("{}", out.poly(&value));
        }
        Command::Table(args) => run_table(args)?,
        Command::Classify { expr } => {
            let (_, p) = evaluate(&expr)?;
            println!("{}", classify(&p));
        }
        Command::Verify { quiet } => {
            let report = verify_catalog();
            if quiet {
                for c in report.checks.iter().filter(|c| c.status != Status::Pass) {
                    println!("{c}");
                }
                println!("{}", report.to_string().lines().last().unwrap_or_default());
            } else {
                println!("{report}");
            }
            if !report.is_success() {
                return Err((EXIT_MISMATCH, "catalog verification failed".into()));
            }
        }
        Command::OracleCheck {
            expr,
            budget,
            kind,
            diagram,
        } => run_oracle(&out, &expr, budget, kind, diagram)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
