//! `flatperm`: batch front end for the flatperm library.
//!
//! Exit status: 0 on success, 1 when a computed identity or verification
//! check fails, 2 on usage or limit errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flatperm::genfun::{default_order, KernelPipeline, R_LIMIT};
use flatperm::permcore::{
    witness_word, count_13_2, max_occurrences, max_pattern_perm, min_length_for, Enumerator,
    OccurrenceTable, DEFAULT_ENUMERATION_LIMIT,
};
use flatperm::recurrence::{average_closed_form, GTable};
use flatperm::verify::{self, Suite, SuiteConfig};
use flatperm::{recurrence, Error};
use num_bigint::Sign;
use serde_json::{json, Value};

use output::{Format, Rendered, Table};

/// Largest `n` served from the recurrence.
const RECURRENCE_N_MAX: usize = 30;
/// Hard cap on `--limit`.
const ENUMERATION_LIMIT_MAX: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "flatperm", version, about = "Occurrences of the vincular pattern 13-2 in flattened permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format; CSV is available for scalar tables only
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest n enumerated by brute force
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT, global = true)]
    limit: usize,
    /// Enumerate in parallel
    #[arg(long, global = true)]
    parallel: bool,
    /// Truncation order for the generating-function pipeline
    #[arg(long, global = true)]
    order: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of permutations of length n by occurrence count
    Distribution {
        #[arg(long)]
        n: usize,
        /// Required start of the flattened word, e.g. 1,3
        #[arg(long, value_delimiter = ',')]
        prefix: Vec<u32>,
        #[arg(long, value_enum, default_value = "auto")]
        source: Source,
    },
    /// The polynomials g_n and g_n(1k)
    Gpoly {
        #[arg(long)]
        n: usize,
        /// Only g_n(1k) for this second letter
        #[arg(long)]
        k: Option<usize>,
    },
    /// The polynomials c_(r,0), ..., c_(r,r)
    Ctable {
        #[arg(long)]
        r: usize,
    },
    /// G_r as a rational function
    Rational {
        #[arg(long)]
        r: usize,
    },
    /// Extremal words: the maximal word of length n, or the witnesses for r
    Witness {
        #[arg(long, conflicts_with = "r", required_unless_present = "r")]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Mean occurrence count over permutations of length 1..=n
    Average {
        #[arg(long)]
        n: usize,
    },
    /// Number of permutations of length 1..=n whose flattening avoids 13-2
    Avoiders {
        #[arg(long)]
        n: usize,
    },
    /// Run verification suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        rmax: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    /// Brute force when n is within the enumeration limit, else the recurrence
    Auto,
    Oracle,
    Recurrence,
    /// Both, failing if they differ
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    #[value(name = "sec2", alias = "recurrences")]
    Recurrences,
    #[value(name = "sec3", alias = "series")]
    Series,
    #[value(name = "appendices", alias = "supplementary")]
    Supplementary,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Recurrences => Suite::Recurrences,
            SuiteArg::Series => Suite::Series,
            SuiteArg::Supplementary => Suite::Supplementary,
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

type Outcome = Result<(Rendered, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_recurrence_n(n: usize) -> Result<(), Failure> {
    if n == 0 || n > RECURRENCE_N_MAX {
        return Err(usage(format!("n must be in 1..={RECURRENCE_N_MAX}, got {n}")));
    }
    Ok(())
}

fn pipeline(r: usize, order: Option<usize>) -> Result<KernelPipeline, Failure> {
    if r > R_LIMIT {
        return Err(usage(format!("r = {r} exceeds the limit {R_LIMIT}")));
    }
    Ok(KernelPipeline::with_order(r, order.unwrap_or_else(|| default_order(r)))?)
}

fn counts_from_table(t: &OccurrenceTable) -> Vec<(usize, String)> {
    t.counts.iter().map(|(r, c)| (*r, c.to_string())).collect()
}

fn counts_from_recurrence(n: usize, prefix: &[u32]) -> Result<Vec<(usize, String)>, Failure> {
    check_recurrence_n(n)?;
    let table = GTable::new(n)?;
    let poly = match prefix {
        [] => table.g(n)?.clone(),
        [1] => table.g(n)?.clone(),
        [1, k] if (2..=n).contains(&(*k as usize)) => table.g1k(n, *k as usize)?.clone(),
        [1, k] => {
            return Err(usage(format!("prefix letter {k} is outside 1..={n}")))
        }
        _ => {
            return Err(usage(
                "the recurrence only serves prefixes of the form 1 or 1,k; use --source oracle",
            ))
        }
    };
    Ok(poly
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.sign() != Sign::NoSign)
        .map(|(r, c)| (r, c.to_string()))
        .collect())
}

fn distribution(n: usize, prefix: &[u32], source: Source, enumerator: &Enumerator) -> Outcome {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let use_oracle = match source {
        Source::Auto => n <= enumerator.limit,
        Source::Oracle | Source::Both => true,
        Source::Recurrence => false,
    };
    let (rows, label) = if use_oracle {
        let rows = counts_from_table(&enumerator.distribution(n, prefix)?);
        if source == Source::Both {
            let other = counts_from_recurrence(n, prefix)?;
            if other != rows {
                return Err(Failure::Check(format!(
                    "brute force and recurrence disagree for n = {n}"
                )));
            }
            (rows, "oracle+recurrence")
        } else {
            (rows, "oracle")
        }
    } else {
        (counts_from_recurrence(n, prefix)?, "recurrence")
    };
    let json = json!({
        "n": n,
        "prefix": prefix,
        "source": label,
        "counts": rows.iter().map(|(r, c)| json!({"r": r, "count": c})).collect::<Vec<_>>(),
    });
    let table = Table {
        headers: vec!["r", "count"],
        rows: rows.iter().map(|(r, c)| vec![r.to_string(), c.clone()]).collect(),
    };
    Ok((Rendered::with_table(json, table), true))
}

fn gpoly(n: usize, k: Option<usize>) -> Outcome {
    check_recurrence_n(n)?;
    let table = GTable::new(n)?;
    let json = match k {
        Some(k) => json!({ "n": n, "k": k, "g1k": table.g1k(n, k)?.to_json("q") }),
        None => {
            let g1k: serde_json::Map<String, Value> = (2..=n)
                .map(|k| Ok((k.to_string(), table.g1k(n, k)?.to_json("q"))))
                .collect::<Result<_, Error>>()?;
            json!({ "n": n, "g": table.g(n)?.to_json("q"), "g1k": g1k })
        }
    };
    Ok((Rendered::json(json), true))
}

fn ctable(r: usize, order: Option<usize>) -> Outcome {
    if r == 0 {
        return Err(usage("c-tables are defined for r >= 1"));
    }
    let table = pipeline(r, order)?.c_table(r)?;
    let degrees = Table {
        headers: vec!["l", "degree", "bound"],
        rows: table
            .c
            .iter()
            .enumerate()
            .map(|(l, c)| {
                let bound = if l == 0 { 3 * r - 1 } else { 3 * r - 2 * l };
                vec![
                    l.to_string(),
                    c.degree().map_or("-".into(), |d| d.to_string()),
                    bound.to_string(),
                ]
            })
            .collect(),
    };
    Ok((Rendered::with_table(table.to_json(), degrees), true))
}

fn rational(r: usize, order: Option<usize>) -> Outcome {
    let gf = pipeline(r, order)?.rational_gf(r)?;
    Ok((Rendered::json(gf.to_json()), true))
}

fn witness(n: Option<usize>, r: Option<usize>) -> Outcome {
    match (n, r) {
        (Some(n), None) => {
            if n == 0 {
                return Err(usage("n must be positive"));
            }
            let w = max_pattern_perm(n);
            let count = count_13_2(&w);
            let json = json!({
                "n": n,
                "word": w.letters(),
                "count": count,
                "max_occurrences": max_occurrences(n),
            });
            let table = Table {
                headers: vec!["n", "word", "count"],
                rows: vec![vec![n.to_string(), w.to_string(), count.to_string()]],
            };
            Ok((Rendered::with_table(json, table), count == max_occurrences(n)))
        }
        (None, Some(r)) => {
            let mut rows = Vec::new();
            let mut all_ok = true;
            for i in 0..=r {
                let w = witness_word(r, i)?;
                let count = count_13_2(&w);
                all_ok &= count == r;
                rows.push((i, w, count));
            }
            let json = json!({
                "r": r,
                "min_length": min_length_for(r),
                "witnesses": rows.iter().map(|(i, w, c)| json!({
                    "i": i, "word": w.letters(), "count": c,
                })).collect::<Vec<_>>(),
            });
            let table = Table {
                headers: vec!["i", "word", "count"],
                rows: rows
                    .iter()
                    .map(|(i, w, c)| vec![i.to_string(), w.to_string(), c.to_string()])
                    .collect(),
            };
            Ok((Rendered::with_table(json, table), all_ok))
        }
        _ => Err(usage("give exactly one of --n or --r")),
    }
}

fn average(n: usize) -> Outcome {
    check_recurrence_n(n)?;
    let table = GTable::new(n)?;
    let mut rows = Vec::new();
    for m in 1..=n {
        let avg = table.average(m)?;
        if avg != average_closed_form(m) {
            return Err(Failure::Check(format!("average at n = {m} differs from the closed form")));
        }
        rows.push((m, avg.to_string()));
    }
    let json = json!({
        "averages": rows.iter().map(|(m, a)| json!({"n": m, "average": a})).collect::<Vec<_>>(),
    });
    let table = Table {
        headers: vec!["n", "average"],
        rows: rows.into_iter().map(|(m, a)| vec![m.to_string(), a]).collect(),
    };
    Ok((Rendered::with_table(json, table), true))
}

fn avoiders(n: usize) -> Outcome {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let f = recurrence::avoider_counts(n)?;
    let json = json!({
        "avoiders": f.iter().enumerate().map(|(i, c)| json!({"n": i + 1, "count": c.to_string()})).collect::<Vec<_>>(),
    });
    let table = Table {
        headers: vec!["n", "count"],
        rows: f.iter().enumerate().map(|(i, c)| vec![(i + 1).to_string(), c.to_string()]).collect(),
    };
    Ok((Rendered::with_table(json, table), true))
}

fn verify_suite(suite: SuiteArg, rmax: usize, enumerator: Enumerator) -> Outcome {
    if rmax > R_LIMIT {
        return Err(usage(format!("rmax = {rmax} exceeds the limit {R_LIMIT}")));
    }
    let config = SuiteConfig {
        r_max: rmax,
        n_oracle: 8.min(enumerator.limit),
        enumerator,
        ..SuiteConfig::default()
    };
    let report = verify::run(suite.into(), &config)?;
    for c in report.failures() {
        eprintln!("{c}");
    }
    eprintln!(
        "{} checks, {} failed",
        report.checks.len(),
        report.failures().count()
    );
    let table = Table {
        headers: vec!["claim", "passed", "detail"],
        rows: report
            .checks
            .iter()
            .map(|c| vec![c.claim.clone(), c.passed.to_string(), c.detail.clone()])
            .collect(),
    };
    let passed = report.passed();
    Ok((Rendered::with_table(report.to_json(), table), passed))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let common = &cli.common;
    if common.limit > ENUMERATION_LIMIT_MAX {
        return Err(usage(format!(
            "--limit {} exceeds the maximum {ENUMERATION_LIMIT_MAX}",
            common.limit
        )));
    }
    let enumerator = Enumerator::new(common.limit, common.parallel);
    let (rendered, passed) = match cli.command {
        Command::Distribution { n, prefix, source } => distribution(n, &prefix, source, &enumerator),
        Command::Gpoly { n, k } => gpoly(n, k),
        Command::Ctable { r } => ctable(r, common.order),
        Command::Rational { r } => rational(r, common.order),
        Command::Witness { n, r } => witness(n, r),
        Command::Average { n } => average(n),
        Command::Avoiders { n } => avoiders(n),
        Command::Verify { suite, rmax } => verify_suite(suite, rmax, enumerator),
    }?;
    let bytes = output::to_bytes(&rendered, common.format).map_err(Failure::Usage)?;
    output::emit(&bytes, common.out.as_deref())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
