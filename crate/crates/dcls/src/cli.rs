//! Command-line front end: `complete`, `verify`, `exceptions`, `charsum`,
//! and `corpus` subcommands over the library.
//!
//! Exit codes are a stable contract: 0 on success or a positive verdict,
//! 1 when a check ran fine but the verdict is negative (invalid row,
//! corpus mismatch, no completion found), 2 for usage errors — unparseable
//! flags or inputs the library rejects outright. Every run echoes its
//! effective configuration to stderr, keeping stdout clean for results;
//! `--format structured` switches stdout to line-delimited JSON, each line
//! carrying a `version` field.

use crate::census::{self, MPolicy};
use crate::charsum;
use crate::completer::{self, Method, TransversalTriple};
use crate::modmath::{odd_primes_in, Prime};
use crate::search::SearchPolicy;
use crate::square::FirstRow;
use crate::{Error, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const OUTPUT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Structured => "structured",
        })
    }
}

#[derive(Parser)]
#[command(
    name = "dcls",
    version,
    about = "Diagonally cyclic latin squares of odd prime order: \
             complete transversal prescriptions, verify rows, census trade \
             exceptions, inspect character sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Complete three prescribed cyclic transversals to a full square
    Complete(CompleteArgs),
    /// Check a first-row string (and optionally its prescribed cells)
    Verify(VerifyArgs),
    /// Census the (j, c, e) triples no symbol trade can reach
    Exceptions(ExceptionsArgs),
    /// Character-sum diagnostics for one (j, c, e) triple
    Charsum(CharsumArgs),
    /// Validate an order-11 witness corpus file
    Corpus(CorpusArgs),
}

fn parse_jce(s: &str) -> std::result::Result<(u64, u64, u64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated residues, like 4,2,1".into());
    }
    let num = |t: &str| t.parse::<u64>().map_err(|_| format!("not a number: {t:?}"));
    Ok((num(parts[0])?, num(parts[1])?, num(parts[2])?))
}

fn parse_transversals(s: &str) -> std::result::Result<[(u64, u64); 3], String> {
    let parts: Vec<&str> = s.split(';').map(str::trim).collect();
    if parts.len() != 3 {
        return Err("expected three pairs, like (2,5);(3,9);(7,1)".into());
    }
    let mut out = [(0u64, 0u64); 3];
    for (i, part) in parts.iter().enumerate() {
        let inner = part
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("pair {part:?} is not parenthesized"))?;
        let nums: Vec<&str> = inner.split(',').map(str::trim).collect();
        if nums.len() != 2 {
            return Err(format!("pair {part:?} must hold a column and a symbol"));
        }
        let num = |t: &str| t.parse::<u64>().map_err(|_| format!("not a number: {t:?}"));
        out[i] = (num(nums[0])?, num(nums[1])?);
    }
    Ok(out)
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| "expected an inclusive range, like 11..59".to_string())?;
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("not a number: {t:?}"));
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["jce", "transversals"])))]
struct CompleteArgs {
    /// Order: an odd prime above 7
    #[arg(long)]
    p: u64,
    /// Already-normalized triple j,c,e — shorthand for (0,0);(1,j);(c,e)
    #[arg(long, value_parser = parse_jce, value_name = "J,C,E")]
    jce: Option<(u64, u64, u64)>,
    /// Raw row-0 cells "(c,s);(c',s');(c'',s'')"; normalization is automatic
    #[arg(long, value_parser = parse_transversals, value_name = "(C,S);(C,S);(C,S)")]
    transversals: Option<[(u64, u64); 3]>,
    /// Seed for the backtracking search (used only when no trade applies)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also print the completed square as a grid
    #[arg(long)]
    grid: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Order of the row (any odd order; primality is not required here)
    #[arg(long)]
    p: u64,
    /// Row string: base-36 digits for orders up to 36, else comma-separated
    #[arg(long)]
    row: String,
    /// Additionally require row[0]=0, row[1]=j, row[c]=e
    #[arg(long, value_parser = parse_jce, value_name = "J,C,E")]
    jce: Option<(u64, u64, u64)>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("scope").required(true).args(["p", "range"])))]
struct ExceptionsArgs {
    /// Single prime to census
    #[arg(long)]
    p: Option<u64>,
    /// Inclusive prime range, like 11..59
    #[arg(long, value_parser = parse_range, value_name = "LO..HI")]
    range: Option<(u64, u64)>,
    /// Print every exceptional triple, not just counts
    #[arg(long)]
    list: bool,
    /// Worker threads for the sweep (default: all available cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Declare a triple exceptional after trying only m = 2 (diagnostic)
    #[arg(long)]
    quadratic_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CharsumArgs {
    /// Order: an odd prime
    #[arg(long)]
    p: u64,
    /// Admissible triple j,c,e
    #[arg(long, value_parser = parse_jce, value_name = "J,C,E")]
    jce: (u64, u64, u64),
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus file to validate; defaults to the corpus shipped in the crate
    path: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Parse the process arguments, dispatch, and return the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Same as [`run`] but over explicit arguments (tests use this).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Cmd::Complete(args) => cmd_complete(&args),
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Exceptions(args) => cmd_exceptions(&args),
        Cmd::Charsum(args) => cmd_charsum(&args),
        Cmd::Corpus(args) => cmd_corpus(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn echo_config(line: &str) {
    eprintln!("# dcls {line}");
}

fn cmd_complete(args: &CompleteArgs) -> Result<i32> {
    let p = Prime::new(args.p)?;
    let (offsets, described) = match (args.jce, args.transversals) {
        (Some((j, c, e)), None) => ([(0, 0), (1, j), (c, e)], format!("jce={j},{c},{e}")),
        (None, Some(cells)) => {
            let desc: Vec<String> = cells.iter().map(|(c, s)| format!("({c},{s})")).collect();
            (cells, format!("transversals={}", desc.join(";")))
        }
        _ => unreachable!("clap enforces exactly one input form"),
    };
    echo_config(&format!(
        "complete p={p} {described} seed={} grid={} format={}",
        args.seed, args.grid, args.format
    ));
    let t = TransversalTriple::new(p, offsets)?;
    let policy = SearchPolicy::with_seed(p, args.seed);
    let cert = match completer::complete(&t, &policy) {
        Ok(cert) => cert,
        Err(Error::NoCompletion { j, c, e }) => {
            eprintln!("no completion found for normalized (j={j}, c={c}, e={e}) under this seed");
            return Ok(1);
        }
        Err(other) => return Err(other),
    };
    let row = completer::completed_row(&cert)?;
    match args.format {
        Format::Structured => {
            println!("{}", serde_json::to_string(&cert).expect("certificate serializes"));
        }
        Format::Text => {
            match cert.method {
                Method::ContainedInB => println!(
                    "method: contained-in-B (e = jc, the multiplication square already fits)"
                ),
                Method::Trade(tp) => println!(
                    "method: trade (m={}, x={}, alpha={}, gamma={})",
                    tp.m, tp.x, tp.alpha, tp.gamma
                ),
                Method::Search { seed, initial_cutoff, growth, max_restarts } => println!(
                    "method: search (seed={seed}, cutoff={initial_cutoff}, \
                     growth={growth}, restarts<={max_restarts})"
                ),
            }
            let nf = &cert.normal_form;
            println!("ordering: {:?}", cert.ordering);
            println!(
                "normalized: j={}, c={}, e={} (back map: columns +{}, symbols +{}, scale {})",
                nf.j, nf.c, nf.e, nf.back.column_shift, nf.back.symbol_shift, nf.back.scale
            );
            println!("row (normalized frame): {}", cert.first_row);
            println!("row (input frame):      {row}");
        }
    }
    if args.grid {
        println!("{}", row.expand());
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    echo_config(&format!(
        "verify p={} row={} jce={} format={}",
        args.p,
        args.row,
        args.jce.map_or("-".into(), |(j, c, e)| format!("{j},{c},{e}")),
        args.format
    ));
    let verdict: std::result::Result<FirstRow, String> = FirstRow::decode(args.p, &args.row)
        .map_err(|e| e.to_string())
        .and_then(|row| {
            if let Some((j, c, e)) = args.jce {
                if row.symbol_at(0) != 0 {
                    return Err(format!("row[0] = {}, expected 0", row.symbol_at(0)));
                }
                if row.symbol_at(1) != j {
                    return Err(format!("row[1] = {}, expected j = {j}", row.symbol_at(1)));
                }
                if row.symbol_at(c) != e {
                    return Err(format!("row[{c}] = {}, expected e = {e}", row.symbol_at(c)));
                }
            }
            Ok(row)
        });
    match args.format {
        Format::Structured => {
            let line = json!({
                "version": OUTPUT_VERSION,
                "kind": "verify",
                "p": args.p,
                "row": args.row,
                "ok": verdict.is_ok(),
                "reason": verdict.as_ref().err(),
            });
            println!("{line}");
        }
        Format::Text => match &verdict {
            Ok(row) => println!("valid first row of order {}: {row}", args.p),
            Err(reason) => println!("invalid: {reason}"),
        },
    }
    Ok(if verdict.is_ok() { 0 } else { 1 })
}

fn cmd_exceptions(args: &ExceptionsArgs) -> Result<i32> {
    let primes = match (args.p, args.range) {
        (Some(q), None) => vec![q],
        (None, Some((lo, hi))) => {
            let primes = odd_primes_in(lo, hi);
            if primes.is_empty() {
                return Err(Error::BadPolicy("the range contains no odd primes"));
            }
            primes
        }
        _ => unreachable!("clap enforces exactly one scope"),
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let policy = if args.quadratic_only { MPolicy::QuadraticOnly } else { MPolicy::AllDivisors };
    echo_config(&format!(
        "exceptions primes={primes:?} list={} jobs={jobs} quadratic_only={} format={}",
        args.list, args.quadratic_only, args.format
    ));
    let mut total = 0usize;
    for &q in &primes {
        let records = census::enumerate_exceptions_with(Prime::new(q)?, policy, jobs)?;
        total += records.len();
        match args.format {
            Format::Structured => {
                println!(
                    "{}",
                    json!({
                        "version": OUTPUT_VERSION,
                        "kind": "exception_count",
                        "p": q,
                        "count": records.len(),
                    })
                );
                if args.list {
                    for rec in &records {
                        println!(
                            "{}",
                            json!({
                                "version": OUTPUT_VERSION,
                                "kind": "exception",
                                "p": rec.p,
                                "j": rec.j,
                                "c": rec.c,
                                "e": rec.e,
                                "tried_ms": rec.tried_ms,
                            })
                        );
                    }
                }
            }
            Format::Text => {
                println!("p={q}: {} exceptions", records.len());
                if args.list {
                    for rec in &records {
                        let ms: Vec<String> =
                            rec.tried_ms.iter().map(u64::to_string).collect();
                        println!("  j={} c={} e={} (m tried: {})", rec.j, rec.c, rec.e, ms.join(", "));
                    }
                }
            }
        }
    }
    if primes.len() > 1 {
        match args.format {
            Format::Structured => println!(
                "{}",
                json!({
                    "version": OUTPUT_VERSION,
                    "kind": "exception_total",
                    "primes": primes.len(),
                    "count": total,
                })
            ),
            Format::Text => println!("total over {} primes: {total}", primes.len()),
        }
    }
    Ok(0)
}

fn cmd_charsum(args: &CharsumArgs) -> Result<i32> {
    let p = Prime::new(args.p)?;
    let (j, c, e) = args.jce;
    echo_config(&format!("charsum p={p} jce={j},{c},{e} format={}", args.format));
    let report = charsum::compute_s(p, j, c, e)?;
    match args.format {
        Format::Structured => {
            println!(
                "{}",
                json!({
                    "version": OUTPUT_VERSION,
                    "kind": "charsum",
                    "p": report.p,
                    "j": report.j,
                    "c": report.c,
                    "e": report.e,
                    "s": report.s,
                    "size_a": report.size_a,
                    "lower_bound": report.lower_bound,
                    "meets_lower_bound": report.meets_lower_bound(),
                    "meets_upper_cap": report.meets_upper_cap(),
                    "clears_search_threshold": report.clears_search_threshold(),
                })
            );
        }
        Format::Text => {
            println!("p={} j={} c={} e={}", report.p, report.j, report.c, report.e);
            println!("S = {}", report.s);
            println!(
                "|A| = {} (S <= 16|A| + 32 {})",
                report.size_a,
                if report.meets_upper_cap() { "holds" } else { "FAILS" }
            );
            println!(
                "lower bound p - 11*sqrt(p) - 6 = {:.3} ({})",
                report.lower_bound,
                if report.meets_lower_bound() { "met" } else { "NOT MET" }
            );
            println!(
                "S > 32, hence a quadratic trade exists without search: {}",
                if report.clears_search_threshold() { "yes" } else { "no" }
            );
        }
    }
    Ok(0)
}

fn cmd_corpus(args: &CorpusArgs) -> Result<i32> {
    let (text, source) = match &args.path {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::RowCodec(format!("cannot read {}: {e}", path.display())))?;
            (text, path.display().to_string())
        }
        None => (census::P11_CORPUS.to_string(), "<built-in>".to_string()),
    };
    echo_config(&format!("corpus source={source} format={}", args.format));
    let report = census::verify_corpus(&text)?;
    match args.format {
        Format::Structured => {
            println!(
                "{}",
                json!({
                    "version": OUTPUT_VERSION,
                    "kind": "corpus_report",
                    "source": source,
                    "total": report.total,
                    "valid": report.valid,
                    "failures": report.failures,
                    "missing_triples": report.missing_triples,
                    "extra_triples": report.extra_triples,
                    "ok": report.all_good(),
                })
            );
        }
        Format::Text => {
            println!("{}/{} lines valid (expected 180)", report.valid, report.total);
            for (lineno, reason) in &report.failures {
                println!("  line {lineno}: {reason}");
            }
            if !report.missing_triples.is_empty() {
                println!("  missing triples (j, c, e): {:?}", report.missing_triples);
            }
            if !report.extra_triples.is_empty() {
                println!("  non-exception triples present: {:?}", report.extra_triples);
            }
            println!("verdict: {}", if report.all_good() { "corpus OK" } else { "corpus MISMATCH" });
        }
    }
    Ok(if report.all_good() { 0 } else { 1 })
}
