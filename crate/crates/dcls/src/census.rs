//! Exception census and the order-11 witness corpus.
//!
//! For each prime p the census sweeps every admissible (j, c, e) — j, c
//! outside {0, 1} and e avoiding {0, j, c, c+j−1, jc} — and records the
//! triples no symbol trade can reach: no divisor m ≥ 2 of p − 1 admits a
//! multiplier x. The counts for 11 ≤ p ≤ 59 total 2076 and vanish from 61
//! on. Each order-11 exception has a hand-checked completing row shipped in
//! `data/p11_corpus.txt` (format: `c e j rowstring`, row in base 36 with
//! 'a' = 10); `verify_corpus` re-validates that file from scratch.

use crate::modmath::Prime;
use crate::search::{self, SearchPolicy, SearchProblem};
use crate::square::{decode_symbols, FirstRow};
use crate::trade::check_admissible;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// Which power indices m the sweep consults before declaring a triple
/// exceptional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MPolicy {
    /// Every m ≥ 2 dividing p − 1. This reproduces the published counts
    /// and is the default everywhere.
    AllDivisors,
    /// Only m = 2. Kept for comparison; it over-counts (e.g. 258 instead
    /// of 54 at p = 13) because higher-power trades rescue some triples.
    QuadraticOnly,
}

/// An admissible (j, c, e) that defeated every trade attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionRecord {
    pub p: u64,
    pub j: u64,
    pub c: u64,
    pub e: u64,
    /// The power indices that were tried, all without a usable x.
    pub tried_ms: Vec<u64>,
}

fn census_ms(p: Prime, policy: MPolicy) -> Vec<u64> {
    match policy {
        MPolicy::AllDivisors => p.proper_power_divisors(),
        MPolicy::QuadraticOnly => vec![2],
    }
}

/// One j-slice of the sweep. `pow_tables[k][t]` says whether t is a nonzero
/// m_k-th power; `inv[a]` is the modular inverse (0 slot unused).
fn sweep_j(
    p: Prime,
    j: u64,
    ms: &[u64],
    pow_tables: &[Vec<bool>],
    inv: &[u64],
    out: &mut Vec<ExceptionRecord>,
) {
    let n = p.get();
    let inv_1j = inv[p.sub(1, j) as usize];
    for c in 2..n {
        let jc = p.mul(j, c);
        let j1c = p.mul(j, p.sub(1, c));
        let diag = p.sub(p.add(c, j), 1);
        'next_e: for e in 1..n {
            if e == j || e == c || e == diag || e == jc {
                continue;
            }
            let inv_ejc = inv[p.sub(e, jc) as usize];
            let e_minus_j = p.sub(e, j);
            for table in pow_tables {
                for x in 2..n {
                    if !table[x as usize] {
                        continue;
                    }
                    let f = p.mul(p.sub(1, p.mul(j, x)), inv_1j);
                    if !table[f as usize] {
                        continue;
                    }
                    let g = p.mul(p.sub(e, p.mul(x, jc)), inv_ejc);
                    if table[g as usize] {
                        continue;
                    }
                    let h = p.mul(p.add(p.mul(x, j1c), e_minus_j), inv_ejc);
                    if table[h as usize] {
                        continue;
                    }
                    continue 'next_e; // this m admits a trade
                }
            }
            out.push(ExceptionRecord { p: n, j, c, e, tried_ms: ms.to_vec() });
        }
    }
}

/// All exceptional triples of order p, sorted by (j, c, e), under the
/// default all-divisors policy.
pub fn enumerate_exceptions(p: Prime) -> Result<Vec<ExceptionRecord>> {
    enumerate_exceptions_with(p, MPolicy::AllDivisors, 1)
}

/// The sweep with an explicit m-policy, fanned out over `jobs` threads
/// (slicing by j; the final sort makes the output order-independent).
pub fn enumerate_exceptions_with(
    p: Prime,
    policy: MPolicy,
    jobs: usize,
) -> Result<Vec<ExceptionRecord>> {
    let n = p.get();
    if n < 11 {
        return Err(Error::BadPolicy("the census covers orders 11 and up"));
    }
    if jobs == 0 {
        return Err(Error::BadPolicy("at least one worker thread is required"));
    }
    let ms = census_ms(p, policy);
    let pow_tables: Vec<Vec<bool>> = ms
        .iter()
        .map(|&m| {
            let exp = (n - 1) / m;
            (0..n).map(|t| t != 0 && p.pow(t, exp) == 1).collect()
        })
        .collect();
    let mut inv = vec![0u64; n as usize];
    for a in 1..n {
        inv[a as usize] = p.inv(a).expect("nonzero residue");
    }

    let js: Vec<u64> = (2..n).collect();
    let mut records = if jobs == 1 {
        let mut out = Vec::new();
        for &j in &js {
            sweep_j(p, j, &ms, &pow_tables, &inv, &mut out);
        }
        out
    } else {
        let chunk = js.len().div_ceil(jobs);
        let mut out = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = js
                .chunks(chunk.max(1))
                .map(|slice| {
                    let (ms, pow_tables, inv) = (&ms, &pow_tables, &inv);
                    scope.spawn(move || {
                        let mut part = Vec::new();
                        for &j in slice {
                            sweep_j(p, j, ms, pow_tables, inv, &mut part);
                        }
                        part
                    })
                })
                .collect();
            for handle in handles {
                out.extend(handle.join().expect("census worker panicked"));
            }
        });
        out
    };
    records.sort_by_key(|r| (r.j, r.c, r.e));
    Ok(records)
}

/// Exception counts per prime.
pub fn exception_table(primes: &[u64]) -> Result<Vec<(u64, usize)>> {
    primes
        .iter()
        .map(|&q| Ok((q, enumerate_exceptions(Prime::new(q)?)?.len())))
        .collect()
}

/// Run the seeded search on every exceptional triple. The row is `None`
/// only if the search gives up — not expected for any prime, since every
/// admissible triple of prime order above 7 does complete.
pub fn resolve_exceptions(
    p: Prime,
    policy: &SearchPolicy,
) -> Result<Vec<(ExceptionRecord, Option<FirstRow>)>> {
    let records = enumerate_exceptions(p)?;
    let mut out = Vec::with_capacity(records.len());
    for rec in records {
        let problem = SearchProblem::for_normalized_triple(p, rec.j, rec.c, rec.e)?;
        let row = search::solve(&problem, policy)?;
        out.push((rec, row));
    }
    Ok(out)
}

/// The shipped order-11 corpus: one `c e j rowstring` line per exceptional
/// triple, 180 lines.
pub const P11_CORPUS: &str = include_str!("../data/p11_corpus.txt");

/// One successfully parsed corpus line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusLine {
    /// 1-based line number in the source text.
    pub lineno: usize,
    pub c: u64,
    pub e: u64,
    pub j: u64,
    pub row: FirstRow,
}

/// Outcome of re-validating a corpus file against a fresh census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    /// Non-blank lines seen.
    pub total: usize,
    /// Lines that parsed and passed every per-line check.
    pub valid: usize,
    /// (line number, reason) for each rejected line.
    pub failures: Vec<(usize, String)>,
    /// Exceptional triples with no corpus line.
    pub missing_triples: Vec<(u64, u64, u64)>,
    /// Corpus triples that are not exceptional.
    pub extra_triples: Vec<(u64, u64, u64)>,
}

impl CorpusReport {
    /// Full marks: 180 lines, all valid, and the triple sets agree exactly.
    pub fn all_good(&self) -> bool {
        self.total == 180
            && self.valid == self.total
            && self.failures.is_empty()
            && self.missing_triples.is_empty()
            && self.extra_triples.is_empty()
    }
}

fn parse_corpus_line(p: Prime, lineno: usize, line: &str) -> std::result::Result<CorpusLine, String> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 4 {
        return Err(format!("expected 4 fields `c e j rowstring`, found {}", tokens.len()));
    }
    let parse = |name: &str, tok: &str| -> std::result::Result<u64, String> {
        let v: u64 = tok.parse().map_err(|_| format!("{name} is not a number: {tok:?}"))?;
        if v >= p.get() {
            return Err(format!("{name} = {v} out of range for order {}", p.get()));
        }
        Ok(v)
    };
    let c = parse("c", tokens[0])?;
    let e = parse("e", tokens[1])?;
    let j = parse("j", tokens[2])?;
    let symbols = decode_symbols(p.get(), tokens[3]).map_err(|err| err.to_string())?;
    if symbols.len() as u64 != p.get() {
        return Err(format!("row has {} symbols, expected {}", symbols.len(), p.get()));
    }
    let row = FirstRow::new(symbols).map_err(|err| err.to_string())?;
    if row.symbol_at(0) != 0 {
        return Err("row is not in standard order".into());
    }
    if row.symbol_at(1) != j {
        return Err(format!("row[1] = {} but j = {j}", row.symbol_at(1)));
    }
    if row.symbol_at(c) != e {
        return Err(format!("row[{c}] = {} but e = {e}", row.symbol_at(c)));
    }
    Ok(CorpusLine { lineno, c, e, j, row })
}

/// Parse a corpus text; blank lines are skipped, bad lines land in the
/// failure list with their 1-based line numbers.
pub fn parse_corpus(p: Prime, text: &str) -> (Vec<CorpusLine>, Vec<(usize, String)>) {
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        match parse_corpus_line(p, idx + 1, raw) {
            Ok(line) => lines.push(line),
            Err(reason) => failures.push((idx + 1, reason)),
        }
    }
    (lines, failures)
}

/// Validate an order-11 corpus text end to end: every line parses, its row
/// completes its triple, triples are unique, and the triple set is exactly
/// the censused exception set.
pub fn verify_corpus(text: &str) -> Result<CorpusReport> {
    let p = Prime::new(11)?;
    let (lines, parse_failures) = parse_corpus(p, text);
    let total = lines.len() + parse_failures.len();
    let mut failures = parse_failures;
    let exceptions: BTreeSet<(u64, u64, u64)> =
        enumerate_exceptions(p)?.into_iter().map(|r| (r.j, r.c, r.e)).collect();

    let mut seen: BTreeSet<(u64, u64, u64)> = BTreeSet::new();
    let mut valid = 0usize;
    let mut extra = BTreeSet::new();
    for line in &lines {
        let triple = (line.j, line.c, line.e);
        if !seen.insert(triple) {
            failures.push((line.lineno, format!("duplicate triple {triple:?}")));
            continue;
        }
        if check_admissible(p, line.j, line.c, line.e).is_err() {
            failures.push((line.lineno, format!("triple {triple:?} is not admissible")));
            continue;
        }
        if !exceptions.contains(&triple) {
            extra.insert(triple);
            continue;
        }
        valid += 1;
    }
    let missing: Vec<_> = exceptions.difference(&seen).copied().collect();
    failures.sort();
    Ok(CorpusReport {
        total,
        valid,
        failures,
        missing_triples: missing,
        extra_triples: extra.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trade::complete_via_trade;
    use sha2::{Digest, Sha256};

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn order_eleven_census() {
        let records = enumerate_exceptions(p(11)).unwrap();
        assert_eq!(records.len(), 180);
        for rec in &records {
            assert!(check_admissible(p(11), rec.j, rec.c, rec.e).is_ok());
            assert_eq!(rec.tried_ms, vec![2, 5, 10]);
        }
        // sorted by (j, c, e); spot values pinned by an independent sweep
        let triples: Vec<(u64, u64, u64)> = records.iter().map(|r| (r.j, r.c, r.e)).collect();
        assert_eq!(triples[0], (2, 2, 5));
        assert_eq!(triples[4], (2, 7, 1));
        assert_eq!(triples[99], (7, 4, 1));
        assert_eq!(triples[179], (10, 10, 2));
    }

    #[test]
    fn order_thirteen_census_and_m_policy() {
        let all = enumerate_exceptions(p(13)).unwrap();
        assert_eq!(all.len(), 54);
        assert_eq!((all[0].j, all[0].c, all[0].e), (2, 2, 1));
        assert_eq!((all[53].j, all[53].c, all[53].e), (12, 12, 11));
        // m = 2 alone misses the cubic/quartic/sextic trades
        let quad = enumerate_exceptions_with(p(13), MPolicy::QuadraticOnly, 1).unwrap();
        assert_eq!(quad.len(), 258);
        for rec in &quad {
            assert_eq!(rec.tried_ms, vec![2]);
        }
    }

    #[test]
    fn census_is_deterministic_and_parallel_safe() {
        let one = enumerate_exceptions_with(p(17), MPolicy::AllDivisors, 1).unwrap();
        let four = enumerate_exceptions_with(p(17), MPolicy::AllDivisors, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.len(), 306);
    }

    #[test]
    fn census_preconditions() {
        assert!(matches!(enumerate_exceptions(p(7)), Err(Error::BadPolicy(_))));
        assert!(matches!(
            enumerate_exceptions_with(p(11), MPolicy::AllDivisors, 0),
            Err(Error::BadPolicy(_))
        ));
    }

    #[test]
    fn table_matches_published_counts_for_small_primes() {
        let table = exception_table(&[11, 13]).unwrap();
        assert_eq!(table, vec![(11, 180), (13, 54)]);
    }

    #[test]
    fn exception_predicate_agrees_with_the_trade_module() {
        // order 13: exceptional exactly when no trade exists
        let set: BTreeSet<(u64, u64, u64)> = enumerate_exceptions(p(13))
            .unwrap()
            .into_iter()
            .map(|r| (r.j, r.c, r.e))
            .collect();
        for j in 2..13 {
            for c in 2..13 {
                for e in 0..13 {
                    if check_admissible(p(13), j, c, e).is_err() {
                        continue;
                    }
                    let traded = complete_via_trade(p(13), j, c, e).unwrap();
                    assert_eq!(
                        traded.is_none(),
                        set.contains(&(j, c, e)),
                        "disagreement at ({j}, {c}, {e})"
                    );
                }
            }
        }
    }

    #[test]
    fn every_exception_resolves_by_search() {
        let policy = SearchPolicy::with_seed(p(11), 2026);
        let resolved = resolve_exceptions(p(11), &policy).unwrap();
        assert_eq!(resolved.len(), 180);
        for (rec, row) in &resolved {
            let row = row.as_ref().expect("search must complete order-11 exceptions");
            assert_eq!(row.symbol_at(0), 0);
            assert_eq!(row.symbol_at(1), rec.j);
            assert_eq!(row.symbol_at(rec.c), rec.e);
        }
    }

    #[test]
    fn shipped_corpus_is_pristine() {
        let digest = Sha256::digest(P11_CORPUS.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(hex, "fa0af9c3db18a9bc42fa1b8bc8330c83733fb226005c2feb6aa9e1f61e364708");
        let report = verify_corpus(P11_CORPUS).unwrap();
        assert!(report.all_good(), "{report:?}");
        assert_eq!(report.total, 180);
        assert_eq!(report.valid, 180);
    }

    #[test]
    fn corpus_reference_lines() {
        let (lines, failures) = parse_corpus(p(11), P11_CORPUS);
        assert!(failures.is_empty());
        assert_eq!(lines.len(), 180);
        let first = &lines[0];
        assert_eq!((first.c, first.e, first.j), (2, 1, 4));
        assert_eq!(first.row.symbols(), &[0, 4, 1, 7, 5, 10, 2, 9, 3, 6, 8]);
        let last = &lines[179];
        assert_eq!((last.c, last.e, last.j), (10, 9, 5));
        assert_eq!(last.row.symbol_at(10), 9);
        assert_eq!(last.row.symbol_at(1), 5);
    }

    #[test]
    fn corrupted_corpus_is_flagged() {
        // flip one digit in the first line: row check fails loudly
        let tampered = P11_CORPUS.replacen("04175a29368", "04165a29368", 1);
        let report = verify_corpus(&tampered).unwrap();
        assert!(!report.all_good());
        assert_eq!(report.valid, 179);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].0, 1);

        // truncating loses triples
        let truncated: String =
            P11_CORPUS.lines().take(100).collect::<Vec<_>>().join("\n");
        let report = verify_corpus(&truncated).unwrap();
        assert!(!report.all_good());
        assert_eq!(report.total, 100);
        assert_eq!(report.missing_triples.len(), 80);

        // a non-exceptional triple is "extra" even with a valid row
        let padded = format!("{P11_CORPUS}2 4 6 064728135a9\n");
        let report = verify_corpus(&padded).unwrap();
        assert!(!report.all_good());
        assert_eq!(report.extra_triples, vec![(6, 2, 4)]);
    }
}
