//! Validate the shipped order-11 corpus: 180 lines, one per exceptional
//! triple, each carrying a hand-verified completing first row.

use dcls::census::{parse_corpus, verify_corpus, P11_CORPUS};
use dcls::modmath::Prime;

fn main() -> dcls::Result<()> {
    let report = verify_corpus(P11_CORPUS)?;
    println!("{}/{} lines valid", report.valid, report.total);
    println!("missing triples: {}", report.missing_triples.len());
    println!("unexpected triples: {}", report.extra_triples.len());
    println!("verdict: {}", if report.all_good() { "corpus OK" } else { "corpus MISMATCH" });
    assert!(report.all_good());

    let (lines, _) = parse_corpus(Prime::new(11)?, P11_CORPUS);
    let first = &lines[0];
    let last = &lines[lines.len() - 1];
    println!(
        "first entry: c={} e={} j={} row={} -> {:?}",
        first.c,
        first.e,
        first.j,
        first.row,
        first.row.symbols()
    );
    println!("last entry:  c={} e={} j={} row={}", last.c, last.e, last.j, last.row);

    // every row really expands to a diagonally cyclic latin square
    for line in &lines {
        let square = line.row.expand();
        assert!(square.is_latin() && square.is_diagonally_cyclic());
    }
    println!("all {} rows expand to valid squares", lines.len());
    Ok(())
}
