//! A first row is the same data as a transversal of the addition table and
//! as a semi-queens placement on the torus. This example walks one row
//! through both encodings and back.

use dcls::square::{build_bnj, from_bn_transversal};

fn main() -> dcls::Result<()> {
    let row = build_bnj(5, 3)?;
    println!("first row: {row}");

    // cells (row[i] - i, i, row[i]) hit each row, column, and symbol of the
    // addition table exactly once
    let transversal = row.to_bn_transversal();
    println!("addition-table transversal (r, c, s): {transversal:?}");
    let back = from_bn_transversal(5, &transversal)?;
    assert_eq!(back, row);
    println!("rebuilding the row from the transversal round-trips");

    // dropping the symbol leaves semi-queens: no two share a row, column,
    // or ascending diagonal r + c
    let queens = row.to_semiqueens();
    println!("semi-queens at (r, c): {queens:?}");
    let n = 5u64;
    for (i, &(r1, c1)) in queens.iter().enumerate() {
        for &(r2, c2) in &queens[i + 1..] {
            assert_ne!(r1, r2);
            assert_ne!(c1, c2);
            assert_ne!((r1 + c1) % n, (r2 + c2) % n);
        }
    }
    for r in 0..n {
        let line: String = (0..n)
            .map(|c| if queens.contains(&(r, c)) { " Q" } else { " ." })
            .collect();
        println!("{line}");
    }
    println!("no two semi-queens attack each other");
    Ok(())
}
