//! The four transformations that carry diagonally cyclic squares to each
//! other: shifts along rows, columns, or symbols, and rescaling by a unit.
//! Each acts on the whole square but is computed directly on the first row;
//! transversal offsets move by the same closed forms.

use dcls::square::{build_bnj, Axis};

fn main() -> dcls::Result<()> {
    let b = build_bnj(5, 3)?;
    println!("start:        {b}");

    let rows = b.shift(Axis::Rows, 1);
    let cols = b.shift(Axis::Columns, 1);
    let syms = b.shift(Axis::Symbols, 1);
    println!("rows + 1:     {rows}");
    println!("columns + 1:  {cols}");
    println!("symbols + 1:  {syms}");

    let doubled = b.multiply(2)?;
    println!("scaled by 2:  {doubled}");

    // shifts compose; a full cycle of n row-shifts is the identity
    let mut back = b.clone();
    for _ in 0..5 {
        back = back.shift(Axis::Rows, 1);
    }
    assert_eq!(back, b);
    println!("five row shifts return to the start");

    // offsets obey the same laws: transforming the row and re-reading its
    // transversals agrees with transforming each offset directly
    let n = b.order();
    for (alpha, off) in b.offsets().into_iter().enumerate() {
        let direct = off.shifted(Axis::Columns, 1, n);
        let reread = cols.offset((alpha as u64 + 1) % n);
        assert_eq!(direct, reread);
    }
    for off in b.offsets() {
        let direct = off.multiplied(2, n);
        let reread = doubled.offset(direct.column);
        assert_eq!(direct, reread);
    }
    println!("offset transformation laws check out on all transversals");
    Ok(())
}
