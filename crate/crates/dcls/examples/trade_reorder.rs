//! A complete symbol-trade walkthrough at p = 11.
//!
//! Target: make the transversals (0,0), (1,6), (2,4) appear in one square.
//! B_{11,6} carries the first two for free but holds symbol 1, not 4, at
//! column 2. The trade keeps B's symbols on most columns and multiplies a
//! residue-class of symbols by x, chosen so the result is still a valid
//! first row and column 2 now shows 4.

use dcls::modmath::Prime;
use dcls::square::build_bnj;
use dcls::trade::{apply_trade, complete_via_trade, derive_params, eval_fgh, find_x};

fn main() -> dcls::Result<()> {
    let p = Prime::new(11)?;
    let (j, c, e) = (6, 2, 4);

    let base = build_bnj(11, j)?;
    println!("B_11,6:      {base}   (column {c} holds {}, want {e})", base.symbol_at(c));

    // the three rational functions that gate the trade at a candidate x:
    // F must be a nonzero m-th power, G and H must not be
    for x in [3u64, 4] {
        let v = eval_fgh(p, j, c, e, x)?;
        println!(
            "x = {x}: F = {} [{}], G = {} [{}], H = {} [{}]",
            v.f,
            power_tag(p, v.f),
            v.g,
            power_tag(p, v.g),
            v.h,
            power_tag(p, v.h),
        );
    }

    let x = find_x(p, j, c, e, 2)?.expect("a quadratic trade exists here");
    println!("smallest usable x for m = 2: {x}");

    let params = derive_params(p, j, c, e, x, 2)?;
    println!(
        "trade parameters: replace symbols {{alpha*t + gamma}} = {{{}t + {}}} over nonzero squares t",
        params.alpha, params.gamma
    );

    let traded = apply_trade(p, j, &params)?;
    println!("traded row:  {traded}");
    let moved: Vec<String> = (0..11)
        .filter(|&i| base.symbol_at(i) != traded.symbol_at(i))
        .map(|i| format!("col {i}: {} -> {}", base.symbol_at(i), traded.symbol_at(i)))
        .collect();
    println!("substitutions: {}", moved.join(", "));
    assert_eq!(traded.symbol_at(c), e);

    // the one-call version scans all usable m ascending
    let (row, ps) = complete_via_trade(p, j, c, e)?.expect("tradeable");
    assert_eq!(row, traded);
    assert_eq!(ps, params);
    println!("complete_via_trade agrees: m = {}, x = {}", ps.m, ps.x);
    println!("{}", traded.expand());
    Ok(())
}

fn power_tag(p: Prime, t: u64) -> &'static str {
    match p.is_mth_power(t, 2) {
        Ok(true) => "square",
        Ok(false) if t == 0 => "zero",
        Ok(false) => "non-square",
        Err(_) => "?",
    }
}
