//! Build multiplication-table squares B_{n,j} and expand them.
//!
//! B_{n,j} has first row i ↦ j·i (mod n); it generates a diagonally cyclic
//! latin square whenever j and j−1 are both coprime to n.

use dcls::square::build_bnj;

fn main() -> dcls::Result<()> {
    let b53 = build_bnj(5, 3)?;
    println!("B_5,3 first row: {b53}  (symbols {:?})", b53.symbols());
    println!("{}", b53.expand());

    let b116 = build_bnj(11, 6)?;
    println!("B_11,6 first row: {b116}");
    let square = b116.expand();
    assert!(square.is_latin() && square.is_diagonally_cyclic());
    println!("{square}");

    // works for odd composite orders too, with both gcd conditions
    let b92 = build_bnj(9, 2)?;
    println!("B_9,2 first row: {b92}");

    // j = 1 is the addition table: its differences are constant, so it
    // cannot supply a first row
    match build_bnj(9, 1) {
        Err(err) => println!("j = 1 is rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    // at n = 9, j = 4 makes j - 1 share a factor with n
    match build_bnj(9, 4) {
        Err(err) => println!("j = 4 at n = 9 is rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
