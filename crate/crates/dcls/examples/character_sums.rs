//! The counting argument that makes large primes trade-friendly.
//!
//! S sums J(x) = [1+η(x)][1+η(F)][1−η(G)][1−η(H)] over the field; every
//! member of A = {x : η(x)=η(F)=1, η(G)=η(H)=−1} contributes 16 and only
//! boundary points contribute otherwise, so S ≤ 16|A| + 32, while Weil's
//! bound forces S ≥ p − 11√p − 6. Past p = 191 that floor exceeds 32, so A
//! cannot be empty: a quadratic trade always exists.

use dcls::charsum::compute_s;
use dcls::modmath::Prime;
use dcls::trade::find_x;

fn main() -> dcls::Result<()> {
    let p191 = Prime::new(191)?;
    println!("p = 191 (the first prime the floor argument covers):");
    for (j, c, e) in [(2u64, 3, 7), (5, 17, 100), (189, 93, 44)] {
        let rep = compute_s(p191, j, c, e)?;
        println!(
            "  (j,c,e) = ({j:>3},{c:>3},{e:>3}): S = {:>4}, |A| = {:>2}, floor = {:>6.2}, S > 32: {}",
            rep.s,
            rep.size_a,
            rep.lower_bound,
            rep.clears_search_threshold()
        );
        assert!(rep.meets_upper_cap() && rep.meets_lower_bound());
    }

    // below the threshold the floor is vacuous and A can genuinely vanish:
    // the classic order-11 exception
    let p11 = Prime::new(11)?;
    let rep = compute_s(p11, 4, 2, 1)?;
    println!("p = 11, (4,2,1): S = {}, |A| = {}, floor = {:.2}", rep.s, rep.size_a, rep.lower_bound);
    assert_eq!(rep.size_a, 0);
    assert_eq!(find_x(p11, 4, 2, 1, 2)?, None);
    println!("  |A| = 0 and indeed no quadratic trade exists");

    // |A| > 0 is exactly quadratic-trade feasibility
    let rep = compute_s(p11, 6, 2, 4)?;
    println!("p = 11, (6,2,4): S = {}, |A| = {}", rep.s, rep.size_a);
    assert!(rep.size_a > 0);
    assert!(find_x(p11, 6, 2, 4, 2)?.is_some());
    println!("  |A| > 0 and find_x succeeds");
    Ok(())
}
