//! Seeded backtracking with restarts on trade-resistant prescriptions.

use dcls::modmath::Prime;
use dcls::search::{exhaustive_solve, solve, SearchPolicy, SearchProblem};

fn main() -> dcls::Result<()> {
    let p = Prime::new(11)?;
    // (j, c, e) = (4, 2, 1): no symbol trade reaches this one
    let problem = SearchProblem::for_normalized_triple(p, 4, 2, 1)?;

    for seed in 0..4u64 {
        let policy = SearchPolicy::with_seed(p, seed);
        let row = solve(&problem, &policy)?.expect("completable");
        println!("seed {seed}: {row}");
        // same seed, same answer
        assert_eq!(solve(&problem, &policy)?.unwrap(), row);
    }

    // small orders can be enumerated outright; the search only ever
    // returns rows from this set
    let all = exhaustive_solve(&problem)?;
    println!("this prescription has {} completions in total", all.len());

    // an unsolvable instance: order 7 leaves gaps, and a restart that
    // exhausts the tree proves it
    let p7 = Prime::new(7)?;
    let gap = SearchProblem::for_normalized_triple(p7, 2, 2, 1)?;
    let verdict = solve(&gap, &SearchPolicy::with_seed(p7, 0))?;
    let every = exhaustive_solve(&gap)?;
    println!("order 7, (2,2,1): search says {verdict:?}, enumeration found {}", every.len());
    assert!(verdict.is_none() && every.is_empty());
    Ok(())
}
