//! Diagonally cyclic latin squares of odd order: construction, trades,
//! character-sum estimates, and completion of three prescribed cyclic
//! transversals.
//!
//! A latin square of odd order `n` on symbols `0..n` is *diagonally cyclic*
//! when stepping one cell down the main diagonal advances every symbol by
//! one: `L(i+1, j+1) = L(i, j) + 1`, indices and symbols mod `n`. Such a
//! square is determined by its first row, and a candidate row works exactly
//! when both the row itself and its column-wise differences `row[i] - i`
//! are permutations of `0..n` ([`FirstRow`]).
//!
//! The workhorse family is `B_{n,j}` with first row `i ↦ j·i`
//! ([`square::build_bnj`]). For prime order, a symbol trade driven by m-th
//! power residues rearranges `B_{p,j}` so that three target cyclic
//! transversals appear ([`trade`]); character sums show the trade succeeds
//! for every admissible target once `p ≥ 191` ([`charsum`]); the finitely
//! many misses below that are censused ([`census`]) and closed by a
//! randomized backtracking search ([`search`]). The [`completer`] module
//! glues the pipeline together behind replayable [`CompletionCertificate`]s,
//! and a thin `dcls` binary ([`cli`]) exposes it all.
//!
//! The examples directory is the guided tour; each one runs standalone:
//!
//! ```text
//! cargo run --release --example bnj_squares          # build and expand B_{n,j}
//! cargo run --release --example transformations      # shifts, scalar multiples, offset laws
//! cargo run --release --example equivalences         # transversals of B_n, semi-queens
//! cargo run --release --example trade_reorder        # a full symbol-trade walkthrough at p=11
//! cargo run --release --example complete_transversals # raw triple -> certificate -> verification
//! cargo run --release --example exception_census     # reproduce the 2076-exception table
//! cargo run --release --example character_sums       # S, |A|, and the p - 11*sqrt(p) - 6 bound
//! cargo run --release --example randomized_search    # seeded restarts on a hard triple
//! cargo run --release --example corpus_check         # validate the shipped 180-line corpus
//! ```

pub mod census;
pub mod charsum;
pub mod cli;
pub mod completer;
pub mod error;
pub mod modmath;
pub mod search;
pub mod square;
pub mod trade;

pub use census::{CorpusReport, ExceptionRecord, MPolicy};
pub use charsum::CharSumReport;
pub use completer::{CompletionCertificate, Method, NormalForm, TransversalTriple};
pub use error::{Error, Result};
pub use modmath::Prime;
pub use search::{SearchPolicy, SearchProblem};
pub use square::{Axis, FirstRow, FullSquare, TransversalOffset};
pub use trade::TradeParams;
