//! End-to-end completion of three prescribed cyclic transversals.
//!
//! An input names three row-0 cells (c_k, s_k); each spreads to the cyclic
//! transversal {(i, c_k+i, s_k+i)}. Any affine change of frame — shift the
//! columns, shift the symbols, rescale by a unit — moves the three cells to
//! (0, 0), (1, j), (c, e) without touching completability, so completion
//! reduces to the normalized question and the answer is carried back through
//! the same frame change. Three routes are tried in turn: the prescription
//! already lies inside a multiplication-table square (e = jc), a symbol
//! trade reaches it, or a seeded backtracking search finds a row. Whatever
//! succeeds is recorded in a replayable certificate.

use crate::modmath::Prime;
use crate::search::{self, SearchPolicy, SearchProblem};
use crate::square::{build_bnj, Axis, FirstRow, FullSquare, TransversalOffset};
use crate::trade::{self, TradeParams};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Why three (column, symbol) pairs fail to name disjoint transversals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleViolation {
    ColumnsNotDistinct,
    SymbolsNotDistinct,
    DiagonalsNotDistinct,
}

impl std::fmt::Display for TripleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TripleViolation::ColumnsNotDistinct => "columns not distinct",
            TripleViolation::SymbolsNotDistinct => "symbols not distinct",
            TripleViolation::DiagonalsNotDistinct => {
                "two transversals share a diagonal (symbol - column collides)"
            }
        })
    }
}

/// Three pairwise disjoint cyclic transversals of order p, named by their
/// row-0 cells. Columns, symbols, and differences symbol − column must all
/// be pairwise distinct, or the transversals would collide in some cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalTriple {
    p: Prime,
    offsets: [(u64, u64); 3],
}

impl TransversalTriple {
    pub fn new(p: Prime, offsets: [(u64, u64); 3]) -> Result<TransversalTriple> {
        let n = p.get();
        let offsets = offsets.map(|(c, s)| (c % n, s % n));
        check_triple(p, &offsets).map_err(Error::BadTriple)?;
        Ok(TransversalTriple { p, offsets })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn offsets(&self) -> [(u64, u64); 3] {
        self.offsets
    }

    /// All 3p cells (row, column, symbol) the prescription pins.
    pub fn cells(&self) -> Vec<(u64, u64, u64)> {
        let n = self.p.get();
        let mut out = Vec::with_capacity(3 * n as usize);
        for &(c, s) in &self.offsets {
            for i in 0..n {
                out.push((i, (c + i) % n, (s + i) % n));
            }
        }
        out
    }
}

/// The disjointness check behind [`TransversalTriple::new`], usable on raw
/// pairs.
pub fn check_triple(p: Prime, offsets: &[(u64, u64); 3]) -> std::result::Result<(), TripleViolation> {
    let n = p.get();
    for a in 0..3 {
        for b in (a + 1)..3 {
            let (ca, sa) = offsets[a];
            let (cb, sb) = offsets[b];
            if ca % n == cb % n {
                return Err(TripleViolation::ColumnsNotDistinct);
            }
            if sa % n == sb % n {
                return Err(TripleViolation::SymbolsNotDistinct);
            }
            if (sa % n + n - ca % n) % n == (sb % n + n - cb % n) % n {
                return Err(TripleViolation::DiagonalsNotDistinct);
            }
        }
    }
    Ok(())
}

/// The six ways to cast the three transversals as (first, second, third).
pub const ORDERINGS: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// The frame change that undoes a normalization: rescale the normalized
/// square by `scale`, then shift symbols by `symbol_shift` and columns by
/// `column_shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackMap {
    pub column_shift: u64,
    pub symbol_shift: u64,
    pub scale: u64,
}

impl BackMap {
    /// Carry a first row from the normalized frame back to the input frame.
    /// The row must be in standard order (normalized rows always are).
    pub fn denormalize_row(&self, row: &FirstRow) -> Result<FirstRow> {
        Ok(row
            .multiply(self.scale)?
            .shift(Axis::Symbols, self.symbol_shift)
            .shift(Axis::Columns, self.column_shift))
    }

    /// Carry one transversal offset back to the input frame.
    pub fn denormalize_offset(&self, off: TransversalOffset, n: u64) -> TransversalOffset {
        off.multiplied(self.scale, n)
            .shifted(Axis::Symbols, self.symbol_shift, n)
            .shifted(Axis::Columns, self.column_shift, n)
    }
}

/// A triple in the normalized frame — first transversal at (0,0), second at
/// (1,j), third at (c,e) — together with the frame change back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub j: u64,
    pub c: u64,
    pub e: u64,
    pub back: BackMap,
}

fn check_ordering(ordering: [usize; 3]) -> Result<()> {
    let mut sorted = ordering;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(Error::BadCertificate("ordering must be a permutation of 0, 1, 2"));
    }
    Ok(())
}

/// Change frame so the chosen first transversal sits at (0,0) and the second
/// at (1,j): shift columns by −c₁ and symbols by −s₁, then rescale by
/// (c₂−c₁)⁻¹. The third lands at (c, e) with
/// j = (s₂−s₁)/(c₂−c₁), c = (c₃−c₁)/(c₂−c₁), e = (s₃−s₁)/(c₂−c₁).
pub fn normalize(t: &TransversalTriple, ordering: [usize; 3]) -> Result<NormalForm> {
    check_ordering(ordering)?;
    let p = t.p;
    let (c1, s1) = t.offsets[ordering[0]];
    let (c2, s2) = t.offsets[ordering[1]];
    let (c3, s3) = t.offsets[ordering[2]];
    let scale = p.sub(c2, c1);
    let k = p.inv(scale)?;
    let j = p.mul(p.sub(s2, s1), k);
    let c = p.mul(p.sub(c3, c1), k);
    let e = p.mul(p.sub(s3, s1), k);
    // unreachable for a validated triple, but the frame math relies on it
    if j == 0 {
        return Err(Error::BadTriple(TripleViolation::SymbolsNotDistinct));
    }
    if j == 1 {
        return Err(Error::BadTriple(TripleViolation::DiagonalsNotDistinct));
    }
    Ok(NormalForm { j, c, e, back: BackMap { column_shift: c1, symbol_shift: s1, scale } })
}

/// How a completion was obtained; everything needed to rebuild the
/// normalized first row deterministically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Method {
    /// e = jc: the multiplication-table square B_{p,j} already contains the
    /// three transversals.
    #[serde(rename = "contained_in_b")]
    ContainedInB,
    /// A symbol trade on B_{p,j} moved the third transversal into place.
    #[serde(rename = "trade")]
    Trade(TradeParams),
    /// Seeded randomized backtracking; replaying the policy re-derives the
    /// identical row.
    #[serde(rename = "search")]
    Search { seed: u64, initial_cutoff: u64, growth: u64, max_restarts: u32 },
}

/// A self-contained, replayable record of one completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionCertificate {
    pub version: u32,
    pub p: u64,
    pub ordering: [u8; 3],
    pub normal_form: NormalForm,
    pub method: Method,
    /// Encoded first row in the normalized frame.
    pub first_row: String,
}

pub const CERTIFICATE_VERSION: u32 = 1;

fn certificate(
    p: Prime,
    ordering: [usize; 3],
    normal_form: NormalForm,
    method: Method,
    row: &FirstRow,
) -> CompletionCertificate {
    CompletionCertificate {
        version: CERTIFICATE_VERSION,
        p: p.get(),
        ordering: ordering.map(|i| i as u8),
        normal_form,
        method,
        first_row: row.encode(),
    }
}

/// Complete three transversals to a full diagonally cyclic square, trying
/// containment in a multiplication-table square for every ordering, then a
/// trade for every ordering, then seeded search on the identity ordering.
/// Orders p ≤ 7 are rejected: order 7 has prescriptions with no completion,
/// and smaller orders leave no admissible triples at all.
pub fn complete(t: &TransversalTriple, policy: &SearchPolicy) -> Result<CompletionCertificate> {
    let p = t.p;
    if p.get() <= 7 {
        return Err(Error::UnsupportedOrder(p.get()));
    }
    // containment is frame-independent, so checking every ordering is a
    // formality — but it keeps the certificate's ordering honest
    for ordering in ORDERINGS {
        let nf = normalize(t, ordering)?;
        if nf.e == p.mul(nf.j, nf.c) {
            let row = build_bnj(p.get(), nf.j)?;
            return Ok(certificate(p, ordering, nf, Method::ContainedInB, &row));
        }
    }
    for ordering in ORDERINGS {
        let nf = normalize(t, ordering)?;
        if let Some((row, params)) = trade::complete_via_trade(p, nf.j, nf.c, nf.e)? {
            return Ok(certificate(p, ordering, nf, Method::Trade(params), &row));
        }
    }
    let ordering = ORDERINGS[0];
    let nf = normalize(t, ordering)?;
    let problem = SearchProblem::for_normalized_triple(p, nf.j, nf.c, nf.e)?;
    match search::solve(&problem, policy)? {
        Some(row) => {
            let method = Method::Search {
                seed: policy.seed,
                initial_cutoff: policy.initial_cutoff,
                growth: policy.growth,
                max_restarts: policy.max_restarts,
            };
            Ok(certificate(p, ordering, nf, method, &row))
        }
        None => Err(Error::NoCompletion { j: nf.j, c: nf.c, e: nf.e }),
    }
}

/// Rebuild the normalized first row from the certificate's method alone —
/// no stored row is trusted, searches are replayed from their seed.
pub fn replay_method(cert: &CompletionCertificate) -> Result<FirstRow> {
    let p = Prime::new(cert.p)?;
    let nf = &cert.normal_form;
    match cert.method {
        Method::ContainedInB => {
            if nf.e != p.mul(nf.j, nf.c) {
                return Err(Error::BadCertificate("containment method requires e = jc"));
            }
            build_bnj(cert.p, nf.j)
        }
        Method::Trade(ref params) => {
            let row = trade::apply_trade(p, nf.j, params)?;
            if row.symbol_at(0) != 0 || row.symbol_at(1) != nf.j || row.symbol_at(nf.c) != nf.e {
                return Err(Error::BadCertificate("trade does not reach the prescribed cells"));
            }
            Ok(row)
        }
        Method::Search { seed, initial_cutoff, growth, max_restarts } => {
            let problem = SearchProblem::for_normalized_triple(p, nf.j, nf.c, nf.e)?;
            let policy = SearchPolicy { seed, initial_cutoff, growth, max_restarts };
            search::solve(&problem, &policy)?
                .ok_or(Error::BadCertificate("replayed search found nothing"))
        }
    }
}

/// The completed first row in the input frame.
pub fn completed_row(cert: &CompletionCertificate) -> Result<FirstRow> {
    let row = FirstRow::decode(cert.p, &cert.first_row)?;
    cert.normal_form.back.denormalize_row(&row)
}

/// The completed full square in the input frame.
pub fn completed_square(cert: &CompletionCertificate) -> Result<FullSquare> {
    Ok(completed_row(cert)?.expand())
}

/// Replay a certificate against the triple it claims to complete: rebuild
/// the row from the method, compare with the stored row, re-derive the
/// normal form, and check that the denormalized square is a diagonally
/// cyclic latin square containing every one of the 3p prescribed cells.
pub fn verify_certificate(cert: &CompletionCertificate, t: &TransversalTriple) -> bool {
    fn check(cert: &CompletionCertificate, t: &TransversalTriple) -> Result<bool> {
        if cert.version != CERTIFICATE_VERSION || cert.p != t.prime().get() {
            return Ok(false);
        }
        let ordering = cert.ordering.map(|i| i as usize);
        let nf = match normalize(t, ordering) {
            Ok(nf) => nf,
            Err(_) => return Ok(false),
        };
        if nf != cert.normal_form {
            return Ok(false);
        }
        let row = replay_method(cert)?;
        if row.encode() != cert.first_row {
            return Ok(false);
        }
        if row.symbol_at(0) != 0 || row.symbol_at(1) != nf.j || row.symbol_at(nf.c) != nf.e {
            return Ok(false);
        }
        let square = nf.back.denormalize_row(&row)?.expand();
        if !square.is_latin() || !square.is_diagonally_cyclic() {
            return Ok(false);
        }
        Ok(t.cells().iter().all(|&(r, c, s)| square.contains(r, c, s)))
    }
    check(cert, t).unwrap_or(false)
}
