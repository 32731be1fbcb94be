//! First rows of diagonally cyclic latin squares and the transformations
//! that act on them.
//!
//! Everything here works for any odd order n, prime or not: the row
//! criterion, the multiplication-table family `B_{n,j}`, expansion to a full
//! square, the three shifts and the scalar relabeling, and the classical
//! equivalences (transversals of the addition table, semi-queens).

use crate::modmath::gcd;
use crate::{Error, Result};

/// Which coordinate a shift acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Columns,
    Symbols,
}

/// Why a candidate row fails to generate a diagonally cyclic square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowViolation {
    Empty,
    EvenOrder,
    SymbolOutOfRange { column: usize, symbol: u64 },
    RepeatedSymbol { symbol: u64 },
    RepeatedDifference { difference: u64 },
}

impl std::fmt::Display for RowViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            RowViolation::Empty => write!(f, "row is empty"),
            RowViolation::EvenOrder => {
                write!(f, "order is even; no diagonally cyclic square of even order exists")
            }
            RowViolation::SymbolOutOfRange { column, symbol } => {
                write!(f, "symbol {symbol} at column {column} is out of range")
            }
            RowViolation::RepeatedSymbol { symbol } => {
                write!(f, "symbols are not a permutation: {symbol} repeats")
            }
            RowViolation::RepeatedDifference { difference } => write!(
                f,
                "differences are not a permutation: row[i] - i takes the value {difference} twice"
            ),
        }
    }
}

/// Check the first-row criterion: the symbols and the differences
/// `row[i] - i (mod n)` must both be permutations of `0..n`.
pub fn check_first_row(row: &[u64]) -> std::result::Result<(), RowViolation> {
    let n = row.len();
    if n == 0 {
        return Err(RowViolation::Empty);
    }
    if n.is_multiple_of(2) {
        return Err(RowViolation::EvenOrder);
    }
    let nu = n as u64;
    let mut sym_seen = vec![false; n];
    for (i, &s) in row.iter().enumerate() {
        if s >= nu {
            return Err(RowViolation::SymbolOutOfRange { column: i, symbol: s });
        }
        if sym_seen[s as usize] {
            return Err(RowViolation::RepeatedSymbol { symbol: s });
        }
        sym_seen[s as usize] = true;
    }
    let mut diff_seen = vec![false; n];
    for (i, &s) in row.iter().enumerate() {
        let d = ((s + nu - i as u64) % nu) as usize;
        if diff_seen[d] {
            return Err(RowViolation::RepeatedDifference { difference: d as u64 });
        }
        diff_seen[d] = true;
    }
    Ok(())
}

/// The first row of a diagonally cyclic latin square; the whole square is
/// `L(i, c) = row[(c - i) mod n] + i (mod n)`. Construction validates the
/// row criterion, so a value of this type is always a real square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FirstRow {
    sym: Vec<u64>,
}

/// A cyclic transversal of a square, named by its offset: column `column`
/// of row 0, holding `symbol`; the full cell set is
/// `{(i, column + i, symbol + i) : i in 0..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransversalOffset {
    pub column: u64,
    pub symbol: u64,
}

impl TransversalOffset {
    /// Where this transversal lands after `FirstRow::shift(axis, d)`.
    pub fn shifted(self, axis: Axis, d: u64, n: u64) -> TransversalOffset {
        let d = d % n;
        match axis {
            Axis::Rows => TransversalOffset {
                column: (self.column + n - d) % n,
                symbol: (self.symbol + n - d) % n,
            },
            Axis::Columns => TransversalOffset {
                column: (self.column + d) % n,
                symbol: self.symbol % n,
            },
            Axis::Symbols => TransversalOffset {
                column: self.column % n,
                symbol: (self.symbol + d) % n,
            },
        }
    }

    /// Where this transversal lands after `FirstRow::multiply(k)`.
    pub fn multiplied(self, k: u64, n: u64) -> TransversalOffset {
        TransversalOffset {
            column: (self.column as u128 * k as u128 % n as u128) as u64,
            symbol: (self.symbol as u128 * k as u128 % n as u128) as u64,
        }
    }
}

/// First row `i ↦ j·i (mod n)` of the multiplication-table square `B_{n,j}`.
/// Needs gcd(j, n) = 1 for the symbols and gcd(j-1, n) = 1 for the
/// differences (for prime n this is just j ∉ {0, 1}).
pub fn build_bnj(n: u64, j: u64) -> Result<FirstRow> {
    if n == 0 {
        return Err(Error::BadFirstRow(RowViolation::Empty));
    }
    if n.is_multiple_of(2) {
        return Err(Error::BadFirstRow(RowViolation::EvenOrder));
    }
    let j = j % n;
    if gcd(j, n) != 1 {
        return Err(Error::MultiplierNotCoprime { j, n });
    }
    if gcd((j + n - 1) % n, n) != 1 {
        return Err(Error::MultiplierDegenerate { j, n });
    }
    let sym = (0..n).map(|i| (i as u128 * j as u128 % n as u128) as u64).collect();
    Ok(FirstRow { sym })
}

impl FirstRow {
    pub fn new(symbols: Vec<u64>) -> Result<FirstRow> {
        check_first_row(&symbols).map_err(Error::BadFirstRow)?;
        Ok(FirstRow { sym: symbols })
    }

    pub fn order(&self) -> u64 {
        self.sym.len() as u64
    }

    pub fn symbols(&self) -> &[u64] {
        &self.sym
    }

    /// Symbol in row 0 at the given column (taken mod n).
    pub fn symbol_at(&self, column: u64) -> u64 {
        self.sym[(column % self.order()) as usize]
    }

    pub fn is_standard_order(&self) -> bool {
        self.sym[0] == 0
    }

    /// The cyclic transversal through row 0, column `alpha`.
    pub fn offset(&self, alpha: u64) -> TransversalOffset {
        let n = self.order();
        TransversalOffset { column: alpha % n, symbol: self.symbol_at(alpha) }
    }

    /// All n transversal offsets; their cell sets partition the square.
    pub fn offsets(&self) -> Vec<TransversalOffset> {
        (0..self.order()).map(|a| self.offset(a)).collect()
    }

    /// Materialize the whole square.
    pub fn expand(&self) -> FullSquare {
        let n = self.sym.len();
        let nu = n as u64;
        let mut cells = vec![0u64; n * n];
        for i in 0..n {
            for c in 0..n {
                cells[i * n + c] = (self.sym[(c + n - i) % n] + i as u64) % nu;
            }
        }
        FullSquare { n: nu, cells }
    }

    /// Shift the square along one axis by d: rows means every cell (i,c,s)
    /// moves to (i+d,c,s), and likewise for columns and symbols. The result
    /// is expressed as a first row again:
    ///
    /// - rows:    `row'[i] = row[i + d] - d`
    /// - columns: `row'[i] = row[i - d]`
    /// - symbols: `row'[i] = row[i] + d`
    pub fn shift(&self, axis: Axis, d: u64) -> FirstRow {
        let n = self.order();
        let d = d % n;
        let sym: Vec<u64> = match axis {
            Axis::Rows => (0..n)
                .map(|i| (self.sym[((i + d) % n) as usize] + n - d) % n)
                .collect(),
            Axis::Columns => (0..n).map(|i| self.sym[((i + n - d) % n) as usize]).collect(),
            Axis::Symbols => self.sym.iter().map(|&s| (s + d) % n).collect(),
        };
        debug_assert!(check_first_row(&sym).is_ok());
        FirstRow { sym }
    }

    /// Relabel by a unit k: every cell (i,c,s) moves to (k·i, k·c, k·s).
    /// Only defined for squares in standard order (the fixed cell (0,0,0)
    /// keeps the result diagonally cyclic); the first row transforms by
    /// `row'[k·i] = k·row[i]`.
    pub fn multiply(&self, k: u64) -> Result<FirstRow> {
        let n = self.order();
        if self.sym[0] != 0 {
            return Err(Error::NotStandardOrder(self.sym[0]));
        }
        let k = k % n;
        if gcd(k, n) != 1 {
            return Err(Error::MultiplierNotCoprime { j: k, n });
        }
        let mut sym = vec![0u64; n as usize];
        for i in 0..n {
            let pos = (i as u128 * k as u128 % n as u128) as u64;
            sym[pos as usize] = (self.sym[i as usize] as u128 * k as u128 % n as u128) as u64;
        }
        debug_assert!(check_first_row(&sym).is_ok());
        Ok(FirstRow { sym })
    }

    /// The equivalent transversal of the addition table B_n: cells
    /// `(row[i] - i, i, row[i])`, one per row, column and symbol of B_n.
    pub fn to_bn_transversal(&self) -> Vec<(u64, u64, u64)> {
        let n = self.order();
        (0..n).map(|i| ((self.sym[i as usize] + n - i) % n, i, self.sym[i as usize])).collect()
    }

    /// The equivalent semi-queen placement: the (row, column) projection of
    /// the addition-table transversal. No two positions share a row, a
    /// column, or an ascending toroidal diagonal (row + column mod n).
    pub fn to_semiqueens(&self) -> Vec<(u64, u64)> {
        self.to_bn_transversal().into_iter().map(|(r, c, _)| (r, c)).collect()
    }

    /// Compact row string: base-36 digits ('a' = 10) for n ≤ 36, otherwise
    /// comma-separated decimal.
    pub fn encode(&self) -> String {
        encode_symbols(&self.sym)
    }

    /// Inverse of [`FirstRow::encode`], including the row-criterion check.
    pub fn decode(n: u64, text: &str) -> Result<FirstRow> {
        FirstRow::new(decode_symbols(n, text)?)
    }
}

impl std::fmt::Display for FirstRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.encode())
    }
}

/// Rebuild a first row from a transversal of the addition table B_n: a cell
/// `(r, c, r+c)` of the transversal pins row-0 symbol `r + c` at column `c`.
pub fn from_bn_transversal(n: u64, cells: &[(u64, u64, u64)]) -> Result<FirstRow> {
    if n == 0 || cells.len() as u64 != n {
        return Err(Error::BadBnTransversal("expected exactly n cells"));
    }
    let mut row_seen = vec![false; n as usize];
    let mut col_seen = vec![false; n as usize];
    let mut sym_seen = vec![false; n as usize];
    let mut sym = vec![0u64; n as usize];
    for &(r, c, s) in cells {
        if r >= n || c >= n || s >= n {
            return Err(Error::BadBnTransversal("cell coordinates out of range"));
        }
        if s != (r + c) % n {
            return Err(Error::BadBnTransversal("cell does not lie in the addition table"));
        }
        if std::mem::replace(&mut row_seen[r as usize], true) {
            return Err(Error::BadBnTransversal("two cells share a row"));
        }
        if std::mem::replace(&mut col_seen[c as usize], true) {
            return Err(Error::BadBnTransversal("two cells share a column"));
        }
        if std::mem::replace(&mut sym_seen[s as usize], true) {
            return Err(Error::BadBnTransversal("two cells share a symbol"));
        }
        sym[c as usize] = s;
    }
    FirstRow::new(sym)
}

pub fn encode_symbols(symbols: &[u64]) -> String {
    if symbols.len() <= 36 {
        symbols
            .iter()
            .map(|&s| char::from_digit(s.min(35) as u32, 36).unwrap())
            .collect()
    } else {
        let parts: Vec<String> = symbols.iter().map(u64::to_string).collect();
        parts.join(",")
    }
}

/// Lexical inverse of [`encode_symbols`] for a given order; validity of the
/// decoded row is a separate concern (see [`check_first_row`]).
pub fn decode_symbols(n: u64, text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if n == 0 {
        return Err(Error::RowCodec("order must be positive".into()));
    }
    if n <= 36 {
        let mut out = Vec::with_capacity(n as usize);
        for ch in text.chars() {
            match ch.to_digit(36) {
                Some(d) => out.push(d as u64),
                None => {
                    return Err(Error::RowCodec(format!("invalid base-36 digit {ch:?}")));
                }
            }
        }
        if out.len() as u64 != n {
            return Err(Error::RowCodec(format!(
                "expected {n} base-36 digits, found {}",
                out.len()
            )));
        }
        Ok(out)
    } else {
        let mut out = Vec::with_capacity(n as usize);
        for part in text.split(',') {
            let part = part.trim();
            out.push(
                part.parse::<u64>()
                    .map_err(|_| Error::RowCodec(format!("invalid decimal symbol {part:?}")))?,
            );
        }
        if out.len() as u64 != n {
            return Err(Error::RowCodec(format!(
                "expected {n} comma-separated symbols, found {}",
                out.len()
            )));
        }
        Ok(out)
    }
}

/// A fully expanded square. Only ever produced from a valid [`FirstRow`];
/// kept around for verification and display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSquare {
    n: u64,
    cells: Vec<u64>,
}

impl FullSquare {
    pub fn order(&self) -> u64 {
        self.n
    }

    /// Cell lookup; row and column are taken mod n, matching the cyclic
    /// structure.
    pub fn get(&self, row: u64, col: u64) -> u64 {
        let r = (row % self.n) as usize;
        let c = (col % self.n) as usize;
        self.cells[r * self.n as usize + c]
    }

    pub fn contains(&self, row: u64, col: u64, symbol: u64) -> bool {
        self.get(row, col) == symbol % self.n
    }

    pub fn first_row(&self) -> &[u64] {
        &self.cells[..self.n as usize]
    }

    pub fn is_latin(&self) -> bool {
        let n = self.n as usize;
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for k in 0..n {
                let r = self.cells[i * n + k] as usize;
                let c = self.cells[k * n + i] as usize;
                if r >= n || c >= n || row_seen[r] || col_seen[c] {
                    return false;
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        true
    }

    pub fn is_diagonally_cyclic(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for c in 0..n {
                if self.get(i + 1, c + 1) != (self.get(i, c) + 1) % n {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Display for FullSquare {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = if self.n > 10 { format!("{}", self.n - 1).len() } else { 1 };
        let n = self.n as usize;
        for r in 0..n {
            for c in 0..n {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", self.cells[r * n + c])?;
            }
            if r + 1 < n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}
