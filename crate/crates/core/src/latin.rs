//! Latin squares, permanents, and exact collection counting.
//!
//! The number of distinct unordered collections of `n - 1` disjoint spanning
//! rainbow stars over a shared center is `L(n-1) / (n-1)!`, where `L(m)` is
//! the number of Latin squares of side `m`. Three independent routes compute
//! these values exactly:
//!
//! * [`count_latin_squares`] — the production counter: enumerate *reduced*
//!   squares (first row and column in natural order) by bitmask backtracking
//!   and scale by `m! (m-1)!`;
//! * [`count_latin_squares_direct`] — plain enumeration of every square, used
//!   to cross-check the reduced route at small sides;
//! * [`count_latin_via_permanent`] — inclusion-exclusion over all 0/1
//!   matrices weighted by binomials of their permanents.
//!
//! All counts use exact big-integer arithmetic.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::collection::RainbowCollection;
use crate::graph::{ColoredMultigraph, VertexId};

/// Largest side for the reduced-square counter. Side 7 enumerates
/// 16,942,080 reduced squares; side 8 would need half a trillion.
pub const MAX_REDUCED_SIDE: usize = 7;
/// Largest side for direct whole-square enumeration.
pub const MAX_DIRECT_SIDE: usize = 5;
/// Largest `n` for which `count_omega` is supported (needs `L(n-1)`).
pub const MAX_OMEGA: usize = 8;
/// Largest matrix side for [`permanent`].
pub const MAX_PERMANENT_SIDE: usize = 20;
/// Default cap for the permanent-formula route: side 4 sums over 65,536
/// matrices. Side 5 (33.5 million matrices) runs only when explicitly allowed.
pub const MAX_PERMANENT_FORMULA_SIDE: usize = 4;
pub const MAX_PERMANENT_FORMULA_SIDE_LONG: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatinError {
    #[error("rows do not form a Latin square")]
    NotALatinSquare,
    #[error("{what} supports values up to {max}, requested {requested}")]
    OutOfSupportedRange {
        what: &'static str,
        max: usize,
        requested: usize,
    },
    #[error("collection cannot be encoded as a rainbow matrix: {0}")]
    NotMatrixEncodable(String),
}

/// An `m x m` array in which every row and every column is a permutation of
/// `0..m`. Valid by construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LatinSquare {
    rows: Vec<Vec<usize>>,
}

impl LatinSquare {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, LatinError> {
        let m = rows.len();
        if m == 0 {
            return Err(LatinError::NotALatinSquare);
        }
        let mut col_seen = vec![vec![false; m]; m];
        for row in &rows {
            if row.len() != m {
                return Err(LatinError::NotALatinSquare);
            }
            let mut row_seen = vec![false; m];
            for (j, &sym) in row.iter().enumerate() {
                if sym >= m || row_seen[sym] || col_seen[j][sym] {
                    return Err(LatinError::NotALatinSquare);
                }
                row_seen[sym] = true;
                col_seen[j][sym] = true;
            }
        }
        Ok(LatinSquare { rows })
    }

    /// The addition-table square: cell `(i, j)` holds `(i + j) mod side`.
    pub fn cyclic(side: usize) -> Self {
        assert!(side >= 1);
        LatinSquare {
            rows: (0..side)
                .map(|i| (0..side).map(|j| (i + j) % side).collect())
                .collect(),
        }
    }

    pub fn side(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// A square matrix with entries in {0, 1}, stored as row bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    side: usize,
    rows: Vec<u32>,
}

impl ZeroOneMatrix {
    pub fn new(cells: &[Vec<u8>]) -> Result<Self, LatinError> {
        let side = cells.len();
        if side == 0 || side > MAX_PERMANENT_SIDE {
            return Err(LatinError::OutOfSupportedRange {
                what: "0/1 matrix side",
                max: MAX_PERMANENT_SIDE,
                requested: side,
            });
        }
        let mut rows = Vec::with_capacity(side);
        for row in cells {
            if row.len() != side || row.iter().any(|&x| x > 1) {
                return Err(LatinError::NotALatinSquare);
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &x)| acc | ((x as u32) << j)),
            );
        }
        Ok(ZeroOneMatrix { side, rows })
    }

    pub fn identity(side: usize) -> Self {
        ZeroOneMatrix {
            side,
            rows: (0..side).map(|i| 1 << i).collect(),
        }
    }

    pub fn ones(side: usize) -> Self {
        ZeroOneMatrix {
            side,
            rows: vec![(1u32 << side) - 1; side],
        }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row] >> col & 1 == 1
    }

    /// Number of zero entries.
    pub fn zero_count(&self) -> usize {
        self.side * self.side - self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>()
    }
}

/// Exact permanent by inclusion-exclusion over column subsets, walking the
/// subsets in Gray-code order so each step updates one column.
pub fn permanent(a: &ZeroOneMatrix) -> BigUint {
    let n = a.side;
    let mut row_sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut prev: u32 = 0;
    for g in 1u64..1u64 << n {
        let gray = (g ^ (g >> 1)) as u32;
        let bit = gray ^ prev;
        let j = bit.trailing_zeros();
        let delta: i64 = if gray & bit != 0 { 1 } else { -1 };
        for (i, sum) in row_sums.iter_mut().enumerate() {
            if a.rows[i] >> j & 1 == 1 {
                *sum += delta;
            }
        }
        prev = gray;
        let mut prod: i128 = 1;
        for &s in &row_sums {
            prod *= s as i128;
            if prod == 0 {
                break;
            }
        }
        if (n as u32).wrapping_sub(gray.count_ones()) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    assert!(total >= 0, "permanent of a 0/1 matrix is nonnegative");
    BigUint::from(total as u128)
}

fn fill_rows(row: usize, m: usize, full: u32, cols: &mut [u32], count: &mut u64, fixed_first: bool) {
    if row + 1 == m {
        // The last row is forced: each column is missing exactly one symbol
        // and each symbol is missing from exactly one column.
        *count += 1;
        return;
    }
    if fixed_first {
        let bit = 1u32 << row;
        debug_assert_eq!(cols[0] & bit, 0);
        cols[0] |= bit;
        fill_cells(row, 1, bit, m, full, cols, count, fixed_first);
        cols[0] &= !bit;
    } else {
        fill_cells(row, 0, 0, m, full, cols, count, fixed_first);
    }
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    row: usize,
    col: usize,
    row_mask: u32,
    m: usize,
    full: u32,
    cols: &mut [u32],
    count: &mut u64,
    fixed_first: bool,
) {
    if col == m {
        fill_rows(row + 1, m, full, cols, count, fixed_first);
        return;
    }
    let mut avail = full & !(row_mask | cols[col]);
    while avail != 0 {
        let bit = avail & avail.wrapping_neg();
        avail ^= bit;
        cols[col] |= bit;
        fill_cells(row, col + 1, row_mask | bit, m, full, cols, count, fixed_first);
        cols[col] &= !bit;
    }
}

/// Number of reduced Latin squares of side `m` (first row and first column in
/// natural order), by exhaustive backtracking.
pub fn count_reduced_latin_squares(m: usize) -> Result<u64, LatinError> {
    if m == 0 || m > MAX_REDUCED_SIDE {
        return Err(LatinError::OutOfSupportedRange {
            what: "reduced Latin square side",
            max: MAX_REDUCED_SIDE,
            requested: m,
        });
    }
    if m <= 2 {
        return Ok(1);
    }
    let full = (1u32 << m) - 1;
    let mut cols: Vec<u32> = (0..m).map(|j| 1u32 << j).collect(); // row 0 = identity
    let mut count = 0u64;
    fill_rows(1, m, full, &mut cols, &mut count, true);
    Ok(count)
}

/// `L(m)`, the number of Latin squares of side `m`, via the classical
/// identity `L(m) = m! (m-1)! R(m)` over the reduced count `R(m)`.
pub fn count_latin_squares(m: usize) -> Result<BigUint, LatinError> {
    let reduced = count_reduced_latin_squares(m)?;
    Ok(factorial(m) * factorial(m - 1) * BigUint::from(reduced))
}

/// `L(m)` by direct enumeration of every square. Slow route kept as an
/// independent oracle for the reduced counter.
pub fn count_latin_squares_direct(m: usize) -> Result<u64, LatinError> {
    if m == 0 || m > MAX_DIRECT_SIDE {
        return Err(LatinError::OutOfSupportedRange {
            what: "direct Latin square enumeration side",
            max: MAX_DIRECT_SIDE,
            requested: m,
        });
    }
    if m == 1 {
        return Ok(1);
    }
    let full = (1u32 << m) - 1;
    let mut cols = vec![0u32; m];
    let mut count = 0u64;
    fill_rows(0, m, full, &mut cols, &mut count, false);
    Ok(count)
}

/// The number of distinct unordered collections of `n - 1` disjoint spanning
/// rainbow stars over a common center: `L(n-1) / (n-1)!`, with `L(0) = 1` and
/// `0! = 1` so that the `n = 1` row of the table is defined.
pub fn count_omega(n: usize) -> Result<BigUint, LatinError> {
    if n == 0 || n > MAX_OMEGA {
        return Err(LatinError::OutOfSupportedRange {
            what: "collection count omega(n)",
            max: MAX_OMEGA,
            requested: n,
        });
    }
    if n == 1 {
        return Ok(BigUint::from(1u32));
    }
    let squares = count_latin_squares(n - 1)?;
    let (quotient, remainder) = squares.div_rem(&factorial(n - 1));
    assert!(
        remainder == BigUint::from(0u32),
        "L(n-1) must be divisible by (n-1)!"
    );
    Ok(quotient)
}

/// Permanent of a small row-mask matrix; values stay far below `i32::MAX`
/// for sides up to 5.
fn permanent_masks(rows: &[u32], m: usize) -> i64 {
    let mut total: i64 = 0;
    for s in 1u32..1u32 << m {
        let mut prod: i64 = 1;
        for &r in rows {
            prod *= (r & s).count_ones() as i64;
        }
        if (m as u32).wrapping_sub(s.count_ones()) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

fn permanent_formula_bound(allow_long: bool) -> usize {
    if allow_long {
        MAX_PERMANENT_FORMULA_SIDE_LONG
    } else {
        MAX_PERMANENT_FORMULA_SIDE
    }
}

/// Signed inclusion-exclusion sum over every `m x m` 0/1 matrix `A`:
/// `sum (-1)^(zeros of A) * C(per A, m)`. Multiplied by `m!` this equals
/// `L(m)`; on its own (with `m = n - 1`) it equals `omega(n)`.
fn permanent_formula_sum(m: usize) -> i64 {
    if m == 0 {
        return 1;
    }
    let max_per: u64 = (1..=m as u64).product(); // per A <= m!
    let binom: Vec<i64> = (0..=max_per)
        .map(|p| num_integer::binomial(p, m as u64) as i64)
        .collect();
    let cells = m * m;
    let mut rows = vec![0u32; m];
    let mut total: i64 = 0;
    // Rows with no ones contribute per = 0, hence C(0, m) = 0; skip them by
    // iterating each row mask from 1.
    fn recurse(
        rows: &mut Vec<u32>,
        depth: usize,
        m: usize,
        cells: usize,
        ones_so_far: u32,
        binom: &[i64],
        total: &mut i64,
    ) {
        if depth == m {
            let per = permanent_masks(rows, m);
            if per == 0 {
                return;
            }
            let zeros = cells as u32 - ones_so_far;
            let term = binom[per as usize];
            if zeros % 2 == 0 {
                *total += term;
            } else {
                *total -= term;
            }
            return;
        }
        for mask in 1u32..1u32 << m {
            rows[depth] = mask;
            recurse(
                rows,
                depth + 1,
                m,
                cells,
                ones_so_far + mask.count_ones(),
                binom,
                total,
            );
        }
        rows[depth] = 0;
    }
    recurse(&mut rows, 0, m, cells, 0, &binom, &mut total);
    total
}

/// `L(m)` evaluated through the permanent formula. Capped at side 4 unless
/// `allow_long` is set (side 5 visits 33.5 million matrices).
pub fn count_latin_via_permanent(m: usize, allow_long: bool) -> Result<BigUint, LatinError> {
    let max = permanent_formula_bound(allow_long);
    if m == 0 || m > max {
        return Err(LatinError::OutOfSupportedRange {
            what: "permanent-formula Latin square side",
            max,
            requested: m,
        });
    }
    let sum = permanent_formula_sum(m);
    assert!(sum >= 0, "Latin square count is nonnegative");
    Ok(factorial(m) * BigUint::from(sum as u64))
}

/// `omega(n)` evaluated through the permanent formula over 0/1 matrices of
/// side `n - 1`; the factorials cancel, so no division is performed.
pub fn count_omega_via_permanent(n: usize, allow_long: bool) -> Result<BigUint, LatinError> {
    let max = permanent_formula_bound(allow_long) + 1;
    if n == 0 || n > max {
        return Err(LatinError::OutOfSupportedRange {
            what: "permanent-formula omega(n)",
            max,
            requested: n,
        });
    }
    let sum = permanent_formula_sum(n - 1);
    assert!(sum >= 0, "collection count is nonnegative");
    Ok(BigUint::from(sum as u64))
}

/// How the columns of a rainbow matrix are indexed.
pub enum SlotOrder {
    /// Columns are the leaves of the parts' common star center, in ascending
    /// vertex order.
    CenterLeaves,
    /// Columns are the given endpoint pairs (the edge slots of an
    /// identical-tree decomposition).
    EndpointPairs(Vec<(VertexId, VertexId)>),
}

/// Encodes a decomposition as its rainbow matrix: cell `(i, j)` is the color
/// of part `i`'s edge in slot `j`. Row distinctness comes from rainbowness,
/// column distinctness from disjointness, so the result is a Latin square.
pub fn rainbow_matrix_of(
    graph: &ColoredMultigraph,
    collection: &RainbowCollection,
    slots: &SlotOrder,
) -> Result<LatinSquare, LatinError> {
    let m = collection.len();
    if m == 0 {
        return Err(LatinError::NotMatrixEncodable("empty collection".into()));
    }
    let mut rows = Vec::with_capacity(m);
    match slots {
        SlotOrder::CenterLeaves => {
            let center = graph
                .vertices()
                .find(|&v| {
                    collection
                        .edge_ids()
                        .all(|id| graph.edge(id).touches(v))
                })
                .ok_or_else(|| {
                    LatinError::NotMatrixEncodable("parts share no common center".into())
                })?;
            let leaves: Vec<VertexId> = graph.vertices().filter(|&v| v != center).collect();
            for part in collection.parts() {
                let mut row = vec![usize::MAX; m];
                for &id in &part.edges {
                    let e = graph.edge(id);
                    let leaf = e.other_endpoint(center).expect("edge touches center");
                    let slot = leaves.binary_search(&leaf).map_err(|_| {
                        LatinError::NotMatrixEncodable(format!("no slot for vertex {}", leaf.0))
                    })?;
                    if row[slot] != usize::MAX {
                        return Err(LatinError::NotMatrixEncodable(format!(
                            "two edges of one part reach vertex {}",
                            leaf.0
                        )));
                    }
                    row[slot] = e.color.0;
                }
                rows.push(row);
            }
        }
        SlotOrder::EndpointPairs(pairs) => {
            if pairs.len() != m {
                return Err(LatinError::NotMatrixEncodable(format!(
                    "{} slots declared for {} parts",
                    pairs.len(),
                    m
                )));
            }
            let normalized: Vec<(VertexId, VertexId)> = pairs
                .iter()
                .map(|&(a, b)| (a.min(b), a.max(b)))
                .collect();
            for part in collection.parts() {
                let mut row = vec![usize::MAX; m];
                for &id in &part.edges {
                    let e = graph.edge(id);
                    let key = (e.u.min(e.v), e.u.max(e.v));
                    let slot = normalized
                        .iter()
                        .position(|&p| p == key)
                        .ok_or_else(|| {
                            LatinError::NotMatrixEncodable(format!(
                                "no slot for edge {}-{}",
                                e.u.0, e.v.0
                            ))
                        })?;
                    if row[slot] != usize::MAX {
                        return Err(LatinError::NotMatrixEncodable(format!(
                            "two edges of one part fill slot {slot}"
                        )));
                    }
                    row[slot] = e.color.0;
                }
                rows.push(row);
            }
        }
    }
    LatinSquare::from_rows(rows)
        .map_err(|_| LatinError::NotMatrixEncodable("rows do not form a Latin square".into()))
}

pub(crate) fn factorial(k: usize) -> BigUint {
    let mut out = BigUint::from(1u32);
    for i in 2..=k {
        out *= BigUint::from(i);
    }
    out
}
