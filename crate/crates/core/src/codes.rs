//! Binary linear codes associated with point sets.
//!
//! For `M ⊆ F_2^t ∖ {0}` with `|M| ≥ t + 1`, the associated matrix has the
//! elements of `M` as its columns (ascending order) and the associated code
//! is its kernel. A codeword of weight `w` is a set of `w` columns summing to
//! zero, so the minimum distance reads off the additive structure of `M`:
//! `d ≥ 4` iff `M` is sum-free and `d ≥ 5` iff `M` is sum-free Sidon.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::gf2core::{span_dim, Gf2Error, PointSet};
use crate::sidon::{self, SumBitmap};

/// Covering radius search depth used by [`associated_code`].
pub const DEFAULT_RADIUS_CAP: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("0 is an element of the set, so it has no associated code")]
    ZeroInSet,
    #[error("{n} columns is too few for {t} rows (need at least {})", t + 1)]
    TooFewColumns { n: usize, t: u32 },
    #[error("the associated matrix has rank {rank} < {t}")]
    NotFullRank { rank: u32, t: u32 },
    #[error("not every syndrome is a sum of at most {0} columns")]
    CapExceeded(u32),
    #[error("column {0} is not in the set")]
    ColumnNotPresent(u32),
    #[error("column {col} has no 1 in row {row}")]
    RowNotSet { col: u32, row: u32 },
    #[error("deleting row {row} maps two columns together or a column to 0")]
    CollapseToZeroOrDuplicate { row: u32 },
    #[error("smax({0}) is missing from the table")]
    MissingSmax(u32),
    #[error("parameters n = {n}, t = {t} are outside n > t >= 2, n < 2^t")]
    OutOfDomain { n: u64, t: u32 },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// Minimum distance, up to the distinctions the correspondence can make.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DClass {
    D3,
    D4,
    D5,
    #[serde(rename = "D6_OR_MORE")]
    D6OrMore,
}

impl DClass {
    /// The class of an exact minimum distance `d ≥ 3` (`None` = no nonzero
    /// codeword).
    pub fn from_distance(d: Option<u32>) -> DClass {
        match d {
            Some(3) => DClass::D3,
            Some(4) => DClass::D4,
            Some(5) => DClass::D5,
            Some(d) if d < 3 => panic!("associated codes have d >= 3, got {d}"),
            _ => DClass::D6OrMore,
        }
    }
}

impl fmt::Display for DClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DClass::D3 => "D3",
            DClass::D4 => "D4",
            DClass::D5 => "D5",
            DClass::D6OrMore => "D6_OR_MORE",
        })
    }
}

/// The associated `[n, k]` code of a point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeView {
    pub n: usize,
    /// Rows of the associated matrix.
    pub t: u32,
    pub k: usize,
    pub d_class: DClass,
    #[serde(rename = "R")]
    pub covering_radius: Option<u32>,
    #[serde(serialize_with = "serialize_columns")]
    pub columns: PointSet,
}

fn serialize_columns<S: serde::Serializer>(cols: &PointSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(cols.elements())
}

impl CodeView {
    /// The associated matrix as `t` strings of `n` characters `'0'`/`'1'`;
    /// row `i` holds coordinate `i + 1` of every column.
    pub fn check_matrix(&self) -> Vec<String> {
        (0..self.t)
            .map(|row| {
                self.columns
                    .elements()
                    .iter()
                    .map(|&c| if c >> row & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    pub fn is_full_rank(&self) -> bool {
        self.k == self.n - self.t as usize
    }
}

fn check_columns(m: &PointSet) -> Result<(), CodeError> {
    if m.contains(0) {
        Err(CodeError::ZeroInSet)
    } else {
        Ok(())
    }
}

pub fn associated_code(m: &PointSet) -> Result<CodeView, CodeError> {
    check_columns(m)?;
    let t = m.dim();
    if m.len() < t as usize + 1 {
        return Err(CodeError::TooFewColumns { n: m.len(), t });
    }
    let rank = span_dim(m);
    let covering = if rank == t {
        covering_radius(m, DEFAULT_RADIUS_CAP).ok()
    } else {
        None
    };
    Ok(CodeView {
        n: m.len(),
        t,
        k: m.len() - rank as usize,
        d_class: min_distance_class(m)?,
        covering_radius: covering,
        columns: m.clone(),
    })
}

/// Classifies the minimum distance of the code whose check-matrix columns
/// are the elements of `m`.
pub fn min_distance_class(m: &PointSet) -> Result<DClass, CodeError> {
    check_columns(m)?;
    if !sidon::is_sum_free(m) {
        return Ok(DClass::D3);
    }
    if !sidon::is_sidon(m) {
        return Ok(DClass::D4);
    }
    Ok(if has_five_zero_sum(m.elements()) {
        DClass::D5
    } else {
        DClass::D6OrMore
    })
}

/// Do five distinct columns sum to zero? Pair sums are hashed and probed
/// with every triple sum; the pair must avoid the triple's indices.
fn has_five_zero_sum(cols: &[u32]) -> bool {
    let n = cols.len();
    let mut pairs: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.entry(cols[i] ^ cols[j]).or_default().push((i, j));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let s = cols[i] ^ cols[j];
            for (l, &c) in cols.iter().enumerate().skip(j + 1) {
                if let Some(hits) = pairs.get(&(s ^ c)) {
                    let clash = |x: usize| x == i || x == j || x == l;
                    if hits.iter().any(|&(a, b)| !clash(a) && !clash(b)) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Smallest `R ≤ cap` such that every vector of `F_2^t` is a sum of at most
/// `R` columns.
pub fn covering_radius(m: &PointSet, cap: u32) -> Result<u32, CodeError> {
    check_columns(m)?;
    let t = m.dim();
    let rank = span_dim(m);
    if rank < t {
        return Err(CodeError::NotFullRank { rank, t });
    }
    let mut reached = SumBitmap::empty(t);
    reached.insert(0);
    let mut frontier = vec![0u32];
    for r in 1..=cap {
        let mut next = Vec::new();
        for &s in &frontier {
            for &c in m.elements() {
                let v = s ^ c;
                if !reached.contains(v) {
                    reached.insert(v);
                    next.push(v);
                }
            }
        }
        if reached.is_full() {
            return Ok(r);
        }
        frontier = next;
    }
    Err(CodeError::CapExceeded(cap))
}

/// Removes the column `drop_col` and the row `drop_row` (1-based) from the
/// associated matrix and returns the remaining columns in `F_2^{t-1}`.
pub fn puncture_set(m: &PointSet, drop_col: u32, drop_row: u32) -> Result<PointSet, CodeError> {
    let t = m.dim();
    if !m.contains(drop_col) {
        return Err(CodeError::ColumnNotPresent(drop_col));
    }
    if drop_row == 0 || drop_row > t || t < 2 {
        return Err(CodeError::OutOfDomain {
            n: m.len() as u64,
            t,
        });
    }
    let bit = drop_row - 1;
    if drop_col >> bit & 1 == 0 {
        return Err(CodeError::RowNotSet {
            col: drop_col,
            row: drop_row,
        });
    }
    let low = (1u32 << bit) - 1;
    let image: Vec<u32> = m
        .elements()
        .iter()
        .filter(|&&v| v != drop_col)
        .map(|&v| (v & low) | (v >> (bit + 1) << bit))
        .collect();
    let collapse = CodeError::CollapseToZeroOrDuplicate { row: drop_row };
    if image.contains(&0) {
        return Err(collapse);
    }
    PointSet::new(t - 1, image).map_err(|e| match e {
        Gf2Error::DuplicateElement(_) => collapse,
        other => other.into(),
    })
}

/// `dmax(n, n - t)` on a subdiagonal of the optimal-distance table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubdiagonalD {
    Three,
    Four,
    Five,
    SixOrMore,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubdiagonalClass {
    pub n: u64,
    pub t: u32,
    pub d_class: SubdiagonalD,
}

/// Classifies `dmax(n, n - t)` from the maximum Sidon set sizes `smax(t-1)`
/// and `smax(t)`.
pub fn subdiagonal_class(
    n: u64,
    t: u32,
    smax_table: &BTreeMap<u32, u64>,
) -> Result<SubdiagonalClass, CodeError> {
    if t < 2 || n <= t as u64 || t >= 64 || n >= 1u64 << t {
        return Err(CodeError::OutOfDomain { n, t });
    }
    let smax_t = *smax_table.get(&t).ok_or(CodeError::MissingSmax(t))?;
    let smax_prev = *smax_table
        .get(&(t - 1))
        .ok_or(CodeError::MissingSmax(t - 1))?;
    let d_class = if n > 1u64 << (t - 1) {
        SubdiagonalD::Three
    } else if n >= smax_t {
        SubdiagonalD::Four
    } else if n > smax_prev {
        SubdiagonalD::Five
    } else {
        SubdiagonalD::SixOrMore
    };
    Ok(SubdiagonalClass { n, t, d_class })
}
