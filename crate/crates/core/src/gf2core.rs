//! Vectors, point sets and affine maps over the binary field.
//!
//! A vector of `F_2^t` is stored as the integer `sum a_i 2^i`, so bit `i`
//! holds coordinate `i + 1`. The standard basis vector `e_i` is `1 << (i - 1)`.

use std::fmt;
use std::ops::Add;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Largest ambient dimension supported by bitmap-backed operations.
pub const MAX_DIM: u32 = 28;

/// Errors raised by the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension {0} is outside the supported range 1..={MAX_DIM}")]
    DimensionOutOfRange(u32),
    #[error("value {value} does not fit in dimension {dim}")]
    ValueOutOfRange { value: u64, dim: u32 },
    #[error("duplicate element {0}")]
    DuplicateElement(u32),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(u32, u32),
    #[error("linear map of dimension {dim} has rank {rank}")]
    NonInvertibleMap { dim: u32, rank: u32 },
    #[error("linear map needs {expected} columns, got {got}")]
    WrongColumnCount { expected: usize, got: usize },
}

#[inline]
pub(crate) fn mask(dim: u32) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

fn check_dim(dim: u32) -> Result<(), Gf2Error> {
    if dim == 0 || dim > MAX_DIM {
        Err(Gf2Error::DimensionOutOfRange(dim))
    } else {
        Ok(())
    }
}

/// An element of `F_2^dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GF2Vector {
    value: u32,
    dim: u32,
}

impl GF2Vector {
    pub fn new(value: u32, dim: u32) -> Result<Self, Gf2Error> {
        check_dim(dim)?;
        if value & !mask(dim) != 0 {
            return Err(Gf2Error::ValueOutOfRange {
                value: value.into(),
                dim,
            });
        }
        Ok(Self { value, dim })
    }

    pub fn zero(dim: u32) -> Result<Self, Gf2Error> {
        Self::new(0, dim)
    }

    /// The standard basis vector `e_i`, with `i` counted from 1.
    pub fn unit(i: u32, dim: u32) -> Result<Self, Gf2Error> {
        if i == 0 || i > dim {
            return Err(Gf2Error::ValueOutOfRange {
                value: i.into(),
                dim,
            });
        }
        Self::new(1 << (i - 1), dim)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn dim(self) -> u32 {
        self.dim
    }

    /// Hamming weight.
    pub fn weight(self) -> u32 {
        weight(self.value)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Coordinates `a_1 .. a_t` as a `0`/`1` string, least significant first.
    pub fn to_bit_string(self) -> String {
        (0..self.dim)
            .map(|i| if self.value >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl Add for GF2Vector {
    type Output = GF2Vector;

    fn add(self, rhs: GF2Vector) -> GF2Vector {
        assert_eq!(self.dim, rhs.dim, "adding vectors of different dimension");
        GF2Vector {
            value: self.value ^ rhs.value,
            dim: self.dim,
        }
    }
}

impl fmt::Display for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Hamming weight of a raw vector value.
#[inline]
pub fn weight(v: u32) -> u32 {
    v.count_ones()
}

/// Rank over F_2 of a list of vectors.
///
/// Pivots on the lowest set bit, so the reduced basis is reproducible.
pub fn rank(vectors: &[u32]) -> u32 {
    independent_subset(vectors).len() as u32
}

#[inline]
fn reduce(basis: &[u32; 32], mut v: u32) -> u32 {
    while v != 0 {
        let p = v.trailing_zeros() as usize;
        if basis[p] == 0 {
            break;
        }
        v ^= basis[p];
    }
    v
}

/// Greedily picks, in input order, a maximal independent subsequence.
pub(crate) fn independent_subset(vectors: &[u32]) -> Vec<u32> {
    let mut basis = [0u32; 32];
    let mut picked = Vec::new();
    for &v in vectors {
        let x = reduce(&basis, v);
        if x != 0 {
            basis[x.trailing_zeros() as usize] = x;
            picked.push(v);
        }
    }
    picked
}

/// A finite subset of `F_2^dim`, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PointSet {
    dim: u32,
    elements: Vec<u32>,
}

impl PointSet {
    pub fn empty(dim: u32) -> Result<Self, Gf2Error> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            elements: Vec::new(),
        })
    }

    /// Builds a set from raw values. Order does not matter, duplicates are
    /// rejected.
    pub fn new(dim: u32, values: impl IntoIterator<Item = u32>) -> Result<Self, Gf2Error> {
        check_dim(dim)?;
        let mut elements: Vec<u32> = values.into_iter().collect();
        if let Some(&bad) = elements.iter().find(|&&v| v & !mask(dim) != 0) {
            return Err(Gf2Error::ValueOutOfRange {
                value: bad.into(),
                dim,
            });
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Gf2Error::DuplicateElement(w[0]));
        }
        Ok(Self { dim, elements })
    }

    /// Like [`PointSet::new`] but silently merges duplicates.
    pub fn from_iter_dedup(
        dim: u32,
        values: impl IntoIterator<Item = u32>,
    ) -> Result<Self, Gf2Error> {
        let mut v: Vec<u32> = values.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::new(dim, v)
    }

    /// The set `{0, e_1, ..., e_dim}`.
    pub fn standard_base(dim: u32) -> Result<Self, Gf2Error> {
        Self::new(dim, std::iter::once(0).chain((0..dim).map(|i| 1 << i)))
    }

    /// Every vector of the space.
    pub fn full_space(dim: u32) -> Result<Self, Gf2Error> {
        check_dim(dim)?;
        Self::new(dim, 0..=mask(dim))
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn vectors(&self) -> impl Iterator<Item = GF2Vector> + '_ {
        let dim = self.dim;
        self.elements
            .iter()
            .map(move |&value| GF2Vector { value, dim })
    }

    pub fn contains(&self, v: u32) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    /// `self ∪ {v}`; a no-op when `v` is already present.
    pub fn with(&self, v: u32) -> Result<Self, Gf2Error> {
        if v & !mask(self.dim) != 0 {
            return Err(Gf2Error::ValueOutOfRange {
                value: v.into(),
                dim: self.dim,
            });
        }
        let mut out = self.clone();
        if let Err(pos) = out.elements.binary_search(&v) {
            out.elements.insert(pos, v);
        }
        Ok(out)
    }

    /// `self ∖ {v}`.
    pub fn without(&self, v: u32) -> Self {
        let mut out = self.clone();
        if let Ok(pos) = out.elements.binary_search(&v) {
            out.elements.remove(pos);
        }
        out
    }

    /// The translate `self + a`.
    pub fn translate(&self, a: u32) -> Result<Self, Gf2Error> {
        Self::new(self.dim, self.elements.iter().map(|&m| m ^ a))
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.elements.iter().all(|&v| other.contains(v))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Dimension of the linear span of `m`.
pub fn span_dim(m: &PointSet) -> u32 {
    rank(m.elements())
}

/// Dimension of the affine span of `m` (0 for a single point, and for the
/// empty set).
pub fn affine_span_dim(m: &PointSet) -> u32 {
    match m.elements().first() {
        None => 0,
        Some(&m0) => {
            let diffs: Vec<u32> = m.elements().iter().map(|&v| v ^ m0).collect();
            rank(&diffs)
        }
    }
}

/// A linear map of `F_2^dim`, given by the images of the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinearMap {
    dim: u32,
    columns: Vec<u32>,
}

impl LinearMap {
    /// `columns[i]` is the image of `e_{i+1}`.
    pub fn new(dim: u32, columns: Vec<u32>) -> Result<Self, Gf2Error> {
        check_dim(dim)?;
        if columns.len() != dim as usize {
            return Err(Gf2Error::WrongColumnCount {
                expected: dim as usize,
                got: columns.len(),
            });
        }
        if let Some(&bad) = columns.iter().find(|&&c| c & !mask(dim) != 0) {
            return Err(Gf2Error::ValueOutOfRange {
                value: bad.into(),
                dim,
            });
        }
        Ok(Self { dim, columns })
    }

    pub fn identity(dim: u32) -> Result<Self, Gf2Error> {
        Self::new(dim, (0..dim).map(|i| 1 << i).collect())
    }

    /// The coordinate permutation sending `e_{i+1}` to `e_{perm[i]+1}`.
    pub fn permutation(dim: u32, perm: &[u32]) -> Result<Self, Gf2Error> {
        Self::new(dim, perm.iter().map(|&p| 1u32 << p).collect())
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn rank(&self) -> u32 {
        rank(&self.columns)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        let mut out = 0;
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out ^= self.columns[i];
            bits &= bits - 1;
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            dim: self.dim,
            columns: other.columns.iter().map(|&c| self.apply(c)).collect(),
        }
    }

    /// Gauss-Jordan inversion.
    pub fn inverse(&self) -> Result<LinearMap, Gf2Error> {
        let n = self.dim as usize;
        // Row-reduce [A | I] where A's rows are read off the columns.
        let mut rows: Vec<(u32, u32)> = (0..n)
            .map(|r| {
                let row = self
                    .columns
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (c, &col)| acc | ((col >> r & 1) << c));
                (row, 1u32 << r)
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| rows[r].0 >> col & 1 == 1) else {
                return Err(Gf2Error::NonInvertibleMap {
                    dim: self.dim,
                    rank: self.rank(),
                });
            };
            rows.swap(col, p);
            let pivot = rows[col];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col && row.0 >> col & 1 == 1 {
                    row.0 ^= pivot.0;
                    row.1 ^= pivot.1;
                }
            }
        }
        // rows[r].1 is row r of the inverse; transpose back into columns.
        let columns = (0..n)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .fold(0u32, |acc, (r, row)| acc | ((row.1 >> c & 1) << r))
            })
            .collect();
        Ok(LinearMap {
            dim: self.dim,
            columns,
        })
    }

    /// The unique linear map sending `from[i]` to `to[i]` for a basis `from`.
    pub fn from_basis_images(dim: u32, from: &[u32], to: &[u32]) -> Result<LinearMap, Gf2Error> {
        let from_map = LinearMap::new(dim, from.to_vec())?;
        let to_map = LinearMap::new(dim, to.to_vec())?;
        Ok(to_map.compose(&from_map.inverse()?))
    }
}

/// `v ↦ L(v) + a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffineMap {
    linear: LinearMap,
    translation: u32,
}

impl AffineMap {
    pub fn new(linear: LinearMap, translation: u32) -> Result<Self, Gf2Error> {
        if translation & !mask(linear.dim) != 0 {
            return Err(Gf2Error::ValueOutOfRange {
                value: translation.into(),
                dim: linear.dim,
            });
        }
        Ok(Self {
            linear,
            translation,
        })
    }

    pub fn identity(dim: u32) -> Result<Self, Gf2Error> {
        Self::new(LinearMap::identity(dim)?, 0)
    }

    pub fn linear(&self) -> &LinearMap {
        &self.linear
    }

    pub fn translation(&self) -> u32 {
        self.translation
    }

    pub fn dim(&self) -> u32 {
        self.linear.dim
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.linear.apply(v) ^ self.translation
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            linear: self.linear.compose(&other.linear),
            translation: self.apply(other.translation),
        }
    }

    pub fn inverse(&self) -> Result<AffineMap, Gf2Error> {
        let inv = self.linear.inverse()?;
        let translation = inv.apply(self.translation);
        Ok(AffineMap {
            linear: inv,
            translation,
        })
    }
}

/// Image `T(M)` of a point set under an affine permutation.
pub fn apply_affine(t: &AffineMap, m: &PointSet) -> Result<PointSet, Gf2Error> {
    if t.dim() != m.dim() {
        return Err(Gf2Error::DimMismatch(t.dim(), m.dim()));
    }
    let rank = t.linear.rank();
    if rank < t.dim() {
        return Err(Gf2Error::NonInvertibleMap { dim: t.dim(), rank });
    }
    PointSet::new(m.dim(), m.elements().iter().map(|&v| t.apply(v)))
}

/// Deterministic pseudorandom affine permutation of `F_2^dim`.
pub fn random_affine(dim: u32, seed: u64) -> Result<AffineMap, Gf2Error> {
    check_dim(dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = mask(dim);
    loop {
        let columns: Vec<u32> = (0..dim).map(|_| rng.gen::<u32>() & m).collect();
        let linear = LinearMap { dim, columns };
        if linear.is_invertible() {
            let translation = rng.gen::<u32>() & m;
            return Ok(AffineMap {
                linear,
                translation,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m4() -> PointSet {
        PointSet::new(4, [0, 1, 2, 4, 8, 15]).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(GF2Vector::new(0, 7).unwrap().weight(), 0);
        assert_eq!(GF2Vector::new(15, 7).unwrap().weight(), 4);
        // 87 = 64 + 16 + 4 + 2 + 1
        assert_eq!(GF2Vector::new(87, 7).unwrap().weight(), 5);
    }

    #[test]
    fn vector_bounds() {
        assert!(GF2Vector::new(16, 4).is_err());
        assert_eq!(GF2Vector::unit(3, 5).unwrap().value(), 4);
        let a = GF2Vector::new(5, 3).unwrap();
        assert!((a + a).is_zero());
        assert_eq!(GF2Vector::new(6, 3).unwrap().to_bit_string(), "011");
    }

    #[test]
    fn point_set_rejects_bad_input() {
        assert_eq!(
            PointSet::new(3, [1, 2, 1]),
            Err(Gf2Error::DuplicateElement(1))
        );
        assert!(PointSet::new(3, [8]).is_err());
        assert!(PointSet::new(0, []).is_err());
        assert!(PointSet::new(29, []).is_err());
    }

    #[test]
    fn spans() {
        assert_eq!(span_dim(&PointSet::empty(5).unwrap()), 0);
        let basis = PointSet::new(5, (0..5).map(|i| 1 << i)).unwrap();
        assert_eq!(span_dim(&basis), 5);
        assert_eq!(span_dim(&m4()), 4);
        // odd-weight vectors of F_2^4 sit in an affine hyperplane
        let odd = PointSet::new(4, [1, 2, 4, 7, 8]).unwrap();
        assert_eq!(span_dim(&odd), 4);
        assert_eq!(affine_span_dim(&odd), 3);
    }

    #[test]
    fn identity_and_fold_into_last_coordinate() {
        let id = AffineMap::identity(4).unwrap();
        assert_eq!(apply_affine(&id, &m4()).unwrap(), m4());

        // L_5: e_i -> e_i + e_5 for i <= 4, e_5 -> e_5; translate by e_5.
        let l5 = LinearMap::new(5, vec![1 | 16, 2 | 16, 4 | 16, 8 | 16, 16]).unwrap();
        let t5 = AffineMap::new(l5, 16).unwrap();
        let m5_prime = PointSet::new(5, [0, 1, 2, 4, 8, 16, 31]).unwrap();
        let m5 = PointSet::new(5, [0, 1, 2, 4, 8, 16, 15]).unwrap();
        assert_eq!(apply_affine(&t5, &m5_prime).unwrap(), m5);
    }

    #[test]
    fn singular_map_is_rejected() {
        let l = LinearMap::new(3, vec![1, 2, 3]).unwrap();
        let t = AffineMap::new(l, 0).unwrap();
        let m = PointSet::new(3, [0, 1]).unwrap();
        assert_eq!(
            apply_affine(&t, &m),
            Err(Gf2Error::NonInvertibleMap { dim: 3, rank: 2 })
        );
    }

    #[test]
    fn random_affine_is_deterministic_and_invertible() {
        let a = random_affine(4, 99).unwrap();
        let b = random_affine(4, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.linear().rank(), 4);

        let t = random_affine(6, 7).unwrap();
        let inv = t.inverse().unwrap();
        for v in 0..64 {
            assert_eq!(inv.apply(t.apply(v)), v);
            assert_eq!(t.apply(inv.apply(v)), v);
        }
        assert_eq!(t.compose(&inv), AffineMap::identity(6).unwrap());
    }

    #[test]
    fn basis_images() {
        let from = [3, 1, 4];
        let to = [1, 2, 4];
        let l = LinearMap::from_basis_images(3, &from, &to).unwrap();
        for (f, t) in from.iter().zip(to) {
            assert_eq!(l.apply(*f), t);
        }
    }
}
