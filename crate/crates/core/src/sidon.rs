//! k-sums, the Sidon and sum-free predicates, extension rules and
//! normalization of point sets.
//!
//! For `M ⊆ F_2^t`, `Σk[M]` is the set of sums of `k` elements of `M`
//! (repetition allowed) and `Σk*[M]` the set of sums of `k` pairwise
//! distinct elements. Only `k ∈ {2, 3, 4}` is supported.

use serde::Serialize;
use thiserror::Error;

use crate::gf2core::{
    affine_span_dim, independent_subset, rank, span_dim, AffineMap, GF2Vector, Gf2Error, LinearMap,
    PointSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SidonError {
    #[error("k = {0} is not supported (only 2, 3 and 4)")]
    UnsupportedK(u32),
    #[error("the set is not Sidon")]
    NotSidon,
    #[error("the set is not sum-free Sidon")]
    NotSumFreeSidon,
    #[error("0 is not an element of the set")]
    ZeroNotMember,
    #[error("the set spans an affine subspace of dimension {affine} < {dim}")]
    InsufficientSpan { affine: u32, dim: u32 },
    #[error("the set has {len} elements, at least {needed} are required")]
    TooSmall { len: usize, needed: usize },
    #[error("the set does not contain 0 and the standard basis")]
    BasisNotContained,
    #[error("vector {0} has weight below 2")]
    WeightTooSmall(u32),
    #[error("vector {0} is not an element of the set")]
    NotMember(u32),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// Membership bitmap over all `2^dim` vectors of the space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumBitmap {
    dim: u32,
    words: Vec<u64>,
}

impl SumBitmap {
    pub fn empty(dim: u32) -> Self {
        let bits = 1usize << dim;
        Self {
            dim,
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub fn full(dim: u32) -> Self {
        let mut b = Self::empty(dim);
        b.words.iter_mut().for_each(|w| *w = u64::MAX);
        b.trim();
        b
    }

    pub fn from_set(m: &PointSet) -> Self {
        let mut b = Self::empty(m.dim());
        m.elements().iter().for_each(|&v| b.insert(v));
        b
    }

    fn trim(&mut self) {
        if self.dim < 6 {
            self.words[0] &= (1u64 << (1u32 << self.dim)) - 1;
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Number of vectors in the ambient space.
    pub fn universe(&self) -> usize {
        1usize << self.dim
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        self.words[(v >> 6) as usize] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: u32) {
        self.words[(v >> 6) as usize] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        (v as usize) < self.universe() && self.words[(v >> 6) as usize] >> (v & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn complement(&self) -> Self {
        let mut out = Self {
            dim: self.dim,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &SumBitmap) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &SumBitmap) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersects(&self, other: &SumBitmap) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(((i as u32) << 6) | b)
            })
        })
    }

    pub fn to_point_set(&self) -> PointSet {
        PointSet::new(self.dim, self.iter()).expect("bitmap members are in range")
    }
}

fn check_k(k: u32) -> Result<(), SidonError> {
    if (2..=4).contains(&k) {
        Ok(())
    } else {
        Err(SidonError::UnsupportedK(k))
    }
}

/// `Σk*[M]`: sums of `k` pairwise distinct elements.
pub fn k_star_sums(m: &PointSet, k: u32) -> Result<SumBitmap, SidonError> {
    check_k(k)?;
    let e = m.elements();
    let n = e.len();
    let mut out = SumBitmap::empty(m.dim());
    match k {
        2 => {
            for i in 0..n {
                for j in i + 1..n {
                    out.insert(e[i] ^ e[j]);
                }
            }
        }
        3 => {
            for i in 0..n {
                for j in i + 1..n {
                    let s = e[i] ^ e[j];
                    for &x in &e[j + 1..] {
                        out.insert(s ^ x);
                    }
                }
            }
        }
        _ => {
            for i in 0..n {
                for j in i + 1..n {
                    let s = e[i] ^ e[j];
                    for l in j + 1..n {
                        let s3 = s ^ e[l];
                        for &x in &e[l + 1..] {
                            out.insert(s3 ^ x);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `A + B` for a bitmap `A` and a list `B`.
fn add_set(a: &SumBitmap, b: &[u32]) -> SumBitmap {
    let mut out = SumBitmap::empty(a.dim());
    for s in a.iter() {
        for &x in b {
            out.insert(s ^ x);
        }
    }
    out
}

/// `Σk[M]`: sums of `k` elements, repetition allowed.
pub fn k_sums(m: &PointSet, k: u32) -> Result<SumBitmap, SidonError> {
    check_k(k)?;
    let mut acc = SumBitmap::from_set(m);
    for _ in 1..k {
        acc = add_set(&acc, m.elements());
    }
    Ok(acc)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// True iff no four pairwise distinct elements satisfy `m1+m2 = m3+m4`.
///
/// Checked as `|Σ2*[M]| = C(|M|, 2)`: all pairwise sums are distinct.
pub fn is_sidon(m: &PointSet) -> bool {
    let e = m.elements();
    if e.len() <= 3 {
        return true;
    }
    if binom2(e.len()) >= 1usize << m.dim() {
        return false;
    }
    let mut seen = SumBitmap::empty(m.dim());
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let s = e[i] ^ e[j];
            if seen.contains(s) {
                return false;
            }
            seen.insert(s);
        }
    }
    true
}

/// True iff `m1 + m2 ≠ m3` for all `m1, m2, m3 ∈ M`.
pub fn is_sum_free(m: &PointSet) -> bool {
    if m.contains(0) {
        return false;
    }
    let members = SumBitmap::from_set(m);
    let e = m.elements();
    !(0..e.len()).any(|i| e[i + 1..].iter().any(|&x| members.contains(e[i] ^ x)))
}

/// Vectors `g` for which `M ∪ {g}` is still Sidon and `g ∉ M`: the
/// complement of `Σ3[M]`.
pub fn extension_candidates(m: &PointSet) -> Result<SumBitmap, SidonError> {
    if !is_sidon(m) {
        return Err(SidonError::NotSidon);
    }
    Ok(k_sums(m, 3)?.complement())
}

/// A Sidon set is maximal iff `Σ3[M]` is the whole space.
pub fn is_maximal_sidon(m: &PointSet) -> Result<bool, SidonError> {
    Ok(extension_candidates(m)?.is_empty())
}

/// Summary of the additive structure of a point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SidonReport {
    pub is_sidon: bool,
    pub is_sum_free: bool,
    pub is_maximal_sidon: bool,
    pub two_star_count: usize,
    pub three_sum_count: usize,
    /// Size of `F_2^t ∖ Σ3[M]`.
    pub candidate_count: usize,
}

pub fn report(m: &PointSet) -> SidonReport {
    let sidon = is_sidon(m);
    let three = k_sums(m, 3).expect("k = 3 is supported");
    let candidate_count = three.universe() - three.len();
    SidonReport {
        is_sidon: sidon,
        is_sum_free: is_sum_free(m),
        is_maximal_sidon: sidon && candidate_count == 0,
        two_star_count: k_star_sums(m, 2).expect("k = 2 is supported").len(),
        three_sum_count: three.len(),
        candidate_count,
    }
}

/// How adding a vector to a sum-free Sidon set changes its properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExtensionClass {
    SumFreeSidon,
    SidonNotSumFree,
    NotSidon,
    AlreadyMember,
}

pub fn sum_free_extension_class(m: &PointSet, g: GF2Vector) -> Result<ExtensionClass, SidonError> {
    if g.dim() != m.dim() {
        return Err(Gf2Error::DimMismatch(g.dim(), m.dim()).into());
    }
    if !(is_sum_free(m) && is_sidon(m)) {
        return Err(SidonError::NotSumFreeSidon);
    }
    let g = g.value();
    if m.contains(g) {
        return Ok(ExtensionClass::AlreadyMember);
    }
    if k_sums(m, 3)?.contains(g) {
        return Ok(ExtensionClass::NotSidon);
    }
    // 0 + 0 = 0, so adding 0 always breaks sum-freeness, even for M = {}.
    if g == 0 || k_sums(m, 2)?.contains(g) {
        return Ok(ExtensionClass::SidonNotSumFree);
    }
    Ok(ExtensionClass::SumFreeSidon)
}

/// `M ∖ {0}` for a Sidon set containing 0; the result is sum-free Sidon.
pub fn strip_zero(m: &PointSet) -> Result<PointSet, SidonError> {
    if !m.contains(0) {
        return Err(SidonError::ZeroNotMember);
    }
    if !is_sidon(m) {
        return Err(SidonError::NotSidon);
    }
    Ok(m.without(0))
}

/// Finds an affine permutation `T` with `{0, e_1, ..., e_t} ⊆ T(M)`.
///
/// `min(M)` is translated to 0, then the first `t` independent translated
/// elements (ascending order) are sent to the standard basis. Requires the
/// affine span of `M` to be the whole space.
pub fn normalize(m: &PointSet) -> Result<(AffineMap, PointSet), SidonError> {
    let t = m.dim();
    if m.len() < t as usize + 1 {
        return Err(SidonError::TooSmall {
            len: m.len(),
            needed: t as usize + 1,
        });
    }
    let affine = affine_span_dim(m);
    if affine < t {
        return Err(SidonError::InsufficientSpan { affine, dim: t });
    }
    let m0 = m.elements()[0];
    let translated: Vec<u32> = m.elements().iter().map(|&v| v ^ m0).collect();
    let basis = independent_subset(&translated);
    debug_assert_eq!(basis.len(), t as usize);
    let unit: Vec<u32> = (0..t).map(|i| 1 << i).collect();
    let linear = LinearMap::from_basis_images(t, &basis, &unit)?;
    let translation = linear.apply(m0);
    let map = AffineMap::new(linear, translation)?;
    let image = crate::gf2core::apply_affine(&map, m)?;
    Ok((map, image))
}

/// For `M ⊇ {0, e_1, ..., e_t}` and `m ∈ M` of weight `w ≥ 2`, permutes
/// coordinates so that `e_1 + ... + e_w ∈ T(M)`.
///
/// The support of `m` goes to the first `w` positions, the remaining
/// coordinates follow, both in ascending order.
pub fn normalize_weight(m: &PointSet, v: GF2Vector) -> Result<(AffineMap, PointSet), SidonError> {
    let t = m.dim();
    if v.dim() != t {
        return Err(Gf2Error::DimMismatch(v.dim(), t).into());
    }
    if !PointSet::standard_base(t)?.is_subset_of(m) {
        return Err(SidonError::BasisNotContained);
    }
    if !m.contains(v.value()) {
        return Err(SidonError::NotMember(v.value()));
    }
    if v.weight() < 2 {
        return Err(SidonError::WeightTooSmall(v.value()));
    }
    let bits = v.value();
    let (support, rest): (Vec<u32>, Vec<u32>) = (0..t).partition(|&i| bits >> i & 1 == 1);
    let mut perm = vec![0u32; t as usize];
    for (target, &source) in support.iter().chain(&rest).enumerate() {
        perm[source as usize] = target as u32;
    }
    let map = AffineMap::new(LinearMap::permutation(t, &perm)?, 0)?;
    let image = crate::gf2core::apply_affine(&map, m)?;
    Ok((map, image))
}

/// Whether `Σ4[M]` is the whole space, and whether both `M` and `Σ2*[M]`
/// span it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub covers: bool,
    pub span_full: bool,
}

/// For a Sidon set with `|M| > smax(t-1)` both flags are set; the caller
/// supplies `smax(t-1)` and `implied` reports whether that size condition
/// holds.
pub fn four_sum_coverage(m: &PointSet, smax_prev: usize) -> Result<(Coverage, bool), SidonError> {
    if !is_sidon(m) {
        return Err(SidonError::NotSidon);
    }
    let t = m.dim();
    let covers = !m.is_empty() && k_sums(m, 4)?.is_full();
    let pair_sums: Vec<u32> = k_star_sums(m, 2)?.iter().collect();
    let span_full = span_dim(m) == t && rank(&pair_sums) == t;
    Ok((Coverage { covers, span_full }, m.len() > smax_prev))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(dim: u32, v: &[u32]) -> PointSet {
        PointSet::new(dim, v.iter().copied()).unwrap()
    }

    fn m4() -> PointSet {
        set(4, &[0, 1, 2, 4, 8, 15])
    }

    #[test]
    fn star_sums_examples() {
        let b = k_star_sums(&set(2, &[0, 1, 2]), 2).unwrap();
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(k_star_sums(&m4(), 2).unwrap().len(), 15);
        assert!(k_star_sums(&set(4, &[1, 2]), 3).unwrap().is_empty());
        assert!(k_star_sums(&set(4, &[1, 2, 4]), 4).unwrap().is_empty());
        assert_eq!(k_star_sums(&m4(), 5), Err(SidonError::UnsupportedK(5)));
    }

    #[test]
    fn sums_examples() {
        let b = k_sums(&set(3, &[5]), 2).unwrap();
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0]);
        let b = k_sums(&set(4, &[0, 1, 2, 4]), 3).unwrap();
        assert_eq!(b.iter().collect::<Vec<_>>(), (0..8).collect::<Vec<_>>());
        assert_eq!(k_sums(&m4(), 1), Err(SidonError::UnsupportedK(1)));
        assert!(k_sums(&PointSet::empty(3).unwrap(), 2).unwrap().is_empty());
    }

    #[test]
    fn sidon_examples() {
        assert!(is_sidon(&m4()));
        assert!(!is_sidon(&set(2, &[0, 1, 2, 3])));
        assert!(is_sidon(&set(
            7,
            &[0, 1, 2, 4, 8, 16, 32, 64, 15, 60, 101, 87]
        )));
        assert!(is_sidon(&PointSet::empty(3).unwrap()));
        assert!(is_sidon(&set(2, &[1, 2, 3])));
    }

    #[test]
    fn sum_free_examples() {
        assert!(!is_sum_free(&set(3, &[0, 3])));
        assert!(is_sum_free(&set(3, &[1, 2, 4])));
        let odd = PointSet::new(4, (0..16).filter(|v| v & 1 == 1)).unwrap();
        assert_eq!(odd.len(), 8);
        assert!(is_sum_free(&odd));
        assert!(is_sum_free(&PointSet::empty(2).unwrap()));
        assert!(!is_sum_free(&set(2, &[1, 2, 3])));
    }

    #[test]
    fn candidates() {
        let c = extension_candidates(&set(4, &[0, 1, 2, 4])).unwrap();
        assert_eq!(c.iter().collect::<Vec<_>>(), (8..16).collect::<Vec<_>>());
        assert!(extension_candidates(&m4()).unwrap().is_empty());
        assert!(extension_candidates(&PointSet::empty(3).unwrap())
            .unwrap()
            .is_full());
        assert_eq!(
            extension_candidates(&set(2, &[0, 1, 2, 3])),
            Err(SidonError::NotSidon)
        );
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_sidon(&set(5, &[0, 1, 2, 4, 8, 16, 15])).unwrap());
        assert!(!is_maximal_sidon(&set(4, &[0, 1, 2, 4, 8])).unwrap());
        assert!(is_maximal_sidon(&set(6, &[0, 1, 2, 4, 8, 16, 32, 63])).unwrap());
        assert!(is_maximal_sidon(&set(1, &[0, 1])).unwrap());
        assert!(!is_maximal_sidon(&PointSet::empty(2).unwrap()).unwrap());
    }

    #[test]
    fn report_fields() {
        let r = report(&m4());
        assert!(r.is_sidon && r.is_maximal_sidon && !r.is_sum_free);
        assert_eq!(r.two_star_count, 15);
        assert_eq!(r.three_sum_count, 16);
        assert_eq!(r.candidate_count, 0);
        let r = report(&set(2, &[0, 1, 2, 3]));
        assert!(!r.is_sidon && !r.is_maximal_sidon);
    }

    #[test]
    fn extension_classes() {
        let m = set(3, &[1, 2, 4]);
        let v = |x| GF2Vector::new(x, 3).unwrap();
        assert_eq!(
            sum_free_extension_class(&m, v(0)).unwrap(),
            ExtensionClass::SidonNotSumFree
        );
        assert_eq!(
            sum_free_extension_class(&m, v(7)).unwrap(),
            ExtensionClass::NotSidon
        );
        assert_eq!(
            sum_free_extension_class(&m, v(1)).unwrap(),
            ExtensionClass::AlreadyMember
        );
        let m = set(4, &[1, 2, 4]);
        assert_eq!(
            sum_free_extension_class(&m, GF2Vector::new(8, 4).unwrap()).unwrap(),
            ExtensionClass::SumFreeSidon
        );
        assert_eq!(
            sum_free_extension_class(&m4(), GF2Vector::new(3, 4).unwrap()),
            Err(SidonError::NotSumFreeSidon)
        );
    }

    #[test]
    fn stripping_zero() {
        let s = strip_zero(&m4()).unwrap();
        assert_eq!(s, set(4, &[1, 2, 4, 8, 15]));
        assert!(is_sum_free(&s) && is_sidon(&s));
        assert!(strip_zero(&set(3, &[0])).unwrap().is_empty());
        let s = strip_zero(&set(2, &[0, 1, 2])).unwrap();
        assert!(is_sum_free(&s) && is_sidon(&s));
        assert_eq!(strip_zero(&set(2, &[1, 2])), Err(SidonError::ZeroNotMember));
        assert_eq!(
            strip_zero(&set(2, &[0, 1, 2, 3])),
            Err(SidonError::NotSidon)
        );
    }

    #[test]
    fn normalize_examples() {
        let base = PointSet::standard_base(4).unwrap();
        let (_, image) = normalize(&m4()).unwrap();
        assert!(base.is_subset_of(&image));
        assert_eq!(image, m4());

        let m = set(4, &[1, 2, 4, 8, 15]);
        let (map, image) = normalize(&m).unwrap();
        assert!(base.is_subset_of(&image));
        assert_eq!(crate::gf2core::apply_affine(&map, &m).unwrap(), image);

        // all odd weight: affinely a hyperplane, cannot be normalized
        assert_eq!(
            normalize(&set(4, &[1, 2, 4, 7, 8])),
            Err(SidonError::InsufficientSpan { affine: 3, dim: 4 })
        );
        assert!(matches!(
            normalize(&set(4, &[0, 1, 2, 4])),
            Err(SidonError::TooSmall { .. })
        ));
    }

    #[test]
    fn normalize_weight_examples() {
        let m = set(5, &[0, 1, 2, 4, 8, 16, 3]);
        let (map, image) = normalize_weight(&m, GF2Vector::new(3, 5).unwrap()).unwrap();
        assert_eq!(map, AffineMap::identity(5).unwrap());
        assert_eq!(image, m);

        let m = set(5, &[0, 1, 2, 4, 8, 16, 22]);
        let (_, image) = normalize_weight(&m, GF2Vector::new(22, 5).unwrap()).unwrap();
        assert!(image.contains(7));
        assert!(PointSet::standard_base(5).unwrap().is_subset_of(&image));

        assert_eq!(
            normalize_weight(&m, GF2Vector::new(4, 5).unwrap()),
            Err(SidonError::WeightTooSmall(4))
        );
        assert_eq!(
            normalize_weight(&set(5, &[0, 1, 2, 22]), GF2Vector::new(22, 5).unwrap()),
            Err(SidonError::BasisNotContained)
        );
    }

    #[test]
    fn coverage_examples() {
        let (c, implied) = four_sum_coverage(&m4(), 4).unwrap();
        assert!(implied);
        assert_eq!(
            c,
            Coverage {
                covers: true,
                span_full: true
            }
        );
        let (c, implied) = four_sum_coverage(&PointSet::standard_base(5).unwrap(), 7).unwrap();
        assert!(!implied);
        assert!(!c.covers);
        let (c, _) = four_sum_coverage(&PointSet::empty(3).unwrap(), 2).unwrap();
        assert_eq!(
            c,
            Coverage {
                covers: false,
                span_full: false
            }
        );
    }

    #[test]
    fn bitmap_basics() {
        let mut b = SumBitmap::empty(3);
        assert_eq!(b.universe(), 8);
        b.insert(5);
        assert!(b.contains(5) && !b.contains(4) && !b.contains(100));
        assert_eq!(b.complement().len(), 7);
        assert!(SumBitmap::full(2).is_full());
        assert_eq!(SumBitmap::full(7).len(), 128);
        b.remove(5);
        assert!(b.is_empty());
    }
}
