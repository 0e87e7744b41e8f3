//! Exhaustive enumeration of maximal Sidon sets.
//!
//! Every maximal Sidon set is affinely equivalent to one containing
//! `{0, e_1, ..., e_t}`, so the search starts from that base and extends it
//! one candidate at a time. A vector `g ∉ Σ3[M]` keeps `M ∪ {g}` Sidon, and
//! `M` is maximal exactly when `Σ3[M]` is the whole space.
//!
//! Added elements are strictly increasing along every branch, so each set
//! is produced once. `Σ3` is kept as one bitmap per stack frame and updated
//! incrementally:
//!
//! ```text
//! Σ3[M ∪ {g}] = Σ3[M] ∪ {g} ∪ (g + Σ2*[M])
//! ```
//!
//! The tree is cut at a fixed depth into independent subtasks, which are
//! run by a small worker pool and merged in task order, so the output does
//! not depend on the number of workers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::gf2core::{
    affine_span_dim, independent_subset, mask, weight, AffineMap, GF2Vector, Gf2Error, LinearMap,
    PointSet, MAX_DIM,
};
use crate::sidon::{self, SumBitmap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("dimension {dim} exceeds the limit {limit} for this operation")]
    DimensionTooLarge { dim: u32, limit: u32 },
    #[error("weight classes are only defined for dimension 8, not {0}")]
    UnsupportedDim(u32),
    #[error("unknown weight class {0:?} (expected W4..W8)")]
    UnknownClass(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(u32, u32),
    #[error("the base set is not Sidon")]
    BaseNotSidon,
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

/// Subtask of the dimension-8 search, keyed by the largest weight in `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WeightClass {
    W4,
    W5,
    W6,
    W7,
    W8,
}

impl WeightClass {
    pub const ALL: [WeightClass; 5] = [Self::W4, Self::W5, Self::W6, Self::W7, Self::W8];

    pub fn max_weight(self) -> u32 {
        match self {
            Self::W4 => 4,
            Self::W5 => 5,
            Self::W6 => 6,
            Self::W7 => 7,
            Self::W8 => 8,
        }
    }
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}", self.max_weight())
    }
}

impl FromStr for WeightClass {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "W4" => Ok(Self::W4),
            "W5" => Ok(Self::W5),
            "W6" => Ok(Self::W6),
            "W7" => Ok(Self::W7),
            "W8" => Ok(Self::W8),
            _ => Err(EnumError::UnknownClass(s.to_string())),
        }
    }
}

/// Anchor element `e_1 + ... + e_w` and the weight limit on all other
/// elements for a dimension-8 subtask.
pub fn weight_class_constraints(
    dim: u32,
    class: WeightClass,
) -> Result<(GF2Vector, u32), EnumError> {
    if dim != 8 {
        return Err(EnumError::UnsupportedDim(dim));
    }
    let w = class.max_weight();
    let others = match class {
        WeightClass::W4 => 4,
        WeightClass::W5 => 5,
        WeightClass::W6 => 6,
        WeightClass::W7 => 6,
        WeightClass::W8 => 5,
    };
    Ok((GF2Vector::new(mask(w), dim)?, others))
}

/// Root of a search: the base set and which vectors may be added to it.
#[derive(Debug, Clone)]
pub struct EnumTask {
    pub dim: u32,
    pub base: PointSet,
    pub weight_class: Option<WeightClass>,
    /// Vectors that may still be added.
    pub candidate_mask: SumBitmap,
    /// Current partial set; equals `base` for a fresh task.
    pub prefix: PointSet,
}

impl EnumTask {
    pub fn new(dim: u32, weight_class: Option<WeightClass>) -> Result<Self, EnumError> {
        if dim > MAX_DIM {
            return Err(EnumError::DimensionTooLarge {
                dim,
                limit: MAX_DIM,
            });
        }
        let mut base = PointSet::standard_base(dim)?;
        let mut allowed = SumBitmap::full(dim);
        if let Some(class) = weight_class {
            let (anchor, max_other) = weight_class_constraints(dim, class)?;
            base = base.with(anchor.value())?;
            for v in 0..=mask(dim) {
                if weight(v) > max_other {
                    allowed.remove(v);
                }
            }
        }
        Self::with_base(base, weight_class, allowed)
    }

    /// A task rooted at an arbitrary Sidon base.
    pub fn with_base(
        base: PointSet,
        weight_class: Option<WeightClass>,
        allowed: SumBitmap,
    ) -> Result<Self, EnumError> {
        if !sidon::is_sidon(&base) {
            return Err(EnumError::BaseNotSidon);
        }
        let three = sidon::k_sums(&base, 3).expect("k = 3 is supported");
        let mut candidate_mask = allowed;
        for v in three.iter() {
            candidate_mask.remove(v);
        }
        Ok(Self {
            dim: base.dim(),
            prefix: base.clone(),
            base,
            weight_class,
            candidate_mask,
        })
    }
}

#[derive(Debug, Clone)]
pub struct EnumOptions {
    pub weight_class: Option<WeightClass>,
    /// Keep every maximal set found (in memory when no sink is given).
    pub stream_witnesses: bool,
    pub workers: usize,
    /// Depth below the base at which the tree is cut into subtasks.
    pub split_depth: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            weight_class: None,
            stream_witnesses: false,
            workers: 1,
            split_depth: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumResult {
    /// Size of a maximal set -> number of maximal sets of that size
    /// containing the base.
    pub size_histogram: BTreeMap<usize, u64>,
    /// Same sizes, counting every order in which the non-base elements can
    /// be added: `count * (size - |base|)!`. This is what a search without
    /// the increasing-order rule reports as its number of leaves.
    pub ordered_histogram: BTreeMap<usize, u128>,
    /// Lexicographically smallest maximal set of each size.
    pub examples_per_size: BTreeMap<usize, PointSet>,
    pub nodes_visited: u64,
    /// Every maximal set, when `stream_witnesses` is set and no sink was
    /// supplied.
    #[serde(skip)]
    pub witnesses: Vec<PointSet>,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Default)]
struct TaskOut {
    histogram: BTreeMap<usize, u64>,
    examples: BTreeMap<usize, PointSet>,
    nodes: u64,
    witnesses: Vec<PointSet>,
}

impl TaskOut {
    fn merge_counts(&mut self, other: &TaskOut) {
        for (&k, &v) in &other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        for (k, set) in &other.examples {
            keep_smallest(&mut self.examples, *k, set);
        }
        self.nodes += other.nodes;
    }
}

fn keep_smallest(examples: &mut BTreeMap<usize, PointSet>, size: usize, set: &PointSet) {
    match examples.get(&size) {
        Some(current) if current.elements() <= set.elements() => {}
        _ => {
            examples.insert(size, set.clone());
        }
    }
}

/// A subtree root: the set in insertion order and the last added element.
#[derive(Clone)]
struct Subtree {
    elements: Vec<u32>,
    last: Option<u32>,
}

struct Engine<'a> {
    dim: u32,
    words: usize,
    allowed: &'a [u64],
    full: Vec<u64>,
    keep_witnesses: bool,
}

impl<'a> Engine<'a> {
    fn new(dim: u32, allowed: &'a SumBitmap, keep_witnesses: bool) -> Self {
        let full = SumBitmap::full(dim);
        Self {
            dim,
            words: full_words(&full).len(),
            allowed: full_words(allowed),
            full: full_words(&full).to_vec(),
            keep_witnesses,
        }
    }

    fn record(&self, elements: &[u32], out: &mut TaskOut) {
        let set =
            PointSet::new(self.dim, elements.iter().copied()).expect("search keeps sets valid");
        *out.histogram.entry(set.len()).or_default() += 1;
        keep_smallest(&mut out.examples, set.len(), &set);
        if self.keep_witnesses {
            out.witnesses.push(set);
        }
    }

    /// First vector `>= from` that is allowed and outside `frame`.
    #[inline]
    fn next_candidate(&self, frame: &[u64], from: u32) -> Option<u32> {
        let mut w = (from >> 6) as usize;
        if w >= self.words {
            return None;
        }
        let mut bits = !frame[w] & self.allowed[w] & (u64::MAX << (from & 63));
        loop {
            if bits != 0 {
                return Some(((w as u32) << 6) | bits.trailing_zeros());
            }
            w += 1;
            if w >= self.words {
                return None;
            }
            bits = !frame[w] & self.allowed[w];
        }
    }

    /// Depth-first search below `root`. With `cut = Some(d)`, nodes at depth
    /// `d` that are not leaves are handed back as subtrees instead.
    fn run(&self, root: &Subtree, cut: Option<usize>, out: &mut TaskOut, split: &mut Vec<Subtree>) {
        let words = self.words;
        let mut elements = root.elements.clone();
        let mut pair_sums: Vec<u32> = Vec::new();
        let mut frames: Vec<u64> = vec![0; words];
        {
            let frame = &mut frames[..words];
            for (i, &a) in elements.iter().enumerate() {
                set_bit(frame, a);
                for &b in &elements[..i] {
                    pair_sums.push(a ^ b);
                }
            }
            for &s in &pair_sums {
                for &c in &elements {
                    set_bit(frame, s ^ c);
                }
            }
        }
        let root_len = elements.len();
        out.nodes += 1;
        if frames[..words] == self.full[..] {
            self.record(&elements, out);
            return;
        }
        if cut == Some(0) {
            out.nodes -= 1;
            split.push(root.clone());
            return;
        }
        // cursor[d]: next vector to try at depth d
        let mut cursor: Vec<u32> = vec![root.last.map_or(0, |l| l + 1)];
        loop {
            let depth = cursor.len() - 1;
            let frame_start = depth * words;
            let next =
                self.next_candidate(&frames[frame_start..frame_start + words], cursor[depth]);
            let Some(g) = next else {
                cursor.pop();
                if cursor.is_empty() {
                    break;
                }
                elements.pop();
                pair_sums.truncate(pair_sums.len() - elements.len());
                frames.truncate(frame_start);
                continue;
            };
            cursor[depth] = g + 1;
            out.nodes += 1;
            frames.extend_from_within(frame_start..frame_start + words);
            let child = &mut frames[frame_start + words..];
            set_bit(child, g);
            for &s in &pair_sums {
                set_bit(child, g ^ s);
            }
            if child[..] == self.full[..] {
                elements.push(g);
                self.record(&elements, out);
                elements.pop();
                frames.truncate(frame_start + words);
                continue;
            }
            if cut == Some(depth + 1) {
                out.nodes -= 1;
                elements.push(g);
                split.push(Subtree {
                    elements: elements.clone(),
                    last: Some(g),
                });
                elements.pop();
                frames.truncate(frame_start + words);
                continue;
            }
            for &m in &elements {
                pair_sums.push(g ^ m);
            }
            elements.push(g);
            cursor.push(g + 1);
        }
        debug_assert_eq!(elements.len(), root_len);
    }
}

#[inline]
fn set_bit(frame: &mut [u64], v: u32) {
    frame[(v >> 6) as usize] |= 1u64 << (v & 63);
}

fn full_words(b: &SumBitmap) -> &[u64] {
    b.words()
}

/// Enumerates every maximal Sidon set containing `{0, e_1, ..., e_t}` (plus
/// the weight-class anchor, if any).
pub fn enumerate_maximal(dim: u32, options: &EnumOptions) -> Result<EnumResult, EnumError> {
    enumerate_task(&EnumTask::new(dim, options.weight_class)?, options, None)
}

/// Like [`enumerate_maximal`] but hands every maximal set to `sink` in a
/// deterministic order instead of keeping them.
pub fn enumerate_maximal_streaming(
    dim: u32,
    options: &EnumOptions,
    sink: &mut dyn FnMut(&PointSet),
) -> Result<EnumResult, EnumError> {
    let opts = EnumOptions {
        stream_witnesses: true,
        ..options.clone()
    };
    enumerate_task(
        &EnumTask::new(dim, options.weight_class)?,
        &opts,
        Some(sink),
    )
}

pub fn enumerate_task(
    task: &EnumTask,
    options: &EnumOptions,
    mut sink: Option<&mut dyn FnMut(&PointSet)>,
) -> Result<EnumResult, EnumError> {
    let start = Instant::now();
    let keep = options.stream_witnesses;
    let engine = Engine::new(task.dim, &task.candidate_mask, keep);

    let added: Vec<u32> = task
        .prefix
        .elements()
        .iter()
        .copied()
        .filter(|v| !task.base.contains(*v))
        .collect();
    let mut elements = task.base.elements().to_vec();
    elements.extend(&added);
    let root = Subtree {
        elements,
        last: added.last().copied(),
    };

    let mut total = TaskOut::default();
    let mut subtrees = Vec::new();
    engine.run(&root, Some(options.split_depth), &mut total, &mut subtrees);
    let mut witnesses = Vec::new();
    emit(&mut total.witnesses, &mut sink, &mut witnesses);

    let workers = options.workers.max(1).min(subtrees.len().max(1));
    if workers == 1 {
        for sub in &subtrees {
            let mut out = TaskOut::default();
            engine.run(sub, None, &mut out, &mut Vec::new());
            total.merge_counts(&out);
            emit(&mut out.witnesses, &mut sink, &mut witnesses);
        }
    } else {
        let next = AtomicUsize::new(0);
        let (tx, rx) = mpsc::channel::<(usize, TaskOut)>();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                let tx = tx.clone();
                let (next, engine, subtrees) = (&next, &engine, &subtrees);
                scope.spawn(move || loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(sub) = subtrees.get(i) else { break };
                    let mut out = TaskOut::default();
                    engine.run(sub, None, &mut out, &mut Vec::new());
                    if tx.send((i, out)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            // Re-order results so merging and streaming follow task order.
            let mut pending: HashMap<usize, TaskOut> = HashMap::new();
            let mut expected = 0;
            for (i, out) in rx {
                pending.insert(i, out);
                while let Some(mut out) = pending.remove(&expected) {
                    total.merge_counts(&out);
                    emit(&mut out.witnesses, &mut sink, &mut witnesses);
                    expected += 1;
                }
            }
        });
    }

    let root_len = root.elements.len();
    let ordered_histogram = total
        .histogram
        .iter()
        .map(|(&size, &count)| (size, count as u128 * factorial(size - root_len)))
        .collect();
    Ok(EnumResult {
        ordered_histogram,
        size_histogram: total.histogram,
        examples_per_size: total.examples,
        nodes_visited: total.nodes,
        witnesses,
        wall_time: start.elapsed(),
    })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn emit(
    found: &mut Vec<PointSet>,
    sink: &mut Option<&mut dyn FnMut(&PointSet)>,
    kept: &mut Vec<PointSet>,
) {
    match sink {
        Some(f) => found.drain(..).for_each(|s| f(&s)),
        None => kept.append(found),
    }
}

/// Largest dimension for which [`smax_search`] is offered.
pub const SMAX_SEARCH_LIMIT: u32 = 7;

/// Maximum size of a Sidon set in `F_2^t`, by exhaustive search.
pub fn smax_search(dim: u32) -> Result<usize, EnumError> {
    if dim > SMAX_SEARCH_LIMIT {
        return Err(EnumError::DimensionTooLarge {
            dim,
            limit: SMAX_SEARCH_LIMIT,
        });
    }
    let result = enumerate_maximal(dim, &EnumOptions::default())?;
    Ok(result
        .size_histogram
        .keys()
        .next_back()
        .copied()
        .expect("the base extends to at least one maximal set"))
}

/// Largest dimension for which [`affine_equivalent`] is offered.
pub const EQUIVALENCE_LIMIT: u32 = 6;

fn invariants(m: &PointSet) -> [usize; 4] {
    [
        affine_span_dim(m) as usize,
        sidon::k_star_sums(m, 2).expect("k = 2").len(),
        sidon::k_sums(m, 3).expect("k = 3").len(),
        sidon::k_sums(m, 4).expect("k = 4").len(),
    ]
}

/// Searches for an affine permutation `T` with `T(m1) = m2`.
///
/// Fixes `m0 = min(m1)` and an affine basis of `m1` through it, then
/// backtracks over the images of those points in `m2`. Every other element
/// of `m1` is determined as soon as the basis points spanning it are placed,
/// and must land in `m2`.
pub fn affine_equivalent(m1: &PointSet, m2: &PointSet) -> Result<Option<AffineMap>, EnumError> {
    let t = m1.dim();
    if t != m2.dim() {
        return Err(EnumError::DimMismatch(t, m2.dim()));
    }
    if t > EQUIVALENCE_LIMIT {
        return Err(EnumError::DimensionTooLarge {
            dim: t,
            limit: EQUIVALENCE_LIMIT,
        });
    }
    if m1.len() != m2.len() {
        return Ok(None);
    }
    if m1.is_empty() {
        return Ok(Some(AffineMap::identity(t)?));
    }
    if invariants(m1) != invariants(m2) {
        return Ok(None);
    }

    let m0 = m1.elements()[0];
    let diffs: Vec<u32> = m1.elements().iter().map(|&x| x ^ m0).collect();
    let basis = independent_subset(&diffs);
    let r = basis.len();

    // Coordinates of every span element in terms of `basis`.
    let mut coords: HashMap<u32, u32> = HashMap::new();
    for c in 0u32..(1 << r) {
        let v = (0..r)
            .filter(|&i| c >> i & 1 == 1)
            .fold(0, |acc, i| acc ^ basis[i]);
        coords.insert(v, c);
    }
    // Elements of m1 grouped by the basis index that completes them.
    let mut checks: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for &d in &diffs {
        let c = coords[&d];
        let level = if c == 0 {
            0
        } else {
            32 - c.leading_zeros() as usize
        };
        checks[level].push(c);
    }

    let target = SumBitmap::from_set(m2);
    let mut images = vec![0u32; r];
    for &y0 in m2.elements() {
        if search_images(0, y0, &mut images, &checks, &target, m2) {
            let unit: Vec<u32> = (0..t).map(|i| 1 << i).collect();
            let mut from = basis.clone();
            from.extend(unit.iter().copied());
            let from = independent_subset(&from);
            let mut to = images.clone();
            to.extend(unit.iter().copied());
            let to = independent_subset(&to);
            let linear = LinearMap::from_basis_images(t, &from, &to)?;
            let map = AffineMap::new(linear.clone(), linear.apply(m0) ^ y0)?;
            debug_assert_eq!(crate::gf2core::apply_affine(&map, m1).as_ref(), Ok(m2));
            return Ok(Some(map));
        }
    }
    Ok(None)
}

fn search_images(
    level: usize,
    y0: u32,
    images: &mut [u32],
    checks: &[Vec<u32>],
    target: &SumBitmap,
    m2: &PointSet,
) -> bool {
    let image_of = |c: u32, images: &[u32]| {
        (0..images.len())
            .filter(|&i| c >> i & 1 == 1)
            .fold(y0, |acc, i| acc ^ images[i])
    };
    if !checks[level]
        .iter()
        .all(|&c| target.contains(image_of(c, images)))
    {
        return false;
    }
    if level == images.len() {
        return true;
    }
    for &y in m2.elements() {
        let d = y ^ y0;
        let mut span: Vec<u32> = images[..level].to_vec();
        span.push(d);
        if crate::gf2core::rank(&span) as usize != level + 1 {
            continue;
        }
        images[level] = d;
        if search_images(level + 1, y0, images, checks, target, m2) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(dim: u32, v: &[u32]) -> PointSet {
        PointSet::new(dim, v.iter().copied()).unwrap()
    }

    fn hist(dim: u32) -> BTreeMap<usize, u64> {
        enumerate_maximal(dim, &EnumOptions::default())
            .unwrap()
            .size_histogram
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(hist(1), BTreeMap::from([(2, 1)]));
        assert_eq!(hist(2), BTreeMap::from([(3, 1)]));
        assert_eq!(hist(3), BTreeMap::from([(4, 1)]));
        assert_eq!(hist(4), BTreeMap::from([(6, 1)]));
        let h5 = hist(5);
        assert_eq!(h5.keys().copied().collect::<Vec<_>>(), vec![7]);
        let h6 = hist(6);
        assert_eq!(h6.keys().copied().collect::<Vec<_>>(), vec![8, 9]);
    }

    #[test]
    fn witnesses_are_maximal_and_complete() {
        let opts = EnumOptions {
            stream_witnesses: true,
            ..Default::default()
        };
        let r = enumerate_maximal(6, &opts).unwrap();
        let total: u64 = r.size_histogram.values().sum();
        assert_eq!(r.witnesses.len() as u64, total);
        for w in &r.witnesses {
            assert!(sidon::is_maximal_sidon(w).unwrap());
            assert!(PointSet::standard_base(6).unwrap().is_subset_of(w));
        }
        for (size, ex) in &r.examples_per_size {
            assert_eq!(ex.len(), *size);
            let smallest = r
                .witnesses
                .iter()
                .filter(|w| w.len() == *size)
                .min()
                .unwrap();
            assert_eq!(smallest.elements(), ex.elements());
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let run = |workers, split_depth| {
            let opts = EnumOptions {
                stream_witnesses: true,
                workers,
                split_depth,
                ..Default::default()
            };
            enumerate_maximal(6, &opts).unwrap()
        };
        let a = run(1, 2);
        let b = run(4, 2);
        let c = run(3, 1);
        assert_eq!(a.size_histogram, b.size_histogram);
        assert_eq!(a.examples_per_size, b.examples_per_size);
        assert_eq!(a.nodes_visited, b.nodes_visited);
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.size_histogram, c.size_histogram);
        assert_eq!(a.nodes_visited, c.nodes_visited);
    }

    #[test]
    fn streaming_matches_collected() {
        let mut streamed = Vec::new();
        let opts = EnumOptions {
            workers: 2,
            ..Default::default()
        };
        let r = enumerate_maximal_streaming(5, &opts, &mut |s| streamed.push(s.clone())).unwrap();
        assert!(r.witnesses.is_empty());
        let collected = enumerate_maximal(
            5,
            &EnumOptions {
                stream_witnesses: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(streamed, collected.witnesses);
    }

    #[test]
    fn weight_classes() {
        let c = |w| weight_class_constraints(8, w).unwrap();
        assert_eq!(c(WeightClass::W4), (GF2Vector::new(15, 8).unwrap(), 4));
        assert_eq!(c(WeightClass::W5), (GF2Vector::new(31, 8).unwrap(), 5));
        assert_eq!(c(WeightClass::W6), (GF2Vector::new(63, 8).unwrap(), 6));
        assert_eq!(c(WeightClass::W7), (GF2Vector::new(127, 8).unwrap(), 6));
        assert_eq!(c(WeightClass::W8), (GF2Vector::new(255, 8).unwrap(), 5));
        assert_eq!(
            weight_class_constraints(7, WeightClass::W4),
            Err(EnumError::UnsupportedDim(7))
        );
        assert_eq!("w7".parse::<WeightClass>().unwrap(), WeightClass::W7);
        assert!(matches!(
            "W9".parse::<WeightClass>(),
            Err(EnumError::UnknownClass(_))
        ));
    }

    #[test]
    fn weight_class_task_masks_heavy_candidates() {
        let task = EnumTask::new(8, Some(WeightClass::W8)).unwrap();
        assert!(task.base.contains(255));
        assert!(task.candidate_mask.iter().all(|v| weight(v) <= 5));
        assert!(task
            .candidate_mask
            .iter()
            .all(|v| !sidon::k_sums(&task.base, 3).unwrap().contains(v)));
    }

    #[test]
    fn dimension_limits() {
        assert!(matches!(
            enumerate_maximal(29, &EnumOptions::default()),
            Err(EnumError::DimensionTooLarge { .. })
        ));
        assert!(matches!(
            smax_search(8),
            Err(EnumError::DimensionTooLarge { .. })
        ));
        let big = PointSet::standard_base(7).unwrap();
        assert!(matches!(
            affine_equivalent(&big, &big),
            Err(EnumError::DimensionTooLarge { .. })
        ));
        assert_eq!(
            affine_equivalent(&set(3, &[0]), &set(4, &[0])),
            Err(EnumError::DimMismatch(3, 4))
        );
    }

    #[test]
    fn smax_small() {
        assert_eq!(smax_search(4).unwrap(), 6);
        assert_eq!(smax_search(6).unwrap(), 9);
    }

    #[test]
    fn equivalence_examples() {
        let m5p = set(5, &[0, 1, 2, 4, 8, 16, 31]);
        let m5 = set(5, &[0, 1, 2, 4, 8, 16, 15]);
        let t = affine_equivalent(&m5p, &m5).unwrap().unwrap();
        assert_eq!(crate::gf2core::apply_affine(&t, &m5p).unwrap(), m5);

        let m6a = set(6, &[0, 1, 2, 4, 8, 16, 32, 15, 51]);
        let m6b = set(6, &[0, 1, 2, 4, 8, 16, 32, 63]);
        assert_eq!(affine_equivalent(&m6a, &m6b).unwrap(), None);

        let m4 = set(4, &[0, 1, 2, 4, 8, 15]);
        for seed in 0..20 {
            let image =
                crate::gf2core::apply_affine(&crate::gf2core::random_affine(4, seed).unwrap(), &m4)
                    .unwrap();
            let t = affine_equivalent(&m4, &image).unwrap().unwrap();
            assert_eq!(crate::gf2core::apply_affine(&t, &m4).unwrap(), image);
        }
    }

    #[test]
    fn inequivalent_same_size() {
        // a Sidon set vs. a set with a repeated pair sum
        let a = set(4, &[0, 1, 2, 4, 8]);
        let b = set(4, &[0, 1, 2, 3, 4]);
        assert_eq!(affine_equivalent(&a, &b).unwrap(), None);
    }
}
