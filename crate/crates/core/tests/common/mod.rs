//! Brute-force oracles shared by the integration tests and the acceptance
//! runner. They work on plain `u32` slices and never call the library's
//! sum machinery, so they can check it independently.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;

/// Membership table of every sum of `k` elements of `m ⊆ F_2^dim`;
/// `distinct` restricts to pairwise-distinct positions.
pub fn sums(dim: u32, m: &[u32], k: usize, distinct: bool) -> Vec<bool> {
    fn go(m: &[u32], k: usize, start: usize, distinct: bool, acc: u32, out: &mut [bool]) {
        if k == 0 {
            out[acc as usize] = true;
            return;
        }
        for i in start..m.len() {
            let next = if distinct { i + 1 } else { i };
            go(m, k - 1, next, distinct, acc ^ m[i], out);
        }
    }
    let mut out = vec![false; 1 << dim];
    go(m, k, 0, distinct, 0, &mut out);
    out
}

pub fn sum_set(dim: u32, m: &[u32], k: usize, distinct: bool) -> Vec<u32> {
    let table = sums(dim, m, k, distinct);
    (0..1u32 << dim).filter(|&v| table[v as usize]).collect()
}

/// No four pairwise-distinct elements with `a + b = c + d`.
pub fn is_sidon(m: &[u32]) -> bool {
    let n = m.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                for d in c + 1..n {
                    if [c, d].iter().any(|x| *x == a || *x == b) {
                        continue;
                    }
                    if m[a] ^ m[b] == m[c] ^ m[d] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// No `a + b = c` with `a, b, c ∈ M` (repetitions allowed).
pub fn is_sum_free(m: &[u32]) -> bool {
    m.iter().all(|&a| m.iter().all(|&b| !m.contains(&(a ^ b))))
}

/// Sidon, and every vector outside `M` breaks the property.
pub fn is_maximal_sidon(dim: u32, m: &[u32]) -> bool {
    if !is_sidon(m) {
        return false;
    }
    (0..1u32 << dim).filter(|g| !m.contains(g)).all(|g| {
        let mut bigger = m.to_vec();
        bigger.push(g);
        !is_sidon(&bigger)
    })
}

/// Minimum weight of a nonzero vector `x ∈ F_2^n` with `Σ x_i·cols[i] = 0`,
/// by a Gray-code walk over all `2^n` words.
pub fn min_distance(cols: &[u32]) -> Option<u32> {
    let n = cols.len();
    let mut syndrome = 0u32;
    let mut word = 0u64;
    let mut best: Option<u32> = None;
    for step in 1u64..1 << n {
        let bit = step.trailing_zeros() as usize;
        word ^= 1 << bit;
        syndrome ^= cols[bit];
        if syndrome == 0 {
            let w = word.count_ones();
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    best
}

/// Largest over all syndromes of the fewest columns summing to it; `None`
/// if some syndrome is unreachable.
pub fn covering_radius(dim: u32, cols: &[u32]) -> Option<u32> {
    let n = cols.len();
    let mut fewest = vec![u32::MAX; 1 << dim];
    fewest[0] = 0;
    let mut syndrome = 0u32;
    let mut word = 0u64;
    for step in 1u64..1 << n {
        let bit = step.trailing_zeros() as usize;
        word ^= 1 << bit;
        syndrome ^= cols[bit];
        let w = word.count_ones();
        let slot = &mut fewest[syndrome as usize];
        *slot = (*slot).min(w);
    }
    let worst = *fewest.iter().max().unwrap();
    (worst != u32::MAX).then_some(worst)
}

fn base(dim: u32) -> Vec<u32> {
    std::iter::once(0).chain((0..dim).map(|i| 1 << i)).collect()
}

/// Histogram of maximal Sidon sets containing `{0, e_1..e_t}`, by trying
/// every subset of the remaining vectors.
pub fn all_subsets_histogram(dim: u32) -> BTreeMap<usize, u64> {
    let base = base(dim);
    let rest: Vec<u32> = (0..1u32 << dim).filter(|v| !base.contains(v)).collect();
    assert!(rest.len() <= 20, "too many subsets");
    let mut hist = BTreeMap::new();
    for pick in 0u32..1 << rest.len() {
        let mut m = base.clone();
        m.extend(
            (0..rest.len())
                .filter(|&i| pick >> i & 1 == 1)
                .map(|i| rest[i]),
        );
        if is_maximal_sidon(dim, &m) {
            *hist.entry(m.len()).or_default() += 1;
        }
    }
    hist
}

/// Number of ordered extension sequences from `{0, e_1..e_t}` that end in
/// a maximal Sidon set (each set counted once per insertion order).
pub fn ordered_leaf_count(dim: u32) -> u64 {
    fn dfs(dim: u32, m: &mut Vec<u32>, leaves: &mut u64) {
        let three = sums(dim, m, 3, false);
        let candidates: Vec<u32> = (0..1u32 << dim).filter(|&g| !three[g as usize]).collect();
        if candidates.is_empty() {
            *leaves += 1;
            return;
        }
        for g in candidates {
            m.push(g);
            dfs(dim, m, leaves);
            m.pop();
        }
    }
    let mut leaves = 0;
    dfs(dim, &mut base(dim), &mut leaves);
    leaves
}

/// Largest sum-free Sidon set containing `{e_1..e_t}`, extending only by
/// vectors outside `Σ2[M] ∪ Σ3[M]` in increasing order.
pub fn sfsmax(dim: u32) -> usize {
    fn dfs(dim: u32, m: &mut Vec<u32>, from: u32, best: &mut usize) {
        *best = (*best).max(m.len());
        let two = sums(dim, m, 2, false);
        let three = sums(dim, m, 3, false);
        for g in from..1u32 << dim {
            if !two[g as usize] && !three[g as usize] {
                m.push(g);
                dfs(dim, m, g + 1, best);
                m.pop();
            }
        }
    }
    let mut m: Vec<u32> = (0..dim).map(|i| 1 << i).collect();
    let mut best = 0;
    dfs(dim, &mut m, 1, &mut best);
    best
}

/// Distinct nonzero vectors of `F_2^dim`, at most `max_len` of them.
pub fn random_nonzero_set(rng: &mut impl Rng, dim: u32, max_len: usize) -> Vec<u32> {
    let len = rng.gen_range(0..=max_len.min((1 << dim) - 1));
    let mut out: Vec<u32> = rand::seq::index::sample(rng, (1 << dim) - 1, len)
        .into_iter()
        .map(|i| i as u32 + 1)
        .collect();
    out.sort_unstable();
    out
}
