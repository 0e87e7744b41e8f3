//! Named maximal Sidon sets: the canonical sets of dimension 1 to 6 and
//! published examples in dimensions 7 and 8.

use crate::gf2core::PointSet;

/// A named set together with the dimension of its ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSet {
    pub name: String,
    pub set: PointSet,
}

fn base_with(dim: u32, extra: &[u32]) -> PointSet {
    let base = (0..dim).map(|i| 1u32 << i);
    PointSet::new(
        dim,
        std::iter::once(0).chain(base).chain(extra.iter().copied()),
    )
    .expect("catalog sets are valid")
}

fn e(i: u32) -> u32 {
    1 << (i - 1)
}

/// `M_1, ..., M_5, M_6a, M_6b`: every maximal Sidon set of dimension
/// `t ≤ 6` is affinely equivalent to exactly one of these.
pub fn canonical_sets() -> Vec<NamedSet> {
    let named = |name: &str, set| NamedSet {
        name: name.to_string(),
        set,
    };
    vec![
        named("M1", base_with(1, &[])),
        named("M2", base_with(2, &[])),
        named("M3", base_with(3, &[])),
        named("M4", base_with(4, &[15])),
        named("M5", base_with(5, &[15])),
        named("M6a", base_with(6, &[15, 51])),
        named("M6b", base_with(6, &[63])),
    ]
}

/// The canonical set of dimension `t` with a given name, if any.
pub fn canonical(name: &str) -> Option<PointSet> {
    canonical_sets()
        .into_iter()
        .find(|n| n.name == name)
        .map(|n| n.set)
}

/// `M'_5 = {0, e_1..e_5, e_1+...+e_5}`, equivalent to `M_5`.
pub fn m5_prime() -> PointSet {
    base_with(5, &[31])
}

/// `M'_6a = {0, e_1..e_6, e_1+...+e_5, e_1+e_2+e_5+e_6}`, equivalent to `M_6a`.
pub fn m6a_prime() -> PointSet {
    base_with(6, &[31, 51])
}

/// The sets `{0, e_1..e_6, e_1+e_2+e_3+e_4, e_i1+e_i2+e_5+e_6}` for
/// `1 ≤ i1 < i2 ≤ 4`.
pub fn m6a1_family() -> Vec<PointSet> {
    let mut out = Vec::new();
    for i1 in 1..=4 {
        for i2 in i1 + 1..=4 {
            out.push(base_with(6, &[15, e(i1) | e(i2) | e(5) | e(6)]));
        }
    }
    out
}

/// The sets `{0, e_1..e_6, e_1+...+e_5, e_j1+e_j2+e_j3+e_6}` for
/// `1 ≤ j1 < j2 < j3 ≤ 5`.
pub fn m6a2_family() -> Vec<PointSet> {
    let mut out = Vec::new();
    for j1 in 1..=5 {
        for j2 in j1 + 1..=5 {
            for j3 in j2 + 1..=5 {
                out.push(base_with(6, &[31, e(j1) | e(j2) | e(j3) | e(6)]));
            }
        }
    }
    out
}

/// Published maximal Sidon sets: one of size 12 in dimension 7 and sizes
/// 15, 16 and 18 in dimension 8.
pub fn table_sets() -> Vec<NamedSet> {
    let named = |name: &str, dim, extra: &[u32]| NamedSet {
        name: name.to_string(),
        set: base_with(dim, extra),
    };
    vec![
        named("t7_n12", 7, &[15, 60, 101, 87]),
        named("t8_n15", 8, &[29, 58, 116, 135, 223, 236]),
        named("t8_n16", 8, &[29, 58, 116, 232, 205, 135, 222]),
        named("t8_n18", 8, &[29, 58, 116, 232, 205, 135, 254, 91, 171]),
    ]
}
