//! Reproduction suite behind `sidon verify`.

use std::io::Write;

use clap::ValueEnum;
use num_bigint::BigUint;
use sidon_core::bounds::{
    cor19_table, floor_equality_check, new_bound, nonexistent_d5, proof_case_check, trivial_bound,
};
use sidon_core::catalog::{self, canonical, m5_prime, m6a1_family, m6a2_family, m6a_prime};
use sidon_core::codes::{associated_code, DClass};
use sidon_core::enumerate::{
    affine_equivalent, enumerate_maximal, smax_search, weight_class_constraints, EnumOptions,
    WeightClass,
};
use sidon_core::gf2core::apply_affine;
use sidon_core::sidon::{is_maximal_sidon, is_sidon, is_sum_free, strip_zero};
use sidon_core::PointSet;

use crate::{io_fail, Fail};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Everything except the dimension-7 enumeration.
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub check_name: &'static str,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

fn compare(check_name: &'static str, expected: String, actual: String) -> VerifyOutcome {
    let status = if expected == actual {
        Status::Pass
    } else {
        Status::Fail
    };
    VerifyOutcome {
        check_name,
        status,
        expected,
        actual,
    }
}

fn skipped(check_name: &'static str, expected: &str) -> VerifyOutcome {
    VerifyOutcome {
        check_name,
        status: Status::Skipped,
        expected: expected.into(),
        actual: "needs --level full".into(),
    }
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn maximal_sets(dim: u32) -> Vec<PointSet> {
    let opts = EnumOptions {
        stream_witnesses: true,
        ..EnumOptions::default()
    };
    enumerate_maximal(dim, &opts)
        .expect("dimension <= 6")
        .witnesses
}

fn canonical_sizes() -> VerifyOutcome {
    let actual = catalog::canonical_sets()
        .iter()
        .map(|n| {
            let tag = if is_maximal_sidon(&n.set).unwrap_or(false) {
                ""
            } else {
                "(not maximal)"
            };
            format!("{}{tag}", n.set.len())
        })
        .collect::<Vec<_>>()
        .join(",");
    compare(
        "canonical sets t<=6 maximal, sizes",
        "2,3,4,6,7,9,8".into(),
        actual,
    )
}

fn canonical_equivalences() -> VerifyOutcome {
    let m5 = canonical("M5").expect("catalog has M5");
    let m6a = canonical("M6a").expect("catalog has M6a");
    let mut pairs = vec![(m5_prime(), m5), (m6a_prime(), m6a.clone())];
    pairs.extend(m6a1_family().into_iter().map(|m| (m, m6a.clone())));
    pairs.extend(m6a2_family().into_iter().map(|m| (m, m6a.clone())));
    let witnessed = pairs
        .iter()
        .filter(|(from, to)| {
            matches!(affine_equivalent(from, to), Ok(Some(map))
                if apply_affine(&map, from).is_ok_and(|img| img == *to))
        })
        .count();
    compare(
        "affine equivalences to canonical forms",
        format!("{} witnessed", pairs.len()),
        format!("{witnessed} witnessed"),
    )
}

fn table1() -> VerifyOutcome {
    let actual = catalog::table_sets()
        .iter()
        .filter(|n| is_maximal_sidon(&n.set).unwrap_or(false))
        .map(|n| format!("({},{})", n.set.dim(), n.set.len()))
        .collect::<Vec<_>>()
        .join(" ");
    compare(
        "published t=7,8 sets maximal (dim,size)",
        "(7,12) (8,15) (8,16) (8,18)".into(),
        actual,
    )
}

fn small_enumeration() -> VerifyOutcome {
    let support = |dim| {
        let r = enumerate_maximal(dim, &EnumOptions::default()).expect("dimension <= 6");
        format!("t={dim}:{{{}}}", joined(r.size_histogram.into_keys()))
    };
    compare(
        "maximal sizes for t=5,6",
        "t=5:{7} t=6:{8,9}".into(),
        format!("{} {}", support(5), support(6)),
    )
}

fn smax(level: Level) -> VerifyOutcome {
    let top = if level == Level::Full { 7 } else { 6 };
    let expected = &[2, 3, 4, 6, 7, 9, 12][..top as usize];
    let actual = (1..=top).map(|t| smax_search(t).expect("t <= 7"));
    compare("smax(t) by search", joined(expected), joined(actual))
}

fn dimension_seven(level: Level) -> VerifyOutcome {
    const NAME: &str = "t=7 maximal sets, ordered count";
    if level == Level::Fast {
        return skipped(NAME, "12: 524160");
    }
    let opts = EnumOptions {
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..EnumOptions::default()
    };
    let r = enumerate_maximal(7, &opts).expect("dimension 7 is supported");
    let actual = r
        .ordered_histogram
        .iter()
        .map(|(s, c)| format!("{s}: {c}"))
        .collect::<Vec<_>>()
        .join(", ");
    compare(NAME, "12: 524160".into(), actual)
}

fn weight_classes() -> VerifyOutcome {
    let actual = WeightClass::ALL
        .iter()
        .map(|&c| match weight_class_constraints(8, c) {
            Ok((anchor, others)) => format!("{c}:{}/{others}", anchor.weight()),
            Err(e) => format!("{c}:{e}"),
        })
        .collect::<Vec<_>>()
        .join(" ");
    compare(
        "dim-8 subtasks (anchor/max other weight)",
        "W4:4/4 W5:5/5 W6:6/6 W7:7/6 W8:8/5".into(),
        actual,
    )
}

fn trivial_row() -> VerifyOutcome {
    compare(
        "trivial bound, t=4..15",
        "6,8,11,16,23,32,45,64,91,128,181,256".into(),
        joined((4..=15).map(trivial_bound)),
    )
}

fn new_row() -> VerifyOutcome {
    let actual = (6..=15)
        .map(|t| new_bound(t).map_or_else(|e| e.to_string(), |b| b.to_string()))
        .collect::<Vec<_>>()
        .join(",");
    compare(
        "improved bound, t=6..15",
        "10,14,21,30,43,62,90,126,180,254".into(),
        actual,
    )
}

fn cor19() -> VerifyOutcome {
    let actual = cor19_table()
        .iter()
        .map(|r| format!("{}:[{},{}]", r.t, r.n, r.k))
        .collect::<Vec<_>>()
        .join(" ");
    compare(
        "no [n_t, n_t - t, 5] code, t=16..26",
        "16:[360,344] 18:[723,705] 20:[1446,1426] 22:[2895,2873] 24:[5791,5767] 26:[11583,11557]"
            .into(),
        actual,
    )
}

fn cor19_lambda() -> VerifyOutcome {
    let actual = cor19_table()
        .iter()
        .map(|r| format!("{}:{}/{}/{}/{}", r.t, r.f, r.a, r.b, r.lambda))
        .collect::<Vec<_>>()
        .join(" ");
    compare(
        "F/a/b/lambda, t=16..26",
        "16:362/119/1/2 18:724/240/0/1 20:1448/481/1/2 22:2896/964/0/1 24:5793/1929/2/2 26:11585/3860/1/2"
            .into(),
        actual,
    )
}

fn t24_alternative() -> VerifyOutcome {
    let excluded = nonexistent_d5(24, &BigUint::from(5792u32)).unwrap_or(false);
    compare(
        "no [5792,5768,5] code",
        "excluded".into(),
        if excluded { "excluded" } else { "not excluded" }.into(),
    )
}

fn proof_chain() -> VerifyOutcome {
    let broken: Vec<u32> = (6..=64)
        .step_by(2)
        .filter(|&t| !proof_case_check(t).is_ok_and(|r| r.inequality_holds))
        .collect();
    compare(
        "case inequalities, even t=6..64",
        "all hold".into(),
        if broken.is_empty() {
            "all hold".into()
        } else {
            format!("fails at t={}", joined(broken))
        },
    )
}

fn floor_identity() -> VerifyOutcome {
    let broken: Vec<u32> = (2..=64)
        .step_by(2)
        .filter(|&t| floor_equality_check(t) != Ok(true))
        .collect();
    compare(
        "trivial bound = nearest sqrt, even t<=64",
        "all hold".into(),
        if broken.is_empty() {
            "all hold".into()
        } else {
            format!("fails at t={}", joined(broken))
        },
    )
}

/// Maximal sets with `0` for `t = 4..6` plus the dimension-7 table set,
/// paired with `smax(t-1)`.
fn code_samples() -> Vec<(PointSet, usize)> {
    let smax: Vec<usize> = (1..=6).map(|t| smax_search(t).expect("t <= 6")).collect();
    let mut sets: Vec<PointSet> = (4..=6).flat_map(maximal_sets).collect();
    sets.push(catalog::table_sets().remove(0).set);
    sets.into_iter()
        .map(|m| {
            let prev = smax[m.dim() as usize - 2];
            (m, prev)
        })
        .collect()
}

fn sum_free_codes(samples: &[(PointSet, usize)]) -> VerifyOutcome {
    let bad = samples
        .iter()
        .filter(|(m, prev)| {
            let Ok(s) = strip_zero(m) else { return true };
            let Ok(code) = associated_code(&s) else {
                return true;
            };
            let d_ok = s.len() < prev + 1 || code.d_class == DClass::D5;
            !(is_sidon(&s) && is_sum_free(&s) && code.is_full_rank() && d_ok)
        })
        .count();
    compare(
        "codes of maximal sets: full rank, d=5",
        format!("{} of {}", samples.len(), samples.len()),
        format!("{} of {}", samples.len() - bad, samples.len()),
    )
}

fn radius_of(m: &PointSet) -> Option<u32> {
    let s = strip_zero(m).ok()?;
    associated_code(&s).ok()?.covering_radius
}

/// The covering radius as originally claimed: exactly 3 for every maximal
/// set. Fails at `t = 4`, where 15 columns reach every syndrome with at
/// most two.
fn radius_three(samples: &[(PointSet, usize)]) -> VerifyOutcome {
    let mut off: Vec<String> = samples
        .iter()
        .filter_map(|(m, _)| {
            let r = radius_of(m);
            (r != Some(3)).then(|| {
                format!(
                    "t={} R={}",
                    m.dim(),
                    r.map_or("?".into(), |r| r.to_string())
                )
            })
        })
        .collect();
    off.dedup();
    compare(
        "covering radius 3 for maximal sets",
        "R=3 everywhere".into(),
        if off.is_empty() {
            "R=3 everywhere".into()
        } else {
            off.join(" ")
        },
    )
}

/// Corrected statement: `R = 2` exactly when sums of at most two columns
/// cover the space, `R = 3` otherwise.
fn radius_corrected(samples: &[(PointSet, usize)]) -> VerifyOutcome {
    let bad = samples
        .iter()
        .filter(|(m, _)| {
            let n = m.len() as u64 - 1;
            let expected = if 1 + n + n * (n - 1) / 2 >= 1 << m.dim() {
                2
            } else {
                3
            };
            radius_of(m) != Some(expected)
        })
        .count();
    compare(
        "covering radius 2 iff 1+n+C(n,2) >= 2^t, else 3",
        "0 exceptions".into(),
        format!("{bad} exceptions"),
    )
}

pub fn collect(level: Level) -> Vec<VerifyOutcome> {
    let samples = code_samples();
    vec![
        canonical_sizes(),
        canonical_equivalences(),
        table1(),
        small_enumeration(),
        smax(level),
        dimension_seven(level),
        weight_classes(),
        trivial_row(),
        new_row(),
        cor19(),
        cor19_lambda(),
        t24_alternative(),
        proof_chain(),
        floor_identity(),
        sum_free_codes(&samples),
        radius_three(&samples),
        radius_corrected(&samples),
    ]
}

pub fn run(out: &mut impl Write, level: Level) -> Result<(), Fail> {
    let outcomes = collect(level);
    let width = outcomes
        .iter()
        .map(|o| o.check_name.len())
        .max()
        .unwrap_or(0);
    for o in &outcomes {
        writeln!(
            out,
            "{:<7} {:<width$}  expected: {}  actual: {}",
            o.status.label(),
            o.check_name,
            o.expected,
            o.actual
        )
        .map_err(io_fail)?;
    }
    let count = |s| outcomes.iter().filter(|o| o.status == s).count();
    let failed = count(Status::Fail);
    writeln!(
        out,
        "{} passed, {failed} failed, {} skipped",
        count(Status::Pass),
        count(Status::Skipped)
    )
    .map_err(io_fail)?;
    if failed > 0 {
        return Err(Fail {
            code: 1,
            message: format!("{failed} check(s) failed"),
        });
    }
    Ok(())
}
