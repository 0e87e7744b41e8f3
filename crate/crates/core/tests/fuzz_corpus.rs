//! Replays the checked-in fuzz corpus through the properties the fuzz
//! targets assert, so the seeds stay meaningful without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use sidon_core::codes::{min_distance_class, DClass};
use sidon_core::io::{format_set, parse_set_literal, parse_witness_file, write_witness};
use sidon_core::sidon::{is_sidon, is_sum_free, report};

fn seeds(target: &str) -> Vec<(u8, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<(u8, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let bytes = fs::read(entry.unwrap().path()).unwrap();
            let (&d, rest) = bytes.split_first().expect("seed has a dimension byte");
            (
                d,
                String::from_utf8(rest.to_vec()).expect("seeds are utf-8"),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn set_literal_seeds_round_trip() {
    let mut parsed = 0;
    for (d, text) in seeds("parse_set_literal") {
        let dim = u32::from(d % 30);
        if let Ok(m) = parse_set_literal(dim, &text) {
            assert_eq!(parse_set_literal(dim, &format_set(&m)).unwrap(), m);
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn witness_file_seeds_round_trip() {
    for (d, text) in seeds("parse_witness_file") {
        let dim = u32::from(d % 30);
        if let Ok(sets) = parse_witness_file(dim, &text) {
            let mut buf = Vec::new();
            for m in &sets {
                write_witness(&mut buf, m).unwrap();
            }
            assert_eq!(
                parse_witness_file(dim, std::str::from_utf8(&buf).unwrap()).unwrap(),
                sets
            );
        }
    }
}

#[test]
fn analysis_seeds_satisfy_the_distance_equivalences() {
    for (d, text) in seeds("set_analysis") {
        let dim = 1 + u32::from(d % 10);
        let Ok(m) = parse_set_literal(dim, &text) else {
            continue;
        };
        let r = report(&m);
        assert_eq!(r.is_sidon, is_sidon(&m));
        if !m.contains(0) {
            let class = min_distance_class(&m).unwrap();
            assert_eq!(class >= DClass::D4, is_sum_free(&m), "{m}");
            assert_eq!(class >= DClass::D5, is_sum_free(&m) && is_sidon(&m), "{m}");
        }
    }
}
