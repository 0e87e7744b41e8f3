#![no_main]

use libfuzzer_sys::fuzz_target;
use sidon_core::codes::{associated_code, min_distance_class, DClass};
use sidon_core::io::parse_set_literal;
use sidon_core::sidon::{is_sidon, is_sum_free, report};

// Parsed sets go through the analysis entry points; dimension stays small
// so the bitmaps and the covering-radius search are cheap.
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let dim = 1 + u32::from(d % 10);
    let Ok(m) = parse_set_literal(dim, text) else { return };
    if m.len() > 64 {
        return;
    }
    let r = report(&m);
    assert_eq!(r.is_sidon, is_sidon(&m));
    assert!(!r.is_maximal_sidon || r.is_sidon);
    if m.contains(0) {
        return;
    }
    let class = min_distance_class(&m).unwrap();
    assert_eq!(class >= DClass::D4, is_sum_free(&m));
    assert_eq!(class >= DClass::D5, is_sum_free(&m) && is_sidon(&m));
    let _ = associated_code(&m);
});
