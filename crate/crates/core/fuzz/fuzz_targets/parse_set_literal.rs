#![no_main]

use libfuzzer_sys::fuzz_target;
use sidon_core::io::{format_set, parse_set_literal};

// First byte picks the dimension, the rest is the literal.
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let dim = u32::from(d % 30);
    if let Ok(m) = parse_set_literal(dim, text) {
        let again = parse_set_literal(dim, &format_set(&m)).expect("formatted set parses");
        assert_eq!(again, m);
    }
});
