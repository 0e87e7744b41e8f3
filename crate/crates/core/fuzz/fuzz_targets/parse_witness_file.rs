#![no_main]

use libfuzzer_sys::fuzz_target;
use sidon_core::io::{parse_witness_file, write_witness};

fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let dim = u32::from(d % 30);
    if let Ok(sets) = parse_witness_file(dim, text) {
        let mut buf = Vec::new();
        for m in &sets {
            write_witness(&mut buf, m).unwrap();
        }
        let again = parse_witness_file(dim, std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(again, sets);
    }
});
