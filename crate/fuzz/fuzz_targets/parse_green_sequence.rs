#![no_main]

use hst_core::io::parse_green_sequence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_green_sequence(text);
    }
});
