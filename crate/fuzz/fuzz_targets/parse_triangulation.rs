#![no_main]

use hst_core::io::parse_triangulation;
use hst_core::triangulation::is_triangulation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = parse_triangulation(text) {
        assert!(is_triangulation(t.simplices(), t.spec()));
    }
});
