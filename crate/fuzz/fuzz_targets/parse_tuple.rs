#![no_main]

use hst_core::io::parse_tuple;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = parse_tuple(text) {
        let again = serde_json::to_string(&t)
            .ok()
            .and_then(|s| parse_tuple(&s).ok());
        assert_eq!(again.as_ref(), Some(&t));
    }
});
