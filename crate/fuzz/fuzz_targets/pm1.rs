#![no_main]

use hadamard::exactmat::{is_hadamard, parse_pm1, to_pm1};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_pm1(text) {
        assert_eq!(to_pm1(&m), text);
        if m.rows() <= 64 {
            let _ = is_hadamard(&m, false);
        }
    }
});
