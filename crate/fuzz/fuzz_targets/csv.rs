#![no_main]

use hadamard::exactmat::{parse_any, parse_csv, to_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_csv(text) {
        assert_eq!(parse_csv(&to_csv(&m)).unwrap(), m);
    }
    let _ = parse_any(text);
});
