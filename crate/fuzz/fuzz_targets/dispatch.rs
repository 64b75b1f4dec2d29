#![no_main]

use hadamard::registry::DispatchTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = DispatchTable::parse(text) {
        let back = DispatchTable::parse(&t.to_text()).expect("printed table parses");
        assert_eq!(back.to_text(), t.to_text());
    }
});
