#![no_main]

use hadamard::exactmat::MatrixDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = MatrixDocument::from_json(text) {
        if let Ok(m) = doc.matrix() {
            let again = MatrixDocument::new(&m, false, None).to_json();
            assert_eq!(MatrixDocument::from_json(&again).unwrap().matrix().unwrap(), m);
        }
    }
});
