#![no_main]

use hadamard::catalog::{self, Catalog};
use libfuzzer_sys::fuzz_target;

const FILES: [&str; 6] = [
    catalog::SEQUENCES.0,
    catalog::WILLIAMSON.0,
    catalog::GOOD.0,
    catalog::SDS.0,
    catalog::DESIGNS.0,
    catalog::DISPATCH.0,
];

// The first byte picks the file, the rest is its contents.
fuzz_target!(|data: &[u8]| {
    let Some((&which, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let _ = Catalog::check_file(FILES[which as usize % FILES.len()], text);
});
