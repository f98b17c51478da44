#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = braces::group::parse_moduli(text) {
            assert!(g.moduli().iter().all(|&m| m >= 2));
        }
    }
});
