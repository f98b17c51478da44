#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    braces::set_enumeration_cap(4096);
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(b) = braces::parse_brace(text) {
            // whatever parses must serialize and parse back to the same map
            let again = braces::serialize_brace(&b, false).expect("serializable");
            let back = braces::parse_brace(&again).expect("round trip");
            assert!(braces::same_lambda(&b, &back));
        }
    }
});
