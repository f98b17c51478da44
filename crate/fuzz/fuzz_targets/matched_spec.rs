#![no_main]

use braces::descriptor::{BraceDescriptor, GroupSpec, LambdaSpec, MatchedSpec, DESCRIPTOR_VERSION};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    braces::set_enumeration_cap(4096);
    let Ok(spec) = serde_json::from_slice::<MatchedSpec>(data) else {
        return;
    };
    let mut moduli = spec.left.group.moduli.clone();
    moduli.extend(&spec.right.group.moduli);
    let d = BraceDescriptor {
        version: DESCRIPTOR_VERSION,
        group: GroupSpec { moduli },
        lambda: LambdaSpec::MatchedProduct(Box::new(spec)),
    };
    if let Ok(b) = d.to_brace() {
        assert!(b.is_validated());
    }
});
