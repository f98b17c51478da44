#![no_main]

use braces::descriptor::ExtensionSpec;
use braces::{Automorphism, Element, ExtensionData};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    braces::set_enumeration_cap(4096);
    let Ok(spec) = serde_json::from_slice::<ExtensionSpec>(data) else {
        return;
    };
    let Ok(base) = spec.base.to_brace() else {
        return;
    };
    let Ok(kernel) = braces::AbelianGroup::new(spec.kernel.moduli.clone()) else {
        return;
    };
    if base.order().saturating_mul(kernel.order()) > 4096 {
        return;
    }
    let auts = |v: &[Vec<Vec<i64>>]| {
        v.iter()
            .map(|rows| Automorphism::from_matrix(&kernel, rows))
            .collect::<braces::Result<Vec<_>>>()
    };
    let (Ok(sigma), Ok(nu)) = (auts(&spec.sigma), auts(&spec.nu)) else {
        return;
    };
    let elems = |v: &[Vec<u32>]| v.iter().cloned().map(Element::new).collect();
    let Ok(d) = ExtensionData::new(
        base,
        kernel.clone(),
        sigma,
        nu,
        elems(&spec.tau),
        elems(&spec.beta),
    ) else {
        return;
    };
    if let Ok(b) = braces::build_extension(&d) {
        let json = braces::serialize_brace(&b, false).expect("serializable");
        let back = braces::parse_brace(&json).expect("round trip");
        assert!(braces::same_lambda(&b, &back));
    }
});
