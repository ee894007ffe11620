#![no_main]
//! Fuzz the rational scalar parser: no panics, and accepted values must
//! round trip through the canonical renderer.

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Cap the digit count so BigInt arithmetic stays fuzz-speed friendly.
    if text.len() > 64 {
        return;
    }
    if let Ok(r) = multilin::io::parse_rational(text) {
        let rendered = multilin::io::format_rational(&r);
        let again = multilin::io::parse_rational(&rendered).expect("canonical form reparses");
        assert_eq!(r, again, "format/parse round trip changed the value");
    }
});
