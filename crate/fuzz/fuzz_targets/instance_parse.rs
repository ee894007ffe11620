#![no_main]
//! Fuzz the instance file parser with arbitrary bytes: it must never panic,
//! and anything it accepts must survive a write/parse round trip.

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(inst) = multilin::io::parse_instance(text) {
        let written = multilin::io::write_instance(&inst);
        let again = multilin::io::parse_instance(&written).expect("canonical output reparses");
        assert_eq!(inst, again, "write/parse round trip changed the instance");
    }
});
