//! Feeding arbitrary text to the expression parser must never panic;
//! every outcome is a KnotSum or a structured error.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let _ = knot_obstruct::parse::parse(data);
});
