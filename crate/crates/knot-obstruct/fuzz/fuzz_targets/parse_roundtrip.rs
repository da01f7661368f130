//! Whenever arbitrary text parses, the rendered canonical form must
//! parse back to the same sum.

#![no_main]

use libfuzzer_sys::fuzz_target;

use knot_obstruct::parse::parse;

fuzz_target!(|data: &str| {
    if let Ok(sum) = parse(data) {
        let rendered = sum.to_string();
        let reparsed = parse(&rendered).expect("canonical form must reparse");
        assert_eq!(reparsed, sum);
    }
});
