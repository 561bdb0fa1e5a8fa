#![no_main]

use hemibundle::format::{parse_family, write_family};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(family) = parse_family(text) {
        // written text must parse back to the same family and the same text
        let written = write_family(&family);
        let again = parse_family(&written).expect("writer output parses");
        assert_eq!(again, family);
        assert_eq!(write_family(&again), written);
    }
});
