#![no_main]

use hemibundle_cli::grid::{parse_grid, MAX_ROWS};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = std::str::from_utf8(data) else { return };
    if let Ok(rows) = parse_grid(spec) {
        assert!(rows.len() <= MAX_ROWS);
        if let Some(first) = rows.first() {
            assert!(rows.iter().all(|r| r.len() == first.len()));
        }
    }
});
