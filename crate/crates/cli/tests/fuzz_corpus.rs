//! Replays the checked-in fuzz seeds through the parse_grid target's checks.

use std::path::Path;

use hemibundle_cli::grid::{parse_grid, MAX_ROWS};

#[test]
fn parse_grid_seeds() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/parse_grid");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let spec = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        if let Ok(rows) = parse_grid(&spec) {
            assert!(rows.len() <= MAX_ROWS);
            assert!(rows.windows(2).all(|w| w[0].len() == w[1].len()));
        }
        seen += 1;
    }
    assert_eq!(seen, 5);
}
