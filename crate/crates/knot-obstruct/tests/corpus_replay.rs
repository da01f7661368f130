//! Replays the checked-in fuzz corpus through the same assertions the
//! fuzz targets make, so the seeds act as regressions even on builds
//! without a fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use knot_obstruct::parse::parse;

fn corpus_dir(target: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target)
}

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = corpus_dir(target);
    let mut seeds: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("read {}: {e}", dir.display()))
        .map(|entry| {
            let entry = entry.unwrap();
            let name = entry.file_name().to_string_lossy().into_owned();
            (name, fs::read(entry.path()).unwrap())
        })
        .collect();
    seeds.sort();
    assert!(!seeds.is_empty(), "empty corpus in {}", dir.display());
    seeds
}

#[test]
fn parse_expr_seeds_never_panic() {
    for (name, bytes) in seeds("parse_expr") {
        if let Ok(text) = std::str::from_utf8(&bytes) {
            let _ = parse(text);
        } else {
            panic!("seed {name} is not UTF-8");
        }
    }
}

#[test]
fn parse_roundtrip_seeds_are_canonical() {
    for (name, bytes) in seeds("parse_roundtrip") {
        let text = std::str::from_utf8(&bytes).unwrap();
        if let Ok(sum) = parse(text) {
            let rendered = sum.to_string();
            let reparsed = parse(&rendered)
                .unwrap_or_else(|e| panic!("seed {name}: {rendered:?} fails to reparse: {e}"));
            assert_eq!(reparsed, sum, "seed {name}");
        }
    }
}
