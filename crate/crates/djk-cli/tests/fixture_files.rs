//! The shipped fixture files under `fixtures/` are the canonical emissions
//! of the gallery tables.

use djk_cli::format::{emit_algebra_file, parse_algebra_file};
use djk_core::gallery;
use std::path::PathBuf;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Regenerate the shipped files: `REGEN_FIXTURES=1 cargo test -p djk-cli regen`.
#[test]
fn regen_fixture_files() {
    if std::env::var("REGEN_FIXTURES").is_err() {
        return;
    }
    let dir = fixtures_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for f in gallery::all_fixtures() {
        std::fs::write(dir.join(format!("{}.alg", f.name)), emit_algebra_file(&f.table))
            .unwrap();
    }
}

#[test]
fn shipped_files_match_gallery_and_round_trip() {
    for f in gallery::all_fixtures() {
        let path = fixtures_dir().join(format!("{}.alg", f.name));
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, emit_algebra_file(&f.table), "{} file is stale", f.name);
        let parsed = parse_algebra_file(&text).unwrap();
        assert_eq!(emit_algebra_file(&parsed), text, "{} round trip", f.name);
    }
}
