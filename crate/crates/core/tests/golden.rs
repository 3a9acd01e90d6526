//! Golden renderings. Set `LABYRINTH_BLESS=1` to rewrite the files.

mod common;

use std::path::PathBuf;

use labyrinth::{build_level, render_svg, substituted_path, Budget, PathKind, RenderSpec};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn check(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("LABYRINTH_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with LABYRINTH_BLESS=1", path.display()));
    assert!(expected == actual, "{name} differs from the golden file");
}

#[test]
fn level_two_with_coarse_grid() {
    let w2 = build_level(&common::sequence("fig1"), 2, Budget::default()).unwrap();
    let spec = RenderSpec {
        coarse_grid_every: Some(5),
        ..RenderSpec::with_cell_pixels(10)
    };
    check("fig1_w2.svg", &render_svg(&w2, &spec).unwrap());
}

#[test]
fn level_two_with_path_overlay() {
    let seq = common::sequence("fig1");
    let w2 = build_level(&seq, 2, Budget::default()).unwrap();
    let spec = RenderSpec {
        overlay: Some(substituted_path(&seq, 2, PathKind::E, Budget::default()).unwrap()),
        draw_grid: true,
        ..RenderSpec::with_cell_pixels(10)
    };
    check("fig1_w2_path_e.svg", &render_svg(&w2, &spec).unwrap());
}

#[test]
fn pattern_with_path() {
    let a1 = common::pattern("fig1_a1");
    let spec = RenderSpec {
        overlay: Some(labyrinth::path::exit_path(&a1, PathKind::D).unwrap()),
        draw_grid: true,
        ..RenderSpec::with_cell_pixels(20)
    };
    check("fig1_a1_path_d.svg", &render_svg(&a1, &spec).unwrap());
}
