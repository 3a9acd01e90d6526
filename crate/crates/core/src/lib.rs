//! Mixed labyrinth fractals.
//!
//! A sequence of labyrinth patterns is refined level by level: every white
//! cell of level `n - 1` is replaced by a scaled copy of pattern `n`. This
//! crate builds those level sets, checks the labyrinth properties, counts
//! exit paths exactly through products of 6x6 path matrices, and derives
//! exit coordinates, arc approximations and dimension estimates.
//!
//! ```
//! use labyrinth::{parse_pattern, validate, path_matrix};
//!
//! let cross = parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap();
//! assert!(validate(&cross).is_labyrinth);
//! let m = path_matrix(&cross).unwrap();
//! assert_eq!(m.path_lengths().map(|l| l.to_string()), ["3", "3", "3", "3", "3", "3"].map(String::from));
//! ```

pub mod cli;
pub mod compose;
pub mod error;
pub mod exits;
pub mod geo;
pub mod graph;
pub mod grid;
pub mod matrix;
pub mod path;
pub mod pattern;
pub mod render;
pub mod report;
pub mod sequence;
pub mod validate;

pub use compose::{build_level, level_is_labyrinth, substitute, Budget, LevelSet};
pub use error::{Error, Result};
pub use exits::{find_exits, ExitSystem, Side};
pub use geo::{
    arc_approximation, connectivity_probe, dimension_estimate, disconnectedness_probe,
    exit_coordinates, exit_membership_counts, ArcApproximation, DimensionEstimate,
    ExitCoordinates,
};
pub use graph::{build_graph, shortest_path, tree_path, CellGraph};
pub use matrix::{matrix_product, path_matrix, PathMatrix};
pub use path::{
    classify_path, substituted_path, wild_containment_probe, CellPath, PathKind, SquareClass,
};
pub use pattern::{parse_pattern, Cell, Pattern};
pub use render::{render_pgm, render_svg, RenderSpec};
pub use sequence::{LabyrinthSequence, Tail};
pub use validate::{black_graph, validate, ValidationReport};
