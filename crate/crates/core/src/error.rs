use thiserror::Error;

use crate::pattern::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("no white cells")]
    NoWhiteCells,

    #[error("empty complement: pattern has no black cells")]
    EmptyComplement,

    #[error("level {level} needs {cells} cells, budget is {limit}")]
    BudgetExceeded {
        level: usize,
        cells: String,
        limit: u64,
    },

    #[error("level {level} is undefined: finite sequence has {available} patterns")]
    UndefinedLevel { level: usize, available: usize },

    #[error("{context} is not a labyrinth pattern: {}", witnesses.join("; "))]
    NotLabyrinth {
        context: String,
        witnesses: Vec<String>,
    },

    #[error("graph is not a tree; use a shortest path instead")]
    NotATree,

    #[error("no path between {from} and {to}")]
    Disconnected { from: Cell, to: Cell },

    #[error("{cell} is not a cell of the graph")]
    NotAVertex { cell: Cell },

    #[error("{cell} is not a {side} exit")]
    NotAnExit { cell: Cell, side: &'static str },

    #[error("path cells {a} and {b} are not side-adjacent")]
    NonAdjacent { a: Cell, b: Cell },

    #[error("path visits {cell} twice")]
    RepeatedCell { cell: Cell },

    #[error("pattern has no vertical exit pair")]
    NoVerticalExitPair,

    #[error("overlay cell {cell} lies outside the {width}x{height} grid")]
    OverlayOutOfGrid {
        cell: Cell,
        width: usize,
        height: usize,
    },

    #[error("render needs {pixels} pixels, limit is {limit}")]
    RenderBudget { pixels: u128, limit: u128 },

    #[error("exit coordinate of the limit set is undefined for a finite sequence")]
    NoLimit,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
