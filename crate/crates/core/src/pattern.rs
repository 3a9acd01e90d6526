//! Patterns: `m x s` grids of white and black cells.
//!
//! Cells are indexed `(i, j)` with `i` the column counted from the left and
//! `j` the row counted from the bottom. The text format lists rows top to
//! bottom, so parsing flips the row order.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::BitGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub const fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }

    /// Row-major ordering key (bottom row first, then left to right).
    pub fn row_major_key(&self) -> (usize, usize) {
        (self.j, self.i)
    }

    pub fn is_side_adjacent(&self, other: &Cell) -> bool {
        self.i.abs_diff(other.i) + self.j.abs_diff(other.j) == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((i, j): (usize, usize)) -> Self {
        Cell { i, j }
    }
}

/// A nonempty set of white cells on an `m x s` grid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    grid: BitGrid,
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern {:?}", self.grid)
    }
}

impl Pattern {
    pub fn from_grid(grid: BitGrid) -> Result<Self> {
        if grid.width() == 0 || grid.height() == 0 {
            return Err(Error::Invalid("pattern dimensions must be at least 1".into()));
        }
        if grid.count_ones() == 0 {
            return Err(Error::NoWhiteCells);
        }
        Ok(Pattern { grid })
    }

    pub fn from_cells<I, C>(m: usize, s: usize, white: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        let mut grid = BitGrid::new(m, s);
        for c in white {
            let c = c.into();
            if c.i >= m || c.j >= s {
                return Err(Error::Invalid(format!("cell {c} outside {m}x{s} grid")));
            }
            grid.set(c.i, c.j, true);
        }
        Pattern::from_grid(grid)
    }

    /// The `m x s` pattern with every cell white.
    pub fn full(m: usize, s: usize) -> Result<Self> {
        Pattern::from_grid(BitGrid::filled(m, s))
    }

    pub fn m(&self) -> usize {
        self.grid.width()
    }

    pub fn s(&self) -> usize {
        self.grid.height()
    }

    pub fn width(&self) -> usize {
        self.grid.width()
    }

    pub fn height(&self) -> usize {
        self.grid.height()
    }

    pub fn is_square(&self) -> bool {
        self.m() == self.s()
    }

    pub fn grid(&self) -> &BitGrid {
        &self.grid
    }

    pub fn is_white(&self, c: Cell) -> bool {
        c.i < self.m() && c.j < self.s() && self.grid.get(c.i, c.j)
    }

    pub fn white_count(&self) -> u64 {
        self.grid.count_ones()
    }

    pub fn black_count(&self) -> u64 {
        self.grid.len() as u64 - self.white_count()
    }

    pub fn white_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.grid.ones().map(Cell::from)
    }

    pub fn complement(&self) -> Result<Pattern> {
        let grid = self.grid.complement();
        if grid.count_ones() == 0 {
            return Err(Error::EmptyComplement);
        }
        Ok(Pattern { grid })
    }

    pub fn transpose(&self) -> Pattern {
        Pattern {
            grid: self.grid.transpose(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.m() + 1) * self.s() + 24);
        out.push_str(&format!("pattern {} {}\n", self.m(), self.s()));
        for j in (0..self.s()).rev() {
            for i in 0..self.m() {
                out.push(if self.grid.get(i, j) { '.' } else { '#' });
            }
            out.push('\n');
        }
        out
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Pattern> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        parse_pattern(&text)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the `pattern <m> <s>` text format.
pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let mut lines = text.split('\n').enumerate().map(|(k, l)| (k + 1, l));

    let (header_line, header) = loop {
        match lines.next() {
            Some((_, l)) if l.starts_with('#') => continue,
            Some((n, l)) => break (n, l),
            None => return Err(parse_err(1, 1, "missing header")),
        }
    };
    let mut fields = header.split(' ');
    if fields.next() != Some("pattern") {
        return Err(parse_err(header_line, 1, "expected `pattern <m> <s>`"));
    }
    let mut dim = |name: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(header_line, header.len() + 1, format!("missing {name}")))?;
        let column = tok.as_ptr() as usize - header.as_ptr() as usize + 1;
        match tok.parse::<usize>() {
            Ok(v) if v >= 1 && tok.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
            _ => Err(parse_err(header_line, column, format!("bad {name} `{tok}`"))),
        }
    };
    let m = dim("width")?;
    let s = dim("height")?;
    if let Some(extra) = fields.next() {
        let column = extra.as_ptr() as usize - header.as_ptr() as usize + 1;
        return Err(parse_err(header_line, column, "trailing text after header"));
    }

    let mut grid = BitGrid::new(m, s);
    let mut last_line = header_line;
    for row in 0..s {
        let (n, l) = lines.next().ok_or_else(|| {
            parse_err(last_line + 1, 1, format!("expected {s} rows, found {row}"))
        })?;
        last_line = n;
        let j = s - 1 - row;
        let mut count = 0;
        for (col, ch) in l.chars().enumerate() {
            if col >= m {
                return Err(parse_err(n, col + 1, format!("row longer than {m}")));
            }
            match ch {
                '.' => grid.set(col, j, true),
                '#' => {}
                _ => return Err(parse_err(n, col + 1, format!("illegal character {ch:?}"))),
            }
            count += 1;
        }
        if count != m {
            return Err(parse_err(n, count + 1, format!("row has {count} cells, expected {m}")));
        }
    }
    for (n, l) in lines {
        if !l.is_empty() {
            return Err(parse_err(n, 1, "unexpected text after the last row"));
        }
    }
    if grid.count_ones() == 0 {
        return Err(parse_err(header_line, 1, "no white cells"));
    }
    Pattern::from_grid(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLUS: &str = "pattern 3 3\n#.#\n...\n#.#\n";

    #[test]
    fn parses_plus() {
        let p = parse_pattern(PLUS).unwrap();
        assert_eq!((p.m(), p.s(), p.white_count()), (3, 3, 5));
        assert!(p.is_white(Cell::new(1, 0)));
        assert!(!p.is_white(Cell::new(0, 0)));
    }

    #[test]
    fn flips_rows_to_bottom_left_origin() {
        let p = parse_pattern("pattern 2 2\n.#\n##\n").unwrap();
        assert_eq!(p.white_cells().collect::<Vec<_>>(), vec![Cell::new(0, 1)]);
    }

    #[test]
    fn comments_and_trailing_blank_lines() {
        let p = parse_pattern("# a\n# b\npattern 1 1\n.\n\n\n").unwrap();
        assert_eq!(p.white_count(), 1);
    }

    #[test]
    fn all_black_is_rejected() {
        let err = parse_pattern("pattern 2 1\n##\n").unwrap_err();
        assert!(err.to_string().contains("no white cells"), "{err}");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_pattern("pattern 3 2\n..x\n...\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        match parse_pattern("pattern 3 2\n..\n...\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        match parse_pattern("pattern 3 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 11)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_pattern("pattern 2 2\n..\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_pattern("patern 2 2\n..\n..\n"),
            Err(Error::Parse { line: 1, column: 1, .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let p = parse_pattern(PLUS).unwrap();
        assert_eq!(p.to_text(), PLUS);
    }

    #[test]
    fn complement_of_plus_is_corners() {
        let p = parse_pattern(PLUS).unwrap();
        let c = p.complement().unwrap();
        assert_eq!(
            c.white_cells().collect::<Vec<_>>(),
            vec![Cell::new(0, 0), Cell::new(2, 0), Cell::new(0, 2), Cell::new(2, 2)]
        );
        assert_eq!(c.complement().unwrap(), p);
        assert!(matches!(
            Pattern::full(2, 2).unwrap().complement(),
            Err(Error::EmptyComplement)
        ));
    }
}
