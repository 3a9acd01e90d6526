use std::fmt;

use crate::pattern::{Cell, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Bottom, Side::Left, Side::Right];

    pub fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    /// Offset `(di, dj)` of the neighbor across this side.
    pub fn offset(self) -> (isize, isize) {
        match self {
            Side::Top => (0, 1),
            Side::Bottom => (0, -1),
            Side::Left => (-1, 0),
            Side::Right => (1, 0),
        }
    }

    /// The side of `from` that `to` lies across, if they are side-adjacent.
    pub fn between(from: Cell, to: Cell) -> Option<Side> {
        let di = to.i as isize - from.i as isize;
        let dj = to.j as isize - from.j as isize;
        Side::ALL.into_iter().find(|s| s.offset() == (di, dj))
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "top" => Ok(Side::Top),
            "bottom" => Ok(Side::Bottom),
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("unknown side `{s}` (expected top, bottom, left or right)")),
        }
    }
}

/// Exit cells on all four sides and the exit pairs they form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitSystem {
    pub top: Vec<Cell>,
    pub bottom: Vec<Cell>,
    pub left: Vec<Cell>,
    pub right: Vec<Cell>,
    /// `(top, bottom)` pairs sorted by column.
    pub vertical_pairs: Vec<(Cell, Cell)>,
    /// `(left, right)` pairs sorted by row.
    pub horizontal_pairs: Vec<(Cell, Cell)>,
}

impl ExitSystem {
    pub fn on(&self, side: Side) -> &[Cell] {
        match side {
            Side::Top => &self.top,
            Side::Bottom => &self.bottom,
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// The exit on `side`, when that side's pair is unique.
    pub fn unique(&self, side: Side) -> Option<Cell> {
        match side {
            Side::Top | Side::Bottom if self.vertical_pairs.len() == 1 => {
                let (t, b) = self.vertical_pairs[0];
                Some(if side == Side::Top { t } else { b })
            }
            Side::Left | Side::Right if self.horizontal_pairs.len() == 1 => {
                let (l, r) = self.horizontal_pairs[0];
                Some(if side == Side::Left { l } else { r })
            }
            _ => None,
        }
    }
}

pub fn find_exits(p: &Pattern) -> ExitSystem {
    let (m, s) = (p.m(), p.s());
    let g = p.grid();
    let mut vertical_pairs = Vec::new();
    for i in 0..m {
        if g.get(i, s - 1) && g.get(i, 0) {
            vertical_pairs.push((Cell::new(i, s - 1), Cell::new(i, 0)));
        }
    }
    let mut horizontal_pairs = Vec::new();
    for j in 0..s {
        if g.get(0, j) && g.get(m - 1, j) {
            horizontal_pairs.push((Cell::new(0, j), Cell::new(m - 1, j)));
        }
    }
    ExitSystem {
        top: vertical_pairs.iter().map(|p| p.0).collect(),
        bottom: vertical_pairs.iter().map(|p| p.1).collect(),
        left: horizontal_pairs.iter().map(|p| p.0).collect(),
        right: horizontal_pairs.iter().map(|p| p.1).collect(),
        vertical_pairs,
        horizontal_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    #[test]
    fn plus_exits() {
        let p = parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap();
        let e = find_exits(&p);
        assert_eq!(e.vertical_pairs, vec![(Cell::new(1, 2), Cell::new(1, 0))]);
        assert_eq!(e.horizontal_pairs, vec![(Cell::new(0, 1), Cell::new(2, 1))]);
        assert_eq!(e.unique(Side::Right), Some(Cell::new(2, 1)));
    }

    #[test]
    fn black_top_row_has_no_top_exits() {
        let p = parse_pattern("pattern 3 3\n###\n...\n.#.\n").unwrap();
        let e = find_exits(&p);
        assert!(e.top.is_empty());
        assert!(e.vertical_pairs.is_empty());
        assert_eq!(e.unique(Side::Top), None);
    }

    #[test]
    fn side_between() {
        assert_eq!(Side::between(Cell::new(1, 1), Cell::new(1, 2)), Some(Side::Top));
        assert_eq!(Side::between(Cell::new(1, 1), Cell::new(0, 1)), Some(Side::Left));
        assert_eq!(Side::between(Cell::new(1, 1), Cell::new(2, 2)), None);
    }
}
