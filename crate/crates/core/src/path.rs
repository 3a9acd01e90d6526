//! Exit-to-exit paths and their square classes.
//!
//! The six labels do double duty. As a path kind, `C` names the path from the
//! top exit to the right exit; as a square class, `C` names a cell whose two
//! path neighbours lie across its top and right sides. Exit cells get a
//! phantom neighbour across their exit side.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::compose::{build_level, Budget};
use crate::error::{Error, Result};
use crate::exits::{find_exits, Side};
use crate::graph::{build_graph, shortest_path, tree_path};
use crate::pattern::{Cell, Pattern};
use crate::sequence::LabyrinthSequence;
use crate::validate::validate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareClass {
    A,
    B,
    C,
    D,
    E,
    F,
}

/// Exit-pair type of a path; same labels as [`SquareClass`].
pub type PathKind = SquareClass;

impl SquareClass {
    pub const ALL: [SquareClass; 6] = [
        SquareClass::A,
        SquareClass::B,
        SquareClass::C,
        SquareClass::D,
        SquareClass::E,
        SquareClass::F,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// `(start, end)` exit sides of the path of this kind.
    pub fn sides(self) -> (Side, Side) {
        match self {
            SquareClass::A => (Side::Top, Side::Bottom),
            SquareClass::B => (Side::Left, Side::Right),
            SquareClass::C => (Side::Top, Side::Right),
            SquareClass::D => (Side::Right, Side::Bottom),
            SquareClass::E => (Side::Bottom, Side::Left),
            SquareClass::F => (Side::Left, Side::Top),
        }
    }

    pub fn start(self) -> Side {
        self.sides().0
    }

    pub fn end(self) -> Side {
        self.sides().1
    }

    /// The class of a cell whose path neighbours lie across `a` and `b`.
    pub fn from_sides(a: Side, b: Side) -> Option<SquareClass> {
        SquareClass::ALL.into_iter().find(|k| {
            let (x, y) = k.sides();
            (x, y) == (a, b) || (y, x) == (a, b)
        })
    }

    pub fn letter(self) -> char {
        (b'A' + self as u8) as char
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for SquareClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(SquareClass::A),
            "B" | "b" => Ok(SquareClass::B),
            "C" | "c" => Ok(SquareClass::C),
            "D" | "d" => Ok(SquareClass::D),
            "E" | "e" => Ok(SquareClass::E),
            "F" | "f" => Ok(SquareClass::F),
            _ => Err(format!("unknown kind `{s}` (expected one of A..F)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPath {
    pub cells: Vec<Cell>,
    pub kind: PathKind,
    pub classes: Vec<SquareClass>,
}

impl CellPath {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of squares of each class, in `A..F` order.
    pub fn class_counts(&self) -> [u64; 6] {
        let mut counts = [0u64; 6];
        for c in &self.classes {
            counts[c.index()] += 1;
        }
        counts
    }
}

/// Classes of consecutive path cells, with phantom neighbours across
/// `start` before the first cell and across `end` after the last.
pub fn classify_cells(cells: &[Cell], start: Side, end: Side) -> Result<Vec<SquareClass>> {
    if cells.is_empty() {
        return Err(Error::Invalid("empty path".into()));
    }
    if cells.len() <= 4096 {
        let mut seen = HashSet::with_capacity(cells.len());
        for &c in cells {
            if !seen.insert(c) {
                return Err(Error::RepeatedCell { cell: c });
            }
        }
    } else {
        let mut sorted = cells.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedCell { cell: w[0] });
        }
    }
    let n = cells.len();
    let mut classes = Vec::with_capacity(n);
    for k in 0..n {
        let back = if k == 0 {
            start
        } else {
            Side::between(cells[k], cells[k - 1]).ok_or(Error::NonAdjacent {
                a: cells[k - 1],
                b: cells[k],
            })?
        };
        let front = if k + 1 == n {
            end
        } else {
            Side::between(cells[k], cells[k + 1]).ok_or(Error::NonAdjacent {
                a: cells[k],
                b: cells[k + 1],
            })?
        };
        let class = SquareClass::from_sides(back, front).ok_or_else(|| {
            Error::Invalid(format!(
                "cell {} has both path neighbours across its {back} side",
                cells[k]
            ))
        })?;
        classes.push(class);
    }
    Ok(classes)
}

/// Labels each cell of an exit-to-exit path of `kind` in `p`.
pub fn classify_path(p: &Pattern, cells: &[Cell], kind: PathKind) -> Result<CellPath> {
    let exits = find_exits(p);
    let (start, end) = kind.sides();
    let first = *cells.first().ok_or_else(|| Error::Invalid("empty path".into()))?;
    let last = *cells.last().expect("nonempty");
    if !exits.on(start).contains(&first) {
        return Err(Error::NotAnExit {
            cell: first,
            side: start.name(),
        });
    }
    if !exits.on(end).contains(&last) {
        return Err(Error::NotAnExit {
            cell: last,
            side: end.name(),
        });
    }
    let classes = classify_cells(cells, start, end)?;
    Ok(CellPath {
        cells: cells.to_vec(),
        kind,
        classes,
    })
}

/// The unique `kind` path between the exits of a pattern whose graph is a
/// tree with one exit pair per direction.
pub fn exit_path(p: &Pattern, kind: PathKind) -> Result<CellPath> {
    let exits = find_exits(p);
    let (start, end) = kind.sides();
    let missing = |side: Side| Error::NotLabyrinth {
        context: format!("{}x{} pattern", p.m(), p.s()),
        witnesses: vec![format!("no unique {side} exit")],
    };
    let from = exits.unique(start).ok_or_else(|| missing(start))?;
    let to = exits.unique(end).ok_or_else(|| missing(end))?;
    let cells = tree_path(&build_graph(p), from, to)?;
    classify_path(p, &cells, kind)
}

/// All six exit paths of a labyrinth pattern, in `A..F` order.
pub fn pattern_paths(p: &Pattern) -> Result<[CellPath; 6]> {
    require_labyrinth(p, "pattern")?;
    let paths: Vec<CellPath> = SquareClass::ALL
        .into_iter()
        .map(|k| exit_path(p, k))
        .collect::<Result<_>>()?;
    Ok(paths.try_into().expect("six paths"))
}

pub(crate) fn require_labyrinth(p: &Pattern, context: &str) -> Result<()> {
    let report = validate(p);
    if report.is_labyrinth {
        Ok(())
    } else {
        Err(Error::NotLabyrinth {
            context: format!("{context} ({}x{})", p.m(), p.s()),
            witnesses: report.witnesses,
        })
    }
}

/// Per-pattern exit paths, computed once per distinct pattern of a sequence.
#[derive(Debug, Default)]
pub(crate) struct PathCache {
    paths: HashMap<usize, [CellPath; 6]>,
}

impl PathCache {
    pub(crate) fn get(&mut self, seq: &LabyrinthSequence, k: usize) -> Result<&[CellPath; 6]> {
        let idx = seq.index_at(k)?;
        if let Entry::Vacant(slot) = self.paths.entry(idx) {
            let p = &seq.patterns()[idx];
            require_labyrinth(p, &format!("pattern at level {k}"))?;
            slot.insert(pattern_paths(p)?);
        }
        Ok(&self.paths[&idx])
    }
}

/// The level-`n` path of `kind`, built by replacing every square of the
/// level-`k` path with the matching exit path of pattern `k + 1`.
pub fn substituted_path(
    seq: &LabyrinthSequence,
    n: usize,
    kind: PathKind,
    budget: Budget,
) -> Result<CellPath> {
    if n == 0 {
        return Err(Error::Invalid("paths are defined from level 1".into()));
    }
    seq.check_level(n)?;
    budget.check(n, &seq.width_product(n)?, &seq.height_product(n)?)?;
    let mut cache = PathCache::default();
    let first = cache.get(seq, 1)?[kind.index()].clone();
    let mut cells = first.cells;
    let mut classes = first.classes;

    for k in 2..=n {
        let (mk, sk) = {
            let p = seq.pattern(k)?;
            (p.m(), p.s())
        };
        let subs = cache.get(seq, k)?;
        let total: usize = classes.iter().map(|c| subs[c.index()].len()).sum();
        let mut next_cells = Vec::with_capacity(total);
        let mut next_classes = Vec::with_capacity(total);
        for (idx, (&cell, &class)) in cells.iter().zip(&classes).enumerate() {
            let entry = if idx == 0 {
                kind.start()
            } else {
                Side::between(cell, cells[idx - 1]).expect("adjacent path cells")
            };
            let sub = &subs[class.index()];
            let place = |c: &Cell| Cell::new(cell.i * mk + c.i, cell.j * sk + c.j);
            if sub.kind.start() == entry {
                next_cells.extend(sub.cells.iter().map(place));
                next_classes.extend(sub.classes.iter().copied());
            } else {
                next_cells.extend(sub.cells.iter().rev().map(place));
                next_classes.extend(sub.classes.iter().rev().copied());
            }
        }
        cells = next_cells;
        classes = next_classes;
    }
    Ok(CellPath {
        cells,
        kind,
        classes,
    })
}

/// Outcome of comparing shortest exit paths at levels 1 and 2 of the
/// self-similar sequence of a wild pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WildProbe {
    /// Every level-2 path cell lies in a cell of the level-1 path.
    pub contained: bool,
    pub level1: Vec<Cell>,
    pub level2: Vec<Cell>,
    /// Level-2 path cells whose parent cell is off the level-1 path.
    pub outside: Vec<Cell>,
}

/// Compares the top-to-bottom shortest paths of `W_1 = p` and `W_2`, using
/// the vertical exit pair with the smallest column at each level.
pub fn wild_containment_probe(p: &Pattern, budget: Budget) -> Result<WildProbe> {
    let seq = LabyrinthSequence::constant(p.clone());
    let w2 = build_level(&seq, 2, budget)?;
    let top_bottom = |q: &Pattern| -> Result<Vec<Cell>> {
        let exits = find_exits(q);
        let &(top, bottom) = exits
            .vertical_pairs
            .first()
            .ok_or(Error::NoVerticalExitPair)?;
        shortest_path(&build_graph(q), top, bottom)
    };
    let level1 = top_bottom(p)?;
    let level2 = top_bottom(w2.as_pattern())?;
    let parents: HashSet<Cell> = level1.iter().copied().collect();
    let outside: Vec<Cell> = level2
        .iter()
        .copied()
        .filter(|c| !parents.contains(&Cell::new(c.i / p.m(), c.j / p.s())))
        .collect();
    Ok(WildProbe {
        contained: outside.is_empty(),
        level1,
        level2,
        outside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;
    use SquareClass::*;

    fn plus() -> Pattern {
        parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap()
    }

    #[test]
    fn class_from_sides_is_symmetric() {
        for k in SquareClass::ALL {
            let (a, b) = k.sides();
            assert_eq!(SquareClass::from_sides(a, b), Some(k));
            assert_eq!(SquareClass::from_sides(b, a), Some(k));
        }
        assert_eq!(SquareClass::from_sides(Side::Top, Side::Top), None);
    }

    #[test]
    fn plus_c_path() {
        let p = plus();
        let c = exit_path(&p, C).unwrap();
        assert_eq!(c.cells, vec![Cell::new(1, 2), Cell::new(1, 1), Cell::new(2, 1)]);
        assert_eq!(c.classes, vec![A, C, B]);
        assert_eq!(exit_path(&p, A).unwrap().classes, vec![A, A, A]);
    }

    #[test]
    fn single_cell_path_takes_both_phantoms() {
        let c = classify_cells(&[Cell::new(2, 2)], Side::Top, Side::Right).unwrap();
        assert_eq!(c, vec![C]);
        let e = classify_cells(&[Cell::new(0, 0)], Side::Bottom, Side::Left).unwrap();
        assert_eq!(e, vec![E]);
    }

    #[test]
    fn classify_rejects_bad_paths() {
        let p = plus();
        assert!(matches!(
            classify_path(&p, &[Cell::new(1, 1), Cell::new(1, 0)], A),
            Err(Error::NotAnExit { .. })
        ));
        assert!(matches!(
            classify_path(&p, &[Cell::new(1, 2), Cell::new(1, 0)], A),
            Err(Error::NonAdjacent { .. })
        ));
    }

    #[test]
    fn non_labyrinth_has_no_paths() {
        assert!(matches!(
            pattern_paths(&Pattern::full(3, 3).unwrap()),
            Err(Error::NotLabyrinth { .. })
        ));
    }

    #[test]
    fn plus_substituted_a_path_is_straight() {
        let seq = LabyrinthSequence::constant(plus());
        let a = substituted_path(&seq, 2, A, Budget::default()).unwrap();
        assert_eq!(a.cells, (0..9).rev().map(|j| Cell::new(4, j)).collect::<Vec<_>>());
        assert!(a.classes.iter().all(|&c| c == A));
    }

    #[test]
    fn plus_is_contained() {
        let probe = wild_containment_probe(&plus(), Budget::default()).unwrap();
        assert!(probe.contained);
        assert_eq!(probe.level2.len(), 9);
    }
}
