//! Level sets `W_n` built by substituting each pattern into every white cell
//! of the previous level.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::sequence::LabyrinthSequence;
use crate::validate::{validate, ValidationReport};

pub const DEFAULT_BUDGET_CELLS: u64 = 100_000_000;

/// Cap on `m(n) * s(n)` for any grid this crate materializes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_cells: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cells: DEFAULT_BUDGET_CELLS,
        }
    }
}

impl Budget {
    pub fn cells(max_cells: u64) -> Self {
        Budget { max_cells }
    }

    pub fn check(&self, level: usize, width: &BigUint, height: &BigUint) -> Result<(usize, usize)> {
        let cells = width * height;
        let fits = cells.to_u64().is_some_and(|c| c <= self.max_cells);
        match (fits, width.to_usize(), height.to_usize()) {
            (true, Some(w), Some(h)) => Ok((w, h)),
            _ => Err(Error::BudgetExceeded {
                level,
                cells: cells.to_string(),
                limit: self.max_cells,
            }),
        }
    }
}

/// The white cells `W_n` of level `n` on the `m(n) x s(n)` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSet {
    level: usize,
    pattern: Pattern,
}

impl LevelSet {
    /// Level 0: the unit square as a single white cell.
    pub fn unit() -> Self {
        LevelSet {
            level: 0,
            pattern: Pattern::full(1, 1).expect("1x1 pattern"),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn width(&self) -> usize {
        self.pattern.m()
    }

    pub fn height(&self) -> usize {
        self.pattern.s()
    }

    pub fn white_count(&self) -> u64 {
        self.pattern.white_count()
    }

    pub fn as_pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn into_pattern(self) -> Pattern {
        self.pattern
    }
}

impl AsRef<Pattern> for LevelSet {
    fn as_ref(&self) -> &Pattern {
        &self.pattern
    }
}

impl AsRef<Pattern> for Pattern {
    fn as_ref(&self) -> &Pattern {
        self
    }
}

/// Replaces every white cell of `base` by a copy of `next`.
pub fn substitute(base: &Pattern, next: &Pattern, budget: Budget) -> Result<Pattern> {
    substitute_at(base, next, budget, 0)
}

fn substitute_at(base: &Pattern, next: &Pattern, budget: Budget, level: usize) -> Result<Pattern> {
    let (mn, sn) = (next.m(), next.s());
    let (w, h) = budget.check(
        level,
        &(BigUint::from(base.m()) * mn),
        &(BigUint::from(base.s()) * sn),
    )?;
    let mut grid = crate::grid::BitGrid::new(w, h);
    let bg = base.grid();
    let ng = next.grid();
    for bj in 0..base.s() {
        let whites: Vec<usize> = (0..base.m()).filter(|&bi| bg.get(bi, bj)).collect();
        if whites.is_empty() {
            continue;
        }
        for nj in 0..sn {
            let src = ng.row(nj);
            let out_row = bj * sn + nj;
            for &bi in &whites {
                grid.or_row_bits(out_row, bi * mn, src, mn);
            }
        }
    }
    Pattern::from_grid(grid)
}

impl LevelSet {
    /// The next level: substitutes `next` into this level set.
    pub fn refine(&self, next: &Pattern, budget: Budget) -> Result<LevelSet> {
        let level = self.level + 1;
        Ok(LevelSet {
            level,
            pattern: substitute_at(&self.pattern, next, budget, level)?,
        })
    }
}

/// `W_n`, the left fold of substitution over patterns `1..=n`.
pub fn build_level(seq: &LabyrinthSequence, n: usize, budget: Budget) -> Result<LevelSet> {
    seq.check_level(n)?;
    budget.check(n, &seq.width_product(n)?, &seq.height_product(n)?)?;
    let mut level = LevelSet::unit();
    for k in 1..=n {
        level = level.refine(seq.pattern(k)?, budget)?;
    }
    Ok(level)
}

/// Validates `W_n` viewed as a single pattern.
pub fn level_is_labyrinth(
    seq: &LabyrinthSequence,
    n: usize,
    budget: Budget,
) -> Result<ValidationReport> {
    Ok(validate(build_level(seq, n, budget)?.as_pattern()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{parse_pattern, Cell};
    use crate::sequence::Tail;

    fn plus() -> Pattern {
        parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap()
    }

    #[test]
    fn plus_into_plus() {
        let w = substitute(&plus(), &plus(), Budget::default()).unwrap();
        assert_eq!((w.m(), w.s(), w.white_count()), (9, 9, 25));
        // Center of the center cell, and a corner of an arm's sub-cross.
        assert!(w.is_white(Cell::new(4, 4)));
        assert!(!w.is_white(Cell::new(3, 3)));
        assert!(w.is_white(Cell::new(4, 1)));
    }

    #[test]
    fn unit_substitution_is_identity() {
        let one = Pattern::full(1, 1).unwrap();
        assert_eq!(substitute(&plus(), &one, Budget::default()).unwrap(), plus());
        assert_eq!(substitute(&one, &plus(), Budget::default()).unwrap(), plus());
    }

    #[test]
    fn level_zero_is_unit_square() {
        let seq = LabyrinthSequence::constant(plus());
        let w0 = build_level(&seq, 0, Budget::default()).unwrap();
        assert_eq!((w0.width(), w0.height(), w0.white_count()), (1, 1, 1));
    }

    #[test]
    fn plus_level_three() {
        let seq = LabyrinthSequence::constant(plus());
        let w3 = build_level(&seq, 3, Budget::default()).unwrap();
        assert_eq!((w3.width(), w3.white_count()), (27, 125));
    }

    #[test]
    fn budget_refuses_big_levels() {
        let seq = LabyrinthSequence::constant(plus());
        match build_level(&seq, 99, Budget::default()) {
            Err(Error::BudgetExceeded { level: 99, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(build_level(&seq, 2, Budget::cells(80)).is_err());
        assert!(build_level(&seq, 2, Budget::cells(81)).is_ok());
    }

    #[test]
    fn finite_sequence_stops() {
        let seq = LabyrinthSequence::new(vec![plus()], Tail::Finite).unwrap();
        assert!(matches!(
            build_level(&seq, 2, Budget::default()),
            Err(Error::UndefinedLevel { level: 2, .. })
        ));
    }

    #[test]
    fn rectangular_substitution() {
        let a = Pattern::from_cells(3, 2, [(0, 0), (1, 0), (2, 1)]).unwrap();
        let b = Pattern::from_cells(2, 3, [(0, 0), (1, 2)]).unwrap();
        let w = substitute(&a, &b, Budget::default()).unwrap();
        assert_eq!((w.m(), w.s(), w.white_count()), (6, 6, 6));
        assert!(w.is_white(Cell::new(4 + 1, 3 + 2)));
    }
}
