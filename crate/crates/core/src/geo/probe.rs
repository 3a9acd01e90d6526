//! Level-by-level connectivity checks for labyrinth sequences and for the
//! carpets generated by their complements.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::compose::{Budget, LevelSet};
use crate::error::Result;
use crate::graph::build_graph;
use crate::path::require_labyrinth;
use crate::sequence::LabyrinthSequence;
use crate::validate::{validate, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectLevel {
    pub n: usize,
    pub components: usize,
    /// Largest component extent, `max(width / m(n), height / s(n))` of its
    /// bounding box.
    pub max_diameter: BigRational,
}

/// Components of `W_n` for a sequence of complemented labyrinth patterns.
/// Each pattern's complement must be a labyrinth pattern.
pub fn disconnectedness_probe(
    complements: &LabyrinthSequence,
    n_max: usize,
    budget: Budget,
) -> Result<Vec<DisconnectLevel>> {
    complements.check_level(n_max)?;
    for (idx, p) in complements.patterns().iter().enumerate() {
        require_labyrinth(&p.complement()?, &format!("complement of pattern {}", idx + 1))?;
    }
    let mut out = Vec::with_capacity(n_max);
    let mut level = LevelSet::unit();
    for n in 1..=n_max {
        budget.check(n, &complements.width_product(n)?, &complements.height_product(n)?)?;
        level = level.refine(complements.pattern(n)?, budget)?;
        out.push(disconnect_level(&level));
    }
    Ok(out)
}

fn disconnect_level(level: &LevelSet) -> DisconnectLevel {
    let comps = build_graph(level.as_pattern()).components();
    // (min_i, max_i, min_j, max_j) per component.
    let mut boxes = vec![(usize::MAX, 0, usize::MAX, 0); comps.count()];
    for (c, l) in comps.cells() {
        let b = &mut boxes[l];
        b.0 = b.0.min(c.i);
        b.1 = b.1.max(c.i);
        b.2 = b.2.min(c.j);
        b.3 = b.3.max(c.j);
    }
    let w = BigInt::from(level.width());
    let h = BigInt::from(level.height());
    let max_diameter = boxes
        .iter()
        .map(|&(i0, i1, j0, j1)| {
            let x = BigRational::new(BigInt::from(i1 - i0 + 1), w.clone());
            let y = BigRational::new(BigInt::from(j1 - j0 + 1), h.clone());
            x.max(y)
        })
        .max()
        .unwrap_or_else(|| BigRational::from_integer(0.into()));
    DisconnectLevel {
        n: level.level(),
        components: comps.count(),
        max_diameter,
    }
}

#[derive(Debug, Clone)]
pub struct ConnectLevel {
    pub n: usize,
    pub white_cells: u64,
    pub report: ValidationReport,
}

impl ConnectLevel {
    /// `G(W_n)` is a tree with exactly one exit pair in each direction.
    pub fn holds(&self) -> bool {
        self.report.property1 && self.report.property2
    }
}

/// Validates `W_1, ..., W_{n_max}` of a labyrinth sequence.
pub fn connectivity_probe(
    seq: &LabyrinthSequence,
    n_max: usize,
    budget: Budget,
) -> Result<Vec<ConnectLevel>> {
    seq.check_level(n_max)?;
    let mut out = Vec::with_capacity(n_max);
    let mut level = LevelSet::unit();
    for n in 1..=n_max {
        budget.check(n, &seq.width_product(n)?, &seq.height_product(n)?)?;
        level = level.refine(seq.pattern(n)?, budget)?;
        out.push(ConnectLevel {
            n,
            white_cells: level.white_count(),
            report: validate(level.as_pattern()),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::pattern::parse_pattern;

    #[test]
    fn plus_complement_splits_into_corners() {
        let plus = parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap();
        let seq = LabyrinthSequence::constant(plus.complement().unwrap());
        let levels = disconnectedness_probe(&seq, 3, Budget::default()).unwrap();
        let counts: Vec<usize> = levels.iter().map(|l| l.components).collect();
        assert_eq!(counts, vec![4, 16, 64]);
        assert_eq!(levels[2].max_diameter, BigRational::new(1.into(), 27.into()));
    }

    #[test]
    fn complement_must_come_from_a_labyrinth() {
        let seq = LabyrinthSequence::constant(parse_pattern("pattern 2 2\n#.\n..\n").unwrap());
        assert!(matches!(
            disconnectedness_probe(&seq, 1, Budget::default()),
            Err(Error::NotLabyrinth { .. })
        ));
    }

    #[test]
    fn plus_levels_stay_trees() {
        let plus = parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap();
        let levels = connectivity_probe(&LabyrinthSequence::constant(plus), 3, Budget::default()).unwrap();
        assert!(levels.iter().all(ConnectLevel::holds));
        assert_eq!(levels[2].white_cells, 125);
    }
}
