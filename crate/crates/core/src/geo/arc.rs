//! Polyline approximations of the limit arcs between two exits.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::compose::Budget;
use crate::error::Result;
use crate::exits::Side;
use crate::path::{substituted_path, CellPath, PathKind};
use crate::pattern::Cell;
use crate::sequence::LabyrinthSequence;

/// A point of the polyline in half-cell units: cell `(i, j)` has its center
/// at `(2i + 1, 2j + 1)`.
pub type HalfPoint = (i128, i128);

#[derive(Debug, Clone)]
pub struct ArcApproximation {
    pub level: usize,
    pub path: CellPath,
    /// Entry midpoint, cell centers, exit midpoint.
    pub polyline: Vec<HalfPoint>,
    pub width: BigInt,
    pub height: BigInt,
    /// Euclidean length in the unit square.
    pub length: BigRational,
    /// `(k - 1) / (2 max(m(n), s(n)))` for a path of `k` cells.
    pub lower_bound: BigRational,
}

impl ArcApproximation {
    pub fn cell_count(&self) -> usize {
        self.path.len()
    }

    pub fn length_f64(&self) -> f64 {
        super::coords::ratio_f64(&self.length)
    }

    /// Polyline vertices scaled into the unit square.
    pub fn points_f64(&self) -> Vec<(f64, f64)> {
        let w = super::coords::ratio_f64(&BigRational::from_integer(self.width.clone()));
        let h = super::coords::ratio_f64(&BigRational::from_integer(self.height.clone()));
        self.polyline
            .iter()
            .map(|&(x, y)| (x as f64 / (2.0 * w), y as f64 / (2.0 * h)))
            .collect()
    }
}

fn center(c: Cell) -> HalfPoint {
    (2 * c.i as i128 + 1, 2 * c.j as i128 + 1)
}

fn side_midpoint(c: Cell, side: Side) -> HalfPoint {
    let (x, y) = center(c);
    let (dx, dy) = side.offset();
    (x + dx as i128, y + dy as i128)
}

/// The level-`n` polyline for `kind`, with its exact length.
pub fn arc_approximation(
    seq: &LabyrinthSequence,
    n: usize,
    kind: PathKind,
    budget: Budget,
) -> Result<ArcApproximation> {
    let path = substituted_path(seq, n, kind, budget)?;
    let width = BigInt::from(seq.width_product(n)?);
    let height = BigInt::from(seq.height_product(n)?);

    let mut polyline = Vec::with_capacity(path.len() + 2);
    polyline.push(side_midpoint(path.cells[0], kind.start()));
    polyline.extend(path.cells.iter().copied().map(center));
    polyline.push(side_midpoint(*path.cells.last().expect("nonempty path"), kind.end()));

    let (mut sx, mut sy) = (0i128, 0i128);
    for w in polyline.windows(2) {
        sx += (w[1].0 - w[0].0).abs();
        sy += (w[1].1 - w[0].1).abs();
    }
    let two = BigInt::from(2);
    let length = BigRational::new(BigInt::from(sx), &two * &width)
        + BigRational::new(BigInt::from(sy), &two * &height);
    let scale = std::cmp::max(width.clone(), height.clone());
    let lower_bound = BigRational::new(BigInt::from(path.len() - 1), two * scale);
    assert!(length >= lower_bound, "arc shorter than its lower bound");
    Ok(ArcApproximation {
        level: n,
        path,
        polyline,
        width,
        height,
        length,
        lower_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    #[test]
    fn plus_a_arc_is_the_unit_segment() {
        let seq = LabyrinthSequence::constant(parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap());
        let a = arc_approximation(&seq, 3, PathKind::A, Budget::default()).unwrap();
        assert_eq!(a.cell_count(), 27);
        assert_eq!(a.length, BigRational::from_integer(1.into()));
        assert_eq!(a.polyline.first(), Some(&(27, 54)));
        assert_eq!(a.polyline.last(), Some(&(27, 0)));
        assert_eq!(a.lower_bound, BigRational::new(26.into(), 54.into()));
    }

    #[test]
    fn plus_c_arc_turns_once() {
        let seq = LabyrinthSequence::constant(parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap());
        let c = arc_approximation(&seq, 1, PathKind::C, Budget::default()).unwrap();
        assert_eq!(c.polyline, vec![(3, 6), (3, 5), (3, 3), (5, 3), (6, 3)]);
        assert_eq!(c.length, BigRational::from_integer(1.into()));
        let pts = c.points_f64();
        assert_eq!(pts[0], (0.5, 1.0));
        assert_eq!(pts[4], (1.0, 0.5));
    }
}
