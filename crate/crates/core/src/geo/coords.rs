//! Exit points of the limit set from per-level exit anchors.
//!
//! The top exit's abscissa is `sum_k i_k / m(k)` where `i_k` is the column of
//! the top exit cell of pattern `k`. The left exit's ordinate is the same sum
//! over exit rows with height products. Eventually periodic sequences have a
//! rational closed form for the infinite sum.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exits::{find_exits, Side};
use crate::path::require_labyrinth;
use crate::pattern::Pattern;
use crate::sequence::LabyrinthSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (ratio_f64(&self.x), ratio_f64(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub(crate) fn ratio_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// The four exits, top, bottom, left and right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitPoints {
    pub top: Point,
    pub bottom: Point,
    pub left: Point,
    pub right: Point,
}

impl ExitPoints {
    fn from_sums(horizontal: BigRational, vertical: BigRational) -> Self {
        let zero = BigRational::zero();
        let one = BigRational::one();
        ExitPoints {
            top: Point::new(horizontal.clone(), one.clone()),
            bottom: Point::new(horizontal, zero.clone()),
            left: Point::new(zero, vertical.clone()),
            right: Point::new(one, vertical),
        }
    }

    pub fn on(&self, side: Side) -> &Point {
        match side {
            Side::Top => &self.top,
            Side::Bottom => &self.bottom,
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExitCoordinates {
    pub level: usize,
    /// Partial sums over levels `1..=level`.
    pub partial: ExitPoints,
    /// Upper bound on the distance from a partial coordinate to its limit.
    pub tail_bound: BigRational,
    /// Exact limit, for sequences with a repeating tail.
    pub limit: Option<ExitPoints>,
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// Column of the top exit and row of the left exit of a labyrinth pattern.
fn anchors(p: &Pattern) -> (usize, usize) {
    let e = find_exits(p);
    let top = e.unique(Side::Top).expect("labyrinth pattern");
    let left = e.unique(Side::Left).expect("labyrinth pattern");
    (top.i, left.j)
}

/// (top column, left row, width, height).
type Anchor = (usize, usize, usize, usize);

struct Anchors {
    /// Indexed by pattern.
    data: Vec<Anchor>,
}

impl Anchors {
    fn of(seq: &LabyrinthSequence, indices: impl IntoIterator<Item = usize>) -> Result<Anchors> {
        let mut data = vec![(0, 0, 0, 0); seq.patterns().len()];
        let mut done = vec![false; seq.patterns().len()];
        for idx in indices {
            if done[idx] {
                continue;
            }
            let p = &seq.patterns()[idx];
            require_labyrinth(p, &format!("pattern {}", idx + 1))?;
            let (i, j) = anchors(p);
            data[idx] = (i, j, p.m(), p.s());
            done[idx] = true;
        }
        Ok(Anchors { data })
    }
}

/// Partial sums of the exit series through level `n`, with the exact limit
/// when the sequence repeats.
pub fn exit_coordinates(seq: &LabyrinthSequence, n: usize) -> Result<ExitCoordinates> {
    seq.check_level(n)?;
    let used: Vec<usize> = (1..=n).map(|k| seq.index_at(k)).collect::<Result<_>>()?;
    let anchors = Anchors::of(seq, used.iter().copied())?;
    let mut hx = BigRational::zero();
    let mut vy = BigRational::zero();
    let mut mw = BigInt::one();
    let mut sh = BigInt::one();
    for &idx in &used {
        let (i, j, m, s) = anchors.data[idx];
        mw *= big(m);
        sh *= big(s);
        hx += ratio(big(i), mw.clone());
        vy += ratio(big(j), sh.clone());
    }
    let tail_bound = std::cmp::max(ratio(BigInt::one(), mw), ratio(BigInt::one(), sh));
    let limit = match seq.periodic_decomposition() {
        Some(_) => Some(limit_points(seq)?),
        None => None,
    };
    Ok(ExitCoordinates {
        level: n,
        partial: ExitPoints::from_sums(hx, vy),
        tail_bound,
        limit,
    })
}

/// Closed form of both exit series for an eventually periodic sequence.
fn limit_points(seq: &LabyrinthSequence) -> Result<ExitPoints> {
    let (prefix, cycle) = seq.periodic_decomposition().ok_or(Error::NoLimit)?;
    let anchors = Anchors::of(seq, prefix.iter().chain(&cycle).copied())?;
    let axis = |pick: fn(&Anchor) -> (usize, usize)| -> BigRational {
        let mut sum = BigRational::zero();
        let mut scale = BigInt::one();
        for &idx in &prefix {
            let (a, w) = pick(&anchors.data[idx]);
            scale *= big(w);
            sum += ratio(big(a), scale.clone());
        }
        // One period relative to the prefix scale, then the geometric factor.
        let mut period_sum = BigRational::zero();
        let mut period_scale = BigInt::one();
        for &idx in &cycle {
            let (a, w) = pick(&anchors.data[idx]);
            period_scale *= big(w);
            period_sum += ratio(big(a), period_scale.clone());
        }
        let factor = ratio(period_scale.clone(), period_scale - BigInt::one());
        sum + period_sum * factor / BigRational::from_integer(scale)
    };
    let horizontal = axis(|&(i, _, m, _)| (i, m));
    let vertical = axis(|&(_, j, _, s)| (j, s));
    Ok(ExitPoints::from_sums(horizontal, vertical))
}

/// The exact exit point of the limit set on `side`.
pub fn exit_point(seq: &LabyrinthSequence, side: Side) -> Result<Point> {
    Ok(limit_points(seq)?.on(side).clone())
}

/// Whether the level-`n` cell `(i, j)` is white, by reading the cell's
/// mixed-radix digits against each pattern.
pub fn cell_is_white(seq: &LabyrinthSequence, n: usize, i: &BigUint, j: &BigUint) -> Result<bool> {
    let mut i = i.clone();
    let mut j = j.clone();
    for k in (1..=n).rev() {
        let p = seq.pattern(k)?;
        let (qi, ri) = i.div_rem(&BigUint::from(p.m()));
        let (qj, rj) = j.div_rem(&BigUint::from(p.s()));
        let ri = usize::try_from(&ri).expect("digit below pattern width");
        let rj = usize::try_from(&rj).expect("digit below pattern height");
        if !p.grid().get(ri, rj) {
            return Ok(false);
        }
        i = qi;
        j = qj;
    }
    Ok(i.is_zero() && j.is_zero())
}

/// Candidate cell indices along one axis whose closed interval holds `t`.
fn closed_indices(t: &BigRational, cells: &BigUint) -> Vec<BigUint> {
    let scaled = t * BigRational::from_integer(BigInt::from(cells.clone()));
    let floor = scaled.floor().to_integer();
    let mut out = Vec::new();
    let candidates = if scaled.is_integer() {
        vec![floor.clone() - BigInt::one(), floor]
    } else {
        vec![floor]
    };
    let limit = BigInt::from(cells.clone());
    for c in candidates {
        if c >= BigInt::zero() && c < limit {
            out.push(c.to_biguint().expect("nonnegative"));
        }
    }
    out
}

/// For levels `1..=n_max`, how many white cells of `W_n` contain the exit
/// of the limit set on `side` (cells are closed squares).
pub fn exit_membership_counts(
    seq: &LabyrinthSequence,
    side: Side,
    n_max: usize,
) -> Result<Vec<u64>> {
    let point = exit_point(seq, side)?;
    let mut counts = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let m = seq.width_product(n)?;
        let s = seq.height_product(n)?;
        let mut count = 0;
        for i in closed_indices(&point.x, &m) {
            for j in closed_indices(&point.y, &s) {
                if cell_is_white(seq, n, &i, &j)? {
                    count += 1;
                }
            }
        }
        counts.push(count);
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;
    use crate::sequence::Tail;
    use num_traits::Signed;

    fn plus() -> Pattern {
        parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn plus_exits_tend_to_midpoints() {
        let seq = LabyrinthSequence::constant(plus());
        let e = exit_coordinates(&seq, 3).unwrap();
        assert_eq!(e.partial.top.x, q(1, 3) + q(1, 9) + q(1, 27));
        assert_eq!(e.tail_bound, q(1, 27));
        let lim = e.limit.unwrap();
        assert_eq!(lim.top, Point::new(q(1, 2), q(1, 1)));
        assert_eq!(lim.left, Point::new(q(0, 1), q(1, 2)));
        assert!((lim.top.x.clone() - e.partial.top.x).abs() <= e.tail_bound);
    }

    #[test]
    fn finite_sequences_have_no_limit() {
        let seq = LabyrinthSequence::new(vec![plus(), plus()], Tail::Finite).unwrap();
        let e = exit_coordinates(&seq, 2).unwrap();
        assert!(e.limit.is_none());
        assert!(matches!(exit_point(&seq, Side::Top), Err(Error::NoLimit)));
    }

    #[test]
    fn plus_top_exit_in_one_cell_per_level() {
        let seq = LabyrinthSequence::constant(plus());
        assert_eq!(exit_membership_counts(&seq, Side::Top, 5).unwrap(), vec![1; 5]);
    }

    #[test]
    fn cell_digits() {
        let seq = LabyrinthSequence::constant(plus());
        let w = |i: u32, j: u32| cell_is_white(&seq, 2, &i.into(), &j.into()).unwrap();
        assert!(w(4, 4));
        assert!(!w(3, 3));
        assert!(w(4, 1));
        assert!(w(0, 4));
        assert!(!w(0, 3));
    }

    #[test]
    fn non_labyrinth_prefix_is_rejected() {
        let seq = LabyrinthSequence::constant(Pattern::full(3, 3).unwrap());
        assert!(matches!(exit_coordinates(&seq, 1), Err(Error::NotLabyrinth { .. })));
    }
}
