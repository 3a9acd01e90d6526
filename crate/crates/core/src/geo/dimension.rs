//! Growth of exit-path lengths against grid widths.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matrix::MatrixProducts;
use crate::path::PathKind;
use crate::sequence::LabyrinthSequence;

/// Natural logarithm of an arbitrary-size positive integer, from its top
/// 64 bits and the binary shift.
pub fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        return (u64::try_from(v).expect("fits in 64 bits") as f64).ln();
    }
    let shift = bits - 64;
    let top = u64::try_from(&(v >> shift)).expect("top 64 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionLevel {
    pub n: usize,
    pub length: BigUint,
    pub m: BigUint,
    pub s: BigUint,
    /// `ln L(n) / ln m(n)`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionEstimate {
    pub kind: PathKind,
    pub levels: Vec<DimensionLevel>,
    /// Number of trailing levels summarized below.
    pub window: usize,
    pub window_min: f64,
    pub window_max: f64,
    /// Largest absolute difference of successive ratios inside the window.
    pub window_spread: f64,
}

impl DimensionEstimate {
    pub fn ratios(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.ratio).collect()
    }

    /// Successive differences `ratio_{n+1} - ratio_n`.
    pub fn differences(&self) -> Vec<f64> {
        self.levels.windows(2).map(|w| w[1].ratio - w[0].ratio).collect()
    }

    /// The last ratio.
    pub fn estimate(&self) -> f64 {
        self.levels.last().map_or(f64::NAN, |l| l.ratio)
    }
}

/// Ratios for levels `1..=n_max`, from exact matrix products. The window
/// defaults to the last half of the levels.
pub fn dimension_estimate(
    seq: &LabyrinthSequence,
    n_max: usize,
    kind: PathKind,
    window: Option<usize>,
) -> Result<DimensionEstimate> {
    if n_max == 0 {
        return Err(Error::Invalid("dimension estimates need n_max >= 1".into()));
    }
    seq.check_level(n_max)?;
    let window = window.unwrap_or(n_max.div_ceil(2));
    if window == 0 || window > n_max {
        return Err(Error::Invalid(format!(
            "window {window} must lie in 1..={n_max}"
        )));
    }
    let mut products = MatrixProducts::new(seq);
    let mut levels = Vec::with_capacity(n_max);
    let mut m = BigUint::from(1u32);
    let mut s = BigUint::from(1u32);
    for n in 1..=n_max {
        let length = products.advance()?.path_lengths()[kind.index()].clone();
        let p = seq.pattern(n)?;
        m *= p.m();
        s *= p.s();
        let ratio = ln_big(&length) / ln_big(&m);
        levels.push(DimensionLevel {
            n,
            length,
            m: m.clone(),
            s: s.clone(),
            ratio,
        });
    }
    let tail = &levels[n_max - window..];
    let window_min = tail.iter().map(|l| l.ratio).fold(f64::INFINITY, f64::min);
    let window_max = tail.iter().map(|l| l.ratio).fold(f64::NEG_INFINITY, f64::max);
    let window_spread = tail
        .windows(2)
        .map(|w| (w[1].ratio - w[0].ratio).abs())
        .fold(0.0, f64::max);
    Ok(DimensionEstimate {
        kind,
        levels,
        window,
        window_min,
        window_max,
        window_spread,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    #[test]
    fn ln_of_large_powers() {
        let v = BigUint::from(3u32).pow(200);
        assert!((ln_big(&v) - 200.0 * 3f64.ln()).abs() < 1e-9);
        assert_eq!(ln_big(&BigUint::from(1u32)), 0.0);
    }

    #[test]
    fn plus_ratio_is_one() {
        let seq = LabyrinthSequence::constant(parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap());
        let d = dimension_estimate(&seq, 12, PathKind::C, None).unwrap();
        assert!(d.ratios().iter().all(|&r| r == 1.0));
        assert_eq!(d.window, 6);
        assert_eq!(d.window_spread, 0.0);
    }

    #[test]
    fn bad_window() {
        let seq = LabyrinthSequence::constant(parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap());
        assert!(dimension_estimate(&seq, 3, PathKind::A, Some(4)).is_err());
        assert!(dimension_estimate(&seq, 0, PathKind::A, None).is_err());
    }
}
