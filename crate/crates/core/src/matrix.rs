//! Path matrices: 6x6 counts of square classes along each exit path.
//!
//! Row `x`, column `y` holds the number of `y`-squares on the `x`-path.
//! Rows and columns run `A..F`. For a sequence the level-`n` matrix is the
//! left-to-right product `M_1 * M_2 * ... * M_n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::path::{pattern_paths, PathCache, SquareClass};
use crate::pattern::Pattern;
use crate::sequence::LabyrinthSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMatrix {
    entries: [[BigUint; 6]; 6],
}

impl PathMatrix {
    pub fn zero() -> Self {
        PathMatrix {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| BigUint::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = PathMatrix::zero();
        for k in 0..6 {
            m.entries[k][k] = BigUint::one();
        }
        m
    }

    pub fn from_counts(rows: [[u64; 6]; 6]) -> Self {
        PathMatrix {
            entries: rows.map(|r| r.map(BigUint::from)),
        }
    }

    pub fn get(&self, row: SquareClass, col: SquareClass) -> &BigUint {
        &self.entries[row.index()][col.index()]
    }

    pub fn row(&self, row: SquareClass) -> &[BigUint; 6] {
        &self.entries[row.index()]
    }

    pub fn entries(&self) -> &[[BigUint; 6]; 6] {
        &self.entries
    }

    /// Entries as `u64`, if they all fit.
    pub fn to_u64(&self) -> Option<[[u64; 6]; 6]> {
        let mut out = [[0u64; 6]; 6];
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                out[r][c] = u64::try_from(v).ok()?;
            }
        }
        Some(out)
    }

    pub fn mul(&self, rhs: &PathMatrix) -> PathMatrix {
        let mut out = PathMatrix::zero();
        for r in 0..6 {
            for c in 0..6 {
                let mut acc = BigUint::zero();
                for k in 0..6 {
                    if !self.entries[r][k].is_zero() && !rhs.entries[k][c].is_zero() {
                        acc += &self.entries[r][k] * &rhs.entries[k][c];
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        out
    }

    /// Row sums: the lengths `A(n)..F(n)` of the six exit paths.
    pub fn path_lengths(&self) -> [BigUint; 6] {
        std::array::from_fn(|r| self.entries[r].iter().sum())
    }

    /// Six lines of six space-separated decimals.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// One `row,col,count` record per entry, with a header line.
    pub fn to_records(&self) -> String {
        let mut s = String::from("row,col,count\n");
        for r in SquareClass::ALL {
            for c in SquareClass::ALL {
                s.push_str(&format!("{r},{c},{}\n", self.get(r, c)));
            }
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<PathMatrix> {
        let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if rows.len() != 6 {
            return Err(Error::Invalid(format!("expected 6 matrix rows, found {}", rows.len())));
        }
        let mut m = PathMatrix::zero();
        for (r, line) in rows.iter().enumerate() {
            let vals: Vec<&str> = line.split_whitespace().collect();
            if vals.len() != 6 {
                return Err(Error::Parse {
                    line: r + 1,
                    column: 1,
                    message: format!("expected 6 entries, found {}", vals.len()),
                });
            }
            for (c, v) in vals.iter().enumerate() {
                m.entries[r][c] = v.parse().map_err(|_| Error::Parse {
                    line: r + 1,
                    column: c + 1,
                    message: format!("bad entry `{v}`"),
                })?;
            }
        }
        Ok(m)
    }

    pub fn parse_records(text: &str) -> Result<PathMatrix> {
        let mut m = PathMatrix::zero();
        let mut seen = [[false; 6]; 6];
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (k == 0 && line == "row,col,count") {
                continue;
            }
            let bad = |message: String| Error::Parse {
                line: k + 1,
                column: 1,
                message,
            };
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 3 {
                return Err(bad(format!("expected `row,col,count`, got `{line}`")));
            }
            let r: SquareClass = f[0].parse().map_err(bad)?;
            let c: SquareClass = f[1].parse().map_err(bad)?;
            let v: BigUint = f[2]
                .parse()
                .map_err(|_| bad(format!("bad count `{}`", f[2])))?;
            if seen[r.index()][c.index()] {
                return Err(bad(format!("duplicate entry {r},{c}")));
            }
            seen[r.index()][c.index()] = true;
            m.entries[r.index()][c.index()] = v;
        }
        if seen.iter().flatten().any(|s| !s) {
            return Err(Error::Invalid("record set is missing entries".into()));
        }
        Ok(m)
    }
}

impl fmt::Display for PathMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `M_k` for a single labyrinth pattern.
pub fn path_matrix(p: &Pattern) -> Result<PathMatrix> {
    let paths = pattern_paths(p)?;
    Ok(PathMatrix::from_counts(paths.map(|path| path.class_counts())))
}

/// `M(n) = M_1 * ... * M_n`; `M(0)` is the identity.
pub fn matrix_product(seq: &LabyrinthSequence, n: usize) -> Result<PathMatrix> {
    MatrixProducts::new(seq).take(n)
}

/// Successive products `M(1), M(2), ...` sharing one per-pattern cache.
pub struct MatrixProducts<'a> {
    seq: &'a LabyrinthSequence,
    cache: PathCache,
    matrices: HashMap<usize, PathMatrix>,
    current: PathMatrix,
    level: usize,
}

impl<'a> MatrixProducts<'a> {
    pub fn new(seq: &'a LabyrinthSequence) -> Self {
        MatrixProducts {
            seq,
            cache: PathCache::default(),
            matrices: HashMap::new(),
            current: PathMatrix::identity(),
            level: 0,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn current(&self) -> &PathMatrix {
        &self.current
    }

    /// Advances one level and returns `M(level)`.
    pub fn advance(&mut self) -> Result<&PathMatrix> {
        let k = self.level + 1;
        self.seq.check_level(k)?;
        let idx = self.seq.index_at(k)?;
        if !self.matrices.contains_key(&idx) {
            let paths = self.cache.get(self.seq, k)?;
            let counts: Vec<[u64; 6]> = paths.iter().map(|p| p.class_counts()).collect();
            let m = PathMatrix::from_counts(counts.try_into().expect("six rows"));
            self.matrices.insert(idx, m);
        }
        self.current = self.current.mul(&self.matrices[&idx]);
        self.level = k;
        Ok(&self.current)
    }

    fn take(mut self, n: usize) -> Result<PathMatrix> {
        self.seq.check_level(n)?;
        while self.level < n {
            self.advance()?;
        }
        Ok(self.current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    fn plus() -> Pattern {
        parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap()
    }

    const PLUS_M: [[u64; 6]; 6] = [
        [3, 0, 0, 0, 0, 0],
        [0, 3, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0],
        [1, 1, 0, 1, 0, 0],
        [1, 1, 0, 0, 1, 0],
        [1, 1, 0, 0, 0, 1],
    ];

    #[test]
    fn plus_matrix() {
        let m = path_matrix(&plus()).unwrap();
        assert_eq!(m.to_u64().unwrap(), PLUS_M);
        let lengths = m.path_lengths().map(|v| u64::try_from(&v).unwrap());
        assert_eq!(lengths, [3; 6]);
    }

    #[test]
    fn plus_squared_by_hand() {
        let seq = LabyrinthSequence::constant(plus());
        let m2 = matrix_product(&seq, 2).unwrap().to_u64().unwrap();
        assert_eq!(m2[0], [9, 0, 0, 0, 0, 0]);
        // Row C: one A-square (3 A), one B-square (3 B), one C-square (1,1,1,0,0,0).
        assert_eq!(m2[2], [4, 4, 1, 0, 0, 0]);
        assert_eq!(matrix_product(&seq, 0).unwrap(), PathMatrix::identity());
        assert_eq!(matrix_product(&seq, 1).unwrap().to_u64().unwrap(), PLUS_M);
    }

    #[test]
    fn text_and_records_parse_back() {
        let m = PathMatrix::from_counts(PLUS_M).mul(&PathMatrix::from_counts(PLUS_M));
        assert_eq!(PathMatrix::parse_text(&m.to_text()).unwrap(), m);
        assert_eq!(PathMatrix::parse_records(&m.to_records()).unwrap(), m);
        assert!(PathMatrix::parse_records("row,col,count\nA,A,1\n").is_err());
        assert!(PathMatrix::parse_text("1 2 3\n").is_err());
    }
}
