//! Pattern sequences and their cumulative widths.

use std::fmt;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::pattern::Pattern;

/// How a sequence continues past its explicit list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// Undefined beyond the list.
    Finite,
    /// The last pattern repeats forever.
    RepeatLast,
    /// The whole list repeats forever.
    Cycle,
}

impl Tail {
    pub fn name(self) -> &'static str {
        match self {
            Tail::Finite => "finite",
            Tail::RepeatLast => "repeat-last",
            Tail::Cycle => "cycle",
        }
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Tail {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "finite" => Ok(Tail::Finite),
            "repeat-last" => Ok(Tail::RepeatLast),
            "cycle" => Ok(Tail::Cycle),
            _ => Err(format!("unknown tail `{s}` (expected finite, repeat-last or cycle)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabyrinthSequence {
    patterns: Vec<Pattern>,
    tail: Tail,
}

impl LabyrinthSequence {
    pub fn new(patterns: Vec<Pattern>, tail: Tail) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::Invalid("a sequence needs at least one pattern".into()));
        }
        Ok(LabyrinthSequence { patterns, tail })
    }

    /// The self-similar sequence `p, p, p, ...`.
    pub fn constant(p: Pattern) -> Self {
        LabyrinthSequence {
            patterns: vec![p],
            tail: Tail::RepeatLast,
        }
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// Highest defined level, or `None` when the sequence is infinite.
    pub fn max_level(&self) -> Option<usize> {
        match self.tail {
            Tail::Finite => Some(self.patterns.len()),
            _ => None,
        }
    }

    /// Index into [`patterns`](Self::patterns) of the pattern used at level `k >= 1`.
    pub fn index_at(&self, k: usize) -> Result<usize> {
        let len = self.patterns.len();
        if k == 0 {
            return Err(Error::Invalid("pattern levels start at 1".into()));
        }
        match self.tail {
            Tail::Finite if k > len => Err(Error::UndefinedLevel {
                level: k,
                available: len,
            }),
            Tail::Finite => Ok(k - 1),
            Tail::RepeatLast => Ok(k.min(len) - 1),
            Tail::Cycle => Ok((k - 1) % len),
        }
    }

    pub fn pattern(&self, k: usize) -> Result<&Pattern> {
        Ok(&self.patterns[self.index_at(k)?])
    }

    pub fn check_level(&self, n: usize) -> Result<()> {
        match self.max_level() {
            Some(max) if n > max => Err(Error::UndefinedLevel {
                level: n,
                available: max,
            }),
            _ => Ok(()),
        }
    }

    /// `m(n)`, the product of the first `n` widths; `m(0) = 1`.
    pub fn width_product(&self, n: usize) -> Result<BigUint> {
        self.check_level(n)?;
        let mut acc = BigUint::one();
        for k in 1..=n {
            acc *= self.pattern(k)?.m();
        }
        Ok(acc)
    }

    /// `s(n)`, the product of the first `n` heights; `s(0) = 1`.
    pub fn height_product(&self, n: usize) -> Result<BigUint> {
        self.check_level(n)?;
        let mut acc = BigUint::one();
        for k in 1..=n {
            acc *= self.pattern(k)?.s();
        }
        Ok(acc)
    }

    /// Splits level indices into a non-repeating prefix and a repeating
    /// cycle, both as indices into [`patterns`](Self::patterns).
    /// `None` for finite sequences.
    pub fn periodic_decomposition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let len = self.patterns.len();
        match self.tail {
            Tail::Finite => None,
            Tail::RepeatLast => Some(((0..len - 1).collect(), vec![len - 1])),
            Tail::Cycle => Some((Vec::new(), (0..len).collect())),
        }
    }

    pub fn complement(&self) -> Result<LabyrinthSequence> {
        let patterns = self
            .patterns
            .iter()
            .map(Pattern::complement)
            .collect::<Result<Vec<_>>>()?;
        LabyrinthSequence::new(patterns, self.tail)
    }

    pub fn load_manifest(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        parse_manifest(&text, base)
    }
}

/// Parses a sequence manifest; pattern paths resolve against `base`.
pub fn parse_manifest(text: &str, base: &Path) -> Result<LabyrinthSequence> {
    let mut tail = None;
    let mut patterns = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Manifest {
            line: k + 1,
            message,
        };
        match tail {
            None => {
                let rest = line
                    .strip_prefix("sequence ")
                    .ok_or_else(|| err("expected `sequence <tail>`".into()))?;
                tail = Some(rest.trim().parse::<Tail>().map_err(err)?);
            }
            Some(_) => {
                let p = base.join(line.trim());
                let pattern = Pattern::load(&p).map_err(|e| err(format!("{}: {e}", p.display())))?;
                patterns.push(pattern);
            }
        }
    }
    let tail = tail.ok_or(Error::Manifest {
        line: 1,
        message: "missing `sequence <tail>` header".into(),
    })?;
    if patterns.is_empty() {
        return Err(Error::Manifest {
            line: text.lines().count().max(1),
            message: "no pattern paths".into(),
        });
    }
    LabyrinthSequence::new(patterns, tail)
}
