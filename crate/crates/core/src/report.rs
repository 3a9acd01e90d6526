//! Per-level records as text or CSV.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::path::SquareClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected text or csv)")),
        }
    }
}

/// One row of a level table; absent quantities are left blank.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelRecord {
    pub n: usize,
    pub m: BigUint,
    pub s: BigUint,
    pub lengths: Option<[BigUint; 6]>,
    pub ratio: Option<f64>,
    pub components: Option<usize>,
    pub max_diameter: Option<BigRational>,
}

impl LevelRecord {
    pub fn new(n: usize, m: BigUint, s: BigUint) -> Self {
        LevelRecord {
            n,
            m,
            s,
            lengths: None,
            ratio: None,
            components: None,
            max_diameter: None,
        }
    }

    fn fields(&self) -> Vec<(String, String)> {
        let mut f = vec![
            ("n".to_string(), self.n.to_string()),
            ("m".to_string(), self.m.to_string()),
            ("s".to_string(), self.s.to_string()),
        ];
        for k in SquareClass::ALL {
            let v = self
                .lengths
                .as_ref()
                .map_or(String::new(), |l| l[k.index()].to_string());
            f.push((k.to_string(), v));
        }
        f.push(("ratio".into(), self.ratio.map_or(String::new(), |r| format!("{r:.12}"))));
        f.push((
            "components".into(),
            self.components.map_or(String::new(), |c| c.to_string()),
        ));
        f.push((
            "max_diameter".into(),
            self.max_diameter
                .as_ref()
                .map_or(String::new(), |d| d.to_string()),
        ));
        f
    }
}

pub const CSV_HEADER: &str = "n,m,s,A,B,C,D,E,F,ratio,components,max_diameter";

pub fn to_csv(records: &[LevelRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let vals: Vec<String> = r.fields().into_iter().map(|(_, v)| v).collect();
        out.push_str(&vals.join(","));
        out.push('\n');
    }
    out
}

/// `key=value` pairs, blank fields omitted, one record per line.
pub fn to_text(records: &[LevelRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let pairs: Vec<String> = r
            .fields()
            .into_iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "{}", pairs.join(" "));
    }
    out
}

pub fn render(records: &[LevelRecord], format: Format) -> String {
    match format {
        Format::Text => to_text(records),
        Format::Csv => to_csv(records),
    }
}

/// Reads the length columns back from either format, keyed by level.
pub fn parse_lengths(text: &str) -> Result<Vec<(usize, [BigUint; 6])>> {
    let mut out = Vec::new();
    let mut header: Option<Vec<String>> = None;
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse {
            line: k + 1,
            column: 1,
            message,
        };
        let pairs: Vec<(String, String)> = if line.contains('=') {
            line.split_whitespace()
                .map(|p| {
                    p.split_once('=')
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .ok_or_else(|| bad(format!("expected key=value, got `{p}`")))
                })
                .collect::<Result<_>>()?
        } else if header.is_none() {
            header = Some(line.split(',').map(str::to_string).collect());
            continue;
        } else {
            let h = header.as_ref().expect("header");
            let vals: Vec<&str> = line.split(',').collect();
            if vals.len() != h.len() {
                return Err(bad(format!("expected {} fields, found {}", h.len(), vals.len())));
            }
            h.iter().cloned().zip(vals.iter().map(|v| v.to_string())).collect()
        };
        let get = |key: &str| -> Result<String> {
            pairs
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.clone())
                .filter(|v| !v.is_empty())
                .ok_or_else(|| bad(format!("missing field `{key}`")))
        };
        let n: usize = get("n")?
            .parse()
            .map_err(|_| bad("bad level".into()))?;
        let mut lengths: [BigUint; 6] = Default::default();
        for c in SquareClass::ALL {
            lengths[c.index()] = get(&c.to_string())?
                .parse()
                .map_err(|_| bad(format!("bad length for {c}")))?;
        }
        out.push((n, lengths));
    }
    Ok(out)
}
