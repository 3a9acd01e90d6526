//! The `labyrinth` command line.
//!
//! Exit status: 0 success, 1 validation failure, 2 usage or parse error,
//! 3 budget exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use crate::compose::{build_level, Budget, DEFAULT_BUDGET_CELLS};
use crate::error::Error;
use crate::exits::Side;
use crate::geo::{
    arc_approximation, connectivity_probe, dimension_estimate, disconnectedness_probe,
    exit_coordinates, exit_membership_counts, ExitPoints,
};
use crate::matrix::{matrix_product, MatrixProducts, PathMatrix};
use crate::path::{substituted_path, wild_containment_probe, PathKind};
use crate::pattern::Pattern;
use crate::render::{render_pgm, render_svg, RenderSpec};
use crate::report::{self, Format, LevelRecord};
use crate::sequence::LabyrinthSequence;
use crate::validate::validate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "labyrinth", version, about = "Mixed labyrinth fractals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Pattern (`.pat`) or sequence manifest (`.seq`).
    path: Option<PathBuf>,
    #[arg(long)]
    manifest: Option<PathBuf>,
    #[arg(long)]
    pattern: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET_CELLS)]
    budget_cells: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the labyrinth properties of patterns or of a level set.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        level: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Write the level set `W_n` as a pattern.
    Compose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        level: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Print the path matrix product `M(n)`.
    Matrix {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        level: usize,
        /// Compare against a previously written matrix instead of printing.
        #[arg(long)]
        check: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Exit path lengths for levels `1..=n`.
    Lengths {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long)]
        check: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Exit coordinates at level `n` and their limits.
    Exits {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Number of level-`n` white cells holding a limit exit.
    ExitCounts {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        level: usize,
        #[arg(long, default_value = "left")]
        exit: Side,
        #[command(flatten)]
        common: Common,
    },
    /// Polyline approximation of an arc between two exits.
    Arc {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, default_value = "A")]
        kind: PathKind,
        #[command(flatten)]
        common: Common,
    },
    /// Ratios `ln L(n) / ln m(n)` for levels `1..=n`.
    Dimension {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10)]
        level: usize,
        #[arg(long, default_value = "A")]
        kind: PathKind,
        #[arg(long)]
        window: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Tree and exit-pair checks of `W_1..W_n`.
    ProbeConnect {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        level: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Components of the carpet generated by the complemented patterns.
    ProbeDisconnect {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        level: usize,
        /// The input patterns are already complemented.
        #[arg(long)]
        complemented: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare shortest exit paths of a wild pattern at levels 1 and 2.
    WildProbe {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
    /// Render a level set as SVG or PGM.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        level: usize,
        /// Overlay the exit path of this kind.
        #[arg(long)]
        kind: Option<PathKind>,
        #[arg(long, default_value_t = 8)]
        cell_pixels: u32,
        #[arg(long, default_value = "svg")]
        image: ImageFormat,
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        coarse_grid_every: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Swap white and black cells.
    Complement {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ImageFormat {
    Svg,
    Pgm,
}

/// A failure with its exit status.
struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } | Error::RenderBudget { .. } => EXIT_BUDGET,
            Error::NotLabyrinth { .. } | Error::NotATree | Error::NoVerticalExitPair => EXIT_INVALID,
            _ => EXIT_USAGE,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: EXIT_USAGE,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

enum Source {
    Pattern(Pattern),
    Sequence(LabyrinthSequence),
}

impl Input {
    fn load(&self) -> CliResult<Source> {
        let given = [&self.path, &self.manifest, &self.pattern]
            .iter()
            .filter(|p| p.is_some())
            .count();
        if given != 1 {
            return Err(usage("give exactly one of PATH, --manifest or --pattern"));
        }
        if let Some(p) = &self.manifest {
            return Ok(Source::Sequence(LabyrinthSequence::load_manifest(p)?));
        }
        if let Some(p) = &self.pattern {
            return Ok(Source::Pattern(Pattern::load(p)?));
        }
        let p = self.path.as_ref().expect("one input");
        if p.extension().is_some_and(|e| e == "seq") {
            Ok(Source::Sequence(LabyrinthSequence::load_manifest(p)?))
        } else {
            Ok(Source::Pattern(Pattern::load(p)?))
        }
    }

    fn sequence(&self) -> CliResult<LabyrinthSequence> {
        Ok(match self.load()? {
            Source::Pattern(p) => LabyrinthSequence::constant(p),
            Source::Sequence(s) => s,
        })
    }

    fn pattern(&self) -> CliResult<Pattern> {
        match self.load()? {
            Source::Pattern(p) => Ok(p),
            Source::Sequence(_) => Err(usage("this subcommand takes a single pattern")),
        }
    }
}

struct Output<'a> {
    stdout: &'a mut dyn Write,
    path: Option<PathBuf>,
}

impl Output<'_> {
    fn write(&mut self, bytes: &[u8]) -> CliResult<()> {
        match &self.path {
            Some(p) => std::fs::write(p, bytes).map_err(|e| Error::io(p.display().to_string(), e))?,
            None => self
                .stdout
                .write_all(bytes)
                .map_err(|e| Error::io("<stdout>", e))?,
        }
        Ok(())
    }
}

/// Runs the command line with `args` (program name first) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return status;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    Ok(std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?)
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let common = match &cmd {
        Command::Validate { common, .. }
        | Command::Compose { common, .. }
        | Command::Matrix { common, .. }
        | Command::Lengths { common, .. }
        | Command::Exits { common, .. }
        | Command::ExitCounts { common, .. }
        | Command::Arc { common, .. }
        | Command::Dimension { common, .. }
        | Command::ProbeConnect { common, .. }
        | Command::ProbeDisconnect { common, .. }
        | Command::WildProbe { common, .. }
        | Command::Render { common, .. }
        | Command::Complement { common, .. } => common,
    };
    let budget = Budget::cells(common.budget_cells);
    let format = common.format;
    let mut out = Output {
        stdout,
        path: common.out.clone(),
    };

    match &cmd {
        Command::Validate { input, level, .. } => {
            let reports = match (input.load()?, level) {
                (Source::Pattern(p), None) => vec![("pattern".to_string(), validate(&p))],
                (Source::Pattern(p), Some(n)) => {
                    let seq = LabyrinthSequence::constant(p);
                    vec![(format!("level {n}"), validate(build_level(&seq, *n, budget)?.as_pattern()))]
                }
                (Source::Sequence(seq), None) => seq
                    .patterns()
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (format!("pattern {}", k + 1), validate(p)))
                    .collect(),
                (Source::Sequence(seq), Some(n)) => {
                    vec![(format!("level {n}"), validate(build_level(&seq, *n, budget)?.as_pattern()))]
                }
            };
            let single = reports.len() == 1;
            let mut text = String::new();
            for (name, r) in &reports {
                if !single {
                    text.push_str(&format!("[{name}]\n"));
                }
                text.push_str(&r.to_string());
            }
            out.write(text.as_bytes())?;
            if reports.iter().all(|(_, r)| r.is_labyrinth) {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(err, "not a labyrinth pattern");
                Ok(EXIT_INVALID)
            }
        }
        Command::Compose { input, level, .. } => {
            let seq = input.sequence()?;
            let w = build_level(&seq, *level, budget)?;
            out.write(w.as_pattern().to_text().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Matrix {
            input, level, check, ..
        } => {
            let seq = input.sequence()?;
            let m = matrix_product(&seq, *level)?;
            match check {
                Some(path) => {
                    let text = read_file(path)?;
                    let expected = if text.trim_start().starts_with("row,col,count") {
                        PathMatrix::parse_records(&text)?
                    } else {
                        PathMatrix::parse_text(&text)?
                    };
                    verdict(&mut out, err, expected == m, "matrix")
                }
                None => {
                    let text = match format {
                        Format::Text => m.to_text(),
                        Format::Csv => m.to_records(),
                    };
                    out.write(text.as_bytes())?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Lengths {
            input, level, check, ..
        } => {
            let seq = input.sequence()?;
            seq.check_level(*level)?;
            let mut products = MatrixProducts::new(&seq);
            let mut records = Vec::with_capacity(*level);
            for n in 1..=*level {
                let lengths = products.advance()?.path_lengths();
                let mut r = level_record(&seq, n)?;
                r.lengths = Some(lengths);
                records.push(r);
            }
            match check {
                Some(path) => {
                    let expected = report::parse_lengths(&read_file(path)?)?;
                    let actual: Vec<(usize, [BigUint; 6])> = records
                        .into_iter()
                        .map(|r| (r.n, r.lengths.expect("lengths")))
                        .collect();
                    verdict(&mut out, err, expected == actual, "lengths")
                }
                None => {
                    out.write(report::render(&records, format).as_bytes())?;
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Exits { input, level, .. } => {
            let seq = input.sequence()?;
            let e = exit_coordinates(&seq, *level)?;
            let text = match format {
                Format::Text => {
                    let mut t = format!("level {}\n", e.level);
                    t.push_str(&points_text("partial", &e.partial));
                    t.push_str(&format!("tail_bound {}\n", e.tail_bound));
                    if let Some(l) = &e.limit {
                        t.push_str(&points_text("limit", l));
                    }
                    t
                }
                Format::Csv => {
                    let mut t = String::from("which,exit,x,y\n");
                    let mut rows = vec![("partial", &e.partial)];
                    if let Some(l) = &e.limit {
                        rows.push(("limit", l));
                    }
                    for (which, pts) in rows {
                        for side in Side::ALL {
                            let p = pts.on(side);
                            t.push_str(&format!("{which},{side},{},{}\n", p.x, p.y));
                        }
                    }
                    t
                }
            };
            out.write(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::ExitCounts {
            input, level, exit, ..
        } => {
            let seq = input.sequence()?;
            let counts = exit_membership_counts(&seq, *exit, *level)?;
            let text = match format {
                Format::Text => {
                    let c: Vec<String> = counts.iter().map(u64::to_string).collect();
                    format!("{exit} exit: {}\n", c.join(" "))
                }
                Format::Csv => {
                    let mut t = String::from("n,count\n");
                    for (k, c) in counts.iter().enumerate() {
                        t.push_str(&format!("{},{c}\n", k + 1));
                    }
                    t
                }
            };
            out.write(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Arc {
            input, level, kind, ..
        } => {
            let seq = input.sequence()?;
            let a = arc_approximation(&seq, *level, *kind, budget)?;
            let len_f = a.length_f64();
            let text = match format {
                Format::Text => format!(
                    "level {} kind {kind}\ncells {}\nlength {} ({len_f:.12})\nlower_bound {}\n",
                    a.level,
                    a.cell_count(),
                    a.length,
                    a.lower_bound
                ),
                Format::Csv => {
                    let mut t = String::from("x,y\n");
                    for (x, y) in a.points_f64() {
                        t.push_str(&format!("{x},{y}\n"));
                    }
                    t
                }
            };
            out.write(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Dimension {
            input,
            level,
            kind,
            window,
            ..
        } => {
            let seq = input.sequence()?;
            let d = dimension_estimate(&seq, *level, *kind, *window)?;
            let records: Vec<LevelRecord> = d
                .levels
                .iter()
                .map(|l| {
                    let mut r = LevelRecord::new(l.n, l.m.clone(), l.s.clone());
                    r.ratio = Some(l.ratio);
                    r
                })
                .collect();
            let mut text = report::render(&records, format);
            if format == Format::Text {
                text.push_str(&format!(
                    "kind {kind} window {} min {:.12} max {:.12} spread {:.3e}\n",
                    d.window, d.window_min, d.window_max, d.window_spread
                ));
            }
            out.write(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::ProbeConnect { input, level, .. } => {
            let seq = input.sequence()?;
            let levels = connectivity_probe(&seq, *level, budget)?;
            let mut text = String::new();
            match format {
                Format::Text => {
                    for l in &levels {
                        text.push_str(&format!(
                            "n={} white={} tree={} exit_pairs={}/{} holds={}\n",
                            l.n,
                            l.white_cells,
                            yes(l.report.property1),
                            l.report.exits.vertical_pairs.len(),
                            l.report.exits.horizontal_pairs.len(),
                            yes(l.holds())
                        ));
                        for w in &l.report.witnesses {
                            text.push_str(&format!("  witness: {w}\n"));
                        }
                    }
                }
                Format::Csv => {
                    text.push_str("n,white,tree,vertical_pairs,horizontal_pairs,holds\n");
                    for l in &levels {
                        text.push_str(&format!(
                            "{},{},{},{},{},{}\n",
                            l.n,
                            l.white_cells,
                            l.report.property1,
                            l.report.exits.vertical_pairs.len(),
                            l.report.exits.horizontal_pairs.len(),
                            l.holds()
                        ));
                    }
                }
            }
            out.write(text.as_bytes())?;
            if levels.iter().all(|l| l.holds()) {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_INVALID)
            }
        }
        Command::ProbeDisconnect {
            input,
            level,
            complemented,
            ..
        } => {
            let seq = input.sequence()?;
            let seq = if *complemented { seq } else { seq.complement()? };
            let levels = disconnectedness_probe(&seq, *level, budget)?;
            let mut records = Vec::with_capacity(levels.len());
            for l in levels {
                let mut r = level_record(&seq, l.n)?;
                r.components = Some(l.components);
                r.max_diameter = Some(l.max_diameter);
                records.push(r);
            }
            out.write(report::render(&records, format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::WildProbe { input, .. } => {
            let p = input.pattern()?;
            let v = validate(&p);
            if !v.is_wild_labyrinth {
                let _ = writeln!(err, "warning: not a wild labyrinth pattern");
            }
            let probe = wild_containment_probe(&p, budget)?;
            let cells = |v: &[crate::pattern::Cell]| {
                v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            };
            let text = format!(
                "contained: {}\nlevel1 ({} cells): {}\nlevel2 ({} cells): {}\noutside: {}\n",
                yes(probe.contained),
                probe.level1.len(),
                cells(&probe.level1),
                probe.level2.len(),
                cells(&probe.level2),
                cells(&probe.outside)
            );
            out.write(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Render {
            input,
            level,
            kind,
            cell_pixels,
            image,
            grid,
            coarse_grid_every,
            ..
        } => {
            let seq = input.sequence()?;
            let w = build_level(&seq, *level, budget)?;
            let overlay = match kind {
                Some(k) if *level >= 1 => Some(substituted_path(&seq, *level, *k, budget)?),
                Some(_) => return Err(usage("path overlays need --level 1 or more")),
                None => None,
            };
            let spec = RenderSpec {
                cell_pixels: *cell_pixels,
                overlay,
                draw_grid: *grid,
                coarse_grid_every: *coarse_grid_every,
                ..RenderSpec::default()
            };
            let bytes = match image {
                ImageFormat::Svg => render_svg(&w, &spec)?.into_bytes(),
                ImageFormat::Pgm => render_pgm(&w, &spec)?,
            };
            out.write(&bytes)?;
            Ok(EXIT_OK)
        }
        Command::Complement { input, .. } => {
            let p = input.pattern()?;
            out.write(p.complement()?.to_text().as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn level_record(seq: &LabyrinthSequence, n: usize) -> CliResult<LevelRecord> {
    Ok(LevelRecord::new(n, seq.width_product(n)?, seq.height_product(n)?))
}

fn verdict(out: &mut Output<'_>, err: &mut dyn Write, ok: bool, what: &str) -> CliResult<i32> {
    if ok {
        out.write(format!("{what}: ok\n").as_bytes())?;
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(err, "{what}: mismatch");
        Ok(EXIT_INVALID)
    }
}

fn points_text(label: &str, e: &ExitPoints) -> String {
    let mut t = String::new();
    for side in Side::ALL {
        t.push_str(&format!("{label} {side} {}\n", e.on(side)));
    }
    t
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
