//! SVG and binary PGM renderings of patterns and level sets.
//!
//! Cell `(0, 0)` is drawn at the bottom left. SVG output uses only `rect`
//! and `polyline` elements; black cells are merged into horizontal runs.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::path::CellPath;
use crate::pattern::{Cell, Pattern};

/// Largest SVG canvas, in pixels.
pub const SVG_PIXEL_LIMIT: u128 = 1 << 26;
/// Largest PGM raster, in pixels (one byte each).
pub const PGM_PIXEL_LIMIT: u128 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub fn hex(self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }

    /// Rec. 601 luma, rounded.
    pub fn luminance(self) -> u8 {
        let y = 299 * self.0 as u32 + 587 * self.1 as u32 + 114 * self.2 as u32;
        ((y + 500) / 1000) as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Palette {
    pub white: Rgb,
    pub black: Rgb,
    pub path_highlight: Rgb,
    pub gridline: Rgb,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            white: Rgb(255, 255, 255),
            black: Rgb(0, 0, 0),
            path_highlight: Rgb(160, 160, 160),
            gridline: Rgb(96, 96, 96),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub cell_pixels: u32,
    pub palette: Palette,
    pub overlay: Option<CellPath>,
    pub draw_grid: bool,
    /// Heavy lines every `k` cells.
    pub coarse_grid_every: Option<usize>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            cell_pixels: 8,
            palette: Palette::default(),
            overlay: None,
            draw_grid: false,
            coarse_grid_every: None,
        }
    }
}

impl RenderSpec {
    pub fn with_cell_pixels(cell_pixels: u32) -> Self {
        RenderSpec {
            cell_pixels,
            ..RenderSpec::default()
        }
    }

    fn check(&self, p: &Pattern, limit: u128) -> Result<()> {
        if self.cell_pixels == 0 {
            return Err(Error::Invalid("cell pixels must be at least 1".into()));
        }
        if self.coarse_grid_every == Some(0) {
            return Err(Error::Invalid("coarse grid spacing must be at least 1".into()));
        }
        let cp = self.cell_pixels as u128;
        let pixels = p.m() as u128 * p.s() as u128 * cp * cp;
        if pixels > limit {
            return Err(Error::RenderBudget { pixels, limit });
        }
        if let Some(path) = &self.overlay {
            for &cell in &path.cells {
                if cell.i >= p.m() || cell.j >= p.s() {
                    return Err(Error::OverlayOutOfGrid {
                        cell,
                        width: p.m(),
                        height: p.s(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Maximal runs `(start, len)` of cells in row `j` with the given color.
fn runs(p: &Pattern, j: usize, white: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < p.m() {
        if p.grid().get(i, j) == white {
            let start = i;
            while i < p.m() && p.grid().get(i, j) == white {
                i += 1;
            }
            out.push((start, i - start));
        } else {
            i += 1;
        }
    }
    out
}

pub fn render_svg(set: impl AsRef<Pattern>, spec: &RenderSpec) -> Result<String> {
    let p = set.as_ref();
    spec.check(p, SVG_PIXEL_LIMIT)?;
    let cp = spec.cell_pixels as usize;
    let (w, h) = (p.m() * cp, p.s() * cp);
    let top = |j: usize| (p.s() - 1 - j) * cp;
    let pal = &spec.palette;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        s,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"{}\"/>",
        pal.white.hex()
    );
    let black = pal.black.hex();
    for j in (0..p.s()).rev() {
        for (i, len) in runs(p, j, false) {
            let _ = writeln!(
                s,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{cp}\" fill=\"{black}\"/>",
                i * cp,
                top(j),
                len * cp
            );
        }
    }
    if let Some(path) = &spec.overlay {
        let hl = pal.path_highlight.hex();
        for c in &path.cells {
            let _ = writeln!(
                s,
                "<rect x=\"{}\" y=\"{}\" width=\"{cp}\" height=\"{cp}\" fill=\"{hl}\"/>",
                c.i * cp,
                top(c.j)
            );
        }
        let points: Vec<String> = path
            .cells
            .iter()
            .map(|c| {
                let (x, y) = center_pixels(*c, p.s(), cp);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{black}\" stroke-width=\"{}\"/>",
            points.join(" "),
            (cp as f64 / 8.0).max(0.5)
        );
    }
    let grid = pal.gridline.hex();
    let line = |s: &mut String, x0: usize, y0: usize, x1: usize, y1: usize, width: f64| {
        let _ = writeln!(
            s,
            "<polyline points=\"{x0},{y0} {x1},{y1}\" fill=\"none\" stroke=\"{grid}\" stroke-width=\"{width}\"/>"
        );
    };
    if spec.draw_grid {
        for i in 0..=p.m() {
            line(&mut s, i * cp, 0, i * cp, h, 0.5);
        }
        for j in 0..=p.s() {
            line(&mut s, 0, j * cp, w, j * cp, 0.5);
        }
    }
    if let Some(k) = spec.coarse_grid_every {
        let heavy = (cp as f64 / 4.0).max(1.5);
        for i in (0..=p.m()).step_by(k) {
            line(&mut s, i * cp, 0, i * cp, h, heavy);
        }
        for j in (0..=p.s()).step_by(k) {
            line(&mut s, 0, h - j * cp, w, h - j * cp, heavy);
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Pixel center of a cell, with its doubled coordinates kept exact.
fn center_pixels(c: Cell, rows: usize, cp: usize) -> (String, String) {
    let x2 = (2 * c.i + 1) * cp;
    let y2 = (2 * (rows - 1 - c.j) + 1) * cp;
    let half = |v: usize| {
        if v.is_multiple_of(2) {
            (v / 2).to_string()
        } else {
            format!("{}.5", v / 2)
        }
    };
    (half(x2), half(y2))
}

/// Binary P5 raster, one byte of luma per pixel.
pub fn render_pgm(set: impl AsRef<Pattern>, spec: &RenderSpec) -> Result<Vec<u8>> {
    let p = set.as_ref();
    spec.check(p, PGM_PIXEL_LIMIT)?;
    let cp = spec.cell_pixels as usize;
    let (w, h) = (p.m() * cp, p.s() * cp);
    let pal = &spec.palette;
    let (white, black) = (pal.white.luminance(), pal.black.luminance());
    let header = format!("P5\n{w} {h}\n255\n");
    let mut out = Vec::with_capacity(header.len() + w * h);
    out.extend_from_slice(header.as_bytes());
    let start = out.len();
    out.resize(start + w * h, black);
    let px = &mut out[start..];

    let fill = |px: &mut [u8], c: Cell, v: u8| {
        let y0 = (p.s() - 1 - c.j) * cp;
        for y in y0..y0 + cp {
            px[y * w + c.i * cp..y * w + (c.i + 1) * cp].fill(v);
        }
    };
    for j in 0..p.s() {
        for (i, len) in runs(p, j, true) {
            let y0 = (p.s() - 1 - j) * cp;
            for y in y0..y0 + cp {
                px[y * w + i * cp..y * w + (i + len) * cp].fill(white);
            }
        }
    }
    if let Some(path) = &spec.overlay {
        let hl = pal.path_highlight.luminance();
        for &c in &path.cells {
            fill(px, c, hl);
        }
    }
    let g = pal.gridline.luminance();
    let vline = |px: &mut [u8], x: usize| {
        let x = x.min(w - 1);
        for y in 0..h {
            px[y * w + x] = g;
        }
    };
    let mut cols = Vec::new();
    let mut rows = Vec::new();
    if spec.draw_grid && cp >= 2 {
        cols.extend((0..=p.m()).map(|i| i * cp));
        rows.extend((0..=p.s()).map(|j| j * cp));
    }
    if let Some(k) = spec.coarse_grid_every {
        cols.extend((0..=p.m()).step_by(k).map(|i| i * cp));
        rows.extend((0..=p.s()).step_by(k).map(|j| h - j * cp));
    }
    for x in cols {
        vline(px, x);
    }
    for y in rows {
        let y = y.min(h - 1);
        px[y * w..(y + 1) * w].fill(g);
    }
    Ok(out)
}

/// Splits a P5 raster into `(width, height, pixels)`.
pub fn parse_pgm(bytes: &[u8]) -> Result<(usize, usize, &[u8])> {
    let bad = || Error::Invalid("not a binary PGM with max value 255".into());
    let mut fields = Vec::new();
    let mut pos = 0;
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(bad());
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| bad())?);
    }
    pos += 1;
    let parse = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if fields[0] != "P5" || fields[3] != "255" {
        return Err(bad());
    }
    let (w, h) = (parse(fields[1])?, parse(fields[2])?);
    let data = bytes.get(pos..).ok_or_else(bad)?;
    if data.len() != w * h {
        return Err(bad());
    }
    Ok((w, h, data))
}
