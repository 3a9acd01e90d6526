//! Corpus access and independent oracles shared by the integration tests.
//!
//! The oracles work on plain `Vec<Vec<bool>>` grids and do not call into the
//! crate's graph, path or composition code.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use labyrinth::{LabyrinthSequence, Pattern};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn pattern(name: &str) -> Pattern {
    Pattern::load(data_dir().join("patterns").join(format!("{name}.pat"))).unwrap()
}

pub fn sequence(name: &str) -> LabyrinthSequence {
    LabyrinthSequence::load_manifest(data_dir().join("sequences").join(format!("{name}.seq"))).unwrap()
}

pub const LABYRINTH_PATTERNS: [&str; 9] = [
    "fig1_a1", "fig1_a2", "fig1_a3", "fig8_a1", "fig8_a2", "fig9_a2", "fig9_a3", "fig14_a", "plus",
];

pub const WILD_PATTERNS: [&str; 3] = ["wild_fig11_left", "wild_fig11_right", "wild_fig13"];

pub fn labyrinth_corpus() -> Vec<(&'static str, Pattern)> {
    LABYRINTH_PATTERNS.iter().map(|&n| (n, pattern(n))).collect()
}

/// `grid[j][i]`, row 0 at the bottom.
pub type Grid = Vec<Vec<bool>>;

pub fn to_grid(p: &Pattern) -> Grid {
    (0..p.s())
        .map(|j| (0..p.m()).map(|i| p.grid().get(i, j)).collect())
        .collect()
}

/// Direct substitution: cell `(I*m + i, J*s + j)` is white iff `(I, J)` is
/// white in `base` and `(i, j)` is white in `next`.
pub fn substitute_naive(base: &Grid, next: &Grid) -> Grid {
    let (bw, bh) = (base[0].len(), base.len());
    let (nw, nh) = (next[0].len(), next.len());
    let mut out = vec![vec![false; bw * nw]; bh * nh];
    for (y, row) in out.iter_mut().enumerate() {
        for (x, cell) in row.iter_mut().enumerate() {
            *cell = base[y / nh][x / nw] && next[y % nh][x % nw];
        }
    }
    out
}

pub fn level_naive(seq: &LabyrinthSequence, n: usize) -> Grid {
    let mut g = vec![vec![true]];
    for k in 1..=n {
        g = substitute_naive(&g, &to_grid(seq.pattern(k).unwrap()));
    }
    g
}

fn neighbours(g: &Grid, i: usize, j: usize) -> Vec<(usize, usize)> {
    let (w, h) = (g[0].len(), g.len());
    let mut out = Vec::new();
    if i > 0 && g[j][i - 1] {
        out.push((i - 1, j));
    }
    if i + 1 < w && g[j][i + 1] {
        out.push((i + 1, j));
    }
    if j > 0 && g[j - 1][i] {
        out.push((i, j - 1));
    }
    if j + 1 < h && g[j + 1][i] {
        out.push((i, j + 1));
    }
    out
}

/// Vertex count, edge count and component count by BFS.
pub fn graph_stats(g: &Grid) -> (usize, usize, usize) {
    let (w, h) = (g[0].len(), g.len());
    let mut seen = vec![vec![false; w]; h];
    let (mut v, mut e, mut c) = (0, 0, 0);
    for j in 0..h {
        for i in 0..w {
            if !g[j][i] {
                continue;
            }
            v += 1;
            e += neighbours(g, i, j).len();
            if seen[j][i] {
                continue;
            }
            c += 1;
            seen[j][i] = true;
            let mut q = VecDeque::from([(i, j)]);
            while let Some((a, b)) = q.pop_front() {
                for (x, y) in neighbours(g, a, b) {
                    if !seen[y][x] {
                        seen[y][x] = true;
                        q.push_back((x, y));
                    }
                }
            }
        }
    }
    (v, e / 2, c)
}

pub fn is_tree(g: &Grid) -> bool {
    let (v, e, c) = graph_stats(g);
    v > 0 && c == 1 && e + 1 == v
}

/// Exit pairs: `(vertical columns, horizontal rows)`.
pub fn exit_pairs(g: &Grid) -> (Vec<usize>, Vec<usize>) {
    let (w, h) = (g[0].len(), g.len());
    let cols = (0..w).filter(|&i| g[0][i] && g[h - 1][i]).collect();
    let rows = (0..h).filter(|&j| g[j][0] && g[j][w - 1]).collect();
    (cols, rows)
}

pub fn corners_ok(g: &Grid) -> bool {
    let (w, h) = (g[0].len(), g.len());
    !(g[0][0] && g[h - 1][w - 1]) && !(g[0][w - 1] && g[h - 1][0])
}

pub fn is_labyrinth(g: &Grid) -> bool {
    let (c, r) = exit_pairs(g);
    is_tree(g) && c.len() == 1 && r.len() == 1 && corners_ok(g)
}

/// The BFS path between two white cells.
pub fn bfs_path(g: &Grid, from: (usize, usize), to: (usize, usize)) -> Vec<(usize, usize)> {
    let (w, h) = (g[0].len(), g.len());
    let mut parent = vec![vec![None; w]; h];
    parent[from.1][from.0] = Some(from);
    let mut q = VecDeque::from([from]);
    while let Some(c) = q.pop_front() {
        if c == to {
            break;
        }
        for n in neighbours(g, c.0, c.1) {
            if parent[n.1][n.0].is_none() {
                parent[n.1][n.0] = Some(c);
                q.push_back(n);
            }
        }
    }
    let mut path = vec![to];
    let mut c = to;
    while c != from {
        c = parent[c.1][c.0].expect("connected");
        path.push(c);
    }
    path.reverse();
    path
}

/// Sides as `(di, dj)` offsets.
pub const TOP: (i64, i64) = (0, 1);
pub const BOTTOM: (i64, i64) = (0, -1);
pub const LEFT: (i64, i64) = (-1, 0);
pub const RIGHT: (i64, i64) = (1, 0);

/// Kinds `A..F` as (start side, end side).
pub const KINDS: [((i64, i64), (i64, i64)); 6] = [
    (TOP, BOTTOM),
    (LEFT, RIGHT),
    (TOP, RIGHT),
    (RIGHT, BOTTOM),
    (BOTTOM, LEFT),
    (LEFT, TOP),
];

fn class_index(a: (i64, i64), b: (i64, i64)) -> usize {
    KINDS
        .iter()
        .position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
        .expect("two distinct sides")
}

/// Exit cells of the unique pairs for a labyrinth grid.
fn exit_cell(g: &Grid, side: (i64, i64)) -> (usize, usize) {
    let (w, h) = (g[0].len(), g.len());
    let (cols, rows) = exit_pairs(g);
    match side {
        TOP => (cols[0], h - 1),
        BOTTOM => (cols[0], 0),
        LEFT => (0, rows[0]),
        RIGHT => (w - 1, rows[0]),
        _ => unreachable!(),
    }
}

/// Class counts along the path of kind `k` in a labyrinth grid.
pub fn brute_force_counts(g: &Grid, k: usize) -> [u64; 6] {
    let (start, end) = KINDS[k];
    let path = bfs_path(g, exit_cell(g, start), exit_cell(g, end));
    let mut counts = [0u64; 6];
    for (idx, &(i, j)) in path.iter().enumerate() {
        let dir = |o: (usize, usize)| (o.0 as i64 - i as i64, o.1 as i64 - j as i64);
        let before = if idx == 0 { start } else { dir(path[idx - 1]) };
        let after = if idx + 1 == path.len() { end } else { dir(path[idx + 1]) };
        counts[class_index(before, after)] += 1;
    }
    counts
}

/// Spectral radius of a non-negative matrix by power iteration.
pub fn spectral_radius(m: &[[u64; 6]; 6]) -> f64 {
    let mut v = [1.0f64; 6];
    let mut lambda = 0.0;
    for _ in 0..2000 {
        let mut next = [0.0; 6];
        for r in 0..6 {
            for c in 0..6 {
                next[r] += m[r][c] as f64 * v[c];
            }
        }
        let norm = next.iter().cloned().fold(0.0, f64::max);
        lambda = norm;
        for x in next.iter_mut() {
            *x /= norm;
        }
        v = next;
    }
    lambda
}
