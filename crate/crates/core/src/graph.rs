//! Grid graphs over the white (or black) cells of a pattern.
//!
//! Graphs are implicit: vertices and edges are read off the bitset on demand,
//! so level sets with millions of cells never materialize an edge list.

use std::borrow::Cow;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::grid::BitGrid;
use crate::pattern::{Cell, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjacency {
    /// Cells sharing a full side.
    Side,
    /// Cells sharing a side or a corner.
    SideOrCorner,
}

// Offsets in row-major order of the neighbor, so neighbor iteration is sorted.
const SIDE: [(isize, isize); 4] = [(0, -1), (-1, 0), (1, 0), (0, 1)];
const KING: [(isize, isize); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];

#[derive(Debug, Clone)]
pub struct CellGraph<'a> {
    grid: Cow<'a, BitGrid>,
    adjacency: Adjacency,
}

/// The graph of a pattern: white cells joined when they share a side.
pub fn build_graph(p: &Pattern) -> CellGraph<'_> {
    CellGraph::white(p)
}

impl<'a> CellGraph<'a> {
    pub fn white(p: &'a Pattern) -> Self {
        CellGraph {
            grid: Cow::Borrowed(p.grid()),
            adjacency: Adjacency::Side,
        }
    }

    /// Black cells of `p`, joined when they share a side or a corner.
    pub fn black(p: &Pattern) -> CellGraph<'static> {
        CellGraph {
            grid: Cow::Owned(p.grid().complement()),
            adjacency: Adjacency::SideOrCorner,
        }
    }

    pub fn from_grid(grid: Cow<'a, BitGrid>, adjacency: Adjacency) -> Self {
        CellGraph { grid, adjacency }
    }

    pub fn adjacency(&self) -> Adjacency {
        self.adjacency
    }

    pub fn width(&self) -> usize {
        self.grid.width()
    }

    pub fn height(&self) -> usize {
        self.grid.height()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.i < self.width() && c.j < self.height() && self.grid.get(c.i, c.j)
    }

    pub fn vertex_count(&self) -> u64 {
        self.grid.count_ones()
    }

    /// Vertices in row-major order from the bottom-left.
    pub fn vertices(&self) -> impl Iterator<Item = Cell> + '_ {
        self.grid.ones().map(Cell::from)
    }

    fn offsets(&self) -> &'static [(isize, isize)] {
        match self.adjacency {
            Adjacency::Side => &SIDE,
            Adjacency::SideOrCorner => &KING,
        }
    }

    pub fn neighbors(&self, c: Cell) -> impl Iterator<Item = Cell> + '_ {
        let (i, j) = (c.i as isize, c.j as isize);
        self.offsets().iter().filter_map(move |&(di, dj)| {
            let (ni, nj) = (i + di, j + dj);
            self.grid
                .get_signed(ni, nj)
                .then(|| Cell::new(ni as usize, nj as usize))
        })
    }

    pub fn edge_count(&self) -> u64 {
        match self.adjacency {
            Adjacency::Side => side_edge_count(&self.grid),
            Adjacency::SideOrCorner => {
                let forward = self
                    .vertices()
                    .map(|c| {
                        self.neighbors(c)
                            .filter(|n| n.row_major_key() > c.row_major_key())
                            .count() as u64
                    })
                    .sum();
                forward
            }
        }
    }

    /// Each edge once, as `(u, v)` with `u` before `v` in row-major order.
    pub fn edges(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for c in self.vertices() {
            for n in self.neighbors(c) {
                if n.row_major_key() > c.row_major_key() {
                    out.push((c, n));
                }
            }
        }
        out
    }

    fn index(&self, c: Cell) -> usize {
        c.j * self.width() + c.i
    }

    fn cell(&self, idx: usize) -> Cell {
        Cell::new(idx % self.width(), idx / self.width())
    }

    /// Connected components by union-find.
    pub fn components(&self) -> Components {
        let w = self.width();
        let mut uf = UnionFind::new(self.grid.len());
        // Only forward neighbors: up and right, plus the two upper diagonals.
        let forward: &[(isize, isize)] = match self.adjacency {
            Adjacency::Side => &[(1, 0), (0, 1)],
            Adjacency::SideOrCorner => &[(1, 0), (-1, 1), (0, 1), (1, 1)],
        };
        for (i, j) in self.grid.ones() {
            for &(di, dj) in forward {
                let (ni, nj) = (i as isize + di, j as isize + dj);
                if self.grid.get_signed(ni, nj) {
                    uf.union(j * w + i, nj as usize * w + ni as usize);
                }
            }
        }
        let mut label = vec![NO_LABEL; self.grid.len()];
        let mut root_label = vec![NO_LABEL; self.grid.len()];
        let mut sizes = Vec::new();
        for (i, j) in self.grid.ones() {
            let idx = j * w + i;
            let r = uf.find(idx);
            if root_label[r] == NO_LABEL {
                root_label[r] = sizes.len() as u32;
                sizes.push(0u64);
            }
            label[idx] = root_label[r];
            sizes[root_label[r] as usize] += 1;
        }
        Components {
            width: w,
            label,
            sizes,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count() == 1
    }

    /// Connected and `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        let v = self.vertex_count();
        v > 0 && self.edge_count() == v - 1 && self.is_connected()
    }

    /// A cycle as a closed walk `u, ..., v` (with `v ~ u`), if one exists.
    pub fn find_cycle(&self) -> Option<Vec<Cell>> {
        let w = self.width();
        let mut uf = UnionFind::new(self.grid.len());
        for c in self.vertices().collect::<Vec<_>>() {
            for n in self.neighbors(c).collect::<Vec<_>>() {
                if n.row_major_key() <= c.row_major_key() {
                    continue;
                }
                let (a, b) = (c.j * w + c.i, n.j * w + n.i);
                if uf.find(a) == uf.find(b) {
                    let path = self.bfs_path(c, n, Some((a, b)))?;
                    return Some(path);
                }
                uf.union(a, b);
            }
        }
        None
    }

    /// Shortest path from `from` to `to`, lexicographically smallest among
    /// shortest paths under row-major cell order.
    fn bfs_path(&self, from: Cell, to: Cell, skip: Option<(usize, usize)>) -> Option<Vec<Cell>> {
        let (src, dst) = (self.index(from), self.index(to));
        let skipped = |a: usize, b: usize| match skip {
            Some((x, y)) => (a == x && b == y) || (a == y && b == x),
            None => false,
        };
        // Distances measured from `to`, so the greedy walk from `from` can
        // pick the smallest neighbor one step closer.
        let mut dist = vec![u32::MAX; self.grid.len()];
        let mut queue = VecDeque::new();
        dist[dst] = 0;
        queue.push_back(dst);
        'bfs: while let Some(u) = queue.pop_front() {
            if u == src {
                break;
            }
            let du = dist[u];
            for n in self.neighbors(self.cell(u)) {
                let v = self.index(n);
                if dist[v] == u32::MAX && !skipped(u, v) {
                    dist[v] = du + 1;
                    if v == src {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if dist[src] == u32::MAX {
            return None;
        }
        let mut path = Vec::with_capacity(dist[src] as usize + 1);
        let mut cur = src;
        path.push(from);
        while cur != dst {
            let want = dist[cur] - 1;
            let next = self
                .neighbors(self.cell(cur))
                .map(|n| self.index(n))
                .find(|&v| dist[v] == want && !skipped(cur, v))
                .expect("bfs layers are consistent");
            path.push(self.cell(next));
            cur = next;
        }
        Some(path)
    }

    fn check_vertex(&self, c: Cell) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::NotAVertex { cell: c })
        }
    }
}

/// The unique simple path between two cells of a tree.
pub fn tree_path(g: &CellGraph<'_>, from: Cell, to: Cell) -> Result<Vec<Cell>> {
    g.check_vertex(from)?;
    g.check_vertex(to)?;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    g.bfs_path(from, to, None)
        .ok_or(Error::Disconnected { from, to })
}

/// A BFS shortest path; ties go to the lexicographically smallest cell
/// sequence under row-major order.
pub fn shortest_path(g: &CellGraph<'_>, from: Cell, to: Cell) -> Result<Vec<Cell>> {
    g.check_vertex(from)?;
    g.check_vertex(to)?;
    g.bfs_path(from, to, None)
        .ok_or(Error::Disconnected { from, to })
}

fn side_edge_count(g: &BitGrid) -> u64 {
    let mut total = 0u64;
    for j in 0..g.height() {
        let row = g.row(j);
        for (k, &w) in row.iter().enumerate() {
            total += u64::from((w & (w >> 1)).count_ones());
            if let Some(&next) = row.get(k + 1) {
                total += (w >> 63) & next & 1;
            }
        }
        if j + 1 < g.height() {
            let up = g.row(j + 1);
            total += row
                .iter()
                .zip(up)
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum::<u64>();
        }
    }
    total
}

const NO_LABEL: u32 = u32::MAX;

/// Component labels over a grid; cells outside the graph carry no label.
#[derive(Debug, Clone)]
pub struct Components {
    width: usize,
    label: Vec<u32>,
    sizes: Vec<u64>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Component sizes, indexed by label in order of first appearance.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn label(&self, c: Cell) -> Option<usize> {
        match self.label[c.j * self.width + c.i] {
            NO_LABEL => None,
            l => Some(l as usize),
        }
    }

    /// Every labelled cell with its label, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.label
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != NO_LABEL)
            .map(|(idx, &l)| (Cell::new(idx % self.width, idx / self.width), l as usize))
    }
}

/// Disjoint sets with union by rank and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        assert!(len <= u32::MAX as usize, "union-find over more than 2^32 elements");
        UnionFind {
            parent: (0..len as u32).collect(),
            rank: vec![0; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb as u32,
            std::cmp::Ordering::Greater => self.parent[rb] = ra as u32,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra as u32;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    fn plus() -> Pattern {
        parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap()
    }

    #[test]
    fn plus_graph() {
        let p = plus();
        let g = build_graph(&p);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges().len(), 4);
        assert!(g.edges().iter().all(|(a, b)| a.is_side_adjacent(b)));
        assert!(g.is_tree());
        assert!(g.find_cycle().is_none());
    }

    #[test]
    fn single_cell() {
        let p = Pattern::from_cells(3, 3, [(1, 1)]).unwrap();
        let g = build_graph(&p);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert!(g.is_tree());
        assert_eq!(
            tree_path(&g, Cell::new(1, 1), Cell::new(1, 1)).unwrap(),
            vec![Cell::new(1, 1)]
        );
    }

    #[test]
    fn plus_tree_path() {
        let p = plus();
        let g = build_graph(&p);
        let path = tree_path(&g, Cell::new(1, 0), Cell::new(1, 2)).unwrap();
        assert_eq!(path, vec![Cell::new(1, 0), Cell::new(1, 1), Cell::new(1, 2)]);
        assert_eq!(shortest_path(&g, Cell::new(1, 0), Cell::new(1, 2)).unwrap(), path);
    }

    #[test]
    fn square_ring_has_cycle() {
        let p = Pattern::full(2, 2).unwrap();
        let g = build_graph(&p);
        assert!(!g.is_tree());
        let cycle = g.find_cycle().unwrap();
        assert_eq!(cycle.len(), 4);
        assert!(cycle.first().unwrap().is_side_adjacent(cycle.last().unwrap()));
        assert!(matches!(
            tree_path(&g, Cell::new(0, 0), Cell::new(1, 1)),
            Err(Error::NotATree)
        ));
        // Two shortest paths of length 3; the row-major-smallest goes via (1,0).
        assert_eq!(
            shortest_path(&g, Cell::new(0, 0), Cell::new(1, 1)).unwrap(),
            vec![Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1)]
        );
    }

    #[test]
    fn strip_shortest_path() {
        let p = Pattern::full(2, 1).unwrap();
        let g = build_graph(&p);
        assert_eq!(
            shortest_path(&g, Cell::new(0, 0), Cell::new(1, 0)).unwrap(),
            vec![Cell::new(0, 0), Cell::new(1, 0)]
        );
    }

    #[test]
    fn disconnected_endpoints() {
        let p = Pattern::from_cells(3, 1, [(0, 0), (2, 0)]).unwrap();
        let g = build_graph(&p);
        assert!(matches!(
            shortest_path(&g, Cell::new(0, 0), Cell::new(2, 0)),
            Err(Error::Disconnected { .. })
        ));
        assert_eq!(g.components().count(), 2);
        assert!(matches!(
            shortest_path(&g, Cell::new(1, 0), Cell::new(2, 0)),
            Err(Error::NotAVertex { .. })
        ));
    }

    #[test]
    fn black_graph_joins_corners() {
        // Black cells at (0,0) and (1,1) touch only at a corner.
        let p = Pattern::from_cells(2, 2, [(1, 0), (0, 1)]).unwrap();
        let b = CellGraph::black(&p);
        assert_eq!(b.vertex_count(), 2);
        assert_eq!(b.edge_count(), 1);
        assert_eq!(b.components().count(), 1);
    }

    #[test]
    fn side_edge_count_matches_scan_on_wide_grid() {
        let mut grid = BitGrid::new(130, 3);
        for i in 0..130 {
            for j in 0..3 {
                if (i * 7 + j * 3) % 5 != 0 {
                    grid.set(i, j, true);
                }
            }
        }
        let g = CellGraph::from_grid(Cow::Owned(grid), Adjacency::Side);
        assert_eq!(g.edge_count(), g.edges().len() as u64);
    }
}
