//! Labyrinth, wild-labyrinth and blocked checks.

use std::fmt;

use crate::compose::{build_level, Budget, LevelSet};
use crate::error::Result;
use crate::exits::{find_exits, ExitSystem};
use crate::graph::{build_graph, CellGraph};
use crate::pattern::{Cell, Pattern};
use crate::sequence::LabyrinthSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// The white-cell graph is a tree.
    pub property1: bool,
    /// Exactly one vertical and one horizontal exit pair.
    pub property2: bool,
    /// No white corner has a white diagonally opposite corner.
    pub property3: bool,
    /// The white-cell graph is connected.
    pub wild_property1: bool,
    /// At least one vertical and one horizontal exit pair.
    pub wild_property2: bool,
    pub is_labyrinth: bool,
    pub is_wild_labyrinth: bool,
    pub horizontally_blocked: bool,
    pub vertically_blocked: bool,
    pub exits: ExitSystem,
    pub witnesses: Vec<String>,
}

const MAX_WITNESS_CELLS: usize = 24;

fn cell_list(cells: &[Cell]) -> String {
    let mut s: Vec<String> = cells
        .iter()
        .take(MAX_WITNESS_CELLS)
        .map(|c| c.to_string())
        .collect();
    if cells.len() > MAX_WITNESS_CELLS {
        s.push(format!("... ({} cells)", cells.len()));
    }
    s.join(" ")
}

pub fn validate(p: &Pattern) -> ValidationReport {
    let mut witnesses = Vec::new();
    let g = build_graph(p);
    let components = g.components().count();
    let connected = components == 1;
    let vertices = g.vertex_count();
    let edges = g.edge_count();
    let property1 = connected && edges + 1 == vertices;
    if !connected {
        witnesses.push(format!("graph has {components} connected components"));
    }
    if edges + 1 > vertices {
        match g.find_cycle() {
            Some(cycle) => witnesses.push(format!("cycle: {}", cell_list(&cycle))),
            None => witnesses.push(format!("{edges} edges on {vertices} vertices")),
        }
    }

    let exits = find_exits(p);
    let (nv, nh) = (exits.vertical_pairs.len(), exits.horizontal_pairs.len());
    let property2 = nv == 1 && nh == 1;
    let wild_property2 = nv >= 1 && nh >= 1;
    if nv != 1 {
        witnesses.push(format!("{nv} vertical exit pairs"));
    }
    if nh != 1 {
        witnesses.push(format!("{nh} horizontal exit pairs"));
    }

    let (m, s) = (p.m() - 1, p.s() - 1);
    let diagonals = [
        (Cell::new(0, 0), Cell::new(m, s)),
        (Cell::new(m, 0), Cell::new(0, s)),
    ];
    let mut property3 = true;
    for (a, b) in diagonals {
        if p.is_white(a) && p.is_white(b) {
            property3 = false;
            witnesses.push(format!("white opposite corners {a} and {b}"));
        }
    }

    let (horizontally_blocked, vertically_blocked) = if property2 {
        let (_, right) = exits.horizontal_pairs[0];
        let (top, _) = exits.vertical_pairs[0];
        (
            p.grid().row_count_ones(right.j) < p.m(),
            p.grid().column_count_ones(top.i) < p.s(),
        )
    } else {
        witnesses.push("blocked checks need exactly one exit pair per direction".into());
        (false, false)
    };

    ValidationReport {
        property1,
        property2,
        property3,
        wild_property1: connected,
        wild_property2,
        is_labyrinth: property1 && property2 && property3,
        is_wild_labyrinth: connected && wild_property2 && property3,
        horizontally_blocked,
        vertically_blocked,
        exits,
        witnesses,
    }
}

/// One component of the black-cell graph of a level set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlackComponent {
    /// First cell of the component in row-major order.
    pub first: Cell,
    pub size: u64,
    pub touches_border: bool,
}

#[derive(Debug, Clone)]
pub struct BlackGraphReport {
    pub level: LevelSet,
    pub components: Vec<BlackComponent>,
    /// Every black component reaches a border cell.
    pub verdict: bool,
}

impl BlackGraphReport {
    /// Black cells joined across sides and corners.
    pub fn graph(&self) -> CellGraph<'static> {
        CellGraph::black(self.level.as_pattern())
    }
}

/// Checks that every black cell of `W_n` reaches a black border cell through
/// black cells sharing a side or a corner.
pub fn black_graph(seq: &LabyrinthSequence, n: usize, budget: Budget) -> Result<BlackGraphReport> {
    let level = build_level(seq, n, budget)?;
    let g = CellGraph::black(level.as_pattern());
    let comps = g.components();
    let (w, h) = (level.width(), level.height());
    let mut components: Vec<BlackComponent> = comps
        .sizes()
        .iter()
        .map(|&size| BlackComponent {
            first: Cell::new(usize::MAX, usize::MAX),
            size,
            touches_border: false,
        })
        .collect();
    for (c, l) in comps.cells() {
        let comp = &mut components[l];
        if comp.first.i == usize::MAX {
            comp.first = c;
        }
        if c.i == 0 || c.j == 0 || c.i + 1 == w || c.j + 1 == h {
            comp.touches_border = true;
        }
    }
    let verdict = components.iter().all(|c| c.touches_border);
    Ok(BlackGraphReport {
        level,
        components,
        verdict,
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "labyrinth: {}, blocked: {}/{}",
            yes(self.is_labyrinth),
            yes(self.horizontally_blocked),
            yes(self.vertically_blocked)
        )?;
        writeln!(f, "wild labyrinth: {}", yes(self.is_wild_labyrinth))?;
        writeln!(
            f,
            "property1 (tree): {}\nproperty2 (unique exit pairs): {}\nproperty3 (corners): {}",
            yes(self.property1),
            yes(self.property2),
            yes(self.property3)
        )?;
        writeln!(
            f,
            "wild property1 (connected): {}\nwild property2 (exit pairs): {}",
            yes(self.wild_property1),
            yes(self.wild_property2)
        )?;
        let pairs = |v: &[(Cell, Cell)]| {
            v.iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "vertical pairs: {}", pairs(&self.exits.vertical_pairs))?;
        writeln!(f, "horizontal pairs: {}", pairs(&self.exits.horizontal_pairs))?;
        for w in &self.witnesses {
            writeln!(f, "witness: {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;

    #[test]
    fn plus_is_unblocked_labyrinth() {
        let r = validate(&parse_pattern("pattern 3 3\n#.#\n...\n#.#\n").unwrap());
        assert!(r.is_labyrinth && r.is_wild_labyrinth);
        assert!(!r.horizontally_blocked && !r.vertically_blocked);
        assert!(r.witnesses.is_empty());
        assert!(r.to_string().starts_with("labyrinth: yes, blocked: no/no\n"));
    }

    #[test]
    fn opposite_white_corners_fail_property3() {
        let r = validate(&parse_pattern("pattern 3 3\n..#\n.#.\n...\n").unwrap());
        assert!(!r.property3);
        assert!(r.witnesses.iter().any(|w| w.contains("(2,0) and (0,2)")));
    }

    #[test]
    fn full_square_has_cycle_and_many_pairs() {
        let r = validate(&Pattern::full(3, 3).unwrap());
        assert!(!r.property1 && r.wild_property1);
        assert!(!r.property2 && r.wild_property2);
        assert!(!r.horizontally_blocked && !r.vertically_blocked);
        assert!(r.witnesses.iter().any(|w| w.starts_with("cycle:")));
        assert!(r.witnesses.iter().any(|w| w.contains("blocked checks")));
    }

    #[test]
    fn all_white_black_graph_is_vacuous() {
        let seq = LabyrinthSequence::constant(Pattern::full(3, 3).unwrap());
        let r = black_graph(&seq, 2, Budget::default()).unwrap();
        assert!(r.components.is_empty() && r.verdict);
        assert_eq!(r.graph().vertex_count(), 0);
    }

    #[test]
    fn enclosed_black_cell_fails_border_reachability() {
        let p = parse_pattern("pattern 3 3\n...\n.#.\n...\n").unwrap();
        let r = black_graph(&LabyrinthSequence::constant(p), 1, Budget::default()).unwrap();
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].first, Cell::new(1, 1));
        assert!(!r.verdict);
    }

    #[test]
    fn blocked_row() {
        // Exit row 1 has a black cell in the middle; exit column 0 is full.
        let r = validate(&parse_pattern("pattern 4 4\n.###\n.#..\n...#\n.###\n").unwrap());
        assert!(r.is_labyrinth, "{r}");
        assert!(r.horizontally_blocked);
        assert!(!r.vertically_blocked);
    }
}
