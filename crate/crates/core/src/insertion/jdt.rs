//! Orthosymplectic jeu de taquin on punctured spo-tableaux.

use std::fmt;

use serde::Serialize;

use crate::alphabet::{AlphabetParams, Letter};
use crate::error::{Error, Result};
use crate::tableau::{Cell, Tableau};

use super::trace::TraceEvent;

/// A tableau with one box emptied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PuncturedTableau {
    rows: Vec<Vec<Option<Letter>>>,
    hole: Cell,
}

impl PuncturedTableau {
    /// Empties the box at `hole` in `base`.
    pub fn new(base: &Tableau<Letter>, hole: Cell) -> Result<Self> {
        if base.get(hole).is_none() {
            return Err(Error::HoleOutsideShape(hole));
        }
        let mut rows: Vec<Vec<Option<Letter>>> =
            base.rows().iter().map(|r| r.iter().copied().map(Some).collect()).collect();
        rows[hole.row - 1][hole.col - 1] = None;
        Ok(PuncturedTableau { rows, hole })
    }

    /// `base` with an extra empty box at the addable cell `hole`.
    pub fn with_added_hole(base: &Tableau<Letter>, hole: Cell) -> Result<Self> {
        if !base.is_addable(hole) {
            return Err(Error::Shape(format!("cannot add a box at {hole}")));
        }
        let mut rows: Vec<Vec<Option<Letter>>> =
            base.rows().iter().map(|r| r.iter().copied().map(Some).collect()).collect();
        if hole.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[hole.row - 1].push(None);
        Ok(PuncturedTableau { rows, hole })
    }

    pub fn hole(&self) -> Cell {
        self.hole
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        *self.rows.get(cell.row - 1)?.get(cell.col - 1)?
    }

    /// Fills the hole with `entry`.
    pub fn fill(&self, entry: Letter) -> Tableau<Letter> {
        let rows = self.rows.iter().map(|r| r.iter().map(|e| e.unwrap_or(entry)).collect()).collect();
        Tableau::from_rows(rows).expect("punctured tableaux have a partition shape")
    }

    /// Whether the hole has no box to its right or below it.
    pub fn hole_is_outer_corner(&self) -> bool {
        let h = self.hole;
        self.rows[h.row - 1].len() == h.col && self.rows.get(h.row).is_none_or(|r| r.len() < h.col)
    }

    /// Drops the hole, which must be an outer corner.
    fn remove_hole(mut self) -> Tableau<Letter> {
        debug_assert!(self.hole_is_outer_corner());
        self.rows[self.hole.row - 1].pop();
        if self.rows[self.hole.row - 1].is_empty() {
            self.rows.pop();
        }
        let rows = self.rows.into_iter().map(|r| r.into_iter().map(|e| e.expect("single hole")).collect()).collect();
        Tableau::from_rows(rows).expect("removing an outer corner keeps a partition shape")
    }

    fn move_into_hole(&mut self, from: Cell) -> Letter {
        let entry = self.rows[from.row - 1][from.col - 1].take().expect("source is filled");
        self.rows[self.hole.row - 1][self.hole.col - 1] = Some(entry);
        self.hole = from;
        entry
    }

    /// One forward slide. Returns the trace event, or `None` at an outer corner.
    fn forward_slide(&mut self) -> Option<TraceEvent<Letter>> {
        let h = self.hole;
        let right = Cell::new(h.row, h.col + 1);
        let below = Cell::new(h.row + 1, h.col);
        let from = match (self.get(right), self.get(below)) {
            (None, None) => return None,
            (Some(_), None) => right,
            (None, Some(_)) => below,
            (Some(x), Some(y)) => {
                if x < y || (x == y && x.is_b1()) {
                    right
                } else {
                    below
                }
            }
        };
        let entry = self.move_into_hole(from);
        Some(TraceEvent::Slide { from, to: h, entry })
    }

    /// One reverse slide. Returns `None` once the hole is at `(1,1)`.
    fn reverse_slide(&mut self) -> Option<TraceEvent<Letter>> {
        let h = self.hole;
        let above = Cell::new(h.row.wrapping_sub(1), h.col);
        let left = Cell::new(h.row, h.col.wrapping_sub(1));
        let from = match (self.get(above), self.get(left)) {
            (None, None) => return None,
            (Some(_), None) => above,
            (None, Some(_)) => left,
            (Some(a), Some(b)) => {
                if b > a || (a == b && a.is_b1()) {
                    left
                } else {
                    above
                }
            }
        };
        let entry = self.move_into_hole(from);
        Some(TraceEvent::Slide { from, to: h, entry })
    }
}

impl fmt::Display for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                match e {
                    Some(l) => write!(f, "{l}")?,
                    None => write!(f, "_")?,
                }
            }
        }
        Ok(())
    }
}

/// Slides the hole forward until it is an outer corner, then removes that
/// box. Returns the tableau, the cell where the hole ended, and the slides.
pub fn jdt_forward(p: PuncturedTableau) -> (Tableau<Letter>, Cell, Vec<TraceEvent<Letter>>) {
    let mut p = p;
    let mut trace = Vec::new();
    while let Some(ev) = p.forward_slide() {
        trace.push(ev);
    }
    let end = p.hole;
    trace.push(TraceEvent::Remove { cell: end });
    (p.remove_hole(), end, trace)
}

/// Adds an empty box at the addable cell `corner` and slides it backwards
/// to `(1,1)`, returning every intermediate punctured tableau in order,
/// starting with the one whose hole is at `corner`.
pub fn jdt_reverse_path(t: &Tableau<Letter>, corner: Cell) -> Result<Vec<PuncturedTableau>> {
    let mut p = PuncturedTableau::with_added_hole(t, corner)?;
    let mut path = vec![p.clone()];
    while p.reverse_slide().is_some() {
        path.push(p.clone());
    }
    Ok(path)
}

/// States along the reverse path whose hole lies in a row `r <= m`, paired
/// with `r` and ordered by `r` ascending (path order within a row). These
/// are the candidates for undoing a cancellation.
pub fn jdt_reverse_to_column1(
    t: &Tableau<Letter>,
    corner: Cell,
    params: &AlphabetParams,
) -> Result<Vec<(PuncturedTableau, usize)>> {
    let mut out: Vec<(PuncturedTableau, usize)> = jdt_reverse_path(t, corner)?
        .into_iter()
        .filter(|p| p.hole.row <= params.m as usize)
        .map(|p| {
            let r = p.hole.row;
            (p, r)
        })
        .collect();
    out.sort_by_key(|(_, r)| *r);
    Ok(out)
}
