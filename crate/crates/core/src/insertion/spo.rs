//! spo-insertion: Berele-style insertion with cancellation for spo-tableaux.

use crate::alphabet::{AlphabetParams, Letter};
use crate::error::{Error, Result};
use crate::tableau::{validate_tableau, Cell, Tableau, TableauKind};

use super::jdt::{jdt_forward, jdt_reverse_to_column1, PuncturedTableau};
use super::rsk::row_unbump;
use super::trace::{Effect, InsertionOutcome, TraceEvent};

/// Whether `x` displaces `e` when inserted into a row: `B0` letters bump
/// strictly larger entries, `B1` letters bump entries `>=` themselves.
fn displaces(e: &Letter, x: &Letter) -> bool {
    if x.is_b1() {
        e >= x
    } else {
        e > x
    }
}

/// Reverse of [`displaces`]: the rightmost entry that `v` could have been
/// bumped by.
fn displaced_by(e: &Letter, v: &Letter) -> bool {
    if v.is_b1() {
        e <= v
    } else {
        e < v
    }
}

/// `T ← x`.
pub fn spo_insert(t: &Tableau<Letter>, x: Letter, params: &AlphabetParams) -> Result<InsertionOutcome<Letter>> {
    params.check(x)?;
    let mut rows = t.rows().to_vec();
    let mut trace = Vec::new();
    let mut x = x;
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![x]);
            let cell = Cell::new(r + 1, 1);
            trace.push(TraceEvent::Place { cell, entry: x });
            let result = Tableau::from_rows(rows)?;
            return Ok(InsertionOutcome { result, effect: Effect::Added(cell), trace });
        }
        let Some(c) = rows[r].iter().position(|e| displaces(e, &x)) else {
            rows[r].push(x);
            let cell = Cell::new(r + 1, rows[r].len());
            trace.push(TraceEvent::Place { cell, entry: x });
            let result = Tableau::from_rows(rows)?;
            return Ok(InsertionOutcome { result, effect: Effect::Added(cell), trace });
        };
        let cell = Cell::new(r + 1, c + 1);
        let bumped = rows[r][c];
        let row_letter = Letter::sym(r as u32 + 1);
        if x == row_letter && bumped == Letter::bar(r as u32 + 1) {
            trace.push(TraceEvent::Cancel { cell, removed: bumped, discarded: x });
            let base = Tableau::from_rows(rows)?;
            let (result, end, slides) = jdt_forward(PuncturedTableau::new(&base, cell)?);
            trace.extend(slides);
            return Ok(InsertionOutcome { result, effect: Effect::Cancelled(end), trace });
        }
        rows[r][c] = x;
        trace.push(TraceEvent::Bump { cell, bumped, entering: x });
        x = bumped;
    }
    unreachable!("the row loop always returns")
}

/// Moves `v` up from row `start`, displacing in each row the rightmost
/// entry it could have been bumped by, and returns what leaves row 1.
fn reverse_bump_from(rows: &mut [Vec<Letter>], start: usize, v: Letter) -> Option<Letter> {
    let mut v = v;
    for r in (1..=start).rev() {
        let row = &mut rows[r - 1];
        let c = row.iter().rposition(|e| displaced_by(e, &v))?;
        v = std::mem::replace(&mut row[c], v);
    }
    Some(v)
}

/// Inverts one spo-insertion. `effect` gives the box that insertion added,
/// or the cell where a cancelled box was removed. Returns the previous
/// tableau and the inserted letter, or [`Error::Infeasible`] if no
/// insertion produces `(t, effect)`.
pub fn spo_uninsert(t: &Tableau<Letter>, effect: Effect, params: &AlphabetParams) -> Result<(Tableau<Letter>, Letter)> {
    let reproduces = |prev: &Tableau<Letter>, x: Letter| -> bool {
        validate_tableau(prev, TableauKind::Spo, params).is_ok()
            && spo_insert(prev, x, params).is_ok_and(|out| &out.result == t && out.effect == effect)
    };
    match effect {
        Effect::Added(cell) => {
            let (prev, x) = row_unbump(t, cell, displaced_by)?;
            if reproduces(&prev, x) {
                Ok((prev, x))
            } else {
                Err(Error::Infeasible(format!("no insertion adds the box at {cell}")))
            }
        }
        Effect::Cancelled(corner) => {
            for (p, r) in jdt_reverse_to_column1(t, corner, params)? {
                let sym = Letter::sym(r as u32);
                let mut rows = p.fill(sym).into_rows();
                let Some(c) = rows[r - 1].iter().rposition(|e| *e == sym) else {
                    continue;
                };
                rows[r - 1][c] = Letter::bar(r as u32);
                let Some(x) = reverse_bump_from(&mut rows, r - 1, sym) else {
                    continue;
                };
                let prev = Tableau::from_rows(rows)?;
                if reproduces(&prev, x) {
                    return Ok((prev, x));
                }
            }
            Err(Error::Infeasible(format!("no cancelling insertion ends at {corner}")))
        }
    }
}
