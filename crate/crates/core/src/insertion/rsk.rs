//! Classical row, column and dual row insertion over any total order.

use crate::error::{Error, Result};
use crate::tableau::{Cell, Tableau};

use super::trace::{Effect, InsertionOutcome, TraceEvent};

/// Row bumping where `x` displaces the leftmost entry `e` with `bumps(e, x)`.
pub(crate) fn row_bump<E, F>(t: &Tableau<E>, x: E, bumps: F) -> InsertionOutcome<E>
where
    E: Clone,
    F: Fn(&E, &E) -> bool,
{
    let mut rows = t.rows().to_vec();
    let mut trace = Vec::new();
    let mut x = x;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x.clone()]);
            let cell = Cell::new(r + 1, 1);
            trace.push(TraceEvent::Place { cell, entry: x });
            return finish(rows, Effect::Added(cell), trace);
        }
        match rows[r].iter().position(|e| bumps(e, &x)) {
            Some(c) => {
                let bumped = std::mem::replace(&mut rows[r][c], x.clone());
                trace.push(TraceEvent::Bump { cell: Cell::new(r + 1, c + 1), bumped: bumped.clone(), entering: x });
                x = bumped;
                r += 1;
            }
            None => {
                rows[r].push(x.clone());
                let cell = Cell::new(r + 1, rows[r].len());
                trace.push(TraceEvent::Place { cell, entry: x });
                return finish(rows, Effect::Added(cell), trace);
            }
        }
    }
}

/// Removes the box at `corner` and reverse-bumps its entry up to the first
/// row, where in each row the rightmost `e` with `accepts(e, v)` is displaced.
pub(crate) fn row_unbump<E, F>(t: &Tableau<E>, corner: Cell, accepts: F) -> Result<(Tableau<E>, E)>
where
    E: Clone + std::fmt::Display,
    F: Fn(&E, &E) -> bool,
{
    let mut t = t.clone();
    let mut v = t.remove_corner(corner)?;
    for r in (1..corner.row).rev() {
        let row = &t.rows()[r - 1];
        let Some(c) = row.iter().rposition(|e| accepts(e, &v)) else {
            return Err(Error::Infeasible(format!("no entry in row {r} can be displaced by {v}")));
        };
        let slot = t.get_mut(Cell::new(r, c + 1)).expect("cell in row");
        v = std::mem::replace(slot, v);
    }
    Ok((t, v))
}

fn finish<E>(rows: Vec<Vec<E>>, effect: Effect, trace: Vec<TraceEvent<E>>) -> InsertionOutcome<E> {
    let result = Tableau::from_rows(rows).expect("bumping keeps a partition shape");
    InsertionOutcome { result, effect, trace }
}

/// `T ← x`: `x` bumps the leftmost entry strictly larger than it.
pub fn row_insert<E: Ord + Clone>(t: &Tableau<E>, x: E) -> InsertionOutcome<E> {
    row_bump(t, x, |e, x| e > x)
}

/// Inverse of [`row_insert`] at the outer corner `corner`.
pub fn row_uninsert<E: Ord + Clone + std::fmt::Display>(t: &Tableau<E>, corner: Cell) -> Result<(Tableau<E>, E)> {
    row_unbump(t, corner, |e, v| e < v)
}

/// `x → T`: `x` bumps the leftmost entry greater than or equal to it.
pub fn dual_row_insert<E: Ord + Clone>(t: &Tableau<E>, x: E) -> InsertionOutcome<E> {
    row_bump(t, x, |e, x| e >= x)
}

/// Inverse of [`dual_row_insert`] at the outer corner `corner`.
pub fn dual_row_uninsert<E: Ord + Clone + std::fmt::Display>(t: &Tableau<E>, corner: Cell) -> Result<(Tableau<E>, E)> {
    row_unbump(t, corner, |e, v| e <= v)
}

fn column_height<E>(t: &Tableau<E>, col: usize) -> usize {
    t.rows().iter().take_while(|r| r.len() >= col).count()
}

/// Column insertion: in each column `x` displaces the smallest entry
/// `>= x`, which moves on to the next column; otherwise `x` lands at the
/// bottom of the column.
pub fn column_insert<E: Ord + Clone>(t: &Tableau<E>, x: E) -> InsertionOutcome<E> {
    let mut t = t.clone();
    let mut trace = Vec::new();
    let mut x = x;
    let mut col = 1;
    loop {
        let height = column_height(&t, col);
        let hit = (1..=height).find(|&r| t.get(Cell::new(r, col)).expect("in column") >= &x);
        match hit {
            Some(r) => {
                let cell = Cell::new(r, col);
                let slot = t.get_mut(cell).expect("in column");
                let bumped = std::mem::replace(slot, x.clone());
                trace.push(TraceEvent::Bump { cell, bumped: bumped.clone(), entering: x });
                x = bumped;
                col += 1;
            }
            None => {
                let cell = Cell::new(height + 1, col);
                trace.push(TraceEvent::Place { cell, entry: x.clone() });
                t.add_cell(cell, x).expect("column insertion keeps a partition shape");
                return InsertionOutcome { result: t, effect: Effect::Added(cell), trace };
            }
        }
    }
}

/// Inverse of [`column_insert`]: the entry at `corner` moves left through
/// the columns, each time displacing the largest entry `<=` it.
pub fn column_uninsert<E: Ord + Clone + std::fmt::Display>(t: &Tableau<E>, corner: Cell) -> Result<(Tableau<E>, E)> {
    let mut t = t.clone();
    let mut v = t.remove_corner(corner)?;
    for col in (1..corner.col).rev() {
        let height = column_height(&t, col);
        let Some(r) = (1..=height).rev().find(|&r| t.get(Cell::new(r, col)).expect("in column") <= &v) else {
            return Err(Error::Infeasible(format!("no entry in column {col} can be displaced by {v}")));
        };
        let slot = t.get_mut(Cell::new(r, col)).expect("in column");
        v = std::mem::replace(slot, v);
    }
    Ok((t, v))
}
