use crate::alphabet::AlphabetParams;
use crate::array::{validate_array, ArrayClass, TwoLineArray};
use crate::error::{Error, Result};
use crate::insertion::{dual_row_insert, dual_row_uninsert, row_insert, row_uninsert};
use crate::tableau::{Cell, Tableau};

fn burge_params(q: u32) -> Result<AlphabetParams> {
    AlphabetParams::new(0, 0, q.max(1))
}

/// Burge correspondence: row-insert each bottom and put the top directly
/// below the new box. The result has columns of even length.
pub fn burge_forward(l: &TwoLineArray<u32>, q: u32) -> Result<Tableau<u32>> {
    burge_forward_trace(l, q).map(|mut qs| qs.pop().unwrap_or_default())
}

/// Every intermediate `Q_k` of [`burge_forward`], `Q_1` first.
pub fn burge_forward_trace(l: &TwoLineArray<u32>, q: u32) -> Result<Vec<Tableau<u32>>> {
    validate_array(l, ArrayClass::Burge, &burge_params(q)?)?;
    pair_insert(l, row_insert)
}

/// Dual Burge correspondence: dual-row-insert each bottom and put the top
/// directly below the new box. The transpose of the result has rows of
/// even length.
pub fn dual_burge_forward(l: &TwoLineArray<u32>, q: u32) -> Result<Tableau<u32>> {
    dual_burge_forward_trace(l, q).map(|mut s| s.pop().unwrap_or_default())
}

pub fn dual_burge_forward_trace(l: &TwoLineArray<u32>, q: u32) -> Result<Vec<Tableau<u32>>> {
    validate_array(l, ArrayClass::DualBurge, &burge_params(q)?)?;
    pair_insert(l, dual_row_insert)
}

fn pair_insert(
    l: &TwoLineArray<u32>,
    insert: fn(&Tableau<u32>, u32) -> crate::insertion::InsertionOutcome<u32>,
) -> Result<Vec<Tableau<u32>>> {
    let mut t = Tableau::empty();
    let mut out = Vec::with_capacity(l.len());
    for &(i, j) in l.columns() {
        let ins = insert(&t, j);
        let cell = ins.effect.cell();
        t = ins.result;
        t.add_cell(Cell::new(cell.row + 1, cell.col), i)?;
        out.push(t.clone());
    }
    Ok(out)
}

fn column_lengths_even<E>(t: &Tableau<E>) -> bool {
    t.shape().has_even_columns()
}

/// Inverse of [`burge_forward`]: repeatedly delete the rightmost largest
/// entry and reverse-bump the entry directly above it out of the first row.
pub fn burge_inverse(qt: &Tableau<u32>) -> Result<TwoLineArray<u32>> {
    if !qt.is_semistandard() {
        return Err(Error::Parse("tableau is not semistandard".into()));
    }
    if !column_lengths_even(qt) {
        return Err(Error::Shape(format!("shape {} has a column of odd length", qt.shape())));
    }
    let mut t = qt.clone();
    let mut l = TwoLineArray::empty();
    while let Some(&i) = t.max_entry() {
        let cell = t
            .cells()
            .filter(|(_, e)| **e == i)
            .map(|(c, _)| c)
            .max_by_key(|c| (c.col, std::cmp::Reverse(c.row)))
            .expect("max present");
        let (j, rest) = unpair(&t, cell, row_uninsert)?;
        t = rest;
        l.prepend(i, j);
    }
    Ok(l)
}

/// Inverse of [`dual_burge_forward`]: repeatedly delete the lowest largest
/// entry and reverse-dual-bump the entry directly above it.
pub fn dual_burge_inverse(s: &Tableau<u32>) -> Result<TwoLineArray<u32>> {
    if !s.is_dual_semistandard() {
        return Err(Error::Parse("transpose of the tableau is not semistandard".into()));
    }
    if !column_lengths_even(s) {
        return Err(Error::Shape(format!("transpose of shape {} has a row of odd length", s.shape())));
    }
    let mut t = s.clone();
    let mut l = TwoLineArray::empty();
    while let Some(&i) = t.max_entry() {
        let cell = t
            .cells()
            .filter(|(_, e)| **e == i)
            .map(|(c, _)| c)
            .max_by_key(|c| (c.row, std::cmp::Reverse(c.col)))
            .expect("max present");
        let (j, rest) = unpair(&t, cell, dual_row_uninsert)?;
        t = rest;
        l.prepend(i, j);
    }
    Ok(l)
}

type Uninsert = fn(&Tableau<u32>, Cell) -> Result<(Tableau<u32>, u32)>;

fn unpair(t: &Tableau<u32>, cell: Cell, uninsert: Uninsert) -> Result<(u32, Tableau<u32>)> {
    if cell.row == 1 {
        return Err(Error::Infeasible(format!("no box above the largest entry at {cell}")));
    }
    let mut t = t.clone();
    t.remove_corner(cell)?;
    let (rest, j) = uninsert(&t, Cell::new(cell.row - 1, cell.col))?;
    Ok((j, rest))
}
