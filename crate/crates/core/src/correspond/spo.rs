use crate::alphabet::{AlphabetParams, Letter};
use crate::array::{validate_array, ArrayClass, TwoLineArray};
use crate::error::{Error, Result};
use crate::insertion::{column_insert, column_uninsert, spo_insert, spo_uninsert, Effect};
use crate::tableau::{validate_tableau, Cell, Tableau, TableauKind};

use super::{ForwardStep, InverseStep, SpoTriple};

/// The spo-correspondence `A → (P̃, P, L)`.
pub fn spo_forward(pi: &TwoLineArray<Letter>, params: &AlphabetParams) -> Result<SpoTriple> {
    spo_forward_trace(pi, params).map(|(t, _)| t)
}

/// [`spo_forward`] with the state after every column.
pub fn spo_forward_trace(pi: &TwoLineArray<Letter>, params: &AlphabetParams) -> Result<(SpoTriple, Vec<ForwardStep>)> {
    validate_array(pi, ArrayClass::A, params)?;
    let mut ptilde = Tableau::empty();
    let mut p: Tableau<u32> = Tableau::empty();
    let mut l = TwoLineArray::empty();
    let mut steps = Vec::with_capacity(pi.len());
    for &(i, j) in pi.columns() {
        let out = spo_insert(&ptilde, j, params)?;
        match out.effect {
            Effect::Added(cell) => p.add_cell(cell, i)?,
            Effect::Cancelled(corner) => {
                let (rest, a) = column_uninsert(&p, corner)?;
                p = rest;
                l.push(i, a);
            }
        }
        ptilde = out.result;
        steps.push(ForwardStep {
            column: (i, j),
            effect: out.effect,
            ptilde: ptilde.clone(),
            p: p.clone(),
            l: l.clone(),
            events: out.trace,
        });
    }
    Ok((SpoTriple { ptilde, p, l }, steps))
}

/// Checks the shape and class conditions of a triple.
pub(crate) fn check_tableaux(ptilde: &Tableau<Letter>, p: &Tableau<u32>, params: &AlphabetParams) -> Result<()> {
    validate_tableau(ptilde, TableauKind::Spo, params)?;
    if let Some(&bad) = p.entries().find(|&&e| e == 0 || e > params.q) {
        return Err(Error::Parse(format!("recording entry {bad} outside 1..={}", params.q)));
    }
    Ok(())
}

/// Inverse of [`spo_forward`].
pub fn spo_inverse(triple: &SpoTriple, params: &AlphabetParams) -> Result<TwoLineArray<Letter>> {
    spo_inverse_trace(triple, params).map(|(pi, _)| pi)
}

/// [`spo_inverse`] with the state after every recovered column.
pub fn spo_inverse_trace(
    triple: &SpoTriple,
    params: &AlphabetParams,
) -> Result<(TwoLineArray<Letter>, Vec<InverseStep>)> {
    check_tableaux(&triple.ptilde, &triple.p, params)?;
    if !triple.p.is_semistandard() {
        return Err(Error::Parse("recording tableau is not semistandard".into()));
    }
    if triple.ptilde.shape() != triple.p.shape() {
        return Err(Error::Shape(format!(
            "P̃ has shape {} but P has shape {}",
            triple.ptilde.shape(),
            triple.p.shape()
        )));
    }
    validate_array(&triple.l, ArrayClass::Burge, params)?;

    let mut ptilde = triple.ptilde.clone();
    let mut p = triple.p.clone();
    let mut l = triple.l.clone();
    let mut pi = TwoLineArray::empty();
    let mut steps = Vec::new();
    loop {
        let in_p = p.max_entry().copied();
        let in_l = l.columns().iter().map(|c| c.0).max();
        let (i, effect) = match (in_p, in_l) {
            (None, None) => break,
            (Some(a), b) if b.is_none_or(|b| a >= b) => {
                let cell = rightmost_occurrence(&p, a);
                p.remove_corner(cell)?;
                (a, Effect::Added(cell))
            }
            (_, Some(b)) => {
                let idx = l.columns().iter().rposition(|c| c.0 == b).expect("top present");
                let (_, a) = l.remove(idx);
                let out = column_insert(&p, a);
                p = out.result;
                (b, Effect::Cancelled(out.effect.cell()))
            }
            (Some(_), None) => unreachable!("covered by the first arm"),
        };
        let (prev, j) = spo_uninsert(&ptilde, effect, params)?;
        ptilde = prev;
        pi.prepend(i, j);
        steps.push(InverseStep { column: (i, j), effect, ptilde: ptilde.clone(), p: p.clone(), l: l.clone() });
    }
    validate_array(&pi, ArrayClass::A, params)
        .map_err(|v| Error::Infeasible(format!("recovered array is not in A: {v}")))?;
    Ok((pi, steps))
}

/// The rightmost cell holding `v`; for the largest entry this is an outer corner.
fn rightmost_occurrence<E: PartialEq>(t: &Tableau<E>, v: E) -> Cell {
    t.cells()
        .filter(|(_, e)| **e == v)
        .map(|(c, _)| c)
        .max_by_key(|c| (c.col, std::cmp::Reverse(c.row)))
        .expect("value present")
}
