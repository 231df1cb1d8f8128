use crate::alphabet::{AlphabetParams, Letter};
use crate::array::{validate_array, ArrayClass, TwoLineArray};
use crate::error::{Error, Result};
use crate::insertion::{dual_row_insert, dual_row_uninsert, spo_insert, spo_uninsert, Effect};
use crate::tableau::Tableau;

use super::spo::check_tableaux;
use super::{DualSpoTriple, ForwardStep, InverseStep};

/// The dual spo-correspondence `A* → (P̃, Pᵗ, L)`.
pub fn dual_spo_forward(pi: &TwoLineArray<Letter>, params: &AlphabetParams) -> Result<DualSpoTriple> {
    dual_spo_forward_trace(pi, params).map(|(t, _)| t)
}

/// [`dual_spo_forward`] with the state after every column. The `l` in each
/// step is in insertion order; only the final triple is sorted.
pub fn dual_spo_forward_trace(
    pi: &TwoLineArray<Letter>,
    params: &AlphabetParams,
) -> Result<(DualSpoTriple, Vec<ForwardStep>)> {
    validate_array(pi, ArrayClass::AStar, params)?;
    let mut ptilde = Tableau::empty();
    let mut p: Tableau<u32> = Tableau::empty();
    let mut l = TwoLineArray::empty();
    let mut steps = Vec::with_capacity(pi.len());
    for &(i, j) in pi.columns() {
        let out = spo_insert(&ptilde, j, params)?;
        match out.effect {
            Effect::Added(cell) => p.add_cell(cell, i)?,
            Effect::Cancelled(corner) => {
                let (rest, a) = dual_row_uninsert(&p, corner)?;
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
    let mut cols = l.columns().to_vec();
    cols.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    Ok((DualSpoTriple { ptilde, pt: p.transpose(), l: TwoLineArray::new(cols) }, steps))
}

/// Inverse of [`dual_spo_forward`].
pub fn dual_spo_inverse(triple: &DualSpoTriple, params: &AlphabetParams) -> Result<TwoLineArray<Letter>> {
    dual_spo_inverse_trace(triple, params).map(|(pi, _)| pi)
}

/// [`dual_spo_inverse`] with the state after every recovered column. The
/// `p` of each step has the shape of `ptilde`.
pub fn dual_spo_inverse_trace(
    triple: &DualSpoTriple,
    params: &AlphabetParams,
) -> Result<(TwoLineArray<Letter>, Vec<InverseStep>)> {
    let p0 = triple.pt.transpose();
    check_tableaux(&triple.ptilde, &p0, params)?;
    if !triple.pt.is_semistandard() {
        return Err(Error::Parse("Pᵗ is not semistandard".into()));
    }
    if triple.ptilde.shape().conjugate() != triple.pt.shape() {
        return Err(Error::Shape(format!(
            "P̃ has shape {} but Pᵗ has shape {}",
            triple.ptilde.shape(),
            triple.pt.shape()
        )));
    }
    validate_array(&triple.l, ArrayClass::DualBurge, params)?;

    let mut ptilde = triple.ptilde.clone();
    let mut p = p0;
    let mut cols = triple.l.columns().to_vec();
    cols.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
    let mut l = TwoLineArray::new(cols);
    let mut pi = TwoLineArray::empty();
    let mut steps = Vec::new();
    loop {
        let in_p = p.max_entry().copied();
        let in_l = l.columns().iter().map(|c| c.0).max();
        let (i, effect) = match (in_p, in_l) {
            (None, None) => break,
            (a, Some(b)) if a.is_none_or(|a| b >= a) => {
                let idx = l.columns().iter().rposition(|c| c.0 == b).expect("top present");
                let (_, a) = l.remove(idx);
                let out = dual_row_insert(&p, a);
                p = out.result;
                (b, Effect::Cancelled(out.effect.cell()))
            }
            (Some(a), _) => {
                let cell = p
                    .cells()
                    .filter(|(_, e)| **e == a)
                    .map(|(c, _)| c)
                    .max_by_key(|c| (c.row, std::cmp::Reverse(c.col)))
                    .expect("value present");
                p.remove_corner(cell)?;
                (a, Effect::Added(cell))
            }
            (None, Some(_)) => unreachable!("covered by the first arm"),
        };
        let (prev, j) = spo_uninsert(&ptilde, effect, params)?;
        ptilde = prev;
        pi.prepend(i, j);
        steps.push(InverseStep { column: (i, j), effect, ptilde: ptilde.clone(), p: p.clone(), l: l.clone() });
    }
    validate_array(&pi, ArrayClass::AStar, params)
        .map_err(|v| Error::Infeasible(format!("recovered array is not in A*: {v}")))?;
    Ok((pi, steps))
}
