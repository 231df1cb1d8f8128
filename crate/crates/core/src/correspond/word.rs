use serde::{Deserialize, Serialize};

use crate::alphabet::{AlphabetParams, Letter};
use crate::enumerate::{validate_updown, UpDownTableau};
use crate::error::{Error, Result};
use crate::insertion::{spo_insert, spo_uninsert, Effect, TraceEvent};
use crate::partition::Partition;
use crate::tableau::{validate_tableau, Cell, Tableau, TableauKind};

/// An spo-tableau with the chain of shapes that led to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordPair {
    pub t: Tableau<Letter>,
    pub chain: UpDownTableau,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordStep {
    pub letter: Letter,
    pub effect: Effect,
    pub tableau: Tableau<Letter>,
    pub events: Vec<TraceEvent<Letter>>,
}

/// Inserts the letters of `w` one by one into the empty tableau, recording
/// the shape after each step.
pub fn word_to_updown(w: &[Letter], params: &AlphabetParams) -> Result<WordPair> {
    word_to_updown_trace(w, params).map(|(p, _)| p)
}

pub fn word_to_updown_trace(w: &[Letter], params: &AlphabetParams) -> Result<(WordPair, Vec<WordStep>)> {
    let mut t = Tableau::empty();
    let mut chain = vec![Partition::empty()];
    let mut steps = Vec::with_capacity(w.len());
    for &letter in w {
        let out = spo_insert(&t, letter, params)?;
        t = out.result;
        chain.push(t.shape());
        steps.push(WordStep { letter, effect: out.effect, tableau: t.clone(), events: out.trace });
    }
    Ok((WordPair { t, chain: UpDownTableau::new(chain) }, steps))
}

/// The cell in which two shapes one box apart differ.
fn differing_cell(a: &Partition, b: &Partition) -> Cell {
    let rows = a.len().max(b.len());
    let r = (1..=rows).find(|&r| a.part(r) != b.part(r)).expect("shapes differ");
    Cell::new(r, a.part(r).max(b.part(r)))
}

/// Inverse of [`word_to_updown`].
pub fn updown_to_word(pair: &WordPair, params: &AlphabetParams) -> Result<Vec<Letter>> {
    validate_tableau(&pair.t, TableauKind::Spo, params)?;
    validate_updown(&pair.chain, params).map_err(|v| Error::Shape(format!("up-down chain: {v}")))?;
    let chain = pair.chain.chain();
    if chain.last() != Some(&pair.t.shape()) {
        return Err(Error::Shape("chain does not end at the shape of the tableau".into()));
    }
    let mut t = pair.t.clone();
    let mut word = Vec::with_capacity(chain.len() - 1);
    for k in (1..chain.len()).rev() {
        let (before, after) = (&chain[k - 1], &chain[k]);
        let cell = differing_cell(before, after);
        let effect = if after.size() > before.size() { Effect::Added(cell) } else { Effect::Cancelled(cell) };
        let (prev, x) = spo_uninsert(&t, effect, params)?;
        t = prev;
        word.push(x);
    }
    word.reverse();
    Ok(word)
}
