//! Exhaustive enumeration of tableaux and up-down tableaux at desk scale.
//!
//! Fillings are produced by a backtracking search over cells in row-major
//! order, trying alphabet entries in increasing order, so the output is
//! lexicographic in the row-major sequence of entries.

use serde::{Deserialize, Serialize};

use crate::alphabet::{AlphabetParams, Letter};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::tableau::{SkewTableau, Tableau, TableauKind};

/// Guards against accidental blowup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    pub max_cells: usize,
    pub max_alphabet: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps { max_cells: 8, max_alphabet: 8 }
    }
}

impl EnumCaps {
    pub fn unbounded() -> Self {
        EnumCaps { max_cells: usize::MAX, max_alphabet: usize::MAX }
    }

    fn check(&self, cells: usize, alphabet: usize) -> Result<()> {
        if cells > self.max_cells {
            return Err(Error::CapExceeded { what: "cell count", got: cells, cap: self.max_cells });
        }
        if alphabet > self.max_alphabet {
            return Err(Error::CapExceeded { what: "alphabet size", got: alphabet, cap: self.max_alphabet });
        }
        Ok(())
    }
}

type LocalRule<E> = fn(row: usize, left: Option<&E>, above: Option<&E>, v: &E) -> bool;

/// Streaming backtracking filler over a skew diagram.
pub struct Fillings<E> {
    shape: SkewShape,
    cells: Vec<(usize, usize)>,
    /// For each cell, indices (into `cells`) of its left and upper neighbours.
    neighbours: Vec<(Option<usize>, Option<usize>)>,
    alphabet: Vec<E>,
    rule: LocalRule<E>,
    choice: Vec<usize>,
    state: FillState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FillState {
    Fresh,
    Running,
    Done,
}

impl<E: Clone> Fillings<E> {
    fn new(shape: SkewShape, alphabet: Vec<E>, rule: LocalRule<E>) -> Self {
        let cells = shape.cells();
        let index = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
        let neighbours = cells
            .iter()
            .map(|&(r, c)| {
                let left = if c > 1 { index(r, c - 1) } else { None };
                let above = if r > 1 { index(r - 1, c) } else { None };
                (left, above)
            })
            .collect();
        Fillings { shape, cells, neighbours, alphabet, rule, choice: Vec::new(), state: FillState::Fresh }
    }

    fn fits(&self, pos: usize, candidate: usize) -> bool {
        let (left, above) = self.neighbours[pos];
        let get = |i: Option<usize>| i.map(|i| &self.alphabet[self.choice[i]]);
        (self.rule)(self.cells[pos].0, get(left), get(above), &self.alphabet[candidate])
    }

    /// Places the smallest fitting entry `>= from` at position `choice.len()`.
    fn place_from(&mut self, from: usize) -> bool {
        let pos = self.choice.len();
        for cand in from..self.alphabet.len() {
            if self.fits(pos, cand) {
                self.choice.push(cand);
                return true;
            }
        }
        false
    }

    fn advance(&mut self) -> bool {
        let mut from = 0;
        loop {
            if self.choice.len() == self.cells.len() {
                return true;
            }
            if self.place_from(from) {
                from = 0;
                continue;
            }
            match self.choice.pop() {
                Some(prev) => from = prev + 1,
                None => return false,
            }
        }
    }

    fn current_rows(&self) -> Vec<Vec<E>> {
        let mut rows: Vec<Vec<E>> = vec![Vec::new(); self.shape.outer().len()];
        for (&(r, _), &ch) in self.cells.iter().zip(&self.choice) {
            rows[r - 1].push(self.alphabet[ch].clone());
        }
        rows
    }

    fn next_rows(&mut self) -> Option<Vec<Vec<E>>> {
        match self.state {
            FillState::Done => return None,
            FillState::Fresh => {
                self.state = FillState::Running;
            }
            FillState::Running => {
                // Step past the filling emitted last time.
                let Some(last) = self.choice.pop() else {
                    self.state = FillState::Done;
                    return None;
                };
                if !self.place_from(last + 1) && !self.backtrack() {
                    self.state = FillState::Done;
                    return None;
                }
            }
        }
        if self.advance() {
            Some(self.current_rows())
        } else {
            self.state = FillState::Done;
            None
        }
    }

    fn backtrack(&mut self) -> bool {
        loop {
            match self.choice.pop() {
                Some(prev) => {
                    if self.place_from(prev + 1) {
                        return true;
                    }
                }
                None => return false,
            }
        }
    }
}

/// Iterator over straight-shape tableaux.
pub struct TableauIter<E>(Fillings<E>);

impl<E: Clone> Iterator for TableauIter<E> {
    type Item = Tableau<E>;

    fn next(&mut self) -> Option<Tableau<E>> {
        self.0.next_rows().map(|rows| Tableau::from_rows(rows).expect("fillings follow the shape"))
    }
}

/// Iterator over skew tableaux.
pub struct SkewTableauIter<E>(Fillings<E>);

impl<E: Clone> Iterator for SkewTableauIter<E> {
    type Item = SkewTableau<E>;

    fn next(&mut self) -> Option<SkewTableau<E>> {
        let shape = self.0.shape.clone();
        self.0.next_rows().map(|rows| SkewTableau::new(shape, rows).expect("fillings follow the shape"))
    }
}

fn semistandard_rule<E: Ord>(_: usize, left: Option<&E>, above: Option<&E>, v: &E) -> bool {
    left.is_none_or(|l| l <= v) && above.is_none_or(|a| a < v)
}

fn dual_rule<E: Ord>(_: usize, left: Option<&E>, above: Option<&E>, v: &E) -> bool {
    left.is_none_or(|l| l < v) && above.is_none_or(|a| a <= v)
}

fn symplectic_rule(row: usize, left: Option<&Letter>, above: Option<&Letter>, v: &Letter) -> bool {
    v.is_b0() && *v >= Letter::sym(row as u32) && semistandard_rule(row, left, above, v)
}

fn spo_rule(row: usize, left: Option<&Letter>, above: Option<&Letter>, v: &Letter) -> bool {
    if v.is_b0() {
        // B0 cells: weak rows, strict columns, nothing from B1 above or left.
        *v >= Letter::sym(row as u32) && semistandard_rule(row, left, above, v)
    } else {
        // B1 cells: strict rows, weak columns among B1; anything from B0 is smaller.
        left.is_none_or(|l| l < v) && above.is_none_or(|a| a.is_b0() || a <= v)
    }
}

/// Streams every letter tableau of `shape` valid for `kind`, in
/// lexicographic order of row-major rank sequences.
pub fn enumerate_tableaux(
    shape: &Partition,
    kind: TableauKind,
    params: &AlphabetParams,
    caps: EnumCaps,
) -> Result<TableauIter<Letter>> {
    caps.check(shape.size(), params.alphabet_size() as usize)?;
    let (alphabet, rule): (Vec<Letter>, LocalRule<Letter>) = match kind {
        TableauKind::Semistandard | TableauKind::SkewSemistandard => (params.letters(), semistandard_rule),
        TableauKind::DualSemistandard => (params.letters(), dual_rule),
        TableauKind::Symplectic => (params.b0_letters(), symplectic_rule),
        TableauKind::Spo => (params.letters(), spo_rule),
    };
    Ok(TableauIter(Fillings::new(shape.clone().into(), alphabet, rule)))
}

/// Semistandard tableaux of `shape` with entries in `1..=max`.
pub fn enumerate_ssyt(shape: &Partition, max: u32, caps: EnumCaps) -> Result<TableauIter<u32>> {
    caps.check(shape.size(), max as usize)?;
    Ok(TableauIter(Fillings::new(shape.clone().into(), (1..=max).collect(), semistandard_rule)))
}

/// Tableaux of `shape` with entries in `1..=max` whose transpose is semistandard.
pub fn enumerate_dual_ssyt(shape: &Partition, max: u32, caps: EnumCaps) -> Result<TableauIter<u32>> {
    caps.check(shape.size(), max as usize)?;
    Ok(TableauIter(Fillings::new(shape.clone().into(), (1..=max).collect(), dual_rule)))
}

/// Semistandard skew tableaux of `shape` with entries in `1..=max`.
pub fn enumerate_skew_ssyt(shape: &SkewShape, max: u32, caps: EnumCaps) -> Result<SkewTableauIter<u32>> {
    caps.check(shape.size(), max as usize)?;
    Ok(SkewTableauIter(Fillings::new(shape.clone(), (1..=max).collect(), semistandard_rule)))
}

/// Number of spo-tableaux of shape `λ`.
pub fn count_spo(shape: &Partition, params: &AlphabetParams, caps: EnumCaps) -> Result<usize> {
    Ok(enumerate_tableaux(shape, TableauKind::Spo, params, caps)?.count())
}

/// A chain of shapes `∅ = λ⁰, λ¹, …, λᵏ`, each differing from the last by one box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UpDownTableau {
    chain: Vec<Partition>,
}

impl UpDownTableau {
    pub fn new(chain: Vec<Partition>) -> Self {
        UpDownTableau { chain }
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// Number of steps `k`.
    pub fn len(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> Option<&Partition> {
        self.chain.last()
    }
}

/// Where an up-down chain fails to be an up-down `(m, n)`-tableau.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("step {step}: {reason}")]
pub struct UpDownViolation {
    pub step: usize,
    pub reason: String,
}

/// Whether `a` and `b` differ by exactly one box.
pub(crate) fn one_box_apart(a: &Partition, b: &Partition) -> bool {
    let rows = a.len().max(b.len());
    let mut diff = 0usize;
    for r in 1..=rows {
        diff += a.part(r).abs_diff(b.part(r));
    }
    diff == 1
}

pub fn validate_updown(chain: &UpDownTableau, params: &AlphabetParams) -> std::result::Result<(), UpDownViolation> {
    let fail = |step: usize, reason: String| Err(UpDownViolation { step, reason });
    match chain.chain.first() {
        None => return fail(0, "chain is empty".into()),
        Some(first) if !first.is_empty() => return fail(0, "chain must start at ∅".into()),
        _ => {}
    }
    for (i, lam) in chain.chain.iter().enumerate() {
        if i > 0 && !one_box_apart(&chain.chain[i - 1], lam) {
            return fail(i, format!("{} and {lam} do not differ by one box", chain.chain[i - 1]));
        }
        if lam.part(params.m as usize + 1) > params.n as usize {
            return fail(i, format!("row {} of {lam} exceeds n = {}", params.m + 1, params.n));
        }
    }
    Ok(())
}

/// Every up-down `(m, n)`-tableau of shape `shape` and length `k`.
/// Empty when the size or parity does not allow one.
pub fn enumerate_updown(shape: &Partition, k: usize, params: &AlphabetParams) -> Vec<UpDownTableau> {
    let mut out = Vec::new();
    if k < shape.size() || !(k - shape.size()).is_multiple_of(2) {
        return out;
    }
    let bound_row = params.m as usize + 1;
    let bound = params.n as usize;
    fn distance(a: &Partition, b: &Partition) -> usize {
        let rows = a.len().max(b.len());
        (1..=rows).map(|r| a.part(r).abs_diff(b.part(r))).sum()
    }
    fn go(
        chain: &mut Vec<Partition>,
        k: usize,
        target: &Partition,
        bound_row: usize,
        bound: usize,
        out: &mut Vec<UpDownTableau>,
    ) {
        let cur = chain.last().expect("chain starts at ∅").clone();
        let remaining = k + 1 - chain.len();
        if remaining == 0 {
            if &cur == target {
                out.push(UpDownTableau::new(chain.clone()));
            }
            return;
        }
        if distance(&cur, target) > remaining {
            return;
        }
        let mut nexts: Vec<Partition> = cur
            .addable_cells()
            .into_iter()
            .map(|(r, _)| cur.add_box(r).expect("addable"))
            .chain(cur.removable_cells().into_iter().map(|(r, _)| cur.remove_box(r).expect("removable")))
            .filter(|p| p.part(bound_row) <= bound)
            .collect();
        nexts.sort();
        for next in nexts {
            chain.push(next);
            go(chain, k, target, bound_row, bound, out);
            chain.pop();
        }
    }
    go(&mut vec![Partition::empty()], k, shape, bound_row, bound, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::tableau::validate_tableau;

    fn params(m: u32, n: u32) -> AlphabetParams {
        AlphabetParams::new(m, n, 1).unwrap()
    }

    fn render(t: &Tableau<Letter>) -> String {
        t.to_string().replace('\n', "/")
    }

    #[test]
    fn one_row_example() {
        let got: Vec<String> = enumerate_tableaux(&partition![2], TableauKind::Spo, &params(1, 2), EnumCaps::default())
            .unwrap()
            .map(|t| render(&t))
            .collect();
        assert_eq!(got, ["1 1", "1 1b", "1 1o", "1 2o", "1b 1b", "1b 1o", "1b 2o", "1o 2o"]);
    }

    #[test]
    fn empty_shape_has_one_tableau() {
        let got: Vec<_> = enumerate_tableaux(&Partition::empty(), TableauKind::Spo, &params(1, 1), EnumCaps::default())
            .unwrap()
            .collect();
        assert_eq!(got, vec![Tableau::empty()]);
        assert_eq!(enumerate_ssyt(&Partition::empty(), 3, EnumCaps::default()).unwrap().count(), 1);
    }

    #[test]
    fn column_of_two() {
        let got: Vec<String> =
            enumerate_tableaux(&partition![1, 1], TableauKind::Spo, &params(1, 1), EnumCaps::default())
                .unwrap()
                .map(|t| render(&t))
                .collect();
        assert_eq!(got, ["1/1o", "1b/1o", "1o/1o"]);
    }

    #[test]
    fn impossible_shape_yields_nothing() {
        // Row 2 of a symplectic tableau with m = 1 cannot be filled.
        let n = enumerate_tableaux(&partition![1, 1], TableauKind::Symplectic, &params(1, 0), EnumCaps::default())
            .unwrap()
            .count();
        assert_eq!(n, 0);
    }

    #[test]
    fn caps_are_enforced() {
        let big = partition![5, 4];
        assert!(matches!(
            enumerate_tableaux(&big, TableauKind::Spo, &params(1, 1), EnumCaps::default()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_tableaux(&big, TableauKind::Spo, &params(1, 1), EnumCaps::unbounded()).is_ok());
    }

    #[test]
    fn output_is_valid_and_sorted() {
        let p = params(2, 1);
        let rank_seq = |t: &Tableau<Letter>| t.entries().map(|l| l.rank(2)).collect::<Vec<_>>();
        for kind in
            [TableauKind::Spo, TableauKind::Symplectic, TableauKind::Semistandard, TableauKind::DualSemistandard]
        {
            let all: Vec<_> = enumerate_tableaux(&partition![2, 1], kind, &p, EnumCaps::default()).unwrap().collect();
            for t in &all {
                validate_tableau(t, kind, &p).unwrap();
            }
            assert!(all.windows(2).all(|w| rank_seq(&w[0]) < rank_seq(&w[1])));
        }
    }

    #[test]
    fn ssyt_counts() {
        // Number of SSYT of shape (2,1) on {1,2,3} is 8.
        assert_eq!(enumerate_ssyt(&partition![2, 1], 3, EnumCaps::default()).unwrap().count(), 8);
        assert_eq!(enumerate_dual_ssyt(&partition![2, 1], 3, EnumCaps::default()).unwrap().count(), 8);
        let skew = SkewShape::new(partition![2, 1], partition![1]).unwrap();
        assert_eq!(enumerate_skew_ssyt(&skew, 2, EnumCaps::default()).unwrap().count(), 4);
    }

    #[test]
    fn updown_validation() {
        let p = params(1, 1);
        assert!(validate_updown(&UpDownTableau::new(vec![partition![], partition![1], partition![2]]), &p).is_ok());
        assert!(validate_updown(&UpDownTableau::new(vec![partition![]]), &p).is_ok());
        let v =
            validate_updown(&UpDownTableau::new(vec![partition![], partition![1], partition![1, 1]]), &params(1, 0))
                .unwrap_err();
        assert_eq!(v.step, 2);
        assert!(validate_updown(&UpDownTableau::new(vec![partition![], partition![2]]), &p).is_err());
    }

    #[test]
    fn updown_enumeration() {
        let p = params(1, 1);
        assert_eq!(enumerate_updown(&partition![2], 2, &p).len(), 1);
        assert_eq!(enumerate_updown(&Partition::empty(), 0, &p).len(), 1);
        let two = enumerate_updown(&Partition::empty(), 2, &p);
        assert_eq!(two, vec![UpDownTableau::new(vec![partition![], partition![1], partition![]])]);
        assert!(enumerate_updown(&partition![2], 3, &p).is_empty());
        assert!(enumerate_updown(&partition![2], 1, &p).is_empty());
        for ud in enumerate_updown(&partition![1], 5, &p) {
            validate_updown(&ud, &p).unwrap();
        }
    }
}
