//! Exhaustive checks over small domains: roundtrips of every bijection and
//! the insertion lemmas. Each driver returns a [`SweepReport`] instead of
//! panicking so callers can print or assert as they like.

use serde::Serialize;

use crate::alphabet::{AlphabetParams, Letter};
use crate::array::{arrays_a, arrays_astar, arrays_burge, TwoLineArray};
use crate::correspond::{
    burge_forward, burge_inverse, dual_burge_forward, dual_burge_inverse, dual_spo_forward, dual_spo_inverse,
    spo_forward, spo_inverse, updown_to_word, word_to_updown, DualSpoTriple, SpoTriple, WordPair,
};
use crate::enumerate::{enumerate_dual_ssyt, enumerate_ssyt, enumerate_tableaux, enumerate_updown, EnumCaps};
use crate::exec::Exec;
use crate::insertion::{spo_insert, Effect};
use crate::partition::Partition;
use crate::tableau::{Tableau, TableauKind};

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub checked: usize,
    /// Number of cases that failed; only the first few are described.
    pub failed: usize,
    pub failures: Vec<String>,
}

const MAX_LISTED: usize = 5;

impl SweepReport {
    fn new(name: impl Into<String>) -> Self {
        SweepReport { name: name.into(), ..Default::default() }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_LISTED {
                self.failures.push(f);
            }
        }
        self
    }

    fn record(&mut self, pass: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !pass {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(describe());
            }
        }
    }
}

/// The three parts of a bijection check: equal sizes of domain and
/// codomain, `inverse ∘ forward = id` on the domain and
/// `forward ∘ inverse = id` on the codomain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub name: String,
    pub sizes: SweepReport,
    pub inverse_after_forward: SweepReport,
    pub forward_after_inverse: SweepReport,
}

impl RoundtripReport {
    fn new(name: &str) -> Self {
        RoundtripReport {
            name: name.into(),
            sizes: SweepReport::new("sizes"),
            inverse_after_forward: SweepReport::new("inverse after forward"),
            forward_after_inverse: SweepReport::new("forward after inverse"),
        }
    }

    pub fn parts(&self) -> [&SweepReport; 3] {
        [&self.sizes, &self.inverse_after_forward, &self.forward_after_inverse]
    }

    pub fn ok(&self) -> bool {
        self.parts().iter().all(|r| r.ok())
    }
}

/// Runs `check` on every item and folds the per-item reports.
fn sweep<T, F>(name: &str, items: Vec<T>, exec: Exec, check: F) -> SweepReport
where
    T: Send,
    F: Fn(T, &mut SweepReport) + Sync + Send,
{
    let base = SweepReport::new(name);
    exec.map_reduce(
        items,
        base.clone(),
        |item| {
            let mut r = SweepReport::new(name);
            check(item, &mut r);
            r
        },
        SweepReport::merge,
    )
}

/// Every spo-tableau with at most `max_cells` boxes.
pub fn spo_tableaux_up_to(max_cells: usize, params: &AlphabetParams) -> Vec<Tableau<Letter>> {
    (0..=max_cells)
        .flat_map(Partition::all_of)
        .flat_map(|shape| {
            enumerate_tableaux(&shape, TableauKind::Spo, params, EnumCaps::unbounded())
                .expect("unbounded caps")
                .collect::<Vec<_>>()
        })
        .collect()
}

fn ssyt(shape: &Partition, q: u32) -> Vec<Tableau<u32>> {
    enumerate_ssyt(shape, q, EnumCaps::unbounded()).expect("unbounded caps").collect()
}

/// Every triple `(P̃, P, L)` whose preimage has exactly `k` columns.
pub fn spo_triples(params: &AlphabetParams, k: usize) -> Vec<SpoTriple> {
    let mut out = Vec::new();
    for j in 0..=k / 2 {
        let ls = arrays_burge(params.q, j as u32, false);
        for shape in Partition::all_of(k - 2 * j) {
            let spo: Vec<_> = enumerate_tableaux(&shape, TableauKind::Spo, params, EnumCaps::unbounded())
                .expect("unbounded")
                .collect();
            let ps = ssyt(&shape, params.q);
            for t in &spo {
                for p in &ps {
                    for l in &ls {
                        out.push(SpoTriple { ptilde: t.clone(), p: p.clone(), l: l.clone() });
                    }
                }
            }
        }
    }
    out
}

/// Every dual triple `(P̃, Pᵗ, L)` whose preimage has exactly `k` columns.
pub fn dual_spo_triples(params: &AlphabetParams, k: usize) -> Vec<DualSpoTriple> {
    let mut out = Vec::new();
    for j in 0..=k / 2 {
        let ls = arrays_burge(params.q, j as u32, true);
        for shape in Partition::all_of(k - 2 * j) {
            let spo: Vec<_> = enumerate_tableaux(&shape, TableauKind::Spo, params, EnumCaps::unbounded())
                .expect("unbounded")
                .collect();
            let pts = ssyt(&shape.conjugate(), params.q);
            for t in &spo {
                for pt in &pts {
                    for l in &ls {
                        out.push(DualSpoTriple { ptilde: t.clone(), pt: pt.clone(), l: l.clone() });
                    }
                }
            }
        }
    }
    out
}

/// Both compositions of the spo-correspondence over all arrays in `A` with
/// at most `max_cols` columns and all triples of the same sizes, plus a
/// size comparison for each column count.
pub fn spo_roundtrip(params: &AlphabetParams, max_cols: usize, exec: Exec) -> RoundtripReport {
    let p = *params;
    let mut report = RoundtripReport::new("spo correspondence");
    for k in 0..=max_cols {
        let arrays = arrays_a(params, k as u32);
        let triples = spo_triples(params, k);
        report.sizes.record(arrays.len() == triples.len(), || {
            format!("{k} columns: {} arrays but {} triples", arrays.len(), triples.len())
        });
        let left = sweep("", arrays, exec, |pi: TwoLineArray<Letter>, r| {
            let back = spo_forward(&pi, &p).and_then(|t| spo_inverse(&t, &p));
            r.record(back.as_ref().is_ok_and(|b| b == &pi), || format!("inverse(forward({pi:?})) = {back:?}"));
        });
        let right = sweep("", triples, exec, |t: SpoTriple, r| {
            let back = spo_inverse(&t, &p).and_then(|pi| spo_forward(&pi, &p));
            r.record(back.as_ref().is_ok_and(|b| b == &t), || format!("forward(inverse({t:?})) = {back:?}"));
        });
        report.inverse_after_forward = std::mem::take(&mut report.inverse_after_forward).merge(left);
        report.forward_after_inverse = std::mem::take(&mut report.forward_after_inverse).merge(right);
    }
    report
}

/// As [`spo_roundtrip`] for the dual correspondence on `A*`.
pub fn dual_spo_roundtrip(params: &AlphabetParams, max_cols: usize, exec: Exec) -> RoundtripReport {
    let p = *params;
    let mut report = RoundtripReport::new("dual spo correspondence");
    for k in 0..=max_cols {
        let arrays = arrays_astar(params, k as u32);
        let triples = dual_spo_triples(params, k);
        report.sizes.record(arrays.len() == triples.len(), || {
            format!("{k} columns: {} arrays but {} triples", arrays.len(), triples.len())
        });
        let left = sweep("", arrays, exec, |pi: TwoLineArray<Letter>, r| {
            let back = dual_spo_forward(&pi, &p).and_then(|t| dual_spo_inverse(&t, &p));
            r.record(back.as_ref().is_ok_and(|b| b == &pi), || format!("inverse(forward({pi:?})) = {back:?}"));
        });
        let right = sweep("", triples, exec, |t: DualSpoTriple, r| {
            let back = dual_spo_inverse(&t, &p).and_then(|pi| dual_spo_forward(&pi, &p));
            r.record(back.as_ref().is_ok_and(|b| b == &t), || format!("forward(inverse({t:?})) = {back:?}"));
        });
        report.inverse_after_forward = std::mem::take(&mut report.inverse_after_forward).merge(left);
        report.forward_after_inverse = std::mem::take(&mut report.forward_after_inverse).merge(right);
    }
    report
}

fn even_column_tableaux(max_cells: usize, max_entry: u32, dual: bool) -> Vec<Tableau<u32>> {
    (0..=max_cells)
        .step_by(2)
        .flat_map(Partition::all_of)
        .filter(Partition::has_even_columns)
        .flat_map(|shape| {
            let it: Vec<_> = if dual {
                enumerate_dual_ssyt(&shape, max_entry, EnumCaps::unbounded()).expect("unbounded").collect()
            } else {
                ssyt(&shape, max_entry)
            };
            it
        })
        .collect()
}

/// Burge roundtrips: every even-column semistandard tableau with at most
/// `max_cells` boxes and entries `<= max_entry`, and every Burge array of
/// the matching sizes.
pub fn burge_roundtrip(max_cells: usize, max_entry: u32, exec: Exec) -> RoundtripReport {
    bitableau_roundtrip("burge correspondence", max_cells, max_entry, exec, false)
}

/// Dual Burge roundtrips on tableaux whose transpose is semistandard with
/// even rows.
pub fn dual_burge_roundtrip(max_cells: usize, max_entry: u32, exec: Exec) -> RoundtripReport {
    bitableau_roundtrip("dual burge correspondence", max_cells, max_entry, exec, true)
}

type BurgeForward = fn(&TwoLineArray<u32>, u32) -> crate::Result<Tableau<u32>>;
type BurgeInverse = fn(&Tableau<u32>) -> crate::Result<TwoLineArray<u32>>;

fn bitableau_roundtrip(name: &str, max_cells: usize, q: u32, exec: Exec, dual: bool) -> RoundtripReport {
    let (fwd, inv): (BurgeForward, BurgeInverse) =
        if dual { (dual_burge_forward, dual_burge_inverse) } else { (burge_forward, burge_inverse) };
    let tabs = even_column_tableaux(max_cells, q, dual);
    let arrays: Vec<_> = (0..=max_cells / 2).flat_map(|j| arrays_burge(q, j as u32, dual)).collect();
    let mut report = RoundtripReport::new(name);
    report.sizes.record(tabs.len() == arrays.len(), || format!("{} tableaux but {} arrays", tabs.len(), arrays.len()));
    report.forward_after_inverse = sweep("forward after inverse", tabs, exec, |t, r| {
        let back = inv(&t).and_then(|l| fwd(&l, q));
        r.record(back.as_ref().is_ok_and(|b| b == &t), || format!("forward(inverse({t:?})) = {back:?}"));
    });
    report.inverse_after_forward = sweep("inverse after forward", arrays, exec, |l, r| {
        let back = fwd(&l, q).and_then(|t| inv(&t));
        r.record(back.as_ref().is_ok_and(|b| b == &l), || format!("inverse(forward({l:?})) = {back:?}"));
    });
    report
}

/// All words of length `len` over the alphabet.
pub fn all_words(params: &AlphabetParams, len: usize) -> Vec<Vec<Letter>> {
    let letters = params.letters();
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    words
}

/// Every pair `(T, Λ)` with `Λ` of length `k`.
pub fn word_pairs(params: &AlphabetParams, k: usize) -> Vec<WordPair> {
    let mut out = Vec::new();
    for r in 0..=k / 2 {
        for shape in Partition::all_of(k - 2 * r) {
            let chains = enumerate_updown(&shape, k, params);
            if chains.is_empty() {
                continue;
            }
            for t in enumerate_tableaux(&shape, TableauKind::Spo, params, EnumCaps::unbounded()).expect("unbounded") {
                for chain in &chains {
                    out.push(WordPair { t: t.clone(), chain: chain.clone() });
                }
            }
        }
    }
    out
}

/// Both compositions of the word bijection for words of length `len`.
pub fn word_roundtrip(params: &AlphabetParams, len: usize, exec: Exec) -> RoundtripReport {
    let p = *params;
    let words = all_words(params, len);
    let pairs = word_pairs(params, len);
    let mut report = RoundtripReport::new("word bijection");
    report.sizes.record(words.len() == pairs.len(), || format!("{} words but {} pairs", words.len(), pairs.len()));
    report.inverse_after_forward = sweep("inverse after forward", words, exec, |w: Vec<Letter>, r| {
        let back = word_to_updown(&w, &p).and_then(|pair| updown_to_word(&pair, &p));
        r.record(back.as_ref().is_ok_and(|b| b == &w), || format!("inverse(forward({w:?})) = {back:?}"));
    });
    report.forward_after_inverse = sweep("forward after inverse", pairs, exec, |pair: WordPair, r| {
        let back = updown_to_word(&pair, &p).and_then(|w| word_to_updown(&w, &p));
        r.record(back.as_ref().is_ok_and(|b| b == &pair), || format!("forward(inverse({pair:?})) = {back:?}"));
    });
    report
}

/// Checks the five insertion lemmas on every spo-tableau with at most
/// `max_cells` boxes and every ordered pair of letters.
pub fn lemma_checks(params: &AlphabetParams, max_cells: usize, exec: Exec) -> Vec<SweepReport> {
    let p = *params;
    let letters = params.letters();
    let tabs = spo_tableaux_up_to(max_cells, params);
    let names = [
        "second added box strictly right of the first",
        "first cancellation ends in the same row or higher",
        "a cancellation implies the prior one cancelled",
        "dual: second added box strictly below the first",
        "dual: cancellations repeat and end in a lower row",
    ];
    let per_tableau = exec.map_collect(tabs, |t| {
        let mut reports: Vec<SweepReport> = names.iter().map(|n| SweepReport::new(*n)).collect();
        let insert = |t: &Tableau<Letter>, x: Letter| spo_insert(t, x, &p).expect("letters in range");
        for &x in &letters {
            let first = insert(&t, x);
            for &y in &letters {
                let second = insert(&first.result, y);
                let describe = || format!("T={t:?}, x={x}, x'={y}");
                // x ≤ x' (strict unless both in B0): insert x then x'.
                let ordered = if x.is_b0() && y.is_b0() { x <= y } else { x < y };
                if ordered {
                    if let (Effect::Added(b), Effect::Added(b2)) = (first.effect, second.effect) {
                        reports[0].record(b2.col > b.col, describe);
                    }
                }
                if x.is_b0() && y.is_b0() && x <= y {
                    if let (Effect::Cancelled(e1), Effect::Cancelled(e2)) = (first.effect, second.effect) {
                        reports[1].record(e1.row <= e2.row, describe);
                    }
                    if matches!(second.effect, Effect::Cancelled(_)) {
                        reports[2].record(matches!(first.effect, Effect::Cancelled(_)), describe);
                    }
                }
                // Dual order: insert x first, then y with x > y (x ≥ y when both in B1).
                let dual_ordered = if x.is_b1() && y.is_b1() { x >= y } else { x > y };
                if dual_ordered {
                    if let (Effect::Added(b1), Effect::Added(b2)) = (first.effect, second.effect) {
                        reports[3].record(b2.row > b1.row, describe);
                    }
                }
                if x.is_b0() && y.is_b0() && x > y {
                    if let Effect::Cancelled(e1) = first.effect {
                        let pass = matches!(second.effect, Effect::Cancelled(e2) if e1.row > e2.row);
                        reports[4].record(pass, describe);
                    }
                }
            }
        }
        reports
    });
    let mut totals: Vec<SweepReport> = names.iter().map(|n| SweepReport::new(*n)).collect();
    for reports in per_tableau {
        for (total, r) in totals.iter_mut().zip(reports) {
            *total = std::mem::take(total).merge(r);
        }
    }
    totals
}
