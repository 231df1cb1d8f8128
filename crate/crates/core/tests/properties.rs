//! Invariants as property tests, plus exhaustive oracle comparisons on
//! small domains.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use ospkit_core::array::{
    array_to_matrix, arrays_a, arrays_astar, arrays_burge, matrix_to_array, validate_array, ArrayClass, TwoLineArray,
};
use ospkit_core::characters::{spo_character, symplectic_schur, CharacterMethod, LaurentPolynomial};
use ospkit_core::correspond::{
    burge_forward, burge_inverse, dual_burge_forward, dual_burge_inverse, dual_spo_forward, dual_spo_forward_trace,
    dual_spo_inverse, spo_forward, spo_forward_trace, spo_inverse, updown_to_word, word_to_updown,
};
use ospkit_core::enumerate::{count_spo, enumerate_tableaux, enumerate_updown, EnumCaps};
use ospkit_core::insertion::{spo_insert, spo_uninsert};
use ospkit_core::monomial::Monomial;
use ospkit_core::sweep::spo_tableaux_up_to;
use ospkit_core::tableau::{tableau_weight, validate_tableau};
use ospkit_core::{AlphabetParams, Letter, Partition, Tableau, TableauKind};

fn params_strategy() -> impl Strategy<Value = AlphabetParams> {
    (0u32..=2, 0u32..=2, 1u32..=3)
        .prop_filter("nonempty alphabet", |(m, n, _)| m + n > 0)
        .prop_map(|(m, n, q)| AlphabetParams::new(m, n, q).unwrap())
}

/// Raw columns, sorted and deduplicated into class `A` (or `A*`).
fn array_strategy(dual: bool, max_len: usize) -> impl Strategy<Value = (AlphabetParams, TwoLineArray<Letter>)> {
    params_strategy().prop_flat_map(move |p| {
        let letters = p.letters();
        let cols = prop::collection::vec((1..=p.q, prop::sample::select(letters)), 0..=max_len);
        (Just(p), cols).prop_map(move |(p, mut cols)| {
            if dual {
                cols.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
                let mut seen = BTreeSet::new();
                cols.retain(|c| c.1.is_b1() || seen.insert(*c));
            } else {
                cols.sort();
                let mut seen = BTreeSet::new();
                cols.retain(|c| c.1.is_b0() || seen.insert(*c));
            }
            (p, TwoLineArray::new(cols))
        })
    })
}

fn burge_strategy(dual: bool) -> impl Strategy<Value = (u32, TwoLineArray<u32>)> {
    (2u32..=5).prop_flat_map(move |q| {
        let col = (1..=q).prop_flat_map(move |a| (Just(a), if dual { 1..=a } else { 1..=a.max(2) - 1 }));
        (Just(q), prop::collection::vec(col, 0..=5)).prop_map(move |(q, mut cols)| {
            cols.retain(|c| dual || c.0 > c.1);
            if dual {
                cols.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            } else {
                cols.sort();
            }
            (q, TwoLineArray::new(cols))
        })
    })
}

fn spo_case() -> impl Strategy<Value = (AlphabetParams, Tableau<Letter>, Letter)> {
    (0u32..=2, 0u32..=2).prop_filter("nonempty", |(m, n)| m + n > 0).prop_flat_map(|(m, n)| {
        let p = AlphabetParams::new(m, n, 1).unwrap();
        (Just(p), prop::sample::select(spo_tableaux_up_to(4, &p)), prop::sample::select(p.letters()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn insertion_stays_spo_and_inverts((p, t, x) in spo_case()) {
        let out = spo_insert(&t, x, &p).unwrap();
        prop_assert!(validate_tableau(&out.result, TableauKind::Spo, &p).is_ok());
        prop_assert_eq!(spo_uninsert(&out.result, out.effect, &p).unwrap(), (t, x));
    }

    #[test]
    fn matrix_encoding_inverts((p, pi) in array_strategy(false, 6)) {
        let m = array_to_matrix(&pi, &p).unwrap();
        prop_assert_eq!(m.iter().flatten().sum::<u32>() as usize, pi.len());
        prop_assert_eq!(matrix_to_array(&m, &p).unwrap(), pi);
    }

    #[test]
    fn spo_forward_invariants((p, pi) in array_strategy(false, 6)) {
        let (triple, steps) = spo_forward_trace(&pi, &p).unwrap();
        for step in &steps {
            prop_assert_eq!(step.ptilde.shape(), step.p.shape());
            prop_assert!(step.p.is_semistandard());
        }
        prop_assert!(validate_array(&triple.l, ArrayClass::Burge, &p).is_ok());
        // Each cancellation moves one entry of P into L next to the new top,
        // so the tops of π are P plus both rows of L. Circled bottoms never cancel.
        let mut tops: Vec<u32> = triple.p.entries().copied().chain(triple.l.top()).chain(triple.l.bottom()).collect();
        tops.sort();
        prop_assert_eq!(tops, pi.top());
        for k in 1..=p.n {
            let c = Letter::circ(k);
            prop_assert_eq!(pi.bottom().iter().filter(|&&b| b == c).count(), triple.ptilde.entries().filter(|&&e| e == c).count());
        }
        prop_assert_eq!(spo_inverse(&triple, &p).unwrap(), pi);
    }

    #[test]
    fn dual_spo_forward_invariants((p, pi) in array_strategy(true, 6)) {
        let (triple, steps) = dual_spo_forward_trace(&pi, &p).unwrap();
        for step in &steps {
            prop_assert_eq!(step.ptilde.shape(), step.p.shape());
        }
        prop_assert_eq!(triple.pt.shape(), triple.ptilde.shape().conjugate());
        prop_assert!(triple.pt.is_semistandard());
        prop_assert!(validate_array(&triple.l, ArrayClass::DualBurge, &p).is_ok());
        prop_assert_eq!(dual_spo_inverse(&triple, &p).unwrap(), pi);
    }

    #[test]
    fn burge_roundtrip_and_shape((q, l) in burge_strategy(false)) {
        let t = burge_forward(&l, q).unwrap();
        prop_assert!(t.is_semistandard() && t.shape().has_even_columns());
        prop_assert_eq!(burge_inverse(&t).unwrap(), l);
    }

    #[test]
    fn dual_burge_roundtrip_and_shape((q, l) in burge_strategy(true)) {
        let s = dual_burge_forward(&l, q).unwrap();
        prop_assert!(s.transpose().is_semistandard() && s.shape().conjugate().is_even());
        prop_assert_eq!(dual_burge_inverse(&s).unwrap(), l);
    }

    #[test]
    fn word_map_is_injective(
        (p, w) in params_strategy().prop_flat_map(|p| (Just(p), prop::collection::vec(prop::sample::select(p.letters()), 0..=7)))
    ) {
        let pair = word_to_updown(&w, &p).unwrap();
        prop_assert_eq!(pair.chain.len(), w.len());
        prop_assert_eq!(updown_to_word(&pair, &p).unwrap(), w);
    }

    #[test]
    fn cauchy_product_is_order_independent(seed in prop::collection::vec(any::<u32>(), 6)) {
        let p = AlphabetParams::new(1, 1, 2).unwrap();
        let mut factors = Vec::new();
        for j in 1..=2 {
            for e in [1, -1] {
                let mut v = Monomial::one(&p);
                v.x[0] = e;
                v.mul_y(j);
                factors.push(LaurentPolynomial::geometric(&v, 3));
            }
            let mut v = Monomial::one(&p);
            v.t[0] = 1;
            v.mul_y(j);
            factors.push(LaurentPolynomial::one_plus(v));
        }
        let product = |fs: &[LaurentPolynomial]| fs.iter().fold(LaurentPolynomial::one(), |acc, f| acc.mul_truncated(f, 3));
        let reference = product(&factors);
        let mut keyed: Vec<_> = seed.iter().zip(factors).collect();
        keyed.sort_by_key(|(k, _)| **k);
        let shuffled: Vec<_> = keyed.into_iter().map(|(_, f)| f).collect();
        prop_assert_eq!(product(&shuffled), reference);
    }
}

fn brute_force_fillings(shape: &Partition, letters: &[Letter]) -> Vec<Tableau<Letter>> {
    let size = shape.size();
    let mut out = Vec::new();
    let mut idx = vec![0usize; size];
    loop {
        let mut flat = idx.iter().map(|&i| letters[i]);
        let rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&len| flat.by_ref().take(len).collect()).collect();
        out.push(Tableau::from_rows(rows).unwrap());
        let mut pos = 0;
        loop {
            if pos == size {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < letters.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Direct reading of the definition: the B0 cells form a symplectic
/// tableau of partition shape and the rest is row-strict, column-weak.
fn is_spo_by_definition(t: &Tableau<Letter>) -> bool {
    let rows = t.rows();
    let b0_len: Vec<usize> = rows.iter().map(|r| r.iter().filter(|l| l.is_b0()).count()).collect();
    for (r, row) in rows.iter().enumerate() {
        if row[..b0_len[r]].iter().any(|l| l.is_b1()) {
            return false;
        }
        if r > 0 && b0_len[r] > b0_len[r - 1] {
            return false;
        }
        for (c, &v) in row.iter().enumerate() {
            if v.is_b0() {
                if v < Letter::sym(r as u32 + 1) || (c > 0 && row[c - 1] > v) || (r > 0 && rows[r - 1][c] >= v) {
                    return false;
                }
            } else {
                let left_ok = c == 0 || row[c - 1].is_b0() || row[c - 1] < v;
                let above_ok = r == 0 || rows[r - 1][c].is_b0() || rows[r - 1][c] <= v;
                if !left_ok || !above_ok {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn spo_enumeration_matches_brute_force() {
    for m in 0..=2 {
        for n in 0..=2 {
            if m + n == 0 {
                continue;
            }
            let p = AlphabetParams::new(m, n, 1).unwrap();
            for size in 0..=4 {
                for shape in Partition::all_of(size) {
                    let expected: BTreeSet<_> =
                        brute_force_fillings(&shape, &p.letters()).into_iter().filter(is_spo_by_definition).collect();
                    let got: BTreeSet<_> =
                        enumerate_tableaux(&shape, TableauKind::Spo, &p, EnumCaps::unbounded()).unwrap().collect();
                    assert_eq!(got, expected, "m={m} n={n} shape {shape}");
                    for t in brute_force_fillings(&shape, &p.letters()) {
                        assert_eq!(validate_tableau(&t, TableauKind::Spo, &p).is_ok(), expected.contains(&t), "{t:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn weight_is_a_product_of_cell_weights() {
    let p = AlphabetParams::new(2, 1, 1).unwrap();
    for t in spo_tableaux_up_to(3, &p) {
        let product = t.entries().fold(Monomial::one(&p), |acc, &l| {
            let mut cell = Monomial::one(&p);
            cell.mul_letter(l);
            acc.mul(&cell)
        });
        assert_eq!(tableau_weight(&t, &p), product);
    }
}

/// Column lists filtered by the class conditions, written out directly.
fn brute_force_arrays(p: &AlphabetParams, k: usize, dual: bool) -> BTreeSet<TwoLineArray<Letter>> {
    let columns: Vec<(u32, Letter)> = (1..=p.q).flat_map(|a| p.letters().into_iter().map(move |b| (a, b))).collect();
    let mut lists: Vec<Vec<(u32, Letter)>> = vec![Vec::new()];
    for _ in 0..k {
        lists = lists.into_iter().flat_map(|l| columns.iter().map(move |&c| [l.clone(), vec![c]].concat())).collect();
    }
    lists
        .into_iter()
        .filter(|cols| {
            cols.windows(2).all(|w| {
                let ((a1, b1), (a2, b2)) = (w[0], w[1]);
                a1 < a2 || (a1 == a2 && if dual { b1 >= b2 } else { b1 <= b2 })
            }) && {
                let once: Vec<_> = cols.iter().filter(|c| if dual { c.1.is_b0() } else { c.1.is_b1() }).collect();
                once.iter().collect::<BTreeSet<_>>().len() == once.len()
            }
        })
        .map(TwoLineArray::new)
        .collect()
}

#[test]
fn array_classes_match_brute_force() {
    for (m, n) in [(0, 1), (1, 0), (1, 1)] {
        for q in 1..=2 {
            let p = AlphabetParams::new(m, n, q).unwrap();
            for k in 0..=3 {
                let a = brute_force_arrays(&p, k, false);
                let astar = brute_force_arrays(&p, k, true);
                assert_eq!(arrays_a(&p, k as u32).into_iter().collect::<BTreeSet<_>>(), a);
                assert_eq!(arrays_astar(&p, k as u32).into_iter().collect::<BTreeSet<_>>(), astar);
                let all_lists = brute_force_arrays_unfiltered(&p, k);
                for pi in all_lists {
                    assert_eq!(validate_array(&pi, ArrayClass::A, &p).is_ok(), a.contains(&pi));
                    assert_eq!(validate_array(&pi, ArrayClass::AStar, &p).is_ok(), astar.contains(&pi));
                }
            }
        }
    }
}

fn brute_force_arrays_unfiltered(p: &AlphabetParams, k: usize) -> Vec<TwoLineArray<Letter>> {
    let columns: Vec<(u32, Letter)> = (1..=p.q).flat_map(|a| p.letters().into_iter().map(move |b| (a, b))).collect();
    let mut lists: Vec<Vec<(u32, Letter)>> = vec![Vec::new()];
    for _ in 0..k {
        lists = lists.into_iter().flat_map(|l| columns.iter().map(move |&c| [l.clone(), vec![c]].concat())).collect();
    }
    lists.into_iter().map(TwoLineArray::new).collect()
}

#[test]
fn burge_array_counts_match_even_tableaux() {
    // q=3: columns with a > b, resp. a >= b.
    assert_eq!(arrays_burge(3, 1, false).len(), 3);
    assert_eq!(arrays_burge(3, 1, true).len(), 6);
}

#[test]
fn character_methods_agree() {
    for m in 0..=2 {
        for n in 0..=2 {
            if m + n == 0 {
                continue;
            }
            let p = AlphabetParams::new(m, n, 1).unwrap();
            for size in 0..=4 {
                for lambda in Partition::all_of(size) {
                    let direct = spo_character(&lambda, &p, CharacterMethod::Direct, EnumCaps::unbounded()).unwrap();
                    let musum = spo_character(&lambda, &p, CharacterMethod::MuSum, EnumCaps::unbounded()).unwrap();
                    assert_eq!(direct, musum, "m={m} n={n} λ={lambda}");
                    let count = count_spo(&lambda, &p, EnumCaps::unbounded()).unwrap();
                    assert_eq!(direct.coefficient_sum(), BigInt::from(count));
                }
            }
        }
    }
}

#[test]
fn symplectic_characters_are_bar_symmetric() {
    for m in 0..=2 {
        for size in 0..=4 {
            for mu in Partition::all_of(size).into_iter().filter(|mu| mu.len() <= m as usize) {
                let sp = symplectic_schur(&mu, m, EnumCaps::unbounded()).unwrap();
                assert_eq!(sp.invert_x(), sp, "m={m} μ={mu}");
            }
        }
    }
}

#[test]
fn power_identity_without_circled_letters() {
    for m in 1..=2u32 {
        let p = AlphabetParams::new(m, 0, 1).unwrap();
        for k in 0..=5usize {
            let mut sum = 0usize;
            for r in 0..=k / 2 {
                for lambda in Partition::all_of(k - 2 * r) {
                    sum +=
                        count_spo(&lambda, &p, EnumCaps::unbounded()).unwrap() * enumerate_updown(&lambda, k, &p).len();
                }
            }
            assert_eq!(sum, (2 * m as usize).pow(k as u32), "m={m} k={k}");
        }
    }
}

#[test]
fn forward_maps_are_total_on_their_classes() {
    let p = AlphabetParams::new(1, 1, 2).unwrap();
    for k in 0..=3 {
        for pi in arrays_a(&p, k) {
            assert!(spo_forward(&pi, &p).is_ok());
        }
        for pi in arrays_astar(&p, k) {
            assert!(dual_spo_forward(&pi, &p).is_ok());
        }
    }
}
