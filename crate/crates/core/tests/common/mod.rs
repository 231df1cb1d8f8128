#![allow(dead_code)]

use ospkit_core::{AlphabetParams, Letter, Partition, Tableau, TwoLineArray};

pub type State = (Tableau<Letter>, Tableau<u32>, TwoLineArray<u32>);

pub fn l(s: &str) -> Letter {
    s.parse().unwrap()
}

pub fn lt(rows: &[&[&str]]) -> Tableau<Letter> {
    Tableau::from_rows(rows.iter().map(|r| r.iter().map(|s| l(s)).collect()).collect()).unwrap()
}

pub fn it(rows: &[&[u32]]) -> Tableau<u32> {
    Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn la(top: &[u32], bottom: &[&str]) -> TwoLineArray<Letter> {
    let b: Vec<Letter> = bottom.iter().map(|s| l(s)).collect();
    TwoLineArray::from_rows(top, &b).unwrap()
}

pub fn ia(top: &[u32], bottom: &[u32]) -> TwoLineArray<u32> {
    TwoLineArray::from_rows(top, bottom).unwrap()
}

pub fn params(m: u32, n: u32, q: u32) -> AlphabetParams {
    AlphabetParams::new(m, n, q).unwrap()
}

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

/// Nine-column array in `A`, m = n = 2, q = 4.
pub fn spo_example() -> TwoLineArray<Letter> {
    la(&[2, 2, 2, 3, 3, 4, 4, 4, 4], &["1b", "1o", "2o", "1", "1b", "1", "1", "1o", "2o"])
}

const DUAL_TOP: [u32; 16] = [1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4];

/// Sixteen-column array in `A*`, m = 5, n = 3, q = 4, with the third
/// bottom entry `3`. No cancellation happens in the first nine steps, so
/// the ninth tableau holds exactly the first nine bottom letters; the
/// expected ninth tableau holds a `3` there, not a `1`.
pub fn dual_example() -> TwoLineArray<Letter> {
    la(&DUAL_TOP, &["5b", "3b", "3", "3o", "5", "4b", "1o", "1o", "2b", "2", "1b", "4", "3b", "3", "2b", "1"])
}

/// The same array with the third bottom entry `1`.
pub fn dual_example_as_printed() -> TwoLineArray<Letter> {
    la(&DUAL_TOP, &["5b", "3b", "1", "3o", "5", "4b", "1o", "1o", "2b", "2", "1b", "4", "3b", "3", "2b", "1"])
}

pub fn word_example() -> Vec<Letter> {
    ["1o", "1b", "2b", "2o", "1", "2", "1b", "1"].iter().map(|s| l(s)).collect()
}

/// `(P̃_k, P_k, L_k)` after each column of [`spo_example`].
pub fn spo_example_states() -> Vec<State> {
    vec![
        (lt(&[&["1b"]]), it(&[&[2]]), TwoLineArray::empty()),
        (lt(&[&["1b", "1o"]]), it(&[&[2, 2]]), TwoLineArray::empty()),
        (lt(&[&["1b", "1o", "2o"]]), it(&[&[2, 2, 2]]), TwoLineArray::empty()),
        (lt(&[&["1o", "2o"]]), it(&[&[2, 2]]), ia(&[3], &[2])),
        (lt(&[&["1b", "2o"], &["1o"]]), it(&[&[2, 2], &[3]]), ia(&[3], &[2])),
        (lt(&[&["1o", "2o"]]), it(&[&[2, 2]]), ia(&[3, 4], &[2, 3])),
        (lt(&[&["1", "2o"], &["1o"]]), it(&[&[2, 2], &[4]]), ia(&[3, 4], &[2, 3])),
        (lt(&[&["1", "1o"], &["1o", "2o"]]), it(&[&[2, 2], &[4, 4]]), ia(&[3, 4], &[2, 3])),
        (lt(&[&["1", "1o", "2o"], &["1o", "2o"]]), it(&[&[2, 2, 4], &[4, 4]]), ia(&[3, 4], &[2, 3])),
    ]
}

/// `P̃_9 .. P̃_16` for [`dual_example`].
pub fn dual_example_ptildes() -> Vec<Tableau<Letter>> {
    vec![
        lt(&[&["2b", "4b", "1o"], &["3", "5", "1o"], &["3b", "3o"], &["5b"]]),
        lt(&[&["2", "4b", "1o"], &["2b", "5", "1o"], &["5b", "3o"]]),
        lt(&[&["1b", "4b", "1o"], &["5", "1o"], &["5b", "3o"]]),
        lt(&[&["1b", "4", "1o"], &["4b", "1o"], &["5", "3o"], &["5b"]]),
        lt(&[&["1b", "3b", "1o"], &["4", "1o"], &["4b", "3o"], &["5"], &["5b"]]),
        lt(&[&["1b", "3", "1o"], &["3b", "1o"], &["4", "3o"], &["4b"]]),
        lt(&[&["1b", "2b", "1o"], &["3", "1o"], &["3b", "3o"]]),
        lt(&[&["2b", "1o"], &["3", "1o"], &["3b", "3o"]]),
    ]
}

/// `P_9 .. P_16` for [`dual_example`].
pub fn dual_example_ps() -> Vec<Tableau<u32>> {
    vec![
        it(&[&[1, 2, 3], &[1, 2, 3], &[1, 2], &[3]]),
        it(&[&[1, 2, 3], &[1, 2, 3], &[1, 3]]),
        it(&[&[1, 2, 3], &[1, 2], &[1, 3]]),
        it(&[&[1, 2, 3], &[1, 2], &[1, 3], &[4]]),
        it(&[&[1, 2, 3], &[1, 2], &[1, 3], &[4], &[4]]),
        it(&[&[1, 2, 3], &[1, 3], &[1, 4], &[4]]),
        it(&[&[1, 2, 3], &[1, 4], &[1, 4]]),
        it(&[&[1, 2], &[1, 4], &[1, 4]]),
    ]
}

/// `(k, L_k)` checkpoints and the final sorted `L` for [`dual_example`].
pub fn dual_example_ls() -> (Vec<(usize, TwoLineArray<u32>)>, TwoLineArray<u32>) {
    (
        vec![
            (10, ia(&[3], &[2])),
            (11, ia(&[3, 3], &[2, 3])),
            (14, ia(&[3, 3, 4], &[2, 3, 2])),
            (16, ia(&[3, 3, 4, 4, 4], &[2, 3, 2, 3, 3])),
        ],
        ia(&[3, 3, 4, 4, 4], &[3, 2, 3, 3, 2]),
    )
}

/// Burge array and its five insertion tableaux.
pub fn burge_example() -> (TwoLineArray<u32>, Vec<Tableau<u32>>) {
    (
        ia(&[4, 4, 5, 8, 9], &[1, 3, 2, 5, 4]),
        vec![
            it(&[&[1], &[4]]),
            it(&[&[1, 3], &[4, 4]]),
            it(&[&[1, 2], &[3, 4], &[4], &[5]]),
            it(&[&[1, 2, 5], &[3, 4, 8], &[4], &[5]]),
            it(&[&[1, 2, 4], &[3, 4, 5], &[4, 8], &[5, 9]]),
        ],
    )
}

/// Shapes `λ^0 .. λ^8` for [`word_example`].
pub fn word_example_shapes() -> Vec<Partition> {
    [&[][..], &[1], &[1, 1], &[2, 1], &[3, 1], &[2, 1], &[2, 1, 1], &[2, 1], &[2]].iter().map(|s| part(s)).collect()
}

/// Tableau, inserted letter and expected result of the cancelling insertion.
pub fn cancelling_insertion() -> (Tableau<Letter>, Letter, Tableau<Letter>) {
    (
        lt(&[&["1", "1b", "2", "1o"], &["2", "2b", "3", "2o"], &["4", "4", "2o"], &["5"]]),
        l("1b"),
        lt(&[&["1", "1b", "1b", "1o"], &["2", "3", "2o"], &["4", "4", "2o"], &["5"]]),
    )
}
