//! Two-line arrays, their classes, weights and the matrix encoding of
//! class `A`.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::alphabet::{AlphabetParams, Letter};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Bottom-row entries: letters for `A`/`A*`, integers for (dual) Burge arrays.
pub trait Bottom: Copy + Ord + fmt::Debug + fmt::Display {
    fn as_letter(self) -> Option<Letter>;
    fn as_int(self) -> Option<u32>;
}

impl Bottom for Letter {
    fn as_letter(self) -> Option<Letter> {
        Some(self)
    }
    fn as_int(self) -> Option<u32> {
        None
    }
}

impl Bottom for u32 {
    fn as_letter(self) -> Option<Letter> {
        None
    }
    fn as_int(self) -> Option<u32> {
        Some(self)
    }
}

/// An ordered list of columns `(top, bottom)`. Stored as given; nothing
/// is re-sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoLineArray<B> {
    columns: Vec<(u32, B)>,
}

impl<B> Default for TwoLineArray<B> {
    fn default() -> Self {
        TwoLineArray { columns: Vec::new() }
    }
}

impl<B: Copy> TwoLineArray<B> {
    pub fn new(columns: Vec<(u32, B)>) -> Self {
        TwoLineArray { columns }
    }

    pub fn empty() -> Self {
        TwoLineArray { columns: Vec::new() }
    }

    pub fn from_rows(top: &[u32], bottom: &[B]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Parse(format!("top row has {} entries, bottom row {}", top.len(), bottom.len())));
        }
        Ok(TwoLineArray { columns: top.iter().copied().zip(bottom.iter().copied()).collect() })
    }

    pub fn columns(&self) -> &[(u32, B)] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn push(&mut self, top: u32, bottom: B) {
        self.columns.push((top, bottom));
    }

    pub fn prepend(&mut self, top: u32, bottom: B) {
        self.columns.insert(0, (top, bottom));
    }

    pub fn remove(&mut self, index: usize) -> (u32, B) {
        self.columns.remove(index)
    }

    pub fn top(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn bottom(&self) -> Vec<B> {
        self.columns.iter().map(|c| c.1).collect()
    }
}

impl<B: fmt::Display> fmt::Display for TwoLineArray<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return write!(f, "∅");
        }
        let cols: Vec<(String, String)> = self.columns.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let line = |pick: fn(&(String, String)) -> &String| -> String {
            cols.iter().map(|c| format!("{:>w$}", pick(c), w = c.0.len().max(c.1.len()))).collect::<Vec<_>>().join(" ")
        };
        writeln!(f, "{}", line(|c| &c.0))?;
        write!(f, "{}", line(|c| &c.1))
    }
}

#[derive(Serialize, Deserialize)]
struct ArrayRepr<B> {
    top: Vec<u32>,
    bottom: Vec<B>,
}

impl<B: Serialize + Copy> Serialize for TwoLineArray<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ArrayRepr { top: self.top(), bottom: self.bottom() }.serialize(serializer)
    }
}

impl<'de, B: DeserializeOwned + Copy> Deserialize<'de> for TwoLineArray<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ArrayRepr::<B>::deserialize(deserializer)?;
        TwoLineArray::from_rows(&repr.top, &repr.bottom).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArrayClass {
    A,
    #[serde(rename = "Astar")]
    AStar,
    Burge,
    DualBurge,
}

/// The first column (0-based) at which a class condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column}: {reason}")]
pub struct ArrayViolation {
    pub column: usize,
    pub reason: String,
}

/// Checks `π` against the conditions of `class`. Violations are results,
/// not failures.
pub fn validate_array<B: Bottom>(
    pi: &TwoLineArray<B>,
    class: ArrayClass,
    params: &AlphabetParams,
) -> std::result::Result<(), ArrayViolation> {
    let fail = |column: usize, reason: String| Err(ArrayViolation { column, reason });
    let q = params.q;
    for (i, &(a, b)) in pi.columns.iter().enumerate() {
        if a == 0 || a > q {
            return fail(i, format!("top {a} outside 1..={q}"));
        }
        match class {
            ArrayClass::A | ArrayClass::AStar => match b.as_letter() {
                Some(l) if params.contains(l) => {}
                Some(l) => return fail(i, format!("letter {l} out of range")),
                None => return fail(i, "bottom must be a letter".into()),
            },
            ArrayClass::Burge => match b.as_int() {
                Some(v) if v >= 1 && v < q => {
                    if a <= v {
                        return fail(i, format!("top {a} must exceed bottom {v}"));
                    }
                }
                Some(v) => return fail(i, format!("bottom {v} outside 1..={}", q.saturating_sub(1))),
                None => return fail(i, "bottom must be an integer".into()),
            },
            ArrayClass::DualBurge => match b.as_int() {
                Some(v) if v >= 1 && v <= q => {
                    if a < v {
                        return fail(i, format!("top {a} must be at least bottom {v}"));
                    }
                }
                Some(v) => return fail(i, format!("bottom {v} outside 1..={q}")),
                None => return fail(i, "bottom must be an integer".into()),
            },
        }
        if i == 0 {
            continue;
        }
        let (pa, pb) = pi.columns[i - 1];
        if pa > a {
            return fail(i, "tops must weakly increase".into());
        }
        if pa == a {
            let increasing = matches!(class, ArrayClass::A | ArrayClass::Burge);
            if increasing && pb > b {
                return fail(i, "bottoms must weakly increase under equal tops".into());
            }
            if !increasing && pb < b {
                return fail(i, "bottoms must weakly decrease under equal tops".into());
            }
            if pb == b {
                if let Some(l) = b.as_letter() {
                    if class == ArrayClass::A && l.is_b1() {
                        return fail(i, format!("column ({a}, {l}) with bottom in B1 repeated"));
                    }
                    if class == ArrayClass::AStar && l.is_b0() {
                        return fail(i, format!("column ({a}, {l}) with bottom in B0 repeated"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `∏ y_i^{α_i} x_j^{β_j − β_j̄} t_k^{γ_k}`.
pub fn array_weight(pi: &TwoLineArray<Letter>, params: &AlphabetParams) -> Monomial {
    let mut mono = Monomial::one(params);
    for &(a, b) in pi.columns() {
        mono.mul_y(a);
        mono.mul_letter(b);
    }
    mono
}

/// Nonnegative integer matrix, rows indexed by `1..q`, columns by the
/// letters of `B0 ∪ B1` in increasing order.
pub type Matrix = Vec<Vec<u32>>;

pub fn array_to_matrix(pi: &TwoLineArray<Letter>, params: &AlphabetParams) -> Result<Matrix> {
    validate_array(pi, ArrayClass::A, params)?;
    let mut m = vec![vec![0u32; params.alphabet_size() as usize]; params.q as usize];
    for &(a, b) in pi.columns() {
        m[a as usize - 1][b.rank(params.m) as usize - 1] += 1;
    }
    Ok(m)
}

pub fn matrix_to_array(matrix: &Matrix, params: &AlphabetParams) -> Result<TwoLineArray<Letter>> {
    let width = params.alphabet_size() as usize;
    if matrix.len() != params.q as usize || matrix.iter().any(|r| r.len() != width) {
        return Err(Error::Matrix(format!("expected a {} x {width} matrix", params.q)));
    }
    let letters = params.letters();
    let mut pi = TwoLineArray::empty();
    for (i, row) in matrix.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            if letters[j].is_b1() && count > 1 {
                return Err(Error::Matrix(format!(
                    "entry ({}, {}) in the B1 block must be 0 or 1, got {count}",
                    i + 1,
                    letters[j]
                )));
            }
            for _ in 0..count {
                pi.push(i as u32 + 1, letters[j]);
            }
        }
    }
    Ok(pi)
}

/// All compositions of `total` into `slots` parts, with the parts at
/// `bounded[j] == true` limited to 0 or 1. Lexicographic order.
fn bounded_compositions(total: u32, bounded: &[bool]) -> Vec<Vec<u32>> {
    fn go(rem: u32, bounded: &[bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let j = cur.len();
        if j == bounded.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = if bounded[j] { rem.min(1) } else { rem };
        for v in 0..=max {
            cur.push(v);
            go(rem - v, bounded, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, bounded, &mut Vec::new(), &mut out);
    out
}

/// Every array of class `A` with exactly `k` columns, via the matrix encoding.
pub fn arrays_a(params: &AlphabetParams, k: u32) -> Vec<TwoLineArray<Letter>> {
    let letters = params.letters();
    let rows = params.q as usize;
    let width = letters.len();
    let bounded: Vec<bool> = (0..rows).flat_map(|_| letters.iter().map(|l| l.is_b1())).collect();
    bounded_compositions(k, &bounded)
        .into_iter()
        .map(|flat| {
            let m: Matrix = flat.chunks(width).map(<[u32]>::to_vec).collect();
            matrix_to_array(&m, params).expect("composition respects the B1 bound")
        })
        .collect()
}

/// Every array of class `A*` with exactly `k` columns: repeated columns
/// are allowed only for `B1` bottoms, and bottoms decrease under equal tops.
pub fn arrays_astar(params: &AlphabetParams, k: u32) -> Vec<TwoLineArray<Letter>> {
    let letters = params.letters();
    let rows = params.q as usize;
    let width = letters.len();
    let bounded: Vec<bool> = (0..rows).flat_map(|_| letters.iter().map(|l| l.is_b0())).collect();
    bounded_compositions(k, &bounded)
        .into_iter()
        .map(|flat| {
            let mut pi = TwoLineArray::empty();
            for (i, row) in flat.chunks(width).enumerate() {
                for (j, &count) in row.iter().enumerate().rev() {
                    for _ in 0..count {
                        pi.push(i as u32 + 1, letters[j]);
                    }
                }
            }
            pi
        })
        .collect()
}

/// Every Burge (or dual Burge) array with exactly `k` columns, tops in `1..=q`.
pub fn arrays_burge(q: u32, k: u32, dual: bool) -> Vec<TwoLineArray<u32>> {
    // Columns (a, b) with b < a (Burge) or b <= a (dual); multiplicities free.
    let pairs: Vec<(u32, u32)> = (1..=q)
        .flat_map(|a| {
            let hi = if dual { a } else { a - 1 };
            (1..=hi).map(move |b| (a, b))
        })
        .collect();
    let bounded = vec![false; pairs.len()];
    bounded_compositions(k, &bounded)
        .into_iter()
        .map(|counts| {
            let mut cols: Vec<(u32, u32)> = Vec::new();
            for (p, &c) in pairs.iter().zip(&counts) {
                cols.extend(std::iter::repeat_n(*p, c as usize));
            }
            if dual {
                cols.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
            }
            TwoLineArray::new(cols)
        })
        .collect()
}
