//! Tableaux on straight and skew shapes, and validation per tableau kind.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alphabet::{AlphabetParams, Letter};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::partition::{Partition, SkewShape};

/// A 1-based `(row, col)` cell address.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [row, col] = <[usize; 2]>::deserialize(deserializer)?;
        if row == 0 || col == 0 {
            return Err(serde::de::Error::custom("cells are 1-based"));
        }
        Ok(Cell { row, col })
    }
}

/// A filling of a Young diagram. Rows are stored top to bottom; the shape
/// is always a partition. Kind-specific conditions are checked by
/// [`validate_tableau`], not on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<E> {
    rows: Vec<Vec<E>>,
}

impl<E> Default for Tableau<E> {
    fn default() -> Self {
        Tableau { rows: Vec::new() }
    }
}

impl<E> Tableau<E> {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Shape("tableau rows must be nonempty".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Shape("row lengths must weakly decrease".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau shape is a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.rows.get(row - 1).map_or(0, Vec::len)
    }

    pub fn get(&self, cell: Cell) -> Option<&E> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1)
    }

    pub(crate) fn get_mut(&mut self, cell: Cell) -> Option<&mut E> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get_mut(cell.row - 1)?.get_mut(cell.col - 1)
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, &E)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, e)| (Cell::new(r + 1, c + 1), e)))
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.rows.iter().flatten()
    }

    /// A cell that can be removed leaving a partition shape.
    pub fn is_outer_corner(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row_len(cell.row) == cell.col && self.row_len(cell.row + 1) < cell.col
    }

    /// A cell outside the shape that can be added leaving a partition shape.
    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.rows.len() + 1
            && self.row_len(cell.row) + 1 == cell.col
            && (cell.row == 1 || self.row_len(cell.row - 1) >= cell.col)
    }

    pub fn add_cell(&mut self, cell: Cell, entry: E) -> Result<()> {
        if !self.is_addable(cell) {
            return Err(Error::Shape(format!("cannot add a box at {cell}")));
        }
        if cell.row > self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[cell.row - 1].push(entry);
        Ok(())
    }

    pub fn remove_corner(&mut self, cell: Cell) -> Result<E> {
        if !self.is_outer_corner(cell) {
            return Err(Error::NotOuterCorner(cell));
        }
        let e = self.rows[cell.row - 1].pop().expect("corner exists");
        if self.rows[cell.row - 1].is_empty() {
            self.rows.pop();
        }
        Ok(e)
    }

    pub fn map<F, T>(&self, mut f: F) -> Tableau<T>
    where
        F: FnMut(&E) -> T,
    {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect() }
    }
}

impl<E: Clone> Tableau<E> {
    pub fn transpose(&self) -> Tableau<E> {
        let width = self.row_len(1);
        let rows =
            (0..width).map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c].clone()).collect()).collect();
        Tableau { rows }
    }
}

impl<E: Ord> Tableau<E> {
    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        check_rows_cols(&self.rows, |a, b| a <= b, |a, b| a < b).is_ok()
    }

    /// Rows strictly increase, columns weakly increase (the transpose is semistandard).
    pub fn is_dual_semistandard(&self) -> bool {
        check_rows_cols(&self.rows, |a, b| a < b, |a, b| a <= b).is_ok()
    }

    pub fn max_entry(&self) -> Option<&E> {
        self.entries().max()
    }
}

fn check_rows_cols<E>(
    rows: &[Vec<E>],
    row_ok: impl Fn(&E, &E) -> bool,
    col_ok: impl Fn(&E, &E) -> bool,
) -> std::result::Result<(), (Cell, &'static str)> {
    for (r, row) in rows.iter().enumerate() {
        for c in 1..row.len() {
            if !row_ok(&row[c - 1], &row[c]) {
                return Err((Cell::new(r + 1, c + 1), "row condition"));
            }
        }
        if r > 0 {
            for (c, e) in row.iter().enumerate() {
                if !col_ok(&rows[r - 1][c], e) {
                    return Err((Cell::new(r + 1, c + 1), "column condition"));
                }
            }
        }
    }
    Ok(())
}

impl<E: fmt::Display> fmt::Display for Tableau<E> {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr<E> {
    shape: Partition,
    rows: Vec<Vec<E>>,
}

impl<E: Serialize> Serialize for Tableau<E> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, E> {
            shape: Partition,
            rows: &'a [Vec<E>],
        }
        Repr { shape: self.shape(), rows: &self.rows }.serialize(serializer)
    }
}

impl<'de, E: DeserializeOwned> Deserialize<'de> for Tableau<E> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::<E>::deserialize(deserializer)?;
        let t = Tableau::from_rows(repr.rows).map_err(serde::de::Error::custom)?;
        if t.shape() != repr.shape {
            return Err(serde::de::Error::custom(format!(
                "declared shape {} does not match rows {}",
                repr.shape,
                t.shape()
            )));
        }
        Ok(t)
    }
}

/// Kinds accepted by [`validate_tableau`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableauKind {
    Semistandard,
    DualSemistandard,
    Symplectic,
    Spo,
    /// Semistandard on a skew shape; on a straight tableau it coincides
    /// with `Semistandard`.
    SkewSemistandard,
}

/// Checks a letter tableau against `kind`.
pub fn validate_tableau(t: &Tableau<Letter>, kind: TableauKind, params: &AlphabetParams) -> Result<()> {
    for (_, &l) in t.cells() {
        params.check(l)?;
    }
    let violation = |(cell, reason): (Cell, &str)| Error::Violation { cell, reason: reason.to_string() };
    match kind {
        TableauKind::Semistandard | TableauKind::SkewSemistandard => {
            check_rows_cols(&t.rows, |a, b| a <= b, |a, b| a < b).map_err(violation)
        }
        TableauKind::DualSemistandard => check_rows_cols(&t.rows, |a, b| a < b, |a, b| a <= b).map_err(violation),
        TableauKind::Symplectic => {
            if let Some((cell, _)) = t.cells().find(|(_, l)| l.is_b1()) {
                return Err(violation((cell, "symplectic tableaux have entries in B0 only")));
            }
            check_rows_cols(&t.rows, |a, b| a <= b, |a, b| a < b).map_err(violation)?;
            check_symplectic_rows(&t.rows).map_err(violation)
        }
        TableauKind::Spo => validate_spo(t).map_err(violation),
    }
}

fn check_symplectic_rows(rows: &[Vec<Letter>]) -> std::result::Result<(), (Cell, &'static str)> {
    for (r, row) in rows.iter().enumerate() {
        let floor = Letter::sym(r as u32 + 1);
        for (c, &l) in row.iter().enumerate() {
            if l.is_b0() && l < floor {
                return Err((Cell::new(r + 1, c + 1), "symplectic violation"));
            }
        }
    }
    Ok(())
}

/// The `B0` part must be a symplectic tableau on a sub-diagram; the `B1`
/// skew remainder must be row-strict and column-weak.
fn validate_spo(t: &Tableau<Letter>) -> std::result::Result<(), (Cell, &'static str)> {
    let mut b0_lens = Vec::with_capacity(t.rows.len());
    for (r, row) in t.rows.iter().enumerate() {
        let len = row.iter().take_while(|l| l.is_b0()).count();
        if let Some(c) = row[len..].iter().position(|l| l.is_b0()) {
            return Err((Cell::new(r + 1, len + c + 1), "B0 entry right of a B1 entry"));
        }
        b0_lens.push(len);
    }
    if let Some(r) = b0_lens.windows(2).position(|w| w[0] < w[1]) {
        return Err((Cell::new(r + 2, b0_lens[r] + 1), "B0 part is not a Young diagram"));
    }
    let b0: Vec<Vec<Letter>> =
        t.rows.iter().zip(&b0_lens).map(|(row, &len)| row[..len].to_vec()).filter(|r| !r.is_empty()).collect();
    check_rows_cols(&b0, |a, b| a <= b, |a, b| a < b)?;
    check_symplectic_rows(&b0)?;
    // B1 remainder on the skew shape sh(T) / sh(B0).
    for (r, row) in t.rows.iter().enumerate() {
        for c in b0_lens[r]..row.len() {
            if c > b0_lens[r] && row[c - 1] >= row[c] {
                return Err((Cell::new(r + 1, c + 1), "B1 rows must strictly increase"));
            }
            if r > 0 && c >= b0_lens[r - 1] && t.rows[r - 1][c] > row[c] {
                return Err((Cell::new(r + 1, c + 1), "B1 columns must weakly increase"));
            }
        }
    }
    Ok(())
}

/// The monomial `∏ x_i^{a_i - a_ī} ∏ t_k^{c_k}` of a letter tableau.
pub fn tableau_weight(t: &Tableau<Letter>, params: &AlphabetParams) -> Monomial {
    let mut mono = Monomial::one(params);
    for &l in t.entries() {
        mono.mul_letter(l);
    }
    mono
}

/// `∏ y_i^{#i}` for a tableau with entries in `{1..q}`.
pub fn content_weight(t: &Tableau<u32>, params: &AlphabetParams) -> Monomial {
    let mut mono = Monomial::one(params);
    for &e in t.entries() {
        mono.mul_y(e);
    }
    mono
}

/// A filling of a skew diagram. `rows[i]` holds the entries of the cells
/// of row `i + 1` that lie outside the inner shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau<E> {
    shape: SkewShape,
    rows: Vec<Vec<E>>,
}

impl<E> SkewTableau<E> {
    pub fn new(shape: SkewShape, rows: Vec<Vec<E>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        let ok = rows.len() == outer.len()
            && rows.iter().enumerate().all(|(i, r)| r.len() == outer.part(i + 1) - inner.part(i + 1));
        if !ok {
            return Err(Error::Shape(format!("rows do not fill {shape}")));
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> Option<&E> {
        let offset = self.shape.inner().part(cell.row);
        if cell.col <= offset {
            return None;
        }
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col - offset - 1)
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.rows.iter().flatten()
    }
}

impl<E: Ord> SkewTableau<E> {
    pub fn is_semistandard(&self) -> bool {
        for cell in self.shape.cells().into_iter().map(|(r, c)| Cell::new(r, c)) {
            let e = self.get(cell).expect("cell in shape");
            if let Some(left) = self.get(Cell::new(cell.row, cell.col - 1)) {
                if left > e {
                    return false;
                }
            }
            if cell.row > 1 {
                if let Some(above) = self.get(Cell::new(cell.row - 1, cell.col)) {
                    if above >= e {
                        return false;
                    }
                }
            }
        }
        true
    }
}
