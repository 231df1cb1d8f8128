use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::Letter;
use crate::alphabet::{AlphabetParams, LetterKind};

/// `∏ x_i^{a_i} ∏ t_k^{c_k} ∏ y_j^{e_j}` with integer `x` exponents and
/// nonnegative `t`, `y` exponents.
///
/// Ordered lexicographically on `(x, t, y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub x: Vec<i32>,
    pub t: Vec<i32>,
    pub y: Vec<i32>,
}

impl Monomial {
    pub fn one(params: &AlphabetParams) -> Self {
        Monomial { x: vec![0; params.m as usize], t: vec![0; params.n as usize], y: vec![0; params.q as usize] }
    }

    pub fn is_one(&self) -> bool {
        self.x.iter().chain(&self.t).chain(&self.y).all(|&e| e == 0)
    }

    /// Total degree in the `y` variables.
    pub fn y_degree(&self) -> i32 {
        self.y.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
            let len = a.len().max(b.len());
            (0..len).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
        }
        Monomial { x: add(&self.x, &other.x), t: add(&self.t, &other.t), y: add(&self.y, &other.y) }
    }

    pub fn pow(&self, e: i32) -> Monomial {
        let scale = |v: &[i32]| v.iter().map(|a| a * e).collect();
        Monomial { x: scale(&self.x), t: scale(&self.t), y: scale(&self.y) }
    }

    /// Multiplies in the weight of one letter: `x_i`, `x_i^{-1}` or `t_k`.
    pub fn mul_letter(&mut self, letter: Letter) {
        let i = letter.value() as usize - 1;
        match letter.kind() {
            LetterKind::Sym => self.x[i] += 1,
            LetterKind::SymBar => self.x[i] -= 1,
            LetterKind::Circ => self.t[i] += 1,
        }
    }

    pub fn mul_y(&mut self, j: u32) {
        self.y[j as usize - 1] += 1;
    }

    /// `x_i ↦ x_i^{-1}` for every `i`.
    pub fn invert_x(&self) -> Monomial {
        Monomial { x: self.x.iter().map(|e| -e).collect(), t: self.t.clone(), y: self.y.clone() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (name, exps) in [("x", &self.x), ("t", &self.t), ("y", &self.y)] {
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                if e == 1 {
                    write!(f, "{name}{}", i + 1)?;
                } else {
                    write!(f, "{name}{}^{e}", i + 1)?;
                }
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}
