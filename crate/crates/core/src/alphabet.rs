//! Letters of the orthosymplectic alphabet and the parameter context they live in.
//!
//! The alphabet is `B0 ∪ B1` where `B0 = {1, 1̄, 2, 2̄, …, m, m̄}` and
//! `B1 = {1°, …, n°}`, totally ordered as
//! `1 < 1̄ < 2 < 2̄ < … < m < m̄ < 1° < … < n°`.
//!
//! Letters are written in a plain ASCII grammar: `"3"` (unbarred), `"3b"`
//! (barred) and `"2o"` (circled).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LetterKind {
    Sym,
    SymBar,
    Circ,
}

/// A letter of `B0 ∪ B1`.
///
/// The order between letters does not depend on `m` or `n`, so `Letter`
/// implements `Ord` directly. [`Letter::rank`] gives the position in the
/// alphabet for a particular `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    kind: LetterKind,
    value: u32,
}

impl Letter {
    pub fn new(kind: LetterKind, value: u32) -> Result<Self> {
        if value == 0 {
            return Err(Error::Parse(format!("letter index must be positive, got {kind:?} 0")));
        }
        Ok(Letter { kind, value })
    }

    /// Unbarred `i`. Panics on `i == 0`.
    pub fn sym(i: u32) -> Self {
        assert!(i > 0, "letter index must be positive");
        Letter { kind: LetterKind::Sym, value: i }
    }

    /// Barred `ī`. Panics on `i == 0`.
    pub fn bar(i: u32) -> Self {
        assert!(i > 0, "letter index must be positive");
        Letter { kind: LetterKind::SymBar, value: i }
    }

    /// Circled `k°`. Panics on `k == 0`.
    pub fn circ(k: u32) -> Self {
        assert!(k > 0, "letter index must be positive");
        Letter { kind: LetterKind::Circ, value: k }
    }

    pub fn kind(self) -> LetterKind {
        self.kind
    }

    pub fn value(self) -> u32 {
        self.value
    }

    /// True for letters of `B1` (circled letters).
    pub fn is_b1(self) -> bool {
        self.kind == LetterKind::Circ
    }

    pub fn is_b0(self) -> bool {
        !self.is_b1()
    }

    /// Position in `1 < 1̄ < … < m̄ < 1° < … < n°`, starting at 1.
    pub fn rank(self, m: u32) -> u32 {
        match self.kind {
            LetterKind::Sym => 2 * self.value - 1,
            LetterKind::SymBar => 2 * self.value,
            LetterKind::Circ => 2 * m + self.value,
        }
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: u32, params: &AlphabetParams) -> Result<Self> {
        if rank == 0 || rank > params.alphabet_size() {
            return Err(Error::Parse(format!(
                "rank {rank} outside 1..={} for m={}, n={}",
                params.alphabet_size(),
                params.m,
                params.n
            )));
        }
        let two_m = 2 * params.m;
        Ok(if rank <= two_m {
            if rank % 2 == 1 {
                Letter::sym(rank.div_ceil(2))
            } else {
                Letter::bar(rank / 2)
            }
        } else {
            Letter::circ(rank - two_m)
        })
    }

    fn order_key(self) -> (u8, u32, u8) {
        match self.kind {
            LetterKind::Sym => (0, self.value, 0),
            LetterKind::SymBar => (0, self.value, 1),
            LetterKind::Circ => (1, self.value, 0),
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::Sym => write!(f, "{}", self.value),
            LetterKind::SymBar => write!(f, "{}b", self.value),
            LetterKind::Circ => write!(f, "{}o", self.value),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, kind) = if let Some(d) = s.strip_suffix('b') {
            (d, LetterKind::SymBar)
        } else if let Some(d) = s.strip_suffix('o') {
            (d, LetterKind::Circ)
        } else {
            (s, LetterKind::Sym)
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed letter {s:?}")));
        }
        let value: u32 = digits.parse().map_err(|_| Error::Parse(format!("malformed letter {s:?}")))?;
        Letter::new(kind, value)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The sizes `m`, `n` of `B0`, `B1` and the recording alphabet `{1..q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphabetParams {
    pub m: u32,
    pub n: u32,
    pub q: u32,
}

impl AlphabetParams {
    pub fn new(m: u32, n: u32, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::Params("q must be at least 1".into()));
        }
        Ok(AlphabetParams { m, n, q })
    }

    /// `2m + n`.
    pub fn alphabet_size(&self) -> u32 {
        2 * self.m + self.n
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter.kind {
            LetterKind::Sym | LetterKind::SymBar => letter.value <= self.m,
            LetterKind::Circ => letter.value <= self.n,
        }
    }

    pub fn check(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange { letter, m: self.m, n: self.n })
        }
    }

    /// Every letter of `B0 ∪ B1` in increasing order.
    pub fn letters(&self) -> Vec<Letter> {
        (1..=self.alphabet_size()).map(|r| Letter::from_rank(r, self).expect("rank in range")).collect()
    }

    /// The letters of `B0` in increasing order.
    pub fn b0_letters(&self) -> Vec<Letter> {
        self.letters().into_iter().filter(|l| l.is_b0()).collect()
    }
}

/// Compares two letters after checking both against `params`.
pub fn compare_letters(a: Letter, b: Letter, params: &AlphabetParams) -> Result<Ordering> {
    params.check(a)?;
    params.check(b)?;
    Ok(a.rank(params.m).cmp(&b.rank(params.m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: u32, n: u32) -> AlphabetParams {
        AlphabetParams::new(m, n, 1).unwrap()
    }

    #[test]
    fn ordering_examples() {
        let params = p(3, 3);
        assert_eq!(compare_letters(Letter::bar(1), Letter::sym(2), &params).unwrap(), Ordering::Less);
        assert_eq!(compare_letters(Letter::circ(3), Letter::circ(3), &params).unwrap(), Ordering::Equal);
        for m in 1..4 {
            for n in 1..4 {
                let params = p(m, n);
                assert_eq!(compare_letters(Letter::bar(m), Letter::circ(1), &params).unwrap(), Ordering::Less);
            }
        }
    }

    #[test]
    fn out_of_range_is_an_error() {
        let params = p(1, 1);
        assert!(matches!(
            compare_letters(Letter::sym(2), Letter::sym(1), &params),
            Err(Error::LetterOutOfRange { .. })
        ));
        assert!(compare_letters(Letter::circ(2), Letter::sym(1), &params).is_err());
    }

    #[test]
    fn rank_is_a_bijection() {
        for m in 0..4 {
            for n in 0..4 {
                let params = p(m, n);
                let letters = params.letters();
                assert_eq!(letters.len() as u32, params.alphabet_size());
                for (i, l) in letters.iter().enumerate() {
                    assert_eq!(l.rank(m), i as u32 + 1);
                    assert!(params.contains(*l));
                }
                // Ord agrees with rank order.
                assert!(letters.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for s in ["1", "3b", "2o", "12b"] {
            let l: Letter = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert_eq!("3b".parse::<Letter>().unwrap(), Letter::bar(3));
        for bad in ["", "b", "0", "0o", "x3", "3x", "-1", "1bb"] {
            assert!(bad.parse::<Letter>().is_err(), "{bad}");
        }
    }
}
