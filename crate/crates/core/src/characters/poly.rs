use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::monomial::Monomial;

/// Trailing zero exponents carry no information; dropping them makes
/// monomials built over different variable sets comparable.
fn canonical(mut m: Monomial) -> Monomial {
    for v in [&mut m.x, &mut m.t, &mut m.y] {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    m
}

/// Sparse Laurent polynomial in `x`, `t`, `y` with big integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::default(), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(&canonical(m.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let m = canonical(m);
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    /// Product keeping only terms of total `y` degree at most `ycap`.
    pub fn mul_truncated(&self, other: &Self, ycap: impl Into<Option<i32>>) -> Self {
        let ycap = ycap.into();
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ycap.is_some_and(|cap| ma.y_degree() + mb.y_degree() > cap) {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Terms of total `y` degree exactly `d`.
    pub fn y_part(&self, d: i32) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().filter(|(m, _)| m.y_degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn truncate(&self, ycap: i32) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.y_degree() <= ycap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `x = t = y = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `x_i ↦ x_i^{-1}` throughout.
    pub fn invert_x(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.invert_x(), c.clone());
        }
        out
    }

    /// `1 + v`.
    pub fn one_plus(v: Monomial) -> Self {
        Self::one().add(&Self::monomial(v, 1))
    }

    /// `1 - v`.
    pub fn one_minus(v: Monomial) -> Self {
        Self::one().add(&Self::monomial(v, -1))
    }

    /// `(1 - v)^{-1} = Σ v^e` up to `y` degree `ycap`. `v` must involve `y`.
    pub fn geometric(v: &Monomial, ycap: i32) -> Self {
        let step = v.y_degree();
        assert!(step > 0, "geometric series needs a positive y degree");
        let mut out = Self::zero();
        for e in 0..=ycap / step {
            out.add_term(v.pow(e), BigInt::one());
        }
        out
    }
}

impl FromIterator<(Monomial, BigInt)> for LaurentPolynomial {
    fn from_iter<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match (abs.is_one(), m.is_one()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    x: Vec<i32>,
    t: Vec<i32>,
    y: Vec<i32>,
    c: String,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson { x: m.x.clone(), t: m.t.clone(), y: m.y.clone(), c: c.to_string() })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let mut p = Self::zero();
        for term in Vec::<TermJson>::deserialize(deserializer)? {
            let c: BigInt = term.c.parse().map_err(D::Error::custom)?;
            p.add_term(Monomial { x: term.x, t: term.t, y: term.y }, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(x: &[i32], t: &[i32], y: &[i32]) -> Monomial {
        Monomial { x: x.to_vec(), t: t.to_vec(), y: y.to_vec() }
    }

    #[test]
    fn padding_does_not_matter() {
        let a = LaurentPolynomial::monomial(mono(&[1, 0], &[], &[0, 0]), 2);
        let b = LaurentPolynomial::monomial(mono(&[1], &[0], &[]), 2);
        assert_eq!(a, b);
        assert_eq!(a.coefficient(&mono(&[1, 0, 0], &[], &[])), BigInt::from(2));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPolynomial::one_plus(mono(&[], &[], &[1]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.mul(&LaurentPolynomial::one()), a);
    }

    #[test]
    fn truncated_product() {
        let p = LaurentPolynomial::one_plus(mono(&[1], &[], &[1]))
            .mul_truncated(&LaurentPolynomial::one_plus(mono(&[-1], &[], &[1])), 1);
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "1 + x1^-1*y1 + x1*y1");
    }

    #[test]
    fn geometric_series() {
        let g = LaurentPolynomial::geometric(&mono(&[], &[1], &[1]), 2);
        let expected: LaurentPolynomial = (0..=2).map(|e| (mono(&[], &[e], &[e]), BigInt::one())).collect();
        assert_eq!(g, expected);
        // (1 - v)(1 + v + v²) = 1 - v³, truncated back to degree 2.
        let v = mono(&[], &[1], &[1]);
        assert_eq!(LaurentPolynomial::one_minus(v).mul_truncated(&g, 2), LaurentPolynomial::one());
    }

    #[test]
    fn json_roundtrip() {
        let p = LaurentPolynomial::monomial(mono(&[-1], &[2], &[1]), BigInt::from(-12345678901234567890i128));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"x":[-1],"t":[2],"y":[1],"c":"-12345678901234567890"}]"#);
        let back: LaurentPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
