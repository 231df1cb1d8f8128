use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::alphabet::AlphabetParams;
use crate::enumerate::{enumerate_skew_ssyt, enumerate_tableaux, EnumCaps};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::partition::{Partition, SkewShape};
use crate::tableau::{tableau_weight, TableauKind};

use super::LaurentPolynomial;

/// Which variables a Schur polynomial is taken in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Vars {
    /// `y_1, …, y_q`
    Y(u32),
    /// `t_1, …, t_n`
    T(u32),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharacterMethod {
    /// Sum of weights over spo-tableaux.
    #[default]
    Direct,
    /// `Σ_{μ ⊆ λ, ℓ(μ) ≤ m} sp_μ(X̄) s_{λᵗ/μᵗ}(T)`.
    MuSum,
}

/// `s_{λ/μ}` in the given variables, by summing over semistandard fillings.
pub fn skew_schur(shape: &SkewShape, vars: Vars, caps: EnumCaps) -> Result<LaurentPolynomial> {
    let count = match vars {
        Vars::Y(q) | Vars::T(q) => q,
    };
    let mut out = LaurentPolynomial::zero();
    for t in enumerate_skew_ssyt(shape, count, caps)? {
        let mut exps = vec![0i32; count as usize];
        for &e in t.entries() {
            exps[e as usize - 1] += 1;
        }
        let m = match vars {
            Vars::Y(_) => Monomial { y: exps, ..Default::default() },
            Vars::T(_) => Monomial { t: exps, ..Default::default() },
        };
        out.add_term(m, BigInt::one());
    }
    Ok(out)
}

pub fn schur(shape: &Partition, vars: Vars, caps: EnumCaps) -> Result<LaurentPolynomial> {
    skew_schur(&shape.clone().into(), vars, caps)
}

/// `sp_μ(x_1^{±1}, …, x_m^{±1})` over symplectic tableaux.
pub fn symplectic_schur(mu: &Partition, m: u32, caps: EnumCaps) -> Result<LaurentPolynomial> {
    if mu.len() > m as usize {
        return Err(Error::Shape(format!("symplectic shape {mu} has more than m={m} rows")));
    }
    let params = AlphabetParams::new(m, 0, 1)?;
    weight_sum(mu, TableauKind::Symplectic, &params, caps)
}

fn weight_sum(
    shape: &Partition,
    kind: TableauKind,
    params: &AlphabetParams,
    caps: EnumCaps,
) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero();
    for t in enumerate_tableaux(shape, kind, params, caps)? {
        out.add_term(tableau_weight(&t, params), BigInt::one());
    }
    Ok(out)
}

/// The orthosymplectic character `spo_λ(Z)`. Only `m` and `n` of `params`
/// matter.
pub fn spo_character(
    lambda: &Partition,
    params: &AlphabetParams,
    method: CharacterMethod,
    caps: EnumCaps,
) -> Result<LaurentPolynomial> {
    match method {
        CharacterMethod::Direct => weight_sum(lambda, TableauKind::Spo, params, caps),
        CharacterMethod::MuSum => {
            let mut out = LaurentPolynomial::zero();
            let conj = lambda.conjugate();
            for mu in lambda.subpartitions() {
                if mu.len() > params.m as usize {
                    continue;
                }
                let sp = symplectic_schur(&mu, params.m, caps)?;
                let skew = SkewShape::new(conj.clone(), mu.conjugate())?;
                let s = skew_schur(&skew, Vars::T(params.n), caps)?;
                out.add_assign(&sp.mul(&s));
            }
            Ok(out)
        }
    }
}
