use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::alphabet::AlphabetParams;
use crate::array::{array_weight, arrays_a, arrays_astar, matrix_to_array, validate_array, ArrayClass, Matrix};
use crate::correspond::{updown_to_word, word_to_updown};
use crate::enumerate::{count_spo, enumerate_dual_ssyt, enumerate_ssyt, enumerate_updown, EnumCaps};
use crate::exec::Exec;
use crate::monomial::Monomial;
use crate::partition::Partition;
use crate::sweep::all_words;

use super::schur::{schur, spo_character, CharacterMethod, Vars};
use super::LaurentPolynomial;

/// One side's value: a coefficient or a count, as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideValue {
    pub side: String,
    pub value: String,
}

impl SideValue {
    fn new(side: &str, value: impl ToString) -> Self {
        SideValue { side: side.into(), value: value.to_string() }
    }
}

/// The first monomial on which the sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub monomial: Monomial,
    pub coefficients: Vec<SideValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub matched: bool,
    /// Each side evaluated at `x = t = y = 1` (or the plain count).
    pub totals: Vec<SideValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: AlphabetParams,
    pub k: usize,
    pub degrees: Vec<DegreeCheck>,
    pub counts: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    /// Seconds, filled in by callers that time the run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl IdentityReport {
    fn new(identity: &str, params: &AlphabetParams, k: usize) -> Self {
        IdentityReport {
            identity: identity.into(),
            params: *params,
            k,
            degrees: Vec::new(),
            counts: BTreeMap::new(),
            notes: Vec::new(),
            wall_time: None,
        }
    }

    pub fn matched(&self) -> bool {
        self.degrees.iter().all(|d| d.matched)
    }

    /// The first degree that failed, if any.
    pub fn first_mismatch(&self) -> Option<&DegreeCheck> {
        self.degrees.iter().find(|d| !d.matched)
    }
}

fn compare_polynomials(degree: usize, sides: &[(&str, LaurentPolynomial)]) -> DegreeCheck {
    let totals = sides.iter().map(|(name, p)| SideValue::new(name, p.coefficient_sum())).collect();
    let monomials: BTreeSet<&Monomial> = sides.iter().flat_map(|(_, p)| p.terms().map(|(m, _)| m)).collect();
    let mismatch = monomials.into_iter().find_map(|m| {
        let coeffs: Vec<BigInt> = sides.iter().map(|(_, p)| p.coefficient(m)).collect();
        (!coeffs.windows(2).all(|w| w[0] == w[1])).then(|| Mismatch {
            monomial: m.clone(),
            coefficients: sides.iter().zip(coeffs).map(|((name, _), c)| SideValue::new(name, c)).collect(),
        })
    });
    DegreeCheck { degree, matched: mismatch.is_none(), totals, mismatch }
}

fn compare_counts(degree: usize, sides: &[(&str, BigInt)]) -> DegreeCheck {
    let matched = sides.windows(2).all(|w| w[0].1 == w[1].1);
    DegreeCheck {
        degree,
        matched,
        totals: sides.iter().map(|(name, v)| SideValue::new(name, v)).collect(),
        mismatch: None,
    }
}

fn shapes_up_to(k: usize) -> Vec<Partition> {
    (0..=k).flat_map(Partition::all_of).collect()
}

fn var_x(params: &AlphabetParams, i: u32, e: i32) -> Monomial {
    let mut m = Monomial::one(params);
    m.x[i as usize - 1] = e;
    m
}

fn with_y(mut m: Monomial, j: u32) -> Monomial {
    m.mul_y(j);
    m
}

/// `Σ_{β ⊢ e} s_β(Y)` over `β` with even columns (or even rows), for each `e ≤ k`.
fn even_sums(q: u32, k: usize, columns: bool) -> Vec<LaurentPolynomial> {
    (0..=k)
        .map(|e| {
            let mut sum = LaurentPolynomial::zero();
            for beta in Partition::all_of(e) {
                let even = if columns { beta.has_even_columns() } else { beta.is_even() };
                if even {
                    sum.add_assign(&schur(&beta, Vars::Y(q), EnumCaps::unbounded()).expect("unbounded caps"));
                }
            }
            sum
        })
        .collect()
}

/// Shared driver for both Cauchy identities. `dual` selects `s_{λᵗ}`,
/// even-row `β`, the dual product and the arrays `A*`.
fn verify_cauchy_like(params: &AlphabetParams, k: usize, exec: Exec, dual: bool) -> IdentityReport {
    let name = if dual { "dual cauchy" } else { "cauchy" };
    let mut report = IdentityReport::new(name, params, k);
    let ycap = k as i32;
    let q = params.q;
    let p = *params;

    let per_shape = exec.map_collect(shapes_up_to(k), |lambda| {
        let spo = spo_character(&lambda, &p, CharacterMethod::Direct, EnumCaps::unbounded()).expect("unbounded caps");
        let partner = if dual { lambda.conjugate() } else { lambda.clone() };
        let s = schur(&partner, Vars::Y(q), EnumCaps::unbounded()).expect("unbounded caps");
        let f = spo.coefficient_sum();
        let d = s.coefficient_sum();
        (spo.mul_truncated(&s, ycap), f, d)
    });
    let littlewood = even_sums(q, k, !dual).iter().fold(LaurentPolynomial::zero(), |acc, p| acc.add(p));
    let mut lhs = LaurentPolynomial::zero();
    let (mut n_spo, mut n_ssyt) = (BigInt::zero(), BigInt::zero());
    for (term, f, d) in per_shape {
        n_spo += f;
        n_ssyt += d;
        lhs.add_assign(&term.mul_truncated(&littlewood, ycap));
    }

    let mut rhs = LaurentPolynomial::one();
    for j in 1..=q {
        for i in 1..=params.m {
            for e in [1, -1] {
                let v = with_y(var_x(params, i, e), j);
                let factor = if dual { LaurentPolynomial::one_plus(v) } else { LaurentPolynomial::geometric(&v, ycap) };
                rhs = rhs.mul_truncated(&factor, ycap);
            }
        }
        for i in 1..=params.n {
            let mut v = Monomial::one(params);
            v.t[i as usize - 1] = 1;
            v.mul_y(j);
            let factor = if dual { LaurentPolynomial::geometric(&v, ycap) } else { LaurentPolynomial::one_plus(v) };
            rhs = rhs.mul_truncated(&factor, ycap);
        }
    }

    let mut arrays_total = 0u64;
    let per_degree_arrays = exec.map_collect((0..=k as u32).collect(), |d| {
        let arrays = if dual { arrays_astar(&p, d) } else { arrays_a(&p, d) };
        let mut sum = LaurentPolynomial::zero();
        for pi in &arrays {
            sum.add_term(array_weight(pi, &p), BigInt::one());
        }
        (arrays.len() as u64, sum)
    });

    let tableau_side = if dual { "Σ spo_λ s_λᵗ s_β" } else { "Σ spo_λ s_λ s_β" };
    for (d, (count, arrays)) in per_degree_arrays.into_iter().enumerate() {
        arrays_total += count;
        report.degrees.push(compare_polynomials(
            d,
            &[(tableau_side, lhs.y_part(d as i32)), ("product", rhs.y_part(d as i32)), ("arrays", arrays)],
        ));
    }
    report.counts.insert("spo tableaux".into(), to_u64(&n_spo));
    report.counts.insert("semistandard tableaux".into(), to_u64(&n_ssyt));
    report.counts.insert("arrays".into(), arrays_total);
    if let Some(bad) = report.first_mismatch() {
        report.notes.push(format!("first mismatch in degree {}", bad.degree));
    }
    report
}

fn to_u64(n: &BigInt) -> u64 {
    u64::try_from(n).unwrap_or(u64::MAX)
}

/// Checks `Σ spo_λ(Z) s_λ(Y) Σ_{βᵗ even} s_β(Y) = ∏(1 + t_i y_j) ∏(1 − x_i y_j)⁻¹(1 − x_i⁻¹ y_j)⁻¹`
/// and the weight sum over `A`, per `y` degree up to `k`.
pub fn verify_cauchy(params: &AlphabetParams, k: usize, exec: Exec) -> IdentityReport {
    verify_cauchy_like(params, k, exec, false)
}

/// Checks `Σ spo_λ(Z) s_{λᵗ}(Y) Σ_{β even} s_β(Y) = ∏(1 + x_i y_j)(1 + x_i⁻¹ y_j) ∏(1 − t_i y_j)⁻¹`
/// and the weight sum over `A*`, per `y` degree up to `k`.
pub fn verify_dual_cauchy(params: &AlphabetParams, k: usize, exec: Exec) -> IdentityReport {
    verify_cauchy_like(params, k, exec, true)
}

/// `(2m+n)^k` against `Σ_λ f_spo^λ f_ud^λ` and the number of words whose
/// image under the word map inverts back to them.
pub fn verify_power_identity(params: &AlphabetParams, k: usize, exec: Exec) -> IdentityReport {
    let mut report = IdentityReport::new("power", params, k);
    let p = *params;
    let power = BigInt::from(params.alphabet_size()).pow(k as u32);

    let mut double_sum = BigInt::zero();
    let mut terms = Vec::new();
    for r in 0..=k / 2 {
        for lambda in Partition::all_of(k - 2 * r) {
            let f_ud = enumerate_updown(&lambda, k, params).len();
            if f_ud == 0 {
                continue;
            }
            let f_spo = count_spo(&lambda, params, EnumCaps::unbounded()).expect("unbounded caps");
            if f_spo == 0 {
                continue;
            }
            double_sum += f_spo * f_ud;
            terms.push(format!("{lambda}: {f_spo}·{f_ud}"));
        }
    }

    let words = all_words(params, k);
    let n_words = words.len() as u64;
    let images = exec.map_collect(words, |w| {
        let pair = word_to_updown(&w, &p).ok()?;
        let back = updown_to_word(&pair, &p).ok()?;
        (back == w).then_some(pair)
    });
    let distinct: BTreeSet<_> =
        images.iter().flatten().map(|pair| serde_json::to_string(pair).expect("pair serializes")).collect();
    let mapped = BigInt::from(distinct.len());

    report.degrees.push(compare_counts(
        k,
        &[("(2m+n)^k", power), ("Σ f_spo f_ud", double_sum.clone()), ("words", mapped.clone())],
    ));
    report.counts.insert("words".into(), n_words);
    report.counts.insert("pairs".into(), to_u64(&double_sum));
    report.counts.insert("distinct images".into(), to_u64(&mapped));
    report.notes.push(format!("terms f_spo·f_ud: {}", terms.join(", ")));
    if double_sum > mapped {
        report.notes.push(format!("{} pairs are not the image of any word", double_sum - mapped));
    }
    report
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// `cont(μ, i)` for `i = 1..`: the multiplicity of each part size.
fn multiplicities(mu: &Partition) -> Vec<usize> {
    let mut counts = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0usize) += 1;
    }
    counts.into_values().collect()
}

/// The closed forms for the number of `A` arrays with `k` columns:
/// `(statement, proof, multiset)`. The first two are evaluated exactly as
/// displayed; the third carries `cont(μ,i)!`.
pub fn matrix_count_formulas(params: &AlphabetParams, k: usize) -> (BigRational, BigRational, BigInt) {
    let nq = (params.n * params.q) as usize;
    let cells = (2 * params.m * params.q) as usize;
    let mut statement = BigRational::zero();
    let mut proof = BigRational::zero();
    let mut multiset = BigInt::zero();
    for r in 0..=k {
        let choose_r = binomial(nq, r);
        if choose_r.is_zero() {
            continue;
        }
        for mu in Partition::all_of(k - r) {
            let len = mu.len();
            let mults = multiplicities(&mu);
            let cont: BigInt = mults.iter().map(|&c| BigInt::from(c)).product();
            let cont_fact: BigInt = mults.iter().map(|&c| factorial(c)).product();
            let placements = binomial(cells, len) * factorial(len);
            statement += BigRational::new(&choose_r * &placements, cont.clone());
            if len <= cells {
                proof += BigRational::new(&choose_r * BigInt::from(cells), factorial(cells - len) * &cont);
            }
            multiset += &choose_r * &placements / cont_fact;
        }
    }
    (statement, proof, multiset)
}

/// Every `q × (2m+n)` nonnegative matrix with entry sum `k` whose circled
/// block is 0/1.
fn matrices(params: &AlphabetParams, k: usize) -> Vec<Matrix> {
    let width = params.alphabet_size() as usize;
    let q = params.q as usize;
    let b0 = 2 * params.m as usize;
    let mut out = Vec::new();
    let mut flat = vec![0u32; q * width];
    fn go(pos: usize, rem: u32, flat: &mut Vec<u32>, width: usize, b0: usize, out: &mut Vec<Matrix>) {
        if pos == flat.len() {
            if rem == 0 {
                out.push(flat.chunks(width).map(<[u32]>::to_vec).collect());
            }
            return;
        }
        let max = if pos % width >= b0 { rem.min(1) } else { rem };
        for v in 0..=max {
            flat[pos] = v;
            go(pos + 1, rem - v, flat, width, b0, out);
        }
        flat[pos] = 0;
    }
    go(0, k as u32, &mut flat, width, b0, &mut out);
    out
}

/// Counts `A` arrays with `k` columns through the matrix encoding and
/// through triples `Σ f_spo^λ d^λ d^β` with `β` of even columns, and
/// reports the displayed closed forms next to them.
pub fn verify_matrix_count(params: &AlphabetParams, k: usize, exec: Exec) -> IdentityReport {
    let mut report = IdentityReport::new("matrix count", params, k);
    let p = *params;

    let mats = matrices(params, k);
    let n_matrices = mats.len();
    let decoded = exec.map_reduce(
        mats,
        0usize,
        |m| {
            usize::from(
                matrix_to_array(&m, &p).is_ok_and(|pi| validate_array(&pi, ArrayClass::A, &p).is_ok() && pi.len() == k),
            )
        },
        |a, b| a + b,
    );
    if decoded != n_matrices {
        report.notes.push(format!("only {decoded} of {n_matrices} matrices decode to arrays in A"));
    }

    let q = params.q;
    let count_ssyt = |shape: &Partition, dual: bool| -> BigInt {
        let it = if dual {
            enumerate_dual_ssyt(shape, q, EnumCaps::unbounded())
        } else {
            enumerate_ssyt(shape, q, EnumCaps::unbounded())
        };
        BigInt::from(it.expect("unbounded caps").count())
    };
    let mut triples = BigInt::zero();
    let mut even_rows_variant = BigInt::zero();
    for size in 0..=k {
        let (mut even_cols, mut even_rows) = (BigInt::zero(), BigInt::zero());
        for beta in Partition::all_of(k - size) {
            if beta.has_even_columns() {
                even_cols += count_ssyt(&beta, false);
            }
            if beta.is_even() {
                even_rows += count_ssyt(&beta, false);
            }
        }
        for lambda in Partition::all_of(size) {
            let f = BigInt::from(count_spo(&lambda, params, EnumCaps::unbounded()).expect("unbounded caps"));
            if f.is_zero() {
                continue;
            }
            let d = count_ssyt(&lambda, false);
            triples += &f * &d * &even_cols;
            even_rows_variant += &f * &d * &even_rows;
        }
    }

    let (statement, proof, multiset) = matrix_count_formulas(params, k);
    let direct = BigInt::from(n_matrices);
    let mut check = compare_counts(k, &[("matrices", direct.clone()), ("Σ f_spo d^λ d^β", triples)]);
    check.totals.push(SideValue::new("statement formula", &statement));
    check.totals.push(SideValue::new("proof formula", &proof));
    check.totals.push(SideValue::new("multiset count", &multiset));
    report.degrees.push(check);

    let verdict = |name: &str, v: &BigRational| {
        let same = *v == BigRational::from_integer(direct.clone());
        format!("{name} formula as displayed gives {v}: {}", if same { "agrees" } else { "differs" })
    };
    report.notes.push(verdict("statement", &statement));
    report.notes.push(verdict("proof", &proof));
    report.notes.push(format!("with d^β over even-row β instead the triple side would be {even_rows_variant}"));
    report.counts.insert("matrices".into(), n_matrices as u64);
    report
}
