use std::fmt::Display;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;
use ospkit_core::array::{arrays_a, arrays_astar};
use ospkit_core::characters::{
    schur, spo_character, symplectic_schur, verify_cauchy, verify_dual_cauchy, verify_matrix_count,
    verify_power_identity, CharacterMethod, LaurentPolynomial, Vars,
};
use ospkit_core::correspond::*;
use ospkit_core::enumerate::{enumerate_ssyt, enumerate_tableaux, enumerate_updown, EnumCaps};
use ospkit_core::exec::Exec;
use ospkit_core::insertion::{spo_insert, spo_uninsert, Effect};
use ospkit_core::sweep::all_words;
use ospkit_core::tableau::validate_tableau;
use ospkit_core::{AlphabetParams, Letter, Partition, Tableau, TableauKind, TwoLineArray};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::input::parse;
use crate::{text, CharKind, EnumKind, Format, Identity, Method, Opts, Outcome, Verb};

pub fn dispatch(cli: &crate::Cli) -> Result<Outcome> {
    let o = &cli.opts;
    let body = match &cli.verb {
        Verb::Insert => insert(o)?,
        Verb::Correspond => correspond(o)?,
        Verb::DualCorrespond => dual_correspond(o)?,
        Verb::Burge => burge(o, false)?,
        Verb::DualBurge => burge(o, true)?,
        Verb::Word => word(o)?,
        Verb::Enumerate { kind, shape } => enumerate(o, *kind, shape)?,
        Verb::Character { shape, kind, method } => character(o, shape, *kind, *method)?,
        Verb::Verify { identity } => return verify(o, *identity),
        Verb::Render => render(o)?,
    };
    Ok(Outcome { body, ok: true })
}

fn params(o: &Opts) -> Result<AlphabetParams> {
    Ok(AlphabetParams::new(o.m, o.n, o.q)?)
}

fn caps(o: &Opts) -> EnumCaps {
    EnumCaps { max_cells: o.max_cells, max_alphabet: usize::MAX }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn emit<T: Serialize>(o: &Opts, value: &T, text: impl FnOnce() -> String) -> Result<String> {
    match o.format {
        Format::Json => to_json(value),
        Format::Text => Ok(text()),
    }
}

/// Emits `result`, wrapped with its step trace when `--trace` is given.
fn emit_traced<T: Serialize, S: Serialize>(
    o: &Opts,
    result: &T,
    steps: &S,
    show: impl FnOnce() -> String,
    show_steps: impl FnOnce() -> String,
) -> Result<String> {
    if !o.trace {
        return emit(o, result, show);
    }
    #[derive(Serialize)]
    struct Traced<'a, T, S> {
        result: &'a T,
        trace: &'a S,
    }
    match o.format {
        Format::Json => to_json(&Traced { result, trace: steps }),
        Format::Text => Ok(format!("{}\n{}", show_steps(), show())),
    }
}

#[derive(Deserialize)]
struct InsertInput {
    tableau: Tableau<Letter>,
    letter: Letter,
}

#[derive(Deserialize)]
struct UninsertInput {
    tableau: Tableau<Letter>,
    effect: Effect,
}

#[derive(Serialize)]
struct InsertOutput<'a> {
    result: &'a Tableau<Letter>,
    effect: Effect,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a [ospkit_core::insertion::TraceEvent<Letter>]>,
}

fn insert(o: &Opts) -> Result<String> {
    let p = params(o)?;
    if o.inverse {
        let inp: UninsertInput = parse(o.input.as_deref(), "insertion result")?;
        validate_tableau(&inp.tableau, TableauKind::Spo, &p)?;
        let (t, x) = spo_uninsert(&inp.tableau, inp.effect, &p)?;
        #[derive(Serialize)]
        struct Uninserted<'a> {
            tableau: &'a Tableau<Letter>,
            letter: Letter,
        }
        return emit(o, &Uninserted { tableau: &t, letter: x }, || format!("{}\nletter: {x}", text::block("T", &t)));
    }
    let inp: InsertInput = parse(o.input.as_deref(), "insertion input")?;
    validate_tableau(&inp.tableau, TableauKind::Spo, &p)?;
    let out = spo_insert(&inp.tableau, inp.letter, &p)?;
    let doc = InsertOutput { result: &out.result, effect: out.effect, trace: o.trace.then_some(&out.trace[..]) };
    emit(o, &doc, || {
        let mut s = String::new();
        if o.trace {
            s = text::events(&out.trace) + "\n";
        }
        s + &format!("{}\n{}", text::effect(&out.effect), text::block("result", &out.result))
    })
}

fn correspond(o: &Opts) -> Result<String> {
    let p = params(o)?;
    if o.inverse {
        let triple: SpoTriple = parse(o.input.as_deref(), "triple")?;
        let (pi, steps) = spo_inverse_trace(&triple, &p)?;
        emit_traced(o, &pi, &steps, || pi.to_string(), || text::inverse_steps(&steps))
    } else {
        let pi: TwoLineArray<Letter> = parse(o.input.as_deref(), "array")?;
        let (triple, steps) = spo_forward_trace(&pi, &p)?;
        emit_traced(o, &triple, &steps, || text::triple(&triple), || text::forward_steps(&steps))
    }
}

fn dual_correspond(o: &Opts) -> Result<String> {
    let p = params(o)?;
    if o.inverse {
        let triple: DualSpoTriple = parse(o.input.as_deref(), "dual triple")?;
        let (pi, steps) = dual_spo_inverse_trace(&triple, &p)?;
        emit_traced(o, &pi, &steps, || pi.to_string(), || text::inverse_steps(&steps))
    } else {
        let pi: TwoLineArray<Letter> = parse(o.input.as_deref(), "array")?;
        let (triple, steps) = dual_spo_forward_trace(&pi, &p)?;
        emit_traced(o, &triple, &steps, || text::dual_triple(&triple), || text::forward_steps(&steps))
    }
}

fn burge(o: &Opts, dual: bool) -> Result<String> {
    if o.inverse {
        let t: Tableau<u32> = parse(o.input.as_deref(), "tableau")?;
        let l = if dual { dual_burge_inverse(&t)? } else { burge_inverse(&t)? };
        return emit(o, &l, || l.to_string());
    }
    let l: TwoLineArray<u32> = parse(o.input.as_deref(), "array")?;
    let steps = if dual { dual_burge_forward_trace(&l, o.q)? } else { burge_forward_trace(&l, o.q)? };
    let t = steps.last().cloned().unwrap_or_default();
    let label = if dual { "S" } else { "Q" };
    emit_traced(o, &t, &steps, || t.to_string(), || text::sequence(label, &steps))
}

fn word(o: &Opts) -> Result<String> {
    let p = params(o)?;
    if o.inverse {
        let pair: WordPair = parse(o.input.as_deref(), "word pair")?;
        let w = updown_to_word(&pair, &p)?;
        return emit(o, &w, || text::word(&w));
    }
    let w: Vec<Letter> = parse(o.input.as_deref(), "word")?;
    let (pair, steps) = word_to_updown_trace(&w, &p)?;
    emit_traced(o, &pair, &steps, || text::word_pair(&pair), || text::word_steps(&steps))
}

fn listing<T: Serialize>(o: &Opts, kind: EnumKind, items: &[T], show: impl Fn(&T) -> String) -> Result<String> {
    #[derive(Serialize)]
    struct Listing<'a, T> {
        kind: String,
        count: usize,
        items: &'a [T],
    }
    let kind = kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    emit(o, &Listing { kind, count: items.len(), items }, || {
        let mut blocks: Vec<String> = items.iter().map(show).collect();
        blocks.push(format!("count: {}", items.len()));
        blocks.join("\n\n")
    })
}

fn check_len(o: &Opts) -> Result<()> {
    if o.k > o.max_cells {
        bail!(ospkit_core::Error::CapExceeded { what: "length", got: o.k, cap: o.max_cells });
    }
    Ok(())
}

fn shown<T: Display>(t: &T) -> String {
    t.to_string()
}

fn enumerate(o: &Opts, kind: EnumKind, shape: &Partition) -> Result<String> {
    let p = params(o)?;
    let letter_kind = match kind {
        EnumKind::Spo => Some(TableauKind::Spo),
        EnumKind::Symplectic => Some(TableauKind::Symplectic),
        EnumKind::Semistandard => Some(TableauKind::Semistandard),
        EnumKind::DualSemistandard => Some(TableauKind::DualSemistandard),
        _ => None,
    };
    if let Some(tk) = letter_kind {
        let items: Vec<Tableau<Letter>> = enumerate_tableaux(shape, tk, &p, caps(o))?.collect();
        return listing(o, kind, &items, shown);
    }
    match kind {
        EnumKind::Ssyt => {
            let items: Vec<Tableau<u32>> = enumerate_ssyt(shape, o.q, caps(o))?.collect();
            listing(o, kind, &items, shown)
        }
        EnumKind::Updown => {
            check_len(o)?;
            let items = enumerate_updown(shape, o.k, &p);
            listing(o, kind, &items, |c| c.chain().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" → "))
        }
        EnumKind::A | EnumKind::AStar => {
            check_len(o)?;
            let items = if kind == EnumKind::A { arrays_a(&p, o.k as u32) } else { arrays_astar(&p, o.k as u32) };
            listing(o, kind, &items, shown)
        }
        EnumKind::Words => {
            check_len(o)?;
            let items = all_words(&p, o.k);
            listing(o, kind, &items, |w| text::word(w))
        }
        _ => unreachable!("letter tableau kinds handled above"),
    }
}

fn character(o: &Opts, shape: &Partition, kind: CharKind, method: Method) -> Result<String> {
    let p = params(o)?;
    let poly: LaurentPolynomial = match kind {
        CharKind::Spo => {
            let method = match method {
                Method::Direct => CharacterMethod::Direct,
                Method::MuSum => CharacterMethod::MuSum,
            };
            spo_character(shape, &p, method, caps(o))?
        }
        CharKind::Symplectic => symplectic_schur(shape, o.m, caps(o))?,
        CharKind::Schur => schur(shape, Vars::Y(o.q), caps(o))?,
    };
    emit(o, &poly, || poly.to_string())
}

fn verify(o: &Opts, identity: Identity) -> Result<Outcome> {
    let p = params(o)?;
    let start = Instant::now();
    let mut report = match identity {
        Identity::Cauchy => verify_cauchy(&p, o.k, Exec::Parallel),
        Identity::DualCauchy => verify_dual_cauchy(&p, o.k, Exec::Parallel),
        Identity::Power => verify_power_identity(&p, o.k, Exec::Parallel),
        Identity::Matrix => verify_matrix_count(&p, o.k, Exec::Parallel),
    };
    if o.timing {
        report.wall_time = Some(start.elapsed().as_secs_f64());
    }
    let body = emit(o, &report, || text::report(&report))?;
    Ok(Outcome { body, ok: report.matched() })
}

/// Tries each supported document type in turn.
fn render(o: &Opts) -> Result<String> {
    let value: Value = parse(o.input.as_deref(), "document")?;
    render_value(value)
}

fn render_value(value: Value) -> Result<String> {
    fn try_as<T: for<'de> Deserialize<'de>>(v: &Value) -> Option<T> {
        serde_json::from_value(v.clone()).ok()
    }
    if let Some(inner) = value.get("result") {
        return render_value(inner.clone());
    }
    let v = &value;
    let out = if let Some(t) = try_as::<SpoTriple>(v) {
        text::triple(&t)
    } else if let Some(t) = try_as::<DualSpoTriple>(v) {
        text::dual_triple(&t)
    } else if let Some(p) = try_as::<WordPair>(v) {
        text::word_pair(&p)
    } else if let Some(t) = try_as::<Tableau<Letter>>(v) {
        t.to_string()
    } else if let Some(t) = try_as::<Tableau<u32>>(v) {
        t.to_string()
    } else if let Some(a) = try_as::<TwoLineArray<Letter>>(v) {
        a.to_string()
    } else if let Some(a) = try_as::<TwoLineArray<u32>>(v) {
        a.to_string()
    } else if let Some(p) = try_as::<LaurentPolynomial>(v) {
        p.to_string()
    } else if let Some(w) = try_as::<Vec<Letter>>(v) {
        text::word(&w)
    } else {
        bail!("unrecognised document: expected a tableau, array, triple, word pair, word or polynomial");
    };
    Ok(out)
}
