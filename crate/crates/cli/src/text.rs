//! Display-only text rendering. Nothing here is parsed back.

use std::fmt::{Display, Write};

use ospkit_core::characters::IdentityReport;
use ospkit_core::correspond::{DualSpoTriple, ForwardStep, InverseStep, SpoTriple, WordPair, WordStep};
use ospkit_core::insertion::{Effect, TraceEvent};

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

pub fn block(label: &str, body: &impl Display) -> String {
    format!("{label}:\n{}", indent(&body.to_string()))
}

pub fn effect(e: &Effect) -> String {
    match e {
        Effect::Added(c) => format!("added {c}"),
        Effect::Cancelled(c) => format!("cancelled {c}"),
    }
}

pub fn event<E: Display>(e: &TraceEvent<E>) -> String {
    match e {
        TraceEvent::Bump { cell, bumped, entering } => format!("bump {cell}: {entering} replaces {bumped}"),
        TraceEvent::Place { cell, entry } => format!("place {entry} at {cell}"),
        TraceEvent::Cancel { cell, removed, discarded } => format!("cancel {cell}: remove {removed}, drop {discarded}"),
        TraceEvent::Slide { from, to, entry } => format!("slide {entry} from {from} to {to}"),
        TraceEvent::Remove { cell } => format!("remove box {cell}"),
    }
}

pub fn events<E: Display>(evs: &[TraceEvent<E>]) -> String {
    evs.iter().map(event).collect::<Vec<_>>().join("\n")
}

pub fn triple(t: &SpoTriple) -> String {
    [block("P̃", &t.ptilde), block("P", &t.p), block("L", &t.l)].join("\n")
}

pub fn dual_triple(t: &DualSpoTriple) -> String {
    [block("P̃", &t.ptilde), block("Pᵗ", &t.pt), block("L", &t.l)].join("\n")
}

pub fn word_pair(p: &WordPair) -> String {
    let chain: Vec<String> = p.chain.chain().iter().map(|s| s.to_string()).collect();
    [block("T", &p.t), format!("chain: {}", chain.join(" → "))].join("\n")
}

pub fn word(w: &[ospkit_core::Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn forward_steps(steps: &[ForwardStep]) -> String {
    let mut out = String::new();
    for (k, s) in steps.iter().enumerate() {
        let _ = writeln!(out, "step {}: column ({}, {}), {}", k + 1, s.column.0, s.column.1, effect(&s.effect));
        let _ = writeln!(out, "{}", indent(&[block("P̃", &s.ptilde), block("P", &s.p), block("L", &s.l)].join("\n")));
    }
    out.trim_end().to_string()
}

pub fn inverse_steps(steps: &[InverseStep]) -> String {
    let mut out = String::new();
    for (k, s) in steps.iter().enumerate() {
        let _ = writeln!(out, "step {}: recovered ({}, {}), {}", k + 1, s.column.0, s.column.1, effect(&s.effect));
        let _ = writeln!(out, "{}", indent(&[block("P̃", &s.ptilde), block("P", &s.p), block("L", &s.l)].join("\n")));
    }
    out.trim_end().to_string()
}

pub fn word_steps(steps: &[WordStep]) -> String {
    let mut out = String::new();
    for (k, s) in steps.iter().enumerate() {
        let _ = writeln!(out, "step {}: insert {}, {}", k + 1, s.letter, effect(&s.effect));
        let _ = writeln!(out, "{}", indent(&s.tableau.to_string()));
    }
    out.trim_end().to_string()
}

pub fn sequence<T: Display>(label: &str, items: &[T]) -> String {
    items.iter().enumerate().map(|(k, t)| block(&format!("{label}{}", k + 1), t)).collect::<Vec<_>>().join("\n")
}

pub fn report(r: &IdentityReport) -> String {
    let p = &r.params;
    let mut out = format!(
        "{} m={} n={} q={} k={}: {}\n",
        r.identity,
        p.m,
        p.n,
        p.q,
        r.k,
        if r.matched() { "match" } else { "MISMATCH" }
    );
    for d in &r.degrees {
        let totals: Vec<String> = d.totals.iter().map(|s| format!("{} = {}", s.side, s.value)).collect();
        let _ = writeln!(
            out,
            "  degree {}: {} ({})",
            d.degree,
            if d.matched { "match" } else { "mismatch" },
            totals.join(", ")
        );
        if let Some(m) = &d.mismatch {
            let coeffs: Vec<String> = m.coefficients.iter().map(|s| format!("{} {}", s.side, s.value)).collect();
            let _ = writeln!(out, "    first mismatch at {}: {}", m.monomial, coeffs.join(", "));
        }
    }
    for (name, count) in &r.counts {
        let _ = writeln!(out, "  {name}: {count}");
    }
    for note in &r.notes {
        let _ = writeln!(out, "  note: {note}");
    }
    if let Some(t) = r.wall_time {
        let _ = writeln!(out, "  wall time: {t:.3} s");
    }
    out.trim_end().to_string()
}
