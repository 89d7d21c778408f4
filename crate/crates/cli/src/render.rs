//! Human-readable summaries of the JSON reports.

use std::fmt::Write;

use symdet_core::polar::CodimSample;
use symdet_core::{Colength, ColengthMethod, MixedPolarReport, PolarDegreeReport};

fn field_note(probabilistic: bool) -> &'static str {
    if probabilistic {
        " (probabilistic: prime field)"
    } else {
        ""
    }
}

fn coords(r: &MixedPolarReport) -> String {
    match &r.generic_transform {
        None => "given coordinates".to_string(),
        Some(m) => format!("congruence M = {:?}", m.to_strings()),
    }
}

pub fn mixed(r: &MixedPolarReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "deg Γ_{{{},{}}} = {}{}", r.i, r.j, r.degree, field_note(r.probabilistic));
    let _ = writeln!(s, "  case {:?}, n={}, q={}, {}", r.case, r.n, r.q, coords(r));
    for lv in r.per_level.iter().chain(r.correction.iter()) {
        let sign = if lv.sign > 0 { '+' } else { '-' };
        let _ = writeln!(s, "  {sign} {} = {}", lv.label, lv.colength);
        if let Some(w) = &lv.witness {
            let _ = writeln!(s, "      basis: {}", w.join(", "));
        }
    }
    if !r.disagreements.is_empty() {
        let _ = writeln!(s, "  warning: trials {:?} gave different values", r.disagreements);
    }
    for n in &r.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    let _ = writeln!(s, "  colength evaluations: {}", r.colength_evaluations);
    s
}

pub fn polar(r: &PolarDegreeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polar curve multiplicity ({:?}) = {}{}", r.target, r.degree, field_note(r.probabilistic));
    let _ = writeln!(s, "  n={}, q={}, dim X={}", r.n, r.q, r.dim);
    for t in &r.terms {
        let _ = writeln!(s, "  C({},{}) * deg Γ_{{{},{}}} = {} * {}", r.dim + 2, t.i, t.i, t.j, t.binomial, t.mixed_degree);
    }
    if let Some(sum) = r.pre_halving_sum {
        let _ = writeln!(s, "  sum = {sum}, halved = {}", sum / 2);
    }
    if let Some(h) = &r.hypersurface {
        let _ = writeln!(s, "  2^{} * colength {} (W = {:?})", r.q - 1, h.colength, h.w.to_strings());
    }
    for m in &r.mixed {
        s.push_str(&mixed(m));
    }
    s
}

pub fn colength(label: &str, value: &Colength, method: ColengthMethod, witness: Option<&[String]>) -> String {
    let mut s = format!("colength of {label} = {value} ({method:?})\n");
    if let Some(w) = witness {
        let _ = writeln!(s, "  basis: {}", w.join(", "));
    }
    s
}

pub fn codim(c: &CodimSample) -> String {
    let sampled = c.sampled.map_or("n/a".to_string(), |v| v.to_string());
    format!(
        "rank <= {} locus: expected codim {}, sampled codim {}, origin on locus: {}, generic rank {}: {}\n",
        c.r,
        c.expected,
        sampled,
        c.origin_in_locus,
        c.generic_rank,
        if c.pass { "PASS" } else { "FAIL" }
    )
}
