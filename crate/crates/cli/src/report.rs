//! The analysis report: a serde document plus a deterministic text view.
//!
//! Invariants are decimal strings tagged with the method that produced
//! them. Small counters (exponents, bounds) are plain integers.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tagged {
    pub value: String,
    pub method: String,
}

impl Tagged {
    pub fn new(value: impl ToString, method: impl ToString) -> Self {
        Tagged { value: value.to_string(), method: method.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSection {
    pub variables: Vec<String>,
    pub field: String,
    pub order: String,
    pub mode: String,
    pub ideal_i: Vec<String>,
    pub ideal_j: Option<Vec<String>>,
    pub nmax_reduction: u32,
    pub nmax_vv: u32,
    pub nmax_joint: u32,
    pub nmax_colon: u32,
    pub nmax_fiber: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedSection {
    /// `e_0(m|I), ..., e_d(m|I)`.
    pub values: Vec<Tagged>,
    /// `[r0, s0, side]` of the fitted table.
    pub window: [u32; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractedSection {
    pub value: bool,
    pub mu: String,
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSection {
    pub generators: Vec<String>,
    /// `given` or `search`.
    pub source: String,
    pub reduction_number: Tagged,
    pub n_max: u32,
    pub minimal: bool,
    /// `e(J)` when `J` is a parameter ideal.
    pub multiplicity: Option<Tagged>,
    pub matches_fit: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VvStepOut {
    pub n: u32,
    pub holds: bool,
    pub from_certificate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VvSection {
    pub n_max: u32,
    pub steps: Vec<VvStepOut>,
    pub first_failure: Option<u32>,
    pub witnesses: Vec<String>,
    pub g_cohen_macaulay: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointSection {
    pub x: String,
    pub a: Vec<String>,
    pub n: u32,
    pub multiplicity: Tagged,
    pub matches_fit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterateOut {
    pub n: u32,
    pub plain: bool,
    pub powered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MmmSection {
    pub is_mmm: bool,
    pub mu: String,
    pub e_top: Tagged,
    pub identity: Option<bool>,
    pub iterates: Vec<IterateOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Out {
    pub n: u32,
    pub vanishes: bool,
    pub via_identity: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSection {
    pub n_max: u32,
    pub numerator: Vec<Tagged>,
    pub mu_sequence: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonOut {
    pub n: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonSection {
    pub element: String,
    pub steps: Vec<ColonOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalOut {
    pub lo: u32,
    pub hi: u32,
    pub dim: u32,
    pub cohen_macaulay: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOut {
    pub rule: String,
    pub citation: String,
    pub effect: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactsOut {
    pub complete: Option<bool>,
    pub contracted: Option<bool>,
    pub mmm: Option<bool>,
    pub reduction_number: Option<u32>,
    pub vv: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthSection {
    pub rees: IntervalOut,
    pub graded: IntervalOut,
    pub fiber: IntervalOut,
    pub facts: FactsOut,
    pub chain: Vec<RuleOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTime {
    pub stage: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub engine: String,
    pub input: InputSection,
    pub dimension: u32,
    pub mu: Tagged,
    pub order: Tagged,
    pub length: Tagged,
    pub mixed_multiplicities: MixedSection,
    /// Known only on the monomial path.
    pub complete: Option<bool>,
    /// Dimension 2 only.
    pub contracted: Option<ContractedSection>,
    pub reduction: ReductionSection,
    pub vv: VvSection,
    pub joint_reduction: Option<JointSection>,
    pub mmm: MmmSection,
    pub h1: Vec<H1Out>,
    pub fiber: FiberSection,
    pub colon_powers: Option<ColonSection>,
    pub depth: DepthSection,
    pub notes: Vec<String>,
    /// Present only when timing was requested; breaks byte-identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<StageTime>>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_bool(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

fn tag(t: &Tagged) -> String {
    format!("{}  [{}]", t.value, t.method)
}

fn interval(name: &str, iv: &IntervalOut) -> String {
    let exact = if iv.lo == iv.hi { format!(" = {}", iv.lo) } else { String::new() };
    format!("depth {name} in [{}, {}]{exact} (dim {}), Cohen-Macaulay: {}", iv.lo, iv.hi, iv.dim, iv.cohen_macaulay)
}

/// Human-readable report. Depends only on the report fields, so a
/// report read back from JSON renders to the same text.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let w = &mut s;
    let inp = &r.input;
    let _ = writeln!(w, "{}", r.engine);
    let _ = writeln!(w, "ring: k[{}] over {}, order {}, mode {}", inp.variables.join(", "), inp.field, inp.order, inp.mode);
    let _ = writeln!(w, "I = ({})", inp.ideal_i.join(", "));
    if let Some(j) = &inp.ideal_j {
        let _ = writeln!(w, "J = ({})", j.join(", "));
    }
    let _ = writeln!(
        w,
        "bounds: reduction {}, vv {}, joint {}, colon {}, fiber {}",
        inp.nmax_reduction, inp.nmax_vv, inp.nmax_joint, inp.nmax_colon, inp.nmax_fiber
    );
    let _ = writeln!(w);
    let _ = writeln!(w, "d = {}", r.dimension);
    let _ = writeln!(w, "mu(I) = {}", tag(&r.mu));
    let _ = writeln!(w, "o(I) = {}", tag(&r.order));
    let _ = writeln!(w, "length R/I = {}", tag(&r.length));
    let win = r.mixed_multiplicities.window;
    let _ = writeln!(w, "mixed multiplicities (window r0={} s0={} side={}):", win[0], win[1], win[2]);
    for (j, e) in r.mixed_multiplicities.values.iter().enumerate() {
        let _ = writeln!(w, "  e_{j}(m|I) = {}", tag(e));
    }
    let _ = writeln!(w, "complete: {}", opt_bool(r.complete));
    match &r.contracted {
        Some(c) => {
            let _ = writeln!(w, "contracted: {} (mu = {}, o = {})", yes_no(c.value), c.mu, c.order);
        }
        None => {
            let _ = writeln!(w, "contracted: n/a");
        }
    }
    let red = &r.reduction;
    let _ = writeln!(w);
    let _ = writeln!(w, "reduction J = ({}) [{}]", red.generators.join(", "), red.source);
    let _ = writeln!(
        w,
        "  r_J(I) = {}, minimal: {}, bound {}",
        tag(&red.reduction_number),
        yes_no(red.minimal),
        red.n_max
    );
    if let Some(e) = &red.multiplicity {
        let _ = writeln!(w, "  e(J) = {}, equals e_d(m|I): {}", tag(e), opt_bool(red.matches_fit));
    }
    let vv = &r.vv;
    let _ = writeln!(w, "Valabrega-Valla up to n = {}:", vv.n_max);
    for st in &vv.steps {
        let how = if st.from_certificate { " (from reduction)" } else { "" };
        let _ = writeln!(w, "  n = {}: J ∩ I^n = J I^(n-1) {}{how}", st.n, yes_no(st.holds));
    }
    if let Some(n) = vv.first_failure {
        let _ = writeln!(w, "  first failure at n = {n}, witnesses: {}", vv.witnesses.join(", "));
    }
    let _ = writeln!(w, "  G(I) Cohen-Macaulay by Valabrega-Valla: {}", yes_no(vv.g_cohen_macaulay));
    let _ = writeln!(w);
    match &r.joint_reduction {
        Some(jr) => {
            let _ = writeln!(w, "joint reduction x = {}, a = ({}), identity at n = {}", jr.x, jr.a.join(", "), jr.n);
            let _ = writeln!(w, "  e((x, a)) = {}, equals e_(d-1)(m|I): {}", tag(&jr.multiplicity), yes_no(jr.matches_fit));
        }
        None => {
            let _ = writeln!(w, "joint reduction: n/a");
        }
    }
    let mm = &r.mmm;
    let _ = writeln!(w, "minimal mixed multiplicity: {} (mu = {}, e_(d-1) = {})", yes_no(mm.is_mmm), mm.mu, tag(&mm.e_top));
    if let Some(id) = mm.identity {
        let _ = writeln!(w, "  m I = x I + (a) m: {}", yes_no(id));
    }
    for it in &mm.iterates {
        let _ = writeln!(w, "  n = {}: m I^n = x I^n + (a) m I^(n-1) {}, m I^n = x I^n + (a^n) m {}", it.n, yes_no(it.plain), yes_no(it.powered));
    }
    for h in &r.h1 {
        let how = if h.via_identity { "denominator is m I^n" } else { "intersection" };
        let wit = h.witness.as_ref().map_or(String::new(), |x| format!(", witness {x}"));
        let _ = writeln!(w, "H1 n = {}: vanishes {} ({how}{wit})", h.n, yes_no(h.vanishes));
    }
    let f = &r.fiber;
    let nums: Vec<&str> = f.numerator.iter().map(|t| t.value.as_str()).collect();
    let method = f.numerator.first().map_or("", |t| t.method.as_str());
    let _ = writeln!(w, "fiber cone numerator h(t) = ({})  [{method}], over (1-t)^{}", nums.join(", "), r.dimension);
    let _ = writeln!(w, "  mu(I^n), n = 0..{}: {}", f.n_max, f.mu_sequence.join(" "));
    if let Some(c) = &r.colon_powers {
        let held: Vec<String> = c.steps.iter().map(|s| format!("{}:{}", s.n, yes_no(s.holds))).collect();
        let _ = writeln!(w, "(I^n : {}) = I^(n-1): {}", c.element, held.join(" "));
    }
    let d = &r.depth;
    let _ = writeln!(w);
    let _ = writeln!(w, "{}", interval("R(I)", &d.rees));
    let _ = writeln!(w, "{}", interval("G(I)", &d.graded));
    let _ = writeln!(w, "{}", interval("F(I)", &d.fiber));
    let _ = writeln!(w, "rule chain:");
    for rule in &d.chain {
        let _ = writeln!(w, "  {}: {}  ({})", rule.rule, rule.effect, rule.citation);
    }
    for n in &r.notes {
        let _ = writeln!(w, "note: {n}");
    }
    if let Some(t) = &r.timing {
        for st in t {
            let _ = writeln!(w, "time {}: {} ms", st.stage, st.millis);
        }
    }
    s
}

pub fn to_json(r: &AnalysisReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn from_json(text: &str) -> serde_json::Result<AnalysisReport> {
    serde_json::from_str(text)
}
