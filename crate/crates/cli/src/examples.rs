//! The two example families, checked against their closed forms.

use blowup_core::families::{ex1_generators, ex1_reduction_generators, ex2_generators, ex2_reduction_generators};
use blowup_core::monomial::MonomialIdeal;
use blowup_core::poly::{ExponentVector, FieldKind};
use serde::{Deserialize, Serialize};

use crate::analyze::analyze;
use crate::report::AnalysisReport;
use crate::specfile::{IdealSpecFile, Mode, Options};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Ex1,
    Ex2,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "ex1" => Some(Family::Ex1),
            "ex2" => Some(Family::Ex2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Ex1 => "ex1",
            Family::Ex2 => "ex2",
        }
    }

    pub fn parameter(self) -> &'static str {
        match self {
            Family::Ex1 => "s",
            Family::Ex2 => "n",
        }
    }

    pub fn min_parameter(self) -> u32 {
        match self {
            Family::Ex1 => 2,
            Family::Ex2 => 4,
        }
    }

    pub fn spec(self, k: u32, mode: Mode) -> IdealSpecFile {
        let (vars, i, j) = match self {
            Family::Ex1 => (vec!["X", "Y", "Z"], ex1_generators(k), ex1_reduction_generators(k)),
            Family::Ex2 => (vec!["X", "Y"], ex2_generators(k), ex2_reduction_generators(k)),
        };
        IdealSpecFile {
            vars: vars.into_iter().map(String::from).collect(),
            field: FieldKind::Rationals,
            i,
            j: Some(j),
            options: Options { mode, ..Options::default() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberResult {
    pub family: String,
    pub parameter: u32,
    pub diffs: Vec<String>,
    pub report: AnalysisReport,
}

impl MemberResult {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

struct Diff(Vec<String>);

impl Diff {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, got: T) {
        if expected != got {
            self.0.push(format!("{what}: expected {expected:?}, got {got:?}"));
        }
    }
}

fn nums(v: &[crate::report::Tagged]) -> Vec<String> {
    v.iter().map(|t| t.value.clone()).collect()
}

fn strs(v: &[u32]) -> Vec<String> {
    v.iter().map(u32::to_string).collect()
}

/// `h(t)` for the second family: `1 + 2(t + ... + t^r)` for `n = 2r+1`,
/// `1 + 2(t + ... + t^(r-1)) + t^r` for `n = 2r`.
pub fn ex2_numerator(n: u32) -> Vec<u32> {
    let r = n / 2;
    let mut h = vec![1];
    if n % 2 == 1 {
        h.extend(std::iter::repeat(2).take(r as usize));
    } else {
        h.extend(std::iter::repeat(2).take(r as usize - 1));
        h.push(1);
    }
    h
}

/// `X^(n-1) Y^(n(r-1)+1)` lies in `I^r` but not in `J I^(r-1)`.
fn ex2_membership(n: u32) -> Result<(bool, bool), CliError> {
    let spec = Family::Ex2.spec(n, Mode::Exact);
    let ring = spec.ring()?;
    let (i, j) = spec.ideals(&ring)?;
    let i = MonomialIdeal::from_ideal(&i).expect("monomial family");
    let j = MonomialIdeal::from_ideal(&j.expect("family reduction")).expect("monomial family");
    let r = n / 2;
    let m = ExponentVector::from_slice(&[n - 1, n * (r - 1) + 1]);
    let in_power = i.power(r)?.contains_monomial(&m);
    let in_product = j.product(&i.power(r - 1)?)?.contains_monomial(&m);
    Ok((in_power, in_product))
}

fn check(family: Family, k: u32, rep: &AnalysisReport) -> Result<Vec<String>, CliError> {
    let mut d = Diff(Vec::new());
    let e = nums(&rep.mixed_multiplicities.values);
    d.eq("reduction matches fit", Some(true), rep.reduction.matches_fit);
    d.eq("joint reduction matches fit", Some(true), rep.joint_reduction.as_ref().map(|j| j.matches_fit));
    match family {
        Family::Ex1 => {
            d.eq("mu", "11", rep.mu.value.as_str());
            d.eq("e_2(m|I)", Some("9"), e.get(2).map(String::as_str));
            d.eq("mmm", true, rep.mmm.is_mmm);
            d.eq("minimal reduction", true, rep.reduction.minimal);
            d.eq("r_J(I)", "2", rep.reduction.reduction_number.value.as_str());
            d.eq("Valabrega-Valla", true, rep.vv.g_cohen_macaulay);
            d.eq("complete", Some(true), rep.complete);
            d.eq("fiber numerator", strs(&[1, 8]), nums(&rep.fiber.numerator));
            d.eq("G(I) CM", "yes", rep.depth.graded.cohen_macaulay.as_str());
            d.eq("R(I) CM", "yes", rep.depth.rees.cohen_macaulay.as_str());
            d.eq("F(I) CM", "no", rep.depth.fiber.cohen_macaulay.as_str());
            d.eq("depth F(I)", (2, 2), (rep.depth.fiber.lo, rep.depth.fiber.hi));
        }
        Family::Ex2 => {
            let r = k / 2;
            d.eq("r_J(I)", r.to_string(), rep.reduction.reduction_number.value.clone());
            d.eq("fiber numerator", strs(&ex2_numerator(k)), nums(&rep.fiber.numerator));
            d.eq("first VV failure", Some(2), rep.vv.first_failure);
            let witness = format!("X^3*Y^{}", 2 * k - 3);
            if !rep.vv.witnesses.contains(&witness) {
                d.0.push(format!("VV witness: expected {witness} among {:?}", rep.vv.witnesses));
            }
            d.eq("contracted", Some(false), rep.contracted.as_ref().map(|c| c.value));
            d.eq("G(I) CM", "no", rep.depth.graded.cohen_macaulay.as_str());
            let (g, rr) = (&rep.depth.graded, &rep.depth.rees);
            d.eq("depth R = depth G + 1", (g.lo + 1, g.hi + 1), (rr.lo, rr.hi));
            if !rep.depth.chain.iter().any(|c| c.rule == "R1") {
                d.0.push("rule R1 did not fire".into());
            }
            let (in_power, in_product) = ex2_membership(k)?;
            d.eq("X^(n-1) Y^(n(r-1)+1) in I^r", true, in_power);
            d.eq("X^(n-1) Y^(n(r-1)+1) in J I^(r-1)", false, in_product);
        }
    }
    Ok(d.0)
}

pub fn run_member(family: Family, k: u32, mode: Mode) -> Result<MemberResult, CliError> {
    if k < family.min_parameter() {
        return Err(CliError::Core(blowup_core::Error::Precondition(format!(
            "{} needs {} >= {}",
            family.name(),
            family.parameter(),
            family.min_parameter()
        ))));
    }
    let report = analyze(&family.spec(k, mode), false)?;
    let diffs = check(family, k, &report)?;
    Ok(MemberResult { family: family.name().into(), parameter: k, diffs, report })
}

/// Members `from..=to`, at most `jobs` at a time, in parameter order.
pub fn cmd_paper_examples(family: Family, from: u32, to: u32, jobs: usize, mode: Mode) -> Result<Vec<MemberResult>, CliError> {
    use rayon::prelude::*;
    if from < family.min_parameter() {
        return run_member(family, from, mode).map(|m| vec![m]);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| (from..=to).into_par_iter().map(|k| run_member(family, k, mode)).collect())
}

pub fn render_table(family: Family, results: &[MemberResult]) -> String {
    let mut out = format!("family {}\n", family.name());
    for m in results {
        let status = if m.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("  {}={}  {status}\n", family.parameter(), m.parameter));
        for diff in &m.diffs {
            out.push_str(&format!("      {diff}\n"));
        }
    }
    let passed = results.iter().filter(|m| m.passed()).count();
    out.push_str(&format!("{passed}/{} pass\n", results.len()));
    out
}
