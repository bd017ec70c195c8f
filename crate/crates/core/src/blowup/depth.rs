//! Interval reasoning about `depth R(I)`, `depth G(I)` and `depth F(I)`.
//!
//! Each rule only ever raises a lower bound or lowers an upper bound, so
//! the fixed point is reached after finitely many passes. `R1` uses the
//! orientation `depth R(I) = depth G(I) + 1`.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    Rees,
    Graded,
    Fiber,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::Rees, Algebra::Graded, Algebra::Fiber];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Rees => "R(I)",
            Algebra::Graded => "G(I)",
            Algebra::Fiber => "F(I)",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStatus {
    Yes,
    No,
    Unknown,
}

impl CmStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CmStatus::Yes => "yes",
            CmStatus::No => "no",
            CmStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
    pub dim: u32,
}

impl Interval {
    pub fn cm(&self) -> CmStatus {
        if self.lo == self.dim {
            CmStatus::Yes
        } else if self.hi < self.dim {
            CmStatus::No
        } else {
            CmStatus::Unknown
        }
    }

    pub fn exact(&self) -> Option<u32> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Inputs gathered by earlier diagnostics. `None` means not computed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DepthFacts {
    pub d: u32,
    pub origin_primary: bool,
    pub complete: Option<bool>,
    pub contracted: Option<bool>,
    pub mmm: Option<bool>,
    /// `r_J(I)` for the certified minimal reduction.
    pub reduction_number: Option<u32>,
    /// Valabrega–Valla equalities: all hold / some fail.
    pub vv: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiredRule {
    pub rule: &'static str,
    pub citation: &'static str,
    pub effect: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthVerdict {
    pub rees: Interval,
    pub graded: Interval,
    pub fiber: Interval,
    pub chain: Vec<FiredRule>,
    pub facts: DepthFacts,
}

impl DepthVerdict {
    pub fn get(&self, a: Algebra) -> &Interval {
        match a {
            Algebra::Rees => &self.rees,
            Algebra::Graded => &self.graded,
            Algebra::Fiber => &self.fiber,
        }
    }
}

pub const CITE_DIM: &str = "depth is at most the Krull dimension: d+1 for R(I), d for G(I) and F(I)";
pub const CITE_R0: &str = "complete m-primary ideals of a 2-dimensional regular local ring have Cohen-Macaulay R(I), G(I), F(I)";
pub const CITE_R1: &str = "m-primary ideal of a regular local ring: depth R(I) = depth G(I) + 1";
pub const CITE_R2: &str = "2-dimensional regular local ring: R(I) Cohen-Macaulay implies G(I) and F(I) Cohen-Macaulay";
pub const CITE_R3: &str = "contracted ideal, dimension 2: F(I) CM iff G(I) CM iff r(I) <= 1";
pub const CITE_R4: &str = "minimal mixed multiplicity: F(I) Cohen-Macaulay implies G(I) and R(I) Cohen-Macaulay";
pub const CITE_R5: &str = "minimal mixed multiplicity: depth G(I) >= d-1 implies depth F(I) >= d-1";
pub const CITE_R6: &str = "minimal mixed multiplicity, dimension 2: depth F(I) >= 1 implies depth G(I) >= 1";
pub const CITE_R7: &str = "contracted ideal, dimension 2: depth R(I) - 1 = depth G(I) = depth F(I)";
pub const CITE_VV: &str = "Valabrega-Valla: J ∩ I^n = J I^(n-1) for all n iff G(I) is Cohen-Macaulay";
pub const CITE_FR: &str = "minimal mixed multiplicity: F(I) Cohen-Macaulay iff r(I) <= 1; r_J(I) = r(I) once depth G(I) >= d-1";

struct Engine {
    iv: [Interval; 3],
    chain: Vec<FiredRule>,
    changed: bool,
}

impl Engine {
    fn idx(a: Algebra) -> usize {
        a as usize
    }

    fn get(&self, a: Algebra) -> Interval {
        self.iv[Self::idx(a)]
    }

    fn raise(&mut self, a: Algebra, lo: u32, rule: &'static str, citation: &'static str) -> Result<()> {
        let iv = &mut self.iv[Self::idx(a)];
        if lo > iv.lo {
            iv.lo = lo;
            self.changed = true;
            self.chain.push(FiredRule { rule, citation, effect: format!("depth {} >= {lo}", a.name()) });
        }
        self.check(a)
    }

    fn lower(&mut self, a: Algebra, hi: u32, rule: &'static str, citation: &'static str) -> Result<()> {
        let iv = &mut self.iv[Self::idx(a)];
        if hi < iv.hi {
            iv.hi = hi;
            self.changed = true;
            self.chain.push(FiredRule { rule, citation, effect: format!("depth {} <= {hi}", a.name()) });
        }
        self.check(a)
    }

    fn set_cm(&mut self, a: Algebra, rule: &'static str, citation: &'static str) -> Result<()> {
        let dim = self.get(a).dim;
        self.raise(a, dim, rule, citation)
    }

    fn set_not_cm(&mut self, a: Algebra, rule: &'static str, citation: &'static str) -> Result<()> {
        let dim = self.get(a).dim;
        self.lower(a, dim - 1, rule, citation)
    }

    fn check(&self, a: Algebra) -> Result<()> {
        let iv = self.get(a);
        if iv.lo > iv.hi {
            let dump: Vec<String> = self.chain.iter().map(|r| format!("{}: {}", r.rule, r.effect)).collect();
            return Err(Error::InconsistentFacts(format!(
                "depth {} interval {iv} is empty after [{}]",
                a.name(),
                dump.join("; ")
            )));
        }
        Ok(())
    }

    fn is_cm(&self, a: Algebra) -> bool {
        self.get(a).cm() == CmStatus::Yes
    }

    fn is_not_cm(&self, a: Algebra) -> bool {
        self.get(a).cm() == CmStatus::No
    }
}

pub fn depth_infer(facts: &DepthFacts) -> Result<DepthVerdict> {
    use Algebra::*;
    if !facts.origin_primary {
        return Err(Error::NotOriginPrimary);
    }
    let d = facts.d;
    let mut e = Engine {
        iv: [
            Interval { lo: 0, hi: d + 1, dim: d + 1 },
            Interval { lo: 0, hi: d, dim: d },
            Interval { lo: 0, hi: d, dim: d },
        ],
        chain: vec![FiredRule { rule: "DIM", citation: CITE_DIM, effect: "initial intervals".into() }],
        changed: true,
    };
    let two = d == 2;
    let complete = facts.complete == Some(true);
    let contracted = facts.contracted == Some(true);
    let mmm = facts.mmm == Some(true);
    let r = facts.reduction_number;

    // feeds that do not depend on the current intervals
    match facts.vv {
        Some(true) => e.set_cm(Graded, "VV", CITE_VV)?,
        Some(false) => e.set_not_cm(Graded, "VV", CITE_VV)?,
        None => {}
    }
    if mmm && r.is_some_and(|r| r <= 1) {
        e.set_cm(Fiber, "FR", CITE_FR)?;
    }
    if two && complete {
        for a in Algebra::ALL {
            e.set_cm(a, "R0", CITE_R0)?;
        }
    }

    while e.changed {
        e.changed = false;
        // R1
        let (rr, g) = (e.get(Rees), e.get(Graded));
        e.raise(Rees, g.lo + 1, "R1", CITE_R1)?;
        e.lower(Rees, g.hi + 1, "R1", CITE_R1)?;
        e.raise(Graded, rr.lo.saturating_sub(1), "R1", CITE_R1)?;
        if rr.hi == 0 {
            e.lower(Graded, 0, "R1", CITE_R1)?;
            e.raise(Rees, 1, "R1", CITE_R1)?;
        } else {
            e.lower(Graded, rr.hi - 1, "R1", CITE_R1)?;
        }
        // R2
        if two && e.is_cm(Rees) {
            e.set_cm(Graded, "R2", CITE_R2)?;
            e.set_cm(Fiber, "R2", CITE_R2)?;
        }
        // R3
        if two && contracted {
            if let Some(r) = r {
                if r <= 1 {
                    e.set_cm(Graded, "R3", CITE_R3)?;
                    e.set_cm(Fiber, "R3", CITE_R3)?;
                } else if e.get(Graded).lo >= d - 1 {
                    e.set_not_cm(Graded, "R3", CITE_R3)?;
                    e.set_not_cm(Fiber, "R3", CITE_R3)?;
                }
            }
            for (p, q) in [(Fiber, Graded), (Graded, Fiber)] {
                if e.is_cm(p) {
                    e.set_cm(q, "R3", CITE_R3)?;
                }
                if e.is_not_cm(p) {
                    e.set_not_cm(q, "R3", CITE_R3)?;
                }
            }
        }
        if mmm {
            // R4 and its contrapositive
            if e.is_cm(Fiber) {
                e.set_cm(Graded, "R4", CITE_R4)?;
                e.set_cm(Rees, "R4", CITE_R4)?;
            }
            if e.is_not_cm(Graded) || e.is_not_cm(Rees) {
                e.set_not_cm(Fiber, "R4", CITE_R4)?;
            }
            // r_J(I) >= 2 only bounds r(I) once r_J(I) is independent of J
            if r.is_some_and(|r| r >= 2) && e.get(Graded).lo >= d - 1 {
                e.set_not_cm(Fiber, "FR", CITE_FR)?;
            }
            // R5
            if e.get(Graded).lo >= d - 1 {
                e.raise(Fiber, d - 1, "R5", CITE_R5)?;
            }
            // R6 and its contrapositive
            if two {
                if e.get(Fiber).lo >= 1 {
                    e.raise(Graded, 1, "R6", CITE_R6)?;
                }
                if e.get(Graded).hi == 0 {
                    e.lower(Fiber, 0, "R6", CITE_R6)?;
                }
            }
        }
        // R7
        if two && contracted {
            let (g, f) = (e.get(Graded), e.get(Fiber));
            e.raise(Graded, f.lo, "R7", CITE_R7)?;
            e.lower(Graded, f.hi, "R7", CITE_R7)?;
            e.raise(Fiber, g.lo, "R7", CITE_R7)?;
            e.lower(Fiber, g.hi, "R7", CITE_R7)?;
        }
    }
    Ok(DepthVerdict {
        rees: e.get(Rees),
        graded: e.get(Graded),
        fiber: e.get(Fiber),
        chain: e.chain,
        facts: facts.clone(),
    })
}
