use std::path::Path;
use std::time::{Duration, Instant};

use blowup_core::blowup::{
    colon_power_check, contracted_check_2d, default_vv_bound, depth_infer, find_minimal_reduction,
    h1_vanishing_check, joint_reduction_search, mmm_check, reduction_number, vv_check, Algebra, DepthFacts,
    DepthVerdict, DEFAULT_POOL,
};
use blowup_core::groebner::{set_groebner_timeout, Ideal};
use blowup_core::monomial::MonomialIdeal;
use blowup_core::multiplicity::{
    bhattacharya_fit, default_fiber_bound, fiber_hilbert, length, mu, order, param_multiplicity, Method, Working,
};
use blowup_core::poly::Polynomial;
use blowup_core::Error;

use crate::report::*;
use crate::specfile::{parse_spec, IdealSpecFile, Overrides};
use crate::CliError;

/// Dense pooled draws tried after the sparse candidates.
pub const SEARCH_ATTEMPTS: usize = 50;
/// Iterates of the mmm identity recorded in the report.
pub const MMM_ITERATES: u32 = 2;

pub const MODULAR_NOTE: &str = "modular - confirm over QQ";

struct Clock {
    on: bool,
    last: Instant,
    stages: Vec<StageTime>,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock { on, last: Instant::now(), stages: Vec::new() }
    }

    fn lap(&mut self, stage: &str) {
        if self.on {
            let now = Instant::now();
            let millis = now.duration_since(self.last).as_millis() as u64;
            self.stages.push(StageTime { stage: stage.into(), millis });
            self.last = now;
        }
    }
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn interval_out(v: &DepthVerdict, a: Algebra) -> IntervalOut {
    let iv = v.get(a);
    IntervalOut { lo: iv.lo, hi: iv.hi, dim: iv.dim, cohen_macaulay: iv.cm().as_str().into() }
}

fn pair_method(a: &Ideal, b: &Ideal) -> Method {
    match (Working::new(a), Working::new(b)) {
        (Working::Monomial(_), Working::Monomial(_)) => Method::MonomialPath,
        _ => Method::GroebnerPath,
    }
}

pub fn analyze(spec: &IdealSpecFile, timing: bool) -> Result<AnalysisReport, CliError> {
    let opts = &spec.options;
    let ord = opts.monomial_order()?;
    let ring = spec.ring()?;
    let (i, given_j) = spec.ideals(&ring)?;
    set_groebner_timeout(opts.timeout.map(Duration::from_secs_f64));
    let mut clock = Clock::new(timing);
    let mut notes = Vec::new();
    let d = ring.dim() as u32;

    if !i.is_origin_primary()? {
        return Err(Error::NotOriginPrimary.into());
    }
    let len = length(&i)?;
    if len.method == Method::GroebnerPath {
        // lengths do not depend on the order; recount under the requested one
        let other = i.standard_monomials_for(&ord)?.len();
        assert_eq!(len.value, other.into(), "colength depends on the monomial order");
    }
    let mu_i = mu(&i)?;
    let ord_i = order(&i)?;
    let ord_method = Working::new(&i).method();
    let mono = MonomialIdeal::from_ideal(&i);
    let complete = mono.as_ref().map(MonomialIdeal::is_complete);
    if complete.is_none() {
        notes.push("completeness is decided only for monomial ideals".into());
    }
    let contracted = if d == 2 { Some(contracted_check_2d(&i)?) } else { None };
    clock.lap("invariants");

    // reduction and the fit, in whichever order the inputs allow
    let (cert, form, source) = match &given_j {
        Some(j) => {
            let cert = reduction_number(&i, j, opts.nmax_reduction)?;
            clock.lap("reduction");
            let form = bhattacharya_fit(&i, cert.r)?;
            clock.lap("fit");
            (cert, form, "given")
        }
        None => {
            let form = bhattacharya_fit(&i, d)?;
            clock.lap("fit");
            let cert = find_minimal_reduction(&i, &DEFAULT_POOL, SEARCH_ATTEMPTS, opts.nmax_reduction, Some(&form.mixed(d)))?
                .ok_or(Error::NotCertified(opts.nmax_reduction as usize))?;
            clock.lap("reduction");
            (cert, form, "search")
        }
    };
    let e_j = if cert.minimal { Some(param_multiplicity(&cert.j)?) } else { None };
    if !cert.minimal {
        notes.push("J has more than d generators; e(J) is not compared".into());
    }
    let red_method = pair_method(&i, &cert.j);

    let vv_bound = opts.nmax_vv.unwrap_or_else(|| default_vv_bound(cert.r));
    let vv = vv_check(&cert, vv_bound)?;
    clock.lap("vv");

    let fiber_bound = opts.nmax_fiber.unwrap_or_else(|| default_fiber_bound(d));
    let fiber = fiber_hilbert(&i, fiber_bound)?;
    clock.lap("fiber");

    let e_top = form.mixed(d.saturating_sub(1));
    let joint = if d >= 2 {
        let jr = joint_reduction_search(&i, &DEFAULT_POOL, SEARCH_ATTEMPTS, opts.nmax_joint, Some(&e_top))?
            .ok_or(Error::NotCertified(opts.nmax_joint as usize))?;
        let e = param_multiplicity(&jr.ideal()?)?;
        Some((jr, e))
    } else {
        notes.push("joint reductions need d >= 2".into());
        None
    };
    clock.lap("joint reduction");

    let mmm = mmm_check(&i, &form, joint.as_ref().map(|(jr, _)| jr), MMM_ITERATES)?;
    clock.lap("mmm");

    let mut h1 = Vec::new();
    if let Some((jr, _)) = &joint {
        for n in 1..=opts.nmax_joint {
            let h = h1_vanishing_check(&i, &jr.x, &jr.a, n)?;
            h1.push(H1Out { n, vanishes: h.vanishes, via_identity: h.via_identity, witness: h.witness.map(|w| w.to_string()) });
        }
    }
    clock.lap("h1");

    let colon_powers = match (&joint, d) {
        (Some((jr, _)), 2) => {
            let a = &jr.a[0];
            let steps = colon_power_check(&i, a, opts.nmax_colon)?;
            Some(ColonSection {
                element: a.to_string(),
                steps: steps.iter().map(|s| ColonOut { n: s.n, holds: s.holds }).collect(),
            })
        }
        _ => None,
    };
    clock.lap("colon powers");

    let facts = DepthFacts {
        d,
        origin_primary: true,
        complete,
        contracted: contracted.as_ref().map(|c| c.is_contracted),
        mmm: Some(mmm.is_mmm),
        reduction_number: Some(cert.r),
        vv: Some(vv.g_cohen_macaulay),
    };
    let verdict = depth_infer(&facts)?;
    clock.lap("depth");

    if ring.field().is_modular() {
        notes.push(format!("computed over {}: {MODULAR_NOTE}", ring.field()));
    }

    let fit_tag = |v: &blowup_core::kernel::BigInt| Tagged::new(v, Method::Fit);
    Ok(AnalysisReport {
        engine: format!("blowup {}", env!("CARGO_PKG_VERSION")),
        input: crate::report::InputSection {
            variables: spec.vars.clone(),
            field: ring.field().to_string(),
            order: opts.order.clone(),
            mode: opts.mode.as_str().into(),
            ideal_i: spec.i.clone(),
            ideal_j: spec.j.clone(),
            nmax_reduction: opts.nmax_reduction,
            nmax_vv: vv_bound,
            nmax_joint: opts.nmax_joint,
            nmax_colon: opts.nmax_colon,
            nmax_fiber: fiber_bound,
        },
        dimension: d,
        mu: Tagged::new(&mu_i.value, mu_i.method),
        order: Tagged::new(ord_i, ord_method),
        length: Tagged::new(&len.value, len.method),
        mixed_multiplicities: MixedSection {
            values: form.mixed_all().iter().map(fit_tag).collect(),
            window: [form.window.0, form.window.1, form.window.2],
        },
        complete,
        contracted: contracted.map(|c| ContractedSection { value: c.is_contracted, mu: c.mu.to_string(), order: c.order.to_string() }),
        reduction: ReductionSection {
            generators: strings(cert.j.gens()),
            source: source.into(),
            reduction_number: Tagged::new(cert.r, red_method),
            n_max: cert.n_max,
            minimal: cert.minimal,
            matches_fit: e_j.as_ref().map(|e| e.value == form.mixed(d)),
            multiplicity: e_j.map(|e| Tagged::new(&e.value, e.method)),
        },
        vv: VvSection {
            n_max: vv_bound,
            steps: vv.steps.iter().map(|s| VvStepOut { n: s.n, holds: s.holds, from_certificate: s.from_certificate }).collect(),
            first_failure: vv.first_failure,
            witnesses: strings(&vv.witnesses),
            g_cohen_macaulay: vv.g_cohen_macaulay,
        },
        joint_reduction: joint.map(|(jr, e)| JointSection {
            x: jr.x.to_string(),
            a: strings(&jr.a),
            n: jr.n,
            matches_fit: e.value == e_top,
            multiplicity: Tagged::new(&e.value, e.method),
        }),
        mmm: MmmSection {
            is_mmm: mmm.is_mmm,
            mu: mmm.mu.to_string(),
            e_top: fit_tag(&mmm.e_top),
            identity: mmm.identity,
            iterates: mmm.iterates.iter().map(|t| IterateOut { n: t.n, plain: t.plain, powered: t.powered }).collect(),
        },
        h1,
        fiber: FiberSection {
            n_max: fiber_bound,
            numerator: fiber.coeffs.iter().map(|c| Tagged::new(c, ord_method)).collect(),
            mu_sequence: fiber.mu_sequence.iter().map(ToString::to_string).collect(),
        },
        colon_powers,
        depth: DepthSection {
            rees: interval_out(&verdict, Algebra::Rees),
            graded: interval_out(&verdict, Algebra::Graded),
            fiber: interval_out(&verdict, Algebra::Fiber),
            facts: FactsOut {
                complete: facts.complete,
                contracted: facts.contracted,
                mmm: facts.mmm,
                reduction_number: facts.reduction_number,
                vv: facts.vv,
            },
            chain: verdict
                .chain
                .iter()
                .map(|r| RuleOut { rule: r.rule.into(), citation: r.citation.into(), effect: r.effect.clone() })
                .collect(),
        },
        notes,
        timing: timing.then_some(clock.stages),
    })
}

pub fn cmd_analyze(path: &Path, overrides: &Overrides, timing: bool) -> Result<AnalysisReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut spec = parse_spec(&text)?;
    spec.options.apply(overrides);
    analyze(&spec, timing)
}
