use std::sync::Arc;

use super::*;
use crate::families::{ex1_ideal, ex1_reduction, ex2_ideal, ex2_reduction, ideal_from_strings, xy_ring, xyz_ring};
use crate::groebner::Ideal;
use crate::kernel::BigInt;
use crate::multiplicity::bhattacharya_fit;
use crate::poly::{parse_poly, FieldKind, Polynomial, RingSpec};
use crate::Error;

fn r2() -> Arc<RingSpec> {
    xy_ring(FieldKind::Rationals)
}

fn ideal(r: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
    let gens: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
    ideal_from_strings(r, &gens).unwrap()
}

fn p(r: &Arc<RingSpec>, s: &str) -> Polynomial {
    parse_poly(s, r).unwrap()
}

fn m_power(r: &Arc<RingSpec>, k: u32) -> Ideal {
    Ideal::maximal(r).power(k).unwrap()
}

#[test]
fn reduction_numbers() {
    let r = r2();
    let i = ideal(&r, &["X^2", "Y^3"]);
    let c = reduction_number(&i, &i, 6).unwrap();
    assert_eq!((c.r, c.minimal), (0, true));
    for n in 4..=5 {
        let c = reduction_number(&ex2_ideal(&r, n), &ex2_reduction(&r, n), 6).unwrap();
        assert_eq!(c.r, n / 2);
        assert!(c.minimal);
    }
    let r3 = xyz_ring(FieldKind::Rationals);
    let c = reduction_number(&ex1_ideal(&r3, 2), &ex1_reduction(&r3, 2), 6).unwrap();
    assert_eq!((c.r, c.minimal), (2, true));
    // (X^2, XY) is not origin-primary
    let bad = ideal(&r, &["X^2", "X*Y"]);
    assert_eq!(reduction_number(&m_power(&r, 2), &bad, 4).unwrap_err(), Error::NotOriginPrimary);
    let outside = ideal(&r, &["X", "Y^2"]);
    assert!(matches!(reduction_number(&m_power(&r, 2), &outside, 4), Err(Error::Precondition(_))));
    // (X^3, Y^3) is not a reduction of (X^3, X Y, Y^3): X Y is not integral over it
    let j = ideal(&r, &["X^3", "Y^3"]);
    let i = ideal(&r, &["X^3", "X*Y", "Y^3"]);
    assert_eq!(reduction_number(&i, &j, 3).unwrap_err(), Error::NotCertified(3));
}

#[test]
fn reduction_search() {
    let r = r2();
    for n in 1..=3 {
        let i = m_power(&r, n);
        let c = find_minimal_reduction(&i, &DEFAULT_POOL, 20, 6, None).unwrap().expect("found");
        assert!(c.minimal);
        assert_eq!(c.r, if n == 1 { 0 } else { 1 });
        assert_eq!(c.j.gens().len(), 2);
    }
    assert_eq!(find_minimal_reduction(&ideal(&r, &["X"]), &DEFAULT_POOL, 5, 6, None).unwrap_err(), Error::NotOriginPrimary);
}

#[test]
fn valabrega_valla() {
    let r3 = xyz_ring(FieldKind::Rationals);
    for s in 2..=3 {
        let c = reduction_number(&ex1_ideal(&r3, s), &ex1_reduction(&r3, s), 6).unwrap();
        let vv = vv_check(&c, default_vv_bound(c.r)).unwrap();
        assert!(vv.g_cohen_macaulay, "s = {s}");
        assert_eq!(vv.steps.len(), 4);
    }
    let r = r2();
    let c = reduction_number(&ex2_ideal(&r, 4), &ex2_reduction(&r, 4), 6).unwrap();
    let vv = vv_check(&c, 4).unwrap();
    assert!(!vv.g_cohen_macaulay);
    assert_eq!(vv.first_failure, Some(2));
    assert!(vv.steps[0].holds);
    assert!(vv.witnesses.contains(&p(&r, "X^3*Y^5")));
    assert!(vv_check(&c, 1).is_err());
}

#[test]
fn joint_reductions() {
    let r = r2();
    let m = Ideal::maximal(&r);
    let c = joint_reduction_verify(&p(&r, "X"), &[p(&r, "Y")], &m, 4).unwrap().expect("certified");
    assert_eq!(c.n, 1);
    let c = joint_reduction_verify(&p(&r, "X"), &[p(&r, "Y^2")], &m_power(&r, 2), 4).unwrap().expect("certified");
    assert_eq!(c.n, 1);
    // X and X^2 cannot work: both vanish on the line X = 0
    assert!(joint_reduction_verify(&p(&r, "X"), &[p(&r, "X^2")], &m_power(&r, 2), 3).unwrap().is_none());
    assert!(joint_reduction_verify(&p(&r, "1 + X"), &[p(&r, "Y^2")], &m_power(&r, 2), 3).is_err());
    assert!(joint_reduction_verify(&p(&r, "X"), &[p(&r, "Y")], &m_power(&r, 2), 3).is_err());
    for i in [m_power(&r, 2), m_power(&r, 3), ideal(&r, &["X^2", "X*Y", "Y^3"])] {
        let form = bhattacharya_fit(&i, 1).unwrap();
        let c = joint_reduction_search(&i, &DEFAULT_POOL, 20, 4, Some(&form.mixed(1))).unwrap().expect("found");
        let e = crate::multiplicity::param_multiplicity(&c.ideal().unwrap()).unwrap().value;
        assert_eq!(e, form.mixed(1));
    }
}

#[test]
fn minimal_mixed_multiplicity() {
    let r = r2();
    for n in 1..=3 {
        let i = m_power(&r, n);
        let form = bhattacharya_fit(&i, 1).unwrap();
        let jr = joint_reduction_search(&i, &DEFAULT_POOL, 20, 4, Some(&form.mixed(1))).unwrap();
        let rep = mmm_check(&i, &form, jr.as_ref(), 2).unwrap();
        assert!(rep.is_mmm);
        assert_eq!(rep.mu, BigInt::from(n + 1));
        assert_eq!(rep.identity, Some(true));
        assert!(rep.iterates.iter().all(|t| t.plain));
    }
    for n in 4..=5 {
        let i = ex2_ideal(&r, n);
        let form = bhattacharya_fit(&i, n / 2).unwrap();
        assert_eq!(form.mixed(1), BigInt::from(n));
        let rep = mmm_check(&i, &form, None, 0).unwrap();
        assert!(!rep.is_mmm);
        assert_eq!(rep.mu, BigInt::from(4));
    }
}

#[test]
fn contractedness() {
    let r = r2();
    for n in 1..=4 {
        assert!(contracted_check_2d(&m_power(&r, n)).unwrap().is_contracted);
    }
    let c = contracted_check_2d(&ideal(&r, &["X^2", "X*Y", "Y^3"])).unwrap();
    assert_eq!(c, ContractedReport { is_contracted: true, mu: BigInt::from(3), order: 2 });
    let c = contracted_check_2d(&ex2_ideal(&r, 4)).unwrap();
    assert_eq!(c, ContractedReport { is_contracted: false, mu: BigInt::from(4), order: 4 });
    assert!(contracted_check_2d(&Ideal::maximal(&xyz_ring(FieldKind::Rationals))).is_err());
}

#[test]
fn h1_vanishing() {
    let r = r2();
    let h = h1_vanishing_check(&Ideal::maximal(&r), &p(&r, "X"), &[p(&r, "Y")], 1).unwrap();
    assert!(h.vanishes);
    for n in 1..=3 {
        let h = h1_vanishing_check(&m_power(&r, 2), &p(&r, "X"), &[p(&r, "Y^2")], n).unwrap();
        assert!(h.vanishes, "n = {n}");
        let full = h1_by_intersection(&m_power(&r, 2), &p(&r, "X"), &[p(&r, "Y^2")], n).unwrap();
        assert!(full.vanishes && !full.via_identity);
    }
    // x = X + Y + Z with a = (X^2 Z, Y^3) for the first family
    let r3 = xyz_ring(FieldKind::Rationals);
    let i = ex1_ideal(&r3, 2);
    let (x, a) = (p(&r3, "X + Y + Z"), vec![p(&r3, "X^2*Z"), p(&r3, "Y^3")]);
    for n in 1..=2 {
        assert!(h1_by_intersection(&i, &x, &a, n).unwrap().vanishes);
    }
    // (Y, Y^2) has the line Y = 0 through the origin in its zero set
    let h = h1_vanishing_check(&m_power(&r, 2), &p(&r, "Y"), &[p(&r, "Y^2")], 1);
    assert!(h.is_err() || !h.unwrap().vanishes);
}

#[test]
fn colon_powers() {
    let r = r2();
    let steps = colon_power_check(&Ideal::maximal(&r), &p(&r, "X"), 5).unwrap();
    assert!(steps.iter().all(|s| s.holds));
    let steps = colon_power_check(&m_power(&r, 2), &p(&r, "Y^2"), 5).unwrap();
    assert_eq!(steps.len(), 5);
    assert!(steps.iter().all(|s| s.holds));
    for n in 4..=5 {
        let steps = colon_power_check(&ex2_ideal(&r, n), &p(&r, &format!("X^{n}")), 6).unwrap();
        assert!(steps[0].holds);
    }
    assert!(colon_power_check(&m_power(&r, 2), &p(&r, "X"), 2).is_err());
}

fn facts(d: u32) -> DepthFacts {
    DepthFacts { d, origin_primary: true, ..Default::default() }
}

#[test]
fn depth_first_family() {
    let f = DepthFacts { complete: Some(true), mmm: Some(true), reduction_number: Some(2), vv: Some(true), ..facts(3) };
    let v = depth_infer(&f).unwrap();
    assert_eq!(v.graded.exact(), Some(3));
    assert_eq!(v.rees.exact(), Some(4));
    assert_eq!(v.fiber.exact(), Some(2));
    assert_eq!(v.fiber.cm(), CmStatus::No);
    assert!(v.chain.iter().any(|r| r.rule == "R5"));
}

#[test]
fn depth_complete_plane_ideal() {
    let f = DepthFacts { complete: Some(true), contracted: Some(true), mmm: Some(true), reduction_number: Some(1), vv: Some(true), ..facts(2) };
    let v = depth_infer(&f).unwrap();
    for a in Algebra::ALL {
        assert_eq!(v.get(a).cm(), CmStatus::Yes);
    }
    assert!(v.chain.iter().any(|r| r.rule == "R0"));
}

#[test]
fn depth_second_family() {
    let f = DepthFacts {
        complete: Some(false),
        contracted: Some(false),
        mmm: Some(false),
        reduction_number: Some(2),
        vv: Some(false),
        ..facts(2)
    };
    let v = depth_infer(&f).unwrap();
    assert_eq!((v.graded.lo, v.graded.hi), (0, 1));
    assert_eq!((v.rees.lo, v.rees.hi), (1, 2));
    assert_eq!((v.fiber.lo, v.fiber.hi), (0, 2));
    assert_eq!(v.fiber.cm(), CmStatus::Unknown);
    assert!(!v.chain.iter().any(|r| r.rule == "R3"));
}

#[test]
fn depth_contradiction_is_reported() {
    let f = DepthFacts { complete: Some(true), vv: Some(false), ..facts(2) };
    assert!(matches!(depth_infer(&f), Err(Error::InconsistentFacts(_))));
    assert_eq!(depth_infer(&DepthFacts { origin_primary: false, ..facts(2) }), Err(Error::NotOriginPrimary));
}

#[test]
fn depth_monotone_and_replayable() {
    let all = [
        DepthFacts { mmm: Some(true), ..facts(3) },
        DepthFacts { mmm: Some(true), vv: Some(true), ..facts(3) },
        DepthFacts { mmm: Some(true), vv: Some(true), reduction_number: Some(2), ..facts(3) },
    ];
    let verdicts: Vec<DepthVerdict> = all.iter().map(|f| depth_infer(f).unwrap()).collect();
    for w in verdicts.windows(2) {
        for a in Algebra::ALL {
            assert!(w[1].get(a).lo >= w[0].get(a).lo && w[1].get(a).hi <= w[0].get(a).hi);
        }
    }
    assert_eq!(depth_infer(&all[2]).unwrap(), verdicts[2]);
}
