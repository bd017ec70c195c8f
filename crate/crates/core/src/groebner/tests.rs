use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::families;
use crate::poly::{parse_poly, ExponentVector, FieldKind, MonomialOrder, Polynomial, RingSpec};

fn xy() -> Arc<RingSpec> {
    families::xy_ring(FieldKind::Rationals)
}

fn xyz() -> Arc<RingSpec> {
    families::xyz_ring(FieldKind::Rationals)
}

fn ideal(r: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
}

fn p(r: &Arc<RingSpec>, s: &str) -> Polynomial {
    parse_poly(s, r).unwrap()
}

/// Buchberger's criterion checked with plain division: every S-polynomial
/// of the basis reduces to zero.
fn is_groebner(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let (lf, cf) = f.leading_term(order).unwrap();
            let (lg, cg) = g.leading_term(order).unwrap();
            let l = lf.lcm(lg);
            let s = &f.mul_term(&l.div(lf), &cf.inv()) - &g.mul_term(&l.div(lg), &cg.inv());
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

fn basis_strings(i: &Ideal) -> Vec<String> {
    i.gb().unwrap().polys().iter().map(ToString::to_string).collect()
}

#[test]
fn basis_of_maximal_ideal() {
    let r = xy();
    assert_eq!(basis_strings(&ideal(&r, &["X", "Y"])), vec!["Y", "X"]);
}

#[test]
fn unit_ideal_detected() {
    let r = xy();
    let i = ideal(&r, &["X*Y - 1", "X^2"]);
    assert_eq!(basis_strings(&i), vec!["1"]);
    // oracle: 1 = -(XY - 1)(XY + 1) + Y^2 X^2
    let one = &(&-&p(&r, "X*Y - 1") * &p(&r, "X*Y + 1")) + &(&p(&r, "Y^2") * &p(&r, "X^2"));
    assert_eq!(one, Polynomial::one(&r));
}

#[test]
fn one_s_pair_example() {
    let r = xy();
    let i = ideal(&r, &["X^2 + Y", "X*Y"]);
    let gb = i.gb().unwrap();
    let mut got = basis_strings(&i);
    got.sort();
    assert_eq!(got, vec!["X*Y", "X^2 + Y", "Y^2"]);
    assert!(is_groebner(gb.polys(), &MonomialOrder::Grevlex));
}

#[test]
fn membership_examples() {
    let r = xy();
    assert!(ideal(&r, &["X^2 + Y", "X*Y"]).contains_poly(&p(&r, "Y^2")).unwrap());
    assert!(!ideal(&r, &["X", "Y"]).contains_poly(&Polynomial::one(&r)).unwrap());
}

#[test]
fn sum_product_power() {
    let r = xy();
    let (x, y) = (ideal(&r, &["X"]), ideal(&r, &["Y"]));
    assert!(x.product(&y).unwrap().equals(&ideal(&r, &["X*Y"])).unwrap());
    let m = Ideal::maximal(&r);
    assert!(m.power(2).unwrap().equals(&ideal(&r, &["X^2", "X*Y", "Y^2"])).unwrap());
    assert!(m.power(0).unwrap().equals(&Ideal::unit(&r)).unwrap());
    assert!(x.sum(&y).unwrap().equals(&m).unwrap());
}

#[test]
fn intersections() {
    let r = xy();
    let i = ideal(&r, &["X"]).intersect(&ideal(&r, &["Y"])).unwrap();
    assert!(i.equals(&ideal(&r, &["X*Y"])).unwrap());
    let i = ideal(&r, &["X^2"]).intersect(&ideal(&r, &["X"])).unwrap();
    assert!(i.equals(&ideal(&r, &["X^2"])).unwrap());
    // nonmonomial: (X + Y) ∩ (X - Y) = ((X+Y)(X-Y))
    let i = ideal(&r, &["X + Y"]).intersect(&ideal(&r, &["X - Y"])).unwrap();
    assert!(i.equals(&ideal(&r, &["X^2 - Y^2"])).unwrap());
}

#[test]
fn colons() {
    let r = xy();
    let x = ideal(&r, &["X"]);
    assert!(ideal(&r, &["X*Y"]).colon(&x).unwrap().equals(&ideal(&r, &["Y"])).unwrap());
    let m = Ideal::maximal(&r);
    for n in 1..5 {
        let c = m.power(n).unwrap().colon(&x).unwrap();
        assert!(c.equals(&m.power(n - 1).unwrap()).unwrap(), "n = {n}");
    }
    let i = ideal(&r, &["X^2", "X*Y", "Y^3"]);
    // contracted from R[m/Y]: the criterion holds for Y, not for X
    let mi = m.product(&i).unwrap();
    assert!(mi.colon(&ideal(&r, &["Y"])).unwrap().equals(&i).unwrap());
    let cx = mi.colon(&x).unwrap();
    assert!(cx.equals(&ideal(&r, &["X^2", "X*Y", "Y^2"])).unwrap());
    assert!(ideal(&r, &["X"]).colon(&Ideal::new(&r, vec![]).unwrap()).is_err());
}

#[test]
fn equality_across_generating_sets() {
    let r = xy();
    assert!(ideal(&r, &["X", "Y"]).equals(&ideal(&r, &["Y", "X + Y"])).unwrap());
    assert!(!ideal(&r, &["X", "Y^2"]).equals(&ideal(&r, &["X", "Y"])).unwrap());
}

#[test]
fn standard_monomial_counts() {
    let r = xy();
    assert_eq!(ideal(&r, &["X", "Y"]).standard_monomials().unwrap().len(), 1);
    let sm = Ideal::maximal(&r).power(2).unwrap().standard_monomials().unwrap();
    assert_eq!(sm.len(), 3);
    assert!(sm.contains(&ExponentVector::from_slice(&[0, 1])));
    let r3 = xyz();
    let j = ideal(&r3, &["X + Y + Z", "X^2*Z", "Y^3 + Z^7"]);
    // globally the zero set also contains the points with Z^4 = 1
    assert_eq!(j.standard_monomials().unwrap().len(), 17);
    assert!(!j.is_origin_primary().unwrap());
    assert_eq!(j.local_length().unwrap(), 9);
    assert_eq!(ideal(&r, &["X^2 - X", "Y^3"]).local_length().unwrap(), 3);
    assert_eq!(ideal(&r, &["X*Y"]).local_length(), Err(crate::Error::NotOriginPrimary));
    // the plane X = 1 together with the origin
    let k = ideal(&r3, &["X^2 - X", "X*Y - Y", "X*Z - Z"]);
    assert!(k.origin_isolated().unwrap());
    assert_eq!(k.local_length().unwrap(), 1);
    assert_eq!(j.local_length_at_most(9).unwrap(), Some(9));
    assert_eq!(j.local_length_at_most(8).unwrap(), None);
    assert_eq!(ideal(&r3, &["X*Y", "Z"]).local_length_at_most(5).unwrap(), None);
    assert_eq!(ideal(&r, &["X"]).standard_monomials(), Err(crate::Error::NotZeroDimensional));
}

#[test]
fn origin_primary() {
    let r = xy();
    assert!(ideal(&r, &["X", "Y"]).is_origin_primary().unwrap());
    assert!(!ideal(&r, &["X"]).is_origin_primary().unwrap());
    // zero-dimensional but also supported at (1, 0)
    assert!(!ideal(&r, &["X^2 - X", "Y"]).is_origin_primary().unwrap());
    assert!(!Ideal::unit(&r).is_origin_primary().unwrap());
    for s in 2..=4 {
        let r3 = xyz();
        let j = families::ex1_reduction(&r3, s);
        assert!(j.is_origin_primary().unwrap());
        for g in [format!("Z^7"), format!("X^{}", 3 * s + 1), "Y^3".into()] {
            // Z^7 = (X^(3s+1) + Z^7) - X^(3s+1) needs X^(3s+1) ∈ J, via X^2 Z
            let f = p(&r3, &g).pow(3);
            assert!(j.contains_poly(&f).unwrap());
        }
    }
}

#[test]
fn example_membership_claims() {
    // X^3 Y^5 ∈ J ∩ I^2 but not in J I, for the n = 4 member
    let r = xy();
    let i = families::ex2_ideal(&r, 4);
    let j = families::ex2_reduction(&r, 4);
    let w = p(&r, "X^3*Y^5");
    let i2 = i.power(2).unwrap();
    assert!(i2.contains_poly(&w).unwrap());
    assert!(j.contains_poly(&w).unwrap());
    assert!(j.intersect(&i2).unwrap().contains_poly(&w).unwrap());
    let ji = j.product(&i).unwrap();
    assert!(!ji.contains_poly(&w).unwrap());
    assert!(!ji.equals(&i2).unwrap());
}

#[test]
fn ex1_intersection_and_reduction_identities() {
    let r = xyz();
    let i = families::ex1_ideal(&r, 2);
    let j = families::ex1_reduction(&r, 2);
    let i2 = i.power(2).unwrap();
    let ji = j.product(&i).unwrap();
    assert!(j.intersect(&i2).unwrap().equals(&ji).unwrap());
    let ji2 = j.product(&i2).unwrap();
    assert!(ji2.equals(&i.power(3).unwrap()).unwrap());
}

#[test]
fn lex_basis_is_groebner() {
    let r = xyz();
    let i = ideal(&r, &["X^2 + Y*Z - 1", "X*Y - Z^2", "Y^3 + X"]);
    for o in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
        let gb = i.groebner_basis(&o).unwrap();
        assert!(is_groebner(gb.polys(), &o));
        for g in i.gens() {
            assert!(gb.reduce(g).is_zero());
        }
    }
}

#[test]
fn modular_field_basis() {
    let r = families::xy_ring(FieldKind::Prime(Default::default()));
    let i = ideal(&r, &["X^2 + Y", "X*Y"]);
    assert!(i.contains_poly(&p(&r, "Y^2")).unwrap());
    assert!(is_groebner(i.gb().unwrap().polys(), &MonomialOrder::Grevlex));
}

#[test]
fn timeout_is_reported() {
    let r = xyz();
    let gens: Vec<_> = ["X^5 + Y^4*Z - 3*X*Y", "Y^5 - Z^3*X^2 + 1", "Z^4*X - Y^3 + X^2*Z"]
        .iter()
        .map(|g| ordered(&p(&r, g), &MonomialOrder::Lex))
        .collect();
    let res = buchberger::buchberger_limited(gens, &MonomialOrder::Lex, Some(std::time::Duration::ZERO));
    assert!(matches!(res, Err(crate::Error::Timeout(_))));
}

fn arb_gens() -> impl Strategy<Value = Vec<Vec<(Vec<u32>, i64)>>> {
    prop::collection::vec(prop::collection::vec((prop::collection::vec(0u32..4, 2), -3i64..4), 1..4), 1..4)
}

fn build(r: &Arc<RingSpec>, t: &[Vec<(Vec<u32>, i64)>]) -> Vec<Polynomial> {
    t.iter()
        .map(|terms| {
            Polynomial::from_terms(
                r,
                terms.iter().map(|(e, c)| (ExponentVector::from(e.clone()), r.field().from_int(*c))),
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_ideal_members_reduce_to_zero(gens in arb_gens(), mult in arb_gens()) {
        let r = xy();
        let gens = build(&r, &gens);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let gb = i.gb().unwrap();
        prop_assert!(is_groebner(gb.polys(), &MonomialOrder::Grevlex));
        let coeffs = build(&r, &mult);
        let mut f = Polynomial::zero(&r);
        for (g, c) in gens.iter().zip(coeffs.iter().cycle()) {
            f = &f + &(g * c);
        }
        prop_assert!(gb.reduce(&f).is_zero());
    }

    #[test]
    fn normal_form_is_linear_modulo_basis(gens in arb_gens(), a in arb_gens(), b in arb_gens()) {
        let r = xy();
        let gb = Ideal::new(&r, build(&r, &gens)).unwrap().gb().unwrap();
        let f = build(&r, &a).remove(0);
        let g = build(&r, &b).remove(0);
        prop_assert_eq!(&gb.reduce(&f) - &gb.reduce(&g), gb.reduce(&(&f - &g)));
    }

    #[test]
    fn standard_count_is_order_independent(gens in arb_gens()) {
        let r = xy();
        let mut polys = build(&r, &gens);
        polys.push(p(&r, "X^5"));
        polys.push(p(&r, "Y^4 + X"));
        let i = Ideal::new(&r, polys).unwrap();
        let a = i.standard_monomials_for(&MonomialOrder::Lex).unwrap().len();
        let b = i.standard_monomials_for(&MonomialOrder::Grevlex).unwrap().len();
        prop_assert_eq!(a, b);
    }
}
