use std::sync::Arc;

use super::*;
use crate::families::{ex1_ideal, ex1_reduction, ex2_ideal, ideal_from_strings, xy_ring, xyz_ring};
use crate::poly::{FieldKind, RingSpec};

fn r2() -> Arc<RingSpec> {
    xy_ring(FieldKind::Rationals)
}

fn r3() -> Arc<RingSpec> {
    xyz_ring(FieldKind::Rationals)
}

fn ideal(r: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
    let gens: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
    ideal_from_strings(r, &gens).unwrap()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn m_power(r: &Arc<RingSpec>, k: u32) -> Ideal {
    Ideal::maximal(r).power(k).unwrap()
}

#[test]
fn lengths_and_methods() {
    let r = r2();
    assert_eq!(length(&Ideal::maximal(&r)).unwrap().value, big(1));
    assert_eq!(length(&m_power(&r, 3)).unwrap(), Tagged { value: big(6), method: Method::MonomialPath });
    let g = length(&ideal(&r, &["X^2 + Y^3", "X*Y"])).unwrap();
    assert_eq!(g, Tagged { value: big(5), method: Method::GroebnerPath });
    assert_eq!(length(&ideal(&r, &["X"])), Err(Error::NotOriginPrimary));
    assert_eq!(length(&Ideal::unit(&r)), Err(Error::NotOriginPrimary));
    // k[X,Z]/(X^7+Z^7, X^2 Z) has length 2*7 + 7, times 3 for Y^3
    assert_eq!(length(&ex1_reduction(&r3(), 2)).unwrap().value, big(63));
    assert_eq!(length(&ex1_reduction(&r3(), 3)).unwrap().value, big(72));
}

#[test]
fn generator_counts() {
    for s in 2..=4 {
        let m = mu(&ex1_ideal(&r3(), s)).unwrap();
        assert_eq!(m.value, big(11));
    }
    let r = r2();
    for n in 1..6 {
        assert_eq!(mu(&m_power(&r, n)).unwrap().value, big(n as i64 + 1));
    }
    assert_eq!(mu(&ex2_ideal(&r, 4)).unwrap().value, big(4));
    // non-monomial: (X^2, Y^2 + X*Y) needs two generators, (X^2, XY, Y^3 + X^2) three
    assert_eq!(mu(&ideal(&r, &["X^2", "Y^2 + X*Y"])).unwrap().value, big(2));
    assert_eq!(mu(&ideal(&r, &["X^2", "X*Y", "Y^3 + X^2"])).unwrap().value, big(3));
}

#[test]
fn orders() {
    let r = r2();
    for n in 1..5 {
        assert_eq!(order(&m_power(&r, n)).unwrap(), n as u64);
        assert_eq!(order(&ex2_ideal(&r, n + 3)).unwrap(), (n + 3) as u64);
    }
    assert_eq!(order(&ideal(&r, &["X^2", "X*Y", "Y^3"])).unwrap(), 2);
    assert_eq!(order(&ideal(&r, &["X^3 + Y", "X^4"])).unwrap(), 1);
    assert!(order(&Ideal::new(&r, vec![]).unwrap()).is_err());
}

#[test]
fn tables() {
    let r = r2();
    let t = length_table(&Ideal::maximal(&r), 0, 0, 4).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            let n = (a + b) as i64;
            assert_eq!(*t.get(a, b), big(n * (n + 1) / 2));
        }
    }
    let i = ideal(&r, &["X^2", "Y^3"]);
    let t = length_table(&i, 3, 3, 5).unwrap();
    let mono = MonomialIdeal::from_ideal(&i).unwrap();
    let m = MonomialIdeal::maximal_power(&r, 1);
    for rr in 3..8 {
        for ss in 3..8 {
            let direct = m.power(rr).unwrap().product(&mono.power(ss).unwrap()).unwrap();
            let count = brute_count(&direct);
            assert_eq!(*t.get(rr, ss), big(count));
        }
    }
    let t = length_table(&ex1_ideal(&r3(), 2), 1, 1, 3).unwrap();
    for a in 1..4 {
        for b in 1..4 {
            assert!(a == 3 || t.get(a, b) < t.get(a + 1, b));
            assert!(b == 3 || t.get(a, b) < t.get(a, b + 1));
        }
    }
}

fn brute_count(i: &MonomialIdeal) -> i64 {
    let bx = i.gens().iter().map(|g| g.get(0)).max().unwrap();
    let by = i.gens().iter().map(|g| g.get(1)).max().unwrap();
    let mut n = 0;
    for a in 0..=bx {
        for b in 0..=by {
            if !i.contains_monomial(&crate::poly::ExponentVector::from_slice(&[a, b])) {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn fit_of_maximal_ideal() {
    let r = r2();
    let f = bhattacharya_fit(&Ideal::maximal(&r), 0).unwrap();
    assert_eq!(f.mixed_all(), vec![big(1), big(1), big(1)]);
    for a in 0..6 {
        for b in 0..6 {
            let n = (a + b) as i64;
            assert_eq!(f.evaluate(a, b), big(n * (n + 1) / 2));
        }
    }
    let r = r3();
    let f = bhattacharya_fit(&Ideal::maximal(&r), 0).unwrap();
    assert_eq!(f.mixed_all(), vec![big(1); 4]);
}

#[test]
fn fit_of_box_ideal() {
    let r = r2();
    let i = ideal(&r, &["X^2", "Y^3"]);
    let f = bhattacharya_fit(&i, 1).unwrap();
    assert_eq!(f.mixed(2), big(6));
    assert_eq!(f.mixed(1), big(2));
    let far = bhattacharya_fit_from(&i, 12, 12).unwrap();
    assert_eq!(far.coeffs, f.coeffs);
}

#[test]
fn fit_of_first_family() {
    let r = r3();
    let i = ex1_ideal(&r, 2);
    let f = bhattacharya_fit(&i, 2).unwrap();
    assert_eq!(f.mixed(0), big(1));
    assert_eq!(f.mixed(2), big(9));
    assert_eq!(f.mixed(3), big(63));
}

#[test]
fn fit_reports_instability() {
    let r = r2();
    let t = LengthTable {
        r0: 0,
        s0: 0,
        width: 4,
        entries: (0..4).map(|a| (0..4).map(|b| big(if a == 3 && b == 3 { 100 } else { 0 })).collect()).collect(),
        method: Method::Fit,
    };
    assert!(fit_table(&t, 2).is_err());
    assert_eq!(length_table(&Ideal::maximal(&r), 0, 0, 0).map(|_| ()), Err(Error::Precondition("empty length table".into())));
}

#[test]
fn parameter_multiplicities() {
    let r = r2();
    assert_eq!(param_multiplicity(&Ideal::maximal(&r)).unwrap().value, big(1));
    for n in 1..5 {
        let j = ideal(&r, &[&format!("X^{n}"), &format!("Y^{n}")]);
        assert_eq!(param_multiplicity(&j).unwrap().value, big((n * n) as i64));
    }
    let r = r3();
    let j = ideal(&r, &["X + Y + Z", "X^2*Z", "Y^3 + Z^7"]);
    assert_eq!(param_multiplicity(&j).unwrap().value, big(9));
    assert!(matches!(param_multiplicity(&ideal(&r, &["X", "Y"])), Err(Error::NotParameterIdeal(_))));
    assert!(matches!(param_multiplicity(&ideal(&r, &["X", "Y", "Z", "X+Y"])), Err(Error::NotParameterIdeal(_))));
    assert!(matches!(param_multiplicity(&ideal(&r, &["X", "Y", "X*Z"])), Err(Error::NotParameterIdeal(_))));
}

#[test]
fn fiber_series() {
    let r = r2();
    let h = fiber_hilbert(&m_power(&r, 2), 8).unwrap();
    assert_eq!(h.coeffs, vec![big(1), big(1)]);
    for n in 0..=8 {
        assert_eq!(h.expand(n), h.mu_sequence[n as usize]);
        assert_eq!(h.mu_sequence[n as usize], big(2 * n as i64 + 1));
    }
    let h = fiber_hilbert(&ex2_ideal(&r, 5), 8).unwrap();
    assert_eq!(h.coeffs, vec![big(1), big(2), big(2)]);
    let h = fiber_hilbert(&ex2_ideal(&r, 4), 8).unwrap();
    assert_eq!(h.coeffs, vec![big(1), big(2), big(1)]);
    assert_eq!(fiber_hilbert(&ex2_ideal(&r, 7), 3), Err(Error::FiberNotStabilized(3)));
    let h = fiber_hilbert(&ex1_ideal(&r3(), 2), 10).unwrap();
    assert_eq!(h.coeffs, vec![big(1), big(8)]);
    for n in 0..=10 {
        assert_eq!(h.expand(n), h.mu_sequence[n as usize]);
    }
}
