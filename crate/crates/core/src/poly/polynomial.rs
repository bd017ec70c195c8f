use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{ExponentVector, MonomialOrder, RingSpec, Scalar};
use crate::{Error, Result};

/// Multivariate polynomial over the coefficient field of its ring.
///
/// Terms are stored without zero coefficients, sorted by descending lex
/// order of exponent vectors, so structural equality is ideal-free
/// polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<(ExponentVector, Scalar)>,
}

pub(crate) fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<RingSpec>, c: Scalar) -> Self {
        Self::monomial(ring, ExponentVector::zero(ring.dim()), c)
    }

    pub fn from_int(ring: &Arc<RingSpec>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_int(c))
    }

    pub fn var(ring: &Arc<RingSpec>, i: usize) -> Self {
        Self::monomial(ring, ExponentVector::unit(ring.dim(), i, 1), ring.field().one())
    }

    pub fn monomial(ring: &Arc<RingSpec>, exp: ExponentVector, c: Scalar) -> Self {
        assert_eq!(exp.len(), ring.dim(), "exponent vector length");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(exp, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(ring: &Arc<RingSpec>, terms: impl IntoIterator<Item = (ExponentVector, Scalar)>) -> Self {
        let mut acc: BTreeMap<ExponentVector, Scalar> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.dim(), "exponent vector length");
            match acc.get_mut(&e) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(e, c);
                }
            }
        }
        Self::from_sorted_map(ring, acc)
    }

    fn from_sorted_map(ring: &Arc<RingSpec>, acc: BTreeMap<ExponentVector, Scalar>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &[(ExponentVector, Scalar)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_one())
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&ExponentVector, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(e, c)| (e, c))
    }

    /// Terms sorted in descending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(ExponentVector, Scalar)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(e, _)| e.degree()).max()
    }

    /// Smallest total degree of a term (the m-adic order); `None` for zero.
    pub fn min_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(e, _)| e.degree()).min()
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        for (a, _) in &self.terms {
            for (b, _) in &other.terms {
                a.checked_mul(b)?;
            }
        }
        Ok(self * other)
    }

    /// `self^k` with checked exponent arithmetic; `f^0 = 1`.
    pub fn checked_pow(&self, k: u32) -> Result<Polynomial> {
        for (e, _) in &self.terms {
            e.checked_pow(k)?;
        }
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        self.checked_pow(k).expect("exponent overflow")
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.mul(c))).collect(),
        }
    }

    /// Multiplies by `c * x^m`. Multiplying by a monomial preserves lex order.
    pub fn mul_term(&self, m: &ExponentVector, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.mul(m), a.mul(c))).collect(),
        }
    }

    /// Divides by the leading coefficient for `order`.
    pub fn make_monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Embeds into a ring with `k` extra leading variables.
    pub(crate) fn lift(&self, ring: &Arc<RingSpec>, k: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.prepend_zeros(k), c.clone())).collect(),
        }
    }

    /// Reinterprets the coefficients in another ring with the same variables.
    pub fn map_ring(&self, ring: &Arc<RingSpec>, f: impl Fn(&Scalar) -> Scalar) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn exponents(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.iter().map(|(e, _)| e)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if rhs.is_monomial() {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        let mut acc: BTreeMap<ExponentVector, Scalar> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.mul(b);
                let p = x.mul(y);
                match acc.get_mut(&e) {
                    Some(v) => *v = v.add(&p),
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        Polynomial::from_sorted_map(&self.ring, acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints terms in descending grevlex order using the expression grammar.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (e, c)) in self.sorted_terms(&MonomialOrder::Grevlex).iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || e.is_one() {
                parts.push(mag.to_string());
            }
            for (i, &x) in e.as_slice().iter().enumerate() {
                match x {
                    0 => {}
                    1 => parts.push(vars[i].clone()),
                    _ => parts.push(format!("{}^{}", vars[i], x)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, FieldKind};

    fn ring(vars: &[&str]) -> Arc<RingSpec> {
        Arc::new(RingSpec::new(vars.iter().copied(), FieldKind::Rationals).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["X", "Y"]);
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(&(&p("X") + &p("Y")) * &(&p("X") - &p("Y")), p("X^2 - Y^2"));
    }

    #[test]
    fn zeroth_power_is_one() {
        let r = ring(&["X", "Y"]);
        let f = parse_poly("3*X*Y - Y^5 + 2", &r).unwrap();
        assert_eq!(f.pow(0), Polynomial::one(&r));
    }

    #[test]
    fn multinomial_square() {
        let r = ring(&["X", "Y", "Z"]);
        let s = parse_poly("X + Y + Z", &r).unwrap().pow(2);
        assert_eq!(s.num_terms(), 6);
        let twos = s.terms().iter().filter(|(_, c)| *c == r.field().from_int(2)).count();
        assert_eq!(twos, 3);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(&ring(&["X", "Y"]), 0);
        let b = Polynomial::var(&ring(&["X", "Z"]), 0);
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn pow_overflow_is_an_error() {
        let r = ring(&["X"]);
        let f = parse_poly("X^70000", &r).unwrap();
        assert_eq!(f.checked_pow(70000), Err(Error::ExponentOverflow));
    }

    #[test]
    fn prints_grammar_form() {
        let r = ring(&["X", "Y", "Z"]);
        let f = parse_poly("-X^2*Z + 3*Y - 1 + Z^7", &r).unwrap();
        assert_eq!(f.to_string(), "Z^7 - X^2*Z + 3*Y - 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn grevlex_leading_monomial_of_x7_plus_z7() {
        let r = ring(&["X", "Y", "Z"]);
        let f = parse_poly("X^7 + Z^7", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        let (lm, _) = f.leading_term(&MonomialOrder::Grevlex).unwrap();
        assert_eq!(lm.as_slice(), &[7, 0, 0]);
    }
}
