//! Monomial ideals handled combinatorially.
//!
//! Everything here works on exponent vectors only and never calls the
//! Gröbner engine, so these routines double as oracles for it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::groebner::Ideal;
use crate::kernel::{lp_feasible, BigInt, LinearConstraint, Rational, Relation};
use crate::poly::{ExponentVector, Polynomial, RingSpec};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ring: Arc<RingSpec>,
    gens: Vec<ExponentVector>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        crate::poly::polynomial_same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

/// Divisibility-minimal subset, sorted by degree then exponents.
pub fn minimalize(ring: &Arc<RingSpec>, gens: impl IntoIterator<Item = ExponentVector>) -> MonomialIdeal {
    let mut all: Vec<ExponentVector> = gens.into_iter().collect();
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.as_slice().cmp(a.as_slice())));
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    MonomialIdeal { ring: ring.clone(), gens: kept }
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<RingSpec>, gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        if gens.iter().any(|g| g.len() != ring.dim()) {
            return Err(Error::RingMismatch);
        }
        Ok(minimalize(ring, gens))
    }

    /// `m^k`.
    pub fn maximal_power(ring: &Arc<RingSpec>, k: u32) -> Self {
        minimalize(ring, monomials_of_degree(ring.dim(), k))
    }

    /// Exponents of a monomial ideal handle; `None` if some generator is
    /// not a monomial.
    pub fn from_ideal(ideal: &Ideal) -> Option<Self> {
        if !ideal.is_monomial() {
            return None;
        }
        Some(minimalize(ideal.ring(), ideal.gens().iter().map(|g| g.terms()[0].0.clone())))
    }

    pub fn to_ideal(&self) -> Ideal {
        let gens = self
            .gens
            .iter()
            .map(|e| Polynomial::monomial(&self.ring, e.clone(), self.ring.field().one()))
            .collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(ExponentVector::is_one)
    }

    pub fn contains_monomial(&self, e: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(e))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    /// Some pure power of every variable lies in the ideal (and it is proper).
    pub fn is_origin_primary(&self) -> bool {
        !self.is_unit() && (0..self.ring.dim()).all(|i| self.pure_power_exponent(i).is_some())
    }

    fn pure_power_exponent(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| match g.pure_power() {
                Some((j, e)) if j == i => Some(e),
                _ => None,
            })
            .min()
    }

    /// Largest `k` with `I ⊆ m^k`.
    pub fn order(&self) -> Option<u64> {
        self.gens.iter().map(ExponentVector::degree).min()
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if crate::poly::polynomial_same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        Ok(minimalize(&self.ring, self.gens.iter().chain(&other.gens).cloned()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.checked_mul(b)?);
            }
        }
        Ok(minimalize(&self.ring, out))
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = minimalize(&self.ring, [ExponentVector::zero(self.ring.dim())]);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        Ok(minimalize(&self.ring, out))
    }

    /// `(I : x^a)`.
    pub fn colon_monomial(&self, a: &ExponentVector) -> MonomialIdeal {
        minimalize(&self.ring, self.gens.iter().map(|g| g.saturating_div(a)))
    }

    /// `(I : K)` as the intersection of `(I : g)` over generators `g` of `K`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut it = other.gens.iter();
        let first = it.next().ok_or_else(|| Error::Precondition("colon by the zero ideal".into()))?;
        let mut acc = self.colon_monomial(first);
        for g in it {
            acc = acc.intersect(&self.colon_monomial(g))?;
        }
        Ok(acc)
    }

    /// Number of monomials outside the ideal.
    pub fn length(&self) -> Result<BigInt> {
        if !self.is_origin_primary() {
            return Err(Error::NotOriginPrimary);
        }
        let gens: Vec<Vec<u32>> = self.gens.iter().map(|g| g.as_slice().to_vec()).collect();
        let mut memo = HashMap::new();
        Ok(BigInt::from(staircase(gens, &mut memo)))
    }

    /// Integral closure: lattice points of the Newton polyhedron.
    pub fn newton_closure(&self) -> MonomialIdeal {
        if self.gens.is_empty() || self.is_unit() {
            return self.clone();
        }
        let d = self.ring.dim();
        let bound: Vec<u32> = (0..d).map(|i| self.gens.iter().map(|g| g.get(i)).max().unwrap_or(0)).collect();
        let mut box_points: Vec<ExponentVector> = box_points(&bound).collect();
        box_points.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.as_slice().cmp(a.as_slice())));
        let mut found: Vec<ExponentVector> = Vec::new();
        for p in box_points {
            if found.iter().any(|f| f.divides(&p)) {
                continue;
            }
            if self.contains_monomial(&p) || self.in_newton_polyhedron(&p) {
                found.push(p);
            }
        }
        let closure = minimalize(&self.ring, found);
        debug_assert!(self.shell_is_covered(&closure, &bound));
        closure
    }

    pub fn is_complete(&self) -> bool {
        self.newton_closure() == *self
    }

    /// Whether `a ∈ conv(gens) + R^d_{≥0}`.
    pub fn in_newton_polyhedron(&self, a: &ExponentVector) -> bool {
        let k = self.gens.len();
        let mut cons = Vec::with_capacity(k + self.ring.dim() + 1);
        for j in 0..k {
            let mut c = vec![Rational::from_integer(0.into()); k];
            c[j] = Rational::from_integer(1.into());
            cons.push(LinearConstraint::new(c, Relation::Ge, Rational::from_integer(0.into())));
        }
        cons.push(LinearConstraint::new(
            vec![Rational::from_integer(1.into()); k],
            Relation::Eq,
            Rational::from_integer(1.into()),
        ));
        for i in 0..self.ring.dim() {
            let c = self.gens.iter().map(|g| Rational::from_integer(g.get(i).into())).collect();
            cons.push(LinearConstraint::new(c, Relation::Le, Rational::from_integer(a.get(i).into())));
        }
        lp_feasible(k, &cons).expect("well-formed constraints").is_feasible()
    }

    /// Points just outside the search box that lie in the polyhedron must
    /// already be multiples of a closure generator.
    fn shell_is_covered(&self, closure: &MonomialIdeal, bound: &[u32]) -> bool {
        let grown: Vec<u32> = bound.iter().map(|b| b + 1).collect();
        let covered = box_points(&grown)
            .filter(|p| (0..bound.len()).any(|i| p.get(i) == grown[i]))
            .take(512)
            .all(|p| !self.in_newton_polyhedron(&p) || closure.contains_monomial(&p));
        covered
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}

/// All exponent vectors of total degree `k` in `n` variables.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<ExponentVector> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i + 1 == n {
            cur.push(left);
            out.push(ExponentVector::from_slice(cur));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            go(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, k, &mut Vec::new(), &mut out);
    out
}

fn box_points(bound: &[u32]) -> impl Iterator<Item = ExponentVector> + '_ {
    let total: u64 = bound.iter().map(|&b| b as u64 + 1).product();
    (0..total).map(move |mut idx| {
        let mut e = Vec::with_capacity(bound.len());
        for &b in bound {
            let w = b as u64 + 1;
            e.push((idx % w) as u32);
            idx /= w;
        }
        ExponentVector::from_slice(&e)
    })
}

/// Staircase count: slice on the last variable's exponent. Slices only
/// change at exponents occurring in generators, so runs of equal slices
/// are counted once.
fn staircase(gens: Vec<Vec<u32>>, memo: &mut HashMap<Vec<Vec<u32>>, u128>) -> u128 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return 0;
    }
    let n = gens[0].len();
    if n == 1 {
        return gens.iter().map(|g| g[0]).min().expect("nonempty") as u128;
    }
    if let Some(&v) = memo.get(&gens) {
        return v;
    }
    let mut cuts: Vec<u32> = gens.iter().map(|g| g[n - 1]).collect();
    cuts.sort_unstable();
    cuts.dedup();
    let mut total = 0u128;
    for w in cuts.windows(2) {
        let (k, next) = (w[0], w[1]);
        let slice = minimal_slice(&gens, k);
        total += staircase(slice, memo) * (next - k) as u128;
    }
    // past the top cut the slice is the unit ideal
    memo.insert(gens, total);
    total
}

fn minimal_slice(gens: &[Vec<u32>], k: u32) -> Vec<Vec<u32>> {
    let n = gens[0].len();
    let mut slice: Vec<Vec<u32>> = gens.iter().filter(|g| g[n - 1] <= k).map(|g| g[..n - 1].to_vec()).collect();
    slice.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then_with(|| a.cmp(b)));
    slice.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for g in slice {
        if !kept.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            kept.push(g);
        }
    }
    kept
}
