use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::buchberger::{buchberger, reduce_full, Reducers};
use super::{ordered, OrderedPoly};
use crate::kernel::PrimeModulus;
use crate::poly::{ExponentVector, FieldKind, MonomialOrder, Polynomial, RingSpec, Scalar};
use crate::{Error, Result};

/// Reduced Gröbner basis for one monomial order; elements are monic and
/// sorted by ascending leading monomial.
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: Arc<RingSpec>,
    ordered: Vec<OrderedPoly>,
    reducers: Reducers,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    fn new(ring: &Arc<RingSpec>, order: MonomialOrder, ordered: Vec<OrderedPoly>) -> Self {
        let mut reducers = Reducers::default();
        for (i, g) in ordered.iter().enumerate() {
            reducers.push(g.lead().clone(), i);
        }
        let polys = ordered
            .iter()
            .map(|g| Polynomial::from_terms(ring, g.terms.iter().cloned()))
            .collect();
        GroebnerBasis { order, ring: ring.clone(), ordered, reducers, polys }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &ExponentVector> {
        self.ordered.iter().map(OrderedPoly::lead)
    }

    pub fn is_unit(&self) -> bool {
        self.ordered.len() == 1 && self.ordered[0].lead().is_one()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let r = reduce_full(f.sorted_terms(&self.order), &self.ordered, &self.reducers, &self.order);
        Polynomial::from_terms(&self.ring, r)
    }
}

/// Monomials outside the leading-term ideal, i.e. a basis of `k[x]/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialSet {
    monomials: Vec<ExponentVector>,
}

impl StandardMonomialSet {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.monomials.binary_search(e).is_ok()
    }
}

struct IdealInner {
    ring: Arc<RingSpec>,
    gens: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

/// An ideal given by generators, with lazily computed reduced Gröbner bases
/// cached per monomial order. Cloning shares the cache.
#[derive(Clone)]
pub struct Ideal {
    inner: Arc<IdealInner>,
}

fn canonical_gens(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    gens.retain(|g| !g.is_zero());
    let key = |g: &Polynomial| g.leading_term(&MonomialOrder::Grevlex).map(|(e, _)| e.clone());
    gens.sort_by(|a, b| {
        let (la, lb) = (key(a).unwrap(), key(b).unwrap());
        MonomialOrder::Grevlex
            .cmp(&la, &lb)
            .then_with(|| a.terms().len().cmp(&b.terms().len()))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    gens.dedup();
    // drop monomial generators that are multiples of other monomial generators
    let monos: Vec<ExponentVector> = gens
        .iter()
        .filter(|g| g.is_monomial())
        .map(|g| g.terms()[0].0.clone())
        .collect();
    gens.retain(|g| {
        !g.is_monomial() || {
            let e = &g.terms()[0].0;
            !monos.iter().any(|m| m != e && m.divides(e))
        }
    });
    gens
}

impl Ideal {
    pub fn new(ring: &Arc<RingSpec>, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !crate::poly::polynomial_same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_parts(ring, canonical_gens(gens)))
    }

    fn from_parts(ring: &Arc<RingSpec>, gens: Vec<Polynomial>) -> Self {
        Ideal {
            inner: Arc::new(IdealInner {
                ring: ring.clone(),
                gens,
                cache: RwLock::new(HashMap::new()),
            }),
        }
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal(ring: &Arc<RingSpec>) -> Self {
        let gens = (0..ring.dim()).map(|i| Polynomial::var(ring, i)).collect();
        Self::from_parts(ring, canonical_gens(gens))
    }

    pub fn unit(ring: &Arc<RingSpec>) -> Self {
        Self::from_parts(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.inner.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    pub fn is_zero(&self) -> bool {
        self.inner.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.inner.gens.iter().all(Polynomial::is_monomial)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if crate::poly::polynomial_same_ring(self.ring(), other.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if crate::poly::polynomial_same_ring(self.ring(), f.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.inner.cache.read().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let gens = self.inner.gens.iter().map(|g| ordered(g, order)).collect();
        let basis = buchberger(gens, order)?;
        let gb = Arc::new(GroebnerBasis::new(self.ring(), order.clone(), basis));
        // a concurrent duplicate computation produced the same basis
        self.inner
            .cache
            .write()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(&MonomialOrder::Grevlex)
    }

    fn seed_basis(&self, order: MonomialOrder, basis: Vec<OrderedPoly>) {
        let gb = Arc::new(GroebnerBasis::new(self.ring(), order.clone(), basis));
        self.inner.cache.write().expect("cache lock").insert(order, gb);
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_poly(f)?;
        Ok(self.gb()?.reduce(f))
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let gb = self.gb()?;
        Ok(other.gens().iter().all(|g| gb.reduce(g).is_zero()))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let (a, b) = (self.gb()?, other.gb()?);
        Ok(a.polys() == b.polys())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = self.gens().iter().chain(other.gens()).cloned().collect();
        Ok(Self::from_parts(self.ring(), canonical_gens(gens)))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens().len() * other.gens().len());
        for f in self.gens() {
            for g in other.gens() {
                gens.push(f.checked_mul(g)?);
            }
        }
        Ok(Self::from_parts(self.ring(), canonical_gens(gens)))
    }

    /// `I^k`, with `I^0` the unit ideal.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(self.ring());
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Ideal generated by `f * g` for the generators `g`.
    pub fn scale(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        let gens = self.gens().iter().map(|g| f * g).collect();
        Ok(Self::from_parts(self.ring(), canonical_gens(gens)))
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::from_parts(self.ring(), Vec::new()));
        }
        if self.contains(other)? {
            return Ok(other.clone());
        }
        if other.contains(self)? {
            return Ok(self.clone());
        }
        let ring = self.ring();
        let ext = Arc::new(ring.with_leading_vars(&["t__elim"]));
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let order = MonomialOrder::block(1, MonomialOrder::Grevlex);
        let mut gens: Vec<OrderedPoly> = Vec::new();
        for f in self.gens() {
            gens.push(ordered(&(&t * &f.lift(&ext, 1)), &order));
        }
        for g in other.gens() {
            gens.push(ordered(&(&one_minus_t * &g.lift(&ext, 1)), &order));
        }
        let basis = buchberger(gens, &order)?;
        let mut kept: Vec<OrderedPoly> = Vec::new();
        for g in basis {
            if g.lead().get(0) == 0 {
                kept.push(OrderedPoly {
                    terms: g.terms.into_iter().map(|(e, c)| (e.drop_leading(1), c)).collect(),
                });
            }
        }
        // t-free part of a block-order basis is a reduced grevlex basis of I ∩ J
        let gens = kept
            .iter()
            .map(|g| Polynomial::from_terms(ring, g.terms.iter().cloned()))
            .collect();
        let result = Self::from_parts(ring, canonical_gens(gens));
        result.seed_basis(MonomialOrder::Grevlex, kept);
        debug_assert!(self.contains(&result)? && other.contains(&result)?);
        Ok(result)
    }

    /// `(I : g)`, computed as `(I ∩ (g)) / g`.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        self.check_poly(g)?;
        if g.is_zero() {
            return Err(Error::Precondition("colon by the zero polynomial".into()));
        }
        let principal = Self::from_parts(self.ring(), vec![g.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens()
            .iter()
            .map(|h| exact_quotient(h, g).expect("generator of I ∩ (g) is divisible by g"))
            .collect();
        Ok(Self::from_parts(self.ring(), canonical_gens(gens)))
    }

    /// `(I : J) = ∩_g (I : g)` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::Precondition("colon by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in other.gens() {
            let q = self.colon_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// Monomials outside `LT(I)` for grevlex; errors unless the set is finite.
    pub fn standard_monomials(&self) -> Result<StandardMonomialSet> {
        self.standard_monomials_for(&MonomialOrder::Grevlex)
    }

    pub fn standard_monomials_for(&self, order: &MonomialOrder) -> Result<StandardMonomialSet> {
        let gb = self.groebner_basis(order)?;
        if gb.is_unit() {
            return Ok(StandardMonomialSet { monomials: Vec::new() });
        }
        let leads: Vec<ExponentVector> = gb.leading_monomials().cloned().collect();
        let n = self.ring().dim();
        let mut bounds = vec![None; n];
        for l in &leads {
            if let Some((i, e)) = l.pure_power() {
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        if bounds.iter().any(Option::is_none) || self.is_zero() {
            return Err(Error::NotZeroDimensional);
        }
        let mut out = Vec::new();
        let mut cur = ExponentVector::zero(n);
        enumerate_staircase(&leads, 0, &mut cur, &mut out);
        out.sort();
        Ok(StandardMonomialSet { monomials: out })
    }

    /// True iff `k[x]/I` is finite-dimensional, nonzero, and every variable
    /// is nilpotent in it (so `I` is supported only at the origin).
    pub fn is_origin_primary(&self) -> Result<bool> {
        let std = match self.standard_monomials() {
            Ok(s) => s,
            Err(Error::NotZeroDimensional) => return Ok(false),
            Err(e) => return Err(e),
        };
        let len = std.len() as u64;
        if len == 0 {
            return Ok(false);
        }
        let gb = self.gb()?;
        for i in 0..self.ring().dim() {
            if !power_reduces_to_zero(&gb, &Polynomial::var(self.ring(), i), len) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

const ISOLATION_CHECK_AFTER: u32 = 16;

impl Ideal {
    /// Image over `GF(p)`, or `None` if a denominator vanishes mod `p`.
    /// Used only to filter search candidates cheaply.
    pub fn modular_image(&self, p: PrimeModulus) -> Option<Ideal> {
        let field = FieldKind::Prime(p);
        if self.ring().field().is_modular() {
            return Some(self.clone());
        }
        let ring = Arc::new(self.ring().with_field(field));
        let mut gens = Vec::with_capacity(self.gens().len());
        for g in self.gens() {
            let mut terms = Vec::with_capacity(g.num_terms());
            for (e, c) in g.terms() {
                let Scalar::Rat(q) = c else { return None };
                let den = field.from_bigint(q.denom());
                if den.is_zero() {
                    return None;
                }
                terms.push((e.clone(), field.from_bigint(q.numer()).div(&den)));
            }
            gens.push(Polynomial::from_terms(&ring, terms));
        }
        Ideal::new(&ring, gens).ok()
    }

    /// `I : x_k^∞` by eliminating `t` from `I + (1 - t x_k)`.
    pub fn saturate_var(&self, k: usize) -> Result<Ideal> {
        let ring = self.ring();
        let ext = Arc::new(ring.with_leading_vars(&["t__elim"]));
        let t = Polynomial::var(&ext, 0);
        let xk = Polynomial::var(&ext, k + 1);
        let order = MonomialOrder::block(1, MonomialOrder::Grevlex);
        let mut gens: Vec<OrderedPoly> = self.gens().iter().map(|f| ordered(&f.lift(&ext, 1), &order)).collect();
        gens.push(ordered(&(&Polynomial::one(&ext) - &(&t * &xk)), &order));
        let basis = buchberger(gens, &order)?;
        let kept: Vec<Polynomial> = basis
            .into_iter()
            .filter(|g| g.lead().get(0) == 0)
            .map(|g| Polynomial::from_terms(ring, g.terms.into_iter().map(|(e, c)| (e.drop_leading(1), c))))
            .collect();
        Ok(Self::from_parts(ring, canonical_gens(kept)))
    }

    /// Whether the origin is not on a positive-dimensional component of
    /// `V(I)`. A component through the origin survives saturation by
    /// some variable, so this holds iff `I : x_k^∞ ⊄ m` for every `k`.
    pub fn origin_isolated(&self) -> Result<bool> {
        match self.standard_monomials() {
            Ok(_) => return Ok(true),
            Err(Error::NotZeroDimensional) => {}
            Err(e) => return Err(e),
        }
        if self.is_zero() {
            return Ok(false);
        }
        for k in 0..self.ring().dim() {
            if !self.saturate_var(k)?.gens().iter().any(|g| g.min_degree() == Some(0)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The m-primary component `Q` of an ideal whose zero set has the
    /// origin as an isolated point. With `l_k = ℓ(R/(I + m^k))`, the
    /// sequence increases strictly until it is constant, so `l_N < N`
    /// means `I + m^N` has stabilized and equals `Q`.
    pub fn local_component(&self) -> Result<Ideal> {
        if self.is_origin_primary()? {
            return Ok(self.clone());
        }
        let m = Ideal::maximal(self.ring());
        let mut n = 1;
        let mut isolated = false;
        loop {
            let q = self.sum(&m.power(n)?)?;
            if q.standard_monomials()?.len() < n as usize {
                return Ok(q);
            }
            n *= 2;
            // the isolation test is costly, so only run it once small truncations fail
            if n > ISOLATION_CHECK_AFTER && !isolated {
                if !self.origin_isolated()? {
                    return Err(Error::NotOriginPrimary);
                }
                isolated = true;
            }
        }
    }

    /// `dim_k R_m / I R_m` for the localization at the origin.
    pub fn local_length(&self) -> Result<usize> {
        Ok(self.local_component()?.standard_monomials()?.len())
    }

    /// The local length if it is at most `bound`, from one truncation.
    pub fn local_length_at_most(&self, bound: usize) -> Result<Option<usize>> {
        let m = Ideal::maximal(self.ring());
        let q = self.sum(&m.power(bound as u32 + 1)?)?;
        let len = q.standard_monomials()?.len();
        Ok((len <= bound).then_some(len))
    }
}

/// Whether `f^k` reduces to zero, by square-and-multiply modulo the basis.
fn power_reduces_to_zero(gb: &GroebnerBasis, f: &Polynomial, k: u64) -> bool {
    let mut base = gb.reduce(f);
    let mut acc = gb.reduce(&Polynomial::one(f.ring()));
    let mut k = k;
    while k > 0 && !acc.is_zero() {
        if k & 1 == 1 {
            acc = gb.reduce(&(&acc * &base));
        }
        k >>= 1;
        if k > 0 {
            base = gb.reduce(&(&base * &base));
        }
    }
    acc.is_zero()
}

fn enumerate_staircase(leads: &[ExponentVector], var: usize, cur: &mut ExponentVector, out: &mut Vec<ExponentVector>) {
    let n = cur.len();
    loop {
        if leads.iter().any(|l| l.divides(cur)) {
            break;
        }
        if var + 1 == n {
            out.push(cur.clone());
        } else {
            enumerate_staircase(leads, var + 1, cur, out);
        }
        cur.set(var, cur.get(var) + 1);
    }
    cur.set(var, 0);
}

/// `f / g` when `g` divides `f` exactly.
pub(crate) fn exact_quotient(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let order = MonomialOrder::Grevlex;
    let gs = ordered(g, &order);
    let (gl, gc) = (gs.lead().clone(), gs.lead_coeff().clone());
    let mut rem = f.sorted_terms(&order);
    let mut quot = Vec::new();
    while let Some((e, c)) = rem.first().cloned() {
        if !gl.divides(&e) {
            return None;
        }
        let m = e.div(&gl);
        let q = c.div(&gc);
        rem = super::buchberger::sub_mul(&rem, &gs.terms, &m, &q, &order);
        quot.push((m, q));
    }
    Some(Polynomial::from_terms(f.ring(), quot))
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens().iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}
