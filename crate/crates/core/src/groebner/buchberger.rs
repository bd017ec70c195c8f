use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use crate::poly::{ExponentVector, MonomialOrder, Scalar};
use crate::{Error, Result};

static TIMEOUT_MS: AtomicU64 = AtomicU64::new(0);

/// Sets the per-call watchdog for Gröbner basis computations
/// (`None` disables it). Applies process-wide.
pub fn set_groebner_timeout(limit: Option<Duration>) {
    let ms = limit.map_or(0, |d| d.as_millis().max(1) as u64);
    TIMEOUT_MS.store(ms, AtomicOrdering::Relaxed);
}

pub fn groebner_timeout() -> Option<Duration> {
    match TIMEOUT_MS.load(AtomicOrdering::Relaxed) {
        0 => None,
        ms => Some(Duration::from_millis(ms)),
    }
}

/// Polynomial with terms sorted in descending order for a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OrderedPoly {
    pub terms: Vec<(ExponentVector, Scalar)>,
}

impl OrderedPoly {
    pub fn lead(&self) -> &ExponentVector {
        &self.terms[0].0
    }

    pub fn lead_coeff(&self) -> &Scalar {
        &self.terms[0].1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.terms[0].1.is_one() {
            return;
        }
        let inv = self.terms[0].1.inv();
        for (_, c) in self.terms.iter_mut() {
            *c = c.mul(&inv);
        }
    }
}

/// `a - c * x^m * b` for descending-sorted `a` and `b`.
pub(crate) fn sub_mul(
    a: &[(ExponentVector, Scalar)],
    b: &[(ExponentVector, Scalar)],
    m: &ExponentVector,
    c: &Scalar,
    order: &MonomialOrder,
) -> Vec<(ExponentVector, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(e, x)| (e.mul(m), x.mul(c))).peekable();
    while i < a.len() {
        match bi.peek() {
            None => {
                out.extend_from_slice(&a[i..]);
                return out;
            }
            Some((eb, _)) => match order.cmp(&a[i].0, eb) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (e, x) = bi.next().unwrap();
                    out.push((e, x.neg()));
                }
                Ordering::Equal => {
                    let (e, x) = bi.next().unwrap();
                    let v = a[i].1.sub(&x);
                    if !v.is_zero() {
                        out.push((e, v));
                    }
                    i += 1;
                }
            },
        }
    }
    out.extend(bi.map(|(e, x)| (e, x.neg())));
    out
}

fn support_mask(e: &ExponentVector) -> u64 {
    e.as_slice()
        .iter()
        .enumerate()
        .fold(0u64, |m, (i, &x)| if x > 0 { m | (1 << (i % 64)) } else { m })
}

/// Lead-monomial index for reducer lookup.
#[derive(Default)]
pub(crate) struct Reducers {
    leads: Vec<(ExponentVector, u64, usize)>,
}

impl Reducers {
    pub fn push(&mut self, lead: ExponentVector, idx: usize) {
        let mask = support_mask(&lead);
        self.leads.push((lead, mask, idx));
    }

    pub fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        self.leads.retain(|(_, _, i)| keep(*i));
    }

    pub fn find(&self, e: &ExponentVector) -> Option<usize> {
        let mask = support_mask(e);
        self.leads
            .iter()
            .find(|(l, lm, _)| lm & !mask == 0 && l.divides(e))
            .map(|(_, _, i)| *i)
    }
}

/// Fully reduces `p` by the polynomials indexed in `reducers`; `polys[i]`
/// must be monic.
pub(crate) fn reduce_full(
    mut p: Vec<(ExponentVector, Scalar)>,
    polys: &[OrderedPoly],
    reducers: &Reducers,
    order: &MonomialOrder,
) -> Vec<(ExponentVector, Scalar)> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (e, c) = &p[start];
        match reducers.find(e) {
            Some(k) => {
                let g = &polys[k];
                let m = e.div(g.lead());
                let c = c.div(g.lead_coeff());
                p = sub_mul(&p[start..], &g.terms, &m, &c, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
    sugar: u64,
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<OrderedPoly>,
    sugar: Vec<u64>,
    active: Vec<bool>,
    reducers: Reducers,
    pairs: Vec<Pair>,
}

impl State<'_> {
    /// Adds a reduced monic `h` and updates the pair set (Gebauer–Möller).
    fn insert(&mut self, h: OrderedPoly, sugar: u64) {
        let k = self.polys.len();
        let hl = h.lead().clone();
        let h_mono = h.terms.len() == 1;
        let cands: Vec<(usize, ExponentVector)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| (i, self.polys[i].lead().lcm(&hl)))
            .collect();
        let mut kept: Vec<(usize, ExponentVector)> = Vec::new();
        for (idx, (i, l)) in cands.iter().enumerate() {
            let coprime = self.polys[*i].lead().is_coprime(&hl);
            let dominated = cands[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*i, l.clone()));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && polys[p.i].lead().lcm(&hl) != p.lcm
                && polys[p.j].lead().lcm(&hl) != p.lcm)
        });
        for (i, l) in kept {
            let gi = &self.polys[i];
            if gi.lead().is_coprime(&hl) {
                continue;
            }
            if h_mono && gi.terms.len() == 1 {
                // S-polynomial of two monomials vanishes
                continue;
            }
            let di = l.degree() - gi.lead().degree();
            let dk = l.degree() - hl.degree();
            let s = (self.sugar[i] + di).max(sugar + dk);
            self.pairs.push(Pair { i, j: k, lcm: l, sugar: s });
        }
        for i in 0..k {
            if self.active[i] && hl.divides(self.polys[i].lead()) {
                self.active[i] = false;
            }
        }
        let active = &self.active;
        self.reducers.retain(|i| active[i]);
        self.reducers.push(hl, k);
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
    }

    fn reduce(&self, p: Vec<(ExponentVector, Scalar)>) -> Option<OrderedPoly> {
        let r = reduce_full(p, &self.polys, &self.reducers, self.order);
        if r.is_empty() {
            return None;
        }
        let mut h = OrderedPoly { terms: r };
        h.make_monic();
        Some(h)
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, pair: &Pair) -> Vec<(ExponentVector, Scalar)> {
        let (gi, gj) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mi = pair.lcm.div(gi.lead());
        let mj = pair.lcm.div(gj.lead());
        let lhs: Vec<_> = gi.terms[1..].iter().map(|(e, c)| (e.mul(&mi), c.clone())).collect();
        // both leads are monic, so the multiplier of gj is one
        sub_mul(&lhs, &gj.terms[1..], &mj, gj.lead_coeff(), self.order)
    }
}

/// Reduced Gröbner basis of the given generators, each sorted for `order`.
/// The output is sorted by ascending leading monomial.
pub(crate) fn buchberger(gens: Vec<OrderedPoly>, order: &MonomialOrder) -> Result<Vec<OrderedPoly>> {
    buchberger_limited(gens, order, groebner_timeout())
}

pub(crate) fn buchberger_limited(
    gens: Vec<OrderedPoly>,
    order: &MonomialOrder,
    limit: Option<Duration>,
) -> Result<Vec<OrderedPoly>> {
    let started = Instant::now();
    let mut steps = 0usize;
    let mut tick = || -> Result<()> {
        steps += 1;
        if let Some(l) = limit {
            if started.elapsed() > l {
                return Err(Error::Timeout(l));
            }
        }
        Ok(())
    };

    let mut gens: Vec<OrderedPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    gens.sort_by(|a, b| order.cmp(a.lead(), b.lead()).then_with(|| a.terms.len().cmp(&b.terms.len())));

    let mut st = State {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        reducers: Reducers::default(),
        pairs: Vec::new(),
    };

    for g in gens {
        tick()?;
        let sugar = g.terms.iter().map(|(e, _)| e.degree()).max().unwrap_or(0);
        if let Some(h) = st.reduce(g.terms) {
            if h.lead().is_one() {
                return Ok(vec![h]);
            }
            st.insert(h, sugar);
        }
    }

    while let Some(pair) = st.next_pair() {
        tick()?;
        let s = st.s_poly(&pair);
        if let Some(h) = st.reduce(s) {
            if h.lead().is_one() {
                return Ok(vec![h]);
            }
            st.insert(h, pair.sugar);
        }
    }

    let basis: Vec<OrderedPoly> = st
        .polys
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    Ok(interreduce(basis, order))
}

/// Tail-reduces a basis whose leading monomials form an antichain.
fn interreduce(basis: Vec<OrderedPoly>, order: &MonomialOrder) -> Vec<OrderedPoly> {
    let mut out = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let mut others = Reducers::default();
        for (i, o) in basis.iter().enumerate() {
            if i != k {
                others.push(o.lead().clone(), i);
            }
        }
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(reduce_full(g.terms[1..].to_vec(), &basis, &others, order));
        out.push(OrderedPoly { terms });
    }
    out.sort_by(|a, b| order.cmp(a.lead(), b.lead()));
    out
}
