use std::collections::{BTreeMap, HashMap};

use crate::groebner::Ideal;
use crate::kernel::{BigInt, PrimeModulus, DEFAULT_PRIME};
use crate::monomial::MonomialIdeal;
use crate::multiplicity::{mu, order, param_multiplicity, BhattacharyaForm, Working};
use crate::poly::{ExponentVector, Polynomial, Scalar};
use crate::{Error, Result};

use super::reduction::{combination, Candidates, PoolDraws, SEARCH_SEED, SPARSE_CANDIDATES};

pub const DEFAULT_JOINT_BOUND: u32 = 4;
pub const DEFAULT_COLON_BOUND: u32 = 5;

/// Whether `L R_m = P R_m` for `L ⊆ P` with `P` m-primary. By Nakayama
/// this is `P ⊆ L + mP`, an identity between m-primary ideals. Returns
/// the generators of `P` that fail.
pub fn local_equality_failures(sub: &Ideal, primary: &Ideal) -> Result<Vec<Polynomial>> {
    if let Some(mono) = MonomialIdeal::from_ideal(primary) {
        return Ok(span_failures(sub.gens(), &mono));
    }
    let m = Ideal::maximal(primary.ring());
    let mp = Working::new(&m).product(&Working::new(primary))?.to_ideal();
    let big = sub.sum(&mp)?;
    let gb = big.gb()?;
    Ok(primary.gens().iter().filter(|g| !gb.reduce(g).is_zero()).cloned().collect())
}

fn local_equality_gens(sub: &[Polynomial], primary: &Working) -> Result<bool> {
    match primary {
        Working::Monomial(p) => Ok(span_failures(sub, p).is_empty()),
        Working::General(p) => {
            let sub = Ideal::new(p.ring(), sub.to_vec())?;
            Ok(local_equality_failures(&sub, p)?.is_empty())
        }
    }
}

type SparseRow = BTreeMap<usize, Scalar>;

fn reduce_row(row: &mut SparseRow, pivots: &[Option<SparseRow>]) {
    let mut from = 0;
    while let Some((k, c)) = row.range(from..).find(|(k, _)| pivots[**k].is_some()).map(|(k, c)| (*k, c.clone())) {
        for (j, v) in pivots[k].as_ref().expect("pivot") {
            let e = row.entry(*j).or_insert_with(|| c.sub(&c));
            *e = e.sub(&c.mul(v));
            if e.is_zero() {
                row.remove(j);
            }
        }
        from = k + 1;
    }
}

/// For monomial `P`, `P/mP` has the minimal generators of `P` as a basis
/// and `L + mP = P` iff the images of the generators of `L` span it.
fn span_failures(sub: &[Polynomial], primary: &MonomialIdeal) -> Vec<Polynomial> {
    let cols: HashMap<&ExponentVector, usize> = primary.gens().iter().enumerate().map(|(k, g)| (g, k)).collect();
    let n = cols.len();
    let mut pivots: Vec<Option<SparseRow>> = vec![None; n];
    let mut rank = 0;
    for f in sub {
        if rank == n {
            break;
        }
        let mut row: SparseRow = f.terms().iter().filter_map(|(e, c)| cols.get(e).map(|&k| (k, c.clone()))).collect();
        reduce_row(&mut row, &pivots);
        if let Some((&k, c)) = row.iter().next() {
            let inv = c.inv();
            let row: SparseRow = row.iter().map(|(j, v)| (*j, v.mul(&inv))).collect();
            pivots[k] = Some(row);
            rank += 1;
        }
    }
    if rank == n {
        return Vec::new();
    }
    let ring = primary.ring();
    let one = ring.field().one();
    primary
        .gens()
        .iter()
        .enumerate()
        .filter(|(k, _)| {
            let mut row: SparseRow = [(*k, one.clone())].into_iter().collect();
            reduce_row(&mut row, &pivots);
            !row.is_empty()
        })
        .map(|(_, g)| Polynomial::monomial(ring, g.clone(), one.clone()))
        .collect()
}

fn products(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    a.iter().flat_map(|f| b.iter().map(move |g| f * g)).collect()
}

fn gens_of(w: &Working) -> Vec<Polynomial> {
    w.to_ideal().gens().to_vec()
}

/// Elements `x ∈ m`, `a_1..a_{d−1} ∈ I` meeting the joint reduction
/// identity for `(m, I, …, I)` at exponent `n`.
#[derive(Clone, Debug)]
pub struct JointReductionCertificate {
    pub x: Polynomial,
    pub a: Vec<Polynomial>,
    pub n: u32,
    /// Copies of `m` and of `I` in the multiset.
    pub copies: (u32, u32),
}

impl JointReductionCertificate {
    /// `(x, a_1, …, a_{d−1})`.
    pub fn ideal(&self) -> Result<Ideal> {
        let mut gens = vec![self.x.clone()];
        gens.extend(self.a.iter().cloned());
        Ideal::new(self.x.ring(), gens)
    }
}

/// `[x I^(d−1) + (a) m I^(d−2)] (m I^(d−1))^(n−1) = (m I^(d−1))^n` in `R_m`.
fn joint_identity_at(i: &Working, x: &Polynomial, a: &[Polynomial], n: u32) -> Result<bool> {
    let d = x.ring().dim() as u32;
    let m = Working::maximal(i);
    let full = m.product(&i.power(d - 1)?)?;
    let mut sum = products(&[x.clone()], &gens_of(&i.power(d - 1)?));
    sum.extend(products(a, &gens_of(&m.product(&i.power(d - 2)?)?)));
    let lhs = if n == 1 { sum } else { products(&sum, &gens_of(&full.power(n - 1)?)) };
    local_equality_gens(&lhs, &full.power(n)?)
}

pub fn joint_reduction_verify(
    x: &Polynomial,
    a: &[Polynomial],
    i: &Ideal,
    n_max: u32,
) -> Result<Option<JointReductionCertificate>> {
    let d = i.ring().dim();
    if d < 2 || a.len() != d - 1 {
        return Err(Error::Precondition(format!("need {} elements of I in dimension {d}", d.saturating_sub(1))));
    }
    if x.is_zero() || x.min_degree() == Some(0) {
        return Err(Error::Precondition("x must lie in m".into()));
    }
    for g in a {
        if !i.contains_poly(g)? {
            return Err(Error::Precondition(format!("{g} is not in I")));
        }
    }
    let w = Working::new(i);
    for n in 1..=n_max {
        if joint_identity_at(&w, x, a, n)? {
            return Ok(Some(JointReductionCertificate {
                x: x.clone(),
                a: a.to_vec(),
                n,
                copies: (1, d as u32 - 1),
            }));
        }
    }
    Ok(None)
}

fn local_length_is(candidate: &Ideal, target: usize) -> Result<bool> {
    Ok(candidate.local_length_at_most(target)? == Some(target))
}

/// Candidates: `a` runs over [`Candidates`] tuples of `d−1` elements of
/// `I`; for sparse tuples `x` is the sum of the variables or a single
/// variable, for dense ones a pooled linear form. With
/// `e_target = e_{d−1}(m|I)` known, only candidates with
/// `e((x, a)) = e_target`, first over `GF(p)` and then exactly, are verified.
pub fn joint_reduction_search(
    i: &Ideal,
    pool: &[i64],
    attempts: usize,
    n_max: u32,
    e_target: Option<&BigInt>,
) -> Result<Option<JointReductionCertificate>> {
    let ring = i.ring();
    let d = ring.dim();
    if d < 2 {
        return Err(Error::Precondition("joint reductions need dimension at least 2".into()));
    }
    let vars: Vec<Polynomial> = (0..d).map(|k| Polynomial::var(ring, k)).collect();
    let mut xs = vec![combination(&vars, &vec![1; d])];
    xs.extend(vars.iter().cloned());
    let mut draws = PoolDraws::new(pool, SEARCH_SEED ^ 0x1);
    let target = match e_target.map(usize::try_from) {
        Some(Ok(t)) => Some(t),
        Some(Err(_)) => return Ok(None),
        None => None,
    };
    let prime = PrimeModulus::new(DEFAULT_PRIME as u64).expect("prime");
    let mut tuples = Candidates::new(i.gens(), d - 1, pool, SEARCH_SEED ^ 0x1, attempts);
    let mut sparse = SPARSE_CANDIDATES.min(tuples.sparse_len());
    while let Some(a) = tuples.next() {
        let x_choices = if sparse > 0 {
            sparse -= 1;
            xs.clone()
        } else {
            vec![combination(&vars, &draws.draw(d))]
        };
        if a.iter().any(Polynomial::is_zero) {
            continue;
        }
        for x in x_choices {
            let mut gens = vec![x.clone()];
            gens.extend(a.iter().cloned());
            let candidate = Ideal::new(ring, gens)?;
            let keep = match target {
                Some(t) => {
                    let cheap = match candidate.modular_image(prime) {
                        Some(img) => local_length_is(&img, t)?,
                        None => true,
                    };
                    cheap && local_length_is(&candidate, t)?
                }
                None => match param_multiplicity(&candidate) {
                    Ok(_) => true,
                    Err(Error::NotParameterIdeal(_)) => false,
                    Err(e) => return Err(e),
                },
            };
            if !keep {
                continue;
            }
            if let Some(cert) = joint_reduction_verify(&x, &a, i, n_max)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// One of the per-`n` identities recorded alongside the mmm check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterateIdentity {
    pub n: u32,
    /// `m I^n = x I^n + (a) m I^(n−1)`.
    pub plain: bool,
    /// `m I^n = x I^n + (a^n) m`.
    pub powered: bool,
}

#[derive(Clone, Debug)]
pub struct MmmReport {
    pub is_mmm: bool,
    pub mu: BigInt,
    /// `e_{d−1}(m|I)`.
    pub e_top: BigInt,
    /// `m I = x I + (a) m` for the supplied joint reduction.
    pub identity: Option<bool>,
    pub iterates: Vec<IterateIdentity>,
}

fn mm_identity(i: &Working, x: &Polynomial, a: &[Polynomial], n: u32, powered: bool) -> Result<bool> {
    let m = Working::maximal(i);
    let i_n = i.power(n)?;
    let mut sub = products(&[x.clone()], &gens_of(&i_n));
    if powered {
        let a_n: Vec<Polynomial> = a.iter().map(|g| g.pow(n)).collect();
        sub.extend(products(&a_n, &gens_of(&m)));
    } else {
        sub.extend(products(a, &gens_of(&m.product(&i.power(n - 1)?)?)));
    }
    local_equality_gens(&sub, &m.product(&i_n)?)
}

pub fn mmm_check(
    i: &Ideal,
    form: &BhattacharyaForm,
    joint: Option<&JointReductionCertificate>,
    iterate_bound: u32,
) -> Result<MmmReport> {
    let d = i.ring().dim() as u32;
    let mu_i = mu(i)?.value;
    let e_top = form.mixed(d - 1);
    let is_mmm = mu_i == &e_top + BigInt::from(d - 1);
    let mut identity = None;
    let mut iterates = Vec::new();
    if let (true, Some(jr)) = (is_mmm, joint) {
        let w = Working::new(i);
        identity = Some(mm_identity(&w, &jr.x, &jr.a, 1, false)?);
        for n in 1..=iterate_bound {
            iterates.push(IterateIdentity {
                n,
                plain: mm_identity(&w, &jr.x, &jr.a, n, false)?,
                powered: mm_identity(&w, &jr.x, &jr.a, n, true)?,
            });
        }
    }
    Ok(MmmReport { is_mmm, mu: mu_i, e_top, identity, iterates })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedReport {
    pub is_contracted: bool,
    pub mu: BigInt,
    pub order: u64,
}

/// `μ(I) = o(I) + 1` in dimension 2.
pub fn contracted_check_2d(i: &Ideal) -> Result<ContractedReport> {
    if i.ring().dim() != 2 {
        return Err(Error::Precondition("contractedness test needs dimension 2".into()));
    }
    let mu_i = mu(i)?.value;
    let o = order(i)?;
    Ok(ContractedReport { is_contracted: mu_i == BigInt::from(o + 1), mu: mu_i, order: o })
}

#[derive(Clone, Debug)]
pub struct H1Report {
    pub n: u32,
    pub vanishes: bool,
    pub witness: Option<Polynomial>,
    /// Settled because the denominator already equals `m I^n` locally.
    pub via_identity: bool,
}

/// `((x, a) ∩ m I^n) / (x I^n + (a) m I^(n−1))` vanishes in `R_m`.
pub fn h1_vanishing_check(i: &Ideal, x: &Polynomial, a: &[Polynomial], n: u32) -> Result<H1Report> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let w = Working::new(i);
    let m = Working::maximal(&w);
    let mi_n = m.product(&w.power(n)?)?;
    let mut small = products(&[x.clone()], &gens_of(&w.power(n)?));
    small.extend(products(a, &gens_of(&m.product(&w.power(n - 1)?)?)));
    // numerator sits between the denominator and m I^n
    if local_equality_gens(&small, &mi_n)? {
        return Ok(H1Report { n, vanishes: true, witness: None, via_identity: true });
    }
    h1_by_intersection(i, x, a, n)
}

/// The same quotient, always forming `(x, a) ∩ m I^n` explicitly.
pub fn h1_by_intersection(i: &Ideal, x: &Polynomial, a: &[Polynomial], n: u32) -> Result<H1Report> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let w = Working::new(i);
    let m = Working::maximal(&w);
    let mut small = products(&[x.clone()], &gens_of(&w.power(n)?));
    small.extend(products(a, &gens_of(&m.product(&w.power(n - 1)?)?)));
    let mut gens = vec![x.clone()];
    gens.extend(a.iter().cloned());
    let xa = Ideal::new(i.ring(), gens)?.local_component()?;
    let mi_n = m.product(&w.power(n)?)?.to_ideal();
    let big = xa.intersect(&mi_n)?;
    let small = Ideal::new(i.ring(), small)?;
    let mi_gb = mi_n.gb()?;
    assert!(small.gens().iter().all(|g| mi_gb.reduce(g).is_zero()), "H1 denominator escapes m I^n");
    let failures = local_equality_failures(&small, &big)?;
    Ok(H1Report { n, vanishes: failures.is_empty(), witness: failures.into_iter().next(), via_identity: false })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonStep {
    pub n: u32,
    pub holds: bool,
}

/// `(I^n : a) = I^(n−1)` for `n = 1..=n_max`.
pub fn colon_power_check(i: &Ideal, a: &Polynomial, n_max: u32) -> Result<Vec<ColonStep>> {
    if !i.is_origin_primary()? {
        return Err(Error::NotOriginPrimary);
    }
    if !i.contains_poly(a)? {
        return Err(Error::Precondition(format!("{a} is not in I")));
    }
    let w = Working::new(i);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let colon = w.power(n)?.to_ideal().colon_poly(a)?;
        let prev = w.power(n - 1)?.to_ideal();
        out.push(ColonStep { n, holds: colon.equals(&prev)? });
    }
    Ok(out)
}
