use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::groebner::Ideal;
use crate::kernel::{BigInt, PrimeModulus, DEFAULT_PRIME};
use crate::multiplicity::{length, mu, Working};
use crate::poly::Polynomial;
use crate::{Error, Result};

pub const DEFAULT_POOL: [i64; 5] = [1, 2, 3, -1, -2];
pub const DEFAULT_REDUCTION_BOUND: u32 = 6;
pub const SEARCH_SEED: u64 = 0x5eed_b10c;

/// `J ⊆ I` with `J I^r = I^(r+1)` and `r` least.
#[derive(Clone, Debug)]
pub struct ReductionCertificate {
    pub i: Ideal,
    pub j: Ideal,
    pub r: u32,
    pub n_max: u32,
    /// `μ(J) = d`.
    pub minimal: bool,
}

fn reduces_at(i: &Working, j: &Working, r: u32) -> Result<bool> {
    let lhs = j.product(&i.power(r)?)?.to_ideal();
    let rhs = i.power(r + 1)?.to_ideal();
    lhs.contains(&rhs)
}

pub fn reduction_number(i: &Ideal, j: &Ideal, n_max: u32) -> Result<ReductionCertificate> {
    if !i.is_origin_primary()? || !j.is_origin_primary()? {
        return Err(Error::NotOriginPrimary);
    }
    if !i.contains(j)? {
        return Err(Error::Precondition("J is not contained in I".into()));
    }
    let (wi, wj) = (Working::new(i), Working::new(j));
    let r = (0..=n_max)
        .find_map(|r| match reduces_at(&wi, &wj, r) {
            Ok(true) => Some(Ok(r)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .ok_or(Error::NotCertified(n_max as usize))??;
    assert!(reduces_at(&wi, &wj, r + 1)?, "reduction equality must persist");
    let minimal = mu(j)?.value == BigInt::from(i.ring().dim());
    Ok(ReductionCertificate { i: i.clone(), j: j.clone(), r, n_max, minimal })
}

/// `Σ c_k g_k`.
pub fn combination(gens: &[Polynomial], coeffs: &[i64]) -> Polynomial {
    let ring = gens[0].ring();
    gens.iter().zip(coeffs).fold(Polynomial::zero(ring), |acc, (g, &c)| {
        &acc + &g.scale(&ring.field().from_int(c))
    })
}

/// Deterministic draws from a coefficient pool.
pub struct PoolDraws {
    rng: ChaCha8Rng,
    pool: Vec<i64>,
}

impl PoolDraws {
    pub fn new(pool: &[i64], seed: u64) -> Self {
        assert!(!pool.is_empty(), "empty coefficient pool");
        PoolDraws { rng: ChaCha8Rng::seed_from_u64(seed), pool: pool.to_vec() }
    }

    pub fn draw(&mut self, n: usize) -> Vec<i64> {
        (0..n).map(|_| *self.pool.choose(&mut self.rng).expect("nonempty")).collect()
    }
}

/// Cap on the sparse tuples tried before pooled dense draws.
pub const SPARSE_CANDIDATES: usize = 4000;

/// Deterministic `k`-tuples of elements of an ideal: first `k`-subsets of
/// the single generators and the sums of two generators, in lexicographic
/// order and capped at [`SPARSE_CANDIDATES`]; then `dense` tuples of
/// pooled combinations of all generators. Sparse candidates keep the
/// exact Gröbner computations small.
pub struct Candidates {
    elements: Vec<Polynomial>,
    gens: Vec<Polynomial>,
    k: usize,
    idx: Option<Vec<usize>>,
    sparse_left: usize,
    dense_left: usize,
    draws: PoolDraws,
}

impl Candidates {
    pub fn new(gens: &[Polynomial], k: usize, pool: &[i64], seed: u64, dense: usize) -> Self {
        let mut elements = gens.to_vec();
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                elements.push(&gens[a] + &gens[b]);
            }
        }
        let idx = (k <= elements.len()).then(|| (0..k).collect());
        Candidates {
            elements,
            gens: gens.to_vec(),
            k,
            idx,
            sparse_left: SPARSE_CANDIDATES,
            dense_left: dense,
            draws: PoolDraws::new(pool, seed),
        }
    }

    /// Number of sparse tuples this stream yields.
    pub fn sparse_len(&self) -> usize {
        let n = self.elements.len();
        if self.k > n {
            return 0;
        }
        // C(n, k), saturating
        let mut c: usize = 1;
        for t in 0..self.k {
            c = c.saturating_mul(n - t) / (t + 1);
        }
        c.min(SPARSE_CANDIDATES)
    }

    fn advance(&mut self) {
        let n = self.elements.len();
        let k = self.k;
        let Some(idx) = self.idx.as_mut() else { return };
        match (0..k).rev().find(|&i| idx[i] < n - k + i) {
            Some(i) => {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
            None => self.idx = None,
        }
    }
}

impl Iterator for Candidates {
    type Item = Vec<Polynomial>;

    fn next(&mut self) -> Option<Vec<Polynomial>> {
        if self.sparse_left > 0 {
            if let Some(idx) = &self.idx {
                let out = idx.iter().map(|&i| self.elements[i].clone()).collect();
                self.sparse_left -= 1;
                self.advance();
                return Some(out);
            }
        }
        if self.dense_left == 0 || self.gens.is_empty() {
            return None;
        }
        self.dense_left -= 1;
        let n = self.gens.len();
        Some((0..self.k).map(|_| combination(&self.gens, &self.draws.draw(n))).collect())
    }
}

/// Cheap necessary test over `GF(p)` before exact work; errs on the side
/// of keeping a candidate.
fn modular_length_matches(j: &Ideal, target: &BigInt) -> Result<bool> {
    let Some(img) = j.modular_image(PrimeModulus::new(DEFAULT_PRIME as u64).expect("prime")) else {
        return Ok(true);
    };
    Ok(match img.standard_monomials() {
        Ok(sm) => &BigInt::from(sm.len()) == target,
        Err(Error::NotZeroDimensional) => false,
        Err(e) => return Err(e),
    })
}

/// Searches for `d` elements of `I` forming a reduction. If `I` itself
/// has `d` generators it is tried first. When `e_top = e(I)` is known,
/// candidates with `ℓ(R/J) ≠ e(I)` are skipped without certification.
pub fn find_minimal_reduction(
    i: &Ideal,
    pool: &[i64],
    attempts: usize,
    n_max: u32,
    e_top: Option<&BigInt>,
) -> Result<Option<ReductionCertificate>> {
    if !i.is_origin_primary()? {
        return Err(Error::NotOriginPrimary);
    }
    let d = i.ring().dim();
    let gens = i.gens();
    if gens.len() == d {
        return reduction_number(i, i, n_max).map(Some);
    }
    for comb in Candidates::new(gens, d, pool, SEARCH_SEED, attempts) {
        let j = Ideal::new(i.ring(), comb)?;
        if j.gens().len() != d {
            continue;
        }
        if let Some(e) = e_top {
            if !modular_length_matches(&j, e)? {
                continue;
            }
        }
        if !j.is_origin_primary()? {
            continue;
        }
        if let Some(e) = e_top {
            if &length(&j)?.value != e {
                continue;
            }
        }
        match reduction_number(i, &j, n_max) {
            Ok(cert) => return Ok(Some(cert)),
            Err(Error::NotCertified(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Per-`n` outcome of `J ∩ I^n = J I^(n−1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VvStep {
    pub n: u32,
    pub holds: bool,
    /// `n > r`: implied by the reduction equality.
    pub from_certificate: bool,
}

#[derive(Clone, Debug)]
pub struct VvReport {
    pub steps: Vec<VvStep>,
    /// Minimal generators of `J ∩ I^n` outside `J I^(n−1)` at the first failure.
    pub witnesses: Vec<Polynomial>,
    pub first_failure: Option<u32>,
    /// All equalities up to `r_J(I)` hold.
    pub g_cohen_macaulay: bool,
}

pub fn default_vv_bound(r: u32) -> u32 {
    r + 2
}

pub fn vv_check(cert: &ReductionCertificate, n_max: u32) -> Result<VvReport> {
    if n_max < cert.r {
        return Err(Error::Precondition(format!("VV bound {n_max} below reduction number {}", cert.r)));
    }
    let (wi, wj) = (Working::new(&cert.i), Working::new(&cert.j));
    let mut steps = Vec::new();
    let mut witnesses = Vec::new();
    let mut first_failure = None;
    for n in 1..=n_max {
        if n == 1 || n > cert.r {
            // J ∩ I = J, and for n > r: J ∩ I^n ⊆ I^n = J I^(n−1)
            steps.push(VvStep { n, holds: true, from_certificate: n > 1 });
            continue;
        }
        let i_n = wi.power(n)?.to_ideal();
        let lhs = cert.j.intersect(&i_n)?;
        let rhs = wj.product(&wi.power(n - 1)?)?.to_ideal();
        assert!(lhs.contains(&rhs)?, "J I^(n-1) must lie in J ∩ I^n");
        let gb = rhs.gb()?;
        let missing: Vec<Polynomial> = lhs.gens().iter().filter(|g| !gb.reduce(g).is_zero()).cloned().collect();
        let holds = missing.is_empty();
        if !holds && first_failure.is_none() {
            first_failure = Some(n);
            witnesses = missing;
        }
        steps.push(VvStep { n, holds, from_certificate: false });
    }
    let g_cohen_macaulay = steps.iter().all(|s| s.holds);
    Ok(VvReport { steps, witnesses, first_failure, g_cohen_macaulay })
}
