//! Lengths, mixed multiplicities and fiber-cone Hilbert series.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::groebner::Ideal;
use crate::kernel::{binomial, solve_exact_linear, BigInt, ExactMatrix, LinearSolution, Rational};
use crate::monomial::MonomialIdeal;
use crate::{Error, Result};

/// How a number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    MonomialPath,
    GroebnerPath,
    Fit,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::MonomialPath => "monomial-path",
            Method::GroebnerPath => "groebner-path",
            Method::Fit => "fit",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "monomial-path" => Some(Method::MonomialPath),
            "groebner-path" => Some(Method::GroebnerPath),
            "fit" => Some(Method::Fit),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tagged<T> {
    pub value: T,
    pub method: Method,
}

/// An ideal in whichever representation is cheapest.
#[derive(Clone, Debug)]
pub enum Working {
    Monomial(MonomialIdeal),
    General(Ideal),
}

impl Working {
    pub fn new(ideal: &Ideal) -> Self {
        match MonomialIdeal::from_ideal(ideal) {
            Some(m) => Working::Monomial(m),
            None => Working::General(ideal.clone()),
        }
    }

    pub fn maximal(like: &Working) -> Self {
        match like {
            Working::Monomial(m) => Working::Monomial(MonomialIdeal::maximal_power(m.ring(), 1)),
            Working::General(i) => Working::General(Ideal::maximal(i.ring())),
        }
    }

    pub fn method(&self) -> Method {
        match self {
            Working::Monomial(_) => Method::MonomialPath,
            Working::General(_) => Method::GroebnerPath,
        }
    }

    pub fn to_ideal(&self) -> Ideal {
        match self {
            Working::Monomial(m) => m.to_ideal(),
            Working::General(i) => i.clone(),
        }
    }

    pub fn product(&self, other: &Working) -> Result<Working> {
        Ok(match (self, other) {
            (Working::Monomial(a), Working::Monomial(b)) => Working::Monomial(a.product(b)?),
            _ => Working::General(self.to_ideal().product(&other.to_ideal())?),
        })
    }

    pub fn power(&self, k: u32) -> Result<Working> {
        Ok(match self {
            Working::Monomial(a) => Working::Monomial(a.power(k)?),
            Working::General(i) => Working::General(i.power(k)?),
        })
    }

    /// `ℓ(R/I)`; zero for the unit ideal.
    pub fn length(&self) -> Result<BigInt> {
        match self {
            Working::Monomial(a) if a.is_unit() => Ok(BigInt::zero()),
            Working::Monomial(a) => a.length(),
            Working::General(i) => {
                if i.gb()?.is_unit() {
                    return Ok(BigInt::zero());
                }
                if !i.is_origin_primary()? {
                    return Err(Error::NotOriginPrimary);
                }
                Ok(BigInt::from(i.standard_monomials()?.len()))
            }
        }
    }
}

/// `ℓ(R/I)` for an origin-primary ideal.
pub fn length(ideal: &Ideal) -> Result<Tagged<BigInt>> {
    let w = Working::new(ideal);
    if let Working::Monomial(m) = &w {
        if !m.is_origin_primary() {
            return Err(Error::NotOriginPrimary);
        }
    }
    let value = w.length()?;
    if value.is_zero() {
        return Err(Error::NotOriginPrimary);
    }
    Ok(Tagged { value, method: w.method() })
}

/// Minimal number of generators, `ℓ(R/mI) − ℓ(R/I)`.
pub fn mu(ideal: &Ideal) -> Result<Tagged<BigInt>> {
    let base = length(ideal)?;
    let w = Working::new(ideal);
    let mi = Working::maximal(&w).product(&w)?;
    Ok(Tagged { value: mi.length()? - base.value, method: w.method() })
}

/// Largest `k` with `I ⊆ m^k`.
pub fn order(ideal: &Ideal) -> Result<u64> {
    ideal
        .gens()
        .iter()
        .filter_map(|g| g.min_degree())
        .min()
        .ok_or_else(|| Error::Precondition("order of the zero ideal".into()))
}

/// `L(r, s) = ℓ(R/m^r I^s)` over `r0 ≤ r < r0 + width`, `s0 ≤ s < s0 + width`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTable {
    pub r0: u32,
    pub s0: u32,
    pub width: u32,
    pub entries: Vec<Vec<BigInt>>,
    pub method: Method,
}

impl LengthTable {
    pub fn get(&self, r: u32, s: u32) -> &BigInt {
        &self.entries[(r - self.r0) as usize][(s - self.s0) as usize]
    }
}

pub fn length_table(ideal: &Ideal, r0: u32, s0: u32, width: u32) -> Result<LengthTable> {
    if width == 0 {
        return Err(Error::Precondition("empty length table".into()));
    }
    length(ideal)?;
    let w = Working::new(ideal);
    let m = Working::maximal(&w);
    let m_powers: Vec<Working> = (r0..r0 + width).map(|r| m.power(r)).collect::<Result<_>>()?;
    let i_powers: Vec<Working> = (s0..s0 + width).map(|s| w.power(s)).collect::<Result<_>>()?;
    let cells: Vec<(usize, usize)> =
        (0..width as usize).flat_map(|a| (0..width as usize).map(move |b| (a, b))).collect();
    let values: Vec<BigInt> = cells
        .par_iter()
        .map(|&(a, b)| m_powers[a].product(&i_powers[b])?.length())
        .collect::<Result<_>>()?;
    let entries = values.chunks(width as usize).map(<[BigInt]>::to_vec).collect();
    Ok(LengthTable { r0, s0, width, entries, method: w.method() })
}

/// Coefficients `e_ij` of `Σ e_ij C(r+i, i) C(s+j, j)`, `i + j ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BhattacharyaForm {
    pub d: u32,
    pub coeffs: Vec<((u32, u32), BigInt)>,
    /// Table the fit was read off.
    pub window: (u32, u32, u32),
}

impl BhattacharyaForm {
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs
            .iter()
            .find(|(k, _)| *k == (i, j))
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// `e_j(m|I) = e_{(d−j, j)}`.
    pub fn mixed(&self, j: u32) -> BigInt {
        self.coeff(self.d - j, j)
    }

    pub fn mixed_all(&self) -> Vec<BigInt> {
        (0..=self.d).map(|j| self.mixed(j)).collect()
    }

    pub fn evaluate(&self, r: u32, s: u32) -> BigInt {
        self.coeffs
            .iter()
            .map(|((i, j), c)| c * basis(r, s, *i, *j))
            .sum()
    }
}

fn basis(r: u32, s: u32, i: u32, j: u32) -> BigInt {
    binomial((r + i) as i64, i as i64) * binomial((s + j) as i64, j as i64)
}

fn exponents(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for total in (0..=d).rev() {
        for j in 0..=total {
            out.push((total - j, j));
        }
    }
    out
}

/// Side of the square window: at least `d + 1` and holding
/// `(d+1)(d+2)/2 + 2d` points.
pub fn window_side(d: u32) -> u32 {
    let need = (d + 1) * (d + 2) / 2 + 2 * d;
    let mut side = d + 1;
    while side * side < need {
        side += 1;
    }
    side
}

/// Interpolates on the corner triangle `a + b ≤ d` of the table and checks
/// every other cell. On mismatch returns the residuals `actual − predicted`.
pub fn fit_table(table: &LengthTable, d: u32) -> std::result::Result<BhattacharyaForm, Vec<String>> {
    if table.width < d + 1 {
        return Err(vec!["window narrower than d + 1".into()]);
    }
    let unknowns = exponents(d);
    let mut fit_points = Vec::new();
    let mut held_out = Vec::new();
    for a in 0..table.width {
        for b in 0..table.width {
            let p = (table.r0 + a, table.s0 + b);
            if a + b <= d {
                fit_points.push(p);
            } else {
                held_out.push(p);
            }
        }
    }
    let rows = fit_points
        .iter()
        .map(|&(r, s)| unknowns.iter().map(|&(i, j)| Rational::from_integer(basis(r, s, i, j))).collect())
        .collect();
    let a = ExactMatrix::from_rows(rows).map_err(|e| vec![e.to_string()])?;
    let b: Vec<Rational> = fit_points.iter().map(|&(r, s)| Rational::from_integer(table.get(r, s).clone())).collect();
    let sol = match solve_exact_linear(&a, &b).map_err(|e| vec![e.to_string()])? {
        LinearSolution::Unique(x) => x,
        other => return Err(vec![format!("interpolation system degenerate: {other:?}")]),
    };
    if let Some(bad) = sol.iter().find(|x| !x.is_integer()) {
        return Err(vec![format!("non-integral coefficient {bad}")]);
    }
    let form = BhattacharyaForm {
        d,
        coeffs: unknowns.into_iter().zip(sol.into_iter().map(|x| x.to_integer())).collect(),
        window: (table.r0, table.s0, table.width),
    };
    let residuals: Vec<String> = held_out
        .iter()
        .filter_map(|&(r, s)| {
            let diff = table.get(r, s) - form.evaluate(r, s);
            (!diff.is_zero()).then(|| format!("L({r},{s}) off by {diff}"))
        })
        .collect();
    if !residuals.is_empty() {
        return Err(residuals);
    }
    if let Some((k, c)) = form.coeffs.iter().find(|((i, j), c)| i + j == d && c.sign() == num_bigint::Sign::Minus) {
        return Err(vec![format!("negative top coefficient e{k:?} = {c}")]);
    }
    Ok(form)
}

pub const FIT_RETRIES: usize = 5;

/// Fits with the window starting at `r0 = s0 = max(r_estimate, d) + 1`.
pub fn bhattacharya_fit(ideal: &Ideal, r_estimate: u32) -> Result<BhattacharyaForm> {
    let d = ideal.ring().dim() as u32;
    let start = r_estimate.max(d) + 1;
    bhattacharya_fit_from(ideal, start, start)
}

/// Fits starting at `(r0, s0)`, shifting the window by 2 on failure.
pub fn bhattacharya_fit_from(ideal: &Ideal, r0: u32, s0: u32) -> Result<BhattacharyaForm> {
    let d = ideal.ring().dim() as u32;
    let side = window_side(d);
    let mut last = Vec::new();
    for attempt in 0..=FIT_RETRIES as u32 {
        let table = length_table(ideal, r0 + 2 * attempt, s0 + 2 * attempt, side)?;
        match fit_table(&table, d) {
            Ok(form) => return Ok(form),
            Err(res) => last = res,
        }
    }
    Err(Error::FitUnstable { attempts: FIT_RETRIES + 1, residuals: last })
}

/// `e(J) = ℓ(R_m/J R_m)` for a parameter ideal `J`.
pub fn param_multiplicity(j: &Ideal) -> Result<Tagged<BigInt>> {
    let d = j.ring().dim();
    if j.gens().len() != d {
        return Err(Error::NotParameterIdeal(format!("{} generators in dimension {d}", j.gens().len())));
    }
    let w = Working::new(j);
    if let Working::Monomial(m) = &w {
        if m.is_origin_primary() {
            return Ok(Tagged { value: m.length()?, method: Method::MonomialPath });
        }
    }
    match j.local_length() {
        Ok(n) if n > 0 => Ok(Tagged { value: BigInt::from(n), method: Method::GroebnerPath }),
        Ok(_) => Err(Error::NotParameterIdeal("unit ideal".into())),
        Err(Error::NotOriginPrimary) => Err(Error::NotParameterIdeal("origin is not isolated in V(J)".into())),
        Err(e) => Err(e),
    }
}

/// Numerator `h` of `Σ μ(I^n) t^n = h(t)/(1−t)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    pub coeffs: Vec<BigInt>,
    /// `μ(I^n)` for `n = 0..=N`.
    pub mu_sequence: Vec<BigInt>,
    pub d: u32,
}

impl HilbertNumerator {
    /// Coefficient of `t^n` in `h(t)/(1−t)^d`.
    pub fn expand(&self, n: u32) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(k, _)| *k as u32 <= n)
            .map(|(k, h)| h * binomial((n - k as u32 + self.d - 1) as i64, (self.d - 1) as i64))
            .sum()
    }

    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

pub fn default_fiber_bound(d: u32) -> u32 {
    2 * d + 4
}

pub fn fiber_hilbert(ideal: &Ideal, n_max: u32) -> Result<HilbertNumerator> {
    length(ideal)?;
    let d = ideal.ring().dim() as u32;
    if n_max < 3 {
        return Err(Error::FiberNotStabilized(n_max as usize));
    }
    let w = Working::new(ideal);
    let m = Working::maximal(&w);
    let powers: Vec<Working> = (1..=n_max).map(|n| w.power(n)).collect::<Result<_>>()?;
    let mut seq: Vec<BigInt> = vec![BigInt::one()];
    let rest: Vec<BigInt> = powers
        .par_iter()
        .map(|p| Ok(m.product(p)?.length()? - p.length()?))
        .collect::<Result<_>>()?;
    seq.extend(rest);
    let mut h = seq.clone();
    for _ in 0..d {
        for k in (1..h.len()).rev() {
            let prev = h[k - 1].clone();
            h[k] -= prev;
        }
    }
    if h[h.len() - 3..].iter().any(|x| !x.is_zero()) {
        return Err(Error::FiberNotStabilized(n_max as usize));
    }
    while h.last().is_some_and(Zero::is_zero) {
        h.pop();
    }
    Ok(HilbertNumerator { coeffs: h, mu_sequence: seq, d })
}

#[cfg(test)]
mod tests;
