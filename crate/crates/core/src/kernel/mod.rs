//! Exact arithmetic substrate: big integers, rationals, prime fields,
//! fraction-free linear solving and exact LP feasibility.

mod field;
mod lp;
mod matrix;

pub use field::{Fp, PrimeModulus, DEFAULT_PRIME};
pub use lp::{lp_feasible, Feasibility, LinearConstraint, Relation};
pub use matrix::{solve_exact_linear, ExactMatrix, LinearSolution};

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

use num_traits::{One, Zero};

/// `n choose k` for small arguments, exact.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty system")]
    Empty,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }
}
