use std::fmt;

use super::KernelError;

pub const DEFAULT_PRIME: u32 = 32003;

/// A validated prime modulus below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, KernelError> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(KernelError::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl Default for PrimeModulus {
    fn default() -> Self {
        PrimeModulus(DEFAULT_PRIME)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut f = 3;
    while f * f <= p {
        if p % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Residue modulo a prime, kept in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: PrimeModulus,
}

impl Fp {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        let p = modulus.0 as i64;
        Fp {
            value: value.rem_euclid(p) as u32,
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn p(self) -> u64 {
        self.modulus.0 as u64
    }

    pub fn add(self, other: Fp) -> Fp {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u64 + other.value as u64) % self.p();
        Fp { value: s as u32, ..self }
    }

    pub fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp { value: self.modulus.0 - self.value, ..self }
        }
    }

    pub fn sub(self, other: Fp) -> Fp {
        self.add(other.neg())
    }

    pub fn mul(self, other: Fp) -> Fp {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = (self.value as u64 * other.value as u64) % self.p();
        Fp { value: m as u32, ..self }
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p() - 2))
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeModulus::new(32003).is_ok());
        assert!(PrimeModulus::new(32001).is_err());
        assert!(PrimeModulus::new(1).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let p = PrimeModulus::default();
        for v in [1i64, 2, 17, 32002, -5] {
            let a = Fp::new(v, p);
            assert_eq!(a.mul(a.inv().unwrap()), Fp::new(1, p));
        }
        assert!(Fp::new(32003, p).inv().is_none());
    }
}
