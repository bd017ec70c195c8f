use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::kernel::{BigInt, Fp, PrimeModulus, Rational};

/// Coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime(PrimeModulus),
}

impl FieldKind {
    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, v: i64) -> Scalar {
        match self {
            FieldKind::Rationals => Scalar::Rat(Rational::from_integer(BigInt::from(v))),
            FieldKind::Prime(p) => Scalar::Mod(Fp::new(v, p)),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            FieldKind::Rationals => Scalar::Rat(Rational::from_integer(v.clone())),
            FieldKind::Prime(p) => {
                let r = (v % BigInt::from(p.get())).to_i64().expect("residue fits");
                Scalar::Mod(Fp::new(r, p))
            }
        }
    }

    pub fn is_modular(self) -> bool {
        matches!(self, FieldKind::Prime(_))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::Prime(p) => write!(f, "GF({})", p.get()),
        }
    }
}

/// A field element. Both operands of a binary operation must come from the
/// same field; mixing them is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod(Fp),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod(a) => a.value() == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(a.add(*b)),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(a.sub(*b)),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(a.mul(*b)),
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a) => Scalar::Mod(a.neg()),
        }
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod(a) => Scalar::Mod(a.inv().expect("inverse of zero")),
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(a) => a.is_negative(),
            Scalar::Mod(_) => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.abs()),
            m => m.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(a) => write!(f, "{a}"),
            Scalar::Mod(a) => write!(f, "{a}"),
        }
    }
}
