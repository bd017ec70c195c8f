use std::cmp::Ordering;
use std::fmt;

use super::ExponentVector;

/// Monomial orders. All are multiplicative well-orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// The first `elim` variables are compared by grevlex among themselves;
    /// ties are broken by `inner` on the remaining variables.
    Block { elim: usize, inner: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn block(elim: usize, inner: MonomialOrder) -> Self {
        MonomialOrder::Block { elim, inner: Box::new(inner) }
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        self.cmp_slices(a.as_slice(), b.as_slice())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block { elim, inner } => {
                let k = (*elim).min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| inner.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "lex" => Some(MonomialOrder::Lex),
            "grevlex" => Some(MonomialOrder::Grevlex),
            _ => None,
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Block { elim, inner } => write!(f, "block({elim}, {inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(e)
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::block(1, MonomialOrder::Grevlex),
            MonomialOrder::block(2, MonomialOrder::Lex),
        ]
    }

    #[test]
    fn grevlex_breaks_degree_ties_from_the_right() {
        // X^7 vs Z^7 in (X, Y, Z): same degree, Z-exponent decides
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&ev(&[7, 0, 0]), &ev(&[0, 0, 7])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&ev(&[0, 0, 3]), &ev(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_leading_variable() {
        let o = MonomialOrder::block(1, MonomialOrder::Grevlex);
        assert_eq!(o.cmp(&ev(&[1, 0, 0]), &ev(&[0, 9, 9])), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn order_laws(a in prop::collection::vec(0u32..6, 3),
                      b in prop::collection::vec(0u32..6, 3),
                      c in prop::collection::vec(0u32..6, 3)) {
            let (a, b, c) = (ev(&a), ev(&b), ev(&c));
            let one = ExponentVector::zero(3);
            for o in orders() {
                // totality and antisymmetry
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
                // multiplicativity
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // 1 is minimal
                prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
                // transitivity
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
