//! Buchberger's algorithm and ideal operations built on it.

mod buchberger;
mod ideal;

pub use buchberger::{groebner_timeout, set_groebner_timeout};
pub use ideal::{GroebnerBasis, Ideal, StandardMonomialSet};

use buchberger::{reduce_full, OrderedPoly, Reducers};

use crate::poly::{MonomialOrder, Polynomial};

pub(crate) fn ordered(f: &Polynomial, order: &MonomialOrder) -> OrderedPoly {
    OrderedPoly { terms: f.sorted_terms(order) }
}

/// Multivariate division remainder of `f` by `divisors`.
///
/// No term of the result is divisible by a leading monomial of a divisor,
/// and `f - r` lies in the ideal they generate. Zero divisors are ignored.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let polys: Vec<OrderedPoly> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ordered(g, order))
        .collect();
    let mut reducers = Reducers::default();
    for (i, g) in polys.iter().enumerate() {
        reducers.push(g.lead().clone(), i);
    }
    let r = reduce_full(f.sorted_terms(order), &polys, &reducers, order);
    Polynomial::from_terms(f.ring(), r)
}

#[cfg(test)]
mod division_tests {
    use std::sync::Arc;

    use super::*;
    use crate::poly::{parse_poly, FieldKind, RingSpec};

    fn ring() -> Arc<RingSpec> {
        Arc::new(RingSpec::new(["X", "Y"], FieldKind::Rationals).unwrap())
    }

    #[test]
    fn division_examples() {
        let r = ring();
        let p = |s| parse_poly(s, &r).unwrap();
        let g = [p("X*Y - 1")];
        assert_eq!(normal_form(&p("X*Y"), &g, &MonomialOrder::Lex), p("1"));
        assert_eq!(normal_form(&p("X^2*Y"), &g, &MonomialOrder::Lex), p("X"));
        let f = p("X^3 + 2*Y - 7");
        assert_eq!(normal_form(&f, &[], &MonomialOrder::Grevlex), f);
    }
}

#[cfg(test)]
mod tests;
