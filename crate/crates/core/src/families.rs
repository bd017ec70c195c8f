//! The two parametrized example families.
//!
//! * `ex1`, `s >= 2`: a complete ideal in `k[X,Y,Z]` with Cohen-Macaulay
//!   Rees algebra whose fiber cone is not Cohen-Macaulay.
//! * `ex2`, `n >= 4`: `(X^n, X^2 Y^(n-2), X Y^(n-1), Y^n)` in `k[X,Y]`,
//!   whose Rees algebra and associated graded ring are not Cohen-Macaulay.

use std::sync::Arc;

use crate::groebner::Ideal;
use crate::poly::{parse_poly, FieldKind, RingSpec};
use crate::Result;

pub fn ex1_generators(s: u32) -> Vec<String> {
    vec![
        "Y^3".into(),
        format!("X^{}*Y^2", s + 1),
        "Y^2*X*Z".into(),
        "Y^2*Z^3".into(),
        format!("X^{}*Y", 2 * s + 1),
        "Y*Z^2*X".into(),
        "Y*Z^5".into(),
        format!("X^{}", 3 * s + 1),
        "Z*X^2".into(),
        "Z^4*X".into(),
        "Z^7".into(),
    ]
}

pub fn ex1_reduction_generators(s: u32) -> Vec<String> {
    vec![format!("X^{} + Z^7", 3 * s + 1), "X^2*Z".into(), "Y^3".into()]
}

pub fn ex2_generators(n: u32) -> Vec<String> {
    vec![
        format!("X^{n}"),
        format!("X^2*Y^{}", n - 2),
        format!("X*Y^{}", n - 1),
        format!("Y^{n}"),
    ]
}

pub fn ex2_reduction_generators(n: u32) -> Vec<String> {
    vec![format!("X^{n}"), format!("Y^{n}")]
}

pub fn xyz_ring(field: FieldKind) -> Arc<RingSpec> {
    Arc::new(RingSpec::new(["X", "Y", "Z"], field).expect("valid ring"))
}

pub fn xy_ring(field: FieldKind) -> Arc<RingSpec> {
    Arc::new(RingSpec::new(["X", "Y"], field).expect("valid ring"))
}

pub fn ideal_from_strings(ring: &Arc<RingSpec>, gens: &[String]) -> Result<Ideal> {
    let polys = gens.iter().map(|g| parse_poly(g, ring)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, polys)
}

pub fn ex1_ideal(ring: &Arc<RingSpec>, s: u32) -> Ideal {
    ideal_from_strings(ring, &ex1_generators(s)).expect("well-formed generators")
}

pub fn ex1_reduction(ring: &Arc<RingSpec>, s: u32) -> Ideal {
    ideal_from_strings(ring, &ex1_reduction_generators(s)).expect("well-formed generators")
}

pub fn ex2_ideal(ring: &Arc<RingSpec>, n: u32) -> Ideal {
    ideal_from_strings(ring, &ex2_generators(n)).expect("well-formed generators")
}

pub fn ex2_reduction(ring: &Arc<RingSpec>, n: u32) -> Ideal {
    ideal_from_strings(ring, &ex2_reduction_generators(n)).expect("well-formed generators")
}
