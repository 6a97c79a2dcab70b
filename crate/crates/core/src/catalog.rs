//! Rings used throughout the tests and the built-in scenario.

use std::sync::Arc;

use crate::coeff::Field;
use crate::monomial::OrderKind;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::QuotientRing;

/// The 2x2 minors of `[[X, Y, Z], [Y, Z, W]]`.
pub fn cubic_minors(p: &Arc<PolyRing>) -> Vec<Polynomial> {
    ["X*Z - Y^2", "X*W - Y*Z", "Y*W - Z^2"]
        .iter()
        .map(|s| p.parse(s).expect("static polynomial"))
        .collect()
}

pub fn cubic_poly_ring(field: Field) -> Arc<PolyRing> {
    PolyRing::new(field, &["X", "Y", "Z", "W"], OrderKind::DegRevLex)
}

/// `k[X,Y,Z,W]` modulo the 2x2 minors; the coordinate ring of the cone over
/// the twisted cubic, `k[s^3, s^2 t, s t^2, t^3]`.
pub fn cubic_cone(field: Field) -> Arc<QuotientRing> {
    let p = cubic_poly_ring(field);
    QuotientRing::new(&p, cubic_minors(&p)).expect("minors ideal")
}

/// The cone modulo `X`.
pub fn cubic_cone_section(field: Field) -> Arc<QuotientRing> {
    let r = cubic_cone(field);
    let x = r.poly_ring().parse("X").expect("variable");
    r.quotient(&[x]).expect("section")
}

/// `k[vars] / (gens)` with degrevlex order.
pub fn quotient(field: Field, vars: &[&str], gens: &[&str]) -> Arc<QuotientRing> {
    let p = PolyRing::new(field, vars, OrderKind::DegRevLex);
    let gens = gens
        .iter()
        .map(|s| p.parse(s).expect("polynomial"))
        .collect();
    QuotientRing::new(&p, gens).expect("ideal")
}
