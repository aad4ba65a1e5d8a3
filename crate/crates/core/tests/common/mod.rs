#![allow(dead_code)]

use mf_ainfinity::transfer::{AKey, AVector};
use mf_ainfinity::{Context, Multivector};

/// The potentials every check is run against.
pub const MATRIX: [(usize, u32, &str); 9] = [
    (1, 2, "x1^2"),
    (2, 2, "x1*x2"),
    (2, 2, "x1^2 + x2^2"),
    (3, 2, "2*x1^2 + 3*x1*x2 - x1*x3 + 5*x2^2 + 4*x2*x3 - 7*x3^2"),
    (1, 3, "x1^3"),
    (3, 3, "x1*x2*x3"),
    (2, 3, "x1^3 + x2^3"),
    (2, 4, "x1^4 + x2^4"),
    (3, 4, "x1^4 - 2*x1^2*x2*x3 + 3*x2^3*x3 + x3^4"),
];

pub fn ctx(n: usize, src: &str) -> Context {
    Context::parse(src, n).unwrap()
}

pub fn matrix() -> Vec<Context> {
    MATRIX.iter().map(|(n, d, s)| {
        let c = ctx(*n, s);
        assert_eq!(c.d(), *d);
        c
    }).collect()
}

pub fn v(ix: &[usize], n: usize) -> AVector {
    mf_ainfinity::transfer::a_basis(ix, n).unwrap()
}

pub fn key(ix: &[usize], n: usize) -> AKey {
    AKey::new(0, Multivector::from_indices(ix, n).unwrap())
}
