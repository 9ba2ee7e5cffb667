//! Deterministic inputs shared by the benchmarks.

use wcomb_core::verify::{random_form, random_independent_forms, seeded_rng};
use wcomb_core::{BinaryForm, CombinantVector, Subspace};

/// Shapes `(r, d)` the benchmarks sweep over.
pub const SHAPES: &[(usize, usize)] = &[(2, 5), (3, 6), (4, 8), (5, 10)];

/// `r` independent integer forms of order `d`, fixed per shape.
pub fn family(r: usize, d: usize) -> Vec<BinaryForm> {
    let mut rng = seeded_rng(((r as u64) << 32) | d as u64);
    random_independent_forms(&mut rng, r, d)
}

/// Two forms of orders `e` and `f`.
pub fn pair(e: usize, f: usize) -> (BinaryForm, BinaryForm) {
    let mut rng = seeded_rng(((e as u64) << 32) | f as u64 | (1 << 63));
    (random_form(&mut rng, e), random_form(&mut rng, f))
}

pub fn combinants(r: usize, d: usize) -> CombinantVector {
    Subspace::new(&family(r, d))
        .expect("independent by construction")
        .combinants()
        .expect("valid shape")
}
