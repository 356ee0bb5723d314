//! Searching for places of degree `n` that split completely on the curve.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ToolError;
use crate::curve::{CurveError, CurveModel};
use crate::galois::{ExtField, Poly};

/// Whether the place `(qpoly)` of the rational function field splits into
/// two places of the same degree, i.e. `Tr(rhs(b)) = 0` for a root `b`.
pub fn check_total_split(curve: &CurveModel, qpoly: &Poly) -> Result<bool, ToolError> {
    let ext = ExtField::new(qpoly.clone())?;
    let b = ext.generator();
    let rhs = curve
        .rhs_at(&ext, &b)?
        .ok_or_else(|| CurveError::SupportCollision(format!("{qpoly:?}")))?;
    Ok(ext.absolute_trace(&rhs)?.is_zero())
}

/// Largest degree scanned exhaustively over `F_2`.
pub const EXHAUSTIVE_F2_DEGREE: usize = 8;

/// Monic irreducible polynomials of `degree` whose place splits completely.
///
/// Over `F_2` with `degree <= 8` every monic polynomial is scanned in
/// increasing binary order and `trials` is ignored. Otherwise `trials`
/// random monic polynomials are drawn from a ChaCha stream seeded by
/// `seed`; the result is deduplicated and in discovery order.
pub fn split_search(curve: &CurveModel, degree: usize, trials: usize, seed: u64) -> Vec<Poly> {
    let base = curve.base();
    let accept = |p: &Poly| {
        p.is_irreducible().unwrap_or(false) && check_total_split(curve, p).unwrap_or(false)
    };
    if degree == 0 {
        return Vec::new();
    }
    if base.order() == 2 && degree <= EXHAUSTIVE_F2_DEGREE {
        return (0u32..1 << degree)
            .map(|low| {
                let bits: Vec<u32> = (0..degree).map(|i| (low >> i) & 1).chain([1]).collect();
                Poly::from_bits(base, &bits).expect("bits in range")
            })
            .filter(|p| accept(p))
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<Poly> = Vec::new();
    for _ in 0..trials {
        let bits: Vec<u32> = (0..degree).map(|_| rng.random_range(0..base.order())).chain([1]).collect();
        let p = Poly::from_bits(base, &bits).expect("bits in range");
        if !found.contains(&p) && accept(&p) {
            found.push(p);
        }
    }
    found
}
