//! Seeded sampling of points of a Grassmannian.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::Field;

/// Rational samples use integer entries in `[-ENTRY_BOUND, ENTRY_BOUND]`.
/// A sample lands on a degree-`D` hypersurface of special subspaces with
/// probability at most `D / (2 * ENTRY_BOUND + 1)`; with single-digit entries
/// this is not negligible (a Lagrangian plane for `e0^e1 + e2^e3` turned up
/// within 50 draws in `G(2, 4)`).
pub const ENTRY_BOUND: i64 = 1_000_000;
pub const MAX_RETRIES: usize = 64;

/// A full-rank `k x q` rational basis matrix, deterministic in `(q, k, seed)`.
pub fn random_subspace(q: usize, k: usize, seed: u64) -> Result<ExactMatrix> {
    random_subspace_in(Field::Rational, q, k, seed)
}

pub fn random_subspace_in(field: Field, q: usize, k: usize, seed: u64) -> Result<ExactMatrix> {
    if k == 0 || k > q {
        return Err(Error::OutOfRange {
            what: "subspace dimension",
            detail: format!("need 1 <= k <= q, got k={k}, q={q}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let m = ExactMatrix::from_fn(k, q, field, |_, _| match field {
            Field::Rational => field.from_i64(rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND)),
            Field::Prime(p) => field.from_i64(rng.random_range(0..p) as i64),
        });
        if m.rank_with_bound(k) == k {
            return Ok(m);
        }
    }
    Err(Error::RetryLimit(MAX_RETRIES))
}

/// Independent per-sample seed (splitmix64 finalizer on `seed + index`).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
