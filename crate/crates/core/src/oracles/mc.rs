//! Hit-or-miss volume estimation.
//!
//! Samples are split into fixed blocks of [`BLOCK_SIZE`]; block `k` draws
//! from ChaCha8 seeded with `seed` on stream `k`. Each coordinate is a
//! 53-bit dyadic `lo + (hi - lo) · u / 2^53`, so membership is decided
//! exactly. Hit counts are summed per block, which makes the result
//! independent of how blocks are scheduled across threads.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{bad_params, Error, Result};
use crate::exactnum::{rational_to_f64, Rational};
use crate::halfspace::HalfspaceSystem;

pub const BLOCK_SIZE: u64 = 1 << 16;
const MANTISSA_BITS: u32 = 53;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub hits: u64,
}

impl McEstimate {
    fn new(hits: u64, samples: u64, seed: u64, box_volume: f64) -> McEstimate {
        let p = hits as f64 / samples as f64;
        McEstimate {
            estimate: p * box_volume,
            std_error: (p * (1.0 - p) / samples as f64).sqrt() * box_volume,
            samples,
            seed,
            hits,
        }
    }

    /// `|estimate - exact| <= k · std_error`.
    pub fn agrees_with(&self, exact: f64, k: f64) -> bool {
        (self.estimate - exact).abs() <= k * self.std_error
    }
}

fn check_box(bbox: &[(Rational, Rational)], samples: u64) -> Result<Rational> {
    if samples == 0 {
        return Err(bad_params("samples ≥ 1"));
    }
    if bbox.is_empty() {
        return Err(bad_params("bounding box of positive dimension"));
    }
    let mut vol = Rational::one();
    for (k, (lo, hi)) in bbox.iter().enumerate() {
        if lo > hi {
            return Err(Error::BadBox(k));
        }
        vol *= hi - lo;
    }
    Ok(vol)
}

fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

/// Runs `count_block(block_index, block_len)` over all blocks in parallel.
fn count_hits(samples: u64, count_block: impl Fn(u64, u64) -> u64 + Sync) -> u64 {
    let blocks = samples.div_ceil(BLOCK_SIZE);
    (0..blocks)
        .into_par_iter()
        .map(|b| count_block(b, BLOCK_SIZE.min(samples - b * BLOCK_SIZE)))
        .sum()
}

/// Estimates the volume of `{x in bbox : membership(x)}`. The box must
/// contain the body.
pub fn mc_volume<F>(membership: F, bbox: &[(Rational, Rational)], samples: u64, seed: u64) -> Result<McEstimate>
where
    F: Fn(&[Rational]) -> bool + Sync,
{
    let box_volume = check_box(bbox, samples)?;
    let unit = Rational::from_integer(BigInt::one() << MANTISSA_BITS);
    let widths: Vec<Rational> = bbox.iter().map(|(lo, hi)| (hi - lo) / &unit).collect();
    let hits = count_hits(samples, |block, len| {
        let mut rng = block_rng(seed, block);
        let mut point = vec![Rational::zero(); bbox.len()];
        let mut hits = 0;
        for _ in 0..len {
            for (k, x) in point.iter_mut().enumerate() {
                let u = rng.next_u64() >> (64 - MANTISSA_BITS);
                *x = &bbox[k].0 + &widths[k] * Rational::from_integer(u.into());
            }
            hits += u64::from(membership(&point));
        }
        hits
    });
    Ok(McEstimate::new(hits, samples, seed, rational_to_f64(&box_volume)))
}

/// One halfspace rewritten over the raw draws `u ∈ [0, 2^53)^d` as
/// `Σ coeffs_k u_k <= bound`, all integers.
struct IntHalfspace {
    coeffs: Vec<i128>,
    bound: i128,
}

fn compile(hs: &HalfspaceSystem, bbox: &[(Rational, Rational)]) -> Option<Vec<IntHalfspace>> {
    let unit = Rational::from_integer(BigInt::one() << MANTISSA_BITS);
    // Per-coefficient magnitude so that d terms of |A|·2^53 stay in i128.
    let limit = BigInt::one() << (127 - MANTISSA_BITS - 8);
    hs.halfspaces()
        .iter()
        .map(|h| {
            let mut coeffs: Vec<Rational> = Vec::with_capacity(bbox.len());
            let mut shift = Rational::zero();
            for (n, (lo, hi)) in h.normal.iter().zip(bbox) {
                coeffs.push(n * (hi - lo));
                shift += n * lo;
            }
            let bound = (&h.offset - shift) * &unit;
            let lcm = coeffs
                .iter()
                .chain(std::iter::once(&bound))
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let scale = |q: &Rational| -> Option<i128> {
                let v = q.numer() * (&lcm / q.denom());
                if v.magnitude() > limit.magnitude() {
                    None
                } else {
                    v.to_i128()
                }
            };
            // The bound may be large; floor it after scaling since the
            // left side is an integer.
            let scaled_bound = (&bound * Rational::from_integer(lcm.clone())).floor().to_integer();
            let bound = scaled_bound.to_i128()?;
            Some(IntHalfspace {
                coeffs: coeffs.iter().map(scale).collect::<Option<Vec<_>>>()?,
                bound,
            })
        })
        .collect()
}

/// Hit-or-miss volume of a halfspace system. Membership is evaluated in
/// 128-bit integer arithmetic when the coefficients allow it, with an exact
/// rational fallback; both give identical counts.
pub fn mc_volume_halfspaces(
    hs: &HalfspaceSystem,
    bbox: &[(Rational, Rational)],
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    if bbox.len() != hs.dim() {
        return Err(Error::DimensionMismatch {
            expected: hs.dim(),
            got: bbox.len(),
        });
    }
    let box_volume = check_box(bbox, samples)?;
    let Some(compiled) = compile(hs, bbox) else {
        return mc_volume(|x| hs.halfspaces().iter().all(|h| h.satisfied_by(x)), bbox, samples, seed);
    };
    let d = bbox.len();
    let hits = count_hits(samples, |block, len| {
        let mut rng = block_rng(seed, block);
        let mut u = vec![0i128; d];
        let mut hits = 0;
        for _ in 0..len {
            for x in u.iter_mut() {
                *x = (rng.next_u64() >> (64 - MANTISSA_BITS)) as i128;
            }
            let inside = compiled
                .iter()
                .all(|h| h.coeffs.iter().zip(&u).map(|(a, x)| a * x).sum::<i128>() <= h.bound);
            hits += u64::from(inside);
        }
        hits
    });
    Ok(McEstimate::new(hits, samples, seed, rational_to_f64(&box_volume)))
}
