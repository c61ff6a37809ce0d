//! Deterministic, seedable sampling for the distributions the demand
//! generators draw from.
//!
//! The generator is xoshiro256** 1.0 seeded through SplitMix64, both fixed
//! published algorithms, so a given seed produces the same sample sequence
//! on every platform and in every release. Independent streams for separate
//! experiment cells come from [`derive_seed`], which folds a list of tag
//! words into the master seed.

use crate::math;
use core::fmt;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 output function; also used as the tag-folding hash.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN_GAMMA);
    mix64(*state)
}

/// Hash a master seed together with tag words (setting ids, replication
/// indices, parameter bits) into a derived seed. Distinct tag sequences give
/// independent streams without any bookkeeping.
pub fn derive_seed(seed: u64, tags: &[u64]) -> u64 {
    let mut h = mix64(seed ^ GOLDEN_GAMMA);
    for &t in tags {
        h = mix64(h.wrapping_add(GOLDEN_GAMMA) ^ t);
    }
    h
}

/// A seeded xoshiro256** stream.
///
/// Single-owner by design: parallel work derives one stream per cell instead
/// of sharing.
#[derive(Clone, Debug)]
pub struct RandomStream {
    state: [u64; 4],
}

impl RandomStream {
    /// Expand a 64-bit seed into the full generator state via SplitMix64.
    pub fn from_seed(seed: u64) -> Self {
        let mut sm = seed;
        let state = [
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
        ];
        Self { state }
    }

    /// Stream for the cell identified by `tags` under `seed`.
    pub fn derive(seed: u64, tags: &[u64]) -> Self {
        Self::from_seed(derive_seed(seed, tags))
    }

    /// Next raw 64-bit output (xoshiro256** 1.0).
    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform draw in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Rejected distribution parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamError {
    /// The logarithmic shape parameter must lie strictly inside (0, 1).
    LogarithmicShape,
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::LogarithmicShape => {
                write!(f, "logarithmic shape parameter must satisfy 0 < ell < 1")
            }
        }
    }
}

impl core::error::Error for ParamError {}

/// Validated shape parameter of the logarithmic (log-series) distribution,
/// `Pr[X = k] = -ell^k / (k ln(1 - ell))` for `k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogarithmicParams {
    ell: f64,
    // Pr[X = 1], cached for the sampling loop.
    first_term: f64,
}

impl LogarithmicParams {
    pub fn new(ell: f64) -> Result<Self, ParamError> {
        if !(ell > 0.0 && ell < 1.0) {
            return Err(ParamError::LogarithmicShape);
        }
        let first_term = -ell / math::ln(1.0 - ell);
        Ok(Self { ell, first_term })
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Distribution mean, `-ell / ((1 - ell) ln(1 - ell))`.
    pub fn mean(&self) -> f64 {
        self.first_term / (1.0 - self.ell)
    }

    /// Probability mass at `k >= 1`.
    pub fn pmf(&self, k: u64) -> f64 {
        assert!(k >= 1, "logarithmic support starts at 1");
        let mut term = self.first_term;
        for i in 1..k {
            term *= self.ell * i as f64 / (i + 1) as f64;
        }
        term
    }
}

/// Draw from the logarithmic distribution by inverse-CDF sequential search.
///
/// The term for `k + 1` comes from the ratio `t_{k+1} = t_k * ell * k / (k + 1)`,
/// so the loop is exact and cheap for the shapes used here, where the
/// expected value is small.
pub fn sample_logarithmic(stream: &mut RandomStream, params: LogarithmicParams) -> u64 {
    let u = stream.next_f64();
    let mut k: u64 = 1;
    let mut term = params.first_term;
    let mut cdf = term;
    while u >= cdf {
        term *= params.ell * k as f64 / (k + 1) as f64;
        k += 1;
        if term <= 0.0 {
            // Tail mass underflowed; the accumulated CDF cannot grow further.
            break;
        }
        cdf += term;
    }
    k
}

/// Draw from the geometric distribution on `{1, 2, ...}` with success
/// probability `p`: `Pr[X = k] = (1 - p)^(k-1) p`.
pub fn sample_geometric(stream: &mut RandomStream, p: f64) -> u64 {
    assert!(p > 0.0 && p < 1.0, "geometric p must satisfy 0 < p < 1");
    // Inverse CDF: u < 1 always, so ln(1 - u) is finite and the quotient of
    // two negative logs is non-negative.
    let u = stream.next_f64();
    let k = math::floor(math::ln(1.0 - u) / math::ln(1.0 - p)) as u64 + 1;
    k.max(1)
}

/// Bernoulli draw: 1 with probability `p`.
pub fn sample_bernoulli(stream: &mut RandomStream, p: f64) -> u64 {
    assert!((0.0..=1.0).contains(&p), "bernoulli p must lie in [0, 1]");
    // next_f64 is < 1, so p = 1 always fires and p = 0 never does.
    u64::from(stream.next_f64() < p)
}
