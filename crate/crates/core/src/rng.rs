//! Splittable, counter-based random streams.
//!
//! Every source of randomness in a run is addressed by a path of
//! `(label, index)` pairs under a single root seed, e.g.
//! `root → Round(t) → Device(m) → Batch`. Deriving a child stream is a pure
//! function of the parent key and the path element, so any part of a run can
//! be recomputed in isolation and concurrent execution cannot reorder draws.
//! Sibling streams use unrelated ChaCha keys and are statistically
//! independent.

use num_complex::Complex64;
use num_traits::Float;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

/// Path element labels. The numeric tags feed the key derivation and must
/// stay stable across versions for reproducibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum StreamLabel {
    /// Global iteration index.
    Round = 1,
    /// Transmitting device.
    Device = 2,
    /// Fading gains of one round.
    Channel = 3,
    /// Receiver noise of one round.
    Noise = 4,
    /// CSI estimation error of one round.
    CsiError = 5,
    /// Mini-batch index draws of one device and round.
    Batch = 6,
    /// Task generation: eigenbasis of the data second moment.
    TaskBasis = 7,
    /// Task generation: per-device feature draws.
    TaskFeatures = 8,
    /// Task generation: labels and generator vectors.
    TaskLabels = 9,
    /// Dataset shuffling during partitioning.
    Partition = 10,
    /// Monte Carlo chunk (outer trial block).
    Chunk = 11,
    /// Monte Carlo trial within a chunk.
    Trial = 12,
    /// Verification harness family (unbiasedness, moments, ...).
    Check = 13,
}

/// A stream key: the digest of a root seed plus a derivation path.
///
/// `derive` never mutates the parent, so a key can be fanned out to any
/// number of children in any order. Call [`RngStream::rng`] to open the
/// stream for sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    hi: u64,
    lo: u64,
}

const TAG_HI: u64 = 0x9e37_79b9_7f4a_7c15;
const TAG_LO: u64 = 0xd134_2543_de82_ef95;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl RngStream {
    /// Root stream of a run.
    pub fn root(seed: u64) -> Self {
        RngStream {
            hi: mix64(seed ^ TAG_HI),
            lo: mix64(seed.wrapping_add(TAG_LO)),
        }
    }

    /// Derive the child stream at `(label, index)`.
    pub fn derive(&self, label: StreamLabel, index: u64) -> Self {
        let tag = label as u64;
        let hi = mix64(self.hi ^ mix64(tag.wrapping_mul(TAG_HI) ^ index));
        let lo = mix64(self.lo ^ mix64(tag ^ index.wrapping_mul(TAG_LO)) ^ hi);
        RngStream { hi, lo }
    }

    /// Open the stream for sampling.
    pub fn rng(&self) -> ChaCha12Rng {
        let words = [
            mix64(self.hi),
            mix64(self.hi ^ TAG_LO),
            mix64(self.lo),
            mix64(self.lo ^ TAG_HI),
        ];
        let mut seed = [0u8; 32];
        for (chunk, w) in seed.chunks_exact_mut(8).zip(words) {
            chunk.copy_from_slice(&w.to_le_bytes());
        }
        ChaCha12Rng::from_seed(seed)
    }
}

/// Draw from N(0, sigma2).
pub fn normal(rng: &mut impl Rng, sigma2: f64) -> f64 {
    let x: f64 = rng.sample(StandardNormal);
    x * sigma2.sqrt()
}

/// Draw from CN(0, sigma2): real and imaginary parts are independent
/// N(0, sigma2/2). The real part is drawn first.
pub fn complex_normal(rng: &mut impl Rng, sigma2: f64) -> Complex64 {
    let s = (sigma2 / 2.0).sqrt();
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * s, im * s)
}
