//! Mapping between real update vectors and complex baseband symbols.
//!
//! A length-`d` update is zero-padded to `2sN` entries, `N = ceil(d / 2s)`,
//! and laid out as `N` blocks of `s` complex samples. Using 0-based indices,
//! entry `i` of block `n` carries
//!
//! ```text
//! re = v[2ns + i],   im = v[(2n + 1)s + i]
//! ```
//!
//! so the real parts of block `n` occupy global indices `2ns .. (2n+1)s` and
//! the imaginary parts `(2n+1)s .. (2n+2)s`. The mapping is exactly
//! invertible; the original dimension is carried alongside the blocks so the
//! padding can be stripped without out-of-band state.

use alloc::vec::Vec;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid_arg, shape_err, Result};
use crate::vector::ModelVector;

/// `N` blocks of `s` complex baseband samples plus the pre-padding length.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymbolBlocks {
    entries: Vec<Complex64>,
    s: usize,
    d_orig: usize,
}

impl SymbolBlocks {
    /// Subchannels per block.
    pub fn subchannels(&self) -> usize {
        self.s
    }

    /// Block count `N`.
    pub fn block_count(&self) -> usize {
        self.entries.len() / self.s
    }

    /// Dimension of the packed real vector.
    pub fn dim(&self) -> usize {
        self.d_orig
    }

    /// Entry `i` of block `n`.
    pub fn entry(&self, n: usize, i: usize) -> Complex64 {
        self.entries[n * self.s + i]
    }

    pub fn block(&self, n: usize) -> &[Complex64] {
        &self.entries[n * self.s..(n + 1) * self.s]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.entries.iter()
    }

    /// Total energy over all blocks, `sum |entry|^2`. Padding contributes
    /// zero, so this equals the squared norm of the packed vector.
    pub fn energy(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Entrywise scaling (used for the transmit power factor).
    pub fn scaled(&self, factor: f64) -> SymbolBlocks {
        SymbolBlocks {
            entries: self.entries.iter().map(|c| c * factor).collect(),
            s: self.s,
            d_orig: self.d_orig,
        }
    }
}

/// Pack a length-`d` update into `N = ceil(d / 2s)` blocks of `s` complex
/// samples, zero-padding the tail.
pub fn pack_update(update: &ModelVector, s: usize) -> Result<SymbolBlocks> {
    if s == 0 {
        return Err(invalid_arg!("subchannel count s must be positive"));
    }
    let d = update.len();
    if d == 0 {
        return Err(invalid_arg!("cannot pack an empty update"));
    }
    let n_blocks = d.div_ceil(2 * s);
    let pad = |j: usize| if j < d { update[j] } else { 0.0 };
    let mut entries = Vec::with_capacity(n_blocks * s);
    for n in 0..n_blocks {
        for i in 0..s {
            entries.push(Complex64::new(pad(2 * n * s + i), pad((2 * n + 1) * s + i)));
        }
    }
    Ok(SymbolBlocks { entries, s, d_orig: d })
}

/// Invert [`pack_update`], truncating the zero padding.
pub fn unpack_blocks(blocks: &SymbolBlocks) -> Result<ModelVector> {
    let s = blocks.s;
    if s == 0 || blocks.entries.len() % s != 0 {
        return Err(shape_err!(
            "inconsistent blocks: {} entries for s={s}",
            blocks.entries.len()
        ));
    }
    let d = blocks.d_orig;
    if d > 2 * s * blocks.block_count() {
        return Err(shape_err!(
            "d_orig={d} exceeds block capacity {}",
            2 * s * blocks.block_count()
        ));
    }
    let mut values = Vec::with_capacity(d);
    for j in 0..d {
        let n = j / (2 * s);
        let r = j % (2 * s);
        let e = blocks.entry(n, r % s);
        values.push(if r < s { e.re } else { e.im });
    }
    Ok(ModelVector::from_vec(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn mv(values: Vec<f64>) -> ModelVector {
        ModelVector::new(values).unwrap()
    }

    #[test]
    fn two_blocks_no_padding() {
        // d=4, s=1: [a,b,c,e] -> (a+jb), (c+je).
        let blocks = pack_update(&mv(vec![1.0, 2.0, 3.0, 4.0]), 1).unwrap();
        assert_eq!(blocks.block_count(), 2);
        assert_eq!(blocks.entry(0, 0), Complex64::new(1.0, 2.0));
        assert_eq!(blocks.entry(1, 0), Complex64::new(3.0, 4.0));
    }

    #[test]
    fn zero_padding_tail() {
        // d=3, s=1: [a,b,c] -> (a+jb), (c+j0).
        let blocks = pack_update(&mv(vec![1.0, 2.0, 3.0]), 1).unwrap();
        assert_eq!(blocks.block_count(), 2);
        assert_eq!(blocks.entry(1, 0), Complex64::new(3.0, 0.0));
    }

    #[test]
    fn zero_vector() {
        let blocks = pack_update(&mv(vec![0.0, 0.0]), 1).unwrap();
        assert_eq!(blocks.block_count(), 1);
        assert_eq!(blocks.entry(0, 0), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn unpack_layout() {
        let blocks = SymbolBlocks {
            entries: vec![Complex64::new(1.0, 2.0)],
            s: 1,
            d_orig: 2,
        };
        assert_eq!(unpack_blocks(&blocks).unwrap().as_slice(), &[1.0, 2.0]);
        let truncated = SymbolBlocks { d_orig: 1, ..blocks };
        assert_eq!(unpack_blocks(&truncated).unwrap().as_slice(), &[1.0]);
    }

    #[test]
    fn roundtrip_d7_s2() {
        let v = mv(vec![0.5, -1.5, 2.0, -2.5, 3.0, -3.5, 4.0]);
        let blocks = pack_update(&v, 2).unwrap();
        assert_eq!(blocks.block_count(), 2);
        assert_eq!(unpack_blocks(&blocks).unwrap(), v);
    }

    #[test]
    fn invalid_subchannel_count() {
        assert!(pack_update(&mv(vec![1.0]), 0).is_err());
    }

    #[test]
    fn real_imag_index_ranges() {
        // Real parts of block n sit at global indices 2ns..(2n+1)s and
        // imaginary parts at (2n+1)s..(2n+2)s.
        let s = 3;
        let d = 12;
        let v = mv((0..d).map(|j| j as f64).collect());
        let blocks = pack_update(&v, s).unwrap();
        for n in 0..blocks.block_count() {
            for i in 0..s {
                assert_eq!(blocks.entry(n, i).re, (2 * n * s + i) as f64);
                assert_eq!(blocks.entry(n, i).im, ((2 * n + 1) * s + i) as f64);
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip_and_energy(
            d in 1usize..=256,
            s_raw in 1usize..=256,
            seed in any::<u64>(),
        ) {
            let s = 1 + s_raw % d; // 1 <= s <= d
            let mut rng = crate::rng::RngStream::root(seed).rng();
            let v = ModelVector::from_vec(
                (0..d).map(|_| crate::rng::normal(&mut rng, 1.0)).collect(),
            );
            let blocks = pack_update(&v, s).unwrap();
            prop_assert_eq!(blocks.block_count(), d.div_ceil(2 * s));
            // Exact bit-level roundtrip.
            prop_assert_eq!(unpack_blocks(&blocks).unwrap(), v.clone());
            // Energy preservation (summation order differs, allow 1e-12).
            let rel = (blocks.energy() - v.norm_sqr()).abs() / v.norm_sqr().max(1e-300);
            prop_assert!(rel < 1e-12);
        }
    }
}
