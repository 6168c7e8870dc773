#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub fn probe() -> f64 {
    use num_traits::Float;
    use rand::Rng;
    use rand_distr::StandardNormal;
    let mut rng = <rand_chacha::ChaCha12Rng as rand::SeedableRng>::seed_from_u64(1);
    let x: f64 = rng.sample(StandardNormal);
    let c = num_complex::Complex64::new(x, 1.0);
    c.norm_sqr().sqrt()
}
