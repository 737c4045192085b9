//! Seeded random elements for the randomized verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coordalg::{Coord, Mono};
use crate::podles::Podles;
use crate::qscalar::RationalQ;

/// Deterministic sampler; identical seeds give identical sequences.
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn below(&mut self, n: u32) -> u32 {
        self.rng.gen_range(0..n)
    }

    /// One of `1, -1, q, -q, q^{-1}, -q^{-1}`.
    pub fn small_coeff(&mut self) -> RationalQ {
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let e = self.rng.gen_range(-1..=1);
        &RationalQ::from_int(sign) * &RationalQ::q_pow(e)
    }

    /// Random normal monomial of total degree at most `max_deg`.
    pub fn mono(&mut self, max_deg: u32) -> Mono {
        loop {
            let ad = self.rng.gen_range(0..=max_deg);
            let b = self.rng.gen_range(0..=max_deg);
            let c = self.rng.gen_range(0..=max_deg);
            if ad + b + c > max_deg {
                continue;
            }
            return if self.rng.gen_bool(0.5) {
                Mono::new(ad, b as i32, c as i32, 0)
            } else {
                Mono::new(0, b as i32, c as i32, ad)
            };
        }
    }

    /// Random element with up to `terms` monomials of degree at most `max_deg`.
    pub fn coord(&mut self, max_deg: u32, terms: u32) -> Coord {
        let n = self.rng.gen_range(1..=terms.max(1));
        let mut x = Coord::zero(&crate::qscalar::Exact);
        for _ in 0..n {
            let m = self.mono(max_deg);
            x.add_term(m, self.small_coeff());
        }
        x
    }

    /// Basis monomial `A^i B^j` or `A^i B*^k` with exponents at most `max_exp`.
    pub fn podles_mono(&mut self, max_exp: u32) -> Podles {
        let i = self.rng.gen_range(0..=max_exp);
        let j = self.rng.gen_range(-(max_exp as i32)..=max_exp as i32);
        Podles::basis(i, j)
    }

    /// Random Podles element with up to `terms` basis monomials.
    pub fn podles(&mut self, max_exp: u32, terms: u32) -> Podles {
        let n = self.rng.gen_range(1..=terms.max(1));
        let mut x = Podles::zero();
        for _ in 0..n {
            let m = self.podles_mono(max_exp);
            x = &x + &m.scale(&self.small_coeff());
        }
        x
    }
}
