//! Seeded test-signal families shared by the suites, the CLI, and the tests.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::signal::Spectrum;

/// Derives an independent RNG stream from a master seed and a stream label.
pub fn stream_rng(master: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    ChaCha8Rng::seed_from_u64(master ^ h)
}

/// Random real-valued band-limited spectrum with zero mean: `|c_k| = k^{-decay}`
/// and uniformly random phases, conjugate-symmetric so the signal is real.
pub fn random_band_limited(seed: u64, k_max: i64, decay: f64) -> Spectrum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_band_limited_from(&mut rng, k_max, decay)
}

pub fn random_band_limited_from(rng: &mut impl Rng, k_max: i64, decay: f64) -> Spectrum {
    let mut entries = Vec::new();
    for k in 1..=k_max.max(1) {
        let mag = (k as f64).powf(-decay);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        let c = Complex64::from_polar(mag, phase);
        entries.push((k, c));
        entries.push((-k, c.conj()));
    }
    Spectrum::from_coeffs(entries)
}

/// Builtin input families for the CLI's `norm` command.
#[derive(Debug, Clone)]
pub enum Family {
    Zero,
    Constant(f64),
    Cosine(i64),
    Random { k_max: i64, decay: f64 },
}

impl Family {
    pub fn parse(text: &str) -> Option<Family> {
        let mut parts = text.split_whitespace();
        match parts.next()? {
            "zero" => Some(Family::Zero),
            "constant" => Some(Family::Constant(parts.next()?.parse().ok()?)),
            "cosine" => Some(Family::Cosine(parts.next()?.parse().ok()?)),
            "random" => {
                let k_max = parts.next().and_then(|s| s.parse().ok()).unwrap_or(256);
                let decay = parts.next().and_then(|s| s.parse().ok()).unwrap_or(1.2);
                Some(Family::Random { k_max, decay })
            }
            _ => None,
        }
    }

    pub fn realize(&self, seed: u64) -> Spectrum {
        match *self {
            Family::Zero => Spectrum::new(),
            Family::Constant(c) => Spectrum::constant(Complex64::new(c, 0.0)),
            Family::Cosine(k) => Spectrum::cosine(k, 1.0),
            Family::Random { k_max, decay } => random_band_limited(seed, k_max, decay),
        }
    }

    /// One-line description for `list` output, tagged with the registry ids
    /// that exercise the family.
    pub fn listing() -> &'static [(&'static str, &'static str)] {
        &[
            ("zero", "identically zero signal (trivial checks)"),
            ("constant <c>", "constant signal; differences annihilate it"),
            (
                "cosine <k>",
                "single-frequency mode; closed-form moduli and norms (exactness suite)",
            ),
            (
                "random [k_max] [decay]",
                "seeded band-limited spectrum, |c_k| = k^-decay with uniform phases \
                 (equivalence-ratio and K-functional suites)",
            ),
        ]
    }
}
