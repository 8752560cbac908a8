//! Configuration generators shared by the integration suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectflow::Config64;

pub const S: [f64; 5] = [0.0, -1.0, 0.0, 1.0, -1.0];
pub const Q: [f64; 5] = [1.0, 2.0, 0.0, 1.0, -1.0];
pub const N: [f64; 5] = [2.0, 1.0, -1.0, 0.5, -2.0];

pub fn config(v: [f64; 5]) -> Config64 {
    Config64::new(v[0], v[1], v[2], v[3], v[4]).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero_intercept(rng: &mut impl Rng) -> f64 {
    loop {
        let b: f64 = rng.gen_range(-5.0..5.0);
        if b != 0.0 {
            return b;
        }
    }
}

/// Slopes uniform in [−5, 5] with |mC − mD| ≥ 1e−3, bA uniform in [−5, 5] \ {0}.
pub fn random_config(rng: &mut impl Rng) -> Config64 {
    loop {
        let m: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        if (m[2] - m[3]).abs() < 1e-3 {
            continue;
        }
        let b_a = nonzero_intercept(rng);
        return Config64::new(m[0], b_a, m[1], m[2], m[3]).unwrap();
    }
}

pub fn random_configs(n: usize, seed: u64) -> Vec<Config64> {
    let mut r = rng(seed);
    (0..n).map(|_| random_config(&mut r)).collect()
}

/// A random configuration with A ∥ C, B ∥ D, or both.
pub fn parallel_config(rng: &mut impl Rng) -> Config64 {
    let base = random_config(rng);
    let kind = rng.gen_range(0..3);
    let (mut m_a, mut m_b) = (base.m_a, base.m_b);
    if kind != 1 {
        m_a = base.m_c;
    }
    if kind != 0 {
        m_b = base.m_d;
    }
    Config64::new(m_a, base.b_a, m_b, base.m_c, base.m_d).unwrap()
}

/// Cosine of the angle between the diagonal lines, computed from the four
/// vertices of the complete quadrilateral.
pub fn diagonal_cosine(m_a: f64, b_a: f64, m_b: f64, m_c: f64, m_d: f64) -> f64 {
    let ab_x = (1.0 - b_a) / (m_a - m_b);
    let e = (ab_x, m_a * ab_x + b_a);
    let ad_x = -b_a / (m_a - m_d);
    let bc_x = 1.0 / (m_c - m_b);
    let f = (bc_x - ad_x, m_c * bc_x - m_d * ad_x);
    (e.0 * f.0 + e.1 * f.1) / (e.0.hypot(e.1) * f.0.hypot(f.1))
}

/// A configuration whose diagonals are perpendicular, found by bisection on
/// `b_A` for random slopes.
pub fn degenerate_config(rng: &mut impl Rng) -> Config64 {
    loop {
        let base = random_config(rng);
        let (m_a, m_b, m_c, m_d) = (base.m_a, base.m_b, base.m_c, base.m_d);
        if (m_a - m_b).abs() < 0.05 || (m_a - m_d).abs() < 0.05 || (m_b - m_c).abs() < 0.05 {
            continue;
        }
        if (m_a - m_c).abs() < 0.05 || (m_b - m_d).abs() < 0.05 {
            continue;
        }
        let g = |b: f64| diagonal_cosine(m_a, b, m_b, m_c, m_d);
        let grid: Vec<f64> = (0..=400).map(|k| -5.0 + 10.0 * k as f64 / 400.0).collect();
        let bracket = grid.windows(2).find(|w| {
            let (g0, g1) = (g(w[0]), g(w[1]));
            g0.is_finite() && g1.is_finite() && g0 * g1 < 0.0
        });
        let Some(w) = bracket else { continue };
        let (mut lo, mut hi) = (w[0], w[1]);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if (g(mid) < 0.0) == (g(lo) < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let b = if g(lo).abs() < g(hi).abs() { lo } else { hi };
        if g(b).abs() > 1e-12 || b.abs() < 1e-3 || (b - 1.0).abs() < 1e-3 {
            continue;
        }
        return Config64::new(m_a, b, m_b, m_c, m_d).unwrap();
    }
}

pub fn degenerate_configs(n: usize, seed: u64) -> Vec<Config64> {
    let mut r = rng(seed);
    (0..n).map(|_| degenerate_config(&mut r)).collect()
}

pub mod strategies {
    use proptest::prelude::*;
    use rectflow::Config64;

    fn slope() -> impl Strategy<Value = f64> {
        -5.0..5.0f64
    }

    /// Same distribution as [`super::random_config`].
    pub fn config() -> impl Strategy<Value = Config64> {
        (slope(), -5.0..5.0f64, slope(), slope(), slope())
            .prop_filter("C and D nearly parallel", |(_, b, _, c, d)| {
                (c - d).abs() >= 1e-3 && *b != 0.0
            })
            .prop_map(|(a, b, mb, c, d)| Config64::new(a, b, mb, c, d).unwrap())
    }

    /// Configurations with A ∥ C, B ∥ D, or both.
    pub fn parallel_config() -> impl Strategy<Value = Config64> {
        (config(), 0..3u8).prop_map(|(c, kind)| {
            let m_a = if kind != 1 { c.m_c } else { c.m_a };
            let m_b = if kind != 0 { c.m_d } else { c.m_b };
            Config64::new(m_a, c.b_a, m_b, c.m_c, c.m_d).unwrap()
        })
    }

    pub fn any_config() -> impl Strategy<Value = Config64> {
        prop_oneof![4 => config(), 1 => parallel_config()]
    }
}

/// Fixed-seed proptest settings without regression files.
pub fn cases(n: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases: n,
        failure_persistence: None,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
        ..Default::default()
    }
}
