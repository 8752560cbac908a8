//! Brute-force search for unit rectangles, independent of the basis and the
//! solution curve. Each scale slice is scanned with multi-start Newton
//! iteration on the two diagonal-length conditions.

use crate::config::CanonicalConfig;
use crate::error::{Error, Result};
use crate::linalg::Vec2;
use crate::parallelogram::Parallelogram;
use crate::scalar::Real;
use crate::solutions::SolutionSample;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleHit<T> {
    pub x_a: T,
    pub x_b: T,
    pub w: T,
    pub vertices: [Vec2<T>; 4],
    /// `max(| |d_AC|² − 1/2 |, | |d_BD|² − 1/2 |)`.
    pub residual: T,
}

const MAX_ITER: usize = 80;
const DEDUP: f64 = 1e-6;
const FD_STEP: f64 = 1e-7;

fn eval<T: Real>(cfg: &CanonicalConfig<T>, x_a: T, x_b: T, w: T) -> Option<(T, T)> {
    let d = Parallelogram::from_params(cfg, x_a, x_b, w).ok()?.diagonals();
    Some((d.ac.norm_sq() - T::half(), d.bd.norm_sq() - T::half()))
}

/// Half-width of the square of starting points.
pub fn search_box<T: Real>(cfg: &CanonicalConfig<T>) -> T {
    T::lit(8.0) * (T::one() + cfg.b_a.abs()) / (cfg.m_c - cfg.m_d).abs().min(T::one())
}

fn newton<T: Real>(cfg: &CanonicalConfig<T>, mut x: T, mut y: T, w: T, scale: T, tol: T) -> Option<(T, T, T)> {
    let h = T::lit(FD_STEP) * scale;
    let mut best = None;
    for _ in 0..MAX_ITER {
        let (f0, f1) = eval(cfg, x, y, w)?;
        let r = f0.abs().max(f1.abs());
        if !r.is_finite() {
            return None;
        }
        if r <= tol {
            best = Some((x, y, r));
        }
        let (gx0, gx1) = eval(cfg, x + h, y, w)?;
        let (gy0, gy1) = eval(cfg, x, y + h, w)?;
        let (j00, j10) = ((gx0 - f0) / h, (gx1 - f1) / h);
        let (j01, j11) = ((gy0 - f0) / h, (gy1 - f1) / h);
        let det = j00 * j11 - j01 * j10;
        if det == T::zero() || !det.is_finite() {
            break;
        }
        let dx = (j11 * f0 - j01 * f1) / det;
        let dy = (j00 * f1 - j10 * f0) / det;
        let (nx, ny) = (x - dx, y - dy);
        if nx == x && ny == y {
            break;
        }
        if let Some((bx, by, br)) = best {
            // keep polishing while the residual keeps falling
            let (n0, n1) = eval(cfg, nx, ny, w)?;
            if n0.abs().max(n1.abs()) >= br {
                return Some((bx, by, br));
            }
        }
        x = nx;
        y = ny;
    }
    best
}

/// Unit rectangles on each slice `w ∈ w_grid`, from `grid_n × grid_n`
/// Newton starts over [`search_box`]. Converged points (residual at most
/// `tol`) are deduplicated per slice and returned in slice order, sorted by
/// `(x_A, x_B)` within a slice.
pub fn oracle_scan<T: Real>(cfg: &CanonicalConfig<T>, w_grid: &[T], grid_n: usize, tol: T) -> Vec<OracleHit<T>> {
    let grid_n = grid_n.max(8);
    let half = search_box(cfg);
    let step = T::two() * half / T::lit((grid_n - 1) as f64);
    let dedup = T::lit(DEDUP);
    let mut out = Vec::new();
    for &w in w_grid {
        let mut found: Vec<(T, T, T)> = Vec::new();
        for i in 0..grid_n {
            for j in 0..grid_n {
                let x0 = -half + step * T::lit(i as f64);
                let y0 = -half + step * T::lit(j as f64);
                if let Some(hit) = newton(cfg, x0, y0, w, half, tol) {
                    found.push(hit);
                }
            }
        }
        found.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.partial_cmp(&b.1).unwrap()));
        let mut kept: Vec<(T, T, T)> = Vec::new();
        for h in found {
            if kept.iter().all(|k| (k.0 - h.0).hypot(k.1 - h.1) > dedup) {
                kept.push(h);
            }
        }
        for (x_a, x_b, residual) in kept {
            if let Ok(p) = Parallelogram::from_params(cfg, x_a, x_b, w) {
                out.push(OracleHit {
                    x_a,
                    x_b,
                    w,
                    vertices: p.vertices,
                    residual,
                });
            }
        }
    }
    out
}

fn tuple_dist<T: Real>(a: &[Vec2<T>; 4], b: &[Vec2<T>; 4]) -> T {
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |s, (p, q)| s + (*p - *q).norm_sq())
        .sqrt()
}

fn directed<T: Real>(from: &[[Vec2<T>; 4]], to: &[[Vec2<T>; 4]]) -> T {
    from.iter()
        .map(|a| to.iter().map(|b| tuple_dist(a, b)).fold(T::infinity(), T::min))
        .fold(T::zero(), T::max)
}

/// Symmetric Hausdorff distance between the vertex tuples of hits and
/// samples, each tuple read as a point of ℝ⁸.
pub fn set_distance<T: Real>(hits: &[OracleHit<T>], samples: &[SolutionSample<T>]) -> Result<T> {
    if hits.is_empty() || samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let a: Vec<_> = hits.iter().map(|h| h.vertices).collect();
    let b: Vec<_> = samples.iter().map(|s| s.rect.vertices).collect();
    Ok(directed(&a, &b).max(directed(&b, &a)))
}
