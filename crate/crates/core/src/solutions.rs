//! Unit rectangles of Π and the closed curve `Φ` that parametrizes them.
//!
//! In `(u, v, t)` coordinates the unit rectangles are the intersection of
//! the cylinders `2u² + 2μt² = 1` and `2v² + 2λt² = 1`; that set is the union
//! of the images of `Φ` and `−Φ`.

use crate::basis::{Frame, Uvt};
use crate::parallelogram::Parallelogram;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign<T: Real>(self) -> T {
        match self {
            Branch::Plus => T::one(),
            Branch::Minus => -T::one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionSample<T> {
    pub theta: T,
    pub coords: Uvt<T>,
    pub rect: Parallelogram<T>,
    pub scale: T,
    pub branch: Branch,
}

/// Cylinder and rectangle-cone residuals of a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals<T> {
    /// `2u² + 2μt² − 1`, zero when the BD diagonal has squared length 1/2.
    pub cyl_bd: T,
    /// `2v² + 2λt² − 1`.
    pub cyl_ac: T,
    /// `v² − u² − (μ − λ)t²`, zero exactly on rectangles.
    pub rect_cone: T,
}

impl<T: Real> Residuals<T> {
    pub fn max_abs(&self) -> T {
        self.cyl_bd.abs().max(self.cyl_ac.abs()).max(self.rect_cone.abs())
    }
}

pub fn residuals<T: Real>(frame: &Frame<T>, c: Uvt<T>) -> Residuals<T> {
    let two = T::two();
    let (u2, v2, t2) = (c.u * c.u, c.v * c.v, c.t * c.t);
    Residuals {
        cyl_bd: two * u2 + two * frame.mu * t2 - T::one(),
        cyl_ac: two * v2 + two * frame.lambda * t2 - T::one(),
        rect_cone: v2 - u2 - (frame.mu - frame.lambda) * t2,
    }
}

fn clamped_sqrt<T: Real>(x: T) -> T {
    if x < T::zero() && x >= -T::lit(1e-12) {
        T::zero()
    } else {
        x.sqrt()
    }
}

/// The curve `Φ(θ)`, built on whichever of `λ`, `μ` is larger.
pub fn phi<T: Real>(frame: &Frame<T>, theta: T) -> Uvt<T> {
    let (lambda, mu) = (frame.lambda, frame.mu);
    let (s, c) = theta.sin_cos();
    let r2 = T::two().sqrt();
    if lambda >= mu {
        let k = (T::two() * lambda).sqrt();
        Uvt::new(clamped_sqrt(lambda - mu * c * c) / k, s / r2, c / k)
    } else {
        let k = (T::two() * mu).sqrt();
        Uvt::new(s / r2, clamped_sqrt(mu - lambda * c * c) / k, c / k)
    }
}

pub fn sample_at<T: Real>(frame: &Frame<T>, theta: T, branch: Branch) -> SolutionSample<T> {
    let p = phi(frame, theta);
    let coords = if branch == Branch::Plus { p } else { p.neg() };
    let (rect, scale) = frame.from_uvt(coords);
    SolutionSample {
        theta,
        coords,
        rect,
        scale,
        branch,
    }
}

/// `n` samples at `θ_k = 2πk/n` on one branch.
pub fn sample_solution<T: Real>(frame: &Frame<T>, n: usize, branch: Branch) -> Vec<SolutionSample<T>> {
    let step = T::TAU() / T::lit(n as f64);
    (0..n)
        .map(|k| sample_at(frame, step * T::lit(k as f64), branch))
        .collect()
}

/// Moves a sample along the flow by `rho`, staying on the branch.
pub fn flow_step<T: Real>(frame: &Frame<T>, theta: T, rho: T, branch: Branch) -> SolutionSample<T> {
    sample_at(frame, wrap_angle(theta + rho), branch)
}

/// Reduces an angle to `[0, 2π)`.
pub fn wrap_angle<T: Real>(theta: T) -> T {
    let tau = T::TAU();
    let r = theta - (theta / tau).floor() * tau;
    if r >= tau {
        r - tau
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Projected<T> {
    Inscribed(Parallelogram<T>),
    AtInfinity,
}

/// Scales a unit rectangle into `C` itself, or reports it at infinity.
pub fn project_to_c<T: Real>(s: &SolutionSample<T>, tol: T) -> Projected<T> {
    if s.scale.abs() <= tol {
        Projected::AtInfinity
    } else {
        Projected::Inscribed(s.rect.scaled(s.scale.recip()))
    }
}

/// Unit rectangles lying on both `Φ` and `−Φ`: `±T` when the configuration
/// is degenerate, none otherwise.
pub fn solution_intersection<T: Real>(frame: &Frame<T>, tol: T) -> Vec<Uvt<T>> {
    if (frame.lambda - frame.mu).abs() <= tol {
        vec![
            Uvt::new(T::zero(), T::zero(), T::one()),
            Uvt::new(T::zero(), T::zero(), -T::one()),
        ]
    } else {
        Vec::new()
    }
}

/// Points of both branches whose scale equals one of `levels`.
///
/// Each branch is sampled on an `n`-point θ grid; sign changes of
/// `scale − level` between neighbours are refined by bisection to full
/// precision. Tangential touches that do not change sign are not reported.
pub fn samples_at_scales<T: Real>(frame: &Frame<T>, n: usize, levels: &[T]) -> Vec<SolutionSample<T>> {
    let step = T::TAU() / T::lit(n as f64);
    let mut out = Vec::new();
    for branch in [Branch::Plus, Branch::Minus] {
        let w_at = |theta: T| frame.scale_of(sample_coords(frame, theta, branch));
        let grid: Vec<T> = (0..=n).map(|k| w_at(step * T::lit(k as f64))).collect();
        for &level in levels {
            for k in 0..n {
                let (f0, f1) = (grid[k] - level, grid[k + 1] - level);
                if f0 == T::zero() {
                    out.push(sample_at(frame, step * T::lit(k as f64), branch));
                    continue;
                }
                if f0 * f1 >= T::zero() {
                    continue;
                }
                let (mut lo, mut hi) = (step * T::lit(k as f64), step * T::lit((k + 1) as f64));
                let mut flo = f0;
                for _ in 0..200 {
                    let mid = (lo + hi) * T::half();
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    let fm = w_at(mid) - level;
                    if fm == T::zero() {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if (fm < T::zero()) == (flo < T::zero()) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                out.push(sample_at(frame, (lo + hi) * T::half(), branch));
            }
        }
    }
    out
}

fn sample_coords<T: Real>(frame: &Frame<T>, theta: T, branch: Branch) -> Uvt<T> {
    let p = phi(frame, theta);
    if branch == Branch::Plus {
        p
    } else {
        p.neg()
    }
}
