use crate::basis::Frame;
use crate::config::{CanonicalConfig, Pair};
use crate::linalg::{Mat3, Vec2, Vec3};
use crate::scalar::Real;
use crate::solutions::{project_to_c, sample_solution, wrap_angle, Branch, Projected};

use super::center::{center_map, CenterPoint};
use super::cylinder::midpoint_matrix;

/// Homogeneous conic `(x, y, 1)ᵀ c (x, y, 1) = 0`, defined up to scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic<T> {
    pub c: Mat3<T>,
}

impl<T: Real> Conic<T> {
    /// Value at the unit-normalized homogeneous point, divided by the
    /// largest coefficient.
    pub fn residual_homogeneous(&self, p: Vec3<T>) -> T {
        let n = p.normalized();
        self.c.quad(n) / self.c.max_abs()
    }

    pub fn residual(&self, p: Vec2<T>) -> T {
        self.residual_homogeneous(Vec3::new(p.x, p.y, T::one()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusKind {
    Hyperbola,
    LinePair,
    Line,
    LineMinusSegment,
    Point,
    Other,
}

impl LocusKind {
    pub fn name(self) -> &'static str {
        match self {
            LocusKind::Hyperbola => "hyperbola",
            LocusKind::LinePair => "linePair",
            LocusKind::Line => "line",
            LocusKind::LineMinusSegment => "lineMinusSegment",
            LocusKind::Point => "point",
            LocusKind::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocusReport<T> {
    pub kind: LocusKind,
    pub conic: Option<Conic<T>>,
    /// Centers of inscribed rectangles at scale 1.
    pub samples: Vec<CenterPoint<T>>,
    pub degenerate: bool,
}

const DET_TOL: f64 = 1e-9;
const REPORT_SAMPLES: usize = 128;
const CLASSIFY_SAMPLES: usize = 4096;
const GAP_TOL: f64 = 1e-3;

/// `|M_AC·(x, y, 1)|² − |M_BD·(x, y, 1)|²`, or `None` if a pair is parallel.
pub fn locus_conic<T: Real>(cfg: &CanonicalConfig<T>) -> Option<Conic<T>> {
    let ac = midpoint_matrix(cfg, Pair::AC).ok()?.m.gram();
    let bd = midpoint_matrix(cfg, Pair::BD).ok()?.m.gram();
    Some(Conic { c: ac.sub_mat(&bd) })
}

/// Classifies by the 3×3 determinant and the quadratic block.
pub fn classify_conic<T: Real>(conic: &Conic<T>) -> LocusKind {
    let c = conic.c.0;
    let s = conic.c.max_abs();
    if s == T::zero() {
        return LocusKind::Other;
    }
    let tol = T::lit(DET_TOL);
    let block = c[0][0].abs().max(c[0][1].abs()).max(c[1][1].abs());
    if block <= tol * s {
        return if c[0][2].abs().max(c[1][2].abs()) > tol * s {
            LocusKind::Line
        } else {
            LocusKind::Other
        };
    }
    let det2 = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    let det3 = conic.c.det();
    if det2 >= -tol * s * s {
        LocusKind::Other
    } else if det3.abs() <= tol * s * s * s {
        LocusKind::LinePair
    } else {
        LocusKind::Hyperbola
    }
}

fn report_samples<T: Real>(frame: &Frame<T>, tol: T) -> Vec<CenterPoint<T>> {
    sample_solution(frame, REPORT_SAMPLES, Branch::Plus)
        .iter()
        .filter_map(|s| match project_to_c(s, tol) {
            Projected::Inscribed(p) => Some(center_map(&p)),
            Projected::AtInfinity => None,
        })
        .collect()
}

/// The set of centers of rectangles inscribed in the configuration.
///
/// Without parallel pairs this is the conic where the two cylinders' cross
/// sections at `w = 1` agree. With a parallel pair the centers lie on its
/// midline, and the covered part of that line is measured by sweeping the
/// solution curve.
pub fn locus<T: Real>(cfg: &CanonicalConfig<T>, frame: &Frame<T>, tol: T) -> LocusReport<T> {
    let samples = report_samples(frame, tol);
    let degenerate = frame.degenerate;
    if !cfg.any_parallel(tol) {
        if let Some(conic) = locus_conic(cfg) {
            return LocusReport {
                kind: classify_conic(&conic),
                conic: Some(conic),
                samples,
                degenerate,
            };
        }
    }
    LocusReport {
        kind: classify_midline(cfg, frame, tol),
        conic: None,
        samples,
        degenerate,
    }
}

/// Point of the midline and unit direction, for the first parallel pair.
fn midline<T: Real>(cfg: &CanonicalConfig<T>, tol: T) -> (Vec2<T>, Vec2<T>) {
    let pair = if cfg.is_parallel(Pair::AC, tol) {
        Pair::AC
    } else {
        Pair::BD
    };
    let (p, q) = CanonicalConfig::<T>::pair_labels(pair);
    let m = cfg.slope(p);
    let b = (cfg.intercept(p) + cfg.intercept(q)) * T::half();
    let dir = Vec2::new(T::one(), m);
    (Vec2::new(T::zero(), b), dir * dir.norm().recip())
}

/// Covered arcs of the midline, viewed as a circle through its point at
/// infinity, decide the kind.
fn classify_midline<T: Real>(cfg: &CanonicalConfig<T>, frame: &Frame<T>, tol: T) -> LocusKind {
    let (base, dir) = midline(cfg, tol);
    let len = T::one() + cfg.b_a.abs();
    let pi = T::PI();
    let tau = T::TAU();
    let samples = sample_solution(frame, CLASSIFY_SAMPLES, Branch::Plus);
    let mut angles = Vec::with_capacity(samples.len());
    let mut centers = Vec::new();
    let w_max = samples.iter().fold(T::zero(), |m, s| m.max(s.scale.abs()));
    for s in &samples {
        let a = match project_to_c(s, tol) {
            Projected::AtInfinity => T::zero(),
            Projected::Inscribed(p) => {
                let c = p.center();
                if s.scale.abs() > tol.sqrt() * w_max {
                    centers.push(c);
                }
                T::two() * ((c - base).dot(dir) / len).atan() + pi
            }
        };
        angles.push(a);
    }
    if cfg.is_parallel(Pair::AC, tol) && cfg.is_parallel(Pair::BD, tol) && !centers.is_empty() {
        let c0 = centers[0];
        let spread = centers.iter().map(|c| (*c - c0).norm()).fold(T::zero(), T::max);
        if spread <= tol.sqrt() * (T::one() + c0.norm()) {
            return LocusKind::Point;
        }
    }
    // angles lie in [0, 2π), infinity at 0
    let mut arcs: Vec<(T, T)> = Vec::new();
    for k in 0..angles.len() {
        let (a0, a1) = (angles[k], angles[(k + 1) % angles.len()]);
        let mut d = a1 - a0;
        if d > pi {
            d = d - tau;
        } else if d < -pi {
            d = d + tau;
        }
        let (start, end) = if d >= T::zero() { (a0, a0 + d) } else { (a0 + d, a0) };
        let (start, end) = (wrap_angle(start), wrap_angle(start) + (end - start));
        if end > tau {
            arcs.push((start, tau));
            arcs.push((T::zero(), end - tau));
        } else {
            arcs.push((start, end));
        }
    }
    arcs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut merged: Vec<(T, T)> = Vec::new();
    for (s, e) in arcs {
        match merged.last_mut() {
            Some(last) if s <= last.1 => last.1 = last.1.max(e),
            _ => merged.push((s, e)),
        }
    }
    let gap_tol = T::lit(GAP_TOL);
    let mut gaps = Vec::new();
    for k in 0..merged.len() {
        let end = merged[k].1;
        let next = if k + 1 < merged.len() {
            merged[k + 1].0
        } else {
            merged[0].0 + tau
        };
        if next - end > gap_tol {
            gaps.push((end, next));
        }
    }
    let infinity_covered = !gaps.iter().any(|&(a, b)| a < tau && b > tau);
    match gaps.len() {
        0 => LocusKind::Line,
        1 if infinity_covered => LocusKind::LineMinusSegment,
        _ => LocusKind::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::build_frame;

    fn setup(v: [f64; 5]) -> (CanonicalConfig<f64>, Frame<f64>) {
        let c = CanonicalConfig::new(v[0], v[1], v[2], v[3], v[4]).unwrap();
        (c, build_frame(&c, 1e-9).unwrap())
    }

    const S: [f64; 5] = [0.0, -1.0, 0.0, 1.0, -1.0];
    const Q: [f64; 5] = [1.0, 2.0, 0.0, 1.0, -1.0];
    const N: [f64; 5] = [2.0, 1.0, -1.0, 0.5, -2.0];

    #[test]
    fn fixture_s_line_pair() {
        let (c, f) = setup(S);
        let r = locus(&c, &f, 1e-9);
        assert_eq!(r.kind, LocusKind::LinePair);
        assert!(r.degenerate);
        let conic = r.conic.unwrap();
        // 16y(3 − 2x) = 48y − 32xy
        let want = Mat3([[0.0, -16.0, 0.0], [-16.0, 0.0, 24.0], [0.0, 24.0, 0.0]]);
        assert!(conic.c.sub_mat(&want).max_abs() < 1e-12);
        for p in &r.samples {
            assert!(conic.residual(Vec2::new(p.x, p.y)).abs() < 1e-9);
            assert!((p.w - 1.0).abs() < 1e-12);
        }
        assert!(!r.samples.is_empty());
    }

    #[test]
    fn fixture_n_hyperbola() {
        let (c, f) = setup(N);
        let r = locus(&c, &f, 1e-9);
        assert_eq!(r.kind, LocusKind::Hyperbola);
        assert!(!r.degenerate);
        let conic = r.conic.unwrap();
        for p in &r.samples {
            assert!(conic.residual(Vec2::new(p.x, p.y)).abs() < 1e-7);
        }
    }

    #[test]
    fn fixture_q_midline() {
        let (c, f) = setup(Q);
        let r = locus(&c, &f, 1e-9);
        assert!(
            matches!(r.kind, LocusKind::Line | LocusKind::LineMinusSegment),
            "{:?}",
            r.kind
        );
        assert!(r.conic.is_none());
        for p in &r.samples {
            assert!((p.y - p.x - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn both_pairs_parallel_point() {
        let (c, f) = setup([1.0, 2.0, -1.0, 1.0, -1.0]);
        assert_eq!(locus(&c, &f, 1e-9).kind, LocusKind::Point);
    }

    #[test]
    fn perpendicular_pairs_give_line() {
        // A ⊥ C and B ⊥ D give congruent circular cross-sections
        let (c, _) = setup([-1.0, 3.0, 1.0, 1.0, -1.0]);
        let conic = locus_conic(&c).unwrap();
        assert_eq!(classify_conic(&conic), LocusKind::Line);
    }
}
