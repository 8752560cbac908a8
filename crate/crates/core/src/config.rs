//! Four-line configurations and their reduction to the canonical form
//!
//! ```text
//! A: y = mA·x + bA    B: y = mB·x + 1    C: y = mC·x    D: y = mD·x
//! ```
//!
//! with C and D meeting only at the origin. A scaled copy `C(w)` replaces the
//! intercepts `bA` and `1` by `bA·w` and `w`.

use crate::error::{Error, Result};
use crate::linalg::{Vec2, Vec3};
use crate::scalar::Real;

/// Position of a line in the cyclic order A, B, C, D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    A,
    B,
    C,
    D,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::A, Label::B, Label::C, Label::D];
}

/// One of the two pairs of opposite lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    AC,
    BD,
}

impl Pair {
    pub fn name(self) -> &'static str {
        match self {
            Pair::AC => "AC",
            Pair::BD => "BD",
        }
    }
}

/// The line `a·x + b·y + c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralLine<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> GeneralLine<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if a == T::zero() && b == T::zero() {
            return Err(Error::InvalidLine);
        }
        Ok(Self { a, b, c })
    }

    /// `y = m·x + b`
    pub fn from_slope_intercept(m: T, b: T) -> Self {
        Self {
            a: m,
            b: -T::one(),
            c: b,
        }
    }

    pub fn normal(&self) -> Vec2<T> {
        Vec2::new(self.a, self.b)
    }

    pub fn homogeneous(&self) -> Vec3<T> {
        Vec3::new(self.a, self.b, self.c)
    }

    /// Signed distance of `p` from the line.
    pub fn signed_distance(&self, p: Vec2<T>) -> T {
        (self.a * p.x + self.b * p.y + self.c) / self.normal().norm()
    }

    /// `|sin|` of the angle between the two lines.
    pub fn parallel_defect(&self, o: &Self) -> T {
        let (n1, n2) = (self.normal(), o.normal());
        n1.cross(n2).abs() / (n1.norm() * n2.norm())
    }

    /// Intersection point; `None` when the lines are parallel within `tol`.
    pub fn intersect(&self, o: &Self, tol: T) -> Option<Vec2<T>> {
        if self.parallel_defect(o) <= tol {
            return None;
        }
        let det = self.a * o.b - self.b * o.a;
        Some(Vec2::new(
            (self.b * o.c - self.c * o.b) / det,
            (self.c * o.a - self.a * o.c) / det,
        ))
    }

    /// Slope, if the line is not vertical.
    pub fn slope(&self) -> Option<T> {
        (self.b != T::zero()).then(|| -self.a / self.b)
    }

    /// y-intercept, if the line is not vertical.
    pub fn intercept(&self) -> Option<T> {
        (self.b != T::zero()).then(|| -self.c / self.b)
    }

    /// Rescales the coefficients so the normal has unit length and the
    /// first nonzero coefficient is positive.
    pub fn canonical_coefficients(&self) -> [T; 3] {
        let n = self.normal().norm();
        let s = if self.a != T::zero() {
            self.a.signum()
        } else {
            self.b.signum()
        };
        [self.a * s / n, self.b * s / n, self.c * s / n]
    }
}

/// Four lines in cyclic vertex order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputConfiguration<T> {
    pub lines: [GeneralLine<T>; 4],
}

impl<T: Real> InputConfiguration<T> {
    pub fn new(lines: [GeneralLine<T>; 4]) -> Self {
        Self { lines }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lines.iter().any(|l| l.a == T::zero() && l.b == T::zero()) {
            return Err(Error::InvalidLine);
        }
        Ok(())
    }
}

/// The canonical configuration; see the module docs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalConfig<T> {
    pub m_a: T,
    pub b_a: T,
    pub m_b: T,
    pub m_c: T,
    pub m_d: T,
}

impl<T: Real> CanonicalConfig<T> {
    pub fn new(m_a: T, b_a: T, m_b: T, m_c: T, m_d: T) -> Result<Self> {
        let cfg = Self {
            m_a,
            b_a,
            m_b,
            m_c,
            m_d,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [self.m_a, self.b_a, self.m_b, self.m_c, self.m_d];
        if vals.iter().any(|v| !v.is_finite()) || self.m_c == self.m_d {
            return Err(Error::InvalidConfig);
        }
        Ok(())
    }

    pub fn slope(&self, l: Label) -> T {
        match l {
            Label::A => self.m_a,
            Label::B => self.m_b,
            Label::C => self.m_c,
            Label::D => self.m_d,
        }
    }

    /// Intercept of the line at scale 1.
    pub fn intercept(&self, l: Label) -> T {
        match l {
            Label::A => self.b_a,
            Label::B => T::one(),
            Label::C | Label::D => T::zero(),
        }
    }

    /// Slope difference `m_X − m_Y`.
    pub fn dm(&self, x: Label, y: Label) -> T {
        self.slope(x) - self.slope(y)
    }

    /// The line `L(w)`.
    pub fn line(&self, l: Label, w: T) -> GeneralLine<T> {
        GeneralLine::from_slope_intercept(self.slope(l), self.intercept(l) * w)
    }

    pub fn lines(&self) -> [GeneralLine<T>; 4] {
        Label::ALL.map(|l| self.line(l, T::one()))
    }

    pub fn as_input(&self) -> InputConfiguration<T> {
        InputConfiguration::new(self.lines())
    }

    /// `y` coordinate of the point of `L(w)` above `x`.
    pub fn y_on(&self, l: Label, x: T, w: T) -> T {
        self.slope(l) * x + self.intercept(l) * w
    }

    pub fn pair_labels(pair: Pair) -> (Label, Label) {
        match pair {
            Pair::AC => (Label::A, Label::C),
            Pair::BD => (Label::B, Label::D),
        }
    }

    /// Whether the two lines of `pair` are parallel, slopes compared within `tol`.
    pub fn is_parallel(&self, pair: Pair, tol: T) -> bool {
        let (x, y) = Self::pair_labels(pair);
        self.dm(x, y).abs() <= tol
    }

    pub fn any_parallel(&self, tol: T) -> bool {
        self.is_parallel(Pair::AC, tol) || self.is_parallel(Pair::BD, tol)
    }
}

/// Similarity and relabeling taking the input lines to canonical form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationRecord<T> {
    /// Input line `shift` becomes A.
    pub label_shift: usize,
    /// When set, B is the line before A in the input order rather than after.
    pub orientation_reversed: bool,
    pub rotation_angle: T,
    /// Added to every point before rotating.
    pub translation: Vec2<T>,
    pub scale_factor: T,
}

impl<T: Real> NormalizationRecord<T> {
    pub fn identity() -> Self {
        Self {
            label_shift: 0,
            orientation_reversed: false,
            rotation_angle: T::zero(),
            translation: Vec2::zero(),
            scale_factor: T::one(),
        }
    }

    /// Input index of the line placed at position `k` (0 = A, ..., 3 = D).
    pub fn source_index(&self, k: usize) -> usize {
        if self.orientation_reversed {
            (self.label_shift + 4 - k) % 4
        } else {
            (self.label_shift + k) % 4
        }
    }

    /// Input lines reordered as A, B, C, D.
    pub fn relabel(&self, input: &InputConfiguration<T>) -> [GeneralLine<T>; 4] {
        [0, 1, 2, 3].map(|k| input.lines[self.source_index(k)])
    }

    /// The point map `p ↦ s·R(θ)·(p + t)`.
    pub fn apply_to_point(&self, p: Vec2<T>) -> Vec2<T> {
        (p + self.translation).rotate(self.rotation_angle) * self.scale_factor
    }

    /// Image of a line under the point map.
    pub fn apply_to_line(&self, l: &GeneralLine<T>) -> GeneralLine<T> {
        let c = l.c - l.normal().dot(self.translation);
        let n = l.normal().rotate(self.rotation_angle);
        GeneralLine {
            a: n.x,
            b: n.y,
            c: c * self.scale_factor,
        }
    }

    /// Relabels and transforms the input lines.
    pub fn apply(&self, input: &InputConfiguration<T>) -> [GeneralLine<T>; 4] {
        self.relabel(input).map(|l| self.apply_to_line(&l))
    }
}

/// Rotation candidates `k·π/16`, in the order they are tried.
fn rotation_candidates<T: Real>() -> impl Iterator<Item = T> {
    let step = T::PI() / T::lit(16.0);
    std::iter::once(0i32)
        .chain((1..8).flat_map(|k| [-k, k]))
        .chain(std::iter::once(-8))
        .map(move |k| step * T::lit(k as f64))
}

fn max_abs_slope<T: Real>(lines: &[GeneralLine<T>; 4], angle: T) -> Option<T> {
    let mut worst = T::zero();
    for l in lines {
        let n = l.normal().rotate(angle);
        if n.y == T::zero() {
            return None;
        }
        worst = worst.max((n.x / n.y).abs());
    }
    Some(worst)
}

/// Reduces four arbitrary lines to the canonical form.
///
/// Relabelings are tried forward with shifts 0..3, then reversed with shifts
/// 0..3; the first one whose C and D meet in a single point not on B wins.
/// The rotation is 0 when that already leaves every slope within `1/tol`;
/// otherwise the `k·π/16` candidate with the smallest maximal slope is used.
pub fn normalize<T: Real>(
    input: &InputConfiguration<T>,
    tol: T,
) -> Result<(CanonicalConfig<T>, NormalizationRecord<T>)> {
    input.validate()?;
    let lines = &input.lines;

    if lines.iter().all(|l| l.parallel_defect(&lines[0]) <= tol) {
        return Err(Error::AllParallel);
    }
    let (i, j) = (0..4)
        .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
        .find(|&(i, j)| lines[i].parallel_defect(&lines[j]) > tol)
        .expect("not all parallel");
    let p = lines[i].intersect(&lines[j], tol).expect("non-parallel");
    let on_line = |l: &GeneralLine<T>, p: Vec2<T>| l.signed_distance(p).abs() <= tol * (T::one() + p.norm());
    if lines.iter().all(|l| on_line(l, p)) {
        return Err(Error::AllConcurrent);
    }

    let mut chosen = None;
    'search: for reversed in [false, true] {
        for shift in 0..4 {
            let rec = NormalizationRecord {
                label_shift: shift,
                orientation_reversed: reversed,
                ..NormalizationRecord::identity()
            };
            let [_, b, c, d] = rec.relabel(input);
            if let Some(origin) = c.intersect(&d, tol) {
                if !on_line(&b, origin) {
                    chosen = Some((rec, origin));
                    break 'search;
                }
            }
        }
    }
    let (mut rec, origin) = chosen.ok_or(Error::AllConcurrent)?;
    rec.translation = -origin;

    let moved = rec.relabel(input).map(|l| rec.apply_to_line(&l));
    let cap = tol.recip();
    let angle = match max_abs_slope(&moved, T::zero()) {
        Some(s) if s <= cap => T::zero(),
        _ => {
            let mut best: Option<(T, T)> = None;
            for cand in rotation_candidates::<T>() {
                if let Some(s) = max_abs_slope(&moved, cand) {
                    if s <= cap && best.is_none_or(|(bs, _)| s < bs * (T::one() - T::lit(1e-12))) {
                        best = Some((s, cand));
                    }
                }
            }
            best.ok_or(Error::AllParallel)?.1
        }
    };
    rec.rotation_angle = angle;

    let rotated = rec.apply(input);
    let b_int = rotated[1].intercept().ok_or(Error::AllConcurrent)?;
    if b_int == T::zero() {
        return Err(Error::AllConcurrent);
    }
    rec.scale_factor = b_int.recip();

    let fin = rec.apply(input);
    let slope = |l: &GeneralLine<T>| l.slope().expect("rotation leaves slopes finite");
    let cfg = CanonicalConfig {
        m_a: slope(&fin[0]),
        b_a: fin[0].intercept().expect("finite"),
        m_b: slope(&fin[1]),
        m_c: slope(&fin[2]),
        m_d: slope(&fin[3]),
    };
    cfg.validate()?;
    Ok((cfg, rec))
}

/// A line `l1·x + l2·y + l3 = 0` of the projective plane; `(0, 0, l3)` is
/// the line at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveLine<T> {
    pub l: Vec3<T>,
}

impl<T: Real> ProjectiveLine<T> {
    /// Scales to unit max-norm so coefficients can be compared directly.
    pub fn new(l: Vec3<T>) -> Result<Self> {
        let m = l.max_abs();
        if m == T::zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self { l: l * m.recip() })
    }

    pub fn normal(&self) -> Vec2<T> {
        Vec2::new(self.l[0], self.l[1])
    }

    pub fn is_at_infinity(&self, tol: T) -> bool {
        self.normal().norm() <= tol * self.l.norm()
    }

    pub fn contains(&self, p: Vec2<T>, tol: T) -> bool {
        let v = self.l[0] * p.x + self.l[1] * p.y + self.l[2];
        v.abs() <= tol * (T::one() + p.norm()) * self.l.norm()
    }

    /// Same line up to scale.
    pub fn same_as(&self, o: &Self, tol: T) -> bool {
        self.l.cross(o.l).norm() <= tol * self.l.norm() * o.l.norm()
    }
}

/// Diagonal lines `(E, F)` of the configuration.
///
/// E joins the origin (C ∩ D) to A ∩ B, F joins A ∩ D to B ∩ C; intersections
/// may lie at infinity. When A = B, E is the line through the origin
/// orthogonal to A; when A = D, F is the line through B ∩ C orthogonal to A.
pub fn diagonals<T: Real>(cfg: &CanonicalConfig<T>) -> (ProjectiveLine<T>, ProjectiveLine<T>) {
    let tol = T::epsilon() * T::lit(64.0);
    let h = |l: Label| cfg.line(l, T::one()).homogeneous();
    let (a, b, c, d) = (h(Label::A), h(Label::B), h(Label::C), h(Label::D));
    let origin = Vec3::new(T::zero(), T::zero(), T::one());
    let coincident = |x: Vec3<T>, y: Vec3<T>| x.cross(y).norm() <= tol * x.norm() * y.norm();
    // Normal (1, mA) is the direction of A.
    let across_a = |p: Vec3<T>| Vec3::new(p[2], p[2] * cfg.m_a, -(p[0] + cfg.m_a * p[1]));

    let e = if coincident(a, b) {
        across_a(origin)
    } else {
        origin.cross(a.cross(b))
    };
    let bc = b.cross(c);
    let f = if coincident(a, d) {
        // B ∥ C as well puts B ∩ C at infinity; the orthogonal line through it
        // is then the line at infinity.
        if bc[2].abs() <= tol * bc.norm() {
            Vec3::new(T::zero(), T::zero(), T::one())
        } else {
            across_a(bc)
        }
    } else {
        a.cross(d).cross(bc)
    };
    (
        ProjectiveLine::new(e).expect("E is well defined"),
        ProjectiveLine::new(f).expect("F is well defined"),
    )
}

/// Whether the diagonals are perpendicular. The line at infinity counts as
/// perpendicular to every line.
pub fn degenerate_by_diagonals<T: Real>(cfg: &CanonicalConfig<T>, tol: T) -> bool {
    let (e, f) = diagonals(cfg);
    let inf_tol = T::epsilon() * T::lit(64.0);
    if e.is_at_infinity(inf_tol) || f.is_at_infinity(inf_tol) {
        return true;
    }
    let (ne, nf) = (e.normal(), f.normal());
    ne.dot(nf).abs() <= tol * ne.norm() * nf.norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn fixture_s() -> CanonicalConfig<f64> {
        CanonicalConfig::new(0.0, -1.0, 0.0, 1.0, -1.0).unwrap()
    }

    fn fixture_n() -> CanonicalConfig<f64> {
        CanonicalConfig::new(2.0, 1.0, -1.0, 0.5, -2.0).unwrap()
    }

    fn line(a: f64, b: f64, c: f64) -> GeneralLine<f64> {
        GeneralLine::new(a, b, c).unwrap()
    }

    fn coeff_err(x: &GeneralLine<f64>, y: &GeneralLine<f64>) -> f64 {
        let (p, q) = (x.canonical_coefficients(), y.canonical_coefficients());
        (0..3).map(|i| (p[i] - q[i]).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn canonical_input_is_fixed() {
        let (cfg, rec) = normalize(&fixture_s().as_input(), 1e-9).unwrap();
        assert_eq!(cfg, fixture_s());
        assert_eq!(rec, NormalizationRecord::identity());
    }

    #[test]
    fn rotated_fixture_s_normalizes_back() {
        // Fixture S rotated by a quarter turn.
        let input = InputConfiguration::new([
            line(1.0, 0.0, -1.0), // x = 1
            line(1.0, 0.0, 1.0),  // x = -1
            line(1.0, 1.0, 0.0),  // y = -x
            line(1.0, -1.0, 0.0), // y = x
        ]);
        let (cfg, rec) = normalize(&input, 1e-9).unwrap();
        let s = fixture_s();
        for (got, want) in [
            (cfg.m_a, s.m_a),
            (cfg.b_a, s.b_a),
            (cfg.m_b, s.m_b),
            (cfg.m_c, s.m_c),
            (cfg.m_d, s.m_d),
        ] {
            assert!((got - want).abs() < 1e-12, "{cfg:?}");
        }
        assert!((rec.rotation_angle + FRAC_PI_2).abs() < 1e-12);
        for (a, b) in rec.apply(&input).iter().zip(cfg.lines().iter()) {
            assert!(coeff_err(a, b) < 1e-12);
        }
    }

    #[test]
    fn concurrent_and_parallel_inputs_rejected() {
        let conc = InputConfiguration::new([
            line(1.0, 0.0, 0.0),
            line(0.0, 1.0, 0.0),
            line(1.0, 1.0, 0.0),
            line(1.0, -1.0, 0.0),
        ]);
        assert_eq!(normalize(&conc, 1e-9), Err(Error::AllConcurrent));
        let par = InputConfiguration::new([
            line(1.0, 2.0, 0.0),
            line(1.0, 2.0, 1.0),
            line(-2.0, -4.0, 3.0),
            line(1.0, 2.0, -5.0),
        ]);
        assert_eq!(normalize(&par, 1e-9), Err(Error::AllParallel));
        assert_eq!(GeneralLine::new(0.0, 0.0, 1.0), Err(Error::InvalidLine));
    }

    #[test]
    fn relabels_when_c_and_d_are_parallel() {
        // Positions 2 and 3 are parallel, so the forward shift 0 is rejected.
        let input = InputConfiguration::new([
            line(1.0, -1.0, 0.5),
            line(0.0, 1.0, -2.0),
            line(1.0, 1.0, 0.0),
            line(1.0, 1.0, -3.0),
        ]);
        let (cfg, rec) = normalize(&input, 1e-9).unwrap();
        assert_ne!((rec.label_shift, rec.orientation_reversed), (0, false));
        for (a, b) in rec.apply(&input).iter().zip(cfg.lines().iter()) {
            assert!(coeff_err(a, b) < 1e-12);
        }
    }

    #[test]
    fn negative_scale_when_b_intercept_negative() {
        let input = InputConfiguration::new([
            GeneralLine::from_slope_intercept(0.5f64, 3.0),
            GeneralLine::from_slope_intercept(0.25, -2.0),
            GeneralLine::from_slope_intercept(1.0, 0.0),
            GeneralLine::from_slope_intercept(-1.0, 0.0),
        ]);
        let (cfg, rec) = normalize(&input, 1e-9).unwrap();
        assert!(rec.scale_factor < 0.0);
        assert!((cfg.b_a + 1.5).abs() < 1e-12);
    }

    #[test]
    fn rotation_candidates_cover_half_turn() {
        let c: Vec<f64> = rotation_candidates().collect();
        assert_eq!(c.len(), 16);
        assert_eq!(c[0], 0.0);
        assert!((c[15] + PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn diagonals_of_fixture_s() {
        let (e, f) = diagonals(&fixture_s());
        assert!(e.same_as(&ProjectiveLine::new(Vec3::new(0.0, 1.0, 0.0)).unwrap(), 1e-12));
        assert!(f.same_as(&ProjectiveLine::new(Vec3::new(1.0, 0.0, -1.0)).unwrap(), 1e-12));
        assert!(degenerate_by_diagonals(&fixture_s(), 1e-9));
    }

    #[test]
    fn diagonals_of_fixture_n() {
        let (e, f) = diagonals(&fixture_n());
        assert!(e.same_as(&ProjectiveLine::new(Vec3::new(1.0, 0.0, 0.0)).unwrap(), 1e-12));
        assert!(f.contains(Vec2::new(-0.25, 0.5), 1e-12));
        assert!(f.contains(Vec2::new(2.0 / 3.0, 1.0 / 3.0), 1e-12));
        assert!(!degenerate_by_diagonals(&fixture_n(), 1e-9));
    }

    #[test]
    fn coincident_a_and_b() {
        // A = B: y = 0.5x + 1
        let cfg = CanonicalConfig::new(0.5f64, 1.0, 0.5, 2.0, -1.0).unwrap();
        let (e, _) = diagonals(&cfg);
        // through the origin, orthogonal to direction (1, 0.5)
        assert!(e.contains(Vec2::zero(), 1e-12));
        assert!(e.normal().cross(Vec2::new(1.0, 0.5)).abs() < 1e-12);
    }

    #[test]
    fn f_at_infinity_is_degenerate() {
        // A ∥ D and B ∥ C
        let cfg = CanonicalConfig::new(-1.0, 2.0, 3.0, 3.0, -1.0).unwrap();
        let (_, f) = diagonals(&cfg);
        assert!(f.is_at_infinity(1e-12));
        assert!(degenerate_by_diagonals(&cfg, 1e-9));
    }

    #[test]
    fn coincident_a_and_d() {
        let cfg = CanonicalConfig::new(-1.0f64, 0.0, 0.5, 2.0, -1.0).unwrap();
        let (_, f) = diagonals(&cfg);
        // B ∩ C: 0.5x + 1 = 2x
        let bc = Vec2::new(2.0 / 3.0, 4.0 / 3.0);
        assert!(f.contains(bc, 1e-12));
        assert!(f.normal().cross(Vec2::new(1.0, -1.0)).abs() < 1e-12);
    }
}
