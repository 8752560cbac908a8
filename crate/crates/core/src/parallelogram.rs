//! The space Π of parallelograms conformally inscribed in a configuration.
//!
//! An element is inscribed in `C(w)` for some scale `w`, with vertex `v_L` on
//! line `L(w)`. Π is a 3-dimensional real vector space parametrized by
//! `(x_A, x_B, w)`, with inner product `P_AC·Q_AC + P_BD·Q_BD` on the diagonal
//! vectors.

use crate::basis::{Frame, Uvt};
use crate::config::{CanonicalConfig, Label};
use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec2, Vec3};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DiagonalPair<T> {
    pub ac: Vec2<T>,
    pub bd: Vec2<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SidePair<T> {
    pub ab: Vec2<T>,
    pub bc: Vec2<T>,
}

/// Vertices `A, B, C, D` plus the scale `w`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Parallelogram<T> {
    pub vertices: [Vec2<T>; 4],
    pub w: T,
}

impl<T: Real> Parallelogram<T> {
    pub fn zero() -> Self {
        Self {
            vertices: [Vec2::zero(); 4],
            w: T::zero(),
        }
    }

    /// The unique element with the given `x_A`, `x_B` and scale.
    ///
    /// `x_C` comes from requiring D on its line, and `x_D = x_A + x_C − x_B`
    /// makes the diagonals share a midpoint.
    pub fn from_params(cfg: &CanonicalConfig<T>, x_a: T, x_b: T, w: T) -> Result<Self> {
        use Label::*;
        let m_dc = cfg.dm(D, C);
        if m_dc == T::zero() {
            return Err(Error::InvalidConfig);
        }
        let x_c = (cfg.dm(A, D) * x_a + cfg.dm(D, B) * x_b + (cfg.b_a - T::one()) * w) / m_dc;
        let x_d = x_a + x_c - x_b;
        let xs = [x_a, x_b, x_c, x_d];
        let vertices = [A, B, C, D].map(|l| {
            let x = xs[l as usize];
            Vec2::new(x, cfg.y_on(l, x, w))
        });
        Ok(Self { vertices, w })
    }

    /// Builds from explicit vertices, checking the on-line and shared-midpoint
    /// invariants to `tol` relative to the vertex magnitudes.
    pub fn new(cfg: &CanonicalConfig<T>, vertices: [Vec2<T>; 4], w: T, tol: T) -> Result<Self> {
        let p = Self { vertices, w };
        let scale = T::one() + vertices.iter().fold(w.abs(), |m, v| m.max(v.norm()));
        if p.line_residual(cfg) > tol * scale {
            return Err(Error::NotInImage("vertex off its line".into()));
        }
        let mid = (vertices[0] + vertices[2]) - (vertices[1] + vertices[3]);
        if mid.norm() > tol * scale {
            return Err(Error::NotInImage("diagonals do not bisect".into()));
        }
        Ok(p)
    }

    pub fn vertex(&self, l: Label) -> Vec2<T> {
        self.vertices[l as usize]
    }

    /// `(x_A, x_B, w)`.
    pub fn params(&self) -> Vec3<T> {
        Vec3::new(self.vertices[0].x, self.vertices[1].x, self.w)
    }

    /// Largest vertical distance of a vertex from its line `L(w)`.
    pub fn line_residual(&self, cfg: &CanonicalConfig<T>) -> T {
        Label::ALL.iter().fold(T::zero(), |m, &l| {
            let v = self.vertex(l);
            m.max((v.y - cfg.y_on(l, v.x, self.w)).abs())
        })
    }

    /// Common midpoint of the diagonals.
    pub fn center(&self) -> Vec2<T> {
        (self.vertices[0] + self.vertices[2]) * T::half()
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            vertices: self.vertices.map(|v| v * s),
            w: self.w * s,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = *self;
        for (v, u) in out.vertices.iter_mut().zip(o.vertices.iter()) {
            *v = *v + *u;
        }
        out.w = out.w + o.w;
        out
    }

    pub fn diagonals(&self) -> DiagonalPair<T> {
        let [a, b, c, d] = self.vertices;
        DiagonalPair { ac: a - c, bd: b - d }
    }

    pub fn sides(&self) -> SidePair<T> {
        let [a, b, c, _] = self.vertices;
        SidePair { ab: a - b, bc: b - c }
    }

    pub fn norm(&self) -> T {
        inner(self, self).max(T::zero()).sqrt()
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        self.vertices
            .iter()
            .zip(o.vertices.iter())
            .fold((self.w - o.w).abs(), |m, (p, q)| {
                m.max((p.x - q.x).abs()).max((p.y - q.y).abs())
            })
    }
}

/// Vertex-wise linear combination; scales combine the same way.
pub fn linear_combine<T: Real>(terms: &[(T, Parallelogram<T>)]) -> Parallelogram<T> {
    terms
        .iter()
        .fold(Parallelogram::zero(), |acc, (c, p)| acc.add(&p.scaled(*c)))
}

pub fn inner<T: Real>(p: &Parallelogram<T>, q: &Parallelogram<T>) -> T {
    let (dp, dq) = (p.diagonals(), q.diagonals());
    dp.ac.dot(dq.ac) + dp.bd.dot(dq.bd)
}

/// The same inner product computed from side vectors:
/// `2·P_AB·Q_AB + 2·P_BC·Q_BC`.
pub fn inner_from_sides<T: Real>(p: &Parallelogram<T>, q: &Parallelogram<T>) -> T {
    let (sp, sq) = (p.sides(), q.sides());
    T::two() * (sp.ab.dot(sq.ab) + sp.bc.dot(sq.bc))
}

pub fn norm<T: Real>(p: &Parallelogram<T>) -> T {
    p.norm()
}

pub fn extract_vectors<T: Real>(p: &Parallelogram<T>) -> (DiagonalPair<T>, SidePair<T>) {
    (p.diagonals(), p.sides())
}

/// Linear map `(x_A, x_B, w) ↦ (P_AC, P_BD)` as a 4×3 matrix.
pub fn diagonal_map<T: Real>(cfg: &CanonicalConfig<T>) -> Result<[[T; 3]; 4]> {
    let mut m = [[T::zero(); 3]; 4];
    for j in 0..3 {
        let mut e = [T::zero(); 3];
        e[j] = T::one();
        let d = Parallelogram::from_params(cfg, e[0], e[1], e[2])?.diagonals();
        for (i, v) in [d.ac.x, d.ac.y, d.bd.x, d.bd.y].into_iter().enumerate() {
            m[i][j] = v;
        }
    }
    Ok(m)
}

/// Gram matrix of the inner product in `(x_A, x_B, w)` coordinates.
pub fn parameter_gram<T: Real>(cfg: &CanonicalConfig<T>) -> Result<Mat3<T>> {
    let m = diagonal_map(cfg)?;
    let mut g = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            g.0[i][j] = (0..4).fold(T::zero(), |s, r| s + m[r][i] * m[r][j]);
        }
    }
    Ok(g)
}

fn stack<T: Real>(d: &DiagonalPair<T>) -> [T; 4] {
    [d.ac.x, d.ac.y, d.bd.x, d.bd.y]
}

/// Recovers the parallelogram with the given diagonal vectors.
///
/// The stacked diagonals of `U, V, T` are orthonormal columns of a 4×3
/// matrix, so the least-squares coordinates are plain projections; the
/// residual decides whether `d` lies in the image.
pub fn from_diagonals<T: Real>(frame: &Frame<T>, d: &DiagonalPair<T>, tol: T) -> Result<Parallelogram<T>> {
    let target = stack(d);
    let cols = [&frame.u, &frame.v, &frame.t].map(|p| stack(&p.diagonals()));
    let dot = |a: &[T; 4], b: &[T; 4]| (0..4).fold(T::zero(), |s, i| s + a[i] * b[i]);
    let c = cols.map(|col| dot(&col, &target));
    let mut resid = target;
    for (k, col) in cols.iter().enumerate() {
        for i in 0..4 {
            resid[i] = resid[i] - c[k] * col[i];
        }
    }
    let r = dot(&resid, &resid).sqrt();
    let scale = T::one() + dot(&target, &target).sqrt();
    if r > tol * scale {
        return Err(Error::NotInImage(format!("diagonal residual {}", r)));
    }
    Ok(frame.from_uvt(Uvt::new(c[0], c[1], c[2])).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::build_frame;

    fn fixture_s() -> CanonicalConfig<f64> {
        CanonicalConfig::new(0.0, -1.0, 0.0, 1.0, -1.0).unwrap()
    }

    fn v(x: f64, y: f64) -> Vec2<f64> {
        Vec2::new(x, y)
    }

    #[test]
    fn degenerate_u_preimage() {
        let p = Parallelogram::from_params(&fixture_s(), -1.0, -5.0, 1.0).unwrap();
        assert_eq!(p.vertices, [v(-1.0, -1.0), v(-5.0, 1.0), v(-1.0, -1.0), v(3.0, -3.0)]);
        let (d, s) = extract_vectors(&p);
        assert_eq!(d.ac, v(0.0, 0.0));
        assert_eq!(d.bd, v(-8.0, 4.0));
        assert_eq!(s.ab + s.bc, d.ac);
        assert_eq!(inner(&p, &p), 80.0);
    }

    #[test]
    fn inscribed_rectangle() {
        let p = Parallelogram::from_params(&fixture_s(), 2.0, 2.0, 1.0).unwrap();
        assert_eq!(p.vertices, [v(2.0, -1.0), v(2.0, 1.0), v(1.0, 1.0), v(1.0, -1.0)]);
        let (d, s) = extract_vectors(&p);
        assert_eq!(d.ac, v(1.0, -2.0));
        assert_eq!(d.bd, v(1.0, 2.0));
        assert_eq!(s.ab.dot(s.bc), 0.0);
        assert_eq!(d.bd, s.bc - s.ab);
    }

    #[test]
    fn zero_parallelogram() {
        let z = Parallelogram::from_params(&fixture_s(), 0.0, 0.0, 0.0).unwrap();
        assert_eq!(z, Parallelogram::zero());
        let p = Parallelogram::from_params(&fixture_s(), 2.0, 2.0, 1.0).unwrap();
        assert_eq!(inner(&p, &z), 0.0);
        let (d, s) = extract_vectors(&z);
        assert_eq!(d, DiagonalPair::default());
        assert_eq!(s, SidePair::default());
    }

    #[test]
    fn combination_matches_parameters() {
        let cfg = fixture_s();
        let p = Parallelogram::from_params(&cfg, -1.0, -5.0, 1.0).unwrap();
        let q = Parallelogram::from_params(&cfg, -5.0, -1.0, 1.0).unwrap();
        let sum = linear_combine(&[(1.0, p), (1.0, q)]);
        assert_eq!(sum, Parallelogram::from_params(&cfg, -6.0, -6.0, 2.0).unwrap());
        assert_eq!(linear_combine(&[(1.0, p), (0.0, q)]), p);
        assert_eq!(linear_combine(&[(3.0, p)]).w, 3.0);
        assert_eq!(inner(&p, &q), 0.0);
        assert_eq!(inner(&p, &q), inner_from_sides(&p, &q));
    }

    #[test]
    fn from_diagonals_round_trip_and_rejection() {
        let cfg = fixture_s();
        let frame = build_frame(&cfg, 1e-9).unwrap();
        let rect = Parallelogram::from_params(&cfg, 2.0, 2.0, 1.0).unwrap();
        let back = from_diagonals(&frame, &rect.diagonals(), 1e-9).unwrap();
        assert!(back.max_abs_diff(&rect) < 1e-12);
        let u = from_diagonals(&frame, &frame.u.diagonals(), 1e-9).unwrap();
        assert!(u.max_abs_diff(&frame.u) < 1e-12);
        let bad = DiagonalPair {
            ac: v(1.0, 0.0),
            bd: v(0.0, 0.0),
        };
        assert!(matches!(from_diagonals(&frame, &bad, 1e-9), Err(Error::NotInImage(_))));
    }

    #[test]
    fn explicit_vertices_checked() {
        let cfg = fixture_s();
        let good = [v(2.0, -1.0), v(2.0, 1.0), v(1.0, 1.0), v(1.0, -1.0)];
        assert!(Parallelogram::new(&cfg, good, 1.0, 1e-9).is_ok());
        let mut off = good;
        off[0].y = -0.5;
        assert!(Parallelogram::new(&cfg, off, 1.0, 1e-9).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let cfg = CanonicalConfig::<f32>::new(0.0, -1.0, 0.0, 1.0, -1.0).unwrap();
        let p = Parallelogram::from_params(&cfg, 2.0, 2.0, 1.0).unwrap();
        assert_eq!(p.norm(), 10.0f32.sqrt());
    }
}
