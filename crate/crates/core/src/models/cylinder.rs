use crate::config::{CanonicalConfig, Pair};
use crate::error::{Error, Result};
use crate::linalg::{Mat2x3, Mat3, SymEigen3, Vec3};
use crate::scalar::Real;

/// The 2×3 matrix sending `(x, y, w)` to the chord vector between the two
/// lines of a pair at scale `w` whose midpoint is `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidpointMatrix<T> {
    pub m: Mat2x3<T>,
    /// Determinant of the `(x, y)` block of `m`, taken as the quotient of the
    /// chord and midpoint maps on the endpoint abscissas.
    pub xy_det: T,
}

pub fn midpoint_matrix<T: Real>(cfg: &CanonicalConfig<T>, pair: Pair) -> Result<MidpointMatrix<T>> {
    let (p, q) = CanonicalConfig::<T>::pair_labels(pair);
    let (m1, m2) = (cfg.slope(p), cfg.slope(q));
    let b = cfg.intercept(p);
    if m1 == m2 {
        return Err(Error::ParallelPair(pair.name()));
    }
    let k = (m1 - m2).recip();
    let two = T::two();
    let four = T::lit(4.0);
    let s = m1 + m2;
    // endpoints (a, m1·a + b·w) and (c, m2·c)
    let det2 = |e: [[T; 2]; 2]| e[0][0] * e[1][1] - e[0][1] * e[1][0];
    let chord = det2([[T::one(), -T::one()], [m1, -m2]]);
    let mid = det2([[T::half(), T::half()], [m1 * T::half(), m2 * T::half()]]);
    Ok(MidpointMatrix {
        m: Mat2x3([
            [-two * s * k, four * k, -two * b * k],
            [-four * m1 * m2 * k, two * s * k, -two * b * m2 * k],
        ]),
        xy_det: chord / mid,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    /// Cylinder model `(x, y, w)`: `pᵀqp = rhs`.
    Xyw,
    /// Cone model `(x, y, z)` at scale 1: `(x, y, 1)ᵀ q (x, y, 1) = rhs·z²`.
    Xyz,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadric<T> {
    pub q: Mat3<T>,
    pub rhs: T,
    pub space: Space,
    /// `F` with `q = FᵀF`, kept when the quadric was built from one.
    pub factor: Option<Factor<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor<T> {
    pub m: Mat2x3<T>,
    /// Determinant of the `(x, y)` block of `m`.
    pub xy_det: T,
}

impl<T: Real> Quadric<T> {
    pub fn new(q: Mat3<T>, rhs: T, space: Space) -> Self {
        Self {
            q,
            rhs,
            space,
            factor: None,
        }
    }

    /// Residual of the defining equation at `p`, evaluated through the
    /// factor when there is one.
    pub fn residual(&self, p: Vec3<T>) -> T {
        let (h, z2) = match self.space {
            Space::Xyw => (p, T::one()),
            Space::Xyz => (Vec3::new(p[0], p[1], T::one()), p[2] * p[2]),
        };
        let form = match self.factor {
            Some(f) => f.m.mul_vec(h).norm_sq(),
            None => self.q.quad(h),
        };
        form - self.rhs * z2
    }
}

/// Planar AC or BD cylinder of a parallel pair: the midplane `a·x + b·y + c·w = 0`
/// cut down to `√2·|w|·d ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatCylinder<T> {
    pub plane: Vec3<T>,
    pub d: T,
}

impl<T: Real> FlatCylinder<T> {
    pub fn contains(&self, p: Vec3<T>, tol: T) -> bool {
        let n = self.plane.norm();
        self.plane.dot(p).abs() <= tol * n * (T::one() + p.norm())
            && T::two().sqrt() * p[2].abs() * self.d <= T::one() + tol
    }

    /// Largest `|w|` on the cylinder.
    pub fn max_scale(&self) -> T {
        (T::two().sqrt() * self.d).recip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CylinderSurface<T> {
    Elliptic(Quadric<T>),
    Flat(FlatCylinder<T>),
}

/// Midpoints `(x, y, w)` of chords of squared length 1/2 between the lines
/// of `pair` scaled by `w`.
pub fn cylinder_surface<T: Real>(cfg: &CanonicalConfig<T>, pair: Pair) -> CylinderSurface<T> {
    match midpoint_matrix(cfg, pair) {
        Ok(mm) => CylinderSurface::Elliptic(Quadric {
            q: mm.m.gram(),
            rhs: T::half(),
            space: Space::Xyw,
            factor: Some(Factor {
                m: mm.m,
                xy_det: mm.xy_det,
            }),
        }),
        Err(_) => {
            let (p, q) = CanonicalConfig::<T>::pair_labels(pair);
            let m = cfg.slope(p);
            let (b1, b2) = (cfg.intercept(p), cfg.intercept(q));
            let mid = (b1 + b2) * T::half();
            FlatCylinder {
                plane: Vec3::new(-m, T::one(), -mid),
                d: (b1 - b2).abs() / (T::one() + m * m).sqrt(),
            }
            .into()
        }
    }
}

impl<T> From<FlatCylinder<T>> for CylinderSurface<T> {
    fn from(f: FlatCylinder<T>) -> Self {
        CylinderSurface::Flat(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalAxes<T> {
    /// Nonzero eigenvalues, largest first.
    pub values: [T; 2],
    /// Rows: eigenvectors for `values[0]`, `values[1]`, then the kernel.
    pub axes: Mat3<T>,
    /// Direction of the cylinder's axis (the kernel), scaled to unit length
    /// with nonnegative `w` component.
    pub axis_direction: Vec3<T>,
}

const RANK_TOL: f64 = 1e-9;

/// Checks for exactly one vanishing eigenvalue.
///
/// With a stored factor `M` the test runs on the singular values of `M`
/// (ratio `σ₂/σ₁`), which are far better resolved than the eigenvalues of
/// `MᵀM` for nearly parallel pairs; otherwise on the eigenvalues of `q`.
fn check_rank_two<T: Real>(qd: &Quadric<T>, eig: &SymEigen3<T>) -> Result<()> {
    let tol = T::lit(RANK_TOL);
    let ok = match qd.factor {
        Some(Factor { m, .. }) => {
            let (r0, r1) = (m.row(0), m.row(1));
            let s = r0.dot(r0) + r1.dot(r1);
            let p = r0.cross(r1).dot(r0.cross(r1));
            // σ₁², σ₂² are the roots of x² − s·x + p
            let disc = (s * s - T::lit(4.0) * p).max(T::zero()).sqrt();
            let big = (s + disc) * T::half();
            let small = if big > T::zero() { p / big } else { T::zero() };
            big > T::zero() && (small / big).sqrt() > tol
        }
        None => {
            let [e0, e1, e2] = eig.values;
            e0 > T::zero() && e2.abs() <= tol * e0 && e1 > tol * e0
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::RankError(format!(
            "expected rank 2, eigenvalues {:?}",
            eig.values
        )))
    }
}

pub fn cylinder_principal_axes<T: Real>(qd: &Quadric<T>) -> Result<PrincipalAxes<T>> {
    if qd.space != Space::Xyw {
        return Err(Error::RankError("principal axes need a cylinder-model quadric".into()));
    }
    let eig = SymEigen3::new(&qd.q);
    check_rank_two(qd, &eig)?;
    let kernel = match qd.factor {
        Some(f) => f.m.row(0).cross(f.m.row(1)),
        None => qd.q.kernel_from_rows(),
    };
    let mut k = kernel.normalized();
    if k[2] < T::zero() {
        k = -k;
    }
    let mut axes = eig.vectors;
    axes.0[2] = k.0;
    Ok(PrincipalAxes {
        values: [eig.values[0], eig.values[1]],
        axes,
        axis_direction: k,
    })
}

/// Area of the elliptical cross-section at any fixed `w`: `π·rhs/√det N`,
/// with `N` the `(x, y)` block of `q`.
pub fn cross_section_area<T: Real>(qd: &Quadric<T>) -> Result<T> {
    if qd.space != Space::Xyw {
        return Err(Error::RankError(
            "cross-section area needs a cylinder-model quadric".into(),
        ));
    }
    let eig = SymEigen3::new(&qd.q);
    check_rank_two(qd, &eig)?;
    let det_n = match qd.factor {
        Some(f) => f.xy_det * f.xy_det,
        None => qd.q.0[0][0] * qd.q.0[1][1] - qd.q.0[0][1] * qd.q.0[1][0],
    };
    if det_n <= T::zero() {
        return Err(Error::RankError("cross-section is not an ellipse".into()));
    }
    Ok(T::PI() * qd.rhs / det_n.sqrt())
}
