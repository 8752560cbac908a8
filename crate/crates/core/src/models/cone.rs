use crate::config::{CanonicalConfig, Pair};
use crate::error::{Error, Result};
use crate::linalg::{Mat2x3, Vec3};
use crate::scalar::Real;

use super::cylinder::{midpoint_matrix, Factor, Quadric, Space};

/// Ratio between the swapped cylinder height and the cone height: a cylinder
/// chord has squared length 1/2, a cone chord at height `z` has length `2|z|`.
pub const CONE_Z_SCALE: f64 = 2.0 * std::f64::consts::SQRT_2;

/// Points `(x, y, z)` where `(x, y)` is the midpoint of a chord between the
/// two lines of `pair` at scale 1 and `2|z|` is its length.
pub fn cone_surface<T: Real>(cfg: &CanonicalConfig<T>, pair: Pair) -> Result<Quadric<T>> {
    let mm = midpoint_matrix(cfg, pair)?;
    let f = Mat2x3(mm.m.0.map(|r| r.map(|e| e * T::half())));
    let factor = Factor {
        m: f,
        xy_det: mm.xy_det * T::lit(0.25),
    };
    Ok(Quadric {
        q: f.gram(),
        rhs: T::one(),
        space: Space::Xyz,
        factor: Some(factor),
    })
}

/// Symmetric 4×4 form on homogeneous points `[x : y : a : b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

impl<T: Real> Mat4<T> {
    pub fn zero() -> Self {
        Mat4([[T::zero(); 4]; 4])
    }

    pub fn quad(&self, p: [T; 4]) -> T {
        let mut s = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                s = s + p[i] * self.0[i][j] * p[j];
            }
        }
        s
    }

    pub fn scaled(&self, k: T) -> Self {
        Mat4(self.0.map(|r| r.map(|e| e * k)))
    }

    /// `Dᵀ·self·D` for `D = diag(d)`.
    pub fn congruent_diag(&self, d: [T; 4]) -> Self {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = d[i] * self.0[i][j] * d[j];
            }
        }
        out
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        let mut m = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.0[i][j] - o.0[i][j]).abs());
            }
        }
        m
    }
}

impl<T: Real> Quadric<T> {
    /// Homogeneous form on `[x : y : w : 1]` for the cylinder model and on
    /// `[x : y : z : 1]` for the cone model.
    pub fn homogeneous_form(&self) -> Mat4<T> {
        let mut h = Mat4::zero();
        let (idx, free) = match self.space {
            Space::Xyw => ([0, 1, 2], 3),
            Space::Xyz => ([0, 1, 3], 2),
        };
        for i in 0..3 {
            for j in 0..3 {
                h.0[idx[i]][idx[j]] = self.q.0[i][j];
            }
        }
        h.0[free][free] = -self.rhs;
        h
    }
}

/// `[x : y : a : b] ↦ [x : y : b : a]`.
pub fn projective_swap<T: Real>(p: [T; 4]) -> Result<[T; 4]> {
    if p.iter().all(|c| *c == T::zero()) {
        return Err(Error::ZeroVector);
    }
    Ok([p[0], p[1], p[3], p[2]])
}

/// The form `H'` with `H'(swap p) = H(p)`.
pub fn swap_form<T: Real>(h: &Mat4<T>) -> Mat4<T> {
    let perm = [0, 1, 3, 2];
    let mut out = Mat4::zero();
    for i in 0..4 {
        for j in 0..4 {
            out.0[i][j] = h.0[perm[i]][perm[j]];
        }
    }
    out
}

/// Sends a cylinder point `(x, y, w)` to the cone point with the same chord
/// direction: `(x/w, y/w, 1/(2√2·w))`. `None` at `w = 0`.
pub fn cylinder_point_to_cone<T: Real>(p: Vec3<T>) -> Option<Vec3<T>> {
    let s = projective_swap([p[0], p[1], p[2], T::one()]).ok()?;
    if s[3] == T::zero() {
        return None;
    }
    let k = T::lit(CONE_Z_SCALE);
    Some(Vec3::new(s[0] / s[3], s[1] / s[3], s[2] / (s[3] * k)))
}

/// Inverse of [`cylinder_point_to_cone`]. `None` at the apex level `z = 0`.
pub fn cone_point_to_cylinder<T: Real>(p: Vec3<T>) -> Option<Vec3<T>> {
    let k = T::lit(CONE_Z_SCALE);
    let s = projective_swap([p[0], p[1], p[2] * k, T::one()]).ok()?;
    if s[3] == T::zero() {
        return None;
    }
    Some(Vec3::new(s[0] / s[3], s[1] / s[3], s[2] / s[3]))
}
