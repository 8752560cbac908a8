//! Small fixed-size vectors and matrices.
//!
//! Everything here is 2- or 3-dimensional, so the routines are written out
//! directly instead of going through a general dense-matrix library.

#![allow(clippy::needless_range_loop)]

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn rotate(self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<T>(pub [T; 3]);

impl<T: Real> Vec3<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Self([a, b, c])
    }

    pub fn zero() -> Self {
        Self([T::zero(); 3])
    }

    pub fn dot(self, o: Self) -> T {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    pub fn cross(self, o: Self) -> Self {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = o.0;
        Self([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    pub fn max_abs(self) -> T {
        self.0.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        self * n.recip()
    }

    /// Angle between two nonzero vectors, ignoring orientation.
    pub fn line_angle(self, o: Self) -> T {
        let c = self.cross(o).norm();
        let d = self.dot(o).abs();
        c.atan2(d)
    }
}

impl<T: Real> Index<usize> for Vec3<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Real> IndexMut<usize> for Vec3<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.0[i]
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl<T: Real> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl<T: Real> Mul<T> for Vec3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

/// Row-major 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3<T>(pub [[T; 3]; 3]);

impl<T: Real> Mat3<T> {
    pub fn zero() -> Self {
        Self([[T::zero(); 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][i] = T::one();
        }
        m
    }

    pub fn from_cols(c0: Vec3<T>, c1: Vec3<T>, c2: Vec3<T>) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][0] = c0[i];
            m.0[i][1] = c1[i];
            m.0[i][2] = c2[i];
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec3<T> {
        Vec3(self.0[i])
    }

    pub fn col(&self, j: usize) -> Vec3<T> {
        Vec3([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[j][i] = self.0[i][j];
            }
        }
        m
    }

    pub fn mul_vec(&self, v: Vec3<T>) -> Vec3<T> {
        Vec3([self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v)])
    }

    pub fn mul_mat(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.row(i).dot(o.col(j));
            }
        }
        m
    }

    pub fn sub_mat(&self, o: &Self) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = m.0[i][j] - o.0[i][j];
            }
        }
        m
    }

    pub fn det(&self) -> T {
        self.row(0).dot(self.row(1).cross(self.row(2)))
    }

    pub fn max_abs(&self) -> T {
        (0..3).fold(T::zero(), |m, i| m.max(self.row(i).max_abs()))
    }

    /// Quadratic form `vᵀ M v`.
    pub fn quad(&self, v: Vec3<T>) -> T {
        v.dot(self.mul_vec(v))
    }

    /// Solves `M x = b` by Gaussian elimination with partial pivoting.
    /// Returns `None` if a pivot vanishes exactly.
    pub fn solve(&self, b: Vec3<T>) -> Option<Vec3<T>> {
        let mut a = self.0;
        let mut rhs = b.0;
        for k in 0..3 {
            let p = (k..3)
                .max_by(|&i, &j| a[i][k].abs().partial_cmp(&a[j][k].abs()).unwrap())
                .unwrap();
            if a[p][k] == T::zero() {
                return None;
            }
            a.swap(k, p);
            rhs.swap(k, p);
            for i in (k + 1)..3 {
                let f = a[i][k] / a[k][k];
                for j in k..3 {
                    a[i][j] = a[i][j] - f * a[k][j];
                }
                rhs[i] = rhs[i] - f * rhs[k];
            }
        }
        let mut x = [T::zero(); 3];
        for i in (0..3).rev() {
            let mut s = rhs[i];
            for j in (i + 1)..3 {
                s = s - a[i][j] * x[j];
            }
            x[i] = s / a[i][i];
        }
        Some(Vec3(x))
    }

    /// Largest-magnitude cross product among pairs of rows; spans the
    /// kernel of a rank-2 matrix.
    pub fn kernel_from_rows(&self) -> Vec3<T> {
        let cands = [
            self.row(0).cross(self.row(1)),
            self.row(0).cross(self.row(2)),
            self.row(1).cross(self.row(2)),
        ];
        cands
            .into_iter()
            .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
            .unwrap()
    }
}

/// Row-major 2×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2x3<T>(pub [[T; 3]; 2]);

impl<T: Real> Mat2x3<T> {
    pub fn row(&self, i: usize) -> Vec3<T> {
        Vec3(self.0[i])
    }

    pub fn mul_vec(&self, v: Vec3<T>) -> Vec2<T> {
        Vec2::new(self.row(0).dot(v), self.row(1).dot(v))
    }

    /// `MᵀM`, a symmetric 3×3 matrix.
    pub fn gram(&self) -> Mat3<T> {
        let mut g = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                g.0[i][j] = self.0[0][i] * self.0[0][j] + self.0[1][i] * self.0[1][j];
            }
        }
        g
    }

    /// Determinant of the leading 2×2 block.
    pub fn leading_det(&self) -> T {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }
}

/// Eigen-decomposition of a symmetric 3×3 matrix.
#[derive(Debug, Clone, Copy)]
pub struct SymEigen3<T> {
    /// Eigenvalues in descending order.
    pub values: [T; 3],
    /// Row `i` is the unit eigenvector of `values[i]`.
    pub vectors: Mat3<T>,
}

impl<T: Real> SymEigen3<T> {
    /// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
    pub fn new(m: &Mat3<T>) -> Self {
        let mut a = m.0;
        let mut v = Mat3::<T>::identity().0;
        let scale = m.max_abs();
        for _sweep in 0..64 {
            let off = (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]).sqrt();
            if off <= T::epsilon() * T::epsilon() * scale || off == T::zero() {
                break;
            }
            for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
                if a[p][q] == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (T::two() * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                for k in 0..3 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..3 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        // columns of v are eigenvectors; sort descending
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
        let mut values = [T::zero(); 3];
        let mut vectors = Mat3::zero();
        for (r, &i) in idx.iter().enumerate() {
            values[r] = a[i][i];
            for k in 0..3 {
                vectors.0[r][k] = v[k][i];
            }
        }
        Self { values, vectors }
    }

    /// Rebuilds `Qᵀ Λ Q`.
    pub fn reconstruct(&self) -> Mat3<T> {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = T::zero();
                for r in 0..3 {
                    s = s + self.vectors.0[r][i] * self.values[r] * self.vectors.0[r][j];
                }
                m.0[i][j] = s;
            }
        }
        m
    }
}
