//! Orthonormal basis `U, V, T` of Π and the coordinates `(u, v, t)`.
//!
//! `U` has a zero AC diagonal, `V` a zero BD diagonal, and `T` spans the
//! orthogonal complement of the two. `λ` and `μ` are the squared AC and BD
//! diagonal lengths of `T`.

use crate::config::{CanonicalConfig, Label, Pair};
use crate::error::{Error, Result};
use crate::linalg::{Vec2, Vec3};
use crate::models::midpoint_matrix;
use crate::parallelogram::{inner, linear_combine, parameter_gram, Parallelogram};
use crate::scalar::Real;

/// Coordinates of `u·U + v·V + t·T`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Uvt<T> {
    pub u: T,
    pub v: T,
    pub t: T,
}

impl<T: Real> Uvt<T> {
    pub fn new(u: T, v: T, t: T) -> Self {
        Self { u, v, t }
    }

    pub fn as_vec(&self) -> Vec3<T> {
        Vec3::new(self.u, self.v, self.t)
    }

    pub fn norm(&self) -> T {
        self.as_vec().norm()
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.u, -self.v, -self.t)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.u + o.u, self.v + o.v, self.t + o.t)
    }

    pub fn dist(&self, o: &Self) -> T {
        (self.as_vec() - o.as_vec()).norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame<T> {
    pub cfg: CanonicalConfig<T>,
    pub u: Parallelogram<T>,
    pub v: Parallelogram<T>,
    pub t: Parallelogram<T>,
    pub lambda: T,
    pub mu: T,
    pub w_u: T,
    pub w_v: T,
    pub w_t: T,
    pub degenerate: bool,
}

fn unit<T: Real>(p: Parallelogram<T>) -> Parallelogram<T> {
    p.scaled(p.norm().recip())
}

/// Builds the basis. Pairs whose slopes differ by at most `tol` count as
/// parallel, and `|λ − μ| ≤ tol` marks the configuration degenerate.
///
/// `T` is fixed up to sign by orthogonality; the sign is chosen so that
/// `w_T > 0`, or when `T` is at infinity so that the first nonzero
/// component of `(T_AC, T_BD)` is positive.
pub fn build_frame<T: Real>(cfg: &CanonicalConfig<T>, tol: T) -> Result<Frame<T>> {
    use Label::*;
    cfg.validate()?;
    let (m_ac, m_bd, m_cd) = (cfg.dm(A, C), cfg.dm(B, D), cfg.dm(C, D));
    let ac_par = cfg.is_parallel(Pair::AC, tol);
    let bd_par = cfg.is_parallel(Pair::BD, tol);
    let b_a = cfg.b_a;
    let two = T::two();

    let u_params = if ac_par || bd_par {
        (m_bd / (two * m_cd), T::one(), T::zero())
    } else {
        (-b_a / m_ac, -(two * b_a * m_cd + m_ac) / (m_ac * m_bd), T::one())
    };
    let v_params = if !(ac_par || bd_par) {
        (-(b_a * m_bd - two * m_cd) / (m_bd * m_ac), -m_bd.recip(), T::one())
    } else if ac_par {
        (T::one(), T::zero(), T::zero())
    } else {
        (-two * m_cd / m_ac, T::one(), T::zero())
    };
    let from = |(a, b, w): (T, T, T)| Parallelogram::from_params(cfg, a, b, w);
    let u = unit(from(u_params)?);
    let v = unit(from(v_params)?);

    // T ∝ (G·p_U) × (G·p_V) in parameter coordinates, then one
    // Gram-Schmidt pass against U and V.
    let g = parameter_gram(cfg)?;
    let n = g.mul_vec(u.params()).cross(g.mul_vec(v.params()));
    let raw = from((n[0], n[1], n[2]))?;
    let raw = linear_combine(&[(T::one(), raw), (-inner(&raw, &u), u), (-inner(&raw, &v), v)]);
    let mut t = unit(raw);

    let thresh = T::epsilon() * T::lit(64.0) * t.params().norm();
    let flip = if t.w.abs() > thresh {
        t.w < T::zero()
    } else {
        let d = t.diagonals();
        [d.ac.x, d.ac.y, d.bd.x, d.bd.y]
            .into_iter()
            .find(|c| c.abs() > T::epsilon() * T::lit(64.0))
            .is_some_and(|c| c < T::zero())
    };
    if flip {
        t = t.scaled(-T::one());
    }

    let d = t.diagonals();
    let lambda = d.ac.norm_sq();
    let mu = d.bd.norm_sq();
    Ok(Frame {
        cfg: *cfg,
        u,
        v,
        t,
        lambda,
        mu,
        w_u: u.w,
        w_v: v.w,
        w_t: t.w,
        degenerate: (lambda - mu).abs() <= tol,
    })
}

impl<T: Real> Frame<T> {
    pub fn basis(&self) -> [Parallelogram<T>; 3] {
        [self.u, self.v, self.t]
    }

    /// Orthonormal expansion of `p`.
    pub fn uvt_of(&self, p: &Parallelogram<T>) -> Uvt<T> {
        Uvt::new(inner(p, &self.u), inner(p, &self.v), inner(p, &self.t))
    }

    /// The parallelogram `u·U + v·V + t·T` and its scale.
    pub fn from_uvt(&self, c: Uvt<T>) -> (Parallelogram<T>, T) {
        let p = linear_combine(&[(c.u, self.u), (c.v, self.v), (c.t, self.t)]);
        (p, self.scale_of(c))
    }

    /// `u·w_U + v·w_V + t·w_T`.
    pub fn scale_of(&self, c: Uvt<T>) -> T {
        c.u * self.w_u + c.v * self.w_v + c.t * self.w_t
    }

    /// Gram matrix of `U, V, T`.
    pub fn gram(&self) -> [[T; 3]; 3] {
        let b = self.basis();
        let mut g = [[T::zero(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                g[i][j] = inner(&b[i], &b[j]);
            }
        }
        g
    }
}

pub fn uvt_of<T: Real>(frame: &Frame<T>, p: &Parallelogram<T>) -> Uvt<T> {
    frame.uvt_of(p)
}

pub fn from_uvt<T: Real>(frame: &Frame<T>, c: Uvt<T>) -> (Parallelogram<T>, T) {
    frame.from_uvt(c)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MedianCenter<T> {
    Point(Vec2<T>),
    AtInfinity,
}

/// Median lines of the two pairs, in homogeneous form.
///
/// The first is the line of midpoints of chords between A and C that are
/// perpendicular to the degenerate parallelogram `V`; the second uses chords
/// between B and D perpendicular to `U`. `T`'s AC diagonal is orthogonal to
/// `V_AC` and its BD diagonal to `U_BD`, so both lines pass through the
/// center of `T` scaled into `C`.
pub fn median_lines<T: Real>(cfg: &CanonicalConfig<T>, frame: &Frame<T>) -> Result<(Vec3<T>, Vec3<T>)> {
    let line = |pair: Pair, dir: Vec2<T>| -> Result<Vec3<T>> {
        let m = midpoint_matrix(cfg, pair)?.m;
        Ok(m.row(1) * dir.x - m.row(0) * dir.y)
    };
    let ac = line(Pair::AC, frame.v.diagonals().ac.perp())?;
    let bd = line(Pair::BD, frame.u.diagonals().bd.perp())?;
    Ok((ac, bd))
}

/// Intersects the median lines and compares with the center of `T` scaled
/// to scale 1. Parallel median lines mean `T` is at infinity.
pub fn median_center_check<T: Real>(
    cfg: &CanonicalConfig<T>,
    frame: &Frame<T>,
    tol: T,
) -> Result<(MedianCenter<T>, bool)> {
    if cfg.any_parallel(tol) {
        return Err(Error::NotApplicable("a pair of opposite lines is parallel"));
    }
    let (l1, l2) = median_lines(cfg, frame)?;
    let h = l1.cross(l2);
    let planar = Vec2::new(h[0], h[1]).norm();
    if h[2].abs() <= tol * planar {
        let consistent = frame.w_t.abs() <= tol.sqrt();
        return Ok((MedianCenter::AtInfinity, consistent));
    }
    let p = Vec2::new(h[0] / h[2], h[1] / h[2]);
    let consistent = frame.w_t.abs() > T::epsilon() && {
        let c = frame.t.center() * frame.w_t.recip();
        (c - p).norm() <= tol * (T::one() + p.norm())
    };
    Ok((MedianCenter::Point(p), consistent))
}
