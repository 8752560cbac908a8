use crate::basis::{Frame, Uvt};
use crate::error::{Error, Result};
use crate::linalg::{Mat3, Vec3};
use crate::parallelogram::Parallelogram;
use crate::scalar::Real;
use crate::solutions::{residuals, samples_at_scales};

/// Center and scale of a parallelogram.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CenterPoint<T> {
    pub x: T,
    pub y: T,
    pub w: T,
}

impl<T: Real> CenterPoint<T> {
    pub fn new(x: T, y: T, w: T) -> Self {
        Self { x, y, w }
    }

    pub fn as_vec(&self) -> Vec3<T> {
        Vec3::new(self.x, self.y, self.w)
    }

    pub fn from_vec(v: Vec3<T>) -> Self {
        Self::new(v[0], v[1], v[2])
    }
}

/// The linear map Ψ: parallelogram ↦ (center, scale).
pub fn center_map<T: Real>(p: &Parallelogram<T>) -> CenterPoint<T> {
    let c = p.center();
    CenterPoint::new(c.x, c.y, p.w)
}

/// Ψ in `(u, v, t)` coordinates: columns are Ψ(U), Ψ(V), Ψ(T).
pub fn center_map_matrix<T: Real>(frame: &Frame<T>) -> Mat3<T> {
    let [u, v, t] = frame.basis().map(|p| center_map(&p).as_vec());
    Mat3::from_cols(u, v, t)
}

/// Image of a singular center map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ImageDescription<T> {
    /// Plane through the origin with the given unit normal.
    Plane { normal: Vec3<T> },
    /// Line through the origin with the given unit direction.
    Line { direction: Vec3<T> },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CenterPreimage<T> {
    Unique(Parallelogram<T>),
    Image(ImageDescription<T>),
}

fn rank_and_image<T: Real>(m: &Mat3<T>, tol: T) -> (usize, Option<ImageDescription<T>>) {
    let cols = [m.col(0), m.col(1), m.col(2)];
    let norms = cols.map(|c| c.norm());
    let s = norms[0].max(norms[1]).max(norms[2]);
    if s == T::zero() {
        return (0, None);
    }
    if m.det().abs() > tol * s * s * s {
        return (3, None);
    }
    let (best, ratio) = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| {
            let c = cols[i].cross(cols[j]);
            (c, c.norm() / (s * s))
        })
        .fold((Vec3::zero(), -T::one()), |a, b| if b.1 > a.1 { b } else { a });
    if ratio > tol {
        let mut n = best.normalized();
        if n[2] < T::zero() || (n[2] == T::zero() && n[1] < T::zero()) {
            n = -n;
        }
        return (2, Some(ImageDescription::Plane { normal: n }));
    }
    let k = (0..3)
        .max_by(|&i, &j| norms[i].partial_cmp(&norms[j]).unwrap())
        .unwrap();
    let mut d = cols[k].normalized();
    if d[2] < T::zero() {
        d = -d;
    }
    (1, Some(ImageDescription::Line { direction: d }))
}

/// Recovers the parallelogram with a given center and scale.
///
/// The map is treated as singular when its determinant is at most `tol`
/// relative to the cube of its largest column; the image is then described instead, and
/// points off it are rejected.
pub fn invert_center_map<T: Real>(frame: &Frame<T>, p: CenterPoint<T>, tol: T) -> Result<CenterPreimage<T>> {
    let m = center_map_matrix(frame);
    let pv = p.as_vec();
    match rank_and_image(&m, tol) {
        (3, _) => {
            let c = m.solve(pv).ok_or_else(|| Error::RankError("center map".into()))?;
            Ok(CenterPreimage::Unique(frame.from_uvt(Uvt::new(c[0], c[1], c[2])).0))
        }
        (_, Some(img)) => {
            let off = match img {
                ImageDescription::Plane { normal } => normal.dot(pv).abs(),
                ImageDescription::Line { direction } => direction.cross(pv).norm(),
            };
            if off > tol * (T::one() + pv.norm()) {
                Err(Error::NotInImage(format!("center point is {} from the image", off)))
            } else {
                Ok(CenterPreimage::Image(img))
            }
        }
        _ => Err(Error::RankError("center map vanishes".into())),
    }
}

/// Number of distinct unit rectangles sharing the center point of the unit
/// rectangle `p`.
///
/// With a rank-2 center map the rectangles with the same center lie on the
/// kernel line through `p`, which meets the unit sphere again only at the
/// reflection of `p`. With rank 1 the center is fixed by the scale alone, so
/// all unit rectangles at that scale share it.
pub fn shared_center_count<T: Real>(frame: &Frame<T>, p: Uvt<T>, tol: T) -> usize {
    let m = center_map_matrix(frame);
    match rank_and_image(&m, tol) {
        (3, _) => 1,
        (2, _) => {
            let k = m.kernel_from_rows().normalized();
            let pv = p.as_vec();
            let q = pv - k * (T::two() * pv.dot(k));
            let q = Uvt::new(q[0], q[1], q[2]);
            let on_curve = residuals(frame, q).max_abs() <= tol.sqrt();
            if on_curve && q.dist(&p) > tol.sqrt() {
                2
            } else {
                1
            }
        }
        (0, _) => 0,
        _ => {
            let hits = samples_at_scales(frame, 4096, &[frame.scale_of(p)]);
            let mut distinct: Vec<Uvt<T>> = Vec::new();
            for h in hits {
                if distinct.iter().all(|d| d.dist(&h.coords) > tol.sqrt()) {
                    distinct.push(h.coords);
                }
            }
            if distinct.iter().all(|d| d.dist(&p) > tol.sqrt()) {
                distinct.push(p);
            }
            distinct.len()
        }
    }
}
