//! JSON documents written by `analyze` and `locus`.

use rectflow::{Frame64, LocusReport, NormalizationRecord, Parallelogram64};
use serde::{Deserialize, Serialize};

use crate::config_file::CanonicalSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NormalizationJson {
    pub label_shift: usize,
    pub orientation_reversed: bool,
    pub rotation_angle: f64,
    pub translation: [f64; 2],
    pub scale_factor: f64,
}

impl From<&NormalizationRecord<f64>> for NormalizationJson {
    fn from(r: &NormalizationRecord<f64>) -> Self {
        Self {
            label_shift: r.label_shift,
            orientation_reversed: r.orientation_reversed,
            rotation_angle: r.rotation_angle,
            translation: [r.translation.x, r.translation.y],
            scale_factor: r.scale_factor,
        }
    }
}

/// Vertices `A, B, C, D` and the scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub vertices: [[f64; 2]; 4],
    pub w: f64,
}

impl From<&Parallelogram64> for ElementJson {
    fn from(p: &Parallelogram64) -> Self {
        Self {
            vertices: p.vertices.map(|v| [v.x, v.y]),
            w: p.w,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FrameJson {
    pub lambda: f64,
    pub mu: f64,
    pub w_u: f64,
    pub w_v: f64,
    pub w_t: f64,
    pub degenerate: bool,
    pub u: ElementJson,
    pub v: ElementJson,
    pub t: ElementJson,
}

impl From<&Frame64> for FrameJson {
    fn from(f: &Frame64) -> Self {
        Self {
            lambda: f.lambda,
            mu: f.mu,
            w_u: f.w_u,
            w_v: f.w_v,
            w_t: f.w_t,
            degenerate: f.degenerate,
            u: (&f.u).into(),
            v: (&f.v).into(),
            t: (&f.t).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub canonical: CanonicalSpec,
    pub normalization: NormalizationJson,
    pub frame: FrameJson,
    pub locus: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterJson {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocusJson {
    pub kind: String,
    pub conic: Option<[[f64; 3]; 3]>,
    pub samples: Vec<CenterJson>,
    pub degenerate: bool,
}

impl From<&LocusReport<f64>> for LocusJson {
    fn from(r: &LocusReport<f64>) -> Self {
        Self {
            kind: r.kind.name().to_string(),
            conic: r.conic.map(|c| c.c.0),
            samples: r
                .samples
                .iter()
                .map(|p| CenterJson { x: p.x, y: p.y, w: p.w })
                .collect(),
            degenerate: r.degenerate,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
