//! CSV rendering and atomic file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use rectflow::{OracleHit, Sample64};

/// 17 significant digits; `-0` is written as `0`.
pub fn num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub const SAMPLE_HEADER: &str = "theta,branch,u,v,t,w,xA,yA,xB,yB,xC,yC,xD,yD,cx,cy";

pub const ORACLE_HEADER: &str = "w,xA,xB,vAx,vAy,vBx,vBy,vCx,vCy,vDx,vDy,residual";

pub fn samples_csv(samples: &[Sample64]) -> String {
    let mut out = String::from(SAMPLE_HEADER);
    out.push('\n');
    for s in samples {
        let c = s.rect.center();
        let mut row = vec![num(s.theta), s.branch.name().to_string()];
        row.extend([s.coords.u, s.coords.v, s.coords.t, s.scale].map(num));
        for v in &s.rect.vertices {
            row.push(num(v.x));
            row.push(num(v.y));
        }
        row.push(num(c.x));
        row.push(num(c.y));
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn oracle_csv(hits: &[OracleHit<f64>]) -> String {
    let mut out = String::from(ORACLE_HEADER);
    out.push('\n');
    for h in hits {
        let mut row = vec![num(h.w), num(h.x_a), num(h.x_b)];
        for v in &h.vertices {
            row.push(num(v.x));
            row.push(num(v.y));
        }
        row.push(num(h.residual));
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file().set_permissions(std::fs::Permissions::from_mode(0o644))?;
    }
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
