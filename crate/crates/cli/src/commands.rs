//! Subcommands. Each reads a configuration file, computes, and writes a
//! single output file atomically.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rectflow::{
    build_frame, locus, oracle_scan, project_to_c, sample_solution, samples_at_scales, Branch, Frame64, Projected,
    Sample64, DEFAULT_TOL,
};

use crate::config_file::{load, CanonicalSpec, Loaded};
use crate::error::{CliError, CliResult};
use crate::output::{oracle_csv, samples_csv, write_atomic};
use crate::report::{to_json, AnalysisReport, FrameJson, LocusJson, NormalizationJson};
use crate::svg::{render_svg, Plane, Scene};

#[derive(Debug, Parser)]
#[command(name = "rectflow", version, about = "Rectangles inscribed in four lines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// JSON configuration file.
    #[arg(long)]
    pub config: PathBuf,
    /// Tolerance for parallel and degeneracy tests.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Output file.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Config,
    Solution,
    Locus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlaneArg {
    Xy,
    Uw,
    Uv,
    Ut,
    Vt,
}

impl From<PlaneArg> for Plane {
    fn from(p: PlaneArg) -> Self {
        match p {
            PlaneArg::Xy => Plane::Xy,
            PlaneArg::Uw => Plane::Uw,
            PlaneArg::Uv => Plane::Uv,
            PlaneArg::Ut => Plane::Ut,
            PlaneArg::Vt => Plane::Vt,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form, normalization, basis and locus kind as JSON.
    Analyze {
        #[command(flatten)]
        common: Common,
    },
    /// Unit rectangles on an even θ grid as CSV.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// Centers of inscribed rectangles as JSON.
    Locus {
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force unit rectangles on scale slices as CSV.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Scale slices `start:end:count`.
        #[arg(long)]
        wgrid: String,
        /// Newton starts per axis.
        #[arg(long, default_value_t = 24)]
        grid: usize,
        /// Residual accepted as converged.
        #[arg(long, default_value_t = 1e-12)]
        residual: f64,
    },
    /// SVG figure.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum, default_value_t = PlaneArg::Xy)]
        plane: PlaneArg,
        #[arg(long, default_value_t = 32)]
        samples: usize,
    },
}

fn check_tol(tol: f64) -> CliResult<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(CliError::Argument(format!("tolerance must be positive, got {tol}")))
    }
}

fn setup(common: &Common) -> CliResult<(Loaded, Frame64)> {
    check_tol(common.tol)?;
    let loaded = load(&common.config, common.tol)?;
    let frame = build_frame(&loaded.config, common.tol)?;
    Ok((loaded, frame))
}

/// `a:b:n` with `n ≥ 1` evenly spaced values; `n = 1` gives `a`.
pub fn parse_wgrid(s: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Argument(format!("wgrid must be start:end:count, got {s:?}"));
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts.as_slice() else { return Err(bad()) };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    Ok((0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect())
}

/// Plus then minus for each θ when both branches are requested.
pub fn solve_samples(frame: &Frame64, n: usize, branch: BranchArg) -> Vec<Sample64> {
    match branch {
        BranchArg::Plus => sample_solution(frame, n, Branch::Plus),
        BranchArg::Minus => sample_solution(frame, n, Branch::Minus),
        BranchArg::Both => sample_solution(frame, n, Branch::Plus)
            .into_iter()
            .zip(sample_solution(frame, n, Branch::Minus))
            .flat_map(|(p, m)| [p, m])
            .collect(),
    }
}

pub fn analysis_report(loaded: &Loaded, frame: &Frame64, tol: f64) -> AnalysisReport {
    AnalysisReport {
        canonical: CanonicalSpec::from(&loaded.config),
        normalization: NormalizationJson::from(&loaded.record),
        frame: FrameJson::from(frame),
        locus: locus(&loaded.config, frame, tol).kind.name().to_string(),
    }
}

fn config_lines(loaded: &Loaded) -> Vec<(String, [f64; 3])> {
    ["A", "B", "C", "D"]
        .iter()
        .zip(loaded.config.lines())
        .map(|(n, l)| {
            let h = l.homogeneous();
            (n.to_string(), [h[0], h[1], h[2]])
        })
        .collect()
}

/// Inscribed rectangles whose scale is at least a fifth of the largest, so
/// the view is not dominated by rectangles near infinity.
fn visible_rectangles(samples: &[Sample64], tol: f64) -> Vec<rectflow::Parallelogram64> {
    let w_max = samples.iter().fold(0.0f64, |m, s| m.max(s.scale.abs()));
    samples
        .iter()
        .filter(|s| s.scale.abs() >= 0.2 * w_max)
        .filter_map(|s| match project_to_c(s, tol) {
            Projected::Inscribed(p) => Some(p),
            Projected::AtInfinity => None,
        })
        .collect()
}

fn plane_coords(s: &Sample64, plane: Plane) -> [f64; 2] {
    let c = s.coords;
    match plane {
        Plane::Xy => unreachable!("the xy plane shows rectangles, not curve coordinates"),
        Plane::Uw => [c.u, s.scale],
        Plane::Uv => [c.u, c.v],
        Plane::Ut => [c.u, c.t],
        Plane::Vt => [c.v, c.t],
    }
}

pub fn render_scene(
    loaded: &Loaded,
    frame: &Frame64,
    what: What,
    plane: Plane,
    n: usize,
    tol: f64,
) -> CliResult<Scene> {
    let mut scene = Scene::default();
    match (what, plane) {
        (What::Config, Plane::Xy) => {
            scene.lines = config_lines(loaded);
            let lines = loaded.config.lines();
            for i in 0..4 {
                for j in i + 1..4 {
                    if let Some(p) = lines[i].intersect(&lines[j], tol) {
                        scene.markers.push([p.x, p.y]);
                    }
                }
            }
        }
        (What::Solution, Plane::Xy) => {
            scene.lines = config_lines(loaded);
            for p in visible_rectangles(&sample_solution(frame, n, Branch::Plus), tol) {
                scene.polygons.push(p.vertices.iter().map(|v| [v.x, v.y]).collect());
            }
        }
        (What::Solution, _) => {
            if n > 0 {
                for branch in [Branch::Plus, Branch::Minus] {
                    let mut pts: Vec<[f64; 2]> = sample_solution(frame, n, branch)
                        .iter()
                        .map(|s| plane_coords(s, plane))
                        .collect();
                    pts.push(pts[0]);
                    scene.polylines.push(pts);
                }
                for s in samples_at_scales(frame, n.max(64), &[0.0]) {
                    scene.markers.push(plane_coords(&s, plane));
                }
            }
        }
        (What::Locus, Plane::Xy) => {
            scene.lines = config_lines(loaded);
            let samples = sample_solution(frame, n, Branch::Plus);
            let w_max = samples.iter().fold(0.0f64, |m, s| m.max(s.scale.abs()));
            let mut run: Vec<[f64; 2]> = Vec::new();
            let mut prev_sign = 0.0;
            for s in &samples {
                let keep = s.scale.abs() >= 0.2 * w_max && s.scale.abs() > tol;
                if !keep || s.scale.signum() != prev_sign {
                    if run.len() > 1 {
                        scene.polylines.push(std::mem::take(&mut run));
                    }
                    run.clear();
                }
                if keep {
                    let c = s.rect.center();
                    run.push([c.x / s.scale, c.y / s.scale]);
                    prev_sign = s.scale.signum();
                }
            }
            if run.len() > 1 {
                scene.polylines.push(run);
            }
            if scene.polylines.is_empty() {
                let report = locus(&loaded.config, frame, tol);
                scene.markers.extend(report.samples.iter().map(|c| [c.x, c.y]));
            }
        }
        (What::Config | What::Locus, _) => {
            return Err(CliError::Argument(
                format!("--what {what:?} is drawn only in the xy plane").to_lowercase(),
            ));
        }
    }
    Ok(scene)
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Analyze { common } => {
            let (loaded, frame) = setup(&common)?;
            let report = analysis_report(&loaded, &frame, common.tol);
            write_atomic(&common.out, &to_json(&report))?;
        }
        Command::Solve {
            common,
            samples,
            branch,
        } => {
            let (_, frame) = setup(&common)?;
            write_atomic(&common.out, &samples_csv(&solve_samples(&frame, samples, branch)))?;
        }
        Command::Locus { common } => {
            let (loaded, frame) = setup(&common)?;
            let report = locus(&loaded.config, &frame, common.tol);
            write_atomic(&common.out, &to_json(&LocusJson::from(&report)))?;
        }
        Command::Oracle {
            common,
            wgrid,
            grid,
            residual,
        } => {
            check_tol(residual)?;
            let levels = parse_wgrid(&wgrid)?;
            let loaded = {
                check_tol(common.tol)?;
                load(&common.config, common.tol)?
            };
            let hits = oracle_scan(&loaded.config, &levels, grid, residual);
            write_atomic(&common.out, &oracle_csv(&hits))?;
        }
        Command::Render {
            common,
            what,
            plane,
            samples,
        } => {
            let (loaded, frame) = setup(&common)?;
            let plane = Plane::from(plane);
            let scene = render_scene(&loaded, &frame, what, plane, samples, common.tol)?;
            write_atomic(&common.out, &render_svg(&scene, plane)?)?;
        }
    }
    Ok(())
}

/// Parses `argv` (program name first), runs, reports failures on stderr and
/// returns the process exit code.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
