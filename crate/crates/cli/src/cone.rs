//! Commands on quadrics and their tangent cones.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitSphere};
use serde::Serialize;
use spherelab::cone3d::{
    axes_concurrency, babel_section_reduce, babel_section_report, fibonacci_sphere, mari_harness,
    plane_viewpoints, survey_viewpoint, ConcurrencyReport, Line3, MariTolerances, Plane3, Quadric3,
    SectionChecks, Vec3, ViewpointCone,
};
use spherelab::io::QuadricSpec;

use crate::output::{f, Output};
use crate::params::{Params, ViewpointSet};
use crate::CliError;

const DEFAULT_VIEWPOINTS: usize = 50;
const DEFAULT_MARI_SAMPLES: usize = 100;
const DEFAULT_SECTIONS: usize = 20;
const DEFAULT_SECTION_VIEWPOINTS: usize = 360;
const DEFAULT_SWEEP_STEPS: usize = 9;
/// Largest semiaxis of the swept ellipsoids.
const SWEEP_SCALE: f64 = 0.45;
/// Smallest aspect ratio in the sweep.
const SWEEP_MIN_ASPECT: f64 = 0.6;

fn load_quadric(path: &Path) -> Result<Quadric3, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read quadric {}: {e}", path.display())))?;
    let spec: QuadricSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("invalid quadric {}: {e}", path.display())))?;
    spec.build().map_err(|e| CliError::Config(format!("invalid quadric {}: {e}", path.display())))
}

fn plane(params: &Params) -> Result<Plane3, CliError> {
    match params.plane.as_deref() {
        None => Ok(Plane3::new(Vec3::new(0.0, 0.0, 1.0), 0.0)?),
        Some([nx, ny, nz, s]) => Plane3::new(Vec3::new(*nx, *ny, *nz), *s)
            .map_err(|e| CliError::Config(format!("invalid --plane: {e}"))),
        Some(other) => Err(CliError::Config(format!("--plane needs four numbers, got {}", other.len()))),
    }
}

fn point3(params: &Params, default: Vec3) -> Result<Vec3, CliError> {
    match params.p.as_deref() {
        None => Ok(default),
        Some([x, y, z]) => Ok(Vec3::new(*x, *y, *z)),
        Some(other) => Err(CliError::Config(format!("--p needs three coordinates, got {}", other.len()))),
    }
}

fn triple(v: &Vec3) -> [String; 3] {
    [f(v.x), f(v.y), f(v.z)]
}

fn write_axes(out: &Output, cones: &[ViewpointCone]) -> Result<(), CliError> {
    out.csv(
        "axes.csv",
        &[
            "viewpoint", "vx", "vy", "vz", "px", "py", "pz", "dx", "dy", "dz", "right_circular", "eigen_gap",
            "section_defect",
        ],
        cones.iter().enumerate().map(|(i, c)| {
            let mut row = vec![i.to_string()];
            row.extend(triple(&c.viewpoint));
            row.extend(triple(&c.axis.point));
            row.extend(triple(&c.axis.direction()));
            row.extend([c.right_circular.to_string(), f(c.eigen_gap), f(c.section_defect)]);
            row
        }),
    )
}

pub fn axis(params: Params, with_concurrency: bool) -> Result<(), CliError> {
    let quadric = load_quadric(Params::require(&params.quadric, "quadric")?)?;
    let n = Params::count_or(params.samples, DEFAULT_VIEWPOINTS, 1, "samples")?;
    let tol = params.tol_or(MariTolerances::default().right_circular)?;
    let out = Output::new(&params)?;
    let viewpoints = match params.viewpoints.unwrap_or(ViewpointSet::Sphere) {
        ViewpointSet::Sphere => fibonacci_sphere(n),
        ViewpointSet::Plane => plane_viewpoints(&quadric, &plane(&params)?, n),
    };
    let cones = viewpoints
        .iter()
        .map(|x| survey_viewpoint(&quadric, x, tol))
        .collect::<Result<Vec<_>, _>>()?;
    write_axes(&out, &cones)?;
    if with_concurrency {
        let axes: Vec<Line3> = cones.iter().map(|c| c.axis).collect();
        let report = axes_concurrency(&axes)?;
        out.json("concurrency.json", &report)?;
        println!("residual {}", f(report.residual));
    }
    Ok(())
}

#[derive(Serialize)]
struct BabelRow {
    normal: [f64; 3],
    offset: f64,
    defect: f64,
    sigma_radius_spread: f64,
    hausdorff_to_best_circle: f64,
    verdict: bool,
}

#[derive(Serialize)]
struct BabelSummary {
    p: [f64; 3],
    seed: u64,
    tol: f64,
    all_pass: bool,
    sections: Vec<BabelRow>,
}

pub fn babel(params: Params) -> Result<(), CliError> {
    let quadric = load_quadric(Params::require(&params.quadric, "quadric")?)?;
    let p = point3(&params, quadric.center())?;
    let count = Params::count_or(params.sections, DEFAULT_SECTIONS, 1, "sections")?;
    let samples = Params::count_or(params.samples, DEFAULT_SECTION_VIEWPOINTS, 1, "samples")?;
    let seed = params.seed.unwrap_or(0);
    let tol = params.tol_or(1e-8)?;
    let out = Output::new(&params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let n: [f64; 3] = UnitSphere.sample(&mut rng);
        let plane = Plane3::through(&p, Vec3::from(n))?;
        let section = babel_section_reduce(&quadric, &p, &plane, samples)?;
        let report = babel_section_report(&section)?;
        rows.push(BabelRow {
            normal: plane.normal().into(),
            offset: plane.offset(),
            defect: report.defect,
            sigma_radius_spread: report.sigma_radius_spread,
            hausdorff_to_best_circle: report.hausdorff_to_best_circle,
            verdict: report.conclusion(tol),
        });
    }
    out.csv(
        "babel.csv",
        &["section", "nx", "ny", "nz", "s", "defect", "sigma_radius_spread", "hausdorff_to_best_circle", "verdict"],
        rows.iter().enumerate().map(|(i, r)| {
            let mut row = vec![i.to_string()];
            row.extend(r.normal.iter().map(|v| f(*v)));
            row.extend([f(r.offset), f(r.defect), f(r.sigma_radius_spread), f(r.hausdorff_to_best_circle)]);
            row.push(r.verdict.to_string());
            row
        }),
    )?;
    let all_pass = rows.iter().all(|r| r.verdict);
    out.json(
        "babel.json",
        &BabelSummary {
            p: p.into(),
            seed,
            tol,
            all_pass,
            sections: rows,
        },
    )?;
    println!("all sections pass: {all_pass}");
    Ok(())
}

#[derive(Serialize)]
struct MariSummary {
    plane: [f64; 4],
    viewpoints: usize,
    tolerances: MariTolerances,
    all_right_circular: bool,
    max_eigen_gap: f64,
    concurrency: ConcurrencyReport,
    section: Option<SectionChecks>,
    verdict: bool,
}

pub fn mari(params: Params) -> Result<(), CliError> {
    let quadric = load_quadric(Params::require(&params.quadric, "quadric")?)?;
    let plane = plane(&params)?;
    let n = Params::count_or(params.samples, DEFAULT_MARI_SAMPLES, 3, "samples")?;
    let tolerances = match params.tol {
        None => MariTolerances::default(),
        Some(_) => {
            let t = params.tol_or(0.0)?;
            MariTolerances {
                right_circular: t,
                concurrency: t,
                section: t,
            }
        }
    };
    let out = Output::new(&params)?;
    let report = mari_harness(&quadric, &plane, n, &tolerances)?;
    write_axes(&out, &report.cones)?;
    let normal = plane.normal();
    out.json(
        "mari.json",
        &MariSummary {
            plane: [normal.x, normal.y, normal.z, plane.offset()],
            viewpoints: report.cones.len(),
            tolerances,
            all_right_circular: report.all_right_circular,
            max_eigen_gap: report.max_eigen_gap,
            concurrency: report.concurrency,
            section: report.section,
            verdict: report.verdict,
        },
    )?;
    println!("verdict {}", report.verdict);
    Ok(())
}

pub fn explore_gruber(params: Params) -> Result<(), CliError> {
    let steps = Params::count_or(params.steps, DEFAULT_SWEEP_STEPS, 2, "steps")?;
    let n = Params::count_or(params.samples, DEFAULT_VIEWPOINTS, 3, "samples")?;
    let tol = params.tol_or(MariTolerances::default().right_circular)?;
    let out = Output::new(&params)?;
    let viewpoints = fibonacci_sphere(n);
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let q = 1.0 - (1.0 - SWEEP_MIN_ASPECT) * i as f64 / (steps - 1) as f64;
        let semiaxes = [SWEEP_SCALE, SWEEP_SCALE * q, SWEEP_SCALE * q * q];
        let quadric = Quadric3::axis_aligned(Vec3::zeros(), semiaxes)?;
        let cones = viewpoints
            .iter()
            .map(|x| survey_viewpoint(&quadric, x, tol))
            .collect::<Result<Vec<_>, _>>()?;
        let axes: Vec<Line3> = cones.iter().map(|c| c.axis).collect();
        let report = axes_concurrency(&axes)?;
        let max_gap = cones.iter().map(|c| c.eigen_gap).fold(0.0, f64::max);
        let max_section = cones.iter().map(|c| c.section_defect).fold(0.0, f64::max);
        let eccentricity = (1.0 - q.powi(4)).sqrt();
        rows.push(vec![
            f(q),
            f(eccentricity),
            f(report.residual),
            f(report.max_pairwise_gap),
            f(max_gap),
            f(max_section),
        ]);
    }
    out.csv(
        "gruber.csv",
        &["aspect", "eccentricity", "residual", "max_pairwise_gap", "max_eigen_gap", "max_section_defect"],
        rows,
    )
}
