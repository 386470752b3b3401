//! Commands on planar bodies inside the unit circle.

use std::path::Path;

use serde::Serialize;
use spherelab::body::ConvexBody2;
use spherelab::geom2d::{Circle2, Point2};
use spherelab::harness2d::{bisector_line, blanco_defect, DEFAULT_BLANCO_SAMPLES};
use spherelab::io::BodySpec;
use spherelab::poncelet::{
    fer_solve, poncelet_polygon, porism_check, Classification, DEFAULT_CLOSURE_TOL, DEFAULT_MAX_STEPS,
    DEFAULT_PORISM_STARTS,
};
use spherelab::svg::Scene;

use crate::output::{f, Output};
use crate::params::Params;
use crate::CliError;

/// Vertices drawn in the SVG of an open orbit.
const SVG_OPEN_VERTICES: usize = 200;
/// Tangent pairs drawn in the blanco scene.
const SVG_BLANCO_VIEWS: usize = 12;
const FER_PORISM_TOL: f64 = 1e-7;

pub fn load_body(path: &Path) -> Result<ConvexBody2, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read body {}: {e}", path.display())))?;
    let spec: BodySpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("invalid body {}: {e}", path.display())))?;
    spec.build().map_err(|e| CliError::Config(format!("invalid body {}: {e}", path.display())))
}

fn point2(params: &Params) -> Result<Point2, CliError> {
    match params.p.as_deref() {
        None => Ok(Point2::ORIGIN),
        Some([x, y]) => Ok(Point2::new(*x, *y)),
        Some(other) => Err(CliError::Config(format!("--p needs two coordinates, got {}", other.len()))),
    }
}

#[derive(Serialize)]
struct PonceletSummary {
    classification: &'static str,
    k: Option<usize>,
    winding: Option<i64>,
    limit: Option<f64>,
    rotation_number: f64,
    closure_defect: f64,
    steps: usize,
    start_angle: f64,
}

pub fn poncelet(params: Params) -> Result<(), CliError> {
    let body = load_body(Params::require(&params.body, "body")?)?;
    let start = params.start.unwrap_or(0.0);
    let tol = params.tol_or(DEFAULT_CLOSURE_TOL)?;
    let max_steps = Params::count_or(params.max_steps, DEFAULT_MAX_STEPS, 1, "max-steps")?;
    let out = Output::new(&params)?;
    let outer = Circle2::unit();
    let state = poncelet_polygon(&outer, &body, outer.point_at(start), max_steps, tol)?;

    let defects = state.vertex_defects();
    out.csv(
        "vertices.csv",
        &["step", "angle", "x", "y", "closure_defect"],
        state.vertices.iter().zip(&defects).enumerate().map(|(i, (v, d))| {
            vec![i.to_string(), f(outer.angle_of(*v)), f(v.x), f(v.y), f(*d)]
        }),
    )?;

    let (k, winding, limit) = match state.classification {
        Classification::Closed { k, winding } => (Some(k), Some(winding), None),
        Classification::OpenConverging { limit } => (None, None, Some(limit)),
        Classification::OpenDense => (None, None, None),
    };
    out.json(
        "summary.json",
        &PonceletSummary {
            classification: state.classification.label(),
            k,
            winding,
            limit,
            rotation_number: state.rotation_number(),
            closure_defect: state.closure_defect,
            steps: state.chords.len(),
            start_angle: start,
        },
    )?;

    let closed = k.is_some();
    let shown = if closed { state.vertices.len() } else { state.vertices.len().min(SVG_OPEN_VERTICES) };
    let mut scene = Scene::new(1.1);
    scene
        .circle(&outer, "outer")
        .body(&body, "body")
        .polygon(&state.vertices[..shown], closed, "polygon")
        .point(state.vertices[0], "start");
    out.svg("scene.svg", &scene)?;
    println!("{}", state.classification.label());
    Ok(())
}

#[derive(Serialize)]
struct FerSummary {
    k: usize,
    offset: f64,
    radius: f64,
    rotation_residual: f64,
    bisection_steps: usize,
    starts: usize,
    closure_passed: bool,
    winding: Option<i64>,
    max_closure_defect: f64,
}

pub fn fer(params: Params) -> Result<(), CliError> {
    let k = *Params::require(&params.k, "k")?;
    let offset = params.offset.unwrap_or(0.0);
    let starts = Params::count_or(params.starts, DEFAULT_PORISM_STARTS, 1, "starts")?;
    let tol = params.tol_or(FER_PORISM_TOL)?;
    let out = Output::new(&params)?;
    let outer = Circle2::unit();
    let center = Point2::new(offset, 0.0);
    let solved = fer_solve(&outer, center, k)?;
    let disc = ConvexBody2::disc(center, solved.radius)?;
    let report = porism_check(&outer, &disc, k, starts, tol)?;

    out.csv(
        "closure.csv",
        &["start", "start_angle", "classification", "k", "winding", "closure_defect"],
        report.starts.iter().enumerate().map(|(i, s)| {
            let (k, w) = match s.classification {
                Classification::Closed { k, winding } => (k.to_string(), winding.to_string()),
                _ => (String::new(), String::new()),
            };
            vec![i.to_string(), f(s.start_angle), s.classification.label().to_string(), k, w, f(s.closure_defect)]
        }),
    )?;
    out.json(
        "fer.json",
        &FerSummary {
            k,
            offset,
            radius: solved.radius,
            rotation_residual: solved.rotation_residual,
            bisection_steps: solved.bisection_steps,
            starts,
            closure_passed: report.passed,
            winding: report.winding,
            max_closure_defect: report.max_closure_defect,
        },
    )?;
    println!("radius {}", f(solved.radius));
    println!("residual {}", f(solved.rotation_residual));
    Ok(())
}

#[derive(Serialize)]
struct BlancoSummary {
    p: [f64; 2],
    tol: f64,
    verdict: bool,
    #[serde(flatten)]
    report: spherelab::harness2d::BlancoReport,
}

pub fn blanco(params: Params) -> Result<(), CliError> {
    let body = load_body(Params::require(&params.body, "body")?)?;
    let p = point2(&params)?;
    let samples = Params::count_or(params.samples, DEFAULT_BLANCO_SAMPLES, 1, "samples")?;
    let tol = params.tol_or(1e-8)?;
    let out = Output::new(&params)?;
    let report = blanco_defect(&body, p, samples)?;
    let verdict = report.conclusion(tol);

    out.csv(
        "samples.csv",
        &["angle", "bisector_distance", "sigma_radius"],
        report
            .per_sample
            .iter()
            .map(|s| vec![f(s.angle), f(s.bisector_distance), f(s.sigma_radius)]),
    )?;

    let mut scene = Scene::new(1.1);
    scene.circle(&Circle2::unit(), "outer").body(&body, "body");
    let views = SVG_BLANCO_VIEWS.min(samples);
    for i in 0..views {
        let x = Circle2::unit().point_at(report.per_sample[i * samples / views].angle);
        let (l1, l2) = body.tangent_lines(x)?.lines();
        scene
            .line(&l1, "tangent", "gray")
            .line(&l2, "tangent", "gray")
            .line(&bisector_line(&body, x)?, "bisector", "seagreen");
    }
    scene.point(p, "p");
    out.svg("scene.svg", &scene)?;

    out.json(
        "report.json",
        &BlancoSummary {
            p: [p.x, p.y],
            tol,
            verdict,
            report,
        },
    )?;
    println!("verdict {verdict}");
    Ok(())
}
