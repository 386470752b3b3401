//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function is a thin wrapper returning JSON text; the plain
//! functions behind them are what the native tests exercise.

use serde::Serialize;
use spherelab::body::ConvexBody2;
use spherelab::geom2d::{Circle2, Point2};
use spherelab::harness2d::{bisector_line, blanco_defect};
use spherelab::poncelet::{fer_solve, poncelet_polygon, Classification, DEFAULT_CLOSURE_TOL};
use wasm_bindgen::prelude::*;

const BOUNDARY_SAMPLES: usize = 240;
const BLANCO_VIEWS: usize = 24;

/// Inner body given as an ellipse; equal semiaxes give a disc.
#[derive(Debug, Clone, Copy)]
pub struct BodyParams {
    pub cx: f64,
    pub cy: f64,
    pub a: f64,
    pub b: f64,
    pub rotation: f64,
}

impl BodyParams {
    fn build(&self) -> spherelab::Result<ConvexBody2> {
        let center = Point2::new(self.cx, self.cy);
        if self.a == self.b {
            ConvexBody2::disc(center, self.a)
        } else {
            ConvexBody2::ellipse(center, self.a, self.b, self.rotation)
        }
    }
}

fn xy(points: &[Point2]) -> Vec<[f64; 2]> {
    points.iter().map(|p| [p.x, p.y]).collect()
}

#[derive(Debug, Serialize)]
pub struct PolygonView {
    pub boundary: Vec<[f64; 2]>,
    pub vertices: Vec<[f64; 2]>,
    pub classification: &'static str,
    pub k: Option<usize>,
    pub winding: Option<i64>,
    pub rotation_number: f64,
}

pub fn polygon_view(body: BodyParams, start: f64, max_steps: usize) -> spherelab::Result<PolygonView> {
    let body = body.build()?;
    let outer = Circle2::unit();
    let state = poncelet_polygon(&outer, &body, outer.point_at(start), max_steps.max(1), DEFAULT_CLOSURE_TOL)?;
    let (k, winding) = match state.classification {
        Classification::Closed { k, winding } => (Some(k), Some(winding)),
        _ => (None, None),
    };
    Ok(PolygonView {
        boundary: xy(&body.boundary(BOUNDARY_SAMPLES)),
        vertices: xy(&state.vertices),
        classification: state.classification.label(),
        k,
        winding,
        rotation_number: state.rotation_number(),
    })
}

#[derive(Debug, Serialize)]
pub struct ClosureView {
    pub radius: f64,
    pub residual: f64,
    pub vertices: Vec<[f64; 2]>,
}

/// Circle centred at `(offset, 0)` whose polygons close after `k` steps,
/// and one such polygon.
pub fn closure_view(offset: f64, k: usize, start: f64) -> spherelab::Result<ClosureView> {
    let outer = Circle2::unit();
    let center = Point2::new(offset, 0.0);
    let solved = fer_solve(&outer, center, k)?;
    let disc = ConvexBody2::disc(center, solved.radius)?;
    let state = poncelet_polygon(&outer, &disc, outer.point_at(start), 4 * k + 100, 1e-7)?;
    Ok(ClosureView {
        radius: solved.radius,
        residual: solved.rotation_residual,
        vertices: xy(&state.vertices),
    })
}

#[derive(Debug, Serialize)]
pub struct BisectorView {
    pub boundary: Vec<[f64; 2]>,
    pub defect: f64,
    pub hausdorff_to_best_circle: f64,
    /// Each bisector as a viewpoint on the unit circle and a unit direction.
    pub bisectors: Vec<[f64; 4]>,
}

pub fn bisector_view(body: BodyParams, px: f64, py: f64) -> spherelab::Result<BisectorView> {
    let body = body.build()?;
    let p = Point2::new(px, py);
    let report = blanco_defect(&body, p, 360)?;
    let outer = Circle2::unit();
    let bisectors = (0..BLANCO_VIEWS)
        .map(|i| {
            let x = outer.point_at(std::f64::consts::TAU * i as f64 / BLANCO_VIEWS as f64);
            let d = bisector_line(&body, x)?.direction().vec();
            Ok([x.x, x.y, d.x, d.y])
        })
        .collect::<spherelab::Result<Vec<_>>>()?;
    Ok(BisectorView {
        boundary: xy(&body.boundary(BOUNDARY_SAMPLES)),
        defect: report.defect,
        hausdorff_to_best_circle: report.hausdorff_to_best_circle,
        bisectors,
    })
}

fn to_js<T: Serialize>(r: spherelab::Result<T>) -> Result<String, JsError> {
    let value = r.map_err(|e| JsError::new(&e.to_string()))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn poncelet(cx: f64, cy: f64, a: f64, b: f64, rotation: f64, start: f64, max_steps: usize) -> Result<String, JsError> {
    to_js(polygon_view(BodyParams { cx, cy, a, b, rotation }, start, max_steps))
}

#[wasm_bindgen]
pub fn closure_radius(offset: f64, k: usize, start: f64) -> Result<String, JsError> {
    to_js(closure_view(offset, k, start))
}

#[wasm_bindgen]
pub fn bisectors(cx: f64, cy: f64, a: f64, b: f64, rotation: f64, px: f64, py: f64) -> Result<String, JsError> {
    to_js(bisector_view(BodyParams { cx, cy, a, b, rotation }, px, py))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc(r: f64) -> BodyParams {
        BodyParams { cx: 0.0, cy: 0.0, a: r, b: r, rotation: 0.0 }
    }

    #[test]
    fn polygon_of_concentric_disc_is_a_triangle() {
        let view = polygon_view(disc(0.5), 0.3, 100).unwrap();
        assert_eq!(view.classification, "closed");
        assert_eq!(view.k, Some(3));
        assert_eq!(view.vertices.len(), 3);
        assert_eq!(view.boundary.len(), BOUNDARY_SAMPLES);
    }

    #[test]
    fn closure_radius_matches_euler() {
        let view = closure_view(0.2, 3, 1.0).unwrap();
        assert!((view.radius - 0.48).abs() < 1e-8);
        assert_eq!(view.vertices.len(), 3);
    }

    #[test]
    fn bisectors_of_disc_and_ellipse() {
        let view = bisector_view(disc(0.4), 0.0, 0.0).unwrap();
        assert!(view.defect < 1e-9);
        assert_eq!(view.bisectors.len(), BLANCO_VIEWS);
        let ellipse = BodyParams { cx: 0.0, cy: 0.0, a: 0.5, b: 0.3, rotation: 0.0 };
        assert!(bisector_view(ellipse, 0.0, 0.0).unwrap().defect > 0.01);
    }

    #[test]
    fn errors_are_reported() {
        assert!(polygon_view(disc(1.2), 0.0, 10).is_err());
        assert!(closure_view(0.2, 2, 0.0).is_err());
    }
}
