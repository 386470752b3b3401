//! Poncelet polygons inscribed in a circle and circumscribing a convex body.
//!
//! Each chord is the oriented tangent from the current vertex (body on the
//! left of travel), so the polygon winds counterclockwise around the outer
//! circle.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::body::{select_oriented, unit, ConvexBody2, TangentPair};
use crate::geom2d::{angular_distance, ccw_angle, Circle2, Dir2, Line2, Point2, POINT_ON_LINE_TOL};
use crate::{Error, Result};

pub const DEFAULT_MAX_STEPS: usize = 100_000;
/// Closure tolerance in arc length.
pub const DEFAULT_CLOSURE_TOL: f64 = 1e-9;
pub const DEFAULT_PORISM_STARTS: usize = 100;
/// Number of trailing vertices examined to tell dense from converging orbits.
pub const CLASSIFY_WINDOW: usize = 100;
/// Successive gap ratio below which an orbit is called converging.
pub const CONVERGING_RATIO: f64 = 0.99;
/// Required clearance between the body and the outer circle.
pub const CONTAINMENT_MARGIN: f64 = 1e-9;

/// A polygon edge: the supporting line `⟨u(normal), y⟩ = support`, with the
/// body on the `≤` side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub line: Line2,
    pub normal: f64,
    pub support: f64,
}

impl Chord {
    /// Signed distance of `p` from the chord, negative on the body side.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        unit(self.normal).dot(p) - self.support
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "classification", rename_all = "snake_case")]
pub enum Classification {
    Closed { k: usize, winding: i64 },
    OpenDense,
    OpenConverging { limit: f64 },
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Closed { .. } => "closed",
            Classification::OpenDense => "open_dense",
            Classification::OpenConverging { .. } => "open_converging",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PonceletState {
    pub outer: Circle2,
    /// `x₁, x₂, …`; for a closed polygon the returning vertex is omitted.
    pub vertices: Vec<Point2>,
    pub chords: Vec<Chord>,
    pub classification: Classification,
    /// Arc length from `x₁` to the returning vertex; for open orbits the
    /// closest return observed.
    pub closure_defect: f64,
    /// Sum of counterclockwise arc steps, in radians.
    pub total_turning: f64,
}

impl PonceletState {
    /// Arc length from each vertex back to `x₁`.
    pub fn vertex_defects(&self) -> Vec<f64> {
        let a0 = self.outer.angle_of(self.vertices[0]);
        self.vertices
            .iter()
            .map(|v| self.outer.radius * angular_distance(self.outer.angle_of(*v), a0))
            .collect()
    }

    pub fn rotation_number(&self) -> f64 {
        self.total_turning / (TAU * self.chords.len() as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step {
    pub next: Point2,
    pub chord: Chord,
    /// Counterclockwise arc angle from the current to the next vertex.
    pub arc: f64,
}

fn check_setup(outer: &Circle2, body: &ConvexBody2, x: Point2) -> Result<()> {
    let margin = body.containment_in(outer);
    if margin <= CONTAINMENT_MARGIN {
        return Err(Error::Containment { margin });
    }
    let error = (x.distance(outer.center) - outer.radius).abs();
    if error > POINT_ON_LINE_TOL {
        return Err(Error::PointOffCircle { error });
    }
    Ok(())
}

fn step_unchecked(outer: &Circle2, body: &ConvexBody2, x: Point2) -> Result<Step> {
    let pair: TangentPair = body.tangent_lines(x)?;
    let t = select_oriented(&pair, x);
    let travel = unit(t.normal).perp();
    let along = -2.0 * travel.dot(x - outer.center);
    if along <= POINT_ON_LINE_TOL * outer.radius {
        return Err(Error::TangentDegenerate);
    }
    let next = outer.project(x + travel * along);
    let arc = ccw_angle(outer.angle_of(x), outer.angle_of(next));
    Ok(Step {
        next,
        chord: Chord {
            line: Line2::with_normal_through(Dir2::from_angle(t.normal), x),
            normal: t.normal,
            support: body.support(t.normal),
        },
        arc,
    })
}

/// One step of the Poncelet map from `x`.
pub fn poncelet_step(outer: &Circle2, body: &ConvexBody2, x: Point2) -> Result<Step> {
    check_setup(outer, body, x)?;
    step_unchecked(outer, body, x)
}

/// Iterates the Poncelet map from `x` until the orbit closes or `max_steps`
/// chords have been drawn.
///
/// Open orbits are classified from the last [`CLASSIFY_WINDOW`] arc steps: if
/// each gap shrinks by a factor below [`CONVERGING_RATIO`] the orbit is
/// called converging, otherwise dense. This is a heuristic; the asymptotic
/// question cannot be decided in finite precision.
pub fn poncelet_polygon(
    outer: &Circle2,
    body: &ConvexBody2,
    x: Point2,
    max_steps: usize,
    closure_tol: f64,
) -> Result<PonceletState> {
    if max_steps < 3 {
        return Err(Error::InvalidArgument(format!("max_steps must be at least 3, got {max_steps}")));
    }
    if !(closure_tol > 0.0) {
        return Err(Error::InvalidArgument(format!("closure tolerance must be positive, got {closure_tol}")));
    }
    check_setup(outer, body, x)?;

    let start_angle = outer.angle_of(x);
    let mut state = PonceletState {
        outer: *outer,
        vertices: vec![x],
        chords: Vec::new(),
        classification: Classification::OpenDense,
        closure_defect: f64::INFINITY,
        total_turning: 0.0,
    };
    let mut arcs = Vec::new();
    let mut current = x;
    for k in 1..=max_steps {
        let step = step_unchecked(outer, body, current)?;
        state.chords.push(step.chord);
        state.total_turning += step.arc;
        arcs.push(step.arc);
        let defect = outer.radius * angular_distance(outer.angle_of(step.next), start_angle);
        if k >= 3 && defect < closure_tol {
            state.closure_defect = defect;
            state.classification = Classification::Closed {
                k,
                winding: (state.total_turning / TAU).round() as i64,
            };
            return Ok(state);
        }
        state.closure_defect = state.closure_defect.min(defect);
        state.vertices.push(step.next);
        current = step.next;
    }

    if arcs.len() < CLASSIFY_WINDOW {
        return Err(Error::MaxStepsExhausted {
            steps: max_steps,
            partial: Box::new(state),
        });
    }
    let window = &arcs[arcs.len() - CLASSIFY_WINDOW..];
    let converging = window
        .windows(2)
        .all(|w| w[1] < CONVERGING_RATIO * w[0]);
    state.classification = if converging {
        let last = state.vertices[state.vertices.len() - 1];
        let ratio = window[window.len() - 1] / window[window.len() - 2];
        let remaining = window[window.len() - 1] * ratio / (1.0 - ratio);
        Classification::OpenConverging {
            limit: (outer.angle_of(last) + remaining + PI).rem_euclid(TAU) - PI,
        }
    } else {
        Classification::OpenDense
    };
    Ok(state)
}

fn turning_after(outer: &Circle2, body: &ConvexBody2, x: Point2, steps: usize) -> Result<f64> {
    let mut current = x;
    let mut total = 0.0;
    for _ in 0..steps {
        let step = step_unchecked(outer, body, current)?;
        total += step.arc;
        current = step.next;
    }
    Ok(total)
}

/// Mean fraction of a turn advanced per step over `steps` steps.
pub fn rotation_number(outer: &Circle2, body: &ConvexBody2, x: Point2, steps: usize) -> Result<f64> {
    if steps < 100 {
        return Err(Error::InvalidArgument(format!("rotation number needs at least 100 steps, got {steps}")));
    }
    check_setup(outer, body, x)?;
    Ok(turning_after(outer, body, x, steps)? / (TAU * steps as f64))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PorismStart {
    pub start_angle: f64,
    #[serde(flatten)]
    pub classification: Classification,
    pub closure_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PorismReport {
    pub k: usize,
    pub starts: Vec<PorismStart>,
    pub max_closure_defect: f64,
    /// Winding shared by all starts, when they agree.
    pub winding: Option<i64>,
    pub passed: bool,
}

/// Runs the polygon from `num_starts` uniformly spaced starts and checks
/// that every one closes with the same vertex count `k` and winding.
pub fn porism_check(
    outer: &Circle2,
    body: &ConvexBody2,
    k: usize,
    num_starts: usize,
    tol: f64,
) -> Result<PorismReport> {
    if k < 3 || num_starts == 0 {
        return Err(Error::InvalidArgument(format!("porism check needs k ≥ 3 and starts > 0, got k={k}, starts={num_starts}")));
    }
    let max_steps = (4 * k).max(CLASSIFY_WINDOW);
    let mut starts = Vec::with_capacity(num_starts);
    for i in 0..num_starts {
        let angle = TAU * i as f64 / num_starts as f64;
        let state = poncelet_polygon(outer, body, outer.point_at(angle), max_steps, tol)?;
        starts.push(PorismStart {
            start_angle: angle,
            classification: state.classification,
            closure_defect: state.closure_defect,
        });
    }
    let max_closure_defect = starts.iter().map(|s| s.closure_defect).fold(0.0, f64::max);
    let first = starts[0].classification;
    let agree = starts.iter().all(|s| s.classification == first);
    let (winding, passed) = match first {
        Classification::Closed { k: found, winding } if agree => (Some(winding), found == k),
        _ => (None, false),
    };
    Ok(PorismReport {
        k,
        starts,
        max_closure_defect,
        winding,
        passed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FerResult {
    pub radius: f64,
    pub rotation_residual: f64,
    pub bisection_steps: usize,
}

/// Points of the monotonicity check made before bisecting.
const MONOTONICITY_GRID: usize = 16;

/// Radius of the circle centred at `center` whose Poncelet polygon in
/// `outer` closes after `k` steps with winding one.
///
/// The closure function is `F(ρ) = (turning after k steps from a fixed start)
/// − 2π`. For an orientation-preserving circle map the sign of `F` at any
/// start equals the sign of `rotation number − 1/k`, and the rotation number
/// decreases as the inner circle grows, so `F` is bisected directly.
pub fn fer_solve(outer: &Circle2, center: Point2, k: usize) -> Result<FerResult> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k must be at least 3, got {k}")));
    }
    let offset = center.distance(outer.center);
    if offset >= outer.radius {
        return Err(Error::InvalidArgument(format!(
            "inner centre at distance {offset} is not inside the outer circle"
        )));
    }
    let span = outer.radius - offset;
    let start = outer.point_at(0.0);
    let closure = |rho: f64| -> Result<f64> {
        let disc = ConvexBody2::disc(center, rho)?;
        Ok(turning_after(outer, &disc, start, k)? - TAU)
    };

    let lo_rho = 1e-6 * span;
    let hi_rho = span * (1.0 - 1e-6);
    let mut previous = f64::INFINITY;
    for i in 0..=MONOTONICITY_GRID {
        let rho = lo_rho + (hi_rho - lo_rho) * i as f64 / MONOTONICITY_GRID as f64;
        let value = closure(rho)?;
        if value >= previous {
            return Err(Error::BracketFailure(format!(
                "rotation number not decreasing at radius {rho}"
            )));
        }
        previous = value;
    }

    let (mut lo, mut hi) = (lo_rho, hi_rho);
    let (f_lo, f_hi) = (closure(lo)?, closure(hi)?);
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::BracketFailure(format!(
            "closure function does not change sign on [{lo}, {hi}]: ({f_lo}, {f_hi})"
        )));
    }
    let mut steps = 0;
    while steps < 200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        steps += 1;
        let value = closure(mid)?;
        if value == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if value > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let radius = 0.5 * (lo + hi);
    let residual = (closure(radius)? / (TAU * k as f64)).abs();
    Ok(FerResult {
        radius,
        rotation_residual: residual,
        bisection_steps: steps,
    })
}

/// Samples of the support table built by [`q_region`].
pub const Q_REGION_SAMPLES: usize = 1440;
/// Sides of the polygon standing in for the outer disc during clipping.
const DISC_POLYGON_SIDES: usize = 1440;

/// Intersection of the supporting half-planes of the polygon's chords,
/// clipped to the outer disc, as a tabulated convex body.
pub fn q_region(state: &PonceletState, body: &ConvexBody2) -> Result<ConvexBody2> {
    q_region_of(std::slice::from_ref(state), body)
}

/// Intersection of the supporting half-planes of every chord of every state.
pub fn q_region_of(states: &[PonceletState], body: &ConvexBody2) -> Result<ConvexBody2> {
    let Some(first) = states.first() else {
        return Err(Error::InvalidArgument("no Poncelet states".into()));
    };
    if states.iter().any(|s| s.chords.len() < 3) {
        return Err(Error::InvalidArgument("q-region needs at least three chords".into()));
    }
    let outer = first.outer;
    let circumscribed = outer.radius / (PI / DISC_POLYGON_SIDES as f64).cos();
    let mut polygon: Vec<Point2> = (0..DISC_POLYGON_SIDES)
        .map(|i| outer.center + Point2::polar(circumscribed, TAU * (i as f64 + 0.5) / DISC_POLYGON_SIDES as f64))
        .collect();
    for chord in states.iter().flat_map(|s| &s.chords) {
        polygon = clip_half_plane(&polygon, unit(chord.normal), chord.support);
        if polygon.len() < 3 {
            return Err(Error::EmptyIntersection);
        }
    }
    let values = (0..Q_REGION_SAMPLES)
        .map(|i| {
            let u = unit(TAU * i as f64 / Q_REGION_SAMPLES as f64);
            polygon.iter().map(|v| u.dot(*v)).fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let region = ConvexBody2::from_support_table(values)?;
    // every chord supports the body, so the body must lie inside the region
    let escaped = (0..Q_REGION_SAMPLES).find(|&i| {
        let t = TAU * i as f64 / Q_REGION_SAMPLES as f64;
        body.support(t) > region.support(t) + 1e-8
    });
    if let Some(i) = escaped {
        return Err(Error::InvalidArgument(format!(
            "chords do not support the body (direction sample {i})"
        )));
    }
    Ok(region)
}

/// Sutherland–Hodgman clip of a convex polygon against `⟨n, y⟩ ≤ s`.
fn clip_half_plane(polygon: &[Point2], n: Point2, s: f64) -> Vec<Point2> {
    let mut out = Vec::with_capacity(polygon.len() + 1);
    for (i, &a) in polygon.iter().enumerate() {
        let b = polygon[(i + 1) % polygon.len()];
        let (da, db) = (n.dot(a) - s, n.dot(b) - s);
        if da <= 0.0 {
            out.push(a);
        }
        if (da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0) {
            out.push(a + (b - a) * (da / (da - db)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::hausdorff_distance;
    use approx::assert_abs_diff_eq;

    fn concentric(rho: f64) -> ConvexBody2 {
        ConvexBody2::disc(Point2::ORIGIN, rho).unwrap()
    }

    fn start() -> Point2 {
        Point2::new(1.0, 0.0)
    }

    #[test]
    fn concentric_step_arc() {
        let c = Circle2::unit();
        for (rho, arc) in [(0.5, 2.0 * PI / 3.0), ((PI / 4.0).cos(), PI / 2.0)] {
            let step = poncelet_step(&c, &concentric(rho), start()).unwrap();
            // concentric step angle is 2·arccos(ρ)
            assert_abs_diff_eq!(step.arc, 2.0 * rho.acos(), epsilon = 1e-12);
            assert_abs_diff_eq!(step.arc, arc, epsilon = 1e-12);
            assert!(step.next.distance(start()) > 0.1);
        }
    }

    #[test]
    fn step_rejects_bad_setup() {
        let c = Circle2::unit();
        assert!(matches!(
            poncelet_step(&c, &concentric(1.0), start()),
            Err(Error::Containment { .. })
        ));
        assert!(matches!(
            poncelet_step(&c, &concentric(0.5), Point2::new(0.9, 0.0)),
            Err(Error::PointOffCircle { .. })
        ));
    }

    #[test]
    fn concentric_triangle_closes() {
        let state = poncelet_polygon(&Circle2::unit(), &concentric(0.5), start(), DEFAULT_MAX_STEPS, DEFAULT_CLOSURE_TOL).unwrap();
        assert_eq!(state.classification, Classification::Closed { k: 3, winding: 1 });
        assert_eq!(state.vertices.len(), 3);
        for (v, expected) in state.vertices.iter().zip([0.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0]) {
            assert_abs_diff_eq!(v.angle(), expected, epsilon = 1e-12);
        }
        assert!(state.closure_defect < 1e-9);
    }

    #[test]
    fn concentric_pentagon_closes() {
        let rho = (PI / 5.0).cos();
        let state = poncelet_polygon(&Circle2::unit(), &concentric(rho), start(), DEFAULT_MAX_STEPS, DEFAULT_CLOSURE_TOL).unwrap();
        assert_eq!(state.classification, Classification::Closed { k: 5, winding: 1 });
    }

    #[test]
    fn irrational_rotation_is_dense() {
        let state = poncelet_polygon(&Circle2::unit(), &concentric(0.3), start(), DEFAULT_MAX_STEPS, DEFAULT_CLOSURE_TOL).unwrap();
        assert_eq!(state.classification, Classification::OpenDense);
        assert_eq!(state.chords.len(), DEFAULT_MAX_STEPS);
        assert!(state.closure_defect >= DEFAULT_CLOSURE_TOL);
    }

    #[test]
    fn short_runs_report_partial_state() {
        match poncelet_polygon(&Circle2::unit(), &concentric(0.3), start(), 10, DEFAULT_CLOSURE_TOL) {
            Err(Error::MaxStepsExhausted { steps, partial }) => {
                assert_eq!(steps, 10);
                assert_eq!(partial.chords.len(), 10);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn concentric_rotation_numbers() {
        let c = Circle2::unit();
        let r = rotation_number(&c, &concentric(0.5), start(), 300).unwrap();
        assert_abs_diff_eq!(r, 1.0 / 3.0, epsilon = 1e-12);
        let r = rotation_number(&c, &concentric((PI / 4.0).cos()), start(), 400).unwrap();
        assert_abs_diff_eq!(r, 0.25, epsilon = 1e-12);
        assert!(rotation_number(&c, &concentric(0.5), start(), 10).is_err());
    }

    #[test]
    fn rotation_number_start_independent() {
        let c = Circle2::unit();
        let body = ConvexBody2::disc(Point2::new(0.2, 0.1), 0.4).unwrap();
        let n = 400;
        let values: Vec<f64> = (0..8)
            .map(|i| rotation_number(&c, &body, c.point_at(i as f64 * 0.8), n).unwrap())
            .collect();
        let spread = values.iter().cloned().fold(f64::MIN, f64::max)
            - values.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread < 2.0 / n as f64, "spread {spread}");
    }

    #[test]
    fn rotation_number_decreases_with_radius() {
        let c = Circle2::unit();
        let center = Point2::new(0.15, -0.1);
        let mut previous = f64::INFINITY;
        for i in 1..10 {
            let rho = 0.07 * i as f64;
            let body = ConvexBody2::disc(center, rho).unwrap();
            let r = rotation_number(&c, &body, start(), 200).unwrap();
            assert!(r < previous);
            previous = r;
        }
    }

    #[test]
    fn porism_concentric_and_euler() {
        let c = Circle2::unit();
        let report = porism_check(&c, &concentric(0.5), 3, 100, 1e-9).unwrap();
        assert!(report.passed);
        assert_eq!(report.winding, Some(1));
        assert!(report.max_closure_defect < 1e-9);

        // Euler: d² = R² − 2Rr with R = 1, d = 0.2 gives r = 0.48
        let euler = ConvexBody2::disc(Point2::new(0.2, 0.0), 0.48).unwrap();
        let report = porism_check(&c, &euler, 3, 100, 1e-7).unwrap();
        assert!(report.passed, "max defect {}", report.max_closure_defect);

        let perturbed = ConvexBody2::disc(Point2::new(0.2, 0.0), 0.481).unwrap();
        let report = porism_check(&c, &perturbed, 3, 100, 1e-7).unwrap();
        assert!(!report.passed);
    }

    #[test]
    fn fer_concentric_and_eccentric() {
        let c = Circle2::unit();
        let r = fer_solve(&c, Point2::ORIGIN, 3).unwrap();
        assert_abs_diff_eq!(r.radius, 0.5, epsilon = 1e-12);
        assert!(r.rotation_residual < 1e-10);

        let r = fer_solve(&c, Point2::new(0.2, 0.0), 3).unwrap();
        assert_abs_diff_eq!(r.radius, 0.48, epsilon = 1e-12);

        // Fuss: 1/(R−d)² + 1/(R+d)² = 1/r²
        let fuss = (1.0 / (1.0 / 0.64 + 1.0 / 1.44f64)).sqrt();
        let r = fer_solve(&c, Point2::new(0.2, 0.0), 4).unwrap();
        assert_abs_diff_eq!(r.radius, fuss, epsilon = 1e-12);
        assert_abs_diff_eq!(fuss, 0.665640235470275, epsilon = 1e-14);
    }

    #[test]
    fn fer_radius_closes_the_polygon() {
        let c = Circle2::unit();
        let center = Point2::new(-0.1, 0.25);
        for k in [3, 5, 7] {
            let r = fer_solve(&c, center, k).unwrap();
            let body = ConvexBody2::disc(center, r.radius).unwrap();
            let state = poncelet_polygon(&c, &body, c.point_at(1.3), DEFAULT_MAX_STEPS, 1e-8).unwrap();
            assert_eq!(state.classification, Classification::Closed { k, winding: 1 });
        }
    }

    #[test]
    fn fer_rejects_bad_input() {
        let c = Circle2::unit();
        assert!(fer_solve(&c, Point2::ORIGIN, 2).is_err());
        assert!(fer_solve(&c, Point2::new(1.5, 0.0), 3).is_err());
    }

    #[test]
    fn chords_support_the_body() {
        let c = Circle2::unit();
        let body = ConvexBody2::ellipse(Point2::new(0.1, 0.0), 0.5, 0.3, 0.4).unwrap();
        let state = poncelet_polygon(&c, &body, start(), 500, DEFAULT_CLOSURE_TOL).unwrap();
        let boundary = body.boundary(720);
        for chord in &state.chords {
            let worst = boundary.iter().map(|p| chord.signed_distance(*p)).fold(f64::MIN, f64::max);
            assert!(worst <= 1e-8);
        }
        for v in &state.vertices {
            assert!((v.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn disc_polygon_equals_sigma_polygon() {
        // a disc body and its own Σ circle generate the same polygon
        let c = Circle2::unit();
        let p = Point2::new(0.15, -0.2);
        let body = ConvexBody2::disc(p, 0.35).unwrap();
        let x = c.point_at(0.4);
        let first = body.oriented_tangent(x).unwrap();
        let sigma = ConvexBody2::disc(p, first.line.distance(p)).unwrap();
        let a = poncelet_polygon(&c, &body, x, 200, DEFAULT_CLOSURE_TOL).unwrap();
        let b = poncelet_polygon(&c, &sigma, x, 200, DEFAULT_CLOSURE_TOL).unwrap();
        for (u, v) in a.vertices.iter().zip(&b.vertices) {
            assert!(u.distance(*v) < 1e-9);
        }
    }

    #[test]
    fn q_region_of_triangle() {
        let c = Circle2::unit();
        let body = concentric(0.5);
        let state = poncelet_polygon(&c, &body, start(), 100, DEFAULT_CLOSURE_TOL).unwrap();
        let q = q_region(&state, &body).unwrap();
        // equilateral triangle with inradius 0.5: support is 0.5 at the
        // edge normals and 1 (circumradius) at the vertex directions
        for chord in &state.chords {
            assert_abs_diff_eq!(q.support(chord.normal), 0.5, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(q.support(0.0), 1.0, epsilon = 1e-9);
        for i in 0..360 {
            let t = TAU * i as f64 / 360.0;
            assert!(body.support(t) <= q.support(t) + 1e-12);
        }
    }

    #[test]
    fn q_region_intersection_recovers_disc() {
        let c = Circle2::unit();
        let body = concentric(0.5);
        let states: Vec<_> = (0..36)
            .map(|i| poncelet_polygon(&c, &body, c.point_at(TAU * i as f64 / 36.0), 100, DEFAULT_CLOSURE_TOL).unwrap())
            .collect();
        let q = q_region_of(&states, &body).unwrap();
        assert!(hausdorff_distance(&q, &body) < 5e-3);
    }
}
