//! Planar harnesses: bisector concurrency through a common point, the circle
//! `Σ_x` centred at that point, and the equal-angle criterion for reflection
//! symmetry.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::body::{maximize_periodic, select_oriented, unit, ConvexBody2, TangentPair};
use crate::geom2d::{angle_with, bisectors, Dir2, Line2, Point2, POINT_ON_LINE_TOL};
use crate::{Error, Result};

pub const DEFAULT_BLANCO_SAMPLES: usize = 360;
pub const DEFAULT_GARNACHAS_SAMPLES: usize = 64;
/// Half-length of the stretch of the symmetry line searched for exterior
/// viewpoints, measured from the foot of the perpendicular from the origin.
pub const GARNACHAS_WINDOW: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlancoSample {
    pub angle: f64,
    pub bisector_distance: f64,
    pub sigma_radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlancoReport {
    /// Largest distance from `p` to a bisector.
    pub defect: f64,
    pub samples: usize,
    /// `max − min` of the radii of the circles about `p` tangent to the
    /// first tangent line.
    pub sigma_radius_spread: f64,
    pub mean_sigma_radius: f64,
    /// Sup-distance between the support function and that of the circle
    /// about `p` with the mean radius.
    pub hausdorff_to_best_circle: f64,
    #[serde(skip)]
    pub per_sample: Vec<BlancoSample>,
}

impl BlancoReport {
    /// Hypothesis satisfied and body equal to the circle about `p`.
    pub fn conclusion(&self, tol: f64) -> bool {
        self.defect < tol && self.hausdorff_to_best_circle < tol
    }
}

fn check_unit_circle_point(x: Point2) -> Result<()> {
    let error = (x.norm() - 1.0).abs();
    if error > POINT_ON_LINE_TOL {
        return Err(Error::PointOffCircle { error });
    }
    Ok(())
}

fn check_contained(body: &ConvexBody2) -> Result<()> {
    let report = body.containment_check();
    if !report.inside_open_unit_disc {
        return Err(Error::Containment {
            margin: report.margin,
        });
    }
    Ok(())
}

/// Bisector of the tangent pair lying in the sector that contains the body.
fn sector_bisector(pair: &TangentPair, x: Point2) -> Result<Line2> {
    let (l1, l2) = pair.lines();
    let (b1, b2) = bisectors(&l1, &l2, x)?;
    let toward = pair
        .tangents
        .iter()
        .map(|t| {
            let d = t.point - x;
            d * (1.0 / d.norm())
        })
        .fold(Point2::ORIGIN, |acc, d| acc + d);
    let score = |b: &Line2| b.direction().vec().dot(toward).abs();
    Ok(if score(&b1) >= score(&b2) { b1 } else { b2 })
}

/// The bisector `l_x` of the two tangents from `x ∈ S¹`.
pub fn bisector_line(body: &ConvexBody2, x: Point2) -> Result<Line2> {
    check_contained(body)?;
    check_unit_circle_point(x)?;
    sector_bisector(&body.tangent_lines(x)?, x)
}

/// Samples `l_x` at `num_samples` uniform points of the unit circle.
pub fn blanco_defect(body: &ConvexBody2, p: Point2, num_samples: usize) -> Result<BlancoReport> {
    if num_samples == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    check_contained(body)?;
    let mut per_sample = Vec::with_capacity(num_samples);
    for j in 0..num_samples {
        let angle = TAU * j as f64 / num_samples as f64;
        let x = Point2::polar(1.0, angle);
        let pair = body.tangent_lines(x)?;
        let bisector = sector_bisector(&pair, x)?;
        let first = select_oriented(&pair, x);
        per_sample.push(BlancoSample {
            angle,
            bisector_distance: bisector.distance(p),
            sigma_radius: first.line.distance(p),
        });
    }
    let defect = per_sample.iter().map(|s| s.bisector_distance).fold(0.0, f64::max);
    let (lo, hi) = per_sample.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
        (lo.min(s.sigma_radius), hi.max(s.sigma_radius))
    });
    let mean = per_sample.iter().map(|s| s.sigma_radius).sum::<f64>() / num_samples as f64;
    let (_, hausdorff) = maximize_periodic(
        |t| (body.support(t) - unit(t).dot(p) - mean).abs(),
        body.scan_resolution(),
    );
    Ok(BlancoReport {
        defect,
        samples: num_samples,
        sigma_radius_spread: hi - lo,
        mean_sigma_radius: mean,
        hausdorff_to_best_circle: hausdorff,
        per_sample,
    })
}

/// Numerical form of the planar characterization: every bisector passes
/// through `p` and the body is the circle about `p`.
pub fn blanco_conclusion_check(body: &ConvexBody2, p: Point2, tol: f64) -> Result<bool> {
    Ok(blanco_defect(body, p, DEFAULT_BLANCO_SAMPLES)?.conclusion(tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GarnachasReport {
    /// Largest `|angle(L₁, Σ) − angle(L₂, Σ)|` over viewpoints on `Σ`.
    pub angle_defect: f64,
    /// Sup-distance between the support functions of the body and of its
    /// mirror image in `Σ`.
    pub symmetry_defect: f64,
    pub samples: usize,
}

/// Support function of the mirror image of `body` in `mirror`:
/// `h_S(u) = h(Ru) + 2s⟨u, n⟩` with `R` the linear reflection.
pub fn reflected_support(body: &ConvexBody2, mirror: &Line2, theta: f64) -> f64 {
    let beta = mirror.normal().angle();
    body.support(2.0 * beta + PI - theta) + 2.0 * mirror.offset() * (theta - beta).cos()
}

/// Tangent pairs from points of `sigma` outside the body, compared by the
/// angles they make with `sigma`.
pub fn equal_angle_defect(
    body: &ConvexBody2,
    sigma: &Line2,
    num_samples: usize,
) -> Result<GarnachasReport> {
    if num_samples < 2 {
        return Err(Error::InvalidArgument("need at least two samples".into()));
    }
    let n = sigma.normal();
    let s = sigma.offset();
    let beta = n.angle();
    if body.support(beta) - s <= 0.0 || body.support(beta + PI) + s <= 0.0 {
        return Err(Error::InvalidArgument("symmetry line does not cross the body".into()));
    }
    let d = sigma.direction();
    let anchor = sigma.anchor();
    let t_max = body.support(d.angle()) - d.vec().dot(anchor);
    let t_min = -body.support(d.angle() + PI) - d.vec().dot(anchor);
    let gap = 0.01 * (t_max - t_min);

    let mut ranges = Vec::new();
    if t_max + gap < GARNACHAS_WINDOW {
        ranges.push((t_max + gap, GARNACHAS_WINDOW));
    }
    if t_min - gap > -GARNACHAS_WINDOW {
        ranges.push((t_min - gap, -GARNACHAS_WINDOW));
    }
    if ranges.is_empty() {
        return Err(Error::NoExteriorPoints);
    }
    let per_range = num_samples.div_ceil(ranges.len()).max(2);
    let mut angle_defect: f64 = 0.0;
    let mut samples = 0;
    for (near, far) in ranges {
        for i in 0..per_range {
            let t = near + (far - near) * i as f64 / (per_range - 1) as f64;
            let z = anchor + d.vec() * t;
            let (l1, l2) = body.tangent_lines(z)?.lines();
            angle_defect = angle_defect.max((angle_with(&l1, sigma) - angle_with(&l2, sigma)).abs());
            samples += 1;
        }
    }
    let (_, symmetry_defect) = maximize_periodic(
        |t| (body.support(t) - reflected_support(body, sigma, t)).abs(),
        body.scan_resolution(),
    );
    Ok(GarnachasReport {
        angle_defect,
        symmetry_defect,
        samples,
    })
}

/// Line through `p` at direction angle `angle`.
pub fn line_through(p: Point2, angle: f64) -> Line2 {
    Line2::through(p, Dir2::from_angle(angle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_6;

    fn disc(x: f64, y: f64, r: f64) -> ConvexBody2 {
        ConvexBody2::disc(Point2::new(x, y), r).unwrap()
    }

    /// Tangents from `x` to the axis-aligned ellipse `(a cos t, b sin t)`,
    /// solved on the parameter: `A cos t + B sin t = 1` with
    /// `A = x₁/a`, `B = x₂/b`.
    fn ellipse_bisector_distance(a: f64, b: f64, x: Point2, p: Point2) -> f64 {
        let (ca, cb) = (x.x / a, x.y / b);
        let rho = ca.hypot(cb);
        let base = cb.atan2(ca);
        let spread = (1.0 / rho).acos();
        let dirs: Vec<Point2> = [base - spread, base + spread]
            .iter()
            .map(|t| {
                let q = Point2::new(a * t.cos(), b * t.sin());
                (q - x) * (1.0 / (q - x).norm())
            })
            .collect();
        let bis = (dirs[0] + dirs[1]) * 0.5;
        let bis = bis * (1.0 / bis.norm());
        (p - x).cross(bis).abs()
    }

    #[test]
    fn bisector_of_disc_passes_through_center() {
        let body = disc(0.2, -0.1, 0.3);
        for i in 0..12 {
            let x = Point2::polar(1.0, i as f64 * 0.5);
            let l = bisector_line(&body, x).unwrap();
            assert!(l.distance(Point2::new(0.2, -0.1)) < 1e-12);
            assert!(l.distance(x) < 1e-10);
        }
        let l = bisector_line(&disc(0.0, 0.0, 0.4), Point2::new(1.0, 0.0)).unwrap();
        assert!(l.approx_eq(&Line2::new(Dir2::from_angle(PI / 2.0), 0.0), 1e-12));
    }

    #[test]
    fn bisector_line_preconditions() {
        assert!(matches!(
            bisector_line(&disc(0.0, 0.0, 1.0), Point2::new(1.0, 0.0)),
            Err(Error::Containment { .. })
        ));
        assert!(matches!(
            bisector_line(&disc(0.0, 0.0, 0.5), Point2::new(0.9, 0.0)),
            Err(Error::PointOffCircle { .. })
        ));
    }

    #[test]
    fn blanco_disc_is_exact() {
        let p = Point2::new(0.1, -0.05);
        let report = blanco_defect(&disc(p.x, p.y, 0.3), p, 360).unwrap();
        assert!(report.defect < 1e-9);
        assert!(report.hausdorff_to_best_circle < 1e-9);
        assert!(report.sigma_radius_spread < 1e-10);
        assert!(report.conclusion(1e-8));
    }

    #[test]
    fn blanco_ellipse_matches_brute_force() {
        let body = ConvexBody2::ellipse(Point2::ORIGIN, 0.5, 0.3, 0.0).unwrap();
        let report = blanco_defect(&body, Point2::ORIGIN, 360).unwrap();
        let oracle = (0..360)
            .map(|j| {
                let x = Point2::polar(1.0, TAU * j as f64 / 360.0);
                ellipse_bisector_distance(0.5, 0.3, x, Point2::ORIGIN)
            })
            .fold(0.0, f64::max);
        assert_abs_diff_eq!(report.defect, oracle, epsilon = 1e-10);
        assert!(report.defect > 0.01);
        assert!(!report.conclusion(1e-8));
        for s in &report.per_sample {
            let axis_point = (0..4).any(|q| (s.angle - q as f64 * PI / 2.0).abs() < 1e-12);
            if axis_point {
                assert!(s.bisector_distance < 1e-10);
            }
        }
    }

    #[test]
    fn blanco_offset_center_fails() {
        let body = disc(0.05, 0.0, 0.3);
        let report = blanco_defect(&body, Point2::ORIGIN, 360).unwrap();
        // the bisector is the line from x through the centre c, at distance
        // |x × c| / |x − c| from the origin
        let c = Point2::new(0.05, 0.0);
        let oracle = (0..360)
            .map(|j| {
                let x = Point2::polar(1.0, TAU * j as f64 / 360.0);
                x.cross(c).abs() / x.distance(c)
            })
            .fold(0.0, f64::max);
        assert_abs_diff_eq!(report.defect, oracle, epsilon = 1e-12);
        assert!(!blanco_conclusion_check(&body, Point2::ORIGIN, 1e-8).unwrap());
        assert!(blanco_conclusion_check(&body, Point2::new(0.05, 0.0), 1e-8).unwrap());
    }

    #[test]
    fn blanco_is_rotation_equivariant() {
        let body = ConvexBody2::ellipse(Point2::new(0.1, 0.05), 0.45, 0.25, 0.3).unwrap();
        let p = Point2::new(0.05, 0.02);
        let base = blanco_defect(&body, p, 360).unwrap();
        for steps in [1, 37, 90] {
            let angle = TAU * steps as f64 / 360.0;
            let rotated = blanco_defect(&body.rotated(angle), p.rotate(angle), 360).unwrap();
            assert_abs_diff_eq!(base.defect, rotated.defect, epsilon = 1e-10);
        }
    }

    #[test]
    fn blanco_rejects_bodies_touching_the_circle() {
        assert!(matches!(
            blanco_defect(&disc(0.5, 0.0, 0.5), Point2::new(0.5, 0.0), 36),
            Err(Error::Containment { .. })
        ));
    }

    #[test]
    fn garnachas_examples() {
        let x_axis = line_through(Point2::ORIGIN, 0.0);
        let r = equal_angle_defect(&disc(0.1, 0.0, 0.3), &x_axis, 64).unwrap();
        assert!(r.angle_defect < 1e-10 && r.symmetry_defect < 1e-10);

        let tilted = ConvexBody2::ellipse(Point2::ORIGIN, 0.5, 0.3, FRAC_PI_6).unwrap();
        let r = equal_angle_defect(&tilted, &x_axis, 64).unwrap();
        assert!(r.angle_defect > 0.01 && r.symmetry_defect > 0.01);

        let aligned = ConvexBody2::ellipse(Point2::ORIGIN, 0.5, 0.3, 0.0).unwrap();
        let r = equal_angle_defect(&aligned, &x_axis, 64).unwrap();
        assert!(r.angle_defect < 1e-9 && r.symmetry_defect < 1e-9);
    }

    #[test]
    fn garnachas_preconditions() {
        let off = line_through(Point2::new(0.0, 2.0), 0.0);
        assert!(equal_angle_defect(&disc(0.0, 0.0, 0.3), &off, 16).is_err());
        let big = disc(0.0, 0.0, 5.0);
        assert!(matches!(
            equal_angle_defect(&big, &line_through(Point2::ORIGIN, 0.0), 16),
            Err(Error::NoExteriorPoints)
        ));
    }

    #[test]
    fn reflected_support_of_disc() {
        let body = disc(0.2, 0.3, 0.1);
        let mirror = line_through(Point2::new(0.0, 0.1), 0.0);
        // mirror image is the disc about (0.2, −0.1)
        let image = disc(0.2, -0.1, 0.1);
        for i in 0..16 {
            let t = i as f64 * 0.4;
            assert_abs_diff_eq!(reflected_support(&body, &mirror, t), image.support(t), epsilon = 1e-14);
        }
    }
}
