//! Planar convex bodies represented by their support function
//! `h(θ) = max_{y∈M} ⟨u(θ), y⟩`, with `u(θ) = (cos θ, sin θ)`.
//!
//! Tangency from an exterior point `x` reduces to the roots of
//! `g(θ) = h(θ) − ⟨u(θ), x⟩`, found by a grid scan followed by bisection.

use std::f64::consts::{PI, TAU};

use crate::geom2d::{Circle2, Line2, Point2};
use crate::{Error, Result};

/// Minimum number of samples in a support table.
pub const MIN_TABLE_SAMPLES: usize = 720;
/// Grid resolution for scans over analytic bodies.
pub const SCAN_SAMPLES: usize = 720;
/// Margin separating interior, boundary and exterior points.
pub const EXTERIOR_MARGIN: f64 = 1e-9;
/// Two tangency normals closer than this are treated as one (boundary point).
pub const ROOT_MERGE_TOL: f64 = 1e-9;

/// Unit vector at angle `theta`.
#[inline]
pub fn unit(theta: f64) -> Point2 {
    let (s, c) = theta.sin_cos();
    Point2::new(c, s)
}

#[derive(Debug, Clone, PartialEq)]
pub enum BodyKind {
    Disc {
        center: Point2,
        radius: f64,
    },
    Ellipse {
        center: Point2,
        semi_major: f64,
        semi_minor: f64,
        rotation: f64,
    },
    Generic(SupportTable),
}

/// Strictly convex planar body.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexBody2 {
    kind: BodyKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContainmentReport {
    pub inside_open_unit_disc: bool,
    /// `1 − max_θ ‖b(θ)‖`, or the analogous margin against another circle.
    pub margin: f64,
}

/// A supporting line through an exterior point, with its outer normal angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tangent {
    pub line: Line2,
    /// Outer normal angle θ: the body lies in `⟨u(θ), y⟩ ≤ h(θ)`.
    pub normal: f64,
    pub point: Point2,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPair {
    /// Sorted by normal angle, both normals in `[−π, π)`.
    pub tangents: [Tangent; 2],
}

impl TangentPair {
    pub fn lines(&self) -> (Line2, Line2) {
        (self.tangents[0].line, self.tangents[1].line)
    }

    pub fn normals(&self) -> (f64, f64) {
        (self.tangents[0].normal, self.tangents[1].normal)
    }
}

impl ConvexBody2 {
    pub fn disc(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) || !center.is_finite() {
            return Err(Error::InvalidBody(format!("disc radius {radius}")));
        }
        Ok(Self {
            kind: BodyKind::Disc { center, radius },
        })
    }

    pub fn ellipse(center: Point2, semi_major: f64, semi_minor: f64, rotation: f64) -> Result<Self> {
        let ok = |v: f64| v > 0.0 && v.is_finite();
        if !ok(semi_major) || !ok(semi_minor) || !rotation.is_finite() || !center.is_finite() {
            return Err(Error::InvalidBody(format!(
                "ellipse semiaxes ({semi_major}, {semi_minor}), rotation {rotation}"
            )));
        }
        Ok(Self {
            kind: BodyKind::Ellipse {
                center,
                semi_major,
                semi_minor,
                rotation,
            },
        })
    }

    /// Body from support values at `N ≥ 720` uniformly spaced angles
    /// `θᵢ = 2πi/N`.
    pub fn from_support_table(values: Vec<f64>) -> Result<Self> {
        Ok(Self {
            kind: BodyKind::Generic(SupportTable::new(values)?),
        })
    }

    /// Tabulates another body's support function.
    pub fn tabulate(other: &ConvexBody2, samples: usize) -> Result<Self> {
        let values = (0..samples)
            .map(|i| other.support(TAU * i as f64 / samples as f64))
            .collect();
        Self::from_support_table(values)
    }

    pub fn kind(&self) -> &BodyKind {
        &self.kind
    }

    /// Number of grid samples used for scans over this body.
    pub fn scan_resolution(&self) -> usize {
        match &self.kind {
            BodyKind::Generic(t) => t.len().max(SCAN_SAMPLES),
            _ => SCAN_SAMPLES,
        }
    }

    pub fn support(&self, theta: f64) -> f64 {
        match &self.kind {
            BodyKind::Disc { center, radius } => unit(theta).dot(*center) + radius,
            BodyKind::Ellipse {
                center,
                semi_major: a,
                semi_minor: b,
                rotation,
            } => {
                let (s, c) = (theta - rotation).sin_cos();
                unit(theta).dot(*center) + (a * a * c * c + b * b * s * s).sqrt()
            }
            BodyKind::Generic(t) => t.value(theta),
        }
    }

    /// Derivative `h′(θ)`.
    pub fn support_derivative(&self, theta: f64) -> f64 {
        match &self.kind {
            BodyKind::Disc { center, .. } => unit(theta).perp().dot(*center),
            BodyKind::Ellipse {
                center,
                semi_major: a,
                semi_minor: b,
                rotation,
            } => {
                let (s, c) = (theta - rotation).sin_cos();
                let root = (a * a * c * c + b * b * s * s).sqrt();
                unit(theta).perp().dot(*center) + (b * b - a * a) * s * c / root
            }
            BodyKind::Generic(t) => t.derivative(theta),
        }
    }

    /// Boundary point touched by the supporting line with normal `u(θ)`,
    /// `b(θ) = h(θ)u(θ) + h′(θ)u⊥(θ)`.
    pub fn support_point(&self, theta: f64) -> Point2 {
        match &self.kind {
            BodyKind::Disc { center, radius } => *center + unit(theta) * *radius,
            BodyKind::Ellipse {
                center,
                semi_major: a,
                semi_minor: b,
                rotation,
            } => {
                let (s, c) = (theta - rotation).sin_cos();
                let root = (a * a * c * c + b * b * s * s).sqrt();
                let local = Point2::new(a * a * c / root, b * b * s / root);
                *center + local.rotate(*rotation)
            }
            BodyKind::Generic(_) => {
                let u = unit(theta);
                u * self.support(theta) + u.perp() * self.support_derivative(theta)
            }
        }
    }

    pub fn width(&self, theta: f64) -> f64 {
        self.support(theta) + self.support(theta + PI)
    }

    /// `max − min` of the width over `samples` directions in `[0, π)`.
    pub fn constant_width_defect(&self, samples: usize) -> f64 {
        let (lo, hi) = (0..samples)
            .map(|i| self.width(PI * i as f64 / samples as f64))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), w| {
                (lo.min(w), hi.max(w))
            });
        hi - lo
    }

    pub fn is_constant_width(&self, tol: f64) -> bool {
        self.constant_width_defect(self.scan_resolution()) <= tol
    }

    /// `max_θ |h_c(θ) − h_c(θ+π)|` for the body translated by `−c`.
    pub fn central_symmetry_defect(&self, c: Point2) -> f64 {
        let f = |theta: f64| {
            (self.support(theta) - self.support(theta + PI) - 2.0 * unit(theta).dot(c)).abs()
        };
        maximize_periodic(f, self.scan_resolution()).1
    }

    pub fn containment_check(&self) -> ContainmentReport {
        let margin = self.containment_in(&Circle2::unit());
        ContainmentReport {
            inside_open_unit_disc: margin > 0.0,
            margin,
        }
    }

    /// `R − max_θ ‖b(θ) − c‖` for the circle `(c, R)`.
    pub fn containment_in(&self, circle: &Circle2) -> f64 {
        let farthest = match &self.kind {
            BodyKind::Disc { center, radius } => center.distance(circle.center) + radius,
            _ => {
                let f = |theta: f64| self.support_point(theta).distance(circle.center);
                maximize_periodic(f, self.scan_resolution().max(2048)).1
            }
        };
        circle.radius - farthest
    }

    /// Both supporting lines through the exterior point `x`.
    pub fn tangent_lines(&self, x: Point2) -> Result<TangentPair> {
        let n = self.scan_resolution();
        let g = |theta: f64| self.support(theta) - unit(theta).dot(x);
        let step = TAU / n as f64;
        let grid: Vec<f64> = (0..n).map(|i| -PI + step * i as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&t| g(t)).collect();

        let mut brackets = Vec::with_capacity(2);
        for i in 0..n {
            let j = (i + 1) % n;
            if (values[i] < 0.0) != (values[j] < 0.0) {
                brackets.push((grid[i], grid[i] + step, values[i] < 0.0));
            }
        }

        if brackets.is_empty() {
            // the negative region may fall between grid nodes when x is
            // close to the boundary
            let (theta, min) = minimize_periodic(g, n);
            if min > EXTERIOR_MARGIN {
                return Err(Error::InteriorPoint { x: x.x, y: x.y });
            }
            if min > -EXTERIOR_MARGIN {
                return Err(Error::TangentDegenerate);
            }
            brackets.push((theta - step, theta, false));
            brackets.push((theta, theta + step, true));
        }
        if brackets.len() != 2 {
            return Err(Error::ConvexityViolation {
                roots: brackets.len(),
            });
        }

        let mut roots = [0.0; 2];
        for (root, &(lo, hi, starts_negative)) in roots.iter_mut().zip(&brackets) {
            *root = wrap_angle(bisect_sign_change(g, lo, hi, starts_negative));
        }
        if roots[0] > roots[1] {
            roots.swap(0, 1);
        }
        if crate::geom2d::angular_distance(roots[0], roots[1]) < ROOT_MERGE_TOL {
            return Err(Error::TangentDegenerate);
        }
        let tangents = roots.map(|theta| Tangent {
            line: Line2::with_normal_through(crate::geom2d::Dir2::from_angle(theta), x),
            normal: theta,
            point: self.support_point(theta),
        });
        Ok(TangentPair { tangents })
    }

    /// The tangent through `x` traversed with the body on its left: the
    /// travel direction `d` toward the tangency point and the inner normal
    /// `−u(θ)` form a right-handed frame.
    pub fn oriented_tangent(&self, x: Point2) -> Result<Tangent> {
        let pair = self.tangent_lines(x)?;
        Ok(select_oriented(&pair, x))
    }

    pub fn translated(&self, v: Point2) -> Self {
        let kind = match &self.kind {
            BodyKind::Disc { center, radius } => BodyKind::Disc {
                center: *center + v,
                radius: *radius,
            },
            BodyKind::Ellipse {
                center,
                semi_major,
                semi_minor,
                rotation,
            } => BodyKind::Ellipse {
                center: *center + v,
                semi_major: *semi_major,
                semi_minor: *semi_minor,
                rotation: *rotation,
            },
            BodyKind::Generic(t) => BodyKind::Generic(t.map_samples(|theta, h| h + unit(theta).dot(v))),
        };
        Self { kind }
    }

    /// Rotation about the origin.
    pub fn rotated(&self, angle: f64) -> Self {
        let kind = match &self.kind {
            BodyKind::Disc { center, radius } => BodyKind::Disc {
                center: center.rotate(angle),
                radius: *radius,
            },
            BodyKind::Ellipse {
                center,
                semi_major,
                semi_minor,
                rotation,
            } => BodyKind::Ellipse {
                center: center.rotate(angle),
                semi_major: *semi_major,
                semi_minor: *semi_minor,
                rotation: rotation + angle,
            },
            BodyKind::Generic(t) => BodyKind::Generic(t.map_samples(|theta, _| t.value(theta - angle))),
        };
        Self { kind }
    }

    /// Boundary polyline through `b(θ)` at `samples` uniform normals.
    pub fn boundary(&self, samples: usize) -> Vec<Point2> {
        (0..samples)
            .map(|i| self.support_point(TAU * i as f64 / samples as f64))
            .collect()
    }
}

pub(crate) fn select_oriented(pair: &TangentPair, x: Point2) -> Tangent {
    // travel along u⊥(θ) gives det[d, −u] = 1, so pick the tangent whose
    // tangency point lies ahead of x in that direction
    let ahead = |t: &Tangent| unit(t.normal).perp().dot(t.point - x);
    let [a, b] = pair.tangents;
    if ahead(&a) >= ahead(&b) {
        a
    } else {
        b
    }
}

/// Sup-norm distance between support functions, which equals the Hausdorff
/// distance of the two bodies.
pub fn hausdorff_distance(a: &ConvexBody2, b: &ConvexBody2) -> f64 {
    let n = a.scan_resolution().max(b.scan_resolution()).max(2048);
    maximize_periodic(|t| (a.support(t) - b.support(t)).abs(), n).1
}

/// Wraps an angle into `[−π, π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    (theta + PI).rem_euclid(TAU) - PI
}

fn bisect_sign_change(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, lo_negative: bool) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (g(mid) < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if g(lo).abs() <= g(hi).abs() {
        lo
    } else {
        hi
    }
}

/// Grid scan followed by golden-section refinement of the best cell.
/// Returns `(argmax, max)`.
pub(crate) fn maximize_periodic(f: impl Fn(f64) -> f64, samples: usize) -> (f64, f64) {
    let (theta, value) = minimize_periodic(|t| -f(t), samples);
    (theta, -value)
}

/// Returns `(argmin, min)`.
pub(crate) fn minimize_periodic(f: impl Fn(f64) -> f64, samples: usize) -> (f64, f64) {
    let step = TAU / samples as f64;
    let (best_i, best) = (0..samples)
        .map(|i| (i, f(step * i as f64)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let center = step * best_i as f64;
    let (mut a, mut b) = (center - step, center + step);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..80 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let (t, v) = if fc < fd { (c, fc) } else { (d, fd) };
    if v < best {
        (t, v)
    } else {
        (center, best)
    }
}

/// Support values on a uniform angular grid, interpolated by a periodic
/// cubic spline.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportTable {
    values: Vec<f64>,
    second: Vec<f64>,
    step: f64,
}

impl SupportTable {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < MIN_TABLE_SAMPLES {
            return Err(Error::InvalidBody(format!(
                "support table needs at least {MIN_TABLE_SAMPLES} samples, got {n}"
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidBody("support table has non-finite values".into()));
        }
        let half = n / 2;
        if n.is_multiple_of(2) {
            if let Some(i) = (0..half).find(|&i| values[i] + values[i + half] <= 0.0) {
                return Err(Error::InvalidBody(format!("non-positive width at sample {i}")));
            }
        }
        let step = TAU / n as f64;
        // a sampled support function is convex iff consecutive supporting
        // lines turn left: h[i−1] + h[i+1] ≥ 2 cos(Δ) h[i]
        let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        let cos = step.cos();
        for i in 0..n {
            let turn = values[(i + n - 1) % n] + values[(i + 1) % n] - 2.0 * cos * values[i];
            if turn < -1e-12 * scale {
                return Err(Error::InvalidBody(format!(
                    "support table fails the turning test at sample {i} ({turn:e})"
                )));
            }
        }
        let second = periodic_spline_second_derivatives(&values, step);
        Ok(Self {
            values,
            second,
            step,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn locate(&self, theta: f64) -> (usize, usize, f64) {
        let n = self.values.len();
        let s = theta.rem_euclid(TAU) / self.step;
        let i = (s.floor() as usize).min(n - 1);
        let t = (s - i as f64) * self.step;
        (i, (i + 1) % n, t)
    }

    pub fn value(&self, theta: f64) -> f64 {
        let (i, j, t) = self.locate(theta);
        let h = self.step;
        let (a, b) = (h - t, t);
        let (yi, yj, mi, mj) = (self.values[i], self.values[j], self.second[i], self.second[j]);
        mi * a * a * a / (6.0 * h)
            + mj * b * b * b / (6.0 * h)
            + (yi / h - mi * h / 6.0) * a
            + (yj / h - mj * h / 6.0) * b
    }

    pub fn derivative(&self, theta: f64) -> f64 {
        let (i, j, t) = self.locate(theta);
        let h = self.step;
        let (a, b) = (h - t, t);
        let (yi, yj, mi, mj) = (self.values[i], self.values[j], self.second[i], self.second[j]);
        -mi * a * a / (2.0 * h) + mj * b * b / (2.0 * h) - (yi / h - mi * h / 6.0)
            + (yj / h - mj * h / 6.0)
    }

    fn map_samples(&self, f: impl Fn(f64, f64) -> f64) -> Self {
        let values: Vec<f64> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &h)| f(self.step * i as f64, h))
            .collect();
        let second = periodic_spline_second_derivatives(&values, self.step);
        Self {
            values,
            second,
            step: self.step,
        }
    }
}

/// Solves `M[i−1] + 4M[i] + M[i+1] = 6(y[i+1] − 2y[i] + y[i−1])/Δ²` on a
/// cycle, by the Sherman–Morrison reduction to a tridiagonal system.
fn periodic_spline_second_derivatives(y: &[f64], step: f64) -> Vec<f64> {
    let n = y.len();
    let rhs: Vec<f64> = (0..n)
        .map(|i| 6.0 * (y[(i + 1) % n] - 2.0 * y[i] + y[(i + n - 1) % n]) / (step * step))
        .collect();
    // A = T + w vᵀ with corners folded into the diagonal
    let gamma = -4.0;
    let mut diag = vec![4.0; n];
    diag[0] -= gamma;
    diag[n - 1] -= 1.0 / gamma;
    let solve = |d: &[f64], r: &[f64]| -> Vec<f64> {
        let mut c = vec![0.0; n];
        let mut x = vec![0.0; n];
        c[0] = 1.0 / d[0];
        x[0] = r[0] / d[0];
        for i in 1..n {
            let m = d[i] - c[i - 1];
            c[i] = 1.0 / m;
            x[i] = (r[i] - x[i - 1]) / m;
        }
        for i in (0..n - 1).rev() {
            x[i] -= c[i] * x[i + 1];
        }
        x
    };
    let x = solve(&diag, &rhs);
    let mut w = vec![0.0; n];
    w[0] = gamma;
    w[n - 1] = 1.0;
    let z = solve(&diag, &w);
    let factor = (x[0] + x[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
    x.iter().zip(&z).map(|(xi, zi)| xi - factor * zi).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn disc(x: f64, y: f64, r: f64) -> ConvexBody2 {
        ConvexBody2::disc(Point2::new(x, y), r).unwrap()
    }

    fn ellipse(a: f64, b: f64, phi: f64) -> ConvexBody2 {
        ConvexBody2::ellipse(Point2::ORIGIN, a, b, phi).unwrap()
    }

    #[test]
    fn support_examples() {
        for t in [0.0, 1.0, -2.5] {
            assert_abs_diff_eq!(disc(0.0, 0.0, 0.5).support(t), 0.5, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(disc(0.2, 0.0, 0.3).support(0.0), 0.5, epsilon = 1e-15);
        let e = ellipse(0.5, 0.3, 0.0);
        assert_abs_diff_eq!(e.support(0.0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(e.support(FRAC_PI_2), 0.3, epsilon = 1e-15);
    }

    #[test]
    fn support_point_examples() {
        let p = disc(0.0, 0.0, 0.5).support_point(0.0);
        assert_abs_diff_eq!(p.x, 0.5);
        assert_abs_diff_eq!(p.y, 0.0);
        let p = disc(0.2, 0.0, 0.3).support_point(FRAC_PI_2);
        assert_abs_diff_eq!(p.x, 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.3, epsilon = 1e-15);

        let e = ellipse(0.5, 0.3, 0.0);
        let theta = PI / 4.0;
        let p = e.support_point(theta);
        assert!((unit(theta).dot(p) - e.support(theta)).abs() < 1e-10);
        assert!(((p.x / 0.5).powi(2) + (p.y / 0.3).powi(2) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn support_point_matches_derivative_formula() {
        let e = ConvexBody2::ellipse(Point2::new(0.1, -0.2), 0.4, 0.25, 0.7).unwrap();
        for i in 0..32 {
            let t = i as f64 * 0.2;
            let u = unit(t);
            let b = u * e.support(t) + u.perp() * e.support_derivative(t);
            assert!(b.distance(e.support_point(t)) < 1e-14);
            // central difference for h′
            let eps = 1e-6;
            let fd = (e.support(t + eps) - e.support(t - eps)) / (2.0 * eps);
            assert!((fd - e.support_derivative(t)).abs() < 1e-8);
        }
    }

    #[test]
    fn tangent_lines_disc() {
        let pair = disc(0.0, 0.0, 0.5).tangent_lines(Point2::new(1.0, 0.0)).unwrap();
        let (t1, t2) = pair.normals();
        assert_abs_diff_eq!(t1, -PI / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t2, PI / 3.0, epsilon = 1e-12);
        for t in pair.tangents {
            assert_abs_diff_eq!(t.line.offset(), 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn tangent_half_aperture_is_arcsin() {
        // right triangle apex–center–tangency: sin(half aperture) = r/d
        let (r, d) = (0.3, 0.85);
        let x = Point2::polar(d, 2.2);
        let pair = disc(0.0, 0.0, r).tangent_lines(x).unwrap();
        let (l1, l2) = pair.lines();
        let aperture = crate::geom2d::angle_with(&l1, &l2);
        assert_abs_diff_eq!(aperture / 2.0, (r / d).asin(), epsilon = 1e-11);
    }

    #[test]
    fn tangent_lines_errors() {
        let d = disc(0.0, 0.0, 0.5);
        assert!(matches!(
            d.tangent_lines(Point2::new(0.1, 0.2)),
            Err(Error::InteriorPoint { .. })
        ));
        assert!(matches!(
            d.tangent_lines(Point2::new(0.5, 0.0)),
            Err(Error::TangentDegenerate)
        ));
    }

    #[test]
    fn tangent_lines_near_boundary() {
        let d = disc(0.0, 0.0, 0.5);
        let pair = d.tangent_lines(Point2::new(0.0, 0.5 + 1e-6)).unwrap();
        for t in pair.tangents {
            assert!(t.line.distance(Point2::new(0.0, 0.5 + 1e-6)) < 1e-12);
        }
    }

    #[test]
    fn oriented_tangent_is_counterclockwise() {
        let d = disc(0.0, 0.0, 0.5);
        let circle = Circle2::unit();
        let x = Point2::new(1.0, 0.0);
        let t = d.oriented_tangent(x).unwrap();
        let dir = t.point - x;
        assert!(dir.cross(-unit(t.normal)) > 0.0);
        let y = crate::geom2d::second_intersection(&circle, x, &t.line).unwrap();
        assert_abs_diff_eq!(y.point.angle(), 2.0 * PI / 3.0, epsilon = 1e-12);

        let x = Point2::new(-1.0, 0.0);
        let t = d.oriented_tangent(x).unwrap();
        let y = crate::geom2d::second_intersection(&circle, x, &t.line).unwrap();
        assert_abs_diff_eq!(
            wrap_angle(y.point.angle()),
            wrap_angle(2.0 * PI / 3.0 + PI),
            epsilon = 1e-12
        );
    }

    #[test]
    fn oriented_tangent_never_retraces() {
        let body = ConvexBody2::ellipse(Point2::new(0.1, 0.05), 0.4, 0.2, 0.3).unwrap();
        let circle = Circle2::unit();
        for i in 0..12 {
            let x = circle.point_at(i as f64 * 0.5);
            let t = body.oriented_tangent(x).unwrap();
            let y = crate::geom2d::second_intersection(&circle, x, &t.line)
                .unwrap()
                .point;
            let back = body.oriented_tangent(y).unwrap();
            assert!(!back.line.approx_eq(&t.line, 1e-9));
        }
    }

    #[test]
    fn width_examples() {
        assert_abs_diff_eq!(disc(0.1, 0.2, 0.3).width(0.7), 0.6, epsilon = 1e-15);
        let e = ellipse(0.5, 0.3, 0.0);
        assert_abs_diff_eq!(e.width(0.0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(e.width(FRAC_PI_2), 0.6, epsilon = 1e-15);
        assert!(disc(0.1, 0.2, 0.3).is_constant_width(1e-9));
        assert!(!e.is_constant_width(1e-9));
    }

    #[test]
    fn central_symmetry_examples() {
        let d = disc(0.2, 0.0, 0.3);
        assert!(d.central_symmetry_defect(Point2::new(0.2, 0.0)) < 1e-15);
        assert_abs_diff_eq!(d.central_symmetry_defect(Point2::ORIGIN), 0.4, epsilon = 1e-12);
        let e = ConvexBody2::ellipse(Point2::new(-0.1, 0.3), 0.4, 0.2, 1.0).unwrap();
        assert!(e.central_symmetry_defect(Point2::new(-0.1, 0.3)) < 1e-15);
    }

    #[test]
    fn containment_examples() {
        let r = disc(0.0, 0.0, 0.5).containment_check();
        assert!(r.inside_open_unit_disc);
        assert_abs_diff_eq!(r.margin, 0.5);
        let r = disc(0.6, 0.0, 0.5).containment_check();
        assert!(!r.inside_open_unit_disc);
        assert_abs_diff_eq!(r.margin, -0.1, epsilon = 1e-15);
        let r = disc(0.0, 0.0, 1.0).containment_check();
        assert!(!r.inside_open_unit_disc);
        assert_eq!(r.margin, 0.0);
        // ellipse farthest point is the end of its major axis
        let r = ConvexBody2::ellipse(Point2::new(0.2, 0.0), 0.5, 0.3, 0.0)
            .unwrap()
            .containment_check();
        assert_abs_diff_eq!(r.margin, 0.3, epsilon = 1e-12);
    }

    #[test]
    fn table_validation() {
        assert!(ConvexBody2::from_support_table(vec![0.5; 100]).is_err());
        assert!(ConvexBody2::from_support_table(vec![0.5; 720]).is_ok());
        let mut dented = vec![0.5; 720];
        dented[10] = 0.51;
        assert!(ConvexBody2::from_support_table(dented).is_err());
        assert!(ConvexBody2::from_support_table(vec![-0.5; 720]).is_err());
    }

    #[test]
    fn tabulated_ellipse_matches_analytic() {
        let e = ConvexBody2::ellipse(Point2::new(0.1, -0.1), 0.45, 0.3, 0.4).unwrap();
        let t = ConvexBody2::tabulate(&e, 1440).unwrap();
        assert!(hausdorff_distance(&e, &t) < 1e-9);
        for i in 0..50 {
            let theta = 0.123 * i as f64;
            assert!(t.support_point(theta).distance(e.support_point(theta)) < 1e-6);
        }
        let x = Point2::new(0.9, 0.3);
        let (a, b) = (e.tangent_lines(x).unwrap(), t.tangent_lines(x).unwrap());
        assert!((a.normals().0 - b.normals().0).abs() < 1e-8);
        assert!((a.normals().1 - b.normals().1).abs() < 1e-8);
    }

    #[test]
    fn tabulated_support_is_sublinear() {
        let e = ConvexBody2::ellipse(Point2::new(0.05, 0.1), 0.4, 0.25, 1.2).unwrap();
        let t = ConvexBody2::tabulate(&e, 720).unwrap();
        let pts = t.boundary(720);
        for i in 0..720 {
            let theta = TAU * i as f64 / 720.0;
            let h = t.support(theta);
            let worst = pts.iter().map(|p| unit(theta).dot(*p)).fold(f64::MIN, f64::max);
            assert!(worst <= h + 1e-9, "sample {i}: {worst} > {h}");
        }
    }

    fn body() -> impl Strategy<Value = ConvexBody2> {
        prop_oneof![
            (-0.3..0.3f64, -0.3..0.3f64, 0.05..0.5f64).prop_map(|(x, y, r)| disc(x, y, r)),
            (-0.2..0.2f64, -0.2..0.2f64, 0.1..0.5f64, 0.3..1.0f64, 0.0..PI).prop_map(
                |(x, y, a, ratio, phi)| ConvexBody2::ellipse(Point2::new(x, y), a, a * ratio, phi)
                    .unwrap()
            ),
        ]
    }

    proptest! {
        #[test]
        fn tangents_pass_through_and_support(b in body(), angle in 0.0..TAU, dist in 1.05..3.0f64) {
            let x = Point2::polar(dist, angle);
            let pair = b.tangent_lines(x).unwrap();
            let pts = b.boundary(720);
            for t in pair.tangents {
                prop_assert!(t.line.distance(x) < 1e-9);
                let u = unit(t.normal);
                let s = u.dot(x);
                let worst = pts.iter().map(|p| u.dot(*p) - s).fold(f64::MIN, f64::max);
                prop_assert!(worst <= 1e-8);
                prop_assert!((b.support(t.normal) - s).abs() < 1e-11);
            }
        }

        #[test]
        fn disc_tangent_bisector_hits_center(x in -0.3..0.3f64, y in -0.3..0.3f64, r in 0.05..0.5f64,
                                            angle in 0.0..TAU) {
            let d = disc(x, y, r);
            let apex = Point2::polar(1.0, angle);
            let pair = d.tangent_lines(apex).unwrap();
            let dirs = pair.tangents.map(|t| (t.point - apex) * (1.0 / (t.point - apex).norm()));
            let bis = crate::geom2d::Dir2::normalize(dirs[0] + dirs[1]).unwrap();
            let line = Line2::through(apex, bis);
            prop_assert!(line.distance(Point2::new(x, y)) < 1e-10);
        }

        #[test]
        fn symmetry_defect_translation_invariant(b in body(), vx in -0.5..0.5f64, vy in -0.5..0.5f64,
                                                 cx in -0.3..0.3f64, cy in -0.3..0.3f64) {
            let v = Point2::new(vx, vy);
            let c = Point2::new(cx, cy);
            let moved = b.translated(v);
            let d0 = b.central_symmetry_defect(c);
            let d1 = moved.central_symmetry_defect(c + v);
            prop_assert!((d0 - d1).abs() < 1e-12);
        }
    }
}
