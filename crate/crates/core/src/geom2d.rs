//! Planar primitives: points, unit directions, canonical lines, circles.
//!
//! Lines follow the `⟨u, x⟩ = s` convention with `s ≥ 0`; the open half-plane
//! `⟨u, x⟩ < s` is the side containing the origin.

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Point-on-line and point-on-circle tolerance.
pub const POINT_ON_LINE_TOL: f64 = 1e-9;
/// Unit-norm tolerance for [`Dir2`].
pub const UNIT_NORM_TOL: f64 = 1e-12;
/// Below this angle two lines through a common point are considered equal.
pub const COINCIDENT_ANGLE_TOL: f64 = 1e-12;

/// Tolerances used by the checked constructions of this module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub point_on_line: f64,
    pub unit_norm: f64,
    pub coincident_angle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            point_on_line: POINT_ON_LINE_TOL,
            unit_norm: UNIT_NORM_TOL,
            coincident_angle: COINCIDENT_ANGLE_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Point at angle `theta` on the circle of radius `r` about the origin.
    pub fn polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(r * c, r * s)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, `det[self other]`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn rotate(self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2::new(x, y)
    }
}

/// Unit vector in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dir2 {
    ux: f64,
    uy: f64,
}

impl Dir2 {
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { ux: c, uy: s }
    }

    /// Normalizes `v`; `None` for a zero or non-finite vector.
    pub fn normalize(v: Point2) -> Option<Self> {
        let n = v.norm();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(Self {
            ux: v.x / n,
            uy: v.y / n,
        })
    }

    /// Wraps components that are already unit length.
    pub fn try_new(ux: f64, uy: f64) -> Result<Self> {
        let n2 = ux * ux + uy * uy;
        if (n2 - 1.0).abs() > UNIT_NORM_TOL || !n2.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "direction ({ux}, {uy}) is not unit length"
            )));
        }
        Ok(Self { ux, uy })
    }

    pub fn ux(self) -> f64 {
        self.ux
    }

    pub fn uy(self) -> f64 {
        self.uy
    }

    pub fn vec(self) -> Point2 {
        Point2::new(self.ux, self.uy)
    }

    pub fn perp(self) -> Dir2 {
        Dir2 {
            ux: -self.uy,
            uy: self.ux,
        }
    }

    pub fn angle(self) -> f64 {
        self.uy.atan2(self.ux)
    }
}

impl Neg for Dir2 {
    type Output = Dir2;
    fn neg(self) -> Dir2 {
        Dir2 {
            ux: -self.ux,
            uy: -self.uy,
        }
    }
}

/// Line `{x : ⟨normal, x⟩ = offset}` in canonical form (`offset ≥ 0`).
///
/// Lines through the origin are further canonicalized so that the normal
/// points into the half-plane `ux > 0` (or `ux = 0, uy > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line2 {
    normal: Dir2,
    offset: f64,
}

impl Line2 {
    pub fn new(normal: Dir2, offset: f64) -> Self {
        let (normal, offset) = if offset < 0.0 {
            (-normal, -offset)
        } else if offset == 0.0 && (normal.ux < 0.0 || (normal.ux == 0.0 && normal.uy < 0.0)) {
            (-normal, 0.0)
        } else {
            (normal, offset)
        };
        Self { normal, offset }
    }

    /// Line through `point` with the given normal.
    pub fn with_normal_through(normal: Dir2, point: Point2) -> Self {
        Self::new(normal, normal.vec().dot(point))
    }

    /// Line through `point` parallel to `direction`.
    pub fn through(point: Point2, direction: Dir2) -> Self {
        Self::with_normal_through(direction.perp(), point)
    }

    pub fn through_points(a: Point2, b: Point2) -> Option<Self> {
        Dir2::normalize(b - a).map(|d| Self::through(a, d))
    }

    pub fn normal(&self) -> Dir2 {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Unit direction of the line (normal rotated clockwise).
    pub fn direction(&self) -> Dir2 {
        -self.normal.perp()
    }

    /// Foot of the perpendicular from the origin.
    pub fn anchor(&self) -> Point2 {
        self.normal.vec() * self.offset
    }

    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.normal.vec().dot(p) - self.offset
    }

    pub fn distance(&self, p: Point2) -> f64 {
        self.signed_distance(p).abs()
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        self.distance(p) <= tol
    }

    /// Equality up to tolerance, treating both normals of a line through the
    /// origin as the same line.
    pub fn approx_eq(&self, other: &Line2, tol: f64) -> bool {
        let same = (self.normal.vec() - other.normal.vec()).norm() <= tol
            && (self.offset - other.offset).abs() <= tol;
        let flipped = (self.normal.vec() + other.normal.vec()).norm() <= tol
            && (self.offset + other.offset).abs() <= tol;
        same || flipped
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle2 {
    pub center: Point2,
    pub radius: f64,
}

impl Circle2 {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "circle radius must be positive and finite, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn unit() -> Self {
        Self {
            center: Point2::ORIGIN,
            radius: 1.0,
        }
    }

    pub fn point_at(&self, theta: f64) -> Point2 {
        self.center + Point2::polar(self.radius, theta)
    }

    /// Polar angle of `p` seen from the center.
    pub fn angle_of(&self, p: Point2) -> f64 {
        (p - self.center).angle()
    }

    /// Radial projection of `p` onto the circle.
    pub fn project(&self, p: Point2) -> Point2 {
        let d = p - self.center;
        self.center + d * (self.radius / d.norm())
    }
}

/// Mirror image of `p` in `mirror`: `p − 2(⟨u,p⟩ − s)u`.
pub fn reflect_point(p: Point2, mirror: &Line2) -> Point2 {
    p - mirror.normal.vec() * (2.0 * mirror.signed_distance(p))
}

fn reflect_vector(v: Point2, mirror: &Line2) -> Point2 {
    let u = mirror.normal.vec();
    v - u * (2.0 * u.dot(v))
}

pub fn reflect_line(line: &Line2, mirror: &Line2) -> Line2 {
    let n = reflect_vector(line.normal.vec(), mirror);
    // reflection is an isometry, renormalizing only removes rounding drift
    let n = Dir2::normalize(n).expect("reflection of a unit vector is nonzero");
    Line2::with_normal_through(n, reflect_point(line.anchor(), mirror))
}

/// Angle between two lines, in `[0, π/2]`.
pub fn angle_with(a: &Line2, b: &Line2) -> f64 {
    let u = a.normal.vec();
    let v = b.normal.vec();
    u.cross(v).abs().atan2(u.dot(v).abs())
}

/// The two angle bisectors of `l1` and `l2` at `apex`.
///
/// Which one is meant by "the" bisector depends on context; callers pick one
/// using a reference point.
pub fn bisectors(l1: &Line2, l2: &Line2, apex: Point2) -> Result<(Line2, Line2)> {
    bisectors_with(l1, l2, apex, &Tolerances::default())
}

pub fn bisectors_with(
    l1: &Line2,
    l2: &Line2,
    apex: Point2,
    tol: &Tolerances,
) -> Result<(Line2, Line2)> {
    for l in [l1, l2] {
        let distance = l.distance(apex);
        if distance > tol.point_on_line {
            return Err(Error::PointOffLine { distance });
        }
    }
    let angle = angle_with(l1, l2);
    if angle < tol.coincident_angle {
        return Err(Error::CoincidentLines { angle });
    }
    let d1 = l1.direction().vec();
    let mut d2 = l2.direction().vec();
    if d1.dot(d2) < 0.0 {
        d2 = -d2;
    }
    // d1 and d2 are at most π/2 apart here, so their sum is well conditioned
    let a = Dir2::normalize(d1 + d2).expect("directions within a quarter turn");
    Ok((Line2::through(apex, a), Line2::through(apex, a.perp())))
}

/// Result of intersecting a line through a circle point with the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondIntersection {
    pub point: Point2,
    /// The line touches the circle at the given point.
    pub tangent: bool,
}

/// Other intersection of `line` with `circle`, given that `x` lies on both.
pub fn second_intersection(
    circle: &Circle2,
    x: Point2,
    line: &Line2,
) -> Result<SecondIntersection> {
    let radial = (x.distance(circle.center) - circle.radius).abs();
    if radial > POINT_ON_LINE_TOL {
        return Err(Error::PointOffCircle { error: radial });
    }
    let distance = line.distance(x);
    if distance > POINT_ON_LINE_TOL {
        return Err(Error::PointOffLine { distance });
    }
    Ok(second_intersection_unchecked(circle, x, line))
}

/// `|x + t d − c|² = R²` with `|x − c| = R` has roots `0` and `−2⟨d, x − c⟩`.
pub(crate) fn second_intersection_unchecked(
    circle: &Circle2,
    x: Point2,
    line: &Line2,
) -> SecondIntersection {
    let d = line.direction().vec();
    let t = -2.0 * d.dot(x - circle.center);
    if t.abs() <= POINT_ON_LINE_TOL * circle.radius {
        return SecondIntersection {
            point: x,
            tangent: true,
        };
    }
    SecondIntersection {
        point: circle.project(x + d * t),
        tangent: false,
    }
}

/// Counterclockwise arc angle from `from` to `to`, in `[0, 2π)`.
pub fn ccw_angle(from: f64, to: f64) -> f64 {
    (to - from).rem_euclid(std::f64::consts::TAU)
}

/// Shortest angular distance between two angles, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = ccw_angle(a, b);
    d.min(std::f64::consts::TAU - d)
}

/// True when `a` and `b` are perpendicular within `tol`.
pub fn is_perpendicular(a: &Line2, b: &Line2, tol: f64) -> bool {
    (angle_with(a, b) - FRAC_PI_2).abs() <= tol
}
