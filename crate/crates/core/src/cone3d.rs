//! Tangent cones of ellipsoids and the 3D harnesses built on them.
//!
//! For the quadric `q(y) = (y − c)ᵀA(y − c) ≤ 1` and an exterior vertex `x`
//! with `w = x − c`, the line `x + tv` meets the quadric where
//! `vᵀAv t² + 2vᵀAw t + q(x) − 1 = 0`. Its discriminant vanishes exactly on
//! the cone `vᵀBv = 0` with `B = (q(x) − 1)A − (Aw)(Aw)ᵀ`.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix2, Matrix3, SymmetricEigen, Vector2, Vector3};
use serde::{Deserialize, Serialize};

use crate::body::ConvexBody2;
use crate::geom2d::{Dir2, Line2, Point2};
use crate::harness2d::{blanco_defect, equal_angle_defect, BlancoReport, DEFAULT_GARNACHAS_SAMPLES};
use crate::{Error, Result};

pub type Vec3 = Vector3<f64>;
pub type Mat3 = Matrix3<f64>;

/// Required excess of `q(x)` over 1 for a viewpoint to count as exterior.
pub const EXTERIOR_MARGIN: f64 = 1e-9;
/// Relative size below which a cone eigenvalue counts as zero.
pub const DEGENERATE_EIGEN_TOL: f64 = 1e-12;
/// Viewpoints on a plane with `q(x)` below this are skipped.
pub const PLANE_EXCLUSION: f64 = 1.2;
pub const SECTION_SAMPLES: usize = 360;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadric3 {
    center: Vec3,
    form: Mat3,
}

impl Quadric3 {
    pub fn new(center: Vec3, form: Mat3) -> Result<Self> {
        let asym = (form - form.transpose()).amax();
        if asym > 1e-12 * form.amax().max(1.0) {
            return Err(Error::InvalidArgument(format!("quadric form is not symmetric ({asym:e})")));
        }
        let eig = SymmetricEigen::new(form);
        if eig.eigenvalues.iter().any(|&l| !(l > 0.0)) || !center.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "quadric form is not positive definite (eigenvalues {:?})",
                eig.eigenvalues.as_slice()
            )));
        }
        Ok(Self { center, form })
    }

    pub fn sphere(center: Vec3, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::InvalidArgument(format!("sphere radius {radius}")));
        }
        Self::new(center, Mat3::identity() / (radius * radius))
    }

    /// Ellipsoid whose `i`-th semiaxis has length `semiaxes[i]` along the
    /// `i`-th row of `rotation`.
    pub fn ellipsoid(center: Vec3, semiaxes: [f64; 3], rotation: Mat3) -> Result<Self> {
        let orth = (rotation * rotation.transpose() - Mat3::identity()).amax();
        if orth > 1e-9 {
            return Err(Error::InvalidArgument(format!("rotation is not orthogonal ({orth:e})")));
        }
        if semiaxes.iter().any(|&a| !(a > 0.0)) {
            return Err(Error::InvalidArgument(format!("semiaxes {semiaxes:?}")));
        }
        let diag = Mat3::from_diagonal(&Vec3::from_iterator(semiaxes.iter().map(|a| 1.0 / (a * a))));
        let form = rotation.transpose() * diag * rotation;
        Self::new(center, 0.5 * (form + form.transpose()))
    }

    pub fn axis_aligned(center: Vec3, semiaxes: [f64; 3]) -> Result<Self> {
        Self::ellipsoid(center, semiaxes, Mat3::identity())
    }

    pub fn center(&self) -> Vec3 {
        self.center
    }

    pub fn form(&self) -> &Mat3 {
        &self.form
    }

    /// `(y − c)ᵀA(y − c)`.
    pub fn value(&self, y: &Vec3) -> f64 {
        let w = y - self.center;
        w.dot(&(self.form * w))
    }

    /// Longest semiaxis.
    pub fn max_semiaxis(&self) -> f64 {
        let eig = SymmetricEigen::new(self.form);
        1.0 / eig.eigenvalues.min().sqrt()
    }

    /// Largest `‖y‖` over the body.
    pub fn max_norm(&self) -> f64 {
        // ‖c + w‖ ≤ ‖c‖ + ‖w‖ is tight only along c; refine over a
        // Fibonacci grid of directions mapped onto the boundary
        let eig = SymmetricEigen::new(self.form);
        let root_inv = eig.eigenvectors
            * Mat3::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l.sqrt()))
            * eig.eigenvectors.transpose();
        fibonacci_sphere(20_000)
            .iter()
            .map(|d| (self.center + root_inv * d).norm())
            .fold(0.0, f64::max)
    }

    /// Discriminant `(vᵀAw)² − vᵀAv (q(x) − 1)` of the line `x + tv`.
    pub fn line_discriminant(&self, x: &Vec3, v: &Vec3) -> f64 {
        let w = x - self.center;
        let av = self.form * v;
        let b = av.dot(&w);
        b * b - av.dot(v) * (self.value(x) - 1.0)
    }
}

/// Cone `{y : (y − x)ᵀB(y − x) = 0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeQuadratic {
    pub vertex: Vec3,
    pub form: Mat3,
}

/// Oriented plane `⟨normal, y⟩ = offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane3 {
    normal: Vec3,
    offset: f64,
}

impl Plane3 {
    pub fn new(normal: Vec3, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidArgument("plane normal must be nonzero".into()));
        }
        Ok(Self {
            normal: normal / n,
            offset: offset / n,
        })
    }

    pub fn through(point: &Vec3, normal: Vec3) -> Result<Self> {
        let n = normal.normalize();
        Self::new(n, n.dot(point))
    }

    pub fn normal(&self) -> Vec3 {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn signed_distance(&self, y: &Vec3) -> f64 {
        self.normal.dot(y) - self.offset
    }

    pub fn project(&self, y: &Vec3) -> Vec3 {
        y - self.normal * self.signed_distance(y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line3 {
    pub point: Vec3,
    direction: Vec3,
}

impl Line3 {
    /// Line through `point` along `direction`, with the direction sign fixed
    /// so that its first non-negligible component is positive.
    pub fn new(point: Vec3, direction: Vec3) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidArgument("line direction must be nonzero".into()));
        }
        let mut d = direction / n;
        if let Some(first) = d.iter().find(|c| c.abs() > DEGENERATE_EIGEN_TOL) {
            if *first < 0.0 {
                d = -d;
            }
        }
        Ok(Self { point, direction: d })
    }

    pub fn direction(&self) -> Vec3 {
        self.direction
    }

    pub fn distance(&self, p: &Vec3) -> f64 {
        let w = p - self.point;
        (w - self.direction * w.dot(&self.direction)).norm()
    }

    /// Shortest distance between two lines.
    pub fn gap(&self, other: &Line3) -> f64 {
        let cross = self.direction.cross(&other.direction);
        let c = cross.norm();
        if c < 1e-12 {
            return self.distance(&other.point);
        }
        ((other.point - self.point).dot(&cross) / c).abs()
    }
}

/// Orthonormal chart of a plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneChart {
    pub origin: Vec3,
    pub e1: Vec3,
    pub e2: Vec3,
}

impl PlaneChart {
    pub fn new(origin: Vec3, normal: &Vec3) -> Self {
        let n = normal.normalize();
        // pick the coordinate axis least aligned with n as the seed
        let i = n.iamin();
        let mut seed = Vec3::zeros();
        seed[i] = 1.0;
        let e1 = (seed - n * n.dot(&seed)).normalize();
        let e2 = n.cross(&e1);
        Self { origin, e1, e2 }
    }

    pub fn to_local(&self, y: &Vec3) -> Point2 {
        let w = y - self.origin;
        Point2::new(w.dot(&self.e1), w.dot(&self.e2))
    }

    pub fn to_world(&self, p: Point2) -> Vec3 {
        self.origin + self.e1 * p.x + self.e2 * p.y
    }

    fn basis(&self) -> nalgebra::Matrix3x2<f64> {
        nalgebra::Matrix3x2::from_columns(&[self.e1, self.e2])
    }
}

/// Eigen-structure of a cone form, split into the eigenvalue whose sign
/// occurs once and the two of the other sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeSpectrum {
    pub minority_value: f64,
    pub minority_vector: Vec3,
    pub majority_values: [f64; 2],
    pub spectral_radius: f64,
}

impl ConeSpectrum {
    /// `|λ₂ − λ₃|` relative to the spectral radius.
    pub fn eigen_gap(&self) -> f64 {
        (self.majority_values[0] - self.majority_values[1]).abs() / self.spectral_radius
    }
}

/// Tangent cone of `quadric` with vertex `x`.
pub fn tangent_cone(quadric: &Quadric3, x: &Vec3) -> Result<ConeQuadratic> {
    let q = quadric.value(x);
    if q <= 1.0 + EXTERIOR_MARGIN {
        return Err(Error::NotExterior { q });
    }
    let aw = quadric.form * (x - quadric.center);
    let form = quadric.form * (q - 1.0) - aw * aw.transpose();
    Ok(ConeQuadratic {
        vertex: *x,
        form: 0.5 * (form + form.transpose()),
    })
}

pub fn cone_spectrum(cone: &ConeQuadratic) -> Result<ConeSpectrum> {
    let eig = SymmetricEigen::new(cone.form);
    let values = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2]];
    let spectral_radius = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let degenerate = Error::DegenerateCone { eigenvalues: values };
    if spectral_radius == 0.0 || values.iter().any(|v| v.abs() <= DEGENERATE_EIGEN_TOL * spectral_radius) {
        return Err(degenerate);
    }
    let negatives: Vec<usize> = (0..3).filter(|&i| values[i] < 0.0).collect();
    let minority = match negatives.len() {
        1 => negatives[0],
        2 => (0..3).find(|i| !negatives.contains(i)).expect("one positive"),
        _ => return Err(degenerate),
    };
    let others: Vec<f64> = (0..3).filter(|&i| i != minority).map(|i| values[i]).collect();
    let mut majority_values = [others[0], others[1]];
    majority_values.sort_by(f64::total_cmp);
    Ok(ConeSpectrum {
        minority_value: values[minority],
        minority_vector: eig.eigenvectors.column(minority).into_owned(),
        majority_values,
        spectral_radius,
    })
}

/// Axis of the cone: the line through the vertex along the eigenvector of
/// the minority-sign eigenvalue. Sections perpendicular to it are ellipses
/// centred on it.
pub fn cone_axis(cone: &ConeQuadratic) -> Result<Line3> {
    let spectrum = cone_spectrum(cone)?;
    Line3::new(cone.vertex, spectrum.minority_vector)
}

/// Perpendicular sections are circles: the two majority eigenvalues agree
/// within `tol` times the spectral radius.
pub fn is_right_circular(cone: &ConeQuadratic, tol: f64) -> Result<bool> {
    Ok(cone_spectrum(cone)?.eigen_gap() <= tol)
}

/// Largest `|r(φ) − r(φ + π)|` of the radial function of the section curve
/// of `cone` by `plane`, measured about the section's centre.
pub fn symmetric_section_defect(cone: &ConeQuadratic, plane: &Plane3) -> Result<f64> {
    let spectrum = cone_spectrum(cone)?;
    // orient the form so the axis direction is the negative one
    let b = if spectrum.minority_value < 0.0 { cone.form } else { -cone.form };
    let axis = spectrum.minority_vector;
    let n = plane.normal();
    let along = n.dot(&axis);
    if along.abs() < 1e-12 {
        return Err(Error::UnboundedSection);
    }
    let t = -plane.signed_distance(&cone.vertex) / along;
    let scale = spectrum.spectral_radius;
    if t.abs() < 1e-12 {
        return Err(Error::UnboundedSection);
    }
    let chart = PlaneChart::new(cone.vertex + axis * t, &n);
    let e = chart.basis();
    let restricted: Matrix2<f64> = e.transpose() * b * e;
    let det = restricted.determinant();
    if !(restricted[(0, 0)] > 0.0 && det > 1e-12 * scale * scale) {
        return Err(Error::UnboundedSection);
    }
    let w0 = chart.origin - cone.vertex;
    let linear: Vector2<f64> = e.transpose() * b * w0;
    let xi = -restricted.try_inverse().ok_or(Error::UnboundedSection)? * linear;
    let center = chart.origin + e * xi;
    let wc = center - cone.vertex;
    let c = wc.dot(&(b * wc));
    let radius = |phi: f64| {
        let d = chart.e1 * phi.cos() + chart.e2 * phi.sin();
        let bd = b * d;
        let qa = d.dot(&bd);
        let qb = bd.dot(&wc);
        (-qb + (qb * qb - qa * c).sqrt()) / qa
    };
    Ok((0..SECTION_SAMPLES)
        .map(|i| {
            let phi = PI * i as f64 / SECTION_SAMPLES as f64;
            (radius(phi) - radius(phi + PI)).abs()
        })
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcurrencyReport {
    pub best_point: [f64; 3],
    /// Root-mean-square distance from the best point to the lines.
    pub residual: f64,
    /// Largest distance between two of the lines.
    pub max_pairwise_gap: f64,
}

/// Least-squares common point of the lines, from the normal equations
/// `Σ (I − dᵢdᵢᵀ) p = Σ (I − dᵢdᵢᵀ) aᵢ`.
pub fn axes_concurrency(axes: &[Line3]) -> Result<ConcurrencyReport> {
    if axes.len() < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 axes, got {}", axes.len())));
    }
    let mut m = Mat3::zeros();
    let mut rhs = Vec3::zeros();
    for line in axes {
        let d = line.direction();
        let proj = Mat3::identity() - d * d.transpose();
        m += proj;
        rhs += proj * line.point;
    }
    let eig = SymmetricEigen::new(m);
    if eig.eigenvalues.min() <= 1e-10 * axes.len() as f64 {
        return Err(Error::RankDeficient);
    }
    let inverse = eig.eigenvectors
        * Mat3::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l))
        * eig.eigenvectors.transpose();
    let p = inverse * rhs;
    let residual = (axes.iter().map(|l| l.distance(&p).powi(2)).sum::<f64>() / axes.len() as f64).sqrt();
    let mut max_pairwise_gap: f64 = 0.0;
    for (i, a) in axes.iter().enumerate() {
        for b in &axes[i + 1..] {
            max_pairwise_gap = max_pairwise_gap.max(a.gap(b));
        }
    }
    Ok(ConcurrencyReport {
        best_point: [p.x, p.y, p.z],
        residual,
        max_pairwise_gap,
    })
}

/// `n` nearly uniform points on the unit sphere.
pub fn fibonacci_sphere(n: usize) -> Vec<Vec3> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden * i as f64;
            Vec3::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}

/// Cone data gathered at one viewpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewpointCone {
    pub viewpoint: Vec3,
    pub axis: Line3,
    pub eigen_gap: f64,
    pub right_circular: bool,
    /// Central-symmetry defect of the section perpendicular to the axis.
    pub section_defect: f64,
}

pub fn survey_viewpoint(quadric: &Quadric3, x: &Vec3, right_circular_tol: f64) -> Result<ViewpointCone> {
    let cone = tangent_cone(quadric, x)?;
    let spectrum = cone_spectrum(&cone)?;
    let axis = Line3::new(cone.vertex, spectrum.minority_vector)?;
    // the perpendicular plane through the quadric's centre projection on the axis
    let depth = (quadric.center - x).dot(&axis.direction());
    let plane = Plane3::through(&(x + axis.direction() * depth), axis.direction())?;
    Ok(ViewpointCone {
        viewpoint: *x,
        axis,
        eigen_gap: spectrum.eigen_gap(),
        right_circular: spectrum.eigen_gap() <= right_circular_tol,
        section_defect: symmetric_section_defect(&cone, &plane)?,
    })
}

/// A planar section of a quadric expressed as a 2D ellipse in chart
/// coordinates.
pub fn quadric_section(quadric: &Quadric3, chart: &PlaneChart) -> Result<(Point2, f64, f64, f64)> {
    let e = chart.basis();
    let a2: Matrix2<f64> = e.transpose() * quadric.form * e;
    let w = chart.origin - quadric.center;
    let b: Vector2<f64> = e.transpose() * quadric.form * w;
    let inv = a2.try_inverse().ok_or(Error::EmptySection)?;
    let xi = -inv * b;
    let kappa = 1.0 - w.dot(&(quadric.form * w)) + xi.dot(&(a2 * xi));
    if !(kappa > 0.0) {
        return Err(Error::EmptySection);
    }
    let eig = SymmetricEigen::new(a2);
    // the smaller eigenvalue of the restricted form gives the major axis
    let (major, minor) = if eig.eigenvalues[0] <= eig.eigenvalues[1] { (0, 1) } else { (1, 0) };
    let semi_major = (kappa / eig.eigenvalues[major]).sqrt();
    let semi_minor = (kappa / eig.eigenvalues[minor]).sqrt();
    let v = eig.eigenvectors.column(major);
    Ok((Point2::new(xi.x, xi.y), semi_major, semi_minor, v[1].atan2(v[0])))
}

/// A plane section of a quadric, rescaled so that the plane's great or
/// small circle of the unit sphere becomes the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct BabelSection {
    pub body: ConvexBody2,
    /// Image of `p` in the rescaled chart.
    pub p: Point2,
    /// Samples of the unit circle, the images of the viewpoints `S² ∩ Γ`.
    pub viewpoints: Vec<Point2>,
    pub chart: PlaneChart,
    /// Radius of `S² ∩ Γ`; chart coordinates are divided by it.
    pub scale: f64,
}

pub fn babel_section_reduce(
    quadric: &Quadric3,
    p: &Vec3,
    plane: &Plane3,
    num_viewpoints: usize,
) -> Result<BabelSection> {
    if quadric.value(p) >= 1.0 {
        return Err(Error::InvalidArgument("p must be interior to the quadric".into()));
    }
    let off = plane.signed_distance(p).abs();
    if off > 1e-12 {
        return Err(Error::InvalidArgument(format!("plane misses p by {off:e}")));
    }
    let s = plane.offset();
    if s.abs() >= 1.0 {
        return Err(Error::PlaneMissesSphere);
    }
    let scale = (1.0 - s * s).sqrt();
    let chart = PlaneChart::new(plane.normal() * s, &plane.normal());
    let (center, a, b, rotation) = quadric_section(quadric, &chart)?;
    let body = ConvexBody2::ellipse(center * (1.0 / scale), a / scale, b / scale, rotation)?;
    let viewpoints = (0..num_viewpoints)
        .map(|i| Point2::polar(1.0, TAU * i as f64 / num_viewpoints as f64))
        .collect();
    Ok(BabelSection {
        body,
        p: chart.to_local(p) * (1.0 / scale),
        viewpoints,
        chart,
        scale,
    })
}

/// Runs the planar bisector harness on one section.
pub fn babel_section_report(section: &BabelSection) -> Result<BlancoReport> {
    blanco_defect(&section.body, section.p, section.viewpoints.len().max(1))
}

/// Grid of viewpoints on `plane`, centred at the projection of the quadric
/// centre and skipping points with `q(x) < PLANE_EXCLUSION`.
pub fn plane_viewpoints(quadric: &Quadric3, plane: &Plane3, count: usize) -> Vec<Vec3> {
    let chart = PlaneChart::new(plane.project(&quadric.center), &plane.normal());
    let side = ((count as f64).sqrt().ceil() as usize).max(2);
    let half = 3.0 * quadric.max_semiaxis();
    let mut points = Vec::with_capacity(side * side);
    for i in 0..side {
        for j in 0..side {
            let u = -half + 2.0 * half * i as f64 / (side - 1) as f64;
            let v = -half + 2.0 * half * j as f64 / (side - 1) as f64;
            let x = chart.to_world(Point2::new(u, v));
            if quadric.value(&x) >= PLANE_EXCLUSION {
                points.push(x);
            }
        }
    }
    points
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MariTolerances {
    pub right_circular: f64,
    pub concurrency: f64,
    pub section: f64,
}

impl Default for MariTolerances {
    fn default() -> Self {
        Self {
            right_circular: 1e-9,
            concurrency: 1e-8,
            section: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SectionChecks {
    /// Central-symmetry defect of `Π ∩ K` about the projection of the
    /// best common point.
    pub central_symmetry_defect: f64,
    pub constant_width_defect: f64,
    /// Largest equal-angle defect over lines of `Π` through that point.
    pub equal_angle_defect: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MariReport {
    pub cones: Vec<ViewpointCone>,
    pub all_right_circular: bool,
    pub max_eigen_gap: f64,
    pub concurrency: ConcurrencyReport,
    pub section: Option<SectionChecks>,
    pub verdict: bool,
}

/// Right-circularity of the cones from viewpoints on `plane`, concurrency of
/// their axes, and, when the plane cuts the body, central symmetry and
/// constant width of the section.
pub fn mari_harness(
    quadric: &Quadric3,
    plane: &Plane3,
    num_samples: usize,
    tol: &MariTolerances,
) -> Result<MariReport> {
    let viewpoints = plane_viewpoints(quadric, plane, num_samples);
    let cones = viewpoints
        .iter()
        .map(|x| survey_viewpoint(quadric, x, tol.right_circular))
        .collect::<Result<Vec<_>>>()?;
    let axes: Vec<Line3> = cones.iter().map(|c| c.axis).collect();
    let concurrency = axes_concurrency(&axes)?;
    let all_right_circular = cones.iter().all(|c| c.right_circular);
    let max_eigen_gap = cones.iter().map(|c| c.eigen_gap).fold(0.0, f64::max);

    let chart = PlaneChart::new(plane.project(&quadric.center), &plane.normal());
    let section = match quadric_section(quadric, &chart) {
        Ok((center, a, b, rotation)) => {
            let body = ConvexBody2::ellipse(center, a, b, rotation)?;
            let best = Vec3::from(concurrency.best_point);
            let p = chart.to_local(&plane.project(&best));
            let mut equal_angle: f64 = 0.0;
            for i in 0..4 {
                let sigma = Line2::through(p, Dir2::from_angle(PI * i as f64 / 4.0));
                match equal_angle_defect(&body, &sigma, DEFAULT_GARNACHAS_SAMPLES) {
                    Ok(r) => equal_angle = equal_angle.max(r.angle_defect),
                    // a line through a point outside the section
                    Err(Error::InvalidArgument(_)) => equal_angle = f64::INFINITY,
                    Err(e) => return Err(e),
                }
            }
            Some(SectionChecks {
                central_symmetry_defect: body.central_symmetry_defect(p),
                constant_width_defect: body.constant_width_defect(body.scan_resolution()),
                equal_angle_defect: equal_angle,
            })
        }
        Err(Error::EmptySection) => None,
        Err(e) => return Err(e),
    };
    let section_ok = section.is_none_or(|s| {
        s.central_symmetry_defect < tol.section && s.constant_width_defect < tol.section
    });
    let verdict = all_right_circular && concurrency.residual < tol.concurrency && section_ok;
    Ok(MariReport {
        cones,
        all_right_circular,
        max_eigen_gap,
        concurrency,
        section,
        verdict,
    })
}
