//! Serializable descriptions of planar bodies and quadrics.

use serde::{Deserialize, Serialize};

use crate::body::{BodyKind, ConvexBody2};
use crate::cone3d::{Mat3, Quadric3, Vec3};
use crate::geom2d::Point2;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BodyShape {
    Disc,
    Ellipse,
    Generic,
}

/// `{"kind": "disc"|"ellipse"|"generic", "center", "radius", "semiaxes",
/// "rotation", "support_table"}`; unused fields may be omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    pub kind: BodyShape,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semiaxes: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support_table: Option<Vec<f64>>,
}

fn missing(field: &str, kind: &str) -> Error {
    Error::InvalidBody(format!("{kind} body requires \"{field}\""))
}

impl BodySpec {
    pub fn build(&self) -> Result<ConvexBody2> {
        let center = Point2::from(self.center.unwrap_or([0.0, 0.0]));
        match self.kind {
            BodyShape::Disc => ConvexBody2::disc(center, self.radius.ok_or_else(|| missing("radius", "disc"))?),
            BodyShape::Ellipse => {
                let [a, b] = self.semiaxes.ok_or_else(|| missing("semiaxes", "ellipse"))?;
                ConvexBody2::ellipse(center, a, b, self.rotation.unwrap_or(0.0))
            }
            BodyShape::Generic => {
                let table = self.support_table.clone().ok_or_else(|| missing("support_table", "generic"))?;
                let body = ConvexBody2::from_support_table(table)?;
                let moved = center.norm() > 0.0;
                Ok(if moved { body.translated(center) } else { body })
            }
        }
    }

    pub fn describe(body: &ConvexBody2) -> Self {
        let empty = Self {
            kind: BodyShape::Disc,
            center: None,
            radius: None,
            semiaxes: None,
            rotation: None,
            support_table: None,
        };
        match body.kind() {
            BodyKind::Disc { center, radius } => Self {
                center: Some([center.x, center.y]),
                radius: Some(*radius),
                ..empty
            },
            BodyKind::Ellipse {
                center,
                semi_major,
                semi_minor,
                rotation,
            } => Self {
                kind: BodyShape::Ellipse,
                center: Some([center.x, center.y]),
                semiaxes: Some([*semi_major, *semi_minor]),
                rotation: Some(*rotation),
                ..empty
            },
            BodyKind::Generic(table) => Self {
                kind: BodyShape::Generic,
                support_table: Some(table.values().to_vec()),
                ..empty
            },
        }
    }
}

/// `{"center":[x,y,z], "semiaxes":[a,b,c], "rotation": rows of a 3×3
/// orthogonal matrix}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadricSpec {
    #[serde(default)]
    pub center: [f64; 3],
    pub semiaxes: [f64; 3],
    #[serde(default = "identity_rows")]
    pub rotation: [[f64; 3]; 3],
}

fn identity_rows() -> [[f64; 3]; 3] {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

impl QuadricSpec {
    pub fn build(&self) -> Result<Quadric3> {
        let r = &self.rotation;
        let rotation = Mat3::new(
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2],
        );
        Quadric3::ellipsoid(Vec3::from(self.center), self.semiaxes, rotation)
    }

    pub fn sphere(center: [f64; 3], radius: f64) -> Self {
        Self {
            center,
            semiaxes: [radius; 3],
            rotation: identity_rows(),
        }
    }
}
