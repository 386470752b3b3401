//! Minimal SVG scene writer for planar figures.

use std::fmt::Write;

use crate::body::ConvexBody2;
use crate::geom2d::{Circle2, Line2, Point2};

const BOUNDARY_SAMPLES: usize = 360;

/// Scene in world coordinates, mapped to a square viewport with `y` up.
#[derive(Debug, Clone)]
pub struct Scene {
    half_extent: f64,
    size: f64,
    elements: Vec<String>,
}

fn num(v: f64) -> String {
    // fixed precision keeps files stable and diffable
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

impl Scene {
    /// Viewport covering `[−half_extent, half_extent]²`.
    pub fn new(half_extent: f64) -> Self {
        Self {
            half_extent,
            size: 800.0,
            elements: Vec::new(),
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        let s = self.size / (2.0 * self.half_extent);
        ((p.x + self.half_extent) * s, (self.half_extent - p.y) * s)
    }

    fn scale(&self) -> f64 {
        self.size / (2.0 * self.half_extent)
    }

    pub fn circle(&mut self, circle: &Circle2, class: &str) -> &mut Self {
        let (cx, cy) = self.map(circle.center);
        let r = circle.radius * self.scale();
        self.elements.push(format!(
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            num(cx),
            num(cy),
            num(r)
        ));
        self
    }

    pub fn point(&mut self, p: Point2, class: &str) -> &mut Self {
        let (cx, cy) = self.map(p);
        self.elements.push(format!(
            r#"<circle class="{class}" cx="{}" cy="{}" r="3" fill="crimson"/>"#,
            num(cx),
            num(cy)
        ));
        self
    }

    fn path(&mut self, points: &[Point2], closed: bool, class: &str, style: &str) {
        let mut d = String::new();
        for (i, p) in points.iter().enumerate() {
            let (x, y) = self.map(*p);
            let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(x), num(y));
        }
        if closed {
            d.push('Z');
        }
        self.elements
            .push(format!(r#"<path class="{class}" d="{}" {style}/>"#, d.trim_end()));
    }

    pub fn body(&mut self, body: &ConvexBody2, class: &str) -> &mut Self {
        let pts = body.boundary(BOUNDARY_SAMPLES);
        self.path(&pts, true, class, r#"fill="lightsteelblue" fill-opacity="0.5" stroke="steelblue""#);
        self
    }

    pub fn polygon(&mut self, vertices: &[Point2], closed: bool, class: &str) -> &mut Self {
        self.path(vertices, closed, class, r#"fill="none" stroke="darkorange" stroke-width="1""#);
        self
    }

    /// Segment of `line` clipped to the viewport.
    pub fn line(&mut self, line: &Line2, class: &str, color: &str) -> &mut Self {
        let a = line.anchor();
        let d = line.direction().vec();
        let reach = 2.0 * self.half_extent * std::f64::consts::SQRT_2;
        let (x1, y1) = self.map(a - d * reach);
        let (x2, y2) = self.map(a + d * reach);
        self.elements.push(format!(
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="0.75"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        ));
        self
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">
<rect width="100%" height="100%" fill="white"/>
"#,
            self.size
        );
        for e in &self.elements {
            out.push_str(e);
            out.push('\n');
        }
        out.push_str("</svg>\n");
        out
    }
}
