//! SVG figures of one query.
//!
//! The viewport is a fixed 800x800 square fitted to the bounding box of P and
//! Q with a 5% margin on each side; y points up. Styling:
//! - points of P: dark grey dots of radius [`POINT_RADIUS`] px;
//! - hull of P: grey outline;
//! - query: blue, filled at 25% opacity (a point query is a blue dot);
//! - separating circle: red outline, clipped by the viewport;
//! - tangency point: red dot of radius [`CONTACT_RADIUS`] px.

use std::fmt::Write;

use circsep_core::engine::{QueryResult, QueryShape};
use circsep_core::Point;

pub const SIZE: f64 = 800.0;
pub const MARGIN: f64 = 0.05;
pub const POINT_RADIUS: f64 = 2.5;
pub const CONTACT_RADIUS: f64 = 4.0;
const HULL_STROKE: &str = "#888888";
const POINT_FILL: &str = "#333333";
const QUERY_COLOR: &str = "#1f5fbf";
const CIRCLE_STROKE: &str = "#c62828";

/// Affine map from instance coordinates to pixels.
struct View {
    min: Point,
    scale: f64,
    offset: Point,
}

impl View {
    fn fit(lo: Point, hi: Point) -> Self {
        let inner = SIZE * (1.0 - 2.0 * MARGIN);
        let span = (hi.x - lo.x).max(hi.y - lo.y);
        let scale = if span > 0.0 { inner / span } else { 1.0 };
        // Center the box inside the drawable square.
        let offset = Point::new(
            SIZE * MARGIN + 0.5 * (inner - (hi.x - lo.x) * scale),
            SIZE * MARGIN + 0.5 * (inner - (hi.y - lo.y) * scale),
        );
        View { min: lo, scale, offset }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        let x = self.offset.x + (p.x - self.min.x) * self.scale;
        let y = SIZE - (self.offset.y + (p.y - self.min.y) * self.scale);
        (x, y)
    }
}

fn bounds(points: &[Point], query: &QueryShape) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut add = |p: Point, r: f64| {
        lo = Point::new(lo.x.min(p.x - r), lo.y.min(p.y - r));
        hi = Point::new(hi.x.max(p.x + r), hi.y.max(p.y + r));
    };
    for &p in points {
        add(p, 0.0);
    }
    match query {
        QueryShape::Point(q) => add(*q, 0.0),
        QueryShape::Circle(c) => add(c.center, c.radius),
        QueryShape::Polygon(poly) => poly.vertices().iter().for_each(|&v| add(v, 0.0)),
    }
    if !lo.x.is_finite() {
        return (Point::new(0.0, 0.0), Point::new(1.0, 1.0));
    }
    (lo, hi)
}

fn polygon_points(view: &View, pts: &[Point]) -> String {
    let mut s = String::new();
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = view.map(p);
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x:.3},{y:.3}");
    }
    s
}

/// Renders P (all input points), its hull, the query and the answer.
pub fn render(points: &[Point], hull: &[Point], query: &QueryShape, result: &QueryResult) -> String {
    let (lo, hi) = bounds(points, query);
    let view = View::fit(lo, hi);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    if hull.len() >= 2 {
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="none" stroke="{HULL_STROKE}" stroke-width="1"/>"#,
            polygon_points(&view, hull)
        );
    }
    match query {
        QueryShape::Point(q) => {
            let (x, y) = view.map(*q);
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{CONTACT_RADIUS}" fill="{QUERY_COLOR}"/>"#);
        }
        QueryShape::Circle(c) => {
            let (x, y) = view.map(c.center);
            let r = c.radius * view.scale;
            let _ = writeln!(
                s,
                r#"<circle cx="{x:.3}" cy="{y:.3}" r="{r:.3}" fill="{QUERY_COLOR}" fill-opacity="0.25" stroke="{QUERY_COLOR}"/>"#
            );
        }
        QueryShape::Polygon(poly) => {
            let _ = writeln!(
                s,
                r#"<polygon points="{}" fill="{QUERY_COLOR}" fill-opacity="0.25" stroke="{QUERY_COLOR}"/>"#,
                polygon_points(&view, poly.vertices())
            );
        }
    }
    for &p in points {
        let (x, y) = view.map(p);
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{POINT_RADIUS}" fill="{POINT_FILL}"/>"#);
    }
    if let Some(sep) = result.separation() {
        let (x, y) = view.map(sep.circle.center);
        let r = sep.circle.radius * view.scale;
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="{r:.3}" fill="none" stroke="{CIRCLE_STROKE}" stroke-width="1.5"/>"#
        );
        if let Some(t) = sep.tangency {
            let (x, y) = view.map(t);
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{CONTACT_RADIUS}" fill="{CIRCLE_STROKE}"/>"#);
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_fills_the_margin_frame() {
        let v = View::fit(Point::new(0.0, 0.0), Point::new(2.0, 1.0));
        assert_eq!(v.map(Point::new(0.0, 0.0)).0, 40.0);
        assert_eq!(v.map(Point::new(2.0, 0.0)).0, 760.0);
        // The short side is centered vertically.
        let (_, y0) = v.map(Point::new(0.0, 0.0));
        let (_, y1) = v.map(Point::new(0.0, 1.0));
        assert_eq!(y0 + y1, SIZE);
    }
}
