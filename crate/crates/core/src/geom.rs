//! Planar primitives, tolerant predicates and the bisector tangency solver.

use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::num::{hypot, sqrt};
use crate::predicates;

/// Absolute tolerance applied after normalizing by the input scale.
pub const EPS_GEOM: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        hypot(self.x, self.y)
    }

    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Rotation by +90 degrees.
    #[inline]
    pub fn rot_ccw(self) -> Point {
        Point::new(-self.y, self.x)
    }

    /// Rotation by -90 degrees.
    #[inline]
    pub fn rot_cw(self) -> Point {
        Point::new(self.y, -self.x)
    }

    #[inline]
    pub fn rotate(self, cos: f64, sin: f64) -> Point {
        Point::new(self.x * cos - self.y * sin, self.x * sin + self.y * cos)
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(Point::new(self.x / n, self.y / n))
        } else {
            None
        }
    }

    #[inline]
    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    #[inline]
    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Largest coordinate magnitude, floored at 1.
    #[inline]
    pub fn magnitude(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        let scale = 1.0f64.max(a.magnitude()).max(b.magnitude());
        if a.dist(b) <= EPS_GEOM * scale {
            return Err(Error::CoincidentPoints);
        }
        Ok(Segment { a, b })
    }

    /// Parameter of the orthogonal projection of `p` on the supporting line
    /// (0 at `a`, 1 at `b`).
    #[inline]
    pub fn project(&self, p: Point) -> f64 {
        let d = self.b - self.a;
        let len2 = d.norm2();
        if len2 == 0.0 {
            0.0
        } else {
            (p - self.a).dot(d) / len2
        }
    }

    #[inline]
    pub fn closest_point(&self, p: Point) -> Point {
        let t = self.project(p).clamp(0.0, 1.0);
        self.a.lerp(self.b, t)
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }
}

/// A line with a unit direction. Its left side is the canonical "P side".
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DirectedLine {
    pub anchor: Point,
    pub direction: Point,
}

impl DirectedLine {
    pub fn new(anchor: Point, direction: Point) -> Result<Self> {
        let direction = direction.normalized().ok_or(Error::CoincidentPoints)?;
        Ok(DirectedLine { anchor, direction })
    }

    pub fn through(a: Point, b: Point) -> Result<Self> {
        DirectedLine::new(a, b - a)
    }

    /// Unit normal pointing to the left (P) side.
    #[inline]
    pub fn left_normal(&self) -> Point {
        self.direction.rot_ccw()
    }

    /// Signed distance; positive on the left side.
    #[inline]
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.direction.cross(p - self.anchor)
    }

    #[inline]
    pub fn point_at(&self, t: f64) -> Point {
        self.anchor + self.direction * t
    }

    #[inline]
    pub fn param_of(&self, p: Point) -> f64 {
        (p - self.anchor).dot(self.direction)
    }

    #[inline]
    pub fn foot(&self, p: Point) -> Point {
        self.point_at(self.param_of(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius < 0.0 {
            return Err(Error::Degenerate);
        }
        Ok(Circle { center, radius })
    }

    /// Closed-disk membership with a relative tolerance of `EPS_GEOM`.
    pub fn contains(&self, p: Point) -> bool {
        self.center.dist(p) <= self.radius + EPS_GEOM * self.radius.max(1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Orientation of `abc` with a collinearity band of `EPS_GEOM * scale^2`,
/// where `scale` is the largest coordinate magnitude among the three points.
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let scale = a.magnitude().max(b.magnitude()).max(c.magnitude());
    let det = predicates::orient2d(a, b, c);
    if det.abs() <= EPS_GEOM * scale * scale {
        Orientation::Collinear
    } else if det > 0.0 {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

/// Exact orientation sign (no tolerance band).
#[inline]
pub fn orientation_exact(a: Point, b: Point, c: Point) -> Orientation {
    let det = predicates::orient2d(a, b, c);
    if det > 0.0 {
        Orientation::Ccw
    } else if det < 0.0 {
        Orientation::Cw
    } else {
        Orientation::Collinear
    }
}

pub fn circumcenter(a: Point, b: Point, c: Point) -> Result<Point> {
    if orientation(a, b, c) == Orientation::Collinear {
        return Err(Error::DegenerateTriangle);
    }
    Ok(circumcenter_unchecked(a, b, c))
}

/// Circumcenter computed relative to `a`; callers guarantee non-collinearity.
pub(crate) fn circumcenter_unchecked(a: Point, b: Point, c: Point) -> Point {
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    let ab2 = ab.norm2();
    let ac2 = ac.norm2();
    let ux = (ac.y * ab2 - ab.y * ac2) / d;
    let uy = (ab.x * ac2 - ac.x * ab2) / d;
    Point::new(a.x + ux, a.y + uy)
}

pub fn dist_point_segment(p: Point, s: &Segment) -> f64 {
    p.dist(s.closest_point(p))
}

/// Signed distance, positive on the left (P) side.
pub fn dist_point_line(p: Point, l: &DirectedLine) -> f64 {
    l.signed_distance(p)
}

/// Perpendicular bisector of `[p, p2]`, directed so that `p2` is on its left.
pub fn bisector(p: Point, p2: Point) -> Result<DirectedLine> {
    let d = p2 - p;
    let scale = 1.0f64.max(p.magnitude()).max(p2.magnitude());
    if d.norm() <= EPS_GEOM * scale {
        return Err(Error::CoincidentPoints);
    }
    DirectedLine::new(p.midpoint(p2), d.rot_cw())
}

/// Obstacle a circle can become tangent to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Feature {
    Point(Point),
    Segment(Segment),
    Circle(Circle),
    Line(DirectedLine),
}

impl Feature {
    /// Unsigned distance from `p` to the feature (circle: to its disk, 0 inside).
    pub fn distance(&self, p: Point) -> f64 {
        match self {
            Feature::Point(q) => p.dist(*q),
            Feature::Segment(s) => dist_point_segment(p, s),
            Feature::Circle(c) => (p.dist(c.center) - c.radius).max(0.0),
            Feature::Line(l) => l.signed_distance(p).abs(),
        }
    }

    /// Point of the feature closest to `p`.
    pub fn closest_point(&self, p: Point) -> Point {
        match self {
            Feature::Point(q) => *q,
            Feature::Segment(s) => s.closest_point(p),
            Feature::Circle(c) => match (p - c.center).normalized() {
                Some(u) => c.center + u * c.radius,
                None => c.center,
            },
            Feature::Line(l) => l.foot(p),
        }
    }
}

/// A circle through the two bisector sites, tangent to a feature.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tangency {
    pub center: Point,
    pub radius: f64,
    /// Bisector parameter of the center.
    pub t: f64,
    /// Touching point on the feature.
    pub contact: Point,
}

/// Parametrization `center(t) = mid + t * dir` of the bisector of two sites,
/// where `dir` is the direction of [`bisector`].
#[derive(Clone, Copy, Debug)]
pub struct BisectorFrame {
    pub mid: Point,
    pub dir: Point,
    pub half: f64,
    site: Point,
}

impl BisectorFrame {
    pub fn new(p: Point, p2: Point) -> Result<Self> {
        let line = bisector(p, p2)?;
        Ok(BisectorFrame {
            mid: line.anchor,
            dir: line.direction,
            half: 0.5 * p.dist(p2),
            site: p,
        })
    }

    #[inline]
    pub fn at(&self, t: f64) -> Point {
        self.mid + self.dir * t
    }

    #[inline]
    pub fn param(&self, x: Point) -> f64 {
        (x - self.mid).dot(self.dir)
    }

    /// Radius of the circle centered at `center(t)` through both sites.
    #[inline]
    pub fn radius(&self, t: f64) -> f64 {
        hypot(self.half, t)
    }

    /// Roots of the tangency equation against `feature` on the full line.
    pub fn roots(&self, feature: &Feature) -> Roots {
        let mut out = Roots::default();
        let h2 = self.half * self.half;
        match feature {
            Feature::Point(f) => {
                let mf = self.mid - *f;
                let w = self.dir.dot(mf);
                let d = mf.norm2() - h2;
                let scale = mf.norm2() + h2;
                if w.abs() > 1e-14 * sqrt(scale).max(f64::MIN_POSITIVE) {
                    out.push(-d / (2.0 * w));
                } else if d.abs() <= 1e-12 * scale {
                    out.everywhere = true;
                }
            }
            Feature::Circle(c) => {
                if c.radius == 0.0 {
                    return self.roots(&Feature::Point(c.center));
                }
                let mf = self.mid - c.center;
                let w = self.dir.dot(mf);
                let r = c.radius;
                let a_term = mf.norm2() - h2 - r * r;
                let qa = 4.0 * (w * w - r * r);
                let qb = 4.0 * a_term * w;
                let qc = a_term * a_term - 4.0 * r * r * h2;
                // Unsquared form: |center - c|^2 - rho^2 - r^2 = 2 r rho.
                let phi = |t: f64| {
                    let rho = self.radius(t);
                    (a_term + 2.0 * w * t - 2.0 * r * rho, 2.0 * w - 2.0 * r * t / rho)
                };
                for t in solve_quadratic(qa, qb, qc).iter() {
                    let t = polish(t, phi);
                    let rho = self.radius(t);
                    let size = a_term.abs() + (2.0 * w * t).abs() + 2.0 * r * rho;
                    if phi(t).0.abs() <= 1e-9 * size {
                        out.push(t);
                    }
                }
            }
            Feature::Line(l) => self.line_roots(l, &mut out),
            Feature::Segment(s) => {
                if let Ok(l) = DirectedLine::through(s.a, s.b) {
                    let mut line = Roots::default();
                    self.line_roots(&l, &mut line);
                    for t in line.iter() {
                        let tau = s.project(self.at(t));
                        if (-1e-12..=1.0 + 1e-12).contains(&tau) {
                            out.push(t);
                        }
                    }
                }
                // An endpoint root counts only where that endpoint is the
                // segment's closest point to the center.
                for (end, before) in [(s.a, true), (s.b, false)] {
                    let r = self.roots(&Feature::Point(end));
                    out.everywhere |= r.everywhere;
                    for t in r.iter() {
                        let tau = s.project(self.at(t));
                        if (before && tau <= 1e-12) || (!before && tau >= 1.0 - 1e-12) {
                            out.push(t);
                        }
                    }
                }
            }
        }
        out
    }

    fn line_roots(&self, l: &DirectedLine, out: &mut Roots) {
        let n = l.left_normal();
        let g0 = n.dot(self.mid - l.anchor);
        let g1 = n.dot(self.dir);
        let h2 = self.half * self.half;
        for t in solve_quadratic(g1 * g1 - 1.0, 2.0 * g0 * g1, g0 * g0 - h2).iter() {
            let side = if g0 + g1 * t >= 0.0 { 1.0 } else { -1.0 };
            let psi = |t: f64| {
                let rho = self.radius(t);
                (side * (g0 + g1 * t) - rho, side * g1 - t / rho)
            };
            let t = polish(t, psi);
            let size = g0.abs() + (g1 * t).abs() + self.radius(t);
            if psi(t).0.abs() <= 1e-9 * size {
                out.push(t);
            }
        }
    }

    fn tangency(&self, t: f64, feature: &Feature) -> Tangency {
        let center = self.at(t);
        Tangency {
            center,
            radius: center.dist(self.site),
            t,
            contact: feature.closest_point(center),
        }
    }
}

/// Small fixed-capacity root list.
#[derive(Clone, Copy, Debug, Default)]
pub struct Roots {
    buf: [f64; 6],
    len: usize,
    /// Every parameter is a root (the feature is one of the sites).
    pub everywhere: bool,
}

impl Roots {
    fn push(&mut self, t: f64) {
        if t.is_finite() && self.len < self.buf.len() {
            self.buf[self.len] = t;
            self.len += 1;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.buf[..self.len].iter().copied()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// Newton steps on `f` (value, derivative) from `t`, keeping the iterate
/// with the smallest residual.
fn polish(mut t: f64, f: impl Fn(f64) -> (f64, f64)) -> f64 {
    let (mut v, mut dv) = f(t);
    for _ in 0..12 {
        if v == 0.0 || dv == 0.0 || !dv.is_finite() {
            break;
        }
        let next = t - v / dv;
        if !next.is_finite() {
            break;
        }
        let (nv, ndv) = f(next);
        if nv.abs() >= v.abs() {
            break;
        }
        t = next;
        v = nv;
        dv = ndv;
    }
    t
}

/// Real roots of `a t^2 + b t + c`, degrading to the linear case when `a`
/// is negligible. Slightly negative discriminants are clamped to zero.
fn solve_quadratic(a: f64, b: f64, c: f64) -> Roots {
    let mut out = Roots::default();
    let mag = a.abs().max(b.abs()).max(c.abs());
    if mag == 0.0 {
        return out;
    }
    if a.abs() <= 1e-13 * mag {
        if b != 0.0 {
            out.push(-c / b);
        }
        return out;
    }
    let mut disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        if disc > -1e-12 * (b * b + (4.0 * a * c).abs()) {
            disc = 0.0;
        } else {
            return out;
        }
    }
    let sq = sqrt(disc);
    let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    if q == 0.0 {
        out.push(0.0);
        return out;
    }
    out.push(q / a);
    out.push(c / q);
    out
}

/// First tangency root met when walking the bisector of `p, p2` from
/// parameter `t0` toward `t1` (either may be infinite). The caller
/// guarantees the radius is nondecreasing in that direction.
pub fn solve_tangency_on_bisector(
    p: Point,
    p2: Point,
    t0: f64,
    t1: f64,
    feature: &Feature,
) -> Option<Tangency> {
    let frame = BisectorFrame::new(p, p2).ok()?;
    solve_tangency_in_frame(&frame, t0, t1, feature)
}

pub(crate) fn solve_tangency_in_frame(
    frame: &BisectorFrame,
    t0: f64,
    t1: f64,
    feature: &Feature,
) -> Option<Tangency> {
    let roots = frame.roots(feature);
    if roots.everywhere && t0.is_finite() {
        return Some(frame.tangency(t0, feature));
    }
    let sign = if t1 >= t0 { 1.0 } else { -1.0 };
    let mut span_scale = frame.half.max(frame.mid.magnitude()).max(1.0);
    if t0.is_finite() {
        span_scale = span_scale.max(t0.abs());
    }
    if t1.is_finite() {
        span_scale = span_scale.max(t1.abs());
    }
    let slack = 1e-9 * span_scale;
    let len = (t1 - t0) * sign;
    let mut best: Option<f64> = None;
    for t in roots.iter() {
        let off = (t - t0) * sign;
        if off < -slack || off > len + slack {
            continue;
        }
        let off = off.clamp(0.0, len.max(0.0));
        if best.is_none_or(|b| off < b) {
            best = Some(off);
        }
    }
    best.map(|off| {
        let t = if t0.is_finite() { t0 + sign * off } else { t1 };
        frame.tangency(t, feature)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)), Orientation::Ccw);
        assert_eq!(orientation(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)), Orientation::Collinear);
        assert_eq!(orientation(p(0.0, 0.0), p(0.0, 1.0), p(1.0, 1.0)), Orientation::Cw);
    }

    #[test]
    fn circumcenter_examples() {
        let c = circumcenter(p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)).unwrap();
        assert!(close(c.x, 2.0, 1e-12) && close(c.y, 5.0 / 6.0, 1e-12));
        let c = circumcenter(p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0)).unwrap();
        assert!(close(c.x, 1.0, 1e-12) && close(c.y, 0.0, 1e-12));
        assert_eq!(
            circumcenter(p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn segment_distance_examples() {
        let s = Segment::new(p(-1.0, 0.0), p(1.0, 0.0)).unwrap();
        assert_eq!(dist_point_segment(p(0.0, 1.0), &s), 1.0);
        assert_eq!(dist_point_segment(p(3.0, 0.0), &s), 2.0);
        let s = Segment::new(p(0.0, 0.5), p(2.0, 0.5)).unwrap();
        assert!(close(dist_point_segment(p(1.0, -0.75), &s), 1.25, 1e-15));
    }

    #[test]
    fn line_distance_sign_convention() {
        let l = DirectedLine::new(p(0.0, 0.0), p(1.0, 0.0)).unwrap();
        assert_eq!(dist_point_line(p(0.0, 1.0), &l), 1.0);
        assert_eq!(dist_point_line(p(5.0, 0.0), &l), 0.0);
        assert_eq!(dist_point_line(p(0.0, -2.0), &l), -2.0);
    }

    #[test]
    fn bisector_examples() {
        let b = bisector(p(0.0, 0.0), p(2.0, 0.0)).unwrap();
        assert_eq!(b.anchor, p(1.0, 0.0));
        assert!(b.direction.x.abs() < 1e-15);
        let b = bisector(p(0.0, 0.0), p(0.0, 2.0)).unwrap();
        assert_eq!(b.anchor, p(0.0, 1.0));
        assert!(b.direction.y.abs() < 1e-15);
        let b = bisector(p(0.0, 0.0), p(2.0, 2.0)).unwrap();
        assert_eq!(b.anchor, p(1.0, 1.0));
        let s = core::f64::consts::FRAC_1_SQRT_2;
        assert!(close(b.direction.x, s, 1e-15) && close(b.direction.y, -s, 1e-15));
        assert_eq!(bisector(p(1.0, 1.0), p(1.0, 1.0)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn tangency_point_feature_below() {
        // Bisector x = 1 walked downward from y = 0.
        let t = solve_tangency_on_bisector(
            p(0.0, 0.0),
            p(2.0, 0.0),
            0.0,
            f64::INFINITY,
            &Feature::Point(p(1.0, 0.5)),
        )
        .unwrap();
        assert!(close(t.center.x, 1.0, 1e-12) && close(t.center.y, -0.75, 1e-12));
        assert!(close(t.radius, 1.25, 1e-12));
        assert_eq!(t.contact, p(1.0, 0.5));
    }

    #[test]
    fn tangency_circle_feature() {
        let f = Feature::Circle(Circle::new(p(1.0, 1.0), 0.5).unwrap());
        let t = solve_tangency_on_bisector(p(0.0, 0.0), p(2.0, 0.0), 0.0, f64::INFINITY, &f)
            .unwrap();
        assert!(close(t.center.y, -0.75, 1e-12));
        assert!(close(t.radius, 1.25, 1e-12));
        assert!(close(t.contact.y, 0.5, 1e-12));
    }

    #[test]
    fn tangency_walking_upward() {
        // Bisector of (0,0),(4,0) is x = 2 with direction (0,-1); y = 5/6 is t = -5/6.
        let t = solve_tangency_on_bisector(
            p(0.0, 0.0),
            p(4.0, 0.0),
            -5.0 / 6.0,
            f64::NEG_INFINITY,
            &Feature::Point(p(2.0, -1.0)),
        )
        .unwrap();
        assert!(close(t.center.x, 2.0, 1e-12) && close(t.center.y, 1.5, 1e-12));
        assert!(close(t.radius, 2.5, 1e-12));
    }

    #[test]
    fn tangency_segment_and_absent_root() {
        let seg = Segment::new(p(0.0, 0.5), p(2.0, 0.5)).unwrap();
        let t = solve_tangency_on_bisector(
            p(0.0, 0.0),
            p(2.0, 0.0),
            0.0,
            f64::INFINITY,
            &Feature::Segment(seg),
        )
        .unwrap();
        assert!(close(t.center.y, -0.75, 1e-12));
        assert!(close(t.contact.x, 1.0, 1e-12) && close(t.contact.y, 0.5, 1e-12));
        // Walking upward never becomes tangent from outside.
        let none = solve_tangency_on_bisector(
            p(0.0, 0.0),
            p(2.0, 0.0),
            0.0,
            f64::NEG_INFINITY,
            &Feature::Point(p(1.0, 0.5)),
        );
        assert!(none.is_none());
    }

    #[test]
    fn segment_tangency_falls_back_to_endpoint() {
        // Segment whose supporting-line tangency foot misses the segment.
        let seg = Segment::new(p(3.0, 0.5), p(5.0, 0.5)).unwrap();
        let t = solve_tangency_on_bisector(
            p(0.0, 0.0),
            p(2.0, 0.0),
            0.0,
            f64::NEG_INFINITY,
            &Feature::Segment(seg),
        )
        .unwrap();
        assert!(close(t.center.dist(p(3.0, 0.5)), t.radius, 1e-9));
        assert_eq!(t.contact, p(3.0, 0.5));
    }
}
