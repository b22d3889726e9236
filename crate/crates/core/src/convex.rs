//! Convex polygons and the logarithmic-time queries the search phase needs.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{orientation, orientation_exact, Circle, DirectedLine, Orientation, Point, EPS_GEOM};

/// Below this vertex count searches fall back to linear scans.
const LINEAR_CUTOFF: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryFeature {
    Vertex(usize),
    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    Edge(usize),
}

/// Vertices in counter-clockwise order, strictly convex. One- and two-vertex
/// polygons (a point, a segment) are allowed.
#[derive(Clone, Debug)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    /// Pseudo-angle of edge `i` measured counter-clockwise from edge 0.
    edge_angle: Vec<f64>,
    /// Pseudo-angle of `v_i - center` measured from `v_0 - center`.
    fan_angle: Vec<f64>,
    center: Point,
    scale: f64,
}

/// Counter-clockwise diamond angle from `from` to `to`, in `[0, 4)`: a
/// monotone stand-in for the true angle that needs no trigonometry.
#[inline]
fn pseudo_angle(from: Point, to: Point) -> f64 {
    let (x, y) = (from.dot(to), from.cross(to));
    if x == 0.0 && y == 0.0 {
        return 0.0;
    }
    let a = if y >= 0.0 {
        if x >= 0.0 {
            y / (x + y)
        } else {
            1.0 - x / (y - x)
        }
    } else if x < 0.0 {
        2.0 - y / (-x - y)
    } else {
        3.0 + x / (x - y)
    };
    if a >= 4.0 {
        0.0
    } else {
        a
    }
}

/// Builds a convex polygon from points given in either orientation.
/// Repeated and collinear vertices are dropped.
pub fn make_polygon(points: &[Point]) -> Result<ConvexPolygon> {
    ConvexPolygon::new(points)
}

impl ConvexPolygon {
    pub fn new(points: &[Point]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = points.iter().fold(1.0f64, |s, p| s.max(p.magnitude()));
        let tol = EPS_GEOM * scale;

        let mut v: Vec<Point> = Vec::with_capacity(points.len());
        for &p in points {
            if v.last().is_none_or(|q: &Point| q.dist(p) > tol) {
                v.push(p);
            }
        }
        while v.len() > 1 && v[0].dist(*v.last().unwrap()) <= tol {
            v.pop();
        }

        let area2: f64 = (0..v.len())
            .map(|i| v[i].cross(v[(i + 1) % v.len()]))
            .sum();
        if area2 < 0.0 {
            v.reverse();
        }

        let all_collinear = v.len() < 3
            || (2..v.len()).all(|i| orientation(v[0], v[1], v[i]) == Orientation::Collinear);
        if all_collinear {
            let v = collinear_extremes(&v, tol);
            return Ok(Self::from_ccw(v, scale));
        }

        let v = drop_straight_vertices(v)?;
        let poly = Self::from_ccw(v, scale);
        if !poly.turns_once() {
            return Err(Error::NotConvex);
        }
        Ok(poly)
    }

    /// Wraps vertices already known to be strictly convex and
    /// counter-clockwise (such as a computed hull) without cleaning them.
    pub(crate) fn from_hull_vertices(vertices: Vec<Point>) -> Self {
        let scale = vertices.iter().fold(1.0f64, |s, p| s.max(p.magnitude()));
        Self::from_ccw(vertices, scale)
    }

    fn from_ccw(vertices: Vec<Point>, scale: f64) -> Self {
        let m = vertices.len();
        let mut edge_angle = Vec::with_capacity(m);
        let mut fan_angle = Vec::with_capacity(m);
        let center = if m >= 3 {
            let (a, b, c) = (vertices[0], vertices[m / 3], vertices[2 * m / 3]);
            Point::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
        } else if m == 2 {
            vertices[0].midpoint(vertices[1])
        } else {
            vertices[0]
        };
        if m >= 2 {
            let e0 = vertices[1] - vertices[0];
            for i in 0..m {
                let e = vertices[(i + 1) % m] - vertices[i];
                edge_angle.push(if i == 0 { 0.0 } else { pseudo_angle(e0, e) });
            }
            let r0 = vertices[0] - center;
            for (i, &p) in vertices.iter().enumerate() {
                fan_angle.push(if i == 0 { 0.0 } else { pseudo_angle(r0, p - center) });
            }
        }
        ConvexPolygon {
            vertices,
            edge_angle,
            fan_angle,
            center,
            scale,
        }
    }

    /// Edge directions sweep exactly one full turn.
    fn turns_once(&self) -> bool {
        let m = self.len();
        (1..m).all(|i| self.edge_angle[i] > self.edge_angle[i - 1])
            && (0..m).all(|i| orientation_exact(self.vertex(i), self.vertex(i + 1), self.vertex(i + 2)) != Orientation::Cw)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex with cyclic indexing.
    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        // Indices rarely exceed one wrap; skip the division for those.
        let m = self.vertices.len();
        let j = if i < m {
            i
        } else if i < 2 * m {
            i - m
        } else {
            i % m
        };
        self.vertices[j]
    }

    #[inline]
    pub fn edge_vector(&self, i: usize) -> Point {
        self.vertex(i + 1) - self.vertex(i)
    }

    /// A point strictly inside the polygon (for 1- and 2-gons, a point of it).
    #[inline]
    pub fn interior_point(&self) -> Point {
        self.center
    }

    /// Largest coordinate magnitude, at least 1.
    #[inline]
    pub fn scale(&self) -> f64 {
        self.scale
    }

    #[inline]
    fn tol_for(&self, p: Point) -> f64 {
        EPS_GEOM * self.scale.max(p.magnitude())
    }

    #[inline]
    fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    /// Signed distance from `p` to the line of edge `i`; positive inside.
    fn edge_side(&self, i: usize, p: Point) -> f64 {
        let a = self.vertex(i);
        let e = self.edge_vector(i);
        e.cross(p - a) / e.norm()
    }

    pub fn contains_point(&self, p: Point) -> Containment {
        let m = self.len();
        let tol = self.tol_for(p);
        if m == 1 {
            return if p.dist(self.vertices[0]) <= tol {
                Containment::Boundary
            } else {
                Containment::Outside
            };
        }
        if m == 2 {
            let d = crate::geom::dist_point_segment(
                p,
                &crate::geom::Segment {
                    a: self.vertices[0],
                    b: self.vertices[1],
                },
            );
            return if d <= tol {
                Containment::Boundary
            } else {
                Containment::Outside
            };
        }
        // Side of edge `i` against the band of half-width tol, compared in
        // squares to skip the normalization.
        let class = |i: usize| {
            let e = self.edge_vector(i);
            let c = e.cross(p - self.vertex(i));
            if c * c <= tol * tol * e.norm2() {
                Containment::Boundary
            } else if c < 0.0 {
                Containment::Outside
            } else {
                Containment::Inside
            }
        };
        let worst = |a: Containment, b: Containment| match (a, b) {
            (Containment::Outside, _) | (_, Containment::Outside) => Containment::Outside,
            (Containment::Boundary, _) | (_, Containment::Boundary) => Containment::Boundary,
            _ => Containment::Inside,
        };
        if m < LINEAR_CUTOFF {
            return (0..m).map(class).fold(Containment::Inside, worst);
        }
        // Fan from v0: wedge i spans rays v0->v_i and v0->v_{i+1}.
        let v0 = self.vertices[0];
        let (mut lo, mut hi) = (1usize, m - 1);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if orientation_exact(v0, self.vertices[mid], p) == Orientation::Cw {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        [0, lo - 1, lo, lo + 1, m - 1]
            .into_iter()
            .map(|i| class(i % m))
            .fold(Containment::Inside, worst)
    }

    /// Cyclic run of edges that have `p` strictly on their outer side, as
    /// `(first edge, count)`. `None` when `p` sees no edge.
    fn visible_edges(&self, p: Point) -> Option<(usize, usize)> {
        let m = self.len();
        let visible = |i: usize| orientation_exact(self.vertex(i), self.vertex(i + 1), p) == Orientation::Cw;
        if m == 1 {
            return None;
        }
        if m < LINEAR_CUTOFF {
            let first = (0..m).find(|&i| visible(i) && !visible(self.prev(i)))?;
            let count = (0..m).take_while(|&k| visible((first + k) % m)).count();
            return Some((first, count));
        }
        let dir = p - self.center;
        if dir.norm2() == 0.0 {
            return None;
        }
        let r0 = self.vertices[0] - self.center;
        let wedge = |d: Point| {
            let a = pseudo_angle(r0, d);
            self.fan_angle.partition_point(|&x| x <= a).saturating_sub(1)
        };
        let mut k = wedge(dir);
        if !visible(k) {
            k = [self.prev(k), (k + 1) % m].into_iter().find(|&i| visible(i))?;
        }
        let mut kb = wedge(-dir);
        if visible(kb) {
            kb = [self.prev(kb), (kb + 1) % m].into_iter().find(|&i| !visible(i))?;
        }
        // Edges kb+1 ..= k: invisible then visible; find the first visible.
        let span = (k + m - kb) % m;
        let (mut lo, mut hi) = (0usize, span);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if visible((kb + mid) % m) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let first = (kb + hi) % m;
        // Edges k .. kb: visible then invisible; find the first invisible.
        let span = (kb + m - k) % m;
        let (mut lo, mut hi) = (0usize, span);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if visible((k + mid) % m) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let end = (k + hi) % m;
        Some((first, (end + m - first) % m))
    }

    fn feature_distance(&self, p: Point, f: BoundaryFeature) -> f64 {
        match f {
            BoundaryFeature::Vertex(i) => p.dist(self.vertex(i)),
            BoundaryFeature::Edge(i) => self.edge_side(i, p).abs(),
        }
    }

    /// Nearest boundary feature of a polygon that `p` lies outside of.
    fn nearest_feature(&self, p: Point) -> BoundaryFeature {
        let m = self.len();
        if m == 1 {
            return BoundaryFeature::Vertex(0);
        }
        // Foot parameter test: edge j is "passed" when p projects beyond its end.
        let passed = |j: usize| (p - self.vertex(j + 1)).dot(self.edge_vector(j)) >= 0.0;
        let classify = |j: usize| {
            let e = self.edge_vector(j);
            if (p - self.vertex(j)).dot(e) <= 0.0 {
                BoundaryFeature::Vertex(j % m)
            } else {
                BoundaryFeature::Edge(j % m)
            }
        };
        if m < LINEAR_CUTOFF {
            return self.nearest_feature_linear(p);
        }
        let Some((s, c)) = self.visible_edges(p) else {
            return self.nearest_feature_linear(p);
        };
        let (mut lo, mut hi) = (0usize, c);
        // First chain edge not passed.
        while lo < hi {
            let mid = (lo + hi) / 2;
            if passed(s + mid) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo == c {
            BoundaryFeature::Vertex((s + c) % m)
        } else {
            classify(s + lo)
        }
    }

    fn nearest_feature_linear(&self, p: Point) -> BoundaryFeature {
        let m = self.len();
        if m == 1 {
            return BoundaryFeature::Vertex(0);
        }
        let mut best = (f64::INFINITY, BoundaryFeature::Vertex(0));
        for i in 0..m {
            let a = self.vertex(i);
            let e = self.edge_vector(i);
            let t = (p - a).dot(e) / e.norm2();
            let (d, f) = if t <= 0.0 {
                (p.dist(a), BoundaryFeature::Vertex(i))
            } else if t >= 1.0 {
                (p.dist(self.vertex(i + 1)), BoundaryFeature::Vertex((i + 1) % m))
            } else {
                (p.dist(a + e * t), BoundaryFeature::Edge(i))
            };
            if d < best.0 {
                best = (d, f);
            }
        }
        best.1
    }

    /// Distance from an outside point to the polygon and the realizing feature.
    pub fn distance_point(&self, p: Point) -> Result<(f64, BoundaryFeature)> {
        if self.contains_point(p) != Containment::Outside {
            return Err(Error::PointNotOutside);
        }
        let f = self.nearest_feature(p);
        Ok((self.feature_distance(p, f), f))
    }

    /// Distance from `p` to the closed polygon (zero inside).
    pub fn distance_to(&self, p: Point) -> f64 {
        match self.contains_point(p) {
            Containment::Outside => self.feature_distance(p, self.nearest_feature(p)),
            _ => 0.0,
        }
    }

    /// Closest point of the closed polygon to `p`, with no tolerance band:
    /// `p` itself only when it sees no edge. One visibility search instead
    /// of a containment test followed by one.
    pub(crate) fn project(&self, p: Point) -> Point {
        let m = self.len();
        if m < LINEAR_CUTOFF {
            return self.closest_point(p);
        }
        let Some((s, c)) = self.visible_edges(p) else {
            return p;
        };
        let passed = |j: usize| (p - self.vertex(j + 1)).dot(self.edge_vector(j)) >= 0.0;
        let (mut lo, mut hi) = (0usize, c);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if passed(s + mid) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo == c {
            return self.vertex(s + c);
        }
        let a = self.vertex(s + lo);
        let e = self.edge_vector(s + lo);
        a + e * ((p - a).dot(e) / e.norm2()).clamp(0.0, 1.0)
    }

    /// Closest point of the closed polygon to `p`.
    pub fn closest_point(&self, p: Point) -> Point {
        if self.contains_point(p) != Containment::Outside {
            return p;
        }
        match self.nearest_feature(p) {
            BoundaryFeature::Vertex(i) => self.vertex(i),
            BoundaryFeature::Edge(i) => {
                let a = self.vertex(i);
                let e = self.edge_vector(i);
                a + e * ((p - a).dot(e) / e.norm2()).clamp(0.0, 1.0)
            }
        }
    }

    /// First edge (cyclically from edge 0) whose direction is at or past
    /// `dir` counter-clockwise; 0 when every edge precedes it.
    fn first_edge_at_or_after(&self, dir: Point) -> usize {
        let a = pseudo_angle(self.edge_vector(0), dir);
        let i = self.edge_angle.partition_point(|&x| x < a);
        if i == self.len() {
            0
        } else {
            i
        }
    }

    /// Vertex maximizing `dot(v, dir)`; ties go to the lower index.
    pub fn extreme_vertex(&self, dir: Point) -> usize {
        let m = self.len();
        let better = |i: usize, j: usize| {
            let (a, b) = (self.vertex(i).dot(dir), self.vertex(j).dot(dir));
            a > b || (a == b && i < j)
        };
        if m < LINEAR_CUTOFF {
            let mut best = 0;
            for i in 1..m {
                if better(i, best) {
                    best = i;
                }
            }
            return best;
        }
        let i = self.first_edge_at_or_after(dir.rot_ccw());
        let mut best = i;
        for j in [self.prev(i), (i + 1) % m, 0] {
            if better(j, best) {
                best = j;
            }
        }
        best
    }

    /// `max dot(v, dir)` over the vertices.
    #[inline]
    pub fn support(&self, dir: Point) -> f64 {
        self.vertex(self.extreme_vertex(dir)).dot(dir)
    }

    /// Locates `p` on the boundary: a vertex within tolerance, else an edge.
    pub fn locate_boundary(&self, p: Point) -> Result<BoundaryFeature> {
        let tol = self.tol_for(p);
        let m = self.len();
        if let Some(i) = (0..m).find(|&i| self.vertex(i).dist(p) <= tol) {
            return Ok(BoundaryFeature::Vertex(i));
        }
        if m >= 2 {
            for i in 0..m {
                let a = self.vertex(i);
                let e = self.edge_vector(i);
                let t = (p - a).dot(e) / e.norm2();
                if (0.0..=1.0).contains(&t) && self.edge_side(i, p).abs() <= tol {
                    return Ok(BoundaryFeature::Edge(i));
                }
            }
        }
        Err(Error::PointNotOnBoundary)
    }
}

/// Collapses a collinear cycle to its two extreme points (or one).
fn collinear_extremes(v: &[Point], tol: f64) -> Vec<Point> {
    if v.len() == 1 {
        return v.to_vec();
    }
    let (mut a, mut b) = (0, 0);
    let mut best = -1.0;
    // Farthest point from v0, then farthest from it.
    for (i, p) in v.iter().enumerate() {
        let d = p.dist(v[0]);
        if d > best {
            best = d;
            a = i;
        }
    }
    best = -1.0;
    for (i, p) in v.iter().enumerate() {
        let d = p.dist(v[a]);
        if d > best {
            best = d;
            b = i;
        }
    }
    if v[a].dist(v[b]) <= tol {
        return alloc::vec![v[a]];
    }
    // Keep a canonical order: lexicographically smaller endpoint first.
    let (p, q) = (v[a], v[b]);
    if (p.x, p.y) <= (q.x, q.y) {
        alloc::vec![p, q]
    } else {
        alloc::vec![q, p]
    }
}

/// Removes vertices where the boundary does not turn left: exactly collinear
/// ones, and tolerance-collinear reflex noise. A clear right turn is an error.
fn drop_straight_vertices(mut v: Vec<Point>) -> Result<Vec<Point>> {
    loop {
        let m = v.len();
        if m < 3 {
            return Ok(v);
        }
        let mut keep = Vec::with_capacity(m);
        let mut changed = false;
        for i in 0..m {
            let (a, b, c) = (v[(i + m - 1) % m], v[i], v[(i + 1) % m]);
            let exact = orientation_exact(a, b, c);
            let loose = orientation(a, b, c);
            let straight = exact == Orientation::Collinear
                || (exact == Orientation::Cw && loose == Orientation::Collinear);
            if straight {
                // A vertex that doubles back along the same line breaks convexity.
                if (b - a).dot(c - b) < 0.0 {
                    return Err(Error::NotConvex);
                }
                changed = true;
                continue;
            }
            if exact == Orientation::Cw {
                return Err(Error::NotConvex);
            }
            keep.push(b);
        }
        if !changed {
            return Ok(keep);
        }
        // Removing several neighbours at once is fine: each removed vertex lies
        // on the segment between its neighbours, so the rest stays a cycle.
        v = keep;
    }
}

/// Closest points between two disjoint or touching convex polygons.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosestPair {
    pub on_a: Point,
    pub on_b: Point,
    pub dist: f64,
}

fn segment_pair(a0: Point, a1: Point, b0: Point, b1: Point) -> ClosestPair {
    let o1 = orientation_exact(a0, a1, b0);
    let o2 = orientation_exact(a0, a1, b1);
    let o3 = orientation_exact(b0, b1, a0);
    let o4 = orientation_exact(b0, b1, a1);
    let proper = o1 != o2 && o3 != o4 && [o1, o2, o3, o4].iter().all(|o| *o != Orientation::Collinear);
    if proper {
        let d = a1 - a0;
        let e = b1 - b0;
        let t = (b0 - a0).cross(e) / d.cross(e);
        let x = a0 + d * t;
        return ClosestPair { on_a: x, on_b: x, dist: 0.0 };
    }
    let clamp_to = |p: Point, s0: Point, s1: Point| {
        let e = s1 - s0;
        let l = e.norm2();
        if l == 0.0 {
            s0
        } else {
            s0 + e * ((p - s0).dot(e) / l).clamp(0.0, 1.0)
        }
    };
    let mut best = ClosestPair { on_a: a0, on_b: b0, dist: f64::INFINITY };
    for (p, on_a) in [(a0, true), (a1, true), (b0, false), (b1, false)] {
        let q = if on_a { clamp_to(p, b0, b1) } else { clamp_to(p, a0, a1) };
        let d = p.dist(q);
        if d < best.dist {
            best = if on_a {
                ClosestPair { on_a: p, on_b: q, dist: d }
            } else {
                ClosestPair { on_a: q, on_b: p, dist: d }
            };
        }
    }
    best
}

/// Vertex of `a` next to which `a` comes closest to `b`, searched on the
/// part of `a` visible from `b`'s interior point.
fn nearest_vertex_towards(a: &ConvexPolygon, b: &ConvexPolygon) -> usize {
    let m = a.len();
    if m == 1 {
        return 0;
    }
    let c = b.interior_point();
    let Some((s, count)) = a.visible_edges(c) else {
        return a.extreme_vertex(c - a.interior_point());
    };
    let chain_vertices = count + 1;
    // Each probe is a full distance query on `b`, so scan only tiny chains.
    if chain_vertices <= 3 {
        let mut best = (f64::INFINITY, s);
        for k in 0..chain_vertices {
            let i = (s + k) % m;
            let d = b.distance_to(a.vertex(i));
            if d < best.0 {
                best = (d, i);
            }
        }
        return best.1;
    }
    // First chain edge along which the distance to b stops decreasing.
    let rising = |j: usize| {
        let v = a.vertex(j);
        a.edge_vector(j).dot(v - b.project(v)) >= 0.0
    };
    let (mut lo, mut hi) = (0usize, count);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if rising(s + mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (s + lo) % m
}

fn edges_around(p: &ConvexPolygon, i: usize) -> [(Point, Point); 2] {
    if p.len() == 1 {
        let v = p.vertex(0);
        return [(v, v), (v, v)];
    }
    let prev = p.prev(i);
    [(p.vertex(prev), p.vertex(i)), (p.vertex(i), p.vertex(i + 1))]
}

/// Closest pair of points between `a` and `b`, or `None` when one polygon's
/// interior point lies inside the other (interiors overlap).
pub fn closest_pair(a: &ConvexPolygon, b: &ConvexPolygon) -> Option<ClosestPair> {
    if a.contains_point(b.interior_point()) == Containment::Inside
        || b.contains_point(a.interior_point()) == Containment::Inside
    {
        return None;
    }
    let ia = nearest_vertex_towards(a, b);
    let ib = nearest_vertex_towards(b, a);
    let mut best: Option<ClosestPair> = None;
    for (a0, a1) in edges_around(a, ia) {
        for (b0, b1) in edges_around(b, ib) {
            let c = segment_pair(a0, a1, b0, b1);
            if best.is_none_or(|x| c.dist < x.dist) {
                best = Some(c);
            }
        }
    }
    best
}

/// Gap `min_a n.a - max_b n.b` along a unit normal `n`.
#[inline]
pub(crate) fn gap(a: &ConvexPolygon, b: &ConvexPolygon, n: Point) -> f64 {
    -a.support(-n) - b.support(n)
}

fn pair_tol(a: &ConvexPolygon, b: &ConvexPolygon) -> f64 {
    EPS_GEOM * a.scale.max(b.scale)
}

/// A line with `a` on its left and `b` on its right (closures may touch it).
/// `None` when the interiors overlap.
pub fn separating_line(a: &ConvexPolygon, b: &ConvexPolygon) -> Option<DirectedLine> {
    separating_normal(a, b).map(|(n, anchor)| DirectedLine {
        anchor,
        direction: n.rot_cw(),
    })
}

/// Unit normal pointing from `b` toward `a` and an anchor on a separating line.
pub(crate) fn separating_normal(a: &ConvexPolygon, b: &ConvexPolygon) -> Option<(Point, Point)> {
    separating_normal_at(a, b, &closest_pair(a, b)?)
}

/// As [`separating_normal`], reusing an already computed closest pair.
pub(crate) fn separating_normal_at(a: &ConvexPolygon, b: &ConvexPolygon, cp: &ClosestPair) -> Option<(Point, Point)> {
    let tol = pair_tol(a, b);
    if cp.dist > tol {
        let n = (cp.on_a - cp.on_b) * (1.0 / cp.dist);
        if gap(a, b, n) >= -tol {
            return Some((n, cp.on_a.midpoint(cp.on_b)));
        }
        return None;
    }
    // Touching: try edge normals at the contact.
    let contact = cp.on_a;
    let mut candidates: Vec<Point> = Vec::new();
    for (poly, sign) in [(a, 1.0), (b, -1.0)] {
        if poly.len() < 2 {
            continue;
        }
        if let Ok(f) = poly.locate_boundary(contact) {
            let edges: [usize; 2] = match f {
                BoundaryFeature::Vertex(i) => [poly.prev(i), i],
                BoundaryFeature::Edge(i) => [i, i],
            };
            for e in edges {
                if let Some(u) = poly.edge_vector(e).normalized() {
                    candidates.push(u.rot_ccw() * sign);
                }
            }
        }
    }
    let k = candidates.len();
    for i in 0..k {
        for j in i..k {
            if let Some(n) = (candidates[i] + candidates[j]).normalized() {
                candidates.push(n);
            }
        }
    }
    candidates
        .into_iter()
        .find(|&n| gap(a, b, n) >= -tol)
        .map(|n| (n, contact))
}

/// The two internal common tangents of disjoint convex polygons.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InternalTangents {
    /// Tangent reached by rotating the separating normal counter-clockwise.
    pub line: DirectedLine,
    /// Tangent reached by rotating clockwise.
    pub line2: DirectedLine,
    /// Vertex index of `b` touched by `line`.
    pub q_index: usize,
    /// Vertex index of `b` touched by `line2`.
    pub q2_index: usize,
    pub q: Point,
    pub q2: Point,
}

impl InternalTangents {
    /// Number of edges of the clockwise chain from `q` to `q2` on a polygon
    /// with `m` vertices.
    pub fn chain_edges(&self, m: usize) -> usize {
        (self.q_index + m - self.q2_index) % m
    }
}

/// Orders the "support changes" of a polygon as a normal rotates away from
/// `n0` in direction `sign`. For `inward`, events are edge inward normals
/// (support of `-n`), otherwise outward normals (support of `n`).
/// Pseudo-angle of a half turn.
const HALF_TURN: f64 = 2.0;

struct EventSweep<'a> {
    poly: &'a ConvexPolygon,
    n0: Point,
    sign: f64,
    inward: bool,
    /// Edge of the first event.
    first: usize,
}

impl<'a> EventSweep<'a> {
    fn new(poly: &'a ConvexPolygon, n0: Point, sign: f64, inward: bool) -> Self {
        let m = poly.len();
        let first = if m < 2 {
            0
        } else {
            // Edge direction whose event normal equals n0.
            let d = if inward { n0.rot_cw() } else { n0.rot_ccw() };
            let f = poly.first_edge_at_or_after(d);
            if sign > 0.0 {
                f
            } else {
                // Last edge strictly before d, cyclically; an edge exactly at d
                // stays at the end of the sweep.
                poly.prev(f)
            }
        };
        EventSweep { poly, n0, sign, inward, first }
    }

    fn count(&self) -> usize {
        if self.poly.len() < 2 {
            0
        } else {
            self.poly.len()
        }
    }

    fn edge(&self, k: usize) -> usize {
        let m = self.poly.len();
        if self.sign > 0.0 {
            (self.first + k) % m
        } else {
            (self.first + m - k % m) % m
        }
    }

    fn normal(&self, k: usize) -> Point {
        let u = self.poly.edge_vector(self.edge(k)).normalized().unwrap_or(self.n0);
        if self.inward {
            u.rot_ccw()
        } else {
            u.rot_cw()
        }
    }

    /// Rotation from `n0` to the normal of event `k` as a pseudo-angle in
    /// `[0, 4)`, where 2 is a half turn.
    fn angle(&self, k: usize) -> f64 {
        let u = self.poly.edge_vector(self.edge(k));
        let n = if self.inward { u.rot_ccw() } else { u.rot_cw() };
        let a = if self.sign > 0.0 {
            pseudo_angle(self.n0, n)
        } else {
            pseudo_angle(n, self.n0)
        };
        // Only the first and last events can wrap around through n0.
        if k == 0 && a > 3.0 {
            0.0
        } else if k > 0 && k + 1 == self.count() && a < 1.0 {
            4.0
        } else {
            a
        }
    }

    /// Support vertex after `k` events.
    fn support_after(&self, k: usize) -> usize {
        let m = self.poly.len();
        if m < 2 {
            return 0;
        }
        // Rotating n counter-clockwise moves both the max of n and the min of
        // n forward along a counter-clockwise polygon.
        if self.sign > 0.0 {
            (self.first + k) % m
        } else {
            (self.first + 1 + m - k % m) % m
        }
    }

    /// First event index in `0..count()` for which `stop` holds, where `stop`
    /// is monotone (false then true); `count()` when none.
    fn search(&self, mut stop: impl FnMut(usize) -> bool) -> usize {
        let (mut lo, mut hi) = (0usize, self.count());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if stop(mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }
}

/// One internal tangent: rotate the separating normal `n0` in direction
/// `sign` until the gap between `a` and `b` closes.
fn tangent_side(a: &ConvexPolygon, b: &ConvexPolygon, n0: Point, sign: f64, tol: f64) -> (Point, usize, usize) {
    let sa = EventSweep::new(a, n0, sign, true);
    let ka = sa.search(|k| {
        let phi = sa.angle(k);
        phi > HALF_TURN || {
            let n = sa.normal(k);
            n.dot(a.vertex(sa.support_after(k))) - b.support(n) < -tol
        }
    });
    let ia = sa.support_after(ka);
    let va = a.vertex(ia);
    let phi_lo = if ka == 0 { 0.0 } else { sa.angle(ka - 1) };
    let phi_hi = if ka < sa.count() { sa.angle(ka).min(HALF_TURN) } else { HALF_TURN };

    let sb = EventSweep::new(b, n0, sign, false);
    let kb = sb.search(|k| {
        let phi = sb.angle(k);
        phi > phi_hi || {
            let n = sb.normal(k);
            phi >= phi_lo && n.dot(va) - n.dot(b.vertex(sb.support_after(k + 1))) < -tol
        }
    });
    let ib = sb.support_after(kb);
    let vb = b.vertex(ib);

    // Normals bounding the rotation; a half turn lands on -n0.
    let n_lo = if ka == 0 { n0 } else { sa.normal(ka - 1) };
    let n_hi = if phi_hi < HALF_TURN { sa.normal(ka) } else { -n0 };
    let n = match (vb - va).normalized() {
        Some(d) => {
            let c = d.rot_ccw();
            if sign * (n_lo.cross(c) + c.cross(n_hi)) >= 0.0 {
                c
            } else {
                -c
            }
        }
        None => n_hi,
    };
    (n, ia, ib)
}

/// Internal common tangents of `a` (left/P side) and `b`.
pub fn internal_tangents(a: &ConvexPolygon, b: &ConvexPolygon) -> Result<InternalTangents> {
    let (n0, _) = separating_normal(a, b).ok_or(Error::PolygonsIntersect)?;
    internal_tangents_from(a, b, n0)
}

pub(crate) fn internal_tangents_from(a: &ConvexPolygon, b: &ConvexPolygon, n0: Point) -> Result<InternalTangents> {
    let tol = pair_tol(a, b);
    let m = b.len();
    let (n1, _, mut q) = tangent_side(a, b, n0, 1.0, tol);
    let (n2, _, mut q2) = tangent_side(a, b, n0, -1.0, tol);
    if m >= 2 {
        let on = |n: Point, i: usize, j: usize| (n.dot(b.vertex(i)) - n.dot(b.vertex(j))).abs() <= tol;
        // Flush edges: step toward the other tangent to keep the chain short.
        if q != q2 && on(n1, q, (q + m - 1) % m) {
            q = (q + m - 1) % m;
        }
        if q != q2 && on(n2, q2, (q2 + 1) % m) {
            q2 = (q2 + 1) % m;
        }
    }
    let line = DirectedLine { anchor: b.vertex(q), direction: n1.rot_cw() };
    let line2 = DirectedLine { anchor: b.vertex(q2), direction: n2.rot_cw() };
    Ok(InternalTangents {
        line,
        line2,
        q_index: q,
        q2_index: q2,
        q: b.vertex(q),
        q2: b.vertex(q2),
    })
}

/// Clockwise boundary walk of `poly` from `q` to `q2`. Points interior to an
/// edge become chain endpoints.
pub fn chain_between(poly: &ConvexPolygon, q: Point, q2: Point) -> Result<Vec<Point>> {
    let fq = poly.locate_boundary(q)?;
    let fq2 = poly.locate_boundary(q2)?;
    let m = poly.len();
    if fq == fq2 && q.dist(q2) <= poly.tol_for(q) {
        return Ok(alloc::vec![q]);
    }
    let mut out = alloc::vec![q];
    // Next vertex reached walking clockwise (decreasing index) from q.
    let mut i = match fq {
        BoundaryFeature::Vertex(i) => (i + m - 1) % m,
        BoundaryFeature::Edge(i) => i,
    };
    if let BoundaryFeature::Edge(j) = fq2 {
        if fq == fq2 {
            // Both inside one edge: direct step if q2 lies behind q.
            let e = poly.edge_vector(j);
            if (q2 - q).dot(e) < 0.0 {
                out.push(q2);
                return Ok(out);
            }
        }
    }
    for _ in 0..=m {
        let v = poly.vertex(i);
        match fq2 {
            BoundaryFeature::Vertex(j) if j == i => {
                out.push(v);
                return Ok(out);
            }
            BoundaryFeature::Edge(j) if (j + 1) % m == i => {
                out.push(v);
                out.push(q2);
                return Ok(out);
            }
            _ => out.push(v),
        }
        i = (i + m - 1) % m;
    }
    Err(Error::PointNotOnBoundary)
}

/// True when the open disk of `c` misses `poly` (tangency counts as disjoint).
pub fn circle_polygon_disjoint(c: &Circle, poly: &ConvexPolygon) -> bool {
    poly.distance_to(c.center) >= c.radius - 1e-9 * c.radius
}
