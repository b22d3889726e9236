//! Brute-force reference implementations.
//!
//! Nothing here uses the diagram, the path index, or the logarithmic
//! polygon searches: hulls come from gift wrapping, diagram nodes from all
//! triples, and separating circles from every site pair against every query
//! feature. Intended for tests and for `--oracle` runs on small inputs.

use alloc::vec::Vec;

use crate::engine::{QueryResult, QueryShape, SearchStats, Separation};
use crate::error::{Error, Result};
use crate::geom::{circumcenter, orientation_exact, BisectorFrame, Circle, Feature, Orientation, Point, Segment};

const REL: f64 = 1e-9;
const STRICT: f64 = 1e-13;

/// Convex hull by gift wrapping: strictly convex, counter-clockwise, starting
/// at the lowest-then-leftmost point.
pub fn jarvis_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::new();
    for &p in points {
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    if pts.len() < 3 {
        pts.sort_by(|a, b| a.y.total_cmp(&b.y).then(a.x.total_cmp(&b.x)));
        return pts;
    }
    let start = (0..pts.len())
        .min_by(|&i, &j| pts[i].y.total_cmp(&pts[j].y).then(pts[i].x.total_cmp(&pts[j].x)))
        .unwrap();
    let mut hull = Vec::new();
    let mut cur = start;
    loop {
        hull.push(pts[cur]);
        let mut next = if cur == 0 { 1 } else { 0 };
        for k in 0..pts.len() {
            if k == cur || k == next {
                continue;
            }
            match orientation_exact(pts[cur], pts[next], pts[k]) {
                Orientation::Cw => next = k,
                Orientation::Collinear if pts[cur].dist(pts[k]) > pts[cur].dist(pts[next]) => next = k,
                _ => {}
            }
        }
        cur = next;
        if cur == start || hull.len() > pts.len() {
            break;
        }
    }
    hull
}

/// Diagram vertex found by enumeration: a circumcenter of three hull
/// vertices whose circle encloses every hull vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleNode {
    pub position: Point,
    pub radius: f64,
    /// Hull vertices on the circle.
    pub sites: Vec<Point>,
}

/// All vertices of the farthest-point diagram, with cocircular triples
/// merged. O(h^4).
pub fn brute_fpvd(points: &[Point]) -> Vec<OracleNode> {
    let hull = jarvis_hull(points);
    let h = hull.len();
    let scale = hull.iter().fold(0.0f64, |s, p| s.max(p.x.abs()).max(p.y.abs())).max(1e-300);
    let mut nodes: Vec<OracleNode> = Vec::new();
    for i in 0..h {
        for j in i + 1..h {
            for k in j + 1..h {
                let Ok(c) = circumcenter(hull[i], hull[j], hull[k]) else {
                    continue;
                };
                let r = c.dist(hull[i]);
                if hull.iter().any(|p| p.dist(c) > r * (1.0 + REL)) {
                    continue;
                }
                if let Some(n) = nodes.iter_mut().find(|n| n.position.dist(c) <= 1e-7 * scale) {
                    for s in [hull[i], hull[j], hull[k]] {
                        if !n.sites.contains(&s) {
                            n.sites.push(s);
                        }
                    }
                    continue;
                }
                nodes.push(OracleNode {
                    position: c,
                    radius: r,
                    sites: alloc::vec![hull[i], hull[j], hull[k]],
                });
            }
        }
    }
    nodes
}

/// Smallest enclosing circle over all pairs and triples. O(n^4).
pub fn brute_mec(points: &[Point]) -> Result<Circle> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let encloses = |c: Point, r: f64| points.iter().all(|p| p.dist(c) <= r * (1.0 + REL) + 1e-300);
    let mut best = Circle { center: points[0], radius: 0.0 };
    let mut found = encloses(points[0], 0.0);
    let mut consider = |c: Point, r: f64| {
        if (!found || r < best.radius) && encloses(c, r) {
            best = Circle { center: c, radius: r };
            found = true;
        }
    };
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let m = points[i].midpoint(points[j]);
            consider(m, m.dist(points[i]));
            for k in j + 1..points.len() {
                if let Ok(c) = circumcenter(points[i], points[j], points[k]) {
                    consider(c, c.dist(points[i]));
                }
            }
        }
    }
    Ok(best)
}

fn shape_features(shape: &QueryShape) -> Vec<Feature> {
    match shape {
        QueryShape::Point(q) => alloc::vec![Feature::Point(*q)],
        QueryShape::Circle(c) => alloc::vec![Feature::Circle(*c)],
        QueryShape::Polygon(poly) => {
            let m = poly.len();
            let mut f: Vec<Feature> = poly.vertices().iter().map(|&v| Feature::Point(v)).collect();
            if m >= 2 {
                for i in 0..m {
                    f.push(Feature::Segment(Segment {
                        a: poly.vertex(i),
                        b: poly.vertex(i + 1),
                    }));
                }
            }
            f
        }
    }
}

/// Distance from `x` to the query region (0 inside), by linear scan.
pub fn brute_shape_distance(shape: &QueryShape, x: Point) -> f64 {
    match shape {
        QueryShape::Point(q) => q.dist(x),
        QueryShape::Circle(c) => (c.center.dist(x) - c.radius).max(0.0),
        QueryShape::Polygon(poly) => {
            let m = poly.len();
            if m >= 3 && (0..m).all(|i| poly.edge_vector(i).cross(x - poly.vertex(i)) >= 0.0) {
                return 0.0;
            }
            let mut d = f64::INFINITY;
            for i in 0..m {
                let s = Segment {
                    a: poly.vertex(i),
                    b: poly.vertex(i + 1),
                };
                d = d.min(crate::geom::dist_point_segment(x, &s));
            }
            d
        }
    }
}

fn shape_closest(shape: &QueryShape, x: Point) -> Point {
    shape_features(shape)
        .iter()
        .map(|f| f.closest_point(x))
        .min_by(|a, b| a.dist(x).total_cmp(&b.dist(x)))
        .unwrap()
}

/// Minimum separating circle by enumeration: the enclosing circle of P when
/// it separates, otherwise the smallest circle through two hull vertices
/// tangent to a query feature that encloses P and misses the query.
pub fn brute_min_separating_circle(points: &[Point], shape: &QueryShape) -> Result<QueryResult> {
    let hull = jarvis_hull(points);
    if hull.is_empty() {
        return Err(Error::EmptyInput);
    }
    let clears = |c: Point, r: f64| brute_shape_distance(shape, c) >= r - REL * r;
    let encloses = |c: Point, r: f64| hull.iter().all(|p| p.dist(c) <= r * (1.0 + REL));

    let mec = brute_mec(&hull)?;
    if clears(mec.center, mec.radius) {
        let d = brute_shape_distance(shape, mec.center);
        let tangency = (d <= mec.radius * (1.0 + REL)).then(|| shape_closest(shape, mec.center));
        return Ok(QueryResult::Separating(Separation {
            circle: mec,
            tangency,
            trivial_mec: true,
            stats: SearchStats::default(),
        }));
    }

    // Candidates valid to near rounding level win over ones that only pass
    // the tolerance band: on thin instances a circle violating the query by
    // a few 1e-13 can be noticeably smaller than the true answer.
    let strict = |c: Point, r: f64| {
        let tol = STRICT * (r + c.magnitude());
        brute_shape_distance(shape, c) >= r - tol && hull.iter().all(|p| p.dist(c) <= r + tol)
    };
    let features = shape_features(shape);
    let mut best: Option<(Circle, Point)> = None;
    let mut best_strict: Option<(Circle, Point)> = None;
    for i in 0..hull.len() {
        for j in 0..hull.len() {
            if i == j {
                continue;
            }
            let Ok(frame) = BisectorFrame::new(hull[i], hull[j]) else {
                continue;
            };
            for f in &features {
                let roots = frame.roots(f);
                for t in roots.iter() {
                    let c = frame.at(t);
                    let r = c.dist(hull[i]).max(c.dist(hull[j]));
                    let cand = (Circle { center: c, radius: r }, f.closest_point(c));
                    if best_strict.is_none_or(|(b, _)| r < b.radius) && strict(c, r) {
                        best_strict = Some(cand);
                    }
                    if best.is_none_or(|(b, _)| r < b.radius) && encloses(c, r) && clears(c, r) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    let best = best_strict.or(best);
    Ok(match best {
        Some((circle, t)) => QueryResult::Separating(Separation {
            circle,
            tangency: Some(t),
            trivial_mec: false,
            stats: SearchStats::default(),
        }),
        None => QueryResult::NoSeparatingCircle,
    })
}
