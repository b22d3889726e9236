//! Separability queries over the rooted diagram.
//!
//! Along the root path of a separating location, circles only become
//! separating as they move away from the root. Every search below keeps a
//! shallow end whose circle meets the query and a deep end whose circle
//! misses it, and narrows that interval to one tree edge before solving for
//! the tangency in closed form.

use crate::convex::{circle_polygon_disjoint, closest_pair, gap, internal_tangents_from, separating_normal_at, Containment, ConvexPolygon};
use crate::error::{Error, Result};
use crate::fpvd::{DiagramLocation, FpvdTree, LocationKind};
use crate::geom::{solve_tangency_in_frame, BisectorFrame, Circle, DirectedLine, Feature, Point, Segment, EPS_GEOM};
use crate::path_index::PathLocator;

/// Angle by which a separating line is turned counter-clockwise when two
/// points of P are equally close to it.
pub const EPS_TIE: f64 = 1e-7;

/// Relative band within which a circle touching the query still separates.
pub const SEP_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub enum QueryShape {
    Point(Point),
    Circle(Circle),
    Polygon(ConvexPolygon),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub path_steps: u32,
    pub chain_steps: u32,
    /// The logarithmic search hit a numerical inconsistency and the answer
    /// came from the slower verified search instead.
    pub fallback: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Separation {
    pub circle: Circle,
    /// Touching point with the query; absent when the enclosing circle of P
    /// misses the query by a margin.
    pub tangency: Option<Point>,
    pub trivial_mec: bool,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QueryResult {
    Separating(Separation),
    NoSeparatingCircle,
}

impl QueryResult {
    pub fn separation(&self) -> Option<&Separation> {
        match self {
            QueryResult::Separating(s) => Some(s),
            QueryResult::NoSeparatingCircle => None,
        }
    }

    pub fn is_separating(&self) -> bool {
        matches!(self, QueryResult::Separating(_))
    }
}

#[inline]
fn sep_tol(r: f64) -> f64 {
    SEP_TOL * r
}

/// Deep end of the path interval: a tree node or the seed itself, which sits
/// one level below its parent node.
#[derive(Clone, Copy, Debug, PartialEq)]
enum Deep {
    Node(usize),
    Seed,
}

/// Seed location resolved against the tree.
#[derive(Clone, Copy, Debug)]
struct Seed {
    loc: DiagramLocation,
    /// Deepest tree node on the root path strictly above a non-node seed.
    parent: usize,
}

/// The single path edge left after the tree search, as a parameter range on
/// the bisector of its sites. `t_v` is the shallow end.
#[derive(Clone, Copy, Debug)]
pub struct PathEdge {
    pub frame: BisectorFrame,
    pub t_v: f64,
    pub t_u: f64,
}

/// Outcome of the combined path/chain search for a polygon query.
#[derive(Clone, Copy, Debug)]
pub struct DualSearch {
    pub edge: PathEdge,
    /// Chain interval `[a, b]` with `b = a + 1`, or `a = b` when the search
    /// already produced the answer.
    pub a: usize,
    pub b: usize,
    pub stats: SearchStats,
    /// Answer found during the search (a circle tangent to a chain edge's
    /// supporting line inside that edge).
    pub early: Option<(Point, f64, Point)>,
}

/// Clockwise boundary walk of a query polygon between the two internal
/// tangent points, indexed without copying vertices.
#[derive(Clone, Copy, Debug)]
pub struct Chain<'a> {
    poly: &'a ConvexPolygon,
    start: usize,
    edges: usize,
}

impl<'a> Chain<'a> {
    pub fn new(poly: &'a ConvexPolygon, start: usize, end: usize) -> Self {
        let m = poly.len();
        Chain {
            poly,
            start,
            edges: (start + m - end) % m,
        }
    }

    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn vertex(&self, i: usize) -> Point {
        let m = self.poly.len();
        self.poly.vertex((self.start + m - i % m) % m)
    }

    pub fn segment(&self, i: usize) -> Segment {
        Segment {
            a: self.vertex(i),
            b: self.vertex(i + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    /// The circle stays on the P side of the edge's line.
    Clear,
    /// The circle's open disk meets the edge.
    Hits,
    /// The circle crosses the line only before the edge.
    Before,
    /// The circle crosses the line only after the edge.
    After,
}

fn classify(seg: &Segment, center: Point, r: f64) -> Side {
    let e = seg.b - seg.a;
    let len = e.norm();
    let tol = sep_tol(r);
    let signed = e.cross(center - seg.a) / len;
    if signed >= r - tol {
        return Side::Clear;
    }
    if crate::geom::dist_point_segment(center, seg) < r - tol {
        return Side::Hits;
    }
    if seg.project(center) < 0.5 {
        Side::Before
    } else {
        Side::After
    }
}

/// Preprocessed point set ready for queries.
#[derive(Clone, Debug)]
pub struct Engine {
    tree: FpvdTree,
    locator: PathLocator,
    hull: ConvexPolygon,
    scale: f64,
}

impl Engine {
    pub fn new(tree: FpvdTree) -> Self {
        let locator = PathLocator::new(&tree);
        let hull = tree.hull_polygon();
        let scale = hull.scale();
        Engine { tree, locator, hull, scale }
    }

    pub fn build(points: &[Point]) -> Result<Self> {
        Ok(Self::new(FpvdTree::build(points)?))
    }

    pub fn build_seeded(points: &[Point], seed: u64) -> Result<Self> {
        Ok(Self::new(FpvdTree::build_seeded(points, seed)?))
    }

    pub fn tree(&self) -> &FpvdTree {
        &self.tree
    }

    pub fn locator(&self) -> &PathLocator {
        &self.locator
    }

    pub fn hull(&self) -> &ConvexPolygon {
        &self.hull
    }

    pub fn into_tree(self) -> FpvdTree {
        self.tree
    }

    pub fn query(&self, shape: &QueryShape) -> QueryResult {
        match shape {
            QueryShape::Point(q) => self.query_point(*q),
            QueryShape::Circle(c) => self.query_circle(c),
            QueryShape::Polygon(p) => self.query_polygon(p),
        }
    }

    fn tol(&self) -> f64 {
        EPS_GEOM * self.scale
    }

    /// Index of the hull vertex within tolerance of `x`, if any.
    fn hull_vertex_at(&self, x: Point) -> Option<usize> {
        let tol = self.tol();
        let i = self.hull.extreme_vertex(x - self.hull.interior_point());
        [i, (i + 1) % self.hull.len(), (i + self.hull.len() - 1) % self.hull.len()]
            .into_iter()
            .find(|&j| self.hull.vertex(j).dist(x) <= tol)
            .or_else(|| {
                if self.hull.len() < 16 {
                    (0..self.hull.len()).find(|&j| self.hull.vertex(j).dist(x) <= tol)
                } else {
                    None
                }
            })
    }

    /// Inward unit normal at hull vertex `i`, halfway between its edges.
    fn vertex_normal(&self, i: usize) -> Point {
        let h = &self.hull;
        if h.len() == 1 {
            return Point::new(0.0, 1.0);
        }
        let prev = h.edge_vector((i + h.len() - 1) % h.len()).normalized().unwrap();
        let next = h.edge_vector(i).normalized().unwrap();
        (prev.rot_ccw() + next.rot_ccw())
            .normalized()
            .unwrap_or(next.rot_ccw())
    }

    /// Separating normal (pointing into P) for a point or disk touching or
    /// outside the hull, or `None` when the query overlaps the hull.
    fn disk_normal(&self, c: Point, r: f64) -> Option<Point> {
        let tol = self.tol();
        if self.hull.contains_point(c) == Containment::Inside {
            return None;
        }
        let x = self.hull.closest_point(c);
        let d = x.dist(c);
        if d < r - tol {
            return None;
        }
        if d - r <= tol {
            // Touching: only allowed at a hull vertex.
            let i = self.hull_vertex_at(x)?;
            if d > tol {
                return Some((x - c) * (1.0 / d));
            }
            return Some(self.vertex_normal(i));
        }
        Some((x - c) * (1.0 / d))
    }

    pub fn query_point(&self, q: Point) -> QueryResult {
        self.query_disk(q, 0.0)
    }

    pub fn query_circle(&self, d: &Circle) -> QueryResult {
        self.query_disk(d.center, d.radius)
    }

    fn trivial(&self, dist_to_query: f64, contact: impl FnOnce() -> Point) -> Option<QueryResult> {
        let mec = self.tree.mec;
        if dist_to_query < mec.radius - sep_tol(mec.radius) {
            return None;
        }
        let tangency = if dist_to_query <= mec.radius + sep_tol(mec.radius) {
            Some(contact())
        } else {
            None
        };
        Some(QueryResult::Separating(Separation {
            circle: mec,
            tangency,
            trivial_mec: true,
            stats: SearchStats::default(),
        }))
    }

    fn query_disk(&self, c: Point, r: f64) -> QueryResult {
        let Some(n) = self.disk_normal(c, r) else {
            return QueryResult::NoSeparatingCircle;
        };
        let mec = self.tree.mec;
        let contact = || match (mec.center - c).normalized() {
            Some(u) => c + u * r,
            None => c,
        };
        if let Some(res) = self.trivial(mec.center.dist(c) - r, contact) {
            return res;
        }
        let feature = if r > 0.0 {
            Feature::Circle(Circle { center: c, radius: r })
        } else {
            Feature::Point(c)
        };
        let sep = |x: Point, rho: f64| x.dist(c) - r >= rho - sep_tol(rho);
        let line = DirectedLine {
            anchor: c,
            direction: n.rot_cw(),
        };
        let seed = match self.find_seed(&line) {
            Ok(s) => s,
            Err(_) => return QueryResult::NoSeparatingCircle,
        };
        let seed = self.resolve_seed(seed);
        let mut stats = SearchStats::default();
        let (v, u) = self.path_search(&seed, |z| sep(self.tree.nodes[z].position, self.tree.node_rho(z)), &mut stats);
        let edge = self.final_edge(&seed, v, u);
        match solve_tangency_in_frame(&edge.frame, edge.t_v, edge.t_u, &feature) {
            Some(t) if sep(t.center, t.radius) || !sep(edge.frame.at(edge.t_u), edge.frame.radius(edge.t_u)) => {
                QueryResult::Separating(Separation {
                    circle: Circle { center: t.center, radius: t.radius },
                    tangency: Some(t.contact),
                    trivial_mec: false,
                    stats,
                })
            }
            _ => {
                // The deep end separates; use it when no root is found.
                let center = edge.frame.at(edge.t_u);
                let radius = edge.frame.radius(edge.t_u);
                stats.fallback = true;
                QueryResult::Separating(Separation {
                    circle: Circle { center, radius },
                    tangency: Some(feature.closest_point(center)),
                    trivial_mec: false,
                    stats,
                })
            }
        }
    }

    /// Location on the diagram whose circle is tangent, at the point of P
    /// closest to `line`, to the parallel of `line` through that point.
    pub fn find_seed(&self, line: &DirectedLine) -> Result<DiagramLocation> {
        let h = &self.hull;
        let mut n = line.left_normal();
        let mut i = h.extreme_vertex(-n);
        if h.len() >= 2 {
            let tol = self.tol();
            let base = n.dot(h.vertex(i));
            let tied = [(i + 1) % h.len(), (i + h.len() - 1) % h.len()]
                .into_iter()
                .any(|j| j != i && (n.dot(h.vertex(j)) - base).abs() <= tol);
            if tied {
                let (s, c) = crate::num::sin_cos(EPS_TIE);
                n = n.rotate(c, s);
                i = h.extreme_vertex(-n);
            }
        }
        let ray = DirectedLine {
            anchor: self.tree.sites[i],
            direction: n,
        };
        self.tree
            .ray_exit_of_region(i, &ray)
            .map_err(|_| Error::SeedFailure)
    }

    fn resolve_seed(&self, loc: DiagramLocation) -> Seed {
        let parent = match loc.kind {
            LocationKind::Node(x) => x,
            LocationKind::Edge { child } => self.tree.nodes[child].parent.unwrap_or(child),
            LocationKind::Ray(r) => self.tree.rays[r].origin,
        };
        Seed { loc, parent }
    }

    fn deep_depth(&self, seed: &Seed, u: Deep) -> usize {
        match (u, seed.loc.kind) {
            (Deep::Node(x), _) => self.locator.depth(x),
            (Deep::Seed, LocationKind::Node(x)) => self.locator.depth(x),
            (Deep::Seed, _) => self.locator.depth(seed.parent) + 1,
        }
    }

    fn initial_deep(seed: &Seed) -> Deep {
        match seed.loc.kind {
            LocationKind::Node(x) => Deep::Node(x),
            _ => Deep::Seed,
        }
    }

    /// Node halfway between the deep end `u` and its ancestor `v`.
    fn between(&self, seed: &Seed, u: Deep, v: usize) -> usize {
        match u {
            Deep::Node(x) => self.locator.find_point_between(x, v).expect("path interval invariant"),
            Deep::Seed => {
                let du = self.deep_depth(seed, u);
                let dv = self.locator.depth(v);
                self.locator.level_ancestor(seed.parent, (du + dv) / 2)
            }
        }
    }

    /// Binary search on the root path of `seed` until the interval is one
    /// edge. Returns `(v, u)`: shallow non-separating node, deep separating end.
    fn path_search(&self, seed: &Seed, mut separating: impl FnMut(usize) -> bool, stats: &mut SearchStats) -> (usize, Deep) {
        let mut v = self.tree.root;
        let mut u = Self::initial_deep(seed);
        while self.deep_depth(seed, u) >= self.locator.depth(v) + 2 {
            let z = self.between(seed, u, v);
            stats.path_steps += 1;
            if separating(z) {
                u = Deep::Node(z);
            } else {
                v = z;
            }
        }
        (v, u)
    }

    fn final_edge(&self, seed: &Seed, v: usize, u: Deep) -> PathEdge {
        let (sites, deep_pos) = match u {
            Deep::Node(x) if matches!(seed.loc.kind, LocationKind::Node(y) if y == x) || self.tree.nodes[x].parent == Some(v) => {
                let sites = self.tree.nodes[x].parent_sites.unwrap_or(seed.loc.sites);
                (sites, self.tree.nodes[x].position)
            }
            _ => (seed.loc.sites, seed.loc.position),
        };
        let (a, b) = sites;
        let frame = BisectorFrame::new(self.tree.sites[a], self.tree.sites[b]).expect("distinct sites");
        PathEdge {
            frame,
            t_v: frame.param(self.tree.nodes[v].position),
            t_u: frame.param(deep_pos),
        }
    }

    /// Minimum separating circle for a convex polygon.
    pub fn query_polygon(&self, q: &ConvexPolygon) -> QueryResult {
        if q.len() == 1 {
            return self.query_point(q.vertex(0));
        }
        // Outside the enclosing circle Q cannot meet the hull.
        let mec = self.tree.mec;
        if circle_polygon_disjoint(&mec, q) {
            let d = q.distance_to(mec.center);
            return self
                .trivial(d, || q.closest_point(mec.center))
                .expect("disjoint circle is trivial");
        }
        let Some((n, anchor)) = self.quick_normal(q).or_else(|| self.contact_normal(q)) else {
            return QueryResult::NoSeparatingCircle;
        };
        let Ok(tangents) = internal_tangents_from(&self.hull, q, n) else {
            return QueryResult::NoSeparatingCircle;
        };
        if tangents.q_index == tangents.q2_index {
            return self.query_point(tangents.q);
        }
        let line = DirectedLine {
            anchor,
            direction: n.rot_cw(),
        };
        let chain = Chain::new(q, tangents.q_index, tangents.q2_index);
        let fast = self
            .find_seed(&line)
            .and_then(|s| self.dual_binary_search(s, &chain))
            .and_then(|d| self.finalize(&d, &chain, q).map(|r| (r, d.stats)));
        match fast {
            Ok(((center, radius, contact), stats)) => QueryResult::Separating(Separation {
                circle: Circle { center, radius },
                tangency: Some(contact),
                trivial_mec: false,
                stats,
            }),
            Err(_) => self.query_polygon_verified(q, &line),
        }
    }

    /// A normal from a few alternating projections between Q and the hull,
    /// when it leaves a clear gap: it points from Q toward the hull, with a
    /// point on the separating line.
    fn quick_normal(&self, q: &ConvexPolygon) -> Option<(Point, Point)> {
        let a = self.hull.project(q.interior_point());
        let b = q.project(a);
        let a = self.hull.project(b);
        let n = (a - b).normalized()?;
        let g = gap(&self.hull, q, n);
        (g > 1e3 * self.tol()).then(|| (n, b + n * (0.5 * g)))
    }

    /// Separating normal from the closest pair, for queries close to or
    /// touching the hull. `None` when no circle can separate.
    fn contact_normal(&self, q: &ConvexPolygon) -> Option<(Point, Point)> {
        let cp = closest_pair(&self.hull, q)?;
        let (n, _) = separating_normal_at(&self.hull, q, &cp)?;
        if cp.dist <= self.tol() && !self.touch_allowed(cp.on_a, q) {
            return None;
        }
        Some((n, cp.on_b))
    }

    /// Touching contact is admissible only at a hull vertex, with no hull
    /// edge lying along the query.
    fn touch_allowed(&self, on_hull: Point, q: &ConvexPolygon) -> bool {
        let Some(i) = self.hull_vertex_at(on_hull) else {
            return false;
        };
        let h = &self.hull;
        if h.len() < 2 {
            return true;
        }
        let tol = self.tol();
        let v = h.vertex(i);
        [h.vertex(i + 1), h.vertex(i + h.len() - 1)]
            .into_iter()
            .all(|w| q.distance_to(v.midpoint(w)) > tol)
    }

    /// Algorithm core: shrinks the root path interval of `seed` and the chain
    /// interval together until both are a single edge.
    pub fn dual_binary_search(&self, seed: DiagramLocation, chain: &Chain) -> Result<DualSearch> {
        let seed = self.resolve_seed(seed);
        let deep_pos = seed.loc.position;
        let deep_rho = self.tree.rho(&seed.loc);
        let seed_clear = chain.poly.distance_to(deep_pos) >= deep_rho - sep_tol(deep_rho);
        if !seed_clear {
            return Err(Error::SeedFailure);
        }
        let mut stats = SearchStats::default();
        let (mut a, mut b) = (0usize, chain.edges());
        let mut v = self.tree.root;
        let mut u = Self::initial_deep(&seed);
        while self.deep_depth(&seed, u) >= self.locator.depth(v) + 2 {
            let z = self.between(&seed, u, v);
            let (pz, rz) = (self.tree.nodes[z].position, self.tree.node_rho(z));
            // Probe chain edges until one decides whether z separates. A
            // circle that meets the polygon only crosses an edge's line on
            // the side holding every edge it meets, and the tangency edge is
            // among those, so the cuts are kept only when z turns out not to
            // separate.
            let (mut lo, mut hi) = (a, b);
            let separating = loop {
                if hi <= lo + 1 {
                    stats.path_steps += 1;
                    let d = if hi == lo {
                        pz.dist(chain.vertex(lo))
                    } else {
                        crate::geom::dist_point_segment(pz, &chain.segment(lo))
                    };
                    break d >= rz - sep_tol(rz);
                }
                let j = (lo + hi) / 2;
                match classify(&chain.segment(j), pz, rz) {
                    Side::Clear => {
                        stats.path_steps += 1;
                        break true;
                    }
                    Side::Hits => {
                        stats.path_steps += 1;
                        break false;
                    }
                    Side::Before => {
                        stats.chain_steps += 1;
                        hi = j;
                    }
                    Side::After => {
                        stats.chain_steps += 1;
                        lo = j + 1;
                    }
                }
            };
            if separating {
                u = Deep::Node(z);
            } else {
                v = z;
                a = lo;
                b = hi;
            }
        }
        let mut edge = self.final_edge(&seed, v, u);
        let mut early = None;
        let mut solved: Option<(Point, f64, Point)> = None;
        // Only the chain remains: walk the shallow end along the edge.
        while b > a + 1 {
            stats.chain_steps += 1;
            let j = (a + b) / 2;
            let seg = chain.segment(j);
            let mut side = classify(&seg, edge.frame.at(edge.t_v), edge.frame.radius(edge.t_v));
            if side == Side::Hits {
                let t = solve_tangency_in_frame(&edge.frame, edge.t_v, edge.t_u, &Feature::Segment(seg))
                    .ok_or(Error::InvariantBroken)?;
                edge.t_v = t.t;
                solved = Some((t.center, t.radius, t.contact));
                side = classify(&seg, t.center, t.radius);
                if side == Side::Clear || side == Side::Hits {
                    // Tangent to the edge's line inside the edge: no other
                    // part of the polygon can reach the circle.
                    early = solved;
                    a = j;
                    b = j;
                    break;
                }
            }
            match side {
                Side::Before => b = j,
                Side::After => a = j + 1,
                // The last solve stopped exactly at a chain vertex and the
                // circle there already separates.
                Side::Clear if solved.is_some() => {
                    early = solved;
                    break;
                }
                Side::Clear | Side::Hits => return Err(Error::InvariantBroken),
            }
        }
        Ok(DualSearch { edge, a, b, stats, early })
    }

    /// Closed-form solve on the final path edge against the final chain edge
    /// and its endpoints; the result is checked against the whole polygon.
    pub fn finalize(&self, search: &DualSearch, chain: &Chain, q: &ConvexPolygon) -> Result<(Point, f64, Point)> {
        let clear = |c: Point, r: f64| q.distance_to(c) >= r - sep_tol(r);
        if let Some((c, r, t)) = search.early {
            if clear(c, r) {
                return Ok((c, r, t));
            }
            return Err(Error::InvariantBroken);
        }
        let e = &search.edge;
        let mut best: Option<(Point, f64, Point)> = None;
        for f in [
            Feature::Segment(chain.segment(search.a)),
            Feature::Point(chain.vertex(search.a)),
            Feature::Point(chain.vertex(search.b)),
        ] {
            if let Some(t) = solve_tangency_in_frame(&e.frame, e.t_v, e.t_u, &f) {
                if clear(t.center, t.radius) && best.is_none_or(|b| t.radius < b.1) {
                    best = Some((t.center, t.radius, t.contact));
                }
            }
        }
        if best.is_none() && e.t_u.is_finite() {
            // An ill-conditioned root can land just past the deep end, which
            // separates by the search invariant.
            let c = e.frame.at(e.t_u);
            let r = e.frame.radius(e.t_u);
            if clear(c, r) {
                best = Some((c, r, q.closest_point(c)));
            }
        }
        best.ok_or(Error::NoRoot)
    }

    /// Slower search used when the logarithmic one meets a numerical
    /// inconsistency: the path search tests every probe against the whole
    /// polygon and the final edge is solved against every polygon edge.
    fn query_polygon_verified(&self, q: &ConvexPolygon, line: &DirectedLine) -> QueryResult {
        let Ok(seed) = self.find_seed(line) else {
            return QueryResult::NoSeparatingCircle;
        };
        let seed = self.resolve_seed(seed);
        let clear = |c: Point, r: f64| q.distance_to(c) >= r - sep_tol(r);
        let mut stats = SearchStats {
            fallback: true,
            ..SearchStats::default()
        };
        let (v, u) = self.path_search(&seed, |z| clear(self.tree.nodes[z].position, self.tree.node_rho(z)), &mut stats);
        let e = self.final_edge(&seed, v, u);
        let mut best: Option<(Point, f64, Point)> = None;
        for i in 0..q.len() {
            let seg = Segment { a: q.vertex(i), b: q.vertex(i + 1) };
            for f in [Feature::Segment(seg), Feature::Point(seg.a)] {
                if let Some(t) = solve_tangency_in_frame(&e.frame, e.t_v, e.t_u, &f) {
                    if clear(t.center, t.radius) && best.is_none_or(|b| t.radius < b.1) {
                        best = Some((t.center, t.radius, t.contact));
                    }
                }
            }
        }
        let (center, radius, contact) = best.unwrap_or_else(|| {
            let c = e.frame.at(e.t_u);
            (c, e.frame.radius(e.t_u), q.closest_point(c))
        });
        QueryResult::Separating(Separation {
            circle: Circle { center, radius },
            tangency: Some(contact),
            trivial_mec: false,
            stats,
        })
    }
}
