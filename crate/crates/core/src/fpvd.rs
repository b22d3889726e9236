//! Farthest-point Voronoi diagram rooted at the minimum enclosing circle center.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::convex::ConvexPolygon;
use crate::error::{Error, Result};
use crate::geom::{circumcenter_unchecked, Circle, DirectedLine, Point, EPS_GEOM};
use crate::hull::convex_hull;
use crate::mec::{minimum_enclosing_circle_seeded, DEFAULT_SEED};
use crate::triangulation::farthest_delaunay;

/// Relative tolerance used by structural checks.
const CHECK_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Node {
    pub position: Point,
    /// Sites (hull indices) equidistant from `position` and farthest from it,
    /// in counter-clockwise hull order.
    pub defining_sites: Vec<usize>,
    pub parent: Option<usize>,
    /// Site pair bounding the edge to the parent.
    pub parent_sites: Option<(usize, usize)>,
    pub children: Vec<usize>,
    /// Rays leaving this node.
    pub rays: Vec<usize>,
    pub depth: usize,
}

/// Unbounded edge. Its sites are consecutive hull vertices `(a, a + 1)`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Ray {
    pub origin: usize,
    pub direction: Point,
    pub sites: (usize, usize),
}

/// Boundary of the region of one site: it arrives from infinity along
/// `first_ray`, visits `nodes`, and leaves along `last_ray`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RegionBoundary {
    pub first_ray: usize,
    pub nodes: Vec<usize>,
    pub last_ray: usize,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FpvdTree {
    /// Hull vertices of the input, counter-clockwise.
    pub sites: Vec<Point>,
    /// Input index of each site.
    pub site_index: Vec<usize>,
    pub nodes: Vec<Node>,
    pub rays: Vec<Ray>,
    pub regions: Vec<RegionBoundary>,
    pub root: usize,
    /// Minimum enclosing circle; its center is the root position.
    pub mec: Circle,
    /// Number of distinct input points.
    pub distinct_points: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocationKind {
    Node(usize),
    /// Interior point of the edge from `child` to its parent.
    Edge { child: usize },
    Ray(usize),
}

/// A point on the diagram together with the two sites whose bisector
/// carries it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagramLocation {
    pub kind: LocationKind,
    pub position: Point,
    pub sites: (usize, usize),
}

impl FpvdTree {
    pub fn build(points: &[Point]) -> Result<Self> {
        Self::build_seeded(points, DEFAULT_SEED)
    }

    pub fn build_seeded(points: &[Point], seed: u64) -> Result<Self> {
        let hull = convex_hull(points)?;
        let distinct_points = crate::hull::distinct_sorted(points)?.len();
        if hull.points.len() < 2 {
            return Err(Error::TooFewPoints);
        }
        let mec = minimum_enclosing_circle_seeded(&hull.points, seed)?.circle;
        let mut builder = if hull.points.len() == 2 {
            Builder::two_sites(&hull.points)
        } else {
            Builder::from_triangulation(&hull.points, seed)
        };
        builder.root_and_orient();
        let Builder { nodes, rays, regions, root, .. } = builder;
        Ok(FpvdTree {
            sites: hull.points,
            site_index: hull.indices,
            nodes,
            rays,
            regions,
            root,
            mec,
            distinct_points,
        })
    }

    /// Hull of the input as a polygon.
    pub fn hull_polygon(&self) -> ConvexPolygon {
        ConvexPolygon::from_hull_vertices(self.sites.clone())
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    #[inline]
    pub fn node_rho(&self, v: usize) -> f64 {
        let n = &self.nodes[v];
        n.position.dist(self.sites[n.defining_sites[0]])
    }

    pub fn rho(&self, loc: &DiagramLocation) -> f64 {
        loc.position.dist(self.sites[loc.sites.0])
    }

    /// Minimum circle enclosing the sites centered at `y` (linear scan).
    pub fn min_pcircle_at(&self, y: Point) -> Circle {
        let r = self.sites.iter().map(|s| s.dist(y)).fold(0.0, f64::max);
        Circle { center: y, radius: r }
    }

    /// Site farthest from `y` (lowest index on ties).
    pub fn farthest_site(&self, y: Point) -> usize {
        let mut best = (f64::MIN, 0);
        for (i, s) in self.sites.iter().enumerate() {
            let d = s.dist(y);
            if d > best.0 {
                best = (d, i);
            }
        }
        best.1
    }

    pub fn node_location(&self, v: usize) -> DiagramLocation {
        let n = &self.nodes[v];
        let s = &n.defining_sites;
        DiagramLocation {
            kind: LocationKind::Node(v),
            position: n.position,
            sites: (s[0], s[1 % s.len()]),
        }
    }

    /// Point where `ray`, walked from its anchor, meets the boundary of the
    /// region of `site`.
    pub fn ray_exit_of_region(&self, site: usize, ray: &DirectedLine) -> Result<DiagramLocation> {
        let region = self.regions.get(site).ok_or(Error::NoIntersection)?;
        let first = &self.rays[region.first_ray];
        let last = &self.rays[region.last_ray];
        let d = ray.direction;
        let scale = self.scale().max(ray.anchor.magnitude());
        let tol = EPS_GEOM * scale;
        let side = |p: Point| d.cross(p - ray.anchor);
        let k = region.nodes.len();
        // Chain sides: far end of the first ray, nodes, far end of the last ray.
        let start_side = d.cross(first.direction);
        let end_side = d.cross(last.direction);
        let side_at = |i: usize| side(self.nodes[region.nodes[i]].position);

        // An exact hit on a node.
        let hit_node = |i: usize| -> Option<DiagramLocation> {
            let v = region.nodes[i];
            let pos = self.nodes[v].position;
            if side(pos).abs() <= tol && ray.param_of(pos) >= -tol {
                Some(self.node_location(v))
            } else {
                None
            }
        };

        let sgn = |x: f64| x > 0.0;
        // Find consecutive chain elements with differing sides.
        let (lo, hi): (Option<usize>, Option<usize>) = if k == 0 {
            (None, None)
        } else if start_side != 0.0 && sgn(start_side) != sgn(side_at(0)) {
            (None, Some(0))
        } else if end_side != 0.0 && sgn(end_side) != sgn(side_at(k - 1)) {
            (Some(k - 1), None)
        } else {
            let s0 = sgn(side_at(0));
            if sgn(side_at(k - 1)) == s0 {
                // No crossing between nodes: check for a tangential node hit.
                return (0..k).find_map(hit_node).ok_or(Error::NoIntersection);
            }
            let (mut a, mut b) = (0usize, k - 1);
            while b - a > 1 {
                let m = (a + b) / 2;
                if sgn(side_at(m)) == s0 {
                    a = m;
                } else {
                    b = m;
                }
            }
            (Some(a), Some(b))
        };
        for i in [lo, hi].into_iter().flatten() {
            if let Some(loc) = hit_node(i) {
                return Ok(loc);
            }
        }
        let (p0, dir, kind) = match (lo, hi) {
            (None, Some(0)) => {
                let v = region.nodes[0];
                (self.nodes[v].position, first.direction, LocationKind::Ray(region.first_ray))
            }
            (Some(i), None) => {
                let v = region.nodes[i];
                (self.nodes[v].position, last.direction, LocationKind::Ray(region.last_ray))
            }
            (Some(a), Some(b)) => {
                let (x, y) = (region.nodes[a], region.nodes[b]);
                let child = if self.nodes[x].parent == Some(y) { x } else { y };
                let p0 = self.nodes[x].position;
                (p0, self.nodes[y].position - p0, LocationKind::Edge { child })
            }
            _ => {
                // Only rays: the two-site diagram has a single node.
                return Err(Error::NoIntersection);
            }
        };
        // Intersect anchor + t d with p0 + u dir.
        let denom = dir.cross(d);
        if denom == 0.0 {
            return Err(Error::NoIntersection);
        }
        let u = (ray.anchor - p0).cross(d) / denom;
        let u = match kind {
            LocationKind::Edge { .. } => u.clamp(0.0, 1.0),
            _ => u.max(0.0),
        };
        let position = p0 + dir * u;
        if ray.param_of(position) < -tol {
            return Err(Error::NoIntersection);
        }
        let sites = match kind {
            LocationKind::Ray(r) => self.rays[r].sites,
            LocationKind::Edge { child } => self.nodes[child].parent_sites.unwrap(),
            LocationKind::Node(_) => unreachable!(),
        };
        let loc = DiagramLocation { kind, position, sites };
        Ok(self.snap(loc, tol))
    }

    /// Replaces a location within `tol` of an endpoint node by the node.
    fn snap(&self, loc: DiagramLocation, tol: f64) -> DiagramLocation {
        let ends: [Option<usize>; 2] = match loc.kind {
            LocationKind::Edge { child } => [Some(child), self.nodes[child].parent],
            LocationKind::Ray(r) => [Some(self.rays[r].origin), None],
            LocationKind::Node(_) => [None, None],
        };
        for v in ends.into_iter().flatten() {
            if self.nodes[v].position.dist(loc.position) <= tol {
                return self.node_location(v);
            }
        }
        loc
    }

    /// Coordinate scale for tolerances: every site lies in the enclosing
    /// circle, so this bounds the largest site magnitude within a factor 3.
    fn scale(&self) -> f64 {
        (self.mec.center.magnitude() + self.mec.radius).max(1.0)
    }

    /// Audits the structural invariants; an empty list means the tree is valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let h = self.sites.len();
        let scale = self.scale();
        let tol = |r: f64| CHECK_TOL * r.max(scale);
        if self.nodes.is_empty() || self.root >= self.nodes.len() {
            out.push(String::from("missing root"));
            return out;
        }
        if self.regions.len() != h {
            out.push(String::from("region count differs from site count"));
        }
        // Tree shape.
        let mut seen = alloc::vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &c in &self.nodes[v].children {
                if seen[c] || self.nodes[c].parent != Some(v) {
                    out.push(alloc::format!("bad child link {v}->{c}"));
                    continue;
                }
                if self.nodes[c].depth != self.nodes[v].depth + 1 {
                    out.push(alloc::format!("depth mismatch at {c}"));
                }
                seen[c] = true;
                reached += 1;
                queue.push_back(c);
            }
        }
        if reached != self.nodes.len() {
            out.push(alloc::format!("{} of {} nodes reachable", reached, self.nodes.len()));
        }
        if self.nodes[self.root].parent.is_some() {
            out.push(String::from("root has a parent"));
        }
        if self.nodes[self.root].position.dist(self.mec.center) > tol(self.mec.radius) {
            out.push(String::from("root is not the enclosing circle center"));
        }
        // Nodes: equidistant from defining sites, nothing farther.
        for (v, n) in self.nodes.iter().enumerate() {
            let rho = self.node_rho(v);
            for &s in &n.defining_sites {
                if (n.position.dist(self.sites[s]) - rho).abs() > tol(rho) {
                    out.push(alloc::format!("node {v} not equidistant from site {s}"));
                }
            }
            if self.min_pcircle_at(n.position).radius > rho + tol(rho) {
                out.push(alloc::format!("node {v} has a farther site"));
            }
            if let (Some(p), Some((a, b))) = (n.parent, n.parent_sites) {
                for x in [v, p] {
                    let pos = self.nodes[x].position;
                    let r = pos.dist(self.sites[a]);
                    if (pos.dist(self.sites[b]) - r).abs() > tol(r) {
                        out.push(alloc::format!("edge {v}-{p} leaves its bisector"));
                    }
                }
                if self.node_rho(p) > rho + tol(rho) {
                    out.push(alloc::format!("radius decreases from {p} to {v}"));
                }
            } else if n.parent.is_some() {
                out.push(alloc::format!("node {v} lacks parent sites"));
            }
        }
        // Rays: perpendicular to their site pair, radius growing outward.
        for (i, r) in self.rays.iter().enumerate() {
            let (a, b) = r.sites;
            let chord = self.sites[b] - self.sites[a];
            if r.direction.dot(chord).abs() > CHECK_TOL * chord.norm() {
                out.push(alloc::format!("ray {i} is not on its bisector"));
            }
            let o = self.nodes[r.origin].position;
            let rho = o.dist(self.sites[a]);
            if (o.dist(self.sites[b]) - rho).abs() > tol(rho) {
                out.push(alloc::format!("ray {i} origin off its bisector"));
            }
            if r.direction.dot(o - self.sites[a].midpoint(self.sites[b])) < -tol(rho) {
                out.push(alloc::format!("ray {i} points toward smaller circles"));
            }
            if !self.nodes[r.origin].rays.contains(&i) {
                out.push(alloc::format!("ray {i} not listed at its origin"));
            }
        }
        if self.rays.len() != h {
            out.push(String::from("ray count differs from site count"));
        }
        out
    }
}

enum Link {
    Finite(usize, usize, (usize, usize)),
    Ray(usize),
}

struct Builder {
    sites: Vec<Point>,
    nodes: Vec<Node>,
    rays: Vec<Ray>,
    regions: Vec<RegionBoundary>,
    links: Vec<Link>,
    root: usize,
}

fn blank_node(position: Point, defining_sites: Vec<usize>) -> Node {
    Node {
        position,
        defining_sites,
        parent: None,
        parent_sites: None,
        children: Vec::new(),
        rays: Vec::new(),
        depth: 0,
    }
}

fn ray_direction(sites: &[Point], a: usize, b: usize) -> Point {
    (sites[b] - sites[a]).rot_ccw().normalized().unwrap()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

impl Builder {
    fn two_sites(sites: &[Point]) -> Self {
        let mid = sites[0].midpoint(sites[1]);
        let nodes = alloc::vec![blank_node(mid, alloc::vec![0, 1])];
        let rays = alloc::vec![
            Ray { origin: 0, direction: ray_direction(sites, 0, 1), sites: (0, 1) },
            Ray { origin: 0, direction: ray_direction(sites, 1, 0), sites: (1, 0) },
        ];
        let regions = alloc::vec![
            RegionBoundary { first_ray: 0, nodes: alloc::vec![0], last_ray: 1 },
            RegionBoundary { first_ray: 1, nodes: alloc::vec![0], last_ray: 0 },
        ];
        Builder {
            sites: sites.to_vec(),
            nodes,
            rays,
            regions,
            links: alloc::vec![Link::Ray(0), Link::Ray(1)],
            root: 0,
        }
    }

    fn from_triangulation(sites: &[Point], seed: u64) -> Self {
        let h = sites.len();
        let scale = sites.iter().fold(1.0f64, |s, p| s.max(p.magnitude()));
        let tri = farthest_delaunay(sites, seed);
        let tris = tri.triangles();
        let tri_id: BTreeMap<[usize; 3], usize> = tris.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let canon = |u: usize, v: usize, w: usize| {
            let t = [u, v, w];
            let k = (0..3).min_by_key(|&i| t[i]).unwrap();
            [t[k], t[(k + 1) % 3], t[(k + 2) % 3]]
        };
        let tri_of_edge = |u: usize, v: usize| -> Option<usize> {
            tri.apex.get(&(u, v)).map(|&w| tri_id[&canon(u, v, w)])
        };
        let centers: Vec<Point> = tris
            .iter()
            .map(|&[a, b, c]| circumcenter_unchecked(sites[a], sites[b], sites[c]))
            .collect();

        // Merge triangles sharing a circumcircle into one node.
        let mut uf = UnionFind((0..tris.len()).collect());
        for (&(u, v), &w) in &tri.apex {
            if u < v {
                if let Some(&x) = tri.apex.get(&(v, u)) {
                    let (t1, t2) = (tri_id[&canon(u, v, w)], tri_id[&canon(v, u, x)]);
                    let exact = crate::predicates::incircle(sites[v], sites[u], sites[x], sites[w]) == 0.0;
                    if exact || centers[t1].dist(centers[t2]) <= EPS_GEOM * scale {
                        uf.union(t1, t2);
                    }
                }
            }
        }
        let mut node_of_tri = alloc::vec![usize::MAX; tris.len()];
        let mut nodes: Vec<Node> = Vec::new();
        for t in 0..tris.len() {
            let r = uf.find(t);
            if node_of_tri[r] == usize::MAX {
                node_of_tri[r] = nodes.len();
                nodes.push(blank_node(centers[r], Vec::new()));
            }
            node_of_tri[t] = node_of_tri[r];
        }
        for (t, &[a, b, c]) in tris.iter().enumerate() {
            let ds = &mut nodes[node_of_tri[t]].defining_sites;
            ds.extend_from_slice(&[a, b, c]);
        }
        for n in &mut nodes {
            n.defining_sites.sort_unstable();
            n.defining_sites.dedup();
        }

        let mut links = Vec::new();
        for (&(u, v), &w) in &tri.apex {
            let t1 = node_of_tri[tri_id[&canon(u, v, w)]];
            match tri.apex.get(&(v, u)) {
                Some(&x) if u < v => {
                    let t2 = node_of_tri[tri_id[&canon(v, u, x)]];
                    if t1 != t2 {
                        links.push(Link::Finite(t1, t2, (u, v)));
                    }
                }
                Some(_) => {}
                None => {
                    // Hull edge u -> u + 1.
                    debug_assert_eq!(v, (u + 1) % h);
                }
            }
        }
        let mut rays = Vec::with_capacity(h);
        for u in 0..h {
            let v = (u + 1) % h;
            let t = tri_of_edge(u, v).expect("hull edge without triangle");
            rays.push(Ray {
                origin: node_of_tri[t],
                direction: ray_direction(sites, u, v),
                sites: (u, v),
            });
            links.push(Link::Ray(u));
        }

        // Region boundaries: fan of triangles around each site, from the one
        // on hull edge (i, i + 1) to the one on (i - 1, i).
        let mut regions = Vec::with_capacity(h);
        for i in 0..h {
            let mut list: Vec<usize> = Vec::new();
            let mut b = (i + 1) % h;
            let stop = (i + h - 1) % h;
            loop {
                let w = tri.apex[&(i, b)];
                let node = node_of_tri[tri_id[&canon(i, b, w)]];
                if list.last() != Some(&node) {
                    list.push(node);
                }
                if w == stop {
                    break;
                }
                b = w;
            }
            regions.push(RegionBoundary {
                first_ray: i,
                nodes: list,
                last_ray: stop,
            });
        }
        Builder {
            sites: sites.to_vec(),
            nodes,
            rays,
            regions,
            links,
            root: 0,
        }
    }

    fn rho(&self, v: usize) -> f64 {
        let n = &self.nodes[v];
        n.position.dist(self.sites[n.defining_sites[0]])
    }

    /// Picks the root at `center`, splitting an edge or ray when the center
    /// lies inside it, then orients the tree away from it.
    fn root_and_orient(&mut self) {
        let scale = self.sites.iter().fold(1.0f64, |s, p| s.max(p.magnitude()));
        let tol = EPS_GEOM * scale;
        let best = (0..self.nodes.len())
            .min_by(|&a, &b| self.rho(a).total_cmp(&self.rho(b)))
            .unwrap();
        self.root = best;
        let mut split: Option<(usize, Point, (usize, usize))> = None;
        for (li, link) in self.links.iter().enumerate() {
            match *link {
                Link::Finite(a, b, (u, v)) if a == best || b == best => {
                    let (pa, pb) = (self.nodes[a].position, self.nodes[b].position);
                    let m = self.sites[u].midpoint(self.sites[v]);
                    let d = pb - pa;
                    let t = (m - pa).dot(d) / d.norm2();
                    let len = d.norm();
                    if t * len > tol && (1.0 - t) * len > tol {
                        split = Some((li, m, (u, v)));
                    }
                }
                Link::Ray(r) if self.rays[r].origin == best => {
                    let ray = &self.rays[r];
                    let (u, v) = ray.sites;
                    let m = self.sites[u].midpoint(self.sites[v]);
                    if (m - self.nodes[best].position).dot(ray.direction) > tol {
                        split = Some((li, m, (u, v)));
                    }
                }
                _ => {}
            }
        }
        if let Some((li, m, (u, v))) = split {
            let r = self.nodes.len();
            self.nodes.push(blank_node(m, alloc::vec![u.min(v), u.max(v)]));
            self.root = r;
            match self.links[li] {
                Link::Finite(a, b, sp) => {
                    self.links[li] = Link::Finite(a, r, sp);
                    self.links.push(Link::Finite(r, b, sp));
                    for reg in [u, v] {
                        let nodes = &mut self.regions[reg].nodes;
                        if let Some(k) = (0..nodes.len().saturating_sub(1)).find(|&k| {
                            (nodes[k] == a && nodes[k + 1] == b) || (nodes[k] == b && nodes[k + 1] == a)
                        }) {
                            nodes.insert(k + 1, r);
                        }
                    }
                }
                Link::Ray(ray) => {
                    let origin = self.rays[ray].origin;
                    self.rays[ray].origin = r;
                    self.links.push(Link::Finite(origin, r, (u, v)));
                    for reg in [u, v] {
                        let rb = &mut self.regions[reg];
                        if rb.first_ray == ray {
                            rb.nodes.insert(0, r);
                        }
                        if rb.last_ray == ray {
                            rb.nodes.push(r);
                        }
                    }
                }
            }
        }

        // Orient: BFS from the root over finite links.
        let n = self.nodes.len();
        let mut adj: Vec<Vec<(usize, (usize, usize))>> = alloc::vec![Vec::new(); n];
        for link in &self.links {
            match *link {
                Link::Finite(a, b, s) => {
                    adj[a].push((b, s));
                    adj[b].push((a, s));
                }
                Link::Ray(r) => {
                    let o = self.rays[r].origin;
                    self.nodes[o].rays.push(r);
                }
            }
        }
        for node in &mut self.nodes {
            node.rays.sort_unstable();
        }
        let mut seen = alloc::vec![false; n];
        seen[self.root] = true;
        let mut queue = VecDeque::from([self.root]);
        while let Some(v) = queue.pop_front() {
            let mut kids: Vec<(usize, (usize, usize))> = adj[v].iter().copied().filter(|&(c, _)| !seen[c]).collect();
            kids.sort_unstable();
            for (c, s) in kids {
                seen[c] = true;
                self.nodes[c].parent = Some(v);
                self.nodes[c].parent_sites = Some(s);
                self.nodes[c].depth = self.nodes[v].depth + 1;
                self.nodes[v].children.push(c);
                queue.push_back(c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn two_point_diagram() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[t.root].position, p(1.0, 0.0));
        assert_eq!(t.rays.len(), 2);
        let dirs: Vec<Point> = t.rays.iter().map(|r| r.direction).collect();
        assert!(dirs.contains(&p(0.0, 1.0)) && dirs.contains(&p(0.0, -1.0)));
        assert!(t.validate().is_empty(), "{:?}", t.validate());
        assert_eq!(t.node_rho(t.root), 1.0);
        let loc = DiagramLocation {
            kind: LocationKind::Ray(1),
            position: p(1.0, -0.75),
            sites: t.rays[1].sites,
        };
        assert!((t.rho(&loc) - 1.25).abs() < 1e-15);
    }

    #[test]
    fn triangle_diagram() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)]).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert!(t.nodes[t.root].position.dist(p(2.0, 5.0 / 6.0)) < 1e-12);
        assert!((t.node_rho(t.root) - 13.0 / 6.0).abs() < 1e-12);
        assert_eq!(t.rays.len(), 3);
        assert!(t.validate().is_empty(), "{:?}", t.validate());
    }

    #[test]
    fn obtuse_triangle_splits_edge() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(4.0, 0.0), p(2.0, 1.0)]).unwrap();
        assert_eq!(t.nodes.len(), 2);
        let root = &t.nodes[t.root];
        assert!(root.position.dist(p(2.0, 0.0)) < 1e-12);
        assert_eq!(root.defining_sites.len(), 2);
        let other = 1 - t.root;
        assert!(t.nodes[other].position.dist(p(2.0, -1.5)) < 1e-12);
        assert_eq!(t.nodes[other].parent, Some(t.root));
        assert!(t.validate().is_empty(), "{:?}", t.validate());
    }

    #[test]
    fn min_pcircle_examples() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert_eq!(t.min_pcircle_at(p(1.0, 0.0)).radius, 1.0);
        assert_eq!(t.min_pcircle_at(p(0.0, 0.0)).radius, 2.0);
        // From (2, 0) the apex (2, 3) is the farthest site.
        let t = FpvdTree::build(&[p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)]).unwrap();
        assert_eq!(t.min_pcircle_at(p(2.0, 0.0)).radius, 3.0);
    }

    #[test]
    fn square_is_one_degree_four_node() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[0].defining_sites, alloc::vec![0, 1, 2, 3]);
        assert!(t.validate().is_empty(), "{:?}", t.validate());
    }

    #[test]
    fn ray_exit_triangle_hits_root() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)]).unwrap();
        let top = t.sites.iter().position(|&s| s == p(2.0, 3.0)).unwrap();
        let ray = DirectedLine::new(p(2.0, 3.0), p(0.0, -1.0)).unwrap();
        let loc = t.ray_exit_of_region(top, &ray).unwrap();
        assert_eq!(loc.kind, LocationKind::Node(t.root));
    }

    #[test]
    fn ray_exit_two_points_and_misuse() {
        let t = FpvdTree::build(&[p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        let left = t.sites.iter().position(|&s| s == p(0.0, 0.0)).unwrap();
        // Slightly tilted downward ray from (0, 0) toward the region x > 1.
        let (s, c) = crate::num::sin_cos(1e-3);
        let dir = p(0.0, -1.0).rotate(c, s);
        let loc = t.ray_exit_of_region(left, &DirectedLine::new(p(0.0, 0.0), dir).unwrap()).unwrap();
        assert!((loc.position.x - 1.0).abs() < 1e-9 && loc.position.y < -100.0);
        assert!(matches!(loc.kind, LocationKind::Ray(_)));
        // Aimed away from the region.
        let away = DirectedLine::new(p(0.0, 0.0), p(-1.0, 0.0)).unwrap();
        assert_eq!(t.ray_exit_of_region(left, &away), Err(Error::NoIntersection));
    }
}
