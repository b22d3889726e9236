//! Farthest-point Delaunay triangulation of points in convex position.
//!
//! Points are removed from the polygon in random order while their
//! neighbours are recorded, then reinserted in reverse. Each reinsertion adds
//! one ear outside the current polygon and restores the farthest-point
//! empty-circle property with edge flips.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::Point;
use crate::predicates::incircle;

pub(crate) struct Triangulation {
    /// Directed edge `(u, v)` to the apex `w` of the counter-clockwise
    /// triangle `(u, v, w)`.
    pub apex: BTreeMap<(usize, usize), usize>,
}

impl Triangulation {
    fn add(&mut self, a: usize, b: usize, c: usize) {
        self.apex.insert((a, b), c);
        self.apex.insert((b, c), a);
        self.apex.insert((c, a), b);
    }

    fn remove(&mut self, a: usize, b: usize, c: usize) {
        self.apex.remove(&(a, b));
        self.apex.remove(&(b, c));
        self.apex.remove(&(c, a));
    }

    /// Triangles as counter-clockwise triples, each listed once with its
    /// smallest index first.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        self.apex
            .iter()
            .filter(|(&(u, v), &w)| u < v && u < w)
            .map(|(&(u, v), &w)| [u, v, w])
            .collect()
    }
}

/// `pts` must be strictly convex and counter-clockwise, with at least 3 points.
pub(crate) fn farthest_delaunay(pts: &[Point], seed: u64) -> Triangulation {
    let h = pts.len();
    debug_assert!(h >= 3);
    let mut order: Vec<usize> = (0..h).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut prev: Vec<usize> = (0..h).map(|i| (i + h - 1) % h).collect();
    let mut next: Vec<usize> = (0..h).map(|i| (i + 1) % h).collect();
    let mut recorded = alloc::vec![(0usize, 0usize); h];
    for &p in order[3..].iter().rev() {
        let (a, b) = (prev[p], next[p]);
        recorded[p] = (a, b);
        next[a] = b;
        prev[b] = a;
    }

    let mut t = Triangulation { apex: BTreeMap::new() };
    let a = order[0];
    t.add(a, next[a], next[next[a]]);

    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &p in &order[3..] {
        let (a, b) = recorded[p];
        t.add(a, p, b);
        stack.push((b, a));
        // Triangle (u, v, p) is counter-clockwise; check the edge u -> v.
        while let Some((u, v)) = stack.pop() {
            let Some(&w) = t.apex.get(&(v, u)) else {
                continue;
            };
            if incircle(pts[v], pts[u], pts[w], pts[p]) < 0.0 {
                t.remove(u, v, p);
                t.remove(v, u, w);
                t.add(u, w, p);
                t.add(w, v, p);
                stack.push((u, w));
                stack.push((w, v));
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::circumcenter;

    #[test]
    fn every_circumcircle_encloses_all_points() {
        let h = 40;
        let pts: Vec<Point> = (0..h)
            .map(|i| {
                let a = core::f64::consts::TAU * (i as f64 + 0.3 * ((i * 7 % 5) as f64)) / h as f64;
                let (s, c) = crate::num::sin_cos(a);
                Point::new(3.0 * c, 2.0 * s)
            })
            .collect();
        for seed in 0..5 {
            let t = farthest_delaunay(&pts, seed);
            let tris = t.triangles();
            assert_eq!(tris.len(), h - 2);
            for [a, b, c] in tris {
                let o = circumcenter(pts[a], pts[b], pts[c]).unwrap();
                let r = o.dist(pts[a]);
                assert!(pts.iter().all(|p| p.dist(o) <= r * (1.0 + 1e-9)));
            }
        }
    }
}
