//! Seeded random instances shared by tests, the acceptance suite and the
//! benchmark.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::Rng;

use crate::convex::{closest_pair, make_polygon, separating_normal, ConvexPolygon};
use crate::geom::{Circle, Point};
use crate::num::sin_cos;

pub fn uniform_square<R: Rng>(rng: &mut R, n: usize, half: f64) -> Vec<Point> {
    (0..n)
        .map(|_| Point::new(rng.gen_range(-half..half), rng.gen_range(-half..half)))
        .collect()
}

/// `n` points at random angles on an ellipse with semi-axes `a` and `b`:
/// every point is a hull vertex and the diagram has depth growing with `n`.
pub fn ellipse<R: Rng>(rng: &mut R, n: usize, a: f64, b: f64) -> Vec<Point> {
    (0..n)
        .map(|_| {
            let (s, c) = sin_cos(rng.gen_range(0.0..TAU));
            Point::new(a * c, b * s)
        })
        .collect()
}

/// Points of a small integer grid: many collinear and cocircular subsets.
pub fn grid<R: Rng>(rng: &mut R, n: usize, side: i32) -> Vec<Point> {
    (0..n)
        .map(|_| Point::new(rng.gen_range(0..side) as f64, rng.gen_range(0..side) as f64))
        .collect()
}

/// Vertices of a regular `n`-gon (all cocircular).
pub fn regular_polygon(n: usize, radius: f64, phase: f64) -> Vec<Point> {
    (0..n)
        .map(|i| {
            let (s, c) = sin_cos(phase + TAU * i as f64 / n as f64);
            Point::new(radius * c, radius * s)
        })
        .collect()
}

/// Random convex polygon with up to `m` vertices: points at random angles
/// on a circle, stretched along a random axis. `None` when a few attempts
/// all collapse, which happens when `radius` is near rounding level
/// relative to `center`.
pub fn convex_polygon<R: Rng>(rng: &mut R, m: usize, center: Point, radius: f64) -> Option<ConvexPolygon> {
    let stretch = rng.gen_range(0.25..1.0);
    let (s, c) = sin_cos(rng.gen_range(0.0..TAU));
    for _ in 0..8 {
        let mut angles: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point> = angles
            .iter()
            .map(|&a| {
                let (sa, ca) = sin_cos(a);
                let local = Point::new(ca, stretch * sa);
                center + local.rotate(c, s) * radius
            })
            .collect();
        if let Ok(p) = make_polygon(&pts) {
            if p.len() >= 3.min(m) {
                return Some(p);
            }
        }
    }
    None
}

fn outside_center<R: Rng>(rng: &mut R, hull: &ConvexPolygon, reach: f64) -> (Point, f64) {
    let o = hull.interior_point();
    let span = hull.scale();
    loop {
        let (s, c) = sin_cos(rng.gen_range(0.0..TAU));
        let d = rng.gen_range(0.0..reach) * span;
        let x = o + Point::new(c, s) * d;
        let gap = hull.distance_to(x);
        if gap > 1e-6 * span {
            return (x, gap);
        }
    }
}

/// A point outside `hull`, within `reach` hull scales of its interior.
pub fn disjoint_point<R: Rng>(rng: &mut R, hull: &ConvexPolygon, reach: f64) -> Point {
    outside_center(rng, hull, reach).0
}

pub fn disjoint_circle<R: Rng>(rng: &mut R, hull: &ConvexPolygon, reach: f64) -> Circle {
    let (x, gap) = outside_center(rng, hull, reach);
    Circle {
        center: x,
        radius: gap * rng.gen_range(0.05..0.95),
    }
}

/// Convex polygon with `m` sampled vertices whose interior misses `hull`.
pub fn disjoint_polygon<R: Rng>(rng: &mut R, hull: &ConvexPolygon, m: usize, reach: f64) -> ConvexPolygon {
    loop {
        let (x, gap) = outside_center(rng, hull, reach);
        let size = gap * rng.gen_range(0.05..1.6);
        let Some(q) = convex_polygon(rng, m, x, size) else {
            continue;
        };
        // Within the gap the polygon cannot reach the hull.
        if size < gap || (separating_normal(hull, &q).is_some() && closest_pair(hull, &q).is_some_and(|cp| cp.dist > 0.0)) {
            return q;
        }
    }
}
