//! Minimum enclosing circle by randomized incremental construction.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{circumcenter_unchecked, orientation, Circle, Orientation, Point};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Debug, PartialEq)]
pub struct MecResult {
    pub circle: Circle,
    /// Indices into the input of the 1 to 3 points on the boundary that
    /// determine the circle.
    pub support: Vec<usize>,
}

pub fn minimum_enclosing_circle(points: &[Point]) -> Result<MecResult> {
    minimum_enclosing_circle_seeded(points, DEFAULT_SEED)
}

#[inline]
fn outside(c: &Circle, p: Point) -> bool {
    c.center.dist(p) > c.radius * (1.0 + 1e-12) + 1e-300
}

fn diametral(a: Point, b: Point) -> Circle {
    let center = a.midpoint(b);
    Circle {
        center,
        radius: center.dist(a).max(center.dist(b)),
    }
}

/// Smallest circle through `a`, `b` with `c` on its boundary; collinear
/// triples fall back to the diametral circle of the farthest pair.
fn through_three(pts: &[Point], i: usize, j: usize, k: usize) -> (Circle, Vec<usize>) {
    let (a, b, c) = (pts[i], pts[j], pts[k]);
    if orientation(a, b, c) == Orientation::Collinear {
        let pairs = [(i, j), (i, k), (j, k)];
        let (x, y) = pairs
            .into_iter()
            .max_by(|&(x, y), &(u, v)| pts[x].dist(pts[y]).total_cmp(&pts[u].dist(pts[v])))
            .unwrap();
        return (diametral(pts[x], pts[y]), alloc::vec![x, y]);
    }
    let center = circumcenter_unchecked(a, b, c);
    let radius = center.dist(a).max(center.dist(b)).max(center.dist(c));
    (Circle { center, radius }, alloc::vec![i, j, k])
}

pub fn minimum_enclosing_circle_seeded(points: &[Point], seed: u64) -> Result<MecResult> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let pts: Vec<Point> = order.iter().map(|&i| points[i]).collect();

    let mut c = Circle { center: pts[0], radius: 0.0 };
    let mut support = alloc::vec![0usize];
    for i in 1..pts.len() {
        if !outside(&c, pts[i]) {
            continue;
        }
        c = Circle { center: pts[i], radius: 0.0 };
        support = alloc::vec![i];
        for j in 0..i {
            if !outside(&c, pts[j]) {
                continue;
            }
            c = diametral(pts[i], pts[j]);
            support = alloc::vec![i, j];
            for k in 0..j {
                if outside(&c, pts[k]) {
                    (c, support) = through_three(&pts, i, j, k);
                }
            }
        }
    }
    // A triple whose circle is not minimal (obtuse) cannot survive the
    // construction, but keep the support minimal when two points suffice.
    if support.len() == 3 {
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            let d = diametral(pts[support[x]], pts[support[y]]);
            if d.radius <= c.radius * (1.0 + 1e-12) && pts.iter().all(|&p| !outside(&d, p)) {
                c = d;
                support = alloc::vec![support[x], support[y]];
                break;
            }
        }
    }
    Ok(MecResult {
        circle: c,
        support: support.into_iter().map(|k| order[k]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn mec_examples() {
        let r = minimum_enclosing_circle(&[p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert_eq!(r.circle.center, p(1.0, 0.0));
        assert_eq!(r.circle.radius, 1.0);
        assert_eq!(r.support.len(), 2);

        let r = minimum_enclosing_circle(&[p(0.0, 0.0), p(4.0, 0.0), p(2.0, 3.0)]).unwrap();
        assert!(r.circle.center.dist(p(2.0, 5.0 / 6.0)) < 1e-12);
        assert!((r.circle.radius - 13.0 / 6.0).abs() < 1e-12);
        assert_eq!(r.support.len(), 3);

        let r = minimum_enclosing_circle(&[p(0.0, 0.0), p(4.0, 0.0), p(2.0, 1.0)]).unwrap();
        assert!(r.circle.center.dist(p(2.0, 0.0)) < 1e-12);
        assert!((r.circle.radius - 2.0).abs() < 1e-12);
        let mut s = r.support.clone();
        s.sort();
        assert_eq!(s, alloc::vec![0, 1]);

        assert_eq!(minimum_enclosing_circle(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn collinear_points() {
        let pts: Vec<Point> = (0..10).map(|i| p(i as f64, 2.0 * i as f64)).collect();
        let r = minimum_enclosing_circle(&pts).unwrap();
        assert!(r.circle.center.dist(p(4.5, 9.0)) < 1e-12);
    }
}
