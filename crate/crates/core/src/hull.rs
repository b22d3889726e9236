//! Convex hull by monotone chain with exact orientation tests.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{orientation_exact, Orientation, Point, EPS_GEOM};

/// Hull vertices in counter-clockwise order with their input indices.
/// Collinear boundary points are excluded.
#[derive(Clone, Debug, PartialEq)]
pub struct Hull {
    pub points: Vec<Point>,
    pub indices: Vec<usize>,
}

/// Distinct points of `points` (within `EPS_GEOM` of the input scale),
/// returned as input indices sorted lexicographically.
pub fn distinct_sorted(points: &[Point]) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let scale = points.iter().fold(1.0f64, |s, p| s.max(p.magnitude()));
    let tol = EPS_GEOM * scale;
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        let (p, q) = (points[a], points[b]);
        p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y)).then(a.cmp(&b))
    });
    let mut out: Vec<usize> = Vec::with_capacity(idx.len());
    for i in idx {
        // Near-duplicates need not be adjacent in sorted order, but they are
        // within `tol` in x, so a short backward window suffices.
        let p = points[i];
        let dup = out
            .iter()
            .rev()
            .take_while(|&&j| p.x - points[j].x <= tol)
            .any(|&j| points[j].dist(p) <= tol);
        if !dup {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn convex_hull(points: &[Point]) -> Result<Hull> {
    let order = distinct_sorted(points)?;
    if order.len() == 1 {
        return Ok(Hull {
            points: alloc::vec![points[order[0]]],
            indices: order,
        });
    }
    let mut chain: Vec<usize> = Vec::with_capacity(2 * order.len());
    let keeps_left = |chain: &Vec<usize>, k: usize| {
        let n = chain.len();
        orientation_exact(points[chain[n - 2]], points[chain[n - 1]], points[k]) == Orientation::Ccw
    };
    for &k in &order {
        while chain.len() >= 2 && !keeps_left(&chain, k) {
            chain.pop();
        }
        chain.push(k);
    }
    let lower_len = chain.len() + 1;
    for &k in order.iter().rev().skip(1) {
        while chain.len() >= lower_len && !keeps_left(&chain, k) {
            chain.pop();
        }
        chain.push(k);
    }
    chain.pop();
    if chain.len() == 2 && chain[0] == chain[1] {
        chain.pop();
    }
    Ok(Hull {
        points: chain.iter().map(|&i| points[i]).collect(),
        indices: chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn square_with_interior_and_edge_points() {
        let pts = [
            p(0.0, 0.0),
            p(1.0, 0.0),
            p(2.0, 0.0),
            p(2.0, 2.0),
            p(1.0, 1.0),
            p(0.0, 2.0),
            p(0.0, 2.0),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.points, alloc::vec![p(0.0, 0.0), p(2.0, 0.0), p(2.0, 2.0), p(0.0, 2.0)]);
        assert_eq!(h.indices, alloc::vec![0, 2, 3, 5]);
    }

    #[test]
    fn collinear_and_single() {
        let h = convex_hull(&[p(1.0, 1.0), p(0.0, 0.0), p(2.0, 2.0)]).unwrap();
        assert_eq!(h.points, alloc::vec![p(0.0, 0.0), p(2.0, 2.0)]);
        let h = convex_hull(&[p(1.0, 1.0), p(1.0, 1.0)]).unwrap();
        assert_eq!(h.points.len(), 1);
        assert_eq!(convex_hull(&[]), Err(Error::EmptyInput));
    }
}
