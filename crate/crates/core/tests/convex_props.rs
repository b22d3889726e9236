//! Logarithmic convex polygon operations against linear scans.

use circsep_core::convex::{closest_pair, internal_tangents, make_polygon, Containment, ConvexPolygon};
use circsep_core::geom::{dist_point_segment, Point, Segment};
use circsep_core::oracle::brute_shape_distance;
use circsep_core::engine::QueryShape;
use circsep_core::sample;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn polygon(seed: u64, m: usize) -> ConvexPolygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample::convex_polygon(&mut rng, m, Point::new(0.3, -0.2), 1.7).expect("sampled polygon")
}

fn edges(p: &ConvexPolygon) -> Vec<Segment> {
    (0..p.len()).map(|i| Segment { a: p.vertex(i), b: p.vertex(i + 1) }).collect()
}

/// Smallest signed distance to an edge line, positive inside.
fn min_side(p: &ConvexPolygon, x: Point) -> f64 {
    edges(p)
        .iter()
        .map(|s| (s.b - s.a).cross(x - s.a) / (s.b - s.a).norm())
        .fold(f64::INFINITY, f64::min)
}

fn point_strategy() -> impl Strategy<Value = Point> {
    (-4.0..4.0f64, -4.0..4.0f64).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn containment_matches_edge_scan(seed in any::<u64>(), m in 3usize..200, x in point_strategy()) {
        let p = polygon(seed, m);
        let s = min_side(&p, x);
        let got = p.contains_point(x);
        if s > 1e-7 {
            prop_assert_eq!(got, Containment::Inside);
        } else if s < -1e-7 {
            prop_assert_eq!(got, Containment::Outside);
        }
    }

    #[test]
    fn distance_and_closest_point_match_scan(seed in any::<u64>(), m in 3usize..200, x in point_strategy()) {
        let p = polygon(seed, m);
        let want = brute_shape_distance(&QueryShape::Polygon(p.clone()), x);
        let got = p.distance_to(x);
        prop_assert!((got - want).abs() <= 1e-9 * 4.0, "{} vs {}", got, want);
        let c = p.closest_point(x);
        prop_assert!((c.dist(x) - want).abs() <= 1e-9 * 4.0);
        prop_assert!(min_side(&p, c) >= -1e-9);
    }

    #[test]
    fn extreme_vertex_matches_scan(seed in any::<u64>(), m in 3usize..200, angle in 0.0..std::f64::consts::TAU) {
        let p = polygon(seed, m);
        let dir = Point::new(angle.cos(), angle.sin());
        let best = p.vertices().iter().map(|v| v.dot(dir)).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!((p.vertex(p.extreme_vertex(dir)).dot(dir) - best).abs() <= 1e-12);
    }

    #[test]
    fn closest_pair_matches_edge_pairs(seed in any::<u64>(), m in 3usize..120, k in 3usize..120) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = polygon(seed ^ 0x55, m);
        let b = sample::disjoint_polygon(&mut rng, &a, k, 2.0);
        let cp = closest_pair(&a, &b).expect("disjoint");
        let mut want = f64::INFINITY;
        for e in edges(&a) {
            for v in b.vertices() {
                want = want.min(dist_point_segment(*v, &e));
            }
        }
        for e in edges(&b) {
            for v in a.vertices() {
                want = want.min(dist_point_segment(*v, &e));
            }
        }
        prop_assert!((cp.dist - want).abs() <= 1e-9 * 4.0, "{} vs {}", cp.dist, want);
        prop_assert!((cp.on_a.dist(cp.on_b) - cp.dist).abs() <= 1e-12 * 4.0);
    }

    #[test]
    fn internal_tangents_separate_and_touch(seed in any::<u64>(), m in 3usize..120, k in 3usize..120) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = polygon(seed ^ 0xaa, m);
        let b = sample::disjoint_polygon(&mut rng, &a, k, 2.0);
        prop_assume!(closest_pair(&a, &b).is_some_and(|c| c.dist > 1e-6));
        let t = internal_tangents(&a, &b).expect("disjoint");
        for (line, q) in [(t.line, t.q), (t.line2, t.q2)] {
            let side = |x: Point| line.direction.cross(x - line.anchor);
            let (amin, amax) = a.vertices().iter().map(|&v| side(v)).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)));
            let (bmin, bmax) = b.vertices().iter().map(|&v| side(v)).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)));
            let tol = 1e-8;
            // One polygon on each side, each touching the line.
            let a_left = amin >= -tol && bmax <= tol;
            let a_right = amax <= tol && bmin >= -tol;
            prop_assert!(a_left || a_right, "a [{}, {}] b [{}, {}]", amin, amax, bmin, bmax);
            prop_assert!(amin.abs().min(amax.abs()) <= tol && bmin.abs().min(bmax.abs()) <= tol);
            prop_assert!(side(q).abs() <= tol);
            prop_assert!(b.vertices().contains(&q));
        }
        prop_assert_eq!(b.vertex(t.q_index), t.q);
        prop_assert_eq!(b.vertex(t.q2_index), t.q2);
    }
}

#[test]
fn polygon_construction_drops_collinear_and_repeated() {
    let p = make_polygon(&[
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(2.0, 2.0),
        Point::new(2.0, 2.0),
        Point::new(0.0, 2.0),
    ])
    .unwrap();
    assert_eq!(p.len(), 4);
}
