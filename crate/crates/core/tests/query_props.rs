//! Engine answers against the enumeration oracle.

use circsep_core::engine::{Engine, QueryResult, QueryShape};
use circsep_core::geom::Point;
use circsep_core::oracle::{brute_min_separating_circle, brute_shape_distance};
use circsep_core::sample;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn points(kind: u8, rng: &mut ChaCha8Rng, n: usize) -> Vec<Point> {
    match kind % 4 {
        0 => sample::uniform_square(rng, n, 1.0),
        1 => sample::ellipse(rng, n, 2.0, 1.0),
        2 => sample::grid(rng, n, 5),
        _ => sample::regular_polygon(n, 1.0, 0.1),
    }
}

fn shape(which: u8, rng: &mut ChaCha8Rng, engine: &Engine, m: usize) -> QueryShape {
    match which % 3 {
        0 => QueryShape::Point(sample::disjoint_point(rng, engine.hull(), 2.5)),
        1 => QueryShape::Circle(sample::disjoint_circle(rng, engine.hull(), 2.5)),
        _ => QueryShape::Polygon(sample::disjoint_polygon(rng, engine.hull(), m, 2.5)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn matches_oracle(kind in 0u8..4, which in 0u8..3, seed in any::<u64>(), n in 3usize..48, m in 3usize..24) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = points(kind, &mut rng, n);
        let engine = Engine::build(&pts).unwrap();
        let q = shape(which, &mut rng, &engine, m);
        let got = engine.query(&q);
        let want = brute_min_separating_circle(&pts, &q).unwrap();
        match (&got, &want) {
            (QueryResult::Separating(a), QueryResult::Separating(b)) => {
                let r = b.circle.radius;
                prop_assert!((a.circle.radius - r).abs() <= 1e-6 * r, "{:?} vs {:?}", a, b);
                prop_assert!(a.circle.center.dist(b.circle.center) <= 1e-6 * r);
                prop_assert_eq!(a.trivial_mec, b.trivial_mec);
                prop_assert!(!a.stats.fallback);
            }
            (QueryResult::NoSeparatingCircle, QueryResult::NoSeparatingCircle) => {}
            _ => prop_assert!(false, "{:?} vs {:?}", got, want),
        }
    }

    #[test]
    fn answers_enclose_and_separate(kind in 0u8..4, which in 0u8..3, seed in any::<u64>(), n in 3usize..400, m in 3usize..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = points(kind, &mut rng, n);
        let engine = Engine::build(&pts).unwrap();
        let q = shape(which, &mut rng, &engine, m);
        let s = engine.query(&q);
        let s = s.separation().expect("disjoint queries are separable");
        let (c, r) = (s.circle.center, s.circle.radius);
        let tol = 1e-9 * (r + c.magnitude());
        prop_assert!(pts.iter().all(|p| p.dist(c) <= r + tol));
        prop_assert!(brute_shape_distance(&q, c) >= r - tol);
        if let Some(t) = s.tangency {
            prop_assert!((t.dist(c) - r).abs() <= 1e-7 * r.max(1.0));
            prop_assert!(brute_shape_distance(&q, t) <= tol);
        }
    }

    #[test]
    fn overlapping_queries_have_no_answer(kind in 0u8..4, seed in any::<u64>(), n in 3usize..64, t in 0.0..1.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = points(kind, &mut rng, n);
        let engine = Engine::build(&pts).unwrap();
        let hull = engine.hull();
        prop_assume!(hull.len() >= 3);
        // A point strictly inside the hull, and shapes around it.
        let x = hull.interior_point().lerp(hull.vertex(0), 0.5 * t);
        prop_assert_eq!(engine.query(&QueryShape::Point(x)), QueryResult::NoSeparatingCircle);
        let d = circsep_core::geom::Circle { center: x, radius: 0.01 };
        prop_assert_eq!(engine.query(&QueryShape::Circle(d)), QueryResult::NoSeparatingCircle);
        let poly = sample::convex_polygon(&mut rng, 5, x, 0.01).unwrap();
        prop_assert_eq!(engine.query(&QueryShape::Polygon(poly)), QueryResult::NoSeparatingCircle);
    }
}
