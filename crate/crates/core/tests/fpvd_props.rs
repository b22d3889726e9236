//! Diagram construction against enumeration, plus tree and path-index
//! invariants.

use circsep_core::engine::Engine;
use circsep_core::fpvd::FpvdTree;
use circsep_core::geom::Point;
use circsep_core::oracle::{brute_fpvd, brute_mec};
use circsep_core::sample;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Points on the circle of radius 5 with integer coordinates.
const LATTICE_CIRCLE: [(f64, f64); 12] = [
    (5.0, 0.0),
    (4.0, 3.0),
    (3.0, 4.0),
    (0.0, 5.0),
    (-3.0, 4.0),
    (-4.0, 3.0),
    (-5.0, 0.0),
    (-4.0, -3.0),
    (-3.0, -4.0),
    (0.0, -5.0),
    (3.0, -4.0),
    (4.0, -3.0),
];

fn point_set(kind: u8, seed: u64, n: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind % 5 {
        0 => sample::uniform_square(&mut rng, n, 1.0),
        1 => sample::grid(&mut rng, n, 5),
        2 => {
            let mut p = sample::regular_polygon(n.max(3), 1.0, 0.3);
            p.extend(sample::uniform_square(&mut rng, n / 3, 0.5));
            p
        }
        3 => (0..n)
            .map(|_| {
                let (x, y) = LATTICE_CIRCLE[rng.gen_range(0..LATTICE_CIRCLE.len())];
                Point::new(x, y)
            })
            .chain([Point::new(1.0, 1.0), Point::new(-2.0, 0.0)])
            .collect(),
        _ => sample::ellipse(&mut rng, n, 2.0, 1.0),
    }
}

/// Diagram vertices of `tree` (split roots excluded) match enumeration as
/// a multiset of positions with their defining sites.
fn matches_enumeration(tree: &FpvdTree, pts: &[Point]) -> Result<(), String> {
    let scale = pts.iter().fold(1.0f64, |s, p| s.max(p.magnitude()));
    let tol = 1e-7 * scale;
    let mut want = brute_fpvd(pts);
    let got: Vec<_> = tree.nodes.iter().filter(|n| n.defining_sites.len() >= 3).collect();
    if got.len() != want.len() {
        return Err(format!("{} nodes, enumeration has {}", got.len(), want.len()));
    }
    for n in got {
        let k = want
            .iter()
            .position(|w| w.position.dist(n.position) <= tol)
            .ok_or_else(|| format!("node {:?} not enumerated", n.position))?;
        let w = want.swap_remove(k);
        let mut a: Vec<Point> = n.defining_sites.iter().map(|&s| tree.sites[s]).collect();
        let mut b = w.sites.clone();
        let key = |p: &Point| (p.x.to_bits(), p.y.to_bits());
        a.sort_by_key(key);
        b.sort_by_key(key);
        if a != b {
            return Err(format!("sites differ at {:?}: {a:?} vs {b:?}", n.position));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn diagram_matches_enumeration(kind in 0u8..5, seed in any::<u64>(), n in 3usize..40) {
        let pts = point_set(kind, seed, n);
        let Ok(tree) = FpvdTree::build(&pts) else {
            // Only coincident inputs are rejected.
            prop_assert!(pts.iter().all(|p| *p == pts[0]));
            return Ok(());
        };
        prop_assert!(tree.validate().is_empty(), "{:?}", tree.validate());
        if let Err(e) = matches_enumeration(&tree, &pts) {
            return Err(TestCaseError::fail(e));
        }
    }

    #[test]
    fn enclosing_circle_matches_enumeration(kind in 0u8..5, seed in any::<u64>(), n in 1usize..30) {
        let pts = point_set(kind, seed, n);
        let Ok(tree) = FpvdTree::build(&pts) else { return Ok(()) };
        let want = brute_mec(&pts).unwrap();
        let tol = 1e-9 * want.radius.max(1.0);
        prop_assert!((tree.mec.radius - want.radius).abs() <= tol);
        prop_assert!(tree.mec.center.dist(want.center) <= 1e-7 * want.radius.max(1.0));
    }

    #[test]
    fn radius_grows_away_from_root(kind in 0u8..5, seed in any::<u64>(), n in 3usize..200) {
        let pts = point_set(kind, seed, n);
        let Ok(tree) = FpvdTree::build(&pts) else { return Ok(()) };
        for (v, node) in tree.nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                prop_assert!(tree.node_rho(p) <= tree.node_rho(v) * (1.0 + 1e-12) + 1e-12);
                prop_assert_eq!(tree.nodes[p].depth + 1, node.depth);
            }
        }
        prop_assert!(tree.nodes[tree.root].parent.is_none());
    }

    #[test]
    fn path_index_matches_parent_walks(kind in 0u8..5, seed in any::<u64>(), n in 3usize..300, picks in proptest::collection::vec((any::<u32>(), any::<u32>()), 16)) {
        let pts = point_set(kind, seed, n);
        let Ok(engine) = Engine::build(&pts) else { return Ok(()) };
        let tree = engine.tree();
        let loc = engine.locator();
        let count = tree.nodes.len();
        let ancestors = |mut v: usize| {
            let mut out = vec![v];
            while let Some(p) = tree.nodes[v].parent {
                out.push(p);
                v = p;
            }
            out
        };
        for (a, b) in picks {
            let (u, v) = (a as usize % count, b as usize % count);
            let au = ancestors(u);
            let av = ancestors(v);
            let lca = *au.iter().find(|x| av.contains(x)).unwrap();
            prop_assert_eq!(loc.lca(u, v), lca);
            prop_assert_eq!(loc.is_ancestor(v, u), au.contains(&v));
            prop_assert_eq!(loc.depth(u), au.len() - 1);
            let d = b as usize % au.len();
            prop_assert_eq!(loc.level_ancestor(u, au.len() - 1 - d), au[d]);
        }
    }
}

#[test]
fn collinear_input_has_no_diagram_vertices() {
    let pts: Vec<Point> = (0..9).map(|i| Point::new(i as f64, 2.0 * i as f64)).collect();
    let tree = FpvdTree::build(&pts).unwrap();
    assert!(tree.validate().is_empty());
    assert_eq!(tree.site_count(), 2);
    assert!(matches_enumeration(&tree, &pts).is_ok());
}

#[test]
fn lattice_circle_is_one_vertex() {
    let pts: Vec<Point> = LATTICE_CIRCLE.iter().map(|&(x, y)| Point::new(x, y)).collect();
    let tree = FpvdTree::build(&pts).unwrap();
    assert_eq!(tree.nodes.len(), 1);
    assert_eq!(tree.nodes[0].defining_sites.len(), 12);
    assert_eq!(tree.nodes[0].position, Point::new(0.0, 0.0));
}
