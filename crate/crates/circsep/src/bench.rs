//! Step-count and throughput sweep over (n, m) cells.
//!
//! Points lie on an ellipse, so every point is a hull vertex and the diagram
//! depth grows with n; uniform samples keep only O(log n) hull vertices and
//! would hide the growth the sweep is meant to show. Queries are random
//! convex m-gons disjoint from the hull. Step statistics cover the queries
//! that needed a search (not the trivial enclosing-circle answers).

use std::time::Instant;

use circsep_core::engine::{Engine, QueryShape};
use circsep_core::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub ms: Vec<usize>,
    pub queries: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BenchCell {
    pub n: usize,
    pub m: usize,
    pub hull_size: usize,
    pub nodes: usize,
    pub build_ms: f64,
    pub queries: usize,
    /// Queries answered by a search rather than the enclosing circle.
    pub searched: usize,
    pub mean_path_steps: f64,
    pub max_path_steps: u32,
    pub mean_chain_steps: f64,
    pub max_chain_steps: u32,
    pub mean_total_steps: f64,
    pub max_total_steps: u32,
    /// `2 (ceil(log2 n) + ceil(log2 m)) + 8`.
    pub step_bound: u32,
    pub ns_per_query: f64,
}

pub fn ceil_log2(x: usize) -> u32 {
    usize::BITS - x.max(1).saturating_sub(1).leading_zeros()
}

pub fn step_bound(n: usize, m: usize) -> u32 {
    2 * (ceil_log2(n) + ceil_log2(m)) + 8
}

/// Distance, in hull scales, within which query centers are drawn.
const REACH: f64 = 1.5;

pub fn run_bench(cfg: &BenchConfig) -> Vec<BenchCell> {
    let mut cells = Vec::new();
    if cfg.queries == 0 {
        return cells;
    }
    for &n in &cfg.ns {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).rotate_left(32));
        let points = sample::ellipse(&mut rng, n, 2.0, 1.0);
        let start = Instant::now();
        let Ok(engine) = Engine::build_seeded(&points, cfg.seed) else {
            continue;
        };
        let build_ms = start.elapsed().as_secs_f64() * 1e3;
        for &m in &cfg.ms {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).rotate_left(32) ^ m as u64);
            let shapes: Vec<QueryShape> = (0..cfg.queries)
                .map(|_| QueryShape::Polygon(sample::disjoint_polygon(&mut rng, engine.hull(), m, REACH)))
                .collect();
            cells.push(run_cell(&engine, n, m, build_ms, &shapes));
        }
    }
    cells
}

fn run_cell(engine: &Engine, n: usize, m: usize, build_ms: f64, shapes: &[QueryShape]) -> BenchCell {
    let start = Instant::now();
    let results: Vec<_> = shapes.iter().map(|q| engine.query(q)).collect();
    let elapsed = start.elapsed().as_secs_f64();
    let mut cell = BenchCell {
        n,
        m,
        hull_size: engine.tree().site_count(),
        nodes: engine.tree().node_count(),
        build_ms,
        queries: shapes.len(),
        step_bound: step_bound(n, m),
        ns_per_query: elapsed * 1e9 / shapes.len() as f64,
        ..BenchCell::default()
    };
    let (mut path, mut chain) = (0u64, 0u64);
    for s in results.iter().filter_map(|r| r.separation()).filter(|s| !s.trivial_mec) {
        let st = s.stats;
        cell.searched += 1;
        path += st.path_steps as u64;
        chain += st.chain_steps as u64;
        cell.max_path_steps = cell.max_path_steps.max(st.path_steps);
        cell.max_chain_steps = cell.max_chain_steps.max(st.chain_steps);
        cell.max_total_steps = cell.max_total_steps.max(st.path_steps + st.chain_steps);
    }
    if cell.searched > 0 {
        let k = cell.searched as f64;
        cell.mean_path_steps = path as f64 / k;
        cell.mean_chain_steps = chain as f64 / k;
        cell.mean_total_steps = (path + chain) as f64 / k;
    }
    cell
}

/// Aligned text rendering of the sweep.
pub fn text_table(cells: &[BenchCell]) -> String {
    let mut out = format!(
        "{:>8} {:>6} {:>8} {:>9} {:>9} {:>6} {:>9} {:>6} {:>9} {:>6} {:>6} {:>10}\n",
        "n", "m", "hull", "build_ms", "path_avg", "max", "chain_avg", "max", "total_avg", "max", "bound", "ns/query"
    );
    for c in cells {
        out.push_str(&format!(
            "{:>8} {:>6} {:>8} {:>9.1} {:>9.2} {:>6} {:>9.2} {:>6} {:>9.2} {:>6} {:>6} {:>10.0}\n",
            c.n,
            c.m,
            c.hull_size,
            c.build_ms,
            c.mean_path_steps,
            c.max_path_steps,
            c.mean_chain_steps,
            c.max_chain_steps,
            c.mean_total_steps,
            c.max_total_steps,
            c.step_bound,
            c.ns_per_query
        ));
    }
    out
}

/// Least-squares fit `y = a + b x`; returns `(a, b, r2)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let b = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let a = my - b * mx;
    let r2 = if syy > 0.0 { sxy * sxy / (sxx * syy) } else { 1.0 };
    (a, b, r2)
}
