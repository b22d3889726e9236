//! One JSON line per answered query.

use circsep_core::engine::{QueryResult, QueryShape};
use circsep_core::oracle::brute_min_separating_circle;
use circsep_core::Point;
use serde::{Deserialize, Serialize};

/// Relative radius tolerance, and center tolerance in units of the radius,
/// for agreement with the oracle.
pub const MATCH_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Separating,
    NoSeparatingCircle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub oracle_radius: Option<f64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub index: usize,
    pub status: Status,
    pub center: Option<[f64; 2]>,
    pub radius: Option<f64>,
    pub tangency: Option<[f64; 2]>,
    pub trivial_mec: bool,
    pub path_steps: u32,
    pub chain_steps: u32,
    pub elapsed_ns: u64,
    #[serde(flatten, default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

fn xy(p: Point) -> [f64; 2] {
    [p.x, p.y]
}

impl ResultRecord {
    pub fn new(index: usize, result: &QueryResult, elapsed_ns: u64) -> Self {
        match result.separation() {
            Some(s) => ResultRecord {
                index,
                status: Status::Separating,
                center: Some(xy(s.circle.center)),
                radius: Some(s.circle.radius),
                tangency: s.tangency.map(xy),
                trivial_mec: s.trivial_mec,
                path_steps: s.stats.path_steps,
                chain_steps: s.stats.chain_steps,
                elapsed_ns,
                oracle: None,
            },
            None => ResultRecord {
                index,
                status: Status::NoSeparatingCircle,
                center: None,
                radius: None,
                tangency: None,
                trivial_mec: false,
                path_steps: 0,
                chain_steps: 0,
                elapsed_ns,
                oracle: None,
            },
        }
    }

    /// Same record with the timing zeroed, for reproducibility comparisons.
    pub fn untimed(&self) -> Self {
        ResultRecord {
            elapsed_ns: 0,
            ..self.clone()
        }
    }
}

/// Whether two answers agree within [`MATCH_TOL`].
pub fn results_match(a: &QueryResult, b: &QueryResult) -> bool {
    match (a.separation(), b.separation()) {
        (Some(x), Some(y)) => {
            let r = y.circle.radius;
            (x.circle.radius - r).abs() <= MATCH_TOL * r && x.circle.center.dist(y.circle.center) <= MATCH_TOL * r
        }
        (None, None) => true,
        _ => false,
    }
}

/// Runs the brute-force oracle on `sites` and compares it with `result`.
pub fn oracle_check(sites: &[Point], shape: &QueryShape, result: &QueryResult) -> OracleCheck {
    match brute_min_separating_circle(sites, shape) {
        Ok(want) => OracleCheck {
            oracle_radius: want.separation().map(|s| s.circle.radius),
            matches: results_match(result, &want),
        },
        Err(_) => OracleCheck {
            oracle_radius: None,
            matches: false,
        },
    }
}
