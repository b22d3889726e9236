//! Versioned JSON snapshot of a built diagram. Numbers are plain decimal
//! JSON written in shortest round-trip form, so a reloaded tree is
//! bit-identical to the one that was saved.

use circsep_core::fpvd::FpvdTree;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT: &str = "fpvd-snapshot/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub format: String,
    /// Seed the enclosing circle was computed with.
    pub seed: u64,
    pub tree: FpvdTree,
}

/// Only the version tag; every other field is skipped.
#[derive(Deserialize)]
struct Header {
    format: String,
}

impl Snapshot {
    pub fn new(tree: FpvdTree, seed: u64) -> Self {
        Snapshot {
            format: FORMAT.to_string(),
            seed,
            tree,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("snapshot serializes")
    }

    /// Parses a snapshot, rejecting other format versions before looking at
    /// the body.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let header: Header = serde_json::from_str(text).map_err(|e| CliError::parse("snapshot", e))?;
        if header.format != FORMAT {
            return Err(CliError::Version {
                found: header.format,
                expected: FORMAT,
            });
        }
        let snap: Snapshot = serde_json::from_str(text).map_err(|e| CliError::parse("snapshot", e))?;
        check_indices(&snap.tree).map_err(|m| CliError::parse("snapshot", m))?;
        Ok(snap)
    }
}

/// Index bounds of every cross reference, so a damaged file fails to load
/// instead of panicking later.
fn check_indices(t: &FpvdTree) -> Result<(), String> {
    let (n, r, h) = (t.nodes.len(), t.rays.len(), t.sites.len());
    if h < 2 || t.root >= n || t.regions.len() != h || t.site_index.len() != h {
        return Err("inconsistent sizes".into());
    }
    let site = |s: usize| s < h;
    for (v, node) in t.nodes.iter().enumerate() {
        let ok = node.parent.is_none_or(|p| p < n)
            && node.children.iter().all(|&c| c < n)
            && node.rays.iter().all(|&x| x < r)
            && !node.defining_sites.is_empty()
            && node.defining_sites.iter().all(|&s| site(s))
            && node.parent_sites.is_none_or(|(a, b)| site(a) && site(b))
            && (node.parent.is_some() || v == t.root);
        if !ok {
            return Err(format!("node {v} has out-of-range references"));
        }
    }
    for (i, ray) in t.rays.iter().enumerate() {
        if ray.origin >= n || !site(ray.sites.0) || !site(ray.sites.1) {
            return Err(format!("ray {i} has out-of-range references"));
        }
    }
    for (i, reg) in t.regions.iter().enumerate() {
        if reg.first_ray >= r || reg.last_ray >= r || reg.nodes.iter().any(|&v| v >= n) {
            return Err(format!("region {i} has out-of-range references"));
        }
    }
    Ok(())
}
