//! Ancestor tables over the rooted diagram: level ancestors, midpoint
//! splitting of root paths, and lowest common ancestors.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fpvd::FpvdTree;

/// Binary lifting table: `up[k][v]` is the `2^k`-th ancestor of `v`
/// (the root is its own ancestor).
#[derive(Clone, Debug, PartialEq)]
pub struct PathLocator {
    up: Vec<Vec<u32>>,
    depth: Vec<u32>,
}

impl PathLocator {
    pub fn new(tree: &FpvdTree) -> Self {
        let parents: Vec<usize> = tree
            .nodes
            .iter()
            .enumerate()
            .map(|(v, n)| n.parent.unwrap_or(v))
            .collect();
        let depth = tree.nodes.iter().map(|n| n.depth).collect();
        Self::from_parents(&parents, depth)
    }

    /// Builds the table from a parent array (roots point to themselves).
    pub fn from_parents(parents: &[usize], depth: Vec<usize>) -> Self {
        let n = parents.len();
        let max_depth = depth.iter().copied().max().unwrap_or(0);
        let mut levels = 1;
        while (1usize << levels) <= max_depth.max(1) {
            levels += 1;
        }
        let mut up: Vec<Vec<u32>> = Vec::with_capacity(levels);
        up.push(parents.iter().map(|&p| p as u32).collect());
        for k in 1..levels {
            let prev = &up[k - 1];
            let next: Vec<u32> = (0..n).map(|v| prev[prev[v] as usize]).collect();
            up.push(next);
        }
        PathLocator {
            up,
            depth: depth.into_iter().map(|d| d as u32).collect(),
        }
    }

    #[inline]
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v] as usize
    }

    #[inline]
    pub fn parent(&self, v: usize) -> usize {
        self.up[0][v] as usize
    }

    pub fn levels(&self) -> usize {
        self.up.len()
    }

    /// `2^k`-th ancestor table entry.
    pub fn jump(&self, k: usize, v: usize) -> usize {
        self.up[k][v] as usize
    }

    /// Ancestor of `v` at depth `d` (`d` must not exceed `depth(v)`).
    pub fn level_ancestor(&self, mut v: usize, d: usize) -> usize {
        debug_assert!(d <= self.depth(v));
        let mut gap = self.depth(v) - d;
        let mut k = 0;
        while gap > 0 {
            if gap & 1 == 1 {
                v = self.up[k][v] as usize;
            }
            gap >>= 1;
            k += 1;
        }
        v
    }

    pub fn is_ancestor(&self, anc: usize, v: usize) -> bool {
        self.depth(anc) <= self.depth(v) && self.level_ancestor(v, self.depth(anc)) == anc
    }

    /// The ancestor of `u` halfway (rounding toward the root) between `u`
    /// and its strict ancestor `v`.
    pub fn find_point_between(&self, u: usize, v: usize) -> Result<usize> {
        let (du, dv) = (self.depth(u), self.depth(v));
        if dv >= du || !self.is_ancestor(v, u) {
            return Err(Error::NotAncestor);
        }
        if du - dv < 2 {
            return Err(Error::AlreadyAdjacent);
        }
        Ok(self.level_ancestor(u, (du + dv) / 2))
    }

    pub fn lca(&self, mut u: usize, mut v: usize) -> usize {
        if self.depth(u) < self.depth(v) {
            core::mem::swap(&mut u, &mut v);
        }
        u = self.level_ancestor(u, self.depth(v));
        if u == v {
            return u;
        }
        for k in (0..self.up.len()).rev() {
            let (a, b) = (self.up[k][u], self.up[k][v]);
            if a != b {
                u = a as usize;
                v = b as usize;
            }
        }
        self.up[0][u] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path 0 - 1 - ... - (n-1) rooted at 0.
    fn path(n: usize) -> PathLocator {
        let parents: Vec<usize> = (0..n).map(|i| i.saturating_sub(1)).collect();
        PathLocator::from_parents(&parents, (0..n).collect())
    }

    #[test]
    fn jump_arithmetic() {
        let l = path(8);
        assert_eq!(l.jump(2, 7), 3);
        assert_eq!(l.jump(0, 0), 0);
    }

    #[test]
    fn find_point_between_examples() {
        let l = path(9);
        assert_eq!(l.find_point_between(8, 0), Ok(4));
        assert_eq!(l.find_point_between(3, 2), Err(Error::AlreadyAdjacent));
        assert_eq!(l.find_point_between(5, 0), Ok(2));
        assert_eq!(l.find_point_between(2, 5), Err(Error::NotAncestor));
    }

    #[test]
    fn lca_examples() {
        // 0 -> {1, 2}; 1 -> {3, 4}; 2 -> {5}
        let parents = [0, 0, 0, 1, 1, 2];
        let depth = alloc::vec![0, 1, 1, 2, 2, 2];
        let l = PathLocator::from_parents(&parents, depth);
        assert_eq!(l.lca(3, 5), 0);
        assert_eq!(l.lca(4, 1), 1);
        assert_eq!(l.lca(3, 4), 1);
    }
}
