//! Block systems via union–find refinement.

use super::{GroupError, PermGroup};

/// A G-invariant partition of the domain into equal-size cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSystem {
    /// 1-based cells, each sorted, ordered by least point.
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// One block, or all singletons.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 || self.block_size() == 1
    }

    /// Whether each cell refines some cell of `other`.
    pub fn refines(&self, other: &BlockSystem) -> bool {
        self.blocks.iter().all(|b| {
            other
                .blocks
                .iter()
                .any(|c| b.iter().all(|p| c.contains(p)))
        })
    }

    /// Whether every generator maps every cell onto a cell.
    pub fn is_invariant_under(&self, group: &PermGroup) -> bool {
        group.generators().iter().all(|g| {
            self.blocks.iter().all(|b| {
                let mut img: Vec<usize> = b.iter().map(|&p| g.image(p)).collect();
                img.sort_unstable();
                self.blocks.contains(&img)
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already merged. The smaller root wins.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl PermGroup {
    /// Finest block system with `a` and `b` (1-based) in a common cell.
    pub fn block_system_from_seed(&self, a: usize, b: usize) -> Result<BlockSystem, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        let n = self.degree();
        let mut uf = UnionFind::new(n);
        let mut queue = Vec::new();
        if uf.union(a - 1, b - 1) {
            queue.push((a - 1, b - 1));
        }
        while let Some((x, y)) = queue.pop() {
            for g in self.generators() {
                let (gx, gy) = (g.apply(x), g.apply(y));
                let (rx, ry) = (uf.find(gx), uf.find(gy));
                if uf.union(rx, ry) {
                    queue.push((rx, ry));
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
        for p in 0..n {
            let r = uf.find(p);
            cells[r].push(p + 1);
        }
        let mut blocks: Vec<Vec<usize>> = cells.into_iter().filter(|c| !c.is_empty()).collect();
        blocks.sort_by_key(|c| c[0]);
        Ok(BlockSystem { blocks })
    }

    /// First non-trivial result over the seeds `{1,i}`, `i = 2..n`;
    /// `None` means primitive.
    pub fn minimal_block_system(&self) -> Result<Option<BlockSystem>, GroupError> {
        for i in 2..=self.degree() {
            let sys = self.block_system_from_seed(1, i)?;
            if !sys.is_trivial() {
                return Ok(Some(sys));
            }
        }
        Ok(None)
    }

    /// All minimal non-trivial block systems, in seed order.
    pub fn all_minimal_block_systems(&self) -> Result<Vec<BlockSystem>, GroupError> {
        let mut found: Vec<BlockSystem> = Vec::new();
        for i in 2..=self.degree() {
            let sys = self.block_system_from_seed(1, i)?;
            if !sys.is_trivial() && !found.contains(&sys) {
                found.push(sys);
            }
        }
        let minimal = found
            .iter()
            .filter(|s| !found.iter().any(|t| t != *s && t.refines(s)))
            .cloned()
            .collect();
        Ok(minimal)
    }

    pub fn is_primitive(&self) -> Result<bool, GroupError> {
        Ok(self.minimal_block_system()?.is_none())
    }
}
