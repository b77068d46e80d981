//! Small shared helpers.

/// Union-find with union by size and an undo trail, so the search can
/// backtrack cheaply. No path compression: `find` stays O(log n) and the
/// trail only needs the merged child root.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    trail: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            trail: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Merges the sets containing `a` and `b`. Returns `false` (and records
    /// nothing) if they were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big as u32;
        self.size[big] += self.size[small];
        self.trail.push(small as u32);
        true
    }

    pub fn snapshot(&self) -> usize {
        self.trail.len()
    }

    pub fn rollback(&mut self, snapshot: usize) {
        while self.trail.len() > snapshot {
            let child = self.trail.pop().unwrap() as usize;
            let root = self.parent[child] as usize;
            self.size[root] -= self.size[child];
            self.parent[child] = child as u32;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_reports_cycles() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(uf.union(2, 3));
        assert!(uf.union(1, 2));
        assert!(!uf.union(0, 3));
    }

    #[test]
    fn rollback_restores_components() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        let snap = uf.snapshot();
        assert!(uf.union(1, 2));
        assert!(uf.union(2, 3));
        uf.rollback(snap);
        assert_eq!(uf.find(0), uf.find(1));
        assert_ne!(uf.find(0), uf.find(2));
        assert_ne!(uf.find(2), uf.find(3));
        assert!(uf.union(2, 3));
    }
}
