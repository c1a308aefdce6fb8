//! Union-find with union by size and an undo log (no path compression).

#[derive(Debug, Clone)]
pub(crate) struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>,
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Joins the sets of `a` and `b`; returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.log.push((rb, ra));
        true
    }

    pub fn checkpoint(&self) -> usize {
        self.log.len()
    }

    pub fn rollback(&mut self, to: usize) {
        while self.log.len() > to {
            let (child, root) = self.log.pop().expect("nonempty log");
            self.parent[child] = child;
            self.size[root] -= self.size[child];
        }
    }

    #[cfg(test)]
    pub fn set_size(&self, v: usize) -> usize {
        self.size[self.find(v)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_rollback() {
        let mut d = RollbackDsu::new(4);
        let cp = d.checkpoint();
        assert!(d.union(0, 1));
        assert!(d.union(2, 3));
        assert!(!d.union(1, 0));
        assert!(d.union(1, 3));
        assert_eq!(d.set_size(2), 4);
        d.rollback(cp);
        assert_eq!(d.set_size(0), 1);
        assert_ne!(d.find(0), d.find(1));
    }
}
