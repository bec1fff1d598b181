use super::{KernelError, Matroid, RankedFlat, SetFamily};
use crate::bits::{self, Mask};

impl Matroid {
    /// Inclusion-minimal dependent sets.
    pub fn circuits(&self) -> SetFamily {
        let t = self.table();
        let members = (1..=self.ground()).filter(|&x| t.is_circuit(x)).collect();
        SetFamily { n: self.n, members }
    }

    /// Circuits of rank below the matroid rank (size at most `r`).
    pub fn non_spanning_circuits(&self) -> SetFamily {
        let t = self.table();
        let r = self.rank;
        let members = (1..=self.ground())
            .filter(|&x| bits::size(x) <= r && t.is_circuit(x))
            .collect();
        SetFamily { n: self.n, members }
    }

    pub fn cocircuits(&self) -> SetFamily {
        self.dual().circuits()
    }

    /// Flats of rank `r - 1`.
    pub fn hyperplanes(&self) -> Result<SetFamily, KernelError> {
        if self.rank == 0 {
            return Err(KernelError::RankZero);
        }
        let t = self.table();
        let target = self.rank - 1;
        let members = (0..=self.ground())
            .filter(|&x| t.rank(x) == target && t.is_flat(x))
            .collect();
        Ok(SetFamily { n: self.n, members })
    }

    pub fn flats(&self) -> Vec<RankedFlat> {
        let t = self.table();
        (0..=self.ground())
            .filter(|&x| t.is_flat(x))
            .map(|flat| RankedFlat {
                flat,
                rank: t.rank(flat),
            })
            .collect()
    }

    pub fn closure(&self, x: Mask) -> Mask {
        self.table().closure(x)
    }

    /// Flats whose restriction has no coloop, i.e. flats that are unions of
    /// circuits, in ascending mask order.
    pub fn cyclic_flats(&self) -> Vec<RankedFlat> {
        let t = self.table();
        (0..=self.ground())
            .filter(|&x| {
                let r = t.rank(x);
                bits::elements(x).all(|e| t.rank(x & !bits::bit(e)) == r) && t.is_flat(x)
            })
            .map(|flat| RankedFlat {
                flat,
                rank: t.rank(flat),
            })
            .collect()
    }

    /// Sets that are both a circuit and a hyperplane.
    pub fn circuit_hyperplanes(&self) -> SetFamily {
        if self.rank == 0 {
            return SetFamily {
                n: self.n,
                members: Vec::new(),
            };
        }
        let t = self.table();
        let members = bits::combinations(self.n, self.rank)
            .filter(|&x| t.rank(x) == self.rank - 1 && t.is_circuit(x) && t.is_flat(x))
            .collect();
        SetFamily { n: self.n, members }
    }

    /// Connected components, each as a mask, ordered by least element.
    /// Loops and coloops are singleton blocks.
    pub fn components(&self) -> Vec<Mask> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for c in self.circuits().iter() {
            let mut it = bits::elements(c);
            let first = it.next().expect("circuits are nonempty");
            for e in it {
                let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut blocks: Vec<Mask> = Vec::new();
        let mut root_block = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            if root_block[r] == usize::MAX {
                root_block[r] = blocks.len();
                blocks.push(0);
            }
            blocks[root_block[r]] |= bits::bit(e);
        }
        blocks
    }

    /// Every non-spanning circuit is a hyperplane.
    pub fn is_sparse_paving(&self) -> bool {
        if self.rank == 0 || self.rank == self.n {
            return true;
        }
        let t = self.table();
        let r = self.rank;
        // A non-spanning circuit has at most r elements; a hyperplane circuit
        // has exactly r elements and is closed.
        (1..=self.ground()).all(|x| {
            let k = bits::size(x);
            if k > r || !t.is_circuit(x) {
                return true;
            }
            k == r && t.is_flat(x)
        })
    }

    /// Not a member, while every single-element deletion and contraction is.
    /// `member` must describe a minor-closed class.
    pub fn is_excluded_minor<F: Fn(&Matroid) -> bool>(&self, member: F) -> bool {
        if member(self) {
            return false;
        }
        (0..self.n).all(|e| member(&self.delete(e)) && member(&self.contract(e)))
    }
}
