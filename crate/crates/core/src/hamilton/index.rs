use crate::ring::{Elem, Ring};

/// Position `(k, l)` (1-based) in the row-major walk over `n x n` matrices,
/// together with the index sets and matrix sets attached to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixIndexSet {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl MatrixIndexSet {
    pub fn new(n: usize, k: usize, l: usize) -> Self {
        assert!(n >= 1 && (1..=n).contains(&k) && (1..=n).contains(&l), "position out of range");
        MatrixIndexSet { n, k, l }
    }

    pub fn first(n: usize) -> Self {
        Self::new(n, 1, 1)
    }

    /// Row-major successor, `None` after `(n, n)`.
    pub fn next(&self) -> Option<Self> {
        match (self.k, self.l) {
            (k, l) if l < self.n => Some(Self::new(self.n, k, l + 1)),
            (k, _) if k < self.n => Some(Self::new(self.n, k + 1, 1)),
            _ => None,
        }
    }

    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        std::iter::successors(Some(Self::first(n)), Self::next)
    }

    /// `|I_{k,l}|`
    pub fn len(&self) -> usize {
        (self.k - 1) * self.n + self.l - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn in_i(&self, i: usize, j: usize) -> bool {
        i < self.k || (i == self.k && j < self.l)
    }

    pub fn in_i_bar(&self, i: usize, j: usize) -> bool {
        self.in_i(i, j) || (i, j) == (self.k, self.l)
    }

    pub fn in_i_under(&self, i: usize, j: usize) -> bool {
        let pred = if self.l == 1 { (self.k.wrapping_sub(1), self.n) } else { (self.k, self.l - 1) };
        self.in_i(i, j) && (i, j) != pred
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (1..=n).map(move |j| (i, j)))
    }

    fn supported(&self, ring: &Ring, x: Elem, keep: impl Fn(usize, usize) -> bool) -> bool {
        let d = ring.decode(x);
        self.cells().all(|(i, j)| keep(i, j) || d[(i - 1) * self.n + j - 1] == 0)
    }

    fn constant(&self, ring: &Ring, x: Elem, c: Elem, on: impl Fn(usize, usize) -> bool) -> bool {
        let d = ring.decode(x);
        self.cells().all(|(i, j)| !on(i, j) || d[(i - 1) * self.n + j - 1] == c)
    }

    fn members(&self, ring: &Ring, keep: impl Fn(usize, usize) -> bool) -> Vec<Elem> {
        let (_, base) = ring.matrix_parts().expect("matrix ring");
        let free: Vec<usize> =
            self.cells().filter(|&(i, j)| keep(i, j)).map(|(i, j)| (i - 1) * self.n + j - 1).collect();
        let q = base.order();
        let count = q.pow(free.len() as u32);
        let mut out: Vec<Elem> = (0..count)
            .map(|mut code| {
                let mut digits = vec![0; self.n * self.n];
                for &pos in free.iter().rev() {
                    digits[pos] = code % q;
                    code /= q;
                }
                ring.encode(&digits)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Matrices supported inside `I_{k,l}`.
    pub fn a_members(&self, ring: &Ring) -> Vec<Elem> {
        self.members(ring, |i, j| self.in_i(i, j))
    }

    pub fn a_bar_members(&self, ring: &Ring) -> Vec<Elem> {
        self.members(ring, |i, j| self.in_i_bar(i, j))
    }

    pub fn in_a(&self, ring: &Ring, x: Elem) -> bool {
        self.supported(ring, x, |i, j| self.in_i(i, j))
    }

    pub fn in_a_bar(&self, ring: &Ring, x: Elem) -> bool {
        self.supported(ring, x, |i, j| self.in_i_bar(i, j))
    }

    pub fn in_c(&self, ring: &Ring, x: Elem, c: Elem) -> bool {
        self.constant(ring, x, c, |i, j| self.in_i(i, j))
    }

    pub fn in_c_bar(&self, ring: &Ring, x: Elem, c: Elem) -> bool {
        self.constant(ring, x, c, |i, j| self.in_i_bar(i, j))
    }

    pub fn in_c_under(&self, ring: &Ring, x: Elem, c: Elem) -> bool {
        self.constant(ring, x, c, |i, j| self.in_i_under(i, j))
    }

    /// `x E_{k,l}` for a scalar `x` of the entry ring.
    pub fn scaled_unit(&self, ring: &Ring, x: Elem) -> Elem {
        let mut digits = vec![0; self.n * self.n];
        digits[(self.k - 1) * self.n + self.l - 1] = x;
        ring.encode(&digits)
    }

    /// Entry `(i, j)` of `x`, 1-based.
    pub fn entry(&self, ring: &Ring, x: Elem, i: usize, j: usize) -> Elem {
        ring.decode(x)[(i - 1) * self.n + j - 1]
    }
}
