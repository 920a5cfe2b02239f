use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::ring::{Elem, Ring};

/// Leibniz determinant of a row-major `n x n` matrix over a commutative `base`.
pub fn determinant(base: &Ring, n: usize, entries: &[Elem]) -> Elem {
    if n == 0 {
        return base.one();
    }
    let mut acc = base.zero();
    for perm in (0..n).permutations(n) {
        let inversions = (0..n).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
        let term = (0..n).fold(base.one(), |t, i| base.mul(t, entries[i * n + perm[i]]));
        acc = if inversions % 2 == 0 { base.add(acc, term) } else { base.sub(acc, term) };
    }
    acc
}

/// Entries of `A` with row 1 and column `j` (1-based) removed.
pub fn minor_first_row(n: usize, entries: &[Elem], j: usize) -> Vec<Elem> {
    (1..n)
        .flat_map(|r| (0..n).filter(move |&c| c != j - 1).map(move |c| (r, c)))
        .map(|(r, c)| entries[r * n + c])
        .collect()
}

/// Both sides of the first-row expansion `det(A + x E_{1j})` against
/// `det A + x * sign * det A(1,j)`, with and without the cofactor sign
/// `(-1)^(1+j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DetExpansion {
    pub lhs: Elem,
    pub signed_rhs: Elem,
    pub unsigned_rhs: Elem,
}

impl DetExpansion {
    pub fn holds(&self) -> bool {
        self.lhs == self.signed_rhs
    }

    pub fn unsigned_holds(&self) -> bool {
        self.lhs == self.unsigned_rhs
    }
}

/// `ring` must be `M_n(F)`; `a` a matrix id, `j` a 1-based column, `x` a scalar.
pub fn det_expansion_check(ring: &Ring, a: Elem, j: usize, x: Elem) -> DetExpansion {
    let (n, base) = ring.matrix_parts().expect("matrix ring");
    det_expansion(base, n, &ring.decode(a), j, x)
}

/// Same check on raw row-major entries, for sizes whose matrix ring is too
/// large to tabulate.
pub fn det_expansion(base: &Ring, n: usize, entries: &[Elem], j: usize, x: Elem) -> DetExpansion {
    let mut shifted = entries.to_vec();
    shifted[j - 1] = base.add(shifted[j - 1], x);
    let lhs = determinant(base, n, &shifted);
    let det_a = determinant(base, n, entries);
    let minor = determinant(base, n - 1, &minor_first_row(n, entries, j));
    let term = base.mul(x, minor);
    let signed = if j % 2 == 1 { term } else { base.neg(term) };
    DetExpansion { lhs, signed_rhs: base.add(det_a, signed), unsigned_rhs: base.add(det_a, term) }
}

/// Checks through determinants that `{x E_{1j}} ∪ {0}` dominates
/// `τ(M_n(F))`, using that a matrix over a field is a zero-divisor exactly
/// when it is singular. Returns the entries of the first matrix it misses.
pub fn matrix_set_undominated(base: &Ring, n: usize) -> Option<Vec<Elem>> {
    let q = base.order();
    let total = q.checked_pow((n * n) as u32).expect("matrix count overflows");
    let scalars: Vec<Elem> = base.elements().filter(|&x| x != base.zero()).collect();
    (0..total).into_par_iter().find_map_first(|code| {
        let mut a = vec![0; n * n];
        let mut rem = code;
        for e in a.iter_mut().rev() {
            *e = rem % q;
            rem /= q;
        }
        let nonzero: Vec<usize> = (0..n * n).filter(|&i| a[i] != 0).collect();
        let in_set = nonzero.is_empty() || (nonzero.len() == 1 && nonzero[0] < n);
        if in_set || determinant(base, n, &a) == base.zero() {
            return None;
        }
        let hit = (0..n).any(|j| {
            scalars.iter().any(|&x| {
                let mut b = a.clone();
                b[j] = base.add(b[j], x);
                determinant(base, n, &b) == base.zero()
            })
        });
        (!hit).then_some(a)
    })
}
