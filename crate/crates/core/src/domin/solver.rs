//! Exact minimum dominating set over closed-neighborhood bit rows.

use rayon::prelude::*;

use crate::graph::{BitSet, TotalGraph};
use crate::ring::Elem;

use super::{DomError, DominatingSet};

pub const DEFAULT_SOLVE_GUARD: usize = 1024;

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Largest vertex count the exact solver accepts.
    pub guard: usize,
    /// Split the root branching across threads. Same optimum; the first
    /// witness in branch order is kept, so the answer is unchanged too.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { guard: DEFAULT_SOLVE_GUARD, parallel: false }
    }
}

#[derive(Clone, Debug)]
pub struct ExactGamma {
    pub gamma: usize,
    pub witness: DominatingSet,
    pub lower_bound: usize,
    pub greedy: usize,
}

/// `ceil(|V| / (Δ + 1))`
pub fn lower_bound(g: &TotalGraph<'_>) -> usize {
    g.order().div_ceil(g.max_degree() + 1)
}

pub fn greedy_dominating(g: &TotalGraph<'_>) -> DominatingSet {
    let closed: Vec<BitSet> = (0..g.order()).map(|v| g.closed_neighborhood(v)).collect();
    let mut uncovered = BitSet::full(g.order());
    let mut members = Vec::new();
    while !uncovered.is_empty() {
        let best =
            (0..g.order()).max_by_key(|&v| (closed[v].intersection_count(&uncovered), std::cmp::Reverse(v))).unwrap();
        members.push(best);
        uncovered.difference_with(&closed[best]);
    }
    DominatingSet::new(members)
}

pub fn gamma_exact(g: &TotalGraph<'_>, opts: &SolveOptions) -> Result<ExactGamma, DomError> {
    let n = g.order();
    if n > opts.guard {
        return Err(DomError::SolveGuardExceeded { order: n, guard: opts.guard });
    }
    let solver = Solver { closed: (0..n).map(|v| g.closed_neighborhood(v)).collect() };
    let greedy = greedy_dominating(g);
    let lb = lower_bound(g);
    for k in lb..greedy.len() {
        if let Some(found) = solver.solve_root(k, opts.parallel) {
            return Ok(ExactGamma {
                gamma: found.len(),
                witness: DominatingSet::new(found),
                lower_bound: lb,
                greedy: greedy.len(),
            });
        }
    }
    Ok(ExactGamma { gamma: greedy.len(), lower_bound: lb, greedy: greedy.len(), witness: greedy })
}

struct Solver {
    closed: Vec<BitSet>,
}

impl Solver {
    /// Uncovered vertex with the fewest usable dominators, least id first.
    fn pivot(&self, uncovered: &BitSet, forbidden: &BitSet) -> (Elem, usize) {
        uncovered
            .iter()
            .map(|u| (u, self.closed[u].count() - self.closed[u].intersection_count(forbidden)))
            .min_by_key(|&(u, c)| (c, u))
            .unwrap()
    }

    /// Branch candidates for the pivot: its usable dominators, most new
    /// coverage first, least id on ties.
    fn candidates(&self, u: Elem, uncovered: &BitSet, forbidden: &BitSet) -> Vec<Elem> {
        let mut c: Vec<(usize, Elem)> = self.closed[u]
            .iter()
            .filter(|&w| !forbidden.contains(w))
            .map(|w| (self.closed[w].intersection_count(uncovered), w))
            .collect();
        c.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        c.into_iter().map(|(_, w)| w).collect()
    }

    /// The `k` best coverages cannot reach everything still uncovered.
    fn hopeless(&self, uncovered: &BitSet, forbidden: &BitSet, k: usize) -> bool {
        let need = uncovered.count();
        let mut cover: Vec<usize> = (0..self.closed.len())
            .filter(|&w| !forbidden.contains(w))
            .map(|w| self.closed[w].intersection_count(uncovered))
            .collect();
        if cover.len() > k {
            let cut = cover.len() - k;
            cover.select_nth_unstable(cut);
            cover.drain(..cut);
        }
        cover.iter().sum::<usize>() < need
    }

    fn solve_root(&self, k: usize, parallel: bool) -> Option<Vec<Elem>> {
        let n = self.closed.len();
        let uncovered = BitSet::full(n);
        let forbidden = BitSet::new(n);
        if k == 0 {
            return None;
        }
        let (u, _) = self.pivot(&uncovered, &forbidden);
        let cands = self.candidates(u, &uncovered, &forbidden);
        let branch = |i: usize| {
            let w = cands[i];
            let mut forbid = BitSet::new(n);
            for &earlier in &cands[..i] {
                forbid.insert(earlier);
            }
            let mut rest = uncovered.clone();
            rest.difference_with(&self.closed[w]);
            let mut chosen = vec![w];
            self.search(&rest, &forbid, k - 1, &mut chosen).then_some(chosen)
        };
        if parallel {
            (0..cands.len()).into_par_iter().find_map_first(branch)
        } else {
            (0..cands.len()).find_map(branch)
        }
    }

    fn search(&self, uncovered: &BitSet, forbidden: &BitSet, k: usize, chosen: &mut Vec<Elem>) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if k == 0 {
            return false;
        }
        let (u, usable) = self.pivot(uncovered, forbidden);
        if usable == 0 {
            return false;
        }
        if k == 1 {
            let hit = self.closed[u].iter().find(|&w| !forbidden.contains(w) && uncovered.is_subset(&self.closed[w]));
            if let Some(w) = hit {
                chosen.push(w);
                return true;
            }
            return false;
        }
        if self.hopeless(uncovered, forbidden, k) {
            return false;
        }
        let mut forbid = forbidden.clone();
        for w in self.candidates(u, uncovered, forbidden) {
            let mut rest = uncovered.clone();
            rest.difference_with(&self.closed[w]);
            chosen.push(w);
            if self.search(&rest, &forbid, k - 1, chosen) {
                return true;
            }
            chosen.pop();
            forbid.insert(w);
        }
        false
    }
}
