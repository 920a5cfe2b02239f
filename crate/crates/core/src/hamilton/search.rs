use crate::graph::{BitSet, TotalGraph};
use crate::ring::Elem;

use super::HamError;

pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

pub fn search_ham(g: &TotalGraph<'_>) -> Result<Vec<Elem>, HamError> {
    search_ham_with(g, DEFAULT_SEARCH_BUDGET)
}

/// Depth-first search for a Hamiltonian cycle. Extensions are tried
/// fewest-onward-options first; a branch is cut when some unvisited vertex
/// has fewer than two usable neighbors or the unvisited part falls apart.
pub fn search_ham_with(g: &TotalGraph<'_>, budget: u64) -> Result<Vec<Elem>, HamError> {
    let n = g.order();
    if n < 3 || !g.is_connected() {
        return Err(HamError::SearchExhausted { explored: 0 });
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut unvisited = BitSet::full(n);
    unvisited.remove(start);
    let mut path = vec![start];
    let mut stack: Vec<Vec<Elem>> = vec![candidates(g, start, &unvisited)];
    let mut explored = 0u64;

    while let Some(options) = stack.last_mut() {
        let Some(v) = options.pop() else {
            stack.pop();
            if let Some(v) = path.pop() {
                if v != start {
                    unvisited.insert(v);
                }
            }
            continue;
        };
        explored += 1;
        if explored > budget {
            return Err(HamError::SearchExhausted { explored });
        }
        unvisited.remove(v);
        path.push(v);
        if unvisited.is_empty() {
            if g.adjacent(v, start) {
                return Ok(path);
            }
        } else if viable(g, v, start, &unvisited) {
            stack.push(candidates(g, v, &unvisited));
            continue;
        }
        path.pop();
        unvisited.insert(v);
    }
    Err(HamError::SearchExhausted { explored })
}

/// Unvisited neighbors of `v`, best last so they pop first.
fn candidates(g: &TotalGraph<'_>, v: Elem, unvisited: &BitSet) -> Vec<Elem> {
    let mut c: Vec<(usize, Elem)> = g
        .neighbors(v)
        .iter()
        .filter(|&w| unvisited.contains(w))
        .map(|w| (g.neighbors(w).intersection_count(unvisited), w))
        .collect();
    c.sort_unstable_by(|a, b| b.cmp(a));
    c.into_iter().map(|(_, w)| w).collect()
}

fn viable(g: &TotalGraph<'_>, end: Elem, start: Elem, unvisited: &BitSet) -> bool {
    let mut open = unvisited.clone();
    open.insert(end);
    open.insert(start);
    if unvisited.iter().any(|u| g.neighbors(u).intersection_count(&open) < 2) {
        return false;
    }
    let mut reach = BitSet::new(g.order());
    reach.insert(end);
    let mut frontier = vec![end];
    while let Some(v) = frontier.pop() {
        let mut next = g.neighbors(v).clone();
        next.intersect_with(unvisited);
        next.difference_with(&reach);
        for w in next.iter() {
            reach.insert(w);
            frontier.push(w);
        }
    }
    unvisited.is_subset(&reach)
}
