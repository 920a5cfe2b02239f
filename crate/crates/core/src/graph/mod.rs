//! The total graph of a finite ring: vertices are the ring elements and
//! distinct `x`, `y` are adjacent iff `x + y` is a zero-divisor.

mod bitset;
pub mod dot;

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use bitset::BitSet;

use crate::ring::{Elem, Ring};

pub struct TotalGraph<'r> {
    ring: &'r Ring,
    rows: Vec<BitSet>,
    degree: Vec<usize>,
}

impl<'r> TotalGraph<'r> {
    pub fn build(ring: &'r Ring) -> Self {
        let n = ring.order();
        let rows: Vec<BitSet> = ring
            .elements()
            .map(|x| BitSet::from_iter(n, ring.elements().filter(|&y| y != x && ring.is_zero_divisor(ring.add(x, y)))))
            .collect();
        let degree = rows.iter().map(BitSet::count).collect();
        TotalGraph { ring, rows, degree }
    }

    pub fn ring(&self) -> &'r Ring {
        self.ring
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn adjacent(&self, x: Elem, y: Elem) -> bool {
        self.rows[x].contains(y)
    }

    pub fn neighbors(&self, x: Elem) -> &BitSet {
        &self.rows[x]
    }

    /// Neighbors of `x` together with `x` itself.
    pub fn closed_neighborhood(&self, x: Elem) -> BitSet {
        let mut s = self.rows[x].clone();
        s.insert(x);
        s
    }

    pub fn degree(&self, x: Elem) -> usize {
        self.degree[x]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degree.iter().sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        (0..self.order()).flat_map(move |x| self.rows[x].iter().filter(move |&y| y > x).map(move |y| (x, y)))
    }

    /// Distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs(&self, src: Elem) -> Vec<usize> {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut unseen = BitSet::full(n);
        unseen.remove(src);
        dist[src] = 0;
        let mut frontier = vec![src];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut reached = BitSet::new(n);
            for &v in &frontier {
                reached.union_with(&self.rows[v]);
            }
            reached.intersect_with(&unseen);
            unseen.difference_with(&reached);
            frontier = reached.iter().collect();
            for &v in &frontier {
                dist[v] = level;
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<Elem>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.rows[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn diameter(&self) -> Diameter {
        if !self.is_connected() {
            return Diameter::Infinite;
        }
        let ecc =
            (0..self.order()).into_par_iter().map(|s| self.bfs(s).into_iter().max().unwrap_or(0)).max().unwrap_or(0);
        Diameter::Finite(ecc)
    }

    /// Connected with every degree even.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.degree.iter().all(|d| d % 2 == 0)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = *self.degree.first()?;
        self.degree.iter().all(|&e| e == d).then_some(d)
    }

    pub fn classify_component(&self, comp: &[Elem]) -> ComponentKind {
        let size = comp.len();
        let members = BitSet::from_iter(self.order(), comp.iter().copied());
        let inner_degree = |v: Elem| self.rows[v].intersection_count(&members);
        let clique = comp.iter().all(|&v| inner_degree(v) == size - 1);
        // K_2 is also K_{1,1}; it counts as complete only when both ends
        // would be joined to themselves (2x is a zero-divisor).
        let looped = comp.iter().all(|&v| self.ring.is_zero_divisor(self.ring.add(v, v)));
        if clique && (size != 2 || looped) {
            return ComponentKind::Complete(size);
        }
        if let Some(m) = self.balanced_biclique(comp, &members) {
            return ComponentKind::Biclique(m);
        }
        ComponentKind::Other(size)
    }

    fn balanced_biclique(&self, comp: &[Elem], members: &BitSet) -> Option<usize> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        side[comp[0]] = 0;
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(v) = queue.pop_front() {
            for w in self.rows[v].iter() {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
        let left = comp.iter().filter(|&&v| side[v] == 0).count();
        let right = comp.len() - left;
        if left != right {
            return None;
        }
        let complete = comp.iter().all(|&v| self.rows[v].intersection_count(members) == left);
        complete.then_some(left)
    }

    pub fn component_profile(&self) -> ComponentProfile {
        let mut counts: Vec<(ComponentKind, usize)> = Vec::new();
        for comp in self.components() {
            let kind = self.classify_component(&comp);
            match counts.iter_mut().find(|(k, _)| *k == kind) {
                Some((_, c)) => *c += 1,
                None => counts.push((kind, 1)),
            }
        }
        counts.sort();
        ComponentProfile(counts)
    }

    pub fn metrics(&self) -> GraphMetrics {
        GraphMetrics {
            order: self.order(),
            zsize: self.ring.zero_divisor_count(),
            edges: self.edge_count(),
            connected: self.is_connected(),
            diameter: self.diameter(),
            regular: self.regular_degree(),
            eulerian: self.is_eulerian(),
            profile: self.component_profile(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Shape of one connected component. `Biclique(m)` is `K_{m,m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Complete(usize),
    Biclique(usize),
    Other(usize),
}

impl ComponentKind {
    pub fn size(&self) -> usize {
        match *self {
            ComponentKind::Complete(m) | ComponentKind::Other(m) => m,
            ComponentKind::Biclique(m) => 2 * m,
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Complete(m) => write!(f, "K{m}"),
            ComponentKind::Biclique(m) => write!(f, "K{m},{m}"),
            ComponentKind::Other(m) => write!(f, "other({m})"),
        }
    }
}

/// Component kinds with multiplicities, sorted by kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile(pub Vec<(ComponentKind, usize)>);

impl ComponentProfile {
    pub fn total_vertices(&self) -> usize {
        self.0.iter().map(|(k, c)| k.size() * c).sum()
    }
}

impl fmt::Display for ComponentProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, c)| format!("{c}x{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for ComponentProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            kind: &'static str,
            m: usize,
            count: usize,
        }
        let entries: Vec<Entry> = self
            .0
            .iter()
            .map(|&(k, count)| {
                let (kind, m) = match k {
                    ComponentKind::Complete(m) => ("complete", m),
                    ComponentKind::Biclique(m) => ("biclique", m),
                    ComponentKind::Other(m) => ("other", m),
                };
                Entry { kind, m, count }
            })
            .collect();
        entries.serialize(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphMetrics {
    pub order: usize,
    pub zsize: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Diameter,
    pub regular: Option<usize>,
    pub eulerian: bool,
    pub profile: ComponentProfile,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingSpec};
    use ComponentKind::*;

    fn ring(spec: RingSpec) -> Ring {
        make_ring(&spec).unwrap()
    }

    #[test]
    fn z2xz2_is_c4() {
        let r = ring(RingSpec::Prod(vec![RingSpec::Zn(2), RingSpec::Zn(2)]));
        let g = TotalGraph::build(&r);
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.components().len(), 1);
        assert!(g.is_eulerian());
    }

    #[test]
    fn z4_two_edges() {
        let r = ring(RingSpec::Zn(4));
        let g = TotalGraph::build(&r);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(g.diameter(), Diameter::Infinite);
        assert_eq!(g.component_profile(), ComponentProfile(vec![(Complete(2), 2)]));
    }

    #[test]
    fn m2_gf2_regular() {
        let r = ring(RingSpec::mat(2, RingSpec::Gf { p: 2, k: 1 }));
        let g = TotalGraph::build(&r);
        assert_eq!(g.regular_degree(), Some(9));
        assert_eq!(g.edge_count(), 72);
    }

    #[test]
    fn connectivity_and_diameter() {
        let z6 = ring(RingSpec::Zn(6));
        let g = TotalGraph::build(&z6);
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Diameter::Finite(2));
        let z2 = ring(RingSpec::Zn(2));
        let g = TotalGraph::build(&z2);
        assert!(!g.is_connected());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn eulerian_examples() {
        let z2z3 = ring(RingSpec::Prod(vec![RingSpec::Zn(2), RingSpec::Zn(3)]));
        assert!(!TotalGraph::build(&z2z3).is_eulerian());
        let gf4gf2 = ring(RingSpec::Prod(vec![RingSpec::Gf { p: 2, k: 2 }, RingSpec::Gf { p: 2, k: 1 }]));
        assert!(TotalGraph::build(&gf4gf2).is_eulerian());
    }

    #[test]
    fn local_profiles() {
        let z9 = ring(RingSpec::Zn(9));
        assert_eq!(
            TotalGraph::build(&z9).component_profile(),
            ComponentProfile(vec![(Complete(3), 1), (Biclique(3), 1)])
        );
        let z3 = ring(RingSpec::Zn(3));
        let p = TotalGraph::build(&z3).component_profile();
        assert_eq!(p, ComponentProfile(vec![(Complete(1), 1), (Biclique(1), 1)]));
        assert_eq!(p.total_vertices(), 3);
    }

    #[test]
    fn char2_field_has_no_edges() {
        let r = ring(RingSpec::Gf { p: 2, k: 3 });
        let g = TotalGraph::build(&r);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.component_profile(), ComponentProfile(vec![(Complete(1), 8)]));
    }
}
