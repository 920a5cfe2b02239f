//! Graphviz export. Zero-divisors are drawn as boxes, units as ellipses.

use std::fmt::Write;

use super::TotalGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &TotalGraph<'_>) -> String {
    to_dot_with_cycle(g, None)
}

/// Same as [`to_dot`], with the edges of `cycle` drawn bold.
pub fn to_dot_with_cycle(g: &TotalGraph<'_>, cycle: Option<&[usize]>) -> String {
    let ring = g.ring();
    let mut on_cycle = std::collections::HashSet::new();
    if let Some(c) = cycle {
        for i in 0..c.len() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            on_cycle.insert((a.min(b), a.max(b)));
        }
    }
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(&format!("T({})", ring.spec()))).unwrap();
    for x in ring.elements() {
        let shape = if ring.is_zero_divisor(x) { "box" } else { "ellipse" };
        writeln!(out, "  {x} [label={}, shape={shape}];", quote(&ring.label(x))).unwrap();
    }
    for (a, b) in g.edges() {
        if on_cycle.contains(&(a, b)) {
            writeln!(out, "  {a} -- {b} [penwidth=3];").unwrap();
        } else {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingSpec};

    #[test]
    fn z4_dot() {
        let r = make_ring(&RingSpec::Zn(4)).unwrap();
        let g = TotalGraph::build(&r);
        let d = to_dot(&g);
        assert!(d.starts_with("graph \"T(Z(4))\" {"));
        assert!(d.contains("  0 -- 2;"));
        assert!(d.contains("  1 -- 3;"));
        assert_eq!(d.matches(" -- ").count(), 2);
        assert!(d.contains("2 [label=\"2\", shape=box];"));
    }
}
