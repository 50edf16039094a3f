//! Dynkin diagrams of each domain and the graph of domains joined by the
//! generators that move them, with Graphviz output.

use std::fmt::Write;

use crate::domains::Family;
use crate::rootsys::{RootSystemData, RootVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeStyle {
    Plain,
    /// Isotropic node: the generator moves the domain.
    Crossed,
    /// Short root of an odd non-isotropic node.
    Filled,
}

impl NodeStyle {
    pub fn as_str(&self) -> &'static str {
        match self {
            NodeStyle::Plain => "plain",
            NodeStyle::Crossed => "cross",
            NodeStyle::Filled => "filled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub domain: String,
    /// Style of node `i + 1`.
    pub nodes: Vec<NodeStyle>,
    pub edges: Vec<DynkinEdge>,
}

/// Bond between simple roots with nonzero inner product, nodes 1-based.
/// The form is `(x_k, x_k) = (-1)^{p_k}` for the parity `p_k` of coordinate `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    /// Number of lines, the larger of the two Cartan entries in absolute value.
    /// Rows of isotropic roots are not normalised.
    pub bonds: u32,
    pub m: u32,
}

pub fn dynkin_diagram(rs: &RootSystemData, a: usize) -> DynkinDiagram {
    let l = rs.rank();
    let p = rs.domain(a).parities();
    let odd_family = matches!(rs.family(), Some(Family::OspOdd { .. }));
    let nodes = (0..l)
        .map(|i| {
            if rs.act(i, a) != a {
                NodeStyle::Crossed
            } else if odd_family && i + 1 == l && p[l - 1] == 1 {
                NodeStyle::Filled
            } else {
                NodeStyle::Plain
            }
        })
        .collect();
    let form = |x: &RootVector, y: &RootVector| -> i64 {
        x.0.iter().zip(&y.0).zip(p).map(|((u, v), &pk)| (*u as i64) * (*v as i64) * if pk == 0 { 1 } else { -1 }).sum()
    };
    // |a_ij| rounded up
    let cartan = |d: i64, n: i64| -> u32 {
        if n == 0 {
            d.unsigned_abs() as u32
        } else {
            (2 * d.unsigned_abs()).div_ceil(n.unsigned_abs()) as u32
        }
    };
    let mut edges = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let (x, y) = (rs.simple_root(i, a), rs.simple_root(j, a));
            let d = form(x, y);
            if d != 0 {
                let bonds = cartan(d, form(x, x)).max(cartan(d, form(y, y)));
                let m = rs.coxeter_entry(i, j, a).finite().unwrap_or(0);
                edges.push(DynkinEdge { i: i + 1, j: j + 1, bonds, m });
            }
        }
    }
    DynkinDiagram { domain: rs.domain(a).to_string(), nodes, edges }
}

/// Unordered edges `(a, b, i)` with `a < b` and `i ▷ a = b`, generator 1-based.
pub fn orbit_edges(rs: &RootSystemData) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..rs.num_domains() {
        for i in 0..rs.rank() {
            let b = rs.act(i, a);
            if a < b {
                out.push((a, b, i + 1));
            }
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn orbit_dot(rs: &RootSystemData) -> String {
    let mut s = String::new();
    writeln!(s, "graph {} {{", quote(&format!("{} domains", rs.label()))).unwrap();
    writeln!(s, "  node [shape=box];").unwrap();
    for a in 0..rs.num_domains() {
        writeln!(s, "  d{} [label={}];", a, quote(&rs.domain(a).to_string())).unwrap();
    }
    for (a, b, i) in orbit_edges(rs) {
        writeln!(s, "  d{} -- d{} [label=\"{}\"];", a, b, i).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn diagram_dot(d: &DynkinDiagram) -> String {
    let mut s = String::new();
    writeln!(s, "graph {} {{", quote(&d.domain)).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    for (k, style) in d.nodes.iter().enumerate() {
        let attrs = match style {
            NodeStyle::Plain => "shape=circle",
            NodeStyle::Crossed => "shape=Mcircle",
            NodeStyle::Filled => "shape=circle, style=filled",
        };
        writeln!(s, "  n{} [label=\"{}\", {}];", k + 1, k + 1, attrs).unwrap();
    }
    for e in &d.edges {
        let color = vec!["black"; e.bonds as usize].join(":");
        writeln!(s, "  n{} -- n{} [label=\"{}\", color=\"{}\"];", e.i, e.j, e.m, color).unwrap();
    }
    s.push_str("}\n");
    s
}

/// Orbit graph followed by one diagram per domain.
pub fn full_dot(rs: &RootSystemData) -> String {
    let mut s = orbit_dot(rs);
    for a in 0..rs.num_domains() {
        s.push_str(&diagram_dot(&dynkin_diagram(rs, a)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn find(rs: &RootSystemData, label: &str) -> usize {
        (0..rs.num_domains()).find(|&a| rs.domain(a).to_string() == label).unwrap()
    }

    #[test]
    fn gl11_even_domain() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        let d = dynkin_diagram(&rs, find(&rs, "(0,0,1,1)"));
        assert_eq!(d.nodes, vec![NodeStyle::Plain, NodeStyle::Crossed, NodeStyle::Plain]);
        let e: Vec<(usize, usize, u32, u32)> = d.edges.iter().map(|e| (e.i, e.j, e.bonds, e.m)).collect();
        assert_eq!(e, vec![(1, 2, 1, 3), (2, 3, 1, 3)]);
    }

    #[test]
    fn osp_odd_double_edge() {
        let rs = build_root_system(Family::OspOdd { m: 1, n: 2 }).unwrap();
        let d = dynkin_diagram(&rs, find(&rs, "(1,1,0)"));
        assert_eq!(d.nodes, vec![NodeStyle::Plain, NodeStyle::Crossed, NodeStyle::Plain]);
        assert!(d.edges.contains(&DynkinEdge { i: 2, j: 3, bonds: 2, m: 4 }));
        let d = dynkin_diagram(&rs, find(&rs, "(1,0,1)"));
        assert_eq!(d.nodes, vec![NodeStyle::Crossed, NodeStyle::Crossed, NodeStyle::Filled]);
    }

    #[test]
    fn d31_c_plus() {
        let rs = build_root_system(Family::OspEven { m: 3, n: 1 }).unwrap();
        let d = dynkin_diagram(&rs, find(&rs, "(0,0,0,1)^C+"));
        assert_eq!(d.nodes[2], NodeStyle::Crossed);
        assert!(d.edges.contains(&DynkinEdge { i: 3, j: 4, bonds: 2, m: 3 }));
        // the C- diagram joins node 4 to node 2
        let d = dynkin_diagram(&rs, find(&rs, "(0,0,0,1)^C-"));
        assert_eq!(d.nodes[3], NodeStyle::Crossed);
        assert!(d.edges.iter().any(|e| (e.i, e.j) == (2, 4)));
        assert!(d.edges.iter().any(|e| (e.i, e.j, e.bonds) == (3, 4, 2)));
        assert_eq!(orbit_edges(&rs).len(), 4);
        // two isotropic nodes joined by a double bond
        let d = dynkin_diagram(&rs, find(&rs, "(0,0,1,0)^D"));
        assert!(d.edges.iter().any(|e| (e.i, e.j, e.bonds) == (3, 4, 2)));
        assert_eq!(d.edges.len(), 4);
    }
}
