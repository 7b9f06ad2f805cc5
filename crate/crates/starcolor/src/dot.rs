//! Graphviz DOT export.
//!
//! Colors map onto a fixed five-entry palette (ColorBrewer Set1), indexed by
//! `(color - 1) mod 5`, so regenerated figures are identical across runs.
//! When the family tag marks a splitting graph, twins are drawn as boxes.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const PALETTE: [&str; 5] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00"];

pub fn to_dot(g: &Graph, coloring: Option<&Coloring>) -> Result<String> {
    if let Some(c) = coloring {
        if c.len() != g.n() {
            return Err(Error::InvalidInput(format!(
                "coloring covers {} vertices but the graph has {}",
                c.len(),
                g.n()
            )));
        }
    }
    let split_base = g
        .family()
        .filter(|f| f.starts_with("splitting("))
        .map(|_| g.n() / 2);
    let mut out = String::new();
    writeln!(out, "graph starcolor {{").unwrap();
    writeln!(out, "    node [shape=circle];").unwrap();
    for v in 0..g.n() {
        let (label, shape) = match split_base {
            Some(base) if v >= base => (format!("v{}'", v - base), ", shape=box"),
            _ => (format!("v{v}"), ""),
        };
        let fill = match coloring {
            Some(c) => format!(
                ", style=filled, fillcolor=\"{}\"",
                PALETTE[((c.color(v) - 1) % 5) as usize]
            ),
            None => String::new(),
        };
        writeln!(out, "    {v} [label=\"{label}\"{shape}{fill}];").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "    {u} -- {v};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::four_star_coloring;
    use crate::graph::cycle;

    #[test]
    fn uncolored_cycle_has_nodes_and_edges() {
        let dot = to_dot(&cycle(3).unwrap(), None).unwrap();
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(!dot.contains("fillcolor"));
    }

    #[test]
    fn construction_renders_with_four_fill_colors_and_boxes() {
        let c = four_star_coloring(10).unwrap();
        let dot = to_dot(&c.graph(), Some(&c.coloring)).unwrap();
        assert_eq!(dot.matches("label=").count(), 20);
        let fills: std::collections::BTreeSet<&str> = PALETTE
            .iter()
            .copied()
            .filter(|p| dot.contains(p))
            .collect();
        assert_eq!(fills.len(), 4);
        assert_eq!(dot.matches("shape=box").count(), 10);
        assert!(dot.contains("label=\"v0'\""));
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let c = Coloring::new(vec![1, 2]).unwrap();
        assert!(to_dot(&cycle(3).unwrap(), Some(&c)).is_err());
    }
}
