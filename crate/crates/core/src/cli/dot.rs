//! Graphviz export of the dual and Hasse graphs of a sequence.

use std::fmt::Write;

use crate::bruhat::BruhatElement;
use crate::error::Result;
use crate::promotion::{graph_of, track, GraphKind};
use crate::types::FacetSequence;

/// Undirected DOT graph on positions `1..=h`. Track vertices carry
/// `track=true` and a double border; edges are exactly those of the graph.
pub fn export_dot<F: BruhatElement>(c: &FacetSequence<F>, kind: GraphKind) -> Result<String> {
    let g = graph_of(c, kind)?;
    let t = track(&g);
    let name = match kind {
        GraphKind::Dual => "dual",
        GraphKind::Hasse(_) => "hasse",
    };
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for (i, facet) in c.items().iter().enumerate() {
        let v = i + 1;
        let marks = if t.contains(v) {
            ", track=true, peripheries=2"
        } else {
            ""
        };
        writeln!(out, "  {v} [label=\"{v}\", facet=\"{facet}\"{marks}];").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
