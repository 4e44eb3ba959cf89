//! Graphviz export.
//!
//! Solid edges draw the converse of openness (an edge from y to z when z is
//! open to y), dashed edges draw `R`, dotted edges draw `Q`.

use super::ModalFrame;
use std::fmt::Write;

pub fn to_dot(frame: &ModalFrame) -> String {
    let mut out = String::from("digraph frame {\n");
    for name in frame.state_names() {
        writeln!(out, "  \"{name}\" [shape=circle];").unwrap();
    }
    for (z, y) in frame.edges_open() {
        // z open to y: solid arrow y -> z
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [style=solid];",
            frame.state_name(y),
            frame.state_name(z)
        )
        .unwrap();
    }
    for (x, y) in frame.edges_r() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [style=dashed];",
            frame.state_name(x),
            frame.state_name(y)
        )
        .unwrap();
    }
    for (x, y) in frame.edges_q() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [style=dotted];",
            frame.state_name(x),
            frame.state_name(y)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_styles() {
        let f = ModalFrame::with_default_names(2, &[(0, 1)], &[(1, 0)], &[(0, 0)]).unwrap();
        let dot = to_dot(&f);
        // 0 open to 1: solid edge s1 -> s0
        assert!(dot.contains("\"s1\" -> \"s0\" [style=solid];"));
        assert!(dot.contains("\"s1\" -> \"s0\" [style=dashed];"));
        assert!(dot.contains("\"s0\" -> \"s0\" [style=dotted];"));
    }
}
