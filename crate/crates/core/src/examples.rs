//! Fixed graphs used throughout the tests and by the CLI demos.

use crate::graph::{Graph, Vertex};

/// Path `a – w1 – v – w2 – b` with pendant `c` on `w1` and a triangle
/// `w2 – b – d`. Returns the graph and `[v, w1, w2]`.
pub fn slink_left() -> (Graph, [Vertex; 3]) {
    let g = Graph::new(
        &["v", "w1", "w2", "a", "b", "c", "d"],
        &[("a", "w1"), ("w1", "v"), ("v", "w2"), ("w2", "b"), ("c", "w1"), ("d", "w2"), ("d", "b")],
    )
    .expect("valid graph");
    let ids = ["v", "w1", "w2"].map(|l| g.vertex(l).unwrap());
    (g, ids)
}

/// Ladder-like graph: top row `a – w3 – v – w4 – b`, bottom row
/// `c – w5 – d – e`, rungs `c – w3`, `w5 – v`, `d – w4`, `e – b`.
/// Returns the graph and `[v, w3, w4, w5]`.
pub fn slink_right() -> (Graph, [Vertex; 4]) {
    let g = Graph::new(
        &["v", "w3", "w4", "w5", "a", "b", "c", "d", "e"],
        &[
            ("a", "w3"),
            ("w3", "v"),
            ("v", "w4"),
            ("w4", "b"),
            ("c", "w5"),
            ("w5", "d"),
            ("d", "e"),
            ("c", "w3"),
            ("w5", "v"),
            ("d", "w4"),
            ("e", "b"),
        ],
    )
    .expect("valid graph");
    let ids = ["v", "w3", "w4", "w5"].map(|l| g.vertex(l).unwrap());
    (g, ids)
}
