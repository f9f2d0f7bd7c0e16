//! Small named graphs shared by tests, docs and examples.

use crate::graph::{Graph, Vertex};

/// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut pairs: Vec<(Vertex, Vertex)> =
        (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
    pairs.push((n as Vertex - 1, 0));
    Graph::build(n, &pairs).expect("cycle edges are valid")
}

/// 4-cycle `0-1-2-3-0` plus the chord `(0, 2)`.
pub fn d4() -> Graph {
    Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("valid")
}

/// 5-cycle plus chords `(0, 2)` and `(0, 3)`: a fan, every interior face
/// touches the outer boundary.
pub fn fan5() -> Graph {
    Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
        .expect("valid")
}

/// 6-cycle plus chords `(0, 2)`, `(2, 4)`, `(0, 4)`: the middle triangle has
/// no boundary edge.
pub fn hex6() -> Graph {
    Graph::build(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (0, 4)],
    )
    .expect("valid")
}

/// Two triangles sharing the cut vertex 2.
pub fn bowtie() -> Graph {
    Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        .expect("valid")
}
