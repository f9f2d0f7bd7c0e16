//! Recover the outerplane embedding of a graph: boundary cycle, interior
//! faces, and the weak dual the solver partitions.

use treespan::fixtures;
use treespan::outerplanar::FaceKind;
use treespan::{outerplane_embed, Graph};

fn main() {
    let g = fixtures::hex6();
    println!("hexagon with chords (0,2) (2,4) (0,4): n={} m={}", g.n(), g.m());

    let emb = outerplane_embed(&g).unwrap();
    println!("outer cycle: {:?}", emb.outer_cycle());

    for face in emb.faces() {
        let kind = match face.kind {
            FaceKind::EFace => "E",
            FaceKind::IFace => "I",
        };
        println!(
            "face {} [{}]: vertices {:?}, boundary edges {:?}",
            face.id, kind, face.boundary, face.edge_ids
        );
    }

    let dual = emb.weak_dual();
    println!("weak dual edges: {:?}", dual.edges());
    println!("face weights (length - 2): {:?}", dual.weights());
    println!("special nodes (faces touching the boundary): {:?}", dual.special_nodes());

    // embedding fails for anything outside the class
    let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    println!("K4: {}", outerplane_embed(&k4).unwrap_err());
}
