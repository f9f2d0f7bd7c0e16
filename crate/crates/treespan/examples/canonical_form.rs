//! Rewrite an arbitrary tree spanner into canonical shape: every boundary
//! face misses exactly one of its outer edges, and each missing edge's
//! detour wraps a single boundary face. The stretch never goes up.

use treespan::fixtures;
use treespan::graph::stretch;
use treespan::outerplane_embed;
use treespan::spanner::{canonicalize, check_canonical};
use treespan::SpanningTree;

fn main() {
    let g = fixtures::fan5();
    let emb = outerplane_embed(&g).unwrap();

    // the boundary path 0-1-2-3-4 spans the fan but keeps whole faces intact
    let path = SpanningTree::build(&g, &[0, 1, 2, 3]).unwrap();
    report("boundary path", &g, &emb, &path);

    let canon = canonicalize(&emb, &path);
    report("canonicalized", &g, &emb, &canon);

    let again = canonicalize(&emb, &canon);
    println!(
        "canonicalize is idempotent: {}",
        again.edge_ids() == canon.edge_ids()
    );
}

fn report(
    label: &str,
    g: &treespan::Graph,
    emb: &treespan::OuterplaneEmbedding,
    tree: &SpanningTree,
) {
    let cert = stretch(g, tree);
    let r = check_canonical(emb, tree);
    println!("{label}: edges {:?}, stretch {}", tree.edge_ids(), cert.t());
    match (r.p1_witness, r.p2_witness) {
        (None, None) => println!("  canonical"),
        (p1, p2) => {
            if let Some(f) = p1 {
                println!("  face {f} does not miss exactly one outer edge");
            }
            if let Some(e) = p2 {
                let (u, v) = g.endpoints(e);
                println!("  detour of missing edge ({u},{v}) wraps several faces");
            }
        }
    }
}
