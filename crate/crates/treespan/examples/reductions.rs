//! The full reduction chain on one block, step by step: embedding, weak
//! dual, partition instance, supply/demand instance, solve, and lift.

use treespan::fixtures;
use treespan::graph::stretch;
use treespan::outerplane_embed;
use treespan::sdpartition::{reduce_to_sd, sd_to_spartition, solve_sd};
use treespan::spanner::build_spanner;
use treespan::spartition::reduce_to_spartition;

fn main() {
    let g = fixtures::hex6();
    let t = 3;
    println!("hexagon with three chords, asking for stretch {t}");

    let emb = outerplane_embed(&g).unwrap();
    let dual = emb.weak_dual();
    println!("\nstep 1, weak dual of the embedding:");
    println!("  edges {:?}, weights {:?}, special {:?}",
        dual.edges(), dual.weights(), dual.special_nodes());

    let inst = reduce_to_spartition(&dual, t);
    println!("\nstep 2, partition instance with budget t - 1:");
    print!("{}", indent(&inst.to_text()));

    let sd = reduce_to_sd(&inst);
    println!("\nstep 3, supply/demand tree, one pendant supply per special:");
    print!("{}", indent(&sd.to_text()));

    let assignment = solve_sd(&sd).unwrap();
    println!("\nstep 4, greedy post-order solve: {:?}", assignment.parts);

    let p = sd_to_spartition(&sd, &assignment).unwrap();
    println!("recovered face partition: {:?}", p.parts);

    let tree = build_spanner(&emb, &p, t).unwrap();
    let cert = stretch(&g, &tree);
    println!("\nstep 5, lifted spanning tree: edges {:?}", tree.edge_ids());
    println!("stretch {}", cert.t());
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
