//! The text formats: write a graph file, read it back, solve, save the tree,
//! and verify it independently. Same formats as the CLI.

use treespan::graph::stretch;
use treespan::io::{
    graph_to_text, parse_graph_file, parse_tree_file, tree_to_text,
};
use treespan::{fixtures, tree_t_spanner, SpanningTree};

fn main() {
    let g = fixtures::hex6();
    let graph_text = graph_to_text(&g);
    println!("graph file:\n{graph_text}");

    let parsed = parse_graph_file(&graph_text).unwrap();
    let r = tree_t_spanner(&parsed, 3).unwrap();
    let tree = r.tree.unwrap();
    let tree_text = tree_to_text(&parsed, &tree);
    println!("tree file (stretch {}):\n{tree_text}", r.certificate.unwrap().t());

    // a verifier only needs the two files
    let ids = parse_tree_file(&tree_text, &parsed).unwrap();
    let rebuilt = SpanningTree::build(&parsed, &ids).unwrap();
    println!("reloaded tree has stretch {}", stretch(&parsed, &rebuilt).t());

    // malformed input reports the offending line
    let broken = "6 9\n0 1\n1 six\n";
    println!("\nparsing a broken file: {}", parse_graph_file(broken).unwrap_err());
    let no_such = parse_tree_file("0 3\n", &parsed).unwrap_err();
    println!("tree edge not in the graph: {no_such}");
}
