//! Tree spanners of outerplanar graphs.
//!
//! A spanning tree `T` of a graph `G` is a *tree t-spanner* if every pair of
//! adjacent vertices in `G` is at distance at most `t` in `T`. This crate
//! decides, for connected outerplanar graphs, whether a tree t-spanner exists,
//! builds one in linear time when it does, and finds the minimum stretch over
//! all spanning trees by binary search.
//!
//! The solver works per biconnected block. Inside a block it runs a chain of
//! two reductions and undoes them:
//!
//! 1. [`outerplanar`] recovers the unique outerplane embedding, its interior
//!    faces and the weak dual (a tree for 2-connected outerplanar graphs).
//! 2. [`spartition`] restates the spanner question as a node partition of the
//!    weak dual: every part connected, exactly one "special" node per part,
//!    total weight of a part at most a budget.
//! 3. [`sdpartition`] restates that again as a supply/demand partition of a
//!    tree, solved greedily in one post-order sweep.
//! 4. [`spanner`] lifts the partition back to a spanning tree of the block
//!    and can rewrite any tree spanner into a canonical form.
//!
//! The fastest way in is the `examples/` directory, one runnable program per
//! capability:
//!
//! ```text
//! cargo run --example recognize_embedding   outer cycle, faces, weak dual
//! cargo run --example solve_spanner         decide + build a tree t-spanner
//! cargo run --example min_stretch           minimum stretch per fixture
//! cargo run --example reductions            both reductions, step by step
//! cargo run --example supply_demand         the partition solver on its own
//! cargo run --example canonical_form        canonicalizing a tree spanner
//! cargo run --example random_graphs         seeded random outerplanar graphs
//! cargo run --example graph_files           text formats and verification
//! cargo run --example scaling_bench         doubling benchmark
//! ```
//!
//! A thin CLI wraps the same entry points; see `treespan --help`.

pub mod bench;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod outerplanar;
pub mod sdpartition;
pub mod solver;
pub mod spanner;
pub mod spartition;

pub use graph::{Graph, SpanningTree, StretchCertificate};
pub use outerplanar::{outerplane_embed, OuterplaneEmbedding, WeakDual};
pub use solver::{min_stretch, tree_t_spanner, SpannerResult};
