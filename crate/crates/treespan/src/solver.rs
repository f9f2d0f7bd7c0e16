//! Whole-graph solving: split into 2-connected blocks, embed each block,
//! answer per block, and splice the block trees together.
//!
//! Every bridge lies in every spanning tree, so only blocks with three or
//! more vertices constrain the answer. Within such a block the question
//! becomes a partition problem on the weak dual, and feasibility is monotone
//! in `t`, which makes the minimum stretch binary-searchable per block.

use thiserror::Error;

use crate::graph::{
    biconnected_components, stretch, EdgeId, Graph, SpanningTree,
    StretchCertificate, Subgraph,
};
use crate::outerplanar::{
    outerplane_embed, NotOuterplanar, OuterplaneEmbedding, WeakDual,
};
use crate::graph::Block;
use crate::sdpartition::{
    reduce_to_sd, sd_feasible_at, sd_to_spartition, solve_sd,
};
use crate::spanner::{
    build_spanner, canonicalize, check_canonical, CanonicalReport,
};
use crate::spartition::reduce_to_spartition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(#[from] NotOuterplanar),
}

/// Size and outcome for one 2-connected block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDiagnostic {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Stretch bound the block was solved at; `None` when the queried bound
    /// admits no tree spanner of this block.
    pub t: Option<u32>,
}

/// Answer for one query, with the tree and its exact stretch when one exists.
#[derive(Clone, Debug)]
pub struct SpannerResult {
    /// The bound queried, or the optimum found by [`min_stretch`].
    pub t: u32,
    pub tree: Option<SpanningTree>,
    pub certificate: Option<StretchCertificate>,
    pub blocks: Vec<BlockDiagnostic>,
}

impl SpannerResult {
    pub fn exists(&self) -> bool {
        self.tree.is_some()
    }
}

/// Extraction is skipped when one block covers the whole graph; dense local
/// ids then coincide with the global ones.
enum BlockView<'a> {
    Whole(&'a Graph),
    Extracted(Subgraph),
}

impl BlockView<'_> {
    fn of<'a>(g: &'a Graph, block: &Block) -> BlockView<'a> {
        if block.edge_ids.len() == g.m() {
            BlockView::Whole(g)
        } else {
            BlockView::Extracted(g.extract_subgraph(&block.edge_ids))
        }
    }

    fn graph(&self) -> &Graph {
        match self {
            BlockView::Whole(g) => g,
            BlockView::Extracted(sub) => &sub.graph,
        }
    }

    fn to_global(&self, e: EdgeId) -> EdgeId {
        match self {
            BlockView::Whole(_) => e,
            BlockView::Extracted(sub) => sub.to_global_edge[e as usize],
        }
    }
}

/// Runs the reduction chain on an embedded block. `None` means no spanning
/// tree of the block has stretch at most `t`.
fn solve_embedded(
    emb: &OuterplaneEmbedding,
    dual: &WeakDual,
    t: u32,
) -> Option<SpanningTree> {
    if t < 2 {
        // a 2-connected block has a cycle, and cycles force a detour
        return None;
    }
    let inst = reduce_to_spartition(dual, t);
    let sd = reduce_to_sd(&inst);
    let assignment = solve_sd(&sd).ok()?;
    let p = sd_to_spartition(&sd, &assignment)
        .expect("solver output meets the recovery contract");
    let tree =
        build_spanner(emb, &p, t).expect("recovered partition is valid");
    Some(tree)
}

/// Decides whether `g` has a spanning tree in which every adjacent pair of
/// `g` stays within distance `t`, and builds one when it does.
pub fn tree_t_spanner(g: &Graph, t: u32) -> Result<SpannerResult, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let decomp = biconnected_components(g);
    let mut in_tree = vec![false; g.m()];
    let mut blocks = Vec::with_capacity(decomp.blocks.len());
    let mut all_feasible = t >= 1;
    for block in &decomp.blocks {
        let nb = block.vertices.len();
        let mb = block.edge_ids.len();
        if mb == 1 {
            in_tree[block.edge_ids[0] as usize] = true;
            blocks.push(BlockDiagnostic {
                vertex_count: nb,
                edge_count: mb,
                t: if t >= 1 { Some(1) } else { None },
            });
            continue;
        }
        let view = BlockView::of(g, block);
        let emb = outerplane_embed(view.graph())?;
        let dual = emb.weak_dual();
        let solved = solve_embedded(&emb, &dual, t);
        blocks.push(BlockDiagnostic {
            vertex_count: nb,
            edge_count: mb,
            t: solved.as_ref().map(|_| t),
        });
        match solved {
            Some(local) => {
                for &e in local.edge_ids() {
                    in_tree[view.to_global(e) as usize] = true;
                }
            }
            None => all_feasible = false,
        }
    }
    if !all_feasible {
        return Ok(SpannerResult { t, tree: None, certificate: None, blocks });
    }
    let ids: Vec<EdgeId> =
        (0..g.m() as EdgeId).filter(|&e| in_tree[e as usize]).collect();
    let tree = SpanningTree::build(g, &ids)
        .expect("block trees plus bridges span the graph");
    let cert = stretch(g, &tree);
    assert!(cert.t() <= t, "constructed tree respects the bound");
    Ok(SpannerResult {
        t,
        tree: Some(tree),
        certificate: Some(cert),
        blocks,
    })
}

/// Finds the smallest `t` for which a tree t-spanner exists, together with a
/// tree achieving it. Always succeeds on connected outerplanar input; the
/// answer is 1 exactly when `g` is a tree.
pub fn min_stretch(g: &Graph) -> Result<SpannerResult, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let decomp = biconnected_components(g);
    let mut in_tree = vec![false; g.m()];
    let mut blocks = Vec::with_capacity(decomp.blocks.len());
    let mut overall = 1u32;
    for block in &decomp.blocks {
        let nb = block.vertices.len();
        let mb = block.edge_ids.len();
        if mb == 1 {
            in_tree[block.edge_ids[0] as usize] = true;
            blocks.push(BlockDiagnostic {
                vertex_count: nb,
                edge_count: mb,
                t: Some(1),
            });
            continue;
        }
        let view = BlockView::of(g, block);
        let emb = outerplane_embed(view.graph())?;
        let dual = emb.weak_dual();
        // one probe instance serves the whole search: its tree and demands
        // do not depend on t, only the pendant supply values do
        let sd = reduce_to_sd(&reduce_to_spartition(&dual, 2));
        // feasibility is monotone and nb - 1 always works: the whole dual as
        // one part costs the face lengths minus the shared chords, nb - 2
        let (mut lo, mut hi) = (2u32, (nb - 1) as u32);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if sd_feasible_at(&sd, (mid - 1) as u64) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let local = solve_embedded(&emb, &dual, hi)
            .expect("binary search lands on a feasible bound");
        for &e in local.edge_ids() {
            in_tree[view.to_global(e) as usize] = true;
        }
        overall = overall.max(hi);
        blocks.push(BlockDiagnostic {
            vertex_count: nb,
            edge_count: mb,
            t: Some(hi),
        });
    }
    let ids: Vec<EdgeId> =
        (0..g.m() as EdgeId).filter(|&e| in_tree[e as usize]).collect();
    let tree = SpanningTree::build(g, &ids)
        .expect("block trees plus bridges span the graph");
    let cert = stretch(g, &tree);
    assert_eq!(cert.t(), overall, "per-block optima are tight");
    Ok(SpannerResult {
        t: overall,
        tree: Some(tree),
        certificate: Some(cert),
        blocks,
    })
}

fn restrict_to_block(view: &BlockView, in_tree: &[bool]) -> SpanningTree {
    let local_ids: Vec<EdgeId> = (0..view.graph().m() as EdgeId)
        .filter(|&e| in_tree[view.to_global(e) as usize])
        .collect();
    SpanningTree::build(view.graph(), &local_ids)
        .expect("a spanning tree restricts to one per block")
}

/// Rewrites `tree` into canonical shape block by block; bridges pass through.
/// The stretch never increases.
pub fn canonicalize_tree(
    g: &Graph,
    tree: &SpanningTree,
) -> Result<SpanningTree, SolveError> {
    let decomp = biconnected_components(g);
    let mut in_tree = vec![false; g.m()];
    for &e in tree.edge_ids() {
        in_tree[e as usize] = true;
    }
    for block in &decomp.blocks {
        if block.edge_ids.len() == 1 {
            continue;
        }
        let view = BlockView::of(g, block);
        let emb = outerplane_embed(view.graph())?;
        let local = restrict_to_block(&view, &in_tree);
        let canon = canonicalize(&emb, &local);
        for &e in local.edge_ids() {
            in_tree[view.to_global(e) as usize] = false;
        }
        for &e in canon.edge_ids() {
            in_tree[view.to_global(e) as usize] = true;
        }
    }
    let ids: Vec<EdgeId> =
        (0..g.m() as EdgeId).filter(|&e| in_tree[e as usize]).collect();
    Ok(SpanningTree::build(g, &ids).expect("swaps stay within blocks"))
}

/// Canonical-shape report per block with at least one cycle, in block order.
/// The `usize` is the block's index in [`biconnected_components`] order.
pub fn canonical_blocks(
    g: &Graph,
    tree: &SpanningTree,
) -> Result<Vec<(usize, CanonicalReport)>, SolveError> {
    let decomp = biconnected_components(g);
    let mut in_tree = vec![false; g.m()];
    for &e in tree.edge_ids() {
        in_tree[e as usize] = true;
    }
    let mut reports = Vec::new();
    for (i, block) in decomp.blocks.iter().enumerate() {
        if block.edge_ids.len() == 1 {
            continue;
        }
        let view = BlockView::of(g, block);
        let emb = outerplane_embed(view.graph())?;
        let local = restrict_to_block(&view, &in_tree);
        reports.push((i, check_canonical(&emb, &local)));
    }
    Ok(reports)
}
