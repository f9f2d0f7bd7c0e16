//! From a dual partition to a spanning tree, and the canonical shape of
//! tree spanners on embedded blocks.
//!
//! A valid partition of the weak dual merges the faces of each part into one
//! cycle. Dropping the chords interior to a part leaves a 2-connected graph
//! whose faces are exactly those cycles; dropping one boundary edge per face
//! then yields a spanning tree whose detours stay within the budget.

use thiserror::Error;

use crate::graph::{EdgeId, SpanningTree, Vertex};
use crate::outerplanar::{FaceId, FaceKind, OuterplaneEmbedding};
use crate::spartition::{reduce_to_spartition, verify_spartition, SPartition, Violation};

const NO_PART: u32 = u32::MAX;

/// Per-part subgraphs of an embedding under a face partition.
#[derive(Clone, Debug)]
pub struct PartSubgraphs {
    pub parts: Vec<PartSubgraph>,
    /// Number of interior faces incident to each edge (1 or 2).
    pub face_count: Vec<u8>,
    /// Up to two part indices whose faces touch each edge.
    pub part_of: Vec<[u32; 2]>,
}

#[derive(Clone, Debug)]
pub struct PartSubgraph {
    pub vertices: Vec<Vertex>,
    pub edge_ids: Vec<EdgeId>,
    /// Edges both of whose faces lie in this part; removing them merges the
    /// part's faces into one cycle.
    pub internal_edges: Vec<EdgeId>,
}

impl PartSubgraphs {
    pub fn build(emb: &OuterplaneEmbedding, p: &SPartition) -> Self {
        let m = emb.graph().m();
        let mut face_count = vec![0u8; m];
        let mut part_of = vec![[NO_PART; 2]; m];
        let mut part_of_face = vec![NO_PART; emb.faces().len()];
        for (i, part) in p.parts.iter().enumerate() {
            for &f in part {
                part_of_face[f] = i as u32;
            }
        }
        for face in emb.faces() {
            let i = part_of_face[face.id as usize];
            for &e in &face.edge_ids {
                face_count[e as usize] += 1;
                let slot = &mut part_of[e as usize];
                if slot[0] == NO_PART {
                    slot[0] = i;
                } else if slot[0] != i {
                    slot[1] = i;
                }
            }
        }

        let mut parts = Vec::with_capacity(p.parts.len());
        let mut edge_stamp = vec![NO_PART; m];
        let mut vertex_stamp = vec![NO_PART; emb.graph().n()];
        for (i, part) in p.parts.iter().enumerate() {
            let mut edge_ids = Vec::new();
            let mut vertices = Vec::new();
            let mut internal_edges = Vec::new();
            for &f in part {
                for &e in &emb.face(f as FaceId).edge_ids {
                    if edge_stamp[e as usize] != i as u32 {
                        edge_stamp[e as usize] = i as u32;
                        edge_ids.push(e);
                        if face_count[e as usize] == 2
                            && part_of[e as usize] == [i as u32, NO_PART]
                        {
                            internal_edges.push(e);
                        }
                    }
                }
                for &v in &emb.face(f as FaceId).boundary {
                    if vertex_stamp[v as usize] != i as u32 {
                        vertex_stamp[v as usize] = i as u32;
                        vertices.push(v);
                    }
                }
            }
            edge_ids.sort_unstable();
            vertices.sort_unstable();
            internal_edges.sort_unstable();
            parts.push(PartSubgraph { vertices, edge_ids, internal_edges });
        }
        PartSubgraphs { parts, face_count, part_of }
    }
}

/// Boundary edges of each face, recomputed from face incidence alone: an
/// edge is on the outer boundary exactly when it touches a single face.
/// Cross-checks the positional classification the embedding stores.
pub fn external_edges_of_faces(emb: &OuterplaneEmbedding) -> Vec<Vec<EdgeId>> {
    emb.faces()
        .iter()
        .map(|face| {
            face.edge_ids
                .iter()
                .copied()
                .filter(|&e| emb.faces_of_edge(e).len() == 1)
                .collect()
        })
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("partition does not certify the budget: {0:?}")]
pub struct InvalidPartition(pub Violation);

/// Turns a valid dual partition for stretch bound `t` into a tree t-spanner
/// of the embedded block.
///
/// Drops every part-internal chord, merging each part's faces into one
/// cycle, then removes the smallest-id outer boundary edge of each merged
/// face. The detour around a removed edge runs along its face, whose length
/// is the part's weight plus two, hence at most `t + 1` vertices.
pub fn build_spanner(
    emb: &OuterplaneEmbedding,
    p: &SPartition,
    t: u32,
) -> Result<SpanningTree, InvalidPartition> {
    let dual = emb.weak_dual();
    let inst = reduce_to_spartition(&dual, t);
    verify_spartition(&inst, p).map_err(InvalidPartition)?;

    let subs = PartSubgraphs::build(emb, p);
    let g = emb.graph();
    let mut dropped = vec![false; g.m()];
    for part in &subs.parts {
        for &e in &part.internal_edges {
            dropped[e as usize] = true;
        }
    }
    // dropping chords never touches the outer boundary, so a merged face's
    // boundary edges are exactly its members' boundary edges
    let mut removed = vec![false; g.m()];
    for part in &p.parts {
        let e = part
            .iter()
            .flat_map(|&f| emb.face(f as FaceId).external_edges.iter().copied())
            .min()
            .expect("a verified part holds a face with boundary edges");
        removed[e as usize] = true;
    }
    let ids: Vec<EdgeId> = (0..g.m() as EdgeId)
        .filter(|&e| !dropped[e as usize] && !removed[e as usize])
        .collect();
    Ok(SpanningTree::build(g, &ids).expect("one edge removed per merged face"))
}

/// Canonical shape report; see [`check_canonical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalReport {
    /// First E-face (in id order) not missing exactly one boundary edge.
    pub p1_witness: Option<FaceId>,
    /// First missing boundary edge (in id order) whose tree detour encloses
    /// more than one E-face.
    pub p2_witness: Option<EdgeId>,
}

impl CanonicalReport {
    pub fn is_canonical(&self) -> bool {
        self.p1_witness.is_none() && self.p2_witness.is_none()
    }
}

/// A tree spanner is canonical when every E-face misses exactly one of its
/// boundary edges (P1) and the detour cycle of every missing boundary edge
/// encloses exactly one E-face (P2).
pub fn check_canonical(
    emb: &OuterplaneEmbedding,
    tree: &SpanningTree,
) -> CanonicalReport {
    let mut p1_witness = None;
    for face in emb.faces() {
        if face.kind != FaceKind::EFace {
            continue;
        }
        let missing =
            face.external_edges.iter().filter(|&&e| !tree.contains(e)).count();
        if missing != 1 {
            p1_witness = Some(face.id);
            break;
        }
    }
    let mut p2_witness = None;
    for e in 0..emb.graph().m() as EdgeId {
        if tree.contains(e) || !emb.is_external(e) {
            continue;
        }
        let (u, v) = emb.graph().endpoints(e);
        let cycle = tree.tree_path(u, v);
        let enclosed = emb
            .enclosed_region(&cycle)
            .expect("a tree path plus its chord is a cycle");
        let e_faces = enclosed
            .iter()
            .filter(|&&f| emb.face(f).kind == FaceKind::EFace)
            .count();
        if e_faces != 1 {
            p2_witness = Some(e);
            break;
        }
    }
    CanonicalReport { p1_witness, p2_witness }
}

/// Rewrites a spanning tree into canonical shape without increasing its
/// stretch.
///
/// While some E-face keeps all its boundary edges, the smallest such face
/// gives up its smallest-id boundary edge; the unique other face edge
/// re-connecting the two halves takes its place. A face never regresses once
/// fixed, so the loop stops after at most one swap per face.
pub fn canonicalize(
    emb: &OuterplaneEmbedding,
    tree: &SpanningTree,
) -> SpanningTree {
    let g = emb.graph();
    let mut in_tree = vec![false; g.m()];
    for &e in tree.edge_ids() {
        in_tree[e as usize] = true;
    }
    let e_faces = emb
        .faces()
        .iter()
        .filter(|f| f.kind == FaceKind::EFace)
        .count();
    let mut swaps = 0usize;
    loop {
        let violating = emb.faces().iter().find(|face| {
            face.kind == FaceKind::EFace
                && face.external_edges.iter().all(|&e| in_tree[e as usize])
        });
        let Some(face) = violating else { break };
        let e = *face.external_edges.iter().min().expect("E-face");
        // two-color the tree split by e
        let (a, _) = g.endpoints(e);
        let mut side = vec![false; g.n()];
        let mut queue = vec![a];
        side[a as usize] = true;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &(w, f) in g.neighbors(v) {
                if f != e && in_tree[f as usize] && !side[w as usize] {
                    side[w as usize] = true;
                    queue.push(w);
                }
            }
        }
        let substitute = face
            .edge_ids
            .iter()
            .copied()
            .filter(|&f| f != e)
            .find(|&f| {
                let (u, v) = g.endpoints(f);
                side[u as usize] != side[v as usize]
            })
            .expect("face boundary crosses the split twice");
        in_tree[e as usize] = false;
        in_tree[substitute as usize] = true;
        swaps += 1;
        assert!(swaps <= e_faces, "each face settles after one swap");
    }
    let ids: Vec<EdgeId> = (0..g.m() as EdgeId)
        .filter(|&e| in_tree[e as usize])
        .collect();
    SpanningTree::build(g, &ids).expect("swaps preserve the spanning tree")
}
