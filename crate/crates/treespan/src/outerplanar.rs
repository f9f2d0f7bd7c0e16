//! Outerplane embeddings of 2-connected outerplanar graphs.
//!
//! Such a graph has a unique Hamiltonian cycle (its outer boundary) and its
//! remaining edges are pairwise non-crossing chords. The embedding is unique
//! up to reflection, so after normalization everything downstream is
//! deterministic: interior faces, edge classification, the weak dual.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

pub type FaceId = u32;

const NO_FACE: FaceId = FaceId::MAX;
const NO_VERTEX: Vertex = Vertex::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NotOuterplanar {
    /// Outerplanar graphs have at most 2n - 3 edges.
    #[error("{m} edges exceed the outerplanar bound {max}")]
    TooManyEdges { m: usize, max: usize },
    /// Every 2-connected outerplanar graph keeps a vertex of degree 2.
    #[error("no degree-2 vertex left to peel")]
    NoDegree2Vertex,
    /// No boundary cycle with non-crossing chords exists.
    #[error("chords cross or the boundary cycle is missing")]
    CrossingChords,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("vertex set does not induce a cycle")]
pub struct NotACycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    /// On the outer boundary cycle.
    External,
    /// A chord; separates two interior faces.
    Internal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceKind {
    /// Carries at least one external edge.
    EFace,
    /// Bounded by chords only.
    IFace,
}

/// One interior face. `edge_ids[k]` joins `boundary[k]` to
/// `boundary[(k + 1) % len]`, so both walks share the same cyclic order.
#[derive(Clone, Debug)]
pub struct Face {
    pub id: FaceId,
    pub boundary: Vec<Vertex>,
    pub edge_ids: Vec<EdgeId>,
    pub external_edges: Vec<EdgeId>,
    pub kind: FaceKind,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

/// Normalized outerplane embedding: the outer cycle starts at vertex 0 and
/// runs toward the smaller-id neighbor of 0, faces are listed in the order
/// the boundary scan closes them.
#[derive(Clone, Debug)]
pub struct OuterplaneEmbedding {
    graph: Graph,
    outer_cycle: Vec<Vertex>,
    position: Vec<u32>,
    faces: Vec<Face>,
    edge_class: Vec<EdgeClass>,
    incidence: Vec<[FaceId; 2]>,
}

impl OuterplaneEmbedding {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn outer_cycle(&self) -> &[Vertex] {
        &self.outer_cycle
    }

    /// Index of `v` on the outer cycle.
    pub fn position(&self, v: Vertex) -> u32 {
        self.position[v as usize]
    }

    /// Interior faces; there are exactly m - n + 1 of them.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f as usize]
    }

    pub fn edge_class(&self, e: EdgeId) -> EdgeClass {
        self.edge_class[e as usize]
    }

    pub fn is_external(&self, e: EdgeId) -> bool {
        self.edge_class[e as usize] == EdgeClass::External
    }

    /// Faces incident to `e`: one for an external edge, two for a chord.
    pub fn faces_of_edge(&self, e: EdgeId) -> &[FaceId] {
        let pair = &self.incidence[e as usize];
        let len = pair.iter().take_while(|&&f| f != NO_FACE).count();
        &pair[..len]
    }

    /// Weak dual: one node per interior face, one edge per chord. For a
    /// 2-connected outerplanar graph this is a tree. Node `f` weighs
    /// `|E(f)| - 2` and is special exactly when the face is an E-face.
    pub fn weak_dual(&self) -> WeakDual {
        let k = self.faces.len();
        let mut edges = Vec::with_capacity(k.saturating_sub(1));
        for e in 0..self.graph.m() as EdgeId {
            if self.edge_class(e) == EdgeClass::Internal {
                let fs = self.faces_of_edge(e);
                debug_assert_eq!(fs.len(), 2);
                edges.push((fs[0].min(fs[1]), fs[0].max(fs[1])));
            }
        }
        let mut adj_off = vec![0u32; k + 1];
        for &(a, b) in &edges {
            adj_off[a as usize + 1] += 1;
            adj_off[b as usize + 1] += 1;
        }
        for i in 0..k {
            adj_off[i + 1] += adj_off[i];
        }
        let mut cursor: Vec<u32> = adj_off[..k].to_vec();
        let mut adj_dat = vec![0u32; 2 * edges.len()];
        for &(a, b) in &edges {
            adj_dat[cursor[a as usize] as usize] = b;
            cursor[a as usize] += 1;
            adj_dat[cursor[b as usize] as usize] = a;
            cursor[b as usize] += 1;
        }
        let weights =
            self.faces.iter().map(|f| (f.len() - 2) as u64).collect();
        let special =
            self.faces.iter().map(|f| f.kind == FaceKind::EFace).collect();
        WeakDual { edges, adj_off, adj_dat, weights, special }
    }

    /// Interior faces enclosed by the cycle through `cycle_vertices`.
    ///
    /// The set must induce a cycle: sorted along the outer boundary, each
    /// consecutive pair (wrapping around) must be joined by an edge. The
    /// enclosed region is then exactly the faces whose boundary vertices all
    /// lie in the set.
    pub fn enclosed_region(
        &self,
        cycle_vertices: &[Vertex],
    ) -> Result<Vec<FaceId>, NotACycle> {
        let n = self.graph.n();
        if cycle_vertices.len() < 3 {
            return Err(NotACycle);
        }
        let mut marked = vec![false; n];
        for &v in cycle_vertices {
            if v as usize >= n || marked[v as usize] {
                return Err(NotACycle);
            }
            marked[v as usize] = true;
        }
        let mut by_pos = cycle_vertices.to_vec();
        by_pos.sort_unstable_by_key(|&v| self.position[v as usize]);
        for i in 0..by_pos.len() {
            let u = by_pos[i];
            let v = by_pos[(i + 1) % by_pos.len()];
            if self.graph.edge_between(u, v).is_none() {
                return Err(NotACycle);
            }
        }
        let enclosed = self
            .faces
            .iter()
            .filter(|f| f.boundary.iter().all(|&v| marked[v as usize]))
            .map(|f| f.id)
            .collect();
        Ok(enclosed)
    }
}

/// Weak dual of an embedding; see [`OuterplaneEmbedding::weak_dual`].
/// Adjacency is flat: offsets into one neighbor buffer.
#[derive(Clone, Debug)]
pub struct WeakDual {
    edges: Vec<(u32, u32)>,
    adj_off: Vec<u32>,
    adj_dat: Vec<u32>,
    weights: Vec<u64>,
    special: Vec<bool>,
}

impl WeakDual {
    pub fn node_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, f: u32) -> &[u32] {
        let lo = self.adj_off[f as usize] as usize;
        let hi = self.adj_off[f as usize + 1] as usize;
        &self.adj_dat[lo..hi]
    }

    pub fn degree(&self, f: u32) -> usize {
        self.neighbors(f).len()
    }

    pub fn weight(&self, f: u32) -> u64 {
        self.weights[f as usize]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_special(&self, f: u32) -> bool {
        self.special[f as usize]
    }

    pub fn special_nodes(&self) -> Vec<u32> {
        (0..self.node_count() as u32).filter(|&f| self.is_special(f)).collect()
    }

    pub fn is_tree(&self) -> bool {
        if self.node_count() == 0 {
            return false;
        }
        if self.edges.len() != self.node_count() - 1 {
            return false;
        }
        let mut seen = vec![false; self.node_count()];
        let mut queue = vec![0u32];
        seen[0] = true;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Recovers the unique outerplane embedding of a 2-connected outerplanar
/// graph, or reports why none exists.
///
/// Peels degree-2 vertices (smallest id first) down to a triangle, recording
/// each removal, then replays the removals backwards to rebuild the boundary
/// cycle. Crossing chords surface either as a failed re-insertion, as a
/// missing boundary edge, or as running out of degree-2 vertices.
pub fn outerplane_embed(g: &Graph) -> Result<OuterplaneEmbedding, NotOuterplanar> {
    let n = g.n();
    let m = g.m();
    if n >= 3 && m > 2 * n - 3 {
        return Err(NotOuterplanar::TooManyEdges { m, max: 2 * n - 3 });
    }
    if n < 3 {
        // single vertex or single edge: no interior faces
        if n == 2 && m != 1 {
            return Err(NotOuterplanar::CrossingChords);
        }
        return Ok(OuterplaneEmbedding {
            graph: g.clone(),
            outer_cycle: (0..n as Vertex).collect(),
            position: (0..n as u32).collect(),
            faces: Vec::new(),
            edge_class: vec![EdgeClass::External; m],
            incidence: vec![[NO_FACE; 2]; m],
        });
    }
    if m < n {
        // a Hamiltonian cycle alone needs n edges
        return Err(NotOuterplanar::CrossingChords);
    }

    let cyc = boundary_cycle(g)?;
    let mut position = vec![0u32; n];
    for (i, &v) in cyc.iter().enumerate() {
        position[v as usize] = i as u32;
    }

    let mut edge_class = vec![EdgeClass::Internal; m];
    for e in 0..m as EdgeId {
        let (u, v) = g.endpoints(e);
        let (pu, pv) = (position[u as usize], position[v as usize]);
        let (lo, hi) = (pu.min(pv), pu.max(pv));
        if hi - lo == 1 || (lo == 0 && hi == n as u32 - 1) {
            edge_class[e as usize] = EdgeClass::External;
        }
    }

    let faces = scan_faces(g, &cyc, &position, &edge_class)?;
    let mut incidence = vec![[NO_FACE; 2]; m];
    for face in &faces {
        for &e in &face.edge_ids {
            let slot = &mut incidence[e as usize];
            if slot[0] == NO_FACE {
                slot[0] = face.id;
            } else {
                debug_assert_eq!(slot[1], NO_FACE);
                slot[1] = face.id;
            }
        }
    }

    Ok(OuterplaneEmbedding {
        graph: g.clone(),
        outer_cycle: cyc,
        position,
        faces,
        edge_class,
        incidence,
    })
}

/// Finds the Hamiltonian boundary cycle, normalized to start at vertex 0 and
/// run toward the smaller neighbor.
fn boundary_cycle(g: &Graph) -> Result<Vec<Vertex>, NotOuterplanar> {
    let n = g.n();
    if n == 3 {
        if g.m() != 3 {
            return Err(NotOuterplanar::CrossingChords);
        }
        return Ok(vec![0, 1, 2]);
    }

    // peel degree-2 vertices, bridging the gap with a virtual edge
    let norm = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    let mut live_edges: FxHashSet<(Vertex, Vertex)> =
        FxHashSet::with_capacity_and_hasher(g.m() * 2, Default::default());
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut deg = vec![0u32; n];
    for &(u, v) in g.edges() {
        live_edges.insert(norm(u, v));
        adj[u as usize].push(v);
        adj[v as usize].push(u);
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    let mut alive = vec![true; n];
    let mut live_count = n;
    let mut heap: BinaryHeap<Reverse<Vertex>> = (0..n as Vertex)
        .filter(|&v| deg[v as usize] == 2)
        .map(Reverse)
        .collect();
    let mut steps: Vec<(Vertex, Vertex, Vertex)> = Vec::with_capacity(n - 3);

    while live_count > 3 {
        let Some(Reverse(v)) = heap.pop() else {
            return Err(NotOuterplanar::NoDegree2Vertex);
        };
        if !alive[v as usize] || deg[v as usize] != 2 {
            continue;
        }
        // compact the adjacency list down to live neighbors
        adj[v as usize]
            .retain(|&x| alive[x as usize] && live_edges.contains(&norm(v, x)));
        let [u, w] = adj[v as usize][..] else {
            unreachable!("degree counter disagrees with adjacency");
        };
        alive[v as usize] = false;
        live_count -= 1;
        live_edges.remove(&norm(v, u));
        live_edges.remove(&norm(v, w));
        deg[u as usize] -= 1;
        deg[w as usize] -= 1;
        if live_edges.insert(norm(u, w)) {
            adj[u as usize].push(w);
            adj[w as usize].push(u);
            deg[u as usize] += 1;
            deg[w as usize] += 1;
        }
        for x in [u, w] {
            if deg[x as usize] == 2 {
                heap.push(Reverse(x));
            }
        }
        steps.push((v, u, w));
    }

    let rest: Vec<Vertex> =
        (0..n as Vertex).filter(|&v| alive[v as usize]).collect();
    let [a, b, c] = rest[..] else { unreachable!("three vertices survive") };
    for pair in [norm(a, b), norm(a, c), norm(b, c)] {
        if !live_edges.contains(&pair) {
            return Err(NotOuterplanar::CrossingChords);
        }
    }

    // replay the removals backwards, growing the cycle by re-inserting each
    // vertex between its two bridged neighbors
    let mut next = vec![NO_VERTEX; n];
    let mut prev = vec![NO_VERTEX; n];
    for (x, y) in [(a, b), (b, c), (c, a)] {
        next[x as usize] = y;
        prev[y as usize] = x;
    }
    for &(v, u, w) in steps.iter().rev() {
        let (x, y) = if next[u as usize] == w {
            (u, w)
        } else if next[w as usize] == u {
            (w, u)
        } else {
            return Err(NotOuterplanar::CrossingChords);
        };
        next[x as usize] = v;
        prev[v as usize] = x;
        next[v as usize] = y;
        prev[y as usize] = v;
    }

    // normalize and make sure the cycle uses only real edges
    let forward = next[0] < prev[0];
    let mut cyc = Vec::with_capacity(n);
    let mut v = 0 as Vertex;
    loop {
        cyc.push(v);
        v = if forward { next[v as usize] } else { prev[v as usize] };
        if v == 0 {
            break;
        }
        if cyc.len() == n {
            return Err(NotOuterplanar::CrossingChords);
        }
    }
    if cyc.len() != n {
        return Err(NotOuterplanar::CrossingChords);
    }
    for i in 0..n {
        if g.edge_between(cyc[i], cyc[(i + 1) % n]).is_none() {
            return Err(NotOuterplanar::CrossingChords);
        }
    }
    Ok(cyc)
}

/// Sweeps the boundary once, closing a face per chord. The stack mirrors the
/// current lower boundary path; each entry remembers the edge down to its
/// predecessor, and `carry` joins the top of the stack to the sweep front.
fn scan_faces(
    g: &Graph,
    cyc: &[Vertex],
    position: &[u32],
    edge_class: &[EdgeClass],
) -> Result<Vec<Face>, NotOuterplanar> {
    let n = cyc.len();
    let eid = |i: usize, j: usize| {
        g.edge_between(cyc[i], cyc[j]).expect("boundary scan stays on edges")
    };

    // chords bucketed by their right position, inner chords first
    let mut bucket: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
    for e in 0..g.m() as EdgeId {
        if edge_class[e as usize] == EdgeClass::Internal {
            let (u, v) = g.endpoints(e);
            let (pu, pv) = (position[u as usize] as usize, position[v as usize] as usize);
            bucket[pu.max(pv)].push((pu.min(pv), e));
        }
    }
    for b in bucket.iter_mut() {
        b.sort_unstable_by_key(|&(i, _)| Reverse(i));
    }
    bucket[n - 1].push((0, eid(n - 1, 0)));

    let mut faces: Vec<Face> = Vec::with_capacity(g.m() - n + 1);
    let mut stack: Vec<(usize, EdgeId)> = vec![(0, EdgeId::MAX)];
    for j in 1..n {
        let mut carry = eid(j - 1, j);
        let closing = j == n - 1;
        for &(i, chord) in &bucket[j] {
            let mut popped: Vec<(usize, EdgeId)> = Vec::new();
            while stack.last().is_some_and(|&(p, _)| p > i) {
                popped.push(stack.pop().expect("nonempty while top > i"));
            }
            if stack.last().map(|&(p, _)| p) != Some(i) {
                return Err(NotOuterplanar::CrossingChords);
            }
            popped.reverse();
            let mut boundary = Vec::with_capacity(popped.len() + 2);
            let mut edge_ids = Vec::with_capacity(popped.len() + 2);
            boundary.push(cyc[i]);
            for &(p, down) in &popped {
                edge_ids.push(down);
                boundary.push(cyc[p]);
            }
            edge_ids.push(carry);
            boundary.push(cyc[j]);
            edge_ids.push(chord);
            debug_assert!(edge_ids.len() >= 3, "simple graphs have no 2-gon");
            let external_edges: Vec<EdgeId> = edge_ids
                .iter()
                .copied()
                .filter(|&e| edge_class[e as usize] == EdgeClass::External)
                .collect();
            let kind = if external_edges.is_empty() {
                FaceKind::IFace
            } else {
                FaceKind::EFace
            };
            faces.push(Face {
                id: faces.len() as FaceId,
                boundary,
                edge_ids,
                external_edges,
                kind,
            });
            carry = chord;
        }
        if !closing {
            stack.push((j, carry));
        }
    }
    debug_assert_eq!(stack.len(), 1);
    debug_assert_eq!(faces.len(), g.m() - n + 1);
    Ok(faces)
}

/// Exact fraction in `[0, 1]` used to pick how many chords survive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: u32,
    pub den: u32,
}

impl Fraction {
    pub fn new(num: u32, den: u32) -> Self {
        assert!(den != 0, "zero denominator");
        assert!(num <= den, "fraction above 1");
        Fraction { num, den }
    }

    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    /// `round(self * count)`, halves rounding up. Exact integer arithmetic.
    pub fn scale(&self, count: usize) -> usize {
        let num = self.num as u128 * count as u128;
        let den = self.den as u128;
        ((2 * num + den) / (2 * den)) as usize
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bad fraction {0:?}: want \"p/q\", a decimal, or an integer in [0, 1]")]
pub struct FractionParseError(pub String);

impl FromStr for Fraction {
    type Err = FractionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FractionParseError(s.to_string());
        let (num, den) = if let Some((p, q)) = s.split_once('/') {
            let num: u32 = p.trim().parse().map_err(|_| bad())?;
            let den: u32 = q.trim().parse().map_err(|_| bad())?;
            (num, den)
        } else if let Some((whole, frac)) = s.split_once('.') {
            if frac.len() > 9 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let whole: u32 = if whole.is_empty() {
                0
            } else {
                whole.parse().map_err(|_| bad())?
            };
            let den = 10u64.pow(frac.len() as u32);
            let frac: u64 = if frac.is_empty() {
                return Err(bad());
            } else {
                frac.parse().map_err(|_| bad())?
            };
            let num = whole as u64 * den + frac;
            if num > den || den > u32::MAX as u64 {
                return Err(bad());
            }
            (num as u32, den as u32)
        } else {
            let whole: u32 = s.trim().parse().map_err(|_| bad())?;
            (whole, 1)
        };
        if den == 0 || num > den {
            return Err(bad());
        }
        Ok(Fraction { num, den })
    }
}

/// Random 2-connected outerplanar graph on `n >= 3` vertices, deterministic
/// per seed across platforms.
///
/// Triangulates the n-gon by recursive splitting, then keeps
/// `round(chords * (n - 3))` of the chords. Edge ids: boundary cycle first
/// (`(i, i+1)`, then `(n-1, 0)`), surviving chords after, sorted.
pub fn random_outerplanar(n: usize, chords: Fraction, seed: u64) -> Graph {
    assert!(n >= 3, "need at least a triangle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_chords: Vec<(Vertex, Vertex)> = Vec::with_capacity(n - 3);
    let mut arcs: Vec<(Vertex, Vertex)> = vec![(0, n as Vertex - 1)];
    while let Some((l, r)) = arcs.pop() {
        if r - l < 2 {
            continue;
        }
        let k = rng.gen_range(l + 1..r);
        if k - l >= 2 {
            all_chords.push((l, k));
        }
        if r - k >= 2 {
            all_chords.push((k, r));
        }
        arcs.push((l, k));
        arcs.push((k, r));
    }
    debug_assert_eq!(all_chords.len(), n.saturating_sub(3));

    let keep = chords.scale(n - 3).min(all_chords.len());
    for i in 0..keep {
        let j = rng.gen_range(i..all_chords.len());
        all_chords.swap(i, j);
    }
    let mut kept = all_chords[..keep].to_vec();
    kept.sort_unstable();

    let mut pairs: Vec<(Vertex, Vertex)> =
        (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
    pairs.push((n as Vertex - 1, 0));
    pairs.extend(kept);
    Graph::build(n, &pairs).expect("generator emits valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn face_sets(emb: &OuterplaneEmbedding) -> Vec<Vec<Vertex>> {
        emb.faces()
            .iter()
            .map(|f| {
                let mut b = f.boundary.clone();
                b.sort_unstable();
                b
            })
            .collect()
    }

    #[test]
    fn cycle_embeds_to_a_single_face() {
        let g = fixtures::cycle(6);
        let emb = outerplane_embed(&g).unwrap();
        assert_eq!(emb.outer_cycle(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(emb.faces().len(), 1);
        assert_eq!(emb.face(0).boundary, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(emb.face(0).kind, FaceKind::EFace);
        assert!((0..6).all(|e| emb.is_external(e)));
    }

    #[test]
    fn d4_embedding() {
        let g = fixtures::d4();
        let emb = outerplane_embed(&g).unwrap();
        assert_eq!(emb.outer_cycle(), &[0, 1, 2, 3]);
        assert_eq!(face_sets(&emb), vec![vec![0, 1, 2], vec![0, 2, 3]]);
        assert_eq!(emb.edge_class(4), EdgeClass::Internal);
        assert!((0..4).all(|e| emb.is_external(e)));
        assert_eq!(emb.faces_of_edge(4), &[0, 1]);
        assert_eq!(emb.faces_of_edge(0), &[0]);
    }

    #[test]
    fn hex6_embedding_faces_and_kinds() {
        let g = fixtures::hex6();
        let emb = outerplane_embed(&g).unwrap();
        assert_eq!(
            face_sets(&emb),
            vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 2, 4], vec![0, 4, 5]]
        );
        let kinds: Vec<FaceKind> = emb.faces().iter().map(|f| f.kind).collect();
        assert_eq!(
            kinds,
            vec![FaceKind::EFace, FaceKind::EFace, FaceKind::IFace, FaceKind::EFace]
        );
        // the inner triangle is bounded by the three chords
        assert_eq!(emb.face(2).edge_ids, vec![6, 7, 8]);
        assert!(emb.face(2).external_edges.is_empty());
    }

    #[test]
    fn face_count_identity_on_fixtures() {
        for g in [
            fixtures::cycle(3),
            fixtures::cycle(8),
            fixtures::d4(),
            fixtures::fan5(),
            fixtures::hex6(),
        ] {
            let emb = outerplane_embed(&g).unwrap();
            assert_eq!(emb.faces().len(), g.m() - g.n() + 1);
            let total: usize = emb.faces().iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * g.m() - g.n());
        }
    }

    #[test]
    fn embedding_ignores_input_edge_order() {
        let g = fixtures::hex6();
        let mut rev: Vec<(Vertex, Vertex)> = g.edges().to_vec();
        rev.reverse();
        let h = Graph::build(6, &rev).unwrap();
        let e1 = outerplane_embed(&g).unwrap();
        let e2 = outerplane_embed(&h).unwrap();
        assert_eq!(e1.outer_cycle(), e2.outer_cycle());
        let mut s1 = face_sets(&e1);
        let mut s2 = face_sets(&e2);
        s1.sort();
        s2.sort();
        assert_eq!(s1, s2);
    }

    #[test]
    fn single_edge_block_embeds_degenerately() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        let emb = outerplane_embed(&g).unwrap();
        assert!(emb.faces().is_empty());
        assert!(emb.is_external(0));
    }

    #[test]
    fn k4_has_too_many_edges() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(
            outerplane_embed(&g).unwrap_err(),
            NotOuterplanar::TooManyEdges { m: 6, max: 5 }
        );
    }

    #[test]
    fn k23_is_rejected() {
        let g = Graph::build(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        assert_eq!(outerplane_embed(&g).unwrap_err(), NotOuterplanar::CrossingChords);
    }

    #[test]
    fn crossing_chords_are_rejected() {
        // C6 plus the crossing pair (0,3), (1,4)
        let mut pairs: Vec<(Vertex, Vertex)> =
            (0..5).map(|i| (i, i + 1)).collect();
        pairs.push((5, 0));
        pairs.push((0, 3));
        pairs.push((1, 4));
        let g = Graph::build(6, &pairs).unwrap();
        assert!(outerplane_embed(&g).is_err());
    }

    #[test]
    fn non_two_connected_input_is_rejected() {
        let g = fixtures::bowtie();
        assert!(outerplane_embed(&g).is_err());
        let path = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(outerplane_embed(&path).is_err());
    }

    #[test]
    fn weak_dual_of_hex6_is_a_star() {
        let emb = outerplane_embed(&fixtures::hex6()).unwrap();
        let dual = emb.weak_dual();
        assert_eq!(dual.node_count(), 4);
        assert_eq!(dual.edges(), &[(0, 2), (1, 2), (2, 3)]);
        assert_eq!(dual.weights(), &[1, 1, 1, 1]);
        assert_eq!(dual.special_nodes(), vec![0, 1, 3]);
        assert!(dual.is_tree());
    }

    #[test]
    fn weak_dual_special_matches_degree_deficit() {
        for g in [
            fixtures::cycle(5),
            fixtures::d4(),
            fixtures::fan5(),
            fixtures::hex6(),
            random_outerplanar(40, Fraction::new(1, 2), 7),
            random_outerplanar(40, Fraction::ONE, 8),
        ] {
            let emb = outerplane_embed(&g).unwrap();
            let dual = emb.weak_dual();
            for f in emb.faces() {
                // a face is an E-face exactly when some boundary edge has no
                // second face, i.e. its dual degree undershoots its length
                assert_eq!(
                    dual.is_special(f.id),
                    dual.degree(f.id) < f.len(),
                );
            }
        }
    }

    #[test]
    fn enclosed_region_on_fixtures() {
        let emb = outerplane_embed(&fixtures::d4()).unwrap();
        assert_eq!(emb.enclosed_region(&[0, 1, 2]).unwrap(), vec![0]);
        assert_eq!(emb.enclosed_region(&[2, 3, 0]).unwrap(), vec![1]);
        assert_eq!(emb.enclosed_region(&[0, 1, 2, 3]).unwrap(), vec![0, 1]);
        assert_eq!(emb.enclosed_region(&[0, 1, 3]).unwrap_err(), NotACycle);

        let emb = outerplane_embed(&fixtures::hex6()).unwrap();
        assert_eq!(emb.enclosed_region(&[0, 2, 4]).unwrap(), vec![2]);
        assert_eq!(emb.enclosed_region(&[0, 1, 2, 4]).unwrap(), vec![0, 2]);
        assert_eq!(
            emb.enclosed_region(&[0, 1, 2, 3, 4, 5]).unwrap(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!("1/2".parse::<Fraction>().unwrap(), Fraction::new(1, 2));
        assert_eq!("0.25".parse::<Fraction>().unwrap(), Fraction::new(25, 100));
        assert_eq!("1".parse::<Fraction>().unwrap(), Fraction::ONE);
        assert_eq!("0".parse::<Fraction>().unwrap(), Fraction::new(0, 1));
        assert!("3/2".parse::<Fraction>().is_err());
        assert!("1.5".parse::<Fraction>().is_err());
        assert!("".parse::<Fraction>().is_err());
        assert_eq!(Fraction::new(1, 2).scale(5), 3); // rounds half up
        assert_eq!(Fraction::new(1, 3).scale(4), 1);
    }

    #[test]
    fn random_graphs_embed_and_are_deterministic() {
        for seed in 0..20 {
            let g = random_outerplanar(24, Fraction::new(1, 2), seed);
            assert!(g.is_connected());
            let emb = outerplane_embed(&g).unwrap();
            assert_eq!(emb.outer_cycle().len(), 24);
        }
        let a = random_outerplanar(50, Fraction::new(2, 3), 99);
        let b = random_outerplanar(50, Fraction::new(2, 3), 99);
        assert_eq!(a.edges(), b.edges());

        let sparse = random_outerplanar(30, Fraction::ZERO, 1);
        assert_eq!(sparse.m(), 30);
        let maximal = random_outerplanar(30, Fraction::ONE, 1);
        assert_eq!(maximal.m(), 2 * 30 - 3);
    }
}
