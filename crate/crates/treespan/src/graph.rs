//! Graph container with stable edge ids, spanning trees, biconnected blocks,
//! and stretch certificates.

use rustc_hash::FxHashMap;
use thiserror::Error;

/// Vertices are dense indices `0..n`.
pub type Vertex = u32;
/// Edge ids follow deduplicated input order and never move afterwards.
pub type EdgeId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    LoopEdge(Vertex),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(Vertex, usize),
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(&'static str),
    #[error("{0} vertices exceeds the enumeration cap {1}")]
    InstanceTooLarge(usize, usize),
}

/// Undirected simple graph. Parallel input edges collapse to their first
/// occurrence so ids stay dense; self-loops are rejected.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    index: FxHashMap<(Vertex, Vertex), EdgeId>,
    connected: bool,
}

impl Graph {
    pub fn build(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adj = vec![Vec::new(); n];
        let mut index =
            FxHashMap::with_capacity_and_hasher(pairs.len(), Default::default());
        for &(u, v) in pairs {
            if u as usize >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let key = (u.min(v), u.max(v));
            if index.contains_key(&key) {
                continue;
            }
            let id = edges.len() as EdgeId;
            index.insert(key, id);
            edges.push((u, v));
            adj[u as usize].push((v, id));
            adj[v as usize].push((u, id));
        }
        let connected = bfs_reaches_all(n, &adj);
        Ok(Graph { n, edges, adj, index, connected })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Endpoints in input orientation.
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e as usize]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbors of `v` as `(other endpoint, edge id)`, in edge id order.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Re-indexes the subgraph spanned by `edge_ids` to dense local ids.
    /// Local vertex ids follow sorted global order, local edge ids follow
    /// sorted global edge id order.
    pub fn extract_subgraph(&self, edge_ids: &[EdgeId]) -> Subgraph {
        let mut ids: Vec<EdgeId> = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut verts: Vec<Vertex> = Vec::with_capacity(ids.len() + 1);
        for &e in &ids {
            let (u, v) = self.endpoints(e);
            verts.push(u);
            verts.push(v);
        }
        verts.sort_unstable();
        verts.dedup();
        let mut local =
            FxHashMap::with_capacity_and_hasher(verts.len(), Default::default());
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i as Vertex);
        }
        let pairs: Vec<(Vertex, Vertex)> = ids
            .iter()
            .map(|&e| {
                let (u, v) = self.endpoints(e);
                (local[&u], local[&v])
            })
            .collect();
        let graph = Graph::build(verts.len(), &pairs).expect("host edges stay valid");
        Subgraph { graph, to_global_vertex: verts, to_global_edge: ids }
    }
}

fn bfs_reaches_all(n: usize, adj: &[Vec<(Vertex, EdgeId)>]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = vec![0u32];
    seen[0] = true;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head] as usize;
        head += 1;
        for &(w, _) in &adj[v] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    queue.len() == n
}

/// A subgraph with maps back to the host graph's ids.
pub struct Subgraph {
    pub graph: Graph,
    pub to_global_vertex: Vec<Vertex>,
    pub to_global_edge: Vec<EdgeId>,
}

/// Spanning tree of a host graph, stored as an edge id set plus a parent map
/// rooted at vertex 0.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    edge_ids: Vec<EdgeId>,
    in_tree: Vec<bool>,
    parent: Vec<Option<(Vertex, EdgeId)>>,
    depth: Vec<u32>,
    order: Vec<Vertex>,
}

impl SpanningTree {
    pub fn build(g: &Graph, edge_ids: &[EdgeId]) -> Result<Self, GraphError> {
        if g.n() == 0 {
            return Err(GraphError::NotSpanningTree("empty host graph"));
        }
        if edge_ids.len() != g.n() - 1 {
            return Err(GraphError::NotSpanningTree("edge count is not n - 1"));
        }
        let mut in_tree = vec![false; g.m()];
        for &e in edge_ids {
            if e as usize >= g.m() {
                return Err(GraphError::NotSpanningTree("unknown edge id"));
            }
            if in_tree[e as usize] {
                return Err(GraphError::NotSpanningTree("duplicate edge id"));
            }
            in_tree[e as usize] = true;
        }
        let mut parent = vec![None; g.n()];
        let mut depth = vec![0u32; g.n()];
        let mut order = Vec::with_capacity(g.n());
        let mut seen = vec![false; g.n()];
        seen[0] = true;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(w, e) in g.neighbors(v) {
                if in_tree[e as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = Some((v, e));
                    depth[w as usize] = depth[v as usize] + 1;
                    order.push(w);
                }
            }
        }
        if order.len() != g.n() {
            return Err(GraphError::NotSpanningTree("does not span"));
        }
        let mut edge_ids = edge_ids.to_vec();
        edge_ids.sort_unstable();
        Ok(SpanningTree { edge_ids, in_tree, parent, depth, order })
    }

    /// Tree edge ids, ascending.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_tree[e as usize]
    }

    pub fn root(&self) -> Vertex {
        0
    }

    pub fn parent(&self, v: Vertex) -> Option<(Vertex, EdgeId)> {
        self.parent[v as usize]
    }

    pub fn depth(&self, v: Vertex) -> u32 {
        self.depth[v as usize]
    }

    /// Vertices in BFS order from the root; parents precede children.
    pub fn bfs_order(&self) -> &[Vertex] {
        &self.order
    }

    /// Unique tree path from `u` to `v`, both endpoints included.
    pub fn tree_path(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut a = u;
        let mut b = v;
        let mut front = Vec::new();
        let mut back = Vec::new();
        while self.depth(a) > self.depth(b) {
            front.push(a);
            a = self.parent(a).expect("deeper vertex has a parent").0;
        }
        while self.depth(b) > self.depth(a) {
            back.push(b);
            b = self.parent(b).expect("deeper vertex has a parent").0;
        }
        while a != b {
            front.push(a);
            back.push(b);
            a = self.parent(a).expect("distinct vertices below the root").0;
            b = self.parent(b).expect("distinct vertices below the root").0;
        }
        front.push(a);
        front.extend(back.into_iter().rev());
        front
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> u32 {
        let mut a = u;
        let mut b = v;
        let mut d = 0;
        while self.depth(a) > self.depth(b) {
            a = self.parent(a).expect("deeper vertex has a parent").0;
            d += 1;
        }
        while self.depth(b) > self.depth(a) {
            b = self.parent(b).expect("deeper vertex has a parent").0;
            d += 1;
        }
        while a != b {
            a = self.parent(a).expect("distinct vertices below the root").0;
            b = self.parent(b).expect("distinct vertices below the root").0;
            d += 2;
        }
        d
    }
}

/// Stretch of a spanning tree: the maximum tree distance between the
/// endpoints of a non-tree edge, with one maximizing edge as witness and the
/// full per-edge map as evidence.
#[derive(Clone, Debug)]
pub struct StretchCertificate {
    t: u32,
    witness: Option<EdgeId>,
    per_edge: Vec<(EdgeId, u32)>,
}

impl StretchCertificate {
    /// The stretch; 1 exactly when the tree already carries every edge.
    pub fn t(&self) -> u32 {
        self.t
    }

    /// Smallest-id non-tree edge attaining the stretch.
    pub fn witness(&self) -> Option<EdgeId> {
        self.witness
    }

    /// `(edge id, tree distance of its endpoints)` for every non-tree edge,
    /// ascending by id.
    pub fn per_edge(&self) -> &[(EdgeId, u32)] {
        &self.per_edge
    }
}

/// Computes the stretch certificate for `tree` inside `g`.
///
/// Runs offline lowest-common-ancestor resolution over all non-tree edges in
/// one tree traversal, so large instances stay near-linear.
pub fn stretch(g: &Graph, tree: &SpanningTree) -> StretchCertificate {
    let n = g.n();
    let queries: Vec<EdgeId> =
        (0..g.m() as EdgeId).filter(|&e| !tree.contains(e)).collect();
    // queries_at(v) lists (other endpoint, slot in `queries`); flat buffers
    // instead of a Vec per vertex
    let mut q_off = vec![0u32; n + 1];
    for &e in &queries {
        let (u, v) = g.endpoints(e);
        q_off[u as usize + 1] += 1;
        q_off[v as usize + 1] += 1;
    }
    for i in 0..n {
        q_off[i + 1] += q_off[i];
    }
    let mut cursor: Vec<u32> = q_off[..n].to_vec();
    let mut q_dat: Vec<(Vertex, u32)> = vec![(0, 0); 2 * queries.len()];
    for (slot, &e) in queries.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        q_dat[cursor[u as usize] as usize] = (v, slot as u32);
        cursor[u as usize] += 1;
        q_dat[cursor[v as usize] as usize] = (u, slot as u32);
        cursor[v as usize] += 1;
    }
    let queries_at = |v: usize| {
        &q_dat[q_off[v] as usize..q_off[v + 1] as usize]
    };

    let mut c_off = vec![0u32; n + 1];
    for &v in tree.bfs_order() {
        if let Some((p, _)) = tree.parent(v) {
            c_off[p as usize + 1] += 1;
        }
    }
    for i in 0..n {
        c_off[i + 1] += c_off[i];
    }
    let mut cursor: Vec<u32> = c_off[..n].to_vec();
    let mut c_dat = vec![0 as Vertex; n.saturating_sub(1)];
    for &v in tree.bfs_order() {
        if let Some((p, _)) = tree.parent(v) {
            c_dat[cursor[p as usize] as usize] = v;
            cursor[p as usize] += 1;
        }
    }
    let children = |v: usize| {
        &c_dat[c_off[v] as usize..c_off[v + 1] as usize]
    };

    let mut dsu = Dsu::new(n);
    let mut ancestor: Vec<Vertex> = (0..n as Vertex).collect();
    let mut colored = vec![false; n];
    let mut lca = vec![0 as Vertex; queries.len()];

    // Exit frames run after the whole subtree is merged, which is exactly
    // when ancestor[find(w)] names the lowest common ancestor for colored w.
    enum Frame {
        Enter(Vertex),
        Exit(Vertex),
    }
    let mut stack = vec![Frame::Enter(tree.root())];
    while let Some(frame) = stack.pop() {
        match frame {
            Frame::Enter(v) => {
                ancestor[dsu.find(v as usize)] = v;
                stack.push(Frame::Exit(v));
                for &c in children(v as usize) {
                    stack.push(Frame::Enter(c));
                }
            }
            Frame::Exit(v) => {
                for &(w, slot) in queries_at(v as usize) {
                    if colored[w as usize] {
                        lca[slot as usize] = ancestor[dsu.find(w as usize)];
                    }
                }
                colored[v as usize] = true;
                if let Some((p, _)) = tree.parent(v) {
                    let r = dsu.union(v as usize, p as usize);
                    ancestor[r] = p;
                }
            }
        }
    }

    let mut per_edge = Vec::with_capacity(queries.len());
    let mut t = if queries.is_empty() { 1 } else { 0 };
    let mut witness = None;
    for (slot, &e) in queries.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        let a = lca[slot];
        let d = tree.depth(u) + tree.depth(v) - 2 * tree.depth(a);
        per_edge.push((e, d));
        if d > t {
            t = d;
            witness = Some(e);
        }
    }
    StretchCertificate { t, witness, per_edge }
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns the surviving root.
    fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        a
    }
}

/// One biconnected block: a maximal subgraph without a cut vertex. A bridge
/// forms a block with a single edge.
#[derive(Clone, Debug)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edge_ids: Vec<EdgeId>,
}

/// Blocks partition the edge set; cut vertices are exactly the vertices
/// shared by two or more blocks.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
    /// Edge id to index into `blocks`.
    pub block_of_edge: Vec<u32>,
}

/// Splits `g` into biconnected blocks. Blocks come out ordered by their
/// smallest edge id; vertex and edge lists are sorted.
pub fn biconnected_components(g: &Graph) -> BlockDecomposition {
    const UNSEEN: u32 = u32::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut timer = 0u32;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeId>> = Vec::new();
    let mut is_cut = vec![false; n];

    struct Frame {
        v: Vertex,
        parent_edge: EdgeId,
        next: usize,
        children: u32,
    }
    const NO_EDGE: EdgeId = EdgeId::MAX;

    for start in 0..n as Vertex {
        if disc[start as usize] != UNSEEN {
            continue;
        }
        disc[start as usize] = timer;
        low[start as usize] = timer;
        timer += 1;
        let mut stack =
            vec![Frame { v: start, parent_edge: NO_EDGE, next: 0, children: 0 }];
        while let Some(top) = stack.last_mut() {
            let v = top.v as usize;
            if top.next < g.neighbors(top.v).len() {
                let (w, e) = g.neighbors(top.v)[top.next];
                top.next += 1;
                if e == top.parent_edge {
                    continue;
                }
                if disc[w as usize] == UNSEEN {
                    edge_stack.push(e);
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push(Frame { v: w, parent_edge: e, next: 0, children: 0 });
                } else if disc[w as usize] < disc[v] {
                    // back edge toward an ancestor
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w as usize]);
                }
            } else {
                let finished = stack.pop().expect("frame present");
                let Some(up) = stack.last_mut() else { break };
                let p = up.v as usize;
                up.children += 1;
                low[p] = low[p].min(low[finished.v as usize]);
                if low[finished.v as usize] >= disc[p] {
                    // p separates the finished subtree: close one block
                    let mut ids = Vec::new();
                    loop {
                        let e = edge_stack.pop().expect("block edges stacked");
                        ids.push(e);
                        if e == finished.parent_edge {
                            break;
                        }
                    }
                    raw_blocks.push(ids);
                    if up.parent_edge != NO_EDGE || up.children >= 2 {
                        is_cut[p] = true;
                    }
                }
            }
        }
    }

    raw_blocks.sort_by_key(|ids| ids.iter().min().copied());
    let mut blocks = Vec::with_capacity(raw_blocks.len());
    let mut block_of_edge = vec![0u32; g.m()];
    for (i, mut ids) in raw_blocks.into_iter().enumerate() {
        ids.sort_unstable();
        for &e in &ids {
            block_of_edge[e as usize] = i as u32;
        }
        let mut vertices: Vec<Vertex> = ids
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        blocks.push(Block { vertices, edge_ids: ids });
    }
    let cut_vertices =
        (0..n as Vertex).filter(|&v| is_cut[v as usize]).collect();
    BlockDecomposition { blocks, cut_vertices, block_of_edge }
}

/// Lexicographic stream of all spanning trees, by ascending edge id tuples.
/// Exhaustive, so the host is capped; see [`enumerate_spanning_trees`].
pub struct SpanningTrees<'a> {
    g: &'a Graph,
    combo: Option<Vec<usize>>,
    k: usize,
}

/// Enumerates every spanning tree of `g` with the default cap of 10 vertices.
pub fn enumerate_spanning_trees(g: &Graph) -> Result<SpanningTrees<'_>, GraphError> {
    enumerate_spanning_trees_capped(g, 10)
}

pub fn enumerate_spanning_trees_capped(
    g: &Graph,
    cap: usize,
) -> Result<SpanningTrees<'_>, GraphError> {
    if g.n() > cap {
        return Err(GraphError::InstanceTooLarge(g.n(), cap));
    }
    let k = g.n().saturating_sub(1);
    let combo = if g.n() == 0 || k > g.m() {
        None
    } else {
        Some((0..k).collect())
    };
    Ok(SpanningTrees { g, combo, k })
}

impl Iterator for SpanningTrees<'_> {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        while let Some(c) = self.combo.take() {
            self.combo = next_combination(&c, self.g.m(), self.k);
            let ids: Vec<EdgeId> = c.iter().map(|&i| i as EdgeId).collect();
            if subset_spans(self.g, &ids) {
                let t = SpanningTree::build(self.g, &ids)
                    .expect("acyclic spanning subset of n - 1 edges");
                return Some(t);
            }
        }
        None
    }
}

fn next_combination(c: &[usize], m: usize, k: usize) -> Option<Vec<usize>> {
    let mut c = c.to_vec();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < m - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return Some(c);
        }
    }
    None
}

fn subset_spans(g: &Graph, ids: &[EdgeId]) -> bool {
    let mut dsu = Dsu::new(g.n());
    for &e in ids {
        let (u, v) = g.endpoints(e);
        if dsu.find(u as usize) == dsu.find(v as usize) {
            return false;
        }
        dsu.union(u as usize, v as usize);
    }
    true
}
