//! Budgeted partition of a weighted tree with marked nodes.
//!
//! Instance: a tree with node weights, a nonempty set of special nodes, and
//! a budget `tau`. Wanted: a partition of the nodes where every part induces
//! a connected subtree, contains exactly one special node, and weighs at most
//! `tau` in total.
//!
//! A tree t-spanner question on a 2-connected outerplanar graph reduces to
//! exactly this on its weak dual with budget `t - 1`: parts become the faces
//! merged into one cycle each, and a part of weight `c` forces a detour of
//! length `c + 1` around its missing boundary edge.

use thiserror::Error;

use crate::outerplanar::WeakDual;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SPartitionError {
    #[error("edges do not form a tree on {0} nodes")]
    NotATree(usize),
    #[error("no special nodes")]
    NoSpecialNodes,
    #[error("weights or marks do not match the node count")]
    LengthMismatch,
    #[error("{0} nodes exceeds the brute force cap {1}")]
    InstanceTooLarge(usize, usize),
    #[error("line {0}: {1}")]
    Parse(usize, String),
}

/// Flat tree adjacency: one shared buffer, a neighbor slice per node, no
/// per-node allocations. Neighbor order follows edge order, matching what a
/// per-node push would produce.
#[derive(Clone, Debug)]
pub(crate) struct TreeAdjacency {
    off: Vec<u32>,
    dat: Vec<usize>,
}

impl TreeAdjacency {
    pub(crate) fn neighbors(&self, v: usize) -> &[usize] {
        &self.dat[self.off[v] as usize..self.off[v + 1] as usize]
    }
}

/// Tree partition instance; see the module docs.
#[derive(Clone, Debug)]
pub struct SPartitionInstance {
    k: usize,
    edges: Vec<(usize, usize)>,
    adj: TreeAdjacency,
    weights: Vec<u64>,
    special: Vec<bool>,
    tau: u64,
}

impl SPartitionInstance {
    pub fn new(
        k: usize,
        edges: &[(usize, usize)],
        weights: Vec<u64>,
        special: Vec<bool>,
        tau: u64,
    ) -> Result<Self, SPartitionError> {
        if weights.len() != k || special.len() != k {
            return Err(SPartitionError::LengthMismatch);
        }
        if !special.iter().any(|&s| s) {
            return Err(SPartitionError::NoSpecialNodes);
        }
        let adj = tree_adjacency(k, edges).ok_or(SPartitionError::NotATree(k))?;
        Ok(SPartitionInstance { k, edges: edges.to_vec(), adj, weights, special, tau })
    }

    pub fn node_count(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.neighbors(v)
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn is_special(&self, v: usize) -> bool {
        self.special[v]
    }

    pub fn special_nodes(&self) -> Vec<usize> {
        (0..self.k).filter(|&v| self.special[v]).collect()
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }

    pub fn part_cost(&self, part: &[usize]) -> u64 {
        part.iter().map(|&v| self.weights[v]).sum()
    }

    /// Four-section text form: header `k tau`, weights, special ids, edges.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "{} {}", self.k, self.tau).unwrap();
        let ws: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        writeln!(out, "{}", ws.join(" ")).unwrap();
        let ss: Vec<String> =
            self.special_nodes().iter().map(usize::to_string).collect();
        writeln!(out, "{}", ss.join(" ")).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{} {}", u, v).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, SPartitionError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut next = |what: &str| {
            lines.next().ok_or_else(|| {
                SPartitionError::Parse(0, format!("missing {what}"))
            })
        };
        let (ln, header) = next("header")?;
        let parse_err = |ln: usize, what: &str| {
            SPartitionError::Parse(ln, format!("expected {what}"))
        };
        let mut hdr = header.split_whitespace();
        let k: usize = hdr
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(ln, "node count"))?;
        let tau: u64 = hdr
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(ln, "budget"))?;
        if hdr.next().is_some() {
            return Err(parse_err(ln, "exactly `k tau`"));
        }
        let (ln, wline) = next("weights")?;
        let weights: Vec<u64> = wline
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| parse_err(ln, "a weight")))
            .collect::<Result<_, _>>()?;
        let (ln, sline) = next("special ids")?;
        let mut special = vec![false; k];
        for tok in sline.split_whitespace() {
            let v: usize =
                tok.parse().map_err(|_| parse_err(ln, "a special id"))?;
            if v >= k {
                return Err(parse_err(ln, "a special id below k"));
            }
            special[v] = true;
        }
        let mut edges = Vec::with_capacity(k.saturating_sub(1));
        for _ in 1..k {
            let (ln, eline) = next("an edge")?;
            let mut it = eline.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse_err(ln, "an edge"))?;
            let v: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse_err(ln, "an edge"))?;
            if it.next().is_some() || u >= k || v >= k {
                return Err(parse_err(ln, "an edge `u v` below k"));
            }
            edges.push((u, v));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(parse_err(ln, "end of input"));
        }
        Self::new(k, &edges, weights, special, tau)
    }
}

pub(crate) fn tree_adjacency(
    k: usize,
    edges: &[(usize, usize)],
) -> Option<TreeAdjacency> {
    if k == 0 || edges.len() != k - 1 {
        return None;
    }
    let mut off = vec![0u32; k + 1];
    for &(u, v) in edges {
        if u >= k || v >= k || u == v {
            return None;
        }
        off[u + 1] += 1;
        off[v + 1] += 1;
    }
    for i in 0..k {
        off[i + 1] += off[i];
    }
    let mut cursor: Vec<u32> = off[..k].to_vec();
    let mut dat = vec![0usize; 2 * edges.len()];
    for &(u, v) in edges {
        dat[cursor[u] as usize] = v;
        cursor[u] += 1;
        dat[cursor[v] as usize] = u;
        cursor[v] += 1;
    }
    let adj = TreeAdjacency { off, dat };
    // k - 1 edges and connected means acyclic
    let mut seen = vec![false; k];
    let mut queue = vec![0usize];
    seen[0] = true;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in adj.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    if queue.len() != k {
        return None;
    }
    Some(adj)
}

/// Parts listed in discovery order; nodes within a part ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPartition {
    pub parts: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    NotAPartition,
    PartNotConnected,
    NoSpecial,
    MultipleSpecials,
    CostExceeded,
}

/// First failed check, with the offending part when one exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub part: Option<usize>,
    pub kind: ViolationKind,
}

/// Builds the partition instance a tree t-spanner of the embedded block
/// corresponds to: same tree as the weak dual, budget `t - 1`.
pub fn reduce_to_spartition(dual: &WeakDual, t: u32) -> SPartitionInstance {
    assert!(t >= 1, "stretch bound must be positive");
    assert!(dual.is_tree(), "weak dual of a 2-connected block is a tree");
    let k = dual.node_count();
    let edges: Vec<(usize, usize)> = dual
        .edges()
        .iter()
        .map(|&(a, b)| (a as usize, b as usize))
        .collect();
    let weights = dual.weights().to_vec();
    let special = (0..k as u32).map(|f| dual.is_special(f)).collect();
    SPartitionInstance::new(k, &edges, weights, special, (t - 1) as u64)
        .expect("weak dual always yields a valid instance")
}

/// Checks partition-ness first, then per part: connectivity, exactly one
/// special node, cost within budget.
pub fn verify_spartition(
    inst: &SPartitionInstance,
    p: &SPartition,
) -> Result<(), Violation> {
    let k = inst.node_count();
    let mut owner = vec![usize::MAX; k];
    for (i, part) in p.parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Violation { part: Some(i), kind: ViolationKind::NotAPartition });
        }
        for &v in part {
            if v >= k || owner[v] != usize::MAX {
                return Err(Violation {
                    part: Some(i),
                    kind: ViolationKind::NotAPartition,
                });
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Violation { part: None, kind: ViolationKind::NotAPartition });
    }
    let mut seen = vec![false; k];
    let mut queue = Vec::new();
    for (i, part) in p.parts.iter().enumerate() {
        let fail = |kind| Err(Violation { part: Some(i), kind });
        // walk the part through tree edges staying inside it; `seen` needs no
        // reset since owners never repeat across parts
        queue.clear();
        queue.push(part[0]);
        seen[part[0]] = true;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in inst.neighbors(v) {
                if owner[w] == i && !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        if queue.len() != part.len() {
            return fail(ViolationKind::PartNotConnected);
        }
        match part.iter().filter(|&&v| inst.is_special(v)).count() {
            0 => return fail(ViolationKind::NoSpecial),
            1 => {}
            _ => return fail(ViolationKind::MultipleSpecials),
        }
        if inst.part_cost(part) > inst.tau() {
            return fail(ViolationKind::CostExceeded);
        }
    }
    Ok(())
}

const BRUTE_FORCE_CAP: usize = 15;

/// Exhaustive search over part assignments, for cross-checking the real
/// solver on small instances. Nodes are assigned in id order and parts tried
/// in special-id order, so the first hit is lexicographically smallest.
pub fn brute_force_spartition(
    inst: &SPartitionInstance,
) -> Result<Option<SPartition>, SPartitionError> {
    let k = inst.node_count();
    if k > BRUTE_FORCE_CAP {
        return Err(SPartitionError::InstanceTooLarge(k, BRUTE_FORCE_CAP));
    }
    let specials = inst.special_nodes();
    let q = specials.len();
    // parent pointers toward each special, for the path-consistency prune
    let mut parent_to: Vec<Vec<usize>> = Vec::with_capacity(q);
    for &s in &specials {
        let mut parent = vec![usize::MAX; k];
        parent[s] = s;
        let mut queue = vec![s];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in inst.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push(w);
                }
            }
        }
        parent_to.push(parent);
    }

    let mut assignment = vec![usize::MAX; k];
    let mut cost = vec![0u64; q];
    for (i, &s) in specials.iter().enumerate() {
        assignment[s] = i;
        cost[i] = inst.weight(s);
    }
    if cost.iter().any(|&c| c > inst.tau()) {
        return Ok(None);
    }
    let free: Vec<usize> = (0..k).filter(|&v| !inst.is_special(v)).collect();

    fn assign(
        inst: &SPartitionInstance,
        specials: &[usize],
        parent_to: &[Vec<usize>],
        free: &[usize],
        pos: usize,
        assignment: &mut Vec<usize>,
        cost: &mut Vec<u64>,
    ) -> bool {
        let Some(&v) = free.get(pos) else {
            return parts_connected(inst, specials, assignment);
        };
        for i in 0..specials.len() {
            if cost[i] + inst.weight(v) > inst.tau() {
                continue;
            }
            // every assigned node on the path toward the special must agree
            let mut x = v;
            let mut consistent = true;
            while x != specials[i] {
                x = parent_to[i][x];
                if assignment[x] != usize::MAX && assignment[x] != i {
                    consistent = false;
                    break;
                }
            }
            if !consistent {
                continue;
            }
            assignment[v] = i;
            cost[i] += inst.weight(v);
            if assign(inst, specials, parent_to, free, pos + 1, assignment, cost) {
                return true;
            }
            cost[i] -= inst.weight(v);
            assignment[v] = usize::MAX;
        }
        false
    }

    fn parts_connected(
        inst: &SPartitionInstance,
        specials: &[usize],
        assignment: &[usize],
    ) -> bool {
        let k = inst.node_count();
        let mut seen = vec![false; k];
        let mut queue = Vec::new();
        for (i, &s) in specials.iter().enumerate() {
            queue.clear();
            queue.push(s);
            seen[s] = true;
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for &w in inst.neighbors(v) {
                    if assignment[w] == i && !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    if assign(inst, &specials, &parent_to, &free, 0, &mut assignment, &mut cost) {
        let mut parts = vec![Vec::new(); q];
        for v in 0..k {
            parts[assignment[v]].push(v);
        }
        Ok(Some(SPartition { parts }))
    } else {
        Ok(None)
    }
}
