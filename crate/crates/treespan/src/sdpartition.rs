//! Supply/demand partition of a tree.
//!
//! Every node either offers supply or carries demand. Wanted: a partition
//! into connected parts, each holding exactly one supply node whose value
//! covers the part's total demand.
//!
//! The budgeted partition of [`crate::spartition`] reduces to this by giving
//! every node its weight as demand and attaching a pendant supply of value
//! `tau` to each special node; [`sd_to_spartition`] undoes the construction.

use thiserror::Error;

use crate::spartition::{
    tree_adjacency, SPartition, SPartitionInstance, TreeAdjacency,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SdError {
    #[error("invalid instance: {0}")]
    BadInstance(&'static str),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("{0} nodes exceeds the brute force cap {1}")]
    InstanceTooLarge(usize, usize),
    #[error("line {0}: {1}")]
    Parse(usize, String),
}

/// Ways a candidate partition can fail; mirrors
/// [`crate::spartition::ViolationKind`] with capacity in place of cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdViolationKind {
    NotAPartition,
    PartNotConnected,
    NoSupplyInPart,
    TwoSupplies,
    CapacityExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SdViolation {
    pub part: Option<usize>,
    pub kind: SdViolationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Supply(u64),
    Demand(u64),
}

/// Tree with supply and demand nodes. When built by [`reduce_to_sd`] the
/// origin map remembers which special node each pendant supply came from.
#[derive(Clone, Debug)]
pub struct SDInstance {
    kinds: Vec<NodeKind>,
    edges: Vec<(usize, usize)>,
    adj: TreeAdjacency,
    origin: Option<Vec<(usize, usize)>>,
}

impl SDInstance {
    pub fn new(kinds: Vec<NodeKind>, edges: &[(usize, usize)]) -> Result<Self, SdError> {
        let k = kinds.len();
        if k == 0 {
            return Err(SdError::BadInstance("no nodes"));
        }
        if !kinds.iter().any(|n| matches!(n, NodeKind::Supply(_))) {
            return Err(SdError::BadInstance("no supply nodes"));
        }
        if edges.len() != k - 1 {
            return Err(SdError::BadInstance("edge count is not k - 1"));
        }
        for &(u, v) in edges {
            if u >= k || v >= k || u == v {
                return Err(SdError::BadInstance("edge endpoint out of range"));
            }
        }
        let adj = tree_adjacency(k, edges)
            .ok_or(SdError::BadInstance("edges do not form a tree"))?;
        Ok(SDInstance { kinds, edges: edges.to_vec(), adj, origin: None })
    }

    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, v: usize) -> NodeKind {
        self.kinds[v]
    }

    pub fn is_supply(&self, v: usize) -> bool {
        matches!(self.kinds[v], NodeKind::Supply(_))
    }

    pub fn supply_value(&self, v: usize) -> Option<u64> {
        match self.kinds[v] {
            NodeKind::Supply(s) => Some(s),
            NodeKind::Demand(_) => None,
        }
    }

    pub fn demand(&self, v: usize) -> u64 {
        match self.kinds[v] {
            NodeKind::Supply(_) => 0,
            NodeKind::Demand(d) => d,
        }
    }

    pub fn supplies(&self) -> Vec<usize> {
        (0..self.node_count()).filter(|&v| self.is_supply(v)).collect()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.neighbors(v)
    }

    /// `(supply node, source special node)` pairs when this instance came
    /// from [`reduce_to_sd`].
    pub fn origin(&self) -> Option<&[(usize, usize)]> {
        self.origin.as_deref()
    }

    /// Three-section text form: header `k`, kind line of `S val` / `D val`
    /// pairs, edges.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "{}", self.node_count()).unwrap();
        let kinds: Vec<String> = self
            .kinds
            .iter()
            .map(|k| match k {
                NodeKind::Supply(s) => format!("S {s}"),
                NodeKind::Demand(d) => format!("D {d}"),
            })
            .collect();
        writeln!(out, "{}", kinds.join(" ")).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{} {}", u, v).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, SdError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| SdError::Parse(0, format!("missing {what}")))
        };
        let parse_err =
            |ln: usize, what: &str| SdError::Parse(ln, format!("expected {what}"));
        let (ln, header) = next("header")?;
        let k: usize = header.parse().map_err(|_| parse_err(ln, "node count"))?;
        let (ln, kline) = next("node kinds")?;
        let mut toks = kline.split_whitespace();
        let mut kinds = Vec::with_capacity(k);
        for _ in 0..k {
            let tag = toks.next().ok_or_else(|| parse_err(ln, "a kind tag"))?;
            let val: u64 = toks
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse_err(ln, "a kind value"))?;
            kinds.push(match tag {
                "S" => NodeKind::Supply(val),
                "D" => NodeKind::Demand(val),
                _ => return Err(parse_err(ln, "tag S or D")),
            });
        }
        if toks.next().is_some() {
            return Err(parse_err(ln, "exactly k kind pairs"));
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
            if it.next().is_some() {
                return Err(parse_err(ln, "an edge `u v`"));
            }
            edges.push((u, v));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(parse_err(ln, "end of input"));
        }
        Self::new(kinds, &edges)
    }
}

/// Parts in ascending order of their supply node, members ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDPartition {
    pub parts: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no feasible partition: supply node {node} is overcommitted")]
pub struct Infeasible {
    /// First supply node, in post-order from the root, whose children pin
    /// more demand on it than it offers.
    pub node: usize,
}

/// Pendant-supply reduction: originals keep their ids as demand nodes with
/// their weight as demand; each special node gets a fresh pendant supply of
/// value `tau`, appended in ascending special order.
pub fn reduce_to_sd(inst: &SPartitionInstance) -> SDInstance {
    let k = inst.node_count();
    let specials = inst.special_nodes();
    let mut kinds: Vec<NodeKind> =
        (0..k).map(|v| NodeKind::Demand(inst.weight(v))).collect();
    let mut edges = inst.edges().to_vec();
    let mut origin = Vec::with_capacity(specials.len());
    for (rank, &u) in specials.iter().enumerate() {
        let pendant = k + rank;
        kinds.push(NodeKind::Supply(inst.tau()));
        edges.push((u, pendant));
        origin.push((pendant, u));
    }
    let mut sd = SDInstance::new(kinds, &edges)
        .expect("pendant construction keeps the tree shape");
    sd.origin = Some(origin);
    sd
}

enum State {
    Residual(u64),
    Pending(u64),
}

fn find(dsu: &mut [usize], mut v: usize) -> usize {
    while dsu[v] != v {
        dsu[v] = dsu[dsu[v]];
        v = dsu[v];
    }
    v
}

/// One post-order sweep from the lowest-id supply; on success the returned
/// union-find groups each node with its part's supply.
///
/// A demand node folds its pending children into itself, then either joins
/// the child part with the largest leftover capacity (ties to the smaller
/// node id) or stays pending; untaken leftover parts are final. A supply
/// node absorbs its pending children or fails. The sweep greedily keeps the
/// largest reserve available upward, so it finds a partition whenever one
/// exists.
///
/// `supply_override` replaces every supply value, letting one instance serve
/// a whole search over budgets.
fn sweep(
    inst: &SDInstance,
    supply_override: Option<u64>,
) -> Result<Vec<usize>, Infeasible> {
    let k = inst.node_count();
    let root = inst.supplies()[0];
    let mut parent = vec![usize::MAX; k];
    let mut state: Vec<Option<State>> = (0..k).map(|_| None).collect();
    let mut dsu: Vec<usize> = (0..k).collect();

    enum Frame {
        Enter(usize),
        Exit(usize),
    }
    let mut stack = vec![Frame::Enter(root)];
    parent[root] = root;
    while let Some(frame) = stack.pop() {
        match frame {
            Frame::Enter(v) => {
                stack.push(Frame::Exit(v));
                for &w in inst.neighbors(v).iter().rev() {
                    if parent[w] == usize::MAX {
                        parent[w] = v;
                        stack.push(Frame::Enter(w));
                    }
                }
            }
            Frame::Exit(v) => {
                let mut pending_sum = 0u64;
                let mut best: Option<(u64, usize)> = None;
                for &w in inst.neighbors(v) {
                    if w == parent[v] && v != root {
                        continue;
                    }
                    match state[w].as_ref().expect("children finish first") {
                        State::Pending(p) => {
                            pending_sum += p;
                            let r = find(&mut dsu, w);
                            dsu[r] = find(&mut dsu, v);
                        }
                        State::Residual(r) => {
                            let better = match best {
                                None => true,
                                Some((br, bw)) => *r > br || (*r == br && w < bw),
                            };
                            if better {
                                best = Some((*r, w));
                            }
                        }
                    }
                }
                state[v] = Some(match inst.kind(v) {
                    NodeKind::Demand(d) => {
                        let p0 = d + pending_sum;
                        match best {
                            Some((r, w)) if r >= p0 => {
                                let rw = find(&mut dsu, w);
                                dsu[rw] = find(&mut dsu, v);
                                State::Residual(r - p0)
                            }
                            _ => State::Pending(p0),
                        }
                    }
                    NodeKind::Supply(s) => {
                        let s = supply_override.unwrap_or(s);
                        if pending_sum > s {
                            return Err(Infeasible { node: v });
                        }
                        State::Residual(s - pending_sum)
                    }
                });
            }
        }
    }
    Ok(dsu)
}

pub fn solve_sd(inst: &SDInstance) -> Result<SDPartition, Infeasible> {
    let k = inst.node_count();
    let mut dsu = sweep(inst, None)?;
    let supplies = inst.supplies();
    let mut part_index = vec![usize::MAX; k];
    for (i, &s) in supplies.iter().enumerate() {
        part_index[find(&mut dsu, s)] = i;
    }
    let mut parts = vec![Vec::new(); supplies.len()];
    for v in 0..k {
        let i = part_index[find(&mut dsu, v)];
        debug_assert_ne!(i, usize::MAX, "every part ends at a supply");
        parts[i].push(v);
    }
    Ok(SDPartition { parts })
}

/// Same decision as [`solve_sd`] without materializing the parts; what the
/// binary search probes.
pub fn sd_feasible(inst: &SDInstance) -> bool {
    sweep(inst, None).is_ok()
}

/// [`sd_feasible`] with every supply value read as `s`.
pub fn sd_feasible_at(inst: &SDInstance, s: u64) -> bool {
    sweep(inst, Some(s)).is_ok()
}

/// Checks partition-ness first, then per part: connectivity, exactly one
/// supply, capacity.
pub fn verify_sd(inst: &SDInstance, p: &SDPartition) -> Result<(), SdViolation> {
    let k = inst.node_count();
    let mut owner = vec![usize::MAX; k];
    for (i, part) in p.parts.iter().enumerate() {
        if part.is_empty() {
            return Err(SdViolation {
                part: Some(i),
                kind: SdViolationKind::NotAPartition,
            });
        }
        for &v in part {
            if v >= k || owner[v] != usize::MAX {
                return Err(SdViolation {
                    part: Some(i),
                    kind: SdViolationKind::NotAPartition,
                });
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(SdViolation { part: None, kind: SdViolationKind::NotAPartition });
    }
    let mut seen = vec![false; k];
    let mut queue = Vec::new();
    for (i, part) in p.parts.iter().enumerate() {
        let fail = |kind| Err(SdViolation { part: Some(i), kind });
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
            return fail(SdViolationKind::PartNotConnected);
        }
        let supplies: Vec<usize> =
            part.iter().copied().filter(|&v| inst.is_supply(v)).collect();
        let s = match supplies[..] {
            [] => return fail(SdViolationKind::NoSupplyInPart),
            [one] => inst.supply_value(one).expect("supply node"),
            _ => return fail(SdViolationKind::TwoSupplies),
        };
        let demand: u64 = part.iter().map(|&v| inst.demand(v)).sum();
        if demand > s {
            return fail(SdViolationKind::CapacityExceeded);
        }
    }
    Ok(())
}

/// Undoes the pendant-supply reduction on a valid partition.
///
/// Parts are rooted at their supplies; a part holding only its pendant
/// supply steals the subtree hanging from its special node out of that
/// node's current part (which may orphan further supplies, handled in turn);
/// finally the supplies are stripped. The part of pendant `u'` then contains
/// its special `u`, stays connected, and its demand keeps within `tau`.
pub fn sd_to_spartition(
    inst: &SDInstance,
    p: &SDPartition,
) -> Result<SPartition, SdError> {
    let pre = SdError::PreconditionViolated;
    let Some(origin) = inst.origin() else {
        return Err(pre("instance lacks the pendant origin map"));
    };
    let k = inst.node_count();
    let supplies = inst.supplies();
    if supplies.iter().any(|&s| inst.neighbors(s).len() != 1) {
        return Err(pre("supplies must be pendant leaves"));
    }
    let tau = inst.supply_value(supplies[0]).expect("supply node");
    if supplies.iter().any(|&s| inst.supply_value(s) != Some(tau)) {
        return Err(pre("supply values must be uniform"));
    }
    for v in 0..k {
        if inst.neighbors(v).iter().filter(|&&w| inst.is_supply(w)).count() > 1 {
            return Err(pre("a node touches two supplies"));
        }
    }
    if verify_sd(inst, p).is_err() {
        return Err(pre("partition does not solve the instance"));
    }
    if p.parts.len() != supplies.len() {
        return Err(pre("one part per supply expected"));
    }

    let mut owner = vec![usize::MAX; k];
    let mut size = vec![0usize; p.parts.len()];
    for (i, part) in p.parts.iter().enumerate() {
        size[i] = part.len();
        for &v in part {
            owner[v] = i;
        }
    }
    // root every part at its supply
    let mut parent = vec![usize::MAX; k];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut part_supply = vec![usize::MAX; p.parts.len()];
    for (i, part) in p.parts.iter().enumerate() {
        let s = *part.iter().find(|&&v| inst.is_supply(v)).expect("verified");
        part_supply[i] = s;
        parent[s] = s;
        let mut queue = vec![s];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in inst.neighbors(v) {
                if owner[w] == i && parent[w] == usize::MAX {
                    parent[w] = v;
                    children[v].push(w);
                    queue.push(w);
                }
            }
        }
    }

    let mut worklist: Vec<usize> =
        (0..p.parts.len()).filter(|&i| size[i] == 1).collect();
    let mut head = 0;
    while head < worklist.len() {
        let i = worklist[head];
        head += 1;
        if size[i] != 1 {
            // parts never shrink back to one, but stay defensive about order
            continue;
        }
        let sup = part_supply[i];
        let u = inst.neighbors(sup)[0];
        let from = owner[u];
        // detach u's subtree from its current part
        children[parent[u]].retain(|&c| c != u);
        let mut moved = vec![u];
        let mut mh = 0;
        while mh < moved.len() {
            let v = moved[mh];
            mh += 1;
            for &c in &children[v] {
                moved.push(c);
            }
        }
        for &v in &moved {
            owner[v] = i;
        }
        parent[u] = sup;
        children[sup].push(u);
        size[i] += moved.len();
        size[from] -= moved.len();
        if size[from] == 1 {
            worklist.push(from);
        }
    }

    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); origin.len()];
    let mut rank_of_supply = vec![usize::MAX; k];
    for (rank, &(sup, _)) in origin.iter().enumerate() {
        rank_of_supply[sup] = rank;
    }
    let rank_of_part: Vec<usize> =
        part_supply.iter().map(|&s| rank_of_supply[s]).collect();
    for v in 0..k {
        if !inst.is_supply(v) {
            parts[rank_of_part[owner[v]]].push(v);
        }
    }
    debug_assert!(parts.iter().all(|part| !part.is_empty()));
    Ok(SPartition { parts })
}

const BRUTE_FORCE_CAP: usize = 15;

/// Exhaustive assignment of demand nodes to supplies, smallest assignment
/// vector first; the cross-check oracle for [`solve_sd`].
pub fn brute_force_sd(inst: &SDInstance) -> Result<Option<SDPartition>, SdError> {
    let k = inst.node_count();
    if k > BRUTE_FORCE_CAP {
        return Err(SdError::InstanceTooLarge(k, BRUTE_FORCE_CAP));
    }
    let supplies = inst.supplies();
    let q = supplies.len();
    let mut parent_to: Vec<Vec<usize>> = Vec::with_capacity(q);
    for &s in &supplies {
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
    let mut load = vec![0u64; q];
    for (i, &s) in supplies.iter().enumerate() {
        assignment[s] = i;
    }
    let free: Vec<usize> = (0..k).filter(|&v| !inst.is_supply(v)).collect();

    fn assign(
        inst: &SDInstance,
        supplies: &[usize],
        parent_to: &[Vec<usize>],
        free: &[usize],
        pos: usize,
        assignment: &mut Vec<usize>,
        load: &mut Vec<u64>,
    ) -> bool {
        let Some(&v) = free.get(pos) else {
            return parts_connected(inst, supplies, assignment);
        };
        for i in 0..supplies.len() {
            let cap = inst.supply_value(supplies[i]).expect("supply node");
            if load[i] + inst.demand(v) > cap {
                continue;
            }
            let mut x = v;
            let mut consistent = true;
            while x != supplies[i] {
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
            load[i] += inst.demand(v);
            if assign(inst, supplies, parent_to, free, pos + 1, assignment, load) {
                return true;
            }
            load[i] -= inst.demand(v);
            assignment[v] = usize::MAX;
        }
        false
    }

    fn parts_connected(
        inst: &SDInstance,
        supplies: &[usize],
        assignment: &[usize],
    ) -> bool {
        let k = inst.node_count();
        let mut seen = vec![false; k];
        let mut queue = Vec::new();
        for (i, &s) in supplies.iter().enumerate() {
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

    if assign(inst, &supplies, &parent_to, &free, 0, &mut assignment, &mut load) {
        let mut parts = vec![Vec::new(); q];
        for v in 0..k {
            parts[assignment[v]].push(v);
        }
        Ok(Some(SDPartition { parts }))
    } else {
        Ok(None)
    }
}
