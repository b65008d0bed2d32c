//! Tree decompositions: min-fill heuristic, exact width search for small
//! graphs, conversion to nice form, and validation.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::StaticGraph;

/// Bags plus tree edges over bag ids; width = max bag size - 1.
#[derive(Debug, Clone)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    pub n: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdError {
    #[error("vertex {0} appears in no bag")]
    VertexUncovered(usize),
    #[error("edge ({0},{1}) is inside no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} do not form a connected subtree")]
    NotConnected(usize),
    #[error("bag tree is not a tree")]
    NotATree,
    #[error("bag id {0} out of range")]
    BadBagId(usize),
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks the three tree-decomposition conditions against `g`.
    pub fn validate(&self, g: &StaticGraph) -> Result<(), TdError> {
        let k = self.bags.len();
        for &(a, b) in &self.tree_edges {
            if a >= k || b >= k {
                return Err(TdError::BadBagId(a.max(b)));
            }
        }
        // tree shape: connected with k-1 edges
        if k > 0 {
            if self.tree_edges.len() != k - 1 {
                return Err(TdError::NotATree);
            }
            let mut adj = vec![Vec::new(); k];
            for &(a, b) in &self.tree_edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut seen = vec![false; k];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut cnt = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        cnt += 1;
                        stack.push(y);
                    }
                }
            }
            if cnt != k {
                return Err(TdError::NotATree);
            }
        }
        for v in 0..g.n {
            let holders: Vec<usize> = (0..k)
                .filter(|&i| self.bags[i].contains(&v))
                .collect();
            if holders.is_empty() {
                return Err(TdError::VertexUncovered(v));
            }
            // connectivity of the holder-induced subtree
            let mut adj = vec![Vec::new(); k];
            for &(a, b) in &self.tree_edges {
                if holders.contains(&a) && holders.contains(&b) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
            let mut seen = vec![false; k];
            let mut stack = vec![holders[0]];
            seen[holders[0]] = true;
            let mut cnt = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        cnt += 1;
                        stack.push(y);
                    }
                }
            }
            if cnt != holders.len() {
                return Err(TdError::NotConnected(v));
            }
        }
        for &(u, v) in &g.edges {
            if !self
                .bags
                .iter()
                .any(|b| b.contains(&u) && b.contains(&v))
            {
                return Err(TdError::EdgeUncovered(u, v));
            }
        }
        Ok(())
    }
}

/// Builds a decomposition from an elimination order. The bag of `v` is
/// `v` plus its not-yet-eliminated neighbours at elimination time (with
/// fill edges applied).
fn decomposition_from_order(g: &StaticGraph, order: &[usize]) -> TreeDecomposition {
    let n = g.n;
    if n == 0 {
        return TreeDecomposition { bags: vec![vec![]], tree_edges: vec![], n };
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in &g.edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        let mut bag = later.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        for i in 0..later.len() {
            for j in i + 1..later.len() {
                adj[later[i]].insert(later[j]);
                adj[later[j]].insert(later[i]);
            }
        }
    }
    // bag i belongs to order[i]; parent = bag of the earliest-eliminated
    // later neighbour, or the next bag in order for isolated tails
    let mut tree_edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if i + 1 == n {
            break;
        }
        let parent_vertex = bags[i]
            .iter()
            .copied()
            .filter(|&u| u != v)
            .min_by_key(|&u| pos[u]);
        let p = match parent_vertex {
            Some(u) => pos[u],
            None => i + 1,
        };
        tree_edges.push((i, p));
    }
    TreeDecomposition { bags, tree_edges, n }
}

fn min_fill_order(g: &StaticGraph) -> Vec<usize> {
    let n = g.n;
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in &g.edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&first) = alive.iter().next() {
        let mut best = (usize::MAX, usize::MAX, first);
        for &v in &alive {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut fill = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if !adj[nb[i]].contains(&nb[j]) {
                        fill += 1;
                    }
                }
            }
            let key = (fill, nb.len(), v);
            if key < best {
                best = key;
            }
        }
        let v = best.2;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        for &u in &nb {
            adj[u].remove(&v);
        }
        adj[v].clear();
        alive.remove(&v);
        order.push(v);
    }
    order
}

/// Exact treewidth by dynamic programming over eliminated subsets
/// (feasible to roughly n = 14). Returns an optimal elimination order.
fn exact_order(g: &StaticGraph) -> Vec<usize> {
    let n = g.n;
    assert!(n <= 20, "exact elimination search is exponential in n");
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // degree of v once the vertices in `mask` are eliminated: neighbours
    // reachable from v through eliminated vertices
    let deg_after = |v: usize, mask: u32| -> usize {
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if seen & (1 << y) != 0 {
                    continue;
                }
                seen |= 1 << y;
                if mask & (1 << y) != 0 {
                    stack.push(y);
                } else {
                    count += 1;
                }
            }
        }
        count
    };
    let mut memo: Vec<u8> = vec![u8::MAX; 1usize << n];
    memo[0] = 0;
    // f(mask) = min over v in mask of max(deg_after(v, mask\v), f(mask\v))
    for mask in 1..=(full as usize) {
        let mut best = u8::MAX;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let prev = mask & !(1 << v);
            let d = deg_after(v, prev as u32) as u8;
            let cand = d.max(memo[prev]);
            if cand < best {
                best = cand;
            }
        }
        memo[mask] = best;
    }
    // reconstruct order back to front: the last eliminated vertex in a
    // mask is the argmin above
    let mut order = vec![0usize; n];
    let mut mask = full as usize;
    for slot in (0..n).rev() {
        let mut pick = None;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let prev = mask & !(1 << v);
            let d = deg_after(v, prev as u32) as u8;
            if d.max(memo[prev]) == memo[mask] {
                pick = Some(v);
                break;
            }
        }
        let v = pick.unwrap();
        order[slot] = v;
        mask &= !(1 << v);
    }
    order
}

/// Searches for an elimination order whose maximum through-degree stays
/// within `width`, by depth-first search with memoized failed states.
fn width_bounded_order(g: &StaticGraph, width: usize) -> Option<Vec<usize>> {
    let n = g.n;
    assert!(n <= 32);
    let deg_after = |v: usize, mask: u32| -> usize {
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if seen & (1 << y) != 0 {
                    continue;
                }
                seen |= 1 << y;
                if mask & (1 << y) != 0 {
                    stack.push(y);
                } else {
                    count += 1;
                }
            }
        }
        count
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut failed: std::collections::HashSet<u32> = std::collections::HashSet::new();
    fn dfs(
        g: &StaticGraph,
        width: usize,
        mask: u32,
        full: u32,
        order: &mut Vec<usize>,
        failed: &mut std::collections::HashSet<u32>,
        deg_after: &dyn Fn(usize, u32) -> usize,
    ) -> bool {
        if mask == full {
            return true;
        }
        if failed.contains(&mask) {
            return false;
        }
        for v in 0..g.n {
            if mask & (1 << v) != 0 {
                continue;
            }
            if deg_after(v, mask) <= width {
                order.push(v);
                if dfs(g, width, mask | (1 << v), full, order, failed, deg_after) {
                    return true;
                }
                order.pop();
            }
        }
        failed.insert(mask);
        false
    }
    let mut order = Vec::with_capacity(n);
    if dfs(g, width, 0, full, &mut order, &mut failed, &deg_after) {
        Some(order)
    } else {
        None
    }
}

/// Computes a tree decomposition: exact for small graphs or small width
/// hints, min-fill heuristic otherwise.
pub fn compute_tree_decomposition(
    g: &StaticGraph,
    width_hint: Option<usize>,
) -> TreeDecomposition {
    let order = if g.n <= 12 {
        exact_order(g)
    } else if g.n <= 32 && width_hint.is_some_and(|w| w <= 3) {
        // exact within the hinted width range, increasing widths so the
        // first feasible order is optimal; heuristic beyond the hint
        let hint = width_hint.unwrap();
        (1..=hint)
            .find_map(|w| width_bounded_order(g, w))
            .unwrap_or_else(|| min_fill_order(g))
    } else {
        min_fill_order(g)
    };
    let td = decomposition_from_order(g, &order);
    debug_assert_eq!(td.validate(g), Ok(()));
    td
}

/// Node kinds of a nice tree decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Rooted nice tree decomposition: empty root and leaf bags, introduce
/// and forget nodes changing the bag by one vertex, join nodes sharing
/// the bag with both children.
#[derive(Debug, Clone)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    pub width: usize,
    pub n: usize,
}

impl NiceTreeDecomposition {
    /// Post-order traversal (children before parents).
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                out.push(x);
            } else {
                stack.push((x, true));
                for &c in &self.nodes[x].children {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), TdError> {
        if !self.nodes[self.root].bag.is_empty() {
            return Err(TdError::NotATree);
        }
        for node in &self.nodes {
            let ok = match node.kind {
                NodeKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    node.children.len() == 1 && {
                        let c = &self.nodes[node.children[0]];
                        node.bag.contains(&v)
                            && !c.bag.contains(&v)
                            && node.bag.len() == c.bag.len() + 1
                            && c.bag.iter().all(|x| node.bag.contains(x))
                    }
                }
                NodeKind::Forget(v) => {
                    node.children.len() == 1 && {
                        let c = &self.nodes[node.children[0]];
                        !node.bag.contains(&v)
                            && c.bag.contains(&v)
                            && node.bag.len() + 1 == c.bag.len()
                            && node.bag.iter().all(|x| c.bag.contains(x))
                    }
                }
                NodeKind::Join => {
                    node.children.len() == 2
                        && self.nodes[node.children[0]].bag == node.bag
                        && self.nodes[node.children[1]].bag == node.bag
                }
            };
            if !ok {
                return Err(TdError::NotATree);
            }
        }
        Ok(())
    }
}

/// Converts a valid tree decomposition into nice form of the same width.
pub fn make_nice(td: &TreeDecomposition, g: &StaticGraph) -> Result<NiceTreeDecomposition, TdError> {
    td.validate(g)?;
    let k = td.bags.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &td.tree_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut nodes: Vec<NiceNode> = Vec::new();

    // builds a chain from `from` bag to `to` bag via forgets then introduces,
    // returning the top node id
    fn bridge(
        nodes: &mut Vec<NiceNode>,
        mut top: usize,
        from: &[usize],
        to: &[usize],
    ) -> usize {
        let mut cur: Vec<usize> = from.to_vec();
        for &v in from.iter().filter(|v| !to.contains(v)) {
            cur.retain(|&x| x != v);
            nodes.push(NiceNode {
                kind: NodeKind::Forget(v),
                bag: cur.clone(),
                children: vec![top],
            });
            top = nodes.len() - 1;
        }
        for &v in to.iter().filter(|v| !from.contains(v)) {
            cur.push(v);
            cur.sort_unstable();
            nodes.push(NiceNode {
                kind: NodeKind::Introduce(v),
                bag: cur.clone(),
                children: vec![top],
            });
            top = nodes.len() - 1;
        }
        top
    }

    fn build(
        nodes: &mut Vec<NiceNode>,
        td: &TreeDecomposition,
        adj: &[Vec<usize>],
        bag_id: usize,
        parent: Option<usize>,
    ) -> usize {
        let mut bag = td.bags[bag_id].clone();
        bag.sort_unstable();
        let kids: Vec<usize> = adj[bag_id]
            .iter()
            .copied()
            .filter(|&c| Some(c) != parent)
            .collect();
        if kids.is_empty() {
            // leaf chain: empty leaf then introduce the bag
            nodes.push(NiceNode { kind: NodeKind::Leaf, bag: vec![], children: vec![] });
            let mut top = nodes.len() - 1;
            let mut cur: Vec<usize> = Vec::new();
            for &v in &bag {
                cur.push(v);
                cur.sort_unstable();
                nodes.push(NiceNode {
                    kind: NodeKind::Introduce(v),
                    bag: cur.clone(),
                    children: vec![top],
                });
                top = nodes.len() - 1;
            }
            return top;
        }
        let mut tops = Vec::new();
        for &c in &kids {
            let sub_top = build(nodes, td, adj, c, Some(bag_id));
            let mut cbag = td.bags[c].clone();
            cbag.sort_unstable();
            tops.push(bridge(nodes, sub_top, &cbag, &bag));
        }
        // fold children with join nodes sharing this bag
        let mut top = tops[0];
        for &other in &tops[1..] {
            nodes.push(NiceNode {
                kind: NodeKind::Join,
                bag: bag.clone(),
                children: vec![top, other],
            });
            top = nodes.len() - 1;
        }
        top
    }

    let root_bag = 0usize;
    let top = build(&mut nodes, td, &adj, root_bag, None);
    // forget the root bag down to empty
    let mut cur: Vec<usize> = {
        let mut b = td.bags[root_bag].clone();
        b.sort_unstable();
        b
    };
    let mut top = top;
    let bag_snapshot = cur.clone();
    for &v in &bag_snapshot {
        cur.retain(|&x| x != v);
        nodes.push(NiceNode { kind: NodeKind::Forget(v), bag: cur.clone(), children: vec![top] });
        top = nodes.len() - 1;
    }
    let width = nodes.iter().map(|nd| nd.bag.len()).max().unwrap_or(1).saturating_sub(1);
    let ntd = NiceTreeDecomposition { nodes, root: top, width, n: td.n };
    debug_assert_eq!(ntd.validate(), Ok(()));
    Ok(ntd)
}
