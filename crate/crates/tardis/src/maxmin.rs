//! MaxMin solvers: choose a temporal assignment for a static graph that
//! maximizes the minimum TaRDiS size, for the strict, nonstrict and
//! happy variants, plus the static subsolvers the shortcuts need
//! (minimum dominating set, maximum distance-3 independent set,
//! edge-colouring feasibility).
//!
//! Only simple assignments need considering: replacing a multi-time
//! assignment by any single time per edge never shrinks the minimum
//! TaRDiS. Strict collapses to the minimum dominating set under the
//! constant assignment; nonstrict with lifetime 2 is the maximum
//! distance-3 independent set; happy assignments are exactly proper
//! edge colourings.

use thiserror::Error;

use crate::exact::{min_tardis_setcover, min_tardis_special, Candidates};
use crate::graph::{StaticGraph, TemporalGraph, VertexId};
use crate::reach::{is_tardis, reach_set, Semantics};
use crate::util::{min_set_cover, BitSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Strict,
    Nonstrict,
    Happy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxMinAlgo {
    Auto,
    Enumerate,
    Shortcut,
}

#[derive(Debug, Clone)]
pub struct MaxMinResult {
    pub value: usize,
    pub witness_assignment: TemporalGraph,
    pub variant: Variant,
    pub tau: u32,
    pub algorithm: &'static str,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MaxMinError {
    #[error("no happy temporal assignment with lifetime {tau} exists")]
    HappyInfeasible { tau: u32 },
    #[error("enumeration needs {required} assignments, budget is {budget}")]
    EnumBudget { required: u128, budget: u128 },
    #[error("no shortcut available for this variant and lifetime")]
    ShortcutUnavailable,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub const DEFAULT_ENUM_BUDGET: u128 = 20_000_000;

/// Exact minimum dominating set by branch and bound over closed
/// neighbourhoods.
pub fn min_dominating_set(h: &StaticGraph) -> (usize, Vec<usize>) {
    if h.n == 0 {
        return (0, vec![]);
    }
    let rows: Vec<BitSet> = (0..h.n)
        .map(|v| {
            let mut b = BitSet::new(h.n);
            b.insert(v);
            for &u in h.neighbors(v) {
                b.insert(u);
            }
            b
        })
        .collect();
    let (size, witness) =
        min_set_cover(&rows, &BitSet::full(h.n)).expect("closed neighbourhoods cover V");
    (size, witness)
}

/// Maximum distance-3 independent set: a maximum independent set of the
/// square graph (vertices adjacent when within distance 2).
pub fn max_d3is(h: &StaticGraph) -> (usize, Vec<usize>) {
    let n = h.n;
    if n == 0 {
        return (0, vec![]);
    }
    // square-graph closed neighbourhoods as masks (n is small here)
    assert!(n <= 64, "d3is solver limited to 64 vertices");
    let mut nbr2 = vec![0u64; n];
    for v in 0..n {
        nbr2[v] |= 1 << v;
        for &u in h.neighbors(v) {
            nbr2[v] |= 1 << u;
            for &w in h.neighbors(u) {
                nbr2[v] |= 1 << w;
            }
        }
    }
    fn branch(
        nbr2: &[u64],
        n: usize,
        free: u64,
        current: u64,
        best: &mut (usize, u64),
    ) {
        let cur_size = current.count_ones() as usize;
        let free_size = free.count_ones() as usize;
        if cur_size + free_size <= best.0 {
            return;
        }
        if free == 0 {
            if cur_size > best.0 {
                *best = (cur_size, current);
            }
            return;
        }
        let v = free.trailing_zeros() as usize;
        // include v
        branch(nbr2, n, free & !nbr2[v], current | (1 << v), best);
        // exclude v
        branch(nbr2, n, free & !(1 << v), current, best);
    }
    let mut best = (0usize, 0u64);
    branch(&nbr2, n, if n == 64 { u64::MAX } else { (1u64 << n) - 1 }, 0, &mut best);
    let witness: Vec<usize> = (0..n).filter(|&v| best.1 & (1 << v) != 0).collect();
    (best.0, witness)
}

fn is_d3is(h: &StaticGraph, s: &[usize]) -> bool {
    for (i, &u) in s.iter().enumerate() {
        let dist = h.bfs_distances(u);
        for &v in &s[i + 1..] {
            if dist[v] < 3 {
                return false;
            }
        }
    }
    true
}

fn is_maximal_d3is(h: &StaticGraph, s: &[usize]) -> bool {
    if !is_d3is(h, s) {
        return false;
    }
    for v in 0..h.n {
        if s.contains(&v) {
            continue;
        }
        let dist = h.bfs_distances(v);
        if s.iter().all(|&u| dist[u] >= 3) {
            return false;
        }
    }
    true
}

/// Builds the lifetime-2 assignment witnessing that a maximal D3IS `s`
/// is a minimum nonstrict TaRDiS: edges touching `s` get time 1, the
/// rest time 2.
pub fn d3is_witness_assignment(
    h: &StaticGraph,
    s: &[usize],
) -> Result<TemporalGraph, MaxMinError> {
    if !is_d3is(h, s) {
        return Err(MaxMinError::Precondition("set is not a D3IS".into()));
    }
    if !is_maximal_d3is(h, s) {
        return Err(MaxMinError::Precondition("D3IS is not maximal".into()));
    }
    let time_edges: Vec<(usize, usize, u32)> = h
        .edges
        .iter()
        .map(|&(u, v)| {
            let t = if s.contains(&u) || s.contains(&v) { 1 } else { 2 };
            (u, v, t)
        })
        .collect();
    Ok(TemporalGraph::new(h.n, &time_edges).unwrap())
}

/// Rewrites a minimum nonstrict TaRDiS of a lifetime-2 graph into an
/// independent one of equal size: every member outside its own sole
/// reachability set is swapped for the closest vertex inside it. The
/// result is a D3IS of the footprint.
pub fn extract_independent_tardis(
    g: &TemporalGraph,
    s: &[usize],
) -> Result<Vec<usize>, MaxMinError> {
    if g.tau() != 2 {
        return Err(MaxMinError::Precondition(format!(
            "lifetime is {}, the rewrite applies only to lifetime 2",
            g.tau()
        )));
    }
    if !is_tardis(g, s, Semantics::Nonstrict) {
        return Err(MaxMinError::Precondition("set is not a nonstrict TaRDiS".into()));
    }
    let optimum = min_tardis_setcover(g, Semantics::Nonstrict, Candidates::Canonical)
        .expect("full candidate pool always covers")
        .size;
    if s.len() != optimum {
        return Err(MaxMinError::Precondition(format!(
            "set has size {}, minimum is {optimum}",
            s.len()
        )));
    }
    let fp = g.footprint();
    let mut cur: Vec<usize> = s.to_vec();
    cur.sort_unstable();
    loop {
        let reaches: Vec<BitSet> = cur
            .iter()
            .map(|&x| {
                let mut b = BitSet::new(g.n());
                for v in reach_set(g, VertexId(x), Semantics::Nonstrict) {
                    b.insert(v);
                }
                b
            })
            .collect();
        let sole = |i: usize| -> BitSet {
            let mut b = reaches[i].clone();
            let mut others = BitSet::new(g.n());
            for (j, r) in reaches.iter().enumerate() {
                if j != i {
                    others.union_with(r);
                }
            }
            for v in others.iter() {
                b.remove(v);
            }
            b
        };
        let violator = (0..cur.len()).find(|&i| !sole(i).contains(cur[i]));
        let Some(i) = violator else { break };
        let x = cur[i];
        let sr = sole(i);
        // minimality guarantees a nonempty sole reachability set
        let dist = fp.bfs_distances(x);
        let x_star = sr
            .iter()
            .min_by_key(|&v| (dist[v], v))
            .expect("sole reachability set of a minimum TaRDiS member is nonempty");
        cur[i] = x_star;
        cur.sort_unstable();
    }
    debug_assert!(is_tardis(g, &cur, Semantics::Nonstrict));
    debug_assert!(is_d3is(&fp, &cur));
    Ok(cur)
}

/// Searches for a proper edge colouring with colours `1..=tau`,
/// interpreted as a happy temporal assignment. Exact backtracking with a
/// highest-degree-first edge order.
pub fn happy_assignment_exists(h: &StaticGraph, tau: u32) -> Option<TemporalGraph> {
    if h.edges.is_empty() {
        return Some(TemporalGraph::new(h.n, &[]).unwrap());
    }
    if h.max_degree() as u32 > tau {
        return None;
    }
    let m = h.edges.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| {
        let (u, v) = h.edges[i];
        usize::MAX - (h.degree(u) + h.degree(v))
    });
    let mut colour = vec![0u32; m];
    // incident edges per edge
    let incident: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let (u, v) = h.edges[i];
            (0..m)
                .filter(|&j| {
                    if j == i {
                        return false;
                    }
                    let (a, b) = h.edges[j];
                    a == u || a == v || b == u || b == v
                })
                .collect()
        })
        .collect();
    fn go(
        pos: usize,
        order: &[usize],
        colour: &mut Vec<u32>,
        incident: &[Vec<usize>],
        tau: u32,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let e = order[pos];
        'col: for c in 1..=tau {
            for &j in &incident[e] {
                if colour[j] == c {
                    continue 'col;
                }
            }
            colour[e] = c;
            if go(pos + 1, order, colour, incident, tau) {
                return true;
            }
            colour[e] = 0;
        }
        false
    }
    if !go(0, &order, &mut colour, &incident, tau) {
        return None;
    }
    let time_edges: Vec<(usize, usize, u32)> = h
        .edges
        .iter()
        .zip(&colour)
        .map(|(&(u, v), &c)| (u, v, c))
        .collect();
    Some(TemporalGraph::new(h.n, &time_edges).unwrap())
}

/// Degree-based yes-shortcut for the strict variant: more than
/// `(k-1) * (Delta+1)` vertices force a dominating set of size at least
/// `k`.
pub fn quick_reject_strict_maxmin(h: &StaticGraph, k: usize) -> Option<bool> {
    if k == 0 {
        return Some(true);
    }
    let delta = h.max_degree();
    if h.n > (k - 1) * (delta + 1) {
        Some(true)
    } else {
        None
    }
}

/// Fast exact minimum TaRDiS over closure rows given as masks; used by
/// the assignment enumerators.
fn min_cover_masks(rows: &[u64], n: usize) -> usize {
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // greedy upper bound
    let mut covered = 0u64;
    let mut ub = 0usize;
    while covered != full {
        let best = (0..n)
            .max_by_key(|&v| (rows[v] & !covered).count_ones())
            .unwrap();
        covered |= rows[best];
        ub += 1;
    }
    fn dfs(rows: &[u64], n: usize, full: u64, covered: u64, used: usize, best: &mut usize) {
        if covered == full {
            *best = (*best).min(used);
            return;
        }
        if used + 1 >= *best {
            return;
        }
        let missing = (!covered & full).trailing_zeros() as usize;
        for v in 0..n {
            if rows[v] & (1 << missing) != 0 {
                dfs(rows, n, full, covered | rows[v], used + 1, best);
            }
        }
    }
    let mut best = ub;
    dfs(rows, n, full, 0, 0, &mut best);
    best
}

/// Nonstrict/strict closure rows for an assignment given as one time per
/// edge (or a small set of times); bitmask implementation for the hot
/// enumeration loop.
fn closure_rows(h: &StaticGraph, times: &[Vec<u32>], tau: u32, semantics: Semantics) -> Vec<u64> {
    let n = h.n;
    debug_assert!(n <= 64);
    let mut rows = vec![0u64; n];
    // per-time edge lists
    let mut by_time: Vec<Vec<(usize, usize)>> = vec![Vec::new(); tau as usize + 1];
    for (i, &(u, v)) in h.edges.iter().enumerate() {
        for &t in &times[i] {
            by_time[t as usize].push((u, v));
        }
    }
    for s in 0..n {
        let mut arrival: Vec<Option<u32>> = vec![None; n];
        arrival[s] = Some(0);
        for t in 1..=tau {
            let edges = &by_time[t as usize];
            if edges.is_empty() {
                continue;
            }
            match semantics {
                Semantics::Strict => {
                    let mut newly = 0u64;
                    for &(u, v) in edges {
                        for (x, y) in [(u, v), (v, u)] {
                            if arrival[x].is_some_and(|a| a < t) {
                                newly |= 1 << y;
                            }
                        }
                    }
                    for y in 0..n {
                        if newly & (1 << y) != 0 && arrival[y].is_none_or(|a| a > t) {
                            arrival[y] = Some(t);
                        }
                    }
                }
                Semantics::Nonstrict => {
                    // fixpoint within the snapshot
                    loop {
                        let mut changed = false;
                        for &(u, v) in edges {
                            for (x, y) in [(u, v), (v, u)] {
                                if arrival[x].is_some_and(|a| a <= t)
                                    && arrival[y].is_none_or(|a| a > t)
                                {
                                    arrival[y] = Some(t);
                                    changed = true;
                                }
                            }
                        }
                        if !changed {
                            break;
                        }
                    }
                }
            }
        }
        for y in 0..n {
            if arrival[y].is_some() {
                rows[s] |= 1 << y;
            }
        }
    }
    rows
}

/// Assignment spaces the enumerators walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentClass {
    /// one time per edge
    Simple,
    /// any nonempty subset of times per edge (only for small cross-checks)
    General,
    /// proper edge colourings
    Happy,
}

/// Decodes assignment `index` into per-edge time sets for the simple and
/// general classes.
fn decode_assignment(
    index: u128,
    m: usize,
    tau: u32,
    class: AssignmentClass,
) -> Vec<Vec<u32>> {
    let mut idx = index;
    let mut out = Vec::with_capacity(m);
    match class {
        AssignmentClass::Simple => {
            for _ in 0..m {
                let t = (idx % tau as u128) as u32 + 1;
                idx /= tau as u128;
                out.push(vec![t]);
            }
        }
        AssignmentClass::General => {
            let choices = (1u128 << tau) - 1;
            for _ in 0..m {
                let code = (idx % choices) as u32 + 1; // nonempty subset
                idx /= choices;
                let set: Vec<u32> = (0..tau).filter(|&b| code & (1 << b) != 0).map(|b| b + 1).collect();
                out.push(set);
            }
        }
        AssignmentClass::Happy => unreachable!("happy assignments are enumerated directly"),
    }
    out
}

/// Exhaustive MaxMin over an assignment class. Returns the maximum of
/// the minimum TaRDiS size and the first (lexicographically smallest
/// index) maximizing assignment.
pub fn enumerate_maxmin(
    h: &StaticGraph,
    tau: u32,
    semantics: Semantics,
    class: AssignmentClass,
    budget: u128,
    threads: usize,
) -> Result<(usize, TemporalGraph), MaxMinError> {
    assert!(h.n <= 64);
    let m = h.edges.len();
    if m == 0 {
        return Ok((h.n, TemporalGraph::new(h.n, &[]).unwrap()));
    }
    if class == AssignmentClass::Happy {
        return enumerate_happy_maxmin(h, tau, budget);
    }
    let per_edge: u128 = match class {
        AssignmentClass::Simple => tau as u128,
        AssignmentClass::General => (1u128 << tau) - 1,
        AssignmentClass::Happy => unreachable!(),
    };
    let total = per_edge.checked_pow(m as u32).filter(|&t| t <= budget).ok_or(
        MaxMinError::EnumBudget { required: u128::MAX, budget },
    )?;
    if total > budget {
        return Err(MaxMinError::EnumBudget { required: total, budget });
    }
    let threads = threads.max(1).min(64);
    let eval_range = |lo: u128, hi: u128| -> (usize, u128) {
        let mut best = (0usize, lo);
        for index in lo..hi {
            let times = decode_assignment(index, m, tau, class);
            let rows = closure_rows(h, &times, tau, semantics);
            let v = min_cover_masks(&rows, h.n);
            if v > best.0 {
                best = (v, index);
            }
        }
        best
    };
    let best = if threads == 1 || total < 4096 {
        eval_range(0, total)
    } else {
        let chunk = total / threads as u128 + 1;
        let mut results: Vec<(usize, u128)> = Vec::new();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for i in 0..threads {
                let lo = chunk * i as u128;
                let hi = (lo + chunk).min(total);
                if lo >= hi {
                    continue;
                }
                handles.push(scope.spawn(move || eval_range(lo, hi)));
            }
            for hd in handles {
                results.push(hd.join().expect("enumeration worker panicked"));
            }
        });
        // deterministic merge: max value, earliest index on ties
        *results
            .iter()
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .unwrap()
    };
    let times = decode_assignment(best.1, m, tau, class);
    let te: Vec<(usize, usize, u32)> = h
        .edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| times[i].iter().map(move |&t| (u, v, t)).collect::<Vec<_>>())
        .collect();
    Ok((best.0, TemporalGraph::new(h.n, &te).unwrap()))
}

/// Enumerates all proper tau-edge-colourings by backtracking, tracking
/// the best minimum TaRDiS. Happy graphs behave identically under both
/// semantics, so the nonstrict closure is used.
fn enumerate_happy_maxmin(
    h: &StaticGraph,
    tau: u32,
    budget: u128,
) -> Result<(usize, TemporalGraph), MaxMinError> {
    let m = h.edges.len();
    let incident: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let (u, v) = h.edges[i];
            (0..m)
                .filter(|&j| {
                    if j == i {
                        return false;
                    }
                    let (a, b) = h.edges[j];
                    a == u || a == v || b == u || b == v
                })
                .collect()
        })
        .collect();
    struct Search<'a> {
        h: &'a StaticGraph,
        tau: u32,
        incident: &'a [Vec<usize>],
        colour: Vec<u32>,
        best: Option<(usize, Vec<u32>)>,
        visited: u128,
        budget: u128,
    }
    impl Search<'_> {
        fn go(&mut self, e: usize) -> Result<(), MaxMinError> {
            if e == self.colour.len() {
                self.visited += 1;
                if self.visited > self.budget {
                    return Err(MaxMinError::EnumBudget {
                        required: self.visited,
                        budget: self.budget,
                    });
                }
                let times: Vec<Vec<u32>> = self.colour.iter().map(|&c| vec![c]).collect();
                let rows = closure_rows(self.h, &times, self.tau, Semantics::Nonstrict);
                let v = min_cover_masks(&rows, self.h.n);
                if self.best.as_ref().is_none_or(|b| v > b.0) {
                    self.best = Some((v, self.colour.clone()));
                }
                return Ok(());
            }
            'col: for c in 1..=self.tau {
                for &j in &self.incident[e] {
                    if j < e && self.colour[j] == c {
                        continue 'col;
                    }
                }
                self.colour[e] = c;
                self.go(e + 1)?;
            }
            Ok(())
        }
    }
    let mut search = Search {
        h,
        tau,
        incident: &incident,
        colour: vec![0; m],
        best: None,
        visited: 0,
        budget,
    };
    search.go(0)?;
    match search.best {
        None => Err(MaxMinError::HappyInfeasible { tau }),
        Some((v, colour)) => {
            let te: Vec<(usize, usize, u32)> = h
                .edges
                .iter()
                .zip(&colour)
                .map(|(&(u, v2), &c)| (u, v2, c))
                .collect();
            Ok((v, TemporalGraph::new(h.n, &te).unwrap()))
        }
    }
}

/// Happy optimum for lifetime at most 2: the footprint must be
/// tau-edge-colourable (a matching for tau 1; paths and even cycles for
/// tau 2). Odd paths get both leaf edges at time 1; even paths and
/// cycles have a unique assignment up to symmetry.
fn happy_small_tau_assignment(h: &StaticGraph, tau: u32) -> Option<TemporalGraph> {
    if tau == 1 {
        if h.max_degree() > 1 {
            return None;
        }
        let te: Vec<(usize, usize, u32)> = h.edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        return Some(TemporalGraph::new(h.n, &te).unwrap());
    }
    if h.max_degree() > 2 {
        return None;
    }
    let mut assignment: Vec<(usize, usize, u32)> = Vec::new();
    for comp in h.components() {
        if comp.len() == 1 {
            continue;
        }
        let edge_count = comp
            .iter()
            .map(|&v| h.degree(v))
            .sum::<usize>()
            / 2;
        let is_cycle = edge_count == comp.len();
        if is_cycle {
            if comp.len() % 2 == 1 {
                return None; // odd cycle: not 2-edge-colourable
            }
            // alternate around the cycle from the lowest vertex
            let start = comp[0];
            let mut prev = start;
            let mut cur = *h.neighbors(start).iter().min().unwrap();
            let mut t = 1u32;
            assignment.push((start, cur, t));
            while cur != start {
                let next = h
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .unwrap();
                t = 3 - t;
                assignment.push((cur, next, t));
                prev = cur;
                cur = next;
            }
        } else {
            // path: walk from a leaf; odd edge counts start (and hence
            // end) at time 1, even ones also start at 1
            let leaf = *comp.iter().find(|&&v| h.degree(v) == 1).unwrap();
            let mut prev = usize::MAX;
            let mut cur = leaf;
            let mut t = 1u32;
            loop {
                let next = h.neighbors(cur).iter().copied().find(|&x| x != prev);
                let Some(next) = next else { break };
                assignment.push((cur, next, t));
                t = 3 - t;
                prev = cur;
                cur = next;
            }
        }
    }
    Some(TemporalGraph::new(h.n, &assignment).unwrap())
}

/// Exact MaxMin value with a witness assignment. Auto dispatch uses the
/// shortcuts where they apply and budgeted enumeration elsewhere.
pub fn maxmin_value(
    h: &StaticGraph,
    tau: u32,
    variant: Variant,
    algo: MaxMinAlgo,
    budget: Option<u128>,
    threads: usize,
) -> Result<MaxMinResult, MaxMinError> {
    assert!(tau >= 1, "lifetime must be positive");
    let budget = budget.unwrap_or(DEFAULT_ENUM_BUDGET);
    let enumerate = |class: AssignmentClass, semantics: Semantics| {
        enumerate_maxmin(h, tau, semantics, class, budget, threads)
    };
    match (variant, algo) {
        (Variant::Strict, MaxMinAlgo::Auto | MaxMinAlgo::Shortcut) => {
            // the constant assignment is optimal: value is the minimum
            // dominating set size
            let (value, _) = min_dominating_set(h);
            let te: Vec<(usize, usize, u32)> =
                h.edges.iter().map(|&(u, v)| (u, v, 1)).collect();
            Ok(MaxMinResult {
                value,
                witness_assignment: TemporalGraph::new(h.n, &te).unwrap(),
                variant,
                tau,
                algorithm: "shortcut-dominating-set",
            })
        }
        (Variant::Strict, MaxMinAlgo::Enumerate) => {
            let (value, witness) = enumerate(AssignmentClass::Simple, Semantics::Strict)?;
            Ok(MaxMinResult {
                value,
                witness_assignment: witness,
                variant,
                tau,
                algorithm: "enumeration",
            })
        }
        (Variant::Nonstrict, MaxMinAlgo::Auto | MaxMinAlgo::Shortcut) if tau == 1 => {
            let te: Vec<(usize, usize, u32)> =
                h.edges.iter().map(|&(u, v)| (u, v, 1)).collect();
            Ok(MaxMinResult {
                value: h.components().len(),
                witness_assignment: TemporalGraph::new(h.n, &te).unwrap(),
                variant,
                tau,
                algorithm: "shortcut-components",
            })
        }
        (Variant::Nonstrict, MaxMinAlgo::Auto | MaxMinAlgo::Shortcut) if tau == 2 => {
            let (value, s) = max_d3is(h);
            let witness = d3is_witness_assignment(h, &s)
                .expect("a maximum D3IS is maximal");
            Ok(MaxMinResult {
                value,
                witness_assignment: witness,
                variant,
                tau,
                algorithm: "shortcut-d3is",
            })
        }
        (Variant::Nonstrict, MaxMinAlgo::Shortcut) => Err(MaxMinError::ShortcutUnavailable),
        (Variant::Nonstrict, _) => {
            let (value, witness) = enumerate(AssignmentClass::Simple, Semantics::Nonstrict)?;
            Ok(MaxMinResult {
                value,
                witness_assignment: witness,
                variant,
                tau,
                algorithm: "enumeration",
            })
        }
        (Variant::Happy, MaxMinAlgo::Auto | MaxMinAlgo::Shortcut) if tau <= 2 => {
            let witness = happy_small_tau_assignment(h, tau)
                .ok_or(MaxMinError::HappyInfeasible { tau })?;
            let value = if h.edges.is_empty() {
                h.n
            } else {
                min_tardis_special(&witness, Semantics::Nonstrict)
                    .expect("special case applies to happy lifetime <= 2")
                    .size
            };
            Ok(MaxMinResult {
                value,
                witness_assignment: witness,
                variant,
                tau,
                algorithm: "shortcut-happy-small-tau",
            })
        }
        (Variant::Happy, MaxMinAlgo::Shortcut) => Err(MaxMinError::ShortcutUnavailable),
        (Variant::Happy, _) => {
            let (value, witness) = enumerate(AssignmentClass::Happy, Semantics::Nonstrict)?;
            Ok(MaxMinResult {
                value,
                witness_assignment: witness,
                variant,
                tau,
                algorithm: "enumeration",
            })
        }
    }
}
