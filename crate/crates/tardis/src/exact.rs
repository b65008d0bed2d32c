//! Exact minimum-TaRDiS solvers for general temporal graphs: a
//! subset-enumeration oracle, a set-cover branch and bound with canonical
//! candidate pruning, and the linear-time special cases for tau = 1
//! (nonstrict) and happy graphs with tau <= 2.

use thiserror::Error;

use crate::graph::{classify, locally_earliest_endpoints, TemporalGraph, VertexId};
use crate::reach::{is_tardis, reach_set, Semantics};
use crate::util::{first_subset_of_size, min_set_cover, BitSet};

pub const DEFAULT_BRUTEFORCE_CAP: usize = 16;

/// Optimal size plus one witness set and the algorithm that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TardisResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub algorithm: &'static str,
    pub semantics: Semantics,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("instance has {n} vertices, above the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("candidate set cannot cover all vertices")]
    InfeasibleCandidates,
    #[error("the given set is not a TaRDiS under the required semantics")]
    NotATardis,
    #[error("footprint is not a forest")]
    NotForest,
    #[error("estimated DP state space {estimate} exceeds budget {budget}")]
    StateBudget { estimate: u128, budget: u128 },
    #[error("graph and decomposition do not match: {0}")]
    Shape(String),
}

/// Subset enumeration by increasing cardinality, lexicographic within a
/// cardinality; the first TaRDiS found is returned. This is the
/// independent oracle the other solvers are validated against.
pub fn min_tardis_bruteforce(
    g: &TemporalGraph,
    semantics: Semantics,
    cap: Option<usize>,
) -> Result<TardisResult, SolveError> {
    let cap = cap.unwrap_or(DEFAULT_BRUTEFORCE_CAP);
    let n = g.n();
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(TardisResult { size: 0, witness: vec![], algorithm: "bruteforce", semantics });
    }
    let rows: Vec<BitSet> = (0..n)
        .map(|u| {
            let mut b = BitSet::new(n);
            for v in reach_set(g, VertexId(u), semantics) {
                b.insert(v);
            }
            b
        })
        .collect();
    for k in 1..=n {
        let found = first_subset_of_size(n, k, &mut |s| {
            let mut covered = BitSet::new(n);
            for &u in s {
                covered.union_with(&rows[u]);
            }
            covered.len() == n
        });
        if let Some(witness) = found {
            return Ok(TardisResult { size: k, witness, algorithm: "bruteforce", semantics });
        }
    }
    unreachable!("the full vertex set is always a TaRDiS");
}

/// Candidate pool selection strategy for the set-cover solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Candidates {
    /// All vertices.
    All,
    /// Endpoints of (weakly) locally earliest edges where Lemma-style
    /// canonical pruning applies: weakly locally earliest for nonstrict,
    /// locally earliest when the graph is proper. Falls back to all
    /// vertices for general strict instances.
    Canonical,
    /// Caller-provided pool; checked for coverage.
    Explicit(Vec<usize>),
}

fn candidate_pool(g: &TemporalGraph, semantics: Semantics, candidates: &Candidates) -> Vec<usize> {
    match candidates {
        Candidates::All => (0..g.n()).collect(),
        Candidates::Explicit(c) => {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            c
        }
        Candidates::Canonical => match semantics {
            Semantics::Nonstrict => {
                let mut c = locally_earliest_endpoints(g, true);
                // isolated vertices are their own only coverers
                for v in 0..g.n() {
                    if g.incident(v).is_empty() {
                        c.push(v);
                    }
                }
                c.sort_unstable();
                c
            }
            Semantics::Strict => {
                if classify(g).proper {
                    let mut c = locally_earliest_endpoints(g, false);
                    for v in 0..g.n() {
                        if g.incident(v).is_empty() {
                            c.push(v);
                        }
                    }
                    c.sort_unstable();
                    c
                } else {
                    (0..g.n()).collect()
                }
            }
        },
    }
}

/// Exact minimum TaRDiS by branch and bound over candidate reachability
/// sets. The default pool is the canonical one where the pruning lemma
/// licenses it, all vertices otherwise.
pub fn min_tardis_setcover(
    g: &TemporalGraph,
    semantics: Semantics,
    candidates: Candidates,
) -> Result<TardisResult, SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok(TardisResult { size: 0, witness: vec![], algorithm: "setcover", semantics });
    }
    let pool = candidate_pool(g, semantics, &candidates);
    let rows: Vec<BitSet> = pool
        .iter()
        .map(|&u| {
            let mut b = BitSet::new(n);
            for v in reach_set(g, VertexId(u), semantics) {
                b.insert(v);
            }
            b
        })
        .collect();
    let (size, rows_chosen) =
        min_set_cover(&rows, &BitSet::full(n)).ok_or(SolveError::InfeasibleCandidates)?;
    let mut witness: Vec<usize> = rows_chosen.into_iter().map(|i| pool[i]).collect();
    witness.sort_unstable();
    debug_assert!(is_tardis(g, &witness, semantics));
    Ok(TardisResult { size, witness, algorithm: "setcover", semantics })
}

/// Decision shortcut parameterized by the number of weakly locally
/// earliest edges: with `k` at least that number the answer is yes
/// outright; otherwise only k-subsets of canonical candidates need
/// checking. Valid for nonstrict semantics, and for strict on proper
/// graphs.
pub fn decide_tardis_lee(g: &TemporalGraph, semantics: Semantics, k: usize) -> Option<bool> {
    let weak = match semantics {
        Semantics::Nonstrict => true,
        Semantics::Strict => {
            if !classify(g).proper {
                return None;
            }
            false
        }
    };
    let lee = crate::graph::locally_earliest_edges(g, weak);
    let mut pool = locally_earliest_endpoints(g, weak);
    for v in 0..g.n() {
        if g.incident(v).is_empty() {
            pool.push(v);
        }
    }
    pool.sort_unstable();
    let isolated = (0..g.n()).filter(|&v| g.incident(v).is_empty()).count();
    if k >= lee.len() + isolated {
        return Some(true);
    }
    if k >= pool.len() {
        return Some(is_tardis(g, &pool, semantics));
    }
    let hit = first_subset_of_size(pool.len(), k, &mut |s| {
        let set: Vec<usize> = s.iter().map(|&i| pool[i]).collect();
        is_tardis(g, &set, semantics)
    });
    Some(hit.is_some())
}

/// Rewrites a nonstrict TaRDiS into a weakly canonical one of no larger
/// size: every member not incident to a weakly locally earliest edge is
/// swapped for a vertex whose reachability set contains its own.
pub fn canonicalize_tardis(g: &TemporalGraph, s: &[usize]) -> Result<Vec<usize>, SolveError> {
    if !is_tardis(g, s, Semantics::Nonstrict) {
        return Err(SolveError::NotATardis);
    }
    let canonical: BitSet = {
        let mut b = BitSet::new(g.n());
        for v in locally_earliest_endpoints(g, true) {
            b.insert(v);
        }
        // vertices with no incident edges have nothing to swap to
        for v in 0..g.n() {
            if g.incident(v).is_empty() {
                b.insert(v);
            }
        }
        b
    };
    let mut out: Vec<usize> = s.to_vec();
    out.sort_unstable();
    out.dedup();
    loop {
        let Some(pos) = out.iter().position(|&x| !canonical.contains(x)) else {
            break;
        };
        let x = out[pos];
        // the earliest incident time-edge ((x,u),t) is not weakly locally
        // earliest, so some edge at u is strictly earlier; replace x by
        // the far endpoint of the earliest such companion
        let m = g
            .incident(x)
            .iter()
            .map(|&ei| g.edges()[ei].lambda_min())
            .min()
            .expect("non-canonical vertex has incident edges");
        let mut best: Option<(u32, usize, usize)> = None; // (t', v, u)
        for &ei in g.incident(x) {
            let e = &g.edges()[ei];
            if e.lambda_min() != m {
                continue;
            }
            let u = if e.u.0 == x { e.v.0 } else { e.u.0 };
            for &ej in g.incident(u) {
                if ej == ei {
                    continue;
                }
                let f = &g.edges()[ej];
                let v = if f.u.0 == u { f.v.0 } else { f.u.0 };
                for &tp in &f.times {
                    if tp <= m {
                        let key = (tp, v, u);
                        if best.is_none_or(|b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        let (_, v, _) = best.expect("violating pair exists for non-canonical member");
        out.remove(pos);
        if !out.contains(&v) {
            out.push(v);
        }
        out.sort_unstable();
    }
    debug_assert!(is_tardis(g, &out, Semantics::Nonstrict));
    Ok(out)
}

/// Linear-time special cases: one vertex per component when tau = 1
/// under nonstrict semantics, and the leaf-walk / cycle-split procedure
/// for happy graphs with tau <= 2. Returns `None` when neither applies.
pub fn min_tardis_special(g: &TemporalGraph, semantics: Semantics) -> Option<TardisResult> {
    let class = classify(g);
    if g.tau() <= 1 && semantics == Semantics::Nonstrict {
        let witness: Vec<usize> =
            g.footprint().components().iter().map(|c| c[0]).collect();
        return Some(TardisResult {
            size: witness.len(),
            witness,
            algorithm: "special-tau1",
            semantics,
        });
    }
    if class.happy && g.tau() <= 2 {
        let witness = happy_small_tau_witness(g);
        debug_assert!(is_tardis(g, &witness, semantics));
        return Some(TardisResult {
            size: witness.len(),
            witness,
            algorithm: "special-happy",
            semantics,
        });
    }
    None
}

/// Happy tau <= 2 procedure. The footprint is 2-edge-colourable, so each
/// component is an isolated vertex, a path or an even cycle. Paths are
/// covered by walking from a leaf: the first uncovered vertex is always
/// covered by the candidate whose reachability interval extends furthest
/// along the path. Cycles seed the witness with a vertex incident to a
/// time-1 edge, which leaves a path of uncovered vertices.
fn happy_small_tau_witness(g: &TemporalGraph) -> Vec<usize> {
    let fp = g.footprint();
    let time_of = |u: usize, v: usize| -> u32 {
        let ei = *g
            .incident(u)
            .iter()
            .find(|&&ei| {
                let e = &g.edges()[ei];
                (e.u.0, e.v.0) == (u.min(v), u.max(v))
            })
            .unwrap();
        g.edges()[ei].times[0]
    };
    let reach_bits = |v: usize| -> BitSet {
        let mut b = BitSet::new(g.n());
        for x in reach_set(g, VertexId(v), Semantics::Nonstrict) {
            b.insert(x);
        }
        b
    };
    // ordered walk through a path component starting at a leaf
    let path_order = |comp: &[usize], start: usize| -> Vec<usize> {
        let in_comp = |x: usize| comp.contains(&x);
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = fp
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&y| in_comp(y) && y != prev);
            match next {
                Some(y) => {
                    order.push(y);
                    prev = cur;
                    cur = y;
                }
                None => break,
            }
        }
        order
    };
    // interval greedy over an ordered stretch: cover the first uncovered
    // position with the candidate reaching furthest along the order
    let cover_ordered =
        |order: &[usize], candidates: &[usize], covered: &mut BitSet, witness: &mut Vec<usize>| {
            let mut pos = 0;
            while pos < order.len() {
                if covered.contains(order[pos]) {
                    pos += 1;
                    continue;
                }
                let x = order[pos];
                let mut best: Option<(usize, usize)> = None; // (extent, candidate)
                for &cand in candidates {
                    let r = reach_bits(cand);
                    if !r.contains(x) {
                        continue;
                    }
                    let mut extent = pos;
                    while extent + 1 < order.len() && r.contains(order[extent + 1]) {
                        extent += 1;
                    }
                    let key = (extent, usize::MAX - cand);
                    if best.is_none_or(|b| key > (b.0, usize::MAX - b.1)) {
                        best = Some((extent, cand));
                    }
                }
                let (_, cand) = best.expect("x covers itself at worst");
                witness.push(cand);
                covered.union_with(&reach_bits(cand));
            }
        };
    let mut witness = Vec::new();
    for comp in fp.components() {
        if comp.len() == 1 {
            witness.push(comp[0]);
            continue;
        }
        let is_cycle = comp.iter().all(|&v| fp.degree(v) == 2);
        let mut covered = BitSet::new(g.n());
        if is_cycle {
            let v = *comp
                .iter()
                .find(|&&v| fp.neighbors(v).iter().any(|&w| time_of(v, w) == 1))
                .expect("a happy tau<=2 cycle has time-1 edges");
            witness.push(v);
            covered.union_with(&reach_bits(v));
            let rest: Vec<usize> =
                comp.iter().copied().filter(|&x| !covered.contains(x)).collect();
            if rest.is_empty() {
                continue;
            }
            // the uncovered arc is a path; order it from one of its ends
            let deg_in = |x: usize| {
                fp.neighbors(x)
                    .iter()
                    .filter(|&&y| rest.contains(&y))
                    .count()
            };
            let start = *rest
                .iter()
                .find(|&&x| deg_in(x) <= 1)
                .expect("an arc of a cycle has endpoints");
            let order = {
                // walk within the arc only
                let mut order = vec![start];
                let mut prev = usize::MAX;
                let mut cur = start;
                loop {
                    let next = fp
                        .neighbors(cur)
                        .iter()
                        .copied()
                        .find(|&y| rest.contains(&y) && y != prev);
                    match next {
                        Some(y) => {
                            order.push(y);
                            prev = cur;
                            cur = y;
                        }
                        None => break,
                    }
                }
                order
            };
            cover_ordered(&order, &comp, &mut covered, &mut witness);
        } else {
            let leaf = *comp
                .iter()
                .find(|&&v| fp.degree(v) == 1)
                .expect("path component has a leaf");
            let order = path_order(&comp, leaf);
            cover_ordered(&order, &comp, &mut covered, &mut witness);
        }
    }
    witness.sort_unstable();
    witness
}

/// Strict-semantics quick rejection from the degree/lifetime bound: each
/// vertex strictly reaches at most `2 * Delta^tau` vertices, so more than
/// `k` times that many vertices is a no-instance. Returns `Some(false)`
/// on rejection, `None` when the bound does not trigger.
pub fn quick_reject_strict(g: &TemporalGraph, k: usize) -> Option<bool> {
    let delta = g.footprint().max_degree() as u128;
    let bound: u128 = if delta == 0 {
        1
    } else {
        2u128.saturating_mul(delta.saturating_pow(g.tau()))
    };
    if (g.n() as u128) > (k as u128).saturating_mul(bound) {
        Some(false)
    } else {
        None
    }
}
