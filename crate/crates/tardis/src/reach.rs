//! Temporal reachability: foremost arrival times, reachability sets and
//! closures, TaRDiS verification, and departure-constrained reachability.
//!
//! Time-edges are processed grouped by time in ascending order. Within a
//! timestep, strict paths may take a single hop only, while nonstrict
//! paths spread through the whole connected component of the snapshot.

use crate::graph::{TemporalGraph, VertexId};
use crate::util::BitSet;

/// Strict paths have strictly increasing edge times; nonstrict paths are
/// nondecreasing. Threaded through every reachability computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Strict,
    Nonstrict,
}

impl Semantics {
    /// The paper's `succ` relation: is departure time `t` usable after `bound`?
    #[inline]
    pub fn departs_after(self, t: u32, bound: u32) -> bool {
        match self {
            Semantics::Strict => t > bound,
            Semantics::Nonstrict => t >= bound,
        }
    }
}

/// Per-vertex foremost arrival times from one source. Arrival 0 means the
/// trivial path (only possible with no departure bound); `None` encodes
/// unreachable.
#[derive(Debug, Clone)]
pub struct ForemostTable {
    pub source: VertexId,
    pub depart_after: Option<u32>,
    pub semantics: Semantics,
    pub arrival: Vec<Option<u32>>,
}

impl ForemostTable {
    pub fn reachable(&self) -> Vec<usize> {
        (0..self.arrival.len())
            .filter(|&v| self.arrival[v].is_some())
            .collect()
    }
}

/// Earliest arrival time at every vertex over temporal paths from
/// `source` whose first edge departs after `depart_after` (strictly after
/// for strict semantics, no earlier for nonstrict). With no bound the
/// trivial path gives `arrival[source] = 0`; with a bound the source
/// itself is only reachable via a returning walk, which we exclude.
pub fn foremost_arrivals(
    g: &TemporalGraph,
    source: VertexId,
    depart_after: Option<u32>,
    semantics: Semantics,
) -> ForemostTable {
    assert!(source.0 < g.n(), "source out of range");
    let n = g.n();
    let mut arrival: Vec<Option<u32>> = vec![None; n];
    if depart_after.is_none() {
        arrival[source.0] = Some(0);
    }
    // group time-edges by time once
    for t in 1..=g.tau() {
        let snap = g.snapshot_edges(t);
        if snap.is_empty() {
            continue;
        }
        // a vertex is "ready" at time t if a path may continue from it
        // along an edge active at t
        let ready = |arrival: &[Option<u32>], x: usize| -> bool {
            if x == source.0 {
                match depart_after {
                    Some(t0) => semantics.departs_after(t, t0),
                    None => true,
                }
            } else {
                match arrival[x] {
                    Some(a) => match semantics {
                        Semantics::Strict => a < t,
                        Semantics::Nonstrict => a <= t,
                    },
                    None => false,
                }
            }
        };
        match semantics {
            Semantics::Strict => {
                // single hop: an edge at t extends only paths arriving
                // strictly before t
                let mut newly = Vec::new();
                for &ei in &snap {
                    let e = &g.edges()[ei];
                    for (x, y) in [(e.u.0, e.v.0), (e.v.0, e.u.0)] {
                        if ready(&arrival, x) && arrival[y].is_none_or(|a| a > t) {
                            newly.push(y);
                        }
                    }
                }
                for y in newly {
                    // temporal paths never revisit their start
                    if y == source.0 {
                        continue;
                    }
                    if arrival[y].is_none_or(|a| a > t) {
                        arrival[y] = Some(t);
                    }
                }
            }
            Semantics::Nonstrict => {
                // fixpoint inside the snapshot: spread through components
                let mut stack: Vec<usize> = Vec::new();
                let mut in_snap_reached = vec![false; n];
                for &ei in &snap {
                    let e = &g.edges()[ei];
                    for x in [e.u.0, e.v.0] {
                        if !in_snap_reached[x] && ready(&arrival, x) {
                            in_snap_reached[x] = true;
                            stack.push(x);
                        }
                    }
                }
                // adjacency restricted to this snapshot
                let mut snap_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
                for &ei in &snap {
                    let e = &g.edges()[ei];
                    snap_adj[e.u.0].push(e.v.0);
                    snap_adj[e.v.0].push(e.u.0);
                }
                while let Some(x) = stack.pop() {
                    for &y in &snap_adj[x] {
                        if !in_snap_reached[y] {
                            in_snap_reached[y] = true;
                            stack.push(y);
                        }
                    }
                }
                for y in 0..n {
                    if y == source.0 {
                        continue;
                    }
                    if in_snap_reached[y] && arrival[y].is_none_or(|a| a > t) {
                        arrival[y] = Some(t);
                    }
                }
            }
        }
    }
    ForemostTable { source, depart_after, semantics, arrival }
}

/// The reachability set `R_u`: vertices reachable from `source` with no
/// departure bound (always contains the source).
pub fn reach_set(g: &TemporalGraph, source: VertexId, semantics: Semantics) -> Vec<usize> {
    foremost_arrivals(g, source, None, semantics).reachable()
}

/// n x n boolean reachability matrix; row `u` is `R_u`.
#[derive(Debug, Clone)]
pub struct ReachClosure {
    pub n: usize,
    pub semantics: Semantics,
    rows: Vec<BitSet>,
}

impl ReachClosure {
    pub fn row(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }
}

pub fn closure(g: &TemporalGraph, semantics: Semantics) -> ReachClosure {
    let rows = (0..g.n())
        .map(|u| {
            let mut b = BitSet::new(g.n());
            for v in reach_set(g, VertexId(u), semantics) {
                b.insert(v);
            }
            b
        })
        .collect();
    ReachClosure { n: g.n(), semantics, rows }
}

/// Is `s` a temporal reachability dominating set: does every vertex lie
/// in some member's reachability set?
pub fn is_tardis(g: &TemporalGraph, s: &[usize], semantics: Semantics) -> bool {
    let mut covered = BitSet::new(g.n());
    for &u in s {
        assert!(u < g.n(), "set member out of range");
        for v in reach_set(g, VertexId(u), semantics) {
            covered.insert(v);
        }
    }
    covered.len() == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TemporalGraph;

    fn tg(n: usize, edges: &[(usize, usize, u32)]) -> TemporalGraph {
        TemporalGraph::new(n, edges).unwrap()
    }

    #[test]
    fn single_edge_strict() {
        let g = tg(2, &[(0, 1, 1)]);
        let t = foremost_arrivals(&g, VertexId(0), None, Semantics::Strict);
        assert_eq!(t.arrival, vec![Some(0), Some(1)]);
    }

    #[test]
    fn equal_time_chaining_distinguishes_semantics() {
        let g = tg(3, &[(0, 1, 1), (1, 2, 1)]);
        let strict = foremost_arrivals(&g, VertexId(0), None, Semantics::Strict);
        assert_eq!(strict.arrival[2], None);
        let nonstrict = foremost_arrivals(&g, VertexId(0), None, Semantics::Nonstrict);
        assert_eq!(nonstrict.arrival[2], Some(1));
    }

    #[test]
    fn depart_after_excludes_earlier_edges() {
        let g = tg(3, &[(0, 1, 1), (1, 2, 2)]);
        let t = foremost_arrivals(&g, VertexId(0), Some(1), Semantics::Strict);
        // first hop must depart strictly after 1: edge @1 unusable
        assert_eq!(t.arrival, vec![None, None, None]);
        let t = foremost_arrivals(&g, VertexId(0), Some(1), Semantics::Nonstrict);
        assert_eq!(t.arrival, vec![None, Some(1), Some(2)]);
    }

    #[test]
    fn isolated_vertex_reaches_itself() {
        let g = tg(2, &[]);
        assert_eq!(reach_set(&g, VertexId(1), Semantics::Strict), vec![1]);
    }

    #[test]
    fn edgeless_closure_is_identity() {
        let g = tg(3, &[]);
        let c = closure(&g, Semantics::Nonstrict);
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(c.reaches(u, v), u == v);
            }
        }
    }

    #[test]
    fn tardis_basics() {
        let g = tg(3, &[(0, 1, 1), (1, 2, 1)]);
        assert!(is_tardis(&g, &[0, 1, 2], Semantics::Strict));
        assert!(!is_tardis(&g, &[], Semantics::Strict));
        // tau=1 connected, nonstrict: any singleton works
        for v in 0..3 {
            assert!(is_tardis(&g, &[v], Semantics::Nonstrict));
        }
        assert!(!is_tardis(&g, &[0], Semantics::Strict));
    }

    #[test]
    fn monotone_in_set_extension() {
        let g = tg(4, &[(0, 1, 2), (2, 3, 1)]);
        assert!(is_tardis(&g, &[0, 2], Semantics::Strict));
        assert!(is_tardis(&g, &[0, 1, 2], Semantics::Strict));
    }
}
