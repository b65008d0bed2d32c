//! Test-only oracles, independent of the library's reachability
//! implementation: exhaustive enumeration of simple temporal paths.
#![allow(dead_code)] // each test file uses a subset

use tardis::graph::TemporalGraph;
use tardis::reach::Semantics;

/// Foremost arrival times by brute-force enumeration of every simple
/// temporal path from `source` (paths have at most n-1 edges). The
/// trivial path gives arrival 0 only when no departure bound is set.
pub fn oracle_foremost(
    g: &TemporalGraph,
    source: usize,
    depart_after: Option<u32>,
    semantics: Semantics,
) -> Vec<Option<u32>> {
    let n = g.n();
    let mut best: Vec<Option<u32>> = vec![None; n];
    if depart_after.is_none() {
        best[source] = Some(0);
    }
    // adjacency as (neighbor, time) pairs
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for e in g.edges() {
        for &t in &e.times {
            adj[e.u.0].push((e.v.0, t));
            adj[e.v.0].push((e.u.0, t));
        }
    }
    let mut visited = vec![false; n];
    visited[source] = true;
    fn dfs(
        adj: &[Vec<(usize, u32)>],
        visited: &mut Vec<bool>,
        best: &mut Vec<Option<u32>>,
        x: usize,
        last: Option<u32>,
        depart_after: Option<u32>,
        semantics: Semantics,
    ) {
        for &(y, t) in &adj[x] {
            if visited[y] {
                continue;
            }
            let ok = match last {
                None => match depart_after {
                    None => true,
                    Some(t0) => match semantics {
                        Semantics::Strict => t > t0,
                        Semantics::Nonstrict => t >= t0,
                    },
                },
                Some(prev) => match semantics {
                    Semantics::Strict => t > prev,
                    Semantics::Nonstrict => t >= prev,
                },
            };
            if !ok {
                continue;
            }
            if best[y].map_or(true, |b| t < b) {
                best[y] = Some(t);
            }
            visited[y] = true;
            dfs(adj, visited, best, y, Some(t), depart_after, semantics);
            visited[y] = false;
        }
    }
    dfs(&adj, &mut visited, &mut best, source, None, depart_after, semantics);
    best
}

/// Distance-3 independent set maximum by subset enumeration.
pub fn oracle_max_d3is(h: &tardis::graph::StaticGraph) -> usize {
    let n = h.n;
    assert!(n <= 20);
    let dist: Vec<Vec<usize>> = (0..n).map(|v| h.bfs_distances(v)).collect();
    let mut best = 0;
    'subset: for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if members.len() <= best {
            continue;
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if dist[u][v] < 3 {
                    continue 'subset;
                }
            }
        }
        best = members.len();
    }
    best
}

/// Minimum dominating set size by subset enumeration.
pub fn oracle_min_dominating_set(h: &tardis::graph::StaticGraph) -> usize {
    let n = h.n;
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 1u32 << v;
            for &u in h.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect();
    let full = (1u32 << n) - 1;
    (0..=n)
        .find(|&k| {
            tardis::util::first_subset_of_size(n, k, &mut |s| {
                s.iter().fold(0u32, |acc, &v| acc | masks[v]) == full
            })
            .is_some()
        })
        .unwrap()
}
