//! Seeded random instance generators shared by the CLI and the test
//! corpora. All randomness flows through a ChaCha stream so identical
//! seeds give identical instances on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{StaticGraph, TemporalGraph};
use crate::maxmin::happy_assignment_exists;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) footprint with one or two activity times per edge drawn
/// uniformly from the nonempty subsets of `[1, tau]` of size at most 2.
pub fn random_temporal_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: f64,
    tau: u32,
) -> TemporalGraph {
    let mut te = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                for t in sample_time_set(rng, tau, 2) {
                    te.push((u, v, t));
                }
            }
        }
    }
    TemporalGraph::new(n, &te).unwrap()
}

/// Uniform nonempty subset of `[1, tau]` with at most `max_size` members.
fn sample_time_set(rng: &mut ChaCha8Rng, tau: u32, max_size: u32) -> Vec<u32> {
    let max_size = max_size.min(tau);
    // count subsets of each size and pick a size weighted accordingly
    let mut counts = Vec::new();
    let mut total = 0u64;
    for k in 1..=max_size {
        let c = binomial(tau as u64, k as u64);
        counts.push(c);
        total += c;
    }
    let mut pick = rng.gen_range(0..total);
    let mut size = 1;
    for (i, &c) in counts.iter().enumerate() {
        if pick < c {
            size = i as u32 + 1;
            break;
        }
        pick -= c;
    }
    let mut times: Vec<u32> = Vec::new();
    while times.len() < size as usize {
        let t = rng.gen_range(1..=tau);
        if !times.contains(&t) {
            times.push(t);
        }
    }
    times.sort_unstable();
    times
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Uniform recursive tree on `n` vertices with 1..=max_appearances
/// distinct times per edge.
pub fn random_temporal_tree(
    rng: &mut ChaCha8Rng,
    n: usize,
    tau: u32,
    max_appearances: u32,
) -> TemporalGraph {
    let mut te = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        for t in sample_time_set(rng, tau, max_appearances) {
            te.push((parent, v, t));
        }
    }
    TemporalGraph::new(n, &te).unwrap()
}

/// Random connected static graph: a random tree plus extra edges with
/// probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> StaticGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::new(n, edges)
}

/// Random static graph without the connectivity patch-up.
pub fn random_static_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> StaticGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::new(n, edges)
}

/// Random happy temporal graph: random footprint coloured properly with
/// lifetime at most `max_degree + 1` (always colourable).
pub fn random_happy_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> TemporalGraph {
    let fp = random_static_graph(rng, n, p);
    let tau = fp.max_degree() as u32 + 1;
    happy_assignment_exists(&fp, tau.max(1)).expect("degree+1 colours always suffice")
}

/// Random set cover instance where every element is coverable.
pub fn random_setcover(
    rng: &mut ChaCha8Rng,
    universe: usize,
    family: usize,
    k: usize,
) -> crate::reductions::SetCoverInstance {
    loop {
        let sets: Vec<Vec<usize>> = (0..family)
            .map(|_| {
                (0..universe)
                    .filter(|_| rng.gen_bool(0.5))
                    .collect::<Vec<usize>>()
            })
            .collect();
        let inst = crate::reductions::SetCoverInstance { universe, sets, k };
        if inst.validate().is_ok() {
            return inst;
        }
    }
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> StaticGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    StaticGraph::new(10, edges)
}
