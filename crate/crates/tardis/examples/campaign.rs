//! Large randomized cross-validation campaign (not part of the test
//! suite; run manually in release mode).

use rand::Rng;
use tardis::exact::{min_tardis_bruteforce, min_tardis_setcover, Candidates, SolveError};
use tardis::gen::{random_temporal_graph, random_temporal_tree, rng};
use tardis::graph::TemporalGraph;
use tardis::reach::Semantics;
use tardis::tree::min_tardis_tree;
use tardis::treewidth::min_tardis_treewidth;

fn main() {
    let t0 = std::time::Instant::now();
    let mut bad = 0u64;
    let mut dp_runs = 0u64;
    let mut r = rng(987654321);
    // phase 1: mixed-density DP campaign
    for round in 0..4000u64 {
        let n = 3 + (round % 8) as usize; // 3..=10
        let tau = 1 + (round % 5) as u32; // 1..=5
        let p = [0.2, 0.35, 0.5, 0.7][(round % 4) as usize];
        let g = random_temporal_graph(&mut r, n, p, tau);
        for sem in [Semantics::Strict, Semantics::Nonstrict] {
            let bf = min_tardis_bruteforce(&g, sem, None).unwrap();
            let sc = min_tardis_setcover(&g, sem, Candidates::Canonical).unwrap();
            if sc.size != bf.size {
                bad += 1;
                println!("SC mismatch {sem:?}\n{}", g.serialize());
            }
            match min_tardis_treewidth(&g, sem, None, Some(3_000_000)) {
                Ok(dp) => {
                    dp_runs += 1;
                    if dp.size != bf.size {
                        bad += 1;
                        println!("DP mismatch {sem:?} dp={} bf={}\n{}", dp.size, bf.size, g.serialize());
                    }
                }
                Err(SolveError::StateBudget { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    println!("phase1 done bad={bad} dp_runs={dp_runs} elapsed={:?}", t0.elapsed());
    // phase 2: trees with heavy multi-appearances, deeper
    let t1 = std::time::Instant::now();
    for round in 0..4000u64 {
        let n = 2 + (round % 13) as usize; // 2..=14
        let tau = 1 + (round % 5) as u32;
        let g = random_temporal_tree(&mut r, n, tau, 3);
        for sem in [Semantics::Strict, Semantics::Nonstrict] {
            let bf = min_tardis_bruteforce(&g, sem, None).unwrap();
            let tr = min_tardis_tree(&g, sem).unwrap();
            if tr.size != bf.size {
                bad += 1;
                println!("TREE mismatch {sem:?} tree={} bf={}\n{}", tr.size, bf.size, g.serialize());
            }
        }
    }
    println!("phase2 done bad={bad} elapsed={:?}", t1.elapsed());
    // phase 3: exhaustive connected graphs n<=5, a few assignments each,
    // DP + setcover vs oracle
    let t2 = std::time::Instant::now();
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            if edges.is_empty() {
                continue;
            }
            let h = tardis::graph::StaticGraph::new(n, edges.clone());
            if h.components().len() != 1 {
                continue;
            }
            for _ in 0..3 {
                let te: Vec<(usize, usize, u32)> = edges
                    .iter()
                    .map(|&(u, v)| (u, v, r.gen_range(1..=3u32)))
                    .collect();
                let g = TemporalGraph::new(n, &te).unwrap();
                for sem in [Semantics::Strict, Semantics::Nonstrict] {
                    let bf = min_tardis_bruteforce(&g, sem, None).unwrap();
                    let dp = min_tardis_treewidth(&g, sem, None, None).unwrap();
                    let sc = min_tardis_setcover(&g, sem, Candidates::Canonical).unwrap();
                    if dp.size != bf.size || sc.size != bf.size {
                        bad += 1;
                        println!("EXH mismatch {sem:?}\n{}", g.serialize());
                    }
                }
            }
        }
    }
    println!("phase3 done bad={bad} elapsed={:?}", t2.elapsed());
    // phase 4: exhaustive check that nonstrict maxmin at lifetime 2
    // equals the maximum distance-3 independent set on every labeled
    // connected graph with at most 5 vertices
    let t3 = std::time::Instant::now();
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            let h = tardis::graph::StaticGraph::new(n, edges);
            if h.components().len() != 1 {
                continue;
            }
            let enumerated = tardis::maxmin::maxmin_value(
                &h,
                2,
                tardis::maxmin::Variant::Nonstrict,
                tardis::maxmin::MaxMinAlgo::Enumerate,
                None,
                1,
            )
            .unwrap();
            let (d3, _) = tardis::maxmin::max_d3is(&h);
            if enumerated.value != d3 {
                bad += 1;
                println!("MAXMIN mismatch n={n} mask={mask}: enum={} d3is={d3}", enumerated.value);
            }
        }
    }
    println!("phase4 done bad={bad} elapsed={:?}", t3.elapsed());
    assert_eq!(bad, 0, "campaign found mismatches");
    println!("campaign clean: all phases agree with the oracle");
}
