//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Every tolerance is exact; the
//! stated runtime budgets are asserted.

use std::time::Instant;

use tardis::exact::{min_tardis_bruteforce, min_tardis_setcover, min_tardis_special, Candidates};
use tardis::gen::{
    petersen, random_connected_graph, random_happy_graph, random_setcover, random_temporal_graph,
    random_temporal_tree, rng,
};
use tardis::graph::{locally_earliest_edges, StaticGraph, TemporalGraph};
use tardis::maxmin::{
    d3is_witness_assignment, max_d3is, maxmin_value, MaxMinAlgo, Variant,
};
use tardis::reach::{is_tardis, Semantics};
use tardis::reductions::{
    ds_to_strict_tardis, sat_to_happy_tardis, setcover_to_nonstrict, CnfFormula3B,
};
use tardis::tree::min_tardis_tree;
use tardis::treewidth::{compute_tree_decomposition, min_tardis_treewidth};

/// Minimum dominating set size by plain subset enumeration, independent
/// of the library's branch and bound.
fn oracle_gamma(h: &StaticGraph) -> usize {
    let n = h.n;
    assert!(n <= 16);
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

/// Maximum distance-3 independent set by subset enumeration.
fn oracle_d3is(h: &StaticGraph) -> usize {
    let n = h.n;
    assert!(n <= 16);
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

#[test]
fn criterion_01_setcover_oracle_equivalence() {
    let start = Instant::now();
    let mut r = rng(1001);
    for round in 0..300 {
        let n = 3 + round % 7; // 3..=9
        let tau = 1 + (round % 4) as u32;
        let g = random_temporal_graph(&mut r, n, 0.4, tau);
        for sem in [Semantics::Strict, Semantics::Nonstrict] {
            let bf = min_tardis_bruteforce(&g, sem, None).unwrap();
            let sc = min_tardis_setcover(&g, sem, Candidates::Canonical).unwrap();
            assert_eq!(bf.size, sc.size, "round {round} {sem:?}\n{}", g.serialize());
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "budget exceeded: {elapsed:?}");
    println!("criterion 1 (set-cover solver = oracle, 300 instances): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_tree_algorithm_oracle_equivalence() {
    let start = Instant::now();
    let mut r = rng(1002);
    for round in 0..500 {
        let n = 2 + round % 11; // 2..=12
        let tau = 1 + (round % 4) as u32;
        let g = random_temporal_tree(&mut r, n, tau, 3);
        for sem in [Semantics::Strict, Semantics::Nonstrict] {
            let tr = min_tardis_tree(&g, sem).unwrap();
            let bf = min_tardis_bruteforce(&g, sem, None).unwrap();
            assert_eq!(tr.size, bf.size, "round {round} {sem:?}\n{}", g.serialize());
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "budget exceeded: {elapsed:?}");
    println!("criterion 2 (tree algorithm = oracle, 500 trees): PASS in {elapsed:?}");
}

#[test]
fn criterion_03_treewidth_dp_oracle_equivalence() {
    let start = Instant::now();
    let mut r = rng(1003);
    let mut accepted = 0;
    while accepted < 200 {
        let n = 4 + accepted % 7; // 4..=10
        let tau = 1 + (accepted % 4) as u32;
        let g = random_temporal_graph(&mut r, n, 0.35, tau);
        let fp = g.footprint();
        if compute_tree_decomposition(&fp, None).width() > 3 {
            continue;
        }
        accepted += 1;
        for sem in [Semantics::Strict, Semantics::Nonstrict] {
            let dp = min_tardis_treewidth(&g, sem, None, None).unwrap();
            let bf = min_tardis_bruteforce(&g, sem, None).unwrap();
            assert_eq!(dp.size, bf.size, "{sem:?}\n{}", g.serialize());
            assert!(is_tardis(&g, &dp.witness, sem));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "budget exceeded: {elapsed:?}");
    println!("criterion 3 (treewidth DP = oracle, 200 graphs, width <= 3): PASS in {elapsed:?}");
}

#[test]
fn criterion_04_happy_semantics_collapse() {
    let start = Instant::now();
    let mut r = rng(1004);
    for round in 0..200 {
        let n = 3 + round % 7;
        let g = random_happy_graph(&mut r, n, 0.35);
        let strict = min_tardis_setcover(&g, Semantics::Strict, Candidates::Canonical).unwrap();
        let nonstrict =
            min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::Canonical).unwrap();
        assert_eq!(strict.size, nonstrict.size, "round {round}\n{}", g.serialize());
    }
    let elapsed = start.elapsed();
    println!("criterion 4 (happy: strict size = nonstrict size, 200 instances): PASS in {elapsed:?}");
}

#[test]
fn criterion_05_lee_bound_and_canonical_candidates() {
    let start = Instant::now();
    let mut r = rng(1005);
    let mut checked = 0;
    while checked < 200 {
        let n = 3 + checked % 7;
        let tau = 1 + (checked % 4) as u32;
        let g = random_temporal_graph(&mut r, n, 0.5, tau);
        if (0..g.n()).any(|v| g.incident(v).is_empty()) {
            continue; // the bound concerns graphs without isolated vertices
        }
        checked += 1;
        let min = min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::All).unwrap();
        let lee = locally_earliest_edges(&g, true).len();
        assert!(min.size <= lee, "bound violated\n{}", g.serialize());
        let canonical =
            min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::Canonical).unwrap();
        assert_eq!(canonical.size, min.size, "candidate restriction changed the optimum");
    }
    let elapsed = start.elapsed();
    println!("criterion 5 (LEE bound + canonical candidates, 200 instances): PASS in {elapsed:?}");
}

#[test]
fn criterion_06_d3is_equivalence() {
    let start = Instant::now();
    let mut r = rng(1006);
    let mut accepted = 0;
    while accepted < 100 {
        let n = 3 + accepted % 5; // 3..=7
        let h = random_connected_graph(&mut r, n, 0.3);
        if h.edges.len() > 12 {
            continue;
        }
        accepted += 1;
        let enumerated =
            maxmin_value(&h, 2, Variant::Nonstrict, MaxMinAlgo::Enumerate, None, 1).unwrap();
        let d3 = oracle_d3is(&h);
        assert_eq!(enumerated.value, d3, "graph {:?}", h.edges);
        // the shortcut agrees and its witness assignment is tight
        let (size, s) = max_d3is(&h);
        assert_eq!(size, d3);
        let witness = d3is_witness_assignment(&h, &s).unwrap();
        let oracle = min_tardis_bruteforce(&witness, Semantics::Nonstrict, None).unwrap();
        assert_eq!(oracle.size, s.len(), "witness assignment not tight");
        assert!(is_tardis(&witness, &s, Semantics::Nonstrict));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "budget exceeded: {elapsed:?}");
    println!("criterion 6 (nonstrict tau=2 maxmin = max D3IS, 100 graphs): PASS in {elapsed:?}");
}

#[test]
fn criterion_07_strict_shortcut_dominating_set() {
    let start = Instant::now();
    let mut r = rng(1007);
    let mut accepted = 0;
    while accepted < 100 {
        let n = 3 + accepted % 5; // 3..=7
        let h = random_connected_graph(&mut r, n, 0.25);
        if h.edges.len() > 9 {
            continue; // keep 3^|E| enumerable
        }
        accepted += 1;
        let gamma = oracle_gamma(&h);
        for tau in 1..=3 {
            let enumerated =
                maxmin_value(&h, tau, Variant::Strict, MaxMinAlgo::Enumerate, None, 1).unwrap();
            assert_eq!(enumerated.value, gamma, "tau {tau} graph {:?}", h.edges);
            let shortcut =
                maxmin_value(&h, tau, Variant::Strict, MaxMinAlgo::Shortcut, None, 1).unwrap();
            assert_eq!(shortcut.value, gamma);
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 7 (strict maxmin = dominating set, any tau, 100 graphs): PASS in {elapsed:?}");
}

#[test]
fn criterion_08_small_tau_linear_cases() {
    let start = Instant::now();
    let mut r = rng(1008);
    // tau = 1 nonstrict: one per component
    for round in 0..60 {
        let n = 2 + round % 8;
        let g = random_temporal_graph(&mut r, n, 0.3, 1);
        let components = g.footprint().components().len();
        let sp = min_tardis_special(&g, Semantics::Nonstrict).unwrap();
        assert_eq!(sp.size, components);
        let bf = min_tardis_bruteforce(&g, Semantics::Nonstrict, None).unwrap();
        assert_eq!(sp.size, bf.size);
    }
    // happy tau = 2 on odd paths: shortcut value matches enumeration
    for edges in [1usize, 3, 5, 7] {
        let n = edges + 1;
        let h = StaticGraph::new(n, (0..edges).map(|i| (i, i + 1)).collect());
        let shortcut = maxmin_value(&h, 2, Variant::Happy, MaxMinAlgo::Auto, None, 1).unwrap();
        let enumerated =
            maxmin_value(&h, 2, Variant::Happy, MaxMinAlgo::Enumerate, None, 1).unwrap();
        assert_eq!(shortcut.value, enumerated.value, "odd path with {edges} edges");
        // the emitted assignment puts both leaf edges at time 1
        let times: Vec<u32> = shortcut
            .witness_assignment
            .edges()
            .iter()
            .map(|e| e.times[0])
            .collect();
        assert_eq!(times.first(), Some(&1));
        assert_eq!(times.last(), Some(&1));
    }
    // even paths and cycles for completeness
    for edges in [2usize, 4, 6] {
        let h = StaticGraph::new(edges + 1, (0..edges).map(|i| (i, i + 1)).collect());
        let shortcut = maxmin_value(&h, 2, Variant::Happy, MaxMinAlgo::Auto, None, 1).unwrap();
        let enumerated =
            maxmin_value(&h, 2, Variant::Happy, MaxMinAlgo::Enumerate, None, 1).unwrap();
        assert_eq!(shortcut.value, enumerated.value, "even path with {edges} edges");
    }
    for len in [4usize, 6, 8] {
        let h = StaticGraph::new(len, (0..len).map(|i| (i, (i + 1) % len)).collect());
        let shortcut = maxmin_value(&h, 2, Variant::Happy, MaxMinAlgo::Auto, None, 1).unwrap();
        let enumerated =
            maxmin_value(&h, 2, Variant::Happy, MaxMinAlgo::Enumerate, None, 1).unwrap();
        assert_eq!(shortcut.value, enumerated.value, "cycle C{len}");
    }
    let elapsed = start.elapsed();
    println!("criterion 8 (small-lifetime linear cases): PASS in {elapsed:?}");
}

#[test]
fn criterion_09_reduction_soundness() {
    let start = Instant::now();
    // dominating set: all labeled connected graphs on up to 6 vertices
    let mut count = 0usize;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        for mask in 0u32..(1 << m) {
            let edges: Vec<(usize, usize)> = (0..m)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            let h = StaticGraph::new(n, edges);
            if h.components().len() != 1 {
                continue;
            }
            count += 1;
            let tau = 1 + (count % 3) as u32;
            let gamma = oracle_gamma(&h);
            let (g, _) = ds_to_strict_tardis(&h, gamma, tau);
            let solved = min_tardis_setcover(&g, Semantics::Strict, Candidates::All).unwrap();
            assert_eq!(solved.size, gamma, "n {n} mask {mask} tau {tau}");
        }
    }
    // plus 50 random graphs on 7 vertices
    let mut r = rng(1009);
    for round in 0..50 {
        let h = random_connected_graph(&mut r, 7, 0.35);
        let tau = 1 + (round % 3) as u32;
        let gamma = oracle_gamma(&h);
        let (g, _) = ds_to_strict_tardis(&h, gamma, tau);
        let solved = min_tardis_setcover(&g, Semantics::Strict, Candidates::All).unwrap();
        assert_eq!(solved.size, gamma);
    }
    // set cover: random instances, universe up to 5
    let mut r = rng(1010);
    for round in 0..60 {
        let universe = 2 + round % 4; // 2..=5
        let family = 2 + round % 3;
        let inst = random_setcover(&mut r, universe, family, 1);
        let min_cover = inst.min_cover_bruteforce().unwrap();
        let (g, _) = setcover_to_nonstrict(&inst).unwrap();
        let solved = min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::Canonical).unwrap();
        assert_eq!(solved.size, min_cover, "instance {:?}", inst.sets);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 9 (reduction soundness, {count} connected graphs + randoms): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_10_sat_gadget() {
    let start = Instant::now();
    let satisfiable = CnfFormula3B {
        num_vars: 3,
        clauses: vec![vec![1, 2, 3], vec![-1, -2, -3], vec![1, 2, 3]],
    };
    let unsatisfiable = CnfFormula3B {
        num_vars: 3,
        clauses: vec![vec![1], vec![-1], vec![2, 3]],
    };
    assert!(satisfiable.is_satisfiable());
    assert!(!unsatisfiable.is_satisfiable());
    let (g_sat, k_sat, _) = sat_to_happy_tardis(&satisfiable).unwrap();
    assert_eq!(g_sat.n(), 60);
    assert_eq!(k_sat, 12);
    let r_sat = min_tardis_setcover(&g_sat, Semantics::Nonstrict, Candidates::Canonical).unwrap();
    assert_eq!(r_sat.size, 12, "satisfiable formula must give min = k = 12");
    let (g_unsat, k_unsat, _) = sat_to_happy_tardis(&unsatisfiable).unwrap();
    assert_eq!(g_unsat.n(), 60);
    assert_eq!(k_unsat, 12);
    let r_unsat =
        min_tardis_setcover(&g_unsat, Semantics::Nonstrict, Candidates::Canonical).unwrap();
    assert!(r_unsat.size >= 13, "unsatisfiable formula must give min >= 13");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "budget exceeded: {elapsed:?}");
    println!(
        "criterion 10 (SAT gadget: sat -> 12, unsat -> {} >= 13): PASS in {elapsed:?}",
        r_unsat.size
    );
}

#[test]
fn criterion_11_petersen_separation() {
    let start = Instant::now();
    let h = petersen();
    let (d3, _) = max_d3is(&h);
    assert_eq!(d3, 1, "Petersen has pairwise distance at most 2");
    // find a simple tau=3 assignment whose minimum nonstrict TaRDiS is
    // at least 2, separating maxmin from D3IS at lifetime 3
    let m = h.edges.len();
    let mut found = false;
    'outer: for index in 0u64..3u64.pow(m as u32) {
        let mut idx = index;
        let te: Vec<(usize, usize, u32)> = h
            .edges
            .iter()
            .map(|&(u, v)| {
                let t = (idx % 3) as u32 + 1;
                idx /= 3;
                (u, v, t)
            })
            .collect();
        let g = TemporalGraph::new(h.n, &te).unwrap();
        let single_covers = (0..h.n).any(|v| is_tardis(&g, &[v], Semantics::Nonstrict));
        if !single_covers {
            found = true;
            break 'outer;
        }
    }
    assert!(found, "no separating assignment found on the Petersen graph");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "budget exceeded: {elapsed:?}");
    println!("criterion 11 (Petersen: min TaRDiS >= 2 > max D3IS = 1): PASS in {elapsed:?}");
}

#[test]
fn criterion_12_cli_determinism() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_tardis");
    let dir = std::env::temp_dir().join("tardis-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let tg = dir.join("path3.tg");
    std::fs::write(&tg, "p tg 4 3\n1 2 1\n2 3 1\n3 4 1\n").unwrap();
    let gr = dir.join("p4.gr");
    std::fs::write(&gr, "p tw 4 3\n1 2\n2 3\n3 4\n").unwrap();
    let invocations: Vec<Vec<String>> = vec![
        vec!["solve".into(), "--semantics".into(), "nonstrict".into(), tg.display().to_string()],
        vec![
            "solve".into(),
            "--semantics".into(),
            "strict".into(),
            "--algo".into(),
            "setcover".into(),
            "--k".into(),
            "2".into(),
            tg.display().to_string(),
        ],
        vec![
            "verify".into(),
            "--semantics".into(),
            "strict".into(),
            "--set".into(),
            "2,3".into(),
            tg.display().to_string(),
        ],
        vec![
            "maxmin".into(),
            "--variant".into(),
            "nonstrict".into(),
            "--tau".into(),
            "2".into(),
            "--threads".into(),
            "2".into(),
            gr.display().to_string(),
        ],
        vec![
            "gen".into(),
            "random".into(),
            "--n".into(),
            "8".into(),
            "--tau".into(),
            "3".into(),
            "--seed".into(),
            "7".into(),
        ],
        vec![
            "solve".into(),
            "--semantics".into(),
            "nonstrict".into(),
            "--algo".into(),
            "treewidth".into(),
            tg.display().to_string(),
        ],
        vec!["reach".into(), "--source".into(), "1".into(), tg.display().to_string()],
        vec!["classify".into(), tg.display().to_string()],
    ];
    for args in &invocations {
        let run = || {
            let out = std::process::Command::new(bin)
                .args(args)
                .output()
                .expect("binary runs");
            assert!(out.status.success(), "command failed: {args:?}");
            out.stdout
        };
        let first = run();
        let second = run();
        assert_eq!(first, second, "stdout differs across runs for {args:?}");
        assert!(!first.is_empty());
    }
    let elapsed = start.elapsed();
    println!("criterion 12 (CLI byte-identical determinism): PASS in {elapsed:?}");
}
