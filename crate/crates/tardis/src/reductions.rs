//! Constructive instance generators from hardness reductions, used as
//! correctness test beds: Dominating Set to strict TaRDiS, Set Cover to
//! nonstrict and happy TaRDiS, and 3-bounded 3-SAT to happy TaRDiS with
//! lifetime 3.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{StaticGraph, TemporalGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("set {set} contains element {element} outside the universe 0..{n}")]
    ElementOutsideUniverse { set: usize, element: usize, n: usize },
    #[error("set cover family is empty")]
    EmptyFamily,
    #[error("universe element {0} appears in no set")]
    UncoverableElement(usize),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
}

/// Set Cover instance: universe `0..n`, family of subsets, target `k`.
#[derive(Debug, Clone, Serialize)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn validate(&self) -> Result<(), ReductionError> {
        if self.sets.is_empty() {
            return Err(ReductionError::EmptyFamily);
        }
        for (i, s) in self.sets.iter().enumerate() {
            for &x in s {
                if x >= self.universe {
                    return Err(ReductionError::ElementOutsideUniverse {
                        set: i,
                        element: x,
                        n: self.universe,
                    });
                }
            }
        }
        for x in 0..self.universe {
            if !self.sets.iter().any(|s| s.contains(&x)) {
                return Err(ReductionError::UncoverableElement(x));
            }
        }
        Ok(())
    }

    /// Brute-force minimum cover size; `None` if infeasible.
    pub fn min_cover_bruteforce(&self) -> Option<usize> {
        self.validate().ok()?;
        let m = self.sets.len();
        let masks: Vec<u64> = self
            .sets
            .iter()
            .map(|s| s.iter().fold(0u64, |acc, &x| acc | 1 << x))
            .collect();
        let full = if self.universe == 0 { 0 } else { (1u64 << self.universe) - 1 };
        for k in 0..=m {
            let hit = crate::util::first_subset_of_size(m, k, &mut |idx| {
                idx.iter().fold(0u64, |acc, &i| acc | masks[i]) == full
            });
            if hit.is_some() {
                return Some(k);
            }
        }
        None
    }
}

/// Dominating Set to strict TaRDiS with lifetime `tau`: every original
/// edge at time 1 and a pendant path of `tau - 1` edges with ascending
/// times hung off vertex 0. The parameter `k` carries over unchanged.
pub fn ds_to_strict_tardis(g: &StaticGraph, k: usize, tau: u32) -> (TemporalGraph, usize) {
    assert!(tau >= 1);
    assert!(g.n >= 1);
    let mut time_edges: Vec<(usize, usize, u32)> =
        g.edges.iter().map(|&(u, v)| (u, v, 1)).collect();
    let mut attach = 0usize;
    for (i, t) in (2..=tau).enumerate() {
        let fresh = g.n + i;
        time_edges.push((attach, fresh, t));
        attach = fresh;
    }
    let n = g.n + (tau as usize - 1);
    (TemporalGraph::new(n, &time_edges).unwrap(), k)
}

/// Vertex layout shared by the two Set Cover constructions.
pub struct SetCoverLayout {
    pub element: Vec<usize>,          // x_i
    pub set: Vec<usize>,              // s_j
    pub connector: Vec<Vec<usize>>,   // a_i^j, indexed [j][position]
    pub connector_pairs: Vec<(usize, usize)>, // (i, j) per connector vertex id offset
    pub n: usize,
}

fn layout(inst: &SetCoverInstance) -> SetCoverLayout {
    let n_u = inst.universe;
    let m = inst.sets.len();
    let element: Vec<usize> = (0..n_u).collect();
    let set: Vec<usize> = (n_u..n_u + m).collect();
    let mut connector = vec![Vec::new(); m];
    let mut connector_pairs = Vec::new();
    let mut next = n_u + m;
    for (j, s) in inst.sets.iter().enumerate() {
        let mut sorted = s.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for &i in &sorted {
            connector[j].push(next);
            connector_pairs.push((i, j));
            next += 1;
        }
    }
    SetCoverLayout { element, set, connector, connector_pairs, n: next }
}

/// Set Cover to nonstrict TaRDiS with lifetime 2: each set vertex heads
/// a time-1 path through its connectors, each element heads a time-2
/// path through its connectors, and consecutive set vertices are chained
/// at time 2. Footprint maximum degree is 4.
pub fn setcover_to_nonstrict(
    inst: &SetCoverInstance,
) -> Result<(TemporalGraph, usize), ReductionError> {
    inst.validate()?;
    let lay = layout(inst);
    let mut te: Vec<(usize, usize, u32)> = Vec::new();
    // time-1 path from s_j through a_i^j, elements ascending
    for (j, chain) in lay.connector.iter().enumerate() {
        let mut prev = lay.set[j];
        for &a in chain {
            te.push((prev, a, 1));
            prev = a;
        }
    }
    // time-2 path from x_i through its connectors, sets ascending
    for i in 0..inst.universe {
        let mut prev = lay.element[i];
        for (off, &(ci, _cj)) in lay.connector_pairs.iter().enumerate() {
            if ci == i {
                let a = inst.universe + inst.sets.len() + off;
                te.push((prev, a, 2));
                prev = a;
            }
        }
    }
    // the set chain at time 2
    for j in 0..inst.sets.len().saturating_sub(1) {
        te.push((lay.set[j], lay.set[j + 1], 2));
    }
    Ok((TemporalGraph::new(lay.n, &te).unwrap(), inst.k))
}

/// Happy variant of the Set Cover construction: every snapshot component
/// of the lifetime-2 graph becomes a clique, and all former time-1
/// clique edges are serialized before all former time-2 clique edges,
/// one edge per snapshot.
pub fn setcover_to_happy(
    inst: &SetCoverInstance,
) -> Result<(TemporalGraph, usize), ReductionError> {
    inst.validate()?;
    let lay = layout(inst);
    let m = inst.sets.len();
    let clique = |verts: &[usize]| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                out.push((a.min(b), a.max(b)));
            }
        }
        out
    };
    let mut te: Vec<(usize, usize, u32)> = Vec::new();
    let mut t = 1u32;
    // former time-1 components: {s_j} with its connectors
    for j in 0..m {
        let mut verts = vec![lay.set[j]];
        verts.extend(&lay.connector[j]);
        for (u, v) in clique(&verts) {
            te.push((u, v, t));
            t += 1;
        }
    }
    // former time-2 components: {x_i} with its connectors, then the set chain
    for i in 0..inst.universe {
        let mut verts = vec![lay.element[i]];
        for (off, &(ci, _)) in lay.connector_pairs.iter().enumerate() {
            if ci == i {
                verts.push(inst.universe + m + off);
            }
        }
        for (u, v) in clique(&verts) {
            te.push((u, v, t));
            t += 1;
        }
    }
    if m >= 2 {
        for (u, v) in clique(&lay.set) {
            te.push((u, v, t));
            t += 1;
        }
    }
    Ok((TemporalGraph::new(lay.n, &te).unwrap(), inst.k))
}

/// 3-bounded CNF: clauses of two or three distinct literals over
/// variables `1..=num_vars`; literal `+v` positive, `-v` negative. Each
/// variable occurs at most three times, each literal at most twice.
#[derive(Debug, Clone, Serialize)]
pub struct CnfFormula3B {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula3B {
    pub fn validate(&self) -> Result<(), ReductionError> {
        let bad = |msg: String| Err(ReductionError::InvalidFormula(msg));
        let mut pos = vec![0usize; self.num_vars + 1];
        let mut neg = vec![0usize; self.num_vars + 1];
        for (ci, clause) in self.clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 3 {
                return bad(format!("clause {ci} has {} literals", clause.len()));
            }
            let mut vars: Vec<usize> = clause.iter().map(|l| l.unsigned_abs() as usize).collect();
            vars.sort_unstable();
            let len_before = vars.len();
            vars.dedup();
            if vars.len() != len_before {
                return bad(format!("clause {ci} repeats a variable"));
            }
            for &l in clause {
                let v = l.unsigned_abs() as usize;
                if v == 0 || v > self.num_vars {
                    return bad(format!("literal {l} out of range"));
                }
                if l > 0 {
                    pos[v] += 1;
                } else {
                    neg[v] += 1;
                }
            }
        }
        for v in 1..=self.num_vars {
            if pos[v] > 2 || neg[v] > 2 {
                return bad(format!("a literal of variable {v} appears more than twice"));
            }
            if pos[v] + neg[v] > 3 {
                return bad(format!("variable {v} occurs {} times", pos[v] + neg[v]));
            }
        }
        Ok(())
    }

    pub fn is_satisfiable(&self) -> bool {
        let n = self.num_vars;
        'assignment: for bits in 0u64..(1 << n) {
            for clause in &self.clauses {
                let sat = clause.iter().any(|&l| {
                    let v = l.unsigned_abs() as usize - 1;
                    (bits >> v) & 1 == if l > 0 { 1 } else { 0 }
                });
                if !sat {
                    continue 'assignment;
                }
            }
            return true;
        }
        false
    }
}

/// Vertex bookkeeping for the SAT gadget, exposed for structural tests.
pub struct SatGadgetInfo {
    pub n_vars: usize,
    pub n_clauses: usize,
    pub k: usize,
    pub vertex_count: usize,
}

/// 3-bounded 3-SAT to happy TaRDiS with lifetime 3 and `k = 2m + 2n`.
///
/// Every 1- or 2-clause is first padded with the always-false bottom
/// literal. Each variable gets an eight-vertex cycle gadget, each clause
/// a six-vertex hexagon, and each literal occurrence a pendant pair;
/// positive occurrences wire to the corresponding T vertex and negative
/// ones to the F vertex, while bottom occurrences stay unwired.
pub fn sat_to_happy_tardis(
    phi: &CnfFormula3B,
) -> Result<(TemporalGraph, usize, SatGadgetInfo), ReductionError> {
    phi.validate()?;
    let n = phi.num_vars;
    let m = phi.clauses.len();
    // pad to exactly three literal slots with the bottom literal (encoded 0)
    let padded: Vec<Vec<i32>> = phi
        .clauses
        .iter()
        .map(|c| {
            let mut c2 = c.clone();
            while c2.len() < 3 {
                c2.push(0);
            }
            c2
        })
        .collect();

    let mut next = 0usize;
    let mut fresh = || {
        let v = next;
        next += 1;
        v
    };
    // variable gadgets: T1 T2 F1 F2 v1 v2 a b
    let mut t1 = vec![0; n + 1];
    let mut t2 = vec![0; n + 1];
    let mut f1 = vec![0; n + 1];
    let mut f2 = vec![0; n + 1];
    let mut vv1 = vec![0; n + 1];
    let mut vv2 = vec![0; n + 1];
    let mut aa = vec![0; n + 1];
    let mut bb = vec![0; n + 1];
    for v in 1..=n {
        t1[v] = fresh();
        t2[v] = fresh();
        f1[v] = fresh();
        f2[v] = fresh();
        vv1[v] = fresh();
        vv2[v] = fresh();
        aa[v] = fresh();
        bb[v] = fresh();
    }
    let mut e1: Vec<(usize, usize)> = Vec::new();
    let mut e2: Vec<(usize, usize)> = Vec::new();
    let mut e3: Vec<(usize, usize)> = Vec::new();
    for v in 1..=n {
        e1.push((t1[v], t2[v]));
        e1.push((f1[v], f2[v]));
        e1.push((vv1[v], vv2[v]));
        e2.push((aa[v], vv1[v]));
        e2.push((bb[v], vv2[v]));
        e3.push((aa[v], t1[v]));
        e3.push((bb[v], f1[v]));
        // the eighth cycle edge closing T2 - F2
        e3.push((t2[v], f2[v]));
    }
    // literal vertices per occurrence, in clause-literal order
    let mut occurrence_count: std::collections::HashMap<i32, usize> =
        std::collections::HashMap::new();
    let mut clause_literal_vertices: Vec<Vec<usize>> = Vec::with_capacity(m);
    for clause in &padded {
        let mut lits = Vec::with_capacity(3);
        for &l in clause {
            let occ = occurrence_count.entry(l).or_insert(0);
            *occ += 1;
            let a = *occ; // appearance index, 1-based
            let lv = fresh(); // l_i^a
            let lbar = fresh(); // paired vertex
            e3.push((lv, lbar));
            if l > 0 {
                let v = l as usize;
                if a > 2 {
                    return Err(ReductionError::InvalidFormula(format!(
                        "literal {l} appears more than twice"
                    )));
                }
                let target = if a == 1 { t1[v] } else { t2[v] };
                e2.push((lbar, target));
            } else if l < 0 {
                let v = (-l) as usize;
                if a > 2 {
                    return Err(ReductionError::InvalidFormula(format!(
                        "literal {l} appears more than twice"
                    )));
                }
                let target = if a == 1 { f1[v] } else { f2[v] };
                e2.push((lbar, target));
            }
            // bottom literals keep their pendant pair unwired
            lits.push(lv);
        }
        clause_literal_vertices.push(lits);
    }
    // clause hexagons
    for lits in &clause_literal_vertices {
        let q: Vec<usize> = (0..6).map(|_| fresh()).collect();
        e3.push((q[0], q[1]));
        e3.push((q[2], q[3]));
        e3.push((q[4], q[5]));
        e1.push((q[1], q[2]));
        e1.push((q[3], q[4]));
        e1.push((q[5], q[0]));
        e2.push((q[0], lits[0]));
        e2.push((q[2], lits[1]));
        e2.push((q[4], lits[2]));
    }
    let mut te: Vec<(usize, usize, u32)> = Vec::new();
    for (u, v) in e1 {
        te.push((u, v, 1));
    }
    for (u, v) in e2 {
        te.push((u, v, 2));
    }
    for (u, v) in e3 {
        te.push((u, v, 3));
    }
    let g = TemporalGraph::new(next, &te).unwrap();
    let k = 2 * m + 2 * n;
    let info = SatGadgetInfo { n_vars: n, n_clauses: m, k, vertex_count: next };
    Ok((g, k, info))
}

/// JSON sidecar describing a generated instance and, when brute-forceable,
/// the expected answer.
#[derive(Debug, Serialize)]
pub struct Sidecar {
    pub source: serde_json::Value,
    pub reduction: &'static str,
    pub k: usize,
    pub expected_yes: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{min_tardis_setcover, Candidates};
    use crate::graph::classify;
    use crate::maxmin::min_dominating_set;
    use crate::reach::{closure, Semantics};

    #[test]
    fn ds_reduction_tau1_no_path() {
        let g = StaticGraph::new(3, vec![(0, 1), (1, 2)]);
        let (tg, k) = ds_to_strict_tardis(&g, 1, 1);
        assert_eq!(k, 1);
        assert_eq!(tg.n(), 3);
        assert!(tg.time_edges().all(|te| te.t == 1));
    }

    #[test]
    fn ds_reduction_star() {
        let star = StaticGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]);
        let (tg, _) = ds_to_strict_tardis(&star, 1, 3);
        assert_eq!(tg.n(), 6);
        assert_eq!(tg.tau(), 3);
        let r = min_tardis_setcover(&tg, Semantics::Strict, Candidates::All).unwrap();
        assert_eq!(r.size, min_dominating_set(&star).0);
        assert_eq!(r.size, 1);
    }

    #[test]
    fn ds_reduction_c5() {
        let c5 = StaticGraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let (tg, _) = ds_to_strict_tardis(&c5, 1, 2);
        let r = min_tardis_setcover(&tg, Semantics::Strict, Candidates::All).unwrap();
        assert_eq!(r.size, 2); // gamma(C5) = 2 > k = 1: a no-instance
    }

    #[test]
    fn setcover_reduction_yes_and_no() {
        let yes = SetCoverInstance { universe: 2, sets: vec![vec![0, 1]], k: 1 };
        let (g, k) = setcover_to_nonstrict(&yes).unwrap();
        let r = min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::Canonical).unwrap();
        assert!(r.size <= k);

        let no = SetCoverInstance { universe: 2, sets: vec![vec![0], vec![1]], k: 1 };
        let (g, k) = setcover_to_nonstrict(&no).unwrap();
        let r = min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::Canonical).unwrap();
        assert!(r.size > k);
    }

    #[test]
    fn setcover_reduction_degree_bound() {
        let inst = SetCoverInstance {
            universe: 4,
            sets: vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]],
            k: 2,
        };
        let (g, _) = setcover_to_nonstrict(&inst).unwrap();
        assert!(g.footprint().max_degree() <= 4);
        // s_j reaches x_i iff x_i in s_j
        let cl = closure(&g, Semantics::Nonstrict);
        for (j, s) in inst.sets.iter().enumerate() {
            for i in 0..inst.universe {
                assert_eq!(cl.reaches(inst.universe + j, i), s.contains(&i), "s{j} x{i}");
            }
        }
    }

    #[test]
    fn setcover_rejects_bad_instances() {
        let bad = SetCoverInstance { universe: 2, sets: vec![vec![5]], k: 1 };
        assert!(matches!(
            setcover_to_nonstrict(&bad),
            Err(ReductionError::ElementOutsideUniverse { .. })
        ));
        let empty = SetCoverInstance { universe: 1, sets: vec![], k: 0 };
        assert!(matches!(setcover_to_happy(&empty), Err(ReductionError::EmptyFamily)));
    }

    #[test]
    fn happy_setcover_is_happy_and_equireachable() {
        let inst = SetCoverInstance {
            universe: 3,
            sets: vec![vec![0, 1], vec![1, 2], vec![2]],
            k: 2,
        };
        let (g, _) = setcover_to_nonstrict(&inst).unwrap();
        let (gh, _) = setcover_to_happy(&inst).unwrap();
        assert!(classify(&gh).happy);
        assert_eq!(g.n(), gh.n());
        let c1 = closure(&g, Semantics::Nonstrict);
        let c2 = closure(&gh, Semantics::Nonstrict);
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(c1.reaches(u, v), c2.reaches(u, v), "({u},{v})");
            }
        }
    }

    #[test]
    fn happy_setcover_answers_match_nonstrict() {
        for inst in [
            SetCoverInstance { universe: 2, sets: vec![vec![0, 1]], k: 1 },
            SetCoverInstance { universe: 2, sets: vec![vec![0], vec![1]], k: 1 },
            SetCoverInstance { universe: 3, sets: vec![vec![0, 1], vec![1, 2]], k: 2 },
        ] {
            let (g, k) = setcover_to_nonstrict(&inst).unwrap();
            let (gh, _) = setcover_to_happy(&inst).unwrap();
            let a = min_tardis_setcover(&g, Semantics::Nonstrict, Candidates::Canonical)
                .unwrap()
                .size;
            let b = min_tardis_setcover(&gh, Semantics::Nonstrict, Candidates::Canonical)
                .unwrap()
                .size;
            assert_eq!(a <= k, b <= k);
        }
    }

    #[test]
    fn cnf_validation() {
        let ok = CnfFormula3B {
            num_vars: 3,
            clauses: vec![vec![1, 2, 3], vec![-1, -2, -3], vec![1, 2, 3]],
        };
        assert!(ok.validate().is_ok());
        let too_many = CnfFormula3B {
            num_vars: 1,
            clauses: vec![vec![1], vec![1], vec![1]],
        };
        assert!(too_many.validate().is_err());
        let repeated_var = CnfFormula3B { num_vars: 2, clauses: vec![vec![1, -1, 2]] };
        assert!(repeated_var.validate().is_err());
    }

    #[test]
    fn sat_gadget_structure() {
        let phi = CnfFormula3B {
            num_vars: 3,
            clauses: vec![vec![1, 2, 3], vec![-1, -2, -3], vec![1, 2, 3]],
        };
        let (g, k, info) = sat_to_happy_tardis(&phi).unwrap();
        assert_eq!(k, 12);
        assert_eq!(info.vertex_count, 8 * 3 + 6 * 3 + 6 * 3);
        assert_eq!(g.n(), 60);
        assert_eq!(g.tau(), 3);
        assert!(classify(&g).happy, "each snapshot must be a matching");
    }

    #[test]
    fn sat_gadget_happy_with_bottom_padding() {
        let phi = CnfFormula3B { num_vars: 1, clauses: vec![vec![1], vec![-1]] };
        let (g, k, _) = sat_to_happy_tardis(&phi).unwrap();
        assert!(classify(&g).happy);
        assert_eq!(g.tau(), 3);
        assert_eq!(k, 2 * 2 + 2 * 1);
    }
}
