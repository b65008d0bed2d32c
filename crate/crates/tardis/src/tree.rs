//! Minimum TaRDiS on temporal trees (footprint is a forest), strict and
//! nonstrict, in O(|time-edges|^2).
//!
//! The algorithm roots each component, works from the deepest unmarked
//! vertices upward and maintains a witness set `S` and a marked set `M`.
//! Every inner-loop step either grows `M` or deletes one appearance of
//! the parent-grandparent edge, so it terminates. Appearance deletions
//! happen on a working copy of the time lists; the input graph is never
//! modified.

use crate::exact::{SolveError, TardisResult};
use crate::graph::{TemporalGraph, VertexId};
use crate::reach::{foremost_arrivals, Semantics};

struct Component<'a> {
    g: &'a TemporalGraph,
    verts: Vec<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    /// working time lists, indexed like `g.edges()`
    times: Vec<Vec<u32>>,
    marked: Vec<bool>,
    in_s: Vec<bool>,
}

impl<'a> Component<'a> {
    fn new(g: &'a TemporalGraph, verts: &[usize], times: &mut Vec<Vec<u32>>) -> Self {
        let n = g.n();
        let root = verts[0];
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0usize; n];
        let mut stack = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(x) = stack.pop() {
            let mut kids: Vec<usize> = g
                .incident(x)
                .iter()
                .map(|&ei| {
                    let e = &g.edges()[ei];
                    if e.u.0 == x {
                        e.v.0
                    } else {
                        e.u.0
                    }
                })
                .filter(|&y| !seen[y])
                .collect();
            kids.sort_unstable();
            for &y in &kids {
                seen[y] = true;
                parent[y] = Some(x);
                depth[y] = depth[x] + 1;
                stack.push(y);
            }
            children[x] = kids;
        }
        Component {
            g,
            verts: verts.to_vec(),
            parent,
            children,
            depth,
            times: std::mem::take(times),
            marked: vec![false; n],
            in_s: vec![false; n],
        }
    }

    fn edge_index(&self, a: usize, b: usize) -> usize {
        let (u, v) = (a.min(b), a.max(b));
        *self
            .g
            .incident(a)
            .iter()
            .find(|&&ei| {
                let e = &self.g.edges()[ei];
                (e.u.0, e.v.0) == (u, v)
            })
            .expect("tree edge")
    }

    fn lambda_min(&self, a: usize, b: usize) -> u32 {
        self.times[self.edge_index(a, b)][0]
    }

    fn lambda_max(&self, a: usize, b: usize) -> u32 {
        *self.times[self.edge_index(a, b)].last().unwrap()
    }

    fn unmarked(&self) -> Vec<usize> {
        self.verts.iter().copied().filter(|&v| !self.marked[v]).collect()
    }

    /// Central vertex if the unmarked footprint is a star (single vertex,
    /// or one center adjacent to all others, others pendant). Ties on
    /// K_{1,1} break to the lowest index.
    fn star_center(&self, unmarked: &[usize]) -> Option<usize> {
        if unmarked.len() == 1 {
            return Some(unmarked[0]);
        }
        let deg = |x: usize| {
            self.g
                .incident(x)
                .iter()
                .filter(|&&ei| {
                    let e = &self.g.edges()[ei];
                    let y = if e.u.0 == x { e.v.0 } else { e.u.0 };
                    unmarked.contains(&y)
                })
                .count()
        };
        let m = unmarked.len();
        let mut center = None;
        let mut edge_count = 0;
        for &x in unmarked {
            let d = deg(x);
            edge_count += d;
            if d == m - 1 && center.is_none() {
                center = Some(x);
            } else if d != 1 && d != m - 1 {
                return None;
            }
        }
        if edge_count != 2 * (m - 1) {
            return None; // disconnected or not a tree shape
        }
        center
    }

    /// Reachability from `p` on the working time lists.
    fn reach_from(&self, p: usize, semantics: Semantics) -> Vec<usize> {
        let raw: Vec<(usize, usize, u32)> = self
            .times
            .iter()
            .enumerate()
            .flat_map(|(ei, ts)| {
                let e = &self.g.edges()[ei];
                ts.iter().map(move |&t| (e.u.0, e.v.0, t))
            })
            .collect();
        let work = TemporalGraph::new(self.g.n(), &raw).expect("working copy is valid");
        foremost_arrivals(&work, VertexId(p), None, semantics).reachable()
    }

    fn solve(&mut self, semantics: Semantics) -> Vec<usize> {
        let s_shift: u32 = match semantics {
            Semantics::Strict => 1,
            Semantics::Nonstrict => 0,
        };
        let mut s_set: Vec<usize> = Vec::new();
        loop {
            let unmarked = self.unmarked();
            if unmarked.is_empty() {
                break;
            }
            if let Some(center) = self.star_center(&unmarked) {
                if !self.in_s[center] {
                    self.in_s[center] = true;
                    s_set.push(center);
                }
                break;
            }
            // deepest unmarked vertex, lowest index on ties
            let deepest = *unmarked
                .iter()
                .max_by_key(|&&v| (self.depth[v], usize::MAX - v))
                .unwrap();
            let p = self.parent[deepest].expect("deepest unmarked vertex below root");
            // child of p minimizing lambda_max(p, .), lowest index on ties
            let l = *self
                .children[p]
                .iter()
                .filter(|&&c| !self.marked[c])
                .min_by_key(|&&c| (self.lambda_max(p, c), c))
                .expect("p has an unmarked child");
            let g_parent = self.parent[p];
            while !self.marked[l] {
                // progress measure: every iteration either marks l (and
                // exits) or deletes one appearance of the edge (p, g)
                #[cfg(debug_assertions)]
                let appearances_before: usize = self.times.iter().map(|t| t.len()).sum();
                // with no grandparent the first branch always fires
                let (gmin, gmax) = match g_parent {
                    Some(gp) => (self.lambda_min(p, gp), self.lambda_max(p, gp)),
                    None => (u32::MAX, u32::MAX),
                };
                let lmax = self.lambda_max(l, p);
                if (lmax as u64) < gmin as u64 + s_shift as u64 {
                    if !self.in_s[p] {
                        self.in_s[p] = true;
                        s_set.push(p);
                    }
                    for v in self.reach_from(p, semantics) {
                        self.marked[v] = true;
                    }
                } else if (lmax as u64) >= gmax as u64 + s_shift as u64 {
                    self.marked[p] = false;
                    for i in 0..self.children[p].len() {
                        let c = self.children[p][i];
                        self.marked[c] = true;
                    }
                } else {
                    let gp = g_parent.expect("deletion branch requires a grandparent");
                    let ei = self.edge_index(p, gp);
                    let popped = self.times[ei].pop();
                    debug_assert!(popped.is_some() && !self.times[ei].is_empty());
                }
                #[cfg(debug_assertions)]
                {
                    let appearances_after: usize = self.times.iter().map(|t| t.len()).sum();
                    debug_assert!(
                        self.marked[l] || appearances_after < appearances_before,
                        "inner loop made no progress"
                    );
                }
            }
        }
        s_set
    }
}

/// Minimum TaRDiS when the footprint is a forest: each component is
/// solved independently, rooted at its lowest-index vertex.
pub fn min_tardis_tree(
    g: &TemporalGraph,
    semantics: Semantics,
) -> Result<TardisResult, SolveError> {
    let fp = g.footprint();
    if !fp.is_forest() {
        return Err(SolveError::NotForest);
    }
    let mut witness = Vec::new();
    for comp in fp.components() {
        if comp.len() == 1 {
            witness.push(comp[0]);
            continue;
        }
        let mut times: Vec<Vec<u32>> = g.edges().iter().map(|e| e.times.clone()).collect();
        let mut c = Component::new(g, &comp, &mut times);
        witness.extend(c.solve(semantics));
    }
    witness.sort_unstable();
    debug_assert!(crate::reach::is_tardis(g, &witness, semantics));
    Ok(TardisResult { size: witness.len(), witness, algorithm: "tree", semantics })
}
