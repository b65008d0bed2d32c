//! Small shared utilities: a growable bitset and one exact set-cover
//! branch-and-bound engine reused by the TaRDiS and dominating-set
//! solvers.

/// Fixed-capacity bitset over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    n: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut b = BitSet::new(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    pub fn capacity(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }
}

/// Exact minimum set cover by branch and bound.
///
/// `rows[i]` is the element set covered by choosing row `i`; all of
/// `universe` must be covered. Returns the minimum cardinality and the
/// lexicographically smallest witness (as sorted row indices) among
/// first-found optima. Returns `None` if the rows cannot cover the
/// universe.
pub fn min_set_cover(rows: &[BitSet], universe: &BitSet) -> Option<(usize, Vec<usize>)> {
    let mut all = BitSet::new(universe.capacity());
    for r in rows {
        all.union_with(r);
    }
    for e in universe.iter() {
        if !all.contains(e) {
            return None;
        }
    }
    // row order: decreasing coverage, ties by index
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (usize::MAX - rows[i].len(), i));

    // per-element candidate rows
    let elements: Vec<usize> = universe.iter().collect();
    let mut coverers: Vec<Vec<usize>> = vec![Vec::new(); universe.capacity()];
    for &e in &elements {
        for &i in &order {
            if rows[i].contains(e) {
                coverers[e].push(i);
            }
        }
    }

    // greedy upper bound
    let greedy = {
        let mut picked = Vec::new();
        let mut covered = BitSet::new(universe.capacity());
        loop {
            let mut missing = false;
            for &e in &elements {
                if !covered.contains(e) {
                    missing = true;
                    break;
                }
            }
            if !missing {
                break;
            }
            let mut best = usize::MAX;
            let mut gain = 0;
            for &i in &order {
                let g = rows[i].len() - rows[i].intersection_len(&covered);
                if g > gain {
                    gain = g;
                    best = i;
                }
            }
            picked.push(best);
            covered.union_with(&rows[best]);
        }
        picked
    };

    struct Ctx<'a> {
        rows: &'a [BitSet],
        elements: &'a [usize],
        coverers: &'a [Vec<usize>],
        best_size: usize,
        best: Vec<usize>,
    }

    // lower bound: elements whose coverer sets are pairwise disjoint each
    // need a distinct row
    fn lower_bound(ctx: &Ctx, covered: &BitSet) -> usize {
        let mut blocked = vec![false; ctx.rows.len()];
        let mut count = 0;
        for &e in ctx.elements {
            if covered.contains(e) {
                continue;
            }
            if ctx.coverers[e].iter().all(|&i| !blocked[i]) {
                count += 1;
                for &i in &ctx.coverers[e] {
                    blocked[i] = true;
                }
            }
        }
        count
    }

    fn branch(ctx: &mut Ctx, covered: &BitSet, chosen: &mut Vec<usize>) {
        let uncovered: Vec<usize> = ctx
            .elements
            .iter()
            .copied()
            .filter(|&e| !covered.contains(e))
            .collect();
        if uncovered.is_empty() {
            let mut sorted = chosen.clone();
            sorted.sort_unstable();
            if chosen.len() < ctx.best_size
                || (chosen.len() == ctx.best_size && sorted < ctx.best)
            {
                ctx.best_size = chosen.len();
                ctx.best = sorted;
            }
            return;
        }
        if chosen.len() + 1 > ctx.best_size {
            return;
        }
        if chosen.len() + lower_bound(ctx, covered) > ctx.best_size {
            return;
        }
        // branch on the uncovered element with fewest live coverers
        let e = *uncovered
            .iter()
            .min_by_key(|&&e| (ctx.coverers[e].len(), e))
            .unwrap();
        let branch_rows = ctx.coverers[e].clone();
        for i in branch_rows {
            chosen.push(i);
            let mut cov2 = covered.clone();
            cov2.union_with(&ctx.rows[i]);
            branch(ctx, &cov2, chosen);
            chosen.pop();
        }
    }

    let mut ctx = Ctx {
        rows,
        elements: &elements,
        coverers: &coverers,
        best_size: greedy.len(),
        best: {
            let mut g = greedy.clone();
            g.sort_unstable();
            g
        },
    };
    let covered = BitSet::new(universe.capacity());
    let mut chosen = Vec::new();
    branch(&mut ctx, &covered, &mut chosen);
    Some((ctx.best_size, ctx.best))
}

/// Iterates size-`k` subsets of `0..n` in lexicographic order, invoking
/// `f` until it returns true; returns the first accepted subset.
pub fn first_subset_of_size(
    n: usize,
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let remaining = k - cur.len();
        for v in start..=(n - remaining) {
            cur.push(v);
            if rec(n, k, v + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if k > n {
        return None;
    }
    let mut cur = Vec::with_capacity(k);
    if rec(n, k, 0, &mut cur, f) {
        Some(cur)
    } else {
        None
    }
}
