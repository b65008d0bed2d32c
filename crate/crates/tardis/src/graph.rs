//! Temporal graph model: parsing, classification and structural queries.
//!
//! A temporal graph is a static graph together with a map assigning each
//! edge a nonempty set of discrete activity times. Vertices are dense
//! indices `0..n`; the `.tg` wire format uses 1-based labels.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Dense vertex index. Wire labels are 1-based, internal indices 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    /// 1-based label as written in `.tg` files.
    pub fn label(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A single time-edge `(e, t)`: edge `e` active at time `t >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub t: u32,
}

/// One footprint edge with its sorted, duplicate-free list of activity times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTimes {
    pub u: VertexId,
    pub v: VertexId,
    pub times: Vec<u32>,
}

impl EdgeTimes {
    pub fn lambda_min(&self) -> u32 {
        self.times[0]
    }
    pub fn lambda_max(&self) -> u32 {
        *self.times.last().unwrap()
    }
}

/// Immutable temporal graph in normal form: per footprint edge `u < v`,
/// strictly increasing time lists, `tau` = maximum time label (0 when the
/// graph has no time-edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    edges: Vec<EdgeTimes>,
    /// incident edge indices per vertex
    adj: Vec<Vec<usize>>,
    tau: u32,
}

/// Static (footprint-level) graph on the same dense vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: self-loop {u} {u}")]
    SelfLoop { line: usize, u: usize },
    #[error("line {line}: duplicate time-edge {u} {v} {t}")]
    DuplicateTimeEdge { line: usize, u: usize, v: usize, t: u32 },
    #[error("line {line}: time {t} out of range (t >= 1 required)")]
    BadTime { line: usize, t: i64 },
    #[error("line {line}: vertex {v} out of declared range 1..={n}")]
    VertexOutOfRange { line: usize, v: i64, n: usize },
    #[error("missing `p tg <n> <m>` header before line {line}")]
    MissingHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("declared {declared} time-edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("time {0} out of range (t >= 1 required)")]
    BadTime(u32),
    #[error("vertex {v} out of range 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate time-edge ({u},{v})@{t}")]
    DuplicateTimeEdge { u: usize, v: usize, t: u32 },
}

/// Classification flags per Casteigts et al.: simple (each edge active
/// exactly once), proper (each snapshot has maximum degree one), happy
/// (both).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClass {
    pub simple: bool,
    pub proper: bool,
    pub happy: bool,
    pub max_degree: usize,
    pub component_count: usize,
}

impl TemporalGraph {
    /// Builds a temporal graph from raw time-edges. Vertex indices are
    /// 0-based here; use [`parse_temporal_graph`] for the wire format.
    pub fn new(n: usize, time_edges: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        let mut set: BTreeSet<(usize, usize, u32)> = BTreeSet::new();
        for &(u, v, t) in time_edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if t < 1 {
                return Err(GraphError::BadTime(t));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !set.insert((a, b, t)) {
                return Err(GraphError::DuplicateTimeEdge { u: a, v: b, t });
            }
        }
        let mut edges: Vec<EdgeTimes> = Vec::new();
        for (u, v, t) in set {
            match edges.last_mut() {
                Some(e) if e.u.0 == u && e.v.0 == v => e.times.push(t),
                _ => edges.push(EdgeTimes {
                    u: VertexId(u),
                    v: VertexId(v),
                    times: vec![t],
                }),
            }
        }
        let tau = edges
            .iter()
            .map(|e| e.lambda_max())
            .max()
            .unwrap_or(0);
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u.0].push(i);
            adj[e.v.0].push(i);
        }
        Ok(TemporalGraph { n, edges, adj, tau })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Lifetime: the latest time label, 0 for an edgeless graph.
    pub fn tau(&self) -> u32 {
        self.tau
    }

    pub fn edges(&self) -> &[EdgeTimes] {
        &self.edges
    }

    pub fn num_time_edges(&self) -> usize {
        self.edges.iter().map(|e| e.times.len()).sum()
    }

    /// Indices into [`edges`](Self::edges) of the edges incident to `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn time_edges(&self) -> impl Iterator<Item = TimeEdge> + '_ {
        self.edges.iter().flat_map(|e| {
            e.times.iter().map(move |&t| TimeEdge { u: e.u, v: e.v, t })
        })
    }

    /// Static graph with one edge per footprint pair.
    pub fn footprint(&self) -> StaticGraph {
        StaticGraph::new(
            self.n,
            self.edges.iter().map(|e| (e.u.0, e.v.0)).collect(),
        )
    }

    /// Edges of the snapshot at time `t` as indices into `edges`.
    pub fn snapshot_edges(&self, t: u32) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.times.binary_search(&t).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// Canonical `.tg` serialization; `parse . serialize` is the identity.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("p tg {} {}\n", self.n, self.num_time_edges()));
        for e in &self.edges {
            for &t in &e.times {
                out.push_str(&format!("{} {} {}\n", e.u.label(), e.v.label(), t));
            }
        }
        out
    }
}

impl StaticGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            assert!(e.0 != e.1 && e.1 < n, "bad edge {:?}", e);
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        StaticGraph { n, edges, adj }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Connected components, each sorted, in order of smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// BFS distances from `s`; `usize::MAX` for unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_forest(&self) -> bool {
        // acyclic iff every component has |edges| = |vertices| - 1
        self.edges.len() + self.components().len() == self.n
    }
}

/// Parses the `.tg` format: comment lines `c ...`, one header
/// `p tg <n> <m>`, then `m` lines `<u> <v> <t>` with 1-based endpoints.
pub fn parse_temporal_graph(text: &str) -> Result<TemporalGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw: Vec<(usize, usize, u32)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize, u32)> = BTreeSet::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(ParseError::DuplicateHeader { line: lineno });
            }
            if toks.len() != 4 || toks[1] != "tg" {
                return Err(ParseError::Malformed {
                    line: lineno,
                    msg: "expected `p tg <n> <m>`".into(),
                });
            }
            let n = toks[2].parse::<usize>().map_err(|_| ParseError::Malformed {
                line: lineno,
                msg: format!("bad vertex count `{}`", toks[2]),
            })?;
            let m = toks[3].parse::<usize>().map_err(|_| ParseError::Malformed {
                line: lineno,
                msg: format!("bad edge count `{}`", toks[3]),
            })?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or(ParseError::MissingHeader { line: lineno })?;
        if toks.len() != 3 {
            return Err(ParseError::Malformed {
                line: lineno,
                msg: "expected `<u> <v> <t>`".into(),
            });
        }
        let mut nums = [0i64; 3];
        for (i, tok) in toks.iter().enumerate() {
            nums[i] = tok.parse::<i64>().map_err(|_| ParseError::Malformed {
                line: lineno,
                msg: format!("bad integer `{tok}`"),
            })?;
        }
        let (u, v, t) = (nums[0], nums[1], nums[2]);
        for w in [u, v] {
            if w < 1 || w as usize > n {
                return Err(ParseError::VertexOutOfRange { line: lineno, v: w, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line: lineno, u: u as usize });
        }
        if t < 1 || t > u32::MAX as i64 {
            return Err(ParseError::BadTime { line: lineno, t });
        }
        let (a, b) = {
            let (u, v) = (u as usize - 1, v as usize - 1);
            if u < v { (u, v) } else { (v, u) }
        };
        if !seen.insert((a, b, t as u32)) {
            return Err(ParseError::DuplicateTimeEdge {
                line: lineno,
                u: a + 1,
                v: b + 1,
                t: t as u32,
            });
        }
        raw.push((a, b, t as u32));
    }
    let (n, m) = header.ok_or(ParseError::Empty)?;
    if raw.len() != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found: raw.len() });
    }
    let _ = last_line;
    Ok(TemporalGraph::new(n, &raw).expect("validated during parse"))
}

/// Computes simple/proper/happy flags, the footprint maximum degree and
/// the footprint component count.
pub fn classify(g: &TemporalGraph) -> GraphClass {
    let simple = g.edges().iter().all(|e| e.times.len() == 1);
    let mut proper = true;
    'outer: for t in 1..=g.tau() {
        let mut deg = vec![0usize; g.n()];
        for ei in g.snapshot_edges(t) {
            let e = &g.edges()[ei];
            for w in [e.u.0, e.v.0] {
                deg[w] += 1;
                if deg[w] > 1 {
                    proper = false;
                    break 'outer;
                }
            }
        }
    }
    let fp = g.footprint();
    GraphClass {
        simple,
        proper,
        happy: simple && proper,
        max_degree: fp.max_degree(),
        component_count: fp.components().len(),
    }
}

/// All time-edges satisfying the (weakly) locally earliest predicate:
/// every *other* time-edge incident to either endpoint is strictly later
/// (`weak = false`) or no earlier (`weak = true`).
pub fn locally_earliest_edges(g: &TemporalGraph, weak: bool) -> Vec<TimeEdge> {
    // earliest incident time and its multiplicity, per vertex
    let mut min_t = vec![u32::MAX; g.n()];
    let mut min_count = vec![0usize; g.n()];
    for te in g.time_edges() {
        for w in [te.u.0, te.v.0] {
            if te.t < min_t[w] {
                min_t[w] = te.t;
                min_count[w] = 1;
            } else if te.t == min_t[w] {
                min_count[w] += 1;
            }
        }
    }
    let mut out = Vec::new();
    for te in g.time_edges() {
        let ok = if weak {
            // no strictly earlier incident time-edge at either endpoint
            te.t == min_t[te.u.0] && te.t == min_t[te.v.0]
        } else {
            // the unique earliest at both endpoints: the edge itself is
            // counted once per endpoint
            te.t == min_t[te.u.0]
                && te.t == min_t[te.v.0]
                && min_count[te.u.0] == 1
                && min_count[te.v.0] == 1
        };
        if ok {
            out.push(te);
        }
    }
    out
}

/// Vertices incident to some (weakly) locally earliest edge: the
/// candidate pool for canonical TaRDiS search.
pub fn locally_earliest_endpoints(g: &TemporalGraph, weak: bool) -> Vec<usize> {
    let mut set = BTreeSet::new();
    for te in locally_earliest_edges(g, weak) {
        set.insert(te.u.0);
        set.insert(te.v.0);
    }
    set.into_iter().collect()
}
