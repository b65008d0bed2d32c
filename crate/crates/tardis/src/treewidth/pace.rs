//! PACE-style file formats: static graphs (`.gr`, header `p tw <n> <m>`)
//! and tree decompositions (`.td`, header `s td <bags> <max_bag_size> <n>`).
//! Both 1-based on the wire.

use crate::graph::{ParseError, StaticGraph};
use crate::treewidth::decomp::TreeDecomposition;

pub fn parse_gr(text: &str) -> Result<StaticGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(ParseError::DuplicateHeader { line: lineno });
            }
            if toks.len() != 4 || (toks[1] != "tw" && toks[1] != "edge") {
                return Err(ParseError::Malformed {
                    line: lineno,
                    msg: "expected `p tw <n> <m>`".into(),
                });
            }
            let n = toks[2].parse().map_err(|_| ParseError::Malformed {
                line: lineno,
                msg: "bad vertex count".into(),
            })?;
            let m = toks[3].parse().map_err(|_| ParseError::Malformed {
                line: lineno,
                msg: "bad edge count".into(),
            })?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or(ParseError::MissingHeader { line: lineno })?;
        if toks.len() != 2 {
            return Err(ParseError::Malformed {
                line: lineno,
                msg: "expected `<u> <v>`".into(),
            });
        }
        let u: i64 = toks[0].parse().map_err(|_| ParseError::Malformed {
            line: lineno,
            msg: "bad integer".into(),
        })?;
        let v: i64 = toks[1].parse().map_err(|_| ParseError::Malformed {
            line: lineno,
            msg: "bad integer".into(),
        })?;
        for w in [u, v] {
            if w < 1 || w as usize > n {
                return Err(ParseError::VertexOutOfRange { line: lineno, v: w, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line: lineno, u: u as usize });
        }
        edges.push((u as usize - 1, v as usize - 1));
    }
    let (n, m) = header.ok_or(ParseError::Empty)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(StaticGraph::new(n, edges))
}

pub fn write_gr(g: &StaticGraph) -> String {
    let mut out = format!("p tw {} {}\n", g.n, g.edges.len());
    for &(u, v) in &g.edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_td(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "s" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line: lineno });
                }
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        msg: "expected `s td <bags> <max_bag_size> <n>`".into(),
                    });
                }
                let nb: usize = toks[2].parse().map_err(|_| ParseError::Malformed {
                    line: lineno,
                    msg: "bad bag count".into(),
                })?;
                let mb: usize = toks[3].parse().map_err(|_| ParseError::Malformed {
                    line: lineno,
                    msg: "bad bag size".into(),
                })?;
                let n: usize = toks[4].parse().map_err(|_| ParseError::Malformed {
                    line: lineno,
                    msg: "bad vertex count".into(),
                })?;
                header = Some((nb, mb, n));
                bags = vec![Vec::new(); nb];
                continue;
            }
            "b" => {
                let (nb, _, n) = header.ok_or(ParseError::MissingHeader { line: lineno })?;
                if toks.len() < 2 {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        msg: "expected `b <id> <v...>`".into(),
                    });
                }
                let id: usize = toks[1].parse().map_err(|_| ParseError::Malformed {
                    line: lineno,
                    msg: "bad bag id".into(),
                })?;
                if id < 1 || id > nb {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        msg: format!("bag id {id} out of range"),
                    });
                }
                let mut bag = Vec::new();
                for tok in &toks[2..] {
                    let v: i64 = tok.parse().map_err(|_| ParseError::Malformed {
                        line: lineno,
                        msg: "bad vertex".into(),
                    })?;
                    if v < 1 || v as usize > n {
                        return Err(ParseError::VertexOutOfRange { line: lineno, v, n });
                    }
                    bag.push(v as usize - 1);
                }
                bag.sort_unstable();
                bag.dedup();
                bags[id - 1] = bag;
                continue;
            }
            _ => {
                let (nb, _, _) = header.ok_or(ParseError::MissingHeader { line: lineno })?;
                if toks.len() != 2 {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        msg: "expected `<bag> <bag>` tree edge".into(),
                    });
                }
                let a: usize = toks[0].parse().map_err(|_| ParseError::Malformed {
                    line: lineno,
                    msg: "bad bag id".into(),
                })?;
                let b: usize = toks[1].parse().map_err(|_| ParseError::Malformed {
                    line: lineno,
                    msg: "bad bag id".into(),
                })?;
                if a < 1 || a > nb || b < 1 || b > nb {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        msg: "tree edge bag id out of range".into(),
                    });
                }
                tree_edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, _, n) = header.ok_or(ParseError::Empty)?;
    Ok(TreeDecomposition { bags, tree_edges, n })
}

pub fn write_td(td: &TreeDecomposition) -> String {
    let max_bag = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags.len(), max_bag, td.n);
    for (i, bag) in td.bags.iter().enumerate() {
        let vs: Vec<String> = bag.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&format!("b {} {}\n", i + 1, vs.join(" ")).replace(" \n", "\n"));
    }
    for &(a, b) in &td.tree_edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}
