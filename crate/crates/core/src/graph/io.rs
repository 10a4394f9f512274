//! Line-oriented graph file format.
//!
//! ```text
//! c optional comments
//! p <n> <m>          exactly once, first non-comment line
//! e <u> <v>          1-based endpoints, m times
//! t <s> <t>          optional terminal pair
//! k <value>          optional parameter
//! ```

use std::fmt::Write as _;

use super::{Graph, TerminalPair};
use crate::{Error, Result};

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub terminals: Option<TerminalPair>,
    pub k: Option<u64>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile {
            graph,
            terminals: None,
            k: None,
        }
    }

    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
        for &(u, v) in g.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
        }
        if let Some(st) = self.terminals {
            writeln!(out, "t {} {}", st.s + 1, st.t + 1).unwrap();
        }
        if let Some(k) = self.k {
            writeln!(out, "k {k}").unwrap();
        }
        out
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[u64; N]> {
    if fields.len() != N + 1 {
        return Err(err(
            line,
            format!("'{}' record expects {N} field(s), found {}", fields[0], fields.len() - 1),
        ));
    }
    let mut out = [0u64; N];
    for (slot, text) in out.iter_mut().zip(&fields[1..]) {
        *slot = text
            .parse()
            .map_err(|_| err(line, format!("not a nonnegative integer: {text:?}")))?;
    }
    Ok(out)
}

fn vertex(line: usize, one_based: u64, n: usize) -> Result<usize> {
    if one_based == 0 || one_based > n as u64 {
        return Err(err(line, format!("vertex {one_based} out of range 1..={n}")));
    }
    Ok(one_based as usize - 1)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, line)
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut terminals = None;
    let mut k = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some(&tag) = fields.first() else { continue };
        if tag == "c" {
            continue;
        }
        let Some((n, _, _)) = header else {
            if tag != "p" {
                return Err(err(line, "expected 'p <n> <m>' before any other record"));
            }
            let [n, m] = numbers::<2>(line, &fields)?;
            header = Some((n as usize, m as usize, line));
            continue;
        };
        match tag {
            "p" => return Err(err(line, "duplicate 'p' record")),
            "e" => {
                let [u, v] = numbers::<2>(line, &fields)?;
                let (u, v) = (vertex(line, u, n)?, vertex(line, v, n)?);
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            "t" => {
                if terminals.is_some() {
                    return Err(err(line, "duplicate 't' record"));
                }
                let [s, t] = numbers::<2>(line, &fields)?;
                let (s, t) = (vertex(line, s, n)?, vertex(line, t, n)?);
                if s == t {
                    return Err(err(line, "terminals must be distinct"));
                }
                terminals = Some(TerminalPair { s, t });
            }
            "k" => {
                if k.is_some() {
                    return Err(err(line, "duplicate 'k' record"));
                }
                let [value] = numbers::<1>(line, &fields)?;
                k = Some(value);
            }
            other => return Err(err(line, format!("unknown record type {other:?}"))),
        }
    }

    let Some((n, m, p_line)) = header else {
        return Err(err(text.lines().count().max(1), "missing 'p <n> <m>' record"));
    };
    if edges.len() != m {
        return Err(err(
            p_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| err(p_line, e.to_string()))?;
    Ok(GraphFile { graph, terminals, k })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let f = parse_graph("p 2 1\ne 1 2").unwrap();
        assert_eq!(f.graph, Graph::from_edges(2, [(0, 1)]).unwrap());
        assert_eq!(f.terminals, None);
        assert_eq!(f.k, None);
    }

    #[test]
    fn triangle_with_parameter() {
        let f = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\nk 2").unwrap();
        assert_eq!(f.graph.m(), 3);
        assert_eq!(f.k, Some(2));
    }

    #[test]
    fn path_with_terminals() {
        let f = parse_graph("c a path\np 3 2\ne 1 2\ne 2 3\nt 1 3\n").unwrap();
        assert_eq!(f.terminals, Some(TerminalPair { s: 0, t: 2 }));
    }

    fn line_of(text: &str) -> usize {
        match parse_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(line_of("p 2 1\ne 1 3"), 2);
        assert_eq!(line_of("p 2 1\ne 1 1"), 2);
        assert_eq!(line_of("p 2 2\ne 1 2\ne 2 1"), 3);
        assert_eq!(line_of("c x\ne 1 2"), 2);
        assert_eq!(line_of("p 2 1\ne 1 x"), 2);
        assert_eq!(line_of("p 2 1\ne 1 2\nt 1 1"), 3);
        assert_eq!(line_of("p 2 1\ne 1 2\nq 1"), 3);
        assert_eq!(line_of("p 3 2\ne 1 2"), 1);
        assert_eq!(line_of("p 2 0\np 2 0"), 2);
    }

    #[test]
    fn text_round_trip() {
        let f = parse_graph("p 4 3\ne 1 2\ne 2 3\ne 3 4\nt 1 4\nk 1\n").unwrap();
        assert_eq!(parse_graph(&f.to_text()).unwrap(), f);
    }
}
