//! Structural transformations used by the kernel and the compositions.
//!
//! Every transformation returns provenance maps from the input's vertices
//! (or edges) to the output's, so callers never rely on index arithmetic.

use super::{Graph, TerminalPair};
use crate::{Error, Result};

/// Result of subdividing every edge once.
#[derive(Debug, Clone)]
pub struct Subdivision {
    /// Original vertices keep their indices; the subdivision vertex of edge
    /// `e` is `n + e`.
    pub graph: Graph,
    /// `edge_vertex[e]` is the vertex placed on the `e`-th input edge.
    pub edge_vertex: Vec<usize>,
}

pub fn subdivide_all_edges(g: &Graph) -> Subdivision {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    let mut edge_vertex = Vec::with_capacity(g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let a = n + e;
        edges.push((u, a));
        edges.push((a, v));
        edge_vertex.push(a);
    }
    let mut graph = Graph::from_edges_unchecked(n + g.m(), edges);
    if let Some(labels) = g.labels() {
        let mut l = labels.to_vec();
        l.extend(g.edges().iter().map(|&(u, v)| format!("a({},{})", labels[u], labels[v])));
        graph.labels = Some(l);
    }
    Subdivision { graph, edge_vertex }
}

/// Result of replacing target vertices by false twins.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub graph: Graph,
    /// `copies[v]` lists the output vertices standing for input vertex `v`;
    /// a single entry for non-targets.
    pub copies: Vec<Vec<usize>>,
}

/// Replaces each target by `copies` pairwise non-adjacent vertices that
/// inherit its neighbourhood. Output vertices are laid out in input order,
/// with the copies of a target consecutive.
///
/// Targets must form an independent set.
pub fn false_twin_blowup(g: &Graph, targets: &[usize], copies: usize) -> Result<Blowup> {
    let mut is_target = vec![false; g.n()];
    for &v in targets {
        if v >= g.n() {
            return Err(Error::Graph(format!("target {v} out of range for n = {}", g.n())));
        }
        is_target[v] = true;
    }
    if copies == 0 && is_target.iter().any(|&t| t) {
        return Err(Error::Domain("copies must be positive".into()));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| is_target[u] && is_target[v]) {
        return Err(Error::AdjacentTargets(u, v));
    }

    let mut map = Vec::with_capacity(g.n());
    let mut next = 0;
    for &target in &is_target {
        let c = if target { copies } else { 1 };
        map.push((next..next + c).collect::<Vec<_>>());
        next += c;
    }
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for &a in &map[u] {
            for &b in &map[v] {
                edges.push((a, b));
            }
        }
    }
    let mut graph = Graph::from_edges_unchecked(next, edges);
    if let Some(labels) = g.labels() {
        let mut l = Vec::with_capacity(next);
        for v in 0..g.n() {
            if is_target[v] {
                l.extend((1..=copies).map(|i| format!("{}#{i}", labels[v])));
            } else {
                l.push(labels[v].clone());
            }
        }
        graph.labels = Some(l);
    }
    Ok(Blowup { graph, copies: map })
}

/// Appends `t` isolated vertices.
pub fn add_isolated(g: &Graph, t: usize) -> Graph {
    let mut out = Graph::from_edges_unchecked(g.n() + t, g.edges().to_vec());
    if let Some(labels) = g.labels() {
        let mut l = labels.to_vec();
        l.extend((1..=t).map(|i| format!("pad{i}")));
        out.labels = Some(l);
    }
    out
}

/// Series composition of terminal graphs.
#[derive(Debug, Clone)]
pub struct Chain {
    pub graph: Graph,
    /// `(s_1, t_ℓ)` in the output.
    pub terminals: TerminalPair,
    /// `vertex_maps[i][v]` is the output index of vertex `v` of input `i`.
    pub vertex_maps: Vec<Vec<usize>>,
}

/// Disjoint union of the inputs with `t_i` identified with `s_{i+1}`.
pub fn chain_identify(instances: &[(Graph, TerminalPair)]) -> Result<Chain> {
    if instances.is_empty() {
        return Err(Error::Composition("cannot chain an empty list".into()));
    }
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(instances.len());
    let mut next = 0;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for (i, (g, st)) in instances.iter().enumerate() {
        TerminalPair::new(st.s, st.t, g)?;
        let glue = (i > 0).then(|| {
            let (_, prev_st) = &instances[i - 1];
            maps[i - 1][prev_st.t]
        });
        let map: Vec<usize> = (0..g.n())
            .map(|v| match glue {
                Some(shared) if v == st.s => shared,
                _ => {
                    labels.push(format!("{}:{}", i + 1, g.label(v)));
                    next += 1;
                    next - 1
                }
            })
            .collect();
        edges.extend(g.edges().iter().map(|&(u, v)| (map[u], map[v])));
        maps.push(map);
    }
    let (first_st, last_st) = (instances[0].1, instances[instances.len() - 1].1);
    let terminals = TerminalPair {
        s: maps[0][first_st.s],
        t: maps[maps.len() - 1][last_st.t],
    };
    let mut graph = Graph::from_edges_unchecked(next, edges);
    graph.labels = Some(labels);
    Ok(Chain {
        graph,
        terminals,
        vertex_maps: maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_bipartite;

    #[test]
    fn subdivide_triangle_is_c6() {
        let s = subdivide_all_edges(&Graph::complete(3));
        assert_eq!(s.graph.n(), 6);
        assert_eq!(s.graph.m(), 6);
        assert!((0..6).all(|v| s.graph.degree(v) == 2));
        assert!(s.graph.is_connected());
        assert_eq!(s.edge_vertex, vec![3, 4, 5]);
    }

    #[test]
    fn subdivide_edge_and_empty() {
        let s = subdivide_all_edges(&Graph::path(2));
        assert_eq!(s.graph, Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap());
        let e = subdivide_all_edges(&Graph::new(3));
        assert_eq!(e.graph.n(), 3);
        assert!(e.edge_vertex.is_empty());
    }

    #[test]
    fn blowup_star_leaves() {
        let b = false_twin_blowup(&Graph::star(2), &[1, 2], 2).unwrap();
        assert_eq!(b.graph.n(), 5);
        assert_eq!(b.graph.degree(b.copies[0][0]), 4);
    }

    #[test]
    fn blowup_identity_and_path() {
        let g = Graph::complete(3);
        let b = false_twin_blowup(&g, &[], 5).unwrap();
        assert_eq!(b.graph, g);
        let p = false_twin_blowup(&Graph::path(3), &[0, 2], 3).unwrap();
        assert_eq!(p.graph.degree(p.copies[1][0]), 6);
        assert_eq!(p.graph.n(), 7);
    }

    #[test]
    fn blowup_rejects_adjacent_targets() {
        assert!(matches!(
            false_twin_blowup(&Graph::path(2), &[0, 1], 2),
            Err(Error::AdjacentTargets(0, 1))
        ));
        assert!(false_twin_blowup(&Graph::path(3), &[0], 0).is_err());
    }

    #[test]
    fn isolated_padding() {
        assert_eq!(add_isolated(&Graph::complete(3), 0), Graph::complete(3));
        let g = add_isolated(&Graph::complete(3), 2);
        assert_eq!((g.n(), g.m()), (5, 3));
        assert_eq!(add_isolated(&Graph::new(0), 4).n(), 4);
    }

    fn st_path(len: usize) -> (Graph, TerminalPair) {
        (Graph::path(len + 1), TerminalPair { s: 0, t: len })
    }

    #[test]
    fn chain_of_paths() {
        let one = chain_identify(&[st_path(2)]).unwrap();
        assert_eq!(one.graph.m(), 2);
        assert_eq!(one.terminals, TerminalPair { s: 0, t: 2 });

        let two = chain_identify(&[st_path(2), st_path(2)]).unwrap();
        assert_eq!((two.graph.n(), two.graph.m()), (5, 4));
        assert_eq!(two.vertex_maps[1][0], two.vertex_maps[0][2]);

        let three = chain_identify(&[st_path(1), st_path(1), st_path(1)]).unwrap();
        assert_eq!(three.graph.edges(), Graph::path(4).edges());
        assert_eq!(three.terminals, TerminalPair { s: 0, t: 3 });
    }

    #[test]
    fn subdivision_is_bipartite() {
        for n in 3..7 {
            let s = subdivide_all_edges(&Graph::complete(n));
            assert!(is_bipartite(&s.graph).is_bipartite());
        }
    }
}
