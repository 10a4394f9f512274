use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::extend_labels;
use crate::count::BigCount;
use crate::graph::{false_twin_blowup, subdivide_all_edges, Graph, TerminalPair};
use crate::oracles::{is_nice_oct_instance, min_cut_size};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinCutOctBranch {
    Normal,
    /// `s` and `t` lie in different components; the only minimum cut is empty.
    Separated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinCutOctContext {
    pub branch: MinCutOctBranch,
}

/// Where each part of the input ended up in the odd cycle transversal
/// instance.
#[derive(Debug, Clone)]
pub struct MinCutOctLayout {
    /// Input vertices that were kept (the component of `s`).
    pub kept: Vec<usize>,
    /// `copies[i]` are the twins of `kept[i]`.
    pub copies: Vec<Vec<usize>>,
    /// `edge_vertex[e]` subdivides edge `e` of the kept component.
    pub edge_vertex: Vec<usize>,
    /// Kept-component edges, in the order used by `edge_vertex`, in input
    /// indices.
    pub edges: Vec<(usize, usize)>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct MinCutToOct {
    pub graph: Graph,
    pub k: u64,
    pub context: MinCutOctContext,
    pub layout: Option<MinCutOctLayout>,
}

/// Transformation from counting minimum `(s,t)` cuts to counting odd cycle
/// transversals of size at most `k`, with `k` the minimum cut size.
///
/// Every edge is subdivided, every original vertex becomes `k + 1` false
/// twins, and `k + 1` disjoint edges `x_j y_j` are added with each `x_j`
/// joined to all twins of `s` and each `y_j` to all twins of `t`. An odd
/// cycle must then run from a copy of `s` to a copy of `t` through the
/// subdivided graph, so transversals within budget are exactly minimum cuts.
pub fn ppt_mincut_to_oct(g: &Graph, st: TerminalPair) -> Result<MinCutToOct> {
    TerminalPair::new(st.s, st.t, g)?;
    let mut kept = g.component_of(st.s);
    if !kept.contains(&st.t) {
        return Ok(MinCutToOct {
            graph: Graph::new(1),
            k: 0,
            context: MinCutOctContext {
                branch: MinCutOctBranch::Separated,
            },
            layout: None,
        });
    }
    kept.sort_unstable();
    let (h, map) = g.induced_subgraph(&kept);
    let (s, t) = (map[st.s].unwrap(), map[st.t].unwrap());
    let k = min_cut_size(&h, TerminalPair { s, t });

    let sub = subdivide_all_edges(&h);
    let originals: Vec<usize> = (0..h.n()).collect();
    let blow = false_twin_blowup(&sub.graph, &originals, k + 1)?;
    let base = blow.graph.n();
    let x: Vec<usize> = (0..=k).map(|j| base + 2 * j).collect();
    let y: Vec<usize> = (0..=k).map(|j| base + 2 * j + 1).collect();
    let mut edges = blow.graph.edges().to_vec();
    for j in 0..=k {
        edges.push((x[j], y[j]));
        edges.extend(blow.copies[s].iter().map(|&c| (c, x[j])));
        edges.extend(blow.copies[t].iter().map(|&c| (c, y[j])));
    }
    let graph = Graph::from_edges(base + 2 * (k + 1), edges)?;
    let graph = extend_labels(
        &blow.graph,
        graph,
        (1..=k + 1).flat_map(|j| [format!("x{j}"), format!("y{j}")]),
    );
    let layout = MinCutOctLayout {
        copies: (0..h.n()).map(|v| blow.copies[v].clone()).collect(),
        edge_vertex: sub.edge_vertex.iter().map(|&a| blow.copies[a][0]).collect(),
        edges: h.edges().iter().map(|&(u, v)| (kept[u], kept[v])).collect(),
        kept,
        x,
        y,
    };
    Ok(MinCutToOct {
        graph,
        k: k as u64,
        context: MinCutOctContext {
            branch: MinCutOctBranch::Normal,
        },
        layout: Some(layout),
    })
}

pub fn mincut_oct_lift(ctx: &MinCutOctContext, oct_count: &BigCount) -> BigCount {
    match ctx.branch {
        MinCutOctBranch::Normal => oct_count.clone(),
        MinCutOctBranch::Separated => 1u32.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctVcContext {
    pub n: u64,
    pub k: u64,
}

#[derive(Debug, Clone)]
pub struct OctToVc {
    pub graph: Graph,
    pub k: u64,
    pub context: OctVcContext,
}

/// Transformation from counting odd cycle transversals on nice instances to
/// counting vertex covers: two copies of `G` joined by the perfect matching
/// `v₁v₂`, budget `n + k`. Each transversal yields exactly two covers.
///
/// With `check_nice` the niceness precondition is verified by brute force.
pub fn ppt_oct_to_vc(g: &Graph, k: u64, check_nice: bool) -> Result<OctToVc> {
    if check_nice && !is_nice_oct_instance(g, k as usize)? {
        return Err(Error::Precondition(
            "some odd cycle transversal within budget leaves a disconnected graph".into(),
        ));
    }
    let n = g.n();
    let mut edges = g.edges().to_vec();
    edges.extend(g.edges().iter().map(|&(u, v)| (u + n, v + n)));
    edges.extend((0..n).map(|v| (v, v + n)));
    let mut graph = Graph::from_edges(2 * n, edges)?;
    if let Some(labels) = g.labels() {
        let l = (1..=2)
            .flat_map(|c| labels.iter().map(move |x| format!("{x}/{c}")))
            .collect();
        graph = graph.with_labels(l)?;
    }
    Ok(OctToVc {
        graph,
        k: n as u64 + k,
        context: OctVcContext { n: n as u64, k },
    })
}

pub fn oct_vc_lift(_ctx: &OctVcContext, vc_count: &BigCount) -> Result<BigCount> {
    let (half, rem) = vc_count.div_rem(&BigCount::from(2u32));
    if !rem.is_zero() {
        return Err(Error::Integrity(format!("vertex cover count {vc_count} is odd")));
    }
    Ok(half)
}
