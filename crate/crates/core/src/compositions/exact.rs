use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{common_cut_size, extend_labels};
use crate::count::{decimal, BigCount};
use crate::graph::{chain_identify, Graph, TerminalPair, TreeDecomposition};
use crate::oracles::{count_min_st_cuts, exact_treewidth};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactBranch {
    Gadget,
    /// So many inputs that solving each one by enumeration is polynomial.
    Trivial,
}

/// Bookkeeping needed to split the composed count back into the inputs'
/// counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMetadata {
    pub branch: ExactBranch,
    pub ell: u64,
    /// Twice the largest input edge count.
    pub m: u64,
    /// Common minimum cut size of the inputs.
    pub k: u64,
    /// Input `i` (0-based) contributes `q_i · 2^exponents[i]`.
    pub exponents: Vec<u64>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "decimal::opt_vec"
    )]
    pub recorded_answers: Option<Vec<BigCount>>,
}

impl ExactMetadata {
    fn gadget(ell: u64, m: u64, k: u64) -> Self {
        ExactMetadata {
            branch: ExactBranch::Gadget,
            ell,
            m,
            k,
            exponents: (0..ell).map(|i| m * i + m * (ell - 1)).collect(),
            recorded_answers: None,
        }
    }

    fn check(&self) -> Result<()> {
        match self.branch {
            ExactBranch::Trivial => match &self.recorded_answers {
                Some(a) if a.len() as u64 == self.ell => Ok(()),
                _ => Err(Error::Protocol("trivial branch without one answer per input".into())),
            },
            ExactBranch::Gadget => {
                if self.ell == 0 || *self != ExactMetadata::gadget(self.ell, self.m, self.k) {
                    return Err(Error::Protocol(format!("inconsistent composition metadata {self:?}")));
                }
                Ok(())
            }
        }
    }
}

/// Gadget vertices attached to one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetPaths {
    /// `(x, y, z)` for each path with three internal vertices.
    pub long: Vec<[usize; 3]>,
    /// Internal vertex of each path with one internal vertex.
    pub short: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ExactComposition {
    pub graph: Graph,
    pub terminals: TerminalPair,
    pub metadata: ExactMetadata,
    pub decomposition: TreeDecomposition,
    /// `max(2, max_i width_i + 1)` over the input decompositions used.
    pub width_bound: usize,
    /// Minimum cut size of the composed instance.
    pub cut_size: u64,
    pub gadgets: Vec<GadgetPaths>,
}

/// Composition from whose minimum cut count every input's count can be read
/// off.
///
/// The inputs are chained as in the sum composition, and copy `i` (1-based)
/// gets `m(ℓ−1)` extra internally disjoint `s_i`–`t_i` paths, the first
/// `m(i−1)` of length 4 and the rest of length 2. A minimum cut then picks a
/// minimum cut of one copy plus one edge on each of that copy's gadget
/// paths, so copy `i` contributes `q_i · 2^{m(i−1) + m(ℓ−1)}`.
///
/// `decompositions`, if given, supplies one tree decomposition per input;
/// otherwise each input's is computed exactly (at most 12 vertices). The
/// composed decomposition is validated against `width_bound`.
pub fn exact_compose(
    instances: &[(Graph, TerminalPair)],
    decompositions: Option<&[TreeDecomposition]>,
) -> Result<ExactComposition> {
    let k = common_cut_size(instances)?;
    let ell = instances.len() as u64;
    let m_max = instances.iter().map(|(g, _)| g.m() as u64).max().unwrap_or(0);
    let m = 2 * m_max;
    if let Some(tds) = decompositions {
        if tds.len() != instances.len() {
            return Err(Error::Composition(format!(
                "{} decompositions for {} instances",
                tds.len(),
                instances.len()
            )));
        }
    }

    if m_max < 64 && ell >= 1 << m_max {
        let answers = instances
            .iter()
            .map(|(g, st)| count_min_st_cuts(g, *st).map(|c| c.count))
            .collect::<Result<Vec<_>>>()?;
        let graph = Graph::path(2);
        return Ok(ExactComposition {
            terminals: TerminalPair { s: 0, t: 1 },
            metadata: ExactMetadata {
                branch: ExactBranch::Trivial,
                ell,
                m,
                k: k as u64,
                exponents: Vec::new(),
                recorded_answers: Some(answers),
            },
            decomposition: TreeDecomposition {
                bags: vec![vec![0, 1]],
                edges: vec![],
            },
            width_bound: 2,
            cut_size: 1,
            gadgets: Vec::new(),
            graph,
        });
    }

    let chain = chain_identify(instances)?;
    let paths = (m * (ell - 1)) as usize;
    let mut n = chain.graph.n();
    let mut edges = chain.graph.edges().to_vec();
    let mut labels = Vec::new();
    let mut gadgets = Vec::with_capacity(instances.len());
    let ends: Vec<(usize, usize)> = instances
        .iter()
        .zip(&chain.vertex_maps)
        .map(|((_, st), map)| (map[st.s], map[st.t]))
        .collect();
    for (i, &(s, t)) in ends.iter().enumerate() {
        let long_count = (m as usize) * i;
        let mut gp = GadgetPaths {
            long: Vec::with_capacity(long_count),
            short: Vec::with_capacity(paths - long_count),
        };
        for j in 1..=paths {
            if j <= long_count {
                let (x, y, z) = (n, n + 1, n + 2);
                n += 3;
                edges.extend([(s, x), (x, y), (y, z), (z, t)]);
                labels.extend(["x", "y", "z"].map(|c| format!("{c}{}.{j}", i + 1)));
                gp.long.push([x, y, z]);
            } else {
                let x = n;
                n += 1;
                edges.extend([(s, x), (x, t)]);
                labels.push(format!("x{}.{j}", i + 1));
                gp.short.push(x);
            }
        }
        gadgets.push(gp);
    }
    let graph = extend_labels(&chain.graph, Graph::from_edges(n, edges)?, labels);

    // Tree decomposition: each input's decomposition with t_i added to every
    // bag, gadget bags hung off a node containing s_i, consecutive inputs
    // linked through those nodes.
    let mut td = TreeDecomposition {
        bags: Vec::new(),
        edges: Vec::new(),
    };
    let mut width_bound = 2;
    let mut anchors = Vec::with_capacity(instances.len());
    for (i, (g, _)) in instances.iter().enumerate() {
        let local = match decompositions {
            Some(tds) => tds[i].clone(),
            None => exact_treewidth(g)?.decomposition,
        };
        width_bound = width_bound.max(local.width() + 1);
        let (s, t) = ends[i];
        let map = &chain.vertex_maps[i];
        let offset = td.bags.len();
        for bag in &local.bags {
            let mut b: Vec<usize> = bag.iter().map(|&v| map[v]).collect();
            if !b.contains(&t) {
                b.push(t);
            }
            b.sort_unstable();
            td.add_node(b);
        }
        td.edges.extend(local.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        let anchor = match (offset..td.bags.len()).find(|&node| td.bags[node].contains(&s)) {
            Some(node) => node,
            None => {
                let node = td.add_node(vec![s.min(t), s.max(t)]);
                if node > offset {
                    td.edges.push((offset, node));
                }
                node
            }
        };
        for &[x, y, z] in &gadgets[i].long {
            let a = td.add_node(sorted([s, x, t]));
            let b = td.add_node(sorted([x, y, t]));
            let c = td.add_node(sorted([y, z, t]));
            td.edges.extend([(anchor, a), (a, b), (b, c)]);
        }
        for &x in &gadgets[i].short {
            let a = td.add_node(sorted([s, x, t]));
            td.edges.push((anchor, a));
        }
        if let Some(&prev) = anchors.last() {
            td.edges.push((prev, anchor));
        }
        anchors.push(anchor);
    }
    let width = td
        .validate(&graph)
        .map_err(|v| Error::Integrity(format!("composed tree decomposition: {v}")))?;
    if width > width_bound {
        return Err(Error::Integrity(format!(
            "composed tree decomposition has width {width} > {width_bound}"
        )));
    }

    Ok(ExactComposition {
        terminals: chain.terminals,
        metadata: ExactMetadata::gadget(ell, m, k as u64),
        cut_size: k as u64 + paths as u64,
        decomposition: td,
        width_bound,
        gadgets,
        graph,
    })
}

fn sorted<const N: usize>(mut a: [usize; N]) -> Vec<usize> {
    a.sort_unstable();
    a.to_vec()
}

/// Splits a composed count into the inputs' counts, highest exponent first.
pub fn exact_extract(meta: &ExactMetadata, q: &BigCount) -> Result<Vec<BigCount>> {
    meta.check()?;
    if meta.branch == ExactBranch::Trivial {
        return Ok(meta.recorded_answers.clone().expect("checked"));
    }
    let mut rest = q.clone();
    let mut out = vec![BigCount::zero(); meta.ell as usize];
    for i in (0..meta.ell as usize).rev() {
        let e = meta.exponents[i];
        let qi = &rest >> e;
        rest -= &qi << e;
        out[i] = qi;
    }
    if !rest.is_zero() {
        return Err(Error::Integrity(format!("composed count {q} leaves residual {rest}")));
    }
    Ok(out)
}
