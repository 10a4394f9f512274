//! Polynomial kernel for counting vertex covers of size at most `k`, and the
//! quadratic kernel for counting minimal vertex covers.
//!
//! `reduce` runs the Buss rule, strips isolated vertices and replaces every
//! remaining vertex by `d = n2` false twins plus `t` isolated padding
//! vertices. `lift` recovers the number of covers of each size of the
//! stripped graph by a greedy base-`w_i` decomposition of the reduced count.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::count::{binomial_row, BigCount, Binomials};
use crate::graph::{add_isolated, false_twin_blowup, Graph};
use crate::{Error, Result};

/// Outcome of exhaustively applying the high-degree rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BussOutcome {
    Reduced {
        graph: Graph,
        k: u64,
        /// Original indices of the surviving vertices.
        kept: Vec<usize>,
    },
    /// No vertex cover of size at most `k` exists.
    ZeroCount,
}

/// Repeatedly deletes a vertex of degree at least `k + 1` and decrements
/// `k`. Stops with [`BussOutcome::ZeroCount`] if the budget would go
/// negative.
pub fn buss_reduce(g: &Graph, k: u64) -> BussOutcome {
    let mut alive = vec![true; g.n()];
    let mut degree: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    let mut budget = k;
    while let Some(v) = (0..g.n()).find(|&v| alive[v] && degree[v] > budget) {
        if budget == 0 {
            return BussOutcome::ZeroCount;
        }
        alive[v] = false;
        for &u in g.neighbors(v) {
            degree[u] -= 1;
        }
        budget -= 1;
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    let (graph, _) = g.induced_subgraph(&kept);
    BussOutcome::Reduced {
        graph,
        k: budget,
        kept,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stripped {
    pub graph: Graph,
    pub k: u64,
    /// Vertex count before stripping.
    pub n_before: u64,
}

/// Removes all isolated vertices; the budget is unchanged.
pub fn strip_isolated(g: &Graph, k: u64) -> Stripped {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let (graph, _) = g.induced_subgraph(&keep);
    Stripped {
        graph,
        k,
        n_before: g.n() as u64,
    }
}

/// Twin count and padding for a stripped graph with `n2` vertices and
/// budget `k2`: `(d, t, k3)`.
pub fn blowup_parameters(n2: u64, k2: u64) -> (u64, u64, u64) {
    let d = n2;
    let dk = d * k2;
    (d, d + dk + 2 * dk * dk, dk)
}

/// `n2² + n2 + n2·k2 + 2(n2·k2)²`, the vertex count of the padded blow-up.
pub fn padded_blowup_order(n2: u64, k2: u64) -> u64 {
    let (d, t, _) = blowup_parameters(n2, k2);
    d * n2 + t
}

#[derive(Debug, Clone)]
pub struct PaddedBlowup {
    pub graph: Graph,
    pub k: u64,
    pub d: u64,
    pub t: u64,
    /// `twins[v]` lists the copies of stripped-graph vertex `v`.
    pub twins: Vec<Vec<usize>>,
}

/// Blows every vertex of `g2` up into `d = n2` false twins and appends `t`
/// isolated vertices.
pub fn build_g3(g2: &Graph, k2: u64) -> Result<PaddedBlowup> {
    let (d, t, k3) = blowup_parameters(g2.n() as u64, k2);
    build_padded_blowup(g2, d as usize, t as usize).map(|(graph, twins)| PaddedBlowup {
        graph,
        k: k3,
        d,
        t,
        twins,
    })
}

/// Blow-up with explicit twin and padding counts, so the counting identity
/// can be checked at sizes where brute force is possible.
///
/// Adjacent vertices cannot be blown up together, so the vertices are
/// replaced one at a time.
pub fn build_padded_blowup(g2: &Graph, d: usize, t: usize) -> Result<(Graph, Vec<Vec<usize>>)> {
    if d == 0 {
        if g2.n() > 0 {
            return Err(Error::Domain("twin count must be positive".into()));
        }
        return Ok((Graph::new(t), Vec::new()));
    }
    let mut current = g2.clone();
    let mut twins: Vec<Vec<usize>> = (0..g2.n()).map(|v| vec![v]).collect();
    for v in 0..g2.n() {
        let step = false_twin_blowup(&current, &[twins[v][0]], d)?;
        for list in twins.iter_mut() {
            *list = list.iter().flat_map(|&x| step.copies[x].iter().copied()).collect();
        }
        current = step.graph;
    }
    Ok((add_isolated(&current, t), twins))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Normal,
    Zero,
}

/// Everything the vertex-cover lift needs from its reduce run. In the zero
/// branch all numeric fields are 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcLiftContext {
    pub branch: Branch,
    pub n1: u64,
    pub n2: u64,
    pub k2: u64,
    pub d: u64,
    pub t: u64,
    pub k3: u64,
}

impl VcLiftContext {
    pub fn zero() -> Self {
        VcLiftContext {
            branch: Branch::Zero,
            n1: 0,
            n2: 0,
            k2: 0,
            d: 0,
            t: 0,
            k3: 0,
        }
    }

    fn check(&self) -> Result<()> {
        if self.branch == Branch::Zero {
            return Ok(());
        }
        let (d, t, k3) = blowup_parameters(self.n2, self.k2);
        if (d, t, k3) != (self.d, self.t, self.k3) || self.n1 < self.n2 {
            return Err(Error::Protocol(format!("inconsistent vertex-cover lift context {self:?}")));
        }
        Ok(())
    }
}

/// Output of [`vc_reduce`].
#[derive(Debug, Clone)]
pub struct VcReduction {
    pub graph: Graph,
    pub k: u64,
    pub context: VcLiftContext,
    /// The stripped graph the blow-up was built from (normal branch only).
    pub stripped: Option<Graph>,
}

/// The constant instance with no solutions: one edge, budget 0.
pub fn zero_instance() -> (Graph, u64) {
    (Graph::path(2), 0)
}

/// Buss rule, then the `|E| ≤ k²` test, then the padded blow-up.
pub fn vc_reduce(g: &Graph, k: u64) -> Result<VcReduction> {
    let zero = || {
        let (graph, k) = zero_instance();
        VcReduction {
            graph,
            k,
            context: VcLiftContext::zero(),
            stripped: None,
        }
    };
    let BussOutcome::Reduced { graph: g1, k: k1, .. } = buss_reduce(g, k) else {
        return Ok(zero());
    };
    let s = strip_isolated(&g1, k1);
    if s.graph.m() as u64 > s.k * s.k {
        return Ok(zero());
    }
    let g3 = build_g3(&s.graph, s.k)?;
    Ok(VcReduction {
        context: VcLiftContext {
            branch: Branch::Normal,
            n1: s.n_before,
            n2: s.graph.n() as u64,
            k2: s.k,
            d: g3.d,
            t: g3.t,
            k3: g3.k,
        },
        graph: g3.graph,
        k: g3.k,
        stripped: Some(s.graph),
    })
}

/// Weights `w_i` for one parameter tuple.
///
/// `row[ℓ][p]` counts the ways to pick `p` elements from `ℓ` blocks of size
/// `d`, at most `d − 1` from each block, weighted by the binomials. Only
/// prefix sums over `p` are kept since `w_i` needs totals up to a budget.
#[derive(Debug, Clone)]
pub struct WiTable {
    d: u64,
    t: u64,
    k2: u64,
    n2: u64,
    prefix: Vec<Vec<BigCount>>,
    pad: Vec<BigCount>,
}

impl WiTable {
    pub fn new(d: u64, t: u64, k2: u64, n2: u64) -> Self {
        let budget = (d * k2) as usize;
        let cap = d.saturating_sub(1) as usize;
        let mut binom = Binomials::new();
        let choose: Vec<BigCount> = (0..=cap.min(budget)).map(|s| binom.get(d as usize, s)).collect();
        let mut row = vec![BigCount::zero(); budget + 1];
        row[0] = 1u32.into();
        let mut prefix = Vec::with_capacity(n2 as usize + 1);
        prefix.push(prefix_sums(&row));
        for _ in 0..n2 {
            let mut next = vec![BigCount::zero(); budget + 1];
            if d > 0 {
                for (p, slot) in next.iter_mut().enumerate() {
                    for (s, c) in choose.iter().enumerate().take(p.min(cap) + 1) {
                        if !row[p - s].is_zero() {
                            *slot += c * &row[p - s];
                        }
                    }
                }
            }
            row = next;
            prefix.push(prefix_sums(&row));
        }
        WiTable {
            d,
            t,
            k2,
            n2,
            prefix,
            pad: binomial_row(t, budget as u64),
        }
    }

    /// `w_i` for `i ≤ min(k2, n2)`.
    pub fn w(&self, i: u64) -> Result<BigCount> {
        if i > self.k2 || i > self.n2 {
            return Err(Error::Domain(format!(
                "w_{i} is undefined for k2 = {}, n2 = {}",
                self.k2, self.n2
            )));
        }
        let budget = (self.d * (self.k2 - i)) as usize;
        let sums = &self.prefix[(self.n2 - i) as usize];
        let mut w = BigCount::zero();
        for (a, c) in self.pad.iter().enumerate().take(budget.min(self.t as usize) + 1) {
            w += c * &sums[budget - a];
        }
        Ok(w)
    }
}

fn prefix_sums(row: &[BigCount]) -> Vec<BigCount> {
    let mut acc = BigCount::zero();
    row.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

/// Number of cover extensions in the padded blow-up charged to one cover of
/// size `i` of the stripped graph.
pub fn compute_wi(i: u64, d: u64, t: u64, k2: u64, n2: u64) -> Result<BigCount> {
    if i > k2 || i > n2 {
        return Err(Error::Domain(format!("w_{i} is undefined for k2 = {k2}, n2 = {n2}")));
    }
    WiTable::new(d, t, k2, n2).w(i)
}

/// Per-size split of a reduced count, as recovered by the lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftTrace {
    /// `sizes[i]`: covers of the stripped graph of size exactly `i`.
    pub sizes: Vec<BigCount>,
    pub total: BigCount,
}

pub fn vc_lift(ctx: &VcLiftContext, reduced_count: &BigCount) -> Result<BigCount> {
    vc_lift_trace(ctx, reduced_count).map(|t| t.total)
}

/// Lift that also reports the recovered per-size cover counts.
pub fn vc_lift_trace(ctx: &VcLiftContext, reduced_count: &BigCount) -> Result<LiftTrace> {
    ctx.check()?;
    if ctx.branch == Branch::Zero {
        return Ok(LiftTrace {
            sizes: Vec::new(),
            total: BigCount::zero(),
        });
    }
    let table = WiTable::new(ctx.d, ctx.t, ctx.k2, ctx.n2);
    let pad = binomial_row(ctx.n1 - ctx.n2, ctx.k2);
    let mut rest = reduced_count.clone();
    let mut sizes = Vec::with_capacity(ctx.k2 as usize + 1);
    let mut total = BigCount::zero();
    for i in 0..=ctx.k2 {
        if i > ctx.n2 {
            sizes.push(BigCount::zero());
            continue;
        }
        let w = table.w(i)?;
        let y = if w.is_zero() { BigCount::zero() } else { &rest / &w };
        rest -= &y * &w;
        let ways: BigCount = pad.iter().take((ctx.k2 - i) as usize + 1).sum();
        total += &y * ways;
        sizes.push(y);
    }
    if !rest.is_zero() {
        return Err(Error::Integrity(format!(
            "reduced count {reduced_count} leaves residual {rest}"
        )));
    }
    Ok(LiftTrace { sizes, total })
}

/// Reduced-instance count implied by per-size cover counts of the stripped
/// graph: `Σ_i sizes[i] · w_i`.
pub fn reduced_count_from_sizes(ctx: &VcLiftContext, sizes: &[BigCount]) -> Result<BigCount> {
    ctx.check()?;
    if ctx.branch == Branch::Zero {
        return Ok(BigCount::zero());
    }
    let table = WiTable::new(ctx.d, ctx.t, ctx.k2, ctx.n2);
    let mut x = BigCount::zero();
    for (i, y) in sizes.iter().enumerate().take(ctx.k2 as usize + 1) {
        if (i as u64) <= ctx.n2 && !y.is_zero() {
            x += y * table.w(i as u64)?;
        }
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalVcLiftContext {
    pub branch: Branch,
}

#[derive(Debug, Clone)]
pub struct MinimalVcReduction {
    pub graph: Graph,
    pub k: u64,
    pub context: MinimalVcLiftContext,
}

/// Buss rule and isolated-vertex removal; at most `2k²` vertices and `k²`
/// edges survive in the normal branch.
pub fn minimal_vc_reduce(g: &Graph, k: u64) -> MinimalVcReduction {
    let zero = || {
        let (graph, k) = zero_instance();
        MinimalVcReduction {
            graph,
            k,
            context: MinimalVcLiftContext { branch: Branch::Zero },
        }
    };
    let BussOutcome::Reduced { graph: g1, k: k1, .. } = buss_reduce(g, k) else {
        return zero();
    };
    let s = strip_isolated(&g1, k1);
    if s.graph.m() as u64 > s.k * s.k {
        return zero();
    }
    MinimalVcReduction {
        graph: s.graph,
        k: s.k,
        context: MinimalVcLiftContext { branch: Branch::Normal },
    }
}

pub fn minimal_vc_lift(ctx: &MinimalVcLiftContext, reduced_count: &BigCount) -> BigCount {
    match ctx.branch {
        Branch::Normal => reduced_count.clone(),
        Branch::Zero => BigCount::zero(),
    }
}
