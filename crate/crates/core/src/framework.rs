//! Counting compressions as `(reduce, lift)` pairs with a persisted lift
//! context, parameter transformations, and their composition.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::compositions::{
    mincut_oct_lift, oct_vc_lift, ppt_mincut_to_oct, ppt_oct_to_vc, MinCutOctContext,
    OctVcContext,
};
use crate::count::BigCount;
use crate::graph::{Graph, TerminalPair};
use crate::oracles::{
    count_min_st_cuts, count_minimal_vertex_covers, count_odd_cycle_transversals,
    count_vertex_covers,
};
use crate::vc_kernel::{
    minimal_vc_lift, minimal_vc_reduce, vc_lift, vc_reduce, MinimalVcLiftContext, VcLiftContext,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    VertexCover,
    MinimalVertexCover,
    OddCycleTransversal,
    MinStCut,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::VertexCover => "vertex-cover",
            Problem::MinimalVertexCover => "minimal-vertex-cover",
            Problem::OddCycleTransversal => "odd-cycle-transversal",
            Problem::MinStCut => "min-st-cut",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamKind {
    SolutionSize,
    MinCutSize,
    Treewidth,
    KMinusMatching,
    KMinusLp,
}

impl ParamKind {
    fn fits(self, problem: Problem) -> bool {
        use ParamKind::*;
        match problem {
            Problem::VertexCover => matches!(self, SolutionSize | KMinusMatching | KMinusLp),
            Problem::MinimalVertexCover | Problem::OddCycleTransversal => self == SolutionSize,
            Problem::MinStCut => matches!(self, MinCutSize | Treewidth),
        }
    }
}

/// A graph problem instance together with its budget and parameterization.
///
/// For minimum cuts `k` is informational: the count always refers to cuts
/// of minimum size.
#[derive(Debug, Clone)]
pub struct CountingInstance {
    pub problem: Problem,
    pub graph: Graph,
    pub terminals: Option<TerminalPair>,
    pub k: u64,
    pub param_kind: ParamKind,
}

impl CountingInstance {
    pub fn new(problem: Problem, graph: Graph, k: u64) -> Self {
        let param_kind = match problem {
            Problem::MinStCut => ParamKind::MinCutSize,
            _ => ParamKind::SolutionSize,
        };
        CountingInstance {
            problem,
            graph,
            terminals: None,
            k,
            param_kind,
        }
    }

    /// Minimum cut instance; `k` is set to the minimum cut size.
    pub fn min_cut(graph: Graph, terminals: TerminalPair) -> Result<Self> {
        TerminalPair::new(terminals.s, terminals.t, &graph)?;
        let k = crate::oracles::min_cut_size(&graph, terminals) as u64;
        Ok(CountingInstance {
            problem: Problem::MinStCut,
            graph,
            terminals: Some(terminals),
            k,
            param_kind: ParamKind::MinCutSize,
        })
    }

    pub fn with_param_kind(mut self, kind: ParamKind) -> Self {
        self.param_kind = kind;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.param_kind.fits(self.problem) {
            return Err(Error::Protocol(format!(
                "parameter {:?} does not apply to {}",
                self.param_kind, self.problem
            )));
        }
        match (self.problem, self.terminals) {
            (Problem::MinStCut, None) => Err(Error::Protocol("min-cut instance without terminals".into())),
            (Problem::MinStCut, Some(st)) => TerminalPair::new(st.s, st.t, &self.graph).map(|_| ()),
            _ => Ok(()),
        }
    }

    fn terminals(&self) -> Result<TerminalPair> {
        self.terminals
            .ok_or_else(|| Error::Protocol("min-cut instance without terminals".into()))
    }
}

/// Brute-force count of `inst`.
pub fn oracle_count(inst: &CountingInstance) -> Result<BigCount> {
    inst.validate()?;
    let k = usize::try_from(inst.k).unwrap_or(usize::MAX);
    match inst.problem {
        Problem::VertexCover => count_vertex_covers(&inst.graph, k),
        Problem::MinimalVertexCover => count_minimal_vertex_covers(&inst.graph, k),
        Problem::OddCycleTransversal => count_odd_cycle_transversals(&inst.graph, k),
        Problem::MinStCut => Ok(count_min_st_cuts(&inst.graph, inst.terminals()?)?.count),
    }
}

/// Serialized state handed from `reduce` to `lift`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiftContext {
    pub compression: String,
    pub version: u32,
    pub payload: serde_json::Value,
}

pub const CONTEXT_VERSION: u32 = 1;

impl LiftContext {
    pub fn new(compression: &str, payload: impl Serialize) -> Result<Self> {
        Ok(LiftContext {
            compression: compression.to_string(),
            version: CONTEXT_VERSION,
            payload: serde_json::to_value(payload)?,
        })
    }

    /// Decodes the payload after checking it belongs to `compression`.
    pub fn open<T: for<'de> Deserialize<'de>>(&self, compression: &str) -> Result<T> {
        if self.compression != compression {
            return Err(Error::Protocol(format!(
                "context was produced by {:?}, not {compression:?}",
                self.compression
            )));
        }
        if self.version != CONTEXT_VERSION {
            return Err(Error::Protocol(format!("unsupported context version {}", self.version)));
        }
        serde_json::from_value(self.payload.clone())
            .map_err(|e| Error::Protocol(format!("malformed {compression} context: {e}")))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone)]
pub struct CompressionResult {
    pub reduced: CountingInstance,
    pub context: LiftContext,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionKind {
    Kernel,
    Compression,
    Ppt,
}

/// A `(reduce, lift)` pair: `lift(reduce(x).context, #reduce(x).reduced)`
/// equals `#x`.
pub trait CountingReduction: Send + Sync {
    fn name(&self) -> &str;
    fn kind(&self) -> ReductionKind;
    fn source(&self) -> Problem;
    fn target(&self) -> Problem;
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult>;
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount>;
}

pub type Handle = Arc<dyn CountingReduction>;

fn expect_source(r: &dyn CountingReduction, inst: &CountingInstance) -> Result<()> {
    inst.validate()?;
    if inst.problem != r.source() {
        return Err(Error::Protocol(format!(
            "{} expects a {} instance, got {}",
            r.name(),
            r.source(),
            inst.problem
        )));
    }
    Ok(())
}

pub struct VcKernel;

impl CountingReduction for VcKernel {
    fn name(&self) -> &str {
        "vc-kernel"
    }
    fn kind(&self) -> ReductionKind {
        ReductionKind::Kernel
    }
    fn source(&self) -> Problem {
        Problem::VertexCover
    }
    fn target(&self) -> Problem {
        Problem::VertexCover
    }
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult> {
        expect_source(self, inst)?;
        let r = vc_reduce(&inst.graph, inst.k)?;
        Ok(CompressionResult {
            reduced: CountingInstance::new(Problem::VertexCover, r.graph, r.k),
            context: LiftContext::new(self.name(), &r.context)?,
        })
    }
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount> {
        vc_lift(&ctx.open::<VcLiftContext>(self.name())?, reduced_count)
    }
}

pub struct MinimalVcKernel;

impl CountingReduction for MinimalVcKernel {
    fn name(&self) -> &str {
        "minvc-kernel"
    }
    fn kind(&self) -> ReductionKind {
        ReductionKind::Kernel
    }
    fn source(&self) -> Problem {
        Problem::MinimalVertexCover
    }
    fn target(&self) -> Problem {
        Problem::MinimalVertexCover
    }
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult> {
        expect_source(self, inst)?;
        let r = minimal_vc_reduce(&inst.graph, inst.k);
        Ok(CompressionResult {
            reduced: CountingInstance::new(Problem::MinimalVertexCover, r.graph, r.k),
            context: LiftContext::new(self.name(), &r.context)?,
        })
    }
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount> {
        let c = ctx.open::<MinimalVcLiftContext>(self.name())?;
        Ok(minimal_vc_lift(&c, reduced_count))
    }
}

pub struct MinCutToOctPpt;

impl CountingReduction for MinCutToOctPpt {
    fn name(&self) -> &str {
        "ppt-mincut-oct"
    }
    fn kind(&self) -> ReductionKind {
        ReductionKind::Ppt
    }
    fn source(&self) -> Problem {
        Problem::MinStCut
    }
    fn target(&self) -> Problem {
        Problem::OddCycleTransversal
    }
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult> {
        expect_source(self, inst)?;
        let r = ppt_mincut_to_oct(&inst.graph, inst.terminals()?)?;
        Ok(CompressionResult {
            reduced: CountingInstance::new(Problem::OddCycleTransversal, r.graph, r.k),
            context: LiftContext::new(self.name(), &r.context)?,
        })
    }
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount> {
        let c = ctx.open::<MinCutOctContext>(self.name())?;
        Ok(mincut_oct_lift(&c, reduced_count))
    }
}

/// Odd cycle transversal to vertex cover. The source must be nice; with
/// `check_nice` this is verified by enumeration during `reduce`.
pub struct OctToVcPpt {
    pub check_nice: bool,
}

impl CountingReduction for OctToVcPpt {
    fn name(&self) -> &str {
        "ppt-oct-vc"
    }
    fn kind(&self) -> ReductionKind {
        ReductionKind::Ppt
    }
    fn source(&self) -> Problem {
        Problem::OddCycleTransversal
    }
    fn target(&self) -> Problem {
        Problem::VertexCover
    }
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult> {
        expect_source(self, inst)?;
        let r = ppt_oct_to_vc(&inst.graph, inst.k, self.check_nice)?;
        Ok(CompressionResult {
            reduced: CountingInstance::new(Problem::VertexCover, r.graph, r.k)
                .with_param_kind(ParamKind::KMinusLp),
            context: LiftContext::new(self.name(), &r.context)?,
        })
    }
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount> {
        oct_vc_lift(&ctx.open::<OctVcContext>(self.name())?, reduced_count)
    }
}

/// Returns the instance unchanged.
pub struct Identity {
    problem: Problem,
    name: String,
}

impl Identity {
    pub fn new(problem: Problem) -> Self {
        let short = match problem {
            Problem::VertexCover => "vc",
            Problem::MinimalVertexCover => "minvc",
            Problem::OddCycleTransversal => "oct",
            Problem::MinStCut => "mincut",
        };
        Identity {
            problem,
            name: format!("identity-{short}"),
        }
    }
}

impl CountingReduction for Identity {
    fn name(&self) -> &str {
        &self.name
    }
    fn kind(&self) -> ReductionKind {
        ReductionKind::Ppt
    }
    fn source(&self) -> Problem {
        self.problem
    }
    fn target(&self) -> Problem {
        self.problem
    }
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult> {
        expect_source(self, inst)?;
        Ok(CompressionResult {
            reduced: inst.clone(),
            context: LiftContext::new(self.name(), serde_json::json!({}))?,
        })
    }
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount> {
        ctx.open::<serde_json::Value>(self.name())?;
        Ok(reduced_count.clone())
    }
}

#[derive(Serialize, Deserialize)]
struct NestedContext {
    ppt: LiftContext,
    inner: LiftContext,
}

/// `inner ∘ ppt`: reduce through the transformation, then the compression;
/// lift back through the compression, then the transformation.
pub struct Composite {
    ppt: Handle,
    inner: Handle,
    name: String,
}

impl CountingReduction for Composite {
    fn name(&self) -> &str {
        &self.name
    }
    fn kind(&self) -> ReductionKind {
        ReductionKind::Compression
    }
    fn source(&self) -> Problem {
        self.ppt.source()
    }
    fn target(&self) -> Problem {
        self.inner.target()
    }
    fn reduce(&self, inst: &CountingInstance) -> Result<CompressionResult> {
        let first = self.ppt.reduce(inst)?;
        let second = self.inner.reduce(&first.reduced)?;
        let nested = NestedContext {
            ppt: first.context,
            inner: second.context,
        };
        Ok(CompressionResult {
            reduced: second.reduced,
            context: LiftContext::new(self.name(), nested)?,
        })
    }
    fn lift(&self, ctx: &LiftContext, reduced_count: &BigCount) -> Result<BigCount> {
        let nested = ctx.open::<NestedContext>(self.name())?;
        let middle = self.inner.lift(&nested.inner, reduced_count)?;
        self.ppt.lift(&nested.ppt, &middle)
    }
}

pub fn compose_ppt_compression(ppt: Handle, compression: Handle) -> Result<Handle> {
    if ppt.target() != compression.source() {
        return Err(Error::Composition(format!(
            "{} produces {} instances but {} expects {}",
            ppt.name(),
            ppt.target(),
            compression.name(),
            compression.source()
        )));
    }
    let name = format!("{}+{}", ppt.name(), compression.name());
    Ok(Arc::new(Composite {
        ppt,
        inner: compression,
        name,
    }))
}

/// All named reductions. Composites are addressed as `first+second`.
pub fn registry() -> Vec<Handle> {
    vec![
        Arc::new(VcKernel),
        Arc::new(MinimalVcKernel),
        Arc::new(MinCutToOctPpt),
        Arc::new(OctToVcPpt { check_nice: false }),
        Arc::new(Identity::new(Problem::VertexCover)),
        Arc::new(Identity::new(Problem::MinimalVertexCover)),
        Arc::new(Identity::new(Problem::OddCycleTransversal)),
        Arc::new(Identity::new(Problem::MinStCut)),
    ]
}

/// Looks up a reduction by name; `a+b+c` composes left to right.
pub fn lookup(name: &str) -> Result<Handle> {
    let mut parts = name.split('+');
    let find = |part: &str| {
        registry()
            .into_iter()
            .find(|r| r.name() == part)
            .ok_or_else(|| Error::Composition(format!("unknown reduction {part:?}")))
    };
    let mut handle = find(parts.next().unwrap_or_default())?;
    for part in parts {
        handle = compose_ppt_compression(handle, find(part)?)?;
    }
    Ok(handle)
}

/// Reduces `inst` and lifts `reduced_count`, the caller-supplied count of
/// the reduced instance.
pub fn run_compression(
    c: &dyn CountingReduction,
    inst: &CountingInstance,
    reduced_count: &BigCount,
) -> Result<BigCount> {
    let r = c.reduce(inst)?;
    c.lift(&r.context, reduced_count)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSize {
    pub n: usize,
    pub m: usize,
    pub k: u64,
}

impl From<&CountingInstance> for InstanceSize {
    fn from(inst: &CountingInstance) -> Self {
        InstanceSize {
            n: inst.graph.n(),
            m: inst.graph.m(),
            k: inst.k,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub compression: String,
    pub original: InstanceSize,
    pub reduced: InstanceSize,
    #[serde(with = "crate::count::decimal")]
    pub direct_count: BigCount,
    #[serde(with = "crate::count::decimal")]
    pub reduced_count: BigCount,
    #[serde(with = "crate::count::decimal")]
    pub lifted_count: BigCount,
    pub passed: bool,
}

/// Reduce, count the reduced instance by oracle, lift, and compare with the
/// oracle count of the original.
pub fn verify_compression(c: &dyn CountingReduction, inst: &CountingInstance) -> Result<VerificationReport> {
    let r = c.reduce(inst)?;
    let reduced_count = oracle_count(&r.reduced)?;
    let lifted = c.lift(&r.context, &reduced_count)?;
    let direct = oracle_count(inst)?;
    Ok(VerificationReport {
        compression: c.name().to_string(),
        original: inst.into(),
        reduced: (&r.reduced).into(),
        passed: lifted == direct,
        direct_count: direct,
        reduced_count,
        lifted_count: lifted,
    })
}
