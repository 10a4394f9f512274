//! Cross-compositions for counting minimum `(s,t)` cuts and the parameter
//! transformations from cuts to odd cycle transversals to vertex covers.

mod exact;
mod ppt;
mod sum;

pub use exact::{exact_compose, exact_extract, ExactBranch, ExactComposition, ExactMetadata, GadgetPaths};
pub use ppt::{
    mincut_oct_lift, oct_vc_lift, ppt_mincut_to_oct, ppt_oct_to_vc, MinCutOctBranch,
    MinCutOctContext, MinCutOctLayout, MinCutToOct, OctToVc, OctVcContext,
};
pub use sum::{group_by_min_cut, sum_compose, SumComposition};

use crate::graph::{Graph, TerminalPair};
use crate::oracles::min_cut_size;
use crate::{Error, Result};

/// Common minimum cut size of all inputs, or a composition error.
fn common_cut_size(instances: &[(Graph, TerminalPair)]) -> Result<usize> {
    let Some((g0, st0)) = instances.first() else {
        return Err(Error::Composition("no instances to compose".into()));
    };
    let k = min_cut_size(g0, *st0);
    for (i, (g, st)) in instances.iter().enumerate().skip(1) {
        let ki = min_cut_size(g, *st);
        if ki != k {
            return Err(Error::Composition(format!(
                "instance {} has cut size {ki}, instance 1 has {k}",
                i + 1
            )));
        }
    }
    Ok(k)
}

/// Appends labels for new vertices when the base graph carries labels.
fn extend_labels(base: &Graph, mut out: Graph, extra: impl IntoIterator<Item = String>) -> Graph {
    if let Some(labels) = base.labels() {
        let mut l = labels.to_vec();
        l.extend(extra);
        if l.len() == out.n() {
            out = out.with_labels(l).expect("length checked");
        }
    }
    out
}
