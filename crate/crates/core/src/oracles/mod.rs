//! Exact exponential-time counters that serve as ground truth.
//!
//! Every enumeration is guarded: inputs whose candidate space exceeds
//! [`ENUMERATION_LIMIT`] are refused with [`Error::Size`](crate::Error::Size)
//! instead of running for hours.

mod cut;
mod matching;
mod oct;
mod random;
mod subsets;
mod treewidth;
mod vertex_cover;

pub use cut::{count_min_st_cuts, count_min_st_cuts_with, min_cut_size, separates, MinCutCount};
pub use matching::{lp_vc_value, max_matching_size, HalfInteger};
pub use oct::{
    count_odd_cycle_transversals, count_odd_cycle_transversals_with, is_nice_oct_instance,
    is_nice_oct_instance_with,
};
pub use random::{all_graphs, graph_from_code, random_graph};
pub use treewidth::{exact_treewidth, Treewidth, TREEWIDTH_MAX_VERTICES};
pub use vertex_cover::{
    count_minimal_vertex_covers, count_minimal_vertex_covers_with, count_vertex_covers,
    count_vertex_covers_with, min_vertex_cover_size, vertex_cover_profile,
    vertex_cover_profile_with,
};

/// Largest candidate space (number of subsets examined) an oracle accepts.
pub const ENUMERATION_LIMIT: u128 = 1 << 26;

pub(crate) fn guard(what: &'static str, candidates: u128) -> crate::Result<()> {
    if candidates > ENUMERATION_LIMIT {
        return Err(crate::Error::Size {
            what,
            candidates,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

pub(crate) fn mask_width(what: &'static str, n: usize) -> crate::Result<()> {
    if n > crate::graph::MASK_BITS {
        return Err(crate::Error::Size {
            what,
            candidates: n as u128,
            limit: crate::graph::MASK_BITS as u128,
        });
    }
    Ok(())
}
