use std::collections::BTreeMap;

use super::common_cut_size;
use crate::graph::{chain_identify, Graph, TerminalPair};
use crate::oracles::min_cut_size;
use crate::{Error, Result};

/// Series composition of instances sharing a minimum cut size. Every
/// minimum cut of the chain is a minimum cut of exactly one link.
#[derive(Debug, Clone)]
pub struct SumComposition {
    pub graph: Graph,
    pub terminals: TerminalPair,
    pub cut_size: usize,
    pub vertex_maps: Vec<Vec<usize>>,
}

/// Indices of the instances grouped by minimum cut size.
pub fn group_by_min_cut(instances: &[(Graph, TerminalPair)]) -> BTreeMap<usize, Vec<usize>> {
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, (g, st)) in instances.iter().enumerate() {
        classes.entry(min_cut_size(g, *st)).or_default().push(i);
    }
    classes
}

/// Chains the instances `t_i = s_{i+1}`. The minimum cut count of the result
/// is the sum of the inputs' counts.
///
/// With cut size 0 and more than one input the chain is disconnected and has
/// a single (empty) minimum cut, so that case is refused.
pub fn sum_compose(instances: &[(Graph, TerminalPair)]) -> Result<SumComposition> {
    let k = common_cut_size(instances)?;
    if k == 0 && instances.len() > 1 {
        return Err(Error::Composition(
            "inputs with separated terminals do not sum under chaining".into(),
        ));
    }
    let chain = chain_identify(instances)?;
    Ok(SumComposition {
        graph: chain.graph,
        terminals: chain.terminals,
        cut_size: k,
        vertex_maps: chain.vertex_maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::count_min_st_cuts;

    fn path(len: usize) -> (Graph, TerminalPair) {
        (Graph::path(len + 1), TerminalPair { s: 0, t: len })
    }

    fn k4() -> (Graph, TerminalPair) {
        (Graph::complete(4), TerminalPair { s: 0, t: 3 })
    }

    #[test]
    fn grouping() {
        let g = group_by_min_cut(&[path(1), path(2)]);
        assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(1, vec![0, 1])]);
        let g = group_by_min_cut(&[k4(), path(1)]);
        assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(1, vec![1]), (3, vec![0])]);
        assert!(group_by_min_cut(&[]).is_empty());
    }

    #[test]
    fn worked_examples() {
        let count = |c: &SumComposition| count_min_st_cuts(&c.graph, c.terminals).unwrap();
        let two = sum_compose(&[path(2), path(2)]).unwrap();
        assert_eq!(count(&two).count, 4u32.into());
        assert_eq!(count(&two).cut_size, 1);
        let one = sum_compose(&[path(2)]).unwrap();
        assert_eq!(count(&one).count, 2u32.into());
        let mixed = sum_compose(&[path(1), path(2)]).unwrap();
        assert_eq!(count(&mixed).count, 3u32.into());
    }

    #[test]
    fn refusals() {
        assert!(matches!(sum_compose(&[]), Err(Error::Composition(_))));
        assert!(matches!(sum_compose(&[k4(), path(1)]), Err(Error::Composition(_))));
        let split = (Graph::new(2), TerminalPair { s: 0, t: 1 });
        assert!(sum_compose(std::slice::from_ref(&split)).is_ok());
        assert!(matches!(sum_compose(&[split.clone(), split]), Err(Error::Composition(_))));
    }
}
