//! The bijection between permutations of [n] and Laguerre histories of
//! length n. Encoding reads each position's cycle kind and nesting counts;
//! decoding rebuilds the permutation column by column through a partial
//! bipartite graph, filling one vacancy per inserted edge.

use crate::digraph::PartialBipartiteGraph;
use crate::laguerre::{Label, LaguerreHistory, StepKind};
use crate::perm::{CycleKind, Permutation};

/// Encodes a permutation as a Laguerre history. Cycle valleys become up
/// steps, cycle peaks down steps, cycle double rises LA, cycle double falls
/// LB, and fixed points LC; labels record nesting counts, shifted to be
/// 1-based, except LC whose η is pinned to height-before + 1.
pub fn encode(perm: &Permutation) -> LaguerreHistory {
    let n = perm.n();
    let classification = perm.classify();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut h = 0usize;
    for i in 1..=n {
        let (step, label) = match classification.kind_of(i) {
            CycleKind::Cval => (StepKind::U, Label::absent()),
            CycleKind::Cpeak => (
                StepKind::D,
                Label::new(Some(perm.upnest(i) + 1), Some(perm.lownest(i) + 1)),
            ),
            CycleKind::Cdrise => (StepKind::La, Label::new(Some(perm.upnest(i) + 1), None)),
            CycleKind::Cdfall => (StepKind::Lb, Label::new(None, Some(perm.lownest(i) + 1))),
            CycleKind::Fix => (StepKind::Lc, Label::new(None, Some(h + 1))),
        };
        h = (h as i64 + step.delta()) as usize;
        steps.push(step);
        labels.push(label);
    }
    LaguerreHistory::new(steps, labels)
        .expect("encoding a permutation always lands inside the label ranges")
}

/// Decodes a history back to a permutation and simultaneously collects the
/// cycle maxima: position i is one exactly when its step is LC, or when it
/// is a down step whose freshly closed chain returns to its own column.
pub fn decode_with_cycle_maxima(history: &LaguerreHistory) -> (Permutation, Vec<usize>) {
    let n = history.n();
    let mut g = PartialBipartiteGraph::new();
    let mut cyc = Vec::new();
    for i in 1..=n {
        g.add_column();
        let label = history.label(i);
        match history.step(i) {
            StepKind::U => {}
            StepKind::D => {
                let xi = label.xi.expect("validated D step carries xi");
                let eta = label.eta.expect("validated D step carries eta");
                // Both ranks refer to the vacancies before either insertion.
                let top = g.kth_vacant_top(xi).expect("xi is within the vacancy count");
                let bottom = g.kth_vacant_bottom(eta).expect("eta is within the vacancy count");
                g.add_edge(top, i).expect("chosen top vacancy is free");
                g.add_edge(i, bottom).expect("chosen bottom vacancy is free");
                if g.follow_chain_from_top(i).closed {
                    cyc.push(i);
                }
            }
            StepKind::La => {
                let xi = label.xi.expect("validated LA step carries xi");
                let top = g.kth_vacant_top(xi).expect("xi is within the vacancy count");
                g.add_edge(top, i).expect("chosen top vacancy is free");
            }
            StepKind::Lb => {
                let eta = label.eta.expect("validated LB step carries eta");
                let bottom = g.kth_vacant_bottom(eta).expect("eta is within the vacancy count");
                g.add_edge(i, bottom).expect("chosen bottom vacancy is free");
            }
            StepKind::Lc => {
                g.add_edge(i, i).expect("own column is free on an LC step");
                cyc.push(i);
            }
        }
    }
    let perm = g
        .to_permutation()
        .expect("a complete history fills every vacancy");
    (perm, cyc)
}

/// Decodes a history back to a permutation.
pub fn decode(history: &LaguerreHistory) -> Permutation {
    decode_with_cycle_maxima(history).0
}
