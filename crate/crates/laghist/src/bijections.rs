//! Label-rewriting maps on Laguerre histories, and the permutation maps
//! obtained by conjugating them with the codec.
//!
//! `rho1` turns first-rank bottom labels into chain closures: the antirecord
//! positions of the input become the cycle maxima of the output while
//! excedances, exclusive records, and record-antirecord fixed points stay
//! put. `rho2` does the stronger exchange — cycle maxima and antirecord
//! positions swap — and is an involution. Both leave U, D, LA steps in place
//! and only toggle level steps between LB and LC, so heights never move.
//!
//! Case ordering inside a down step is load-bearing. `rho1` fixes ξ first,
//! inserts the top edge, and only then reads the chain rank η* used to pick
//! the output η; its inverse replays the same graph, so the rank it sees is
//! identical. `rho2` reads its chain rank ξ* in the input graph before any
//! output edge exists, then builds the output bottom-edge-first so the
//! second chain rank η* is well defined. Reordering any of these breaks the
//! running examples in the integration tests.

use crate::digraph::PartialBipartiteGraph;
use crate::laguerre::{Label, LaguerreHistory, StepKind};
use crate::perm::Permutation;
use crate::theta;

/// Rewrites a history so that antirecord positions of the input become the
/// cycle maxima of the output. Bijection on histories of each length.
pub fn rho1(input: &LaguerreHistory) -> LaguerreHistory {
    let n = input.n();
    // decode graph of the output, grown one column per step
    let mut g = PartialBipartiteGraph::new();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut h = 0usize;
    for i in 1..=n {
        g.add_column();
        let step = input.step(i);
        let label = input.label(i);
        let (out_step, out_label) = match step {
            StepKind::U => (StepKind::U, Label::absent()),
            StepKind::La => {
                let xi = label.xi.expect("LA carries xi");
                let top = g.kth_vacant_top(xi).expect("xi within vacancy count");
                g.add_edge(top, i).expect("vacant by construction");
                (StepKind::La, label)
            }
            StepKind::Lb => {
                let eta = label.eta.expect("LB carries eta");
                if eta == 1 {
                    g.add_edge(i, i).expect("own column is fresh");
                    (StepKind::Lc, Label::new(None, Some(h + 1)))
                } else {
                    let bottom = g.kth_vacant_bottom(eta).expect("eta within vacancy count");
                    g.add_edge(i, bottom).expect("vacant by construction");
                    (StepKind::Lb, label)
                }
            }
            StepKind::Lc => {
                if h == 0 {
                    g.add_edge(i, i).expect("own column is fresh");
                    (StepKind::Lc, label)
                } else {
                    let bottom = g.kth_vacant_bottom(1).expect("height is positive");
                    g.add_edge(i, bottom).expect("vacant by construction");
                    (StepKind::Lb, Label::new(None, Some(1)))
                }
            }
            StepKind::D => {
                let xi = label.xi.expect("D carries xi");
                let eta = label.eta.expect("D carries eta");
                let top = g.kth_vacant_top(xi).expect("xi within vacancy count");
                g.add_edge(top, i).expect("vacant by construction");
                // Top column i has no outgoing edge yet, so the chain from
                // the bottom of column i cannot close.
                let chain = g.follow_chain_from_bottom(i);
                debug_assert!(!chain.closed);
                let eta_star = g
                    .vacancy_index_bottom(chain.terminal)
                    .expect("an open chain ends at a vacancy");
                let out_eta = if eta == 1 {
                    eta_star
                } else if eta > eta_star {
                    eta
                } else {
                    eta - 1
                };
                let bottom = g.kth_vacant_bottom(out_eta).expect("out_eta within vacancy count");
                g.add_edge(i, bottom).expect("vacant by construction");
                (StepKind::D, Label::new(Some(xi), Some(out_eta)))
            }
        };
        h = (h as i64 + step.delta()) as usize;
        steps.push(out_step);
        labels.push(out_label);
    }
    LaguerreHistory::new(steps, labels).expect("the rewrite keeps every label in range")
}

/// Undoes `rho1`. Replays the decode graph of its own input — the same
/// graph `rho1` built while producing it — so the chain rank seen at each
/// down step matches, and the original η can be read back off it.
pub fn rho1_inv(input: &LaguerreHistory) -> LaguerreHistory {
    let n = input.n();
    // decode graph of the input this time; edges follow the input's labels
    let mut g = PartialBipartiteGraph::new();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut h = 0usize;
    for i in 1..=n {
        g.add_column();
        let step = input.step(i);
        let label = input.label(i);
        let (out_step, out_label) = match step {
            StepKind::U => (StepKind::U, Label::absent()),
            StepKind::La => {
                let xi = label.xi.expect("LA carries xi");
                let top = g.kth_vacant_top(xi).expect("xi within vacancy count");
                g.add_edge(top, i).expect("vacant by construction");
                (StepKind::La, label)
            }
            StepKind::Lb => {
                let eta = label.eta.expect("LB carries eta");
                let bottom = g.kth_vacant_bottom(eta).expect("eta within vacancy count");
                g.add_edge(i, bottom).expect("vacant by construction");
                if eta == 1 {
                    (StepKind::Lc, Label::new(None, Some(h + 1)))
                } else {
                    (StepKind::Lb, label)
                }
            }
            StepKind::Lc => {
                g.add_edge(i, i).expect("own column is fresh");
                if h == 0 {
                    (StepKind::Lc, label)
                } else {
                    (StepKind::Lb, Label::new(None, Some(1)))
                }
            }
            StepKind::D => {
                let xi = label.xi.expect("D carries xi");
                let eta_prime = label.eta.expect("D carries eta");
                let top = g.kth_vacant_top(xi).expect("xi within vacancy count");
                g.add_edge(top, i).expect("vacant by construction");
                let chain = g.follow_chain_from_bottom(i);
                debug_assert!(!chain.closed);
                let eta_star = g
                    .vacancy_index_bottom(chain.terminal)
                    .expect("an open chain ends at a vacancy");
                let out_eta = if eta_prime == eta_star {
                    1
                } else if eta_prime > eta_star {
                    eta_prime
                } else {
                    eta_prime + 1
                };
                let bottom = g.kth_vacant_bottom(eta_prime).expect("eta within vacancy count");
                g.add_edge(i, bottom).expect("vacant by construction");
                (StepKind::D, Label::new(Some(xi), Some(out_eta)))
            }
        };
        h = (h as i64 + step.delta()) as usize;
        steps.push(out_step);
        labels.push(out_label);
    }
    LaguerreHistory::new(steps, labels).expect("the rewrite keeps every label in range")
}

/// Rewrites a history so that cycle maxima and antirecord positions swap,
/// leaving excedances and record-antirecord fixed points untouched.
/// Involution on histories of each length.
pub fn rho2(input: &LaguerreHistory) -> LaguerreHistory {
    let n = input.n();
    // two graphs grown in lockstep: the decode graph of the input feeds the
    // ξ-side chain, the decode graph of the output the η-side chain
    let mut gin = PartialBipartiteGraph::new();
    let mut gout = PartialBipartiteGraph::new();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut h = 0usize;
    for i in 1..=n {
        gin.add_column();
        gout.add_column();
        let step = input.step(i);
        let label = input.label(i);
        let (out_step, out_label) = match step {
            StepKind::U => (StepKind::U, Label::absent()),
            StepKind::La => {
                let xi = label.xi.expect("LA carries xi");
                let tin = gin.kth_vacant_top(xi).expect("xi within vacancy count");
                gin.add_edge(tin, i).expect("vacant by construction");
                let tout = gout.kth_vacant_top(xi).expect("xi within vacancy count");
                gout.add_edge(tout, i).expect("vacant by construction");
                (StepKind::La, label)
            }
            StepKind::Lb => {
                let eta = label.eta.expect("LB carries eta");
                let bin = gin.kth_vacant_bottom(eta).expect("eta within vacancy count");
                gin.add_edge(i, bin).expect("vacant by construction");
                if eta == 1 {
                    gout.add_edge(i, i).expect("own column is fresh");
                    (StepKind::Lc, Label::new(None, Some(h + 1)))
                } else {
                    let bout = gout.kth_vacant_bottom(eta).expect("eta within vacancy count");
                    gout.add_edge(i, bout).expect("vacant by construction");
                    (StepKind::Lb, label)
                }
            }
            StepKind::Lc => {
                gin.add_edge(i, i).expect("own column is fresh");
                if h == 0 {
                    gout.add_edge(i, i).expect("own column is fresh");
                    (StepKind::Lc, label)
                } else {
                    let bout = gout.kth_vacant_bottom(1).expect("height is positive");
                    gout.add_edge(i, bout).expect("vacant by construction");
                    (StepKind::Lb, Label::new(None, Some(1)))
                }
            }
            StepKind::D => {
                let xi = label.xi.expect("D carries xi");
                let eta = label.eta.expect("D carries eta");
                // ranks for ξ* refer to the input graph before this step's
                // edges exist
                let pre_vacant_tops = gin.vacant_tops();
                let tin = gin.kth_vacant_top(xi).expect("xi within vacancy count");
                let bin = gin.kth_vacant_bottom(eta).expect("eta within vacancy count");
                gin.add_edge(tin, i).expect("vacant by construction");
                gin.add_edge(i, bin).expect("vacant by construction");
                let chain_in = gin.follow_chain_from_top(i);
                let out_eta = if chain_in.closed {
                    1
                } else {
                    let xi_star = pre_vacant_tops
                        .iter()
                        .position(|&v| v == chain_in.terminal)
                        .expect("open chains end at a top that was vacant before the step")
                        + 1;
                    debug_assert_ne!(xi, xi_star);
                    if xi > xi_star {
                        xi
                    } else {
                        xi + 1
                    }
                };
                // output side goes bottom edge first, then reads its chain
                let bout = gout.kth_vacant_bottom(out_eta).expect("out_eta within vacancy count");
                gout.add_edge(i, bout).expect("vacant by construction");
                let chain_out = gout.follow_chain_from_top(i);
                debug_assert!(!chain_out.closed);
                let eta_star = gout
                    .vacancy_index_top(chain_out.terminal)
                    .expect("an open chain ends at a vacancy");
                let out_xi = if eta == 1 {
                    eta_star
                } else if eta > eta_star {
                    eta
                } else {
                    eta - 1
                };
                let tout = gout.kth_vacant_top(out_xi).expect("out_xi within vacancy count");
                gout.add_edge(tout, i).expect("vacant by construction");
                (StepKind::D, Label::new(Some(out_xi), Some(out_eta)))
            }
        };
        h = (h as i64 + step.delta()) as usize;
        steps.push(out_step);
        labels.push(out_label);
    }
    LaguerreHistory::new(steps, labels).expect("the rewrite keeps every label in range")
}

/// The permutation map induced by `rho1`: encode, rewrite, decode. Sends
/// the antirecord set of the input to the cycle-maximum set of the output.
pub fn phi(p: &Permutation) -> Permutation {
    theta::decode(&rho1(&theta::encode(p)))
}

/// The permutation map induced by `rho2`: encode, rewrite, decode.
/// Involution that swaps cycle maxima with antirecord positions.
pub fn phi_cap(p: &Permutation) -> Permutation {
    theta::decode(&rho2(&theta::encode(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laguerre;

    fn history(steps: Vec<StepKind>, labels: Vec<(Option<usize>, Option<usize>)>) -> LaguerreHistory {
        let labels = labels.into_iter().map(|(x, e)| Label::new(x, e)).collect();
        LaguerreHistory::new(steps, labels).unwrap()
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn rho1_fixes_the_singleton_fixed_point() {
        let h = history(vec![StepKind::Lc], vec![(None, Some(1))]);
        assert_eq!(rho1(&h), h);
        assert_eq!(rho1_inv(&h), h);
        assert_eq!(rho2(&h), h);
    }

    #[test]
    fn rho1_fixes_the_up_down_pair() {
        let h = history(
            vec![StepKind::U, StepKind::D],
            vec![(None, None), (Some(1), Some(1))],
        );
        assert_eq!(rho1(&h), h);
        assert_eq!(rho2(&h), h);
    }

    #[test]
    fn rho1_toggles_level_steps_in_a_three_step_history() {
        let a = history(
            vec![StepKind::U, StepKind::Lb, StepKind::D],
            vec![(None, None), (None, Some(1)), (Some(1), Some(1))],
        );
        let b = history(
            vec![StepKind::U, StepKind::Lc, StepKind::D],
            vec![(None, None), (None, Some(2)), (Some(1), Some(1))],
        );
        assert_eq!(rho1(&a), b);
        assert_eq!(rho1_inv(&b), a);
        assert_eq!(rho2(&a), b);
        assert_eq!(rho2(&b), a);
    }

    #[test]
    fn rho1_inv_undoes_rho1_exhaustively() {
        for n in 0..=5 {
            for h in laguerre::enumerate(n) {
                assert_eq!(rho1_inv(&rho1(&h)), h, "rho1_inv(rho1(h)) for {h:?}");
                assert_eq!(rho1(&rho1_inv(&h)), h, "rho1(rho1_inv(h)) for {h:?}");
            }
        }
    }

    #[test]
    fn rho2_is_an_involution_exhaustively() {
        for n in 0..=5 {
            for h in laguerre::enumerate(n) {
                assert_eq!(rho2(&rho2(&h)), h, "rho2(rho2(h)) for {h:?}");
            }
        }
    }

    #[test]
    fn rewrites_only_toggle_level_steps() {
        for h in laguerre::enumerate(5) {
            for out in [rho1(&h), rho1_inv(&h), rho2(&h)] {
                assert_eq!(out.validate(), Ok(()));
                for i in 1..=5 {
                    let (s, t) = (h.step(i), out.step(i));
                    match s {
                        StepKind::U | StepKind::D | StepKind::La => assert_eq!(s, t),
                        StepKind::Lb | StepKind::Lc => {
                            assert!(matches!(t, StepKind::Lb | StepKind::Lc))
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_on_small_permutations() {
        assert_eq!(phi(&perm(&[1, 2, 3])), perm(&[1, 2, 3]));
        assert_eq!(phi(&perm(&[2, 1])), perm(&[2, 1]));
        assert_eq!(phi(&perm(&[3, 1, 2])), perm(&[3, 2, 1]));
    }

    #[test]
    fn phi_cap_swaps_the_three_element_pair() {
        assert_eq!(phi_cap(&perm(&[3, 1, 2])), perm(&[3, 2, 1]));
        assert_eq!(phi_cap(&perm(&[3, 2, 1])), perm(&[3, 1, 2]));
        assert_eq!(phi_cap(&perm(&[1, 2, 3, 4])), perm(&[1, 2, 3, 4]));
    }

    #[test]
    fn phi_permutes_s4() {
        let mut images: Vec<String> = Permutation::all(4).map(|p| phi(&p).to_string()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 24);
    }

    #[test]
    fn phi_cap_is_an_involution_on_s5() {
        for p in Permutation::all(5) {
            assert_eq!(phi_cap(&phi_cap(&p)), p, "phi_cap twice on {p}");
        }
    }
}
