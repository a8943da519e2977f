// zxopt - quantum circuit optimisation by search over ZX-calculus
//         congruences
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use super::{SearchConfig, SearchError, SubjectWeighting};
use crate::rewrite::{
    congruence_lc_unchecked, congruence_pivot_unchecked, eligible_subjects, simplify_to_fixpoint,
    CongruenceKind, RewriteRule, RewriteStep, Subject,
};
use crate::zx::stats::SpiderGraph;
use crate::zx::{is_graph_like, to_graph_like, ZxDiagram};
use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use std::collections::{BTreeSet, HashMap};

/// The weight `mu(x)` of each subject under `weighting`. Degrees and
/// centralities are taken in the graph on spiders, ignoring boundaries; a
/// pivot edge uses the combined measure of its endpoints and the union of
/// their neighbourhoods.
pub fn subject_weights(
    d: &ZxDiagram,
    subjects: &[Subject],
    weighting: SubjectWeighting,
) -> Vec<f64> {
    if weighting == SubjectWeighting::Uniform {
        return vec![1.0; subjects.len()];
    }
    let g = SpiderGraph::new(d);
    let index: HashMap<usize, usize> = g.ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let deg = |i: usize| g.adj[i].len() as f64;
    let hood = |s: &Subject| -> Vec<usize> {
        let own: Vec<usize> = s.vertices().iter().map(|v| index[v]).collect();
        let mut ns = BTreeSet::new();
        for &i in &own {
            ns.extend(g.adj[i].iter().copied());
        }
        ns.into_iter().filter(|j| !own.contains(j)).collect()
    };
    match weighting {
        SubjectWeighting::Uniform => unreachable!(),
        SubjectWeighting::Degree => subjects
            .iter()
            .map(|s| s.vertices().iter().map(|v| deg(index[v])).sum())
            .collect(),
        SubjectWeighting::NeighborDegreeSum | SubjectWeighting::NeighborDegreeAvg => subjects
            .iter()
            .map(|s| {
                let ns = hood(s);
                let sum: f64 = ns.iter().map(|&j| deg(j)).sum();
                match weighting {
                    SubjectWeighting::NeighborDegreeSum => sum,
                    _ if ns.is_empty() => 0.0,
                    _ => sum / ns.len() as f64,
                }
            })
            .collect(),
        SubjectWeighting::LoadCentrality => {
            let load = g.load();
            subjects
                .iter()
                .map(|s| s.vertices().iter().map(|v| load[index[v]]).sum())
                .collect()
        }
        SubjectWeighting::EdgeBetweenness => {
            let eb = g.edge_betweenness();
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            subjects
                .iter()
                .map(|s| match *s {
                    Subject::Pivot(u, v) => eb[&key(index[&u], index[&v])],
                    Subject::Lc(u) => {
                        let i = index[&u];
                        g.adj[i].iter().map(|&j| eb[&key(i, j)]).sum()
                    }
                })
                .collect()
        }
    }
}

/// `P(x) = mu(x) / sum mu`, or uniform when every weight is zero.
pub fn selection_probabilities(weights: &[f64]) -> Vec<f64> {
    let total: f64 = weights.iter().sum();
    if total > 0.0 {
        weights.iter().map(|w| w / total).collect()
    } else {
        vec![1.0 / weights.len() as f64; weights.len()]
    }
}

/// Apply one randomly chosen congruence to a copy of `d`: the rule is local
/// complementation with probability `p_lc` (falling back to the other rule
/// when it has no subjects), the subject is drawn by weight, and the result
/// is fully simplified with probability `p_fr`.
pub fn neighbor<R: Rng>(
    d: &ZxDiagram,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<(ZxDiagram, RewriteStep), SearchError> {
    let (d, mut steps) = neighbor_logged(d, cfg, rng)?;
    steps.truncate(1);
    Ok((d, steps.pop().expect("congruence step")))
}

/// As [`neighbor`], also returning any simplification steps after the
/// congruence.
pub(crate) fn neighbor_logged<R: Rng>(
    d: &ZxDiagram,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<(ZxDiagram, Vec<RewriteStep>), SearchError> {
    let first = if rng.gen_bool(cfg.p_lc) {
        CongruenceKind::Lc
    } else {
        CongruenceKind::Pivot
    };
    let mut subjects = eligible_subjects(d, first);
    if subjects.is_empty() {
        let other = match first {
            CongruenceKind::Lc => CongruenceKind::Pivot,
            CongruenceKind::Pivot => CongruenceKind::Lc,
        };
        subjects = eligible_subjects(d, other);
    }
    if subjects.is_empty() {
        return Err(SearchError::NoEligibleSubject);
    }
    let probs = selection_probabilities(&subject_weights(d, &subjects, cfg.subject_weighting));
    let pick = WeightedIndex::new(&probs).expect("positive weights");
    let subject = subjects[pick.sample(rng)];

    let mut d = d.clone();
    let rule = match subject {
        Subject::Lc(u) => {
            congruence_lc_unchecked(&mut d, u);
            RewriteRule::CongruenceLC
        }
        Subject::Pivot(u, v) => {
            congruence_pivot_unchecked(&mut d, u, v);
            RewriteRule::CongruencePivot
        }
    };
    if !is_graph_like(&d) {
        d = to_graph_like(&d);
    }
    let mut steps = vec![RewriteStep {
        rule,
        subjects: subject.vertices(),
        timestamp: 0,
    }];
    if rng.gen_bool(cfg.p_fr) {
        let (s, simp) = simplify_to_fixpoint(&d);
        d = s;
        steps.extend(simp);
    }
    Ok((d, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{random_circuit, CircuitParams};
    use crate::oracle::{equal_up_to_scalar, evaluate_diagram};
    use crate::phase::Phase;
    use crate::zx::{from_circuit, EdgeType};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn triangle() -> ZxDiagram {
        let mut d = ZxDiagram::new();
        let vs: Vec<_> = (0..3).map(|_| d.add_spider(Phase::zero())).collect();
        d.add_edge(vs[0], vs[1], EdgeType::Hadamard);
        d.add_edge(vs[1], vs[2], EdgeType::Hadamard);
        d.add_edge(vs[0], vs[2], EdgeType::Hadamard);
        d
    }

    #[test]
    fn degree_weights_give_proportional_probabilities() {
        assert_eq!(
            selection_probabilities(&[1.0, 1.0, 2.0]),
            vec![0.25, 0.25, 0.5]
        );
        assert_eq!(selection_probabilities(&[0.0, 0.0]), vec![0.5, 0.5]);
    }

    #[test]
    fn path_weights() {
        // a - b - c
        let mut d = ZxDiagram::new();
        let a = d.add_spider(Phase::zero());
        let b = d.add_spider(Phase::zero());
        let c = d.add_spider(Phase::zero());
        d.add_edge(a, b, EdgeType::Hadamard);
        d.add_edge(b, c, EdgeType::Hadamard);
        let lc = [Subject::Lc(a), Subject::Lc(b)];
        assert_eq!(
            subject_weights(&d, &lc, SubjectWeighting::Degree),
            vec![1.0, 2.0]
        );
        assert_eq!(
            subject_weights(&d, &lc, SubjectWeighting::NeighborDegreeSum),
            vec![2.0, 2.0]
        );
        assert_eq!(
            subject_weights(&d, &lc, SubjectWeighting::NeighborDegreeAvg),
            vec![2.0, 1.0]
        );
        assert_eq!(
            subject_weights(&d, &lc, SubjectWeighting::LoadCentrality),
            vec![0.0, 1.0]
        );
        assert_eq!(
            subject_weights(&d, &lc, SubjectWeighting::EdgeBetweenness),
            vec![2.0, 4.0]
        );
        let pv = [Subject::Pivot(a, b)];
        assert_eq!(
            subject_weights(&d, &pv, SubjectWeighting::Degree),
            vec![3.0]
        );
        assert_eq!(
            subject_weights(&d, &pv, SubjectWeighting::NeighborDegreeSum),
            vec![1.0]
        );
        assert_eq!(
            subject_weights(&d, &pv, SubjectWeighting::EdgeBetweenness),
            vec![2.0]
        );
    }

    #[test]
    fn uniform_choice_over_three_subjects() {
        let d = triangle();
        let cfg = SearchConfig {
            p_lc: 1.0,
            p_pivot: 0.0,
            p_fr: 0.0,
            ..SearchConfig::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut counts = HashMap::new();
        let n = 3000;
        for _ in 0..n {
            let (_, step) = neighbor(&d, &cfg, &mut rng).unwrap();
            assert_eq!(step.rule, RewriteRule::CongruenceLC);
            *counts.entry(step.subjects[0]).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 3);
        for &c in counts.values() {
            let f = c as f64 / n as f64;
            assert!((f - 1.0 / 3.0).abs() < 0.04, "{f}");
        }
    }

    #[test]
    fn p_lc_extremes() {
        let c = random_circuit(&CircuitParams::new(3, 30), 5).unwrap();
        let (d, _) = simplify_to_fixpoint(&from_circuit(&c));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (p_lc, rule) in [
            (1.0, RewriteRule::CongruenceLC),
            (0.0, RewriteRule::CongruencePivot),
        ] {
            let cfg = SearchConfig {
                p_lc,
                p_pivot: 1.0 - p_lc,
                ..SearchConfig::default()
            };
            for _ in 0..50 {
                let (_, step) = neighbor(&d, &cfg, &mut rng).unwrap();
                assert_eq!(step.rule, rule);
            }
        }
    }

    #[test]
    fn no_subjects() {
        let mut d = ZxDiagram::new();
        d.add_spider(Phase::zero());
        d.add_spider(Phase::new(1, 4));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(
            neighbor(&d, &SearchConfig::default(), &mut rng).unwrap_err(),
            SearchError::NoEligibleSubject
        );
    }

    #[test]
    fn neighbours_are_sound_and_graph_like() {
        let c = random_circuit(&CircuitParams::new(3, 24), 8).unwrap();
        let (mut d, _) = simplify_to_fixpoint(&from_circuit(&c));
        let target = evaluate_diagram(&d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for &w in SubjectWeighting::ALL {
            let cfg = SearchConfig {
                subject_weighting: w,
                p_fr: 0.3,
                ..SearchConfig::default()
            };
            for _ in 0..5 {
                d = neighbor(&d, &cfg, &mut rng).unwrap().0;
                assert!(is_graph_like(&d));
                let m = evaluate_diagram(&d).unwrap();
                assert!(equal_up_to_scalar(&target, &m, 1e-8).unwrap(), "{w}");
            }
        }
    }
}
