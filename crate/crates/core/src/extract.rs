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

//! Circuit extraction from graph-like diagrams.
//!
//! Gates are peeled off the output side. Each round cleans the frontier
//! (Hadamards, phases and CZs between frontier spiders become gates), removes
//! phase gadgets hanging off frontier neighbours by pivoting, then row-reduces
//! the biadjacency matrix between the frontier and its neighbours over GF(2),
//! emitting a CNOT per row operation, until some frontier spider has a
//! single neighbour and can be replaced by it.

use crate::circuit::{Circuit, Gate};
use crate::phase::Phase;
use crate::rewrite::{check_lc_simp, check_pivot_simp, lc_simp_unchecked, pivot_simp_unchecked};
use crate::zx::{EdgeType, ZxDiagram, V};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractError {
    #[error("extraction stuck: no frontier progress possible (frontier {frontier:?}, neighbours {neighbors:?})")]
    Stuck {
        frontier: BTreeMap<usize, V>,
        neighbors: Vec<V>,
    },
    #[error("diagram has {inputs} inputs but {outputs} outputs")]
    NotSquare { inputs: usize, outputs: usize },
    #[error("diagram is not graph-like")]
    NotGraphLike,
}

/// Gate counts of a raw extracted circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExtractionReport {
    pub cnot_count: usize,
    pub cz_count: usize,
    pub h_count: usize,
    pub phase_count: usize,
}

/// Extract a circuit over `{H, Z(a), CNOT, CZ}` implementing the diagram up
/// to a global scalar.
pub fn extract_circuit(d: &ZxDiagram) -> Result<Circuit, ExtractError> {
    Extractor::new(d)?.run()
}

/// Gate counts of [`extract_circuit`]'s output, before any peephole cleanup.
pub fn extraction_report(d: &ZxDiagram) -> Result<ExtractionReport, ExtractError> {
    let c = extract_circuit(d)?;
    let mut r = ExtractionReport::default();
    for g in c.gates() {
        match g {
            Gate::Cnot { .. } => r.cnot_count += 1,
            Gate::Cz(..) => r.cz_count += 1,
            Gate::H(_) => r.h_count += 1,
            Gate::ZPhase(..) | Gate::XPhase(..) => r.phase_count += 1,
        }
    }
    Ok(r)
}

/// A row-major GF(2) matrix with rows as bit vectors over the columns.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Gf2Matrix {
    rows: Vec<Vec<bool>>,
}

impl Gf2Matrix {
    fn weight(&self, r: usize) -> usize {
        self.rows[r].iter().filter(|&&b| b).count()
    }

    fn add_row(&mut self, target: usize, source: usize) {
        let src = self.rows[source].clone();
        for (t, s) in self.rows[target].iter_mut().zip(src) {
            *t ^= s;
        }
    }

    /// Row operations `(target, source)` bringing the matrix to reduced
    /// echelon form. Pivots go left to right; the pivot row is the
    /// lowest-index candidate.
    fn gauss(&mut self) -> Vec<(usize, usize)> {
        let mut ops = Vec::new();
        let (nr, nc) = (self.rows.len(), self.rows.first().map_or(0, Vec::len));
        let mut r = 0;
        for col in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&k| self.rows[k][col]) else {
                continue;
            };
            if p != r {
                self.add_row(r, p);
                ops.push((r, p));
            }
            for k in 0..nr {
                if k != r && self.rows[k][col] {
                    self.add_row(k, r);
                    ops.push((k, r));
                }
            }
            r += 1;
        }
        ops
    }
}

struct Extractor {
    d: ZxDiagram,
    /// qubit -> frontier spider, for qubits not yet finished
    frontier: BTreeMap<usize, V>,
    /// gates in reverse temporal order
    rev: Vec<Gate>,
    n: usize,
}

impl Extractor {
    fn new(d: &ZxDiagram) -> Result<Extractor, ExtractError> {
        let (ni, no) = (d.inputs().len(), d.outputs().len());
        if ni != no {
            return Err(ExtractError::NotSquare {
                inputs: ni,
                outputs: no,
            });
        }
        let mut frontier = BTreeMap::new();
        for (q, &o) in d.outputs().iter().enumerate() {
            let ns = d.neighbor_vec(o);
            if ns.len() != 1 || d.degree(o) != 1 {
                return Err(ExtractError::NotGraphLike);
            }
            if !d.is_boundary(ns[0]) {
                frontier.insert(q, ns[0]);
            }
        }
        Ok(Extractor {
            d: d.clone(),
            frontier,
            rev: Vec::new(),
            n: no,
        })
    }

    fn output(&self, q: usize) -> V {
        self.d.outputs()[q]
    }

    fn is_input(&self, v: V) -> bool {
        self.d.inputs().contains(&v)
    }

    fn run(mut self) -> Result<Circuit, ExtractError> {
        loop {
            self.clean_frontier();
            self.detach_inputs();
            if self.frontier.is_empty() {
                break;
            }
            if let Err(e) = self.advance() {
                if !self.unstick() {
                    return Err(e);
                }
            }
        }
        self.finish()
    }

    /// Turn output-side Hadamards, frontier phases and frontier-frontier
    /// edges into gates.
    fn clean_frontier(&mut self) {
        let entries: Vec<(usize, V)> = self.frontier.iter().map(|(&q, &v)| (q, v)).collect();
        for &(q, v) in &entries {
            let o = self.output(q);
            if self.d.edge_type(o, v) == Some(EdgeType::Hadamard) {
                self.rev.push(Gate::H(q));
                self.d.set_edge_type(o, v, EdgeType::Simple);
            }
            let p = self.d.phase(v);
            if !p.is_zero() {
                self.rev.push(Gate::ZPhase(q, p));
                self.d.set_phase(v, Phase::zero());
            }
        }
        for (i, &(q, v)) in entries.iter().enumerate() {
            for &(r, w) in &entries[i + 1..] {
                if self.d.connected(v, w) {
                    self.rev.push(Gate::Cz(q, r));
                    self.d.remove_all_edges(v, w);
                }
            }
        }
    }

    /// Finish qubits whose frontier spider only touches its input, and put an
    /// identity spider between the others and any input they touch.
    fn detach_inputs(&mut self) {
        let entries: Vec<(usize, V)> = self.frontier.iter().map(|(&q, &v)| (q, v)).collect();
        for (q, v) in entries {
            let o = self.output(q);
            let Some(b) = self.d.neighbors(v).find(|&w| w != o && self.is_input(w)) else {
                continue;
            };
            if self.d.neighbors(v).all(|w| w == o || w == b) {
                self.frontier.remove(&q);
                continue;
            }
            let t = self.d.edge_type(v, b).expect("single edge");
            self.d.remove_all_edges(v, b);
            let z = self.d.add_spider(Phase::zero());
            self.d.add_edge(b, z, t.toggle());
            self.d.add_edge(z, v, EdgeType::Hadamard);
        }
    }

    /// Spider neighbours of the frontier, excluding frontier spiders.
    fn frontier_neighbors(&self) -> Vec<V> {
        let fset: BTreeSet<V> = self.frontier.values().copied().collect();
        let mut ns = BTreeSet::new();
        for &v in self.frontier.values() {
            for w in self.d.neighbors(v) {
                if !self.d.is_boundary(w) && !fset.contains(&w) {
                    ns.insert(w);
                }
            }
        }
        ns.into_iter().collect()
    }

    /// If a frontier neighbour `w` is an interior Pauli spider (rooting a phase
    /// gadget when `require_leaf` is set), pivot it with one of its frontier
    /// spiders `v` after unfusing the output wire of `v`.
    fn remove_gadget(&mut self, require_leaf: bool) -> bool {
        let fset: BTreeSet<V> = self.frontier.values().copied().collect();
        for w in self.frontier_neighbors() {
            if !self.d.phase(w).is_pauli() || !self.d.is_interior(w) {
                continue;
            }
            let is_leaf =
                |l: V| self.d.degree(l) == 1 && !self.d.is_boundary(l) && !fset.contains(&l);
            if require_leaf && !self.d.neighbors(w).any(is_leaf) {
                continue;
            }
            let (q, v) = self
                .frontier
                .iter()
                .map(|(&q, &v)| (q, v))
                .find(|&(_, v)| self.d.connected(v, w))
                .expect("w neighbours the frontier");
            let o = self.output(q);
            // o - z1 - H - z2 - H - v is the plain wire o - v
            self.d.remove_all_edges(o, v);
            let z1 = self.d.add_spider(Phase::zero());
            let z2 = self.d.add_spider(Phase::zero());
            self.d.add_edge(o, z1, EdgeType::Simple);
            self.d.add_edge(z1, z2, EdgeType::Hadamard);
            self.d.add_edge(z2, v, EdgeType::Hadamard);
            pivot_simp_unchecked(&mut self.d, v, w);
            self.frontier.insert(q, z1);
            return true;
        }
        false
    }

    /// Phase gadgets and Clifford spiders left behind by congruences can block
    /// elimination. Each call removes one interior spider, preferring
    /// frontier neighbours.
    fn unstick(&mut self) -> bool {
        if self.remove_gadget(true) {
            return true;
        }
        let ns = self.frontier_neighbors();
        if let Some(&w) = ns.iter().find(|&&w| check_lc_simp(&self.d, w)) {
            lc_simp_unchecked(&mut self.d, w);
            return true;
        }
        if self.remove_gadget(false) {
            return true;
        }
        let spiders: Vec<V> = self.d.spiders().collect();
        for &u in &spiders {
            if check_lc_simp(&self.d, u) {
                lc_simp_unchecked(&mut self.d, u);
                return true;
            }
        }
        for &u in &spiders {
            let v = self
                .d
                .neighbors(u)
                .find(|&v| check_pivot_simp(&self.d, u, v));
            if let Some(v) = v {
                pivot_simp_unchecked(&mut self.d, u, v);
                return true;
            }
        }
        false
    }

    /// Row-reduce the biadjacency matrix just far enough to find a frontier
    /// spider with exactly one neighbour, then replace each such spider with
    /// its neighbour.
    fn advance(&mut self) -> Result<(), ExtractError> {
        let qs: Vec<usize> = self.frontier.keys().copied().collect();
        let cols = self.frontier_neighbors();
        let mut m = Gf2Matrix {
            rows: qs
                .iter()
                .map(|q| {
                    cols.iter()
                        .map(|&w| self.d.connected(self.frontier[q], w))
                        .collect()
                })
                .collect(),
        };

        let has_unit = |m: &Gf2Matrix| (0..m.rows.len()).any(|r| m.weight(r) == 1);
        if !has_unit(&m) {
            let ops = match self.single_op(&m) {
                Some(op) => vec![op],
                None => m.clone().gauss(),
            };
            let mut m2 = m.clone();
            for &(t, s) in &ops {
                m2.add_row(t, s);
            }
            if !has_unit(&m2) {
                return Err(ExtractError::Stuck {
                    frontier: self.frontier.clone(),
                    neighbors: cols,
                });
            }
            for (t, s) in ops {
                self.row_op(qs[t], qs[s], &cols);
            }
            m = m2;
        }

        let mut taken = BTreeSet::new();
        for (r, &q) in qs.iter().enumerate() {
            if m.weight(r) != 1 {
                continue;
            }
            let c = m.rows[r].iter().position(|&b| b).unwrap();
            if !taken.insert(c) {
                continue;
            }
            let (v, w) = (self.frontier[&q], cols[c]);
            let o = self.output(q);
            self.d.remove_vertex(v);
            self.d.add_edge(o, w, EdgeType::Hadamard);
            self.frontier.insert(q, w);
        }
        Ok(())
    }

    /// A single row addition that leaves some row with weight one.
    fn single_op(&self, m: &Gf2Matrix) -> Option<(usize, usize)> {
        let nr = m.rows.len();
        for t in 0..nr {
            for s in 0..nr {
                if s != t {
                    let w = m.rows[t]
                        .iter()
                        .zip(&m.rows[s])
                        .filter(|(a, b)| a != b)
                        .count();
                    if w == 1 {
                        return Some((t, s));
                    }
                }
            }
        }
        None
    }

    /// Add the neighbourhood of the frontier spider on `qs` to that on `qt`,
    /// recording the CNOT that undoes it at the outputs.
    fn row_op(&mut self, qt: usize, qs: usize, cols: &[V]) {
        let (vt, vs) = (self.frontier[&qt], self.frontier[&qs]);
        for &w in cols {
            if self.d.connected(vs, w) {
                self.d.toggle_hadamard(vt, w);
            }
        }
        self.rev.push(Gate::Cnot {
            control: qt,
            target: qs,
        });
    }

    /// Every qubit now runs straight from an input to an output, possibly
    /// through a Hadamard; realise the wiring with Hadamards and swaps.
    fn finish(mut self) -> Result<Circuit, ExtractError> {
        let n = self.n;
        let mut source = vec![0; n];
        let mut had = vec![false; n];
        for (q, src) in source.iter_mut().enumerate() {
            let o = self.output(q);
            let v = self.d.neighbors(o).next().expect("outputs keep one edge");
            let (b, t) = if self.is_input(v) {
                (v, self.d.edge_type(o, v).unwrap())
            } else {
                let b = self.d.neighbors(v).find(|&w| w != o).unwrap();
                let t = self
                    .d
                    .edge_type(o, v)
                    .unwrap()
                    .compose(self.d.edge_type(v, b).unwrap());
                (b, t)
            };
            let p = self.d.inputs().iter().position(|&i| i == b).unwrap();
            *src = p;
            had[p] = t == EdgeType::Hadamard;
        }

        let mut gates: Vec<Gate> = (0..n).filter(|&p| had[p]).map(Gate::H).collect();
        let mut at: Vec<usize> = (0..n).collect();
        for q in 0..n {
            if at[q] != source[q] {
                let j = (q + 1..n).find(|&j| at[j] == source[q]).unwrap();
                gates.push(Gate::Cnot {
                    control: q,
                    target: j,
                });
                gates.push(Gate::Cnot {
                    control: j,
                    target: q,
                });
                gates.push(Gate::Cnot {
                    control: q,
                    target: j,
                });
                at.swap(q, j);
            }
        }
        self.rev.reverse();
        gates.append(&mut self.rev);
        Ok(Circuit::from_gates(n, gates).expect("extracted gates are in range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{basic_optimize, random_circuit, CircuitParams};
    use crate::oracle::{equal_up_to_scalar, evaluate_circuit, evaluate_diagram};
    use crate::rewrite::simplify_to_fixpoint;
    use crate::zx::{from_circuit, to_graph_like, VertexKind};

    fn check(d: &ZxDiagram) -> Circuit {
        let c = extract_circuit(d).unwrap();
        let a = evaluate_diagram(d).unwrap();
        let b = evaluate_circuit(&c).unwrap();
        assert!(equal_up_to_scalar(&a, &b, 1e-8).unwrap());
        c
    }

    #[test]
    fn bare_wires() {
        let d = from_circuit(&Circuit::new(3));
        assert!(check(&d).is_empty());
        assert_eq!(extraction_report(&d).unwrap(), ExtractionReport::default());
    }

    #[test]
    fn single_hadamard() {
        let c = Circuit::from_gates(1, vec![Gate::H(0)]).unwrap();
        let d = to_graph_like(&from_circuit(&c));
        assert_eq!(basic_optimize(&check(&d)).gates(), c.gates());
    }

    #[test]
    fn one_phase_one_gate() {
        let mut d = ZxDiagram::new();
        let i = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let z = d.add_spider(Phase::new(1, 4));
        d.add_edge(i, z, EdgeType::Simple);
        d.add_edge(z, o, EdgeType::Simple);
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        assert_eq!(extraction_report(&d).unwrap().phase_count, 1);
        check(&d);
    }

    #[test]
    fn permutation_and_hadamard_wires() {
        let c = Circuit::from_gates(
            3,
            vec![
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
                Gate::Cnot {
                    control: 1,
                    target: 0,
                },
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
                Gate::H(2),
            ],
        )
        .unwrap();
        check(&simplify_to_fixpoint(&from_circuit(&c)).0);
    }

    #[test]
    fn random_circuits_round_trip() {
        for seed in 0..200 {
            let n = 2 + (seed as usize % 5);
            let c = random_circuit(&CircuitParams::new(n, 8 * n), seed).unwrap();
            let d = from_circuit(&c);
            let (s, _) = simplify_to_fixpoint(&d);
            let e = extract_circuit(&s).unwrap_or_else(|err| panic!("seed {seed}: {err}"));
            let a = evaluate_circuit(&c).unwrap();
            let b = evaluate_circuit(&e).unwrap();
            assert!(equal_up_to_scalar(&a, &b, 1e-8).unwrap(), "seed {seed}");
            assert!(e.gates().iter().all(|g| !matches!(g, Gate::XPhase(..))));
        }
    }

    #[test]
    fn deterministic() {
        let c = random_circuit(&CircuitParams::new(5, 60), 77).unwrap();
        let (s, _) = simplify_to_fixpoint(&from_circuit(&c));
        assert_eq!(extract_circuit(&s).unwrap(), extract_circuit(&s).unwrap());
    }

    #[test]
    fn gauss_reduces() {
        let mut m = Gf2Matrix {
            rows: vec![
                vec![true, true, false],
                vec![true, true, true],
                vec![false, true, true],
            ],
        };
        let orig = m.clone();
        let ops = m.gauss();
        assert_eq!(
            m.rows,
            vec![
                vec![true, false, false],
                vec![false, true, false],
                vec![false, false, true]
            ]
        );
        let mut replay = orig;
        for (t, s) in ops {
            replay.add_row(t, s);
        }
        assert_eq!(replay, m);
    }
}
