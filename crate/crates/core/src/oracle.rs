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

//! Dense evaluation of circuits and ZX-diagrams, for checking equality up to
//! a global scalar on small instances.

use crate::circuit::{Circuit, Gate};
use crate::zx::{EdgeType, VertexKind, ZxDiagram, V};
use num_complex::Complex64;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} of {size} exceeds the oracle cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),
    #[error("boundary vertex {0} must have exactly one edge")]
    BadBoundary(V),
}

/// Limits on what the oracle will attempt to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_qubits: usize,
    pub max_wires: usize,
    /// Largest intermediate tensor rank during diagram contraction.
    pub max_rank: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_qubits: 10,
            max_wires: 12,
            max_rank: 26,
        }
    }
}

impl OracleConfig {
    /// Defaults, with `ZXOPT_ORACLE_CAP=n` raising or lowering the qubit cap
    /// to `n` and the diagram wire cap to `2n`.
    pub fn from_env() -> OracleConfig {
        let mut cfg = OracleConfig::default();
        if let Some(n) = std::env::var("ZXOPT_ORACLE_CAP")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            cfg.max_qubits = n;
            cfg.max_wires = 2 * n;
        }
        cfg
    }
}

/// A `2^outputs x 2^inputs` complex matrix. Qubit 0 is the most significant
/// bit of the row and column indices.
#[derive(Clone, PartialEq)]
pub struct LinearMap {
    n_out: usize,
    n_in: usize,
    data: Vec<Complex64>,
}

impl LinearMap {
    pub fn identity(n: usize) -> LinearMap {
        let dim = 1 << n;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        LinearMap {
            n_out: n,
            n_in: n,
            data,
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> LinearMap {
        let r = rows.len();
        let c = rows[0].len();
        assert!(r.is_power_of_two() && c.is_power_of_two());
        assert!(rows.iter().all(|row| row.len() == c));
        LinearMap {
            n_out: r.trailing_zeros() as usize,
            n_in: c.trailing_zeros() as usize,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        1 << self.n_out
    }

    pub fn cols(&self) -> usize {
        1 << self.n_in
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols() + c]
    }

    pub fn scale(&self, s: Complex64) -> LinearMap {
        LinearMap {
            data: self.data.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.max_abs().1
    }

    fn max_abs(&self) -> (usize, f64) {
        let mut best = (0, 0.0);
        for (i, x) in self.data.iter().enumerate() {
            if x.norm() > best.1 {
                best = (i, x.norm());
            }
        }
        best
    }

    fn apply_1q(&mut self, n: usize, q: usize, m: [[Complex64; 2]; 2]) {
        let bit = 1 << (n - 1 - q);
        let cols = self.cols();
        for r in 0..self.rows() {
            if r & bit != 0 {
                continue;
            }
            let (r0, r1) = (r * cols, (r | bit) * cols);
            for c in 0..cols {
                let (a, b) = (self.data[r0 + c], self.data[r1 + c]);
                self.data[r0 + c] = m[0][0] * a + m[0][1] * b;
                self.data[r1 + c] = m[1][0] * a + m[1][1] * b;
            }
        }
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{}", self.rows(), self.cols())?;
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                let x = self.get(r, c);
                write!(f, " {:+.4}{:+.4}i", x.re, x.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn expi(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// The unitary of a circuit, gates applied in order.
pub fn evaluate_circuit(circ: &Circuit) -> Result<LinearMap, OracleError> {
    evaluate_circuit_with(circ, &OracleConfig::default())
}

pub fn evaluate_circuit_with(circ: &Circuit, cfg: &OracleConfig) -> Result<LinearMap, OracleError> {
    let n = circ.n_qubits();
    if n > cfg.max_qubits {
        return Err(OracleError::CapExceeded {
            what: "qubit count",
            size: n,
            cap: cfg.max_qubits,
        });
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut u = LinearMap::identity(n);
    let zero = c(0.0);
    for g in circ.gates() {
        match *g {
            Gate::H(q) => u.apply_1q(n, q, [[c(s), c(s)], [c(s), c(-s)]]),
            Gate::ZPhase(q, p) => u.apply_1q(n, q, [[c(1.0), zero], [zero, expi(p.to_f64())]]),
            Gate::XPhase(q, p) => {
                let e = expi(p.to_f64());
                let (a, b) = ((c(1.0) + e) * 0.5, (c(1.0) - e) * 0.5);
                u.apply_1q(n, q, [[a, b], [b, a]]);
            }
            Gate::Cnot { control, target } => {
                let (cb, tb) = (1 << (n - 1 - control), 1 << (n - 1 - target));
                let cols = u.cols();
                for r in 0..u.rows() {
                    if r & cb != 0 && r & tb == 0 {
                        let (r0, r1) = (r * cols, (r | tb) * cols);
                        for k in 0..cols {
                            u.data.swap(r0 + k, r1 + k);
                        }
                    }
                }
            }
            Gate::Cz(a, b) => {
                let mask = (1 << (n - 1 - a)) | (1 << (n - 1 - b));
                let cols = u.cols();
                for r in 0..u.rows() {
                    if r & mask == mask {
                        for x in &mut u.data[r * cols..(r + 1) * cols] {
                            *x = -*x;
                        }
                    }
                }
            }
        }
    }
    Ok(u)
}

/// A dense tensor over qubit-dimension indices; `labels[0]` is the most
/// significant index.
#[derive(Clone, Debug)]
struct Tensor {
    labels: Vec<usize>,
    data: Vec<Complex64>,
}

impl Tensor {
    /// Reorder the indices to `order`, a permutation of `self.labels`.
    fn permuted(&self, order: &[usize]) -> Vec<Complex64> {
        let r = self.labels.len();
        if order == self.labels.as_slice() {
            return self.data.clone();
        }
        // shift of each new position in the old index
        let shifts: Vec<usize> = order
            .iter()
            .map(|l| r - 1 - self.labels.iter().position(|x| x == l).unwrap())
            .collect();
        let mut out = vec![c(0.0); self.data.len()];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut old = 0;
            for (k, sh) in shifts.iter().enumerate() {
                if i >> (r - 1 - k) & 1 == 1 {
                    old |= 1 << sh;
                }
            }
            *slot = self.data[old];
        }
        out
    }

    fn contract(&self, other: &Tensor) -> Tensor {
        let shared: Vec<usize> = self
            .labels
            .iter()
            .copied()
            .filter(|l| other.labels.contains(l))
            .collect();
        let fa: Vec<usize> = self
            .labels
            .iter()
            .copied()
            .filter(|l| !shared.contains(l))
            .collect();
        let fb: Vec<usize> = other
            .labels
            .iter()
            .copied()
            .filter(|l| !shared.contains(l))
            .collect();
        let a = self.permuted(&[fa.as_slice(), shared.as_slice()].concat());
        let b = other.permuted(&[shared.as_slice(), fb.as_slice()].concat());
        let (m, k, n) = (1 << fa.len(), 1 << shared.len(), 1 << fb.len());
        let mut out = vec![c(0.0); m * n];
        for i in 0..m {
            for s in 0..k {
                let x = a[i * k + s];
                if x == c(0.0) {
                    continue;
                }
                let row = &b[s * n..(s + 1) * n];
                for (o, y) in out[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += x * y;
                }
            }
        }
        Tensor {
            labels: [fa, fb].concat(),
            data: out,
        }
    }
}

/// Contract a ZX-diagram into the linear map from its inputs to its outputs.
pub fn evaluate_diagram(d: &ZxDiagram) -> Result<LinearMap, OracleError> {
    evaluate_diagram_with(d, &OracleConfig::default())
}

pub fn evaluate_diagram_with(d: &ZxDiagram, cfg: &OracleConfig) -> Result<LinearMap, OracleError> {
    let wires = d.inputs().len() + d.outputs().len();
    if wires > cfg.max_wires {
        return Err(OracleError::CapExceeded {
            what: "boundary wire count",
            size: wires,
            cap: cfg.max_wires,
        });
    }

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut next_label = 0;
    let mut legs: HashMap<V, Vec<usize>> = HashMap::new();
    let mut tensors = Vec::new();

    for (u, v, ty) in d.edge_list() {
        let (a, b) = (next_label, next_label + 1);
        next_label += 2;
        legs.entry(u).or_default().push(a);
        legs.entry(v).or_default().push(b);
        let data = match ty {
            EdgeType::Simple => vec![c(1.0), c(0.0), c(0.0), c(1.0)],
            EdgeType::Hadamard => vec![c(s), c(s), c(s), c(-s)],
        };
        tensors.push(Tensor {
            labels: vec![a, b],
            data,
        });
    }

    let mut open: HashMap<V, usize> = HashMap::new();
    for v in d.vertices() {
        let vd = d.vertex(v);
        let ls = legs.remove(&v).unwrap_or_default();
        if vd.kind == VertexKind::Boundary {
            if ls.len() != 1 {
                return Err(OracleError::BadBoundary(v));
            }
            open.insert(v, ls[0]);
            continue;
        }
        if ls.len() > cfg.max_rank {
            return Err(OracleError::CapExceeded {
                what: "spider degree",
                size: ls.len(),
                cap: cfg.max_rank,
            });
        }
        let e = expi(vd.phase.to_f64());
        let size = 1usize << ls.len();
        let data = match vd.kind {
            VertexKind::Z => {
                let mut data = vec![c(0.0); size];
                data[0] += c(1.0);
                data[size - 1] += e;
                data
            }
            _ => (0..size)
                .map(|i| {
                    if i.count_ones() % 2 == 0 {
                        c(1.0) + e
                    } else {
                        c(1.0) - e
                    }
                })
                .collect(),
        };
        tensors.push(Tensor { labels: ls, data });
    }

    let mut result = contract_all(tensors, cfg.max_rank)?;
    let order: Vec<usize> = d
        .outputs()
        .iter()
        .chain(d.inputs())
        .map(|b| open[b])
        .collect();
    if result.labels.is_empty() && !order.is_empty() {
        unreachable!("open legs vanished");
    }
    result.data = result.permuted(&order);
    Ok(LinearMap {
        n_out: d.outputs().len(),
        n_in: d.inputs().len(),
        data: result.data,
    })
}

/// Greedy pairwise contraction, always choosing the pair with the smallest
/// result.
fn contract_all(mut tensors: Vec<Tensor>, max_rank: usize) -> Result<Tensor, OracleError> {
    if tensors.is_empty() {
        return Ok(Tensor {
            labels: vec![],
            data: vec![c(1.0)],
        });
    }
    while tensors.len() > 1 {
        let mut owner: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, t) in tensors.iter().enumerate() {
            for &l in &t.labels {
                owner.entry(l).or_default().push(i);
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for ts in owner.values() {
            if ts.len() != 2 {
                continue;
            }
            let (i, j) = (ts[0].min(ts[1]), ts[0].max(ts[1]));
            let shared = tensors[i]
                .labels
                .iter()
                .filter(|l| tensors[j].labels.contains(l))
                .count();
            let rank = tensors[i].labels.len() + tensors[j].labels.len() - 2 * shared;
            let cand = (rank, i, j);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
        let (rank, i, j) = best.unwrap_or_else(|| {
            // disconnected: take an outer product of the two smallest
            let mut idx: Vec<usize> = (0..tensors.len()).collect();
            idx.sort_by_key(|&k| (tensors[k].labels.len(), k));
            let (i, j) = (idx[0].min(idx[1]), idx[0].max(idx[1]));
            (tensors[i].labels.len() + tensors[j].labels.len(), i, j)
        });
        if rank > max_rank {
            return Err(OracleError::CapExceeded {
                what: "intermediate tensor rank",
                size: rank,
                cap: max_rank,
            });
        }
        let b = tensors.swap_remove(j);
        let a = tensors.swap_remove(i);
        tensors.push(a.contract(&b));
    }
    Ok(tensors.pop().unwrap())
}

/// Whether `a = lambda * b` for some non-zero `lambda`, within `tol` after
/// scaling both maps so their largest entry has modulus 1. The scalar is
/// read off the largest-magnitude entry of `b`. The check runs in both
/// directions, so it is symmetric.
pub fn equal_up_to_scalar(a: &LinearMap, b: &LinearMap, tol: f64) -> Result<bool, OracleError> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(OracleError::ShapeMismatch(
            (a.rows(), a.cols()),
            (b.rows(), b.cols()),
        ));
    }
    Ok(one_way(a, b, tol) && one_way(b, a, tol))
}

fn one_way(a: &LinearMap, b: &LinearMap, tol: f64) -> bool {
    let (_, na) = a.max_abs();
    let (j, nb) = b.max_abs();
    match (na == 0.0, nb == 0.0) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    let lambda = (a.data[j] / na) / (b.data[j] / nb);
    a.data
        .iter()
        .zip(&b.data)
        .all(|(x, y)| (x / na - lambda * (y / nb)).norm() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;
    use crate::zx::ZxDiagram;

    fn close(a: &LinearMap, b: &LinearMap) -> bool {
        a.data
            .iter()
            .zip(&b.data)
            .all(|(x, y)| (x - y).norm() < 1e-12)
    }

    fn m(rows: &[&[f64]]) -> LinearMap {
        LinearMap::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| c(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn empty_circuit_is_identity() {
        assert!(close(
            &evaluate_circuit(&Circuit::new(1)).unwrap(),
            &LinearMap::identity(1)
        ));
    }

    #[test]
    fn hadamard_matrix() {
        let circ = Circuit::from_gates(1, vec![Gate::H(0)]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(close(
            &evaluate_circuit(&circ).unwrap(),
            &m(&[&[s, s], &[s, -s]])
        ));
    }

    #[test]
    fn cnot_matrix() {
        let circ = Circuit::from_gates(
            2,
            vec![Gate::Cnot {
                control: 0,
                target: 1,
            }],
        )
        .unwrap();
        let expected = m(&[
            &[1., 0., 0., 0.],
            &[0., 1., 0., 0.],
            &[0., 0., 0., 1.],
            &[0., 0., 1., 0.],
        ]);
        assert!(close(&evaluate_circuit(&circ).unwrap(), &expected));
    }

    #[test]
    fn cz_and_x_phase() {
        let circ = Circuit::from_gates(2, vec![Gate::Cz(1, 0)]).unwrap();
        let expected = m(&[
            &[1., 0., 0., 0.],
            &[0., 1., 0., 0.],
            &[0., 0., 1., 0.],
            &[0., 0., 0., -1.],
        ]);
        assert!(close(&evaluate_circuit(&circ).unwrap(), &expected));
        let x = Circuit::from_gates(1, vec![Gate::XPhase(0, Phase::pi())]).unwrap();
        assert!(close(
            &evaluate_circuit(&x).unwrap(),
            &m(&[&[0., 1.], &[1., 0.]])
        ));
    }

    #[test]
    fn qubit_cap() {
        let cfg = OracleConfig {
            max_qubits: 3,
            ..Default::default()
        };
        assert!(evaluate_circuit_with(&Circuit::new(4), &cfg).is_err());
    }

    fn one_spider(kind: VertexKind, phase: Phase) -> ZxDiagram {
        let mut d = ZxDiagram::new();
        let i = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let o = d.add_vertex(VertexKind::Boundary, Phase::zero());
        let z = d.add_vertex(kind, phase);
        d.add_edge(i, z, EdgeType::Simple);
        d.add_edge(z, o, EdgeType::Simple);
        d.set_inputs(vec![i]);
        d.set_outputs(vec![o]);
        d
    }

    #[test]
    fn z_spider_identity_and_phase() {
        let id = evaluate_diagram(&one_spider(VertexKind::Z, Phase::zero())).unwrap();
        assert!(close(&id, &LinearMap::identity(1)));
        let a = Phase::new(1, 3);
        let got = evaluate_diagram(&one_spider(VertexKind::Z, a)).unwrap();
        let e = expi(a.to_f64());
        let want = LinearMap::from_rows(&[vec![c(1.0), c(0.0)], vec![c(0.0), e]]);
        assert!(close(&got, &want));
    }

    #[test]
    fn x_spider_pi_is_not() {
        let got = evaluate_diagram(&one_spider(VertexKind::X, Phase::pi())).unwrap();
        assert!(equal_up_to_scalar(&got, &m(&[&[0., 1.], &[1., 0.]]), 1e-12).unwrap());
    }

    #[test]
    fn scalar_equality() {
        let circ = Circuit::from_gates(
            2,
            vec![
                Gate::H(0),
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
                Gate::ZPhase(1, Phase::new(1, 4)),
            ],
        )
        .unwrap();
        let u = evaluate_circuit(&circ).unwrap();
        assert!(equal_up_to_scalar(&u, &u, 0.0).unwrap());
        let phased = u.scale(expi(std::f64::consts::PI / 7.0));
        assert!(equal_up_to_scalar(&u, &phased, 1e-12).unwrap());
        assert!(equal_up_to_scalar(&phased, &u.scale(c(3.5)), 1e-12).unwrap());
        let x = m(&[&[0., 1.], &[1., 0.]]);
        assert!(!equal_up_to_scalar(&LinearMap::identity(1), &x, 1e-8).unwrap());
        assert!(equal_up_to_scalar(&LinearMap::identity(1), &u, 1e-8).is_err());
    }

    #[test]
    fn zero_maps() {
        let z = LinearMap::identity(1).scale(c(0.0));
        assert!(equal_up_to_scalar(&z, &z, 0.0).unwrap());
        assert!(!equal_up_to_scalar(&z, &LinearMap::identity(1), 1e-8).unwrap());
        assert!(!equal_up_to_scalar(&LinearMap::identity(1), &z, 1e-8).unwrap());
    }

    #[test]
    fn contraction_order_irrelevant() {
        // the same network contracted in two different orders
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let h = |a, b| Tensor {
            labels: vec![a, b],
            data: vec![c(s), c(s), c(s), c(-s)],
        };
        let t = Tensor {
            labels: vec![0, 1, 2],
            data: (0..8)
                .map(|i| Complex64::new(i as f64, 1.0 - i as f64))
                .collect(),
        };
        let x = t.contract(&h(1, 3)).contract(&h(2, 4));
        let y = t.contract(&h(2, 4)).contract(&h(1, 3));
        let y = Tensor {
            data: y.permuted(&x.labels),
            labels: x.labels.clone(),
        };
        assert!(x
            .data
            .iter()
            .zip(&y.data)
            .all(|(p, q)| (p - q).norm() < 1e-10));
    }
}
