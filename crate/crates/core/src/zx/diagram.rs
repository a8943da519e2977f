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

//! The ZX-diagram data structure.
//!
//! Diagrams are stored as multigraphs so that intermediate states (parallel
//! edges, self-loops) produced by unnormalised rewrites can be represented
//! and evaluated. Graph-like diagrams never contain either.

use crate::phase::Phase;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type V = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexKind {
    Boundary,
    Z,
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeType {
    Simple,
    Hadamard,
}

impl EdgeType {
    pub fn toggle(self) -> EdgeType {
        match self {
            EdgeType::Simple => EdgeType::Hadamard,
            EdgeType::Hadamard => EdgeType::Simple,
        }
    }

    /// Type of the wire obtained by composing two wires through an identity
    /// spider.
    pub fn compose(self, other: EdgeType) -> EdgeType {
        if self == other {
            EdgeType::Simple
        } else {
            EdgeType::Hadamard
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexData {
    pub kind: VertexKind,
    pub phase: Phase,
}

/// Number of parallel edges of each type between a pair of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeMult {
    pub simple: u32,
    pub hadamard: u32,
}

impl EdgeMult {
    pub fn total(self) -> u32 {
        self.simple + self.hadamard
    }

    pub fn count(self, ty: EdgeType) -> u32 {
        match ty {
            EdgeType::Simple => self.simple,
            EdgeType::Hadamard => self.hadamard,
        }
    }

    fn get_mut(&mut self, ty: EdgeType) -> &mut u32 {
        match ty {
            EdgeType::Simple => &mut self.simple,
            EdgeType::Hadamard => &mut self.hadamard,
        }
    }

    /// The single edge type, if there is exactly one edge.
    pub fn single(self) -> Option<EdgeType> {
        match (self.simple, self.hadamard) {
            (1, 0) => Some(EdgeType::Simple),
            (0, 1) => Some(EdgeType::Hadamard),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZxDiagram {
    vdata: Vec<Option<VertexData>>,
    // self-loops are stored once, under the vertex's own id
    adj: Vec<BTreeMap<V, EdgeMult>>,
    inputs: Vec<V>,
    outputs: Vec<V>,
    n_vertices: usize,
}

impl ZxDiagram {
    pub fn new() -> ZxDiagram {
        ZxDiagram::default()
    }

    pub fn add_vertex(&mut self, kind: VertexKind, phase: Phase) -> V {
        let phase = if kind == VertexKind::Boundary {
            Phase::zero()
        } else {
            phase
        };
        self.vdata.push(Some(VertexData { kind, phase }));
        self.adj.push(BTreeMap::new());
        self.n_vertices += 1;
        self.vdata.len() - 1
    }

    pub fn add_spider(&mut self, phase: Phase) -> V {
        self.add_vertex(VertexKind::Z, phase)
    }

    /// Remove `v` and all its edges. Boundary lists are not updated.
    pub fn remove_vertex(&mut self, v: V) {
        let nbrs: Vec<V> = self.adj[v].keys().copied().collect();
        for w in nbrs {
            self.adj[w].remove(&v);
        }
        self.adj[v].clear();
        self.vdata[v] = None;
        self.n_vertices -= 1;
    }

    pub fn contains(&self, v: V) -> bool {
        self.vdata.get(v).is_some_and(|d| d.is_some())
    }

    pub fn vertex(&self, v: V) -> &VertexData {
        self.vdata[v].as_ref().expect("vertex does not exist")
    }

    pub fn kind(&self, v: V) -> VertexKind {
        self.vertex(v).kind
    }

    pub fn phase(&self, v: V) -> Phase {
        self.vertex(v).phase
    }

    pub fn set_phase(&mut self, v: V, p: Phase) {
        self.vdata[v].as_mut().unwrap().phase = p;
    }

    pub fn add_to_phase(&mut self, v: V, p: Phase) {
        self.vdata[v].as_mut().unwrap().phase += p;
    }

    pub fn set_kind(&mut self, v: V, k: VertexKind) {
        self.vdata[v].as_mut().unwrap().kind = k;
    }

    pub fn is_boundary(&self, v: V) -> bool {
        self.kind(v) == VertexKind::Boundary
    }

    /// Live vertex ids in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = V> + '_ {
        self.vdata
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.as_ref().map(|_| v))
    }

    /// Non-boundary vertices in increasing order.
    pub fn spiders(&self) -> impl Iterator<Item = V> + '_ {
        self.vdata.iter().enumerate().filter_map(|(v, d)| match d {
            Some(d) if d.kind != VertexKind::Boundary => Some(v),
            _ => None,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.n_vertices
    }

    /// One more than the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.vdata.len()
    }

    pub fn add_edge(&mut self, u: V, v: V, ty: EdgeType) {
        *self.adj[u].entry(v).or_default().get_mut(ty) += 1;
        if u != v {
            *self.adj[v].entry(u).or_default().get_mut(ty) += 1;
        }
    }

    pub fn add_edges(&mut self, u: V, v: V, m: EdgeMult) {
        for _ in 0..m.simple {
            self.add_edge(u, v, EdgeType::Simple);
        }
        for _ in 0..m.hadamard {
            self.add_edge(u, v, EdgeType::Hadamard);
        }
    }

    /// Remove one edge of type `ty`, returning whether there was one.
    pub fn remove_edge(&mut self, u: V, v: V, ty: EdgeType) -> bool {
        let ok = match self.adj[u].get_mut(&v) {
            Some(m) if m.count(ty) > 0 => {
                *m.get_mut(ty) -= 1;
                if m.total() == 0 {
                    self.adj[u].remove(&v);
                }
                true
            }
            _ => false,
        };
        if ok && u != v {
            let m = self.adj[v].get_mut(&u).unwrap();
            *m.get_mut(ty) -= 1;
            if m.total() == 0 {
                self.adj[v].remove(&u);
            }
        }
        ok
    }

    /// Remove every edge between `u` and `v`, returning what was there.
    pub fn remove_all_edges(&mut self, u: V, v: V) -> EdgeMult {
        let m = self.adj[u].remove(&v).unwrap_or_default();
        if u != v {
            self.adj[v].remove(&u);
        }
        m
    }

    pub fn edge_mult(&self, u: V, v: V) -> EdgeMult {
        self.adj[u].get(&v).copied().unwrap_or_default()
    }

    pub fn connected(&self, u: V, v: V) -> bool {
        self.adj[u].contains_key(&v)
    }

    /// The type of the edge between `u` and `v` when there is exactly one.
    pub fn edge_type(&self, u: V, v: V) -> Option<EdgeType> {
        self.edge_mult(u, v).single()
    }

    pub fn set_edge_type(&mut self, u: V, v: V, ty: EdgeType) {
        self.remove_all_edges(u, v);
        self.add_edge(u, v, ty);
    }

    /// Toggle the presence of a Hadamard edge, as used by graph-theoretic
    /// complementation. Assumes at most one Hadamard edge and no simple edge.
    pub fn toggle_hadamard(&mut self, u: V, v: V) {
        if !self.remove_edge(u, v, EdgeType::Hadamard) {
            self.add_edge(u, v, EdgeType::Hadamard);
        }
    }

    /// Distinct neighbours, excluding `v` itself, in increasing order.
    pub fn neighbors(&self, v: V) -> impl Iterator<Item = V> + '_ {
        self.adj[v].keys().copied().filter(move |&w| w != v)
    }

    pub fn neighbor_vec(&self, v: V) -> Vec<V> {
        self.neighbors(v).collect()
    }

    /// Neighbours with their edge multiplicities, including a self-loop entry.
    pub fn incident(&self, v: V) -> impl Iterator<Item = (V, EdgeMult)> + '_ {
        self.adj[v].iter().map(|(&w, &m)| (w, m))
    }

    /// Number of edge ends at `v`; a self-loop counts twice.
    pub fn degree(&self, v: V) -> usize {
        self.adj[v]
            .iter()
            .map(|(&w, m)| m.total() as usize * if w == v { 2 } else { 1 })
            .sum()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_list().len()
    }

    /// Every edge as `(u, v, type)` with `u <= v`, repeated by multiplicity,
    /// in a fixed order.
    pub fn edge_list(&self) -> Vec<(V, V, EdgeType)> {
        let mut es = Vec::new();
        for u in self.vertices() {
            for (&v, m) in &self.adj[u] {
                if v < u {
                    continue;
                }
                for _ in 0..m.simple {
                    es.push((u, v, EdgeType::Simple));
                }
                for _ in 0..m.hadamard {
                    es.push((u, v, EdgeType::Hadamard));
                }
            }
        }
        es
    }

    pub fn inputs(&self) -> &[V] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[V] {
        &self.outputs
    }

    pub fn set_inputs(&mut self, inputs: Vec<V>) {
        self.inputs = inputs;
    }

    pub fn set_outputs(&mut self, outputs: Vec<V>) {
        self.outputs = outputs;
    }

    /// A spider with no boundary neighbours.
    pub fn is_interior(&self, v: V) -> bool {
        !self.is_boundary(v) && self.neighbors(v).all(|w| !self.is_boundary(w))
    }

    /// The boundary neighbours of `v`.
    pub fn boundary_neighbors(&self, v: V) -> Vec<V> {
        self.neighbors(v).filter(|&w| self.is_boundary(w)).collect()
    }

    /// Phase of every spider, for comparing phase multisets.
    pub fn spider_phases(&self) -> Vec<Phase> {
        self.spiders().map(|v| self.phase(v)).collect()
    }

    /// Number of spiders whose phase is an odd multiple of pi/4.
    pub fn t_count(&self) -> usize {
        self.spiders()
            .filter(|&v| self.phase(v).is_t_like())
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multigraph_bookkeeping() {
        let mut d = ZxDiagram::new();
        let a = d.add_spider(Phase::zero());
        let b = d.add_spider(Phase::pi());
        d.add_edge(a, b, EdgeType::Hadamard);
        d.add_edge(b, a, EdgeType::Hadamard);
        d.add_edge(a, a, EdgeType::Simple);
        assert_eq!(d.edge_mult(a, b).hadamard, 2);
        assert_eq!(d.degree(a), 4);
        assert_eq!(d.degree(b), 2);
        assert_eq!(d.neighbor_vec(a), vec![b]);
        assert_eq!(d.num_edges(), 3);
        assert!(d.remove_edge(a, b, EdgeType::Hadamard));
        assert!(!d.remove_edge(a, b, EdgeType::Simple));
        assert_eq!(d.edge_type(a, b), Some(EdgeType::Hadamard));
        d.remove_vertex(b);
        assert_eq!(d.num_vertices(), 1);
        assert_eq!(d.degree(a), 2);
        assert!(!d.contains(b));
    }

    #[test]
    fn boundary_phase_is_zero() {
        let mut d = ZxDiagram::new();
        let b = d.add_vertex(VertexKind::Boundary, Phase::pi());
        assert!(d.phase(b).is_zero());
    }

    #[test]
    fn toggle_hadamard_edge() {
        let mut d = ZxDiagram::new();
        let a = d.add_spider(Phase::zero());
        let b = d.add_spider(Phase::zero());
        d.toggle_hadamard(a, b);
        assert_eq!(d.edge_type(a, b), Some(EdgeType::Hadamard));
        d.toggle_hadamard(b, a);
        assert!(!d.connected(a, b));
    }

    #[test]
    fn edge_compose() {
        use EdgeType::*;
        assert_eq!(Hadamard.compose(Hadamard), Simple);
        assert_eq!(Simple.compose(Hadamard), Hadamard);
    }
}
