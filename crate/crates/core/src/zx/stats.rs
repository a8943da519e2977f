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

//! Graph statistics of the spider graph: edge count, density and the
//! centralities used for proxy objectives and subject weightings.
//!
//! Boundary vertices are ignored throughout; all measures are over the
//! undirected simple graph on spiders.

use super::{ZxDiagram, V};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub edge_count: usize,
    pub density: f64,
    pub centrality: f64,
}

/// The spider graph with vertices renumbered `0..n` in id order.
pub struct SpiderGraph {
    pub ids: Vec<V>,
    pub adj: Vec<Vec<usize>>,
}

impl SpiderGraph {
    pub fn new(d: &ZxDiagram) -> SpiderGraph {
        let ids: Vec<V> = d.spiders().collect();
        let index: HashMap<V, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids
            .iter()
            .map(|&v| {
                d.neighbors(v)
                    .filter_map(|w| index.get(&w).copied())
                    .collect()
            })
            .collect();
        SpiderGraph { ids, adj }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS from `s`: visit order, distances, shortest-path counts and
    /// predecessor lists.
    fn bfs(&self, s: usize) -> (Vec<usize>, Vec<f64>, Vec<Vec<usize>>) {
        let n = self.len();
        let mut dist = vec![usize::MAX; n];
        let mut sigma = vec![0.0; n];
        let mut preds = vec![Vec::new(); n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        sigma[s] = 1.0;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        (order, sigma, preds)
    }

    /// Unnormalised vertex betweenness (each unordered pair counted once).
    pub fn betweenness(&self) -> Vec<f64> {
        let n = self.len();
        let mut cb = vec![0.0; n];
        for s in 0..n {
            let (order, sigma, preds) = self.bfs(s);
            let mut delta = vec![0.0; n];
            for &w in order.iter().rev() {
                for &v in &preds[w] {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
                if w != s {
                    cb[w] += delta[w];
                }
            }
        }
        cb.iter().map(|x| x / 2.0).collect()
    }

    /// Load centrality: each target sends one unit of flow back towards the
    /// source, split evenly between predecessors at every step.
    pub fn load(&self) -> Vec<f64> {
        let n = self.len();
        let mut load = vec![0.0; n];
        for s in 0..n {
            let (order, _, preds) = self.bfs(s);
            let mut flow = vec![1.0; n];
            for &w in order.iter().rev() {
                if w == s {
                    continue;
                }
                let share = flow[w] / preds[w].len() as f64;
                for &v in &preds[w] {
                    flow[v] += share;
                }
                load[w] += flow[w] - 1.0;
            }
        }
        load.iter().map(|x| x / 2.0).collect()
    }

    /// Unnormalised edge betweenness, keyed by `(min, max)` index pairs.
    pub fn edge_betweenness(&self) -> HashMap<(usize, usize), f64> {
        let n = self.len();
        let mut eb: HashMap<(usize, usize), f64> = HashMap::new();
        for v in 0..n {
            for &w in &self.adj[v] {
                eb.insert((v.min(w), v.max(w)), 0.0);
            }
        }
        for s in 0..n {
            let (order, sigma, preds) = self.bfs(s);
            let mut delta = vec![0.0; n];
            for &w in order.iter().rev() {
                for &v in &preds[w] {
                    let c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                    *eb.get_mut(&(v.min(w), v.max(w))).unwrap() += c;
                    delta[v] += c;
                }
            }
        }
        eb.values_mut().for_each(|x| *x /= 2.0);
        eb
    }
}

/// Edge count, density `2E / (V (V - 1))` and mean betweenness over spiders.
pub fn graph_stats(d: &ZxDiagram) -> GraphStats {
    let g = SpiderGraph::new(d);
    let n = g.len();
    let e = g.edge_count();
    let density = if n < 2 {
        0.0
    } else {
        2.0 * e as f64 / (n * (n - 1)) as f64
    };
    let centrality = if n == 0 {
        0.0
    } else {
        g.betweenness().iter().sum::<f64>() / n as f64
    };
    GraphStats {
        edge_count: e,
        density,
        centrality,
    }
}
