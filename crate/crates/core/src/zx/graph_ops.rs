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

//! Local complementation and pivoting as pure graph operations on the
//! Hadamard edges between spiders. Phases and boundary edges are untouched.

use super::{EdgeType, ZxDiagram, ZxError, V};

fn check_spider(d: &ZxDiagram, u: V) -> Result<(), ZxError> {
    if !d.contains(u) {
        return Err(ZxError::NoSuchVertex(u));
    }
    if d.is_boundary(u) {
        return Err(ZxError::IsBoundary(u));
    }
    Ok(())
}

fn spider_neighbors(d: &ZxDiagram, u: V) -> Vec<V> {
    d.neighbors(u).filter(|&w| !d.is_boundary(w)).collect()
}

/// Complement the Hadamard edges among each pair of `vs`.
pub(crate) fn complement_pairs(d: &mut ZxDiagram, vs: &[V]) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            d.toggle_hadamard(a, b);
        }
    }
}

/// Complement every edge between two of the given vertex classes.
pub(crate) fn complement_between(d: &mut ZxDiagram, xs: &[V], ys: &[V]) {
    for &a in xs {
        for &b in ys {
            d.toggle_hadamard(a, b);
        }
    }
}

/// `G * u`: complement the adjacency among the spider neighbours of `u`.
pub fn local_complement_graph(d: &ZxDiagram, u: V) -> Result<ZxDiagram, ZxError> {
    check_spider(d, u)?;
    let mut d = d.clone();
    let nu = spider_neighbors(&d, u);
    complement_pairs(&mut d, &nu);
    Ok(d)
}

/// The three neighbourhood classes of an edge `uv`: exclusive to `u`,
/// exclusive to `v`, and shared. Boundaries are excluded.
pub(crate) fn pivot_classes(d: &ZxDiagram, u: V, v: V) -> (Vec<V>, Vec<V>, Vec<V>) {
    let nu = spider_neighbors(d, u);
    let nv = spider_neighbors(d, v);
    let a = nu
        .iter()
        .copied()
        .filter(|&w| w != v && !nv.contains(&w))
        .collect();
    let b = nv
        .iter()
        .copied()
        .filter(|&w| w != u && !nu.contains(&w))
        .collect();
    let c = nu.iter().copied().filter(|w| nv.contains(w)).collect();
    (a, b, c)
}

/// `G ^ uv` in place, assuming `u` and `v` are Hadamard-adjacent spiders.
pub fn pivot_in_place(d: &mut ZxDiagram, u: V, v: V) {
    let (a, b, c) = pivot_classes(d, u, v);
    complement_between(d, &a, &b);
    complement_between(d, &a, &c);
    complement_between(d, &b, &c);
    // u and v trade neighbourhoods
    for &w in &a {
        d.toggle_hadamard(u, w);
        d.toggle_hadamard(v, w);
    }
    for &w in &b {
        d.toggle_hadamard(u, w);
        d.toggle_hadamard(v, w);
    }
}

/// `G ^ uv = G * u * v * u` for Hadamard-adjacent spiders `u` and `v`.
pub fn pivot_graph(d: &ZxDiagram, u: V, v: V) -> Result<ZxDiagram, ZxError> {
    check_spider(d, u)?;
    check_spider(d, v)?;
    if u == v || d.edge_type(u, v) != Some(EdgeType::Hadamard) {
        return Err(ZxError::NotAdjacent(u, v));
    }
    let mut d = d.clone();
    pivot_in_place(&mut d, u, v);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;
    use crate::zx::VertexKind;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ZxDiagram {
        let mut d = ZxDiagram::new();
        for _ in 0..n {
            d.add_spider(Phase::zero());
        }
        for &(a, b) in edges {
            d.add_edge(a, b, EdgeType::Hadamard);
        }
        d
    }

    #[test]
    fn small_neighbourhoods_unchanged() {
        let d = graph(3, &[(0, 1)]);
        assert_eq!(local_complement_graph(&d, 0).unwrap(), d);
        assert_eq!(local_complement_graph(&d, 2).unwrap(), d);
    }

    #[test]
    fn star_becomes_triangle_plus_centre() {
        let d = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let g = local_complement_graph(&d, 0).unwrap();
        assert_eq!(
            g,
            graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        );
        assert_eq!(local_complement_graph(&g, 0).unwrap(), d);
    }

    #[test]
    fn lone_edge_pivot() {
        let d = graph(2, &[(0, 1)]);
        assert_eq!(pivot_graph(&d, 0, 1).unwrap(), d);
    }

    #[test]
    fn errors() {
        let mut d = graph(3, &[(0, 1)]);
        let b = d.add_vertex(VertexKind::Boundary, Phase::zero());
        assert_eq!(local_complement_graph(&d, b), Err(ZxError::IsBoundary(b)));
        assert_eq!(local_complement_graph(&d, 9), Err(ZxError::NoSuchVertex(9)));
        assert_eq!(pivot_graph(&d, 0, 2), Err(ZxError::NotAdjacent(0, 2)));
    }

    #[test]
    fn pivot_matches_three_complementations() {
        // a path with a pendant triangle
        let d = graph(6, &[(0, 1), (0, 2), (1, 3), (0, 4), (1, 4), (4, 5), (2, 5)]);
        let lc = |d: &ZxDiagram, u| local_complement_graph(d, u).unwrap();
        assert_eq!(pivot_graph(&d, 0, 1).unwrap(), lc(&lc(&lc(&d, 0), 1), 0));
        assert_eq!(
            pivot_graph(&d, 0, 1).unwrap(),
            pivot_graph(&d, 1, 0).unwrap()
        );
    }
}
