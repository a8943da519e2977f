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

//! ZX-diagrams: the data model, translation from circuits, graph-like
//! normalisation and graph-theoretic operations.

mod convert;
mod diagram;
mod graph_like;
pub(crate) mod graph_ops;
pub mod json;
pub mod stats;

pub use convert::from_circuit;
pub use diagram::{EdgeMult, EdgeType, VertexData, VertexKind, ZxDiagram, V};
pub use graph_like::{
    graph_like_certificate, is_graph_like, to_graph_like, to_graph_like_logged,
    GraphLikeCertificate,
};
pub use graph_ops::{local_complement_graph, pivot_graph, pivot_in_place};
pub use stats::{graph_stats, GraphStats};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZxError {
    #[error("vertex {0} does not exist")]
    NoSuchVertex(V),
    #[error("vertex {0} is a boundary")]
    IsBoundary(V),
    #[error("vertices {0} and {1} are not joined by a Hadamard edge")]
    NotAdjacent(V, V),
    #[error("diagram is not graph-like")]
    NotGraphLike,
    #[error("malformed diagram: {0}")]
    Malformed(String),
}
