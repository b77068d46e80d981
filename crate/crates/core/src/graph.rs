//! Edge-colored multigraphs and structural validation.
//!
//! Graphs are undirected, loop-free, and usually carry parallel edges: every
//! edge has a stable integer identity assigned at load order, so certificates
//! can reference a specific parallel edge unambiguously.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::util::UnionFind;

/// Index of a vertex, in `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

/// Index of a color, in `0..m`. Colors are dense integers; display names
/// (such as "red") live only in the I/O layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorId(pub usize);

/// Stable identity of an edge within one graph: its position in load order.
/// Parallel edges with identical endpoints and color are distinct objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

/// One undirected colored edge. `u != v` always holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredEdge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub color: ColorId,
}

impl ColoredEdge {
    /// Returns the endpoint that is not `x`, or `None` if `x` is not an
    /// endpoint.
    pub fn other_endpoint(&self, x: VertexId) -> Option<VertexId> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph hosting spanning structures needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge {index}: loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },
    #[error("edge {index}: vertex {vertex} out of range (vertex count is {limit})")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        limit: usize,
    },
    #[error("edge {index}: color {color} out of range (color count is {limit})")]
    ColorOutOfRange {
        index: usize,
        color: usize,
        limit: usize,
    },
}

/// A loop-free undirected multigraph with colored edges.
///
/// Immutable after construction; all operations on it are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredMultigraph {
    vertex_count: usize,
    color_count: usize,
    edges: Vec<ColoredEdge>,
}

impl ColoredMultigraph {
    /// Builds a graph from `(u, v, color)` triples. Edge ids follow the order
    /// of `triples`.
    pub fn new(
        vertex_count: usize,
        color_count: usize,
        triples: &[(usize, usize, usize)],
    ) -> Result<Self, GraphError> {
        if vertex_count < 2 {
            return Err(GraphError::TooFewVertices(vertex_count));
        }
        let mut edges = Vec::with_capacity(triples.len());
        for (index, &(u, v, color)) in triples.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                let vertex = if u >= vertex_count { u } else { v };
                return Err(GraphError::VertexOutOfRange {
                    index,
                    vertex,
                    limit: vertex_count,
                });
            }
            if u == v {
                return Err(GraphError::LoopEdge { index, vertex: u });
            }
            if color >= color_count {
                return Err(GraphError::ColorOutOfRange {
                    index,
                    color,
                    limit: color_count,
                });
            }
            edges.push(ColoredEdge {
                id: EdgeId(index),
                u: VertexId(u),
                v: VertexId(v),
                color: ColorId(color),
            });
        }
        Ok(ColoredMultigraph {
            vertex_count,
            color_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &ColoredEdge {
        &self.edges[id.0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    /// Multigraph degree: the number of edge endpoints at `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Edge ids of one color, in id order.
    pub fn color_class(&self, color: ColorId) -> ColorClass {
        ColorClass {
            color,
            edges: self
                .edges
                .iter()
                .filter(|e| e.color == color)
                .map(|e| e.id)
                .collect(),
        }
    }

    /// All color classes, indexed by color. The union over classes partitions
    /// the edge list.
    pub fn color_classes(&self) -> Vec<ColorClass> {
        let mut classes: Vec<ColorClass> = (0..self.color_count)
            .map(|c| ColorClass {
                color: ColorId(c),
                edges: Vec::new(),
            })
            .collect();
        for e in &self.edges {
            classes[e.color.0].edges.push(e.id);
        }
        classes
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut components = self.vertex_count;
        for e in &self.edges {
            if uf.union(e.u.0, e.v.0) {
                components -= 1;
            }
        }
        components == 1
    }
}

/// All edges carrying one color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorClass {
    pub color: ColorId,
    pub edges: Vec<EdgeId>,
}

/// Shape of the subgraph induced by one color class.
///
/// `SpanningStar` wins over `SpanningPath` when both apply (possible for
/// n <= 3); a single-edge class admits either endpoint as center, so
/// `centers` lists every admissible center in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClassShape {
    SpanningStar { centers: Vec<VertexId> },
    SpanningPath,
    SpanningTree,
    Other { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub color: ColorId,
    pub size: usize,
    pub shape: ClassShape,
}

/// Findings of [`validate_graph`]. Everything is a report field; nothing here
/// is an error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub color_count: usize,
    pub connected: bool,
    /// Always true for a constructed graph; loops are rejected at parse time.
    pub loop_free: bool,
    pub expected_color_count: usize,
    pub color_count_matches: bool,
    pub classes: Vec<ClassReport>,
    /// One center per color when every class is a spanning star (ties broken
    /// toward the lower vertex index), otherwise `None`.
    pub star_centers: Option<Vec<VertexId>>,
}

impl ValidationReport {
    pub fn all_classes_spanning_stars(&self) -> bool {
        self.star_centers.is_some()
    }
}

fn classify_class(g: &ColoredMultigraph, class: &ColorClass) -> ClassShape {
    let n = g.vertex_count();
    if class.edges.len() != n - 1 {
        return ClassShape::Other {
            reason: format!("has {} edges, a spanning class needs {}", class.edges.len(), n - 1),
        };
    }
    let mut uf = UnionFind::new(n);
    for &id in &class.edges {
        let e = g.edge(id);
        if !uf.union(e.u.0, e.v.0) {
            return ClassShape::Other {
                reason: "contains a cycle".to_string(),
            };
        }
    }
    // Acyclic with n-1 edges on n vertices: a spanning tree.
    let centers: Vec<VertexId> = g
        .vertices()
        .filter(|&v| class.edges.iter().all(|&id| g.edge(id).touches(v)))
        .collect();
    if !centers.is_empty() {
        return ClassShape::SpanningStar { centers };
    }
    let mut degree = vec![0usize; n];
    for &id in &class.edges {
        let e = g.edge(id);
        degree[e.u.0] += 1;
        degree[e.v.0] += 1;
    }
    if degree.iter().all(|&d| d <= 2) {
        ClassShape::SpanningPath
    } else {
        ClassShape::SpanningTree
    }
}

/// Reports structural findings: connectivity, color arithmetic, and the shape
/// of every color class. Pure; never mutates the graph.
pub fn validate_graph(g: &ColoredMultigraph) -> ValidationReport {
    let classes: Vec<ClassReport> = g
        .color_classes()
        .iter()
        .map(|class| ClassReport {
            color: class.color,
            size: class.edges.len(),
            shape: classify_class(g, class),
        })
        .collect();
    let star_centers = classes
        .iter()
        .map(|c| match &c.shape {
            ClassShape::SpanningStar { centers } => Some(centers[0]),
            _ => None,
        })
        .collect::<Option<Vec<_>>>();
    ValidationReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        color_count: g.color_count(),
        connected: g.is_connected(),
        loop_free: true,
        expected_color_count: g.vertex_count() - 1,
        color_count_matches: g.color_count() == g.vertex_count() - 1,
        classes,
        star_centers,
    }
}
