//! Rainbow subgraphs and certified decompositions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ColorId, ColoredMultigraph, EdgeId, VertexId};
use crate::util::UnionFind;

/// Shape demanded of each part of a decomposition. Star and path are both
/// refinements of tree: every check below starts from "spanning tree".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Star,
    Tree,
    Path,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::Star => "star",
            Shape::Tree => "tree",
            Shape::Path => "path",
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("expected {expected} parts, got {actual}")]
    WrongPartCount { expected: usize, actual: usize },
    #[error("part {part} has {actual} edges, expected {expected}")]
    WrongPartSize {
        part: usize,
        expected: usize,
        actual: usize,
    },
    #[error("edge id {} is out of range", (.0).0)]
    UnknownEdge(EdgeId),
    #[error("edge id {} is used more than once", (.0).0)]
    DuplicateEdge(EdgeId),
    #[error("edge id {} is not covered by any part", (.0).0)]
    UncoveredEdge(EdgeId),
    #[error("part {part} repeats color {}", color.0)]
    RepeatedColor { part: usize, color: ColorId },
    #[error("part {part} contains a cycle")]
    ContainsCycle { part: usize },
    #[error("part {part} is not a star: no vertex touches every edge")]
    NotAStar { part: usize },
    #[error("part {part} is not a path: vertex {} has degree over 2", vertex.0)]
    DegreeOverTwo { part: usize, vertex: VertexId },
}

/// `n - 1` edge ids forming one rainbow spanning subgraph of the declared
/// shape. Stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RainbowSubgraph {
    pub shape: Shape,
    pub edges: Vec<EdgeId>,
}

/// An unordered set of `n - 1` pairwise edge-disjoint rainbow spanning
/// subgraphs whose union is the full edge multiset of the host graph.
///
/// Parts are kept in canonical order: each part's edge ids sorted ascending,
/// parts sorted lexicographically. Two collections are equal iff their
/// canonical forms are identical, which makes "distinct unordered
/// collections" well-defined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowCollection {
    parts: Vec<RainbowSubgraph>,
}

impl RainbowCollection {
    /// Validates the decomposition against its host graph and stores it in
    /// canonical form.
    pub fn new(
        graph: &ColoredMultigraph,
        shape: Shape,
        parts: Vec<Vec<EdgeId>>,
    ) -> Result<Self, DecompositionError> {
        validate_decomposition(graph, shape, &parts)?;
        let mut parts: Vec<RainbowSubgraph> = parts
            .into_iter()
            .map(|mut edges| {
                edges.sort();
                RainbowSubgraph { shape, edges }
            })
            .collect();
        parts.sort();
        Ok(RainbowCollection { parts })
    }

    pub fn parts(&self) -> &[RainbowSubgraph] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Re-sorts into canonical form. Idempotent; collections are already
    /// canonical on construction, so this is a no-op provided for callers
    /// that want to make the invariant explicit.
    pub fn canonicalize(&mut self) {
        for part in &mut self.parts {
            part.edges.sort();
        }
        self.parts.sort();
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.parts.iter().flat_map(|p| p.edges.iter().copied())
    }
}

/// Checks one part against the declared shape: right size, all colors
/// distinct, acyclic (hence a spanning tree), plus the star/path refinement.
pub(crate) fn check_part(
    graph: &ColoredMultigraph,
    part_index: usize,
    edges: &[EdgeId],
    shape: Shape,
) -> Result<(), DecompositionError> {
    let n = graph.vertex_count();
    if edges.len() != n - 1 {
        return Err(DecompositionError::WrongPartSize {
            part: part_index,
            expected: n - 1,
            actual: edges.len(),
        });
    }
    let mut colors_seen = vec![false; graph.color_count()];
    let mut uf = UnionFind::new(n);
    for &id in edges {
        if id.0 >= graph.edge_count() {
            return Err(DecompositionError::UnknownEdge(id));
        }
        let e = graph.edge(id);
        if colors_seen[e.color.0] {
            return Err(DecompositionError::RepeatedColor {
                part: part_index,
                color: e.color,
            });
        }
        colors_seen[e.color.0] = true;
        if !uf.union(e.u.0, e.v.0) {
            return Err(DecompositionError::ContainsCycle { part: part_index });
        }
    }
    // n - 1 acyclic edges on n vertices form a spanning tree.
    match shape {
        Shape::Tree => {}
        Shape::Star => {
            let is_star = graph
                .vertices()
                .any(|v| edges.iter().all(|&id| graph.edge(id).touches(v)));
            if !is_star {
                return Err(DecompositionError::NotAStar { part: part_index });
            }
        }
        Shape::Path => {
            let mut degree = vec![0usize; n];
            for &id in edges {
                let e = graph.edge(id);
                degree[e.u.0] += 1;
                degree[e.v.0] += 1;
                for &x in &[e.u, e.v] {
                    if degree[x.0] > 2 {
                        return Err(DecompositionError::DegreeOverTwo {
                            part: part_index,
                            vertex: x,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn validate_decomposition(
    graph: &ColoredMultigraph,
    shape: Shape,
    parts: &[Vec<EdgeId>],
) -> Result<(), DecompositionError> {
    let n = graph.vertex_count();
    if parts.len() != n - 1 {
        return Err(DecompositionError::WrongPartCount {
            expected: n - 1,
            actual: parts.len(),
        });
    }
    let mut used = vec![false; graph.edge_count()];
    for (i, part) in parts.iter().enumerate() {
        check_part(graph, i, part, shape)?;
        for &id in part {
            if used[id.0] {
                return Err(DecompositionError::DuplicateEdge(id));
            }
            used[id.0] = true;
        }
    }
    if let Some(missing) = used.iter().position(|&u| !u) {
        return Err(DecompositionError::UncoveredEdge(EdgeId(missing)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::FixtureCatalog;

    fn ids(raw: &[usize]) -> Vec<EdgeId> {
        raw.iter().map(|&i| EdgeId(i)).collect()
    }

    // The canonical star decomposition of the distinct-centers n=4 fixture.
    fn sample_parts() -> Vec<Vec<EdgeId>> {
        vec![ids(&[2, 3, 6]), ids(&[0, 5, 7]), ids(&[1, 4, 8])]
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let g = FixtureCatalog::bundled().different_centers_n4.graph;
        let a = RainbowCollection::new(&g, Shape::Star, sample_parts()).unwrap();
        let mut reversed = sample_parts();
        reversed.reverse();
        reversed[0].reverse();
        let b = RainbowCollection::new(&g, Shape::Star, reversed).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.parts()[0].edges, ids(&[0, 5, 7]));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let g = FixtureCatalog::bundled().different_centers_n4.graph;
        let mut coll = RainbowCollection::new(&g, Shape::Star, sample_parts()).unwrap();
        let before = coll.clone();
        coll.canonicalize();
        assert_eq!(coll, before);
    }

    #[test]
    fn star_and_path_parts_pass_the_tree_check() {
        let g = FixtureCatalog::bundled().different_centers_n4.graph;
        RainbowCollection::new(&g, Shape::Tree, sample_parts()).unwrap();
        let p = FixtureCatalog::bundled().paths_counterexample_n4.graph;
        // blue 0-1, green 1-2, red 2-3: a rainbow spanning path.
        check_part(&p, 0, &ids(&[3, 7, 2]), Shape::Path).unwrap();
        check_part(&p, 0, &ids(&[3, 7, 2]), Shape::Tree).unwrap();
        // red 0-2, blue 1-2, green 2-3: a rainbow star at vertex 2.
        check_part(&p, 0, &ids(&[0, 4, 8]), Shape::Star).unwrap();
        check_part(&p, 0, &ids(&[0, 4, 8]), Shape::Tree).unwrap();
    }

    #[test]
    fn rejects_overlap_and_uncovered() {
        let g = FixtureCatalog::bundled().different_centers_n4.graph;
        let mut parts = sample_parts();
        // Part 2 becomes {0, 4, 8}: still a valid rainbow tree on its own,
        // but edge 0 already belongs to part 1.
        parts[2][0] = EdgeId(0);
        let err = RainbowCollection::new(&g, Shape::Tree, parts).unwrap_err();
        assert_eq!(err, DecompositionError::DuplicateEdge(EdgeId(0)));
    }

    #[test]
    fn rejects_cycles_and_repeated_colors() {
        let g = ColoredMultigraph::new(3, 2, &[(0, 1, 0), (0, 2, 0), (0, 1, 1), (0, 2, 1)]).unwrap();
        assert_eq!(
            check_part(&g, 0, &ids(&[0, 1]), Shape::Tree),
            Err(DecompositionError::RepeatedColor {
                part: 0,
                color: ColorId(0)
            })
        );
        assert_eq!(
            check_part(&g, 0, &ids(&[0, 2]), Shape::Tree),
            Err(DecompositionError::ContainsCycle { part: 0 })
        );
        check_part(&g, 0, &ids(&[0, 3]), Shape::Star).unwrap();
    }

    #[test]
    fn star_check_requires_common_vertex() {
        let g = FixtureCatalog::bundled().paths_counterexample_n4.graph;
        // red 0-2 (id 0), blue 1-2 (id 4), green 2-3 (id 8): star at vertex 2.
        check_part(&g, 0, &ids(&[0, 4, 8]), Shape::Star).unwrap();
        // red 0-2 (id 0), blue 0-1 (id 3), green 2-3 (id 8): tree, not a star.
        check_part(&g, 0, &ids(&[0, 3, 8]), Shape::Tree).unwrap();
        assert_eq!(
            check_part(&g, 0, &ids(&[0, 3, 8]), Shape::Star),
            Err(DecompositionError::NotAStar { part: 0 })
        );
    }
}
