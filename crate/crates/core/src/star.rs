//! Star configurations: colorings whose classes are all spanning stars.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{validate_graph, ClassShape, ColorId, ColoredMultigraph, EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StarConfigError {
    #[error("graph has {actual} colors, a star configuration on {n} vertices needs {expected}")]
    WrongColorCount {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("color {} does not induce a spanning star", (.0).0)]
    NotAStarConfiguration(ColorId),
}

/// Per-vertex entry of the degree profile: `stars_centered` is the number of
/// monochromatic stars centered at the vertex and `degree` the value
/// `(s + 1) * (n - 2) + 1`, which equals the actual multigraph degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexDegrees {
    pub stars_centered: usize,
    pub degree: usize,
}

/// How the star centers are spread over the vertices. Drives dispatch between
/// the constructive decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterArrangement {
    /// Every star on its own center (includes the 1-color case).
    AllDistinct,
    /// All stars share this center.
    AllSame(VertexId),
    /// Centers fall on exactly these two vertices, each hosting at least one
    /// star. Ordered by vertex index.
    TwoCenters(VertexId, VertexId),
    /// Three or more distinct centers with at least one repeat.
    Scattered,
}

/// A validated coloring where each color class is a spanning star, together
/// with the chosen center of every star.
///
/// For a 1-edge star (n = 2) either endpoint is admissible; the lower vertex
/// index is chosen so behavior stays deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarConfiguration {
    graph: ColoredMultigraph,
    centers: Vec<VertexId>,
    /// `spoke[color][vertex]` is the edge of `color` joining the class center
    /// to `vertex`; `None` exactly at the center itself.
    spoke: Vec<Vec<Option<EdgeId>>>,
}

impl StarConfiguration {
    /// Validates that every class is a spanning star and records the centers.
    pub fn from_graph(graph: &ColoredMultigraph) -> Result<Self, StarConfigError> {
        let n = graph.vertex_count();
        if graph.color_count() != n - 1 {
            return Err(StarConfigError::WrongColorCount {
                n,
                expected: n - 1,
                actual: graph.color_count(),
            });
        }
        let report = validate_graph(graph);
        let mut centers = Vec::with_capacity(n - 1);
        for class in &report.classes {
            match &class.shape {
                ClassShape::SpanningStar { centers: c } => centers.push(c[0]),
                _ => return Err(StarConfigError::NotAStarConfiguration(class.color)),
            }
        }
        let mut spoke = vec![vec![None; n]; n - 1];
        for e in graph.edges().iter() {
            let center = centers[e.color.0];
            let leaf = e.other_endpoint(center).expect("star edge touches center");
            spoke[e.color.0][leaf.0] = Some(e.id);
        }
        Ok(StarConfiguration {
            graph: graph.clone(),
            centers,
            spoke,
        })
    }

    pub fn graph(&self) -> &ColoredMultigraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn color_count(&self) -> usize {
        self.graph.color_count()
    }

    /// Center of each star, indexed by color.
    pub fn centers(&self) -> &[VertexId] {
        &self.centers
    }

    pub fn center_of(&self, color: ColorId) -> VertexId {
        self.centers[color.0]
    }

    /// The unique edge of `color` joining its center to `vertex`. Panics if
    /// `vertex` is the center itself.
    pub fn spoke(&self, color: ColorId, vertex: VertexId) -> EdgeId {
        self.spoke[color.0][vertex.0].expect("vertex is the star center, not a leaf")
    }

    /// `s_k`: how many stars are centered at each vertex.
    pub fn stars_per_vertex(&self) -> Vec<usize> {
        let mut s = vec![0usize; self.vertex_count()];
        for c in &self.centers {
            s[c.0] += 1;
        }
        s
    }

    pub fn center_arrangement(&self) -> CenterArrangement {
        let mut distinct: Vec<VertexId> = self.centers.clone();
        distinct.sort();
        distinct.dedup();
        match distinct.len() {
            1 => CenterArrangement::AllSame(distinct[0]),
            k if k == self.centers.len() => CenterArrangement::AllDistinct,
            2 => CenterArrangement::TwoCenters(distinct[0], distinct[1]),
            _ => CenterArrangement::Scattered,
        }
    }

    /// Per-vertex `(s_k, D_k)` with `D_k = (s_k + 1)(n - 2) + 1`, indexed by
    /// vertex. `D_k` always equals the actual multigraph degree.
    pub fn degree_profile(&self) -> Vec<VertexDegrees> {
        let n = self.vertex_count();
        self.stars_per_vertex()
            .into_iter()
            .map(|s| VertexDegrees {
                stars_centered: s,
                degree: (s + 1) * (n - 2) + 1,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{star_graph, FixtureCatalog};

    #[test]
    fn distinct_centers_fixture() {
        let doc = FixtureCatalog::bundled().different_centers_n4;
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        assert_eq!(cfg.centers(), &[VertexId(0), VertexId(1), VertexId(2)]);
        assert_eq!(cfg.center_arrangement(), CenterArrangement::AllDistinct);
    }

    #[test]
    fn same_center_fixture() {
        let doc = FixtureCatalog::bundled().same_center_n4;
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        assert_eq!(cfg.centers(), &[VertexId(0), VertexId(0), VertexId(0)]);
        assert_eq!(
            cfg.center_arrangement(),
            CenterArrangement::AllSame(VertexId(0))
        );
    }

    #[test]
    fn shared_center_fixture_is_two_centers() {
        let doc = FixtureCatalog::bundled().shared_center_counterexample_n4;
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        assert_eq!(
            cfg.center_arrangement(),
            CenterArrangement::TwoCenters(VertexId(0), VertexId(1))
        );
    }

    #[test]
    fn path_class_is_rejected_with_offending_color() {
        // Colors 0 and 1 are stars, color 2 (green) is a path on 4 vertices.
        let g = ColoredMultigraph::new(
            4,
            3,
            &[
                (0, 1, 0),
                (0, 2, 0),
                (0, 3, 0),
                (1, 0, 1),
                (1, 2, 1),
                (1, 3, 1),
                (0, 1, 2),
                (1, 2, 2),
                (2, 3, 2),
            ],
        )
        .unwrap();
        assert_eq!(
            StarConfiguration::from_graph(&g),
            Err(StarConfigError::NotAStarConfiguration(ColorId(2)))
        );
    }

    #[test]
    fn n2_center_tie_breaks_low() {
        let g = ColoredMultigraph::new(2, 1, &[(1, 0, 0)]).unwrap();
        let cfg = StarConfiguration::from_graph(&g).unwrap();
        assert_eq!(cfg.centers(), &[VertexId(0)]);
        let profile = cfg.degree_profile();
        // n = 2: the center has s = 1 and D = 2*0 + 1 = 1.
        assert_eq!(
            profile[0],
            VertexDegrees {
                stars_centered: 1,
                degree: 1
            }
        );
        assert_eq!(profile[1].degree, 1);
    }

    #[test]
    fn degree_profile_matches_paper_examples() {
        // Same center, n = 4: center has s = 3, D = 4 * 2 + 1 = 9; leaves 3.
        let doc = FixtureCatalog::bundled().same_center_n4;
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        let profile = cfg.degree_profile();
        assert_eq!(profile[0].stars_centered, 3);
        assert_eq!(profile[0].degree, 9);
        for v in 1..4 {
            assert_eq!(profile[v].stars_centered, 0);
            assert_eq!(profile[v].degree, 3);
        }

        // All distinct, n = 4: each center s = 1, D = 5; the free vertex 3.
        let doc = FixtureCatalog::bundled().different_centers_n4;
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        let profile = cfg.degree_profile();
        for v in 0..3 {
            assert_eq!(profile[v].degree, 5);
        }
        assert_eq!(profile[3].degree, 3);
    }

    #[test]
    fn degree_formula_equals_actual_degree() {
        for n in 3..=5 {
            for center in 0..n {
                let g = star_graph(n, &vec![center; n - 1]).graph;
                let cfg = StarConfiguration::from_graph(&g).unwrap();
                for (v, entry) in cfg.degree_profile().iter().enumerate() {
                    assert_eq!(entry.degree, g.degree(VertexId(v)));
                }
            }
        }
    }

    #[test]
    fn profile_sums() {
        let doc = FixtureCatalog::bundled().two_centers_n5;
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        let n = cfg.vertex_count();
        let profile = cfg.degree_profile();
        let s_total: usize = profile.iter().map(|p| p.stars_centered).sum();
        let d_total: usize = profile.iter().map(|p| p.degree).sum();
        assert_eq!(s_total, n - 1);
        assert_eq!(d_total, 2 * (n - 1) * (n - 1));
    }
}
