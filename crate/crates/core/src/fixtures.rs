//! Bundled example graphs.
//!
//! Each fixture is a small edge-colored multigraph exercising one regime of
//! the decomposition problem: all star centers distinct, all equal, centers
//! on two vertices, identical tree copies, and the two infeasible
//! configurations (two stars sharing a center; spanning paths).

use crate::graph::ColoredMultigraph;
use crate::io::GraphDocument;

/// Builds the graph whose color `c` class is the spanning star centered at
/// `centers[c]`: one edge from the center to every other vertex, in ascending
/// leaf order. This is the only multigraph (up to edge order) whose classes
/// are spanning stars with those centers.
pub fn star_graph(n: usize, centers: &[usize]) -> GraphDocument {
    assert!(n >= 2);
    assert_eq!(centers.len(), n - 1, "a star configuration has n - 1 colors");
    let mut triples = Vec::new();
    for (color, &center) in centers.iter().enumerate() {
        assert!(center < n);
        for w in 0..n {
            if w != center {
                triples.push((center, w, color));
            }
        }
    }
    GraphDocument::bare(ColoredMultigraph::new(n, n - 1, &triples).expect("valid star graph"))
}

/// Builds the graph with `n - 1` identically shaped monochromatic copies of
/// the spanning tree given by `template` endpoint pairs.
pub fn identical_tree_graph(n: usize, template: &[(usize, usize)]) -> GraphDocument {
    assert_eq!(template.len(), n - 1);
    let mut triples = Vec::new();
    for color in 0..n - 1 {
        for &(u, v) in template {
            triples.push((u, v, color));
        }
    }
    GraphDocument::bare(
        ColoredMultigraph::new(n, n - 1, &triples).expect("valid identical-tree graph"),
    )
}

const STAR_NAMES_3: [&str; 3] = ["red", "blue", "green"];
const STAR_NAMES_4: [&str; 4] = ["red", "blue", "green", "yellow"];

/// The eight bundled graphs, by name.
#[derive(Clone, Debug)]
pub struct FixtureCatalog {
    /// n = 4; red, blue, green stars centered at vertices 0, 1, 2; vertex 3
    /// is center-free.
    pub different_centers_n4: GraphDocument,
    /// n = 5; four stars centered at vertices 0..3; vertex 4 is center-free.
    pub different_centers_n5: GraphDocument,
    /// n = 4; three stars all centered at vertex 0.
    pub same_center_n4: GraphDocument,
    /// n = 5; four stars all centered at vertex 0.
    pub same_center_n5: GraphDocument,
    /// n = 4; red and blue stars share center 0, green is centered at 1.
    /// No rainbow-star decomposition exists.
    pub shared_center_counterexample_n4: GraphDocument,
    /// n = 4; three copies of the spanning tree {0-2, 0-3, 1-3}.
    pub identical_trees_n4: GraphDocument,
    /// n = 5; red and blue centered at vertex 0, green and yellow at vertex 1.
    pub two_centers_n5: GraphDocument,
    /// n = 4; three spanning paths admitting no rainbow-path decomposition.
    pub paths_counterexample_n4: GraphDocument,
}

impl FixtureCatalog {
    pub fn bundled() -> Self {
        let mut different_centers_n4 = star_graph(4, &[0, 1, 2]);
        different_centers_n4.color_names = Some(names(&STAR_NAMES_3));
        let mut different_centers_n5 = star_graph(5, &[0, 1, 2, 3]);
        different_centers_n5.color_names = Some(names(&STAR_NAMES_4));
        let mut same_center_n4 = star_graph(4, &[0, 0, 0]);
        same_center_n4.color_names = Some(names(&STAR_NAMES_3));
        let mut same_center_n5 = star_graph(5, &[0, 0, 0, 0]);
        same_center_n5.color_names = Some(names(&STAR_NAMES_4));
        let mut shared_center_counterexample_n4 = star_graph(4, &[0, 0, 1]);
        shared_center_counterexample_n4.color_names = Some(names(&STAR_NAMES_3));
        let mut identical_trees_n4 = identical_tree_graph(4, &[(0, 2), (0, 3), (1, 3)]);
        identical_trees_n4.color_names = Some(names(&STAR_NAMES_3));
        let mut two_centers_n5 = star_graph(5, &[0, 0, 1, 1]);
        two_centers_n5.color_names = Some(names(&STAR_NAMES_4));
        let paths_counterexample_n4 = GraphDocument::named(
            ColoredMultigraph::new(
                4,
                3,
                &[
                    // red: the path 0-2-3-1
                    (0, 2, 0),
                    (1, 3, 0),
                    (2, 3, 0),
                    // blue: the path 0-1-2-3
                    (0, 1, 1),
                    (1, 2, 1),
                    (2, 3, 1),
                    // green: the path 0-3-2-1
                    (0, 3, 2),
                    (1, 2, 2),
                    (2, 3, 2),
                ],
            )
            .expect("valid paths fixture"),
            &STAR_NAMES_3,
        );
        FixtureCatalog {
            different_centers_n4,
            different_centers_n5,
            same_center_n4,
            same_center_n5,
            shared_center_counterexample_n4,
            identical_trees_n4,
            two_centers_n5,
            paths_counterexample_n4,
        }
    }

    pub fn names() -> [&'static str; 8] {
        [
            "different_centers_n4",
            "different_centers_n5",
            "same_center_n4",
            "same_center_n5",
            "shared_center_counterexample_n4",
            "identical_trees_n4",
            "two_centers_n5",
            "paths_counterexample_n4",
        ]
    }

    pub fn by_name(&self, name: &str) -> Option<&GraphDocument> {
        match name {
            "different_centers_n4" => Some(&self.different_centers_n4),
            "different_centers_n5" => Some(&self.different_centers_n5),
            "same_center_n4" => Some(&self.same_center_n4),
            "same_center_n5" => Some(&self.same_center_n5),
            "shared_center_counterexample_n4" => Some(&self.shared_center_counterexample_n4),
            "identical_trees_n4" => Some(&self.identical_trees_n4),
            "two_centers_n5" => Some(&self.two_centers_n5),
            "paths_counterexample_n4" => Some(&self.paths_counterexample_n4),
            _ => None,
        }
    }

    pub fn entries(&self) -> Vec<(&'static str, &GraphDocument)> {
        Self::names()
            .iter()
            .map(|&name| (name, self.by_name(name).unwrap()))
            .collect()
    }
}

fn names(raw: &[&str]) -> Vec<String> {
    raw.iter().map(|s| s.to_string()).collect()
}
