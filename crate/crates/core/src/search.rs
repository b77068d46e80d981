//! Exhaustive backtracking search for rainbow decompositions.
//!
//! Because every part of a decomposition is rainbow with `n - 1` edges and
//! there are exactly `n - 1` colors, each part takes exactly one edge of each
//! color; equivalently, each color class distributes its `n - 1` edges over
//! the `n - 1` parts as a perfect matching. The search assigns edges
//! color-by-color under that view and prunes on shape violations.
//!
//! Unordered collections are counted once: the edges of color 0 are pinned to
//! parts in ascending id order, which picks exactly one labeled
//! representative per unordered collection. No further symmetry (color or
//! vertex relabeling) is quotiented, matching how the collection counts are
//! defined.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::collection::{check_part, RainbowCollection, Shape};
use crate::graph::{ColoredMultigraph, EdgeId};
use crate::latin;
use crate::star::{CenterArrangement, StarConfiguration};
use crate::util::UnionFind;

/// Default hard cap on placement attempts before the search gives up.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Stop at the first decomposition found.
    Exists,
    /// Visit the whole space and report the exact count.
    Count,
    /// Count exactly and also collect certificates (up to `limit`).
    Enumerate,
}

#[derive(Clone, Debug)]
pub struct SearchRequest {
    pub graph: ColoredMultigraph,
    pub shape: Shape,
    pub mode: SearchMode,
    /// Maximum number of certificates to retain; only meaningful in
    /// enumerate mode. The count stays exact regardless.
    pub limit: Option<usize>,
    pub node_budget: u64,
}

impl SearchRequest {
    pub fn new(graph: ColoredMultigraph, shape: Shape, mode: SearchMode) -> Self {
        SearchRequest {
            graph,
            shape,
            mode,
            limit: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Outcome of a search. `exhausted` means the backtracking ran to completion
/// within budget, in which case `count` is the exact number of distinct
/// unordered decompositions. An exists-mode search that stops at its first
/// hit reports `exhausted = false` with `count = 1` (a lower bound).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub shape: Shape,
    pub mode: SearchMode,
    pub count: u64,
    pub exhausted: bool,
    /// Placement attempts spent, for budget diagnostics.
    pub nodes: u64,
    pub certificates: Vec<RainbowCollection>,
}

impl SearchReport {
    pub fn exists(&self) -> bool {
        self.count > 0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("not a searchable instance: {0}")]
    UnsupportedInstance(String),
    #[error("search node budget of {budget} exceeded")]
    InstanceTooLarge { budget: u64 },
}

enum Flow {
    Continue,
    Stop,
}

struct Searcher<'g> {
    graph: &'g ColoredMultigraph,
    shape: Shape,
    mode: SearchMode,
    limit: Option<usize>,
    budget: u64,
    prune: bool,
    m: usize,
    classes: Vec<Vec<EdgeId>>,
    used: Vec<u64>,
    parts: Vec<Vec<EdgeId>>,
    forests: Vec<UnionFind>,
    center_masks: Vec<u128>,
    degrees: Vec<Vec<u8>>,
    nodes: u64,
    count: u64,
    certificates: Vec<RainbowCollection>,
    found_and_stopped: bool,
    budget_hit: bool,
}

struct Undo {
    snapshot: usize,
    center_mask: u128,
}

impl<'g> Searcher<'g> {
    fn new(req: &'g SearchRequest, prune: bool) -> Result<Self, SearchError> {
        let graph = &req.graph;
        let n = graph.vertex_count();
        let m = graph.color_count();
        if m != n - 1 {
            return Err(SearchError::UnsupportedInstance(format!(
                "{m} colors on {n} vertices, expected {}",
                n - 1
            )));
        }
        if m > 64 {
            return Err(SearchError::UnsupportedInstance(
                "more than 64 colors".into(),
            ));
        }
        if !graph.is_connected() {
            return Err(SearchError::UnsupportedInstance(
                "graph is not connected".into(),
            ));
        }
        let classes: Vec<Vec<EdgeId>> = graph
            .color_classes()
            .into_iter()
            .map(|c| c.edges)
            .collect();
        for (color, class) in classes.iter().enumerate() {
            if class.len() != n - 1 {
                return Err(SearchError::UnsupportedInstance(format!(
                    "color {color} has {} edges, expected {}",
                    class.len(),
                    n - 1
                )));
            }
        }
        Ok(Searcher {
            graph,
            shape: req.shape,
            mode: req.mode,
            limit: req.limit,
            budget: req.node_budget,
            prune,
            m,
            classes,
            used: vec![0; m],
            parts: vec![Vec::new(); m],
            forests: (0..m).map(|_| UnionFind::new(n)).collect(),
            center_masks: vec![!0u128; m],
            degrees: vec![vec![0u8; n]; m],
            nodes: 0,
            count: 0,
            certificates: Vec::new(),
            found_and_stopped: false,
            budget_hit: false,
        })
    }

    fn try_place(&mut self, part: usize, id: EdgeId) -> Option<Undo> {
        self.parts[part].push(id);
        if !self.prune {
            return Some(Undo {
                snapshot: 0,
                center_mask: 0,
            });
        }
        let e = self.graph.edge(id);
        let undo = Undo {
            snapshot: self.forests[part].snapshot(),
            center_mask: self.center_masks[part],
        };
        if !self.forests[part].union(e.u.0, e.v.0) {
            self.parts[part].pop();
            return None;
        }
        match self.shape {
            Shape::Tree => {}
            Shape::Star => {
                let mask = self.center_masks[part] & ((1u128 << e.u.0) | (1u128 << e.v.0));
                if mask == 0 {
                    self.forests[part].rollback(undo.snapshot);
                    self.parts[part].pop();
                    return None;
                }
                self.center_masks[part] = mask;
            }
            Shape::Path => {
                if self.degrees[part][e.u.0] == 2 || self.degrees[part][e.v.0] == 2 {
                    self.forests[part].rollback(undo.snapshot);
                    self.parts[part].pop();
                    return None;
                }
                self.degrees[part][e.u.0] += 1;
                self.degrees[part][e.v.0] += 1;
            }
        }
        Some(undo)
    }

    fn unplace(&mut self, part: usize, undo: Undo) {
        let id = self.parts[part].pop().expect("placed edge");
        if !self.prune {
            return;
        }
        self.forests[part].rollback(undo.snapshot);
        self.center_masks[part] = undo.center_mask;
        if self.shape == Shape::Path {
            let e = self.graph.edge(id);
            self.degrees[part][e.u.0] -= 1;
            self.degrees[part][e.v.0] -= 1;
        }
    }

    fn leaf(&mut self) -> Flow {
        if !self.prune {
            let ok = (0..self.m)
                .all(|p| check_part(self.graph, p, &self.parts[p], self.shape).is_ok());
            if !ok {
                return Flow::Continue;
            }
        }
        self.count += 1;
        let keep = match self.mode {
            SearchMode::Exists => true,
            SearchMode::Count => false,
            SearchMode::Enumerate => self.certificates.len() < self.limit.unwrap_or(usize::MAX),
        };
        if keep {
            let collection =
                RainbowCollection::new(self.graph, self.shape, self.parts.clone())
                    .expect("search leaves are valid decompositions");
            self.certificates.push(collection);
        }
        if matches!(self.mode, SearchMode::Exists) {
            self.found_and_stopped = true;
            return Flow::Stop;
        }
        Flow::Continue
    }

    fn assign(&mut self, color: usize, part: usize) -> Flow {
        if color == self.m {
            return self.leaf();
        }
        let (next_color, next_part) = if part + 1 == self.m {
            (color + 1, 0)
        } else {
            (color, part + 1)
        };
        for pos in 0..self.m {
            if self.used[color] >> pos & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.budget_hit = true;
                return Flow::Stop;
            }
            let id = self.classes[color][pos];
            if let Some(undo) = self.try_place(part, id) {
                self.used[color] |= 1 << pos;
                let flow = self.assign(next_color, next_part);
                self.used[color] &= !(1 << pos);
                self.unplace(part, undo);
                if matches!(flow, Flow::Stop) {
                    return Flow::Stop;
                }
            }
        }
        Flow::Continue
    }

    fn run(&mut self) -> Flow {
        // Pin color 0: its edges go to parts in ascending id order, selecting
        // one labeled representative per unordered collection.
        for part in 0..self.m {
            self.nodes += 1;
            let id = self.classes[0][part];
            if self.try_place(part, id).is_none() {
                return Flow::Continue; // single edges never fail shape checks
            }
        }
        self.assign(1, 0)
    }
}

pub(crate) fn search_with_pruning(
    req: &SearchRequest,
    prune: bool,
) -> Result<SearchReport, SearchError> {
    let mut searcher = Searcher::new(req, prune)?;
    searcher.run();
    if searcher.budget_hit && !matches!(req.mode, SearchMode::Enumerate) {
        return Err(SearchError::InstanceTooLarge {
            budget: req.node_budget,
        });
    }
    Ok(SearchReport {
        shape: req.shape,
        mode: req.mode,
        count: searcher.count,
        exhausted: !searcher.budget_hit && !searcher.found_and_stopped,
        nodes: searcher.nodes,
        certificates: searcher.certificates,
    })
}

/// Finds, counts, or enumerates all decompositions of the requested shape.
///
/// With `exhausted = true` the count is exactly the number of distinct
/// unordered decompositions of the full edge multiset into `n - 1`
/// edge-disjoint rainbow spanning subgraphs of that shape. Deterministic:
/// identical requests produce identical reports, certificates in stable
/// depth-first order.
///
/// Exceeding the node budget raises [`SearchError::InstanceTooLarge`] in
/// exists and count modes; enumerate mode instead returns the partial report
/// with `exhausted = false`.
pub fn search_decompositions(req: &SearchRequest) -> Result<SearchReport, SearchError> {
    search_with_pruning(req, true)
}

/// The iff-characterization of stars-to-stars feasibility: a star
/// configuration admits a rainbow-star decomposition exactly when all
/// monochromatic stars share one center or all have different centers.
/// O(n); performs no search.
pub fn stars_to_stars_feasible(cfg: &StarConfiguration) -> bool {
    let n = cfg.vertex_count();
    let s = cfg.stars_per_vertex();
    s.iter().all(|&k| k <= 1) || s.iter().any(|&k| k == n - 1)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("exact collection count unavailable for n = {0}: out of supported range")]
    CountUnavailable(usize),
}

/// Closed-form count of rainbow-star decompositions: 1 when all centers are
/// distinct, `omega(n)` when all centers coincide, 0 otherwise. Agrees with
/// the search oracle wherever the oracle terminates.
pub fn count_rainbow_star_decompositions_fast(
    cfg: &StarConfiguration,
) -> Result<BigUint, CountError> {
    let n = cfg.vertex_count();
    match cfg.center_arrangement() {
        CenterArrangement::AllDistinct => Ok(BigUint::from(1u32)),
        CenterArrangement::AllSame(_) => {
            latin::count_omega(n).map_err(|_| CountError::CountUnavailable(n))
        }
        _ => Ok(BigUint::from(0u32)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_different_centers;
    use crate::fixtures::{star_graph, FixtureCatalog};

    fn count(graph: &ColoredMultigraph, shape: Shape) -> u64 {
        let req = SearchRequest::new(graph.clone(), shape, SearchMode::Count);
        let report = search_decompositions(&req).unwrap();
        assert!(report.exhausted);
        report.count
    }

    #[test]
    fn distinct_centers_has_unique_star_decomposition() {
        let doc = FixtureCatalog::bundled().different_centers_n4;
        let req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Enumerate);
        let report = search_decompositions(&req).unwrap();
        assert_eq!(report.count, 1);
        let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
        assert_eq!(
            report.certificates[0],
            construct_different_centers(&cfg).unwrap()
        );
    }

    #[test]
    fn same_center_n4_has_two_collections() {
        let doc = FixtureCatalog::bundled().same_center_n4;
        let req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Enumerate);
        let report = search_decompositions(&req).unwrap();
        assert_eq!(report.count, 2);
        assert_ne!(report.certificates[0], report.certificates[1]);
    }

    #[test]
    fn shared_center_admits_no_stars_but_two_trees() {
        let doc = FixtureCatalog::bundled().shared_center_counterexample_n4;
        let req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Exists);
        let report = search_decompositions(&req).unwrap();
        assert!(!report.exists());
        assert!(report.exhausted);
        assert_eq!(count(&doc.graph, Shape::Tree), 2);
    }

    #[test]
    fn paths_counterexample_has_no_rainbow_paths() {
        let doc = FixtureCatalog::bundled().paths_counterexample_n4;
        assert_eq!(count(&doc.graph, Shape::Path), 0);
    }

    #[test]
    fn single_edge_counts_once() {
        let g = star_graph(2, &[0]).graph;
        assert_eq!(count(&g, Shape::Star), 1);
        assert_eq!(count(&g, Shape::Tree), 1);
        assert_eq!(count(&g, Shape::Path), 1);
    }

    #[test]
    fn exists_mode_stops_early() {
        let doc = FixtureCatalog::bundled().same_center_n5;
        let req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Exists);
        let report = search_decompositions(&req).unwrap();
        assert!(report.exists());
        assert_eq!(report.count, 1);
        assert!(!report.exhausted);
        assert_eq!(report.certificates.len(), 1);
    }

    #[test]
    fn enumerate_limit_caps_certificates_not_count() {
        let doc = FixtureCatalog::bundled().same_center_n5;
        let mut req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Enumerate);
        req.limit = Some(5);
        let report = search_decompositions(&req).unwrap();
        assert_eq!(report.count, 24);
        assert_eq!(report.certificates.len(), 5);
        assert!(report.exhausted);
    }

    #[test]
    fn enumerated_certificates_are_distinct_and_valid() {
        let doc = FixtureCatalog::bundled().same_center_n5;
        let req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Enumerate);
        let report = search_decompositions(&req).unwrap();
        assert_eq!(report.count, 24);
        assert_eq!(report.certificates.len(), 24);
        for a in 0..report.certificates.len() {
            for b in a + 1..report.certificates.len() {
                assert_ne!(report.certificates[a], report.certificates[b]);
            }
        }
        // Re-validating through the public constructor must succeed.
        for cert in &report.certificates {
            let parts: Vec<Vec<EdgeId>> = cert.parts().iter().map(|p| p.edges.clone()).collect();
            RainbowCollection::new(&doc.graph, Shape::Star, parts).unwrap();
        }
    }

    #[test]
    fn search_is_deterministic() {
        let doc = FixtureCatalog::bundled().same_center_n4;
        let req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Enumerate);
        let a = search_decompositions(&req).unwrap();
        let b = search_decompositions(&req).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pruning_does_not_change_counts() {
        for (shape, centers) in [
            (Shape::Star, vec![0usize, 0, 0]),
            (Shape::Star, vec![0, 1, 2]),
            (Shape::Tree, vec![0, 0, 1]),
            (Shape::Path, vec![0, 1, 0]),
            (Shape::Tree, vec![2, 2, 2]),
        ] {
            let g = star_graph(4, &centers).graph;
            let req = SearchRequest::new(g, shape, SearchMode::Count);
            let pruned = search_with_pruning(&req, true).unwrap();
            let unpruned = search_with_pruning(&req, false).unwrap();
            assert_eq!(pruned.count, unpruned.count, "{centers:?} {shape}");
        }
    }

    #[test]
    fn budget_exhaustion() {
        let doc = FixtureCatalog::bundled().same_center_n5;
        let mut req = SearchRequest::new(doc.graph.clone(), Shape::Star, SearchMode::Count);
        req.node_budget = 10;
        assert_eq!(
            search_decompositions(&req),
            Err(SearchError::InstanceTooLarge { budget: 10 })
        );
        req.mode = SearchMode::Enumerate;
        let partial = search_decompositions(&req).unwrap();
        assert!(!partial.exhausted);
        assert!(partial.count <= 24);
    }

    #[test]
    fn rejects_malformed_instances() {
        let g = ColoredMultigraph::new(3, 1, &[(0, 1, 0), (1, 2, 0)]).unwrap();
        let req = SearchRequest::new(g, Shape::Tree, SearchMode::Count);
        assert!(matches!(
            search_decompositions(&req),
            Err(SearchError::UnsupportedInstance(_))
        ));
        let disconnected =
            ColoredMultigraph::new(4, 3, &[(0, 1, 0), (0, 1, 1), (0, 1, 2), (2, 3, 0), (2, 3, 1), (2, 3, 2)])
                .unwrap();
        let req = SearchRequest::new(disconnected, Shape::Tree, SearchMode::Count);
        assert!(matches!(
            search_decompositions(&req),
            Err(SearchError::UnsupportedInstance(_))
        ));
    }

    #[test]
    fn feasibility_characterization_on_fixtures() {
        let cat = FixtureCatalog::bundled();
        let cases = [
            (&cat.different_centers_n4, true),
            (&cat.same_center_n4, true),
            (&cat.shared_center_counterexample_n4, false),
        ];
        for (doc, want) in cases {
            let cfg = StarConfiguration::from_graph(&doc.graph).unwrap();
            assert_eq!(stars_to_stars_feasible(&cfg), want);
        }
    }

    #[test]
    fn fast_counts_match_arrangements() {
        let cat = FixtureCatalog::bundled();
        let one = BigUint::from(1u32);
        let cfg = StarConfiguration::from_graph(&cat.different_centers_n5.graph).unwrap();
        assert_eq!(count_rainbow_star_decompositions_fast(&cfg).unwrap(), one);
        let cfg = StarConfiguration::from_graph(&cat.same_center_n5.graph).unwrap();
        assert_eq!(
            count_rainbow_star_decompositions_fast(&cfg).unwrap(),
            BigUint::from(24u32)
        );
        let cfg =
            StarConfiguration::from_graph(&cat.shared_center_counterexample_n4.graph).unwrap();
        assert_eq!(
            count_rainbow_star_decompositions_fast(&cfg).unwrap(),
            BigUint::from(0u32)
        );
    }
}
