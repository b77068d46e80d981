//! The four constructive decompositions.
//!
//! Each function returns a certified [`RainbowCollection`]: the output is
//! fully re-validated (disjoint, partitioning, rainbow, spanning, shaped)
//! before it is handed back, so a bug in a construction surfaces as an error
//! rather than a bad certificate.

use thiserror::Error;

use crate::collection::{DecompositionError, RainbowCollection, Shape};
use crate::graph::{ColorId, ColoredMultigraph, EdgeId, VertexId};
use crate::latin::LatinSquare;
use crate::star::{CenterArrangement, StarConfiguration};
use crate::util::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("monochromatic star centers are not pairwise distinct")]
    CentersNotDistinct,
    #[error("monochromatic stars do not all share one center")]
    CentersNotAllEqual,
    #[error("color classes are not copies of one spanning tree: {0}")]
    ClassesNotIdentical(String),
    #[error("Latin square has side {actual}, expected {expected}")]
    InvalidLatinSquare { expected: usize, actual: usize },
    #[error("invalid two-center configuration: {0}")]
    InvalidTwoCenterConfig(String),
    #[error("constructed decomposition failed self-verification: {0}")]
    CertificateFailure(#[from] DecompositionError),
}

/// All stars on distinct centers: star `RS_c` sits at the center of color
/// `c`; it keeps its own color on the edge toward the center-free vertex and
/// borrows, from every other star, that star's edge into `RS_c`'s center.
///
/// This is the unique rainbow-star decomposition of such a configuration.
pub fn construct_different_centers(
    cfg: &StarConfiguration,
) -> Result<RainbowCollection, ConstructError> {
    let mut is_center = vec![false; cfg.vertex_count()];
    for &c in cfg.centers() {
        if is_center[c.0] {
            return Err(ConstructError::CentersNotDistinct);
        }
        is_center[c.0] = true;
    }
    let free = VertexId(
        is_center
            .iter()
            .position(|&x| !x)
            .expect("n vertices, n - 1 distinct centers"),
    );
    let m = cfg.color_count();
    let mut parts = Vec::with_capacity(m);
    for c in 0..m {
        let color = ColorId(c);
        let own_center = cfg.center_of(color);
        let mut edges = vec![cfg.spoke(color, free)];
        for other in 0..m {
            if other != c {
                edges.push(cfg.spoke(ColorId(other), own_center));
            }
        }
        parts.push(edges);
    }
    Ok(RainbowCollection::new(cfg.graph(), Shape::Star, parts)?)
}

/// All stars on one center `v0`: part `j` takes from star `k` the edge to
/// leaf `(j + k) mod (n - 1)`, leaves indexed over the non-center vertices in
/// ascending order. The colors rotate between parts, so the rainbow matrix of
/// the output is the cyclic Latin square.
pub fn construct_same_center(cfg: &StarConfiguration) -> Result<RainbowCollection, ConstructError> {
    let center = match cfg.center_arrangement() {
        CenterArrangement::AllSame(v) => v,
        _ => return Err(ConstructError::CentersNotAllEqual),
    };
    let leaves: Vec<VertexId> = (0..cfg.vertex_count())
        .map(VertexId)
        .filter(|&v| v != center)
        .collect();
    let m = cfg.color_count();
    let mut parts = Vec::with_capacity(m);
    for j in 0..m {
        let edges = (0..m)
            .map(|k| cfg.spoke(ColorId(k), leaves[(j + k) % m]))
            .collect();
        parts.push(edges);
    }
    Ok(RainbowCollection::new(cfg.graph(), Shape::Star, parts)?)
}

/// `n - 1` monochromatic copies of one spanning tree: edge slot `e` of part
/// `i` receives the copy of slot `e` whose color is `square[i][e]`. Slots are
/// the template's endpoint pairs in normalized ascending order.
///
/// Distinct squares give distinct collections, and every Latin square gives a
/// valid decomposition of rainbow trees congruent to the template.
pub fn construct_identical_trees(
    graph: &ColoredMultigraph,
    square: &LatinSquare,
) -> Result<RainbowCollection, ConstructError> {
    let n = graph.vertex_count();
    let m = n - 1;
    if graph.color_count() != m {
        return Err(ConstructError::ClassesNotIdentical(format!(
            "{} colors for {} vertices",
            graph.color_count(),
            n
        )));
    }
    if square.side() != m {
        return Err(ConstructError::InvalidLatinSquare {
            expected: m,
            actual: square.side(),
        });
    }
    // slot_edges[color][slot]: the edge of `color` at the template slot.
    let mut slot_edges: Vec<Vec<EdgeId>> = Vec::with_capacity(m);
    let mut template: Option<Vec<(VertexId, VertexId)>> = None;
    for class in graph.color_classes() {
        if class.edges.len() != m {
            return Err(ConstructError::ClassesNotIdentical(format!(
                "color {} has {} edges, expected {}",
                class.color.0,
                class.edges.len(),
                m
            )));
        }
        let mut keyed: Vec<((VertexId, VertexId), EdgeId)> = class
            .edges
            .iter()
            .map(|&id| {
                let e = graph.edge(id);
                ((e.u.min(e.v), e.u.max(e.v)), id)
            })
            .collect();
        keyed.sort();
        let pairs: Vec<(VertexId, VertexId)> = keyed.iter().map(|&(p, _)| p).collect();
        match &template {
            None => {
                let mut uf = UnionFind::new(n);
                for &(u, v) in &pairs {
                    if !uf.union(u.0, v.0) {
                        return Err(ConstructError::ClassesNotIdentical(
                            "template is not a spanning tree".into(),
                        ));
                    }
                }
                template = Some(pairs);
            }
            Some(t) => {
                if *t != pairs {
                    return Err(ConstructError::ClassesNotIdentical(format!(
                        "color {} differs from the template",
                        class.color.0
                    )));
                }
            }
        }
        slot_edges.push(keyed.into_iter().map(|(_, id)| id).collect());
    }
    let parts = (0..m)
        .map(|i| (0..m).map(|e| slot_edges[square.get(i, e)][e]).collect())
        .collect();
    Ok(RainbowCollection::new(graph, Shape::Tree, parts)?)
}

/// A star configuration whose centers fall on exactly two vertices, together
/// with the color order used at each center.
///
/// The orders are arbitrary in principle; the default takes each center's
/// colors in ascending id. Construction validates that the orders exactly
/// cover each center's colors, so the rotation below never sees a tie.
#[derive(Clone, Debug)]
pub struct TwoCenterConfig {
    cfg: StarConfiguration,
    center_k: VertexId,
    center_j: VertexId,
    colors_k: Vec<ColorId>,
    colors_j: Vec<ColorId>,
}

impl TwoCenterConfig {
    /// Default orders: each center's colors ascending.
    pub fn from_configuration(cfg: &StarConfiguration) -> Result<Self, ConstructError> {
        let mut distinct: Vec<VertexId> = cfg.centers().to_vec();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != 2 {
            return Err(ConstructError::InvalidTwoCenterConfig(
                "centers do not fall on exactly two vertices".into(),
            ));
        }
        let (k, j) = (distinct[0], distinct[1]);
        let colors_k = (0..cfg.color_count())
            .map(ColorId)
            .filter(|&c| cfg.center_of(c) == k)
            .collect();
        let colors_j = (0..cfg.color_count())
            .map(ColorId)
            .filter(|&c| cfg.center_of(c) == j)
            .collect();
        Self::with_orders(cfg, colors_k, colors_j)
    }

    /// Explicit color orders; `colors_k` lists the colors centered at the
    /// first center in rotation order, `colors_j` those at the second.
    pub fn with_orders(
        cfg: &StarConfiguration,
        colors_k: Vec<ColorId>,
        colors_j: Vec<ColorId>,
    ) -> Result<Self, ConstructError> {
        if colors_k.is_empty() || colors_j.is_empty() {
            return Err(ConstructError::InvalidTwoCenterConfig(
                "each center needs at least one star".into(),
            ));
        }
        if colors_k.len() + colors_j.len() != cfg.color_count() {
            return Err(ConstructError::InvalidTwoCenterConfig(format!(
                "orders list {} colors, configuration has {}",
                colors_k.len() + colors_j.len(),
                cfg.color_count()
            )));
        }
        let mut seen = vec![false; cfg.color_count()];
        for &c in colors_k.iter().chain(colors_j.iter()) {
            if c.0 >= cfg.color_count() || seen[c.0] {
                return Err(ConstructError::InvalidTwoCenterConfig(format!(
                    "color {} repeated or out of range",
                    c.0
                )));
            }
            seen[c.0] = true;
        }
        let center_k = cfg.center_of(colors_k[0]);
        let center_j = cfg.center_of(colors_j[0]);
        if center_k == center_j {
            return Err(ConstructError::InvalidTwoCenterConfig(
                "both orders start at the same center".into(),
            ));
        }
        for &c in &colors_k {
            if cfg.center_of(c) != center_k {
                return Err(ConstructError::InvalidTwoCenterConfig(format!(
                    "color {} is not centered at vertex {}",
                    c.0, center_k.0
                )));
            }
        }
        for &c in &colors_j {
            if cfg.center_of(c) != center_j {
                return Err(ConstructError::InvalidTwoCenterConfig(format!(
                    "color {} is not centered at vertex {}",
                    c.0, center_j.0
                )));
            }
        }
        Ok(TwoCenterConfig {
            cfg: cfg.clone(),
            center_k,
            center_j,
            colors_k,
            colors_j,
        })
    }

    pub fn configuration(&self) -> &StarConfiguration {
        &self.cfg
    }

    pub fn centers(&self) -> (VertexId, VertexId) {
        (self.center_k, self.center_j)
    }

    pub fn orders(&self) -> (&[ColorId], &[ColorId]) {
        (&self.colors_k, &self.colors_j)
    }
}

/// Centers on two vertices `k` and `j`: builds `n - 1` rainbow spanning
/// trees, one per color `c`, each containing exactly one `k`-`j` edge (of
/// color `c`). The remaining colors rotate over the non-center vertices:
/// with colors listed as `colors_k` then `colors_j` (positions `p`) and
/// non-center vertices ascending (`w`), tree `t` assigns color `p != t` the
/// edge from its own center to `w[(t - p - 1) mod (n - 1)]`.
///
/// Every vertex other than the two centers has degree exactly 1 in each tree,
/// so no cycles can form.
pub fn construct_two_centers(tc: &TwoCenterConfig) -> Result<RainbowCollection, ConstructError> {
    let cfg = &tc.cfg;
    let n = cfg.vertex_count();
    let m = cfg.color_count();
    let order: Vec<ColorId> = tc
        .colors_k
        .iter()
        .chain(tc.colors_j.iter())
        .copied()
        .collect();
    let others: Vec<VertexId> = (0..n)
        .map(VertexId)
        .filter(|&v| v != tc.center_k && v != tc.center_j)
        .collect();
    let mut parts = Vec::with_capacity(m);
    for t in 0..m {
        let color = order[t];
        let own = cfg.center_of(color);
        let far = if own == tc.center_k {
            tc.center_j
        } else {
            tc.center_k
        };
        let mut edges = vec![cfg.spoke(color, far)];
        for (p, &other_color) in order.iter().enumerate() {
            if p == t {
                continue;
            }
            let w = others[(t + m - p - 1) % m];
            edges.push(cfg.spoke(other_color, w));
        }
        parts.push(edges);
    }
    Ok(RainbowCollection::new(cfg.graph(), Shape::Tree, parts)?)
}
