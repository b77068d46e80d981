//! The graph file format and DOT export.
//!
//! A graph file is a JSON document with three fields:
//!
//! ```json
//! {
//!   "n": 4,
//!   "edges": [
//!     [0, 1, 0],
//!     [0, 2, 0]
//!   ],
//!   "color_names": ["red", "blue", "green"]
//! }
//! ```
//!
//! * `n` — number of vertices (at least 2);
//! * `edges` — list of `[u, v, color]` triples, all 0-indexed; the list order
//!   defines edge ids;
//! * `color_names` — optional; when present its length defines the color
//!   count, otherwise the color count is the largest color used plus one.
//!
//! [`emit`] always produces the exact byte layout above (two-space indent,
//! one edge per line, trailing newline), so parse/emit round-trips are
//! byte-identical.

use serde::Deserialize;
use thiserror::Error;

use crate::collection::RainbowCollection;
use crate::graph::{ColoredMultigraph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("color_names lists {names} names but edge {index} uses color {color}")]
    NamesTooShort {
        names: usize,
        index: usize,
        color: usize,
    },
}

/// A graph plus the optional display names of its colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: ColoredMultigraph,
    pub color_names: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn bare(graph: ColoredMultigraph) -> Self {
        GraphDocument {
            graph,
            color_names: None,
        }
    }

    pub fn named(graph: ColoredMultigraph, names: &[&str]) -> Self {
        GraphDocument {
            graph,
            color_names: Some(names.iter().map(|s| s.to_string()).collect()),
        }
    }

    /// Display name of a color: the declared name if present, otherwise a
    /// palette color keyed by index (usable directly in DOT output).
    pub fn color_name(&self, color: usize) -> String {
        if let Some(names) = &self.color_names {
            if let Some(name) = names.get(color) {
                return name.clone();
            }
        }
        const PALETTE: [&str; 10] = [
            "red",
            "blue",
            "green",
            "gold",
            "purple",
            "orange",
            "turquoise",
            "magenta",
            "brown",
            "gray",
        ];
        if color < PALETTE.len() {
            PALETTE[color].to_string()
        } else {
            format!("color{color}")
        }
    }
}

#[derive(Deserialize)]
struct RawGraphFile {
    n: usize,
    edges: Vec<[usize; 3]>,
    #[serde(default)]
    color_names: Option<Vec<String>>,
}

/// Parses a graph file. Errors carry the offending edge index or the JSON
/// line/column.
pub fn parse(text: &str) -> Result<GraphDocument, ParseError> {
    let raw: RawGraphFile = serde_json::from_str(text)?;
    let max_color = raw.edges.iter().map(|e| e[2]).max();
    let color_count = match (&raw.color_names, max_color) {
        (Some(names), Some(max)) => {
            if max >= names.len() {
                let index = raw.edges.iter().position(|e| e[2] == max).unwrap();
                return Err(ParseError::NamesTooShort {
                    names: names.len(),
                    index,
                    color: max,
                });
            }
            names.len()
        }
        (Some(names), None) => names.len(),
        (None, Some(max)) => max + 1,
        (None, None) => 0,
    };
    let triples: Vec<(usize, usize, usize)> =
        raw.edges.iter().map(|e| (e[0], e[1], e[2])).collect();
    let graph = ColoredMultigraph::new(raw.n, color_count, &triples)?;
    Ok(GraphDocument {
        graph,
        color_names: raw.color_names,
    })
}

/// Emits the canonical byte layout of a graph file.
pub fn emit(doc: &GraphDocument) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"n\": {},\n", doc.graph.vertex_count()));
    if doc.graph.edge_count() == 0 {
        out.push_str("  \"edges\": []");
    } else {
        out.push_str("  \"edges\": [\n");
        let last = doc.graph.edge_count() - 1;
        for (i, e) in doc.graph.edges().iter().enumerate() {
            let sep = if i == last { "" } else { "," };
            out.push_str(&format!("    [{}, {}, {}]{}\n", e.u.0, e.v.0, e.color.0, sep));
        }
        out.push_str("  ]");
    }
    if let Some(names) = &doc.color_names {
        let quoted: Vec<String> = names
            .iter()
            .map(|n| serde_json::to_string(n).expect("string serializes"))
            .collect();
        out.push_str(&format!(",\n  \"color_names\": [{}]\n", quoted.join(", ")));
    } else {
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the graph, one line per edge, colored by class.
pub fn to_dot(doc: &GraphDocument) -> String {
    let mut out = String::new();
    out.push_str("graph G {\n");
    out.push_str("  node [shape=circle];\n");
    for v in doc.graph.vertices() {
        out.push_str(&format!("  {};\n", v.0));
    }
    for e in doc.graph.edges() {
        out.push_str(&format!(
            "  {} -- {} [color=\"{}\"];\n",
            e.u.0,
            e.v.0,
            doc.color_name(e.color.0)
        ));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a decomposition: edges keep their class color and carry
/// the index of the part that owns them.
pub fn decomposition_to_dot(doc: &GraphDocument, collection: &RainbowCollection) -> String {
    let mut owner = vec![0usize; doc.graph.edge_count()];
    for (i, part) in collection.parts().iter().enumerate() {
        for &id in &part.edges {
            owner[id.0] = i;
        }
    }
    let mut out = String::new();
    out.push_str("graph G {\n");
    out.push_str("  node [shape=circle];\n");
    for v in doc.graph.vertices() {
        out.push_str(&format!("  {};\n", v.0));
    }
    for e in doc.graph.edges() {
        out.push_str(&format!(
            "  {} -- {} [color=\"{}\", label=\"p{}\"];\n",
            e.u.0,
            e.v.0,
            doc.color_name(e.color.0),
            owner[e.id.0]
        ));
    }
    out.push_str("}\n");
    out
}
