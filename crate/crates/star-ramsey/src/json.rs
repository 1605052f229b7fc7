//! Canonical serialization of colorings and decompositions.
//!
//! The certificate schema is `{"n": .., "t": .., "edges": [[u, v, color], ..]}`
//! with `u < v` inside every triple and the triples in strictly ascending
//! lexicographic order. Serialization of the same coloring is byte-identical
//! across runs, so certificates can be diffed and golden-tested; the parser
//! rejects anything that is not already in canonical form.

use serde::{Deserialize, Serialize};

use crate::coloring::{Decomposition, EdgeColoring};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    n: usize,
    t: usize,
    edges: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionJson {
    n: usize,
    complete: bool,
    parts: Vec<Vec<(usize, usize)>>,
}

/// Serializes a coloring to the canonical certificate form.
pub fn coloring_to_json(c: &EdgeColoring) -> String {
    let edges = c
        .host()
        .edges()
        .iter()
        .zip(c.assignment())
        .map(|(&(u, v), &color)| (u, v, color))
        .collect();
    let doc = CertificateJson {
        n: c.host().n(),
        t: c.t(),
        edges,
    };
    serde_json::to_string(&doc).expect("certificate serialization cannot fail")
}

/// Parses a canonical certificate back into a coloring.
pub fn coloring_from_json(text: &str) -> Result<EdgeColoring> {
    let doc: CertificateJson = serde_json::from_str(text)?;
    let mut prev: Option<(usize, usize)> = None;
    for &(u, v, color) in &doc.edges {
        if u >= v {
            return Err(Error::InvalidCertificate(format!(
                "edge [{u},{v}] must satisfy u < v"
            )));
        }
        if v >= doc.n {
            return Err(Error::InvalidCertificate(format!(
                "edge [{u},{v}] leaves the vertex range 0..{}",
                doc.n
            )));
        }
        if color < 1 || color > doc.t {
            return Err(Error::InvalidCertificate(format!(
                "color {color} out of range 1..={}",
                doc.t
            )));
        }
        if let Some(p) = prev {
            if p >= (u, v) {
                return Err(Error::InvalidCertificate(format!(
                    "edges are not in strictly ascending order at [{u},{v}]"
                )));
            }
        }
        prev = Some((u, v));
    }
    EdgeColoring::from_colored_edges(doc.n, doc.t, doc.edges)
}

/// Serializes a decomposition with each part as its own edge list.
pub fn decomposition_to_json(d: &Decomposition) -> String {
    let doc = DecompositionJson {
        n: d.host().n(),
        complete: d.is_complete(),
        parts: d.parts().iter().map(|part| part.edges().to_vec()).collect(),
    };
    serde_json::to_string(&doc).expect("decomposition serialization cannot fail")
}

const DOT_PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#17becf",
    "#bcbd22", "#8c564b", "#2ca02c", "#1f77b4",
];

/// Renders a coloring as Graphviz DOT, one subgraph per color.
pub fn coloring_to_dot(c: &EdgeColoring) -> String {
    let mut out = String::from("graph coloring {\n  node [shape=circle];\n");
    for v in 0..c.host().n() {
        out.push_str(&format!("  {v};\n"));
    }
    for i in 1..=c.t() {
        let hex = DOT_PALETTE[(i - 1) % DOT_PALETTE.len()];
        out.push_str(&format!("  subgraph color_{i} {{\n"));
        out.push_str(&format!("    edge [color=\"{hex}\" label={i}];\n"));
        for (&(u, v), &color) in c.host().edges().iter().zip(c.assignment()) {
            if color == i {
                out.push_str(&format!("    {u} -- {v};\n"));
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn sample() -> EdgeColoring {
        EdgeColoring::from_colored_edges(3, 2, [(0, 2, 1), (1, 2, 2)]).unwrap()
    }

    #[test]
    fn golden_certificate_bytes() {
        assert_eq!(
            coloring_to_json(&sample()),
            r#"{"n":3,"t":2,"edges":[[0,2,1],[1,2,2]]}"#
        );
    }

    #[test]
    fn round_trip_is_identity() {
        let text = coloring_to_json(&sample());
        let parsed = coloring_from_json(&text).unwrap();
        assert_eq!(parsed, sample());
        assert_eq!(coloring_to_json(&parsed), text);
    }

    #[test]
    fn parser_rejects_non_canonical_input() {
        for bad in [
            r#"{"n":3,"t":2,"edges":[[2,0,1]]}"#,
            r#"{"n":3,"t":2,"edges":[[1,2,2],[0,2,1]]}"#,
            r#"{"n":3,"t":2,"edges":[[0,2,1],[0,2,1]]}"#,
            r#"{"n":3,"t":2,"edges":[[0,3,1]]}"#,
            r#"{"n":3,"t":2,"edges":[[0,2,0]]}"#,
            r#"{"n":3,"t":2,"edges":[[0,2,3]]}"#,
            r#"{"n":3,"t":2,"edges":[[1,1,1]]}"#,
        ] {
            assert!(coloring_from_json(bad).is_err(), "accepted {bad}");
        }
        assert!(coloring_from_json(r#"{"n":3,"t":2,"edges":[],"extra":1}"#).is_err());
        assert!(coloring_from_json("not json").is_err());
    }

    #[test]
    fn decomposition_export_lists_parts() {
        let host = Graph::complete(4).unwrap();
        let parts = vec![
            Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
            Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap(),
        ];
        let d = Decomposition::new(host, parts).unwrap();
        assert_eq!(
            decomposition_to_json(&d),
            r#"{"n":4,"complete":false,"parts":[[[0,1],[2,3]],[[0,2],[1,3]]]}"#
        );
    }

    #[test]
    fn dot_groups_edges_by_color() {
        let dot = coloring_to_dot(&sample());
        assert!(dot.starts_with("graph coloring {"));
        assert!(dot.contains("subgraph color_1"));
        assert!(dot.contains("subgraph color_2"));
        assert!(dot.contains("    0 -- 2;"));
        assert!(dot.contains("    1 -- 2;"));
        assert_eq!(dot.matches(" -- ").count(), 2);
    }

    proptest! {
        /// Any coloring survives JSON round-trips byte for byte.
        #[test]
        fn round_trip_random_colorings(n in 1usize..9, seed in any::<u64>(), t in 1usize..4) {
            let mut state = seed | 1;
            let mut rnd = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            let mut triples = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rnd() % 3 == 0 {
                        triples.push((u, v, (rnd() as usize % t) + 1));
                    }
                }
            }
            let c = EdgeColoring::from_colored_edges(n, t, triples).unwrap();
            let text = coloring_to_json(&c);
            let back = coloring_from_json(&text).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(coloring_to_json(&back), text);
        }
    }
}
