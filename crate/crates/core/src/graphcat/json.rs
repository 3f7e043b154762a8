//! JSON forms of graphs and bypass maps.
//!
//! ```json
//! { "vertices": ["A","B"], "edges": [{"id":"e1","src":"A","tgt":"B"}] }
//! { "edge_fn": {"e1":"f1"}, "fiber_orders": {"f1":["e1"]} }
//! ```
//!
//! Unknown fields are rejected.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{BypassMap, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BypassMapJson {
    pub edge_fn: BTreeMap<String, String>,
    pub fiber_orders: BTreeMap<String, Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertices().labels().to_vec(),
            edges: g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| EdgeJson {
                    id: g.edge_id(i).to_string(),
                    src: g.vertices().label(e.src).to_string(),
                    tgt: g.vertices().label(e.tgt).to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        let vs = VertexSet::new(j.vertices)?;
        Graph::new(vs, j.edges.into_iter().map(|e| (e.id, e.src, e.tgt)))
    }
}

impl From<&BypassMap> for BypassMapJson {
    fn from(f: &BypassMap) -> Self {
        let (s, t) = (f.source(), f.target());
        BypassMapJson {
            edge_fn: f
                .edge_fn()
                .iter()
                .enumerate()
                .map(|(e, &img)| (s.edge_id(e).to_string(), t.edge_id(img).to_string()))
                .collect(),
            fiber_orders: f
                .fibers()
                .iter()
                .enumerate()
                .map(|(te, fib)| {
                    (
                        t.edge_id(te).to_string(),
                        fib.iter().map(|&e| s.edge_id(e).to_string()).collect(),
                    )
                })
                .collect(),
        }
    }
}

pub fn graph_from_json(text: &str) -> Result<Graph, GraphError> {
    let j: GraphJson = serde_json::from_str(text)?;
    j.try_into()
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}

/// Resolves the ids of a map against its source and target graphs. The
/// result is structurally checked but may still violate the bypass
/// conditions; see [`BypassMap::validate`]. A target edge missing from
/// `fiber_orders` has an empty fiber.
pub fn bypass_from_json(
    source: Arc<Graph>,
    target: Arc<Graph>,
    text: &str,
) -> Result<BypassMap, GraphError> {
    let j: BypassMapJson = serde_json::from_str(text)?;
    let mut edge_fn = vec![usize::MAX; source.edge_count()];
    for (e, img) in &j.edge_fn {
        edge_fn[source.edge_index(e)?] = target.edge_index(img)?;
    }
    if let Some(e) = edge_fn.iter().position(|&x| x == usize::MAX) {
        return Err(GraphError::EdgeFunctionLength {
            expected: source.edge_count(),
            found: e,
        });
    }
    let mut fibers = vec![Vec::new(); target.edge_count()];
    for (te, fib) in &j.fiber_orders {
        let t = target.edge_index(te)?;
        fibers[t] = fib
            .iter()
            .map(|e| source.edge_index(e))
            .collect::<Result<_, _>>()?;
    }
    BypassMap::from_parts(source, target, edge_fn, fibers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = r#"{"vertices":["A","B"],"edges":[{"id":"e1","src":"A","tgt":"B"},{"id":"e2","src":"B","tgt":"A"}]}"#;
        let g = graph_from_json(text).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edge_id(1), "e2");
        assert_eq!(graph_to_json(&g), text);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"vertices":["A"],"edges":[],"colour":"red"}"#;
        assert!(matches!(graph_from_json(text), Err(GraphError::Json(_))));
        let text = r#"{"vertices":["A"],"edges":[{"id":"x","src":"A","tgt":"A","w":1}]}"#;
        assert!(matches!(graph_from_json(text), Err(GraphError::Json(_))));
    }

    #[test]
    fn bypass_json() {
        let two = Arc::new(
            graph_from_json(r#"{"vertices":["A"],"edges":[{"id":"a","src":"A","tgt":"A"},{"id":"b","src":"A","tgt":"A"}]}"#)
                .unwrap(),
        );
        let one = Arc::new(
            graph_from_json(r#"{"vertices":["A"],"edges":[{"id":"f","src":"A","tgt":"A"}]}"#).unwrap(),
        );
        let text = r#"{"edge_fn":{"a":"f","b":"f"},"fiber_orders":{"f":["b","a"]}}"#;
        let f = bypass_from_json(two.clone(), one.clone(), text).unwrap();
        assert_eq!(f.fibers(), &[vec![1, 0]]);
        assert!(f.validate().is_ok());
        let back = serde_json::to_string(&BypassMapJson::from(&f)).unwrap();
        assert_eq!(back, text);

        let bad = r#"{"edge_fn":{"a":"f","b":"zz"},"fiber_orders":{"f":["b","a"]}}"#;
        assert!(matches!(
            bypass_from_json(two, one, bad),
            Err(GraphError::UnknownEdgeId(id)) if id == "zz"
        ));
    }
}
