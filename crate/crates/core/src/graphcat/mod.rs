//! Finite directed multigraphs on a fixed vertex set, and the symmetric
//! monoidal category of bypass operations between them.
//!
//! Edges are addressed by position. Every graph also carries a display id per
//! edge (used by the JSON formats and in reports), but two graphs are equal
//! when they have the same vertex set and the same `(src, tgt)` sequence.
//! This is what makes the monoidal coherences hold on the nose: the tensor of
//! graphs concatenates edge lists, so `(a ⊗ b) ⊗ c` and `a ⊗ (b ⊗ c)` are the
//! same graph and the associator is an identity map.

mod bypass;
mod hom;
pub mod json;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use bypass::{BypassMap, ValidityReport, Violation};
pub use hom::hom_enumerate;
pub(crate) use hom::enumerate_fibers;

/// Index of a vertex inside its [`VertexSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub usize);

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("vertex index {0} is outside the vertex set")]
    VertexOutOfRange(usize),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdgeId(String),
    #[error("unknown edge id `{0}`")]
    UnknownEdgeId(String),
    #[error("graphs live on different vertex sets")]
    VertexSetMismatch,
    #[error("edge function has {found} entries, source graph has {expected} edges")]
    EdgeFunctionLength { expected: usize, found: usize },
    #[error("source edge {edge} is sent to target edge {image}, which does not exist")]
    EdgeOutOfRange { edge: usize, image: usize },
    #[error("{found} fiber lists given, target graph has {expected} edges")]
    FiberCount { expected: usize, found: usize },
    #[error("fiber lists do not partition the source edges (problem at source edge {0})")]
    NotAPartition(usize),
    #[error("maps are not composable: target of the first is not the source of the second")]
    NotComposable,
    #[error("not a bypass operation: {0:?}")]
    NotABypass(Vec<Violation>),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// The finite set `S` of vertex labels. Cloning is cheap.
#[derive(Clone)]
pub struct VertexSet {
    labels: Arc<[String]>,
}

impl VertexSet {
    pub fn new<I, L>(labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = L>,
        L: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        Ok(VertexSet {
            labels: labels.into(),
        })
    }

    /// `A, B, C, …` (then `V26, V27, …`).
    pub fn alphabetic(size: usize) -> Self {
        let labels: Vec<String> = (0..size)
            .map(|i| {
                if i < 26 {
                    char::from(b'A' + i as u8).to_string()
                } else {
                    format!("V{i}")
                }
            })
            .collect();
        VertexSet {
            labels: labels.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Result<Vertex, GraphError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(Vertex)
            .ok_or_else(|| GraphError::UnknownLabel(label.to_string()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.len()).map(Vertex)
    }

    fn check(&self, v: Vertex) -> Result<Vertex, GraphError> {
        if v.0 < self.len() {
            Ok(v)
        } else {
            Err(GraphError::VertexOutOfRange(v.0))
        }
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for VertexSet {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: Vertex,
    pub tgt: Vertex,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.src == self.tgt
    }
}

/// A finite directed multigraph on a [`VertexSet`].
#[derive(Clone)]
pub struct Graph {
    vertices: VertexSet,
    edges: Vec<Edge>,
    ids: Vec<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.vertices == other.vertices
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.edges.hash(state);
        self.vertices.len().hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}:{}→{}",
                self.ids[i],
                self.vertices.label(e.src),
                self.vertices.label(e.tgt)
            )?;
        }
        write!(f, "}}")
    }
}

fn positional_ids(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl Graph {
    /// The monoidal unit: no edges.
    pub fn empty(vertices: VertexSet) -> Self {
        Graph {
            vertices,
            edges: Vec::new(),
            ids: Vec::new(),
        }
    }

    /// Builds a graph from `(id, src label, tgt label)` triples.
    pub fn new<I, S1, S2, S3>(vertices: VertexSet, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (S1, S2, S3)>,
        S1: Into<String>,
        S2: AsRef<str>,
        S3: AsRef<str>,
    {
        let mut ids = Vec::new();
        let mut es = Vec::new();
        let mut seen = HashSet::new();
        for (id, s, t) in edges {
            let id: String = id.into();
            if !seen.insert(id.clone()) {
                return Err(GraphError::DuplicateEdgeId(id));
            }
            es.push(Edge {
                src: vertices.vertex(s.as_ref())?,
                tgt: vertices.vertex(t.as_ref())?,
            });
            ids.push(id);
        }
        Ok(Graph {
            vertices,
            edges: es,
            ids,
        })
    }

    /// Builds a graph from vertex pairs; edge ids are `e0, e1, …`.
    pub fn from_edges<I>(vertices: VertexSet, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges = edges
            .into_iter()
            .map(|(s, t)| {
                Ok(Edge {
                    src: vertices.check(s)?,
                    tgt: vertices.check(t)?,
                })
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        let ids = positional_ids(edges.len());
        Ok(Graph {
            vertices,
            edges,
            ids,
        })
    }

    /// One edge `X → Y`.
    pub fn pair(vertices: VertexSet, x: &str, y: &str) -> Result<Self, GraphError> {
        Self::path(vertices, &[x, y])
    }

    /// The path `X₀ → X₁ → ⋯ → Xₙ` (no edges when a single label is given).
    pub fn path(vertices: VertexSet, labels: &[&str]) -> Result<Self, GraphError> {
        let vs = labels
            .iter()
            .map(|l| vertices.vertex(l))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_edges(vertices, vs.windows(2).map(|w| (w[0], w[1])))
    }

    /// The closed cycle `X₀ → ⋯ → Xₙ → X₀`; a single label gives one loop.
    pub fn cycle(vertices: VertexSet, labels: &[&str]) -> Result<Self, GraphError> {
        let vs = labels
            .iter()
            .map(|l| vertices.vertex(l))
            .collect::<Result<Vec<_>, _>>()?;
        Self::cycle_on(vertices, &vs)
    }

    /// [`Graph::cycle`] on vertex indices. Edge `i` runs from `vs[i]` to `vs[i+1]`.
    pub fn cycle_on(vertices: VertexSet, vs: &[Vertex]) -> Result<Self, GraphError> {
        let n = vs.len();
        Self::from_edges(vertices, (0..n).map(|i| (vs[i], vs[(i + 1) % n])))
    }

    /// `k` loops at one vertex.
    pub fn loops(vertices: VertexSet, at: Vertex, k: usize) -> Result<Self, GraphError> {
        Self::from_edges(vertices, std::iter::repeat_n((at, at), k))
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn edge_index(&self, id: &str) -> Result<usize, GraphError> {
        self.ids
            .iter()
            .position(|x| x == id)
            .ok_or_else(|| GraphError::UnknownEdgeId(id.to_string()))
    }

    /// Replaces the display ids; positions are unchanged.
    pub fn with_ids(mut self, ids: Vec<String>) -> Result<Self, GraphError> {
        if ids.len() != self.edges.len() {
            return Err(GraphError::EdgeFunctionLength {
                expected: self.edges.len(),
                found: ids.len(),
            });
        }
        let mut seen = HashSet::new();
        for id in &ids {
            if !seen.insert(id) {
                return Err(GraphError::DuplicateEdgeId(id.clone()));
            }
        }
        self.ids = ids;
        Ok(self)
    }

    /// Disjoint union of edge sets: the edges of `self` come first.
    ///
    /// Ids are kept when the two id sets are disjoint; otherwise every id is
    /// tagged `l.`/`r.` by side.
    pub fn tensor(&self, other: &Graph) -> Result<Graph, GraphError> {
        if self.vertices != other.vertices {
            return Err(GraphError::VertexSetMismatch);
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        let left: HashSet<&String> = self.ids.iter().collect();
        let clash = other.ids.iter().any(|id| left.contains(id));
        let ids = if clash {
            self.ids
                .iter()
                .map(|id| format!("l.{id}"))
                .chain(other.ids.iter().map(|id| format!("r.{id}")))
                .collect()
        } else {
            self.ids.iter().chain(other.ids.iter()).cloned().collect()
        };
        Ok(Graph {
            vertices: self.vertices.clone(),
            edges,
            ids,
        })
    }

    /// Splits the graph into one-edge graphs, one per edge, in edge order.
    /// Tensoring them back together returns the graph.
    pub fn decompose(&self) -> Vec<Graph> {
        self.edges
            .iter()
            .zip(&self.ids)
            .map(|(e, id)| Graph {
                vertices: self.vertices.clone(),
                edges: vec![*e],
                ids: vec![id.clone()],
            })
            .collect()
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.src == v).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.tgt == v).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> VertexSet {
        VertexSet::new(["A", "B", "C"]).unwrap()
    }

    #[test]
    fn special_graphs() {
        let s = ab();
        let c = Graph::cycle(s.clone(), &["A"]).unwrap();
        assert_eq!(c.edge_count(), 1);
        assert!(c.edge(0).is_loop());

        let p = Graph::path(s.clone(), &["A", "B", "C"]).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.edge(0), Edge { src: Vertex(0), tgt: Vertex(1) });
        assert_eq!(p.edge(1), Edge { src: Vertex(1), tgt: Vertex(2) });

        let c2 = Graph::cycle(s.clone(), &["A", "B"]).unwrap();
        assert_eq!(c2.edge(0), Edge { src: Vertex(0), tgt: Vertex(1) });
        assert_eq!(c2.edge(1), Edge { src: Vertex(1), tgt: Vertex(0) });

        assert!(matches!(
            Graph::pair(s, "A", "Z"),
            Err(GraphError::UnknownLabel(l)) if l == "Z"
        ));
    }

    #[test]
    fn tensor_of_pairs_is_a_path() {
        let s = ab();
        let ab = Graph::pair(s.clone(), "A", "B").unwrap();
        let bc = Graph::pair(s.clone(), "B", "C").unwrap();
        let t = ab.tensor(&bc).unwrap();
        assert_eq!(t, Graph::path(s.clone(), &["A", "B", "C"]).unwrap());
        // both inputs use id `e0`, so the result is tagged
        assert_eq!(t.edge_ids(), ["l.e0", "r.e0"]);
        let unit = Graph::empty(s);
        assert_eq!(ab.tensor(&unit).unwrap(), ab);
        assert_eq!(unit.tensor(&ab).unwrap(), ab);
    }

    #[test]
    fn tensor_rejects_mismatched_vertex_sets() {
        let a = Graph::empty(VertexSet::new(["A"]).unwrap());
        let b = Graph::empty(VertexSet::new(["B"]).unwrap());
        assert!(matches!(a.tensor(&b), Err(GraphError::VertexSetMismatch)));
    }

    #[test]
    fn decomposition_into_pairs_is_unique() {
        let s = ab();
        let g = Graph::from_edges(
            s,
            [(Vertex(0), Vertex(1)), (Vertex(2), Vertex(2)), (Vertex(1), Vertex(0))],
        )
        .unwrap();
        let parts = g.decompose();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.edge_count() == 1));
        let back = parts
            .iter()
            .skip(1)
            .try_fold(parts[0].clone(), |acc, p| acc.tensor(p))
            .unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            VertexSet::new(["A", "A"]),
            Err(GraphError::DuplicateLabel(_))
        ));
        let s = ab();
        assert!(matches!(
            Graph::new(s.clone(), [("x", "A", "B"), ("x", "B", "A")]),
            Err(GraphError::DuplicateEdgeId(_))
        ));
        assert!(matches!(
            Graph::from_edges(s, [(Vertex(0), Vertex(7))]),
            Err(GraphError::VertexOutOfRange(7))
        ));
    }
}
