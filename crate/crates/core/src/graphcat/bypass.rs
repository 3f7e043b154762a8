use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{Graph, GraphError, Vertex};

/// A semantic defect of a would-be bypass operation, reported per target edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The fiber over `target_edge` is empty but the edge is not a loop.
    EmptyFiberNotLoop { target_edge: usize },
    /// The first edge of the fiber does not start at the target edge's source.
    WrongStart { target_edge: usize },
    /// The last edge of the fiber does not end at the target edge's target.
    WrongEnd { target_edge: usize },
    /// Consecutive fiber edges `position` and `position + 1` do not meet.
    BrokenPath { target_edge: usize, position: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyFiberNotLoop { target_edge } => {
                write!(f, "empty fiber over non-loop edge {target_edge}")
            }
            Violation::WrongStart { target_edge } => {
                write!(f, "fiber over edge {target_edge} starts at the wrong vertex")
            }
            Violation::WrongEnd { target_edge } => {
                write!(f, "fiber over edge {target_edge} ends at the wrong vertex")
            }
            Violation::BrokenPath { target_edge, position } => write!(
                f,
                "fiber over edge {target_edge} is not a path at position {position}"
            ),
        }
    }
}

/// Outcome of [`BypassMap::validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A morphism of `Bypass_S`: an edge function together with a total order on
/// every fiber.
///
/// Values built through [`BypassMap::new`] and the other public constructors
/// are always valid bypass operations. [`BypassMap::from_parts`] only checks
/// structure, so that malformed input can be inspected with
/// [`BypassMap::validate`].
#[derive(Clone)]
pub struct BypassMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    edge_fn: Vec<usize>,
    fibers: Vec<Vec<usize>>,
}

impl PartialEq for BypassMap {
    fn eq(&self, other: &Self) -> bool {
        self.fibers == other.fibers && self.source == other.source && self.target == other.target
    }
}

impl Eq for BypassMap {}

impl fmt::Debug for BypassMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BypassMap({} → {}; ", self.source, self.target)?;
        for (t, fib) in self.fibers.iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            let names: Vec<&str> = fib.iter().map(|&e| self.source.edge_id(e)).collect();
            write!(f, "{}←[{}]", self.target.edge_id(t), names.join("<"))?;
        }
        write!(f, ")")
    }
}

impl BypassMap {
    /// Checks the data is structurally a function with ordered fibers; does
    /// not check the bypass conditions.
    pub fn from_parts(
        source: Arc<Graph>,
        target: Arc<Graph>,
        edge_fn: Vec<usize>,
        fibers: Vec<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        if source.vertices() != target.vertices() {
            return Err(GraphError::VertexSetMismatch);
        }
        if edge_fn.len() != source.edge_count() {
            return Err(GraphError::EdgeFunctionLength {
                expected: source.edge_count(),
                found: edge_fn.len(),
            });
        }
        if let Some((edge, &image)) = edge_fn
            .iter()
            .enumerate()
            .find(|(_, &img)| img >= target.edge_count())
        {
            return Err(GraphError::EdgeOutOfRange { edge, image });
        }
        if fibers.len() != target.edge_count() {
            return Err(GraphError::FiberCount {
                expected: target.edge_count(),
                found: fibers.len(),
            });
        }
        let mut seen = vec![false; source.edge_count()];
        for (t, fib) in fibers.iter().enumerate() {
            for &e in fib {
                if e >= source.edge_count() || seen[e] || edge_fn[e] != t {
                    return Err(GraphError::NotAPartition(e));
                }
                seen[e] = true;
            }
        }
        if let Some(e) = seen.iter().position(|s| !s) {
            return Err(GraphError::NotAPartition(e));
        }
        Ok(BypassMap {
            source,
            target,
            edge_fn,
            fibers,
        })
    }

    /// Structural constructor from fibers alone; the edge function is read off.
    pub fn from_fibers(
        source: Arc<Graph>,
        target: Arc<Graph>,
        fibers: Vec<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        let mut edge_fn = vec![usize::MAX; source.edge_count()];
        for (t, fib) in fibers.iter().enumerate() {
            for &e in fib {
                match edge_fn.get_mut(e) {
                    Some(slot) if *slot == usize::MAX => *slot = t,
                    _ => return Err(GraphError::NotAPartition(e)),
                }
            }
        }
        if let Some(e) = edge_fn.iter().position(|&t| t == usize::MAX) {
            return Err(GraphError::NotAPartition(e));
        }
        Self::from_parts(source, target, edge_fn, fibers)
    }

    /// A valid bypass operation with the given fibers.
    pub fn new(
        source: Arc<Graph>,
        target: Arc<Graph>,
        fibers: Vec<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        let map = Self::from_fibers(source, target, fibers)?;
        let report = map.validate();
        if report.is_ok() {
            Ok(map)
        } else {
            Err(GraphError::NotABypass(report.violations))
        }
    }

    /// Checks the empty-fiber (loop) condition and the path condition on
    /// every target edge.
    pub fn validate(&self) -> ValidityReport {
        let mut violations = Vec::new();
        for (t, fib) in self.fibers.iter().enumerate() {
            let te = self.target.edge(t);
            let Some((&first, &last)) = fib.first().zip(fib.last()) else {
                if !te.is_loop() {
                    violations.push(Violation::EmptyFiberNotLoop { target_edge: t });
                }
                continue;
            };
            if self.source.edge(first).src != te.src {
                violations.push(Violation::WrongStart { target_edge: t });
            }
            for (position, w) in fib.windows(2).enumerate() {
                if self.source.edge(w[0]).tgt != self.source.edge(w[1]).src {
                    violations.push(Violation::BrokenPath {
                        target_edge: t,
                        position,
                    });
                }
            }
            if self.source.edge(last).tgt != te.tgt {
                violations.push(Violation::WrongEnd { target_edge: t });
            }
        }
        ValidityReport { violations }
    }

    pub fn identity(graph: Arc<Graph>) -> Self {
        let n = graph.edge_count();
        BypassMap {
            source: graph.clone(),
            target: graph,
            edge_fn: (0..n).collect(),
            fibers: (0..n).map(|e| vec![e]).collect(),
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn edge_fn(&self) -> &[usize] {
        &self.edge_fn
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn fiber(&self, target_edge: usize) -> &[usize] {
        &self.fibers[target_edge]
    }

    /// `self ∘ first`. The fiber of a target edge of `self` is the
    /// concatenation, in `self`'s fiber order, of `first`'s fibers.
    pub fn compose(&self, first: &BypassMap) -> Result<BypassMap, GraphError> {
        if *first.target != *self.source {
            return Err(GraphError::NotComposable);
        }
        let fibers: Vec<Vec<usize>> = self
            .fibers
            .iter()
            .map(|fib| fib.iter().flat_map(|&mid| first.fibers[mid].iter().copied()).collect())
            .collect();
        let edge_fn = first.edge_fn.iter().map(|&mid| self.edge_fn[mid]).collect();
        Ok(BypassMap {
            source: first.source.clone(),
            target: self.target.clone(),
            edge_fn,
            fibers,
        })
    }

    /// `self ⊗ other`, acting on the concatenated edge lists.
    pub fn tensor(&self, other: &BypassMap) -> Result<BypassMap, GraphError> {
        let source = Arc::new(self.source.tensor(&other.source)?);
        let target = Arc::new(self.target.tensor(&other.target)?);
        let (ns, nt) = (self.source.edge_count(), self.target.edge_count());
        let fibers = self
            .fibers
            .iter()
            .cloned()
            .chain(
                other
                    .fibers
                    .iter()
                    .map(|fib| fib.iter().map(|&e| e + ns).collect()),
            )
            .collect();
        let edge_fn = self
            .edge_fn
            .iter()
            .copied()
            .chain(other.edge_fn.iter().map(|&t| t + nt))
            .collect();
        Ok(BypassMap {
            source,
            target,
            edge_fn,
            fibers,
        })
    }

    /// The symmetry `a ⊗ b → b ⊗ a`.
    pub fn symmetry(a: &Graph, b: &Graph) -> Result<BypassMap, GraphError> {
        let source = Arc::new(a.tensor(b)?);
        let target = Arc::new(b.tensor(a)?);
        let (na, nb) = (a.edge_count(), b.edge_count());
        // target edge j < nb is b's edge j (source position na + j)
        let fibers = (0..nb)
            .map(|j| vec![na + j])
            .chain((0..na).map(|i| vec![i]))
            .collect();
        Self::from_fibers(source, target, fibers)
    }

    /// The generating bypass `(X, Y) ⊗ (Y, Z) → (X, Z)`.
    pub fn generator_compose(
        vertices: &super::VertexSet,
        x: &str,
        y: &str,
        z: &str,
    ) -> Result<BypassMap, GraphError> {
        let source = Arc::new(Graph::path(vertices.clone(), &[x, y, z])?);
        let target = Arc::new(Graph::pair(vertices.clone(), x, z)?);
        Self::new(source, target, vec![vec![0, 1]])
    }

    /// The generating bypass `∅ → (X, X)`.
    pub fn generator_unit(vertices: &super::VertexSet, x: &str) -> Result<BypassMap, GraphError> {
        let source = Arc::new(Graph::empty(vertices.clone()));
        let target = Arc::new(Graph::pair(vertices.clone(), x, x)?);
        Self::new(source, target, vec![vec![]])
    }

    /// Source vertex of the path replacing `target_edge`, i.e. `s(target_edge)`.
    pub fn fiber_source(&self, target_edge: usize) -> Vertex {
        self.target.edge(target_edge).src
    }
}
