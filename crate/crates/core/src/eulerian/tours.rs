use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::EulerError;
use crate::graphcat::{Graph, Vertex};
use crate::homology::IntMatrix;

/// An Eulerian tour, stored as the rotation that starts at edge 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tour {
    graph: Arc<Graph>,
    order: Vec<usize>,
}

/// A graph together with a chosen tour: an object of the tour category.
pub type TourGraph = Tour;

impl fmt::Debug for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.edge_ids().join(" "))
    }
}

impl Tour {
    /// Validates `order` as a closed walk through every edge exactly once and
    /// stores its canonical rotation.
    pub fn new(graph: Arc<Graph>, order: Vec<usize>) -> Result<Tour, EulerError> {
        let m = graph.edge_count();
        if m == 0 {
            return Err(EulerError::EmptyGraph);
        }
        if order.len() != m {
            return Err(EulerError::NotATour(format!("{} of {m} edges listed", order.len())));
        }
        let mut seen = vec![false; m];
        for &e in &order {
            if e >= m || std::mem::replace(&mut seen[e], true) {
                return Err(EulerError::NotATour(format!("edge {e} repeated or out of range")));
            }
        }
        for i in 0..m {
            let (a, b) = (graph.edge(order[i]), graph.edge(order[(i + 1) % m]));
            if a.tgt != b.src {
                return Err(EulerError::NotATour(format!(
                    "{} does not continue into {}",
                    graph.edge_id(order[i]),
                    graph.edge_id(order[(i + 1) % m])
                )));
            }
        }
        Ok(Self::canonical(graph, order))
    }

    fn canonical(graph: Arc<Graph>, mut order: Vec<usize>) -> Tour {
        let start = order.iter().position(|&e| e == 0).expect("edge 0 is listed");
        order.rotate_left(start);
        Tour { graph, order }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Edge indices in tour order, starting at edge 0.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn edge_ids(&self) -> Vec<&str> {
        self.order.iter().map(|&e| self.graph.edge_id(e)).collect()
    }

    /// Position of each edge along the tour.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &e) in self.order.iter().enumerate() {
            pos[e] = i;
        }
        pos
    }

    /// Source vertices along the tour: the stops `s(e_{τ₀}), s(e_{τ₁}), …`.
    pub fn labels(&self) -> Vec<Vertex> {
        self.order.iter().map(|&e| self.graph.edge(e).src).collect()
    }
}

/// Every Eulerian tour of `graph`, one per rotation class, in lexicographic
/// order of their canonical rotations. Backtracks from edge 0.
pub fn enumerate_tours(graph: &Arc<Graph>) -> Vec<Tour> {
    let m = graph.edge_count();
    if m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut used = vec![false; m];
    used[0] = true;
    let mut walk = vec![0];
    fn extend(g: &Graph, used: &mut [bool], walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let at = g.edge(*walk.last().expect("walk starts at edge 0")).tgt;
        if walk.len() == g.edge_count() {
            if at == g.edge(0).src {
                out.push(walk.clone());
            }
            return;
        }
        for e in 0..g.edge_count() {
            if !used[e] && g.edge(e).src == at {
                used[e] = true;
                walk.push(e);
                extend(g, used, walk, out);
                walk.pop();
                used[e] = false;
            }
        }
    }
    extend(graph, &mut used, &mut walk, &mut out);
    out.into_iter()
        .map(|order| Tour {
            graph: graph.clone(),
            order,
        })
        .collect()
}

/// The number of Eulerian tours up to rotation by the BEST theorem:
/// `t_w(G) · ∏_v (outdeg(v) − 1)!`, where `t_w` counts spanning arborescences
/// towards a fixed vertex `w` of the support, computed as a Laplacian minor.
///
/// Unbalanced and empty graphs give 0; a disconnected support has no
/// spanning arborescence, so the minor vanishes.
pub fn count_tours_oracle(graph: &Graph) -> BigInt {
    if graph.is_empty() {
        return BigInt::zero();
    }
    let vs: Vec<Vertex> = graph.vertices().vertices().collect();
    if vs.iter().any(|&v| graph.in_degree(v) != graph.out_degree(v)) {
        return BigInt::zero();
    }
    let support: Vec<Vertex> = vs.into_iter().filter(|&v| graph.out_degree(v) > 0).collect();
    let index = |v: Vertex| support.iter().position(|&u| u == v).expect("endpoint in support");
    let k = support.len() - 1;
    // rows and columns of the root support[0] are dropped
    let mut laplacian = IntMatrix::zeros(k, k);
    for e in graph.edges() {
        let (u, v) = (index(e.src), index(e.tgt));
        if u == v || u == 0 {
            continue;
        }
        laplacian[(u - 1, u - 1)] += 1;
        if v > 0 {
            laplacian[(u - 1, v - 1)] -= 1;
        }
    }
    let arborescences = laplacian.determinant();
    support.iter().fold(arborescences, |acc, &v| {
        let d = graph.out_degree(v);
        (1..d).fold(acc, |a, i| a * BigInt::from(i))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcat::VertexSet;
    use num_traits::One;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Arc<Graph> {
        Arc::new(Graph::from_edges(VertexSet::alphabetic(n), edges.iter().map(|&(s, t)| (Vertex(s), Vertex(t)))).unwrap())
    }

    /// Every permutation of the edges beginning with edge 0 that forms a
    /// closed walk.
    fn brute_force(g: &Graph) -> usize {
        let m = g.edge_count();
        if m == 0 {
            return 0;
        }
        let mut rest: Vec<usize> = (1..m).collect();
        let mut count = 0;
        permute(&mut rest, 0, &mut |p| {
            let order: Vec<usize> = std::iter::once(0).chain(p.iter().copied()).collect();
            if (0..m).all(|i| g.edge(order[i]).tgt == g.edge(order[(i + 1) % m]).src) {
                count += 1;
            }
        });
        count
    }

    fn permute(v: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            visit(v);
            return;
        }
        for j in k..v.len() {
            v.swap(k, j);
            permute(v, k + 1, visit);
            v.swap(k, j);
        }
    }

    #[test]
    fn loops_at_one_vertex() {
        assert_eq!(enumerate_tours(&graph(1, &[(0, 0)])).len(), 1);
        let three = graph(1, &[(0, 0); 3]);
        let tours = enumerate_tours(&three);
        assert_eq!(tours.len(), 2);
        assert_eq!(tours[0].order(), [0, 1, 2]);
        assert_eq!(tours[1].order(), [0, 2, 1]);
        assert_eq!(count_tours_oracle(&three), BigInt::from(2));
    }

    #[test]
    fn open_edge_has_no_tour() {
        let g = graph(2, &[(0, 1)]);
        assert!(enumerate_tours(&g).is_empty());
        assert!(count_tours_oracle(&g).is_zero());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count_tours_oracle(&graph(2, &[(0, 1), (0, 1), (1, 0), (1, 0)])), BigInt::from(2));
        assert_eq!(count_tours_oracle(&graph(3, &[(0, 1), (1, 2), (2, 0)])), BigInt::one());
        assert!(count_tours_oracle(&graph(2, &[(0, 0), (1, 1)])).is_zero());
        assert!(count_tours_oracle(&graph(2, &[])).is_zero());
    }

    #[test]
    fn tour_validation() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        let t = Tour::new(g.clone(), vec![1, 0]).unwrap();
        assert_eq!(t.order(), [0, 1]);
        assert_eq!(t.to_string(), "(e0 e1)");
        assert!(matches!(Tour::new(g.clone(), vec![0]), Err(EulerError::NotATour(_))));
        assert!(matches!(Tour::new(g, vec![0, 0]), Err(EulerError::NotATour(_))));
        assert!(matches!(Tour::new(graph(1, &[]), vec![]), Err(EulerError::EmptyGraph)));
        let open = graph(2, &[(0, 1), (0, 1)]);
        assert!(matches!(Tour::new(open, vec![0, 1]), Err(EulerError::NotATour(_))));
    }

    #[test]
    fn enumerated_tours_are_valid_and_distinct() {
        let g = graph(2, &[(0, 1), (1, 0), (0, 0), (1, 1), (0, 1), (1, 0)]);
        let tours = enumerate_tours(&g);
        for t in &tours {
            assert_eq!(&Tour::new(g.clone(), t.order().to_vec()).unwrap(), t);
        }
        let mut orders: Vec<_> = tours.iter().map(|t| t.order().to_vec()).collect();
        orders.dedup();
        assert_eq!(orders.len(), tours.len());
    }

    proptest! {
        #[test]
        fn three_ways_agree(edges in prop::collection::vec((0usize..3, 0usize..3), 0..=6)) {
            let g = graph(3, &edges);
            let n = enumerate_tours(&g).len();
            prop_assert_eq!(n, brute_force(&g));
            prop_assert_eq!(BigInt::from(n), count_tours_oracle(&g));
        }
    }
}
