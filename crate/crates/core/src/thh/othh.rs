use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::ThhError;
use crate::cyclic::{LambdaArrow, TruncatedCyclicSet};
use crate::eulerian::{enumerate_tours, Tour};
use crate::graphcat::{enumerate_fibers, BypassMap, Graph, GraphError, Vertex, VertexSet};
use crate::homology::HomologyResult;

/// An `n`-simplex of `O_thh(Γ)`: a bypass operation from `Γ` onto the cycle
/// graph `(X₀, …, Xₙ, X₀)`, stored as the tuple and the fiber of each cycle
/// edge. Equivalently an itinerary: a tour of `Γ` with `n + 1` marked stops.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OthhSimplex {
    pub tuple: Vec<Vertex>,
    pub fibers: Vec<Vec<usize>>,
}

impl OthhSimplex {
    pub fn level(&self) -> usize {
        self.tuple.len() - 1
    }

    /// The fibers read in order: a rotation of the underlying tour.
    pub fn walk(&self) -> Vec<usize> {
        self.fibers.concat()
    }

    pub fn bypass_map(&self, graph: &Arc<Graph>) -> Result<BypassMap, GraphError> {
        let cycle = Arc::new(Graph::cycle_on(graph.vertices().clone(), &self.tuple)?);
        BypassMap::new(graph.clone(), cycle, self.fibers.clone())
    }

    /// `f^*` for `f: T_m → T_n`: postcomposition with [`arrow_bypass`]. Stop
    /// `i` moves to `X_{o_f(vᵢ)}` and its fiber is the concatenation of the
    /// fibers along the path `f(eᵢ)`.
    pub fn act(&self, f: &LambdaArrow) -> OthhSimplex {
        let n1 = f.target() + 1;
        let starts = f.objects();
        OthhSimplex {
            tuple: starts.iter().map(|&o| self.tuple[o]).collect(),
            fibers: starts
                .iter()
                .zip(f.legs())
                .map(|(&o, &l)| (0..l).flat_map(|k| self.fibers[(o + k) % n1].iter().copied()).collect())
                .collect(),
        }
    }
}

/// The bypass operation `(X₀, …, Xₙ, X₀) → (f^*X)` induced by `f: T_m → T_n`:
/// edge `i` of the new cycle replaces the path of `ℓᵢ` edges starting at
/// `o_f(vᵢ)`.
pub fn arrow_bypass(vertices: &VertexSet, f: &LambdaArrow, tuple: &[Vertex]) -> Result<BypassMap, GraphError> {
    let n1 = f.target() + 1;
    assert_eq!(tuple.len(), n1, "tuple length must match the arrow's target");
    let starts = f.objects();
    let pulled: Vec<Vertex> = starts.iter().map(|&o| tuple[o]).collect();
    let source = Arc::new(Graph::cycle_on(vertices.clone(), tuple)?);
    let target = Arc::new(Graph::cycle_on(vertices.clone(), &pulled)?);
    let fibers = starts
        .iter()
        .zip(f.legs())
        .map(|(&o, &l)| (0..l).map(|k| (o + k) % n1).collect())
        .collect();
    BypassMap::new(source, target, fibers)
}

fn tuples(labels: &[Vertex], len: usize) -> Vec<Vec<Vertex>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                labels.iter().map(move |&v| {
                    let mut u = t.clone();
                    u.push(v);
                    u
                })
            })
            .collect()
    })
}

/// The truncated cyclic set `O_thh(Γ)` together with `Γ`.
#[derive(Debug, Clone)]
pub struct Othh {
    graph: Arc<Graph>,
    set: TruncatedCyclicSet<OthhSimplex>,
}

/// The simplices lying over one tour.
#[derive(Debug, Clone)]
pub struct TourBlock {
    pub tour: Tour,
    pub set: TruncatedCyclicSet<OthhSimplex>,
}

/// π₀ of `O_thh(Γ)` compared with `Eul(Γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi0Report {
    pub classes: usize,
    pub eul_count: usize,
    /// Whether "class ↦ underlying tour" is well defined and bijective.
    pub bijective: bool,
}

/// `O_thh(Γ)` through level `dim`. Tuples range over the endpoints of `Γ`'s
/// edges, or over all of `S` when `Γ` is empty; other labels carry no
/// simplices.
pub fn build_othh(graph: &Arc<Graph>, dim: usize) -> Othh {
    let vertices = graph.vertices();
    let mut labels: Vec<Vertex> = graph.edges().iter().flat_map(|e| [e.src, e.tgt]).collect();
    if graph.is_empty() {
        labels = vertices.vertices().collect();
    }
    labels.sort();
    labels.dedup();
    let levels: Vec<Vec<OthhSimplex>> = (0..=dim)
        .map(|n| {
            tuples(&labels, n + 1)
                .into_par_iter()
                .flat_map_iter(|tuple| {
                    let cycle = Graph::cycle_on(vertices.clone(), &tuple).expect("labels lie in S");
                    enumerate_fibers(graph, cycle.edges())
                        .into_iter()
                        .map(move |fibers| OthhSimplex {
                            tuple: tuple.clone(),
                            fibers,
                        })
                })
                .collect()
        })
        .collect();
    let set = TruncatedCyclicSet::new(levels, |f, x: &OthhSimplex| x.act(f)).expect("simplices are distinct");
    Othh {
        graph: graph.clone(),
        set,
    }
}

impl Othh {
    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn cyclic_set(&self) -> &TruncatedCyclicSet<OthhSimplex> {
        &self.set
    }

    /// The tour an itinerary runs along; `None` when `Γ` is empty.
    pub fn underlying_tour(&self, x: &OthhSimplex) -> Option<Tour> {
        Tour::new(self.graph.clone(), x.walk()).ok()
    }

    /// Integer homology of the normalized chains, degrees below the bound.
    pub fn homology(&self) -> Result<Vec<HomologyResult>, ThhError> {
        Ok(self
            .set
            .simplicial()?
            .normalized_chains()
            .map_err(ThhError::Identity)?
            .complex
            .homology_all())
    }

    /// Splits the simplices by underlying tour, in the order of
    /// [`enumerate_tours`]. Fails if an operator moves a simplex to another
    /// tour.
    pub fn tour_decomposition(&self) -> Result<Vec<TourBlock>, ThhError> {
        let tours = enumerate_tours(&self.graph);
        let index: HashMap<&Tour, usize> = tours.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let d = self.set.dim_bound();
        let mut levels: Vec<Vec<Vec<OthhSimplex>>> = vec![vec![Vec::new(); d + 1]; tours.len()];
        for n in 0..=d {
            for x in self.set.level(n) {
                let t = self.underlying_tour(x).ok_or(ThhError::NoTour)?;
                levels[index[&t]][n].push(x.clone());
            }
        }
        let blocks: Vec<TourBlock> = tours
            .into_iter()
            .zip(levels)
            .map(|(tour, lv)| TourBlock {
                tour,
                set: TruncatedCyclicSet::new(lv, |f, x: &OthhSimplex| x.act(f)).expect("simplices are distinct"),
            })
            .collect();
        for block in &blocks {
            // closure of each block under the generators
            for n in 0..=d {
                block.set.operators(n)?;
            }
        }
        Ok(blocks)
    }

    /// The classes of the set-level colimit, mapped to underlying tours.
    pub fn pi0_orbits(&self) -> Result<Pi0Report, ThhError> {
        let classes = self.set.set_colimit()?;
        let eul = enumerate_tours(&self.graph);
        let mut image: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut well_defined = true;
        for class in &classes {
            let tours: Vec<Tour> = class
                .iter()
                .filter_map(|&x| self.underlying_tour(&self.set.level(0)[x]))
                .collect();
            well_defined &= tours.len() == class.len() && tours.windows(2).all(|w| w[0] == w[1]);
            if let Some(t) = tours.first() {
                *image.entry(t.order().to_vec()).or_default() += 1;
            }
        }
        let bijective = well_defined
            && image.len() == eul.len()
            && image.values().all(|&k| k == 1)
            && eul.iter().all(|t| image.contains_key(t.order()));
        Ok(Pi0Report {
            classes: classes.len(),
            eul_count: eul.len(),
            bijective,
        })
    }
}

/// The report for one graph: `H_k(O_thh(Γ))` against `|Eul(Γ)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OthhReport {
    pub graph: crate::graphcat::json::GraphJson,
    pub eul_count: usize,
    pub betti: Vec<usize>,
    pub torsion: Vec<HomologyResult>,
    pub pass: bool,
}

/// Computes `H_*(O_thh(Γ))` through degree `dim − 1` and checks it: one
/// circle per Eulerian tour for `Γ ≠ ∅`, and `|S|` points for `Γ = ∅`.
pub fn othh_homology(graph: &Arc<Graph>, dim: usize) -> Result<OthhReport, ThhError> {
    let othh = build_othh(graph, dim);
    let homology = othh.homology()?;
    let eul = enumerate_tours(graph).len();
    let betti: Vec<usize> = homology.iter().map(|h| h.betti).collect();
    let expected: Vec<usize> = (0..dim)
        .map(|k| match (graph.is_empty(), k) {
            (true, 0) => graph.vertices().len(),
            (true, _) => 0,
            (false, 0 | 1) => eul,
            (false, _) => 0,
        })
        .collect();
    let torsion: Vec<HomologyResult> = homology.into_iter().filter(|h| !h.torsion.is_empty()).collect();
    Ok(OthhReport {
        graph: crate::graphcat::json::GraphJson::from(&**graph),
        eul_count: eul,
        pass: betti == expected && torsion.is_empty(),
        betti,
        torsion,
    })
}

/// Counts the `n`-simplices over `tour` (labeled) and over the tour
/// `e0 e1 ⋯` of the one-vertex graph with as many loops (unlabeled).
pub fn itinerary_count_invariance(tour: &Tour, n: usize) -> (usize, usize) {
    let over = |t: &Tour| {
        let othh = build_othh(t.graph(), n);
        othh.set
            .level(n)
            .iter()
            .filter(|x| othh.underlying_tour(x).as_ref() == Some(t))
            .count()
    };
    let point = VertexSet::alphabetic(1);
    let loops = Arc::new(Graph::loops(point, Vertex(0), tour.len()).expect("one vertex"));
    let plain = Tour::new(loops, (0..tour.len()).collect()).expect("loops in any order form a tour");
    (over(tour), over(&plain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcat::hom_enumerate;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Arc<Graph> {
        Arc::new(Graph::from_edges(VertexSet::alphabetic(n), edges.iter().map(|&(a, b)| (Vertex(a), Vertex(b)))).unwrap())
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
    }

    #[test]
    fn empty_graph_is_constant() {
        let othh = build_othh(&graph(2, &[]), 3);
        assert_eq!(othh.cyclic_set().sizes(), [2, 2, 2, 2]);
        for n in 0..=3 {
            assert!(othh.cyclic_set().level(n).iter().all(|x| x.tuple.iter().all(|&v| v == x.tuple[0])));
        }
        let chains = othh.cyclic_set().simplicial().unwrap().normalized_chains().unwrap();
        assert_eq!(chains.complex.dims(), [2, 0, 0, 0]);
    }

    #[test]
    fn one_loop_level_sizes() {
        let othh = build_othh(&graph(1, &[(0, 0)]), 4);
        assert_eq!(othh.cyclic_set().sizes(), [1, 2, 3, 4, 5]);
    }

    #[test]
    fn open_edge_has_nothing() {
        let othh = build_othh(&graph(2, &[(0, 1)]), 3);
        assert_eq!(othh.cyclic_set().sizes(), [0, 0, 0, 0]);
    }

    #[test]
    fn levels_match_hom_enumeration() {
        // every tuple over all of S, including labels the pruning skips
        let s = VertexSet::alphabetic(3);
        let g = graph(3, &[(0, 1), (1, 0), (0, 0)]);
        let othh = build_othh(&g, 2);
        for n in 0..=2 {
            let all: usize = tuples(&s.vertices().collect::<Vec<_>>(), n + 1)
                .iter()
                .map(|t| {
                    let c = Arc::new(Graph::cycle_on(s.clone(), t).unwrap());
                    hom_enumerate(&g, &c).unwrap().len()
                })
                .sum();
            assert_eq!(othh.cyclic_set().level(n).len(), all);
        }
    }

    #[test]
    fn action_is_postcomposition() {
        let g = graph(2, &[(0, 1), (1, 0), (0, 0)]);
        let othh = build_othh(&g, 2);
        let s = g.vertices();
        for n in 0..=2 {
            for x in othh.cyclic_set().level(n) {
                let fx = x.bypass_map(&g).unwrap();
                for m in 0..=2 {
                    for f in LambdaArrow::hom(m, n) {
                        let beta = arrow_bypass(s, &f, &x.tuple).unwrap();
                        let composite = beta.compose(&fx).unwrap();
                        let y = x.act(&f);
                        assert_eq!(composite, y.bypass_map(&g).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn identities_and_functoriality() {
        for g in [graph(1, &[(0, 0), (0, 0)]), graph(2, &[(0, 1), (1, 0)]), graph(2, &[])] {
            let othh = build_othh(&g, 3);
            othh.cyclic_set().check_identities().unwrap();
            othh.cyclic_set().check_functoriality(2).unwrap();
        }
    }

    #[test]
    fn circle_per_tour() {
        let r = othh_homology(&graph(1, &[(0, 0)]), 3).unwrap();
        assert_eq!((r.betti.clone(), r.pass), (vec![1, 1, 0], true));
        let r = othh_homology(&graph(1, &[(0, 0); 3]), 3).unwrap();
        assert_eq!((r.eul_count, r.betti.clone(), r.pass), (2, vec![2, 2, 0], true));
        let r = othh_homology(&graph(3, &[]), 3).unwrap();
        assert_eq!((r.betti.clone(), r.pass), (vec![3, 0, 0], true));
        let r = othh_homology(&graph(2, &[(0, 1)]), 3).unwrap();
        assert_eq!((r.betti.clone(), r.pass), (vec![0, 0, 0], true));
    }

    #[test]
    fn blocks_are_circles() {
        let othh = build_othh(&graph(1, &[(0, 0); 3]), 3);
        let blocks = othh.tour_decomposition().unwrap();
        assert_eq!(blocks.len(), 2);
        for b in blocks {
            b.set.check_identities().unwrap();
            let h = b.set.simplicial().unwrap().normalized_chains().unwrap().complex.homology_all();
            assert_eq!(h.iter().map(|h| h.betti).collect::<Vec<_>>(), [1, 1, 0]);
        }
        assert_eq!(build_othh(&graph(2, &[(0, 1), (1, 0)]), 2).tour_decomposition().unwrap().len(), 1);
    }

    #[test]
    fn pi0_matches_tours() {
        for g in [graph(1, &[(0, 0)]), graph(1, &[(0, 0); 3]), graph(2, &[(0, 1), (1, 0), (0, 1), (1, 0)])] {
            let r = build_othh(&g, 1).pi0_orbits().unwrap();
            assert!(r.bijective, "{g}: {r:?}");
            assert_eq!(r.classes, enumerate_tours(&g).len());
        }
    }

    #[test]
    fn itinerary_counts() {
        let one = graph(1, &[(0, 0)]);
        let t = &enumerate_tours(&one)[0];
        for n in 0..=3 {
            assert_eq!(itinerary_count_invariance(t, n), (n + 1, n + 1));
        }
        let cyc = graph(2, &[(0, 1), (1, 0)]);
        let t = &enumerate_tours(&cyc)[0];
        for n in 0..=3 {
            let (a, b) = itinerary_count_invariance(t, n);
            assert_eq!(a, b);
            // m · C(m + n, n) stop placements on a tour of length m
            assert_eq!(a, 2 * binomial(2 + n, n));
        }
        assert_eq!(itinerary_count_invariance(t, 0), (2, 2));
    }
}
