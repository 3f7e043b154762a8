//! Exhaustive verification suites over small graphs, arrows and algebras.
//!
//! Each runner returns [`Check`] records in a fixed order; instances are
//! processed in parallel and collated by instance key, so reports are
//! byte-identical between runs. [`run_all`] is what `bypass-thh verify`
//! prints, grouped by [`Check::criterion`].

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::{cyclic_nerve_triv, LambdaArrow};
use crate::eulerian::{
    count_tours_oracle, enumerate_tours, eul_morphism_valid, left_fibration_check, right_fibration_check, straighten,
    to_lambda_arrow, unstraighten, Tour,
};
use crate::graphcat::{hom_enumerate, BypassMap, Graph, Vertex, VertexSet};
use crate::homology::{invariant_factors, smith_normal_form, IntMatrix};
use crate::thh::{build_othh, commutator_quotient_dim, cyclic_bar, dual_numbers_periodic, LinearEnrichedCategory};

/// Suite bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_edges: usize,
    pub max_vertices: usize,
    /// Truncation `D` of the cyclic sets.
    pub dim: usize,
    /// Truncation `N` of the cyclic bar construction.
    pub bar_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_edges: 5,
            max_vertices: 3,
            dim: 3,
            bar_dim: 4,
        }
    }
}

/// One verified property: how many instances were checked and which failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub instances: usize,
    pub detail: String,
    pub failures: Vec<String>,
    pub pass: bool,
}

impl Check {
    fn new(criterion: u8, name: &str, instances: usize, detail: String, failures: Vec<String>) -> Check {
        Check {
            criterion,
            name: name.to_string(),
            instances,
            detail,
            pass: failures.is_empty() && instances > 0,
            failures,
        }
    }

    /// `PASS name [instances] detail`, plus the first failure if any.
    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {} [{} instances] {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.instances,
            self.detail
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" (first failure: {f}; {} total)", self.failures.len()));
        }
        s
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}

/// Every graph on `S = {A, B, …}` with `1 ≤ |S| ≤ max_vertices` and at most
/// `max_edges` edges, one per multiset of `(source, target)` pairs, edges
/// listed in sorted order with ids `e0, e1, …`.
pub fn suite_graphs(max_edges: usize, max_vertices: usize) -> Vec<Arc<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let s = VertexSet::alphabetic(n);
        let pairs: Vec<(Vertex, Vertex)> = s.vertices().flat_map(|a| s.vertices().map(move |b| (a, b))).collect();
        let mut multisets: Vec<Vec<usize>> = vec![Vec::new()];
        let mut frontier = multisets.clone();
        for _ in 0..max_edges {
            frontier = frontier
                .iter()
                .flat_map(|m| {
                    let from = m.last().copied().unwrap_or(0);
                    (from..pairs.len()).map(move |p| {
                        let mut next = m.clone();
                        next.push(p);
                        next
                    })
                })
                .collect();
            multisets.extend(frontier.iter().cloned());
        }
        out.extend(
            multisets
                .into_iter()
                .map(|m| Arc::new(Graph::from_edges(s.clone(), m.into_iter().map(|p| pairs[p])).expect("pairs on S"))),
        );
    }
    out
}

/// Criterion 1: backtracking enumeration against the BEST count.
pub fn check_tours(cfg: &SuiteConfig) -> Vec<Check> {
    let graphs = suite_graphs(cfg.max_edges, cfg.max_vertices);
    let results: Vec<(usize, BigInt)> = graphs
        .par_iter()
        .map(|g| (enumerate_tours(g).len(), count_tours_oracle(g)))
        .collect();
    let failures: Vec<String> = graphs
        .iter()
        .zip(&results)
        .filter(|(_, (n, o))| BigInt::from(*n) != *o)
        .map(|(g, (n, o))| format!("{g}: enumerated {n}, oracle {o}"))
        .collect();
    let total: usize = results.iter().map(|r| r.0).sum();
    vec![Check::new(
        1,
        "tours = BEST oracle",
        graphs.len(),
        format!("{total} tours in all, edges ≤ {}, |S| ≤ {}", cfg.max_edges, cfg.max_vertices),
        failures,
    )]
}

#[derive(Default)]
struct OthhOutcome {
    homology: Option<String>,
    pi0: Option<String>,
    itinerary: Option<String>,
    blocks: Option<String>,
    identities: Option<String>,
    functoriality: Option<String>,
    complexes: usize,
    eul: usize,
}

/// `n`-simplex counts over the tour `e0 ⋯ e_{m−1}` of `m` loops at one vertex.
fn unlabeled_counts(m: usize, dim: usize) -> Vec<usize> {
    let g = Arc::new(Graph::loops(VertexSet::alphabetic(1), Vertex(0), m).expect("one vertex"));
    let othh = build_othh(&g, dim);
    let tour = Tour::new(g, (0..m).collect()).expect("loops");
    (0..=dim)
        .map(|n| {
            othh.cyclic_set()
                .level(n)
                .iter()
                .filter(|x| othh.underlying_tour(x).as_ref() == Some(&tour))
                .count()
        })
        .collect()
}

fn othh_outcome(g: &Arc<Graph>, dim: usize, unlabeled: &[Vec<usize>]) -> OthhOutcome {
    let mut out = OthhOutcome::default();
    let fail = |what: String| Some(format!("{g}: {what}"));
    let othh = build_othh(g, dim);
    if let Err(e) = othh.cyclic_set().check_identities() {
        out.identities = fail(e.to_string());
    }
    let up_to = if g.edge_count() <= 3 { dim } else { 2 };
    out.functoriality = othh.cyclic_set().check_functoriality(up_to).err().and_then(|e| fail(e.to_string()));
    let eul = enumerate_tours(g);
    out.eul = eul.len();
    match othh.homology() {
        Ok(h) => {
            out.complexes += 1;
            let betti: Vec<usize> = h.iter().map(|r| r.betti).collect();
            let expected: Vec<usize> = (0..dim)
                .map(|k| match (g.is_empty(), k) {
                    (true, 0) => g.vertices().len(),
                    (false, 0 | 1) => eul.len(),
                    _ => 0,
                })
                .collect();
            if betti != expected || h.iter().any(|r| !r.torsion.is_empty()) {
                out.homology = fail(format!("betti {betti:?}, expected {expected:?}"));
            }
        }
        Err(e) => out.homology = fail(e.to_string()),
    }
    if g.is_empty() {
        return out;
    }
    match othh.pi0_orbits() {
        Ok(r) if r.bijective => {}
        Ok(r) => out.pi0 = fail(format!("{} classes, {} tours", r.classes, r.eul_count)),
        Err(e) => out.pi0 = fail(e.to_string()),
    }
    match othh.tour_decomposition() {
        Ok(blocks) => {
            let m = g.edge_count();
            for b in &blocks {
                let sizes = b.set.sizes();
                let oracle: Vec<usize> = (0..=dim).map(|n| m * binomial(m + n, n)).collect();
                if sizes != unlabeled[m] || sizes != oracle {
                    out.itinerary = fail(format!("over {}: {sizes:?} vs {:?} vs {oracle:?}", b.tour, unlabeled[m]));
                }
                let circle = b
                    .set
                    .simplicial()
                    .map_err(|e| e.to_string())
                    .and_then(|s| s.normalized_chains())
                    .map(|c| c.complex.homology_all().iter().map(|h| (h.betti, h.torsion.len())).collect::<Vec<_>>());
                out.complexes += 1;
                let expected: Vec<(usize, usize)> = (0..dim).map(|k| (usize::from(k < 2), 0)).collect();
                if circle.as_ref() != Ok(&expected) {
                    out.blocks = fail(format!("block over {} has homology {circle:?}", b.tour));
                }
            }
            if blocks.len() != eul.len() {
                out.blocks = fail(format!("{} blocks for {} tours", blocks.len(), eul.len()));
            }
        }
        Err(e) => out.blocks = fail(e.to_string()),
    }
    out
}

/// Criteria 2, 3, 6 and part of 8: `O_thh` of every suite graph.
pub fn check_othh(cfg: &SuiteConfig) -> Vec<Check> {
    let graphs = suite_graphs(cfg.max_edges, cfg.max_vertices);
    let unlabeled: Vec<Vec<usize>> = (0..=cfg.max_edges)
        .into_par_iter()
        .map(|m| if m == 0 { Vec::new() } else { unlabeled_counts(m, cfg.dim) })
        .collect();
    let outcomes: Vec<OthhOutcome> = graphs.par_iter().map(|g| othh_outcome(g, cfg.dim, &unlabeled)).collect();
    let collect = |pick: &dyn Fn(&OthhOutcome) -> Option<String>| -> Vec<String> { outcomes.iter().filter_map(pick).collect() };
    let nonempty = graphs.iter().filter(|g| !g.is_empty()).count();
    let eul_total: usize = outcomes.iter().map(|o| o.eul).sum();
    let complexes: usize = outcomes.iter().map(|o| o.complexes).sum();
    vec![
        Check::new(
            2,
            "O_thh homology: b0 = b1 = |Eul|, b2 = 0, no torsion; ∅ gives |S| points",
            graphs.len(),
            format!("D = {}, {eul_total} circles in all", cfg.dim),
            collect(&|o| o.homology.clone()),
        ),
        Check::new(
            3,
            "π0 of O_thh ↔ Eul via underlying tour",
            nonempty,
            format!("{eul_total} classes matched"),
            collect(&|o| o.pi0.clone()),
        ),
        Check::new(
            6,
            "itinerary counts: labeled = unlabeled = m·C(m+n, n)",
            nonempty,
            format!("n ≤ {}, every tour of every nonempty graph", cfg.dim),
            collect(&|o| o.itinerary.clone()),
        ),
        Check::new(
            8,
            "tour blocks of O_thh: operator-closed circles, one per tour",
            nonempty,
            format!("{eul_total} blocks"),
            collect(&|o| o.blocks.clone()),
        ),
        Check::new(
            8,
            "cyclic identities on O_thh",
            graphs.len(),
            format!("levels ≤ {}; ∂∂ = 0 on {complexes} normalized complexes", cfg.dim),
            collect(&|o| o.identities.clone()),
        ),
        Check::new(
            8,
            "functoriality of O_thh",
            graphs.len(),
            format!("all composable arrows among levels ≤ {} (≤ 2 above 3 edges)", cfg.dim),
            collect(&|o| o.functoriality.clone()),
        ),
    ]
}

/// Graphs on exactly `n` vertices with `1..=max` edges.
fn graphs_on(n: usize, max: usize) -> Vec<Arc<Graph>> {
    suite_graphs(max, n)
        .into_iter()
        .filter(|g| g.vertices().len() == n && !g.is_empty())
        .collect()
}

/// Criterion 4: unique lifts for both fibrations, and straightening counts.
pub fn check_fibrations(cfg: &SuiteConfig) -> Vec<Check> {
    // right fibration: all maps between nonempty graphs with ≤ 4 edges on ≤ 2 vertices
    let right_edges = cfg.max_edges.min(4);
    let graphs: Vec<Arc<Graph>> = (1..=cfg.max_vertices.min(2)).flat_map(|n| graphs_on(n, right_edges)).collect();
    let toured: Vec<(&Arc<Graph>, Vec<Tour>)> = graphs
        .iter()
        .map(|g| (g, enumerate_tours(g)))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let pairs: Vec<(&Arc<Graph>, &Arc<Graph>, &[Tour])> = graphs
        .iter()
        .flat_map(|a| {
            toured
                .iter()
                .filter(move |(b, _)| b.vertices() == a.vertices())
                .map(move |(b, t)| (a, *b, t.as_slice()))
        })
        .collect();
    let right: Vec<(usize, Vec<String>)> = pairs
        .par_iter()
        .map(|(a, b, tours)| {
            let maps = hom_enumerate(a, b).expect("same vertex set");
            let mut n = 0;
            let mut bad = Vec::new();
            for f in &maps {
                for t in *tours {
                    n += 1;
                    let r = right_fibration_check(f, t);
                    if !r.pass {
                        bad.push(format!("{} ({} lifts)", r.instance, r.lift_count));
                    }
                }
            }
            (n, bad)
        })
        .collect();

    // left fibration: tour graphs with ≤ 3 edges on |S| ≤ 2, arrows from T_k, k ≤ 3
    let left_edges = cfg.max_edges.min(3);
    let sources: Vec<Tour> = (1..=cfg.max_vertices.min(2))
        .flat_map(|n| graphs_on(n, left_edges))
        .flat_map(|g| enumerate_tours(&g))
        .collect();
    let left: Vec<(usize, Vec<String>)> = sources
        .par_iter()
        .map(|x| {
            let mut n = 0;
            let mut bad = Vec::new();
            for k in 0..=3 {
                for g in LambdaArrow::hom(k, x.len() - 1) {
                    n += 1;
                    match left_fibration_check(x, &g) {
                        Ok(r) if r.pass => {}
                        Ok(r) => bad.push(format!("{} ({} lifts)", r.instance, r.lift_count)),
                        Err(e) => bad.push(format!("{x} along {g}: {e}")),
                    }
                }
            }
            (n, bad)
        })
        .collect();

    // straightening: stops of tours on ordered edge lists of length m fill S^m
    let mut straight_bad = Vec::new();
    let mut straight_n = 0;
    for s in 1..=cfg.max_vertices {
        let vs = VertexSet::alphabetic(s);
        let pairs: Vec<(Vertex, Vertex)> = vs.vertices().flat_map(|a| vs.vertices().map(move |b| (a, b))).collect();
        for m in 1..=cfg.max_edges {
            straight_n += 1;
            let lists = (0..m).fold(vec![Vec::new()], |acc: Vec<Vec<(Vertex, Vertex)>>, _| {
                acc.into_iter()
                    .flat_map(|l| {
                        pairs.iter().map(move |&p| {
                            let mut l = l.clone();
                            l.push(p);
                            l
                        })
                    })
                    .collect()
            });
            let mut stops: Vec<Vec<Vertex>> = lists
                .par_iter()
                .flat_map_iter(|l| {
                    let g = Arc::new(Graph::from_edges(vs.clone(), l.iter().copied()).expect("pairs on S"));
                    enumerate_tours(&g).into_iter().map(|t| straighten(&t).1)
                })
                .collect();
            stops.sort();
            stops.dedup();
            let round_trip = stops
                .iter()
                .all(|l| unstraighten(&vs, l).is_ok_and(|t| straighten(&t) == (m - 1, l.clone())));
            let expected = cyclic_nerve_triv(&vs, m - 1).level(m - 1).len();
            if stops.len() != s.pow(m as u32) || expected != stops.len() || !round_trip {
                straight_bad.push(format!("|S| = {s}, m = {m}: {} stop sequences", stops.len()));
            }
        }
    }

    let sum = |v: &[(usize, Vec<String>)]| -> (usize, Vec<String>) {
        (v.iter().map(|r| r.0).sum(), v.iter().flat_map(|r| r.1.iter().cloned()).collect())
    };
    let (rn, rbad) = sum(&right);
    let (ln, lbad) = sum(&left);
    vec![
        Check::new(
            4,
            "right fibration: unique tour lift along every bypass map",
            rn,
            format!("graphs with ≤ {right_edges} edges on ≤ 2 vertices, every target tour"),
            rbad,
        ),
        Check::new(
            4,
            "left fibration: unique lift of every Λ arrow",
            ln,
            format!("tour graphs with ≤ {left_edges} edges, arrows from T_k with k ≤ 3"),
            lbad,
        ),
        Check::new(
            4,
            "straightening: tour graphs with m edges ↔ S^m",
            straight_n,
            format!("|S| ≤ {}, m ≤ {}", cfg.max_vertices, cfg.max_edges),
            straight_bad,
        ),
    ]
}

/// Criterion 5: the one-vertex comparison with `Λ`, duality and hom counts.
pub fn check_lambda(cfg: &SuiteConfig) -> Vec<Check> {
    let bound = cfg.max_edges.min(4);
    let s = VertexSet::alphabetic(1);
    let loops: Vec<Tour> = (1..=bound)
        .map(|m| {
            let g = Arc::new(Graph::loops(s.clone(), Vertex(0), m).expect("one vertex"));
            Tour::new(g, (0..m).collect()).expect("loops")
        })
        .collect();
    let pairs: Vec<(&Tour, &Tour)> = loops.iter().flat_map(|x| loops.iter().map(move |y| (x, y))).collect();
    let bij: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(x, y)| {
            let mut arrows: Vec<LambdaArrow> = hom_enumerate(x.graph(), y.graph())
                .expect("one vertex")
                .iter()
                .filter(|f| eul_morphism_valid(f, x, y))
                .filter_map(|f| to_lambda_arrow(f, x, y).ok())
                .collect();
            let n = arrows.len();
            arrows.sort();
            arrows.dedup();
            (arrows.len() != n || arrows != LambdaArrow::hom(y.len() - 1, x.len() - 1))
                .then(|| format!("{} loops → {} loops: {n} maps, {} arrows", x.len(), y.len(), arrows.len()))
        })
        .collect();

    let mut dual_bad = Vec::new();
    let mut dual_n = 0;
    for m in 0..=3 {
        for n in 0..=3 {
            for f in LambdaArrow::hom(m, n) {
                dual_n += 1;
                let d = f.dual();
                if (d.source(), d.target()) != (n, m) || d.dual() != f {
                    dual_bad.push(format!("{f}"));
                }
                for k in 0..=3 {
                    for g in LambdaArrow::hom(n, k) {
                        let gf = g.compose(&f).expect("composable");
                        if gf.dual() != f.dual().compose(&g.dual()).expect("composable") {
                            dual_bad.push(format!("({g})∘({f})"));
                        }
                    }
                }
            }
        }
    }

    let mut count_bad = Vec::new();
    let mut literal_wrong = 0;
    for m in 0..=4 {
        for n in 0..=4 {
            let count = LambdaArrow::hom(m, n).len();
            if count != (n + 1) * binomial(m + n + 1, m) {
                count_bad.push(format!("|Λ(T_{m}, T_{n})| = {count}"));
            }
            if count != (n + 1) * binomial(m + n, m) {
                literal_wrong += 1;
            }
        }
    }
    vec![
        Check::new(
            5,
            "one-vertex tour maps ↔ Λ hom-sets",
            pairs.len(),
            format!("≤ {bound} loops, injective and onto"),
            bij.into_iter().flatten().collect(),
        ),
        Check::new(
            5,
            "duality is a strict contravariant involution",
            dual_n,
            "indices ≤ 3, all composable pairs".into(),
            dual_bad,
        ),
        Check::new(
            5,
            "|Λ(T_m, T_n)| = (n+1)·C(m+n+1, m)",
            25,
            format!("m, n ≤ 4; the form (n+1)·C(m+n, m) misses {literal_wrong} of 25"),
            count_bad,
        ),
    ]
}

/// The algebras and categories the Hochschild engine is checked on.
pub fn algebra_zoo() -> Vec<(&'static str, LinearEnrichedCategory)> {
    vec![
        ("Q", LinearEnrichedCategory::unit_algebra()),
        ("Q[x]/x^2", LinearEnrichedCategory::dual_numbers()),
        ("Q[x]/x^3", LinearEnrichedCategory::truncated_polynomial(3)),
        ("Q[C2]", LinearEnrichedCategory::cyclic_group_algebra(2)),
        ("Q[C3]", LinearEnrichedCategory::cyclic_group_algebra(3)),
        ("QxQ", LinearEnrichedCategory::split_product(2)),
        ("M2(Q)", LinearEnrichedCategory::matrix_algebra(2)),
        ("T2(Q)", LinearEnrichedCategory::upper_triangular(2)),
        ("indiscrete(1)", LinearEnrichedCategory::indiscrete(1)),
        ("indiscrete(2)", LinearEnrichedCategory::indiscrete(2)),
        ("indiscrete(3)", LinearEnrichedCategory::indiscrete(3)),
    ]
}

/// Criterion 7 and the bar-construction part of 8.
pub fn check_hochschild(cfg: &SuiteConfig) -> Vec<Check> {
    let top = cfg.bar_dim;
    let report = top - 1;
    let zoo = algebra_zoo();
    let bars: Vec<Result<(Vec<usize>, Result<(), String>), String>> = zoo
        .par_iter()
        .map(|(_, c)| {
            let bar = cyclic_bar(c, top).map_err(|e| e.to_string())?;
            let betti = bar.betti()[..report].to_vec();
            let ids = if c.objects().len() * c.hom_dim(Vertex(0), Vertex(0)) <= 4 {
                bar.check_identities().map_err(|e| e.to_string())
            } else {
                Ok(())
            };
            Ok((betti, ids))
        })
        .collect();
    let hh: HashMap<&str, &Vec<usize>> = zoo
        .iter()
        .zip(&bars)
        .filter_map(|((name, _), b)| b.as_ref().ok().map(|(h, _)| (*name, h)))
        .collect();
    let mut commutator_bad = Vec::new();
    for ((name, c), b) in zoo.iter().zip(&bars) {
        match b {
            Ok((h, _)) if h[0] == commutator_quotient_dim(c) => {}
            Ok((h, _)) => commutator_bad.push(format!("{name}: HH0 = {}, quotient {}", h[0], commutator_quotient_dim(c))),
            Err(e) => commutator_bad.push(format!("{name}: {e}")),
        }
    }
    let q = hh.get("Q").map(|v| v.to_vec()).unwrap_or_default();
    let morita_bad: Vec<String> = ["indiscrete(1)", "indiscrete(2)", "indiscrete(3)", "M2(Q)"]
        .iter()
        .filter(|n| hh.get(**n).map(|v| v.to_vec()) != Some(q.clone()))
        .map(|n| format!("{n}: {:?} vs Q {q:?}", hh.get(n)))
        .collect();
    let periodic: Vec<usize> = dual_numbers_periodic().homology_all().iter().map(|h| h.betti).collect();
    let mut oracle_bad = Vec::new();
    let dual = hh.get("Q[x]/x^2").map(|v| v.to_vec());
    if dual.as_deref() != Some(&periodic[..report.min(3)]) || periodic != [2, 1, 1] {
        oracle_bad.push(format!("dual numbers {dual:?}, periodic complex {periodic:?}"));
    }
    let doubled: Vec<usize> = q.iter().map(|b| 2 * b).collect();
    for name in ["Q[C2]", "QxQ"] {
        if hh.get(name).map(|v| v.to_vec()) != Some(doubled.clone()) || doubled.first() != Some(&2) {
            oracle_bad.push(format!("{name}: {:?} vs Q ⊕ Q {doubled:?}", hh.get(name)));
        }
    }
    let ids_checked = bars.iter().filter(|b| b.is_ok()).count();
    let ids_bad: Vec<String> = zoo
        .iter()
        .zip(&bars)
        .filter_map(|((name, _), b)| match b {
            Ok((_, Err(e))) => Some(format!("{name}: {e}")),
            Err(e) => Some(format!("{name}: {e}")),
            _ => None,
        })
        .collect();
    let table: Vec<String> = zoo
        .iter()
        .filter_map(|(n, _)| hh.get(n).map(|h| format!("{n} {h:?}")))
        .collect();
    vec![
        Check::new(
            7,
            "HH0 = dim A/[A,A]",
            zoo.len(),
            format!("N = {top}: {}", table.join(", ")),
            commutator_bad,
        ),
        Check::new(
            7,
            "Morita invariance: indiscrete(k), M2(Q) against Q",
            4,
            format!("degrees 0..{}", report - 1),
            morita_bad,
        ),
        Check::new(
            7,
            "dual numbers against the periodic complex; Q[C2] and QxQ against Q ⊕ Q",
            3,
            format!("periodic {periodic:?}"),
            oracle_bad,
        ),
        Check::new(
            8,
            "cyclic bar: cyclic identities as matrices, ∂∂ = 0, normalized = unnormalized",
            ids_checked,
            "identities on algebras of total dimension ≤ 4".into(),
            ids_bad,
        ),
    ]
}

/// Category axioms of bypass maps and of `Λ`, the cyclic nerve, and Smith
/// normal forms re-verified by multiplication.
pub fn check_structure(cfg: &SuiteConfig) -> Vec<Check> {
    // Bypass_S: unit laws and associativity over graphs with ≤ 3 edges on ≤ 2 vertices
    let e = cfg.max_edges.min(3);
    let mut bypass_bad = Vec::new();
    let mut bypass_n = 0;
    for n in 1..=cfg.max_vertices.min(2) {
        let graphs: Vec<Arc<Graph>> = suite_graphs(e, n).into_iter().filter(|g| g.vertices().len() == n).collect();
        let homs: Vec<Vec<Vec<BypassMap>>> = graphs
            .par_iter()
            .map(|a| graphs.iter().map(|b| hom_enumerate(a, b).expect("same S")).collect())
            .collect();
        let results: Vec<(usize, Vec<String>)> = (0..graphs.len())
            .into_par_iter()
            .map(|a| {
                let mut count = 0;
                let mut bad = Vec::new();
                for b in 0..graphs.len() {
                    for f in &homs[a][b] {
                        count += 1;
                        let id_a = BypassMap::identity(graphs[a].clone());
                        let id_b = BypassMap::identity(graphs[b].clone());
                        if f.compose(&id_a).ok().as_ref() != Some(f) || id_b.compose(f).ok().as_ref() != Some(f) {
                            bad.push(format!("unit law at {f:?}"));
                        }
                        for c in 0..graphs.len() {
                            for g in &homs[b][c] {
                                let gf = g.compose(f).expect("composable");
                                for d in 0..graphs.len() {
                                    for h in &homs[c][d] {
                                        count += 1;
                                        let left = h.compose(g).and_then(|hg| hg.compose(f));
                                        let right = h.compose(&gf);
                                        if left.ok() != right.ok() {
                                            bad.push(format!("associativity at {f:?}, {g:?}, {h:?}"));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                (count, bad)
            })
            .collect();
        bypass_n += results.iter().map(|r| r.0).sum::<usize>();
        bypass_bad.extend(results.into_iter().flat_map(|r| r.1));
    }

    // Λ: unit laws and associativity for indices ≤ 3
    let homs: Vec<Vec<Vec<LambdaArrow>>> = (0..=3).map(|m| (0..=3).map(|n| LambdaArrow::hom(m, n)).collect()).collect();
    let lambda: Vec<(usize, Vec<String>)> = (0..=3usize)
        .into_par_iter()
        .map(|a| {
            let mut count = 0;
            let mut bad = Vec::new();
            for b in 0..=3 {
                for f in &homs[a][b] {
                    count += 1;
                    if LambdaArrow::identity(b).compose(f).ok().as_ref() != Some(f)
                        || f.compose(&LambdaArrow::identity(a)).ok().as_ref() != Some(f)
                    {
                        bad.push(format!("unit law at {f}"));
                    }
                    for c in 0..=3 {
                        for g in &homs[b][c] {
                            let gf = g.compose(f).expect("composable");
                            for d in 0..=3 {
                                for h in &homs[c][d] {
                                    count += 1;
                                    let left = h.compose(g).and_then(|hg| hg.compose(f));
                                    if left != h.compose(&gf) {
                                        bad.push(format!("associativity at {f}, {g}, {h}"));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            (count, bad)
        })
        .collect();

    // cyclic nerves of S
    let nerve_bad: Vec<String> = (1..=cfg.max_vertices)
        .filter_map(|s| {
            let nerve = cyclic_nerve_triv(&VertexSet::alphabetic(s), cfg.dim);
            nerve
                .check_identities()
                .and_then(|_| nerve.check_functoriality(2))
                .err()
                .map(|e| format!("|S| = {s}: {e}"))
        })
        .collect();

    // Smith normal form: every 2×2 matrix with entries in −3..=3 and every
    // 3×3 matrix with entries in −1..=1
    let mut matrices: Vec<IntMatrix> = Vec::new();
    for (size, range) in [(2usize, 3i64), (3, 1)] {
        let vals: Vec<i64> = (-range..=range).collect();
        let cells = size * size;
        let total = vals.len().pow(cells as u32);
        for code in 0..total {
            let mut rest = code;
            let rows: Vec<Vec<i64>> = (0..size)
                .map(|_| {
                    (0..size)
                        .map(|_| {
                            let v = vals[rest % vals.len()];
                            rest /= vals.len();
                            v
                        })
                        .collect()
                })
                .collect();
            matrices.push(IntMatrix::from_rows(&rows));
        }
    }
    let snf_bad: Vec<String> = matrices
        .par_iter()
        .filter_map(|m| {
            let snf = smith_normal_form(m);
            let sparse = crate::homology::SparseMatrix::from_triplets(
                m.rows(),
                m.cols(),
                (0..m.rows()).flat_map(|r| (0..m.cols()).map(move |c| (r, c, m[(r, c)].clone()))),
            );
            match snf.verify(m) {
                Err(e) => Some(format!("{m:?}: {e}")),
                Ok(()) if snf.invariant_factors() != invariant_factors(&sparse) => {
                    Some(format!("{m:?}: dense and sparse invariant factors differ"))
                }
                Ok(()) => None,
            }
        })
        .collect();

    let (ln, lbad): (usize, Vec<String>) = (
        lambda.iter().map(|r| r.0).sum(),
        lambda.into_iter().flat_map(|r| r.1).collect(),
    );
    vec![
        Check::new(
            8,
            "bypass maps form a category",
            bypass_n,
            format!("graphs with ≤ {e} edges on ≤ 2 vertices, all composable triples"),
            bypass_bad,
        ),
        Check::new(8, "Λ is a category", ln, "indices ≤ 3, all composable triples".into(), lbad),
        Check::new(
            8,
            "cyclic nerve of S: cyclic identities and functoriality",
            cfg.max_vertices,
            format!("levels ≤ {}", cfg.dim),
            nerve_bad,
        ),
        Check::new(
            8,
            "Smith normal form: U·M·V = D, unimodular, divisibility, sparse agrees",
            matrices.len(),
            "all 2×2 over −3..3 and 3×3 over −1..1".into(),
            snf_bad,
        ),
    ]
}

/// Every check, ordered by criterion.
pub fn run_all(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(check_tours(cfg));
    checks.extend(check_othh(cfg));
    checks.extend(check_fibrations(cfg));
    checks.extend(check_lambda(cfg));
    checks.extend(check_hochschild(cfg));
    checks.extend(check_structure(cfg));
    checks.sort_by_key(|c| c.criterion);
    checks
}
