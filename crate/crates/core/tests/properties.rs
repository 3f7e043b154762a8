//! Randomized checks past the exhaustive ranges of the verification suite.

use std::sync::Arc;

use proptest::prelude::*;

use bypass_thh::cyclic::LambdaArrow;
use bypass_thh::eulerian::{enumerate_tours, pullback_tour};
use bypass_thh::graphcat::{hom_enumerate, BypassMap, Graph, Vertex, VertexSet};
use bypass_thh::thh::{build_othh, othh_homology};

fn graph(vertices: usize, max_edges: usize) -> impl Strategy<Value = Arc<Graph>> {
    (1..=vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |edges| {
            let s = VertexSet::alphabetic(n);
            Arc::new(Graph::from_edges(s, edges.into_iter().map(|(a, b)| (Vertex(a), Vertex(b)))).unwrap())
        })
    })
}

/// Same vertex set for every graph in the chain.
fn chain(len: usize, max_edges: usize) -> impl Strategy<Value = Vec<Arc<Graph>>> {
    (1..=2usize).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec((0..n, 0..n), 0..=max_edges), len).prop_map(move |gs| {
            gs.into_iter()
                .map(|edges| {
                    let s = VertexSet::alphabetic(n);
                    Arc::new(Graph::from_edges(s, edges.into_iter().map(|(a, b)| (Vertex(a), Vertex(b)))).unwrap())
                })
                .collect()
        })
    })
}

fn pick(maps: &[BypassMap], seed: usize) -> Option<&BypassMap> {
    (!maps.is_empty()).then(|| &maps[seed % maps.len()])
}

fn arrow(max: usize) -> impl Strategy<Value = (usize, usize, usize)> {
    (0..=max, 0..=max, any::<usize>())
}

fn nth_arrow(m: usize, n: usize, seed: usize) -> LambdaArrow {
    let all = LambdaArrow::hom(m, n);
    all[seed % all.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bypass_composition_is_associative_and_unital(gs in chain(4, 3), seeds in prop::array::uniform3(any::<usize>())) {
        let f_all = hom_enumerate(&gs[0], &gs[1]).unwrap();
        let g_all = hom_enumerate(&gs[1], &gs[2]).unwrap();
        let h_all = hom_enumerate(&gs[2], &gs[3]).unwrap();
        if let (Some(f), Some(g), Some(h)) = (pick(&f_all, seeds[0]), pick(&g_all, seeds[1]), pick(&h_all, seeds[2])) {
            prop_assert!(f.validate().is_ok());
            let left = h.compose(&g.compose(f).unwrap()).unwrap();
            let right = h.compose(g).unwrap().compose(f).unwrap();
            prop_assert_eq!(left.fibers(), right.fibers());
            prop_assert_eq!(left.edge_fn(), right.edge_fn());
            prop_assert!(left.validate().is_ok());
            let id0 = BypassMap::identity(gs[0].clone());
            let id1 = BypassMap::identity(gs[1].clone());
            let (right_unit, left_unit) = (f.compose(&id0).unwrap(), id1.compose(f).unwrap());
            prop_assert_eq!(right_unit.fibers(), f.fibers());
            prop_assert_eq!(left_unit.fibers(), f.fibers());
        }
    }

    #[test]
    fn tour_pullback_is_functorial(gs in chain(3, 4), seeds in prop::array::uniform3(any::<usize>())) {
        let f_all = hom_enumerate(&gs[0], &gs[1]).unwrap();
        let g_all = hom_enumerate(&gs[1], &gs[2]).unwrap();
        let tours = enumerate_tours(&gs[2]);
        if let (Some(f), Some(g), false) = (pick(&f_all, seeds[0]), pick(&g_all, seeds[1]), tours.is_empty()) {
            let t = &tours[seeds[2] % tours.len()];
            let direct = pullback_tour(&g.compose(f).unwrap(), t);
            let staged = pullback_tour(g, t).and_then(|u| pullback_tour(f, &u));
            match (direct, staged) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "direct {:?}, staged {:?}", a.is_ok(), b.is_ok()),
            }
        }
    }

    #[test]
    fn lambda_composition_and_duality((a, b, s1) in arrow(5), (c, s2) in (0..=5usize, any::<usize>()), (d, s3) in (0..=5usize, any::<usize>())) {
        let f = nth_arrow(a, b, s1);
        let g = nth_arrow(b, c, s2);
        let h = nth_arrow(c, d, s3);
        let hg_f = h.compose(&g).unwrap().compose(&f).unwrap();
        let h_gf = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(&hg_f, &h_gf);
        prop_assert_eq!(LambdaArrow::identity(b).compose(&f).unwrap(), f.clone());
        prop_assert_eq!(f.compose(&LambdaArrow::identity(a)).unwrap(), f.clone());
        prop_assert_eq!(f.dual().dual(), f.clone());
        prop_assert_eq!(g.compose(&f).unwrap().dual(), f.dual().compose(&g.dual()).unwrap());
    }

    #[test]
    fn lambda_hom_count(m in 0..=6usize, n in 0..=6usize) {
        let binom = (0..m).fold(1usize, |c, i| c * (m + n + 1 - i) / (i + 1));
        let all = LambdaArrow::hom(m, n);
        prop_assert_eq!(all.len(), (n + 1) * binom);
        let mut sorted = all.clone();
        sorted.sort_by_key(|f| format!("{f:?}"));
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Low-degree homology does not depend on the truncation level.
    #[test]
    fn othh_truncation_is_stable(g in graph(2, 3)) {
        let d2 = othh_homology(&g, 2).unwrap();
        let d3 = othh_homology(&g, 3).unwrap();
        let d4 = othh_homology(&g, 4).unwrap();
        prop_assert_eq!(&d2.betti[..], &d3.betti[..2]);
        prop_assert_eq!(&d3.betti[..], &d4.betti[..3]);
        prop_assert!(d2.pass && d3.pass && d4.pass);
    }

    /// Unnormalized integer chains, their rationalization and the normalized
    /// complex all give the same Betti numbers.
    #[test]
    fn integer_and_rational_betti_agree(g in graph(3, 4)) {
        let othh = build_othh(&g, 3);
        let moore = othh.cyclic_set().simplicial().unwrap().moore_chains().unwrap();
        let integral = moore.homology_all();
        let rational = moore.to_rational().homology_all();
        let normalized = othh.homology().unwrap();
        for ((z, q), n) in integral.iter().zip(&rational).zip(&normalized) {
            prop_assert_eq!(z.betti, q.betti);
            prop_assert_eq!(z.betti, n.betti);
            prop_assert!(z.torsion.is_empty());
            prop_assert!(q.torsion.is_empty());
        }
    }
}
