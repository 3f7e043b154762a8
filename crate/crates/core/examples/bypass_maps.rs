//! Bypass operations: enumerate a hom-set, compose, and see a validity
//! report for a map that breaks the rules.

use std::sync::Arc;

use bypass_thh::graphcat::{hom_enumerate, BypassMap, Graph, VertexSet};

fn main() {
    let s = VertexSet::alphabetic(3);
    let path = Arc::new(Graph::path(s.clone(), &["A", "B", "C"]).unwrap());
    let cycle = Arc::new(Graph::cycle(s.clone(), &["A", "B"]).unwrap());
    let edge = Arc::new(Graph::pair(s.clone(), "A", "C").unwrap());

    let homs = hom_enumerate(&path, &edge).unwrap();
    println!("hom({path}, {edge}) has {} element(s): {:?}", homs.len(), homs);

    let loops = Arc::new(Graph::loops(s.clone(), bypass_thh::graphcat::Vertex(0), 2).unwrap());
    let into_cycle = hom_enumerate(&cycle, &loops).unwrap();
    println!("hom({cycle}, {loops}) has {} elements", into_cycle.len());

    // the generating composition and unit, composed
    let compose = BypassMap::generator_compose(&s, "A", "A", "A").unwrap();
    let unit = BypassMap::generator_unit(&s, "A").unwrap();
    let unit_twice = unit.tensor(&unit).unwrap();
    let collapsed = compose.compose(&unit_twice).unwrap();
    println!("compose ∘ (unit ⊗ unit) = {collapsed:?}");

    // the fiber [e1, e0] does not start at A
    let bad = BypassMap::from_fibers(cycle.clone(), Arc::new(Graph::pair(s, "A", "A").unwrap()), vec![vec![1, 0]]).unwrap();
    println!("validity of {bad:?}: {:?}", bad.validate());
}
