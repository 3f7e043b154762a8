//! The cyclic set of itineraries on a graph: homology, its splitting by
//! Eulerian tour, and connected components.

use std::sync::Arc;

use bypass_thh::graphcat::{Graph, Vertex, VertexSet};
use bypass_thh::thh::{build_othh, othh_homology};

fn main() {
    let s = VertexSet::alphabetic(2);
    let (a, b) = (Vertex(0), Vertex(1));
    let g = Arc::new(Graph::from_edges(s.clone(), [(a, b), (b, a), (a, a), (a, a)]).unwrap());

    let othh = build_othh(&g, 3);
    println!("{g}: level sizes {:?}", othh.cyclic_set().sizes());
    for h in othh.homology().unwrap() {
        println!("  {h}");
    }
    for block in othh.tour_decomposition().unwrap() {
        println!("  over {}: {:?}", block.tour, block.set.sizes());
    }
    println!("  π0: {:?}", othh.pi0_orbits().unwrap());

    let empty = Arc::new(Graph::empty(s));
    let report = othh_homology(&empty, 3).unwrap();
    println!("∅ on {{A, B}}: betti {:?}, pass {}", report.betti, report.pass);
}
