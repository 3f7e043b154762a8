//! Tours pulled back along bypass maps, unique lifts, and the arrow of Λ a
//! tour-compatible map induces.

use std::sync::Arc;

use bypass_thh::cyclic::LambdaArrow;
use bypass_thh::eulerian::{
    enumerate_tours, left_fibration_check, pullback_tour, right_fibration_check, straighten, to_lambda_arrow, Tour,
};
use bypass_thh::graphcat::{hom_enumerate, Graph, Vertex, VertexSet};

fn main() {
    let s = VertexSet::alphabetic(2);
    let (a, b) = (Vertex(0), Vertex(1));
    let source = Arc::new(Graph::from_edges(s.clone(), [(a, b), (b, a), (a, a)]).unwrap());
    let target = Arc::new(Graph::from_edges(s.clone(), [(a, a), (a, a)]).unwrap());
    let target_tour = Tour::new(target.clone(), vec![0, 1]).unwrap();

    for f in hom_enumerate(&source, &target).unwrap() {
        let lift = pullback_tour(&f, &target_tour).unwrap();
        let report = right_fibration_check(&f, &target_tour);
        let arrow = to_lambda_arrow(&f, &lift, &target_tour).unwrap();
        println!("{f:?}\n  pulls {target_tour} back to {lift}; {} lift(s); induces {arrow}", report.lift_count);
    }

    let x = &enumerate_tours(&source)[0];
    println!("\nstraightening of {x}: {:?}", straighten(x));
    for g in LambdaArrow::hom(1, 2) {
        let r = left_fibration_check(x, &g).unwrap();
        println!("  lift along {g}: {} ({} found)", if r.pass { "unique" } else { "FAILED" }, r.lift_count);
    }
}
