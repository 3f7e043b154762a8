//! Enumerate the Eulerian tours of a few graphs and compare with the BEST
//! theorem count.

use std::sync::Arc;

use bypass_thh::eulerian::{count_tours_oracle, enumerate_tours};
use bypass_thh::graphcat::{Graph, Vertex, VertexSet};

fn main() {
    let s = VertexSet::alphabetic(3);
    let (a, b, c) = (Vertex(0), Vertex(1), Vertex(2));
    let graphs = [
        ("three loops at A", Graph::loops(s.clone(), a, 3).unwrap()),
        ("A ⇉ B ⇉ A", Graph::from_edges(s.clone(), [(a, b), (a, b), (b, a), (b, a)]).unwrap()),
        ("triangle with a loop", Graph::from_edges(s.clone(), [(a, b), (b, c), (c, a), (b, b)]).unwrap()),
        ("loops at A and at B", Graph::from_edges(s, [(a, a), (b, b)]).unwrap()),
    ];
    for (name, g) in graphs {
        let g = Arc::new(g);
        let tours = enumerate_tours(&g);
        println!("{name}: {g}");
        for t in &tours {
            println!("  {t}");
        }
        println!("  {} tours, BEST count {}\n", tours.len(), count_tours_oracle(&g));
    }
}
