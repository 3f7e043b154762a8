use std::sync::Arc;

use serde::Serialize;

use super::{enumerate_tours, EulerError, Tour};
use crate::cyclic::{cyclic_nerve_triv, LambdaArrow};
use crate::graphcat::{hom_enumerate, BypassMap, Graph, Vertex, VertexSet};

/// Outcome of a unique-lifting check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub instance: String,
    pub lift_count: usize,
    pub pass: bool,
}

/// Source edges in the order obtained by walking `tour` and replacing each
/// edge by its fiber.
fn fiber_walk(f: &BypassMap, tour: &Tour) -> Vec<usize> {
    tour.order().iter().flat_map(|&e| f.fiber(e).iter().copied()).collect()
}

/// The tour on `source(f)` obtained by replacing each edge of `tour` by its
/// ordered fiber. This is the contravariant action of `Eul`.
pub fn pullback_tour(f: &BypassMap, tour: &Tour) -> Result<Tour, EulerError> {
    if **tour.graph() != **f.target() {
        return Err(EulerError::GraphMismatch);
    }
    if f.source().is_empty() {
        return Err(EulerError::EmptyGraph);
    }
    Tour::new(f.source().clone(), fiber_walk(f, tour))
}

/// Whether `f` is a morphism `(source, tour) → (target, target_tour)` of the
/// tour category.
pub fn eul_morphism_valid(f: &BypassMap, tour: &Tour, target_tour: &Tour) -> bool {
    **tour.graph() == **f.source()
        && f.validate().is_ok()
        && pullback_tour(f, target_tour).is_ok_and(|t| t == *tour)
}

/// Counts the tours on `source(f)` that `f` carries to `target_tour`; the
/// check passes when there is exactly one and it is the pullback.
pub fn right_fibration_check(f: &BypassMap, target_tour: &Tour) -> LiftReport {
    let instance = format!("{} → {} over {}", f.source(), f.target(), target_tour);
    let lifts: Vec<Tour> = enumerate_tours(f.source())
        .into_iter()
        .filter(|t| eul_morphism_valid(f, t, target_tour))
        .collect();
    let pass = lifts.len() == 1 && pullback_tour(f, target_tour).is_ok_and(|p| p == lifts[0]);
    LiftReport {
        instance,
        lift_count: lifts.len(),
        pass,
    }
}

/// The cyclic index of a tour graph: `T_{m−1}` for `m` edges.
pub fn to_lambda_object(x: &Tour) -> usize {
    x.len() - 1
}

/// The arrow `T_{m′−1} → T_{m−1}` of a tour-category morphism
/// `f: (Γ, τ) → (Γ′, τ′)`, with `m = |E(Γ)|` and `m′ = |E(Γ′)|`.
///
/// Objects of `T_{m−1}` are the edges of `Γ` in `τ` order, and likewise for
/// `Γ′`. Edge `e′` of `Γ′` goes to the first edge of `Γ` at or after the
/// start of its fiber along the tour (the next nonempty fiber if its own is
/// empty). On lifts this is `j ↦ min { k : F(k) ≥ j }` for the edge
/// function `F`, read as a degree-1 map.
pub fn to_lambda_arrow(f: &BypassMap, tour: &Tour, target_tour: &Tour) -> Result<LambdaArrow, EulerError> {
    if !eul_morphism_valid(f, tour, target_tour) {
        return Err(EulerError::NotEulMorphism);
    }
    let walk = fiber_walk(f, target_tour);
    let (m, m_t) = (walk.len() as i64, target_tour.len() as i64);
    let target_position = target_tour.positions();
    let fiber_of: Vec<i64> = walk.iter().map(|&e| target_position[f.edge_fn()[e]] as i64).collect();
    let lift = |k: i64| fiber_of[k.rem_euclid(m) as usize] + k.div_euclid(m) * m_t;
    let first_at_or_after = |j: i64| {
        let mut k = (j.div_euclid(m_t) - 1) * m;
        while lift(k) < j {
            k += 1;
        }
        k
    };
    let offset = tour.positions()[walk[0]] as i64;
    Ok(LambdaArrow::from_lift(
        target_tour.len() - 1,
        tour.len() - 1,
        |j| first_at_or_after(j) + offset,
    )?)
}

/// The straightening of a tour graph: its cyclic index and the stops
/// `s(τ₀), …, s(τ_{m−1})`.
pub fn straighten(x: &Tour) -> (usize, Vec<Vertex>) {
    (to_lambda_object(x), x.labels())
}

/// The cycle graph through `labels` with its tour `e0 e1 ⋯`: the canonical
/// tour graph with these stops.
pub fn unstraighten(vertices: &VertexSet, labels: &[Vertex]) -> Result<Tour, EulerError> {
    if labels.is_empty() {
        return Err(EulerError::EmptyGraph);
    }
    let graph = Arc::new(Graph::cycle_on(vertices.clone(), labels)?);
    Tour::new(graph, (0..labels.len()).collect())
}

/// Searches all canonical tour graphs `y` with `k + 1` edges and all
/// tour-category morphisms `x → y` for those sent to `g: T_k → T_{m−1}`.
/// Passes when there is exactly one, and its target carries the stops
/// `g^*(stops of x)` prescribed by the cyclic nerve of `S`.
pub fn left_fibration_check(x: &Tour, g: &LambdaArrow) -> Result<LiftReport, EulerError> {
    let vertices = x.graph().vertices();
    if g.target() != to_lambda_object(x) {
        return Err(EulerError::Cyclic(crate::cyclic::CyclicError::IndexMismatch {
            expected: to_lambda_object(x),
            found: g.target(),
        }));
    }
    let nerve = cyclic_nerve_triv(vertices, g.source().max(g.target()));
    let mut found: Vec<Vec<Vertex>> = Vec::new();
    for labels in nerve.level(g.source()) {
        let y = unstraighten(vertices, labels)?;
        for f in hom_enumerate(x.graph(), y.graph())? {
            if eul_morphism_valid(&f, x, &y) && to_lambda_arrow(&f, x, &y)? == *g {
                found.push(labels.clone());
            }
        }
    }
    let stops = x.labels();
    let expected: Vec<Vertex> = g.objects().into_iter().map(|o| stops[o]).collect();
    Ok(LiftReport {
        instance: format!("{} along {g}", x),
        lift_count: found.len(),
        pass: found.len() == 1 && found[0] == expected,
    })
}
