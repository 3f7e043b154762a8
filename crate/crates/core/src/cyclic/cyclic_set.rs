use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use super::{CyclicError, LambdaArrow};
use crate::graphcat::{Vertex, VertexSet};
use crate::homology::SimplicialSet;

type Action<T> = Arc<dyn Fn(&LambdaArrow, &T) -> T + Send + Sync>;

/// A cyclic set truncated at a dimension bound `D`: explicit levels
/// `X_0, …, X_D` and a contravariant action `f^*: X_n → X_m` for each
/// `f: T_m → T_n`.
///
/// The action is evaluated on elements and the result located by lookup, so
/// a closure that leaves the listed levels is reported rather than trusted.
#[derive(Clone)]
pub struct TruncatedCyclicSet<T> {
    levels: Vec<Vec<T>>,
    index: Vec<HashMap<T, usize>>,
    action: Action<T>,
}

impl<T: fmt::Debug> fmt::Debug for TruncatedCyclicSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedCyclicSet")
            .field("levels", &self.levels)
            .finish_non_exhaustive()
    }
}

/// The structure maps at one level, as index tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOperators {
    pub level: usize,
    /// `faces[i][x] = dᵢ x ∈ X_{n−1}`; empty at level 0.
    pub faces: Vec<Vec<usize>>,
    /// `degeneracies[i][x] = sᵢ x ∈ X_{n+1}`; empty at the top level.
    pub degeneracies: Vec<Vec<usize>>,
    /// `rotation[x] = tₙ x`.
    pub rotation: Vec<usize>,
}

impl<T: Clone + Eq + Hash> TruncatedCyclicSet<T> {
    pub fn new(
        levels: Vec<Vec<T>>,
        action: impl Fn(&LambdaArrow, &T) -> T + Send + Sync + 'static,
    ) -> Result<Self, CyclicError> {
        if levels.is_empty() {
            return Err(CyclicError::LevelCount {
                expected: 1,
                found: 0,
            });
        }
        let mut index = Vec::with_capacity(levels.len());
        for (level, xs) in levels.iter().enumerate() {
            let map: HashMap<T, usize> = xs.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
            if map.len() != xs.len() {
                return Err(CyclicError::DuplicateElement { level });
            }
            index.push(map);
        }
        Ok(TruncatedCyclicSet {
            levels,
            index,
            action: Arc::new(action),
        })
    }

    /// The constant cyclic set on `elements`.
    pub fn constant(dim_bound: usize, elements: Vec<T>) -> Result<Self, CyclicError> {
        Self::new(vec![elements; dim_bound + 1], |_, x| x.clone())
    }

    pub fn dim_bound(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &[T] {
        &self.levels[n]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn position(&self, n: usize, x: &T) -> Option<usize> {
        self.index.get(n)?.get(x).copied()
    }

    /// `f^*(X_n[x])` as an index into `X_m`, for `f: T_m → T_n`.
    pub fn act(&self, f: &LambdaArrow, x: usize) -> Result<usize, CyclicError> {
        let bound = self.dim_bound();
        for level in [f.source(), f.target()] {
            if level > bound {
                return Err(CyclicError::LevelOutOfRange { level, bound });
            }
        }
        let n = f.target();
        let elem = self.levels[n]
            .get(x)
            .ok_or(CyclicError::NoSuchElement { level: n, index: x })?;
        let image = (self.action)(f, elem);
        self.position(f.source(), &image).ok_or_else(|| CyclicError::NotClosed {
            level: f.source(),
            arrow: f.to_string(),
        })
    }

    /// `f^*` on all of `X_n` as an index table.
    pub fn table(&self, f: &LambdaArrow) -> Result<Vec<usize>, CyclicError> {
        (0..self.levels[f.target()].len())
            .map(|x| self.act(f, x))
            .collect()
    }

    pub fn operators(&self, n: usize) -> Result<CyclicOperators, CyclicError> {
        let bound = self.dim_bound();
        if n > bound {
            return Err(CyclicError::LevelOutOfRange { level: n, bound });
        }
        let faces = if n == 0 {
            Vec::new()
        } else {
            (0..=n)
                .map(|i| self.table(&LambdaArrow::coface(n, i)))
                .collect::<Result<_, _>>()?
        };
        let degeneracies = if n == bound {
            Vec::new()
        } else {
            (0..=n)
                .map(|i| self.table(&LambdaArrow::codegeneracy(n, i)))
                .collect::<Result<_, _>>()?
        };
        Ok(CyclicOperators {
            level: n,
            faces,
            degeneracies,
            rotation: self.table(&LambdaArrow::rotation(n))?,
        })
    }

    /// The restriction along `Δ ⊂ Λ`.
    pub fn simplicial(&self) -> Result<SimplicialSet, CyclicError> {
        let ops: Vec<CyclicOperators> = (0..=self.dim_bound())
            .map(|n| self.operators(n))
            .collect::<Result<_, _>>()?;
        let faces = ops.iter().map(|o| o.faces.clone()).collect();
        let degeneracies = ops.into_iter().map(|o| o.degeneracies).collect();
        Ok(SimplicialSet::new(self.sizes(), faces, degeneracies))
    }

    /// Checks the simplicial and cyclic identities on every element up to the
    /// bound.
    pub fn check_identities(&self) -> Result<(), CyclicError> {
        let bound = self.dim_bound();
        let ops: Vec<CyclicOperators> = (0..=bound)
            .map(|n| self.operators(n))
            .collect::<Result<_, _>>()?;
        self.simplicial()?
            .check_identities()
            .map_err(CyclicError::IdentityFailed)?;
        let fail = |what: String| Err(CyclicError::IdentityFailed(what));
        for (n, op) in ops.iter().enumerate() {
            let t = &op.rotation;
            for x in 0..t.len() {
                let mut y = x;
                for _ in 0..=n {
                    y = t[y];
                }
                if y != x {
                    return fail(format!("t_{n}^{} ≠ id at x = {x}", n + 1));
                }
                if n >= 1 {
                    let below = &ops[n - 1].rotation;
                    if op.faces[0][t[x]] != op.faces[n][x] {
                        return fail(format!("d_0 t_{n} ≠ d_{n} at x = {x}"));
                    }
                    for i in 1..=n {
                        if op.faces[i][t[x]] != below[op.faces[i - 1][x]] {
                            return fail(format!("d_{i} t_{n} ≠ t_{} d_{} at x = {x}", n - 1, i - 1));
                        }
                    }
                }
                if n < bound {
                    let above = &ops[n + 1].rotation;
                    if op.degeneracies[0][t[x]] != above[above[op.degeneracies[n][x]]] {
                        return fail(format!("s_0 t_{n} ≠ t_{}² s_{n} at x = {x}", n + 1));
                    }
                    for i in 1..=n {
                        if op.degeneracies[i][t[x]] != above[op.degeneracies[i - 1][x]] {
                            return fail(format!("s_{i} t_{n} ≠ t_{} s_{} at x = {x}", n + 1, i - 1));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `(g∘f)^* = f^* g^*` and `id^* = id` over every pair of
    /// composable arrows between levels `≤ up_to`.
    pub fn check_functoriality(&self, up_to: usize) -> Result<(), CyclicError> {
        let top = up_to.min(self.dim_bound());
        for n in 0..=top {
            let id = self.table(&LambdaArrow::identity(n))?;
            if id.iter().enumerate().any(|(x, &y)| x != y) {
                return Err(CyclicError::IdentityFailed(format!("id_{n} acts nontrivially")));
            }
        }
        let tables: HashMap<(usize, usize), Vec<(LambdaArrow, Vec<usize>)>> = (0..=top)
            .flat_map(|m| (0..=top).map(move |n| (m, n)))
            .map(|(m, n)| {
                let ts = LambdaArrow::hom(m, n)
                    .into_iter()
                    .map(|f| self.table(&f).map(|t| (f, t)))
                    .collect::<Result<_, _>>()?;
                Ok(((m, n), ts))
            })
            .collect::<Result<_, CyclicError>>()?;
        for k in 0..=top {
            for m in 0..=top {
                for n in 0..=top {
                    for (f, tf) in &tables[&(k, m)] {
                        for (g, tg) in &tables[&(m, n)] {
                            let gf = self.table(&g.compose(f)?)?;
                            if (0..tg.len()).any(|x| gf[x] != tf[tg[x]]) {
                                return Err(CyclicError::IdentityFailed(format!(
                                    "({g})∘({f}) does not act as the composite"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The colimit of `X` over `Λᵒᵖ`: the classes of `X_0` under
    /// `d₀σ ~ d₁σ` for `σ ∈ X_1`. Classes are listed by their smallest
    /// element, each sorted.
    pub fn set_colimit(&self) -> Result<Vec<Vec<usize>>, CyclicError> {
        if self.dim_bound() < 1 {
            return Err(CyclicError::DimensionTooSmall(1));
        }
        let ops = self.operators(1)?;
        let mut uf = UnionFind::new(self.levels[0].len());
        for (&a, &b) in ops.faces[0].iter().zip(&ops.faces[1]) {
            uf.union(a, b);
        }
        Ok(classes(&mut uf, self.levels[0].len()))
    }
}

pub(crate) fn classes(uf: &mut UnionFind<usize>, n: usize) -> Vec<Vec<usize>> {
    let mut by_root: HashMap<usize, usize> = HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let r = uf.find_mut(x);
        let slot = *by_root.entry(r).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[slot].push(x);
    }
    out
}

/// The cyclic nerve of the trivial category on `S`: level `n` is `S^{n+1}`
/// in lexicographic order, and `f^*(x)ᵢ = x_{o_f(vᵢ)}`.
pub fn cyclic_nerve_triv(
    vertices: &VertexSet,
    dim_bound: usize,
) -> TruncatedCyclicSet<Vec<Vertex>> {
    let levels = (0..=dim_bound)
        .map(|n| tuples(vertices.len(), n + 1))
        .collect();
    TruncatedCyclicSet::new(levels, |f, x: &Vec<Vertex>| {
        f.objects().into_iter().map(|o| x[o]).collect()
    })
    .expect("tuples are distinct")
}

pub(crate) fn tuples(k: usize, len: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<Vertex>| {
                (0..k).map(move |v| {
                    let mut u = t.clone();
                    u.push(Vertex(v));
                    u
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> VertexSet {
        VertexSet::new(["A", "B", "C"]).unwrap()
    }

    fn named(vs: &VertexSet, xs: &[Vertex]) -> String {
        xs.iter().map(|&v| vs.label(v)).collect()
    }

    #[test]
    fn rotation_on_triples() {
        let vs = abc();
        let x = cyclic_nerve_triv(&vs, 2);
        let abc_idx = x.position(2, &vec![Vertex(0), Vertex(1), Vertex(2)]).unwrap();
        let y = x.act(&LambdaArrow::rotation(2), abc_idx).unwrap();
        assert_eq!(named(&vs, &x.level(2)[y]), "CAB");
    }

    #[test]
    fn faces_and_degeneracies_of_the_nerve() {
        let vs = abc();
        let x = cyclic_nerve_triv(&vs, 2);
        let ops = x.operators(2).unwrap();
        let abc_idx = x.position(2, &vec![Vertex(0), Vertex(1), Vertex(2)]).unwrap();
        let faces: Vec<String> = ops.faces.iter().map(|d| named(&vs, &x.level(1)[d[abc_idx]])).collect();
        assert_eq!(faces, ["BC", "AC", "AB"]);
        let ops1 = x.operators(1).unwrap();
        let ab = x.position(1, &vec![Vertex(0), Vertex(1)]).unwrap();
        let degs: Vec<String> = ops1.degeneracies.iter().map(|s| named(&vs, &x.level(2)[s[ab]])).collect();
        assert_eq!(degs, ["AAB", "ABB"]);
    }

    #[test]
    fn nerve_satisfies_all_identities() {
        let x = cyclic_nerve_triv(&VertexSet::alphabetic(2), 3);
        x.check_identities().unwrap();
        x.check_functoriality(3).unwrap();
        assert_eq!(x.sizes(), [2, 4, 8, 16]);
    }

    #[test]
    fn constant_set() {
        let x = TruncatedCyclicSet::constant(3, vec!['p', 'q']).unwrap();
        x.check_identities().unwrap();
        x.check_functoriality(2).unwrap();
        assert_eq!(x.set_colimit().unwrap(), [vec![0], vec![1]]);
    }

    #[test]
    fn colimit_of_the_nerve_is_a_point() {
        let x = cyclic_nerve_triv(&abc(), 2);
        assert_eq!(x.set_colimit().unwrap(), [vec![0, 1, 2]]);
    }

    #[test]
    fn colimit_agrees_with_the_full_relation() {
        // every element related to every restriction of it, over all arrows
        let x = cyclic_nerve_triv(&VertexSet::alphabetic(2), 2);
        let offsets = [0, 2, 6];
        let mut uf = UnionFind::new(14);
        for m in 0..=2 {
            for n in 0..=2 {
                for f in LambdaArrow::hom(m, n) {
                    for (a, b) in x.table(&f).unwrap().into_iter().enumerate() {
                        uf.union(offsets[n] + a, offsets[m] + b);
                    }
                }
            }
        }
        let roots: std::collections::HashSet<usize> = (0..14).map(|i| uf.find(i)).collect();
        assert_eq!(roots.len(), x.set_colimit().unwrap().len());
    }

    #[test]
    fn broken_rotation_is_detected() {
        // the nerve with tₙ replaced by its inverse fails the cyclic identities
        let levels = (0..=2).map(|n| tuples(2, n + 1)).collect();
        let x = TruncatedCyclicSet::new(levels, |f: &LambdaArrow, x: &Vec<Vertex>| {
            let n = f.target();
            let g = if f.source() == n && *f == LambdaArrow::rotation(n) {
                LambdaArrow::shift(n)
            } else {
                f.clone()
            };
            g.objects().into_iter().map(|o| x[o]).collect()
        })
        .unwrap();
        assert!(x.check_identities().is_err());
    }

    #[test]
    fn leaving_the_levels_is_reported() {
        let x = TruncatedCyclicSet::new(vec![vec![0u8], vec![1u8]], |_, &x| x).unwrap();
        assert!(matches!(
            x.act(&LambdaArrow::coface(1, 0), 0),
            Err(CyclicError::NotClosed { level: 0, .. })
        ));
        assert!(matches!(
            TruncatedCyclicSet::new(vec![vec![0u8, 0u8]], |_, &x| x),
            Err(CyclicError::DuplicateElement { level: 0 })
        ));
    }
}
