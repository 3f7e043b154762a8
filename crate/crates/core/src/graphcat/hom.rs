use std::sync::Arc;

use super::{BypassMap, Edge, Graph, GraphError};

/// All bypass operations `source → target`, ordered lexicographically by
/// (edge function, fiber orders).
pub fn hom_enumerate(source: &Arc<Graph>, target: &Arc<Graph>) -> Result<Vec<BypassMap>, GraphError> {
    if source.vertices() != target.vertices() {
        return Err(GraphError::VertexSetMismatch);
    }
    enumerate_fibers(source, target.edges())
        .into_iter()
        .map(|fibers| BypassMap::from_fibers(source.clone(), target.clone(), fibers))
        .collect()
}

/// Fiber systems of every bypass operation from `source` to a graph whose
/// edge list is `target`, in the canonical order.
pub(crate) fn enumerate_fibers(source: &Graph, target: &[Edge]) -> Vec<Vec<Vec<usize>>> {
    let mut search = Search {
        source,
        target,
        used: vec![false; source.edge_count()],
        remaining: source.edge_count(),
        fibers: vec![Vec::new(); target.len()],
        out: Vec::new(),
    };
    search.assign(0);
    let mut out = search.out;
    let key = |fibers: &Vec<Vec<usize>>| {
        let mut f = vec![0; source.edge_count()];
        for (t, fib) in fibers.iter().enumerate() {
            for &e in fib {
                f[e] = t;
            }
        }
        f
    };
    out.sort_by_cached_key(|fibers| (key(fibers), fibers.clone()));
    out
}

struct Search<'a> {
    source: &'a Graph,
    target: &'a [Edge],
    used: Vec<bool>,
    remaining: usize,
    fibers: Vec<Vec<usize>>,
    out: Vec<Vec<Vec<usize>>>,
}

impl Search<'_> {
    fn assign(&mut self, t: usize) {
        if t == self.target.len() {
            if self.remaining == 0 {
                self.out.push(self.fibers.clone());
            }
            return;
        }
        let te = self.target[t];
        if te.is_loop() {
            self.assign(t + 1);
        }
        self.extend(t, te);
    }

    /// Grows the fiber over target edge `t` by one unused source edge.
    fn extend(&mut self, t: usize, te: Edge) {
        let at = match self.fibers[t].last() {
            Some(&e) => self.source.edge(e).tgt,
            None => te.src,
        };
        for e in 0..self.source.edge_count() {
            if self.used[e] || self.source.edge(e).src != at {
                continue;
            }
            self.used[e] = true;
            self.remaining -= 1;
            self.fibers[t].push(e);
            if self.source.edge(e).tgt == te.tgt {
                self.assign(t + 1);
            }
            self.extend(t, te);
            self.fibers[t].pop();
            self.remaining += 1;
            self.used[e] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcat::{Vertex, VertexSet};

    /// Independent oracle: every function E → E′ and every ordering of every
    /// fiber, filtered by the bypass conditions.
    fn brute_force(source: &Arc<Graph>, target: &Arc<Graph>) -> Vec<BypassMap> {
        let (m, n) = (source.edge_count(), target.edge_count());
        let mut out = Vec::new();
        if n == 0 && m > 0 {
            return out;
        }
        let total = n.pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let mut fibers = vec![Vec::new(); n];
            for e in 0..m {
                fibers[c % n].push(e);
                c /= n;
            }
            for_each_ordering(&fibers, 0, &mut fibers.clone(), &mut |fs| {
                let f = BypassMap::from_fibers(source.clone(), target.clone(), fs.to_vec()).unwrap();
                if f.validate().is_ok() {
                    out.push(f);
                }
            });
        }
        out
    }

    fn for_each_ordering(
        base: &[Vec<usize>],
        i: usize,
        cur: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if i == base.len() {
            visit(cur);
            return;
        }
        let mut perm = base[i].clone();
        permutations(&mut perm, 0, &mut |p| {
            cur[i] = p.to_vec();
            for_each_ordering(base, i + 1, cur, visit);
        });
    }

    fn permutations(v: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            visit(v);
            return;
        }
        for j in k..v.len() {
            v.swap(k, j);
            permutations(v, k + 1, visit);
            v.swap(k, j);
        }
    }

    fn graphs() -> Vec<Arc<Graph>> {
        let vs = VertexSet::new(["A", "B"]).unwrap();
        let pairs = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let mut out = vec![Arc::new(Graph::empty(vs.clone()))];
        for a in 0..4 {
            out.push(Arc::new(
                Graph::from_edges(vs.clone(), [(Vertex(pairs[a].0), Vertex(pairs[a].1))]).unwrap(),
            ));
            for b in a..4 {
                let es = [a, b].map(|i| (Vertex(pairs[i].0), Vertex(pairs[i].1)));
                out.push(Arc::new(Graph::from_edges(vs.clone(), es).unwrap()));
                for c in b..4 {
                    let es = [a, b, c].map(|i| (Vertex(pairs[i].0), Vertex(pairs[i].1)));
                    out.push(Arc::new(Graph::from_edges(vs.clone(), es).unwrap()));
                }
            }
        }
        out
    }

    #[test]
    fn small_hom_sets() {
        let vs = VertexSet::new(["A", "B", "C"]).unwrap();
        let l1 = Arc::new(Graph::loops(vs.clone(), Vertex(0), 1).unwrap());
        let l2 = Arc::new(Graph::loops(vs.clone(), Vertex(0), 2).unwrap());
        assert_eq!(hom_enumerate(&l1, &l1).unwrap().len(), 1);
        let h = hom_enumerate(&l2, &l1).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h[0].fibers(), &[vec![0, 1]]);
        assert_eq!(h[1].fibers(), &[vec![1, 0]]);
        let ab = Arc::new(Graph::pair(vs.clone(), "A", "B").unwrap());
        let ac = Arc::new(Graph::pair(vs, "A", "C").unwrap());
        assert!(hom_enumerate(&ab, &ac).unwrap().is_empty());
    }

    #[test]
    fn backtracking_matches_brute_force() {
        let gs = graphs();
        for s in &gs {
            for t in &gs {
                let fast = hom_enumerate(s, t).unwrap();
                let mut slow = brute_force(s, t);
                slow.sort_by_key(|f| (f.edge_fn().to_vec(), f.fibers().to_vec()));
                assert_eq!(fast, slow, "{s} → {t}");
            }
        }
    }
}
