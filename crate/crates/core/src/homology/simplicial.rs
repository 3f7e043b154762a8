use num_bigint::BigInt;

use super::{ChainComplex, SparseMatrix};

/// A simplicial set truncated at `D`, as face and degeneracy tables.
///
/// `faces[n][i][x] = dᵢ x` for `1 ≤ n ≤ D`; `degeneracies[n][i][x] = sᵢ x`
/// for `n < D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    sizes: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SimplicialSet {
    pub fn new(sizes: Vec<usize>, faces: Vec<Vec<Vec<usize>>>, degeneracies: Vec<Vec<Vec<usize>>>) -> Self {
        let d = sizes.len() - 1;
        assert_eq!(faces.len(), d + 1, "one face table list per level");
        assert_eq!(degeneracies.len(), d + 1, "one degeneracy table list per level");
        for n in 0..=d {
            let (fs, ss) = (&faces[n], &degeneracies[n]);
            assert_eq!(fs.len(), if n == 0 { 0 } else { n + 1 }, "face count at level {n}");
            assert_eq!(ss.len(), if n == d { 0 } else { n + 1 }, "degeneracy count at level {n}");
            for t in fs.iter().chain(ss) {
                assert_eq!(t.len(), sizes[n], "table length at level {n}");
            }
            assert!(fs.iter().flatten().all(|&y| n >= 1 && y < sizes[n - 1]));
            assert!(ss.iter().flatten().all(|&y| y < sizes[n + 1]));
        }
        SimplicialSet {
            sizes,
            faces,
            degeneracies,
        }
    }

    pub fn dim_bound(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &[usize] {
        &self.degeneracies[n][i]
    }

    /// Checks all simplicial identities that fit under the bound.
    pub fn check_identities(&self) -> Result<(), String> {
        let d = self.dim_bound();
        for n in 0..=d {
            for x in 0..self.sizes[n] {
                // dᵢdⱼ = dⱼ₋₁dᵢ for i < j
                if n >= 2 {
                    for j in 0..=n {
                        for i in 0..j {
                            let lhs = self.faces[n - 1][i][self.faces[n][j][x]];
                            let rhs = self.faces[n - 1][j - 1][self.faces[n][i][x]];
                            if lhs != rhs {
                                return Err(format!("d_{i} d_{j} ≠ d_{} d_{i} on level {n}, x = {x}", j - 1));
                            }
                        }
                    }
                }
                if n < d {
                    for j in 0..=n {
                        let sx = self.degeneracies[n][j][x];
                        for i in 0..=n + 1 {
                            let lhs = self.faces[n + 1][i][sx];
                            let rhs = if i == j || i == j + 1 {
                                x
                            } else if i < j {
                                self.degeneracies[n - 1][j - 1][self.faces[n][i][x]]
                            } else {
                                self.degeneracies[n - 1][j][self.faces[n][i - 1][x]]
                            };
                            if lhs != rhs {
                                return Err(format!("d_{i} s_{j} fails on level {n}, x = {x}"));
                            }
                        }
                    }
                }
                if n + 1 < d {
                    for j in 0..=n {
                        for i in 0..=j {
                            let lhs = self.degeneracies[n + 1][i][self.degeneracies[n][j][x]];
                            let rhs = self.degeneracies[n + 1][j + 1][self.degeneracies[n][i][x]];
                            if lhs != rhs {
                                return Err(format!("s_{i} s_{j} ≠ s_{} s_{i} on level {n}, x = {x}", j + 1));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `degenerate[n][x]`: whether `x` lies in the image of some `sᵢ`.
    pub fn degenerate(&self) -> Vec<Vec<bool>> {
        (0..=self.dim_bound())
            .map(|n| {
                let mut hit = vec![false; self.sizes[n]];
                if n >= 1 {
                    for s in &self.degeneracies[n - 1] {
                        for &y in s {
                            hit[y] = true;
                        }
                    }
                }
                hit
            })
            .collect()
    }

    /// The normalized chain complex: nondegenerate simplices as bases and
    /// `∂ = Σ (−1)ⁱ dᵢ`, degenerate faces dropped.
    ///
    /// Fails if the simplicial identities fail. `∂∂ = 0` is asserted.
    pub fn normalized_chains(&self) -> Result<NormalizedChains, String> {
        self.check_identities()?;
        let degenerate = self.degenerate();
        let basis: Vec<Vec<usize>> = degenerate
            .iter()
            .map(|d| (0..d.len()).filter(|&x| !d[x]).collect())
            .collect();
        let complex = self.chains_on(&basis);
        Ok(NormalizedChains { basis, complex })
    }

    /// The unnormalized (Moore) complex on all simplices.
    pub fn moore_chains(&self) -> Result<ChainComplex<BigInt>, String> {
        self.check_identities()?;
        let basis: Vec<Vec<usize>> = self.sizes.iter().map(|&s| (0..s).collect()).collect();
        Ok(self.chains_on(&basis))
    }

    fn chains_on(&self, basis: &[Vec<usize>]) -> ChainComplex<BigInt> {
        let position: Vec<Vec<Option<usize>>> = basis
            .iter()
            .zip(&self.sizes)
            .map(|(b, &s)| {
                let mut p = vec![None; s];
                for (i, &x) in b.iter().enumerate() {
                    p[x] = Some(i);
                }
                p
            })
            .collect();
        let boundaries = (1..=self.dim_bound())
            .map(|n| {
                let mut triplets = Vec::new();
                for (col, &x) in basis[n].iter().enumerate() {
                    for i in 0..=n {
                        if let Some(row) = position[n - 1][self.faces[n][i][x]] {
                            let sign = if i % 2 == 0 { 1 } else { -1 };
                            triplets.push((row, col, BigInt::from(sign)));
                        }
                    }
                }
                SparseMatrix::from_triplets(basis[n - 1].len(), basis[n].len(), triplets)
            })
            .collect();
        ChainComplex::new(basis.iter().map(Vec::len).collect(), boundaries)
            .expect("∂∂ = 0 follows from the simplicial identities")
    }
}

/// Normalized chains together with the simplices chosen as bases.
#[derive(Debug, Clone)]
pub struct NormalizedChains {
    /// `basis[n]` lists the nondegenerate `n`-simplices.
    pub basis: Vec<Vec<usize>>,
    pub complex: ChainComplex<BigInt>,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The point: one simplex per level, all maps identity.
    fn point(d: usize) -> SimplicialSet {
        let faces = (0..=d).map(|n| if n == 0 { vec![] } else { vec![vec![0]; n + 1] }).collect();
        let degs = (0..=d).map(|n| if n == d { vec![] } else { vec![vec![0]; n + 1] }).collect();
        SimplicialSet::new(vec![1; d + 1], faces, degs)
    }

    /// `Δ[1]/∂Δ[1]` truncated: level n is the monotone maps `[n] → [1]` with
    /// the two constant maps identified.
    fn circle(d: usize) -> SimplicialSet {
        // monotone α: [n] → [1] is determined by k = #{i : α(i) = 0} ∈ 0..=n+1;
        // k = 0 and k = n+1 are the basepoint, stored as index 0.
        let idx = |n: usize, k: usize| if k == 0 || k == n + 1 { 0 } else { k };
        let sizes: Vec<usize> = (0..=d).map(|n| n + 1).collect();
        let faces = (0..=d)
            .map(|n| {
                if n == 0 {
                    return vec![];
                }
                (0..=n)
                    .map(|i| {
                        (0..=n)
                            .map(|x| {
                                let k = if x == 0 { 0 } else { x };
                                let k2 = if k > i { k - 1 } else { k };
                                idx(n - 1, k2)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let degs = (0..=d)
            .map(|n| {
                if n == d {
                    return vec![];
                }
                (0..=n)
                    .map(|j| {
                        (0..=n)
                            .map(|x| {
                                let k = if x == 0 { 0 } else { x };
                                let k2 = if k > j { k + 1 } else { k };
                                idx(n + 1, k2)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SimplicialSet::new(sizes, faces, degs)
    }

    #[test]
    fn point_has_no_positive_chains() {
        let n = point(3).normalized_chains().unwrap();
        assert_eq!(n.complex.dims(), [1, 0, 0, 0]);
        let h = n.complex.homology_all();
        assert_eq!(h.iter().map(|g| g.betti).collect::<Vec<_>>(), [1, 0, 0]);
    }

    #[test]
    fn circle_model() {
        let s = circle(3);
        s.check_identities().unwrap();
        let n = s.normalized_chains().unwrap();
        assert_eq!(n.complex.dims(), [1, 1, 0, 0]);
        let betti: Vec<usize> = n.complex.homology_all().iter().map(|g| g.betti).collect();
        assert_eq!(betti, [1, 1, 0]);
        let moore: Vec<usize> = s.moore_chains().unwrap().homology_all().iter().map(|g| g.betti).collect();
        assert_eq!(moore, betti);
    }

    #[test]
    fn nondegenerate_counts_bounded_by_levels() {
        for s in [point(3), circle(4)] {
            let n = s.normalized_chains().unwrap();
            for (b, &size) in n.basis.iter().zip(s.sizes()) {
                assert!(b.len() <= size);
            }
        }
    }

    #[test]
    fn broken_identities_abort() {
        let mut s = circle(2);
        s.faces[2][0].swap(1, 2);
        assert!(s.normalized_chains().is_err());
    }
}
