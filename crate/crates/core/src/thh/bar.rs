use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{LinearEnrichedCategory, ThhError};
use crate::cyclic::LambdaArrow;
use crate::graphcat::{Graph, Vertex};
use crate::homology::{rational_rank, ChainComplex, HomologyError, HomologyResult, SparseMatrix};

type Matrix = SparseMatrix<BigRational>;

/// The cyclic bar construction of a linear enriched category, levels
/// `0..=N`: `C_n = ⊕_X C(X₀→X₁→⋯→Xₙ→X₀)` over all tuples, with the cyclic
/// operators as exact matrices.
#[derive(Debug, Clone)]
pub struct CyclicBar {
    dims: Vec<usize>,
    faces: Vec<Vec<Matrix>>,
    degeneracies: Vec<Vec<Matrix>>,
    rotations: Vec<Matrix>,
    complex: ChainComplex<BigRational>,
    normalized_dims: Vec<usize>,
    normalized_ranks: Vec<usize>,
}

fn tuples(k: usize, len: usize) -> Vec<Vec<Vertex>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..k).map(move |v| {
                    let mut u = t.clone();
                    u.push(Vertex(v));
                    u
                })
            })
            .collect()
    })
}

fn hconcat(rows: usize, blocks: &[&Matrix]) -> Matrix {
    let cols = blocks.iter().map(|b| b.cols()).sum();
    let mut triplets = Vec::new();
    let mut shift = 0;
    for b in blocks {
        for r in 0..b.rows() {
            triplets.extend(b.row(r).map(|(c, v)| (r, shift + c, v.clone())));
        }
        shift += b.cols();
    }
    Matrix::from_triplets(rows, cols, triplets)
}

fn identity(n: usize) -> Matrix {
    Matrix::from_triplets(n, n, (0..n).map(|i| (i, i, BigRational::one())))
}

struct Levels<'a> {
    category: &'a LinearEnrichedCategory,
    tuples: Vec<Vec<Vec<Vertex>>>,
    cycles: Vec<Vec<Graph>>,
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
}

impl Levels<'_> {
    fn index(&self, x: &[Vertex]) -> usize {
        let k = self.category.objects().len();
        x.iter().fold(0, |i, v| i * k + v.0)
    }

    /// The matrix of `f^*: C_n → C_m` for `f: T_m → T_n`.
    fn operator(&self, f: &LambdaArrow) -> Matrix {
        let (m, n) = (f.source(), f.target());
        let n1 = n + 1;
        let starts = f.objects();
        let fibers: Vec<Vec<usize>> = starts
            .iter()
            .zip(f.legs())
            .map(|(&o, &l)| (0..l).map(|k| (o + k) % n1).collect())
            .collect();
        let blocks: Vec<Vec<(usize, usize, BigRational)>> = self.tuples[n]
            .par_iter()
            .enumerate()
            .map(|(xi, x)| {
                let y: Vec<Vertex> = starts.iter().map(|&o| x[o]).collect();
                let yi = self.index(&y);
                let block = self.category.eval_fibers(&self.cycles[n][xi], &self.cycles[m][yi], &fibers);
                let (ro, co) = (self.offsets[m][yi], self.offsets[n][xi]);
                (0..block.rows())
                    .flat_map(|r| block.row(r).map(move |(c, v)| (ro + r, co + c, v.clone())).collect::<Vec<_>>())
                    .collect()
            })
            .collect();
        Matrix::from_triplets(self.dims[m], self.dims[n], blocks.into_iter().flatten())
    }
}

/// Builds the cyclic bar construction through level `top ≥ 2`, its
/// unnormalized Hochschild complex (checking `∂∂ = 0`) and the ranks of the
/// normalized complex, and checks that both give the same homology.
pub fn cyclic_bar(c: &LinearEnrichedCategory, top: usize) -> Result<CyclicBar, ThhError> {
    if top < 2 {
        return Err(ThhError::Cyclic(crate::cyclic::CyclicError::DimensionTooSmall(2)));
    }
    c.validate()?;
    let vs = c.objects();
    let k = vs.len();
    let tuples: Vec<Vec<Vec<Vertex>>> = (0..=top).map(|n| tuples(k, n + 1)).collect();
    let cycles: Vec<Vec<Graph>> = tuples
        .iter()
        .map(|level| level.iter().map(|x| Graph::cycle_on(vs.clone(), x).expect("objects")).collect())
        .collect();
    let mut offsets = Vec::new();
    let mut dims = Vec::new();
    for level in &cycles {
        let mut acc = 0;
        let offs = level
            .iter()
            .map(|g| {
                let o = acc;
                acc += super::enriched_eval(c, g).expect("objects");
                o
            })
            .collect();
        offsets.push(offs);
        dims.push(acc);
    }
    let levels = Levels {
        category: c,
        tuples,
        cycles,
        offsets,
        dims: dims.clone(),
    };
    let faces: Vec<Vec<Matrix>> = (0..=top)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| levels.operator(&LambdaArrow::coface(n, i))).collect() })
        .collect();
    let degeneracies: Vec<Vec<Matrix>> = (0..=top)
        .map(|n| if n == top { Vec::new() } else { (0..=n).map(|j| levels.operator(&LambdaArrow::codegeneracy(n, j))).collect() })
        .collect();
    let rotations: Vec<Matrix> = (0..=top).map(|n| levels.operator(&LambdaArrow::rotation(n))).collect();

    let boundaries: Vec<Matrix> = (1..=top)
        .map(|n| {
            let mut b = Matrix::zeros(dims[n - 1], dims[n]);
            for (i, d) in faces[n].iter().enumerate() {
                let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                for r in 0..d.rows() {
                    for (col, v) in d.row(r) {
                        b.add(r, col, &(&sign * v));
                    }
                }
            }
            b
        })
        .collect();
    // degenerate subspaces D_n = Σ_j im(s_j: C_{n−1} → C_n)
    let degenerate: Vec<Matrix> = (0..=top)
        .map(|n| match n {
            0 => Matrix::zeros(dims[0], 0),
            _ => hconcat(dims[n], &degeneracies[n - 1].iter().collect::<Vec<_>>()),
        })
        .collect();
    let degenerate_ranks: Vec<usize> = degenerate.par_iter().map(rational_rank).collect();
    let normalized_dims: Vec<usize> = (0..=top).map(|n| dims[n] - degenerate_ranks[n]).collect();
    let mut normalized_ranks = vec![0];
    normalized_ranks.extend((1..=top).into_par_iter().map(|n| {
        rational_rank(&hconcat(dims[n - 1], &[&boundaries[n - 1], &degenerate[n - 1]])) - degenerate_ranks[n - 1]
    }).collect::<Vec<_>>());
    let complex = ChainComplex::new(dims.clone(), boundaries)?;
    let bar = CyclicBar {
        dims,
        faces,
        degeneracies,
        rotations,
        complex,
        normalized_dims,
        normalized_ranks,
    };
    let unnormalized: Vec<usize> = bar.complex.homology_all().iter().map(|h| h.betti).collect();
    if unnormalized != bar.betti() {
        return Err(ThhError::Mismatch(format!(
            "normalized {:?} against unnormalized {unnormalized:?}",
            bar.betti()
        )));
    }
    Ok(bar)
}

impl CyclicBar {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// `dim C_n` before normalization.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim C_n / D_n`.
    pub fn normalized_dims(&self) -> &[usize] {
        &self.normalized_dims
    }

    /// `d_i: C_n → C_{n−1}`.
    pub fn face(&self, n: usize, i: usize) -> &SparseMatrix<BigRational> {
        &self.faces[n][i]
    }

    /// `s_j: C_n → C_{n+1}`.
    pub fn degeneracy(&self, n: usize, j: usize) -> &SparseMatrix<BigRational> {
        &self.degeneracies[n][j]
    }

    pub fn rotation(&self, n: usize) -> &SparseMatrix<BigRational> {
        &self.rotations[n]
    }

    /// The unnormalized Hochschild complex.
    pub fn complex(&self) -> &ChainComplex<BigRational> {
        &self.complex
    }

    /// `dim HH_k` for `k < N`, from the normalized complex.
    pub fn betti(&self) -> Vec<usize> {
        (0..self.top())
            .map(|k| self.normalized_dims[k] - self.normalized_ranks[k] - self.normalized_ranks[k + 1])
            .collect()
    }

    pub fn homology(&self) -> Vec<HomologyResult> {
        self.betti()
            .into_iter()
            .enumerate()
            .map(|(degree, betti)| HomologyResult {
                degree,
                betti,
                torsion: Vec::new(),
            })
            .collect()
    }

    /// The simplicial and cyclic identities as matrix equations.
    pub fn check_identities(&self) -> Result<(), ThhError> {
        let top = self.top();
        let fail = |what: String| Err(ThhError::Identity(what));
        let (d, s, t) = (&self.faces, &self.degeneracies, &self.rotations);
        for n in 0..=top {
            if n >= 2 {
                for j in 1..=n {
                    for i in 0..j {
                        if d[n - 1][i].mul(&d[n][j]) != d[n - 1][j - 1].mul(&d[n][i]) {
                            return fail(format!("d_{i} d_{j} on C_{n}"));
                        }
                    }
                }
            }
            if n + 1 <= top {
                for j in 0..=n {
                    for i in (0..=j).filter(|_| n + 2 <= top) {
                        if s[n + 1][i].mul(&s[n][j]) != s[n + 1][j + 1].mul(&s[n][i]) {
                            return fail(format!("s_{i} s_{j} on C_{n}"));
                        }
                    }
                    for i in 0..=n + 1 {
                        let left = d[n + 1][i].mul(&s[n][j]);
                        let right = if i < j {
                            s[n - 1][j - 1].mul(&d[n][i])
                        } else if i == j || i == j + 1 {
                            identity(self.dims[n])
                        } else {
                            s[n - 1][j].mul(&d[n][i - 1])
                        };
                        if left != right {
                            return fail(format!("d_{i} s_{j} on C_{n}"));
                        }
                    }
                }
                if s[n][0].mul(&t[n]) != t[n + 1].mul(&t[n + 1]).mul(&s[n][n]) {
                    return fail(format!("s_0 t on C_{n}"));
                }
                for i in 1..=n {
                    if s[n][i].mul(&t[n]) != t[n + 1].mul(&s[n][i - 1]) {
                        return fail(format!("s_{i} t on C_{n}"));
                    }
                }
            }
            let mut power = identity(self.dims[n]);
            for _ in 0..=n {
                power = t[n].mul(&power);
            }
            if power != identity(self.dims[n]) {
                return fail(format!("t_{n}^{} ≠ id", n + 1));
            }
            if n >= 1 {
                if d[n][0].mul(&t[n]) != d[n][n] {
                    return fail(format!("d_0 t_{n} ≠ d_{n}"));
                }
                for i in 1..=n {
                    if d[n][i].mul(&t[n]) != t[n - 1].mul(&d[n][i - 1]) {
                        return fail(format!("d_{i} t_{n}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `dim HH_n(C)` over ℚ, with the bar construction truncated at `top`.
pub fn hochschild_homology(c: &LinearEnrichedCategory, n: usize, top: usize) -> Result<usize, ThhError> {
    if n >= top {
        return Err(HomologyError::DegreeOutOfRange { degree: n, bound: top }.into());
    }
    Ok(cyclic_bar(c, top)?.betti()[n])
}

/// `dim ⊕_X hom(X,X) / span{ab − ba}` for `a ∈ hom(X,Y)`, `b ∈ hom(Y,X)`.
pub fn commutator_quotient_dim(c: &LinearEnrichedCategory) -> usize {
    let k = c.objects().len();
    let ends: Vec<Vertex> = (0..k).map(Vertex).collect();
    let mut offset = vec![0; k + 1];
    for x in 0..k {
        offset[x + 1] = offset[x] + c.hom_dim(ends[x], ends[x]);
    }
    let mut rows = Vec::new();
    for &x in &ends {
        for &y in &ends {
            for a in 0..c.hom_dim(x, y) {
                for b in 0..c.hom_dim(y, x) {
                    let mut row = vec![BigRational::zero(); offset[k]];
                    for (i, v) in c.compose_basis(x, y, x, a, b).iter().enumerate() {
                        row[offset[x.0] + i] += v;
                    }
                    for (i, v) in c.compose_basis(y, x, y, b, a).iter().enumerate() {
                        row[offset[y.0] + i] -= v;
                    }
                    rows.push(row);
                }
            }
        }
    }
    let m = Matrix::from_triplets(
        rows.len(),
        offset[k],
        rows.into_iter()
            .enumerate()
            .flat_map(|(r, row)| row.into_iter().enumerate().map(move |(col, v)| (r, col, v))),
    );
    offset[k] - rational_rank(&m)
}

/// The 2-periodic resolution complex of `ℚ[x]/(x²)` in degrees 0..3, on the
/// basis `1, x`: the differentials alternate between `0` and multiplication
/// by `2x`.
pub fn dual_numbers_periodic() -> ChainComplex<BigRational> {
    let two_x = Matrix::from_triplets(2, 2, [(1, 0, BigRational::from_integer(BigInt::from(2)))]);
    ChainComplex::new(vec![2; 4], vec![Matrix::zeros(2, 2), two_x, Matrix::zeros(2, 2)]).expect("d² = 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hh(c: &LinearEnrichedCategory) -> Vec<usize> {
        cyclic_bar(c, 3).unwrap().betti()
    }

    #[test]
    fn unit_algebra() {
        let bar = cyclic_bar(&LinearEnrichedCategory::unit_algebra(), 3).unwrap();
        assert_eq!(bar.dims(), [1, 1, 1, 1]);
        assert_eq!(bar.normalized_dims(), [1, 0, 0, 0]);
        assert_eq!(bar.betti(), [1, 0, 0]);
    }

    #[test]
    fn dual_numbers_match_periodic_complex() {
        let periodic: Vec<usize> = dual_numbers_periodic().homology_all().iter().map(|h| h.betti).collect();
        assert_eq!(periodic, [2, 1, 1]);
        assert_eq!(hh(&LinearEnrichedCategory::dual_numbers()), periodic);
    }

    #[test]
    fn group_algebra_is_componentwise() {
        let q = hh(&LinearEnrichedCategory::unit_algebra());
        let doubled: Vec<usize> = q.iter().map(|b| 2 * b).collect();
        assert_eq!(hh(&LinearEnrichedCategory::cyclic_group_algebra(2)), doubled);
        assert_eq!(hh(&LinearEnrichedCategory::split_product(2)), doubled);
        assert_eq!(hh(&LinearEnrichedCategory::cyclic_group_algebra(3))[0], 3);
    }

    #[test]
    fn morita_invariance() {
        let q = hh(&LinearEnrichedCategory::unit_algebra());
        for k in 1..=3 {
            assert_eq!(hh(&LinearEnrichedCategory::indiscrete(k)), q, "k = {k}");
        }
        assert_eq!(hh(&LinearEnrichedCategory::matrix_algebra(2)), q);
    }

    #[test]
    fn degree_zero_is_commutator_quotient() {
        for (c, expect) in [
            (LinearEnrichedCategory::unit_algebra(), 1),
            (LinearEnrichedCategory::dual_numbers(), 2),
            (LinearEnrichedCategory::truncated_polynomial(3), 3),
            (LinearEnrichedCategory::cyclic_group_algebra(3), 3),
            (LinearEnrichedCategory::matrix_algebra(2), 1),
            (LinearEnrichedCategory::upper_triangular(2), 2),
            (LinearEnrichedCategory::indiscrete(3), 1),
        ] {
            assert_eq!(commutator_quotient_dim(&c), expect);
            assert_eq!(hochschild_homology(&c, 0, 2).unwrap(), expect);
        }
    }

    #[test]
    fn truncated_polynomials() {
        // ℚ[x]/(x³): HH_n has dimension 2 for every n ≥ 1
        assert_eq!(hh(&LinearEnrichedCategory::truncated_polynomial(3)), [3, 2, 2]);
        assert_eq!(hh(&LinearEnrichedCategory::upper_triangular(2)), [2, 0, 0]);
    }

    #[test]
    fn operators_satisfy_identities() {
        for c in [
            LinearEnrichedCategory::dual_numbers(),
            LinearEnrichedCategory::indiscrete(2),
            LinearEnrichedCategory::upper_triangular(2),
        ] {
            cyclic_bar(&c, 3).unwrap().check_identities().unwrap();
        }
    }

    #[test]
    fn out_of_range() {
        let c = LinearEnrichedCategory::unit_algebra();
        assert!(hochschild_homology(&c, 3, 3).is_err());
        assert!(cyclic_bar(&c, 1).is_err());
    }
}
