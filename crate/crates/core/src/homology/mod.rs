//! Exact homology of chain complexes over ℤ and ℚ.
//!
//! Integer homology comes from invariant factors: [`smith_normal_form`]
//! gives a full decomposition `U·M·V = D` for dense matrices, while
//! [`invariant_factors`] clears unit pivots sparsely first and finishes the
//! remainder densely. Ranks over ℚ use [`rational_rank`]. No floating point
//! is used anywhere.
//!
//! [`SimplicialSet`] turns face and degeneracy tables into normalized chains.

mod dense;
mod simplicial;
mod sparse;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

pub use dense::{smith_normal_form, IntMatrix, Smith};
pub use simplicial::{NormalizedChains, SimplicialSet};
pub use sparse::{invariant_factors, rational_rank, SparseMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Integers,
    Rationals,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Integers => "ℤ",
            Ring::Rationals => "ℚ",
        })
    }
}

/// Coefficient rings a [`ChainComplex`] can be built over.
pub trait Coefficient: Clone + fmt::Debug + Send + Sync + 'static {
    const RING: Ring;

    /// Rank and the invariant factors greater than one.
    fn rank_and_torsion(m: &SparseMatrix<Self>) -> (usize, Vec<BigInt>);

    fn composite_is_zero(first: &SparseMatrix<Self>, second: &SparseMatrix<Self>) -> bool;
}

impl Coefficient for BigInt {
    const RING: Ring = Ring::Integers;

    fn rank_and_torsion(m: &SparseMatrix<BigInt>) -> (usize, Vec<BigInt>) {
        let factors = invariant_factors(m);
        let rank = factors.len();
        (rank, factors.into_iter().filter(|d| !d.is_one()).collect())
    }

    fn composite_is_zero(first: &SparseMatrix<BigInt>, second: &SparseMatrix<BigInt>) -> bool {
        second.mul(first).is_zero()
    }
}

impl Coefficient for BigRational {
    const RING: Ring = Ring::Rationals;

    fn rank_and_torsion(m: &SparseMatrix<BigRational>) -> (usize, Vec<BigInt>) {
        (rational_rank(m), Vec::new())
    }

    fn composite_is_zero(first: &SparseMatrix<BigRational>, second: &SparseMatrix<BigRational>) -> bool {
        second.mul(first).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("∂_{k} has shape {found:?}, expected {expected:?}")]
    Shape {
        k: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("∂_{k} ∘ ∂_{} ≠ 0", k + 1)]
    BoundarySquared { k: usize },
    #[error("degree {degree} is not below the truncation bound {bound}")]
    DegreeOutOfRange { degree: usize, bound: usize },
}

/// `C_0 ← C_1 ← ⋯ ← C_D` with `boundary(k) = ∂_k: C_k → C_{k−1}`.
#[derive(Debug, Clone)]
pub struct ChainComplex<R> {
    dims: Vec<usize>,
    boundaries: Vec<SparseMatrix<R>>,
}

/// One degree of a homology computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub degree: usize,
    pub betti: usize,
    #[serde(serialize_with = "integers")]
    pub torsion: Vec<BigInt>,
}

fn integers<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match x.to_u64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 { "ℤ".to_string() } else { format!("ℤ^{}", self.betti) });
        }
        parts.extend(self.torsion.iter().map(|d| format!("ℤ/{d}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "H_{} = {}", self.degree, parts.join(" ⊕ "))
    }
}

impl<R: Coefficient> ChainComplex<R> {
    /// Checks shapes and `∂_k ∘ ∂_{k+1} = 0`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseMatrix<R>>) -> Result<Self, HomologyError> {
        assert!(!dims.is_empty(), "a chain complex needs C_0");
        assert_eq!(boundaries.len(), dims.len() - 1, "one boundary per positive degree");
        for (i, b) in boundaries.iter().enumerate() {
            let k = i + 1;
            let expected = (dims[k - 1], dims[k]);
            if (b.rows(), b.cols()) != expected {
                return Err(HomologyError::Shape {
                    k,
                    expected,
                    found: (b.rows(), b.cols()),
                });
            }
        }
        for (i, pair) in boundaries.windows(2).enumerate() {
            if !R::composite_is_zero(&pair[1], &pair[0]) {
                return Err(HomologyError::BoundarySquared { k: i + 1 });
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn ring(&self) -> Ring {
        R::RING
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundary(&self, k: usize) -> &SparseMatrix<R> {
        &self.boundaries[k - 1]
    }

    /// `H_k` for `k < D`; degree `D` is never reported.
    pub fn homology(&self, k: usize) -> Result<HomologyResult, HomologyError> {
        if k >= self.top() {
            return Err(HomologyError::DegreeOutOfRange {
                degree: k,
                bound: self.top(),
            });
        }
        let incoming = R::rank_and_torsion(&self.boundaries[k]);
        let outgoing = if k == 0 { 0 } else { R::rank_and_torsion(&self.boundaries[k - 1]).0 };
        Ok(HomologyResult {
            degree: k,
            betti: self.dims[k] - outgoing - incoming.0,
            torsion: incoming.1,
        })
    }

    /// `H_0, …, H_{D−1}`, computing each boundary's invariants once.
    pub fn homology_all(&self) -> Vec<HomologyResult> {
        let ranks: Vec<(usize, Vec<BigInt>)> = self.boundaries.iter().map(R::rank_and_torsion).collect();
        (0..self.top())
            .map(|k| {
                let outgoing = if k == 0 { 0 } else { ranks[k - 1].0 };
                HomologyResult {
                    degree: k,
                    betti: self.dims[k] - outgoing - ranks[k].0,
                    torsion: ranks[k].1.clone(),
                }
            })
            .collect()
    }
}

impl ChainComplex<BigInt> {
    pub fn to_rational(&self) -> ChainComplex<BigRational> {
        ChainComplex {
            dims: self.dims.clone(),
            boundaries: self.boundaries.iter().map(SparseMatrix::to_rational).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero_map(rows: usize, cols: usize) -> SparseMatrix<BigInt> {
        SparseMatrix::zeros(rows, cols)
    }

    fn betti(c: &ChainComplex<BigInt>) -> Vec<usize> {
        c.homology_all().iter().map(|h| h.betti).collect()
    }

    #[test]
    fn single_point() {
        let c = ChainComplex::new(vec![1, 0], vec![zero_map(1, 0)]).unwrap();
        assert_eq!(c.homology(0).unwrap().to_string(), "H_0 = ℤ");
    }

    #[test]
    fn simplicial_circle() {
        let c = ChainComplex::new(vec![1, 1, 0], vec![zero_map(1, 1), zero_map(1, 0)]).unwrap();
        assert_eq!(betti(&c), [1, 1]);
        assert!(c.homology_all().iter().all(|h| h.torsion.is_empty()));
    }

    #[test]
    fn two_disjoint_circles() {
        // two vertices, two loops
        let c = ChainComplex::new(vec![2, 2, 0], vec![zero_map(2, 2), zero_map(2, 0)]).unwrap();
        assert_eq!(betti(&c), [2, 2]);
    }

    #[test]
    fn triangle_boundary() {
        // three vertices, three edges around a triangle
        let d1 = SparseMatrix::from_triplets(
            3,
            3,
            [(0, 0, -1), (1, 0, 1), (1, 1, -1), (2, 1, 1), (2, 2, -1), (0, 2, 1)].map(|(r, c, v)| (r, c, BigInt::from(v))),
        );
        let c = ChainComplex::new(vec![3, 3, 0], vec![d1, zero_map(3, 0)]).unwrap();
        assert_eq!(betti(&c), [1, 1]);
        assert_eq!(betti(&c), c.to_rational().homology_all().iter().map(|h| h.betti).collect::<Vec<_>>());
    }

    #[test]
    fn torsion_in_degree_one() {
        // a 2-cell attached along twice a loop: H_1 = ℤ/2
        let d2 = SparseMatrix::from_triplets(1, 1, [(0, 0, BigInt::from(2))]);
        let c = ChainComplex::new(vec![1, 1, 1, 0], vec![zero_map(1, 1), d2, zero_map(1, 0)]).unwrap();
        let h = c.homology_all();
        assert_eq!(h[1].to_string(), "H_1 = ℤ/2");
        assert_eq!(serde_json::to_string(&h[1]).unwrap(), r#"{"degree":1,"betti":0,"torsion":[2]}"#);
        assert_eq!(c.to_rational().homology(1).unwrap().betti, 0);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d1 = SparseMatrix::from_triplets(1, 1, [(0, 0, BigInt::from(1))]);
        let d2 = SparseMatrix::from_triplets(1, 1, [(0, 0, BigInt::from(1))]);
        assert_eq!(
            ChainComplex::new(vec![1, 1, 1], vec![d1, d2]).unwrap_err(),
            HomologyError::BoundarySquared { k: 1 }
        );
    }

    #[test]
    fn top_degree_is_not_reported() {
        let c = ChainComplex::new(vec![1, 0], vec![zero_map(1, 0)]).unwrap();
        assert!(matches!(c.homology(1), Err(HomologyError::DegreeOutOfRange { degree: 1, bound: 1 })));
    }
}
