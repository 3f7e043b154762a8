use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::{smith_normal_form, IntMatrix};

/// A sparse matrix stored by rows; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<BTreeMap<usize, R>>,
}

impl<R> SparseMatrix<R>
where
    R: Clone + Zero + PartialEq + for<'a> std::ops::AddAssign<&'a R>,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows],
        }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add(r, c, &v);
        }
        m
    }

    pub fn add(&mut self, r: usize, c: usize, v: &R) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        let slot = self.entries[r].entry(c).or_insert_with(R::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries[r].remove(&c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        self.entries[r].get(&c).cloned().unwrap_or_else(R::zero)
    }

}

impl<R> SparseMatrix<R> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BTreeMap::is_empty)
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &R)> {
        self.entries[r].iter().map(|(&c, v)| (c, v))
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> SparseMatrix<S> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|(&c, v)| (c, f(v))).collect())
                .collect(),
        }
    }
}

impl<R> SparseMatrix<R>
where
    R: Clone + Zero + PartialEq + for<'a> std::ops::AddAssign<&'a R>,
    for<'a> &'a R: std::ops::Mul<&'a R, Output = R>,
{
    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix<R>) -> SparseMatrix<R> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = SparseMatrix::zeros(self.rows, rhs.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (&k, a) in row {
                for (&c, b) in &rhs.entries[k] {
                    out.add(r, c, &(a * b));
                }
            }
        }
        out
    }
}

impl SparseMatrix<BigInt> {
    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (&c, v) in row {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn to_rational(&self) -> SparseMatrix<BigRational> {
        self.map(|v| BigRational::from_integer(v.clone()))
    }
}

/// Gaussian elimination on a working copy, pivoting only on entries
/// accepted by `usable`; among those, a pivot minimizing the Markowitz cost
/// `(row count − 1)·(column count − 1)` is taken. Returns the number of
/// pivots and the rows left over.
fn eliminate<R>(
    m: &SparseMatrix<R>,
    usable: impl Fn(&R) -> bool,
    quotient: impl Fn(&R, &R) -> R,
) -> (usize, Vec<BTreeMap<usize, R>>)
where
    R: Clone + Zero + PartialEq + for<'a> std::ops::SubAssign<&'a R>,
    for<'a> &'a R: std::ops::Mul<&'a R, Output = R>,
{
    let mut rows = m.entries.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut pivots = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for (r, row) in rows.iter().enumerate() {
            for (&c, v) in row {
                if !usable(v) {
                    continue;
                }
                let cost = (row.len() - 1) * (col_rows[c].len() - 1);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, r, c));
                    if cost == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        let pivot = pivot_row[&pc].clone();
        for &c in pivot_row.keys() {
            col_rows[c].remove(&pr);
        }
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for r in targets {
            let factor = quotient(&rows[r][&pc], &pivot);
            for (&c, v) in &pivot_row {
                let slot = rows[r].entry(c).or_insert_with(R::zero);
                *slot -= &(&factor * v);
                if slot.is_zero() {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    col_rows[c].insert(r);
                }
            }
            debug_assert!(!rows[r].contains_key(&pc));
        }
        pivots += 1;
    }
    rows.retain(|row| !row.is_empty());
    (pivots, rows)
}

/// Rank over ℚ.
pub fn rational_rank(m: &SparseMatrix<BigRational>) -> usize {
    let (rank, rest) = eliminate(m, |v| !v.is_zero(), |a, p| a / p);
    debug_assert!(rest.is_empty());
    rank
}

/// The nonzero invariant factors of an integer matrix, as a divisibility
/// chain. Unit pivots are eliminated sparsely; what remains goes through a
/// dense Smith normal form.
pub fn invariant_factors(m: &SparseMatrix<BigInt>) -> Vec<BigInt> {
    let (units, rest) = eliminate(m, |v| v.abs().is_one(), |a, p| a * p);
    let mut out = vec![BigInt::one(); units];
    if rest.is_empty() {
        return out;
    }
    let cols: Vec<usize> = rest
        .iter()
        .flat_map(|row| row.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let position: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = IntMatrix::zeros(rest.len(), cols.len());
    for (r, row) in rest.iter().enumerate() {
        for (c, v) in row {
            dense[(r, position[c])] = v.clone();
        }
    }
    out.extend(smith_normal_form(&dense).invariant_factors());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(rows: &[Vec<i64>]) -> SparseMatrix<BigInt> {
        let c = rows.first().map_or(0, Vec::len);
        SparseMatrix::from_triplets(
            rows.len(),
            c,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, BigInt::from(v)))),
        )
    }

    #[test]
    fn triplets_sum_and_cancel() {
        let m = SparseMatrix::from_triplets(2, 2, [(0, 0, BigInt::from(2)), (0, 0, BigInt::from(-2)), (1, 1, BigInt::from(3))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), BigInt::from(3));
    }

    #[test]
    fn torsion_survives_sparse_pass() {
        // determinant −2, so one factor must come out of the dense residual
        let m = int(&[vec![1, 1, 0], vec![2, 0, 0], vec![0, 1, 1]]);
        let f = invariant_factors(&m);
        let s = smith_normal_form(&m.to_dense());
        assert_eq!(f, s.invariant_factors());
    }

    #[test]
    fn product() {
        let a = int(&[vec![1, 2], vec![0, 1]]);
        let b = int(&[vec![1, -2], vec![0, 1]]);
        assert_eq!(a.mul(&b), int(&[vec![1, 0], vec![0, 1]]));
    }

    proptest! {
        #[test]
        fn sparse_matches_dense(
            r in 1usize..7,
            c in 1usize..7,
            seed in prop::collection::vec(prop_oneof![4 => Just(0i64), 2 => Just(1i64), 2 => Just(-1i64), 1 => -4i64..=4], 36),
        ) {
            let rows: Vec<Vec<i64>> = (0..r).map(|i| (0..c).map(|j| seed[i * 6 + j]).collect()).collect();
            let m = int(&rows);
            let dense = smith_normal_form(&m.to_dense());
            prop_assert_eq!(invariant_factors(&m), dense.invariant_factors());
            prop_assert_eq!(rational_rank(&m.to_rational()), dense.rank());
        }
    }
}
