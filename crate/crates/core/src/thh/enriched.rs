use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ThhError;
use crate::graphcat::{BypassMap, Graph, Vertex, VertexSet};
use crate::homology::SparseMatrix;

/// A category enriched in finite-dimensional rational vector spaces.
///
/// Composition is diagrammatic: `hom(X, Y) ⊗ hom(Y, Z) → hom(X, Z)`, given by
/// structure constants `c[a][b][c]` on the chosen bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEnrichedCategory {
    objects: VertexSet,
    dims: Vec<Vec<usize>>,
    composition: Vec<Vec<Vec<Vec<Vec<Vec<BigRational>>>>>>,
    units: Vec<Vec<BigRational>>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LinearEnrichedCategory {
    /// Assembles and validates a category. `composition[x][y][z]` has shape
    /// `dim(x,y) × dim(y,z) × dim(x,z)`.
    pub fn new(
        objects: VertexSet,
        dims: Vec<Vec<usize>>,
        composition: Vec<Vec<Vec<Vec<Vec<Vec<BigRational>>>>>>,
        units: Vec<Vec<BigRational>>,
    ) -> Result<Self, ThhError> {
        let c = LinearEnrichedCategory {
            objects,
            dims,
            composition,
            units,
        };
        c.check_shapes()?;
        c.validate()?;
        Ok(c)
    }

    /// A one-object category from an algebra with product `a·b = Σ_c m[a][b][c]·c`.
    pub fn algebra(product: Vec<Vec<Vec<BigRational>>>, unit: Vec<BigRational>) -> Result<Self, ThhError> {
        let d = unit.len();
        Self::new(VertexSet::alphabetic(1), vec![vec![d]], vec![vec![vec![product]]], vec![unit])
    }

    /// `ℚ` itself.
    pub fn unit_algebra() -> Self {
        Self::truncated_polynomial(1)
    }

    /// `ℚ[x]/(xᵏ)` on the basis `1, x, …, x^{k−1}`.
    pub fn truncated_polynomial(k: usize) -> Self {
        let product = (0..k)
            .map(|a| (0..k).map(|b| (0..k).map(|c| q((a + b == c) as i64)).collect()).collect())
            .collect();
        let unit = (0..k).map(|c| q((c == 0) as i64)).collect();
        Self::algebra(product, unit).expect("a commutative algebra")
    }

    /// The dual numbers `ℚ[x]/(x²)`.
    pub fn dual_numbers() -> Self {
        Self::truncated_polynomial(2)
    }

    /// The group algebra `ℚ[Cₙ]` on the group elements.
    pub fn cyclic_group_algebra(n: usize) -> Self {
        let product = (0..n)
            .map(|a| (0..n).map(|b| (0..n).map(|c| q(((a + b) % n == c) as i64)).collect()).collect())
            .collect();
        let unit = (0..n).map(|c| q((c == 0) as i64)).collect();
        Self::algebra(product, unit).expect("a group algebra")
    }

    /// `ℚᵏ` with componentwise product.
    pub fn split_product(k: usize) -> Self {
        let product = (0..k)
            .map(|a| (0..k).map(|b| (0..k).map(|c| q((a == b && b == c) as i64)).collect()).collect())
            .collect();
        Self::algebra(product, vec![q(1); k]).expect("a product of fields")
    }

    /// Matrices `Mₙ(ℚ)` on the units `E_{ij}`, index `i·n + j`. With `upper`
    /// only `i ≤ j` is kept.
    fn matrices(n: usize, upper: bool) -> Self {
        let basis: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !upper || i <= j)
            .collect();
        let product = basis
            .iter()
            .map(|&(i, j)| {
                basis
                    .iter()
                    .map(|&(k, l)| basis.iter().map(|&(r, s)| q((j == k && r == i && s == l) as i64)).collect())
                    .collect()
            })
            .collect();
        let unit = basis.iter().map(|&(i, j)| q((i == j) as i64)).collect();
        Self::algebra(product, unit).expect("a matrix algebra")
    }

    pub fn matrix_algebra(n: usize) -> Self {
        Self::matrices(n, false)
    }

    pub fn upper_triangular(n: usize) -> Self {
        Self::matrices(n, true)
    }

    /// The linearized indiscrete category on `k` objects: every hom is `ℚ`
    /// and every composite of basis elements is the basis element.
    pub fn indiscrete(k: usize) -> Self {
        let composition = vec![vec![vec![vec![vec![vec![q(1)]]]; k]; k]; k];
        Self::new(VertexSet::alphabetic(k), vec![vec![1; k]; k], composition, vec![vec![q(1)]; k])
            .expect("the indiscrete category")
    }

    pub fn objects(&self) -> &VertexSet {
        &self.objects
    }

    pub fn hom_dim(&self, x: Vertex, y: Vertex) -> usize {
        self.dims[x.0][y.0]
    }

    pub fn unit(&self, x: Vertex) -> &[BigRational] {
        &self.units[x.0]
    }

    /// Coordinates of `a ∘ b` for basis elements `a ∈ hom(x,y)`, `b ∈ hom(y,z)`.
    pub fn compose_basis(&self, x: Vertex, y: Vertex, z: Vertex, a: usize, b: usize) -> &[BigRational] {
        &self.composition[x.0][y.0][z.0][a][b]
    }

    /// Bilinear extension of [`compose_basis`](Self::compose_basis).
    pub fn compose(&self, x: Vertex, y: Vertex, z: Vertex, u: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.hom_dim(x, z)];
        for (a, ua) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = ua * vb;
                for (o, c) in out.iter_mut().zip(self.compose_basis(x, y, z, a, b)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    fn check_shapes(&self) -> Result<(), ThhError> {
        let k = self.objects.len();
        let bad = |what: String| Err(ThhError::Enriched(what));
        if self.dims.len() != k || self.dims.iter().any(|r| r.len() != k) {
            return bad(format!("hom dimensions must form a {k}×{k} table"));
        }
        if self.units.len() != k {
            return bad(format!("expected {k} units"));
        }
        for x in 0..k {
            if self.units[x].len() != self.dims[x][x] {
                return bad(format!("unit of {} has the wrong length", self.objects.label(Vertex(x))));
            }
        }
        if self.composition.len() != k {
            return bad("composition table has the wrong size".into());
        }
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let t = self.composition[x].get(y).and_then(|r| r.get(z));
                    let ok = t.is_some_and(|t| {
                        t.len() == self.dims[x][y]
                            && t.iter().all(|r| {
                                r.len() == self.dims[y][z] && r.iter().all(|c| c.len() == self.dims[x][z])
                            })
                    });
                    if !ok {
                        let l = |v: usize| self.objects.label(Vertex(v));
                        return bad(format!("composition {},{},{} has the wrong shape", l(x), l(y), l(z)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Associativity and both unit laws, exactly on basis elements.
    pub fn validate(&self) -> Result<(), ThhError> {
        let k = self.objects.len();
        let label = |v: usize| self.objects.label(Vertex(v)).to_string();
        let basis = |d: usize, i: usize| (0..d).map(|j| q((i == j) as i64)).collect::<Vec<_>>();
        for x in (0..k).map(Vertex) {
            for y in (0..k).map(Vertex) {
                for a in 0..self.hom_dim(x, y) {
                    let e = basis(self.hom_dim(x, y), a);
                    if self.compose(x, x, y, self.unit(x), &e) != e || self.compose(x, y, y, &e, self.unit(y)) != e {
                        return Err(ThhError::Enriched(format!("unit law fails on hom({},{})", label(x.0), label(y.0))));
                    }
                }
            }
        }
        for x in (0..k).map(Vertex) {
            for y in (0..k).map(Vertex) {
                for z in (0..k).map(Vertex) {
                    for w in (0..k).map(Vertex) {
                        for a in 0..self.hom_dim(x, y) {
                            for b in 0..self.hom_dim(y, z) {
                                let ab = self.compose_basis(x, y, z, a, b);
                                for c in 0..self.hom_dim(z, w) {
                                    let left = self.compose(x, z, w, ab, &basis(self.hom_dim(z, w), c));
                                    let bc = self.compose_basis(y, z, w, b, c);
                                    let right = self.compose(x, y, w, &basis(self.hom_dim(x, y), a), bc);
                                    if left != right {
                                        return Err(ThhError::Enriched(format!(
                                            "associativity fails on {},{},{},{}",
                                            label(x.0),
                                            label(y.0),
                                            label(z.0),
                                            label(w.0)
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_objects(&self, g: &Graph) -> Result<(), ThhError> {
        if g.vertices() != &self.objects {
            return Err(ThhError::Enriched("graph vertices differ from the category's objects".into()));
        }
        Ok(())
    }

    /// Matrix of `⊗_{e ∈ path} hom(e) → hom(s, t)`, one sparse column per
    /// basis tensor (first edge most significant). The empty path gives the
    /// unit.
    fn path_matrix(&self, path: &[(Vertex, Vertex)], at: Vertex) -> Vec<Vec<(usize, BigRational)>> {
        let Some(&(first_src, first_tgt)) = path.first() else {
            return vec![sparse(self.unit(at))];
        };
        let d0 = self.hom_dim(first_src, first_tgt);
        let mut cols: Vec<Vec<BigRational>> = (0..d0).map(|a| (0..d0).map(|j| q((a == j) as i64)).collect()).collect();
        let mut end = first_tgt;
        for &(s, t) in &path[1..] {
            debug_assert_eq!(s, end);
            let d = self.hom_dim(s, t);
            cols = cols
                .iter()
                .flat_map(|u| {
                    (0..d).map(move |b| {
                        let mut out = vec![BigRational::zero(); self.hom_dim(first_src, t)];
                        for (a, ua) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            for (o, c) in out.iter_mut().zip(self.compose_basis(first_src, s, t, a, b)) {
                                if !c.is_zero() {
                                    *o += ua * c;
                                }
                            }
                        }
                        out
                    })
                })
                .collect();
            end = t;
        }
        cols.iter().map(|c| sparse(c)).collect()
    }

    /// `C(f)` for a bypass operation given by its source, target and fibers.
    pub(crate) fn eval_fibers(&self, source: &Graph, target: &Graph, fibers: &[Vec<usize>]) -> SparseMatrix<BigRational> {
        let src_dims: Vec<usize> = source.edges().iter().map(|e| self.hom_dim(e.src, e.tgt)).collect();
        let tgt_dims: Vec<usize> = target.edges().iter().map(|e| self.hom_dim(e.src, e.tgt)).collect();
        let cols: usize = src_dims.iter().product();
        let rows: usize = tgt_dims.iter().product();
        let mats: Vec<Vec<Vec<(usize, BigRational)>>> = target
            .edges()
            .iter()
            .zip(fibers)
            .map(|(t, fib)| {
                let path: Vec<(Vertex, Vertex)> = fib.iter().map(|&e| (source.edge(e).src, source.edge(e).tgt)).collect();
                self.path_matrix(&path, t.src)
            })
            .collect();
        let mut triplets = Vec::new();
        let mut digits = vec![0; src_dims.len()];
        for col in 0..cols {
            let mut rest = col;
            for e in (0..src_dims.len()).rev() {
                digits[e] = rest % src_dims[e];
                rest /= src_dims[e];
            }
            let mut acc: Vec<(usize, BigRational)> = vec![(0, BigRational::one())];
            for ((fib, m), &d) in fibers.iter().zip(&mats).zip(&tgt_dims) {
                let idx = fib.iter().fold(0, |i, &e| i * src_dims[e] + digits[e]);
                acc = acc
                    .iter()
                    .flat_map(|(r, v)| m[idx].iter().map(move |(s, w)| (r * d + s, v * w)))
                    .collect();
                if acc.is_empty() {
                    break;
                }
            }
            triplets.extend(acc.into_iter().map(|(r, v)| (r, col, v)));
        }
        SparseMatrix::from_triplets(rows, cols, triplets)
    }

    /// Parses the JSON form, then validates.
    pub fn from_json(text: &str) -> Result<Self, ThhError> {
        let j: CategoryJson = serde_json::from_str(text).map_err(|e| ThhError::Enriched(e.to_string()))?;
        j.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CategoryJson::from(self)).expect("serializable")
    }
}

fn sparse(v: &[BigRational]) -> Vec<(usize, BigRational)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// `dim C(Γ) = ∏_e dim hom(s(e), t(e))`; 1 for `Γ = ∅`.
pub fn enriched_eval(c: &LinearEnrichedCategory, g: &Graph) -> Result<usize, ThhError> {
    c.check_objects(g)?;
    Ok(g.edges().iter().map(|e| c.hom_dim(e.src, e.tgt)).product())
}

/// `C(f): C(Γ) → C(Γ′)` as a `dim C(Γ′) × dim C(Γ)` matrix. Basis tensors
/// are ordered with edge 0 most significant.
pub fn enriched_eval_map(c: &LinearEnrichedCategory, f: &BypassMap) -> Result<SparseMatrix<BigRational>, ThhError> {
    c.check_objects(f.source())?;
    c.check_objects(f.target())?;
    Ok(c.eval_fibers(f.source(), f.target(), f.fibers()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RationalJson {
    Int(i64),
    Text(String),
}

impl TryFrom<&RationalJson> for BigRational {
    type Error = ThhError;

    fn try_from(r: &RationalJson) -> Result<Self, ThhError> {
        match r {
            RationalJson::Int(n) => Ok(q(*n)),
            RationalJson::Text(s) => {
                let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| ThhError::Enriched(format!("bad rational {s:?}")));
                match s.split_once('/') {
                    Some((p, d)) => {
                        let d = parse(d)?;
                        if d.is_zero() {
                            return Err(ThhError::Enriched(format!("zero denominator in {s:?}")));
                        }
                        Ok(BigRational::new(parse(p)?, d))
                    }
                    None => Ok(BigRational::from_integer(parse(s)?)),
                }
            }
        }
    }
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        match (r.is_integer(), i64::try_from(r.numer())) {
            (true, Ok(n)) => RationalJson::Int(n),
            (true, Err(_)) => RationalJson::Text(r.numer().to_string()),
            _ => RationalJson::Text(format!("{}/{}", r.numer(), r.denom())),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryJson {
    objects: Vec<String>,
    hom_dims: BTreeMap<String, usize>,
    #[serde(default)]
    composition: BTreeMap<String, Vec<Vec<Vec<RationalJson>>>>,
    units: BTreeMap<String, Vec<RationalJson>>,
}

impl TryFrom<CategoryJson> for LinearEnrichedCategory {
    type Error = ThhError;

    fn try_from(j: CategoryJson) -> Result<Self, ThhError> {
        let objects = VertexSet::new(j.objects)?;
        let k = objects.len();
        let key = |parts: &[usize]| parts.iter().map(|&v| objects.label(Vertex(v))).collect::<Vec<_>>().join(",");
        let known = |what: &str, name: &str, arity: usize| {
            let parts: Vec<&str> = name.split(',').collect();
            if parts.len() != arity || parts.iter().any(|p| objects.vertex(p).is_err()) {
                return Err(ThhError::Enriched(format!("unknown {what} key {name:?}")));
            }
            Ok(())
        };
        for name in j.hom_dims.keys() {
            known("hom_dims", name, 2)?;
        }
        for name in j.composition.keys() {
            known("composition", name, 3)?;
        }
        for name in j.units.keys() {
            known("units", name, 1)?;
        }
        let dims: Vec<Vec<usize>> = (0..k)
            .map(|x| (0..k).map(|y| j.hom_dims.get(&key(&[x, y])).copied().unwrap_or(0)).collect())
            .collect();
        let mut composition = vec![vec![vec![Vec::new(); k]; k]; k];
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let (dxy, dyz, dxz) = (dims[x][y], dims[y][z], dims[x][z]);
                    composition[x][y][z] = match j.composition.get(&key(&[x, y, z])) {
                        Some(t) => t
                            .iter()
                            .map(|r| r.iter().map(|c| c.iter().map(BigRational::try_from).collect()).collect())
                            .collect::<Result<_, _>>()?,
                        None if dxy * dyz * dxz == 0 => vec![vec![vec![BigRational::zero(); dxz]; dyz]; dxy],
                        None => return Err(ThhError::Enriched(format!("missing composition {}", key(&[x, y, z])))),
                    };
                }
            }
        }
        let units = (0..k)
            .map(|x| match j.units.get(&key(&[x])) {
                Some(u) => u.iter().map(BigRational::try_from).collect(),
                None if dims[x][x] == 0 => Ok(Vec::new()),
                None => Err(ThhError::Enriched(format!("missing unit {}", key(&[x])))),
            })
            .collect::<Result<_, _>>()?;
        LinearEnrichedCategory::new(objects, dims, composition, units)
    }
}

impl From<&LinearEnrichedCategory> for CategoryJson {
    fn from(c: &LinearEnrichedCategory) -> Self {
        let k = c.objects.len();
        let label = |v: usize| c.objects.label(Vertex(v));
        let mut hom_dims = BTreeMap::new();
        let mut composition = BTreeMap::new();
        let mut units = BTreeMap::new();
        for x in 0..k {
            units.insert(label(x).to_string(), c.units[x].iter().map(RationalJson::from).collect());
            for y in 0..k {
                hom_dims.insert(format!("{},{}", label(x), label(y)), c.dims[x][y]);
                for z in 0..k {
                    if c.dims[x][y] * c.dims[y][z] * c.dims[x][z] > 0 {
                        composition.insert(
                            format!("{},{},{}", label(x), label(y), label(z)),
                            c.composition[x][y][z]
                                .iter()
                                .map(|r| r.iter().map(|v| v.iter().map(RationalJson::from).collect()).collect())
                                .collect(),
                        );
                    }
                }
            }
        }
        CategoryJson {
            objects: c.objects.labels().to_vec(),
            hom_dims,
            composition,
            units,
        }
    }
}
