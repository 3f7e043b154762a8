use std::fmt;

use serde::{Deserialize, Serialize};

use super::CyclicError;

/// A degree-1 functor `T_m → T_n` between cyclically ordered sets.
///
/// `base` is the image of `v₀`; `legs[i]` is the length of the path in `T_n`
/// that the elementary morphism `eᵢ: vᵢ → vᵢ₊₁` of `T_m` is sent to. The legs
/// sum to `n + 1` (one trip around `T_n`).
///
/// Equivalently, an arrow is a nondecreasing `F: ℤ → ℤ` with
/// `F(i + m + 1) = F(i) + n + 1`, namely `F(i) = base + ℓ₀ + ⋯ + ℓᵢ₋₁` for
/// `0 ≤ i ≤ m + 1`; see [`LambdaArrow::lift`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaArrow {
    m: usize,
    n: usize,
    base: usize,
    legs: Vec<usize>,
}

impl fmt::Display for LambdaArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let legs: Vec<String> = self.legs.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "{}->{}: base={}; legs=[{}]",
            self.m,
            self.n,
            self.base,
            legs.join(",")
        )
    }
}

impl LambdaArrow {
    pub fn new(m: usize, n: usize, base: usize, legs: Vec<usize>) -> Result<Self, CyclicError> {
        if legs.len() != m + 1 {
            return Err(CyclicError::InvalidArrow(format!(
                "{} legs given for source T_{m}",
                legs.len()
            )));
        }
        if legs.iter().sum::<usize>() != n + 1 {
            return Err(CyclicError::InvalidArrow(format!(
                "legs {legs:?} do not have degree 1 into T_{n}"
            )));
        }
        if base > n {
            return Err(CyclicError::InvalidArrow(format!("base {base} outside T_{n}")));
        }
        Ok(LambdaArrow { m, n, base, legs })
    }

    pub fn identity(n: usize) -> Self {
        LambdaArrow {
            m: n,
            n,
            base: 0,
            legs: vec![1; n + 1],
        }
    }

    /// The automorphism `vᵢ ↦ vᵢ₊₁` of `T_n`.
    pub fn shift(n: usize) -> Self {
        LambdaArrow {
            m: n,
            n,
            base: 1 % (n + 1),
            legs: vec![1; n + 1],
        }
    }

    /// The automorphism `vᵢ ↦ vᵢ₋₁` of `T_n`. Its action on a cyclic set is
    /// the cyclic operator `tₙ`, which on a cyclic nerve sends
    /// `(x₀, …, xₙ)` to `(xₙ, x₀, …, xₙ₋₁)`.
    pub fn rotation(n: usize) -> Self {
        LambdaArrow {
            m: n,
            n,
            base: n,
            legs: vec![1; n + 1],
        }
    }

    pub fn source(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// `o(vᵢ)`, the image of the object `vᵢ`.
    pub fn object(&self, i: usize) -> usize {
        (self.base + self.legs[..i].iter().sum::<usize>()) % (self.n + 1)
    }

    /// All object images `o(v₀), …, o(v_m)`.
    pub fn objects(&self) -> Vec<usize> {
        let mut at = self.base;
        self.legs
            .iter()
            .map(|l| {
                let here = at % (self.n + 1);
                at += l;
                here
            })
            .collect()
    }

    /// The monotone lift `F: ℤ → ℤ`.
    pub fn lift(&self, i: i64) -> i64 {
        let period = self.m as i64 + 1;
        let q = i.div_euclid(period);
        let r = i.rem_euclid(period) as usize;
        self.base as i64 + self.legs[..r].iter().sum::<usize>() as i64 + q * (self.n as i64 + 1)
    }

    /// Reads an arrow `T_m → T_n` off a nondecreasing `F: ℤ → ℤ` with
    /// `F(i + m + 1) = F(i) + n + 1`, sampled on `0..=m+1`.
    pub fn from_lift(m: usize, n: usize, lift: impl Fn(i64) -> i64) -> Result<Self, CyclicError> {
        let values: Vec<i64> = (0..=m as i64 + 1).map(&lift).collect();
        if values.windows(2).any(|w| w[0] > w[1]) || values[m + 1] - values[0] != n as i64 + 1 {
            return Err(CyclicError::InvalidArrow(format!(
                "{values:?} is not a degree-1 lift into T_{n}"
            )));
        }
        Ok(Self::from_lift_unchecked(m, n, lift))
    }

    fn from_lift_unchecked(m: usize, n: usize, lift: impl Fn(i64) -> i64) -> Self {
        let base = lift(0).rem_euclid(n as i64 + 1) as usize;
        let legs = (0..=m as i64)
            .map(|i| (lift(i + 1) - lift(i)) as usize)
            .collect();
        LambdaArrow { m, n, base, legs }
    }

    /// `min { i : F(i) ≥ j }`.
    fn least_preimage_at_or_above(&self, j: i64) -> i64 {
        let (period_src, period_tgt) = (self.m as i64 + 1, self.n as i64 + 1);
        let q = (j - self.base as i64).div_euclid(period_tgt) - 1;
        let mut i = q * period_src;
        debug_assert!(self.lift(i) < j);
        while self.lift(i) < j {
            i += 1;
        }
        i
    }

    /// `self ∘ first`: apply `first: T_k → T_m`, then `self: T_m → T_n`.
    pub fn compose(&self, first: &LambdaArrow) -> Result<LambdaArrow, CyclicError> {
        if first.n != self.m {
            return Err(CyclicError::IndexMismatch {
                expected: self.m,
                found: first.n,
            });
        }
        Ok(Self::from_lift_unchecked(first.m, self.n, |i| self.lift(first.lift(i))))
    }

    /// Every arrow `T_m → T_n`, ordered by base, then legs lexicographically.
    pub fn hom(m: usize, n: usize) -> Vec<LambdaArrow> {
        let mut compositions = Vec::new();
        let mut legs = Vec::with_capacity(m + 1);
        fn fill(parts: usize, total: usize, legs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if parts == 1 {
                legs.push(total);
                out.push(legs.clone());
                legs.pop();
                return;
            }
            for first in 0..=total {
                legs.push(first);
                fill(parts - 1, total - first, legs, out);
                legs.pop();
            }
        }
        fill(m + 1, n + 1, &mut legs, &mut compositions);
        (0..=n)
            .flat_map(|base| {
                compositions.iter().map(move |legs| LambdaArrow {
                    m,
                    n,
                    base,
                    legs: legs.clone(),
                })
            })
            .collect()
    }

    /// The inclusion `Δ → Λ` applied to a weakly monotone `α: [m] → [n]`,
    /// given as its list of values.
    pub fn from_monotone(alpha: &[usize], n: usize) -> Result<Self, CyclicError> {
        let Some((&first, &last)) = alpha.first().zip(alpha.last()) else {
            return Err(CyclicError::NotMonotone(alpha.to_vec()));
        };
        if alpha.windows(2).any(|w| w[0] > w[1]) || last > n {
            return Err(CyclicError::NotMonotone(alpha.to_vec()));
        }
        let mut legs: Vec<usize> = alpha.windows(2).map(|w| w[1] - w[0]).collect();
        legs.push(n + 1 - last + first);
        Ok(LambdaArrow {
            m: alpha.len() - 1,
            n,
            base: first,
            legs,
        })
    }

    /// The coface `δᵢ: [n−1] → [n]` (skips `i`), as an arrow `T_{n−1} → T_n`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "coface δ_{i} into [{n}]");
        let alpha: Vec<usize> = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
        Self::from_monotone(&alpha, n).expect("cofaces are monotone")
    }

    /// The codegeneracy `σᵢ: [n+1] → [n]` (hits `i` twice), as an arrow
    /// `T_{n+1} → T_n`.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "codegeneracy σ_{i} onto [{n}]");
        let alpha: Vec<usize> = (0..n + 2).map(|j| if j <= i { j } else { j - 1 }).collect();
        Self::from_monotone(&alpha, n).expect("codegeneracies are monotone")
    }

    /// The self-duality `Λ → Λᵒᵖ` read off the edge model: an edge `e` of
    /// `T_n` goes to the unique edge `e′` of `T_m` with
    /// `f(e′₋) < e ≤ f(e′)`, where `T_n` is viewed as the cyclically ordered
    /// set of its objects.
    ///
    /// This functor is contravariant and an equivalence but it is not
    /// strictly involutive: applying it twice conjugates by the shift,
    /// `edge_dual(edge_dual(f)) = shift ∘ f ∘ shift⁻¹`.
    pub fn edge_dual(&self) -> LambdaArrow {
        Self::from_lift_unchecked(self.n, self.m, |j| self.least_preimage_at_or_above(j))
    }

    /// The strictly involutive self-duality `Λ → Λᵒᵖ`.
    ///
    /// It is [`LambdaArrow::edge_dual`] with objects read through the
    /// reflection `vᵢ ↦ v₋ᵢ` on both sides, which cancels the half-step
    /// between edges and objects: `dual(F)(j) = −min { i : F(i) ≥ −j }`.
    pub fn dual(&self) -> LambdaArrow {
        Self::from_lift_unchecked(self.n, self.m, |j| -self.least_preimage_at_or_above(-j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `(n+1)·C(m+n+1, m)`, i.e. base choices times weak compositions of
    /// `n+1` into `m+1` parts.
    fn hom_count(m: usize, n: usize) -> usize {
        let mut c = 1usize;
        for k in 0..m {
            c = c * (m + n + 1 - k) / (k + 1);
        }
        (n + 1) * c
    }

    fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..=m {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    let lo = p.last().copied().unwrap_or(0);
                    (lo..=n).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn small_hom_sets() {
        assert_eq!(LambdaArrow::hom(0, 0).len(), 1);
        let h10 = LambdaArrow::hom(1, 0);
        assert_eq!(h10.len(), 2);
        assert!(h10.iter().all(|f| f.base() == 0));
        let h01 = LambdaArrow::hom(0, 1);
        assert_eq!(h01.len(), 2);
        assert!(h01.iter().all(|f| f.legs() == [2]));
    }

    #[test]
    fn hom_counts_match_closed_form() {
        for m in 0..=4 {
            for n in 0..=4 {
                let h = LambdaArrow::hom(m, n);
                assert_eq!(h.len(), hom_count(m, n), "Λ(T_{m}, T_{n})");
                let mut dedup = h.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), h.len());
            }
        }
    }

    #[test]
    fn identity_has_unit_legs() {
        let id = LambdaArrow::identity(3);
        assert_eq!(id.base(), 0);
        assert_eq!(id.legs(), [1, 1, 1, 1]);
        assert_eq!(id.to_string(), "3->3: base=0; legs=[1,1,1,1]");
    }

    #[test]
    fn unit_laws() {
        for m in 0..=3 {
            for n in 0..=3 {
                for f in LambdaArrow::hom(m, n) {
                    assert_eq!(LambdaArrow::identity(n).compose(&f).unwrap(), f);
                    assert_eq!(f.compose(&LambdaArrow::identity(m)).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn associativity() {
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    for d in 0..=2 {
                        for f in LambdaArrow::hom(a, b) {
                            for g in LambdaArrow::hom(b, c) {
                                let gf = g.compose(&f).unwrap();
                                for h in LambdaArrow::hom(c, d) {
                                    assert_eq!(
                                        h.compose(&gf).unwrap(),
                                        h.compose(&g).unwrap().compose(&f).unwrap()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_rejects_index_mismatch() {
        let f = LambdaArrow::identity(1);
        let g = LambdaArrow::identity(2);
        assert!(matches!(
            g.compose(&f),
            Err(CyclicError::IndexMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn composition_sums_legs_along_paths() {
        // f: T_1 → T_2, base 2, legs (2, 1): e₀ ↦ e₂e₀, e₁ ↦ e₁
        let f = LambdaArrow::new(1, 2, 2, vec![2, 1]).unwrap();
        // g: T_2 → T_0 collapsing e₀ and e₂, sending e₁ around once
        let g = LambdaArrow::new(2, 0, 0, vec![0, 1, 0]).unwrap();
        let gf = g.compose(&f).unwrap();
        assert_eq!(gf.legs(), [0, 1]);
        assert_eq!(gf.base(), 0);
    }

    #[test]
    fn simplex_inclusion() {
        for n in 0..=3 {
            let id: Vec<usize> = (0..=n).collect();
            assert_eq!(LambdaArrow::from_monotone(&id, n).unwrap(), LambdaArrow::identity(n));
        }
        let d0 = LambdaArrow::from_monotone(&[1], 1).unwrap();
        assert_eq!((d0.base(), d0.legs()), (1, &[2][..]));
        assert!(matches!(
            LambdaArrow::from_monotone(&[1, 0], 1),
            Err(CyclicError::NotMonotone(_))
        ));
    }

    #[test]
    fn simplex_inclusion_is_functorial_and_injective() {
        for m in 0..=2 {
            for n in 0..=2 {
                let mut seen = std::collections::HashSet::new();
                for alpha in monotone_maps(m, n) {
                    let ia = LambdaArrow::from_monotone(&alpha, n).unwrap();
                    assert!(seen.insert(ia.clone()));
                    for p in 0..=2 {
                        for beta in monotone_maps(n, p) {
                            let ba: Vec<usize> = alpha.iter().map(|&a| beta[a]).collect();
                            let ib = LambdaArrow::from_monotone(&beta, p).unwrap();
                            assert_eq!(
                                LambdaArrow::from_monotone(&ba, p).unwrap(),
                                ib.compose(&ia).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rotation_has_order_n_plus_one() {
        for n in 0..=4 {
            let t = LambdaArrow::rotation(n);
            let mut p = LambdaArrow::identity(n);
            for k in 1..=n + 1 {
                p = t.compose(&p).unwrap();
                assert_eq!(p == LambdaArrow::identity(n), k == n + 1);
            }
            assert_eq!(t.compose(&LambdaArrow::shift(n)).unwrap(), LambdaArrow::identity(n));
        }
    }

    #[test]
    fn dual_is_a_strict_contravariant_involution() {
        for m in 0..=3 {
            for n in 0..=3 {
                for f in LambdaArrow::hom(m, n) {
                    let d = f.dual();
                    assert_eq!((d.source(), d.target()), (n, m));
                    assert_eq!(d.dual(), f);
                }
            }
            assert_eq!(LambdaArrow::identity(m).dual(), LambdaArrow::identity(m));
        }
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    for f in LambdaArrow::hom(a, b) {
                        for g in LambdaArrow::hom(b, c) {
                            let lhs = g.compose(&f).unwrap().dual();
                            assert_eq!(lhs, f.dual().compose(&g.dual()).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn edge_dual_matches_the_displayed_inequality() {
        for m in 0..=3 {
            for n in 0..=3 {
                for f in LambdaArrow::hom(m, n) {
                    let d = f.edge_dual();
                    // d sends object j of T_n to the unique i with F(i−1) < j ≤ F(i) (mod m+1)
                    for j in 0..=n {
                        let hits: Vec<i64> = (-(2 * m as i64 + 2)..=(2 * m as i64 + 2))
                            .filter(|&i| f.lift(i - 1) < j as i64 && j as i64 <= f.lift(i))
                            .collect();
                        assert_eq!(hits.len(), 1, "{f}, j = {j}");
                        assert_eq!(d.object(j), hits[0].rem_euclid(m as i64 + 1) as usize);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_dual_squares_to_conjugation_by_shift() {
        for m in 0..=3 {
            for n in 0..=3 {
                for f in LambdaArrow::hom(m, n) {
                    let expected = LambdaArrow::shift(n)
                        .compose(&f)
                        .unwrap()
                        .compose(&LambdaArrow::rotation(m))
                        .unwrap();
                    assert_eq!(f.edge_dual().edge_dual(), expected);
                }
            }
        }
        // and it is not strict: δ₀ into T₁ is moved
        let d0 = LambdaArrow::coface(1, 0);
        assert_ne!(d0.edge_dual().edge_dual(), d0);
    }

    #[test]
    fn edge_dual_is_contravariant() {
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    for f in LambdaArrow::hom(a, b) {
                        for g in LambdaArrow::hom(b, c) {
                            assert_eq!(
                                g.compose(&f).unwrap().edge_dual(),
                                f.edge_dual().compose(&g.edge_dual()).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_is_reflected_edge_dual() {
        for m in 0..=3 {
            for n in 0..=3 {
                for f in LambdaArrow::hom(m, n) {
                    let (d, e) = (f.dual(), f.edge_dual());
                    for j in 0..=n {
                        let reflected = (m + 1 - e.object((n + 1 - j) % (n + 1))) % (m + 1);
                        assert_eq!(d.object(j), reflected);
                    }
                }
            }
        }
    }

    #[test]
    fn json_mirror() {
        let f = LambdaArrow::coface(2, 1);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"m":1,"n":2,"base":0,"legs":[2,1]}"#);
        let back: LambdaArrow = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
    }
}
