//! E6 graded characters: the index set `A(lambda)`, the map `r -> (wt, gr)`,
//! the sets `R(lambda, r)`, `Psi` and `Gamma`, and the `B(s)` parametrisation.
//!
//! Weights are written in the chain-with-branch-at-3 labelling of
//! [`DynkinDiagram::e6`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::charalg::{compressed_dim, irr_character, DecompositionList};
use crate::error::{Error, Result};
use crate::rootsys::{DynkinDiagram, RootVec, WeightVec};

/// Rows are the weights subtracted by `r_1, ..., r_6`:
/// `w2-w5`, `w4-w1`, `w2-w4+w5`, `w1-w2+w4`, `w2-w3+w4`, `w6`.
pub const SUBTRAHENDS: [[i64; 6]; 6] = [
    [0, 1, 0, 0, -1, 0],
    [-1, 0, 0, 1, 0, 0],
    [0, 1, 0, -1, 1, 0],
    [1, -1, 0, 1, 0, 0],
    [0, 1, -1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1],
];

/// `lambda = sum m_i w_i` with all `m_i >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LambdaE6 {
    pub m: [i64; 6],
}

impl LambdaE6 {
    pub fn new(m: &[i64]) -> Result<Self> {
        let m: [i64; 6] = m.try_into().map_err(|_| Error::LengthMismatch {
            expected: 6,
            found: m.len(),
        })?;
        if m.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(WeightVec(m.to_vec()).to_string()));
        }
        Ok(Self { m })
    }

    pub fn from_weight(w: &WeightVec) -> Result<Self> {
        Self::new(w.coords())
    }

    /// `m_i` for `1 <= i <= 6`.
    pub fn get(&self, i: usize) -> i64 {
        self.m[i - 1]
    }

    pub fn weight(&self) -> WeightVec {
        WeightVec(self.m.to_vec())
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (1..=6).filter(|&i| self.get(i) != 0).collect()
    }

    /// `lambda(h_3) = 0`, the multiplicity-free regime.
    pub fn is_multiplicity_free(&self) -> bool {
        self.m[2] == 0
    }

    pub fn status(&self) -> GradedStatus {
        let supp = self.support();
        if !self.is_multiplicity_free() {
            GradedStatus::UpperBoundOnly
        } else if !(supp.contains(&2) && supp.contains(&4)) || supp.is_subset(&BTreeSet::from([2, 4, 6])) {
            GradedStatus::Proved
        } else {
            GradedStatus::Conjectural
        }
    }
}

impl fmt::Display for LambdaE6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.weight().fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AElement {
    pub r: [i64; 6],
}

impl AElement {
    pub fn new(r: [i64; 6]) -> Self {
        Self { r }
    }

    /// `r_i` for `1 <= i <= 6`.
    pub fn get(&self, i: usize) -> i64 {
        self.r[i - 1]
    }

    pub fn degree(&self) -> i64 {
        self.r.iter().sum()
    }

    pub fn is_in(&self, lambda: &LambdaE6) -> bool {
        let r = |i| self.get(i);
        let m = |i| lambda.get(i);
        self.r.iter().all(|&x| x >= 0)
            && r(6) <= m(6)
            && r(3) <= m(5)
            && r(4) <= m(1)
            && r(1) + r(3) + r(5) <= m(2)
            && r(2) + r(4) + r(5) <= m(4)
    }
}

impl fmt::Display for AElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WeightVec(self.r.to_vec()).fmt(f)
    }
}

/// `(lambda - sum r_i v_i, sum r_i)` where `v_i` are the rows of
/// [`SUBTRAHENDS`]. Defined for every integer vector `r`.
pub fn wt_gr(lambda: &LambdaE6, r: &[i64; 6]) -> (WeightVec, i64) {
    let mut w = lambda.m;
    for (ri, v) in r.iter().zip(SUBTRAHENDS.iter()) {
        for (wk, vk) in w.iter_mut().zip(v) {
            *wk -= ri * vk;
        }
    }
    (WeightVec(w.to_vec()), r.iter().sum())
}

/// Elements of `A(lambda)` in lexicographic order, optionally restricted to
/// a given weight and/or degree.
pub fn enumerate_a(lambda: &LambdaE6, mu: Option<&WeightVec>, degree: Option<i64>) -> Vec<AElement> {
    let m = |i: usize| lambda.get(i);
    let mut out = Vec::new();
    for r1 in 0..=m(2) {
        for r2 in 0..=m(4) {
            for r3 in 0..=m(5).min(m(2) - r1) {
                for r4 in 0..=m(1).min(m(4) - r2) {
                    for r5 in 0..=(m(2) - r1 - r3).min(m(4) - r2 - r4) {
                        for r6 in 0..=m(6) {
                            let r = [r1, r2, r3, r4, r5, r6];
                            if degree.is_some_and(|d| r.iter().sum::<i64>() != d) {
                                continue;
                            }
                            if let Some(mu) = mu {
                                if &wt_gr(lambda, &r).0 != mu {
                                    continue;
                                }
                            }
                            out.push(AElement::new(r));
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradedStatus {
    /// The formula is the graded character.
    Proved,
    /// Multiplicity free, but the formula is only expected to hold.
    Conjectural,
    /// `lambda(h_3) > 0`: the table bounds the multiplicities from above.
    UpperBoundOnly,
}

impl GradedStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Proved => "proved",
            Self::Conjectural => "conjectural",
            Self::UpperBoundOnly => "upper_bound_only",
        }
    }
}

impl fmt::Display for GradedStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDecomposition {
    pub lambda: LambdaE6,
    pub status: GradedStatus,
    pub degrees: BTreeMap<u64, DecompositionList>,
}

impl GradedDecomposition {
    pub fn max_degree(&self) -> u64 {
        self.degrees.keys().next_back().copied().unwrap_or(0)
    }

    /// `sum_r (sum mult * dim V(mu)) t^r`.
    pub fn dimension_polynomial(&self) -> Result<DimensionPolynomial> {
        let e6 = DynkinDiagram::e6_shared();
        let mut coeffs = vec![BigInt::zero(); self.max_degree() as usize + 1];
        for (r, list) in &self.degrees {
            coeffs[*r as usize] = list.dim(e6)?;
        }
        Ok(DimensionPolynomial(coeffs))
    }
}

/// `t -> sum_{r in A(lambda)} t^{gr r} V(wt r)`, with multiplicities counted
/// as `|A_{mu, r}|`.
pub fn graded_char_m(lambda: &LambdaE6) -> GradedDecomposition {
    let e6 = DynkinDiagram::e6_shared();
    let mut by_degree: BTreeMap<u64, BTreeMap<WeightVec, BigInt>> = BTreeMap::new();
    for a in enumerate_a(lambda, None, None) {
        let (mu, r) = wt_gr(lambda, &a.r);
        *by_degree.entry(r as u64).or_default().entry(mu).or_default() += 1;
    }
    let degrees = by_degree
        .into_iter()
        .map(|(r, map)| (r, DecompositionList::from_map(e6, map)))
        .collect();
    GradedDecomposition {
        lambda: *lambda,
        status: lambda.status(),
        degrees,
    }
}

/// Coefficients of a polynomial in `t`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionPolynomial(pub Vec<BigInt>);

impl DimensionPolynomial {
    pub fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl fmt::Display for DimensionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{c} t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{c} t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Per-degree characters (dominant weights only) of the graded formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedExpansion {
    pub degrees: BTreeMap<u64, BTreeMap<WeightVec, BigInt>>,
    pub dimension: DimensionPolynomial,
}

impl GradedExpansion {
    /// Total dimension, the value of the polynomial at `t = 1`.
    pub fn total(&self) -> BigInt {
        self.dimension.at_one()
    }

    /// Full weight map of the `t = 1` specialization.
    pub fn ungraded_character(&self) -> Result<BTreeMap<WeightVec, BigInt>> {
        let e6 = DynkinDiagram::e6_shared();
        let mut sum: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
        for map in self.degrees.values() {
            for (mu, m) in map {
                *sum.entry(mu.clone()).or_default() += m;
            }
        }
        crate::charalg::expand_compressed(e6, &sum)
    }
}

pub fn expand_graded(lambda: &LambdaE6) -> Result<GradedExpansion> {
    let e6 = DynkinDiagram::e6_shared();
    let gd = graded_char_m(lambda);
    let mut degrees = BTreeMap::new();
    let mut coeffs = vec![BigInt::zero(); gd.max_degree() as usize + 1];
    for (r, list) in &gd.degrees {
        let mut acc: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
        for (mu, count) in list.iter() {
            for (nu, m) in irr_character(e6, mu)?.mults {
                *acc.entry(nu).or_default() += count * m;
            }
        }
        coeffs[*r as usize] = compressed_dim(e6, &acc)?;
        debug_assert_eq!(coeffs[*r as usize], list.dim(e6)?);
        degrees.insert(*r, acc);
    }
    Ok(GradedExpansion {
        degrees,
        dimension: DimensionPolynomial(coeffs),
    })
}

/// Dimension polynomial from the Weyl dimension formula alone.
pub fn dimension_polynomial(lambda: &LambdaE6) -> Result<DimensionPolynomial> {
    graded_char_m(lambda).dimension_polynomial()
}

/// Smallest `r` with `alpha` in `R(lambda, r)`: the largest coefficient of
/// `alpha` at a node in the support of `lambda`.
pub fn r_min(lambda: &LambdaE6, alpha: &RootVec) -> i64 {
    lambda
        .support()
        .into_iter()
        .map(|i| alpha[i - 1])
        .max()
        .unwrap_or(0)
        .max(0)
}

/// `R(lambda, r)`, the positive roots all of whose coefficients at support
/// nodes are at most `r`.
pub fn r_set(lambda: &LambdaE6, r: i64) -> BTreeSet<RootVec> {
    DynkinDiagram::e6_shared()
        .positive_roots()
        .iter()
        .filter(|a| r_min(lambda, a) <= r)
        .cloned()
        .collect()
}

/// Positive roots maximising `(alpha, nu)`.
pub fn psi_nu(d: &DynkinDiagram, nu: &WeightVec) -> BTreeSet<RootVec> {
    let roots = d.positive_roots();
    let best = roots.iter().map(|a| a.pair(nu)).max().unwrap_or(0);
    roots.iter().filter(|a| a.pair(nu) == best).cloned().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiVerdict {
    Empty,
    PsiOmega6,
    PsiOmega2,
    PsiOmega4,
    NotCovered,
}

impl PsiVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Empty => "empty",
            Self::PsiOmega6 => "psi_omega6",
            Self::PsiOmega2 => "psi_omega2",
            Self::PsiOmega4 => "psi_omega4",
            Self::NotCovered => "not_covered",
        }
    }
}

impl fmt::Display for PsiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiClassification {
    pub psi: BTreeSet<RootVec>,
    pub verdict: PsiVerdict,
}

/// `Psi^lambda = R+ \ R(lambda, 1)`, compared against `Psi_nu` for
/// `nu` in `{w6, w2, w4}`.
pub fn classify_psi(lambda: &LambdaE6) -> Result<PsiClassification> {
    if !lambda.is_multiplicity_free() {
        return Err(Error::OutsideMultiplicityFree(lambda.get(3) as u32));
    }
    let e6 = DynkinDiagram::e6_shared();
    let level1 = r_set(lambda, 1);
    let psi: BTreeSet<RootVec> = e6
        .positive_roots()
        .iter()
        .filter(|a| !level1.contains(*a))
        .cloned()
        .collect();
    let verdict = if psi.is_empty() {
        PsiVerdict::Empty
    } else if psi == psi_nu(e6, &WeightVec::unit(6, 6)) {
        PsiVerdict::PsiOmega6
    } else if psi == psi_nu(e6, &WeightVec::unit(6, 2)) {
        PsiVerdict::PsiOmega2
    } else if psi == psi_nu(e6, &WeightVec::unit(6, 4)) {
        PsiVerdict::PsiOmega4
    } else {
        PsiVerdict::NotCovered
    };
    Ok(PsiClassification { psi, verdict })
}

/// Pairs `(mu, r)` with `r <= r_max` and `lambda - mu` a sum of `r` elements
/// of `psi`, repetitions allowed.
pub fn gamma_set(lambda: &LambdaE6, psi: &BTreeSet<RootVec>, r_max: u64) -> BTreeSet<(WeightVec, u64)> {
    let e6 = DynkinDiagram::e6_shared();
    let steps: Vec<WeightVec> = psi.iter().map(|b| e6.root_to_weight_unchecked(b)).collect();
    let mut out = BTreeSet::new();
    let mut level = BTreeSet::from([lambda.weight()]);
    for r in 0..=r_max {
        for mu in &level {
            out.insert((mu.clone(), r));
        }
        if r == r_max || steps.is_empty() {
            break;
        }
        level = level
            .iter()
            .flat_map(|mu| steps.iter().map(move |b| mu - b))
            .collect();
    }
    out
}

/// `j = (j_1, ..., j_5)`; `j_0 = j_1 + j_2 - j_3 - j_4 - j_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BElement {
    pub j: [i64; 5],
}

impl BElement {
    pub fn new(j: [i64; 5]) -> Self {
        Self { j }
    }

    /// `j_k` for `0 <= k <= 5`.
    pub fn get(&self, k: usize) -> i64 {
        if k == 0 {
            self.j[0] + self.j[1] - self.j[2] - self.j[3] - self.j[4]
        } else {
            self.j[k - 1]
        }
    }

    /// `2 (j_1 + j_2) - (j_3 + j_4)`.
    pub fn het(&self) -> i64 {
        2 * (self.get(1) + self.get(2)) - (self.get(3) + self.get(4))
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WeightVec(self.j.to_vec()).fmt(f)
    }
}

/// The data `(lambda, s)` fixing one set `B(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSide {
    pub lambda: LambdaE6,
    pub s: [i64; 6],
}

impl BSide {
    /// Requires `s_1 = s_3 = s_5 = 0` and `0 <= s_i <= m_i` for `i = 2, 4, 6`.
    pub fn new(lambda: LambdaE6, s: &[i64]) -> Result<Self> {
        let s: [i64; 6] = s
            .try_into()
            .map_err(|_| Error::MalformedS(format!("expected 6 entries, got {}", s.len())))?;
        for i in [1, 3, 5] {
            if s[i - 1] != 0 {
                return Err(Error::MalformedS(format!("s_{i} = {} must be 0", s[i - 1])));
            }
        }
        for i in [2, 4, 6] {
            if !(0..=lambda.get(i)).contains(&s[i - 1]) {
                return Err(Error::MalformedS(format!(
                    "s_{i} = {} must lie in 0..={}",
                    s[i - 1],
                    lambda.get(i)
                )));
            }
        }
        Ok(Self { lambda, s })
    }

    fn s(&self, i: usize) -> i64 {
        self.s[i - 1]
    }

    pub fn degree(&self) -> i64 {
        self.s(2) + self.s(4) + self.s(6)
    }

    pub fn contains(&self, j: &BElement) -> bool {
        let m = |i| self.lambda.get(i);
        let g = |k| j.get(k);
        j.j.iter().all(|&x| x >= 0)
            && g(3) <= g(1)
            && g(1) <= self.s(2)
            && g(4) <= g(2)
            && g(2) <= self.s(4)
            && g(3) <= m(5)
            && g(4) <= m(1)
            && g(0) >= 0
            && g(5) <= m(6) - self.s(6)
            && g(1) - g(3) - g(5) <= m(4) - self.s(4)
            && g(2) - g(4) - g(5) <= m(2) - self.s(2)
    }

    /// The inequalities on an arbitrary integer `j` that describe
    /// `r_of_j(j)` lying in `A(lambda)`, as they are usually stated (they
    /// leave `s_6 + j_5 >= 0` implicit).
    pub fn satisfies_a_side(&self, j: &BElement) -> bool {
        let m = |i| self.lambda.get(i);
        let g = |k| j.get(k);
        (0..=m(5)).contains(&g(3))
            && (0..=m(1)).contains(&g(4))
            && g(1) <= self.s(2)
            && g(2) <= self.s(4)
            && g(0) >= 0
            && g(5) <= m(6) - self.s(6)
            && g(1) - g(3) - g(5) <= m(4) - self.s(4)
            && g(2) - g(4) - g(5) <= m(2) - self.s(2)
    }

    /// All of `B(s)` in lexicographic order.
    pub fn enumerate(&self) -> Vec<BElement> {
        let m = |i| self.lambda.get(i);
        let mut out = Vec::new();
        for j1 in 0..=self.s(2) {
            for j2 in 0..=self.s(4) {
                for j3 in 0..=j1.min(m(5)) {
                    for j4 in 0..=j2.min(m(1)) {
                        for j5 in 0..=(m(6) - self.s(6)) {
                            let j = BElement::new([j1, j2, j3, j4, j5]);
                            if self.contains(&j) {
                                out.push(j);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `(s_2 - j_1, s_4 - j_2, j_3, j_4, j_0, s_6 + j_5)`.
    pub fn r_of_j(&self, j: &BElement) -> AElement {
        AElement::new([
            self.s(2) - j.get(1),
            self.s(4) - j.get(2),
            j.get(3),
            j.get(4),
            j.get(0),
            self.s(6) + j.get(5),
        ])
    }

    /// Inverse of [`BSide::r_of_j`] on vectors of degree `s_2 + s_4 + s_6`.
    pub fn j_of_r(&self, r: &AElement) -> Option<BElement> {
        if r.degree() != self.degree() {
            return None;
        }
        Some(BElement::new([
            self.s(2) - r.get(1),
            self.s(4) - r.get(2),
            r.get(3),
            r.get(4),
            r.get(6) - self.s(6),
        ]))
    }
}

/// For `r` in `A(lambda)`: `s = (0, r1+r3+r5, 0, r2+r4, 0, r6)` and
/// `j = (r3+r5, r4, r3, r4, 0)`, so that `j` lies in `B(s)` and maps to `r`.
pub fn witness_s_j(lambda: &LambdaE6, r: &AElement) -> Result<(BSide, BElement)> {
    if !r.is_in(lambda) {
        return Err(Error::NotInA(r.to_string()));
    }
    let g = |i| r.get(i);
    let side = BSide::new(*lambda, &[0, g(1) + g(3) + g(5), 0, g(2) + g(4), 0, g(6)])?;
    let j = BElement::new([g(3) + g(5), g(4), g(3), g(4), 0]);
    Ok((side, j))
}

/// Every `lambda` with `m_3 = 0` and the other `m_i` in `0..=max_coord`,
/// in lexicographic order.
pub fn multiplicity_free_sweep(max_coord: i64) -> impl Iterator<Item = LambdaE6> {
    let range = 0..=max_coord;
    let n = range.clone().count() as i64;
    (0..n.pow(5)).map(move |mut k| {
        let mut m = [0i64; 6];
        for i in [5, 4, 3, 1, 0] {
            m[i] = k % n;
            k /= n;
        }
        LambdaE6 { m }
    })
}
