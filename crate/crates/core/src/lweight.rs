//! l-weights with spectral parameters in a single coset `q^Z`.
//!
//! `omega_{i, q^s}` is stored as the key `(i, s)`; an [`LWeight`] is a finite
//! product of such generators with integer exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{DynkinDiagram, Subdiagram, WeightVec};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<LFactor>", from = "Vec<LFactor>")]
pub struct LWeight {
    exps: BTreeMap<(usize, i64), i64>,
}

/// One generator `omega_{node, q^s}` raised to `exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LFactor {
    pub node: usize,
    pub s: i64,
    pub exp: i64,
}

impl From<LWeight> for Vec<LFactor> {
    fn from(lw: LWeight) -> Self {
        lw.factors().collect()
    }
}

impl From<Vec<LFactor>> for LWeight {
    fn from(v: Vec<LFactor>) -> Self {
        let mut lw = LWeight::identity();
        for f in v {
            lw.add_exp(f.node, f.s, f.exp);
        }
        lw
    }
}

impl LWeight {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(node: usize, s: i64) -> Self {
        let mut lw = Self::identity();
        lw.add_exp(node, s, 1);
        lw
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i64), i64)>) -> Self {
        let mut lw = Self::identity();
        for ((i, s), e) in entries {
            lw.add_exp(i, s, e);
        }
        lw
    }

    fn add_exp(&mut self, node: usize, s: i64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exps.entry((node, s)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&(node, s));
        }
    }

    pub fn exp(&self, node: usize, s: i64) -> i64 {
        self.exps.get(&(node, s)).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &BTreeMap<(usize, i64), i64> {
        &self.exps
    }

    pub fn factors(&self) -> impl Iterator<Item = LFactor> + '_ {
        self.exps.iter().map(|(&(node, s), &exp)| LFactor { node, s, exp })
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.exps.values().all(|&e| e >= 0)
    }

    pub fn inverse(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|(&k, &e)| (k, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return Self::identity();
        }
        Self {
            exps: self.exps.iter().map(|(&k, &e)| (k, e * n)).collect(),
        }
    }

    /// Smallest and largest `q`-exponent that occurs.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let min = self.exps.keys().map(|k| k.1).min()?;
        let max = self.exps.keys().map(|k| k.1).max()?;
        Some((min, max))
    }

    /// Sum of the exponents at `node`.
    pub fn node_degree(&self, node: usize) -> i64 {
        self.exps.range((node, i64::MIN)..=(node, i64::MAX)).map(|(_, e)| e).sum()
    }

    /// Classical weight: coordinate `i` is the sum of the exponents at node `i`.
    pub fn weight(&self, rank: usize) -> Result<WeightVec> {
        let mut w = WeightVec::zero(rank);
        for (&(i, _), &e) in &self.exps {
            if i == 0 || i > rank {
                return Err(Error::NodeOutOfRange { node: i, rank });
            }
            w.0[i - 1] += e;
        }
        Ok(w)
    }
}

impl Mul for &LWeight {
    type Output = LWeight;
    fn mul(self, rhs: &LWeight) -> LWeight {
        let mut out = self.clone();
        for (&(i, s), &e) in &rhs.exps {
            out.add_exp(i, s, e);
        }
        out
    }
}

impl Div for &LWeight {
    type Output = LWeight;
    fn div(self, rhs: &LWeight) -> LWeight {
        let mut out = self.clone();
        for (&(i, s), &e) in &rhs.exps {
            out.add_exp(i, s, -e);
        }
        out
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|x| {
                if x.exp == 1 {
                    format!("w[{},{}]", x.node, x.s)
                } else {
                    format!("w[{},{}]^{}", x.node, x.s, x.exp)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `prod_{j=0}^{m-1} omega_{i, q^{s0 + m - 1 - 2j}}`.
pub fn kr_lweight(i: usize, s0: i64, m: u64) -> LWeight {
    let m = m as i64;
    LWeight::from_entries((0..m).map(|j| ((i, s0 + m - 1 - 2 * j), 1)))
}

/// `alpha_{i, q^s}`: `omega_{i,q^s} omega_{i,q^{s+2}}` divided by
/// `omega_{j,q^{s+1}}` for every neighbour `j` of `i`.
pub fn simple_lroot(d: &DynkinDiagram, i: usize, s: i64) -> Result<LWeight> {
    d.check_node(i)?;
    let mut entries = vec![((i, s), 1), ((i, s + 2), 1)];
    entries.extend(d.neighbors(i).into_iter().map(|j| ((j, s + 1), -1)));
    Ok(LWeight::from_entries(entries))
}

/// Sign of the step between consecutive centres along the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Self::Plus => 1,
            Self::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }

    pub fn from_sign(s: i64) -> Result<Self> {
        match s {
            1 => Ok(Self::Plus),
            -1 => Ok(Self::Minus),
            _ => Err(Error::Precondition(format!("orientation must be +1 or -1, got {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalAffinization {
    /// Connected closure of the support, in path order.
    pub path: Vec<usize>,
    /// `(node, s)` for every node of the path, including nodes where
    /// `lambda` vanishes.
    pub centers: Vec<(usize, i64)>,
    pub lweight: LWeight,
}

impl MinimalAffinization {
    pub fn center(&self, node: usize) -> Option<i64> {
        self.centers.iter().find(|c| c.0 == node).map(|c| c.1)
    }
}

/// Highest l-weight of a minimal affinization of `V(lambda)` when the
/// connected closure of the support is a path `i_1, ..., i_k`: a product of
/// KR strings centred at `s_{i_1} = base` and
/// `s_{i_{t+1}} = s_{i_t} + eps (lambda(h_{i_t}) + lambda(h_{i_{t+1}}) - 1)`.
pub fn min_aff_lweight(
    d: &DynkinDiagram,
    lambda: &WeightVec,
    eps: Orientation,
    base: i64,
) -> Result<MinimalAffinization> {
    if lambda.len() != d.rank() {
        return Err(Error::LengthMismatch {
            expected: d.rank(),
            found: lambda.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let closure: Subdiagram = d.support(lambda).connected_closure(d);
    let path = closure
        .path_order(d)
        .ok_or_else(|| Error::ClosureNotTypeA(closure.to_string()))?;
    let m = |i: usize| lambda[i - 1];
    let mut centers = Vec::with_capacity(path.len());
    let mut lweight = LWeight::identity();
    let mut s = base;
    for (t, &node) in path.iter().enumerate() {
        if t > 0 {
            let prev = path[t - 1];
            s += eps.sign() * (m(prev) + m(node) - 1);
        }
        centers.push((node, s));
        lweight = &lweight * &kr_lweight(node, s, m(node) as u64);
    }
    Ok(MinimalAffinization { path, centers, lweight })
}

/// Multiset of simple l-roots, `(node, s) -> multiplicity`.
pub type LRootMultiset = BTreeMap<(usize, i64), u64>;

/// Writes `diff` as a product of simple l-roots `alpha_{i,q^s}` whose
/// factors all lie in positions `lo..=hi` (so `lo <= s <= hi - 2`), or
/// returns `None` when no such product exists.
///
/// Positions are consumed in increasing order of `s`: once the roots with
/// smaller index are removed, `alpha_{i,q^s}` is the only remaining root that
/// touches `(i, s)`, so its exponent is forced. The decomposition is unique.
pub fn l_factorize(d: &DynkinDiagram, diff: &LWeight, lo: i64, hi: i64) -> Result<Option<LRootMultiset>> {
    let Some((min, max)) = diff.q_range() else {
        return Ok(Some(LRootMultiset::new()));
    };
    if min < lo || max > hi {
        return Err(Error::WindowTooSmall { lo, hi, min, max });
    }
    let w = diff.weight(d.rank())?;
    match d.weight_to_root(&w) {
        Some(gamma) if gamma.is_nonnegative() => {}
        _ => return Ok(None),
    }
    let mut residual = diff.clone();
    let mut out = LRootMultiset::new();
    for s in lo..=hi - 2 {
        for i in 1..=d.rank() {
            let n = residual.exp(i, s);
            if n < 0 {
                return Ok(None);
            }
            if n > 0 {
                residual = &residual / &simple_lroot(d, i, s)?.pow(n);
                out.insert((i, s), n as u64);
            }
        }
    }
    Ok(residual.is_identity().then_some(out))
}

/// Product of the simple l-roots in a multiset.
pub fn lroot_product(d: &DynkinDiagram, roots: &LRootMultiset) -> Result<LWeight> {
    let mut out = LWeight::identity();
    for (&(i, s), &n) in roots {
        out = &out * &simple_lroot(d, i, s)?.pow(n as i64);
    }
    Ok(out)
}
