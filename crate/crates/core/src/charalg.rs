//! Characters of irreducible modules and their decompositions.
//!
//! Multiplicities come from Freudenthal's recursion; the Weyl dimension
//! formula, Kostant's alternating sum (small rank only) and the closed form
//! for `sl_3` serve as independent cross-checks.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{DynkinDiagram, RootVec, WeightVec};

/// Largest rank accepted by [`kostant_mult`].
pub const KOSTANT_MAX_RANK: usize = 4;

/// Character of `V(hw)`, stored on dominant weights only. The multiplicity
/// of any weight is that of its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub hw: WeightVec,
    pub mults: BTreeMap<WeightVec, BigInt>,
}

impl Character {
    pub fn mult(&self, d: &DynkinDiagram, mu: &WeightVec) -> Result<BigInt> {
        let dom = d.dominant_representative(mu)?;
        Ok(self.mults.get(&dom).cloned().unwrap_or_default())
    }

    /// `sum mult(mu) * |W mu|` over dominant `mu`.
    pub fn dim(&self, d: &DynkinDiagram) -> Result<BigInt> {
        compressed_dim(d, &self.mults)
    }

    /// Full weight map, one entry per weight.
    pub fn expand(&self, d: &DynkinDiagram) -> Result<BTreeMap<WeightVec, BigInt>> {
        expand_compressed(d, &self.mults)
    }
}

pub(crate) fn compressed_dim(d: &DynkinDiagram, mults: &BTreeMap<WeightVec, BigInt>) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (mu, m) in mults {
        total += m * d.orbit_size(mu)?;
    }
    Ok(total)
}

pub(crate) fn expand_compressed(
    d: &DynkinDiagram,
    mults: &BTreeMap<WeightVec, BigInt>,
) -> Result<BTreeMap<WeightVec, BigInt>> {
    let mut out = BTreeMap::new();
    for (mu, m) in mults {
        for nu in d.weyl_orbit(mu)? {
            out.insert(nu, m.clone());
        }
    }
    Ok(out)
}

/// Irreducible constituents with multiplicities, listed from the top of the
/// dominance order down.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DecompositionList(pub Vec<(WeightVec, BigInt)>);

impl DecompositionList {
    pub fn from_map(d: &DynkinDiagram, map: BTreeMap<WeightVec, BigInt>) -> Self {
        let mut v: Vec<_> = map.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        v.sort_by_cached_key(|(mu, _)| std::cmp::Reverse((height_key(d, mu), mu.clone())));
        Self(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(WeightVec, BigInt)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, mu: &WeightVec) -> Option<&BigInt> {
        self.0.iter().find(|(w, _)| w == mu).map(|(_, m)| m)
    }

    /// `sum mult * dim V(mu)`.
    pub fn dim(&self, d: &DynkinDiagram) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (mu, m) in &self.0 {
            total += m * weyl_dim(d, mu)?;
        }
        Ok(total)
    }
}

/// A linear functional strictly positive on the positive roots, scaled to be
/// integral: `det(C) * sum_i (C^{-1} mu)_i`.
pub(crate) fn height_key(d: &DynkinDiagram, mu: &WeightVec) -> i128 {
    if mu.len() != d.rank() {
        return 0;
    }
    d.scaled_height(mu)
}

fn require_dominant(d: &DynkinDiagram, lambda: &WeightVec) -> Result<()> {
    if lambda.len() != d.rank() {
        return Err(Error::LengthMismatch {
            expected: d.rank(),
            found: lambda.len(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// `prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dim(d: &DynkinDiagram, lambda: &WeightVec) -> Result<BigInt> {
    require_dominant(d, lambda)?;
    let shifted = lambda + &WeightVec::rho(d.rank());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in d.positive_roots() {
        num *= alpha.pair(&shifted);
        den *= alpha.height();
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Dominant weights `mu <= lambda` together with the root coordinates of
/// `lambda - mu`, ordered by increasing height of the difference.
fn dominant_weights_below(d: &DynkinDiagram, lambda: &WeightVec) -> Vec<(WeightVec, RootVec)> {
    let roots: Vec<(RootVec, WeightVec)> = d
        .positive_roots()
        .iter()
        .map(|a| (a.clone(), d.root_to_weight_unchecked(a)))
        .collect();
    let mut seen: HashMap<WeightVec, RootVec> = HashMap::new();
    seen.insert(lambda.clone(), RootVec::zero(d.rank()));
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let diff = seen[&mu].clone();
        for (a, aw) in &roots {
            let nu = &mu - aw;
            if nu.is_dominant() && !seen.contains_key(&nu) {
                seen.insert(nu.clone(), &diff + a);
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.1.height().cmp(&b.1.height()).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Character of `V(lambda)` by Freudenthal's recursion
/// `m(mu) ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) = 2 sum_{alpha>0} sum_{k>=1} m(mu+k alpha) (mu+k alpha, alpha)`.
pub fn irr_character(d: &DynkinDiagram, lambda: &WeightVec) -> Result<Character> {
    require_dominant(d, lambda)?;
    let rank = d.rank();
    let roots = d.positive_roots();
    let root_weights: Vec<WeightVec> = roots.iter().map(|a| d.root_to_weight_unchecked(a)).collect();
    let mut mults: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
    for (mu, diff) in dominant_weights_below(d, lambda) {
        if diff.is_zero() {
            mults.insert(mu, BigInt::one());
            continue;
        }
        // (lambda - mu, lambda + mu + 2 rho)
        let den: i64 = (0..rank).map(|i| diff[i] * (lambda[i] + mu[i] + 2)).sum();
        let mut num = BigInt::zero();
        for (alpha, aw) in roots.iter().zip(&root_weights) {
            let mut nu = &mu + aw;
            loop {
                let dom = d.dominant_with_parity(&nu).0;
                let Some(m) = mults.get(&dom) else { break };
                num += m * alpha.pair(&nu);
                nu = &nu + aw;
            }
        }
        num *= 2;
        let (q, r) = num.div_rem(&BigInt::from(den));
        debug_assert!(r.is_zero(), "Freudenthal quotient not integral at {mu}");
        mults.insert(mu, q);
    }
    Ok(Character {
        hw: lambda.clone(),
        mults,
    })
}

/// Elements of the Weyl group as `(w(rho), sign)` pairs together with the
/// image of `v` under the same `w`, enumerated breadth first so the BFS depth
/// is the length.
fn weyl_group_images(d: &DynkinDiagram, v: &WeightVec) -> Vec<(WeightVec, bool)> {
    let rho = WeightVec::rho(d.rank());
    let mut seen: HashMap<WeightVec, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut frontier = vec![(rho.clone(), v.clone())];
    seen.insert(rho, ());
    let mut odd = false;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (wr, wv) in frontier {
            for i in 1..=d.rank() {
                let nr = d.reflect_weight(&wr, i);
                if seen.insert(nr.clone(), ()).is_none() {
                    next.push((nr, d.reflect_weight(&wv, i)));
                }
            }
            out.push((wv, odd));
        }
        frontier = next;
        odd = !odd;
    }
    out
}

/// Kostant partition function: number of ways to write `gamma` (root
/// coordinates) as a nonnegative integer combination of positive roots.
pub struct PartitionFunction<'a> {
    roots: &'a [RootVec],
    memo: HashMap<(Vec<i64>, usize), BigInt>,
}

impl<'a> PartitionFunction<'a> {
    pub fn new(d: &'a DynkinDiagram) -> Self {
        Self {
            roots: d.positive_roots(),
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, gamma: &RootVec) -> BigInt {
        if !gamma.is_nonnegative() {
            return BigInt::zero();
        }
        self.count_from(gamma.coords().to_vec(), 0)
    }

    fn count_from(&mut self, gamma: Vec<i64>, k: usize) -> BigInt {
        if gamma.iter().all(|&c| c == 0) {
            return BigInt::one();
        }
        if k == self.roots.len() {
            return BigInt::zero();
        }
        let key = (gamma, k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let beta = self.roots[k].clone();
        let mut total = BigInt::zero();
        let mut rest = key.0.clone();
        loop {
            total += self.count_from(rest.clone(), k + 1);
            for (c, b) in rest.iter_mut().zip(beta.coords()) {
                *c -= b;
            }
            if rest.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `sum_{w in W} (-1)^{l(w)} P(w(lambda + rho) - (mu + rho))`.
///
/// Walks the whole Weyl group, so only diagrams of rank at most
/// [`KOSTANT_MAX_RANK`] are accepted.
pub fn kostant_mult(d: &DynkinDiagram, lambda: &WeightVec, mu: &WeightVec) -> Result<BigInt> {
    if d.rank() > KOSTANT_MAX_RANK {
        return Err(Error::OracleOutOfRange {
            rank: d.rank(),
            limit: KOSTANT_MAX_RANK,
        });
    }
    require_dominant(d, lambda)?;
    if mu.len() != d.rank() {
        return Err(Error::LengthMismatch {
            expected: d.rank(),
            found: mu.len(),
        });
    }
    let rho = WeightVec::rho(d.rank());
    let lr = lambda + &rho;
    let mr = mu + &rho;
    let mut p = PartitionFunction::new(d);
    let mut total = BigInt::zero();
    for (image, odd) in weyl_group_images(d, &lr) {
        if let Some(gamma) = d.weight_to_root(&(&image - &mr)) {
            let c = p.count(&gamma);
            if odd {
                total -= c;
            } else {
                total += c;
            }
        }
    }
    Ok(total)
}

/// `dim V(m1 w1 + m2 w2)_{lambda - k1 a1 - k2 a2} = min(k1, k2) + 1` for
/// `sl_3`, valid for `0 <= k1 <= m1`, `0 <= k2 <= m2`.
pub fn sl3_mult_closed(m1: u64, m2: u64, k1: u64, k2: u64) -> Result<u64> {
    if k1 > m1 || k2 > m2 {
        return Err(Error::Precondition(format!(
            "need 0 <= k1 <= m1 and 0 <= k2 <= m2, got m=({m1},{m2}) k=({k1},{k2})"
        )));
    }
    Ok(k1.min(k2) + 1)
}

/// Decomposes a full weight map into irreducible characters by repeatedly
/// stripping the character of a highest remaining weight.
pub fn decompose(d: &DynkinDiagram, full: &BTreeMap<WeightVec, BigInt>) -> Result<DecompositionList> {
    let mut remaining: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
    let mut orbit_counts: BTreeMap<WeightVec, u64> = BTreeMap::new();
    for (mu, m) in full {
        if mu.len() != d.rank() {
            return Err(Error::LengthMismatch {
                expected: d.rank(),
                found: mu.len(),
            });
        }
        if m.is_negative() {
            return Err(Error::NotACharacter(format!("negative entry {m} at {mu}")));
        }
        if m.is_zero() {
            continue;
        }
        let dom = d.dominant_representative(mu)?;
        match full.get(&dom) {
            Some(md) if md == m => {}
            _ => {
                return Err(Error::NotACharacter(format!(
                    "not Weyl-invariant: {mu} and {dom} differ"
                )))
            }
        }
        *orbit_counts.entry(dom).or_insert(0u64) += 1;
        if mu.is_dominant() {
            remaining.insert(mu.clone(), m.clone());
        }
    }
    for (dom, n) in &orbit_counts {
        if BigInt::from(*n) != d.orbit_size(dom)? {
            return Err(Error::NotACharacter(format!(
                "not Weyl-invariant: orbit of {dom} only partly present"
            )));
        }
    }
    let mut out = BTreeMap::new();
    while let Some(top) = remaining
        .keys()
        .max_by(|a, b| height_key(d, a).cmp(&height_key(d, b)).then_with(|| a.cmp(b)))
        .cloned()
    {
        let count = remaining[&top].clone();
        let ch = irr_character(d, &top)?;
        for (nu, m) in &ch.mults {
            let e = remaining.entry(nu.clone()).or_default();
            *e -= &count * m;
            if e.is_negative() {
                return Err(Error::NotACharacter(format!(
                    "stripping V{top} leaves a negative multiplicity at {nu}"
                )));
            }
            if e.is_zero() {
                remaining.remove(nu);
            }
        }
        out.insert(top, count);
    }
    Ok(DecompositionList::from_map(d, out))
}

/// `V(lambda1) (x) V(lambda2)` by the Brauer-Klimyk rule: each weight `mu`
/// of `V(lambda1)` contributes `sign(w) mult(mu)` at `w(lambda2 + mu + rho) - rho`.
pub fn tensor_decompose(d: &DynkinDiagram, lambda1: &WeightVec, lambda2: &WeightVec) -> Result<DecompositionList> {
    require_dominant(d, lambda1)?;
    require_dominant(d, lambda2)?;
    let rho = WeightVec::rho(d.rank());
    let base = lambda2 + &rho;
    let ch = irr_character(d, lambda1)?;
    let mut acc: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
    for (mu, m) in ch.expand(d)? {
        let (dom, odd) = d.dominant_with_parity(&(&base + &mu));
        if dom.coords().contains(&0) {
            continue;
        }
        let e = acc.entry(&dom - &rho).or_default();
        if odd {
            *e -= m;
        } else {
            *e += m;
        }
    }
    if let Some((mu, m)) = acc.iter().find(|(_, m)| m.is_negative()) {
        return Err(Error::NotACharacter(format!("negative multiplicity {m} at {mu}")));
    }
    Ok(DecompositionList::from_map(d, acc))
}

/// Pointwise product of two full weight maps (the character of a tensor
/// product).
pub fn multiply_weight_maps(
    a: &BTreeMap<WeightVec, BigInt>,
    b: &BTreeMap<WeightVec, BigInt>,
) -> BTreeMap<WeightVec, BigInt> {
    let mut out: BTreeMap<WeightVec, BigInt> = BTreeMap::new();
    for (x, mx) in a {
        for (y, my) in b {
            *out.entry(x + y).or_default() += mx * my;
        }
    }
    out.retain(|_, m| !m.is_zero());
    out
}

/// Convenience: multiplicity as `u64` where it fits.
pub fn to_u64(x: &BigInt) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec(v.to_vec())
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn weyl_dim_values() {
        let e6 = DynkinDiagram::e6();
        assert_eq!(weyl_dim(&e6, &WeightVec::unit(6, 6)).unwrap(), big(78));
        assert_eq!(weyl_dim(&e6, &WeightVec::unit(6, 1)).unwrap(), big(27));
        assert_eq!(weyl_dim(&e6, &WeightVec::unit(6, 2)).unwrap(), big(351));
        assert_eq!(weyl_dim(&e6, &WeightVec::zero(6)).unwrap(), big(1));
        assert!(matches!(weyl_dim(&e6, &w(&[-1, 0, 0, 0, 0, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn freudenthal_small_cases() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        let ch = irr_character(&a2, &w(&[1, 1])).unwrap();
        assert_eq!(ch.mults, BTreeMap::from([(w(&[1, 1]), big(1)), (w(&[0, 0]), big(2))]));
        let ch = irr_character(&a2, &w(&[0, 0])).unwrap();
        assert_eq!(ch.mults.len(), 1);
        let e6 = DynkinDiagram::e6();
        let ch = irr_character(&e6, &WeightVec::unit(6, 1)).unwrap();
        assert_eq!(ch.mults, BTreeMap::from([(WeightVec::unit(6, 1), big(1))]));
        assert_eq!(ch.dim(&e6).unwrap(), big(27));
    }

    #[test]
    fn adjoint_character_has_rank_zero_weight() {
        let e6 = DynkinDiagram::e6();
        let ch = irr_character(&e6, &WeightVec::unit(6, 6)).unwrap();
        assert_eq!(ch.mult(&e6, &WeightVec::zero(6)).unwrap(), big(6));
        assert_eq!(ch.dim(&e6).unwrap(), big(78));
    }

    #[test]
    fn kostant_examples_and_gate() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        assert_eq!(kostant_mult(&a2, &w(&[1, 1]), &w(&[0, 0])).unwrap(), big(2));
        assert_eq!(kostant_mult(&a2, &w(&[1, 0]), &w(&[1, 0])).unwrap(), big(1));
        let a1 = DynkinDiagram::type_a(1).unwrap();
        assert_eq!(kostant_mult(&a1, &w(&[2]), &w(&[0])).unwrap(), big(1));
        assert_eq!(kostant_mult(&a1, &w(&[2]), &w(&[1])).unwrap(), big(0));
        let e6 = DynkinDiagram::e6();
        assert!(matches!(
            kostant_mult(&e6, &WeightVec::unit(6, 1), &WeightVec::unit(6, 1)),
            Err(Error::OracleOutOfRange { rank: 6, limit: 4 })
        ));
    }

    #[test]
    fn sl3_closed_form() {
        assert_eq!(sl3_mult_closed(2, 1, 1, 1).unwrap(), 2);
        assert_eq!(sl3_mult_closed(4, 0, 3, 0).unwrap(), 1);
        assert_eq!(sl3_mult_closed(3, 3, 2, 3).unwrap(), 3);
        assert!(sl3_mult_closed(1, 1, 2, 0).is_err());
    }

    #[test]
    fn decompose_round_trip_and_errors() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        let ch = irr_character(&a2, &w(&[2, 1])).unwrap();
        let dl = decompose(&a2, &ch.expand(&a2).unwrap()).unwrap();
        assert_eq!(dl.0, vec![(w(&[2, 1]), big(1))]);

        let mut bad = ch.expand(&a2).unwrap();
        bad.insert(w(&[0, 0]), big(-1));
        assert!(matches!(decompose(&a2, &bad), Err(Error::NotACharacter(_))));

        let mut lopsided = BTreeMap::new();
        lopsided.insert(w(&[1, 0]), big(1));
        assert!(decompose(&a2, &lopsided).is_err());
    }

    #[test]
    fn tensor_small() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        let t = tensor_decompose(&a2, &w(&[1, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(t.0, vec![(w(&[1, 1]), big(1)), (w(&[0, 0]), big(1))]);
        let t = tensor_decompose(&a2, &w(&[2, 1]), &w(&[0, 0])).unwrap();
        assert_eq!(t.0, vec![(w(&[2, 1]), big(1))]);
    }

    #[test]
    fn e6_minuscule_square() {
        let e6 = DynkinDiagram::e6();
        let w1 = WeightVec::unit(6, 1);
        let t = tensor_decompose(&e6, &w1, &w1).unwrap();
        assert_eq!(t.dim(&e6).unwrap(), big(729));
        assert_eq!(t.len(), 3);
    }
}
