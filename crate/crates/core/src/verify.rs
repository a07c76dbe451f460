//! Self-check suites run by `minaff verify`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charalg::{
    decompose, irr_character, kostant_mult, multiply_weight_maps, sl3_mult_closed, tensor_decompose, weyl_dim,
};
use crate::e6::{self, BETA_ROOTS, REFERENCE_WEIGHTS};
use crate::error::{Error, Result};
use crate::graded::{
    classify_psi, enumerate_a, graded_char_m, multiplicity_free_sweep, psi_nu, r_set, wt_gr, witness_s_j, AElement,
    BSide, LambdaE6, PsiVerdict, SUBTRAHENDS,
};
use crate::lweight::{kr_lweight, l_factorize, lroot_product, min_aff_lweight, simple_lroot, LRootMultiset, Orientation};
use crate::rootsys::{determinant, DynkinDiagram, RootVec, WeightVec};

const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Roots,
    Characters,
    MultiplicityFree,
    AbBijection,
    Psi,
    Lweight,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Roots,
        Suite::Characters,
        Suite::MultiplicityFree,
        Suite::AbBijection,
        Suite::Psi,
        Suite::Lweight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Roots => "roots",
            Self::Characters => "characters",
            Self::MultiplicityFree => "multiplicity_free",
            Self::AbBijection => "ab_bijection",
            Self::Psi => "psi",
            Self::Lweight => "lweight",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Upper bound on each coordinate in the weight sweeps.
    pub max_coord: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_coord: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
    pub elapsed_ms: u64,
    pub summary: String,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

/// Check counter shared by the suites; keeps the first few failure messages.
#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
    failure_count: u64,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(msg());
            }
        }
    }

    fn check_eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, expected {want:?}", what()));
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(f);
            }
        }
        self
    }

    fn finish(self, suite: Suite, start: Instant, summary: String) -> SuiteReport {
        SuiteReport {
            suite: suite.name().to_string(),
            checks: self.checks,
            failures: self.failures,
            failure_count: self.failure_count,
            elapsed_ms: start.elapsed().as_millis() as u64,
            summary,
        }
    }
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    if opts.max_coord < 0 {
        return Err(Error::Precondition("max-coord must be nonnegative".into()));
    }
    match suite {
        Suite::Roots => roots_suite(),
        Suite::Characters => characters_suite(opts),
        Suite::MultiplicityFree => multiplicity_free_suite(opts),
        Suite::AbBijection => ab_bijection_suite(opts),
        Suite::Psi => psi_suite(),
        Suite::Lweight => lweight_suite(),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run(s, opts)).collect()
}

fn roots_suite() -> Result<SuiteReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    let e6 = DynkinDiagram::e6_shared();
    let roots = e6.positive_roots();
    t.check_eq(roots.len(), 36, || "number of E6 positive roots".into());
    let nonsimple: BTreeSet<Vec<i64>> = roots
        .iter()
        .filter(|r| r.height() > 1)
        .map(|r| r.coords().to_vec())
        .collect();
    let labelled: BTreeSet<Vec<i64>> = BETA_ROOTS.iter().map(|b| b.to_vec()).collect();
    t.check_eq(labelled.len(), 30, || "distinct labelled roots".into());
    t.check(nonsimple == labelled, || "non-simple roots differ from the labelled list".into());
    for (label, weight) in REFERENCE_WEIGHTS {
        let root = e6::root_by_label(label).expect("reference labels are valid");
        t.check_eq(
            e6.root_to_weight(&root)?.coords().to_vec(),
            weight.to_vec(),
            || format!("weight of {label}"),
        );
    }
    t.check_eq(e6.highest_root(), &e6::beta(30), || "highest root".into());
    for r in roots {
        for i in 1..=6 {
            let s = e6.reflect_root(r, i);
            let back = if s.is_positive() { s } else { -&s };
            t.check(roots.contains(&back), || format!("s_{i}({r}) is not a root"));
        }
    }
    for (spec, n) in [
        ("A1", 1),
        ("A4", 10),
        ("A8", 36),
        ("D4", 12),
        ("D6", 30),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
    ] {
        let d = DynkinDiagram::from_type_spec(spec)?;
        t.check_eq(d.positive_roots().len(), n, || format!("positive roots of {spec}"));
    }
    let summary = format!(
        "36 roots, {} labelled roots and {} reference weights matched",
        BETA_ROOTS.len(),
        REFERENCE_WEIGHTS.len()
    );
    Ok(t.finish(Suite::Roots, start, summary))
}

/// Every dominant weight of rank `rank` with coordinates in `0..=max`.
fn dominant_box(rank: usize, max: i64) -> Vec<WeightVec> {
    let n = (max + 1) as usize;
    (0..n.pow(rank as u32))
        .map(|mut k| {
            let mut v = vec![0; rank];
            for slot in v.iter_mut().rev() {
                *slot = (k % n) as i64;
                k /= n;
            }
            WeightVec(v)
        })
        .collect()
}

/// Freudenthal against Kostant on every dominant weight of `V(lambda)`.
pub fn check_kostant(d: &DynkinDiagram, lambda: &WeightVec) -> Result<u64> {
    let ch = irr_character(d, lambda)?;
    let mut mismatches = 0;
    for (mu, m) in &ch.mults {
        if &kostant_mult(d, lambda, mu)? != m {
            mismatches += 1;
        }
    }
    Ok(mismatches)
}

/// Brauer-Klimyk against multiplying full characters and stripping.
pub fn check_tensor(d: &DynkinDiagram, a: &WeightVec, b: &WeightVec) -> Result<bool> {
    let bk = tensor_decompose(d, a, b)?;
    let prod = multiply_weight_maps(&irr_character(d, a)?.expand(d)?, &irr_character(d, b)?.expand(d)?);
    Ok(decompose(d, &prod)? == bk)
}

fn characters_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let e6 = DynkinDiagram::e6_shared();
    let mut t = par_tally(&(1..=6).collect::<Vec<_>>(), |&i, t| {
        let w = WeightVec::unit(6, i);
        let ch = irr_character(e6, &w).unwrap();
        t.check_eq(ch.dim(e6).unwrap(), weyl_dim(e6, &w).unwrap(), || format!("dim V(w{i}) for E6"));
    });
    t.check_eq(
        weyl_dim(e6, &WeightVec::unit(6, 6))?,
        BigInt::from(78),
        || "adjoint dimension".into(),
    );

    let kmax = opts.max_coord.min(3);
    let mut cases = Vec::new();
    for n in 1..=3 {
        let d = DynkinDiagram::type_a(n)?;
        for l in dominant_box(n, kmax) {
            cases.push((d.clone(), l));
        }
    }
    t = t.merge(par_tally(&cases, |(d, l), t| {
        let bad = check_kostant(d, l).unwrap();
        t.check(bad == 0, || format!("Kostant disagrees on {bad} weights of A{} V{l}", d.rank()));
    }));

    let a2 = DynkinDiagram::type_a(2)?;
    let box5 = dominant_box(2, 5);
    t = t.merge(par_tally(&box5, |l, t| {
        let ch = irr_character(&a2, l).unwrap();
        let (m1, m2) = (l[0], l[1]);
        for k1 in 0..=m1 {
            for k2 in 0..=m2 {
                let mu = WeightVec(vec![m1 - 2 * k1 + k2, m2 + k1 - 2 * k2]);
                let want = sl3_mult_closed(m1 as u64, m2 as u64, k1 as u64, k2 as u64).unwrap();
                t.check_eq(ch.mult(&a2, &mu).unwrap(), BigInt::from(want), || {
                    format!("A2 V{l} at k=({k1},{k2})")
                });
            }
        }
    }));

    let pairs: Vec<_> = dominant_box(2, opts.max_coord)
        .into_iter()
        .flat_map(|a| dominant_box(2, opts.max_coord).into_iter().map(move |b| (a.clone(), b)))
        .collect();
    t = t.merge(par_tally(&pairs, |(a, b), t| {
        t.check(check_tensor(&a2, a, b).unwrap(), || format!("A2 V{a} (x) V{b}"));
    }));

    let w1 = WeightVec::unit(6, 1);
    t.check_eq(
        tensor_decompose(e6, &w1, &w1)?.dim(e6)?,
        BigInt::from(729),
        || "E6 V(w1) (x) V(w1)".into(),
    );
    let summary = format!(
        "{} Kostant comparisons, {} tensor pairs, sl3 box up to 5",
        cases.len(),
        pairs.len()
    );
    Ok(t.finish(Suite::Characters, start, summary))
}

/// Rank of the matrix of the weight-map subtrahends and their identification
/// with labelled roots.
fn subtrahend_checks(t: &mut Tally) {
    let rows: Vec<Vec<i64>> = SUBTRAHENDS.iter().map(|r| r.to_vec()).collect();
    t.check(determinant(&rows) != BigInt::from(0), || "weight map is not injective".into());
    let e6 = DynkinDiagram::e6_shared();
    for (row, j) in SUBTRAHENDS.iter().zip([24, 25, 26, 27, 28, 30]) {
        t.check_eq(
            e6.root_to_weight(&e6::beta(j)).unwrap().coords().to_vec(),
            row.to_vec(),
            || format!("subtrahend for beta_{j}"),
        );
    }
}

/// Checks for one `lambda` of the multiplicity-free sweep.
fn check_multiplicity_free(lambda: &LambdaE6, t: &mut Tally) {
    let all = enumerate_a(lambda, None, None);
    let mut seen: HashMap<WeightVec, AElement> = HashMap::new();
    for r in &all {
        let (mu, _) = wt_gr(lambda, &r.r);
        t.check(mu.is_dominant(), || format!("wt{r} = {mu} not dominant for {lambda}"));
        if let Some(prev) = seen.insert(mu.clone(), *r) {
            t.check(false, || format!("{prev} and {r} share weight {mu} for {lambda}"));
        }
    }
    t.check_eq(
        enumerate_a(lambda, None, Some(0)),
        vec![AElement::new([0; 6])],
        || format!("degree 0 part for {lambda}"),
    );
    let gd = graded_char_m(lambda);
    let top = gd.degrees.get(&0).map(|l| l.0.clone()).unwrap_or_default();
    t.check_eq(top, vec![(lambda.weight(), BigInt::from(1))], || format!("degree 0 for {lambda}"));
}

fn multiplicity_free_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let lambdas: Vec<_> = multiplicity_free_sweep(opts.max_coord).collect();
    let mut t = par_tally(&lambdas, check_multiplicity_free);
    subtrahend_checks(&mut t);
    let summary = format!("{} weights swept", lambdas.len());
    Ok(t.finish(Suite::MultiplicityFree, start, summary))
}

/// All admissible `s` for `lambda`.
pub fn admissible_s(lambda: &LambdaE6) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    for s2 in 0..=lambda.get(2) {
        for s4 in 0..=lambda.get(4) {
            for s6 in 0..=lambda.get(6) {
                out.push([0, s2, 0, s4, 0, s6]);
            }
        }
    }
    out
}

/// For each admissible `s`: `r_of_j` is injective on `B(s)`, lands in `A`
/// with the right degree, satisfies the `A`-side inequalities and inverts to
/// `j`. Every `r` in `A` is reached through its witness pair.
fn check_ab(lambda: &LambdaE6, t: &mut Tally) {
    let a_set: BTreeSet<AElement> = enumerate_a(lambda, None, None).into_iter().collect();
    let mut covered = BTreeSet::new();
    for s in admissible_s(lambda) {
        let side = BSide::new(*lambda, &s).expect("admissible s");
        let bs = side.enumerate();
        let image: BTreeSet<AElement> = bs.iter().map(|j| side.r_of_j(j)).collect();
        t.check_eq(image.len(), bs.len(), || format!("r_of_j not injective for {lambda}, s={s:?}"));
        for j in &bs {
            let r = side.r_of_j(j);
            t.check(a_set.contains(&r), || format!("r_of_j{j} = {r} outside A for {lambda}"));
            t.check_eq(r.degree(), side.degree(), || format!("degree of r_of_j{j}"));
            t.check(side.satisfies_a_side(j), || format!("{j} fails the A-side inequalities"));
            t.check_eq(side.j_of_r(&r), Some(*j), || format!("j_of_r(r_of_j{j})"));
        }
        covered.extend(image);
    }
    t.check(covered == a_set, || format!("B-images do not cover A for {lambda}"));
    for r in &a_set {
        match witness_s_j(lambda, r) {
            Ok((side, j)) => {
                t.check(side.contains(&j) && j.j[4] == 0, || format!("witness of {r} not in B(s)"));
                t.check_eq(side.r_of_j(&j), *r, || format!("witness round trip for {r}"));
            }
            Err(e) => t.check(false, || format!("witness for {r}: {e}")),
        }
    }
}

fn ab_bijection_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let lambdas: Vec<_> = multiplicity_free_sweep(opts.max_coord).collect();
    let t = par_tally(&lambdas, check_ab);
    let summary = format!("{} weights swept", lambdas.len());
    Ok(t.finish(Suite::AbBijection, start, summary))
}

fn beta_set(indices: &[usize]) -> BTreeSet<RootVec> {
    indices.iter().map(|&j| e6::beta(j)).collect()
}

/// Expected verdict from the support alone.
pub fn expected_verdict(supp: &BTreeSet<usize>) -> PsiVerdict {
    match (supp.contains(&2), supp.contains(&4), supp.contains(&6)) {
        (true, true, _) => PsiVerdict::NotCovered,
        (true, false, _) => PsiVerdict::PsiOmega2,
        (false, true, _) => PsiVerdict::PsiOmega4,
        (false, false, true) => PsiVerdict::PsiOmega6,
        (false, false, false) => PsiVerdict::Empty,
    }
}

/// Whether some `nu` with coordinates in `-bound..=bound` has
/// `Psi_nu == psi`.
pub fn psi_nu_search(psi: &BTreeSet<RootVec>, bound: i64) -> Option<WeightVec> {
    let e6 = DynkinDiagram::e6_shared();
    let n = 2 * bound + 1;
    (0..n.pow(6)).into_par_iter().find_map_any(|mut k| {
        let mut v = vec![0; 6];
        for slot in v.iter_mut() {
            *slot = k % n - bound;
            k /= n;
        }
        let nu = WeightVec(v);
        (&psi_nu(e6, &nu) == psi).then_some(nu)
    })
}

fn psi_suite() -> Result<SuiteReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    let e6 = DynkinDiagram::e6_shared();
    t.check_eq(psi_nu(e6, &WeightVec::unit(6, 2)), beta_set(&[24, 26, 28, 29, 30]), || "Psi_w2".into());
    t.check_eq(psi_nu(e6, &WeightVec::unit(6, 4)), beta_set(&[25, 27, 28, 29, 30]), || "Psi_w4".into());
    t.check_eq(psi_nu(e6, &WeightVec::unit(6, 6)), beta_set(&[30]), || "Psi_w6".into());

    let free = [1usize, 2, 4, 5, 6];
    let mut unmatched: BTreeSet<BTreeSet<RootVec>> = BTreeSet::new();
    for mask in 0u32..32 {
        for height in [1, 2] {
            let mut m = [0i64; 6];
            for (b, &i) in free.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    m[i - 1] = height;
                }
            }
            let l = LambdaE6 { m };
            let c = classify_psi(&l)?;
            t.check_eq(c.verdict, expected_verdict(&l.support()), || format!("verdict for {l}"));
            if c.verdict == PsiVerdict::NotCovered {
                unmatched.insert(c.psi);
            }
        }
    }
    for psi in &unmatched {
        let hit = psi_nu_search(psi, 3);
        t.check(hit.is_none(), || format!("Psi_nu matches a not-covered set at {:?}", hit));
    }
    t.check(
        matches!(classify_psi(&LambdaE6 { m: [0, 0, 1, 0, 0, 0] }), Err(Error::OutsideMultiplicityFree(1))),
        || "classify_psi accepted m_3 > 0".into(),
    );

    for nu in dominant_box(6, 1).iter().chain([WeightVec(vec![1, -2, 0, 3, -1, 2])].iter()) {
        let base = psi_nu(e6, nu);
        for c in [2, 3, 7] {
            t.check_eq(psi_nu(e6, &nu.scale(c)), base.clone(), || format!("Psi_nu scaling at {nu}"));
        }
    }

    // R-sets
    let level1_all = beta_set(&(20..=30).collect::<Vec<_>>());
    let full = LambdaE6 { m: [1; 6] };
    let r1 = r_set(&full, 1);
    t.check_eq(r1.len(), 25, || "roots with all coefficients <= 1".into());
    t.check(r1.is_disjoint(&level1_all), || "level-1 set meets beta_20..beta_30".into());
    for l in multiplicity_free_sweep(1).chain([LambdaE6 { m: [0, 0, 2, 0, 0, 0] }, full]) {
        let sets: Vec<_> = (0..=3).map(|r| r_set(&l, r)).collect();
        for r in 0..3 {
            t.check(sets[r].is_subset(&sets[r + 1]), || format!("R-sets not monotone for {l}"));
        }
        t.check_eq(sets[3].len(), 36, || format!("R(lambda,3) for {l}"));
        if l.is_multiplicity_free() {
            t.check_eq(sets[2].len(), 36, || format!("R(lambda,2) for {l}"));
        }
    }
    let summary = format!("64 support patterns, {} not-covered sets searched", unmatched.len());
    Ok(t.finish(Suite::Psi, start, summary))
}

/// All multisets of at most `size` elements drawn from `items`.
pub fn small_multisets<T: Clone + Ord>(items: &[T], size: usize) -> Vec<BTreeMap<T, u64>> {
    fn go<T: Clone + Ord>(items: &[T], from: usize, left: usize, cur: &mut Vec<T>, out: &mut Vec<BTreeMap<T, u64>>) {
        let mut m = BTreeMap::new();
        for x in cur.iter() {
            *m.entry(x.clone()).or_insert(0) += 1;
        }
        out.push(m);
        if left == 0 {
            return;
        }
        for k in from..items.len() {
            cur.push(items[k].clone());
            go(items, k, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, size, &mut Vec::new(), &mut out);
    out
}

fn lweight_suite() -> Result<SuiteReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    for m in 0..=5u64 {
        for s0 in -3..=3 {
            let kr = kr_lweight(2, s0, m);
            let mut positions: Vec<i64> = kr.factors().map(|f| f.s).collect();
            positions.reverse();
            let want: Vec<i64> = (0..m as i64).map(|j| s0 + m as i64 - 1 - 2 * j).collect();
            t.check_eq(positions, want, || format!("KR string m={m} s0={s0}"));
            t.check(kr.is_dominant(), || "KR l-weight not dominant".into());
        }
    }
    let e6 = DynkinDiagram::e6_shared();
    for i in 1..=6 {
        for s in -2..=2 {
            t.check_eq(
                simple_lroot(e6, i, s)?.weight(6)?,
                e6.root_to_weight(&RootVec::unit(6, i))?,
                || format!("weight of alpha_{{{i},{s}}}"),
            );
        }
    }
    let a2 = DynkinDiagram::type_a(2)?;
    for eps in [Orientation::Plus, Orientation::Minus] {
        let ma = min_aff_lweight(&a2, &WeightVec(vec![1, 1]), eps, 0)?;
        t.check_eq(ma.center(2).zip(ma.center(1)).map(|(b, a)| b - a), Some(eps.sign()), || {
            format!("A2 (1,1) centres for {eps:?}")
        });
    }
    for l in dominant_box(6, 1) {
        let closure = e6.support(&l).connected_closure(e6);
        if !closure.is_type_a(e6) {
            continue;
        }
        let p = min_aff_lweight(e6, &l, Orientation::Plus, 0)?;
        let n = min_aff_lweight(e6, &l, Orientation::Minus, 0)?;
        t.check_eq(p.lweight.weight(6)?, l.clone(), || format!("weight of minimal affinization {l}"));
        t.check_eq(n.lweight.weight(6)?, l.clone(), || format!("weight with flipped orientation {l}"));
    }

    let grid: Vec<(usize, i64)> = (1..=6).flat_map(|i| (0..=7).map(move |s| (i, s))).collect();
    let planted = small_multisets(&grid, 3);
    t = t.merge(par_tally(&planted, |ms: &LRootMultiset, t| {
        let diff = lroot_product(e6, ms).unwrap();
        let got = l_factorize(e6, &diff, 0, 9).unwrap();
        t.check_eq(got.as_ref(), Some(ms), || format!("factorization of {diff}"));
    }));
    let summary = format!("{} planted l-root multisets recovered", planted.len());
    Ok(t.finish(Suite::Lweight, start, summary))
}
