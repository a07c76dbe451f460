//! Root systems, weight lattices and Weyl-group orbits of simply-laced
//! Dynkin diagrams.
//!
//! Nodes are labelled `1..=rank`. Roots are stored in the simple-root basis
//! and weights in the fundamental-weight basis; the Cartan matrix converts
//! between the two. The E6 preset uses the labelling
//!
//! ```text
//!             6
//!             |
//!     1 - 2 - 3 - 4 - 5
//! ```
//!
//! which differs from Bourbaki; see [`e6_to_bourbaki`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

macro_rules! int_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn new(coords: Vec<i64>) -> Self {
                Self(coords)
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![0; rank])
            }

            pub fn unit(rank: usize, node: usize) -> Self {
                let mut v = vec![0; rank];
                v[node - 1] = 1;
                Self(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn scale(&self, k: i64) -> Self {
                Self(self.0.iter().map(|c| c * k).collect())
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }

        impl From<&[i64]> for $name {
            fn from(v: &[i64]) -> Self {
                Self(v.to_vec())
            }
        }

        impl Index<usize> for $name {
            type Output = i64;
            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, c) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_vector! {
    /// Coordinates in the simple-root basis.
    RootVec
}

int_vector! {
    /// Coordinates in the fundamental-weight basis, i.e. the values `mu(h_i)`.
    WeightVec
}

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Pairing `(mu, alpha)` with a weight under the form `(alpha_i, alpha_i) = 2`.
    pub fn pair(&self, mu: &WeightVec) -> i64 {
        self.0.iter().zip(&mu.0).map(|(a, m)| a * m).sum()
    }
}

impl WeightVec {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// The weight `rho`, all coordinates one.
    pub fn rho(rank: usize) -> Self {
        Self(vec![1; rank])
    }
}

/// A connected, simply-laced Dynkin diagram of finite type.
#[derive(Debug)]
pub struct DynkinDiagram {
    name: Option<String>,
    rank: usize,
    edges: BTreeSet<(usize, usize)>,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<BigRational>>,
    // det(C) * C^{-1}, integral for every finite type
    scaled_inverse: Vec<Vec<i64>>,
    det: i64,
    roots: OnceLock<Vec<RootVec>>,
}

impl Clone for DynkinDiagram {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            rank: self.rank,
            edges: self.edges.clone(),
            cartan: self.cartan.clone(),
            cartan_inverse: self.cartan_inverse.clone(),
            scaled_inverse: self.scaled_inverse.clone(),
            det: self.det,
            roots: self.roots.clone(),
        }
    }
}

impl PartialEq for DynkinDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.edges == other.edges
    }
}

impl Eq for DynkinDiagram {}

impl DynkinDiagram {
    /// Builds a diagram from an undirected edge list on nodes `1..=rank`.
    ///
    /// Repeated edges and loops are rejected as not simply laced; the diagram
    /// must be connected and its Cartan matrix positive definite.
    pub fn new(rank: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidDiagram("rank must be positive".into()));
        }
        let mut edges = BTreeSet::new();
        for &(a, b) in edge_list {
            for n in [a, b] {
                if n == 0 || n > rank {
                    return Err(Error::NodeOutOfRange { node: n, rank });
                }
            }
            if a == b {
                return Err(Error::NotSimplyLaced(format!("loop at node {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !edges.insert(e) {
                return Err(Error::NotSimplyLaced(format!(
                    "multiple edge {}-{}",
                    e.0, e.1
                )));
            }
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        let all: BTreeSet<usize> = (1..=rank).collect();
        if !is_connected_set(rank, &edges, &all) {
            return Err(Error::Disconnected);
        }
        let (cartan_inverse, det) = invert_positive_definite(&cartan)?;
        let det_i64 = det
            .to_string()
            .parse::<i64>()
            .map_err(|_| Error::InvalidDiagram("determinant overflow".into()))?;
        let scaled_inverse = cartan_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let y = x * BigRational::from_integer(det.clone());
                        debug_assert!(y.is_integer());
                        y.to_integer().to_string().parse::<i64>().unwrap()
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            name: None,
            rank,
            edges,
            cartan,
            cartan_inverse,
            scaled_inverse,
            det: det_i64,
            roots: OnceLock::new(),
        })
    }

    fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    /// E6 with node 6 attached to node 3 of the chain 1-2-3-4-5.
    pub fn e6() -> Self {
        Self::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)])
            .expect("E6 preset")
            .named("E6")
    }

    /// Process-wide E6 instance, so its root cache is built once.
    pub fn e6_shared() -> &'static Self {
        static E6: OnceLock<DynkinDiagram> = OnceLock::new();
        E6.get_or_init(Self::e6)
    }

    /// The path 1 - 2 - ... - n.
    pub fn type_a(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Ok(Self::new(n, &edges)?.named(&format!("A{n}")))
    }

    /// Bourbaki labelling: chain 1 - ... - (n-1), node n attached to n-2.
    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidDiagram(format!("D{n} requires n >= 4")));
        }
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 2, n));
        Ok(Self::new(n, &edges)?.named(&format!("D{n}")))
    }

    /// Bourbaki labelling for E7 and E8 (node 2 attached to node 4).
    pub fn type_e(n: usize) -> Result<Self> {
        match n {
            6 => Ok(Self::e6()),
            7 | 8 => {
                let mut edges = vec![(1, 3), (3, 4), (2, 4)];
                edges.extend((4..n).map(|i| (i, i + 1)));
                Ok(Self::new(n, &edges)?.named(&format!("E{n}")))
            }
            _ => Err(Error::InvalidDiagram(format!("E{n} is not of finite type"))),
        }
    }

    /// Parses `E6`, `A<n>`, `D<n>`, `E7`, `E8`, or `edges:1-2,2-3,...`.
    pub fn from_type_spec(spec: &str) -> Result<Self> {
        let s = spec.trim();
        if let Some(list) = s.strip_prefix("edges:") {
            let mut edges = Vec::new();
            for item in list.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                let (a, b) = item
                    .split_once('-')
                    .ok_or_else(|| Error::UnknownType(spec.to_string()))?;
                let a: usize = a.trim().parse().map_err(|_| Error::UnknownType(spec.into()))?;
                let b: usize = b.trim().parse().map_err(|_| Error::UnknownType(spec.into()))?;
                edges.push((a, b));
            }
            let rank = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(1);
            return Self::new(rank, &edges);
        }
        let upper = s.to_ascii_uppercase();
        let (letter, num) = upper.split_at(1.min(upper.len()));
        let n: usize = num.parse().map_err(|_| Error::UnknownType(spec.to_string()))?;
        match letter {
            "A" if n >= 1 => Self::type_a(n),
            "D" => Self::type_d(n),
            "E" => Self::type_e(n),
            _ => Err(Error::UnknownType(spec.to_string())),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn is_e6_preset(&self) -> bool {
        *self == Self::e6()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// `c[i][j] = alpha_j(h_i)`, zero-based.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<BigRational>] {
        &self.cartan_inverse
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == node {
                    Some(b)
                } else if b == node {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.neighbors(node).len()
    }

    /// The trivalent node, if any (D and E types).
    pub fn branch_node(&self) -> Option<usize> {
        (1..=self.rank).find(|&n| self.degree(n) >= 3)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank {
            Err(Error::LengthMismatch {
                expected: self.rank,
                found: len,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank {
            Err(Error::NodeOutOfRange {
                node,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn simple_root(&self, node: usize) -> RootVec {
        RootVec::unit(self.rank, node)
    }

    /// All positive roots, sorted by height and then lexicographically.
    ///
    /// Generated as the closure of the simple roots under the simple
    /// reflections, filtered to the nonnegative vectors.
    pub fn positive_roots(&self) -> &[RootVec] {
        self.roots.get_or_init(|| {
            let mut seen: BTreeSet<RootVec> = BTreeSet::new();
            let mut queue: VecDeque<RootVec> = VecDeque::new();
            for i in 1..=self.rank {
                let a = self.simple_root(i);
                if seen.insert(a.clone()) {
                    queue.push_back(a);
                }
            }
            while let Some(beta) = queue.pop_front() {
                for i in 1..=self.rank {
                    let next = self.reflect_root(&beta, i);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            let mut pos: Vec<RootVec> = seen.into_iter().filter(RootVec::is_positive).collect();
            pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
            pos
        })
    }

    pub fn highest_root(&self) -> &RootVec {
        self.positive_roots().last().expect("nonempty root system")
    }

    /// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i` in root coordinates.
    pub fn reflect_root(&self, beta: &RootVec, node: usize) -> RootVec {
        let i = node - 1;
        let pairing: i64 = (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum();
        let mut out = beta.clone();
        out.0[i] -= pairing;
        out
    }

    /// `C * coords(alpha)`.
    pub fn root_to_weight(&self, alpha: &RootVec) -> Result<WeightVec> {
        self.check_len(alpha.len())?;
        Ok(self.root_to_weight_unchecked(alpha))
    }

    pub(crate) fn root_to_weight_unchecked(&self, alpha: &RootVec) -> WeightVec {
        WeightVec(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * alpha[j]).sum())
                .collect(),
        )
    }

    /// `C^{-1} * coords(mu)` over the rationals.
    pub fn weight_to_root_rational(&self, mu: &WeightVec) -> Result<Vec<BigRational>> {
        self.check_len(mu.len())?;
        Ok((0..self.rank)
            .map(|i| {
                (0..self.rank).fold(BigRational::zero(), |acc, j| {
                    acc + &self.cartan_inverse[i][j] * BigRational::from_integer(BigInt::from(mu[j]))
                })
            })
            .collect())
    }

    /// `det(C)` times the height of `mu` in root coordinates; always integral.
    pub(crate) fn scaled_height(&self, mu: &WeightVec) -> i128 {
        self.scaled_inverse
            .iter()
            .flat_map(|row| row.iter().zip(mu.0.iter()).map(|(&c, &m)| c as i128 * m as i128))
            .sum()
    }

    /// Root coordinates of `mu` if `mu` lies in the root lattice.
    pub fn weight_to_root(&self, mu: &WeightVec) -> Option<RootVec> {
        if mu.len() != self.rank {
            return None;
        }
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let s: i64 = (0..self.rank).map(|j| self.scaled_inverse[i][j] * mu[j]).sum();
            if s % self.det != 0 {
                return None;
            }
            out.push(s / self.det);
        }
        Some(RootVec(out))
    }

    /// W-invariant form with `(alpha_i, alpha_i) = 2`, so `(omega_i, omega_j)`
    /// is the `(i, j)` entry of the inverse Cartan matrix.
    pub fn inner_product(&self, x: &WeightVec, y: &WeightVec) -> Result<BigRational> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let mut num = 0i128;
        for i in 0..self.rank {
            for j in 0..self.rank {
                num += (x[i] as i128) * (self.scaled_inverse[i][j] as i128) * (y[j] as i128);
            }
        }
        Ok(BigRational::new(BigInt::from(num), BigInt::from(self.det)))
    }

    /// `s_i(mu) = mu - mu(h_i) alpha_i`.
    pub fn reflect_weight(&self, mu: &WeightVec, node: usize) -> WeightVec {
        let i = node - 1;
        let m = mu[i];
        if m == 0 {
            return mu.clone();
        }
        WeightVec(
            (0..self.rank)
                .map(|k| mu[k] - m * self.cartan[k][i])
                .collect(),
        )
    }

    /// The full orbit of `mu` under the Weyl group.
    pub fn weyl_orbit(&self, mu: &WeightVec) -> Result<BTreeSet<WeightVec>> {
        self.check_len(mu.len())?;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank {
                if w[i - 1] == 0 {
                    continue;
                }
                let next = self.reflect_weight(&w, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }

    /// Size of the orbit of a dominant weight, computed from its stabilizer
    /// without walking the orbit.
    pub fn orbit_size(&self, mu: &WeightVec) -> Result<BigInt> {
        let dom = self.dominant_representative(mu)?;
        let full = self.weyl_group_order_of(&(1..=self.rank).collect::<Vec<_>>());
        let zero_nodes: Vec<usize> = (1..=self.rank).filter(|&i| dom[i - 1] == 0).collect();
        let stab = self.weyl_group_order_of(&zero_nodes);
        Ok(full / stab)
    }

    /// Order of the parabolic subgroup generated by `nodes`.
    fn weyl_group_order_of(&self, nodes: &[usize]) -> BigInt {
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut order = BigInt::one();
        for comp in components(&self.edges, &set) {
            order *= component_weyl_order(&self.edges, &comp);
        }
        order
    }

    /// The unique dominant weight in the orbit of `mu`.
    pub fn dominant_representative(&self, mu: &WeightVec) -> Result<WeightVec> {
        self.check_len(mu.len())?;
        Ok(self.dominant_with_parity(mu).0)
    }

    /// Dominant representative together with the parity of the number of
    /// simple reflections used to reach it (`true` means odd length).
    pub(crate) fn dominant_with_parity(&self, mu: &WeightVec) -> (WeightVec, bool) {
        let mut w = mu.clone();
        let mut odd = false;
        while let Some(i) = (0..self.rank).find(|&i| w[i] < 0) {
            w = self.reflect_weight(&w, i + 1);
            odd = !odd;
        }
        (w, odd)
    }

    /// `mu <= lambda` in the dominance order, i.e. `lambda - mu` is a
    /// nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &WeightVec, lambda: &WeightVec) -> bool {
        if mu.len() != self.rank || lambda.len() != self.rank {
            return false;
        }
        match self.weight_to_root(&(lambda - mu)) {
            Some(r) => r.is_nonnegative(),
            None => false,
        }
    }

    pub fn support(&self, mu: &WeightVec) -> Subdiagram {
        Subdiagram::new(
            (1..=self.rank)
                .filter(|&i| mu.0.get(i - 1).copied().unwrap_or(0) != 0)
                .collect(),
        )
    }

    pub fn support_analysis(&self, mu: &WeightVec) -> Result<SupportAnalysis> {
        self.check_len(mu.len())?;
        let support = self.support(mu);
        let closure = support.connected_closure(self);
        Ok(SupportAnalysis {
            closure_is_type_a: closure.is_type_a(self),
            admissible: closure.is_admissible(self),
            support,
            closure,
        })
    }
}

/// Node `k` of the chain-with-branch-at-3 E6 labelling corresponds to Bourbaki node `E6_TO_BOURBAKI[k - 1]`.
pub const E6_TO_BOURBAKI: [usize; 6] = [1, 3, 4, 5, 6, 2];

pub fn e6_to_bourbaki(node: usize) -> usize {
    E6_TO_BOURBAKI[node - 1]
}

pub fn e6_from_bourbaki(node: usize) -> usize {
    E6_TO_BOURBAKI.iter().position(|&b| b == node).unwrap() + 1
}

/// Reorders a coordinate vector given in Bourbaki E6 order into the
/// chain-with-branch-at-3 order.
pub fn e6_coords_from_bourbaki(coords: &[i64]) -> Vec<i64> {
    (1..=6).map(|k| coords[e6_to_bourbaki(k) - 1]).collect()
}

pub fn e6_coords_to_bourbaki(coords: &[i64]) -> Vec<i64> {
    (1..=6).map(|b| coords[e6_from_bourbaki(b) - 1]).collect()
}

/// A set of nodes. Classification predicates are evaluated against a diagram
/// on demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subdiagram(pub BTreeSet<usize>);

impl Subdiagram {
    pub fn new(nodes: BTreeSet<usize>) -> Self {
        Self(nodes)
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0.contains(&node)
    }

    pub fn is_connected(&self, d: &DynkinDiagram) -> bool {
        is_connected_set(d.rank, &d.edges, &self.0)
    }

    fn internal_degree(&self, d: &DynkinDiagram, node: usize) -> usize {
        d.neighbors(node).into_iter().filter(|n| self.0.contains(n)).count()
    }

    /// A connected path (type A). The empty set counts as type A.
    pub fn is_type_a(&self, d: &DynkinDiagram) -> bool {
        self.is_connected(d) && self.0.iter().all(|&n| self.internal_degree(d, n) <= 2)
    }

    /// Connected, type A, and still connected after removing the branch node.
    pub fn is_admissible(&self, d: &DynkinDiagram) -> bool {
        if !self.is_type_a(d) {
            return false;
        }
        match d.branch_node() {
            Some(b) if self.0.contains(&b) => {
                let mut rest = self.0.clone();
                rest.remove(&b);
                is_connected_set(d.rank, &d.edges, &rest)
            }
            _ => true,
        }
    }

    /// Minimal connected subdiagram containing this one: prune non-member
    /// leaves of the (tree-shaped) diagram until none remain.
    pub fn connected_closure(&self, d: &DynkinDiagram) -> Subdiagram {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut keep: BTreeSet<usize> = (1..=d.rank).collect();
        loop {
            let leaf = keep.iter().copied().find(|&n| {
                !self.0.contains(&n)
                    && d.neighbors(n).iter().filter(|m| keep.contains(m)).count() <= 1
            });
            match leaf {
                Some(n) => {
                    keep.remove(&n);
                }
                None => break,
            }
        }
        Subdiagram(keep)
    }

    /// For a type-A subdiagram, its nodes in path order starting from the
    /// endpoint with the smaller label.
    pub fn path_order(&self, d: &DynkinDiagram) -> Option<Vec<usize>> {
        if !self.is_type_a(d) {
            return None;
        }
        if self.0.is_empty() {
            return Some(Vec::new());
        }
        let start = *self
            .0
            .iter()
            .find(|&&n| self.internal_degree(d, n) <= 1)
            .expect("a path has an endpoint");
        let mut order = vec![start];
        let mut prev = None;
        let mut cur = start;
        loop {
            let next = d
                .neighbors(cur)
                .into_iter()
                .find(|n| self.0.contains(n) && Some(*n) != prev);
            match next {
                Some(n) => {
                    prev = Some(cur);
                    cur = n;
                    order.push(n);
                }
                None => break,
            }
        }
        Some(order)
    }
}

impl fmt::Display for Subdiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, n) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportAnalysis {
    pub support: Subdiagram,
    pub closure: Subdiagram,
    pub closure_is_type_a: bool,
    pub admissible: bool,
}

fn is_connected_set(_rank: usize, edges: &BTreeSet<(usize, usize)>, nodes: &BTreeSet<usize>) -> bool {
    let Some(&start) = nodes.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(n) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == n {
                b
            } else if b == n {
                a
            } else {
                continue;
            };
            if nodes.contains(&other) && seen.insert(other) {
                stack.push(other);
            }
        }
    }
    seen.len() == nodes.len()
}

fn components(edges: &BTreeSet<(usize, usize)>, nodes: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut left = nodes.clone();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        let mut comp = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(n) = stack.pop() {
            for &(a, b) in edges {
                let other = if a == n {
                    b
                } else if b == n {
                    a
                } else {
                    continue;
                };
                if left.contains(&other) && comp.insert(other) {
                    stack.push(other);
                }
            }
        }
        for n in &comp {
            left.remove(n);
        }
        out.push(comp);
    }
    out
}

/// Weyl group order of a connected simply-laced component, from its type.
fn component_weyl_order(edges: &BTreeSet<(usize, usize)>, comp: &BTreeSet<usize>) -> BigInt {
    let n = comp.len();
    let deg = |v: usize| {
        edges
            .iter()
            .filter(|&&(a, b)| (a == v && comp.contains(&b)) || (b == v && comp.contains(&a)))
            .count()
    };
    let branch = comp.iter().copied().find(|&v| deg(v) >= 3);
    let factorial = |k: usize| (1..=k).fold(BigInt::one(), |acc, x| acc * BigInt::from(x));
    match branch {
        None => factorial(n + 1),
        Some(b) => {
            // arm lengths from the branch node
            let mut arms = Vec::new();
            for &(a, c) in edges {
                let start = if a == b && comp.contains(&c) {
                    c
                } else if c == b && comp.contains(&a) {
                    a
                } else {
                    continue;
                };
                let mut len = 1;
                let mut prev = b;
                let mut cur = start;
                loop {
                    let next = edges.iter().find_map(|&(x, y)| {
                        if x == cur && y != prev && comp.contains(&y) {
                            Some(y)
                        } else if y == cur && x != prev && comp.contains(&x) {
                            Some(x)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match (arms.as_slice(), n) {
                ([1, 1, _], _) => {
                    // D_n: 2^{n-1} n!
                    BigInt::from(2).pow((n - 1) as u32) * factorial(n)
                }
                ([1, 2, 2], 6) => BigInt::from(51_840),
                ([1, 2, 3], 7) => BigInt::from(2_903_040),
                ([1, 2, 4], 8) => BigInt::from(696_729_600u64),
                _ => unreachable!("finite simply-laced types only"),
            }
        }
    }
}

/// Gauss-Jordan inverse over the rationals; also checks positive
/// definiteness through the leading principal minors.
fn invert_positive_definite(m: &[Vec<i64>]) -> Result<(Vec<Vec<BigRational>>, BigInt)> {
    let n = m.len();
    for k in 1..=n {
        let minor: Vec<Vec<i64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        if !determinant(&minor).is_positive() {
            return Err(Error::NotFiniteType);
        }
    }
    let det = determinant(m);
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::NotFiniteType)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Ok((inv, det))
}

pub(crate) fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            let f = &row[col] / &p;
            for (x, y) in row[col..n].iter_mut().zip(&pivot_row[col..n]) {
                *x -= &f * y;
            }
        }
    }
    det.to_integer()
}
