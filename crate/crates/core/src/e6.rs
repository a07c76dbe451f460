//! Fixed labels for the E6 positive roots.
//!
//! The non-simple positive roots carry the conventional indices
//! `beta_1 ..= beta_30` used throughout the E6 computations in this crate
//! (for instance `beta_30` is the highest root and `beta_24 ..= beta_28`
//! drive the graded-character map). The generator in
//! [`crate::rootsys`] never reads this table; it is only a naming layer.

use crate::rootsys::RootVec;

/// Simple-root coordinates of `beta_1 ..= beta_30`, in index order.
pub const BETA_ROOTS: [[i64; 6]; 30] = [
    [1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 0],
    [0, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 1],
    [1, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0],
    [0, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 1],
    [0, 1, 1, 1, 0, 0],
    [1, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 1],
    [0, 1, 1, 1, 0, 1],
    [1, 1, 1, 1, 0, 0],
    [0, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 1],
    [0, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [0, 1, 2, 1, 0, 1],
    [1, 1, 2, 1, 0, 1],
    [0, 1, 2, 1, 1, 1],
    [1, 1, 2, 1, 1, 1],
    [1, 2, 2, 1, 0, 1],
    [0, 1, 2, 2, 1, 1],
    [1, 2, 2, 1, 1, 1],
    [1, 1, 2, 2, 1, 1],
    [1, 2, 2, 2, 1, 1],
    [1, 2, 3, 2, 1, 1],
    [1, 2, 3, 2, 1, 2],
];

/// `beta_j` as a root vector, `1 <= j <= 30`.
pub fn beta(j: usize) -> RootVec {
    RootVec(BETA_ROOTS[j - 1].to_vec())
}

/// The index `j` with `beta_j == root`, if the root is a non-simple E6 root.
pub fn beta_index(root: &RootVec) -> Option<usize> {
    BETA_ROOTS
        .iter()
        .position(|b| b.as_slice() == root.coords())
        .map(|k| k + 1)
}

/// Human-readable label: `alpha_i` for simple roots, `beta_j` otherwise.
pub fn label(root: &RootVec) -> Option<String> {
    if let Some(j) = beta_index(root) {
        return Some(format!("beta_{j}"));
    }
    if root.height() == 1 && root.len() == 6 {
        let i = root.coords().iter().position(|&c| c == 1)? + 1;
        return Some(format!("alpha_{i}"));
    }
    None
}

/// Fundamental-weight coordinates of the simple roots and of
/// `beta_23 ..= beta_30`, as reference values for the weight map.
pub const REFERENCE_WEIGHTS: [(&str, [i64; 6]); 14] = [
    ("alpha_1", [2, -1, 0, 0, 0, 0]),
    ("alpha_2", [-1, 2, -1, 0, 0, 0]),
    ("alpha_3", [0, -1, 2, -1, 0, -1]),
    ("alpha_4", [0, 0, -1, 2, -1, 0]),
    ("alpha_5", [0, 0, 0, -1, 2, 0]),
    ("alpha_6", [0, 0, -1, 0, 0, 2]),
    ("beta_23", [1, -1, 1, -1, 1, 0]),
    ("beta_24", [0, 1, 0, 0, -1, 0]),
    ("beta_25", [-1, 0, 0, 1, 0, 0]),
    ("beta_26", [0, 1, 0, -1, 1, 0]),
    ("beta_27", [1, -1, 0, 1, 0, 0]),
    ("beta_28", [0, 1, -1, 1, 0, 0]),
    ("beta_29", [0, 0, 1, 0, 0, -1]),
    ("beta_30", [0, 0, 0, 0, 0, 1]),
];

/// Root with the given label (`alpha_i` or `beta_j`).
pub fn root_by_label(label: &str) -> Option<RootVec> {
    if let Some(j) = label.strip_prefix("beta_") {
        let j: usize = j.parse().ok()?;
        return (1..=30).contains(&j).then(|| beta(j));
    }
    let i: usize = label.strip_prefix("alpha_")?.parse().ok()?;
    (1..=6).contains(&i).then(|| RootVec::unit(6, i))
}
