//! The Burau and Lawrence-Krammer-Bigelow representations of the braid group.

use std::collections::BTreeMap;

use super::{RepError, Representation};
use crate::matrix::Matrix;
use crate::presentation::{Generator, Structure};
use crate::scalar::{vars, Laurent, Ring};

/// Variable order of the Lawrence-Krammer-Bigelow ring.
pub const LKB_VARS: [&str; 2] = ["t", "q"];

/// Burau representation over `Z[t, t^-1]`: `sigma_i` acts by the block
/// `[[1-t, t], [1, 0]]` on coordinates `i, i+1`.
pub fn rep_burau(n: usize) -> Result<Representation<Laurent>, RepError> {
    if n < 2 {
        return Err(RepError::InvalidParams(format!(
            "Burau needs n >= 2, got {n}"
        )));
    }
    let vs = vars(&["t"]);
    let t = Laurent::var(&vs, "t");
    let one = Laurent::one(&vs);
    let block = Matrix::from_rows_in(
        vec![vec![one.clone() - &t, t], vec![one, Laurent::zero(&vs)]],
        vs.clone(),
    );
    let mut images = BTreeMap::new();
    for i in 1..n {
        images.insert(Generator::sigma(i), block.block_embed(i, n)?);
    }
    Representation::new(Structure::B, n, images)
}

/// Basis pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
pub(crate) fn lkb_basis(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Lawrence-Krammer-Bigelow representation over `Z[t^±1, q^±1]` on the basis
/// `x_{i,j}` ordered lexicographically; column `(i,j)` of `sigma_k` holds the
/// image of `x_{i,j}`.
pub fn rep_lkb(n: usize) -> Result<Representation<Laurent>, RepError> {
    if n < 3 {
        return Err(RepError::InvalidParams(format!(
            "LKB needs n >= 3, got {n}"
        )));
    }
    let vs = vars(&LKB_VARS);
    let t = Laurent::var(&vs, "t");
    let q = Laurent::var(&vs, "q");
    let one = Laurent::one(&vs);
    let qm1 = q.clone() - &one;
    let omq = one.clone() - &q;
    let basis = lkb_basis(n);
    let pos = |i: usize, j: usize| basis.iter().position(|&p| p == (i, j)).unwrap();
    let dim = basis.len();
    let mut images = BTreeMap::new();
    for k in 1..n {
        let mut m = Matrix::<Laurent>::zero(dim, &vs);
        for (col, &(i, j)) in basis.iter().enumerate() {
            let mut put = |target: usize, coef: Laurent| {
                let cur = m.get(target, col).clone();
                m.set(target, col, cur + coef);
            };
            let kk = pos(k, k + 1);
            if i == k && j == k + 1 {
                put(kk, t.clone() * &q.pow(2));
            } else if i < k && j == k {
                put(pos(i, k), omq.clone());
                put(pos(i, k + 1), q.clone());
            } else if i < k && j == k + 1 {
                put(pos(i, k), one.clone());
                put(kk, t.clone() * &q.pow((k - i + 1) as u32) * &qm1);
            } else if i == k && j > k + 1 {
                put(kk, t.clone() * &q * &qm1);
                put(pos(k + 1, j), q.clone());
            } else if i == k + 1 && j > k + 1 {
                put(pos(k, j), one.clone());
                put(pos(k + 1, j), omq.clone());
            } else if j < k || i > k + 1 {
                put(col, one.clone());
            } else {
                // i < k and j > k + 1
                put(col, one.clone());
                put(kk, t.clone() * &q.pow((k - i) as u32) * &qm1 * &qm1);
            }
        }
        images.insert(Generator::sigma(k), m);
    }
    Representation::new(Structure::B, n, images)
}
