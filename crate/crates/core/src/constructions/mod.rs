//! Builders for derived Hom-algebraic objects.
//!
//! Every builder evaluates its defining formula on basis elements with the
//! slot engine in [`crate::exactlin::Elem`] and assembles dense structure
//! constants. Builders with hypotheses verify them first unless called with
//! [`Precheck::Skip`].

mod basic;
mod bicross;
mod double;
mod heisenberg;

pub use basic::{co_opposite, comodule_cotwist, cotwist_coproduct, dual, opposite, smash_product, yau_twist};
pub use bicross::{
    bicross_hypotheses, bicrossproduct, double_cross_product, dual_matched_pair, self_bicross, self_bicross_data,
    SelfBicrossData,
};
pub use double::{
    canonical_r_matrix, drinfeld_double, dual_pair_double, evaluation_pairing, DualPairDouble, HarpoonContext,
};
pub use heisenberg::{canonical_cocycles, cocycle_twist, drinfeld_double_tilde, heisenberg_double};

use rayon::prelude::*;

use crate::error::{HomError, Result};
use crate::exactlin::{Elem, Matrix, Scalar, Tensor3};
use crate::structures::CheckReport;

/// Whether a builder verifies its hypotheses before building.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Precheck {
    #[default]
    Verify,
    Skip,
}

pub(crate) fn require(pre: Precheck, what: &str, report: impl FnOnce() -> Result<CheckReport>) -> Result<()> {
    if pre == Precheck::Skip {
        return Ok(());
    }
    let report = report()?;
    if report.passed() {
        Ok(())
    } else {
        Err(HomError::PreconditionFailed { what: what.to_string(), report: Box::new(report) })
    }
}

fn multi_index(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for s in (0..dims.len()).rev() {
        idx[s] = flat % dims[s];
        flat /= dims[s];
    }
    idx
}

/// Multiplication tensor on `V_1 (x) ... (x) V_k` from a formula taking the
/// `2k`-slot element `x (x) y` to the `k`-slot product.
pub(crate) fn product_tensor(dims: &[usize], f: impl Fn(&Elem) -> Elem + Sync) -> Tensor3 {
    let n: usize = dims.iter().product();
    let both: Vec<usize> = dims.iter().chain(dims).copied().collect();
    let rows: Vec<Vec<Scalar>> = (0..n * n)
        .into_par_iter()
        .map(|p| {
            let out = f(&Elem::basis(&both, &multi_index(p, &both)));
            debug_assert_eq!(out.dims(), dims);
            out.to_dense()
        })
        .collect();
    Tensor3::from_fn(n, n, n, |i, j, k| rows[i * n + j][k].clone())
}

/// Comultiplication tensor on a composite space from a formula taking a
/// `k`-slot basis element to a `2k`-slot element.
pub(crate) fn coproduct_tensor(dims: &[usize], f: impl Fn(&Elem) -> Elem + Sync) -> Tensor3 {
    let n: usize = dims.iter().product();
    let rows: Vec<Vec<Scalar>> =
        (0..n).into_par_iter().map(|p| f(&Elem::basis(dims, &multi_index(p, dims))).to_dense()).collect();
    Tensor3::from_fn(n, n, n, |i, j, k| rows[i][j * n + k].clone())
}

/// Matrix of a linear map between composite spaces.
pub(crate) fn linear_map(in_dims: &[usize], f: impl Fn(&Elem) -> Elem + Sync) -> Matrix {
    let n: usize = in_dims.iter().product();
    let rows: Vec<Vec<Scalar>> =
        (0..n).into_par_iter().map(|p| f(&Elem::basis(in_dims, &multi_index(p, in_dims))).to_dense()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_fn(n, cols, |i, j| rows[i][j].clone())
}

/// Bilinear action tensor `t[i][j][..]` from a formula on 2-slot basis
/// elements.
pub(crate) fn action_tensor(d1: usize, d2: usize, d3: usize, f: impl Fn(&Elem) -> Elem + Sync) -> Tensor3 {
    let rows: Vec<Vec<Scalar>> =
        (0..d1 * d2).into_par_iter().map(|p| f(&Elem::basis(&[d1, d2], &[p / d2, p % d2])).to_dense()).collect();
    Tensor3::from_fn(d1, d2, d3, |i, j, k| rows[i * d2 + j][k].clone())
}

/// Coaction tensor `t[i][..][..]` from a formula on 1-slot basis elements.
pub(crate) fn coaction_tensor(d1: usize, d2: usize, d3: usize, f: impl Fn(&Elem) -> Elem + Sync) -> Tensor3 {
    let rows: Vec<Vec<Scalar>> = (0..d1).into_par_iter().map(|i| f(&Elem::basis(&[d1], &[i])).to_dense()).collect();
    Tensor3::from_fn(d1, d2, d3, |i, j, k| rows[i][j * d3 + k].clone())
}

/// Tensor product of two vectors under the row-major pair flattening.
pub(crate) fn kron_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Permutation `V (x) W -> W (x) V` on flattened indices.
pub fn flip_factors(d1: usize, d2: usize) -> Matrix {
    let perm: Vec<usize> = (0..d1 * d2).map(|p| (p % d2) * d1 + p / d2).collect();
    Matrix::permutation(&perm)
}

pub(crate) use bicross::{self_bicross_closed_forms, tensor_elem};
