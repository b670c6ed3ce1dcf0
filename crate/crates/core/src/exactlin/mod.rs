//! Exact rational linear and multilinear algebra.
//!
//! Index conventions are global and every module relies on them:
//!
//! * A [`Matrix`] stores a linear map by row images: row `i` holds the
//!   coordinates of the image of basis vector `e_i`, so
//!   `map(e_i) = sum_j m[i][j] e_j`. Composition `f.then(g)` is therefore
//!   the ordinary matrix product `F * G`.
//! * Tensor products of spaces are flattened row-major: the pair `(i, j)` in
//!   `V (x) W` has index `i * dim(W) + j`.
//! * A multiplication tensor stores `e_i e_j = sum_k t[i][j][k] e_k`; a
//!   comultiplication tensor stores `D(e_i) = sum_{j,k} t[i][j][k] e_j (x) e_k`.

mod element;
mod matrix;
mod power;
mod scalar;
mod tensor;

pub use element::{Elem, Key};
pub use matrix::Matrix;
pub use power::PowerCache;
pub use scalar::{format_scalar, frac, int, parse_scalar, Scalar, ScalarParseError};
pub use tensor::{bilinear_apply, Tensor3};

/// Coordinates of a vector over an ordered basis.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular (rank {rank} of {dim})")]
    Singular { rank: usize, dim: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Unit vector `e_i` in a space of dimension `dim`.
pub fn basis_vector(dim: usize, i: usize) -> Vector {
    let mut v = vec![int(0); dim];
    v[i] = int(1);
    v
}

pub fn zero_vector(dim: usize) -> Vector {
    vec![int(0); dim]
}
