use num_traits::Zero;

use super::{int, LinError, Scalar, Vector};

/// Dense rank-3 array of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    shape: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(n1: usize, n2: usize, n3: usize) -> Self {
        Tensor3 { shape: (n1, n2, n3), data: vec![int(0); n1 * n2 * n3] }
    }

    pub fn from_fn(n1: usize, n2: usize, n3: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(n1 * n2 * n3);
        for i in 0..n1 {
            for j in 0..n2 {
                for k in 0..n3 {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { shape: (n1, n2, n3), data }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.shape.1 + j) * self.shape.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] += v;
    }

    /// The fiber `t[i][j][..]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.data[o..o + self.shape.2]
    }

    /// The slab `t[i][..][..]` flattened row-major.
    pub fn slab(&self, i: usize) -> &[Scalar] {
        let w = self.shape.1 * self.shape.2;
        &self.data[i * w..(i + 1) * w]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let (_, n2, n3) = self.shape;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| ((o / (n2 * n3), (o / n3) % n2, o % n3), v))
    }

    /// Swaps the first two indices (e.g. the opposite multiplication).
    pub fn swap_inputs(&self) -> Tensor3 {
        let (a, b, c) = self.shape;
        Tensor3::from_fn(b, a, c, |i, j, k| self.get(j, i, k).clone())
    }

    /// Swaps the last two indices (e.g. the opposite comultiplication).
    pub fn swap_outputs(&self) -> Tensor3 {
        let (a, b, c) = self.shape;
        Tensor3::from_fn(a, c, b, |i, j, k| self.get(i, k, j).clone())
    }
}

/// `sum_{i,j} x_i y_j t[i][j][..]`.
pub fn bilinear_apply(t: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Result<Vector, LinError> {
    let (n1, n2, n3) = t.shape();
    if x.len() != n1 || y.len() != n2 {
        return Err(LinError::DimensionMismatch(format!(
            "bilinear map of shape {:?} applied to vectors of length {} and {}",
            t.shape(),
            x.len(),
            y.len()
        )));
    }
    let mut out = vec![int(0); n3];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            for (o, t) in out.iter_mut().zip(t.fiber(i, j)) {
                if !t.is_zero() {
                    *o += &c * t;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibers_and_swaps() {
        let t = Tensor3::from_fn(2, 3, 4, |i, j, k| int((100 * i + 10 * j + k) as i64));
        assert_eq!(t.get(1, 2, 3), &int(123));
        assert_eq!(t.fiber(1, 0)[2], int(102));
        assert_eq!(t.swap_inputs().get(2, 1, 3), &int(123));
        assert_eq!(t.swap_outputs().get(1, 3, 2), &int(123));
    }

    #[test]
    fn bilinear_dimension_checked() {
        let t = Tensor3::zeros(2, 2, 2);
        assert!(bilinear_apply(&t, &[int(1)], &[int(1), int(0)]).is_err());
    }
}
