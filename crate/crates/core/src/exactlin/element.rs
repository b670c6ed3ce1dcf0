//! Elements of tensor products `V_0 (x) ... (x) V_{k-1}` stored as sparse
//! coefficient maps over basis multi-indices.
//!
//! This is the evaluation engine behind every Sweedler-notation formula:
//! a formula is written as a pipeline of slot operations (`split` for a
//! comultiplication or coaction, `fuse` for a product or action, `map` for a
//! linear map, `eval`/`pair` for functionals) applied to a basis element.

use std::collections::BTreeMap;

use num_traits::Zero;
use smallvec::SmallVec;

use super::{int, Matrix, Scalar, Tensor3, Vector};

pub type Key = SmallVec<[u32; 6]>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    dims: Vec<usize>,
    terms: BTreeMap<Key, Scalar>,
}

impl Elem {
    pub fn zero(dims: &[usize]) -> Self {
        Elem { dims: dims.to_vec(), terms: BTreeMap::new() }
    }

    /// The scalar `c` as an element of the empty tensor product.
    pub fn scalar(c: Scalar) -> Self {
        let mut e = Elem::zero(&[]);
        if !c.is_zero() {
            e.terms.insert(Key::new(), c);
        }
        e
    }

    pub fn basis(dims: &[usize], idx: &[usize]) -> Self {
        debug_assert_eq!(dims.len(), idx.len());
        debug_assert!(idx.iter().zip(dims).all(|(i, d)| i < d));
        let mut e = Elem::zero(dims);
        e.terms.insert(idx.iter().map(|&i| i as u32).collect(), int(1));
        e
    }

    pub fn from_vector(v: &[Scalar]) -> Self {
        let mut e = Elem::zero(&[v.len()]);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.terms.insert(smallvec::smallvec![i as u32], c.clone());
            }
        }
        e
    }

    /// Inverse of [`Elem::to_dense`].
    pub fn from_dense(dims: &[usize], v: &[Scalar]) -> Self {
        let mut e = Elem::zero(dims);
        for (flat, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut key: Key = SmallVec::from_elem(0, dims.len());
            let mut rest = flat;
            for s in (0..dims.len()).rev() {
                key[s] = (rest % dims[s]) as u32;
                rest /= dims[s];
            }
            e.terms.insert(key, c.clone());
        }
        e
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        let key: Key = idx.iter().map(|&i| i as u32).collect();
        self.terms.get(&key).cloned().unwrap_or_else(|| int(0))
    }

    /// Value of an arity-0 element.
    pub fn as_scalar(&self) -> Scalar {
        debug_assert!(self.dims.is_empty());
        self.terms.get(&Key::new()).cloned().unwrap_or_else(|| int(0))
    }

    /// Dense coordinates over the row-major flattened product basis.
    pub fn to_dense(&self) -> Vector {
        let size: usize = self.dims.iter().product();
        let mut out = vec![int(0); size];
        for (k, c) in &self.terms {
            out[self.flat_index(k)] = c.clone();
        }
        out
    }

    pub fn flat_index(&self, key: &Key) -> usize {
        key.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| acc * d + i as usize)
    }

    fn rebuild(&self, dims: Vec<usize>, mut f: impl FnMut(&Key, &Scalar, &mut dyn FnMut(Key, Scalar))) -> Elem {
        let mut terms: BTreeMap<Key, Scalar> = BTreeMap::new();
        {
            let mut emit = |k: Key, c: Scalar| {
                if c.is_zero() {
                    return;
                }
                match terms.entry(k) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                    }
                }
            };
            for (k, c) in &self.terms {
                f(k, c, &mut emit);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Elem { dims, terms }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        assert_eq!(self.dims, other.dims, "adding elements of different spaces");
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            *terms.entry(k.clone()).or_insert_with(|| int(0)) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Elem { dims: self.dims.clone(), terms }
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Elem {
        if c.is_zero() {
            return Elem::zero(&self.dims);
        }
        Elem { dims: self.dims.clone(), terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Applies a linear map to one slot.
    pub fn map(&self, slot: usize, m: &Matrix) -> Elem {
        assert_eq!(self.dims[slot], m.rows(), "map: slot {slot} has wrong dimension");
        let mut dims = self.dims.clone();
        dims[slot] = m.cols();
        self.rebuild(dims, |k, c, emit| {
            for (j, v) in m.row(k[slot] as usize).iter().enumerate() {
                if !v.is_zero() {
                    let mut nk = k.clone();
                    nk[slot] = j as u32;
                    emit(nk, c * v);
                }
            }
        })
    }

    /// Replaces slot `s` holding `e_i` by two slots `(s, s+1)` holding
    /// `sum t[i][j][k] e_j (x) e_k`.
    pub fn split(&self, slot: usize, t: &Tensor3) -> Elem {
        let (a, b, c3) = t.shape();
        assert_eq!(self.dims[slot], a, "split: slot {slot} has wrong dimension");
        let mut dims = self.dims.clone();
        dims[slot] = b;
        dims.insert(slot + 1, c3);
        self.rebuild(dims, |k, c, emit| {
            let i = k[slot] as usize;
            for (o, v) in t.slab(i).iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut nk: Key = Key::with_capacity(k.len() + 1);
                nk.extend_from_slice(&k[..slot]);
                nk.push((o / c3) as u32);
                nk.push((o % c3) as u32);
                nk.extend_from_slice(&k[slot + 1..]);
                emit(nk, c * v);
            }
        })
    }

    /// Replaces slots `(s, s+1)` holding `e_i (x) e_j` by one slot holding
    /// `sum_k t[i][j][k] e_k`.
    pub fn fuse(&self, slot: usize, t: &Tensor3) -> Elem {
        let (a, b, c3) = t.shape();
        assert_eq!((self.dims[slot], self.dims[slot + 1]), (a, b), "fuse: slots {slot},{} mismatch", slot + 1);
        let mut dims = self.dims.clone();
        dims[slot] = c3;
        dims.remove(slot + 1);
        self.rebuild(dims, |k, c, emit| {
            let fiber = t.fiber(k[slot] as usize, k[slot + 1] as usize);
            for (o, v) in fiber.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut nk: Key = Key::with_capacity(k.len() - 1);
                nk.extend_from_slice(&k[..slot]);
                nk.push(o as u32);
                nk.extend_from_slice(&k[slot + 2..]);
                emit(nk, c * v);
            }
        })
    }

    /// Applies a functional to one slot, removing it.
    pub fn eval(&self, slot: usize, functional: &[Scalar]) -> Elem {
        assert_eq!(self.dims[slot], functional.len(), "eval: slot {slot} has wrong dimension");
        let mut dims = self.dims.clone();
        dims.remove(slot);
        self.rebuild(dims, |k, c, emit| {
            let w = &functional[k[slot] as usize];
            if !w.is_zero() {
                let mut nk = k.clone();
                nk.remove(slot);
                emit(nk, c * w);
            }
        })
    }

    /// Applies a bilinear form to slots `(s, s+1)`, removing both.
    pub fn pair(&self, slot: usize, gram: &Matrix) -> Elem {
        assert_eq!((self.dims[slot], self.dims[slot + 1]), (gram.rows(), gram.cols()), "pair: shape mismatch");
        let mut dims = self.dims.clone();
        dims.drain(slot..slot + 2);
        self.rebuild(dims, |k, c, emit| {
            let w = gram.get(k[slot] as usize, k[slot + 1] as usize);
            if !w.is_zero() {
                let mut nk = k.clone();
                nk.drain(slot..slot + 2);
                emit(nk, c * w);
            }
        })
    }

    /// Applies a linear map `V_s (x) V_{s+1} -> W_1 (x) W_2` given as a matrix
    /// on the flattened pair index.
    pub fn map2(&self, slot: usize, m: &Matrix, out: (usize, usize)) -> Elem {
        let (d1, d2) = (self.dims[slot], self.dims[slot + 1]);
        assert_eq!(m.rows(), d1 * d2, "map2: input dimension mismatch");
        assert_eq!(m.cols(), out.0 * out.1, "map2: output dimension mismatch");
        let mut dims = self.dims.clone();
        dims[slot] = out.0;
        dims[slot + 1] = out.1;
        self.rebuild(dims, |k, c, emit| {
            let row = m.row(k[slot] as usize * d2 + k[slot + 1] as usize);
            for (o, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let mut nk = k.clone();
                    nk[slot] = (o / out.1) as u32;
                    nk[slot + 1] = (o % out.1) as u32;
                    emit(nk, c * v);
                }
            }
        })
    }

    /// Reorders slots: new slot `p` is old slot `order[p]`.
    pub fn permute(&self, order: &[usize]) -> Elem {
        assert_eq!(order.len(), self.arity());
        let dims = order.iter().map(|&o| self.dims[o]).collect();
        self.rebuild(dims, |k, c, emit| emit(order.iter().map(|&o| k[o]).collect(), c.clone()))
    }

    /// Swaps two slots.
    pub fn swap(&self, a: usize, b: usize) -> Elem {
        let mut order: Vec<usize> = (0..self.arity()).collect();
        order.swap(a, b);
        self.permute(&order)
    }

    /// Moves slot `from` so that it ends up at position `to`.
    pub fn move_slot(&self, from: usize, to: usize) -> Elem {
        let mut order: Vec<usize> = (0..self.arity()).collect();
        let s = order.remove(from);
        order.insert(to, s);
        self.permute(&order)
    }

    /// Outer product `self (x) other`.
    pub fn tensor(&self, other: &Elem) -> Elem {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                terms.insert(k, c1 * c2);
            }
        }
        Elem { dims, terms }
    }

    /// Inserts a fixed vector as a new slot at position `slot`.
    pub fn insert(&self, slot: usize, v: &[Scalar]) -> Elem {
        let mut dims = self.dims.clone();
        dims.insert(slot, v.len());
        self.rebuild(dims, |k, c, emit| {
            for (i, w) in v.iter().enumerate() {
                if !w.is_zero() {
                    let mut nk = k.clone();
                    nk.insert(slot, i as u32);
                    emit(nk, c * w);
                }
            }
        })
    }

    /// Combines slots `(s, s+1)` into one slot over the flattened pair index.
    pub fn merge(&self, slot: usize) -> Elem {
        let d2 = self.dims[slot + 1];
        let mut dims = self.dims.clone();
        dims[slot] *= d2;
        dims.remove(slot + 1);
        self.rebuild(dims, |k, c, emit| {
            let mut nk = k.clone();
            nk[slot] = k[slot] * d2 as u32 + k[slot + 1];
            nk.remove(slot + 1);
            emit(nk, c.clone())
        })
    }

    /// Splits a flattened pair slot back into two slots of sizes `(d1, d2)`.
    pub fn unmerge(&self, slot: usize, d1: usize, d2: usize) -> Elem {
        assert_eq!(self.dims[slot], d1 * d2);
        let mut dims = self.dims.clone();
        dims[slot] = d1;
        dims.insert(slot + 1, d2);
        self.rebuild(dims, |k, c, emit| {
            let mut nk = k.clone();
            nk[slot] = k[slot] / d2 as u32;
            nk.insert(slot + 1, k[slot] % d2 as u32);
            emit(nk, c.clone())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::frac;

    #[test]
    fn split_then_fuse_roundtrip_on_group_algebra() {
        // k[Z/2]: e_i e_j = e_{i+j}, D(e_i) = e_i (x) e_i.
        let mul = Tensor3::from_fn(2, 2, 2, |i, j, k| int(((i + j) % 2 == k) as i64));
        let comul = Tensor3::from_fn(2, 2, 2, |i, j, k| int((i == j && j == k) as i64));
        let g = Elem::basis(&[2], &[1]);
        let d = g.split(0, &comul);
        assert_eq!(d, Elem::basis(&[2, 2], &[1, 1]));
        assert_eq!(d.fuse(0, &mul), Elem::basis(&[2], &[0]));
    }

    #[test]
    fn dense_roundtrip_and_permute() {
        let v = vec![int(0), frac(1, 2), int(3), int(0), int(0), int(-1)];
        let e = Elem::from_dense(&[2, 3], &v);
        assert_eq!(e.to_dense(), v);
        let t = e.permute(&[1, 0]);
        assert_eq!(t.coeff(&[1, 0]), frac(1, 2));
        assert_eq!(t.coeff(&[2, 1]), int(-1));
        assert_eq!(e.merge(0).unmerge(0, 2, 3), e);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = Elem::basis(&[2], &[0]);
        assert!(a.sub(&a).is_zero());
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let e = Elem::from_vector(&[int(1), int(-1)]).map(0, &m);
        assert!(e.is_zero());
    }
}
