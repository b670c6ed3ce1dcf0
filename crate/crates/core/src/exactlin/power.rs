use std::sync::{Arc, OnceLock};

use super::{LinError, Matrix};

const CACHED: i32 = 8;

/// Memoized integer powers of an invertible structure map.
///
/// Exponents in `[-8, 8]` are filled lazily through `OnceLock`, so concurrent
/// readers observe a single computed value.
#[derive(Debug)]
pub struct PowerCache {
    base: Matrix,
    inverse: Matrix,
    slots: Vec<OnceLock<Arc<Matrix>>>,
}

impl PowerCache {
    pub fn new(base: Matrix) -> Result<Self, LinError> {
        let inverse = base.inverse()?;
        let slots = (0..(2 * CACHED + 1)).map(|_| OnceLock::new()).collect();
        Ok(PowerCache { base, inverse, slots })
    }

    pub fn base(&self) -> &Matrix {
        &self.base
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn get(&self, k: i32) -> Arc<Matrix> {
        if (-CACHED..=CACHED).contains(&k) {
            let slot = &self.slots[(k + CACHED) as usize];
            slot.get_or_init(|| Arc::new(self.compute(k))).clone()
        } else {
            Arc::new(self.compute(k))
        }
    }

    fn compute(&self, k: i32) -> Matrix {
        let m = if k < 0 { &self.inverse } else { &self.base };
        m.power(k.abs()).expect("square by construction")
    }
}

impl Clone for PowerCache {
    fn clone(&self) -> Self {
        PowerCache {
            base: self.base.clone(),
            inverse: self.inverse.clone(),
            slots: self
                .slots
                .iter()
                .map(|s| {
                    let c = OnceLock::new();
                    if let Some(v) = s.get() {
                        let _ = c.set(v.clone());
                    }
                    c
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn cyclic_inversion_is_involution() {
        // g^i -> g^{-i} on Z/3.
        let phi = Matrix::permutation(&[0, 2, 1]);
        let cache = PowerCache::new(phi.clone()).unwrap();
        assert_eq!(*cache.get(-1), phi);
        assert!(cache.get(2).is_identity());
        assert!(cache.get(0).is_identity());
    }

    #[test]
    fn powers_compose_across_cache_boundary() {
        let m = Matrix::diagonal(&[int(2), int(-3)]);
        let cache = PowerCache::new(m).unwrap();
        for j in -7..=7 {
            for k in -7..=7 {
                let lhs = cache.get(j + k);
                let rhs = cache.get(j).then(&cache.get(k)).unwrap();
                assert_eq!(*lhs, rhs, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn singular_base_rejected() {
        assert!(PowerCache::new(Matrix::zeros(2, 2)).is_err());
    }
}
