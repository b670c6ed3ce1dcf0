use crate::error::Result;
use crate::exactlin::{Matrix, Tensor3};
use crate::structures::{check_cocycle, HomAlgebra, HomBialgebra, HomHopfAlgebra, Side, TwoCocycle};

use super::basic::{dual, opposite, smash_mul};
use super::bicross::tensor_coproduct;
use super::double::HarpoonContext;
use super::{kron_vec, product_tensor, require, Precheck};

/// Heisenberg double `A # A^*` under the left regular action
/// `f -> b = f(b_2) b_1`:
/// `(a # f)(b # g) = a((f_1 . alpha^2) -> alpha^-1(b)) # (f_2 . alpha) g`.
pub fn heisenberg_double(a: &HomHopfAlgebra) -> Result<HomAlgebra> {
    let n = a.dim();
    let ad = dual(a)?;
    let comul = a.comul();
    let regular = Tensor3::from_fn(n, n, n, |i, j, k| comul.get(j, k, i).clone());
    HomAlgebra::new(
        smash_mul(a.algebra(), ad.bialgebra(), &regular),
        kron_vec(a.unit(), a.counit()),
        a.alpha().kron(ad.alpha()),
    )
}

/// Second form of the Drinfel'd double on `(A^op)^* (x) A`:
/// `(f (x) a)(g (x) b) = f[(alpha^-3(a_1) -> g . alpha^2) <- S^-1 alpha^-3(a_22)] (x) alpha^-2(a_21) b`,
/// harpoons taken over `A`, with the tensor product coalgebra and
/// structure map `(alpha^-1)^* (x) alpha`.
pub fn drinfeld_double_tilde(a: &HomHopfAlgebra) -> Result<HomBialgebra> {
    let n = a.dim();
    let aop = opposite(a);
    let left = dual(&aop)?;
    let harp = HarpoonContext::new(a);
    let (m2, m3) = (a.pow(-2), a.pow(-3));
    let s_inv = a.antipode_inverse()?;
    let g_twist = a.pow(2).transpose();
    let mul = product_tensor(&[n, n], |e| {
        e.split(1, a.comul())
            .split(2, a.comul())
            .map(1, &m3)
            .map(3, &m3)
            .map(3, &s_inv)
            .map(4, &g_twist)
            .map(2, &m2)
            .permute(&[0, 1, 4, 3, 2, 5])
            .fuse(1, &harp.left)
            .fuse(1, &harp.right)
            .fuse(0, left.mul())
            .fuse(1, a.mul())
    });
    HomBialgebra::from_parts(
        mul,
        kron_vec(a.counit(), a.unit()),
        tensor_coproduct(left.bialgebra(), a.bialgebra()),
        kron_vec(a.unit(), a.counit()),
        left.alpha().kron(a.alpha()),
    )
}

/// Deformed multiplication `h ._s k = s(h_1, k_1) alpha^-1(h_2 k_2)` for a
/// left cocycle, `alpha^-1(h_1 k_1) s(h_2, k_2)` for a right one.
pub fn cocycle_twist(b: &HomBialgebra, sigma: &TwoCocycle, pre: Precheck) -> Result<HomAlgebra> {
    require(pre, "cocycle", || Ok(check_cocycle(b, sigma)))?;
    let n = b.dim();
    let m1 = b.pow(-1);
    let g = &sigma.gram;
    let slot = match sigma.side {
        Side::Left => 0,
        Side::Right => 2,
    };
    let mul = product_tensor(&[n], |e| {
        e.split(1, b.comul()).split(0, b.comul()).permute(&[0, 2, 1, 3]).pair(slot, g).fuse(0, b.mul()).map(0, &m1)
    });
    HomAlgebra::new(mul, b.unit().clone(), b.alpha().clone())
}

/// `sigma(h (x) f, k (x) g) = epsilon(h) g(1) f(alpha(k))` on the Drinfel'd
/// double and `eta(f (x) a, g (x) b) = epsilon(b) f(1) g(alpha(a))` on its
/// second form.
pub fn canonical_cocycles(a: &HomHopfAlgebra) -> Result<(TwoCocycle, TwoCocycle)> {
    let n = a.dim();
    let (eps, one, al) = (a.counit(), a.unit(), a.alpha());
    let sigma = Matrix::from_fn(n * n, n * n, |p, q| {
        let (h, f, k, g) = (p / n, p % n, q / n, q % n);
        &eps[h] * &one[g] * al.get(k, f)
    });
    let eta = Matrix::from_fn(n * n, n * n, |p, q| {
        let (f, x, g, y) = (p / n, p % n, q / n, q % n);
        &eps[y] * &one[f] * al.get(x, g)
    });
    Ok((TwoCocycle::new(sigma, Side::Left)?, TwoCocycle::new(eta, Side::Right)?))
}
