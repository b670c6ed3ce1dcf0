use crate::error::{HomError, Result};
use crate::exactlin::{int, Elem, Matrix, Tensor3};
use crate::structures::{check_dual_pair, sweep, CheckReport, HomHopfAlgebra, PairingForm, RMatrix};

use super::basic::{co_opposite, dual, opposite};
use super::bicross::tensor_coproduct;
use super::{flip_factors, kron_vec, linear_map, product_tensor, require, Precheck};

/// The two actions of `H` on `H^*` by translation:
/// `<f <- h, k> = f(h alpha^-2(k))` and `<h -> f, k> = f(alpha^-2(k) h)`.
#[derive(Clone, Debug)]
pub struct HarpoonContext {
    pub host: HomHopfAlgebra,
    /// `f <- h` as a tensor on `(H^*, H, H^*)`.
    pub right: Tensor3,
    /// `h -> f` as a tensor on `(H, H^*, H^*)`.
    pub left: Tensor3,
}

impl HarpoonContext {
    pub fn new(host: &HomHopfAlgebra) -> Self {
        let n = host.dim();
        let (mul, am2) = (host.mul(), host.pow(-2));
        let right =
            Tensor3::from_fn(n, n, n, |i, j, k| (0..n).fold(int(0), |acc, m| acc + am2.get(k, m) * mul.get(j, m, i)));
        let left =
            Tensor3::from_fn(n, n, n, |j, i, k| (0..n).fold(int(0), |acc, m| acc + am2.get(k, m) * mul.get(m, j, i)));
        HarpoonContext { host: host.clone(), right, left }
    }
}

/// Drinfel'd double `H^op |><| H^*` on `H (x) H^*`:
/// `(h (x) f)(k (x) g) = alpha^-2(k_21) h (x) [alpha^-3(k_22) -> (f . alpha^2 <- S alpha^-3(k_1))] g`
/// with the tensor product coalgebra, unit `1 (x) epsilon`, counit
/// `h (x) f -> epsilon(h) f(1)` and structure map `alpha (x) (alpha^-1)^*`.
/// The antipode is `S(h (x) f) = (1 (x) S^*(f . alpha))(S^-1 alpha^-1(h) (x) epsilon)`,
/// `S^-1` being the antipode of `H^op`.
pub fn drinfeld_double(h: &HomHopfAlgebra) -> Result<HomHopfAlgebra> {
    let n = h.dim();
    let hd = dual(h)?;
    let harp = HarpoonContext::new(h);
    let (m2, m3) = (h.pow(-2), h.pow(-3));
    let f_twist = h.pow(2).transpose();
    let s = h.antipode();
    let mul = product_tensor(&[n, n], |e| {
        e.split(2, h.comul())
            .split(3, h.comul())
            .map(3, &m2)
            .map(4, &m3)
            .map(2, &m3)
            .map(2, s)
            .map(1, &f_twist)
            .fuse(1, &harp.right)
            .permute(&[0, 2, 3, 1, 4])
            .fuse(2, &harp.left)
            .fuse(2, hd.mul())
            .permute(&[1, 0, 2])
            .fuse(0, h.mul())
    });
    let comul = tensor_coproduct(h.bialgebra(), hd.bialgebra());
    let unit = kron_vec(h.unit(), h.counit());
    let counit = kron_vec(h.counit(), h.unit());
    let s_op = h.antipode_inverse()?;
    let m1 = h.pow(-1);
    let f_alpha = h.alpha().transpose();
    let antipode = linear_map(&[n, n], |e| {
        e.map(0, &m1)
            .map(0, &s_op)
            .map(1, &f_alpha)
            .map(1, hd.antipode())
            .swap(0, 1)
            .insert(0, h.unit())
            .insert(3, h.counit())
            .merge(2)
            .merge(0)
            .fuse(0, &mul)
            .unmerge(0, n, n)
    });
    HomHopfAlgebra::from_parts(mul, unit, comul, counit, h.alpha().kron(hd.alpha()), antipode)
}

/// `R = sum_i (1 (x) (alpha^-1)^*(e^i)) (x) (S^-1(e_i) (x) epsilon)` on the
/// Drinfel'd double of `h`.
pub fn canonical_r_matrix(h: &HomHopfAlgebra) -> Result<RMatrix> {
    let n = h.dim();
    let s_inv = h.antipode_inverse()?;
    let dual_alpha = h.pow(-1).transpose();
    let unit = Elem::from_vector(h.unit());
    let eps = Elem::from_vector(h.counit());
    let mut r = Elem::zero(&[n, n, n, n]);
    for i in 0..n {
        let first = unit.tensor(&Elem::from_vector(dual_alpha.row(i)));
        let second = Elem::from_vector(s_inv.row(i)).tensor(&eps);
        r = r.add(&first.tensor(&second));
    }
    let dense = r.to_dense();
    RMatrix::new(Matrix::from_fn(n * n, n * n, |p, q| dense[p * n * n + q].clone()))
}

/// The evaluation pairing `(a, f) = f(a)` between `H^op` and `H^*` with the
/// comultiplication `<Delta f, h (x) k> = f(alpha^-2(kh))`. Each factor
/// carries the inverse of its antipode, as an opposite (co)algebra does.
pub fn evaluation_pairing(h: &HomHopfAlgebra) -> Result<PairingForm> {
    let s_inv = h.antipode_inverse()?;
    let left = opposite(h).with_antipode(s_inv.as_ref().clone())?;
    let hd = co_opposite(&dual(h)?);
    let right = hd.with_antipode(s_inv.transpose())?;
    PairingForm::new(left, right, Matrix::identity(h.dim()))
}

/// Drinfel'd double of a dual pair together with its twisting map and the
/// diagnostics gathered while building it.
#[derive(Clone, Debug)]
pub struct DualPairDouble {
    pub hopf: HomHopfAlgebra,
    /// `T: B (x) A -> A (x) B`.
    pub twisting: Matrix,
    /// Embedding identities and comparisons with closed forms.
    pub diagnostics: CheckReport,
}

/// Drinfel'd double `A |><| B` of a dual pair on `A (x) B`, with
/// `T = R_1 R_2^-1 tau`, product `(a (x) b)(a' (x) b') = a a'_T (x) b_T b'`,
/// `Delta(a (x) b) = a_1 (x) b_2 (x) a_2 (x) b_1` and
/// `S = T tau (S_A (x) S_B^-1)`.
pub fn dual_pair_double(p: &PairingForm, pre: Precheck) -> Result<DualPairDouble> {
    require(pre, "dual pair", || check_dual_pair(p))?;
    let (a, b, g) = (&p.left, &p.right, &p.gram);
    let (na, nb) = (a.dim(), b.dim());
    let (a1, am1, am2) = (a.pow(1), a.pow(-1), a.pow(-2));
    let (bm1, bm2) = (b.pow(-1), b.pow(-2));
    let sa_inv = a.antipode_inverse()?;
    let sb_inv = b.antipode_inverse()?;

    // R_1(a (x) b) = (alpha(a_2), b_1) alpha^-1(a_1) (x) alpha^-1(b_2)
    let r1 = linear_map(&[na, nb], |e| {
        e.split(1, b.comul()).split(0, a.comul()).map(1, &a1).pair(1, g).map(0, &am1).map(1, &bm1)
    });
    // R_2(a (x) b) = (alpha(a_1), b_2) alpha^-1(a_2) (x) alpha^-1(b_1)
    let r2 = linear_map(&[na, nb], |e| {
        e.split(1, b.comul())
            .split(0, a.comul())
            .map(0, &a1)
            .permute(&[0, 3, 1, 2])
            .pair(0, g)
            .map(0, &am1)
            .map(1, &bm1)
    });
    let r1_inv = r1.inverse().map_err(|e| HomError::singular("first translation map", e))?;
    let r2_inv = r2.inverse().map_err(|e| HomError::singular("second translation map", e))?;
    let mut diagnostics = CheckReport::new();

    // Closed forms printed for the inverses, compared but never trusted.
    let sa_inv_alpha = sa_inv.then(&a1)?;
    let r1_inv_printed = linear_map(&[na, nb], |e| {
        e.split(1, b.comul()).split(0, a.comul()).map(1, &sa_inv_alpha).pair(1, g).map(0, &am1).map(1, &bm1)
    });
    let r2_inv_printed = linear_map(&[na, nb], |e| {
        e.split(1, b.comul())
            .split(0, a.comul())
            .map(0, &sa_inv_alpha)
            .permute(&[0, 3, 1, 2])
            .pair(0, g)
            .map(0, &am1)
            .map(1, &bm1)
    });
    for (name, printed, exact) in [("first", &r1_inv_printed, &r1_inv), ("second", &r2_inv_printed, &r2_inv)] {
        diagnostics.note(format!(
            "closed form for the inverse of the {name} translation map {}",
            if printed == exact { "agrees with the exact inverse" } else { "differs from the exact inverse" }
        ));
    }

    let tau = flip_factors(nb, na);
    let twisting = tau.then(&r2_inv)?.then(&r1)?;
    let mul = product_tensor(&[na, nb], |e| e.map2(1, &twisting, (na, nb)).fuse(0, a.mul()).fuse(1, b.mul()));
    let comul =
        super::coproduct_tensor(&[na, nb], |e| e.split(1, b.comul()).split(0, a.comul()).permute(&[0, 3, 1, 2]));
    let antipode = a.antipode().kron(&sb_inv).then(&flip_factors(na, nb))?.then(&twisting)?;

    // (S^-1 alpha(a'_1), b_2)(a'_22, alpha^-1(b_11)) a alpha^-2(a'_21) (x) alpha^-2(b_12) b'
    let printed = product_tensor(&[na, nb], |e| {
        e.split(1, b.comul())
            .split(1, b.comul())
            .split(4, a.comul())
            .split(5, a.comul())
            .map(4, &sa_inv_alpha)
            .map(1, &bm1)
            .map(2, &bm2)
            .map(5, &am2)
            .permute(&[4, 3, 6, 1, 0, 5, 2, 7])
            .pair(0, g)
            .pair(0, g)
            .fuse(0, a.mul())
            .fuse(1, b.mul())
    });
    diagnostics.note(format!(
        "closed form of the product {}",
        if printed == mul {
            "agrees with the twisted tensor product"
        } else {
            "differs from the twisted tensor product"
        }
    ));

    let hopf = HomHopfAlgebra::from_parts(
        mul,
        kron_vec(a.unit(), b.unit()),
        comul,
        kron_vec(a.counit(), b.counit()),
        a.alpha().kron(b.alpha()),
        antipode,
    )?;
    diagnostics.extend(embedding_report(&hopf, a, b));
    Ok(DualPairDouble { hopf, twisting, diagnostics })
}

/// `a |> 1` and `1 |> b` are multiplicative and
/// `a (x) b = (alpha^-1 (x) alpha^-1)((a (x) 1)(1 (x) b))`.
fn embedding_report(d: &HomHopfAlgebra, a: &HomHopfAlgebra, b: &HomHopfAlgebra) -> CheckReport {
    let (na, nb) = (a.dim(), b.dim());
    let (one_a, one_b) = (a.unit(), b.unit());
    let prod = |x: &Elem, y: &Elem| x.merge(0).tensor(&y.merge(0)).fuse(0, d.mul()).unmerge(0, na, nb);
    let mut r = CheckReport::new();
    r.push(sweep("left factor embeds as a subalgebra", &[na, na], |i| {
        let x = Elem::basis(&[na], &[i[0]]).insert(1, one_b);
        let y = Elem::basis(&[na], &[i[1]]).insert(1, one_b);
        let rhs = Elem::basis(&[na, na], i).fuse(0, a.mul()).insert(1, one_b);
        (prod(&x, &y), rhs)
    }));
    r.push(sweep("right factor embeds as a subalgebra", &[nb, nb], |i| {
        let x = Elem::basis(&[nb], &[i[0]]).insert(0, one_a);
        let y = Elem::basis(&[nb], &[i[1]]).insert(0, one_a);
        let rhs = Elem::basis(&[nb, nb], i).fuse(0, b.mul()).insert(0, one_a);
        (prod(&x, &y), rhs)
    }));
    let (am1, bm1) = (a.pow(-1), b.pow(-1));
    r.push(sweep("basis elements factor through the embeddings", &[na, nb], |i| {
        let x = Elem::basis(&[na], &[i[0]]).insert(1, one_b);
        let y = Elem::basis(&[nb], &[i[1]]).insert(0, one_a);
        (prod(&x, &y).map(0, &am1).map(1, &bm1), Elem::basis(&[na, nb], i))
    }));
    r
}
