use crate::error::{HomError, Result};
use crate::exactlin::{int, Elem, Matrix, Tensor3};
use crate::structures::{
    check_comodule_coalgebra, check_cotwisting, check_module_algebra, sweep, CheckReport, ComoduleCoaction, HomAlgebra,
    HomBialgebra, HomCoalgebra, HomHopfAlgebra, ModuleAction,
};

use super::{kron_vec, linear_map, product_tensor, require, Precheck};

/// `H_alpha = (H, endo . mu, 1, Delta . endo, epsilon, S, endo)` from a
/// classical Hopf algebra and a bialgebra endomorphism.
pub fn yau_twist(classical: &HomHopfAlgebra, endo: &Matrix) -> Result<HomHopfAlgebra> {
    let n = classical.dim();
    if !classical.alpha().is_identity() {
        return Err(HomError::InvalidParameter("the input of a Yau twist must have identity structure map".into()));
    }
    if endo.rows() != n || endo.cols() != n {
        return Err(HomError::DimensionMismatch(format!(
            "endomorphism is {}x{}, expected {n}x{n}",
            endo.rows(),
            endo.cols()
        )));
    }
    let (mul, comul) = (classical.mul(), classical.comul());
    let unit = Elem::from_vector(classical.unit());
    let mut r = CheckReport::new();
    r.push(sweep("endomorphism is multiplicative", &[n, n], |i| {
        let e = Elem::basis(&[n, n], i);
        (e.fuse(0, mul).map(0, endo), e.map(0, endo).map(1, endo).fuse(0, mul))
    }));
    r.push(sweep("endomorphism is unital", &[], |_| (unit.map(0, endo), unit.clone())));
    r.push(sweep("endomorphism is comultiplicative", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, endo).split(0, comul), e.split(0, comul).map(0, endo).map(1, endo))
    }));
    r.push(sweep("endomorphism is counital", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, endo).eval(0, classical.counit()), e.eval(0, classical.counit()))
    }));
    if let Some(bad) = r.failures().next() {
        let at = bad.witness.as_ref().map(|w| format!(" at {:?}", w.index)).unwrap_or_default();
        return Err(HomError::NotAMorphism(format!("{}{at}", bad.axiom)));
    }
    let twisted_mul =
        Tensor3::from_fn(n, n, n, |i, j, k| (0..n).fold(int(0), |acc, m| acc + mul.get(i, j, m) * endo.get(m, k)));
    let twisted_comul =
        Tensor3::from_fn(n, n, n, |i, j, k| (0..n).fold(int(0), |acc, m| acc + endo.get(i, m) * comul.get(m, j, k)));
    HomHopfAlgebra::from_parts(
        twisted_mul,
        classical.unit().clone(),
        twisted_comul,
        classical.counit().clone(),
        endo.clone(),
        classical.antipode().clone(),
    )
}

/// Same data with the multiplication reversed. The antipode is carried over
/// unchanged and is not claimed to satisfy the antipode axioms.
pub fn opposite(h: &HomHopfAlgebra) -> HomHopfAlgebra {
    HomHopfAlgebra::from_parts(
        h.mul().swap_inputs(),
        h.unit().clone(),
        h.comul().clone(),
        h.counit().clone(),
        h.alpha().clone(),
        h.antipode().clone(),
    )
    .expect("shapes are preserved")
}

/// Same data with the comultiplication reversed.
pub fn co_opposite(h: &HomHopfAlgebra) -> HomHopfAlgebra {
    HomHopfAlgebra::from_parts(
        h.mul().clone(),
        h.unit().clone(),
        h.comul().swap_outputs(),
        h.counit().clone(),
        h.alpha().clone(),
        h.antipode().clone(),
    )
    .expect("shapes are preserved")
}

/// Linear dual in the dual basis `e^i`:
/// `(f g)(h) = f(alpha^-2(h_1)) g(alpha^-2(h_2))`,
/// `<Delta f, h (x) k> = f(alpha^-2(hk))`, structure map `(alpha^-1)^*`,
/// unit `epsilon`, counit `f -> f(1)`, antipode `S^*`.
pub fn dual(h: &HomHopfAlgebra) -> Result<HomHopfAlgebra> {
    let n = h.dim();
    let am2 = h.pow(-2);
    let comul = h.comul();
    let mul = h.mul();
    let split: Vec<Elem> = (0..n).map(|k| Elem::basis(&[n], &[k]).split(0, comul).map(0, &am2).map(1, &am2)).collect();
    let dual_mul = Tensor3::from_fn(n, n, n, |i, j, k| split[k].coeff(&[i, j]));
    let prod: Vec<Vec<_>> =
        (0..n * n).map(|p| Elem::basis(&[n, n], &[p / n, p % n]).fuse(0, mul).map(0, &am2).to_dense()).collect();
    let dual_comul = Tensor3::from_fn(n, n, n, |i, j, k| prod[j * n + k][i].clone());
    HomHopfAlgebra::from_parts(
        dual_mul,
        h.counit().clone(),
        dual_comul,
        h.unit().clone(),
        h.pow(-1).transpose(),
        h.antipode().transpose(),
    )
}

/// Multiplication of `A # H`:
/// `(a # h)(b # k) = a (alpha_H^-2(h_1) . alpha_A^-1(b)) # alpha_H^-1(h_2) k`.
pub(crate) fn smash_mul(a: &HomAlgebra, h: &HomBialgebra, act: &Tensor3) -> Tensor3 {
    let (na, nh) = (a.dim(), h.dim());
    let (hm2, hm1, am1) = (h.pow(-2), h.pow(-1), a.pow(-1));
    product_tensor(&[na, nh], |e| {
        e.split(1, h.comul())
            .map(1, &hm2)
            .map(2, &hm1)
            .map(3, &am1)
            .permute(&[0, 1, 3, 2, 4])
            .fuse(1, act)
            .fuse(0, a.mul())
            .fuse(1, h.mul())
    })
}

/// Hom-smash product `A # H` for a left `H`-module Hom-algebra `A`.
pub fn smash_product(a: &HomAlgebra, h: &HomBialgebra, act: &ModuleAction, pre: Precheck) -> Result<HomAlgebra> {
    require(pre, "module algebra", || Ok(check_module_algebra(h, a, act)))?;
    HomAlgebra::new(smash_mul(a, h, act.act()), kron_vec(a.unit(), h.unit()), a.alpha().kron(h.alpha()))
}

/// Coalgebra on `C (x) D` with `Delta(c (x) d) = c_1 (x) d_1^Phi (x) c_2^Phi (x) d_2`
/// for a cotwisting map `Phi: C (x) D -> D (x) C`.
pub fn cotwist_coproduct(c: &HomCoalgebra, d: &HomCoalgebra, phi: &Matrix, pre: Precheck) -> Result<HomCoalgebra> {
    let (nc, nd) = (c.dim(), d.dim());
    require(pre, "cotwisting map", || Ok(check_cotwisting(c, d, phi)))?;
    if phi.rows() != nc * nd || phi.cols() != nc * nd {
        return Err(HomError::DimensionMismatch(format!("cotwisting map is {}x{}", phi.rows(), phi.cols())));
    }
    let comul =
        super::coproduct_tensor(&[nc, nd], |e| e.split(1, d.comul()).split(0, c.comul()).map2(1, phi, (nd, nc)));
    HomCoalgebra::new(comul, kron_vec(c.counit(), d.counit()), c.alpha().kron(d.alpha()))
}

/// Cotwisting map `H (x) C -> C (x) H`,
/// `h (x) c -> alpha_C^-1(c_(0)) (x) alpha_H^-1(h) alpha_H^-2(c_(1))`,
/// for a right `H`-comodule Hom-coalgebra `C`.
pub fn comodule_cotwist(h: &HomBialgebra, c: &HomCoalgebra, co: &ComoduleCoaction, pre: Precheck) -> Result<Matrix> {
    require(pre, "comodule coalgebra", || Ok(check_comodule_coalgebra(h, c, co)))?;
    let (nh, nc) = (h.dim(), c.dim());
    let (cm1, hm1, hm2) = (c.pow(-1), h.pow(-1), h.pow(-2));
    Ok(linear_map(&[nh, nc], |e| {
        e.split(1, co.coact()).map(0, &hm1).map(1, &cm1).map(2, &hm2).permute(&[1, 0, 2]).fuse(1, h.mul())
    }))
}
