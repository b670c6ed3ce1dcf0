use crate::error::{HomError, Result};
use crate::exactlin::{Elem, Matrix, Tensor3};
use crate::structures::{
    check_comodule_coalgebra, check_matched_pair, check_module_algebra, sweep, CheckReport, ComoduleCoaction,
    HomBialgebra, HomHopfAlgebra, MatchedPairData, ModuleAction,
};

use super::basic::{dual, opposite, smash_mul};
use super::{
    action_tensor, coaction_tensor, coproduct_tensor, kron_vec, linear_map, product_tensor, require, Precheck,
};

const COPRODUCT_OF_ACTION: &str = "(1) comultiplication of the action";
const COUNIT_OF_ACTION: &str = "(1) counit of the action";
const COACTION_OF_PRODUCT: &str = "(2) coaction of a product";
const ACTION_COACTION: &str = "(3) action and coaction commute";

/// The three compatibility hypotheses between a left action of `H` on `A`
/// and a right coaction of `A` on `H` under which `A (x) H` is a Hom-Hopf
/// algebra. Entry names start with the hypothesis number.
pub fn bicross_hypotheses(
    a: &HomHopfAlgebra,
    h: &HomHopfAlgebra,
    act: &ModuleAction,
    co: &ComoduleCoaction,
) -> CheckReport {
    let (na, nh) = (a.dim(), h.dim());
    let (ac, co_t) = (act.act(), co.coact());
    let (am1, hm1) = (a.pow(-1), h.pow(-1));
    let mut r = CheckReport::new();
    r.push(sweep(COPRODUCT_OF_ACTION, &[nh, na], |i| {
        let e = Elem::basis(&[nh, na], i);
        let lhs = e.fuse(0, ac).split(0, a.comul());
        let rhs = e
            .split(0, h.comul())
            .split(2, a.comul())
            .split(0, co_t)
            .map(0, &hm1)
            .map(1, &am1)
            .map(2, &hm1)
            .map(4, &am1)
            .permute(&[0, 3, 1, 2, 4])
            .fuse(3, ac)
            .fuse(2, a.mul())
            .fuse(0, ac);
        (lhs, rhs)
    }));
    r.push(sweep(COUNIT_OF_ACTION, &[nh, na], |i| {
        let e = Elem::basis(&[nh, na], i);
        (e.fuse(0, ac).eval(0, a.counit()), e.eval(1, a.counit()).eval(0, h.counit()))
    }));
    r.push(sweep(COACTION_OF_PRODUCT, &[nh, nh], |i| {
        let e = Elem::basis(&[nh, nh], i);
        let lhs = e.fuse(0, h.mul()).split(0, co_t);
        let rhs = e
            .split(1, co_t)
            .split(0, h.comul())
            .split(0, co_t)
            .map(0, &hm1)
            .map(1, &am1)
            .map(2, &hm1)
            .map(4, &am1)
            .permute(&[0, 3, 1, 2, 4])
            .fuse(3, ac)
            .fuse(2, a.mul())
            .fuse(0, h.mul());
        (lhs, rhs)
    }));
    r.push(sweep(ACTION_COACTION, &[nh, na], |i| {
        let e = Elem::basis(&[nh, na], i);
        let lhs = e.split(0, h.comul()).split(1, co_t).permute(&[1, 0, 3, 2]).fuse(1, ac).fuse(1, a.mul());
        let rhs = e.split(0, h.comul()).fuse(1, ac).split(0, co_t).fuse(1, a.mul());
        (lhs, rhs)
    }));
    r
}

fn require_bicross(
    a: &HomHopfAlgebra,
    h: &HomHopfAlgebra,
    act: &ModuleAction,
    co: &ComoduleCoaction,
    pre: Precheck,
) -> Result<()> {
    if pre == Precheck::Skip {
        return Ok(());
    }
    require(pre, "module algebra", || Ok(check_module_algebra(h.bialgebra(), a.algebra(), act)))?;
    require(pre, "comodule coalgebra", || Ok(check_comodule_coalgebra(a.bialgebra(), h.coalgebra(), co)))?;
    let hyp = bicross_hypotheses(a, h, act, co);
    let first = hyp.failures().next().map(|bad| bad.axiom.clone());
    match first {
        Some(hypothesis) => Err(HomError::HypothesisFailed { hypothesis, report: Box::new(hyp) }),
        None => Ok(()),
    }
}

/// Bicrossproduct Hom-Hopf algebra on `A (x) H`: smash product, smash
/// coproduct
/// `Delta(a (x) h) = a_1 (x) alpha_H^-1(h_1(0)) (x) alpha_A^-1(a_2) alpha_A^-2(h_1(1)) (x) h_2`
/// and antipode
/// `S(a (x) h) = (1 (x) S_H alpha_H^-2(h_(0))) (S_A(alpha_A^-2(a) alpha_A^-3(h_(1))) (x) 1)`.
pub fn bicrossproduct(
    a: &HomHopfAlgebra,
    h: &HomHopfAlgebra,
    act: &ModuleAction,
    co: &ComoduleCoaction,
    pre: Precheck,
) -> Result<HomHopfAlgebra> {
    let (na, nh) = (a.dim(), h.dim());
    if act.act().shape() != (nh, na, na) || co.coact().shape() != (nh, nh, na) {
        return Err(HomError::DimensionMismatch(format!(
            "action has shape {:?} and coaction {:?} for dimensions {na}, {nh}",
            act.act().shape(),
            co.coact().shape()
        )));
    }
    require_bicross(a, h, act, co, pre)?;
    let mul = smash_mul(a.algebra(), h.bialgebra(), act.act());
    let (am1, am2, am3, hm1, hm2) = (a.pow(-1), a.pow(-2), a.pow(-3), h.pow(-1), h.pow(-2));
    let co_t = co.coact();
    let comul = coproduct_tensor(&[na, nh], |e| {
        e.split(1, h.comul())
            .split(1, co_t)
            .split(0, a.comul())
            .map(1, &am1)
            .map(2, &hm1)
            .map(3, &am2)
            .permute(&[0, 2, 1, 3, 4])
            .fuse(2, a.mul())
    });
    let unit = kron_vec(a.unit(), h.unit());
    let antipode = linear_map(&[na, nh], |e| {
        e.split(1, co_t)
            .map(0, &am2)
            .map(2, &am3)
            .permute(&[1, 0, 2])
            .fuse(1, a.mul())
            .map(1, a.antipode())
            .map(0, &hm2)
            .map(0, h.antipode())
            .insert(0, a.unit())
            .insert(3, h.unit())
            .merge(2)
            .merge(0)
            .fuse(0, &mul)
            .unmerge(0, na, nh)
    });
    HomHopfAlgebra::from_parts(mul, unit, comul, kron_vec(a.counit(), h.counit()), a.alpha().kron(h.alpha()), antipode)
}

/// Action, coaction and the acting Hom-Hopf algebra used to build the
/// bicrossproduct of `H` with `H^op`.
#[derive(Clone, Debug)]
pub struct SelfBicrossData {
    pub actor: HomHopfAlgebra,
    pub action: ModuleAction,
    pub coaction: ComoduleCoaction,
}

/// `H^op` acting on `H` by `h . a = (S(alpha^-2(h_1)) alpha^-1(a)) alpha^-1(h_2)`
/// and coacting on itself by
/// `h -> alpha^-1(h_12) (x) S(alpha^-2(h_11)) alpha^-1(h_2)`.
/// The acting copy of `H^op` carries the inverse antipode.
pub fn self_bicross_data(h: &HomHopfAlgebra) -> Result<SelfBicrossData> {
    let n = h.dim();
    let (m1, m2) = (h.pow(-1), h.pow(-2));
    let s = h.antipode();
    let act = action_tensor(n, n, n, |e| {
        e.split(0, h.comul())
            .map(0, &m2)
            .map(0, s)
            .map(1, &m1)
            .map(2, &m1)
            .permute(&[0, 2, 1])
            .fuse(0, h.mul())
            .fuse(0, h.mul())
    });
    let coact = coaction_tensor(n, n, n, |e| {
        e.split(0, h.comul())
            .split(0, h.comul())
            .map(0, &m2)
            .map(0, s)
            .map(1, &m1)
            .map(2, &m1)
            .permute(&[1, 0, 2])
            .fuse(1, h.mul())
    });
    let actor = opposite(h).with_antipode(h.antipode_inverse()?.as_ref().clone())?;
    Ok(SelfBicrossData {
        actor,
        action: ModuleAction::left(act, h.alpha().clone())?,
        coaction: ComoduleCoaction::right(coact, h.alpha().clone())?,
    })
}

/// Product and coproduct of `H (x) H^op` written out directly:
/// `(a x h)(b x k) = a[(S(alpha^-4(h_11)) alpha^-2(b)) alpha^-3(h_12)] x k alpha^-1(h_2)`,
/// `Delta(a x h) = a_1 x alpha^-2(h_112) (x) alpha^-1(a_2)(S(alpha^-4(h_111)) alpha^-3(h_12)) x h_2`.
pub(crate) fn self_bicross_closed_forms(h: &HomHopfAlgebra) -> (Tensor3, Tensor3) {
    let n = h.dim();
    let (m1, m2, m3, m4) = (h.pow(-1), h.pow(-2), h.pow(-3), h.pow(-4));
    let (mul, comul, s) = (h.mul(), h.comul(), h.antipode());
    let prod = product_tensor(&[n, n], |e| {
        e.split(1, comul)
            .split(1, comul)
            .map(1, &m4)
            .map(1, s)
            .map(2, &m3)
            .map(3, &m1)
            .map(4, &m2)
            .permute(&[0, 1, 4, 2, 5, 3])
            .fuse(1, mul)
            .fuse(1, mul)
            .fuse(0, mul)
            .fuse(1, mul)
    });
    let coprod = coproduct_tensor(&[n, n], |e| {
        e.split(1, comul)
            .split(1, comul)
            .split(1, comul)
            .split(0, comul)
            .map(1, &m1)
            .map(2, &m4)
            .map(2, s)
            .map(3, &m2)
            .map(4, &m3)
            .permute(&[0, 3, 1, 2, 4, 5])
            .fuse(3, mul)
            .fuse(2, mul)
    });
    (prod, coprod)
}

/// Bicrossproduct of `H` with `H^op`, cross-checked against the closed
/// forms of its product and coproduct.
pub fn self_bicross(h: &HomHopfAlgebra, pre: Precheck) -> Result<HomHopfAlgebra> {
    let data = self_bicross_data(h)?;
    let out = bicrossproduct(h, &data.actor, &data.action, &data.coaction, pre)?;
    let (prod, coprod) = self_bicross_closed_forms(h);
    let mut r = CheckReport::new();
    r.compare("product agrees with its closed form", &tensor_elem(out.mul()), &tensor_elem(&prod));
    r.compare("coproduct agrees with its closed form", &tensor_elem(out.comul()), &tensor_elem(&coprod));
    if !r.passed() {
        return Err(HomError::CrossCheckFailed { what: "self bicrossproduct".into(), report: Box::new(r) });
    }
    Ok(out)
}

pub(crate) fn tensor_elem(t: &Tensor3) -> Elem {
    let (a, b, c) = t.shape();
    Elem::from_dense(&[a, b, c], t.entries())
}

/// Double crossed product `A |><| H` of a matched pair:
/// `(a (x) h)(b (x) g) = a(alpha_H^-2(h_1) |> alpha_A^-2(b_1)) (x) (alpha_H^-2(h_2) <| alpha_A^-2(b_2)) g`,
/// tensor product comultiplication and
/// `S(a (x) h) = (1 (x) S_H alpha_H^-1(h))(S_A alpha_A^-1(a) (x) 1)`.
pub fn double_cross_product(mp: &MatchedPairData, pre: Precheck) -> Result<HomHopfAlgebra> {
    require(pre, "matched pair", || check_matched_pair(mp))?;
    let (a, h) = (&mp.a, &mp.h);
    let (na, nh) = (a.dim(), h.dim());
    let (am1, am2, hm1, hm2) = (a.pow(-1), a.pow(-2), h.pow(-1), h.pow(-2));
    let mul = product_tensor(&[na, nh], |e| {
        e.split(2, a.comul())
            .split(1, h.comul())
            .map(1, &hm2)
            .map(2, &hm2)
            .map(3, &am2)
            .map(4, &am2)
            .permute(&[0, 1, 3, 2, 4, 5])
            .fuse(1, &mp.left)
            .fuse(2, &mp.right)
            .fuse(0, a.mul())
            .fuse(1, h.mul())
    });
    let comul = tensor_coproduct(a.bialgebra(), h.bialgebra());
    let antipode = linear_map(&[na, nh], |e| {
        e.map(0, &am1)
            .map(0, a.antipode())
            .map(1, &hm1)
            .map(1, h.antipode())
            .swap(0, 1)
            .insert(0, a.unit())
            .insert(3, h.unit())
            .merge(2)
            .merge(0)
            .fuse(0, &mul)
            .unmerge(0, na, nh)
    });
    HomHopfAlgebra::from_parts(
        mul,
        kron_vec(a.unit(), h.unit()),
        comul,
        kron_vec(a.counit(), h.counit()),
        a.alpha().kron(h.alpha()),
        antipode,
    )
}

/// `Delta(x (x) y) = x_1 (x) y_1 (x) x_2 (x) y_2`.
pub(crate) fn tensor_coproduct(x: &HomBialgebra, y: &HomBialgebra) -> Tensor3 {
    coproduct_tensor(&[x.dim(), y.dim()], |e| e.split(1, y.comul()).split(0, x.comul()).permute(&[0, 2, 1, 3]))
}

/// Matched pair `(H, A^*)` from bicrossproduct data: `f |> h = f(h_(1)) h_(0)`
/// and `<f <| h, a> = <f, h . alpha_A^-2(a)>`.
pub fn dual_matched_pair(
    a: &HomHopfAlgebra,
    h: &HomHopfAlgebra,
    act: &ModuleAction,
    co: &ComoduleCoaction,
    pre: Precheck,
) -> Result<MatchedPairData> {
    require_bicross(a, h, act, co, pre)?;
    let (na, nh) = (a.dim(), h.dim());
    let co_t = co.coact();
    let left = Tensor3::from_fn(na, nh, nh, |i, j, k| co_t.get(j, k, i).clone());
    let am2: &Matrix = &a.pow(-2);
    let act_t = act.act();
    let right = Tensor3::from_fn(na, nh, na, |i, j, k| {
        (0..na).fold(crate::exactlin::int(0), |acc, m| acc + am2.get(k, m) * act_t.get(j, m, i))
    });
    MatchedPairData::new(h.clone(), dual(a)?, left, right)
}
