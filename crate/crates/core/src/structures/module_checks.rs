//! Checkers for modules, comodules and their (co)algebra compatibilities.

use crate::exactlin::{Elem, Matrix};

use super::report::{sweep, CheckReport};
use super::types::{ComoduleCoaction, HomAlgebra, HomBialgebra, HomCoalgebra, ModuleAction};

fn carrier_matches(r: &mut CheckReport, axiom: &str, carrier: &Matrix, declared: &Matrix) {
    let n = carrier.rows();
    r.push(sweep(axiom, &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, declared), e.map(0, carrier))
    }));
}

/// Left module axioms for `h . m` over the Hom-algebra `actor`.
pub fn check_module(actor: &HomAlgebra, m: &ModuleAction) -> CheckReport {
    let (na, nm) = (actor.dim(), m.carrier_dim());
    let (act, am, al, mul) = (m.act(), m.carrier_alpha(), actor.alpha(), actor.mul());
    let unit = Elem::from_vector(actor.unit());
    let mut r = CheckReport::new();
    r.push(sweep("unit acts as the structure map", &[nm], |i| {
        let e = Elem::basis(&[nm], i);
        (unit.tensor(&e).fuse(0, act), e.map(0, am))
    }));
    r.push(sweep("action commutes with structure maps", &[na, nm], |i| {
        let e = Elem::basis(&[na, nm], i);
        (e.fuse(0, act).map(0, am), e.map(0, al).map(1, am).fuse(0, act))
    }));
    r.push(sweep("action is Hom-associative", &[na, na, nm], |i| {
        let e = Elem::basis(&[na, na, nm], i);
        let lhs = e.fuse(1, act).map(0, al).fuse(0, act);
        let rhs = e.fuse(0, mul).map(1, am).fuse(0, act);
        (lhs, rhs)
    }));
    r
}

/// Right module axioms for `m . a` over the Hom-algebra `actor`.
pub fn check_right_module(actor: &HomAlgebra, m: &ModuleAction) -> CheckReport {
    let (na, nm) = (actor.dim(), m.carrier_dim());
    let (act, am, al, mul) = (m.act(), m.carrier_alpha(), actor.alpha(), actor.mul());
    let unit = Elem::from_vector(actor.unit());
    let mut r = CheckReport::new();
    r.push(sweep("unit acts as the structure map", &[nm], |i| {
        let e = Elem::basis(&[nm], i);
        (e.tensor(&unit).fuse(0, act), e.map(0, am))
    }));
    r.push(sweep("action commutes with structure maps", &[nm, na], |i| {
        let e = Elem::basis(&[nm, na], i);
        (e.fuse(0, act).map(0, am), e.map(0, am).map(1, al).fuse(0, act))
    }));
    r.push(sweep("action is Hom-associative", &[nm, na, na], |i| {
        let e = Elem::basis(&[nm, na, na], i);
        let lhs = e.fuse(0, act).map(1, al).fuse(0, act);
        let rhs = e.fuse(1, mul).map(0, am).fuse(0, act);
        (lhs, rhs)
    }));
    r
}

/// Left `H`-module Hom-algebra: module axioms plus
/// `alpha_H^2(h) . (ab) = (h_1 . a)(h_2 . b)` and `h . 1 = epsilon(h) 1`.
pub fn check_module_algebra(actor: &HomBialgebra, carrier: &HomAlgebra, m: &ModuleAction) -> CheckReport {
    let (nh, na) = (actor.dim(), carrier.dim());
    let (act, mul_a, comul_h) = (m.act(), carrier.mul(), actor.comul());
    let a2 = actor.pow(2);
    let unit = Elem::from_vector(carrier.unit());
    let mut r = check_module(actor.algebra(), m);
    carrier_matches(&mut r, "carrier structure map matches the algebra", carrier.alpha(), m.carrier_alpha());
    r.push(sweep("action is multiplicative", &[nh, na, na], |i| {
        let e = Elem::basis(&[nh, na, na], i);
        let lhs = e.fuse(1, mul_a).map(0, &a2).fuse(0, act);
        let rhs = e.split(0, comul_h).permute(&[0, 2, 1, 3]).fuse(2, act).fuse(0, act).fuse(0, mul_a);
        (lhs, rhs)
    }));
    r.push(sweep("action preserves the unit", &[nh], |i| {
        let e = Elem::basis(&[nh], i);
        (e.tensor(&unit).fuse(0, act), e.eval(0, actor.counit()).tensor(&unit))
    }));
    r
}

/// Left `H`-module Hom-coalgebra:
/// `Delta(h . c) = h_1 . c_1 (x) h_2 . c_2` and
/// `epsilon(h . c) = epsilon(h) epsilon(c)`.
pub fn check_module_coalgebra(actor: &HomBialgebra, carrier: &HomCoalgebra, m: &ModuleAction) -> CheckReport {
    let (nh, nc) = (actor.dim(), carrier.dim());
    let act = m.act();
    let mut r = check_module(actor.algebra(), m);
    carrier_matches(&mut r, "carrier structure map matches the coalgebra", carrier.alpha(), m.carrier_alpha());
    r.push(sweep("action is comultiplicative", &[nh, nc], |i| {
        let e = Elem::basis(&[nh, nc], i);
        let lhs = e.fuse(0, act).split(0, carrier.comul());
        let rhs = e.split(1, carrier.comul()).split(0, actor.comul()).permute(&[0, 2, 1, 3]).fuse(2, act).fuse(0, act);
        (lhs, rhs)
    }));
    r.push(sweep("action preserves the counit", &[nh, nc], |i| {
        let e = Elem::basis(&[nh, nc], i);
        (e.fuse(0, act).eval(0, carrier.counit()), e.eval(0, actor.counit()).eval(0, carrier.counit()))
    }));
    r
}

/// Right `A`-module Hom-coalgebra, mirror image of
/// [`check_module_coalgebra`].
pub fn check_right_module_coalgebra(actor: &HomBialgebra, carrier: &HomCoalgebra, m: &ModuleAction) -> CheckReport {
    let (na, nc) = (actor.dim(), carrier.dim());
    let act = m.act();
    let mut r = check_right_module(actor.algebra(), m);
    carrier_matches(&mut r, "carrier structure map matches the coalgebra", carrier.alpha(), m.carrier_alpha());
    r.push(sweep("action is comultiplicative", &[nc, na], |i| {
        let e = Elem::basis(&[nc, na], i);
        let lhs = e.fuse(0, act).split(0, carrier.comul());
        let rhs = e.split(1, actor.comul()).split(0, carrier.comul()).permute(&[0, 2, 1, 3]).fuse(2, act).fuse(0, act);
        (lhs, rhs)
    }));
    r.push(sweep("action preserves the counit", &[nc, na], |i| {
        let e = Elem::basis(&[nc, na], i);
        (e.fuse(0, act).eval(0, carrier.counit()), e.eval(0, carrier.counit()).eval(0, actor.counit()))
    }));
    r
}

/// Right comodule axioms for `rho(m) = m_(0) (x) m_(1)`.
pub fn check_comodule(coactor: &HomCoalgebra, c: &ComoduleCoaction) -> CheckReport {
    let nm = c.carrier_dim();
    let (rho, am, al) = (c.coact(), c.carrier_alpha(), coactor.alpha());
    let mut r = CheckReport::new();
    r.push(sweep("counit law", &[nm], |i| {
        let e = Elem::basis(&[nm], i);
        (e.split(0, rho).eval(1, coactor.counit()), e.map(0, am))
    }));
    r.push(sweep("coaction commutes with structure maps", &[nm], |i| {
        let e = Elem::basis(&[nm], i);
        (e.split(0, rho).map(0, am).map(1, al), e.map(0, am).split(0, rho))
    }));
    r.push(sweep("coaction is Hom-coassociative", &[nm], |i| {
        let d = Elem::basis(&[nm], i).split(0, rho);
        (d.split(0, rho).map(2, al), d.map(0, am).split(1, coactor.comul()))
    }));
    r
}

/// Left comodule axioms for `lambda(m) = m_(-1) (x) m_(0)`.
pub fn check_left_comodule(coactor: &HomCoalgebra, c: &ComoduleCoaction) -> CheckReport {
    let nm = c.carrier_dim();
    let (lam, am, al) = (c.coact(), c.carrier_alpha(), coactor.alpha());
    let mut r = CheckReport::new();
    r.push(sweep("counit law", &[nm], |i| {
        let e = Elem::basis(&[nm], i);
        (e.split(0, lam).eval(0, coactor.counit()), e.map(0, am))
    }));
    r.push(sweep("coaction commutes with structure maps", &[nm], |i| {
        let e = Elem::basis(&[nm], i);
        (e.split(0, lam).map(0, al).map(1, am), e.map(0, am).split(0, lam))
    }));
    r.push(sweep("coaction is Hom-coassociative", &[nm], |i| {
        let d = Elem::basis(&[nm], i).split(0, lam);
        (d.map(0, al).split(1, lam), d.split(0, coactor.comul()).map(2, am))
    }));
    r
}

/// Right `H`-comodule Hom-coalgebra:
/// `epsilon_C(c_(0)) c_(1) = epsilon_C(c) 1_H` and
/// `c_(0)1 (x) c_(0)2 (x) alpha_H^2(c_(1)) = c_1(0) (x) c_2(0) (x) c_1(1) c_2(1)`.
pub fn check_comodule_coalgebra(coactor: &HomBialgebra, carrier: &HomCoalgebra, c: &ComoduleCoaction) -> CheckReport {
    let nc = carrier.dim();
    let rho = c.coact();
    let a2 = coactor.pow(2);
    let unit = Elem::from_vector(coactor.unit());
    let mut r = check_comodule(coactor.coalgebra(), c);
    carrier_matches(&mut r, "carrier structure map matches the coalgebra", carrier.alpha(), c.carrier_alpha());
    r.push(sweep("coaction preserves the counit", &[nc], |i| {
        let e = Elem::basis(&[nc], i);
        (e.split(0, rho).eval(0, carrier.counit()), e.eval(0, carrier.counit()).tensor(&unit))
    }));
    r.push(sweep("coaction is compatible with comultiplication", &[nc], |i| {
        let e = Elem::basis(&[nc], i);
        let lhs = e.split(0, rho).split(0, carrier.comul()).map(2, &a2);
        let rhs = e.split(0, carrier.comul()).split(1, rho).split(0, rho).permute(&[0, 2, 1, 3]).fuse(2, coactor.mul());
        (lhs, rhs)
    }));
    r
}

/// Right `H`-comodule Hom-algebra: comodule axioms plus
/// `rho(ab) = a_(0) b_(0) (x) a_(1) b_(1)` and `rho(1) = 1 (x) 1`.
pub fn check_comodule_algebra(coactor: &HomBialgebra, carrier: &HomAlgebra, c: &ComoduleCoaction) -> CheckReport {
    let na = carrier.dim();
    let rho = c.coact();
    let mut r = check_comodule(coactor.coalgebra(), c);
    carrier_matches(&mut r, "carrier structure map matches the algebra", carrier.alpha(), c.carrier_alpha());
    r.push(sweep("coaction is multiplicative", &[na, na], |i| {
        let e = Elem::basis(&[na, na], i);
        let lhs = e.fuse(0, carrier.mul()).split(0, rho);
        let rhs = e.split(1, rho).split(0, rho).permute(&[0, 2, 1, 3]).fuse(2, coactor.mul()).fuse(0, carrier.mul());
        (lhs, rhs)
    }));
    let one_a = Elem::from_vector(carrier.unit());
    let one_h = Elem::from_vector(coactor.unit());
    r.push(sweep("coaction preserves the unit", &[], |_| (one_a.split(0, rho), one_a.tensor(&one_h))));
    r
}

/// Left `H`-comodule Hom-algebra, the mirror image of
/// [`check_comodule_algebra`]:
/// `lambda(ab) = a_(-1) b_(-1) (x) a_(0) b_(0)` and `lambda(1) = 1 (x) 1`.
pub fn check_left_comodule_algebra(coactor: &HomBialgebra, carrier: &HomAlgebra, c: &ComoduleCoaction) -> CheckReport {
    let na = carrier.dim();
    let lam = c.coact();
    let mut r = check_left_comodule(coactor.coalgebra(), c);
    carrier_matches(&mut r, "carrier structure map matches the algebra", carrier.alpha(), c.carrier_alpha());
    r.push(sweep("coaction is multiplicative", &[na, na], |i| {
        let e = Elem::basis(&[na, na], i);
        let lhs = e.fuse(0, carrier.mul()).split(0, lam);
        let rhs = e.split(1, lam).split(0, lam).permute(&[0, 2, 1, 3]).fuse(2, carrier.mul()).fuse(0, coactor.mul());
        (lhs, rhs)
    }));
    let one_a = Elem::from_vector(carrier.unit());
    let one_h = Elem::from_vector(coactor.unit());
    r.push(sweep("coaction preserves the unit", &[], |_| (one_a.split(0, lam), one_h.tensor(&one_a))));
    r
}
