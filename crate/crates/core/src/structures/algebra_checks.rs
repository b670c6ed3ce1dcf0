//! Axiom checkers for Hom-algebras, Hom-coalgebras, Hom-bialgebras and
//! antipodes. Every identity is swept over basis multi-indices.

use crate::exactlin::{int, Elem};

use super::report::{sweep, CheckReport};
use super::types::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra};

pub fn check_hom_algebra(a: &HomAlgebra) -> CheckReport {
    let n = a.dim();
    let mul = a.mul();
    let al = a.alpha();
    let unit = Elem::from_vector(a.unit());
    let mut r = CheckReport::new();
    r.push(sweep("structure map is multiplicative", &[n, n], |i| {
        let e = Elem::basis(&[n, n], i);
        (e.fuse(0, mul).map(0, al), e.map(0, al).map(1, al).fuse(0, mul))
    }));
    r.push(sweep("structure map fixes the unit", &[], |_| (unit.map(0, al), unit.clone())));
    r.push(sweep("left unit law", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (unit.tensor(&e).fuse(0, mul), e.map(0, al))
    }));
    r.push(sweep("right unit law", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.tensor(&unit).fuse(0, mul), e.map(0, al))
    }));
    r.push(sweep("Hom-associativity", &[n, n, n], |i| {
        let e = Elem::basis(&[n, n, n], i);
        let lhs = e.fuse(1, mul).map(0, al).fuse(0, mul);
        let rhs = e.fuse(0, mul).map(1, al).fuse(0, mul);
        (lhs, rhs)
    }));
    r
}

pub fn check_hom_coalgebra(c: &HomCoalgebra) -> CheckReport {
    let n = c.dim();
    let comul = c.comul();
    let eps = c.counit();
    let al = c.alpha();
    let mut r = CheckReport::new();
    r.push(sweep("counit is invariant under the structure map", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, al).eval(0, eps), e.eval(0, eps))
    }));
    r.push(sweep("comultiplication commutes with the structure map", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, al).split(0, comul), e.split(0, comul).map(0, al).map(1, al))
    }));
    r.push(sweep("left counit law", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.split(0, comul).eval(0, eps), e.map(0, al))
    }));
    r.push(sweep("right counit law", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.split(0, comul).eval(1, eps), e.map(0, al))
    }));
    r.push(sweep("Hom-coassociativity", &[n], |i| {
        let d = Elem::basis(&[n], i).split(0, comul);
        (d.split(0, comul).map(2, al), d.map(0, al).split(1, comul))
    }));
    r
}

/// Compatibility of the algebra and coalgebra halves: `Delta` and `epsilon`
/// are morphisms of Hom-algebras, the tensor square carrying the
/// componentwise product and `alpha (x) alpha`.
pub fn check_hom_bialgebra(b: &HomBialgebra) -> CheckReport {
    let n = b.dim();
    let (mul, comul, eps) = (b.mul(), b.comul(), b.counit());
    let unit = Elem::from_vector(b.unit());
    let mut r = CheckReport::new();
    r.push(sweep("comultiplication is multiplicative", &[n, n], |i| {
        let e = Elem::basis(&[n, n], i);
        let lhs = e.fuse(0, mul).split(0, comul);
        let rhs = e.split(1, comul).split(0, comul).permute(&[0, 2, 1, 3]).fuse(2, mul).fuse(0, mul);
        (lhs, rhs)
    }));
    r.push(sweep("comultiplication preserves the unit", &[], |_| (unit.split(0, comul), unit.tensor(&unit))));
    r.push(sweep("counit is multiplicative", &[n, n], |i| {
        let e = Elem::basis(&[n, n], i);
        (e.fuse(0, mul).eval(0, eps), e.eval(0, eps).eval(0, eps))
    }));
    r.push(sweep("counit preserves the unit", &[], |_| (unit.eval(0, eps), Elem::scalar(int(1)))));
    r
}

pub fn check_antipode(h: &HomHopfAlgebra) -> CheckReport {
    let n = h.dim();
    let (mul, comul, eps, al, s) = (h.mul(), h.comul(), h.counit(), h.alpha(), h.antipode());
    let unit = Elem::from_vector(h.unit());
    let eps_unit = |e: &Elem| e.eval(0, eps).tensor(&unit);
    let mut r = CheckReport::new();
    r.push(sweep("antipode commutes with the structure map", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, al).map(0, s), e.map(0, s).map(0, al))
    }));
    r.push(sweep("left antipode law", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.split(0, comul).map(0, s).fuse(0, mul), eps_unit(&e))
    }));
    r.push(sweep("right antipode law", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.split(0, comul).map(1, s).fuse(0, mul), eps_unit(&e))
    }));
    r.push(sweep("antipode is anti-comultiplicative", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, s).split(0, comul), e.split(0, comul).map(0, s).map(1, s).swap(0, 1))
    }));
    r.push(sweep("antipode is anti-multiplicative", &[n, n], |i| {
        let e = Elem::basis(&[n, n], i);
        (e.fuse(0, mul).map(0, s), e.map(0, s).map(1, s).swap(0, 1).fuse(0, mul))
    }));
    r.push(sweep("counit is invariant under the antipode", &[n], |i| {
        let e = Elem::basis(&[n], i);
        (e.map(0, s).eval(0, eps), e.eval(0, eps))
    }));
    r
}

/// Algebra, coalgebra, bialgebra and antipode checks in sequence.
pub fn check_hopf_suite(h: &HomHopfAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    r.extend_prefixed("algebra", check_hom_algebra(h.algebra()));
    r.extend_prefixed("coalgebra", check_hom_coalgebra(h.coalgebra()));
    r.extend_prefixed("bialgebra", check_hom_bialgebra(h.bialgebra()));
    r.extend_prefixed("antipode", check_antipode(h));
    r
}
