//! Checkers for structures relating two objects: cotwisting and twisting
//! maps, matched pairs, dual pairs, 2-cocycles and R-matrices.

use crate::error::Result;
use crate::exactlin::{int, Elem, Matrix};

use super::module_checks::{check_module_coalgebra, check_right_module_coalgebra};
use super::report::{sweep, CheckEntry, CheckReport, Witness};
use super::types::{
    HomAlgebra, HomBialgebra, HomCoalgebra, MatchedPairData, ModuleAction, PairingForm, RMatrix, Side, TwoCocycle,
};

/// Hom-cotwisting map `Phi: C (x) D -> D (x) C`, given as a matrix on the
/// flattened pair index. The counit conditions are checked in the form
/// `epsilon_C(c^Phi) d^Phi = epsilon_C(c) d`, `epsilon_D(d^Phi) c^Phi = epsilon_D(d) c`.
pub fn check_cotwisting(c: &HomCoalgebra, d: &HomCoalgebra, phi: &Matrix) -> CheckReport {
    let (nc, nd) = (c.dim(), d.dim());
    let mut r = CheckReport::new();
    if phi.rows() != nc * nd || phi.cols() != nc * nd {
        r.push(CheckEntry::fail(
            "cotwisting map has the right shape",
            Witness { index: vec![phi.rows(), phi.cols()], lhs: vec![], rhs: vec![] },
        ));
        return r;
    }
    let (ac, ad) = (c.alpha(), d.alpha());
    let out = (nd, nc);
    r.push(sweep("compatible with comultiplication of the second factor", &[nc, nd], |i| {
        let e = Elem::basis(&[nc, nd], i);
        let lhs = e.map2(0, phi, out).split(0, d.comul()).map(2, ac);
        let rhs = e.map(0, ac).split(1, d.comul()).map2(0, phi, out).map2(1, phi, out);
        (lhs, rhs)
    }));
    r.push(sweep("compatible with comultiplication of the first factor", &[nc, nd], |i| {
        let e = Elem::basis(&[nc, nd], i);
        let lhs = e.map2(0, phi, out).map(0, ad).split(1, c.comul());
        let rhs = e.split(0, c.comul()).map(2, ad).map2(1, phi, out).map2(0, phi, out);
        (lhs, rhs)
    }));
    r.push(sweep("commutes with structure maps", &[nc, nd], |i| {
        let e = Elem::basis(&[nc, nd], i);
        (e.map2(0, phi, out).map(0, ad).map(1, ac), e.map(0, ac).map(1, ad).map2(0, phi, out))
    }));
    r.push(sweep("first counit condition", &[nc, nd], |i| {
        let e = Elem::basis(&[nc, nd], i);
        (e.map2(0, phi, out).eval(1, c.counit()), e.eval(0, c.counit()))
    }));
    r.push(sweep("second counit condition", &[nc, nd], |i| {
        let e = Elem::basis(&[nc, nd], i);
        (e.map2(0, phi, out).eval(0, d.counit()), e.eval(1, d.counit()))
    }));
    r
}

/// Hom-twisting map `T: B (x) A -> A (x) B`.
pub fn check_twisting(a: &HomAlgebra, b: &HomAlgebra, t: &Matrix) -> CheckReport {
    let (na, nb) = (a.dim(), b.dim());
    let mut r = CheckReport::new();
    if t.rows() != na * nb || t.cols() != na * nb {
        r.push(CheckEntry::fail(
            "twisting map has the right shape",
            Witness { index: vec![t.rows(), t.cols()], lhs: vec![], rhs: vec![] },
        ));
        return r;
    }
    let out = (na, nb);
    let (aa, ab) = (a.alpha(), b.alpha());
    r.push(sweep("commutes with structure maps", &[nb, na], |i| {
        let e = Elem::basis(&[nb, na], i);
        (e.map2(0, t, out).map(0, aa).map(1, ab), e.map(0, ab).map(1, aa).map2(0, t, out))
    }));
    r.push(sweep("compatible with multiplication of B", &[nb, nb, na], |i| {
        let e = Elem::basis(&[nb, nb, na], i);
        let lhs = e.fuse(0, b.mul()).map(1, aa).map2(0, t, out);
        let rhs = e.map2(1, t, out).map2(0, t, out).fuse(1, b.mul()).map(0, aa);
        (lhs, rhs)
    }));
    r.push(sweep("compatible with multiplication of A", &[nb, na, na], |i| {
        let e = Elem::basis(&[nb, na, na], i);
        let lhs = e.fuse(1, a.mul()).map(0, ab).map2(0, t, out);
        let rhs = e.map2(0, t, out).map2(1, t, out).fuse(0, a.mul()).map(1, ab);
        (lhs, rhs)
    }));
    r
}

/// Matched pair `(A, H)`: `A` a left `H`-module Hom-coalgebra under `|>`,
/// `H` a right `A`-module Hom-coalgebra under `<|`, and the three
/// compatibility identities.
pub fn check_matched_pair(mp: &MatchedPairData) -> Result<CheckReport> {
    let (a, h) = (&mp.a, &mp.h);
    let (na, nh) = (a.dim(), h.dim());
    let (lt, rt) = (&mp.left, &mp.right);
    let mut r = CheckReport::new();
    let left = ModuleAction::left(lt.clone(), a.alpha().clone())?;
    let right = ModuleAction::right(rt.clone(), h.alpha().clone())?;
    r.extend_prefixed("left action", check_module_coalgebra(h.bialgebra(), a.coalgebra(), &left));
    r.extend_prefixed("right action", check_right_module_coalgebra(a.bialgebra(), h.coalgebra(), &right));
    let (hm1, hm2, hm3) = (h.pow(-1), h.pow(-2), h.pow(-3));
    let (am1, am2, am3) = (a.pow(-1), a.pow(-2), a.pow(-3));
    r.push(sweep("right action on a product", &[nh, nh, na], |i| {
        let e = Elem::basis(&[nh, nh, na], i);
        let lhs = e.fuse(0, h.mul()).fuse(0, rt);
        let rhs = e
            .split(2, a.comul())
            .split(1, h.comul())
            .permute(&[0, 1, 3, 2, 4])
            .map(1, &hm2)
            .map(2, &am3)
            .map(3, &hm1)
            .map(4, &am2)
            .fuse(1, lt)
            .fuse(0, rt)
            .fuse(1, rt)
            .fuse(0, h.mul());
        (lhs, rhs)
    }));
    r.push(sweep("left action on a product", &[nh, na, na], |i| {
        let e = Elem::basis(&[nh, na, na], i);
        let lhs = e.fuse(1, a.mul()).fuse(0, lt);
        let rhs = e
            .split(1, a.comul())
            .split(0, h.comul())
            .permute(&[0, 2, 1, 3, 4])
            .map(0, &hm2)
            .map(1, &am1)
            .map(2, &hm3)
            .map(3, &am2)
            .fuse(2, rt)
            .fuse(2, lt)
            .fuse(0, lt)
            .fuse(0, a.mul());
        (lhs, rhs)
    }));
    r.push(sweep("actions commute with the flip", &[nh, na], |i| {
        let e = Elem::basis(&[nh, na], i).split(1, a.comul()).split(0, h.comul());
        let lhs = e.permute(&[0, 2, 1, 3]).fuse(0, rt).fuse(1, lt);
        let rhs = e.permute(&[1, 3, 0, 2]).fuse(0, rt).fuse(1, lt);
        (lhs, rhs)
    }));
    Ok(r)
}

/// Dual pair conditions for `(a, b)`. The multiplicativity condition on the
/// right factor is checked as `(a, bb') = (a_1, alpha_B^2(b))(a_2, alpha_B^2(b'))`;
/// whether the swapped reading also holds is recorded as a note.
pub fn check_dual_pair(p: &PairingForm) -> Result<CheckReport> {
    let (a, b, g) = (&p.left, &p.right, &p.gram);
    let (na, nb) = (a.dim(), b.dim());
    let sb_inv = b.antipode_inverse()?;
    let (one_a, one_b) = (Elem::from_vector(a.unit()), Elem::from_vector(b.unit()));
    let (a2, b2) = (a.pow(2), b.pow(2));
    let mut r = CheckReport::new();
    r.push(sweep("pairing with the unit of the right factor is the counit", &[na], |i| {
        let e = Elem::basis(&[na], i);
        (e.tensor(&one_b).pair(0, g), e.eval(0, a.counit()))
    }));
    r.push(sweep("pairing with the unit of the left factor is the counit", &[nb], |i| {
        let e = Elem::basis(&[nb], i);
        (one_a.tensor(&e).pair(0, g), e.eval(0, b.counit()))
    }));
    r.push(sweep("pairing is invariant under structure maps", &[na, nb], |i| {
        let e = Elem::basis(&[na, nb], i);
        (e.map(0, a.alpha()).map(1, b.alpha()).pair(0, g), e.pair(0, g))
    }));
    r.push(sweep("product of the left factor is dual to comultiplication", &[na, na, nb], |i| {
        let e = Elem::basis(&[na, na, nb], i);
        let lhs = e.fuse(0, a.mul()).pair(0, g);
        let rhs = e.split(2, b.comul()).map(0, &a2).map(1, &a2).permute(&[0, 2, 1, 3]).pair(2, g).pair(0, g);
        (lhs, rhs)
    }));
    let b2r: &Matrix = &b2;
    let right_mult = |swapped: bool| {
        move |i: &[usize]| {
            let e = Elem::basis(&[na, nb, nb], i);
            let lhs = e.fuse(1, b.mul()).pair(0, g);
            let order: &[usize] = if swapped { &[0, 3, 1, 2] } else { &[0, 2, 1, 3] };
            let rhs = e.split(0, a.comul()).map(2, b2r).map(3, b2r).permute(order).pair(2, g).pair(0, g);
            (lhs, rhs)
        }
    };
    r.push(sweep("product of the right factor is dual to comultiplication", &[na, nb, nb], right_mult(false)));
    let swapped = sweep("swapped", &[na, nb, nb], right_mult(true));
    r.note(format!(
        "swapped reading (a, bb') = (a_1, alpha^2(b'))(a_2, alpha^2(b)) {}",
        if swapped.passed { "also holds" } else { "does not hold" }
    ));
    r.push(sweep("antipodes are adjoint", &[na, nb], |i| {
        let e = Elem::basis(&[na, nb], i);
        (e.map(0, a.antipode()).pair(0, g), e.map(1, &sb_inv).pair(0, g))
    }));
    let nondegenerate = g.is_invertible();
    r.push(if nondegenerate {
        CheckEntry::pass("pairing is non-degenerate")
    } else {
        CheckEntry::fail(
            "pairing is non-degenerate",
            Witness { index: vec![], lhs: vec![int(g.rank() as i64)], rhs: vec![int(na.min(nb) as i64)] },
        )
    });
    Ok(r)
}

/// Hom-2-cocycle conditions on the side recorded in `sigma`, plus
/// normality as a separate entry.
pub fn check_cocycle(b: &HomBialgebra, sigma: &TwoCocycle) -> CheckReport {
    let n = b.dim();
    let g = &sigma.gram;
    let mut r = CheckReport::new();
    if g.rows() != n {
        r.push(CheckEntry::fail(
            "cocycle has the dimension of the bialgebra",
            Witness { index: vec![g.rows(), n], lhs: vec![], rhs: vec![] },
        ));
        return r;
    }
    let (mul, comul, al) = (b.mul(), b.comul(), b.alpha());
    let a2 = b.pow(2);
    r.push(sweep("cocycle is invariant under the structure map", &[n, n], |i| {
        let e = Elem::basis(&[n, n], i);
        (e.map(0, al).map(1, al).pair(0, g), e.pair(0, g))
    }));
    match sigma.side {
        Side::Left => r.push(sweep("left cocycle condition", &[n, n, n], |i| {
            let e = Elem::basis(&[n, n, n], i);
            let lhs = e
                .split(1, comul)
                .split(3, comul)
                .permute(&[1, 3, 0, 2, 4])
                .pair(0, g)
                .map(0, &a2)
                .fuse(1, mul)
                .pair(0, g);
            let rhs = e
                .split(0, comul)
                .split(2, comul)
                .permute(&[0, 2, 1, 3, 4])
                .pair(0, g)
                .fuse(0, mul)
                .map(1, &a2)
                .pair(0, g);
            (lhs, rhs)
        })),
        Side::Right => r.push(sweep("right cocycle condition", &[n, n, n], |i| {
            let e = Elem::basis(&[n, n, n], i);
            let lhs = e
                .split(1, comul)
                .split(3, comul)
                .permute(&[0, 1, 3, 2, 4])
                .pair(3, g)
                .fuse(1, mul)
                .map(0, &a2)
                .pair(0, g);
            let rhs = e
                .split(0, comul)
                .split(2, comul)
                .permute(&[0, 2, 4, 1, 3])
                .pair(3, g)
                .fuse(0, mul)
                .map(1, &a2)
                .pair(0, g);
            (lhs, rhs)
        })),
    }
    let one = Elem::from_vector(b.unit());
    r.push(sweep("cocycle is normal", &[n], |i| {
        let e = Elem::basis(&[n], i);
        let left = one.tensor(&e).pair(0, g);
        let right = e.tensor(&one).pair(0, g);
        let eps = e.eval(0, b.counit());
        if left != eps {
            (left, eps)
        } else {
            (right, eps)
        }
    }));
    r
}

/// The three quasitriangularity axioms, with products taken componentwise
/// in the tensor square and cube.
pub fn check_quasitriangular(b: &HomBialgebra, rm: &RMatrix) -> CheckReport {
    let n = b.dim();
    let mut r = CheckReport::new();
    if rm.dim() != n {
        r.push(CheckEntry::fail(
            "R-matrix has the dimension of the bialgebra",
            Witness { index: vec![rm.dim(), n], lhs: vec![], rhs: vec![] },
        ));
        return r;
    }
    let (mul, comul) = (b.mul(), b.comul());
    let rel = Elem::from_dense(&[n, n], rm.entries.entries());
    let unit = b.unit();
    r.push(sweep("R intertwines the comultiplication and its opposite", &[n], |i| {
        let d = Elem::basis(&[n], i).split(0, comul);
        let lhs = d.swap(0, 1).tensor(&rel).permute(&[0, 2, 1, 3]).fuse(2, mul).fuse(0, mul);
        let rhs = rel.tensor(&d).permute(&[0, 2, 1, 3]).fuse(2, mul).fuse(0, mul);
        (lhs, rhs)
    }));
    let r13 = rel.insert(1, unit);
    let r23 = rel.insert(0, unit);
    let r12 = rel.insert(2, unit);
    let cube = |x: &Elem, y: &Elem| x.tensor(y).permute(&[0, 3, 1, 4, 2, 5]).fuse(4, mul).fuse(2, mul).fuse(0, mul);
    r.push(sweep("comultiplication on the first leg", &[], |_| {
        (rel.split(0, comul).map(2, b.alpha()), cube(&r13, &r23))
    }));
    r.push(sweep("comultiplication on the second leg", &[], |_| {
        (rel.split(1, comul).map(0, b.alpha()), cube(&r13, &r12))
    }));
    r
}
