"""Smoke test for the homhopf_py extension module.

Build and install first:
    pip install --no-build-isolation -e crates/python
"""

from fractions import Fraction

import homhopf_py as hh


def failed_axioms(report):
    return [c["axiom"] for c in report["checks"] if not c["passed"]]


def main():
    names = hh.catalog_names()
    assert "ax1" in names and "s3" in names

    kz2 = hh.Algebra.catalog("kz2")
    assert kz2.dim == 2 and kz2.level == "hopf"
    assert failed_axioms(kz2.check()) == []

    # A^1_x: x^2 = 0, 1 x = -x, and Delta is not multiplicative at (x, x).
    ax1 = hh.Algebra.catalog("ax1")
    assert ax1.product(1, 1) == [0, 0]
    assert ax1.product(0, 1) == [0, -1]
    assert failed_axioms(ax1.check("algebra")) == []
    assert failed_axioms(ax1.check("bialgebra")) == ["bialgebra: comultiplication is multiplicative"]

    sw = hh.Algebra.catalog("sweedler_hom:2")
    assert all(isinstance(x, Fraction) for row in sw.alpha() for x in row)

    # Twisting the double by sigma gives the Heisenberg double of the opposite.
    c3 = hh.Algebra.catalog("cyclic:3")
    d = c3.double()
    assert d.dim == 9 and failed_axioms(d.check()) == []
    sigma, eta = c3.cocycles()
    assert sigma.side == "left" and eta.side == "right"
    assert d.twist(sigma).same_structure(c3.opposite().heisenberg())
    assert c3.double_tilde().twist(eta).same_structure(c3.dual().heisenberg())

    # Text round trip.
    again = hh.Algebra.parse(d.to_text())
    assert again.digest() == d.digest()

    # Rejected preconditions raise, force skips them.
    sweedler = hh.Algebra.catalog("sweedler_hom")
    try:
        sweedler.dual_pair_double()
    except hh.PreconditionError as e:
        assert "dual pair" in str(e.args[0])
    else:
        raise AssertionError("expected PreconditionError")
    assert sweedler.dual_pair_double(force=True).dim == 16

    result = hh.verify("double-r-matrix", hh.Algebra.catalog("cyclic:2"))
    assert result["passed"], result
    assert set(hh.suite_names()) >= {"bicrossproduct", "heisenberg-twist"}

    try:
        hh.Algebra.catalog("nope")
    except hh.HomHopfError:
        pass
    else:
        raise AssertionError("expected HomHopfError")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
