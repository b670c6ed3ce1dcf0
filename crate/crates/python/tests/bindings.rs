use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) {
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(homhopf_py::homhopf_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("hh", module).unwrap();
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.display(py);
            panic!("python code failed");
        }
    });
}

#[test]
fn catalog_and_checks() {
    run(r#"
a = hh.Algebra.catalog("cyclic:3")
assert a.dim == 3 and a.level == "hopf"
assert a.check()["checks"] and all(c["passed"] for c in a.check()["checks"])
bad = [c["axiom"] for c in hh.Algebra.catalog("ax1").check("bialgebra")["checks"] if not c["passed"]]
assert bad == ["bialgebra: comultiplication is multiplicative"], bad
"#);
}

#[test]
fn twist_identity_through_the_bindings() {
    run(r#"
a = hh.Algebra.catalog("sweedler_hom")
sigma, eta = a.cocycles()
assert a.double().twist(sigma).same_structure(a.opposite().heisenberg())
assert a.double_tilde().twist(eta).same_structure(a.dual().heisenberg())
"#);
}

#[test]
fn errors_map_to_exceptions() {
    run(r#"
try:
    hh.Algebra.parse("homhopf 1\ndim 1\nfield_char 0\nblock unit 1\n0 1/0\n")
except hh.HomHopfError as e:
    assert "zero denominator" in str(e)
else:
    raise AssertionError("no error")
try:
    hh.Algebra.catalog("sweedler_hom").dual_pair_double()
except hh.PreconditionError:
    pass
else:
    raise AssertionError("no error")
"#);
}

#[test]
fn suites_return_dicts() {
    run(r#"
r = hh.verify("heisenberg-twist", hh.Algebra.catalog("sweedler_hom:2"))
assert not r["passed"]
failed = [s["name"] for s in r["steps"] if not s["passed"]]
assert failed == ["right twist equals the Heisenberg double of the dual"], failed
"#);
}
