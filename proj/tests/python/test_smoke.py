import os
import sys

import pytest

# ctest points LOGCSM_MODULE_DIR at the build tree; an installed wheel
# exposes the same module as logcsm._logcsm
module_dir = os.environ.get("LOGCSM_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)
    import _logcsm as m
else:
    m = pytest.importorskip("logcsm")

BRAID = [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"],
    ["1", "-1", "0"],
    ["1", "0", "-1"],
    ["0", "1", "-1"],
]


def test_groebner_basis():
    assert sorted(m.groebner_basis("x + y, x - y", ["x", "y"])) == ["x", "y"]


def test_ideal_membership():
    assert m.ideal_membership("x^3 + y^3", "x^2, x*y, y^2")
    assert not m.ideal_membership("x + y", "x^2, x*y, y^2")


def test_linear_type():
    assert m.is_linear_type("x, y")["linear_type"] is True
    bad = m.is_linear_type("x^2, x*y, y^2")
    assert bad["linear_type"] is False
    assert "T" in bad["witness"]
    assert m.is_linear_type("x*y", jacobian=True)["linear_type"] is True


def test_freeness():
    r = m.freeness("x*y")
    assert r["verdict"] == "free"
    assert r["exponents"] == [1, 1]


def test_characteristic_polynomial():
    coeffs, pretty = m.characteristic_polynomial(2, BRAID)
    assert coeffs == [1, -6, 11, -6]
    assert "t^3" in pretty


def test_csm_complement():
    assert m.csm_complement(2, BRAID) == [1, -3, 2]


def test_verify():
    rep = m.verify(2, BRAID)
    assert rep["equal"] is True
    assert rep["lhs"] == [1, -3, 2]
    assert rep["rhs"] == [1, -3, 2]
    assert rep["hypotheses"]["free"]["verdict"] == "free"
    assert rep["hypotheses"]["free"]["exponents"] == [1, 2, 3]
    assert rep["hypotheses"]["linear_type"]["verdict"] is True


def test_proof_chain():
    ok, steps = m.proof_chain_check(3)
    assert ok
    assert len(steps) == 8
    assert all(step_ok for (_, _, step_ok) in steps)
