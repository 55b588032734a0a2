import pytest

from bdmeta import resext
from bdmeta.localfield import TameFieldModel
from bdmeta.metadual import fair_default_bisector
from bdmeta.rootdata import gl, gsp, pgl2, simply_connected

F = TameFieldModel(7, 2)


def verdict(rd, eta, n=2):
    data = resext.residual_data(rd, eta, fair_default_bisector(rd))
    return resext.splits_degree_n(data, n)


def test_trivial_eta_splits():
    for rd in (pgl2(), simply_connected("B", 3), gl(3), gsp(4)):
        v = verdict(rd, None)
        assert v.verdict == "split" and all(x == 0 for x in v.witness)


def test_pgl2_odd_valuation_is_nonsplit():
    v = verdict(pgl2(), (F.pi(),))
    assert v.verdict == "nonsplit-proven" and v.witness is None
    assert verdict(pgl2(), (F.cls(2, 1),)).verdict == "split"


def test_pgl2_odd_valuation_splits_for_odd_degree():
    F3 = TameFieldModel(7, 3)
    v = verdict(pgl2(), (F3.pi(),), n=3)
    assert v.verdict == "split"
    assert (v.witness[0] * 2 - 1) % 3 == 0


def test_simply_connected_always_splits_over_z():
    rd = simply_connected("C", 3)
    eta = (F.pi(), F.cls(3, 1), F.unit_gen())
    ok, psi = resext.is_residually_split(resext.residual_data(rd, eta))
    assert ok
    for c, e in zip(rd.simple_coroots, eta):
        assert sum(a * b for a, b in zip(c, psi)) == e.val


def test_witness_extends_valuations():
    rd = gl(3)
    eta = (F.pi(), F.cls(-2, 0))
    v = verdict(rd, eta)
    assert v.verdict == "split"
    for c, e in zip(rd.simple_coroots, eta):
        assert sum(a * b for a, b in zip(c, v.witness)) == e.val


def test_unknown_outside_pgl2_shape():
    # Adjoint A2: coroot lattice has index 3, valuations (1, 0) do not extend mod 3.
    from bdmeta.metadual import adjoint
    rd = adjoint("A", 2)
    F3 = TameFieldModel(7, 3)
    v = resext.splits_degree_n(resext.residual_data(rd, (F3.pi(), F3.one())), 3)
    assert v.verdict == "unknown"


def test_bad_inputs():
    with pytest.raises(ValueError):
        resext.residual_data(simply_connected("A", 2), (F.pi(),))
    with pytest.raises(ValueError):
        resext.splits_degree_n(resext.residual_data(pgl2(), None), 0)


def test_as_dict():
    d = verdict(pgl2(), (F.pi(),)).as_dict()
    assert d == {"verdict": "nonsplit-proven", "reason": d["reason"], "witness": None}
