import pytest

from bdmeta.localfield import TameFieldModel, primitive_root, tame_symbol_oracle

CASES = [(q, n) for q in (5, 7, 13) for n in range(1, q) if (q - 1) % n == 0]


@pytest.mark.parametrize("q,n", CASES)
def test_symbol_laws(q, n):
    F = TameFieldModel(q, n)
    cls = F.classes()
    h = F.hilbert
    for a in cls:
        assert h(a, a * F.neg_one()) == 0  # Steinberg: (a, -a) = 1
        if a.val % n or a.unit_exp % n:
            assert any(h(a, b) for b in cls)  # perfect pairing
        for b in cls:
            assert (h(a, b) + h(b, a)) % n == 0
            for c in cls:
                assert h(a * b, c) == (h(a, c) + h(b, c)) % n


@pytest.mark.parametrize("q", (5, 7, 13))
def test_closed_form_against_residue_oracle(q):
    for n in range(1, q):
        if (q - 1) % n:
            continue
        F = TameFieldModel(q, n)
        els = [F.cls(v, e) for v in range(-1, n + 1) for e in range(q - 1)]
        for a in els:
            for b in els:
                assert F.hilbert(a, b) == tame_symbol_oracle(q, n, a, b)


@pytest.mark.parametrize("q,n", [(5, 2), (5, 4), (7, 2), (7, 3), (7, 6), (13, 4), (13, 3)])
def test_weil_index_relation(q, n):
    F = TameFieldModel(q, n)
    for a in F.classes(4):
        for b in F.classes(4):
            lhs = F.weil_chi(a) + F.weil_chi(b)
            rhs = F.weil_chi(a * b) + F.hilbert2(a, b) * (F.m // 2)
            assert (lhs - rhs) % F.m == 0


def test_spot_values():
    F = TameFieldModel(7, 2)
    assert F.hilbert(F.neg_one(), F.pi()) == 1  # -1 is not a square mod 7
    assert F.hilbert(F.pi(), F.pi()) == 1
    F = TameFieldModel(5, 2)
    assert F.hilbert(F.pi(), F.pi()) == 0
    assert F.hilbert(F.neg_one(), F.neg_one()) == 0
    assert F.weil_chi(F.unit_gen()) == 0


def test_weil_pi_is_configurable_but_checked():
    F = TameFieldModel(7, 2, weil_pi=3)
    assert F.weil_pi == 3
    with pytest.raises(ValueError):
        TameFieldModel(7, 2, weil_pi=0)


def test_bad_parameters():
    with pytest.raises(ValueError):
        TameFieldModel(9, 3)  # 3 does not divide 8
    with pytest.raises(ValueError):
        TameFieldModel(8, 1)
    assert primitive_root(13) == 2
