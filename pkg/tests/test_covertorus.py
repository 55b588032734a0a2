import itertools
import random
from math import gcd

import pytest

from bdmeta import covertorus as ct
from bdmeta.localfield import TameFieldModel
from bdmeta.metadual import BisectorData, NotFair, fair_default_bisector, metaplectic_data
from bdmeta.rootdata import SUPPORTED_SC, gl, gsp, pgl2, simply_connected


def model(rd, n, q, eta=None, bis=None):
    bis = bis or fair_default_bisector(rd, eta=eta)
    return ct.CoveringTorusModel(rd, bis, n, TameFieldModel(q, n))


def mp2(q=7, n=2):
    return model(simply_connected("A", 1), n, q)


# -- group law

def test_zeta_is_central():
    m = model(simply_connected("A", 2), 2, 5)
    G = m.full
    z = G.zeta(1)
    for x in itertools.islice(G.finite_elements(), 40):
        assert G.equal(G.commutator(z, x), G.identity())


def test_pgl2_torus_is_abelian():
    m = model(pgl2(), 2, 7)
    G = m.full
    els = list(G.finite_elements())
    assert all(G.commutator(x, y).z == 0 for x in els for y in els)


def test_mp2_commutator_of_generators():
    m = mp2(7)
    G, F = m.full, m.field
    c = G.commutator(G.pure([1], F.pi()), G.pure([1], F.unit_gen()))
    assert G.equal(c, G.identity())


def test_commutator_formula_sl3():
    m = model(simply_connected("A", 2), 3, 7)
    G, F, bis = m.full, m.field, m.bis
    for y1 in ([1, 0], [0, 1], [1, 1]):
        for y2 in ([1, 0], [0, 1], [2, -1]):
            for a in F.classes():
                for b in F.classes():
                    c = G.commutator(G.pure(y1, a), G.pure(y2, b))
                    assert c.z == F.hilbert(a, b) * bis.B(y1, y2) % 3


def test_inverse_and_power():
    m = model(simply_connected("C", 2), 2, 5)
    G = m.full
    for x in itertools.islice(G.finite_elements(), 64):
        assert G.equal(G.mul(x, G.inv(x)), G.identity())
        y = G.identity()
        for k in range(5):
            assert G.equal(G.power(x, k), y)
            y = G.mul(y, x)


# -- center

@pytest.mark.parametrize("rd,n,q", [(pgl2(), 2, 5), (simply_connected("A", 1), 2, 5),
                                    (simply_connected("A", 2), 2, 5), (simply_connected("A", 2), 3, 7),
                                    (gl(2), 2, 7), (gsp(4), 2, 5), (simply_connected("B", 3), 2, 5)],
                         ids=str)
def test_center_prediction(rd, n, q):
    m = model(rd, n, q)
    assert ct.center_bruteforce(m) == ct.predicted_center(m)


def test_center_of_abelian_and_mp2_is_everything():
    for m in (model(pgl2(), 2, 5), mp2(5)):
        assert len(ct.center_bruteforce(m)) == m.n ** (2 * m.rank)


def test_center_too_large():
    m = model(simply_connected("A", 5), 4, 5)
    with pytest.raises(ct.ModelTooLarge):
        ct.center_bruteforce(m)


# -- maps

def test_s_eta_trivial_eta():
    m = mp2(7)
    for a in m.field.classes():
        x = m.s_eta((2,), a)
        assert x.z == 0


def test_s_eta_pgl2():
    F = TameFieldModel(7, 2)
    m = model(pgl2(), 2, 7, eta=(F.pi(),))
    for a in F.classes():
        assert m.s_eta((2,), a).z == F.hilbert(F.pi(), a)
    assert m.qn.equal(m.s_eta((2,), F.one()), m.qn.identity())


def test_s_eta_is_homomorphism_on_generators():
    F = TameFieldModel(5, 2)
    rd = simply_connected("A", 2)
    m = model(rd, 2, 5, eta=(F.pi(), F.cls(1, 1)))
    G = m.qn
    ys = m.md.modified_simple_coroots
    for y in ys:
        for a in F.classes():
            for b in F.classes():
                assert G.equal(G.mul(m.s_eta(y, a), m.s_eta(y, b)), m.s_eta(y, a * b))
    for a in F.classes():
        s = [u + v for u, v in zip(ys[0], ys[1])]
        assert G.equal(G.mul(m.s_eta(ys[0], a), m.s_eta(ys[1], a)), m.s_eta(s, a))


def test_s_eta_domain_and_fairness():
    m = mp2(7)
    with pytest.raises(ValueError):
        m.s_eta((1,), m.field.pi())
    rd = simply_connected("A", 2)
    unfair = BisectorData([[2, 1], [-3, 2]])
    m = model(rd, 2, 5, bis=unfair)
    assert not m.fair
    with pytest.raises(NotFair):
        m.s_eta(m.md.modified_simple_coroots[0], m.field.pi())
    with pytest.raises(NotFair):
        ct.distinguished_character(m)


def test_eta_length_checked():
    F = TameFieldModel(5, 2)
    rd = simply_connected("A", 2)
    bis = fair_default_bisector(rd).with_eta((F.pi(),))
    with pytest.raises(ct.NoEta):
        ct.CoveringTorusModel(rd, bis, 2, F)


@pytest.mark.parametrize("rd,n,q", [(pgl2(), 2, 5), (gl(2), 2, 5), (simply_connected("A", 2), 3, 7),
                                    (gl(3), 1, 5)], ids=str)
def test_g_tilde_and_i_n(rd, n, q):
    m = model(rd, n, q)
    G, F = m.qn, m.field
    for y in m.md.Y_Qn.basis:
        for a in F.classes():
            assert G.equal(m.g_tilde(y, a), m.i_n(y, a))
    for k in range(rd.rank):
        y = [int(i == k) for i in range(rd.rank)]
        for a in F.classes():
            for b in F.classes():
                assert G.equal(G.mul(m.g_tilde(y, a), m.g_tilde(y, b)), m.g_tilde(y, a * b))
    if n == 1:
        for y in m.md.Y_Qn.basis:
            assert G.equal(m.i_n(y, F.pi()), G.pure(m.qn_coords(y), F.pi()))


def test_g_tilde_pgl2():
    m = model(pgl2(), 2, 5)
    for a in m.field.classes():
        x = m.g_tilde((1,), a)
        assert x.t == (a ** 2,) and x.z == 0


# -- characters

def test_trivial_character_for_n1():
    m = model(simply_connected("A", 2), 1, 5)
    chi = ct.GenuineCharacter((0,) * 4, 1, 1)
    assert ct.is_genuine_character(m, chi)
    assert ct.check_a_prime(m, chi)[0] and ct.check_a_doubleprime(m, chi)[0] and ct.check_d_prime(m, chi)[0]


def test_no_character_passes_d_prime_for_pgl2_pi_q7():
    F = TameFieldModel(7, 2)
    m = model(pgl2(), 2, 7, eta=(F.pi(),))
    chars = ct.enumerate_characters(m, [], 8)
    assert chars
    for chi in chars:
        ok, w = ct.check_d_prime(m, chi)
        assert not ok and w["pairing"]["eta_y_a"] in (0, 1)
    rep = ct.obstruction_report(m)
    assert rep["ob1"]["witness"]["pairing"] == {"y": [2], "a": ["pi", 0, 3], "eta_y_a": 1}


PRESETS = ([simply_connected(t, r) for t, r in SUPPORTED_SC if r <= 4]
           + [pgl2(), gl(2), gl(3), gsp(2), gsp(4), gsp(6)])


@pytest.mark.parametrize("rd", PRESETS, ids=lambda rd: "-".join(map(str, rd.label)))
def test_distinguished_character_checks(rd):
    for n, q in ((1, 5), (2, 5), (2, 7), (3, 7), (4, 5)):
        m = model(rd, n, q)
        for sign in ("savin", "paper7"):
            chi = ct.distinguished_character(m, sign)
            assert ct.is_genuine_character(m, chi)
            assert ct.check_a_doubleprime(m, chi)[0] and ct.check_d_prime(m, chi)[0]
            assert ct.weyl_fixed(m, chi)
        assert not ct.relation_violations(m, chi)


@pytest.mark.parametrize("rd,n,q", [(simply_connected("A", 1), 2, 7), (simply_connected("C", 3), 2, 5),
                                    (gl(3), 4, 5), (simply_connected("A", 3), 2, 7), (gsp(4), 2, 7),
                                    (simply_connected("G", 2), 3, 7)], ids=str)
def test_chi0_matches_closed_form(rd, n, q):
    m = model(rd, n, q)
    rng = random.Random(0)
    for sign in ("savin", "paper7"):
        chi = ct.distinguished_character(m, sign)
        for _ in range(30):
            c = [rng.randint(-3, 3) for _ in m.qn_basis]
            y = [sum(ci * b[k] for ci, b in zip(c, m.qn_basis)) for k in range(rd.rank)]
            for a in m.field.classes(4):
                got = chi.value_on(m.qn, m.qn.pure(c, a))
                assert got == ct.chi0_formula(m, chi.meta, y, a)


@pytest.mark.parametrize("r", range(1, 7))
def test_kp_character_exponent(r):
    for n, q in ((2, 5), (2, 7), (3, 7), (4, 5)):
        m = model(gl(r), n, q)
        F = m.field
        c = n // gcd(r + 1, n)
        e = r * (r + 1) * c * (n - c) // n
        chi = ct.distinguished_character(m)
        for a in F.classes(4):
            got = chi.value_on(m.qn, m.qn.pure(m.qn_coords([c] * r), a))
            assert got == e * F.weil_chi(a) % F.m


def test_distinguished_character_raises_with_witness():
    F = TameFieldModel(7, 2)
    m = model(pgl2(), 2, 7, eta=(F.pi(),))
    with pytest.raises(ct.ObstructionFails) as ei:
        ct.distinguished_character(m)
    assert ei.value.obstruction == "ob1"


def test_unit_eta_twist_still_distinguished():
    F = TameFieldModel(5, 2)
    m = model(simply_connected("A", 2), 2, 5, eta=(F.unit_gen(), F.cls(2, 1)))
    chi = ct.distinguished_character(m)
    assert ct.check_d_prime(m, chi)[0] and ct.check_a_doubleprime(m, chi)[0]


# -- obstructions, Weyl action, census

@pytest.mark.parametrize("q", (5, 7, 13))
@pytest.mark.parametrize("rd", [pgl2(), simply_connected("A", 1)], ids=lambda rd: rd.label[0])
def test_obstructions_against_enumeration(rd, q):
    F = TameFieldModel(q, 2)
    for eta in F.classes():
        m = model(rd, 2, q, eta=(eta,))
        rep = ct.obstruction_report(m)
        d = [x for *_, x in m.d_prime_elements()]
        ap = [x for *_, x in m.a_prime_elements()]
        app = [x for *_, x in m.a_doubleprime_elements()]
        for name, els in (("ob1", d), ("ob2", d + ap), ("ob3", d + app)):
            assert rep[name]["pass"] == bool(ct.enumerate_characters(m, els, 8 * (q - 1)))


def test_trivial_eta_passes_everything():
    for rd in (simply_connected("B", 3), gsp(4), gl(3)):
        rep = ct.obstruction_report(model(rd, 2, 5))
        assert all(v["pass"] for v in rep.values())


def test_pgl2_weyl_action_is_inverse_times_eta():
    for q in (5, 7):
        F = TameFieldModel(q, 2)
        for eta in F.classes():
            m = model(pgl2(), 2, q, eta=(eta,))
            for chi in ct.enumerate_characters(m, [], 8):
                w = ct.weyl_act_character(m, chi, 0)
                assert ct.weyl_act_character(m, w, 0).same(chi)
                for i, a in enumerate(F.generators()):
                    assert w.values[i] == (-chi.values[i] + F.hilbert(eta, a) * 4) % 8


def test_weyl_action_involution_rank2():
    m = model(simply_connected("A", 2), 2, 5)
    chars = ct.enumerate_characters(m, [], 4)[:200]
    for chi in chars:
        for s in (0, 1):
            assert ct.weyl_act_character(m, ct.weyl_act_character(m, chi, s), s).same(chi)


def test_weyl_fixed_existence_pgl2():
    for q in (5, 7, 11, 13):
        F = TameFieldModel(q, 2)
        for eta in F.classes():
            m = model(pgl2(), 2, q, eta=(eta,))
            exists = ct.weyl_fixed_character(m) is not None
            assert exists == (F.hilbert2(eta, F.neg_one()) == 0)


def test_census_examples():
    assert ct.splitting_census(model(simply_connected("A", 2), 1, 5)) == 1
    m = model(pgl2(), 2, 5)
    assert ct.splitting_census(m) == 4 == ct.torsor_count(m.md)
    assert len(ct.unramified_census(m)) == 2
    for n, q in ((2, 5), (3, 7), (4, 5)):
        assert ct.splitting_census(model(simply_connected("G", 2), n, q)) == 1
    assert len(ct.unramified_census(model(gl(2), 1, 5))) == 1


def test_unramified_census_is_filtered_enumeration():
    m = mp2(5)
    allc = ct.enumerate_characters(m, ct.distinguished_constraints(m), 4)
    unr = ct.unramified_census(m)
    assert unr == [c for c in allc if c.values[1] == 0]
    assert sorted(ct.satake_exponents(c)[0] for c in unr) == [0, 2]


def test_census_too_large():
    with pytest.raises(ct.ModelTooLarge):
        ct.splitting_census(model(simply_connected("A", 3), 4, 5), limit=1000)
