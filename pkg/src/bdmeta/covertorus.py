"""Covering tori T x_D mu_n over a tame field model, and their genuine characters.

Elements are pairs (t, z): t is a tuple of FieldClass, one per basis vector of
the lattice in use, and z is an exponent mod n. The group law is
(t1, z1)(t2, z2) = (t1 t2, z1 + z2 + sigma(t1, t2)) with the bilinear cocycle
sigma(t1, t2) = sum_ij D_ij (a_i, b_j)_n.

Two lattices are in play: Y itself (the full torus) and Y_Qn, presented on an
aligned basis y_i with k_i y_i a basis of J = nY + Y^sc_Qn. Characters live on
the Y_Qn group. That group is abelian; as an abstract group it is
Z^r + (Z/(q-1))^r + Z/n on the generators y_i(pi), y_i(u), zeta, and
characters are stored by their values on these generators.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

from . import lattices as lat
from .lattices import Sublattice
from .localfield import FieldClass, TameFieldModel, lcm
from .metadual import (BisectorData, MetaplecticData, NotFair, eta_of, is_fair,
                       metaplectic_data)
from .rootdata import RootDatum, pair, _simple_coefficients


class ModelTooLarge(ValueError):
    pass


class NoEta(ValueError):
    pass


class ObstructionFails(RuntimeError):
    def __init__(self, obstruction, witness):
        super().__init__(f"obstruction {obstruction} fails: {witness}")
        self.obstruction = obstruction
        self.witness = witness


class Elt(NamedTuple):
    t: tuple
    z: int


class CocycleGroup:
    """T x_D mu_n on a chosen lattice basis (D is the bisector on that basis)."""

    def __init__(self, D, field: TameFieldModel):
        self.D = [list(row) for row in D]
        self.r = len(self.D)
        self.field = field
        self.n = field.n
        F = field
        gens = F.generators()
        # sigma between generator slots (i, a) and (j, b), slot index 2*i + a
        self._S = [[self.D[i][j] * F.hilbert(gens[a], gens[b]) % self.n
                    for j in range(self.r) for b in (0, 1)]
                   for i in range(self.r) for a in (0, 1)]

    # -- group law
    def identity(self):
        return Elt(tuple(self.field.one() for _ in range(self.r)), 0)

    def sigma(self, t1, t2):
        h = self.field.hilbert
        return sum(self.D[i][j] * h(a, b) for i, a in enumerate(t1) for j, b in enumerate(t2)
                   if self.D[i][j]) % self.n

    def mul(self, x: Elt, y: Elt) -> Elt:
        return Elt(tuple(a * b for a, b in zip(x.t, y.t)), (x.z + y.z + self.sigma(x.t, y.t)) % self.n)

    def inv(self, x: Elt) -> Elt:
        ti = tuple(a.inv() for a in x.t)
        return Elt(ti, (-x.z - self.sigma(x.t, ti)) % self.n)

    def commutator(self, x, y):
        return self.mul(self.mul(x, y), self.inv(self.mul(y, x)))

    def zeta(self, e) -> Elt:
        return Elt(self.identity().t, e % self.n)

    def pure(self, y, a: FieldClass) -> Elt:
        """y(a) for y given in this group's basis coordinates."""
        return Elt(tuple(a ** int(c) for c in y), 0)

    def power(self, x: Elt, k: int) -> Elt:
        # sigma is bilinear, so x^k = (t^k, k z + sigma(t,t) k(k-1)/2)
        s = self.sigma(x.t, x.t)
        return Elt(tuple(a ** k for a in x.t), (k * x.z + s * (k * (k - 1) // 2)) % self.n)

    def equal(self, x, y):
        return x.z == y.z and all(a == b for a, b in zip(x.t, y.t))

    # -- coordinates on generators
    def coords(self, x: Elt):
        """Integer exponents p on the 2r generators and the residual zeta exponent."""
        p = []
        for a in x.t:
            p.append(a.val)
            p.append(a.unit_exp)
        S = self._S
        zw = 0
        for j, pj in enumerate(p):
            if pj:
                zw += S[j][j] * (pj * (pj - 1) // 2)
                for l in range(j + 1, len(p)):
                    if p[l]:
                        zw += pj * p[l] * S[j][l]
        return p, (x.z - zw) % self.n

    def coord_vector(self, x: Elt):
        p, z = self.coords(x)
        return p + [z]

    # -- finite quotient mod n-th powers
    def finite_elements(self):
        n = self.n
        F = self.field
        for vals in itertools.product(range(n), repeat=2 * self.r):
            t = tuple(F.cls(vals[2 * i], vals[2 * i + 1]) for i in range(self.r))
            for z in range(n):
                yield Elt(t, z)


# ---------------------------------------------------------------------------
# Model

class CoveringTorusModel:
    def __init__(self, rd: RootDatum, bis: BisectorData, n: int, field: TameFieldModel,
                 md: Optional[MetaplecticData] = None):
        if field.n != n:
            raise ValueError("field model degree must equal n")
        if bis.eta is not None and len(bis.eta) != rd.semisimple_rank:
            raise NoEta("eta needs one value per simple coroot")
        self.rd = rd
        self.bis = bis
        self.n = n
        self.field = field
        self.md = md or metaplectic_data(rd, bis, n)
        self.fair = is_fair(rd, bis)
        self.full = CocycleGroup(bis.D, field)
        ys, ks = lat.aligned_bases(self.md.J, self.md.Y_Qn)
        self.qn_basis = [tuple(y) for y in ys]
        self.k = list(ks)
        Dq = [[bis.bil(a, b) for b in ys] for a in ys]
        self.qn = CocycleGroup(Dq, field)
        self._coef = _simple_coefficients([list(y) for y in ys])
        self.m = field.m

    @property
    def rank(self):
        return self.rd.rank

    def qn_coords(self, y):
        """Coordinates of y in Y_Qn in the aligned basis."""
        c = self._coef(list(y))
        if any(x.denominator != 1 for x in c):
            raise ValueError(f"{list(y)} is not in Y_Qn")
        return [int(x) for x in c]

    def to_full(self, x: Elt) -> Elt:
        """The map T_Qn-bar -> T-bar induced by the inclusion Y_Qn -> Y."""
        F = self.field
        t = []
        for k in range(self.rank):
            c = F.one()
            for y, a in zip(self.qn_basis, x.t):
                if y[k]:
                    c = c * (a ** y[k])
            t.append(c)
        return Elt(tuple(t), x.z)

    def eta(self, y):
        return eta_of(self.rd, self.bis, self.field, y)

    # -- distinguished maps
    def s_eta(self, y, a: FieldClass) -> Elt:
        """s_eta(y(a)) = y(a) (eta(y), a)_n for y in Y^sc_Qn (Y coordinates)."""
        if not self.fair:
            raise NotFair("s_eta needs a fair bisector")
        if not self.md.Ysc_Qn.contains(y):
            raise ValueError("y must lie in Y^sc_Qn")
        x = self.qn.pure(self.qn_coords(y), a)
        return Elt(x.t, self.field.hilbert(self.eta(y), a))

    def i_n(self, y, a) -> Elt:
        """i_n(y(a)) = y(a^n), y in Y_Qn."""
        return self.qn.pure(self.qn_coords(y), a ** self.n)

    def g_tilde(self, y, a) -> Elt:
        """g~(y(a)) = (ny)(a), y in Y."""
        return self.qn.pure(self.qn_coords([self.n * c for c in y]), a)

    # -- constraint sets
    def _basis_Y(self):
        return [tuple(int(i == k) for i in range(self.rank)) for k in range(self.rank)]

    def d_prime_elements(self):
        out = []
        for j, y in enumerate(self.md.modified_simple_coroots):
            for tag, a in zip(("pi", "unit"), self.field.generators()):
                out.append((("d'", j, tag), y, a, self.s_eta(y, a)))
        return out

    def a_prime_elements(self):
        out = []
        for i, y in enumerate(self.qn_basis):
            for tag, a in zip(("pi", "unit"), self.field.generators()):
                out.append((("a'", i, tag), y, a, self.i_n(y, a)))
        return out

    def a_doubleprime_elements(self):
        out = []
        for k, y in enumerate(self._basis_Y()):
            for tag, a in zip(("pi", "unit"), self.field.generators()):
                out.append((("a''", k, tag), y, a, self.g_tilde(y, a)))
        return out

    def weyl_elements(self, simple):
        """For each generator y_i(a): s_eta(alpha^vee(a)^{-<alpha, y_i>})."""
        alpha = self.rd.simple_roots[simple]
        av = self.rd.simple_coroots[simple]
        out = []
        for i, y in enumerate(self.qn_basis):
            kk = pair(alpha, y)
            for tag, a in zip(("pi", "unit"), self.field.generators()):
                out.append((("w", simple, i, tag), self._weyl_shift(av, kk, a)))
        return out

    def _weyl_shift(self, av, kk, a):
        if kk == 0:
            return self.qn.identity()
        na = self.md.n_alpha[self.rd.coroots.index(tuple(av))]
        assert kk % na == 0, "n_alpha must divide <alpha, y> on Y_Qn"
        ymod = tuple(na * c for c in av)
        return self.s_eta(ymod, a ** (-(kk // na)))


# ---------------------------------------------------------------------------
# Characters

@dataclass(frozen=True)
class GenuineCharacter:
    """Values (mod modulus) on the generators y_i(pi), y_i(u) of the Y_Qn group."""
    values: tuple
    modulus: int
    n: int
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def value_on(self, group: CocycleGroup, x: Elt) -> int:
        p, z = group.coords(x)
        M = self.modulus
        return (sum(pi * v for pi, v in zip(p, self.values)) + z * (M // self.n)) % M

    def table(self):
        out = []
        for i in range(len(self.values) // 2):
            out.append({"y": i, "a": "pi", "exp": self.values[2 * i] % self.modulus})
            out.append({"y": i, "a": "unit", "exp": self.values[2 * i + 1] % self.modulus})
        return out

    def rescaled(self, M):
        if M % self.modulus:
            raise ValueError("new modulus must be a multiple")
        f = M // self.modulus
        return GenuineCharacter(tuple(v * f % M for v in self.values), M, self.n, dict(self.meta))

    def same(self, other):
        M = lcm(self.modulus, other.modulus)
        return self.rescaled(M).values == other.rescaled(M).values


def _value(model, chi, x):
    return chi.value_on(model.qn, x)


def is_genuine_character(model: CoveringTorusModel, chi: GenuineCharacter) -> bool:
    M = chi.modulus
    if chi.n != model.n or M % model.n or len(chi.values) != 2 * model.rank:
        return False
    q = model.field.q
    return all((q - 1) * chi.values[2 * i + 1] % M == 0 for i in range(model.rank))


def _first_failure(model, chi, items):
    for item in items:
        label, x = item[0], item[-1]
        v = _value(model, chi, x)
        if v:
            return {"generator": list(label), "value": v, "modulus": chi.modulus}
    return None


def check_a_prime(model, chi):
    w = _first_failure(model, chi, model.a_prime_elements())
    return w is None, w


def check_a_doubleprime(model, chi):
    w = _first_failure(model, chi, model.a_doubleprime_elements())
    return w is None, w


def check_d_prime(model, chi):
    w = _first_failure(model, chi, model.d_prime_elements())
    if w is not None:
        j, tag = w["generator"][1], w["generator"][2]
        y = model.md.modified_simple_coroots[j]
        a = model.field.generators()[0 if tag == "pi" else 1]
        w["pairing"] = {"y": list(y), "a": a.literal(),
                        "eta_y_a": model.field.hilbert(model.eta(y), a)}
    return w is None, w


def relation_violations(model, chi, classes=None):
    """Conditions (b) and (c) on all basis pairs and the given field classes."""
    F = model.field
    G = model.qn
    classes = classes or F.classes()
    r = model.rank
    basis = [[int(i == j) for j in range(r)] for i in range(r)]
    bad = []
    M, n = chi.modulus, model.n
    emb = M // n
    for y1 in basis:
        for y2 in basis:
            s = [u + v for u, v in zip(y1, y2)]
            d12 = sum(y1[i] * G.D[i][j] * y2[j] for i in range(r) for j in range(r))
            for a in classes:
                lhs = _value(model, chi, G.pure(y1, a)) + _value(model, chi, G.pure(y2, a))
                rhs = _value(model, chi, G.pure(s, a)) + F.hilbert(a, a) * d12 * emb
                if (lhs - rhs) % M:
                    bad.append(("b", y1, y2, a))
    for y in basis:
        qy = sum(y[i] * G.D[i][j] * y[j] for i in range(r) for j in range(r))
        for a in classes:
            for b in classes:
                lhs = _value(model, chi, G.pure(y, a)) + _value(model, chi, G.pure(y, b))
                rhs = _value(model, chi, G.pure(y, a * b)) + F.hilbert(a, b) * qy * emb
                if (lhs - rhs) % M:
                    bad.append(("c", y, a, b))
    return bad


# ---------------------------------------------------------------------------
# Linear-system solver for genuine characters killing a set of elements

def _relation_rows(model):
    r, q, n = model.rank, model.field.q, model.n
    rows = []
    for i in range(r):
        v = [0] * (2 * r + 1)
        v[2 * i + 1] = q - 1
        rows.append(v)
    v = [0] * (2 * r + 1)
    v[-1] = n
    rows.append(v)
    return rows


def _solve_congruence(a, b, N):
    """Some t with sum a_i t_i = b mod N, or None."""
    t = [0] * len(a)
    g, coeffs = N, []
    # extended gcd over all a_i and N
    cur_g, cur = N, [0] * len(a)
    for i, ai in enumerate(a):
        ai %= N
        if ai == 0:
            continue
        g2, x, y = _egcd(cur_g, ai)
        cur = [c * x for c in cur]
        cur[i] += y
        cur_g = g2
    # now sum a_i cur_i = cur_g mod N, with cur_g = gcd(a_i..., N)
    if b % cur_g:
        return None
    f = b // cur_g
    return [c * f % N for c in cur]


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def solve_genuine(model, elements):
    """A genuine character vanishing on every element, or None.

    Returned as a GenuineCharacter whose modulus is large enough to hold the
    constructed values.
    """
    rows = [model.qn.coord_vector(x) for x in elements] + _relation_rows(model)
    width = 2 * model.rank + 1
    snf = lat.smith_normal_form(rows)
    V = [list(r) for r in snf.V]
    diag = list(snf.diagonal) + [0] * (width - len(snf.diagonal))
    n = model.n
    N = n
    for d in diag:
        if d:
            N = lcm(N, d)
    # w_i = t_i / d_i (d_i > 0) or t_i / N (free); need (V w)_z = 1/n mod 1
    zrow = V[-1]
    coef = [zrow[i] * (N // d if d else 1) for i, d in enumerate(diag)]
    t = _solve_congruence(coef, N // n, N)
    if t is None:
        return None
    w = [Fraction(ti, d if d else N) for ti, d in zip(t, diag)]
    c = [sum(V[j][i] * w[i] for i in range(width)) for j in range(width)]
    M = lcm(N, model.m)
    vals = [int(x * M) % M for x in c[:-1]]
    assert (int(c[-1] * M) - M // n) % M == 0
    return GenuineCharacter(tuple(vals), M, n, {"construction": "lattice"})


def kernel_witness(model, labeled):
    """Integer combination of constraint elements landing in mu_n nontrivially.

    Returns None if every combination lying over the identity of the torus has
    trivial mu_n part (i.e. the system is consistent).
    """
    elements = [x for _, x in labeled]
    rows = [model.qn.coord_vector(x) for x in elements] + _relation_rows(model)
    n = model.n
    torus_part = [row[:-1] for row in rows]
    ker = lat.left_kernel(torus_part, nrows=len(rows))
    for c in ker:
        zval = sum(ci * row[-1] for ci, row in zip(c, rows)) % n
        if zval:
            combo = [(labeled[i][0], ci) for i, ci in enumerate(c[:len(elements)]) if ci]
            return {"combination": combo, "mu_n_value": zval}
    return None


def _pairing_witness(model, wit):
    """Rewrite a single-generator s_eta witness as (eta(y), a^c)_n != 1."""
    combo = wit["combination"]
    ds = [(lab, c) for lab, c in combo if lab[0] == "d'"]
    if len(ds) == 1:
        (lab, c) = ds[0]
        y = model.md.modified_simple_coroots[lab[1]]
        a = model.field.generators()[0 if lab[2] == "pi" else 1] ** c
        wit["pairing"] = {"y": list(y), "a": a.literal(),
                          "eta_y_a": model.field.hilbert(model.eta(y), a)}
    wit["combination"] = [[list(lab), c] for lab, c in combo]
    return wit


def obstruction_report(model: CoveringTorusModel):
    """Decide Obstructions 1-3 as solvability of the character system."""
    d = [(lab, x) for lab, _, _, x in model.d_prime_elements()]
    ap = [(lab, x) for lab, _, _, x in model.a_prime_elements()]
    app = [(lab, x) for lab, _, _, x in model.a_doubleprime_elements()]
    out = {}
    for name, items in (("ob1", d), ("ob2", d + ap), ("ob3", d + app)):
        wit = kernel_witness(model, items)
        sol = solve_genuine(model, [x for _, x in items])
        assert (wit is None) == (sol is not None), "solver and witness search disagree"
        out[name] = {"pass": wit is None, "witness": None if wit is None else _pairing_witness(model, wit)}
    return out


# ---------------------------------------------------------------------------
# Distinguished characters

def _eta_extension(model):
    """eta_n on Y^sc extended to Y -> F^x/F^xn, as FieldClass values on the Y basis."""
    rd, F, n = model.rd, model.field, model.n
    r = rd.rank
    if not rd.simple_indices or model.bis.eta is None:
        return [F.one()] * r
    sub = Sublattice.span([list(c) for c in rd.simple_coroots], r)
    amb = Sublattice.full(r)
    ev = [model.eta(b) for b in sub.basis]
    pv = lat.extend_hom(sub, amb, [e.val for e in ev], n)
    pu = lat.extend_hom(sub, amb, [e.unit_exp for e in ev], n)
    if pv is None or pu is None:
        return None
    return [F.cls(v, u) for v, u in zip(pv, pu)]


def chi0_exponents(model, sign_convention="savin"):
    """f_i, k_i and A_i for the aligned basis."""
    n = model.n
    out = []
    for y, k in zip(model.qn_basis, model.k):
        two_q = 2 * model.bis.Q(y)
        assert two_q % n == 0
        A = two_q // n
        if k % 2 == 1:
            assert A % 2 == 0, "A_i must be even when k_i is odd"
        f = (k - 1) * A if sign_convention == "savin" else -(k - 1) * A
        out.append((f, k, A))
    return out


def distinguished_character(model: CoveringTorusModel, sign_convention: str = "savin") -> GenuineCharacter:
    if sign_convention not in ("savin", "paper7"):
        raise ValueError("sign_convention must be 'savin' or 'paper7'")
    if not model.fair:
        raise NotFair("distinguished characters need a fair bisector")
    F, n, m = model.field, model.n, model.m
    ext = _eta_extension(model)
    if ext is None:
        rep = obstruction_report(model)
        for ob in ("ob1", "ob2", "ob3"):
            if not rep[ob]["pass"]:
                raise ObstructionFails(ob, rep[ob]["witness"])
        items = [x for *_, x in model.d_prime_elements()] + [x for *_, x in model.a_doubleprime_elements()]
        chi = solve_genuine(model, items)
        assert chi is not None
        return _verified(model, chi)
    exps = chi0_exponents(model, sign_convention)
    vals = []
    for (f, k, A), y in zip(exps, model.qn_basis):
        xi = F.one()
        for c, e in zip(y, ext):
            xi = xi * (e ** c)
        for a in F.generators():
            v = f * F.weil_chi(a) - F.hilbert(xi, a) * (m // n)
            vals.append(v % m)
    chi = GenuineCharacter(tuple(vals), m, n, {
        "construction": "aligned-basis", "sign_convention": sign_convention,
        "f": [e[0] for e in exps], "k": [e[1] for e in exps], "A": [e[2] for e in exps]})
    return _verified(model, chi)


def _verified(model, chi):
    assert is_genuine_character(model, chi)
    ok, w = check_a_doubleprime(model, chi)
    assert ok, f"(a'') fails: {w}"
    ok, w = check_d_prime(model, chi)
    assert ok, f"(d') fails: {w}"
    return chi


def chi0_formula(model, chi_meta, y, a):
    """Literal closed form prod chi_psi(a^{n_i})^{f_i} (a,a)_n^{sum_{i<j} n_i n_j D(y_i,y_j)}.

    Only meaningful for eta = 1; returns an exponent mod m.
    """
    F, n, m = model.field, model.n, model.m
    ns = model.qn_coords(y)
    f = chi_meta["f"]
    tot = sum(fi * F.weil_chi(a ** ni) for fi, ni in zip(f, ns))
    cross = 0
    for i in range(len(ns)):
        for j in range(i + 1, len(ns)):
            cross += ns[i] * ns[j] * model.bis.bil(model.qn_basis[i], model.qn_basis[j])
    return (tot + F.hilbert(a, a) * cross * (m // n)) % m


# ---------------------------------------------------------------------------
# Weyl action

def weyl_act_character(model, chi: GenuineCharacter, simple: int) -> GenuineCharacter:
    """(w.chi)(y(a)) = chi(y(a)) chi(s_eta(alpha^vee(a)^{-<alpha,y>})) on generators."""
    if not model.fair:
        raise NotFair("Weyl action formula needs a fair bisector")
    items = model.weyl_elements(simple)
    vals = [(v + _value(model, chi, x)) % chi.modulus for v, (_, x) in zip(chi.values, items)]
    return GenuineCharacter(tuple(vals), chi.modulus, chi.n, dict(chi.meta))


def weyl_fixed(model, chi) -> bool:
    return all(weyl_act_character(model, chi, s).same(chi) for s in range(model.rd.semisimple_rank))


def weyl_fixed_character(model, extra=()):
    """A genuine character fixed by every simple reflection (plus extra constraints)."""
    items = [x for s in range(model.rd.semisimple_rank) for _, x in model.weyl_elements(s)]
    return solve_genuine(model, items + list(extra))


# ---------------------------------------------------------------------------
# Brute force

def _check_size(count, limit):
    if count > limit:
        raise ModelTooLarge(f"enumeration of {count} objects exceeds limit {limit}")


def center_bruteforce(model, limit=10 ** 6):
    """Central torus classes of the finite model of T-bar (classes mod n-th powers)."""
    G, n, r = model.full, model.n, model.rank
    _check_size(n ** (2 * r + 1), limit)
    F = model.field
    gens = [G.pure([int(i == k) for i in range(r)], a) for k in range(r) for a in F.generators()]
    out = set()
    for vals in itertools.product(range(n), repeat=2 * r):
        t = tuple(F.cls(vals[2 * i], vals[2 * i + 1]) for i in range(r))
        if all((G.sigma(t, g.t) - G.sigma(g.t, t)) % n == 0 for g in gens):
            out.add(vals)
    return out


def predicted_center(model):
    """Torus classes generated by y(a), y in Y_Qn, a in {pi, u}."""
    n, r = model.n, model.rank
    gens = []
    for y in model.md.Y_Qn.basis:
        for a in (0, 1):
            v = [0] * (2 * r)
            for k in range(r):
                v[2 * k + a] = y[k] % n
            gens.append(tuple(v))
    seen = {tuple([0] * (2 * r))}
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                s = tuple((a + b) % n for a, b in zip(x, g))
                if s not in seen:
                    seen.add(s)
                    new.append(s)
        frontier = new
    return seen


def enumerate_characters(model, elements, denom, limit=1 << 20):
    """All genuine characters with values in (1/denom)Z/Z killing ``elements``.

    Values on unit generators must also be killed by q-1. Pure enumeration,
    used as an oracle.
    """
    r, n, q = model.rank, model.n, model.field.q
    if denom % n:
        raise ValueError("denom must be a multiple of n")
    unit_vals = [v for v in range(denom) if (q - 1) * v % denom == 0]
    _check_size((denom * len(unit_vals)) ** r, limit)
    cons = [model.qn.coord_vector(x) for x in elements]
    emb = denom // n
    found = []
    choices = []
    for i in range(r):
        choices.append(range(denom))
        choices.append(unit_vals)
    for vals in itertools.product(*choices):
        if all((sum(p * v for p, v in zip(c[:-1], vals)) + c[-1] * emb) % denom == 0 for c in cons):
            found.append(GenuineCharacter(tuple(vals), denom, n))
    return found


def distinguished_constraints(model):
    return [x for *_, x in model.d_prime_elements()] + [x for *_, x in model.a_doubleprime_elements()]


def torsor_count(md: MetaplecticData):
    """|Hom((Z/n)^2, Z-heart[n])| from the invariants of Y_Qn / J."""
    n = md.n
    out = 1
    for d in md.z_heart_invariants.torsion:
        out *= gcd(n, d) ** 2
    return out


def splitting_census(model, limit=1 << 20):
    """Brute-force count of distinguished characters (values in (1/n^2)Z)."""
    return len(enumerate_characters(model, distinguished_constraints(model), model.n ** 2, limit))


def unramified_census(model, limit=1 << 20):
    chars = enumerate_characters(model, distinguished_constraints(model), model.n ** 2, limit)
    return [c for c in chars if all(c.values[2 * i + 1] % c.modulus == 0 for i in range(model.rank))]


def satake_exponents(chi: GenuineCharacter):
    return [chi.values[2 * i] % chi.modulus for i in range(len(chi.values) // 2)]
