"""Metaplectic lattices, the modified root datum and the dual group."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from . import lattices as lat
from .lattices import Sublattice
from .rootdata import (RootDatum, cartan_isomorphisms, classify_base, gl, gsp, pair,
                       simply_connected, standard_cartan, symmetrizer, validate,
                       _simple_coefficients)


class NotWeylInvariant(ValueError):
    pass


class NotFair(ValueError):
    pass


class WrongType(ValueError):
    pass


# ---------------------------------------------------------------------------
# Bisectors

@dataclass(frozen=True)
class BisectorData:
    D: tuple
    eta: Optional[tuple] = None  # FieldClass per simple coroot; None means trivial

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(tuple(int(x) for x in row) for row in self.D))
        if self.eta is not None:
            object.__setattr__(self, "eta", tuple(self.eta))

    @property
    def rank(self):
        return len(self.D)

    def bil(self, y, z):
        """D(y, z)."""
        return sum(y[i] * self.D[i][j] * z[j] for i in range(len(y)) if y[i] for j in range(len(z)) if z[j])

    def Q(self, y):
        return self.bil(y, y)

    def B(self, y, z):
        return self.bil(y, z) + self.bil(z, y)

    def gram(self):
        r = self.rank
        return [[self.D[i][j] + self.D[j][i] for j in range(r)] for i in range(r)]

    def with_eta(self, eta):
        return BisectorData(self.D, eta)


def weyl_violations(rd: RootDatum, bis: BisectorData):
    """Pairs (simple index, basis index) where B(a^vee, y) != Q(a^vee)<a, y>."""
    bad = []
    r = rd.rank
    for s, (a, av) in enumerate(zip(rd.simple_roots, rd.simple_coroots)):
        qa = bis.Q(av)
        for k in range(r):
            e = [int(i == k) for i in range(r)]
            if bis.B(av, e) != qa * pair(a, e):
                bad.append((s, k))
    return bad


def check_weyl_invariant(rd, bis):
    bad = weyl_violations(rd, bis)
    if bad:
        raise NotWeylInvariant(f"B_Q(a^vee, y) != Q(a^vee)<a,y> at (simple, basis) = {bad[0]}")


def is_fair(rd: RootDatum, bis: BisectorData) -> bool:
    r = rd.rank
    for av in rd.simple_coroots:
        if bis.Q(av) % 2:
            continue
        for k in range(r):
            e = [int(i == k) for i in range(r)]
            if bis.bil(av, e) % 2 or bis.bil(e, av) % 2:
                return False
    return True


def _gf2_solve(rows, rhs, nvars):
    """Solve rows * t = rhs over GF(2); free variables set to 0. None if inconsistent."""
    rows = [r[:] + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    rk = 0
    for c in range(nvars):
        p = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[rk])]
        piv_cols.append(c)
        rk += 1
    if any(row[-1] and not any(row[:-1]) for row in rows):
        return None
    t = [0] * nvars
    for i, c in enumerate(piv_cols):
        t[c] = rows[i][-1]
    return t


def fair_bisector(rd: RootDatum, B) -> BisectorData:
    """A fair bisector of the even symmetric form B, triangular when possible.

    Starts from D_ij = 0 (i<j), B_ii/2, B_ij (i>j) and flips the parity of
    off-diagonal pairs by solving the fairness conditions over GF(2).
    """
    r = len(B)
    if any(B[i][i] % 2 for i in range(r)):
        raise ValueError("B must be even on the diagonal")
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]

    def build(t):
        D = [[0] * r for _ in range(r)]
        for i in range(r):
            D[i][i] = B[i][i] // 2
        for (i, j), ti in zip(pairs, t):
            D[i][j] = ti
            D[j][i] = B[i][j] - ti
        return D

    D0 = build([0] * len(pairs))
    rows, rhs = [], []
    for av in rd.simple_coroots:
        qa = sum(av[i] * D0[i][j] * av[j] for i in range(r) for j in range(r))
        if qa % 2:
            continue
        for k in range(r):
            # D(av, e_k) and D(e_k, av) as affine functions of t over GF(2)
            for left in (True, False):
                row = []
                for (i, j) in pairs:
                    # d/dt of D(av,e_k): t adds +1 at (i,j), -1 at (j,i)
                    if left:
                        coef = (av[i] if k == j else 0) + (av[j] if k == i else 0)
                    else:
                        coef = (av[j] if k == i else 0) + (av[i] if k == j else 0)
                    row.append(coef % 2)
                base = (sum(av[i] * D0[i][k] for i in range(r)) if left
                        else sum(D0[k][i] * av[i] for i in range(r)))
                rows.append(row)
                rhs.append(base % 2)
    t = _gf2_solve(rows, rhs, len(pairs)) if rows else [0] * len(pairs)
    if t is None:
        raise NotFair("no fair bisector exists for this form")
    out = BisectorData(build(t))
    assert is_fair(rd, out)
    return out


def default_gram(rd: RootDatum, scale: int = 1, q0: int = 0):
    """The preset's Weyl-invariant even form B_Q on the Y basis.

    SC: Q = 1 on short coroots. PGL2: Q = 0. GL(r): restriction from SL(r+1)
    (B(e_i, e_j) = 2 if i = j else 1). GSp(2r): Q(a_i^vee) = 2 (i<r),
    Q(e_r) = 1, Q(e_0) = q0.
    """
    lab = rd.label
    if lab is None:
        raise ValueError("no default form for a custom root datum; pass a matrix")
    if lab[0] == "SC":
        C = rd.cartan_matrix()
        d = symmetrizer(C)
        B = [[d[i] * C[i][j] for j in range(len(C))] for i in range(len(C))]
    elif lab[0] == "PGL2":
        B = [[0]]
    elif lab[0] == "GL":
        r = lab[1]
        B = [[2 if i == j else 1 for j in range(r)] for i in range(r)]
    elif lab[0] == "GSp":
        r = lab[1]
        B = [[0] * (r + 1) for _ in range(r + 1)]
        for i in range(1, r + 1):
            B[i][i] = 2
            B[i][0] = B[0][i] = -1
        B[0][0] = 2 * q0
    else:
        raise ValueError(f"unknown preset label {lab}")
    return [[scale * x for x in row] for row in B]


def fair_default_bisector(rd: RootDatum, scale: int = 1, q0: int = 0, eta=None) -> BisectorData:
    bis = fair_bisector(rd, default_gram(rd, scale, q0))
    check_weyl_invariant(rd, bis)
    return bis.with_eta(eta)


def n_alpha(q_alpha: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return n // gcd(n, q_alpha)


def eta_of(rd: RootDatum, bis: BisectorData, field, y):
    """eta extended homomorphically to Y^sc (as a FieldClass)."""
    coeff = _simple_coefficients(rd.simple_coroots)(list(y)) if rd.simple_indices else []
    if any(c.denominator != 1 for c in coeff):
        raise ValueError("vector is not in the coroot lattice")
    out = field.one()
    for c, e in zip(coeff, bis.eta or ()):
        out = out * (e ** int(c))
    return out


# ---------------------------------------------------------------------------
# Metaplectic data

@dataclass(frozen=True)
class MetaplecticData:
    rd: RootDatum
    bis: BisectorData
    n: int
    n_alpha: tuple
    Y: Sublattice
    Y_Qn: Sublattice
    Ysc_Qn: Sublattice
    J: Sublattice
    modified_coroots: tuple
    modified_roots: tuple  # Fractions against X
    X_Qn: tuple  # dual basis of the HNF basis of Y_Qn, as Fractions
    dual_datum: RootDatum  # character lattice Y_Qn, in Y_Qn-basis coordinates
    center_invariants: lat.QuotientInvariants
    z_heart_invariants: lat.QuotientInvariants
    tsc_torsion_rank: int

    @property
    def rank(self):
        return self.rd.rank

    def y_qn_coords(self, y):
        c = lat.coordinates(self.Y_Qn, y)
        if c is None:
            raise ValueError(f"{list(y)} is not in Y_Qn")
        return c

    @property
    def modified_simple_coroots(self):
        return [self.modified_coroots[i] for i in self.rd.simple_indices]


def _inverse_transpose(A):
    k = len(A)
    inv = lat._rational_inverse(A)
    return [[inv[j][i] for j in range(k)] for i in range(k)]


def metaplectic_data(rd: RootDatum, bis: BisectorData, n: int) -> MetaplecticData:
    if not validate(rd).ok:
        raise ValueError("invalid root datum")
    check_weyl_invariant(rd, bis)
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    r = rd.rank
    Y = Sublattice.full(r)
    nas = tuple(n_alpha(bis.Q(c), n) for c in rd.coroots)
    Y_Qn = lat.scaled_dual(Y, bis.gram(), n)
    mcor = tuple(tuple(k * x for x in c) for k, c in zip(nas, rd.coroots))
    mroot = tuple(tuple(Fraction(x, k) for x in a) for k, a in zip(nas, rd.roots))
    Ysc_Qn = Sublattice.span([list(c) for c in mcor], r)
    J = Y.scaled(n) + Ysc_Qn
    A = [list(b) for b in Y_Qn.basis]
    Xb = _inverse_transpose(A)
    # coordinates of the G-dual datum against the Y_Qn basis and its dual basis
    roots_dual, coroots_dual = [], []
    for c, a in zip(mcor, mroot):
        cc = lat.coordinates(Y_Qn, c)
        if cc is None:
            raise AssertionError("modified coroot outside Y_Qn")
        vals = [sum(x * y for x, y in zip(a, b)) for b in A]
        if any(v.denominator != 1 for v in vals):
            raise AssertionError("modified root is not integral on Y_Qn")
        roots_dual.append(tuple(cc))
        coroots_dual.append(tuple(int(v) for v in vals))
    dual = RootDatum(r, tuple(roots_dual), tuple(coroots_dual), rd.simple_indices)
    rep = validate(dual)
    if not rep.ok:
        raise AssertionError(f"modified datum invalid: {rep.violations}")
    return MetaplecticData(
        rd=rd, bis=bis, n=n, n_alpha=nas, Y=Y, Y_Qn=Y_Qn, Ysc_Qn=Ysc_Qn, J=J,
        modified_coroots=mcor, modified_roots=mroot, X_Qn=tuple(tuple(row) for row in Xb),
        dual_datum=dual,
        center_invariants=lat.quotient_invariants(Ysc_Qn, Y_Qn),
        z_heart_invariants=lat.quotient_invariants(J, Y_Qn),
        tsc_torsion_rank=rd.semisimple_rank if n > 1 else 0,
    )


# ---------------------------------------------------------------------------
# Root datum isomorphism and the recognizer

def _annihilator(rd: RootDatum):
    """Primitive basis of {x in X : <x, c> = 0 for every simple coroot c}."""
    N = rd.rank
    cor = rd.simple_coroots
    if not cor:
        return lat.identity(N)
    A = [[c[k] for c in cor] for k in range(N)]
    return lat.left_kernel(A)


def isomorphism(rd1: RootDatum, rd2: RootDatum):
    """An isomorphism of root data X1 -> X2 (matrix acting on column vectors), or None.

    Implemented for central torus rank <= 1, which covers every group in the
    recognizer table. Raises NotImplementedError beyond that.
    """
    if rd1.rank != rd2.rank or rd1.semisimple_rank != rd2.semisimple_rank:
        return None
    N, s = rd1.rank, rd1.semisimple_rank
    t = N - s
    if t > 1:
        raise NotImplementedError("isomorphism test needs central torus rank <= 1")
    z1 = _annihilator(rd1)
    z2 = _annihilator(rd2)
    C1, C2 = rd1.cartan_matrix(), rd2.cartan_matrix()
    sr1, sr2 = rd1.simple_roots, rd2.simple_roots
    for p in cartan_isomorphisms(C1, C2):
        for sign in ((1, -1) if t else (1,)):
            src = [list(a) for a in sr1] + [list(v) for v in z1]
            dst = [list(sr2[p[i]]) for i in range(s)] + [[sign * x for x in v] for v in z2]
            # M * src_k = dst_k for each k; solve M = DST * SRC^{-1} (columns)
            S = [[Fraction(src[k][i]) for k in range(N)] for i in range(N)]
            Sinv = lat._rational_inverse(S)
            if Sinv is None:
                continue
            Dm = [[dst[k][i] for k in range(N)] for i in range(N)]
            M = [[sum(Dm[i][k] * Sinv[k][j] for k in range(N)) for j in range(N)] for i in range(N)]
            if any(x.denominator != 1 for row in M for x in row):
                continue
            Mi = [[int(x) for x in row] for row in M]
            if abs(lat.det(Mi)) == 1:
                return Mi
    return None


def adjoint(typ, r, extra=0):
    """Adjoint group of the given type, times a rank-``extra`` torus."""
    C = standard_cartan(typ, r)
    N = r + extra
    roots = [[int(i == j) for j in range(N)] for i in range(r)]
    coroots = [[C[i][j] for i in range(r)] + [0] * extra for j in range(r)]
    return RootDatum.from_simple(N, roots, coroots)


def det_family(r, d):
    """{(g, lam) in GL_r x GL_1 : det g = lam^d} on the Y basis {e_i - e_{i+1}, d e_r + f}."""
    if r == 1:
        return RootDatum(1, (), (), ())
    C = standard_cartan("A", r - 1)
    roots = [C[i] + [(-d if i == r - 2 else 0)] for i in range(r - 1)]
    coroots = [[int(i == j) for j in range(r)] for i in range(r - 1)]
    return RootDatum.from_simple(r, roots, coroots)


def recognizer_candidates(cartan, rank):
    """(name, datum) pairs compatible with the Cartan type and rank."""
    comps = cartan.components
    out = []
    if len(comps) > 1:
        return out
    s = comps[0][1] if comps else 0
    typ = comps[0][0] if comps else None
    t = rank - s
    if t == 0 and typ == "A":
        out.append((f"SL_{s + 1}", simply_connected("A", s)))
        out.append((f"PGL_{s + 1}", adjoint("A", s)))
    if t == 0 and typ == "C":
        out.append((f"Sp_{2 * s}", simply_connected("C", s)))
    if t == 0 and typ == "B" and s == 2:
        out.append(("Sp_4", simply_connected("C", 2)))
    if t == 1 and (typ == "C" or (typ == "B" and s == 2)):
        out.append((f"GSp_{2 * s}", gsp(2 * s)))
        out.append((f"PGSp_{2 * s} x GL_1", adjoint("C", s, extra=1)))
    if t == 1 and (typ == "A" or typ is None):
        r = s + 1
        out.append((f"GL_{r}", gl(r)))
        if s == 1:
            out.append(("GSp_2", gsp(2)))
        for d in range(2, r + 2):
            out.append((f"{{(g,lam): det g = lam^{d}}} in GL_{r} x GL_1", det_family(r, d)))
    return out


@dataclass(frozen=True)
class DualGroupDescriptor:
    cartan: object
    center_free_rank: int
    center_torsion: tuple
    recognized_name: Optional[str]
    aliases: tuple = ()

    def as_dict(self):
        return {
            "cartan": [[t, r, list(lab)] for t, r, lab in self.cartan.components],
            "cartan_str": str(self.cartan),
            "center_free_rank": self.center_free_rank,
            "center_torsion": list(self.center_torsion),
            "recognized_name": self.recognized_name,
            "aliases": list(self.aliases),
        }


def dual_descriptor(md: MetaplecticData) -> DualGroupDescriptor:
    dual = md.dual_datum
    cart = classify_base(dual)
    names = []
    for name, ref in recognizer_candidates(cart, dual.rank):
        try:
            if isomorphism(dual, ref) is not None:
                names.append(name)
        except NotImplementedError:
            pass
    lab = md.rd.label
    if lab and lab[0] == "GL" and names:
        # name the Kazhdan-Patterson family member matching the source, when it matches
        r, d = lab[1], gcd(lab[1] + 1, md.n)
        pref = f"{{(g,lam): det g = lam^{d}}} in GL_{r} x GL_1" if d > 1 else f"GL_{r}"
        if pref in names:
            names.remove(pref)
            names.insert(0, pref)
    ci = md.center_invariants
    return DualGroupDescriptor(cart, ci.free_rank, ci.torsion, names[0] if names else None, tuple(names))


# ---------------------------------------------------------------------------
# Enlarged dual

@dataclass(frozen=True)
class EnlargedDualDescriptor:
    base: DualGroupDescriptor
    n: int
    torsion_rank: int
    action_exponents: tuple  # generator j scales the simple root space i by zeta_n^{a[j][i]}
    pairing_exponents: tuple  # <alpha_{Q,n,i}, alpha^vee_{Q,n,j}> mod n
    coweight_lifts: tuple  # fundamental coweights of the dual group in X_Qn (x) Q
    direct_product_flag: bool

    @property
    def torsion_order(self):
        return self.n ** self.torsion_rank

    def as_dict(self):
        return {
            "n": self.n,
            "torsion_rank": self.torsion_rank,
            "torsion_order": self.torsion_order,
            "action_exponents": [list(r) for r in self.action_exponents],
            "pairing_exponents": [list(r) for r in self.pairing_exponents],
            "coweight_lifts": [[str(x) for x in r] for r in self.coweight_lifts],
            "direct_product": self.direct_product_flag,
        }


def enlarged_dual(md: MetaplecticData) -> EnlargedDualDescriptor:
    base = dual_descriptor(md)
    n = md.n
    s = md.rd.semisimple_rank if n > 1 else 0
    dual = md.dual_datum
    C = dual.cartan_matrix()  # <beta_i, gamma_j>, beta = modified coroots
    pairing = tuple(tuple(C[j][i] % n for j in range(len(C))) for i in range(len(C))) if s else ()
    action = tuple(tuple(int(i == j) for i in range(s)) for j in range(s))
    lifts = ()
    if s:
        Cf = [[Fraction(x) for x in row] for row in C]
        Cinv = lat._rational_inverse(Cf)
        gam = dual.simple_coroots
        lifts = tuple(
            tuple(sum(Cinv[k][j] * gam[k][c] for k in range(s)) for c in range(dual.rank))
            for j in range(s))
    flag = True
    if s:
        gens = [list(c) for c in md.modified_simple_coroots]
        coeff = _simple_coefficients(gens)
        sub = md.Ysc_Qn
        for j in range(s):
            phi = []
            for b in sub.basis:
                c = coeff(list(b))
                assert all(x.denominator == 1 for x in c)
                phi.append(int(c[j]))
            if lat.extend_hom(sub, md.Y_Qn, phi, n) is None:
                flag = False
                break
    return EnlargedDualDescriptor(base, n, s, action, pairing, lifts, flag)


# ---------------------------------------------------------------------------
# Omega subsets

def _simply_laced_type(rd):
    lab = rd.label
    if not lab or lab[0] != "SC" or lab[1] not in "ADE":
        raise WrongType("Omega subsets are defined for simply-laced simply-connected presets")
    return lab[1], lab[2]


def omega_subsets(rd: RootDatum, md: Optional[MetaplecticData] = None):
    """All vertex sets Omega with (i) no two adjacent, (ii) every outside vertex
    adjacent to an even number of Omega vertices. Returns [(Omega, e_Omega)].

    Omega is a tuple of 1-based simple-root labels. The bijection with
    Y_{Q,2}/J is checked before returning.
    """
    _simply_laced_type(rd)
    C = rd.cartan_matrix()
    s = len(C)
    adj = [[i != j and C[i][j] != 0 for j in range(s)] for i in range(s)]
    out = []
    for k in range(s + 1):
        for om in combinations(range(s), k):
            S = set(om)
            if any(adj[i][j] for i in om for j in om):
                continue
            if any(sum(adj[v][w] for w in om) % 2 for v in range(s) if v not in S):
                continue
            e = [0] * rd.rank
            for i in om:
                for t, x in enumerate(rd.simple_coroots[i]):
                    e[t] += x
            out.append((tuple(i + 1 for i in om), tuple(e)))
    if md is None:
        md = metaplectic_data(rd, fair_default_bisector(rd), 2)
    idx = md.z_heart_invariants.order
    if len(out) != idx:
        raise AssertionError(f"{len(out)} Omega subsets but [Y_Q2 : J] = {idx}")
    for om, e in out:
        if not md.Y_Qn.contains(e):
            raise AssertionError("e_Omega not in Y_Q2")
        if md.bis.Q(e) != len(om):
            raise AssertionError("Q(e_Omega) != |Omega|")
    for (o1, e1), (o2, e2) in combinations(out, 2):
        if md.J.contains([a - b for a, b in zip(e1, e2)]):
            raise AssertionError(f"Omega sets {o1} and {o2} give the same class")
    return out


# ---------------------------------------------------------------------------
# E1 cocycle, Levi restriction

def e1_cocycle(field, a, b, y, bis: BisectorData, md: Optional[MetaplecticData] = None) -> int:
    """c_1(a, b)(y) = (a, b)_n^{Q(y)} as a mu_n exponent."""
    q = bis.Q(y)
    n = field.n
    if md is not None and not md.Y_Qn.contains(y):
        raise ValueError("y must lie in Y_Qn")
    if n % 2 and md is not None:
        assert q % n == 0
    return field.hilbert(a, b) * q % n


def levi_restriction(rd: RootDatum, bis: BisectorData, n: int, subset):
    subset = list(subset)
    s = rd.semisimple_rank
    if any(not 0 <= i < s for i in subset) or len(set(subset)) != len(subset):
        raise ValueError("invalid subset of simple indices")
    subset = sorted(subset)
    sr = [rd.simple_roots[i] for i in subset]
    sc = [rd.simple_coroots[i] for i in subset]
    rdM = RootDatum.from_simple(rd.rank, sr, sc) if subset else RootDatum(rd.rank, (), (), ())
    eta = None if bis.eta is None else tuple(bis.eta[i] for i in subset)
    return rdM, BisectorData(bis.D, eta), n
