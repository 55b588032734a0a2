"""Split root data with X = Y = Z^r and the dot-product pairing."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lattices import Sublattice, hnf


class ClassificationError(ValueError):
    pass


class PresetError(ValueError):
    pass


def pair(x, y):
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class RootDatum:
    """Roots live in X, coroots in Y, index-aligned; simple_indices marks Delta.

    ``label`` records how a preset was built, so default quadratic forms and
    labels can be recovered. It plays no role in any axiom check.
    """
    rank: int
    roots: tuple
    coroots: tuple
    simple_indices: tuple
    label: Optional[tuple] = None

    @property
    def simple_roots(self):
        return [self.roots[i] for i in self.simple_indices]

    @property
    def simple_coroots(self):
        return [self.coroots[i] for i in self.simple_indices]

    @property
    def semisimple_rank(self):
        return len(self.simple_indices)

    def cartan_matrix(self):
        """C[i][j] = <alpha_i, alpha_j^vee> over the simple system."""
        sr, sc = self.simple_roots, self.simple_coroots
        return [[pair(a, c) for c in sc] for a in sr]

    def root_index(self, alpha):
        return self.roots.index(tuple(alpha))

    @classmethod
    def from_simple(cls, rank, simple_roots, simple_coroots, label=None):
        """Close a simple system under the simple reflections."""
        sr = [tuple(int(x) for x in a) for a in simple_roots]
        sc = [tuple(int(x) for x in c) for c in simple_coroots]
        pairs = list(zip(sr, sc))
        seen = set(pairs)
        frontier = list(pairs)
        while frontier:
            new = []
            for beta, bv in frontier:
                for a, av in zip(sr, sc):
                    k = pair(beta, av)
                    l = pair(a, bv)
                    cand = (tuple(x - k * y for x, y in zip(beta, a)),
                            tuple(x - l * y for x, y in zip(bv, av)))
                    if cand not in seen:
                        seen.add(cand)
                        new.append(cand)
            frontier = new
        coeff = _simple_coefficients(sc)

        def key(p):
            c = coeff(p[1])
            return (sum(c), tuple(-x for x in c))

        pos = sorted((p for p in seen if _positive(coeff(p[1]))), key=key)
        # simple roots first, in the given order
        pos = list(pairs) + [p for p in pos if p not in pairs]
        neg = [(tuple(-x for x in a), tuple(-x for x in c)) for a, c in pos]
        allp = pos + neg
        return cls(rank, tuple(a for a, _ in allp), tuple(c for _, c in allp),
                   tuple(range(len(sr))), label)


def _simple_coefficients(sc):
    """Return a function expressing a vector in the span of sc in that basis."""
    k = len(sc)
    if k == 0:
        return lambda v: []
    r = len(sc[0])
    # pick k independent columns by Gaussian elimination over Q
    M = [[Fraction(sc[i][j]) for i in range(k)] for j in range(r)]
    rows = []
    A = [row[:] for row in M]
    basis_rows = []
    for j in range(r):
        v = A[j][:]
        for piv, prow in basis_rows:
            if v[piv] != 0:
                f = v[piv] / prow[piv]
                v = [x - f * y for x, y in zip(v, prow)]
        nz = next((i for i, x in enumerate(v) if x != 0), None)
        if nz is not None:
            basis_rows.append((nz, v))
            rows.append(j)
        if len(rows) == k:
            break
    sub = [[M[j][i] for i in range(k)] for j in rows]  # k x k, sub[j][i]

    def solve(v):
        aug = [sub[t][:] + [Fraction(v[rows[t]])] for t in range(k)]
        for c in range(k):
            p = next(i for i in range(c, k) if aug[i][c] != 0)
            aug[c], aug[p] = aug[p], aug[c]
            pv = aug[c][c]
            aug[c] = [x / pv for x in aug[c]]
            for i in range(k):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        return [aug[i][k] for i in range(k)]

    return solve


def _positive(c):
    nz = next((x for x in c if x != 0), 0)
    return nz > 0


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(rd: RootDatum) -> ValidationReport:
    bad = []
    r = rd.rank
    if r < 1:
        bad.append("rank must be positive")
    if len(rd.roots) != len(rd.coroots):
        bad.append("roots and coroots have different lengths")
        return ValidationReport(tuple(bad))
    for i, (a, c) in enumerate(zip(rd.roots, rd.coroots)):
        if len(a) != r or len(c) != r:
            bad.append(f"vector {i} has wrong length")
            return ValidationReport(tuple(bad))
        p = pair(a, c)
        if p != 2:
            bad.append(f"<alpha,alpha^vee>={p}!=2 at index {i}")
    if len(set(rd.coroots)) != len(rd.coroots):
        bad.append("coroots not distinct")
    if len(set(rd.roots)) != len(rd.roots):
        bad.append("roots not distinct")
    if any(i < 0 or i >= len(rd.roots) for i in rd.simple_indices):
        bad.append("simple index out of range")
        return ValidationReport(tuple(bad))
    if len(rd.simple_indices) > r:
        bad.append("semisimple rank exceeds rank")
    sc = rd.simple_coroots
    if sc and len(hnf([list(c) for c in sc])) != len(sc):
        bad.append("simple coroots are linearly dependent")
    pairs = set(zip(rd.roots, rd.coroots))
    for a, av in zip(rd.simple_roots, rd.simple_coroots):
        for beta, bv in pairs:
            k = pair(beta, av)
            l = pair(a, bv)
            img = (tuple(x - k * y for x, y in zip(beta, a)),
                   tuple(x - l * y for x, y in zip(bv, av)))
            if img not in pairs:
                bad.append(f"simple reflection along {list(av)} does not permute the root data")
                break
    return ValidationReport(tuple(bad))


def simple_reflection(rd: RootDatum, simple_index: int, y):
    if not 0 <= simple_index < len(rd.simple_indices):
        raise IndexError("simple index out of range")
    a = rd.roots[rd.simple_indices[simple_index]]
    av = rd.coroots[rd.simple_indices[simple_index]]
    k = pair(a, y)
    return tuple(x - k * c for x, c in zip(y, av))


def dual_reflection(rd: RootDatum, simple_index: int, x):
    a = rd.roots[rd.simple_indices[simple_index]]
    av = rd.coroots[rd.simple_indices[simple_index]]
    k = pair(x, av)
    return tuple(u - k * v for u, v in zip(x, a))


def coroot_lattice(rd: RootDatum) -> Sublattice:
    return Sublattice.span([list(c) for c in rd.simple_coroots], rd.rank)


# ---------------------------------------------------------------------------
# Cartan classification

@dataclass(frozen=True)
class CartanClassification:
    components: tuple  # of (type, rank, labels)

    def names(self):
        return [f"{t}{r}" for t, r, _ in self.components]

    def __str__(self):
        return " x ".join(self.names()) if self.components else "torus"


def _components(C):
    s = len(C)
    seen, comps = set(), []
    for v in range(s):
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in range(s):
                if w != u and C[u][w] != 0 and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _bfs_order(C, comp):
    deg = {v: sum(1 for w in comp if w != v and C[v][w]) for v in comp}
    start = min((v for v in comp if deg[v] <= 1), default=comp[0])
    order, seen, queue = [], {start}, [start]
    while queue:
        u = queue.pop(0)
        order.append(u)
        for w in sorted(comp):
            if w != u and C[u][w] and w not in seen:
                seen.add(w)
                queue.append(w)
    return order, deg


def classify_cartan(C) -> CartanClassification:
    comps = []
    for comp in _components(C):
        order, deg = _bfs_order(C, comp)
        k = len(comp)
        edges = [(u, w) for u in comp for w in comp if u < w and C[u][w]]
        if len(edges) != k - 1:
            raise ClassificationError("Dynkin diagram has a cycle; not of finite type")
        mult = {(u, w): C[u][w] * C[w][u] for u, w in edges}
        if any(m not in (1, 2, 3) for m in mult.values()):
            raise ClassificationError("bond multiplicity not of finite type")
        triple = [e for e, m in mult.items() if m == 3]
        double = [e for e, m in mult.items() if m == 2]
        if any(C[v][v] != 2 for v in comp):
            raise ClassificationError("diagonal entries must be 2")
        if triple:
            if k != 2:
                raise ClassificationError("triple bond outside G2")
            comps.append(("G", 2, tuple(order)))
            continue
        if double:
            if len(double) > 1 or max(deg.values()) > 2:
                raise ClassificationError("not of finite type")
            u, w = double[0]
            if k == 4 and deg[u] == 2 and deg[w] == 2:
                comps.append(("F", 4, tuple(order)))
                continue
            if k == 2:
                comps.append(("B", 2, tuple(order)))
                continue
            end, inner = (u, w) if deg[u] == 1 else (w, u)
            if deg[end] != 1:
                raise ClassificationError("double bond in the middle of a long chain")
            # <alpha_inner, alpha_end^vee> = -2 means the end root is short
            typ = "B" if C[inner][end] == -2 else "C"
            comps.append((typ, k, tuple(order)))
            continue
        if max(deg.values(), default=0) <= 2:
            comps.append(("A", k, tuple(order)))
            continue
        branch = [v for v in comp if deg[v] == 3]
        if len(branch) != 1 or max(deg.values()) > 3:
            raise ClassificationError("not of finite type")
        b = branch[0]
        arms = []
        for start in sorted(w for w in comp if w != b and C[b][w]):
            length, prev, cur = 1, b, start
            while True:
                nxt = [w for w in comp if w not in (prev, cur) and C[cur][w]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            comps.append(("D", k, tuple(order)))
        elif arms == [1, 2, 2]:
            comps.append(("E", 6, tuple(order)))
        elif arms == [1, 2, 3]:
            comps.append(("E", 7, tuple(order)))
        elif arms == [1, 2, 4]:
            comps.append(("E", 8, tuple(order)))
        else:
            raise ClassificationError("simply-laced diagram not of finite type")
    return CartanClassification(tuple(comps))


def classify_base(rd: RootDatum) -> CartanClassification:
    return classify_cartan(rd.cartan_matrix())


def cartan_isomorphisms(C1, C2):
    """Yield bijections p (list) with C2[p[i]][p[j]] == C1[i][j]."""
    s = len(C1)
    if len(C2) != s:
        return
    order = sorted(range(s), key=lambda i: -sum(1 for j in range(s) if C1[i][j]))
    # visit vertices in BFS-ish order so adjacency constraints prune early
    p = [None] * s
    used = [False] * s

    def rec(t):
        if t == s:
            yield list(p)
            return
        i = order[t]
        for cand in range(s):
            if used[cand]:
                continue
            if all(C2[cand][p[j]] == C1[i][j] and C2[p[j]][cand] == C1[j][i]
                   for j in order[:t]) and C2[cand][cand] == C1[i][i]:
                p[i] = cand
                used[cand] = True
                yield from rec(t + 1)
                used[cand] = False
                p[i] = None

    yield from rec(0)


# ---------------------------------------------------------------------------
# Presets

def standard_cartan(typ: str, r: int):
    """Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> in the labeling used here.

    A: chain. B: chain with alpha_r short. C: chain with alpha_1 long.
    D: alpha_1, alpha_2 both attached to alpha_3, then a chain to alpha_r.
    E: chain alpha_1..alpha_{r-1} with alpha_r attached to alpha_3.
    F4: alpha_2 long, alpha_3 short across the double bond. G2: alpha_1 long.
    """
    C = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j):
        C[i][j] = C[j][i] = -1

    if typ == "A":
        if r < 1:
            raise PresetError("A_r needs r >= 1")
        for i in range(r - 1):
            link(i, i + 1)
    elif typ == "B":
        if r < 2:
            raise PresetError("B_r needs r >= 2")
        for i in range(r - 1):
            link(i, i + 1)
        C[r - 2][r - 1] = -2
    elif typ == "C":
        if r < 2:
            raise PresetError("C_r needs r >= 2")
        for i in range(r - 1):
            link(i, i + 1)
        C[0][1] = -2
    elif typ == "D":
        if r < 3:
            raise PresetError("D_r needs r >= 3")
        link(0, 2)
        link(1, 2)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif typ == "E":
        if r not in (6, 7, 8):
            raise PresetError("E_r needs r in {6,7,8}")
        for i in range(r - 2):
            link(i, i + 1)
        link(2, r - 1)
    elif typ == "F":
        if r != 4:
            raise PresetError("F_r needs r = 4")
        link(0, 1)
        link(1, 2)
        link(2, 3)
        C[1][2] = -2
    elif typ == "G":
        if r != 2:
            raise PresetError("G_r needs r = 2")
        C[0][1] = -3
        C[1][0] = -1
    else:
        raise PresetError(f"unknown Cartan type {typ!r}")
    return C


def symmetrizer(C):
    """Smallest positive integers d_i on each component with d_i C_ij symmetric."""
    s = len(C)
    d = [None] * s
    for comp in _components(C):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            u = stack.pop()
            for w in comp:
                if w != u and C[u][w] and d[w] is None:
                    d[w] = d[u] * C[u][w] / C[w][u]
                    stack.append(w)
        den = 1
        for v in comp:
            den = den * d[v].denominator // _gcd(den, d[v].denominator)
        vals = [int(d[v] * den) for v in comp]
        g = 0
        for x in vals:
            g = _gcd(g, x)
        for v in comp:
            d[v] = int(d[v] * den) // g
    return d


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def simply_connected(typ: str, r: int) -> RootDatum:
    C = standard_cartan(typ, r)
    coroots = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    return RootDatum.from_simple(r, C, coroots, label=("SC", typ, r))


def pgl2() -> RootDatum:
    return RootDatum.from_simple(1, [[1]], [[2]], label=("PGL2",))


def gl(r: int) -> RootDatum:
    if r < 1:
        raise PresetError("GL(r) needs r >= 1")
    roots, coroots = [], []
    for i in range(r - 1):
        v = [0] * r
        v[i], v[i + 1] = 1, -1
        roots.append(v)
        coroots.append(v[:])
    return RootDatum.from_simple(r, roots, coroots, label=("GL", r))


def gsp(two_r: int) -> RootDatum:
    """GSp(2r) on the basis (e_0, e_1, ..., e_r)."""
    if two_r < 2 or two_r % 2:
        raise PresetError("GSp(2r) needs an even argument >= 2")
    r = two_r // 2
    N = r + 1
    roots, coroots = [], []
    for i in range(1, r):
        v = [0] * N
        v[i], v[i + 1] = 1, -1
        roots.append(v)
        coroots.append(v[:])
    a = [0] * N
    a[r], a[0] = 2, -1
    c = [0] * N
    c[r] = 1
    roots.append(a)
    coroots.append(c)
    return RootDatum.from_simple(N, roots, coroots, label=("GSp", r))


_PRESET_RE = re.compile(r"^\s*(SC|GL|GSp)\s*\(\s*([A-Za-z]?)\s*,?\s*(\d+)\s*\)\s*$")


def preset(name: str, params=None) -> RootDatum:
    """Build a preset by name: ``SC(E,7)``, ``PGL2``, ``GL(3)``, ``GSp(4)``.

    ``params`` may be a dict with keys ``type``/``rank`` (SC) or ``r`` instead
    of embedding them in the name.
    """
    params = dict(params or {})
    key = name.strip()
    if key.upper() == "PGL2":
        return pgl2()
    if key == "SC" and params:
        return simply_connected(params["type"].upper(), int(params["rank"]))
    if key == "GL" and params:
        return gl(int(params["r"]))
    if key == "GSp" and params:
        return gsp(2 * int(params["r"]))
    m = _PRESET_RE.match(key)
    if not m:
        raise PresetError(f"unknown preset {name!r}")
    fam, typ, num = m.group(1), m.group(2).upper(), int(m.group(3))
    if fam == "SC":
        if not typ:
            raise PresetError("SC preset needs a Cartan type")
        return simply_connected(typ, num)
    if typ:
        raise PresetError(f"unexpected type letter in {name!r}")
    if fam == "GL":
        return gl(num)
    return gsp(num)


def preset_name(rd: RootDatum) -> Optional[str]:
    lab = rd.label
    if not lab:
        return None
    if lab[0] == "SC":
        return f"SC({lab[1]},{lab[2]})"
    if lab[0] == "PGL2":
        return "PGL2"
    if lab[0] == "GL":
        return f"GL({lab[1]})"
    if lab[0] == "GSp":
        return f"GSp({2 * lab[1]})"
    return None


SUPPORTED_SC = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(3, 9)]
    + [("C", r) for r in range(3, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)
