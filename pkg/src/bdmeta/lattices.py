"""Exact integer lattice algebra.

Matrices are tuples of tuples of Python ints (rows). Lattices are spanned by
the rows of a basis matrix inside Z^r. Nothing here uses floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


class NotASublattice(ValueError):
    pass


class NotFiniteIndex(ValueError):
    pass


def _mat(A):
    return [list(map(int, row)) for row in A]


def _freeze(A):
    return tuple(tuple(row) for row in A)


def identity(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def matmul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row) if a) for j in range(cols)] for row in A]


def vecmat(v, A):
    if not A:
        return []
    return [sum(v[k] * A[k][j] for k in range(len(A)) if v[k]) for j in range(len(A[0]))]


def transpose(A):
    return [list(col) for col in zip(*A)]


def det(A):
    """Exact determinant via fraction-free elimination (Bareiss)."""
    M = _mat(A)
    k = len(M)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if M[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if M[r][i] != 0), None)
            if swap is None:
                return 0
            M[i], M[swap] = M[swap], M[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) // prev
        prev = M[i][i]
    return sign * M[k - 1][k - 1]


# ---------------------------------------------------------------------------
# Hermite normal form

def hnf_with_transform(A):
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and U*A = H. Nonzero rows of H come first,
    pivots are positive and entries above a pivot lie in [0, pivot).
    """
    H = _mat(A)
    m = len(H)
    ncols = len(H[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][c]), i))
            if p != r:
                H[r], H[p] = H[p], H[r]
                U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            r += 1
    return H, U


def hnf(A):
    H, _ = hnf_with_transform(A)
    return [row for row in H if any(row)]


def left_kernel(A, nrows=None):
    """Basis (HNF) of {x in Z^m : x*A = 0}."""
    m = len(A) if nrows is None else nrows
    if m == 0:
        return []
    if not A or not A[0]:
        return identity(m)
    H, U = hnf_with_transform(A)
    ker = [U[i] for i in range(m) if not any(H[i])]
    return hnf(ker) if ker else []


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithDecomposition:
    U: tuple
    S: tuple
    V: tuple

    @property
    def diagonal(self):
        k = min(len(self.S), len(self.S[0]) if self.S else 0)
        return tuple(self.S[i][i] for i in range(k))


def smith_normal_form(A) -> SmithDecomposition:
    """U*A*V = S, S diagonal with d1 | d2 | ... and nonnegative entries.

    Pivot rule: smallest nonzero absolute value in the active block, ties
    broken by row-major position.
    """
    M = _mat(A)
    m = len(M)
    ncols = len(M[0]) if m else 0
    U = identity(m)
    V = identity(ncols)

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in M:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in M:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, ncols)):
        cand = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, ncols) if M[i][j]]
        if not cand:
            break
        _, i0, j0 = min(cand)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            clean = True
            for i in range(t + 1, m):
                if M[i][t]:
                    add_row(i, t, -(M[i][t] // M[t][t]))
                    clean = clean and M[i][t] == 0
            for j in range(t + 1, ncols):
                if M[t][j]:
                    add_col(j, t, -(M[t][j] // M[t][t]))
                    clean = clean and M[t][j] == 0
            if not clean:
                cand = [(abs(M[i][t]), i, t) for i in range(t, m) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t, ncols) if M[t][j]]
                _, i0, j0 = min(cand)
                swap_rows(t, i0)
                swap_cols(t, j0)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, ncols)
                        if M[i][j] % M[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
    return SmithDecomposition(_freeze(U), _freeze(M), _freeze(V))


def inverse_unimodular(U):
    """Exact inverse of a unimodular integer matrix."""
    k = len(U)
    H, T = hnf_with_transform(U)
    # H is upper triangular with unit pivots, hence the identity after reduction.
    if H != identity(k):
        raise ValueError("matrix is not unimodular")
    return T


# ---------------------------------------------------------------------------
# Sublattices

@dataclass(frozen=True)
class Sublattice:
    ambient_rank: int
    basis: tuple = field(default=())

    @classmethod
    def span(cls, gens: Sequence[Sequence[int]], ambient_rank: int) -> "Sublattice":
        gens = [list(g) for g in gens if any(g)]
        for g in gens:
            if len(g) != ambient_rank:
                raise ValueError("generator has wrong length")
        return cls(ambient_rank, _freeze(hnf(gens)) if gens else ())

    @classmethod
    def full(cls, r):
        return cls(r, _freeze(identity(r)))

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, v) -> bool:
        return coordinates(self, v) is not None

    def __le__(self, other):
        return all(other.contains(b) for b in self.basis)

    def scaled(self, k):
        return Sublattice.span([[k * x for x in b] for b in self.basis], self.ambient_rank)

    def __add__(self, other):
        return Sublattice.span(list(self.basis) + list(other.basis), self.ambient_rank)


def coordinates(L: Sublattice, v) -> Optional[list]:
    """Integer coordinates of v in the HNF basis of L, or None."""
    v = list(v)
    x = [0] * L.rank
    rest = v[:]
    for i, row in enumerate(L.basis):
        c = next(j for j, a in enumerate(row) if a)
        if rest[c] % row[c]:
            return None
        q = rest[c] // row[c]
        x[i] = q
        if q:
            rest = [a - q * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    return x


def coordinate_matrix(sub: Sublattice, amb: Sublattice):
    rows = []
    for b in sub.basis:
        c = coordinates(amb, b)
        if c is None:
            raise NotASublattice(f"{list(b)} is not in the ambient lattice")
        rows.append(c)
    return rows


def intersect(L1: Sublattice, L2: Sublattice) -> Sublattice:
    if L1.ambient_rank != L2.ambient_rank:
        raise ValueError("ambient ranks differ")
    r = L1.ambient_rank
    if not L1.basis or not L2.basis:
        return Sublattice(r, ())
    stacked = [list(b) for b in L1.basis] + [[-x for x in b] for b in L2.basis]
    ker = left_kernel(stacked)
    k1 = L1.rank
    gens = [vecmat(row[:k1], [list(b) for b in L1.basis]) for row in ker]
    return Sublattice.span(gens, r)


@dataclass(frozen=True)
class QuotientInvariants:
    free_rank: int
    torsion: tuple

    @property
    def order(self):
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out


def quotient_invariants(sub: Sublattice, amb: Sublattice) -> QuotientInvariants:
    C = coordinate_matrix(sub, amb)
    if not C:
        return QuotientInvariants(amb.rank, ())
    diag = [d for d in smith_normal_form(C).diagonal if d]
    return QuotientInvariants(amb.rank - len(diag), tuple(d for d in diag if d > 1))


def aligned_bases(sub: Sublattice, amb: Sublattice):
    """Basis y_i of amb and k_1 | k_2 | ... with {k_i y_i} a basis of sub."""
    C = coordinate_matrix(sub, amb)
    if len(C) != amb.rank:
        raise NotFiniteIndex("sublattice does not have full rank in the ambient lattice")
    snf = smith_normal_form(C)
    Vinv = inverse_unimodular([list(r) for r in snf.V])
    ys = matmul(Vinv, [list(b) for b in amb.basis])
    return [tuple(y) for y in ys], list(snf.diagonal)


def _rational_inverse(G):
    k = len(G)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(G)]
    for c in range(k):
        p = next((i for i in range(c, k) if M[i][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(k):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [row[k:] for row in M]


def congruence_sublattice(amb: Sublattice, B, n: int) -> Sublattice:
    """{y in amb : B(y, z) = 0 mod n for every basis vector z of amb}."""
    A = [list(b) for b in amb.basis]
    G = matmul(matmul(A, B), transpose(A)) if A else []
    k = len(A)
    stacked = [row[:] for row in G] + [[n if i == j else 0 for j in range(k)] for i in range(k)]
    ker = left_kernel(stacked) if k else []
    coeffs = [row[:k] for row in ker]
    return Sublattice.span([vecmat(c, A) for c in coeffs], amb.ambient_rank)


def _dual_route(amb: Sublattice, B, n: int) -> Sublattice:
    """amb intersected with n times the B-dual of amb, by a second route.

    Nondegenerate Gram: compute n*G^{-1} rationally, clear denominators and
    intersect. Degenerate Gram: diagonalize G by SNF and solve coordinatewise.
    """
    A = [list(b) for b in amb.basis]
    k = len(A)
    if k == 0:
        return amb
    G = matmul(matmul(A, B), transpose(A))
    Ginv = _rational_inverse(G)
    if Ginv is not None:
        rows = [[n * x for x in row] for row in Ginv]
        den = 1
        for row in rows:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        scaled_dual = Sublattice.span([[int(x * den) for x in row] for row in rows], k)
        scaled_amb = Sublattice.span([[den if i == j else 0 for j in range(k)] for i in range(k)], k)
        inter = intersect(scaled_dual, scaled_amb)
        coeffs = [[x // den for x in row] for row in inter.basis]
    else:
        snf = smith_normal_form(G)
        U = [list(r) for r in snf.U]
        diag = list(snf.diagonal) + [0] * (k - len(snf.diagonal))
        # c*G = 0 mod n  <=>  (c*U^{-1}) * S = 0 mod n
        scale = [n // gcd(n, d) if d else 1 for d in diag]
        coeffs = [vecmat([scale[i] if j == i else 0 for j in range(k)], U) for i in range(k)]
    return Sublattice.span([vecmat(c, A) for c in coeffs], amb.ambient_rank)


def scaled_dual(amb: Sublattice, B, n: int) -> Sublattice:
    B = _mat(B)
    if any(B[i][j] != B[j][i] for i in range(len(B)) for j in range(len(B))):
        raise ValueError("B must be symmetric")
    a = congruence_sublattice(amb, B, n)
    b = _dual_route(amb, B, n)
    assert a == b, "the two characterizations of the scaled dual disagree"
    return a


def extend_hom(sub: Sublattice, amb: Sublattice, phi, m: int = 0):
    """Extend phi (values on the HNF basis of sub) to amb, into Z (m=0) or Z/m.

    Returns the values on the basis of amb, or None if no extension exists.
    """
    C = coordinate_matrix(sub, amb)
    phi = [int(x) for x in phi]
    if len(phi) != len(C):
        raise ValueError("phi must have one value per basis vector of sub")
    k = amb.rank
    if not C:
        return [0] * k
    snf = smith_normal_form(C)
    U = [list(r) for r in snf.U]
    V = [list(r) for r in snf.V]
    rhs = [sum(U[i][j] * phi[j] for j in range(len(phi))) for i in range(len(phi))]
    diag = snf.diagonal
    w = [0] * k
    for i, target in enumerate(rhs):
        d = diag[i] if i < len(diag) else 0
        if m == 0:
            if d == 0:
                if target:
                    return None
                continue
            if target % d:
                return None
            w[i] = target // d
        else:
            g = gcd(d, m)
            if target % g:
                return None
            if d % m == 0:
                continue
            mm = m // g
            w[i] = (target // g) * pow(d // g, -1, mm) % mm if mm > 1 else 0
    psi = [sum(V[i][j] * w[j] for j in range(k)) for i in range(k)]
    if m:
        psi = [x % m for x in psi]
    return psi


def index(sub: Sublattice, amb: Sublattice):
    return quotient_invariants(sub, amb).order
