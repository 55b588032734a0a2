"""Residual extension data and the hyperspecial splitting decision (tame case)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import lattices as lat
from .lattices import Sublattice
from .metadual import BisectorData
from .rootdata import RootDatum, _simple_coefficients


@dataclass(frozen=True)
class ResidualData:
    rd: RootDatum
    f_kappa: tuple  # ord(eta(alpha_i^vee)) per simple coroot
    bis: Optional[BisectorData] = None

    @property
    def sub(self):
        return Sublattice.span([list(c) for c in self.rd.simple_coroots], self.rd.rank)

    @property
    def amb(self):
        return Sublattice.full(self.rd.rank)


@dataclass(frozen=True)
class SplittingVerdict:
    verdict: str  # "split", "nonsplit-proven" or "unknown"
    reason: str
    witness: Optional[tuple] = None

    def as_dict(self):
        return {"verdict": self.verdict, "reason": self.reason,
                "witness": None if self.witness is None else list(self.witness)}


def residual_data(rd: RootDatum, eta, bis: Optional[BisectorData] = None) -> ResidualData:
    if eta is None:
        eta = ()
    eta = tuple(eta)
    if eta and len(eta) != rd.semisimple_rank:
        raise ValueError("eta needs one value per simple coroot")
    vals = tuple(e.val for e in eta) if eta else (0,) * rd.semisimple_rank
    return ResidualData(rd, vals, bis)


def _phi_on_hnf(data: ResidualData, m=0):
    coef = _simple_coefficients([list(c) for c in data.rd.simple_coroots])
    out = []
    for b in data.sub.basis:
        c = coef(list(b))
        v = sum(int(ci) * f for ci, f in zip(c, data.f_kappa))
        out.append(v % m if m else v)
    return out


def _extend(data, m=0):
    if not data.rd.simple_indices:
        return tuple([0] * data.rd.rank)
    psi = lat.extend_hom(data.sub, data.amb, _phi_on_hnf(data, m), m)
    return None if psi is None else tuple(psi)


def is_residually_split(data: ResidualData):
    """(split?, witness hom Y -> Z on the standard basis)."""
    psi = _extend(data, 0)
    return psi is not None, psi


def _pgl2_shape(data: ResidualData):
    rd = data.rd
    if rd.rank != 1 or rd.semisimple_rank != 1:
        return False
    if abs(rd.simple_coroots[0][0]) != 2:
        return False
    return data.bis is None or all(x == 0 for row in data.bis.D for x in row)


def splits_degree_n(data: ResidualData, n: int) -> SplittingVerdict:
    if n < 1:
        raise ValueError("n must be positive")
    ok, psi = is_residually_split(data)
    if ok:
        return SplittingVerdict("split", "valuations of eta extend to Y", psi)
    psi = _extend(data, n)
    if psi is not None:
        return SplittingVerdict("split", f"valuations of eta extend to Y mod {n}", psi)
    # Only the PGL2 determinant argument (D = 0, n = 2, odd valuation) is a proof.
    if _pgl2_shape(data) and n == 2 and data.f_kappa[0] % 2:
        return SplittingVerdict("nonsplit-proven", "determinant argument for PGL2 with odd valuation")
    return SplittingVerdict("unknown", "sufficient conditions fail")
