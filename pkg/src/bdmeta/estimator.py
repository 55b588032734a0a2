"""scikit-learn style wrapper around the functional core.

``fit`` takes the problem data (root datum, bisector, eta) rather than a
feature matrix; ``transform``/``predict`` evaluate the distinguished
character on rows of torus coordinates.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import covertorus as ct
from . import lattices as lat
from .localfield import FieldClass, TameFieldModel
from .metadual import (BisectorData, check_weyl_invariant, dual_descriptor, enlarged_dual,
                       fair_default_bisector, metaplectic_data)
from .rootdata import RootDatum, preset


class MetaplecticDualEstimator(TransformerMixin, BaseEstimator):
    """Parameters: covering degree ``n``, ``sign_convention`` and residue field size ``q``.

    Rows passed to ``transform`` are [v_1, e_1, ..., v_r, e_r, z]: the element
    prod_i y_i(pi^v_i g^e_i) times zeta_n^z in the aligned basis of Y_Qn.
    """

    def __init__(self, n=2, sign_convention="savin", q=5):
        self.n = n
        self.sign_convention = sign_convention
        self.q = q

    def fit(self, root_datum, bisector="fair-default", eta=None):
        rd = preset(root_datum) if isinstance(root_datum, str) else root_datum
        if not isinstance(rd, RootDatum):
            raise TypeError("root_datum must be a RootDatum or a preset name")
        field = TameFieldModel(self.q, self.n)
        eta = self._eta(field, eta)
        if isinstance(bisector, str):
            if bisector != "fair-default":
                raise ValueError(f"unknown bisector {bisector!r}")
            bis = fair_default_bisector(rd, eta=eta)
        elif isinstance(bisector, BisectorData):
            bis = bisector.with_eta(eta) if eta is not None else bisector
        else:
            bis = BisectorData(np.asarray(bisector, dtype=int).tolist(), eta)
        check_weyl_invariant(rd, bis)

        md = metaplectic_data(rd, bis, self.n)
        model = ct.CoveringTorusModel(rd, bis, self.n, field, md)
        self.root_datum_ = rd
        self.bisector_ = bis
        self.field_ = field
        self.metaplectic_ = md
        self.model_ = model
        self.Y_Qn_ = np.array(md.Y_Qn.basis, dtype=int)
        self.Ysc_Qn_ = np.array(md.Ysc_Qn.basis, dtype=int).reshape(-1, rd.rank)
        self.J_ = np.array(md.J.basis, dtype=int)
        self.aligned_basis_ = np.array(model.qn_basis, dtype=int)
        self.aligned_k_ = np.array(model.k, dtype=int)
        self.index_ = lat.index(md.J, md.Y_Qn)
        self.dual_ = dual_descriptor(md)
        self.enlarged_dual_ = enlarged_dual(md)
        self.obstructions_ = ct.obstruction_report(model) if model.fair else None
        try:
            self.chi0_ = ct.distinguished_character(model, self.sign_convention)
        except (ct.ObstructionFails, ct.NotFair):
            self.chi0_ = None
        self.n_features_in_ = 2 * rd.rank + 1
        return self

    @staticmethod
    def _eta(field, eta):
        if eta is None or (isinstance(eta, str) and eta == "trivial"):
            return None
        out = []
        for e in eta:
            if isinstance(e, FieldClass):
                out.append(e)
            elif isinstance(e, (list, tuple)) and len(e) == 3 and e[0] == "pi":
                out.append(field.cls(int(e[1]), int(e[2])))
            else:
                out.append(field.cls(*[int(x) for x in e]))
        return tuple(out)

    def _elements(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=int))
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} columns, got {X.shape[1]}")
        F = self.field_
        r = self.root_datum_.rank
        for row in X:
            t = tuple(F.cls(int(row[2 * i]), int(row[2 * i + 1])) for i in range(r))
            yield ct.Elt(t, int(row[-1]) % self.n)

    def transform(self, X):
        """Character values as exponents of zeta_m, one column."""
        check_is_fitted(self, "model_")
        if self.chi0_ is None:
            raise ct.ObstructionFails("distinguished", "no distinguished character for this datum")
        G = self.model_.qn
        vals = [self.chi0_.value_on(G, x) for x in self._elements(X)]
        return np.array(vals, dtype=int).reshape(-1, 1)

    def predict(self, X):
        return self.transform(X).ravel()

    @property
    def modulus_(self):
        check_is_fitted(self, "chi0_")
        return None if self.chi0_ is None else self.chi0_.modulus
