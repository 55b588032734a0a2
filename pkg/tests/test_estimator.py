import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from bdmeta import covertorus as ct
from bdmeta.estimator import MetaplecticDualEstimator
from bdmeta.rootdata import gl


def test_params_and_clone():
    est = MetaplecticDualEstimator(n=3, sign_convention="paper7", q=7)
    assert est.get_params() == {"n": 3, "sign_convention": "paper7", "q": 7}
    c = clone(est)
    assert c.get_params() == est.get_params() and not hasattr(c, "model_")


def test_mp2_values():
    est = MetaplecticDualEstimator(n=2, q=7).fit("SC(A,1)")
    assert est.index_ == 2 and est.n_features_in_ == 3
    assert est.predict([[1, 0, 0], [0, 3, 1], [2, 0, 0]]).tolist() == [1, 2, 0]
    assert est.transform([[1, 0, 0]]).shape == (1, 1)
    assert est.modulus_ == 4


def test_fitted_attributes_match_core():
    est = MetaplecticDualEstimator(n=2, q=5).fit(gl(3))
    assert est.J_.shape == (3, 3) and est.aligned_basis_.shape == (3, 3)
    assert est.dual_.recognized_name.startswith("{(g,lam)")
    assert all(v["pass"] for v in est.obstructions_.values())
    direct = ct.distinguished_character(est.model_)
    assert direct.same(est.chi0_)


def test_obstructed_fit_has_no_character():
    est = MetaplecticDualEstimator(n=2, q=7).fit("PGL2", eta=[["pi", 1, 0]])
    assert est.chi0_ is None and not est.obstructions_["ob1"]["pass"]
    with pytest.raises(ct.ObstructionFails):
        est.transform([[0, 0, 0]])


def test_matrix_bisector_and_errors():
    est = MetaplecticDualEstimator(n=2, q=5).fit("SC(A,1)", bisector=np.array([[1]]))
    assert est.bisector_.D == ((1,),) or list(map(list, est.bisector_.D)) == [[1]]
    with pytest.raises(ValueError):
        est.predict([[0, 0]])
    with pytest.raises(NotFittedError):
        MetaplecticDualEstimator().transform([[0, 0, 0]])
    with pytest.raises(TypeError):
        MetaplecticDualEstimator().fit(42)
