import pytest

from plateau_dose.inference import QuadratureConfig, fit_model
from plateau_dose.mh import mh_oracle
from plateau_dose.models import DoseGrid, Phase, PlateauModel, SubjectRecord, default_prior

GRID3 = DoseGrid.default(3, 0.5, (0.5, 0.65, 0.8))
PRIOR3 = default_prior(GRID3)


def make_data(counts):
    data = []
    for level, y, n in counts:
        for i in range(n):
            data.append(SubjectRecord(level, i < y, False, 0, Phase.STARTUP))
    return data


def test_rejects_too_few_draws():
    with pytest.raises(ValueError):
        mh_oracle(PlateauModel(2, GRID3), [], PRIOR3, draws=5000, seed=1)


def test_fixed_seed_bit_identical():
    data = make_data([(1, 3, 6), (2, 4, 6)])
    a = mh_oracle(PlateauModel(2, GRID3), data, PRIOR3, draws=10_000, seed=5)
    b = mh_oracle(PlateauModel(2, GRID3), data, PRIOR3, draws=10_000, seed=5)
    assert a == b


def test_zero_data_recovers_prior_moments():
    quad = QuadratureConfig()
    for tau in (1, 3):
        mh = mh_oracle(PlateauModel(tau, GRID3), [], PRIOR3, draws=120_000, seed=11)
        prior_fit = fit_model(PlateauModel(tau, GRID3), [], PRIOR3, quad)
        for lvl in range(3):
            diff = abs(mh.phi_hat[lvl] - prior_fit.phi_hat[lvl])
            assert diff <= 4.0 * mh.phi_mcse[lvl]
        assert mh.warning is None


def test_agreement_with_quadrature():
    quad = QuadratureConfig()
    data = make_data([(1, 6, 10), (2, 7, 10), (3, 8, 10)])
    for tau in (1, 2, 3):
        mh = mh_oracle(PlateauModel(tau, GRID3), data, PRIOR3, draws=150_000, seed=23)
        qf = fit_model(PlateauModel(tau, GRID3), data, PRIOR3, quad)
        for lvl in range(3):
            assert abs(mh.phi_hat[lvl] - qf.phi_hat[lvl]) <= 4.0 * mh.phi_mcse[lvl]
            assert abs(mh.exceed[lvl] - qf.exceed[lvl]) <= 5.0 * max(
                mh.exceed_mcse[lvl], 1e-4
            )


def test_healthy_acceptance_rate():
    data = make_data([(1, 2, 6), (2, 3, 6), (3, 4, 6)])
    mh = mh_oracle(PlateauModel(3, GRID3), data, PRIOR3, draws=50_000, seed=3)
    assert 0.1 < mh.acceptance_rate < 0.6
    assert mh.warning is None
