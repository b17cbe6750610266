import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlsemigroup import (
    DomainError,
    EvalResult,
    MLParams,
    SeriesConfig,
    ml_at_time,
    ml_e,
    ml_e2,
)

from _refs import E_ERFC_1, E_MINUS_1, INV_GAMMA_HALF, ML_HALF_AT_1, ML_REFS

scipy_special = pytest.importorskip("scipy.special")


class TestConfigAndParams:
    def test_defaults(self):
        cfg = SeriesConfig()
        assert cfg.tol == 1e-14
        assert cfg.max_terms == 10000
        assert cfg.z_cap == 50.0

    @pytest.mark.parametrize(
        "kwargs",
        [dict(tol=0.0), dict(tol=-1e-3), dict(max_terms=0), dict(z_cap=0.0)],
    )
    def test_invalid_config(self, kwargs):
        with pytest.raises(DomainError):
            SeriesConfig(**kwargs)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(alpha=0.0, lam=1.0),
            dict(alpha=1.5, lam=1.0),
            dict(alpha=-0.5, lam=1.0),
            dict(alpha=0.5, lam=1.0, beta=0.0),
            dict(alpha=0.5, lam=math.inf),
        ],
    )
    def test_invalid_params(self, kwargs):
        with pytest.raises(DomainError):
            MLParams(**kwargs)


class TestExamples:
    def test_two_parameter_at_zero_is_reciprocal_gamma(self):
        # E_{a,b}(0) = 1/Gamma(b); at a = b = 1/2 that is 1/sqrt(pi)
        res = ml_e2(0.5, 0.5, 0.0)
        assert res.converged
        assert res.value == pytest.approx(INV_GAMMA_HALF, rel=1e-13)

    def test_beta_two_closed_form(self):
        # E_{1,2}(1) = (e - 1)/1
        assert ml_e2(1.0, 2.0, 1.0).value == pytest.approx(E_MINUS_1, rel=1e-13)

    def test_alpha_one_is_exp(self):
        assert ml_e2(1.0, 1.0, 2.0).value == pytest.approx(math.exp(2.0), rel=1e-13)
        assert ml_e(1.0, 1.0).value == pytest.approx(math.e, rel=1e-13)

    def test_half_order_erfc_value(self):
        assert ml_e(0.5, 1.0).value == pytest.approx(ML_HALF_AT_1, rel=1e-12)

    def test_constant_term_only(self):
        res = ml_e(0.7, 0.0)
        assert res.value == 1.0
        assert res.terms_used == 1
        assert res.converged

    @pytest.mark.parametrize("alpha,beta,z,ref", ML_REFS)
    def test_frozen_anchors(self, alpha, beta, z, ref):
        res = ml_e2(alpha, beta, z, SeriesConfig(tol=1e-14))
        assert abs(res.value - ref) <= max(1e-12 * abs(ref), res.error_estimate), (
            f"value {res.value} vs ref {ref}, est {res.error_estimate}"
        )

    def test_at_time_examples(self):
        assert ml_at_time(MLParams(0.5, -1.0), 1.0).value == pytest.approx(
            E_ERFC_1, rel=1e-12
        )
        assert ml_at_time(MLParams(0.3, 0.0), 3.0).value == 1.0
        assert ml_at_time(MLParams(1.0, 2.0), 1.0).value == pytest.approx(
            math.exp(2.0), rel=1e-12
        )

    def test_at_time_zero_exact(self):
        res = ml_at_time(MLParams(0.4, -3.0), 0.0)
        assert res == EvalResult(1.0, 0.0, 1, True)


class TestDomain:
    def test_z_cap(self):
        with pytest.raises(DomainError):
            ml_e(0.5, 50.1)
        with pytest.raises(DomainError):
            ml_e(0.5, -51.0)
        with pytest.raises(DomainError):
            ml_e2(0.5, 1.0, 3.0, SeriesConfig(z_cap=2.0))

    def test_alpha_beta_domain(self):
        with pytest.raises(DomainError):
            ml_e2(1.2, 1.0, 1.0)
        with pytest.raises(DomainError):
            ml_e2(0.5, -1.0, 1.0)

    def test_at_time_domain(self):
        with pytest.raises(DomainError):
            ml_at_time(MLParams(0.5, 1.0), -0.1)
        # composed argument beyond z_cap
        with pytest.raises(DomainError):
            ml_at_time(MLParams(1.0, 10.0), 10.0)

    def test_max_terms_flag(self):
        res = ml_e(0.5, 3.0, SeriesConfig(max_terms=5))
        assert res.terms_used == 5
        assert not res.converged


class TestInvariants:
    def test_exponential_recovery(self):
        cfg = SeriesConfig(tol=1e-19)
        for lam in (-2.0, -1.0, 0.5, 1.0):
            p = MLParams(1.0, lam)
            for t in np.linspace(0.0, 10.0, 101):
                got = ml_at_time(p, float(t), cfg).value
                ref = math.exp(lam * t)
                assert abs(got - ref) <= 1e-10 * ref

    def test_positivity(self):
        # violations only count where the evaluation certifies itself
        for alpha in (0.3, 0.5, 0.7, 0.9, 1.0):
            for lam in (-5.0, -2.5, -1.0, 0.0, 1.0, 2.5, 5.0):
                for t in np.linspace(0.0, 5.0, 11):
                    p = MLParams(alpha, lam)
                    res = ml_at_time(p, float(t))
                    if res.converged:
                        assert res.value > 0.0, (alpha, lam, t)
                    res2 = ml_e2(alpha, alpha, lam * float(t) ** alpha)
                    if res2.converged:
                        assert res2.value > 0.0, (alpha, lam, t)

    def test_monotonicity_in_z(self):
        for alpha in (0.3, 0.6, 1.0):
            values = [ml_e(alpha, float(z)).value for z in np.linspace(-3.0, 3.0, 41)]
            diffs = np.diff(values)
            assert np.all(diffs > 0.0), alpha

    def test_half_order_erfc_oracle(self):
        for z in np.linspace(-3.0, 3.0, 61):
            ref = math.exp(z * z) * float(scipy_special.erfc(-z))
            got = ml_e(0.5, float(z)).value
            assert abs(got - ref) <= 1e-9 * abs(ref)

    @settings(max_examples=100, deadline=None)
    @given(
        alpha=st.floats(0.05, 1.0),
        beta=st.floats(0.1, 5.0),
        z=st.floats(-10.0, 10.0),
    )
    def test_error_estimate_soundness(self, alpha, beta, z):
        coarse = ml_e2(alpha, beta, z, SeriesConfig(tol=1e-10))
        fine = ml_e2(alpha, beta, z, SeriesConfig(tol=1e-12))
        if coarse.converged and fine.converged:
            assert abs(coarse.value - fine.value) <= coarse.error_estimate

    @settings(max_examples=100, deadline=None)
    @given(
        alpha=st.floats(0.05, 1.0),
        beta=st.floats(0.1, 5.0),
        z=st.floats(-30.0, 30.0),
    )
    def test_result_contract(self, alpha, beta, z):
        cfg = SeriesConfig()
        res = ml_e2(alpha, beta, z, cfg)
        assert res.terms_used <= cfg.max_terms
        assert res.error_estimate >= 0.0
        if res.converged:
            assert res.error_estimate <= cfg.tol * max(abs(res.value), 1.0)
