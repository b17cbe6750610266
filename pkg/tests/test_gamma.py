import math

import pytest

from mlsemigroup import DomainError, GammaOverflowError, gamma

from _refs import GAMMA_REFS, SQRT_PI


def test_integer_values_exact():
    assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma(5.0) == pytest.approx(24.0, rel=1e-14)


def test_sqrt_pi():
    assert gamma(0.5) == pytest.approx(SQRT_PI, rel=1e-13)


@pytest.mark.parametrize("x,ref", GAMMA_REFS)
def test_reference_values(x, ref):
    assert abs(gamma(x) - ref) <= 1e-13 * ref


def test_against_stdlib_gamma_dense():
    # math.gamma is an independent implementation; both are within ~1e-13 of
    # the true value, so their gap stays below 2e-13.
    x = 1e-3
    while x <= 171.0:
        ours, ref = gamma(x), math.gamma(x)
        assert abs(ours - ref) <= 2e-13 * ref, f"x={x}"
        x *= 1.037
    for x in (0.499, 0.5, 0.501, 47.9, 48.0, 48.1, 170.99, 171.0):
        assert abs(gamma(x) - math.gamma(x)) <= 2e-13 * math.gamma(x)


def test_recurrence_property():
    for x in (0.2, 0.7, 1.3, 9.5, 33.3, 120.7):
        assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5, float("nan")])
def test_domain_errors(x):
    with pytest.raises(DomainError):
        gamma(x)


def test_overflow_error():
    with pytest.raises(GammaOverflowError):
        gamma(171.7)
    with pytest.raises(GammaOverflowError):
        gamma(1000.0)
    # the boundary itself is representable
    assert math.isfinite(gamma(171.6))


def test_overflow_is_domain_and_overflow():
    # GammaOverflowError participates in both stdlib hierarchies
    with pytest.raises(OverflowError):
        gamma(172.0)
    with pytest.raises(ValueError):
        gamma(-3.0)
