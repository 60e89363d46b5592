import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from nuradius import (
    DegenerateRecovery,
    InconsistentOracle,
    LpSpace,
    NotUnitVector,
    OperatorMatrix,
    builtin_space,
    lp_numerical_radius_estimate,
    lp_support_functional,
    make_oracle,
    numerical_radius,
    recover_entries,
)


def test_support_basis_vector():
    np.testing.assert_allclose(lp_support_functional(LpSpace(3, 3.0), [1.0, 0, 0]), [1, 0, 0])


def test_support_l1_zero_sign_convention():
    s = LpSpace(3, 1.0)
    f = lp_support_functional(s, [0.5, -0.5, 0.0])
    np.testing.assert_array_equal(f, [1.0, -1.0, 1.0])
    assert f @ np.array([0.5, -0.5, 0.0]) == 1.0
    assert s.dual_norm(f) == 1.0
    np.testing.assert_array_equal(lp_support_functional(s, [0.5, -0.5, 0.0], zero_sign=0.0), [1, -1, 0])


def test_support_holder_random():
    rng = np.random.default_rng(0)
    s = LpSpace(2, 1.5)
    for _ in range(100):
        x = rng.standard_normal(2)
        x /= s.norm(x)
        f = lp_support_functional(s, x)
        assert f @ x == pytest.approx(1.0, abs=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([1.0, 1.5, 3.0, 4.5]),
       arrays(np.float64, 4, elements=st.floats(-10, 10, allow_nan=False)))
def test_holder_equality_property(p, x):
    s = LpSpace(4, p)
    if s.norm(x) < 1e-3:
        return
    x = x / s.norm(x)
    f = lp_support_functional(s, x)
    assert f @ x == pytest.approx(1.0, abs=1e-10)
    assert s.dual_norm(f) == pytest.approx(1.0, abs=1e-8)


def test_errors():
    with pytest.raises(NotUnitVector):
        lp_support_functional(LpSpace(2, 3.0), [1.0, 1.0])
    with pytest.raises(DegenerateRecovery):
        LpSpace(2, 2.0)
    with pytest.raises(ValueError):
        LpSpace(2, 0.5)
    with pytest.raises(InconsistentOracle):
        recover_entries(LpSpace(2, 3.0), lambda x: float("nan") if np.count_nonzero(x) == 2 else 0.0)


@pytest.mark.parametrize("p", [1.0, 1.5, 3.0])
def test_recover_zero(p):
    R = recover_entries(LpSpace(4, p), lambda x: 0.0)
    assert not R.any()


def test_recover_random_p3():
    rng = np.random.default_rng(3)
    M = rng.standard_normal((4, 4))
    s = LpSpace(4, 3.0)
    np.testing.assert_allclose(recover_entries(s, make_oracle(s, M)), M, atol=1e-8)


def test_recover_matrix_unit_p1():
    """For e_12 and p = 1 the probes give a_12 + a_21 = 1 and a_12 + 2 a_21 = 1."""
    M = np.zeros((3, 3))
    M[0, 1] = 1.0
    s = LpSpace(3, 1.0)
    R = recover_entries(s, make_oracle(s, M))
    np.testing.assert_allclose(R, M, atol=1e-14)


@pytest.mark.parametrize("p", [1.0, 1.5, 3.0])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_recover_property(p, n):
    rng = np.random.default_rng(int(10 * p) + n)
    s = LpSpace(n, p)
    for _ in range(100):
        M = rng.standard_normal((n, n))
        assert np.max(np.abs(recover_entries(s, make_oracle(s, M)) - M)) <= 1e-8


@pytest.mark.parametrize("p", [1.0, 3.0])
def test_estimate_trivial(p):
    s = LpSpace(3, p)
    assert lp_numerical_radius_estimate(s, np.eye(3), 200, 0) == pytest.approx(1.0, abs=1e-12)
    assert lp_numerical_radius_estimate(s, np.zeros((3, 3)), 200, 0) == 0.0


def test_estimate_monotone():
    s = LpSpace(3, 1.5)
    M = np.random.default_rng(4).standard_normal((3, 3))
    vals = [lp_numerical_radius_estimate(s, M, k, 9) for k in (1, 5, 50, 500, 2000)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_estimate_against_dense_sweep():
    s = LpSpace(2, 3.0)
    M = np.random.default_rng(12).standard_normal((2, 2))
    th = np.linspace(0, 2 * np.pi, 1_000_000, endpoint=False)
    X = np.stack([np.cos(th), np.sin(th)], axis=1)
    X /= (np.sum(np.abs(X) ** 3, axis=1) ** (1 / 3))[:, None]
    Xs = np.sign(X) * np.abs(X) ** 2
    sweep = np.abs(np.einsum("ij,ij->i", Xs, X @ M.T)).max()
    est = lp_numerical_radius_estimate(s, M, 2000, 0)
    assert est == pytest.approx(sweep, abs=1e-3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_estimate_sandwich_l1(n):
    rng = np.random.default_rng(n)
    poly = builtin_space(f"l1-{n}")
    s = LpSpace(n, 1.0)
    for _ in range(5):
        M = rng.standard_normal((n, n))
        exact = numerical_radius(OperatorMatrix(poly, M)).value
        est = lp_numerical_radius_estimate(s, M, 100_000, 1)
        assert est <= exact + poly.tolerance
        assert est == pytest.approx(exact, abs=1e-3)
