import numpy as np
import pytest

from nuradius import (
    DimensionMismatch,
    OperatorMatrix,
    builtin_space,
    extreme_pairs,
    fixture_operator,
    numerical_radius,
    operator_norm,
    w_definiteness_check,
)
from nuradius.space import BUILTIN_SPACES, SQRT3, norm

from conftest import FIXTURE_SPACES, random_operator
from oracles import brute_pairs, brute_w, operator_norm_lp


def test_extreme_pairs_hexagon(hexagon):
    pairs = extreme_pairs(hexagon)
    assert len(pairs) == 12
    per_vertex = {}
    for v, f in pairs:
        per_vertex.setdefault(v, []).append(f)
    assert all(len(fs) == 2 for fs in per_vertex.values())
    lab = {hexagon.vertex_label(v): {hexagon.facet_label(f) for f in fs} for v, fs in per_vertex.items()}
    assert lab["x1"] == {"f1", "f2"}
    assert lab["x2"] == {"f2", "f3"}
    assert lab["x3"] == {"f3", "-f1"}


def test_extreme_pairs_square():
    assert len(extreme_pairs(builtin_space("linf-2"))) == 8


@pytest.mark.parametrize("name", BUILTIN_SPACES)
def test_extreme_pairs_match_brute_force(name):
    s = builtin_space(name)
    assert [tuple(p) for p in extreme_pairs(s)] == brute_pairs(s.vertices, s.facets)


def test_extreme_pairs_prism_count(prism):
    assert len(extreme_pairs(prism)) == len(brute_pairs(prism.vertices, prism.facets)) == 36


# ------------------------------------------------------------ fixtures


def test_prism_operator_norm():
    T = fixture_operator("prism-T")
    r = operator_norm(T)
    s = T.space
    assert r.value == pytest.approx(1.0, abs=1e-9)
    assert {s.vertex_label(v) for v in r.witness_vertices()} == {"x5", "-x5"}
    assert len(r.sign_classes) == 1
    assert r.runner_up == pytest.approx(2 / 3, abs=1e-12)


def test_prism_numerical_radius():
    T = fixture_operator("prism-T")
    r = numerical_radius(T)
    s = T.space
    assert r.value == pytest.approx(1.0, abs=1e-9)
    labels = {(s.vertex_label(w.vertex), s.facet_label(w.facet)) for w in r.witnesses}
    assert labels == {("x5", "f3"), ("-x5", "-f3")}
    # T x5 = (1, 0, 0) and f3(1, 0, 0) = -1
    assert all(w.signed_value == pytest.approx(-1.0, abs=1e-12) for w in r.witnesses)


def test_hexagon_numerical_radius():
    T = fixture_operator("hexagon-T")
    s = T.space
    r = numerical_radius(T)
    assert r.value == pytest.approx(0.5, abs=1e-12)
    signed = {(s.vertex_label(w.vertex), s.facet_label(w.facet)): w.signed_value for w in r.witnesses}
    expect = {("x1", "f1"): -0.5, ("x1", "f2"): 0.5, ("x2", "f3"): 0.5, ("x3", "f3"): -0.5}
    for k, v in expect.items():
        assert signed[k] == pytest.approx(v, abs=1e-12)
        neg = tuple("-" + t for t in k)
        assert signed[neg] == pytest.approx(v, abs=1e-12)
    assert len(r.sign_classes) == 4
    assert r.runner_up == pytest.approx(0.25, abs=1e-12)


def test_hexagon_matrix():
    T = fixture_operator("hexagon-T")
    np.testing.assert_allclose(T.entries, [[0, 0], [SQRT3 / 2, 0]], atol=1e-15)


@pytest.mark.parametrize("name", BUILTIN_SPACES)
def test_identity(name):
    s = builtin_space(name)
    I = OperatorMatrix.identity(s)
    w = numerical_radius(I)
    assert w.value == pytest.approx(1.0)
    assert len(w.witnesses) == len(extreme_pairs(s))
    op = operator_norm(I)
    assert op.value == pytest.approx(1.0)
    assert op.witness_vertices() == set(range(len(s.vertices)))


@pytest.mark.parametrize("name", BUILTIN_SPACES)
def test_operator_norm_matches_lp(name):
    s = builtin_space(name)
    rng = np.random.default_rng(5)
    for _ in range(10):
        T = random_operator(s, rng)
        assert operator_norm(T).value == pytest.approx(operator_norm_lp(s.vertices, s.facets, T.entries), abs=1e-9)


def test_operator_norm_prism_grid(prism):
    """Grid over directions of R^3 normalized onto the sphere: a lower bound
    that comes within the grid resolution, and the LP value to 1e-6."""
    rng = np.random.default_rng(2)
    M = rng.standard_normal((3, 3))
    T = OperatorMatrix(prism, M)
    th, ph = np.meshgrid(np.linspace(0, 2 * np.pi, 400), np.linspace(0, np.pi, 200))
    D = np.stack([np.sin(ph) * np.cos(th), np.sin(ph) * np.sin(th), np.cos(ph)], axis=-1).reshape(-1, 3)
    X = D / (D @ prism.facets.T).max(axis=1)[:, None]
    grid = ((X @ M.T) @ prism.facets.T).max(axis=1).max()
    val = operator_norm(T).value
    assert grid <= val + 1e-9
    assert val - grid < 5e-2
    assert val == pytest.approx(operator_norm_lp(prism.vertices, prism.facets, M), abs=1e-6)


@pytest.mark.parametrize("name", BUILTIN_SPACES)
def test_numerical_radius_matches_brute_force(name):
    s = builtin_space(name)
    rng = np.random.default_rng(9)
    for _ in range(10):
        T = random_operator(s, rng)
        assert numerical_radius(T).value == pytest.approx(brute_w(s.vertices, s.facets, T.entries), abs=1e-12)


@pytest.mark.parametrize("name", FIXTURE_SPACES)
def test_numerical_radius_bounds_any_dual_pair(name):
    """Random dual pairs (x on the sphere, a random convex mix of its
    supporting facets) never exceed the numerical radius."""
    s = builtin_space(name)
    rng = np.random.default_rng(4)
    T = random_operator(s, rng)
    w = numerical_radius(T).value
    for _ in range(200):
        x = rng.standard_normal(s.dim)
        x /= norm(s, x)
        vals = s.facets @ x
        sup = s.facets[vals >= 1 - 1e-9]
        f = rng.dirichlet(np.ones(len(sup))) @ sup
        assert abs(f @ (T.entries @ x)) <= w + 1e-9


@pytest.mark.parametrize("name", FIXTURE_SPACES)
def test_properties(name):
    s = builtin_space(name)
    rng = np.random.default_rng(13)
    for _ in range(50):
        T = random_operator(s, rng)
        S = random_operator(s, rng)
        c = rng.uniform(-5, 5)
        wT = numerical_radius(T)
        wcT = numerical_radius(c * T)
        assert wcT.value == pytest.approx(abs(c) * wT.value, rel=1e-12)
        assert wcT.witness_pairs() == wT.witness_pairs()
        assert wT.value <= operator_norm(T).value + 1e-12
        assert numerical_radius(T + S).value <= wT.value + numerical_radius(S).value + 1e-12
        if wT.runner_up is not None:
            assert wT.runner_up < wT.value - s.tolerance


def test_report_invariants(prism):
    rng = np.random.default_rng(0)
    for _ in range(20):
        T = random_operator(prism, rng, "int")
        r = numerical_radius(T)
        for w in r.witnesses:
            assert abs(abs(w.signed_value) - r.value) <= prism.tolerance
        for cls in r.sign_classes:
            if len(cls) == 2:
                a, b = (r.witnesses[i] for i in cls)
                assert prism.vertex_antipode[a.vertex] == b.vertex
                assert prism.facet_antipode[a.facet] == b.facet
        assert sorted(i for c in r.sign_classes for i in c) == list(range(len(r.witnesses)))
        keys = [(w.vertex, w.facet) for w in r.witnesses]
        assert keys == sorted(keys)


def test_definiteness_check(hexagon):
    assert w_definiteness_check(hexagon, OperatorMatrix.zero(hexagon))
    sq = builtin_space("linf-2")
    R = OperatorMatrix(sq, [[0.0, -1.0], [1.0, 0.0]])
    # rotation: e.g. vertex (1,1) with facet e1 gives f(Tv) = -1
    assert numerical_radius(R).value == pytest.approx(1.0)
    assert w_definiteness_check(sq, R)
    rng = np.random.default_rng(1)
    for _ in range(1000):
        T = random_operator(builtin_space("hexagonal-prism"), rng)
        assert numerical_radius(T).value > 1e-9
        assert w_definiteness_check(T.space, T)


def test_operator_shape_mismatch(hexagon):
    with pytest.raises(DimensionMismatch):
        OperatorMatrix(hexagon, np.eye(3))


def test_report_to_dict(hexagon):
    d = numerical_radius(fixture_operator("hexagon-T")).to_dict(hexagon)
    assert set(d) == {"kind", "value", "witnesses", "sign_classes", "runner_up"}
    assert d["witnesses"][0] == {"vertex": 0, "facet": 0, "signed_value": d["witnesses"][0]["signed_value"],
                                 "label": "x1, f1"}


def test_hexagon_pair_evaluations():
    """Pair values on the hexagon fixture, computed by hand from T x = x_1 (0, √3/2).

    -f1(T x3) = -g(x3) f1(u) = (1/2)(-1/2) = -1/4.
    """
    T = fixture_operator("hexagon-T")
    s = T.space
    V = dict(zip(s.vertex_labels, s.vertices))
    F = dict(zip(s.facet_labels, s.facets))
    want = {("x1", "f1"): -0.5, ("x1", "f2"): 0.5, ("x2", "f2"): 0.25,
            ("x2", "f3"): 0.5, ("x3", "f3"): -0.5, ("x3", "-f1"): -0.25}
    for (v, f), val in want.items():
        assert F[f] @ (T.entries @ V[v]) == pytest.approx(val, abs=1e-12)
