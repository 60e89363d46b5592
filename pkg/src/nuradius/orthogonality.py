"""Birkhoff-James orthogonality of operators.

``T`` is orthogonal to ``A`` in a norm when ``|T + lam A| >= |T|`` for every
real ``lam``.  On a polyhedral space both norms of ``T + lam A`` are maxima
of finitely many affine functions of ``lam``, so the question reduces to a
one-dimensional piecewise-linear problem.  For the numerical radius the
decision is made from the attaining pairs alone: with
``d = f(Tv) f(Av)`` over the attaining extreme pairs, ``T`` is orthogonal
to ``A`` iff ``0`` lies in the convex hull of the ``d`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import DimensionMismatch, ZeroDirection, ZeroOperator
from .operators import (
    ExtremePair,
    OperatorMatrix,
    _extreme_pair_arrays,
    numerical_radius,
    operator_norm,
    pair_evaluations,
)

NORM_KINDS = ("w", "operator")


def _same_space(T: OperatorMatrix, A: OperatorMatrix):
    if T.space is not A.space and (T.space.dim != A.space.dim):
        raise DimensionMismatch("operators act on different spaces")


def _require_nonzero(T: OperatorMatrix, report=None):
    report = report or numerical_radius(T)
    if report.value <= T.space.tolerance:
        raise ZeroOperator("T must be nonzero")
    return report


@dataclass(frozen=True)
class LambdaProfile:
    """The pieces ``a_i + lam b_i``; the profile is ``max_i |a_i + lam b_i|``."""

    a: np.ndarray
    b: np.ndarray

    def __call__(self, lam: float) -> float:
        return kernels.profile_value(self.a, self.b, float(lam))

    def values(self, lams) -> np.ndarray:
        lams = np.asarray(lams, dtype=float)
        return np.max(np.abs(self.a[None, :] + lams[:, None] * self.b[None, :]), axis=1)

    def reduced(self) -> "LambdaProfile":
        """Drop pieces that duplicate another up to overall sign."""
        P = np.stack([self.a, self.b], axis=1)
        lead = np.where(P[:, 0] != 0, P[:, 0], P[:, 1])
        P = P * np.where(lead < 0, -1.0, 1.0)[:, None]
        P = np.unique(P, axis=0)
        return LambdaProfile(P[:, 0].copy(), P[:, 1].copy())


def lambda_profile(T: OperatorMatrix, A: OperatorMatrix, norm_kind: str = "w") -> LambdaProfile:
    _same_space(T, A)
    space = T.space
    if norm_kind == "w":
        vi, fi = _extreme_pair_arrays(space)
        return LambdaProfile(pair_evaluations(T, vi, fi), pair_evaluations(A, vi, fi))
    if norm_kind == "operator":
        V, F = space.vertices, space.facets
        a = (V @ T.entries.T @ F.T).ravel()
        b = (V @ A.entries.T @ F.T).ravel()
        return LambdaProfile(a, b)
    raise ValueError(f"norm_kind must be one of {NORM_KINDS}")


def lambda_profile_min(T: OperatorMatrix, A: OperatorMatrix, norm_kind: str = "w"):
    """Exact global minimum of ``lam -> |T + lam A|`` over the reals.

    Every breakpoint of the profile is a crossing of two pieces ``±a_i ±
    lam b_i``; the minimum of a coercive convex piecewise-linear function is
    attained at one of them.  Returns ``(lam, value)`` with ``lam`` the
    smallest minimizer found.
    """
    _same_space(T, A)
    if A.is_zero():
        raise ZeroDirection("direction operator A is zero")
    prof = lambda_profile(T, A, norm_kind).reduced()
    return kernels.profile_min(prof.a, prof.b, T.space.tolerance)


def d_set(T: OperatorMatrix, A: OperatorMatrix) -> np.ndarray:
    """Distinct values ``f(Tv) f(Av)`` over the attaining pairs of ``T``, sorted."""
    _same_space(T, A)
    rep = _require_nonzero(T)
    d = _d_values(T, A, rep)
    d = np.sort(d)
    keep = np.concatenate([[True], np.diff(d) > T.space.tolerance])
    return d[keep]


def _d_values(T, A, rep) -> np.ndarray:
    vi = np.array([w.vertex for w in rep.witnesses], dtype=int)
    fi = np.array([w.facet for w in rep.witnesses], dtype=int)
    sigma = np.array([w.signed_value for w in rep.witnesses])
    return sigma * pair_evaluations(A, vi, fi)


@dataclass(frozen=True)
class OrthogonalityCertificate:
    """Convex weights on attaining pairs with ``sum t_j d_j = 0``.

    The induced functional ``rho(B) = (1/w) sum t_j f_j(T v_j) f_j(B v_j)``
    has norm at most one in the numerical radius norm, ``rho(T) = w(T)`` and
    ``rho(A) = 0``.
    """

    pairs: tuple  # ExtremePair
    weights: tuple
    d_values: tuple
    signed_values: tuple  # f_j(T v_j)
    w_value: float

    def rho(self, B: OperatorMatrix) -> float:
        space = B.space
        total = 0.0
        for (v, f), t, s in zip(self.pairs, self.weights, self.signed_values):
            total += t * s * float(space.facets[f] @ (B.entries @ space.vertices[v]))
        return total / self.w_value

    def to_dict(self) -> dict:
        return {
            "pairs": [{"vertex": p.vertex_index, "facet": p.facet_index} for p in self.pairs],
            "weights": list(self.weights),
            "d_values": list(self.d_values),
            "signed_values": list(self.signed_values),
            "w_value": self.w_value,
        }


def is_w_orthogonal(T: OperatorMatrix, A: OperatorMatrix):
    """Decide ``T`` orthogonal to ``A`` in the numerical radius norm.

    Returns ``(orthogonal, certificate)``; the certificate is ``None`` when
    the answer is negative.  At most two pairs are needed on the real line.
    """
    _same_space(T, A)
    rep = _require_nonzero(T)
    tol = T.space.tolerance
    d = _d_values(T, A, rep)
    lo, hi = int(np.argmin(d)), int(np.argmax(d))
    if d[lo] > tol or d[hi] < -tol:
        return False, None

    w = rep.witnesses
    small = np.flatnonzero(np.abs(d) <= tol)
    if small.size:
        picks, weights = [int(small[0])], (1.0,)
    else:
        d1, d2 = d[lo], d[hi]
        picks = [lo, hi]
        weights = (d2 / (d2 - d1), -d1 / (d2 - d1))
    cert = OrthogonalityCertificate(
        pairs=tuple(ExtremePair(w[i].vertex, w[i].facet) for i in picks),
        weights=tuple(float(t) for t in weights),
        d_values=tuple(float(d[i]) for i in picks),
        signed_values=tuple(w[i].signed_value for i in picks),
        w_value=rep.value,
    )
    return True, cert


def is_operator_orthogonal(T: OperatorMatrix, A: OperatorMatrix) -> bool:
    """Decide ``T`` orthogonal to ``A`` in the operator norm."""
    _same_space(T, A)
    op = operator_norm(T)
    if op.value <= T.space.tolerance:
        raise ZeroOperator("T must be nonzero")
    if A.is_zero():
        return True
    _, value = lambda_profile_min(T, A, "operator")
    return value >= op.value - T.space.tolerance


def one_point_orthogonal(T: OperatorMatrix, A: OperatorMatrix) -> Optional[bool]:
    """Fast path when ``T`` attains its numerical radius at a single
    ``±(x0, x0*)``: orthogonal iff ``x0*(A x0) = 0``.  Returns ``None`` when
    the attainment set has more than one class."""
    rep = _require_nonzero(T)
    if len(rep.sign_classes) != 1:
        return None
    w = rep.class_representatives()[0]
    space = T.space
    val = float(space.facets[w.facet] @ (A.entries @ space.vertices[w.vertex]))
    return abs(val) <= space.tolerance
