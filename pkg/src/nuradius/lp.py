"""Support functionals and numerical radius tools on ℓ_p^n, 1 <= p < ∞, p != 2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegenerateRecovery, InconsistentOracle, NotUnitVector

# (alpha, beta) probe points for the off-diagonal recovery; the system
# determinant is 2 - 2**(p-1), nonzero exactly when p != 2.
PROBES = ((1.0, 1.0), (2.0, 1.0))


@dataclass(frozen=True)
class LpSpace:
    dim: int
    p: float
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if not (1.0 <= self.p < np.inf):
            raise ValueError("p must lie in [1, inf); use the polyhedral tools for p = inf")
        if abs(self.p - 2.0) <= self.tolerance:
            raise DegenerateRecovery("p = 2 is excluded")

    def norm(self, x) -> float:
        return float(np.sum(np.abs(np.asarray(x, dtype=float)) ** self.p) ** (1.0 / self.p))

    def dual_norm(self, f) -> float:
        f = np.abs(np.asarray(f, dtype=float))
        if self.p == 1.0:
            return float(f.max())
        q = self.p / (self.p - 1.0)
        return float(np.sum(f ** q) ** (1.0 / q))


def lp_support_functional(space: LpSpace, x, zero_sign: float = 1.0) -> np.ndarray:
    """Coefficients of the norming functional at a unit vector ``x``.

    ``sgn(x_k) |x_k|^(p-1)`` for ``p > 1``; ``sgn(x_k)`` for ``p = 1``, where
    zero coordinates get ``zero_sign`` (any value in [-1, 1] is valid).
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (space.dim,):
        raise ValueError(f"expected a vector of length {space.dim}")
    if abs(space.norm(x) - 1.0) > space.tolerance:
        raise NotUnitVector(f"|x|_p = {space.norm(x)!r}")
    if space.p == 1.0:
        return np.where(x == 0.0, zero_sign, np.sign(x))
    return np.sign(x) * np.abs(x) ** (space.p - 1.0)


def make_oracle(space: LpSpace, T) -> Callable[[np.ndarray], float]:
    """Black box ``x -> x*(Tx)`` for a hidden matrix, using the support
    functional supported on ``supp(x)`` (``sgn(0) = 0`` when ``p = 1``)."""
    M = np.array(T, dtype=float)

    def evaluate(x):
        return float(lp_support_functional(space, x, zero_sign=0.0) @ (M @ x))

    return evaluate


def recover_entries(space: LpSpace, evaluate: Callable[[np.ndarray], float]) -> np.ndarray:
    """Reconstruct a matrix from its values ``x*(Tx)`` on dual pairs.

    The diagonal comes from the basis vectors.  For ``r < s`` the value at
    ``x = (alpha e_r + beta e_s)/N``, ``N = (alpha^p + beta^p)^(1/p)``, is

        N^-p (alpha^p a_rr + alpha^(p-1) beta a_rs + alpha beta^(p-1) a_sr + beta^p a_ss)

    and two probes give a 2x2 system for ``(a_rs, a_sr)``.  ``evaluate`` must
    use functionals supported on ``supp(x)``, as :func:`make_oracle` does.
    """
    n, p = space.dim, space.p
    a = np.zeros((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        a[j, j] = evaluate(e)

    C = np.array([[al ** (p - 1.0) * be, al * be ** (p - 1.0)] for al, be in PROBES])
    det = np.linalg.det(C)
    if abs(det) <= 1e-12:
        raise DegenerateRecovery("probe system is singular")
    for r in range(n):
        for s in range(r + 1, n):
            rhs = np.empty(2)
            for k, (al, be) in enumerate(PROBES):
                Np = al ** p + be ** p
                x = np.zeros(n)
                x[r], x[s] = al, be
                x /= Np ** (1.0 / p)
                val = evaluate(x)
                if not np.isfinite(val):
                    raise InconsistentOracle(f"oracle returned {val!r}")
                rhs[k] = Np * val - al ** p * a[r, r] - be ** p * a[s, s]
            a[r, s], a[s, r] = np.linalg.solve(C, rhs)
    return a


def _value(space: LpSpace, M: np.ndarray, x: np.ndarray) -> float:
    x = x / space.norm(x)
    return abs(float(lp_support_functional(space, x) @ (M @ x)))


def _refine(space: LpSpace, M: np.ndarray, x: np.ndarray, sweeps: int = 60) -> float:
    """Coordinate pattern search from ``x``; every evaluated point is a valid
    dual pair, so the result is still a lower bound."""
    x = x / space.norm(x)
    best = _value(space, M, x)
    if space.p == 1.0:
        # on the open orthant face of sign pattern s the objective is linear,
        # so its supremum is at a face vertex s_i e_i paired with s
        s = np.where(x >= 0, 1.0, -1.0)
        best = max(best, float(np.max(np.abs(s @ M))))
    step = 0.25
    n = space.dim
    for _ in range(sweeps):
        improved = False
        for k in range(n):
            for sgn in (1.0, -1.0):
                y = x.copy()
                y[k] += sgn * step
                if not np.any(y):
                    continue
                v = _value(space, M, y)
                if v > best:
                    best, x, improved = v, y / space.norm(y), True
        if not improved:
            step *= 0.5
            if step < 1e-9:
                break
    return best


def lp_numerical_radius_estimate(space: LpSpace, T, samples: int = 1000, seed: int = 0) -> float:
    """Heuristic lower bound for the numerical radius on ℓ_p^n.

    Random unit vectors are drawn from a fixed stream; each sample that sets
    a new running maximum is refined by a local search.  The samples for a
    smaller count are a prefix of those for a larger one, so the estimate is
    nondecreasing in ``samples``.
    """
    M = np.array(T, dtype=float)
    n = space.dim
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((samples, n))
    X /= (np.sum(np.abs(X) ** space.p, axis=1) ** (1.0 / space.p))[:, None]
    if space.p == 1.0:
        X_star = np.where(X == 0.0, 1.0, np.sign(X))
    else:
        X_star = np.sign(X) * np.abs(X) ** (space.p - 1.0)
    vals = np.abs(np.einsum("ij,ij->i", X_star, X @ M.T))
    running = np.maximum.accumulate(vals)
    records = np.flatnonzero(np.concatenate([[True], running[1:] > running[:-1]]))
    best = float(running[-1])
    for i in records:
        best = max(best, _refine(space, M, X[i]))
    return best
