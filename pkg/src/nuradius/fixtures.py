"""Named example spaces and operators.

``hexagon`` and ``hexagonal-prism`` are the spaces; ``prism-T`` and
``hexagon-T`` are rank-one operators ``x -> g(x) u`` on them:

* prism-T: ``g = (x + √3 y - z)/3``, ``u = (-1, 0, 0)``; attains both norms
  at ``±x5`` only, is nu-smooth but not smooth.
* hexagon-T: ``g = x``, ``u = (0, √3/2)``; smooth but not nu-smooth.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .operators import OperatorMatrix
from .space import PolyhedralSpace, hexagon, hexagonal_prism

# full-precision literals for √3/3 and √3/2
_R3_3 = 0.5773502691896257
_R3_2 = 0.8660254037844386


def prism_matrix() -> np.ndarray:
    g = np.array([1.0 / 3.0, _R3_3, -1.0 / 3.0])
    u = np.array([-1.0, 0.0, 0.0])
    return np.outer(u, g)


def hexagon_matrix() -> np.ndarray:
    g = np.array([1.0, 0.0])
    u = np.array([0.0, _R3_2])
    return np.outer(u, g)


class Fixture(NamedTuple):
    name: str
    kind: str  # "space" or "operator"
    space: PolyhedralSpace
    operator: OperatorMatrix | None


SPACE_NAMES = ("hexagon", "hexagonal-prism")
OPERATOR_SPACES = {"prism-T": "hexagonal-prism", "hexagon-T": "hexagon"}


def fixture_space(name: str, tolerance: float = 1e-9) -> PolyhedralSpace:
    if name == "hexagon":
        return hexagon(tolerance)
    if name == "hexagonal-prism":
        return hexagonal_prism(tolerance)
    raise KeyError(name)


def fixture_operator(name: str, space: PolyhedralSpace | None = None) -> OperatorMatrix:
    if name not in OPERATOR_SPACES:
        raise KeyError(f"unknown fixture operator {name!r}; choose from {', '.join(OPERATOR_SPACES)}")
    if space is None:
        space = fixture_space(OPERATOR_SPACES[name])
    M = prism_matrix() if name == "prism-T" else hexagon_matrix()
    return OperatorMatrix(space, M)


def fixtures(tolerance: float = 1e-9) -> list:
    out = [Fixture(n, "space", fixture_space(n, tolerance), None) for n in SPACE_NAMES]
    for op, sp in OPERATOR_SPACES.items():
        space = fixture_space(sp, tolerance)
        out.append(Fixture(op, "operator", space, fixture_operator(op, space)))
    return out
