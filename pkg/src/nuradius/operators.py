"""Operator norm and numerical radius on a polyhedral space.

Both norms are maxima over finite sets: the operator norm over vertices,
the numerical radius over extreme dual pairs ``(v, f)`` with ``f(v) = 1``.
Attainment reports keep every maximizing member, grouped into classes under
``(v, f) ~ (-v, -f)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import DimensionMismatch
from .space import PolyhedralSpace


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """A linear map of ``space`` into itself, as a matrix in the standard basis."""

    space: PolyhedralSpace
    entries: np.ndarray

    def __post_init__(self):
        M = np.array(self.entries, dtype=float)
        n = self.space.dim
        if M.shape != (n, n):
            raise DimensionMismatch(f"operator has shape {M.shape}, space has dimension {n}")
        M.setflags(write=False)
        object.__setattr__(self, "entries", M)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.entries + other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return OperatorMatrix(self.space, self.entries - other.entries)

    def __mul__(self, c: float) -> "OperatorMatrix":
        return OperatorMatrix(self.space, float(c) * self.entries)

    __rmul__ = __mul__

    def __neg__(self) -> "OperatorMatrix":
        return OperatorMatrix(self.space, -self.entries)

    def __call__(self, x) -> np.ndarray:
        return self.entries @ np.asarray(x, dtype=float)

    def is_zero(self) -> bool:
        return not np.any(np.abs(self.entries) > self.space.tolerance)

    def to_dict(self) -> dict:
        return {"matrix": self.entries.tolist()}

    @classmethod
    def identity(cls, space: PolyhedralSpace) -> "OperatorMatrix":
        return cls(space, np.eye(space.dim))

    @classmethod
    def zero(cls, space: PolyhedralSpace) -> "OperatorMatrix":
        return cls(space, np.zeros((space.dim, space.dim)))


def load_operator(space: PolyhedralSpace, path: str) -> OperatorMatrix:
    with open(path) as fh:
        d = json.load(fh)
    if "matrix" not in d:
        raise KeyError("matrix")
    return OperatorMatrix(space, d["matrix"])


class ExtremePair(NamedTuple):
    vertex_index: int
    facet_index: int


@dataclass(frozen=True)
class Witness:
    """One attaining member: a vertex (and facet, for the numerical radius)
    with its signed evaluation."""

    vertex: int
    facet: Optional[int]
    signed_value: float

    @property
    def pair(self) -> ExtremePair:
        return ExtremePair(self.vertex, self.facet)


@dataclass(frozen=True)
class AttainmentReport:
    kind: str  # "numerical_radius" or "operator_norm"
    value: float
    witnesses: tuple
    sign_classes: tuple  # tuples of indices into ``witnesses``
    runner_up: Optional[float]

    def witness_pairs(self) -> set:
        return {(w.vertex, w.facet) for w in self.witnesses}

    def witness_vertices(self) -> set:
        return {w.vertex for w in self.witnesses}

    def class_representatives(self) -> list:
        return [self.witnesses[c[0]] for c in self.sign_classes]

    def to_dict(self, space: Optional[PolyhedralSpace] = None) -> dict:
        ws = []
        for w in self.witnesses:
            d = {"vertex": w.vertex}
            if w.facet is not None:
                d["facet"] = w.facet
            d["signed_value"] = w.signed_value
            if space is not None and (space.vertex_labels or space.facet_labels):
                d["label"] = space.vertex_label(w.vertex) + (
                    "" if w.facet is None else f", {space.facet_label(w.facet)}")
            ws.append(d)
        return {
            "kind": self.kind,
            "value": self.value,
            "witnesses": ws,
            "sign_classes": [list(c) for c in self.sign_classes],
            "runner_up": self.runner_up,
        }


def _extreme_pair_arrays(space: PolyhedralSpace):
    G = space.vertices @ space.facets.T
    vi, fi = np.nonzero(np.abs(G - 1.0) <= space.tolerance)  # row-major: (vertex, facet) order
    return vi, fi


def extreme_pairs(space: PolyhedralSpace) -> list:
    """All (vertex, facet) index pairs with ``f(v) = 1``, in index order."""
    vi, fi = _extreme_pair_arrays(space)
    return [ExtremePair(int(v), int(f)) for v, f in zip(vi, fi)]


def pair_evaluations(T: OperatorMatrix, vi=None, fi=None) -> np.ndarray:
    """``f(T v)`` for each extreme pair (or the given index arrays)."""
    space = T.space
    if vi is None:
        vi, fi = _extreme_pair_arrays(space)
    TV = space.vertices[vi] @ T.entries.T
    return np.einsum("ij,ij->i", TV, space.facets[fi])


def _group(keys, antipode_of) -> tuple:
    """Group witness positions ``keys[i]`` with their antipodes."""
    pos = {k: i for i, k in enumerate(keys)}
    seen, classes = set(), []
    for i, k in enumerate(keys):
        if i in seen:
            continue
        cls = [i]
        j = pos.get(antipode_of(k))
        if j is not None and j != i:
            cls.append(j)
        seen.update(cls)
        classes.append(tuple(cls))
    return tuple(classes)


def _runner_up(absvals: np.ndarray, mask: np.ndarray) -> Optional[float]:
    rest = absvals[~mask]
    return float(rest.max()) if rest.size else None


def numerical_radius(T: OperatorMatrix) -> AttainmentReport:
    """Numerical radius as the maximum of ``|f(Tv)|`` over extreme dual pairs."""
    space = T.space
    vi, fi = _extreme_pair_arrays(space)
    vals = pair_evaluations(T, vi, fi)
    absvals = np.abs(vals)
    value = float(absvals.max()) if absvals.size else 0.0
    hit = absvals >= value - space.tolerance
    idx = np.flatnonzero(hit)
    witnesses = tuple(Witness(int(vi[i]), int(fi[i]), float(vals[i])) for i in idx)
    keys = [(w.vertex, w.facet) for w in witnesses]
    va, fa = space.vertex_antipode, space.facet_antipode
    classes = _group(keys, lambda k: (int(va[k[0]]), int(fa[k[1]])))
    return AttainmentReport("numerical_radius", value, witnesses, classes, _runner_up(absvals, hit))


def vertex_image_norms(T: OperatorMatrix) -> np.ndarray:
    space = T.space
    return (space.vertices @ T.entries.T @ space.facets.T).max(axis=1)


def operator_norm(T: OperatorMatrix) -> AttainmentReport:
    """Operator norm as the maximum of ``|Tv|`` over vertices of the unit ball."""
    space = T.space
    norms = vertex_image_norms(T)
    value = float(norms.max())
    hit = norms >= value - space.tolerance
    idx = np.flatnonzero(hit)
    witnesses = tuple(Witness(int(i), None, float(norms[i])) for i in idx)
    va = space.vertex_antipode
    classes = _group([w.vertex for w in witnesses], lambda k: int(va[k]))
    return AttainmentReport("operator_norm", value, witnesses, classes, _runner_up(norms, hit))


def w_definiteness_check(space: PolyhedralSpace, T: OperatorMatrix) -> bool:
    """``w(T) <= tol`` implies ``T`` vanishes entrywise (within tol)."""
    if T.space is not space and T.space.dim != space.dim:
        raise DimensionMismatch("operator and space dimensions differ")
    small = numerical_radius(T).value <= space.tolerance
    return (not small) or bool(np.all(np.abs(T.entries) <= space.tolerance))
