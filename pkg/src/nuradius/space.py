"""Finite-dimensional real polyhedral Banach spaces.

A space is stored by both of its representations: the extreme points of the
unit ball (``vertices``) and the extreme points of the dual ball
(``facets``), each as a full ``±``-symmetric list of row vectors.  The norm
of a vector is the largest facet evaluation.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegenerateBall, DimensionMismatch, EnumerationTooLarge, ZeroVector

DEFAULT_TOLERANCE = 1e-9

SQRT3 = float(np.sqrt(3.0))

MAX_ENUMERATION_DIM = 4
MAX_ENUMERATION_VERTICES = 64


def _neg(label: str) -> str:
    return label[1:] if label.startswith("-") else "-" + label


def _readonly(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def _antipodes(rows: np.ndarray, tol: float) -> np.ndarray:
    """Index of ``-row`` for every row, or -1 when absent."""
    out = np.full(len(rows), -1, dtype=int)
    for i, r in enumerate(rows):
        hit = np.flatnonzero(np.all(np.abs(rows + r) <= tol, axis=1))
        if hit.size:
            out[i] = hit[0]
    return out


@dataclass(frozen=True, eq=False)
class PolyhedralSpace:
    """A polyhedral norm on R^n given by its V- and H-representations.

    Parameters
    ----------
    vertices : array_like, shape (m, n)
        Extreme points of the unit ball, both members of every ``±`` pair.
    facets : array_like, shape (k, n)
        Facet functionals (extreme points of the dual ball), ``±``-symmetric.
    tolerance : float
        Absolute tolerance used for every equality test.
    name : str, optional
    vertex_labels, facet_labels : sequence of str, optional
        Display names used in reports.
    """

    vertices: np.ndarray
    facets: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE
    name: Optional[str] = None
    vertex_labels: Optional[tuple] = None
    facet_labels: Optional[tuple] = None
    vertex_antipode: np.ndarray = field(init=False, repr=False)
    facet_antipode: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        V = _readonly(self.vertices)
        F = _readonly(self.facets)
        if V.ndim != 2 or F.ndim != 2 or V.shape[1] != F.shape[1]:
            raise DimensionMismatch(
                f"vertices {V.shape} and facets {F.shape} must be (m, n) and (k, n)"
            )
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        object.__setattr__(self, "vertices", V)
        object.__setattr__(self, "facets", F)
        for attr, rows in (("vertex_labels", V), ("facet_labels", F)):
            labels = getattr(self, attr)
            if labels is not None:
                if len(labels) != len(rows):
                    raise ValueError(f"{attr} has {len(labels)} entries for {len(rows)} rows")
                object.__setattr__(self, attr, tuple(labels))
        object.__setattr__(self, "vertex_antipode", _readonly(_antipodes(V, self.tolerance)).astype(int))
        object.__setattr__(self, "facet_antipode", _readonly(_antipodes(F, self.tolerance)).astype(int))

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @classmethod
    def from_vertices(cls, vertices, facets=None, tolerance=DEFAULT_TOLERANCE,
                      symmetric=False, **kwargs) -> "PolyhedralSpace":
        """Build a space, mirroring the lists when ``symmetric`` is set and
        enumerating facets when none are given."""
        V = np.atleast_2d(np.asarray(vertices, dtype=float))
        if symmetric:
            V = np.vstack([V, -V])
        if facets is None:
            F = dual_from_vertices(V, tolerance)
        else:
            F = np.atleast_2d(np.asarray(facets, dtype=float))
            if symmetric:
                F = np.vstack([F, -F])
        return cls(V, F, tolerance=tolerance, **kwargs)

    def with_tolerance(self, tolerance: float) -> "PolyhedralSpace":
        return PolyhedralSpace(self.vertices, self.facets, tolerance, self.name,
                               self.vertex_labels, self.facet_labels)

    def vertex_label(self, i: int) -> str:
        return self.vertex_labels[i] if self.vertex_labels else f"v{i}"

    def facet_label(self, j: int) -> str:
        return self.facet_labels[j] if self.facet_labels else f"f{j}"

    def to_dict(self) -> dict:
        d = {
            "dim": self.dim,
            "vertices": self.vertices.tolist(),
            "facets": self.facets.tolist(),
            "tolerance": self.tolerance,
        }
        if self.name is not None:
            d["name"] = self.name
        if self.vertex_labels is not None:
            d["vertex_labels"] = list(self.vertex_labels)
        if self.facet_labels is not None:
            d["facet_labels"] = list(self.facet_labels)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PolyhedralSpace":
        if "vertices" not in d:
            raise KeyError("vertices")
        dim = d.get("dim")
        V = np.atleast_2d(np.asarray(d["vertices"], dtype=float))
        if dim is not None and V.shape[1] != int(dim):
            raise DimensionMismatch(f"dim is {dim} but vertices have length {V.shape[1]}")
        return cls.from_vertices(
            V,
            facets=d.get("facets"),
            tolerance=float(d.get("tolerance", DEFAULT_TOLERANCE)),
            symmetric=bool(d.get("symmetric", False)),
            name=d.get("name"),
            vertex_labels=d.get("vertex_labels"),
            facet_labels=d.get("facet_labels"),
        )


@dataclass(frozen=True, eq=False)
class DualPair:
    """A point of the unit sphere with a norming functional."""

    point: np.ndarray
    functional: np.ndarray
    pairing: float

    @classmethod
    def make(cls, space: PolyhedralSpace, point, functional) -> "DualPair":
        x = _readonly(point)
        f = _readonly(functional)
        tol = space.tolerance
        if abs(norm(space, x) - 1.0) > tol:
            raise ValueError("point is not on the unit sphere")
        if abs(dual_norm(space, f) - 1.0) > tol:
            raise ValueError("functional does not have dual norm 1")
        pairing = float(f @ x)
        if abs(pairing - 1.0) > tol:
            raise ValueError(f"functional(point) = {pairing}, expected 1")
        return cls(x, f, pairing)


def _check_vector(space: PolyhedralSpace, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (space.dim,):
        raise DimensionMismatch(f"expected a vector of length {space.dim}, got shape {x.shape}")
    return x


def norm(space: PolyhedralSpace, x) -> float:
    """Largest facet evaluation at ``x``."""
    x = _check_vector(space, x)
    return float(np.max(space.facets @ x))


def dual_norm(space: PolyhedralSpace, f) -> float:
    f = _check_vector(space, f)
    return float(np.max(np.abs(space.vertices @ f)))


def support_indices(space: PolyhedralSpace, x) -> np.ndarray:
    """Indices of the facet functionals attaining the norm of ``x``.

    The comparison is made at unit scale, ``f(x/|x|) >= 1 - tol``.
    """
    x = _check_vector(space, x)
    vals = space.facets @ x
    nx = float(np.max(vals))
    if nx <= 0:
        raise ZeroVector("support set of the zero vector is undefined")
    return np.flatnonzero(vals / nx >= 1.0 - space.tolerance)


def support_set(space: PolyhedralSpace, x) -> np.ndarray:
    """Extreme support functionals at ``x``, as rows.

    Every norming functional of ``x/|x|`` is a convex combination of the
    returned rows.
    """
    return space.facets[support_indices(space, x)]


def is_smooth_point(space: PolyhedralSpace, x) -> bool:
    return len(support_indices(space, x)) == 1


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class Violation:
    kind: str
    index: int
    target: str  # "vertex" or "facet" or "space"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    n_vertices: int
    n_facets: int
    dim: int
    min_facet_count: int
    facet_counts: tuple
    violations: tuple

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def summary(self) -> str:
        head = (f"{self.n_vertices} vertices, {self.n_facets} facets, "
                f"min facet count per vertex = {self.min_facet_count}")
        lines = [head, "valid" if self.valid else "INVALID"]
        lines += [f"  {v.kind}: {v.message}" for v in self.violations]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "dim": self.dim,
            "n_vertices": self.n_vertices,
            "n_facets": self.n_facets,
            "min_facet_count": self.min_facet_count,
            "summary": self.summary().splitlines()[0],
            "violations": [
                {"kind": v.kind, "target": v.target, "index": v.index, "message": v.message}
                for v in self.violations
            ],
        }


def validate(space: PolyhedralSpace) -> ValidationReport:
    """Check every structural invariant of ``space``; never raises."""
    V, F, tol, n = space.vertices, space.facets, space.tolerance, space.dim
    out = []

    for i in np.flatnonzero(space.vertex_antipode < 0):
        out.append(Violation("Symmetry", int(i), "vertex",
                             f"{_neg(space.vertex_label(i))} is not a vertex"))
    for j in np.flatnonzero(space.facet_antipode < 0):
        out.append(Violation("Symmetry", int(j), "facet",
                             f"{_neg(space.facet_label(j))} is not a facet"))

    G = V @ F.T  # G[i, j] = f_j(v_i)
    on = np.abs(G - 1.0) <= tol

    if len(F):
        vmax = G.max(axis=1)
        for i in np.flatnonzero(np.abs(vmax - 1.0) > tol):
            out.append(Violation("Consistency", int(i), "vertex",
                                 f"{space.vertex_label(i)}: max facet value {vmax[i]:.12g} != 1"))
        fmax = G.max(axis=0)
        for j in np.flatnonzero(fmax > 1.0 + tol):
            out.append(Violation("DualBound", int(j), "facet",
                                 f"{space.facet_label(j)}: max over vertices {fmax[j]:.12g} > 1"))

    for j in range(len(F)):
        pts = V[on[:, j]]
        rank = np.linalg.matrix_rank(pts - pts[0], tol=1e-8) + 1 if len(pts) else 0
        if rank < n:
            out.append(Violation("Tightness", j, "facet",
                                 f"{space.facet_label(j)} touches only {rank} affinely independent vertices"))

    if len(V) == 0 or np.linalg.matrix_rank(V - V[0], tol=1e-8) < n:
        out.append(Violation("Fullness", -1, "space", "vertices do not affinely span the space"))

    counts = on.sum(axis=1) if len(F) else np.zeros(len(V), dtype=int)
    for i in np.flatnonzero(counts < n):
        out.append(Violation("VertexFacetCount", int(i), "vertex",
                             f"{space.vertex_label(i)} lies in {counts[i]} facets, fewer than {n}"))

    return ValidationReport(
        valid=not out,
        n_vertices=len(V),
        n_facets=len(F),
        dim=n,
        min_facet_count=int(counts.min()) if len(counts) else 0,
        facet_counts=tuple(int(c) for c in counts),
        violations=tuple(out),
    )


# ------------------------------------------------------- facet enumeration


def _canonical_sign(f: np.ndarray, tol: float) -> np.ndarray:
    nz = np.flatnonzero(np.abs(f) > tol)
    return -f if nz.size and f[nz[0]] < 0 else f


def dual_from_vertices(vertices, tolerance: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Facet functionals of the symmetric polytope spanned by ``vertices``.

    Every n-subset of vertices spanning a hyperplane ``f(x) = 1`` is fitted;
    ``f`` is kept when no vertex exceeds 1 and at least n vertices lie on the
    hyperplane.  Output is ``[reps..., -reps...]`` with reps in lexicographic
    order after fixing the sign of the leading nonzero coefficient.
    """
    V = np.atleast_2d(np.asarray(vertices, dtype=float))
    m, n = V.shape
    if n > MAX_ENUMERATION_DIM or m > MAX_ENUMERATION_VERTICES:
        raise EnumerationTooLarge(
            f"enumeration limited to n <= {MAX_ENUMERATION_DIM} and "
            f"<= {MAX_ENUMERATION_VERTICES} vertices (got n={n}, m={m})"
        )
    if m == 0 or np.linalg.matrix_rank(V - V[0], tol=1e-8) < n:
        raise DegenerateBall("vertices do not affinely span the space")

    found = []
    combos = np.array(list(itertools.combinations(range(m), n)), dtype=int)
    ones = np.ones(n)
    for start in range(0, len(combos), 65536):
        S = V[combos[start:start + 65536]]  # (c, n, n)
        ok = np.abs(np.linalg.det(S)) > 1e-10
        if not ok.any():
            continue
        cand = np.linalg.solve(S[ok], np.broadcast_to(ones, (ok.sum(), n))[..., None])[..., 0]
        G = cand @ V.T
        keep = (G.max(axis=1) <= 1.0 + tolerance) & ((np.abs(G - 1.0) <= tolerance).sum(axis=1) >= n)
        found.extend(cand[keep])

    reps = []
    for f in found:
        c = _canonical_sign(f, tolerance)
        if not any(np.all(np.abs(c - r) <= tolerance) for r in reps):
            reps.append(c)
    if not reps:
        raise DegenerateBall("no facets found")
    # snap near-integers so that ±e_i style functionals print cleanly
    reps = [np.where(np.abs(r - np.round(r)) <= tolerance, np.round(r), r) + 0.0 for r in reps]
    reps.sort(key=lambda r: tuple(-np.round(r / tolerance) * tolerance))
    R = np.array(reps)
    return np.vstack([R, -R]) + 0.0


# ------------------------------------------------------------- built-ins


def hexagon(tolerance: float = DEFAULT_TOLERANCE) -> PolyhedralSpace:
    """Regular hexagon with vertices (1,0), (1/2, √3/2), (-1/2, √3/2) and negatives."""
    h = SQRT3 / 2.0
    V = [[1.0, 0.0], [0.5, h], [-0.5, h]]
    F = [[1.0, -1.0 / SQRT3], [1.0, 1.0 / SQRT3], [0.0, 2.0 / SQRT3]]
    return PolyhedralSpace.from_vertices(
        V, F, tolerance, symmetric=True, name="hexagon",
        vertex_labels=("x1", "x2", "x3", "-x1", "-x2", "-x3"),
        facet_labels=("f1", "f2", "f3", "-f1", "-f2", "-f3"),
    )


def hexagonal_prism(tolerance: float = DEFAULT_TOLERANCE) -> PolyhedralSpace:
    """Hexagon ⊕∞ R.  Facet order: z, -(2/√3)y, -x-y/√3, x-y/√3, then negatives."""
    h = SQRT3 / 2.0
    V = [[1.0, 0.0, 1.0], [0.5, h, 1.0], [-0.5, h, 1.0],
         [-1.0, 0.0, 1.0], [-0.5, -h, 1.0], [0.5, -h, 1.0]]
    F = [[0.0, 0.0, 1.0], [0.0, -2.0 / SQRT3, 0.0],
         [-1.0, -1.0 / SQRT3, 0.0], [1.0, -1.0 / SQRT3, 0.0]]
    return PolyhedralSpace.from_vertices(
        V, F, tolerance, symmetric=True, name="hexagonal-prism",
        vertex_labels=tuple(f"x{i}" for i in range(1, 7)) + tuple(f"-x{i}" for i in range(1, 7)),
        facet_labels=("f1", "f2", "f3", "f4", "-f1", "-f2", "-f3", "-f4"),
    )


def _sign_vectors(n: int) -> np.ndarray:
    return np.array(list(itertools.product([1.0, -1.0], repeat=n)))


def linf(n: int, tolerance: float = DEFAULT_TOLERANCE) -> PolyhedralSpace:
    """ℓ∞^n: vertices are the sign vectors, facets ±e_i."""
    E = np.eye(n)
    return PolyhedralSpace(_sign_vectors(n), np.vstack([E, -E]), tolerance, name=f"linf-{n}")


def l1(n: int, tolerance: float = DEFAULT_TOLERANCE) -> PolyhedralSpace:
    """ℓ1^n: vertices ±e_i, facets are the sign vectors."""
    E = np.eye(n)
    return PolyhedralSpace(np.vstack([E, -E]), _sign_vectors(n), tolerance, name=f"l1-{n}")


BUILTIN_SPACES = ("hexagon", "hexagonal-prism") + tuple(
    f"{kind}-{n}" for kind in ("linf", "l1") for n in (2, 3, 4)
)


def builtin_space(name: str, tolerance: float = DEFAULT_TOLERANCE) -> PolyhedralSpace:
    if name == "hexagon":
        return hexagon(tolerance)
    if name == "hexagonal-prism":
        return hexagonal_prism(tolerance)
    kind, _, n = name.partition("-")
    if kind in ("linf", "l1") and n in ("2", "3", "4"):
        return (linf if kind == "linf" else l1)(int(n), tolerance)
    raise KeyError(f"unknown built-in space {name!r}; choose from {', '.join(BUILTIN_SPACES)}")


def load_space(path: str) -> PolyhedralSpace:
    with open(path) as fh:
        return PolyhedralSpace.from_dict(json.load(fh))


def dump_space(space: PolyhedralSpace, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(space.to_dict(), fh, indent=2)
