"""Smoothness of operators in the operator norm and in the numerical radius norm.

In finite dimensions over the reals:

* ``T`` is smooth in the operator norm iff it attains its norm at a single
  ``±x0`` and ``T x0`` is a smooth point of the space;
* ``T`` is nu-smooth iff its numerical radius is attained at a single
  ``±(x0, x0*)``.

Only extreme members are examined.  Should a non-extreme point (or pair)
attain, it lies in the relative interior of a face of the ball and, by
convexity, at least two extreme members of that face attain as well; no face
holds two antipodal points, so the attainment set then has at least two
classes.  Uniqueness among extreme members is therefore uniqueness overall.
``nu_smooth_by_definition`` probes right-additivity directly and serves as a
one-sided cross-check of that reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroOperator
from .operators import OperatorMatrix, numerical_radius, operator_norm
from .orthogonality import is_w_orthogonal
from .space import SQRT3, is_smooth_point


def _nonzero_reports(T: OperatorMatrix):
    w = numerical_radius(T)
    if w.value <= T.space.tolerance:
        raise ZeroOperator("T must be nonzero")
    return w, operator_norm(T)


def is_nu_smooth(T: OperatorMatrix) -> bool:
    w, _ = _nonzero_reports(T)
    return len(w.sign_classes) == 1


def is_operator_smooth(T: OperatorMatrix) -> bool:
    _, op = _nonzero_reports(T)
    if len(op.sign_classes) != 1:
        return False
    x0 = T.space.vertices[op.class_representatives()[0].vertex]
    return is_smooth_point(T.space, T(x0))


@dataclass(frozen=True)
class SmoothnessReport:
    operator_smooth: bool
    nu_smooth: bool
    op_value: float
    w_value: float
    op_classes: tuple  # representative vertex per ± class
    w_classes: tuple  # representative (vertex, facet) per ± class
    image_smooth: bool | None  # smoothness of T x0 when M_T has one class
    op_runner_up: float | None
    w_runner_up: float | None

    def to_dict(self, space=None) -> dict:
        def vlab(i):
            return space.vertex_label(i) if space is not None else i

        def plab(p):
            if space is None:
                return list(p)
            return [space.vertex_label(p[0]), space.facet_label(p[1])]

        return {
            "operator_smooth": self.operator_smooth,
            "nu_smooth": self.nu_smooth,
            "op_value": self.op_value,
            "w_value": self.w_value,
            "evidence": {
                "operator": {
                    "attaining_classes": [vlab(i) for i in self.op_classes],
                    "image_smooth": self.image_smooth,
                    "runner_up": self.op_runner_up,
                },
                "nu": {
                    "witness_classes": [plab(p) for p in self.w_classes],
                    "runner_up": self.w_runner_up,
                },
            },
        }

    def table(self, space=None) -> str:
        d = self.to_dict(space)
        ev = d["evidence"]
        rows = [
            ("norm", "value", "smooth", "attaining classes", "runner-up"),
            ("operator", f"{self.op_value:.12g}", str(self.operator_smooth),
             " ".join(map(str, ev["operator"]["attaining_classes"])), _fmt(self.op_runner_up)),
            ("numerical radius", f"{self.w_value:.12g}", str(self.nu_smooth),
             " ".join(f"({a},{b})" for a, b in ev["nu"]["witness_classes"]), _fmt(self.w_runner_up)),
        ]
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in rows]
        lines.insert(1, "  ".join("-" * wd for wd in widths))
        if self.image_smooth is not None:
            lines.append(f"T x0 smooth point: {self.image_smooth}")
        return "\n".join(lines)


def _fmt(x):
    return "-" if x is None else f"{x:.12g}"


def classify(T: OperatorMatrix) -> SmoothnessReport:
    w, op = _nonzero_reports(T)
    image_smooth = None
    if len(op.sign_classes) == 1:
        x0 = T.space.vertices[op.class_representatives()[0].vertex]
        image_smooth = is_smooth_point(T.space, T(x0))
    return SmoothnessReport(
        operator_smooth=bool(image_smooth),
        nu_smooth=len(w.sign_classes) == 1,
        op_value=op.value,
        w_value=w.value,
        op_classes=tuple(r.vertex for r in op.class_representatives()),
        w_classes=tuple((r.vertex, r.facet) for r in w.class_representatives()),
        image_smooth=image_smooth,
        op_runner_up=op.runner_up,
        w_runner_up=w.runner_up,
    )


def _pair_functional(space, witness):
    """``B -> sign * f(Bv)`` normalized so that it equals ``w(T)`` at ``T``."""
    v = space.vertices[witness.vertex]
    f = space.facets[witness.facet]
    s = np.sign(witness.signed_value)
    return lambda M: s * float(f @ (M @ v))


def nu_smooth_by_definition(T: OperatorMatrix, trials: int = 200, seed: int = 0) -> bool:
    """Randomized right-additivity probe.

    Each trial builds ``A`` and ``B`` orthogonal to ``T`` by removing from
    random operators their component along the norming functional of one
    witness class (a different class for ``A`` and ``B`` when there are
    several), confirms both with :func:`is_w_orthogonal`, and tests ``A + B``.
    ``False`` is conclusive; ``True`` only means no violation was found.
    """
    w, _ = _nonzero_reports(T)
    space, n = T.space, T.space.dim
    rng = np.random.default_rng(seed)
    reps = w.class_representatives()
    funcs = [_pair_functional(space, r) for r in reps]
    Tm = T.entries
    for _ in range(trials):
        if len(reps) > 1:
            i, j = rng.choice(len(reps), size=2, replace=False)
        else:
            i = j = 0
        A0 = rng.standard_normal((n, n))
        B0 = rng.standard_normal((n, n))
        A = OperatorMatrix(space, A0 - (funcs[i](A0) / w.value) * Tm)
        B = OperatorMatrix(space, B0 - (funcs[j](B0) / w.value) * Tm)
        if not (is_w_orthogonal(T, A)[0] and is_w_orthogonal(T, B)[0]):
            continue
        if not is_w_orthogonal(T, A + B)[0]:
            return False
    return True


def hexagon_right_additivity_pair(space):
    """A fixed pair ``(A, B)`` on the hexagon, both orthogonal to the hexagon
    example operator while ``A + B`` (four times that operator) is not."""
    A = OperatorMatrix(space, [[1.0, 0.0], [SQRT3, 0.0]])
    B = OperatorMatrix(space, [[-1.0, 0.0], [SQRT3, 0.0]])
    return A, B
