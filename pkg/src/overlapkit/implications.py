"""Implication constructors, their natural negations, and crisp classification.

Families built here (labels follow the CLI grammar):

* gon(GO, N): N(GO(x, N(y))), the residuated-negation composite over a
  conjunctive connective that need not have a neutral element.
* gn(G, N): G(N(x), y), the disjunction/negation composite.
* ql(O, G): the two-branch form G(0, O(1,y)) at x = 1, else 1.
* ro(O): the residual sup{z : O(x,z) <= y}, computed by bisection.
* d(G): G(0, y) at x = 1, else 1.
* tn(T, N): N(T(x, N(y))) with T claimed to be a t-norm.
* crisp(kind, alpha, beta): the four two-valued threshold families C1-C4.

check_implication_axioms verifies the defining conditions on the grid:
antitone in the first argument (I1), isotone in the second (I2), and the
corner values I(0,0) = 1 (I3), I(1,1) = 1 (I4), I(1,0) = 0 (I5). Corner
checks use eq_tol so bisection-backed residuals are not penalized for their
final-bracket width.

classify_crisp inverts the crisp construction: when an implication is
two-valued on the sample mesh it bisects the zero-region boundary, snaps the
thresholds to nearby sample points, decides strict vs non-strict by
evaluating at the candidate itself, and accepts a fit only when the fitted
family reproduces the implication on the whole mesh.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

from .conjunctors import AxiomCheck, AxiomReport, FusionFunction
from .negations import Negation, inverse_negation
from .numerics import (
    DEFAULT_CONFIG,
    CheckConfig,
    PreconditionError,
    UnitValue,
    bisect_sup,
    iteration_count,
    sorted_samples,
    uniform_grid,
)

FAMILIES = ("gon", "gn", "ql", "ro", "d", "tn", "crisp", "agg")

CRISP_KINDS = ("C1", "C2", "C3", "C4")


@dataclass(frozen=True, eq=False)
class Implication:
    """A binary map on [0,1]^2 built by one of the named constructors.

    family records which constructor produced it and parts holds the operand
    objects, so reports can trace an implication back to its ingredients.
    """

    fn: Callable[[float, float], float]
    label: str
    family: str
    parts: tuple = ()
    params: tuple[tuple[str, float], ...] = ()

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown implication family {self.family!r}")

    def __call__(self, x: float, y: float) -> UnitValue:
        return UnitValue(self.fn(x, y))

    def part(self, name: str):
        return dict(self.parts)[name]


class CrispFit(NamedTuple):
    """Threshold family recovered by classify_crisp."""

    kind: str
    alpha: float
    beta: float


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _require_binary(f: FusionFunction, who: str) -> None:
    if not isinstance(f, FusionFunction) or f.arity != 2:
        raise PreconditionError(f"{who} needs a binary FusionFunction")


def make_gon(go: FusionFunction, negation: Negation) -> Implication:
    """I(x,y) = N(GO(x, N(y))) for a binary conjunctive connective GO.

    GO does not need a neutral element; that freedom is what distinguishes
    this family from tn. Any binary non-grouping connective is accepted.
    """
    _require_binary(go, "make_gon")
    if go.role == "grouping":
        raise PreconditionError("make_gon needs a conjunctive connective, not a grouping")

    def fn(x: float, y: float, _g=go, _n=negation) -> float:
        return float(_n(_g(x, float(_n(y)))))

    return Implication(
        fn=fn,
        label=f"gon({go.label}, {negation.label})",
        family="gon",
        parts=(("go", go), ("negation", negation)),
    )


def make_gn(grouping: FusionFunction, negation: Negation) -> Implication:
    """I(x,y) = G(N(x), y) for a binary grouping function G."""
    _require_binary(grouping, "make_gn")
    if grouping.role != "grouping":
        raise PreconditionError("make_gn needs a grouping function")

    def fn(x: float, y: float, _g=grouping, _n=negation) -> float:
        return float(_g(float(_n(x)), y))

    return Implication(
        fn=fn,
        label=f"gn({grouping.label}, {negation.label})",
        family="gn",
        parts=(("grouping", grouping), ("negation", negation)),
    )


def make_ql(overlap: FusionFunction, grouping: FusionFunction) -> Implication:
    """Two-branch quantum-logic style form: G(0, O(1,y)) if x = 1, else 1.

    Only this specialization is exposed; with other negations the shape
    fails the implication axioms and is deliberately not constructible here.
    """
    _require_binary(overlap, "make_ql")
    _require_binary(grouping, "make_ql")
    if overlap.role not in ("overlap", "general_overlap"):
        raise PreconditionError("make_ql needs an overlap-role connective")
    if grouping.role != "grouping":
        raise PreconditionError("make_ql needs a grouping function")

    def fn(x: float, y: float, _o=overlap, _g=grouping) -> float:
        if x == 1.0:
            return float(_g(0.0, float(_o(1.0, y))))
        return 1.0

    return Implication(
        fn=fn,
        label=f"ql({overlap.label}, {grouping.label})",
        family="ql",
        parts=(("overlap", overlap), ("grouping", grouping)),
    )


def make_residual(overlap: FusionFunction, config: CheckConfig = DEFAULT_CONFIG) -> Implication:
    """Residual implication sup{z : O(x,z) <= y} via monotone bisection.

    Relies on O being continuous and increasing in z so the admissible set
    is a closed initial segment and the supremum is attained. O(x,0) = 0
    guarantees the set is nonempty; a connective violating that surfaces as
    a precondition error at evaluation time.
    """
    _require_binary(overlap, "make_residual")
    if overlap.role not in ("overlap", "general_overlap", "t_norm"):
        raise PreconditionError("make_residual needs a conjunctive connective")
    tol = config.bisect_tol

    def fn(x: float, y: float, _o=overlap, _tol=tol) -> float:
        return float(bisect_sup(lambda z: float(_o(x, z)) <= y, tol=_tol))

    return Implication(
        fn=fn,
        label=f"ro({overlap.label})",
        family="ro",
        parts=(("overlap", overlap),),
        params=(("bisect_tol", tol),),
    )


def make_d(grouping: FusionFunction) -> Implication:
    """Two-branch disjunctive form: G(0, y) if x = 1, else 1."""
    _require_binary(grouping, "make_d")
    if grouping.role != "grouping":
        raise PreconditionError("make_d needs a grouping function")

    def fn(x: float, y: float, _g=grouping) -> float:
        return float(_g(0.0, y)) if x == 1.0 else 1.0

    return Implication(
        fn=fn,
        label=f"d({grouping.label})",
        family="d",
        parts=(("grouping", grouping),),
    )


def make_tn(tnorm: FusionFunction, negation: Negation) -> Implication:
    """I(x,y) = N(T(x, N(y))) where the caller claims T passes T1-T3.

    The claim is not re-verified here; run check_axioms(T, "T") to audit it.
    """
    _require_binary(tnorm, "make_tn")
    if tnorm.role == "grouping":
        raise PreconditionError("make_tn needs a conjunctive connective, not a grouping")

    def fn(x: float, y: float, _t=tnorm, _n=negation) -> float:
        return float(_n(_t(x, float(_n(y)))))

    return Implication(
        fn=fn,
        label=f"tn({tnorm.label}, {negation.label})",
        family="tn",
        parts=(("tnorm", tnorm), ("negation", negation)),
    )


_CRISP_RANGES = {
    # kind: ((alpha_min_open, alpha_max_open), (beta_min_open, beta_max_open))
    # encoded as inclusive bounds plus strictness of the zero-region tests
    "C1": (lambda a: 0.0 < a <= 1.0, lambda b: 0.0 <= b < 1.0),
    "C2": (lambda a: 0.0 <= a < 1.0, lambda b: 0.0 < b <= 1.0),
    "C3": (lambda a: 0.0 < a <= 1.0, lambda b: 0.0 < b <= 1.0),
    "C4": (lambda a: 0.0 <= a < 1.0, lambda b: 0.0 <= b < 1.0),
}


def make_crisp_family(kind: str, alpha: float, beta: float) -> Implication:
    """Two-valued threshold implications, zero exactly on one corner region.

    C1: 0 iff x >= alpha and y <= beta   (alpha in (0,1], beta in [0,1))
    C2: 0 iff x >  alpha and y <  beta   (alpha in [0,1), beta in (0,1])
    C3: 0 iff x >= alpha and y <  beta   (alpha, beta in (0,1])
    C4: 0 iff x >  alpha and y <= beta   (alpha, beta in [0,1))
    """
    if kind not in CRISP_KINDS:
        raise PreconditionError(f"unknown crisp kind {kind!r} (want C1..C4)")
    a, b = float(alpha), float(beta)
    ok_a, ok_b = _CRISP_RANGES[kind]
    if not (ok_a(a) and ok_b(b)):
        raise PreconditionError(f"parameters ({a:g}, {b:g}) out of range for {kind}")
    x_strict = kind in ("C2", "C4")
    y_strict = kind in ("C2", "C3")

    def fn(x: float, y: float, _a=a, _b=b, _xs=x_strict, _ys=y_strict) -> float:
        in_x = x > _a if _xs else x >= _a
        in_y = y < _b if _ys else y <= _b
        return 0.0 if in_x and in_y else 1.0

    return Implication(
        fn=fn,
        label=f"crisp({kind}, {a:g}, {b:g})",
        family="crisp",
        params=(("alpha", a), ("beta", b)),
        parts=(("kind", kind),),
    )


# ---------------------------------------------------------------------------
# Derived objects
# ---------------------------------------------------------------------------


def natural_negation(implication: Implication) -> Negation:
    """The unary trace x -> I(x, 0), wrapped with no class claims.

    Classify it numerically; when the source connective has neutral element
    1, the trace of gon(GO, N) recovers N itself.
    """
    return Negation(
        fn=lambda x, _i=implication: float(_i(x, 0.0)),
        label=f"nat({implication.label})",
    )


def recover_go(
    implication: Implication,
    negation: Negation,
    config: CheckConfig = DEFAULT_CONFIG,
) -> FusionFunction:
    """Invert the gon construction: (x,y) -> N^{-1}(I(x, N^{-1}(y))).

    Needs a strict negation for the numeric inverse to exist. For
    I = make_gon(GO, N) the result matches GO within twice the bisection
    tolerance (two nested inversions compose their errors).
    """
    if not getattr(negation, "is_strict", False):
        raise PreconditionError("recover_go requires a strict negation")
    inv = inverse_negation(negation, config.bisect_tol)

    def fn(x: float, y: float, _i=implication, _inv=inv) -> float:
        return float(_inv(float(_i(x, float(_inv(y))))))

    return FusionFunction(
        fn=fn,
        arity=2,
        role="general_overlap",
        label=f"recovered({implication.label})",
    )


# ---------------------------------------------------------------------------
# Axioms and crisp classification
# ---------------------------------------------------------------------------


def check_implication_axioms(
    implication: Implication, config: CheckConfig = DEFAULT_CONFIG
) -> AxiomReport:
    """Grid check of I1-I5 for one implication.

    Monotonicity uses running extrema so every grid pair is covered, not
    just neighbors; corner identities are compared within eq_tol.
    """
    xs = uniform_grid(config)
    tol = config.eq_tol
    m = np.array([[float(implication(float(x), float(y))) for y in xs] for x in xs])
    checks = []

    rise = m - np.minimum.accumulate(m, axis=0)
    if rise.max() > tol:
        i, j = np.argwhere(rise > tol)[0]
        checks.append(
            AxiomCheck(
                axiom="I1",
                passed=False,
                witness=(float(xs[i]), float(xs[j])),
                deviation=float(rise.max()),
                note="not antitone in the first argument",
            )
        )
    else:
        checks.append(AxiomCheck(axiom="I1", passed=True, deviation=float(rise.max())))

    sag = np.maximum.accumulate(m, axis=1) - m
    if sag.max() > tol:
        i, j = np.argwhere(sag > tol)[0]
        checks.append(
            AxiomCheck(
                axiom="I2",
                passed=False,
                witness=(float(xs[i]), float(xs[j])),
                deviation=float(sag.max()),
                note="not isotone in the second argument",
            )
        )
    else:
        checks.append(AxiomCheck(axiom="I2", passed=True, deviation=float(sag.max())))

    for axiom, point, want in (("I3", (0.0, 0.0), 1.0), ("I4", (1.0, 1.0), 1.0), ("I5", (1.0, 0.0), 0.0)):
        got = float(implication(*point))
        dev = abs(got - want)
        checks.append(
            AxiomCheck(axiom=axiom, passed=dev <= tol, witness=None if dev <= tol else point, deviation=dev)
        )
    return AxiomReport(label=implication.label, axiom_set="I", checks=tuple(checks))


def _snap_candidates(pred: Callable[[float], bool], samples) -> Optional[list[float]]:
    """Bisect the boundary of a monotone true-then-false predicate on [0,1].

    Returns candidate threshold locations: sample points falling inside the
    final bracket first (a threshold sitting on a sample point should be
    reported as that point, not as an endpoint a rounding error away), then
    the bracket endpoints. None when pred never turns false.
    """
    if not pred(0.0):
        return None
    if pred(1.0):
        return None
    lo, hi = 0.0, 1.0
    for _ in range(iteration_count(1e-12)):
        mid = 0.5 * (lo + hi)
        if pred(mid):
            lo = mid
        else:
            hi = mid
    pad = 1e-9
    snapped = sorted({float(s) for s in samples if lo - pad <= float(s) <= hi + pad})
    # Prefer the endpoint with the terser repr: when the boundary sits on an
    # exactly representable value (dyadic thresholds hit by the bisection),
    # that endpoint is the true switch point and the other is off by one
    # final-bracket width.
    endpoints = sorted({lo, hi} - set(snapped), key=lambda v: (len(repr(v)), v))
    return snapped + endpoints


def classify_crisp(
    implication: Implication, config: CheckConfig = DEFAULT_CONFIG
) -> Optional[CrispFit]:
    """Fit a two-valued implication to one of the threshold families C1-C4.

    Returns None as soon as an interior value shows the range is not
    {0, 1}. Otherwise the zero region is a corner set {x over alpha} x
    {y under beta}; both thresholds are bisected along the y = 0 and x = 1
    edges, strictness is read off by evaluating at the threshold itself,
    and the fit is accepted only if the reconstructed family agrees with
    the input everywhere on the sample mesh.
    """
    samples = sorted_samples(config)
    tol = config.eq_tol
    for x in samples:
        for y in samples:
            v = float(implication(float(x), float(y)))
            if tol < v < 1.0 - tol:
                return None

    a_cands = _snap_candidates(lambda x: float(implication(x, 0.0)) > 0.5, samples)
    b_cands = _snap_candidates(lambda y: float(implication(1.0, y)) < 0.5, samples)
    if a_cands is None or b_cands is None:
        return None

    for a in a_cands:
        x_strict = float(implication(a, 0.0)) > 0.5
        for b in b_cands:
            y_strict = float(implication(1.0, b)) >= 0.5
            kind = {
                (False, False): "C1",
                (True, True): "C2",
                (False, True): "C3",
                (True, False): "C4",
            }[(x_strict, y_strict)]
            try:
                fitted = make_crisp_family(kind, a, b)
            except PreconditionError:
                continue
            if _agrees_on_mesh(implication, fitted, samples, tol):
                return CrispFit(kind=kind, alpha=a, beta=b)
    return None


def _agrees_on_mesh(i1: Implication, i2: Implication, samples, tol: float) -> bool:
    for x in samples:
        xv = float(x)
        for y in samples:
            yv = float(y)
            if abs(float(i1(xv, yv)) - float(i2(xv, yv))) > tol:
                return False
    return True
