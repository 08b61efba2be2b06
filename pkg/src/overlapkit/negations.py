"""Fuzzy negations: construction, numeric classification, and duality.

A fuzzy negation is an antitonic map N on [0,1] with N(0) = 1 and N(1) = 0.
The classes that matter downstream:

* strict    -- continuous and strictly decreasing (invertible);
* strong    -- involutive, N(N(x)) = x (implies strict);
* crisp     -- two-valued, which forces the lower/upper threshold families
               (0 past a cut point, 1 before it);
* frontier  -- takes the values 0 and 1 only at the endpoints.

Constructors declare the class flags they are known to satisfy; classify()
re-derives the same flags numerically on the sample grid, so the two routes
can be checked against each other. The N-dual transform N(f(N(x1),...,N(xn)))
is also provided here because it only needs the negation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .numerics import (
    DEFAULT_CONFIG,
    CheckConfig,
    PreconditionError,
    UnitValue,
    invert_strict,
    sorted_samples,
    uniform_grid,
)


@dataclass(frozen=True, eq=False)
class Negation:
    """A unary connective on [0,1] plus declared classification claims.

    The is_* flags are claims set by constructors from known facts about the
    family; classify() verifies them numerically.
    """

    fn: Callable[[float], float]
    label: str
    params: tuple[tuple[str, float], ...] = ()
    is_strict: bool = False
    is_strong: bool = False
    is_crisp: bool = False
    is_frontier: bool = False

    def __call__(self, x: float) -> UnitValue:
        return UnitValue(self.fn(x))

    def param(self, name: str) -> float:
        return dict(self.params)[name]


@dataclass(frozen=True)
class NegationClassification:
    """Numerically verified class membership with falsifying witnesses.

    witnesses maps a failed class name ("strict", "strong", ...) to the
    sample point(s) that falsified it.
    """

    is_negation: bool
    is_strict: bool
    is_strong: bool
    is_crisp: bool
    is_frontier: bool
    witnesses: dict = field(default_factory=dict)
    samples_checked: int = 0

    @property
    def witness(self) -> Optional[tuple]:
        if not self.witnesses:
            return None
        return next(iter(self.witnesses.values()))

    def as_dict(self) -> dict:
        return {
            "is_negation": self.is_negation,
            "is_strict": self.is_strict,
            "is_strong": self.is_strong,
            "is_crisp": self.is_crisp,
            "is_frontier": self.is_frontier,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "samples_checked": self.samples_checked,
        }


def make_standard() -> Negation:
    """The standard negation 1 - x (strict, strong, frontier)."""
    return Negation(
        fn=lambda x: 1.0 - x,
        label="zadeh",
        is_strict=True,
        is_strong=True,
        is_frontier=True,
    )


def make_crisp(kind: str, alpha: float) -> Negation:
    """Two-valued negation: 'lower' is 0 for x > alpha, 'upper' for x >= alpha.

    Admissible thresholds differ: lower needs alpha in [0,1), upper needs
    alpha in (0,1]. The extremes are the least and greatest negations
    (lower at 0, upper at 1).
    """
    a = float(alpha)
    if kind == "lower":
        if not 0.0 <= a < 1.0:
            raise PreconditionError("lower crisp negation needs alpha in [0,1)")
        fn = lambda x, _a=a: 0.0 if x > _a else 1.0
        label = f"crisp_lower:{a:g}"
    elif kind == "upper":
        if not 0.0 < a <= 1.0:
            raise PreconditionError("upper crisp negation needs alpha in (0,1]")
        fn = lambda x, _a=a: 0.0 if x >= _a else 1.0
        label = f"crisp_upper:{a:g}"
    else:
        raise PreconditionError(f"unknown crisp kind {kind!r} (want lower|upper)")
    return Negation(fn=fn, label=label, params=(("alpha", a),), is_crisp=True)


def make_bottom() -> Negation:
    """The least negation: 1 at 0, else 0."""
    return replace(make_crisp("lower", 0.0), label="bottom")


def make_top() -> Negation:
    """The greatest negation: 0 at 1, else 1."""
    return replace(make_crisp("upper", 1.0), label="top")


def make_power_strict(p: float) -> Negation:
    """N(x) = 1 - x^p: strict for every p > 0, strong only for p = 1."""
    pv = float(p)
    if not (math.isfinite(pv) and pv > 0.0):
        raise PreconditionError("power negation needs p > 0")
    return Negation(
        fn=lambda x, _p=pv: 1.0 - x**_p,
        label=f"power:{pv:g}",
        params=(("p", pv),),
        is_strict=True,
        is_strong=(pv == 1.0),
        is_frontier=True,
    )


def classify(negation: Negation, config: CheckConfig = DEFAULT_CONFIG) -> NegationClassification:
    """Numerically test the negation axioms and classes on the sample grid.

    Strictness bundles strict decrease on the grid with a continuity
    heuristic (adjacent-grid jump <= 10/grid_resolution); it is sound on the
    shipped catalog but, like any sampling argument, not a proof.
    """
    tol = config.eq_tol
    samples = sorted_samples(config)
    vals = np.array([float(negation(x)) for x in samples])
    witnesses: dict = {}

    boundary_ok = vals[0] == 1.0 and vals[-1] == 0.0
    if not boundary_ok:
        witnesses["boundary"] = (0.0, float(vals[0]), 1.0, float(vals[-1]))

    # Antitonic: no later value may exceed an earlier one (checked via the
    # running minimum so every pair is covered, not just neighbors).
    running_min = np.minimum.accumulate(vals)
    rises = np.nonzero(vals[1:] > running_min[:-1] + tol)[0]
    antitonic = rises.size == 0
    if not antitonic:
        j = int(rises[0]) + 1
        i = int(np.argmin(vals[:j]))
        witnesses["antitonic"] = (float(samples[i]), float(samples[j]))

    grid = uniform_grid(config)
    gvals = np.array([float(negation(x)) for x in grid])
    steps = np.diff(gvals)

    flats = np.nonzero(steps >= 0.0)[0]
    strictly_decreasing = flats.size == 0
    jump_bound = 10.0 / config.grid_resolution
    jumps = np.nonzero(np.abs(steps) > jump_bound)[0]
    continuous = jumps.size == 0
    if not strictly_decreasing:
        i = int(flats[0])
        witnesses.setdefault("strict", (float(grid[i]), float(grid[i + 1])))
    elif not continuous:
        i = int(jumps[0])
        witnesses.setdefault("strict", (float(grid[i]), float(grid[i + 1])))

    nn = np.array([float(negation(v)) for v in vals])
    invol_bad = np.nonzero(np.abs(nn - samples) > tol)[0]
    involutive = invol_bad.size == 0
    if not involutive:
        i = int(invol_bad[0])
        witnesses["strong"] = (float(samples[i]), float(nn[i]))

    off_levels = np.nonzero(np.minimum(vals, 1.0 - vals) > tol)[0]
    two_valued = off_levels.size == 0
    if not two_valued:
        i = int(off_levels[0])
        witnesses["crisp"] = (float(samples[i]), float(vals[i]))

    interior = (samples > 0.0) & (samples < 1.0)
    at_levels = interior & ((vals <= tol) | (vals >= 1.0 - tol))
    frontier_ok = not np.any(at_levels)
    if not frontier_ok:
        i = int(np.nonzero(at_levels)[0][0])
        witnesses["frontier"] = (float(samples[i]), float(vals[i]))

    is_negation = boundary_ok and antitonic
    is_strict = is_negation and strictly_decreasing and continuous
    return NegationClassification(
        is_negation=is_negation,
        is_strict=is_strict,
        is_strong=is_strict and involutive,
        is_crisp=is_negation and two_valued,
        is_frontier=is_negation and frontier_ok,
        witnesses=witnesses,
        samples_checked=len(samples),
    )


def dual(f, negation: Negation):
    """N-dual of a fusion function: N(f(N(x1),...,N(xn))).

    Keeps the arity; the result is tagged with the neutral 'aggregation' role
    because duality preserves aggregation-function status but may swap the
    conjunctive/disjunctive roles.
    """
    from .conjunctors import FusionFunction

    if not isinstance(f, FusionFunction):
        raise PreconditionError("dual expects a FusionFunction")

    def fn(*xs, _f=f, _n=negation):
        return _n(_f(*[_n(x) for x in xs]))

    return FusionFunction(
        fn=fn,
        arity=f.arity,
        role="aggregation",
        label=f"dual({f.label}, {negation.label})",
        params=f.params,
    )


def inverse_negation(negation: Negation, tol: float | None = None) -> Negation:
    """Numeric inverse of a strict negation, itself packaged as a Negation.

    Evaluations bisect N (memoized), so the result is within the bisection
    tolerance of the true inverse rather than exact.
    """
    if not negation.is_strict:
        raise PreconditionError("inverse_negation requires a strict negation")
    t = DEFAULT_CONFIG.bisect_tol if tol is None else float(tol)

    @lru_cache(maxsize=65536)
    def inv(y: float) -> float:
        return float(invert_strict(negation, y, t))

    return Negation(
        fn=lambda y: inv(float(y)),
        label=f"inv({negation.label})",
        params=negation.params,
        is_strict=True,
        is_strong=negation.is_strong,
        is_frontier=negation.is_frontier,
    )
