"""Overlap, grouping, and general overlap functions with a grid axiom engine.

The conjunctive connectives handled here are commutative, increasing maps on
[0,1]^n distinguished by their boundary behavior:

* overlap (O1-O5, binary): continuous; zero iff a factor is zero; one iff
  both arguments are one.
* grouping (G1-G5, binary): the disjunctive mirror; zero iff both arguments
  are zero; one iff some argument is one.
* general overlap (GO1-GO5, n-ary): the relaxation where the boundary
  conditions are one-directional (a zero factor forces 0, all-ones forces 1)
  and the converses GO2a/GO3a become optional extras.
* t-norm (T1-T3): commutative, associative, with neutral element 1.

check_axioms verifies a claimed axiom set numerically on a grid: symmetry,
exact boundary hits for the "if" directions, witness searches for the
falsifiable "only if" directions, all-pairs monotonicity (via running
maxima), and a continuity heuristic bounding jumps between adjacent grid
cells by 10/resolution. "Only if" directions that survive the search are
reported as "no counterexample found on grid", never as proved.

Binary functions are checked at the configured grid resolution; ternary and
wider ones on a reduced grid (21 points for arity 3, 11 beyond) to keep the
suite at desk scale.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Optional

import numpy as np

from .numerics import (
    DEFAULT_CONFIG,
    CheckConfig,
    PreconditionError,
    UnitValue,
    iteration_count,
    sorted_samples,
    uniform_grid,
)

ROLES = ("overlap", "grouping", "general_overlap", "t_norm", "aggregation")

CATALOG_NAMES = (
    "O_mM",
    "O_DB",
    "O_P",
    "O_V",
    "O_min",
    "GO_max",
    "GO_TL",
    "GO_PN",
    "GO_GN",
)


@dataclass(frozen=True, eq=False)
class FusionFunction:
    """An n-ary connective on [0,1]^n with a role claim and a label.

    The role is a claim set by constructors; check_axioms verifies it. Output
    is validated into [0,1] on every call.
    """

    fn: Callable[..., float]
    arity: int
    role: str
    label: str
    params: tuple[tuple[str, float], ...] = ()

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise PreconditionError(f"unknown role {self.role!r}")
        if self.arity < 1:
            raise PreconditionError("arity must be positive")

    def __call__(self, *xs: float) -> UnitValue:
        if len(xs) != self.arity:
            raise PreconditionError(
                f"{self.label} takes {self.arity} arguments, got {len(xs)}"
            )
        return UnitValue(self.fn(*xs))

    def param(self, name: str) -> float:
        return dict(self.params)[name]

    def with_role(self, role: str) -> "FusionFunction":
        return replace(self, role=role)


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one axiom: pass/fail, witness point, worst deviation."""

    axiom: str
    passed: bool
    witness: Optional[tuple] = None
    deviation: float = 0.0
    note: str = ""
    informational: bool = False

    def as_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "passed": self.passed,
            "witness": None if self.witness is None else list(self.witness),
            "deviation": self.deviation,
            "note": self.note,
            "informational": self.informational,
        }


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom results for one function against one axiom set.

    Informational entries (the GO2a/GO3a converses) do not count toward the
    aggregate verdict: a general overlap may legitimately fail them.
    """

    label: str
    axiom_set: str
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def check(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "axiom_set": self.axiom_set,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def summary(self) -> str:
        lines = [f"{self.label} [{self.axiom_set}] -> {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            tag = "pass" if c.passed else "FAIL"
            extra = " info" if c.informational else ""
            where = "" if c.witness is None else f" at {tuple(round(w, 9) for w in c.witness)}"
            note = f" ({c.note})" if c.note else ""
            lines.append(f"  {c.axiom:<6} {tag}{extra}{where}{note}")
        return "\n".join(lines)


@dataclass(frozen=True)
class IdempotencyResult:
    """Diagonal check f(x,...,x) = x with the worst offending point."""

    ok: bool
    witness: Optional[float] = None
    deviation: float = 0.0

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def _require_positive(params: dict, key: str) -> float:
    if key not in params:
        raise PreconditionError(f"missing required parameter {key!r}")
    value = float(params[key])
    if not (math.isfinite(value) and value > 0.0):
        raise PreconditionError(f"parameter {key!r} must be > 0")
    return value


def _require_arity(params: dict) -> int:
    if "n" not in params:
        raise PreconditionError("missing required parameter 'n' (arity)")
    n = params["n"]
    if isinstance(n, float) and not n.is_integer():
        raise PreconditionError("arity 'n' must be an integer >= 2")
    n = int(n)
    if n < 2:
        raise PreconditionError("arity 'n' must be an integer >= 2")
    return n


def _pn_factor(xs: tuple[float, ...]) -> float:
    # fsum keeps the sum-gate decision independent of argument order,
    # which naive left-to-right addition is not near the threshold.
    return 0.0 if math.fsum(xs) <= 1.0 else min(xs)


def catalog(name: str, **params: float) -> FusionFunction:
    """Named catalog entries, addressable as e.g. O_P:p=2 or GO_PN:n=3.

    Overlaps: O_mM, O_DB, O_P (needs p>0), O_V, O_min.
    General overlaps: GO_max, GO_TL (needs p>0), GO_PN and GO_GN (need arity n).
    """
    if name == "O_mM":
        _no_extra(params)
        return FusionFunction(
            fn=lambda x, y: min(x, y) * max(x * x, y * y),
            arity=2,
            role="overlap",
            label="O_mM",
        )
    if name == "O_DB":
        _no_extra(params)
        return FusionFunction(
            fn=lambda x, y: 0.0 if x + y == 0.0 else 2.0 * x * y / (x + y),
            arity=2,
            role="overlap",
            label="O_DB",
        )
    if name == "O_P":
        p = _require_positive(params, "p")
        _no_extra(params, {"p"})
        return FusionFunction(
            fn=lambda x, y, _p=p: x**_p * y**_p,
            arity=2,
            role="overlap",
            label=f"O_P:p={p:g}",
            params=(("p", p),),
        )
    if name == "O_V":
        _no_extra(params)

        def o_v(x: float, y: float) -> float:
            if x >= 0.5 and y >= 0.5:
                s = (2.0 * x - 1.0) ** 2 * (2.0 * y - 1.0) ** 2
                return 0.5 * (1.0 + s)
            return min(x, y)

        return FusionFunction(fn=o_v, arity=2, role="overlap", label="O_V")
    if name == "O_min":
        _no_extra(params)
        return FusionFunction(fn=lambda x, y: min(x, y), arity=2, role="overlap", label="O_min")
    if name == "GO_max":
        _no_extra(params)
        return FusionFunction(
            fn=lambda x, y: max(0.0, x * x + y * y - 1.0),
            arity=2,
            role="general_overlap",
            label="GO_max",
        )
    if name == "GO_TL":
        p = _require_positive(params, "p")
        _no_extra(params, {"p"})
        return FusionFunction(
            fn=lambda x, y, _p=p: min(x, y) ** _p * max(0.0, x + y - 1.0),
            arity=2,
            role="general_overlap",
            label=f"GO_TL:p={p:g}",
            params=(("p", p),),
        )
    if name == "GO_PN":
        n = _require_arity(params)
        _no_extra(params, {"n"})
        return FusionFunction(
            fn=lambda *xs: math.prod(xs) * _pn_factor(xs),
            arity=n,
            role="general_overlap",
            label=f"GO_PN:n={n}",
            params=(("n", float(n)),),
        )
    if name == "GO_GN":
        n = _require_arity(params)
        _no_extra(params, {"n"})
        return FusionFunction(
            fn=lambda *xs, _n=n: math.prod(xs) ** (1.0 / _n) * _pn_factor(xs),
            arity=n,
            role="general_overlap",
            label=f"GO_GN:n={n}",
            params=(("n", float(n)),),
        )
    raise PreconditionError(f"unknown catalog name {name!r}")


def _no_extra(params: dict, allowed: set | None = None) -> None:
    extra = set(params) - (allowed or set())
    if extra:
        raise PreconditionError(f"unexpected parameters {sorted(extra)}")


def grouping_max() -> FusionFunction:
    """The maximum, the basic grouping function."""
    return FusionFunction(fn=lambda x, y: max(x, y), arity=2, role="grouping", label="max_grouping")


def grouping_probsum() -> FusionFunction:
    """Probabilistic sum 1 - (1-x)(1-y), a strict grouping function."""
    return FusionFunction(
        fn=lambda x, y: 1.0 - (1.0 - x) * (1.0 - y),
        arity=2,
        role="grouping",
        label="prob_sum",
    )


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def truncate_overlap(overlap: FusionFunction, a: float) -> FusionFunction:
    """Truncate an overlap below its level at a, renormalized.

    The result max(0, O(x,y) - O(max(x,y), a)) / (1 - O(max(x,y), a)) is a
    general overlap function that vanishes on a strip of nonzero arguments,
    so it is deliberately not an overlap function.
    """
    if overlap.role != "overlap" or overlap.arity != 2:
        raise PreconditionError("truncate_overlap needs a binary overlap function")
    av = float(a)
    if not 0.0 < av < 1.0:
        raise PreconditionError("truncation level a must lie in (0,1)")

    def fn(x: float, y: float, _o=overlap.fn, _a=av) -> float:
        cut = _o(max(x, y), _a)
        return max(0.0, _o(x, y) - cut) / (1.0 - cut)

    return FusionFunction(
        fn=fn,
        arity=2,
        role="general_overlap",
        label=f"trunc:{overlap.label},a={av:g}",
        params=overlap.params + (("a", av),),
    )


def grouping_from(go: FusionFunction, negation, config: CheckConfig = DEFAULT_CONFIG) -> FusionFunction:
    """Dual a binary general overlap into a grouping: N(GO(N(x), N(y))).

    Requires a strict negation. The construction only yields a genuine
    grouping when GO also satisfies the converse boundary conditions GO2a
    and GO3a; those are scanned on the grid, and on failure the result is
    still returned but downgraded to the neutral aggregation role with a
    warning.
    """
    if go.arity != 2:
        raise PreconditionError("grouping_from needs a binary function")
    if not getattr(negation, "is_strict", False):
        raise PreconditionError("grouping_from requires a strict negation")
    ok2, w2 = _converse_scan(go, config, direction="zero")
    ok3, w3 = _converse_scan(go, config, direction="one")
    role = "grouping"
    if not (ok2 and ok3):
        bad = w2 if not ok2 else w3
        warnings.warn(
            f"{go.label} fails the GO2a/GO3a grid check at {bad}; "
            "dual is returned with role 'aggregation', not 'grouping'",
            stacklevel=2,
        )
        role = "aggregation"

    def fn(x: float, y: float, _g=go, _n=negation) -> float:
        return _n(_g(_n(x), _n(y)))

    return FusionFunction(
        fn=fn,
        arity=2,
        role=role,
        label=f"dualG({go.label}, {negation.label})",
        params=go.params,
    )


def overlap_from(grouping: FusionFunction, negation, config: CheckConfig = DEFAULT_CONFIG) -> FusionFunction:
    """Mirror of grouping_from: N(G(N(x), N(y))) as a general overlap.

    The grouping must honestly vanish only at (0,0) and reach 1 only with a
    1 argument (the converse scans); otherwise the dual is downgraded with a
    warning, as in grouping_from.
    """
    if grouping.arity != 2:
        raise PreconditionError("overlap_from needs a binary function")
    if not getattr(negation, "is_strict", False):
        raise PreconditionError("overlap_from requires a strict negation")
    ok2, w2 = _grouping_converse_scan(grouping, config, direction="zero")
    ok3, w3 = _grouping_converse_scan(grouping, config, direction="one")
    role = "general_overlap"
    if not (ok2 and ok3):
        bad = w2 if not ok2 else w3
        warnings.warn(
            f"{grouping.label} fails the grouping converse grid check at {bad}; "
            "dual is returned with role 'aggregation'",
            stacklevel=2,
        )
        role = "aggregation"

    def fn(x: float, y: float, _g=grouping, _n=negation) -> float:
        return _n(_g(_n(x), _n(y)))

    return FusionFunction(
        fn=fn,
        arity=2,
        role=role,
        label=f"dualO({grouping.label}, {negation.label})",
        params=grouping.params,
    )


def piecewise_neutral_go(e: float) -> FusionFunction:
    """General overlap with prescribed neutral element e.

    min below e, max above e, and the rescaled product x*y/e on the mixed
    region; the three branches agree on the seams, so the result is
    continuous with f(x, e) = x.
    """
    ev = float(e)
    if not 0.0 < ev <= 1.0:
        raise PreconditionError("neutral element e must lie in (0,1]")

    def fn(x: float, y: float, _e=ev) -> float:
        if max(x, y) <= _e:
            return min(x, y)
        if min(x, y) >= _e:
            return max(x, y)
        return x * y / _e

    return FusionFunction(
        fn=fn,
        arity=2,
        role="general_overlap",
        label=f"neutral_go:e={ev:g}",
        params=(("e", ev),),
    )


def idempotent_go(p: float, q: float) -> FusionFunction:
    """Idempotent general overlap ((x^p y^q + x^q y^p)/2)^(1/(p+q))."""
    pv, qv = float(p), float(q)
    if not (math.isfinite(pv) and pv > 0.0 and math.isfinite(qv) and qv > 0.0):
        raise PreconditionError("idempotent_go needs p > 0 and q > 0")

    def fn(x: float, y: float, _p=pv, _q=qv) -> float:
        mean = 0.5 * (x**_p * y**_q + x**_q * y**_p)
        return mean ** (1.0 / (_p + _q))

    return FusionFunction(
        fn=fn,
        arity=2,
        role="general_overlap",
        label=f"idem_go:p={pv:g},q={qv:g}",
        params=(("p", pv), ("q", qv)),
    )


# ---------------------------------------------------------------------------
# Grid engine
# ---------------------------------------------------------------------------


def check_resolution(config: CheckConfig, arity: int) -> int:
    """Grid resolution used for a given arity (reduced beyond binary)."""
    if arity <= 2:
        return config.grid_resolution
    return 21 if arity == 3 else 11


def _axis_grid(config: CheckConfig, arity: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, check_resolution(config, arity))


def _tensor(f: FusionFunction, xs: np.ndarray) -> np.ndarray:
    vals = [float(f(*combo)) for combo in product(xs, repeat=f.arity)]
    return np.asarray(vals).reshape((len(xs),) * f.arity)


def _first_index(mask: np.ndarray) -> tuple[int, ...]:
    idx = np.argwhere(mask)
    return tuple(int(k) for k in idx[0])


def _symmetry_check(tensor: np.ndarray, xs: np.ndarray, tol: float) -> AxiomCheck:
    worst = 0.0
    for axis in range(tensor.ndim - 1):
        swapped = np.swapaxes(tensor, axis, axis + 1)
        dev = np.abs(tensor - swapped)
        worst = max(worst, float(dev.max()))
        if dev.max() > tol:
            at = _first_index(dev > tol)
            return AxiomCheck(
                axiom="symmetry",
                passed=False,
                witness=tuple(float(xs[k]) for k in at),
                deviation=float(dev.max()),
            )
    return AxiomCheck(axiom="symmetry", passed=True, deviation=worst)


def _monotone_check(tensor: np.ndarray, xs: np.ndarray, tol: float) -> AxiomCheck:
    # Running maxima cover every pair along each axis, not just neighbors.
    worst = 0.0
    for axis in range(tensor.ndim):
        drop = np.maximum.accumulate(tensor, axis=axis) - tensor
        worst = max(worst, float(drop.max()))
        if drop.max() > tol:
            at = _first_index(drop > tol)
            return AxiomCheck(
                axiom="monotone",
                passed=False,
                witness=tuple(float(xs[k]) for k in at),
                deviation=float(drop.max()),
            )
    return AxiomCheck(axiom="monotone", passed=True, deviation=worst)


def _continuity_check(tensor: np.ndarray, xs: np.ndarray) -> AxiomCheck:
    bound = 10.0 / len(xs)
    worst = 0.0
    for axis in range(tensor.ndim):
        jump = np.abs(np.diff(tensor, axis=axis))
        worst = max(worst, float(jump.max()))
        if jump.max() > bound:
            at = _first_index(jump > bound)
            return AxiomCheck(
                axiom="continuity",
                passed=False,
                witness=tuple(float(xs[k]) for k in at),
                deviation=float(jump.max()),
                note=f"adjacent-cell jump bound {bound:g}",
            )
    return AxiomCheck(
        axiom="continuity",
        passed=True,
        deviation=worst,
        note=f"adjacent-cell jump bound {bound:g}",
    )


def _zero_slices_exact(tensor: np.ndarray, xs: np.ndarray) -> AxiomCheck:
    # "if" direction of GO2/O2: a zero coordinate must force value exactly 0.
    for axis in range(tensor.ndim):
        sl = np.take(tensor, 0, axis=axis)
        if np.any(sl != 0.0):
            flat = np.argwhere(sl != 0.0)[0]
            rest = [float(xs[int(k)]) for k in flat]
            point = rest[:axis] + [0.0] + rest[axis:]
            return AxiomCheck(
                axiom="zero_if",
                passed=False,
                witness=tuple(point),
                deviation=float(np.abs(sl).max()),
            )
    return AxiomCheck(axiom="zero_if", passed=True)


def _converse_scan(go: FusionFunction, config: CheckConfig, direction: str):
    """GO2a/GO3a witness search. Returns (no_counterexample, witness|None)."""
    xs = _axis_grid(config, go.arity)
    tensor = _tensor(go, xs)
    tol = config.eq_tol
    if direction == "zero":
        positive = xs > 0.0
        mask = tensor <= tol
        for axis in range(tensor.ndim):
            shape = [1] * tensor.ndim
            shape[axis] = len(xs)
            mask &= positive.reshape(shape)
    else:
        below_one = xs < 1.0
        mask = tensor >= 1.0 - tol
        any_below = np.zeros(tensor.shape, dtype=bool)
        for axis in range(tensor.ndim):
            shape = [1] * tensor.ndim
            shape[axis] = len(xs)
            any_below |= below_one.reshape(shape)
        mask &= any_below
    if np.any(mask):
        at = _first_index(mask)
        return False, tuple(float(xs[k]) for k in at)
    return True, None


def _grouping_converse_scan(g: FusionFunction, config: CheckConfig, direction: str):
    """Mirror converses for groupings: 0 only at (0,..,0); 1 needs a 1."""
    xs = _axis_grid(config, g.arity)
    tensor = _tensor(g, xs)
    tol = config.eq_tol
    if direction == "zero":
        some_positive = np.zeros(tensor.shape, dtype=bool)
        positive = xs > 0.0
        for axis in range(tensor.ndim):
            shape = [1] * tensor.ndim
            shape[axis] = len(xs)
            some_positive |= positive.reshape(shape)
        mask = (tensor <= tol) & some_positive
    else:
        below_one = xs < 1.0
        mask = tensor >= 1.0 - tol
        for axis in range(tensor.ndim):
            shape = [1] * tensor.ndim
            shape[axis] = len(xs)
            mask &= below_one.reshape(shape)
    if np.any(mask):
        at = _first_index(mask)
        return False, tuple(float(xs[k]) for k in at)
    return True, None


_NO_CE = "no counterexample found on grid"


def check_axioms(f: FusionFunction, axiom_set: str, config: CheckConfig = DEFAULT_CONFIG) -> AxiomReport:
    """Verify one of the axiom sets O, G, GO, or T on the grid.

    O/G/T demand a binary function; GO accepts any arity. The report's
    aggregate verdict ignores the informational GO2a/GO3a entries.
    """
    if axiom_set in ("O", "G", "T") and f.arity != 2:
        raise PreconditionError(f"axiom set {axiom_set} applies to binary functions")
    if axiom_set == "O":
        checks = _check_overlap_axioms(f, config)
    elif axiom_set == "G":
        checks = _check_grouping_axioms(f, config)
    elif axiom_set == "GO":
        checks = _check_general_overlap_axioms(f, config)
    elif axiom_set == "T":
        checks = _check_tnorm_axioms(f, config)
    else:
        raise PreconditionError(f"unknown axiom set {axiom_set!r} (want O|G|GO|T)")
    return AxiomReport(label=f.label, axiom_set=axiom_set, checks=tuple(checks))


def _check_overlap_axioms(f: FusionFunction, config: CheckConfig) -> list[AxiomCheck]:
    xs = _axis_grid(config, 2)
    tensor = _tensor(f, xs)
    tol = config.eq_tol
    checks = [replace(_symmetry_check(tensor, xs, tol), axiom="O1")]

    bad = _boundary_lines_exact(f, config, value=0.0)
    if bad is None:
        only_if = (tensor <= tol) & np.outer(xs > 0.0, xs > 0.0)
        if np.any(only_if):
            i, j = _first_index(only_if)
            checks.append(
                AxiomCheck(
                    axiom="O2",
                    passed=False,
                    witness=(float(xs[i]), float(xs[j])),
                    deviation=float(tensor[i, j]),
                    note="zero at nonzero arguments",
                )
            )
        else:
            checks.append(AxiomCheck(axiom="O2", passed=True, note=_NO_CE))
    else:
        checks.append(AxiomCheck(axiom="O2", passed=False, witness=bad[0], deviation=bad[1]))

    one_exact = float(f(1.0, 1.0)) == 1.0
    if one_exact:
        off_corner = tensor >= 1.0 - tol
        off_corner[-1, -1] = False
        if np.any(off_corner):
            i, j = _first_index(off_corner)
            checks.append(
                AxiomCheck(
                    axiom="O3",
                    passed=False,
                    witness=(float(xs[i]), float(xs[j])),
                    deviation=float(tensor[i, j]),
                    note="reaches 1 away from (1,1)",
                )
            )
        else:
            checks.append(AxiomCheck(axiom="O3", passed=True, note=_NO_CE))
    else:
        checks.append(
            AxiomCheck(axiom="O3", passed=False, witness=(1.0, 1.0), deviation=abs(float(f(1.0, 1.0)) - 1.0))
        )

    checks.append(replace(_monotone_check(tensor, xs, tol), axiom="O4"))
    checks.append(replace(_continuity_check(tensor, xs), axiom="O5"))
    return checks


def _check_grouping_axioms(f: FusionFunction, config: CheckConfig) -> list[AxiomCheck]:
    xs = _axis_grid(config, 2)
    tensor = _tensor(f, xs)
    tol = config.eq_tol
    checks = [replace(_symmetry_check(tensor, xs, tol), axiom="G1")]

    if float(f(0.0, 0.0)) == 0.0:
        only_if = tensor <= tol
        only_if[0, 0] = False
        if np.any(only_if):
            i, j = _first_index(only_if)
            checks.append(
                AxiomCheck(
                    axiom="G2",
                    passed=False,
                    witness=(float(xs[i]), float(xs[j])),
                    deviation=float(tensor[i, j]),
                    note="zero away from (0,0)",
                )
            )
        else:
            checks.append(AxiomCheck(axiom="G2", passed=True, note=_NO_CE))
    else:
        checks.append(AxiomCheck(axiom="G2", passed=False, witness=(0.0, 0.0), deviation=float(f(0.0, 0.0))))

    bad = _boundary_lines_exact(f, config, value=1.0)
    if bad is None:
        only_if = (tensor >= 1.0 - tol) & np.outer(xs < 1.0, xs < 1.0)
        if np.any(only_if):
            i, j = _first_index(only_if)
            checks.append(
                AxiomCheck(
                    axiom="G3",
                    passed=False,
                    witness=(float(xs[i]), float(xs[j])),
                    deviation=float(tensor[i, j]),
                    note="reaches 1 without a 1 argument",
                )
            )
        else:
            checks.append(AxiomCheck(axiom="G3", passed=True, note=_NO_CE))
    else:
        checks.append(AxiomCheck(axiom="G3", passed=False, witness=bad[0], deviation=bad[1]))

    checks.append(replace(_monotone_check(tensor, xs, tol), axiom="G4"))
    checks.append(replace(_continuity_check(tensor, xs), axiom="G5"))
    return checks


def _check_general_overlap_axioms(f: FusionFunction, config: CheckConfig) -> list[AxiomCheck]:
    xs = _axis_grid(config, f.arity)
    tensor = _tensor(f, xs)
    tol = config.eq_tol
    checks = [replace(_symmetry_check(tensor, xs, tol), axiom="GO1")]
    checks.append(replace(_zero_slices_exact(tensor, xs), axiom="GO2"))

    corner = float(f(*([1.0] * f.arity)))
    checks.append(
        AxiomCheck(
            axiom="GO3",
            passed=corner == 1.0,
            witness=None if corner == 1.0 else tuple([1.0] * f.arity),
            deviation=abs(corner - 1.0),
        )
    )
    checks.append(replace(_monotone_check(tensor, xs, tol), axiom="GO4"))
    checks.append(replace(_continuity_check(tensor, xs), axiom="GO5"))

    ok2a, w2a = _converse_scan(f, config, direction="zero")
    checks.append(
        AxiomCheck(
            axiom="GO2a",
            passed=ok2a,
            witness=w2a,
            note=_NO_CE if ok2a else "zero at all-nonzero arguments",
            informational=True,
        )
    )
    ok3a, w3a = _converse_scan(f, config, direction="one")
    checks.append(
        AxiomCheck(
            axiom="GO3a",
            passed=ok3a,
            witness=w3a,
            note=_NO_CE if ok3a else "reaches 1 below the all-ones corner",
            informational=True,
        )
    )
    return checks


def _check_tnorm_axioms(f: FusionFunction, config: CheckConfig) -> list[AxiomCheck]:
    xs = _axis_grid(config, 2)
    tensor = _tensor(f, xs)
    tol = config.eq_tol
    checks = [replace(_symmetry_check(tensor, xs, tol), axiom="T1")]
    checks.append(replace(check_associativity(f, config), axiom="T2"))

    samples = sorted_samples(config)
    worst, at = 0.0, None
    for x in samples:
        dev = abs(float(f(x, 1.0)) - float(x))
        if dev > worst:
            worst, at = dev, float(x)
    checks.append(
        AxiomCheck(
            axiom="T3",
            passed=worst <= tol,
            witness=None if worst <= tol else (at, 1.0),
            deviation=worst,
            note="neutral element 1",
        )
    )
    return checks


def _boundary_lines_exact(f: FusionFunction, config: CheckConfig, value: float):
    """Exact boundary sweep: f(anchor, s) and f(s, anchor) == value for all s.

    anchor is 0 when value == 0 (overlap zero line) and 1 when value == 1
    (grouping one line). Returns None on success, else (witness, deviation).
    """
    anchor = 0.0 if value == 0.0 else 1.0
    for s in sorted_samples(config):
        for point in ((anchor, float(s)), (float(s), anchor)):
            got = float(f(*point))
            if got != value:
                return point, abs(got - value)
    return None


def check_associativity(f: FusionFunction, config: CheckConfig = DEFAULT_CONFIG) -> AxiomCheck:
    """Grid check of f(f(x,y),z) = f(x,f(y,z)) on a reduced triple grid."""
    if f.arity != 2:
        raise PreconditionError("associativity applies to binary functions")
    xs = np.linspace(0.0, 1.0, 21)
    tol = config.eq_tol
    worst, at = 0.0, None
    for x in xs:
        for y in xs:
            left_inner = float(f(x, y))
            for z in xs:
                left = float(f(left_inner, z))
                right = float(f(x, float(f(y, z))))
                dev = abs(left - right)
                if dev > worst:
                    worst, at = dev, (float(x), float(y), float(z))
                    if worst > tol:
                        return AxiomCheck(
                            axiom="associativity", passed=False, witness=at, deviation=worst
                        )
    return AxiomCheck(axiom="associativity", passed=True, deviation=worst)


def continuity_heuristic(f: FusionFunction, config: CheckConfig = DEFAULT_CONFIG) -> AxiomCheck:
    """Standalone adjacent-jump continuity check (used for aggregations)."""
    xs = _axis_grid(config, f.arity)
    return _continuity_check(_tensor(f, xs), xs)


# ---------------------------------------------------------------------------
# Neutral element and idempotency
# ---------------------------------------------------------------------------


def find_neutral(f: FusionFunction, config: CheckConfig = DEFAULT_CONFIG) -> Optional[UnitValue]:
    """Search for a with f(x, a) = x for all sampled x.

    Grid candidates must match within eq_tol. If none does, the scan falls
    back on bisecting a sign change of a -> f(0.5, a) - 0.5; a candidate
    found that way carries bisection error, so it is verified at the looser
    10*bisect_tol before being accepted. Returns None when nothing survives.
    """
    if f.arity != 2:
        raise PreconditionError("find_neutral applies to binary functions")
    samples = sorted_samples(config)
    grid = uniform_grid(config)
    tol = config.eq_tol

    def deviates(a: float, budget: float) -> bool:
        return any(abs(float(f(x, a)) - float(x)) > budget for x in samples)

    for a in grid:
        if not deviates(float(a), tol):
            return UnitValue(float(a))

    gap = [float(f(0.5, float(a))) - 0.5 for a in grid]
    for i in range(len(grid) - 1):
        if gap[i] == 0.0 or gap[i] * gap[i + 1] >= 0.0:
            continue
        lo, hi = float(grid[i]), float(grid[i + 1])
        lo_val = gap[i]
        for _ in range(iteration_count(config.bisect_tol)):
            mid = 0.5 * (lo + hi)
            mid_val = float(f(0.5, mid)) - 0.5
            if mid_val == 0.0:
                lo = hi = mid
                break
            if (mid_val < 0.0) == (lo_val < 0.0):
                lo, lo_val = mid, mid_val
            else:
                hi = mid
        candidate = 0.5 * (lo + hi)
        if not deviates(candidate, 10.0 * config.bisect_tol):
            return UnitValue(candidate)
    return None


def check_idempotent(f: FusionFunction, config: CheckConfig = DEFAULT_CONFIG) -> IdempotencyResult:
    """Diagonal identity f(x,...,x) = x within eq_tol over all samples."""
    worst, at = 0.0, None
    for x in sorted_samples(config):
        dev = abs(float(f(*([float(x)] * f.arity))) - float(x))
        if dev > worst:
            worst, at = dev, float(x)
    ok = worst <= config.eq_tol
    return IdempotencyResult(ok=ok, witness=None if ok else at, deviation=worst)
