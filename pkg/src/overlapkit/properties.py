"""Grid verification of implication properties and pointwise comparison.

Property ids:

* NP: I(1, y) = y (left neutrality).
* IP: I(x, x) = 1 (identity principle).
* LOP: x <= y implies I(x, y) = 1 (left-ordering).
* ROP: x > y implies I(x, y) != 1 (right-ordering, a strict inequality).
* IB: I(x, I(x, y)) = I(x, y) (iterative Boolean law).
* EP: I(x, I(y, z)) = I(y, I(x, z)) (exchange principle).
* EP1: I(x, I(y, z)) = 1 implies I(y, I(x, z)) = 1 (exchange at 1 only).
* CP / LCP / RCP: contraposition laws parameterized by a negation N,
  comparing I(x, y) with I(N(y), N(x)), I(N(x), y) with I(N(y), x), and
  I(x, N(y)) with I(y, N(x)) respectively.

All verdicts are grid verdicts: "holds_on_grid" never claims a proof.
Equality checks compare within eq_tol; ROP treats any value within eq_tol
of 1 as a violation, since the property demands strict distance from 1.
Failing scans stop at the lexicographically first witness so reports are
deterministic. Pairwise scans walk the uniform grid mesh plus seeded random
pairs; triple scans (EP/EP1) use a reduced 21-point mesh plus random
triples to stay at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .implications import Implication
from .negations import Negation
from .numerics import (
    DEFAULT_CONFIG,
    CheckConfig,
    PreconditionError,
    random_points,
    sorted_samples,
    uniform_grid,
)

UNARY_PROPERTIES = ("NP", "IP", "LOP", "ROP", "IB")
EP_VARIANTS = ("EP", "EP1")
CP_VARIANTS = ("CP", "LCP", "RCP")

EP_GRID_RESOLUTION = 21


@dataclass(frozen=True)
class PropertyWitness:
    """A failing point with both evaluated sides and their distance."""

    point: tuple
    lhs: float
    rhs: float
    deviation: float

    def as_dict(self) -> dict:
        return {
            "point": list(self.point),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "deviation": self.deviation,
        }


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one property scan over the sampled mesh."""

    property_id: str
    status: str
    witness: Optional[PropertyWitness]
    samples_checked: int
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.status == "holds_on_grid"

    def __bool__(self) -> bool:
        return self.holds

    def as_dict(self) -> dict:
        return {
            "property": self.property_id,
            "status": self.status,
            "witness": None if self.witness is None else self.witness.as_dict(),
            "samples_checked": self.samples_checked,
            "note": self.note,
        }

    def summary(self) -> str:
        head = f"{self.property_id:<5} {self.status}"
        if self.witness is None:
            return head
        w = self.witness
        point = ", ".join(f"{v:.9f}" for v in w.point)
        return f"{head} at ({point}) lhs={w.lhs:.9f} rhs={w.rhs:.9f}"


def _report(pid: str, witness, worst: float, count: int, note: str = "") -> PropertyReport:
    return PropertyReport(
        property_id=pid,
        status="fails" if witness is not None else "holds_on_grid",
        witness=witness,
        samples_checked=count,
        note=note,
    )


def pair_points(config: CheckConfig) -> Iterator[tuple[float, float]]:
    grid = uniform_grid(config)
    for x in grid:
        for y in grid:
            yield float(x), float(y)
    r = random_points(config)
    for k in range(0, len(r) - 1, 2):
        yield float(r[k]), float(r[k + 1])


def triple_points(config: CheckConfig) -> Iterator[tuple[float, float, float]]:
    grid = np.linspace(0.0, 1.0, EP_GRID_RESOLUTION)
    for x in grid:
        for y in grid:
            for z in grid:
                yield float(x), float(y), float(z)
    r = random_points(config)
    for k in range(0, len(r) - 2, 3):
        yield float(r[k]), float(r[k + 1]), float(r[k + 2])


def check_unary_property(
    implication: Implication, prop: str, config: CheckConfig = DEFAULT_CONFIG
) -> PropertyReport:
    """Check NP, IP, LOP, ROP, or IB for one implication."""
    if prop not in UNARY_PROPERTIES:
        raise PreconditionError(f"unknown property {prop!r} (want one of {UNARY_PROPERTIES})")
    tol = config.eq_tol
    worst, witness, count = 0.0, None, 0

    if prop == "NP":
        for y in sorted_samples(config):
            count += 1
            yv = float(y)
            lhs = float(implication(1.0, yv))
            dev = abs(lhs - yv)
            worst = max(worst, dev)
            if dev > tol:
                witness = PropertyWitness((1.0, yv), lhs, yv, dev)
                break
        return _report("NP", witness, worst, count)

    if prop == "IP":
        for x in sorted_samples(config):
            count += 1
            xv = float(x)
            lhs = float(implication(xv, xv))
            dev = 1.0 - lhs
            worst = max(worst, dev)
            if dev > tol:
                witness = PropertyWitness((xv, xv), lhs, 1.0, dev)
                break
        return _report("IP", witness, worst, count)

    if prop == "LOP":
        for x, y in pair_points(config):
            if x > y:
                continue
            count += 1
            lhs = float(implication(x, y))
            dev = 1.0 - lhs
            worst = max(worst, dev)
            if dev > tol:
                witness = PropertyWitness((x, y), lhs, 1.0, dev)
                break
        return _report("LOP", witness, worst, count)

    if prop == "ROP":
        for x, y in pair_points(config):
            if x <= y:
                continue
            count += 1
            lhs = float(implication(x, y))
            if lhs >= 1.0 - tol:
                witness = PropertyWitness((x, y), lhs, 1.0, 1.0 - lhs)
                break
        return _report(
            "ROP",
            witness,
            worst,
            count,
            note="strict bound: values within eq_tol of 1 violate ROP; "
            "witness deviation is the distance to 1",
        )

    for x, y in pair_points(config):
        count += 1
        inner = float(implication(x, y))
        lhs = float(implication(x, inner))
        dev = abs(lhs - inner)
        worst = max(worst, dev)
        if dev > tol:
            witness = PropertyWitness((x, y), lhs, inner, dev)
            break
    return _report("IB", witness, worst, count)


def check_ep(
    implication: Implication, variant: str = "EP", config: CheckConfig = DEFAULT_CONFIG
) -> PropertyReport:
    """Exchange principle over reduced-grid triples plus random triples.

    EP compares both nestings within eq_tol; EP1 only demands that hitting 1
    on one side forces 1 on the other. Scanning all ordered triples makes
    the one-directional EP1 test symmetric in practice.
    """
    if variant not in EP_VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r} (want EP or EP1)")
    tol = config.eq_tol
    worst, witness, count = 0.0, None, 0
    for x, y, z in triple_points(config):
        count += 1
        lhs = float(implication(x, float(implication(y, z))))
        rhs = float(implication(y, float(implication(x, z))))
        if variant == "EP":
            dev = abs(lhs - rhs)
            worst = max(worst, dev)
            if dev > tol:
                witness = PropertyWitness((x, y, z), lhs, rhs, dev)
                break
        else:
            if lhs >= 1.0 - tol and rhs < 1.0 - tol:
                witness = PropertyWitness((x, y, z), lhs, rhs, 1.0 - rhs)
                break
    note = "" if variant == "EP" else "one side at 1 must force the other to 1"
    return _report(variant, witness, worst, count, note=note)


def check_contraposition(
    implication: Implication,
    negation: Negation,
    variant: str = "CP",
    config: CheckConfig = DEFAULT_CONFIG,
    tol: Optional[float] = None,
) -> PropertyReport:
    """Contraposition laws CP, LCP, RCP with respect to a given negation.

    tol overrides eq_tol; pass a looser bound when the negation itself is a
    bisection-backed numeric inverse.
    """
    if variant not in CP_VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r} (want CP, LCP, or RCP)")
    budget = config.eq_tol if tol is None else float(tol)
    worst, witness, count = 0.0, None, 0
    for x, y in pair_points(config):
        count += 1
        if variant == "CP":
            lhs = float(implication(x, y))
            rhs = float(implication(float(negation(y)), float(negation(x))))
        elif variant == "LCP":
            lhs = float(implication(float(negation(x)), y))
            rhs = float(implication(float(negation(y)), x))
        else:
            lhs = float(implication(x, float(negation(y))))
            rhs = float(implication(y, float(negation(x))))
        dev = abs(lhs - rhs)
        worst = max(worst, dev)
        if dev > budget:
            witness = PropertyWitness((x, y), lhs, rhs, dev)
            break
    pid = {"CP": "CP", "LCP": "L-CP", "RCP": "R-CP"}[variant]
    return _report(pid, witness, worst, count, note=f"negation {negation.label}")


@dataclass(frozen=True)
class Comparison:
    """Sup distance between two implications over the sampled pairs."""

    deviation: float
    at: tuple[float, float]
    lhs: float
    rhs: float
    samples_checked: int

    def as_dict(self) -> dict:
        return {
            "deviation": self.deviation,
            "at": list(self.at),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "samples_checked": self.samples_checked,
        }


def compare(i1: Implication, i2: Implication, config: CheckConfig = DEFAULT_CONFIG) -> Comparison:
    """Max |i1 - i2| over the pair mesh with the maximizing point."""
    worst, at, wl, wr, count = -1.0, (0.0, 0.0), 0.0, 0.0, 0
    for x, y in pair_points(config):
        count += 1
        l = float(i1(x, y))
        r = float(i2(x, y))
        dev = abs(l - r)
        if dev > worst:
            worst, at, wl, wr = dev, (x, y), l, r
    return Comparison(deviation=worst, at=at, lhs=wl, rhs=wr, samples_checked=count)


def range_is_proper(implication: Implication, config: CheckConfig = DEFAULT_CONFIG) -> bool:
    """True when the sampled image leaves a gap wider than 2/grid_resolution.

    The image is taken over the full sample mesh (uniform grid plus random
    points in both coordinates); a uniform grid alone can overstate gaps for
    implications whose level sets are diagonal.
    """
    samples = [float(s) for s in sorted_samples(config)]
    values = sorted(
        float(implication(x, y)) for x in samples for y in samples
    )
    threshold = 2.0 / config.grid_resolution
    if values[0] - 0.0 > threshold or 1.0 - values[-1] > threshold:
        return True
    for a, b in zip(values, values[1:]):
        if b - a > threshold:
            return True
    return False
