"""Shared fixtures: catalog instances and reduced configs for slow scans."""

from __future__ import annotations

import pytest

import overlapkit as ok

# Canonical finite negation catalog used by every quantified sweep. The
# parametric families are pinned at the values the CLI instances use.
NEGATION_CATALOG = (
    ("zadeh", ok.make_standard),
    ("bottom", ok.make_bottom),
    ("top", ok.make_top),
    ("crisp_lower:0.5", lambda: ok.make_crisp("lower", 0.5)),
    ("crisp_upper:0.5", lambda: ok.make_crisp("upper", 0.5)),
    ("power:2", lambda: ok.make_power_strict(2)),
)

# All nine named table entries with their required parameters.
CATALOG_ENTRIES = (
    ("O_mM", {}),
    ("O_DB", {}),
    ("O_P", {"p": 2}),
    ("O_V", {}),
    ("O_min", {}),
    ("GO_max", {}),
    ("GO_TL", {"p": 2}),
    ("GO_PN", {"n": 3}),
    ("GO_GN", {"n": 3}),
)

BINARY_ENTRIES = tuple(e for e in CATALOG_ENTRIES if e[0] not in ("GO_PN", "GO_GN"))
OVERLAP_ENTRIES = tuple(e for e in BINARY_ENTRIES if not e[0].startswith("GO_"))


@pytest.fixture(scope="session")
def negations():
    return tuple(make() for _, make in NEGATION_CATALOG)


@pytest.fixture(scope="session")
def binary_catalog():
    return tuple(ok.catalog(name, **params) for name, params in BINARY_ENTRIES)


@pytest.fixture(scope="session")
def overlap_catalog():
    return tuple(ok.catalog(name, **params) for name, params in OVERLAP_ENTRIES)


@pytest.fixture(scope="session")
def coarse():
    # Enough resolution to see every catalog feature, fast enough for sweeps.
    return ok.CheckConfig(grid_resolution=21, random_samples=40)
