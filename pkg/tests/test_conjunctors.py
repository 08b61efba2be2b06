"""Table catalog, duality constructions, and the grid axiom engine."""

from __future__ import annotations

import warnings

import pytest

import overlapkit as ok

from conftest import BINARY_ENTRIES, CATALOG_ENTRIES

ROLE_TO_SET = {
    "overlap": "O",
    "grouping": "G",
    "general_overlap": "GO",
    "t_norm": "T",
}


# --- catalog values ---------------------------------------------------------


def test_go_max_value():
    go = ok.catalog("GO_max")
    assert abs(float(go(0.8, 0.9)) - 0.45) <= 1e-12
    assert float(go(0.5, 0.5)) == 0.0


def test_o_p_value():
    f = ok.catalog("O_P", p=2)
    assert abs(float(f(0.5, 0.5)) - 0.0625) <= 1e-12


def test_o_min_neutral_line():
    f = ok.catalog("O_min")
    for x in ok.sample_grid():
        assert float(f(x, 1.0)) == float(x)


def test_o_mm_formula():
    f = ok.catalog("O_mM")
    # min(x,y) * max(x^2, y^2)
    assert abs(float(f(0.5, 0.8)) - 0.5 * 0.64) <= 1e-12


def test_o_db_formula():
    f = ok.catalog("O_DB")
    assert float(f(0.0, 0.0)) == 0.0
    assert abs(float(f(0.5, 0.25)) - 2 * 0.5 * 0.25 / 0.75) <= 1e-12


def test_o_v_branches():
    f = ok.catalog("O_V")
    # both above 1/2: (1 + (2x-1)^2 (2y-1)^2) / 2
    assert abs(float(f(0.75, 0.75)) - (1 + 0.25 * 0.25) / 2) <= 1e-12
    # otherwise min
    assert float(f(0.3, 0.8)) == 0.3


def test_go_tl_formula():
    f = ok.catalog("GO_TL", p=2)
    assert abs(float(f(0.8, 0.9)) - 0.64 * 0.7) <= 1e-12
    assert float(f(0.3, 0.4)) == 0.0


def test_go_pn_gate():
    f = ok.catalog("GO_PN", n=3)
    assert float(f(0.2, 0.3, 0.4)) == 0.0
    assert abs(float(f(0.5, 0.6, 0.7)) - 0.5 * 0.6 * 0.7 * 0.5) <= 1e-12


def test_go_gn_gate():
    f = ok.catalog("GO_GN", n=3)
    assert float(f(0.2, 0.3, 0.4)) == 0.0
    expected = (0.5 * 0.6 * 0.7) ** (1 / 3) * 0.5
    assert abs(float(f(0.5, 0.6, 0.7)) - expected) <= 1e-12


def test_gate_sum_is_order_independent():
    # arguments straddling the sum threshold must not break symmetry
    f = ok.catalog("GO_PN", n=3)
    pts = (0.05, 0.1, 0.85)
    vals = {float(f(*perm)) for perm in (
        pts, (0.1, 0.05, 0.85), (0.05, 0.85, 0.1), (0.85, 0.1, 0.05))}
    assert len(vals) == 1


def test_catalog_errors():
    with pytest.raises(ok.PreconditionError):
        ok.catalog("O_unknown")
    with pytest.raises(ok.PreconditionError):
        ok.catalog("O_P")
    with pytest.raises(ok.PreconditionError):
        ok.catalog("O_P", p=-1)
    with pytest.raises(ok.PreconditionError):
        ok.catalog("GO_PN")
    with pytest.raises(ok.PreconditionError):
        ok.catalog("O_min", p=2)


# --- constructions ----------------------------------------------------------


def test_truncate_overlap_zero_band(coarse):
    trunc = ok.truncate_overlap(ok.catalog("O_P", p=1), 0.5)
    for y in ok.sample_grid(coarse):
        if y <= 0.5:
            assert float(trunc(0.5, y)) == 0.0
    assert float(trunc(0.0, 0.7)) == 0.0
    assert float(trunc(1.0, 1.0)) == 1.0
    assert trunc.role == "general_overlap"


def test_truncate_overlap_breaks_o2(coarse):
    trunc = ok.truncate_overlap(ok.catalog("O_P", p=1), 0.5)
    rep = ok.check_axioms(trunc, "GO", coarse)
    assert rep.passed
    assert not ok.check_axioms(trunc, "O", coarse).check("O2").passed


def test_truncate_overlap_param_range():
    with pytest.raises(ok.PreconditionError):
        ok.truncate_overlap(ok.catalog("O_P", p=1), 0.0)
    with pytest.raises(ok.PreconditionError):
        ok.truncate_overlap(ok.catalog("O_P", p=1), 1.0)


def test_grouping_from_product():
    g = ok.grouping_from(ok.catalog("O_P", p=1), ok.make_standard())
    assert abs(float(g(0.5, 0.5)) - 0.75) <= 1e-12
    assert float(g(0.0, 0.0)) == 0.0
    for y in ok.sample_grid():
        assert float(g(1.0, y)) == 1.0
    assert g.role == "grouping"


def test_grouping_from_requires_strict():
    with pytest.raises(ok.PreconditionError):
        ok.grouping_from(ok.catalog("O_min"), ok.make_crisp("upper", 0.5))


def test_grouping_from_downgrades_without_converses():
    # GO_max hits zero at nonzero arguments, so the dual loses the grouping claim
    with pytest.warns(UserWarning):
        g = ok.grouping_from(ok.catalog("GO_max"), ok.make_standard())
    assert g.role == "aggregation"


def test_overlap_from_max_is_min():
    o = ok.overlap_from(ok.grouping_max(), ok.make_standard())
    assert float(o(0.3, 0.8)) == pytest.approx(0.3, abs=1e-12)
    assert float(o(1.0, 1.0)) == 1.0


def test_overlap_from_probsum_is_product(coarse):
    o = ok.overlap_from(ok.grouping_probsum(), ok.make_standard())
    for x in ok.sample_grid(coarse):
        for y in ok.sample_grid(coarse):
            assert abs(float(o(x, y)) - x * y) <= 1e-9


def test_piecewise_neutral_values():
    f = ok.piecewise_neutral_go(0.5)
    assert float(f(0.3, 0.5)) == pytest.approx(0.3, abs=1e-12)
    assert float(f(0.7, 0.8)) == pytest.approx(0.8, abs=1e-12)
    assert float(f(0.3, 0.8)) == pytest.approx(0.48, abs=1e-12)


def test_piecewise_neutral_param_range():
    with pytest.raises(ok.PreconditionError):
        ok.piecewise_neutral_go(0.0)
    with pytest.raises(ok.PreconditionError):
        ok.piecewise_neutral_go(1.2)


def test_idempotent_go_diagonal():
    f = ok.idempotent_go(1, 2)
    for x in ok.sample_grid():
        assert abs(float(f(x, x)) - x) <= 1e-12
    assert float(f(1.0, 1.0)) == 1.0
    assert float(f(0.5, 0.0)) == 0.0


def test_idempotent_go_param_range():
    with pytest.raises(ok.PreconditionError):
        ok.idempotent_go(0, 1)
    with pytest.raises(ok.PreconditionError):
        ok.idempotent_go(1, -1)


def test_idempotent_go_axioms_at_coarse_grid(coarse):
    rep = ok.check_axioms(ok.idempotent_go(1, 2), "GO", coarse)
    assert rep.passed


def test_idempotent_go_steep_wall_hits_jump_bound():
    # ((x y^2 + x^2 y)/2)^(1/3) is continuous but has a cube-root wall at
    # x = 0; at the default resolution its first grid step slightly exceeds
    # the 10/resolution jump bound, so only the continuity heuristic trips.
    rep = ok.check_axioms(ok.idempotent_go(1, 2), "GO")
    failed = [c.axiom for c in rep.checks if not c.passed and not c.informational]
    assert failed == ["GO5"]


# --- axiom engine -----------------------------------------------------------


def test_every_catalog_entry_passes_claimed_set():
    for name, params in CATALOG_ENTRIES:
        f = ok.catalog(name, **params)
        rep = ok.check_axioms(f, ROLE_TO_SET[f.role])
        assert rep.passed, f"{f.label}: {rep.summary()}"


def test_go_max_fails_o2_with_witness():
    rep = ok.check_axioms(ok.catalog("GO_max"), "O")
    o2 = rep.check("O2")
    assert not o2.passed
    assert o2.witness is not None
    x, y = o2.witness
    assert x > 0 and y > 0
    assert float(ok.catalog("GO_max")(x, y)) == 0.0


def test_go_tl_fails_o2_with_witness():
    rep = ok.check_axioms(ok.catalog("GO_TL", p=2), "O")
    assert not rep.check("O2").passed


def test_o_min_is_t_norm():
    assert ok.check_axioms(ok.catalog("O_min"), "T").passed


def test_product_is_t_norm():
    assert ok.check_axioms(ok.catalog("O_P", p=1), "T").passed


def test_o_p2_is_not_t_norm():
    rep = ok.check_axioms(ok.catalog("O_P", p=2), "T")
    assert not rep.passed


def test_go_pn_binary_seam_is_visible_at_fine_grid():
    # at arity 2 the default grid is fine enough to expose the genuine
    # discontinuity along x + y = 1; only GO5 fails
    rep = ok.check_axioms(ok.catalog("GO_PN", n=2), "GO")
    failed = [c.axiom for c in rep.checks if not c.passed and not c.informational]
    assert failed == ["GO5"]


def test_axiom_set_arity_mismatch():
    with pytest.raises(ok.PreconditionError):
        ok.check_axioms(ok.catalog("GO_PN", n=3), "O")


def test_fail_entries_carry_witness():
    rep = ok.check_axioms(ok.catalog("GO_max"), "O")
    for c in rep.checks:
        if not c.passed:
            assert c.witness is not None


def test_max_grouping_passes_g_set():
    assert ok.check_axioms(ok.grouping_max(), "G").passed
    assert ok.check_axioms(ok.grouping_probsum(), "G").passed


def test_report_serialization():
    rep = ok.check_axioms(ok.catalog("O_min"), "O")
    d = rep.as_dict()
    assert d["label"] == "O_min"
    assert d["passed"] is True
    assert {c["axiom"] for c in d["checks"]} >= {"O1", "O2", "O3", "O4", "O5"}


# --- neutral elements and idempotency ---------------------------------------


def test_find_neutral_examples():
    assert ok.find_neutral(ok.catalog("O_min")) == pytest.approx(1.0, abs=1e-9)
    assert ok.find_neutral(ok.catalog("O_mM")) == pytest.approx(1.0, abs=1e-9)
    assert ok.find_neutral(ok.catalog("GO_max")) is None
    assert ok.find_neutral(ok.catalog("O_V")) is None
    assert ok.find_neutral(ok.catalog("O_DB")) is None
    assert ok.find_neutral(ok.piecewise_neutral_go(0.5)) == pytest.approx(0.5, abs=1e-9)
    assert ok.find_neutral(ok.piecewise_neutral_go(0.3)) == pytest.approx(0.3, abs=1e-9)


def test_check_idempotent_examples():
    assert bool(ok.check_idempotent(ok.catalog("O_min")))
    sq = ok.catalog("O_P", p=2)
    res = ok.check_idempotent(sq)
    assert not bool(res)
    # x = 0.5 is a counterexample (0.0625 != 0.5); the returned witness is
    # the worst sampled point, so its deviation is at least that large
    assert abs(float(sq(0.5, 0.5)) - 0.0625) <= 1e-12
    assert res.deviation >= 0.4375 - 1e-9
    assert abs(float(sq(res.witness, res.witness)) - res.witness) == pytest.approx(
        res.deviation, abs=1e-12
    )
    assert bool(ok.check_idempotent(ok.idempotent_go(1, 2)))
    assert bool(ok.check_idempotent(ok.idempotent_go(0.5, 3)))


def test_check_associativity():
    assert ok.check_associativity(ok.catalog("O_min")).passed
    assert ok.check_associativity(ok.catalog("O_P", p=1)).passed
    for name, params in (("GO_max", {}), ("O_P", {"p": 2}), ("O_mM", {})):
        chk = ok.check_associativity(ok.catalog(name, **params))
        assert not chk.passed
        assert chk.witness is not None


def test_continuity_heuristic():
    assert ok.continuity_heuristic(ok.catalog("O_min")).passed
    step = ok.FusionFunction(
        fn=lambda x, y: 1.0 if x > 0.5 else 0.0,
        arity=2,
        role="aggregation",
        label="step",
    )
    assert not ok.continuity_heuristic(step).passed


# --- module invariants ------------------------------------------------------


def test_duality_roundtrip_on_overlaps(overlap_catalog):
    nz = ok.make_standard()
    for f in overlap_catalog:
        back = ok.overlap_from(ok.grouping_from(f, nz), nz)
        assert ok.compare(f, back).deviation <= 1e-9, f.label


def test_grouping_of_o_min_under_nonstrong_has_no_neutral():
    g = ok.grouping_from(ok.catalog("O_min"), ok.make_power_strict(2))
    assert ok.find_neutral(g) is None


def test_neutral_one_biconditional(binary_catalog):
    for f in binary_catalog:
        rep = ok.check_axioms(f, "GO")
        go3a = rep.check("GO3a").passed
        neutral = ok.find_neutral(f)
        neutral_is_one = neutral is not None and abs(neutral - 1.0) <= 1e-9
        assert neutral_is_one == (go3a and neutral is not None), f.label


def test_minimum_characterization():
    for f in (ok.catalog("O_min"), ok.idempotent_go(1, 2)):
        neutral = ok.find_neutral(f)
        idem = bool(ok.check_idempotent(f))
        if neutral is not None and abs(neutral - 1.0) <= 1e-9 and idem:
            assert ok.compare(f, ok.catalog("O_min")).deviation <= 1e-9
