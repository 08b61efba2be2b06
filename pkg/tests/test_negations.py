"""Negation constructors, the numeric classifier, and De Morgan duals."""

from __future__ import annotations

import pytest

import overlapkit as ok

from conftest import NEGATION_CATALOG


def test_standard_values():
    nz = ok.make_standard()
    assert nz(0.0) == 1.0
    assert nz(1.0) == 0.0
    assert abs(nz(0.3) - 0.7) <= 1e-12


def test_crisp_values():
    lower = ok.make_crisp("lower", 0.5)
    upper = ok.make_crisp("upper", 0.5)
    # lower: 1 while x <= alpha; upper: 0 once x >= alpha
    assert lower(0.5) == 1.0
    assert lower(0.5000001) == 0.0
    assert upper(0.5) == 0.0
    assert upper(0.4999999) == 1.0
    assert ok.make_top()(0.999) == 1.0
    assert ok.make_bottom()(0.0) == 1.0
    assert ok.make_bottom()(1e-12) == 0.0


@pytest.mark.parametrize(
    "kind, alpha",
    [("lower", 1.0), ("lower", -0.1), ("upper", 0.0), ("upper", 1.5), ("sideways", 0.5)],
)
def test_crisp_rejects_bad_params(kind, alpha):
    with pytest.raises((ok.PreconditionError, ok.UnitRangeError)):
        ok.make_crisp(kind, alpha)


def test_power_strict_values():
    n2 = ok.make_power_strict(2)
    assert abs(n2(0.9) - 0.19) <= 1e-12
    assert n2(0.0) == 1.0
    n1 = ok.make_power_strict(1)
    assert abs(n1(0.4) - 0.6) <= 1e-12


def test_power_strict_rejects_nonpositive():
    with pytest.raises(ok.PreconditionError):
        ok.make_power_strict(0)
    with pytest.raises(ok.PreconditionError):
        ok.make_power_strict(-2)


def test_classify_standard():
    cls = ok.classify(ok.make_standard())
    assert cls.is_negation
    assert cls.is_strict
    assert cls.is_strong
    assert cls.is_frontier
    assert not cls.is_crisp


def test_classify_crisp_upper():
    cls = ok.classify(ok.make_crisp("upper", 0.5))
    assert cls.is_negation
    assert cls.is_crisp
    assert not cls.is_strict
    assert not cls.is_frontier


def test_classify_power_two():
    cls = ok.classify(ok.make_power_strict(2))
    assert cls.is_strict
    assert not cls.is_strong
    # N(N(0.5)) = 1 - 0.75^2 = 0.4375, off by 0.0625
    assert cls.witness is not None
    n2 = ok.make_power_strict(2)
    assert abs(float(n2(n2(0.5))) - 0.4375) <= 1e-12


def test_every_catalog_member_is_negation():
    for _, make in NEGATION_CATALOG:
        cls = ok.classify(make())
        assert cls.is_negation


def test_class_hierarchy():
    for _, make in NEGATION_CATALOG:
        cls = ok.classify(make())
        if cls.is_strong:
            assert cls.is_strict
        if cls.is_strict:
            assert cls.is_negation


def test_dual_product_is_probabilistic_sum():
    prod = ok.catalog("O_P", p=1)
    psum = ok.dual(prod, ok.make_standard())
    assert abs(float(psum(0.5, 0.5)) - 0.75) <= 1e-12
    assert abs(float(psum(0.3, 0.4)) - (1 - 0.7 * 0.6)) <= 1e-12


def test_dual_min_is_max():
    mx = ok.dual(ok.catalog("O_min"), ok.make_standard())
    assert float(mx(0.2, 0.7)) == 0.7


def test_dual_boundary():
    for name in ("O_min", "O_P"):
        f = ok.catalog(name, p=1) if name == "O_P" else ok.catalog(name)
        d = ok.dual(f, ok.make_standard())
        assert float(d(0.0, 0.0)) == 0.0


def test_dual_involution_for_strong(coarse):
    nz = ok.make_standard()
    for name, params in (("O_min", {}), ("GO_max", {}), ("O_P", {"p": 2})):
        f = ok.catalog(name, **params)
        back = ok.dual(ok.dual(f, nz), nz)
        for x in ok.sample_grid(coarse):
            for y in ok.sample_grid(coarse):
                assert abs(float(back(x, y)) - float(f(x, y))) <= 1e-9


def test_crisp_triple_composition_exact():
    for make in (lambda: ok.make_crisp("lower", 0.5), lambda: ok.make_crisp("upper", 0.5)):
        n = make()
        for x in ok.sample_grid():
            assert float(n(n(n(x)))) == float(n(x))


def test_inverse_negation_roundtrip():
    n2 = ok.make_power_strict(2)
    inv = ok.inverse_negation(n2)
    for y in (0.0, 0.19, 0.5, 1.0):
        assert abs(float(n2(inv(y))) - y) <= 1e-6


def test_inverse_negation_requires_strict():
    with pytest.raises(ok.PreconditionError):
        ok.inverse_negation(ok.make_crisp("upper", 0.5))
