"""Factored parameter scalars, Pochhammer products, rational functions."""

from fractions import Fraction

import pytest

from jsbo.param import (
    DIVERGES,
    VANISHES,
    ParamScalar,
    PFrac,
    fraction_str,
    param_limit,
    parse_fraction,
    pochhammer,
)


def test_pochhammer_single_row():
    # (nu)_3 at nu=2 is 2*3*4
    ps = pochhammer([0], (3,), 1)
    assert ps.evaluate({"nu": Fraction(2)}) == 24
    # shifted base (nu+5)_2 at nu=0 is 5*6
    ps = pochhammer([5], (2,), 1)
    assert ps.evaluate({"nu": Fraction(0)}) == 30


def test_pochhammer_row_offsets():
    # two rows with multiplicity d=1: (nu)_2 (nu-1/2)_1
    ps = pochhammer([0, 0], (2, 1), 1)
    nu = Fraction(3)
    assert ps.evaluate({"nu": nu}) == (nu * (nu + 1)) * (nu - Fraction(1, 2))
    # d=2 steps rows by 1
    ps = pochhammer([0, 0], (1, 1), 2)
    assert ps.evaluate({"nu": nu}) == nu * (nu - 1)
    # d=4, three rows
    ps = pochhammer([0, 0, 0], (1, 1, 1), 4)
    assert ps.evaluate({"nu": nu}) == nu * (nu - 2) * (nu - 4)


def test_param_scalar_algebra():
    a = ParamScalar.linear(0)
    two = a + a
    assert isinstance(two, PFrac)
    assert two.evaluate({"nu": Fraction(5)}) == 10
    prod = a * a
    assert prod.evaluate({"nu": Fraction(3)}) == 9
    quot = prod / a
    assert quot.evaluate({"nu": Fraction(7)}) == 7
    assert (a ** 0).evaluate({"nu": Fraction(2)}) == 1


def test_vanishing_order_and_leading():
    nu = ParamScalar.linear(0)
    shifted = ParamScalar.linear(2)
    sq = nu * nu * shifted
    assert sq.vanishing_order(Fraction(0)) == 2
    assert sq.vanishing_order(Fraction(-2)) == 1
    assert sq.vanishing_order(Fraction(1)) == 0
    lead = sq.leading_at(Fraction(0))
    assert lead == Fraction(2)  # residual factor (nu+2) at nu=0


def test_param_limit_sentinels():
    nu = ParamScalar.linear(0)
    inv = ParamScalar.const(1) / nu
    assert param_limit(inv, Fraction(0), 0) is DIVERGES
    assert param_limit(nu, Fraction(0), 0) is VANISHES
    # order -1 divides by (nu - at) once, exposing the leading value
    assert param_limit(nu, Fraction(0), -1) == Fraction(1)
    assert param_limit(inv, Fraction(0), 1) == Fraction(1)
    assert param_limit(nu, Fraction(3), 0) == Fraction(3)
    assert param_limit(nu * nu, Fraction(0), -1) is VANISHES


def test_pfrac_algebra_and_limit():
    nu = PFrac.lift(ParamScalar.linear(0))
    one = PFrac.const(1)
    f = (nu + one) / nu
    g = (nu - one) / nu
    s = f + g  # 2*nu/nu = 2 after the common denominator
    assert s.evaluate({"nu": Fraction(5)}) == 2
    p = f * g
    assert p.evaluate({"nu": Fraction(2)}) == Fraction(3, 4)
    assert p.param_limit(Fraction(1), 0) is VANISHES
    assert p.param_limit(Fraction(1), -1) == 2  # simple zero with slope (1+1)/1^2
    assert p.param_limit(Fraction(0), 0) is DIVERGES
    assert p.param_limit(Fraction(0), 2) == -1
    assert (f - f).is_zero()


def test_scalar_json_round_trip():
    ps = pochhammer([1], (2,), 1) * ParamScalar.const(Fraction(3, 7))
    rt = ParamScalar.from_json(ps.to_json())
    assert rt == ps
    pf = PFrac.lift(ps) / PFrac.lift(pochhammer([0], (1,), 1))
    rt2 = PFrac.from_json(pf.to_json())
    assert (rt2 - pf).is_zero()


def test_fraction_parsing():
    assert parse_fraction("3/4") == Fraction(3, 4)
    assert parse_fraction("-2") == Fraction(-2)
    assert fraction_str(Fraction(-5, 3)) == "-5/3"
    assert fraction_str(Fraction(4)) == "4"
    with pytest.raises(ValueError):
        parse_fraction("x")
