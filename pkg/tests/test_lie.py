"""Weight-lambda action of the translated symmetry algebra."""

import random
from fractions import Fraction

import pytest

from jsbo.domains import DESK_DOMAINS, DomainSpec
from jsbo.lie import (
    DEFAULT_CONVENTION,
    ActionConvention,
    CalibrationError,
    bracket,
    bracket_defect,
    calibrate,
    dpi_apply,
    kay,
    lie_add,
    lie_scale,
    minus,
    plus,
)
from jsbo.param import ParamScalar
from jsbo.poly import MultiPoly


def test_rank_one_module_structure():
    # the classical lowest-weight picture on one variable:
    #   translations lower the degree, the compact torus reads off
    #   lam + 2n, and the raising direction multiplies by -(lam+n) x
    dom = DomainSpec.parse("SYM(1)")
    e = {(1, 1): Fraction(1)}
    lam = Fraction(7, 2)
    x = MultiPoly.var(("x", 1, 1))
    for n in range(4):
        f = x ** n
        down = dpi_apply(dom, "x", lam, plus(e), f)
        want = x ** (n - 1) * (-n) if n else MultiPoly()
        assert (down - want).is_zero()
        torus = dpi_apply(dom, "x", lam, kay(e, e), f)
        assert (torus - f * (lam + 2 * n)).is_zero()
        up = dpi_apply(dom, "x", lam, minus(e), f)
        assert (up - x ** (n + 1) * (-(lam + n))).is_zero()


def test_symbolic_weight_character():
    dom = DomainSpec.parse("SYM(1)")
    e = {(1, 1): Fraction(1)}
    lam = ParamScalar.linear(0)
    got = dpi_apply(dom, "x", lam, kay(e, e), MultiPoly.const(1))
    # one symbolic coefficient, equal to nu itself
    ((key, coeff),) = list(got.terms.items())
    assert key == ()
    assert coeff.evaluate({"nu": Fraction(4)}) == 4


@pytest.mark.parametrize("name", DESK_DOMAINS)
def test_calibration_unique(name):
    dom = DomainSpec.parse(name)
    conv = calibrate(dom)
    assert conv.as_tuple() == DEFAULT_CONVENTION.as_tuple()


def test_bracket_relations_degree_three():
    rng = random.Random(123)
    lam = Fraction(5, 3)
    for name in ("SYM(2)", "QUADRIC(3)"):
        dom = DomainSpec.parse(name)
        coords = dom.free_coords()
        v0 = MultiPoly.var(("x",) + coords[0])
        v1 = MultiPoly.var(("x",) + coords[-1])
        monos = [MultiPoly.const(1), v0, v0 * v1, v0 * v0 * v1]
        pts = [dom.rand_point(rng) for _ in range(4)]
        b, bp, a, c = pts
        pairs = [
            (plus(b), plus(bp)),
            (minus(b), minus(bp)),
            (plus(b), minus(bp)),
            (kay(a, b), plus(c)),
            (kay(a, b), minus(c)),
            (kay(a, b), kay(c, bp)),
        ]
        for x_elem, y_elem in pairs:
            for f in monos:
                assert bracket_defect(dom, "x", lam, x_elem, y_elem, f).is_zero(), \
                    (name, x_elem, y_elem)


def test_lie_element_arithmetic():
    dom = DomainSpec.parse("SYM(1)")
    e = {(1, 1): Fraction(1)}
    lam = Fraction(2)
    f = MultiPoly.var(("x", 1, 1)) ** 2
    two = lie_add(plus(e), plus(e))
    got = dpi_apply(dom, "x", lam, two, f)
    one = dpi_apply(dom, "x", lam, plus(e), f)
    assert (got - one * 2).is_zero()
    half = lie_scale(plus(e), Fraction(1, 2))
    got = dpi_apply(dom, "x", lam, half, f)
    assert (got - one * Fraction(1, 2)).is_zero()
    # [plus, minus] lands in the structure piece
    br = bracket(dom, plus(e), minus(e))
    kinds = {atom[0] for _, atom in br}
    assert kinds == {"kay"}


def test_wrong_convention_fails_brackets():
    dom = DomainSpec.parse("SYM(1)")
    e = {(1, 1): Fraction(1)}
    wrong = ActionConvention(-1, 1, 1, 1, -1)
    f = MultiPoly.var(("x", 1, 1))
    defect = bracket_defect(dom, "x", Fraction(5, 3), kay(e, e), minus(e), f,
                            conv=wrong)
    assert not defect.is_zero()


def test_calibration_error_type():
    assert issubclass(CalibrationError, Exception)
