"""Generic-norm power expansions and the kernel-coefficient oracle.

The closed forms asserted here were derived once by hand from the
hypergeometric summation rules for rank 1 and 2 and then frozen; the
oracle route must keep reproducing them exactly.
"""

from fractions import Fraction as Fr

import pytest

from jsbo.domains import DomainSpec
from jsbo.expansions import (
    ExpansionMismatch,
    build_hat_kernel,
    coefficient_oracle,
    expand_h_power,
    generic_norm_poly,
    inv_power_series,
)
from jsbo.pairs import make_pair
from jsbo.param import ParamScalar, PFrac
from jsbo.poly import MultiPoly

V = MultiPoly.var


def _poch(base_shift, t, step=1):
    out = PFrac.const(1)
    for j in range(t):
        out = out * PFrac.lift(ParamScalar.linear(Fr(base_shift) + Fr(step) * j))
    return out


def _fact(t):
    out = 1
    for j in range(t):
        out *= j + 1
    return out


@pytest.mark.parametrize("label,deg", [
    ("SYM(2)", 4), ("MAT(2,2)", 3), ("QUADRIC(3)", 4), ("SKEW(4)", 3),
])
def test_dual_route_expansion(label, deg):
    dom = DomainSpec.parse(label)
    ser = expand_h_power(dom, deg)
    assert ser.trunc >= deg
    assert ser.terms  # at least the constant term
    # symbolic and rational specializations agree
    sym = ser.poly_symbolic()
    at = ser.poly_at(Fr(5, 3))
    ev = MultiPoly({k: (c.evaluate({"nu": Fr(5, 3)})
                        if isinstance(c, (PFrac, ParamScalar)) else c)
                    for k, c in sym.terms.items()})
    assert at == ev


def test_series_json_round_trip():
    dom = DomainSpec.parse("SYM(2)")
    ser = expand_h_power(dom, 3)
    data = ser.to_json()
    assert data["kind"] == "param_series"
    assert data["truncation"] == 3
    assert data["label"] == "SYM(2)"


def test_oracle_sp_u_rank_one():
    p = make_pair("sp-u", (1, 1))
    F = coefficient_oracle(p, None, MultiPoly.const(1), 4)
    c11, c22, w = V(("c", 1, 1)), V(("c", 2, 2)), V(("w", 1, 2))
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr(1, 4 ** t * _fact(t))) / _poch(Fr(1, 2), t)
        expect = expect + (c11 * c22) ** t * w ** (2 * t) * coeff
    assert F == expect


def test_oracle_sp_spsp_k2():
    p = make_pair("sp-spsp", (1, 1), k=2)
    F = coefficient_oracle(p, None, p.k_pre_poly(), 4)
    c, wa, wb = V(("c", 1, 2)), V(("w", 1, 1)), V(("w", 2, 2))
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr(1, _fact(t))) / _poch(2, t)
        expect = expect + c ** 2 * c ** (2 * t) * (wa * wb) ** t * coeff
    assert F == expect


def test_oracle_u_uu_k1():
    p = make_pair("u-uu", (1, 1, 1, 1), k=1)
    F = coefficient_oracle(p, None, p.k_pre_poly(), 4)
    cc, ee = V(("c", 1, 2)), V(("c", 2, 1))
    wa, wb = V(("w", 1, 1)), V(("w", 2, 2))
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr(1, _fact(t))) / _poch(1, t)
        expect = expect + cc * (cc * ee) ** t * (wa * wb) ** t * coeff
    assert F == expect


def test_oracle_su_sp_2():
    p = make_pair("su-sp", (2,))
    F = coefficient_oracle(p, None, MultiPoly.const(1), 4)
    c = V(("c", 1, 2))
    w11, w12, w22 = V(("w", 1, 1)), V(("w", 1, 2)), V(("w", 2, 2))
    det_w = w11 * w22 - w12 * w12
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr((-1) ** t, _fact(t))) / _poch(Fr(-1, 2), t)
        expect = expect + c ** (2 * t) * det_w ** t * coeff
    assert F == expect


def test_oracle_su_sost_2():
    p = make_pair("su-sost", (2,))
    F = coefficient_oracle(p, None, MultiPoly.const(1), 4)
    c11, c12, c22 = V(("c", 1, 1)), V(("c", 1, 2)), V(("c", 2, 2))
    det_c = c11 * c22 - c12 * c12
    w = V(("w", 1, 2))
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr((-1) ** t, _fact(t) * 4 ** t)) / _poch(Fr(1, 2), t)
        expect = expect + det_c ** t * w ** (2 * t) * coeff
    assert F == expect


def test_oracle_sost_u_22():
    p = make_pair("sost-u", (2, 2))
    F = coefficient_oracle(p, None, MultiPoly.const(1), 4)
    c1, c2 = V(("c", 1, 2)), V(("c", 3, 4))
    det_w = (V(("w", 1, 3)) * V(("w", 2, 4))
             - V(("w", 1, 4)) * V(("w", 2, 3)))
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr(1, _fact(t))) / _poch(-1, t)
        expect = expect + (c1 * c2) ** t * det_w ** t * coeff
    assert F == expect


def test_oracle_sost_sostsost_prefactor():
    p = make_pair("sost-sostsost", (2, 2), k=1)
    F = coefficient_oracle(p, None, p.k_pre_poly(), 2)
    det_c = (V(("c", 1, 3)) * V(("c", 2, 4))
             - V(("c", 1, 4)) * V(("c", 2, 3)))
    assert F.truncate_group("w", 0) == det_c


def test_oracle_so_soso():
    qc = V(("c", 1, 1)) ** 2 + V(("c", 1, 2)) ** 2
    qw = V(("w", 1, 1)) ** 2 + V(("w", 1, 2)) ** 2
    p = make_pair("so-soso", (2, 2))
    F = coefficient_oracle(p, None, MultiPoly.const(1), 4)
    expect = MultiPoly()
    for t in range(3):
        coeff = PFrac.const(Fr((-1) ** t, _fact(t))) / _poch(0, t)
        expect = expect + qc ** t * qw ** t * coeff
    assert F == expect
    # k=1 shifts the Pochhammer base by 2
    p = make_pair("so-soso", (2, 2), k=1)
    F = coefficient_oracle(p, None, p.k_pre_poly(), 2)
    expect = MultiPoly()
    for t in range(2):
        coeff = PFrac.const(Fr((-1) ** t)) / _poch(2, t)
        expect = expect + qc * qc ** t * qw ** t * coeff
    assert F == expect


def test_rational_weight_path_matches_symbolic():
    p = make_pair("su-sp", (2,))
    F7 = coefficient_oracle(p, Fr(7, 3), MultiPoly.const(1), 4)
    Fs = coefficient_oracle(p, None, MultiPoly.const(1), 4)
    ev = MultiPoly({k: (c.evaluate({"nu": Fr(7, 3)})
                        if isinstance(c, (PFrac, ParamScalar)) else c)
                    for k, c in Fs.terms.items()})
    assert F7 == ev


def test_hat_kernel_base_cases():
    p = make_pair("sp-spsp", (1, 1))
    hk = build_hat_kernel(p, Fr(3), MultiPoly.const(1), 4)
    X = p.x_all_full("z")
    Y = p.y1_full("y")
    h = generic_norm_poly(p.big, X, Y, "y", 4)
    assert hk == inv_power_series(h, Fr(3), 4, "y")
    hk2 = build_hat_kernel(p, Fr(3), V(("c", 1, 2)) ** 2, 3)
    assert hk2.truncate_group("y", 0) == V(("z", 1, 2)) ** 2


def test_expansion_mismatch_is_exported():
    assert issubclass(ExpansionMismatch, Exception)
