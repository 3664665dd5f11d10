"""Spherical polynomials, kernels, and Fischer pairings."""

import math
import random
from fractions import Fraction

from jsbo.domains import DomainSpec
from jsbo.partitions import partitions_of, partitions_upto, trim
from jsbo.poly import MultiPoly
from jsbo.spaces import (
    component_decomposition,
    eval_trace_poly,
    fischer_apply,
    fischer_inner,
    fischer_inner_scalar,
    hks_project,
    jack_phi_tilde,
    phi_matrix_eval,
    repkernel_K,
    schur_phi_tilde,
    trace_coordinate_poly,
    weighted_inner,
)


def _t(i):
    return MultiPoly.var(("t", 1, i))


def test_jack_matches_schur_route():
    # d=2 has the independent determinant-free closed form
    for rank in (1, 2, 3):
        for w in range(0, 6):
            for m in partitions_of(w, rank):
                a = jack_phi_tilde(trim(m), 2, rank)
                b = schur_phi_tilde(trim(m), rank)
                assert (a - b).is_zero(), (m, rank)


def test_stability_under_last_variable():
    for d in (1, 2, 4):
        for rank in (2, 3):
            for w in range(0, 5):
                for m in partitions_of(w, rank - 1):
                    big = jack_phi_tilde(trim(m), d, rank)
                    small = jack_phi_tilde(trim(m), d, rank - 1)
                    dropped = big.subs({("t", 1, rank): MultiPoly()})
                    assert (dropped - small).is_zero(), (m, d, rank)


def test_exponential_completeness():
    deg = 6
    rank = 2
    for d in (1, 2, 4):
        total = MultiPoly()
        for m in partitions_upto(rank, deg):
            total = total + jack_phi_tilde(trim(m), d, rank)
        p1 = _t(1) + _t(2)
        expect = MultiPoly()
        pw = MultiPoly.const(1)
        for k in range(deg + 1):
            expect = expect + pw * Fraction(1, math.factorial(k))
            pw = pw * p1
        diff = (total - expect)
        for k, c in diff.terms.items():
            assert sum(e for _, e in k) > deg, (d, k, c)


def test_trace_coordinate_poly_frozen():
    p2 = MultiPoly.var(("p", 1, 2))
    p1 = MultiPoly.var(("p", 1, 1))
    f = _t(1) ** 2 + _t(2) ** 2
    assert (trace_coordinate_poly(f, 2) - p2).is_zero()
    e2 = _t(1) * _t(2)
    assert (trace_coordinate_poly(e2, 2) - (p1 * p1 - p2) * Fraction(1, 2)).is_zero()


def test_eval_trace_poly_round_trip():
    f = jack_phi_tilde((2, 1), 1, 2)
    tp = trace_coordinate_poly(f, 2)
    vals = {1: Fraction(5, 2), 2: Fraction(-1, 3)}
    ts = (Fraction(1, 2), Fraction(2))
    powers = {j: ts[0] ** j + ts[1] ** j for j in (1, 2, 3)}
    direct = f.evaluate({("t", 1, 1): ts[0], ("t", 1, 2): ts[1]})
    assert eval_trace_poly(tp, powers) == direct
    del vals


def test_phi_matrix_eval_on_diagonal():
    a = [[_t(1), MultiPoly()], [MultiPoly(), _t(2)]]
    for d in (1, 2):
        for m in ((1,), (2,), (1, 1), (2, 1)):
            got = phi_matrix_eval(m, d, 2, a, Fraction(1))
            want = jack_phi_tilde(m, d, 2)
            assert (got - want).is_zero(), (m, d)


def test_hks_projection_resolves_identity():
    rng = random.Random(31)
    for name in ("SYM(2)", "QUADRIC(3)"):
        dom = DomainSpec.parse(name)
        coords = dom.free_coords()
        f = MultiPoly()
        for _ in range(6):
            key = []
            for (i, j) in coords:
                e = rng.randint(0, 2)
                if e:
                    key.append((("x", i, j), e))
            f = f + MultiPoly({tuple(key): Fraction(rng.randint(1, 5))})
        f = f.truncate_group("x", 3)
        total = MultiPoly()
        for m in partitions_upto(dom.rank, 3):
            pm = hks_project(dom, f, m, "x")
            # projections are idempotent
            assert (hks_project(dom, pm, m, "x") - pm).is_zero()
            total = total + pm
        assert (total - f).is_zero(), name


def test_component_decomposition_sums_back():
    dom = DomainSpec.parse("MAT(2,2)")
    x11 = MultiPoly.var(("x", 1, 1))
    x22 = MultiPoly.var(("x", 2, 2))
    x12 = MultiPoly.var(("x", 1, 2))
    x21 = MultiPoly.var(("x", 2, 1))
    det = x11 * x22 - x12 * x21
    comps = component_decomposition(dom, det, "x")
    assert set(comps) == {(1, 1)}  # the determinant is the (1,1) kernel
    f = det + x11 ** 2 + MultiPoly.const(3)
    comps = component_decomposition(dom, f, "x")
    back = sum(comps.values(), MultiPoly())
    assert (back - f).is_zero()
    assert comps[()].coeff_of([]) == 3


def test_fischer_pairing_and_apply():
    dom = DomainSpec.parse("SYM(2)")
    x11 = MultiPoly.var(("x", 1, 1))
    x12 = MultiPoly.var(("x", 1, 2))
    assert fischer_inner_scalar(dom, x11, x11) == 1
    # off-diagonal weight 2 gives norm 1/2 against the dual pairing
    assert fischer_inner_scalar(dom, x12, x12) == Fraction(1, 2)
    assert fischer_inner_scalar(dom, x11 ** 2, x11 ** 2) == 2
    assert fischer_inner_scalar(dom, x11, x12) == 0
    # fischer_apply turns the first slot into scaled derivatives
    out = fischer_apply(dom, x12, x12 ** 3, "x")
    assert (out - x12 ** 2 * Fraction(3, 2)).is_zero()


def test_reproducing_kernels():
    rng = random.Random(8)
    dom = DomainSpec.parse("SYM(2)")
    coords = dom.free_coords()
    f = MultiPoly()
    for _ in range(5):
        key = []
        for (i, j) in coords:
            e = rng.randint(0, 2)
            if e:
                key.append((("x", i, j), e))
        f = f + MultiPoly({tuple(key): Fraction(rng.randint(1, 4))})
    f = f.truncate_group("x", 3)
    # sum over partitions of <f, K_m(x,y)>_x reproduces f at y
    got = MultiPoly()
    for m in partitions_upto(dom.rank, 3):
        km = repkernel_K(dom, m)
        got = got + fischer_inner(dom, hks_project(dom, f, m, "x"), km, "x")
    expect = f.rename_group("x", "y")
    assert (got - expect).is_zero()


def test_weighted_inner_frozen():
    dom = DomainSpec.parse("SYM(2)")
    x11 = MultiPoly.var(("x", 1, 1))
    w = weighted_inner(dom, x11, x11)
    assert w.evaluate({"nu": Fraction(3)}) == Fraction(1, 3)
    w2 = weighted_inner(dom, x11 ** 2, x11 ** 2)
    # degree 2 splits into (2) and (1,1); only (2) sees x11^2
    assert w2.evaluate({"nu": Fraction(3)}) == Fraction(2, 12) + 0
