"""Domain structure constants and the quadratic-map calculus on points."""

import random
from fractions import Fraction

import pytest

from jsbo.domains import DESK_DOMAINS, DomainSpec
from jsbo.matrixops import frac_det, identity_poly, mat_mul, pfaffian, pfaffian_adjugate
from jsbo.poly import MultiPoly


def test_structure_constants():
    table = {
        ("SYM", (2,)): (2, 3, 1, 3, 1),
        ("SYM", (3,)): (3, 6, 1, 4, 1),
        ("MAT", (2, 2)): (2, 4, 2, 4, 1),
        ("MAT", (2, 3)): (2, 6, 2, 5, 1),
        ("MAT", (1, 1)): (1, 1, 2, 2, 1),
        ("SKEW", (4,)): (2, 6, 4, 6, 2),
        ("SKEW", (5,)): (2, 10, 4, 8, 2),
        ("SKEW", (6,)): (3, 15, 4, 10, 2),
        ("QUADRIC", (3,)): (2, 3, 1, 3, 1),
        ("QUADRIC", (4,)): (2, 4, 2, 4, 1),
        ("QUADRIC", (6,)): (2, 6, 4, 6, 1),
    }
    for (kind, sizes), (r, n, d, p, eps) in table.items():
        dom = DomainSpec(kind, sizes)
        assert dom.rank == r, dom
        assert dom.dim == n, dom
        assert dom.mult_d == d, dom
        assert dom.genus == p, dom
        assert dom.eps == eps, dom
        # rank-1 reduction of the genus formula: p = eps*(r-1)*d/2 + ... holds
        # implicitly through the table; here just pin dim = len(free_coords)
        assert len(dom.free_coords()) == n


def test_parse_both_spellings():
    assert DomainSpec.parse("SYM(2)") == DomainSpec("SYM", (2,))
    assert DomainSpec.parse("sym:2") == DomainSpec("SYM", (2,))
    assert DomainSpec.parse("mat:2x3") == DomainSpec("MAT", (2, 3))
    assert DomainSpec.parse("MAT(2,3)") == DomainSpec("MAT", (2, 3))
    assert DomainSpec.parse("skew:4") == DomainSpec("SKEW", (4,))
    assert DomainSpec.parse("quadric:3") == DomainSpec("QUADRIC", (3,))
    with pytest.raises(ValueError):
        DomainSpec.parse("frob:3")


def test_rank_one_bergman_and_quasi_inverse():
    dom = DomainSpec("MAT", (1, 1))
    x = dom.point_from_list([Fraction(1, 2)])
    b = dom.b_matrix(dom.to_full(x), dom.to_full(x))
    assert b == [[Fraction(9, 16)]]
    y = dom.point_from_list([Fraction(1, 3)])
    qi = dom.quasi_inverse(dom.to_full(x), dom.to_full(y))
    assert dom.from_full(qi) == dom.point_from_list([Fraction(3, 5)])


def test_zero_second_argument():
    rng = random.Random(11)
    for name in DESK_DOMAINS:
        dom = DomainSpec.parse(name)
        x = dom.to_full(dom.rand_point(rng))
        zero = dom.to_full(dom.zero_point())
        assert dom.quasi_inverse(x, zero) == x
        assert dom.h_val(x, zero) == 1
        b = dom.b_matrix(x, zero)
        n = len(b)
        assert b == [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
                     for i in range(n)]


def test_sym2_diagonal_h():
    dom = DomainSpec("SYM", (2,))
    x = dom.to_full(dom.point_from_list([Fraction(1, 2), 0, Fraction(1, 2)]))
    assert dom.h_val(x, x) == Fraction(9, 16)


def test_quadric_h_closed_form():
    dom = DomainSpec("QUADRIC", (3,))
    h = dom.h_poly("x", "y")
    xs = [MultiPoly.var(("x", 1, j)) for j in (1, 2, 3)]
    ys = [MultiPoly.var(("y", 1, j)) for j in (1, 2, 3)]
    dot = sum((a * b for a, b in zip(xs, ys)), MultiPoly())
    qx = sum((a * a for a in xs), MultiPoly())
    qy = sum((b * b for b in ys), MultiPoly())
    expect = MultiPoly.const(1) - dot * 2 + qx * qy
    assert (h - expect).is_zero()


def test_matrix_bergman_closed_form():
    # B(x,y)z = (1-x y*)z(1-y* x) for the rectangular model
    dom = DomainSpec("MAT", (2, 2))
    x = dom.sym_matrix("x")
    y = dom.sym_matrix("y")
    z = dom.sym_matrix("z")
    yt = [[y[j][i] for j in range(2)] for i in range(2)]
    eye = identity_poly(2)
    left = [[eye[i][j] - sum(x[i][k] * yt[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)]
    right = [[eye[i][j] - sum(yt[i][k] * x[k][j] for k in range(2)) for j in range(2)]
             for i in range(2)]
    expect = mat_mul(mat_mul(left, z), right)
    got = dom.b_apply(x, y, z)
    for i in range(2):
        for j in range(2):
            assert (got[i][j] - expect[i][j]).is_zero()


def test_det_norm_polys():
    sym = DomainSpec("SYM", (2,))
    x11 = MultiPoly.var(("x", 1, 1))
    x12 = MultiPoly.var(("x", 1, 2))
    x22 = MultiPoly.var(("x", 2, 2))
    assert (sym.det_norm_poly("x") - (x11 * x22 - x12 * x12)).is_zero()

    skew = DomainSpec("SKEW", (4,))
    pf = skew.det_norm_poly("x")
    a12 = MultiPoly.var(("x", 1, 2))
    a34 = MultiPoly.var(("x", 3, 4))
    a13 = MultiPoly.var(("x", 1, 3))
    a24 = MultiPoly.var(("x", 2, 4))
    a14 = MultiPoly.var(("x", 1, 4))
    a23 = MultiPoly.var(("x", 2, 3))
    assert (pf - (a12 * a34 - a13 * a24 + a14 * a23)).is_zero()

    quad = DomainSpec("QUADRIC", (3,))
    q = quad.det_norm_poly("x")
    xs = [MultiPoly.var(("x", 1, j)) for j in (1, 2, 3)]
    assert (q - sum((a * a for a in xs), MultiPoly())).is_zero()


def test_pfaffian_and_adjugate():
    # m * adj(m) = Pf(m) * I for the generic skew 4x4
    skew = DomainSpec("SKEW", (4,))
    m = skew.sym_matrix("x")
    adj = pfaffian_adjugate(m)
    pf = pfaffian(m)
    prod = mat_mul(m, adj)
    for i in range(4):
        for j in range(4):
            want = pf if i == j else MultiPoly()
            assert (prod[i][j] - want).is_zero()
    # numeric cross-check: Pf^2 = det
    rng = random.Random(5)
    pt = skew.rand_point(rng)
    assign = {("x", i, j): v for (i, j), v in pt.items()}
    pfv = pf.evaluate(assign)
    assert pfv * pfv == frac_det(skew.to_full(pt))


def test_spectral_norm_and_membership():
    m11 = DomainSpec("MAT", (1, 1))
    assert m11.spectral_norm_numeric(m11.point_from_list([Fraction(1, 2)])) == pytest.approx(0.5)
    sym = DomainSpec("SYM", (2,))
    pt = sym.point_from_list([Fraction(3, 4), 0, Fraction(1, 4)])
    assert sym.spectral_norm_numeric(pt) == pytest.approx(0.75)
    assert sym.in_domain(pt)
    assert not sym.in_domain(sym.point_from_list([2, 0, 0]))
    quad = DomainSpec("QUADRIC", (3,))
    assert quad.in_domain(quad.point_from_list([Fraction(1, 4), 0, 0]))


def test_inner_products():
    sym = DomainSpec("SYM", (2,))
    e11 = sym.to_full(sym.point_from_list([1, 0, 0]))
    e12 = sym.to_full(sym.point_from_list([0, 1, 0]))
    assert sym.inner(e11, e11) == 1
    assert sym.inner(e12, e12) == 2  # off-diagonal coordinate has weight 2
    skew = DomainSpec("SKEW", (4,))
    e = skew.to_full(skew.point_from_list([1, 0, 0, 0, 0, 0]))
    assert skew.inner(e, e) == 1  # eps=1/2 halves the matrix trace
    quad = DomainSpec("QUADRIC", (3,))
    v = quad.to_full(quad.point_from_list([1, 0, 0]))
    assert quad.inner(v, v) == 2  # real basis vector is a rank-2 tripotent sum


def test_quasi_inverse_series_matches_pointwise():
    dom = DomainSpec("MAT", (1, 1))
    x = dom.sym_matrix("x")
    y = dom.sym_matrix("y")
    yt = y  # 1x1
    series = dom.quasi_inverse_series(x, yt, 3, "y")
    # geometric series x + x(yx) + x(yx)^2 + ... through conjugate degree 3
    v = MultiPoly.var(("x", 1, 1))
    w = MultiPoly.var(("y", 1, 1))
    expect = v + v * v * w + v * v * v * w * w + v ** 4 * w ** 3
    assert (series[0][0] - expect).is_zero()


def test_quadric_series_satisfies_defining_identity():
    # B(x,y) x^y = x - Q(x)y, checked after truncation
    dom = DomainSpec("QUADRIC", (3,))
    n = 3
    xs = [MultiPoly.var(("x", 1, j)) for j in range(1, n + 1)]
    ys = [MultiPoly.var(("y", 1, j)) for j in range(1, n + 1)]
    cap = 3
    qi = dom.quasi_inverse_series_quadric(xs, ys, cap, "y")
    bx = dom.b_apply(xs, ys, qi)
    target = [a - b for a, b in zip(xs, dom.q_apply(xs, ys))]
    for i in range(n):
        diff = (bx[i] - target[i]).truncate_group("y", cap)
        assert diff.is_zero()


def test_desk_split_shapes():
    sym = DomainSpec("SYM", (2,))
    p1, p2 = sym.desk_split()
    assert set(p1) | set(p2) == set(sym.free_coords())
    assert not set(p1) & set(p2)
    mat = DomainSpec("MAT", (2, 2))
    m1, m2 = mat.desk_split()
    assert set(m1) | set(m2) == set(mat.free_coords())
    quad = DomainSpec("QUADRIC", (3,))
    q1, q2 = quad.desk_split()
    assert len(q1) == 2 and len(q2) == 1


def test_rand_point_deterministic():
    dom = DomainSpec("SYM", (2,))
    a = dom.rand_point(random.Random(3))
    b = dom.rand_point(random.Random(3))
    assert a == b
