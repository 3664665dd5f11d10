"""The four classical bounded symmetric domains in Jordan coordinates.

Kinds: SYM(r) symmetric r x r matrices, MAT(q,s) rectangular q x s,
SKEW(s) antisymmetric s x s, QUADRIC(n) the rank two quadric kind on
n coordinates.  Points are dicts over free coordinates with Fraction
values; all algebra (quadratic map, triple bracket, Bergman operator,
generic norm, quasi-inverse) is exact.  Rational points stand in for
real points, so conjugation acts trivially and adjoints reduce to
transposes where the kind demands one.

A float helper computes the spectral norm for membership reporting and
is the only non-exact code path in the package.
"""

from fractions import Fraction

from .poly import MultiPoly
from .matrixops import (det_poly, pfaffian, poly_sqrt_monic, frac_det,
                        frac_solve, identity_poly, mat_sub, mat_mul)

NUMERIC_TOLERANCE = 1e-12


class DomainSpec:
    """One classical domain.  Instances are immutable and cached lightly."""

    _h_cache = {}

    def __init__(self, kind, sizes):
        kind = kind.upper()
        sizes = tuple(int(s) for s in sizes)
        if kind == "SYM":
            assert len(sizes) == 1 and sizes[0] >= 1
        elif kind == "MAT":
            assert len(sizes) == 2 and min(sizes) >= 1
        elif kind == "SKEW":
            assert len(sizes) == 1 and sizes[0] >= 2
        elif kind == "QUADRIC":
            assert len(sizes) == 1 and sizes[0] >= 1
        else:
            raise ValueError("unknown kind %r" % kind)
        self.kind = kind
        self.sizes = sizes

    @classmethod
    def parse(cls, text):
        """Parse names like SYM(2), MAT(2,2) and flag forms sym:2, mat:2x3."""
        text = text.strip()
        if ":" in text:
            kind, rest = text.split(":", 1)
            sizes = [int(t) for t in rest.lower().split("x")]
            return cls(kind, sizes)
        kind, rest = text.split("(", 1)
        sizes = [int(t) for t in rest.rstrip(")").split(",")]
        return cls(kind, sizes)

    def name(self):
        return "%s(%s)" % (self.kind, ",".join(str(s) for s in self.sizes))

    def __repr__(self):
        return "DomainSpec(%s)" % self.name()

    def __eq__(self, other):
        return (isinstance(other, DomainSpec) and self.kind == other.kind
                and self.sizes == other.sizes)

    def __hash__(self):
        return hash((self.kind, self.sizes))

    # -- structure constants ------------------------------------------------

    @property
    def rank(self):
        if self.kind == "SYM":
            return self.sizes[0]
        if self.kind == "MAT":
            return min(self.sizes)
        if self.kind == "SKEW":
            return self.sizes[0] // 2
        return min(2, self.sizes[0])

    @property
    def dim(self):
        if self.kind == "SYM":
            r = self.sizes[0]
            return r * (r + 1) // 2
        if self.kind == "MAT":
            return self.sizes[0] * self.sizes[1]
        if self.kind == "SKEW":
            s = self.sizes[0]
            return s * (s - 1) // 2
        return self.sizes[0]

    @property
    def mult_d(self):
        """The off-diagonal root multiplicity."""
        if self.kind == "SYM":
            return Fraction(1)
        if self.kind == "MAT":
            return Fraction(2)
        if self.kind == "SKEW":
            return Fraction(4)
        return Fraction(self.sizes[0] - 2)

    @property
    def genus(self):
        if self.kind == "SYM":
            return self.sizes[0] + 1
        if self.kind == "MAT":
            return self.sizes[0] + self.sizes[1]
        if self.kind == "SKEW":
            return 2 * (self.sizes[0] - 1)
        return self.sizes[0]

    @property
    def eps(self):
        """Trace form scale: (x|y) = (1/eps) Tr(x y*)."""
        return 2 if self.kind == "SKEW" else 1

    # -- coordinates --------------------------------------------------------

    def free_coords(self):
        if self.kind == "SYM":
            r = self.sizes[0]
            return [(i, j) for i in range(1, r + 1) for j in range(i, r + 1)]
        if self.kind == "MAT":
            q, s = self.sizes
            return [(i, j) for i in range(1, q + 1) for j in range(1, s + 1)]
        if self.kind == "SKEW":
            s = self.sizes[0]
            return [(i, j) for i in range(1, s + 1) for j in range(i + 1, s + 1)]
        return [(1, j) for j in range(1, self.sizes[0] + 1)]

    def weight(self, coord):
        """Fischer weight of one free coordinate."""
        if self.kind == "SYM":
            return Fraction(1) if coord[0] == coord[1] else Fraction(2)
        if self.kind == "QUADRIC":
            return Fraction(2)
        return Fraction(1)

    def zero_point(self):
        return {c: Fraction(0) for c in self.free_coords()}

    def rand_point(self, rng, num_bound=3, den_bound=5):
        """Random rational point; generic, not necessarily inside the ball."""
        return {c: Fraction(rng.randint(-num_bound, num_bound),
                            rng.randint(1, den_bound))
                for c in self.free_coords()}

    def point_from_list(self, values):
        coords = self.free_coords()
        assert len(values) == len(coords)
        return {c: Fraction(v) for c, v in zip(coords, values)}

    # -- full matrix and vector forms --------------------------------------

    def to_full(self, pt):
        if self.kind == "QUADRIC":
            return [pt.get((1, j), Fraction(0))
                    for j in range(1, self.sizes[0] + 1)]
        if self.kind == "SYM":
            r = self.sizes[0]
            return [[pt.get((min(i, j), max(i, j)), Fraction(0))
                     for j in range(1, r + 1)] for i in range(1, r + 1)]
        if self.kind == "MAT":
            q, s = self.sizes
            return [[pt.get((i, j), Fraction(0)) for j in range(1, s + 1)]
                    for i in range(1, q + 1)]
        s = self.sizes[0]
        out = [[Fraction(0)] * s for _ in range(s)]
        for (i, j), v in pt.items():
            out[i - 1][j - 1] = v
            out[j - 1][i - 1] = -v
        return out

    def from_full(self, full):
        if self.kind == "QUADRIC":
            return {(1, j): full[j - 1] for j in range(1, self.sizes[0] + 1)}
        return {c: full[c[0] - 1][c[1] - 1] for c in self.free_coords()}

    # -- pointwise Jordan algebra -------------------------------------------

    def _adjoint(self, full):
        """y* for a rational point: transpose for MAT and SKEW, y itself
        for SYM.  Not meaningful for QUADRIC."""
        if self.kind == "SYM":
            return full
        return [[full[i][j] for i in range(len(full))]
                for j in range(len(full[0]))]

    def q_apply(self, x, y):
        """Q(x)y on full forms."""
        if self.kind == "QUADRIC":
            qxy = sum(a * b for a, b in zip(x, y))
            qx = sum(a * a for a in x)
            return [2 * qxy * a - qx * b for a, b in zip(x, y)]
        ys = self._adjoint(y)
        return _mm(_mm(x, ys), x)

    def d_apply(self, x, y, z):
        """D(x,y)z = Q(x+z)y - Q(x)y - Q(z)y."""
        if self.kind == "QUADRIC":
            qxy = sum(a * b for a, b in zip(x, y))
            qzy = sum(a * b for a, b in zip(z, y))
            qxz = sum(a * b for a, b in zip(x, z))
            return [2 * (qxy * c + qzy * a - qxz * b)
                    for a, b, c in zip(x, y, z)]
        ys = self._adjoint(y)
        return _madd(_mm(_mm(x, ys), z), _mm(_mm(z, ys), x))

    def b_apply(self, x, y, z):
        """B(x,y)z = z - D(x,y)z + Q(x)Q(y)z."""
        d = self.d_apply(x, y, z)
        qq = self.q_apply(x, self.q_apply(y, z))
        if self.kind == "QUADRIC":
            return [c - dv + qv for c, dv, qv in zip(z, d, qq)]
        return _madd(_msub(z, d), qq)

    def basis_full(self):
        out = []
        for c in self.free_coords():
            pt = self.zero_point()
            pt[c] = Fraction(1)
            out.append(self.to_full(pt))
        return out

    def op_matrix(self, fn):
        """Matrix of a linear map on full forms, in the free coordinate
        basis; columns are images of basis elements."""
        coords = self.free_coords()
        cols = []
        for b in self.basis_full():
            img = self.from_full(fn(b))
            cols.append([img[c] for c in coords])
        n = len(coords)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def b_matrix(self, x, y):
        return self.op_matrix(lambda z: self.b_apply(x, y, z))

    def d_matrix(self, x, y):
        return self.op_matrix(lambda z: self.d_apply(x, y, z))

    def h_val(self, x, y):
        """Generic norm h(x, y) at rational points."""
        if self.kind == "QUADRIC":
            qxy = sum(a * b for a, b in zip(x, y))
            qx = sum(a * a for a in x)
            qy = sum(b * b for b in y)
            return 1 - 2 * qxy + qx * qy
        if self.kind == "SKEW":
            hp = self.h_poly("x", "y")
            assign = {}
            px = self.from_full(x)
            py = self.from_full(y)
            for (i, j), v in px.items():
                assign[("x", i, j)] = v
            for (i, j), v in py.items():
                assign[("y", i, j)] = v
            return hp.evaluate(assign)
        m = _msub(_eye(len(x)), _mm(x, self._adjoint(y)))
        return frac_det(m)

    def quasi_inverse(self, x, y):
        """x^y in closed form; needs 1 - x y* invertible (h nonzero)."""
        if self.kind == "QUADRIC":
            h = self.h_val(x, y)
            if h == 0:
                raise ZeroDivisionError("quasi-inverse undefined here")
            qx = sum(a * a for a in x)
            return [(a - qx * b) / h for a, b in zip(x, y)]
        n = len(x)
        m = _msub(_eye(n), _mm(x, self._adjoint(y)))
        cols = []
        for j in range(len(x[0])):
            rhs = [x[i][j] for i in range(n)]
            cols.append(frac_solve(m, rhs))
        return [[cols[j][i] for j in range(len(x[0]))] for i in range(n)]

    def inner(self, x, y):
        """(x | y) as rational points: (1/eps) Tr(x y*), twice the bilinear
        form for QUADRIC."""
        if self.kind == "QUADRIC":
            return 2 * sum(a * b for a, b in zip(x, y))
        ys = self._adjoint(y)
        tot = Fraction(0)
        for i in range(len(x)):
            for k in range(len(x[0])):
                tot += x[i][k] * ys[k][i]
        return tot / self.eps

    # -- symbolic forms ------------------------------------------------------

    def sym_matrix(self, group, support=None):
        """Full symbolic matrix (or vector) whose free entries are variables
        (group, i, j).  support restricts which free coordinates appear;
        the rest are zero."""
        coords = self.free_coords() if support is None else list(support)
        coords = set(coords)
        if self.kind == "QUADRIC":
            return [MultiPoly.var((group, 1, j)) if (1, j) in coords
                    else MultiPoly() for j in range(1, self.sizes[0] + 1)]
        if self.kind == "SYM":
            r = self.sizes[0]
            return [[MultiPoly.var((group, min(i, j), max(i, j)))
                     if (min(i, j), max(i, j)) in coords else MultiPoly()
                     for j in range(1, r + 1)] for i in range(1, r + 1)]
        if self.kind == "MAT":
            q, s = self.sizes
            return [[MultiPoly.var((group, i, j)) if (i, j) in coords
                     else MultiPoly() for j in range(1, s + 1)]
                    for i in range(1, q + 1)]
        s = self.sizes[0]
        out = [[MultiPoly() for _ in range(s)] for _ in range(s)]
        for (i, j) in coords:
            v = MultiPoly.var((group, i, j))
            out[i - 1][j - 1] = v
            out[j - 1][i - 1] = -v
        return out

    def adjoint_symbolic(self, m):
        """Symbolic y* assuming the entries are already conjugated."""
        if self.kind == "SYM":
            return m
        return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]

    def h_poly(self, xgroup, ygroup, xsupport=None, ysupport=None):
        """Generic norm as a polynomial; ygroup variables play the role of
        conjugated coordinates."""
        key = (self.kind, self.sizes, xgroup, ygroup,
               tuple(sorted(xsupport)) if xsupport is not None else None,
               tuple(sorted(ysupport)) if ysupport is not None else None)
        if key in DomainSpec._h_cache:
            return DomainSpec._h_cache[key]
        if self.kind == "QUADRIC":
            xv = self.sym_matrix(xgroup, xsupport)
            yv = self.sym_matrix(ygroup, ysupport)
            qxy = MultiPoly()
            qx = MultiPoly()
            qy = MultiPoly()
            for a, b in zip(xv, yv):
                qxy = qxy + a * b
                qx = qx + a * a
                qy = qy + b * b
            out = MultiPoly.const(1) - 2 * qxy + qx * qy
        else:
            x = self.sym_matrix(xgroup, xsupport)
            y = self.sym_matrix(ygroup, ysupport)
            ys = self.adjoint_symbolic(y)
            n = len(x)
            m = mat_sub(identity_poly(n), mat_mul(x, ys))
            dd = det_poly(m)
            if self.kind == "SKEW":
                out = poly_sqrt_monic(dd)
            else:
                out = dd
        DomainSpec._h_cache[key] = out
        return out

    def det_norm_poly(self, group):
        """The rank determinant polynomial: det for SYM and square MAT,
        Pfaffian for even SKEW, the base quadric for QUADRIC."""
        if self.kind == "QUADRIC":
            xv = self.sym_matrix(group)
            out = MultiPoly()
            for a in xv:
                out = out + a * a
            return out
        m = self.sym_matrix(group)
        if self.kind == "SKEW":
            if self.sizes[0] % 2 != 0:
                raise ValueError("Pfaffian needs even size")
            return pfaffian(m)
        if self.kind == "MAT" and self.sizes[0] != self.sizes[1]:
            raise ValueError("determinant needs a square shape")
        return det_poly(m)

    def quasi_inverse_series(self, x_mat, ystar_mat, max_conj_degree,
                             conj_group):
        """Truncated expansion of the quasi-inverse on matrix kinds.

        x_mat and ystar_mat are symbolic full matrices (ystar already in
        adjoint position); returns the full matrix of sum_j (x ystar)^j x
        keeping terms of degree at most max_conj_degree in conj_group."""
        n = len(x_mat)
        acc = [row[:] for row in x_mat]
        out = [row[:] for row in x_mat]
        xy = mat_mul(x_mat, ystar_mat)
        for _ in range(max_conj_degree):
            acc = mat_mul(xy, acc)
            acc = [[_truncate(e, conj_group, max_conj_degree) for e in row]
                   for row in acc]
            if all(e.is_zero() for row in acc for e in row):
                break
            out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, acc)]
        return out

    def quasi_inverse_series_quadric(self, x_vec, y_vec, max_conj_degree,
                                     conj_group):
        """Quadric analogue: (x - q(x) y) / h as a geometric series in 1-h."""
        qxy = MultiPoly()
        qx = MultiPoly()
        qy = MultiPoly()
        for a, b in zip(x_vec, y_vec):
            qxy = qxy + a * b
            qx = qx + a * a
            qy = qy + b * b
        u = 2 * qxy - qx * qy
        inv = MultiPoly.const(1)
        pw = MultiPoly.const(1)
        for _ in range(max_conj_degree):
            pw = _truncate(pw * u, conj_group, max_conj_degree)
            if pw.is_zero():
                break
            inv = inv + pw
        out = []
        for a, b in zip(x_vec, y_vec):
            comp = (a - qx * b) * inv
            out.append(_truncate(comp, conj_group, max_conj_degree))
        return out

    # -- numeric membership --------------------------------------------------

    def spectral_norm_numeric(self, pt):
        """Spectral norm as a float (largest singular value; the Lie norm
        for QUADRIC).  Tolerance for membership decisions is 1e-12."""
        import math
        full = self.to_full(pt)
        if self.kind == "QUADRIC":
            sq = sum(float(v) ** 2 for v in full)
            qv = abs(sum(float(v) ** 2 for v in full))
            inner = max(sq * sq - qv * qv, 0.0)
            return math.sqrt(sq + math.sqrt(inner))
        import numpy
        arr = numpy.array([[float(v) for v in row] for row in full])
        if arr.size == 0:
            return 0.0
        return float(numpy.linalg.norm(arr, 2))

    def in_domain(self, pt):
        return self.spectral_norm_numeric(pt) < 1.0 - NUMERIC_TOLERANCE

    # -- the standard block splitting used by the worked examples -----------

    def desk_split(self, first=None):
        """(p1 coords, p2 coords) for the natural two block decomposition.

        SYM splits diagonal against off-diagonal at position `first`
        (default half), MAT splits by column block, SKEW by diagonal skew
        blocks, QUADRIC by the first `first` coordinates.
        """
        if self.kind == "SYM":
            r = self.sizes[0]
            a = first if first is not None else (r + 1) // 2
            p1 = [(i, j) for (i, j) in self.free_coords()
                  if (i <= a and j <= a) or (i > a and j > a)]
            p2 = [c for c in self.free_coords() if c not in p1]
            return p1, p2
        if self.kind == "MAT":
            q, s = self.sizes
            a = first if first is not None else (s + 1) // 2
            p1 = [(i, j) for (i, j) in self.free_coords() if j <= a]
            p2 = [c for c in self.free_coords() if c not in p1]
            return p1, p2
        if self.kind == "SKEW":
            s = self.sizes[0]
            a = first if first is not None else (s + 1) // 2
            p1 = [(i, j) for (i, j) in self.free_coords()
                  if (j <= a) or (i > a)]
            p2 = [c for c in self.free_coords() if c not in p1]
            return p1, p2
        n = self.sizes[0]
        a = first if first is not None else n - 1
        p1 = [(1, j) for j in range(1, a + 1)]
        p2 = [(1, j) for j in range(a + 1, n + 1)]
        return p1, p2


def _eye(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def _mm(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for t in range(k):
            v = ai[t]
            if v == 0:
                continue
            bt = b[t]
            row = out[i]
            for j in range(m):
                row[j] += v * bt[j]
    return out


def _madd(a, b):
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _msub(a, b):
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _truncate(p, group, max_degree):
    out = {}
    for k, c in p.terms.items():
        d = sum(e for v, e in k if v[0] == group)
        if d <= max_degree:
            out[k] = c
    return MultiPoly(out)


DESK_DOMAINS = ["SYM(2)", "MAT(2,2)", "SKEW(4)", "QUADRIC(3)"]
