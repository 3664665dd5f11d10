"""Matrix helpers over exact rings.

Two layers.  The frac_* functions do Gaussian elimination over Fractions
(determinant, inverse, linear solve) for pointwise numeric work.  The
mat_* and *_poly functions treat matrices as lists of lists of MultiPoly
for the symbolic side: products, determinants by cofactor expansion,
Pfaffians, adjugates, and the graded square root used for skew norms.
"""

from fractions import Fraction

from .poly import MultiPoly


# ---------------------------------------------------------------------------
# Fraction matrices
# ---------------------------------------------------------------------------

def frac_det(m):
    n = len(m)
    a = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            f = a[r][col] * inv
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    return det

def frac_solve(m, rhs):
    """Solve m x = rhs; rhs is a flat list. Raises on singular m."""
    n = len(m)
    a = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def frac_inv(m):
    n = len(m)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(frac_solve(m, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def frac_solve_least(m, rhs):
    """Solve a possibly overdetermined consistent system by elimination.

    m has len(m) rows, any number of columns; returns the unique solution
    or raises if the system is inconsistent or underdetermined.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(m[i]) + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if a[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for rr in range(rows):
            if rr != r and a[rr][c] != 0:
                f = a[rr][c]
                a[rr] = [v - f * w for v, w in zip(a[rr], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for rr in range(r, rows):
        if a[rr][cols] != 0:
            raise ValueError("inconsistent system")
    if len(pivots) < cols:
        raise ValueError("underdetermined system")
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x


# ---------------------------------------------------------------------------
# polynomial matrices
# ---------------------------------------------------------------------------

def mat_shape(m):
    return len(m), len(m[0]) if m else 0

def identity_poly(n):
    return [[MultiPoly.const(1 if i == j else 0) for j in range(n)]
            for i in range(n)]


def mat_mul(a, b):
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    assert ca == rb
    out = []
    for i in range(ra):
        row = []
        for j in range(cb):
            s = MultiPoly()
            for k in range(ca):
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_transpose(a):
    r, c = mat_shape(a)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def mat_map(a, fn):
    return [[fn(x) for x in row] for row in a]


def det_poly(m):
    """Cofactor determinant with shared minors across branches."""
    n = len(m)
    if n == 0:
        return MultiPoly.const(1)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    cache = {}

    def rec(cols):
        if len(cols) == 1:
            return m[n - 1][cols[0]]
        got = cache.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        out = MultiPoly()
        for t, j in enumerate(cols):
            e = m[row][j]
            if e.is_zero():
                continue
            sub = rec(cols[:t] + cols[t + 1:])
            term = e * sub
            out = out + (term if t % 2 == 0 else -term)
        cache[cols] = out
        return out

    return rec(tuple(range(n)))


def pfaffian(m):
    """Pfaffian of an even-size skew matrix, by expansion along row 0."""
    n = len(m)
    if n == 0:
        return MultiPoly.const(1)
    if n % 2 == 1:
        return MultiPoly()
    if n == 2:
        return m[0][1]
    out = MultiPoly()
    for j in range(1, n):
        if m[0][j].is_zero():
            continue
        keep = [k for k in range(1, n) if k != j]
        minor = [[m[a][b] for b in keep] for a in keep]
        term = m[0][j] * pfaffian(minor)
        out = out + (term if j % 2 == 1 else -term)
    return out


def adjugate(m):
    """Classical adjugate: adj(m) m = det(m) I."""
    n = len(m)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[a][b] for b in range(n) if b != i]
                     for a in range(n) if a != j]
            c = det_poly(minor)
            out[i][j] = c if (i + j) % 2 == 0 else -c
    return out


def pfaffian_adjugate(m):
    """Skew analogue: out is skew with m out = Pf(m) I.

    Entry (k,l) with k < l is (-1)^(k+l) times the Pfaffian of m with rows
    and columns k and l removed.
    """
    n = len(m)
    out = [[MultiPoly() for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for l in range(k + 1, n):
            keep = [t for t in range(n) if t not in (k, l)]
            minor = [[m[a][b] for b in keep] for a in keep]
            val = pfaffian(minor)
            if (k + l) % 2 == 1:
                val = -val
            out[k][l] = val
            out[l][k] = -val
    return out


def mat_eval(m, assign):
    return [[x.evaluate(assign) for x in row] for row in m]


def poly_sqrt_monic(p, group=None):
    """Square root with constant term 1, by graded recursion.

    p must have constant term 1 and be a perfect square; grading is total
    degree (optionally within one variable group).
    """
    parts = {}
    for k, c in p.terms.items():
        d = sum(e for v, e in k if group is None or v[0] == group)
        parts.setdefault(d, {})[k] = c
    degs = sorted(parts)
    assert degs and degs[0] == 0 and MultiPoly(parts[0]) == MultiPoly.const(1), \
        "square root needs constant term 1"
    top = degs[-1]
    h = {0: MultiPoly.const(1)}
    for d in range(1, top // 2 + 1):
        acc = MultiPoly(parts.get(d, {}))
        for a in range(1, d):
            if a in h and d - a in h:
                acc = acc - h[a] * h[d - a]
        h[d] = acc * Fraction(1, 2)
    out = MultiPoly()
    for d, hp in h.items():
        out = out + hp
    sq = out * out
    assert sq == p, "input was not a perfect square"
    return out
