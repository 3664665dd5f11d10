"""Polynomial function spaces on the domains.

Fischer pairing and its weighted deformation, the normalized spherical
polynomials for multiplicity parameter d in {1, 2, 4} (computed exactly
through the degenerate hypergeometric differential operator), their trace
coordinate form, reproducing kernels per partition, and the projection
onto one irreducible component.  The quadric kind gets its kernels from
a linear solve against the binomial expansion of the generic norm.
"""

from fractions import Fraction

from .param import pochhammer
from .poly import MultiPoly
from .matrixops import mat_mul, frac_solve_least
from .partitions import dominates, partitions_of, trim
from .domains import DomainSpec


# ---------------------------------------------------------------------------
# Fischer pairing
# ---------------------------------------------------------------------------

def _monomial_norm(dom, key, group):
    """<x^a, x^a> for one monomial key restricted to group variables."""
    out = Fraction(1)
    for (g, i, j), e in key:
        if g != group:
            continue
        w = dom.weight((i, j))
        fact = 1
        for t in range(2, e + 1):
            fact *= t
        out *= Fraction(fact) / w ** e
    return out


def _split_key(key, group):
    ing = tuple((v, e) for v, e in key if v[0] == group)
    outg = tuple((v, e) for v, e in key if v[0] != group)
    return ing, outg


def fischer_inner(dom, f, g, group="x"):
    """Fischer inner product, contracting only the given variable group.

    Both arguments must depend on that group alone for a scalar answer;
    otherwise the uncontracted variables ride along multiplicatively in
    the g factor (used for kernel pairings)."""
    gxcoeffs = {}
    for key, c in g.terms.items():
        ing, outg = _split_key(key, group)
        gxcoeffs.setdefault(ing, []).append((outg, c))
    out = MultiPoly()
    for key, c in f.terms.items():
        ing, outg = _split_key(key, group)
        if outg:
            raise ValueError("first argument has variables outside the group")
        if ing not in gxcoeffs:
            continue
        norm = _monomial_norm(dom, ing, group)
        for rest, c2 in gxcoeffs[ing]:
            out = out + MultiPoly({rest: c * c2}) * norm
    return out


def fischer_inner_scalar(dom, f, g, group="x"):
    val = fischer_inner(dom, f, g, group)
    if val.is_zero():
        return Fraction(0)
    assert set(val.terms) == {()}, "pairing left free variables"
    return val.terms[()]


def fischer_apply(dom, f, g, group="x"):
    """f with each variable replaced by its weighted partial, acting on g.

    Characterized by: applying the exponential of the pairing reproduces
    polynomials.  No factorials appear; the substitution is var -> (1/w) d."""
    out = MultiPoly()
    for key, c in f.terms.items():
        work = g
        scale = Fraction(1)
        for (gr, i, j), e in key:
            if gr != group:
                raise ValueError("operator polynomial leaves its group")
            scale *= (Fraction(1) / dom.weight((i, j))) ** e
        for (gr, i, j), e in key:
            work = work.diff((gr, i, j), e)
            if work.is_zero():
                break
        out = out + work * (c * scale)
    return out


# ---------------------------------------------------------------------------
# spherical polynomials by multiplicity
# ---------------------------------------------------------------------------

def _tvar(i):
    return ("t", 1, i)


def _monomial_symmetric(lam, rank):
    """Monomial symmetric polynomial m_lam in rank variables."""
    lam = trim(lam)
    if len(lam) > rank:
        return MultiPoly()
    out = MultiPoly()
    from itertools import permutations
    padded = tuple(lam) + (0,) * (rank - len(lam))
    for p in set(permutations(padded)):
        out = out + MultiPoly.monomial(
            [(_tvar(i + 1), e) for i, e in enumerate(p) if e])
    return out


def _poly_divide_linear(p, vi, vj):
    """Exact division by (t_vi - t_vj); p must vanish on t_vi == t_vj."""
    quot = MultiPoly()
    rem = p
    while not rem.is_zero():
        key = max(rem.terms, key=lambda k: (dict(k).get(vi, 0), k))
        c = rem.terms[key]
        kd = dict(key)
        a = kd.get(vi, 0)
        assert a >= 1, "division by (ti - tj) failed"
        kd[vi] = a - 1
        qterm = MultiPoly.monomial([(v, e) for v, e in kd.items() if e], c)
        quot = quot + qterm
        rem = rem - qterm * (MultiPoly.var(vi) - MultiPoly.var(vj))
    return quot


def _lb_operator(f, rank, alpha):
    """The degenerate hypergeometric operator
    (alpha/2) sum t_i^2 d_i^2 + sum_{i<j} (t_i^2 d_i - t_j^2 d_j)/(t_i - t_j)
    applied to a symmetric polynomial, exactly."""
    out = MultiPoly()
    for i in range(1, rank + 1):
        ti = _tvar(i)
        out = out + MultiPoly.var(ti, 2) * f.diff(ti, 2) * Fraction(alpha, 2)
    for i in range(1, rank + 1):
        for j in range(i + 1, rank + 1):
            ti, tj = _tvar(i), _tvar(j)
            num = (MultiPoly.var(ti, 2) * f.diff(ti)
                   - MultiPoly.var(tj, 2) * f.diff(tj))
            if num.is_zero():
                continue
            out = out + _poly_divide_linear(num, ti, tj)
    return out


def _lb_eigenvalue(lam, rank, alpha):
    e = Fraction(0)
    for i, li in enumerate(lam):
        e += Fraction(alpha, 2) * li * (li - 1) + (rank - 1 - i) * li
    return e


_jack_cache = {}


def _jack_p(lam, rank, d):
    """Jack polynomial P_lam normalized with leading monomial coefficient 1,
    for alpha = 2/d."""
    lam = trim(lam)
    key = (lam, rank, d)
    if key in _jack_cache:
        return _jack_cache[key]
    alpha = Fraction(2, d)
    weight = sum(lam)
    # dominance triangularity: only dominated monomials can appear, and
    # restricting the eigenvector solve to them breaks the accidental
    # eigenvalue collisions between incomparable partitions
    basis = [tuple(m) for m in partitions_of(weight, rank)
             if dominates(lam, trim(m))]
    # coordinates of symmetric polys: coefficient of the sorted monomial
    def coords(p):
        vec = []
        for m in basis:
            mono = [(_tvar(i + 1), e) for i, e in enumerate(m) if e]
            vec.append(p.coeff_of(mono))
        return vec

    msyms = {m: _monomial_symmetric(m, rank) for m in basis}
    target = _lb_eigenvalue(lam, rank, alpha)
    # unknowns c_m with c_lam = 1: rows (LB - target) applied, plus pin
    rows = []
    rhs = []
    images = {m: coords(_lb_operator(msyms[m], rank, alpha)
                        - msyms[m] * target) for m in basis}
    for bi in range(len(basis)):
        rows.append([images[m][bi] for m in basis])
        rhs.append(Fraction(0))
    lamkey = tuple(lam) + (0,) * (rank - len(lam))
    lamkey = tuple(sorted(lamkey, reverse=True))
    pin = [Fraction(1) if m == lamkey else Fraction(0) for m in basis]
    rows.append(pin)
    rhs.append(Fraction(1))
    sol = frac_solve_least(rows, rhs)
    out = MultiPoly()
    for cm, m in zip(sol, basis):
        if cm != 0:
            out = out + msyms[m] * cm
    assert (_lb_operator(out, rank, alpha) - out * target).is_zero(), \
        "eigenvector solve left a residual"
    _jack_cache[key] = out
    return out


_phi_cache = {}


def jack_phi_tilde(m, d, rank):
    """Spherical polynomial normalized so that summing over all partitions
    of each weight reproduces the exponential of the first power sum."""
    m = trim(m)
    key = (m, d, rank)
    if key in _phi_cache:
        return _phi_cache[key]
    weight = sum(m)
    basis = [mm for mm in partitions_of(weight, rank)]
    if m not in [trim(b) for b in basis] and weight > 0:
        return MultiPoly()
    ps = {b: _jack_p(b, rank, d) for b in basis}
    # expand target (t1+...+tr)^weight / weight!
    p1 = MultiPoly()
    for i in range(1, rank + 1):
        p1 = p1 + MultiPoly.var(_tvar(i))
    fact = 1
    for t in range(2, weight + 1):
        fact *= t
    target = p1 ** weight * Fraction(1, fact)

    mono_basis = [tuple(b) for b in partitions_of(weight, rank)]

    def coords(p):
        vec = []
        for mm in mono_basis:
            mono = [(_tvar(i + 1), e) for i, e in enumerate(mm) if e]
            vec.append(p.coeff_of(mono))
        return vec

    rows_t = [coords(ps[b]) for b in basis]
    rows = [[rows_t[j][i] for j in range(len(basis))]
            for i in range(len(mono_basis))]
    sol = frac_solve_least(rows, coords(target))
    for gamma, b in zip(sol, basis):
        _phi_cache[(trim(b), d, rank)] = ps[b] * gamma
    return _phi_cache[key]


# d = 2 cross-check route, independent of the differential operator

def schur_poly(m, rank):
    """Schur polynomial via the determinant of complete homogeneous sums."""
    m = trim(m)
    if len(m) > rank:
        return MultiPoly()
    hs = {}

    def hfull(k):
        if k in hs:
            return hs[k]
        if k < 0:
            out = MultiPoly()
        elif k == 0:
            out = MultiPoly.const(1)
        else:
            out = MultiPoly()
            for mm in partitions_of(k, rank):
                out = out + _monomial_symmetric(mm, rank)
        hs[k] = out
        return out

    n = len(m) if m else 1
    if not m:
        return MultiPoly.const(1)
    grid = [[hfull(m[i] - (i + 1) + (j + 1)) for j in range(n)]
            for i in range(n)]
    from .matrixops import det_poly
    return det_poly(grid)


def schur_phi_tilde(m, rank):
    """Normalized d = 2 spherical polynomial in closed form."""
    m = trim(m)
    padded = tuple(m) + (0,) * (rank - len(m))
    num = Fraction(1)
    for i in range(rank):
        for j in range(i + 1, rank):
            num *= padded[i] - padded[j] - (i + 1) + (j + 1)
    den = Fraction(1)
    for i in range(rank):
        f = 1
        for t in range(2, padded[i] + rank - (i + 1) + 1):
            f *= t
        den *= f
    return schur_poly(m, rank) * (num / den)


# ---------------------------------------------------------------------------
# trace coordinates
# ---------------------------------------------------------------------------

def _pvar(j):
    return ("p", 1, j)


def trace_coordinate_poly(f, rank):
    """Rewrite a symmetric polynomial in t_1..t_rank as a polynomial in the
    power sums p_1..p_rank, solving degree by degree."""
    pieces = {}
    for k, c in f.terms.items():
        d = sum(e for _, e in k)
        pieces.setdefault(d, {})[k] = c
    psums = {j: MultiPoly() for j in range(1, rank + 1)}
    for j in range(1, rank + 1):
        for i in range(1, rank + 1):
            psums[j] = psums[j] + MultiPoly.var(_tvar(i), j)
    out = MultiPoly()
    for deg, terms in sorted(pieces.items()):
        piece = MultiPoly(terms)
        if deg == 0:
            out = out + piece
            continue
        # weighted exponent vectors: sum j e_j = deg
        combos = []

        def rec(j, rem, acc):
            if j > rank:
                if rem == 0:
                    combos.append(tuple(acc))
                return
            for e in range(rem // j + 1):
                rec(j + 1, rem - j * e, acc + [e])

        rec(1, deg, [])
        prods = []
        for combo in combos:
            p = MultiPoly.const(1)
            for j, e in enumerate(combo, start=1):
                if e:
                    p = p * psums[j] ** e
            prods.append(p)
        mono_basis = [tuple(mm) for mm in partitions_of(deg, rank)]

        def coords(p):
            return [p.coeff_of([(_tvar(i + 1), e) for i, e in enumerate(mm)
                                if e]) for mm in mono_basis]

        cols = [coords(p) for p in prods]
        rows = [[cols[j][i] for j in range(len(prods))]
                for i in range(len(mono_basis))]
        sol = frac_solve_least(rows, coords(piece))
        for cv, combo in zip(sol, combos):
            if cv == 0:
                continue
            out = out + MultiPoly.monomial(
                [(_pvar(j), e) for j, e in enumerate(combo, start=1) if e], cv)
    return out


def eval_trace_poly(tp, power_traces):
    """Evaluate a power sum polynomial given MultiPoly values for each p_j."""
    out = MultiPoly()
    for k, c in tp.terms.items():
        term = MultiPoly.const(c)
        for (g, _, j), e in k:
            assert g == "p"
            term = term * power_traces[j] ** e
        out = out + term
    return out


def phi_matrix_eval(m, d, rank, a_mat, trace_scale):
    """Phi tilde of a symbolic matrix argument through its power traces:
    p_j -> trace_scale * Tr(a_mat^j)."""
    phi = jack_phi_tilde(m, d, rank)
    tp = trace_coordinate_poly(phi, rank)
    traces = {}
    power = a_mat
    for j in range(1, rank * max(1, sum(m)) + 1):
        if j > 1:
            power = mat_mul(power, a_mat)
        tr = MultiPoly()
        for i in range(len(power)):
            tr = tr + power[i][i]
        traces[j] = tr * Fraction(trace_scale)
        if j >= rank:
            needed = {jj for k in tp.terms for (g, _, jj), e in k}
            if all(jj <= j for jj in needed):
                break
    return eval_trace_poly(tp, traces)


# ---------------------------------------------------------------------------
# reproducing kernels per partition
# ---------------------------------------------------------------------------

_kernel_cache = {}


def repkernel_K(dom, m, xgroup="x", ygroup="y", xsupport=None, ysupport=None):
    """Reproducing kernel of the Fischer product on one component.

    Matrix kinds go through the spherical trace functional evaluated on
    x y*; the quadric kind is solved linearly from the expansion of the
    generic norm power.  The ygroup variables are conjugated coordinates."""
    key = (dom.kind, dom.sizes, trim(m), xgroup, ygroup,
           tuple(sorted(xsupport)) if xsupport else None,
           tuple(sorted(ysupport)) if ysupport else None)
    if key in _kernel_cache:
        return _kernel_cache[key]
    m = trim(m)
    if dom.kind == "QUADRIC":
        table = _quadric_kernels(dom, sum(m))
        out = table.get(m, MultiPoly())
        out = out.subs(_regroup_map(out, "X", xgroup))
        out = out.subs(_regroup_map(out, "Y", ygroup))
    else:
        x = dom.sym_matrix(xgroup, xsupport)
        y = dom.sym_matrix(ygroup, ysupport)
        ystar = dom.adjoint_symbolic(y)
        a = mat_mul(x, ystar)
        out = phi_matrix_eval(m, int(dom.mult_d), dom.rank, a,
                              Fraction(1, dom.eps))
    _kernel_cache[key] = out
    return out


def _regroup_map(p, old, new):
    return {v: MultiPoly.var((new, v[1], v[2]))
            for v in p.variables() if v[0] == old}


_quadric_tables = {}


def _quadric_kernels(dom, weight):
    """All kernels of one total degree for the quadric kind, by solving
    the generic norm expansion at enough rational parameter values."""
    key = (dom.sizes[0], weight)
    if key in _quadric_tables:
        return _quadric_tables[key]
    n = dom.sizes[0]
    x = dom.sym_matrix("X")
    y = dom.sym_matrix("Y")
    qxy = MultiPoly()
    qx = MultiPoly()
    qy = MultiPoly()
    for a, b in zip(x, y):
        qxy = qxy + a * b
        qx = qx + a * a
        qy = qy + b * b
    parts = [mm for mm in partitions_of(weight, 2)]
    # invariant basis q(x)^a q(y)^a q(x,y)^(weight-2a)
    amax = weight // 2
    inv = []
    for a in range(amax + 1):
        inv.append((qx * qy) ** a * qxy ** (weight - 2 * a))
    # coefficient extraction basis: x1^(weight-2a') x2^... use raw monomials
    mono_keys = set()
    for p in inv:
        mono_keys.update(p.terms.keys())
    mono_keys = sorted(mono_keys)

    def coords(p):
        return [p.terms.get(k, Fraction(0)) for k in mono_keys]

    lam_values = [Fraction(v) for v in range(weight + 3, weight + 3 + len(parts))]
    rows = []
    rhs = []
    half = Fraction(n - 2, 2)
    for lam in lam_values:
        # expansion coefficient of total degree `weight` in x of h^(-lam)
        hm = 2 * qxy - qx * qy
        acc = MultiPoly()
        pw = MultiPoly.const(1)
        fact = 1
        rising = Fraction(1)
        for t in range(weight + 1):
            if t > 0:
                pw = pw * hm
                fact *= t
                rising *= lam + t - 1
            acc = acc + pw * (rising / fact)
        target = MultiPoly({k: c for k, c in acc.terms.items()
                            if sum(e for v, e in k if v[0] == "X") == weight})
        tvec = coords(target)
        # unknowns: invariant-basis coordinates of each kernel; one block of
        # equations per parameter value
        pochs = []
        for mm in parts:
            val = Fraction(1)
            for tt in range(mm[0]):
                val *= lam + tt
            for tt in range(mm[1]):
                val *= lam - half + tt
            pochs.append(val)
        inv_coords = [coords(p) for p in inv]
        for i in range(len(mono_keys)):
            row = []
            for j in range(len(parts)):
                for a in range(amax + 1):
                    row.append(pochs[j] * inv_coords[a][i])
            rows.append(row)
            rhs.append(tvec[i])
    sol = frac_solve_least(rows, rhs)
    table = {}
    idx = 0
    for mm in parts:
        p = MultiPoly()
        for a in range(amax + 1):
            p = p + inv[a] * sol[idx]
            idx += 1
        table[trim(mm)] = p
    _quadric_tables[key] = table
    return table


# ---------------------------------------------------------------------------
# projections and weighted pairing
# ---------------------------------------------------------------------------

def hks_project(dom, f, m, group="x"):
    """Orthogonal projection of f onto the component of partition m within
    the given variable group; other variables pass through."""
    k = repkernel_K(dom, m, xgroup="__pr", ygroup=group)
    fr = f.subs({v: MultiPoly.var(("__pr", v[1], v[2]))
                 for v in f.variables() if v[0] == group})
    return _project_pair(dom, fr, k, group)


def _project_pair(dom, fr, k, group):
    """Pair fr against the kernel over the __pr slot, landing back in group."""
    gx = {}
    for key, c in k.terms.items():
        ing, outg = _split_key(key, "__pr")
        gx.setdefault(ing, []).append((outg, c))
    out = MultiPoly()
    for key, c in fr.terms.items():
        ing, outg = _split_key(key, "__pr")
        if ing not in gx:
            continue
        norm = _monomial_norm(dom, ing, "__pr")
        for rest, c2 in gx[ing]:
            merged = dict(outg)
            for v, e in rest:
                merged[v] = merged.get(v, 0) + e
            out = out + MultiPoly({tuple(sorted(merged.items())): c * c2 * norm})
    return out


def component_decomposition(dom, f, group="x", max_weight=None):
    """dict partition -> projection, covering every degree present in f."""
    degs = sorted({sum(e for v, e in k if v[0] == group)
                   for k in f.terms})
    out = {}
    for deg in degs:
        if max_weight is not None and deg > max_weight:
            continue
        for m in partitions_of(deg, dom.rank):
            pm = hks_project(dom, f, m, group)
            if not pm.is_zero():
                out[trim(m)] = out.get(trim(m), MultiPoly()) + pm
    return out


def weighted_inner(dom, f, g, group="x", param="nu"):
    """Parameter-weighted pairing: each component of partition m is scaled
    by the reciprocal rising factorial of the parameter.  Exact in the
    parameter; returns a rational function object."""
    from .param import PFrac
    total = PFrac.const(0)
    degs = sorted({sum(e for v, e in k if v[0] == group) for k in f.terms})
    for deg in degs:
        for m in partitions_of(deg, dom.rank):
            pf = hks_project(dom, f, m, group)
            if pf.is_zero():
                continue
            val = fischer_inner_scalar(dom, pf, g, group)
            if val == 0:
                continue
            poch = pochhammer([0] * dom.rank, m, dom.mult_d, param=param)
            total = total + PFrac.lift(val) / PFrac.lift(poch)
    return total
