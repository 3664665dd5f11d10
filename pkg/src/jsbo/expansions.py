"""Truncated expansions of generic norm powers and twisted kernels.

Three constructions live here.

expand_h_power computes the negative power of the generic norm two ways,
once by the plain binomial series and once as a sum of parameter rising
factorials times component reproducing kernels, checks the two agree as
polynomial identities in the parameter, and returns the structured form.

build_hat_kernel twists a polynomial K of the complementary-slot
coordinates by the quasi-inverse flow of the source slot: the negative
power of the generic norm times K evaluated at the projected
quasi-inverse, truncated in the conjugate variables.

coefficient_oracle expands the same twist on the restricted variable,
decomposes the conjugate dependence into source components, divides each
by the weighted-norm rising factorial of the source parameters, and
renames the conjugate variables into output variables.  The result is the
full symbol of the symmetry-breaking operator and serves as the reference
the closed-form operator builders are tested against.
"""

from fractions import Fraction

from .matrixops import det_poly, identity_poly, mat_mul, mat_sub, poly_sqrt_monic
from .param import ParamScalar, PFrac, parse_fraction, fraction_str, pochhammer
from .partitions import partitions_of, trim
from .poly import MultiPoly
from .spaces import hks_project


# ---------------------------------------------------------------------------
# dense single-parameter polynomial helpers (exponent -> Fraction)
# ---------------------------------------------------------------------------

def _lp_mul_linear(p, shift):
    """p(t) * (t + shift)."""
    out = {}
    shift = Fraction(shift)
    for d, c in p.items():
        out[d + 1] = out.get(d + 1, Fraction(0)) + c
        if shift:
            out[d] = out.get(d, Fraction(0)) + c * shift
    return {d: c for d, c in out.items() if c}


def _lp_scale(p, s):
    s = Fraction(s)
    if not s:
        return {}
    return {d: c * s for d, c in p.items()}


def _lp_from_scalar(ps, param):
    """Dense expansion of a ParamScalar with nonnegative multiplicities."""
    out = {0: Fraction(ps.c)}
    for (pname, shift), mult in ps.factors:
        if pname != param:
            raise ValueError("unexpected parameter %r" % (pname,))
        if mult < 0:
            raise ValueError("negative multiplicity in expansion scalar")
        for _ in range(mult):
            out = _lp_mul_linear(out, shift)
    return out


def _accumulate(acc, poly, lp):
    """acc[monomial key] += coeff * lp, as dense parameter polynomials."""
    for key, c in poly.terms.items():
        tgt = acc.setdefault(key, {})
        for d, cv in lp.items():
            v = tgt.get(d, Fraction(0)) + cv * c
            if v:
                tgt[d] = v
            else:
                tgt.pop(d, None)
        if not tgt:
            acc.pop(key, None)


# ---------------------------------------------------------------------------
# structured series
# ---------------------------------------------------------------------------

class ParamSeries:
    """Sum of parameter-coefficient times polynomial, truncated by degree.

    terms is a list of (label, coeff, MultiPoly); coeff is a ParamScalar
    for symbolic series or a Fraction when evaluated.
    """

    def __init__(self, label, trunc, terms, param="nu"):
        self.label = label
        self.trunc = trunc
        self.terms = list(terms)
        self.param = param

    def poly_at(self, lam):
        lam = parse_fraction(lam)
        out = MultiPoly()
        for _, coeff, p in self.terms:
            if isinstance(coeff, ParamScalar):
                coeff = coeff.evaluate({self.param: lam})
            out = out + p * coeff
        return out

    def poly_symbolic(self):
        out = MultiPoly()
        for _, coeff, p in self.terms:
            out = out + p * coeff
        return out

    def to_json(self):
        terms = []
        for label, coeff, p in self.terms:
            if isinstance(coeff, ParamScalar):
                cj = coeff.to_json()
            else:
                cj = fraction_str(coeff)
            terms.append({"label": list(label), "coeff": cj,
                          "poly": p.to_json()})
        return {"kind": "param_series", "label": self.label,
                "truncation": self.trunc, "param": self.param,
                "terms": terms}


class ExpansionMismatch(Exception):
    pass


def expand_h_power(dom, N, lam=None, param="nu"):
    """Structured expansion of the inverse generic norm power to total
    x-degree N, cross-checked against the direct binomial series.

    Both routes accumulate, per monomial, a dense polynomial in the
    parameter, so the comparison is an exact polynomial identity.  Raises
    ExpansionMismatch if the routes disagree.
    """
    from .spaces import repkernel_K

    h = dom.h_poly("x", "y")
    u = h - MultiPoly.const(1)
    direct = {}
    _accumulate(direct, MultiPoly.const(1), {0: Fraction(1)})
    upow = MultiPoly.const(1)
    cpoly = {0: Fraction(1)}
    for t in range(1, N + 1):
        upow = (upow * u).truncate_group("x", N)
        cpoly = _lp_scale(_lp_mul_linear(cpoly, t - 1), Fraction(-1, t))
        _accumulate(direct, upow, cpoly)

    structured = {}
    terms = []
    rank = dom.rank
    d = dom.mult_d
    for w in range(N + 1):
        for m in partitions_of(w, rank):
            km = repkernel_K(dom, m)
            if km.is_zero():
                continue
            poch = pochhammer([0] * rank, m, d, param=param)
            _accumulate(structured, km, _lp_from_scalar(poch, param))
            terms.append((trim(m), poch, km))
    if direct != structured:
        raise ExpansionMismatch(
            "direct and structured norm power expansions disagree "
            "for %s at degree %d" % (dom.name(), N))
    if lam is not None:
        lamv = parse_fraction(lam)
        terms = [(m, poch.evaluate({param: lamv}), km)
                 for (m, poch, km) in terms]
    return ParamSeries(dom.name(), N, terms, param=param)


# ---------------------------------------------------------------------------
# generic norm and twisted kernels over a pair
# ---------------------------------------------------------------------------

def generic_norm_poly(big, xmat, ymat, conj_group="y", trunc=None):
    """det(1 - x y*) based generic norm for symbolic block matrices; the
    y entries are conjugated coordinates placed at their big positions."""
    if big.kind == "QUADRIC":
        qx = MultiPoly()
        qy = MultiPoly()
        qxy = MultiPoly()
        for a, b in zip(xmat, ymat):
            qx = qx + a * a
            qy = qy + b * b
            qxy = qxy + a * b
        out = MultiPoly.const(1) - qxy * 2 + qx * qy
    else:
        ystar = big.adjoint_symbolic(ymat)
        n = len(xmat)
        dd = det_poly(mat_sub(identity_poly(n), mat_mul(xmat, ystar)))
        out = poly_sqrt_monic(dd) if big.kind == "SKEW" else dd
    if trunc is not None:
        out = out.truncate_group(conj_group, trunc)
    return out


def inv_power_series(h, lam, N, conj_group="y", param="nu"):
    """(h)^(-lam) as a series in h - 1, truncated in the conjugate group.

    Every term of h - 1 must carry positive conjugate degree, which makes
    the truncated series finite.  lam None gives symbolic coefficients.
    """
    u = (h - MultiPoly.const(1)).truncate_group(conj_group, N)
    if u.truncate_group(conj_group, 0) != MultiPoly():
        raise ValueError("norm minus one has a conjugate-free part")
    acc = MultiPoly.const(1)
    upow = MultiPoly.const(1)
    if lam is None:
        coeff = ParamScalar.const(1)
    else:
        lam = parse_fraction(lam)
        coeff = Fraction(1)
    for t in range(1, N + 1):
        upow = (upow * u).truncate_group(conj_group, N)
        if upow.is_zero():
            break
        if lam is None:
            coeff = coeff * ParamScalar.linear(t - 1, param=param) \
                * Fraction(-1, t)
        else:
            coeff = coeff * (lam + t - 1) * Fraction(-1, t)
        acc = acc + upow * coeff
    return acc


def _quasi_inverse(pair, xmat, ymat, N, conj_group="y"):
    big = pair.big
    if big.kind == "QUADRIC":
        return big.quasi_inverse_series_quadric(xmat, ymat, N, conj_group)
    ystar = big.adjoint_symbolic(ymat)
    return big.quasi_inverse_series(xmat, ystar, N, conj_group)


def build_hat_kernel(pair, lam, K, N, x_mode="full", param="nu"):
    """Twist of K by the source slot: inverse norm power times K at the
    projected quasi-inverse, truncated at conjugate degree N.

    x_mode "full" uses the whole big variable (group "z"); "p2" restricts
    to the complementary slot, whose entries are the c-variables.
    """
    if x_mode == "full":
        X = pair.x_all_full("z")
    elif x_mode == "p2":
        X = pair.x2_full("c")
    else:
        raise ValueError("x_mode must be 'full' or 'p2'")
    Y = pair.y1_full("y")
    h = generic_norm_poly(pair.big, X, Y, "y", N)
    hpow = inv_power_series(h, lam, N, "y", param=param)
    qi = _quasi_inverse(pair, X, Y, N, "y")
    pj = pair.proj2_full(qi)
    cs = pair.extract_p2(pj)
    Kc = K.subs(cs).truncate_group("y", N)
    return (hpow * Kc).truncate_group("y", N)


def source_components(pair, poly, budget, conj_group="y"):
    """Decompose the conjugate dependence of poly into products of source
    factor components.

    Returns a dict mapping tuples of partitions (one per factor) to the
    corresponding summand of poly.  Variables outside the conjugate group
    pass through as coefficients.
    """
    cur = {(): poly}
    for fac in pair.factors:
        fwd = {yv: MultiPoly.var(("__f", i, j))
               for yv, (i, j) in zip(fac.yvars, fac.coords)}
        back = {("__f", i, j): MultiPoly.var(yv)
                for yv, (i, j) in zip(fac.yvars, fac.coords)}
        nxt = {}
        for parts, p in cur.items():
            pr = p.subs(fwd)
            for w in range(budget + 1):
                for m in partitions_of(w, fac.dom.rank):
                    comp = hks_project(fac.dom, pr, m, "__f")
                    if comp.is_zero():
                        continue
                    key = parts + (trim(m),)
                    comp = comp.subs(back)
                    nxt[key] = nxt.get(key, MultiPoly()) + comp
        cur = nxt
    return cur


def coefficient_oracle(pair, lam, K, M, param="nu"):
    """Reference symbol of the symmetry-breaking operator.

    Expands the twisted kernel on the complementary slot to conjugate
    degree M, projects onto source components, divides by the source
    weighted-norm rising factorials, and renames conjugate variables to
    the output group "w".  lam None keeps the parameter symbolic.
    """
    T = build_hat_kernel(pair, lam, K, M, x_mode="p2", param=param)
    comps = source_components(pair, T, M, "y")
    out = MultiPoly()
    for parts, p in sorted(comps.items()):
        div = pair.divisor(parts, param=param)
        if lam is None:
            p = p * (PFrac.const(1) / PFrac.lift(div))
        else:
            p = p * (Fraction(1) / div.evaluate({param: parse_fraction(lam)}))
        out = out + p
    ren = {}
    for fac in pair.factors:
        for yv, wv in zip(fac.yvars, fac.wvars):
            ren[yv] = MultiPoly.var(wv)
    return out.subs(ren)
