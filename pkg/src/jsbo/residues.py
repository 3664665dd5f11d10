"""Pole structure of the coefficient families and their residues.

At special target weights the reciprocal rising factorials in an operator
family develop poles; rescaling by the vanishing power and passing to the
limit leaves a finite operator whose kernel contains an explicit
submodule, so it factors through the quotient.  The submodule of a source
domain at weight lam is spanned by the components whose i-th partition
row stays under the threshold (d/2)*(i-1) - lam.
"""

from fractions import Fraction

from .param import (DIVERGES, VANISHES, ParamScalar, PFrac, param_limit,
                    parse_fraction)
from .partitions import pad, partitions_upto
from .poly import MultiPoly
from .spaces import hks_project
from .operators import PolyOperator
from . import lie


class ResidueOrderError(Exception):
    pass


def component_threshold(dom, i, lam):
    """Largest allowed i-th row length inside the submodule at weight
    lam; rows beyond it put a component outside."""
    return Fraction(dom.mult_d) / 2 * (i - 1) - parse_fraction(lam)


def in_submodule(dom, i, lam, m):
    mm = pad(tuple(m), max(len(m), i))
    return Fraction(mm[i - 1]) <= component_threshold(dom, i, lam)


def submodule_partitions(dom, i, lam, max_weight):
    return [m for m in partitions_upto(dom.rank, max_weight)
            if in_submodule(dom, i, lam, m)]


def excluded_partitions(dom, i, lam, max_weight):
    return [m for m in partitions_upto(dom.rank, max_weight)
            if not in_submodule(dom, i, lam, m)]


def coeff_pole_order(c, at, param="nu"):
    """Pole order of one coefficient at param == at (0 for regular)."""
    if isinstance(c, (int, Fraction)):
        return 0
    if isinstance(c, ParamScalar):
        return max(0, -c.vanishing_order(at, param=param))
    if isinstance(c, PFrac):
        j = 0
        while j < 64:
            v = param_limit(c, at, j, param=param)
            if v is not DIVERGES:
                return j
            j += 1
        raise ResidueOrderError("pole order out of range")
    raise TypeError("unexpected coefficient %r" % type(c))


def pole_order(op, at, param="nu"):
    """Largest coefficient pole order of the operator family at the
    point; this is the structural order read off the denominators."""
    out = 0
    for c, _, _ in op.terms:
        out = max(out, coeff_pole_order(c, at, param=param))
    return out


def residue_operator(op, at, order, param="nu"):
    """Term-wise limit of (param - at)^order times the family.

    Terms whose limit vanishes drop out; a surviving pole means the
    requested order is too small and raises ResidueOrderError.
    """
    at = parse_fraction(at)
    terms = []
    for c, mult, diff in op.terms:
        if isinstance(c, (int, Fraction)):
            v = Fraction(c) if order == 0 else VANISHES
        else:
            v = param_limit(c, at, order, param=param)
        if v is VANISHES:
            continue
        if v is DIVERGES:
            raise ResidueOrderError("ORDER_TOO_SMALL")
        terms.append((v, mult, diff))
    meta = dict(op.meta)
    meta.update({"residue_at": str(at), "residue_order": order})
    return PolyOperator(terms, meta)


def vanishes_on(op, polys):
    """True when the operator kills every polynomial in the family."""
    return all(op.apply(f).is_zero() for f in polys)


def component_monomial_spanning(dom, parts, max_degree, group="x"):
    """Spanning polynomials of the chosen components up to max_degree,
    obtained by projecting all coordinate monomials."""
    from .operators import _dom_monomials

    out = []
    for f in _dom_monomials(dom, group, max_degree):
        deg = f.degree()
        for m in parts:
            if sum(m) != deg:
                continue
            p = hks_project(dom, f, m, group)
            if not p.is_zero():
                out.append(p)
    return out


def filtration_check(dom, lam, i, max_degree, group="x"):
    """The lowering action preserves the submodule: every component
    inside it lands back inside after one application.

    Checks all spanning elements up to max_degree against all basis
    lowering directions; raises AssertionError on the first escape.
    """
    lam = parse_fraction(lam)
    good = submodule_partitions(dom, i, lam, max_degree)
    bad = excluded_partitions(dom, i, lam, max_degree + 1)
    fs = component_monomial_spanning(dom, good, max_degree, group)
    checked = 0
    for coord in dom.free_coords():
        el = lie.minus({coord: Fraction(1)})
        for f in fs:
            g = lie.dpi_apply(dom, group, lam, el, f)
            for m in bad:
                if sum(m) > max_degree + 1:
                    continue
                if not hks_project(dom, g, m, group).is_zero():
                    raise AssertionError(
                        "lowering escapes the submodule at %s via %s"
                        % (m, coord))
            checked += 1
    return checked
