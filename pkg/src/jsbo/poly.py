"""Sparse multivariate polynomials over exact coefficient rings.

Variables are tuples (group, i, j) so that matrix entries from several
coordinate blocks ("x", "y", "w", block labels like "x11") coexist in one
polynomial.  Keys are canonically sorted tuples of (var, exponent) pairs;
coefficients are Fractions by default but anything with ring arithmetic
(ParamScalar, PFrac) works, with ParamScalar sums promoting to PFrac.
"""

from fractions import Fraction

from .param import ParamScalar, PFrac, parse_fraction, fraction_str


def var_name(v):
    return "%s[%d,%d]" % v


def parse_var(s):
    group, rest = s.split("[", 1)
    i, j = rest.rstrip("]").split(",")
    return (group, int(i), int(j))


def _iszero(c):
    if isinstance(c, Fraction) or isinstance(c, int):
        return c == 0
    if isinstance(c, ParamScalar):
        return c.is_zero()
    if isinstance(c, PFrac):
        return c.is_zero()
    return c == 0


def _key_mul(ka, kb):
    d = dict(ka)
    for v, e in kb:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class MultiPoly:
    """terms: dict canonical-key -> coefficient.  The empty key () is the
    constant term.  Instances behave as immutable values."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @classmethod
    def const(cls, c):
        if isinstance(c, (int, str)):
            c = parse_fraction(c)
        if _iszero(c):
            return cls()
        return cls({(): c})

    @classmethod
    def var(cls, v, exp=1, coeff=Fraction(1)):
        if exp == 0:
            return cls.const(coeff)
        return cls({((v, exp),): coeff})

    @classmethod
    def monomial(cls, vars_exps, coeff=Fraction(1)):
        """vars_exps: iterable of (var, exponent)."""
        key = {}
        for v, e in vars_exps:
            if e:
                key[v] = key.get(v, 0) + e
        if _iszero(coeff):
            return cls()
        return cls({tuple(sorted(key.items())): coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("MultiPoly is unhashable")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                s = out[k] + c
                if _iszero(s):
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            out = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    k = _key_mul(ka, kb)
                    c = ca * cb
                    if k in out:
                        c = out[k] + c
                    if _iszero(c):
                        out.pop(k, None)
                    else:
                        out[k] = c
            return MultiPoly(out)
        # scalar
        if _iszero(other):
            return MultiPoly()
        return MultiPoly({k: c * other for k, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c):
        return self * c

    def coeff_of(self, vars_exps):
        key = tuple(sorted((v, e) for v, e in vars_exps if e))
        return self.terms.get(key, Fraction(0))

    def variables(self):
        vs = set()
        for k in self.terms:
            for v, _ in k:
                vs.add(v)
        return sorted(vs)

    def groups(self):
        return sorted({v[0] for v in self.variables()})

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e for _, e in k) for k in self.terms)

    def group_degree(self, group):
        best = -1
        for k in self.terms:
            d = sum(e for v, e in k if v[0] == group)
            best = max(best, d)
        return best

    def homogeneous_part(self, deg, group=None):
        out = {}
        for k, c in self.terms.items():
            d = sum(e for v, e in k if group is None or v[0] == group)
            if d == deg:
                out[k] = c
        return MultiPoly(out)

    def split_by_group_degree(self, group):
        """dict deg -> MultiPoly summand, grading only the given group."""
        parts = {}
        for k, c in self.terms.items():
            d = sum(e for v, e in k if v[0] == group)
            parts.setdefault(d, {})[k] = c
        return {d: MultiPoly(t) for d, t in sorted(parts.items())}

    def truncate_group(self, groups, maxdeg):
        """Drop terms whose total degree in the listed groups exceeds maxdeg."""
        if isinstance(groups, str):
            groups = (groups,)
        gs = set(groups)
        out = {}
        for k, c in self.terms.items():
            if sum(e for v, e in k if v[0] in gs) <= maxdeg:
                out[k] = c
        return MultiPoly(out)

    def diff(self, v, order=1):
        out = self
        for _ in range(order):
            nxt = {}
            for k, c in out.terms.items():
                kd = dict(k)
                e = kd.get(v, 0)
                if e == 0:
                    continue
                c2 = c * e
                if e == 1:
                    del kd[v]
                else:
                    kd[v] = e - 1
                key = tuple(sorted(kd.items()))
                if key in nxt:
                    c2 = nxt[key] + c2
                if _iszero(c2):
                    nxt.pop(key, None)
                else:
                    nxt[key] = c2
            out = MultiPoly(nxt)
        return out

    def subs(self, mapping):
        """Substitute vars by MultiPoly (or constant) values; unmapped vars stay."""
        out = MultiPoly()
        for k, c in self.terms.items():
            term = MultiPoly.const(1) * c
            for v, e in k:
                if v in mapping:
                    repl = mapping[v]
                    if not isinstance(repl, MultiPoly):
                        repl = MultiPoly.const(repl)
                    term = term * repl ** e
                else:
                    term = term * MultiPoly.var(v, e)
            out = out + term
        return out

    def evaluate(self, assign):
        """Full evaluation; every variable of self must appear in assign."""
        tot = None
        for k, c in self.terms.items():
            val = c
            for v, e in k:
                val = val * parse_fraction(assign[v]) ** e
            tot = val if tot is None else tot + val
        if tot is None:
            return Fraction(0)
        return tot

    def map_coeff(self, fn):
        out = {}
        for k, c in self.terms.items():
            c2 = fn(c)
            if not _iszero(c2):
                out[k] = c2
        return MultiPoly(out)

    def rename_group(self, old, new):
        out = {}
        for k, c in self.terms.items():
            exps = {}
            for (g, i, j), e in k:
                v = (new, i, j) if g == old else (g, i, j)
                exps[v] = exps.get(v, 0) + e
            key = tuple(sorted(exps.items()))
            if key in out:
                out[key] = out[key] + c
                if _iszero(out[key]):
                    del out[key]
            else:
                out[key] = c
        return MultiPoly(out)

    def conj_coeffs(self):
        """Identity on Fraction coefficients; placeholder for honest reals."""
        return self

    def to_json(self):
        """Deterministic layout: sorted variable list, graded lex term order.

        Only exact rational coefficients serialize through this form.
        """
        vs = self.variables()
        rows = []
        for k, c in self.terms.items():
            kd = dict(k)
            exps = [kd.get(v, 0) for v in vs]
            rows.append((sum(exps), exps, c))
        rows.sort(key=lambda r: (r[0], r[1]))
        return {
            "vars": [var_name(v) for v in vs],
            "terms": [{"coeff": fraction_str(c), "exps": exps}
                      for _, exps, c in rows],
        }

    @classmethod
    def from_json(cls, data):
        vs = [parse_var(s) for s in data["vars"]]
        terms = {}
        for t in data["terms"]:
            key = tuple(sorted((v, e) for v, e in zip(vs, t["exps"]) if e))
            terms[key] = parse_fraction(t["coeff"])
        return cls(terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=lambda k: (sum(e for _, e in k), k)):
            c = self.terms[k]
            mono = "*".join("%s^%d" % (var_name(v), e) if e > 1 else var_name(v)
                            for v, e in k)
            if not mono:
                bits.append(repr(c) if not isinstance(c, Fraction) else fraction_str(c))
            else:
                cs = fraction_str(c) if isinstance(c, Fraction) else "(%r)" % (c,)
                bits.append(mono if cs == "1" else "%s*%s" % (cs, mono))
        return " + ".join(bits)


def poly_diff(p, v, order=1):
    """Partial derivative, as a free function for symmetry with compose."""
    return p.diff(v, order)


def poly_compose_linear(p, mapping):
    """Precompose with a linear (affine allowed) change of variables.

    mapping sends variables to MultiPoly values; variables not mentioned
    are left alone.
    """
    return p.subs(mapping)


def apply_diff_monomial(p, diff_exps):
    """Apply prod d^e/dv^e for (var, e) pairs."""
    out = p
    for v, e in diff_exps:
        out = out.diff(v, e)
        if out.is_zero():
            break
    return out
