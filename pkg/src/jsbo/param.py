"""Exact scalars depending on formal parameters.

Two representations live here.  ParamScalar is a product
c * prod_i (param_i + shift_i)^mult_i with rational c and rational shifts;
it multiplies and divides cheaply and its factored form is what the limit
machinery inspects.  PFrac is a full rational function in several
parameters, used whenever sums of ParamScalars are unavoidable (collected
operator coefficients, intertwining checks with symbolic parameters).
Adding two ParamScalars silently promotes to PFrac.
"""

from fractions import Fraction


def parse_fraction(s):
    """Accept 'p/q' or 'p' strings, ints, or Fractions."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def fraction_str(f):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


class LimitResult:
    """Sentinel outcomes of a parameter limit."""

    def __init__(self, tag):
        self.tag = tag

    def __repr__(self):
        return self.tag

    def __eq__(self, other):
        return isinstance(other, LimitResult) and self.tag == other.tag

    def __hash__(self):
        return hash(("LimitResult", self.tag))


VANISHES = LimitResult("VANISHES")
DIVERGES = LimitResult("DIVERGES")


class ParamScalar:
    """c * prod (param + shift)^mult, kept in factored form.

    factors is a tuple of ((param, shift), mult) sorted by key, with
    nonzero integer mults.  The zero scalar is c == 0 with empty factors.
    """

    __slots__ = ("c", "factors")

    def __init__(self, c=1, factors=()):
        c = parse_fraction(c)
        if c == 0:
            factors = ()
        else:
            merged = {}
            for key, mult in factors:
                param, shift = key
                key = (param, parse_fraction(shift))
                merged[key] = merged.get(key, 0) + mult
            factors = tuple(sorted((k, m) for k, m in merged.items() if m != 0))
        self.c = c
        self.factors = factors

    @classmethod
    def const(cls, c):
        return cls(c)

    @classmethod
    def linear(cls, shift, param="nu"):
        """The scalar (param + shift)."""
        return cls(1, (((param, parse_fraction(shift)), 1),))

    def is_zero(self):
        return self.c == 0

    def is_const(self):
        return not self.factors

    def __mul__(self, other):
        if isinstance(other, ParamScalar):
            if self.c == 0 or other.c == 0:
                return ParamScalar(0)
            return ParamScalar(self.c * other.c, self.factors + other.factors)
        if isinstance(other, (int, Fraction)):
            return ParamScalar(self.c * other, self.factors)
        if isinstance(other, PFrac):
            return PFrac.lift(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamScalar):
            if other.c == 0:
                raise ZeroDivisionError("division by zero scalar")
            inv = ParamScalar(Fraction(1, 1) / other.c,
                              tuple((k, -m) for k, m in other.factors))
            return self * inv
        if isinstance(other, (int, Fraction)):
            return ParamScalar(self.c / other, self.factors)
        if isinstance(other, PFrac):
            return PFrac.lift(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamScalar(other) / self
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return ParamScalar(1)
        if self.c == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of zero scalar")
            return ParamScalar(0)
        return ParamScalar(self.c ** n if n > 0 else Fraction(1) / self.c ** (-n),
                           tuple((k, m * n) for k, m in self.factors))

    def __neg__(self):
        return ParamScalar(-self.c, self.factors)

    def __add__(self, other):
        return PFrac.lift(self) + PFrac.lift(other)

    __radd__ = __add__

    def __sub__(self, other):
        return PFrac.lift(self) - PFrac.lift(other)

    def __rsub__(self, other):
        return PFrac.lift(other) - PFrac.lift(self)

    def __eq__(self, other):
        if isinstance(other, ParamScalar):
            return self.c == other.c and self.factors == other.factors
        if isinstance(other, (int, Fraction)):
            if self.c == 0:
                return other == 0
            return not self.factors and self.c == other
        if isinstance(other, PFrac):
            return PFrac.lift(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.c, self.factors))

    def params(self):
        return sorted({k[0] for k, _ in self.factors})

    def evaluate(self, assign):
        """Evaluate at a parameter assignment.

        assign may be a single Fraction (bound to 'nu') or a dict
        param -> value.  Negative-mult factors must not vanish there.
        """
        if not isinstance(assign, dict):
            assign = {"nu": parse_fraction(assign)}
        val = self.c
        for (param, shift), mult in self.factors:
            base = parse_fraction(assign[param]) + shift
            if base == 0 and mult < 0:
                raise ZeroDivisionError("pole at the evaluation point")
            val *= base ** mult
        return val

    def vanishing_order(self, at, param="nu"):
        """Signed order at param == at: positive is a zero, negative a pole."""
        at = parse_fraction(at)
        order = 0
        for (p, shift), mult in self.factors:
            if p == param and at + shift == 0:
                order += mult
        return order

    def leading_at(self, at, param="nu"):
        """Value of self / (param - at)^order at param == at (finite, nonzero)."""
        at = parse_fraction(at)
        if self.c == 0:
            return Fraction(0)
        val = self.c
        for (p, shift), mult in self.factors:
            if p == param and at + shift == 0:
                continue
            base = (at if p == param else _require_value(p)) + shift
            val *= base ** mult
        return val

    def to_json(self):
        out = {"c": fraction_str(self.c), "factors": []}
        for (param, shift), mult in self.factors:
            fac = {"shift": fraction_str(shift), "mult": mult}
            if param != "nu":
                fac["param"] = param
            out["factors"].append(fac)
        return out

    @classmethod
    def from_json(cls, data):
        factors = []
        for fac in data.get("factors", []):
            param = fac.get("param", "nu")
            factors.append(((param, parse_fraction(fac["shift"])), fac["mult"]))
        return cls(parse_fraction(data["c"]), factors)

    def __repr__(self):
        if self.c == 0:
            return "0"
        parts = [] if self.c == 1 and self.factors else [fraction_str(self.c)]
        for (param, shift), mult in self.factors:
            if shift == 0:
                base = param
            elif shift > 0:
                base = "(%s+%s)" % (param, fraction_str(shift))
            else:
                base = "(%s-%s)" % (param, fraction_str(-shift))
            parts.append(base if mult == 1 else "%s^%d" % (base, mult))
        return "*".join(parts) if parts else "1"


def _require_value(param):
    raise ValueError("parameter %r has no value in this single-parameter limit" % param)


def pochhammer(shifts, m, d, param="nu"):
    """Multi-row rising factorial in factored form.

    shifts lists a rational offset per row, m is a partition (weakly
    decreasing, may be shorter than shifts; missing rows mean 0), d is the
    even-multiplicity style parameter.  Row j (1-based) contributes the
    ordinary rising factorial of (param + shifts[j-1] - (d/2)(j-1)) of
    length m[j-1].
    """
    d = parse_fraction(d)
    factors = []
    for j, base_shift in enumerate(shifts):
        mj = m[j] if j < len(m) else 0
        row = parse_fraction(base_shift) - d / 2 * j
        for t in range(mj):
            factors.append(((param, row + t), 1))
    return ParamScalar(1, factors)


def param_limit(ps, at, order, param="nu"):
    """Limit of (param - at)^order * ps as param -> at.

    Returns a Fraction, or VANISHES when the limit is zero because the
    factored zero order exceeds -order, or DIVERGES when poles survive.
    """
    if isinstance(ps, PFrac):
        return ps.param_limit(at, order, param=param)
    if ps.c == 0:
        return VANISHES if order >= 0 else DIVERGES
    v = ps.vanishing_order(at, param=param)
    total = v + order
    if total > 0:
        return VANISHES
    if total < 0:
        return DIVERGES
    return ps.leading_at(at, param=param)


# ---------------------------------------------------------------------------
# dense multivariate rational functions in the parameters
# ---------------------------------------------------------------------------

def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, 0) + ca * cb
            if c == 0:
                out.pop(e, None)
            else:
                out[e] = c
    return out


def _poly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        c2 = out.get(e, 0) + c
        if c2 == 0:
            out.pop(e, None)
        else:
            out[e] = c2
    return out


def _poly_scale(a, s):
    if s == 0:
        return {}
    return {e: c * s for e, c in a.items()}


def _poly_eval(a, vals):
    tot = Fraction(0)
    for e, c in a.items():
        term = c
        for x, k in zip(vals, e):
            term *= x ** k
        tot += term
    return tot


def _poly_reindex(a, old_params, new_params):
    pos = [new_params.index(p) for p in old_params]
    out = {}
    for e, c in a.items():
        ne = [0] * len(new_params)
        for p, k in zip(pos, e):
            ne[p] = k
        out[tuple(ne)] = c
    return out


class PFrac:
    """Exact rational function num/den in named parameters.

    num and den are dicts exponent-tuple -> Fraction over self.params
    (sorted names).  No gcd cancellation is attempted; equality goes
    through cross multiplication, which stays exact.
    """

    __slots__ = ("params", "num", "den")

    def __init__(self, params, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.params = tuple(params)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        c = parse_fraction(c)
        num = {(): c} if c != 0 else {}
        return cls((), num, {(): Fraction(1)})

    @classmethod
    def lift(cls, x):
        if isinstance(x, PFrac):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, ParamScalar):
            params = tuple(x.params())
            one = tuple([0] * len(params))
            num = {one: x.c} if x.c != 0 else {}
            den = {one: Fraction(1)}
            for (param, shift), mult in x.factors:
                idx = params.index(param)
                e = list(one)
                e[idx] = 1
                lin = {tuple(e): Fraction(1)}
                if shift != 0:
                    lin[one] = shift
                for _ in range(abs(mult)):
                    if mult > 0:
                        num = _poly_mul(num, lin)
                    else:
                        den = _poly_mul(den, lin)
            return cls(params, num, den)
        raise TypeError("cannot lift %r" % type(x))

    def _align(self, other):
        other = PFrac.lift(other)
        if self.params == other.params:
            return self, other
        params = tuple(sorted(set(self.params) | set(other.params)))
        a = PFrac(params, _poly_reindex(self.num, self.params, list(params)),
                  _poly_reindex(self.den, self.params, list(params)))
        b = PFrac(params, _poly_reindex(other.num, other.params, list(params)),
                  _poly_reindex(other.den, other.params, list(params)))
        return a, b

    def is_zero(self):
        return not self.num

    def __add__(self, other):
        if not isinstance(other, (PFrac, ParamScalar, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        num = _poly_add(_poly_mul(a.num, b.den), _poly_mul(b.num, a.den))
        return PFrac(a.params, num, _poly_mul(a.den, b.den))

    __radd__ = __add__

    def __neg__(self):
        return PFrac(self.params, _poly_scale(self.num, Fraction(-1)), self.den)

    def __sub__(self, other):
        return self + (-PFrac.lift(other))

    def __rsub__(self, other):
        return PFrac.lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (PFrac, ParamScalar, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return PFrac(self.params, _poly_scale(self.num, parse_fraction(other)),
                         self.den)
        a, b = self._align(other)
        return PFrac(a.params, _poly_mul(a.num, b.num), _poly_mul(a.den, b.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._align(other)
        if not b.num:
            raise ZeroDivisionError("division by zero rational function")
        return PFrac(a.params, _poly_mul(a.num, b.den), _poly_mul(a.den, b.num))

    def __rtruediv__(self, other):
        return PFrac.lift(other) / self

    def __eq__(self, other):
        if not isinstance(other, (PFrac, ParamScalar, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        return _poly_mul(a.num, b.den) == _poly_mul(b.num, a.den)

    def __hash__(self):
        raise TypeError("PFrac is unhashable")

    def evaluate(self, assign):
        if not isinstance(assign, dict):
            assign = {"nu": parse_fraction(assign)}
        vals = [parse_fraction(assign[p]) for p in self.params]
        den = _poly_eval(self.den, vals)
        if den == 0:
            raise ZeroDivisionError("pole at the evaluation point")
        return _poly_eval(self.num, vals) / den

    def param_limit(self, at, order, param="nu"):
        """Same contract as the module-level param_limit, along one parameter.

        Any other parameters must not actually occur.
        """
        at = parse_fraction(at)
        if self.is_zero():
            return VANISHES if order >= 0 else DIVERGES
        if param in self.params:
            idx = self.params.index(param)
        else:
            idx = None
        others = [p for p in self.params if p != param]
        if others:
            for e in list(self.num) + list(self.den):
                for p, k in zip(self.params, e):
                    if p != param and k != 0:
                        raise ValueError("limit along %r but %r occurs" % (param, p))

        def shifted(poly):
            # rewrite as polynomial in t = param - at, return (order, leading)
            out = {}
            for e, c in poly.items():
                k = e[idx] if idx is not None else 0
                # (t + at)^k
                for t in range(k + 1):
                    binom = _binomial(k, t)
                    c2 = c * binom * at ** (k - t)
                    if c2 != 0:
                        out[t] = out.get(t, Fraction(0)) + c2
            out = {t: c for t, c in out.items() if c != 0}
            if not out:
                return None, Fraction(0)
            t0 = min(out)
            return t0, out[t0]

        nt, nc = shifted(self.num)
        dt, dc = shifted(self.den)
        if nt is None:
            return VANISHES if order >= 0 else DIVERGES
        total = nt - dt + order
        if total > 0:
            return VANISHES
        if total < 0:
            return DIVERGES
        return nc / dc

    def to_json(self):
        def side(poly):
            return [[list(e), fraction_str(c)]
                    for e, c in sorted(poly.items())]
        return {"kind": "pfrac", "params": list(self.params),
                "num": side(self.num), "den": side(self.den)}

    @classmethod
    def from_json(cls, data):
        def side(rows):
            return {tuple(e): parse_fraction(c) for e, c in rows}
        return cls(tuple(data["params"]), side(data["num"]), side(data["den"]))

    def __repr__(self):
        return "PFrac(%r, num=%d terms, den=%d terms)" % (
            list(self.params), len(self.num), len(self.den))


def _binomial(n, k):
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out
