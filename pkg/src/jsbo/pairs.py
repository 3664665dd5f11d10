"""Geometry of the implemented symmetric pairs.

Each pair embeds a product (or single) source domain into a larger domain as
the fixed blocks of an involution, with the complementary blocks carrying the
multiplication slot of the holographic operators.  A PairSpec packages:

  - the big domain and the source factor domains,
  - symbolic placement of source variables (group "y" for conjugate slots,
    canonical groups "a"/"b" for function arguments) and of the
    complementary-slot variables (group "c"),
  - the projection onto the complementary blocks and the coordinate
    extraction inverse to it,
  - the determinant/Pfaffian/quadric prefactor with its exponents k, l,
  - the parameter bookkeeping: source weights as affine functions of the
    target parameter, and the Fischer pullback weight of each source
    coordinate,
  - Lie algebra generators of the symmetric subalgebra for intertwining
    checks.

Variable naming: big coordinates live in group "z".  For block-diagonal
pairs the "c"/"y" variables keep their big indices; for the transpose-type
pairs (symmetric/antisymmetric matrix split) and the quadric split they use
the source-canonical indices.
"""

from fractions import Fraction

from .domains import DomainSpec
from .matrixops import mat_mul
from .poly import MultiPoly
from . import lie
from .param import ParamScalar, pochhammer


class UnsupportedPairError(Exception):
    pass


PAIR_IDS = ("SP_SPSP", "U_UU", "SOST_SOSTSOST", "SP_U", "SOST_U",
            "SU_SP", "SU_SOST", "SU33_SOST6", "SO_SOSO", "U_NORMAL")

CLI_NAMES = {
    "sp-spsp": "SP_SPSP",
    "u-uu": "U_UU",
    "sost-sostsost": "SOST_SOSTSOST",
    "sp-u": "SP_U",
    "sost-u": "SOST_U",
    "su-sp": "SU_SP",
    "su-sost": "SU_SOST",
    "su33-sost6": "SU33_SOST6",
    "so-soso": "SO_SOSO",
    "u-normal": "U_NORMAL",
}


class FactorSpec:
    """One source factor: domain, canonical variables, and the affine map
    nu -> lam_scale*nu + lam_shift giving its weight.

    weights are the intrinsic Fischer weights of the factor domain; the
    dual pairing between conjugate slots and source derivatives runs
    through them."""

    def __init__(self, dom, group, lam_scale, lam_shift):
        self.dom = dom
        self.group = group
        self.lam_scale = Fraction(lam_scale)
        self.lam_shift = Fraction(lam_shift)
        self.coords = dom.free_coords()
        self.cvars = [(group, i, j) for (i, j) in self.coords]
        self.weights = [Fraction(dom.weight(c)) for c in self.coords]

    def lam_value(self, nu):
        return self.lam_scale * nu + self.lam_shift

    def divisor(self, m, param="nu"):
        """Weighted-norm Pochhammer of one component, as a ParamScalar.

        The factor base is lam_scale*nu + lam_shift; a scale-a monic
        rewrite a*(nu + shift/a) keeps the factored form exact.
        """
        d = self.dom.mult_d
        rank = self.dom.rank
        mm = tuple(m) + (0,) * (rank - len(m))
        out = ParamScalar.const(1)
        for row in range(rank):
            base = self.lam_shift - Fraction(d) / 2 * row
            for t in range(mm[row]):
                if self.lam_scale == 1:
                    out = out * ParamScalar.linear(base + t, param=param)
                else:
                    out = out * (ParamScalar.linear(
                        (base + t) / self.lam_scale, param=param)
                        * self.lam_scale)
        return out


def _zeros(rows, cols):
    return [[MultiPoly() for _ in range(cols)] for _ in range(rows)]


def _v(g, i, j):
    return MultiPoly.var((g, i, j))


class PairSpec:
    def __init__(self, pair_id, sizes, k=0, l=0):
        if pair_id not in PAIR_IDS:
            raise UnsupportedPairError("UNSUPPORTED pair id %r" % (pair_id,))
        self.pair_id = pair_id
        self.sizes = tuple(int(x) for x in sizes)
        self.k = int(k)
        self.l = int(l)
        if self.k < 0 or self.l < 0:
            raise UnsupportedPairError("UNSUPPORTED: negative prefactor power")
        self.residue_family = None
        build = getattr(self, "_build_" + pair_id.lower())
        build()
        self._assign_conj_vars()

    def _assign_conj_vars(self):
        """Align conjugate-slot ("y") and oracle-output ("w") variable names
        with each factor's canonical coordinates."""
        if self.pair_id in ("SU_SP", "SU_SOST", "SU33_SOST6"):
            embs = [lambda i, j: (i, j)]
        else:
            embs = self._factor_embeds()
        for fac, emb in zip(self.factors, embs):
            fac.yvars = [("y",) + tuple(emb(i, j)) for (i, j) in fac.coords]
            fac.wvars = [("w",) + tuple(emb(i, j)) for (i, j) in fac.coords]

    # -- constructors per pair ------------------------------------------

    def _build_sp_spsp(self):
        s1, s2 = self.sizes
        if self.k and s1 != s2:
            raise UnsupportedPairError("UNSUPPORTED: k>0 needs equal blocks")
        if self.l:
            raise UnsupportedPairError("UNSUPPORTED: no second power here")
        self.big = DomainSpec("SYM", (s1 + s2,))
        f1 = DomainSpec("SYM", (s1,))
        f2 = DomainSpec("SYM", (s2,))
        self.factors = [
            FactorSpec(f1, "a", 1, self.k),
            FactorSpec(f2, "b", 1, self.k),
        ]
        self.cvars = [("c", i, s1 + j) for i in range(1, s1 + 1)
                      for j in range(1, s2 + 1)]
        self.p1_big = [(i, j) for (i, j) in self.big.free_coords()
                       if (j <= s1) or (i > s1)]
        self.p2_big = [(i, j) for (i, j) in self.big.free_coords()
                       if i <= s1 < j]

    def _build_u_uu(self):
        q1, s1, q2, s2 = self.sizes
        if self.k and q1 != s2:
            raise UnsupportedPairError("UNSUPPORTED: k>0 needs q'=s''")
        if self.l and q2 != s1:
            raise UnsupportedPairError("UNSUPPORTED: l>0 needs q''=s'")
        self.big = DomainSpec("MAT", (q1 + q2, s1 + s2))
        f1 = DomainSpec("MAT", (q1, s1))
        f2 = DomainSpec("MAT", (q2, s2))
        sh = self.k + self.l
        self.factors = [
            FactorSpec(f1, "a", 1, sh),
            FactorSpec(f2, "b", 1, sh),
        ]
        self.cvars = ([("c", i, s1 + j) for i in range(1, q1 + 1)
                       for j in range(1, s2 + 1)] +
                      [("c", q1 + i, j) for i in range(1, q2 + 1)
                       for j in range(1, s1 + 1)])
        self.p1_big = ([(i, j) for i in range(1, q1 + 1)
                        for j in range(1, s1 + 1)] +
                       [(q1 + i, s1 + j) for i in range(1, q2 + 1)
                        for j in range(1, s2 + 1)])
        self.p2_big = [(i, j) for (i, j) in (c[1:] for c in self.cvars)]
        self.residue_family = ("U", q1)

    def _build_sost_sostsost(self):
        s1, s2 = self.sizes
        if self.k and s1 != s2:
            raise UnsupportedPairError("UNSUPPORTED: k>0 needs equal blocks")
        if self.l:
            raise UnsupportedPairError("UNSUPPORTED: no second power here")
        self.big = DomainSpec("SKEW", (s1 + s2,))
        f1 = DomainSpec("SKEW", (s1,))
        f2 = DomainSpec("SKEW", (s2,))
        self.factors = [
            FactorSpec(f1, "a", 1, 2 * self.k),
            FactorSpec(f2, "b", 1, 2 * self.k),
        ]
        self.cvars = [("c", i, s1 + j) for i in range(1, s1 + 1)
                      for j in range(1, s2 + 1)]
        self.p1_big = [(i, j) for (i, j) in self.big.free_coords()
                       if (j <= s1) or (i > s1)]
        self.p2_big = [(i, j) for (i, j) in self.big.free_coords()
                       if i <= s1 < j]

    def _build_sp_u(self):
        s1, s2 = self.sizes
        self.big = DomainSpec("SYM", (s1 + s2,))
        f1 = DomainSpec("MAT", (s1, s2))
        self.factors = [
            FactorSpec(f1, "a", 2, 2 * (self.k + self.l)),
        ]
        self.cvars = ([("c", i, j) for i in range(1, s1 + 1)
                       for j in range(i, s1 + 1)] +
                      [("c", s1 + i, s1 + j) for i in range(1, s2 + 1)
                       for j in range(i, s2 + 1)])
        self.p1_big = [(i, s1 + j) for i in range(1, s1 + 1)
                       for j in range(1, s2 + 1)]
        self.p2_big = [(i, j) for (i, j) in (c[1:] for c in self.cvars)]
        self.residue_family = ("SP_U", s1)

    def _build_sost_u(self):
        s1, s2 = self.sizes
        if self.k and s1 % 2:
            raise UnsupportedPairError("UNSUPPORTED: k>0 needs even block")
        if self.l and s2 % 2:
            raise UnsupportedPairError("UNSUPPORTED: l>0 needs even block")
        self.big = DomainSpec("SKEW", (s1 + s2,))
        f1 = DomainSpec("MAT", (s1, s2))
        self.factors = [
            FactorSpec(f1, "a", 1, self.k + self.l),
        ]
        self.cvars = ([("c", i, j) for i in range(1, s1 + 1)
                       for j in range(i + 1, s1 + 1)] +
                      [("c", s1 + i, s1 + j) for i in range(1, s2 + 1)
                       for j in range(i + 1, s2 + 1)])
        self.p1_big = [(i, s1 + j) for i in range(1, s1 + 1)
                       for j in range(1, s2 + 1)]
        self.p2_big = [(i, j) for (i, j) in (c[1:] for c in self.cvars)]

    def _build_su_sp(self):
        (s,) = self.sizes
        if self.k and s % 2:
            raise UnsupportedPairError("UNSUPPORTED: k=0 required for odd size")
        if self.l:
            raise UnsupportedPairError("UNSUPPORTED: no second power here")
        self.big = DomainSpec("MAT", (s, s))
        f1 = DomainSpec("SYM", (s,))
        self.factors = [
            FactorSpec(f1, "a", 1, self.k),
        ]
        self.cvars = [("c", i, j) for i in range(1, s + 1)
                      for j in range(i + 1, s + 1)]
        self.p1_big = None
        self.p2_big = None

    def _build_su_sost(self):
        (s,) = self.sizes
        if self.l:
            raise UnsupportedPairError("UNSUPPORTED: no second power here")
        self.big = DomainSpec("MAT", (s, s))
        f1 = DomainSpec("SKEW", (s,))
        self.factors = [
            FactorSpec(f1, "a", 2, 4 * self.k),
        ]
        self.cvars = [("c", i, j) for i in range(1, s + 1)
                      for j in range(i, s + 1)]
        self.p1_big = None
        self.p2_big = None

    def _build_su33_sost6(self):
        if self.sizes not in ((), (3,)):
            raise UnsupportedPairError("UNSUPPORTED: fixed size 3 pair")
        self.sizes = (3,)
        self._build_su_sost()

    def _build_so_soso(self):
        n1, n2 = self.sizes
        if self.l and self.l != self.k:
            raise UnsupportedPairError("UNSUPPORTED: equal powers only")
        self.big = DomainSpec("QUADRIC", (n1 + n2,))
        f1 = DomainSpec("QUADRIC", (n1,))
        self.factors = [
            FactorSpec(f1, "a", 1, 2 * self.k),
        ]
        self.cvars = [("c", 1, j) for j in range(1, n2 + 1)]
        self.p1_big = [(1, j) for j in range(1, n1 + 1)]
        self.p2_big = [(1, n1 + j) for j in range(1, n2 + 1)]

    def _build_u_normal(self):
        q, s1, s2 = self.sizes
        self.big = DomainSpec("MAT", (q, s1 + s2))
        f1 = DomainSpec("MAT", (q, s1))
        self.factors = [
            FactorSpec(f1, "a", 1, 0),
        ]
        self.cvars = [("c", i, j) for i in range(1, q + 1)
                      for j in range(1, s2 + 1)]
        self.p1_big = [(i, j) for i in range(1, q + 1)
                       for j in range(1, s1 + 1)]
        self.p2_big = [(i, s1 + j) for i in range(1, q + 1)
                       for j in range(1, s2 + 1)]
        self.p2_dom = DomainSpec("MAT", (q, s2))

    # -- symbolic placements --------------------------------------------

    def y1_full(self, group="y"):
        """Big full matrix (or vector) of the source slot, entries named by
        the conjugate-variable group at their big positions."""
        pid = self.pair_id
        if pid == "SU_SP":
            s = self.sizes[0]
            return [[_v(group, min(i, j), max(i, j)) for j in range(1, s + 1)]
                    for i in range(1, s + 1)]
        if pid in ("SU_SOST", "SU33_SOST6"):
            s = self.sizes[0]
            out = _zeros(s, s)
            for i in range(1, s + 1):
                for j in range(i + 1, s + 1):
                    out[i - 1][j - 1] = _v(group, i, j)
                    out[j - 1][i - 1] = -_v(group, i, j)
            return out
        if pid == "SO_SOSO":
            n1, n2 = self.sizes
            return ([_v(group, 1, j) for j in range(1, n1 + 1)] +
                    [MultiPoly() for _ in range(n2)])
        kind = self.big.kind
        if kind == "MAT":
            out = _zeros(self.big.sizes[0], self.big.sizes[1])
        else:
            out = _zeros(self.big.sizes[0], self.big.sizes[0])
        sgn = -1 if kind == "SKEW" else 1
        for fac in self.factors:
            for (_, bi, bj) in fac.yvars:
                out[bi - 1][bj - 1] = _v(group, bi, bj)
                if kind != "MAT" and bi != bj:
                    out[bj - 1][bi - 1] = sgn * _v(group, bi, bj)
        return out

    def x2_full(self, group="c"):
        pid = self.pair_id
        big = self.big
        if pid == "SO_SOSO":
            n1, n2 = self.sizes
            return ([MultiPoly() for _ in range(n1)] +
                    [_v(group, 1, j) for j in range(1, n2 + 1)])
        if pid == "SU_SP":
            s = self.sizes[0]
            out = _zeros(s, s)
            for i in range(1, s + 1):
                for j in range(i + 1, s + 1):
                    out[i - 1][j - 1] = _v(group, i, j)
                    out[j - 1][i - 1] = -_v(group, i, j)
            return out
        if pid in ("SU_SOST", "SU33_SOST6"):
            s = self.sizes[0]
            return [[_v(group, min(i, j), max(i, j))
                     for j in range(1, s + 1)] for i in range(1, s + 1)]
        if pid == "U_NORMAL":
            q, s1, s2 = self.sizes
            out = _zeros(q, s1 + s2)
            for i in range(1, q + 1):
                for j in range(1, s2 + 1):
                    out[i - 1][s1 + j - 1] = _v(group, i, j)
            return out
        if big.kind == "MAT":
            out = _zeros(big.sizes[0], big.sizes[1])
            for (_, i, j) in self.cvars:
                out[i - 1][j - 1] = _v(group, i, j)
            return out
        n = big.sizes[0]
        out = _zeros(n, n)
        sgn = -1 if big.kind == "SKEW" else 1
        for (_, i, j) in self.cvars:
            out[i - 1][j - 1] = _v(group, i, j)
            out[j - 1][i - 1] = sgn * _v(group, i, j)
        return out

    def x_all_full(self, group="z"):
        return self.big.sym_matrix(group)

    # -- projections ----------------------------------------------------

    def proj2_full(self, mat):
        pid = self.pair_id
        if pid == "SU_SP":
            s = self.sizes[0]
            return [[(mat[i][j] - mat[j][i]) * Fraction(1, 2)
                     for j in range(s)] for i in range(s)]
        if pid in ("SU_SOST", "SU33_SOST6"):
            s = self.sizes[0]
            return [[(mat[i][j] + mat[j][i]) * Fraction(1, 2)
                     for j in range(s)] for i in range(s)]
        if pid == "SO_SOSO":
            n1, n2 = self.sizes
            return [MultiPoly() for _ in range(n1)] + list(mat[n1:])
        keep = set(self.p2_big)
        if self.big.kind == "MAT":
            return [[mat[i][j] if (i + 1, j + 1) in keep else MultiPoly()
                     for j in range(len(mat[0]))] for i in range(len(mat))]
        out = [[MultiPoly() for _ in row] for row in mat]
        for (i, j) in keep:
            out[i - 1][j - 1] = mat[i - 1][j - 1]
            out[j - 1][i - 1] = mat[j - 1][i - 1]
        return out

    def extract_p2(self, mat):
        """Values of the c-coordinates on a (projected) big element."""
        pid = self.pair_id
        out = {}
        if pid == "SO_SOSO":
            n1, n2 = self.sizes
            for j in range(1, n2 + 1):
                out[("c", 1, j)] = mat[n1 + j - 1]
            return out
        if pid == "SU_SP":
            for (_, i, j) in self.cvars:
                out[("c", i, j)] = (mat[i - 1][j - 1] - mat[j - 1][i - 1]) \
                    * Fraction(1, 2)
            return out
        if pid in ("SU_SOST", "SU33_SOST6"):
            for (_, i, j) in self.cvars:
                out[("c", i, j)] = (mat[i - 1][j - 1] + mat[j - 1][i - 1]) \
                    * Fraction(1, 2)
            return out
        if pid == "U_NORMAL":
            q, s1, s2 = self.sizes
            for (_, i, j) in self.cvars:
                out[("c", i, j)] = mat[i - 1][s1 + j - 1]
            return out
        for (_, i, j) in self.cvars:
            out[("c", i, j)] = mat[i - 1][j - 1]
        return out

    # -- prefactor ------------------------------------------------------

    def k_pre_poly(self):
        """The multiplication prefactor as a polynomial in the c-variables."""
        return self.prefactor_of(self.x2_full())

    def prefactor_of(self, mat):
        """det/Pf/quadric prefactor evaluated on a big element."""
        from .matrixops import det_poly, pfaffian

        pid = self.pair_id
        k, ll = self.k, self.l
        one = MultiPoly.const(1)
        if k == 0 and ll == 0:
            return one
        if pid == "SP_SPSP":
            s1, s2 = self.sizes
            blk = [row[s1:] for row in mat[:s1]]
            return det_poly(blk) ** k
        if pid == "U_UU":
            q1, s1, q2, s2 = self.sizes
            out = one
            if k:
                out = out * det_poly([row[s1:] for row in mat[:q1]]) ** k
            if ll:
                out = out * det_poly([row[:s1] for row in mat[q1:]]) ** ll
            return out
        if pid == "SOST_SOSTSOST":
            s1, s2 = self.sizes
            blk = [row[s1:] for row in mat[:s1]]
            return det_poly(blk) ** k
        if pid == "SP_U":
            s1, s2 = self.sizes
            out = one
            if k:
                out = out * det_poly([row[:s1] for row in mat[:s1]]) ** k
            if ll:
                out = out * det_poly([row[s1:] for row in mat[s1:]]) ** ll
            return out
        if pid == "SOST_U":
            s1, s2 = self.sizes
            out = one
            if k:
                out = out * pfaffian([row[:s1] for row in mat[:s1]]) ** k
            if ll:
                out = out * pfaffian([row[s1:] for row in mat[s1:]]) ** ll
            return out
        if pid == "SU_SP":
            s = self.sizes[0]
            skew = [[(mat[i][j] - mat[j][i]) * Fraction(1, 2)
                     for j in range(s)] for i in range(s)]
            return pfaffian(skew) ** k
        if pid in ("SU_SOST", "SU33_SOST6"):
            s = self.sizes[0]
            sym = [[(mat[i][j] + mat[j][i]) * Fraction(1, 2)
                    for j in range(s)] for i in range(s)]
            return det_poly(sym) ** k
        if pid == "SO_SOSO":
            n1, n2 = self.sizes
            q = MultiPoly()
            for e in mat[n1:]:
                q = q + e * e
            return q ** k
        raise UnsupportedPairError("UNSUPPORTED prefactor for %s" % pid)

    # -- parameter bookkeeping ------------------------------------------

    def divisor(self, parts, param="nu"):
        out = ParamScalar.const(1)
        for fac, m in zip(self.factors, parts):
            out = out * fac.divisor(m, param=param)
        return out

    def source_lams(self, nu):
        return [f.lam_value(nu) for f in self.factors]

    # -- coordinate transport -------------------------------------------

    def src_subs_to_big(self, zgroup="z"):
        """Substitution sending canonical source variables to big-coordinate
        polynomials (restriction of functions along the embedding)."""
        pid = self.pair_id
        out = {}
        if pid == "SU_SP":
            s = self.sizes[0]
            for (i, j) in self.factors[0].coords:
                out[("a", i, j)] = (_v(zgroup, i, j) + _v(zgroup, j, i)) \
                    * Fraction(1, 2) if i != j else _v(zgroup, i, i)
            return out
        if pid in ("SU_SOST", "SU33_SOST6"):
            for (i, j) in self.factors[0].coords:
                out[("a", i, j)] = (_v(zgroup, i, j) - _v(zgroup, j, i)) \
                    * Fraction(1, 2)
            return out
        for fac, emb in zip(self.factors, self._factor_embeds()):
            for (i, j) in fac.coords:
                bi, bj = emb(i, j)
                out[(fac.group, i, j)] = _v(zgroup, bi, bj)
        return out

    def c_subs_to_big(self, zgroup="z"):
        pid = self.pair_id
        out = {}
        if pid == "SU_SP":
            for (_, i, j) in self.cvars:
                out[("c", i, j)] = (_v(zgroup, i, j) - _v(zgroup, j, i)) \
                    * Fraction(1, 2)
            return out
        if pid in ("SU_SOST", "SU33_SOST6"):
            for (_, i, j) in self.cvars:
                out[("c", i, j)] = (_v(zgroup, i, j) + _v(zgroup, j, i)) \
                    * Fraction(1, 2) if i != j else _v(zgroup, i, i)
            return out
        if pid == "SO_SOSO":
            n1, n2 = self.sizes
            for j in range(1, n2 + 1):
                out[("c", 1, j)] = _v(zgroup, 1, n1 + j)
            return out
        if pid == "U_NORMAL":
            q, s1, s2 = self.sizes
            for (_, i, j) in self.cvars:
                out[("c", i, j)] = _v(zgroup, i, s1 + j)
            return out
        for (_, i, j) in self.cvars:
            out[("c", i, j)] = _v(zgroup, i, j)
        return out

    def _factor_embeds(self):
        pid = self.pair_id
        if pid == "SP_SPSP" or pid == "SOST_SOSTSOST":
            s1 = self.sizes[0]
            return [lambda i, j: (i, j),
                    lambda i, j: (s1 + i, s1 + j)]
        if pid == "U_UU":
            q1, s1, q2, s2 = self.sizes
            return [lambda i, j: (i, j),
                    lambda i, j: (q1 + i, s1 + j)]
        if pid in ("SP_U", "SOST_U"):
            s1 = self.sizes[0]
            return [lambda i, j: (i, s1 + j)]
        if pid == "SO_SOSO":
            return [lambda i, j: (i, j)]
        if pid == "U_NORMAL":
            return [lambda i, j: (i, j)]
        raise UnsupportedPairError(pid)

    def embed_point(self, fi, pt):
        """Factor point -> big point (as coordinate dictionaries)."""
        pid = self.pair_id
        if pid == "SU_SP":
            out = self.big.zero_point()
            for (i, j), v in pt.items():
                out[(i, j)] = out.get((i, j), Fraction(0)) + Fraction(v)
                if i != j:
                    out[(j, i)] = out.get((j, i), Fraction(0)) + Fraction(v)
            return out
        if pid in ("SU_SOST", "SU33_SOST6"):
            out = self.big.zero_point()
            for (i, j), v in pt.items():
                out[(i, j)] = out.get((i, j), Fraction(0)) + Fraction(v)
                out[(j, i)] = out.get((j, i), Fraction(0)) - Fraction(v)
            return out
        emb = self._factor_embeds()[fi]
        out = self.big.zero_point()
        for (i, j), v in pt.items():
            out[emb(i, j)] = Fraction(v)
        return out

    def subalgebra_generators(self):
        """Generators of the symmetric subalgebra, as pairs
        (per-factor source elements, big element)."""
        gens = []
        for fi, fac in enumerate(self.factors):
            for coord in fac.coords:
                e = {coord: Fraction(1)}
                big_e = self.embed_point(fi, e)
                for mk in (lie.plus, lie.minus):
                    src = [None] * len(self.factors)
                    src[fi] = mk(e)
                    gens.append((src, mk(big_e)))
        if self.pair_id == "SO_SOSO":
            n1, n2 = self.sizes
            for a in range(1, n2 + 1):
                for b in range(a + 1, n2 + 1):
                    ea = self.big.zero_point()
                    ea[(1, n1 + a)] = Fraction(1)
                    eb = self.big.zero_point()
                    eb[(1, n1 + b)] = Fraction(1)
                    big_elem = lie.lie_add(lie.kay(ea, eb),
                                           lie.lie_scale(lie.kay(eb, ea), -1))
                    gens.append(([None] * len(self.factors), big_elem))
        if self.pair_id == "U_NORMAL":
            # rotations of the second column block; the source side is
            # modelled through the ambient action, so no factor element
            q, s1, s2 = self.sizes
            for i in range(1, q + 1):
                for a in range(1, s2 + 1):
                    for b in range(1, s2 + 1):
                        ea = self.big.zero_point()
                        ea[(i, s1 + a)] = Fraction(1)
                        eb = self.big.zero_point()
                        eb[(i, s1 + b)] = Fraction(1)
                        gens.append(([None] * len(self.factors),
                                     lie.kay(ea, eb)))
        return gens

    # -- residue metadata -----------------------------------------------

    def residue_mu(self, nu_value):
        """The mu parameter of the residue family at a numeric target
        weight."""
        if self.residue_family is None:
            raise UnsupportedPairError(
                "UNSUPPORTED: no residue family for %s" % self.pair_id)
        return Fraction(nu_value) + self.k + self.l

    def pole_order_expected(self, mu):
        """Pole order of the coefficient family predicted by the counting
        rule of the residue theorems."""
        import math

        fam, size = self.residue_family
        mu = Fraction(mu)
        if fam == "U":
            if mu.denominator != 1 or mu > size - 1:
                return 0
            return size - max(int(mu), 0)
        if fam == "SP_U":
            two = 2 * mu
            if two.denominator != 1 or two > size - 2:
                return 0
            ceilmu = int(math.ceil(mu))
            if mu.denominator == 1:
                return max(size // 2 - max(0, ceilmu), 0)
            return max((size + 1) // 2 - max(0, ceilmu), 0)
        raise UnsupportedPairError(fam)


def make_pair(cli_name, sizes, k=0, l=0):
    if cli_name in CLI_NAMES:
        return PairSpec(CLI_NAMES[cli_name], tuple(sizes), k, l)
    if cli_name in PAIR_IDS:
        return PairSpec(cli_name, tuple(sizes), k, l)
    raise UnsupportedPairError("UNSUPPORTED pair %r" % (cli_name,))
