"""Partitions with at most r rows, plus the orderings the kernel theory uses."""


def partitions_upto(max_rows, max_weight):
    """All weakly decreasing nonnegative tuples of length max_rows
    with entry sum at most max_weight, sorted by (weight, reverse-lex)."""
    out = []

    def rec(prefix, bound, remaining):
        if len(prefix) == max_rows:
            out.append(tuple(prefix))
            return
        for v in range(min(bound, remaining), -1, -1):
            rec(prefix + [v], v, remaining - v)

    rec([], max_weight, max_weight)
    out.sort(key=lambda m: (sum(m), tuple(-x for x in m)))
    return out


def partitions_of(weight, max_rows):
    """Partitions of an exact weight into at most max_rows rows."""
    return [m for m in partitions_upto(max_rows, weight) if sum(m) == weight]


def trim(m):
    """Drop trailing zero rows."""
    m = tuple(m)
    while m and m[-1] == 0:
        m = m[:-1]
    return m


def pad(m, rows):
    m = tuple(m)
    return m + (0,) * (rows - len(m))


def dominates(a, b):
    """Dominance order: a >= b (same weight assumed)."""
    sa = 0
    sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def conjugate(m):
    m = trim(m)
    if not m:
        return ()
    return tuple(sum(1 for x in m if x > i) for i in range(m[0]))


def hook_product_alpha(m, alpha_num, alpha_den):
    """Not used in anger yet; kept for cross checks of Jack normalizations."""
    from fractions import Fraction
    alpha = Fraction(alpha_num, alpha_den)
    m = trim(m)
    mc = conjugate(m)
    up = Fraction(1)
    low = Fraction(1)
    for i, mi in enumerate(m):
        for j in range(mi):
            arm = mi - 1 - j
            leg = mc[j] - 1 - i
            up *= alpha * arm + leg + 1
            low *= alpha * (arm + 1) + leg
    return up, low
