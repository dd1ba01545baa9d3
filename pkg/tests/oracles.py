"""Independent numeric oracles: high-precision decimals and brute force."""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from sturmian_refine.exact_circle import AlphaSpec, CirclePoint


def alpha_decimal(alpha: AlphaSpec, digits: int = 100) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return (Decimal(alpha.p) + Decimal(alpha.q) * Decimal(alpha.d).sqrt()) / Decimal(alpha.r)


def _dec(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def point_decimal(alpha: AlphaSpec, x: CirclePoint, digits: int = 100) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = _dec(Fraction(x.a)) + _dec(Fraction(x.b)) * alpha_decimal(alpha, digits)
        return v - (v.to_integral_value(rounding="ROUND_FLOOR"))


def brute_name(alpha: AlphaSpec, x: CirclePoint, n: int, digits: int = 60) -> str:
    """P-name of x: decimal values of T^j x compared with the decimal of 1 - alpha."""
    cut = point_decimal(alpha, CirclePoint(0, -1), digits)
    return "".join("0" if point_decimal(alpha, CirclePoint(x.a, x.b + j), digits) < cut else "1"
                   for j in range(n))


def brute_per(word, p: int) -> set[int]:
    n = len(word)
    out = set()
    for j in range(n):
        i = j - p
        while i < 0:
            i += n
        if word[j] == word[i]:
            out.add(j)
    return out


def brute_sturmian_words(alpha: AlphaSpec, m: int, samples: int = 4000, digits: int = 60) -> set[str]:
    """Factors of length m of the coding of 0, read from a long orbit window."""
    a = alpha_decimal(alpha, digits)
    cut = 1 - a
    seq = []
    x = Decimal(0)
    for _ in range(samples + m):
        seq.append("0" if x < cut else "1")
        x += a
        if x >= 1:
            x -= 1
    s = "".join(seq)
    return {s[i:i + m] for i in range(samples)}


def brute_refine(R, n: int, digits: int = 60) -> list[tuple[Decimal, tuple]]:
    """Arcs of R^n as (decimal start, R-name), canonicalised, using decimals only."""
    alpha = R.alpha
    if R.is_trivial:
        return [(Decimal(0), (R.labels[0],) * n)]
    base = sorted((point_decimal(alpha, c, digits), lab) for c, lab in zip(R.cuts, R.labels))

    def label_of(v: Decimal):
        lab = base[-1][1]
        for start, l in base:
            if start <= v:
                lab = l
        return lab

    # orbit points are rebuilt exactly, so hitting a cut yields identical digits
    points = {CirclePoint(c.a, c.b - i) for c in R.cuts for i in range(n)}
    starts = sorted(points, key=lambda p: point_decimal(alpha, p, digits))
    arcs = []
    for p in starts:
        name = tuple(label_of(point_decimal(alpha, CirclePoint(p.a, p.b + j), digits)) for j in range(n))
        arcs.append((point_decimal(alpha, p, digits), name))
    keep = [arcs[i] for i in range(len(arcs)) if arcs[i][1] != arcs[i - 1][1]]
    return keep or [(Decimal(0), arcs[0][1])]
