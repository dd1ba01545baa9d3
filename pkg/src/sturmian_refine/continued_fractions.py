"""Continued-fraction tables of alpha: c_k, p_k, q_k, r_k and eta_k.

Indices follow the usual convention alpha = [c_1, c_2, ...] with
p_0 = 0, p_1 = 1, q_0 = 1, q_1 = c_1, r_0 = 1 and r_k = q_k + q_{k-1}.
eta_k = |q_k alpha - p_k| is kept exactly as a pair ``(s, t)`` meaning
``s + t*alpha``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ResourceCapError, TableTooShallowError
from .exact_circle import ZERO, AlphaSpec, Arc, CirclePoint

MAX_CF_DEPTH = 256

_table_lock = threading.Lock()


def expand_cf(alpha: AlphaSpec, depth: int, cap: int = MAX_CF_DEPTH) -> list[int]:
    """First ``depth`` coefficients c_1..c_depth of alpha."""
    if depth < 1:
        raise InputError("depth must be >= 1")
    if depth > cap:
        raise ResourceCapError(f"cf depth {depth} exceeds cap {cap}")
    if alpha.cf_origin is not None:
        prefix, period = alpha.cf_origin
        out = list(prefix[:depth])
        while len(out) < depth:
            out.extend(period[: depth - len(out)])
        return out
    return alpha.cf_coefficients(depth)


@dataclass(frozen=True)
class ConvergentTable:
    alpha: AlphaSpec
    coeffs: tuple[int, ...]  # c_1 .. c_K
    p: tuple[int, ...]  # p_0 .. p_K
    q: tuple[int, ...]
    r: tuple[int, ...]
    eta: tuple[tuple[Fraction, Fraction], ...]

    @property
    def depth(self) -> int:
        return len(self.coeffs)

    def c(self, k: int) -> int:
        if k < 1:
            raise IndexError("c_k is defined for k >= 1")
        if k > self.depth:
            raise TableTooShallowError(f"c_{k} needs depth {k}, table has {self.depth}")
        return self.coeffs[k - 1]

    def require(self, k: int) -> None:
        if k > self.depth:
            raise TableTooShallowError(f"index {k} needs depth {k}, table has {self.depth}")

    def eta_float(self, k: int) -> float:
        s, t = self.eta[k]
        return self.alpha.approx(s, t)


def _build(alpha: AlphaSpec, depth: int) -> ConvergentTable:
    cs = expand_cf(alpha, depth)
    p, q = [0, 1], [1, cs[0]]
    for k in range(2, depth + 1):
        c = cs[k - 1]
        p.append(c * p[-1] + p[-2])
        q.append(c * q[-1] + q[-2])
    r = [1] + [q[k] + q[k - 1] for k in range(1, depth + 1)]
    eta = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(-cs[0]))]
    for k in range(2, depth + 1):
        c = cs[k - 1]
        eta.append((eta[k - 2][0] - c * eta[k - 1][0], eta[k - 2][1] - c * eta[k - 1][1]))
    return ConvergentTable(alpha, tuple(cs), tuple(p), tuple(q), tuple(r), tuple(eta))


def convergents(alpha: AlphaSpec, depth: int) -> ConvergentTable:
    """Convergent table of the given depth, memoised per alpha."""
    if depth < 1:
        raise InputError("depth must be >= 1")
    with _table_lock:
        cached = alpha._tables.get("cf")
        if cached is None or cached.depth < depth:
            cached = _build(alpha, max(depth, 16))
            alpha._tables["cf"] = cached
    if cached.depth == depth:
        return cached
    return ConvergentTable(
        alpha,
        cached.coeffs[:depth],
        cached.p[: depth + 1],
        cached.q[: depth + 1],
        cached.r[: depth + 1],
        cached.eta[: depth + 1],
    )


def locate_k(table: ConvergentTable, n: int) -> int:
    """The unique k >= 1 with r_{k-1} <= n < r_k."""
    if n < 1:
        raise InputError("n must be >= 1")
    for k in range(1, table.depth + 1):
        if table.r[k - 1] <= n < table.r[k]:
            return k
    raise TableTooShallowError(f"r_{table.depth}={table.r[-1]} <= n={n}; deepen the table")


def table_for(alpha: AlphaSpec, n: int, extra: int = 0) -> ConvergentTable:
    """A table deep enough to locate ``n`` and look ``extra`` levels beyond it."""
    depth = 8
    while True:
        table = convergents(alpha, depth)
        if table.r[-1] > n:
            k = locate_k(table, n)
            if k + extra <= depth:
                return table
        depth *= 2


def interval_I(table: ConvergentTable, k: int) -> Arc:
    """The base interval I_k of the two-tower picture of P^{r_k - 1}.

    I_k is the arc between 0 and <q_k> = T^{-q_k}(0) of length eta_k:
    [-eta_k, 0) for even k and [0, eta_k) for odd k.
    """
    if k < 0:
        raise InputError("k must be >= 0")
    table.require(k)
    corner = CirclePoint(0, -table.q[k])
    if k % 2 == 0:
        return Arc(corner, ZERO)
    return Arc(ZERO, corner)


def format_eta(s: Fraction, t: Fraction) -> str:
    return f"{s}+{t}*alpha" if t >= 0 else f"{s}{t}*alpha"
