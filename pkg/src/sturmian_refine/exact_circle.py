"""Exact points of the circle R/Z of the form frac(a + b*alpha).

``alpha`` is a quadratic irrational in (0, 1), so every comparison between
two such points reduces to the sign of ``A + B*alpha`` with rational ``A``
and ``B``, which is decided exactly with integer square roots.  Nothing in
this module touches floating point except :meth:`AlphaSpec.__float__`.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .errors import InputError

# fixed-point precision of the sort keys (bits)
KEY_BITS = 128


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return ``(f, s)`` with ``d == f*f*s`` and ``s`` squarefree."""
    f, s = 1, 1
    rest = d
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1
    return f, s * rest


def _floor_surd(P: int, Q: int, R: int, d: int) -> int:
    """floor((P + Q*sqrt(d)) / R) for R > 0 and non-square d."""
    if Q == 0:
        return P // R
    s = math.isqrt(Q * Q * d)
    if Q > 0:
        return (P + s) // R
    return (P - s - 1) // R


def _sign_surd(P: int, Q: int, d: int) -> int:
    """Sign of P + Q*sqrt(d) for non-square d."""
    sp = (P > 0) - (P < 0)
    sq = (Q > 0) - (Q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs; squares never tie because d is not a square
    return sp if P * P > Q * Q * d else sq


class QuadraticSurd:
    """Element ``x + y*sqrt(d)`` of Q(sqrt d), with rational x, y."""

    __slots__ = ("x", "y", "d")

    def __init__(self, x, y, d: int):
        self.x = Fraction(x)
        self.y = Fraction(y)
        self.d = d

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                raise InputError("surds over different fields")
            return other
        return QuadraticSurd(other, 0, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticSurd(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.x, -self.y, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadraticSurd(
            self.x * o.x + self.y * o.y * self.d,
            self.x * o.y + self.y * o.x,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        norm = self.x * self.x - self.y * self.y * self.d
        if norm == 0:
            raise ZeroDivisionError("zero surd")
        return QuadraticSurd(self.x / norm, -self.y / norm, self.d)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def _ints(self) -> tuple[int, int, int]:
        R = _lcm(self.x.denominator, self.y.denominator)
        return int(self.x * R), int(self.y * R), R

    def sign(self) -> int:
        P, Q, _ = self._ints()
        return _sign_surd(P, Q, self.d)

    def floor(self) -> int:
        P, Q, R = self._ints()
        return _floor_surd(P, Q, R, self.d)

    def __eq__(self, other):
        if not isinstance(other, QuadraticSurd):
            other = QuadraticSurd(other, 0, self.d)
        return (self.x, self.y, self.d) == (other.x, other.y, other.d)

    def __hash__(self):
        return hash((self.x, self.y, self.d))

    def __float__(self):
        return float(self.x) + float(self.y) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadraticSurd({self.x}, {self.y}, d={self.d})"


def _mobius_product(coeffs: Sequence[int]) -> tuple[int, int, int, int]:
    # t -> 1/(c + t) is the matrix [[0, 1], [1, c]]
    A, B, C, D = 1, 0, 0, 1
    for c in coeffs:
        A, B, C, D = B, A + c * B, D, C + c * D
    return A, B, C, D


class AlphaSpec:
    """Exact description of a quadratic irrational rotation angle in (0, 1).

    Internally always stored as ``(p + q*sqrt(d)) / r`` with ``d``
    squarefree, ``r > 0`` and ``gcd(p, q, r) == 1``; a continued-fraction
    origin is remembered only for display and JSON round trips.
    """

    __slots__ = ("p", "q", "d", "r", "cf_origin", "_surd", "_keys", "_tables")

    def __init__(self, p: int, q: int, d: int, r: int, cf_origin=None):
        if d <= 1:
            raise InputError(f"d must be a positive non-square integer, got {d}")
        f, s = _squarefree_split(d)
        if s == 1:
            raise InputError(f"d={d} is a perfect square; alpha would be rational")
        if q == 0:
            raise InputError("q must be non-zero for an irrational alpha")
        if r == 0:
            raise InputError("r must be non-zero")
        q *= f
        d = s
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        self.p, self.q, self.d, self.r = p // g, q // g, d, r // g
        self.cf_origin = cf_origin
        self._surd = QuadraticSurd(Fraction(self.p, self.r), Fraction(self.q, self.r), self.d)
        if not (self._surd.sign() > 0 and (1 - self._surd).sign() > 0):
            raise InputError(f"alpha={float(self._surd):.6f} is not in (0, 1)")
        self._keys: dict = {}
        self._tables: dict = {}

    # constructors ---------------------------------------------------------

    @classmethod
    def quadratic(cls, p: int, q: int, d: int, r: int) -> "AlphaSpec":
        return cls(p, q, d, r)

    @classmethod
    def from_cf(cls, prefix: Sequence[int], period: Sequence[int]) -> "AlphaSpec":
        """alpha = [prefix; period, period, ...] in the 1/(c1 + 1/(c2 + ...)) convention."""
        prefix, period = list(prefix), list(period)
        if not period:
            raise InputError("cf period must be non-empty")
        if any(int(c) != c or c < 1 for c in prefix + period):
            raise InputError("cf coefficients must be positive integers")
        A, B, C, D = _mobius_product(period)
        # fixed point beta = (A beta + B) / (C beta + D), root in (0, 1)
        disc = (D - A) ** 2 + 4 * B * C
        beta = QuadraticSurd(Fraction(A - D, 2 * C), Fraction(1, 2 * C), disc)
        if disc > 1:
            f, s = _squarefree_split(disc)
            beta = QuadraticSurd(beta.x, beta.y * f, s)
        A, B, C, D = _mobius_product(prefix)
        value = (A * beta + B) / (C * beta + D)
        r = _lcm(value.x.denominator, value.y.denominator)
        return cls(int(value.x * r), int(value.y * r), value.d, r,
                   cf_origin=(tuple(prefix), tuple(period)))

    @classmethod
    def golden(cls) -> "AlphaSpec":
        return cls(-1, 1, 5, 2)

    @classmethod
    def silver(cls) -> "AlphaSpec":
        return cls(-1, 1, 2, 1)

    @classmethod
    def from_json(cls, obj) -> "AlphaSpec":
        if isinstance(obj, str):
            presets = {"golden": cls.golden, "silver": cls.silver}
            if obj not in presets:
                raise InputError(f"unknown alpha preset {obj!r}")
            return presets[obj]()
        if not isinstance(obj, dict) or len(obj) != 1:
            raise InputError("alpha must be a preset name or a one-key object")
        if "quadratic" in obj:
            body = obj["quadratic"]
            try:
                return cls(int(body["p"]), int(body["q"]), int(body["d"]), int(body["r"]))
            except (KeyError, TypeError) as exc:
                raise InputError(f"bad quadratic alpha: {exc}") from None
        if "cf" in obj:
            body = obj["cf"]
            if not isinstance(body, dict):
                raise InputError('cf alpha needs {"prefix": [...], "period": [...]}')
            return cls.from_cf(body.get("prefix", []), body.get("period", []))
        raise InputError(f"unknown alpha form {sorted(obj)}")

    def to_json(self) -> dict:
        if self.cf_origin is not None:
            prefix, period = self.cf_origin
            return {"cf": {"prefix": list(prefix), "period": list(period)}}
        return {"quadratic": {"p": self.p, "q": self.q, "d": self.d, "r": self.r}}

    # identity -------------------------------------------------------------

    def _ident(self):
        return (self.p, self.q, self.d, self.r)

    def __eq__(self, other):
        return isinstance(other, AlphaSpec) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"AlphaSpec(({self.p} + {self.q}*sqrt({self.d}))/{self.r})"

    def __float__(self):
        return float(self._surd)

    @property
    def surd(self) -> QuadraticSurd:
        return self._surd

    # continued fraction ---------------------------------------------------

    def cf_coefficients(self, depth: int) -> list[int]:
        """First ``depth`` continued-fraction coefficients, computed exactly."""
        out = []
        x = self._surd
        for _ in range(depth):
            inv = x.inverse()
            c = inv.floor()
            out.append(c)
            x = inv - c
        return out

    def to_cf(self, max_steps: int = 10_000) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Detect the eventually periodic expansion as ``(prefix, period)``."""
        seen: dict = {}
        coeffs: list[int] = []
        x = self._surd
        for i in range(max_steps):
            state = (x.x, x.y)
            if state in seen:
                j = seen[state]
                return tuple(coeffs[:j]), tuple(coeffs[j:])
            seen[state] = i
            inv = x.inverse()
            c = inv.floor()
            coeffs.append(c)
            x = inv - c
        raise InputError("continued fraction period not found")

    # exact arithmetic in Q(alpha) ----------------------------------------

    def _surd_ints(self, A: Fraction, B: Fraction) -> tuple[int, int, int]:
        # A + B*alpha = (A r + B p + B q sqrt d) / r
        if type(A) is int and type(B) is int:
            return A * self.r + B * self.p, B * self.q, self.r
        A, B = Fraction(A), Fraction(B)
        L = _lcm(A.denominator, B.denominator)
        P = int(A * L) * self.r + int(B * L) * self.p
        Q = int(B * L) * self.q
        return P, Q, self.r * L

    def sign(self, A, B) -> int:
        """Exact sign of ``A + B*alpha``."""
        P, Q, _ = self._surd_ints(A, B)
        return _sign_surd(P, Q, self.d)

    def floor(self, A, B) -> int:
        """Exact floor of ``A + B*alpha``."""
        P, Q, R = self._surd_ints(A, B)
        return _floor_surd(P, Q, R, self.d)

    def frac_pair(self, A, B) -> tuple[Fraction, Fraction]:
        """frac(A + B*alpha) written as ``s + t*alpha``."""
        return Fraction(A) - self.floor(A, B), Fraction(B)

    def approx(self, A, B) -> float:
        return float(A) + float(B) * float(self)

    def key(self, x: "CirclePoint") -> int:
        """Truncation of ``2**KEY_BITS * value(x)``; strictly monotone up to ties."""
        k = self._keys.get(x)
        if k is None:
            P, Q, R = self._surd_ints(x.a, x.b)
            k = _floor_surd(P << KEY_BITS, Q << KEY_BITS, R, self.d) % (1 << KEY_BITS)
            self._keys[x] = k
        return k


class CirclePoint:
    """The point frac(a + b*alpha), with ``a`` reduced into [0, 1)."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        # integral coordinates stay plain ints; orbit points never touch Fraction
        if type(a) is int:
            a = 0
        else:
            a = Fraction(a)
            a = a - math.floor(a)
            if a == 0:
                a = 0
        if type(b) is not int:
            b = Fraction(b)
            if b.denominator == 1:
                b = b.numerator
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "_hash", hash((a, b)))

    def __setattr__(self, name, value):
        raise AttributeError("CirclePoint is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        return type(other) is CirclePoint and self.b == other.b and self.a == other.a

    def __hash__(self):
        return self._hash

    def __repr__(self):
        i = self.orbit_index
        if i is not None:
            return f"<{i}>"
        return f"CirclePoint({self.a}, {self.b})"

    def __reduce__(self):
        return (CirclePoint, (self.a, self.b))

    @property
    def orbit_index(self) -> int | None:
        """``i`` when this point is T^{-i}(0) with i >= 0, else None."""
        if self.a == 0 and self.b.denominator == 1 and self.b <= 0:
            return int(-self.b)
        return None

    def value(self, alpha: AlphaSpec) -> tuple[Fraction, Fraction]:
        return alpha.frac_pair(self.a, self.b)

    def approx(self, alpha: AlphaSpec) -> float:
        s, t = self.value(alpha)
        return alpha.approx(s, t)


ZERO = CirclePoint(0, 0)


def orbit_point(i: int) -> CirclePoint:
    """T^{-i}(0) = frac(-i*alpha)."""
    if i < 0:
        raise InputError("orbit index must be non-negative")
    return CirclePoint(0, -i)


def apply_rotation(x: CirclePoint, j: int) -> CirclePoint:
    """T^j(x)."""
    return CirclePoint(x.a, x.b + j)


def compare_points(x: CirclePoint, y: CirclePoint, alpha: AlphaSpec) -> int:
    """-1, 0 or 1 according to the order of the values in [0, 1)."""
    if x == y:
        return 0
    kx, ky = alpha.key(x), alpha.key(y)
    if kx != ky:
        return -1 if kx < ky else 1
    sx, tx = x.value(alpha)
    sy, ty = y.value(alpha)
    return alpha.sign(sx - sy, tx - ty)


def sort_points(alpha: AlphaSpec, points: Iterable[CirclePoint]) -> list[CirclePoint]:
    """Sort distinct points by position in [0, 1)."""
    pts = sorted(points, key=alpha.key)
    i = 0
    while i < len(pts) - 1:
        # equal keys are vanishingly rare; settle them exactly
        j = i + 1
        ki = alpha.key(pts[i])
        while j < len(pts) and alpha.key(pts[j]) == ki:
            j += 1
        if j - i > 1:
            pts[i:j] = sorted(pts[i:j], key=cmp_to_key(lambda u, v: compare_points(u, v, alpha)))
        i = j
    return pts


def locate(alpha: AlphaSpec, cuts: Sequence[CirclePoint], keys: Sequence[int], x: CirclePoint) -> int:
    """Number of entries of the sorted ``cuts`` that are <= x."""
    kx = alpha.key(x)
    i = bisect_left(keys, kx)
    while i < len(cuts) and keys[i] == kx and compare_points(cuts[i], x, alpha) <= 0:
        i += 1
    return i


def point_difference(x: CirclePoint, y: CirclePoint, alpha: AlphaSpec) -> tuple[Fraction, Fraction]:
    """frac(x - y) as ``s + t*alpha``; the counterclockwise distance from y to x."""
    return alpha.frac_pair(x.a - y.a, x.b - y.b)


class Arc:
    """Half-open arc [start, end) traversed counterclockwise; start == end is the full circle."""

    __slots__ = ("start", "end")

    def __init__(self, start: CirclePoint, end: CirclePoint):
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)

    def __setattr__(self, name, value):
        raise AttributeError("Arc is immutable")

    def __eq__(self, other):
        return isinstance(other, Arc) and self.start == other.start and self.end == other.end

    def __hash__(self):
        return hash((self.start, self.end))

    def __repr__(self):
        return f"Arc[{self.start!r}, {self.end!r})"

    @property
    def is_full(self) -> bool:
        return self.start == self.end

    def length(self, alpha: AlphaSpec) -> tuple[Fraction, Fraction]:
        if self.is_full:
            return Fraction(1), Fraction(0)
        return point_difference(self.end, self.start, alpha)

    def rotate(self, j: int) -> "Arc":
        """T^j of the arc."""
        return Arc(apply_rotation(self.start, j), apply_rotation(self.end, j))

    def preimage(self, m: int) -> "Arc":
        return self.rotate(-m)

    def contains_point(self, x: CirclePoint, alpha: AlphaSpec) -> bool:
        if self.is_full:
            return True
        off = point_difference(x, self.start, alpha)
        ln = self.length(alpha)
        return alpha.sign(ln[0] - off[0], ln[1] - off[1]) > 0

    def contains_arc(self, inner: "Arc", alpha: AlphaSpec) -> bool:
        if self.is_full:
            return True
        if inner.is_full:
            return False
        off = point_difference(inner.start, self.start, alpha)
        li, lo = inner.length(alpha), self.length(alpha)
        return alpha.sign(lo[0] - off[0] - li[0], lo[1] - off[1] - li[1]) >= 0

    def disjoint(self, other: "Arc", alpha: AlphaSpec) -> bool:
        if self.is_full or other.is_full:
            return False
        d1 = point_difference(other.start, self.start, alpha)
        d2 = point_difference(self.start, other.start, alpha)
        l1, l2 = self.length(alpha), other.length(alpha)
        return (alpha.sign(d1[0] - l1[0], d1[1] - l1[1]) >= 0
                and alpha.sign(d2[0] - l2[0], d2[1] - l2[1]) >= 0)
