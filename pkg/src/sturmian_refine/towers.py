"""Rokhlin towers of the Sturmian refinements and the word machinery built on their codes.

P^{r_k - 1} splits into two towers over I_k and I_{k-1}; reading the labels
of a partition R down each tower gives its R-codes, and those codes evolve
by (u, v) -> (v, v^c u).  The later part of the module builds the words
w, w', w'' and z from the level-k codes and checks the periodicity and
name formulas for the finer five-tower picture, exactly, level by level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .continued_fractions import ConvergentTable, convergents, interval_I
from .errors import HypothesisError, InputError, NotCodedError, VerificationFailure
from .exact_circle import AlphaSpec, Arc, point_difference
from .partitions import LabeledPartition, name_of_point, refine, sturmian_partition

Word = Sequence[Hashable]


def _levels_disjoint(alpha: AlphaSpec, arcs: Sequence[Arc]) -> bool:
    if len(arcs) <= 1:
        return True
    ordered = sorted(arcs, key=lambda a: alpha.key(a.start))
    for cur, nxt in zip(ordered, ordered[1:] + ordered[:1]):
        gap = point_difference(nxt.start, cur.start, alpha)
        ln = cur.length(alpha)
        if cur.start == nxt.start or alpha.sign(gap[0] - ln[0], gap[1] - ln[1]) < 0:
            return False
    return True


def _tiles_circle(alpha: AlphaSpec, arcs: Sequence[Arc]) -> bool:
    """The arcs are pairwise disjoint and cover the circle."""
    if not arcs:
        return False
    ordered = sorted(arcs, key=lambda a: alpha.key(a.start))
    if len({a.start for a in ordered}) != len(ordered):
        return False
    return all(cur.end == nxt.start for cur, nxt in zip(ordered, ordered[1:] + ordered[:1]))


@dataclass(frozen=True)
class RokhlinTower:
    """Levels T^{-m}(base) for i <= m < j; level t is T^{-(i+t)}(base)."""

    alpha: AlphaSpec
    base_set: Arc
    i: int
    j: int

    def __post_init__(self):
        if self.j <= self.i:
            raise InputError(f"empty tower [{self.i}, {self.j})")
        if not _levels_disjoint(self.alpha, self.levels()):
            raise VerificationFailure(f"levels of {self!r} overlap")

    @property
    def height(self) -> int:
        return self.j - self.i

    def level(self, t: int) -> Arc:
        return self.base_set.preimage(self.i + t)

    def levels(self) -> list[Arc]:
        return [self.level(t) for t in range(self.height)]

    @property
    def base(self) -> Arc:
        return self.level(0)

    @property
    def top(self) -> Arc:
        return self.level(self.height - 1)

    def __repr__(self):
        return f"RokhlinTower({self.base_set!r}, {self.i}, {self.j})"


@dataclass(frozen=True)
class TowerPair:
    k: int
    left: RokhlinTower
    right: RokhlinTower
    table: ConvergentTable = field(repr=False, compare=False)

    def levels(self) -> list[Arc]:
        return self.left.levels() + self.right.levels()


def three_lengths_towers(alpha: AlphaSpec, k: int, check: bool = True) -> TowerPair:
    """The towers Lambda(I_k, 0, q_{k-1}) and Lambda(I_{k-1}, 0, q_k) forming P^{r_k - 1}."""
    if k < 1:
        raise InputError("k must be >= 1")
    table = convergents(alpha, k + 1)
    left = RokhlinTower(alpha, interval_I(table, k), 0, table.q[k - 1])
    right = RokhlinTower(alpha, interval_I(table, k - 1), 0, table.q[k])
    pair = TowerPair(k, left, right, table)
    if check:
        levels = set(pair.levels())
        arcs = {a for a, _ in refine(sturmian_partition(alpha), table.r[k] - 1, names=False).arcs()}
        if levels != arcs:
            raise VerificationFailure(f"towers at k={k} do not form P^(r_k - 1)")
    return pair


def verify_tower_inclusion(alpha: AlphaSpec, k: int) -> bool:
    """T^{-(q_{k-1} + s q_k)} I_k lies in I_{k-1} for 0 <= s < c_{k+1}."""
    if k < 1:
        raise InputError("k must be >= 1")
    table = convergents(alpha, k + 1)
    Ik, Ik1 = interval_I(table, k), interval_I(table, k - 1)
    return all(
        Ik1.contains_arc(Ik.preimage(table.q[k - 1] + s * table.q[k]), alpha)
        for s in range(table.c(k + 1))
    )


def tower_code(R: LabeledPartition, tower: RokhlinTower) -> tuple:
    """Labels of R read from the top level down to the base."""
    if R.alpha != tower.alpha:
        raise InputError("partition and tower use different alpha")
    arcs = R.arcs()
    out = []
    for t in range(tower.height):
        level = tower.base_set.preimage(tower.j - 1 - t)
        arc, label = arcs[R.arc_index_at(level.start)]
        if not arc.contains_arc(level, R.alpha):
            raise NotCodedError(f"level {level!r} straddles a cutpoint of the partition")
        out.append(label)
    return tuple(out)


def iterate_codes(u: Word, v: Word, c_next: int) -> tuple[Word, Word]:
    """Codes of the next tower pair: (v, v^c u)."""
    if c_next < 1:
        raise InputError("c_next must be positive")
    return v, v * c_next + u


@dataclass(frozen=True)
class ZWords:
    w: Word
    w_prime: Word
    w_dprime: Word
    z: Word


def build_zwords(u: Word, v: Word, c1: int, c2: int, c3: int) -> ZWords:
    """w = v^c1 u, w' = w^c2 v, w'' = w'^c3 w and z = w'' w'."""
    if not u or not v:
        raise InputError("u and v must be non-empty")
    w = v * c1 + u
    w1 = w * c2 + v
    w2 = w1 * c3 + w
    return ZWords(w, w1, w2, w2 + w1)


def rotate_word(word: Word, s: int = 1) -> Word:
    """Cyclic rotation to the right by s places; rotate(w)_j = w_{j-1}."""
    n = len(word)
    s %= n
    return word[n - s:] + word[: n - s] if s else word


def per_set(word: Word, p: int) -> frozenset[int]:
    """Positions j with word_j == word_{(j - p) mod |word|}."""
    n = len(word)
    if not 1 <= p < n:
        raise InputError(f"shift p={p} out of range for length {n}")
    return frozenset(j for j in range(n) if word[j] == word[(j - p) % n])


def _check_boundary(u: Word, v: Word) -> None:
    if not u or not v:
        raise HypothesisError("u and v must be non-empty")
    if u[0] == v[0]:
        raise HypothesisError("u and v start with the same letter")
    if u[-1] == v[-1]:
        raise HypothesisError("u and v end with the same letter")


def verify_per_structure(u: Word, v: Word, z: Word, w_prime_len: int) -> bool:
    """[0, |z|-|v|-|u|) lies in Per(z) while |z|-1 and |z|-|v|-|u| do not."""
    _check_boundary(u, v)
    per = per_set(z, w_prime_len)
    edge = len(z) - len(v) - len(u)
    if edge < 0:
        raise InputError("z is shorter than uv")
    return all(j in per for j in range(edge)) and (len(z) - 1) not in per and edge not in per


@dataclass(frozen=True)
class Decomposition:
    k: int
    I: Arc
    J: Arc
    K: Arc
    towers: dict


def decompose_ABCDE(alpha: AlphaSpec, k: int) -> Decomposition:
    """Five towers over I = I_{k+3}, K = T^{-q_{k+2}} I and J = I_{k+2} minus K.

    A = (I, 0, q_{k+2}), B = (K, 0, r_k - 1), C = (K, r_k - 1, q_{k+3}),
    D = (J, r_k - 1, q_{k+3}), E = (J, 0, r_k - 1).
    """
    if k < 1:
        raise InputError("k must be >= 1")
    table = convergents(alpha, k + 4)
    q, r = table.q, table.r
    big_i = interval_I(table, k + 3)
    i2 = interval_I(table, k + 2)
    big_k = big_i.preimage(q[k + 2])
    if big_k.start == i2.start:
        big_j = Arc(big_k.end, i2.end)
    elif big_k.end == i2.end:
        big_j = Arc(i2.start, big_k.start)
    else:
        raise VerificationFailure("T^{-q_{k+2}} I_{k+3} does not share an endpoint with I_{k+2}")
    low = r[k] - 1
    specs = {
        "A": (big_i, 0, q[k + 2]),
        "B": (big_k, 0, low),
        "C": (big_k, low, q[k + 3]),
        "D": (big_j, low, q[k + 3]),
        "E": (big_j, 0, low),
    }
    towers = {name: RokhlinTower(alpha, base, i, j) for name, (base, i, j) in specs.items() if j > i}
    levels = [lv for t in towers.values() for lv in t.levels()]
    if not _tiles_circle(alpha, levels):
        raise VerificationFailure(f"towers A..E do not tile the circle at k={k}")
    return Decomposition(k, big_i, big_j, big_k, towers)


@dataclass
class NameFormulaReport:
    k: int
    name_length: int
    checked: dict
    mismatches: list
    per_violations: list
    top_is_z: bool
    skipped: bool = False

    @property
    def ok(self) -> bool:
        return self.top_is_z and not self.mismatches and not self.per_violations

    def as_dict(self) -> dict:
        return {
            "k": self.k, "name_length": self.name_length, "checked": dict(self.checked),
            "mismatches": [list(map(str, m)) for m in self.mismatches],
            "per_violations": [list(map(str, m)) for m in self.per_violations],
            "top_is_z": self.top_is_z, "skipped": self.skipped, "ok": self.ok,
        }


def level_codes(R: LabeledPartition, k: int) -> tuple[tuple, tuple]:
    """R-codes (u, v) of the two towers forming P^{r_k - 1}."""
    pair = three_lengths_towers(R.alpha, k, check=False)
    return tower_code(R, pair.left), tower_code(R, pair.right)


def verify_name_formulas(R: LabeledPartition, k: int, level_cap: int = 2000) -> NameFormulaReport:
    """Compare exact R-names of length r_{k+3} of every level with the closed forms.

    Levels of A, B, C (T^{-m} I for m < r_{k+3}) must carry a rotation of z;
    levels of E carry w''-suffix . w'' . w'-prefix and miss two positions of
    their Per set; D repeats C level by level.
    """
    alpha = R.alpha
    table = convergents(alpha, k + 4)
    q, r, rk = table.q, table.r, table.r[k]
    if R.is_trivial or not R.is_sturmian_measurable:
        raise HypothesisError("R must be a non-trivial Sturmian-measurable partition")
    cc = R.cut_indices()
    if not {0, rk - 1} <= cc or max(cc) > rk - 1:
        raise HypothesisError(f"cut-indices must lie in [0, {rk - 1}] and contain both ends")
    u, v = level_codes(R, k)
    _check_boundary(u, v)
    zw = build_zwords(u, v, table.c(k + 1), table.c(k + 2), table.c(k + 3))
    z, w1, w2 = zw.z, zw.w_prime, zw.w_dprime
    length = r[k + 3]
    assert len(z) == length
    dec = decompose_ABCDE(alpha, k)
    report = NameFormulaReport(k, length, {}, [], [], False)
    top = interval_I(table, k + 2).preimage(q[k + 3] - 1)
    report.top_is_z = tuple(name_of_point(R, top.start, length)) == tuple(z)
    if length > level_cap:
        report.skipped = True
        return report

    named = refine(R, length)

    def check(tower_name, m, arc, expected):
        got = tuple(named.label_at(arc.start))
        if got != tuple(expected):
            report.mismatches.append((tower_name, m, got, tuple(expected)))
        return got

    for name in ("A", "B", "C", "D"):
        tower = dec.towers.get(name)
        if tower is None:
            continue
        offset = 0 if name == "A" else q[k + 2]
        for m in range(tower.i, tower.j):
            shift = m + offset + 1
            check(name, m, tower.base_set.preimage(m), rotate_word(z, shift))
        report.checked[name] = tower.height
    tower = dec.towers.get("E")
    if tower is not None:
        for m in range(tower.i, tower.j):
            expected = w2[q[k + 3] - m - 1:] + w2 + w1[: q[k + 2] - m - 1]
            got = check("E", m, tower.base_set.preimage(m), expected)
            per = per_set(got, len(w1))
            for j in ((m + len(w1)) % length, (m - rk + 1) % length):
                if j in per:
                    report.per_violations.append(("E", m, j))
        report.checked["E"] = tower.height
    return report
