"""Labeled circular arc partitions, their lattice operations and refinements.

A partition is stored as its sorted cutpoints together with the label of
the arc starting at each cutpoint; arc ``i`` is ``[cuts[i], cuts[i+1])`` and
the last arc wraps through 0.  Partitions are kept canonical: circularly
adjacent arcs always carry different labels, so the cutpoints are exactly
the boundary points of the partition.  A one-set partition has no cutpoints
and a single label.
"""

from __future__ import annotations

import random
import string
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Sequence

from .continued_fractions import locate_k, table_for
from .errors import (
    AlphaMismatchError,
    DuplicateCutError,
    InputError,
    NotSturmianMeasurableError,
    ResourceCapError,
    TrivialPartitionError,
    VerificationFailure,
)
from .exact_circle import (
    AlphaSpec,
    Arc,
    CirclePoint,
    apply_rotation,
    locate,
    orbit_point,
    sort_points,
)


@dataclass(frozen=True)
class Limits:
    max_power: int = 5000
    max_cuts: int = 100_000


DEFAULT_LIMITS = Limits()


class LabeledPartition:
    """Canonical labeled partition of the circle into half-open arcs."""

    __slots__ = ("alpha", "cuts", "labels", "keys", "_chain", "_lock")

    def __init__(self, alpha: AlphaSpec, starts: Sequence[CirclePoint], labels: Sequence[Hashable]):
        if len(starts) != len(labels):
            raise InputError("starts and labels differ in length")
        if not starts:
            raise InputError("a partition needs at least one arc")
        if len(set(starts)) != len(starts):
            raise DuplicateCutError("duplicate cutpoints")
        by_point = dict(zip(starts, labels))
        cuts = sort_points(alpha, starts)
        self._set(alpha, cuts, [by_point[c] for c in cuts])

    @classmethod
    def _from_sorted(cls, alpha: AlphaSpec, cuts: Sequence[CirclePoint], labels: Sequence[Hashable],
                     keys: Sequence[int] | None = None) -> "LabeledPartition":
        obj = cls.__new__(cls)
        obj._set(alpha, cuts, labels, keys)
        return obj

    def _set(self, alpha, cuts, labels, keys=None):
        n = len(cuts)
        keep = [i for i in range(n) if labels[i] != labels[i - 1]]
        if n and not keep:
            cuts, labels, keys = (), (labels[0],), ()
        elif len(keep) < n:
            cuts = tuple(cuts[i] for i in keep)
            labels = tuple(labels[i] for i in keep)
            keys = None
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "cuts", tuple(cuts))
        object.__setattr__(self, "labels", tuple(labels))
        if keys is None:
            keys = tuple(alpha.key(c) for c in self.cuts)
        object.__setattr__(self, "keys", tuple(keys))
        object.__setattr__(self, "_chain", None)
        object.__setattr__(self, "_lock", threading.Lock())

    def __setattr__(self, name, value):
        raise AttributeError("LabeledPartition is immutable")

    def __eq__(self, other):
        return (isinstance(other, LabeledPartition) and self.alpha == other.alpha
                and self.cuts == other.cuts and self.labels == other.labels)

    def __hash__(self):
        return hash((self.alpha, self.cuts, self.labels))

    def __repr__(self):
        if self.is_trivial:
            return f"LabeledPartition(trivial {self.labels[0]!r})"
        body = ", ".join(f"{c!r}:{lab!r}" for c, lab in zip(self.cuts, self.labels))
        return f"LabeledPartition({body})"

    def __len__(self):
        return len(self.labels)

    # structure ------------------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return not self.cuts

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self.labels)

    @property
    def is_sturmian_measurable(self) -> bool:
        return all(c.orbit_index is not None for c in self.cuts)

    def cut_indices(self) -> frozenset[int]:
        out = set()
        for c in self.cuts:
            i = c.orbit_index
            if i is None:
                raise NotSturmianMeasurableError(f"cutpoint {c!r} is not an orbit point")
            out.add(i)
        return frozenset(out)

    def arcs(self) -> list[tuple[Arc, Hashable]]:
        if self.is_trivial:
            zero = CirclePoint(0, 0)
            return [(Arc(zero, zero), self.labels[0])]
        n = len(self.cuts)
        return [(Arc(self.cuts[i], self.cuts[(i + 1) % n]), self.labels[i]) for i in range(n)]

    def arc_index_at(self, x: CirclePoint) -> int:
        if self.is_trivial:
            return 0
        return (locate(self.alpha, self.cuts, self.keys, x) - 1) % len(self.cuts)

    def label_at(self, x: CirclePoint) -> Hashable:
        return self.labels[self.arc_index_at(x)]

    def relabeled(self, mapping=None) -> "LabeledPartition":
        """Rename labels; by default to 0, 1, 2, ... in order of first appearance."""
        if mapping is None:
            mapping = {}
            for lab in self.labels:
                mapping.setdefault(lab, len(mapping))
        return LabeledPartition._from_sorted(self.alpha, self.cuts, [mapping[x] for x in self.labels], self.keys)

    def block_signature(self) -> tuple:
        """Labels renamed by first appearance; equal iff same blocks over same cuts."""
        seen: dict = {}
        return tuple(seen.setdefault(lab, len(seen)) for lab in self.labels)


def equivalent(R: LabeledPartition, S: LabeledPartition) -> bool:
    """Same sets, ignoring label names."""
    _same_alpha(R, S)
    return R.cuts == S.cuts and R.block_signature() == S.block_signature()


def _same_alpha(R: LabeledPartition, S: LabeledPartition) -> None:
    if R.alpha != S.alpha:
        raise AlphaMismatchError(f"{R.alpha!r} != {S.alpha!r}")


def _as_point(cut) -> CirclePoint:
    if isinstance(cut, CirclePoint):
        return cut
    if isinstance(cut, bool):
        raise InputError("boolean is not a cut")
    if isinstance(cut, int):
        return orbit_point(cut)
    if isinstance(cut, (Fraction, str)):
        try:
            return CirclePoint(Fraction(cut), 0)
        except ValueError:
            raise InputError(f"bad rational cut {cut!r}") from None
    raise InputError(f"cannot interpret {cut!r} as a cutpoint")


def from_cut_labels(alpha: AlphaSpec, assignments: Iterable[tuple[object, Hashable]]) -> LabeledPartition:
    """Build a partition from ``(cut, label)`` pairs.

    A cut is an ``int`` orbit index, a rational (``Fraction`` or ``"p/q"``),
    or a :class:`CirclePoint`.  Each label covers the arc from its cut to the
    next cut in circle order.
    """
    pairs = [(_as_point(c), lab) for c, lab in assignments]
    if not pairs:
        raise InputError("no cut assignments")
    return LabeledPartition(alpha, [p for p, _ in pairs], [lab for _, lab in pairs])


def sturmian_partition(alpha: AlphaSpec) -> LabeledPartition:
    """P = {[0, 1-alpha) -> '0', [1-alpha, 1) -> '1'}."""
    return from_cut_labels(alpha, [(0, "0"), (1, "1")])


def trivial_partition(alpha: AlphaSpec, label: Hashable = "*") -> LabeledPartition:
    return LabeledPartition(alpha, [CirclePoint(0, 0)], [label])


def _sweep_labels(merged: Sequence[CirclePoint], part: LabeledPartition) -> list:
    """Label of ``part`` at each point of ``merged`` (a sorted superset of its cuts)."""
    if part.is_trivial:
        return [part.labels[0]] * len(merged)
    cuts, labels = part.cuts, part.labels
    out = []
    idx = -1
    nxt = cuts[0]
    last = len(cuts) - 1
    for p in merged:
        if p == nxt:
            idx += 1
            nxt = cuts[idx + 1] if idx < last else None
        out.append(labels[idx])
    return out


def join(R: LabeledPartition, S: LabeledPartition) -> LabeledPartition:
    """R v S, labelled by pairs ``(label_R, label_S)``."""
    _same_alpha(R, S)
    alpha = R.alpha
    merged = sort_points(alpha, set(R.cuts) | set(S.cuts))
    if not merged:
        return trivial_partition(alpha, (R.labels[0], S.labels[0]))
    labels = list(zip(_sweep_labels(merged, R), _sweep_labels(merged, S)))
    return LabeledPartition._from_sorted(alpha, merged, labels)


def preimage(R: LabeledPartition, j: int) -> LabeledPartition:
    """T^{-j} R: every cutpoint x becomes T^{-j} x, labels unchanged."""
    if j == 0 or R.is_trivial:
        return R
    moved = [apply_rotation(c, -j) for c in R.cuts]
    return LabeledPartition(R.alpha, moved, R.labels)


class _Chain:
    """Incremental refinements R^1, R^2, ... of one partition.

    Arcs carry integer block ids; ``parent[id] = (previous id, letter)`` is
    the trie from which the R-names are read back on demand.
    """

    def __init__(self, R: LabeledPartition):
        self.R = R
        self.alpha = R.alpha
        self.letters = list(dict.fromkeys(R.labels))
        letter_of = {lab: i for i, lab in enumerate(self.letters)}
        self.base_cuts = R.cuts
        self.base_letters = [letter_of[lab] for lab in R.labels]
        self.power = 1
        self.cuts = list(R.cuts)
        self.keys = list(R.keys)
        self.present = set(self.cuts)
        self.parent: list[tuple[int, int]] = [(-1, i) for i in range(len(self.letters))]
        self.node: dict[tuple[int, int], int] = {(-1, i): i for i in range(len(self.letters))}
        self.ids = list(self.base_letters) if self.cuts else [0]

    def step(self, limits: Limits) -> None:
        n = self.power
        alpha = self.alpha
        if self.cuts:
            shifted = [apply_rotation(c, -n) for c in self.base_cuts]
            if len(self.cuts) + len(shifted) > limits.max_cuts:
                raise ResourceCapError(f"refinement would exceed {limits.max_cuts} cutpoints")
            letter_at = dict(zip(shifted, self.base_letters))
            order = sort_points(alpha, shifted)
            for p in order:
                if p in self.present:
                    continue
                pos = locate(alpha, self.cuts, self.keys, p)
                self.cuts.insert(pos, p)
                self.keys.insert(pos, alpha.key(p))
                self.ids.insert(pos, self.ids[pos - 1])
                self.present.add(p)
            # letter of T^{-n} R on each arc; arcs before the first shifted
            # cut wrap around to the last one
            starts = [locate(alpha, self.cuts, self.keys, p) - 1 for p in order]
            node, parent, ids = self.node, self.parent, self.ids
            bounds = [0] + starts + [len(ids)]
            letters = [letter_at[order[-1]]] + [letter_at[p] for p in order]
            new_ids = []
            for lo, hi, letter in zip(bounds, bounds[1:], letters):
                for old in ids[lo:hi]:
                    key = (old, letter)
                    nid = node.get(key)
                    if nid is None:
                        nid = len(parent)
                        parent.append(key)
                        node[key] = nid
                    new_ids.append(nid)
            self.ids = new_ids
        else:
            key = (self.ids[0], 0)
            nid = self.node.get(key)
            if nid is None:
                nid = len(self.parent)
                self.parent.append(key)
                self.node[key] = nid
            self.ids = [nid]
        self.power = n + 1

    def advance(self, n: int, limits: Limits) -> None:
        if n > limits.max_power:
            raise ResourceCapError(f"refinement power {n} exceeds cap {limits.max_power}")
        while self.power < n:
            self.step(limits)

    def name(self, nid: int, cache: dict) -> tuple:
        got = cache.get(nid)
        if got is not None:
            return got
        letters = []
        cur = nid
        while cur >= 0:
            prev, letter = self.parent[cur]
            letters.append(self.letters[letter])
            cur = prev
        got = tuple(reversed(letters))
        cache[nid] = got
        return got

    def snapshot(self, names: bool) -> LabeledPartition:
        if names:
            cache: dict = {}
            labels = [self.name(i, cache) for i in self.ids]
        else:
            labels = list(self.ids)
        if not self.cuts:
            return trivial_partition(self.alpha, labels[0])
        return LabeledPartition._from_sorted(self.alpha, list(self.cuts), labels, list(self.keys))

    def sturmian_form(self) -> tuple[int, int] | None:
        """(ell, m) when the current refinement is T^{-ell} P^m."""
        return _sturmian_form(self.cuts, self.ids)


def _sturmian_form(cuts: Sequence[CirclePoint], labels: Sequence[Hashable]) -> tuple[int, int] | None:
    if not cuts:
        return None
    idx = [c.orbit_index for c in cuts]
    if None in idx:
        return None
    lo, hi = min(idx), max(idx)
    if hi - lo + 1 != len(cuts) or len(set(labels)) != len(labels):
        return None
    return lo, hi - lo


def _chain_for(R: LabeledPartition, n: int, limits: Limits) -> _Chain:
    # callers hold R._lock
    chain = R._chain
    if chain is None or chain.power > n:
        chain = _Chain(R)
        object.__setattr__(R, "_chain", chain)
    chain.advance(n, limits)
    return chain


def refine(R: LabeledPartition, n: int, limits: Limits = DEFAULT_LIMITS, names: bool = True) -> LabeledPartition:
    """R^n = R v T^{-1}R v ... v T^{-(n-1)}R.

    With ``names`` the labels are the R-names (n-tuples of R's labels);
    otherwise they are opaque integers, which is much cheaper for long chains.
    """
    if n < 1:
        raise InputError("refinement power must be >= 1")
    if n == 1 and not names:
        return R
    if n > limits.max_power:
        raise ResourceCapError(f"refinement power {n} exceeds cap {limits.max_power}")
    with R._lock:
        if not names:
            shortcut = _shifted_sturmian_power(R, n, limits)
            if shortcut is not None:
                return shortcut
        chain = _chain_for(R, n, limits)
        return chain.snapshot(names)


def _shifted_sturmian_power(R: LabeledPartition, n: int, limits: Limits) -> LabeledPartition | None:
    # once R^k = T^{-ell} P^m, every later R^(k+j) is T^{-ell} P^(m+j),
    # so the cutpoints can be written down without stepping the chain
    chain = R._chain
    if chain is None or chain.power > n:
        chain = _Chain(R)
        object.__setattr__(R, "_chain", chain)
    while chain.power < n and chain.sturmian_form() is None:
        chain.step(limits)
    form = chain.sturmian_form()
    if form is None or chain.power == n:
        return None
    ell, m = form
    top = ell + m + n - chain.power
    if top - ell + 1 > limits.max_cuts:
        raise ResourceCapError(f"refinement would exceed {limits.max_cuts} cutpoints")
    cuts = sort_points(R.alpha, [orbit_point(i) for i in range(ell, top + 1)])
    return LabeledPartition._from_sorted(R.alpha, cuts, list(range(len(cuts))))


def refinements(R: LabeledPartition, limits: Limits = DEFAULT_LIMITS) -> Iterator[tuple[int, _Chain]]:
    """Yield ``(n, chain)`` for n = 1, 2, ...; the chain is live and reused."""
    chain = _Chain(R)
    while True:
        yield chain.power, chain
        chain.advance(chain.power + 1, limits)


def is_finer(R: LabeledPartition, S: LabeledPartition) -> bool:
    """Every set of R lies inside a single set of S."""
    _same_alpha(R, S)
    if not set(S.cuts) <= set(R.cuts):
        return False
    if R.is_trivial:
        return True
    induced: dict = {}
    for lab_r, lab_s in zip(R.labels, _sweep_labels(R.cuts, S)):
        if induced.setdefault(lab_r, lab_s) != lab_s:
            return False
    return True


@dataclass(frozen=True)
class CutIndexProfile:
    indices: frozenset[int]
    ell: int
    n: int


def _require_nontrivial(R: LabeledPartition) -> None:
    if R.is_trivial:
        raise TrivialPartitionError("the partition has a single set")


def cut_index_profile(R: LabeledPartition) -> CutIndexProfile:
    """Cut-indices of R; ``ell`` is the least one and ``n`` their spread."""
    _require_nontrivial(R)
    idx = R.cut_indices()
    return CutIndexProfile(idx, min(idx), max(idx) - min(idx))


def is_interval_partition(R: LabeledPartition) -> bool:
    return len(set(R.labels)) == len(R.labels)


def equals_sturmian_refinement(R: LabeledPartition) -> tuple[int, int] | None:
    """``(ell, m)`` if R equals T^{-ell} P^m as a partition, else None."""
    return _sturmian_form(R.cuts, R.labels)


def name_of_point(R: LabeledPartition, x: CirclePoint, n: int) -> tuple:
    """The R-name of x of length n: labels of x, T x, ..., T^{n-1} x."""
    if n < 1:
        raise InputError("name length must be >= 1")
    return tuple(R.label_at(apply_rotation(x, i)) for i in range(n))


def theorem1_witness(R: LabeledPartition, max_power: int,
                     limits: Limits = DEFAULT_LIMITS) -> tuple[int, int, int] | None:
    """Least ``k <= max_power`` with R^k = T^{-ell} P^m, as ``(k, ell, m)``.

    Returns None when the cap is reached first.
    """
    _require_nontrivial(R)
    top = max(R.cut_indices())
    for k, chain in refinements(R, limits):
        form = chain.sturmian_form()
        if form is not None:
            ell, m = form
            if not ell < top:
                raise VerificationFailure(f"witness ell={ell} is not below n={top}")
            return k, ell, m
        if k >= max_power:
            return None
    return None


@dataclass(frozen=True)
class Theorem2Bound:
    ell: int
    n: int
    k: int
    K: int
    M: int


def theorem2_bound(R: LabeledPartition) -> Theorem2Bound:
    """Refinement power K and target power M with R^K = T^{-ell} P^M."""
    prof = cut_index_profile(R)
    table = table_for(R.alpha, prof.n, extra=3)
    k = locate_k(table, prof.n)
    r = table.r
    K = r[k + 3] + 2 * r[k] - prof.n - 2
    M = r[k + 3] + 2 * r[k] - 3
    return Theorem2Bound(prof.ell, prof.n, k, K, M)


@dataclass(frozen=True)
class Theorem2Report:
    holds: bool
    K: int
    M: int
    ell: int
    n: int
    k: int
    lhs_arcs: int
    rhs_arcs: int
    min_k: int | None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds, "ell": self.ell, "n": self.n, "k": self.k,
            "K": self.K, "M": self.M, "lhs_arcs": self.lhs_arcs,
            "rhs_arcs": self.rhs_arcs, "min_k": self.min_k,
        }


def verify_theorem2(R: LabeledPartition, limits: Limits = DEFAULT_LIMITS) -> Theorem2Report:
    """Compute R^K and T^{-ell} P^M independently and compare them exactly.

    ``min_k`` is the least power at which R^k already has the form
    T^{-ell'} P^m, found along the way.
    """
    b = theorem2_bound(R)
    if max(b.K, b.M) > limits.max_power:
        raise ResourceCapError(f"K={b.K}, M={b.M} exceed power cap {limits.max_power}")
    min_k = None
    chain = _Chain(R)
    while True:
        if min_k is None and chain.sturmian_form() is not None:
            min_k = chain.power
        if chain.power >= b.K:
            break
        chain.step(limits)
    lhs = chain.snapshot(names=False)
    rhs = preimage(refine(sturmian_partition(R.alpha), b.M, limits, names=False), b.ell)
    holds = equivalent(lhs, rhs)
    return Theorem2Report(holds, b.K, b.M, b.ell, b.n, b.k, len(lhs), len(rhs), min_k)


def _symbol(i: int) -> str:
    letters = string.ascii_uppercase
    return letters[i] if i < len(letters) else f"S{i}"


def coarsening(alpha: AlphaSpec, n: int, labels: Sequence[Hashable]) -> LabeledPartition:
    """Label the n+1 arcs of P^n (in circle order from 0) with ``labels``."""
    if len(labels) != n + 1:
        raise InputError(f"P^{n} has {n + 1} arcs, got {len(labels)} labels")
    cuts = sort_points(alpha, [orbit_point(i) for i in range(n + 1)])
    return LabeledPartition._from_sorted(alpha, cuts, list(labels))


def set_partitions(size: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of the given length (labelings up to renaming)."""
    def grow(prefix, top):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            yield from grow(prefix + [v], max(top, v))
    if size:
        yield from grow([0], 0)


def all_coarsenings(alpha: AlphaSpec, n: int) -> Iterator[LabeledPartition]:
    """Every non-trivial coarsening of P^n, one per labeling up to renaming."""
    for rgs in set_partitions(n + 1):
        if max(rgs) == 0:
            continue
        yield coarsening(alpha, n, [_symbol(v) for v in rgs])


def random_coarsening(alpha: AlphaSpec, n: int, num_labels: int, seed) -> LabeledPartition:
    """A random surjective labeling of the arcs of P^n, deterministic per seed."""
    if n < 1:
        raise InputError("n must be >= 1")
    if not 2 <= num_labels <= n + 1:
        raise InputError(f"need 2 <= num_labels <= {n + 1}, got {num_labels}")
    rng = random.Random(seed)
    while True:
        picks = list(range(num_labels)) + [rng.randrange(num_labels) for _ in range(n + 1 - num_labels)]
        rng.shuffle(picks)
        R = coarsening(alpha, n, [_symbol(v) for v in picks])
        if not R.is_trivial:
            return R


def symmetric_partition(alpha: AlphaSpec, m: int = 2) -> LabeledPartition:
    """Two-set partition invariant under rotation by 1/m.

    ``X`` is the union of [j/m, j/m + 1/(2m)) and ``Y`` its complement; m=2
    gives [0,1/4) u [1/2,3/4) versus [1/4,1/2) u [3/4,1).
    """
    if m < 1:
        raise InputError("m must be >= 1")
    pairs = []
    for j in range(m):
        pairs.append((Fraction(2 * j, 2 * m), "X"))
        pairs.append((Fraction(2 * j + 1, 2 * m), "Y"))
    return from_cut_labels(alpha, pairs)


@dataclass(frozen=True)
class SymmetricReport:
    max_n: int
    connected_at: tuple[int, ...]
    arcs: tuple[int, ...]

    @property
    def all_disconnected(self) -> bool:
        return not self.connected_at


def symmetric_counterexample_check(alpha: AlphaSpec, max_n: int, R: LabeledPartition | None = None,
                                   limits: Limits = DEFAULT_LIMITS) -> SymmetricReport:
    """Check that R^n has a disconnected set for every n <= max_n."""
    if max_n < 1:
        raise InputError("max_n must be >= 1")
    if R is None:
        R = symmetric_partition(alpha)
    connected, arcs = [], []
    for n, chain in refinements(R, limits):
        arcs.append(len(chain.ids))
        if len(set(chain.ids)) == len(chain.ids):
            connected.append(n)
        if n >= max_n:
            break
    return SymmetricReport(max_n, tuple(connected), tuple(arcs))


def label_text(label: Hashable) -> str:
    if isinstance(label, tuple):
        return "".join(map(str, label)) if all(len(str(x)) == 1 for x in label) else ".".join(map(str, label))
    return str(label)


def partition_from_json(obj, alpha: AlphaSpec | None = None) -> LabeledPartition:
    """Read ``{"alpha": ..., "cuts": [{"orbit": i | "rational": "p/q", "label": s}, ...]}``.

    ``alpha`` overrides the file's angle when given.
    """
    if not isinstance(obj, dict) or "cuts" not in obj:
        raise InputError("partition JSON needs a 'cuts' list")
    if alpha is None:
        if "alpha" not in obj:
            raise InputError("partition JSON has no alpha")
        alpha = AlphaSpec.from_json(obj["alpha"])
    pairs = []
    for cut in obj["cuts"]:
        if not isinstance(cut, dict) or "label" not in cut:
            raise InputError(f"bad cut entry {cut!r}")
        if "orbit" in cut:
            i = cut["orbit"]
            if not isinstance(i, int) or isinstance(i, bool) or i < 0:
                raise InputError(f"orbit index must be a non-negative integer, got {i!r}")
            pairs.append((i, cut["label"]))
        elif "rational" in cut:
            pairs.append((str(cut["rational"]), cut["label"]))
        else:
            raise InputError(f"cut entry needs 'orbit' or 'rational': {cut!r}")
    return from_cut_labels(alpha, pairs)


def partition_to_json(R: LabeledPartition) -> dict:
    cuts = []
    for c, lab in zip(R.cuts, R.labels):
        i = c.orbit_index
        if i is not None:
            cuts.append({"orbit": i, "label": label_text(lab)})
        elif c.b == 0:
            cuts.append({"rational": str(c.a), "label": label_text(lab)})
        else:
            raise InputError(f"cut {c!r} is neither an orbit point nor rational")
    if R.is_trivial:
        cuts.append({"orbit": 0, "label": label_text(R.labels[0])})
    return {"alpha": R.alpha.to_json(), "cuts": cuts}
