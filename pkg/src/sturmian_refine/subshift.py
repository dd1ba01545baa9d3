"""Languages, local rules and sliding block codes over Sturmian and full shifts.

Words are plain strings of one-character symbols.  The Sturmian language of
length m is read off the arcs of P^m, so it is exact and has m + 1 words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import HypothesisError, InputError, LanguageError, ResourceCapError
from .exact_circle import AlphaSpec
from .partitions import (
    DEFAULT_LIMITS,
    LabeledPartition,
    Limits,
    cut_index_profile,
    refine,
    sturmian_partition,
    theorem2_bound,
)

MAX_FULL_SHIFT_LENGTH = 24


@dataclass(frozen=True)
class LanguageModel:
    kind: str  # "sturmian" or "full_shift"
    alpha: AlphaSpec | None = None
    alphabet: tuple[str, ...] = ("0", "1")

    @classmethod
    def sturmian(cls, alpha: AlphaSpec) -> "LanguageModel":
        return cls("sturmian", alpha, ("0", "1"))

    @classmethod
    def full_shift(cls, alphabet: Iterable[str]) -> "LanguageModel":
        symbols = tuple(sorted(set(alphabet)))
        if not symbols:
            raise InputError("empty alphabet")
        if any(not isinstance(s, str) or len(s) != 1 for s in symbols):
            raise InputError("symbols must be one-character strings")
        return cls("full_shift", None, symbols)

    def __post_init__(self):
        if self.kind not in ("sturmian", "full_shift"):
            raise InputError(f"unknown model kind {self.kind!r}")
        if self.kind == "sturmian" and self.alpha is None:
            raise InputError("sturmian model needs alpha")

    @property
    def is_sturmian(self) -> bool:
        return self.kind == "sturmian"

    def to_json(self) -> dict:
        if self.is_sturmian:
            return {"sturmian": self.alpha.to_json()}
        return {"full_shift": list(self.alphabet)}

    @classmethod
    def from_json(cls, obj) -> "LanguageModel":
        if not isinstance(obj, dict) or len(obj) != 1:
            raise InputError("model must be {'sturmian': ...} or {'full_shift': [...]}")
        if "sturmian" in obj:
            return cls.sturmian(AlphaSpec.from_json(obj["sturmian"]))
        if "full_shift" in obj:
            return cls.full_shift(obj["full_shift"])
        raise InputError(f"unknown model {obj!r}")


def _check_full_length(model: LanguageModel, m: int, max_length: int) -> None:
    if not model.is_sturmian and len(model.alphabet) > 1 and m > max_length:
        raise ResourceCapError(f"full-shift words of length {m} exceed cap {max_length}")


def iter_language(model: LanguageModel, m: int, max_length: int = MAX_FULL_SHIFT_LENGTH) -> Iterator[str]:
    """Words of length m in lexicographic order."""
    if m < 1:
        raise InputError("word length must be >= 1")
    if model.is_sturmian:
        yield from language(model, m)
        return
    _check_full_length(model, m, max_length)
    for letters in itertools.product(model.alphabet, repeat=m):
        yield "".join(letters)


def language(model: LanguageModel, m: int, max_length: int = MAX_FULL_SHIFT_LENGTH) -> tuple[str, ...]:
    if m < 1:
        raise InputError("word length must be >= 1")
    if model.is_sturmian:
        cache = model.alpha._tables.setdefault("language", {})
        words = cache.get(m)
        if words is None:
            arcs = refine(sturmian_partition(model.alpha), m).arcs()
            words = tuple(sorted("".join(name) for _, name in arcs))
            cache[m] = words
        return words
    return tuple(iter_language(model, m, max_length))


def in_language(model: LanguageModel, word: str) -> bool:
    if not word:
        return False
    if model.is_sturmian:
        return word in set(language(model, len(word)))
    return all(ch in model.alphabet for ch in word)


@dataclass(frozen=True, eq=False)
class LocalRule:
    width: int
    model: LanguageModel
    table: Mapping[str, str] = field(repr=False)

    def __post_init__(self):
        if self.width < 1:
            raise InputError("width must be >= 1")
        table = dict(self.table)
        if any(not isinstance(v, str) or len(v) != 1 for v in table.values()):
            raise InputError("rule outputs must be one-character strings")
        domain = set(language(self.model, self.width))
        if set(table) != domain:
            missing = sorted(domain - set(table))
            extra = sorted(set(table) - domain)
            raise LanguageError(f"table keys differ from the language: missing {missing}, extra {extra}")
        object.__setattr__(self, "table", MappingProxyType(dict(sorted(table.items()))))

    def __call__(self, word: str) -> str:
        return self.table[word]

    def __eq__(self, other):
        if not isinstance(other, LocalRule):
            return NotImplemented
        return (self.width, self.model, dict(self.table)) == (other.width, other.model, dict(other.table))

    @property
    def outputs(self) -> frozenset[str]:
        return frozenset(self.table.values())

    @property
    def is_constant(self) -> bool:
        return len(self.outputs) == 1

    def to_json(self) -> dict:
        return {"model": self.model.to_json(), "width": self.width, "table": dict(self.table)}

    @classmethod
    def from_json(cls, obj) -> "LocalRule":
        try:
            return cls(int(obj["width"]), LanguageModel.from_json(obj["model"]), dict(obj["table"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed rule: {exc}") from None


def identity_rule(model: LanguageModel) -> LocalRule:
    return LocalRule(1, model, {a: a for a in language(model, 1)})


def constant_rule(model: LanguageModel, width: int = 1, symbol: str = "0") -> LocalRule:
    return LocalRule(width, model, {w: symbol for w in language(model, width)})


def example1_rule() -> LocalRule:
    """Width-2 rule on the full 2-shift: 11, 10 -> 0; 01 -> 1; 00 -> 2."""
    return LocalRule(2, LanguageModel.full_shift("01"), {"11": "0", "10": "0", "01": "1", "00": "2"})


def all_rules(model: LanguageModel, width: int, outputs: Iterable[str]) -> Iterator[LocalRule]:
    """Every table from L^width into the given output symbols."""
    words = language(model, width)
    outs = sorted(set(outputs))
    for values in itertools.product(outs, repeat=len(words)):
        yield LocalRule(width, model, dict(zip(words, values)))


def _apply(rule: LocalRule, word: str) -> str:
    m, t = rule.width, rule.table
    return "".join(t[word[i:i + m]] for i in range(len(word) - m + 1))


def sliding_block(rule: LocalRule, word: str) -> str:
    """Image of ``word`` under the sliding block code of length |word| - width + 1."""
    if len(word) < rule.width:
        raise InputError(f"word of length {len(word)} is shorter than the width {rule.width}")
    if not in_language(rule.model, word):
        raise LanguageError(f"{word!r} is not in the language")
    return _apply(rule, word)


def _constant_on_groups(rule: LocalRule, key) -> bool:
    seen: dict = {}
    for word, out in rule.table.items():
        if seen.setdefault(key(word), out) != out:
            return False
    return True


def is_minimal(rule: LocalRule) -> bool:
    """False iff the rule factors through dropping the last letter."""
    if rule.width == 1:
        return True
    return not _constant_on_groups(rule, lambda w: w[:-1])


def ignores_first_letter(rule: LocalRule) -> bool:
    # a width-1 rule always reads its only letter
    if rule.width == 1:
        return False
    return _constant_on_groups(rule, lambda w: w[1:])


def minimize(rule: LocalRule) -> LocalRule:
    while not is_minimal(rule):
        table = {w[:-1]: out for w, out in rule.table.items()}
        rule = LocalRule(rule.width - 1, rule.model, table)
    return rule


@dataclass(frozen=True)
class Injectivity:
    n: int
    injective: bool
    witness: tuple[str, str] | None = None


def injectivity_at(rule: LocalRule, n: int, max_length: int = MAX_FULL_SHIFT_LENGTH) -> Injectivity:
    """Decide injectivity of the length-n sliding block code by enumeration.

    A collision witness is the lexicographically least colliding pair.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    first: dict[str, str] = {}
    best: tuple[str, str] | None = None
    for word in iter_language(rule.model, rule.width + n - 1, max_length):
        image = _apply(rule, word)
        prev = first.setdefault(image, word)
        if prev is not word and (best is None or prev < best[0]):
            best = (prev, word)
    if best is None:
        return Injectivity(n, True)
    return Injectivity(n, False, best)


def rule_to_partition(rule: LocalRule) -> LabeledPartition:
    """Partition of the circle by the output letter at the first coordinate."""
    if not rule.model.is_sturmian:
        raise InputError("rule_to_partition needs a Sturmian model")
    refined = refine(sturmian_partition(rule.model.alpha), rule.width)
    return refined.relabeled({name: rule.table["".join(name)] for name in refined.alphabet})


@dataclass(frozen=True)
class MinimalN:
    n_min: int | None
    n_bound: int | None
    reason: str = ""

    def as_dict(self) -> dict:
        return {"n_min": self.n_min, "n_bound": self.n_bound, "reason": self.reason}


def minimal_injective_n(rule: LocalRule, limits: Limits = DEFAULT_LIMITS) -> MinimalN:
    """Least n with an injective length-n code, searched up to the refinement bound."""
    if not rule.model.is_sturmian:
        raise InputError("minimal_injective_n needs a Sturmian model")
    if rule.is_constant:
        return MinimalN(None, None, "not injective at any level: the rule is constant")
    if not is_minimal(rule):
        return MinimalN(None, None, "not injective at any level: the rule is not minimal")
    if ignores_first_letter(rule):
        return MinimalN(None, None, "not injective at any level: the rule ignores the first letter")
    bound = theorem2_bound(rule_to_partition(rule)).K
    if bound > limits.max_power:
        raise ResourceCapError(f"bound {bound} exceeds max_power {limits.max_power}")
    for n in range(1, bound + 1):
        if injectivity_at(rule, n).injective:
            return MinimalN(n, bound, "injective")
    return MinimalN(None, bound, "no injective length up to the bound")


@dataclass(frozen=True)
class Prop5Report:
    finite_injective: bool
    n_min: int | None
    n_bound: int | None
    infinite_nonconstant: bool
    nonconstant: bool
    ell: int | None
    span: int | None

    @property
    def agree(self) -> bool:
        return self.finite_injective == self.infinite_nonconstant == self.nonconstant

    def as_dict(self) -> dict:
        return {
            "finite_injective": self.finite_injective, "n_min": self.n_min, "n_bound": self.n_bound,
            "infinite_injective": "implied by finite_injective",
            "infinite_nonconstant": self.infinite_nonconstant, "nonconstant": self.nonconstant,
            "ell": self.ell, "span": self.span, "agree": self.agree,
        }


def prop5_report(rule: LocalRule, limits: Limits = DEFAULT_LIMITS, witness_lengths: int = 3) -> Prop5Report:
    """Evaluate the equivalent conditions for a minimal, first-letter-dependent rule.

    Injectivity of the infinite code is not decided on its own: it sits
    between finite injectivity and non-constancy of the infinite code.
    """
    if not is_minimal(rule):
        raise HypothesisError("rule is not minimal")
    if ignores_first_letter(rule):
        raise HypothesisError("rule ignores the first letter")
    found = minimal_injective_n(rule, limits)
    infinite_nonconstant = any(
        len({_apply(rule, w) for w in language(rule.model, rule.width + extra)}) > 1
        for extra in range(witness_lengths)
    )
    ell = span = None
    if not rule.is_constant:
        profile = cut_index_profile(rule_to_partition(rule))
        ell, span = profile.ell, profile.n
    return Prop5Report(found.n_min is not None, found.n_min, found.n_bound,
                       infinite_nonconstant, not rule.is_constant, ell, span)


@dataclass
class Example1Report:
    collisions: list  # (n, word, word)
    collisions_ok: bool
    prefix_length_cap: int
    prefix_ok: bool
    prefix_counterexample: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "collisions": [{"n": n, "pair": [a, b]} for n, a, b in self.collisions],
            "collisions_ok": self.collisions_ok,
            "prefix_length_cap": self.prefix_length_cap,
            "prefix_ok": self.prefix_ok,
            "prefix_counterexample": list(self.prefix_counterexample) if self.prefix_counterexample else None,
        }


def prefix_determination(rule: LocalRule, length: int) -> tuple[str, str] | None:
    """A pair of words with equal images but different n-prefixes, or None."""
    n = length - rule.width + 1
    groups: dict[str, str] = {}
    for word in iter_language(rule.model, length):
        prev = groups.setdefault(_apply(rule, word), word)
        if prev[:n] != word[:n]:
            return prev, word
    return None


def example1_demo(n_max: int, prefix_cap: int = 14) -> Example1Report:
    """Collisions x10 / x11 at every length n <= n_max, and prefix determination up to prefix_cap."""
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    rule = example1_rule()
    collisions, ok = [], True
    for n in range(1, n_max + 1):
        res = injectivity_at(rule, n)
        if res.injective:
            ok = False
            continue
        a, b = res.witness
        collisions.append((n, a, b))
        ok &= len(a) == n + 1 and a[:-2] == b[:-2] and a[-2:] == "10" and b[-2:] == "11"
        for x in iter_language(rule.model, n - 1) if n > 1 else [""]:
            ok &= _apply(rule, x + "10") == _apply(rule, x + "11")
    bad = None
    for length in range(rule.width, prefix_cap + 1):
        bad = prefix_determination(rule, length)
        if bad is not None:
            break
    return Example1Report(collisions, ok, prefix_cap, bad is None, bad)
