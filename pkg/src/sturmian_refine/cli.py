"""Command-line front end.

Exit statuses: 0 success, 1 a verification came out false, 2 bad input,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import csv
import decimal
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TextIO

from .continued_fractions import convergents, format_eta
from .errors import HypothesisError, InputError, ResourceCapError, SturmError, VerificationFailure
from .exact_circle import AlphaSpec, Arc
from .partitions import (
    Limits,
    label_text,
    partition_from_json,
    random_coarsening,
    refine,
    symmetric_counterexample_check,
    symmetric_partition,
    theorem1_witness,
    theorem2_bound,
    verify_theorem2,
)
from .subshift import (
    LocalRule,
    example1_demo,
    ignores_first_letter,
    injectivity_at,
    is_minimal,
    minimal_injective_n,
    prop5_report,
)
from .towers import (
    RokhlinTower,
    TowerPair,
    build_zwords,
    per_set,
    three_lengths_towers,
    tower_code,
    verify_per_structure,
)

RENDER_CAP = 200


@dataclass
class RunConfig:
    command: str
    subcommand: str | None = None
    alpha: str | None = None
    fmt: str | None = None
    seed: int = 0
    max_power: int = 5000
    max_cuts: int = 100_000
    max_words: int = 24
    options: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("max_power", "max_cuts", "max_words"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive")

    @property
    def limits(self) -> Limits:
        return Limits(max_power=self.max_power, max_cuts=self.max_cuts)


# input helpers -----------------------------------------------------------

def _load_json(text_or_path: str):
    try:
        if text_or_path.lstrip().startswith(("{", "[", '"')):
            return json.loads(text_or_path)
        return json.loads(Path(text_or_path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {text_or_path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {text_or_path}: {exc}") from None


def resolve_alpha(text: str | None, default: str = "golden") -> AlphaSpec:
    text = text or default
    if text in ("golden", "silver"):
        return AlphaSpec.from_json(text)
    return AlphaSpec.from_json(_load_json(text))


def _partition(cfg: RunConfig):
    obj = _load_json(cfg.options["partition"])
    alpha = resolve_alpha(cfg.alpha) if cfg.alpha else None
    return partition_from_json(obj, alpha)


# output helpers ----------------------------------------------------------

def _emit_json(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))
    out.write("\n")


def _emit_tsv(header: list[str], rows: list[list], out: TextIO) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def _word(word) -> str:
    return label_text(tuple(word))


def _arc_json(arc: Arc) -> list[str]:
    return [repr(arc.start), repr(arc.end)]


def _decimal(alpha: AlphaSpec, s, t, digits: int = 12) -> str:
    # s + t*alpha cancels badly in floating point once q_k is large
    with decimal.localcontext() as ctx:
        ctx.prec = digits + 20 + len(str(abs(t.numerator) + abs(s.numerator)))
        D = decimal.Decimal
        a = (D(alpha.p) + D(alpha.q) * D(alpha.d).sqrt()) / D(alpha.r)
        x = D(s.numerator) / D(s.denominator) + D(t.numerator) / D(t.denominator) * a
        return f"{x:.{digits}e}"


# commands ----------------------------------------------------------------

def cmd_cf(cfg: RunConfig, out: TextIO) -> int:
    alpha = resolve_alpha(cfg.alpha)
    depth = cfg.options.get("depth", 10)
    table = convergents(alpha, depth)
    rows = []
    for k in range(depth + 1):
        rows.append({
            "k": k, "c": table.c(k) if k else None, "p": table.p[k], "q": table.q[k],
            "r": table.r[k], "eta": format_eta(*table.eta[k]),
            "eta_decimal": _decimal(alpha, *table.eta[k]),
        })
    if (cfg.fmt or "tsv") == "tsv":
        cols = ["k", "c", "p", "q", "r", "eta", "eta_decimal"]
        _emit_tsv(cols, [["" if row[c] is None else row[c] for c in cols] for row in rows], out)
    else:
        _emit_json({"command": "cf", "alpha": alpha.to_json(), "depth": depth, "rows": rows}, out)
    return 0


def cmd_partition_refine(cfg: RunConfig, out: TextIO) -> int:
    R = _partition(cfg)
    n = cfg.options["n"]
    Rn = refine(R, n, cfg.limits)
    arcs = [{"start": repr(a.start), "end": repr(a.end), "name": _word(lab)} for a, lab in Rn.arcs()]
    if (cfg.fmt or "json") == "tsv":
        _emit_tsv(["start", "end", "name"], [[a["start"], a["end"], a["name"]] for a in arcs], out)
    else:
        _emit_json({"command": "partition refine", "alpha": R.alpha.to_json(), "n": n,
                    "num_arcs": len(arcs), "arcs": arcs}, out)
    return 0


def cmd_partition_thm1(cfg: RunConfig, out: TextIO) -> int:
    R = _partition(cfg)
    bound = theorem2_bound(R)
    max_power = cfg.options.get("max_power_cmd") or cfg.max_power
    witness = theorem1_witness(R, max_power, cfg.limits)
    holds = witness is not None and witness[0] <= bound.K
    _emit_json({
        "command": "partition verify-thm1", "alpha": R.alpha.to_json(),
        "witness": None if witness is None else dict(zip(("k", "ell", "m"), witness)),
        "ell": bound.ell, "n": bound.n, "k": bound.k, "K": bound.K, "M": bound.M,
        "max_power": max_power, "holds": holds,
    }, out)
    if witness is None and max_power < bound.K:
        raise ResourceCapError(f"no witness up to power {max_power} (bound K={bound.K})")
    return 0 if holds else 1


def cmd_partition_thm2(cfg: RunConfig, out: TextIO) -> int:
    R = _partition(cfg)
    report = verify_theorem2(R, cfg.limits)
    _emit_json({"command": "partition verify-thm2", "alpha": R.alpha.to_json(), **report.as_dict()}, out)
    return 0 if report.holds else 1


def _tower_box(title: str, tower: RokhlinTower, letters) -> list[str]:
    rows = []
    for t in reversed(range(tower.height)):
        arc = tower.level(t)
        text = f"m={tower.i + t}: [{arc.start!r}, {arc.end!r})"
        if letters is not None:
            # letters run from the top level down
            text += f"  {label_text(letters[tower.height - 1 - t])}"
        rows.append(text)
    width = max(len(title), *(len(r) for r in rows))
    rule = "+" + "-" * (width + 2) + "+"
    lines = [title.ljust(width + 4), rule]
    for r in rows:
        lines += [f"| {r.ljust(width)} |", rule]
    return lines


def render_towers_ascii(pair: TowerPair, R=None) -> str:
    """Both towers side by side, base at the bottom, levels annotated by endpoints."""
    if pair.left.height + pair.right.height > RENDER_CAP:
        raise ResourceCapError(f"{pair.left.height + pair.right.height} levels exceed render cap {RENDER_CAP}")
    k = pair.k
    u = tower_code(R, pair.left) if R is not None else None
    v = tower_code(R, pair.right) if R is not None else None
    left = _tower_box(f"I_{k} tower, height {pair.left.height}", pair.left, u)
    right = _tower_box(f"I_{k - 1} tower, height {pair.right.height}", pair.right, v)
    lw = max(len(s) for s in left)
    tall = max(len(left), len(right))
    left = [""] * (tall - len(left)) + left
    right = [""] * (tall - len(right)) + right
    return "\n".join((a.ljust(lw) + "    " + b).rstrip() for a, b in zip(left, right)) + "\n"


def _pair_for(cfg: RunConfig, alpha: AlphaSpec) -> TowerPair:
    k = cfg.options["k"]
    if k < 1:
        raise InputError("k must be >= 1")
    if convergents(alpha, k).r[k] > RENDER_CAP:
        raise ResourceCapError(f"k={k} gives more than {RENDER_CAP} levels")
    return three_lengths_towers(alpha, k)


def cmd_towers_show(cfg: RunConfig, out: TextIO) -> int:
    R = _partition(cfg) if cfg.options.get("partition") else None
    alpha = R.alpha if R is not None else resolve_alpha(cfg.alpha)
    pair = _pair_for(cfg, alpha)
    if (cfg.fmt or "ascii") == "ascii":
        out.write(render_towers_ascii(pair, R))
        return 0

    def tower_json(tower):
        code = tower_code(R, tower) if R is not None else None
        levels = []
        for t in range(tower.height):
            entry = {"m": tower.i + t, "arc": _arc_json(tower.level(t))}
            if code is not None:
                entry["label"] = label_text(code[tower.height - 1 - t])
            levels.append(entry)
        return {"base": _arc_json(tower.base_set), "height": tower.height, "levels": levels}

    _emit_json({"command": "towers show", "alpha": alpha.to_json(), "k": pair.k,
                "left": tower_json(pair.left), "right": tower_json(pair.right)}, out)
    return 0


def cmd_towers_codes(cfg: RunConfig, out: TextIO) -> int:
    R = _partition(cfg)
    k = cfg.options["k"]
    if k < 1:
        raise InputError("k must be >= 1")
    table = convergents(R.alpha, k + 3)
    pair = three_lengths_towers(R.alpha, k, check=False)
    u, v = tower_code(R, pair.left), tower_code(R, pair.right)
    zw = build_zwords(u, v, table.c(k + 1), table.c(k + 2), table.c(k + 3))
    shift = len(zw.w_prime)
    try:
        structure = verify_per_structure(u, v, zw.z, shift)
        boundary = True
    except HypothesisError:
        structure, boundary = None, False
    report = {
        "command": "towers codes", "alpha": R.alpha.to_json(), "k": k,
        "u": _word(u), "v": _word(v), "w": _word(zw.w), "w_prime": _word(zw.w_prime),
        "w_dprime": _word(zw.w_dprime), "z": _word(zw.z), "z_length": len(zw.z),
        "per_shift": shift, "per": sorted(per_set(zw.z, shift)),
        "boundary_conditions": boundary, "per_structure": structure,
    }
    _emit_json(report, out)
    return 1 if structure is False else 0


def _rule(cfg: RunConfig) -> LocalRule:
    return LocalRule.from_json(_load_json(cfg.options["rule"]))


def cmd_sbc_analyze(cfg: RunConfig, out: TextIO) -> int:
    rule = _rule(cfg)
    report: dict[str, Any] = {
        "command": "sbc analyze", "model": rule.model.to_json(), "width": rule.width,
        "minimal": is_minimal(rule), "ignores_first_letter": ignores_first_letter(rule),
        "constant": rule.is_constant,
    }
    if rule.model.is_sturmian:
        try:
            report["prop5"] = prop5_report(rule, cfg.limits).as_dict()
        except HypothesisError as exc:
            report["prop5"] = None
            report["prop5_skipped"] = str(exc)
        report["minimal_n"] = minimal_injective_n(rule, cfg.limits).as_dict()
    else:
        n_max = min(cfg.options.get("n_max") or 10, cfg.max_words - rule.width + 1)
        first, witnesses = None, []
        for n in range(1, n_max + 1):
            res = injectivity_at(rule, n, cfg.max_words)
            if res.injective:
                first = n
                break
            witnesses.append({"n": n, "pair": list(res.witness)})
        report.update({"injective_at": first, "scanned_up_to": n_max, "collisions": witnesses})
    _emit_json(report, out)
    return 0


def cmd_sbc_minimal_n(cfg: RunConfig, out: TextIO) -> int:
    rule = _rule(cfg)
    res = minimal_injective_n(rule, cfg.limits)
    _emit_json({"command": "sbc minimal-n", "model": rule.model.to_json(), "width": rule.width,
                **res.as_dict()}, out)
    if res.n_bound is not None and res.n_min is None:
        return 1
    return 0


def cmd_demo_example1(cfg: RunConfig, out: TextIO) -> int:
    n_max = cfg.options.get("n_max") or 12
    cap = min(cfg.options.get("prefix_cap") or 14, cfg.max_words)
    report = example1_demo(n_max, cap)
    _emit_json({"command": "demo example1", "n_max": n_max, **report.as_dict()}, out)
    return 0 if report.collisions_ok and report.prefix_ok else 1


def cmd_demo_symmetric(cfg: RunConfig, out: TextIO) -> int:
    alpha = resolve_alpha(cfg.alpha)
    m = cfg.options.get("m") or 2
    max_n = cfg.options.get("max_n") or 30
    report = symmetric_counterexample_check(alpha, max_n, symmetric_partition(alpha, m), cfg.limits)
    _emit_json({"command": "demo symmetric", "alpha": alpha.to_json(), "m": m, "max_n": max_n,
                "connected_at": list(report.connected_at), "arcs": list(report.arcs),
                "all_disconnected": report.all_disconnected}, out)
    return 0 if report.all_disconnected else 1


def _random_trial(args) -> dict:
    alpha_json, n, labels, seed, trial, max_power, max_cuts = args
    alpha = AlphaSpec.from_json(alpha_json)
    R = random_coarsening(alpha, n, labels, seed * 1_000_003 + trial)
    rep = verify_theorem2(R, Limits(max_power, max_cuts))
    return {"trial": trial, "ell": rep.ell, "n": rep.n, "k": rep.k, "K": rep.K,
            "min_k": rep.min_k, "holds": rep.holds}


def cmd_experiment_random(cfg: RunConfig, out: TextIO) -> int:
    alpha = resolve_alpha(cfg.alpha)
    trials = cfg.options.get("trials") or 10
    n = cfg.options.get("n") or 12
    labels = cfg.options.get("labels") or 2
    jobs = cfg.options.get("jobs") or 1
    if trials < 1 or jobs < 1:
        raise InputError("trials and jobs must be positive")
    work = [(alpha.to_json(), n, labels, cfg.seed, t, cfg.max_power, cfg.max_cuts) for t in range(trials)]
    if jobs == 1:
        rows = [_random_trial(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_random_trial, work))  # map keeps trial order
    cols = ["trial", "ell", "n", "k", "K", "min_k", "holds"]
    if (cfg.fmt or "tsv") == "tsv":
        _emit_tsv(cols, [[str(r[c]).lower() if isinstance(r[c], bool) else r[c] for c in cols] for r in rows], out)
    else:
        _emit_json({"command": "experiment random", "alpha": alpha.to_json(), "seed": cfg.seed,
                    "n": n, "labels": labels, "rows": rows}, out)
    return 0 if all(r["holds"] for r in rows) else 1


COMMANDS = {
    ("cf", None): cmd_cf,
    ("partition", "refine"): cmd_partition_refine,
    ("partition", "verify-thm1"): cmd_partition_thm1,
    ("partition", "verify-thm2"): cmd_partition_thm2,
    ("towers", "show"): cmd_towers_show,
    ("towers", "codes"): cmd_towers_codes,
    ("sbc", "analyze"): cmd_sbc_analyze,
    ("sbc", "minimal-n"): cmd_sbc_minimal_n,
    ("demo", "example1"): cmd_demo_example1,
    ("demo", "symmetric"): cmd_demo_symmetric,
    ("experiment", "random"): cmd_experiment_random,
}


def run(cfg: RunConfig, out: TextIO | None = None) -> int:
    handler = COMMANDS.get((cfg.command, cfg.subcommand))
    if handler is None:
        raise InputError(f"unknown command {cfg.command} {cfg.subcommand or ''}".strip())
    return handler(cfg, out or sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    # no abbreviations: --m on a subcommand would otherwise clash with --max-*
    parser = argparse.ArgumentParser(prog="sturmref", description="Exact refinements of Sturmian partitions.",
                                     allow_abbrev=False)
    parser.add_argument("--alpha", help="preset (golden, silver), inline JSON, or a JSON file")
    parser.add_argument("--format", dest="fmt", choices=["json", "tsv", "ascii"])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-power", type=int, default=5000, help="largest refinement power")
    parser.add_argument("--max-cuts", type=int, default=100_000, help="largest cutpoint count")
    parser.add_argument("--max-words", type=int, default=24, help="longest enumerated full-shift word")
    sub = parser.add_subparsers(dest="command", required=True)

    cf = sub.add_parser("cf", help="continued-fraction table")
    cf.add_argument("--depth", type=int, default=10)

    part = sub.add_parser("partition").add_subparsers(dest="subcommand", required=True)
    p = part.add_parser("refine")
    p.add_argument("partition")
    p.add_argument("--n", type=int, required=True)
    p = part.add_parser("verify-thm1")
    p.add_argument("partition")
    p.add_argument("--max-power", dest="max_power_cmd", type=int)
    p = part.add_parser("verify-thm2")
    p.add_argument("partition")

    tw = sub.add_parser("towers").add_subparsers(dest="subcommand", required=True)
    p = tw.add_parser("show")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition")
    p = tw.add_parser("codes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--partition", required=True)

    sbc = sub.add_parser("sbc").add_subparsers(dest="subcommand", required=True)
    p = sbc.add_parser("analyze")
    p.add_argument("rule")
    p.add_argument("--n-max", type=int)
    p = sbc.add_parser("minimal-n")
    p.add_argument("rule")

    demo = sub.add_parser("demo").add_subparsers(dest="subcommand", required=True)
    p = demo.add_parser("example1")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--prefix-cap", type=int, default=14)
    p = demo.add_parser("symmetric")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--m", type=int, default=2, help="invariance under rotation by 1/m")

    exp = sub.add_parser("experiment").add_subparsers(dest="subcommand", required=True)
    p = exp.add_parser("random")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--labels", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    return parser


_GLOBALS = {"command", "subcommand", "alpha", "fmt", "seed", "max_power", "max_cuts", "max_words"}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    ns = vars(args)
    try:
        cfg = RunConfig(
            command=args.command, subcommand=ns.get("subcommand"), alpha=args.alpha, fmt=args.fmt,
            seed=args.seed, max_power=args.max_power, max_cuts=args.max_cuts, max_words=args.max_words,
            options={k: v for k, v in ns.items() if k not in _GLOBALS},
        )
        return run(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except SturmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
