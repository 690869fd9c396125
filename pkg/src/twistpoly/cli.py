"""Command-line interface: ``twistpoly <subcommand> ...``.

Exit codes: 0 success, 1 property violation, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from pathlib import Path

from . import __version__, arrowsum, checks, coloring
from .braid import BraidSyntaxError, IndexOutOfRange, closure, parse_braid
from .corpus import bar_placements, load_corpus
from .diagram import (CodeSyntaxError, TwistedGaussCode, ValidationError, bar_count, parse,
                      serialize, writhe)
from .polyring import ArrowPolynomial, render, specialize_jones


class InputError(Exception):
    pass


def _read_code(args) -> TwistedGaussCode:
    if getattr(args, "code", None) is not None:
        text = args.code
    elif getattr(args, "input", None):
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        raise InputError("give --input FILE or --code TEXT")
    return parse(text)


def _emit(args, payload: dict, text_lines: list[str], started: float) -> None:
    if args.timing:
        payload["seconds"] = round(time.perf_counter() - started, 6)
        text_lines.append(f"time: {payload['seconds']:.3f}s")
    if args.json:
        payload["version"] = __version__
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _poly(p: ArrowPolynomial) -> dict:
    return {"text": render(p), **p.to_json_obj()}


# ---------------------------------------------------------------------------
# compute

def cmd_compute(args) -> int:
    t0 = time.perf_counter()
    d = _read_code(args)
    br = arrowsum.bracket(d)
    norm = arrowsum.normalize_by_writhe(br, writhe(d))
    crit = arrowsum.criteria_for(norm)
    q, n_max = specialize_jones(norm)
    payload = {
        "input": serialize(d),
        "crossings": d.n_crossings,
        "bars": bar_count(d),
        "writhe": writhe(d),
        "bracket": _poly(br),
        "normalized": _poly(norm),
        "jones": {"numerator": _poly(q), "d_power": n_max},
        "as_set": sorted(arrowsum.k_degree_set(br)),
        "criteria": crit.to_json_obj(),
        "m_degree_bound": norm.max_m_degree(),
    }
    wanted = [f for f in ("normalized", "jones", "as_set", "criteria") if getattr(args, f)]
    lines = []
    if not wanted:
        lines.append(render(br))
    elif wanted == ["normalized"]:
        lines.append(render(norm))
    else:
        if args.normalized:
            lines.append(f"normalized: {render(norm)}")
        if args.jones:
            lines.append(f"jones: ({render(q)}) / d^{n_max}" if n_max else f"jones: {render(q)}")
        if args.as_set:
            lines.append("AS: {" + ", ".join(map(str, payload["as_set"])) + "}")
        if args.criteria:
            lines.append(f"no M: {crit.no_m}; AS even: {crit.as_even}; K balance: {crit.k_balance}")
            lines.append(f"verdict: {crit.verdict}")
    _emit(args, payload, lines, t0)
    return 0


# ---------------------------------------------------------------------------
# enumerate-bars

def enumerate_bars(d: TwistedGaussCode, max_bars: int) -> list[dict]:
    if bar_count(d):
        raise InputError("enumerate-bars expects a bar-free diagram")
    groups: dict[ArrowPolynomial, list[str]] = {}
    for _, e in bar_placements(d, max_bars):
        groups.setdefault(arrowsum.normalized(e), []).append(serialize(e))
    out = [{"polynomial": render(p), "terms": p.to_json_obj()["terms"],
            "bars": min(bar_count(parse(c)) for c in codes), "placements": codes}
           for p, codes in groups.items()]
    out.sort(key=lambda g: (g["bars"], g["polynomial"]))
    return out


def cmd_enumerate_bars(args) -> int:
    t0 = time.perf_counter()
    d = _read_code(args)
    if not 0 <= args.max_bars <= 4:
        raise InputError("--max-bars must be between 0 and 4")
    groups = enumerate_bars(d, args.max_bars)
    lines = [f"{len(groups)} distinct polynomials"]
    for g in groups:
        lines.append(f"{g['polynomial']}    [{len(g['placements'])} placements, e.g. {g['placements'][0]}]")
    _emit(args, {"input": serialize(d), "max_bars": args.max_bars, "classes": groups}, lines, t0)
    return 0


# ---------------------------------------------------------------------------
# coloring commands

def cmd_cutpoints(args) -> int:
    t0 = time.perf_counter()
    d = _read_code(args)
    rep = coloring.min_cut_points(d)
    barred = coloring.replace_cutpoints_with_bars(d, rep.witness)
    payload = {"input": serialize(d), **rep.to_json_obj(), "barred": serialize(barred)}
    lines = [f"P_d = {rep.p_d}"]
    for c in payload["cut_arcs"]:
        lines.append(f"cut point on arc {c['arc']} (component {c['component']}, tokens {c['start']}->{c['end']})")
    lines.append(f"barred diagram: {serialize(barred)}")
    _emit(args, payload, lines, t0)
    return 0


def cmd_colorable(args) -> int:
    t0 = time.perf_counter()
    d = _read_code(args)
    res = coloring.is_checkerboard_colorable(d)
    parity = coloring.bar_parity_check(d)
    payload = {
        "input": serialize(d),
        "colorable": res.colorable,
        "colorings": [{str(c): int(b) for c, b in col.items()} for col in res.colorings],
        "bar_parity": parity.to_json_obj(),
    }
    lines = ["colorable" if res else "not colorable"]
    for col in res.colorings:
        lines.append("coloring: " + " ".join(f"{c}:{int(b)}" for c, b in col.items()))
    lines.append(f"bars after cancelling pairs: {parity.bars} ({'even' if parity.even else 'odd'})")
    _emit(args, payload, lines, t0)
    return 0


def cmd_framing(args) -> int:
    t0 = time.perf_counter()
    d = _read_code(args)
    rep = coloring.framing_space_connected(d, args.bound, args.budget)
    payload = {"input": serialize(d), **rep.to_json_obj()}
    lines = [
        "connected" if rep.connected else "not connected",
        f"plain framings reached: {rep.reached_plain}/{rep.plain_framings}",
        f"framings explored: {rep.nodes_explored} (at most {rep.bound} cut points per arc)",
        f"farthest plain framing: {rep.max_distance} moves",
    ]
    _emit(args, payload, lines, t0)
    return 0 if rep.connected else 1


def cmd_closure(args) -> int:
    t0 = time.perf_counter()
    w = parse_braid(args.braid, args.strands)
    d = closure(w)
    payload = {"braid": str(w), "strands": w.strands, "code": serialize(d)}
    lines = [serialize(d)]
    if args.compute:
        p = arrowsum.normalized(d)
        payload["normalized"] = _poly(p)
        lines.append(render(p))
    _emit(args, payload, lines, t0)
    return 0


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    corpus = load_corpus(args.corpus) if args.corpus else None
    cfg = checks.CheckConfig()
    overrides = {k: getattr(args, k) for k in ("steps", "seed", "walks") if getattr(args, k) is not None}
    cfg = replace(cfg, **overrides)
    names = list(checks.PROPERTIES) if args.property == "all" else [args.property]
    results = [checks.run(n, corpus, cfg) for n in names]
    lines = []
    for r in results:
        lines.append(f"{r.name}: {'pass' if r.passed else 'FAIL'} ({r.cases} cases)")
        if not r.passed:
            lines.append(f"  counterexample: {r.failures[0]}")
            if len(r.failures) > 1:
                lines.append(f"  ... {len(r.failures) - 1} more")
    payload = {"seed": cfg.seed, "steps": cfg.steps, "results": [r.to_json_obj() for r in results]}
    _emit(args, payload, lines, t0)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timing", action="store_true", help="report wall time (breaks byte-identical output)")

    def with_input(p):
        p.add_argument("-i", "--input", help="diagram file")
        p.add_argument("--code", help="diagram given inline, e.g. 'O1+ O2+ U1+ U2+'")
        return p

    parser = argparse.ArgumentParser(prog="twistpoly", description="Invariants of twisted and virtual link diagrams.")
    parser.add_argument("--version", action="version", version=f"twistpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = with_input(sub.add_parser("compute", parents=[common], help="arrow polynomial and criteria"))
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--jones", action="store_true")
    p.add_argument("--as-set", action="store_true")
    p.add_argument("--criteria", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = with_input(sub.add_parser("enumerate-bars", parents=[common], help="group bar placements by polynomial"))
    p.add_argument("--max-bars", type=int, default=2)
    p.set_defaults(func=cmd_enumerate_bars)

    p = with_input(sub.add_parser("cutpoints", parents=[common], help="minimum number of cut points"))
    p.set_defaults(func=cmd_cutpoints)

    p = with_input(sub.add_parser("colorable", parents=[common], help="checkerboard colorability"))
    p.set_defaults(func=cmd_colorable)

    p = with_input(sub.add_parser("framing-connectivity", parents=[common], help="search the framing graph"))
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.set_defaults(func=cmd_framing)

    p = sub.add_parser("closure", parents=[common], help="close a twisted braid")
    p.add_argument("--braid", required=True, help="letters like 's1 S2 v1 b1'")
    p.add_argument("--strands", type=int)
    p.add_argument("--compute", action="store_true", help="also print the normalized polynomial")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("--property", required=True, choices=sorted(checks.PROPERTIES) + ["all"])
    p.add_argument("--corpus", help="file of 'name: code' lines (default: built-in corpus)")
    p.add_argument("--steps", type=int)
    p.add_argument("--walks", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CodeSyntaxError, ValidationError, BraidSyntaxError, IndexOutOfRange, InputError,
            coloring.HasBars, coloring.NotAFraming, coloring.SearchBudgetExceeded,
            arrowsum.TooManyCrossings) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
