"""Small named diagrams used by the checks, the CLI and the tests.

Corpus files hold one ``name: code`` entry per line; ``#`` starts a
comment and components are separated by ``;``.
"""

from __future__ import annotations

import itertools
from pathlib import Path

from .braid import closure, parse_braid
from .diagram import BAR, Pass, TwistedGaussCode, arcs, bar_count, canonical, parse, serialize

_CODES = {
    "unknot": "()",
    "unknot_bar": "b",
    "unknot_two_bars": "b b",
    "kink_pos": "O1+ U1+",
    "kink_neg": "O1- U1-",
    "kink_pos_under_first": "U1+ O1+",
    "trefoil": "O1+ U2+ O3+ U1+ O2+ U3+",
    "trefoil_mirror": "U1- O2- U3- O1- U2- O3-",
    "virtual_trefoil": "O1+ O2+ U1+ U2+",
    "virtual_trefoil_mixed": "O1+ O2- U1+ U2-",
    "virtual_hopf": "O1+ U2+; U1+ O2+",
    "twisted_2_1": "O1+ b O2+ U1+ b U2+",
    "twisted_2_2": "O1+ b O2+ U1+ U2+",
    "twisted_2_3": "O1+ O2+ b U1+ U2+",
    "twisted_2_4": "b O1+ O2+ U1+ b U2+",
    "twisted_kink": "b O1+ b U1+",
    "barred_unlink": "b; b",
}

_BRAIDS = {
    "figure_eight": ("s1 S2 s1 S2", 3),
    "hopf": ("s1 s1", 2),
    "braid_trefoil": ("s1 s1 s1", 2),
    "virtual_braid_knot": ("s1 v1 s1", 2),
    "twisted_braid_a": ("s1 b1 s1 b2", 2),
    "twisted_braid_b": ("b1 s1 v1 s1 b2", 2),
    "twisted_braid_c": ("s1 s2 b2 S1 v2 b3", 3),
    "twisted_braid_d": ("s1 S2 b1 v1 s2 b3", 3),
}


def default_corpus() -> dict[str, TwistedGaussCode]:
    out = {name: parse(text) for name, text in _CODES.items()}
    for name, (word, n) in _BRAIDS.items():
        out[name] = closure(parse_braid(word, n))
    return out


def bar_free(corpus: dict[str, TwistedGaussCode]) -> dict[str, TwistedGaussCode]:
    return {k: d for k, d in corpus.items() if not bar_count(d)}


def twisted(corpus: dict[str, TwistedGaussCode]) -> dict[str, TwistedGaussCode]:
    return {k: d for k, d in corpus.items() if bar_count(d)}


def load_corpus(path: str | Path) -> dict[str, TwistedGaussCode]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, body = line.partition(":")
        if not sep:
            name, body = f"entry{lineno}", line
        out[name.strip()] = parse(body)
    return out


def dump_corpus(corpus: dict[str, TwistedGaussCode]) -> str:
    return "".join(f"{name}: {serialize(d)}\n" for name, d in corpus.items())


def enumerate_codes(n: int, max_components: int = 2):
    """Every bar-free Gauss code on ``n`` crossings, one per relabelling/rotation class."""
    if n == 0:
        yield TwistedGaussCode(())
        return
    toks = [Pass(c, o, 1) for c in range(1, n + 1) for o in (True, False)]
    seen = set()
    for order in itertools.permutations(toks):
        if order[0] != toks[0]:
            continue  # rotation of the first component
        for cut in range(1, len(order) + 1):
            comps = [order[:cut], order[cut:]] if cut < len(order) else [order]
            if len(comps) > max_components:
                continue
            for signs in itertools.product((1, -1), repeat=n):
                code = TwistedGaussCode(tuple(
                    tuple(Pass(t.crossing, t.over, signs[t.crossing - 1]) for t in c) for c in comps))
                key = canonical(code)
                if key not in seen:
                    seen.add(key)
                    yield code


def bar_placements(d: TwistedGaussCode, max_bars: int):
    """Codes with one bar on each of up to ``max_bars`` distinct arcs of ``d``."""
    slots = [(a.component, a.start) for a in arcs(d)]
    for k in range(max_bars + 1):
        for chosen in itertools.combinations(range(len(slots)), k):
            comps = [list(c) for c in d.components]
            for idx in sorted(chosen, key=lambda i: slots[i], reverse=True):
                ci, start = slots[idx]
                comps[ci].insert(0 if start is None else start + 1, BAR)
            yield chosen, TwistedGaussCode(tuple(tuple(c) for c in comps))
