"""Property suites shared by ``twistpoly check`` and the acceptance tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import arrowsum, braid, coloring, moves
from .corpus import bar_free, default_corpus, twisted
from .diagram import TwistedGaussCode, bar_count, serialize


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def to_json_obj(self) -> dict:
        return {
            "property": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures[:5],
            "details": self.details,
        }


@dataclass(frozen=True)
class CheckConfig:
    steps: int = 20
    seed: int = 42
    walks: int = 200
    max_crossings: int = 8
    criteria_samples: int = 100
    framing_bound: int = 3
    framing_max_crossings: int = 4
    m_degree_walks: int = 50
    confluence_length: int = 10
    classical_letters: int = 6
    classical_strands: int = 3
    relation_contexts: int = 4


def _corpus(corpus):
    return default_corpus() if corpus is None else corpus


def invariance(corpus=None, cfg: CheckConfig = CheckConfig(), every_site: bool = True) -> CheckResult:
    """Normalized polynomial is unchanged by moves; R1 rescales the bracket by -A^(+-3)."""
    res = CheckResult("invariance")
    corpus = _corpus(corpus)
    names = sorted(corpus)
    cache: dict = {}

    def norm(d):
        key = serialize(d)
        if key not in cache:
            cache[key] = arrowsum.normalized(d)
        return cache[key]

    if every_site:
        for name in names:
            d = corpus[name]
            base, br = norm(d), arrowsum.bracket(d)
            for s in moves.applicable_moves(d):
                e = moves.apply_move(d, s)
                res.cases += 1
                if norm(e) != base:
                    res.fail(f"{name}: {s} changes the normalized polynomial ({serialize(d)} -> {serialize(e)})")
                if s.kind.startswith("R1"):
                    ci, p = s.where[0]
                    sign = s.params[1] if s.kind == "R1_insert" else d.components[ci][p].sign
                    kink = arrowsum.ArrowPolynomial.monomial(-1, 3 * sign)
                    big, small = (arrowsum.bracket(e), br) if s.kind == "R1_insert" else (br, arrowsum.bracket(e))
                    if big != small * kink:
                        res.fail(f"{name}: {s} does not scale the bracket by -A^{3 * sign}")
                elif s.kind in ("R2_insert", "R2_delete", "R3", "T1_insert", "T1_delete", "T3"):
                    if arrowsum.bracket(e) != br:
                        res.fail(f"{name}: {s} changes the unnormalized bracket")
        res.details["sites"] = res.cases
    for k in range(cfg.walks):
        name = names[k % len(names)]
        d = corpus[name]
        e = moves.random_equivalent(d, cfg.steps, cfg.seed + k, cfg.max_crossings)
        res.cases += 1
        if norm(e) != norm(d):
            res.fail(f"walk {k} from {name} (seed {cfg.seed + k}): {serialize(d)} -> {serialize(e)}")
    res.details["walks"] = cfg.walks
    return res


def colorable_samples(corpus=None, count: int = 100, seed: int = 0, max_crossings: int = 6):
    """Colorable twisted diagrams built from framings of bar-free diagrams."""
    rng = random.Random(seed)
    base = list(bar_free(_corpus(corpus)).values())
    out = []
    while len(out) < count:
        pick = rng.randrange(3)
        if pick == 0:
            d = rng.choice(base)
        elif pick == 1:
            w = braid.random_word(rng.randint(2, 3), rng.randint(1, 5), rng, alphabet="sSv")
            d = braid.closure(w)
        else:
            d = moves.random_equivalent(rng.choice(base), 6, rng.randrange(10**6), max_crossings,
                                        kinds=[k for k in moves.KINDS if not k.startswith("T")])
        if d.n_crossings > max_crossings:
            continue
        if len(out) % 2 == 0:
            f = coloring.min_cut_points(d).witness
        else:
            f = coloring.plain_framing(d, [rng.randint(0, 1) for _ in d.crossings()])
        out.append(coloring.replace_cutpoints_with_bars(d, f))
    return out


def criteria(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    res = CheckResult("criteria")
    for d in colorable_samples(corpus, cfg.criteria_samples, cfg.seed):
        res.cases += 1
        if not coloring.is_checkerboard_colorable(d):
            res.fail(f"{serialize(d)}: generated diagram is not colorable")
            continue
        rep = arrowsum.colorability_criteria(d)
        if not rep.passes_all:
            res.fail(f"{serialize(d)}: colorable but criteria report {rep.to_json_obj()}")
    return res


def framing_connectivity(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    res = CheckResult("framing-connectivity")
    for name, d in sorted(bar_free(_corpus(corpus)).items()):
        if d.n_crossings > cfg.framing_max_crossings:
            continue
        rep = coloring.framing_space_connected(d, cfg.framing_bound)
        res.cases += 1
        res.details[name] = rep.to_json_obj()
        if not rep.connected:
            res.fail(f"{name}: {rep.reached_plain}/{rep.plain_framings} plain framings reached")
    return res


def bar_parity(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    res = CheckResult("bar-parity")
    pool = list(_corpus(corpus).items())
    pool += [(f"sample{k}", d) for k, d in enumerate(colorable_samples(corpus, 30, cfg.seed))]
    for name, d in pool:
        rep = coloring.bar_parity_check(d)
        res.cases += 1
        if not rep.holds:
            res.fail(f"{name}: colorable with {rep.bars} bars after cancelling pairs")
    return res


def m_degree(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    res = CheckResult("m-degree")
    tw = twisted(_corpus(corpus))
    for name, d in sorted(tw.items()):
        res.cases += 1
        if arrowsum.m_degree_lower_bound(d) > bar_count(d):
            res.fail(f"{name}: M-degree exceeds the bar count")
    names = sorted(tw)
    for k in range(cfg.m_degree_walks):
        name = names[k % len(names)]
        bound = arrowsum.m_degree_lower_bound(tw[name])
        for _, e in moves.walk(tw[name], cfg.steps, cfg.seed + k, cfg.max_crossings):
            res.cases += 1
            if bound > bar_count(e):
                res.fail(f"walk {k} from {name}: {serialize(e)} has {bar_count(e)} bars < M-degree {bound}")
                break
    return res


def confluence(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    res = CheckResult("confluence")
    out = arrowsum.exhaustive_confluence(cfg.confluence_length)
    res.cases = out.words_checked
    res.details = {"max_length": cfg.confluence_length, "classes": out.classes}
    for w, reached, fast in out.failures:
        res.fail(f"{''.join(w)}: reaches {reached}, reduce_word gives {fast}")
    return res


def classical_words(strands: int, max_letters: int):
    for n in range(2, strands + 1):
        alphabet = [(k, i) for i in range(1, n) for k in "sS"]
        for length in range(1, max_letters + 1):
            for letters in itertools.product(alphabet, repeat=length):
                yield braid.BraidWord(n, letters)


def classical_as0(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    """Closures of sigma-only braids: AS = {0}, no K and no M."""
    res = CheckResult("classical-as0")
    seen = set()
    for w in classical_words(cfg.classical_strands, cfg.classical_letters):
        d = braid.closure(w)
        key = serialize(d)
        if key in seen:
            continue
        seen.add(key)
        res.cases += 1
        p = arrowsum.bracket(d)
        if p.contains_m() or p.contains_k() or arrowsum.k_degree_set(p) != {0}:
            res.fail(f"{w} (strands {w.strands}): {p}")
    return res


def braid_relations(corpus=None, cfg: CheckConfig = CheckConfig()) -> CheckResult:
    res = CheckResult("braid-relations")
    rng = random.Random(cfg.seed)
    for n in (3, 4):
        for rel in braid.relation_instances(n):
            if n == 4 and not rel.rule.endswith("_far"):
                continue
            for _ in range(cfg.relation_contexts):
                pre = braid.random_word(n, rng.randint(0, 3), rng).letters
                suf = braid.random_word(n, rng.randint(0, 3), rng).letters
                a = braid.closure(braid.BraidWord(n, pre + rel.lhs + suf))
                b = braid.closure(braid.BraidWord(n, pre + rel.rhs + suf))
                res.cases += 1
                if arrowsum.normalized(a) != arrowsum.normalized(b):
                    res.fail(f"{rel} in context {pre} / {suf}")
    return res


PROPERTIES = {
    "invariance": invariance,
    "criteria": criteria,
    "framing-connectivity": framing_connectivity,
    "bar-parity": bar_parity,
    "m-degree": m_degree,
    "confluence": confluence,
    "classical-as0": classical_as0,
    "braid-relations": braid_relations,
}


def run(name: str, corpus: dict[str, TwistedGaussCode] | None = None,
        cfg: CheckConfig = CheckConfig()) -> CheckResult:
    return PROPERTIES[name](corpus, cfg)
