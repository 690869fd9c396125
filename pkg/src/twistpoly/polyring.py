"""Exact sparse polynomials in A^{+-1}, K_1, K_2, ... and M.

A monomial is keyed by ``(a_exp, k_vec, m_exp)`` where ``k_vec`` is a
tuple of ``(index, multiplicity)`` pairs sorted by index.  Coefficients are
Python ints, so state sums never lose precision.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

KVec = tuple[tuple[int, int], ...]
Key = tuple[int, KVec, int]


@dataclass(frozen=True, order=False)
class ArrowMonomial:
    coeff: int
    a_exp: int = 0
    k_vec: KVec = ()
    m_exp: int = 0

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("stored monomials have nonzero coefficients")
        if self.m_exp < 0:
            raise ValueError("M exponent must be nonnegative")
        if any(i < 1 or j < 1 for i, j in self.k_vec):
            raise ValueError(f"bad K factor in {self.k_vec!r}")

    @property
    def key(self) -> Key:
        return (self.a_exp, self.k_vec, self.m_exp)

    @property
    def k_degree(self) -> int:
        """Sum of index * multiplicity over the K factors."""
        return sum(i * j for i, j in self.k_vec)


def _sort_key(key: Key):
    a, kv, m = key
    return (a, m, kv)


def _render_key(key: Key):
    # text output groups like K/M parts together, then by A-degree
    a, kv, m = key
    return (m, kv, a)


def merge_k(u: KVec, v: KVec) -> KVec:
    if not u:
        return v
    if not v:
        return u
    acc = dict(u)
    for i, j in v:
        acc[i] = acc.get(i, 0) + j
    return tuple(sorted(acc.items()))


def make_kvec(factors: Mapping[int, int] | Iterable[tuple[int, int]]) -> KVec:
    items = factors.items() if isinstance(factors, Mapping) else factors
    acc: dict[int, int] = {}
    for i, j in items:
        if j:
            acc[int(i)] = acc.get(int(i), 0) + int(j)
    return tuple(sorted((i, j) for i, j in acc.items() if j))


class ArrowPolynomial:
    """Immutable polynomial in Z[A, A^-1, K_1, K_2, ..., M].

    Like terms are merged on construction and zero coefficients dropped,
    so two polynomials are equal iff their term dictionaries are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[k] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_monomials(cls, monomials: Iterable[ArrowMonomial]) -> "ArrowPolynomial":
        acc: dict[Key, int] = {}
        for mono in monomials:
            acc[mono.key] = acc.get(mono.key, 0) + mono.coeff
        return cls(acc)

    @classmethod
    def monomial(cls, coeff: int = 1, a: int = 0, k=(), m: int = 0) -> "ArrowPolynomial":
        return cls({(a, make_kvec(k), m): coeff})

    @classmethod
    def zero(cls) -> "ArrowPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "ArrowPolynomial":
        return cls({(0, (), 0): 1})

    # -- accessors ----------------------------------------------------
    def items(self) -> Iterator[tuple[Key, int]]:
        for key in sorted(self._terms, key=_sort_key):
            yield key, self._terms[key]

    @property
    def terms(self) -> tuple[ArrowMonomial, ...]:
        return tuple(ArrowMonomial(c, a, kv, m) for (a, kv, m), c in self.items())

    def coefficient(self, a: int = 0, k=(), m: int = 0) -> int:
        return self._terms.get((a, make_kvec(k), m), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArrowPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @classmethod
    def constant(cls, c: int) -> "ArrowPolynomial":
        return cls({(0, (), 0): c})

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "ArrowPolynomial") -> "ArrowPolynomial":
        return add(self, other)

    def __sub__(self, other: "ArrowPolynomial") -> "ArrowPolynomial":
        return add(self, other.scale(-1))

    def __neg__(self) -> "ArrowPolynomial":
        return self.scale(-1)

    def __mul__(self, other) -> "ArrowPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ArrowPolynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = ArrowPolynomial.one()
        for _ in range(n):
            out = mul(out, self)
        return out

    def scale(self, c: int) -> "ArrowPolynomial":
        return ArrowPolynomial({k: c * v for k, v in self._terms.items()})

    def shift_a(self, e: int) -> "ArrowPolynomial":
        """Multiply by A^e."""
        return ArrowPolynomial({(a + e, kv, m): c for (a, kv, m), c in self._terms.items()})

    def mirror(self) -> "ArrowPolynomial":
        """Substitute A -> A^-1."""
        return ArrowPolynomial({(-a, kv, m): c for (a, kv, m), c in self._terms.items()})

    # -- properties used by the invariants ----------------------------
    def max_m_degree(self) -> int:
        return max((m for (_, _, m) in self._terms), default=0)

    def contains_m(self) -> bool:
        return any(m for (_, _, m) in self._terms)

    def contains_k(self) -> bool:
        return any(kv for (_, kv, _) in self._terms)

    # -- I/O ----------------------------------------------------------
    def to_text(self) -> str:
        return render(self)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"c": c, "a": a, "k": {str(i): j for i, j in kv}, "m": m}
                for (a, kv, m), c in self.items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "ArrowPolynomial":
        acc: dict[Key, int] = {}
        for t in obj["terms"]:
            key = (int(t["a"]), make_kvec({int(i): int(j) for i, j in t.get("k", {}).items()}), int(t.get("m", 0)))
            acc[key] = acc.get(key, 0) + int(t["c"])
        return cls(acc)

    def __repr__(self) -> str:
        return f"ArrowPolynomial({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def add(p: ArrowPolynomial, q: ArrowPolynomial) -> ArrowPolynomial:
    acc = dict(p._terms)
    for k, c in q._terms.items():
        acc[k] = acc.get(k, 0) + c
    return ArrowPolynomial(acc)


def mul(p: ArrowPolynomial, q: ArrowPolynomial) -> ArrowPolynomial:
    acc: dict[Key, int] = {}
    for (a1, k1, m1), c1 in p._terms.items():
        for (a2, k2, m2), c2 in q._terms.items():
            key = (a1 + a2, merge_k(k1, k2), m1 + m2)
            acc[key] = acc.get(key, 0) + c1 * c2
    return ArrowPolynomial(acc)


@lru_cache(maxsize=None)
def _d_power_coeffs(l: int) -> tuple[tuple[int, int], ...]:
    # (-A^2 - A^-2)^l = (-1)^l * sum_k C(l,k) A^{2l-4k}
    from math import comb

    sign = -1 if l % 2 else 1
    return tuple((2 * l - 4 * k, sign * comb(l, k)) for k in range(l + 1))


def d_power(l: int) -> ArrowPolynomial:
    """Expanded (-A^2 - A^-2)^l."""
    if l < 0:
        raise ValueError("d_power needs l >= 0")
    return ArrowPolynomial({(e, (), 0): c for e, c in _d_power_coeffs(l)})


D = d_power(1)


def normalize_by_writhe(p: ArrowPolynomial, w: int) -> ArrowPolynomial:
    """Return (-A^3)^(-w) * p."""
    sign = -1 if w % 2 else 1
    return p.shift_a(-3 * w).scale(sign)


def specialize_jones(p: ArrowPolynomial) -> tuple[ArrowPolynomial, int]:
    """Set every K_i to 1 and M to M/d, clearing the d-denominators.

    Returns ``(q, n_max)`` with ``q / d**n_max`` equal to the substituted
    value, where ``n_max`` is the largest M-exponent present.  ``q`` keeps
    the variable M so that different M-degrees stay separated.
    """
    n_max = p.max_m_degree()
    acc: dict[Key, int] = {}
    for (a, _kv, m), c in p._terms.items():
        for e, dc in _d_power_coeffs(n_max - m):
            key = (a + e, (), m)
            acc[key] = acc.get(key, 0) + c * dc
    return ArrowPolynomial(acc), n_max


def specialize_jones_scaled(p: ArrowPolynomial) -> tuple[ArrowPolynomial, int]:
    """d times :func:`specialize_jones` (the convention with a global d factor)."""
    q, n = specialize_jones(p)
    return mul(D, q), n


def k_degree_set(p: ArrowPolynomial) -> set[int]:
    return {sum(i * j for i, j in kv) for (_, kv, _) in p._terms}


# ---------------------------------------------------------------------------
# text rendering / parsing

def _mono_text(a: int, kv: KVec, m: int) -> str:
    parts = []
    if a:
        parts.append("A" if a == 1 else f"A^{a}")
    for i, j in kv:
        parts.append(f"K{i}" if j == 1 else f"K{i}^{j}")
    if m:
        parts.append("M" if m == 1 else f"M^{m}")
    return " ".join(parts)


def render(p: ArrowPolynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for key in sorted(p._terms, key=_render_key):
        c = p._terms[key]
        body = _mono_text(*key)
        mag = abs(c)
        if body:
            text = body if mag == 1 else f"{mag} {body}"
        else:
            text = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^(A|K(\d+)|M)(?:\^(-?\d+))?$")


def parse_poly(text: str) -> ArrowPolynomial:
    """Inverse of :func:`render` (also accepts any factor order)."""
    text = text.strip()
    if text == "0":
        return ArrowPolynomial()
    pieces = _TERM_SPLIT.split(text)
    signed = [(pieces[0], 1)]
    for op, chunk in zip(pieces[1::2], pieces[2::2]):
        signed.append((chunk, -1 if op == "-" else 1))
    acc: dict[Key, int] = {}
    for chunk, sign in signed:
        chunk = chunk.strip()
        if chunk.startswith("-"):
            sign, chunk = -sign, chunk[1:].strip()
        coeff, a, m = 1, 0, 0
        ks: dict[int, int] = {}
        for tok in chunk.split():
            if tok.isdigit():
                coeff *= int(tok)
                continue
            hit = _FACTOR.match(tok)
            if not hit:
                raise ValueError(f"bad polynomial factor {tok!r}")
            e = int(hit.group(3)) if hit.group(3) is not None else 1
            if hit.group(1) == "A":
                a += e
            elif hit.group(1) == "M":
                m += e
            else:
                i = int(hit.group(2))
                ks[i] = ks.get(i, 0) + e
        key = (a, make_kvec(ks), m)
        acc[key] = acc.get(key, 0) + sign * coeff
    return ArrowPolynomial(acc)
