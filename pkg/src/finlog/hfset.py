"""Hereditarily finite sets in canonical form.

Every value is built from the empty set by finitely many applications of
"collect these sets into a new set". Canonical form keeps the members
strictly increasing under ``hf_cmp``, so structural equality coincides with
extensional equality and printing is deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

# hf_index stays below 2**63; bigger sets are constructible but not indexable
MAX_INDEX = 2**63


@dataclass(frozen=True)
class HFSet:
    """A hereditarily finite set; ``children`` are its members, canonically ordered."""

    children: tuple[HFSet, ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.children, self.children[1:]):
            if hf_cmp(a, b) >= 0:
                raise ValueError("members must be strictly increasing under hf_cmp; build via make_set")

    def __len__(self) -> int:
        return len(self.children)

    def __iter__(self) -> Iterator[HFSet]:
        return iter(self.children)

    def __repr__(self) -> str:
        return print_hf(self)


EMPTY = HFSet()


def make_set(elems: Iterable[HFSet]) -> HFSet:
    """Collect the given sets into a set: sort canonically, drop duplicates."""
    ordered = sorted(elems, key=functools.cmp_to_key(hf_cmp))
    unique: list[HFSet] = []
    for s in ordered:
        if not unique or unique[-1] != s:
            unique.append(s)
    return HFSet(tuple(unique))


def hf_cmp(a: HFSet, b: HFSet) -> int:
    """Total order: lexicographic on member sequences, shorter prefix first."""
    for x, y in zip(a.children, b.children):
        c = hf_cmp(x, y)
        if c:
            return c
    return (len(a.children) > len(b.children)) - (len(a.children) < len(b.children))


def member(a: HFSet, b: HFSet) -> bool:
    return any(a == c for c in b.children)


def union(a: HFSet, b: HFSet) -> HFSet:
    return make_set(a.children + b.children)


def intersection(a: HFSet, b: HFSet) -> HFSet:
    return make_set(x for x in a.children if member(x, b))


def difference(a: HFSet, b: HFSet) -> HFSet:
    return make_set(x for x in a.children if not member(x, b))


def is_subset(a: HFSet, b: HFSet) -> bool:
    return all(member(x, b) for x in a.children)


def kpair(a: HFSet, b: HFSet) -> HFSet:
    """Kuratowski ordered pair {{a},{a,b}}; collapses to {{a}} when a = b."""
    return make_set([make_set([a]), make_set([a, b])])


def unpair(p: HFSet) -> Optional[tuple[HFSet, HFSet]]:
    """Decode a Kuratowski pair, or None if p is not one."""
    if len(p) == 1:
        (inner,) = p.children
        if len(inner) == 1:
            return inner.children[0], inner.children[0]
        return None
    if len(p) == 2:
        for u, v in (p.children, p.children[::-1]):
            if len(u) == 1 and len(v) == 2:
                a = u.children[0]
                if member(a, v):
                    b = v.children[1] if v.children[0] == a else v.children[0]
                    if kpair(a, b) == p:
                        return a, b
        return None
    return None


def product(a: HFSet, b: HFSet) -> HFSet:
    return make_set(kpair(x, y) for x in a.children for y in b.children)


def nat_to_hf(n: int) -> HFSet:
    """Von Neumann coding: 0 is empty, n+1 is n together with {n}."""
    if n < 0:
        raise ValueError("natural numbers only")
    cur = EMPTY
    for _ in range(n):
        cur = union(cur, make_set([cur]))
    return cur


def hf_to_nat(s: HFSet) -> Optional[int]:
    """Inverse of nat_to_hf; None when s is not a von Neumann natural."""
    n = len(s)
    return n if s == nat_to_hf(n) else None


def _pairs_of(f: HFSet) -> list[tuple[HFSet, HFSet]]:
    pairs = []
    for el in f.children:
        p = unpair(el)
        if p is None:
            raise ValueError(f"not a set of ordered pairs: {el!r} is not a pair")
        pairs.append(p)
    return pairs


def is_function(f: HFSet, a: HFSet, b: HFSet) -> bool:
    """True iff f is a function from a into b.

    Checks the three clauses: f is a subset of a x b, f is single-valued,
    and f is total on a.
    """
    seen: dict[HFSet, HFSet] = {}
    for el in f.children:
        p = unpair(el)
        if p is None or not member(p[0], a) or not member(p[1], b):
            return False
        if p[0] in seen and seen[p[0]] != p[1]:
            return False
        seen[p[0]] = p[1]
    return all(x in seen for x in a.children)


def func_apply(f: HFSet, a: HFSet) -> HFSet:
    """The unique b with (a, b) in f. Missing a is a caller bug, not an absent result."""
    for x, y in _pairs_of(f):
        if x == a:
            return y
    raise KeyError(f"{a!r} is not in the domain of the function")


def func_restrict(f: HFSet, c: HFSet) -> HFSet:
    """Pairs of f whose first coordinate lies in c."""
    return make_set(kpair(x, y) for x, y in _pairs_of(f) if member(x, c))


def func_dom(f: HFSet) -> HFSet:
    return make_set(x for x, _ in _pairs_of(f))


def func_ran(f: HFSet) -> HFSet:
    return make_set(y for _, y in _pairs_of(f))


def seq_from_list(elems: Iterable[HFSet]) -> HFSet:
    """The sequence whose i-th letter is elems[i], coded as {(i, elems[i])}."""
    return make_set(kpair(nat_to_hf(i), e) for i, e in enumerate(elems))


def seq_len(s: HFSet) -> int:
    """Length of a sequence; raises if the domain is not a natural number."""
    n = hf_to_nat(func_dom(s))
    if n is None:
        raise ValueError("not a sequence: domain is not a natural number")
    if len(s) != n:
        raise ValueError("not a sequence: not single-valued")
    return n


def seq_to_list(s: HFSet) -> list[HFSet]:
    n = seq_len(s)
    by_pos = {hf_to_nat(x): y for x, y in _pairs_of(s)}
    return [by_pos[i] for i in range(n)]


def seq_restrict(s: HFSet, k: int) -> HFSet:
    """First k letters of the sequence s."""
    if k > seq_len(s):
        raise ValueError(f"cannot restrict a sequence of length {seq_len(s)} to {k}")
    return func_restrict(s, nat_to_hf(k))


def hf_index(s: HFSet) -> int:
    """Ackermann code: sum of 2**hf_index(e) over the members e."""
    code = sum(2 ** hf_index(e) for e in s.children)
    if code >= MAX_INDEX:
        raise OverflowError("set is too large to index (code would exceed 2**63)")
    return code


def hf_from_index(i: int) -> HFSet:
    """Inverse of hf_index: the member for each set bit of i."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    if i >= MAX_INDEX:
        raise OverflowError("index out of the representable range (below 2**63)")
    return make_set(hf_from_index(bit) for bit in range(i.bit_length()) if i >> bit & 1)


def parse_hf(text: str) -> HFSet:
    """Parse an HF literal: ``{}``, ``{a,b}``, a decimal natural, or ``(a,b)``."""
    s, pos = _parse_lit(text, _skip_ws(text, 0))
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ValueError(f"trailing input in HF literal at position {pos}")
    return s


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_lit(text: str, pos: int) -> tuple[HFSet, int]:
    if pos >= len(text):
        raise ValueError("unexpected end of HF literal")
    ch = text[pos]
    if ch == "{":
        pos = _skip_ws(text, pos + 1)
        elems: list[HFSet] = []
        if pos < len(text) and text[pos] == "}":
            return make_set(elems), pos + 1
        while True:
            el, pos = _parse_lit(text, pos)
            elems.append(el)
            pos = _skip_ws(text, pos)
            if pos < len(text) and text[pos] == ",":
                pos = _skip_ws(text, pos + 1)
                continue
            if pos < len(text) and text[pos] == "}":
                return make_set(elems), pos + 1
            raise ValueError(f"expected ',' or '}}' in HF literal at position {pos}")
    if ch == "(":
        pos = _skip_ws(text, pos + 1)
        first, pos = _parse_lit(text, pos)
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ",":
            raise ValueError(f"expected ',' in pair literal at position {pos}")
        second, pos = _parse_lit(text, _skip_ws(text, pos + 1))
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"expected ')' in pair literal at position {pos}")
        return kpair(first, second), pos + 1
    if ch.isdigit():
        end = pos
        while end < len(text) and text[end].isdigit():
            end += 1
        return nat_to_hf(int(text[pos:end])), end
    raise ValueError(f"unexpected character {ch!r} in HF literal at position {pos}")


def print_hf(s: HFSet, sugar: bool = False) -> str:
    """Canonical literal. With sugar, fold von Neumann naturals and pairs."""
    if sugar:
        n = hf_to_nat(s)
        if n is not None:
            return str(n)
        p = unpair(s)
        if p is not None:
            return f"({print_hf(p[0], True)},{print_hf(p[1], True)})"
        return "{" + ",".join(print_hf(c, True) for c in s.children) + "}"
    return "{" + ",".join(print_hf(c) for c in s.children) + "}"
