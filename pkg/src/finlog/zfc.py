"""A small corpus of set-theory axiom sentences written in the core grammar.

Each sentence ships as a text file in the sugar grammar and is expanded to
core connectives at load time. Comprehension is a schema, so it is
represented by a single instance (the subset-of-w cut); replacement and
choice are left out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .syntax import Formula, is_sentence, parse_sugar

_NAMES = (
    "extensionality",
    "pairing",
    "union",
    "power_set",
    "foundation",
    "infinity",
    "comprehension_subset",
)


@dataclass(frozen=True)
class NamedSentence:
    name: str
    sentence: Formula
    source: str  # the sugar text as shipped


def _load(name: str) -> NamedSentence:
    path = resources.files("finlog").joinpath(f"corpus/zfc/{name}.fol")
    text = path.read_text(encoding="utf-8")
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise ValueError(f"corpus file {name}.fol must hold exactly one sentence")
    sentence = parse_sugar(lines[0])
    if not is_sentence(sentence):
        raise ValueError(f"corpus formula {name} has free variables")
    return NamedSentence(name, sentence, lines[0])


@lru_cache(maxsize=1)
def corpus() -> tuple[NamedSentence, ...]:
    """The named axiom sentences, in a fixed order."""
    return tuple(_load(name) for name in _NAMES)


def by_name(name: str) -> NamedSentence:
    for ns in corpus():
        if ns.name == name:
            return ns
    raise KeyError(name)
