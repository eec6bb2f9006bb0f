"""Formula syntax: the exact grammar, tokenizer, parser, printer, and
variable analysis.

The strict grammar is fully parenthesized, which makes every formula
decompose in exactly one way:

    F ::= V "=" V | V "in" V | "not" "(" F ")"
        | "(" F ")" "or" "(" F ")" | "forall" V "(" F ")"

The sugar grammar adds "and", "implies", "iff", and "exists", which are
expanded into the strict connectives at parse time; there is no separate
sugared tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union


@dataclass(frozen=True)
class Var:
    """The variable x_index; indices start at 1."""

    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("variable indices start at 1")

    def __repr__(self) -> str:
        return f"x{self.index}"


class Formula:
    """Base of the five formula variants."""

    __slots__ = ()

    def __repr__(self) -> str:
        return print_strict(self)  # type: ignore[arg-type]


@dataclass(frozen=True, repr=False)
class Eq(Formula):
    left: Var
    right: Var


@dataclass(frozen=True, repr=False)
class In(Formula):
    left: Var
    right: Var


@dataclass(frozen=True, repr=False)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Forall(Formula):
    var: Var
    body: Formula


# Abbreviations expand immediately; the tree never contains them.

def conj(a: Formula, b: Formula) -> Formula:
    return Not(Or(Not(a), Not(b)))


def implies(a: Formula, b: Formula) -> Formula:
    return Or(Not(a), b)


def iff(a: Formula, b: Formula) -> Formula:
    return conj(implies(a, b), implies(b, a))


def exists(x: Var, body: Formula) -> Formula:
    return Not(Forall(x, Not(body)))


# Token kinds. The first eight are the logical symbols; the last four are
# sugar keywords that only the sugar parser accepts.
VAR = "var"
EQ = "eq"
IN = "in"
NOT = "not"
OR = "or"
FORALL = "forall"
LPAREN = "lparen"
RPAREN = "rparen"
AND = "and"
IMPLIES = "implies"
IFF = "iff"
EXISTS = "exists"

_STRICT_KINDS = (VAR, EQ, IN, NOT, OR, FORALL, LPAREN, RPAREN)


@dataclass(frozen=True)
class Token:
    kind: str
    index: Optional[int] = None  # variable index, for kind == VAR
    pos: int = 0  # character offset into the source text

    def __repr__(self) -> str:
        return f"x{self.index}" if self.kind == VAR else self.kind


class ParseError(ValueError):
    """Lex or parse failure; pos is a character offset into the source."""

    def __init__(self, message: str, pos: int, expected: frozenset[str] = frozenset()):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.expected = expected


def byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


_KEYWORDS = {
    "not": NOT,
    "or": OR,
    "forall": FORALL,
    "in": IN,
    "and": AND,
    "implies": IMPLIES,
    "iff": IFF,
    "exists": EXISTS,
}
_SYMBOLS = {
    "=": EQ,
    "(": LPAREN,
    ")": RPAREN,
    "¬": NOT,  # ¬
    "∨": OR,  # ∨
    "∀": FORALL,  # ∀
    "∈": IN,  # ∈
}
_WORD = re.compile(r"[A-Za-z0-9]+")
_VARIABLE = re.compile(r"x([1-9][0-9]*)$")


def tokenize(text: str) -> list[Token]:
    """Longest-match lexing. Whitespace separates words but is never
    required next to punctuation."""
    toks: list[Token] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in _SYMBOLS:
            toks.append(Token(_SYMBOLS[ch], pos=pos))
            pos += 1
            continue
        m = _WORD.match(text, pos)
        if m is None:
            raise ParseError(
                f"unknown character {ch!r} (byte offset {byte_offset(text, pos)})", pos
            )
        word = m.group()
        if word in _KEYWORDS:
            toks.append(Token(_KEYWORDS[word], pos=pos))
        else:
            vm = _VARIABLE.match(word)
            if vm is None:
                raise ParseError(
                    f"malformed word {word!r}: variables are x1, x2, ... "
                    f"(byte offset {byte_offset(text, pos)})",
                    pos,
                )
            toks.append(Token(VAR, index=int(vm.group(1)), pos=pos))
        pos = m.end()
    return toks


def count(toks: Sequence[Token]) -> int:
    """Open parentheses minus closed parentheses."""
    return sum(1 for t in toks if t.kind == LPAREN) - sum(1 for t in toks if t.kind == RPAREN)


def is_p_sequence(toks: Union[str, Sequence[Token]]) -> bool:
    """True iff the parenthesis sequence is n opens followed by n closes."""
    if isinstance(toks, str):
        chars = toks
    else:
        chars = "".join({LPAREN: "(", RPAREN: ")"}.get(t.kind, "?") for t in toks)
    if not set(chars) <= {"(", ")"}:
        raise ValueError("p-sequences contain only parentheses")

    def check(s: str) -> bool:
        if not s:
            return True
        return s[0] == "(" and s[-1] == ")" and check(s[1:-1])

    return check(chars)


class _Parser:
    def __init__(self, toks: Sequence[Token], sugar: bool):
        self.toks = toks
        self.i = 0
        self.sugar = sugar

    def peek(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, expected: frozenset[str]) -> ParseError:
        t = self.peek()
        names = ", ".join(sorted(expected))
        if t is None:
            pos = self.toks[-1].pos + 1 if self.toks else 0
            return ParseError(f"unexpected end of input, expected one of: {names}", pos, expected)
        return ParseError(f"unexpected {t!r}, expected one of: {names}", t.pos, expected)

    def take(self, kind: str) -> Token:
        t = self.peek()
        if t is None or t.kind != kind:
            raise self.error(frozenset([kind]))
        self.i += 1
        return t

    def formula(self) -> Formula:
        t = self.peek()
        if t is None:
            raise self.error(frozenset([VAR, NOT, LPAREN, FORALL]))
        if t.kind == VAR:
            return self.atomic()
        if t.kind == NOT:
            self.i += 1
            self.take(LPAREN)
            body = self.formula()
            self.take(RPAREN)
            return Not(body)
        if t.kind == FORALL:
            self.i += 1
            x = self.variable()
            self.take(LPAREN)
            body = self.formula()
            self.take(RPAREN)
            return Forall(x, body)
        if t.kind == LPAREN:
            self.i += 1
            left = self.formula()
            self.take(RPAREN)
            op = self.connective()
            self.take(LPAREN)
            right = self.formula()
            self.take(RPAREN)
            if op == OR:
                return Or(left, right)
            if op == AND:
                return conj(left, right)
            if op == IMPLIES:
                return implies(left, right)
            return iff(left, right)
        if t.kind == EXISTS and self.sugar:
            self.i += 1
            x = self.variable()
            self.take(LPAREN)
            body = self.formula()
            self.take(RPAREN)
            return exists(x, body)
        starters = frozenset([VAR, NOT, LPAREN, FORALL] + ([EXISTS] if self.sugar else []))
        raise self.error(starters)

    def atomic(self) -> Formula:
        left = self.variable()
        t = self.peek()
        if t is None or t.kind not in (EQ, IN):
            raise self.error(frozenset([EQ, IN]))
        self.i += 1
        right = self.variable()
        return Eq(left, right) if t.kind == EQ else In(left, right)

    def variable(self) -> Var:
        t = self.take(VAR)
        assert t.index is not None
        return Var(t.index)

    def connective(self) -> str:
        allowed = (OR, AND, IMPLIES, IFF) if self.sugar else (OR,)
        t = self.peek()
        if t is None or t.kind not in allowed:
            raise self.error(frozenset(allowed))
        self.i += 1
        return t.kind


def _parse(toks: Sequence[Token], sugar: bool) -> Formula:
    p = _Parser(toks, sugar)
    f = p.formula()
    if p.peek() is not None:
        raise ParseError(f"trailing input after a complete formula: {p.peek()!r}", p.peek().pos)
    return f


def parse(toks: Sequence[Token]) -> Formula:
    """Parse the strict grammar; the resulting tree is the unique decomposition."""
    return _parse(toks, sugar=False)


def parse_sugar(text: str) -> Formula:
    """Parse the sugar grammar (a superset of the strict one) from text."""
    return _parse(tokenize(text), sugar=True)


def print_strict(phi: Formula) -> str:
    """The strict fully parenthesized form; parsing it back yields phi."""
    match phi:
        case Eq(l, r):
            return f"{l!r} = {r!r}"
        case In(l, r):
            return f"{l!r} in {r!r}"
        case Not(body):
            return f"not ( {print_strict(body)} )"
        case Or(left, right):
            return f"( {print_strict(left)} ) or ( {print_strict(right)} )"
        case Forall(x, body):
            return f"forall {x!r} ( {print_strict(body)} )"
    raise TypeError(f"not a formula: {phi!r}")


def free_vars(phi: Formula) -> set[Var]:
    """The variables with a free occurrence in phi."""
    match phi:
        case Eq(l, r) | In(l, r):
            return {l, r}
        case Not(body):
            return free_vars(body)
        case Or(left, right):
            return free_vars(left) | free_vars(right)
        case Forall(x, body):
            return free_vars(body) - {x}
    raise TypeError(f"not a formula: {phi!r}")


def all_vars(phi: Formula) -> set[Var]:
    """Every variable occurring in phi, free or bound, binders included."""
    match phi:
        case Eq(l, r) | In(l, r):
            return {l, r}
        case Not(body):
            return all_vars(body)
        case Or(left, right):
            return all_vars(left) | all_vars(right)
        case Forall(x, body):
            return all_vars(body) | {x}
    raise TypeError(f"not a formula: {phi!r}")


def occurrences(phi: Formula) -> list[tuple[Var, bool]]:
    """All variable occurrences in print order, flagged bound or free.

    The occurrence right after a quantifier counts as bound, so the list
    lines up one to one with the variable tokens of print_strict(phi).
    """
    out: list[tuple[Var, bool]] = []

    def walk(f: Formula, bound: frozenset[Var]) -> None:
        match f:
            case Eq(l, r) | In(l, r):
                out.append((l, l in bound))
                out.append((r, r in bound))
            case Not(body):
                walk(body, bound)
            case Or(left, right):
                walk(left, bound)
                walk(right, bound)
            case Forall(x, body):
                out.append((x, True))
                walk(body, bound | {x})

    walk(phi, frozenset())
    return out


def is_sentence(phi: Formula) -> bool:
    return not free_vars(phi)


def substitute(phi: Formula, x: Var, y: Var) -> Formula:
    """Replace the free occurrences of x by y; binders and bound occurrences stay."""
    match phi:
        case Eq(l, r):
            return Eq(y if l == x else l, y if r == x else r)
        case In(l, r):
            return In(y if l == x else l, y if r == x else r)
        case Not(body):
            return Not(substitute(body, x, y))
        case Or(left, right):
            return Or(substitute(left, x, y), substitute(right, x, y))
        case Forall(v, body):
            return phi if v == x else Forall(v, substitute(body, x, y))
    raise TypeError(f"not a formula: {phi!r}")


def is_free_for(y: Var, x: Var, phi: Formula) -> bool:
    """True iff no free occurrence of x lies inside a subformula that
    quantifies over y. Vacuously true when x has no free occurrence."""

    def walk(f: Formula, under_y: bool) -> bool:
        match f:
            case Eq(l, r) | In(l, r):
                return not (under_y and x in (l, r))
            case Not(body):
                return walk(body, under_y)
            case Or(left, right):
                return walk(left, under_y) and walk(right, under_y)
            case Forall(v, body):
                if v == x:
                    return True  # x is bound below; those occurrences do not count
                return walk(body, under_y or v == y)
        raise TypeError(f"not a formula: {f!r}")

    return walk(phi, False)


def universal_closure(phi: Formula, vars: Sequence[Var]) -> Formula:
    """Prefix the quantifiers in order: closure(phi, [x, y]) is forall x forall y phi."""
    out = phi
    for v in reversed(vars):
        out = Forall(v, out)
    return out


def strip_closure(phi: Formula) -> tuple[list[Var], Formula]:
    """Remove the maximal leading quantifier spine; inverse of universal_closure."""
    spine: list[Var] = []
    while isinstance(phi, Forall):
        spine.append(phi.var)
        phi = phi.body
    return spine, phi


def subformulas(phi: Formula) -> list[Formula]:
    """phi and all its descendants, in preorder."""
    match phi:
        case Eq() | In():
            return [phi]
        case Not(body):
            return [phi] + subformulas(body)
        case Or(left, right):
            return [phi] + subformulas(left) + subformulas(right)
        case Forall(_, body):
            return [phi] + subformulas(body)
    raise TypeError(f"not a formula: {phi!r}")


def basic_subformulas(phi: Formula) -> set[Formula]:
    """The propositional atoms of phi: the maximal subformulas that are not
    negations or disjunctions (atomic or quantified)."""
    match phi:
        case Not(body):
            return basic_subformulas(body)
        case Or(left, right):
            return basic_subformulas(left) | basic_subformulas(right)
        case _:
            return {phi}


# HF codes for the logical symbols: x_n is (1, n); the fixed symbols
# =, in, not, or, ), (, forall take first coordinate 2..8, second 1.
_SYMBOL_CODE_KINDS = {EQ: 2, IN: 3, NOT: 4, OR: 5, RPAREN: 6, LPAREN: 7, FORALL: 8}


def symbol_code(t: Token):
    """The set coding the logical symbol of t, as an ordered pair of naturals."""
    from .hfset import kpair, nat_to_hf

    if t.kind == VAR:
        assert t.index is not None
        return kpair(nat_to_hf(1), nat_to_hf(t.index))
    if t.kind in _SYMBOL_CODE_KINDS:
        return kpair(nat_to_hf(_SYMBOL_CODE_KINDS[t.kind]), nat_to_hf(1))
    raise ValueError(f"{t.kind} is an abbreviation, not a logical symbol")
