"""Hilbert-style proof checking and the empirical soundness harness.

A proof script is a theory (a set of sentences) plus a non-empty sequence of
sentence lines. Lines carry no annotations; the checker searches for a
justification for each line: membership in the theory, being a logical
axiom, or Modus Ponens from two earlier lines.

The soundness harness then enumerates models up to an index bound and
verifies that every model of the theory also satisfies the proved sentence.
A violation would be a kernel bug, not a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .hfset import HFSet, hf_from_index
from .semantics import eval_formula, is_tautology
from .syntax import (
    Eq,
    Forall,
    Formula,
    In,
    Not,
    Or,
    Var,
    all_vars,
    free_vars,
    is_free_for,
    is_sentence,
    parse_sugar,
    print_strict,
    strip_closure,
    substitute,
)


@dataclass(frozen=True)
class ProofScript:
    """A theory together with the sentence lines claimed to prove the last line."""

    sigma: frozenset[Formula]
    lines: tuple[Formula, ...]


@dataclass(frozen=True)
class InSigma:
    pass


@dataclass(frozen=True)
class Axiom:
    schema: int  # 1..8


@dataclass(frozen=True)
class ModusPonens:
    minor: int  # 1-based line holding the antecedent
    major: int  # 1-based line holding the implication


Justification = Union[InSigma, Axiom, ModusPonens]


@dataclass(frozen=True)
class LineReport:
    number: int  # 1-based
    formula: Formula
    justification: Optional[Justification]
    reason: Optional[str] = None


@dataclass(frozen=True)
class ProofReport:
    accepted: bool
    lines: tuple[LineReport, ...]
    reason: Optional[str] = None  # script-level failure, e.g. empty line sequence

    @property
    def conclusion(self) -> Optional[Formula]:
        return self.lines[-1].formula if self.accepted and self.lines else None


def _match_implies(phi: Formula) -> Optional[tuple[Formula, Formula]]:
    match phi:
        case Or(Not(p), c):
            return p, c
    return None


def _match_conj(phi: Formula) -> Optional[tuple[Formula, Formula]]:
    match phi:
        case Not(Or(Not(a), Not(b))):
            return a, b
    return None


def _match_iff(phi: Formula) -> Optional[tuple[Formula, Formula]]:
    c = _match_conj(phi)
    if c is None:
        return None
    fwd = _match_implies(c[0])
    bwd = _match_implies(c[1])
    if fwd and bwd and bwd == (fwd[1], fwd[0]):
        return fwd
    return None


def is_logical_axiom(phi: Formula) -> Optional[int]:
    """The lowest schema id (1..8) phi instantiates under universal closure,
    or None.

    A universal closure is a sentence, so non-sentences are never axioms.
    Abbreviated connectives are recognized through their expansions.
    """
    if not is_sentence(phi):
        return None
    _, matrix = strip_closure(phi)

    if is_tautology(matrix):
        return 1

    imp = _match_implies(matrix)
    if imp is not None:
        premise, conclusion = imp
        # quantifying over a variable with no free occurrence
        if (
            isinstance(conclusion, Forall)
            and conclusion.body == premise
            and conclusion.var not in free_vars(premise)
        ):
            return 2
        # distributing a quantifier over an implication
        if isinstance(premise, Forall):
            inner = _match_implies(premise.body)
            outer = _match_implies(conclusion)
            if inner is not None and outer is not None:
                lhs, rhs = outer
                if (
                    isinstance(lhs, Forall)
                    and isinstance(rhs, Forall)
                    and lhs.var == premise.var == rhs.var
                    and (lhs.body, rhs.body) == inner
                ):
                    return 3
        # specialization: from forall x (psi) to psi with x replaced by y
        if isinstance(premise, Forall):
            x, psi = premise.var, premise.body
            candidates = sorted(all_vars(conclusion) | {x}, key=lambda v: v.index)
            for y in candidates:
                if is_free_for(y, x, psi) and substitute(psi, x, y) == conclusion:
                    return 4

    match matrix:
        case Eq(a, b) if a == b:
            return 5

    equiv = _match_iff(matrix)
    if equiv is not None:
        match equiv:
            case (Eq(a, b), Eq(c, d)) if (c, d) == (b, a):
                return 6

    if imp is not None:
        premise, conclusion = imp
        both = _match_conj(premise)
        if both is not None:
            match both, conclusion:
                case (Eq(a, b), Eq(b2, c)), Eq(a2, c2) if b2 == b and a2 == a and c2 == c:
                    return 7
            cons = _match_iff(conclusion)
            if cons is not None:
                match both, cons:
                    case (Eq(w, x), Eq(y, z)), (In(w2, y2), In(x2, z2)) if (
                        (w2, y2, x2, z2) == (w, y, x, z)
                    ):
                        return 8

    return None


def modus_ponens(major: Formula, minor: Formula) -> Optional[Formula]:
    """The consequent, when major is the implication from minor; else None."""
    imp = _match_implies(major)
    if imp is not None and imp[0] == minor:
        return imp[1]
    return None


def check_proof(ps: ProofScript) -> ProofReport:
    """Justify every line or reject, naming the first reason per line.

    Justifications are searched in a fixed order (theory membership, then
    axiom schemas, then Modus Ponens over earlier pairs with the lowest
    minor then major line), so reports are deterministic.
    """
    if not ps.lines:
        return ProofReport(False, (), reason="a proof is a non-empty sequence of sentences")
    for s in ps.sigma:
        if not is_sentence(s):
            return ProofReport(
                False, (), reason=f"theory member is not a sentence: {print_strict(s)}"
            )

    reports: list[LineReport] = []
    accepted = True
    for i, line in enumerate(ps.lines):
        n = i + 1
        if not is_sentence(line):
            reports.append(LineReport(n, line, None, "not a sentence"))
            accepted = False
            continue
        pick: Optional[Justification] = None
        if line in ps.sigma:
            pick = InSigma()
        if pick is None:
            schema = is_logical_axiom(line)
            if schema is not None:
                pick = Axiom(schema)
        if pick is None:
            for j in range(i):
                for k in range(i):
                    if modus_ponens(ps.lines[k], ps.lines[j]) == line:
                        pick = ModusPonens(j + 1, k + 1)
                        break
                if pick is not None:
                    break
        if pick is None:
            reports.append(LineReport(n, line, None, "no justification found"))
            accepted = False
        else:
            reports.append(LineReport(n, line, pick))
    return ProofReport(accepted, tuple(reports))


def models_theory(model: HFSet, sigma: Iterable[Formula]) -> bool:
    """True iff every sentence of the theory holds in the model."""
    if len(model) == 0:
        raise ValueError("the model must be non-empty")
    return all(eval_formula(model, s, {}) == 1 for s in sigma)


@dataclass(frozen=True)
class SoundnessReport:
    max_index: int
    models_examined: int
    sigma_models: tuple[int, ...]  # indices of models satisfying the theory
    violations: tuple[int, ...]  # indices where the conclusion failed; a kernel bug
    conclusion: Formula

    @property
    def clean(self) -> bool:
        return not self.violations


def soundness_check(ps: ProofScript, max_index: int) -> SoundnessReport:
    """Check the proved sentence in every model of the theory up to the bound.

    The script must already check out; any violation found here is reported
    for diagnosis rather than hidden.
    """
    report = check_proof(ps)
    if not report.accepted:
        raise ValueError("soundness_check requires an accepted proof script")
    conclusion = ps.lines[-1]
    sigma_models: list[int] = []
    violations: list[int] = []
    for i in range(1, max_index + 1):
        model = hf_from_index(i)
        if models_theory(model, ps.sigma):
            sigma_models.append(i)
            if eval_formula(model, conclusion, {}) != 1:
                violations.append(i)
    return SoundnessReport(
        max_index=max_index,
        models_examined=max_index,
        sigma_models=tuple(sigma_models),
        violations=tuple(violations),
        conclusion=conclusion,
    )


def parse_proof_text(text: str) -> ProofScript:
    """Parse the proof file format.

    A ``sigma:`` header, then theory sentences one per line, then a
    ``proof:`` header and the proof lines. ``#`` starts a comment, blank
    lines are skipped, and formulas may use the sugar grammar.
    """
    sigma: list[Formula] = []
    lines: list[Formula] = []
    section: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped == "sigma:":
            section = "sigma"
            continue
        if stripped == "proof:":
            section = "proof"
            continue
        if section is None:
            raise ValueError(f"line {lineno}: expected a 'sigma:' header before any formulas")
        try:
            phi = parse_sugar(stripped)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        (sigma if section == "sigma" else lines).append(phi)
    if section is None:
        raise ValueError("missing 'sigma:' and 'proof:' headers")
    if section == "sigma":
        raise ValueError("missing 'proof:' header")
    return ProofScript(frozenset(sigma), tuple(lines))


def parse_proof_file(path) -> ProofScript:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_proof_text(fh.read())
