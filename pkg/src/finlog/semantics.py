"""Evaluation of formulas over a finite model, truth-table tautology
checking, and counterexample search by model enumeration.

A model is a non-empty HF set; membership is interpreted as real membership.
An assignment is a plain dict from Var to HFSet covering the free variables,
with every bound value a member of the model.

A search that finds nothing means "no counterexample up to the bound",
never "valid": enumeration is capped, validity quantifies over every model.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping, Optional

from .hfset import HFSet, hf_from_index, hf_index, member, parse_hf, print_hf
from .syntax import (
    Eq,
    Forall,
    Formula,
    In,
    Not,
    Or,
    Var,
    basic_subformulas,
    free_vars,
    is_free_for,
    print_strict,
    substitute,
)

Assignment = dict[Var, HFSet]

TAUTOLOGY_CAP = 20  # 2**20 truth-table rows; beyond this is a capacity error


class CapacityError(Exception):
    """The operation would exceed a hard enumeration cap."""


@dataclass
class EvalStats:
    """Instrumentation: how many quantifier body evaluations happened."""

    forall_body_evals: int = 0


def assign_update(sigma: Mapping[Var, HFSet], x: Var, a: HFSet) -> Assignment:
    """Functional override: maps x to a, agrees with sigma elsewhere."""
    out = dict(sigma)
    out[x] = a
    return out


def check_assignment(model: HFSet, phi: Formula, sigma: Mapping[Var, HFSet]) -> None:
    """Raise unless sigma is an assignment for phi in the non-empty model."""
    if len(model) == 0:
        raise ValueError("the model must be non-empty")
    for v in free_vars(phi):
        if v not in sigma:
            raise ValueError(f"assignment is missing the free variable {v!r}")
    for v, a in sigma.items():
        if not member(a, model):
            raise ValueError(f"assignment value for {v!r} is not a member of the model")


def eval_formula(
    model: HFSet,
    phi: Formula,
    sigma: Mapping[Var, HFSet],
    stats: Optional[EvalStats] = None,
) -> int:
    """Truth value of phi in the model under sigma, in {0, 1}."""
    check_assignment(model, phi, sigma)
    return _val(model, phi, dict(sigma), stats)


def _val(model: HFSet, phi: Formula, sigma: Assignment, stats: Optional[EvalStats]) -> int:
    # no short-circuiting anywhere: a quantifier always evaluates its body
    # once per model element, a disjunction always evaluates both sides
    match phi:
        case Eq(l, r):
            return 1 if sigma[l] == sigma[r] else 0
        case In(l, r):
            return 1 if member(sigma[l], sigma[r]) else 0
        case Not(body):
            return 1 - _val(model, body, sigma, stats)
        case Or(left, right):
            return max(_val(model, left, sigma, stats), _val(model, right, sigma, stats))
        case Forall(x, body):
            bit = 1
            for a in model.children:
                if stats is not None:
                    stats.forall_body_evals += 1
                bit = min(bit, _val(model, body, assign_update(sigma, x, a), stats))
            return bit
    raise TypeError(f"not a formula: {phi!r}")


def value_only_check(model: HFSet, phi: Formula, sigma: Assignment, tau: Assignment) -> bool:
    """Whether two assignments that agree on the free variables give equal values.

    Always true; exposed as a check so the fact stays executable.
    """
    check_assignment(model, phi, sigma)
    check_assignment(model, phi, tau)
    for v in free_vars(phi):
        if sigma[v] != tau[v]:
            raise ValueError(f"assignments disagree on the free variable {v!r}")
    return eval_formula(model, phi, sigma) == eval_formula(model, phi, tau)


def extend_truth(v: Mapping[Formula, int], phi: Formula) -> int:
    """Extend a truth assignment on the basic subformulas through not/or."""
    match phi:
        case Not(body):
            return 1 - extend_truth(v, body)
        case Or(left, right):
            return max(extend_truth(v, left), extend_truth(v, right))
        case _:
            try:
                return v[phi]
            except KeyError:
                raise ValueError(f"truth assignment is missing the basic formula {phi!r}") from None


def falsifying_assignment(phi: Formula) -> Optional[dict[Formula, int]]:
    """A truth assignment making phi false, or None when phi is a tautology."""
    basics = sorted(basic_subformulas(phi), key=print_strict)
    if len(basics) > TAUTOLOGY_CAP:
        raise CapacityError(
            f"{len(basics)} basic subformulas exceed the tautology cap of {TAUTOLOGY_CAP}"
        )
    for bits in itertools.product((0, 1), repeat=len(basics)):
        v = dict(zip(basics, bits))
        if extend_truth(v, phi) == 0:
            return v
    return None


def is_tautology(phi: Formula) -> bool:
    """True iff every truth assignment over the basic subformulas extends to 1."""
    return falsifying_assignment(phi) is None


@dataclass(frozen=True)
class Counterexample:
    """A model and assignment under which the target formula evaluates to 0."""

    model: HFSet
    assignment: Assignment

    def __post_init__(self) -> None:
        if len(self.model) == 0:
            raise ValueError("a counterexample model must be non-empty")


def search_counterexample(phi: Formula, max_index: int) -> Optional[Counterexample]:
    """Search models 1..max_index in index order and all assignments of the
    free variables.

    Returns the first falsifying pair, or None meaning no counterexample up
    to the bound (which is weaker than validity).
    """
    fv = sorted(free_vars(phi), key=lambda v: v.index)
    for i in range(1, max_index + 1):
        model = hf_from_index(i)
        elems = sorted(model.children, key=hf_index)
        for values in itertools.product(elems, repeat=len(fv)):
            sigma = dict(zip(fv, values))
            if _val(model, phi, sigma, None) == 0:
                return Counterexample(model, sigma)
    return None


def substitution_lemma_check(
    model: HFSet, phi: Formula, x: Var, y: Var, sigma: Assignment
) -> bool:
    """Whether replacing x by y syntactically matches rebinding x to sigma(y).

    Always true under the preconditions; exposed as an executable check.
    """
    if not is_free_for(y, x, phi):
        raise ValueError(f"{y!r} is not free for {x!r} in the formula")
    if y not in sigma:
        raise ValueError(f"assignment is missing {y!r}")
    lhs = eval_formula(model, substitute(phi, x, y), sigma)
    rhs = eval_formula(model, phi, assign_update(sigma, x, sigma[y]))
    return lhs == rhs


_ASSIGN_PAIR = re.compile(r"\s*x([1-9][0-9]*)\s*:=\s*(.*?)\s*$")


def parse_assignment(text: str) -> Assignment:
    """Parse pairs like ``x1 := {}; x2 := {{}}`` into an assignment."""
    sigma: Assignment = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        m = _ASSIGN_PAIR.match(part)
        if m is None:
            raise ValueError(f"malformed assignment entry {part.strip()!r}")
        v = Var(int(m.group(1)))
        if v in sigma:
            raise ValueError(f"duplicate binding for {v!r}")
        sigma[v] = parse_hf(m.group(2))
    return sigma


def format_assignment(sigma: Mapping[Var, HFSet], sugar: bool = False) -> str:
    pairs = sorted(sigma.items(), key=lambda kv: kv[0].index)
    return "; ".join(f"{v!r}:={print_hf(a, sugar)}" for v, a in pairs)
