"""Shared generators and small independent oracles for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from finlog.hfset import HFSet, hf_from_index, member
from finlog.syntax import (
    Eq,
    Forall,
    Formula,
    In,
    Not,
    Or,
    Var,
    conj,
    free_vars,
    iff,
    implies,
    is_free_for,
    substitute,
    universal_closure,
)

# deterministic generators (seeded random.Random) for the bulk suites


def random_var(rng: random.Random, max_var: int = 4) -> Var:
    return Var(rng.randint(1, max_var))


def random_atom(rng: random.Random, max_var: int = 4) -> Formula:
    a, b = random_var(rng, max_var), random_var(rng, max_var)
    return Eq(a, b) if rng.random() < 0.5 else In(a, b)


def random_formula(rng: random.Random, depth: int = 6, max_var: int = 4) -> Formula:
    if depth <= 0 or rng.random() < 0.4:
        return random_atom(rng, max_var)
    r = rng.random()
    if r < 0.3:
        return Not(random_formula(rng, depth - 1, max_var))
    if r < 0.7:
        return Or(
            random_formula(rng, depth - 1, max_var), random_formula(rng, depth - 1, max_var)
        )
    return Forall(random_var(rng, max_var), random_formula(rng, depth - 1, max_var))


def random_sentence(rng: random.Random, depth: int = 4, max_var: int = 4) -> Formula:
    phi = random_formula(rng, depth, max_var)
    return universal_closure(phi, sorted(free_vars(phi), key=lambda v: v.index))


_TAUTOLOGY_TEMPLATES = (
    lambda p, q: Or(p, Not(p)),
    lambda p, q: implies(conj(p, q), p),
    lambda p, q: implies(p, Or(p, q)),
    lambda p, q: iff(p, p),
    lambda p, q: implies(Not(Not(p)), p),
    lambda p, q: implies(conj(p, q), conj(q, p)),
    lambda p, q: Or(implies(p, q), implies(q, p)),
)


def random_pool_formula(rng: random.Random) -> Formula:
    """Pool entries: plain random shapes mixed with instantiated tautology templates."""
    if rng.random() < 0.45:
        p, q = random_formula(rng, 2), random_formula(rng, 2)
        return rng.choice(_TAUTOLOGY_TEMPLATES)(p, q)
    return random_formula(rng, 4)


def random_axiom_instance(rng: random.Random, schema: int) -> Formula:
    """A closed instance of the given axiom schema (1..8)."""
    if schema == 1:
        p, q = random_formula(rng, 2), random_formula(rng, 2)
        matrix = rng.choice(_TAUTOLOGY_TEMPLATES)(p, q)
    elif schema == 2:
        psi = random_formula(rng, 3)
        x = next(Var(i) for i in range(1, 16) if Var(i) not in free_vars(psi))
        matrix = implies(psi, Forall(x, psi))
    elif schema == 3:
        psi, chi = random_formula(rng, 2), random_formula(rng, 2)
        x = random_var(rng)
        matrix = implies(
            Forall(x, implies(psi, chi)), implies(Forall(x, psi), Forall(x, chi))
        )
    elif schema == 4:
        psi = random_formula(rng, 3)
        x = random_var(rng)
        candidates = [Var(i) for i in range(1, 6)]
        rng.shuffle(candidates)
        y = next((c for c in candidates if is_free_for(c, x, psi)), x)
        matrix = implies(Forall(x, psi), substitute(psi, x, y))
    elif schema == 5:
        u = random_var(rng)
        matrix = Eq(u, u)
    elif schema == 6:
        u, w = random_var(rng), random_var(rng)
        matrix = iff(Eq(u, w), Eq(w, u))
    elif schema == 7:
        u, w, z = random_var(rng), random_var(rng), random_var(rng)
        matrix = implies(conj(Eq(u, w), Eq(w, z)), Eq(u, z))
    elif schema == 8:
        a, b, c, d = (random_var(rng) for _ in range(4))
        matrix = implies(conj(Eq(a, b), Eq(c, d)), iff(In(a, c), In(b, d)))
    else:
        raise ValueError(schema)
    return universal_closure(matrix, sorted(free_vars(matrix), key=lambda v: v.index))


def random_assignment(rng: random.Random, model: HFSet, vars_) -> dict[Var, HFSet]:
    elems = list(model.children)
    return {v: rng.choice(elems) for v in vars_}


# independent oracles


def is_transitive(model: HFSet) -> bool:
    """Every member of a member is a member."""
    return all(member(e, model) for m in model.children for e in m.children)


def paren_prefix_balances(text: str) -> list[int]:
    """Running open-minus-closed counts over the characters of a printed formula."""
    out, bal = [], 0
    for ch in text:
        if ch == "(":
            bal += 1
        elif ch == ")":
            bal -= 1
        out.append(bal)
    return out


# hypothesis strategies

variables = st.builds(Var, st.integers(1, 5))
atoms = st.one_of(st.builds(Eq, variables, variables), st.builds(In, variables, variables))
formulas = st.recursive(
    atoms,
    lambda f: st.one_of(st.builds(Not, f), st.builds(Or, f, f), st.builds(Forall, variables, f)),
    max_leaves=20,
)
hf_sets = st.integers(0, 400).map(hf_from_index)
models = st.integers(1, 24).map(hf_from_index)
