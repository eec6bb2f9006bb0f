import random

import pytest
from hypothesis import given, assume

from finlog.hfset import kpair, nat_to_hf
from finlog.syntax import (
    EQ,
    LPAREN,
    RPAREN,
    VAR,
    Eq,
    Forall,
    In,
    Not,
    Or,
    ParseError,
    Token,
    Var,
    all_vars,
    basic_subformulas,
    conj,
    count,
    exists,
    free_vars,
    iff,
    implies,
    is_free_for,
    is_p_sequence,
    is_sentence,
    occurrences,
    parse,
    parse_sugar,
    print_strict,
    strip_closure,
    subformulas,
    substitute,
    symbol_code,
    tokenize,
    universal_closure,
)
from helpers import formulas, paren_prefix_balances, random_formula

x1, x2, x3, x4 = Var(1), Var(2), Var(3), Var(4)


def test_var_index_starts_at_one():
    with pytest.raises(ValueError):
        Var(0)


def test_p_sequence():
    assert is_p_sequence("")
    assert is_p_sequence("(())")
    assert not is_p_sequence("()()")  # the inner ")(" breaks the recursion
    assert not is_p_sequence("(")
    assert is_p_sequence(tokenize("(())"))
    with pytest.raises(ValueError):
        is_p_sequence("()x")


def test_tokenize_atoms():
    kinds = [(t.kind, t.index) for t in tokenize("x1 = x2")]
    assert kinds == [(VAR, 1), (EQ, None), (VAR, 2)]


def test_tokenize_quantified():
    kinds = [t.kind for t in tokenize("forall x1 ( x1 = x1 )")]
    assert kinds == ["forall", VAR, LPAREN, VAR, EQ, VAR, RPAREN]


def test_tokenize_no_whitespace_needed_at_punctuation():
    assert [t.kind for t in tokenize("not(x1=x1)")] == [
        "not",
        LPAREN,
        VAR,
        EQ,
        VAR,
        RPAREN,
    ]


def test_tokenize_unicode_aliases():
    assert parse(tokenize("∀x1(x1∈x2)")) == Forall(x1, In(x1, x2))
    assert parse(tokenize("¬(x1=x1)")) == Not(Eq(x1, x1))


def test_tokenize_errors():
    for bad in ["x0", "x", "x01", "y1", "1", "@", "forallx1"]:
        with pytest.raises(ParseError):
            tokenize(bad)
    try:
        tokenize("x1 = ?")
    except ParseError as exc:
        assert exc.pos == 5


def test_count():
    assert count(tokenize("not ( x1 = x1 )")) == 0
    assert count(tokenize("((")) == 2
    assert count([]) == 0


def test_parse_atomic():
    assert parse(tokenize("x1 in x2")) == In(x1, x2)
    assert parse(tokenize("x1 = x2")) == Eq(x1, x2)


def test_parse_disjunction():
    got = parse(tokenize("(x1=x1) or (not(x2=x2))"))
    assert got == Or(Eq(x1, x1), Not(Eq(x2, x2)))


def test_parse_requires_parenthesized_disjuncts():
    # as written this reads as a quantified formula with trailing tokens
    with pytest.raises(ParseError):
        parse(tokenize("forall x1 (x1 = x2) or (x3 = x2)"))
    assert parse(tokenize("(forall x1 (x1=x2)) or (x3=x2)")) == Or(
        Forall(x1, Eq(x1, x2)), Eq(x3, x2)
    )


def test_parse_errors_carry_position_and_expectations():
    with pytest.raises(ParseError) as err:
        parse(tokenize("not x1"))
    assert err.value.pos == 4
    assert LPAREN in err.value.expected
    with pytest.raises(ParseError):
        parse(tokenize("x1 ="))
    with pytest.raises(ParseError):
        parse(tokenize(""))


def test_strict_rejects_sugar():
    with pytest.raises(ParseError):
        parse(tokenize("(x1=x1) and (x2=x2)"))
    with pytest.raises(ParseError):
        parse(tokenize("exists x1 (x1=x1)"))


def test_print_strict_examples():
    assert print_strict(Eq(x1, x1)) == "x1 = x1"
    assert print_strict(Not(Eq(x1, x2))) == "not ( x1 = x2 )"
    assert print_strict(Forall(x1, Or(Eq(x1, x1), In(x1, x2)))) == (
        "forall x1 ( ( x1 = x1 ) or ( x1 in x2 ) )"
    )


def test_sugar_expansions():
    assert parse_sugar("(x1=x1) and (x2=x2)") == Not(Or(Not(Eq(x1, x1)), Not(Eq(x2, x2))))
    assert parse_sugar("exists x1 (x1=x2)") == Not(Forall(x1, Not(Eq(x1, x2))))
    assert parse_sugar("(x1=x1) implies (x1=x1)") == Or(Not(Eq(x1, x1)), Eq(x1, x1))
    assert parse_sugar("(x1=x1) iff (x2=x2)") == conj(
        implies(Eq(x1, x1), Eq(x2, x2)), implies(Eq(x2, x2), Eq(x1, x1))
    )
    # the helper constructors agree with the parser
    assert parse_sugar("(x1=x1) and (x2=x2)") == conj(Eq(x1, x1), Eq(x2, x2))
    assert parse_sugar("exists x1 (x1=x2)") == exists(x1, Eq(x1, x2))


def test_free_vars_examples():
    phi = parse_sugar("forall x1 ( ( x1 in x2 ) or ( x2 in x1 ) )")
    assert free_vars(phi) == {x2}
    psi = parse_sugar("( forall x1 ( x1 = x2 ) ) or ( x3 = x2 )")
    assert free_vars(psi) == {x2, x3}
    assert free_vars(Forall(x1, Eq(x1, x1))) == set()


def test_is_sentence():
    assert is_sentence(Forall(x1, Eq(x1, x1)))
    assert not is_sentence(Eq(x1, x1))


def test_substitute_examples():
    phi = parse_sugar("forall x1 ( ( x1 in x2 ) or ( x2 in x1 ) )")
    assert substitute(phi, x2, x3) == parse_sugar("forall x1 ( ( x1 in x3 ) or ( x3 in x1 ) )")
    assert substitute(phi, x1, x3) == phi  # x1 has no free occurrence
    assert substitute(Eq(x1, x1), x1, x1) == Eq(x1, x1)


def test_is_free_for_examples():
    # no free occurrence of x3 sits under a quantifier on x1
    phi = Or(Forall(x1, Eq(x1, x2)), In(x3, x1))
    assert is_free_for(x1, x3, phi)
    # substituting into the scope of the quantifier that would capture
    psi = Forall(x1, In(x1, x2))
    assert not is_free_for(x1, x2, psi)
    assert is_free_for(x1, x1, psi)  # identity substitution never captures
    assert is_free_for(x2, x4, psi)  # vacuous: x4 does not occur free


def test_universal_closure():
    assert universal_closure(Eq(x1, x1), [x1]) == Forall(x1, Eq(x1, x1))
    phi = Eq(x1, x2)
    assert universal_closure(phi, []) == phi
    assert universal_closure(phi, [x1, x2]) == Forall(x1, Forall(x2, phi))


def test_strip_closure():
    spine, matrix = strip_closure(Forall(x1, Forall(x2, In(x1, x2))))
    assert spine == [x1, x2]
    assert matrix == In(x1, x2)
    assert strip_closure(Eq(x1, x1)) == ([], Eq(x1, x1))
    # round trip
    phi = Forall(x3, Forall(x1, Or(Eq(x1, x3), In(x1, x3))))
    spine_, matrix_ = strip_closure(phi)
    assert universal_closure(matrix_, spine_) == phi


def test_subformulas():
    phi = Or(Eq(x1, x1), Not(Eq(x1, x1)))
    assert subformulas(phi) == [phi, Eq(x1, x1), Not(Eq(x1, x1)), Eq(x1, x1)]
    assert len(subformulas(Not(Eq(x1, x2)))) == 2


def test_basic_subformulas():
    phi = Or(Eq(x1, x1), Not(Eq(x1, x1)))
    assert basic_subformulas(phi) == {Eq(x1, x1)}
    quantified = Forall(x1, Eq(x1, x1))
    assert basic_subformulas(quantified) == {quantified}  # the whole thing, not the body


def test_symbol_codes():
    assert symbol_code(Token(VAR, index=3)) == kpair(nat_to_hf(1), nat_to_hf(3))
    assert symbol_code(Token(EQ)) == kpair(nat_to_hf(2), nat_to_hf(1))
    toks = [Token(VAR, index=i) for i in range(1, 17)]
    toks += [Token(k) for k in (EQ, "in", "not", "or", RPAREN, LPAREN, "forall")]
    codes = [symbol_code(t) for t in toks]
    assert len(set(codes)) == len(codes)
    with pytest.raises(ValueError):
        symbol_code(Token("and"))


def test_occurrences_partition():
    rng = random.Random(11)
    for _ in range(200):
        phi = random_formula(rng, 5)
        occ = occurrences(phi)
        var_tokens = [t for t in tokenize(print_strict(phi)) if t.kind == VAR]
        assert [v.index for v, _ in occ] == [t.index for t in var_tokens]
        assert {v for v, bound in occ if not bound} == free_vars(phi)
        assert {v for v, _ in occ} == all_vars(phi)


@given(formulas)
def test_count_lemma(phi):
    toks = tokenize(print_strict(phi))
    bal = 0
    for t in toks:
        bal += (t.kind == LPAREN) - (t.kind == RPAREN)
        assert bal >= 0
    assert bal == 0
    assert count(toks) == 0
    # character-level oracle agrees
    balances = paren_prefix_balances(print_strict(phi))
    assert all(b >= 0 for b in balances)
    assert (balances or [0])[-1] == 0


@given(formulas)
def test_round_trip(phi):
    text = print_strict(phi)
    assert parse(tokenize(text)) == phi
    assert print_strict(parse(tokenize(text))) == text
    assert parse_sugar(text) == phi  # sugar grammar is a superset


@given(formulas)
def test_closure_is_sentence(phi):
    closed = universal_closure(phi, sorted(free_vars(phi), key=lambda v: v.index))
    assert is_sentence(closed)


@given(formulas)
def test_substitution_free_variable_interaction(phi):
    rng_vars = sorted(all_vars(phi), key=lambda v: v.index) or [x1]
    x = rng_vars[0]
    y = Var(x.index + 1)
    assume(is_free_for(y, x, phi))
    out = substitute(phi, x, y)
    if x in free_vars(phi):
        assert free_vars(out) == (free_vars(phi) - {x}) | {y}
    else:
        assert out == phi
