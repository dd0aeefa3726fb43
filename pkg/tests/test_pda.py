import pytest
from hypothesis import given, strategies as st

from modgroup.group import all_words, is_identity, normal_form
from modgroup.pda import (INITIAL, PdaConfiguration, StackSymbol as Sym, accepts, grammar, run,
                          stack_to_normal_form, step)


def cfg(*symbols):
    return PdaConfiguration(tuple(Sym(s) for s in symbols))


def test_transitions_examples():
    assert step(INITIAL, "U") == cfg(1, 0)
    assert step(cfg(2, 0), "U") == cfg(0)
    assert step(cfg(3, 0), "S") == cfg(0)
    assert step(cfg(1, 0), "U") == cfg(2, 0)
    assert step(cfg(3, 0), "U") == cfg(1, 3, 0)
    for top in (0, 1, 2):
        start = cfg(top, 0) if top else INITIAL
        assert step(start, "S").stack[0] == Sym.S
    with pytest.raises(ValueError):
        step(INITIAL, "X")


def test_configuration_invariant():
    with pytest.raises(ValueError):
        PdaConfiguration((Sym.U,))
    with pytest.raises(ValueError):
        PdaConfiguration((Sym.BOTTOM, Sym.U, Sym.BOTTOM))


@pytest.mark.parametrize("word,expected", [("SS", True), ("USUUUSUU", True), ("SU", False), ("", True)])
def test_accepts_examples(word, expected):
    assert accepts(word) is expected


def test_stack_decoding():
    assert stack_to_normal_form(INITIAL) == ""
    assert stack_to_normal_form(cfg(1, 3, 0)) == "SU"
    assert stack_to_normal_form(run("SU")) == "SU"
    assert stack_to_normal_form(cfg(2, 0)) == "UU"
    assert run("UU") == cfg(2, 0)


def test_accepts_matches_matrices_exhaustively():
    for n in range(0, 17):
        for w in all_words(n):
            assert accepts(w) == is_identity(w), w


def test_prefix_normal_form_and_stack_shape():
    for n in range(0, 13):
        for w in all_words(n):
            c = INITIAL
            for i, letter in enumerate(w):
                c = step(c, letter)
                assert stack_to_normal_form(c) == normal_form(w[:i + 1])
                body = c.stack[:-1]
                for upper, lower in zip(body, body[1:]):
                    # no SS, and U-runs are held in one symbol
                    assert not (upper == Sym.S and lower == Sym.S)
                    assert not (upper != Sym.S and lower != Sym.S)


@given(st.text(alphabet="US", max_size=60))
def test_run_agrees_with_step(w):
    c = INITIAL
    for letter in w:
        c = step(c, letter)
    assert run(w) == c
    assert accepts(w) == (c == INITIAL)


def test_grammar_productions():
    prods = grammar()
    assert len(prods) == 9
    assert str(prods[2]) == "N2 -> U"
    assert str(prods[8]) == "N0 -> $"
    assert str(prods[5]) == "N1 -> S N3 N1"
    assert {p.head for p in prods} == {0, 1, 2, 3}
