import itertools

import pytest
from hypothesis import given, settings, strategies as st

from modgroup.group import (IDENTITY, S_MATRIX, U_MATRIX, ProjectiveMatrix, all_words, cayley_graph,
                            evaluate, graph_to_dot, is_identity, is_primitive_identity,
                            letter_matrix, multiply, normal_form, parse_word, rotations)

words = st.text(alphabet="US", max_size=40)


def test_letter_matrices():
    assert letter_matrix("U").entries() == (0, 1, -1, 1)
    assert letter_matrix("S").entries() == (0, 1, -1, 0)
    with pytest.raises(ValueError):
        letter_matrix("X")


def test_generator_orders():
    assert multiply(U_MATRIX, multiply(U_MATRIX, U_MATRIX)) == IDENTITY
    assert multiply(S_MATRIX, S_MATRIX) == IDENTITY
    assert multiply(IDENTITY, U_MATRIX) == U_MATRIX
    assert multiply(U_MATRIX, U_MATRIX) != IDENTITY


def test_sign_normalization():
    assert ProjectiveMatrix.of(-1, 0, 0, -1) == IDENTITY
    assert ProjectiveMatrix.of(0, -1, 1, 0).entries() == (0, 1, -1, 0)
    with pytest.raises(ValueError):
        ProjectiveMatrix.of(2, 0, 0, 1)


@pytest.mark.parametrize("word", ["USUUUSUU", "", "USUUUSUSUUUSSSU", "SS", "SUUUS"])
def test_identity_words(word):
    assert is_identity(word)
    assert evaluate(word) == IDENTITY


@pytest.mark.parametrize("word", ["U", "SU", "US", "UU"])
def test_non_identity_words(word):
    assert not is_identity(word)


def test_parse_word():
    assert parse_word("USU^3SU^2") == "USUUUSUU"
    assert parse_word("USU^3SUSU^3S^3U") == "USUUUSUSUUUSSSU"


def test_normal_form_examples():
    assert normal_form("SS") == ""
    assert normal_form("US") == "US"
    assert normal_form("USUUUSUU") == ""
    assert normal_form("UUSSU") == ""


def test_rotations():
    assert rotations("US") == ["US", "SU"]
    assert rotations("") == [""]
    assert rotations("UUU") == ["UUU"] * 3
    assert all(is_identity(r) for r in rotations("SUUUS"))


def test_primitive_examples():
    assert is_primitive_identity("SUUUS")
    assert not is_primitive_identity("SSSS")
    assert is_primitive_identity("UUU")
    assert not is_primitive_identity("")


def test_identity_iff_empty_normal_form_exhaustive():
    for n in range(0, 17):
        for w in all_words(n):
            assert is_identity(w) == (normal_form(w) == "")


@given(words)
def test_normal_form_is_reduced_and_equivalent(w):
    nf = normal_form(w)
    assert "SS" not in nf and "UUU" not in nf
    assert evaluate(nf) == evaluate(w)
    assert normal_form(nf) == nf


@given(words, words, words)
@settings(max_examples=300)
def test_multiply_associative(a, b, c):
    x, y, z = evaluate(a), evaluate(b), evaluate(c)
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    assert multiply(x, y) == evaluate(a + b)


@given(words)
def test_normalization_idempotent(w):
    m = evaluate(w)
    assert ProjectiveMatrix.of(*m.entries()) == m
    assert m.a * m.d - m.b * m.c == 1


@given(words)
def test_rotation_closure_and_primitive_implies_identity(w):
    if is_identity(w):
        assert all(is_identity(r) for r in rotations(w))
    if is_primitive_identity(w):
        assert is_identity(w)


def _ball_by_normal_forms(depth):
    """Independent count: distinct normal forms of all words of length <= depth."""
    return {normal_form(w) for n in range(depth + 1) for w in all_words(n)}


@pytest.mark.parametrize("depth", range(0, 8))
def test_cayley_ball_matches_normal_forms(depth):
    vertices, edges = cayley_graph(depth)
    assert len(vertices) == len(_ball_by_normal_forms(depth))
    assert len(set(vertices)) == len(vertices)
    for g, h, letter in edges:
        assert multiply(g, letter_matrix(letter)) == h


def test_cayley_small_depths():
    v, e = cayley_graph(0)
    assert v == [IDENTITY] and e == []
    v, e = cayley_graph(1)
    assert set(v) == {IDENTITY, U_MATRIX, S_MATRIX}
    labelled = {(g.label(), h.label(), letter) for g, h, letter in e}
    assert labelled == {("1,0,0,1", "0,1,-1,1", "U"), ("1,0,0,1", "0,1,-1,0", "S"),
                        ("0,1,-1,0", "1,0,0,1", "S")}
    assert len(cayley_graph(4)[0]) == 15  # frozen from BFS over normal forms
    with pytest.raises(ValueError):
        cayley_graph(9)


def test_dot_is_deterministic():
    text = graph_to_dot(*cayley_graph(3))
    assert text == graph_to_dot(*cayley_graph(3))
    assert text.startswith("digraph") and text.endswith("}\n")
