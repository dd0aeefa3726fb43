import math

import pytest
from hypothesis import given, settings, strategies as st

from modgroup import enumeration as en
from modgroup.enumeration import ClassLabel
from modgroup.group import all_words, is_identity, is_primitive_identity, rotations

T_SEQUENCE = [1, 0, 1, 1, 1, 5, 2, 14, 13, 31, 66, 77, 240, 286, 722, 1226, 2141, 4760, 7268, 16473]
PRIMITIVE_SEQUENCE = [0, 0, 1, 1, 0, 3, 0, 5, 3, 7, 16, 12, 50, 44, 123, 195, 301, 718, 928, 2244]
COGROWTH = [1, 0, 2, 2, 6, 24, 44, 136, 298, 914, 2462, 6464]


def test_identity_counts():
    assert en.count_identity(7) == 14
    assert en.count_identity(1) == 0
    assert en.count_identity(19) == 16473
    assert en.identity_sequence(19) == T_SEQUENCE


def test_primitive_counts():
    assert en.count_primitive(5) == 3
    assert en.count_primitive(8) == 3
    assert en.count_primitive(4) == 0
    assert en.primitive_sequence(19) == PRIMITIVE_SEQUENCE


def test_budget():
    with pytest.raises(en.BudgetExceeded):
        en.count_identity(25)
    assert en.count_identity(4, budget=4) == 1
    with pytest.raises(en.BudgetExceeded):
        en.count_reduced_identity(17)


def test_bivariate_table():
    q = en.count_bivariate(16)
    q.check()
    assert q[3, 2] == 5
    assert q[0, 4] == 1
    assert q[1, 1] == 0
    assert q[-1, 2] == 0
    for n in range(17):
        assert sum(q[u, n - u] for u in range(n + 1)) == en.count_identity(n)
    for (u, s), v in q.by_pair.items():
        assert v > 0 and u % 3 == 0 and s % 2 == 0


def test_no_ss_counts():
    qh = en.count_no_ss(13)
    assert qh[6, 2] == 5
    assert qh[9, 4] == 20
    assert qh[0, 2] == 0


def test_classify_examples():
    assert en.classify("SUUUUUUS") is ClassLabel.A
    assert en.classify("USUUUSUSUUUSU") is ClassLabel.D
    assert en.classify("SUUUSUSUUUSUU") is ClassLabel.G
    assert en.classify("") is ClassLabel.UNIT
    assert en.classify("UUU") is ClassLabel.B
    assert en.classify("SS") is ClassLabel.NONE
    assert en.classify("US") is ClassLabel.NONE


def test_class_counts_small():
    c = en.count_classes(13)
    at_6_2 = {label.value: c[label][6, 2] for label in en.CLASSES}
    assert at_6_2 == {"a": 1, "b": 2, "c": 2, "d": 0, "e": 0, "f": 0, "g": 0}
    # brute force at (9,4); the classes b and c hold four words each
    at_9_4 = {label.value: c[label][9, 4] for label in en.CLASSES}
    assert at_9_4 == {"a": 7, "b": 4, "c": 4, "d": 1, "e": 0, "f": 2, "g": 2}


def test_word_listed_under_b_is_class_c():
    w = "SUSUUUSUUSUUU"
    assert is_identity(w) and "SS" not in w
    assert en.classify(w) is ClassLabel.C


def test_partition_is_exhaustive():
    tables = en.count_classes(18)
    qh = en.count_no_ss(18)
    for key, total in qh.by_pair.items():
        parts = sum(tables[label][key] for label in (*en.CLASSES, ClassLabel.UNIT))
        assert parts == total
    words = list(en.iter_no_ss_identity_words(18))
    assert sum(qh.by_pair.values()) == len(words)
    assert all(en.classify(w) not in (ClassLabel.NONE,) for w in words)


def test_special_counts():
    d_ex, f_ex, a_prim = en.count_special(13)
    assert a_prim[3, 2] == 1
    assert a_prim[9, 4] == 6
    assert d_ex[9, 4] == 1
    assert not en.is_primitive_a_word("SUUUSUUUSUUUS")
    assert en.is_composite_a_word("SUUUSUUUSUUUS")
    assert en.is_primitive_a_word("SUUUS")


def test_a_words_split_into_primitive_and_composite():
    c = en.count_classes(13)
    _, _, a_prim = en.count_special(13)
    composite = [w for w in en.iter_no_ss_identity_words(13)
                 if en.classify(w) is ClassLabel.A and w.count("U") == 9 and en.is_composite_a_word(w)]
    assert c[ClassLabel.A][9, 4] == a_prim[9, 4] + len(composite) == 7
    assert composite == ["SUUUSUUUSUUUS"]


def test_s2_insertion_identity():
    q = en.count_bivariate(18)
    qh = en.count_no_ss(18)
    for n3 in range(0, 19, 3):
        for m2 in range(0, 19 - n3, 2):
            rhs = sum(qh[n3, m2 - 2 * k] * math.comb(n3 + k, k) for k in range(m2 // 2 + 1))
            assert q[n3, m2] == rhs


def test_class_recurrences():
    from modgroup.checks import _recurrence_mismatch
    assert _recurrence_mismatch(18) is None


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_rotation_orbits_have_size_p(p):
    words = list(en.identity_words(p))
    assert len(words) == en.count_identity(p)
    assert len(words) % p == 0
    for w in words:
        assert len(set(rotations(w))) == p


def test_cogrowth_counts():
    assert en.count_reduced_identity(4) == 6
    assert en.count_reduced_identity(2) == 2
    assert en.reduced_identity_sequence(11) == COGROWTH


def _reduced_identity_brute(n):
    """Independent of the kernels: evaluate every reduced word with 2x2 integer matrices."""
    import itertools
    mats = {"u": (0, 1, -1, 1), "U": (1, -1, 1, 0), "s": (0, 1, -1, 0), "S": (0, -1, 1, 0)}
    inverse = {"u": "U", "U": "u", "s": "S", "S": "s"}
    count = 0
    for w in itertools.product("uUsS", repeat=n):
        if any(inverse[x] == y for x, y in zip(w, w[1:])):
            continue
        a, b, c, d = 1, 0, 0, 1
        for letter in w:
            e, f, g, h = mats[letter]
            a, b, c, d = a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
        count += b == 0 and c == 0
    return count


def test_cogrowth_kernel_against_matrices():
    assert [_reduced_identity_brute(n) for n in range(8)] == COGROWTH[:8]


def test_parallel_split_matches_serial():
    serial = en.count_bivariate(16)
    parallel = en.count_bivariate(16, workers=2, split_depth=4)
    assert serial.by_pair == parallel.by_pair
    assert en.primitive_sequence(16, workers=2, split_depth=4) == PRIMITIVE_SEQUENCE[:17]


@given(st.integers(min_value=0, max_value=12))
@settings(max_examples=13, deadline=None)
def test_counts_match_direct_evaluation(n):
    words = list(all_words(n))
    assert en.count_identity(n) == sum(map(is_identity, words))
    assert en.count_primitive(n) == sum(map(is_primitive_identity, words))
