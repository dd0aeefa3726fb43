"""One test per acceptance criterion, at the stated tolerance.

A summary with one PASS/FAIL line per criterion is printed at the end of the
pytest run.
"""
import math
import time
from fractions import Fraction

import pytest

from modgroup import enumeration as en
from modgroup import gf
from modgroup.congruence import builtin_sequences, fermat_check
from modgroup.enumeration import ClassLabel
from modgroup.group import all_words, is_identity
from modgroup.pda import accepts

T_SEQUENCE = [1, 0, 1, 1, 1, 5, 2, 14, 13, 31, 66, 77, 240, 286, 722, 1226, 2141, 4760, 7268, 16473]
PRIMITIVE_SEQUENCE = [0, 0, 1, 1, 0, 3, 0, 5, 3, 7, 16, 12, 50, 44, 123, 195, 301, 718, 928, 2244]
COGROWTH = [1, 0, 2, 2, 6, 24, 44, 136, 298, 914, 2462, 6464]


@pytest.fixture(scope="module")
def T2001():
    return gf.assemble_T(2001)


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_ac1_brute_force_identity_counts():
    en._identity_data.cache_clear()
    counts, seconds = timed(lambda: en.identity_sequence(19, workers=1))
    print(f"t(0..19) by enumeration in {seconds:.3f}s")
    assert counts == T_SEQUENCE
    assert seconds <= 60


def test_ac2_primitive_counts():
    brute = en.primitive_sequence(19)
    assert brute == PRIMITIVE_SEQUENCE
    assert list(gf.primitive_series(gf.assemble_T(20)).coeffs) == brute


def test_ac3_pda_matches_matrices():
    def scan():
        mismatches = 0
        for n in range(17):
            for w in all_words(n):
                mismatches += accepts(w) != is_identity(w)
        return mismatches
    mismatches, seconds = timed(scan)
    print(f"{2 ** 17 - 1} words compared in {seconds:.1f}s")
    assert mismatches == 0
    assert seconds <= 300


def test_ac4_cubics_clean():
    assert gf.verify_cubic(gf.T_CUBIC, gf.assemble_T(300)) is None
    assert gf.verify_cubic(gf.Q_CUBIC, gf.assemble_Q(30)) is None
    assert gf.verify_cubic(gf.K_CUBIC, gf.solve_grammar(24)[2]) is None


def test_ac5_three_routes_agree():
    T = gf.assemble_T(100)
    Q = gf.assemble_Q(100)
    Qg = gf.solve_grammar(100)[3]
    assert Q.diagonal() == T
    assert Qg == Q
    assert Qg.diagonal() == T


def test_ac6_s2_insertion_identity():
    q = en.count_bivariate(18)
    qh = en.count_no_ss(18)
    checked = 0
    for n3 in range(0, 19, 3):
        for m2 in range(0, 19 - n3, 2):
            rhs = sum(qh[n3, m2 - 2 * k] * math.comb(n3 + k, k) for k in range(m2 // 2 + 1))
            assert q[n3, m2] == rhs
            checked += 1
    assert checked == 37


def test_ac7_classification_counts():
    c = en.count_classes(13)
    small = {label.value: c[label][6, 2] for label in en.CLASSES}
    assert {k: v for k, v in small.items() if v} == {"a": 1, "b": 2, "c": 2}
    assert sum(small.values()) == en.count_no_ss(13)[6, 2] == 5
    large = {label.value: c[label][9, 4] for label in en.CLASSES}
    assert sum(large.values()) == en.count_no_ss(13)[9, 4] == 20
    assert large == {"a": 7, "b": 5, "c": 3, "d": 1, "e": 0, "f": 2, "g": 2}


def test_ac8_lower_bound_series():
    lb = gf.lower_bound_series(15)
    assert list(lb.coeffs[:13]) == T_SEQUENCE[:13]
    assert lb[13] == 281 and T_SEQUENCE[13] == 286
    assert lb[14] == 722 == T_SEQUENCE[14]


def test_ac9_cogrowth():
    v = gf.cogrowth_series(12)
    assert list(v.coeffs) == COGROWTH
    brute, seconds = timed(lambda: en.reduced_identity_sequence(11))
    assert brute == COGROWTH
    assert seconds <= 120


def test_ac10_numeric_sums(T2001):
    half = Fraction(1, 2)
    partial = gf.evaluate_at(T2001, half, 2000)
    # t(n) <= M r^-n for any r below the radius of convergence
    radius_lo, _ = gf.isolate_root(gf.GROWTH_POLY, (Fraction(1, 2), Fraction(6, 10)), Fraction(1, 10**12))
    r = Fraction(5065, 10000)
    assert r < radius_lo
    bound = gf.tail_bound(gf.T_CUBIC, half, r, 2000)
    root_lo, root_hi = gf.sqrt_interval(17, 30)
    target_lo = Fraction(14, 13) + Fraction(6, 13) * root_lo
    target_hi = Fraction(14, 13) + Fraction(6, 13) * root_hi
    print(f"partial sum {float(partial):.12f}, tail bound {float(bound):.2e}")
    assert bound <= Fraction(1, 10**8)
    assert partial <= target_hi and target_lo <= partial + bound
    assert abs(partial - target_lo) <= Fraction(1, 10**8)

    quarter = gf.evaluate_at(T2001, Fraction(1, 4), 200) / 2
    assert math.floor(quarter * 10**10) == 5443390725


def test_ac11_congruences():
    t = builtin_sequences(500)["T"]
    assert fermat_check(t, 5, 499, power=1).passed
    j = builtin_sequences(102)["J"]
    assert fermat_check(j, 2, 101, power=2).passed


def test_ac12_growth_constant(T2001):
    lo, hi = gf.isolate_root(gf.GROWTH_POLY, (Fraction(4, 10), Fraction(6, 10)), Fraction(1, 10**15))
    inv_lo, inv_hi = 1 / hi, 1 / lo
    assert abs(inv_lo - Fraction(1971480194, 10**9)) < Fraction(1, 10**9)
    assert abs(inv_hi - Fraction(1971480194, 10**9)) < Fraction(1, 10**9)
    growth = math.exp(math.log(T2001[2000]) / 2000)
    assert abs(growth - 1.97148) < 0.01
    lo, hi = gf.isolate_root(gf.LOWER_BOUND_DENOMINATOR, (Fraction(5, 10), Fraction(6, 10)), Fraction(1, 10**15))
    assert abs(lo - Fraction(5394737936, 10**10)) < Fraction(1, 10**9)
    assert abs(hi - Fraction(5394737936, 10**10)) < Fraction(1, 10**9)


def test_ac13_performance():
    T, seconds = timed(lambda: gf.assemble_T(2001))
    print(f"assemble_T(2001) in {seconds:.2f}s")
    assert T.order == 2001 and T.is_integral()
    assert list(T.coeffs[:20]) == T_SEQUENCE
    assert seconds <= 120
