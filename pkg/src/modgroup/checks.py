"""Verification suites that compare independent routes to the same numbers."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import enumeration as en
from . import gf
from .congruence import builtin_sequences, fermat_check
from .series import UniSeries


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.seconds:.2f}s){extra}"


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, ok, detail, time.perf_counter() - start)


def _first_difference(a, b) -> str:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return f"first difference at {i}: {x} != {y}"
    if len(a) != len(b):
        return f"lengths differ: {len(a)} != {len(b)}"
    return "equal"


def _table_vs_series(table: en.CountTable, s, max_total: int) -> tuple[bool, str]:
    for n in range(max_total + 1):
        for m in range(max_total + 1 - n):
            if table[n, m] != s[n, m]:
                return False, f"({n},{m}): counted {table[n, m]}, series {s[n, m]}"
    return True, f"all (n,m) with n+m <= {max_total}"


# -- suites ---------------------------------------------------------------------------


def oracle_checks(max_len: int = 14, workers: int = 1) -> Iterator[Check]:
    """Brute force, PDA and series agree."""
    T = gf.assemble_T(max_len + 1)

    def t_counts():
        brute = en.identity_sequence(max_len, workers=workers)
        return brute == list(T.coeffs), _first_difference(brute, T.coeffs)

    def pda_agreement():
        table, _, mismatches = en.pda_counts(max_len, workers=workers)
        matrix = en.count_bivariate(max_len, workers=workers)
        if mismatches:
            return False, f"{mismatches} words where PDA and matrix disagree"
        return table.by_pair == matrix.by_pair, f"all words of length <= {max_len}"

    def primitive_counts():
        brute = en.primitive_sequence(max_len, workers=workers)
        series = list(gf.primitive_series(T).coeffs)
        return brute == series, _first_difference(brute, series)

    def bivariate_counts():
        return _table_vs_series(en.count_bivariate(max_len, workers=workers),
                                gf.assemble_Q(max_len + 1), max_len)

    def cogrowth_counts():
        n = min(max_len, 11)
        brute = en.reduced_identity_sequence(n)
        series = list(gf.cogrowth_series(n + 1).coeffs)
        return brute == series, _first_difference(brute, series)

    yield _run("identity counts t(n) by enumeration = series T", t_counts)
    yield _run("pushdown automaton accepts exactly the identity words", pda_agreement)
    yield _run("primitive counts by enumeration = series 1 - 1/T", primitive_counts)
    yield _run("bivariate counts q(n,m) by enumeration = series Q", bivariate_counts)
    yield _run("reduced identity words by enumeration = cogrowth series", cogrowth_counts)


def cubic_checks(order: int = 300, bi_order: int = 30, grammar_order: int = 24) -> Iterator[Check]:
    """Cubic relations hold exactly, and the routes to T and Q coincide."""

    def clean(rel, s):
        def fn():
            degree = gf.verify_cubic(rel, s())
            return degree is None, "clean" if degree is None else f"residual at degree {degree}"
        return fn

    yield _run(f"{gf.T_CUBIC.name} at order {order}", clean(gf.T_CUBIC, lambda: gf.assemble_T(order)))
    yield _run(f"{gf.Q_CUBIC.name} at order {bi_order}", clean(gf.Q_CUBIC, lambda: gf.assemble_Q(bi_order)))
    yield _run(f"{gf.K_CUBIC.name} at order {grammar_order}",
               clean(gf.K_CUBIC, lambda: gf.solve_grammar(grammar_order)[2]))

    def routes_agree():
        n = min(bi_order, grammar_order)
        T = gf.assemble_T(n)
        Q = gf.assemble_Q(n)
        Qg = gf.solve_grammar(n)[3]
        if Q != Qg:
            return False, "grammar Q differs from class-series Q"
        diag = Q.diagonal()
        return diag == T, _first_difference(diag.coeffs, T.coeffs)

    yield _run("T from Z, diagonal of Q, and grammar Q agree", routes_agree)


def congruence_checks(pmax: int = 499) -> Iterator[Check]:
    seqs = builtin_sequences(pmax + 1)

    def run(key, lo, power):
        def fn():
            report = fermat_check(seqs[key], lo, pmax, power)
            return report.passed, report.summary()
        return fn

    yield _run("t(p) = 0 mod p for primes p > 3", run("T", 5, 1))
    yield _run("2^(p-1) - 1 = 0 mod p for odd primes", run("P", 3, 1))
    yield _run("binomial(2p,p) - 2 = 0 mod p^2", run("J", 2, 2))


def _recurrence_mismatch(max_total: int) -> str | None:
    """Class recurrences in terms of a, the exact-border tables and each other."""
    c = en.count_classes(max_total)
    d_ex, f_ex, _ = en.count_special(max_total)
    a, b, cc, d, e, f, g = (c[label] for label in en.CLASSES)
    for n3 in range(0, max_total + 1, 3):
        for m2 in range(0, max_total + 1 - n3, 2):
            steps = range(1, n3 // 3 + 1)
            # grading runs in steps of 3 in the U count
            want = {
                "a": b[n3, m2 - 2] + d[n3, m2 - 2] + e[n3, m2 - 2] if m2 >= 2 else a[n3, m2],
                "b": (sum((3 * k - 1) * a[n3 - 3 * k, m2] for k in steps) if m2 >= 1
                      else int(n3 > 0)),
                "c": 2 * sum(a[n3 - 3 * k, m2] for k in steps),
                "d": sum((3 * k + 1) * d_ex[n3 - 3 * k, m2] for k in range(0, n3 // 3 + 1)),
                "e": sum(3 * k * f_ex[n3 - 3 * k, m2] for k in steps),
                "f": 2 * sum(f_ex[n3 - 3 * k, m2] for k in range(0, n3 // 3 + 1)),
                "g": 2 * sum(d_ex[n3 - 3 * k, m2] for k in range(0, n3 // 3 + 1)),
            }
            have = {"a": a, "b": b, "c": cc, "d": d, "e": e, "f": f, "g": g}
            for key, value in want.items():
                if have[key][n3, m2] != value:
                    return f"{key}({n3},{m2}) = {have[key][n3, m2]}, recurrence gives {value}"
    return None


def property_checks(max_total: int = 18) -> Iterator[Check]:
    """Structural identities between counts and series."""

    def s2_insertion():
        q = en.count_bivariate(max_total)
        qh = en.count_no_ss(max_total)
        for n3 in range(0, max_total + 1, 3):
            for m2 in range(0, max_total + 1 - n3, 2):
                rhs = sum(qh[n3, m2 - 2 * k] * math.comb(n3 + k, k) for k in range(m2 // 2 + 1))
                if q[n3, m2] != rhs:
                    return False, f"q({n3},{m2}) = {q[n3, m2]}, insertion sum gives {rhs}"
        return True, f"all (3n,2m) with 3n+2m <= {max_total}"

    def class_recurrences():
        bad = _recurrence_mismatch(max_total)
        return bad is None, bad or f"total degree <= {max_total}"

    def class_series_match():
        cs = gf.class_series(max_total + 1)
        counts = en.count_classes(max_total)
        for label in en.CLASSES:
            ok, detail = _table_vs_series(counts[label], cs.classes[label.value], max_total)
            if not ok:
                return False, f"class {label.value} {detail}"
        d_ex, f_ex, a_prim = en.count_special(max_total)
        for name, table, s in (("W", a_prim, cs.W), ("border d", d_ex, cs.D_border),
                               ("border f", f_ex, cs.F_border)):
            ok, detail = _table_vs_series(table, s, max_total)
            if not ok:
                return False, f"{name} {detail}"
        ok, detail = _table_vs_series(en.count_no_ss(max_total), cs.Q_hat, max_total)
        return ok, ("S^2-free " + detail) if not ok else detail

    def z_methods():
        return gf.solve_Z(200) == gf.solve_Z(200, "naive"), "order 200"

    def z_from_w():
        order = 60
        one = gf.BiSeries.one(order)
        y2 = gf.BiSeries.monomial(0, 2, order)
        sub = gf.solve_W(order).substitute_x(1, one - y2).diagonal()
        return sub == gf.solve_Z(order), f"order {order}"

    def w_methods():
        return gf.solve_W(30) == gf.solve_W_naive(30), "order 30"

    def primitive_roundtrip():
        T = gf.assemble_T(300)
        back = (1 - gf.primitive_series(T)).invert()
        return back == T, "order 300"

    yield _run("inserting S^2 blocks turns q-hat into q", s2_insertion)
    yield _run("class recurrences on S^2-free counts", class_recurrences)
    yield _run("class series from W match class counts", class_series_match)
    yield _run("Newton and naive iterations for Z agree", z_methods)
    yield _run("Z equals W with x -> x/(1-x^2), y -> x", z_from_w)
    yield _run("Newton and naive iterations for W agree", w_methods)
    yield _run("1/(1 - primitive series) = T", primitive_roundtrip)


SUITES = {
    "oracles": oracle_checks,
    "cubic": cubic_checks,
    "congruence": congruence_checks,
    "props": property_checks,
}
