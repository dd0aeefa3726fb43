"""Brute-force counts of identity words.

These are the oracles the generating-function code is checked against:
plain identity counts t(n), primitive counts, counts by letter content,
S^2-free counts with their border-shape classification, primitive a-words,
and reduced words over generators and inverses (cogrowth).
"""
from __future__ import annotations

import enum
import functools
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import kernels
from .group import (IDENTITY, ProjectiveMatrix, Word, check_word, is_identity, letter_counts,
                    letter_matrix, multiply)

DEFAULT_BUDGET = 24
# the reduced-word tree branches three ways
REDUCED_BUDGET = 16


class BudgetExceeded(RuntimeError):
    """Requested enumeration is larger than the configured budget."""


def _check_budget(n: int, budget: int) -> None:
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if n > budget:
        raise BudgetExceeded(f"length {n} exceeds enumeration budget {budget}")


@dataclass
class CountTable:
    """Exact counts keyed by (U count, S count), with per-length totals."""

    max_total: int
    by_pair: dict[tuple[int, int], int] = field(default_factory=dict)
    by_length: dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, pairs: dict[tuple[int, int], int], max_total: int) -> CountTable:
        by_pair = {k: v for k, v in pairs.items() if v and sum(k) <= max_total}
        by_length = {n: 0 for n in range(max_total + 1)}
        for (u, s), v in by_pair.items():
            by_length[u + s] += v
        return cls(max_total, by_pair, by_length)

    def __getitem__(self, key: tuple[int, int]) -> int:
        u, s = key
        if u < 0 or s < 0:
            return 0
        if u + s > self.max_total:
            raise KeyError(f"{key} beyond table range {self.max_total}")
        return self.by_pair.get(key, 0)

    def check(self) -> None:
        """Raise AssertionError if a table invariant is violated."""
        for (u, s), v in self.by_pair.items():
            assert v >= 0, (u, s, v)
            assert v == 0 or (u % 3 == 0 and s % 2 == 0), (u, s, v)
        for n, total in self.by_length.items():
            assert total == sum(v for (u, s), v in self.by_pair.items() if u + s == n)


# -- plain identity words ---------------------------------------------------


def _run_kernel(backend: str, max_len: int, prefix: str):
    return kernels.get(backend).enumerate_identity(max_len, prefix)


def _run_pda_kernel(backend: str, max_len: int, prefix: str):
    return kernels.get(backend).enumerate_pda(max_len, prefix)


def split_enumeration(task, backend: str, max_len: int, workers: int = 1,
                      split_depth: int = 8) -> list:
    """Run a kernel over all words of length <= max_len, optionally in parallel.

    With ``workers > 1`` the tree is cut at ``split_depth``: one job per prefix
    of that length plus one job for all shorter words.  Results are the
    kernel's per-job outputs, to be summed by the caller.
    """
    if workers <= 1 or max_len <= split_depth:
        return [task(backend, max_len, "")]
    prefixes = ["".join(p) for p in itertools.product("US", repeat=split_depth)]
    out = [task(backend, split_depth - 1, "")]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        out.extend(pool.map(task, itertools.repeat(backend), itertools.repeat(max_len),
                            prefixes, chunksize=max(1, len(prefixes) // (4 * workers))))
    return out


def _merge(results, max_len: int) -> tuple[dict[tuple[int, int], int], list[int]]:
    pairs: Counter = Counter()
    prim = [0] * (max_len + 1)
    for result in results:
        table, primitive = result[0], result[1]
        for u, row in enumerate(table):
            for s, v in enumerate(row):
                if v:
                    pairs[(u, s)] += v
        for n, v in enumerate(primitive):
            prim[n] += v
    return dict(pairs), prim


@functools.lru_cache(maxsize=16)
def _identity_data(max_len: int, backend: str | None, workers: int, split_depth: int):
    backend = backend or kernels.DEFAULT
    results = split_enumeration(_run_kernel, backend, max_len, workers, split_depth)
    pairs, prim = _merge(results, max_len)
    return tuple(sorted(pairs.items())), tuple(prim)


def count_bivariate(max_total: int, *, budget: int = DEFAULT_BUDGET, backend: str | None = None,
                    workers: int = 1, split_depth: int = 8) -> CountTable:
    """q(n, m): identity words with n letters U and m letters S, for n + m <= max_total."""
    _check_budget(max_total, budget)
    pairs, _ = _identity_data(max_total, backend, workers, split_depth)
    return CountTable.from_pairs(dict(pairs), max_total)


def count_identity(n: int, *, budget: int = DEFAULT_BUDGET, backend: str | None = None,
                   workers: int = 1, split_depth: int = 8) -> int:
    """t(n): number of length-n words equal to the identity."""
    return count_bivariate(n, budget=budget, backend=backend, workers=workers,
                           split_depth=split_depth).by_length[n]


def count_primitive(n: int, *, budget: int = DEFAULT_BUDGET, backend: str | None = None,
                    workers: int = 1, split_depth: int = 8) -> int:
    """Number of primitive identity words of length n (no proper nonempty identity prefix)."""
    _check_budget(n, budget)
    _, prim = _identity_data(n, backend, workers, split_depth)
    return prim[n]


def identity_sequence(max_len: int, **kwargs) -> list[int]:
    table = count_bivariate(max_len, **kwargs)
    return [table.by_length[n] for n in range(max_len + 1)]


def primitive_sequence(max_len: int, *, budget: int = DEFAULT_BUDGET, backend: str | None = None,
                       workers: int = 1, split_depth: int = 8) -> list[int]:
    _check_budget(max_len, budget)
    return list(_identity_data(max_len, backend, workers, split_depth)[1])


def pda_counts(max_len: int, *, budget: int = DEFAULT_BUDGET, backend: str | None = None,
               workers: int = 1, split_depth: int = 8) -> tuple[CountTable, list[int], int]:
    """Counts by PDA acceptance: (bivariate table, primitive counts, PDA/matrix mismatches)."""
    _check_budget(max_len, budget)
    backend = backend or kernels.DEFAULT
    results = split_enumeration(_run_pda_kernel, backend, max_len, workers, split_depth)
    pairs, prim = _merge(results, max_len)
    mismatches = sum(r[2] for r in results)
    return CountTable.from_pairs(pairs, max_len), prim, mismatches


def identity_words(n: int) -> Iterator[Word]:
    """Every identity word of length exactly n, in lexicographic order U < S."""
    def walk(prefix: str, m: ProjectiveMatrix) -> Iterator[Word]:
        if len(prefix) == n:
            if m.is_identity():
                yield prefix
            return
        for letter in "US":
            yield from walk(prefix + letter, multiply(m, letter_matrix(letter)))

    yield from walk("", IDENTITY)


# -- S^2-free words and their classification ----------------------------------


def iter_no_ss_identity_words(max_total: int) -> Iterator[Word]:
    """S^2-free identity words of length <= max_total (the empty word included)."""
    def walk(prefix: str, m: ProjectiveMatrix) -> Iterator[Word]:
        if m.is_identity():
            yield prefix
        if len(prefix) == max_total:
            return
        yield from walk(prefix + "U", multiply(m, letter_matrix("U")))
        if not prefix.endswith("S"):
            yield from walk(prefix + "S", multiply(m, letter_matrix("S")))

    yield from walk("", IDENTITY)


@functools.lru_cache(maxsize=8)
def _no_ss_words(max_total: int) -> tuple[Word, ...]:
    return tuple(iter_no_ss_identity_words(max_total))


def count_no_ss(max_total: int, *, budget: int = DEFAULT_BUDGET) -> CountTable:
    """q-hat(n, m): S^2-free identity words by letter content."""
    _check_budget(max_total, budget)
    return CountTable.from_pairs(Counter(map(letter_counts, _no_ss_words(max_total))), max_total)


class ClassLabel(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"
    G = "g"
    UNIT = "unit"
    NONE = "none"


CLASSES = (ClassLabel.A, ClassLabel.B, ClassLabel.C, ClassLabel.D,
           ClassLabel.E, ClassLabel.F, ClassLabel.G)


def _borders(w: Word) -> tuple[int, int, str]:
    core = w.lstrip("U")
    alpha = len(w) - len(core)
    stripped = core.rstrip("U")
    beta = len(core) - len(stripped)
    return alpha, beta, stripped


def is_no_ss(w: Word) -> bool:
    return "SS" not in w


def classify(w: Word) -> ClassLabel:
    """Border-shape class of an S^2-free identity word; NONE for anything else.

    With U^alpha and U^beta the maximal U-powers at the two ends: both zero
    gives a; both positive gives b, d, e as (alpha + beta) % 3 is 0, 2, 1;
    exactly one positive gives c, f, g as that exponent % 3 is 0, 1, 2.
    A nonempty pure U-power is b.
    """
    check_word(w)
    if not is_no_ss(w):
        return ClassLabel.NONE
    if not is_identity(w):
        return ClassLabel.NONE
    if not w:
        return ClassLabel.UNIT
    alpha, beta, core = _borders(w)
    if not core:
        return ClassLabel.B
    if alpha == 0 and beta == 0:
        return ClassLabel.A
    if alpha and beta:
        return (ClassLabel.B, ClassLabel.E, ClassLabel.D)[(alpha + beta) % 3]
    return (ClassLabel.C, ClassLabel.F, ClassLabel.G)[(alpha or beta) % 3]


def count_classes(max_total: int, *, budget: int = DEFAULT_BUDGET) -> dict[ClassLabel, CountTable]:
    """Per-class tables a(n, m) ... g(n, m), plus UNIT for the empty word."""
    _check_budget(max_total, budget)
    counters: dict[ClassLabel, Counter] = {label: Counter() for label in (*CLASSES, ClassLabel.UNIT)}
    for w in _no_ss_words(max_total):
        counters[classify(w)][letter_counts(w)] += 1
    return {label: CountTable.from_pairs(c, max_total) for label, c in counters.items()}


def _prefix_matrices(w: Word) -> list[ProjectiveMatrix]:
    out = [IDENTITY]
    for letter in w:
        out.append(multiply(out[-1], letter_matrix(letter)))
    return out


def is_composite_a_word(w: Word) -> bool:
    """True iff w = A1 U^k1 A2 ... U^k(s-1) As with s >= 2, every Ai an a-word, every ki >= 1.

    Dynamic programming over split points.  ``parts[j]`` is the largest part
    count (capped at 2) of a decomposition of ``w[:j]`` whose last part ends at
    j; a segment w[i:j] is an identity iff the prefix products at i and j agree.
    """
    n = len(w)
    prefix = _prefix_matrices(w)

    @functools.lru_cache(maxsize=None)
    def is_a_segment(i: int, j: int) -> bool:
        return (j - i >= 2 and w[i] == "S" and w[j - 1] == "S"
                and prefix[i] == prefix[j])

    s_positions = [i for i, letter in enumerate(w) if letter == "S"]
    parts = [0] * (n + 1)
    for j in (p + 1 for p in s_positions):
        if is_a_segment(0, j):
            parts[j] = 1
        for i in s_positions:
            if i >= j or i == 0 or w[i - 1] != "U" or not is_a_segment(i, j):
                continue
            k = len(w[:i].rstrip("U"))
            if k < i and parts[k]:
                parts[j] = max(parts[j], min(2, parts[k] + 1))
    return parts[n] == 2


def is_primitive_a_word(w: Word) -> bool:
    return classify(w) is ClassLabel.A and not is_composite_a_word(w)


def count_special(max_total: int, *, budget: int = DEFAULT_BUDGET) -> tuple[CountTable, CountTable, CountTable]:
    """Tables of the words U S..S U (exact borders), S..S U (exact border), and primitive a-words.

    Returned in that order.  They are the building blocks of the class counts.
    """
    _check_budget(max_total, budget)
    d_counts: Counter = Counter()
    f_counts: Counter = Counter()
    a_counts: Counter = Counter()
    for w in _no_ss_words(max_total):
        if not w:
            continue
        alpha, beta, core = _borders(w)
        if not core:
            continue
        key = letter_counts(w)
        if alpha == 1 and beta == 1:
            d_counts[key] += 1
        elif alpha == 0 and beta == 1:
            f_counts[key] += 1
        elif alpha == 0 and beta == 0 and not is_composite_a_word(w):
            a_counts[key] += 1
    return (CountTable.from_pairs(d_counts, max_total),
            CountTable.from_pairs(f_counts, max_total),
            CountTable.from_pairs(a_counts, max_total))


# -- cogrowth -----------------------------------------------------------------


def count_reduced_identity(n: int, *, budget: int = REDUCED_BUDGET, backend: str | None = None) -> int:
    """Reduced words of length n over {U, U^-1, S, S^-1} that equal the identity."""
    return reduced_identity_sequence(n, budget=budget, backend=backend)[n]


def reduced_identity_sequence(max_len: int, *, budget: int = REDUCED_BUDGET,
                              backend: str | None = None) -> list[int]:
    _check_budget(max_len, budget)
    return list(kernels.get(backend).count_reduced(max_len))
