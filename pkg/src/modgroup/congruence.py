"""Fermat-type congruences s(p) = 0 (mod p**power) on integer sequences."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

from .gf import assemble_T
from .series import UniSeries


class CongruenceProperty(enum.Enum):
    FERMAT = 1
    WIEFERICH = 2


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def primes_between(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


@dataclass
class CongruenceReport:
    prime_range: tuple[int, int]
    property: CongruenceProperty
    failures: list[tuple[int, int]] = field(default_factory=list)
    tested: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lo, hi = self.prime_range
        head = f"{self.property.name.lower()} check on primes {lo}..{hi}: {self.tested} tested"
        if self.passed:
            return head + ", no failures"
        shown = ", ".join(f"p={p} (residue {r})" for p, r in self.failures[:8])
        more = "" if len(self.failures) <= 8 else f", ... {len(self.failures) - 8} more"
        return head + f", {len(self.failures)} failures: {shown}{more}"


def fermat_check(coeffs: Sequence[int], lo: int, hi: int, power: int = 1) -> CongruenceReport:
    """Check that p**power divides coeffs[p] for every prime p in [lo, hi]."""
    if power not in (1, 2):
        raise ValueError("power must be 1 (Fermat) or 2 (Wieferich)")
    if lo > hi:
        raise ValueError(f"empty prime range [{lo}, {hi}]")
    if hi >= len(coeffs):
        raise ValueError(f"need coefficients up to index {hi}, have {len(coeffs) - 1}")
    report = CongruenceReport((lo, hi), CongruenceProperty(power))
    for p in primes_between(lo, hi):
        residue = int(coeffs[p]) % p ** power
        report.tested += 1
        if residue:
            report.failures.append((p, residue))
    return report


def _power_sequence(order: int) -> list[int]:
    closed = [0, 0] + [2 ** (n - 1) - 1 for n in range(2, order)]
    x = UniSeries.monomial(1, order)
    expanded = x * x * ((1 - 2 * x) * (1 - x)).invert()
    if list(expanded.coeffs) != closed[:order]:
        raise ArithmeticError("x^2/((1-2x)(1-x)) does not match 2^(n-1) - 1")
    return closed[:order]


def _central_binomial_sequence(order: int) -> list[int]:
    closed = [math.comb(2 * n, n) - 2 for n in range(order)]
    x = UniSeries.monomial(1, order)
    root = (1 - 4 * x).sqrt_unit()
    expanded = root.invert() - 2 * (1 - x).invert()
    if list(expanded.coeffs) != closed:
        raise ArithmeticError("1/sqrt(1-4x) - 2/(1-x) does not match binomial(2n,n) - 2")
    return closed


def builtin_sequences(order: int) -> dict[str, list[int]]:
    """The sequences 2^(n-1) - 1, binomial(2n, n) - 2 and t(n), each of length ``order``.

    The first two are built from closed forms and checked against series
    expansions of their generating functions.
    """
    if order < 1:
        raise ValueError("order must be positive")
    return {
        "P": _power_sequence(order),
        "J": _central_binomial_sequence(order),
        "T": assemble_T(order).integer_coeffs(),
    }
