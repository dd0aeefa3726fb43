"""Truncated products of exact coefficient lists.

Long integer operands go through Kronecker substitution: every coefficient
becomes a fixed-width digit of one big integer, a single big-integer product
does all the work, and the digits of the result are read back.  GMP (through
gmpy2) makes that product quasi-linear; plain Python ints still work.
Rational operands are scaled to integers by a common denominator first.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _big = int

Number = int | Fraction

# below this operand length the quadratic loop is faster than packing
SCHOOLBOOK_CUTOFF = 24


def normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _max_bits(values: Sequence[int]) -> int:
    return max((abs(v).bit_length() for v in values), default=0)


def _digit_bytes(bits_a: int, bits_b: int, terms: int) -> int:
    bits = bits_a + bits_b + max(terms, 1).bit_length() + 2
    return (bits + 7) // 8


def pack(coeffs: Sequence[int], nbytes: int) -> int:
    """Signed integer sum(c_i * 2**(8 * nbytes * i)); needs |c_i| < 2**(8 * nbytes - 1)."""
    if not coeffs:
        return 0
    half = 1 << (8 * nbytes - 1)
    raw = b"".join((c + half).to_bytes(nbytes, "little") for c in coeffs)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * len(coeffs), "little")
    return int.from_bytes(raw, "little") - bias


def unpack(value: int, nbytes: int, length: int) -> list[int]:
    """First ``length`` signed digits of ``value`` in base 2**(8 * nbytes)."""
    if length <= 0:
        return []
    half = 1 << (8 * nbytes - 1)
    width = 8 * nbytes * length
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    shifted = (int(value) + bias) & ((1 << width) - 1)
    raw = shifted.to_bytes(nbytes * length, "little")
    return [int.from_bytes(raw[i:i + nbytes], "little") - half
            for i in range(0, nbytes * length, nbytes)]


def _schoolbook(a: Sequence, b: Sequence, n: int) -> list:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        for j, bj in enumerate(b[:n - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def mul_int(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Product of integer coefficient lists modulo x**n."""
    a = list(a[:n])
    b = list(b[:n])
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not a or not b:
        return [0] * n
    if min(len(a), len(b)) <= SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b, n)
    nbytes = _digit_bytes(_max_bits(a), _max_bits(b), min(len(a), len(b)))
    product = _big(pack(a, nbytes)) * _big(pack(b, nbytes))
    length = min(n, len(a) + len(b) - 1)
    return unpack(product, nbytes, length) + [0] * (n - length)


def _common_denominator(values: Sequence[Number]) -> int:
    den = 1
    for v in values:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = math.lcm(den, v.denominator)
    return den


def _scaled(values: Sequence[Number], den: int) -> list[int]:
    if den == 1:
        return [int(v) for v in values]
    return [int(v * den) for v in values]


def mul(a: Sequence[Number], b: Sequence[Number], n: int) -> list[Number]:
    """Exact product of coefficient lists modulo x**n."""
    da = _common_denominator(a)
    db = _common_denominator(b)
    out = mul_int(_scaled(a, da), _scaled(b, db), n)
    den = da * db
    if den == 1:
        return out
    return [normalize(Fraction(c, den)) for c in out]


def mul_rows(a: dict[int, list[Number]], b: dict[int, list[Number]], order: int) -> dict[int, list[Number]]:
    """Bivariate product; row i lists the y-coefficients of x**i, truncated at total degree ``order``.

    Each row is packed into one big integer, rows are multiplied pairwise as
    big integers, and each result row is unpacked once.
    """
    da = _common_denominator([c for row in a.values() for c in row])
    db = _common_denominator([c for row in b.values() for c in row])
    ia = {i: _scaled(row, da) for i, row in a.items() if any(row)}
    ib = {i: _scaled(row, db) for i, row in b.items() if any(row)}
    if not ia or not ib:
        return {}
    bits_a = max(_max_bits(r) for r in ia.values())
    bits_b = max(_max_bits(r) for r in ib.values())
    nbytes = _digit_bytes(bits_a, bits_b, order * order)
    pa = {i: _big(pack(r, nbytes)) for i, r in ia.items()}
    pb = {i: _big(pack(r, nbytes)) for i, r in ib.items()}
    acc: dict[int, object] = {}
    for i1, x1 in pa.items():
        for i2, x2 in pb.items():
            i = i1 + i2
            if i < order:
                acc[i] = acc[i] + x1 * x2 if i in acc else x1 * x2
    den = da * db
    out = {}
    for i, value in acc.items():
        row = unpack(value, nbytes, order - i)
        if den != 1:
            row = [normalize(Fraction(c, den)) for c in row]
        if any(row):
            out[i] = row
    return out
