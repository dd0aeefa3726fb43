"""Truncated power series with exact coefficients.

:class:`UniSeries` is dense in x modulo ``x**order``.  :class:`BiSeries` is
graded by total degree: it is exact modulo the monomials x**i * y**j with
``i + j >= order``.  Coefficients are Python ints where integral and
:class:`fractions.Fraction` otherwise.  Binary operations on operands of
different order truncate to the smaller one.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _convolve
from ._convolve import Number, normalize


class SeriesDomainError(ValueError):
    """Operation undefined for the given series (e.g. inverting a zero constant term)."""


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction))


class UniSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        coeffs = [normalize(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[:order]
        coeffs.extend([0] * (order - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, coeffs: list, order: int) -> UniSeries:
        out = object.__new__(cls)
        out.order = order
        out.coeffs = tuple(coeffs)
        return out

    @classmethod
    def zero(cls, order: int) -> UniSeries:
        return cls._raw([0] * order, order)

    @classmethod
    def one(cls, order: int) -> UniSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Number = 1) -> UniSeries:
        coeffs = [0] * order
        if k < order:
            coeffs[k] = normalize(c)
        return cls._raw(coeffs, order)

    @classmethod
    def polynomial(cls, coeffs: Mapping[int, Number] | Sequence[Number], order: int) -> UniSeries:
        """From ascending coefficients or a {degree: coefficient} mapping."""
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        out = [0] * order
        for k, c in items:
            if k < order:
                out[k] += c
        return cls(out, order)

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self.coeffs[:8]))
        more = ", ..." if self.order > 8 else ""
        return f"UniSeries([{shown}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, UniSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __len__(self) -> int:
        return self.order

    def __getitem__(self, n: int) -> Number:
        return self.coefficient(n)

    def coefficient(self, n: int) -> Number:
        if not 0 <= n < self.order:
            raise SeriesDomainError(f"index {n} outside series of order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> UniSeries:
        if order > self.order:
            raise SeriesDomainError(f"cannot extend order {self.order} to {order}")
        return UniSeries._raw(list(self.coeffs[:order]), order)

    def _coerce(self, other) -> tuple[UniSeries, UniSeries]:
        if _is_scalar(other):
            other = UniSeries.monomial(0, self.order, other)
        if not isinstance(other, UniSeries):
            raise TypeError(f"cannot combine UniSeries with {type(other).__name__}")
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other) -> UniSeries:
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return UniSeries._raw([normalize(x + y) for x, y in zip(a.coeffs, b.coeffs)], a.order)

    __radd__ = __add__

    def __neg__(self) -> UniSeries:
        return UniSeries._raw([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> UniSeries:
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return UniSeries._raw([normalize(x - y) for x, y in zip(a.coeffs, b.coeffs)], a.order)

    def __rsub__(self, other) -> UniSeries:
        return (-self) + other

    def __mul__(self, other) -> UniSeries:
        if _is_scalar(other):
            return UniSeries._raw([normalize(c * other) for c in self.coeffs], self.order)
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return UniSeries._raw(_convolve.mul(a.coeffs, b.coeffs, a.order), a.order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> UniSeries:
        if _is_scalar(other):
            return self * (Fraction(1) / other)
        if isinstance(other, UniSeries):
            return self * other.invert()
        return NotImplemented

    def __rtruediv__(self, other) -> UniSeries:
        if _is_scalar(other):
            return self.invert() * other
        return NotImplemented

    def __pow__(self, k: int) -> UniSeries:
        if k < 0:
            return self.invert() ** -k
        result = UniSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> UniSeries:
        """Multiply by x**k."""
        return UniSeries._raw(([0] * k + list(self.coeffs))[: self.order], self.order)

    def invert(self) -> UniSeries:
        """Multiplicative inverse by Newton iteration g <- g (2 - a g)."""
        c0 = self.coeffs[0] if self.order else 1
        if c0 == 0:
            raise SeriesDomainError("cannot invert a series with zero constant term")
        g = UniSeries([Fraction(1) / c0], 1)
        prec = 1
        while prec < self.order:
            prec = min(2 * prec, self.order)
            a = self.truncate(prec)
            g = UniSeries._raw(list(g.coeffs) + [0] * (prec - g.order), prec)
            g = g * (2 - a * g)
        return g if self.order else UniSeries.zero(0)

    def sqrt_unit(self) -> UniSeries:
        """Square root of a series with constant term 1.

        Newton iteration on the inverse square root, r <- r + r (1 - a r**2) / 2,
        then sqrt(a) = a r.
        """
        if not self.order:
            return self
        if self.coeffs[0] != 1:
            raise SeriesDomainError("sqrt_unit needs constant term 1")
        r = UniSeries.one(1)
        prec = 1
        half = Fraction(1, 2)
        while prec < self.order:
            prec = min(2 * prec, self.order)
            a = self.truncate(prec)
            r = UniSeries._raw(list(r.coeffs) + [0] * (prec - r.order), prec)
            r = r + r * (1 - a * r * r) * half
        return self * r

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any is not an integer."""
        if not self.is_integral():
            bad = next(i for i, c in enumerate(self.coeffs) if not isinstance(c, int))
            raise SeriesDomainError(f"coefficient {bad} is not an integer: {self.coeffs[bad]}")
        return list(self.coeffs)


class BiSeries:
    """Bivariate series in x and y, exact modulo total degree ``order``.

    Stored as rows: ``rows[i]`` is the list of y-coefficients of x**i, of
    length ``order - i``.  All-zero rows are dropped.
    """

    __slots__ = ("order", "_rows")

    def __init__(self, coeffs: Mapping[tuple[int, int], Number], order: int):
        rows: dict[int, list] = {}
        for (i, j), c in coeffs.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            if i + j >= order or not c:
                continue
            row = rows.setdefault(i, [0] * (order - i))
            row[j] = normalize(row[j] + c)
        self.order = order
        self._rows = {i: r for i, r in rows.items() if any(r)}

    @classmethod
    def _raw(cls, rows: dict[int, list], order: int) -> BiSeries:
        out = object.__new__(cls)
        out.order = order
        out._rows = rows
        return out

    @classmethod
    def zero(cls, order: int) -> BiSeries:
        return cls._raw({}, order)

    @classmethod
    def one(cls, order: int) -> BiSeries:
        return cls.monomial(0, 0, order)

    @classmethod
    def monomial(cls, i: int, j: int, order: int, c: Number = 1) -> BiSeries:
        return cls({(i, j): c}, order)

    @classmethod
    def polynomial(cls, coeffs: Mapping[tuple[int, int], Number], order: int) -> BiSeries:
        return cls(coeffs, order)

    @classmethod
    def from_rows(cls, rows: Mapping[int, Sequence[Number]], order: int) -> BiSeries:
        """From {x-degree: ascending y-coefficients}."""
        return cls({(i, j): c for i, row in rows.items() for j, c in enumerate(row)}, order)

    @property
    def coeffs(self) -> dict[tuple[int, int], Number]:
        """Nonzero coefficients keyed by (x-degree, y-degree)."""
        return {(i, j): c for i, row in self._rows.items() for j, c in enumerate(row) if c}

    def rows(self) -> dict[int, tuple[Number, ...]]:
        return {i: tuple(r) for i, r in sorted(self._rows.items())}

    def __repr__(self) -> str:
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))[:6]
        shown = " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in items)
        return f"BiSeries({shown or '0'} + ..., order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, BiSeries):
            return self.order == other.order and self._rows == other._rows
        return NotImplemented

    __hash__ = None

    def __getitem__(self, key: tuple[int, int]) -> Number:
        return self.coefficient(*key)

    def coefficient(self, i: int, j: int) -> Number:
        if i < 0 or j < 0 or i + j >= self.order:
            raise SeriesDomainError(f"index {(i, j)} outside series of order {self.order}")
        row = self._rows.get(i)
        return row[j] if row is not None else 0

    def truncate(self, order: int) -> BiSeries:
        if order > self.order:
            raise SeriesDomainError(f"cannot extend order {self.order} to {order}")
        rows = {}
        for i, r in self._rows.items():
            if i < order:
                r = r[: order - i]
                if any(r):
                    rows[i] = r
        return BiSeries._raw(rows, order)

    def _coerce(self, other) -> tuple[BiSeries, BiSeries]:
        if _is_scalar(other):
            other = BiSeries.monomial(0, 0, self.order, other)
        if not isinstance(other, BiSeries):
            raise TypeError(f"cannot combine BiSeries with {type(other).__name__}")
        n = min(self.order, other.order)
        a = self if self.order == n else self.truncate(n)
        b = other if other.order == n else other.truncate(n)
        return a, b

    def _combine(self, other, sign: int) -> BiSeries:
        a, b = self._coerce(other)
        rows = {i: list(r) for i, r in a._rows.items()}
        for i, r in b._rows.items():
            if i in rows:
                mine = rows[i]
                rows[i] = [normalize(x + sign * y) for x, y in zip(mine, r)]
            else:
                rows[i] = [sign * y for y in r]
        return BiSeries._raw({i: r for i, r in rows.items() if any(r)}, a.order)

    def __add__(self, other) -> BiSeries:
        try:
            return self._combine(other, 1)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> BiSeries:
        try:
            return self._combine(other, -1)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> BiSeries:
        return (-self) + other

    def __neg__(self) -> BiSeries:
        return BiSeries._raw({i: [-c for c in r] for i, r in self._rows.items()}, self.order)

    def __mul__(self, other) -> BiSeries:
        if _is_scalar(other):
            if not other:
                return BiSeries.zero(self.order)
            return BiSeries._raw({i: [normalize(c * other) for c in r]
                                  for i, r in self._rows.items()}, self.order)
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return BiSeries._raw(_convolve.mul_rows(a._rows, b._rows, a.order), a.order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> BiSeries:
        if _is_scalar(other):
            return self * (Fraction(1) / other)
        if isinstance(other, BiSeries):
            return self * other.invert()
        return NotImplemented

    def __rtruediv__(self, other) -> BiSeries:
        if _is_scalar(other):
            return self.invert() * other
        return NotImplemented

    def __pow__(self, k: int) -> BiSeries:
        if k < 0:
            return self.invert() ** -k
        result = BiSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert(self) -> BiSeries:
        """Multiplicative inverse by Newton iteration, doubling the total degree."""
        c0 = self.coefficient(0, 0) if self.order else 1
        if c0 == 0:
            raise SeriesDomainError("cannot invert a series with zero constant term")
        g = BiSeries.monomial(0, 0, 1, Fraction(1) / c0)
        prec = 1
        while prec < self.order:
            prec = min(2 * prec, self.order)
            a = self.truncate(prec)
            g = g.extend(prec)
            g = g * (2 - a * g)
        return g if self.order else BiSeries.zero(0)

    def extend(self, order: int) -> BiSeries:
        """Same coefficients, higher order; the new coefficients are zero (not exact)."""
        rows = {i: list(r) + [0] * (order - i - len(r)) for i, r in self._rows.items()}
        return BiSeries._raw(rows, order)

    def diagonal(self) -> UniSeries:
        """Set y = x: the coefficient of x**n is the sum over i + j = n."""
        out = [0] * self.order
        for i, r in self._rows.items():
            for j, c in enumerate(r):
                if c:
                    out[i + j] += c
        return UniSeries(out, self.order)

    def substitute_x(self, num_pow: int, den: BiSeries) -> BiSeries:
        """Replace x by x**num_pow / den, i.e. x**k by x**(k*num_pow) * den**(-k).

        Requires only monomials x**(3n) y**(2m) in ``self`` and a constant term 1
        in ``den``.
        """
        if num_pow < 1:
            raise SeriesDomainError("num_pow must be at least 1")
        if den.order < self.order:
            raise SeriesDomainError("den has lower order than the series")
        if den.coefficient(0, 0) != 1:
            raise SeriesDomainError("den must have constant term 1")
        if not self.has_grading():
            raise SeriesDomainError("series has monomials outside x^(3n) y^(2m)")
        inv = den.truncate(self.order).invert()
        result = BiSeries.zero(self.order)
        power = BiSeries.one(self.order)
        done = 0
        for k in sorted(self._rows):
            if k * num_pow >= self.order:
                break
            while done < k:
                power = power * inv
                done += 1
            term = BiSeries._raw({k * num_pow: list(self._rows[k][: self.order - k * num_pow])},
                                 self.order)
            result = result + term * power
        return result

    def has_grading(self, x_mod: int = 3, y_mod: int = 2) -> bool:
        """True iff every nonzero monomial has x-degree % x_mod == 0 and y-degree % y_mod == 0."""
        for i, r in self._rows.items():
            if i % x_mod and any(r):
                return False
            if any(c for j, c in enumerate(r) if j % y_mod):
                return False
        return True

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for r in self._rows.values() for c in r)


Series = UniSeries | BiSeries


def coefficient(s: Series, index) -> Number:
    """Exact coefficient: ``index`` is n for univariate, (i, j) for bivariate series."""
    if isinstance(s, BiSeries):
        return s.coefficient(*index)
    return s.coefficient(index)
