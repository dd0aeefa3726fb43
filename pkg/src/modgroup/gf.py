"""Generating functions of identity words, as exact truncated series.

Two independent routes lead to the bivariate series Q(x, y) of identity
words (x marks U, y marks S):

* the combinatorial route: primitive a-words W solve W = x^3 (W+1)^2 (W+y^2);
  the class series follow from W, give the S^2-free series Q-hat, and
  inserting S^2 blocks gives Q.  Along the diagonal this collapses to Z and T.
* the grammar route: the context-free grammar read off the pushdown automaton
  turns into a polynomial system solved by fixed-point iteration.

Cubic relations are checked by computing the residual series exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .pda import GrammarProduction, grammar
from .series import BiSeries, SeriesDomainError, UniSeries

Progress = Callable[[str, int], None]


def _x(order: int) -> UniSeries:
    return UniSeries.monomial(1, order)


def _bx(order: int) -> BiSeries:
    return BiSeries.monomial(1, 0, order)


def _by(order: int) -> BiSeries:
    return BiSeries.monomial(0, 1, order)


def _check_order(order: int, minimum: int) -> None:
    if order < minimum:
        raise ValueError(f"order must be at least {minimum}, got {order}")


# -- cubic relations ------------------------------------------------------------


@dataclass(frozen=True)
class CubicRelation:
    """c3 s^3 + c2 s^2 + c1 s + c0 = 0 with integer polynomial coefficients.

    Univariate coefficients map degree -> int; bivariate ones map (i, j) -> int
    for x**i y**j.
    """

    name: str
    c3: Mapping
    c2: Mapping
    c1: Mapping
    c0: Mapping
    bivariate: bool = False

    def coefficient_series(self, order: int) -> list:
        cls = BiSeries if self.bivariate else UniSeries
        return [cls.polynomial(dict(c), order) for c in (self.c3, self.c2, self.c1, self.c0)]


T_CUBIC = CubicRelation(
    "cubic for T(x)",
    c3={5: 6, 4: -3, 3: 2, 2: 3, 0: -1},
    c2={5: 1, 4: -1, 3: 1, 2: 2, 0: -1},
    c1={3: 1, 2: -1, 0: 1},
    c0={0: 1},
)

Q_CUBIC = CubicRelation(
    "cubic for Q(x, y)",
    c3={(0, 6): 1, (6, 0): -1, (3, 2): 6, (0, 4): -3, (3, 0): 2, (0, 2): 3, (0, 0): -1},
    c2={(3, 2): 1, (0, 4): -1, (3, 0): 1, (0, 2): 2, (0, 0): -1},
    c1={(3, 0): 1, (0, 2): -1, (0, 0): 1},
    c0={(0, 0): 1},
    bivariate=True,
)

K_CUBIC = CubicRelation(
    "cubic for the grammar series f3",
    c3={(0, 2): 1},
    c2={(0, 1): -2, (0, 3): -1},
    c1={(0, 0): 1, (0, 2): 2, (3, 0): -1},
    c0={(0, 1): -1},
    bivariate=True,
)


def cubic_residual(rel: CubicRelation, s):
    c3, c2, c1, c0 = rel.coefficient_series(s.order)
    return ((c3 * s + c2) * s + c1) * s + c0


def verify_cubic(rel: CubicRelation, s) -> int | None:
    """None when the relation holds exactly to the order of ``s``.

    Otherwise the lowest degree (total degree for bivariate series) carrying a
    nonzero residual coefficient.
    """
    if (isinstance(s, BiSeries)) != rel.bivariate:
        raise TypeError(f"{rel.name} expects a {'bi' if rel.bivariate else 'uni'}variate series")
    _check_order(s.order, 8)
    residual = cubic_residual(rel, s)
    if isinstance(residual, BiSeries):
        degrees = [i + j for (i, j) in residual.coeffs]
    else:
        degrees = [n for n, c in enumerate(residual.coeffs) if c]
    return min(degrees) if degrees else None


# -- combinatorial route -----------------------------------------------------------


def _newton(F: Callable, dF: Callable, start, prec: int, order: int, extend: Callable,
            progress: Progress | None, stage: str):
    """Newton iteration s <- s - F(s)/F'(s), doubling the precision each step.

    ``start`` must be exact below degree ``prec``.
    """
    s = start
    while prec < order:
        prec = min(2 * prec, order)
        s = extend(s, prec)
        s = s - F(s) * dF(s).invert()
        if progress:
            progress(stage, prec)
    return s


def _extend_uni(s: UniSeries, prec: int) -> UniSeries:
    return UniSeries(list(s.coeffs), prec)


def _extend_bi(s: BiSeries, prec: int) -> BiSeries:
    return s.extend(prec) if prec >= s.order else s.truncate(prec)


def solve_W(order: int, progress: Progress | None = None) -> BiSeries:
    """Generating function of primitive a-words: the series W with W(0,0) = 0 and
    W = x^3 (W+1)^2 (W+y^2).
    """
    _check_order(order, 6)

    def F(w):
        x3 = BiSeries.monomial(3, 0, w.order)
        y2 = BiSeries.monomial(0, 2, w.order)
        return w - x3 * (w + 1) * (w + 1) * (w + y2)

    def dF(w):
        x3 = BiSeries.monomial(3, 0, w.order)
        y2 = BiSeries.monomial(0, 2, w.order)
        return 1 - x3 * ((w + 1) * (2 * (w + y2) + (w + 1)))

    # W = x^3 y^2 + ..., so zero is exact below total degree 5
    return _newton(F, dF, BiSeries.zero(5), 5, order, _extend_bi, progress, "W")


def solve_W_naive(order: int) -> BiSeries:
    """Plain substitution W <- x^3 (W+1)^2 (W+y^2) from zero until it stabilizes."""
    _check_order(order, 6)
    x3 = BiSeries.monomial(3, 0, order)
    y2 = BiSeries.monomial(0, 2, order)
    w = BiSeries.zero(order)
    while True:
        nxt = x3 * (w + 1) * (w + 1) * (w + y2)
        if nxt == w:
            return w
        w = nxt


@dataclass
class WordClassSeries:
    """Series derived from W: the class series a..g, the exact-border series, Q-hat and Q."""

    order: int
    W: BiSeries
    A: BiSeries
    D_border: BiSeries
    F_border: BiSeries
    classes: dict[str, BiSeries] = field(default_factory=dict)
    Q_hat: BiSeries | None = None
    Q: BiSeries | None = None


def class_series(order: int, W: BiSeries | None = None) -> WordClassSeries:
    """All S^2-free class series from W, then Q-hat and Q."""
    _check_order(order, 6)
    W = solve_W(order) if W is None else W.truncate(order)
    one = BiSeries.one(order)
    x3 = BiSeries.monomial(3, 0, order)
    y2 = BiSeries.monomial(0, 2, order)
    w1 = W + 1
    inv_e = (1 - x3 * w1 * w1 * w1).invert()
    core = x3 * W * W * inv_e
    A = W + core * w1 * w1
    D_border = core
    F_border = core * w1

    inv1 = (one - x3).invert()
    inv2 = inv1 * inv1
    classes = {
        "a": A,
        "b": x3 * inv1 + x3 * (x3 + 2) * inv2 * A,
        "c": 2 * x3 * inv1 * A,
        "d": (2 * x3 + 1) * inv2 * D_border,
        "e": 3 * x3 * inv2 * F_border,
        "f": 2 * inv1 * F_border,
        "g": 2 * inv1 * D_border,
    }
    Q_hat = inv1 + (2 * x3 + 1) * inv2 * A + 3 * inv2 * D_border + (x3 + 2) * inv2 * F_border
    inv_y = (one - y2).invert()
    Q = Q_hat.substitute_x(1, one - y2) * inv_y
    return WordClassSeries(order, W, A, D_border, F_border, classes, Q_hat, Q)


def assemble_Q(order: int) -> BiSeries:
    """Q(x, y) through W, the class series and the S^2-insertion substitution."""
    Q = class_series(order).Q
    assert Q.is_integral() and Q.has_grading()
    return Q


def solve_Z(order: int, method: str = "newton", progress: Progress | None = None) -> UniSeries:
    """The series Z = W(x/(1-x^2), x), from Z (1-x^2)^3 = x^3 (Z+1)^2 (Z+x^2).

    ``method="naive"`` runs the three-terms-per-pass iteration starting from
    x^5, checking that every pass agrees with the previous one where both are
    exact; it is limited to order 200.
    """
    _check_order(order, 6)
    if method == "naive":
        return _solve_Z_naive(order)
    if method != "newton":
        raise ValueError(f"unknown method {method!r}")

    def F(z):
        n = z.order
        x = _x(n)
        x2 = x * x
        return z * (1 - x2) ** 3 - x2 * x * (z + 1) * (z + 1) * (z + x2)

    def dF(z):
        n = z.order
        x = _x(n)
        x2 = x * x
        return (1 - x2) ** 3 - x2 * x * ((z + 1) * (2 * (z + x2) + (z + 1)))

    return _newton(F, dF, UniSeries.zero(5), 5, order, _extend_uni, progress, "Z")


NAIVE_Z_LIMIT = 200


def _solve_Z_naive(order: int) -> UniSeries:
    if order > NAIVE_Z_LIMIT:
        raise ValueError(f"naive iteration is limited to order {NAIVE_Z_LIMIT}")
    z = UniSeries.monomial(5, 6)
    n = 1
    while 3 * n + 3 < order:
        prec = 3 * n + 6
        x = _x(prec)
        x2 = x * x
        zp = UniSeries(list(z.coeffs), prec)
        nxt = x2 * x * (zp + 1) * (zp + 1) * (zp + x2) / (1 - x2) ** 3
        if nxt.truncate(3 * n + 3) != zp.truncate(3 * n + 3):
            raise ArithmeticError(f"naive Z iteration unstable at pass {n}")
        z = nxt
        n += 1
    return UniSeries(list(z.coeffs), order)


def assemble_T(order: int, method: str = "newton", progress: Progress | None = None) -> UniSeries:
    """T(x) = sum t(n) x^n, from Z."""
    _check_order(order, 1)
    work = max(order, 6)
    Z = solve_Z(work, method, progress)
    x = _x(work)
    x2 = x * x
    x3 = x2 * x
    num = (1 - x2) ** 2 * (1 + Z)
    den = 1 - 3 * x2 - x3 + 3 * x2 * x2 - x3 * x3 - x3 * (3 * Z + 3 * Z * Z + Z * Z * Z)
    T = (num * den.invert()).truncate(order)
    T.integer_coeffs()
    if progress:
        progress("T", order)
    return T


def primitive_series(T: UniSeries) -> UniSeries:
    """The primitive-word series 1 - 1/T."""
    if T.order and T[0] != 1:
        raise SeriesDomainError("T must have constant term 1")
    return 1 - T.invert()


# -- grammar route -------------------------------------------------------------------


def _symbol_series(term, f: dict[int, BiSeries], order: int) -> BiSeries:
    if term == "U":
        return _bx(order)
    if term == "S":
        return _by(order)
    return f[term]


def _body_product(body: Sequence, f: dict[int, BiSeries], order: int) -> BiSeries:
    out = BiSeries.one(order)
    for term in body:
        out = out * _symbol_series(term, f, order)
    return out


def solve_grammar(order: int, productions: Sequence[GrammarProduction] | None = None,
                  progress: Progress | None = None):
    """Solve the polynomial system of the grammar; return (f1, f2, f3, Q).

    f1, f2, f3 come from fixed-point iteration from zero.  The start symbol's
    productions are N0 -> w N0 for words w over the other symbols, plus
    N0 -> $; with z marking $ this makes f0 = z / (1 - sum of w), so Q = f0 / z
    is an inverse.
    """
    _check_order(order, 2)
    productions = grammar() if productions is None else list(productions)
    inner = [p for p in productions if p.head != 0]
    start = [p for p in productions if p.head == 0]
    heads = sorted({p.head for p in inner})
    f = {h: BiSeries.zero(order) for h in heads}
    passes = 0
    while True:
        nxt = {h: BiSeries.zero(order) for h in heads}
        for p in inner:
            nxt[p.head] = nxt[p.head] + _body_product(p.body, f, order)
        passes += 1
        if progress:
            progress("grammar", passes)
        if nxt == f:
            break
        f = nxt
    linear = BiSeries.zero(order)
    for p in start:
        if p.body == ("$",):
            continue
        if p.body[-1] != 0 or 0 in p.body[:-1] or "$" in p.body:
            raise ValueError(f"start symbol must enter linearly: {p}")
        linear = linear + _body_product(p.body[:-1], f, order)
    Q = (1 - linear).invert()
    return f[1], f[2], f[3], Q


# -- other series of interest ----------------------------------------------------------

R_RADICAND = [1, -2, 1, -6, -8, -18, 9, -54, 81]


def cogrowth_series(order: int) -> UniSeries:
    """Generating function of reduced identity words over {U, U^-1, S, S^-1}."""
    _check_order(order, 2)
    x = _x(order)
    root = UniSeries.polynomial(R_RADICAND, order).sqrt_unit()
    p = UniSeries.polynomial
    num = (1 + x) * (p([0, 1, -1, 8, -3, 9], order) - p([2, -1, 6], order) * root)
    den = 2 * (3 * x - 1) * p([1, 0, 3], order) * p([1, 3, 3], order) * p([1, -1, 3], order)
    v = num * den.invert()
    v.integer_coeffs()
    return v


LOWER_BOUND_NUMERATOR = [1, 0, -4, -1, 6, 0, -4, 1, 1]  # (x-1)(x+1)(x^6+x^5-3x^4+x^3+3x^2-1)
LOWER_BOUND_DENOMINATOR = [1, 0, -5, -2, 10, 2, -9, 2, 5, -2, -1]


def lower_bound_series(order: int) -> UniSeries:
    """Series of words counted when the classes beyond a, b, c are ignored."""
    _check_order(order, 14)
    num = UniSeries.polynomial(LOWER_BOUND_NUMERATOR, order)
    return num * UniSeries.polynomial(LOWER_BOUND_DENOMINATOR, order).invert()


def evaluate_at(s: UniSeries, point: Fraction | int, terms: int) -> Fraction:
    """Exact partial sum of coeff(n) * point**n over n < terms."""
    if not 0 <= terms <= s.order:
        raise ValueError(f"terms must be in [0, {s.order}]")
    point = Fraction(point)
    num, den = point.numerator, point.denominator
    # Horner with a common denominator den**(terms-1)
    acc = 0
    scale = 1
    for c in reversed(s.coeffs[:terms]):
        acc = acc * num + c * scale
        scale *= den
    if not terms:
        return Fraction(0)
    return Fraction(acc, scale // den)


# -- roots -----------------------------------------------------------------------------

# x^7 - 20x^5 + 12x^4 - 8x^3 - 12x^2 + 4, factor of the discriminant of the T cubic
GROWTH_POLY = [4, 0, -12, -8, 12, -20, 0, 1]


def poly_eval(p: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def isolate_root(p: Sequence[int], bracket: tuple, tol) -> tuple[Fraction, Fraction]:
    """Bisect an integer polynomial (ascending coefficients) to an interval of width <= tol."""
    lo, hi = (Fraction(b) for b in bracket)
    tol = Fraction(tol)
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = poly_eval(p, lo), poly_eval(p, hi)
    if flo == 0:
        return lo, lo
    if fhi == 0:
        return hi, hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = poly_eval(p, mid)
        if fmid == 0:
            return mid, mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


def sqrt_interval(n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational interval of width 10**-digits containing sqrt(n)."""
    scale = 10 ** digits
    r = math.isqrt(n * scale * scale)
    return Fraction(r, scale), Fraction(r + 1, scale)


def cubic_real_roots(rel: CubicRelation, x: Fraction, tol) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the real roots of a univariate cubic relation at a point.

    Roots are separated at the critical points of the cubic in s and then
    bisected; a cubic with a vanishing leading coefficient is handled as a
    quadratic.
    """
    coeffs = [sum(c * Fraction(x) ** k for k, c in part.items())
              for part in (rel.c0, rel.c1, rel.c2, rel.c3)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    bound = 1 + max(abs(c / coeffs[-1]) for c in coeffs[:-1])
    # split points: rational approximations of the critical points (roots of the derivative)
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    splits = [-bound, bound]
    if len(deriv) == 3:
        a2, a1, a0 = deriv[2], deriv[1], deriv[0]
        disc = a1 * a1 - 4 * a2 * a0
        if disc > 0:
            lo_r, _ = _sqrt_fraction(disc, tol)
            for sign in (-1, 1):
                splits.append((-a1 + sign * lo_r) / (2 * a2))
    elif len(deriv) == 2:
        splits.append(-deriv[0] / deriv[1])
    splits.sort()
    out = []
    for lo, hi in zip(splits, splits[1:]):
        flo, fhi = poly_eval(coeffs, lo), poly_eval(coeffs, hi)
        if flo == 0:
            out.append((lo, lo))
        elif (flo > 0) != (fhi > 0) and fhi != 0:
            out.append(isolate_root(coeffs, (lo, hi), tol))
    if poly_eval(coeffs, splits[-1]) == 0:
        out.append((splits[-1], splits[-1]))
    return out


def _sqrt_fraction(q: Fraction, tol) -> tuple[Fraction, Fraction]:
    digits = max(10, -int(math.log10(float(tol))) + 5)
    scale = 10 ** digits
    r = math.isqrt(q.numerator * scale * scale // q.denominator)
    return Fraction(r, scale), Fraction(r + 1, scale)


def max_real_root(rel: CubicRelation, x: Fraction, tol) -> Fraction:
    """Upper end of the isolating interval of the largest real root at ``x``."""
    roots = cubic_real_roots(rel, x, tol)
    if not roots:
        raise ValueError(f"no real root of {rel.name} at {x}")
    return roots[-1][1]


def tail_bound(rel: CubicRelation, point: Fraction, radius: Fraction, terms: int,
               tol=Fraction(1, 10**12)) -> Fraction:
    """Upper bound for sum_{n >= terms} c(n) point**n.

    Valid for a series with nonnegative coefficients whose sum at ``radius``
    converges and is a real root of ``rel``: then c(n) <= M radius**-n, with M
    the largest real root there, and the tail is a geometric series.
    """
    point, radius = Fraction(point), Fraction(radius)
    if not 0 < point < radius:
        raise ValueError("need 0 < point < radius")
    ratio = point / radius
    return max_real_root(rel, radius, tol) * ratio ** terms / (1 - ratio)
