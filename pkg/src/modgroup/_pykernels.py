"""Pure-Python enumeration kernels.

Same surface as the compiled ``_ckernels`` module.  Every kernel walks the tree
of words depth first, updating a running product per edge, and counts every
word ``w`` with ``len(w) <= max_len`` that starts with ``prefix``.
"""
from __future__ import annotations

import sys

NAME = "python"


def _table(max_len: int) -> list[list[int]]:
    return [[0] * (max_len + 1) for _ in range(max_len + 1)]


def _walk_prefix(prefix: str):
    a, b, c, d = 1, 0, 0, 1
    u = 0
    hit = False
    for i, letter in enumerate(prefix):
        if i and b == 0 and c == 0:
            hit = True
        if letter == "U":
            a, b, c, d = -b, a + b, -d, c + d
            u += 1
        elif letter == "S":
            a, b, c, d = -b, a, -d, c
        else:
            raise ValueError(f"bad letter {letter!r}")
    return a, b, c, d, u, hit


def enumerate_identity(max_len: int, prefix: str = "") -> tuple[list[list[int]], list[int]]:
    """Identity-word counts by (U count, S count) and primitive counts by length."""
    pairs = _table(max_len)
    prim = [0] * (max_len + 1)
    if len(prefix) > max_len:
        return pairs, prim
    a, b, c, d, u, hit = _walk_prefix(prefix)
    sys.setrecursionlimit(max(1000, 4 * max_len + 100))

    def visit(a, b, c, d, n, u, hit):
        if b == 0 and c == 0:
            pairs[u][n - u] += 1
            if n:
                if not hit:
                    prim[n] += 1
                hit = True
        if n == max_len:
            return
        visit(-b, a + b, -d, c + d, n + 1, u + 1, hit)
        visit(-b, a, -d, c, n + 1, u, hit)

    visit(a, b, c, d, len(prefix), u, hit)
    return pairs, prim


# PDA stack symbols: 0 bottom, 1 = U, 2 = UU, 3 = S
def enumerate_pda(max_len: int, prefix: str = "") -> tuple[list[list[int]], list[int], int]:
    """Counts of words accepted by the one-state PDA, plus PDA/matrix disagreements.

    Returns ``(pairs, prim, mismatches)`` where acceptance means the stack is
    back to the bottom marker alone.
    """
    pairs = _table(max_len)
    prim = [0] * (max_len + 1)
    if len(prefix) > max_len:
        return pairs, prim, 0
    stack = [0]
    mismatches = 0
    a, b, c, d = 1, 0, 0, 1
    u = 0
    hit = False
    for i, letter in enumerate(prefix):
        if i and len(stack) == 1:
            hit = True
        _push(stack, letter)
        if letter == "U":
            a, b, c, d = -b, a + b, -d, c + d
            u += 1
        else:
            a, b, c, d = -b, a, -d, c
    sys.setrecursionlimit(max(1000, 4 * max_len + 100))

    def visit(a, b, c, d, n, u, hit):
        nonlocal mismatches
        accepted = len(stack) == 1
        if accepted != (b == 0 and c == 0):
            mismatches += 1
        if accepted:
            pairs[u][n - u] += 1
            if n:
                if not hit:
                    prim[n] += 1
                hit = True
        if n == max_len:
            return
        for letter in "US":
            depth = len(stack)
            top = stack[-1]
            _push(stack, letter)
            if letter == "U":
                visit(-b, a + b, -d, c + d, n + 1, u + 1, hit)
            else:
                visit(-b, a, -d, c, n + 1, u, hit)
            # undo: restore length and the old top symbol
            del stack[depth:]
            if len(stack) < depth:
                stack.append(top)
            else:
                stack[-1] = top

    visit(a, b, c, d, len(prefix), u, hit)
    return pairs, prim, mismatches


def _push(stack: list[int], letter: str) -> None:
    top = stack[-1]
    if letter == "U":
        if top == 1:
            stack[-1] = 2
        elif top == 2:
            stack.pop()
        else:
            stack.append(1)
    else:
        if top == 3:
            stack.pop()
        else:
            stack.append(3)


# reduced-word letters: 0 = U, 1 = U^-1, 2 = S, 3 = S^-1 (same element as S)
_INVERSE = (1, 0, 3, 2)


def count_reduced(max_len: int) -> list[int]:
    """Reduced words over {U, U^-1, S, S^-1} equal to the identity, by length."""
    counts = [0] * (max_len + 1)
    sys.setrecursionlimit(max(1000, 4 * max_len + 100))

    def visit(a, b, c, d, n, last):
        if b == 0 and c == 0:
            counts[n] += 1
        if n == max_len:
            return
        for letter in range(4):
            if last >= 0 and _INVERSE[last] == letter:
                continue
            if letter == 0:
                visit(-b, a + b, -d, c + d, n + 1, letter)
            elif letter == 1:
                # right multiplication by U^2 = (-1 1; -1 0)
                visit(-a - b, a, -c - d, c, n + 1, letter)
            else:
                visit(-b, a, -d, c, n + 1, letter)

    visit(1, 0, 0, 1, 0, -1)
    return counts
