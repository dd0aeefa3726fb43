"""Elements of PSL2(Z) and words over the generators U (order 3) and S (order 2).

Words are plain strings over the alphabet ``"US"``; the empty string is the
empty word.  Group elements are :class:`ProjectiveMatrix` values, i.e. integer
matrices of determinant 1 stored with a canonical sign.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

ALPHABET = "US"

Word = str


@dataclass(frozen=True, slots=True)
class ProjectiveMatrix:
    """A 2x2 integer matrix of determinant 1, identified with its negative.

    The stored representative has its first nonzero entry (in the order
    a, b, c, d) positive.  Use :meth:`of` to build one from arbitrary-sign
    entries.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> ProjectiveMatrix:
        if a * d - b * c != 1:
            raise ValueError(f"determinant of ({a},{b},{c},{d}) is not 1")
        return cls(*_normalize(a, b, c, d))

    def __matmul__(self, other: ProjectiveMatrix) -> ProjectiveMatrix:
        return multiply(self, other)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0

    def label(self) -> str:
        return f"{self.a},{self.b},{self.c},{self.d}"


def _normalize(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    lead = a or b or c or d
    if lead < 0:
        return (-a, -b, -c, -d)
    return (a, b, c, d)


IDENTITY = ProjectiveMatrix(1, 0, 0, 1)
U_MATRIX = ProjectiveMatrix.of(0, 1, -1, 1)
S_MATRIX = ProjectiveMatrix.of(0, 1, -1, 0)

_LETTER_MATRICES = {"U": U_MATRIX, "S": S_MATRIX}


def letter_matrix(letter: str) -> ProjectiveMatrix:
    try:
        return _LETTER_MATRICES[letter]
    except KeyError:
        raise ValueError(f"not a letter of {ALPHABET!r}: {letter!r}") from None


def multiply(m1: ProjectiveMatrix, m2: ProjectiveMatrix) -> ProjectiveMatrix:
    a = m1.a * m2.a + m1.b * m2.c
    b = m1.a * m2.b + m1.b * m2.d
    c = m1.c * m2.a + m1.d * m2.c
    d = m1.c * m2.b + m1.d * m2.d
    return ProjectiveMatrix(*_normalize(a, b, c, d))


def check_word(w: Word) -> Word:
    if w.strip(ALPHABET):
        raise ValueError(f"word contains letters outside {ALPHABET!r}: {w!r}")
    return w


_POWER = re.compile(r"([US])(?:\^(\d+))?")


def parse_word(text: str) -> Word:
    """Expand exponent notation: ``parse_word("USU^3SU^2") == "USUUUSUU"``."""
    text = text.replace(" ", "")
    pos = 0
    parts = []
    while pos < len(text):
        m = _POWER.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        parts.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return "".join(parts)


def evaluate(w: Word) -> ProjectiveMatrix:
    """Left-to-right product of the letter matrices of ``w``."""
    a, b, c, d = 1, 0, 0, 1
    for letter in w:
        # right multiplication by U = (0 1; -1 1) or S = (0 1; -1 0)
        if letter == "U":
            a, b, c, d = -b, a + b, -d, c + d
        elif letter == "S":
            a, b, c, d = -b, a, -d, c
        else:
            raise ValueError(f"not a letter of {ALPHABET!r}: {letter!r}")
    return ProjectiveMatrix(*_normalize(a, b, c, d))


def is_identity(w: Word) -> bool:
    return evaluate(w).is_identity()


def normal_form(w: Word) -> Word:
    """Free-product normal form: delete factors SS and UUU until none remain.

    Single pass with a stack of (letter, run length).  The rewriting system is
    confluent, so the result does not depend on the order of deletions.
    """
    stack: list[list] = []
    for letter in check_word(w):
        if stack and stack[-1][0] == letter:
            stack[-1][1] += 1
            limit = 3 if letter == "U" else 2
            if stack[-1][1] == limit:
                stack.pop()
        else:
            stack.append([letter, 1])
    return "".join(letter * count for letter, count in stack)


def rotations(w: Word) -> list[Word]:
    if not w:
        return [w]
    return [w[i:] + w[:i] for i in range(len(w))]


def prefix_products(w: Word) -> Iterator[ProjectiveMatrix]:
    """Running products of every nonempty prefix of ``w``."""
    m = IDENTITY
    for letter in w:
        m = multiply(m, letter_matrix(letter))
        yield m


def is_primitive_identity(w: Word) -> bool:
    """True iff ``w`` is a nonempty identity word with no proper nonempty identity prefix."""
    if not w:
        return False
    hits = [m.is_identity() for m in prefix_products(w)]
    return hits[-1] and not any(hits[:-1])


def letter_counts(w: Word) -> tuple[int, int]:
    """Number of U's and number of S's."""
    return w.count("U"), w.count("S")


def all_words(length: int) -> Iterable[Word]:
    """Every word of the given length, in lexicographic order U < S."""
    if length == 0:
        yield ""
        return
    for head in all_words(length - 1):
        yield head + "U"
        yield head + "S"


MAX_GRAPH_DEPTH = 8


def cayley_graph(depth: int) -> tuple[list[ProjectiveMatrix], list[tuple[ProjectiveMatrix, ProjectiveMatrix, str]]]:
    """Ball of the given radius in the directed Cayley graph for right multiplication by U and S.

    Vertices come in breadth-first order (U before S); edges are all g -> gL
    with both ends in the ball.
    """
    if not 0 <= depth <= MAX_GRAPH_DEPTH:
        raise ValueError(f"depth must be in [0, {MAX_GRAPH_DEPTH}], got {depth}")
    order = [IDENTITY]
    seen = {IDENTITY}
    frontier = [IDENTITY]
    for _ in range(depth):
        nxt = []
        for g in frontier:
            for letter in ALPHABET:
                h = multiply(g, letter_matrix(letter))
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
    edges = []
    for g in order:
        for letter in ALPHABET:
            h = multiply(g, letter_matrix(letter))
            if h in seen:
                edges.append((g, h, letter))
    return order, edges


def graph_to_dot(vertices, edges, name: str = "cayley") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v.label()}";' for v in vertices]
    lines += [f'  "{g.label()}" -> "{h.label()}" [label="{letter}"];' for g, h, letter in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
