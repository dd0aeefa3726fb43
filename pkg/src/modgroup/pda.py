"""One-state pushdown automaton for the word problem of PSL2(Z) on {U, S}*.

The stack holds the free-product normal form of the prefix read so far, in
code: 1 is U, 2 is UU, 3 is S, and 0 marks the bottom.  A word equals the
identity iff the stack is back to the bottom marker after the whole word is
read (the end marker ``$`` would then pop it).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .group import Word, check_word


class StackSymbol(enum.IntEnum):
    BOTTOM = 0
    U = 1
    UU = 2
    S = 3


_DECODE = {StackSymbol.U: "U", StackSymbol.UU: "UU", StackSymbol.S: "S"}


@dataclass(frozen=True)
class PdaConfiguration:
    """Stack contents, top first; the bottom marker is last."""

    stack: tuple[StackSymbol, ...] = (StackSymbol.BOTTOM,)

    def __post_init__(self):
        stack = tuple(StackSymbol(s) for s in self.stack)
        if not stack or stack[-1] is not StackSymbol.BOTTOM or StackSymbol.BOTTOM in stack[:-1]:
            raise ValueError(f"bottom marker must appear exactly once, at the bottom: {stack}")
        object.__setattr__(self, "stack", stack)

    @property
    def top(self) -> StackSymbol:
        return self.stack[0]


INITIAL = PdaConfiguration()

# (letter, top) -> symbols replacing the top, written top first
TRANSITIONS: dict[tuple[str, StackSymbol], tuple[StackSymbol, ...]] = {
    ("U", StackSymbol.BOTTOM): (StackSymbol.U, StackSymbol.BOTTOM),
    ("U", StackSymbol.U): (StackSymbol.UU,),
    ("U", StackSymbol.UU): (),
    ("U", StackSymbol.S): (StackSymbol.U, StackSymbol.S),
    ("S", StackSymbol.BOTTOM): (StackSymbol.S, StackSymbol.BOTTOM),
    ("S", StackSymbol.U): (StackSymbol.S, StackSymbol.U),
    ("S", StackSymbol.UU): (StackSymbol.S, StackSymbol.UU),
    ("S", StackSymbol.S): (),
}


def step(config: PdaConfiguration, letter: str) -> PdaConfiguration:
    try:
        replacement = TRANSITIONS[(letter, config.top)]
    except KeyError:
        raise ValueError(f"not a letter of 'US': {letter!r}") from None
    return PdaConfiguration(replacement + config.stack[1:])


def run(w: Word) -> PdaConfiguration:
    """Configuration after reading all of ``w`` from the initial one."""
    # bottom-first list; the tuple form would make each push O(len)
    stack = [StackSymbol.BOTTOM]
    for letter in check_word(w):
        top = stack.pop()
        replacement = TRANSITIONS[(letter, top)]
        stack.extend(reversed(replacement))
    return PdaConfiguration(tuple(reversed(stack)))


def accepts(w: Word) -> bool:
    stack = [0]
    for letter in check_word(w):
        top = stack[-1]
        if letter == "U":
            if top == 1:
                stack[-1] = 2
            elif top == 2:
                stack.pop()
            else:
                stack.append(1)
        elif top == 3:
            stack.pop()
        else:
            stack.append(3)
    return len(stack) == 1


def stack_to_normal_form(config: PdaConfiguration) -> Word:
    """Decode the stack bottom-up: 1 -> U, 2 -> UU, 3 -> S."""
    return "".join(_DECODE[s] for s in reversed(config.stack[:-1]))


# -- grammar -------------------------------------------------------------------

Term = Union[str, int]  # terminal "U", "S", "$" or nonterminal index


@dataclass(frozen=True)
class GrammarProduction:
    head: int
    body: tuple[Term, ...]

    def __str__(self) -> str:
        rhs = " ".join(t if isinstance(t, str) else f"N{t}" for t in self.body)
        return f"N{self.head} -> {rhs}"


_PRODUCTIONS = (
    GrammarProduction(0, ("U", 1, 0)),
    GrammarProduction(1, ("U", 2)),
    GrammarProduction(2, ("U",)),
    GrammarProduction(3, ("U", 1, 3)),
    GrammarProduction(0, ("S", 3, 0)),
    GrammarProduction(1, ("S", 3, 1)),
    GrammarProduction(2, ("S", 3, 2)),
    GrammarProduction(3, ("S",)),
    GrammarProduction(0, ("$",)),
)


def grammar() -> list[GrammarProduction]:
    """The nine productions obtained from the PDA, in transition order.

    N_i derives exactly the words that pop stack symbol i; N_0 is the start
    symbol and ``$`` the end marker.
    """
    return list(_PRODUCTIONS)
