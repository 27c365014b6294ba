"""Free-group words, involutive letter strings, and their kernel partitions.

A word in the free group on generators x1, x2, ... expands into a string of
involutive letters a1, a2, ... (each its own inverse) by sending xn to the
two-letter string a1 a(n+1), and xn^-1 to a(n+1) a1. The expansion is kept
as written, without cancelling adjacent equal letters; taking the kernel of
the resulting index sequence yields the partition attached to the word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .partition import Partition, kernel_partition


@dataclass(frozen=True)
class FreeWord:
    """A word x_{i1}^{e1} ... x_{im}^{em} with indices >= 1 and exponents +-1."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if gen < 1:
                raise ValueError(f"generator index must be >= 1, got {gen}")
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {exp}")


@dataclass(frozen=True)
class InvolutiveWord:
    """A string of involutive generator indices a_{i1} ... a_{in}."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for i in self.letters:
            if i < 1:
                raise ValueError(f"letter index must be >= 1, got {i}")

    def __len__(self):
        return len(self.letters)


_TOKEN = re.compile(r"x(\d+)(\^-1)?$")


def parse_word(text: str) -> FreeWord:
    """Parse whitespace-separated tokens of the form `x<k>` or `x<k>^-1`.

    Other exponents are not part of the grammar; write the token repeatedly
    instead.
    """
    letters = []
    offset = 0
    for token in text.split():
        offset = text.index(token, offset)
        m = _TOKEN.match(token)
        if not m or int(m.group(1)) < 1:
            raise ParseError(
                f"expected a token like 'x2' or 'x2^-1', got {token!r}", offset=offset
            )
        letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        offset += len(token)
    return FreeWord(tuple(letters))


def to_involutive(w: FreeWord) -> InvolutiveWord:
    """Expand a free word into involutive letters, without cancellation.

    Each xn becomes (1, n+1) and each xn^-1 becomes (n+1, 1), so the result
    always has even length, twice the length of the word.
    """
    out = []
    for gen, exp in w.letters:
        out.extend((1, gen + 1) if exp == 1 else (gen + 1, 1))
    return InvolutiveWord(tuple(out))


def reduce_involutive(a: InvolutiveWord) -> InvolutiveWord:
    """Delete adjacent equal letters until none remain.

    Cancellation is confluent, so the reduced word does not depend on the
    deletion order; a single stack pass finds it.
    """
    stack: list[int] = []
    for x in a.letters:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return InvolutiveWord(tuple(stack))


def partition_of_word(w: FreeWord) -> Partition:
    """The kernel partition of the unreduced involutive expansion of `w`.

    The expansion is used exactly as written (adjacent equal letters are
    kept), with no upper points and one lower point per letter.
    """
    return kernel_partition(to_involutive(w).letters)
