"""Free group on the two letters a2, b2.

Letters are encoded as nonzero ints: ``A2 = 1`` and ``B2 = 2`` for the
generators, and their negatives for the inverses.  A :class:`FreeWord` is
always freely reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

A2 = 1
B2 = 2
SYMBOLS = (A2, B2)


def reduce(raw: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence with a single stack pass."""
    out: list[int] = []
    for x in raw:
        if x not in (1, -1, 2, -2):
            raise ValueError(f"not a letter of F2(a2, b2): {x!r}")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", reduce(letters))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> FreeWord:
        """Build from ``(symbol, sign)`` pairs, e.g. ``[(B2, -1), (A2, 1)]``."""
        return cls(tuple(sym * sign for sym, sign in pairs))

    @classmethod
    def power(cls, symbol: int, e: int) -> FreeWord:
        return cls((symbol,) * e if e >= 0 else (-symbol,) * (-e))

    def pairs(self) -> list[tuple[int, int]]:
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return concat(self, other)

    def __invert__(self) -> FreeWord:
        return invert(self)

    def __repr__(self) -> str:
        if not self.letters:
            return "FreeWord(1)"
        names = {1: "a2", -1: "A2", 2: "b2", -2: "B2"}
        return f"FreeWord({' '.join(names[x] for x in self.letters)})"


EMPTY = FreeWord()


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    # cancellation can only happen at the seam
    a, b = u.letters, v.letters
    i = 0
    n = min(len(a), len(b))
    while i < n and a[len(a) - 1 - i] == -b[i]:
        i += 1
    out = FreeWord.__new__(FreeWord)
    object.__setattr__(out, "letters", a[: len(a) - i] + b[i:])
    return out


def invert(u: FreeWord) -> FreeWord:
    out = FreeWord.__new__(FreeWord)
    object.__setattr__(out, "letters", tuple(-x for x in reversed(u.letters)))
    return out


def exp_sum(u: FreeWord, symbol: int) -> int:
    """Signed number of occurrences of ``symbol`` in ``u``."""
    return sum(1 if x == symbol else -1 for x in u.letters if abs(x) == symbol)


def substitute(u: FreeWord, image_a2: FreeWord, image_b2: FreeWord) -> FreeWord:
    """Apply the endomorphism a2 -> image_a2, b2 -> image_b2."""
    table = {
        A2: image_a2.letters,
        -A2: invert(image_a2).letters,
        B2: image_b2.letters,
        -B2: invert(image_b2).letters,
    }
    raw: list[int] = []
    for x in u.letters:
        raw.extend(table[x])
    return FreeWord(tuple(raw))
