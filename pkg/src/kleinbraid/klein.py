"""The Klein-bottle group <a, b : a b a = b> in normal form a^m b^n.

Every copy of the group that shows up (<a1,b1>, <a2,b2>, <alpha,beta>, the
covering-space <a,b>) shares :class:`KleinElem`; which copy is meant is up
to the caller.  Multiplication follows from ``b a = a^-1 b``.
"""

from __future__ import annotations

from typing import NamedTuple

from .words import A2, B2, FreeWord


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


class KleinElem(NamedTuple):
    m: int = 0
    n: int = 0

    def __mul__(self, other: KleinElem) -> KleinElem:  # type: ignore[override]
        return k_mul(self, other)

    def __repr__(self) -> str:
        return f"KleinElem({self.m}, {self.n})"


IDENTITY = KleinElem(0, 0)
A = KleinElem(1, 0)
B = KleinElem(0, 1)


def k_mul(x: KleinElem, y: KleinElem) -> KleinElem:
    return KleinElem(x[0] + _sign(x[1]) * y[0], x[1] + y[1])


def k_inv(x: KleinElem) -> KleinElem:
    return KleinElem(-_sign(x[1]) * x[0], -x[1])


def k_pow(x: KleinElem, e: int) -> KleinElem:
    base = x if e >= 0 else k_inv(x)
    out = IDENTITY
    for _ in range(abs(e)):
        out = k_mul(out, base)
    return out


_LETTER = {A2: A, -A2: KleinElem(-1, 0), B2: B, -B2: KleinElem(0, -1)}


def eval_word(u: FreeWord) -> KleinElem:
    """Image of ``u`` under F2(a2, b2) -> F2 / <<b2^-1 a2 b2 a2>>."""
    m, n = 0, 0
    for x in u.letters:
        g = _LETTER[x]
        m += _sign(n) * g[0]
        n += g[1]
    return KleinElem(m, n)


def is_relation_pair(x: KleinElem, y: KleinElem) -> bool:
    """True iff x y x == y, i.e. (x, y) defines a homomorphism from the Klein group."""
    return k_mul(k_mul(x, y), x) == y


def commute(x: KleinElem, y: KleinElem) -> bool:
    return k_mul(x, y) == k_mul(y, x)
