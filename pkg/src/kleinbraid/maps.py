"""2-valued map descriptors: the braid images of the Klein-bottle generators.

A descriptor ``(alpha_hat, beta_hat)`` encodes a homomorphism
pi1(K) = <alpha, beta : alpha beta alpha = beta> -> B2(K).  Validity is a
checked property (:func:`is_homomorphism`), not a construction invariant, so
that bad inputs can be reported rather than refused.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .braid import IDENTITY, SIGMA, SIGMA_SQ, BraidElem, b_mul, b_pow
from .errors import BadParity, InvalidMap
from .klein import KleinElem, eval_word
from .words import A2, FreeWord


class MapClass(enum.Enum):
    SPLIT = "Split"
    A = "A"
    B0 = "B0"
    B1 = "B1"

    @classmethod
    def from_flags(cls, k1: int, k2: int) -> MapClass:
        return {(0, 0): cls.SPLIT, (0, 1): cls.A, (1, 0): cls.B0, (1, 1): cls.B1}[(k1, k2)]

    @property
    def flags(self) -> tuple[int, int]:
        return {"Split": (0, 0), "A": (0, 1), "B0": (1, 0), "B1": (1, 1)}[self.value]


@dataclass(frozen=True)
class MapParams:
    w1: FreeWord
    w2: FreeWord
    r1: int
    s1: int
    r2: int
    s2: int
    k1: int
    k2: int
    m1: int
    n1: int
    m2: int
    n2: int

    @classmethod
    def from_numbers(cls, *, r1=0, s1=0, r2=0, s2=0, k1=0, k2=0,
                     m1=0, n1=0, m2=0, n2=0) -> MapParams:
        """Raw parameters with no braid behind them; used for formula sweeps."""
        return cls(FreeWord(), FreeWord(), r1, s1, r2, s2, k1, k2, m1, n1, m2, n2)

    @property
    def map_class(self) -> MapClass:
        return MapClass.from_flags(self.k1, self.k2)

    def as_dict(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in
                ("r1", "s1", "r2", "s2", "k1", "k2", "m1", "n1", "m2", "n2")}


@dataclass(frozen=True)
class MapDescriptor:
    alpha_hat: BraidElem
    beta_hat: BraidElem

    @cached_property
    def valid(self) -> bool:
        return is_homomorphism(self)


def is_homomorphism(d: MapDescriptor) -> bool:
    a, b = d.alpha_hat, d.beta_hat
    return b_mul(b_mul(a, b), a) == b


def classify(d: MapDescriptor) -> MapClass:
    if not d.valid:
        raise InvalidMap("alpha_hat * beta_hat * alpha_hat != beta_hat")
    return MapClass.from_flags(d.alpha_hat.k, d.beta_hat.k)


def extract_params(d: MapDescriptor) -> MapParams:
    a, b = d.alpha_hat, d.beta_hat
    m1, n1 = eval_word(a.w)
    m2, n2 = eval_word(b.w)
    return MapParams(a.w, b.w, a.g.m, a.g.n, b.g.m, b.g.n, a.k, b.k, m1, n1, m2, n2)


def _check_odd(z: int) -> None:
    if z % 2 == 0:
        raise BadParity(f"z must be odd, got {z}")


def fixture_B0_even(x: int, y: int, z: int, l: int) -> MapDescriptor:
    """alpha -> (b2^-1 a2 b2 a2) a1^x sigma,  beta -> (b2^-1 a2 b2 a2)^l a1^y b1^z.

    The lift factor sends a -> a1^(2x) and b -> a1^y b1^z.
    """
    _check_odd(z)
    c = BraidElem(SIGMA_SQ)
    alpha = b_mul(b_mul(c, BraidElem(g=KleinElem(x, 0))), SIGMA)
    beta = b_mul(b_pow(c, l), BraidElem(g=KleinElem(y, z)))
    return MapDescriptor(alpha, beta)


def fixture_B0_odd(x: int, y: int, z: int) -> MapDescriptor:
    """alpha -> a2^-1 a1^(x+1) sigma,  beta -> a2^-1 a1^y b1^z.

    The lift factor sends a -> a1^(2x+1) and b -> a1^y b1^z.
    """
    _check_odd(z)
    a2_inv = FreeWord((-A2,))
    return MapDescriptor(
        BraidElem(a2_inv, KleinElem(x + 1, 0), 1),
        BraidElem(a2_inv, KleinElem(y, z), 0),
    )


TRIVIAL_A = MapDescriptor(IDENTITY, SIGMA)

FIXTURE_FAMILIES = {
    "b0-even": (fixture_B0_even, ("x", "y", "z", "l")),
    "b0-odd": (fixture_B0_odd, ("x", "y", "z")),
}
