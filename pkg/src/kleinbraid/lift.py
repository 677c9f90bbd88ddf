"""Lift factors of non-split 2-valued maps and their Borsuk-Ulam status.

A non-split descriptor determines an index-2 subgroup of pi1(K) (the
preimage of the pure braids) and hence a double cover q.  Type A gives a
torus cover; types B0 and B1 give Klein-bottle covers.  Lifting through q
lands in the pure braid group, and projecting to each strand yields the
lift factors f1, f2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .braid import BraidElem, b_mul, b_pow, pr1, pr2
from .errors import SplitMap, Unclassifiable
from .klein import KleinElem, commute, is_relation_pair
from .maps import MapClass, MapDescriptor, MapParams, classify, extract_params


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


class Domain(enum.Enum):
    TORUS = "Torus"
    KLEIN = "Klein"


@dataclass(frozen=True)
class SurfaceHom:
    """A homomorphism pi1(T) -> pi1(K) or pi1(K) -> pi1(K) on generators a, b."""

    domain: Domain
    img_a: KleinElem
    img_b: KleinElem

    def is_well_defined(self) -> bool:
        if self.domain is Domain.TORUS:
            return commute(self.img_a, self.img_b)
        return is_relation_pair(self.img_a, self.img_b)


@dataclass(frozen=True)
class CoveringKind:
    tag: MapClass
    q_images: tuple[KleinElem, KleinElem]

    @property
    def hom(self) -> SurfaceHom:
        domain = Domain.TORUS if self.tag is MapClass.A else Domain.KLEIN
        return SurfaceHom(domain, *self.q_images)


COVERINGS = {
    MapClass.A: CoveringKind(MapClass.A, (KleinElem(1, 0), KleinElem(0, 2))),
    MapClass.B0: CoveringKind(MapClass.B0, (KleinElem(2, 0), KleinElem(0, 1))),
    MapClass.B1: CoveringKind(MapClass.B1, (KleinElem(2, 0), KleinElem(1, 1))),
}


def _nonsplit_class(d: MapDescriptor) -> MapClass:
    cls = classify(d)
    if cls is MapClass.SPLIT:
        raise SplitMap("both generator images are pure braids")
    return cls


def lift_images(d: MapDescriptor) -> tuple[BraidElem, BraidElem]:
    """Images of the cover's generators a, b; both are pure braids."""
    cls = _nonsplit_class(d)
    alpha, beta = d.alpha_hat, d.beta_hat
    if cls is MapClass.A:
        return alpha, b_pow(beta, 2)
    if cls is MapClass.B0:
        return b_pow(alpha, 2), beta
    return b_pow(alpha, 2), b_mul(alpha, beta)


def lift_factors(d: MapDescriptor) -> tuple[SurfaceHom, SurfaceHom]:
    cls = _nonsplit_class(d)
    la, lb = lift_images(d)
    domain = Domain.TORUS if cls is MapClass.A else Domain.KLEIN
    return (
        SurfaceHom(domain, pr1(la), pr1(lb)),
        SurfaceHom(domain, pr2(la), pr2(lb)),
    )


def closed_form_f1(p: MapParams, cls: MapClass) -> SurfaceHom:
    """f1 written directly in terms of the descriptor parameters.

    These are the unsimplified forms that still carry n1, n2; on valid
    descriptors (n1 = -2 s1, and n2 = 0 resp. n2 = -2 s1 for B0, B1) they
    collapse to a -> a1^(...) with no b1 part.
    """
    r1, s1, r2, s2 = p.r1, p.s1, p.r2, p.s2
    m1, n1, m2, n2 = p.m1, p.n1, p.m2, p.n2
    if cls is MapClass.A:
        return SurfaceHom(
            Domain.TORUS,
            KleinElem(r1, s1),
            KleinElem(_sign(s2) * m2 + (1 + _sign(n2 + s2)) * r2, 2 * s2 + n2),
        )
    img_a = KleinElem(_sign(s1) * m1 + (1 + _sign(n1 + s1)) * r1, 2 * s1 + n1)
    if cls is MapClass.B0:
        return SurfaceHom(Domain.KLEIN, img_a, KleinElem(r2, s2))
    if cls is MapClass.B1:
        return SurfaceHom(
            Domain.KLEIN,
            img_a,
            KleinElem(_sign(s1) * m2 + r1 + _sign(s1 + n2) * r2, s1 + s2 + n2),
        )
    raise SplitMap("split maps have no lift factors")


@dataclass
class ConstraintReport:
    satisfied: list[str] = field(default_factory=list)
    violated: list[str] = field(default_factory=list)

    def add(self, name: str, ok: bool) -> None:
        (self.satisfied if ok else self.violated).append(name)

    @property
    def ok(self) -> bool:
        return not self.violated


def _feasible(equations) -> bool:
    """Is there l in {0, 1} and an integer k with coef*k == rhs for every pair?

    ``equations(l)`` returns the list of ``(coef, rhs)`` pairs for that parity
    of l; the same k must serve every pair.
    """
    for l in (0, 1):
        k = None
        ok = True
        for coef, rhs in equations(l):
            if coef == 0:
                ok = rhs == 0
            elif rhs % coef:
                ok = False
            else:
                ok = k is None or k == rhs // coef
                k = rhs // coef
            if not ok:
                break
        if ok:
            return True
    return False


def check_constraints(p: MapParams, cls: MapClass) -> ConstraintReport:
    """Necessary conditions on the parameters of a valid descriptor.

    The basepoint-path integers k, l are existentially quantified; only the
    parity of l matters.  Nothing here rejects a descriptor.
    """
    r1, s1, r2, s2 = p.r1, p.s1, p.r2, p.s2
    m1, n1, m2, n2 = p.m1, p.n1, p.m2, p.n2
    rep = ConstraintReport()
    if cls is MapClass.A:
        rep.add("n1 = -2*s1", n1 == -2 * s1)

        def eqs(l):
            # m-exponent of f2(a) vs. conjugated f1(a^-1), then of f2(b) vs f1(b)
            return [
                (1 - _sign(s1), m1 + (1 + _sign(l + s1)) * r1),
                (1 - _sign(n2),
                 (1 - _sign(l + s2)) * m2
                 - (_sign(l) * (1 + _sign(s2 + n2)) - _sign(n2) * (1 + _sign(s2))) * r2),
            ]

        rep.add("m1, m2 equations solvable in (k, l)", _feasible(eqs))
    elif cls is MapClass.B0:
        rep.add("s2 odd", s2 % 2 == 1)
        rep.add("n1 = -2*s1", n1 == -2 * s1)
        rep.add("n2 = 0", n2 == 0)

        def eqs(l):
            return [
                (0, (1 - _sign(s1 + l)) * m1 - (_sign(l) - 1) * (1 + _sign(s1)) * r1),
                (2, m2 + _sign(s1 + l) * m1 + _sign(l) * (1 + _sign(s1)) * r1),
            ]

        rep.add("m1, m2 equations solvable in (k, l)", _feasible(eqs))
    elif cls is MapClass.B1:
        rep.add("s2 - s1 odd", (s2 - s1) % 2 == 1)
        rep.add("n1 = -2*s1", n1 == -2 * s1)
        rep.add("n2 = -2*s1", n2 == -2 * s1)

        def eqs(l):
            return [
                (0, (1 - _sign(s1 + l)) * m1 - (_sign(l) - 1) * (1 + _sign(s1)) * r1),
                (-2 * _sign(l),
                 m2 - (_sign(s1 + l) + 1) * (m1 + r1) - (_sign(l) - 1) * r2),
            ]

        rep.add("m1, m2 equations solvable in (k, l)", _feasible(eqs))
    return rep


class TorusTag(enum.Enum):
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4


@dataclass(frozen=True)
class TorusHomType:
    """One of the four based forms; unused parameters are 0.

    T1: a -> a^r1 b^(2 s1 + 1),  b -> b^(2 s2)
    T2: a -> a^r1 b^(2 s1 + 1),  b -> a^r1 b^(2 s2 + 1)
    T3: a -> b^(2 s1),           b -> a^r2 b^(2 s2 + 1)
    T4: a -> a^r1 b^(2 s1),      b -> a^r2 b^(2 s2)
    """

    tag: TorusTag
    r1: int = 0
    s1: int = 0
    r2: int = 0
    s2: int = 0


def classify_torus_hom(h: SurfaceHom) -> TorusHomType:
    if h.domain is not Domain.TORUS:
        raise Unclassifiable("not a torus homomorphism")
    (ma, na), (mb, nb) = h.img_a, h.img_b
    odd_a, odd_b = na % 2 == 1, nb % 2 == 1
    if odd_a and not odd_b and mb == 0:
        return TorusHomType(TorusTag.T1, r1=ma, s1=(na - 1) // 2, s2=nb // 2)
    if odd_a and odd_b and ma == mb:
        return TorusHomType(TorusTag.T2, r1=ma, s1=(na - 1) // 2, s2=(nb - 1) // 2)
    if not odd_a and odd_b and ma == 0:
        return TorusHomType(TorusTag.T3, s1=na // 2, r2=mb, s2=(nb - 1) // 2)
    if not odd_a and not odd_b:
        return TorusHomType(TorusTag.T4, r1=ma, s1=na // 2, r2=mb, s2=nb // 2)
    raise Unclassifiable(f"a -> {tuple(h.img_a)}, b -> {tuple(h.img_b)} matches no based form")


def bu_fails_torus(h: SurfaceHom, t: TorusHomType | None = None) -> bool:
    """True iff [h] does NOT have the Borsuk-Ulam property for the torus cover involution."""
    if t is None:
        t = classify_torus_hom(h)
    if t.tag is TorusTag.T1:
        return t.s2 % 2 == 1
    if t.tag is TorusTag.T3:
        return t.s1 == 0
    if t.tag is TorusTag.T4:
        r1, s1, r2, s2 = t.r1, t.s1, t.r2, t.s2
        return (
            (s1 == 0 and (s2 != 0 or r1 == 0 or r2 % 2 == 1))
            or (r2 == 0 and s2 != 0)
            or (r1 == r2 == s1 == s2 == 0)
        )
    return False


def bu_fails_klein(h: SurfaceHom) -> bool:
    """True iff h has the form a -> a^r, b -> a^s b^(2t+1)."""
    return h.img_a.n == 0 and h.img_b.n % 2 == 1


def bu_fails(h: SurfaceHom) -> bool:
    if h.domain is Domain.TORUS:
        return bu_fails_torus(h)
    return bu_fails_klein(h)

