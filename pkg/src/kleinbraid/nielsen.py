"""Nielsen fixed-point numbers of non-split 2-valued self-maps of the Klein bottle.

Two independent routes:

* :func:`nielsen_number` evaluates the closed four-branch formula on the
  descriptor parameters.
* :func:`nielsen_via_coincidence` builds the lift factor f1 from the braid
  engine and evaluates the Nielsen coincidence number N(q, f1) against the
  double cover q.

They must agree on every valid descriptor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidMap, SplitMap, UnsupportedForm, UnsupportedType
from .lift import (
    COVERINGS,
    Domain,
    SurfaceHom,
    TorusHomType,
    TorusTag,
    classify_torus_hom,
    lift_factors,
)
from .maps import MapClass, MapDescriptor, MapParams, classify, extract_params


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def nielsen_branch(p: MapParams) -> str:
    if p.k1 == 0 and p.k2 == 0:
        raise SplitMap("the formula covers non-split maps only")
    if p.k1 == 1:
        return "B0" if p.k2 == 0 else "B1"
    if p.s1 % 2 == 0 and p.n2 % 2 == 0 and p.r1 != 0:
        return "A_r1"
    return "A"


def nielsen_number(p: MapParams) -> int:
    branch = nielsen_branch(p)
    if branch in ("B0", "B1"):
        spread = max(abs((1 + _sign(p.s1)) * p.r1 + p.m1), 2)
        if branch == "B0":
            return abs(1 - p.s2) * spread
        return abs(1 - p.s2 + p.s1) * spread
    base = abs(2 * p.s2 + p.n2 - 2)
    if branch == "A_r1":
        return abs(p.r1) * base
    return base


def nielsen_numbers(params: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Vectorised :func:`nielsen_number`; rows follow ``_kernels.PARAM_COLUMNS``.

    Split rows come back as -1.
    """
    values, _ = _kernels.nielsen_rows(params, backend)
    return values


def params_row(p: MapParams) -> list[int]:
    return [p.k1, p.k2, p.r1, p.s1, p.s2, p.m1, p.n2]


def is_nielsen_zero(p: MapParams) -> bool:
    if p.k1 == 0 and p.k2 == 0:
        raise SplitMap("the zero criterion covers non-split maps only")
    if p.k1 == 1 and p.k2 == 0:
        return p.s2 == 1
    if p.k1 == 1 and p.k2 == 1:
        return p.s2 - p.s1 == 1
    return p.n2 == 2 * (1 - p.s2)


def coincidence_torus_klein(f: SurfaceHom, g: SurfaceHom,
                            f_type: TorusHomType | None = None) -> int:
    """N(f, g) for torus-to-Klein maps f (type 1, 3 or 4) and g (type 4)."""
    g_type = classify_torus_hom(g)
    if g_type.tag is not TorusTag.T4:
        raise UnsupportedType(f"second map must be of type 4, got {g_type.tag.name}")
    t1, v1, t2, v2 = g_type.r1, g_type.s1, g_type.r2, g_type.s2
    if f_type is None:
        f_type = classify_torus_hom(f)
    r1, s1, r2, s2 = f_type.r1, f_type.s1, f_type.r2, f_type.s2
    if f_type.tag is TorusTag.T1:
        return abs(t1 * (2 * v2 - 2 * s2) - t2 * (2 * v1 - 2 * s1 - 1))
    if f_type.tag is TorusTag.T3:
        return abs(t1 * (2 * v2 - 2 * s2 - 1) - t2 * (2 * v1 - 2 * s1))
    if f_type.tag is TorusTag.T4:
        return (abs((r1 - t1) * (s2 - v2) - (r2 - t2) * (s1 - v1))
                + abs((r1 + t1) * (s2 - v2) - (r2 + t2) * (s1 - v1)))
    raise UnsupportedType("no coincidence formula for type 2")


def coincidence_klein_klein(f1: SurfaceHom, f2: SurfaceHom) -> int:
    """N(f1, f2) for f_i: a -> a^r_i, b -> a^s_i b^t_i."""
    for f in (f1, f2):
        if f.img_a.n != 0:
            raise UnsupportedForm(f"a must map to a power of a, got {tuple(f.img_a)}")
    return abs(f1.img_b.n - f2.img_b.n) * max(abs(f1.img_a.m), abs(f2.img_a.m))


def nielsen_via_coincidence(d: MapDescriptor) -> int:
    cls = classify(d)
    if cls is MapClass.SPLIT:
        raise SplitMap("both generator images are pure braids")
    f1, _ = lift_factors(d)
    q = COVERINGS[cls].hom
    if f1.domain is Domain.TORUS:
        return coincidence_torus_klein(f1, q)
    return coincidence_klein_klein(f1, q)


@dataclass(frozen=True)
class NielsenReport:
    n_formula: int
    n_coincidence: int
    branch: str
    map_class: MapClass
    zero: bool

    @property
    def agree(self) -> bool:
        return self.n_formula == self.n_coincidence


def nielsen_report(d: MapDescriptor) -> NielsenReport:
    if not d.valid:
        raise InvalidMap("alpha_hat * beta_hat * alpha_hat != beta_hat")
    p = extract_params(d)
    return NielsenReport(
        n_formula=nielsen_number(p),
        n_coincidence=nielsen_via_coincidence(d),
        branch=nielsen_branch(p),
        map_class=p.map_class,
        zero=is_nielsen_zero(p),
    )
