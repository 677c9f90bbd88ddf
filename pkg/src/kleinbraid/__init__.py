"""Exact arithmetic in the 2-strand braid group of the Klein bottle and
Nielsen numbers of 2-valued non-split self-maps of the Klein bottle."""

from .braid import (
    GENERATORS,
    IDENTITY,
    SIGMA,
    BraidElem,
    b_inv,
    b_mul,
    b_pow,
    is_pure,
    pr1,
    pr2,
    theta,
)
from .errors import (
    BadParity,
    ExponentOverflow,
    InvalidMap,
    KleinBraidError,
    NotPure,
    SplitMap,
    Unclassifiable,
    UnsupportedForm,
    UnsupportedType,
    WordSyntaxError,
)
from .klein import KleinElem, eval_word, k_inv, k_mul, k_pow
from .lift import (
    COVERINGS,
    SurfaceHom,
    TorusHomType,
    bu_fails_klein,
    bu_fails_torus,
    check_constraints,
    classify_torus_hom,
    closed_form_f1,
    lift_factors,
    lift_images,
)
from .maps import (
    TRIVIAL_A,
    MapClass,
    MapDescriptor,
    MapParams,
    classify,
    extract_params,
    fixture_B0_even,
    fixture_B0_odd,
    is_homomorphism,
)
from .nielsen import (
    NielsenReport,
    coincidence_klein_klein,
    coincidence_torus_klein,
    is_nielsen_zero,
    nielsen_number,
    nielsen_numbers,
    nielsen_report,
    nielsen_via_coincidence,
)
from .syntax import parse_braid, parse_map_file, print_braid
from .words import A2, B2, FreeWord, concat, exp_sum, invert, substitute

__version__ = "0.1.0"
