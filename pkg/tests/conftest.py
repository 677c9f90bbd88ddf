import itertools
import random

import pytest
from hypothesis import strategies as st

from kleinbraid import (
    GENERATORS,
    IDENTITY,
    SIGMA,
    BraidElem,
    FreeWord,
    KleinElem,
    MapClass,
    MapDescriptor,
    b_inv,
    b_mul,
    b_pow,
    fixture_B0_even,
    fixture_B0_odd,
    is_homomorphism,
)
from kleinbraid.words import reduce

LETTERS = (1, -1, 2, -2)
FIXTURE_RANGE = range(-3, 4)
ODD_Z = (-5, -3, -1, 1, 3, 5)


def free_words(max_len=6):
    return st.lists(st.sampled_from(LETTERS), max_size=max_len).map(lambda l: FreeWord(tuple(l)))


def klein_elems(bound=4):
    return st.builds(KleinElem, st.integers(-bound, bound), st.integers(-bound, bound))


def braid_elems(max_len=6, bound=4, k=st.integers(0, 1)):
    return st.builds(BraidElem, free_words(max_len), klein_elems(bound), k)


def random_word(rng, max_len=6):
    return FreeWord(reduce(rng.choice(LETTERS) for _ in range(rng.randint(0, max_len))))


def random_braid(rng, max_len=6, bound=4, k=None):
    return BraidElem(
        random_word(rng, max_len),
        KleinElem(rng.randint(-bound, bound), rng.randint(-bound, bound)),
        rng.randint(0, 1) if k is None else k,
    )


def prod(*xs):
    out = IDENTITY
    for x in xs:
        out = b_mul(out, x)
    return out


def relations():
    g = GENERATORS
    a1, b1, a2, b2, s = (g[k] for k in ("a1", "b1", "a2", "b2", "s"))
    i = b_inv
    s2 = b_pow(s, 2)
    return [
        ("1: a1 a2 = a2 a1", prod(a1, a2), prod(a2, a1)),
        ("2: a1 b2 a1^-1 = a2^2 b2", prod(a1, b2, i(a1)), prod(a2, a2, b2)),
        ("3: b1 a2 b1^-1 = a2^-1", prod(b1, a2, i(b1)), i(a2)),
        ("4: b1 b2 b1^-1 = a2 b2 a2", prod(b1, b2, i(b1)), prod(a2, b2, a2)),
        ("5: a1 b1 a1 b1^-1 = 1", prod(a1, b1, a1, i(b1)), IDENTITY),
        ("6: s^2 = b2^-1 a2 b2 a2", prod(s, s), prod(i(b2), a2, b2, a2)),
        ("7: s^-1 a1 s = a1", prod(i(s), a1, s), a1),
        ("8: s^-1 b1 s = s^-2 b1", prod(i(s), b1, s), prod(i(s2), b1)),
        ("9: s^-1 a2 s = a2^-1 s^2 a1", prod(i(s), a2, s), prod(i(a2), s2, a1)),
        ("10: s^-1 b2 s = s^-2 b2^-1 b1", prod(i(s), b2, s), prod(i(s2), i(b2), b1)),
    ]


RELATIONS = relations()


def sigma_b1_power_pair(s):
    """((s^-1 b1 s)^s, s^(-1 + (-1)^s) b1^s) as two normal forms."""
    sig, b1 = GENERATORS["s"], GENERATORS["b1"]
    lhs = b_pow(prod(b_inv(sig), b1, sig), s)
    rhs = prod(b_pow(sig, -2 if s % 2 else 0), b_pow(b1, s))
    return lhs, rhs


def all_fixtures():
    out = []
    for x, y in itertools.product(FIXTURE_RANGE, FIXTURE_RANGE):
        for z in ODD_Z:
            for l in FIXTURE_RANGE:
                out.append((("b0-even", x, y, z, l), fixture_B0_even(x, y, z, l)))
            out.append((("b0-odd", x, y, z), fixture_B0_odd(x, y, z)))
    return out


def _type_a_seeds():
    # exhaustive search over small pure alpha and non-pure beta
    words = sorted({reduce(t) for n in range(3) for t in itertools.product(LETTERS, repeat=n)},
                   key=lambda t: (len(t), t))
    gs = [KleinElem(r, s) for r in range(-2, 3) for s in range(-2, 3)]
    alphas = [BraidElem(FreeWord(w), g, 0) for w in words if len(w) <= 1 for g in gs]
    betas = [BraidElem(FreeWord(w), g, 1) for w in words for g in gs]
    found = []
    for a in alphas:
        for b in betas:
            d = MapDescriptor(a, b)
            if is_homomorphism(d):
                found.append(d)
    return found


def _transform(d, rng):
    """Apply a validity-preserving move: automorphism of pi1(K) or conjugation."""
    a, b = d.alpha_hat, d.beta_hat
    move = rng.randrange(4)
    if move == 0:
        return MapDescriptor(b_inv(a), b)
    if move == 1:
        return MapDescriptor(a, b_inv(b))
    if move == 2:
        return MapDescriptor(a, b_mul(b_pow(a, rng.randint(-2, 2)), b))
    g = random_braid(rng, max_len=3, bound=2)
    gi = b_inv(g)
    return MapDescriptor(b_mul(b_mul(g, a), gi), b_mul(b_mul(g, b), gi))


def build_corpus(seed=12345, n_random=300):
    """Valid non-split descriptors: fixtures, brute-forced type A maps, and
    random images of those under automorphisms of pi1(K) and conjugation."""
    rng = random.Random(seed)
    fixtures = [d for _, d in all_fixtures()]
    # beta -> alpha beta is an automorphism of pi1(K); it turns B0 into B1
    b1 = [MapDescriptor(d.alpha_hat, b_mul(d.alpha_hat, d.beta_hat)) for d in fixtures[::4]]
    seeds = fixtures + b1 + [MapDescriptor(IDENTITY, SIGMA)] + _type_a_seeds()
    corpus = list(seeds)
    for _ in range(n_random):
        d = rng.choice(seeds)
        for _ in range(rng.randint(1, 3)):
            d = _transform(d, rng)
        corpus.append(d)
    return [d for d in corpus if (d.alpha_hat.k, d.beta_hat.k) != (0, 0)]


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def fixtures_grid():
    return all_fixtures()


def count_classes(descs):
    from kleinbraid import classify
    counts = {c: 0 for c in MapClass}
    for d in descs:
        counts[classify(d)] += 1
    return counts


# ------------------------------------------------------------ acceptance log

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
