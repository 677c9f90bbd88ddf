"""Plain-ASCII braid words and map files.

Grammar::

    word := "1" | term+
    term := gen ("^" int)?
    gen  := a1 | b1 | a2 | b2 | s | A1 | B1 | A2 | B2 | S

Uppercase generators are inverses (``A1 == a1^-1``) and ``s`` is sigma.
Whitespace between terms is optional.  A map file holds ``alpha = <word>``
and ``beta = <word>`` lines; lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from itertools import groupby

from .braid import IDENTITY, SIGMA_SQ, BraidElem, b_mul
from .errors import ExponentOverflow, WordSyntaxError
from .klein import KleinElem
from .maps import MapDescriptor
from .words import A2, B2, FreeWord

MAX_EXPONENT = 10_000

_TERM = re.compile(r"\s*([ab][12]|[AB][12]|[sS])(?:\^([+-]?\d+))?")
_LETTER_NAMES = {A2: "a2", -A2: "A2", B2: "b2", -B2: "B2"}


def generator_power(name: str, e: int) -> BraidElem:
    """Normal form of ``name^e`` built directly, without repeated products."""
    if name.isupper():
        name, e = name.lower(), -e
    if name == "a1":
        return BraidElem(g=KleinElem(e, 0))
    if name == "b1":
        return BraidElem(g=KleinElem(0, e))
    if name in ("a2", "b2"):
        return BraidElem(FreeWord.power(A2 if name == "a2" else B2, e))
    # sigma^e = (sigma^2)^q sigma^r with r in {0, 1}
    q, r = divmod(e, 2)
    letters = SIGMA_SQ.letters if q >= 0 else (~SIGMA_SQ).letters
    return BraidElem(FreeWord(letters * abs(q)), KleinElem(0, 0), r)


def tokenize(text: str) -> list[tuple[str, int, int]]:
    """Split a word into ``(generator, exponent, position)`` triples."""
    if text.strip() == "1":
        return []
    if not text.strip():
        raise WordSyntaxError("empty word (use '1' for the identity)", 0)
    terms = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TERM.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected {text[bad]!r}", bad)
        e = 1 if m.group(2) is None else int(m.group(2))
        if abs(e) > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT} at position {m.start(2)}")
        terms.append((m.group(1), e, m.start(1)))
        pos = m.end()
    return terms


def parse_braid(text: str) -> BraidElem:
    out = IDENTITY
    for name, e, _ in tokenize(text):
        out = b_mul(out, generator_power(name, e))
    return out


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def print_braid(x: BraidElem) -> str:
    parts = []
    for letter, run in groupby(x.w.letters):
        parts.append(_power(_LETTER_NAMES[letter], len(list(run))))
    r, s = x.g
    if r:
        parts.append(_power("a1", r))
    if s:
        parts.append(_power("b1", s))
    if x.k:
        parts.append("s")
    return " ".join(parts) if parts else "1"


def format_word(w: FreeWord) -> str:
    return print_braid(BraidElem(w))


def parse_map_file(text: str) -> MapDescriptor:
    found: dict[str, BraidElem] = {}
    offset = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        start = offset
        offset += len(line) + 1
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in ("alpha", "beta"):
            raise WordSyntaxError(f"line {lineno}: expected 'alpha = <word>' or 'beta = <word>'", start)
        if key in found:
            raise WordSyntaxError(f"line {lineno}: duplicate {key}", start)
        try:
            found[key] = parse_braid(value)
        except WordSyntaxError as exc:
            raise WordSyntaxError(f"line {lineno}: {exc.args[0].rsplit(' at position', 1)[0]}",
                                  start + line.index("=") + 1 + exc.pos) from None
    missing = [k for k in ("alpha", "beta") if k not in found]
    if missing:
        raise WordSyntaxError(f"missing {', '.join(missing)}", len(text))
    return MapDescriptor(found["alpha"], found["beta"])


def format_map_file(d: MapDescriptor, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"alpha = {print_braid(d.alpha_hat)}")
    lines.append(f"beta = {print_braid(d.beta_hat)}")
    return "\n".join(lines) + "\n"
