"""Exception hierarchy shared by the algebra, map and CLI layers."""


class KleinBraidError(Exception):
    """Base class for all package errors."""


class NotPure(KleinBraidError, ValueError):
    """A projection was applied to a braid whose sigma-exponent is 1."""


class InvalidMap(KleinBraidError, ValueError):
    """The descriptor does not satisfy alpha*beta*alpha == beta."""


class SplitMap(KleinBraidError, ValueError):
    """Both generator images are pure; the 2-valued map splits."""


class BadParity(KleinBraidError, ValueError):
    """A fixture parameter that must be odd was even."""


class Unclassifiable(KleinBraidError, ValueError):
    """A torus-to-Klein homomorphism matches none of the four based forms."""


class UnsupportedType(KleinBraidError, ValueError):
    """No coincidence formula is available for this homotopy type."""


class UnsupportedForm(KleinBraidError, ValueError):
    """A Klein-to-Klein homomorphism is not of the form a -> a^r, b -> a^s b^t."""


class WordSyntaxError(KleinBraidError, ValueError):
    """Malformed braid word; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class ExponentOverflow(KleinBraidError, ValueError):
    """An exponent in a braid word exceeds the accepted magnitude."""
