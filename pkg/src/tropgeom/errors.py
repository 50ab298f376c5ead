"""Exception hierarchy shared by every module."""


class TropicalError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class PrecisionExhausted(TropicalError):
    pass


class NotInValueGroup(TropicalError):
    pass


class NegativeValuation(TropicalError):
    pass


class ZeroPolynomial(TropicalError):
    pass


class ZeroCoordinate(TropicalError):
    pass


class DimensionMismatch(TropicalError):
    pass


class NoRoots(TropicalError):
    pass


class NotInTropicalVariety(TropicalError):
    pass


class InputError(TropicalError):
    """Malformed user input (CLI exit code 2)."""


class UnknownVariable(InputError):
    pass


class PuiseuxLiteralOutsideSpec(InputError):
    pass


class ParseError(InputError):
    """Syntax error at byte ``offset``; ``expected`` lists acceptable tokens."""

    def __init__(self, offset, expected, text=""):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.text = text
        super().__init__(
            f"syntax error at offset {offset}: expected {' or '.join(self.expected)}"
        )
