"""Exception types shared across the package."""


class QuadrobError(Exception):
    """Base class for all package errors."""


class RingMismatchError(QuadrobError):
    """Operands live in different rings."""


class ParseError(QuadrobError):
    """Syntax error in the polynomial grammar, with a character position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(QuadrobError):
    """A variable name is not part of the ring."""

    def __init__(self, name, position=None):
        msg = f"unknown variable {name!r}"
        if position is not None:
            msg += f" (at position {position})"
        super().__init__(msg)
        self.name = name
        self.position = position


class NotInvertibleError(QuadrobError):
    """Division by a non-invertible element of the coefficient field."""


class CharacteristicError(QuadrobError):
    """Operation requires 1/2, but the field has characteristic 2."""


class VerificationError(QuadrobError):
    """An exact certificate check failed; carries the nonzero witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotMemberError(VerificationError):
    """A required ideal membership failed; witness is the nonzero normal form."""


class MonicSearchError(QuadrobError):
    """make_monic exhausted its attempts."""

    def __init__(self, attempts):
        super().__init__(f"no monic generator found after {attempts} attempts")
        self.attempts = attempts


class InputError(QuadrobError):
    """Malformed input file or CLI argument."""
