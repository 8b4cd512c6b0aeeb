"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`MorphoError`,
so callers (the CLI in particular) can tell user errors from bugs.
"""


class MorphoError(Exception):
    """Base class for all library errors."""


class InputError(MorphoError):
    """Bad user input: malformed grounds, objects, formulas, files."""


class CapabilityError(MorphoError):
    """The request is well-formed but beyond what can be computed."""


class GroundMismatch(InputError):
    pass


class InvalidGround(InputError):
    pass


class NotASubobject(InputError):
    pass


class UnknownElement(InputError):
    pass


class UnsupportedForgetMode(InputError):
    pass


class UnknownName(InputError):
    pass


class IncompatibleMode(InputError):
    pass


class UnsupportedStructure(InputError):
    pass


class NotCovered(InputError):
    pass


class UnknownWorld(InputError):
    pass


class UnknownProposition(InputError):
    pass


class UnknownSchema(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidStep(MorphoError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class PreconditionUnmet(MorphoError):
    pass


class TooLarge(CapabilityError):
    pass


class NoClosedForm(CapabilityError):
    pass


class NoAtoms(CapabilityError):
    pass
