"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`CharCalcError`;
the CLI maps these to exit code 1 and parse failures to exit code 2.
"""


class CharCalcError(Exception):
    """Base class for domain errors."""


class ParseError(CharCalcError, ValueError):
    """Malformed root-system spec, weight string or JSON payload."""


class NotFiniteTypeError(CharCalcError, ValueError):
    """Cartan matrix is not of finite type."""


class NotARootError(CharCalcError, ValueError):
    pass


class EnumerationLimitError(CharCalcError):
    """The Weyl group is larger than the configured enumeration cap."""


class RootSystemMismatchError(CharCalcError, ValueError):
    pass


class PreconditionError(CharCalcError, ValueError):
    pass


class UnsupportedSimpleCharacterError(CharCalcError):
    """Raised when a simple character would need Kazhdan-Lusztig input."""


class NotVermaCombinationError(CharCalcError):
    """The character is not a finite integer combination of Verma characters."""


class NotACharacterError(CharCalcError):
    """Negative multiplicities where a genuine module character is required."""


class InfiniteDimensionalError(CharCalcError):
    pass
