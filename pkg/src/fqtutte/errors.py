"""Exception types shared across the package.

Everything derives from FqTutteError so callers can catch the whole
family; the CLI maps parse errors and guard violations to distinct
exit codes.
"""


class FqTutteError(Exception):
    pass


class NotPrimeError(FqTutteError):
    """The claimed characteristic is not a prime."""


class TooLargeError(FqTutteError):
    """An enumeration or resource guard was exceeded."""


class CharMismatchError(FqTutteError):
    """Field embedding between incompatible characteristics."""


class ParseError(FqTutteError):
    """Malformed input text."""


class RankDeficientError(FqTutteError):
    """A matrix that must have full row rank does not."""


class TooManyColumnsError(FqTutteError):
    """Subset enumeration guard (brute-force oracle)."""


class SizeMismatchError(FqTutteError):
    """Operands of a transform do not live on the same lattice."""


class WeightTooHighError(FqTutteError):
    """A column has three or more nonzero entries."""


class ZeroColumnError(FqTutteError):
    """An all-zero column where the algorithm forbids one."""


class InternalError(FqTutteError):
    """Broken invariant inside an algorithm (e.g. inexact division)."""


class UnusedVariableError(FqTutteError):
    """A CNF variable occurs in no clause."""


class NotBipartiteError(FqTutteError):
    """A transformer requires a bipartite constraint graph."""


class ModulusTooSmallError(FqTutteError):
    """Modulus too small for the modular constraint construction."""


class OrderMismatchError(FqTutteError):
    """Field order does not match the modulus it must extend."""


class NoSidonSetError(FqTutteError):
    """No Sidon set of the requested size was found."""


class InhomogeneousError(FqTutteError):
    """A constraint system that must be homogeneous is not."""
