"""Exception types raised by entroflow operations."""


class EntroflowError(Exception):
    """Base class for all entroflow errors."""


# -- linear algebra ----------------------------------------------------------

class NotHermitian(EntroflowError):
    """Input is not square or deviates from its conjugate transpose."""


class NoConvergence(EntroflowError):
    """Jacobi iteration exceeded its sweep budget."""


class ShapeMismatch(EntroflowError):
    """Operands do not have compatible shapes."""


class DimensionOverflow(EntroflowError):
    """Result dimension would exceed the configured cap."""


# -- state construction ------------------------------------------------------

class NotUnitTrace(EntroflowError):
    """Trace deviates from 1 beyond tolerance."""


class NotPositive(EntroflowError):
    """An eigenvalue (or diagonal probability) is negative beyond tolerance."""


class ZeroVector(EntroflowError):
    """A state vector with zero norm cannot be normalized."""


class RankOutOfRange(EntroflowError):
    """Requested rank is not in [1, dim]."""


# -- composite systems -------------------------------------------------------

class IndexOutOfRange(EntroflowError):
    """A part index lies outside its part dimension."""


class PartitionMismatch(EntroflowError):
    """Operator dimension and partition layout disagree."""


class EmptyKeepSet(EntroflowError):
    """Partial trace must keep at least one part."""


class NotBipartite(EntroflowError):
    """Operation requires a partition with exactly two parts."""


class DimensionMismatch(EntroflowError):
    """Two objects that must share a dimension do not."""


# -- classical inequalities --------------------------------------------------

class NonPositiveInput(EntroflowError):
    """Scalar argument must be strictly positive."""


class LengthMismatch(EntroflowError):
    """Vector arguments must have equal length."""


class NonPositiveWeight(EntroflowError):
    """All weights must be strictly positive."""


class SizeMismatch(EntroflowError):
    """Vector and matrix sizes disagree."""


class NonPositiveProbability(EntroflowError):
    """Probabilities must be strictly positive for this lemma."""


class NonPositiveEntry(EntroflowError):
    """Joint table entries must be strictly positive for this lemma."""


# -- dynamics and drivers ----------------------------------------------------

class TooFewEvents(EntroflowError):
    """Second-law verification needs at least two measurement events."""


class ConfigParse(EntroflowError):
    """Run configuration file is malformed."""
