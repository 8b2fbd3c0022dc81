"""Exception hierarchy. Everything raised on purpose derives from DiracIndexError."""


class DiracIndexError(Exception):
    pass


class IllegalParams(DiracIndexError, ValueError):
    """Group parameters outside the family-legal range."""


class RankCapExceeded(DiracIndexError, ValueError):
    """Requested group exceeds the configured rank cap."""


class EnumerationCapExceeded(DiracIndexError, ValueError):
    """A Weyl group (or similar finite set) is too large to enumerate."""


class CapExceeded(DiracIndexError, ValueError):
    """A configurable size cap (linear algebra, subset enumeration, ...) was hit."""


class DimensionMismatch(DiracIndexError, ValueError):
    """Vector / polynomial arities do not agree."""


class ZeroForm(DiracIndexError, ValueError):
    """A linear form with no nonzero coefficient was supplied."""


class NotDominantIntegral(DiracIndexError, ValueError):
    """Highest weight is not dominant integral for the positive system."""


class SingularDirection(DiracIndexError, ValueError):
    """Series evaluation direction y lies on a root hyperplane."""


class SingularParameter(DiracIndexError, ValueError):
    """Harish-Chandra parameter is singular where regularity is required."""


class OffLattice(DiracIndexError, ValueError):
    """Weight does not lie on the required lattice coset."""


class NotInC(DiracIndexError, ValueError):
    """Weight is outside the closed dominant chamber for the compact group."""


class IndexOutOfRange(DiracIndexError, ValueError):
    """Chamber index outside its legal range."""


class InvalidPartition(DiracIndexError, ValueError):
    """Partition fails the nilpotent-orbit parity rules for the type."""


class UnsupportedFamily(DiracIndexError, ValueError):
    """No catalog entry for this group family."""


class UnknownSuite(DiracIndexError, ValueError):
    """Unrecognized verification suite name."""


class UnsupportedFormat(DiracIndexError, ValueError):
    """Unrecognized output format."""
