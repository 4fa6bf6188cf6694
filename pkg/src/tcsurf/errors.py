"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """Base class for structural errors in algebra construction or use."""


class HomogeneityError(AlgebraError):
    """A relation or element was required to be homogeneous and is not."""


class MismatchError(AlgebraError):
    """Operands live over different fields, algebras, or generator sets."""


class NotPoincareDualityError(AlgebraError):
    """The pairing into the requested top class is degenerate."""


class ModelInconsistencyError(AlgebraError):
    """A model postcondition failed; the constructed object is wrong."""


class CertificateError(AlgebraError):
    """A certificate product vanished or an expected witness is absent."""


class TruncationError(AlgebraError):
    """An operation needs degrees beyond the constructed range."""


class ResourceBudgetError(AlgebraError):
    """A construction would exceed the configured monomial budget."""


class UnsupportedModelError(AlgebraError):
    """Parameters outside the range any builder supports."""
