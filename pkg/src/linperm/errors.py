"""Exception hierarchy shared by all linperm modules."""


class LinpermError(Exception):
    """Base class for all errors raised by this package."""


class SpecMismatch(LinpermError):
    """Operands belong to different field/ring specs."""


class ZeroInverse(LinpermError):
    """Multiplicative inverse of zero requested."""


class ZeroOrder(LinpermError):
    """Multiplicative order of zero requested."""


class NotCoprime(LinpermError):
    """Arguments required to be coprime are not."""


class BothZero(LinpermError):
    """gcd/egcd of two zero polynomials."""


class NotAUnit(LinpermError):
    """Ring inverse of a non-unit requested."""


class NotAPermutation(LinpermError):
    """Operation requires a linear permutation."""


class CoefficientsNotInBaseField(LinpermError):
    """Operation requires all coefficients in the base field F_q."""


class ConditionNotMet(LinpermError):
    """A hypothesis of the closed-form construction fails."""


class BadInput(LinpermError):
    """Malformed argument (e.g. composite where a prime is required)."""


class ZeroCoefficient(LinpermError):
    """Binomial test requires both coefficients nonzero."""


class ZeroNotInA(LinpermError):
    """A-complete check requires 0 to be a member of A."""


class ZeroAlpha(LinpermError):
    """Shift operations require alpha != 0."""


class HypothesisViolated(LinpermError):
    """A stated hypothesis of the shifted-inverse results fails."""


class OddOrder(LinpermError):
    """Half-order involution requires (q-1)*n to be even."""


class TooLarge(LinpermError):
    """Brute-force enumeration would exceed its cap."""


class NotPrimitive(LinpermError):
    """Discrete log base is not a primitive element."""


class LengthMismatch(LinpermError):
    """Component vector does not align with the idempotent basis."""


class InternalError(LinpermError):
    """An invariant that should be unconditionally true failed."""
