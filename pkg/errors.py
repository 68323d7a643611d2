"""Exception hierarchy shared by every module.

InputError subclasses mean the caller asked for something invalid.
VerificationError subclasses mean a self-check failed, which is a bug.
"""


class CayleySpectraError(Exception):
    pass


# --- Input errors (exit code 1) ---

class InputError(CayleySpectraError):
    pass


class UsageError(InputError):
    pass


class NotPrime(InputError):
    pass


class InvalidPermutation(InputError):
    pass


class OrderCapExceeded(InputError):
    pass


class UnknownGroupName(InputError):
    pass


class NotNormal(InputError):
    pass


class NotAHook(InputError):
    pass


class SizeMismatch(InputError):
    pass


class PrimeDoesNotDivideOrder(InputError):
    pass


class NotPSolvable(InputError):
    pass


class NotSolvable(InputError):
    pass


class HypothesisNotMet(InputError):
    pass


class DimensionCap(InputError):
    pass


class CardinalityMismatch(InputError):
    pass


class NTooLarge(InputError):
    pass


# --- Verification errors (exit code 2) ---

class VerificationError(CayleySpectraError):
    pass


class CertificationFailed(VerificationError):
    pass


class IntegralityViolation(VerificationError):
    pass


class ConvergenceFailure(VerificationError):
    pass


class SpectrumMismatch(VerificationError):
    pass
