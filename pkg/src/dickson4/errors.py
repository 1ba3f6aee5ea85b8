"""Exception types raised across the package."""


class DicksonError(Exception):
    """Base class for every error raised by dickson4."""


class UnsupportedCharacteristic(DicksonError, ValueError):
    pass


class ReducibleModulus(DicksonError, ValueError):
    pass


class KindOutOfRange(DicksonError, ValueError):
    pass


class DegreeTooLarge(DicksonError, ValueError):
    pass


class OddDegree(DicksonError, ValueError):
    pass


class LengthMismatch(DicksonError, ValueError):
    pass


class InternalInconsistency(DicksonError, RuntimeError):
    """A value that must provably lie somewhere did not (a field-tower bug)."""


class CriterionDisagreement(DicksonError, RuntimeError):
    """Two permutation criteria returned different verdicts for the same (q, n)."""

    def __init__(self, q, n, verdicts):
        self.q = q
        self.n = n
        self.verdicts = dict(verdicts)
        shown = ", ".join(f"{k}={v}" for k, v in self.verdicts.items())
        super().__init__(f"criteria disagree at q={q}, n={n}: {shown}")


class IndexCoverageError(DicksonError, RuntimeError):
    """The moment recurrences did not assign every index in [1, q^2-1] exactly once."""
