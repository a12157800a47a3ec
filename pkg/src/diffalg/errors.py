"""Exception types shared across the package."""


class DiffAlgError(Exception):
    """Base class for all mathematical errors raised by this package."""


class UnitIdealError(DiffAlgError):
    """An inconsistent system: a nonzero constant was derived, so the
    ideal in question is the unit ideal."""


class ChainError(DiffAlgError):
    """A polynomial sequence does not satisfy the ascending-chain (or
    triangular-set) conditions."""


class RankingError(DiffAlgError):
    """A variable is outside the ranking's universe, or a ranking of the
    wrong shape was supplied."""


class EliminationError(DiffAlgError):
    """The elimination backend could not produce a usable eliminant
    (instability after retries, or a zero/unit ideal)."""


class VerificationError(DiffAlgError):
    """A structural property that must hold for a Chow form failed on the
    computed data; this signals a pipeline bug or a bad input assertion."""
