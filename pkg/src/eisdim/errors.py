"""Exception types shared across the package."""


class InvalidLabel(ValueError):
    """A representation label violates its invariants (entry < 1, bad rank)."""


class LengthMismatch(InvalidLabel):
    """A label has the wrong number of entries for its group."""


class NegativeDynkinLabel(InvalidLabel):
    """A Dynkin label entry is negative."""


class RankTooSmall(ValueError):
    """The operation needs SU(N) with N >= 3."""


class TermCapExceeded(Exception):
    """The literal term-by-term enumeration would exceed the term cap.

    Callers should fall back to the aggregated route, which computes the
    same value without materializing every chain.
    """
