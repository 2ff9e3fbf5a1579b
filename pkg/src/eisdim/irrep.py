"""SU(N) irrep labels and the independent Weyl-product dimension oracle.

Labels are kept internally in the 1-based convention (P1, ..., P_{N-1}),
every entry >= 1; the more common Dynkin labels (entries >= 0) are accepted
at the boundary and shifted by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable

from .eisenstein import EisensteinInt
from .errors import InvalidLabel, LengthMismatch, NegativeDynkinLabel


@dataclass(frozen=True, order=True)
class IrrepLabel:
    """An SU(n) irrep as (P1, ..., P_{n-1}) with every Pi >= 1."""

    n: int
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        if self.n < 2:
            raise InvalidLabel(f"SU({self.n}) is not supported; need n >= 2")
        if len(self.p) != self.n - 1:
            raise LengthMismatch(
                f"SU({self.n}) needs {self.n - 1} labels, got {len(self.p)}"
            )
        if any(x < 1 for x in self.p):
            raise InvalidLabel(f"labels must all be >= 1, got {self.p}")

    @classmethod
    def from_dynkin(cls, n: int, dynkin: Iterable[int]) -> IrrepLabel:
        """Build a label from Dynkin entries a_i >= 0 via P_i = a_i + 1.

        >>> IrrepLabel.from_dynkin(3, [1, 0]).p
        (2, 1)
        """
        d = tuple(dynkin)
        if len(d) != n - 1:
            raise LengthMismatch(f"SU({n}) needs {n - 1} Dynkin labels, got {len(d)}")
        if any(x < 0 for x in d):
            raise NegativeDynkinLabel(f"Dynkin labels must be >= 0, got {d}")
        return cls(n, tuple(x + 1 for x in d))

    @property
    def dynkin(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.p)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.p) + ")"


def su2_dim(p1: int) -> int:
    """Dimension of the SU(2) irrep (P1): just P1."""
    if p1 < 1:
        raise InvalidLabel(f"need P1 >= 1, got {p1}")
    return p1


def su3_dim(p1: int, p2: int) -> int:
    """Dimension of the SU(3) irrep (P1, P2): P1*P2*(P1 + P2)/2.

    Matches lattice_number(P1 + P2, P2); that equality is the triangular
    lattice identity the whole package is built around.
    """
    if p1 < 1 or p2 < 1:
        raise InvalidLabel(f"need P1, P2 >= 1, got ({p1}, {p2})")
    product = p1 * p2 * (p1 + p2)
    assert product % 2 == 0
    return product // 2


def weyl_dim(label: IrrepLabel) -> int:
    """Weyl product formula, the oracle the other routes are checked against.

    dim = prod over 1 <= i <= j <= N-1 of (P_i + ... + P_j),
    divided by 1! * 2! * ... * (N-1)!.  The division is provably exact and
    performed once on big integers.
    """
    p = label.p
    m = len(p)
    prefix = [0]
    for x in p:
        prefix.append(prefix[-1] + x)
    num = 1
    for i in range(m):
        for j in range(i, m):
            num *= prefix[j + 1] - prefix[i]
    den = 1
    for k in range(1, m + 1):
        den *= factorial(k)
    q, r = divmod(num, den)
    assert r == 0, f"Weyl product not divisible by superfactorial for {label}"
    return q


def label_to_eisenstein(p1: int, p2: int) -> EisensteinInt:
    """The lattice point (P1 + P2) + P2*w assigned to an SU(3) label.

    In the plane this is (P1 + P2/2) + i*P2*sqrt(3)/2, the point whose cubed
    imaginary part encodes the dimension of (P1, P2).
    """
    return EisensteinInt(p1 + p2, p2)
