"""Exact arithmetic in the ring of Eisenstein integers Z[w].

An Eisenstein integer is a + b*w with integer a, b and w = (-1 + i*sqrt(3))/2
a primitive cube root of unity (w**3 = 1, w**2 = -1 - w).  The points a + b*w
form a triangular lattice in the complex plane.  Everything here is exact:
the imaginary part of any element is an integer multiple of sqrt(3)/2 and is
carried as that integer coefficient, never as a float.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EisensteinInt:
    """The lattice point a + b*w, stored as the coordinate pair (a, b)."""

    a: int
    b: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        # (a1 + b1 w)(a2 + b2 w) with w**2 reduced via w**2 = -1 - w.
        a1, b1 = self.a, self.b
        a2, b2 = other.a, other.b
        return EisensteinInt(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)

    def cube(self) -> EisensteinInt:
        """Closed form of (a + b*w)**3: (a**3 + b**3 - 3ab**2, 3ab(a - b))."""
        a, b = self.a, self.b
        return EisensteinInt(a**3 + b**3 - 3 * a * b * b, 3 * a * b * (a - b))

    def norm(self) -> int:
        """Ring norm a**2 - ab + b**2 = |a + b*w|**2, always >= 0."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def im_coeff(self) -> int:
        """c such that Im(a + b*w) = c * sqrt(3)/2; identical to b."""
        return self.b

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}w"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)


def lattice_number(a: int, b: int) -> int:
    """The integer a*b*(a - b)/2 attached to the lattice point a + b*w.

    Equals Im((a + b*w)**3) / (3*sqrt(3)); the cube's imaginary coefficient
    is 3ab(a - b), and dividing Im = coeff * sqrt(3)/2 by 3*sqrt(3) leaves
    coeff/6 = ab(a - b)/2.  Under a = P1 + P2, b = P2 this is the dimension
    of the SU(3) irrep (P1, P2).  Defined for all integers; ab(a - b) is
    always even, so the halving is exact (anything else is an internal
    defect, not a caller error).
    """
    product = a * b * (a - b)
    assert product % 2 == 0, f"ab(a-b) odd at ({a}, {b})"
    half = product // 2
    # Cross-check against the cube route while assertions are enabled.
    assert EisensteinInt(a, b).cube().im_coeff == 6 * half
    return half
