"""Pure-Python enumeration kernels.

These are the hot loops behind branching, the literal chain enumeration,
and lattice sweeps.  A compiled twin lives in _kernels_cy.pyx; the two must
agree exactly on every input (see tests/test_kernels.py).  Import through
eisdim.kernels, which picks the fastest available backend.
"""

from __future__ import annotations

from itertools import product

from .errors import TermCapExceeded

BACKEND = "pure"


def branch_child_counts(p: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """One SU(n) -> SU(n-1) step: child-label tuples with multiplicities.

    For every tuple (k_1, ..., k_{n-1}) with 1 <= k_j <= P_j, the child
    (P_1 - k_1 + k_2, ..., P_{n-2} - k_{n-2} + k_{n-1}) gains one count.
    Total mass is therefore the product of the P_j.
    """
    m = len(p)
    counts: dict[tuple[int, ...], int] = {}
    for ks in product(*(range(1, pj + 1) for pj in p)):
        child = tuple(p[j] - ks[j] + ks[j + 1] for j in range(m - 1))
        counts[child] = counts.get(child, 0) + 1
    return counts


def literal_dimension_sum(p: tuple[int, ...], term_cap: int) -> tuple[int, int]:
    """Chain every branching step down to SU(3) with no aggregation.

    Returns (dimension, term count) where each term is the lattice number
    of one final SU(3) label reached along one chain of k-tuples.  Raises
    TermCapExceeded as soon as more than term_cap terms would be needed.
    """
    total = 0
    terms = 0

    def descend(q: tuple[int, ...]) -> None:
        nonlocal total, terms
        if len(q) == 2:
            terms += 1
            if terms > term_cap:
                raise TermCapExceeded(
                    f"literal enumeration needs more than {term_cap} terms"
                )
            q1, q2 = q
            total += (q1 + q2) * q2 * q1 // 2
            return
        m = len(q)
        for ks in product(*(range(1, qj + 1) for qj in q)):
            descend(tuple(q[j] - ks[j] + ks[j + 1] for j in range(m - 1)))

    descend(tuple(p))
    return total, terms


def lattice_harmonic_grid(radius: int) -> list[tuple[int, int, int, int]]:
    """Rows (a, b, N(a,b), six-neighbor sum minus 6*N) for |a|,|b| <= radius.

    The last column is identically zero: the lattice number is discretely
    harmonic on the triangular lattice (neighbors z +- 1, z +- w, z +- (1+w)).
    """

    def ln(a: int, b: int) -> int:
        return a * b * (a - b) // 2

    rows = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            n = ln(a, b)
            check = (
                ln(a + 1, b)
                + ln(a - 1, b)
                + ln(a, b + 1)
                + ln(a, b - 1)
                + ln(a + 1, b + 1)
                + ln(a - 1, b - 1)
                - 6 * n
            )
            rows.append((a, b, n, check))
    return rows
