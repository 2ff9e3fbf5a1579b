"""Eisenstein-route dimensions and the three-way verification harness.

Two routes through the lattice identity: the aggregated route evaluates the
SU(3) content once per distinct label, the literal route walks every single
branching chain (the fully nested sum) and is capped because its term count
grows like a product over the chain.  Both must equal the Weyl oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import kernels
from .branching import chain_multiplicity_mass, summation_count, _su3_counts
from .eisenstein import lattice_number
from .errors import InvalidLabel, RankTooSmall, TermCapExceeded
from .irrep import IrrepLabel, weyl_dim

DEFAULT_TERM_CAP = 10**6


@dataclass(frozen=True)
class VerificationReport:
    """Per-label record of the three dimension routes and their agreement."""

    label: IrrepLabel
    dim_weyl: int
    dim_eisenstein: int
    dim_literal: int | None  # None when the term cap was exceeded
    agree: bool
    term_count: int
    summation_indices: int

    @property
    def literal_skipped(self) -> bool:
        return self.dim_literal is None


def _require_rank(label: IrrepLabel) -> None:
    if label.n < 3:
        raise RankTooSmall(f"need an SU(n) label with n >= 3, got SU({label.n})")


def dim_via_eisenstein(label: IrrepLabel) -> int:
    """Dimension as a lattice-number sum over the aggregated SU(3) content.

    Each SU(3) leaf (Q1, Q2) contributes mult * N(Q1 + Q2, Q2); for n = 3
    this collapses to the closed form Q1*Q2*(Q1 + Q2)/2 directly.
    """
    _require_rank(label)
    return sum(
        mult * lattice_number(q1 + q2, q2)
        for (q1, q2), mult in _su3_counts(label.p).items()
    )


def dim_nested_literal(label: IrrepLabel, term_cap: int = DEFAULT_TERM_CAP) -> int:
    """Dimension by brute force: one lattice term per branching chain.

    Validates the aggregated route term for term.  Raises TermCapExceeded
    once more than term_cap chains would be enumerated.
    """
    _require_rank(label)
    if term_cap < 1:
        raise ValueError(f"term_cap must be >= 1, got {term_cap}")
    total, _ = kernels.literal_dimension_sum(label.p, term_cap)
    return total


def verify(label: IrrepLabel, term_cap: int = DEFAULT_TERM_CAP) -> VerificationReport:
    """Run all three routes on one label and report their agreement.

    Disagreement is reported, never raised, so sweeps always complete; a
    capped literal route is recorded as absent and excluded from the
    agreement check.
    """
    _require_rank(label)
    dw = weyl_dim(label)
    de = dim_via_eisenstein(label)
    try:
        dl, terms = kernels.literal_dimension_sum(label.p, term_cap)
    except TermCapExceeded:
        dl = None
        terms = chain_multiplicity_mass(label)
    agree = dw == de and (dl is None or dl == dw)
    return VerificationReport(
        label=label,
        dim_weyl=dw,
        dim_eisenstein=de,
        dim_literal=dl,
        agree=agree,
        term_count=terms,
        summation_indices=summation_count(label.n),
    )


def verify_sweep(
    n: int, max_label: int, term_cap: int = DEFAULT_TERM_CAP
) -> list[VerificationReport]:
    """Verify every SU(n) label with 1 <= P_i <= max_label.

    Reports come back in lexicographic label order; max_label**(n-1) of them.
    """
    if n < 3:
        raise RankTooSmall(f"need n >= 3, got {n}")
    if max_label < 1:
        raise InvalidLabel(f"max_label must be >= 1, got {max_label}")
    return [
        verify(IrrepLabel(n, p), term_cap)
        for p in product(range(1, max_label + 1), repeat=n - 1)
    ]
