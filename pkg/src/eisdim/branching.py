"""Weyl branching SU(N) -> SU(N-1) and the reduction chain down to SU(3).

The single step decomposes (P1, ..., P_{N-1}) into the multiset of SU(N-1)
labels (P1 - k1 + k2, ..., P_{N-2} - k_{N-2} + k_{N-1}) over all k-tuples
with 1 <= k_j <= P_j.  Chaining steps and aggregating multiplicities at
every level gives the SU(3) content without enumerating the (exponentially
many) individual chains.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import cache
from typing import Iterator

from . import kernels
from .errors import RankTooSmall
from .irrep import IrrepLabel


class BranchMultiset(Mapping):
    """Labels of one group SU(group) mapped to multiplicities >= 1.

    Iteration is in sorted label order, so output built from a
    BranchMultiset is reproducible.
    """

    def __init__(self, group: int, entries: Mapping[IrrepLabel, int]):
        for label, mult in entries.items():
            if label.n != group:
                raise ValueError(f"label {label} is not an SU({group}) label")
            if mult < 1:
                raise ValueError(f"multiplicity for {label} must be >= 1, got {mult}")
        self.group = group
        self._entries = dict(sorted(entries.items()))

    def __getitem__(self, label: IrrepLabel) -> int:
        return self._entries[label]

    def __iter__(self) -> Iterator[IrrepLabel]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def total_multiplicity(self) -> int:
        return sum(self._entries.values())

    def __repr__(self) -> str:
        inner = ", ".join(f"{label}: {mult}" for label, mult in self._entries.items())
        return f"BranchMultiset(SU({self.group}), {{{inner}}})"


def _require_rank(label: IrrepLabel) -> None:
    if label.n < 3:
        raise RankTooSmall(f"SU({label.n}) has no branching target here; need n >= 3")


def branch_step(label: IrrepLabel) -> BranchMultiset:
    """One reduction step SU(n) -> SU(n-1), multiplicities aggregated."""
    _require_rank(label)
    counts = kernels.branch_child_counts(label.p)
    return BranchMultiset(
        label.n - 1,
        {IrrepLabel(label.n - 1, child): c for child, c in counts.items()},
    )


@cache
def _su3_counts(p: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    # Session-scoped memo; sublabels repeat massively across chains.
    if len(p) == 2:
        return {p: 1}
    acc: dict[tuple[int, ...], int] = {}
    for child, count in kernels.branch_child_counts(p).items():
        for leaf, sub in _su3_counts(child).items():
            acc[leaf] = acc.get(leaf, 0) + count * sub
    return acc


def su3_content(label: IrrepLabel) -> BranchMultiset:
    """SU(3) content of an SU(n) label: chain the branching down to SU(3).

    Multiplicities multiply along a chain and add across chains.  An SU(3)
    label is its own content with multiplicity 1.
    """
    _require_rank(label)
    return BranchMultiset(
        3,
        {IrrepLabel(3, leaf): m for leaf, m in _su3_counts(label.p).items()},
    )


@cache
def _chain_mass(p: tuple[int, ...]) -> int:
    if len(p) == 2:
        return 1
    return sum(
        count * _chain_mass(child)
        for child, count in kernels.branch_child_counts(p).items()
    )


def chain_multiplicity_mass(label: IrrepLabel) -> int:
    """Number of distinct branching chains from label down to SU(3).

    Equals the number of terms the fully nested literal sum would have.
    """
    _require_rank(label)
    return _chain_mass(label.p)


def summation_count(n: int) -> int:
    """(n+2)(n-3)/2, the number of summation indices across the whole chain.

    Step one carries n-1 indices, the next n-2, and so on down to the 3 of
    the SU(4) -> SU(3) step; the closed form sums that arithmetic series.
    For n = 3 there is no summation at all.
    """
    if n < 3:
        raise RankTooSmall(f"need n >= 3, got {n}")
    return (n + 2) * (n - 3) // 2
