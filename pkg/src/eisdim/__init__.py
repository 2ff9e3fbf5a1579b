"""Exact SU(N) irrep dimensions three ways, cross-verified.

Routes: the closed lattice form D(P1,P2) = P1*P2*(P1+P2)/2 = Im(z**3)/(3*sqrt(3))
on the Eisenstein lattice for SU(3), the branching chain SU(N) -> ... -> SU(3)
summed through that lattice form (aggregated or fully literal), and the Weyl
product formula as an independent oracle.  All arithmetic is exact.
"""

from .branching import (
    BranchMultiset,
    branch_step,
    chain_multiplicity_mass,
    su3_content,
    summation_count,
)
from .dimensions import (
    DEFAULT_TERM_CAP,
    VerificationReport,
    dim_nested_literal,
    dim_via_eisenstein,
    verify,
    verify_sweep,
)
from .eisenstein import OMEGA, ONE, ZERO, EisensteinInt, lattice_number
from .errors import (
    InvalidLabel,
    LengthMismatch,
    NegativeDynkinLabel,
    RankTooSmall,
    TermCapExceeded,
)
from .irrep import IrrepLabel, label_to_eisenstein, su2_dim, su3_dim, weyl_dim
from .kernels import kernel_backend

__version__ = "0.1.0"

__all__ = [
    "BranchMultiset",
    "DEFAULT_TERM_CAP",
    "EisensteinInt",
    "InvalidLabel",
    "IrrepLabel",
    "LengthMismatch",
    "NegativeDynkinLabel",
    "OMEGA",
    "ONE",
    "RankTooSmall",
    "TermCapExceeded",
    "VerificationReport",
    "ZERO",
    "branch_step",
    "chain_multiplicity_mass",
    "dim_nested_literal",
    "dim_via_eisenstein",
    "kernel_backend",
    "label_to_eisenstein",
    "lattice_number",
    "su2_dim",
    "su3_dim",
    "su3_content",
    "summation_count",
    "verify",
    "verify_sweep",
    "weyl_dim",
]
