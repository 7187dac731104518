"""Numerical tolerances shared across the package."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    norm: float = 1e-12
    hermitian: float = 1e-12
    trace: float = 1e-12
    min_eigenvalue: float = -1e-10
    # looser check applied to arbitrary matrices handed to the eigensolver
    eig_hermitian: float = 1e-10
    jacobi_offdiag: float = 1e-13
    jacobi_max_sweeps: int = 100
    clamp: float = 1e-12
    negative_error: float = 1e-10
    ckw_slack: float = 1e-10
    pair_symmetry: float = 1e-10


TOL = Tolerances()
