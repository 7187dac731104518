"""Negativity, concurrence, and tangle bookkeeping for three-qubit states."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .config import TOL
from .tensor import (DensityOperator, hermitian_eigh, hermitian_eigenvalues, partial_trace,
                     partial_transpose, trace_norm)

log = logging.getLogger(__name__)

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)


def _clamp(value: float, what: str) -> float:
    if value < -TOL.negative_error:
        raise RuntimeError(f"{what} = {value!r} is negative beyond numerical noise")
    return value if value >= TOL.clamp else 0.0


def negativity(rho: DensityOperator, part: str | Iterable[str]) -> float:
    """``||rho^{T_part}||_1 - 1`` for the bipartition ``part`` vs the rest.

    Note the convention: a Bell pair has negativity 1, not 1/2.
    """
    labels = {part} if isinstance(part, str) else set(part)
    for label in labels:
        rho.layout.position(label)
    if not labels or labels == set(rho.layout.labels):
        raise ValueError(f"{sorted(labels)} is not a proper bipartition of {rho.layout.labels}")
    return _clamp(trace_norm(partial_transpose(rho, labels)) - 1.0, "negativity")


def _require_qubits(rho: DensityOperator, n: int):
    if rho.layout.dims != (2,) * n:
        raise ValueError(f"expected {n} qubits, got layout {rho.layout}")


def concurrence(rho: DensityOperator) -> float:
    """Wootters concurrence of a two-qubit state.

    The spectrum of ``rho @ rho_tilde`` equals that of the Hermitian matrix
    ``sqrt(rho) @ rho_tilde @ sqrt(rho)``, which keeps the computation inside
    the Hermitian eigensolver.
    """
    _require_qubits(rho, 2)
    w, v = hermitian_eigh(rho.matrix)
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    flipped = SPIN_FLIP @ rho.matrix.conj() @ SPIN_FLIP
    mu = hermitian_eigenvalues(root @ flipped @ root)
    lam = np.sqrt(np.clip(mu, 0.0, None))[::-1]
    return _clamp(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]), "concurrence")


def one_tangle(rho3: DensityOperator, party: str) -> float:
    """Negativity of ``party`` against the other two qubits."""
    _require_qubits(rho3, 3)
    return negativity(rho3, party)


def two_tangle(rho3: DensityOperator, pair: tuple[str, str]) -> float:
    """Negativity of the two-qubit marginal on ``pair``, transposing ``pair[0]``."""
    _require_qubits(rho3, 3)
    first, second = pair
    if first == second:
        raise ValueError("pair members must differ")
    reduced = partial_trace(rho3, [first, second])
    value = negativity(reduced, first)
    if __debug__:
        other = negativity(reduced, second)
        if abs(other - value) > TOL.pair_symmetry:
            raise AssertionError(f"pair negativity depends on order: {value!r} vs {other!r}")
    return value


def pairwise_concurrence(rho3: DensityOperator, pair: tuple[str, str]) -> float:
    _require_qubits(rho3, 3)
    return concurrence(partial_trace(rho3, list(pair)))


@dataclass(frozen=True)
class TangleReport:
    labels: tuple[str, str, str]
    one_tangles: dict[str, float]
    two_tangles: dict[frozenset, float]
    residuals: dict[str, float]
    pi_tangle: float
    ckw_satisfied: tuple[bool, bool, bool]

    def two(self, a: str, b: str) -> float:
        return self.two_tangles[frozenset((a, b))]

    def ckw_slack(self, party: str) -> float:
        """``N^2_{a(bc)} - N^2_{ab} - N^2_{ac}``; equal to the residual by construction."""
        return self.residuals[party]


def tangle_report(rho3: DensityOperator) -> TangleReport:
    _require_qubits(rho3, 3)
    labels = rho3.layout.labels
    ones = {label: one_tangle(rho3, label) for label in labels}
    twos = {frozenset(pair): two_tangle(rho3, pair) for pair in itertools.combinations(labels, 2)}
    residuals = {}
    for a in labels:
        b, c = (x for x in labels if x != a)
        residuals[a] = ones[a] ** 2 - twos[frozenset((a, b))] ** 2 - twos[frozenset((a, c))] ** 2
    ckw = tuple(residuals[a] >= -TOL.ckw_slack for a in labels)
    if not all(ckw):
        log.warning("CKW inequality violated: %s", residuals)
    pi = sum(residuals.values()) / 3.0
    return TangleReport(labels, ones, twos, residuals, pi, ckw)
