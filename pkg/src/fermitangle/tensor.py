"""Dense linear algebra over labeled tensor-product spaces.

Matrices are plain complex ``numpy`` arrays. A :class:`SubsystemLayout`
names the tensor factors; the first factor is the most significant digit of
the mixed-radix basis index, so ``|l m n>`` maps to ``l*d1*d2 + m*d2 + n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .config import TOL


@dataclass(frozen=True)
class SubsystemLayout:
    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        factors = tuple((str(label), int(dim)) for label, dim in self.factors)
        if not factors:
            raise ValueError("layout needs at least one factor")
        labels = [label for label, _ in factors]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in layout: {labels}")
        if any(dim < 1 for _, dim in factors):
            raise ValueError("factor dimensions must be positive")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def qubits(cls, *labels: str) -> SubsystemLayout:
        return cls(tuple((label, 2) for label in labels))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.factors)

    @property
    def dim(self) -> int:
        return math.prod(self.dims)

    def position(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown subsystem label {label!r}; layout has {self.labels}") from None

    def dim_of(self, label: str) -> int:
        return self.factors[self.position(label)][1]

    def __str__(self):
        return "(" + ")(".join(f"{label},{dim}" for label, dim in self.factors) + ")"


def _as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def hermiticity_defect(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T), initial=0.0))


@dataclass(frozen=True, eq=False)
class PureState:
    layout: SubsystemLayout
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != self.layout.dim:
            raise ValueError(f"{amps.size} amplitudes do not fit layout {self.layout}")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > TOL.norm:
            raise ValueError(f"state norm {norm!r} is not 1")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def amplitude(self, *digits: int) -> complex:
        """Amplitude of the basis ket with the given per-factor digits."""
        return complex(self.amplitudes[np.ravel_multi_index(digits, self.layout.dims)])

    def density(self) -> DensityOperator:
        return DensityOperator(self.layout, np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, unit-trace, positive semidefinite matrix on a layout."""

    layout: SubsystemLayout
    matrix: np.ndarray

    def __post_init__(self):
        m = _as_matrix(self.matrix).copy()
        if m.shape[0] != self.layout.dim:
            raise ValueError(f"matrix dim {m.shape[0]} does not match layout {self.layout}")
        defect = hermiticity_defect(m)
        if defect > TOL.hermitian:
            raise ValueError(f"density matrix not Hermitian (defect {defect:.3e})")
        tr = np.trace(m)
        if abs(tr - 1.0) > TOL.trace:
            raise ValueError(f"density matrix trace {tr!r} is not 1")
        lowest = hermitian_eigenvalues(m)[0]
        if lowest < TOL.min_eigenvalue:
            raise ValueError(f"density matrix not positive semidefinite (min eigenvalue {lowest:.3e})")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.layout.dim


def kron(a, b) -> np.ndarray:
    """Kronecker product of two square matrices."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def _labels(layout: SubsystemLayout, labels: str | Iterable[str]) -> list[int]:
    if isinstance(labels, str):
        labels = [labels]
    return sorted({layout.position(label) for label in labels})


def partial_trace(rho: DensityOperator, keep: str | Iterable[str]) -> DensityOperator:
    """Trace out every factor not listed in ``keep``; kept factors stay in layout order."""
    layout = rho.layout
    kept = _labels(layout, keep)
    if not kept:
        raise ValueError("keep must name at least one subsystem")
    n = len(layout.dims)
    traced = [i for i in range(n) if i not in kept]
    dk = math.prod(layout.dims[i] for i in kept)
    dt = math.prod(layout.dims[i] for i in traced)
    t = rho.matrix.reshape(layout.dims * 2)
    order = kept + traced
    t = t.transpose(order + [i + n for i in order]).reshape(dk, dt, dk, dt)
    reduced = np.einsum("ajbj->ab", t)
    return DensityOperator(SubsystemLayout(tuple(layout.factors[i] for i in kept)), reduced)


def partial_transpose(rho: DensityOperator | np.ndarray, subsystem: str | Iterable[str],
                      layout: SubsystemLayout | None = None) -> np.ndarray:
    """Transpose the row/column indices of the named factor(s) only.

    ``rho`` may be a :class:`DensityOperator` or a bare matrix together with
    an explicit ``layout``.
    """
    if isinstance(rho, DensityOperator):
        layout, m = rho.layout, rho.matrix
    else:
        if layout is None:
            raise ValueError("a bare matrix needs an explicit layout")
        m = _as_matrix(rho)
        if m.shape[0] != layout.dim:
            raise ValueError(f"matrix dim {m.shape[0]} does not match layout {layout}")
    n = len(layout.dims)
    axes = list(range(2 * n))
    for i in _labels(layout, subsystem):
        axes[i], axes[i + n] = axes[i + n], axes[i]
    return m.reshape(layout.dims * 2).transpose(axes).reshape(m.shape)


def _jacobi_eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Cyclic complex Jacobi: each (p, q) rotation is a phase change making
    # a[p, q] real followed by the classic real rotation zeroing it.
    a = m.copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    offdiag = ~np.eye(n, dtype=bool)
    target = TOL.jacobi_offdiag * max(1.0, float(np.linalg.norm(a)))
    for _ in range(TOL.jacobi_max_sweeps):
        off = float(np.linalg.norm(a[offdiag]))
        if off < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                mag = float(abs(g))
                if mag < 1e-300:
                    continue
                phase = g / mag
                theta = float(a[q, q].real - a[p, p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                cols = a[:, [p, q]] @ rot
                a[:, p], a[:, q] = cols[:, 0], cols[:, 1]
                rows = rot.conj().T @ a[[p, q], :]
                a[p, :], a[q, :] = rows[0], rows[1]
                a[p, q] = a[q, p] = 0.0
                a[p, p], a[q, q] = a[p, p].real, a[q, q].real
                vc = v[:, [p, q]] @ rot
                v[:, p], v[:, q] = vc[:, 0], vc[:, 1]
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")
    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigh(m) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""
    m = _as_matrix(m)
    defect = hermiticity_defect(m)
    if defect > TOL.eig_hermitian:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    return _jacobi_eigh(0.5 * (m + m.conj().T))


def hermitian_eigenvalues(m) -> np.ndarray:
    return hermitian_eigh(m)[0]


def trace_norm(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eigenvalues(m))))
