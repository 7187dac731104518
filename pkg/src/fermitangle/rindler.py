"""GHZ state, single-mode fermionic Unruh embedding, and the traced physical state.

An accelerated observer's qubit ``X`` is replaced by a pair of Rindler modes
``X_I`` (accessible) and ``X_II`` (beyond the horizon)::

    |0>  ->  cos r |0>_I |0>_II + sin r |1>_I |1>_II
    |1>  ->  |1>_I |0>_II

with ``0 <= r <= pi/4``. Tracing every ``*_II`` factor gives the state the
observers can actually access.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .tensor import DensityOperator, PureState, SubsystemLayout, partial_trace

R_MAX = math.pi / 4
REGION_I = "_I"
REGION_II = "_II"


def check_r(r: float) -> float:
    """Validate an acceleration parameter and return it as a float."""
    r = float(r)
    # tolerate float noise from grid arithmetic at the pi/4 endpoint
    if not (math.isfinite(r) and -1e-15 <= r <= R_MAX + 1e-15):
        raise ValueError(f"acceleration parameter r={r!r} outside [0, pi/4]")
    return min(max(r, 0.0), R_MAX)


def acceleration_to_r(omega: float, a: float, c: float = 1.0) -> float:
    """Map mode frequency and proper acceleration to the parameter ``r``.

    ``cos r = (exp(-2*pi*omega*c/a) + 1) ** -0.5``; r grows with ``a`` and
    tends to pi/4 as ``a`` goes to infinity.
    """
    for name, value in (("omega", omega), ("a", a), ("c", c)):
        if not value > 0:
            raise ValueError(f"{name} must be positive, got {value!r}")
    x = 2.0 * math.pi * omega * c / a
    # arctan(exp(-x/2)) is the same angle as the arccos form, without the
    # precision loss of arccos near 1 for small accelerations
    return math.atan(math.exp(-0.5 * x))


@dataclass(frozen=True)
class Scenario:
    """Which of Bob and Charlie accelerate, and with what parameters."""

    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        params = {str(k): check_r(v) for k, v in dict(self.params).items()}
        if not params:
            raise ValueError("a scenario needs at least one accelerated observer")
        if not set(params) <= {"B", "C"}:
            raise ValueError(f"only B and C may accelerate, got {sorted(params)}")
        object.__setattr__(self, "params", params)

    @classmethod
    def one(cls, r_c: float) -> Scenario:
        return cls({"C": r_c})

    @classmethod
    def two(cls, r_b: float, r_c: float) -> Scenario:
        return cls({"B": r_b, "C": r_c})

    @property
    def accelerated(self) -> frozenset[str]:
        return frozenset(self.params)

    @property
    def kind(self) -> str:
        return "two-accelerated" if len(self.params) == 2 else "one-accelerated"

    @property
    def r_b(self) -> float:
        return self.params.get("B", 0.0)

    @property
    def r_c(self) -> float:
        return self.params.get("C", 0.0)

    def __hash__(self):
        return hash(tuple(sorted(self.params.items())))


def ghz_state() -> PureState:
    amps = np.zeros(8, dtype=complex)
    amps[0] = amps[7] = 1 / math.sqrt(2)
    return PureState(SubsystemLayout.qubits("A", "B", "C"), amps)


def unruh_embed(state: PureState, mode: str, r: float) -> PureState:
    """Replace qubit ``mode`` by adjacent Rindler factors ``mode_I``, ``mode_II``."""
    r = check_r(r)
    layout = state.layout
    k = layout.position(mode)
    if layout.dim_of(mode) != 2:
        raise ValueError(f"mode {mode!r} must be a qubit, has dim {layout.dim_of(mode)}")
    dims = layout.dims
    before, after = math.prod(dims[:k]), math.prod(dims[k + 1:])
    psi = state.amplitudes.reshape(before, 2, after)
    # embedding map: (region-I digit, region-II digit, old digit)
    iso = np.zeros((2, 2, 2))
    iso[0, 0, 0] = math.cos(r)
    iso[1, 1, 0] = math.sin(r)
    iso[1, 0, 1] = 1.0
    out = np.einsum("ijm,amb->aijb", iso, psi)
    factors = layout.factors[:k] + ((mode + REGION_I, 2), (mode + REGION_II, 2)) + layout.factors[k + 1:]
    return PureState(SubsystemLayout(factors), out.reshape(-1))


def embedded_state(scenario: Scenario) -> PureState:
    """GHZ with every accelerated observer mapped to Rindler modes (B before C)."""
    psi = ghz_state()
    for mode in sorted(scenario.accelerated):
        psi = unruh_embed(psi, mode, scenario.params[mode])
    return psi


def physical_state(scenario: Scenario) -> DensityOperator:
    psi = embedded_state(scenario)
    keep = [label for label in psi.layout.labels if not label.endswith(REGION_II)]
    return partial_trace(psi.density(), keep)
