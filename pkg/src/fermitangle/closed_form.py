"""Analytic one-tangles and pi-tangles, used as an oracle for the numeric pipeline.

Two families live here:

* ``two_acc_one_tangles`` / ``one_acc_one_tangles`` are the published closed
  forms, transcribed as printed (including the trailing ``-1``).
* ``exact_two_acc_one_tangles`` / ``exact_one_acc_one_tangles`` come from
  diagonalizing the partial transposes by hand. Each partial transpose is
  diagonal except for one 2x2 block ``[[x, y], [y, 0]] / 2``, whose
  eigenvalues are ``(x +- sqrt(x**2 + 4*y**2)) / 4``.

The two families agree at ``r = 0`` and along ``r_b = 0`` for the A and B
one-tangles, and differ elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rindler import Scenario, check_r

GOLDEN_LIMIT = (1 + math.sqrt(5)) / 8
PRINTED_LIMIT = (1 - math.sqrt(5)) / 8
EXACT_LIMIT = (math.sqrt(17) - 1) / 8


def _cos_sin(r: float) -> tuple[float, float]:
    r = check_r(r)
    return math.cos(r), math.sin(r)


@dataclass(frozen=True)
class AnalyticOneTangles:
    n_A: float
    n_B: float
    n_C: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.n_A, self.n_B, self.n_C)

    def pi(self) -> float:
        # two-tangles vanish identically for these states
        return (self.n_A ** 2 + self.n_B ** 2 + self.n_C ** 2) / 3.0


def two_acc_one_tangles(r_b: float, r_c: float) -> AnalyticOneTangles:
    cb, sb = _cos_sin(r_b)
    cc, sc = _cos_sin(r_c)
    n_a = 0.5 * (cb * cc + cc**2 + cb**2 * sc**2 + math.sqrt(cb**2 * cc**2 + sb**4 * sc**4) - 1)
    n_b = 0.5 * (cb * cc + cb**2 + sb**2 * sc**2 + cc * math.sqrt(cb**2 + sb**4 * cc**2) - 1)
    n_c = 0.5 * (cb * cc + sb**2 + cb**2 * cc**2 + cb * math.sqrt(cc**2 + sc**4 * cb**2) - 1)
    return AnalyticOneTangles(n_a, n_b, n_c)


def one_acc_one_tangles(r_c: float) -> AnalyticOneTangles:
    cc, sc = _cos_sin(r_c)
    n_c = 0.5 * (cc + cc**2 + math.sqrt(cc**2 + sc**4) - 1)
    return AnalyticOneTangles(cc, cc, n_c)


def exact_two_acc_one_tangles(r_b: float, r_c: float) -> AnalyticOneTangles:
    cb, sb = _cos_sin(r_b)
    cc, sc = _cos_sin(r_c)
    n_a = 0.5 * (cb**2 + sb**2 * cc**2 - 1 + math.sqrt(sb**4 * sc**4 + 4 * cb**2 * cc**2))
    n_b = 0.5 * (cb**2 + sb**2 * sc**2 - 1 + cc * math.sqrt(sb**4 * cc**2 + 4 * cb**2))
    n_c = 0.5 * (cb**2 * cc**2 + sb**2 - 1 + cb * math.sqrt(cb**2 * sc**4 + 4 * cc**2))
    return AnalyticOneTangles(n_a, n_b, n_c)


def exact_one_acc_one_tangles(r_c: float) -> AnalyticOneTangles:
    cc = math.cos(check_r(r_c))
    return AnalyticOneTangles(cc, cc, cc**2)


def analytic_one_tangles(scenario: Scenario, exact: bool = False) -> AnalyticOneTangles:
    if scenario.kind == "two-accelerated":
        fn = exact_two_acc_one_tangles if exact else two_acc_one_tangles
        return fn(scenario.r_b, scenario.r_c)
    if "B" in scenario.accelerated:
        raise ValueError("closed forms cover only Charlie accelerating alone")
    return (exact_one_acc_one_tangles if exact else one_acc_one_tangles)(scenario.r_c)


def analytic_pi(scenario: Scenario, exact: bool = False) -> float:
    return analytic_one_tangles(scenario, exact).pi()
