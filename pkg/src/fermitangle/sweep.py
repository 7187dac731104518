"""Parameter sweeps, CSV emission, and the numeric-vs-analytic verification report."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from . import closed_form
from .config import TOL
from .measures import TangleReport, pairwise_concurrence, tangle_report
from .rindler import R_MAX, Scenario, physical_state

SCENARIOS = {"one": "one-accelerated", "two": "two-accelerated"}

# Party keys use the bare observer letter, whatever the Rindler suffix.
MEASURE_KEYS = (
    "one_tangle_A", "one_tangle_B", "one_tangle_C",
    "two_tangle_AB", "two_tangle_AC", "two_tangle_BC",
    "residual_A", "residual_B", "residual_C",
    "pi_tangle",
)

CSV_HEADER = "scenario,r_b,r_c,measure,value"


@dataclass(frozen=True)
class SweepConfig:
    scenario: str
    r_min: float = 0.0
    r_max: float = R_MAX
    steps: int = 65
    diagonal: bool = False
    out: str | None = None
    tolerance: float = 1e-10

    def __post_init__(self):
        kind = SCENARIOS.get(self.scenario, self.scenario)
        if kind not in SCENARIOS.values():
            raise ValueError(f"unknown scenario {self.scenario!r}; use one of {sorted(SCENARIOS)}")
        object.__setattr__(self, "scenario", kind)
        eps = 1e-15
        if not (-eps <= self.r_min <= self.r_max <= R_MAX + eps):
            raise ValueError(f"need 0 <= r_min <= r_max <= pi/4, got r_min={self.r_min}, r_max={self.r_max}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps}")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        object.__setattr__(self, "r_min", min(max(float(self.r_min), 0.0), R_MAX))
        object.__setattr__(self, "r_max", min(max(float(self.r_max), 0.0), R_MAX))
        object.__setattr__(self, "steps", int(self.steps))

    def grid(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.steps)

    def points(self) -> Iterator[Scenario]:
        grid = self.grid()
        if self.scenario == "one-accelerated":
            for r in grid:
                yield Scenario.one(r)
        elif self.diagonal:
            for r in grid:
                yield Scenario.two(r, r)
        else:
            for r_b in grid:
                for r_c in grid:
                    yield Scenario.two(r_b, r_c)


class MeasureRecord(NamedTuple):
    scenario: str
    r_b: float
    r_c: float
    measure: str
    value: float


def _party(label: str) -> str:
    return label[0]


def flatten(scenario: Scenario, report: TangleReport) -> list[MeasureRecord]:
    values = {}
    for label, v in report.one_tangles.items():
        values[f"one_tangle_{_party(label)}"] = v
    for pair, v in report.two_tangles.items():
        values["two_tangle_" + "".join(sorted(_party(x) for x in pair))] = v
    for label, v in report.residuals.items():
        values[f"residual_{_party(label)}"] = v
    values["pi_tangle"] = report.pi_tangle
    return [MeasureRecord(scenario.kind, scenario.r_b, scenario.r_c, key, float(values[key]))
            for key in MEASURE_KEYS]


def evaluate(scenario: Scenario) -> TangleReport:
    return tangle_report(physical_state(scenario))


def run_sweep(config: SweepConfig) -> list[MeasureRecord]:
    records = []
    for scenario in config.points():
        records.extend(flatten(scenario, evaluate(scenario)))
    order = {key: i for i, key in enumerate(MEASURE_KEYS)}
    records.sort(key=lambda rec: (rec.r_b, rec.r_c, order[rec.measure]))
    return records


def format_record(rec: MeasureRecord) -> str:
    # + 0.0 folds -0.0 into 0.0
    return f"{rec.scenario},{rec.r_b + 0.0:.12f},{rec.r_c + 0.0:.12f},{rec.measure},{rec.value + 0.0:#.12g}"


def emit_csv(records: Iterable[MeasureRecord], path) -> None:
    lines = [CSV_HEADER] + [format_record(rec) for rec in records]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


# -- verification -------------------------------------------------------------

@dataclass
class Deviation:
    measure: str
    max_abs: float = 0.0
    at: tuple[float, float] = (0.0, 0.0)

    def update(self, value: float, r_b: float, r_c: float):
        if value > self.max_abs or math.isnan(value):
            self.max_abs, self.at = value, (r_b, r_c)


@dataclass
class VerificationResult:
    tolerance: float
    lines: list[str]
    passed: bool

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _compare(config: SweepConfig) -> dict:
    keys = ("one_tangle_A", "one_tangle_B", "one_tangle_C", "pi_tangle")
    printed = {k: Deviation(k) for k in keys}
    exact = {k: Deviation(k) for k in keys}
    worst_pair, worst_conc, min_resid, max_resid = 0.0, 0.0, math.inf, 0.0
    for scenario in config.points():
        rho = physical_state(scenario)
        report = tangle_report(rho)
        labels = report.labels
        numeric = [report.one_tangles[x] for x in labels] + [report.pi_tangle]
        for table, closed in ((printed, closed_form.analytic_one_tangles(scenario)),
                              (exact, closed_form.analytic_one_tangles(scenario, exact=True))):
            analytic = list(closed.as_tuple()) + [closed.pi()]
            for key, n, a in zip(keys, numeric, analytic):
                table[key].update(abs(n - a), scenario.r_b, scenario.r_c)
        worst_pair = max(worst_pair, *report.two_tangles.values())
        worst_conc = max(worst_conc, *(pairwise_concurrence(rho, tuple(p)) for p in report.two_tangles))
        min_resid = min(min_resid, *report.residuals.values())
        max_resid = max(max_resid, *report.residuals.values())
    return dict(printed=printed, exact=exact, worst_pair=worst_pair, worst_conc=worst_conc,
                min_resid=min_resid, max_resid=max_resid)


def verify(tolerance: float = 1e-10, steps: int = 65) -> VerificationResult:
    """Compare the numeric pipeline with the closed forms on both scenario grids.

    Passes iff every one-tangle and pi-tangle deviation from the published
    closed forms is below ``tolerance``.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    lines = [f"verification tolerance {tolerance:.3e}"]
    passed = True
    grids = (("two-accelerated", SweepConfig("two", steps=steps)),
             ("one-accelerated", SweepConfig("one", steps=steps)))
    for name, config in grids:
        shape = f"{steps}x{steps}" if name.startswith("two") else f"{steps}"
        lines.append(f"[{name}] grid {shape}, r in [0, pi/4]")
        result = _compare(config)
        for key, dev in result["printed"].items():
            ok = dev.max_abs < tolerance
            passed &= ok
            lines.append(f"  {'PASS' if ok else 'FAIL'} {key:13s} max|numeric - published| = {dev.max_abs:.3e}"
                         f" at (r_b, r_c) = ({dev.at[0]:.6f}, {dev.at[1]:.6f})")
        for key, dev in result["exact"].items():
            lines.append(f"  info {key:13s} max|numeric - hand-diagonalized| = {dev.max_abs:.3e}")
        lines.append(f"  max two-tangle {result['worst_pair']:.3e}; max pairwise concurrence {result['worst_conc']:.3e}")
        lines.append(f"  CKW residuals in [{result['min_resid']:.6f}, {result['max_resid']:.6f}]: "
                     f"{'satisfied' if result['min_resid'] >= -TOL.ckw_slack else 'VIOLATED'}, "
                     f"{'saturated' if result['max_resid'] < TOL.ckw_slack else 'not saturated'}")

    lines.append("[limits] r_b = r_c = pi/4")
    two = evaluate(Scenario.two(R_MAX, R_MAX))
    vals = [two.one_tangles[x] for x in two.labels]
    spread = max(vals) - min(vals)
    lines.append(f"  numeric one-tangles {', '.join(f'{v:.12f}' for v in vals)} (spread {spread:.3e})")
    lines.append(f"  published closed form gives (1+sqrt5)/8 = {closed_form.GOLDEN_LIMIT:.12f}; "
                 f"printed limit (1-sqrt5)/8 = {closed_form.PRINTED_LIMIT:.12f} is negative")
    lines.append(f"  hand-diagonalized limit (sqrt17-1)/8 = {closed_form.EXACT_LIMIT:.12f}")
    lines.append(f"  numeric pi-tangle {two.pi_tangle:.12f}; published {closed_form.GOLDEN_LIMIT ** 2:.12f}")
    one = evaluate(Scenario.one(R_MAX))
    lines.append("[limits] r_c = pi/4, one observer")
    lines.append(f"  numeric one-tangles {', '.join(f'{one.one_tangles[x]:.12f}' for x in one.labels)}")
    pub = closed_form.one_acc_one_tangles(R_MAX)
    lines.append(f"  published closed form {pub.n_A:.12f}, {pub.n_B:.12f}, {pub.n_C:.12f}")
    lines.append(f"  numeric pi-tangle {one.pi_tangle:.12f}; published {pub.pi():.12f}")
    lines.append(f"verification {'PASSED' if passed else 'FAILED'}")
    return VerificationResult(tolerance, lines, passed)
