"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys

from .rindler import acceleration_to_r
from .sweep import SweepConfig, emit_csv, run_sweep, verify

log = logging.getLogger("fermitangle")

_BOOLS = {"1": True, "true": True, "yes": True, "on": True,
          "0": False, "false": False, "no": False, "off": False}


class UsageError(Exception):
    pass


def read_config(path: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment, dashes in keys become underscores."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.lstrip("-").replace("-", "_")] = value
    return values


def _setting(args, cfg: dict, key: str, convert, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in cfg:
        try:
            return convert(cfg[key])
        except (ValueError, KeyError):
            raise UsageError(f"bad config value for {key}: {cfg[key]!r}") from None
    return default


def _bool(text: str) -> bool:
    return _BOOLS[text.strip().lower()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermitangle",
        description="Tripartite entanglement of a fermionic GHZ state seen by accelerated observers.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    # None defaults let config-file values fill in; flags always win.
    p = sub.add_parser("sweep", help="sweep r and write per-measure CSV rows")
    p.add_argument("--config", help="key = value file mirroring the flags")
    p.add_argument("--scenario", choices=["one", "two"])
    p.add_argument("--diagonal", action="store_const", const=True, help="force r_b = r_c")
    p.add_argument("--r-min", dest="r_min", type=float)
    p.add_argument("--r-max", dest="r_max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--degrees", action="store_const", const=True, help="read --r-min/--r-max in degrees")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="compare the numeric pipeline with the closed forms")
    p.add_argument("--config")
    p.add_argument("--tolerance", type=float)
    p.add_argument("--steps", type=int)

    p = sub.add_parser("r-of", help="acceleration parameter r from frequency and acceleration")
    p.add_argument("--config")
    p.add_argument("--omega", type=float)
    p.add_argument("--accel", type=float)
    p.add_argument("--c", type=float)
    return parser


def _cmd_sweep(args, cfg) -> int:
    scenario = _setting(args, cfg, "scenario", str)
    out = _setting(args, cfg, "out", str)
    if scenario is None or out is None:
        raise UsageError("sweep needs --scenario and --out")
    degrees = _setting(args, cfg, "degrees", _bool, False)
    r_min = _setting(args, cfg, "r_min", float, 0.0)
    r_max = _setting(args, cfg, "r_max", float, 45.0 if degrees else math.pi / 4)
    if degrees:
        r_min, r_max = math.radians(r_min), math.radians(r_max)
    try:
        config = SweepConfig(
            scenario=scenario, r_min=r_min, r_max=r_max,
            steps=_setting(args, cfg, "steps", int, 65),
            diagonal=_setting(args, cfg, "diagonal", _bool, False),
            out=out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = run_sweep(config)
    emit_csv(records, config.out)
    log.info("wrote %d records to %s", len(records), config.out)
    return 0


def _cmd_verify(args, cfg) -> int:
    tolerance = _setting(args, cfg, "tolerance", float, 1e-10)
    steps = _setting(args, cfg, "steps", int, 65)
    if not tolerance > 0 or steps < 2:
        raise UsageError("verify needs tolerance > 0 and steps >= 2")
    result = verify(tolerance, steps)
    sys.stdout.write(result.text)
    return result.exit_code


def _cmd_r_of(args, cfg) -> int:
    omega = _setting(args, cfg, "omega", float)
    accel = _setting(args, cfg, "accel", float)
    c = _setting(args, cfg, "c", float, 1.0)
    if omega is None or accel is None:
        raise UsageError("r-of needs --omega and --accel")
    try:
        r = acceleration_to_r(omega, accel, c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"{r:.15g}")
    return 0


COMMANDS = {"sweep": _cmd_sweep, "verify": _cmd_verify, "r-of": _cmd_r_of}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = read_config(args.config) if args.config else {}
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"fermitangle {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fermitangle {args.command}: I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
