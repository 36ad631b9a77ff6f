"""Command-line driver: compute the three spectra and write the requested tables and plots."""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

from . import io
from .compare import ConfigError, RunConfig, run_comparison, run_oracle_checks
from .model import DomainError
from .trace import QuadratureError, oracle_breakdown_lines

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_ROW_FAILURE = 2

# flag name -> (RunConfig field, converter)
_FIELDS = {
    "a": ("a", float),
    "v0": ("v0", float),
    "mass": ("mass", float),
    "hbar": ("hbar", float),
    "alpha": ("alpha", float),
    "n-min": ("n_min", int),
    "n-max": ("n_max", int),
    "out-csv": ("out_csv", str),
    "out-json": ("out_json", str),
    "out-svg": ("out_svg", str),
    "out-dat": ("out_dat", str),
    "oracle": ("oracle", None),
    "orbit-max-len": ("orbit_max_len", int),
    "nu-max": ("nu_max", int),
    "tol-bisect": ("tol_bisect", float),
    "tol-sum": ("tol_sum", float),
    "verbose": ("verbose", None),
}
_BOOL_WORDS = {"true": True, "yes": True, "on": True, "1": True,
               "false": False, "no": False, "off": False, "0": False}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="aisw-speccomp",
        description="Compare exact, second-order perturbative and periodic-orbit spectra "
                    "of the stepped infinite square well.",
    )
    p.add_argument("--config", help="flat 'key = value' file; keys are the long flag names")
    p.add_argument("--a", type=float, help="half-width of the well")
    p.add_argument("--v0", type=float, help="step height on the right half")
    p.add_argument("--mass", type=float)
    p.add_argument("--hbar", type=float)
    p.add_argument("--alpha", type=float,
                   help="m a^2 V0 / hbar^2; alone it selects dimensionless units a = m = hbar = 1")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--out-csv")
    p.add_argument("--out-json")
    p.add_argument("--out-svg", help="SVG scatter; a .dat file is written next to it")
    p.add_argument("--out-dat", help="gnuplot data file")
    p.add_argument("--oracle", action="store_true", default=None,
                   help="cross-check the periodic-orbit correction by quadrature")
    p.add_argument("--orbit-max-len", type=int)
    p.add_argument("--nu-max", type=int)
    p.add_argument("--tol-bisect", type=float)
    p.add_argument("--tol-sum", type=float)
    p.add_argument("--verbose", "-v", action="store_true", default=None)
    return p


def read_config_file(path: str | Path) -> dict:
    """Parse ``key = value`` lines into RunConfig keyword arguments."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from exc
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lstrip("-").replace("_", "-").lower()
        if key not in _FIELDS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        name, conv = _FIELDS[key]
        try:
            if conv is None:
                out[name] = _BOOL_WORDS[value.lower()]
            else:
                out[name] = conv(value)
        except (KeyError, ValueError):
            raise ConfigError(f"{path}:{lineno}: bad value {value!r} for {key}") from None
    return out


def resolve_run_config(args: argparse.Namespace) -> RunConfig:
    values = read_config_file(args.config) if args.config else {}
    for key, (name, _) in _FIELDS.items():
        flag_value = getattr(args, key.replace("-", "_"))
        if flag_value is not None:
            values[name] = flag_value
    run = RunConfig(**values)
    run.well()
    return run


def _write_outputs(run: RunConfig, rows, oracle_rows) -> None:
    if run.out_csv:
        io.emit_csv(rows, run.out_csv)
    if run.out_json:
        oracle = [r.as_dict() for r in oracle_rows] if run.oracle else None
        io.emit_json(rows, run.out_json, run.summary(), oracle)
    if run.out_svg:
        io.emit_plot(rows, run.out_svg)
    if run.out_dat:
        io.emit_dat(rows, run.out_dat)
    if not (run.out_csv or run.out_json or run.out_svg or run.out_dat):
        sys.stdout.write(io.csv_text(rows))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run = resolve_run_config(args)
    except (ConfigError, DomainError, TypeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    logging.basicConfig(level=logging.INFO if run.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    log = logging.getLogger("aisw.cli")
    log.info("run: %s", {k: v for k, v in dataclasses.asdict(run).items() if k != "extra"})

    rows = run_comparison(run)
    oracle_rows = []
    oracle_failed = False
    if run.oracle:
        try:
            oracle_rows = run_oracle_checks(run, rows)
        except (QuadratureError, DomainError) as exc:
            log.error("oracle cross-check failed: %s", exc)
            oracle_failed = True
        for o in oracle_rows:
            log.info("n=%d omega_single=%.6e oracle=%.6e exact=%s",
                     o.n, o.omega_single, o.omega_oracle, o.omega_exact)
            if run.verbose and o.result is not None:
                sys.stderr.write(oracle_breakdown_lines(o.result))
    try:
        _write_outputs(run, rows, oracle_rows)
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    failed = [r.n for r in rows if r.error is not None]
    if failed:
        log.warning("levels without an exact eigenvalue: %s", failed)
        return EXIT_ROW_FAILURE
    return EXIT_ROW_FAILURE if oracle_failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
