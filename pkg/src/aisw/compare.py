"""Side-by-side exact, perturbative and periodic-orbit spectra."""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field

from .exact import ExactLevel, exact_eigenvalue
from .model import DomainError, WellConfig
from .orbits import FamilySide
from .perturbation import pt_convergence, pt_correction, pt_energy
from .trace import (
    OracleResult,
    QuadratureSpec,
    exact_omega,
    family_orbits,
    omega_quadrature_oracle,
    omega_single,
    po_energy,
)

log = logging.getLogger(__name__)

REFERENCE_WELL = {"a": 3.0, "v0": 100.0, "mass": 0.5, "hbar": 1.0}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumRow:
    n: int
    E_exact: float
    E_pt2: float
    E_po: float
    abs_err_pt: float
    abs_err_po: float
    rel_err_pt: float
    rel_err_po: float
    below_step: bool
    pt_convergent: bool
    bracket_source: str
    error: str | None = None


@dataclass
class RunConfig:
    a: float | None = None
    v0: float | None = None
    mass: float | None = None
    hbar: float | None = None
    alpha: float | None = None
    n_min: int = 1
    n_max: int = 30
    out_csv: str | None = None
    out_json: str | None = None
    out_svg: str | None = None
    out_dat: str | None = None
    oracle: bool = False
    orbit_max_len: int = 21
    nu_max: int = 40
    tol_bisect: float = 1e-13
    tol_sum: float = 1e-12
    verbose: bool = False
    convergence_threshold: float = 0.1
    extra: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not (1 <= self.n_min <= self.n_max):
            raise ConfigError(f"need 1 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        if self.orbit_max_len < 1 or self.nu_max < 1:
            raise ConfigError("orbit_max_len and nu_max must be >= 1")
        if not (self.tol_bisect > 0 and self.tol_sum > 0):
            raise ConfigError("tolerances must be > 0")

    def well(self) -> WellConfig:
        try:
            return WellConfig(**_resolve_physical(self.a, self.v0, self.mass, self.hbar, self.alpha))
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc

    def summary(self) -> dict:
        w = self.well()
        return {
            "a": w.a,
            "V0": w.V0,
            "m": w.m,
            "hbar": w.hbar,
            "alpha": w.alpha,
            "n_min": self.n_min,
            "n_max": self.n_max,
        }


def _resolve_physical(a, v0, mass, hbar, alpha_value) -> dict:
    given = {"a": a, "V0": v0, "m": mass, "hbar": hbar}
    present = {k: float(v) for k, v in given.items() if v is not None}
    if alpha_value is None:
        ref = REFERENCE_WELL
        defaults = {"a": ref["a"], "V0": ref["v0"], "m": ref["mass"], "hbar": ref["hbar"]}
        return {**defaults, **present}
    al = float(alpha_value)
    if al < 0:
        raise ConfigError("alpha must be >= 0")
    if not present:
        return {"a": 1.0, "V0": al, "m": 1.0, "hbar": 1.0}
    if len(present) == 4:
        implied = present["m"] * present["a"] ** 2 * present["V0"] / present["hbar"] ** 2
        if not math.isclose(implied, al, rel_tol=1e-9, abs_tol=1e-12):
            raise ConfigError(f"alpha={al} is inconsistent with a, V0, m, hbar (which give {implied})")
        return present
    if len(present) != 3:
        raise ConfigError("with alpha, give none, exactly three, or all four of a, V0, m, hbar")
    missing = next(k for k in given if k not in present)
    p = present
    try:
        if missing == "V0":
            p["V0"] = al * p["hbar"] ** 2 / (p["m"] * p["a"] ** 2)
        elif missing == "a":
            p["a"] = math.sqrt(al * p["hbar"] ** 2 / (p["m"] * p["V0"]))
        elif missing == "m":
            p["m"] = al * p["hbar"] ** 2 / (p["a"] ** 2 * p["V0"])
        else:
            p["hbar"] = math.sqrt(p["m"] * p["a"] ** 2 * p["V0"] / al)
    except ZeroDivisionError:
        raise ConfigError(f"cannot solve for {missing} from the given parameters") from None
    return p


def _row(config: WellConfig, n: int, level: ExactLevel, threshold: float) -> SpectrumRow:
    E = level.E
    E_pt = pt_energy(config, n)
    E_po = po_energy(config, n)
    abs_pt, abs_po = abs(E_pt - E), abs(E_po - E)
    return SpectrumRow(
        n=n,
        E_exact=E,
        E_pt2=E_pt,
        E_po=E_po,
        abs_err_pt=abs_pt,
        abs_err_po=abs_po,
        rel_err_pt=abs_pt / E,
        rel_err_po=abs_po / E,
        below_step=E < config.V0,
        pt_convergent=pt_convergence(config, n, threshold).convergent,
        bracket_source=level.bracket.source.value,
    )


def _failed_row(config: WellConfig, n: int, message: str, threshold: float) -> SpectrumRow:
    nan = math.nan
    return SpectrumRow(
        n=n,
        E_exact=nan,
        E_pt2=pt_energy(config, n),
        E_po=po_energy(config, n),
        abs_err_pt=nan,
        abs_err_po=nan,
        rel_err_pt=nan,
        rel_err_po=nan,
        below_step=False,
        pt_convergent=pt_convergence(config, n, threshold).convergent,
        bracket_source="error",
        error=message,
    )


def run_comparison(run: RunConfig) -> list[SpectrumRow]:
    config = run.well()
    rows = []
    for n in range(run.n_min, run.n_max + 1):
        try:
            level = exact_eigenvalue(config, n, rel_width=run.tol_bisect)
        except (LookupError, RuntimeError, DomainError) as exc:
            log.warning("level %d failed: %s", n, exc)
            rows.append(_failed_row(config, n, f"{type(exc).__name__}: {exc}", run.convergence_threshold))
            continue
        rows.append(_row(config, n, level, run.convergence_threshold))
    return rows


@dataclass(frozen=True)
class OracleRow:
    n: int
    omega_exact: float | None
    omega_single: float
    omega_oracle: float
    e2_exact_sum: float
    e2_asymptotic: float
    result: OracleResult | None = field(default=None, repr=False, compare=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("result")
        return d


def run_oracle_checks(run: RunConfig, rows: list[SpectrumRow]) -> list[OracleRow]:
    """Quadrature check of the single-reflection ``omega`` for levels whose window clears the step."""
    config = run.well()
    al = config.alpha
    j_max = max(1, (run.orbit_max_len + 1) // 2)
    orbits = family_orbits(FamilySide.LEFT, j_max) + family_orbits(FamilySide.RIGHT, j_max)
    spec = QuadratureSpec(orbits, nu_max=1)
    out = []
    for row in rows:
        n = row.n
        if not math.pi * (n - 0.5) > math.sqrt(2.0 * al):
            continue
        result = omega_quadrature_oracle(config, n, spec)
        w_exact = None
        if row.error is None and row.E_exact >= config.V0:
            w_exact = exact_omega(config, n, row.E_exact)
        pt = pt_correction(config, n, run.tol_sum)
        out.append(OracleRow(n, w_exact, omega_single(al, n), result.omega, pt.e2_exact_sum, pt.e2_asymptotic, result))
    return out
