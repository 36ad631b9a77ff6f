"""Exact eigenvalues of the stepped well by bisection on a continuous matching residual."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .model import (
    DomainError,
    WellConfig,
    energy_of_action,
    ground_energy,
    on_increasing_branch,
    unperturbed_energy,
)

THRESHOLD_BAND = 1e-10
ENDPOINT_NUDGE = 1e-12
SUBDIVISION_POINTS = 64
SCAN_DENSITY = 8


class Branch(enum.Enum):
    TRIGONOMETRIC = "Trigonometric"
    HYPERBOLIC = "Hyperbolic"
    THRESHOLD = "Threshold"


class BracketSource(enum.Enum):
    ACTION_INTERVAL = "ActionInterval"
    GRID_SCAN = "GridScan"


class BracketNotFound(LookupError):
    pass


class BisectionError(RuntimeError):
    def __init__(self, message: str, interval: tuple[float, float]):
        super().__init__(f"{message}; last interval {interval}")
        self.interval = interval


@dataclass(frozen=True)
class ResidualFunction:
    """Callable matching residual ``f(E)`` whose zeros are the eigenvalues.

    Above the step ``f = Q cos(Qa) sin(qa)/q + cos(qa) sin(Qa)``; below it the
    same expression with ``q -> i kappa``. The division by ``q`` makes ``f``
    continuous through ``E = V0``.
    """

    config: WellConfig

    def branch(self, E: float) -> Branch:
        V0 = self.config.V0
        if V0 > 0 and abs(E - V0) < THRESHOLD_BAND * V0:
            return Branch.THRESHOLD
        return Branch.TRIGONOMETRIC if E > V0 else Branch.HYPERBOLIC

    def __call__(self, E: float) -> float:
        return residual(self.config, E)


def residual(config: WellConfig, E: float) -> float:
    if not (E > 0 and math.isfinite(E)):
        raise DomainError(f"residual needs finite E > 0, got {E}")
    a, V0, hbar = config.a, config.V0, config.hbar
    two_m = 2.0 * config.m
    Q = math.sqrt(two_m * E) / hbar
    Qa = Q * a
    if V0 > 0 and abs(E - V0) < THRESHOLD_BAND * V0:
        # z = (q a)^2, signed; same series on both sides of the step
        z = two_m * (E - V0) * a * a / hbar**2
        sin_over = a * (1.0 - z / 6.0 + z * z / 120.0)
        cos_part = 1.0 - z / 2.0 + z * z / 24.0
    elif E > V0:
        q = math.sqrt(two_m * (E - V0)) / hbar
        sin_over = math.sin(q * a) / q
        cos_part = math.cos(q * a)
    else:
        kappa = math.sqrt(two_m * (V0 - E)) / hbar
        sin_over = math.sinh(kappa * a) / kappa
        cos_part = math.cosh(kappa * a)
    return Q * math.cos(Qa) * sin_over + cos_part * math.sin(Qa)


def residual_array(config: WellConfig, E: np.ndarray) -> np.ndarray:
    """Vectorised :func:`residual`, used by the grid scans."""
    E = np.asarray(E, dtype=float)
    if np.any(E <= 0):
        raise DomainError("residual needs E > 0")
    a, V0, hbar = config.a, config.V0, config.hbar
    two_m = 2.0 * config.m
    Q = np.sqrt(two_m * E) / hbar
    z = two_m * (E - V0) * a * a / hbar**2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        q = np.sqrt(np.abs(z)) / a
        above = np.where(z > 0, np.sin(q * a) / q, 0.0)
        below = np.where(z < 0, np.sinh(q * a) / q, 0.0)
        sin_over = np.where(z > 0, above, below)
        cos_part = np.where(z > 0, np.cos(q * a), np.cosh(q * a))
    band = np.abs(E - V0) < THRESHOLD_BAND * V0 if V0 > 0 else np.zeros(E.shape, bool)
    band |= z == 0
    sin_over = np.where(band, a * (1.0 - z / 6.0 + z * z / 120.0), sin_over)
    cos_part = np.where(band, 1.0 - z / 2.0 + z * z / 24.0, cos_part)
    return Q * np.cos(Q * a) * sin_over + cos_part * np.sin(Q * a)


@dataclass(frozen=True)
class EigenBracket:
    n: int
    E_lo: float
    E_hi: float
    source: BracketSource


@dataclass(frozen=True)
class ExactLevel:
    n: int
    E: float
    residual_at_root: float
    iterations: int
    bracket: EigenBracket


def _sign_changes(values: np.ndarray) -> np.ndarray:
    s = np.signbit(values)
    return np.nonzero(s[:-1] != s[1:])[0]


def _single_root(config: WellConfig, lo: float, hi: float) -> bool:
    grid = np.linspace(lo, hi, SUBDIVISION_POINTS + 1)
    return len(_sign_changes(residual_array(config, grid))) == 1


def action_bracket(config: WellConfig, n: int) -> tuple[float, float] | None:
    """Interval ``(E(hbar pi (n - 1/2)), E(hbar pi (n + 1/2)))`` nudged inward.

    Returns ``None`` when the lower action falls below the threshold action, where
    the interval cannot hold the n-th level.
    """
    S_lo = config.hbar * math.pi * (n - 0.5)
    S_hi = config.hbar * math.pi * (n + 0.5)
    if not on_increasing_branch(config, S_lo):
        return None
    lo = energy_of_action(config, S_lo)
    hi = energy_of_action(config, S_hi)
    return lo * (1.0 + ENDPOINT_NUDGE), hi * (1.0 - ENDPOINT_NUDGE)


def scan_roots(config: WellConfig, E_max: float, density: int = SCAN_DENSITY) -> list[tuple[float, float]]:
    """Sign-change intervals of the residual on ``(delta, E_max)``.

    The grid is uniform in ``sqrt(E)`` with ``density`` points per level of the
    Weyl estimate ``N(E) ~ S(E) / (pi hbar)``.
    """
    V0 = config.V0
    delta = 1e-9 * (V0 if V0 > 0 else ground_energy(config))
    two_m = 2.0 * config.m
    S_max = config.a * (math.sqrt(two_m * E_max) + math.sqrt(two_m * max(E_max - V0, 0.0)))
    n_points = max(256, density * (int(S_max / (math.pi * config.hbar)) + 2))
    k = np.linspace(math.sqrt(delta), math.sqrt(E_max), n_points)
    grid = k * k
    values = residual_array(config, grid)
    out = []
    for i in _sign_changes(values):
        lo, hi = float(grid[i]), float(grid[i + 1])
        if not _single_root(config, lo, hi):
            raise BracketNotFound(f"scan cell ({lo}, {hi}) holds more than one sign change")
        out.append((lo, hi))
    return out


def eigen_bracket(config: WellConfig, n: int) -> EigenBracket:
    if n < 1:
        raise DomainError(f"level index must be >= 1, got {n}")
    interval = action_bracket(config, n)
    if interval is not None:
        lo, hi = interval
        if _single_root(config, lo, hi):
            return EigenBracket(n, lo, hi, BracketSource.ACTION_INTERVAL)
    # the n-th level never exceeds the n-th unstepped level plus V0
    ceiling = unperturbed_energy(config, n) + config.V0
    ceiling *= 1.0 + 1e-9
    cells = scan_roots(config, ceiling)
    if len(cells) < n:
        raise BracketNotFound(f"only {len(cells)} roots found below scan ceiling {ceiling}")
    lo, hi = cells[n - 1]
    return EigenBracket(n, lo, hi, BracketSource.GRID_SCAN)


def bisect(config: WellConfig, bracket: EigenBracket, rel_width: float = 1e-13,
           max_iter: int = 200) -> ExactLevel:
    lo, hi = bracket.E_lo, bracket.E_hi
    f_lo, f_hi = residual(config, lo), residual(config, hi)
    if f_lo == 0.0:
        return ExactLevel(bracket.n, lo, 0.0, 0, bracket)
    if f_hi == 0.0:
        return ExactLevel(bracket.n, hi, 0.0, 0, bracket)
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise BisectionError("residual does not change sign on bracket", (lo, hi))
    scale = max(1.0, abs(f_lo), abs(f_hi))
    iterations = 0
    while iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = residual(config, mid)
        iterations += 1
        if f_mid == 0.0:
            lo = hi = mid
            f_lo = 0.0
            break
        if math.copysign(1.0, f_mid) == math.copysign(1.0, f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo < rel_width * abs(hi):
            break
    else:
        raise BisectionError(f"no convergence after {max_iter} iterations", (lo, hi))
    E = 0.5 * (lo + hi)
    f = residual(config, E)
    if abs(f) >= 1e-9 * scale:
        raise BisectionError(f"residual {f} too large at converged root", (lo, hi))
    return ExactLevel(bracket.n, E, f, iterations, bracket)


def exact_eigenvalue(config: WellConfig, n: int, rel_width: float = 1e-13) -> ExactLevel:
    return bisect(config, eigen_bracket(config, n), rel_width=rel_width)


def exact_spectrum(config: WellConfig, n_max: int, rel_width: float = 1e-13) -> list[ExactLevel]:
    """Levels ``1..n_max``; sub-step levels share a single grid scan."""
    levels: list[ExactLevel] = []
    cells: list[tuple[float, float]] | None = None
    for n in range(1, n_max + 1):
        interval = action_bracket(config, n)
        if interval is not None and _single_root(config, *interval):
            bracket = EigenBracket(n, *interval, BracketSource.ACTION_INTERVAL)
        else:
            if cells is None or len(cells) < n:
                ceiling = (unperturbed_energy(config, n_max) + config.V0) * (1.0 + 1e-9)
                cells = scan_roots(config, ceiling)
                if len(cells) < n:
                    raise BracketNotFound(f"only {len(cells)} roots found below scan ceiling {ceiling}")
            bracket = EigenBracket(n, *cells[n - 1], BracketSource.GRID_SCAN)
        levels.append(bisect(config, bracket, rel_width=rel_width))
    return levels


@dataclass(frozen=True)
class ContinuityReport:
    n: int
    E: float
    A: float
    B: float
    value_mismatch: float
    slope_mismatch: float
    relative_mismatch: float


def eigenstate_continuity_check(config: WellConfig, level: ExactLevel | float) -> ContinuityReport:
    """Match the left and right pieces of the eigenstate at ``x = 0``.

    Left piece ``A sin(Q(x+a))``, right piece ``B sin(q(x-a))`` (``B sinh(kappa(x-a))``
    below the step). ``A = 1`` and ``B`` comes from continuity of the value unless
    that equation is ill-conditioned, in which case it comes from the slope and the
    value mismatch is reported instead.
    """
    E = level.E if isinstance(level, ExactLevel) else float(level)
    n = level.n if isinstance(level, ExactLevel) else 0
    a, V0, hbar = config.a, config.V0, config.hbar
    two_m = 2.0 * config.m
    Q = math.sqrt(two_m * E) / hbar
    if E >= V0:
        q = math.sqrt(two_m * (E - V0)) / hbar
        if q == 0.0:
            right_val, right_slope = -a, 1.0  # limit of sin(q(x-a))/q
        else:
            right_val, right_slope = -math.sin(q * a), q * math.cos(q * a)
    else:
        kappa = math.sqrt(two_m * (V0 - E)) / hbar
        right_val, right_slope = -math.sinh(kappa * a), kappa * math.cosh(kappa * a)
    left_val, left_slope = math.sin(Q * a), Q * math.cos(Q * a)
    A = 1.0
    if abs(right_val) * Q >= 1e-6 * abs(right_slope) or right_slope == 0.0:
        B = left_val / right_val
    else:
        B = left_slope / right_slope
    value_mismatch = abs(A * left_val - B * right_val)
    slope_mismatch = abs(A * left_slope - B * right_slope)
    norm = Q * max(abs(A), abs(B))
    relative = max(slope_mismatch, Q * value_mismatch) / norm
    return ContinuityReport(n, E, A, B, value_mismatch, slope_mismatch, relative)
