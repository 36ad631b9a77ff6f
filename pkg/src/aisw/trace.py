"""Periodic-orbit (trace formula) approximation to the spectrum.

The quantised reduced actions are ``s_n = pi (n - omega_n)`` where ``omega_n``
collects the oscillatory orbit sum over the window
``[pi (n - 1/2), pi (n + 1/2)]``. Closed asymptotic forms are provided for the
Newtonian orbit and the single-reflection families; an independent
Gauss-Legendre evaluation of the window integrals checks them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .model import DomainError, WellConfig, action_of_energy, alpha, energy_of_action, ground_energy
from .orbits import FamilySide, OrbitNecklace, amplitude, reduced_action_of_orbit, single_reflection_family
from .series import CATALAN

GL_ORDER = 10
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(GL_ORDER)


class QuadratureError(RuntimeError):
    pass


def weyl_count(s: float) -> float:
    """Smooth level count ``s / pi - 1/2``."""
    if not s > 0:
        raise DomainError("reduced action must be > 0")
    return s / math.pi - 0.5


def weyl_window_integral(n: int) -> float:
    """Integral of :func:`weyl_count` over the n-th window, ``pi n - pi/2``."""
    return math.pi * n - 0.5 * math.pi


def _check_level(n: int) -> None:
    if n < 1:
        raise DomainError(f"level index must be >= 1, got {n}")


def omega_newtonian_asymptotic(alpha_value: float, n: int) -> float:
    """Newtonian orbit and its repetitions: ``8 log 2 alpha^2 / (pi^6 n^5)``."""
    _check_level(n)
    return 8.0 * math.log(2.0) * alpha_value**2 / (math.pi**6 * n**5)


def _single_family(alpha_value: float, n: int, catalan_sign: float) -> float:
    _check_level(n)
    x = 2.0 * alpha_value / (n * math.pi)
    sign = 1.0 if n % 2 == 1 else -1.0
    pref = 2.0 * alpha_value * sign / (n * n * math.pi**4)
    return pref * (0.5 * math.pi * math.sin(x) + catalan_sign * 4.0 * CATALAN / (n * math.pi) * math.cos(x))


def omega_single_L(alpha_value: float, n: int) -> float:
    """Left single-reflection family ``(j-1) x LR + L``, summed over ``j``.

    The Catalan term enters with a minus sign: the window integral of
    ``x exp(i(2j-1)x)`` is ``+2i (-1)^(j+1) / (2j-1)^2``.
    """
    return _single_family(alpha_value, n, -1.0)


def omega_single_R(alpha_value: float, n: int) -> float:
    """Right family; equal to :func:`omega_single_L` with ``alpha -> -alpha``."""
    return _single_family(alpha_value, n, +1.0)


def omega_single(alpha_value: float, n: int) -> float:
    """All single-reflection orbits: ``(-1)^(n+1) 2 alpha sin(2 alpha/(n pi)) / (n^2 pi^3)``."""
    _check_level(n)
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * 2.0 * alpha_value / (n * n * math.pi**3) * math.sin(2.0 * alpha_value / (n * math.pi))


@dataclass(frozen=True)
class OmegaBreakdown:
    n: int
    omega_newtonian: float
    omega_1L: float
    omega_1R: float
    omega_1: float
    omega_used: float


def omega_breakdown(alpha_value: float, n: int) -> OmegaBreakdown:
    w1 = omega_single(alpha_value, n)
    return OmegaBreakdown(
        n=n,
        omega_newtonian=omega_newtonian_asymptotic(alpha_value, n),
        omega_1L=omega_single_L(alpha_value, n),
        omega_1R=omega_single_R(alpha_value, n),
        omega_1=w1,
        omega_used=w1,
    )


def po_energy_general(config: WellConfig, n: int, omega: float) -> float:
    """``E(hbar pi (n - omega))`` with nothing expanded."""
    _check_level(n)
    if not abs(omega) < 0.5:
        raise DomainError(f"|omega| must be < 1/2, got {omega}")
    return energy_of_action(config, config.hbar * math.pi * (n - omega))


def po_energy(config: WellConfig, n: int) -> float:
    """Periodic-orbit energy with the single-reflection ``omega`` inserted and expanded."""
    _check_level(n)
    al = alpha(config)
    sign = 1.0 if n % 2 == 0 else -1.0
    return ground_energy(config) * (
        n * n
        + 4.0 * al / math.pi**2
        + sign * 4.0 * al / (n * math.pi**3) * math.sin(2.0 * al / (n * math.pi))
        + 4.0 * al * al / (n * n * math.pi**4)
    )


def _x_minus_sin(x: float) -> float:
    if abs(x) < 0.05:
        x2 = x * x
        return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)))
    return x - math.sin(x)


def po_pt_difference(config: WellConfig, n: int) -> float:
    """``po_energy - pt_energy`` without cancelling the shared ``n^2 + 4 alpha/pi^2`` terms.

    Both expansions agree except for ``sin(x)`` against its first Taylor term,
    ``x = 2 alpha / (n pi)``, so the difference is
    ``(-1)^(n+1) E1 4 alpha / (n pi^3) (x - sin x)``.
    """
    _check_level(n)
    al = alpha(config)
    x = 2.0 * al / (n * math.pi)
    sign = -1.0 if n % 2 == 0 else 1.0
    return sign * ground_energy(config) * 4.0 * al / (n * math.pi**3) * _x_minus_sin(x)


def exact_omega(config: WellConfig, n: int, E: float) -> float:
    """Oscillatory correction implied by an exact eigenvalue above the step."""
    return n - action_of_energy(config, E) / (math.pi * config.hbar)


@dataclass(frozen=True)
class QuadratureSpec:
    orbit_set: list[OrbitNecklace]
    nu_max: int = 40
    panels_per_oscillation: int = 8
    rel_tol: float = 1e-9
    class_filter: int | None = None
    max_panels: int = 1 << 16

    def __post_init__(self) -> None:
        if self.nu_max < 1:
            raise DomainError("nu_max must be >= 1")
        if self.panels_per_oscillation < 8:
            raise DomainError("panels_per_oscillation must be >= 8")
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be > 0")

    def terms(self) -> list[tuple[OrbitNecklace, int]]:
        out = []
        for orbit in self.orbit_set:
            for nu in range(1, self.nu_max + 1):
                if self.class_filter is None or nu * orbit.sigma == self.class_filter:
                    out.append((orbit, nu))
        return out


@dataclass(frozen=True)
class OracleTerm:
    word: str
    nu: int
    contribution: complex

    def line(self) -> str:
        return f"{self.word},{self.nu},{self.contribution.real:.16e},{self.contribution.imag:.16e}"


@dataclass(frozen=True)
class OracleResult:
    n: int
    omega: float
    terms: list[OracleTerm] = field(repr=False)
    panels: int
    truncation_bound: float
    quadrature_change: float


def family_orbits(side: FamilySide, j_max: int) -> list[OrbitNecklace]:
    return [single_reflection_family(side, j) for j in range(1, j_max + 1)]


def _window_nodes(n: int, panels: int) -> tuple[np.ndarray, np.ndarray]:
    edges = np.linspace(math.pi * (n - 0.5), math.pi * (n + 0.5), panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    weights = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    return nodes, weights


def _integrate_terms(alpha_value: float, n: int, terms, panels: int) -> tuple[np.ndarray, float]:
    """Per-term window integrals and the summed integral of their absolute integrands."""
    s, w = _window_nodes(n, panels)
    out = np.empty(len(terms), dtype=complex)
    l1 = 0.0
    for i, (orbit, nu) in enumerate(terms):
        weight = amplitude(alpha_value, orbit, s) ** nu / nu
        phase = nu * reduced_action_of_orbit(alpha_value, orbit, s)
        out[i] = np.sum(w * weight * np.exp(1j * phase))
        l1 += float(np.sum(w * np.abs(weight)))
    return out / math.pi**2, l1 / math.pi**2


def omega_quadrature_oracle(config: WellConfig, n: int, spec: QuadratureSpec) -> OracleResult:
    """Window integrals of the orbit sum evaluated numerically, orbit by orbit.

    Panels start at ``panels_per_oscillation`` per oscillation of the fastest
    phase and double until two successive totals differ by less than
    ``rel_tol`` times the integral of the summed absolute integrands.
    """
    _check_level(n)
    al = alpha(config)
    lo = math.pi * (n - 0.5)
    if not lo > math.sqrt(2.0 * al):
        raise DomainError(f"window start {lo} is not above sqrt(2 alpha) = {math.sqrt(2.0 * al)}")
    terms = spec.terms()
    if not terms:
        return OracleResult(n, 0.0, [], 0, 0.0, 0.0)
    fastest = 0.0
    for orbit, nu in terms:
        rate = nu * max(abs(orbit.length - 2.0 * al * (orbit.n_L - orbit.n_R) / s**2) for s in (lo, lo + math.pi))
        fastest = max(fastest, rate)
    oscillations = max(1.0, fastest * math.pi / (2.0 * math.pi))
    panels = int(math.ceil(spec.panels_per_oscillation * oscillations))
    previous, _ = _integrate_terms(al, n, terms, panels)
    while True:
        if 2 * panels > spec.max_panels:
            raise QuadratureError(
                f"panel budget {spec.max_panels} exceeded at n={n} before reaching rel_tol={spec.rel_tol}"
            )
        panels *= 2
        current, scale = _integrate_terms(al, n, terms, panels)
        change = abs(math.fsum(current.imag) - math.fsum(previous.imag))
        if change <= spec.rel_tol * scale or scale == 0.0:
            break
        previous = current
    bound = _repetition_tail_bound(al, n, spec)
    oracle_terms = [OracleTerm(o.word, nu, complex(c)) for (o, nu), c in zip(terms, current)]
    return OracleResult(n, math.fsum(current.imag), oracle_terms, panels, bound, change)


def _repetition_tail_bound(alpha_value: float, n: int, spec: QuadratureSpec) -> float:
    if spec.class_filter is not None:
        return 0.0
    lo = math.pi * (n - 0.5)
    bound = 0.0
    for orbit in spec.orbit_set:
        a_max = abs(amplitude(alpha_value, orbit, lo))
        a_max = max(a_max, abs(amplitude(alpha_value, orbit, lo + math.pi)))
        if a_max >= 1.0:
            return math.inf
        nu = spec.nu_max + 1
        bound += a_max**nu / (nu * (1.0 - a_max))
    # window width pi, overall 1/pi^2
    return bound / math.pi


def oracle_breakdown_lines(result: OracleResult) -> str:
    return "".join(term.line() + "\n" for term in result.terms)
