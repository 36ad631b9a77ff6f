"""Rayleigh-Schroedinger perturbation theory for the step, to second order.

The unperturbed system is the plain infinite well of width ``2a`` and the
perturbation is the step ``V0`` on ``0 < x < a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DomainError, WellConfig, alpha, ground_energy

CONVERGENCE_THRESHOLD = 0.1


@dataclass(frozen=True)
class SecondOrderSum:
    value: float
    terms_used: int
    tail_estimate: float
    capped: bool


@dataclass(frozen=True)
class PtCorrection:
    n: int
    e0: float
    e1: float
    e2_exact_sum: float
    e2_asymptotic: float
    terms_used: int
    tail_estimate: float
    capped: bool


@dataclass(frozen=True)
class ConvergenceDiag:
    n: int
    ratio: float
    convergent: bool
    threshold: float


def gamma(n: int) -> int:
    return 3 if n % 2 == 0 else -1


def _check_level(n: int) -> None:
    if n < 1:
        raise DomainError(f"level index must be >= 1, got {n}")


def pt_matrix_element_sq(config: WellConfig, k: int, n: int) -> float:
    """``|<k|V|n>|^2`` between unperturbed states; zero for equal parity."""
    _check_level(k)
    _check_level(n)
    if k == n:
        raise DomainError("diagonal element is not part of the second-order sum")
    if (k - n) % 2 == 0:
        return 0.0
    top = k if n % 2 == 1 else n
    return 4.0 * config.V0**2 * top * top / (math.pi**2 * (k * k - n * n) ** 2)


def _second_order_terms(n: int, k: np.ndarray) -> np.ndarray:
    # dimensionless terms; multiply by 32 m a^2 V0^2 / (pi^4 hbar^2)
    kk = k.astype(float)
    nn = float(n)
    num = kk * kk if n % 2 == 1 else np.full_like(kk, nn * nn)
    return num / (nn * nn - kk * kk) ** 3


def _tail_bound(n: int, k_lo_first: int, k_hi_first: int) -> float:
    """Bound on the dimensionless terms omitted below ``k_lo_first`` and from ``k_hi_first`` on.

    Every term obeys ``|t_k| <= 1 / (|k - n|^3 (k + n))``; beyond the window
    ``k + n >= 2n + d`` and the rest is compared with ``sum 1/d^3``.
    """
    bound = 0.0
    if k_lo_first >= 1:
        d_min = n - k_lo_first
        count = (k_lo_first + 1) // 2 + 1
        bound += count / (d_min**3 * (n + 1))
    d = k_hi_first - n
    # step-2 sum of d^-3 from d: d^-3 + (1/2) int_d^inf x^-3 dx
    bound += (1.0 / d**3 + 1.0 / (4.0 * d * d)) / (2 * n + d)
    return bound


def pt_second_order_sum(config: WellConfig, n: int, rel_tol: float = 1e-12) -> SecondOrderSum:
    """Second-order energy shift from the explicit sum over intermediate states.

    Terms with ``k`` of opposite parity to ``n`` are summed over the window
    ``max(1, n - K) .. n + K``; ``K`` doubles until the bound on the omitted
    terms is below ``rel_tol`` times the partial sum, up to
    ``K = max(2**21, 100 n)``.
    """
    _check_level(n)
    if rel_tol <= 0:
        raise DomainError("rel_tol must be > 0")
    prefactor = 32.0 * config.m * config.a**2 * config.V0**2 / (math.pi**4 * config.hbar**2)
    if config.V0 == 0:
        return SecondOrderSum(0.0, 0, 0.0, False)
    cap = max(1 << 21, 100 * n)
    K = 15
    while True:
        K = min(K, cap)
        k_lo = max(1, n - K)
        if (k_lo - n) % 2 == 0:
            k_lo += 1
        k = np.arange(k_lo, n + K + 1, 2)
        partial = math.fsum(_second_order_terms(n, k).tolist())
        below = k_lo - 2 if k_lo - 2 >= 1 else 0
        above = int(k[-1]) + 2
        tail = _tail_bound(n, below, above)
        if tail < rel_tol * abs(partial) or K >= cap:
            capped = not tail < rel_tol * abs(partial)
            return SecondOrderSum(prefactor * partial, int(k.size), prefactor * tail, capped)
        K = 2 * K + 1


def pt_second_order_asymptotic(config: WellConfig, n: int) -> float:
    _check_level(n)
    return gamma(n) * config.m * config.a**2 * config.V0**2 / (
        2.0 * math.pi**2 * config.hbar**2 * n * n
    )


def pt_energy(config: WellConfig, n: int) -> float:
    """Second-order energy ``E1 (n^2 + 4 alpha/pi^2 + 4 gamma_n alpha^2 / (pi^4 n^2))``."""
    _check_level(n)
    al = alpha(config)
    return ground_energy(config) * (
        n * n + 4.0 * al / math.pi**2 + 4.0 * gamma(n) * al * al / (math.pi**4 * n * n)
    )


def pt_correction(config: WellConfig, n: int, rel_tol: float = 1e-12) -> PtCorrection:
    total = pt_second_order_sum(config, n, rel_tol)
    return PtCorrection(
        n=n,
        e0=n * n * ground_energy(config),
        e1=config.V0 / 2.0,
        e2_exact_sum=total.value,
        e2_asymptotic=pt_second_order_asymptotic(config, n),
        terms_used=total.terms_used,
        tail_estimate=total.tail_estimate,
        capped=total.capped,
    )


def pt_convergence(config: WellConfig, n: int, threshold: float = CONVERGENCE_THRESHOLD) -> ConvergenceDiag:
    """Largest coupling ratio ``4 alpha / (pi^3 n)``, reached for ``k = n +- 1``."""
    _check_level(n)
    ratio = 4.0 * alpha(config) / (math.pi**3 * n)
    return ConvergenceDiag(n, ratio, ratio < threshold, threshold)
