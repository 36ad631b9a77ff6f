"""Physical parameters of the stepped infinite well and the maps shared by every method.

The well occupies ``-a < x < a`` with ``V = 0`` on the left half and ``V = V0`` on
the right half. Units are whatever the caller uses consistently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the domain on which a formula is defined."""


@dataclass(frozen=True)
class WellConfig:
    a: float
    V0: float
    m: float
    hbar: float = 1.0

    def __post_init__(self) -> None:
        for name in ("a", "m", "hbar"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be finite and > 0, got {value!r}")
        if not (math.isfinite(self.V0) and self.V0 >= 0):
            raise DomainError(f"V0 must be finite and >= 0, got {self.V0!r}")
        if not math.isfinite(alpha(self)):
            raise DomainError("derived alpha is not finite")

    @classmethod
    def dimensionless(cls, alpha_value: float) -> WellConfig:
        """Configuration with ``a = m = hbar = 1`` and ``V0 = alpha``."""
        return cls(a=1.0, V0=float(alpha_value), m=1.0, hbar=1.0)

    @property
    def alpha(self) -> float:
        return alpha(self)

    @property
    def e1(self) -> float:
        return ground_energy(self)


def alpha(config: WellConfig) -> float:
    """Dimensionless step strength ``m a^2 V0 / hbar^2``."""
    return config.m * config.a**2 * config.V0 / config.hbar**2


def ground_energy(config: WellConfig) -> float:
    """Ground energy of the unstepped well, ``pi^2 hbar^2 / (8 m a^2)``."""
    return math.pi**2 * config.hbar**2 / (8.0 * config.m * config.a**2)


def unperturbed_energy(config: WellConfig, n: int) -> float:
    if n < 1:
        raise DomainError(f"level index must be >= 1, got {n}")
    return n * n * ground_energy(config)


def action_of_energy(config: WellConfig, E: float) -> float:
    """Classical action length ``a sqrt(2mE) + a sqrt(2m(E - V0))`` for ``E >= V0``."""
    if not E >= config.V0:
        raise DomainError(f"action_of_energy needs E >= V0 ({config.V0}), got {E}")
    two_m = 2.0 * config.m
    return config.a * (math.sqrt(two_m * E) + math.sqrt(two_m * (E - config.V0)))


def threshold_action(config: WellConfig) -> float:
    """Action ``sqrt(2 m a^2 V0)`` at which ``energy_of_action`` attains its minimum ``V0``."""
    return math.sqrt(2.0 * config.m * config.a**2 * config.V0)


def energy_of_action(config: WellConfig, S: float) -> float:
    """Inverse of :func:`action_of_energy` on its increasing branch.

    The formula ``(S^2 + 2 m a^2 V0)^2 / (8 m a^2 S^2)`` is defined for every
    ``S > 0``; below :func:`threshold_action` it decreases and the result is
    not the energy whose action is ``S``. Use :func:`on_increasing_branch` to
    tell the two apart.
    """
    if not S > 0:
        raise DomainError(f"action must be > 0, got {S}")
    ma2 = config.m * config.a**2
    # same formula written as V0 + excess so that E(S0) = V0 exactly
    excess = (S * S - 2.0 * ma2 * config.V0) ** 2 / (8.0 * ma2 * S * S)
    return config.V0 + excess


def on_increasing_branch(config: WellConfig, S: float) -> bool:
    return S >= threshold_action(config)


def reflection_coeff_energy(config: WellConfig, E: float) -> float:
    """Amplitude reflection coefficient of the step for a wave of energy ``E > V0``."""
    if not E > config.V0:
        raise DomainError(f"reflection needs E > V0 ({config.V0}), got {E}")
    root = math.sqrt(1.0 - config.V0 / E)
    return (1.0 - root) / (1.0 + root)


def _check_above_threshold(alpha_value: float, s: float) -> None:
    if alpha_value < 0:
        raise DomainError(f"alpha must be >= 0, got {alpha_value}")
    if not s > math.sqrt(2.0 * alpha_value) or s <= 0:
        raise DomainError(
            f"reduced action s={s} must exceed sqrt(2*alpha)={math.sqrt(2.0 * alpha_value)}"
        )


def reflection_coeff_action(alpha_value: float, s: float) -> float:
    """Reflection coefficient ``2 alpha / s^2`` in terms of the reduced action."""
    _check_above_threshold(alpha_value, s)
    return 2.0 * alpha_value / (s * s)


def transmission_coeff(alpha_value: float, s: float) -> float:
    _check_above_threshold(alpha_value, s)
    r = 2.0 * alpha_value / (s * s)
    # (1 - r)(1 + r) keeps r^2 + t^2 = 1 tight when r is close to 1
    return math.sqrt((1.0 - r) * (1.0 + r))
