from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aisw.model import (
    DomainError,
    WellConfig,
    action_of_energy,
    alpha,
    energy_of_action,
    ground_energy,
    on_increasing_branch,
    reflection_coeff_action,
    reflection_coeff_energy,
    threshold_action,
    transmission_coeff,
)

positive = st.floats(min_value=0.05, max_value=20.0)
step = st.just(0.0) | st.floats(min_value=1e-6, max_value=500.0)
configs = st.builds(WellConfig, a=positive, V0=step, m=positive, hbar=positive)


@pytest.mark.parametrize(
    "params, expected",
    [((3.0, 100.0, 0.5, 1.0), 450.0), ((1.0, 0.0, 1.0, 1.0), 0.0), ((2.0, 3.0, 1.0, 1.0), 12.0)],
)
def test_alpha_examples(params, expected):
    assert alpha(WellConfig(*params)) == pytest.approx(expected, rel=1e-15)


def test_ground_energy_examples(reference_well):
    assert ground_energy(reference_well) == pytest.approx(math.pi**2 / 36, rel=1e-15)
    assert ground_energy(reference_well) == pytest.approx(0.274156, abs=1e-6)
    assert ground_energy(WellConfig(1.0, 0.0, 1.0)) == pytest.approx(math.pi**2 / 8, rel=1e-15)


@given(configs)
def test_step_to_ground_ratio_is_8_alpha_over_pi_squared(config):
    assert config.V0 / ground_energy(config) == pytest.approx(8 * alpha(config) / math.pi**2, rel=1e-13, abs=1e-300)


@pytest.mark.parametrize("bad", [dict(a=0.0), dict(m=-1.0), dict(hbar=0.0), dict(V0=-1.0), dict(a=math.inf)])
def test_invalid_config_rejected(bad):
    params = dict(a=1.0, V0=1.0, m=1.0, hbar=1.0) | bad
    with pytest.raises(DomainError):
        WellConfig(**params)


def test_dimensionless_config():
    c = WellConfig.dimensionless(7.5)
    assert (c.a, c.V0, c.m, c.hbar) == (1.0, 7.5, 1.0, 1.0)
    assert c.alpha == 7.5


def test_action_examples():
    c0 = WellConfig(a=1.3, V0=0.0, m=0.7)
    assert action_of_energy(c0, 2.0) == pytest.approx(2 * 1.3 * math.sqrt(2 * 0.7 * 2.0), rel=1e-15)
    c = WellConfig(a=1.3, V0=4.0, m=0.7)
    assert action_of_energy(c, 4.0) == pytest.approx(1.3 * math.sqrt(2 * 0.7 * 4.0), rel=1e-15)
    with pytest.raises(DomainError):
        action_of_energy(c, 3.9)


def test_energy_of_action_examples():
    c = WellConfig(a=2.0, V0=5.0, m=0.3)
    assert energy_of_action(c, threshold_action(c)) == pytest.approx(5.0, rel=1e-15)
    c0 = WellConfig(a=2.0, V0=0.0, m=0.3)
    assert energy_of_action(c0, 7.0) == pytest.approx(49.0 / (8 * 0.3 * 4.0), rel=1e-15)
    with pytest.raises(DomainError):
        energy_of_action(c, 0.0)


def test_threshold_action_is_stationary_minimum():
    c = WellConfig(a=2.0, V0=5.0, m=0.3)
    s0 = threshold_action(c)
    h = 1e-4 * s0
    left, mid, right = (energy_of_action(c, s0 + d) for d in (-h, 0.0, h))
    assert left > mid and right > mid
    assert (right - left) / (2 * h) == pytest.approx(0.0, abs=1e-6)


def test_action_interval_endpoint(reference_well):
    # E at S = hbar pi (n - 1/2) is the lower end of the n-th window
    n = 15
    E_hat = energy_of_action(reference_well, math.pi * (n - 0.5))
    assert action_of_energy(reference_well, E_hat) == pytest.approx(math.pi * (n - 0.5), rel=1e-14)


def test_decreasing_branch_flagged(reference_well):
    s0 = threshold_action(reference_well)
    assert on_increasing_branch(reference_well, s0)
    assert not on_increasing_branch(reference_well, 0.5 * s0)
    # the formula still evaluates there, but does not invert action_of_energy
    E = energy_of_action(reference_well, 0.5 * s0)
    assert action_of_energy(reference_well, E) != pytest.approx(0.5 * s0)


@given(configs, st.floats(min_value=0.0, max_value=1e4))
def test_energy_action_round_trip(config, excess):
    E = config.V0 + excess
    if E <= 0:
        return
    assert energy_of_action(config, action_of_energy(config, E)) == pytest.approx(E, rel=1e-12)


# E - V0 ~ V0 (S/S0 - 1)^2 near the threshold, so S is only recoverable to
# ~1e-16 / (S/S0 - 1); the round trip is exact at S0 and 1e-12 from 1e-4 above it
@given(configs, st.just(1.0) | st.floats(min_value=1.0001, max_value=100.0))
def test_action_energy_round_trip(config, factor):
    S = threshold_action(config) * factor if config.V0 > 0 else factor
    assert action_of_energy(config, energy_of_action(config, S)) == pytest.approx(S, rel=1e-12)


@given(configs, st.floats(min_value=1e-6, max_value=1e3), st.floats(min_value=1e-6, max_value=1e3))
def test_maps_are_increasing(config, x, dx):
    E1, E2 = config.V0 + x, config.V0 + x + dx
    assert action_of_energy(config, E1) < action_of_energy(config, E2)
    s0 = threshold_action(config)
    S1, S2 = s0 + x, s0 + x + dx
    assert energy_of_action(config, S1) < energy_of_action(config, S2)


def test_reflection_energy_examples():
    c = WellConfig(1.0, 2.0, 1.0)
    h = math.sqrt(0.5)
    assert reflection_coeff_energy(c, 4.0) == pytest.approx((1 - h) / (1 + h), rel=1e-15)
    assert reflection_coeff_energy(c, 4.0) == pytest.approx(0.171573, abs=1e-6)
    assert reflection_coeff_energy(WellConfig(1.0, 0.0, 1.0), 3.0) == 0.0
    values = [reflection_coeff_energy(c, E) for E in (2.5, 5.0, 50.0, 5e3, 5e6)]
    assert all(x > y for x, y in zip(values, values[1:]))
    assert values[-1] < 1e-6
    with pytest.raises(DomainError):
        reflection_coeff_energy(c, 2.0)


def test_reflection_action_examples():
    r = reflection_coeff_action(450.0, 20 * math.pi)
    assert r == pytest.approx(900 / (400 * math.pi**2), rel=1e-15)
    assert r == pytest.approx(0.2280, abs=1e-4)
    assert reflection_coeff_action(0.0, 0.1) == 0.0
    with pytest.raises(DomainError):
        reflection_coeff_action(450.0, 30.0)


@settings(max_examples=100)
@given(configs, st.floats(min_value=1.0001, max_value=50.0))
def test_reflection_action_matches_energy_form(config, factor):
    if config.V0 == 0:
        return
    s = math.sqrt(2 * alpha(config)) * factor
    E = energy_of_action(config, config.hbar * s)
    assert reflection_coeff_action(alpha(config), s) == pytest.approx(reflection_coeff_energy(config, E), rel=1e-9)


def test_transmission_examples():
    assert transmission_coeff(0.0, 3.0) == 1.0
    t = transmission_coeff(450.0, 20 * math.pi)
    assert t == pytest.approx(math.sqrt(1 - (900 / (400 * math.pi**2)) ** 2), rel=1e-15)
    assert t == pytest.approx(0.97367, abs=1e-5)


@given(st.floats(min_value=0.0, max_value=1e4), st.floats(min_value=1e-9, max_value=1e3))
def test_unitarity_and_ranges(alpha_value, excess):
    s = math.sqrt(2 * alpha_value) * (1 + excess) + excess
    r = reflection_coeff_action(alpha_value, s)
    t = transmission_coeff(alpha_value, s)
    assert 0.0 <= r < 1.0
    assert 0.0 < t <= 1.0
    assert abs(r * r + t * t - 1.0) <= 1e-14


@given(configs, st.floats(min_value=1e-3, max_value=1e3), st.floats(min_value=0.1, max_value=10.0))
def test_reflection_independent_of_hbar(config, excess, scale):
    E = config.V0 + excess
    other = WellConfig(config.a, config.V0, config.m, config.hbar * scale)
    assert reflection_coeff_energy(other, E) == reflection_coeff_energy(config, E)
