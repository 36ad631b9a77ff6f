"""Exact, perturbative and periodic-orbit spectra of an infinite square well with a step."""

from __future__ import annotations

from .compare import ConfigError, RunConfig, SpectrumRow, run_comparison, run_oracle_checks
from .exact import (
    BisectionError,
    BracketNotFound,
    BracketSource,
    Branch,
    EigenBracket,
    ExactLevel,
    ResidualFunction,
    bisect,
    eigen_bracket,
    eigenstate_continuity_check,
    exact_eigenvalue,
    exact_spectrum,
    residual,
)
from .io import emit_csv, emit_dat, emit_json, emit_plot, emit_svg, parse_csv
from .model import (
    DomainError,
    WellConfig,
    action_of_energy,
    alpha,
    energy_of_action,
    ground_energy,
    reflection_coeff_action,
    reflection_coeff_energy,
    transmission_coeff,
    unperturbed_energy,
)
from .orbits import FamilySide, OrbitNecklace, classify, enumerate_necklaces, reflection_class
from .perturbation import (
    pt_convergence,
    pt_correction,
    pt_energy,
    pt_matrix_element_sq,
    pt_second_order_asymptotic,
    pt_second_order_sum,
)
from .trace import (
    QuadratureSpec,
    omega_breakdown,
    omega_quadrature_oracle,
    omega_single,
    po_energy,
    po_energy_general,
)

__version__ = "0.1.0"
