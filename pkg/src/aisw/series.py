"""Convergence acceleration for the slowly converging series behind the asymptotic forms."""

from __future__ import annotations

import math
from typing import Callable

CATALAN = 0.91596559417721901505


def alternating_sum(term: Callable[[int], float], n_terms: int = 40) -> float:
    """``sum_{k>=0} (-1)^k term(k)`` by the Cohen-Rodriguez Villegas-Zagier scheme.

    ``term`` should be positive and decreasing (completely monotone in
    practice); the error then falls like ``5.83**-n_terms``.
    """
    d = (3.0 + math.sqrt(8.0)) ** n_terms
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    total = 0.0
    for k in range(n_terms):
        c = b - c
        total += c * term(k)
        b = (k + n_terms) * (k - n_terms) * b / ((k + 0.5) * (k + 1.0))
    return total / d


def positive_sum(term: Callable[[int], float], n_terms: int = 40, inner_tol: float = 1e-17) -> float:
    """``sum_{k>=1} term(k)`` for positive, decreasing terms.

    Van Wijngaarden's rearrangement turns the series into an alternating one
    whose terms ``w_r = sum_j 2^j term(2^j r)`` converge geometrically for
    power-law decay; the alternating series is then accelerated.
    """

    def condensed(r: int) -> float:
        total = 0.0
        j = 0
        while True:
            piece = 2.0**j * term(2**j * r)
            total += piece
            if piece <= inner_tol * total or j > 200:
                return total
            j += 1

    return alternating_sum(lambda k: condensed(k + 1), n_terms)


def symmetric_partial_sum(term: Callable[[int], float], N: int) -> float:
    """``sum_{i=-N}^{N} term(i)``."""
    return math.fsum(term(i) for i in range(-N, N + 1))


def log2_series(n_terms: int = 40) -> float:
    """``sum_{nu>=1} (-1)^(nu+1) / nu``."""
    return alternating_sum(lambda k: 1.0 / (k + 1), n_terms)


def leibniz_series(n_terms: int = 40) -> float:
    """``sum_{j>=1} (-1)^(j+1) / (2j - 1)``."""
    return alternating_sum(lambda k: 1.0 / (2 * k + 1), n_terms)


def catalan_series(n_terms: int = 40) -> float:
    """``sum_{j>=1} (-1)^(j+1) / (2j - 1)^2``."""
    return alternating_sum(lambda k: 1.0 / (2 * k + 1) ** 2, n_terms)


def odd_inverse_squares_two_sided(n_terms: int = 40) -> float:
    """``sum_{i in Z} 1 / (2i - 1)^2``; the two halves are equal."""
    return 2.0 * positive_sum(lambda k: 1.0 / (2 * k - 1) ** 2, n_terms)


def odd_inverse_cubes_partial(N: int) -> float:
    """``sum_{i=-N}^{N} 1 / (2i - 1)^3``; all but the ``i = -N`` term cancel in pairs."""
    return symmetric_partial_sum(lambda i: 1.0 / (2 * i - 1) ** 3, N)
