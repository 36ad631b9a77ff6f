"""Periodic orbits of the stepped well as binary necklaces over ``{L, R}``.

Each letter is one return trip across a half of the well. Between two
consecutive letters the orbit meets the step: equal letters mean a reflection,
different letters a transmission. Every letter carries one hard-wall bounce,
and a reflection from the right side (an ``RR`` adjacency) flips the sign too.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .model import DomainError

MAX_ENUMERATION_LENGTH = 24
ALPHABET = "LR"


class FamilySide(enum.Enum):
    LEFT = "LeftGroup"
    RIGHT = "RightGroup"


@dataclass(frozen=True)
class OrbitNecklace:
    word: str
    n_L: int
    n_R: int
    sigma: int
    tau: int
    chi: int
    fundamental: bool
    repeats: int = 1

    @property
    def length(self) -> int:
        return self.n_L + self.n_R

    def census_line(self) -> str:
        return (
            f"{self.word},{self.n_L},{self.n_R},{self.sigma},{self.tau},{self.chi},"
            f"{int(self.fundamental)}"
        )


def canonical_rotation(word: str) -> str:
    """Lexicographically least rotation (``L < R``)."""
    doubled = word + word
    n = len(word)
    return min(doubled[i : i + n] for i in range(n))


def _primitive_period(word: str) -> int:
    n = len(word)
    for p in range(1, n + 1):
        if n % p == 0 and word[:p] * (n // p) == word:
            return p
    return n


def classify(word: str) -> OrbitNecklace:
    if not word:
        raise DomainError("orbit word must be nonempty")
    bad = set(word) - set(ALPHABET)
    if bad:
        raise DomainError(f"invalid orbit symbols {sorted(bad)!r}; use 'L' and 'R'")
    return _classify_canonical(canonical_rotation(word))


def _classify_canonical(canon: str) -> OrbitNecklace:
    n = len(canon)
    sigma = rr = 0
    for i, c in enumerate(canon):
        nxt = canon[(i + 1) % n]
        if c == nxt:
            sigma += 1
            if c == "R":
                rr += 1
    n_L = canon.count("L")
    period = _primitive_period(canon)
    return OrbitNecklace(
        word=canon,
        n_L=n_L,
        n_R=n - n_L,
        sigma=sigma,
        tau=n - sigma,
        chi=n + rr,
        fundamental=period == n,
        repeats=n // period,
    )


def iter_necklaces(max_len: int, fundamental_only: bool = False,
                   cap: int = MAX_ENUMERATION_LENGTH) -> Iterator[OrbitNecklace]:
    """Necklaces of length ``1..max_len`` ordered by length, then lexicographically."""
    if max_len < 1:
        raise DomainError("max_len must be >= 1")
    if max_len > cap:
        raise DomainError(f"max_len {max_len} exceeds enumeration cap {cap}")
    for length in range(1, max_len + 1):
        for word in _fkm(length):
            orbit = _classify_canonical(word)
            if fundamental_only and not orbit.fundamental:
                continue
            yield orbit


def _fkm(n: int) -> Iterator[str]:
    a = [0] * (n + 1)

    def gen(t: int, p: int) -> Iterator[str]:
        if t > n:
            if n % p == 0:
                yield "".join(ALPHABET[x] for x in a[1:])
            return
        a[t] = a[t - p]
        yield from gen(t + 1, p)
        for j in range(a[t - p] + 1, 2):
            a[t] = j
            yield from gen(t + 1, t)

    yield from gen(1, 1)


def enumerate_necklaces(max_len: int, fundamental_only: bool = False,
                        cap: int = MAX_ENUMERATION_LENGTH) -> list[OrbitNecklace]:
    return list(iter_necklaces(max_len, fundamental_only, cap))


def necklace_count(length: int) -> int:
    """Number of binary necklaces of a given length (Burnside)."""
    return sum(_phi(d) * 2 ** (length // d) for d in _divisors(length)) // length


def lyndon_count(length: int) -> int:
    """Number of aperiodic binary necklaces of a given length (Moebius inversion)."""
    return sum(_mobius(d) * 2 ** (length // d) for d in _divisors(length)) // length


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def repeat(orbit: OrbitNecklace, nu: int) -> OrbitNecklace:
    return classify(orbit.word * nu)


def reduced_action_of_orbit(alpha_value: float, orbit: OrbitNecklace, s):
    """``(n_L + n_R) s + 2 alpha (n_L - n_R) / s``; ``s`` may be an array."""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr <= 0):
        raise DomainError("reduced action must be > 0")
    value = orbit.length * s_arr + 2.0 * alpha_value * (orbit.n_L - orbit.n_R) / s_arr
    return float(value) if np.ndim(value) == 0 else value


def amplitude(alpha_value: float, orbit: OrbitNecklace, s):
    """Orbit weight ``(-1)^chi r^sigma t^tau`` with ``r = 2 alpha / s^2``."""
    s_arr = np.asarray(s, dtype=float)
    if alpha_value < 0 or np.any(s_arr <= math.sqrt(2.0 * alpha_value)) or np.any(s_arr <= 0):
        raise DomainError("amplitude needs s > sqrt(2 alpha)")
    r = 2.0 * alpha_value / s_arr**2
    t_sq = (1.0 - r) * (1.0 + r)
    sign = -1.0 if orbit.chi % 2 else 1.0
    value = sign * r**orbit.sigma * t_sq ** (orbit.tau // 2)
    return float(value) if np.ndim(value) == 0 else value


def single_reflection_family(side: FamilySide, j: int) -> OrbitNecklace:
    """``(j-1) x LR + L`` for the left group, ``(j-1) x RL + R`` for the right."""
    if j < 1:
        raise DomainError("family index j must be >= 1")
    if side is FamilySide.LEFT:
        return classify("LR" * (j - 1) + "L")
    return classify("RL" * (j - 1) + "R")


def reflection_class(k: int, max_len: int, cap: int = MAX_ENUMERATION_LENGTH) -> list[tuple[OrbitNecklace, int]]:
    """Pairs ``(p, nu)`` of fundamental orbits and repetition counts with ``nu * sigma(p) = k``.

    Only total lengths ``nu * len(p) <= max_len`` are kept.
    """
    out = []
    for orbit in iter_necklaces(max_len, fundamental_only=True, cap=cap):
        for nu in range(1, max_len // orbit.length + 1):
            if nu * orbit.sigma == k:
                out.append((orbit, nu))
    return out


def census(orbits: list[OrbitNecklace]) -> str:
    return "".join(o.census_line() + "\n" for o in orbits)
