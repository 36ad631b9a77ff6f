# %% [markdown]
# # Periodic orbits as binary necklaces
#
# An orbit is a cyclic word over {L, R}. Equal neighbours are reflections at
# the step, unequal ones transmissions. The enumeration lists every rotation
# class once, represented by its least rotation.

# %%
from __future__ import annotations

from collections import Counter

from aisw.orbits import (
    FamilySide,
    census,
    enumerate_necklaces,
    lyndon_count,
    necklace_count,
    single_reflection_family,
)

orbits = enumerate_necklaces(10)
by_length = Counter(o.length for o in orbits)
primitive = Counter(o.length for o in orbits if o.fundamental)
print("length  necklaces  primitive  (counting formulas)")
for n in range(1, 11):
    print(f"{n:6d} {by_length[n]:10d} {primitive[n]:10d}   ({necklace_count(n)}, {lyndon_count(n)})")

# %% [markdown]
# Orbits reflecting exactly once come in two families, one per side of the
# step. Their lengths, transmission counts and sign exponents follow simple
# patterns in the family index j.

# %%
print("\n j  left word    len tau chi | right word   len tau chi")
for j in range(1, 7):
    lft = single_reflection_family(FamilySide.LEFT, j)
    rgt = single_reflection_family(FamilySide.RIGHT, j)
    print(f"{j:2d}  {lft.word:11s} {lft.length:4d} {lft.tau:3d} {lft.chi:3d} | "
          f"{rgt.word:11s} {rgt.length:4d} {rgt.tau:3d} {rgt.chi:3d}")

# %% [markdown]
# Reflection counts by length: only odd lengths carry single-reflection orbits.

# %%
sigma_table = Counter((o.length, o.sigma) for o in orbits if o.fundamental)
for n in range(1, 9):
    row = ", ".join(f"sigma={s}: {sigma_table[(n, s)]}" for s in range(n + 1) if sigma_table[(n, s)])
    print(f"length {n}: {row}")

# %%
print("\nword,n_L,n_R,sigma,tau,chi,fundamental")
print(census(enumerate_necklaces(4)), end="")
