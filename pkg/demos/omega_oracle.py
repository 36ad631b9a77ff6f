# %% [markdown]
# # The oscillatory correction omega_n: closed forms against quadrature
#
# omega_n collects the orbit sum integrated over the n-th action window. The
# closed forms for the single-reflection families are asymptotic in n; the
# oracle integrates every orbit's contribution numerically instead.

# %%
from __future__ import annotations

import math

from aisw.exact import exact_eigenvalue
from aisw.model import WellConfig
from aisw.orbits import FamilySide, classify, enumerate_necklaces
from aisw.trace import (
    QuadratureSpec,
    exact_omega,
    family_orbits,
    omega_newtonian_asymptotic,
    omega_quadrature_oracle,
    omega_single,
    omega_single_L,
    omega_single_R,
)

both = QuadratureSpec(family_orbits(FamilySide.LEFT, 40) + family_orbits(FamilySide.RIGHT, 40), nu_max=1)

# %% [markdown]
# Both families together, at alpha = 450. The exact omega comes from the
# exact eigenvalue through the action map.

# %%
config = WellConfig(a=3.0, V0=100.0, m=0.5)
print(" n   closed form      oracle        exact")
for n in (12, 16, 20, 30, 45, 60):
    oracle = omega_quadrature_oracle(config, n, both).omega
    exact = exact_omega(config, n, exact_eigenvalue(config, n).E)
    print(f"{n:2d}  {omega_single(450.0, n):12.6f} {oracle:12.6f} {exact:12.6f}")

# %% [markdown]
# Family by family. The Catalan-constant terms cancel in the sum, so only the
# per-family comparison sees their sign. For the left family it is negative:
# with the opposite sign the left and right closed forms swap and each lands
# on the other family's oracle.

# %%
for alpha_value, n in ((2.0, 50), (10.0, 20), (450.0, 20), (450.0, 60)):
    cfg = WellConfig.dimensionless(alpha_value)
    for side, closed in ((FamilySide.LEFT, omega_single_L), (FamilySide.RIGHT, omega_single_R)):
        spec = QuadratureSpec(family_orbits(side, 40), nu_max=1)
        oracle = omega_quadrature_oracle(cfg, n, spec).omega
        print(f"alpha={alpha_value:5g} n={n:3d} {side.value:10s} closed {closed(alpha_value, n): .4e}"
              f"  oracle {oracle: .4e}  ratio {oracle / closed(alpha_value, n):.4f}")

# %% [markdown]
# The Newtonian orbit LR and its repetitions. With 40 repetitions the oracle
# sits about 1.8% under the closed form; that is the truncated log 2 series.

# %%
partial = math.fsum((-1) ** (nu + 1) / nu for nu in range(1, 41)) / math.log(2)
for n in (50, 100):
    r = omega_quadrature_oracle(WellConfig.dimensionless(2.0), n, QuadratureSpec([classify("LR")], nu_max=40))
    asym = omega_newtonian_asymptotic(2.0, n)
    print(f"n={n}: oracle {r.omega:.4e}, closed {asym:.4e}, closed x truncation {asym * partial:.4e}")

# %% [markdown]
# Orbits with two reflections contribute far less, and fall off faster in n.

# %%
two = QuadratureSpec(enumerate_necklaces(14, fundamental_only=True), nu_max=2, class_filter=2)
for n in (20, 40, 80):
    w2 = omega_quadrature_oracle(WellConfig.dimensionless(10.0), n, two).omega
    print(f"n={n}: |omega_2| = {abs(w2):.3e}, |omega_1| = {abs(omega_single(10.0, n)):.3e}")
