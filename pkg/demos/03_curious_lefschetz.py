# %% [markdown]
# # Curious hard Lefschetz cell by cell
#
# Each connected cell `(C*)^r x C^a` carries a skew form on its character
# lattice.  Wedging with the form must give isomorphisms between exterior
# powers placed symmetrically around the middle.

# %%
import numpy as np

from charvar.lefschetz import (GradedSkewModule, check_cell, exterior_wedge_operator, mh_closed_form,
                               mh_from_kernels, monodromic_filtration)
from charvar.strata import cell_census, parse_spec, weights_report

spec = parse_spec({"g": 1, "n": 2, "k": 2})
cells = cell_census(spec)
rep = weights_report(spec, cells)
print("dim =", rep.dim, " all middle weights equal:", rep.ok)
for c in cells:
    if c.connected and c.r1:
        print(c.r1, c.affine_dim, bool(check_cell(c.r1, c.omega_red, c.affine_dim)))
        print(np.array(c.omega_red))
        break

# %% [markdown]
# The mixed Hodge polynomial rebuilt from kernel dimensions of powers of the
# form matches the known answer for a torus times affine space.

# %%
M = GradedSkewModule(c.r1, c.omega_red, c.affine_dim)
print(sorted(mh_from_kernels(M).items()))
print(sorted(mh_closed_form(c.r1, c.affine_dim).items()))

# %% [markdown]
# The monodromic filtration of the wedge operator recovers the degree grading.

# %%
N, degrees = exterior_wedge_operator(np.array([[0, 2], [-2, 0]]))
F = monodromic_filtration(N)
print("degrees:", degrees, " graded dims:", F.graded_dims())
