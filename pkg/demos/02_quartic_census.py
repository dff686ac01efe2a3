# %% [markdown]
# # Four punctures on the sphere, rank two
#
# With four regular semisimple local monodromies in GL_2 the character
# variety is a smooth affine surface.  The stratification gives 8 strata
# and 7 connected cells.

# %%
from charvar.strata import (cell_census, cell_decomposition_summary, dim_charvar, e_polynomial_from_cells,
                            enumerate_strata, parse_spec, stratum_braid)

spec = parse_spec({"g": 0, "n": 2, "k": 4})
for s in enumerate_strata(spec):
    print([p.one_line for p in s.punct_perms], "->", stratum_braid(s, 2).letters)

# %%
cells = cell_census(spec)
for c in cells:
    flag = "" if c.connected else "  (disconnected, empty on the fiber)"
    print(f"stratum {c.stratum} walk {c.walk}: C^{c.affine_dim} x (C*)^{c.r1}{flag}")

# %%
print("decomposition (torus rank, affine rank) -> count:", cell_decomposition_summary(cells, 2))
print("E(q) =", e_polynomial_from_cells(cells, 2), " dim =", dim_charvar(spec))
