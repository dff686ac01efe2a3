# %% [markdown]
# # Walks on a braid and the cells they index
#
# A walk over a positive braid is a sequence of permutations that must go up
# in Bruhat order whenever it can, and otherwise may stay or go down.  Each
# walk labels a cell `C^U x (C*)^S`.

# %%
from charvar.coxeter import BraidWord
from charvar.fq_oracle import braid_variety_count
from charvar.walks import cell_shape, enumerate_walks, stay_graph_connected

for m in (2, 4, 6):
    b = BraidWord(2, (1,) * m)
    walks = list(enumerate_walks(b))
    print(f"sigma_1^{m}: {len(walks)} walks")
    for w in walks:
        sh = cell_shape(b, w)
        states = " ".join("".join(map(str, p.one_line)) for p in w.states)
        print(f"  {states:<22} up={sh.up} stay={sh.stay} connected={stay_graph_connected(sh)}")

# %% [markdown]
# Summing `q^|U| (q-1)^|S|` over walks counts points of the braid variety.
# Brute force over F_q agrees.

# %%
b = BraidWord(2, (1,) * 6)
for q in (2, 3, 4):
    from_walks = sum(q ** len(cell_shape(b, w).up) * (q - 1) ** len(cell_shape(b, w).stay)
                     for w in enumerate_walks(b))
    print(q, from_walks, braid_variety_count(b, q))
