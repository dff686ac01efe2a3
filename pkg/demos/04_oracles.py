# %% [markdown]
# # Independent checks of the E-polynomial
#
# Two oracles that share no code with the cell machinery: brute-force point
# counts over finite fields, and the Macdonald-polynomial generating function.

# %%
from charvar.fq_oracle import count_points, generic_eigenvalue_tuples
from charvar.hlv import hlv_prediction
from charvar.strata import e_polynomial, parse_spec

quartic = parse_spec({"g": 0, "n": 2, "k": 4})
E = e_polynomial(quartic)
print("E(q) =", E)
for q in (7, 11):
    spec = next(generic_eigenvalue_tuples(0, 2, 4, quartic.mult, q))
    print(f"F_{q}: eigenvalues {spec.eigen.values}, points {count_points(spec)}, E({q}) = {E(q)}")

# %%
W = hlv_prediction(0, 4, [(1, 1)] * 4)
print("W(q, t) =", W)
print("W(q, 1/q) =", W.specialize_t_inverse_q())

# %% [markdown]
# Genus one, one puncture: the two-variable polynomial is symmetric in q and t
# after removing q^(dim/2).

# %%
W1 = hlv_prediction(1, 1, [(1, 1)])
print(W1)
print(W1.shift(q2=-4).is_symmetric(), W1.specialize_t_inverse_q(), e_polynomial(parse_spec({"g": 1, "n": 2, "k": 1})))
