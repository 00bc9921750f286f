# # Counting quadrics through linear spaces
#
# Take three general P^5's in P^9. Each imposes
# C(7,2) = 21 conditions on the 55-dimensional space of quadratic forms, so
# a naive count predicts none survive. But any two of them meet in a line,
# and that changes the answer.

# %%
from quadrica import WeightVector, expected_dim_I2, generic_dim_I2, random_configuration
from quadrica.arrangement import intersection_dim

w = WeightVector(9, [5, 5, 5])
e = expected_dim_I2(w)
print(w, "case", e.label, "tau", e.tau, "v", e.v)
print("dim (I)_2 =", e.dim_I2)

# %% [markdown]
# The formula says exactly one quadric. Check it by sampling a random
# configuration over GF(2^31 - 1) and computing the kernel of the stacked
# pullback conditions.

# %%
rep = generic_dim_I2(w, trials=5, seed=0)
print("per-trial:", rep.per_trial_dims, "agree:", rep.agree)

c = random_configuration(w, seed=0)
A, B, C = c.spaces
print("pairwise intersections:", intersection_dim(A, B), intersection_dim(A, C), intersection_dim(B, C))

# %% [markdown]
# A few more vectors across the case split.

# %%
for n, ws in [(4, [3, 1]), (3, [2, 2]), (4, [1, 1]), (3, [1, 1, 1, 1]), (7, [4, 3, 3, 3]), (7, [4, 4, 4, 1])]:
    w = WeightVector(n, ws)
    e = expected_dim_I2(w)
    print(f"{str(w):22s} {e.label.value:9s} formula {e.dim_I2:2d}  oracle {generic_dim_I2(w).oracle_dim:2d}")
