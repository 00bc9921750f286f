# # Quadratic forms as sums over families of linear forms
#
# Can every quadratic form in y0..y3 be written as f1(l1, l2) + f2(l3, l4)
# + f3(l5, l6), with each f_i a quadratic form in two fixed linear forms?
# The answer is the dual of counting quadrics through three lines in P^3.

# %%
import numpy as np

from quadrica import FormFamily, annihilator_configuration, decompose_quadric, dim_I2_exact, star_holds_d2

rng = np.random.default_rng(4)
fams = [FormFamily(3, rng.integers(-5, 6, size=(2, 4)).tolist()) for _ in range(3)]
print(star_holds_d2(fams, exact=True))
print("quadrics through the dual lines:", dim_I2_exact(annihilator_configuration(fams)))

# %% [markdown]
# Three lines in P^3 always lie on a quadric, so one dimension is missing.
# Add a fourth family and the span fills up; then any target decomposes.

# %%
fams.append(FormFamily(3, rng.integers(-5, 6, size=(2, 4)).tolist()))
print(star_holds_d2(fams, exact=True))

target = [1, 0, 0, 2, 3, 0, 0, 1, 0, -4]  # y0^2 + 2 y0 y3 + 3 y1^2 + y2^2 - 4 y3^2, monomials y_i y_j (i <= j) in lex order
wit = decompose_quadric(target, fams, exact=True)
for forms, G in zip(wit.forms, wit.grams):
    print(forms, [[str(x) for x in row] for row in G])
print("reconstructs:", list(wit.reconstruction) == target)
