# # Lines on a smooth quadric surface, counted by hand
#
# The lines on a smooth quadric in P^3 form two one-dimensional families.
# Over GF(7) each family is a copy of P^1, so there should be 2 * 8 lines.

# %%
import itertools

from quadrica import fano_dim

q = 7


def points(rows):
    for a, b in itertools.product(range(q), repeat=2):
        if a or b:
            yield [(a * x + b * y) % q for x, y in zip(*rows)]


def lines():
    # every 2-dim subspace of GF(7)^4 in reduced echelon form
    for p1, p2 in itertools.combinations(range(4), 2):
        free = [(r, c) for r, p in enumerate((p1, p2)) for c in range(p + 1, 4) if c not in (p1, p2)]
        for vals in itertools.product(range(q), repeat=len(free)):
            M = [[0] * 4, [0] * 4]
            M[0][p1] = M[1][p2] = 1
            for (r, c), v in zip(free, vals):
                M[r][c] = v
            yield M


on_quadric = [L for L in lines() if all((x[0] * x[3] - x[1] * x[2]) % q == 0 for x in points(L))]
print(len(on_quadric), "lines; fano_dim(1, 3) =", fano_dim(1, 3))

# %%
pts = lambda L: {tuple(x) for x in points(L)}
L0 = on_quadric[0]
same = [L for L in on_quadric if L is L0 or not pts(L) & pts(L0)]
print("ruling through L0:", len(same), " the other ruling:", len(on_quadric) - len(same))
