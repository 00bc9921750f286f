# # Projecting from the pairwise vertex
#
# When the biggest component meets the others, every quadric through the
# configuration is singular along the span of those intersections. So
# projecting away from that span should not change how many quadrics there
# are, only the ambient space.

# %%
from quadrica import WeightVector, dim_I2_exact, pairwise_vertex, project_from, random_configuration, tau_v

w = WeightVector(6, [4, 3, 1])
tau, v = tau_v(w)
c = random_configuration(w, seed=2)
V = pairwise_vertex(c, tau)
print(w, "tau", tau, "vertex dim", V.dim)

# %%
proj = project_from(c, V, seed=1)
print("before: P^%d dims %s  dim(I)_2 = %d" % (c.ambient_n, c.dims, dim_I2_exact(c)))
print("after:  P^%d dims %s  dim(I)_2 = %d" % (proj.ambient_n, proj.dims, dim_I2_exact(proj)))
