# %% [markdown]
# # How many empty rectangles can n points have?
#
# At most floor(n^2/4) + n - 2.  Two increasing blocks, one north-west of
# the other, reach it.

# %%
from itertools import permutations

from emptyrect import extremal_pointset, max_edges_bound, rectangle_graph

for n in (4, 10, 30, 60):
    X = extremal_pointset(n)
    print(n, rectangle_graph(X).m, max_edges_bound(n))

# %% [markdown]
# For tiny n we can check that nothing does better by running through every
# order type (every permutation).

# %%
for n in range(2, 7):
    best = max(rectangle_graph([(i + 1, p[i]) for i in range(n)]).m
               for p in permutations(range(1, n + 1)))
    print(n, best, max_edges_bound(n))

# %% [markdown]
# A random set is far from extremal.  Its expected edge count is the sum of
# 2/(j - i + 1) over pairs i < j, which is also the expected number of
# comparisons made by randomized quicksort, so it grows like 2 n ln n.

# %%
from emptyrect import expected_edges_exact, monte_carlo_edges

mean, se = monte_carlo_edges(20, 20_000, seed=5)
exact = expected_edges_exact(20)
print(f"Monte Carlo {mean:.3f} +- {se:.3f}, exact {float(exact):.3f} ({exact})")
print("n = 3 exact:", expected_edges_exact(3))
