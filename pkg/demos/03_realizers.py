# %% [markdown]
# # Graphs from families of permutations
#
# A list of permutations realizes a graph G when, for every edge uv and every
# other vertex w, some permutation puts w above both u and v.  The largest
# graph a family realizes is computed by `graph_from_realizer`.

# %%
from emptyrect import graph_from_realizer, rectangle_graph
from emptyrect.realizer import pointset_to_double_arrow, Realizer, reverse, verify_realizer
from emptyrect.graph import Graph

R = Realizer(((0, 1, 2, 3), reverse((0, 1, 2, 3))))
print(graph_from_realizer(R).sorted_edges())
print(verify_realizer(Graph.complete(4), R))

# %% [markdown]
# Ordering a planar point set by x, by y and by both reversals gives four
# permutations.  Their graph is exactly the empty-rectangle graph.

# %%
import numpy as np
from emptyrect.geom import random_pointset

rng = np.random.default_rng(2)
X = random_pointset(15, rng)
R = pointset_to_double_arrow(X)
print(R.pattern, graph_from_realizer(R) == rectangle_graph(X))

# %% [markdown]
# Three permutations plus the reversal of the third ("single-arrow") give
# sparser graphs, with at most n^2/4 + 5n edges.

# %%
from emptyrect.realizer import single_arrow_bound, single_arrow_fact_violations, single_arrow_graph

n = 40
p = [tuple(rng.permutation(n).tolist()) for _ in range(3)]
G = single_arrow_graph(*p)
print(G.m, "<=", single_arrow_bound(n), "facts violated:", len(single_arrow_fact_violations(*p, G)))
