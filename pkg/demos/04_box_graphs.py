# %% [markdown]
# # Empty boxes in three dimensions
#
# The 3D analogue joins two points when their bounding box is empty.  Sixteen
# points can be pairwise adjacent, seventeen cannot.

# %%
from emptyrect import box_graph
from emptyrect.boxgraph import box_stats, eight_partite_pointset, cross_part_edges
from emptyrect.realizer import clique_obstruction_17, k16_pointset

K = box_graph(k16_pointset())
print("16 points:", K.m, "edges, complete =", K.is_complete())

# %% [markdown]
# Why not 17?  Sort by x, take a monotone subsequence of 5 in y, and then a
# monotone subsequence of 3 in z.  The middle one of those three lies strictly
# inside the box of the outer two.

# %%
import numpy as np
from emptyrect.geom import random_pointset3

rng = np.random.default_rng(3)
Y = random_pointset3(30, rng)
A = sorted(rng.choice(30, 17, replace=False).tolist())
i, j, k = clique_obstruction_17(Y, A)
print("outer", Y[i], Y[k], "middle", Y[j])

# %% [markdown]
# Blowing up each of 8 parts to 3 points still keeps every cross-part pair
# adjacent, so the box graph has a quadratic number of edges.

# %%
Z = eight_partite_pointset(3)
G = box_graph(Z)
print("cross edges present:", all(G.has_edge(*e) for e in cross_part_edges(3)), G.m)
print(box_stats(Z).to_json())
