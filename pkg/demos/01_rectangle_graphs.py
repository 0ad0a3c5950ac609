# %% [markdown]
# # Empty rectangles in a point set
#
# Two points are adjacent when the axis-parallel rectangle they span has
# nothing inside it.  Here we build that graph for a random set and check
# the two linear relations between span counts and exposed quadrants.

# %%
import numpy as np

from emptyrect import rectangle_graph, verify_w_span
from emptyrect.geom import random_pointset

rng = np.random.default_rng(1)
X = random_pointset(12, rng)
G = rectangle_graph(X)
print("points:", X.points)
print("edges:", G.m)

# %% [markdown]
# span_k counts k-subsets that sit on the boundary of an empty rectangle.
# With n points,
#
#     span2 - span4 + exposed = 3(n - 1)
#     2 span2 - span3 + exposed = 4(n - 1)

# %%
r = verify_w_span(X)
print(f"span2={r.span2} span3={r.span3} span4={r.span4} exposed={r.exposed}")
print("first relation:", r.span2 - r.span4 + r.exposed, "==", 3 * (r.n - 1))
print("second relation:", 2 * r.span2 - r.span3 + r.exposed, "==", 4 * (r.n - 1))

# %% [markdown]
# `exposed` counts empty open quadrants over all points, minus the four
# that are always present at the extreme points.  The number of points
# having at least one empty quadrant can differ:

# %%
from pointsets_demo import chain

r = verify_w_span(chain(3))
print("3-chain: quadrant count", r.exposed, "exposed points", r.exposed_points)

# %% [markdown]
# Many sets at once, including sizes up to 40:

# %%
bad = 0
for _ in range(200):
    Y = random_pointset(int(rng.integers(1, 41)), rng)
    rep = verify_w_span(Y)
    bad += not (rep.identity1_holds and rep.identity2_holds)
print("sets failing a relation:", bad)
